//! Loading `--code` arguments.

use std::fs;
use std::path::Path;

use lmrecon::distances::code_min_distance;
use lmrecon::lattice::{lattice_min_distance, LatticeCode, SplitterSpec};
use lmrecon::tandem::SimplexCode;
use lmrecon::textfmt::{parse_explicit_code, parse_simplex_code, CodeSpec};
use lmrecon::{Code, Error, ExplicitCode, IntegerVector, WholeSpace};

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

/// A code argument before the length is fixed; `sum-mod` adapts to any `n`.
#[derive(Debug, Clone)]
pub enum CodeSource {
    Whole,
    SumMod(u64),
    Splitter(SplitterSpec),
    Explicit(ExplicitCode),
}

impl CodeSource {
    /// `None` means the whole space `Zⁿ`.
    pub fn load(arg: Option<&str>) -> Result<Self, String> {
        let Some(arg) = arg else {
            return Ok(Self::Whole);
        };
        match arg.parse::<CodeSpec>().map_err(|e| e.to_string())? {
            CodeSpec::SumMod(m) => Ok(Self::SumMod(m)),
            CodeSpec::Splitter(s) => Ok(Self::Splitter(s)),
            CodeSpec::Explicit(path) => {
                let code = parse_explicit_code(&read(&path)?).map_err(|e| format!("{}: {e}", path.display()))?;
                Ok(Self::Explicit(code))
            }
            CodeSpec::Simplex(_) => Err("simplex codes are only accepted by the tandem command".into()),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Self::Whole => "whole".into(),
            Self::SumMod(m) => format!("sum-mod:{m}"),
            Self::Splitter(s) => format!("splitter:{s}"),
            Self::Explicit(c) => format!("explicit({} words)", c.len()),
        }
    }

    /// The code at length `n`, or the reason it has no such instance.
    pub fn instantiate(&self, n: usize) -> Result<Instance, String> {
        match self {
            Self::Whole => Ok(Instance::Whole(WholeSpace::new(n))),
            Self::SumMod(m) => SplitterSpec::all_ones(n, *m)
                .map(|s| Instance::Lattice(LatticeCode::new(s)))
                .map_err(|e| e.to_string()),
            Self::Splitter(s) if s.n() == n => Ok(Instance::Lattice(LatticeCode::new(s.clone()))),
            Self::Explicit(c) if c.length() == n => Ok(Instance::Explicit(c.clone())),
            Self::Splitter(s) => Err(format!("code length {} differs from n", s.n())),
            Self::Explicit(c) => Err(format!("code length {} differs from n", c.length())),
        }
    }
}

pub enum Instance {
    Whole(WholeSpace),
    Lattice(LatticeCode),
    Explicit(ExplicitCode),
}

impl Instance {
    pub fn code(&self) -> &dyn Code {
        match self {
            Self::Whole(c) => c,
            Self::Lattice(c) => c,
            Self::Explicit(c) => c,
        }
    }

    /// Minimum `d_{k+,k−}`; a single-word code counts as `n + 1`.
    pub fn distance(&self, k_plus: u32, k_minus: u32, cap: u128) -> Result<usize, Error> {
        match self {
            Self::Whole(_) => Ok(1),
            Self::Lattice(c) => lattice_min_distance(c.spec(), k_plus, k_minus, cap),
            Self::Explicit(c) => match code_min_distance(&c.to_vec(), k_plus, k_minus) {
                Err(Error::TooFewCodewords) => Ok(c.length() + 1),
                other => other,
            },
        }
    }

    /// The zero vector, or the smallest word of an explicit code.
    pub fn default_word(&self) -> IntegerVector {
        match self {
            Self::Explicit(c) => c.members().iter().next().cloned().expect("codes are non-empty"),
            other => IntegerVector::zeros(other.code().length()),
        }
    }
}

pub fn load_simplex(arg: &str) -> Result<SimplexCode, String> {
    match arg.parse::<CodeSpec>().map_err(|e| e.to_string())? {
        CodeSpec::Simplex(path) => parse_simplex_code(&read(&path)?).map_err(|e| format!("{}: {e}", path.display())),
        _ => Err("the tandem command needs a simplex:@file code".into()),
    }
}
