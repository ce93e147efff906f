//! Text formats for splitters, vectors and code files.
//!
//! Splitter strings look like `group=Z4xZ3; s=[(1,0),(0,2),(1,1)]`; over a
//! single cyclic group the elements may be plain integers, as in
//! `group=Z9; s=[1,2]`.
//!
//! Code files hold one codeword per line as comma-separated integers. Blank
//! lines and anything after `#` are ignored. Simplex code files additionally
//! start with a header line `m=<m>,r=<r>,delta=<δ>`.

use std::path::PathBuf;
use std::str::FromStr;

use crate::lattice::{FiniteAbelianGroup, SplitterSpec};
use crate::tandem::{SimplexCode, SimplexVector};
use crate::{Error, ExplicitCode, IntegerVector, Result};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn parse_int<T: FromStr>(s: &str) -> Result<T> {
    let s = s.trim();
    s.parse().map_err(|_| parse_err(format!("invalid integer '{s}'")))
}

/// Comma-separated integers, optionally wrapped in parentheses.
pub fn parse_vector(s: &str) -> Result<IntegerVector> {
    let s = s.trim();
    let s = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(s);
    if s.trim().is_empty() {
        return Err(parse_err("empty vector"));
    }
    s.split(',')
        .map(parse_int)
        .collect::<Result<Vec<i64>>>()
        .map(IntegerVector::new)
}

pub fn format_vector(v: &IntegerVector) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Splits `[a, (b, c), d]`-style lists on top-level commas.
fn split_elements(list: &str) -> Result<Vec<&str>> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0usize, 0usize);
    for (i, ch) in list.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.checked_sub(1).ok_or_else(|| parse_err("unbalanced ')'"))?,
            ',' if depth == 0 => {
                out.push(list[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(parse_err("unbalanced '('"));
    }
    let last = list[start..].trim();
    if !last.is_empty() || !out.is_empty() {
        out.push(last);
    }
    if out.iter().any(|e| e.is_empty()) {
        return Err(parse_err("empty splitter element"));
    }
    Ok(out)
}

impl FromStr for SplitterSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut group = None;
        let mut elements = None;
        for part in s.split(';') {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| parse_err(format!("expected key=value, got '{}'", part.trim())))?;
            match key.trim() {
                "group" => {
                    let moduli = value
                        .split('x')
                        .map(|z| {
                            let z = z.trim();
                            z.strip_prefix('Z')
                                .ok_or_else(|| parse_err(format!("expected Z<m>, got '{z}'")))
                                .and_then(parse_int::<u64>)
                        })
                        .collect::<Result<Vec<_>>>()?;
                    group = Some(FiniteAbelianGroup::new(moduli)?);
                }
                "s" => {
                    let v = value.trim();
                    let inner = v
                        .strip_prefix('[')
                        .and_then(|r| r.strip_suffix(']'))
                        .ok_or_else(|| parse_err("splitter must be written [ ... ]"))?;
                    elements = Some(inner.to_string());
                }
                other => return Err(parse_err(format!("unknown key '{other}'"))),
            }
        }
        let group = group.ok_or_else(|| parse_err("missing group="))?;
        let elements = elements.ok_or_else(|| parse_err("missing s="))?;
        let s = split_elements(&elements)?
            .into_iter()
            .map(|e| {
                let residues = parse_vector(e)?;
                if !e.starts_with('(') && group.moduli().len() != 1 {
                    return Err(parse_err(format!(
                        "element '{e}' needs a tuple over a group with {} factors",
                        group.moduli().len()
                    )));
                }
                group.element(residues.entries())
            })
            .collect::<Result<Vec<_>>>()?;
        SplitterSpec::new(group, s)
    }
}

/// Lines with their comments stripped, skipping blank ones.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn with_line<T>(line: usize, r: Result<T>) -> Result<T> {
    r.map_err(|e| parse_err(format!("line {line}: {e}")))
}

pub fn parse_explicit_code(text: &str) -> Result<ExplicitCode> {
    let words = content_lines(text)
        .map(|(i, line)| with_line(i, parse_vector(line)))
        .collect::<Result<Vec<_>>>()?;
    ExplicitCode::new(words)
}

pub fn format_explicit_code(code: &ExplicitCode) -> String {
    code.members().iter().map(|w| format_vector(w) + "\n").collect()
}

pub fn parse_simplex_vector(s: &str) -> Result<SimplexVector> {
    let v = parse_vector(s)?;
    let entries = v
        .iter()
        .map(|&x| u64::try_from(x).map_err(|_| parse_err(format!("negative entry {x}"))))
        .collect::<Result<Vec<_>>>()?;
    SimplexVector::new(entries)
}

pub fn parse_simplex_code(text: &str) -> Result<SimplexCode> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| parse_err("missing m=,r=,delta= header"))?;
    let (mut m, mut r, mut delta) = (None, None, None);
    for field in header.split(',') {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| parse_err(format!("line {hl}: expected key=value, got '{field}'")))?;
        match key.trim() {
            "m" => m = Some(with_line(hl, parse_int::<usize>(value))?),
            "r" => r = Some(with_line(hl, parse_int::<u64>(value))?),
            "delta" => delta = Some(with_line(hl, parse_int::<usize>(value))?),
            other => return Err(parse_err(format!("line {hl}: unknown header key '{other}'"))),
        }
    }
    let missing = |k: &str| parse_err(format!("line {hl}: header lacks {k}="));
    let (m, r, delta) = (
        m.ok_or_else(|| missing("m"))?,
        r.ok_or_else(|| missing("r"))?,
        delta.ok_or_else(|| missing("delta"))?,
    );
    let words = lines
        .map(|(i, line)| with_line(i, parse_simplex_vector(line)))
        .collect::<Result<Vec<_>>>()?;
    SimplexCode::new(m, r, delta, words)
}

pub fn format_simplex_code(code: &SimplexCode) -> String {
    let mut out = format!("m={},r={},delta={}\n", code.m(), code.r(), code.delta());
    for w in code.words() {
        let line: Vec<String> = w.entries().iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

/// The `--code` argument: `sum-mod:M`, `splitter:<spec>`, `explicit:@file`
/// or `simplex:@file`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeSpec {
    SumMod(u64),
    Splitter(SplitterSpec),
    Explicit(PathBuf),
    Simplex(PathBuf),
}

impl FromStr for CodeSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| parse_err(format!("code spec '{s}' lacks a kind prefix")))?;
        let file = |rest: &str| {
            rest.strip_prefix('@')
                .map(PathBuf::from)
                .ok_or_else(|| parse_err(format!("expected @file after '{kind}:'")))
        };
        match kind {
            "sum-mod" => Ok(Self::SumMod(parse_int(rest)?)),
            "splitter" => Ok(Self::Splitter(rest.parse()?)),
            "explicit" => Ok(Self::Explicit(file(rest)?)),
            "simplex" => Ok(Self::Simplex(file(rest)?)),
            _ => Err(parse_err(format!("unknown code kind '{kind}'"))),
        }
    }
}
