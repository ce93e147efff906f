//! Channel simulation and seeded reconstruction trials.
//!
//! Randomness comes from ChaCha8 (`rand_chacha`). Trial `i` of a run with
//! seed `s` draws from stream `i` of the generator seeded with `s`, so every
//! trial can be replayed in isolation.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Range;
use std::str::FromStr;
use std::time::Instant;

use itertools::{Combinations, Itertools};
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{ball_size, ball_unrank, binomial, check_cap, enumerate_ball, BallIter};
use crate::reconstruction::{
    list_params_general, list_reconstruct_majority, list_reconstruct_min, list_reconstruct_sauer, majority_threshold,
    reconstruct_majority, reconstruct_min, ReadSet,
};
use crate::{vector_add, ChannelParams, Code, Error, IntegerVector, Result};

/// Name recorded in every trial record.
pub const RNG_NAME: &str = "chacha8";

/// `x + e` with `e` uniform over `B(n, t, k+, k−)`.
pub fn corrupt<R: Rng + ?Sized>(x: &IntegerVector, p: &ChannelParams, rng: &mut R) -> Result<IntegerVector> {
    p.check_vector(x)?;
    let index = rng.gen_range(0..ball_size(p)?);
    vector_add(x, &ball_unrank(p, index)?)
}

/// `count` distinct reads of `x`, uniform without replacement over the ball,
/// in sampling order.
pub fn random_reads<R: Rng + ?Sized>(
    x: &IntegerVector,
    p: &ChannelParams,
    count: usize,
    rng: &mut R,
) -> Result<ReadSet> {
    p.check_vector(x)?;
    let size = ball_size(p)?;
    check_count(count, size)?;
    let length = usize::try_from(size).map_err(|_| Error::Overflow("ball size"))?;
    let reads = rand::seq::index::sample(rng, length, count)
        .into_iter()
        .map(|i| vector_add(x, &ball_unrank(p, i as u128)?))
        .collect::<Result<Vec<_>>>()?;
    ReadSet::new(reads, *p)
}

/// The first `count` reads of `x` when errors are ordered by weight
/// (descending), then `Σ|e[i]|` (descending), then lexicographically.
pub fn adversarial_reads(x: &IntegerVector, p: &ChannelParams, count: usize, cap: u128) -> Result<ReadSet> {
    p.check_vector(x)?;
    check_count(count, ball_size(p)?)?;
    let mut errors = enumerate_ball(p, cap)?;
    errors.sort_by_key(|e| {
        let magnitude: i64 = e.iter().map(|v| v.abs()).sum();
        (std::cmp::Reverse(e.weight()), std::cmp::Reverse(magnitude))
    });
    let reads = errors
        .into_iter()
        .take(count)
        .map(|e| vector_add(x, &e))
        .collect::<Result<Vec<_>>>()?;
    ReadSet::new(reads, *p)
}

fn check_count(count: usize, size: u128) -> Result<()> {
    if count == 0 || count as u128 > size {
        return Err(Error::Precondition(format!(
            "read count must lie in [1, {size}], got {count}"
        )));
    }
    Ok(())
}

/// Every `count`-subset of `x + B`, as read sets in lexicographic order of
/// the ball indices.
#[derive(Debug, Clone)]
pub struct SubsetReads {
    pool: Vec<IntegerVector>,
    combos: Combinations<Range<usize>>,
    params: ChannelParams,
}

impl Iterator for SubsetReads {
    type Item = ReadSet;

    fn next(&mut self) -> Option<ReadSet> {
        let idx = self.combos.next()?;
        let reads = idx.into_iter().map(|i| self.pool[i].clone()).collect();
        Some(ReadSet::new(reads, self.params).expect("ball members are distinct"))
    }
}

/// Number of `count`-subsets of the ball, and an iterator over them if it is
/// within `cap`.
pub fn exhaustive_reads(x: &IntegerVector, p: &ChannelParams, count: usize, cap: u128) -> Result<SubsetReads> {
    p.check_vector(x)?;
    let size = ball_size(p)?;
    check_count(count, size)?;
    check_cap(subset_count(p, count)?, cap)?;
    let pool = BallIter::new(p)
        .map(|e| vector_add(x, &e))
        .collect::<Result<Vec<_>>>()?;
    let n = pool.len();
    Ok(SubsetReads {
        pool,
        combos: (0..n).combinations(count),
        params: *p,
    })
}

/// `C(|B|, count)`.
pub fn subset_count(p: &ChannelParams, count: usize) -> Result<u128> {
    let size = u64::try_from(ball_size(p)?).map_err(|_| Error::Overflow("ball size"))?;
    binomial(size, count as u64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReadGenMode {
    Random,
    Exhaustive,
    Adversarial,
}

impl FromStr for ReadGenMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "random" => Ok(Self::Random),
            "exhaustive" => Ok(Self::Exhaustive),
            "adversarial" => Ok(Self::Adversarial),
            _ => Err(Error::Parse(format!("unknown read mode '{s}'"))),
        }
    }
}

impl fmt::Display for ReadGenMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Random => "random",
            Self::Exhaustive => "exhaustive",
            Self::Adversarial => "adversarial",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReadGenSpec {
    pub mode: ReadGenMode,
    pub count: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    Min,
    Majority,
    ListMin,
    ListMajority,
    Sauer,
}

impl Algorithm {
    pub fn is_list(&self) -> bool {
        matches!(self, Self::ListMin | Self::ListMajority | Self::Sauer)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Min => "min",
            Self::Majority => "majority",
            Self::ListMin => "list-min",
            Self::ListMajority => "list-majority",
            Self::Sauer => "sauer",
        }
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min" => Ok(Self::Min),
            "majority" => Ok(Self::Majority),
            "list-min" => Ok(Self::ListMin),
            "list-majority" => Ok(Self::ListMajority),
            "sauer" => Ok(Self::Sauer),
            _ => Err(Error::Parse(format!("unknown algorithm '{s}'"))),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Decoder choice plus the code parameters it needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrialSetup {
    pub algorithm: Algorithm,
    pub delta: usize,
    /// List exponent; ignored by the unique decoders.
    pub a: usize,
}

impl TrialSetup {
    /// The majority threshold this setup uses, if any.
    pub fn threshold(&self, p: &ChannelParams) -> Result<Option<Ratio<i128>>> {
        let (n, t, kp, km) = (p.n(), p.t(), p.k_plus(), p.k_minus());
        Ok(match self.algorithm {
            Algorithm::Majority => Some(majority_threshold(n, t, kp, km, self.delta)?.tau),
            Algorithm::ListMajority => Some(list_params_general(n, t, kp, km, self.delta, self.a)?.tau),
            _ => None,
        })
    }
}

/// What a decoder returned on one read set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TrialOutput {
    Word(IntegerVector),
    List(BTreeSet<IntegerVector>),
    /// The decoder reported that no consistent codeword could be found.
    Failed(Error),
}

/// Runs the decoder on `reads` and compares with `x`: list decoders succeed
/// when `x` is in the list.
///
/// Decoder failures ([`Error::DecodeFailure`], [`Error::NoConsistentCodeword`],
/// [`Error::NoWitness`]) become an unsuccessful output. Other errors propagate.
pub fn run_trial<C: Code + ?Sized>(
    code: &C,
    setup: &TrialSetup,
    x: &IntegerVector,
    reads: &ReadSet,
) -> Result<(bool, TrialOutput)> {
    let p = reads.params();
    let tau = setup.threshold(p)?;
    let (delta, a) = (setup.delta, setup.a);
    let result = match setup.algorithm {
        Algorithm::Min => reconstruct_min(reads, code, delta).map(TrialOutput::Word),
        Algorithm::Majority => {
            reconstruct_majority(reads, tau.as_ref().expect("threshold"), code, delta).map(TrialOutput::Word)
        }
        Algorithm::ListMin => list_reconstruct_min(reads, code, delta, a).map(TrialOutput::List),
        Algorithm::ListMajority => {
            list_reconstruct_majority(reads, tau.as_ref().expect("threshold"), code, delta, a).map(TrialOutput::List)
        }
        Algorithm::Sauer => list_reconstruct_sauer(reads, code, delta, a).map(TrialOutput::List),
    };
    let output = match result {
        Ok(out) => out,
        Err(e @ (Error::DecodeFailure { .. } | Error::NoConsistentCodeword | Error::NoWitness { .. })) => {
            TrialOutput::Failed(e)
        }
        Err(e) => return Err(e),
    };
    let success = match &output {
        TrialOutput::Word(w) => w == x,
        TrialOutput::List(l) => l.contains(x),
        TrialOutput::Failed(_) => false,
    };
    Ok((success, output))
}

/// One line of trial output. Field order is the serialization order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub rng: String,
    pub seed: u64,
    pub trial: u64,
    pub params: ChannelParams,
    pub algorithm: Algorithm,
    pub mode: ReadGenMode,
    pub delta: usize,
    pub a: Option<usize>,
    #[serde(rename = "N")]
    pub reads: usize,
    /// Majority threshold as `p/q`.
    pub tau: Option<String>,
    pub success: bool,
    pub list_size: Option<usize>,
    /// Zero unless timing was requested, so that records stay reproducible.
    pub elapsed_ns: u64,
}

impl TrialRecord {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("trial records serialize")
    }
}

fn ratio_text(r: &Ratio<i128>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Runs trials for one transmitted word.
///
/// * random: `trials` independent read sets, trial `i` on stream `i`;
/// * exhaustive: one trial per read subset, up to `cap` subsets;
/// * adversarial: a single deterministic read set.
#[allow(clippy::too_many_arguments)]
pub fn run_trials<C: Code + ?Sized>(
    code: &C,
    setup: &TrialSetup,
    x: &IntegerVector,
    p: &ChannelParams,
    spec: &ReadGenSpec,
    trials: u64,
    cap: u128,
    timing: bool,
) -> Result<Vec<TrialRecord>> {
    let tau = setup.threshold(p)?.as_ref().map(ratio_text);
    let template = TrialRecord {
        rng: RNG_NAME.to_string(),
        seed: spec.seed,
        trial: 0,
        params: *p,
        algorithm: setup.algorithm,
        mode: spec.mode,
        delta: setup.delta,
        a: setup.algorithm.is_list().then_some(setup.a),
        reads: spec.count,
        tau,
        success: false,
        list_size: None,
        elapsed_ns: 0,
    };
    let record = |trial: u64, reads: &ReadSet| -> Result<TrialRecord> {
        let start = Instant::now();
        let (success, output) = run_trial(code, setup, x, reads)?;
        let elapsed = if timing { start.elapsed().as_nanos() as u64 } else { 0 };
        Ok(TrialRecord {
            trial,
            success,
            list_size: match &output {
                TrialOutput::List(l) => Some(l.len()),
                _ => None,
            },
            elapsed_ns: elapsed,
            ..template.clone()
        })
    };
    match spec.mode {
        ReadGenMode::Random => (0..trials)
            .map(|i| {
                let mut rng = trial_rng(spec.seed, i);
                let reads = random_reads(x, p, spec.count, &mut rng)?;
                record(i, &reads)
            })
            .collect(),
        ReadGenMode::Exhaustive => exhaustive_reads(x, p, spec.count, cap)?
            .enumerate()
            .map(|(i, reads)| record(i as u64, &reads))
            .collect(),
        ReadGenMode::Adversarial => {
            let reads = adversarial_reads(x, p, spec.count, cap)?;
            Ok(vec![record(0, &reads)?])
        }
    }
}

/// The generator for trial `trial` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}
