use std::collections::HashSet;

use crate::vector::ensure_same_len;
use crate::{ChannelParams, Error, IntegerVector, Result};

/// A non-empty set of distinct reads, kept in arrival order.
///
/// The first read anchors the candidate ranges of the majority decoders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReadSet {
    reads: Vec<IntegerVector>,
    params: ChannelParams,
}

impl ReadSet {
    pub fn new(reads: Vec<IntegerVector>, params: ChannelParams) -> Result<Self> {
        if reads.is_empty() {
            return Err(Error::Precondition("read set is empty".into()));
        }
        let reference = vec![0; params.n()];
        let mut seen = HashSet::with_capacity(reads.len());
        for r in &reads {
            ensure_same_len(&reference, r)?;
            if !seen.insert(r) {
                return Err(Error::Precondition(format!("duplicate read {r}")));
            }
        }
        Ok(Self { reads, params })
    }

    pub fn reads(&self) -> &[IntegerVector] {
        &self.reads
    }

    pub fn into_reads(self) -> Vec<IntegerVector> {
        self.reads
    }

    pub fn params(&self) -> &ChannelParams {
        &self.params
    }

    pub fn len(&self) -> usize {
        self.reads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reads.is_empty()
    }

    pub fn first(&self) -> &IntegerVector {
        &self.reads[0]
    }

    pub fn componentwise_min(&self) -> IntegerVector {
        IntegerVector::componentwise_min(&self.reads).expect("read set is non-empty")
    }

    /// Whether every read lies in `center + B(n, t, k+, k−)`.
    pub fn all_within(&self, center: &IntegerVector) -> bool {
        self.reads.iter().all(|r| self.params.covers(center, r))
    }
}

/// Code distance `δ`, list exponent `a` and excess error count `f = t − δ + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ListParams {
    delta: usize,
    a: usize,
    f: usize,
}

impl ListParams {
    pub fn new(t: usize, delta: usize, a: usize) -> Result<Self> {
        if delta == 0 || delta > t {
            return Err(Error::Precondition(format!(
                "need 1 <= delta <= t, got delta={delta}, t={t}"
            )));
        }
        let f = t - delta + 1;
        if a >= f {
            return Err(Error::Precondition(format!("need a <= f - 1 = {}, got a={a}", f - 1)));
        }
        Ok(Self { delta, a, f })
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn f(&self) -> usize {
        self.f
    }
}
