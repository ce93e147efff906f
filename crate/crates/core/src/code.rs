//! The code interface and explicit finite codes.

use std::collections::BTreeSet;

use crate::combinatorics::BallIter;
use crate::distances::code_min_distance;
use crate::{ChannelParams, Error, IntegerVector, Result};

/// A code in `Zⁿ`: a membership test plus a bounded-radius unique decoder.
pub trait Code {
    /// Codeword length `n`.
    fn length(&self) -> usize;

    fn contains(&self, v: &IntegerVector) -> bool;

    /// A codeword `c` with `z ∈ c + B(n, radius, k+, k−)`, if one exists.
    ///
    /// The default scans `z − e` for `e` in lexicographic order of the error
    /// ball and returns the first member, so ties resolve deterministically.
    fn decode_within(&self, z: &IntegerVector, radius: usize, params: &ChannelParams) -> Option<IntegerVector> {
        ball_search(z, radius, params, |v| self.contains(v))
    }

    /// Minimum `d_{k+,k−}` distance, when the code can compute it.
    fn min_distance(&self, _k_plus: u32, _k_minus: u32) -> Option<usize> {
        None
    }
}

/// First `z − e` (lexicographic `e ∈ B(n, radius, k+, k−)`) accepted by `member`.
pub fn ball_search<F>(z: &IntegerVector, radius: usize, params: &ChannelParams, mut member: F) -> Option<IntegerVector>
where
    F: FnMut(&IntegerVector) -> bool,
{
    if z.len() != params.n() {
        return None;
    }
    let ball = params.with_radius(radius);
    for e in BallIter::new(&ball) {
        let Ok(candidate) = z.checked_sub(&e) else {
            continue;
        };
        if member(&candidate) {
            return Some(candidate);
        }
    }
    None
}

/// A finite set of codewords.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitCode {
    n: usize,
    members: BTreeSet<IntegerVector>,
}

impl ExplicitCode {
    pub fn new<I>(members: I) -> Result<Self>
    where
        I: IntoIterator<Item = IntegerVector>,
    {
        let members: BTreeSet<_> = members.into_iter().collect();
        let n = members
            .first()
            .map(|v| v.len())
            .ok_or_else(|| Error::Precondition("code has no codewords".into()))?;
        if let Some(bad) = members.iter().find(|v| v.len() != n) {
            return Err(Error::LengthMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        if n == 0 {
            return Err(Error::Precondition("codewords must have positive length".into()));
        }
        Ok(Self { n, members })
    }

    pub fn members(&self) -> &BTreeSet<IntegerVector> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn to_vec(&self) -> Vec<IntegerVector> {
        self.members.iter().cloned().collect()
    }
}

impl Code for ExplicitCode {
    fn length(&self) -> usize {
        self.n
    }

    fn contains(&self, v: &IntegerVector) -> bool {
        self.members.contains(v)
    }

    fn min_distance(&self, k_plus: u32, k_minus: u32) -> Option<usize> {
        code_min_distance(&self.to_vec(), k_plus, k_minus).ok()
    }
}

/// All of `Zⁿ`. Every word decodes to itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WholeSpace {
    n: usize,
}

impl WholeSpace {
    pub fn new(n: usize) -> Self {
        Self { n }
    }
}

impl Code for WholeSpace {
    fn length(&self) -> usize {
        self.n
    }

    fn contains(&self, v: &IntegerVector) -> bool {
        v.len() == self.n
    }

    fn decode_within(&self, z: &IntegerVector, _radius: usize, params: &ChannelParams) -> Option<IntegerVector> {
        (z.len() == self.n && params.n() == self.n).then(|| z.clone())
    }

    fn min_distance(&self, _k_plus: u32, _k_minus: u32) -> Option<usize> {
        (self.n > 0).then_some(1)
    }
}

/// Decodes `z` against an explicit codeword set by scanning `z − B(n, radius, k+, k−)`
/// in lexicographic order of the error vectors.
pub fn brute_force_decode(
    code: &BTreeSet<IntegerVector>,
    z: &IntegerVector,
    radius: usize,
    params: &ChannelParams,
) -> Option<IntegerVector> {
    ball_search(z, radius, params, |v| code.contains(v))
}
