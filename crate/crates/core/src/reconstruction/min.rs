use std::collections::BTreeSet;

use super::{ListParams, ReadSet};
use crate::combinatorics::BallIter;
use crate::{Code, Error, IntegerVector, Result};

fn require_asymmetric(reads: &ReadSet) -> Result<()> {
    if reads.params().k_minus() != 0 {
        return Err(Error::Precondition("min-based reconstruction needs k- = 0".into()));
    }
    Ok(())
}

/// Componentwise minimum of the reads, decoded at radius `δ − 1`.
///
/// The decoded word is returned only if every read lies in its error ball.
pub fn reconstruct_min<C: Code + ?Sized>(reads: &ReadSet, code: &C, delta: usize) -> Result<IntegerVector> {
    require_asymmetric(reads)?;
    if delta == 0 {
        return Err(Error::Precondition("delta must be at least 1".into()));
    }
    let z = reads.componentwise_min();
    let x = code
        .decode_within(&z, delta - 1, reads.params())
        .ok_or(Error::DecodeFailure { radius: delta - 1 })?;
    if !reads.all_within(&x) {
        return Err(Error::NoConsistentCodeword);
    }
    Ok(x)
}

/// `{D(u) : u ∈ z − B(n, a, k+, 0)}` for the componentwise minimum `z`.
/// Words that fail to decode are skipped.
pub fn list_reconstruct_min<C: Code + ?Sized>(
    reads: &ReadSet,
    code: &C,
    delta: usize,
    a: usize,
) -> Result<BTreeSet<IntegerVector>> {
    require_asymmetric(reads)?;
    let p = reads.params();
    ListParams::new(p.t(), delta, a)?;
    let z = reads.componentwise_min();
    let mut list = BTreeSet::new();
    for e in BallIter::new(&p.with_radius(a)) {
        let u = z.checked_sub(&e)?;
        if let Some(c) = code.decode_within(&u, delta - 1, p) {
            list.insert(c);
        }
    }
    Ok(list)
}
