use itertools::Itertools;
use num_rational::Ratio;

use super::ReadSet;
use crate::combinatorics::{binomial, check_cap, pow, volume, BallIter, DEFAULT_ENUMERATION_CAP};
use crate::{ChannelParams, Error, ExplicitCode, IntegerVector, Result};

/// A read set contained in the error ball of every codeword of `code`.
#[derive(Debug, Clone)]
pub struct AdversarialInstance {
    pub reads: ReadSet,
    pub code: ExplicitCode,
}

/// `n^a / ((e + a)^a · Σ_{i=0}^{e} C(e + a, i))`.
pub fn adversarial_code_size_bound(n: usize, e: usize, a: usize) -> Result<Ratio<u128>> {
    let w = (e + a) as u64;
    let mut sum = 0u128;
    for i in 0..=e as u64 {
        sum += binomial(w, i)?;
    }
    let denom = pow(w, a as u64)?
        .checked_mul(sum)
        .ok_or(Error::Overflow("code size bound"))?;
    Ok(Ratio::new(pow(n as u64, a as u64)?, denom))
}

/// Reads `Y` and a code `C` that corrects `e` errors with
/// `Y ⊆ ∩_{x∈C} (x + B(n, t, k+, k−))`.
///
/// `Y` is the `reads` lexicographically smallest members of
/// `{v ∈ [−k−, k+ − 1]ⁿ : wt(v) ≤ t − e − a}`. `C ⊆ {−1, 0}ⁿ` has constant
/// weight `e + a` and minimum Hamming distance `2e + 2`, built greedily over
/// supports in lexicographic order.
pub fn adversarial_instance(
    n: usize,
    t: usize,
    k_plus: u32,
    k_minus: u32,
    e: usize,
    a: usize,
    reads: u128,
) -> Result<AdversarialInstance> {
    let params = ChannelParams::new(n, t, k_plus, k_minus)?;
    if (k_plus, k_minus) == (1, 0) {
        return Err(Error::InvalidParams("(k+, k-) = (1, 0) is excluded".into()));
    }
    if n < 2 * e + a {
        return Err(Error::InvalidParams(format!("need n >= 2e + a, got n={n}")));
    }
    if t < e + a {
        return Err(Error::InvalidParams(format!("need t >= e + a, got t={t}")));
    }
    let budget = t - e - a;
    let span = u64::from(k_plus) + u64::from(k_minus);
    let available = volume(span, n as u64, budget as u64)?;
    if reads == 0 || reads > available {
        return Err(Error::InvalidParams(format!(
            "read count must lie in [1, {available}], got {reads}"
        )));
    }
    check_cap(reads, DEFAULT_ENUMERATION_CAP)?;
    let chosen: Vec<IntegerVector> = BallIter::with_range(n, budget, -i64::from(k_minus), i64::from(k_plus) - 1)
        .take(reads as usize)
        .collect();

    // Two weight-w words are 2e + 2 apart iff their supports share at most
    // w − e − 1 positions; with a = 0 no pair qualifies.
    let w = e + a;
    let max_overlap = a.checked_sub(1);
    let mut supports: Vec<Vec<usize>> = Vec::new();
    for s in (0..n).combinations(w) {
        let fits = supports
            .iter()
            .all(|b| max_overlap.is_some_and(|m| s.iter().filter(|i| b.contains(i)).count() <= m));
        if fits {
            supports.push(s);
        }
    }
    let words = supports.into_iter().map(|s| {
        let mut x = vec![0; n];
        for i in s {
            x[i] = -1;
        }
        IntegerVector::new(x)
    });
    Ok(AdversarialInstance {
        reads: ReadSet::new(chosen, params)?,
        code: ExplicitCode::new(words)?,
    })
}
