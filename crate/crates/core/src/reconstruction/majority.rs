use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_rational::Ratio;

use super::{ListParams, ReadSet};
use crate::combinatorics::{ball_size, check_cap, BallIter, DEFAULT_ENUMERATION_CAP};
use crate::{Code, Error, EstimateWord, IntegerVector, Result};

/// Per coordinate, the most frequent value `M` (smallest on ties), kept when
/// `2·count(M) − N > τ` and erased otherwise.
pub fn majority_estimate(reads: &ReadSet, tau: &Ratio<i128>) -> EstimateWord {
    let total = reads.len() as i128;
    let entries = (0..reads.params().n())
        .map(|i| {
            let mut counts: BTreeMap<i64, i128> = BTreeMap::new();
            for r in reads.reads() {
                *counts.entry(r[i]).or_default() += 1;
            }
            let (value, count) = counts
                .into_iter()
                .fold((0, 0), |best, (v, c)| if c > best.1 { (v, c) } else { best });
            (Ratio::from_integer(2 * count - total) > *tau).then_some(value)
        })
        .collect();
    EstimateWord::new(entries)
}

/// The candidate words `u` with `u[i] = z[i]` on kept coordinates and
/// `u[i] ∈ [y₁[i] − k+, y₁[i] + k−]` on erasures, in lexicographic order.
pub fn candidate_words(reads: &ReadSet, estimate: &EstimateWord) -> Result<Vec<IntegerVector>> {
    let p = reads.params();
    let y1 = reads.first();
    let erased = estimate.erasures();
    let width = p.alphabet();
    let count = u128::from(width)
        .checked_pow(erased.len() as u32)
        .ok_or(Error::Overflow("candidate count"))?;
    check_cap(count, DEFAULT_ENUMERATION_CAP)?;
    let (kp, km) = (i64::from(p.k_plus()), i64::from(p.k_minus()));
    let mut base: Vec<i64> = estimate.entries().iter().map(|e| e.unwrap_or_default()).collect();
    for &i in &erased {
        base[i] = y1[i].checked_sub(kp).ok_or(Error::Overflow("candidate range"))?;
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut cur = base.clone();
    for _ in 0..count {
        out.push(IntegerVector::new(cur.clone()));
        for &i in erased.iter().rev() {
            if cur[i] < y1[i] + km {
                cur[i] += 1;
                break;
            }
            cur[i] = base[i];
        }
    }
    Ok(out)
}

fn require_two_sided(reads: &ReadSet) -> Result<()> {
    if reads.params().k_minus() == 0 {
        return Err(Error::Precondition("majority reconstruction needs k- >= 1".into()));
    }
    Ok(())
}

/// Majority estimate, then the first candidate whose decoding at radius
/// `δ − 1` has an error ball containing every read.
pub fn reconstruct_majority<C: Code + ?Sized>(
    reads: &ReadSet,
    tau: &Ratio<i128>,
    code: &C,
    delta: usize,
) -> Result<IntegerVector> {
    require_two_sided(reads)?;
    if delta == 0 {
        return Err(Error::Precondition("delta must be at least 1".into()));
    }
    let p = reads.params();
    let z = majority_estimate(reads, tau);
    for u in candidate_words(reads, &z)? {
        if let Some(x) = code.decode_within(&u, delta - 1, p) {
            if reads.all_within(&x) {
                return Ok(x);
            }
        }
    }
    Err(Error::NoConsistentCodeword)
}

/// `{D(v) : v ∈ u − B(n, a, k+, k−), u a candidate word}`. Words that fail to
/// decode are skipped.
pub fn list_reconstruct_majority<C: Code + ?Sized>(
    reads: &ReadSet,
    tau: &Ratio<i128>,
    code: &C,
    delta: usize,
    a: usize,
) -> Result<BTreeSet<IntegerVector>> {
    require_two_sided(reads)?;
    let p = reads.params();
    ListParams::new(p.t(), delta, a)?;
    let z = majority_estimate(reads, tau);
    let candidates = candidate_words(reads, &z)?;
    let shifts = p.with_radius(a);
    let work = (candidates.len() as u128)
        .checked_mul(ball_size(&shifts)?)
        .ok_or(Error::Overflow("list candidate count"))?;
    check_cap(work, DEFAULT_ENUMERATION_CAP)?;
    let mut visited = HashSet::new();
    let mut list = BTreeSet::new();
    for u in &candidates {
        for e in BallIter::new(&shifts) {
            let v = u.checked_sub(&e)?;
            if !visited.insert(v.clone()) {
                continue;
            }
            if let Some(c) = code.decode_within(&v, delta - 1, p) {
                list.insert(c);
            }
        }
    }
    Ok(list)
}
