use std::collections::{BTreeSet, HashSet};

use itertools::Itertools;

use super::{ListParams, ReadSet};
use crate::combinatorics::{ball_size, check_cap, BallIter, DEFAULT_ENUMERATION_CAP};
use crate::{Code, Error, IntegerVector, Result};

/// Whether every pattern in `[0, q−1]^c` is avoided, in all `c` positions, by
/// some projection.
fn every_pattern_avoided(projections: &[Vec<i64>], q: i64, c: usize) -> bool {
    let mut pattern = vec![0i64; c];
    loop {
        let avoided = projections.iter().any(|p| p.iter().zip(&pattern).all(|(a, b)| a != b));
        if !avoided {
            return false;
        }
        let mut i = c;
        loop {
            if i == 0 {
                return true;
            }
            i -= 1;
            if pattern[i] + 1 < q {
                pattern[i] += 1;
                break;
            }
            pattern[i] = 0;
        }
    }
}

/// The first `c`-subset `U` of coordinates (0-based, lexicographic) such that
/// every pattern on `U` differs in every position from some member of `S`.
///
/// The q-ary Sauer–Shelah lemma guarantees one when `|S| > V_q(n, c − 1)`;
/// that bound is not checked, and [`Error::NoWitness`] reports a failed scan.
pub fn sauer_shelah_find(set: &[IntegerVector], q: u64, c: usize) -> Result<Vec<usize>> {
    let n = set.first().map_or(0, |v| v.len());
    if set.iter().any(|v| v.len() != n) {
        return Err(Error::Precondition("vectors differ in length".into()));
    }
    if c > n && !set.is_empty() {
        return Err(Error::Precondition(format!("subset size {c} exceeds length {n}")));
    }
    let q = i64::try_from(q).map_err(|_| Error::Overflow("alphabet"))?;
    if set.iter().flat_map(|v| v.iter()).any(|&x| x < 0 || x >= q) {
        return Err(Error::Precondition(format!("entries must lie in [0, {}]", q - 1)));
    }
    for subset in (0..n).combinations(c) {
        let projections: Vec<Vec<i64>> = set
            .iter()
            .map(|v| subset.iter().map(|&i| v[i]).collect())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if every_pattern_avoided(&projections, q, c) {
            return Ok(subset);
        }
    }
    Err(Error::NoWitness { size: c })
}

/// List decoding from few reads through a Sauer–Shelah coordinate set.
///
/// Reads are shifted into `[0, k+ + k−]` per coordinate using the ranges
/// `[min(m_i, M_i − k+), max(M_i, m_i + k−)]`, a set `U` of `f − a` coordinates
/// is found, one read per distinct restriction to `U` is kept, and every
/// `z ∈ y′ − B(n, f, k+, k−)` that differs from `y′` on all of `U` is decoded
/// at radius `δ − 1`. Words that fail to decode are skipped.
pub fn list_reconstruct_sauer<C: Code + ?Sized>(
    reads: &ReadSet,
    code: &C,
    delta: usize,
    a: usize,
) -> Result<BTreeSet<IntegerVector>> {
    let p = reads.params();
    let lp = ListParams::new(p.t(), delta, a)?;
    let (kp, km) = (i64::from(p.k_plus()), i64::from(p.k_minus()));
    let n = p.n();
    let lows: Vec<i64> = (0..n)
        .map(|i| {
            let lo = reads.reads().iter().map(|r| r[i]).min().unwrap_or_default();
            let hi = reads.reads().iter().map(|r| r[i]).max().unwrap_or_default();
            lo.min(hi - kp)
        })
        .collect();
    let shifted: Vec<IntegerVector> = reads
        .reads()
        .iter()
        .map(|r| IntegerVector::new(r.iter().zip(&lows).map(|(x, lo)| x - lo).collect()))
        .collect();
    let width = kp + km;
    if shifted.iter().flat_map(|v| v.iter()).any(|&x| x > width) {
        return Err(Error::Precondition("reads do not fit a common error ball".into()));
    }
    let c = lp.f() - a;
    let subset = sauer_shelah_find(&shifted, p.alphabet(), c)?;

    let mut seen_patterns = HashSet::new();
    let representatives: Vec<&IntegerVector> = reads
        .reads()
        .iter()
        .filter(|r| seen_patterns.insert(subset.iter().map(|&i| r[i]).collect::<Vec<_>>()))
        .collect();

    let shifts = p.with_radius(lp.f());
    let work = (representatives.len() as u128)
        .checked_mul(ball_size(&shifts)?)
        .ok_or(Error::Overflow("list candidate count"))?;
    check_cap(work, DEFAULT_ENUMERATION_CAP)?;
    let mut visited = HashSet::new();
    let mut list = BTreeSet::new();
    for y in representatives {
        for e in BallIter::new(&shifts) {
            if subset.iter().any(|&i| e[i] == 0) {
                continue;
            }
            let z = y.checked_sub(&e)?;
            if !visited.insert(z.clone()) {
                continue;
            }
            if let Some(x) = code.decode_within(&z, delta - 1, p) {
                list.insert(x);
            }
        }
    }
    Ok(list)
}
