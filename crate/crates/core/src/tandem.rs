//! Reconstruction over the simplex `Δ_r^m` when every read is the transmitted
//! vector plus a sum of unit vectors.
//!
//! Each tandem duplication adds one unit vector to the duplication-count
//! vector of a string, so reads lie in the upward ball
//! `B_t⁺(x) = {y ≥ x : Σ(y − x) ≤ t}`.

use std::fmt;

use crate::combinatorics::{binomial, check_cap};
use crate::{Error, Result};

/// A vector of `m + 1` non-negative integers; its weight is the sum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexVector(Vec<u64>);

impl SimplexVector {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidParams("simplex vectors need m + 1 >= 1 entries".into()));
        }
        entries
            .iter()
            .try_fold(0u64, |s, &v| s.checked_add(v))
            .ok_or(Error::Overflow("simplex weight"))?;
        Ok(Self(entries))
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    /// `m`, one less than the number of entries.
    pub fn m(&self) -> usize {
        self.0.len() - 1
    }

    pub fn weight(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Whether `self ≥ other` componentwise.
    pub fn dominates(&self, other: &SimplexVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    pub fn l1_distance(&self, other: &SimplexVector) -> u64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a.abs_diff(*b)).sum()
    }

    pub fn componentwise_min<'a, I>(vectors: I) -> Option<SimplexVector>
    where
        I: IntoIterator<Item = &'a SimplexVector>,
    {
        let mut it = vectors.into_iter();
        let mut acc = it.next()?.0.clone();
        for v in it {
            for (a, b) in acc.iter_mut().zip(&v.0) {
                *a = (*a).min(*b);
            }
        }
        Some(SimplexVector(acc))
    }
}

impl From<Vec<u64>> for SimplexVector {
    fn from(v: Vec<u64>) -> Self {
        Self::new(v).expect("valid simplex vector")
    }
}

impl fmt::Display for SimplexVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// All non-negative vectors of length `len` with sum `total`, in
/// lexicographic order.
pub fn compositions(len: usize, total: u64) -> Vec<Vec<u64>> {
    fn rec(len: usize, total: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if len == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for v in 0..=total {
            prefix.push(v);
            rec(len - 1, total - v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if len == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(len, total, &mut Vec::with_capacity(len), &mut out);
    out
}

/// The points of `Δ_r^m` in lexicographic order.
pub fn simplex_points(m: usize, r: u64) -> Vec<SimplexVector> {
    compositions(m + 1, r).into_iter().map(SimplexVector).collect()
}

/// `|B_t⁺(x)| = C(m + 1 + t, m + 1)`.
pub fn upward_ball_size(m: usize, t: usize) -> Result<u128> {
    binomial((m + 1 + t) as u64, (m + 1) as u64)
}

/// The vectors `x + w` with `w ≥ 0` and `Σw = excess`, in lexicographic order.
pub fn descendants_exact(x: &SimplexVector, excess: usize) -> Vec<SimplexVector> {
    compositions(x.0.len(), excess as u64)
        .into_iter()
        .map(|w| SimplexVector(x.0.iter().zip(&w).map(|(a, b)| a + b).collect()))
        .collect()
}

/// `B_t⁺(x)`, ordered by total excess and then lexicographically.
pub fn upward_ball(x: &SimplexVector, t: usize, cap: u128) -> Result<Vec<SimplexVector>> {
    check_cap(upward_ball_size(x.m(), t)?, cap)?;
    Ok((0..=t).flat_map(|s| descendants_exact(x, s)).collect())
}

/// `C(m + t − δ, m) + 1` for `1 ≤ δ ≤ t`.
///
/// This many distinct reads force the componentwise minimum within excess
/// `δ − 1` of `x` when each read carries exactly `t` duplications. With
/// reads of excess up to `t`, it is not enough once `t > δ`.
pub fn reads_required_simplex(m: usize, t: usize, delta: usize) -> Result<u128> {
    if delta == 0 || delta > t {
        return Err(Error::InvalidParams(format!(
            "need 1 <= delta <= t, got delta={delta}, t={t}"
        )));
    }
    let c = binomial((m + t - delta) as u64, m as u64)?;
    c.checked_add(1).ok_or(Error::Overflow("simplex read count"))
}

/// An explicit code on `Δ_r^m` whose words are pairwise at ℓ₁ distance at
/// least `2δ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplexCode {
    m: usize,
    r: u64,
    delta: usize,
    words: Vec<SimplexVector>,
}

impl SimplexCode {
    /// Validates that every word lies on `Δ_r^m`, that words are distinct,
    /// and that the minimum ℓ₁ distance is at least `2δ`.
    pub fn new(m: usize, r: u64, delta: usize, words: Vec<SimplexVector>) -> Result<Self> {
        if delta == 0 {
            return Err(Error::InvalidParams("delta must be at least 1".into()));
        }
        if words.is_empty() {
            return Err(Error::TooFewCodewords);
        }
        for w in &words {
            if w.m() != m || w.weight() != r {
                return Err(Error::InvalidParams(format!("{w} is not on the simplex m={m}, r={r}")));
            }
        }
        for (i, a) in words.iter().enumerate() {
            for b in &words[i + 1..] {
                let d = a.l1_distance(b);
                if d < 2 * delta as u64 {
                    return Err(Error::InvalidParams(format!(
                        "l1 distance {d} between {a} and {b} is below 2*delta = {}",
                        2 * delta
                    )));
                }
            }
        }
        Ok(Self { m, r, delta, words })
    }

    /// Greedy code over `Δ_r^m` in lexicographic order.
    pub fn greedy(m: usize, r: u64, delta: usize) -> Result<Self> {
        let mut words: Vec<SimplexVector> = Vec::new();
        for p in simplex_points(m, r) {
            if words.iter().all(|w| w.l1_distance(&p) >= 2 * delta as u64) {
                words.push(p);
            }
        }
        Self::new(m, r, delta, words)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn words(&self) -> &[SimplexVector] {
        &self.words
    }

    /// The codeword `c` with `z ∈ B⁺_radius(c)`, if any. Unique whenever
    /// `radius < δ`.
    pub fn decode_within(&self, z: &SimplexVector, radius: usize) -> Option<SimplexVector> {
        let zw = z.weight();
        if z.m() != self.m || zw < self.r || zw - self.r > radius as u64 {
            return None;
        }
        self.words.iter().find(|c| z.dominates(c)).cloned()
    }
}

/// Componentwise minimum of the reads, decoded at radius `δ − 1`.
pub fn reconstruct_simplex_min(reads: &[SimplexVector], code: &SimplexCode, delta: usize) -> Result<SimplexVector> {
    if delta == 0 {
        return Err(Error::Precondition("delta must be at least 1".into()));
    }
    if let Some(bad) = reads.iter().find(|y| y.m() != code.m()) {
        return Err(Error::LengthMismatch {
            expected: code.m() + 1,
            found: bad.m() + 1,
        });
    }
    let z = SimplexVector::componentwise_min(reads).ok_or_else(|| Error::Precondition("read set is empty".into()))?;
    code.decode_within(&z, delta - 1)
        .ok_or(Error::DecodeFailure { radius: delta - 1 })
}

#[cfg(test)]
mod tests {
    use itertools::Itertools;
    use proptest::prelude::*;

    use super::*;
    use crate::combinatorics::DEFAULT_ENUMERATION_CAP as CAP;

    fn s<const N: usize>(a: [u64; N]) -> SimplexVector {
        SimplexVector::from(a.to_vec())
    }

    #[test]
    fn upward_ball_examples() {
        let x = s([1, 1, 1]);
        assert_eq!(upward_ball(&x, 0, CAP).unwrap(), vec![x.clone()]);
        let b = upward_ball(&x, 1, CAP).unwrap();
        assert_eq!(b, vec![x.clone(), s([1, 1, 2]), s([1, 2, 1]), s([2, 1, 1])]);
    }

    #[test]
    fn upward_ball_matches_box_scan() {
        for m in 0..=3usize {
            for t in 0..=3usize {
                let x = SimplexVector::from((0..=m as u64).collect::<Vec<_>>());
                let mut brute: Vec<SimplexVector> = x
                    .entries()
                    .iter()
                    .map(|&v| v..=v + t as u64)
                    .multi_cartesian_product()
                    .map(SimplexVector::from)
                    .filter(|y| y.weight() <= x.weight() + t as u64)
                    .collect();
                brute.sort();
                let mut got = upward_ball(&x, t, CAP).unwrap();
                assert_eq!(got.len() as u128, upward_ball_size(m, t).unwrap());
                got.sort();
                assert_eq!(got, brute);
            }
        }
    }

    #[test]
    fn read_counts() {
        assert_eq!(reads_required_simplex(2, 2, 2).unwrap(), 2);
        assert_eq!(reads_required_simplex(2, 2, 1).unwrap(), 4);
        assert_eq!(reads_required_simplex(5, 1, 1).unwrap(), 2);
        assert!(reads_required_simplex(2, 1, 2).is_err());
    }

    #[test]
    fn min_of_two_reads() {
        let code = SimplexCode::new(2, 3, 1, vec![s([1, 1, 1])]).unwrap();
        let y = [s([2, 1, 1]), s([1, 2, 1])];
        assert_eq!(SimplexVector::componentwise_min(&y).unwrap(), s([1, 1, 1]));
        assert_eq!(reconstruct_simplex_min(&y, &code, 1).unwrap(), s([1, 1, 1]));
        // Single clean read at radius δ − 1 ≥ t.
        let code = SimplexCode::greedy(2, 3, 2).unwrap();
        let x = code.words()[1].clone();
        assert_eq!(reconstruct_simplex_min(std::slice::from_ref(&x), &code, 2).unwrap(), x);
    }

    #[test]
    fn load_time_distance_check() {
        assert!(SimplexCode::new(2, 3, 1, vec![s([3, 0, 0]), s([2, 1, 0])]).is_ok());
        assert!(SimplexCode::new(2, 3, 2, vec![s([3, 0, 0]), s([2, 1, 0])]).is_err());
        assert!(SimplexCode::new(2, 3, 1, vec![s([3, 0, 1])]).is_err());
        let g = SimplexCode::greedy(2, 4, 2).unwrap();
        assert!(g.words().len() > 1);
    }

    #[test]
    fn exhaustive_small_instance() {
        // m = 2, r = 3, t = δ = 2: any two reads with exactly two duplications.
        let code = SimplexCode::greedy(2, 3, 2).unwrap();
        let n = reads_required_simplex(2, 2, 2).unwrap() as usize;
        for x in code.words() {
            let pool = descendants_exact(x, 2);
            for y in pool.into_iter().combinations(n) {
                assert_eq!(&reconstruct_simplex_min(&y, &code, 2).unwrap(), x);
            }
        }
    }

    /// With reads of excess up to t, `C(m + t − δ, m) + 1` reads may all
    /// dominate `x + e₁`, so the minimum misses `x` by δ.
    #[test]
    fn read_count_falls_short_for_mixed_excess() {
        let x = s([1, 1, 1]);
        let shifted = s([2, 1, 1]);
        let n = reads_required_simplex(2, 2, 1).unwrap() as usize;
        let reads: Vec<SimplexVector> = upward_ball(&shifted, 1, CAP).unwrap();
        assert_eq!(reads.len(), n);
        let ball = upward_ball(&x, 2, CAP).unwrap();
        assert!(reads.iter().all(|y| ball.contains(y)));
        assert_eq!(SimplexVector::componentwise_min(&reads).unwrap(), shifted);
        let code = SimplexCode::new(2, 3, 1, vec![x]).unwrap();
        assert!(reconstruct_simplex_min(&reads, &code, 1).is_err());
    }

    proptest! {
        #[test]
        fn min_dominates_and_unit_additions(
            x in proptest::collection::vec(0u64..4, 1..4),
            t in 0usize..3,
            pick in proptest::collection::vec(any::<prop::sample::Index>(), 1..5),
        ) {
            let x = SimplexVector::from(x);
            let ball = upward_ball(&x, t, CAP).unwrap();
            let chosen: Vec<_> = pick.iter().map(|i| ball[i.index(ball.len())].clone()).collect();
            for y in &ball {
                prop_assert!(y.dominates(&x));
                let excess = y.weight() - x.weight();
                prop_assert!(excess <= t as u64);
            }
            let z = SimplexVector::componentwise_min(&chosen).unwrap();
            prop_assert!(z.dominates(&x));
        }
    }
}
