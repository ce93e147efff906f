//! Limited-magnitude distances and the brute-force correction oracle.
//!
//! Neither distance satisfies the triangle inequality, so nothing here
//! prunes a search on metric grounds. Distances live on `[0, n + 1]`, with
//! `n + 1` meaning "some coordinate differs by more than the channel can
//! bridge".

use crate::combinatorics::intersection_exact;
use crate::vector::ensure_same_len;
use crate::{ChannelParams, Error, IntegerVector, Result};

/// Per-coordinate classification of `x − y` relative to `(k+, k−)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DistanceComponents {
    /// `0 < |x[i] − y[i]| ≤ k−`.
    pub n_small: usize,
    /// `k+ < |x[i] − y[i]| ≤ k+ + k−`.
    pub n_large: usize,
    /// `k− < x[i] − y[i] ≤ k+`.
    pub m_forward: usize,
    /// `k− < y[i] − x[i] ≤ k+`.
    pub m_backward: usize,
    /// Some `|x[i] − y[i]| > k+ + k−`.
    pub exceeds: bool,
}

pub fn distance_components(x: &[i64], y: &[i64], k_plus: u32, k_minus: u32) -> Result<DistanceComponents> {
    ensure_same_len(x, y)?;
    let (kp, km) = (i128::from(k_plus), i128::from(k_minus));
    let mut c = DistanceComponents::default();
    for (a, b) in x.iter().zip(y) {
        let d = i128::from(*a) - i128::from(*b);
        let mag = d.abs();
        if mag == 0 {
            continue;
        }
        if mag > kp + km {
            c.exceeds = true;
        } else if mag <= km {
            c.n_small += 1;
        } else if mag > kp {
            c.n_large += 1;
        } else if d > 0 {
            c.m_forward += 1;
        } else {
            c.m_backward += 1;
        }
    }
    Ok(c)
}

/// `|{i : x[i] > y[i]}|`.
pub fn count_greater(x: &[i64], y: &[i64]) -> Result<usize> {
    ensure_same_len(x, y)?;
    Ok(x.iter().zip(y).filter(|(a, b)| a > b).count())
}

/// `d_{k+}(x, y)`: `n + 1` if some `|x[i] − y[i]| > k+`, otherwise the larger
/// of the two one-sided counts.
pub fn distance_asymmetric(x: &[i64], y: &[i64], k_plus: u32) -> Result<usize> {
    ensure_same_len(x, y)?;
    let kp = i128::from(k_plus);
    if x.iter()
        .zip(y)
        .any(|(a, b)| (i128::from(*a) - i128::from(*b)).abs() > kp)
    {
        return Ok(x.len() + 1);
    }
    Ok(count_greater(x, y)?.max(count_greater(y, x)?))
}

/// `d_{k+,k−}(x, y) = ⌈max(N_{k−} − |M(x,y) − M(y,x)|, 0) / 2⌉ + max(M(x,y), M(y,x)) + N_{k+,k−}`,
/// or `n + 1` when some coordinate differs by more than `k+ + k−`.
pub fn distance_general(x: &[i64], y: &[i64], k_plus: u32, k_minus: u32) -> Result<usize> {
    let c = distance_components(x, y, k_plus, k_minus)?;
    if c.exceeds {
        return Ok(x.len() + 1);
    }
    let imbalance = c.m_forward.abs_diff(c.m_backward);
    let half = c.n_small.saturating_sub(imbalance).div_ceil(2);
    Ok(half + c.m_forward.max(c.m_backward) + c.n_large)
}

/// Minimum `d_{k+,k−}` over distinct pairs of codewords.
pub fn code_min_distance(code: &[IntegerVector], k_plus: u32, k_minus: u32) -> Result<usize> {
    let mut members: Vec<&IntegerVector> = code.iter().collect();
    members.sort();
    members.dedup();
    if members.len() < 2 {
        return Err(Error::TooFewCodewords);
    }
    let mut best = usize::MAX;
    for (i, x) in members.iter().enumerate() {
        for y in &members[i + 1..] {
            best = best.min(distance_general(x, y, k_plus, k_minus)?);
        }
    }
    Ok(best)
}

/// Whether radius-`e` balls around distinct codewords are pairwise disjoint,
/// decided by enumeration.
pub fn correction_capability_oracle(
    code: &[IntegerVector],
    params: &ChannelParams,
    e: usize,
    cap: u128,
) -> Result<bool> {
    if e > params.t() {
        return Err(Error::Precondition(format!(
            "trial radius {e} exceeds t = {}",
            params.t()
        )));
    }
    let ball = params.with_radius(e);
    let mut members: Vec<&IntegerVector> = code.iter().collect();
    members.sort();
    members.dedup();
    for (i, x) in members.iter().enumerate() {
        for y in &members[i + 1..] {
            if intersection_exact(x, y, &ball, cap)? > 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::combinatorics::DEFAULT_ENUMERATION_CAP;

    fn v<const N: usize>(a: [i64; N]) -> IntegerVector {
        IntegerVector::from(a)
    }

    #[test]
    fn count_greater_examples() {
        assert_eq!(count_greater(&[1, 1, 0], &[0, 0, 0]).unwrap(), 2);
        assert_eq!(count_greater(&[4, 5], &[4, 5]).unwrap(), 0);
        assert_eq!(count_greater(&[0, 2], &[1, 0]).unwrap(), 1);
        assert!(count_greater(&[0], &[1, 0]).is_err());
    }

    #[test]
    fn asymmetric_examples() {
        assert_eq!(distance_asymmetric(&[1, 1, 0], &[0, 0, 0], 1).unwrap(), 2);
        assert_eq!(distance_asymmetric(&[0, 0], &[2, 0], 1).unwrap(), 3);
        assert_eq!(distance_asymmetric(&[3, -3], &[3, -3], 1).unwrap(), 0);
    }

    #[test]
    fn general_examples() {
        assert_eq!(distance_general(&[3, 0], &[0, 0], 2, 1).unwrap(), 1);
        assert_eq!(distance_general(&[1, 0], &[0, 0], 2, 1).unwrap(), 1);
        assert_eq!(distance_general(&[7, 7], &[7, 7], 2, 1).unwrap(), 0);
        assert_eq!(distance_general(&[1, 1, 0], &[0, 0, 0], 1, 0).unwrap(), 2);
        assert_eq!(distance_general(&[4, 0], &[0, 0], 2, 1).unwrap(), 3);
    }

    #[test]
    fn components_split_the_support() {
        let c = distance_components(&[1, 3, 2, 0, 9], &[0, 0, 0, 2, 0], 2, 1).unwrap();
        assert_eq!(
            c,
            DistanceComponents {
                n_small: 1,
                n_large: 1,
                m_forward: 1,
                m_backward: 1,
                exceeds: true
            }
        );
    }

    #[test]
    fn code_min_distance_examples() {
        assert_eq!(code_min_distance(&[v([0, 0]), v([1, -1])], 1, 0).unwrap(), 1);
        assert_eq!(code_min_distance(&[v([0, 0]), v([3, 0])], 1, 0).unwrap(), 3);
        assert_eq!(
            code_min_distance(&[v([1, 1]), v([1, 1])], 1, 0),
            Err(Error::TooFewCodewords)
        );
    }

    #[test]
    fn oracle_examples() {
        let cap = DEFAULT_ENUMERATION_CAP;
        let p = ChannelParams::new(2, 1, 1, 0).unwrap();
        assert!(correction_capability_oracle(&[v([0, 0]), v([3, 0])], &p, 1, cap).unwrap());
        for (kp, km) in [(1, 0), (1, 1), (2, 1)] {
            let p = ChannelParams::new(2, 2, kp, km).unwrap();
            for e in 1..=2 {
                assert!(!correction_capability_oracle(&[v([0, 0]), v([1, 0])], &p, e, cap).unwrap());
            }
        }
        assert!(correction_capability_oracle(&[v([0, 0]), v([1, 0])], &p, 0, cap).unwrap());
        assert!(correction_capability_oracle(&[v([0, 0])], &p, 2, cap).is_err());
    }

    fn small_vec(n: usize) -> impl Strategy<Value = Vec<i64>> {
        prop::collection::vec(-5i64..=5, n)
    }

    fn pair() -> impl Strategy<Value = (Vec<i64>, Vec<i64>, Vec<i64>)> {
        (1usize..=6).prop_flat_map(|n| (small_vec(n), small_vec(n), small_vec(n)))
    }

    fn kpair() -> impl Strategy<Value = (u32, u32)> {
        (1u32..=3).prop_flat_map(|kp| (Just(kp), 0..=kp))
    }

    proptest! {
        #[test]
        fn general_is_symmetric((x, y, _) in pair(), (kp, km) in kpair()) {
            prop_assert_eq!(
                distance_general(&x, &y, kp, km).unwrap(),
                distance_general(&y, &x, kp, km).unwrap()
            );
        }

        #[test]
        fn general_specializes_to_asymmetric((x, y, _) in pair(), kp in 1u32..=3) {
            prop_assert_eq!(
                distance_general(&x, &y, kp, 0).unwrap(),
                distance_asymmetric(&x, &y, kp).unwrap()
            );
        }

        #[test]
        fn translation_invariant((x, y, s) in pair(), (kp, km) in kpair()) {
            let shift = |a: &[i64]| a.iter().zip(&s).map(|(p, q)| p + q).collect::<Vec<_>>();
            prop_assert_eq!(
                distance_general(&x, &y, kp, km).unwrap(),
                distance_general(&shift(&x), &shift(&y), kp, km).unwrap()
            );
            prop_assert_eq!(
                distance_asymmetric(&x, &y, kp).unwrap(),
                distance_asymmetric(&shift(&x), &shift(&y), kp).unwrap()
            );
        }

        #[test]
        fn range_is_zero_to_n_plus_one((x, y, _) in pair(), (kp, km) in kpair()) {
            let d = distance_general(&x, &y, kp, km).unwrap();
            prop_assert!(d <= x.len() + 1);
            prop_assert_eq!(d == 0, x == y);
        }
    }
}
