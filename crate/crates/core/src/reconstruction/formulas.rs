//! Read counts, majority thresholds and list-size bounds. All exact.

use num_rational::Ratio;

use super::ListParams;
use crate::combinatorics::{add, mul, pow, volume};
use crate::{Error, Result};

/// A read count together with the majority threshold `τ` used with it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReadThreshold {
    pub reads: u128,
    pub tau: Ratio<i128>,
}

fn check_shape(n: usize, t: usize, k_plus: u32, k_minus: u32) -> Result<()> {
    if t > n {
        return Err(Error::InvalidParams(format!("t = {t} exceeds n = {n}")));
    }
    if k_plus == 0 || k_minus > k_plus {
        return Err(Error::InvalidParams(format!(
            "need 0 <= k- <= k+ and k+ >= 1, got k+={k_plus}, k-={k_minus}"
        )));
    }
    Ok(())
}

fn check_delta(t: usize, delta: usize) -> Result<()> {
    if delta == 0 || delta > t {
        return Err(Error::Precondition(format!(
            "need 1 <= delta <= t, got delta={delta}, t={t}"
        )));
    }
    Ok(())
}

fn require_negative_errors(k_minus: u32) -> Result<()> {
    if k_minus == 0 {
        return Err(Error::Precondition("this bound needs k- >= 1".into()));
    }
    Ok(())
}

fn signed(v: u128) -> Result<i128> {
    i128::try_from(v).map_err(|_| Error::Overflow("threshold"))
}

/// `τ = (1 − 2/m)·N + (2/m)·S`, kept as an exact fraction.
fn threshold(reads: u128, m: usize, s: u128) -> Result<Ratio<i128>> {
    let m = signed(m as u128)?;
    let (reads, s) = (signed(reads)?, signed(s)?);
    let numer = (m - 2)
        .checked_mul(reads)
        .and_then(|v| v.checked_add(s.checked_mul(2)?))
        .ok_or(Error::Overflow("threshold"))?;
    Ok(Ratio::new(numer, m))
}

/// `k+^δ · V_{k++1}(n − δ, t − δ) + 1`.
pub fn reads_required_min(n: usize, t: usize, k_plus: u32, delta: usize) -> Result<u128> {
    check_shape(n, t, k_plus, 0)?;
    check_delta(t, delta)?;
    let kp = u64::from(k_plus);
    let inner = volume(kp + 1, (n - delta) as u64, (t - delta) as u64)?;
    add(mul(pow(kp, delta as u64)?, inner)?, 1)
}

/// `N = K^{2δ} · V_{K+1}(n, t − δ) + 1` and
/// `τ = (1 − 2/δ)·N + (2/δ)·K^δ · V_{K+1}(n − δ, t − δ)`, with `K = k+ + k−`.
pub fn majority_threshold(n: usize, t: usize, k_plus: u32, k_minus: u32, delta: usize) -> Result<ReadThreshold> {
    check_shape(n, t, k_plus, k_minus)?;
    check_delta(t, delta)?;
    require_negative_errors(k_minus)?;
    let span = u64::from(k_plus) + u64::from(k_minus);
    let (d, r) = (delta as u64, (t - delta) as u64);
    let reads = add(mul(pow(span, 2 * d)?, volume(span + 1, n as u64, r)?)?, 1)?;
    let heavy = mul(pow(span, d)?, volume(span + 1, n as u64 - d, r)?)?;
    Ok(ReadThreshold {
        reads,
        tau: threshold(reads, delta, heavy)?,
    })
}

/// Least `N > k+^{δ+a} · V_{k++1}(n − δ − a, f − 1 − a)`.
pub fn list_params_min(n: usize, t: usize, k_plus: u32, delta: usize, a: usize) -> Result<u128> {
    check_shape(n, t, k_plus, 0)?;
    let lp = ListParams::new(t, delta, a)?;
    let kp = u64::from(k_plus);
    let m = (delta + a) as u64;
    let inner = volume(kp + 1, n as u64 - m, (lp.f() - 1 - a) as u64)?;
    add(mul(pow(kp, m)?, inner)?, 1)
}

/// `N = K^{δ+a+1} · V_{K+1}(n − δ − a, f − 1 − a) + 1` and
/// `τ = (1 − 2/(δ+a))·N + (2/(δ+a))·K^{δ+a} · V_{K+1}(n − δ − a, t − δ − a)`.
pub fn list_params_general(
    n: usize,
    t: usize,
    k_plus: u32,
    k_minus: u32,
    delta: usize,
    a: usize,
) -> Result<ReadThreshold> {
    check_shape(n, t, k_plus, k_minus)?;
    require_negative_errors(k_minus)?;
    let lp = ListParams::new(t, delta, a)?;
    let span = u64::from(k_plus) + u64::from(k_minus);
    let m = (delta + a) as u64;
    let r = (lp.f() - 1 - a) as u64;
    let inner = volume(span + 1, n as u64 - m, r)?;
    let reads = add(mul(pow(span, m + 1)?, inner)?, 1)?;
    let heavy = mul(pow(span, m)?, inner)?;
    Ok(ReadThreshold {
        reads,
        tau: threshold(reads, delta + a, heavy)?,
    })
}

/// Least `N > V_{K+1}(n, f − 1 − a)`.
pub fn reads_required_sauer(n: usize, t: usize, k_plus: u32, k_minus: u32, delta: usize, a: usize) -> Result<u128> {
    check_shape(n, t, k_plus, k_minus)?;
    let lp = ListParams::new(t, delta, a)?;
    let q = u64::from(k_plus) + u64::from(k_minus) + 1;
    add(volume(q, n as u64, (lp.f() - 1 - a) as u64)?, 1)
}

/// `V_{k++1}(n, a)`.
pub fn list_size_bound_min(n: usize, k_plus: u32, a: usize) -> Result<u128> {
    volume(u64::from(k_plus) + 1, n as u64, a as u64)
}

/// `(K+1)^{2t(δ+a)} · V_{K+1}(n, a)`.
pub fn list_size_bound_majority(n: usize, t: usize, k_plus: u32, k_minus: u32, delta: usize, a: usize) -> Result<u128> {
    check_shape(n, t, k_plus, k_minus)?;
    ListParams::new(t, delta, a)?;
    let q = u64::from(k_plus) + u64::from(k_minus) + 1;
    mul(pow(q, 2 * (t * (delta + a)) as u64)?, volume(q, n as u64, a as u64)?)
}

/// `(K+1)^{2(f−a)} · V_{K+1}(n − f + a, a)`.
pub fn list_size_bound_sauer(n: usize, t: usize, k_plus: u32, k_minus: u32, delta: usize, a: usize) -> Result<u128> {
    check_shape(n, t, k_plus, k_minus)?;
    let lp = ListParams::new(t, delta, a)?;
    let q = u64::from(k_plus) + u64::from(k_minus) + 1;
    let c = (lp.f() - a) as u64;
    mul(pow(q, 2 * c)?, volume(q, n as u64 - c, a as u64)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_required_min_examples() {
        assert_eq!(reads_required_min(2, 1, 1, 1).unwrap(), 2);
        assert_eq!(reads_required_min(4, 2, 2, 2).unwrap(), 5);
        for kp in 1..=3u32 {
            assert_eq!(reads_required_min(5, 3, kp, 3).unwrap(), u128::from(kp).pow(3) + 1);
        }
        assert!(reads_required_min(4, 2, 2, 3).is_err());
        assert!(reads_required_min(4, 2, 2, 0).is_err());
    }

    #[test]
    fn majority_threshold_examples() {
        let r = majority_threshold(4, 2, 1, 1, 2).unwrap();
        assert_eq!(r.reads, 17);
        assert_eq!(r.tau, Ratio::from_integer(4));
        // δ = 1: τ = −N + 2K·V(n − 1, t − 1). For (4, 2, 1, 1): N = 4·9 + 1, V₃(3, 1) = 7.
        let r = majority_threshold(4, 2, 1, 1, 1).unwrap();
        assert_eq!(r.reads, 37);
        assert_eq!(r.tau, Ratio::from_integer(-37 + 2 * 2 * 7));
        // δ = 3 gives a genuine fraction.
        // N = 2⁶·V₃(5, 1) + 1 = 705, S = 2³·V₃(2, 1) = 40.
        let r = majority_threshold(5, 4, 1, 1, 3).unwrap();
        assert_eq!(r.reads, 705);
        assert_eq!(r.tau, Ratio::new(705 + 2 * 40, 3));
        assert_eq!(*r.tau.denom(), 3);
        assert!(majority_threshold(4, 2, 1, 0, 1).is_err());
        assert!(majority_threshold(4, 2, 1, 1, 3).is_err());
    }

    #[test]
    fn tau_below_read_count_on_a_grid() {
        for n in 1..=7 {
            for t in 1..=n {
                for kp in 1..=3u32 {
                    for km in 1..=kp {
                        for delta in 1..=t {
                            let r = majority_threshold(n, t, kp, km, delta).unwrap();
                            assert!(r.tau < Ratio::from_integer(r.reads as i128));
                            for a in 0..=t - delta {
                                let r = list_params_general(n, t, kp, km, delta, a).unwrap();
                                assert!(r.tau < Ratio::from_integer(r.reads as i128));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn list_params_min_examples() {
        assert_eq!(list_params_min(4, 2, 2, 1, 1).unwrap(), 5);
        for (n, t, kp, delta) in [(4, 2, 2, 1), (5, 3, 3, 2), (6, 3, 2, 1)] {
            assert_eq!(
                list_params_min(n, t, kp, delta, 0).unwrap(),
                reads_required_min(n, t, kp, delta).unwrap()
            );
            let f = t - delta + 1;
            assert_eq!(
                list_params_min(n, t, kp, delta, f - 1).unwrap(),
                u128::from(kp).pow(t as u32) + 1
            );
        }
        assert!(list_params_min(4, 2, 2, 1, 2).is_err());
    }

    #[test]
    fn list_params_general_examples() {
        let r = list_params_general(4, 2, 1, 1, 1, 1).unwrap();
        assert_eq!(r.reads, 9);
        assert_eq!(r.tau, Ratio::from_integer(4));
        // a = f − 1: the inner volume is V(·, 0) = 1.
        let r = list_params_general(5, 3, 2, 1, 1, 2).unwrap();
        assert_eq!(r.reads, 3u128.pow(4) + 1);
        assert!(list_params_general(4, 2, 1, 1, 1, 2).is_err());
        assert!(list_params_general(4, 2, 1, 0, 1, 0).is_err());
    }

    #[test]
    fn sauer_counts_and_bounds() {
        // a = f − 1 needs two reads.
        assert_eq!(reads_required_sauer(4, 2, 1, 1, 1, 1).unwrap(), 2);
        assert_eq!(reads_required_sauer(4, 2, 1, 1, 1, 0).unwrap(), 1 + 4 * 2 + 1);
        assert_eq!(list_size_bound_sauer(4, 2, 1, 1, 1, 1).unwrap(), 9 * (1 + 3 * 2));
        assert_eq!(list_size_bound_sauer(4, 2, 1, 0, 1, 0).unwrap(), 16);
        assert_eq!(list_size_bound_min(4, 2, 1).unwrap(), 9);
        assert_eq!(list_size_bound_majority(4, 2, 1, 1, 1, 1).unwrap(), 3u128.pow(8) * 9);
    }
}
