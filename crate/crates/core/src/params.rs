//! Channel parameters `(n, t, k+, k−)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::vector::ensure_same_len;
use crate::{Error, IntegerVector, Result};

/// Parameters of the error ball `B(n, t, k+, k−)`: vectors of length `n`,
/// entries in `[−k−, k+]`, Hamming weight at most `t`.
///
/// `t = 0` is accepted (the ball is `{0}`); decoders use it for radius 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChannelParams {
    n: usize,
    t: usize,
    k_plus: u32,
    k_minus: u32,
}

impl ChannelParams {
    pub fn new(n: usize, t: usize, k_plus: u32, k_minus: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParams("n must be positive".into()));
        }
        if t > n {
            return Err(Error::InvalidParams(format!("t = {t} exceeds n = {n}")));
        }
        if k_plus == 0 {
            return Err(Error::InvalidParams("k+ must be at least 1".into()));
        }
        if k_minus > k_plus {
            return Err(Error::InvalidParams(format!("k- = {k_minus} exceeds k+ = {k_plus}")));
        }
        Ok(Self { n, t, k_plus, k_minus })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn k_plus(&self) -> u32 {
        self.k_plus
    }

    pub fn k_minus(&self) -> u32 {
        self.k_minus
    }

    /// `k+ + k−`, the number of non-zero error values.
    pub fn span(&self) -> u64 {
        u64::from(self.k_plus) + u64::from(self.k_minus)
    }

    /// `k+ + k− + 1`, the alphabet size of a single error entry.
    pub fn alphabet(&self) -> u64 {
        self.span() + 1
    }

    /// Same `(n, k+, k−)` with a different radius, clamped to `n`.
    pub fn with_radius(&self, radius: usize) -> Self {
        Self {
            t: radius.min(self.n),
            ..*self
        }
    }

    /// Whether `e ∈ B(n, t, k+, k−)`.
    pub fn ball_contains(&self, e: &[i64]) -> bool {
        if e.len() != self.n {
            return false;
        }
        let (lo, hi) = (-i64::from(self.k_minus), i64::from(self.k_plus));
        let mut weight = 0;
        for &v in e {
            if v < lo || v > hi {
                return false;
            }
            if v != 0 {
                weight += 1;
            }
        }
        weight <= self.t
    }

    /// Whether `y ∈ center + B(n, t, k+, k−)`.
    pub fn covers(&self, center: &[i64], y: &[i64]) -> bool {
        if center.len() != self.n || y.len() != self.n {
            return false;
        }
        let (lo, hi) = (-i64::from(self.k_minus), i64::from(self.k_plus));
        let mut weight = 0;
        for (c, v) in center.iter().zip(y) {
            let Some(d) = v.checked_sub(*c) else {
                return false;
            };
            if d < lo || d > hi {
                return false;
            }
            if d != 0 {
                weight += 1;
            }
        }
        weight <= self.t
    }

    /// Rejects vectors of the wrong length, or whose entries would overflow
    /// when perturbed by `±(k+ + k−)`.
    pub fn check_vector(&self, x: &IntegerVector) -> Result<()> {
        ensure_same_len(&vec![0; self.n], x)?;
        let span = self.span() as i64;
        if x.iter()
            .any(|v| v.checked_add(span).is_none() || v.checked_sub(span).is_none())
        {
            return Err(Error::Overflow("entry headroom"));
        }
        Ok(())
    }
}

impl fmt::Display for ChannelParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={},t={},kp={},km={}", self.n, self.t, self.k_plus, self.k_minus)
    }
}
