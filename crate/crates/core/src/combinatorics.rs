//! Error-ball geometry: volumes, lexicographic enumeration, exact
//! intersections, and the closed-form intersection formulas and bounds.
//!
//! All counts are exact `u128`; any intermediate overflow is reported as
//! [`Error::Overflow`]. Sums over an empty index range are 0 and `0⁰ = 1`.

use std::sync::OnceLock;

use crate::{ChannelParams, Error, IntegerVector, Result};

/// Default limit on the number of vectors any enumeration may produce.
pub const DEFAULT_ENUMERATION_CAP: u128 = 10_000_000;

const PASCAL_ROWS: usize = 129;

fn pascal() -> &'static [Vec<u128>] {
    static TABLE: OnceLock<Vec<Vec<u128>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut rows: Vec<Vec<u128>> = Vec::with_capacity(PASCAL_ROWS);
        rows.push(vec![1]);
        for n in 1..PASCAL_ROWS {
            let prev = &rows[n - 1];
            let mut row = vec![1u128; n + 1];
            for k in 1..n {
                row[k] = prev[k - 1] + prev[k];
            }
            rows.push(row);
        }
        rows
    })
}

/// Exact binomial coefficient; `C(n, k) = 0` for `k > n`.
pub fn binomial(n: u64, k: u64) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    if (n as usize) < PASCAL_ROWS {
        return Ok(pascal()[n as usize][k as usize]);
    }
    // Rows beyond the table: multiplicative form, exact at every step.
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul(u128::from(n - i)).ok_or(Error::Overflow("binomial"))? / u128::from(i + 1);
    }
    Ok(acc)
}

pub(crate) fn pow(base: u64, exp: u64) -> Result<u128> {
    let exp = u32::try_from(exp).map_err(|_| Error::Overflow("power"))?;
    u128::from(base).checked_pow(exp).ok_or(Error::Overflow("power"))
}

pub(crate) fn add(a: u128, b: u128) -> Result<u128> {
    a.checked_add(b).ok_or(Error::Overflow("sum"))
}

pub(crate) fn mul(a: u128, b: u128) -> Result<u128> {
    a.checked_mul(b).ok_or(Error::Overflow("product"))
}

/// `V_q(n, r)` with `r` clamped to `n`; terms with `i > n` vanish anyway.
pub(crate) fn volume(q: u64, n: u64, r: u64) -> Result<u128> {
    let mut total = 0u128;
    for i in 0..=r.min(n) {
        total = add(total, mul(binomial(n, i)?, pow(q.saturating_sub(1), i)?)?)?;
    }
    Ok(total)
}

/// Hamming-ball volume `V_q(n, r) = Σ_{i=0}^{r} C(n, i)(q − 1)^i`.
pub fn hamming_volume(q: u64, n: u64, r: u64) -> Result<u128> {
    if q < 1 {
        return Err(Error::Precondition("alphabet size must be at least 1".into()));
    }
    if r > n {
        return Err(Error::Precondition(format!("radius {r} exceeds length {n}")));
    }
    volume(q, n, r)
}

/// `|B(n, t, k+, k−)| = V_{k++k−+1}(n, t)`.
pub fn ball_size(p: &ChannelParams) -> Result<u128> {
    volume(p.alphabet(), p.n() as u64, p.t() as u64)
}

pub(crate) fn check_cap(requested: u128, cap: u128) -> Result<()> {
    if requested > cap {
        return Err(Error::EnumerationCap { requested, cap });
    }
    Ok(())
}

/// Lazy lexicographic walk over `B(n, t, k+, k−)`.
///
/// Each step is `O(n)` and the walk never materializes the ball, so it is
/// also used by the decoders' ball searches.
#[derive(Debug, Clone)]
pub struct BallIter {
    cur: Vec<i64>,
    t: usize,
    lo: i64,
    hi: i64,
    weight: usize,
    fresh: bool,
    done: bool,
}

impl BallIter {
    pub fn new(p: &ChannelParams) -> Self {
        Self::with_range(p.n(), p.t(), -i64::from(p.k_minus()), i64::from(p.k_plus()))
    }

    /// Vectors in `[lo, hi]ⁿ` of weight at most `t`; needs `lo ≤ 0 ≤ hi`.
    pub(crate) fn with_range(n: usize, t: usize, lo: i64, hi: i64) -> Self {
        debug_assert!(lo <= 0 && 0 <= hi);
        let mut it = Self {
            cur: vec![0; n],
            t,
            lo,
            hi,
            weight: 0,
            fresh: true,
            done: false,
        };
        it.weight = it.fill_min(0, it.t);
        it
    }

    /// Writes the lexicographically smallest suffix starting at `from` that
    /// uses at most `budget` non-zero entries; returns the weight it used.
    fn fill_min(&mut self, from: usize, budget: usize) -> usize {
        let mut used = 0;
        for slot in &mut self.cur[from..] {
            if self.lo < 0 && used < budget {
                *slot = self.lo;
                used += 1;
            } else {
                *slot = 0;
            }
        }
        used
    }

    fn advance(&mut self) -> bool {
        let mut suffix_weight = 0;
        for i in (0..self.cur.len()).rev() {
            let v = self.cur[i];
            let nz = usize::from(v != 0);
            let prefix_weight = self.weight - suffix_weight - nz;
            let next = v + 1;
            if next <= self.hi && (next == 0 || prefix_weight < self.t) {
                self.cur[i] = next;
                let head = prefix_weight + usize::from(next != 0);
                let tail = self.fill_min(i + 1, self.t - head);
                self.weight = head + tail;
                return true;
            }
            suffix_weight += nz;
        }
        false
    }
}

impl Iterator for BallIter {
    type Item = IntegerVector;

    fn next(&mut self) -> Option<IntegerVector> {
        if self.done {
            return None;
        }
        if self.fresh {
            self.fresh = false;
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        Some(IntegerVector::new(self.cur.clone()))
    }
}

/// All of `B(n, t, k+, k−)` in strictly increasing lexicographic order.
pub fn enumerate_ball(p: &ChannelParams, cap: u128) -> Result<Vec<IntegerVector>> {
    check_cap(ball_size(p)?, cap)?;
    Ok(BallIter::new(p).collect())
}

/// The `index`-th member (0-based) of the lexicographic enumeration.
pub fn ball_unrank(p: &ChannelParams, mut index: u128) -> Result<IntegerVector> {
    let size = ball_size(p)?;
    if index >= size {
        return Err(Error::Precondition(format!(
            "index {index} outside ball of size {size}"
        )));
    }
    let q = p.alphabet();
    let n = p.n();
    let (lo, hi) = (-i64::from(p.k_minus()), i64::from(p.k_plus()));
    let mut budget = p.t() as u64;
    let mut out = Vec::with_capacity(n);
    for pos in 0..n {
        let rest = (n - pos - 1) as u64;
        for v in lo..=hi {
            let count = if v == 0 {
                volume(q, rest, budget)?
            } else if budget >= 1 {
                volume(q, rest, budget - 1)?
            } else {
                0
            };
            if index < count {
                out.push(v);
                budget -= u64::from(v != 0);
                break;
            }
            index -= count;
        }
    }
    Ok(IntegerVector::new(out))
}

/// Exact `N(x, y; t, k+, k−) = |(x + B) ∩ (y + B)|`.
///
/// Enumerates `x + B` and tests membership in `y + B` directly.
pub fn intersection_exact(x: &IntegerVector, y: &IntegerVector, p: &ChannelParams, cap: u128) -> Result<u128> {
    p.check_vector(x)?;
    p.check_vector(y)?;
    check_cap(ball_size(p)?, cap)?;
    let mut point = vec![0i64; p.n()];
    let mut count = 0u128;
    for e in BallIter::new(p) {
        for ((slot, xi), ei) in point.iter_mut().zip(x.iter()).zip(e.iter()) {
            *slot = xi + ei;
        }
        if p.covers(y, &point) {
            count += 1;
        }
    }
    Ok(count)
}

/// `N(Zⁿ; t, k+, k−) = (k+ + k−)·V_{k++k−+1}(n − 1, t − 1)`.
pub fn max_intersection_whole_space(p: &ChannelParams) -> Result<u128> {
    if p.t() == 0 {
        return Err(Error::Precondition("whole-space intersection needs t >= 1".into()));
    }
    mul(
        u128::from(p.span()),
        volume(p.alphabet(), p.n() as u64 - 1, p.t() as u64 - 1)?,
    )
}

/// A two-sided bound on an intersection size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntersectionBounds {
    pub lower: u128,
    pub upper: u128,
}

impl IntersectionBounds {
    pub fn contains(&self, value: u128) -> bool {
        self.lower <= value && value <= self.upper
    }
}

fn check_delta(n: usize, t: usize, delta: usize) -> Result<()> {
    if delta > t {
        return Err(Error::Precondition(format!("distance {delta} exceeds t = {t}")));
    }
    if t > n {
        return Err(Error::Precondition(format!("t = {t} exceeds n = {n}")));
    }
    Ok(())
}

/// `Σ_{i=0}^{t−δ} C(n − 2δ, i)·base^i`, with `n − 2δ` clamped at zero.
fn lower_sum(n: usize, t: usize, delta: usize, base: u64) -> Result<u128> {
    let m = n.saturating_sub(2 * delta) as u64;
    let mut total = 0u128;
    for i in 0..=(t - delta) as u64 {
        total = add(total, mul(binomial(m, i)?, pow(base, i)?)?)?;
    }
    Ok(total)
}

/// Pair bound for `k− = 0` and `d_{k+}(x, y) = δ`:
///
/// ```text
/// Σ_{i=0}^{t−δ} C(n−2δ, i)(k+)^i  ≤  N(x, y; t, k+, 0)
///     ≤  Σ_{i=0}^{t−δ} C(n−δ, i)(k+)^i Σ_{k=max(δ+i−t, 0)}^{t−i} C(δ, k)(k+ − 1)^{δ−k}
/// ```
pub fn intersection_bounds_asymmetric(n: usize, t: usize, k_plus: u32, delta: usize) -> Result<IntersectionBounds> {
    check_delta(n, t, delta)?;
    let kp = u64::from(k_plus);
    let lower = lower_sum(n, t, delta, kp)?;
    let mut upper = 0u128;
    for i in 0..=(t - delta) {
        let mut inner = 0u128;
        for k in (delta + i).saturating_sub(t)..=(t - i).min(delta) {
            let term = mul(
                binomial(delta as u64, k as u64)?,
                pow(kp.saturating_sub(1), (delta - k) as u64)?,
            )?;
            inner = add(inner, term)?;
        }
        let outer = mul(binomial((n - delta) as u64, i as u64)?, pow(kp, i as u64)?)?;
        upper = add(upper, mul(outer, inner)?)?;
    }
    Ok(IntersectionBounds { lower, upper })
}

/// Pair bound for `k− ≥ 1` and `d_{k+,k−}(x, y) = δ`:
///
/// ```text
/// Σ_{i=0}^{t−δ} C(n−2δ, i)(k++k−)^i  ≤  N(x, y; t, k+, k−)  ≤  Σ_{i=0}^{t−δ} C(n, i)(k++k−)^{i+2δ}
/// ```
pub fn intersection_bounds_general(
    n: usize,
    t: usize,
    k_plus: u32,
    k_minus: u32,
    delta: usize,
) -> Result<IntersectionBounds> {
    check_delta(n, t, delta)?;
    if k_minus == 0 {
        return Err(Error::Precondition("the general bound needs k- >= 1".into()));
    }
    let span = u64::from(k_plus) + u64::from(k_minus);
    let lower = lower_sum(n, t, delta, span)?;
    let mut upper = 0u128;
    for i in 0..=(t - delta) as u64 {
        let term = mul(binomial(n as u64, i)?, pow(span, i + 2 * delta as u64)?)?;
        upper = add(upper, term)?;
    }
    Ok(IntersectionBounds { lower, upper })
}

/// `N(C; t, k+, k−)`: largest pairwise intersection over distinct codewords.
pub fn max_intersection_of_code(code: &[IntegerVector], p: &ChannelParams, cap: u128) -> Result<u128> {
    let mut members: Vec<&IntegerVector> = code.iter().collect();
    members.sort();
    members.dedup();
    if members.len() < 2 {
        return Err(Error::TooFewCodewords);
    }
    let mut best = 0;
    for (i, x) in members.iter().enumerate() {
        for y in &members[i + 1..] {
            best = best.max(intersection_exact(x, y, p, cap)?);
        }
    }
    Ok(best)
}
