//! Lattice codes `Λ = {x : x·s = 0}` defined by a splitter vector over a
//! finite Abelian group, and single-error reconstruction-code conditions.
//!
//! Groups are products of cyclic groups `Z_{m₁} × … × Z_{m_r}`.

use std::collections::HashSet;
use std::fmt;

use crate::code::Code;
use crate::combinatorics::{ball_size, intersection_exact, BallIter};
use crate::distances::distance_general;
use crate::{ChannelParams, Error, IntegerVector, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    moduli: Vec<u64>,
}

impl FiniteAbelianGroup {
    pub fn new(moduli: Vec<u64>) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::InvalidParams("group needs at least one modulus".into()));
        }
        if let Some(m) = moduli.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidParams(format!("modulus {m} is below 2")));
        }
        if moduli.iter().try_fold(1u64, |acc, &m| acc.checked_mul(m)).is_none() {
            return Err(Error::Overflow("group order"));
        }
        Ok(Self { moduli })
    }

    pub fn cyclic(order: u64) -> Result<Self> {
        Self::new(vec![order])
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn order(&self) -> u64 {
        self.moduli.iter().product()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(vec![0; self.moduli.len()])
    }

    /// Element with the given residues, each reduced into `[0, m)`.
    pub fn element(&self, residues: &[i64]) -> Result<GroupElement> {
        if residues.len() != self.moduli.len() {
            return Err(Error::LengthMismatch {
                expected: self.moduli.len(),
                found: residues.len(),
            });
        }
        Ok(GroupElement(
            residues
                .iter()
                .zip(&self.moduli)
                .map(|(&r, &m)| reduce(i128::from(r), m))
                .collect(),
        ))
    }

    /// The `index`-th element in mixed-radix order (last modulus fastest).
    pub fn element_at(&self, mut index: u64) -> GroupElement {
        let mut coords = vec![0; self.moduli.len()];
        for (c, &m) in coords.iter_mut().zip(&self.moduli).rev() {
            *c = index % m;
            index /= m;
        }
        GroupElement(coords)
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.moduli)
                .map(|((x, y), &m)| ((u128::from(*x) + u128::from(*y)) % u128::from(m)) as u64)
                .collect(),
        )
    }

    /// `k·g`, for any integer `k`.
    pub fn scale(&self, k: i64, g: &GroupElement) -> GroupElement {
        GroupElement(
            g.0.iter()
                .zip(&self.moduli)
                .map(|(&x, &m)| reduce(i128::from(k) * i128::from(x), m))
                .collect(),
        )
    }
}

fn reduce(v: i128, m: u64) -> u64 {
    v.rem_euclid(i128::from(m)) as u64
}

/// Residues, one per modulus of the owning group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(Vec<u64>);

impl GroupElement {
    pub fn coordinates(&self) -> &[u64] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let [c] = self.0.as_slice() {
            return write!(f, "{c}");
        }
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A group and a splitter vector `s ∈ Gⁿ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SplitterSpec {
    group: FiniteAbelianGroup,
    s: Vec<GroupElement>,
}

impl SplitterSpec {
    pub fn new(group: FiniteAbelianGroup, s: Vec<GroupElement>) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::InvalidParams("splitter vector is empty".into()));
        }
        for g in &s {
            if g.0.len() != group.moduli.len() || g.0.iter().zip(&group.moduli).any(|(c, m)| c >= m) {
                return Err(Error::InvalidParams(format!(
                    "splitter entry {g} is not an element of the group"
                )));
            }
        }
        Ok(Self { group, s })
    }

    /// `Z_order` with the given integer splitter entries (reduced mod `order`).
    pub fn cyclic(order: u64, s: &[i64]) -> Result<Self> {
        let group = FiniteAbelianGroup::cyclic(order)?;
        let s = s.iter().map(|&v| group.element(&[v])).collect::<Result<Vec<_>>>()?;
        Self::new(group, s)
    }

    /// `Z_order` with `s = (1, …, 1)`.
    pub fn all_ones(n: usize, order: u64) -> Result<Self> {
        Self::cyclic(order, &vec![1; n])
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn splitter(&self) -> &[GroupElement] {
        &self.s
    }

    pub fn n(&self) -> usize {
        self.s.len()
    }
}

impl fmt::Display for SplitterSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "group=")?;
        for (i, m) in self.group.moduli.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "Z{m}")?;
        }
        write!(f, "; s=[")?;
        for (i, g) in self.s.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "]")
    }
}

/// `Σ x[i]·s[i]`.
pub fn syndrome(spec: &SplitterSpec, x: &[i64]) -> Result<GroupElement> {
    if x.len() != spec.n() {
        return Err(Error::LengthMismatch {
            expected: spec.n(),
            found: x.len(),
        });
    }
    let g = &spec.group;
    Ok(x.iter()
        .zip(&spec.s)
        .filter(|(&xi, _)| xi != 0)
        .fold(g.identity(), |acc, (&xi, si)| g.add(&acc, &g.scale(xi, si))))
}

/// Whether every `e·s`, for `e ∈ [−k−, k+]ⁿ` with `1 ≤ wt(e) ≤ t`, is distinct
/// and not the identity.
pub fn check_partial_splitting(spec: &SplitterSpec, k_plus: u32, k_minus: u32, t: usize, cap: u128) -> Result<bool> {
    let params = ChannelParams::new(spec.n(), t.min(spec.n()), k_plus, k_minus)?;
    let size = ball_size(&params)?;
    if size > cap {
        return Err(Error::EnumerationCap { requested: size, cap });
    }
    let mut seen = HashSet::new();
    for e in BallIter::new(&params).filter(|e| e.weight() > 0) {
        let g = syndrome(spec, &e)?;
        if g.is_identity() || !seen.insert(g) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `a·s[i]` are pairwise distinct for `a ∈ [lo, hi]`, for every `i`.
fn per_coordinate_distinct(spec: &SplitterSpec, lo: i64, hi: i64) -> bool {
    spec.s.iter().all(|si| {
        let mut seen = HashSet::new();
        (lo..=hi).all(|a| seen.insert(spec.group.scale(a, si)))
    })
}

/// Radius-1 condition for `N(Λ; 1, k+, k−) ≤ 1` with `k− ≥ 1`.
///
/// Checked in the two-condition form: `a·s[i]` distinct over
/// `a ∈ [−k−, k+ − 1]`, and `a·s[i] ≠ b·s[j]` for `i < j` and
/// `(a, b) ∈ [−k−, k−]² \ {(0, 0)}`.
pub fn check_recon_n1(spec: &SplitterSpec, k_plus: u32, k_minus: u32) -> Result<bool> {
    if k_minus < 1 || k_minus > k_plus {
        return Err(Error::Precondition(format!(
            "need 1 <= k- <= k+, got k+={k_plus}, k-={k_minus}"
        )));
    }
    let (kp, km) = (i64::from(k_plus), i64::from(k_minus));
    if !per_coordinate_distinct(spec, -km, kp - 1) {
        return Ok(false);
    }
    // With a = 0 or b = 0 the pair condition forbids zero multiples at every
    // coordinate (n ≥ 2); otherwise the multiple sets must be disjoint.
    let g = &spec.group;
    let mut earlier: HashSet<GroupElement> = HashSet::new();
    for sj in &spec.s {
        let multiples: Vec<GroupElement> = (-km..=km).filter(|&b| b != 0).map(|b| g.scale(b, sj)).collect();
        if spec.n() > 1 && multiples.iter().any(GroupElement::is_identity) {
            return Ok(false);
        }
        if multiples.iter().any(|m| earlier.contains(m)) {
            return Ok(false);
        }
        earlier.extend(multiples);
    }
    Ok(true)
}

/// Radius-1 condition for `N(Λ; 1, k+, 0) ≤ 1`: `a·s[i]` distinct over `a ∈ [0, k+ − 1]`.
pub fn check_recon_n1_asym(spec: &SplitterSpec, k_plus: u32) -> Result<bool> {
    if k_plus < 2 {
        return Err(Error::Precondition(format!("need k+ >= 2, got {k_plus}")));
    }
    Ok(per_coordinate_distinct(spec, 0, i64::from(k_plus) - 1))
}

/// Radius-1 condition for `N(Λ; 1, k+, k−) ≤ 2`: `a·s[i]` distinct over `a ∈ [−k−, k+ − 2]`.
pub fn check_recon_n2(spec: &SplitterSpec, k_plus: u32, k_minus: u32) -> Result<bool> {
    if k_minus < 1 || k_minus > k_plus || k_plus + k_minus < 3 {
        return Err(Error::Precondition(format!(
            "need 1 <= k- <= k+ and k+ + k- >= 3, got k+={k_plus}, k-={k_minus}"
        )));
    }
    Ok(per_coordinate_distinct(
        spec,
        -i64::from(k_minus),
        i64::from(k_plus) - 2,
    ))
}

/// `Σ x[i] ≡ 0 (mod k+)`, reaching `N(Λ; 1, k+, 0) ≤ 1`.
pub fn construct_n1_code(n: usize, k_plus: u32) -> Result<SplitterSpec> {
    if k_plus < 2 {
        return Err(Error::InvalidParams(format!("need k+ >= 2, got {k_plus}")));
    }
    SplitterSpec::all_ones(n, u64::from(k_plus))
}

/// `Σ x[i] ≡ 0 (mod k+ + k− − 1)`, reaching `N(Λ; 1, k+, k−) ≤ 2`.
pub fn construct_n2_code(n: usize, k_plus: u32, k_minus: u32) -> Result<SplitterSpec> {
    if k_minus < 1 || k_minus > k_plus || k_plus + k_minus < 3 {
        return Err(Error::InvalidParams(format!(
            "need 1 <= k- <= k+ and k+ + k- >= 3, got k+={k_plus}, k-={k_minus}"
        )));
    }
    SplitterSpec::all_ones(n, u64::from(k_plus) + u64::from(k_minus) - 1)
}

/// Lower bound on `|Zⁿ/Λ|` for a lattice with `N(Λ; 1, k+, k−) ≤ target`.
pub fn min_group_order_bound(k_plus: u32, k_minus: u32, n: usize, target: u32) -> Result<u64> {
    let (kp, km, n) = (u64::from(k_plus), u64::from(k_minus), n as u64);
    if k_plus == 0 || km > kp {
        return Err(Error::InvalidParams(format!(
            "need 0 <= k- <= k+ and k+ >= 1, got k+={k_plus}, k-={k_minus}"
        )));
    }
    let span = kp + km;
    match (target, km) {
        (1, 0) => Ok(kp),
        (1, _) if kp > km => Ok((2 * n * km + 1).max(span)),
        (1, _) => Ok((n * (span - 1) + 1).max(span)),
        (2, 0) => Err(Error::InvalidParams("the two-read bound is stated for k- >= 1".into())),
        (2, _) => Ok((span - 1).max(1)),
        _ => Err(Error::InvalidParams(format!("unsupported target read count {target}"))),
    }
}

/// Non-zero codewords in `[−k+−k−, k+ + k−]ⁿ`, the only differences at which
/// two radius-limited balls can meet.
pub fn short_lattice_vectors(spec: &SplitterSpec, span: u64, cap: u128) -> Result<Vec<IntegerVector>> {
    let side = 2 * u128::from(span) + 1;
    let total = side
        .checked_pow(spec.n() as u32)
        .filter(|&v| v <= cap)
        .ok_or(Error::EnumerationCap {
            requested: side.saturating_pow(spec.n() as u32),
            cap,
        })?;
    let span = span as i64;
    let mut out = Vec::new();
    let mut d = vec![-span; spec.n()];
    for _ in 0..total {
        if d.iter().any(|&v| v != 0) && syndrome(spec, &d)?.is_identity() {
            out.push(IntegerVector::new(d.clone()));
        }
        for v in d.iter_mut().rev() {
            if *v < span {
                *v += 1;
                break;
            }
            *v = -span;
        }
    }
    Ok(out)
}

/// Minimum `d_{k+,k−}` over the lattice: the least distance from `0` to a
/// non-zero codeword, or `n + 1` when no codeword lies within `±(k+ + k−)`.
pub fn lattice_min_distance(spec: &SplitterSpec, k_plus: u32, k_minus: u32, cap: u128) -> Result<usize> {
    let span = u64::from(k_plus) + u64::from(k_minus);
    let zero = vec![0; spec.n()];
    let mut best = spec.n() + 1;
    for d in short_lattice_vectors(spec, span, cap)? {
        best = best.min(distance_general(&d, &zero, k_plus, k_minus)?);
    }
    Ok(best)
}

/// `max |(x + B) ∩ (y + B)|` over distinct codewords `x, y ∈ [−W, W]ⁿ`.
///
/// Intersections depend only on `y − x`, and vanish once some coordinate of
/// `y − x` exceeds `k+ + k−`. A difference `d` is realised inside the window
/// iff `|d[i]| ≤ 2W`, so the scan runs over short lattice vectors within that
/// bound.
pub fn lattice_max_intersection(spec: &SplitterSpec, params: &ChannelParams, window: u64, cap: u128) -> Result<u128> {
    if params.n() != spec.n() {
        return Err(Error::LengthMismatch {
            expected: spec.n(),
            found: params.n(),
        });
    }
    let reach = params.span().min(2 * window);
    let zero = IntegerVector::zeros(spec.n());
    let mut best = 0;
    for d in short_lattice_vectors(spec, reach, cap)? {
        best = best.max(intersection_exact(&zero, &d, params, cap)?);
    }
    Ok(best)
}

/// Whether the translates `c + B(n, t, k+, k−)`, `c ∈ Λ ∩ [−W, W]ⁿ`, are disjoint.
pub fn lattice_is_packing(spec: &SplitterSpec, params: &ChannelParams, window: u64, cap: u128) -> Result<bool> {
    Ok(lattice_max_intersection(spec, params, window, cap)? == 0)
}

/// Codewords in the box `[lo, lo + width)ⁿ` and the box volume.
pub fn window_density(spec: &SplitterSpec, lo: i64, width: u64, cap: u128) -> Result<(u128, u128)> {
    let total = u128::from(width)
        .checked_pow(spec.n() as u32)
        .filter(|&v| v <= cap)
        .ok_or(Error::EnumerationCap {
            requested: u128::from(width).saturating_pow(spec.n() as u32),
            cap,
        })?;
    if width == 0 {
        return Ok((0, 0));
    }
    let hi = lo + width as i64 - 1;
    let mut x = vec![lo; spec.n()];
    let mut count = 0;
    for _ in 0..total {
        if syndrome(spec, &x)?.is_identity() {
            count += 1;
        }
        for v in x.iter_mut().rev() {
            if *v < hi {
                *v += 1;
                break;
            }
            *v = lo;
        }
    }
    Ok((count, total))
}

/// All splitter vectors over `Z_order` of length `n`, in lexicographic order.
pub fn cyclic_splitters(n: usize, order: u64) -> Result<impl Iterator<Item = SplitterSpec>> {
    let group = FiniteAbelianGroup::cyclic(order)?;
    let count = order.checked_pow(n as u32).ok_or(Error::Overflow("splitter count"))?;
    Ok((0..count).map(move |mut idx| {
        let mut s = vec![group.identity(); n];
        for si in s.iter_mut().rev() {
            *si = group.element_at(idx % order);
            idx /= order;
        }
        SplitterSpec {
            group: group.clone(),
            s,
        }
    }))
}

/// First splitter over `Z_order` (lexicographic) accepted by `accept`.
pub fn find_splitter_cyclic<F>(n: usize, order: u64, mut accept: F) -> Result<Option<SplitterSpec>>
where
    F: FnMut(&SplitterSpec) -> Result<bool>,
{
    for spec in cyclic_splitters(n, order)? {
        if accept(&spec)? {
            return Ok(Some(spec));
        }
    }
    Ok(None)
}

/// The lattice code of a splitter. Decoding scans `z − e` in lexicographic
/// error order and tests the syndrome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeCode {
    spec: SplitterSpec,
}

impl LatticeCode {
    pub fn new(spec: SplitterSpec) -> Self {
        Self { spec }
    }

    pub fn spec(&self) -> &SplitterSpec {
        &self.spec
    }
}

/// Cap on `(2(k+ + k−) + 1)ⁿ` for the distance computed through [`Code`].
const MIN_DISTANCE_CAP: u128 = 10_000_000;

impl Code for LatticeCode {
    fn length(&self) -> usize {
        self.spec.n()
    }

    fn contains(&self, v: &IntegerVector) -> bool {
        matches!(syndrome(&self.spec, v), Ok(g) if g.is_identity())
    }

    fn min_distance(&self, k_plus: u32, k_minus: u32) -> Option<usize> {
        lattice_min_distance(&self.spec, k_plus, k_minus, MIN_DISTANCE_CAP).ok()
    }
}
