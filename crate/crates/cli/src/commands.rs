use itertools::Itertools;
use lmrecon::channel::{run_trials, trial_rng, Algorithm, ReadGenMode, ReadGenSpec, TrialSetup};
use lmrecon::combinatorics::{
    ball_size, enumerate_ball, intersection_bounds_asymmetric, intersection_bounds_general, intersection_exact,
    max_intersection_whole_space,
};
use lmrecon::distances::{correction_capability_oracle, distance_asymmetric, distance_general};
use lmrecon::lattice::{
    check_partial_splitting, check_recon_n1, check_recon_n1_asym, check_recon_n2, lattice_is_packing,
    lattice_max_intersection, SplitterSpec,
};
use lmrecon::reconstruction::{
    list_params_general, list_params_min, list_size_bound_majority, list_size_bound_min, list_size_bound_sauer,
    majority_threshold, reads_required_min, reads_required_sauer,
};
use lmrecon::tandem::{
    descendants_exact, reads_required_simplex, reconstruct_simplex_min, upward_ball, upward_ball_size, SimplexCode,
    SimplexVector,
};
use lmrecon::{ChannelParams, IntegerVector};
use num_rational::Ratio;
use rand::seq::index::sample;

use crate::codes::CodeSource;
use crate::report::{Report, Row, Value};

type Anchor = (&'static str, &'static str);

pub const BALL: Anchor = ("BALL", "|B(n,t,k+,k-)| = sum_{i=0..t} C(n,i) (k+ + k-)^i");
pub const WHOLE: Anchor = ("WHOLE", "N(Z^n) = (k+ + k-) V_{k+ + k- + 1}(n-1, t-1)");
pub const BOUND_ASYM: Anchor = (
    "BOUND-ASYM",
    "sum_{i<=t-d} C(n-2d,i) k+^i <= N <= sum_{i<=t-d} C(n-d,i) k+^i sum_k C(d,k)(k+ - 1)^(d-k)",
);
pub const BOUND_GEN: Anchor = (
    "BOUND-GEN",
    "sum_{i<=t-d} C(n-2d,i) K^i <= N <= sum_{i<=t-d} C(n,i) K^(i+2d), K = k+ + k-",
);
pub const DIST_ASYM: Anchor = (
    "DIST-ASYM",
    "max(#{x_i > y_i}, #{y_i > x_i}), or n+1 if some |x_i - y_i| > k+",
);
pub const DIST_GEN: Anchor = (
    "DIST-GEN",
    "ceil(max(N_small - |M_f - M_b|, 0)/2) + max(M_f, M_b) + N_large, or n+1 if some |x_i - y_i| > k+ + k-",
);
pub const SPLIT: Anchor = (
    "SPLIT",
    "e.s distinct and nonzero over 1 <= wt(e) <= t, e in [-k-, k+]^n",
);
pub const ONE_READ: Anchor = ("ONE-READ", "lattice conditions for N(L; 1) <= 1");
pub const TWO_READ: Anchor = ("TWO-READ", "lattice conditions for N(L; 1) <= 2");
pub const READS_MIN: Anchor = ("READS-MIN", "N = k+^d V_{k+ + 1}(n-d, t-d) + 1");
pub const READS_MAJ: Anchor = (
    "READS-MAJ",
    "N = K^(2d) V_{K+1}(n, t-d) + 1, tau = (1 - 2/d) N + (2/d) K^d V_{K+1}(n-d, t-d)",
);
pub const LIST_MIN: Anchor = (
    "LIST-MIN",
    "N = k+^(d+a) V_{k+ + 1}(n-d-a, f-1-a) + 1, |L| <= V_{k+ + 1}(n, a)",
);
pub const LIST_MAJ: Anchor = (
    "LIST-MAJ",
    "N = K^(d+a+1) V_{K+1}(n-d-a, f-1-a) + 1, |L| <= (K+1)^(2t(d+a)) V_{K+1}(n, a)",
);
pub const SAUER: Anchor = (
    "SAUER",
    "N = V_{K+1}(n, f-1-a) + 1, |L| <= (K+1)^(2(f-a)) V_{K+1}(n-f+a, a)",
);
pub const SIMPLEX_READS: Anchor = ("SIMPLEX-READS", "N = C(m+t-d, m) + 1");
pub const UPWARD_BALL: Anchor = ("UPWARD-BALL", "|B_t^+(x)| = C(m+1+t, m+1)");

fn verdict(ok: bool) -> &'static str {
    if ok {
        "MATCH"
    } else {
        "MISMATCH"
    }
}

/// A channel grid point in canonical order.
#[derive(Debug, Clone, Copy)]
pub struct Point {
    pub n: usize,
    pub t: usize,
    pub kp: u32,
    pub km: u32,
}

impl Point {
    pub fn label(&self) -> String {
        format!("n={} t={} k+={} k-={}", self.n, self.t, self.kp, self.km)
    }

    fn params(&self) -> Result<ChannelParams, String> {
        ChannelParams::new(self.n, self.t, self.kp, self.km).map_err(|e| e.to_string())
    }

    fn row(&self) -> Row {
        Row::new()
            .with("n", self.n)
            .with("t", self.t)
            .with("k+", self.kp)
            .with("k-", self.km)
    }
}

pub fn grid(ns: &[usize], ts: &[usize], kps: &[u32], kms: &[u32]) -> Vec<Point> {
    let mut out = Vec::new();
    for &n in ns {
        for &t in ts {
            for &kp in kps {
                for &km in kms {
                    out.push(Point { n, t, kp, km });
                }
            }
        }
    }
    out
}

pub fn ball(points: &[Point], oracle: bool, cap: u128, explain: bool) -> Report {
    let mut report = Report::default();
    report.uses(BALL);
    for pt in points {
        let p = match pt.params() {
            Ok(p) => p,
            Err(e) => {
                report.skip(pt.label(), e);
                continue;
            }
        };
        let size = match ball_size(&p) {
            Ok(s) => s,
            Err(e) => {
                report.skip(pt.label(), e);
                continue;
            }
        };
        let mut row = pt.row().with("size", size);
        if oracle {
            match enumerate_ball(&p, cap) {
                Ok(b) => {
                    let ok = b.len() as u128 == size;
                    report.mismatch |= !ok;
                    row = row.with("brute", b.len()).with("check", verdict(ok));
                }
                Err(e) => {
                    report.skip(pt.label(), e);
                    continue;
                }
            }
        }
        if explain {
            row.push("formula", BALL.0);
        }
        report.rows.push(row);
    }
    report
}

/// Pairs `(0, d)` with `d ∈ [−K, K]ⁿ` at distance exactly `delta`: the
/// smallest and largest intersection seen.
fn intersection_range(p: &ChannelParams, delta: usize, cap: u128) -> Result<Option<(u128, u128)>, String> {
    let k = i64::from(p.k_plus() + p.k_minus());
    let diffs = u128::from(2 * k as u64 + 1).saturating_pow(p.n() as u32);
    let work = diffs.saturating_mul(ball_size(p).map_err(|e| e.to_string())?);
    if work > cap {
        return Err(format!("brute-force scan needs {work} steps, above the cap {cap}"));
    }
    let zero = IntegerVector::zeros(p.n());
    let mut range: Option<(u128, u128)> = None;
    for d in (0..p.n()).map(|_| -k..=k).multi_cartesian_product() {
        let dist = if p.k_minus() == 0 {
            distance_asymmetric(&[0].repeat(p.n()), &d, p.k_plus())
        } else {
            distance_general(&[0].repeat(p.n()), &d, p.k_plus(), p.k_minus())
        }
        .map_err(|e| e.to_string())?;
        if dist != delta {
            continue;
        }
        let v = intersection_exact(&zero, &IntegerVector::new(d), p, cap).map_err(|e| e.to_string())?;
        range = Some(range.map_or((v, v), |(lo, hi)| (lo.min(v), hi.max(v))));
    }
    Ok(range)
}

pub fn intersect(points: &[Point], deltas: Option<&[usize]>, oracle: bool, cap: u128, explain: bool) -> Report {
    let mut report = Report::default();
    for pt in points {
        let p = match pt.params() {
            Ok(p) => p,
            Err(e) => {
                report.skip(pt.label(), e);
                continue;
            }
        };
        let Some(deltas) = deltas else {
            report.uses(WHOLE);
            let formula = match max_intersection_whole_space(&p) {
                Ok(v) => v,
                Err(e) => {
                    report.skip(pt.label(), e);
                    continue;
                }
            };
            let mut row = pt.row().with("formula", formula);
            if oracle {
                let e1 = IntegerVector::unit(p.n(), 0);
                match intersection_exact(&IntegerVector::zeros(p.n()), &e1, &p, cap) {
                    Ok(b) => {
                        report.mismatch |= b != formula;
                        row = row.with("brute", b).with("check", verdict(b == formula));
                    }
                    Err(e) => {
                        report.skip(pt.label(), e);
                        continue;
                    }
                }
            }
            if explain {
                row.push("anchor", WHOLE.0);
            }
            report.rows.push(row);
            continue;
        };
        for &delta in deltas {
            let label = format!("{} delta={delta}", pt.label());
            let (bounds, anchor) = if pt.km == 0 {
                (intersection_bounds_asymmetric(pt.n, pt.t, pt.kp, delta), BOUND_ASYM)
            } else {
                (intersection_bounds_general(pt.n, pt.t, pt.kp, pt.km, delta), BOUND_GEN)
            };
            let bounds = match bounds {
                Ok(b) if delta >= 1 => b,
                Ok(_) => {
                    report.skip(label, "delta must be at least 1");
                    continue;
                }
                Err(e) => {
                    report.skip(label, e);
                    continue;
                }
            };
            report.uses(anchor);
            let mut row = pt
                .row()
                .with("delta", delta)
                .with("lower", bounds.lower)
                .with("upper", bounds.upper);
            if oracle {
                match intersection_range(&p, delta, cap) {
                    Ok(Some((lo, hi))) => {
                        let ok = bounds.lower <= lo && hi <= bounds.upper;
                        report.mismatch |= !ok;
                        row = row
                            .with("brute-min", lo)
                            .with("brute-max", hi)
                            .with("check", verdict(ok));
                    }
                    Ok(None) => {
                        row = row
                            .with("brute-min", Value::Missing)
                            .with("brute-max", Value::Missing)
                            .with("check", "no pairs")
                    }
                    Err(e) => {
                        report.skip(label, e);
                        continue;
                    }
                }
            }
            if explain {
                row.push("anchor", anchor.0);
            }
            report.rows.push(row);
        }
    }
    report
}

pub fn distance(
    x: &IntegerVector,
    y: &IntegerVector,
    kp: u32,
    km: u32,
    oracle: bool,
    cap: u128,
    explain: bool,
) -> Result<Report, String> {
    let n = x.len();
    let p = ChannelParams::new(n, n, kp, km).map_err(|e| e.to_string())?;
    p.check_vector(y).map_err(|e| e.to_string())?;
    let (d, anchor) = if km == 0 {
        (distance_asymmetric(x, y, kp), DIST_ASYM)
    } else {
        (distance_general(x, y, kp, km), DIST_GEN)
    };
    let d = d.map_err(|e| e.to_string())?;
    let mut report = Report::default();
    report.uses(anchor);
    let mut row = Row::new()
        .with("x", lmrecon::textfmt::format_vector(x))
        .with("y", lmrecon::textfmt::format_vector(y))
        .with("k+", kp)
        .with("k-", km)
        .with("distance", d);
    if oracle {
        if x == y {
            return Err("the correction oracle needs x != y".into());
        }
        let words = [x.clone(), y.clone()];
        let mut largest = 0;
        for e in 0..=n {
            if correction_capability_oracle(&words, &p, e, cap).map_err(|e| e.to_string())? {
                largest = e;
            } else {
                break;
            }
        }
        let ok = largest + 1 == d;
        report.mismatch |= !ok;
        row = row
            .with("correctable", d - 1)
            .with("brute", largest)
            .with("check", verdict(ok));
    }
    if explain {
        row.push("anchor", anchor.0);
    }
    report.rows.push(row);
    Ok(report)
}

fn optional(r: lmrecon::Result<bool>) -> Value {
    r.map_or(Value::Missing, Value::Bool)
}

#[allow(clippy::too_many_arguments)]
pub fn check_splitting(
    spec: &SplitterSpec,
    ts: &[usize],
    kps: &[u32],
    kms: &[u32],
    window: Option<u64>,
    oracle: bool,
    cap: u128,
    explain: bool,
) -> Report {
    let mut report = Report::default();
    for pt in grid(&[spec.n()], ts, kps, kms) {
        let p = match pt.params() {
            Ok(p) => p,
            Err(e) => {
                report.skip(pt.label(), e);
                continue;
            }
        };
        let splitting = match check_partial_splitting(spec, pt.kp, pt.km, pt.t, cap) {
            Ok(v) => v,
            Err(e) => {
                report.skip(pt.label(), e);
                continue;
            }
        };
        report.uses(SPLIT);
        let one = if pt.km == 0 {
            check_recon_n1_asym(spec, pt.kp)
        } else {
            check_recon_n1(spec, pt.kp, pt.km)
        };
        let two = check_recon_n2(spec, pt.kp, pt.km);
        if one.is_ok() {
            report.uses(ONE_READ);
        }
        if two.is_ok() {
            report.uses(TWO_READ);
        }
        let mut row = Row::new()
            .with("code", spec.to_string())
            .with("t", pt.t)
            .with("k+", pt.kp)
            .with("k-", pt.km)
            .with("splitting", splitting)
            .with("one-read", optional(one.clone()))
            .with("two-read", optional(two.clone()));
        if oracle {
            let w = window.unwrap_or(p.span());
            let single = p.with_radius(1.min(p.n()));
            let brute = lattice_is_packing(spec, &p, w, cap)
                .and_then(|packing| Ok((packing, lattice_max_intersection(spec, &single, w, cap)?)));
            let (packing, max1) = match brute {
                Ok(v) => v,
                Err(e) => {
                    report.skip(pt.label(), e);
                    continue;
                }
            };
            let mut ok = packing == splitting;
            if let Ok(v) = one {
                ok &= v == (max1 <= 1);
            }
            if let Ok(v) = two {
                ok &= v == (max1 <= 2);
            }
            report.mismatch |= !ok;
            row = row
                .with("packing", packing)
                .with("max-int-1", max1)
                .with("check", verdict(ok));
        }
        if explain {
            row.push("anchor", SPLIT.0);
        }
        report.rows.push(row);
    }
    report
}

/// Options shared by `reconstruct`, `list` and `simulate`.
pub struct RunOptions {
    pub algs: Vec<Algorithm>,
    pub code: CodeSource,
    pub deltas: Option<Vec<usize>>,
    pub list_exponents: Vec<usize>,
    pub mode: ReadGenMode,
    pub reads: Option<usize>,
    pub seed: u64,
    pub trials: u64,
    pub x: Option<IntegerVector>,
    pub timing: bool,
    pub cap: u128,
    pub show_rate: bool,
}

type Requirements = (u128, Option<Ratio<i128>>, Option<u128>, Anchor);

/// Read count the guarantee needs, majority threshold, list-size bound.
fn requirements(alg: Algorithm, pt: &Point, delta: usize, a: usize) -> Result<Requirements, String> {
    let (n, t, kp, km) = (pt.n, pt.t, pt.kp, pt.km);
    let needs_asym = || {
        if km == 0 {
            Ok(())
        } else {
            Err(format!("{alg} decoding needs k- = 0"))
        }
    };
    let r = match alg {
        Algorithm::Min => {
            needs_asym()?;
            reads_required_min(n, t, kp, delta).map(|v| (v, None, None, READS_MIN))
        }
        Algorithm::Majority => {
            majority_threshold(n, t, kp, km, delta).map(|th| (th.reads, Some(th.tau), None, READS_MAJ))
        }
        Algorithm::ListMin => {
            needs_asym()?;
            list_params_min(n, t, kp, delta, a)
                .and_then(|v| Ok((v, None, Some(list_size_bound_min(n, kp, a)?), LIST_MIN)))
        }
        Algorithm::ListMajority => list_params_general(n, t, kp, km, delta, a).and_then(|th| {
            Ok((
                th.reads,
                Some(th.tau),
                Some(list_size_bound_majority(n, t, kp, km, delta, a)?),
                LIST_MAJ,
            ))
        }),
        Algorithm::Sauer => reads_required_sauer(n, t, kp, km, delta, a)
            .and_then(|v| Ok((v, None, Some(list_size_bound_sauer(n, t, kp, km, delta, a)?), SAUER))),
    };
    r.map_err(|e| e.to_string())
}

pub fn decode_grid(points: &[Point], opts: &RunOptions, explain: bool) -> Result<Report, String> {
    let mut report = Report::default();
    for &alg in &opts.algs {
        for pt in points {
            let label = format!("alg={alg} {}", pt.label());
            let p = match pt.params() {
                Ok(p) => p,
                Err(e) => {
                    report.skip(label, e);
                    continue;
                }
            };
            let instance = match opts.code.instantiate(pt.n) {
                Ok(i) => i,
                Err(e) => {
                    report.skip(label, e);
                    continue;
                }
            };
            let d = match instance.distance(pt.kp, pt.km, opts.cap) {
                Ok(d) => d,
                Err(e) => {
                    report.skip(label, e);
                    continue;
                }
            };
            let deltas = opts.deltas.clone().unwrap_or_else(|| vec![d.min(pt.t)]);
            let exponents = if alg.is_list() {
                opts.list_exponents.clone()
            } else {
                vec![0]
            };
            let x = opts.x.clone().unwrap_or_else(|| instance.default_word());
            if x.len() != pt.n {
                report.skip(label, format!("transmitted word has length {}", x.len()));
                continue;
            }
            if !instance.code().contains(&x) {
                return Err(format!(
                    "transmitted word {x} is not a codeword of {}",
                    opts.code.label()
                ));
            }
            for delta in deltas {
                for &a in &exponents {
                    let label = if alg.is_list() {
                        format!("{label} delta={delta} a={a}")
                    } else {
                        format!("{label} delta={delta}")
                    };
                    if delta == 0 || delta > pt.t {
                        report.skip(label, "need 1 <= delta <= t");
                        continue;
                    }
                    if delta > d {
                        report.skip(label, format!("code distance {d} is below delta"));
                        continue;
                    }
                    let (required, tau, bound, anchor) = match requirements(alg, pt, delta, a) {
                        Ok(r) => r,
                        Err(e) => {
                            report.skip(label, e);
                            continue;
                        }
                    };
                    let size = ball_size(&p).map_err(|e| e.to_string())?;
                    let count = match opts.reads {
                        Some(c) => c as u128,
                        None => required,
                    };
                    if count > size {
                        report.skip(label, format!("N = {count} exceeds the ball size {size}"));
                        continue;
                    }
                    let setup = TrialSetup {
                        algorithm: alg,
                        delta,
                        a,
                    };
                    let spec = ReadGenSpec {
                        mode: opts.mode,
                        count: count as usize,
                        seed: opts.seed,
                    };
                    let records = match run_trials(
                        instance.code(),
                        &setup,
                        &x,
                        &p,
                        &spec,
                        opts.trials,
                        opts.cap,
                        opts.timing,
                    ) {
                        Ok(r) => r,
                        Err(e) => {
                            report.skip(label, e);
                            continue;
                        }
                    };
                    report.uses(anchor);
                    let successes = records.iter().filter(|r| r.success).count();
                    let failures = records.len() - successes;
                    let largest = records.iter().filter_map(|r| r.list_size).max();
                    let over_bound = match (largest, bound) {
                        (Some(l), Some(b)) => l as u128 > b,
                        _ => false,
                    };
                    let status = if failures == 0 && !over_bound {
                        "ok"
                    } else if count < required {
                        "below-threshold"
                    } else {
                        report.mismatch = true;
                        "FAIL"
                    };
                    let mut row = Row::new()
                        .with("alg", alg.name())
                        .with("n", pt.n)
                        .with("t", pt.t)
                        .with("k+", pt.kp)
                        .with("k-", pt.km)
                        .with("delta", delta)
                        .with("a", alg.is_list().then_some(a))
                        .with("N", count)
                        .with("required", required)
                        .with("tau", tau)
                        .with("mode", opts.mode.to_string())
                        .with("trials", records.len())
                        .with("ok", successes)
                        .with("failed", failures);
                    if opts.show_rate {
                        let rate = if records.is_empty() {
                            0.0
                        } else {
                            successes as f64 / records.len() as f64
                        };
                        row.push("rate", format!("{rate:.4}"));
                    }
                    if opts.algs.iter().any(Algorithm::is_list) {
                        row.push("max-list", largest);
                        row.push("bound", bound);
                    }
                    row.push("status", status);
                    if explain {
                        row.push("anchor", anchor.0);
                    }
                    report.rows.push(row);
                    report.records.extend(records.iter().map(|r| r.to_json_line()));
                }
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Excess {
    /// Every read carries exactly t duplications.
    Exact,
    /// Reads carry up to t duplications.
    AtMost,
}

pub enum SimplexSource {
    File(SimplexCode),
    Greedy { m: usize, r: u64 },
}

pub struct TandemOptions {
    pub source: SimplexSource,
    pub ts: Vec<usize>,
    pub deltas: Option<Vec<usize>>,
    pub excess: Excess,
    pub mode: ReadGenMode,
    pub reads: Option<usize>,
    pub seed: u64,
    pub trials: u64,
    pub oracle: bool,
    pub cap: u128,
}

pub fn tandem(opts: &TandemOptions, explain: bool) -> Result<Report, String> {
    if opts.mode == ReadGenMode::Adversarial {
        return Err("tandem reads are exhaustive or random".into());
    }
    let mut report = Report::default();
    let (m, r) = match &opts.source {
        SimplexSource::File(c) => (c.m(), c.r()),
        SimplexSource::Greedy { m, r } => (*m, *r),
    };
    for &t in &opts.ts {
        let deltas = opts.deltas.clone().unwrap_or_else(|| match &opts.source {
            SimplexSource::File(c) => vec![c.delta().min(t)],
            SimplexSource::Greedy { .. } => vec![t],
        });
        for delta in deltas {
            let label = format!("m={m} r={r} t={t} delta={delta}");
            let code = match &opts.source {
                SimplexSource::File(c) if c.delta() >= delta => c.clone(),
                SimplexSource::File(c) => {
                    report.skip(label, format!("code is only checked for delta = {}", c.delta()));
                    continue;
                }
                SimplexSource::Greedy { m, r } => match SimplexCode::greedy(*m, *r, delta) {
                    Ok(c) => c,
                    Err(e) => {
                        report.skip(label, e);
                        continue;
                    }
                },
            };
            let required = match reads_required_simplex(m, t, delta) {
                Ok(v) => v,
                Err(e) => {
                    report.skip(label, e);
                    continue;
                }
            };
            report.uses(SIMPLEX_READS);
            let count = opts.reads.map_or(required, |c| c as u128) as usize;
            let mut sets = 0u128;
            let mut failures = 0u128;
            let mut skipped = None;
            for x in code.words() {
                let pool: Vec<SimplexVector> = match opts.excess {
                    Excess::Exact => descendants_exact(x, t),
                    Excess::AtMost => upward_ball(x, t, opts.cap).map_err(|e| e.to_string())?,
                };
                if count == 0 || count > pool.len() {
                    skipped = Some(format!("N = {count} outside [1, {}]", pool.len()));
                    break;
                }
                let mut check = |reads: &[SimplexVector]| {
                    sets += 1;
                    if reconstruct_simplex_min(reads, &code, delta).ok().as_ref() != Some(x) {
                        failures += 1;
                    }
                };
                match opts.mode {
                    ReadGenMode::Exhaustive => {
                        let total = lmrecon::combinatorics::binomial(pool.len() as u64, count as u64)
                            .map_err(|e| e.to_string())?;
                        if total > opts.cap {
                            skipped = Some(format!("{total} read sets exceed the cap {}", opts.cap));
                            break;
                        }
                        for reads in pool.iter().cloned().combinations(count) {
                            check(&reads);
                        }
                    }
                    _ => {
                        for trial in 0..opts.trials {
                            let mut rng = trial_rng(opts.seed, trial);
                            let reads: Vec<SimplexVector> = sample(&mut rng, pool.len(), count)
                                .into_iter()
                                .map(|i| pool[i].clone())
                                .collect();
                            check(&reads);
                        }
                    }
                }
            }
            if let Some(reason) = skipped {
                report.skip(label, reason);
                continue;
            }
            let status = if failures == 0 {
                "ok"
            } else if (count as u128) < required {
                "below-threshold"
            } else {
                report.mismatch = true;
                "FAIL"
            };
            let mut row = Row::new()
                .with("m", m)
                .with("r", r)
                .with("t", t)
                .with("delta", delta)
                .with(
                    "excess",
                    match opts.excess {
                        Excess::Exact => "exact",
                        Excess::AtMost => "at-most",
                    },
                )
                .with("words", code.words().len())
                .with("N", count)
                .with("required", required)
                .with("sets", sets)
                .with("ok", sets - failures)
                .with("failed", failures);
            if opts.oracle {
                report.uses(UPWARD_BALL);
                let formula = upward_ball_size(m, t).map_err(|e| e.to_string())?;
                let x = &code.words()[0];
                let brute = upward_ball(x, t, opts.cap).map_err(|e| e.to_string())?.len() as u128;
                report.mismatch |= brute != formula;
                row = row
                    .with("ball", formula)
                    .with("ball-brute", brute)
                    .with("check", verdict(brute == formula));
            }
            row.push("status", status);
            if explain {
                row.push("anchor", SIMPLEX_READS.0);
            }
            report.rows.push(row);
        }
    }
    Ok(report)
}
