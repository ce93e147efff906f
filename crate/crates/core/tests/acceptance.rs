//! Acceptance suite. Runs as a plain binary so that one PASS/FAIL line per
//! criterion is always printed. Pass criterion numbers as arguments to run a
//! subset, e.g. `cargo test --test acceptance -- 4 5`.

use std::collections::{BTreeSet, HashMap};
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use itertools::Itertools;
use lmrecon::combinatorics::{
    ball_size, enumerate_ball, intersection_bounds_asymmetric, intersection_bounds_general, intersection_exact,
    max_intersection_whole_space, DEFAULT_ENUMERATION_CAP as CAP,
};
use lmrecon::distances::{code_min_distance, correction_capability_oracle, distance_asymmetric, distance_general};
use lmrecon::lattice::{
    check_partial_splitting, check_recon_n1_asym, check_recon_n2, construct_n1_code, construct_n2_code,
    cyclic_splitters, find_splitter_cyclic, lattice_min_distance, min_group_order_bound, short_lattice_vectors,
    syndrome, LatticeCode, SplitterSpec,
};
use lmrecon::reconstruction::{
    adversarial_instance, list_params_general, list_reconstruct_majority, list_reconstruct_sauer, majority_estimate,
    majority_threshold, reads_required_min, reads_required_sauer, reconstruct_majority, reconstruct_min, ListParams,
    ReadSet,
};
use lmrecon::tandem::{descendants_exact, reads_required_simplex, reconstruct_simplex_min, SimplexCode};
use lmrecon::{ChannelParams, Code, ExplicitCode, IntegerVector, WholeSpace};
use rand::seq::index::sample;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn lib<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

// Independent reference arithmetic.

fn binom(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * u128::from(n - i) / u128::from(i + 1))
}

/// `Σ_{i≤r} C(n, i)(q − 1)^i`.
fn vol(q: u64, n: u64, r: u64) -> u128 {
    (0..=r.min(n))
        .map(|i| binom(n, i) * u128::from(q - 1).pow(i as u32))
        .sum()
}

fn params(n: usize, t: usize, kp: u32, km: u32) -> ChannelParams {
    ChannelParams::new(n, t, kp, km).expect("valid parameters")
}

/// Direct membership test for `y ∈ x + B(n, t, k+, k−)`.
fn in_ball(x: &[i64], y: &[i64], p: &ChannelParams) -> bool {
    let (kp, km) = (i64::from(p.k_plus()), i64::from(p.k_minus()));
    let mut weight = 0;
    for (a, b) in x.iter().zip(y) {
        let d = b - a;
        if d > kp || d < -km {
            return false;
        }
        weight += usize::from(d != 0);
    }
    weight <= p.t()
}

fn cube(n: usize, lo: i64, hi: i64) -> impl Iterator<Item = IntegerVector> {
    (0..n)
        .map(|_| lo..=hi)
        .multi_cartesian_product()
        .map(IntegerVector::new)
}

fn lattice_points(spec: &SplitterSpec, w: i64) -> Vec<IntegerVector> {
    cube(spec.n(), -w, w)
        .filter(|x| syndrome(spec, x.entries()).unwrap().is_identity())
        .collect()
}

/// First cyclic splitter, by group order and then lexicographically, whose
/// lattice has distance at least `delta`.
fn lattice_with_distance(n: usize, kp: u32, km: u32, delta: usize) -> SplitterSpec {
    (2u64..)
        .find_map(|order| {
            find_splitter_cyclic(n, order, |s| Ok(lattice_min_distance(s, kp, km, CAP)? >= delta)).unwrap()
        })
        .unwrap()
}

fn translate(x: &IntegerVector, by: &IntegerVector) -> IntegerVector {
    IntegerVector::new(x.iter().zip(by.iter()).map(|(a, b)| a + b).collect())
}

/// Intersection equals the whole-space value at `e₁`, and a literal pair scan
/// over `[−2, 2]ⁿ` never exceeds it.
fn criterion_1() -> Check {
    let mut cells = 0;
    let mut pairs = 0u64;
    for n in 1..=5usize {
        for t in 1..=n {
            for kp in 1..=2u32 {
                for km in 0..=kp {
                    let p = params(n, t, kp, km);
                    let k = u64::from(kp + km);
                    let formula = u128::from(k) * vol(k + 1, n as u64 - 1, t as u64 - 1);
                    ensure!(
                        lib(max_intersection_whole_space(&p))? == formula,
                        "closed form differs at {p:?}"
                    );
                    let zero = IntegerVector::zeros(n);
                    let e1 = IntegerVector::unit(n, 0);
                    let got = lib(intersection_exact(&zero, &e1, &p, CAP))?;
                    ensure!(got == formula, "N(0, e1) = {got}, formula {formula} at {p:?}");
                    cells += 1;
                    if n > 3 {
                        continue;
                    }
                    let window: Vec<IntegerVector> = cube(n, -2, 2).collect();
                    for (i, x) in window.iter().enumerate() {
                        for y in &window[i + 1..] {
                            let v = lib(intersection_exact(x, y, &p, CAP))?;
                            ensure!(v <= formula, "pair {x} {y} meets in {v} > {formula} at {p:?}");
                            pairs += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{cells} cells exact, {pairs} window pairs within bound"))
}

/// Seeded pairs at distance `1 ≤ δ ≤ t` obey the lemma's bounds.
fn criterion_2() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let spans = [(1u32, 0u32), (2, 0), (3, 0), (1, 1), (2, 1)];
    let mut checked = 0;
    for n in 1..=6usize {
        for t in 1..=n.min(3) {
            for &(kp, km) in &spans {
                let p = params(n, t, kp, km);
                let k = i64::from(kp + km);
                let mut accepted = 0;
                let mut attempts = 0;
                while accepted < 500 {
                    attempts += 1;
                    ensure!(attempts < 200_000, "could not draw pairs at {p:?}");
                    let x: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
                    let support = rng.gen_range(1..=n);
                    let mut y = x.clone();
                    for i in sample(&mut rng, n, support) {
                        let mut d = 0;
                        while d == 0 {
                            d = rng.gen_range(-(k + 1)..=k + 1);
                        }
                        y[i] += d;
                    }
                    let delta = if km == 0 {
                        lib(distance_asymmetric(&x, &y, kp))?
                    } else {
                        lib(distance_general(&x, &y, kp, km))?
                    };
                    if delta == 0 || delta > t {
                        continue;
                    }
                    let bounds = if km == 0 {
                        lib(intersection_bounds_asymmetric(n, t, kp, delta))?
                    } else {
                        lib(intersection_bounds_general(n, t, kp, km, delta))?
                    };
                    let (xv, yv) = (IntegerVector::new(x), IntegerVector::new(y));
                    let exact = lib(intersection_exact(&xv, &yv, &p, CAP))?;
                    ensure!(
                        bounds.lower <= exact && exact <= bounds.upper,
                        "{xv} {yv} at {p:?}, delta {delta}: {} <= {exact} <= {} fails",
                        bounds.lower,
                        bounds.upper
                    );
                    accepted += 1;
                }
                checked += accepted;
            }
        }
    }
    Ok(format!("{checked} pairs, zero violations"))
}

/// Disjoint radius-`e` balls iff minimum distance at least `e + 1`.
fn criterion_3() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut cases = 0;
    for _ in 0..1000 {
        let n = rng.gen_range(1..=4usize);
        let kp = rng.gen_range(1..=2u32);
        let km = rng.gen_range(0..=kp);
        let space: Vec<IntegerVector> = cube(n, 0, 3).collect();
        let size = rng.gen_range(2..=8usize.min(space.len()));
        let code: Vec<IntegerVector> = space.choose_multiple(&mut rng, size).cloned().collect();
        let p = params(n, n, kp, km);
        let d = lib(code_min_distance(&code, kp, km))?;
        for e in 0..=n.min(2) {
            let corrects = lib(correction_capability_oracle(&code, &p, e, CAP))?;
            ensure!(
                corrects == (d > e),
                "code {code:?} (k+={kp}, k-={km}): distance {d}, radius {e} disjoint = {corrects}"
            );
            cases += 1;
        }
    }
    Ok(format!("1000 codes, {cases} (code, e) cases agree"))
}

/// Whether some `count`-subset of `pool` has componentwise minimum `z`, and
/// one such subset.
fn subset_with_min(pool: &[IntegerVector], z: &IntegerVector, count: usize) -> Option<Vec<IntegerVector>> {
    let above: Vec<&IntegerVector> = pool
        .iter()
        .filter(|y| y.iter().zip(z.iter()).all(|(a, b)| a >= b))
        .collect();
    if above.len() < count {
        return None;
    }
    let n = z.len();
    for size in 1..=count.min(n).min(above.len()) {
        for hit in above.iter().copied().combinations(size) {
            if IntegerVector::componentwise_min(hit.iter().copied()).as_ref() == Some(z) {
                let mut set: Vec<IntegerVector> = hit.iter().map(|v| (*v).clone()).collect();
                set.extend(
                    above
                        .iter()
                        .filter(|v| !hit.contains(v))
                        .take(count - size)
                        .map(|v| (*v).clone()),
                );
                return Some(set);
            }
        }
    }
    None
}

/// The min-based decoder on every `N`-subset of `x + B`, for `k− = 0`.
///
/// The decoder's output depends only on the componentwise minimum once the
/// reads lie in `x + B`, so one representative subset per attainable minimum
/// covers every subset. Cells with at most 2·10⁵ subsets also run each subset
/// through the decoder.
fn min_completeness<C: Code + ?Sized>(
    code: &C,
    x: &IntegerVector,
    p: &ChannelParams,
    delta: usize,
) -> Result<(u128, bool), String> {
    let n_reads = lib(reads_required_min(p.n(), p.t(), p.k_plus(), delta))?;
    let pool: Vec<IntegerVector> = lib(enumerate_ball(p, CAP))?.iter().map(|e| translate(x, e)).collect();
    let kp = i64::from(p.k_plus());
    for w in cube(p.n(), 0, kp) {
        let z = translate(x, &w);
        if let Some(reads) = subset_with_min(&pool, &z, n_reads as usize) {
            let y = lib(ReadSet::new(reads, *p))?;
            let got = lib(reconstruct_min(&y, code, delta))?;
            ensure!(&got == x, "subsets with min {z} decode to {got}, not {x}");
        }
    }
    let subsets = binom(pool.len() as u64, n_reads as u64);
    if subsets > 200_000 {
        return Ok((subsets, false));
    }
    for reads in pool.iter().cloned().combinations(n_reads as usize) {
        let y = lib(ReadSet::new(reads, *p))?;
        let got = lib(reconstruct_min(&y, code, delta))?;
        ensure!(&got == x, "reads {:?} gave {got} for {x}", y.reads());
    }
    Ok((subsets, true))
}

fn criterion_4() -> Check {
    let mut literal = 0u128;
    let mut grouped = 0u128;
    let mut vacuous = Vec::new();
    let mut run =
        |code: &dyn Code, xs: &[IntegerVector], p: ChannelParams, delta: usize, label: String| -> Result<(), String> {
            let n_reads = lib(reads_required_min(p.n(), p.t(), p.k_plus(), delta))?;
            if n_reads > lib(ball_size(&p))? {
                vacuous.push(label);
                return Ok(());
            }
            for x in xs {
                let (count, exhaustive) = min_completeness(code, x, &p, delta)?;
                if exhaustive {
                    literal += count;
                } else {
                    grouped += count;
                }
            }
            Ok(())
        };
    for modulus in [2u64, 3] {
        for n in 1..=4usize {
            let spec = lib(SplitterSpec::all_ones(n, modulus))?;
            let mut xs = vec![IntegerVector::zeros(n)];
            xs.extend(lattice_points(&spec, 1).into_iter().filter(|v| v.weight() > 0).take(3));
            let code = LatticeCode::new(spec.clone());
            for kp in 1..=2u32 {
                let d = lib(lattice_min_distance(&spec, kp, 0, CAP))?;
                for t in 1..=n.min(2) {
                    let delta = d.min(t);
                    let label = format!("sum-mod:{modulus} n={n} t={t} k+={kp}");
                    run(&code, &xs, params(n, t, kp, 0), delta, label)?;
                }
            }
        }
    }
    // Scaled integer lattices mZⁿ, truncated to a box.
    for (m, kp) in [(2i64, 1u32), (3, 2)] {
        for n in 2..=4usize {
            let words: Vec<IntegerVector> = cube(n, -2, 2)
                .map(|v| IntegerVector::new(v.iter().map(|x| m * x).collect()))
                .collect();
            let code = lib(ExplicitCode::new(words.clone()))?;
            let d = lib(code_min_distance(&words, kp, 0))?;
            let t = 2;
            let delta = d.min(t);
            ensure!(delta >= 2, "{m}Z^{n} has distance {d}");
            let xs: Vec<IntegerVector> = cube(n, -1, 1)
                .map(|v| IntegerVector::new(v.iter().map(|x| m * x).collect()))
                .collect();
            run(
                &code,
                &xs,
                params(n, t, kp, 0),
                delta,
                format!("{m}Z^{n} t={t} k+={kp}"),
            )?;
        }
    }
    Ok(format!(
        "{literal} subsets decoded one by one, {grouped} more by minimum; vacuous (N > |B|): {}",
        if vacuous.is_empty() {
            "none".to_string()
        } else {
            vacuous.join(", ")
        }
    ))
}

/// Majority estimate budgets and exact recovery by the majority decoder.
fn criterion_5() -> Check {
    const SUBSET_CAP: u128 = 100_000;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut report = Vec::new();
    // The first two cells are the stated ones; the rest keep the ball small
    // enough for full enumeration.
    for (n, t, delta) in [
        (4usize, 2usize, 1usize),
        (4, 2, 2),
        (4, 1, 1),
        (3, 1, 1),
        (3, 2, 2),
        (2, 1, 1),
    ] {
        let p = params(n, t, 1, 1);
        let th = lib(majority_threshold(n, t, 1, 1, delta))?;
        let ball = lib(enumerate_ball(&p, CAP))?;
        if th.reads > ball.len() as u128 {
            report.push(format!(
                "({n},{t},{delta}) vacuous: N={} > |B|={}",
                th.reads,
                ball.len()
            ));
            continue;
        }
        let n_reads = th.reads as usize;
        let (code, xs): (Box<dyn Code>, Vec<IntegerVector>) = if delta == 1 {
            let x = IntegerVector::new([1, -2, 0, 3][..n].to_vec());
            (Box::new(WholeSpace::new(n)), vec![IntegerVector::zeros(n), x])
        } else {
            let spec = lattice_with_distance(n, 1, 1, delta);
            let other = short_lattice_vectors(&spec, 2, CAP).unwrap()[0].clone();
            (Box::new(LatticeCode::new(spec)), vec![IntegerVector::zeros(n), other])
        };
        let total = binom(ball.len() as u64, n_reads as u64);
        let mut checked = 0u64;
        for x in &xs {
            let pool: Vec<IntegerVector> = ball.iter().map(|e| translate(x, e)).collect();
            let mut check = |reads: Vec<IntegerVector>| -> Result<(), String> {
                let y = lib(ReadSet::new(reads, p))?;
                let z = majority_estimate(&y, &th.tau);
                ensure!(z.errors_against(x) < delta, "estimate {z} has too many errors for {x}");
                ensure!(
                    z.erasures().len() <= 2 * t * delta,
                    "estimate {z} has too many erasures"
                );
                let got = lib(reconstruct_majority(&y, &th.tau, code.as_ref(), delta))?;
                ensure!(&got == x, "decoded {got}, sent {x}");
                checked += 1;
                Ok(())
            };
            if total <= SUBSET_CAP {
                for reads in pool.iter().cloned().combinations(n_reads) {
                    check(reads)?;
                }
            } else {
                for _ in 0..SUBSET_CAP {
                    let mut idx = sample(&mut rng, pool.len(), n_reads).into_vec();
                    idx.sort_unstable();
                    check(idx.into_iter().map(|i| pool[i].clone()).collect())?;
                }
            }
        }
        let how = if total <= SUBSET_CAP { "all" } else { "sampled" };
        report.push(format!(
            "({n},{t},{delta}) N={} tau={} {how} {checked}",
            th.reads, th.tau
        ));
    }
    Ok(report.join("; "))
}

/// Lists contain the transmitted word and respect the size bounds.
fn criterion_6() -> Check {
    #[derive(Clone, Copy, PartialEq)]
    enum Alg {
        Majority,
        Sauer,
    }
    struct Cell {
        p: ChannelParams,
        delta: usize,
        a: usize,
        alg: Alg,
        reads: usize,
        bound: u128,
    }
    let mut cells = Vec::new();
    let mut skipped = 0;
    for (kp, km) in [(1u32, 0u32), (2, 0), (1, 1)] {
        let q = u64::from(kp + km) + 1;
        for n in 1..=4usize {
            for t in 1..=n.min(2) {
                let p = params(n, t, kp, km);
                let size = lib(ball_size(&p))?;
                for delta in 1..=t {
                    let f = t - delta + 1;
                    for a in 0..f {
                        lib(ListParams::new(t, delta, a))?;
                        let mut algs = vec![Alg::Sauer];
                        if km > 0 {
                            algs.push(Alg::Majority);
                        }
                        for alg in algs {
                            let (reads, bound) = match alg {
                                Alg::Majority => (
                                    lib(list_params_general(n, t, kp, km, delta, a))?.reads,
                                    u128::from(q).pow((2 * t * (delta + a)) as u32) * vol(q, n as u64, a as u64),
                                ),
                                Alg::Sauer => (
                                    lib(reads_required_sauer(n, t, kp, km, delta, a))?,
                                    u128::from(q).pow((2 * (f - a)) as u32) * vol(q, (n - f + a) as u64, a as u64),
                                ),
                            };
                            if reads > size {
                                skipped += 1;
                                continue;
                            }
                            cells.push(Cell {
                                p,
                                delta,
                                a,
                                alg,
                                reads: reads as usize,
                                bound,
                            });
                        }
                    }
                }
            }
        }
    }
    let per_cell = 10_000_usize.div_ceil(cells.len());
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut largest = 0.0f64;
    for cell in &cells {
        let n = cell.p.n();
        let (code, pool): (Box<dyn Code>, Option<Vec<IntegerVector>>) = if cell.delta == 1 {
            (Box::new(WholeSpace::new(n)), None)
        } else {
            let spec = lattice_with_distance(n, cell.p.k_plus(), cell.p.k_minus(), cell.delta);
            let mut words = short_lattice_vectors(&spec, 3, CAP).unwrap();
            words.push(IntegerVector::zeros(n));
            (Box::new(LatticeCode::new(spec)), Some(words))
        };
        let tau = match cell.alg {
            Alg::Majority => Some(
                lib(list_params_general(
                    n,
                    cell.p.t(),
                    cell.p.k_plus(),
                    cell.p.k_minus(),
                    cell.delta,
                    cell.a,
                ))?
                .tau,
            ),
            Alg::Sauer => None,
        };
        for _ in 0..per_cell {
            let x = match &pool {
                None => IntegerVector::new((0..n).map(|_| rng.gen_range(-5..=5)).collect()),
                Some(words) => words.choose(&mut rng).unwrap().clone(),
            };
            let y = lib(lmrecon::channel::random_reads(&x, &cell.p, cell.reads, &mut rng))?;
            let list = match cell.alg {
                Alg::Majority => lib(list_reconstruct_majority(
                    &y,
                    tau.as_ref().unwrap(),
                    code.as_ref(),
                    cell.delta,
                    cell.a,
                ))?,
                Alg::Sauer => lib(list_reconstruct_sauer(&y, code.as_ref(), cell.delta, cell.a))?,
            };
            let what = || format!("{:?} delta={} a={} reads {:?}", cell.p, cell.delta, cell.a, y.reads());
            ensure!(list.contains(&x), "{x} missing from list at {}", what());
            ensure!(
                list.len() as u128 <= cell.bound,
                "list of {} exceeds {} at {}",
                list.len(),
                cell.bound,
                what()
            );
            largest = largest.max(list.len() as f64 / cell.bound as f64);
        }
    }
    Ok(format!(
        "{} instances over {} cells ({skipped} cells need N > |B|), largest |L|/bound {largest:.3}",
        per_cell * cells.len(),
        cells.len()
    ))
}

/// Brute-force `max |(c + B) ∩ (c′ + B)|` over codeword pairs in `[−W, W]ⁿ`.
fn window_max_intersection(spec: &SplitterSpec, p: &ChannelParams, w: i64) -> Result<u128, String> {
    let points = lattice_points(spec, w);
    let reach = i64::from(p.k_plus() + p.k_minus());
    let mut best = 0;
    for (i, c) in points.iter().enumerate() {
        for d in &points[i + 1..] {
            if c.iter().zip(d.iter()).all(|(a, b)| (a - b).abs() <= reach) {
                best = best.max(lib(intersection_exact(c, d, p, CAP))?);
            }
        }
    }
    Ok(best)
}

fn criterion_7() -> Check {
    let mut checks = 0;
    for kp in 2..=4u32 {
        for km in 0..=kp {
            for n in 1..=3usize {
                let p = params(n, 1, kp, km);
                let w = i64::from(kp + km);
                if km == 0 {
                    let spec = lib(construct_n1_code(n, kp))?;
                    ensure!(
                        lib(check_recon_n1_asym(&spec, kp))?,
                        "one-read conditions fail for {spec}"
                    );
                    let m = window_max_intersection(&spec, &p, w)?;
                    ensure!(m <= 1, "{spec} at k+={kp}: intersection {m}");
                    let order = spec.group().order();
                    ensure!(order == u64::from(kp), "{spec} has order {order}");
                    ensure!(
                        lib(min_group_order_bound(kp, 0, n, 1))? == order,
                        "bound mismatch for {spec}"
                    );
                } else {
                    let spec = lib(construct_n2_code(n, kp, km))?;
                    ensure!(
                        lib(check_recon_n2(&spec, kp, km))?,
                        "two-read conditions fail for {spec}"
                    );
                    let m = window_max_intersection(&spec, &p, w)?;
                    ensure!(m <= 2, "{spec} at (k+,k-)=({kp},{km}): intersection {m}");
                    let order = spec.group().order();
                    ensure!(order == u64::from(kp + km - 1), "{spec} has order {order}");
                    ensure!(
                        lib(min_group_order_bound(kp, km, n, 2))? == order,
                        "bound mismatch for {spec}"
                    );
                }
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} constructions verified"))
}

/// Whether the balls around lattice points in `[−W, W]ⁿ` are pairwise
/// disjoint, by marking every covered point.
fn window_is_packing(spec: &SplitterSpec, p: &ChannelParams, w: i64) -> bool {
    let ball = enumerate_ball(p, CAP).unwrap();
    let mut owner: HashMap<IntegerVector, IntegerVector> = HashMap::new();
    for c in lattice_points(spec, w) {
        for e in &ball {
            if let Some(prev) = owner.insert(translate(&c, e), c.clone()) {
                if prev != c {
                    return false;
                }
            }
        }
    }
    true
}

fn criterion_8() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let spans = [(1u32, 0u32), (2, 0), (3, 0), (1, 1), (2, 1)];
    let mut agreements = 0;
    let mut packings = 0;
    for order in 2..=24u64 {
        let mut specs: Vec<SplitterSpec> = lib(cyclic_splitters(1, order))?.collect();
        specs.extend(lib(cyclic_splitters(2, order))?);
        let chosen: Vec<&SplitterSpec> = if specs.len() > 200 {
            specs.choose_multiple(&mut rng, 200).collect()
        } else {
            specs.iter().collect()
        };
        for spec in chosen {
            let n = spec.n();
            for &(kp, km) in &spans {
                for t in 1..=n {
                    let p = params(n, t, kp, km);
                    let claimed = lib(check_partial_splitting(spec, kp, km, t, CAP))?;
                    let w = 2 * i64::from(kp + km) + 1;
                    let brute = window_is_packing(spec, &p, w);
                    ensure!(
                        claimed == brute,
                        "{spec} (t={t}, k+={kp}, k-={km}): splitting {claimed}, packing {brute}"
                    );
                    agreements += 1;
                    packings += usize::from(brute);
                }
            }
        }
    }
    Ok(format!("{agreements} agreements ({packings} packings)"))
}

/// Reads are the transmitted simplex vector plus exactly `t` unit vectors.
fn criterion_9() -> Check {
    let m = 2;
    let mut sets = 0u64;
    for r in 1..=4u64 {
        for t in 1..=2usize {
            for delta in 1..=t {
                let code = lib(SimplexCode::greedy(m, r, delta))?;
                let n_reads = lib(reads_required_simplex(m, t, delta))? as usize;
                for x in code.words() {
                    let pool = descendants_exact(x, t);
                    for reads in pool.into_iter().combinations(n_reads) {
                        let got = lib(reconstruct_simplex_min(&reads, &code, delta))?;
                        ensure!(&got == x, "reads {reads:?} gave {got}, sent {x}");
                        sets += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{sets} read sets recovered"))
}

fn criterion_10() -> Check {
    let mut instances = 0;
    for (kp, km) in [(2u32, 0u32), (3, 0), (1, 1), (2, 1)] {
        let k = u64::from(kp + km);
        for n in 1..=12usize {
            for e in 0..=1usize {
                for a in 0..=2usize {
                    if n < 2 * e + a {
                        continue;
                    }
                    for t in (e + a).max(1)..=n.min(e + a + 2) {
                        let available = vol(k, n as u64, (t - e - a) as u64);
                        let inst = lib(adversarial_instance(n, t, kp, km, e, a, available))?;
                        let p = params(n, t, kp, km);
                        ensure!(inst.reads.len() as u128 == available, "read count at n={n} t={t}");
                        for x in inst.code.members() {
                            for y in inst.reads.reads() {
                                ensure!(in_ball(x.entries(), y.entries(), &p), "{y} outside ball of {x}");
                            }
                        }
                        let denom = ((e + a) as u128).pow(a as u32)
                            * (0..=e as u64).map(|i| binom((e + a) as u64, i)).sum::<u128>();
                        let size = inst.code.len() as u128;
                        ensure!(
                            size * denom >= (n as u128).pow(a as u32),
                            "|C| = {size} below {}^{a}/{denom} at n={n} e={e} a={a}",
                            n
                        );
                        instances += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{instances} instances"))
}

type Criterion = (&'static str, u64, fn() -> Check);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("whole-space intersection", 120, criterion_1),
        ("intersection bounds", 300, criterion_2),
        ("distance and correction", 300, criterion_3),
        ("min-based completeness", 600, criterion_4),
        ("majority budgets", 900, criterion_5),
        ("list guarantees", 600, criterion_6),
        ("lattice constructions", 120, criterion_7),
        ("splitting and packing", 300, criterion_8),
        ("tandem reconstruction", 120, criterion_9),
        ("adversarial instance", 120, criterion_10),
    ];
    let wanted: BTreeSet<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    panic::set_hook(Box::new(|_| {}));
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let id = i + 1;
        if !wanted.is_empty() && !wanted.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > Duration::from_secs(*limit) => Err(format!("{detail}; exceeded {limit}s")),
            other => other,
        };
        let (status, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!(
            "criterion {id:>2} {status} [{name}] {:.1}s: {detail}",
            elapsed.as_secs_f64()
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
