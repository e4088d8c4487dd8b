//! Oracle-equality sweeps: each compares a closed form or a transform with
//! the exhaustive oracles over a parameter range or a seeded random sample,
//! and reports the first disagreement.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arrays::{
    check_balance, check_forest, check_full, check_nonempty, classify_columns, is_irreducible,
    Cells, SubstructureGamma, SubstructureOmega,
};
use crate::brute::{self, weak_compositions};
use crate::combinatorics::{
    binomial, double_factorial, factorial, CycleCountVector, MapClass, TwoRowGround,
};
use crate::error::Result;
use crate::formulas;
use crate::transforms::{self, Closure};

/// Outcome of one sweep.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
    /// Named case counters, e.g. how often each formula branch was hit.
    pub tallies: BTreeMap<String, usize>,
}

impl Report {
    fn new(suite: &str) -> Self {
        Report { suite: suite.to_string(), ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.fail(describe());
        }
    }

    fn fail(&mut self, what: String) {
        self.failures += 1;
        if self.first_failure.is_none() {
            self.first_failure = Some(what);
        }
    }

    fn tally(&mut self, key: &str) {
        *self.tallies.entry(key.to_string()).or_default() += 1;
    }

    /// Folds per-case results computed in parallel, in input order.
    fn absorb(&mut self, results: Vec<Result<Option<String>>>) {
        for r in results {
            match r {
                Ok(None) => self.check(true, String::new),
                Ok(Some(msg)) => self.check(false, || msg),
                Err(e) => self.check(false, || format!("error: {e}")),
            }
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {} cases, {} failures", self.suite, self.cases, self.failures)?;
        for (k, v) in &self.tallies {
            write!(f, ", {k}={v}")?;
        }
        if let Some(first) = &self.first_failure {
            write!(f, "; first: {first}")?;
        }
        Ok(())
    }
}

fn same<T: PartialEq + fmt::Debug>(what: String, formula: &T, oracle: &T) -> Option<String> {
    (formula != oracle).then(|| format!("{what}: closed form {formula:?} != oracle {oracle:?}"))
}

/// All `(q1, q2, s)` with `s >= 1` and `q1 + q2 + s = d`, for `d = 1..=max_d`.
pub fn two_row_params(max_d: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for d in 1..=max_d {
        for s in 1..=d {
            for q1 in 0..=(d - s) {
                out.push((q1, d - s - q1, s));
            }
        }
    }
    out
}

fn two_row_total(q1: usize, q2: usize, s: usize) -> Result<BigInt> {
    let (p1, p2) = ((2 * q1 + s) as i64, (2 * q2 + s) as i64);
    Ok(binomial(p1, s as i64)
        * binomial(p2, s as i64)
        * factorial(s as u64)
        * double_factorial(2 * q1 as i64 - 1)?
        * double_factorial(2 * q2 as i64 - 1)?)
}

fn count_shape(v: &CycleCountVector, class: MapClass, total: &BigInt) -> Option<String> {
    if let Err(e) = v.check_parity(class) {
        return Some(e.to_string());
    }
    (v.total() != *total).then(|| format!("counts sum to {}, expected {total}", v.total()))
}

/// One-vertex closed form against the oracle for `q = 1..=max_q`, with the
/// parity and total-count checks on both sides.
pub fn sweep_hz(max_q: usize) -> Report {
    let mut r = Report::new("hz");
    for q in 1..=max_q {
        let case = || -> Result<Option<String>> {
            let oracle = brute::hz_counts_brute(q)?;
            let formula = formulas::hz_counts(q)?;
            let total = double_factorial(2 * q as i64 - 1)?;
            Ok(same(format!("q={q}"), &formula, &oracle)
                .or_else(|| count_shape(&oracle, MapClass::OneVertex, &total))
                .or_else(|| count_shape(&formula, MapClass::OneVertex, &total)))
        };
        r.absorb(vec![case()]);
    }
    r
}

/// Two-vertex closed form against the oracle for all parameter triples
/// with `d <= max_d`.
pub fn sweep_gs(max_d: usize) -> Report {
    let mut r = Report::new("gs");
    let results = two_row_params(max_d)
        .into_iter()
        .map(|(q1, q2, s)| -> Result<Option<String>> {
            let oracle = brute::gs_counts_brute(q1, q2, s)?;
            let formula = formulas::gs_counts(q1, q2, s)?;
            let total = two_row_total(q1, q2, s)?;
            Ok(same(format!("(q1,q2,s)=({q1},{q2},{s})"), &formula, &oracle)
                .or_else(|| count_shape(&oracle, MapClass::TwoVertex, &total))
                .or_else(|| count_shape(&formula, MapClass::TwoVertex, &total)))
        })
        .collect();
    r.absorb(results);
    r
}

/// The triple-sum and double-sum series agree coefficientwise.
pub fn sweep_gs_simplified(max_q: usize, max_s: usize) -> Report {
    let mut r = Report::new("gs-simplified");
    let mut params = Vec::new();
    for q1 in 0..=max_q {
        for q2 in 0..=max_q {
            for s in 1..=max_s {
                params.push((q1, q2, s));
            }
        }
    }
    let results = params
        .into_par_iter()
        .map(|(q1, q2, s)| -> Result<Option<String>> {
            let a = formulas::gs_series(q1, q2, s)?;
            let b = formulas::gs_series_simplified(q1, q2, s)?;
            Ok((a != b).then(|| format!("({q1},{q2},{s}): triple sum {a} != double sum {b}")))
        })
        .collect();
    r.absorb(results);
    r
}

/// Brute `f_K` and `c_K` for one parameter triple and `K = 1..=2d`.
#[derive(Debug, Clone)]
pub struct SurjectionRow {
    pub params: (usize, usize, usize),
    pub f: BTreeMap<usize, BigInt>,
    pub c: BTreeMap<usize, BigInt>,
}

/// Tabulates the two oracles for `d <= max_d`; the table feeds the
/// surjection, series and canonical sweeps.
pub fn surjection_table(max_d: usize) -> Result<Vec<SurjectionRow>> {
    two_row_params(max_d)
        .into_iter()
        .map(|(q1, q2, s)| {
            let d = q1 + q2 + s;
            let mut f = BTreeMap::new();
            let mut c = BTreeMap::new();
            for k in 1..=2 * d {
                f.insert(k, brute::paired_surjection_count_brute(k, q1, q2, s)?);
                c.insert(k, brute::canonical_array_count_brute(k, q1, q2, s)?);
            }
            Ok(SurjectionRow { params: (q1, q2, s), f, c })
        })
        .collect()
}

/// Paired surjections and canonical arrays are equinumerous.
pub fn sweep_surjections(table: &[SurjectionRow]) -> Report {
    let mut r = Report::new("surjections");
    for row in table {
        let (q1, q2, s) = row.params;
        for (k, f) in &row.f {
            let c = &row.c[k];
            r.check(f == c, || format!("K={k}, ({q1},{q2},{s}): f_K={f} but c_K={c}"));
        }
    }
    r
}

/// `sum_K f_K C(x, K)` is the closed-form series.
pub fn sweep_series_from_surjections(table: &[SurjectionRow]) -> Report {
    let mut r = Report::new("series");
    let results = table
        .iter()
        .map(|row| -> Result<Option<String>> {
            let (q1, q2, s) = row.params;
            let from_f = formulas::series_from_surjections(&row.f);
            let closed = formulas::gs_series(q1, q2, s)?;
            Ok((from_f != closed)
                .then(|| format!("({q1},{q2},{s}): from f_K {from_f} != closed form {closed}")))
        })
        .collect();
    r.absorb(results);
    r
}

/// Canonical counts rebuilt from the vertical closed form.
pub fn sweep_canonical_from_vertical(table: &[SurjectionRow]) -> Report {
    let mut r = Report::new("canonical");
    for row in table {
        let (q1, q2, s) = row.params;
        let results = row
            .c
            .iter()
            .map(|(&k, c)| -> Result<Option<String>> {
                let v = formulas::canonical_from_vertical(k, q1, q2, s, formulas::vertical_count_formula)?;
                Ok(same(format!("K={k}, ({q1},{q2},{s})"), &v, c))
            })
            .collect();
        r.absorb(results);
    }
    r
}

/// Every paired surjection maps to a distinct proper canonical array, and
/// the images are exactly the canonical arrays.
pub fn sweep_labelled_to_canonical(max_d: usize) -> Report {
    let mut r = Report::new("labelled");
    for (q1, q2, s) in two_row_params(max_d) {
        let d = q1 + q2 + s;
        for k in 1..=2 * d {
            let case = || -> Result<Option<String>> {
                let ground = TwoRowGround::for_params(q1, q2, s)?;
                let mut images = BTreeSet::new();
                let mut sources = 0usize;
                let mut bad = None;
                brute::for_each_paired_surjection(k, q1, q2, s, |mu, pi| {
                    sources += 1;
                    match transforms::labelled_to_canonical(ground, mu, pi, k) {
                        Ok(a) => {
                            let proper = check_nonempty(&a) && check_balance(&a) && check_forest(&a);
                            if !proper && bad.is_none() {
                                bad = Some(format!("image of {pi:?} is not proper"));
                            }
                            images.insert(a);
                        }
                        Err(e) => bad = bad.take().or(Some(e.to_string())),
                    }
                })?;
                if let Some(b) = bad {
                    return Ok(Some(format!("K={k}, ({q1},{q2},{s}): {b}")));
                }
                let mut canonical = BTreeSet::new();
                brute::for_each_canonical_array(k, q1, q2, s, |a| {
                    canonical.insert(a.clone());
                })?;
                if images.len() != sources {
                    return Ok(Some(format!(
                        "K={k}, ({q1},{q2},{s}): {sources} surjections but {} distinct images",
                        images.len()
                    )));
                }
                Ok((images != canonical).then(|| {
                    format!(
                        "K={k}, ({q1},{q2},{s}): images ({}) differ from canonical arrays ({})",
                        images.len(),
                        canonical.len()
                    )
                }))
            };
            r.absorb(vec![case()]);
        }
    }
    r
}

/// Vertical closed form against the oracle for `K <= max_k`, `s <= max_s`,
/// `R1, R2 <= K`.
pub fn sweep_vertical(max_k: usize, max_s: usize) -> Report {
    let mut r = Report::new("vertical");
    let mut params = Vec::new();
    for k in 1..=max_k {
        for r1 in 1..=k {
            for r2 in 1..=k {
                for s in 1..=max_s {
                    params.push((k, r1, r2, s));
                }
            }
        }
    }
    let results = params
        .into_iter()
        .map(|(k, r1, r2, s)| -> Result<Option<String>> {
            let f = formulas::vertical_count_formula(k, r1, r2, s)?;
            let b = brute::vertical_array_count_brute(k, r1, r2, s)?;
            Ok(same(format!("v({k},{r1},{r2},{s})"), &f, &b))
        })
        .collect();
    r.absorb(results);
    r
}

/// `T(Omega)` closed form against the oracle over every occupancy `w` and
/// mark count with `K <= max_k`, `s <= max_s`.
pub fn sweep_omega(max_k: usize, max_s: usize) -> Report {
    let mut r = Report::new("omega");
    let mut cases = Vec::new();
    for k in 1..=max_k {
        for s in 1..=max_s {
            for w in weak_compositions(s, k) {
                for r1 in 1..=k {
                    for r2 in 1..=k {
                        cases.push((r1, r2, w.clone()));
                    }
                }
            }
        }
    }
    let results = cases
        .into_par_iter()
        .map(|(r1, r2, w)| -> Result<Option<String>> {
            let o = SubstructureOmega::new(r1, r2, w)?;
            let f = formulas::omega_count_formula(&o)?;
            let b = brute::omega_count_brute(&o)?;
            Ok(same(serde_json::to_string(&o).unwrap_or_default(), &f, &b))
        })
        .collect();
    r.absorb(results);
    r
}

// ---------------------------------------------------------------------------
// random substructures

fn nonempty_random_subset(rng: &mut ChaCha8Rng, k: usize, p: f64) -> BTreeSet<usize> {
    loop {
        let s: BTreeSet<usize> = (0..k).filter(|_| rng.gen_bool(p)).collect();
        if !s.is_empty() {
            return s;
        }
    }
}

/// Drops `extra` balls into `k` bins on top of `base`.
fn scatter(rng: &mut ChaCha8Rng, base: &[usize], extra: usize) -> Vec<usize> {
    let mut w = base.to_vec();
    let k = w.len();
    for _ in 0..extra {
        w[rng.gen_range(0..k)] += 1;
    }
    w
}

fn gamma_json(g: &SubstructureGamma) -> String {
    serde_json::to_string(g).unwrap_or_default()
}

/// Occupancy with `s` vertices per row, giving a vertex to every cell that
/// has no other object when `full` is set. `None` if `s` is too small.
fn random_occupancy(
    rng: &mut ChaCha8Rng,
    k: usize,
    s: usize,
    r1: &BTreeSet<usize>,
    r2: &BTreeSet<usize>,
    tails: &BTreeSet<usize>,
    full: bool,
) -> Option<[Vec<usize>; 2]> {
    let mut w = [vec![0; k], vec![0; k]];
    for row in 0..2 {
        let base: Vec<usize> = (0..k)
            .map(|j| {
                let has_object = if row == 0 {
                    r1.contains(&j) || tails.contains(&j)
                } else {
                    r2.contains(&j)
                };
                usize::from(full && !has_object)
            })
            .collect();
        let used: usize = base.iter().sum();
        if used > s {
            return None;
        }
        w[row] = scatter(rng, &base, s - used);
    }
    Some(w)
}

/// Random substructure with `K <= max_k`, `1 <= s <= max_s`. With
/// `irreducible`, heads avoid top-marked and tail columns; otherwise heads
/// are arbitrary (cycles included). `arrows = false` gives empty `phi`.
fn random_gamma(
    rng: &mut ChaCha8Rng,
    max_k: usize,
    max_s: usize,
    arrows: bool,
    irreducible: bool,
    full: bool,
) -> SubstructureGamma {
    loop {
        let k = rng.gen_range(1..=max_k);
        let s = rng.gen_range(1..=max_s);
        let r1 = nonempty_random_subset(rng, k, 0.35);
        let r2 = nonempty_random_subset(rng, k, 0.35);
        let mut phi = BTreeMap::new();
        if arrows {
            let tails: BTreeSet<usize> =
                (0..k).filter(|j| !r1.contains(j) && rng.gen_bool(0.3)).collect();
            let heads: Vec<usize> = if irreducible {
                (0..k).filter(|j| !r1.contains(j) && !tails.contains(j)).collect()
            } else {
                (0..k).collect()
            };
            if !heads.is_empty() {
                for &t in &tails {
                    phi.insert(t, *heads.choose(rng).expect("nonempty"));
                }
            }
        }
        let tails: BTreeSet<usize> = phi.keys().copied().collect();
        let Some(w) = random_occupancy(rng, k, s, &r1, &r2, &tails, full) else { continue };
        if let Ok(g) = SubstructureGamma::new(w, r1, r2, phi) {
            return g;
        }
    }
}

/// Irreducible full substructure with exactly as many `A` columns as
/// vertices per row: every other column is `D` or an empty column pointing
/// into an `A` column with its bottom cell marked.
fn random_saturated_gamma(rng: &mut ChaCha8Rng, max_k: usize, max_s: usize) -> SubstructureGamma {
    let k = rng.gen_range(2..=max_k);
    let a = rng.gen_range(1..=(k - 1).min(max_s));
    let mut order: Vec<usize> = (0..k).collect();
    order.shuffle(rng);
    let (a_cols, rest) = order.split_at(a);
    let mut w = [vec![0; k], vec![0; k]];
    for &j in a_cols {
        w[0][j] = 1;
        w[1][j] = 1;
    }
    let (mut r1, mut r2, mut phi) = (BTreeSet::new(), BTreeSet::new(), BTreeMap::new());
    for (i, &j) in rest.iter().enumerate() {
        r2.insert(j);
        if i == 0 || rng.gen_bool(0.5) {
            r1.insert(j);
        } else {
            phi.insert(j, *a_cols.choose(rng).expect("a >= 1"));
        }
    }
    SubstructureGamma::new(w, r1, r2, phi).expect("construction respects the invariants")
}

fn branch_of(g: &SubstructureGamma) -> Result<&'static str> {
    let a = classify_columns(g)?.type_a_columns;
    let s = g.s();
    Ok(if s >= a + 2 {
        "s>=A+2"
    } else if s == a + 1 {
        "s=A+1"
    } else {
        "s<=A"
    })
}

/// Random irreducible full substructures for `T(Gamma)`, one third of them
/// drawn from each formula branch.
pub fn gamma_sample(seed: u64, n: usize, max_k: usize, max_s: usize) -> Vec<SubstructureGamma> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let branches = ["s>=A+2", "s=A+1", "s<=A"];
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let want = branches[i % 3];
        let g = if want == "s<=A" {
            random_saturated_gamma(&mut rng, max_k, max_s)
        } else {
            loop {
                let g = random_gamma(&mut rng, max_k, max_s, true, true, true);
                if branch_of(&g).is_ok_and(|b| b == want) {
                    break g;
                }
            }
        };
        out.push(g);
    }
    out
}

/// `T(Gamma)` closed form against the oracle on [`gamma_sample`], plus the
/// all-`D` base case.
pub fn sweep_gamma(seed: u64, n: usize, max_k: usize, max_s: usize) -> Report {
    let mut r = Report::new("gamma");
    let mut sample = gamma_sample(seed, n, max_k, max_s);
    for s in 1..=max_s.min(max_k) {
        let marks: BTreeSet<usize> = (0..s).collect();
        sample.push(
            SubstructureGamma::new([vec![1; s], vec![1; s]], marks.clone(), marks, BTreeMap::new())
                .expect("all-marked substructure"),
        );
    }
    for g in &sample {
        if let Ok(b) = branch_of(g) {
            r.tally(b);
        }
    }
    let results = sample
        .par_iter()
        .map(|g| -> Result<Option<String>> {
            let f = formulas::gamma_count_formula(g)?;
            let b = brute::gamma_count_brute(g)?;
            Ok(same(gamma_json(g), &f, &b))
        })
        .collect();
    r.absorb(results);
    r
}

/// Arrow-free substructure in which the columns holding vertices have an
/// object in every cell, while vertex-free columns may leave cells empty.
fn random_noarrow_gamma(rng: &mut ChaCha8Rng, max_k: usize, max_s: usize) -> SubstructureGamma {
    loop {
        let k = rng.gen_range(1..=max_k);
        let s = rng.gen_range(1..=max_s);
        let r1 = nonempty_random_subset(rng, k, 0.35);
        let r2 = nonempty_random_subset(rng, k, 0.35);
        let occupied: Vec<usize> = nonempty_random_subset(rng, k, 0.7).into_iter().collect();
        let mut w = [vec![0; k], vec![0; k]];
        let mut fits = true;
        for (row, marks) in [&r1, &r2].into_iter().enumerate() {
            let base: Vec<usize> = occupied.iter().map(|j| usize::from(!marks.contains(j))).collect();
            let used: usize = base.iter().sum();
            if used > s {
                fits = false;
                break;
            }
            for (&j, n) in occupied.iter().zip(scatter(rng, &base, s - used)) {
                w[row][j] = n;
            }
        }
        if !fits {
            continue;
        }
        if let Ok(g) = SubstructureGamma::new(w, r1, r2, BTreeMap::new()) {
            return g;
        }
    }
}

/// Random arrow-free substructures for the arrow-free formula; odd-indexed
/// ones are drawn until they fail the full condition.
pub fn gamma_noarrows_sample(seed: u64, n: usize, max_k: usize, max_s: usize) -> Vec<SubstructureGamma> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|i| loop {
            let g = random_noarrow_gamma(&mut rng, max_k, max_s);
            if check_full(&g) == (i % 2 == 0) {
                break g;
            }
        })
        .collect()
}

pub fn sweep_gamma_noarrows(seed: u64, n: usize, max_k: usize, max_s: usize) -> Report {
    let mut r = Report::new("gamma-noarrows");
    let sample = gamma_noarrows_sample(seed, n, max_k, max_s);
    for g in &sample {
        r.tally(if check_full(g) { "full" } else { "not-full" });
    }
    let results = sample
        .par_iter()
        .map(|g| -> Result<Option<String>> {
            let f = formulas::gamma_count_formula_noarrows(g)?;
            let b = brute::gamma_count_brute(g)?;
            Ok(same(gamma_json(g), &f, &b))
        })
        .collect();
    r.absorb(results);
    r
}

// ---------------------------------------------------------------------------
// lemmas

fn statuses(g: &SubstructureGamma) -> (bool, bool, bool) {
    (check_nonempty(g), check_balance(g), check_full(g))
}

/// Adds the arrow `x -> y` on top of a random substructure.
fn with_arrow(g: &SubstructureGamma, x: usize, y: usize) -> Option<SubstructureGamma> {
    let mut phi = g.phi().clone();
    phi.insert(x, y);
    SubstructureGamma::new(g.w().clone(), g.marks(0).clone(), g.marks(1).clone(), phi).ok()
}

fn to_mark_instance(rng: &mut ChaCha8Rng, max_k: usize, max_s: usize) -> (SubstructureGamma, usize) {
    loop {
        let full = rng.gen_bool(0.5);
        let g = random_gamma(rng, max_k.max(2), max_s, true, false, full);
        let free: Vec<usize> = (0..g.k()).filter(|j| !g.marks(0).contains(j)).collect();
        let Some(&x) = free.choose(rng) else { continue };
        let y = *g.marks(0).iter().collect::<Vec<_>>().choose(rng).expect("R1 nonempty");
        if let Some(h) = with_arrow(&g, x, *y) {
            return (h, x);
        }
    }
}

fn retarget_instance(rng: &mut ChaCha8Rng, max_k: usize, max_s: usize) -> (SubstructureGamma, usize) {
    loop {
        let full = rng.gen_bool(0.5);
        let g = random_gamma(rng, max_k.max(2), max_s, true, false, full);
        let free: Vec<usize> = (0..g.k()).filter(|j| !g.marks(0).contains(j)).collect();
        if free.len() < 2 {
            continue;
        }
        let pick: Vec<usize> = free.choose_multiple(rng, 2).copied().collect();
        let (x, y) = (pick[0], pick[1]);
        let z = rng.gen_range(0..g.k());
        let Some(h) = with_arrow(&g, y, z).and_then(|h| with_arrow(&h, x, y)) else { continue };
        return (h, x);
    }
}

fn pointing_instance(
    rng: &mut ChaCha8Rng,
    max_k: usize,
    max_s: usize,
) -> (SubstructureGamma, usize, usize) {
    loop {
        let full = rng.gen_bool(0.5);
        let g = random_gamma(rng, max_k.max(2), max_s, true, false, full);
        let xs: Vec<usize> = (0..g.k()).filter(|&x| g.has_critical(0, x)).collect();
        let Some(&x) = xs.choose(rng) else { continue };
        let ys: Vec<usize> = (0..g.k())
            .filter(|&y| y != x && !transforms::non_critical_bottom_positions(&g, y).is_empty())
            .collect();
        let Some(&y) = ys.choose(rng) else { continue };
        return (g, x, y);
    }
}

fn merging_instance(
    rng: &mut ChaCha8Rng,
    max_k: usize,
    max_s: usize,
) -> (SubstructureGamma, usize, usize) {
    loop {
        let g = random_gamma(rng, max_k.max(2), max_s, true, false, true);
        let xs: Vec<usize> = (0..g.k()).filter(|&x| g.has_critical(0, x)).collect();
        let Some(&x) = xs.choose(rng) else { continue };
        let ys: Vec<usize> = (0..g.k()).filter(|&y| y != x && g.has_critical(1, y)).collect();
        let Some(&y) = ys.choose(rng) else { continue };
        return (g, x, y);
    }
}

/// Four sub-sweeps of `n` seeded instances each: both arrow
/// simplifications, column pointing and column merging. Each compares
/// oracle counts before and after and the condition statuses the lemma
/// says are preserved.
pub fn sweep_lemmas(seed: u64, n: usize, max_k: usize, max_s: usize) -> Vec<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut to_mark = Report::new("lemma-to-mark");
    let cases: Vec<_> = (0..n).map(|_| to_mark_instance(&mut rng, max_k, max_s)).collect();
    to_mark.absorb(
        cases
            .par_iter()
            .map(|(g, x)| -> Result<Option<String>> {
                let h = transforms::arrow_simplify_to_mark(g, *x)?;
                let (before, after) = (brute::gamma_count_brute(g)?, brute::gamma_count_brute(&h)?);
                Ok(same(format!("{} at {x}", gamma_json(g)), &after, &before)
                    .or_else(|| same(format!("statuses of {}", gamma_json(g)), &statuses(&h), &statuses(g))))
            })
            .collect(),
    );

    let mut retarget = Report::new("lemma-retarget");
    let cases: Vec<_> = (0..n).map(|_| retarget_instance(&mut rng, max_k, max_s)).collect();
    for (g, _) in &cases {
        retarget.tally(if g.has_arrow_cycle() { "cyclic" } else { "acyclic" });
    }
    retarget.absorb(
        cases
            .par_iter()
            .map(|(g, x)| -> Result<Option<String>> {
                let h = transforms::arrow_simplify_retarget(g, *x)?;
                let (before, after) = (brute::gamma_count_brute(g)?, brute::gamma_count_brute(&h)?);
                let closure_ok = match transforms::irreducible_closure(g)? {
                    Closure::CycleDetected => g.has_arrow_cycle() && before == BigInt::from(0),
                    Closure::Irreducible(c) => {
                        is_irreducible(&c) && brute::gamma_count_brute(&c)? == before
                    }
                };
                Ok(same(format!("{} at {x}", gamma_json(g)), &after, &before)
                    .or_else(|| same(format!("statuses of {}", gamma_json(g)), &statuses(&h), &statuses(g)))
                    .or_else(|| (!closure_ok).then(|| format!("closure of {}", gamma_json(g)))))
            })
            .collect(),
    );

    let mut pointing = Report::new("lemma-pointing");
    let cases: Vec<_> = (0..n).map(|_| pointing_instance(&mut rng, max_k, max_s)).collect();
    pointing.absorb(
        cases
            .par_iter()
            .map(|(g, x, y)| -> Result<Option<String>> {
                let h = transforms::column_pointing(g, *x, *y)?;
                let after = brute::gamma_count_brute(&h)?;
                let v = (*x, g.vertices(0, *x) - 1);
                for pos in transforms::non_critical_bottom_positions(g, *y) {
                    let pinned = brute::gamma_count_brute_with_pair(g, v, (*y, pos))?;
                    if pinned != after {
                        return Ok(Some(format!(
                            "{} X={x} Y={y} u={pos}: pinned {pinned} != {after}",
                            gamma_json(g)
                        )));
                    }
                }
                let keep = (check_nonempty(g), check_full(g)) == (check_nonempty(&h), check_full(&h));
                Ok((!keep).then(|| format!("{} X={x} Y={y}: statuses changed", gamma_json(g))))
            })
            .collect(),
    );

    let mut merging = Report::new("lemma-merging");
    let cases: Vec<_> = (0..n).map(|_| merging_instance(&mut rng, max_k, max_s)).collect();
    merging.absorb(
        cases
            .par_iter()
            .map(|(g, x, y)| -> Result<Option<String>> {
                let h = transforms::column_merging(g, *x, *y)?;
                let v = (*x, g.vertices(0, *x) - 1);
                let u = (*y, g.vertices(1, *y) - 1);
                let pinned = brute::gamma_count_brute_with_pair(g, v, u)?;
                let after = brute::gamma_count_brute(&h)?;
                Ok(same(format!("{} X={x} Y={y}", gamma_json(g)), &after, &pinned).or_else(|| {
                    (!check_full(&h)).then(|| format!("{} X={x} Y={y}: result not full", gamma_json(g)))
                }))
            })
            .collect(),
    );

    vec![to_mark, retarget, pointing, merging]
}

/// Confluence of the arrow simplifications: random application orders
/// reach substructures with the same oracle count and column tally.
pub fn sweep_closure_confluence(seed: u64, n: usize, max_k: usize, max_s: usize) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = Report::new("closure-confluence");
    for _ in 0..n {
        let full = rng.gen_bool(0.5);
        let g = random_gamma(&mut rng, max_k, max_s, true, false, full);
        let case = |rng: &mut ChaCha8Rng| -> Result<Option<String>> {
            let first = transforms::irreducible_closure(&g)?;
            let other = transforms::irreducible_closure_by(&g, |steps| rng.gen_range(0..steps.len()))?;
            match (first, other) {
                (Closure::CycleDetected, Closure::CycleDetected) => Ok(None),
                (Closure::Irreducible(a), Closure::Irreducible(b)) => {
                    let counts = (brute::gamma_count_brute(&a)?, classify_columns(&a)?);
                    let other = (brute::gamma_count_brute(&b)?, classify_columns(&b)?);
                    Ok(same(gamma_json(&g), &counts, &other))
                }
                _ => Ok(Some(format!("{}: orders disagree on cycles", gamma_json(&g)))),
            }
        };
        let res = case(&mut rng);
        r.absorb(vec![res]);
    }
    r
}

/// Closed forms alone, past the oracle range: parity and totals of the
/// count vectors, integrality and sign of every evaluation, and the series
/// rebuilt from canonical counts via the vertical formula.
pub fn sweep_structural(max_q: usize, max_d: usize) -> Report {
    let mut r = Report::new("structural");
    for q in 1..=max_q {
        let case = || -> Result<Option<String>> {
            let v = formulas::hz_counts(q)?;
            Ok(count_shape(&v, MapClass::OneVertex, &double_factorial(2 * q as i64 - 1)?)
                .map(|e| format!("hz q={q}: {e}")))
        };
        r.absorb(vec![case()]);
    }
    let results = two_row_params(max_d)
        .into_par_iter()
        .map(|(q1, q2, s)| -> Result<Option<String>> {
            let tag = format!("({q1},{q2},{s})");
            let v = formulas::gs_counts(q1, q2, s)?;
            if let Some(e) = count_shape(&v, MapClass::TwoVertex, &two_row_total(q1, q2, s)?) {
                return Ok(Some(format!("gs {tag}: {e}")));
            }
            let d = q1 + q2 + s;
            let mut c = BTreeMap::new();
            for k in 1..=2 * d {
                let ck = formulas::canonical_from_vertical(k, q1, q2, s, formulas::vertical_count_formula)?;
                if ck < BigInt::from(0) {
                    return Ok(Some(format!("c_{k} {tag} = {ck} is negative")));
                }
                c.insert(k, ck);
            }
            let rebuilt = formulas::series_from_surjections(&c);
            let closed = formulas::gs_series(q1, q2, s)?;
            Ok((rebuilt != closed).then(|| format!("{tag}: from vertical {rebuilt} != closed form {closed}")))
        })
        .collect();
    r.absorb(results);
    for k in 1..=2 * max_d {
        for r1 in 1..=k {
            for r2 in 1..=k {
                for s in 1..=max_d + 1 {
                    let v = formulas::vertical_count_formula(k, r1, r2, s);
                    r.absorb(vec![v.map(|v| {
                        (v < BigInt::from(0)).then(|| format!("v({k},{r1},{r2},{s}) = {v} is negative"))
                    })]);
                }
            }
        }
    }
    r
}

/// Every named suite at a size scaled by `max_d`.
pub fn run_suite(suite: &str, max_d: usize, seed: u64) -> Result<Vec<Report>> {
    let max_d = max_d.max(1);
    let mut out = Vec::new();
    let all = suite == "all";
    if all || suite == "hz" {
        out.push(sweep_hz(max_d + 3));
    }
    if all || suite == "gs" {
        out.push(sweep_gs(max_d));
        out.push(sweep_gs_simplified(max_d + 1, max_d + 2));
    }
    if all || suite == "surjections" {
        let table = surjection_table(max_d.min(4))?;
        out.push(sweep_surjections(&table));
        out.push(sweep_series_from_surjections(&table));
        out.push(sweep_canonical_from_vertical(&table));
        out.push(sweep_labelled_to_canonical(max_d.min(3)));
    }
    if all || suite == "vertical" {
        out.push(sweep_vertical(max_d, max_d + 1));
    }
    if all || suite == "gamma" {
        out.push(sweep_gamma(seed, 200, max_d + 2, max_d + 3));
        out.push(sweep_gamma_noarrows(seed, 200, max_d + 2, max_d + 2));
    }
    if all || suite == "omega" {
        out.push(sweep_omega(max_d, max_d + 1));
    }
    if all || suite == "lemmas" {
        out.extend(sweep_lemmas(seed, 100, max_d + 1, max_d + 2));
        out.push(sweep_closure_confluence(seed, 100, max_d + 1, max_d + 2));
    }
    if all || suite == "structural" {
        out.push(sweep_structural(2 * max_d + 4, 2 * max_d));
    }
    if out.is_empty() {
        return Err(crate::Error::InvalidParameter(format!("unknown suite {suite:?}")));
    }
    Ok(out)
}

/// Suite names accepted by [`run_suite`].
pub const SUITES: [&str; 9] =
    ["hz", "gs", "surjections", "vertical", "gamma", "omega", "lemmas", "structural", "all"];
