//! The twelve acceptance criteria, all exact. Prints one line per criterion
//! and exits non-zero if any fails.

use std::cell::OnceCell;
use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::Instant;

use mapcount::arrays::SubstructureGamma;
use mapcount::brute;
use mapcount::combinatorics::factorial;
use mapcount::formulas;
use mapcount::verify::{self, Report};
use num_bigint::BigInt;

struct Outcome {
    ok: bool,
    detail: String,
}

fn from_reports(reports: &[Report]) -> Outcome {
    Outcome {
        ok: reports.iter().all(Report::passed),
        detail: reports.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(" | "),
    }
}

fn with_extra(mut o: Outcome, extra: Vec<(bool, String)>) -> Outcome {
    for (ok, what) in extra {
        o.ok &= ok;
        o.detail.push_str(&format!(" | {} {what}", if ok { "ok" } else { "FAILED" }));
    }
    o
}

fn monomial(q: usize) -> BTreeMap<u32, BigInt> {
    formulas::hz_series(q).unwrap().to_monomial().integer_coeffs().unwrap()
}

fn coeffs(pairs: &[(u32, i64)]) -> BTreeMap<u32, BigInt> {
    pairs.iter().map(|&(k, c)| (k, BigInt::from(c))).collect()
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn main() -> ExitCode {
    let seed = 0;
    let table = OnceCell::new();
    let table = || table.get_or_init(|| verify::surjection_table(4).expect("oracle table"));

    let criteria: Vec<Criterion> = vec![
        (
            "1 one-vertex series = oracle, q = 1..7",
            Box::new(|| {
                let oracle = |q: usize| brute::hz_counts_brute(q).unwrap().to_monomial().integer_coeffs().unwrap();
                let (x2, two_x3_x) = (coeffs(&[(2, 1)]), coeffs(&[(3, 2), (1, 1)]));
                with_extra(
                    from_reports(&[verify::sweep_hz(7)]),
                    vec![
                        (monomial(1) == x2 && oracle(1) == x2, "q=1 gives x^2".into()),
                        (monomial(2) == two_x3_x && oracle(2) == two_x3_x, "q=2 gives 2x^3 + x".into()),
                    ],
                )
            }),
        ),
        ("2 two-vertex series = oracle, d <= 6", Box::new(|| from_reports(&[verify::sweep_gs(6)]))),
        (
            "3 double sum = triple sum, q1, q2 <= 5, s <= 6",
            Box::new(|| from_reports(&[verify::sweep_gs_simplified(5, 6)])),
        ),
        (
            "4 paired surjections = canonical arrays, d <= 4, K <= 2d",
            Box::new(|| from_reports(&[verify::sweep_surjections(table()), verify::sweep_labelled_to_canonical(3)])),
        ),
        (
            "5 series from surjection counts = closed form, d <= 4",
            Box::new(|| from_reports(&[verify::sweep_series_from_surjections(table())])),
        ),
        (
            "6 canonical counts from vertical formula = oracle, d <= 4, K <= 2d",
            Box::new(|| from_reports(&[verify::sweep_canonical_from_vertical(table())])),
        ),
        (
            "7 vertical formula = oracle, K <= 4, s <= 5",
            Box::new(|| {
                let zero = formulas::vertical_count_formula(3, 1, 1, 1).unwrap() == BigInt::from(0)
                    && brute::vertical_array_count_brute(3, 1, 1, 1).unwrap() == BigInt::from(0);
                with_extra(from_reports(&[verify::sweep_vertical(4, 5)]), vec![(zero, "v(3,1,1,1) = 0".into())])
            }),
        ),
        (
            "8 T(Gamma) = oracle, 201 irreducible full instances, K <= 6, s <= 7",
            Box::new(|| {
                let r = verify::sweep_gamma(seed, 201, 6, 7);
                let covered = ["s<=A", "s=A+1", "s>=A+2"]
                    .iter()
                    .all(|b| r.tallies.get(*b).is_some_and(|&n| n > 0));
                let base = (1..=6usize).all(|s| {
                    let marks: BTreeSet<usize> = (0..s).collect();
                    let g = SubstructureGamma::new([vec![1; s], vec![1; s]], marks.clone(), marks, BTreeMap::new())
                        .unwrap();
                    let want = factorial(s as u64);
                    formulas::gamma_count_formula(&g).unwrap() == want && brute::gamma_count_brute(&g).unwrap() == want
                });
                let enough = r.cases >= 200;
                with_extra(
                    from_reports(&[r]),
                    vec![
                        (covered, "all three branches".into()),
                        (base, "all-D gives s!".into()),
                        (enough, "at least 200 cases".into()),
                    ],
                )
            }),
        ),
        (
            "9 arrow-free T(Gamma) = oracle, 200 instances incl. non-full",
            Box::new(|| {
                let r = verify::sweep_gamma_noarrows(seed, 200, 6, 7);
                let mixed = r.tallies.get("not-full").is_some_and(|&n| n > 0) && r.cases >= 200;
                with_extra(from_reports(&[r]), vec![(mixed, "non-full instances present".into())])
            }),
        ),
        ("10 T(Omega) = oracle, K <= 4, s <= 5", Box::new(|| from_reports(&[verify::sweep_omega(4, 5)]))),
        (
            "11 lemma suite, 100 instances per transform",
            Box::new(|| {
                let mut reports = verify::sweep_lemmas(seed, 100, 6, 6);
                let enough = reports.iter().all(|r| r.cases >= 100);
                reports.push(verify::sweep_closure_confluence(seed, 100, 6, 6));
                with_extra(from_reports(&reports), vec![(enough, "100 cases each".into())])
            }),
        ),
        (
            "12 structural invariants: parity, totals, integrality",
            Box::new(|| from_reports(&[verify::sweep_structural(14, 8)])),
        ),
    ];

    let mut passed = 0;
    for (name, check) in &criteria {
        let t = Instant::now();
        let o = check();
        println!("{} criterion {name} ({:.1?}): {}", if o.ok { "PASS" } else { "FAIL" }, t.elapsed(), o.detail);
        passed += usize::from(o.ok);
    }
    println!("{passed}/{} acceptance criteria passed", criteria.len());
    if passed == criteria.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
