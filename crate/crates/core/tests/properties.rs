use std::collections::{BTreeMap, BTreeSet};

use mapcount::arrays::{
    check_balance, check_forest, check_full, check_nonempty, classify_columns, critical_vertices,
    is_irreducible, Cells, SubstructureGamma,
};
use mapcount::brute::{self, PairingStream};
use mapcount::combinatorics::{binomial, double_factorial, multinomial, BinomialPoly, Pairing};
use mapcount::formulas;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

/// Random substructure with `K <= max_k` and `1 <= s <= max_s`: each row's
/// vertices are dropped into random columns, and every column not marked
/// in the top row may carry an arrow.
fn any_gamma(max_k: usize, max_s: usize) -> impl Strategy<Value = SubstructureGamma> {
    (1..=max_k, 1..=max_s)
        .prop_flat_map(|(k, s)| {
            (
                prop::collection::vec(0..k, s),
                prop::collection::vec(0..k, s),
                prop::collection::vec(any::<bool>(), k),
                prop::collection::vec(any::<bool>(), k),
                prop::collection::vec(prop::option::weighted(0.3, 0..k), k),
            )
        })
        .prop_map(|(top, bottom, m1, m2, heads)| {
            let k = m1.len();
            let mut w = [vec![0; k], vec![0; k]];
            for (row, cols) in [top, bottom].into_iter().enumerate() {
                for c in cols {
                    w[row][c] += 1;
                }
            }
            let marks = |m: &[bool]| -> BTreeSet<usize> {
                let set: BTreeSet<usize> = (0..k).filter(|&j| m[j]).collect();
                if set.is_empty() { BTreeSet::from([0]) } else { set }
            };
            let (r1, r2) = (marks(&m1), marks(&m2));
            let phi: BTreeMap<usize, usize> = heads
                .iter()
                .enumerate()
                .filter(|(t, _)| !r1.contains(t))
                .filter_map(|(t, h)| h.map(|h| (t, h)))
                .collect();
            SubstructureGamma::new(w, r1, r2, phi).expect("generator respects the invariants")
        })
}

#[test]
fn pairing_counts_are_double_factorials() {
    for q in 0..=8usize {
        let n = PairingStream::new(2 * q).count();
        assert_eq!(BigInt::from(n), double_factorial(2 * q as i64 - 1).unwrap(), "q={q}");
    }
}

#[test]
fn pairing_streams_are_deterministic_and_partitioned() {
    for n in [0, 2, 6, 8] {
        let a: Vec<Pairing> = PairingStream::new(n).collect();
        let b: Vec<Pairing> = PairingStream::new(n).collect();
        assert_eq!(a, b);
        let mut parts: Vec<Pairing> = PairingStream::partitions(n).into_iter().flatten().collect();
        parts.sort_by(|x, y| x.as_slice().cmp(y.as_slice()));
        let mut whole = a.clone();
        whole.sort_by(|x, y| x.as_slice().cmp(y.as_slice()));
        assert_eq!(parts, whole, "n={n}");
    }
}

#[test]
fn surjection_streams_are_deterministic() {
    let run = || {
        let mut seen = Vec::new();
        brute::for_each_paired_surjection(3, 1, 0, 2, |mu, pi| seen.push((mu.clone(), pi.to_vec()))).unwrap();
        seen
    };
    let first = run();
    assert!(!first.is_empty());
    assert_eq!(first, run());
}

#[test]
fn one_vertex_totals() {
    for q in 1..=8usize {
        let v = brute::hz_counts_brute(q).unwrap();
        assert_eq!(v.total(), double_factorial(2 * q as i64 - 1).unwrap(), "q={q}");
    }
}

#[test]
fn canonical_arrays_are_proper() {
    for (k, q1, q2, s) in [(2, 1, 0, 1), (3, 1, 1, 1), (2, 0, 0, 2), (4, 0, 1, 2)] {
        let mut n = 0usize;
        brute::for_each_canonical_array(k, q1, q2, s, |a| {
            n += 1;
            assert!(check_nonempty(a) && check_balance(a) && check_forest(a));
        })
        .unwrap();
        assert_eq!(BigInt::from(n), brute::canonical_array_count_brute(k, q1, q2, s).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn binomial_basis_evaluates_like_monomials(coeffs in prop::collection::vec(-50i64..50, 0..10)) {
        let p = BinomialPoly::from_coeffs(coeffs.iter().enumerate().map(|(k, &c)| (k as u32, c)));
        let m = p.to_monomial();
        for x in 0..=20 {
            prop_assert_eq!(p.eval(x), m.eval(x));
        }
        prop_assert_eq!(m.to_binomial().unwrap(), p);
    }

    #[test]
    fn multinomial_telescopes(parts in prop::collection::vec(0i64..=6, 1..5)) {
        prop_assume!(parts.iter().sum::<i64>() <= 12);
        let mut running = 0;
        let mut product = BigInt::from(1);
        for &p in &parts {
            running += p;
            product *= binomial(running, p);
        }
        prop_assert_eq!(multinomial(&parts), product);
    }

    #[test]
    fn full_implies_nonempty(g in any_gamma(6, 6)) {
        prop_assert!(!check_full(&g) || check_nonempty(&g));
    }

    #[test]
    fn column_tally_sums_to_s(g in any_gamma(6, 6)) {
        prop_assume!(is_irreducible(&g));
        let t = classify_columns(&g).unwrap();
        prop_assert_eq!(t.row_total(0), g.s());
        prop_assert_eq!(t.row_total(1), g.s());
    }

    #[test]
    fn arrow_heads_hold_critical_top_vertices(g in any_gamma(6, 6)) {
        prop_assume!(is_irreducible(&g) && check_full(&g));
        let critical = critical_vertices(&g);
        for &head in g.phi().values() {
            prop_assert!(g.has_critical(0, head));
            prop_assert!(critical.iter().any(|&(row, col)| row == 0 && col == head));
        }
    }

    #[test]
    fn column_relabelling_changes_nothing(g in any_gamma(5, 5), shift in 0usize..5) {
        let k = g.k();
        let perm: Vec<usize> = (0..k).map(|j| (j + shift) % k).collect();
        let h = g.permute_columns(&perm).unwrap();
        prop_assert_eq!(check_nonempty(&g), check_nonempty(&h));
        prop_assert_eq!(check_balance(&g), check_balance(&h));
        prop_assert_eq!(check_full(&g), check_full(&h));
        prop_assert_eq!(is_irreducible(&g), is_irreducible(&h));
        prop_assert_eq!(brute::gamma_count_brute(&g).unwrap(), brute::gamma_count_brute(&h).unwrap());
    }

    #[test]
    fn gamma_formula_matches_oracle(g in any_gamma(5, 5)) {
        prop_assume!(is_irreducible(&g) && check_full(&g));
        prop_assert_eq!(formulas::gamma_count_formula(&g).unwrap(), brute::gamma_count_brute(&g).unwrap());
    }

    #[test]
    fn series_total_counts_all_maps(q1 in 0usize..4, q2 in 0usize..4, s in 1usize..5) {
        let series = formulas::gs_series(q1, q2, s).unwrap();
        let v = formulas::gs_counts(q1, q2, s).unwrap();
        prop_assert_eq!(formulas::series_total(&series), BigRational::from_integer(v.total()));
    }
}
