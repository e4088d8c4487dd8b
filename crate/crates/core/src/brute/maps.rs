//! Oracles over pairings: face counts of one- and two-vertex maps, and
//! paired surjections.

use num_bigint::BigInt;
use rayon::prelude::*;

use super::enumerate::PairingStream;
use crate::combinatorics::{compose, cycle_count, CycleCountVector, Pairing, TwoRowGround};
use crate::error::{Error, Result};

/// Every pairing of `0..2q`.
pub fn enumerate_pairings_one_row(q: usize) -> PairingStream {
    PairingStream::new(2 * q)
}

fn one_row_gamma_inverse(n: usize) -> Vec<usize> {
    (0..n).map(|i| (i + n - 1) % n).collect()
}

/// `a_L` = number of pairings `mu` of `0..2q` whose face permutation
/// `mu . gamma^-1` (gamma the long cycle) has `L` cycles.
pub fn hz_counts_brute(q: usize) -> Result<CycleCountVector> {
    if q == 0 {
        return Err(Error::InvalidParameter("q must be at least 1".into()));
    }
    let n = 2 * q;
    let gamma_inv = one_row_gamma_inverse(n);
    let parts: Vec<CycleCountVector> = PairingStream::partitions(n)
        .into_par_iter()
        .map(|stream| {
            let mut v = CycleCountVector::new(q);
            for mu in stream {
                let faces = cycle_count(&compose(mu.as_slice(), &gamma_inv))
                    .expect("composition of permutations is a permutation");
                v.increment(faces);
            }
            v
        })
        .collect();
    Ok(sum_vectors(q, &parts))
}

fn sum_vectors(d: usize, parts: &[CycleCountVector]) -> CycleCountVector {
    let mut total = CycleCountVector::new(d);
    for p in parts {
        total.merge(p);
    }
    total
}

fn check_s(s: usize) -> Result<()> {
    if s == 0 {
        return Err(Error::InvalidParameter("s must be at least 1".into()));
    }
    Ok(())
}

/// The pairings of the two-row ground with exactly `q1` pairs inside the
/// top row, `q2` inside the bottom row and `s` mixed pairs, in stream order.
pub fn class_pairings(q1: usize, q2: usize, s: usize) -> Result<Vec<Pairing>> {
    check_s(s)?;
    let ground = TwoRowGround::for_params(q1, q2, s)?;
    Ok(PairingStream::new(ground.len())
        .filter(|mu| {
            ground.row_pairs(mu, 0) == q1
                && ground.row_pairs(mu, 1) == q2
                && ground.mixed_pairs(mu) == s
        })
        .collect())
}

/// `a_L` over the class with parameters `(q1, q2; s)`, faces read off
/// `mu . gamma^-1` with one gamma cycle per row.
pub fn gs_counts_brute(q1: usize, q2: usize, s: usize) -> Result<CycleCountVector> {
    let ground = TwoRowGround::for_params(q1, q2, s)?;
    let d = q1 + q2 + s;
    let gamma_inv = ground.gamma_inverse();
    let class = class_pairings(q1, q2, s)?;
    let parts: Vec<CycleCountVector> = class
        .par_chunks(64)
        .map(|chunk| {
            let mut v = CycleCountVector::new(d);
            for mu in chunk {
                let faces = cycle_count(&compose(mu.as_slice(), &gamma_inv))
                    .expect("composition of permutations is a permutation");
                v.increment(faces);
            }
            v
        })
        .collect();
    Ok(sum_vectors(d, &parts))
}

/// For each element `x`, the elements `y <= x` whose label must equal the
/// label of `x`: the constraint `pi(mu(v)) = pi(gamma(v))` is checked as soon
/// as the later of its two elements is labelled.
fn constraint_schedule(mu: &Pairing, gamma: &[usize]) -> Vec<Vec<usize>> {
    let mut schedule = vec![Vec::new(); gamma.len()];
    for (v, &g) in gamma.iter().enumerate() {
        let m = mu.partner(v);
        if m != g {
            schedule[m.max(g)].push(m.min(g));
        }
    }
    schedule
}

/// Calls `visit(mu, pi)` for every paired surjection onto `k` classes:
/// `mu` in the `(q1, q2; s)` class, `pi` surjective onto `0..k` with
/// `pi(mu(v)) = pi(gamma(v))` for every element `v`.
pub fn for_each_paired_surjection<F>(k: usize, q1: usize, q2: usize, s: usize, mut visit: F) -> Result<()>
where
    F: FnMut(&Pairing, &[usize]),
{
    if k == 0 {
        return Err(Error::InvalidParameter("K must be at least 1".into()));
    }
    let ground = TwoRowGround::for_params(q1, q2, s)?;
    let gamma = ground.gamma();
    for mu in class_pairings(q1, q2, s)? {
        let schedule = constraint_schedule(&mu, &gamma);
        let mut pi = vec![0usize; ground.len()];
        let mut used = vec![0usize; k];
        assign(0, k, &schedule, &mut pi, &mut used, &mut |pi| visit(&mu, pi));
    }
    Ok(())
}

fn assign(
    x: usize,
    k: usize,
    schedule: &[Vec<usize>],
    pi: &mut [usize],
    used: &mut [usize],
    emit: &mut dyn FnMut(&[usize]),
) {
    if x == pi.len() {
        if used.iter().all(|&u| u > 0) {
            emit(pi);
        }
        return;
    }
    for label in 0..k {
        if schedule[x].iter().any(|&y| pi[y] != label) {
            continue;
        }
        pi[x] = label;
        used[label] += 1;
        assign(x + 1, k, schedule, pi, used, emit);
        used[label] -= 1;
    }
}

/// `f_K`: the number of paired surjections onto `k` classes.
pub fn paired_surjection_count_brute(k: usize, q1: usize, q2: usize, s: usize) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::InvalidParameter("K must be at least 1".into()));
    }
    let ground = TwoRowGround::for_params(q1, q2, s)?;
    let gamma = ground.gamma();
    let class = class_pairings(q1, q2, s)?;
    let total: u64 = class
        .par_iter()
        .map(|mu| {
            let schedule = constraint_schedule(mu, &gamma);
            let mut pi = vec![0usize; ground.len()];
            let mut used = vec![0usize; k];
            let mut n = 0u64;
            assign(0, k, &schedule, &mut pi, &mut used, &mut |_| n += 1);
            n
        })
        .sum();
    Ok(BigInt::from(total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{binomial, double_factorial, factorial, MapClass};

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn one_row_pairing_counts() {
        assert_eq!(enumerate_pairings_one_row(0).count(), 1);
        let one: Vec<Vec<(usize, usize)>> =
            enumerate_pairings_one_row(1).map(|p| p.pairs().collect()).collect();
        assert_eq!(one, vec![vec![(0, 1)]]);
        assert_eq!(enumerate_pairings_one_row(2).count(), 3);
        assert_eq!(enumerate_pairings_one_row(4).count(), 105);
    }

    #[test]
    fn hz_small_cases() {
        let v = hz_counts_brute(1).unwrap();
        assert_eq!(v.nonzero().collect::<Vec<_>>(), vec![(2, &big(1))]);
        let v = hz_counts_brute(2).unwrap();
        assert_eq!(v.get(3), big(2));
        assert_eq!(v.get(1), big(1));
        assert_eq!(v.get(2), big(0));
        assert_eq!(v.total(), big(3));
        assert!(hz_counts_brute(0).is_err());
    }

    #[test]
    fn hz_totals_and_parity() {
        for q in 1..=6 {
            let v = hz_counts_brute(q).unwrap();
            assert_eq!(v.total(), double_factorial(2 * q as i64 - 1).unwrap());
            v.check_parity(MapClass::OneVertex).unwrap();
        }
    }

    #[test]
    fn gs_small_cases() {
        let v = gs_counts_brute(0, 0, 1).unwrap();
        assert_eq!(v.nonzero().collect::<Vec<_>>(), vec![(1, &big(1))]);
        let v = gs_counts_brute(0, 0, 2).unwrap();
        assert_eq!(v.nonzero().collect::<Vec<_>>(), vec![(2, &big(2))]);
        assert!(gs_counts_brute(1, 1, 0).is_err());
    }

    #[test]
    fn gs_totals_and_parity() {
        for d in 1..=5usize {
            for s in 1..=d {
                for q1 in 0..=(d - s) {
                    let q2 = d - s - q1;
                    let v = gs_counts_brute(q1, q2, s).unwrap();
                    let (p1, p2) = ((2 * q1 + s) as i64, (2 * q2 + s) as i64);
                    let want = binomial(p1, s as i64)
                        * binomial(p2, s as i64)
                        * factorial(s as u64)
                        * double_factorial(2 * q1 as i64 - 1).unwrap()
                        * double_factorial(2 * q2 as i64 - 1).unwrap();
                    assert_eq!(v.total(), want, "({q1},{q2},{s})");
                    v.check_parity(MapClass::TwoVertex).unwrap();
                }
            }
        }
    }

    #[test]
    fn surjection_examples() {
        assert_eq!(paired_surjection_count_brute(1, 0, 0, 1).unwrap(), big(1));
        assert_eq!(paired_surjection_count_brute(2, 0, 0, 1).unwrap(), big(0));
        assert_eq!(paired_surjection_count_brute(1, 1, 0, 1).unwrap(), big(3));
    }

    #[test]
    fn surjection_visitor_agrees_with_count() {
        let mut n = 0u64;
        for_each_paired_surjection(2, 1, 0, 2, |mu, pi| {
            let gamma = TwoRowGround::for_params(1, 0, 2).unwrap().gamma();
            assert!((0..pi.len()).all(|v| pi[mu.partner(v)] == pi[gamma[v]]));
            n += 1;
        })
        .unwrap();
        assert_eq!(big(n as i64), paired_surjection_count_brute(2, 1, 0, 2).unwrap());
    }
}
