//! Oracles over paired and arrowed arrays. Arrays are counted at slot level:
//! two different slot matchings give two different arrays.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use rayon::prelude::*;

use super::enumerate::{next_permutation, subsets, weak_compositions};
use super::maps::class_pairings;
use crate::arrays::{
    check_balance, check_forest, check_nonempty, PairedArray, SubstructureGamma, SubstructureOmega,
};
use crate::combinatorics::Pairing;
use crate::error::{Error, Result};

fn check_positive(name: &str, v: usize) -> Result<()> {
    if v == 0 {
        return Err(Error::InvalidParameter(format!("{name} must be at least 1")));
    }
    Ok(())
}

fn set(v: &[usize]) -> BTreeSet<usize> {
    v.iter().copied().collect()
}

/// Occupancies and single marks `(w_top, w_bottom, r1, r2)` passing the
/// non-empty condition (which does not depend on the pairing).
fn canonical_frames(k: usize, p1: usize, p2: usize) -> Vec<([Vec<usize>; 2], usize, usize)> {
    let tops = weak_compositions(p1, k);
    let bottoms = weak_compositions(p2, k);
    let mut out = Vec::new();
    for top in &tops {
        for bottom in &bottoms {
            for r1 in 0..k {
                for r2 in 0..k {
                    let nonempty =
                        (0..k).all(|j| top[j] + bottom[j] > 0 || j == r1 || j == r2);
                    if nonempty {
                        out.push(([top.clone(), bottom.clone()], r1, r2));
                    }
                }
            }
        }
    }
    out
}

fn scan_frame(
    frame: &([Vec<usize>; 2], usize, usize),
    class: &[Pairing],
    visit: &mut dyn FnMut(&PairedArray),
) -> Result<()> {
    let (w, r1, r2) = frame;
    let Some(first) = class.first() else { return Ok(()) };
    let mut array = PairedArray::new(w.clone(), [set(&[*r1]), set(&[*r2])], first.clone())?;
    for mu in class {
        array.set_pairing(mu.as_slice());
        if check_nonempty(&array) && check_balance(&array) && check_forest(&array) {
            visit(&array);
        }
    }
    Ok(())
}

/// Calls `visit` on every canonical array (proper, one mark per row) with
/// `k` columns and parameters `(q1, q2; s)`. Slots are numbered top row
/// first, so the slot pairings are exactly the two-row class pairings.
pub fn for_each_canonical_array<F>(k: usize, q1: usize, q2: usize, s: usize, mut visit: F) -> Result<()>
where
    F: FnMut(&PairedArray),
{
    check_positive("K", k)?;
    let class = class_pairings(q1, q2, s)?;
    for frame in canonical_frames(k, 2 * q1 + s, 2 * q2 + s) {
        scan_frame(&frame, &class, &mut visit)?;
    }
    Ok(())
}

/// `c_K`: the number of canonical arrays.
pub fn canonical_array_count_brute(k: usize, q1: usize, q2: usize, s: usize) -> Result<BigInt> {
    check_positive("K", k)?;
    let class = class_pairings(q1, q2, s)?;
    let frames = canonical_frames(k, 2 * q1 + s, 2 * q2 + s);
    let counts: Result<Vec<u64>> = frames
        .par_iter()
        .map(|frame| {
            let mut n = 0u64;
            scan_frame(frame, &class, &mut |_| n += 1)?;
            Ok(n)
        })
        .collect();
    Ok(BigInt::from(counts?.into_iter().sum::<u64>()))
}

/// Partner vector of the vertical pairing joining top slot `i` to bottom
/// slot `matching[i]`.
fn vertical_partner(matching: &[usize], partner: &mut [usize]) {
    let s = matching.len();
    for (i, &j) in matching.iter().enumerate() {
        partner[i] = s + j;
        partner[s + j] = i;
    }
}

/// Number of proper vertical arrays with `k` columns, `r1` marked top
/// cells, `r2` marked bottom cells and `s` pairs.
pub fn vertical_array_count_brute(k: usize, r1: usize, r2: usize, s: usize) -> Result<BigInt> {
    for (name, v) in [("K", k), ("R1", r1), ("R2", r2), ("s", s)] {
        check_positive(name, v)?;
    }
    if r1 > k || r2 > k {
        return Ok(BigInt::from(0));
    }
    let tops = subsets(k, r1);
    let bottoms = subsets(k, r2);
    let counts: Result<Vec<u64>> = weak_compositions(s, k)
        .into_par_iter()
        .map(|w| {
            let mut n = 0u64;
            let mut matching: Vec<usize> = (0..s).collect();
            let mut partner = vec![0; 2 * s];
            vertical_partner(&matching, &mut partner);
            for m1 in &tops {
                for m2 in &bottoms {
                    let mut array = PairedArray::new(
                        [w.clone(), w.clone()],
                        [set(m1), set(m2)],
                        Pairing::new(partner.clone())?,
                    )?;
                    if !check_nonempty(&array) {
                        continue;
                    }
                    loop {
                        vertical_partner(&matching, &mut partner);
                        array.set_pairing(&partner);
                        if check_balance(&array) && check_forest(&array) {
                            n += 1;
                        }
                        if !next_permutation(&mut matching) {
                            break;
                        }
                    }
                }
            }
            Ok(n)
        })
        .collect();
    Ok(BigInt::from(counts?.into_iter().sum::<u64>()))
}

/// Counts matchings of `g` satisfying the forest condition; `pin` fixes
/// top slot `pin.0` (row-major index) to bottom slot `pin.1`.
fn count_matchings(g: &SubstructureGamma, pin: Option<(usize, usize)>) -> Result<BigInt> {
    let s = g.s();
    let mut matching: Vec<usize> = (0..s).collect();
    let mut arrowed = g.arrowed_array(&matching)?;
    let mut partner = vec![0; 2 * s];
    let mut n = 0u64;
    loop {
        if pin.is_none_or(|(v, u)| matching[v] == u) {
            vertical_partner(&matching, &mut partner);
            arrowed.array_mut().set_pairing(&partner);
            if check_forest(&arrowed) {
                n += 1;
            }
        }
        if !next_permutation(&mut matching) {
            break;
        }
    }
    Ok(BigInt::from(n))
}

/// `T(Gamma)`: the number of the `s!` matchings of top slots to bottom slots
/// whose forest functions (arrows first in the top row) are forests rooted
/// at the marks.
pub fn gamma_count_brute(g: &SubstructureGamma) -> Result<BigInt> {
    count_matchings(g, None)
}

fn row_offset(g: &SubstructureGamma, row: usize, (col, pos): (usize, usize)) -> Result<usize> {
    let w = &g.w()[row];
    if col >= w.len() || pos >= w[col] {
        return Err(Error::InvalidParameter(format!(
            "no slot at position {pos} of cell ({row}, {col})"
        )));
    }
    Ok(w[..col].iter().sum::<usize>() + pos)
}

/// `T(Gamma)` restricted to matchings that pair top slot `v = (col, pos)`
/// with bottom slot `u = (col, pos)`.
pub fn gamma_count_brute_with_pair(
    g: &SubstructureGamma,
    v: (usize, usize),
    u: (usize, usize),
) -> Result<BigInt> {
    let pin = (row_offset(g, 0, v)?, row_offset(g, 1, u)?);
    count_matchings(g, Some(pin))
}

/// `T(Omega)`: sums `T(Gamma)` (no arrows) over all mark placements of the
/// given sizes that leave no column without an object.
pub fn omega_count_brute(o: &SubstructureOmega) -> Result<BigInt> {
    let k = o.k();
    let w = o.w().to_vec();
    let mut frames = Vec::new();
    for m1 in subsets(k, o.r1()) {
        for m2 in subsets(k, o.r2()) {
            let nonempty = (0..k).all(|j| w[j] > 0 || m1.contains(&j) || m2.contains(&j));
            if nonempty {
                frames.push((m1.clone(), m2));
            }
        }
    }
    let counts: Result<Vec<BigInt>> = frames
        .into_par_iter()
        .map(|(m1, m2)| {
            let g = SubstructureGamma::new([w.clone(), w.clone()], set(&m1), set(&m2), BTreeMap::new())?;
            gamma_count_brute(&g)
        })
        .collect();
    Ok(counts?.into_iter().sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::factorial;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn gamma(w: [Vec<usize>; 2], r1: &[usize], r2: &[usize], phi: &[(usize, usize)]) -> SubstructureGamma {
        SubstructureGamma::new(w, set(r1), set(r2), phi.iter().copied().collect()).unwrap()
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(canonical_array_count_brute(1, 0, 0, 1).unwrap(), big(1));
        assert_eq!(canonical_array_count_brute(1, 1, 0, 1).unwrap(), big(3));
        let mut seen = 0;
        for_each_canonical_array(1, 1, 0, 1, |_| seen += 1).unwrap();
        assert_eq!(seen, 3);
    }

    #[test]
    fn vertical_examples() {
        assert_eq!(vertical_array_count_brute(1, 1, 1, 1).unwrap(), big(1));
        assert_eq!(vertical_array_count_brute(1, 1, 1, 2).unwrap(), big(2));
        assert_eq!(vertical_array_count_brute(3, 1, 1, 1).unwrap(), big(0));
        assert!(vertical_array_count_brute(0, 1, 1, 1).is_err());
    }

    #[test]
    fn gamma_examples() {
        let all_d = gamma([vec![1, 1, 1], vec![1, 1, 1]], &[0, 1, 2], &[0, 1, 2], &[]);
        assert_eq!(gamma_count_brute(&all_d).unwrap(), big(6));
        let a_then_d = gamma([vec![1, 1], vec![1, 1]], &[1], &[1], &[]);
        assert_eq!(gamma_count_brute(&a_then_d).unwrap(), big(1));
        let cyclic = gamma([vec![1, 1, 1], vec![1, 1, 1]], &[2], &[2], &[(0, 1), (1, 0)]);
        assert_eq!(gamma_count_brute(&cyclic).unwrap(), big(0));
    }

    #[test]
    fn pinned_counts_partition_the_total() {
        let g = gamma([vec![2, 1, 1], vec![1, 2, 1]], &[2], &[0], &[]);
        let total = gamma_count_brute(&g).unwrap();
        let v = (0, 1);
        let mut sum = big(0);
        for (col, &n) in g.w()[1].iter().enumerate() {
            for pos in 0..n {
                sum += gamma_count_brute_with_pair(&g, v, (col, pos)).unwrap();
            }
        }
        assert_eq!(sum, total);
        assert!(gamma_count_brute_with_pair(&g, (1, 1), (0, 0)).is_err());
    }

    #[test]
    fn omega_examples() {
        let o = SubstructureOmega::new(1, 1, vec![2]).unwrap();
        assert_eq!(omega_count_brute(&o).unwrap(), big(2));
        for s in 1..=4 {
            let o = SubstructureOmega::new(1, 1, vec![s]).unwrap();
            assert_eq!(omega_count_brute(&o).unwrap(), factorial(s as u64));
        }
    }

    #[test]
    fn omega_sums_reproduce_vertical_counts() {
        for k in 1..=3usize {
            for s in 1..=3usize {
                for r1 in 1..=k {
                    for r2 in 1..=k {
                        let mut sum = big(0);
                        for w in weak_compositions(s, k) {
                            let o = SubstructureOmega::new(r1, r2, w).unwrap();
                            sum += omega_count_brute(&o).unwrap();
                        }
                        assert_eq!(sum, vertical_array_count_brute(k, r1, r2, s).unwrap());
                    }
                }
            }
        }
    }
}
