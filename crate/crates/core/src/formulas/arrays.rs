use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::arrays::{
    check_full, check_full_where_occupied, classify_columns, is_irreducible, Cells,
    SubstructureGamma, SubstructureOmega,
};
use crate::combinatorics::{binomial, expect_integer, factorial, multinomial, pow2};
use crate::error::{Error, Result};

fn ratio(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Number of proper vertical arrays `v(K, R1, R2, s)`.
pub fn vertical_count_formula(k: usize, r1: usize, r2: usize, s: usize) -> Result<BigInt> {
    if k == 0 || r1 == 0 || r2 == 0 || s == 0 {
        return Err(Error::InvalidParameter(format!(
            "K, R1, R2, s must all be positive (got {k}, {r1}, {r2}, {s})"
        )));
    }
    let (k, r1, r2, s) = (k as i64, r1 as i64, r2 as i64, s as i64);
    let lead = ratio(factorial((s + r1 - 1) as u64) * factorial((s + r2 - 1) as u64))
        / ratio(factorial((s + r1 + r2 - 2) as u64));
    let bracket = binomial(k - 1, r1 - 1) * binomial(k - 1, r2 - 1)
        - binomial(k - 1, s + r1 - 1) * binomial(k - 1, s + r2 - 1);
    let value = lead * ratio(binomial(s + r1 + r2 - 2, k - 1) * bracket);
    expect_integer(&value, &format!("v({k}, {r1}, {r2}, {s})"))
}

/// Shared tail of the two arrowed-array formulas:
/// `(s-1)! [x / (s-A) + y / ((s-A)(s-A-1))]` for `s >= A + 2`,
/// `(s-1)! x` for `s = A + 1`, and `0` for `s <= A`.
fn three_branches(s: usize, a: usize, x: BigInt, y: BigInt, what: &str) -> Result<BigInt> {
    if s <= a {
        return Ok(BigInt::zero());
    }
    let lead = ratio(factorial(s as u64 - 1));
    if s == a + 1 {
        return expect_integer(&(lead * ratio(x)), what);
    }
    let gap = (s - a) as i64;
    let value = lead * (ratio(x) / ratio(gap) + ratio(y) / ratio(gap * (gap - 1)));
    expect_integer(&value, what)
}

/// `T(Gamma)` for an irreducible substructure satisfying the full
/// condition, from its column-type tally.
pub fn gamma_count_formula(g: &SubstructureGamma) -> Result<BigInt> {
    if !is_irreducible(g) {
        return Err(Error::Precondition("substructure is not irreducible".into()));
    }
    if !check_full(g) {
        return Err(Error::Precondition("substructure does not satisfy the full condition".into()));
    }
    let s = g.s();
    if s == 0 {
        return Err(Error::Precondition("s must be at least 1".into()));
    }
    let t = classify_columns(g)?;
    let big = |n: usize| BigInt::from(n);
    let (top, bottom) = (0, 1);
    let b2d2 = big(t.b[bottom] + t.d[bottom]);
    let x = &b2d2 * big(t.a_tilde[top] + t.c[top] + t.c_tilde[top] + t.d[top]);
    let y = big(t.b[top]) * big(t.c[bottom] + t.c_bar[bottom] + t.c_tilde[bottom])
        - big(t.c_bar[top]) * &b2d2;
    three_branches(s, t.type_a_columns, x, y, "T(Gamma)")
}

/// `T(Gamma)` for a substructure without arrows. Vertex-free columns may
/// leave cells empty; every column holding a vertex needs an object in both
/// cells. Here `A` counts unmarked columns with a vertex in each row.
pub fn gamma_count_formula_noarrows(g: &SubstructureGamma) -> Result<BigInt> {
    if !g.phi().is_empty() {
        return Err(Error::Precondition("substructure has arrows".into()));
    }
    if !check_full_where_occupied(g) {
        return Err(Error::Precondition(
            "a column holding vertices has a cell without objects".into(),
        ));
    }
    let s = g.s();
    if s == 0 {
        return Err(Error::Precondition("s must be at least 1".into()));
    }
    let mut a = 0;
    let (mut b, mut c, mut d) = ([0usize; 2], [0usize; 2], [0usize; 2]);
    for col in 0..g.k() {
        let slot = match (g.is_marked(0, col), g.is_marked(1, col)) {
            (false, false) => {
                if g.vertices(0, col) > 0 && g.vertices(1, col) > 0 {
                    a += 1;
                }
                continue;
            }
            (true, false) => &mut b,
            (false, true) => &mut c,
            (true, true) => &mut d,
        };
        slot[0] += g.vertices(0, col);
        slot[1] += g.vertices(1, col);
    }
    let x = BigInt::from((b[1] + d[1]) * (c[0] + d[0]));
    let y = BigInt::from(b[0] * c[1]);
    three_branches(s, a, x, y, "T(Gamma) without arrows")
}

/// `T(Omega)` summed over the number `A` of unmarked occupied columns.
pub fn omega_count_formula(o: &SubstructureOmega) -> Result<BigInt> {
    let (k, r1, r2) = (o.k() as i64, o.r1() as i64, o.r2() as i64);
    let s = o.s() as i64;
    let f = o.f() as i64;
    let mut sum = BigRational::zero();
    for a in 0..s {
        let parts = [k - a - r1, k - a - r2, r1 + r2 - k + a - 1];
        let term = binomial(f - 1, a) * multinomial(&parts);
        sum += ratio(term * s) / ratio(s - a);
    }
    expect_integer(&(sum * ratio(factorial(s as u64))), "T(Omega)")
}

/// Canonical-array count `c_K` assembled from vertical counts: strip the
/// non-mixed pairs, `t_i` of them from row `i`, and count what remains.
/// `v_source(K, R1, R2, s)` supplies the vertical counts.
pub fn canonical_from_vertical<F>(k: usize, q1: usize, q2: usize, s: usize, v_source: F) -> Result<BigInt>
where
    F: Fn(usize, usize, usize, usize) -> Result<BigInt>,
{
    if s == 0 || k == 0 {
        return Err(Error::InvalidParameter("K and s must be at least 1".into()));
    }
    let (p1, p2) = (2 * q1 + s, 2 * q2 + s);
    let lead = factorial(p1 as u64) * factorial(p2 as u64);
    let mut sum = BigRational::zero();
    for t1 in 0..=q1 {
        for t2 in 0..=q2 {
            let v = v_source(k, q1 - t1 + 1, q2 - t2 + 1, s)?;
            if v.is_zero() {
                continue;
            }
            let denom = pow2((t1 + t2) as u64)
                * factorial(t1 as u64)
                * factorial(t2 as u64)
                * factorial((s + q1 - t1) as u64)
                * factorial((s + q2 - t2) as u64);
            sum += ratio(&lead * v) / ratio(denom);
        }
    }
    expect_integer(&sum, &format!("c_{k}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{BTreeMap, BTreeSet};

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn gamma(w: [Vec<usize>; 2], r1: &[usize], r2: &[usize]) -> SubstructureGamma {
        let set = |v: &[usize]| v.iter().copied().collect::<BTreeSet<_>>();
        SubstructureGamma::new(w, set(r1), set(r2), BTreeMap::new()).unwrap()
    }

    #[test]
    fn vertical_examples() {
        assert_eq!(vertical_count_formula(1, 1, 1, 1).unwrap(), big(1));
        assert_eq!(vertical_count_formula(1, 1, 1, 2).unwrap(), big(2));
        assert_eq!(vertical_count_formula(3, 1, 1, 1).unwrap(), big(0));
        assert!(vertical_count_formula(1, 0, 1, 1).is_err());
    }

    #[test]
    fn gamma_examples() {
        let all_d = gamma([vec![1, 1, 1], vec![1, 1, 1]], &[0, 1, 2], &[0, 1, 2]);
        assert_eq!(gamma_count_formula(&all_d).unwrap(), big(6));
        let a_then_d = gamma([vec![1, 1], vec![1, 1]], &[1], &[1]);
        assert_eq!(gamma_count_formula(&a_then_d).unwrap(), big(1));
        // two A columns and s = 2
        let no_room = gamma([vec![1, 1, 0], vec![1, 1, 0]], &[2], &[2]);
        assert_eq!(gamma_count_formula(&no_room).unwrap(), big(0));
        // empty unmarked bottom cell: not full
        let not_full = gamma([vec![1, 1], vec![2, 0]], &[0], &[0]);
        assert!(gamma_count_formula(&not_full).is_err());
    }

    #[test]
    fn noarrow_examples() {
        for s in 1..=4usize {
            let g = gamma([vec![s], vec![s]], &[0], &[0]);
            assert_eq!(gamma_count_formula_noarrows(&g).unwrap(), factorial(s as u64));
            let g = gamma([vec![0, s], vec![0, s]], &[0], &[0]);
            assert_eq!(gamma_count_formula_noarrows(&g).unwrap(), big(0));
        }
        // vertex-free column unmarked at the top: not full, still covered
        let g = gamma([vec![1, 0], vec![1, 0]], &[0], &[0, 1]);
        assert!(!check_full(&g));
        assert_eq!(gamma_count_formula_noarrows(&g).unwrap(), big(1));
        // column 0 holds a bottom vertex but its top cell is empty
        let g = gamma([vec![0, 1, 0], vec![1, 0, 0]], &[1], &[0, 1, 2]);
        assert!(gamma_count_formula_noarrows(&g).is_err());
    }

    #[test]
    fn omega_examples() {
        for s in 1..=5usize {
            let o = SubstructureOmega::new(1, 1, vec![s]).unwrap();
            assert_eq!(omega_count_formula(&o).unwrap(), factorial(s as u64));
        }
        let o = SubstructureOmega::new(1, 1, vec![2]).unwrap();
        assert_eq!(omega_count_formula(&o).unwrap(), big(2));
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(canonical_from_vertical(1, 1, 0, 1, vertical_count_formula).unwrap(), big(3));
        assert_eq!(canonical_from_vertical(1, 0, 0, 1, vertical_count_formula).unwrap(), big(1));
    }
}
