use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::combinatorics::{
    binomial, double_factorial, expect_integer, factorial, pow2, recip_factorial, BinomialPoly,
    CycleCountVector, MapClass,
};
use crate::error::{Error, Result};

fn ratio(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

/// One-vertex series: the coefficient of `C(x, k)` is
/// `(2q-1)!! 2^(k-1) C(q, k-1)` for `k = 1..=q+1`.
pub fn hz_series(q: usize) -> Result<BinomialPoly> {
    if q == 0 {
        return Err(Error::InvalidParameter(
            "q must be positive; the empty one-vertex map is not covered".into(),
        ));
    }
    let lead = double_factorial(2 * q as i64 - 1)?;
    let mut p = BinomialPoly::zero();
    for k in 1..=(q as u32 + 1) {
        p.add_term(k, &lead * pow2(u64::from(k) - 1) * binomial(q as i64, i64::from(k) - 1));
    }
    Ok(p)
}

fn check_s(s: usize) -> Result<()> {
    if s == 0 {
        return Err(Error::InvalidParameter("s must be at least 1".into()));
    }
    Ok(())
}

/// Two-vertex series as a triple sum over `k, i, j`, with
/// `Delta_k = C(k-1, q1-i) C(k-1, q2-j) - C(k-1, q1+s-i) C(k-1, q2+s-j)`.
pub fn gs_series(q1: usize, q2: usize, s: usize) -> Result<BinomialPoly> {
    check_s(s)?;
    let (q1, q2, s) = (q1 as i64, q2 as i64, s as i64);
    let (p1, p2) = (2 * q1 + s, 2 * q2 + s);
    let d = q1 + q2 + s;
    let lead = factorial(p1 as u64) * factorial(p2 as u64);
    let mut p = BinomialPoly::zero();
    for k in 1..=(d + 1) {
        let mut sum = BigRational::zero();
        for i in 0..=(p1 / 2) {
            for j in 0..=(p2 / 2) {
                let m = d - i - j;
                let weight = recip_factorial(m);
                if weight.is_zero() {
                    continue;
                }
                let delta = binomial(k - 1, q1 - i) * binomial(k - 1, q2 - j)
                    - binomial(k - 1, q1 + s - i) * binomial(k - 1, q2 + s - j);
                let denom = pow2((i + j) as u64) * factorial(i as u64) * factorial(j as u64);
                sum += weight * ratio(binomial(m, k - 1) * delta) / ratio(denom);
            }
        }
        let c = expect_integer(&(sum * ratio(lead.clone())), &format!("C(x,{k}) coefficient"))?;
        p.add_term(k as u32, c);
    }
    Ok(p)
}

/// The same series as a double sum over `t1, t2`, each term landing on
/// `C(x, d - t1 - t2 + 1)`.
pub fn gs_series_simplified(q1: usize, q2: usize, s: usize) -> Result<BinomialPoly> {
    check_s(s)?;
    let (q1, q2, s) = (q1 as i64, q2 as i64, s as i64);
    let (p1, p2) = (2 * q1 + s, 2 * q2 + s);
    let d = q1 + q2 + s;
    let lead = factorial(p1 as u64) * factorial(p2 as u64);
    let mut coeffs: BTreeMap<i64, BigRational> = BTreeMap::new();
    for t1 in 0..=(q1 + s) {
        for t2 in 0..=(q2 + s) {
            let m = d - t1 - t2;
            let weight = recip_factorial(m);
            if weight.is_zero() {
                continue;
            }
            let g1 = recip_factorial(q1)
                * recip_factorial(q2)
                * recip_factorial(s + q1 - t1)
                * recip_factorial(s + q2 - t2);
            let g2 = recip_factorial(q1 + s)
                * recip_factorial(q2 + s)
                * recip_factorial(q1 - t1)
                * recip_factorial(q2 - t2);
            let front = factorial((d - t1) as u64) * factorial((d - t2) as u64) * &lead;
            let denom = pow2((t1 + t2) as u64) * factorial(t1 as u64) * factorial(t2 as u64);
            let term = ratio(front) / ratio(denom) * weight * (g1 - g2);
            *coeffs.entry(m + 1).or_insert_with(BigRational::zero) += term;
        }
    }
    let mut p = BinomialPoly::zero();
    for (k, c) in coeffs {
        p.add_term(k as u32, expect_integer(&c, &format!("C(x,{k}) coefficient"))?);
    }
    Ok(p)
}

/// `sum_K f_K C(x, K)`.
pub fn series_from_surjections(f: &BTreeMap<usize, BigInt>) -> BinomialPoly {
    BinomialPoly::from_coeffs(f.iter().map(|(&k, c)| (k as u32, c.clone())))
}

/// Reads the face counts `a_L` off a series for maps with `d` edges.
pub fn counts_from_series(d: usize, series: &BinomialPoly) -> Result<CycleCountVector> {
    CycleCountVector::from_monomial(d, &series.to_monomial())
}

/// One-vertex face counts from the closed form.
pub fn hz_counts(q: usize) -> Result<CycleCountVector> {
    counts_from_series(q, &hz_series(q)?)
}

/// Two-vertex face counts from the closed form.
pub fn gs_counts(q1: usize, q2: usize, s: usize) -> Result<CycleCountVector> {
    counts_from_series(q1 + q2 + s, &gs_series(q1, q2, s)?)
}

/// Reindexes face counts by genus through `2 - 2g = V - E + L`.
pub fn genus_counts(
    v: &CycleCountVector,
    n_vertices: usize,
    d_edges: usize,
) -> Result<BTreeMap<usize, BigInt>> {
    let class = match n_vertices {
        1 => MapClass::OneVertex,
        2 => MapClass::TwoVertex,
        n => return Err(Error::InvalidParameter(format!("{n} vertices; expected 1 or 2"))),
    };
    if d_edges == 0 || v.d() != d_edges {
        return Err(Error::InvalidParameter(format!(
            "counts are for {} edges, asked for {d_edges}",
            v.d()
        )));
    }
    let mut out = BTreeMap::new();
    for (faces, count) in v.nonzero() {
        let g = class.genus(d_edges, faces).ok_or_else(|| {
            Error::Parity(format!("{count} maps with {faces} faces have no integral genus"))
        })?;
        *out.entry(g).or_insert_with(BigInt::zero) += count;
    }
    Ok(out)
}

/// Evaluates `sum_L a_L x^L` at `x = 1`, the total pairing count.
pub fn series_total(series: &BinomialPoly) -> BigRational {
    series.eval(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::MonomialPoly;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn hz_examples() {
        assert_eq!(hz_series(1).unwrap().to_monomial(), MonomialPoly::from_coeffs([(2, 1)]));
        assert_eq!(
            hz_series(2).unwrap().to_monomial(),
            MonomialPoly::from_coeffs([(3, 2), (1, 1)])
        );
        assert_eq!(hz_series(2).unwrap(), BinomialPoly::from_coeffs([(1, 3), (2, 12), (3, 12)]));
        assert!(hz_series(0).is_err());
    }

    #[test]
    fn gs_examples() {
        for f in [gs_series, gs_series_simplified] {
            assert_eq!(f(0, 0, 1).unwrap().to_monomial(), MonomialPoly::from_coeffs([(1, 1)]));
            assert_eq!(f(0, 0, 2).unwrap().to_monomial(), MonomialPoly::from_coeffs([(2, 2)]));
            assert!(f(1, 1, 0).is_err());
        }
    }

    #[test]
    fn gs_total_at_one() {
        for (q1, q2, s) in [(1, 0, 1), (2, 1, 3), (0, 3, 2), (3, 3, 1)] {
            let (p1, p2) = ((2 * q1 + s) as i64, (2 * q2 + s) as i64);
            let want = binomial(p1, s as i64)
                * binomial(p2, s as i64)
                * factorial(s as u64)
                * double_factorial(2 * q1 as i64 - 1).unwrap()
                * double_factorial(2 * q2 as i64 - 1).unwrap();
            let total = series_total(&gs_series(q1, q2, s).unwrap());
            assert_eq!(total, BigRational::from_integer(want));
        }
    }

    #[test]
    fn surjection_series() {
        let f = BTreeMap::from([(1, big(1))]);
        assert_eq!(series_from_surjections(&f), gs_series(0, 0, 1).unwrap());
    }

    #[test]
    fn genus_examples() {
        let hz2 = CycleCountVector::from_counts(2, [big(1), big(0), big(2)]).unwrap();
        assert_eq!(genus_counts(&hz2, 1, 2).unwrap(), BTreeMap::from([(0, big(2)), (1, big(1))]));
        let gs002 = CycleCountVector::from_counts(2, [big(0), big(2)]).unwrap();
        assert_eq!(genus_counts(&gs002, 2, 2).unwrap(), BTreeMap::from([(0, big(2))]));
        let gs001 = CycleCountVector::from_counts(1, [big(1)]).unwrap();
        assert_eq!(genus_counts(&gs001, 2, 1).unwrap(), BTreeMap::from([(0, big(1))]));
        // wrong parity class
        assert!(genus_counts(&gs002, 1, 2).is_err());
        assert!(genus_counts(&gs002, 3, 2).is_err());
    }
}
