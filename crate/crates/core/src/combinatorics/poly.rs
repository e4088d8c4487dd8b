//! Polynomials in the binomial basis `C(x, k)` and in the monomial basis.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Map, Value};

use super::integers::{binomial, expect_integer, factorial};
use crate::error::Result;

/// `sum_k c_k * C(x, k)` with exact integer coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BinomialPoly {
    coeffs: BTreeMap<u32, BigInt>,
}

/// `sum_L c_L * x^L` with exact rational coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MonomialPoly {
    coeffs: BTreeMap<u32, BigRational>,
}

impl BinomialPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_coeffs<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (u32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (k, c) in iter {
            p.add_term(k, c.into());
        }
        p
    }

    /// Adds `c * C(x, k)`.
    pub fn add_term(&mut self, k: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(k).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn coeff(&self, k: u32) -> BigInt {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    /// Nonzero coefficients in increasing `k`.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exact value at an integer point, using `C(x, k) = 0` outside `0..=x`.
    pub fn eval(&self, x: i64) -> BigRational {
        let total: BigInt = self
            .coeffs
            .iter()
            .map(|(&k, c)| c * binomial(x, k as i64))
            .sum();
        BigRational::from_integer(total)
    }

    /// Expands `C(x, k) = x(x-1)...(x-k+1)/k!` into the monomial basis.
    pub fn to_monomial(&self) -> MonomialPoly {
        let mut out = MonomialPoly::zero();
        for (&k, c) in &self.coeffs {
            // falling factorial x(x-1)...(x-k+1), lowest degree first
            let mut falling = vec![BigInt::one()];
            for j in 0..k {
                let mut next = vec![BigInt::zero(); falling.len() + 1];
                for (deg, a) in falling.iter().enumerate() {
                    next[deg + 1] += a;
                    next[deg] -= a * BigInt::from(j);
                }
                falling = next;
            }
            let denom = factorial(k as u64);
            for (deg, a) in falling.into_iter().enumerate() {
                out.add_term(deg as u32, BigRational::new(a * c, denom.clone()));
            }
        }
        out
    }

    /// `{"basis": "binomial", "coeffs": {"<k>": "<integer>"}}`.
    pub fn to_json(&self) -> Value {
        let coeffs: Map<String, Value> = self
            .coeffs
            .iter()
            .map(|(k, c)| (k.to_string(), Value::String(c.to_string())))
            .collect();
        json!({ "basis": "binomial", "coeffs": coeffs })
    }
}

impl MonomialPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_coeffs<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (u32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (k, c) in iter {
            p.add_term(k, BigRational::from_integer(c.into()));
        }
        p
    }

    pub fn add_term(&mut self, deg: u32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(deg).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&deg);
        }
    }

    pub fn coeff(&self, deg: u32) -> BigRational {
        self.coeffs.get(&deg).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigRational)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: i64) -> BigRational {
        let x = BigRational::from_integer(x.into());
        // Horner from the top degree down
        let Some(top) = self.degree() else {
            return BigRational::zero();
        };
        (0..=top)
            .rev()
            .fold(BigRational::zero(), |acc, deg| acc * &x + self.coeff(deg))
    }

    /// Rebuilds the binomial-basis form from forward differences at
    /// `x = 0, 1, ..., degree`. Fails if a coefficient is not an integer.
    pub fn to_binomial(&self) -> Result<BinomialPoly> {
        let n = self.degree().unwrap_or(0) as i64;
        let mut diffs: Vec<BigRational> = (0..=n).map(|x| self.eval(x)).collect();
        let mut out = BinomialPoly::zero();
        for k in 0..=n as u32 {
            let c = expect_integer(&diffs[0], &format!("binomial coefficient {k}"))?;
            out.add_term(k, c);
            diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        Ok(out)
    }

    /// Coefficients as integers, if they all are.
    pub fn integer_coeffs(&self) -> Result<BTreeMap<u32, BigInt>> {
        self.coeffs
            .iter()
            .map(|(k, c)| Ok((*k, expect_integer(c, &format!("coefficient of x^{k}"))?)))
            .collect()
    }

    pub fn has_nonnegative_integer_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer() && !c.is_negative())
    }

    /// `{"basis": "monomial", "coeffs": {"<L>": "<integer>"}}`.
    pub fn to_json(&self) -> Result<Value> {
        let coeffs: Map<String, Value> = self
            .integer_coeffs()?
            .into_iter()
            .map(|(k, c)| (k.to_string(), Value::String(c.to_string())))
            .collect();
        Ok(json!({ "basis": "monomial", "coeffs": coeffs }))
    }
}

impl fmt::Display for MonomialPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (deg, c)) in self.coeffs.iter().rev().enumerate() {
            let (sign, abs) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let show_coeff = !abs.is_one() || *deg == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match deg {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{deg}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for BinomialPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(k, c)| format!("{c}*C(x,{k})"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn binomial_to_monomial_examples() {
        let p = BinomialPoly::from_coeffs([(1, 1)]);
        assert_eq!(p.to_monomial(), MonomialPoly::from_coeffs([(1, 1)]));

        let p = BinomialPoly::from_coeffs([(2, 2)]);
        assert_eq!(p.to_monomial(), MonomialPoly::from_coeffs([(2, 1), (1, -1)]));

        let p = BinomialPoly::from_coeffs([(1, 1), (2, 2)]);
        assert_eq!(p.to_monomial(), MonomialPoly::from_coeffs([(2, 1)]));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(BinomialPoly::from_coeffs([(1, 1)]).eval(5), rat(5));
        assert_eq!(BinomialPoly::from_coeffs([(2, 2)]).eval(1), rat(0));
        assert_eq!(BinomialPoly::from_coeffs([(2, 2)]).eval(3), rat(6));
        assert_eq!(MonomialPoly::from_coeffs([(3, 2), (1, 1)]).eval(2), rat(18));
    }

    #[test]
    fn monomial_back_to_binomial() {
        let p = BinomialPoly::from_coeffs([(1, 3), (2, 12), (3, 12)]);
        assert_eq!(p.to_monomial().to_binomial().unwrap(), p);
        let half = {
            let mut m = MonomialPoly::zero();
            m.add_term(1, BigRational::new(1.into(), 2.into()));
            m
        };
        assert!(half.to_binomial().is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(MonomialPoly::from_coeffs([(3, 2), (1, 1)]).to_string(), "2x^3 + x");
        assert_eq!(MonomialPoly::from_coeffs([(2, 1), (1, -1)]).to_string(), "x^2 - x");
        assert_eq!(MonomialPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_uses_string_integers() {
        let p = BinomialPoly::from_coeffs([(1, 3), (2, 12)]);
        assert_eq!(
            p.to_json().to_string(),
            r#"{"basis":"binomial","coeffs":{"1":"3","2":"12"}}"#
        );
        let m = MonomialPoly::from_coeffs([(3, 2), (1, 1)]);
        assert_eq!(
            m.to_json().unwrap().to_string(),
            r#"{"basis":"monomial","coeffs":{"1":"1","3":"2"}}"#
        );
    }
}
