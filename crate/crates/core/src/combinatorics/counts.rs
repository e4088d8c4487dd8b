use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::poly::MonomialPoly;
use crate::error::{Error, Result};

/// Which family of maps a cycle-count vector describes. Determines the
/// parity class of the face counts through Euler's formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapClass {
    /// One vertex with `d` loops.
    OneVertex,
    /// Two vertices, `d` edges in total.
    TwoVertex,
}

impl MapClass {
    pub fn vertices(self) -> usize {
        match self {
            MapClass::OneVertex => 1,
            MapClass::TwoVertex => 2,
        }
    }

    /// Whether `faces` cycles give a non-negative integral genus for a map
    /// with `d` edges.
    pub fn admits(self, d: usize, faces: usize) -> bool {
        self.genus(d, faces).is_some()
    }

    /// Genus from Euler's formula `2 - 2g = V - E + F`, if it is a
    /// non-negative integer.
    pub fn genus(self, d: usize, faces: usize) -> Option<usize> {
        let twice = 2 - self.vertices() as i64 + d as i64 - faces as i64;
        (twice >= 0 && twice % 2 == 0).then_some((twice / 2) as usize)
    }
}

/// Counts `a_L` of pairings whose face permutation has exactly `L` cycles,
/// for `L = 1..=d+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleCountVector {
    d: usize,
    counts: Vec<BigInt>,
}

impl CycleCountVector {
    pub fn new(d: usize) -> Self {
        CycleCountVector { d, counts: vec![BigInt::zero(); d + 1] }
    }

    /// Builds a vector from `a_1, a_2, ...`; missing entries are zero.
    pub fn from_counts(d: usize, counts: impl IntoIterator<Item = BigInt>) -> Result<Self> {
        let mut v = Self::new(d);
        for (i, c) in counts.into_iter().enumerate() {
            v.set(i + 1, c)?;
        }
        Ok(v)
    }

    /// Reads the `a_L` off the monomial coefficients of a series. The
    /// constant term and anything past `x^(d+1)` must vanish, and every
    /// coefficient must be a non-negative integer.
    pub fn from_monomial(d: usize, poly: &MonomialPoly) -> Result<Self> {
        let mut v = Self::new(d);
        for (deg, c) in poly.terms() {
            if !c.is_integer() || c.is_negative() {
                return Err(Error::NonIntegral(format!(
                    "coefficient {c} of x^{deg} is not a count"
                )));
            }
            if deg == 0 {
                return Err(Error::InvalidParameter("series has a constant term".into()));
            }
            v.set(deg as usize, c.to_integer())?;
        }
        Ok(v)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// `a_L`; zero outside `1..=d+1`.
    pub fn get(&self, cycles: usize) -> BigInt {
        if cycles == 0 {
            return BigInt::zero();
        }
        self.counts.get(cycles - 1).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, cycles: usize, value: BigInt) -> Result<()> {
        if cycles == 0 || cycles > self.d + 1 {
            return Err(Error::InvalidParameter(format!(
                "cycle count {cycles} outside 1..={}",
                self.d + 1
            )));
        }
        self.counts[cycles - 1] = value;
        Ok(())
    }

    pub(crate) fn increment(&mut self, cycles: usize) {
        self.counts[cycles - 1] += 1;
    }

    pub(crate) fn merge(&mut self, other: &CycleCountVector) {
        debug_assert_eq!(self.d, other.d);
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
    }

    /// `(L, a_L)` for nonzero entries.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i + 1, c))
    }

    pub fn total(&self) -> BigInt {
        self.counts.iter().sum()
    }

    pub fn to_monomial(&self) -> MonomialPoly {
        let mut p = MonomialPoly::zero();
        for (l, c) in self.nonzero() {
            p.add_term(l as u32, BigRational::from_integer(c.clone()));
        }
        p
    }

    /// Checks that every nonzero `a_L` sits in the parity class allowed for
    /// `class`; returns the first offending `L`.
    pub fn check_parity(&self, class: MapClass) -> Result<()> {
        match self.nonzero().find(|(l, _)| !class.admits(self.d, *l)) {
            None => Ok(()),
            Some((l, c)) => Err(Error::Parity(format!(
                "a_{l} = {c} is nonzero but {l} cycles is impossible for {class:?} with d = {}",
                self.d
            ))),
        }
    }
}
