use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Number of disjoint cycles of a permutation given in one-line notation.
pub fn cycle_count(perm: &[usize]) -> Result<usize> {
    let n = perm.len();
    let mut seen = vec![false; n];
    for &image in perm {
        if image >= n || seen[image] {
            return Err(Error::NotPermutation(format!(
                "image {image} out of range or repeated (length {n})"
            )));
        }
        seen[image] = true;
    }
    seen.iter_mut().for_each(|s| *s = false);
    let mut cycles = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
        }
    }
    Ok(cycles)
}

/// `outer ∘ inner`: apply `inner` first.
pub fn compose(outer: &[usize], inner: &[usize]) -> Vec<usize> {
    debug_assert_eq!(outer.len(), inner.len());
    inner.iter().map(|&i| outer[i]).collect()
}

/// Inverse of a permutation in one-line notation.
pub fn invert(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

/// A fixed-point-free involution on `0..ground_size`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Pairing {
    partner: Vec<usize>,
}

impl Pairing {
    pub fn new(partner: Vec<usize>) -> Result<Self> {
        let n = partner.len();
        for (i, &p) in partner.iter().enumerate() {
            if p >= n {
                return Err(Error::InvalidPairing(format!("partner {p} of {i} out of range")));
            }
            if p == i {
                return Err(Error::InvalidPairing(format!("{i} is a fixed point")));
            }
            if partner[p] != i {
                return Err(Error::InvalidPairing(format!("{i} -> {p} is not reciprocated")));
            }
        }
        Ok(Pairing { partner })
    }

    /// Builds a pairing of `0..n` from an explicit list of pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut partner = vec![usize::MAX; n];
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::InvalidPairing(format!("pair ({a}, {b}) out of range")));
            }
            if partner[a] != usize::MAX || partner[b] != usize::MAX {
                return Err(Error::InvalidPairing(format!("element of ({a}, {b}) paired twice")));
            }
            partner[a] = b;
            partner[b] = a;
        }
        if let Some(i) = partner.iter().position(|&p| p == usize::MAX) {
            return Err(Error::InvalidPairing(format!("{i} is unpaired")));
        }
        Pairing::new(partner)
    }

    pub(crate) fn from_partner_unchecked(partner: Vec<usize>) -> Self {
        debug_assert!(Pairing::new(partner.clone()).is_ok());
        Pairing { partner }
    }

    pub fn ground_size(&self) -> usize {
        self.partner.len()
    }

    pub fn partner(&self, i: usize) -> usize {
        self.partner[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.partner
    }

    /// Pairs `(a, b)` with `a < b`, ordered by `a`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.partner
            .iter()
            .enumerate()
            .filter(|(i, &p)| *i < p)
            .map(|(i, &p)| (i, p))
    }
}

impl TryFrom<Vec<usize>> for Pairing {
    type Error = Error;

    fn try_from(partner: Vec<usize>) -> Result<Self> {
        Pairing::new(partner)
    }
}

impl From<Pairing> for Vec<usize> {
    fn from(p: Pairing) -> Self {
        p.partner
    }
}

/// The two-row ground set with `p1` elements in the top row and `p2` in the
/// bottom row. Element `(row, pos)` (row 0 or 1, position `0..p_row`) is
/// linearised to `pos` for the top row and `p1 + pos` for the bottom row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoRowGround {
    pub p1: usize,
    pub p2: usize,
}

impl TwoRowGround {
    pub fn new(p1: usize, p2: usize) -> Result<Self> {
        if p1 == 0 || p2 == 0 {
            return Err(Error::InvalidParameter("both rows need at least one element".into()));
        }
        if !(p1 + p2).is_multiple_of(2) {
            return Err(Error::InvalidParameter(format!("p1 + p2 = {} is odd", p1 + p2)));
        }
        Ok(TwoRowGround { p1, p2 })
    }

    /// Ground for the parameter triple `(q1, q2; s)`.
    pub fn for_params(q1: usize, q2: usize, s: usize) -> Result<Self> {
        TwoRowGround::new(2 * q1 + s, 2 * q2 + s)
    }

    pub fn len(&self) -> usize {
        self.p1 + self.p2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            self.p1
        } else {
            self.p2
        }
    }

    pub fn index(&self, row: usize, pos: usize) -> usize {
        debug_assert!(pos < self.row_len(row));
        if row == 0 {
            pos
        } else {
            self.p1 + pos
        }
    }

    pub fn row_of(&self, idx: usize) -> usize {
        usize::from(idx >= self.p1)
    }

    pub fn position_of(&self, idx: usize) -> usize {
        if idx < self.p1 {
            idx
        } else {
            idx - self.p1
        }
    }

    /// The canonical permutation: one cycle per row, each element mapped to
    /// its successor within the row.
    pub fn gamma(&self) -> Vec<usize> {
        (0..self.len())
            .map(|i| {
                let row = self.row_of(i);
                let len = self.row_len(row);
                self.index(row, (self.position_of(i) + 1) % len)
            })
            .collect()
    }

    pub fn gamma_inverse(&self) -> Vec<usize> {
        invert(&self.gamma())
    }

    /// Number of mixed pairs (one end in each row) of `mu`.
    pub fn mixed_pairs(&self, mu: &Pairing) -> usize {
        mu.pairs().filter(|&(a, b)| self.row_of(a) != self.row_of(b)).count()
    }

    /// Number of pairs of `mu` lying entirely inside `row`.
    pub fn row_pairs(&self, mu: &Pairing, row: usize) -> usize {
        mu.pairs()
            .filter(|&(a, b)| self.row_of(a) == row && self.row_of(b) == row)
            .count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_count_examples() {
        assert_eq!(cycle_count(&[0, 1, 2, 3]).unwrap(), 4);
        assert_eq!(cycle_count(&[1, 2, 3, 0]).unwrap(), 1);
        assert_eq!(cycle_count(&[1, 0, 3, 2]).unwrap(), 2);
        assert_eq!(cycle_count(&[]).unwrap(), 0);
        assert!(cycle_count(&[0, 0]).is_err());
        assert!(cycle_count(&[2, 0]).is_err());
    }

    #[test]
    fn pairing_validation() {
        assert!(Pairing::new(vec![1, 0, 3, 2]).is_ok());
        assert!(Pairing::new(vec![0, 1]).is_err());
        assert!(Pairing::new(vec![1, 2, 0]).is_err());
        assert!(Pairing::from_pairs(4, &[(0, 1)]).is_err());
        let p = Pairing::from_pairs(4, &[(0, 3), (1, 2)]).unwrap();
        assert_eq!(p.pairs().collect::<Vec<_>>(), vec![(0, 3), (1, 2)]);
    }

    #[test]
    fn pairing_json_rejects_non_involution() {
        let ok: Pairing = serde_json::from_str("[1,0]").unwrap();
        assert_eq!(ok.partner(0), 1);
        assert!(serde_json::from_str::<Pairing>("[0,1]").is_err());
    }

    #[test]
    fn two_row_gamma_has_one_cycle_per_row() {
        let g = TwoRowGround::new(3, 5).unwrap();
        let gamma = g.gamma();
        assert_eq!(cycle_count(&gamma).unwrap(), 2);
        assert_eq!(gamma[2], 0);
        assert_eq!(gamma[7], 3);
        assert_eq!(compose(&gamma, &g.gamma_inverse()), (0..8).collect::<Vec<_>>());
        assert!(TwoRowGround::new(2, 1).is_err());
    }
}
