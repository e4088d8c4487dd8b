use std::collections::{BTreeMap, BTreeSet};

use crate::combinatorics::Pairing;
use crate::error::{Error, Result};

use super::{Balance, Cells, Forest};

/// Slot bookkeeping shared by paired and arrowed arrays.
///
/// Slots are numbered row-major: all top-row cells left to right, then all
/// bottom-row cells; inside a cell, slots run left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Layout {
    w: [Vec<usize>; 2],
    start: [Vec<usize>; 2],
    cell: Vec<(usize, usize)>,
}

impl Layout {
    fn new(w: [Vec<usize>; 2]) -> Self {
        let mut start = [Vec::new(), Vec::new()];
        let mut cell = Vec::new();
        for row in 0..2 {
            for (col, &n) in w[row].iter().enumerate() {
                start[row].push(cell.len());
                cell.extend(std::iter::repeat_n((row, col), n));
            }
        }
        Layout { w, start, cell }
    }
}

/// A `2 x K` array of cells holding ordered vertex slots, a set of marked
/// columns per row, and a pairing of all slots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairedArray {
    layout: Layout,
    marks: [BTreeSet<usize>; 2],
    pairing: Pairing,
}

impl PairedArray {
    /// `w[row][col]` is the number of slots in cell `(row, col)`;
    /// `marks[row]` the marked columns of that row.
    pub fn new(w: [Vec<usize>; 2], marks: [BTreeSet<usize>; 2], pairing: Pairing) -> Result<Self> {
        let k = w[0].len();
        if k == 0 || w[1].len() != k {
            return Err(Error::Malformed(format!(
                "rows have {} and {} columns",
                w[0].len(),
                w[1].len()
            )));
        }
        for (row, m) in marks.iter().enumerate() {
            if m.is_empty() || m.iter().any(|&c| c >= k) {
                return Err(Error::Malformed(format!(
                    "row {row} marks {m:?} must be a nonempty subset of 0..{k}"
                )));
            }
        }
        let layout = Layout::new(w);
        if pairing.ground_size() != layout.cell.len() {
            return Err(Error::Malformed(format!(
                "pairing covers {} slots, array has {}",
                pairing.ground_size(),
                layout.cell.len()
            )));
        }
        Ok(PairedArray { layout, marks, pairing })
    }

    pub(crate) fn set_pairing(&mut self, partner: &[usize]) {
        self.pairing = Pairing::from_partner_unchecked(partner.to_vec());
    }

    pub fn k(&self) -> usize {
        self.layout.w[0].len()
    }

    pub fn occupancy(&self) -> &[Vec<usize>; 2] {
        &self.layout.w
    }

    pub fn marks(&self, row: usize) -> &BTreeSet<usize> {
        &self.marks[row]
    }

    pub fn pairing(&self) -> &Pairing {
        &self.pairing
    }

    pub fn slot_count(&self) -> usize {
        self.layout.cell.len()
    }

    pub fn row_len(&self, row: usize) -> usize {
        self.layout.w[row].iter().sum()
    }

    /// Slot id of position `pos` in cell `(row, col)`.
    pub fn slot(&self, row: usize, col: usize, pos: usize) -> usize {
        debug_assert!(pos < self.layout.w[row][col]);
        self.layout.start[row][col] + pos
    }

    /// `(row, col)` of a slot.
    pub fn cell_of(&self, slot: usize) -> (usize, usize) {
        self.layout.cell[slot]
    }

    pub fn rightmost(&self, row: usize, col: usize) -> Option<usize> {
        let n = self.layout.w[row][col];
        (n > 0).then(|| self.slot(row, col, n - 1))
    }

    pub fn is_mixed(&self, slot: usize) -> bool {
        self.cell_of(slot).0 != self.cell_of(self.pairing.partner(slot)).0
    }

    /// Number of mixed vertices in cell `(row, col)`.
    pub fn mixed_in_cell(&self, row: usize, col: usize) -> usize {
        (0..self.layout.w[row][col])
            .filter(|&pos| self.is_mixed(self.slot(row, col, pos)))
            .count()
    }

    /// Number of pairs with both ends in `row`.
    pub fn row_pairs(&self, row: usize) -> usize {
        self.pairing
            .pairs()
            .filter(|&(a, b)| self.cell_of(a).0 == row && self.cell_of(b).0 == row)
            .count()
    }

    pub fn mixed_pairs(&self) -> usize {
        self.pairing.pairs().filter(|&(a, _)| self.is_mixed(a)).count()
    }

    /// True when every pair joins the two rows.
    pub fn is_vertical(&self) -> bool {
        (0..self.slot_count()).all(|s| self.is_mixed(s))
    }

    /// Column reached from the rightmost vertex of `(row, col)` through the
    /// pairing.
    fn rightmost_target(&self, row: usize, col: usize) -> Option<usize> {
        self.rightmost(row, col)
            .map(|v| self.cell_of(self.pairing.partner(v)).1)
    }
}

impl Cells for PairedArray {
    fn columns(&self) -> usize {
        self.k()
    }

    fn vertices(&self, row: usize, col: usize) -> usize {
        self.layout.w[row][col]
    }

    fn is_marked(&self, row: usize, col: usize) -> bool {
        self.marks[row].contains(&col)
    }
}

impl Balance for PairedArray {
    /// Mixed-vertex balance: the two cells of each column hold equally many
    /// mixed vertices.
    fn is_balanced(&self) -> bool {
        (0..self.k()).all(|c| self.mixed_in_cell(0, c) == self.mixed_in_cell(1, c))
    }
}

impl Forest for PairedArray {
    fn forest_function(&self, row: usize) -> Vec<Option<usize>> {
        (0..self.k())
            .map(|col| {
                if self.is_marked(row, col) {
                    None
                } else {
                    self.rightmost_target(row, col)
                }
            })
            .collect()
    }
}

/// A vertical paired array together with arrows `phi` drawn above the top
/// row. Arrow tails never sit in a top-row marked column.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArrowedArray {
    array: PairedArray,
    phi: BTreeMap<usize, usize>,
}

impl ArrowedArray {
    pub fn new(array: PairedArray, phi: BTreeMap<usize, usize>) -> Result<Self> {
        if !array.is_vertical() {
            return Err(Error::Malformed("arrowed arrays need every pair mixed".into()));
        }
        let k = array.k();
        for (&tail, &head) in &phi {
            if tail >= k || head >= k {
                return Err(Error::Malformed(format!("arrow {tail} -> {head} out of range")));
            }
            if array.is_marked(0, tail) {
                return Err(Error::Malformed(format!(
                    "arrow tail in column {tail} shares a cell with a mark"
                )));
            }
        }
        Ok(ArrowedArray { array, phi })
    }

    pub(crate) fn array_mut(&mut self) -> &mut PairedArray {
        &mut self.array
    }

    pub fn array(&self) -> &PairedArray {
        &self.array
    }

    pub fn phi(&self) -> &BTreeMap<usize, usize> {
        &self.phi
    }
}

impl Cells for ArrowedArray {
    fn columns(&self) -> usize {
        self.array.k()
    }

    fn vertices(&self, row: usize, col: usize) -> usize {
        self.array.vertices(row, col)
    }

    fn is_marked(&self, row: usize, col: usize) -> bool {
        self.array.is_marked(row, col)
    }

    fn has_tail(&self, col: usize) -> bool {
        self.phi.contains_key(&col)
    }
}

impl Balance for ArrowedArray {
    fn is_balanced(&self) -> bool {
        super::vertex_balanced(self)
    }
}

impl Forest for ArrowedArray {
    /// Arrows take precedence in the top row; otherwise the rightmost
    /// vertex's partner column.
    fn forest_function(&self, row: usize) -> Vec<Option<usize>> {
        let mut psi = self.array.forest_function(row);
        if row == 0 {
            for (&tail, &head) in &self.phi {
                psi[tail] = Some(head);
            }
        }
        psi
    }
}
