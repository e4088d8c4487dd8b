//! Paired arrays, arrowed arrays and their substructures, with the
//! non-empty / balance / forest / full condition checkers.
//!
//! Rows are indexed `0` (top) and `1` (bottom); columns `0..K`.
//!
//! An *object* of a cell is a vertex, a mark, or (top row only) an arrow
//! tail. The forest function of a row sends each unmarked column to the
//! column of the partner of its rightmost vertex, except that top-row arrow
//! tails override the vertex rule. A row satisfies the forest condition when
//! iterating its forest function from any column of its domain reaches a
//! marked column of that row.

mod paired;
mod substructure;

pub use paired::{ArrowedArray, PairedArray};
pub use substructure::{
    classify_columns, column_types, is_irreducible, ColumnTally, ColumnType, SubstructureGamma,
    SubstructureOmega,
};

use std::collections::BTreeSet;

/// Per-cell object counts. Enough to decide the non-empty, full and
/// vertex-balance conditions and which vertices are critical.
pub trait Cells {
    fn columns(&self) -> usize;
    fn vertices(&self, row: usize, col: usize) -> usize;
    fn is_marked(&self, row: usize, col: usize) -> bool;
    /// Whether column `col` carries an arrow tail (top row).
    fn has_tail(&self, _col: usize) -> bool {
        false
    }

    fn cell_has_object(&self, row: usize, col: usize) -> bool {
        self.vertices(row, col) > 0 || self.is_marked(row, col) || (row == 0 && self.has_tail(col))
    }

    /// The rightmost vertex of `(row, col)` is critical: it exists and the
    /// cell has neither a mark nor an arrow tail.
    fn has_critical(&self, row: usize, col: usize) -> bool {
        self.vertices(row, col) > 0
            && !self.is_marked(row, col)
            && !(row == 0 && self.has_tail(col))
    }
}

/// Array kinds with their own balance variant.
pub trait Balance: Cells {
    fn is_balanced(&self) -> bool;
}

/// Arrays with a concrete pairing, hence a forest function per row.
pub trait Forest: Cells {
    /// `psi[col]` for columns in the domain of the row's forest function,
    /// `None` elsewhere.
    fn forest_function(&self, row: usize) -> Vec<Option<usize>>;
}

pub fn check_nonempty<C: Cells + ?Sized>(a: &C) -> bool {
    (0..a.columns()).all(|c| a.cell_has_object(0, c) || a.cell_has_object(1, c))
}

pub fn check_full<C: Cells + ?Sized>(a: &C) -> bool {
    (0..a.columns()).all(|c| a.cell_has_object(0, c) && a.cell_has_object(1, c))
}

/// The full condition restricted to columns holding at least one vertex;
/// vertex-free columns are ignored.
pub fn check_full_where_occupied<C: Cells + ?Sized>(a: &C) -> bool {
    (0..a.columns()).all(|c| {
        a.vertices(0, c) + a.vertices(1, c) == 0
            || (a.cell_has_object(0, c) && a.cell_has_object(1, c))
    })
}

/// Dispatches to the balance variant of the array kind: mixed vertices for
/// paired arrays, all vertices for arrowed arrays and substructures.
pub fn check_balance<C: Balance + ?Sized>(a: &C) -> bool {
    a.is_balanced()
}

/// Equal vertex counts in the two cells of every column.
pub fn vertex_balanced<C: Cells + ?Sized>(a: &C) -> bool {
    (0..a.columns()).all(|c| a.vertices(0, c) == a.vertices(1, c))
}

pub fn forest_function<C: Forest + ?Sized>(a: &C, row: usize) -> Vec<Option<usize>> {
    a.forest_function(row)
}

pub fn check_forest<C: Forest + ?Sized>(a: &C) -> bool {
    (0..2).all(|row| {
        let roots: Vec<bool> = (0..a.columns()).map(|c| a.is_marked(row, c)).collect();
        is_rooted_forest(&a.forest_function(row), &roots)
    })
}

/// Whether every column in the domain of `psi` reaches a root after at least
/// one step without revisiting a column.
pub fn is_rooted_forest(psi: &[Option<usize>], roots: &[bool]) -> bool {
    let k = psi.len();
    // 0 = unknown, 1 = on current path, 2 = known to reach a root
    let mut state = vec![0u8; k];
    for start in 0..k {
        if psi[start].is_none() || state[start] == 2 {
            continue;
        }
        let mut path = vec![start];
        state[start] = 1;
        let mut next = psi[start];
        loop {
            let Some(x) = next else { return false };
            if roots[x] || state[x] == 2 {
                break;
            }
            if state[x] == 1 || psi[x].is_none() {
                return false;
            }
            state[x] = 1;
            path.push(x);
            next = psi[x];
        }
        for p in path {
            state[p] = 2;
        }
    }
    true
}

/// Cells whose rightmost vertex is critical.
pub fn critical_vertices<C: Cells + ?Sized>(a: &C) -> BTreeSet<(usize, usize)> {
    (0..2)
        .flat_map(|row| (0..a.columns()).map(move |col| (row, col)))
        .filter(|&(row, col)| a.has_critical(row, col))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Pairing;
    use std::collections::BTreeMap;

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    fn vertical(w: Vec<usize>, r1: &[usize], r2: &[usize], matching: &[usize]) -> PairedArray {
        let s: usize = w.iter().sum();
        let mut partner = vec![0; 2 * s];
        for (i, &j) in matching.iter().enumerate() {
            partner[i] = s + j;
            partner[s + j] = i;
        }
        PairedArray::new([w.clone(), w], [set(r1), set(r2)], Pairing::new(partner).unwrap())
            .unwrap()
    }

    #[test]
    fn rooted_forest_cases() {
        assert!(!is_rooted_forest(&[Some(0)], &[false]));
        assert!(is_rooted_forest(&[None, None], &[true, true]));
        assert!(is_rooted_forest(&[Some(1), Some(2), None], &[false, false, true]));
        assert!(!is_rooted_forest(&[Some(1), Some(0), None], &[false, false, true]));
        // path ends in a column that is neither a root nor in the domain
        assert!(!is_rooted_forest(&[Some(1), None], &[false, false]));
    }

    #[test]
    fn single_marked_empty_column_is_nonempty() {
        let a = PairedArray::new([vec![0], vec![0]], [set(&[0]), set(&[0])], Pairing::new(vec![]).unwrap())
            .unwrap();
        assert!(check_nonempty(&a));
        assert!(check_full(&a));
        assert!(check_forest(&a));
    }

    #[test]
    fn empty_unmarked_column_fails_nonempty() {
        let a = vertical(vec![1, 0], &[0], &[0], &[0]);
        assert!(!check_nonempty(&a));
    }

    #[test]
    fn arrow_tail_counts_as_object() {
        let a = vertical(vec![1, 0], &[0], &[0], &[0]);
        let arrowed = ArrowedArray::new(a, BTreeMap::from([(1, 0)])).unwrap();
        assert!(check_nonempty(&arrowed));
        // bottom cell of column 1 is still empty
        assert!(!check_full(&arrowed));
        assert!(check_full_where_occupied(&arrowed));
    }

    #[test]
    fn forest_function_arrow_precedence() {
        // column 0 unmarked; its rightmost vertex pairs into column 0 itself,
        // but the arrow 0 -> 1 overrides that
        let a = vertical(vec![1, 1], &[1], &[1], &[0, 1]);
        assert_eq!(forest_function(&a, 0), vec![Some(0), None]);
        assert!(!check_forest(&a));
        let arrowed = ArrowedArray::new(a, BTreeMap::from([(0, 1)])).unwrap();
        assert_eq!(forest_function(&arrowed, 0), vec![Some(1), None]);
    }

    #[test]
    fn all_marked_has_empty_forest_function() {
        let a = vertical(vec![2, 1], &[0, 1], &[0, 1], &[2, 0, 1]);
        assert_eq!(forest_function(&a, 0), vec![None, None]);
        assert_eq!(forest_function(&a, 1), vec![None, None]);
        assert!(check_forest(&a));
    }

    #[test]
    fn balance_variants() {
        let a = vertical(vec![1, 2], &[0], &[0], &[0, 1, 2]);
        assert!(check_balance(&a));
        let arrowed = ArrowedArray::new(a, BTreeMap::new()).unwrap();
        assert!(check_balance(&arrowed));
        // unbalanced vertical array
        let p = Pairing::new(vec![1, 0]).unwrap();
        let b = PairedArray::new([vec![1, 0], vec![0, 1]], [set(&[0]), set(&[0])], p).unwrap();
        assert!(!check_balance(&b));
        assert!(!vertex_balanced(&b));
    }

    #[test]
    fn critical_vertex_rules() {
        let a = vertical(vec![1, 1, 1], &[0], &[1], &[1, 2, 0]);
        let arrowed = ArrowedArray::new(a, BTreeMap::from([(1, 2)])).unwrap();
        let crit = critical_vertices(&arrowed);
        // (0,0) marked, (0,1) has a tail, (1,1) marked
        assert_eq!(crit, BTreeSet::from([(0, 2), (1, 0), (1, 2)]));
    }
}
