//! Removing a fixed pair `{v, u}` from a substructure: column pointing and
//! column merging. `v` is always the rightmost top vertex of column `X`.

use std::collections::BTreeSet;

use super::arrows::remap_arrows;
use crate::arrays::{check_full, Cells, SubstructureGamma};
use crate::error::{Error, Result};

fn check_columns(g: &SubstructureGamma, x: usize, y: usize) -> Result<()> {
    if x >= g.k() || y >= g.k() {
        return Err(Error::InvalidParameter(format!("columns {x}, {y} out of range")));
    }
    if x == y {
        return Err(Error::Precondition("the two columns must differ".into()));
    }
    if !g.has_critical(0, x) {
        return Err(Error::Precondition(format!("top cell of column {x} has no critical vertex")));
    }
    Ok(())
}

/// Positions of the non-critical vertices in the bottom cell of `y`: all of
/// them if the cell is marked, otherwise all but the rightmost.
pub fn non_critical_bottom_positions(g: &SubstructureGamma, y: usize) -> Vec<usize> {
    let n = g.vertices(1, y);
    if g.is_marked(1, y) {
        (0..n).collect()
    } else {
        (0..n.saturating_sub(1)).collect()
    }
}

/// Replaces the pair joining the critical top vertex of `X` to a
/// non-critical bottom vertex of `Y` by the arrow `X -> Y`.
///
/// The result does not depend on which non-critical vertex of `(2, Y)` is
/// removed, so only the columns are given.
pub fn column_pointing(g: &SubstructureGamma, x: usize, y: usize) -> Result<SubstructureGamma> {
    check_columns(g, x, y)?;
    if non_critical_bottom_positions(g, y).is_empty() {
        return Err(Error::Precondition(format!(
            "bottom cell of column {y} has no non-critical vertex"
        )));
    }
    let mut w = g.w().clone();
    w[0][x] -= 1;
    w[1][y] -= 1;
    let mut phi = g.phi().clone();
    phi.insert(x, y);
    SubstructureGamma::new(w, g.marks(0).clone(), g.marks(1).clone(), phi)
}

/// Removes the pair joining the critical top vertex of `X` to the critical
/// bottom vertex of `Y`, and contracts `Y` into `X`. Columns after `Y` shift
/// down by one.
pub fn column_merging(g: &SubstructureGamma, x: usize, y: usize) -> Result<SubstructureGamma> {
    if !check_full(g) {
        return Err(Error::Precondition(
            "column merging requires the substructure to satisfy the full condition".into(),
        ));
    }
    check_columns(g, x, y)?;
    if !g.has_critical(1, y) {
        return Err(Error::Precondition(format!("bottom cell of column {y} has no critical vertex")));
    }
    let shifted_x = if x > y { x - 1 } else { x };
    let relabel = |j: usize| {
        if j == y {
            shifted_x
        } else if j > y {
            j - 1
        } else {
            j
        }
    };
    let k = g.k();
    let mut w = [vec![0; k - 1], vec![0; k - 1]];
    for row in 0..2 {
        for j in 0..k {
            w[row][relabel(j)] += g.w()[row][j];
        }
    }
    w[0][shifted_x] -= 1;
    w[1][shifted_x] -= 1;
    let marks = |row: usize| -> BTreeSet<usize> { g.marks(row).iter().map(|&j| relabel(j)).collect() };
    SubstructureGamma::new(w, marks(0), marks(1), remap_arrows(g.phi(), relabel))
}
