//! From a paired surjection to its canonical array.

use std::collections::BTreeSet;

use crate::arrays::PairedArray;
use crate::combinatorics::{Pairing, TwoRowGround};
use crate::error::{Error, Result};

/// Sends the paired surjection `(mu, pi)` on `ground` to the canonical array
/// whose cell `(row, j)` holds the elements of `row` labelled `j`, in label
/// order. Each row is marked in the column holding its first element; then
/// the labels are forgotten.
pub fn labelled_to_canonical(
    ground: TwoRowGround,
    mu: &Pairing,
    pi: &[usize],
    k: usize,
) -> Result<PairedArray> {
    let n = ground.len();
    if mu.ground_size() != n || pi.len() != n {
        return Err(Error::InvalidParameter(format!(
            "pairing and labelling must cover all {n} elements"
        )));
    }
    if let Some(&bad) = pi.iter().find(|&&c| c >= k) {
        return Err(Error::InvalidParameter(format!("label {bad} outside 0..{k}")));
    }
    if (0..k).any(|c| !pi.contains(&c)) {
        return Err(Error::Precondition("labelling is not surjective".into()));
    }
    let gamma = ground.gamma();
    if let Some(v) = (0..n).find(|&v| pi[mu.partner(v)] != pi[gamma[v]]) {
        return Err(Error::Precondition(format!(
            "pi(mu({v})) != pi(gamma({v})): not a paired surjection"
        )));
    }

    let mut w = [vec![0usize; k], vec![0usize; k]];
    for v in 0..n {
        w[ground.row_of(v)][pi[v]] += 1;
    }
    // slots are numbered top row first, cells left to right, and inside a
    // cell by increasing position in the row
    let mut start = [vec![0usize; k], vec![0usize; k]];
    let mut next = 0;
    for row in 0..2 {
        for col in 0..k {
            start[row][col] = next;
            next += w[row][col];
        }
    }
    let mut slot_of = vec![0usize; n];
    for v in 0..n {
        let (row, col) = (ground.row_of(v), pi[v]);
        slot_of[v] = start[row][col];
        start[row][col] += 1;
    }
    let mut partner = vec![0usize; n];
    for v in 0..n {
        partner[slot_of[v]] = slot_of[mu.partner(v)];
    }
    let marks = [
        BTreeSet::from([pi[ground.index(0, 0)]]),
        BTreeSet::from([pi[ground.index(1, 0)]]),
    ];
    PairedArray::new(w, marks, Pairing::new(partner)?)
}
