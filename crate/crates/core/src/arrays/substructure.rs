use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::combinatorics::Pairing;
use crate::error::{Error, Result};

use super::{ArrowedArray, Balance, Cells, PairedArray};

/// Occupancy, marks and arrows fixed; only the matching of top-row slots to
/// bottom-row slots is free.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GammaJson", into = "GammaJson")]
pub struct SubstructureGamma {
    w: [Vec<usize>; 2],
    marks: [BTreeSet<usize>; 2],
    phi: BTreeMap<usize, usize>,
}

#[derive(Serialize, Deserialize)]
struct GammaJson {
    #[serde(rename = "K")]
    k: usize,
    w: [Vec<usize>; 2],
    #[serde(rename = "R1")]
    r1: Vec<usize>,
    #[serde(rename = "R2")]
    r2: Vec<usize>,
    #[serde(default)]
    phi: BTreeMap<usize, usize>,
}

impl TryFrom<GammaJson> for SubstructureGamma {
    type Error = Error;

    fn try_from(j: GammaJson) -> Result<Self> {
        if j.w[0].len() != j.k || j.w[1].len() != j.k {
            return Err(Error::Malformed(format!("K = {} but w rows have other lengths", j.k)));
        }
        SubstructureGamma::new(
            j.w,
            j.r1.into_iter().collect(),
            j.r2.into_iter().collect(),
            j.phi,
        )
    }
}

impl From<SubstructureGamma> for GammaJson {
    fn from(g: SubstructureGamma) -> Self {
        let [r1, r2] = g.marks;
        GammaJson {
            k: g.w[0].len(),
            w: g.w,
            r1: r1.into_iter().collect(),
            r2: r2.into_iter().collect(),
            phi: g.phi,
        }
    }
}

impl SubstructureGamma {
    pub fn new(
        w: [Vec<usize>; 2],
        r1: BTreeSet<usize>,
        r2: BTreeSet<usize>,
        phi: BTreeMap<usize, usize>,
    ) -> Result<Self> {
        let k = w[0].len();
        if k == 0 || w[1].len() != k {
            return Err(Error::Malformed("w must be 2 x K with K >= 1".into()));
        }
        let s0: usize = w[0].iter().sum();
        let s1: usize = w[1].iter().sum();
        if s0 != s1 {
            return Err(Error::Malformed(format!("row totals differ: {s0} vs {s1}")));
        }
        for (row, m) in [&r1, &r2].into_iter().enumerate() {
            if m.is_empty() || m.iter().any(|&c| c >= k) {
                return Err(Error::Malformed(format!(
                    "row {row} marks {m:?} must be a nonempty subset of 0..{k}"
                )));
            }
        }
        for (&tail, &head) in &phi {
            if tail >= k || head >= k {
                return Err(Error::Malformed(format!("arrow {tail} -> {head} out of range")));
            }
            if r1.contains(&tail) {
                return Err(Error::Malformed(format!("arrow tail {tail} is marked in the top row")));
            }
        }
        Ok(SubstructureGamma { w, marks: [r1, r2], phi })
    }

    pub fn k(&self) -> usize {
        self.w[0].len()
    }

    /// Vertices per row.
    pub fn s(&self) -> usize {
        self.w[0].iter().sum()
    }

    pub fn w(&self) -> &[Vec<usize>; 2] {
        &self.w
    }

    pub fn marks(&self, row: usize) -> &BTreeSet<usize> {
        &self.marks[row]
    }

    pub fn phi(&self) -> &BTreeMap<usize, usize> {
        &self.phi
    }

    /// Whether the arrow digraph has a directed cycle (self-loops included).
    pub fn has_arrow_cycle(&self) -> bool {
        let mut done = BTreeSet::new();
        for &start in self.phi.keys() {
            let mut path = BTreeSet::new();
            let mut x = start;
            loop {
                if done.contains(&x) {
                    break;
                }
                if !path.insert(x) {
                    return true;
                }
                match self.phi.get(&x) {
                    Some(&next) => x = next,
                    None => break,
                }
            }
            done.extend(path);
        }
        false
    }

    /// Relabels columns: old column `j` becomes column `perm[j]`.
    pub fn permute_columns(&self, perm: &[usize]) -> Result<Self> {
        let k = self.k();
        let mut seen = vec![false; k];
        if perm.len() != k || perm.iter().any(|&p| p >= k || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidParameter(format!("{perm:?} is not a permutation of 0..{k}")));
        }
        let mut w = [vec![0; k], vec![0; k]];
        for row in 0..2 {
            for j in 0..k {
                w[row][perm[j]] = self.w[row][j];
            }
        }
        let remap = |m: &BTreeSet<usize>| m.iter().map(|&j| perm[j]).collect();
        SubstructureGamma::new(
            w,
            remap(&self.marks[0]),
            remap(&self.marks[1]),
            self.phi.iter().map(|(&t, &h)| (perm[t], perm[h])).collect(),
        )
    }

    /// The arrowed array with this substructure and the matching that
    /// pairs top slot `i` with bottom slot `matching[i]`.
    pub fn arrowed_array(&self, matching: &[usize]) -> Result<ArrowedArray> {
        let s = self.s();
        if matching.len() != s {
            return Err(Error::InvalidParameter(format!("matching must have length {s}")));
        }
        let mut partner = vec![usize::MAX; 2 * s];
        for (i, &j) in matching.iter().enumerate() {
            if j >= s || partner[s + j] != usize::MAX {
                return Err(Error::InvalidParameter(format!("{matching:?} is not a permutation")));
            }
            partner[i] = s + j;
            partner[s + j] = i;
        }
        let array = PairedArray::new(self.w.clone(), self.marks.clone(), Pairing::new(partner)?)?;
        ArrowedArray::new(array, self.phi.clone())
    }
}

impl Cells for SubstructureGamma {
    fn columns(&self) -> usize {
        self.k()
    }

    fn vertices(&self, row: usize, col: usize) -> usize {
        self.w[row][col]
    }

    fn is_marked(&self, row: usize, col: usize) -> bool {
        self.marks[row].contains(&col)
    }

    fn has_tail(&self, col: usize) -> bool {
        self.phi.contains_key(&col)
    }
}

/// Substructures use the all-vertex balance condition.
impl Balance for SubstructureGamma {
    fn is_balanced(&self) -> bool {
        super::vertex_balanced(self)
    }
}

/// No arrow cycle, and every arrow head lies in a column that is unmarked in
/// the top row and carries no tail.
pub fn is_irreducible(g: &SubstructureGamma) -> bool {
    !g.has_arrow_cycle()
        && g.phi
            .values()
            .all(|&h| !g.is_marked(0, h) && !g.has_tail(h))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ColumnType {
    /// No tail; unmarked in both rows.
    A,
    /// Points into an `A` column; bottom row unmarked.
    ABar,
    /// Points into an `A` column; bottom row marked.
    ATilde,
    /// No tail; top marked, bottom unmarked.
    B,
    /// No tail; top unmarked, bottom marked.
    C,
    /// Points into a `C` column; bottom row unmarked.
    CBar,
    /// Points into a `C` column; bottom row marked.
    CTilde,
    /// No tail; marked in both rows.
    D,
}

/// Column-type census of an irreducible substructure: the number of `A`
/// columns and, per row, the vertex totals of each type.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ColumnTally {
    pub type_a_columns: usize,
    pub a: [usize; 2],
    pub a_bar: [usize; 2],
    pub a_tilde: [usize; 2],
    pub b: [usize; 2],
    pub c: [usize; 2],
    pub c_bar: [usize; 2],
    pub c_tilde: [usize; 2],
    pub d: [usize; 2],
}

impl ColumnTally {
    /// Sum of all eight vertex totals in `row`.
    pub fn row_total(&self, row: usize) -> usize {
        [
            self.a, self.a_bar, self.a_tilde, self.b, self.c, self.c_bar, self.c_tilde, self.d,
        ]
        .iter()
        .map(|t| t[row])
        .sum()
    }
}

fn base_type(g: &SubstructureGamma, col: usize) -> ColumnType {
    match (g.is_marked(0, col), g.is_marked(1, col)) {
        (false, false) => ColumnType::A,
        (true, false) => ColumnType::B,
        (false, true) => ColumnType::C,
        (true, true) => ColumnType::D,
    }
}

pub fn column_types(g: &SubstructureGamma) -> Result<Vec<ColumnType>> {
    if !is_irreducible(g) {
        return Err(Error::Precondition(
            "column types are only defined on irreducible substructures".into(),
        ));
    }
    Ok((0..g.k())
        .map(|col| match g.phi.get(&col) {
            None => base_type(g, col),
            Some(&head) => {
                let bottom_marked = g.is_marked(1, col);
                match (base_type(g, head), bottom_marked) {
                    (ColumnType::A, false) => ColumnType::ABar,
                    (ColumnType::A, true) => ColumnType::ATilde,
                    (ColumnType::C, false) => ColumnType::CBar,
                    (ColumnType::C, true) => ColumnType::CTilde,
                    (other, _) => unreachable!("irreducible head has type {other:?}"),
                }
            }
        })
        .collect())
}

pub fn classify_columns(g: &SubstructureGamma) -> Result<ColumnTally> {
    let types = column_types(g)?;
    let mut t = ColumnTally::default();
    for (col, ty) in types.into_iter().enumerate() {
        let slot = match ty {
            ColumnType::A => {
                t.type_a_columns += 1;
                &mut t.a
            }
            ColumnType::ABar => &mut t.a_bar,
            ColumnType::ATilde => &mut t.a_tilde,
            ColumnType::B => &mut t.b,
            ColumnType::C => &mut t.c,
            ColumnType::CBar => &mut t.c_bar,
            ColumnType::CTilde => &mut t.c_tilde,
            ColumnType::D => &mut t.d,
        };
        slot[0] += g.w[0][col];
        slot[1] += g.w[1][col];
    }
    Ok(t)
}

/// Balanced occupancy `w` (same count in both cells of a column) with the
/// numbers of marked columns per row; marks positions and the pairing are
/// free.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "OmegaJson", into = "OmegaJson")]
pub struct SubstructureOmega {
    r1: usize,
    r2: usize,
    w: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct OmegaJson {
    #[serde(rename = "K")]
    k: usize,
    #[serde(rename = "R1")]
    r1: usize,
    #[serde(rename = "R2")]
    r2: usize,
    w: Vec<usize>,
}

impl TryFrom<OmegaJson> for SubstructureOmega {
    type Error = Error;

    fn try_from(j: OmegaJson) -> Result<Self> {
        if j.w.len() != j.k {
            return Err(Error::Malformed(format!("K = {} but w has length {}", j.k, j.w.len())));
        }
        SubstructureOmega::new(j.r1, j.r2, j.w)
    }
}

impl From<SubstructureOmega> for OmegaJson {
    fn from(o: SubstructureOmega) -> Self {
        OmegaJson { k: o.w.len(), r1: o.r1, r2: o.r2, w: o.w }
    }
}

impl SubstructureOmega {
    pub fn new(r1: usize, r2: usize, w: Vec<usize>) -> Result<Self> {
        let k = w.len();
        if k == 0 {
            return Err(Error::Malformed("K must be at least 1".into()));
        }
        if !(1..=k).contains(&r1) || !(1..=k).contains(&r2) {
            return Err(Error::Malformed(format!("R1 = {r1}, R2 = {r2} must lie in 1..={k}")));
        }
        if w.iter().sum::<usize>() == 0 {
            return Err(Error::Malformed("omega needs at least one vertex per row".into()));
        }
        Ok(SubstructureOmega { r1, r2, w })
    }

    pub fn k(&self) -> usize {
        self.w.len()
    }

    pub fn r1(&self) -> usize {
        self.r1
    }

    pub fn r2(&self) -> usize {
        self.r2
    }

    pub fn w(&self) -> &[usize] {
        &self.w
    }

    pub fn s(&self) -> usize {
        self.w.iter().sum()
    }

    /// Number of columns holding vertices.
    pub fn f(&self) -> usize {
        self.w.iter().filter(|&&x| x > 0).count()
    }
}
