//! The two arrow simplifications and their fixpoint.

use std::collections::BTreeMap;

use crate::arrays::{is_irreducible, SubstructureGamma};
use crate::error::{Error, Result};

fn head_of(g: &SubstructureGamma, x: usize) -> Result<usize> {
    g.phi()
        .get(&x)
        .copied()
        .ok_or_else(|| Error::Precondition(format!("column {x} carries no arrow")))
}

/// `X -> Y` with `Y` marked in the top row: drop the arrow and mark `X`.
pub fn arrow_simplify_to_mark(g: &SubstructureGamma, x: usize) -> Result<SubstructureGamma> {
    let y = head_of(g, x)?;
    if !g.marks(0).contains(&y) {
        return Err(Error::Precondition(format!(
            "arrow {x} -> {y} does not point to a top-marked column"
        )));
    }
    let mut phi = g.phi().clone();
    phi.remove(&x);
    let mut r1 = g.marks(0).clone();
    r1.insert(x);
    SubstructureGamma::new(g.w().clone(), r1, g.marks(1).clone(), phi)
}

/// `X -> Y -> Z`: point `X` straight at `Z`. A two-cycle `X -> Y -> X`
/// becomes the self-loop `X -> X`, which [`SubstructureGamma::has_arrow_cycle`]
/// reports.
pub fn arrow_simplify_retarget(g: &SubstructureGamma, x: usize) -> Result<SubstructureGamma> {
    let y = head_of(g, x)?;
    let z = g.phi().get(&y).copied().ok_or_else(|| {
        Error::Precondition(format!("arrow {x} -> {y} does not point to a tail column"))
    })?;
    let mut phi = g.phi().clone();
    phi.insert(x, z);
    SubstructureGamma::new(g.w().clone(), g.marks(0).clone(), g.marks(1).clone(), phi)
}

/// One applicable arrow simplification, named by its tail column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Simplification {
    ToMark(usize),
    Retarget(usize),
}

impl Simplification {
    pub fn apply(self, g: &SubstructureGamma) -> Result<SubstructureGamma> {
        match self {
            Simplification::ToMark(x) => arrow_simplify_to_mark(g, x),
            Simplification::Retarget(x) => arrow_simplify_retarget(g, x),
        }
    }
}

/// All simplifications applicable to `g`, ordered by tail column.
pub fn applicable_simplifications(g: &SubstructureGamma) -> Vec<Simplification> {
    g.phi()
        .iter()
        .filter_map(|(&x, &y)| {
            if g.marks(0).contains(&y) {
                Some(Simplification::ToMark(x))
            } else if g.phi().contains_key(&y) {
                Some(Simplification::Retarget(x))
            } else {
                None
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Closure {
    Irreducible(SubstructureGamma),
    /// The arrows contain a directed cycle; no matching satisfies the
    /// forest condition.
    CycleDetected,
}

/// Applies arrow simplifications, lowest tail column first, until none
/// applies.
pub fn irreducible_closure(g: &SubstructureGamma) -> Result<Closure> {
    irreducible_closure_by(g, |_| 0)
}

/// As [`irreducible_closure`], with `choose` picking the index of the next
/// simplification among the applicable ones.
pub fn irreducible_closure_by<F>(g: &SubstructureGamma, mut choose: F) -> Result<Closure>
where
    F: FnMut(&[Simplification]) -> usize,
{
    if g.has_arrow_cycle() {
        return Ok(Closure::CycleDetected);
    }
    let mut cur = g.clone();
    loop {
        let steps = applicable_simplifications(&cur);
        if steps.is_empty() {
            debug_assert!(is_irreducible(&cur));
            return Ok(Closure::Irreducible(cur));
        }
        let pick = choose(&steps);
        let step = *steps.get(pick).ok_or_else(|| {
            Error::InvalidParameter(format!("choice {pick} out of {} steps", steps.len()))
        })?;
        cur = step.apply(&cur)?;
    }
}

/// Arrow map with every tail redirected by `f`; used by column merging.
pub(crate) fn remap_arrows(
    phi: &BTreeMap<usize, usize>,
    f: impl Fn(usize) -> usize,
) -> BTreeMap<usize, usize> {
    phi.iter().map(|(&t, &h)| (f(t), f(h))).collect()
}
