//! Count-preserving rewrites of substructures, and the reduction from
//! paired surjections to canonical arrays.

mod arrows;
mod columns;
mod labelled;

pub use arrows::{
    applicable_simplifications, arrow_simplify_retarget, arrow_simplify_to_mark,
    irreducible_closure, irreducible_closure_by, Closure, Simplification,
};
pub use columns::{column_merging, column_pointing, non_critical_bottom_positions};
pub use labelled::labelled_to_canonical;
