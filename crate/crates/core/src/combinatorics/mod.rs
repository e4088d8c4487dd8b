//! Exact integer arithmetic, permutations and pairings, and polynomials in
//! the binomial and monomial bases.

mod counts;
mod integers;
mod permutation;
mod poly;

pub use counts::{CycleCountVector, MapClass};
pub use integers::{
    binomial, double_factorial, expect_integer, factorial, multinomial, pow2, recip_factorial,
};
pub use permutation::{compose, cycle_count, invert, Pairing, TwoRowGround};
pub use poly::{BinomialPoly, MonomialPoly};
