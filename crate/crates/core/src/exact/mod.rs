//! Exact arithmetic kernel: arbitrary-precision integers and rationals,
//! Laurent polynomials over the rationals, and exact determinants.
//!
//! Everything in this module is exact. There is no floating point, no
//! rounding, and no overflow; all values are immutable once built and safe
//! to share across threads.

mod det;
mod integers;
mod laurent;
mod rational;

pub use det::{laurent_det, rat_det, rat_rank, MatrixError};
pub use integers::{barnes_g, binomial, factorial, power_sum, RangeError};
pub use laurent::LaurentPoly;
pub use rational::{checked_div, int_pow, parse_rat, rat, rat_int, rat_pow, BigRat, RatError};
