//! Shapes, triangular arrays, semistandard Young tableaux, the bijections
//! between them, and the dual Robinson-Schensted-Knuth correspondence.
//!
//! These pieces give bijective meaning to the Vandermonde quotients
//! `V_X / G(m+1)`: the quotient counts staircase arrays with a fixed right
//! border, the arrays biject with bounded-entry SSYTs, and complementary
//! subsets produce transposed shapes, which is exactly the setup dual RSK
//! pairs with 0-1 matrices.

mod array;
mod rsk;
mod shape;
mod ssyt;

pub use array::{
    array_to_ssyt, count_consistency_check, enumerate_triangular_arrays, ssyt_to_array,
    TriangularArray,
};
pub use rsk::{count_pairs, dual_rsk, ZeroOneMatrix};
pub use shape::{complement_shape, complement_transpose_check, shape_from_subset, Shape};
pub use ssyt::{enumerate_ssyt, Ssyt};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableauxError {
    #[error("parts must be weakly decreasing and nonnegative")]
    NotAShape,
    #[error("rows violate the tableau conditions")]
    NotATableau,
    #[error("value {0} outside the entry bound {1}")]
    EntryOutOfBounds(u32, u32),
    #[error("tableau shape or entry bound does not match the subset")]
    ShapeMismatch,
    #[error("array rows must form a staircase with the prescribed border")]
    NotAStaircase,
    #[error("matrix rows must be equal-length strings of 0s and 1s")]
    BadMatrix,
}
