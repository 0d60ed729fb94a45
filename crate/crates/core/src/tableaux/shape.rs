//! Partition shapes and the two shape constructions attached to a subset
//! and its complement.

use serde::{Deserialize, Serialize};
use std::fmt;

use super::TableauxError;
use crate::vandermonde::SubsetX;

/// A partition shape: weakly decreasing positive parts, trailing zeros
/// trimmed on construction. The empty shape is the empty list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Shape {
    parts: Vec<u32>,
}

impl Shape {
    /// Validates weak decrease (which also rules out internal zeros) and
    /// trims trailing zeros.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, TableauxError> {
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(TableauxError::NotAShape);
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Shape { parts })
    }

    pub fn empty() -> Self {
        Shape { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Total number of boxes.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Row length, zero past the last row.
    pub fn row(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The conjugate partition: rows become columns.
    pub fn transpose(&self) -> Shape {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count() as u32)
            .collect();
        Shape { parts }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl TryFrom<Vec<u32>> for Shape {
    type Error = TableauxError;
    fn try_from(parts: Vec<u32>) -> Result<Self, Self::Error> {
        Shape::new(parts)
    }
}

impl From<Shape> for Vec<u32> {
    fn from(s: Shape) -> Vec<u32> {
        s.parts
    }
}

/// The shape `(x_m - m, ..., x_1 - 1)` attached to a strictly increasing
/// subset; its size is the shifted sum `t* = sum(x_i) - m(m+1)/2`.
pub fn shape_from_subset(xs: &[u32]) -> Shape {
    let parts: Vec<u32> = xs
        .iter()
        .enumerate()
        .rev()
        .map(|(i, &x)| x - (i as u32 + 1))
        .collect();
    Shape::new(parts).expect("strictly increasing subsets give weakly decreasing parts")
}

/// The complement-side shape `(m+1-y_1, m+2-y_2, ..., m+n-y_n)`. Errors on
/// tuples that are not weakly decreasing nonnegative, which cannot happen
/// for a true complement but guards misuse.
pub fn complement_shape(ys: &[u32], m: u32) -> Result<Shape, TableauxError> {
    let mut parts = Vec::with_capacity(ys.len());
    for (i, &y) in ys.iter().enumerate() {
        let v = m as i64 + (i as i64 + 1) - y as i64;
        if v < 0 {
            return Err(TableauxError::NotAShape);
        }
        parts.push(v as u32);
    }
    Shape::new(parts)
}

/// Complement-side shape equals the transpose of the subset-side shape.
pub fn complement_transpose_check(x: &SubsetX) -> bool {
    let lhs = complement_shape(&x.complement(), x.m());
    let rhs = shape_from_subset(x.elements()).transpose();
    lhs.map(|s| s == rhs).unwrap_or(false)
}
