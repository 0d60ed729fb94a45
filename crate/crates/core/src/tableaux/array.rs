//! Staircase arrays with a fixed right border and their bijection with
//! bounded-entry semistandard tableaux.
//!
//! For a strictly increasing subset `X = {x_1 < ... < x_m}` the arrays have
//! `m` left-aligned rows of lengths `m, m-1, ..., 1`; row `r` from the top
//! ends with `x_{m-r+1}`, rows weakly increase rightward, and columns
//! strictly decrease downward. Their number is `V_X / G(m+1)`.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::fmt;

use super::shape::{complement_shape, shape_from_subset};
use super::ssyt::{enumerate_ssyt, Ssyt};
use super::TableauxError;
use crate::exact::barnes_g;
use crate::vandermonde::{vandermonde, vandermonde_of, SubsetX};

/// A staircase array: row `r` (0-indexed from the top) has `m - r` entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ArrayWire", into = "ArrayWire")]
pub struct TriangularArray {
    rows: Vec<Vec<u32>>,
}

/// JSON form: {"rows":[[...],...]}.
#[derive(Serialize, Deserialize)]
struct ArrayWire {
    rows: Vec<Vec<u32>>,
}

impl TriangularArray {
    /// Validates the staircase row lengths, positivity, weakly increasing
    /// rows, and strictly decreasing (left-aligned) columns.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self, TableauxError> {
        let m = rows.len();
        for (r, row) in rows.iter().enumerate() {
            if row.len() != m - r {
                return Err(TableauxError::NotAStaircase);
            }
            for (c, &v) in row.iter().enumerate() {
                if v < 1 {
                    return Err(TableauxError::NotAStaircase);
                }
                if c > 0 && row[c - 1] > v {
                    return Err(TableauxError::NotAStaircase);
                }
                if r + 1 < m {
                    if let Some(&below) = rows[r + 1].get(c) {
                        if v <= below {
                            return Err(TableauxError::NotAStaircase);
                        }
                    }
                }
            }
        }
        Ok(TriangularArray { rows })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Side length `m` (number of rows).
    pub fn side(&self) -> usize {
        self.rows.len()
    }

    /// The right border read bottom to top: `(x_1, ..., x_m)`.
    pub fn border(&self) -> Vec<u32> {
        self.rows.iter().rev().map(|r| *r.last().unwrap()).collect()
    }

    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }
}

impl fmt::Display for TriangularArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "(empty)");
        }
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl TryFrom<ArrayWire> for TriangularArray {
    type Error = TableauxError;
    fn try_from(w: ArrayWire) -> Result<Self, Self::Error> {
        TriangularArray::new(w.rows)
    }
}

impl From<TriangularArray> for ArrayWire {
    fn from(a: TriangularArray) -> ArrayWire {
        ArrayWire { rows: a.rows }
    }
}

/// All staircase arrays with right border `X`, sorted by reading word.
pub fn enumerate_triangular_arrays(xs: &[u32]) -> Vec<TriangularArray> {
    let m = xs.len();
    let mut rows: Vec<Vec<u32>> = (0..m).map(|r| vec![0; m - r]).collect();
    for r in 0..m {
        let len = m - r;
        rows[r][len - 1] = xs[m - 1 - r];
    }
    let mut out = Vec::new();

    // Fill bottom-up, right-to-left: both constraining neighbors (the cell
    // below and the cell to the right) are already placed.
    fn go(rows: &mut Vec<Vec<u32>>, r: isize, c: isize, out: &mut Vec<TriangularArray>) {
        if r < 0 {
            out.push(TriangularArray::new(rows.clone()).expect("fill respects the constraints"));
            return;
        }
        let (ru, cu) = (r as usize, c as usize);
        let len = rows[ru].len();
        let (next_r, next_c) = if c == 0 {
            (r - 1, rows.get(ru.wrapping_sub(1)).map_or(0, |x| x.len() as isize - 2))
        } else {
            (r, c - 1)
        };
        if cu == len - 1 {
            // Border cell, already fixed.
            let fine = rows[ru + 1..]
                .first()
                .and_then(|below| below.get(cu))
                .map_or(true, |&b| rows[ru][cu] > b);
            if fine {
                go(rows, next_r, next_c, out);
            }
            return;
        }
        let hi = rows[ru][cu + 1];
        let lo = rows
            .get(ru + 1)
            .and_then(|below| below.get(cu))
            .map_or(1, |&b| b + 1);
        for v in lo..=hi {
            rows[ru][cu] = v;
            go(rows, next_r, next_c, out);
        }
        rows[ru][cu] = 0;
    }

    if m == 0 {
        out.push(TriangularArray { rows: Vec::new() });
        return out;
    }
    let start_r = (m - 1) as isize;
    let start_c = (rows[m - 1].len() - 1) as isize;
    go(&mut rows, start_r, start_c, &mut out);
    out.sort_by_key(|a| a.reading_word());
    out
}

/// Decode an array to its tableau: subtract the row height, left-pad to a
/// square, and read each padded row as rightmost-occurrence positions.
pub fn array_to_ssyt(a: &TriangularArray) -> Ssyt {
    let m = a.side();
    // padded[i][j] = number of entries <= j+1 in row i of the tableau.
    let mut padded = vec![vec![0u32; m]; m];
    for (r, row) in a.rows().iter().enumerate() {
        let k = (m - r) as u32; // height counted from the bottom
        let pad = m - row.len();
        for (c, &v) in row.iter().enumerate() {
            padded[r][pad + c] = v - k;
        }
    }
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for line in &padded {
        let mut row = Vec::new();
        let mut prev = 0;
        for (j, &upto) in line.iter().enumerate() {
            for _ in prev..upto {
                row.push(j as u32 + 1);
            }
            prev = upto;
        }
        if row.is_empty() {
            break;
        }
        rows.push(row);
    }
    Ssyt::new(rows, m as u32).expect("decoded filling is semistandard")
}

/// Inverse of [`array_to_ssyt`] for the subset `X`: errors unless the
/// tableau has shape `shape_from_subset(X)` and entry bound `|X|`.
pub fn ssyt_to_array(t: &Ssyt, xs: &[u32]) -> Result<TriangularArray, TableauxError> {
    let m = xs.len();
    if *t.shape() != shape_from_subset(xs) || t.max_entry() != m as u32 {
        return Err(TableauxError::ShapeMismatch);
    }
    let mut rows: Vec<Vec<u32>> = Vec::with_capacity(m);
    for r in 0..m {
        let k = (m - r) as u32;
        let len = m - r;
        let pad = m - len;
        let tableau_row: &[u32] = t.rows().get(r).map_or(&[], |v| v);
        let mut row = Vec::with_capacity(len);
        for c in 0..len {
            let j = (pad + c) as u32 + 1;
            let upto = tableau_row.iter().filter(|&&v| v <= j).count() as u32;
            row.push(upto + k);
        }
        rows.push(row);
    }
    TriangularArray::new(rows)
}

/// The counting consistency report for one subset: arrays, tableaux, the
/// Vandermonde quotients on both the subset and its complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub arrays: u64,
    pub ssyts: u64,
    pub quotient: Option<BigInt>,
    pub complement_ssyts: u64,
    pub complement_quotient: Option<BigInt>,
    pub ok: bool,
}

/// Checks `|arrays(X)| = V_X / G(m+1) = |SSYT(shape(X), m)|` and the
/// complement count `|SSYT(shape'(Y), n)| = V_Y / G(n+1)`.
pub fn count_consistency_check(x: &SubsetX) -> CountReport {
    let m = x.m() as u64;
    let n = x.n() as u64;
    let arrays = enumerate_triangular_arrays(x.elements()).len() as u64;
    let ssyts = enumerate_ssyt(&shape_from_subset(x.elements()), x.m()).len() as u64;

    let vx = vandermonde_of(x);
    let gm = barnes_g(m + 1);
    let quotient = exact_quotient(&vx, &gm);

    let ys = x.complement();
    let vy = {
        let ys_i: Vec<i64> = ys.iter().map(|&v| v as i64).collect();
        vandermonde(&ys_i).expect("complement is strictly increasing")
    };
    let gn = barnes_g(n + 1);
    let complement_quotient = exact_quotient(&vy, &gn);
    let complement_ssyts = complement_shape(&ys, x.m())
        .map(|s| enumerate_ssyt(&s, x.n()).len() as u64)
        .unwrap_or(0);

    let ok = quotient.as_ref().map(|q| {
        *q == BigInt::from(arrays) && *q == BigInt::from(ssyts)
    }) == Some(true)
        && complement_quotient.as_ref().map(|q| *q == BigInt::from(complement_ssyts))
            == Some(true);

    CountReport {
        arrays,
        ssyts,
        quotient,
        complement_ssyts,
        complement_quotient,
        ok,
    }
}

fn exact_quotient(num: &BigInt, den: &BigInt) -> Option<BigInt> {
    use num_integer::Integer;
    let (q, r) = num.div_rem(den);
    if r == BigInt::from(0) {
        Some(q)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vandermonde::{subsets_with_sum, t_range};

    fn arr(rows: &[&[u32]]) -> TriangularArray {
        TriangularArray::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(TriangularArray::new(vec![vec![3, 4, 4], vec![2, 3], vec![1]]).is_ok());
        // Column must strictly decrease.
        assert!(TriangularArray::new(vec![vec![1, 4, 4], vec![2, 3], vec![1]]).is_err());
        // Row must weakly increase.
        assert!(TriangularArray::new(vec![vec![4, 3, 4], vec![2, 3], vec![1]]).is_err());
        // Staircase lengths required.
        assert!(TriangularArray::new(vec![vec![1, 2], vec![1, 1], vec![1]]).is_err());
    }

    #[test]
    fn enumeration_reproduces_worked_example() {
        let found = enumerate_triangular_arrays(&[1, 3, 4]);
        let expected = vec![
            arr(&[&[3, 4, 4], &[2, 3], &[1]]),
            arr(&[&[4, 4, 4], &[2, 3], &[1]]),
            arr(&[&[4, 4, 4], &[3, 3], &[1]]),
        ];
        assert_eq!(found, expected);
    }

    #[test]
    fn enumeration_edge_cases() {
        assert_eq!(enumerate_triangular_arrays(&[1]), vec![arr(&[&[1]])]);
        assert_eq!(
            enumerate_triangular_arrays(&[1, 2]),
            vec![arr(&[&[2, 2], &[1]])]
        );
    }

    #[test]
    fn decode_reproduces_worked_example() {
        let a = arr(&[&[5, 7, 7], &[3, 5], &[1]]);
        let t = array_to_ssyt(&a);
        assert_eq!(t.rows(), &[vec![1, 1, 2, 2], vec![2, 3, 3]]);
        assert_eq!(t.max_entry(), 3);
        // And back, for the subset with border (1, 5, 7).
        let back = ssyt_to_array(&t, &[1, 5, 7]).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn decode_minimal_subset() {
        let a = arr(&[&[1]]);
        let t = array_to_ssyt(&a);
        assert!(t.rows().is_empty());
        // The all-constant array decodes to the empty tableau for {1,..,m}.
        let a = arr(&[&[3, 3, 3], &[2, 2], &[1]]);
        assert!(array_to_ssyt(&a).rows().is_empty());
        assert_eq!(ssyt_to_array(&array_to_ssyt(&a), &[1, 2, 3]).unwrap(), a);
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let t = Ssyt::new(vec![vec![1, 1, 2, 2], vec![2, 3, 3]], 3).unwrap();
        assert!(ssyt_to_array(&t, &[1, 3, 5]).is_err());
    }

    #[test]
    fn roundtrip_exhaustive_small() {
        for x in [&[2u32, 4, 5][..], &[1, 3, 4], &[2, 3], &[1, 4]] {
            let arrays = enumerate_triangular_arrays(x);
            let mut images = Vec::new();
            for a in &arrays {
                let t = array_to_ssyt(a);
                assert_eq!(ssyt_to_array(&t, x).unwrap(), *a, "X={x:?}");
                images.push(t.reading_word());
            }
            images.sort();
            images.dedup();
            assert_eq!(images.len(), arrays.len(), "injective on X={x:?}");

            let m = x.len() as u32;
            let expected: Vec<Vec<u32>> = enumerate_ssyt(&shape_from_subset(x), m)
                .iter()
                .map(|t| t.reading_word())
                .collect();
            assert_eq!(images, expected, "image is all of SSYT(shape, m) for X={x:?}");
        }
    }

    #[test]
    fn counting_matches_quotients_small() {
        for (m, n) in [(1u32, 1u32), (2, 1), (1, 2), (2, 2), (3, 2)] {
            for t in t_range(m, n) {
                for x in subsets_with_sum(m, n, t) {
                    let report = count_consistency_check(&x);
                    assert!(report.ok, "X={:?} report={report:?}", x.elements());
                }
            }
        }
    }
}
