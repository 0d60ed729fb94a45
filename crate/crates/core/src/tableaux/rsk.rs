//! Dual Knuth insertion: 0-1 matrices against pairs of tableaux with
//! mutually transposed shapes.

use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;
use std::str::FromStr;

use super::shape::Shape;
use super::ssyt::{enumerate_ssyt, Ssyt};
use super::TableauxError;

/// An `n x m` matrix of bits. Rows index the Q-side alphabet, columns the
/// P-side alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroOneMatrix {
    n: usize,
    m: usize,
    bits: Vec<bool>,
}

impl ZeroOneMatrix {
    pub fn new(n: usize, m: usize, bits: Vec<bool>) -> Result<Self, TableauxError> {
        if bits.len() != n * m {
            return Err(TableauxError::BadMatrix);
        }
        Ok(ZeroOneMatrix { n, m, bits })
    }

    pub fn rows(&self) -> usize {
        self.n
    }

    pub fn cols(&self) -> usize {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.m + j]
    }

    pub fn ones_count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Decode the 0-1 matrix with index `code` over all `n x m` matrices;
    /// bit `k` of the code is entry `k` in row-major order.
    pub fn from_code(n: usize, m: usize, code: u64) -> Self {
        let bits = (0..n * m).map(|k| code >> k & 1 == 1).collect();
        ZeroOneMatrix { n, m, bits }
    }
}

/// Rows as runs of `0`/`1` separated by `/`, e.g. `"11/00"` for 2x2.
impl FromStr for ZeroOneMatrix {
    type Err = TableauxError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let rows: Vec<&str> = s.split('/').collect();
        let n = rows.len();
        let m = rows.first().map_or(0, |r| r.chars().count());
        if m == 0 {
            return Err(TableauxError::BadMatrix);
        }
        let mut bits = Vec::with_capacity(n * m);
        for row in rows {
            if row.chars().count() != m {
                return Err(TableauxError::BadMatrix);
            }
            for ch in row.chars() {
                match ch {
                    '0' => bits.push(false),
                    '1' => bits.push(true),
                    _ => return Err(TableauxError::BadMatrix),
                }
            }
        }
        Ok(ZeroOneMatrix { n, m, bits })
    }
}

impl fmt::Display for ZeroOneMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            if i > 0 {
                write!(f, "/")?;
            }
            for j in 0..self.m {
                write!(f, "{}", if self.get(i, j) { '1' } else { '0' })?;
            }
        }
        Ok(())
    }
}

/// Dual Knuth insertion of a 0-1 matrix.
///
/// Rows are scanned top to bottom and, within a row, column indices
/// ascending; each column index bumps the leftmost entry `>= j` in the
/// working tableau (rows strictly increasing), with the matrix row recorded
/// at the new box. Transposing the working tableau at the end gives `P`, so
/// `shape(Q) = transpose(shape(P))`, `P` has entries in `{1,...,m}`, `Q` in
/// `{1,...,n}`, and both have `ones_count` boxes. The map is injective over
/// all 0-1 matrices of a fixed size.
pub fn dual_rsk(mat: &ZeroOneMatrix) -> (Ssyt, Ssyt) {
    let mut work: Vec<Vec<u32>> = Vec::new();
    let mut record: Vec<Vec<u32>> = Vec::new();

    for i in 0..mat.rows() {
        for j in 0..mat.cols() {
            if !mat.get(i, j) {
                continue;
            }
            let mut value = j as u32 + 1;
            let mut row = 0;
            loop {
                if row == work.len() {
                    work.push(vec![value]);
                    record.push(vec![i as u32 + 1]);
                    break;
                }
                match work[row].iter().position(|&e| e >= value) {
                    None => {
                        work[row].push(value);
                        record[row].push(i as u32 + 1);
                        break;
                    }
                    Some(idx) => {
                        std::mem::swap(&mut work[row][idx], &mut value);
                        row += 1;
                    }
                }
            }
        }
    }

    let p_rows = transpose_rows(&work);
    let p = Ssyt::new(p_rows, mat.cols() as u32).expect("insertion output is semistandard");
    let q = Ssyt::new(record, mat.rows() as u32).expect("recording output is semistandard");
    (p, q)
}

fn transpose_rows(rows: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let cols = rows.first().map_or(0, |r| r.len());
    (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c).copied()).collect())
        .collect()
}

/// Number of tableau pairs `(P, Q)` with `t*` boxes, `shape(Q)` the
/// transpose of `shape(P)`, and entry bounds `m` and `n`, by direct
/// enumeration over shapes inside the `m x n` box.
pub fn count_pairs(m: u32, n: u32, tstar: u64) -> BigInt {
    let mut acc = BigInt::zero();
    for shape in shapes_in_box(tstar, m, n) {
        let p_count = enumerate_ssyt(&shape, m).len();
        let q_count = enumerate_ssyt(&shape.transpose(), n).len();
        acc += BigInt::from(p_count as u64) * BigInt::from(q_count as u64);
    }
    acc
}

/// All shapes with `size` boxes, at most `max_rows` rows, parts at most
/// `max_part`.
fn shapes_in_box(size: u64, max_rows: u32, max_part: u32) -> Vec<Shape> {
    let mut out = Vec::new();
    let mut parts: Vec<u32> = Vec::new();
    fn go(size: u64, rows_left: u32, cap: u32, parts: &mut Vec<u32>, out: &mut Vec<Shape>) {
        if size == 0 {
            out.push(Shape::new(parts.clone()).expect("weakly decreasing by construction"));
            return;
        }
        if rows_left == 0 {
            return;
        }
        let hi = cap.min(size.min(u64::from(u32::MAX)) as u32);
        for p in (1..=hi).rev() {
            // Remaining rows cannot absorb more than rows_left-1 copies of p.
            if (size - p as u64) > (rows_left as u64 - 1) * p as u64 {
                continue;
            }
            parts.push(p);
            go(size - p as u64, rows_left - 1, p, parts, out);
            parts.pop();
        }
    }
    go(size, max_rows, max_part, &mut parts, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_parsing() {
        let m: ZeroOneMatrix = "11/00".parse().unwrap();
        assert_eq!((m.rows(), m.cols()), (2, 2));
        assert_eq!(m.ones_count(), 2);
        assert!(m.get(0, 0) && m.get(0, 1));
        assert_eq!(m.to_string(), "11/00");

        assert!("".parse::<ZeroOneMatrix>().is_err());
        assert!("10/1".parse::<ZeroOneMatrix>().is_err());
        assert!("12".parse::<ZeroOneMatrix>().is_err());
    }

    #[test]
    fn zero_matrix_gives_empty_pair() {
        let m: ZeroOneMatrix = "0".parse().unwrap();
        let (p, q) = dual_rsk(&m);
        assert_eq!(p.size(), 0);
        assert_eq!(q.size(), 0);
    }

    #[test]
    fn one_by_one() {
        let m: ZeroOneMatrix = "1".parse().unwrap();
        let (p, q) = dual_rsk(&m);
        assert_eq!(p.rows(), &[vec![1]]);
        assert_eq!(q.rows(), &[vec![1]]);
    }

    #[test]
    fn output_constraints_hold() {
        let m: ZeroOneMatrix = "101/011".parse().unwrap();
        let (p, q) = dual_rsk(&m);
        assert_eq!(p.size() as usize, m.ones_count());
        assert_eq!(q.size() as usize, m.ones_count());
        assert_eq!(*q.shape(), p.shape().transpose());
        assert!(p.rows().iter().flatten().all(|&v| v <= m.cols() as u32));
        assert!(q.rows().iter().flatten().all(|&v| v <= m.rows() as u32));
    }

    #[test]
    fn two_by_two_with_two_ones_gives_six_distinct_pairs() {
        let mut seen = std::collections::BTreeSet::new();
        for code in 0..16u64 {
            let m = ZeroOneMatrix::from_code(2, 2, code);
            if m.ones_count() != 2 {
                continue;
            }
            let (p, q) = dual_rsk(&m);
            seen.insert((p.rows().to_vec(), q.rows().to_vec()));
        }
        assert_eq!(seen.len(), 6);
    }

    #[test]
    fn injective_over_all_small_matrices() {
        for (n, m) in [(1usize, 1usize), (2, 2), (2, 3), (3, 2)] {
            let mut seen = std::collections::BTreeSet::new();
            for code in 0..(1u64 << (n * m)) {
                let mat = ZeroOneMatrix::from_code(n, m, code);
                let (p, q) = dual_rsk(&mat);
                assert!(
                    seen.insert((p.rows().to_vec(), q.rows().to_vec())),
                    "collision at {mat}"
                );
            }
        }
    }

    #[test]
    fn pair_counts_follow_binomials() {
        use crate::exact::binomial;
        for (m, n) in [(1u32, 1u32), (2, 2), (2, 3), (3, 3)] {
            for tstar in 0..=(m * n) as u64 {
                assert_eq!(
                    count_pairs(m, n, tstar),
                    binomial((m * n) as u64, tstar as i64),
                    "m={m} n={n} t*={tstar}"
                );
            }
        }
        assert_eq!(count_pairs(4, 7, 0), BigInt::from(1));
    }
}
