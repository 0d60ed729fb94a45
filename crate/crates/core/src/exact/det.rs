//! Exact determinants and rank over the Laurent ring and the rationals.

use num_traits::{One, Zero};
use thiserror::Error;

use super::laurent::LaurentPoly;
use super::rational::BigRat;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix is not square: {rows} rows, row {row} has {len} entries")]
    NotSquare { rows: usize, row: usize, len: usize },
}

fn check_square<T>(m: &[Vec<T>]) -> Result<usize, MatrixError> {
    let k = m.len();
    for (row, r) in m.iter().enumerate() {
        if r.len() != k {
            return Err(MatrixError::NotSquare {
                rows: k,
                row,
                len: r.len(),
            });
        }
    }
    Ok(k)
}

/// Exact determinant of a square matrix of Laurent polynomials.
///
/// Small matrices go through memoized cofactor expansion; larger ones use
/// fraction-free (Bareiss) elimination, whose divisions are exact in the ring.
pub fn laurent_det(m: &[Vec<LaurentPoly>]) -> Result<LaurentPoly, MatrixError> {
    let k = check_square(m)?;
    if k == 0 {
        return Ok(LaurentPoly::one());
    }
    if k <= 8 {
        Ok(det_cofactor(m, k))
    } else {
        Ok(det_bareiss(m.to_vec(), k))
    }
}

/// Laplace expansion along the first live column, memoized on the set of
/// live rows (the column index is determined by the popcount).
fn det_cofactor(m: &[Vec<LaurentPoly>], k: usize) -> LaurentPoly {
    fn go(
        m: &[Vec<LaurentPoly>],
        k: usize,
        mask: u32,
        memo: &mut std::collections::HashMap<u32, LaurentPoly>,
    ) -> LaurentPoly {
        if mask == 0 {
            return LaurentPoly::one();
        }
        if let Some(hit) = memo.get(&mask) {
            return hit.clone();
        }
        let col = k - mask.count_ones() as usize;
        let mut acc = LaurentPoly::zero();
        let mut sign_pos = true;
        for row in 0..k {
            if mask & (1 << row) == 0 {
                continue;
            }
            let entry = &m[row][col];
            if !entry.is_zero() {
                let minor = go(m, k, mask & !(1 << row), memo);
                let term = entry * &minor;
                acc = if sign_pos { &acc + &term } else { &acc - &term };
            }
            sign_pos = !sign_pos;
        }
        memo.insert(mask, acc.clone());
        acc
    }
    let mut memo = std::collections::HashMap::new();
    go(m, k, (1u32 << k) - 1, &mut memo)
}

/// One-step fraction-free elimination with row pivoting. Every division is
/// by the previous pivot and is exact over an integral domain.
fn det_bareiss(mut m: Vec<Vec<LaurentPoly>>, k: usize) -> LaurentPoly {
    let mut prev = LaurentPoly::one();
    let mut negate = false;
    for p in 0..k - 1 {
        if m[p][p].is_zero() {
            match (p + 1..k).find(|&r| !m[r][p].is_zero()) {
                Some(r) => {
                    m.swap(p, r);
                    negate = !negate;
                }
                None => return LaurentPoly::zero(),
            }
        }
        for i in p + 1..k {
            for j in p + 1..k {
                let num = &(&m[p][p] * &m[i][j]) - &(&m[i][p] * &m[p][j]);
                m[i][j] = num
                    .exact_div(&prev)
                    .expect("fraction-free elimination divides exactly");
            }
            m[i][p] = LaurentPoly::zero();
        }
        prev = m[p][p].clone();
    }
    let det = m[k - 1][k - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Exact determinant of a rational matrix by Gaussian elimination.
pub fn rat_det(m: &[Vec<BigRat>]) -> Result<BigRat, MatrixError> {
    let k = check_square(m)?;
    let mut m = m.to_vec();
    let mut det = BigRat::one();
    for p in 0..k {
        let pivot = match (p..k).find(|&r| !m[r][p].is_zero()) {
            Some(r) => r,
            None => return Ok(BigRat::zero()),
        };
        if pivot != p {
            m.swap(p, pivot);
            det = -det;
        }
        det *= m[p][p].clone();
        for i in p + 1..k {
            if m[i][p].is_zero() {
                continue;
            }
            let factor = &m[i][p] / &m[p][p];
            for j in p..k {
                let delta = &factor * &m[p][j];
                m[i][j] -= delta;
            }
        }
    }
    Ok(det)
}

/// Exact rank of a (possibly rectangular) rational matrix.
pub fn rat_rank(m: &[Vec<BigRat>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut m = m.to_vec();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for i in rank + 1..rows {
            if m[i][col].is_zero() {
                continue;
            }
            let factor = &m[i][col] / &m[rank][col];
            for j in col..cols {
                let delta = &factor * &m[rank][j];
                m[i][j] -= delta;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}
