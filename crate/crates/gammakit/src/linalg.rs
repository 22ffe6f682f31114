//! Exact linear algebra over the rationals: rank and unique-solution solves
//! for the small dense systems used by basis checks and monomial inversion.

use num_rational::BigRational;
use num_traits::Zero;

use crate::GammaError;

/// Rank of a dense rational matrix by exact Gaussian elimination.
// Row elimination reads the pivot row while writing another, so indexed
// loops are the clear form here.
#[allow(clippy::needless_range_loop)]
pub(crate) fn rank(mut matrix: Vec<Vec<BigRational>>) -> usize {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    debug_assert!(matrix.iter().all(|row| row.len() == cols), "ragged matrix");
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows).find(|&r| !matrix[r][col].is_zero()) else {
            continue;
        };
        matrix.swap(rank, pivot_row);
        let pivot = matrix[rank][col].clone();
        for r in rank + 1..rows {
            if matrix[r][col].is_zero() {
                continue;
            }
            let factor = &matrix[r][col] / &pivot;
            for c in col..cols {
                let delta = &factor * &matrix[rank][c];
                matrix[r][c] -= delta;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Solves `A x = b` exactly for a system with at least as many rows as
/// columns, requiring the solution to exist and be unique. Returns
/// [`GammaError::Inconsistent`] when the system has no solution and
/// [`GammaError::Invalid`] when the columns are linearly dependent.
// Same indexed-loop shape as `rank`: two rows are involved in every update.
#[allow(clippy::needless_range_loop)]
pub(crate) fn solve_unique(
    a: &[Vec<BigRational>],
    b: &[BigRational],
) -> Result<Vec<BigRational>, GammaError> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    assert_eq!(rows, b.len(), "matrix and right-hand side disagree on rows");
    assert!(rows >= cols, "system must have at least as many equations as unknowns");

    // Augmented matrix [A | b], forward elimination with exact arithmetic.
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), cols, "ragged matrix");
            let mut out = row.clone();
            out.push(rhs.clone());
            out
        })
        .collect();

    let mut pivot_of_col = Vec::with_capacity(cols);
    let mut next_row = 0;
    for col in 0..cols {
        let Some(pivot_row) = (next_row..rows).find(|&r| !m[r][col].is_zero()) else {
            return Err(GammaError::Invalid(format!(
                "underdetermined system: column {col} has no pivot"
            )));
        };
        m.swap(next_row, pivot_row);
        let pivot = m[next_row][col].clone();
        for r in next_row + 1..rows {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pivot;
            for c in col..=cols {
                let delta = &factor * &m[next_row][c];
                m[r][c] -= delta;
            }
        }
        pivot_of_col.push(next_row);
        next_row += 1;
    }

    // Any leftover row must have reduced to 0 = 0.
    for (r, row) in m.iter().enumerate().skip(next_row) {
        if !row[cols].is_zero() {
            return Err(GammaError::Inconsistent(format!(
                "equation {r} reduces to 0 = {}",
                row[cols]
            )));
        }
    }

    // Back-substitution.
    let mut x = vec![BigRational::zero(); cols];
    for col in (0..cols).rev() {
        let row = pivot_of_col[col];
        let mut value = m[row][cols].clone();
        for c in col + 1..cols {
            value -= &m[row][c] * &x[c];
        }
        x[col] = value / &m[row][col];
    }
    Ok(x)
}
