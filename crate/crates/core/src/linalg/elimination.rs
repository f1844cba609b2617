//! Elimination kernels.
//!
//! Rank and determinant clear the denominators of each row and run
//! fraction-free (Bareiss) elimination over the integers. Every intermediate
//! entry is a minor of the input, so the divisions are exact. Small inputs
//! first try an `i128` pass with checked arithmetic and fall back to `BigInt`
//! on overflow.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::rational::{denominator_lcm, Rational};

/// Integer rows spanning the same row space, plus the product of the row
/// multipliers (needed to recover a determinant).
pub(crate) fn integer_rows(rows: &[&[Rational]]) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut scale = BigInt::one();
    let out = rows
        .iter()
        .map(|row| {
            let l = denominator_lcm(row.iter());
            let r: Vec<BigInt> = row
                .iter()
                .map(|x| x.numer() * (&l / x.denom()))
                .collect();
            scale *= &l;
            r
        })
        .collect();
    (out, scale)
}

/// Rank of an integer matrix given as rows.
pub(crate) fn rank_int(rows: Vec<Vec<BigInt>>, ncols: usize) -> usize {
    if rows.is_empty() || ncols == 0 {
        return 0;
    }
    if let Some(r) = rank_small(&rows, ncols) {
        return r;
    }
    bareiss(rows, ncols).0
}

/// Determinant of a square integer matrix.
pub(crate) fn det_int(rows: Vec<Vec<BigInt>>) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let (rank, rows, sign) = bareiss(rows, n);
    if rank < n {
        return BigInt::zero();
    }
    let d = rows[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Fraction-free echelon form. Returns (rank, reduced rows, odd number of swaps).
fn bareiss(mut a: Vec<Vec<BigInt>>, ncols: usize) -> (usize, Vec<Vec<BigInt>>, bool) {
    let nrows = a.len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut odd = false;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        if p != rank {
            a.swap(p, rank);
            odd = !odd;
        }
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = &pivot_row[col];
        for row in rest.iter_mut() {
            let factor = row[col].clone();
            for j in col + 1..ncols {
                let t = pivot * &row[j] - &factor * &pivot_row[j];
                row[j] = t / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot.clone();
        rank += 1;
    }
    (rank, a, odd)
}

/// `i128` Bareiss; `None` if an entry does not fit or an operation overflows.
fn rank_small(rows: &[Vec<BigInt>], ncols: usize) -> Option<usize> {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x.to_i128()).collect::<Option<Vec<_>>>())
        .collect::<Option<_>>()?;
    let nrows = a.len();
    let mut prev: i128 = 1;
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(p, rank);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = pivot_row[col];
        for row in rest.iter_mut() {
            let factor = row[col];
            for j in col + 1..ncols {
                let t = pivot
                    .checked_mul(row[j])?
                    .checked_sub(factor.checked_mul(pivot_row[j])?)?;
                row[j] = t / prev;
            }
            row[col] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

/// Reduced row echelon form over the rationals: nonzero rows only, each with a
/// leading 1 in its pivot column and zeros elsewhere in that column.
pub(crate) fn rref(mut a: Vec<Vec<Rational>>, ncols: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let nrows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let inv = a[r][col].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x -= &f * y;
            }
        }
        pivots.push(col);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}
