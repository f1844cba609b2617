use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::elimination::{det_int, integer_rows, rank_int, rref};
use super::rational::{format_rational, q, Rational};
use super::subspace::Subspace;
use super::vector::Vector;
use crate::error::{Error, Result};

/// Dense row-major matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Mat {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rational>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Mat { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| q(x)).collect())
                .collect(),
        )
    }

    /// Matrix whose columns are `cols`; `nrows` fixes the shape when `cols` is empty.
    pub fn from_columns(nrows: usize, cols: &[Vector]) -> Self {
        let mut m = Self::zeros(nrows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.dim(), nrows, "column length");
            for i in 0..nrows {
                m.data[i * cols.len() + j] = c[i].clone();
            }
        }
        m
    }

    /// Matrix whose rows are `rows`; `ncols` fixes the shape when `rows` is empty.
    pub fn from_row_vectors(ncols: usize, rows: &[Vector]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * ncols);
        for r in rows {
            assert_eq!(r.dim(), ncols, "row length");
            data.extend(r.entries().iter().cloned());
        }
        Mat {
            rows: rows.len(),
            cols: ncols,
            data,
        }
    }

    /// Rank-one matrix `w v^T`.
    pub fn outer(w: &Vector, v: &Vector) -> Self {
        let mut data = Vec::with_capacity(w.dim() * v.dim());
        for a in w.entries() {
            for b in v.entries() {
                data.push(a * b);
            }
        }
        Mat {
            rows: w.dim(),
            cols: v.dim(),
            data,
        }
    }

    pub fn diagonal(d: &[Rational]) -> Self {
        let n = d.len();
        let mut m = Self::zeros(n, n);
        for (i, x) in d.iter().enumerate() {
            m.data[i * n + i] = x.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Rational) {
        self.data[i * self.cols + j] = x;
    }

    pub fn data(&self) -> &[Rational] {
        &self.data
    }

    pub fn row_slice(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row(&self, i: usize) -> Vector {
        Vector::new(self.row_slice(i).to_vec())
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector::new((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    /// Entries as a single vector of length rows·cols (row-major).
    pub fn flatten(&self) -> Vector {
        Vector::new(self.data.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &Rational) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(v.dim(), self.cols, "matrix-vector shape");
        Vector::new(
            (0..self.rows)
                .map(|i| {
                    self.row_slice(i)
                        .iter()
                        .zip(v.entries())
                        .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
                })
                .collect(),
        )
    }

    pub fn checked_mul(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Mat {
        assert!(self.is_square());
        let mut acc = Mat::identity(self.rows);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows, "hstack row count");
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(self.row_slice(i));
            data.extend_from_slice(other.row_slice(i));
        }
        Mat {
            rows: self.rows,
            cols,
            data,
        }
    }

    /// `[self ; other]`.
    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols, "vstack column count");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Block matrix `[[a, b], [c, d]]`.
    pub fn block(a: &Mat, b: &Mat, c: &Mat, d: &Mat) -> Mat {
        a.hstack(b).vstack(&c.hstack(d))
    }

    /// Kronecker product; entry `((i·p + k), (j·q + l))` is `self[i,j]·other[k,l]`.
    pub fn kron(&self, other: &Mat) -> Mat {
        let (p, qc) = (other.rows, other.cols);
        let mut out = Mat::zeros(self.rows * p, self.cols * qc);
        let oc = self.cols * qc;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..p {
                    for l in 0..qc {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.data[(i * p + k) * oc + j * qc + l] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn select_columns(&self, idx: &[usize]) -> Mat {
        let cols: Vec<Vector> = idx.iter().map(|&j| self.column(j)).collect();
        Mat::from_columns(self.rows, &cols)
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        let rows: Vec<Vector> = idx.iter().map(|&i| self.row(i)).collect();
        Mat::from_row_vectors(self.cols, &rows)
    }

    /// Rank over the rationals (fraction-free elimination).
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        // eliminate along the shorter side
        let m = if self.rows > self.cols {
            self.transpose()
        } else {
            self.clone()
        };
        let rows: Vec<&[Rational]> = (0..m.rows).map(|i| m.row_slice(i)).collect();
        let (ints, _) = integer_rows(&rows);
        rank_int(ints, m.cols)
    }

    /// Exact determinant. Errors on a non-square matrix; the 0×0 determinant is 1.
    pub fn det(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "determinant of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let rows: Vec<&[Rational]> = (0..self.rows).map(|i| self.row_slice(i)).collect();
        let (ints, scale) = integer_rows(&rows);
        Ok(Rational::new(det_int(ints), scale))
    }

    /// Null space `{x : Mx = 0}` as a subspace of `F^cols`.
    pub fn kernel(&self) -> Subspace {
        let rows: Vec<Vec<Rational>> = (0..self.rows).map(|i| self.row_slice(i).to_vec()).collect();
        let (r, pivots) = rref(rows, self.cols);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let basis: Vec<Vector> = (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = Vector::unit(self.cols, f).into_entries();
                for (row, &p) in r.iter().zip(&pivots) {
                    x[p] = -row[f].clone();
                }
                Vector::new(x)
            })
            .collect();
        Subspace::span(self.cols, &basis)
    }

    /// Column space as a subspace of `F^rows`.
    pub fn image(&self) -> Subspace {
        Subspace::span(self.rows, &self.columns())
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Mat::identity(n));
        let rows: Vec<Vec<Rational>> = (0..n).map(|i| aug.row_slice(i).to_vec()).collect();
        let (r, pivots) = rref(rows, 2 * n);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let data = r.into_iter().flat_map(|row| row.into_iter().skip(n)).collect();
        Some(Mat::from_vec(n, n, data))
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        self.get(i, j)
    }
}

impl Mul for &Mat {
    type Output = Mat;

    fn mul(self, rhs: &Mat) -> Mat {
        self.checked_mul(rhs).expect("matrix product shape")
    }
}

impl Add for &Mat {
    type Output = Mat;

    fn add(self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Mat {
    type Output = Mat;

    fn sub(self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference shape");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Mat {
    type Output = Mat;

    fn neg(self) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", format_rational(self.get(i, j)))?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::frac;

    #[test]
    fn rank_examples() {
        assert_eq!(Mat::identity(3).rank(), 3);
        assert_eq!(Mat::zeros(2, 3).rank(), 0);
        assert_eq!(Mat::from_int_rows(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(Mat::zeros(0, 4).rank(), 0);
    }

    #[test]
    fn det_examples() {
        assert_eq!(Mat::identity(4).det().unwrap(), q(1));
        assert_eq!(Mat::from_int_rows(&[&[1, 1], &[1, 1]]).det().unwrap(), q(0));
        assert_eq!(Mat::from_int_rows(&[&[2, 1], &[1, 2]]).det().unwrap(), q(3));
        assert!(Mat::zeros(2, 3).det().is_err());
        assert_eq!(Mat::zeros(0, 0).det().unwrap(), q(1));
        let m = Mat::from_rows(vec![vec![frac(1, 2), q(1)], vec![q(3), frac(2, 3)]]);
        // 1/3 - 3
        assert_eq!(m.det().unwrap(), frac(-8, 3));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Mat::zeros(2, 3).kernel(), Subspace::full(3));
        assert!(Mat::identity(3).kernel().is_zero());
        let k = Mat::from_int_rows(&[&[1, 1, 0]]).kernel();
        assert_eq!(k.dim(), 2);
        assert!(k.contains(&Vector::from_ints(&[1, -1, 0])));
        assert!(k.contains(&Vector::from_ints(&[0, 0, 1])));
    }

    #[test]
    fn inverse_and_products() {
        let m = Mat::from_int_rows(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Mat::identity(2));
        assert!(Mat::from_int_rows(&[&[1, 2], &[2, 4]]).inverse().is_none());
        let a = Mat::from_int_rows(&[&[1, 2]]);
        let b = Mat::from_int_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.kron(&b), Mat::from_int_rows(&[&[0, 1, 0, 2], &[1, 0, 2, 0]]));
        assert_eq!(
            Mat::outer(&Vector::from_ints(&[1, 2]), &Vector::from_ints(&[3, 0, 1])),
            Mat::from_int_rows(&[&[3, 0, 1], &[6, 0, 2]])
        );
        assert!(a.checked_mul(&a).is_err());
    }
}
