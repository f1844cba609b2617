//! Linear subspaces in canonical form.
//!
//! A subspace of `F^n` is stored as the nonzero rows of the reduced row
//! echelon form of any spanning set (equivalently, a basis matrix in reduced
//! column echelon form). The form is unique, so two subspaces are equal
//! exactly when their stored data are equal.

use num_traits::Zero;

use super::elimination::rref;
use super::matrix::Mat;
use super::rational::Rational;
use super::vector::Vector;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Span of `vectors` inside `F^ambient`.
    pub fn span<'a>(ambient: usize, vectors: impl IntoIterator<Item = &'a Vector>) -> Self {
        let rows: Vec<Vec<Rational>> = vectors
            .into_iter()
            .map(|v| {
                assert_eq!(v.dim(), ambient, "spanning vector has wrong dimension");
                v.entries().to_vec()
            })
            .collect();
        let (r, pivots) = rref(rows, ambient);
        Subspace {
            ambient,
            basis: r.into_iter().map(Vector::new).collect(),
            pivots,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| Vector::unit(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    /// `span{e_i : i ∈ idx}`.
    pub fn coordinate(ambient: usize, idx: &[usize]) -> Self {
        let vs: Vec<Vector> = idx.iter().map(|&i| Vector::unit(ambient, i)).collect();
        Self::span(ambient, &vs)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Basis vectors as the columns of an `ambient × dim` matrix.
    pub fn basis_matrix(&self) -> Mat {
        Mat::from_columns(self.ambient, &self.basis)
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn contains(&self, v: &Vector) -> bool {
        assert_eq!(v.dim(), self.ambient, "membership test dimension");
        let mut x = v.entries().to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if x[p].is_zero() {
                continue;
            }
            let f = x[p].clone();
            for (a, b) in x.iter_mut().zip(row.entries()) {
                *a -= &f * b;
            }
        }
        x.iter().all(Zero::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.ambient == self.ambient && other.basis.iter().all(|v| self.contains(v))
    }

    /// `S^⊥` under the dot product.
    pub fn orthocomplement(&self) -> Subspace {
        Mat::from_row_vectors(self.ambient, &self.basis).kernel()
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Subspace::span(
            self.ambient,
            self.basis.iter().chain(other.basis.iter()),
        ))
    }

    /// `S ∩ T`, computed from the kernel of `[B_S | -B_T]`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        let k1 = self.dim();
        let neg: Vec<Vector> = other
            .basis
            .iter()
            .map(|v| Vector::new(v.entries().iter().map(|x| -x).collect()))
            .collect();
        let mut cols = self.basis.clone();
        cols.extend(neg);
        let ker = Mat::from_columns(self.ambient, &cols).kernel();
        let vs: Vec<Vector> = ker
            .basis()
            .iter()
            .map(|c| {
                self.basis
                    .iter()
                    .zip(&c.entries()[..k1])
                    .fold(Vector::zeros(self.ambient), |acc, (b, a)| acc.add(&b.scale(a)))
            })
            .collect();
        Ok(Subspace::span(self.ambient, &vs))
    }

    /// Image `M(S)` under a matrix with `cols == ambient`.
    pub fn image_under(&self, m: &Mat) -> Result<Subspace> {
        if m.cols() != self.ambient {
            return Err(Error::Dimension(format!(
                "cannot apply {}x{} matrix to a subspace of F^{}",
                m.rows(),
                m.cols(),
                self.ambient
            )));
        }
        let imgs: Vec<Vector> = self.basis.iter().map(|v| m.apply(v)).collect();
        Ok(Subspace::span(m.rows(), &imgs))
    }

    /// `S ⊕ T` inside `F^(a+b)`.
    pub fn direct_sum(&self, other: &Subspace) -> Subspace {
        let total = self.ambient + other.ambient;
        let vs: Vec<Vector> = self
            .basis
            .iter()
            .map(|v| v.embed(0, total))
            .chain(other.basis.iter().map(|w| w.embed(self.ambient, total)))
            .collect();
        Subspace::span(total, &vs)
    }

    /// Extend to a basis of the ambient space: returns vectors completing `self`,
    /// taken greedily from the standard basis.
    pub fn complement_basis(&self) -> Vec<Vector> {
        let mut cur = self.clone();
        let mut out = Vec::new();
        for i in 0..self.ambient {
            if cur.is_full() {
                break;
            }
            let e = Vector::unit(self.ambient, i);
            if !cur.contains(&e) {
                cur = Subspace::span(self.ambient, cur.basis.iter().chain([&e]));
                out.push(e);
            }
        }
        out
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::Dimension(format!(
                "subspaces of F^{} and F^{}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, i: usize) -> Vector {
        Vector::unit(n, i)
    }

    #[test]
    fn orthocomplement_examples() {
        assert_eq!(
            Subspace::span(3, &[e(3, 0)]).orthocomplement(),
            Subspace::span(3, &[e(3, 1), e(3, 2)])
        );
        assert!(Subspace::full(4).orthocomplement().is_zero());
        assert_eq!(
            Subspace::span(2, &[Vector::from_ints(&[1, 1])]).orthocomplement(),
            Subspace::span(2, &[Vector::from_ints(&[1, -1])])
        );
    }

    #[test]
    fn sum_and_intersection_examples() {
        let a = Subspace::span(3, &[e(3, 0)]);
        let b = Subspace::span(3, &[e(3, 1)]);
        assert_eq!(a.sum(&b).unwrap().dim(), 2);
        assert!(a.intersection(&b).unwrap().is_zero());
        assert_eq!(a.sum(&a).unwrap(), a);
        assert_eq!(a.intersection(&a).unwrap(), a);

        let s = Subspace::span(3, &[e(3, 0), e(3, 1)]);
        let t = Subspace::span(3, &[e(3, 1), e(3, 2)]);
        assert_eq!(s.intersection(&t).unwrap(), Subspace::span(3, &[e(3, 1)]));
        assert!(s.sum(&Subspace::zero(4)).is_err());
    }

    #[test]
    fn canonical_equality() {
        let s1 = Subspace::span(3, &[Vector::from_ints(&[1, 1, 0]), Vector::from_ints(&[0, 1, 1])]);
        let s2 = Subspace::span(3, &[Vector::from_ints(&[1, 0, -1]), Vector::from_ints(&[2, 3, 1])]);
        assert_eq!(s1, s2);
    }

    #[test]
    fn complement_basis_completes() {
        let s = Subspace::span(3, &[Vector::from_ints(&[1, 1, 0])]);
        let extra = s.complement_basis();
        assert_eq!(extra.len(), 2);
        let all: Vec<Vector> = s.basis().iter().chain(&extra).cloned().collect();
        assert!(Subspace::span(3, &all).is_full());
    }

    #[test]
    fn direct_sum_and_image() {
        let s = Subspace::span(2, &[e(2, 0)]).direct_sum(&Subspace::full(1));
        assert_eq!(s, Subspace::coordinate(3, &[0, 2]));
        let m = Mat::from_int_rows(&[&[0, 1], &[0, 0]]);
        assert!(Subspace::span(2, &[e(2, 0)]).image_under(&m).unwrap().is_zero());
        assert_eq!(
            Subspace::full(2).image_under(&m).unwrap(),
            Subspace::span(2, &[e(2, 0)])
        );
    }
}
