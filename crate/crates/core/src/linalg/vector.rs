use std::fmt;
use std::ops::Index;

use num_traits::Zero;

use super::rational::{format_rational, q, Rational};

/// Dense column vector over the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector {
    entries: Vec<Rational>,
}

impl Vector {
    pub fn new(entries: Vec<Rational>) -> Self {
        Vector { entries }
    }

    pub fn zeros(dim: usize) -> Self {
        Vector {
            entries: vec![Rational::zero(); dim],
        }
    }

    /// Standard basis vector `e_i` of `F^dim` (0-based `i`).
    pub fn unit(dim: usize, i: usize) -> Self {
        assert!(i < dim, "unit index {i} out of range for dimension {dim}");
        let mut v = Self::zeros(dim);
        v.entries[i] = q(1);
        v
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Vector {
            entries: xs.iter().map(|&x| q(x)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Symmetric bilinear form `u^T v`.
    pub fn dot(&self, other: &Vector) -> Rational {
        assert_eq!(self.dim(), other.dim(), "dot product of mismatched vectors");
        self.entries
            .iter()
            .zip(&other.entries)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn is_orthogonal(&self, other: &Vector) -> bool {
        self.dot(other).is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Vector {
        Vector {
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim());
        Vector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim());
        Vector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// `self ⊕ other`, the concatenation of coordinates.
    pub fn direct_sum(&self, other: &Vector) -> Vector {
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Vector { entries }
    }

    /// Place `self` at coordinates `offset..offset+dim` of a zero vector of length `total`.
    pub fn embed(&self, offset: usize, total: usize) -> Vector {
        assert!(offset + self.dim() <= total);
        let mut v = Vector::zeros(total);
        v.entries[offset..offset + self.dim()].clone_from_slice(&self.entries);
        v
    }
}

impl Index<usize> for Vector {
    type Output = Rational;

    fn index(&self, i: usize) -> &Rational {
        &self.entries[i]
    }
}

impl From<Vec<Rational>> for Vector {
    fn from(entries: Vec<Rational>) -> Self {
        Vector { entries }
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_rational(x))?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let u = Vector::from_ints(&[1, 2, 3]);
        let v = Vector::from_ints(&[3, 0, -1]);
        assert_eq!(u.dot(&v), q(0));
        assert!(u.is_orthogonal(&v));
        assert_eq!(u.add(&v), Vector::from_ints(&[4, 2, 2]));
        assert_eq!(u.sub(&v), Vector::from_ints(&[-2, 2, 4]));
        assert_eq!(Vector::unit(3, 1), Vector::from_ints(&[0, 1, 0]));
        assert_eq!(
            u.direct_sum(&Vector::from_ints(&[9])),
            Vector::from_ints(&[1, 2, 3, 9])
        );
        assert_eq!(
            Vector::from_ints(&[5]).embed(1, 3),
            Vector::from_ints(&[0, 5, 0])
        );
        assert_eq!(u.to_string(), "(1, 2, 3)");
    }
}
