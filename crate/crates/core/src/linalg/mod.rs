//! Exact linear algebra over the rationals: scalars, dense vectors and
//! matrices, and canonical-form subspaces.

mod elimination;
pub mod matrix;
pub mod rational;
pub mod subspace;
pub mod vector;

pub use matrix::Mat;
pub use rational::{format_rational, frac, parse_rational, q, Rational};
pub use subspace::Subspace;
pub use vector::Vector;

pub(crate) use elimination::{integer_rows, rank_int};

/// Rank of a matrix over the rationals.
pub fn rank(m: &Mat) -> usize {
    m.rank()
}

/// Null space of `m` as a subspace of `F^cols`.
pub fn kernel(m: &Mat) -> Subspace {
    m.kernel()
}

/// Rank of a list of vectors of a common dimension.
pub fn rank_of(dim: usize, vs: &[&Vector]) -> usize {
    if vs.is_empty() {
        return 0;
    }
    let rows: Vec<&[Rational]> = vs.iter().map(|v| v.entries()).collect();
    let (ints, _) = integer_rows(&rows);
    rank_int(ints, dim)
}

/// Sum and intersection of two subspaces of the same ambient space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspacePair {
    pub sum: Subspace,
    pub intersection: Subspace,
}

pub fn subspace_algebra(s1: &Subspace, s2: &Subspace) -> crate::Result<SubspacePair> {
    Ok(SubspacePair {
        sum: s1.sum(s2)?,
        intersection: s1.intersection(s2)?,
    })
}

mod echelon;
pub use echelon::Echelon;
