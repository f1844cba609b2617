//! Fixed instances shared by the benchmarks.

use linminmax::generate::Generator;
use linminmax::linalg::{Mat, Subspace, Vector};
use linminmax::relation::{MatrixSpace, Relation};

/// Square integer matrix with entries in `[-bound, bound]`.
pub fn dense_matrix(n: usize, bound: i64, seed: u64) -> Mat {
    let mut g = Generator::new(seed);
    let cols: Vec<Vector> = (0..n).map(|_| g.small_vector(n, bound)).collect();
    Mat::from_columns(n, &cols)
}

pub fn relation(n: usize, count: usize, seed: u64) -> Relation {
    Generator::new(seed).relation(n, n, count)
}

pub fn menger_instance(n: usize, count: usize, seed: u64) -> (Relation, Subspace, Subspace) {
    let mut g = Generator::new(seed);
    let r = g.relation(n, n, count);
    let (e, f) = (g.subspace(n, n / 2), g.subspace(n, n / 2));
    (r, e, f)
}

pub fn matrix_space(n: usize, d: usize, seed: u64) -> MatrixSpace {
    Generator::new(seed).matrix_space(n, n, d)
}
