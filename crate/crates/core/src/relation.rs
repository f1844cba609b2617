//! Relations `R ⊆ F^n × F^m`, the matrix spaces they generate, and the
//! operator `V[E]`.
//!
//! Each pair `(v, w)` stands for the rank-one map `w v^T`. A relation is kept as
//! a list so that pairs can be referred to by index; duplicate and zero pairs
//! are allowed and simply contribute nothing new to `V_R`.

use crate::error::{Error, Result};
use crate::linalg::{Echelon, Mat, Subspace, Vector};
use crate::sampler::GenericSampler;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    n: usize,
    m: usize,
    pairs: Vec<(Vector, Vector)>,
}

impl Relation {
    pub fn new(n: usize, m: usize, pairs: Vec<(Vector, Vector)>) -> Result<Self> {
        for (i, (v, w)) in pairs.iter().enumerate() {
            if v.dim() != n || w.dim() != m {
                return Err(Error::Dimension(format!(
                    "pair {i} has dimensions ({}, {}), expected ({n}, {m})",
                    v.dim(),
                    w.dim()
                )));
            }
        }
        Ok(Relation { n, m, pairs })
    }

    pub fn empty(n: usize, m: usize) -> Self {
        Relation {
            n,
            m,
            pairs: Vec::new(),
        }
    }

    /// Pairs `(e_i, e_j)` for each `(i, j)` (0-based).
    pub fn from_index_pairs(n: usize, m: usize, pairs: &[(usize, usize)]) -> Self {
        Relation {
            n,
            m,
            pairs: pairs
                .iter()
                .map(|&(i, j)| (Vector::unit(n, i), Vector::unit(m, j)))
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(Vector, Vector)] {
        &self.pairs
    }

    pub fn pair(&self, i: usize) -> &(Vector, Vector) {
        &self.pairs[i]
    }

    /// `w_i v_i^T`.
    pub fn rank_one(&self, i: usize) -> Mat {
        let (v, w) = &self.pairs[i];
        Mat::outer(w, v)
    }

    /// Index of the first pair literally equal to `(v, w)`.
    pub fn find(&self, v: &Vector, w: &Vector) -> Option<usize> {
        self.pairs.iter().position(|(a, b)| a == v && b == w)
    }

    /// Indices of a sub-list whose rank-one matrices are linearly independent
    /// and span `V_R`, chosen greedily in index order.
    pub fn reduced_indices(&self) -> Vec<usize> {
        let mut ech = Echelon::new(self.n * self.m);
        (0..self.pairs.len())
            .filter(|&i| ech.try_push(&self.rank_one(i).flatten()))
            .collect()
    }

    pub fn subrelation(&self, idx: &[usize]) -> Relation {
        Relation {
            n: self.n,
            m: self.m,
            pairs: idx.iter().map(|&i| self.pairs[i].clone()).collect(),
        }
    }

    pub fn v_vectors(&self) -> Vec<&Vector> {
        self.pairs.iter().map(|(v, _)| v).collect()
    }

    pub fn w_vectors(&self) -> Vec<&Vector> {
        self.pairs.iter().map(|(_, w)| w).collect()
    }
}

/// A linear subspace of `M_{m,n}` given by a linearly independent basis.
#[derive(Clone, Debug)]
pub struct MatrixSpace {
    m: usize,
    n: usize,
    basis: Vec<Mat>,
    flat: Subspace,
}

impl PartialEq for MatrixSpace {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.n == other.n && self.flat == other.flat
    }
}

impl Eq for MatrixSpace {}

impl MatrixSpace {
    /// Space spanned by `mats` (each `m × n`); dependent generators are dropped.
    pub fn from_spanning(m: usize, n: usize, mats: impl IntoIterator<Item = Mat>) -> Result<Self> {
        let mut ech = Echelon::new(m * n);
        let mut basis = Vec::new();
        for a in mats {
            if a.rows() != m || a.cols() != n {
                return Err(Error::Dimension(format!(
                    "generator is {}x{}, expected {m}x{n}",
                    a.rows(),
                    a.cols()
                )));
            }
            if ech.try_push(&a.flatten()) {
                basis.push(a);
            }
        }
        let flat = Subspace::span(m * n, basis.iter().map(Mat::flatten).collect::<Vec<_>>().iter());
        Ok(MatrixSpace { m, n, basis, flat })
    }

    pub fn zero(m: usize, n: usize) -> Self {
        MatrixSpace {
            m,
            n,
            basis: Vec::new(),
            flat: Subspace::zero(m * n),
        }
    }

    /// Number of rows of the member matrices.
    pub fn rows(&self) -> usize {
        self.m
    }

    /// Number of columns of the member matrices.
    pub fn cols(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Mat] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn contains(&self, a: &Mat) -> bool {
        a.rows() == self.m && a.cols() == self.n && self.flat.contains(&a.flatten())
    }

    pub fn contains_space(&self, other: &MatrixSpace) -> bool {
        other.basis.iter().all(|a| self.contains(a))
    }

    /// `Σ c_i B_i`.
    pub fn combination(&self, coeffs: &[crate::linalg::Rational]) -> Mat {
        assert_eq!(coeffs.len(), self.basis.len());
        self.basis
            .iter()
            .zip(coeffs)
            .fold(Mat::zeros(self.m, self.n), |acc, (b, c)| &acc + &b.scale(c))
    }

    /// Span of all products `A·B` with `A ∈ self`, `B ∈ other`.
    pub fn product(&self, other: &MatrixSpace) -> Result<MatrixSpace> {
        if self.n != other.m {
            return Err(Error::Dimension(format!(
                "cannot multiply spaces of {}x{} and {}x{} matrices",
                self.m, self.n, other.m, other.n
            )));
        }
        let prods = self
            .basis
            .iter()
            .flat_map(|a| other.basis.iter().map(move |b| a * b));
        MatrixSpace::from_spanning(self.m, other.n, prods)
    }

    /// `V^k` (span of all k-fold products); `V^0` is the span of the identity.
    pub fn power(&self, k: usize) -> Result<MatrixSpace> {
        if self.m != self.n {
            return Err(Error::Dimension("power of a non-square matrix space".into()));
        }
        let mut acc = MatrixSpace::from_spanning(self.n, self.n, [Mat::identity(self.n)])?;
        for _ in 0..k {
            acc = acc.product(self)?;
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }

    /// `V^n = {0}` for square `V` acting on `F^n`.
    pub fn is_nilpotent(&self) -> bool {
        self.m == self.n && self.power(self.n.max(1)).map(|p| p.is_zero()).unwrap_or(false)
    }

    /// `V² ⊆ V` and `V^n = {0}`.
    pub fn check_nilpotent_algebra(&self) -> Result<()> {
        if self.m != self.n {
            return Err(Error::NotNilpotentAlgebra("space is not square".into()));
        }
        let sq = self.product(self)?;
        if !self.contains_space(&sq) {
            return Err(Error::NotNilpotentAlgebra("V·V is not contained in V".into()));
        }
        if !self.is_nilpotent() {
            return Err(Error::NotNilpotentAlgebra("V^n is nonzero".into()));
        }
        Ok(())
    }

    /// If every basis element has rank one, the pairs `(v, w)` with `B = w v^T`.
    pub fn rank_one_generators(&self) -> Option<Relation> {
        let mut pairs = Vec::with_capacity(self.basis.len());
        for b in &self.basis {
            if b.rank() != 1 {
                return None;
            }
            let (i, j) = (0..b.rows())
                .flat_map(|i| (0..b.cols()).map(move |j| (i, j)))
                .find(|&(i, j)| !num_traits::Zero::is_zero(b.get(i, j)))?;
            let w = b.column(j);
            let v = b.row(i).scale(&b.get(i, j).recip());
            pairs.push((v, w));
        }
        Relation::new(self.n, self.m, pairs).ok()
    }
}

/// `V_R = span{w v^T : (v, w) ∈ R}`, with a basis drawn from the pairs in order.
pub fn to_matrix_space(r: &Relation) -> MatrixSpace {
    MatrixSpace::from_spanning(
        r.m,
        r.n,
        r.reduced_indices().into_iter().map(|i| r.rank_one(i)),
    )
    .expect("pair dimensions are validated at construction")
}

/// Sub-list of at most `n·m` pairs spanning the same `V_R`.
pub fn reduce_relation(r: &Relation) -> Relation {
    r.subrelation(&r.reduced_indices())
}

/// `span N(S)`: the span of every `w` whose partner `v` is not orthogonal to some `u ∈ S`.
pub fn neighborhood_span(r: &Relation, s: &[Vector]) -> Result<Subspace> {
    if let Some(u) = s.iter().find(|u| u.dim() != r.n) {
        return Err(Error::Dimension(format!(
            "vector of dimension {} in a set for F^{}",
            u.dim(),
            r.n
        )));
    }
    let ws: Vec<&Vector> = r
        .pairs
        .iter()
        .filter(|(v, _)| s.iter().any(|u| !u.is_orthogonal(v)))
        .map(|(_, w)| w)
        .collect();
    Ok(Subspace::span(r.m, ws))
}

/// `V[E] = span{A e : A ∈ V, e ∈ E}`.
pub fn apply_space(space: &MatrixSpace, e: &Subspace) -> Result<Subspace> {
    if e.ambient() != space.n {
        return Err(Error::Dimension(format!(
            "subspace of F^{} applied to {}x{} matrices",
            e.ambient(),
            space.m,
            space.n
        )));
    }
    let imgs: Vec<Vector> = space
        .basis
        .iter()
        .flat_map(|a| e.basis().iter().map(move |x| a.apply(x)))
        .collect();
    Ok(Subspace::span(space.m, &imgs))
}

/// A random integer combination of the basis of `space`.
pub fn sample_element(space: &MatrixSpace, s: &mut GenericSampler) -> Mat {
    let c = s.coeffs(space.dim());
    space.combination(&c)
}
