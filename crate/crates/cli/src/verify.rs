//! Certificate checks written directly against the linear algebra layer, so
//! that a certificate is never accepted only on the word of the code that
//! produced it.

use linminmax::linalg::{rank_of, Mat, Subspace, Vector};
use linminmax::relation::{MatrixSpace, Relation};

fn image(space: &MatrixSpace, e: &Subspace) -> Subspace {
    let vs: Vec<Vector> = space
        .basis()
        .iter()
        .flat_map(|b| e.basis().iter().map(move |x| b.apply(x)))
        .collect();
    Subspace::span(space.rows(), &vs)
}

pub fn is_basis(n: usize, vs: &[Vector]) -> bool {
    vs.len() == n && vs.iter().all(|v| v.dim() == n) && rank_of(n, &vs.iter().collect::<Vec<_>>()) == n
}

pub fn independent(dim: usize, vs: &[&Vector]) -> bool {
    rank_of(dim, vs) == vs.len()
}

pub fn matching(r: &Relation, idx: &[usize]) -> bool {
    let mut seen = idx.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len() == idx.len()
        && idx.iter().all(|&i| i < r.len())
        && independent(r.n(), &idx.iter().map(|&i| &r.pair(i).0).collect::<Vec<_>>())
        && independent(r.m(), &idx.iter().map(|&i| &r.pair(i).1).collect::<Vec<_>>())
}

pub fn cover(r: &Relation, e: &Subspace, f: &Subspace) -> bool {
    r.pairs().iter().all(|(v, w)| e.contains(v) || f.contains(w))
}

/// `V[E^⊥] ⊆ F`.
pub fn cover_space(v: &MatrixSpace, e: &Subspace, f: &Subspace) -> bool {
    f.contains_subspace(&image(v, &e.orthocomplement()))
}

/// `C^⊥` contains one side of every pair.
pub fn antichain(r: &Relation, c: &Subspace) -> bool {
    let perp = c.orthocomplement();
    r.pairs().iter().all(|(v, w)| perp.contains(v) || perp.contains(w))
}

fn separator_common(e: &Subspace, f: &Subspace, et: &Subspace, ft: &Subspace) -> bool {
    et.contains_subspace(e) && ft.contains_subspace(f) && et.contains_subspace(&ft.orthocomplement())
}

pub fn separator(r: &Relation, e: &Subspace, f: &Subspace, et: &Subspace, ft: &Subspace) -> bool {
    separator_common(e, f, et, ft) && r.pairs().iter().all(|(v, w)| ft.contains(v) || et.contains(w))
}

pub fn separator_space(v: &MatrixSpace, e: &Subspace, f: &Subspace, et: &Subspace, ft: &Subspace) -> bool {
    separator_common(e, f, et, ft) && et.contains_subspace(&image(v, &ft.orthocomplement()))
}

pub fn intersection_dim(a: &Subspace, b: &Subspace) -> usize {
    // Grassmann
    let sum = Subspace::span(a.ambient(), a.basis().iter().chain(b.basis()));
    a.dim() + b.dim() - sum.dim()
}

/// `dim V[E]`.
pub fn image_dim(v: &MatrixSpace, e: &Subspace) -> usize {
    image(v, e).dim()
}

/// `X ∈ V ⊗ M_r`: every `(k, l)` slice `X[i·r+k, j·r+l]` lies in `V`.
pub fn in_blowup(v: &MatrixSpace, r: usize, x: &Mat) -> bool {
    let (m, n) = (v.rows(), v.cols());
    if x.rows() != m * r || x.cols() != n * r {
        return false;
    }
    (0..r * r).all(|kl| {
        let (k, l) = (kl / r, kl % r);
        let slice: Vec<_> = (0..m * n).map(|ij| x.get((ij / n) * r + k, (ij % n) * r + l).clone()).collect();
        v.contains(&Mat::from_vec(m, n, slice))
    })
}
