//! Search for subspaces `E` with large defect `dim E - dim V[E]`.
//!
//! This only generates certificates; nothing here claims the maximum was
//! found. Defect is supermodular, so maximizers are closed under sums and
//! intersections, which is why the pool is closed under both.

use crate::certificate::DefectCertificate;
use crate::error::Result;
use crate::linalg::{Mat, Subspace, Vector};
use crate::relation::{apply_space, sample_element, MatrixSpace};
use crate::sampler::GenericSampler;

const MAX_COORDINATE_DIM: usize = 8;
const CLOSURE_WIDTH: usize = 10;

/// `{x : A x ∈ W}`.
pub fn preimage(a: &Mat, w: &Subspace) -> Subspace {
    let perp = w.orthocomplement();
    if perp.is_zero() {
        return Subspace::full(a.cols());
    }
    let q = Mat::from_row_vectors(a.rows(), perp.basis());
    (&q * a).kernel()
}

/// Limit of `W_0 = 0`, `W_{i+1} = V[A^{-1}(W_i)]`, and the preimage `A^{-1}(W*)`.
///
/// When `W* ⊆ im A` the preimage has defect exactly `dim ker A`.
pub fn wong_limit(space: &MatrixSpace, a: &Mat) -> Result<(Subspace, Subspace)> {
    let mut w = Subspace::zero(space.rows());
    loop {
        let pre = preimage(a, &w);
        let next = apply_space(space, &pre)?;
        if next == w {
            return Ok((w, pre));
        }
        w = next;
    }
}

/// Column slices of vectors in `F^n ⊗ F^r` (index `j·r + l`), spanned in `F^n`.
pub fn slice_span(u: &Subspace, n: usize, r: usize) -> Subspace {
    let slices: Vec<Vector> = u
        .basis()
        .iter()
        .flat_map(|x| {
            (0..r).map(move |l| Vector::new((0..n).map(|j| x[j * r + l].clone()).collect()))
        })
        .collect();
    Subspace::span(n, &slices)
}

/// `{x ∈ F^n : x ⊗ F^r ⊆ U}`.
pub fn slice_core(u: &Subspace, n: usize, r: usize) -> Result<Subspace> {
    let mut core = Subspace::full(n);
    for l in 0..r {
        // x ↦ x ⊗ e_l
        let mut emb = Mat::zeros(n * r, n);
        for j in 0..n {
            emb.set(j * r + l, j, crate::linalg::q(1));
        }
        core = core.intersection(&preimage(&emb, u))?;
    }
    Ok(core)
}

/// `V ⊗ M_r` applied to `U ⊆ F^{nr}`: `V[slices(U)] ⊗ F^r`, returned as the slice space.
fn blowup_apply(space: &MatrixSpace, u: &Subspace, r: usize) -> Result<Subspace> {
    apply_space(space, &slice_span(u, space.cols(), r))
}

/// Wong iteration for an element `A` of `V ⊗ M_r`, brought down to `F^n`.
fn blowup_candidates(space: &MatrixSpace, a: &Mat, r: usize) -> Result<Vec<Subspace>> {
    let (m, n) = (space.rows(), space.cols());
    let lift = |s: &Subspace| -> Subspace {
        let vs: Vec<Vector> = s
            .basis()
            .iter()
            .flat_map(|x| (0..r).map(move |l| tensor_unit(x, l, r)))
            .collect();
        Subspace::span(s.ambient() * r, &vs)
    };
    let mut w = Subspace::zero(m * r);
    let pre = loop {
        let pre = preimage(a, &w);
        let next = lift(&blowup_apply(space, &pre, r)?);
        if next == w {
            break pre;
        }
        w = next;
    };
    Ok(vec![slice_span(&pre, n, r), slice_core(&pre, n, r)?, slice_core(&a.kernel(), n, r)?])
}

fn tensor_unit(x: &Vector, l: usize, r: usize) -> Vector {
    let mut out = vec![crate::linalg::q(0); x.dim() * r];
    for (j, xj) in x.entries().iter().enumerate() {
        out[j * r + l] = xj.clone();
    }
    Vector::new(out)
}

/// Best defect certificate over the candidate pool. `hints` are elements of
/// blow-ups `V ⊗ M_r` (with their `r`) whose Wong limits are also tried.
pub fn best_defect(
    space: &MatrixSpace,
    s: &mut GenericSampler,
    hints: &[(Mat, usize)],
) -> Result<DefectCertificate> {
    let n = space.cols();
    let mut pool: Vec<Subspace> = vec![Subspace::zero(n), Subspace::full(n)];
    if n <= MAX_COORDINATE_DIM {
        for mask in 1u32..(1 << n) - 1 {
            let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            pool.push(Subspace::coordinate(n, &idx));
        }
    }
    for _ in 0..s.trials().min(8) {
        let a = sample_element(space, s);
        pool.push(a.kernel());
        pool.push(wong_limit(space, &a)?.1);
    }
    for (a, r) in hints {
        pool.extend(blowup_candidates(space, a, *r)?);
    }

    let mut scored = score(space, pool)?;
    for _ in 0..2 {
        let top: Vec<Subspace> = scored.iter().take(CLOSURE_WIDTH).map(|c| c.e.clone()).collect();
        let mut more = Vec::new();
        for i in 0..top.len() {
            for j in i + 1..top.len() {
                more.push(top[i].sum(&top[j])?);
                more.push(top[i].intersection(&top[j])?);
            }
        }
        more.extend(top);
        let extra = score(space, more)?;
        scored.extend(extra);
        scored.sort_by_key(|c| (std::cmp::Reverse(c.defect()), c.e.dim()));
        scored.dedup_by(|a, b| a.e == b.e);
    }
    Ok(scored.swap_remove(0))
}

fn score(space: &MatrixSpace, pool: Vec<Subspace>) -> Result<Vec<DefectCertificate>> {
    let mut out = pool
        .into_iter()
        .map(|e| DefectCertificate::new(space, e))
        .collect::<Result<Vec<_>>>()?;
    out.sort_by_key(|c| (std::cmp::Reverse(c.defect()), c.e.dim()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    #[test]
    fn finds_shrunk_coordinate_subspace() {
        let mut e11 = Mat::zeros(2, 2);
        e11.set(0, 0, q(1));
        let space = MatrixSpace::from_spanning(2, 2, [e11]).unwrap();
        let c = best_defect(&space, &mut GenericSampler::with_seed(1), &[]).unwrap();
        assert_eq!(c.defect(), 1);
        assert!(c.verify(&space));
    }

    #[test]
    fn slices_of_a_tensor() {
        let x = Vector::from_ints(&[1, 2]);
        let u = Subspace::span(4, &[tensor_unit(&x, 0, 2), tensor_unit(&x, 1, 2)]);
        assert_eq!(slice_span(&u, 2, 2), Subspace::span(2, [&x]));
        assert_eq!(slice_core(&u, 2, 2).unwrap(), Subspace::span(2, [&x]));
    }
}
