//! Noncommutative rank through blow-ups `V ⊗ M_r`, with shrunk-subspace
//! certificates, and the matrix Kőnig, Dilworth and Menger theorems.

pub mod witness;

use crate::certificate::{Budget, CertifiedValue, DefectCertificate, Status};
use crate::dilworth::CoherentDecomposition;
use crate::error::{invariant, Error, Result};
use crate::linalg::{Mat, Subspace};
use crate::matching::{min_cover, Cover};
use crate::menger::{min_separator, Separator};
use crate::relation::{apply_space, sample_element, MatrixSpace};
use crate::sampler::GenericSampler;

/// Largest side `max(m, n)·r` of a blow-up that will be sampled.
pub const MAX_BLOWUP_DIM: usize = 48;

/// `V ⊗ M_r` with basis `B ⊗ E_kl`.
#[derive(Clone, Debug)]
pub struct BlowUp {
    pub base: MatrixSpace,
    pub r: usize,
    pub basis: Vec<Mat>,
}

impl BlowUp {
    pub fn space(&self) -> MatrixSpace {
        MatrixSpace::from_spanning(self.base.rows() * self.r, self.base.cols() * self.r, self.basis.clone())
            .expect("Kronecker products have the blown-up shape")
    }
}

fn unit_matrix(r: usize, k: usize, l: usize) -> Mat {
    let mut e = Mat::zeros(r, r);
    e.set(k, l, crate::linalg::q(1));
    e
}

pub fn blow_up(v: &MatrixSpace, r: usize) -> Result<BlowUp> {
    if r == 0 {
        return Err(Error::InvalidArgument("blow-up order must be at least 1".into()));
    }
    let basis = v
        .basis()
        .iter()
        .flat_map(|b| (0..r * r).map(move |kl| b.kron(&unit_matrix(r, kl / r, kl % r))))
        .collect();
    Ok(BlowUp {
        base: v.clone(),
        r,
        basis,
    })
}

/// `Σ_b B_b ⊗ C_b` with random `r × r` matrices `C_b`.
pub fn sample_blowup_element(v: &MatrixSpace, r: usize, s: &mut GenericSampler) -> Mat {
    let mut acc = Mat::zeros(v.rows() * r, v.cols() * r);
    for b in v.basis() {
        let c = Mat::from_vec(r, r, s.coeffs(r * r));
        acc = &acc + &b.kron(&c);
    }
    acc
}

/// `r` used for noncommutative rank: `max(1, n - 1)`.
pub fn default_order(n: usize) -> usize {
    n.saturating_sub(1).max(1)
}

fn check_blowup_size(v: &MatrixSpace, r: usize) -> Result<()> {
    let side = v.rows().max(v.cols()) * r;
    if side > MAX_BLOWUP_DIM {
        return Err(Error::Budget {
            needed: side,
            limit: MAX_BLOWUP_DIM,
        });
    }
    Ok(())
}

/// Largest rank among sampled elements of `V ⊗ M_r`, stopping early at
/// `ceiling`. The maximum must be divisible by `r`.
pub fn max_rank_blowup(
    v: &MatrixSpace,
    r: usize,
    s: &mut GenericSampler,
    ceiling: Option<usize>,
) -> Result<(usize, Mat)> {
    if r == 0 {
        return Err(Error::InvalidArgument("blow-up order must be at least 1".into()));
    }
    check_blowup_size(v, r)?;
    let cap = ceiling.unwrap_or(usize::MAX).min(r * v.rows().min(v.cols()));
    let mut best = (0, Mat::zeros(v.rows() * r, v.cols() * r));
    for _ in 0..s.trials() {
        let a = sample_blowup_element(v, r, s);
        let rk = a.rank();
        if rk > best.0 || best.0 == 0 {
            best = (rk, a);
        }
        if best.0 >= cap {
            break;
        }
    }
    if best.0 % r != 0 {
        return Err(invariant(format!("blow-up rank {} is not divisible by r = {r}", best.0)));
    }
    Ok(best)
}

/// Best available upper-bound certificate: exact via a minimum cover when `V`
/// has a rank-one basis, otherwise from the witness search.
fn defect_certificate(v: &MatrixSpace, s: &mut GenericSampler, hints: &[(Mat, usize)]) -> Result<DefectCertificate> {
    if let Some(rel) = v.rank_one_generators() {
        if let Ok(cover) = min_cover(&rel, Budget::default()) {
            let cert = DefectCertificate::new(v, cover.e.orthocomplement())?;
            if cert.defect() + cover.size() != v.cols() {
                return Err(invariant("cover complement has the wrong defect"));
            }
            return Ok(cert);
        }
    }
    witness::best_defect(v, s, hints)
}

/// Noncommutative rank at `r = max(1, n - 1)`.
///
/// The primal is an element of `V ⊗ M_r` of rank `r·value` (an `A ⊗ I_r` when
/// a commutative sample already suffices); the dual is a subspace of defect
/// `n - value`. If they fail to meet the status is `LowerBoundOnly` and the
/// value is the primal bound.
pub fn ncrank(v: &MatrixSpace, s: &mut GenericSampler) -> Result<CertifiedValue<Mat, DefectCertificate>> {
    let n = v.cols();
    let r = default_order(n);
    let mut dual = defect_certificate(v, s, &[])?;
    let upper = n - dual.defect();

    let mut best = 0;
    for _ in 0..s.trials() {
        let a = sample_element(v, s);
        let rk = a.rank();
        if rk > upper {
            return Err(invariant(format!("rank {rk} exceeds the defect bound {upper}")));
        }
        if rk == upper {
            return Ok(CertifiedValue::proved(upper, a.kron(&Mat::identity(r)), dual));
        }
        best = best.max(rk);
    }
    let (rk, a) = max_rank_blowup(v, r, s, Some(r * upper))?;
    if rk > r * upper {
        return Err(invariant(format!("blow-up rank {rk} exceeds r times the bound {upper}")));
    }
    if rk == r * upper {
        return Ok(CertifiedValue::proved(upper, a, dual));
    }
    let lower = (rk / r).max(best);
    let refined = witness::best_defect(v, s, &[(a.clone(), r)])?;
    if refined.defect() > dual.defect() {
        dual = refined;
    }
    let status = if n - dual.defect() == lower {
        Status::Proved
    } else {
        Status::LowerBoundOnly
    };
    Ok(CertifiedValue {
        value: lower,
        primal: a,
        dual,
        status,
    })
}

/// Outcome of the matrix marriage test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FullRankOutcome {
    /// An element of `V ⊗ M_r` of rank `rn`.
    Full(Mat),
    /// A subspace `E` with `dim V[E] < dim E`.
    Shrunk(DefectCertificate),
}

pub fn has_full_ncrank(v: &MatrixSpace, s: &mut GenericSampler) -> Result<FullRankOutcome> {
    if v.rows() != v.cols() {
        return Err(Error::Dimension(format!("{}x{} space is not square", v.rows(), v.cols())));
    }
    let n = v.cols();
    let nc = ncrank(v, s)?;
    if nc.dual.is_shrunk() {
        return Ok(FullRankOutcome::Shrunk(nc.dual));
    }
    if nc.value == n {
        return Ok(FullRankOutcome::Full(nc.primal));
    }
    Err(Error::Inconclusive {
        lower: nc.value,
        upper: n,
    })
}

/// Cover `(X^⊥, V[X])` from the ncrank dual; proved when its size equals the
/// noncommutative rank.
pub fn matrix_min_cover(v: &MatrixSpace, s: &mut GenericSampler) -> Result<CertifiedValue<Mat, Cover>> {
    let nc = ncrank(v, s)?;
    let x = &nc.dual.e;
    let cover = Cover {
        e: x.orthocomplement(),
        f: apply_space(v, x)?,
    };
    if !cover.verify_space(v) {
        return Err(invariant("cover from a defect certificate fails V[E^⊥] ⊆ F"));
    }
    let status = if cover.size() == nc.value && nc.is_proved() {
        Status::Proved
    } else {
        Status::LowerBoundOnly
    };
    Ok(CertifiedValue {
        value: cover.size(),
        primal: nc.primal,
        dual: cover,
        status,
    })
}

/// `V[C] ⊆ C^⊥`.
pub fn is_matrix_antichain(v: &MatrixSpace, c: &Subspace) -> bool {
    apply_space(v, c).is_ok_and(|img| c.orthocomplement().contains_subspace(&img))
}

/// Antichain `(E + F)^⊥` from a minimum cover `(E, F)` of a nilpotent algebra;
/// its dimension is `n` minus the cover size when the cover is proved minimal.
pub fn matrix_antichain(v: &MatrixSpace, s: &mut GenericSampler) -> Result<CertifiedValue<Subspace, Cover>> {
    v.check_nilpotent_algebra()?;
    let n = v.cols();
    let mc = matrix_min_cover(v, s)?;
    let c = mc.dual.e.sum(&mc.dual.f)?.orthocomplement();
    if !is_matrix_antichain(v, &c) {
        return Err(invariant("complement of a cover is not an antichain"));
    }
    if mc.is_proved() && c.dim() + mc.value != n {
        return Err(invariant("antichain and minimum cover do not add up to n"));
    }
    Ok(CertifiedValue {
        value: c.dim(),
        primal: c,
        dual: mc.dual,
        status: mc.status,
    })
}

/// Jordan chains of a maximum-rank element of `V ⊗ M_r`; minimal when its rank
/// is `r` times the size of a cover.
pub fn matrix_coherent_decomposition(
    v: &MatrixSpace,
    r: usize,
    s: &mut GenericSampler,
) -> Result<CertifiedValue<CoherentDecomposition, Cover>> {
    v.check_nilpotent_algebra()?;
    if r == 0 {
        return Err(Error::InvalidArgument("blow-up order must be at least 1".into()));
    }
    let n = v.cols();
    let mc = matrix_min_cover(v, s)?;
    let target = r * mc.value;

    let mut found = None;
    let mut best = 0;
    for _ in 0..s.trials() {
        let a = sample_element(v, s);
        let rk = a.rank();
        best = best.max(r * rk);
        if r * rk == target {
            found = Some(a.kron(&Mat::identity(r)));
            break;
        }
    }
    if found.is_none() {
        let (rk, a) = max_rank_blowup(v, r, s, Some(target))?;
        best = best.max(rk);
        if rk == target {
            found = Some(a);
        }
    }
    let a = found.ok_or(Error::LowerBound {
        target,
        best,
        trials: s.trials(),
    })?;
    let d = CoherentDecomposition::from_matrix(a)?;
    let space = blow_up(v, r)?.space();
    if !d.verify(&space) || d.size() != r * n - target {
        return Err(invariant("blown-up coherent decomposition failed verification"));
    }
    Ok(CertifiedValue::proved(d.size(), d, mc.dual))
}

/// The space `W` of maps `F^n ⊕ E → F^n ⊕ F` spanned by `[[I, ι], [π, 0]]` and
/// `[[A, 0], [0, 0]]`, `A ∈ V`.
pub fn mpc_space(v: &MatrixSpace, e: &Subspace, f: &Subspace) -> Result<MatrixSpace> {
    let n = v.cols();
    if v.rows() != n || e.ambient() != n || f.ambient() != n {
        return Err(Error::Dimension("V must be square and E, F must live in its space".into()));
    }
    let (de, df) = (e.dim(), f.dim());
    let j = Mat::block(
        &Mat::identity(n),
        &e.basis_matrix(),
        &f.basis_matrix().transpose(),
        &Mat::zeros(df, de),
    );
    let gens = std::iter::once(j).chain(
        v.basis()
            .iter()
            .map(|a| Mat::block(a, &Mat::zeros(n, de), &Mat::zeros(df, n), &Mat::zeros(df, de))),
    );
    MatrixSpace::from_spanning(n + df, n + de, gens)
}

/// Separator `Ẽ = C_1 + E + V[C_1]`, `F̃ = C_1^⊥` for `C_1 ⊆ F^⊥`.
pub fn separator_from_core(v: &MatrixSpace, e: &Subspace, f: &Subspace, c1: &Subspace) -> Result<Separator> {
    let e_tilde = c1.sum(e)?.sum(&apply_space(v, c1)?)?;
    Ok(Separator {
        e_tilde,
        f_tilde: c1.orthocomplement(),
        e: e.clone(),
        f: f.clone(),
    })
}

fn mpc_separator(v: &MatrixSpace, e: &Subspace, f: &Subspace, w: &MatrixSpace, s: &mut GenericSampler) -> Result<Separator> {
    if let Some(rel) = v.rank_one_generators() {
        if rel.n() == rel.m() {
            if let Ok(sep) = min_separator(&rel, e, f, Budget::default()) {
                return Ok(sep);
            }
        }
    }
    let n = v.cols();
    let f_perp = f.orthocomplement();
    let mut cores = vec![Subspace::zero(n), f_perp.clone()];
    let x = witness::best_defect(w, s, &[])?;
    // first-block projection of X
    let proj = Mat::identity(n).hstack(&Mat::zeros(n, e.dim()));
    cores.push(x.e.image_under(&proj)?.intersection(&f_perp)?);
    let pool = witness::best_defect(v, s, &[])?;
    cores.push(pool.e.intersection(&f_perp)?);
    for _ in 0..s.trials().min(8) {
        let a = sample_element(v, s);
        cores.push(a.kernel().intersection(&f_perp)?);
        cores.push(witness::wong_limit(v, &a)?.1.intersection(&f_perp)?);
    }
    let mut best: Option<Separator> = None;
    for c1 in &cores {
        let sep = separator_from_core(v, e, f, c1)?;
        if best.as_ref().is_none_or(|b| sep.size() < b.size()) {
            best = Some(sep);
        }
    }
    Ok(best.expect("at least two cores"))
}

/// Matricial path capacity `ncrank(W) - n` with a separator as dual.
pub fn mpc(
    v: &MatrixSpace,
    e: &Subspace,
    f: &Subspace,
    s: &mut GenericSampler,
) -> Result<CertifiedValue<Mat, Separator>> {
    let n = v.cols();
    let w = mpc_space(v, e, f)?;
    let sep = mpc_separator(v, e, f, &w, s)?;
    if !sep.verify_space(v) {
        return Err(invariant("separator fails V[F̃^⊥] ⊆ Ẽ"));
    }
    let upper = sep.size();
    let r = default_order(w.cols());

    let mut best = 0;
    for _ in 0..s.trials() {
        let x = sample_element(&w, s);
        let k = x.rank().saturating_sub(n);
        if k > upper {
            return Err(invariant(format!("capacity sample {k} exceeds separator size {upper}")));
        }
        if k == upper {
            return Ok(CertifiedValue::proved(upper, x.kron(&Mat::identity(r)), sep));
        }
        best = best.max(k);
    }
    let (rk, x) = match max_rank_blowup(&w, r, s, Some(r * (n + upper))) {
        Ok(found) => found,
        Err(Error::Budget { .. }) => {
            let x = sample_element(&w, s);
            let rk = r * x.rank();
            (rk, x.kron(&Mat::identity(r)))
        }
        Err(err) => return Err(err),
    };
    let lower = (rk / r).saturating_sub(n).max(best);
    if lower > upper {
        return Err(invariant("blow-up capacity exceeds separator size"));
    }
    Ok(CertifiedValue {
        value: lower,
        primal: x,
        dual: sep,
        status: if lower == upper { Status::Proved } else { Status::LowerBoundOnly },
    })
}

/// `(V ⊗ M_r)^k` vanishes whenever `V^k` does; checked for `k ≤ n`.
pub fn blowup_is_nilpotent_algebra(v: &MatrixSpace, r: usize) -> Result<bool> {
    let b = blow_up(v, r)?.space();
    Ok(b.check_nilpotent_algebra().is_ok())
}
