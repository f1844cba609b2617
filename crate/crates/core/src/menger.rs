//! Linear Menger: separators, coherent path capacity, generic ranks of
//! rank-one perturbations, bi-paths, and the graph and Kőnig reductions.

use crate::certificate::{Budget, CertifiedValue};
use crate::classical::Digraph;
use crate::dilworth::BiPath;
use crate::error::{invariant, Error, Result};
use crate::linalg::{rank_of, Mat, Subspace, Vector};
use crate::matching::max_matching;
use crate::relation::{apply_space, sample_element, to_matrix_space, MatrixSpace, Relation};
use crate::sampler::GenericSampler;
use crate::subsets::{argmin_mask, directions, mask_members};

/// An `(E, F)`-separator `(Ẽ, F̃)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separator {
    pub e_tilde: Subspace,
    pub f_tilde: Subspace,
    pub e: Subspace,
    pub f: Subspace,
}

impl Separator {
    /// `dim(Ẽ ∩ F̃)`.
    pub fn size(&self) -> usize {
        self.e_tilde
            .intersection(&self.f_tilde)
            .map(|s| s.dim())
            .unwrap_or(usize::MAX)
    }

    fn verify_common(&self) -> bool {
        let n = self.e.ambient();
        [&self.e_tilde, &self.f_tilde, &self.f].iter().all(|s| s.ambient() == n)
            && self.e_tilde.contains_subspace(&self.e)
            && self.f_tilde.contains_subspace(&self.f)
            && self.e_tilde.contains_subspace(&self.f_tilde.orthocomplement())
    }

    /// Separator axioms relative to a relation: every pair has `v ∈ F̃` or `w ∈ Ẽ`.
    pub fn verify(&self, r: &Relation) -> bool {
        r.n() == r.m()
            && r.n() == self.e.ambient()
            && self.verify_common()
            && r.pairs()
                .iter()
                .all(|(v, w)| self.f_tilde.contains(v) || self.e_tilde.contains(w))
    }

    /// Separator axioms relative to a matrix space: `V[F̃^⊥] ⊆ Ẽ`.
    pub fn verify_space(&self, space: &MatrixSpace) -> bool {
        space.rows() == self.e.ambient()
            && space.cols() == self.e.ambient()
            && self.verify_common()
            && apply_space(space, &self.f_tilde.orthocomplement())
                .is_ok_and(|img| self.e_tilde.contains_subspace(&img))
    }
}

fn check_instance(r: &Relation, e: &Subspace, f: &Subspace) -> Result<()> {
    if r.n() != r.m() {
        return Err(Error::Dimension(format!("relation on F^{} x F^{} is not square", r.n(), r.m())));
    }
    if e.ambient() != r.n() || f.ambient() != r.n() {
        return Err(Error::Dimension(format!(
            "E in F^{}, F in F^{}, relation on F^{}",
            e.ambient(),
            f.ambient(),
            r.n()
        )));
    }
    Ok(())
}

/// `[[I - A, ι], [π, 0]]` with `ι` the basis matrix of `E` and `π` the
/// transposed basis matrix of `F`.
pub fn bordered_matrix(a: &Mat, e: &Subspace, f: &Subspace) -> Mat {
    let n = a.rows();
    let iota = e.basis_matrix();
    let pi = f.basis_matrix().transpose();
    Mat::block(&(&Mat::identity(n) - a), &iota, &pi, &Mat::zeros(f.dim(), e.dim()))
}

/// Splits `S` (pairs routed through `W_S`) that dominate every other split:
/// either `S = {i : v_i ∉ F + span U}` for a set `U` of `v`-directions, or
/// `S = {i : w_i ∈ E + span U}` for a set of `w`-directions, whichever side has
/// fewer directions.
struct Splits<'a> {
    r: &'a Relation,
    base: Subspace,
    dirs: Vec<Vector>,
    v_side: bool,
}

impl<'a> Splits<'a> {
    fn new(r: &'a Relation, e: &Subspace, f: &Subspace, budget: Budget) -> Result<Self> {
        let vdirs = directions(r.pairs().iter().map(|(v, _)| v));
        let wdirs = directions(r.pairs().iter().map(|(_, w)| w));
        let v_side = vdirs.len() <= wdirs.len();
        let (base, dirs) = if v_side { (f.clone(), vdirs) } else { (e.clone(), wdirs) };
        budget.check(dirs.len())?;
        Ok(Splits { r, base, dirs, v_side })
    }

    fn bits(&self) -> usize {
        self.dirs.len()
    }

    fn split(&self, mask: u64) -> Vec<bool> {
        let members = mask_members(mask, self.dirs.len());
        let extra: Vec<&Vector> = members.iter().map(|&i| &self.dirs[i]).collect();
        let span = self
            .base
            .sum(&Subspace::span(self.base.ambient(), extra))
            .expect("same ambient space");
        self.r
            .pairs()
            .iter()
            .map(|(v, w)| if self.v_side { !span.contains(v) } else { span.contains(w) })
            .collect()
    }
}

/// `C = E + W_S`, `D = F + V_{S^c}`.
fn split_spaces(r: &Relation, e: &Subspace, f: &Subspace, in_s: &[bool]) -> (Subspace, Subspace) {
    let n = r.n();
    let ws: Vec<&Vector> = r.pairs().iter().zip(in_s).filter(|(_, &s)| s).map(|((_, w), _)| w).collect();
    let vs: Vec<&Vector> = r.pairs().iter().zip(in_s).filter(|(_, &s)| !s).map(|((v, _), _)| v).collect();
    let c = e.sum(&Subspace::span(n, ws)).expect("same ambient space");
    let d = f.sum(&Subspace::span(n, vs)).expect("same ambient space");
    (c, d)
}

fn split_size(r: &Relation, e: &Subspace, f: &Subspace, in_s: &[bool]) -> usize {
    let (c, d) = split_spaces(r, e, f, in_s);
    let lost = c.intersection(&d.orthocomplement()).expect("same ambient space").dim();
    c.dim() - lost
}

/// Rank of `[[I, ι, W_S], [π, 0, 0], [V_{S^c}^T, 0, 0]]` minus `n`.
fn split_rank(r: &Relation, e: &Subspace, f: &Subspace, in_s: &[bool]) -> usize {
    let n = r.n();
    let ws: Vec<Vector> = r.pairs().iter().zip(in_s).filter(|(_, &s)| s).map(|((_, w), _)| w.clone()).collect();
    let vs: Vec<Vector> = r.pairs().iter().zip(in_s).filter(|(_, &s)| !s).map(|((v, _), _)| v.clone()).collect();
    let top = Mat::identity(n)
        .hstack(&e.basis_matrix())
        .hstack(&Mat::from_columns(n, &ws));
    let left = f.basis_matrix().transpose().vstack(&Mat::from_row_vectors(n, &vs));
    let right = Mat::zeros(left.rows(), e.dim() + ws.len());
    top.vstack(&left.hstack(&right)).rank() - n
}

/// Minimum `(E, F)`-separator `Ẽ = C + D^⊥`, `F̃ = D` over dominating splits.
pub fn min_separator(r: &Relation, e: &Subspace, f: &Subspace, budget: Budget) -> Result<Separator> {
    check_instance(r, e, f)?;
    let splits = Splits::new(r, e, f, budget)?;
    let (_, best) = argmin_mask(splits.bits(), |mask| split_size(r, e, f, &splits.split(mask)));
    let in_s = splits.split(best);
    let (c, d) = split_spaces(r, e, f, &in_s);
    let sep = Separator {
        e_tilde: c.sum(&d.orthocomplement())?,
        f_tilde: d,
        e: e.clone(),
        f: f.clone(),
    };
    if !sep.verify(r) {
        return Err(invariant("constructed separator fails the separator axioms"));
    }
    if sep.size() != split_size(r, e, f, &in_s) {
        return Err(invariant("separator size differs from dim C - dim(C ∩ D^⊥)"));
    }
    Ok(sep)
}

/// Enforce `rank [[I-A, ι],[π, 0]] = n + rank(π (I-A)^{-1} ι)`; `None` when
/// `I - A` is singular.
pub fn guttman_check(a: &Mat, e: &Subspace, f: &Subspace) -> Result<Option<usize>> {
    let n = a.rows();
    let Some(inv) = (&Mat::identity(n) - a).inverse() else {
        return Ok(None);
    };
    let full = bordered_matrix(a, e, f).rank();
    let schur = &(&f.basis_matrix().transpose() * &inv) * &e.basis_matrix();
    if full != n + schur.rank() {
        return Err(invariant("Guttman rank additivity fails"));
    }
    Ok(Some(full - n))
}

/// Coherent path capacity.
///
/// The value is the exact minimum of the bordered subset-rank formula; a
/// sampled `A ∈ V_R` attaining it is the primal certificate and a minimum
/// separator of equal size is the dual.
pub fn cpc(
    r: &Relation,
    e: &Subspace,
    f: &Subspace,
    s: &mut GenericSampler,
    budget: Budget,
) -> Result<CertifiedValue<Mat, Separator>> {
    check_instance(r, e, f)?;
    let splits = Splits::new(r, e, f, budget)?;
    let (value, _) = argmin_mask(splits.bits(), |mask| split_rank(r, e, f, &splits.split(mask)));
    if r.len() <= 12 {
        let (literal, _) = argmin_mask(r.len(), |mask| {
            let in_s: Vec<bool> = (0..r.len()).map(|i| mask >> i & 1 == 1).collect();
            split_rank(r, e, f, &in_s)
        });
        if literal != value {
            return Err(invariant("reduced split enumeration disagrees with the full one"));
        }
    }
    let sep = min_separator(r, e, f, budget)?;
    if sep.size() != value {
        return Err(invariant(format!(
            "capacity {value} differs from minimum separator size {}",
            sep.size()
        )));
    }

    let space = to_matrix_space(r);
    let mut best = 0;
    for _ in 0..s.trials() {
        let a = sample_element(&space, s);
        let Some(k) = guttman_check(&a, e, f)? else {
            continue;
        };
        if k > value {
            return Err(invariant("sampled rank exceeds the separator bound"));
        }
        if k == value {
            return Ok(CertifiedValue::proved(value, a, sep));
        }
        best = best.max(k);
    }
    Err(Error::LowerBound {
        target: value,
        best,
        trials: s.trials(),
    })
}

/// Generic rank of `A + x w v^T`: `min(rank [A | w], rank [A ; v^T])`.
pub fn generic_rank_rank_one_update(a: &Mat, v: &Vector, w: &Vector) -> Result<usize> {
    if v.dim() != a.cols() || w.dim() != a.rows() {
        return Err(Error::Dimension(format!(
            "v in F^{}, w in F^{} for a {}x{} matrix",
            v.dim(),
            w.dim(),
            a.rows(),
            a.cols()
        )));
    }
    let aw = a.hstack(&Mat::from_columns(a.rows(), std::slice::from_ref(w)));
    let av = a.vstack(&Mat::from_row_vectors(a.cols(), std::slice::from_ref(v)));
    Ok(aw.rank().min(av.rank()))
}

/// Generic rank of `A + Σ x_i w_i v_i^T`: the minimum over `S` of
/// `rank [[A, W_S], [V_{S^c}^T, 0]]`.
pub fn generic_rank_sum(a: &Mat, pairs: &[(Vector, Vector)], budget: Budget) -> Result<usize> {
    budget.check(pairs.len())?;
    if let Some((v, w)) = pairs.iter().find(|(v, w)| v.dim() != a.cols() || w.dim() != a.rows()) {
        return Err(Error::Dimension(format!(
            "pair in F^{} x F^{} for a {}x{} matrix",
            v.dim(),
            w.dim(),
            a.rows(),
            a.cols()
        )));
    }
    let (value, _) = argmin_mask(pairs.len(), |mask| {
        let ws: Vec<Vector> = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i].1.clone()).collect();
        let vs: Vec<Vector> = (0..pairs.len()).filter(|&i| mask >> i & 1 == 0).map(|i| pairs[i].0.clone()).collect();
        let top = a.hstack(&Mat::from_columns(a.rows(), &ws));
        let bottom = Mat::from_row_vectors(a.cols(), &vs).hstack(&Mat::zeros(vs.len(), ws.len()));
        top.vstack(&bottom).rank()
    });
    Ok(value)
}

/// Each bi-path starts in `E`, ends in `F`, and uses literal pairs of `R`;
/// all `v`'s together and all `w`'s together are linearly independent.
pub fn independent_bipaths_check(r: &Relation, e: &Subspace, f: &Subspace, paths: &[BiPath]) -> bool {
    if check_instance(r, e, f).is_err() {
        return false;
    }
    let ok = paths.iter().all(|p| {
        p.verify(r) && e.contains(&p.ws[0]) && f.contains(p.vs.last().expect("nonempty bi-path"))
    });
    if !ok {
        return false;
    }
    let vs: Vec<&Vector> = paths.iter().flat_map(|p| p.vs.iter()).collect();
    let ws: Vec<&Vector> = paths.iter().flat_map(|p| p.ws.iter()).collect();
    rank_of(r.n(), &vs) == vs.len() && rank_of(r.n(), &ws) == ws.len()
}

/// Standard-basis encoding of a digraph: `(e_i, e_j)` per edge `g_i → g_j`,
/// plus `(e_i, e_i)` at every vertex when `with_loops` is set.
pub fn graph_instance(
    g: &Digraph,
    h: &[usize],
    k: &[usize],
    with_loops: bool,
) -> Result<(Relation, Subspace, Subspace)> {
    let n = g.size;
    if h.iter().chain(k).any(|&x| x >= n) {
        return Err(Error::InvalidArgument("terminal vertex out of range".into()));
    }
    let mut idx: Vec<(usize, usize)> = g.edges.clone();
    if with_loops {
        idx.extend((0..n).map(|i| (i, i)));
    }
    let r = Relation::from_index_pairs(n, n, &idx);
    Ok((r, Subspace::coordinate(n, h), Subspace::coordinate(n, k)))
}

/// Linear Kőnig through linear Menger: `R' = {(v ⊕ 0, 0 ⊕ w)}` between
/// `F^n ⊕ 0` and `0 ⊕ F^m`. The capacity must equal the maximum matching.
pub fn konig_via_menger(
    r: &Relation,
    s: &mut GenericSampler,
    budget: Budget,
) -> Result<CertifiedValue<Mat, Separator>> {
    let (n, m) = (r.n(), r.m());
    let t = n + m;
    let pairs: Vec<(Vector, Vector)> = r
        .pairs()
        .iter()
        .map(|(v, w)| (v.embed(0, t), w.embed(n, t)))
        .collect();
    let lifted = Relation::new(t, t, pairs)?;
    let e = Subspace::coordinate(t, &(0..n).collect::<Vec<_>>());
    let f = Subspace::coordinate(t, &(n..t).collect::<Vec<_>>());
    let out = cpc(&lifted, &e, &f, s, budget)?;

    // the primal lives in the lower-left block
    let a = &out.primal;
    let block: Vec<Vec<_>> = (n..t).map(|i| (0..n).map(|j| a.get(i, j).clone()).collect()).collect();
    let a_low = if m == 0 || n == 0 { Mat::zeros(m, n) } else { Mat::from_rows(block) };
    if bordered_matrix(a, &e, &f).rank() != t + a_low.rank() {
        return Err(invariant("bordered rank differs from rank(A) + n + m"));
    }
    let mm = max_matching(r, budget)?;
    if mm.value != out.value {
        return Err(invariant(format!(
            "capacity {} differs from maximum matching {}",
            out.value, mm.value
        )));
    }
    Ok(out)
}
