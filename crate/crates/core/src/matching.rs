//! Linear Hall and Kőnig: matchings, covers, saturated matchings with
//! shrunk-subspace witnesses, defect matchings, Rado transversals and the
//! maximum rank of a rank-one generated space.

use crate::certificate::{Budget, CertifiedValue, DefectCertificate};
use crate::error::{invariant, Error, Result};
use crate::linalg::{rank_of, Echelon, Mat, Subspace, Vector};
use crate::relation::{apply_space, neighborhood_span, to_matrix_space, MatrixSpace, Relation};
use crate::sampler::GenericSampler;
use crate::subsets::{argmin_mask, directions, mask_members};

/// Pair indices whose `v`'s are independent and whose `w`'s are independent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub indices: Vec<usize>,
}

impl Matching {
    pub fn new(indices: Vec<usize>) -> Self {
        Matching { indices }
    }

    pub fn size(&self) -> usize {
        self.indices.len()
    }

    /// `Σ w_i v_i^T` over the matched pairs.
    pub fn matrix(&self, r: &Relation) -> Mat {
        self.indices
            .iter()
            .fold(Mat::zeros(r.m(), r.n()), |acc, &i| &acc + &r.rank_one(i))
    }

    pub fn verify(&self, r: &Relation) -> bool {
        let mut seen = self.indices.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != self.indices.len() || seen.last().is_some_and(|&i| i >= r.len()) {
            return false;
        }
        let vs: Vec<&Vector> = self.indices.iter().map(|&i| &r.pair(i).0).collect();
        let ws: Vec<&Vector> = self.indices.iter().map(|&i| &r.pair(i).1).collect();
        rank_of(r.n(), &vs) == vs.len() && rank_of(r.m(), &ws) == ws.len()
    }
}

/// `(E, F)` with `v ∈ E` or `w ∈ F` for every pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    pub e: Subspace,
    pub f: Subspace,
}

impl Cover {
    pub fn size(&self) -> usize {
        self.e.dim() + self.f.dim()
    }

    pub fn verify(&self, r: &Relation) -> bool {
        self.e.ambient() == r.n()
            && self.f.ambient() == r.m()
            && r.pairs().iter().all(|(v, w)| self.e.contains(v) || self.f.contains(w))
    }

    /// Matrix-space sense: `V[E^⊥] ⊆ F`.
    pub fn verify_space(&self, space: &MatrixSpace) -> bool {
        self.e.ambient() == space.cols()
            && self.f.ambient() == space.rows()
            && apply_space(space, &self.e.orthocomplement()).is_ok_and(|img| self.f.contains_subspace(&img))
    }
}

/// A set `S` with `dim span N(S) < dim span S - slack`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShrunkWitness {
    pub s: Vec<Vector>,
    pub neighborhood: Subspace,
    pub slack: usize,
}

impl ShrunkWitness {
    pub fn verify(&self, r: &Relation) -> bool {
        let Ok(n) = neighborhood_span(r, &self.s) else {
            return false;
        };
        let span = rank_of(r.n(), &self.s.iter().collect::<Vec<_>>());
        n == self.neighborhood && n.dim() + self.slack < span
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HallOutcome {
    Saturated(Matching),
    Shrunk(ShrunkWitness),
}

/// Minimum cover.
///
/// Only covers of the form `E = span(U)`, `F = span{w : v ∉ E}` with `U` a set
/// of distinct `v`-directions (or the mirror image on the `w` side) are
/// examined. Any cover `(E', F')` is dominated by one of these: take `U` to be
/// the directions of the `v`'s lying in `E'`.
pub fn min_cover(r: &Relation, budget: Budget) -> Result<Cover> {
    let (n, m) = (r.n(), r.m());
    let vdirs = directions(r.pairs().iter().map(|(v, _)| v));
    let wdirs = directions(r.pairs().iter().map(|(_, w)| w));
    let cover = if vdirs.len() <= wdirs.len() {
        budget.check(vdirs.len())?;
        let build = |mask: u64| {
            let e = Subspace::span(n, mask_members(mask, vdirs.len()).iter().map(|&i| &vdirs[i]));
            let ws: Vec<&Vector> = r
                .pairs()
                .iter()
                .filter(|(v, _)| !e.contains(v))
                .map(|(_, w)| w)
                .collect();
            (e, ws)
        };
        let (_, best) = argmin_mask(vdirs.len(), |mask| {
            let (e, ws) = build(mask);
            e.dim() + rank_of(m, &ws)
        });
        let (e, ws) = build(best);
        Cover {
            e,
            f: Subspace::span(m, ws),
        }
    } else {
        budget.check(wdirs.len())?;
        let build = |mask: u64| {
            let f = Subspace::span(m, mask_members(mask, wdirs.len()).iter().map(|&i| &wdirs[i]));
            let vs: Vec<&Vector> = r
                .pairs()
                .iter()
                .filter(|(_, w)| !f.contains(w))
                .map(|(v, _)| v)
                .collect();
            (f, vs)
        };
        let (_, best) = argmin_mask(wdirs.len(), |mask| {
            let (f, vs) = build(mask);
            f.dim() + rank_of(n, &vs)
        });
        let (f, vs) = build(best);
        Cover {
            e: Subspace::span(n, vs),
            f,
        }
    };
    if !cover.verify(r) {
        return Err(invariant("constructed cover does not cover the relation"));
    }
    Ok(cover)
}

/// Depth-first search over `candidates` for `target` pairs with independent
/// `v`'s and independent `w`'s.
fn search_matching(r: &Relation, candidates: &[usize], target: usize) -> Option<Vec<usize>> {
    fn go(
        r: &Relation,
        cand: &[usize],
        pos: usize,
        target: usize,
        ev: &mut Echelon,
        ew: &mut Echelon,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if chosen.len() == target {
            return true;
        }
        if chosen.len() + (cand.len() - pos) < target {
            return false;
        }
        for k in pos..cand.len() {
            let i = cand[k];
            let (v, w) = r.pair(i);
            if !ev.try_push(v) {
                continue;
            }
            if ew.try_push(w) {
                chosen.push(i);
                if go(r, cand, k + 1, target, ev, ew, chosen) {
                    return true;
                }
                chosen.pop();
                ew.pop();
            }
            ev.pop();
            if chosen.len() + (cand.len() - k - 1) < target {
                break;
            }
        }
        false
    }
    let mut ev = Echelon::new(r.n());
    let mut ew = Echelon::new(r.m());
    let mut chosen = Vec::new();
    go(r, candidates, 0, target, &mut ev, &mut ew, &mut chosen).then_some(chosen)
}

/// Greedy double-independence pass in index order.
fn greedy_matching(r: &Relation) -> Vec<usize> {
    let mut ev = Echelon::new(r.n());
    let mut ew = Echelon::new(r.m());
    let mut out = Vec::new();
    for (i, (v, w)) in r.pairs().iter().enumerate() {
        if ev.try_push(v) {
            if ew.try_push(w) {
                out.push(i);
            } else {
                ev.pop();
            }
        }
    }
    out
}

fn matching_of_size(r: &Relation, target: usize) -> Result<Matching> {
    let greedy = greedy_matching(r);
    if greedy.len() >= target {
        return Ok(Matching::new(greedy[..target].to_vec()));
    }
    let cand = r.reduced_indices();
    search_matching(r, &cand, target)
        .map(Matching::new)
        .ok_or_else(|| invariant(format!("no matching of size {target} found")))
}

/// Maximum matching certified by a cover of the same size.
pub fn max_matching(r: &Relation, budget: Budget) -> Result<CertifiedValue<Matching, Cover>> {
    let cover = min_cover(r, budget)?;
    let matching = matching_of_size(r, cover.size())?;
    if !matching.verify(r) {
        return Err(invariant("matching failed verification"));
    }
    Ok(CertifiedValue::proved(cover.size(), matching, cover))
}

/// A matching whose `v`'s form a basis of `F^n`, or a shrunk set `S`.
pub fn saturated_matching(r: &Relation, budget: Budget) -> Result<HallOutcome> {
    if r.n() == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let cover = min_cover(r, budget)?;
    if cover.size() >= r.n() {
        return matching_of_size(r, r.n()).map(HallOutcome::Saturated);
    }
    let s = cover.e.orthocomplement().basis().to_vec();
    let witness = ShrunkWitness {
        neighborhood: neighborhood_span(r, &s)?,
        s,
        slack: 0,
    };
    if !witness.verify(r) {
        return Err(invariant("shrunk witness failed verification"));
    }
    Ok(HallOutcome::Shrunk(witness))
}

/// `target` pairs whose plain sum `Σ w_i v_i^T` has rank `target`, provided a
/// sampled combination of all generators reaches that rank.
pub fn extract_matching_from_combination(
    r: &Relation,
    target: usize,
    s: &mut GenericSampler,
) -> Result<Matching> {
    if target == 0 {
        return Ok(Matching::new(Vec::new()));
    }
    let space = to_matrix_space(r);
    let mut best = 0;
    for _ in 0..s.trials() {
        best = best.max(crate::relation::sample_element(&space, s).rank());
        if best >= target {
            break;
        }
    }
    if best < target {
        return Err(Error::LowerBound {
            target,
            best,
            trials: s.trials(),
        });
    }
    let m = matching_of_size(r, target)?;
    if m.matrix(r).rank() != target {
        return Err(invariant("plain sum of matched pairs lost rank"));
    }
    Ok(m)
}

/// A matching of size `n - d`, via `d` dummy coordinates appended to `F^m`.
pub fn defect_matching(r: &Relation, d: usize, budget: Budget) -> Result<HallOutcome> {
    let (n, m) = (r.n(), r.m());
    if d >= n {
        return Ok(HallOutcome::Saturated(Matching::new(Vec::new())));
    }
    let mut pairs: Vec<(Vector, Vector)> = r
        .pairs()
        .iter()
        .map(|(v, w)| (v.clone(), w.embed(0, m + d)))
        .collect();
    for i in 0..n {
        for j in 0..d {
            pairs.push((Vector::unit(n, i), Vector::unit(m + d, m + j)));
        }
    }
    let augmented = Relation::new(n, m + d, pairs)?;
    match saturated_matching(&augmented, budget)? {
        HallOutcome::Saturated(mm) => {
            let mut kept: Vec<usize> = mm.indices.into_iter().filter(|&i| i < r.len()).collect();
            kept.truncate(n - d);
            let out = Matching::new(kept);
            if out.size() != n - d || !out.verify(r) {
                return Err(invariant("defect matching lost pairs"));
            }
            Ok(HallOutcome::Saturated(out))
        }
        HallOutcome::Shrunk(w) => {
            let witness = ShrunkWitness {
                neighborhood: neighborhood_span(r, &w.s)?,
                s: w.s,
                slack: d,
            };
            if !witness.verify(r) {
                return Err(invariant("defect witness failed verification"));
            }
            Ok(HallOutcome::Shrunk(witness))
        }
    }
}

/// Maximum rank in `V_R`: an explicit matrix of that rank and a subspace
/// whose defect shows no element can do better.
pub fn lovasz_max_rank(
    r: &Relation,
    s: &mut GenericSampler,
    budget: Budget,
) -> Result<CertifiedValue<Mat, DefectCertificate>> {
    let cover = min_cover(r, budget)?;
    let value = cover.size();
    let matching = extract_matching_from_combination(r, value, s)?;
    let primal = matching.matrix(r);
    let dual = DefectCertificate::new(&to_matrix_space(r), cover.e.orthocomplement())?;
    if primal.rank() != value || r.n() - dual.defect() != value {
        return Err(invariant("max-rank certificates do not meet"));
    }
    Ok(CertifiedValue::proved(value, primal, dual))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RadoOutcome {
    /// `w_i ∈ S_i`, linearly independent.
    Transversal(Vec<Vector>),
    /// Indices of `k` sets whose union spans fewer than `k` dimensions.
    Violation(Vec<usize>),
}

pub fn rado_transversal(m: usize, sets: &[Vec<Vector>], budget: Budget) -> Result<RadoOutcome> {
    let n = sets.len();
    if n == 0 {
        return Ok(RadoOutcome::Transversal(Vec::new()));
    }
    let mut owner = Vec::new();
    let mut pairs = Vec::new();
    for (i, set) in sets.iter().enumerate() {
        for w in set {
            owner.push(i);
            pairs.push((Vector::unit(n, i), w.clone()));
        }
    }
    let r = Relation::new(n, m, pairs)?;
    match saturated_matching(&r, budget)? {
        HallOutcome::Saturated(mm) => {
            let mut out = vec![Vector::zeros(m); n];
            for &i in &mm.indices {
                out[owner[i]] = r.pair(i).1.clone();
            }
            Ok(RadoOutcome::Transversal(out))
        }
        HallOutcome::Shrunk(w) => {
            let shrunk = Subspace::span(n, &w.s);
            let family: Vec<usize> = (0..n)
                .filter(|&i| !shrunk.orthocomplement().contains(&Vector::unit(n, i)))
                .collect();
            let union: Vec<&Vector> = family.iter().flat_map(|&i| sets[i].iter()).collect();
            if rank_of(m, &union) >= family.len() {
                return Err(invariant("Rado violation family does not violate"));
            }
            Ok(RadoOutcome::Violation(family))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star4() -> Relation {
        Relation::from_index_pairs(4, 4, &[(0, 1), (0, 2), (0, 3)])
    }

    #[test]
    fn diagonal_and_star() {
        let diag = Relation::from_index_pairs(3, 3, &[(0, 0), (1, 1), (2, 2)]);
        assert_eq!(max_matching(&diag, Budget::default()).unwrap().value, 3);
        let cv = max_matching(&star4(), Budget::default()).unwrap();
        assert_eq!(cv.value, 1);
        assert!(cv.primal.verify(&star4()) && cv.dual.verify(&star4()));
    }

    #[test]
    fn empty_and_single() {
        assert_eq!(min_cover(&Relation::empty(3, 2), Budget::default()).unwrap().size(), 0);
        let one = Relation::from_index_pairs(2, 2, &[(0, 1)]);
        assert_eq!(min_cover(&one, Budget::default()).unwrap().size(), 1);
    }

    #[test]
    fn saturated_and_witness() {
        let diag = Relation::from_index_pairs(3, 3, &[(0, 0), (1, 1), (2, 2)]);
        assert!(matches!(
            saturated_matching(&diag, Budget::default()).unwrap(),
            HallOutcome::Saturated(m) if m.size() == 3
        ));
        match saturated_matching(&star4(), Budget::default()).unwrap() {
            HallOutcome::Shrunk(w) => {
                assert!(w.verify(&star4()));
                // e2 is a valid witness too
                let e2 = ShrunkWitness {
                    s: vec![Vector::unit(4, 1)],
                    neighborhood: Subspace::zero(4),
                    slack: 0,
                };
                assert!(e2.verify(&star4()));
            }
            other => panic!("expected a witness, got {other:?}"),
        }
    }

    #[test]
    fn defect_matching_star() {
        match defect_matching(&star4(), 3, Budget::default()).unwrap() {
            HallOutcome::Saturated(m) => assert_eq!(m.size(), 1),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            defect_matching(&star4(), 2, Budget::default()).unwrap(),
            HallOutcome::Shrunk(_)
        ));
    }

    #[test]
    fn lovasz_star() {
        let mut s = GenericSampler::new(1, 100, 5);
        let cv = lovasz_max_rank(&star4(), &mut s, Budget::default()).unwrap();
        assert_eq!(cv.value, 1);
        assert_eq!(cv.dual.e, Subspace::coordinate(4, &[1, 2, 3]));
        assert_eq!(cv.dual.image_dim, 0);
    }

    #[test]
    fn extraction_targets() {
        let diag = Relation::from_index_pairs(3, 3, &[(0, 0), (1, 1), (2, 2)]);
        let mut s = GenericSampler::new(2, 100, 5);
        assert_eq!(extract_matching_from_combination(&diag, 3, &mut s).unwrap().indices, vec![0, 1, 2]);
        assert!(extract_matching_from_combination(&diag, 0, &mut s).unwrap().indices.is_empty());
        assert!(matches!(
            extract_matching_from_combination(&star4(), 2, &mut s),
            Err(Error::LowerBound { .. })
        ));
    }

    #[test]
    fn rado_examples() {
        let sets: Vec<Vec<Vector>> = (0..3).map(|i| vec![Vector::unit(3, i)]).collect();
        assert_eq!(
            rado_transversal(3, &sets, Budget::default()).unwrap(),
            RadoOutcome::Transversal((0..3).map(|i| Vector::unit(3, i)).collect())
        );
        let bad = vec![vec![Vector::unit(2, 0)], vec![Vector::unit(2, 0)]];
        assert_eq!(
            rado_transversal(2, &bad, Budget::default()).unwrap(),
            RadoOutcome::Violation(vec![0, 1])
        );
    }
}
