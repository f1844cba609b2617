//! Linorders, antichains, bi-chain decompositions and coherent chain
//! decompositions.

mod jordan;
mod poset;

pub use jordan::{chain_vectors, iterate, nilpotent_jordan_chains};
pub use poset::{transitive_closure, Poset};

use crate::certificate::{Budget, CertifiedValue};
use crate::error::{invariant, Error, Result};
use crate::linalg::{rank_of, Mat, Subspace, Vector};
use crate::matching::{max_matching, min_cover, Cover};
use crate::relation::{sample_element, to_matrix_space, MatrixSpace, Relation};
use crate::sampler::GenericSampler;
use crate::subsets::normalize;

/// A relation on `F^n` closed under nonorthogonal composition, with `v ⊥ w`
/// on every pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Linorder {
    relation: Relation,
}

impl Linorder {
    pub fn relation(&self) -> &Relation {
        &self.relation
    }

    pub fn n(&self) -> usize {
        self.relation.n()
    }

    pub fn into_relation(self) -> Relation {
        self.relation
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinorderViolation {
    /// Pair `i` has `v^T w ≠ 0`.
    NotOrthogonal { pair: usize },
    /// `w_first ⊥̸ v_second` but `(v_first, w_second)` is not listed.
    MissingComposite { first: usize, second: usize },
    /// `V_R^n ≠ 0`; unreachable when both axioms hold.
    NotNilpotent,
}

/// First axiom violation of a square relation, if any.
pub fn linorder_violation(r: &Relation) -> Option<LinorderViolation> {
    let pairs = r.pairs();
    if let Some(i) = pairs.iter().position(|(v, w)| !v.is_orthogonal(w)) {
        return Some(LinorderViolation::NotOrthogonal { pair: i });
    }
    for (i, (v, w)) in pairs.iter().enumerate() {
        for (j, (vt, wt)) in pairs.iter().enumerate() {
            if !w.is_orthogonal(vt) && r.find(v, wt).is_none() {
                return Some(LinorderViolation::MissingComposite { first: i, second: j });
            }
        }
    }
    if !to_matrix_space(r).is_nilpotent() {
        return Some(LinorderViolation::NotNilpotent);
    }
    None
}

pub fn validate_linorder(r: &Relation) -> Result<Linorder> {
    if r.n() != r.m() {
        return Err(Error::Dimension(format!(
            "a linorder lives in F^n x F^n, got F^{} x F^{}",
            r.n(),
            r.m()
        )));
    }
    match linorder_violation(r) {
        None => Ok(Linorder { relation: r.clone() }),
        Some(LinorderViolation::NotOrthogonal { pair }) => Err(Error::NotLinorder(format!(
            "pair {pair} has v not orthogonal to w"
        ))),
        Some(LinorderViolation::MissingComposite { first, second }) => Err(Error::NotLinorder(format!(
            "pairs {first} and {second} compose but (v_{first}, w_{second}) is absent"
        ))),
        Some(LinorderViolation::NotNilpotent) => Err(Error::NotLinorder("V_R is not nilpotent".into())),
    }
}

/// `(e_i, e_j)` for each `p_i ≻ p_j`.
pub fn poset_embed(p: &Poset) -> Linorder {
    let r = Relation::from_index_pairs(p.size(), p.size(), p.gt());
    validate_linorder(&r).expect("a strict poset embeds as a linorder")
}

/// Every pair has `v ⊥ C` or `w ⊥ C`.
pub fn is_antichain(r: &Relation, c: &Subspace) -> bool {
    let perp = c.orthocomplement();
    r.pairs().iter().all(|(v, w)| perp.contains(v) || perp.contains(w))
}

/// Maximum antichain `C = (E + F)^⊥` read off a minimum cover.
pub fn max_antichain(l: &Linorder, budget: Budget) -> Result<CertifiedValue<Subspace, Cover>> {
    let r = l.relation();
    let cover = min_cover(r, budget)?;
    let c = cover.e.sum(&cover.f)?.orthocomplement();
    let value = r.n() - cover.size();
    if !is_antichain(r, &c) || c.dim() != value {
        return Err(invariant("antichain from minimum cover failed verification"));
    }
    Ok(CertifiedValue::proved(value, c, cover))
}

/// `(w_1, v_1, …, w_r, v_r)` with `w_i ⊥̸ v_i` and `(v_i, w_{i+1})` the pair
/// `links[i]`. A bi-path is a bi-chain that starts in `E` and ends in `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiChain {
    pub ws: Vec<Vector>,
    pub vs: Vec<Vector>,
    pub links: Vec<usize>,
}

pub type BiPath = BiChain;

impl BiChain {
    /// From an interleaved sequence `w_1, v_1, …, w_r, v_r`, locating each
    /// `(v_i, w_{i+1})` by literal membership.
    pub fn from_sequence(r: &Relation, seq: &[Vector]) -> Option<BiChain> {
        if seq.is_empty() || !seq.len().is_multiple_of(2) {
            return None;
        }
        let ws: Vec<Vector> = seq.iter().step_by(2).cloned().collect();
        let vs: Vec<Vector> = seq.iter().skip(1).step_by(2).cloned().collect();
        let links = (0..vs.len() - 1)
            .map(|i| r.find(&vs[i], &ws[i + 1]))
            .collect::<Option<Vec<_>>>()?;
        Some(BiChain { ws, vs, links })
    }

    pub fn len(&self) -> usize {
        self.vs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vs.is_empty()
    }

    pub fn verify(&self, r: &Relation) -> bool {
        let k = self.vs.len();
        k > 0
            && self.ws.len() == k
            && self.links.len() == k - 1
            && self.ws.iter().zip(&self.vs).all(|(w, v)| {
                w.dim() == r.m() && v.dim() == r.n() && !w.is_orthogonal(v)
            })
            && self.links.iter().enumerate().all(|(i, &p)| {
                p < r.len() && r.pair(p).0 == self.vs[i] && r.pair(p).1 == self.ws[i + 1]
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiChainDecomposition {
    pub chains: Vec<BiChain>,
}

impl BiChainDecomposition {
    pub fn size(&self) -> usize {
        self.chains.len()
    }

    pub fn all_vs(&self) -> Vec<&Vector> {
        self.chains.iter().flat_map(|c| c.vs.iter()).collect()
    }

    pub fn all_ws(&self) -> Vec<&Vector> {
        self.chains.iter().flat_map(|c| c.ws.iter()).collect()
    }

    /// Each chain verifies, and the `v`'s and the `w`'s are both bases.
    pub fn verify(&self, r: &Relation) -> bool {
        let n = r.n();
        let (vs, ws) = (self.all_vs(), self.all_ws());
        self.chains.iter().all(|c| c.verify(r))
            && vs.len() == n
            && ws.len() == n
            && rank_of(n, &vs) == n
            && rank_of(n, &ws) == n
    }
}

/// Perfect matching of left vertices to right vertices (augmenting paths).
fn perfect_assignment(adj: &[Vec<usize>], right: usize) -> Option<Vec<usize>> {
    fn augment(u: usize, adj: &[Vec<usize>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                if owner[v].is_none_or(|o| augment(o, adj, seen, owner)) {
                    owner[v] = Some(u);
                    return true;
                }
            }
        }
        false
    }
    let mut owner = vec![None; right];
    for u in 0..adj.len() {
        if !augment(u, adj, &mut vec![false; right], &mut owner) {
            return None;
        }
    }
    let mut phi = vec![0; adj.len()];
    for (v, o) in owner.iter().enumerate() {
        if let Some(u) = o {
            phi[*u] = v;
        }
    }
    Some(phi)
}

/// A bi-chain decomposition of size `n - (max matching)`, certified minimal by
/// a minimum cover.
///
/// The matching `(v_i, w_i)`, `i < s`, is extended to bases; a bijection `φ`
/// with `w_i ⊥̸ v_φ(i)` is found by bipartite matching; the chains are the
/// maximal paths of the digraph `w_i → v_φ(i)`, `v_i → w_i` (`i < s`).
pub fn bichain_decomposition(
    l: &Linorder,
    budget: Budget,
) -> Result<CertifiedValue<BiChainDecomposition, Cover>> {
    let r = l.relation();
    let n = r.n();
    let mm = max_matching(r, budget)?;
    let s = mm.value;
    let matched = &mm.primal.indices;
    let mut vs: Vec<Vector> = matched.iter().map(|&i| r.pair(i).0.clone()).collect();
    let mut ws: Vec<Vector> = matched.iter().map(|&i| r.pair(i).1.clone()).collect();
    vs.extend(Subspace::span(n, &vs.clone()).complement_basis());
    ws.extend(Subspace::span(n, &ws.clone()).complement_basis());
    let adj: Vec<Vec<usize>> = ws
        .iter()
        .map(|w| (0..n).filter(|&j| !w.is_orthogonal(&vs[j])).collect())
        .collect();
    let phi = perfect_assignment(&adj, n).ok_or_else(|| invariant("no nonorthogonal bijection between bases"))?;

    let mut visited = vec![false; n];
    let mut chains = Vec::new();
    for start in s..n {
        let mut chain = BiChain {
            ws: Vec::new(),
            vs: Vec::new(),
            links: Vec::new(),
        };
        let mut a = start;
        loop {
            if visited[a] {
                return Err(invariant("bi-chain digraph has a cycle"));
            }
            visited[a] = true;
            chain.ws.push(ws[a].clone());
            let b = phi[a];
            chain.vs.push(vs[b].clone());
            if b >= s {
                break;
            }
            chain.links.push(matched[b]);
            a = b;
        }
        chains.push(chain);
    }
    if visited.iter().any(|x| !x) {
        return Err(invariant("bi-chain digraph has a cycle"));
    }
    let d = BiChainDecomposition { chains };
    if !d.verify(r) || d.size() != n - mm.dual.size() {
        return Err(invariant("bi-chain decomposition failed verification"));
    }
    Ok(CertifiedValue::proved(d.size(), d, mm.dual))
}

/// Each sequence is a `w`-chain (consecutive `x, y` with `y` a multiple of
/// some `w` whose partner `v` has `x ⊥̸ v`) and all elements together form a basis.
pub fn w_chain_check(l: &Linorder, chains: &[Vec<Vector>]) -> bool {
    let r = l.relation();
    let n = r.n();
    let linked = |x: &Vector, y: &Vector| {
        let Some(dy) = normalize(y) else {
            return false;
        };
        r.pairs()
            .iter()
            .any(|(v, w)| !x.is_orthogonal(v) && normalize(w).as_ref() == Some(&dy))
    };
    let all: Vec<&Vector> = chains.iter().flatten().collect();
    chains.iter().all(|c| c.windows(2).all(|p| linked(&p[0], &p[1])))
        && all.iter().all(|v| v.dim() == n)
        && all.len() == n
        && rank_of(n, &all) == n
}

/// Chains `(seed, A·seed, …)` all driven by one matrix `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherentDecomposition {
    pub a: Mat,
    pub chains: Vec<(Vector, usize)>,
}

impl CoherentDecomposition {
    pub fn size(&self) -> usize {
        self.chains.len()
    }

    pub fn vectors(&self) -> Vec<Vector> {
        chain_vectors(&self.a, &self.chains)
    }

    /// `A ∈ space` and the iterates form a basis.
    pub fn verify(&self, space: &MatrixSpace) -> bool {
        let n = self.a.rows();
        let vs = self.vectors();
        space.contains(&self.a) && vs.len() == n && rank_of(n, &vs.iter().collect::<Vec<_>>()) == n
    }

    pub(crate) fn from_matrix(a: Mat) -> Result<Self> {
        let chains = nilpotent_jordan_chains(&a)?;
        Ok(CoherentDecomposition { a, chains })
    }
}

/// Jordan chains of a sampled maximum-rank element of `V_R`.
pub fn coherent_decomposition(
    l: &Linorder,
    s: &mut GenericSampler,
    budget: Budget,
) -> Result<CertifiedValue<CoherentDecomposition, Cover>> {
    let r = l.relation();
    let n = r.n();
    let cover = min_cover(r, budget)?;
    let target = cover.size();
    let space = to_matrix_space(r);
    let mut best = 0;
    for _ in 0..s.trials() {
        let a = sample_element(&space, s);
        let rk = a.rank();
        if rk == target {
            let d = CoherentDecomposition::from_matrix(a)?;
            if !d.verify(&space) || d.size() != n - target {
                return Err(invariant("coherent decomposition failed verification"));
            }
            return Ok(CertifiedValue::proved(d.size(), d, cover));
        }
        best = best.max(rk);
    }
    Err(Error::LowerBound {
        target,
        best,
        trials: s.trials(),
    })
}

/// `A = Σ w v^T` over interior pairs, then its Jordan chains.
pub fn bichain_to_coherent(d: &BiChainDecomposition, r: &Relation) -> Result<CoherentDecomposition> {
    let n = r.n();
    let mut a = Mat::zeros(n, n);
    let mut interior = 0;
    for c in &d.chains {
        for &p in &c.links {
            a = &a + &r.rank_one(p);
            interior += 1;
        }
    }
    if a.rank() != interior || interior + d.size() != n {
        return Err(invariant("interior pairs of a bi-chain decomposition lost rank"));
    }
    let out = CoherentDecomposition::from_matrix(a)?;
    if out.size() != d.size() {
        return Err(invariant("coherent conversion changed the size"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::demo::{f4_w_chains, linorder_f4};

    #[test]
    fn f4_example() {
        let l = validate_linorder(&linorder_f4()).unwrap();
        let ac = max_antichain(&l, Budget::default()).unwrap();
        assert_eq!(ac.value, 3);
        assert_eq!(ac.primal, Subspace::coordinate(4, &[1, 2, 3]));
        let bd = bichain_decomposition(&l, Budget::default()).unwrap();
        assert_eq!(bd.value, 3);
        assert!(w_chain_check(&l, &f4_w_chains()));
        let mut s = GenericSampler::new(5, 1000, 10);
        let cd = coherent_decomposition(&l, &mut s, Budget::default()).unwrap();
        assert_eq!(cd.value, 3);
        assert_eq!(bichain_to_coherent(&bd.primal, l.relation()).unwrap().size(), 3);
    }

    #[test]
    fn linorder_axioms() {
        assert!(validate_linorder(&Relation::from_index_pairs(2, 2, &[(0, 0)])).is_err());
        assert!(validate_linorder(&Relation::from_index_pairs(3, 3, &[(0, 1), (1, 2)])).is_err());
        assert!(validate_linorder(&Relation::from_index_pairs(2, 3, &[])).is_err());
        let chain = Poset::from_cover_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(poset_embed(&chain).relation().len(), 3);
        let anti = Poset::new(3, vec![]).unwrap();
        assert!(poset_embed(&anti).relation().is_empty());
    }

    #[test]
    fn empty_relation() {
        let l = validate_linorder(&Relation::empty(3, 3)).unwrap();
        let ac = max_antichain(&l, Budget::default()).unwrap();
        assert!(ac.primal.is_full());
        let bd = bichain_decomposition(&l, Budget::default()).unwrap();
        assert_eq!(bd.value, 3);
        assert!(bd.primal.chains.iter().all(|c| c.len() == 1));
        let mut s = GenericSampler::with_seed(0);
        let cd = coherent_decomposition(&l, &mut s, Budget::default()).unwrap();
        assert!(cd.primal.a.is_zero());
        assert_eq!(cd.value, 3);
    }

    #[test]
    fn w_chain_rejects_repeats() {
        let l = validate_linorder(&linorder_f4()).unwrap();
        let e1 = Vector::unit(4, 0);
        assert!(!w_chain_check(&l, &[vec![e1.clone(), e1]]));
    }
}
