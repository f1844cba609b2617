//! Linear Lindström–Gessel–Viennot: the rational-function identity, its
//! acyclic polynomial form, and the classical path-counting lemma.

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::classical::Digraph;
use crate::error::{invariant, Error, Result};
use crate::linalg::{Mat, Rational, Vector};
use crate::relation::{to_matrix_space, Relation};
use crate::subsets::mask_members;

/// Columns `v_i`, `w_i` (`i < r`) carry the variables `x_i`; columns `a_i`, `b_i`
/// (`i < k`) are sources and sinks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LgvInstance {
    pub v: Mat,
    pub w: Mat,
    pub a: Mat,
    pub b: Mat,
}

/// `G_S = [[V_S^T W_S, V_S^T A], [B^T W_S, B^T A]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GsMatrix {
    pub s: Vec<usize>,
    pub matrix: Mat,
}

impl LgvInstance {
    pub fn new(v: Mat, w: Mat, a: Mat, b: Mat) -> Result<Self> {
        let n = v.rows();
        if w.rows() != n || a.rows() != n || b.rows() != n {
            return Err(Error::Dimension("V, W, A, B must have the same row count".into()));
        }
        if v.cols() != w.cols() || a.cols() != b.cols() {
            return Err(Error::Dimension(format!(
                "V has {} columns, W {}, A {}, B {}",
                v.cols(),
                w.cols(),
                a.cols(),
                b.cols()
            )));
        }
        Ok(LgvInstance { v, w, a, b })
    }

    /// `V` and `W` from the pairs of a relation on `F^n`.
    pub fn from_relation(r: &Relation, a: Mat, b: Mat) -> Result<Self> {
        if r.n() != r.m() {
            return Err(Error::Dimension("relation must be square".into()));
        }
        let vs: Vec<Vector> = r.pairs().iter().map(|(v, _)| v.clone()).collect();
        let ws: Vec<Vector> = r.pairs().iter().map(|(_, w)| w.clone()).collect();
        Self::new(Mat::from_columns(r.n(), &vs), Mat::from_columns(r.n(), &ws), a, b)
    }

    pub fn n(&self) -> usize {
        self.v.rows()
    }

    pub fn r(&self) -> usize {
        self.v.cols()
    }

    pub fn k(&self) -> usize {
        self.a.cols()
    }

    pub fn relation(&self) -> Relation {
        let pairs = self.v.columns().into_iter().zip(self.w.columns()).collect();
        Relation::new(self.n(), self.n(), pairs).expect("columns share the row count")
    }

    pub fn gs(&self, s: &[usize]) -> GsMatrix {
        let vs = self.v.select_columns(s).transpose();
        let ws = self.w.select_columns(s);
        let bt = self.b.transpose();
        let matrix = Mat::block(&(&vs * &ws), &(&vs * &self.a), &(&bt * &ws), &(&bt * &self.a));
        GsMatrix { s: s.to_vec(), matrix }
    }

    fn check_x(&self, x: &[Rational]) -> Result<()> {
        if x.len() != self.r() {
            return Err(Error::Dimension(format!("{} values for {} variables", x.len(), self.r())));
        }
        Ok(())
    }

    /// `W diag(x) V^T`.
    pub fn transfer(&self, x: &[Rational]) -> Mat {
        &(&self.w * &Mat::diagonal(x)) * &self.v.transpose()
    }
}

fn x_monomial(x: &[Rational], s: &[usize]) -> Rational {
    let p: Rational = s.iter().map(|&i| x[i].clone()).product();
    if s.len() % 2 == 1 {
        -p
    } else {
        p
    }
}

/// `Σ_S (-1)^{|S|} x_S f(S)` over all subsets of `0..r`.
fn subset_sum<F>(r: usize, x: &[Rational], f: F) -> Result<Rational>
where
    F: Fn(&[usize]) -> Rational + Sync,
{
    if r >= 26 {
        return Err(Error::Budget { needed: r, limit: 25 });
    }
    Ok((0..1u64 << r)
        .into_par_iter()
        .map(|mask| {
            let s = mask_members(mask, r);
            let c = x_monomial(x, &s);
            if c.is_zero() {
                c
            } else {
                c * f(&s)
            }
        })
        .reduce(Rational::zero, |a, b| a + b))
}

/// `det(B^T (I - W diag(x) V^T)^{-1} A)`.
pub fn lgv_lhs(inst: &LgvInstance, x: &[Rational]) -> Result<Rational> {
    inst.check_x(x)?;
    let m = &Mat::identity(inst.n()) - &inst.transfer(x);
    let inv = m.inverse().ok_or(Error::Singular)?;
    (&(&inst.b.transpose() * &inv) * &inst.a).det()
}

/// `Σ_S (-1)^{|S|} x_S det G_S`.
pub fn lgv_numerator(inst: &LgvInstance, x: &[Rational]) -> Result<Rational> {
    inst.check_x(x)?;
    subset_sum(inst.r(), x, |s| inst.gs(s).matrix.det().expect("G_S is square"))
}

/// `Σ_S (-1)^{|S|} x_S det(V_S^T W_S)`.
pub fn lgv_denominator(inst: &LgvInstance, x: &[Rational]) -> Result<Rational> {
    inst.check_x(x)?;
    subset_sum(inst.r(), x, |s| {
        let vs = inst.v.select_columns(s).transpose();
        (&vs * &inst.w.select_columns(s)).det().expect("square")
    })
}

/// `det(I_r - diag(x) V^T W)`, evaluated directly.
pub fn principal_minor_determinant(inst: &LgvInstance, x: &[Rational]) -> Result<Rational> {
    inst.check_x(x)?;
    let vtw = &inst.v.transpose() * &inst.w;
    (&Mat::identity(inst.r()) - &(&Mat::diagonal(x) * &vtw)).det()
}

/// Numerator over denominator, both by subset enumeration.
pub fn lgv_rhs(inst: &LgvInstance, x: &[Rational]) -> Result<Rational> {
    let den = lgv_denominator(inst, x)?;
    if den.is_zero() {
        return Err(Error::Singular);
    }
    Ok(lgv_numerator(inst, x)? / den)
}

/// `V_R^n = {0}`.
pub fn is_acyclic(r: &Relation) -> bool {
    r.n() == r.m() && to_matrix_space(r).is_nilpotent()
}

/// An ordering of the pair indices with `v_i ⊥ w_j` whenever `i` does not
/// precede `j`; `None` if the digraph `i → j` (`v_i ⊥̸ w_j`) has a cycle.
pub fn triangular_order(r: &Relation) -> Option<Vec<usize>> {
    let mut edges = Vec::new();
    for (i, (v, _)) in r.pairs().iter().enumerate() {
        for (j, (_, w)) in r.pairs().iter().enumerate() {
            if !v.is_orthogonal(w) {
                edges.push((i, j));
            }
        }
    }
    Digraph::new(r.len(), edges).ok()?.topological_order()
}

/// Both sides of the acyclic identity:
/// `det(B^T (Σ_{j<n} (W X V^T)^j) A)` and `Σ_S (-1)^{|S|} x_S det G_S`.
///
/// Also checks that the denominator is identically one, once by reordering
/// `V^T W` to strictly upper triangular form and once by evaluation at `x`.
pub fn lgv_acyclic(inst: &LgvInstance, x: &[Rational]) -> Result<(Rational, Rational)> {
    inst.check_x(x)?;
    let r = inst.relation();
    if !is_acyclic(&r) {
        return Err(Error::NotAcyclic);
    }
    let order = triangular_order(&r).ok_or_else(|| invariant("acyclic relation with cyclic v-w graph"))?;
    let vtw = &inst.v.select_columns(&order).transpose() * &inst.w.select_columns(&order);
    if (0..vtw.rows()).any(|i| (0..=i).any(|j| !vtw.get(i, j).is_zero())) {
        return Err(invariant("reordered V^T W is not strictly upper triangular"));
    }
    if !principal_minor_determinant(inst, x)?.is_one() || !lgv_denominator(inst, x)?.is_one() {
        return Err(invariant("acyclic denominator differs from 1"));
    }

    let n = inst.n();
    let t = inst.transfer(x);
    if !t.pow(n as u32).is_zero() {
        return Err(invariant("transfer matrix is not nilpotent"));
    }
    let mut series = Mat::identity(n);
    let mut power = Mat::identity(n);
    for _ in 1..n {
        power = &power * &t;
        series = &series + &power;
    }
    let lhs = (&(&inst.b.transpose() * &series) * &inst.a).det()?;
    let rhs = lgv_numerator(inst, x)?;
    Ok((lhs, rhs))
}

/// Standard-basis encoding of a weighted DAG: one pair `(e_tail, e_head)` per
/// edge with `x_e` its weight, `A` and `B` the coordinate vectors of `H` and `K`.
pub fn lgv_graph_instance(g: &Digraph, h: &[usize], k: &[usize]) -> Result<(LgvInstance, Vec<Rational>)> {
    if h.len() != k.len() {
        return Err(Error::InvalidArgument(format!("{} sources, {} sinks", h.len(), k.len())));
    }
    if h.iter().chain(k).any(|&v| v >= g.size) {
        return Err(Error::InvalidArgument("terminal vertex out of range".into()));
    }
    let n = g.size;
    let r = Relation::from_index_pairs(n, n, &g.edges);
    let cols = |vs: &[usize]| Mat::from_columns(n, &vs.iter().map(|&i| Vector::unit(n, i)).collect::<Vec<_>>());
    let inst = LgvInstance::from_relation(&r, cols(h), cols(k))?;
    let x = (0..g.edges.len()).map(|e| g.weight(e)).collect();
    Ok((inst, x))
}

/// The classical lemma on a weighted DAG: `det M` with `M_ij = e(h_i, k_j)`
/// by dynamic programming, and `Σ sign(σ) Π ω(P_i)` over vertex-disjoint path
/// tuples by exhaustive enumeration.
pub fn classical_lgv(g: &Digraph, h: &[usize], k: &[usize]) -> Result<(Rational, Rational)> {
    if h.len() != k.len() {
        return Err(Error::InvalidArgument(format!("{} sources, {} sinks", h.len(), k.len())));
    }
    if h.iter().chain(k).any(|&v| v >= g.size) {
        return Err(Error::InvalidArgument("terminal vertex out of range".into()));
    }
    let order = g.topological_order().ok_or(Error::Cyclic)?;
    let mut out_edges: Vec<Vec<usize>> = vec![Vec::new(); g.size];
    for (e, &(u, _)) in g.edges.iter().enumerate() {
        out_edges[u].push(e);
    }

    let kk = h.len();
    let mut m = Mat::zeros(kk, kk);
    for (i, &src) in h.iter().enumerate() {
        let mut reach = vec![Rational::zero(); g.size];
        reach[src] = Rational::one();
        for &u in &order {
            if reach[u].is_zero() {
                continue;
            }
            for &e in &out_edges[u] {
                let val = &reach[u] * g.weight(e);
                reach[g.edges[e].1] += val;
            }
        }
        for (j, &dst) in k.iter().enumerate() {
            m.set(i, j, reach[dst].clone());
        }
    }
    let det_m = m.det()?;

    // all paths from each source to each sink, as (vertex set, weight)
    let mut paths: Vec<Vec<Vec<(u64, Rational)>>> = vec![vec![Vec::new(); kk]; kk];
    for (i, &src) in h.iter().enumerate() {
        let mut stack = vec![(src, 1u64 << src, Rational::one())];
        while let Some((u, set, wt)) = stack.pop() {
            if let Some(j) = k.iter().position(|&t| t == u) {
                paths[i][j].push((set, wt.clone()));
            }
            for &e in &out_edges[u] {
                let v = g.edges[e].1;
                stack.push((v, set | 1 << v, &wt * g.weight(e)));
            }
        }
    }
    fn go(
        i: usize,
        used_sinks: &mut Vec<usize>,
        used_vertices: u64,
        weight: Rational,
        paths: &[Vec<Vec<(u64, Rational)>>],
        acc: &mut Rational,
    ) {
        let kk = paths.len();
        if i == kk {
            *acc += if permutation_sign(used_sinks) { -weight } else { weight };
            return;
        }
        for j in 0..kk {
            if used_sinks.contains(&j) {
                continue;
            }
            for (set, wt) in &paths[i][j] {
                if set & used_vertices == 0 {
                    used_sinks.push(j);
                    go(i + 1, used_sinks, used_vertices | set, &weight * wt, paths, acc);
                    used_sinks.pop();
                }
            }
        }
    }
    if g.size > 64 {
        return Err(Error::Budget { needed: g.size, limit: 64 });
    }
    let mut signed = Rational::zero();
    go(0, &mut Vec::new(), 0, Rational::one(), &paths, &mut signed);
    Ok((det_m, signed))
}

/// True for odd permutations.
fn permutation_sign(p: &[usize]) -> bool {
    let mut odd = false;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                odd = !odd;
            }
        }
    }
    odd
}
