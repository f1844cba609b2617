//! Seeded random instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classical::{BipartiteGraph, Digraph};
use crate::dilworth::{poset_embed, transitive_closure, validate_linorder, Linorder, Poset};
use crate::error::{Error, Result};
use crate::lgv::LgvInstance;
use crate::linalg::{q, Mat, Rational, Subspace, Vector};
use crate::relation::{MatrixSpace, Relation};

/// Instance generator; output is a pure function of the seed and the call sequence.
#[derive(Clone, Debug)]
pub struct Generator {
    rng: ChaCha8Rng,
}

impl Generator {
    pub fn new(seed: u64) -> Self {
        Generator {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p.clamp(0.0, 1.0))
    }

    pub fn small_vector(&mut self, dim: usize, bound: i64) -> Vector {
        loop {
            let v = Vector::from_ints(&(0..dim).map(|_| self.int(-bound, bound)).collect::<Vec<_>>());
            if !v.is_zero() || dim == 0 {
                return v;
            }
        }
    }

    /// `count` pairs drawn from small pools of directions, so that covers and
    /// matchings are nontrivial.
    pub fn relation(&mut self, n: usize, m: usize, count: usize) -> Relation {
        let vpool: Vec<Vector> = (0..n + 1).map(|_| self.sparse_vector(n)).collect();
        let wpool: Vec<Vector> = (0..m + 1).map(|_| self.sparse_vector(m)).collect();
        let pairs = (0..count)
            .map(|_| {
                (
                    vpool.choose(&mut self.rng).expect("nonempty pool").clone(),
                    wpool.choose(&mut self.rng).expect("nonempty pool").clone(),
                )
            })
            .collect();
        Relation::new(n, m, pairs).expect("pool vectors have the right dimensions")
    }

    /// Nonzero vector with mostly zero entries in `[-2, 2]`.
    fn sparse_vector(&mut self, dim: usize) -> Vector {
        if dim == 0 {
            return Vector::zeros(0);
        }
        loop {
            let v = Vector::from_ints(
                &(0..dim)
                    .map(|_| if self.chance(0.4) { self.int(-2, 2) } else { 0 })
                    .collect::<Vec<_>>(),
            );
            if !v.is_zero() {
                return v;
            }
        }
    }

    pub fn poset(&mut self, size: usize, p: f64) -> Poset {
        let mut perm: Vec<usize> = (0..size).collect();
        perm.shuffle(&mut self.rng);
        let mut edges = Vec::new();
        for i in 0..size {
            for j in i + 1..size {
                if self.chance(p) {
                    edges.push((perm[i], perm[j]));
                }
            }
        }
        Poset::new(size, transitive_closure(size, &edges)).expect("closure of a DAG is a strict order")
    }

    /// Product of random elementary integer matrices and its inverse.
    pub fn unimodular(&mut self, n: usize, steps: usize) -> (Mat, Mat) {
        let mut p = Mat::identity(n);
        let mut inv = Mat::identity(n);
        if n < 2 {
            return (p, inv);
        }
        for _ in 0..steps {
            let i = self.rng.gen_range(0..n);
            let mut j = self.rng.gen_range(0..n - 1);
            if j >= i {
                j += 1;
            }
            let c = loop {
                let c = self.int(-2, 2);
                if c != 0 {
                    break c;
                }
            };
            let mut e = Mat::identity(n);
            e.set(i, j, q(c));
            let mut e_inv = Mat::identity(n);
            e_inv.set(i, j, q(-c));
            p = &e * &p;
            inv = &inv * &e_inv;
        }
        (p, inv)
    }

    /// A random poset embedded as a linorder, then moved by a random
    /// unimodular change of basis `v ↦ P^{-T} v`, `w ↦ P w`, which preserves
    /// every inner product `v^T w`.
    pub fn linorder(&mut self, size: usize, p: f64) -> Result<Linorder> {
        let poset = self.poset(size, p);
        let base = poset_embed(&poset).into_relation();
        let (pm, inv) = self.unimodular(size, 2 * size);
        let inv_t = inv.transpose();
        let pairs = base
            .pairs()
            .iter()
            .map(|(v, w)| (inv_t.apply(v), pm.apply(w)))
            .collect();
        validate_linorder(&Relation::new(size, size, pairs)?)
    }

    pub fn bipartite(&mut self, n: usize, m: usize, p: f64) -> BipartiteGraph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in 0..m {
                if self.chance(p) {
                    edges.push((i, j));
                }
            }
        }
        BipartiteGraph::new(n, m, edges).expect("indices in range")
    }

    /// Digraph without loops.
    pub fn digraph(&mut self, size: usize, p: f64) -> Digraph {
        let mut edges = Vec::new();
        for i in 0..size {
            for j in 0..size {
                if i != j && self.chance(p) {
                    edges.push((i, j));
                }
            }
        }
        Digraph::new(size, edges).expect("indices in range")
    }

    /// Acyclic digraph (edges respect a random vertex order), optionally weighted.
    pub fn dag(&mut self, size: usize, p: f64, weighted: bool) -> Digraph {
        let mut perm: Vec<usize> = (0..size).collect();
        perm.shuffle(&mut self.rng);
        let mut edges = Vec::new();
        for i in 0..size {
            for j in i + 1..size {
                if self.chance(p) {
                    edges.push((perm[i], perm[j]));
                }
            }
        }
        if weighted {
            let ws = (0..edges.len()).map(|_| self.nonzero_rational()).collect();
            Digraph::weighted(size, edges, ws).expect("indices in range")
        } else {
            Digraph::new(size, edges).expect("indices in range")
        }
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        loop {
            let num = self.int(-5, 5);
            if num != 0 {
                return Rational::new(num.into(), self.int(1, 4).into());
            }
        }
    }

    /// `k` distinct vertices.
    pub fn vertices(&mut self, size: usize, k: usize) -> Vec<usize> {
        let mut all: Vec<usize> = (0..size).collect();
        all.shuffle(&mut self.rng);
        all.truncate(k.min(size));
        all
    }

    pub fn subspace(&mut self, n: usize, dim: usize) -> Subspace {
        let vs: Vec<Vector> = (0..dim).map(|_| self.sparse_vector(n)).collect();
        Subspace::span(n, &vs)
    }

    /// Span of `d` random matrices with small integer entries, mostly zero.
    pub fn matrix_space(&mut self, m: usize, n: usize, d: usize) -> MatrixSpace {
        let mats = (0..d).map(|_| {
            let data = (0..m * n)
                .map(|_| q(if self.chance(0.35) { self.int(-2, 2) } else { 0 }))
                .collect();
            Mat::from_vec(m, n, data)
        });
        MatrixSpace::from_spanning(m, n, mats.collect::<Vec<_>>()).expect("shapes agree")
    }

    pub fn lgv(&mut self, n: usize, r: usize, k: usize) -> LgvInstance {
        let mut mat = |cols: usize| {
            let vs: Vec<Vector> = (0..cols).map(|_| self.small_vector(n, 2)).collect();
            Mat::from_columns(n, &vs)
        };
        let (v, w, a, b) = (mat(r), mat(r), mat(k), mat(k));
        LgvInstance::new(v, w, a, b).expect("shapes agree")
    }

    /// Random point with nonzero entries.
    pub fn point(&mut self, len: usize) -> Vec<Rational> {
        (0..len).map(|_| self.nonzero_rational()).collect()
    }
}

/// Parse a `key=value` parameter list.
pub fn param(params: &[(String, String)], key: &str, default: usize) -> Result<usize> {
    match params.iter().find(|(k, _)| k == key) {
        None => Ok(default),
        Some((_, v)) => v
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("{key}={v} is not a nonnegative integer"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let a = Generator::new(5).relation(3, 3, 5);
        let b = Generator::new(5).relation(3, 3, 5);
        assert_eq!(a, b);
        assert_eq!(a.len(), 5);
    }

    #[test]
    fn linorders_validate() {
        let mut g = Generator::new(3);
        for size in 1..6 {
            let l = g.linorder(size, 0.5).unwrap();
            assert_eq!(l.n(), size);
        }
    }

    #[test]
    fn unimodular_inverse() {
        let (p, inv) = Generator::new(9).unimodular(4, 10);
        assert_eq!(&p * &inv, Mat::identity(4));
    }

    #[test]
    fn dags_are_acyclic() {
        let mut g = Generator::new(1);
        for _ in 0..10 {
            assert!(g.dag(6, 0.5, true).is_acyclic());
        }
    }
}
