//! Classical combinatorial oracles: bipartite matching with a Kőnig cover,
//! exhaustive Hall checks, Dilworth on finite posets, and vertex-disjoint paths
//! by max-flow. Nothing here touches the linear machinery.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::dilworth::Poset;
use crate::error::{invariant, Error, Result};
use crate::linalg::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteGraph {
    pub n: usize,
    pub m: usize,
    pub edges: Vec<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn new(n: usize, m: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(i, j)) = edges.iter().find(|&&(i, j)| i >= n || j >= m) {
            return Err(Error::InvalidArgument(format!("edge ({i}, {j}) out of range")));
        }
        Ok(BipartiteGraph { n, m, edges })
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(i, j) in &self.edges {
            if !adj[i].contains(&j) {
                adj[i].push(j);
            }
        }
        adj
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteMatching {
    pub size: usize,
    pub pairs: Vec<(usize, usize)>,
    pub cover_left: Vec<usize>,
    pub cover_right: Vec<usize>,
}

/// Augmenting-path maximum matching and the Kőnig vertex cover built from the
/// vertices reachable from unmatched left vertices by alternating paths.
pub fn bipartite_max_matching(g: &BipartiteGraph) -> Result<BipartiteMatching> {
    let adj = g.adjacency();
    let mut match_r: Vec<Option<usize>> = vec![None; g.m];
    let mut match_l: Vec<Option<usize>> = vec![None; g.n];
    fn try_kuhn(
        u: usize,
        adj: &[Vec<usize>],
        seen: &mut [bool],
        match_r: &mut [Option<usize>],
        match_l: &mut [Option<usize>],
    ) -> bool {
        for &v in &adj[u] {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            let free = match match_r[v] {
                None => true,
                Some(w) => try_kuhn(w, adj, seen, match_r, match_l),
            };
            if free {
                match_r[v] = Some(u);
                match_l[u] = Some(v);
                return true;
            }
        }
        false
    }
    for u in 0..g.n {
        let mut seen = vec![false; g.m];
        try_kuhn(u, &adj, &mut seen, &mut match_r, &mut match_l);
    }
    let pairs: Vec<(usize, usize)> = (0..g.n).filter_map(|u| match_l[u].map(|v| (u, v))).collect();

    let mut zl = vec![false; g.n];
    let mut zr = vec![false; g.m];
    let mut queue: VecDeque<usize> = (0..g.n).filter(|&u| match_l[u].is_none()).collect();
    for &u in &queue {
        zl[u] = true;
    }
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if match_l[u] == Some(v) || zr[v] {
                continue;
            }
            zr[v] = true;
            if let Some(w) = match_r[v] {
                if !zl[w] {
                    zl[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let cover_left: Vec<usize> = (0..g.n).filter(|&u| !zl[u]).collect();
    let cover_right: Vec<usize> = (0..g.m).filter(|&v| zr[v]).collect();
    let covers = g
        .edges
        .iter()
        .all(|&(i, j)| cover_left.contains(&i) || cover_right.contains(&j));
    if !covers || cover_left.len() + cover_right.len() != pairs.len() {
        return Err(invariant("Kőnig cover does not match the matching"));
    }
    Ok(BipartiteMatching {
        size: pairs.len(),
        pairs,
        cover_left,
        cover_right,
    })
}

/// Exhaustive Hall check: `|N(s)| ≥ |s|` for every set of left vertices.
/// Returns the first violating set, if any.
pub fn hall_check(g: &BipartiteGraph) -> Result<Option<Vec<usize>>> {
    if g.n > 16 {
        return Err(Error::Budget { needed: g.n, limit: 16 });
    }
    let adj = g.adjacency();
    for mask in 1u32..1 << g.n {
        let left: Vec<usize> = (0..g.n).filter(|&i| mask >> i & 1 == 1).collect();
        let mut nb = vec![false; g.m];
        for &u in &left {
            for &v in &adj[u] {
                nb[v] = true;
            }
        }
        if nb.iter().filter(|&&x| x).count() < left.len() {
            return Ok(Some(left));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DilworthOracle {
    pub chains: Vec<Vec<usize>>,
    pub antichain: Vec<usize>,
}

impl DilworthOracle {
    pub fn min_chains(&self) -> usize {
        self.chains.len()
    }

    pub fn max_antichain(&self) -> usize {
        self.antichain.len()
    }
}

/// Minimum chain partition via bipartite matching on `≻`, maximum antichain by
/// exhaustive search; the two sizes must agree.
pub fn poset_dilworth(p: &Poset) -> Result<DilworthOracle> {
    let n = p.size();
    if n > 16 {
        return Err(Error::Budget { needed: n, limit: 16 });
    }
    let g = BipartiteGraph::new(n, n, p.gt().to_vec())?;
    let mm = bipartite_max_matching(&g)?;
    let mut next = vec![None; n];
    let mut has_prev = vec![false; n];
    for &(i, j) in &mm.pairs {
        next[i] = Some(j);
        has_prev[j] = true;
    }
    let chains: Vec<Vec<usize>> = (0..n)
        .filter(|&i| !has_prev[i])
        .map(|start| {
            let mut c = vec![start];
            let mut cur = start;
            while let Some(j) = next[cur] {
                c.push(j);
                cur = j;
            }
            c
        })
        .collect();

    let mut antichain = Vec::new();
    for mask in 0u32..1 << n {
        let set: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if set.len() > antichain.len()
            && set
                .iter()
                .all(|&a| set.iter().all(|&b| !p.comparable(a, b)))
        {
            antichain = set;
        }
    }
    if chains.len() != antichain.len() {
        return Err(invariant("Dilworth oracle: chain partition and antichain disagree"));
    }
    Ok(DilworthOracle { chains, antichain })
}

/// Directed graph on `0..size` with optional rational edge weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    pub size: usize,
    pub edges: Vec<(usize, usize)>,
    pub weights: Option<Vec<Rational>>,
}

impl Digraph {
    pub fn new(size: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        Self::build(size, edges, None)
    }

    pub fn weighted(size: usize, edges: Vec<(usize, usize)>, weights: Vec<Rational>) -> Result<Self> {
        if weights.len() != edges.len() {
            return Err(Error::InvalidArgument(format!(
                "{} weights for {} edges",
                weights.len(),
                edges.len()
            )));
        }
        Self::build(size, edges, Some(weights))
    }

    fn build(size: usize, edges: Vec<(usize, usize)>, weights: Option<Vec<Rational>>) -> Result<Self> {
        if let Some(&(i, j)) = edges.iter().find(|&&(i, j)| i >= size || j >= size) {
            return Err(Error::InvalidArgument(format!("edge ({i}, {j}) out of range")));
        }
        Ok(Digraph { size, edges, weights })
    }

    pub fn weight(&self, e: usize) -> Rational {
        self.weights
            .as_ref()
            .map_or_else(|| Rational::from_integer(1.into()), |w| w[e].clone())
    }

    pub fn successors(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.size];
        for &(i, j) in &self.edges {
            out[i].push(j);
        }
        out
    }

    /// Kahn's algorithm; `None` when there is a directed cycle (loops included).
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg = vec![0usize; self.size];
        for &(_, j) in &self.edges {
            indeg[j] += 1;
        }
        let succ = self.successors();
        let mut queue: VecDeque<usize> = (0..self.size).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.size);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &v in &succ[u] {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    queue.push_back(v);
                }
            }
        }
        (order.len() == self.size).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisjointPaths {
    pub count: usize,
    pub paths: Vec<Vec<usize>>,
    pub separator: Vec<usize>,
}

/// Maximum number of vertex-disjoint `H → K` paths by unit vertex capacities
/// (each vertex split into an in-copy and an out-copy), with a minimum vertex
/// separator read off the residual graph.
pub fn vertex_disjoint_paths(g: &Digraph, h: &[usize], k: &[usize]) -> Result<DisjointPaths> {
    let n = g.size;
    if h.iter().chain(k).any(|&v| v >= n) {
        return Err(Error::InvalidArgument("terminal vertex out of range".into()));
    }
    let (s, t) = (2 * n, 2 * n + 1);
    let nodes = 2 * n + 2;
    let big = (n + 1) as i64;
    let mut cap = vec![vec![0i64; nodes]; nodes];
    for v in 0..n {
        cap[2 * v][2 * v + 1] = 1;
    }
    for &(u, v) in &g.edges {
        if u != v {
            cap[2 * u + 1][2 * v] = big;
        }
    }
    for &v in h {
        cap[s][2 * v] = big;
    }
    for &v in k {
        cap[2 * v + 1][t] = big;
    }
    let orig = cap.clone();
    let mut flow = 0;
    loop {
        let mut prev = vec![usize::MAX; nodes];
        prev[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in 0..nodes {
                if prev[v] == usize::MAX && cap[u][v] > 0 {
                    prev[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if prev[t] == usize::MAX {
            break;
        }
        let mut v = t;
        while v != s {
            let u = prev[v];
            cap[u][v] -= 1;
            cap[v][u] += 1;
            v = u;
        }
        flow += 1;
    }
    // residual reachability from s
    let mut reach = vec![false; nodes];
    reach[s] = true;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for v in 0..nodes {
            if !reach[v] && cap[u][v] > 0 {
                reach[v] = true;
                queue.push_back(v);
            }
        }
    }
    let separator: Vec<usize> = (0..n).filter(|&v| reach[2 * v] && !reach[2 * v + 1]).collect();

    let mut used = vec![vec![0i64; nodes]; nodes];
    for u in 0..nodes {
        for v in 0..nodes {
            used[u][v] = (orig[u][v] - cap[u][v]).max(0);
        }
    }
    let mut paths = Vec::new();
    for _ in 0..flow {
        let mut path = Vec::new();
        let mut u = s;
        while u != t {
            let v = (0..nodes).find(|&v| used[u][v] > 0).ok_or_else(|| invariant("flow decomposition failed"))?;
            used[u][v] -= 1;
            if v < 2 * n && v % 2 == 0 {
                path.push(v / 2);
            }
            u = v;
        }
        paths.push(path);
    }
    let out = DisjointPaths {
        count: flow as usize,
        paths,
        separator,
    };
    if out.count != out.separator.len() || !separates(g, h, k, &out.separator) {
        return Err(invariant("max-flow and min-cut disagree"));
    }
    Ok(out)
}

/// No `H → K` path avoids `sep`.
pub fn separates(g: &Digraph, h: &[usize], k: &[usize], sep: &[usize]) -> bool {
    let succ = g.successors();
    let mut seen = vec![false; g.size];
    let mut queue: VecDeque<usize> = h.iter().copied().filter(|v| !sep.contains(v)).collect();
    for &v in &queue {
        seen[v] = true;
    }
    while let Some(u) = queue.pop_front() {
        if k.contains(&u) {
            return false;
        }
        for &v in &succ[u] {
            if !seen[v] && !sep.contains(&v) {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    true
}
