//! Power graphs `P(G)` and reduced power graphs `P(G^#)`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bits::BitMatrix;
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::numtheory::{divisors, gcd, totient};

pub const CLIQUE_LIMIT: usize = 512;

/// Simple undirected graph whose vertices are group elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerGraph {
    adjacency: BitMatrix,
    labels: Vec<usize>,
    includes_identity: bool,
}

impl PowerGraph {
    /// Build from an explicit adjacency (symmetric, irreflexive) and labels.
    pub fn from_adjacency(adjacency: BitMatrix, labels: Vec<usize>, includes_identity: bool) -> Self {
        assert_eq!(adjacency.size(), labels.len());
        PowerGraph { adjacency, labels, includes_identity }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// Group element index of each vertex.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn includes_identity(&self) -> bool {
        self.includes_identity
    }

    #[inline]
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency.get(u, v)
    }

    pub fn adjacency(&self) -> &BitMatrix {
        &self.adjacency
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency.row_count_ones(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency.row_iter(v)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.vertex_count())
            .flat_map(|u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let u = members[i];
                i += 1;
                for v in self.neighbors(u) {
                    if comp[v] == usize::MAX {
                        comp[v] = id;
                        members.push(v);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn to_export(&self) -> GraphExport {
        GraphExport::new(
            self.vertex_count(),
            self.edges(),
            self.labels.iter().map(|l| l.to_string()).collect(),
        )
    }
}

pub fn power_graph(g: &FiniteGroup) -> PowerGraph {
    build(g, false)
}

/// `P(G)` with the identity deleted; vertex `i` is element `i + 1`.
pub fn reduced_power_graph(g: &FiniteGroup) -> Result<PowerGraph> {
    if g.order() < 2 {
        return Err(Error::TrivialGroup);
    }
    Ok(build(g, true))
}

fn build(g: &FiniteGroup, drop_identity: bool) -> PowerGraph {
    let labels: Vec<usize> = (drop_identity as usize..g.order()).collect();
    let n = labels.len();
    let orders = g.element_orders();
    let mut adjacency = BitMatrix::new(n);
    for u in 0..n {
        let x = labels[u];
        for v in u + 1..n {
            let y = labels[v];
            let (ox, oy) = (orders[x], orders[y]);
            // <x> ⊆ <y> forces |x| to divide |y|; test that before the set probe.
            let adj = (oy % ox == 0 && g.in_closure(y, x)) || (ox % oy == 0 && g.in_closure(x, y));
            if adj {
                adjacency.set(u, v);
                adjacency.set(v, u);
            }
        }
    }
    PowerGraph { adjacency, labels, includes_identity: !drop_identity }
}

/// Degree of `x^m` in `P(Z_n)` by the closed count
/// `n/(m,n) - 1 + Σ_{d | (m,n), d ≠ (m,n)} φ(n/d)`.
pub fn degree_in_cyclic(n: u64, m: u64) -> Result<u64> {
    if n == 0 || m >= n {
        return Err(Error::OutOfRange(format!("need 0 <= m < n, got n={n}, m={m}")));
    }
    let g = gcd(m, n);
    let tail: u64 = divisors(g).into_iter().filter(|&d| d != g).map(|d| totient(n / d)).sum();
    Ok(n / g - 1 + tail)
}

pub fn is_complete(graph: &PowerGraph) -> bool {
    let n = graph.vertex_count();
    (0..n).all(|v| graph.degree(v) == n - 1)
}

/// Exact clique number by branch and bound with greedy-coloring bounds.
pub fn clique_number(graph: &PowerGraph) -> Result<usize> {
    let n = graph.vertex_count();
    if n > CLIQUE_LIMIT {
        return Err(Error::TooLarge(format!("{n} vertices exceed the clique search limit {CLIQUE_LIMIT}")));
    }
    if n == 0 {
        return Ok(0);
    }
    let words = n.div_ceil(64);
    let nbrs: Vec<Vec<u64>> = (0..n).map(|v| graph.adjacency.row(v).to_vec()).collect();
    let mut all = vec![0u64; words];
    for v in 0..n {
        all[v / 64] |= 1 << (v % 64);
    }
    let mut best = 1;
    expand(&nbrs, 0, all, &mut best);
    Ok(best)
}

fn members(set: &[u64]) -> Vec<usize> {
    let mut out = Vec::new();
    for (w, &word) in set.iter().enumerate() {
        let mut b = word;
        while b != 0 {
            out.push(w * 64 + b.trailing_zeros() as usize);
            b &= b - 1;
        }
    }
    out
}

/// Greedy sequential coloring of `cand`; returns vertices with their color
/// bound, ascending by color.
fn color_order(nbrs: &[Vec<u64>], cand: &[u64]) -> Vec<(usize, usize)> {
    let mut uncolored = cand.to_vec();
    let mut out = Vec::new();
    let mut color = 0;
    while uncolored.iter().any(|&w| w != 0) {
        color += 1;
        let mut q = uncolored.clone();
        while let Some(v) = members(&q).first().copied() {
            out.push((v, color));
            uncolored[v / 64] &= !(1 << (v % 64));
            for (qw, nw) in q.iter_mut().zip(&nbrs[v]) {
                *qw &= !nw;
            }
            q[v / 64] &= !(1 << (v % 64));
        }
    }
    out
}

fn expand(nbrs: &[Vec<u64>], size: usize, mut cand: Vec<u64>, best: &mut usize) {
    let order = color_order(nbrs, &cand);
    for &(v, color) in order.iter().rev() {
        if size + color <= *best {
            return;
        }
        let next: Vec<u64> = cand.iter().zip(&nbrs[v]).map(|(a, b)| a & b).collect();
        if next.iter().all(|&w| w == 0) {
            *best = (*best).max(size + 1);
        } else {
            expand(nbrs, size + 1, next, best);
        }
        cand[v / 64] &= !(1 << (v % 64));
    }
}

/// Machine-readable adjacency: `{"vertices": N, "edges": [[u,v],...], "labels": {...}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphExport {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
    pub labels: BTreeMap<usize, String>,
}

impl GraphExport {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>, labels: Vec<String>) -> Self {
        GraphExport {
            vertices,
            edges: edges.into_iter().map(|(u, v)| [u, v]).collect(),
            labels: labels.into_iter().enumerate().collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph export serializes")
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "graph \"{name}\" {{");
        for v in 0..self.vertices {
            let label = self.labels.get(&v).map(String::as_str).unwrap_or("");
            let _ = writeln!(s, "  {v} [label=\"{label}\"];");
        }
        for [u, v] in &self.edges {
            let _ = writeln!(s, "  {u} -- {v};");
        }
        s.push_str("}\n");
        s
    }
}
