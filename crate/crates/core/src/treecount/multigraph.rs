use std::collections::BTreeMap;

use crate::powergraph::PowerGraph;

/// Undirected loopless multigraph; edge `(u, v)` with `u < v` maps to its
/// multiplicity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    edges: BTreeMap<(usize, usize), u64>,
}

impl MultiGraph {
    pub fn new(n: usize) -> Self {
        MultiGraph { n, edges: BTreeMap::new() }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v, 1);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v, 1);
        }
        g
    }

    /// Add `mult` parallel copies of `{u, v}`. Loops are dropped.
    pub fn add_edge(&mut self, u: usize, v: usize, mult: u64) {
        assert!(u < self.n && v < self.n, "edge ({u}, {v}) outside {} vertices", self.n);
        if u == v || mult == 0 {
            return;
        }
        *self.edges.entry((u.min(v), u.max(v))).or_insert(0) += mult;
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Distinct vertex pairs joined by at least one edge.
    pub fn support_size(&self) -> usize {
        self.edges.len()
    }

    /// Total edge count, parallel edges counted separately.
    pub fn edge_count(&self) -> u64 {
        self.edges.values().sum()
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u64 {
        self.edges.get(&(u.min(v), u.max(v))).copied().unwrap_or(0)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.edges.iter().map(|(&(u, v), &m)| (u, v, m))
    }

    pub fn degree(&self, v: usize) -> u64 {
        self.edges().filter(|&(a, b, _)| a == v || b == v).map(|(_, _, m)| m).sum()
    }

    /// Remove every copy of `{u, v}`.
    pub fn delete_edge(&self, u: usize, v: usize) -> MultiGraph {
        let mut g = self.clone();
        g.edges.remove(&(u.min(v), u.max(v)));
        g
    }

    /// Identify `u` and `v`; edges between them become loops and vanish.
    /// The merged vertex keeps index `min(u, v)` and higher indices shift down.
    pub fn contract(&self, u: usize, v: usize) -> MultiGraph {
        let (keep, gone) = (u.min(v), u.max(v));
        let relabel = |x: usize| match x {
            x if x == gone => keep,
            x if x > gone => x - 1,
            x => x,
        };
        let mut g = MultiGraph::new(self.n - 1);
        for (a, b, m) in self.edges() {
            g.add_edge(relabel(a), relabel(b), m);
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut c = x;
            while p[c] != r {
                let next = p[c];
                p[c] = r;
                c = next;
            }
            r
        }
        let mut comps = self.n;
        for (u, v, _) in self.edges() {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a] = b;
                comps -= 1;
            }
        }
        comps == 1
    }

    /// Subgraph induced on `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> MultiGraph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = MultiGraph::new(vertices.len());
        for (u, v, m) in self.edges() {
            if pos[u] != usize::MAX && pos[v] != usize::MAX {
                g.add_edge(pos[u], pos[v], m);
            }
        }
        g
    }
}

impl From<&PowerGraph> for MultiGraph {
    fn from(pg: &PowerGraph) -> Self {
        let mut g = MultiGraph::new(pg.vertex_count());
        for (u, v) in pg.edges() {
            g.add_edge(u, v, 1);
        }
        g
    }
}
