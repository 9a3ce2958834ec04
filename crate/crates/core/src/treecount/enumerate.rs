use num_bigint::BigUint;

use super::{MultiGraph, TreeNumber};
use crate::error::{Error, Result};

pub const ENUMERATION_MAX_VERTICES: usize = 12;
pub const ENUMERATION_MAX_EDGES: u64 = 24;

/// Count spanning trees by walking every acyclic edge subset.
///
/// Each vertex pair is decided once; choosing a pair of multiplicity `m`
/// stands for `m` distinct trees. Branches die as soon as the chosen edges
/// close a cycle or the undecided edges can no longer connect the graph.
pub fn enumerate_spanning_trees(graph: &MultiGraph) -> Result<TreeNumber> {
    let n = graph.vertex_count();
    if n > ENUMERATION_MAX_VERTICES && graph.edge_count() > ENUMERATION_MAX_EDGES {
        return Err(Error::TooLarge(format!(
            "enumeration needs at most {ENUMERATION_MAX_VERTICES} vertices or {ENUMERATION_MAX_EDGES} edges"
        )));
    }
    if n == 0 {
        return Err(Error::OutOfRange("graph has no vertices".into()));
    }
    let edges: Vec<(usize, usize, u64)> = graph.edges().collect();
    let comp: Vec<usize> = (0..n).collect();
    let mut search = Search { n, edges: &edges };
    let count = search.count(0, comp, 0).ok_or_else(|| Error::TooLarge("tree count overflows u128".into()))?;
    Ok(TreeNumber::new(BigUint::from(count)))
}

struct Search<'a> {
    n: usize,
    edges: &'a [(usize, usize, u64)],
}

impl Search<'_> {
    /// `comp[v]` labels the component of `v` under the chosen edges.
    fn count(&mut self, i: usize, comp: Vec<usize>, chosen: usize) -> Option<u128> {
        if chosen == self.n - 1 {
            return Some(1);
        }
        if chosen + (self.edges.len() - i) < self.n - 1 {
            return Some(0);
        }
        let (u, v, m) = self.edges[i];
        let mut total = 0u128;
        if comp[u] != comp[v] {
            let (from, to) = (comp[v], comp[u]);
            let merged: Vec<usize> = comp.iter().map(|&c| if c == from { to } else { c }).collect();
            total = self.count(i + 1, merged, chosen + 1)?.checked_mul(m as u128)?;
        }
        if self.still_connectable(i + 1, &comp) {
            total = total.checked_add(self.count(i + 1, comp, chosen)?)?;
        }
        Some(total)
    }

    /// Whether chosen components plus edges `from..` span every vertex.
    fn still_connectable(&self, from: usize, comp: &[usize]) -> bool {
        let mut label = comp.to_vec();
        let mut parts = {
            let mut seen = vec![false; self.n];
            comp.iter().filter(|&&c| !std::mem::replace(&mut seen[c], true)).count()
        };
        for &(u, v, _) in &self.edges[from..] {
            let (a, b) = (label[u], label[v]);
            if a != b {
                for l in label.iter_mut() {
                    if *l == b {
                        *l = a;
                    }
                }
                parts -= 1;
                if parts == 1 {
                    return true;
                }
            }
        }
        parts == 1
    }
}
