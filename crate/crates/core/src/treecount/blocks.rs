use super::{Counter, MultiGraph, TreeNumber};
use crate::error::{Error, Result};

/// Vertex sets of the biconnected components (blocks), found by an
/// iterative Tarjan edge-stack search over the simple support graph.
/// A graph with one vertex and no edges is a single block.
pub fn blocks(graph: &MultiGraph) -> Vec<Vec<usize>> {
    let n = graph.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for (u, v, _) in graph.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut out = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        if adj[root].is_empty() {
            disc[root] = timer;
            timer += 1;
            out.push(vec![root]);
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        // (vertex, parent, next neighbor position)
        let mut frames = vec![(root, UNSEEN, 0usize)];
        while let Some(&mut (v, parent, ref mut next)) = frames.last_mut() {
            if *next < adj[v].len() {
                let w = adj[v][*next];
                *next += 1;
                if disc[w] == UNSEEN {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    edge_stack.push((v, w));
                    frames.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            frames.pop();
            if let Some(&(p, _, _)) = frames.last() {
                low[p] = low[p].min(low[v]);
                if low[v] >= disc[p] {
                    let mut block = Vec::new();
                    while let Some((a, b)) = edge_stack.pop() {
                        block.push(a);
                        block.push(b);
                        if (a, b) == (p, v) {
                            break;
                        }
                    }
                    block.sort_unstable();
                    block.dedup();
                    out.push(block);
                }
            }
        }
    }
    out
}

/// κ as the product of κ over blocks, each block counted by `inner`.
pub fn block_decomposition_kappa(graph: &MultiGraph, inner: Counter) -> Result<TreeNumber> {
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    blocks(graph)
        .iter()
        .map(|b| inner.count(&graph.induced(b)))
        .try_fold(TreeNumber::one(), |acc, k| Ok(acc.mul(&k?)))
}
