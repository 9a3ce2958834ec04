use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{MultiGraph, TreeNumber};
use crate::error::{Error, Result};

pub const DELETION_CONTRACTION_MAX_VERTICES: usize = 14;

/// `κ(Γ) = κ(Γ - e) + κ(Γ · e)`, with all `m` parallel copies of `e`
/// handled at once as `κ(Γ - me) + m·κ(Γ · e)`. Subresults are memoized
/// per call on a degree-refined relabelling of the multiplicity matrix.
pub fn deletion_contraction_kappa(graph: &MultiGraph) -> Result<TreeNumber> {
    let n = graph.vertex_count();
    if n > DELETION_CONTRACTION_MAX_VERTICES {
        return Err(Error::TooLarge(format!(
            "deletion-contraction is limited to {DELETION_CONTRACTION_MAX_VERTICES} vertices"
        )));
    }
    if n == 0 {
        return Err(Error::OutOfRange("graph has no vertices".into()));
    }
    let mut m = Mat::new(n);
    for (u, v, k) in graph.edges() {
        m.set(u, v, k);
    }
    let mut memo = HashMap::new();
    Ok(TreeNumber::new(kappa(&m, &mut memo)))
}

#[derive(Clone)]
struct Mat {
    n: usize,
    cells: Vec<u64>,
}

impl Mat {
    fn new(n: usize) -> Self {
        Mat { n, cells: vec![0; n * n] }
    }

    fn get(&self, u: usize, v: usize) -> u64 {
        self.cells[u * self.n + v]
    }

    fn set(&mut self, u: usize, v: usize, k: u64) {
        self.cells[u * self.n + v] = k;
        self.cells[v * self.n + u] = k;
    }

    fn degree(&self, v: usize) -> u64 {
        self.cells[v * self.n..(v + 1) * self.n].iter().sum()
    }

    fn connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in 0..self.n {
                if self.get(u, v) > 0 && !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// Merge `b` into `a` (a < b), dropping the loop and removing row `b`.
    fn contract(&self, a: usize, b: usize) -> Mat {
        let old = |x: usize| if x >= b { x + 1 } else { x };
        let mut out = Mat::new(self.n - 1);
        for i in 0..out.n {
            for j in i + 1..out.n {
                let (oi, oj) = (old(i), old(j));
                let mut k = self.get(oi, oj);
                if oi == a {
                    k += self.get(b, oj);
                } else if oj == a {
                    k += self.get(oi, b);
                }
                out.set(i, j, k);
            }
        }
        out
    }

    /// Upper triangle after sorting vertices by (degree, neighbor multiplicities).
    /// Equal keys describe isomorphic graphs.
    fn key(&self) -> Vec<u64> {
        let sig = |v: usize| {
            let mut nb: Vec<u64> = (0..self.n).map(|w| self.get(v, w)).filter(|&k| k > 0).collect();
            nb.sort_unstable();
            (self.degree(v), nb)
        };
        let mut order: Vec<usize> = (0..self.n).collect();
        let sigs: Vec<_> = order.iter().map(|&v| sig(v)).collect();
        order.sort_by(|&x, &y| sigs[x].cmp(&sigs[y]));
        let mut key = Vec::with_capacity(1 + self.n * (self.n - 1) / 2);
        key.push(self.n as u64);
        for i in 0..self.n {
            for j in i + 1..self.n {
                key.push(self.get(order[i], order[j]));
            }
        }
        key
    }
}

fn kappa(m: &Mat, memo: &mut HashMap<Vec<u64>, BigUint>) -> BigUint {
    match m.n {
        1 => return BigUint::one(),
        2 => return BigUint::from(m.get(0, 1)),
        _ => {}
    }
    if !m.connected() {
        return BigUint::zero();
    }
    let key = m.key();
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    // Branch on the heaviest edge at a minimum-degree vertex.
    let v = (0..m.n).min_by_key(|&v| m.degree(v)).expect("nonempty");
    let u = (0..m.n).filter(|&u| u != v).max_by_key(|&u| m.get(v, u)).expect("connected");
    let k = m.get(v, u);
    let mut deleted = m.clone();
    deleted.set(u, v, 0);
    let contracted = m.contract(u.min(v), u.max(v));
    let result = kappa(&deleted, memo) + BigUint::from(k) * kappa(&contracted, memo);
    memo.insert(key, result.clone());
    result
}
