//! Exact spanning-tree counts.

mod blocks;
mod contract;
mod det;
mod enumerate;
mod multigraph;

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::factor::{factorize, Factorization};
use crate::powergraph::PowerGraph;

pub use blocks::{block_decomposition_kappa, blocks};
pub use contract::{deletion_contraction_kappa, DELETION_CONTRACTION_MAX_VERTICES};
pub use det::exact_integer_determinant;
pub use enumerate::{enumerate_spanning_trees, ENUMERATION_MAX_EDGES, ENUMERATION_MAX_VERTICES};
pub use multigraph::MultiGraph;

/// Values up to this size are factored numerically on demand.
pub const NUMERIC_FACTOR_LIMIT_DIGITS: usize = 150;

/// A tree-number together with its prime factorization when one is known.
#[derive(Clone, Debug)]
pub struct TreeNumber {
    value: BigUint,
    factorization: Option<Factorization>,
}

impl TreeNumber {
    pub fn new(value: BigUint) -> Self {
        TreeNumber { value, factorization: None }
    }

    pub fn from_factorization(f: Factorization) -> Self {
        TreeNumber { value: f.value(), factorization: Some(f) }
    }

    pub fn zero() -> Self {
        Self::new(BigUint::zero())
    }

    pub fn one() -> Self {
        Self::from_factorization(Factorization::one())
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// The symbolic factorization if present, else a numeric one for
    /// values below 10^150. Zero has none.
    pub fn factorization(&self) -> Option<Factorization> {
        if let Some(f) = &self.factorization {
            return Some(f.clone());
        }
        if self.value.is_zero() || self.value.to_string().len() > NUMERIC_FACTOR_LIMIT_DIGITS {
            return None;
        }
        factorize(&self.value)
    }

    /// Rendered as a product of prime powers, or in decimal when no
    /// factorization is available.
    pub fn factored(&self) -> String {
        match self.factorization() {
            Some(f) => f.to_string(),
            None => self.value.to_string(),
        }
    }

    pub fn mul(&self, other: &TreeNumber) -> TreeNumber {
        match (&self.factorization, &other.factorization) {
            (Some(a), Some(b)) => Self::from_factorization(a.mul(b)),
            _ => Self::new(&self.value * &other.value),
        }
    }
}

impl PartialEq for TreeNumber {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl Eq for TreeNumber {}

impl fmt::Display for TreeNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Anything with a vertex count and a list of weighted edges.
pub trait EdgeWeighted {
    fn vertex_count(&self) -> usize;
    /// `(u, v, multiplicity)` with `u < v`.
    fn weighted_edges(&self) -> Vec<(usize, usize, u64)>;
}

impl EdgeWeighted for MultiGraph {
    fn vertex_count(&self) -> usize {
        MultiGraph::vertex_count(self)
    }

    fn weighted_edges(&self) -> Vec<(usize, usize, u64)> {
        self.edges().collect()
    }
}

impl EdgeWeighted for PowerGraph {
    fn vertex_count(&self) -> usize {
        PowerGraph::vertex_count(self)
    }

    fn weighted_edges(&self) -> Vec<(usize, usize, u64)> {
        self.edges().into_iter().map(|(u, v)| (u, v, 1)).collect()
    }
}

/// `J + Q`: the Laplacian with every entry raised by one.
pub fn temperley_matrix<G: EdgeWeighted + ?Sized>(graph: &G) -> Vec<Vec<BigInt>> {
    let n = graph.vertex_count();
    let mut m = vec![vec![1i64; n]; n];
    for (u, v, k) in graph.weighted_edges() {
        let k = k as i64;
        m[u][v] -= k;
        m[v][u] -= k;
        m[u][u] += k;
        m[v][v] += k;
    }
    m.into_iter().map(|row| row.into_iter().map(BigInt::from).collect()).collect()
}

/// κ = det(J + Q) / n².
pub fn temperley_kappa<G: EdgeWeighted + ?Sized>(graph: &G) -> Result<TreeNumber> {
    let n = graph.vertex_count();
    if n == 0 {
        return Err(Error::OutOfRange("graph has no vertices".into()));
    }
    let det = exact_integer_determinant(&temperley_matrix(graph));
    let n2 = BigInt::from(n) * BigInt::from(n);
    let (q, r) = det.div_rem(&n2);
    if !r.is_zero() || q.sign() == Sign::Minus {
        return Err(Error::Inconsistent(format!("det(J+Q) = {det} is not a nonnegative multiple of {n2}")));
    }
    Ok(TreeNumber::new(q.magnitude().clone()))
}

/// Counting method used inside each block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Counter {
    MatrixTree,
    DeletionContraction,
    Enumeration,
}

impl Counter {
    pub fn count(self, graph: &MultiGraph) -> Result<TreeNumber> {
        match self {
            Counter::MatrixTree => temperley_kappa(graph),
            Counter::DeletionContraction => deletion_contraction_kappa(graph),
            Counter::Enumeration => enumerate_spanning_trees(graph),
        }
    }
}

/// `n^(n-2)`, the count for the complete graph.
pub fn cayley(n: u64) -> BigUint {
    if n <= 1 {
        return BigUint::one();
    }
    num_traits::pow(BigUint::from(n), (n - 2) as usize)
}
