//! Closed-form tree-numbers for cyclic, dihedral, quaternion, EPO and
//! related families, assembled with symbolic factorizations.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor::FactorLedger;
use crate::groups::{count_cyclic_subgroups, FiniteGroup};
use crate::numtheory::{divisors, factor_u64, is_prime, totient};
use crate::powergraph::{degree_in_cyclic, GraphExport};
use crate::treecount::{exact_integer_determinant, TreeNumber};

/// Subset expansion gives up beyond this many middle divisors.
pub const EXPANSION_DIVISOR_LIMIT: usize = 20;

/// Divisor data of `Z_n`. Index 0 is `d_1 = n`, the last index is `d_k = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorProfile {
    pub n: u64,
    pub divisors: Vec<u64>,
    pub totients: Vec<u64>,
    /// Degree in `P(Z_n)` of an element of order `d_i`.
    pub degrees: Vec<u64>,
}

impl DivisorProfile {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange("n must be positive".into()));
        }
        let mut ds = divisors(n);
        ds.reverse();
        let totients = ds.iter().map(|&d| totient(d)).collect();
        let degrees = ds
            .iter()
            .map(|&d| if n == 1 { Ok(0) } else { degree_in_cyclic(n, (n / d) % n) })
            .collect::<Result<_>>()?;
        Ok(DivisorProfile { n, divisors: ds, totients, degrees })
    }

    pub fn k(&self) -> usize {
        self.divisors.len()
    }

    /// `m_i = n_i + 1`.
    pub fn m(&self, i: usize) -> u64 {
        self.degrees[i] + 1
    }

    /// Indices `1..k-1`, i.e. every divisor other than `n` and `1`.
    pub fn middle(&self) -> std::ops::Range<usize> {
        if self.k() <= 2 {
            1..1
        } else {
            1..self.k() - 1
        }
    }

    pub fn middle_divisors(&self) -> Vec<u64> {
        self.middle().map(|i| self.divisors[i]).collect()
    }

    /// `λ_i = m_i / φ(d_i)` over the middle indices.
    pub fn lambdas(&self) -> Vec<BigRational> {
        self.middle().map(|i| ratio(self.m(i), self.totients[i])).collect()
    }

    /// `γ_i = n_i / φ(d_i)` over the middle indices.
    pub fn gammas(&self) -> Vec<BigRational> {
        self.middle().map(|i| ratio(self.degrees[i], self.totients[i])).collect()
    }

    pub fn phi(&self) -> BigRational {
        self.lambdas().into_iter().fold(BigRational::one(), |a, b| a * b)
    }

    pub fn psi(&self) -> BigRational {
        self.gammas().into_iter().fold(BigRational::one(), |a, b| a * b)
    }
}

fn ratio(a: u64, b: u64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

pub fn divisor_profile(n: u64) -> Result<DivisorProfile> {
    DivisorProfile::new(n)
}

/// A graph on a set of divisors, as vertex labels and index pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisorGraph {
    pub vertices: Vec<u64>,
    pub edges: Vec<(usize, usize)>,
}

impl DivisorGraph {
    /// `D(n)`: all divisors, joined when one divides the other.
    pub fn full(n: u64) -> Self {
        let mut vs = divisors(n);
        vs.reverse();
        Self::on(vs, true)
    }

    /// `D(n)` with `n` and `1` removed, or its complement when `complement`.
    pub fn middle(n: u64, complement: bool) -> Self {
        let mut vs = divisors(n);
        vs.reverse();
        let vs = if vs.len() <= 2 { Vec::new() } else { vs[1..vs.len() - 1].to_vec() };
        Self::on(vs, !complement)
    }

    fn on(vertices: Vec<u64>, comparable: bool) -> Self {
        let mut edges = Vec::new();
        for i in 0..vertices.len() {
            for j in i + 1..vertices.len() {
                let (a, b) = (vertices[i], vertices[j]);
                if (a % b == 0 || b % a == 0) == comparable {
                    edges.push((i, j));
                }
            }
        }
        DivisorGraph { vertices, edges }
    }

    pub fn adjacency(&self) -> Vec<Vec<bool>> {
        let n = self.vertices.len();
        let mut a = vec![vec![false; n]; n];
        for &(i, j) in &self.edges {
            a[i][j] = true;
            a[j][i] = true;
        }
        a
    }

    /// Index-based export with divisors as vertex labels.
    pub fn to_export(&self) -> GraphExport {
        GraphExport::new(self.vertices.len(), self.edges.clone(), self.vertices.iter().map(|d| d.to_string()).collect())
    }
}

/// Determinant over exact rationals by Gaussian elimination.
pub fn rational_determinant(matrix: &[Vec<BigRational>]) -> BigRational {
    let n = matrix.len();
    assert!(matrix.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    let mut a = matrix.to_vec();
    let mut det = BigRational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return BigRational::zero();
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let pivot = a[k][k].clone();
        det *= &pivot;
        for r in k + 1..n {
            if a[r][k].is_zero() {
                continue;
            }
            let f = &a[r][k] / &pivot;
            for c in k..n {
                let t = &f * &a[k][c];
                a[r][c] -= t;
            }
        }
    }
    det
}

/// `det(diag(w) + A)` where `A` is the complement adjacency on the middle divisors.
fn weighted_complement_det(n: u64, weights: &[BigRational]) -> BigRational {
    let adj = DivisorGraph::middle(n, true).adjacency();
    let m: Vec<Vec<BigRational>> = (0..weights.len())
        .map(|i| {
            (0..weights.len())
                .map(|j| {
                    if i == j {
                        weights[i].clone()
                    } else if adj[i][j] {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    rational_determinant(&m)
}

/// `Σ_S ∏_{i∈S} w_i · det A(middle \ S)` summed over every subset `S`.
fn subset_expansion(n: u64, weights: &[BigRational]) -> Result<BigRational> {
    let t = weights.len();
    if t > EXPANSION_DIVISOR_LIMIT {
        return Err(Error::TooManyDivisors { count: t, limit: EXPANSION_DIVISOR_LIMIT });
    }
    let adj = DivisorGraph::middle(n, true).adjacency();
    let mut total = BigRational::zero();
    for mask in 0u32..(1 << t) {
        let rest: Vec<usize> = (0..t).filter(|&i| mask & (1 << i) == 0).collect();
        let sub: Vec<Vec<BigInt>> = rest
            .iter()
            .map(|&i| rest.iter().map(|&j| BigInt::from(adj[i][j] as u8)).collect())
            .collect();
        let d = exact_integer_determinant(&sub);
        if d.is_zero() {
            continue;
        }
        let w = (0..t)
            .filter(|&i| mask & (1 << i) != 0)
            .fold(BigRational::one(), |acc, i| acc * &weights[i]);
        total += w * BigRational::from_integer(d);
    }
    Ok(total)
}

/// Build `prefix · core / denom` where `prefix = ∏ base^exp` and `denom`
/// is a rational; the result must be a nonnegative integer. The
/// factorization is assembled from the parts rather than by factoring the
/// product.
fn assemble(prefix: &[(u64, u64)], core: &BigRational, denom: &BigRational) -> Result<TreeNumber> {
    let mut value = BigRational::from_integer(BigInt::one());
    for &(b, e) in prefix {
        value *= BigRational::from_integer(num_traits::pow(BigInt::from(b), e as usize));
    }
    value = value * core / denom;
    if !value.is_integer() || value.is_negative() {
        return Err(Error::Inconsistent(format!("closed form evaluates to {value}")));
    }
    let int = value.to_integer().magnitude().clone();
    if int.is_zero() {
        return Ok(TreeNumber::zero());
    }
    let mut ledger = FactorLedger::new();
    for &(b, e) in prefix {
        if b > 1 {
            ledger.mul_u64(b, e as i64);
        }
    }
    let ok = [(core.numer(), 1), (core.denom(), -1), (denom.numer(), -1), (denom.denom(), 1)]
        .into_iter()
        .all(|(x, e)| x.is_one() || ledger.mul_big(x.magnitude(), e));
    if !ok {
        return Ok(TreeNumber::new(int));
    }
    let f = ledger.finish()?;
    if f.value() != int {
        return Err(Error::Inconsistent("symbolic factorization disagrees with value".into()));
    }
    Ok(TreeNumber::from_factorization(f))
}

fn cyclic_prefix(p: &DivisorProfile) -> Vec<(u64, u64)> {
    (0..p.k()).map(|i| (p.m(i), p.totients[i])).collect()
}

fn cyclic_denominator(p: &DivisorProfile) -> BigRational {
    p.phi() * BigRational::from_integer(BigInt::from(p.n) * BigInt::from(p.n))
}

/// κ(Z_n), with the subset sum evaluated as a single determinant.
pub fn kappa_cyclic(n: u64) -> Result<TreeNumber> {
    let p = DivisorProfile::new(n)?;
    if n == 1 {
        return Ok(TreeNumber::one());
    }
    let core = weighted_complement_det(n, &p.lambdas());
    assemble(&cyclic_prefix(&p), &core, &cyclic_denominator(&p))
}

/// κ(Z_n) by summing over every subset of middle divisors.
pub fn kappa_cyclic_expansion(n: u64) -> Result<TreeNumber> {
    let p = DivisorProfile::new(n)?;
    if n == 1 {
        return Ok(TreeNumber::one());
    }
    let core = subset_expansion(n, &p.lambdas())?;
    assemble(&cyclic_prefix(&p), &core, &cyclic_denominator(&p))
}

fn reduced_parts(n: u64) -> Result<(DivisorProfile, Vec<(u64, u64)>, BigRational)> {
    if n == 1 {
        return Err(Error::TrivialGroup);
    }
    let p = DivisorProfile::new(n)?;
    let prefix = (0..p.k() - 1).map(|i| (p.degrees[i], p.totients[i])).collect();
    let denom = p.psi() * BigRational::from_integer(BigInt::from(n - 1) * BigInt::from(n - 1));
    Ok((p, prefix, denom))
}

/// κ(Z_n^#), the identity removed.
pub fn kappa_cyclic_reduced(n: u64) -> Result<TreeNumber> {
    let (p, prefix, denom) = reduced_parts(n)?;
    let core = weighted_complement_det(n, &p.gammas());
    assemble(&prefix, &core, &denom)
}

/// κ(Z_n^#) by subset expansion.
pub fn kappa_cyclic_reduced_expansion(n: u64) -> Result<TreeNumber> {
    let (p, prefix, denom) = reduced_parts(n)?;
    let core = subset_expansion(n, &p.gammas())?;
    assemble(&prefix, &core, &denom)
}

fn check_distinct_primes(p: u64, q: u64) -> Result<()> {
    for x in [p, q] {
        if !is_prime(x) {
            return Err(Error::NotPrime(x));
        }
    }
    if p == q {
        return Err(Error::EqualPrimes(p));
    }
    Ok(())
}

fn from_powers(parts: &[(u64, u64)]) -> TreeNumber {
    let mut ledger = FactorLedger::new();
    for &(b, e) in parts {
        if b == 0 {
            return if e == 0 { TreeNumber::one() } else { TreeNumber::zero() };
        }
        if b > 1 {
            ledger.mul_u64(b, e as i64);
        }
    }
    TreeNumber::from_factorization(ledger.finish().expect("nonnegative exponents"))
}

/// κ(Z_pq) = n^{(p-1)(q-1)} (n-p+1)^{q-2} (n-q+1)^{p-2} (n-p-q+2).
pub fn kappa_pq(p: u64, q: u64) -> Result<TreeNumber> {
    check_distinct_primes(p, q)?;
    let n = p * q;
    Ok(from_powers(&[(n, (p - 1) * (q - 1)), (n - p + 1, q - 2), (n - q + 1, p - 2), (n - p - q + 2, 1)]))
}

/// κ(Z_pq^#) = (n-1)^{(p-1)(q-1)-1} (n-p)^{q-2} (n-q)^{p-2} (n-p-q+1).
pub fn kappa_pq_reduced(p: u64, q: u64) -> Result<TreeNumber> {
    check_distinct_primes(p, q)?;
    let n = p * q;
    Ok(from_powers(&[(n - 1, (p - 1) * (q - 1) - 1), (n - p, q - 2), (n - q, p - 2), (n - p - q + 1, 1)]))
}

/// κ(D_2n) = κ(Z_n): the reflections hang off the identity as pendant edges.
pub fn kappa_dihedral(n: u64) -> Result<TreeNumber> {
    kappa_cyclic(n)
}

/// κ(Q_4n^#) = 3^n κ(Z_2n^#).
pub fn kappa_quaternion_reduced(n: u64) -> Result<TreeNumber> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be positive".into()));
    }
    Ok(from_powers(&[(3, n)]).mul(&kappa_cyclic_reduced(2 * n)?))
}

fn check_pow2(n: u64) -> Result<()> {
    if n == 0 || !n.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(n));
    }
    Ok(())
}

/// κ(Q_4n^#) = 3^n (2n-1)^{2n-3} for n a power of two.
pub fn kappa_quaternion_reduced_pow2(n: u64) -> Result<TreeNumber> {
    check_pow2(n)?;
    if n == 1 {
        // 2n - 3 < 0 but the base is 1.
        return Ok(from_powers(&[(3, 1)]));
    }
    Ok(from_powers(&[(3, n), (2 * n - 1, 2 * n - 3)]))
}

/// κ(Q_4n) = 2^{5n-1} n^{2n-2} for n a power of two.
pub fn kappa_quaternion_pow2(n: u64) -> Result<TreeNumber> {
    check_pow2(n)?;
    Ok(from_powers(&[(2, 5 * n - 1), (n, 2 * n - 2)]))
}

/// Number of subgroups of order `p` for each prime `p` dividing `|G|`.
pub fn prime_cyclic_counts(g: &FiniteGroup) -> Vec<(u64, usize)> {
    factor_u64(g.order() as u64)
        .into_iter()
        .map(|(p, _)| (p, count_cyclic_subgroups(g, p).expect("prime")))
        .collect()
}

/// `∏ p^{(p-2) c_p}` over the primes dividing `|G|`.
pub fn epo_product(g: &FiniteGroup) -> TreeNumber {
    let parts: Vec<(u64, u64)> =
        prime_cyclic_counts(g).into_iter().map(|(p, c)| (p, (p - 2) * c as u64)).collect();
    from_powers(&parts)
}

/// κ of a group whose non-identity elements all have prime order.
pub fn kappa_epo(g: &FiniteGroup) -> Result<TreeNumber> {
    if let Some(&bad) = g.element_orders().iter().find(|&&o| o != 1 && !is_prime(o as u64)) {
        return Err(Error::NotEpo(bad));
    }
    Ok(epo_product(g))
}

/// κ((Z_p)^k) = p^{((p^k-1)/(p-1))(p-2)}.
pub fn kappa_elementary_abelian(p: u64, k: u32) -> Result<TreeNumber> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let subgroups = (0..k).map(|i| BigUint::from(p).pow(i)).sum::<BigUint>();
    let exp = (subgroups * (p - 2))
        .to_u64()
        .ok_or_else(|| Error::TooLarge("exponent overflows u64".into()))?;
    Ok(from_powers(&[(p, exp)]))
}

/// κ(Z_p ⋊ Z_q) = p^{p-2} q^{p(q-2)} for q < p with q | p - 1.
pub fn kappa_semidirect_pq(p: u64, q: u64) -> Result<TreeNumber> {
    if !is_prime(p) || !is_prime(q) || q >= p || (p - 1) % q != 0 {
        return Err(Error::InvalidPair { p, q });
    }
    Ok(from_powers(&[(p, p - 2), (q, p * (q - 2))]))
}

#[cfg(test)]
mod tests;
