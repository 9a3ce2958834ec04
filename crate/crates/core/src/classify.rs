//! Lower bounds on κ, the κ < 125 classification and the A5 recognition argument.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, Pow};
use serde::Serialize;

use crate::closedform::{epo_product, kappa_cyclic, kappa_epo, prime_cyclic_counts};
use crate::error::{Error, Result};
use crate::factor::Factorization;
use crate::groups::{generalized_dihedral_z3z3, spectrum, sylow_order, FiniteGroup, GroupSpec};
use crate::numtheory::{factor_u64, is_prime, primes_up_to};
use crate::powergraph::{clique_number, power_graph};
use crate::treecount::{temperley_kappa, TreeNumber};

/// `m^(m-2)`, κ of the complete graph on `m` vertices.
fn complete_kappa(m: u64) -> BigUint {
    crate::treecount::cayley(m)
}

/// The smallest prime `p` with `κ < p^(p-2)`, and the primes below it,
/// which must contain every prime divisor of a group with this κ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeSupport {
    pub bound_prime: u64,
    pub primes: Vec<u64>,
}

pub fn prime_support_bound(kappa: &BigUint) -> Result<PrimeSupport> {
    if kappa < &BigUint::one() {
        return Err(Error::OutOfRange("κ must be at least 1".into()));
    }
    let mut p = 2u64;
    loop {
        if is_prime(p) && kappa < &complete_kappa(p) {
            return Ok(PrimeSupport { bound_prime: p, primes: primes_up_to(p - 1) });
        }
        p += 1;
    }
}

/// Largest order of a `p`-element, i.e. the exponent of a Sylow `p`-subgroup's cyclic part.
fn max_p_element_order(g: &FiniteGroup, p: u64) -> u64 {
    g.element_orders()
        .iter()
        .map(|&o| o as u64)
        .filter(|&o| factor_u64(o).iter().all(|&(q, _)| q == p))
        .max()
        .unwrap_or(1)
}

/// `∏ m_p^(m_p - 2)` over primes dividing `|G|`, with `m_p` the largest
/// order of a `p`-element.
pub fn sylow_lower_bound(g: &FiniteGroup) -> BigUint {
    factor_u64(g.order() as u64)
        .into_iter()
        .map(|(p, _)| complete_kappa(max_p_element_order(g, p)))
        .product()
}

/// `∏ κ(H)` over a family of cyclic subgroups of prime-power order that
/// pairwise meet trivially. Two cyclic `p`-subgroups meet trivially exactly
/// when their subgroups of order `p` differ; larger subgroups are taken first.
pub fn cyclic_witness_bound(g: &FiniteGroup) -> BigUint {
    let mut candidates: Vec<usize> = (1..g.order())
        .filter(|&x| factor_u64(g.element_order(x) as u64).len() == 1)
        .collect();
    candidates.sort_by_key(|&x| std::cmp::Reverse(g.element_order(x)));
    let mut bottoms: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut bound = BigUint::one();
    for x in candidates {
        let o = g.element_order(x) as u64;
        let p = factor_u64(o)[0].0;
        let bottom = g.cyclic_closure(g.power(x, o / p));
        if bottoms.insert(bottom) {
            bound *= complete_kappa(o);
        }
    }
    bound
}

/// `ω^(ω-2)` for the clique number ω of `P(G)`.
pub fn clique_lower_bound(g: &FiniteGroup) -> Result<BigUint> {
    Ok(complete_kappa(clique_number(&power_graph(g))? as u64))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpoBound {
    /// `∏ p^((p-2) c_p)`.
    pub bound: TreeNumber,
    /// Whether every non-identity element has prime order, in which case
    /// the bound is exact.
    pub is_epo: bool,
}

pub fn epo_check_and_bound(g: &FiniteGroup) -> EpoBound {
    EpoBound { bound: epo_product(g), is_epo: kappa_epo(g).is_ok() }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassifiedGroup {
    pub name: String,
    /// The group in spec grammar.
    pub spec: String,
    #[serde(skip)]
    pub group_spec: GroupSpec,
    pub spectrum: Vec<u32>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationEntry {
    pub kappa_value: u64,
    pub groups: Vec<ClassifiedGroup>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Classification {
    /// Infinitely many groups; described rather than listed.
    Family { kappa_value: u64, description: String, spectrum: Vec<u32> },
    Groups(ClassificationEntry),
    NoGroup { kappa_value: u64 },
}

fn classified(name: &str, spec: GroupSpec) -> Result<ClassifiedGroup> {
    let g = spec.build()?;
    Ok(ClassifiedGroup {
        name: name.to_string(),
        spec: spec.to_string(),
        spectrum: spectrum(&g).omega.into_iter().collect(),
        group_spec: spec,
    })
}

/// Every group with `κ(G) = target`, for `target < 125`.
pub fn classify_kappa_below_125(target: u64) -> Result<Classification> {
    if !(1..125).contains(&target) {
        return Err(Error::OutOfRange(format!("classification covers 1 <= κ < 125, got {target}")));
    }
    let list: Vec<(&str, GroupSpec)> = match target {
        1 => {
            return Ok(Classification::Family {
                kappa_value: 1,
                description: "elementary abelian 2-groups".into(),
                spectrum: vec![1, 2],
            })
        }
        3 => vec![("Z3", GroupSpec::Cyclic(3)), ("S3", GroupSpec::Symmetric(3))],
        16 => vec![("Z4", GroupSpec::Cyclic(4)), ("D8", GroupSpec::Dihedral(4))],
        81 => vec![
            ("Z3xZ3", GroupSpec::ElementaryAbelian { p: 3, k: 2 }),
            ("(Z3xZ3):Z2", generalized_dihedral_z3z3()),
            ("A4", GroupSpec::Alternating(4)),
        ],
        _ => return Ok(Classification::NoGroup { kappa_value: target }),
    };
    let groups = list.into_iter().map(|(n, s)| classified(n, s)).collect::<Result<_>>()?;
    Ok(Classification::Groups(ClassificationEntry { kappa_value: target, groups }))
}

/// (elementary abelian 2-group, `P(G)` is a star, κ = 1), each decided independently.
pub fn is_star_kappa_one(g: &FiniteGroup) -> Result<(bool, bool, bool)> {
    let elementary = g.element_orders().iter().all(|&o| o <= 2);
    let pg = power_graph(g);
    let n = pg.vertex_count();
    let star = n == 1 || (pg.edge_count() == n - 1 && (0..n).any(|v| pg.degree(v) == n - 1));
    let one = temperley_kappa(&pg)?.value().is_one();
    Ok((elementary, star, one))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
}

impl From<bool> for Verdict {
    fn from(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub check: String,
    pub claim: String,
    pub computed: String,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct RecognitionReport {
    pub checks: Vec<Check>,
}

impl RecognitionReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.verdict == Verdict::Pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Order of the unitary group U4(2). Too large to build here; only its
/// Sylow 3-subgroup order is needed.
pub const U42_ORDER: u64 = 25920;

fn check(check: &str, claim: &str, computed: String, ok: bool) -> Check {
    Check { check: check.into(), claim: claim.into(), computed, verdict: ok.into() }
}

/// The arithmetic showing A5 is the only simple group with its κ.
pub fn verify_a5_recognition() -> Result<RecognitionReport> {
    let target: Factorization = "3^10*5^18".parse().expect("literal");
    let k = target.value();
    let a5 = GroupSpec::Alternating(5).build()?;
    let mut checks = Vec::new();

    let by_epo = kappa_epo(&a5)?;
    let by_matrix = temperley_kappa(&power_graph(&a5))?;
    checks.push(check(
        "kappa(A5)",
        "kappa(A5) = 3^10*5^18 by the EPO product and by the 60-vertex determinant",
        format!("epo={}, matrix-tree={}", by_epo.factored(), by_matrix.factored()),
        by_epo.value() == &k && by_matrix.value() == &k,
    ));

    let support = prime_support_bound(&k)?;
    checks.push(check(
        "prime support",
        "smallest p with kappa < p^(p-2) is 17, so pi(G) lies in {2,3,5,7,11,13}",
        format!("p={}, primes={:?}", support.bound_prime, support.primes),
        support.bound_prime == 17 && support.primes == [2, 3, 5, 7, 11, 13],
    ));

    let mut parts = Vec::new();
    let mut ok = true;
    for p in [7u64, 11, 13] {
        let lower = complete_kappa(p).pow((p + 1) as u32);
        let holds = lower > k;
        ok &= holds;
        parts.push(format!("{p}^{}>{}", (p - 2) * (p + 1), holds));
    }
    for (p, c) in prime_cyclic_counts(&a5) {
        let holds = c as u64 > p;
        ok &= holds;
        parts.push(format!("c_{p}(A5)={c}>={}", p + 1));
    }
    checks.push(check(
        "large primes",
        "p+1 subgroups of order p give kappa >= p^((p-2)(p+1)) > 3^10*5^18 for p in {7,11,13}",
        parts.join(", "),
        ok,
    ));

    let z5_ninth = kappa_cyclic(5)?.value().pow(9u32);
    checks.push(check(
        "Sylow 3 bound",
        "kappa(Z5)^9 = 5^27 exceeds 3^10*5^18, so |G_3| = 3",
        format!("kappa(Z5)^9={}, exceeds={}", Factorization::of_u64(5).pow(27), z5_ninth > k),
        z5_ninth > k && z5_ninth == BigUint::from(5u32).pow(27u32),
    ));

    let a6 = GroupSpec::Alternating(6).build()?;
    let u42_sylow3 = 3u64.pow(crate::numtheory::valuation(U42_ORDER, 3));
    let sylow3 = [("A5", sylow_order(&a5, 3)), ("A6", sylow_order(&a6, 3)), ("U4(2)", u42_sylow3)];
    let survivors: Vec<&str> = sylow3.iter().filter(|(_, s)| *s < 9).map(|(n, _)| *n).collect();
    let kappa_a6 = temperley_kappa(&power_graph(&a6))?;
    checks.push(check(
        "candidates",
        "of A5, A6, U4(2) only A5 has |G_3| = 3; kappa(A6) computed directly differs",
        format!(
            "|G_3|: {}; survivors={:?}; kappa(A6)={}",
            sylow3.iter().map(|(n, s)| format!("{n}={s}")).collect::<Vec<_>>().join(", "),
            survivors,
            kappa_a6.factored()
        ),
        survivors == ["A5"] && kappa_a6.value() != &k,
    ));

    Ok(RecognitionReport { checks })
}
