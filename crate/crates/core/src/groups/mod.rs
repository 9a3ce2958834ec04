//! Finite groups from a fixed catalog of families plus permutation generators.
//!
//! Every group is realized as `order` elements indexed `0..order` with index 0
//! the identity. Groups up to [`TABLE_LIMIT`] elements carry a full Cayley
//! table; larger ones multiply through the family's own arithmetic.

mod catalog;
mod perm;

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

pub use catalog::{catalog, generalized_dihedral_z3z3, CatalogEntry};
pub use perm::Permutation;

use crate::bits::BitMatrix;
use crate::error::{Error, Result};
use crate::numtheory::{is_prime, lcm};

pub const DEFAULT_MAX_ORDER: usize = 10_000;
pub const TABLE_LIMIT: usize = 2048;
pub const MAX_SYMMETRIC_DEGREE: u32 = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u64),
    /// `Dihedral(n)` has order `2n`.
    Dihedral(u64),
    /// `Quaternion(n)` is the dicyclic group `Q_{4n}` of order `4n`.
    Quaternion(u64),
    ElementaryAbelian { p: u64, k: u32 },
    Symmetric(u32),
    Alternating(u32),
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
    /// Nonabelian `Z_p ⋊ Z_q`, `q | p - 1`.
    SemidirectPQ { p: u64, q: u64 },
    Permutation { degree: u32, generators: Vec<Permutation> },
}

impl GroupSpec {
    pub fn product(a: GroupSpec, b: GroupSpec) -> GroupSpec {
        GroupSpec::DirectProduct(Box::new(a), Box::new(b))
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        self.build_with_cap(DEFAULT_MAX_ORDER)
    }

    pub fn build_with_cap(&self, max_order: usize) -> Result<FiniteGroup> {
        self.validate()?;
        if let Some(order) = self.order() {
            if order > max_order as u128 {
                return Err(Error::UnsupportedOrder { order, max: max_order });
            }
        }
        let name = self.canonical_name();
        let g = match *self {
            GroupSpec::Cyclic(n) => cyclic(n as u32),
            GroupSpec::Dihedral(n) => dihedral(n as u32),
            GroupSpec::Quaternion(n) => quaternion(n as u32),
            GroupSpec::ElementaryAbelian { p, k } => elementary_abelian(p as u32, k),
            GroupSpec::SemidirectPQ { p, q } => semidirect(p as u32, q as u32),
            GroupSpec::Symmetric(m) => {
                let mut gens = Vec::new();
                if m >= 2 {
                    gens.push(Permutation::from_cycles(m as usize, &[vec![1, 2]])?);
                }
                if m >= 3 {
                    gens.push(Permutation::from_cycles(m as usize, &[(1..=m as usize).collect()])?);
                }
                permutation_group(m as usize, &gens, max_order)?
            }
            GroupSpec::Alternating(m) => {
                let gens = (3..=m as usize)
                    .map(|k| Permutation::from_cycles(m as usize, &[vec![1, 2, k]]))
                    .collect::<Result<Vec<_>>>()?;
                permutation_group(m as usize, &gens, max_order)?
            }
            GroupSpec::Permutation { degree, ref generators } => {
                permutation_group(degree as usize, generators, max_order)?
            }
            GroupSpec::DirectProduct(ref a, ref b) => {
                let ga = a.build_with_cap(max_order)?;
                let gb = b.build_with_cap(max_order)?;
                direct_product_with_cap(&ga, &gb, max_order)?
            }
        };
        Ok(g.renamed(name))
    }

    /// Order implied by the parameters; `None` for permutation groups.
    pub fn order(&self) -> Option<u128> {
        match *self {
            GroupSpec::Cyclic(n) => Some(n as u128),
            GroupSpec::Dihedral(n) => Some(2 * n as u128),
            GroupSpec::Quaternion(n) => Some(4 * n as u128),
            GroupSpec::ElementaryAbelian { p, k } => (p as u128).checked_pow(k).or(Some(u128::MAX)),
            GroupSpec::Symmetric(m) => Some((1..=m as u128).product()),
            GroupSpec::Alternating(m) => Some(((1..=m as u128).product::<u128>() / 2).max(1)),
            GroupSpec::SemidirectPQ { p, q } => Some(p as u128 * q as u128),
            GroupSpec::DirectProduct(ref a, ref b) => {
                Some(a.order()?.saturating_mul(b.order()?))
            }
            GroupSpec::Permutation { .. } => None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSpec(msg));
        match *self {
            GroupSpec::Cyclic(0) => bad("cyclic order must be at least 1".into()),
            GroupSpec::Dihedral(0) => bad("dihedral parameter must be at least 1".into()),
            GroupSpec::Quaternion(0) => bad("quaternion parameter must be at least 1".into()),
            GroupSpec::Cyclic(n) | GroupSpec::Dihedral(n) | GroupSpec::Quaternion(n)
                if n > u32::MAX as u64 / 4 =>
            {
                bad(format!("parameter {n} too large"))
            }
            GroupSpec::ElementaryAbelian { p, k } => {
                if !is_prime(p) {
                    bad(format!("elementary abelian base {p} is not prime"))
                } else if k == 0 {
                    bad("elementary abelian rank must be at least 1".into())
                } else {
                    Ok(())
                }
            }
            GroupSpec::Symmetric(m) | GroupSpec::Alternating(m) => {
                if m == 0 || m > MAX_SYMMETRIC_DEGREE {
                    bad(format!("degree {m} outside 1..={MAX_SYMMETRIC_DEGREE}"))
                } else {
                    Ok(())
                }
            }
            GroupSpec::SemidirectPQ { p, q } => {
                if !is_prime(p) || !is_prime(q) {
                    bad(format!("semidirect parameters ({p}, {q}) must be prime"))
                } else if (p - 1) % q != 0 {
                    bad(format!("{q} does not divide {p} - 1"))
                } else {
                    Ok(())
                }
            }
            GroupSpec::Permutation { degree, ref generators } => {
                if degree == 0 || degree > u16::MAX as u32 {
                    return bad(format!("permutation degree {degree} out of range"));
                }
                match generators.iter().find(|g| g.degree() != degree as usize) {
                    Some(g) => bad(format!("generator {g} does not act on {degree} points")),
                    None => Ok(()),
                }
            }
            GroupSpec::DirectProduct(ref a, ref b) => {
                a.validate()?;
                b.validate()
            }
            _ => Ok(()),
        }
    }

    pub fn canonical_name(&self) -> String {
        match self {
            GroupSpec::Cyclic(n) => format!("Z{n}"),
            GroupSpec::Dihedral(n) => format!("D{}", 2 * n),
            GroupSpec::Quaternion(n) => format!("Q{}", 4 * n),
            GroupSpec::ElementaryAbelian { p, k: 1 } => format!("Z{p}"),
            GroupSpec::ElementaryAbelian { p, k } => format!("Z{p}^{k}"),
            GroupSpec::Symmetric(m) => format!("S{m}"),
            GroupSpec::Alternating(m) => format!("A{m}"),
            GroupSpec::SemidirectPQ { p, q } => format!("Z{p}:Z{q}"),
            GroupSpec::DirectProduct(a, b) => {
                format!("{}x{}", a.canonical_name(), b.canonical_name())
            }
            GroupSpec::Permutation { degree, generators } => {
                let g: Vec<String> = generators.iter().map(|g| g.to_string()).collect();
                format!("Perm{degree}<{}>", g.join(";"))
            }
        }
    }
}

/// Renders the CLI grammar (`cyclic:6`, `product:(cyclic:3)x(cyclic:2)`, ...).
impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Quaternion(n) => write!(f, "quaternion:{n}"),
            GroupSpec::ElementaryAbelian { p, k } => write!(f, "elemabelian:{p}^{k}"),
            GroupSpec::Symmetric(m) => write!(f, "sym:{m}"),
            GroupSpec::Alternating(m) => write!(f, "alt:{m}"),
            GroupSpec::SemidirectPQ { p, q } => write!(f, "semidirect:{p}:{q}"),
            GroupSpec::DirectProduct(a, b) => write!(f, "product:({a})x({b})"),
            GroupSpec::Permutation { degree, generators } => {
                let g: Vec<String> = generators.iter().map(|g| g.to_string()).collect();
                write!(f, "perm:{degree}:{}", g.join(";"))
            }
        }
    }
}

type MulFn = Arc<dyn Fn(u32, u32) -> u32 + Send + Sync>;

#[derive(Clone)]
enum Multiplier {
    Table(Arc<[u32]>),
    Oracle(MulFn),
}

/// An immutable finite group with precomputed element orders and cyclic
/// subgroups. Cheap to clone.
#[derive(Clone)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    mul: Multiplier,
    element_orders: Arc<[u32]>,
    closures: Arc<BitMatrix>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("tabled", &matches!(self.mul, Multiplier::Table(_)))
            .finish()
    }
}

impl FiniteGroup {
    /// Wrap a multiplication oracle on `0..order` with identity 0.
    fn from_oracle(name: String, order: usize, f: MulFn) -> FiniteGroup {
        let mul = if order <= TABLE_LIMIT {
            let mut table = Vec::with_capacity(order * order);
            for a in 0..order as u32 {
                for b in 0..order as u32 {
                    table.push(f(a, b));
                }
            }
            Multiplier::Table(table.into())
        } else {
            Multiplier::Oracle(f)
        };
        let mut g = FiniteGroup {
            name,
            order,
            mul,
            element_orders: Arc::from(Vec::new()),
            closures: Arc::new(BitMatrix::new(0)),
        };
        let mut closures = BitMatrix::new(order);
        let mut orders = Vec::with_capacity(order);
        for x in 0..order {
            closures.set(x, 0);
            let mut k = 1u32;
            let mut cur = x;
            while cur != 0 {
                closures.set(x, cur);
                cur = g.multiply(cur, x);
                k += 1;
            }
            // cur = x^k throughout, so k is the order at exit.
            orders.push(k);
        }
        g.element_orders = orders.into();
        g.closures = Arc::new(closures);
        g
    }

    fn renamed(mut self, name: String) -> Self {
        self.name = name;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn has_table(&self) -> bool {
        matches!(self.mul, Multiplier::Table(_))
    }

    #[inline]
    pub fn multiply(&self, a: usize, b: usize) -> usize {
        match &self.mul {
            Multiplier::Table(t) => t[a * self.order + b] as usize,
            Multiplier::Oracle(f) => f(a as u32, b as u32) as usize,
        }
    }

    pub fn power(&self, x: usize, k: u64) -> usize {
        let k = k % self.element_order(x) as u64;
        (0..k).fold(0, |acc, _| self.multiply(acc, x))
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.power(x, self.element_order(x) as u64 - 1)
    }

    pub fn element_order(&self, x: usize) -> u32 {
        self.element_orders[x]
    }

    pub fn element_orders(&self) -> &[u32] {
        &self.element_orders
    }

    /// Elements of ⟨x⟩, ascending by index.
    pub fn cyclic_closure(&self, x: usize) -> Vec<usize> {
        self.closures.row_iter(x).collect()
    }

    /// Whether `y ∈ ⟨x⟩`.
    #[inline]
    pub fn in_closure(&self, x: usize, y: usize) -> bool {
        self.closures.get(x, y)
    }

    pub(crate) fn closure_row(&self, x: usize) -> &[u64] {
        self.closures.row(x)
    }

    /// Number of elements of each order.
    pub fn order_profile(&self) -> BTreeMap<u32, usize> {
        let mut m = BTreeMap::new();
        for &o in self.element_orders.iter() {
            *m.entry(o).or_insert(0) += 1;
        }
        m
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.multiply(a, b) == self.multiply(b, a)))
    }

    /// Check associativity, identity and inverses. Exhaustive when
    /// `order <= exhaustive_limit`, otherwise on `samples` pseudo-random triples.
    pub fn check_axioms(&self, exhaustive_limit: usize, samples: usize) -> std::result::Result<(), String> {
        let n = self.order;
        for x in 0..n {
            if self.multiply(0, x) != x || self.multiply(x, 0) != x {
                return Err(format!("index 0 is not an identity at {x}"));
            }
            let inv = self.inverse(x);
            if self.multiply(x, inv) != 0 || self.multiply(inv, x) != 0 {
                return Err(format!("{x} has no inverse"));
            }
            if self.closures.row_count_ones(x) != self.element_orders[x] as usize {
                return Err(format!("|<{x}>| differs from the order of {x}"));
            }
            if n % self.element_orders[x] as usize != 0 {
                return Err(format!("order of {x} does not divide {n}"));
            }
        }
        let assoc = |a: usize, b: usize, c: usize| {
            self.multiply(self.multiply(a, b), c) == self.multiply(a, self.multiply(b, c))
        };
        if n <= exhaustive_limit {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc(a, b, c) {
                            return Err(format!("({a}{b}){c} != {a}({b}{c})"));
                        }
                    }
                }
            }
        } else {
            let mut state = 0x9E37_79B9_7F4A_7C15u64;
            let mut next = || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state % n as u64) as usize
            };
            for _ in 0..samples {
                let (a, b, c) = (next(), next(), next());
                if !assoc(a, b, c) {
                    return Err(format!("({a}{b}){c} != {a}({b}{c})"));
                }
            }
        }
        Ok(())
    }
}

fn cyclic(n: u32) -> FiniteGroup {
    FiniteGroup::from_oracle(String::new(), n as usize, Arc::new(move |a, b| (a + b) % n))
}

// x^i at i < n, x^i y at n + i.
fn dihedral(n: u32) -> FiniteGroup {
    FiniteGroup::from_oracle(
        String::new(),
        2 * n as usize,
        Arc::new(move |a, b| {
            let (i, s) = (a % n, a / n);
            let (j, t) = (b % n, b / n);
            let rot = if s == 0 { (i + j) % n } else { (i + n - j) % n };
            rot + n * ((s + t) % 2)
        }),
    )
}

// x^i at i < 2n, x^i y at 2n + i; y x = x^{-1} y, y^2 = x^n.
fn quaternion(n: u32) -> FiniteGroup {
    let m = 2 * n;
    FiniteGroup::from_oracle(
        String::new(),
        2 * m as usize,
        Arc::new(move |a, b| {
            let (i, s) = (a % m, a / m);
            let (j, t) = (b % m, b / m);
            match (s, t) {
                (0, _) => (i + j) % m + m * t,
                (_, 0) => (i + m - j) % m + m,
                _ => (i + m - j + n) % m,
            }
        }),
    )
}

fn elementary_abelian(p: u32, k: u32) -> FiniteGroup {
    let order = (p as usize).pow(k);
    FiniteGroup::from_oracle(
        String::new(),
        order,
        Arc::new(move |mut a, mut b| {
            let mut out = 0;
            let mut place = 1;
            for _ in 0..k {
                out += ((a % p + b % p) % p) * place;
                a /= p;
                b /= p;
                place *= p;
            }
            out
        }),
    )
}

/// Smallest r > 1 of multiplicative order q modulo p.
fn semidirect_root(p: u32, q: u32) -> u32 {
    (2..p)
        .find(|&r| {
            let mut x = 1u64;
            let mut ord = 0;
            loop {
                x = x * r as u64 % p as u64;
                ord += 1;
                if x == 1 {
                    break;
                }
            }
            ord == q
        })
        .expect("q divides p - 1")
}

// x^a y^b at b*p + a with y x y^{-1} = x^r.
fn semidirect(p: u32, q: u32) -> FiniteGroup {
    let r = semidirect_root(p, q) as u64;
    let mut rpow = vec![1u64; q as usize];
    for b in 1..q as usize {
        rpow[b] = rpow[b - 1] * r % p as u64;
    }
    FiniteGroup::from_oracle(
        String::new(),
        (p * q) as usize,
        Arc::new(move |x, y| {
            let (a, b) = (x % p, x / p);
            let (c, d) = (y % p, y / p);
            let e = (a as u64 + c as u64 * rpow[b as usize]) % p as u64;
            e as u32 + p * ((b + d) % q)
        }),
    )
}

fn permutation_group(degree: usize, gens: &[Permutation], max_order: usize) -> Result<FiniteGroup> {
    let id = Permutation::identity(degree);
    let mut elements = vec![id.clone()];
    let mut index: HashMap<Permutation, u32> = HashMap::from([(id, 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(e) = queue.pop_front() {
        for g in gens {
            let next = elements[e].then(g);
            if !index.contains_key(&next) {
                if elements.len() == max_order {
                    return Err(Error::UnsupportedOrder { order: elements.len() as u128 + 1, max: max_order });
                }
                index.insert(next.clone(), elements.len() as u32);
                queue.push_back(elements.len());
                elements.push(next);
            }
        }
    }
    let order = elements.len();
    let data = Arc::new((elements, index));
    Ok(FiniteGroup::from_oracle(
        String::new(),
        order,
        Arc::new(move |a, b| {
            let (els, idx) = &*data;
            idx[&els[a as usize].then(&els[b as usize])]
        }),
    ))
}

pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    direct_product_with_cap(g, h, DEFAULT_MAX_ORDER)
}

/// `g × h` with pair `(a, b)` at index `a * |h| + b`.
pub fn direct_product_with_cap(g: &FiniteGroup, h: &FiniteGroup, max_order: usize) -> Result<FiniteGroup> {
    let order = g.order() as u128 * h.order() as u128;
    if order > max_order as u128 {
        return Err(Error::UnsupportedOrder { order, max: max_order });
    }
    let m = h.order() as u32;
    let (g2, h2) = (g.clone(), h.clone());
    let prod = FiniteGroup::from_oracle(
        format!("{}x{}", g.name(), h.name()),
        order as usize,
        Arc::new(move |x, y| {
            let a = g2.multiply((x / m) as usize, (y / m) as usize) as u32;
            let b = h2.multiply((x % m) as usize, (y % m) as usize) as u32;
            a * m + b
        }),
    );
    debug_assert!((0..prod.order()).all(|x| {
        let (a, b) = (x / m as usize, x % m as usize);
        prod.element_order(x) as u64 == lcm(g.element_order(a) as u64, h.element_order(b) as u64)
    }));
    Ok(prod)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    /// Element orders ω(G).
    pub omega: BTreeSet<u32>,
    /// Members of ω(G) maximal under divisibility, μ(G).
    pub mu: BTreeSet<u32>,
}

pub fn spectrum(g: &FiniteGroup) -> Spectrum {
    let omega: BTreeSet<u32> = g.element_orders().iter().copied().collect();
    let mu = omega
        .iter()
        .copied()
        .filter(|&a| !omega.iter().any(|&b| b != a && b % a == 0))
        .collect();
    Spectrum { omega, mu }
}

/// Number of distinct cyclic subgroups of prime order `p`.
pub fn count_cyclic_subgroups(g: &FiniteGroup, p: u64) -> Result<usize> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let distinct: HashSet<&[u64]> = (0..g.order())
        .filter(|&x| g.element_order(x) as u64 == p)
        .map(|x| g.closure_row(x))
        .collect();
    Ok(distinct.len())
}

/// Largest power of `p` dividing the group order.
pub fn sylow_order(g: &FiniteGroup, p: u64) -> u64 {
    p.pow(crate::numtheory::valuation(g.order() as u64, p))
}

#[cfg(test)]
mod tests;
