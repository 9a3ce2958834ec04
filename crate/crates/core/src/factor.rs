//! Prime-power factorizations of tree-numbers.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_prime::nt_funcs::factors;
use num_prime::FactorizationConfig;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numtheory::factor_u64;

/// A positive integer written as a product of prime powers, primes ascending.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Factorization {
    powers: BTreeMap<BigUint, u32>,
}

impl Factorization {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_powers<I: IntoIterator<Item = (BigUint, u32)>>(powers: I) -> Self {
        let mut f = Self::default();
        for (p, e) in powers {
            if e > 0 {
                *f.powers.entry(p).or_insert(0) += e;
            }
        }
        f
    }

    pub fn of_u64(n: u64) -> Self {
        assert!(n > 0, "zero has no factorization");
        Self::from_powers(factor_u64(n).into_iter().map(|(p, e)| (BigUint::from(p), e)))
    }

    pub fn powers(&self) -> impl Iterator<Item = (&BigUint, u32)> {
        self.powers.iter().map(|(p, &e)| (p, e))
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.powers.get(&BigUint::from(p)).copied().unwrap_or(0)
    }

    pub fn primes(&self) -> Vec<BigUint> {
        self.powers.keys().cloned().collect()
    }

    pub fn value(&self) -> BigUint {
        self.powers
            .iter()
            .fold(BigUint::one(), |acc, (p, &e)| acc * p.pow(e))
    }

    pub fn mul(&self, other: &Factorization) -> Factorization {
        let mut out = self.clone();
        for (p, &e) in &other.powers {
            *out.powers.entry(p.clone()).or_insert(0) += e;
        }
        out
    }

    pub fn pow(&self, k: u32) -> Factorization {
        Factorization {
            powers: self.powers.iter().map(|(p, &e)| (p.clone(), e * k)).collect(),
        }
    }
}

/// Renders `2^14*3^6*5*131`; exponent 1 is omitted and the empty product is `1`.
impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.powers.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, &e)) in self.powers.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Factorization {
    type Err = Error;

    /// Accepts `1`, `2^4*3^2*7` and unicode middle dots as separators.
    /// Bases must be prime.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Self::one());
        }
        let mut f = Self::default();
        for term in s.split(['*', '·']) {
            let term = term.trim();
            let (base, exp) = match term.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (term, "1"),
            };
            let bad = || Error::OutOfRange(format!("malformed factor `{term}` in `{s}`"));
            let p: BigUint = base.parse().map_err(|_| bad())?;
            let e: u32 = exp.parse().map_err(|_| bad())?;
            if let Some(small) = p.to_u64() {
                if !crate::numtheory::is_prime(small) {
                    return Err(Error::NotPrime(small));
                }
            }
            f = f.mul(&Self::from_powers([(p, e)]));
        }
        Ok(f)
    }
}

/// Numerically factor `n`; `None` if some cofactor resists the configured
/// Pollard-rho budget.
pub fn factorize(n: &BigUint) -> Option<Factorization> {
    if n.is_zero() {
        return None;
    }
    if n.is_one() {
        return Some(Factorization::one());
    }
    if let Some(small) = n.to_u64() {
        return Some(Factorization::of_u64(small));
    }
    let mut config = FactorizationConfig::default();
    config.rho_trials = 64;
    let (found, rest) = factors(n.clone(), Some(config));
    if rest.is_some() {
        return None;
    }
    Some(Factorization::from_powers(found.into_iter().map(|(p, e)| (p, e as u32))))
}

/// Signed exponent accumulator for assembling closed forms symbolically:
/// numerator and denominator primes cancel, and the result must be integral.
#[derive(Clone, Debug, Default)]
pub struct FactorLedger {
    exps: BTreeMap<BigUint, i64>,
}

impl FactorLedger {
    pub fn new() -> Self {
        Self::default()
    }

    /// Multiply by `base^exp` (exp may be negative). `base` must be nonzero.
    pub fn mul_u64(&mut self, base: u64, exp: i64) -> &mut Self {
        assert!(base > 0);
        for (p, e) in factor_u64(base) {
            *self.exps.entry(BigUint::from(p)).or_insert(0) += exp * e as i64;
        }
        self
    }

    pub fn mul_factored(&mut self, f: &Factorization, exp: i64) -> &mut Self {
        for (p, e) in f.powers() {
            *self.exps.entry(p.clone()).or_insert(0) += exp * e as i64;
        }
        self
    }

    /// Multiply by `n^exp` for a big integer, factoring it numerically.
    /// Returns false when `n` could not be fully factored.
    pub fn mul_big(&mut self, n: &BigUint, exp: i64) -> bool {
        match factorize(n) {
            Some(f) => {
                self.mul_factored(&f, exp);
                true
            }
            None => false,
        }
    }

    pub fn finish(self) -> Result<Factorization> {
        let mut powers = Vec::new();
        for (p, e) in self.exps {
            match e {
                0 => {}
                e if e > 0 => powers.push((p, e as u32)),
                e => {
                    return Err(Error::Inconsistent(format!(
                        "closed form leaves {p}^{e} in the denominator"
                    )))
                }
            }
        }
        Ok(Factorization::from_powers(powers))
    }
}
