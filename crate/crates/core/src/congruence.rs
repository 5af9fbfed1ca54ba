//! Congruence predicates on a prime `p` dividing a class number `h(L)`.
//!
//! The central quantity is the rank product `p * prod_{i=1..r} (p^i - 1)`.
//! If it shares no prime with the odd part `N1` of `[L:Q]`, then `p` already
//! divides the class number of the 2-power-degree subfield `K`; otherwise a
//! shared prime `q` is reported as a witness.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arithmetic::{factor, gcd, is_prime};
use crate::bound::{exceeds_bound, BoundValue};
use crate::error::{Error, Result};

/// A prime divisor `p` of a class number, its exponent, and (when known) the
/// rank of the `p`-part of the class group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankData {
    p: BigUint,
    e_p: u32,
    r_p: Option<u32>,
}

impl RankData {
    pub fn new(p: BigUint, e_p: u32, r_p: Option<u32>) -> Result<Self> {
        if !is_prime(&p) {
            return Err(Error::invalid(format!("{p} is not prime")));
        }
        if e_p == 0 {
            return Err(Error::invalid("exponent e_p must be at least 1"));
        }
        if let Some(r) = r_p {
            if r == 0 || r > e_p {
                return Err(Error::invalid(format!(
                    "rank {r} outside 1..={e_p} for p = {p}"
                )));
            }
        }
        Ok(RankData { p, e_p, r_p })
    }

    pub fn p(&self) -> &BigUint {
        &self.p
    }

    pub fn e_p(&self) -> u32 {
        self.e_p
    }

    pub fn r_p(&self) -> Option<u32> {
        self.r_p
    }

    /// Rank the checks run with: `r_p` when known, otherwise `e_p >= r_p`.
    pub fn rank_used(&self) -> u32 {
        self.r_p.unwrap_or(self.e_p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VerdictKind {
    Witness,
    SubfieldDivisibility,
    Inconclusive,
    Violation,
}

impl VerdictKind {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictKind::Witness => "witness",
            VerdictKind::SubfieldDivisibility => "subfield",
            VerdictKind::Inconclusive => "inconclusive",
            VerdictKind::Violation => "violation",
        }
    }
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// `q` divides both the rank product and the relevant odd degree.
    Witness(BigUint),
    /// `p` divides the class number of the subfield `K`; `confirmed` when that
    /// class number is known and divisible by `p`.
    SubfieldDivisibility { confirmed: bool },
    Inconclusive(String),
    /// The data contradicts a theorem.
    Violation(String),
}

impl Verdict {
    pub fn kind(&self) -> VerdictKind {
        match self {
            Verdict::Witness(_) => VerdictKind::Witness,
            Verdict::SubfieldDivisibility { .. } => VerdictKind::SubfieldDivisibility,
            Verdict::Inconclusive(_) => VerdictKind::Inconclusive,
            Verdict::Violation(_) => VerdictKind::Violation,
        }
    }

    pub fn witness(&self) -> Option<&BigUint> {
        match self {
            Verdict::Witness(q) => Some(q),
            _ => None,
        }
    }

    pub fn is_violation(&self) -> bool {
        matches!(self, Verdict::Violation(_))
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Witness(q) => write!(f, "witness {q}"),
            Verdict::SubfieldDivisibility { confirmed: true } => {
                f.write_str("subfield-divisibility confirmed")
            }
            Verdict::SubfieldDivisibility { confirmed: false } => {
                f.write_str("subfield-divisibility")
            }
            Verdict::Inconclusive(reason) => write!(f, "inconclusive ({reason})"),
            Verdict::Violation(detail) => write!(f, "violation ({detail})"),
        }
    }
}

/// `p * prod_{i=1..r} (p^i - 1)`.
pub fn rank_product(p: &BigUint, r: u32) -> Result<BigUint> {
    if r == 0 {
        return Err(Error::invalid("rank must be at least 1"));
    }
    let mut product = p.clone();
    let mut power = BigUint::one();
    for _ in 0..r {
        power *= p;
        product *= &power - 1u8;
    }
    Ok(product)
}

/// The rank product reduced modulo `modulus`, enough to take a gcd with it.
fn rank_product_mod(p: &BigUint, r: u32, modulus: &BigUint) -> BigUint {
    let mut product = p % modulus;
    let mut power = BigUint::one() % modulus;
    for _ in 0..r {
        power = power * p % modulus;
        product = product * ((&power + modulus - 1u8) % modulus) % modulus;
    }
    product
}

fn shared_with(p: &BigUint, r: u32, n: &BigUint) -> Result<Option<BigUint>> {
    if r == 0 {
        return Err(Error::invalid("rank must be at least 1"));
    }
    let g = gcd(&rank_product_mod(p, r, n), n);
    if g.is_one() {
        return Ok(None);
    }
    Ok(factor(&g)?.primes().next().cloned())
}

/// Smallest prime dividing both the rank product and the odd integer `n1`.
pub fn coprimality_witness(p: &BigUint, r: u32, n1: &BigUint) -> Result<Option<BigUint>> {
    if n1.is_zero() || n1.is_even() {
        return Err(Error::invalid(format!("N1 must be odd and positive, got {n1}")));
    }
    shared_with(p, r, n1)
}

/// Coprimality alternative for `L/K` Galois solvable with `[K:Q]` a power of 2.
///
/// Runs at `rank.rank_used()`. With the rank unknown this is `e_p`; a gcd of 1
/// there forces a gcd of 1 at the true rank, so `SubfieldDivisibility` stays sound.
pub fn check_theorem1(
    rank: &RankData,
    n1: &BigUint,
    subfield_class_number: Option<&BigUint>,
) -> Result<Verdict> {
    if n1.is_even() || *n1 <= BigUint::one() {
        return Err(Error::invalid(format!("N1 must be odd and above 1, got {n1}")));
    }
    if let Some(q) = coprimality_witness(&rank.p, rank.rank_used(), n1)? {
        return Ok(Verdict::Witness(q));
    }
    Ok(match subfield_class_number {
        None => Verdict::SubfieldDivisibility { confirmed: false },
        Some(h) if (h % &rank.p).is_zero() => Verdict::SubfieldDivisibility { confirmed: true },
        Some(h) => Verdict::Violation(format!(
            "rank product of {} at r = {} is coprime to N1 = {n1}, yet {} does not divide h(K) = {h}",
            rank.p,
            rank.rank_used(),
            rank.p
        )),
    })
}

/// For Galois solvable `L/Q` of odd degree `n`, the rank product and `n` must
/// share a prime.
pub fn check_corollary_odd_degree(rank: &RankData, n: &BigUint) -> Result<Verdict> {
    if n.is_even() || *n <= BigUint::one() {
        return Err(Error::invalid(format!("N must be odd and above 1, got {n}")));
    }
    Ok(match shared_with(&rank.p, rank.rank_used(), n)? {
        Some(q) => Verdict::Witness(q),
        None => Verdict::Violation(format!(
            "rank product of {} at r = {} is coprime to the odd degree {n}",
            rank.p,
            rank.rank_used()
        )),
    })
}

/// For `L/F` cyclic of odd prime degree `q` and `p > H_F` dividing `h(L)`:
/// `p (p^r - 1) = 0 (mod q)`.
pub fn check_geometric(p: &BigUint, r_p: u32, q: &BigUint, bound: &BoundValue) -> Result<Verdict> {
    if q.is_even() || !is_prime(q) {
        return Err(Error::invalid(format!("q must be an odd prime, got {q}")));
    }
    if r_p == 0 {
        return Err(Error::invalid("rank must be at least 1"));
    }
    if !exceeds_bound(p, bound) {
        return Ok(Verdict::Inconclusive("p <= H_F".to_string()));
    }
    let residue = p % q;
    if residue.is_zero() || residue.modpow(&BigUint::from(r_p), q).is_one() {
        Ok(Verdict::Witness(q.clone()))
    } else {
        Ok(Verdict::Violation(format!(
            "{p} > H_F = {} but {p}^{r_p} is not 1 mod {q}",
            bound.real_value()
        )))
    }
}

/// Gate of the solvable (non-Galois) case: a prime above `[L:K]` cannot divide
/// `[M:L]` for the Galois closure `M`, since every prime divisor of `[M:K]`
/// divides `[L:K]!`.
pub fn solvable_prime_admissible(p: &BigUint, relative_degree: &BigUint) -> bool {
    p > relative_degree
}
