//! Arbitrary-precision integer primitives: gcd, modular powers, primality,
//! factorization, Euler's totient and multiplicative orders.
//!
//! Inputs that fit in a machine word take a `u64`/`u128` fast path; everything
//! else runs on [`BigUint`]. No routine has a wrapping or truncating code path.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Trial division bound used by [`factor`] before switching to rho.
pub const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;

/// Bases making Miller-Rabin deterministic below 3.3 * 10^24, hence for every `u64`.
const MR_BASES_U64: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

const SMALL_PRIMES: [u32; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

/// Gaps between residues coprime to 30, starting from 7.
const WHEEL_30: [u64; 8] = [4, 2, 4, 2, 4, 6, 2, 6];

pub fn gcd(a: &BigUint, b: &BigUint) -> BigUint {
    a.gcd(b)
}

/// Least common multiple; `lcm(0, x) = 0`.
pub fn lcm(a: &BigUint, b: &BigUint) -> BigUint {
    if a.is_zero() || b.is_zero() {
        return BigUint::zero();
    }
    a / gcd(a, b) * b
}

pub fn mod_pow(base: &BigUint, exp: &BigUint, modulus: &BigUint) -> Result<BigUint> {
    if *modulus < BigUint::from(2u8) {
        return Err(Error::ModulusTooSmall(modulus.clone()));
    }
    Ok(base.modpow(exp, modulus))
}

/// Exact primality test.
///
/// Values below 2^64 use deterministic Miller-Rabin. Larger values run the
/// Baillie-PSW combination (strong base-2 test plus strong Lucas test with
/// Selfridge parameters), which has no known counterexample and is exact far
/// beyond the sizes appearing in the bundled tables.
pub fn is_prime(n: &BigUint) -> bool {
    match n.to_u64() {
        Some(small) => is_prime_u64(small),
        None => is_prime_big(n),
    }
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &SMALL_PRIMES {
        let p = u64::from(p);
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    if n < 97 * 97 {
        return true;
    }
    let (d, s) = split_two_power(n - 1);
    MR_BASES_U64
        .iter()
        .all(|&a| strong_probable_prime_u64(n, a, d, s))
}

fn split_two_power(mut d: u64) -> (u64, u32) {
    let s = d.trailing_zeros();
    d >>= s;
    (d, s)
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(m)) as u64
}

fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

fn strong_probable_prime_u64(n: u64, a: u64, d: u64, s: u32) -> bool {
    let mut x = pow_mod_u64(a, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mul_mod_u64(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

fn is_prime_big(n: &BigUint) -> bool {
    for &p in &SMALL_PRIMES {
        if (n % p).is_zero() {
            return false;
        }
    }
    strong_probable_prime_big(n, &BigUint::from(2u8)) && strong_lucas_probable_prime(n)
}

fn strong_probable_prime_big(n: &BigUint, a: &BigUint) -> bool {
    let one = BigUint::one();
    let n_minus_one = n - &one;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    let mut x = a.modpow(&d, n);
    if x == one || x == n_minus_one {
        return true;
    }
    for _ in 1..s {
        x = &x * &x % n;
        if x == n_minus_one {
            return true;
        }
    }
    false
}

/// Jacobi symbol (a/n) for odd n >= 1.
fn jacobi(a: &BigUint, n: &BigUint) -> i32 {
    debug_assert!(n.is_odd());
    let mut a = a % n;
    let mut n = n.clone();
    let mut result = 1;
    while !a.is_zero() {
        let tz = a.trailing_zeros().unwrap_or(0);
        a >>= tz;
        let n_mod_8 = (&n % 8u8).to_u8().unwrap_or(0);
        if tz % 2 == 1 && (n_mod_8 == 3 || n_mod_8 == 5) {
            result = -result;
        }
        std::mem::swap(&mut a, &mut n);
        if (&a % 4u8) == BigUint::from(3u8) && (&n % 4u8) == BigUint::from(3u8) {
            result = -result;
        }
        a %= &n;
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

/// Reduces a small signed integer into `[0, n)`.
fn signed_mod(value: i64, n: &BigUint) -> BigUint {
    let magnitude = BigUint::from(value.unsigned_abs()) % n;
    if value >= 0 || magnitude.is_zero() {
        magnitude
    } else {
        n - magnitude
    }
}

fn half_mod(x: BigUint, n: &BigUint) -> BigUint {
    if x.is_even() {
        x >> 1
    } else {
        (x + n) >> 1
    }
}

/// Strong Lucas probable-prime test with P = 1 and Selfridge's choice of D.
fn strong_lucas_probable_prime(n: &BigUint) -> bool {
    let root = n.sqrt();
    if &root * &root == *n {
        return false;
    }

    let mut d: i64 = 5;
    loop {
        let d_mod = signed_mod(d, n);
        match jacobi(&d_mod, n) {
            -1 => break,
            0 => {
                if BigUint::from(d.unsigned_abs()) != *n {
                    return false;
                }
            }
            _ => {}
        }
        d = if d > 0 { -(d + 2) } else { -d + 2 };
    }
    let q = (1 - d) / 4;
    let d_mod = signed_mod(d, n);
    let q_mod = signed_mod(q, n);

    let n_plus_one = n + 1u8;
    let s = n_plus_one.trailing_zeros().unwrap_or(0);
    let k = &n_plus_one >> s;

    let mut u = BigUint::one();
    let mut v = BigUint::one();
    let mut q_k = q_mod.clone();
    let two_mod = BigUint::from(2u8) % n;

    for bit in (0..k.bits().saturating_sub(1)).rev() {
        // doubling: U_2k = U_k V_k, V_2k = V_k^2 - 2 Q^k
        u = &u * &v % n;
        v = (&v * &v + n * 2u8 - (&q_k * &two_mod % n)) % n;
        q_k = &q_k * &q_k % n;
        if k.bit(bit) {
            let u_next = half_mod(&u + &v, n);
            let v_next = half_mod((&d_mod * &u + &v) % n, n);
            u = u_next % n;
            v = v_next % n;
            q_k = &q_k * &q_mod % n;
        }
    }

    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 1..s {
        v = (&v * &v + n * 2u8 - (&q_k * &two_mod % n)) % n;
        q_k = &q_k * &q_k % n;
        if v.is_zero() {
            return true;
        }
    }
    false
}

/// A factored positive integer: strictly increasing primes with positive exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Factorization {
    entries: Vec<(BigUint, u32)>,
}

impl Factorization {
    /// Builds a factorization from explicit prime powers, checking every invariant.
    pub fn from_prime_powers(entries: Vec<(BigUint, u32)>) -> Result<Self> {
        for window in entries.windows(2) {
            if window[0].0 >= window[1].0 {
                return Err(Error::invalid("primes must be strictly increasing"));
            }
        }
        for (p, e) in &entries {
            if *e == 0 {
                return Err(Error::invalid(format!("exponent of {p} must be positive")));
            }
            if !is_prime(p) {
                return Err(Error::invalid(format!("{p} is not prime")));
            }
        }
        Ok(Factorization { entries })
    }

    fn from_counts(counts: BTreeMap<BigUint, u32>) -> Self {
        Factorization {
            entries: counts.into_iter().collect(),
        }
    }

    pub fn entries(&self) -> &[(BigUint, u32)] {
        &self.entries
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.entries.iter().map(|(p, _)| p)
    }

    /// Exponent of `p`, zero when `p` does not occur.
    pub fn exponent_of(&self, p: &BigUint) -> u32 {
        self.entries
            .binary_search_by(|(q, _)| q.cmp(p))
            .map(|i| self.entries[i].1)
            .unwrap_or(0)
    }

    pub fn product(&self) -> BigUint {
        self.entries
            .iter()
            .fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Factorization of the product of `self` and `other`.
    pub fn multiply(&self, other: &Factorization) -> Factorization {
        let mut counts: BTreeMap<BigUint, u32> = self.entries.iter().cloned().collect();
        for (p, e) in &other.entries {
            *counts.entry(p.clone()).or_insert(0) += e;
        }
        Factorization::from_counts(counts)
    }
}

impl fmt::Display for Factorization {
    /// Dot-separated prime powers, e.g. `2^4.3.5`; the empty product prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("1");
        }
        for (i, (p, e)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Complete factorization of `n >= 2`.
///
/// Trial division by wheel candidates up to [`TRIAL_DIVISION_LIMIT`] (stopping
/// early once the cofactor is 1, prime, or below the square of the candidate),
/// then Brent's variant of Pollard rho with recursive splitting.
pub fn factor(n: &BigUint) -> Result<Factorization> {
    if *n < BigUint::from(2u8) {
        return Err(Error::FactorBelowTwo(n.clone()));
    }
    let mut counts = BTreeMap::new();
    let cofactor = trial_divide(n.clone(), &mut counts);
    if !cofactor.is_one() {
        split_completely(cofactor, &mut counts);
    }
    Ok(Factorization::from_counts(counts))
}

fn push(counts: &mut BTreeMap<BigUint, u32>, p: BigUint, e: u32) {
    *counts.entry(p).or_insert(0) += e;
}

/// Divides out every prime below the trial limit; returns the remaining cofactor,
/// which is 1, a prime, or a composite with all prime factors above the limit.
fn trial_divide(mut n: BigUint, counts: &mut BTreeMap<BigUint, u32>) -> BigUint {
    let mut candidate: u64 = 2;
    let mut wheel_index = 0usize;
    let mut primality_checked = false;
    while candidate <= TRIAL_DIVISION_LIMIT {
        if let Some(small) = n.to_u64() {
            return BigUint::from(trial_divide_u64(small, candidate, wheel_index, counts));
        }
        let mut e = 0;
        loop {
            let (q, r) = n.div_rem(&BigUint::from(candidate));
            if !r.is_zero() {
                break;
            }
            n = q;
            e += 1;
        }
        if e > 0 {
            push(counts, BigUint::from(candidate), e);
        }
        if !primality_checked && candidate > 1000 {
            primality_checked = true;
            if is_prime(&n) {
                return n;
            }
        }
        (candidate, wheel_index) = next_candidate(candidate, wheel_index);
    }
    n
}

fn next_candidate(candidate: u64, wheel_index: usize) -> (u64, usize) {
    match candidate {
        2 => (3, 0),
        3 => (5, 0),
        5 => (7, 0),
        _ => (
            candidate + WHEEL_30[wheel_index],
            (wheel_index + 1) % WHEEL_30.len(),
        ),
    }
}

fn trial_divide_u64(
    mut n: u64,
    mut candidate: u64,
    mut wheel_index: usize,
    counts: &mut BTreeMap<BigUint, u32>,
) -> u64 {
    let mut primality_checked = false;
    while candidate <= TRIAL_DIVISION_LIMIT {
        if n == 1 {
            return 1;
        }
        if candidate.saturating_mul(candidate) > n {
            push(counts, BigUint::from(n), 1);
            return 1;
        }
        let mut e = 0;
        while n % candidate == 0 {
            n /= candidate;
            e += 1;
        }
        if e > 0 {
            push(counts, BigUint::from(candidate), e);
        }
        if !primality_checked && candidate > 1000 {
            primality_checked = true;
            if is_prime_u64(n) {
                push(counts, BigUint::from(n), 1);
                return 1;
            }
        }
        (candidate, wheel_index) = next_candidate(candidate, wheel_index);
    }
    n
}

fn split_completely(n: BigUint, counts: &mut BTreeMap<BigUint, u32>) {
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_prime(&m) {
            push(counts, m, 1);
            continue;
        }
        let root = m.sqrt();
        if &root * &root == m {
            stack.push(root.clone());
            stack.push(root);
            continue;
        }
        let d = brent_split(&m);
        stack.push(&m / &d);
        stack.push(d);
    }
}

/// Finds a nontrivial divisor of an odd composite `n` that is not a perfect square.
fn brent_split(n: &BigUint) -> BigUint {
    let mut c = BigUint::one();
    loop {
        if let Some(d) = brent_attempt(n, &c, &BigUint::from(2u8)) {
            return d;
        }
        c += 1u8;
    }
}

/// One run of Brent's cycle search on x -> x^2 + c (mod n), batching gcds over
/// blocks of `BATCH` differences and backtracking when a batch overshoots.
fn brent_attempt(n: &BigUint, c: &BigUint, start: &BigUint) -> Option<BigUint> {
    const BATCH: u64 = 64;
    let step = |x: &BigUint| (x * x + c) % n;

    let mut y = start.clone();
    let mut x = y.clone();
    let mut ys = y.clone();
    let mut r: u64 = 1;
    let mut q = BigUint::one();
    let mut g = BigUint::one();

    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = step(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            for _ in 0..BATCH.min(r - k) {
                y = step(&y);
                q = q * distance(&x, &y) % n;
            }
            g = gcd(&q, n);
            k += BATCH;
        }
        r *= 2;
        if r > 1 << 40 {
            return None;
        }
    }

    if g == *n {
        loop {
            ys = step(&ys);
            g = gcd(&distance(&x, &ys), n);
            if !g.is_one() {
                break;
            }
        }
    }
    if g == *n {
        None
    } else {
        Some(g)
    }
}

fn distance(a: &BigUint, b: &BigUint) -> BigUint {
    if a >= b {
        a - b
    } else {
        b - a
    }
}

/// Euler's totient; `euler_phi(1) = 1`.
pub fn euler_phi(n: &BigUint) -> Result<BigUint> {
    if n.is_zero() {
        return Err(Error::invalid("euler_phi is undefined at 0"));
    }
    if n.is_one() {
        return Ok(BigUint::one());
    }
    Ok(totient_of(&factor(n)?))
}

pub(crate) fn totient_of(factorization: &Factorization) -> BigUint {
    factorization
        .entries()
        .iter()
        .fold(BigUint::one(), |acc, (p, e)| acc * p.pow(e - 1) * (p - 1u8))
}

/// Smallest `f >= 1` with `p^f = 1 (mod q)`.
///
/// `q` is normally prime, but any modulus `q >= 2` coprime to `p` is accepted;
/// the order is found by stripping prime factors from the group exponent
/// `phi(q)`, so the result always divides `phi(q)`.
pub fn multiplicative_order(p: &BigUint, q: &BigUint) -> Result<BigUint> {
    if *q < BigUint::from(2u8) {
        return Err(Error::ModulusTooSmall(q.clone()));
    }
    if !gcd(p, q).is_one() {
        return Err(Error::NotCoprime {
            base: p.clone(),
            modulus: q.clone(),
        });
    }
    let group_order = euler_phi(q)?;
    if group_order.is_one() {
        return Ok(BigUint::one());
    }
    let mut order = group_order.clone();
    for (l, _) in factor(&group_order)?.entries() {
        while (&order % l).is_zero() {
            let candidate = &order / l;
            if p.modpow(&candidate, q).is_one() {
                order = candidate;
            } else {
                break;
            }
        }
    }
    Ok(order)
}

/// Odd part of `n`: `n` with every factor 2 removed. `odd_part(0) = 0`.
pub fn odd_part(n: &BigUint) -> BigUint {
    match n.trailing_zeros() {
        Some(tz) => n >> tz,
        None => BigUint::zero(),
    }
}

/// Squarefree kernel of a positive integer, keeping primes with odd exponent.
pub fn squarefree_part(n: &BigUint) -> Result<BigUint> {
    if n.is_one() {
        return Ok(BigUint::one());
    }
    Ok(factor(n)?
        .entries()
        .iter()
        .filter(|(_, e)| e % 2 == 1)
        .fold(BigUint::one(), |acc, (p, _)| acc * p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn naive_is_prime(n: u64) -> bool {
        if n < 2 {
            return false;
        }
        let mut d = 2;
        while d * d <= n {
            if n % d == 0 {
                return false;
            }
            d += 1;
        }
        true
    }

    fn entries(pairs: &[(u64, u32)]) -> Vec<(BigUint, u32)> {
        pairs.iter().map(|&(p, e)| (big(p), e)).collect()
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&big(6), &big(29)), big(1));
        assert_eq!(gcd(&big(58 * 59), &big(29)), big(29));
        assert_eq!(gcd(&big(0), &big(7)), big(7));
        assert_eq!(gcd(&big(0), &big(0)), big(0));
        assert_eq!(lcm(&big(4), &big(6)), big(12));
        assert_eq!(lcm(&big(0), &big(6)), big(0));
    }

    #[test]
    fn primality_examples() {
        assert!(is_prime(&big(233)));
        assert!(!is_prime(&big(1)));
        assert!(!is_prime(&big(0)));
        assert!(is_prime(&big(2)));
        // 2^2.41.1703693+1
        assert!(naive_is_prime(279_405_653));
        assert!(is_prime(&big(279_405_653)));
    }

    #[test]
    fn primality_matches_trial_division_below_ten_thousand() {
        for n in 0..10_000u64 {
            assert_eq!(is_prime(&big(n)), naive_is_prime(n), "n = {n}");
        }
    }

    #[test]
    fn strong_pseudoprimes_are_rejected() {
        // strong pseudoprimes to base 2 and Carmichael numbers
        for n in [2047u64, 3277, 4033, 561, 1105, 1729, 3_215_031_751, 3_825_123_056_546_413_051] {
            assert!(!is_prime(&big(n)), "{n}");
        }
    }

    #[test]
    fn big_primality_uses_lucas_path() {
        let m61 = (BigUint::one() << 61) - 1u8;
        let m89 = (BigUint::one() << 89) - 1u8;
        let m127 = (BigUint::one() << 127) - 1u8;
        assert!(is_prime(&m89));
        assert!(is_prime(&m127));
        assert!(!is_prime(&(&m61 * &m89)));
        assert!(!is_prime(&((BigUint::one() << 128) + 1u8)));
        // 2^64 + 13 is the first prime above 2^64
        assert!(is_prime(&((BigUint::one() << 64) + 13u8)));
        assert!(!is_prime(&((BigUint::one() << 64) + 1u8)));
        // squares never pass
        assert!(!is_prime(&(&m89 * &m89)));
    }

    #[test]
    fn jacobi_matches_euler_criterion() {
        let n = big(1_000_003);
        for a in 1..200u64 {
            let euler = big(a).modpow(&big(500_001), &n);
            let expected = if euler.is_one() { 1 } else { -1 };
            assert_eq!(jacobi(&big(a), &n), expected, "a = {a}");
        }
        assert_eq!(jacobi(&big(15), &big(45)), 0);
    }

    #[test]
    fn factor_examples() {
        assert_eq!(factor(&big(58)).unwrap().entries(), entries(&[(2, 1), (29, 1)]));
        assert_eq!(factor(&big(1024)).unwrap().entries(), entries(&[(2, 10)]));
        // 2^3.5.7.283+1
        assert!(naive_is_prime(79_241));
        assert_eq!(factor(&big(79_241)).unwrap().entries(), entries(&[(79_241, 1)]));
        assert_eq!(factor(&big(2)).unwrap().entries(), entries(&[(2, 1)]));
    }

    #[test]
    fn factor_rejects_below_two() {
        assert_eq!(factor(&big(1)), Err(Error::FactorBelowTwo(big(1))));
        assert_eq!(factor(&big(0)), Err(Error::FactorBelowTwo(big(0))));
    }

    #[test]
    fn factor_handles_large_cofactors() {
        // product of two primes above the trial-division limit
        let p = big(1_000_003);
        let q = big(2_147_483_647);
        let n = &p * &q;
        assert_eq!(factor(&n).unwrap().entries(), vec![(p.clone(), 1), (q.clone(), 1)]);

        let m61 = (BigUint::one() << 61) - 1u8;
        let n = &m61 * &q * &q * 12u8;
        let f = factor(&n).unwrap();
        assert_eq!(f.product(), n);
        assert_eq!(f.exponent_of(&q), 2);
        assert_eq!(f.exponent_of(&m61), 1);
        assert_eq!(f.exponent_of(&big(2)), 2);

        // square of a prime above the trial limit
        let n = &q * &q;
        assert_eq!(factor(&n).unwrap().entries(), vec![(q, 2)]);
    }

    #[test]
    fn factorization_display_and_validation() {
        let f = factor(&big(240)).unwrap();
        assert_eq!(f.to_string(), "2^4.3.5");
        assert!(Factorization::from_prime_powers(entries(&[(3, 1), (2, 1)])).is_err());
        assert!(Factorization::from_prime_powers(entries(&[(4, 1)])).is_err());
        assert!(Factorization::from_prime_powers(entries(&[(2, 0)])).is_err());
        let ok = Factorization::from_prime_powers(entries(&[(2, 1), (29, 1)])).unwrap();
        assert_eq!(ok.product(), big(58));
        assert_eq!(Factorization::default().to_string(), "1");
        assert_eq!(ok.multiply(&f).to_string(), "2^5.3.5.29");
    }

    #[test]
    fn euler_phi_examples() {
        assert_eq!(euler_phi(&big(59)).unwrap(), big(58));
        assert_eq!(euler_phi(&big(1)).unwrap(), big(1));
        assert_eq!(euler_phi(&big(572)).unwrap(), big(240));
        assert!(euler_phi(&big(0)).is_err());
    }

    #[test]
    fn mod_pow_examples() {
        assert_eq!(mod_pow(&big(3), &big(3), &big(13)).unwrap(), big(1));
        assert_eq!(mod_pow(&big(5), &big(0), &big(7)).unwrap(), big(1));
        assert_eq!(mod_pow(&big(11), &big(1), &big(5)).unwrap(), big(1));
        assert!(mod_pow(&big(3), &big(3), &big(1)).is_err());
    }

    #[test]
    fn multiplicative_order_examples() {
        assert_eq!(multiplicative_order(&big(3), &big(13)).unwrap(), big(3));
        assert_eq!(multiplicative_order(&big(11), &big(5)).unwrap(), big(1));
        // brute force: 2, 4, 1 mod 7
        assert_eq!(multiplicative_order(&big(2), &big(7)).unwrap(), big(3));
        assert!(matches!(
            multiplicative_order(&big(26), &big(13)),
            Err(Error::NotCoprime { .. })
        ));
    }

    #[test]
    fn odd_and_squarefree_parts() {
        assert_eq!(odd_part(&big(240)), big(15));
        assert_eq!(odd_part(&big(29)), big(29));
        assert_eq!(squarefree_part(&big(9081)).unwrap(), big(1009));
        assert_eq!(squarefree_part(&big(1)).unwrap(), big(1));
        assert_eq!(squarefree_part(&big(59)).unwrap(), big(59));
    }
}
