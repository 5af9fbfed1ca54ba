//! Explicit geometric upper bound on the class number of a degree-`m` field
//! with discriminant `D`:
//!
//! ```text
//! H_F = 2^(m-1) / (m-1)! * sqrt(|D|) * ln(|D|)^(m-1)
//! ```
//!
//! The logarithm is natural. Every quantity is an upper bound: `sqrt` and `ln`
//! are enclosed from above by exact rational computations and rounded upward to
//! a dyadic value, products are exact, and the result is rounded upward once
//! more to [`DEFAULT_FRACTION_BITS`] fractional bits. A prime compared against
//! the stored value can therefore never be declared above the bound by mistake.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Fractional bits kept in a [`BoundValue`].
pub const DEFAULT_FRACTION_BITS: u32 = 128;

/// Smallest working precision accepted by [`class_number_bound_with_precision`].
pub const MIN_FRACTION_BITS: u32 = 96;

/// Extra bits carried by the transcendental enclosures before the final rounding.
const GUARD_BITS: u32 = 16;

/// Degree and discriminant of the field `F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundInput {
    degree: u32,
    discriminant: BigInt,
}

impl BoundInput {
    pub fn new(degree: u32, discriminant: BigInt) -> Result<Self> {
        if degree == 0 {
            return Err(Error::invalid("field degree must be at least 1"));
        }
        if discriminant.is_zero() {
            return Err(Error::invalid("discriminant must be nonzero"));
        }
        Ok(BoundInput {
            degree,
            discriminant,
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn discriminant(&self) -> &BigInt {
        &self.discriminant
    }
}

/// A nonnegative dyadic number `mantissa / 2^fraction_bits` that is known to be
/// at least the exact real it stands for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpperReal {
    mantissa: BigUint,
    fraction_bits: u32,
}

impl UpperReal {
    pub fn from_integer(n: &BigUint, fraction_bits: u32) -> Self {
        UpperReal {
            mantissa: n << fraction_bits,
            fraction_bits,
        }
    }

    fn ceil_of(value: &BigRational, fraction_bits: u32) -> Self {
        UpperReal {
            mantissa: ceil_scaled(value, fraction_bits),
            fraction_bits,
        }
    }

    pub fn mantissa(&self) -> &BigUint {
        &self.mantissa
    }

    pub fn fraction_bits(&self) -> u32 {
        self.fraction_bits
    }

    /// Weight of the last stored bit, `2^-fraction_bits`.
    pub fn ulp(&self) -> BigRational {
        BigRational::new(BigInt::one(), BigInt::one() << self.fraction_bits)
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(
            BigInt::from(self.mantissa.clone()),
            BigInt::one() << self.fraction_bits,
        )
    }

    pub fn to_f64(&self) -> f64 {
        let shift = self.mantissa.bits().saturating_sub(60);
        let top = (&self.mantissa >> shift).to_f64().unwrap_or(f64::INFINITY);
        top * 2f64.powi(shift as i32 - self.fraction_bits as i32)
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    /// Smallest integer not below the stored value.
    pub fn ceil(&self) -> BigUint {
        let (q, r) = self.mantissa.div_rem(&(BigUint::one() << self.fraction_bits));
        if r.is_zero() {
            q
        } else {
            q + 1u8
        }
    }

    /// Exact comparison of the stored value against an integer.
    pub fn cmp_integer(&self, n: &BigUint) -> Ordering {
        self.mantissa.cmp(&(n << self.fraction_bits))
    }

    /// Decimal rendering with `digits` significant digits, rounding half to even.
    pub fn to_significant(&self, digits: u32) -> String {
        format_significant(&self.to_rational(), digits)
    }
}

impl fmt::Display for UpperReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_significant(12))
    }
}

/// The bound together with its integer ceiling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundValue {
    real_value: UpperReal,
    integer_ceiling: BigUint,
    degenerate: bool,
}

impl BoundValue {
    /// A bound with an explicitly given value, already rounded upward.
    pub fn from_upper(real_value: UpperReal) -> Self {
        let integer_ceiling = real_value.ceil();
        BoundValue {
            real_value,
            integer_ceiling,
            degenerate: false,
        }
    }

    pub fn real_value(&self) -> &UpperReal {
        &self.real_value
    }

    pub fn integer_ceiling(&self) -> &BigUint {
        &self.integer_ceiling
    }

    /// Set when `|D| = 1` and `m >= 2`, where the formula collapses to 0.
    /// No real field of degree at least 2 has such a discriminant.
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }
}

pub fn class_number_bound(input: &BoundInput) -> BoundValue {
    evaluate(input, DEFAULT_FRACTION_BITS)
}

pub fn class_number_bound_with_precision(
    input: &BoundInput,
    fraction_bits: u32,
) -> Result<BoundValue> {
    if fraction_bits < MIN_FRACTION_BITS {
        return Err(Error::invalid(format!(
            "working precision must be at least {MIN_FRACTION_BITS} bits"
        )));
    }
    Ok(evaluate(input, fraction_bits))
}

fn evaluate(input: &BoundInput, fraction_bits: u32) -> BoundValue {
    let m = input.degree;
    let abs_disc = input.discriminant.magnitude().clone();
    let inner_bits = fraction_bits + GUARD_BITS;

    let sqrt = sqrt_upper(&abs_disc, inner_bits).to_rational();
    let log_power = if m == 1 {
        BigRational::one()
    } else {
        let log = ln_upper(&abs_disc, inner_bits).to_rational();
        num_traits::pow(log, (m - 1) as usize)
    };
    let factorial: BigUint = (1..m).map(BigUint::from).product();
    let leading = BigRational::new(
        BigInt::one() << (m - 1),
        BigInt::from_biguint(Sign::Plus, factorial),
    );

    let value = leading * sqrt * log_power;
    let degenerate = m >= 2 && abs_disc.is_one();
    let real_value = UpperReal::ceil_of(&value, fraction_bits);
    let integer_ceiling = real_value.ceil();
    BoundValue {
        real_value,
        integer_ceiling,
        degenerate,
    }
}

/// True only when `p` is strictly above the stored (upward-rounded) bound, so
/// the exact inequality `p > H_F` is guaranteed.
pub fn exceeds_bound(p: &BigUint, bound: &BoundValue) -> bool {
    bound.real_value.cmp_integer(p) == Ordering::Less
}

fn ceil_scaled(value: &BigRational, fraction_bits: u32) -> BigUint {
    debug_assert!(!value.is_negative());
    let scaled = value * BigRational::from_integer(BigInt::one() << fraction_bits);
    scaled
        .ceil()
        .to_integer()
        .to_biguint()
        .unwrap_or_default()
}

/// Upper enclosure of `sqrt(n)`.
pub(crate) fn sqrt_upper(n: &BigUint, fraction_bits: u32) -> UpperReal {
    let scaled = n << (2 * fraction_bits);
    let root = scaled.sqrt();
    let mantissa = if &root * &root == scaled {
        root
    } else {
        root + 1u8
    };
    UpperReal {
        mantissa,
        fraction_bits,
    }
}

/// Upper enclosure of the natural logarithm of `n >= 1`.
///
/// With `2^k <= n < 2^(k+1)`, `ln n = k ln 2 + 2 atanh((n - 2^k) / (n + 2^k))`
/// and `ln 2 = 2 atanh(1/3)`; both arguments lie in `[0, 1/3]`.
pub(crate) fn ln_upper(n: &BigUint, fraction_bits: u32) -> UpperReal {
    if n.is_zero() || n.is_one() {
        return UpperReal {
            mantissa: BigUint::zero(),
            fraction_bits,
        };
    }
    let k = n.bits() - 1;
    let power = BigUint::one() << k;
    let two = BigRational::from_integer(BigInt::from(2));
    let ln2 = &two * atanh_upper(&BigUint::one(), &BigUint::from(3u8), fraction_bits);
    let reduced = &two * atanh_upper(&(n - &power), &(n + &power), fraction_bits);
    let total = BigRational::from_integer(BigInt::from(k)) * ln2 + reduced;
    UpperReal::ceil_of(&total, fraction_bits)
}

/// Exact rational upper bound of `atanh(num/den)` for `0 <= num/den <= 1/3`:
/// a partial sum of `sum z^(2i+1)/(2i+1)` plus the geometric tail bound
/// `z^(2T+1) / ((2T+1)(1 - z^2))`, which is below `2^-(fraction_bits+4)`.
fn atanh_upper(num: &BigUint, den: &BigUint, fraction_bits: u32) -> BigRational {
    let z = BigRational::new(BigInt::from(num.clone()), BigInt::from(den.clone()));
    if z.is_zero() {
        return z;
    }
    debug_assert!(z <= BigRational::new(BigInt::one(), BigInt::from(3)));
    // 3^(2T+1) > 2^(fraction_bits + 4) suffices; log2(3) > 1.5
    let terms = (fraction_bits + 4) / 3 + 2;
    let z2 = &z * &z;
    let mut power = z.clone();
    let mut sum = BigRational::zero();
    for i in 0..terms {
        sum += &power / BigRational::from_integer(BigInt::from(2 * i + 1));
        power = &power * &z2;
    }
    let tail_den = BigRational::from_integer(BigInt::from(2 * terms + 1))
        * (BigRational::one() - &z2);
    sum + power / tail_den
}

/// Renders a nonnegative rational with `digits` significant digits, half-even.
pub(crate) fn format_significant(value: &BigRational, digits: u32) -> String {
    assert!(digits >= 1);
    if value.is_zero() {
        return "0".to_string();
    }
    let ten = BigRational::from_integer(BigInt::from(10));
    let pow10 = |e: i64| -> BigRational {
        if e >= 0 {
            num_traits::pow(ten.clone(), e as usize)
        } else {
            num_traits::pow(ten.recip(), (-e) as usize)
        }
    };

    // decimal exponent: 10^e <= value < 10^(e+1)
    let bits = value.numer().bits() as i64 - value.denom().bits() as i64;
    let mut e = (bits as f64 * std::f64::consts::LOG10_2).floor() as i64;
    while pow10(e) > *value {
        e -= 1;
    }
    while pow10(e + 1) <= *value {
        e += 1;
    }

    let shift = digits as i64 - 1 - e;
    let scaled = value * pow10(shift);
    let mut rounded = round_half_even(&scaled);
    let limit = num_traits::pow(BigInt::from(10), digits as usize);
    if rounded >= limit {
        rounded /= 10;
        e += 1;
    }

    let text = rounded.to_string();
    let digits = digits as i64;
    if e >= digits - 1 {
        format!("{text}{}", "0".repeat((e - (digits - 1)) as usize))
    } else if e >= 0 {
        let (int_part, frac_part) = text.split_at((e + 1) as usize);
        format!("{int_part}.{frac_part}")
    } else {
        format!("0.{}{text}", "0".repeat((-e - 1) as usize))
    }
}

fn round_half_even(value: &BigRational) -> BigInt {
    let floor = value.floor();
    let fraction = value - &floor;
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let floor = floor.to_integer();
    match fraction.cmp(&half) {
        Ordering::Less => floor,
        Ordering::Greater => floor + 1,
        Ordering::Equal => {
            if floor.is_even() {
                floor
            } else {
                floor + 1
            }
        }
    }
}
