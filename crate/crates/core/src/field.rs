//! Exact scalar fields.
//!
//! Two families of scalars are provided: arbitrary-precision rationals
//! ([`Rational`]) and prime fields `Z/p` with the modulus fixed at compile
//! time ([`Fp`]). All polynomial and matrix code in this crate is generic
//! over the [`Field`] trait. [`FieldElement`] is the dynamically tagged form
//! used at the I/O boundary, where the field is only known at runtime.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::linalg::{self, ExactMatrix};

/// Arbitrary-precision rational numbers, always in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// The Mersenne prime 2^31 - 1, the default verification modulus.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("mixed fields: {0} and {1}")]
    Mismatch(FieldSpec, FieldSpec),
    #[error("cannot parse {0:?} as a field element")]
    Parse(String),
    #[error("modulus {0} is not a prime")]
    NotPrime(u64),
    #[error("cannot parse {0:?} as a field (expected \"Q\" or \"Fp:<prime>\")")]
    BadSpec(String),
    #[error("element of {found} where {expected} was expected")]
    WrongField { expected: FieldSpec, found: FieldSpec },
}

/// Runtime description of a field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        let p = s
            .strip_prefix("Fp:")
            .and_then(|p| p.trim().parse::<u64>().ok())
            .ok_or_else(|| FieldError::BadSpec(s.to_string()))?;
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p))
    }
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Parses `"22/7"`, `"-3"` or `"1.25"` into a rational.
pub fn parse_rational(s: &str) -> Result<Rational, FieldError> {
    let t = s.trim();
    let err = || FieldError::Parse(s.to_string());
    if let Some((num, den)) = t.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| err())?;
        let den: BigInt = den.trim().parse().map_err(|_| err())?;
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((int, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let negative = int.starts_with('-');
        let int_part: BigInt = match int {
            "" | "-" | "+" => BigInt::zero(),
            _ => int.parse().map_err(|_| err())?,
        };
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let frac_part: BigInt = frac.parse().map_err(|_| err())?;
        let magnitude = int_part.abs() * &scale + frac_part;
        let num = if negative { -magnitude } else { magnitude };
        return Ok(Rational::new(num, scale));
    }
    let v: BigInt = t.parse().map_err(|_| err())?;
    Ok(Rational::from_integer(v))
}

/// A field element tagged with its field at runtime.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(Rational),
    /// Canonical representative in `[0, modulus)`.
    Modular { value: u64, modulus: u64 },
}

impl FieldElement {
    pub fn modular(value: i128, modulus: u64) -> Self {
        let v = value.rem_euclid(modulus as i128) as u64;
        FieldElement::Modular { value: v, modulus }
    }

    pub fn zero(spec: FieldSpec) -> Self {
        match spec {
            FieldSpec::Rationals => FieldElement::Rational(Rational::zero()),
            FieldSpec::Prime(p) => FieldElement::Modular { value: 0, modulus: p },
        }
    }

    pub fn from_rational(q: &Rational, spec: FieldSpec) -> Result<Self, FieldError> {
        match spec {
            FieldSpec::Rationals => Ok(FieldElement::Rational(q.clone())),
            FieldSpec::Prime(p) => {
                let pb = BigInt::from(p);
                let num = q.numer().mod_floor(&pb).to_u64().expect("reduced below p");
                let den = q.denom().mod_floor(&pb).to_u64().expect("reduced below p");
                if den == 0 {
                    return Err(FieldError::DivisionByZero);
                }
                let inv = pow_mod(den, p - 2, p);
                Ok(FieldElement::Modular { value: mul_mod(num, inv, p), modulus: p })
            }
        }
    }

    /// Parses decimal or fraction notation and maps it into `spec`.
    pub fn parse(s: &str, spec: FieldSpec) -> Result<Self, FieldError> {
        let q = parse_rational(s)?;
        Self::from_rational(&q, spec)
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            FieldElement::Rational(_) => FieldSpec::Rationals,
            FieldElement::Modular { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_zero(),
            FieldElement::Modular { value, .. } => *value == 0,
        }
    }

    fn same_field(&self, other: &Self) -> Result<(), FieldError> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(FieldError::Mismatch(self.field(), other.field()))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a + b),
            (FieldElement::Modular { value: a, modulus }, FieldElement::Modular { value: b, .. }) => {
                FieldElement::Modular { value: ((*a as u128 + *b as u128) % *modulus as u128) as u64, modulus: *modulus }
            }
            _ => unreachable!(),
        })
    }

    pub fn neg(&self) -> Self {
        match self {
            FieldElement::Rational(a) => FieldElement::Rational(-a),
            FieldElement::Modular { value, modulus } => {
                FieldElement::Modular { value: (modulus - value) % modulus, modulus: *modulus }
            }
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a * b),
            (FieldElement::Modular { value: a, modulus }, FieldElement::Modular { value: b, .. }) => {
                FieldElement::Modular { value: mul_mod(*a, *b, *modulus), modulus: *modulus }
            }
            _ => unreachable!(),
        })
    }

    pub fn inverse(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(match self {
            FieldElement::Rational(a) => FieldElement::Rational(a.recip()),
            FieldElement::Modular { value, modulus } => {
                FieldElement::Modular { value: pow_mod(*value, modulus - 2, *modulus), modulus: *modulus }
            }
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        self.mul(&other.inverse()?)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(q) => write!(f, "{q}"),
            FieldElement::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

/// An exact field usable as the scalar type of polynomials and matrices.
///
/// The elimination hooks [`Field::rank`] and [`Field::det`] default to plain
/// Gaussian elimination; the rational field overrides them with fraction-free
/// Bareiss elimination.
pub trait Field:
    Clone
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    fn spec() -> FieldSpec;

    fn inv(&self) -> Option<Self>;

    fn from_i64(v: i64) -> Self;

    /// A uniformly random nonzero element (prime fields) or a random nonzero
    /// integer from a fixed small range (rationals).
    fn sample_nonzero<R: Rng + ?Sized>(rng: &mut R) -> Self;

    fn to_element(&self) -> FieldElement;

    fn from_element(e: &FieldElement) -> Result<Self, FieldError>;

    fn checked_div(&self, rhs: &Self) -> Result<Self, FieldError> {
        let inv = rhs.inv().ok_or(FieldError::DivisionByZero)?;
        Ok(self.clone() * inv)
    }

    fn from_u64(v: u64) -> Self {
        Self::from_i64(i64::try_from(v).expect("small integer constant"))
    }

    fn parse(s: &str) -> Result<Self, FieldError> {
        Self::from_element(&FieldElement::parse(s, Self::spec())?)
    }

    fn rank(m: &ExactMatrix<Self>) -> usize {
        linalg::gauss_rank(m)
    }

    fn det(m: &ExactMatrix<Self>) -> Self {
        linalg::gauss_det(m)
    }
}

/// Range of the integer coefficients drawn for random rational systems.
pub const RATIONAL_SAMPLE_BOUND: i64 = 20;

impl Field for Rational {
    fn spec() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn sample_nonzero<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let mut v = 0;
        while v == 0 {
            v = rng.gen_range(-RATIONAL_SAMPLE_BOUND..=RATIONAL_SAMPLE_BOUND);
        }
        Self::from_i64(v)
    }

    fn to_element(&self) -> FieldElement {
        FieldElement::Rational(self.clone())
    }

    fn from_element(e: &FieldElement) -> Result<Self, FieldError> {
        match e {
            FieldElement::Rational(q) => Ok(q.clone()),
            other => Err(FieldError::WrongField { expected: FieldSpec::Rationals, found: other.field() }),
        }
    }

    fn rank(m: &ExactMatrix<Self>) -> usize {
        linalg::bareiss_rank(m)
    }

    fn det(m: &ExactMatrix<Self>) -> Self {
        linalg::bareiss_det(m)
    }
}

const fn is_prime_const(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The prime field `Z/P`. `P` must be a prime below 2^32 so that products of
/// canonical representatives fit in a `u64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    const VALID: () = assert!(P < (1 << 32) && is_prime_const(P), "modulus must be a prime below 2^32");

    pub const MODULUS: u64 = P;

    #[inline]
    pub fn new(v: u64) -> Self {
        #[allow(clippy::let_unit_value)]
        let () = Self::VALID;
        Fp(v % P)
    }

    #[inline]
    pub fn value(self) -> u64 {
        self.0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut acc = Self::one();
        let mut base = self;
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base *= base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Zero for Fp<P> {
    #[inline]
    fn zero() -> Self {
        Fp(0)
    }

    #[inline]
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    #[inline]
    fn one() -> Self {
        Fp::new(1)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;

    #[inline]
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;

    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Fp(if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + P - rhs.0 })
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;

    #[inline]
    fn mul(self, rhs: Self) -> Self {
        Fp(self.0 * rhs.0 % P)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;

    #[inline]
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;

    /// Panics on division by zero; use [`Field::checked_div`] to get an error.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero in Fp")
    }
}

macro_rules! forward_ref_ops {
    ($($tr:ident::$m:ident, $atr:ident::$am:ident);*) => {$(
        impl<'a, const P: u64> $tr<&'a Fp<P>> for Fp<P> {
            type Output = Fp<P>;
            #[inline]
            fn $m(self, rhs: &'a Fp<P>) -> Fp<P> {
                $tr::$m(self, *rhs)
            }
        }
        impl<const P: u64> $atr for Fp<P> {
            #[inline]
            fn $am(&mut self, rhs: Fp<P>) {
                *self = $tr::$m(*self, rhs);
            }
        }
        impl<'a, const P: u64> $atr<&'a Fp<P>> for Fp<P> {
            #[inline]
            fn $am(&mut self, rhs: &'a Fp<P>) {
                *self = $tr::$m(*self, *rhs);
            }
        }
    )*};
}

forward_ref_ops!(Add::add, AddAssign::add_assign; Sub::sub, SubAssign::sub_assign; Mul::mul, MulAssign::mul_assign);

impl<const P: u64> Field for Fp<P> {
    fn spec() -> FieldSpec {
        FieldSpec::Prime(P)
    }

    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }

    fn from_i64(v: i64) -> Self {
        Fp::new(v.rem_euclid(P as i64) as u64)
    }

    fn from_u64(v: u64) -> Self {
        Fp::new(v)
    }

    fn sample_nonzero<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Fp::new(rng.gen_range(1..P))
    }

    fn to_element(&self) -> FieldElement {
        FieldElement::Modular { value: self.0, modulus: P }
    }

    fn from_element(e: &FieldElement) -> Result<Self, FieldError> {
        match e {
            FieldElement::Modular { value, modulus } if *modulus == P => Ok(Fp::new(*value)),
            other => Err(FieldError::WrongField { expected: FieldSpec::Prime(P), found: other.field() }),
        }
    }
}
