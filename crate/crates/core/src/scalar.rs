//! Exact scalars over the rationals and over prime fields GF(p).
//!
//! A [`Field`] describes where a [`Scalar`] lives. Rationals are kept in
//! lowest terms with a positive denominator; residues are kept in `0..p`.
//! Arithmetic between scalars of different fields is an error for the
//! checked `try_*` operations and a panic for the operator impls, which
//! internal code only uses on data whose field has already been validated.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Largest characteristic accepted for a prime field.
pub const MAX_CHARACTERISTIC: u64 = 1 << 31;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    /// GF(p); the payload is the prime `p`.
    Prime(u32),
}

impl Field {
    pub fn rationals() -> Self {
        Field::Rationals
    }

    pub fn prime(p: u64) -> Result<Self> {
        if p > MAX_CHARACTERISTIC || !is_prime(p) {
            return Err(Error::InvalidField(format!(
                "characteristic {p} is not a prime <= 2^31"
            )));
        }
        Ok(Field::Prime(p as u32))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => u64::from(*p),
        }
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        match self {
            Field::Rationals => None,
            Field::Prime(p) => Some(u64::from(*p)),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Field::Prime(_))
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, value: i64) -> Scalar {
        match *self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(value.into())),
            Field::Prime(p) => Scalar::Modular {
                value: value.rem_euclid(i64::from(p)) as u32,
                modulus: p,
            },
        }
    }

    /// The residue `value mod p`; for the rationals the integer `value`.
    pub fn element(&self, value: u64) -> Scalar {
        match *self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(value.into())),
            Field::Prime(p) => Scalar::Modular {
                value: (value % u64::from(p)) as u32,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(&self, value: &BigInt) -> Scalar {
        match *self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(value.clone())),
            Field::Prime(p) => {
                let r = value.mod_floor(&BigInt::from(p));
                Scalar::Modular {
                    value: r.to_u32().expect("residue fits in u32"),
                    modulus: p,
                }
            }
        }
    }

    /// Parses `-?digits(/digits)?`. Over GF(p) a fraction `a/b` is `a * b^-1`.
    pub fn parse(&self, text: &str) -> Result<Scalar> {
        let (num, den) = parse_fraction(text)?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            Field::Rationals => Ok(Scalar::Rational(BigRational::new(num, den))),
            Field::Prime(_) => self.from_bigint(&num).try_div(&self.from_bigint(&den)),
        }
    }

    /// All elements of a finite field in increasing residue order.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        self.order().map(|q| (0..q).map(|v| self.element(v)).collect())
    }

    /// A random element. Over the rationals the value is an integer in
    /// `-bound..=bound`; over GF(p) it is uniform.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R, bound: i64) -> Scalar {
        match *self {
            Field::Rationals => self.from_i64(rng.gen_range(-bound..=bound)),
            Field::Prime(p) => self.element(rng.gen_range(0..u64::from(p))),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `Q`, `GF(p)` and the shorthand `gfp` (e.g. `gf2`).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") || t.eq_ignore_ascii_case("rationals") {
            return Ok(Field::Rationals);
        }
        let lower = t.to_ascii_lowercase();
        let digits = lower
            .strip_prefix("gf(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| lower.strip_prefix("gf"))
            .ok_or_else(|| Error::InvalidField(format!("unknown field `{s}`")))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::InvalidField(format!("unknown field `{s}`")))?;
        Field::prime(p)
    }
}

fn parse_fraction(text: &str) -> Result<(BigInt, BigInt)> {
    let bad = || Error::Parse {
        line: 0,
        column: 0,
        message: format!("`{text}` is not a scalar (expected -?digits(/digits)?)"),
    };
    let (sign, body) = match text.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, text),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(num) || !den.is_none_or(digits) {
        return Err(bad());
    }
    let num = BigInt::from_str(num).map_err(|_| bad())? * sign;
    let den = match den {
        Some(d) => BigInt::from_str(d).map_err(|_| bad())?,
        None => BigInt::one(),
    };
    Ok((num, den))
}

fn is_prime(n: u64) -> bool {
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

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u32, modulus: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked binary arithmetic on two scalars.
pub fn arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar> {
    match op {
        ArithOp::Add => a.try_add(b),
        ArithOp::Sub => a.try_sub(b),
        ArithOp::Mul => a.try_mul(b),
        ArithOp::Div => a.try_div(b),
    }
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Modular { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    fn same_field(&self, other: &Scalar) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch(
                self.field().to_string(),
                other.field().to_string(),
            ))
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => {
                let s = (u64::from(*a) + u64::from(*b)) % u64::from(*modulus);
                Scalar::Modular {
                    value: s as u32,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => {
                let s = (u64::from(*a) * u64::from(*b)) % u64::from(*modulus);
                Scalar::Modular {
                    value: s as u32,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        })
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        self.try_mul(&other.inverse()?)
    }

    pub fn inverse(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Modular { value, modulus } => {
                let g = i64::from(*value).extended_gcd(&i64::from(*modulus));
                Scalar::Modular {
                    value: g.x.rem_euclid(i64::from(*modulus)) as u32,
                    modulus: *modulus,
                }
            }
        })
    }

    pub fn pow(&self, mut exp: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        self.try_add(rhs).expect("scalar field mismatch")
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self.try_sub(rhs).expect("scalar field mismatch")
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        self.try_mul(rhs).expect("scalar field mismatch")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Scalar {
    /// `self += a * b`, the inner step of every contraction.
    pub(crate) fn add_product(&mut self, a: &Scalar, b: &Scalar) {
        match (&mut *self, a, b) {
            (
                Scalar::Modular { value, modulus },
                Scalar::Modular { value: x, .. },
                Scalar::Modular { value: y, .. },
            ) => {
                let m = u64::from(*modulus);
                *value = ((u64::from(*value) + u64::from(*x) * u64::from(*y) % m) % m) as u32;
            }
            (Scalar::Rational(acc), Scalar::Rational(x), Scalar::Rational(y)) => {
                *acc += x * y;
            }
            _ => panic!("scalar field mismatch"),
        }
    }

    /// Whether this rational is negative; residues never are.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_negative(),
            Scalar::Modular { .. } => false,
        }
    }
}
