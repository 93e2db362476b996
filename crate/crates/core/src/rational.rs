//! Arbitrary-precision rationals kept in canonical form.

use std::borrow::Cow;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{ArithError, ParseError};

/// An exact fraction `numer / denom` with `denom > 0` and the two parts coprime.
///
/// Zero is always `0/1`. Values whose parts both fit in an `i64` are stored
/// inline and everything else as a [`BigRational`]; the choice is a function of
/// the value, so equality and hashing stay structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small(i64, i64),
    Big(BigRational),
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

/// Positive gcd of two `i64`s, not both zero, as an `i64` when it fits.
fn gcd64(a: i64, b: i64) -> i64 {
    let g = a.unsigned_abs().gcd(&b.unsigned_abs());
    // Only gcd(i64::MIN, 0 or i64::MIN) exceeds i64::MAX; callers never pass
    // those since one argument is always a positive denominator.
    g as i64
}

impl Rational {
    /// Builds `n / d` in canonical form.
    pub fn new(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<Self, ArithError> {
        let d = d.into();
        if d.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Rational::from_big(BigRational::new(n.into(), d)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational::from_big(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }

    pub fn one() -> Self {
        Rational(Repr::Small(1, 1))
    }

    fn from_big(r: BigRational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(r)),
        }
    }

    /// `n / d` from already-reduced `i128` parts with `d > 0`.
    fn from_reduced(n: i128, d: i128) -> Self {
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(BigRational::new_raw(n.into(), d.into()))),
        }
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw((*n).into(), (*d).into()),
            Repr::Big(r) => r.clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => (*n).into(),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => (*d).into(),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(r) => r.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(r) => r.is_negative(),
        }
    }

    /// The value as an `i64`, when it is an integer in range.
    pub fn to_i64(&self) -> Option<i64> {
        match self.0 {
            Repr::Small(n, 1) => Some(n),
            _ => None,
        }
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Result<Self, ArithError> {
        match &self.0 {
            Repr::Small(0, _) => Err(ArithError::DivisionByZero),
            &Repr::Small(n, d) => {
                let (n, d) = if n < 0 {
                    (-(d as i128), -(n as i128))
                } else {
                    (d as i128, n as i128)
                };
                Ok(Rational::from_reduced(n, d))
            }
            Repr::Big(r) => Ok(Rational::from_big(r.recip())),
        }
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self, ArithError> {
        Ok(self * &rhs.recip()?)
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, exp: i64) -> Result<Self, ArithError> {
        if exp < 0 {
            if self.is_zero() {
                return Err(ArithError::ZeroToNegativePower);
            }
            return Ok(self.recip()?.pow_unsigned(exp.unsigned_abs()));
        }
        Ok(self.pow_unsigned(exp as u64))
    }

    fn pow_unsigned(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Rational::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Halves the value exactly.
    pub fn half(&self) -> Self {
        match self.0 {
            Repr::Small(n, d) => {
                if n % 2 == 0 {
                    Rational::from_reduced((n / 2) as i128, d as i128)
                } else {
                    Rational::from_reduced(n as i128, 2 * d as i128)
                }
            }
            Repr::Big(ref r) => Rational::from_big(r / BigRational::from_integer(BigInt::from(2))),
        }
    }

    fn add_impl(&self, rhs: &Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (&Repr::Small(a, 1), &Repr::Small(c, 1)) => {
                Rational::from_reduced(a as i128 + c as i128, 1)
            }
            (&Repr::Small(a, b), &Repr::Small(c, d)) => {
                let g = gcd64(b, d);
                let (b, d, g) = (b as i128, d as i128, g as i128);
                // Each product is below 2^126, so the sum cannot overflow.
                let t = a as i128 * (d / g) + c as i128 * (b / g);
                if t == 0 {
                    return Rational::zero();
                }
                let g2 = if g == 1 {
                    1
                } else {
                    gcd64(i64::try_from(t % g).unwrap(), g as i64) as i128
                };
                Rational::from_reduced(t / g2, (b / g) * (d / g2))
            }
            _ => self.big_op(rhs, |x, y| x + y, |x, y| x + y),
        }
    }

    fn mul_impl(&self, rhs: &Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (&Repr::Small(a, 1), &Repr::Small(c, 1)) => {
                Rational::from_reduced(a as i128 * c as i128, 1)
            }
            (&Repr::Small(a, b), &Repr::Small(c, d)) => {
                if a == 0 || c == 0 {
                    return Rational::zero();
                }
                let g1 = gcd64(a, d);
                let g2 = gcd64(c, b);
                let n = (a / g1) as i128 * (c / g2) as i128;
                Rational::from_reduced(n, (b / g2) as i128 * (d / g1) as i128)
            }
            _ => self.big_op(rhs, |x, y| x * y, |x, y| x * y),
        }
    }

    /// Slow path; integers skip the gcd that `BigRational` would run.
    fn big_op(
        &self,
        rhs: &Rational,
        int_op: impl FnOnce(&BigInt, &BigInt) -> BigInt,
        rat_op: impl FnOnce(&BigRational, &BigRational) -> BigRational,
    ) -> Rational {
        if self.is_integer() && rhs.is_integer() {
            let (x, y) = (self.big_numer(), rhs.big_numer());
            return Rational::from_big(BigRational::from_integer(int_op(&x, &y)));
        }
        Rational::from_big(rat_op(&self.to_big(), &rhs.to_big()))
    }

    fn big_numer(&self) -> Cow<'_, BigInt> {
        match &self.0 {
            Repr::Small(n, _) => Cow::Owned((*n).into()),
            Repr::Big(r) => Cow::Borrowed(r.numer()),
        }
    }

    fn neg_impl(&self) -> Rational {
        match &self.0 {
            &Repr::Small(n, d) => Rational::from_reduced(-(n as i128), d as i128),
            Repr::Big(r) => Rational::from_big(-r),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = ParseError;

    /// Accepts `n` or `n/d` in base 10, optionally signed on either part.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let int = |part: &str| -> Result<BigInt, ParseError> {
            let part = part.trim();
            let digits = part.strip_prefix('+').unwrap_or(part);
            digits
                .parse::<BigInt>()
                .map_err(|e| ParseError::new("rational", s, e.to_string()))
        };
        match t.split_once('/') {
            None => Ok(Rational::from_integer(int(t)?)),
            Some((n, d)) => Rational::new(int(n)?, int(d)?)
                .map_err(|e| ParseError::new("rational", s, e.to_string())),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (&Repr::Small(a, b), &Repr::Small(c, d)) => {
                (a as i128 * d as i128).cmp(&(c as i128 * b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational(Repr::Small(n, 1))
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational(Repr::Small(n.into(), 1))
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl Sub<&Rational> for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        self.add_impl(&rhs.neg_impl())
    }
}

impl Add<&Rational> for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        self.add_impl(rhs)
    }
}

impl Mul<&Rational> for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        self.mul_impl(rhs)
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $trait::$method(self, &rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        self.neg_impl()
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        self.neg_impl()
    }
}
