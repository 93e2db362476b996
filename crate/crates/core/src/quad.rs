//! The ring Q[t]/(t² − D): rationals with a formally adjoined square root of D.
//!
//! D need not be positive or square-free. When D is a perfect square the ring has
//! zero divisors, so [`QuadExt::inverse`] is fallible; the root difference √D
//! itself always has norm −D ≠ 0.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::ArithError;
use crate::rational::Rational;
use crate::ring::Ring;

/// A nonzero discriminant shared by every element of one extension ring.
#[derive(Clone, Debug, Eq)]
pub struct Discriminant(Arc<Rational>);

impl Discriminant {
    pub fn new(d: Rational) -> Result<Self, ArithError> {
        if d.is_zero() {
            return Err(ArithError::ZeroDiscriminant);
        }
        Ok(Discriminant(Arc::new(d)))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    /// `x + y√D`.
    pub fn element(&self, rat: Rational, irr: Rational) -> QuadExt {
        QuadExt {
            rat,
            irr,
            disc: self.clone(),
        }
    }

    /// Embeds a rational as `r + 0√D`.
    pub fn embed(&self, r: Rational) -> QuadExt {
        self.element(r, Rational::zero())
    }

    /// `0 + 1√D`.
    pub fn sqrt(&self) -> QuadExt {
        self.element(Rational::zero(), Rational::one())
    }

    pub fn zero(&self) -> QuadExt {
        self.embed(Rational::zero())
    }

    pub fn one(&self) -> QuadExt {
        self.embed(Rational::one())
    }
}

impl PartialEq for Discriminant {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Hash for Discriminant {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.hash(state);
    }
}

impl fmt::Display for Discriminant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.value();
        if d.is_integer() && !d.is_negative() {
            write!(f, "√{d}")
        } else {
            write!(f, "√({d})")
        }
    }
}

/// An element `rat + irr·√D`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    rat: Rational,
    irr: Rational,
    disc: Discriminant,
}

impl QuadExt {
    pub fn new(rat: Rational, irr: Rational, disc: Rational) -> Result<Self, ArithError> {
        Ok(Discriminant::new(disc)?.element(rat, irr))
    }

    pub fn rat(&self) -> &Rational {
        &self.rat
    }

    pub fn irr(&self) -> &Rational {
        &self.irr
    }

    pub fn discriminant(&self) -> &Discriminant {
        &self.disc
    }

    /// True when the √D part vanishes.
    pub fn is_rational(&self) -> bool {
        self.irr.is_zero()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.rat.clone())
    }

    /// The Galois conjugate `x − y√D`.
    pub fn conjugate(&self) -> Self {
        self.disc.element(self.rat.clone(), -&self.irr)
    }

    /// Ring norm `x² − D·y²`.
    pub fn norm(&self) -> Rational {
        &self.rat * &self.rat - self.disc.value() * &(&self.irr * &self.irr)
    }

    fn check(&self, rhs: &Self) -> Result<(), ArithError> {
        if self.disc == rhs.disc {
            Ok(())
        } else {
            Err(ArithError::DiscriminantMismatch {
                left: self.disc.value().to_string(),
                right: rhs.disc.value().to_string(),
            })
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.check(rhs)?;
        Ok(self
            .disc
            .element(&self.rat + &rhs.rat, &self.irr + &rhs.irr))
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.check(rhs)?;
        Ok(self
            .disc
            .element(&self.rat - &rhs.rat, &self.irr - &rhs.irr))
    }

    /// `(x₁ + y₁√D)(x₂ + y₂√D) = (x₁x₂ + D·y₁y₂) + (x₁y₂ + x₂y₁)√D`.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.check(rhs)?;
        let rat = &self.rat * &rhs.rat + self.disc.value() * &(&self.irr * &rhs.irr);
        let irr = &self.rat * &rhs.irr + &rhs.rat * &self.irr;
        Ok(self.disc.element(rat, irr))
    }

    /// Multiplies by a rational scalar.
    pub fn scale(&self, k: &Rational) -> Self {
        self.disc.element(&self.rat * k, &self.irr * k)
    }

    /// `(x − y√D) / (x² − D·y²)`.
    pub fn inverse(&self) -> Result<Self, ArithError> {
        let norm = self.norm();
        if norm.is_zero() {
            return Err(ArithError::NotInvertible(self.to_string()));
        }
        let inv = norm.recip()?;
        Ok(self.disc.element(&self.rat * &inv, -(&self.irr * &inv)))
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.try_mul(&rhs.inverse()?)
    }

    /// Integer power; negative exponents go through [`QuadExt::inverse`].
    pub fn pow(&self, exp: i64) -> Result<Self, ArithError> {
        let mut base = if exp < 0 {
            self.inverse()?
        } else {
            self.clone()
        };
        let mut e = exp.unsigned_abs();
        let mut acc = self.disc.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Canonical triple `["x", "y", "D"]`.
    pub fn to_triple(&self) -> [String; 3] {
        [
            self.rat.to_string(),
            self.irr.to_string(),
            self.disc.value().to_string(),
        ]
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let root = self.disc.to_string();
        let irr = if self.irr.is_one() {
            root
        } else if (-&self.irr).is_one() {
            format!("-{root}")
        } else {
            format!("{}{root}", self.irr)
        };
        match (self.rat.is_zero(), self.irr.is_zero()) {
            (_, true) => write!(f, "{}", self.rat),
            (true, false) => f.write_str(&irr),
            (false, false) if irr.starts_with('-') => write!(f, "{}{irr}", self.rat),
            (false, false) => write!(f, "{}+{irr}", self.rat),
        }
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadExt({} ; D={})", self, self.disc.value())
    }
}

impl Ring for QuadExt {
    fn zero_like(&self) -> Self {
        self.disc.zero()
    }

    fn one_like(&self) -> Self {
        self.disc.one()
    }

    fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }

    fn is_one(&self) -> bool {
        self.rat.is_one() && self.irr.is_zero()
    }

    fn negated(&self) -> Self {
        -self
    }

    fn try_add(&self, rhs: &Self) -> Result<Self, ArithError> {
        QuadExt::try_add(self, rhs)
    }

    fn try_sub(&self, rhs: &Self) -> Result<Self, ArithError> {
        QuadExt::try_sub(self, rhs)
    }

    fn try_mul(&self, rhs: &Self) -> Result<Self, ArithError> {
        QuadExt::try_mul(self, rhs)
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        self.disc.element(-&self.rat, -&self.irr)
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -&self
    }
}

// Operator forms panic on mismatched discriminants; use the `try_` methods
// when the operands may come from different rings.
macro_rules! quad_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a> $trait<&'a QuadExt> for &'a QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: &'a QuadExt) -> QuadExt {
                self.$checked(rhs)
                    .expect("QuadExt operands from different rings")
            }
        }
        impl $trait<QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: QuadExt) -> QuadExt {
                (&self).$method(&rhs)
            }
        }
    };
}

quad_binop!(Add, add, try_add);
quad_binop!(Sub, sub, try_sub);
quad_binop!(Mul, mul, try_mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn five() -> Discriminant {
        Discriminant::new(r(5, 1)).unwrap()
    }

    #[test]
    fn root_squares_to_discriminant() {
        let d = five();
        assert_eq!(d.sqrt() * d.sqrt(), d.embed(r(5, 1)));
    }

    #[test]
    fn golden_roots_multiply_to_minus_q() {
        let d = five();
        let alpha = d.element(r(1, 2), r(1, 2));
        let beta = d.element(r(1, 2), r(-1, 2));
        assert_eq!(&alpha * &beta, d.embed(r(-1, 1)));
        assert_eq!(&alpha + &beta, d.one());
        assert_eq!(d.one() * alpha.clone(), alpha);
    }

    #[test]
    fn inverses() {
        let d = five();
        assert_eq!(d.one().inverse().unwrap(), d.one());
        assert_eq!(d.sqrt().inverse().unwrap(), d.element(r(0, 1), r(1, 5)));
        let alpha = d.element(r(1, 2), r(1, 2));
        let inv = alpha.inverse().unwrap();
        assert_eq!(inv, d.element(r(-1, 2), r(1, 2)));
        assert_eq!(&alpha * &inv, d.one());
    }

    #[test]
    fn zero_norm_is_not_invertible() {
        // D = 4 is a perfect square: (2 + √4)(2 − √4) = 0.
        let d = Discriminant::new(r(4, 1)).unwrap();
        let u = d.element(r(2, 1), r(1, 1));
        assert!(u.norm().is_zero());
        assert!(matches!(u.inverse(), Err(ArithError::NotInvertible(_))));
        assert_eq!(d.sqrt().norm(), r(-4, 1));
        assert!(d.sqrt().inverse().is_ok());
    }

    #[test]
    fn mismatched_discriminants_error() {
        let a = five().sqrt();
        let b = Discriminant::new(r(3, 1)).unwrap().sqrt();
        assert!(matches!(
            a.try_mul(&b),
            Err(ArithError::DiscriminantMismatch { .. })
        ));
        assert!(a.try_add(&b).is_err());
        assert!(a.try_sub(&b).is_err());
        assert_eq!(
            Discriminant::new(Rational::zero()),
            Err(ArithError::ZeroDiscriminant)
        );
    }

    #[test]
    fn powers_and_negative_powers() {
        let d = five();
        let alpha = d.element(r(1, 2), r(1, 2));
        // α⁵ = F₅α + F₄ = 5α + 3
        assert_eq!(alpha.pow(5).unwrap(), d.element(r(11, 2), r(5, 2)));
        assert_eq!(&alpha.pow(-3).unwrap() * &alpha.pow(3).unwrap(), d.one());
        assert_eq!(alpha.pow(0).unwrap(), d.one());
    }

    #[test]
    fn display_forms() {
        let d = five();
        assert_eq!(d.element(r(1, 1), r(-1, 1)).to_string(), "1-√5");
        assert_eq!(d.element(r(4, 1), r(1, 1)).to_string(), "4+√5");
        assert_eq!(d.element(r(0, 1), r(-3, 2)).to_string(), "-3/2√5");
        assert_eq!(d.element(r(2, 1), r(0, 1)).to_string(), "2");
        let neg = Discriminant::new(r(-11, 1)).unwrap();
        assert_eq!(neg.sqrt().to_string(), "√(-11)");
        assert_eq!(
            d.element(r(1, 2), r(-1, 2)).to_triple(),
            ["1/2".to_string(), "-1/2".to_string(), "5".to_string()]
        );
    }
}
