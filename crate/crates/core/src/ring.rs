use std::fmt;

use crate::error::ArithError;
use crate::rational::Rational;

/// Commutative ring contract for quaternion coefficients.
///
/// Operations are fallible because some rings carry a context (the
/// discriminant of a quadratic extension) and refuse to mix contexts.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display {
    /// Additive identity in the same context as `self`.
    fn zero_like(&self) -> Self;
    /// Multiplicative identity in the same context as `self`.
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn negated(&self) -> Self;
    fn try_add(&self, rhs: &Self) -> Result<Self, ArithError>;
    fn try_sub(&self, rhs: &Self) -> Result<Self, ArithError>;
    fn try_mul(&self, rhs: &Self) -> Result<Self, ArithError>;
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }

    fn one_like(&self) -> Self {
        Rational::one()
    }

    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }

    fn is_one(&self) -> bool {
        Rational::is_one(self)
    }

    fn negated(&self) -> Self {
        -self
    }

    fn try_add(&self, rhs: &Self) -> Result<Self, ArithError> {
        Ok(self + rhs)
    }

    fn try_sub(&self, rhs: &Self) -> Result<Self, ArithError> {
        Ok(self - rhs)
    }

    fn try_mul(&self, rhs: &Self) -> Result<Self, ArithError> {
        Ok(self * rhs)
    }
}
