//! Hamilton quaternions over an arbitrary commutative [`Ring`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{ArithError, ParseError};
use crate::quad::{Discriminant, QuadExt};
use crate::rational::Rational;
use crate::ring::Ring;

/// `w + x·i + y·j + z·k` with `i² = j² = k² = ijk = −1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quaternion<R> {
    pub w: R,
    pub x: R,
    pub y: R,
    pub z: R,
}

impl<R> Quaternion<R> {
    pub const fn new(w: R, x: R, y: R, z: R) -> Self {
        Quaternion { w, x, y, z }
    }

    pub fn components(&self) -> [&R; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }

    /// Applies `f` to every component.
    pub fn map<S>(&self, mut f: impl FnMut(&R) -> S) -> Quaternion<S> {
        Quaternion::new(f(&self.w), f(&self.x), f(&self.y), f(&self.z))
    }

    fn try_zip<S>(
        &self,
        rhs: &Self,
        mut f: impl FnMut(&R, &R) -> Result<S, ArithError>,
    ) -> Result<Quaternion<S>, ArithError> {
        Ok(Quaternion::new(
            f(&self.w, &rhs.w)?,
            f(&self.x, &rhs.x)?,
            f(&self.y, &rhs.y)?,
            f(&self.z, &rhs.z)?,
        ))
    }
}

impl<R: Ring> Quaternion<R> {
    /// The real quaternion `s + 0i + 0j + 0k`.
    pub fn scalar(s: R) -> Self {
        let zero = s.zero_like();
        Quaternion::new(s, zero.clone(), zero.clone(), zero)
    }

    pub fn zero_like(&self) -> Self {
        Quaternion::scalar(self.w.zero_like())
    }

    pub fn is_zero(&self) -> bool {
        self.components().iter().all(|c| c.is_zero())
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.try_zip(rhs, R::try_add)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.try_zip(rhs, R::try_sub)
    }

    /// Hamilton product.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self, ArithError> {
        let (a1, b1, c1, d1) = (&self.w, &self.x, &self.y, &self.z);
        let (a2, b2, c2, d2) = (&rhs.w, &rhs.x, &rhs.y, &rhs.z);
        let dot = b1
            .try_mul(b2)?
            .try_add(&c1.try_mul(c2)?)?
            .try_add(&d1.try_mul(d2)?)?;
        let w = a1.try_mul(a2)?.try_sub(&dot)?;
        let x = a1
            .try_mul(b2)?
            .try_add(&b1.try_mul(a2)?)?
            .try_add(&c1.try_mul(d2)?)?
            .try_sub(&d1.try_mul(c2)?)?;
        let y = a1
            .try_mul(c2)?
            .try_sub(&b1.try_mul(d2)?)?
            .try_add(&c1.try_mul(a2)?)?
            .try_add(&d1.try_mul(b2)?)?;
        let z = a1
            .try_mul(d2)?
            .try_add(&b1.try_mul(c2)?)?
            .try_sub(&c1.try_mul(b2)?)?
            .try_add(&d1.try_mul(a2)?)?;
        Ok(Quaternion::new(w, x, y, z))
    }

    /// `uv − vu`.
    pub fn try_commutator(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.try_mul(rhs)?.try_sub(&rhs.try_mul(self)?)
    }

    /// Multiplies every component by `k`, with `k` on the right.
    pub fn try_scale(&self, k: &R) -> Result<Self, ArithError> {
        Ok(Quaternion::new(
            self.w.try_mul(k)?,
            self.x.try_mul(k)?,
            self.y.try_mul(k)?,
            self.z.try_mul(k)?,
        ))
    }

    pub fn scale(&self, k: &R) -> Self {
        self.try_scale(k)
            .expect("quaternion and scalar from different rings")
    }

    /// Negates the vector part.
    pub fn conj(&self) -> Self {
        Quaternion::new(
            self.w.clone(),
            self.x.negated(),
            self.y.negated(),
            self.z.negated(),
        )
    }

    /// `w² + x² + y² + z²`.
    pub fn norm(&self) -> R {
        let sq = |c: &R| c.try_mul(c).expect("components share a ring");
        self.components()
            .iter()
            .skip(1)
            .fold(sq(&self.w), |acc, c| {
                acc.try_add(&sq(c)).expect("components share a ring")
            })
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        self.try_commutator(rhs)
            .expect("quaternions from different rings")
    }
}

impl Quaternion<Rational> {
    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        Quaternion::new(w.into(), x.into(), y.into(), z.into())
    }

    /// Embeds into the quaternions over `Q(√D)`.
    pub fn lift(&self, disc: &Discriminant) -> Quaternion<QuadExt> {
        self.map(|c| disc.embed(c.clone()))
    }
}

impl Quaternion<QuadExt> {
    /// Applies the Galois conjugation √D ↦ −√D to each component.
    pub fn galois_conjugate(&self) -> Self {
        self.map(QuadExt::conjugate)
    }

    /// The rational quaternion, when every √D part vanishes.
    pub fn to_rational(&self) -> Option<Quaternion<Rational>> {
        Some(Quaternion::new(
            self.w.to_rational()?,
            self.x.to_rational()?,
            self.y.to_rational()?,
            self.z.to_rational()?,
        ))
    }

    pub fn is_rational(&self) -> bool {
        self.components().iter().all(|c| c.is_rational())
    }

    /// Rational parts and √D parts as two rational quaternions.
    pub fn split(&self) -> (Quaternion<Rational>, Quaternion<Rational>) {
        (self.map(|c| c.rat().clone()), self.map(|c| c.irr().clone()))
    }

    pub fn scale_rational(&self, k: &Rational) -> Self {
        self.map(|c| c.scale(k))
    }
}

impl<R: Ring> fmt::Display for Quaternion<R> {
    /// `w + xi + yj + zk`, zero terms omitted, unit coefficients elided.
    /// Compound coefficients are parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (c, basis) in self.components().into_iter().zip(["", "i", "j", "k"]) {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let term = if basis.is_empty() {
                text
            } else if c.is_one() {
                basis.to_string()
            } else if c.negated().is_one() {
                format!("-{basis}")
            } else if text.chars().skip(1).any(|ch| ch == '+' || ch == '-') || text.contains('√')
            {
                format!("({text}){basis}")
            } else {
                format!("{text}{basis}")
            };
            if !out.is_empty() && !term.starts_with('-') {
                out.push('+');
            }
            out.push_str(&term);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl<R: Ring> fmt::Debug for Quaternion<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Quaternion<Rational> {
    type Err = ParseError;

    /// Parses the display form, e.g. `1+i+2j+3k`, `-2i-4j+2k`, `1/2-3/4k`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| ParseError::new("quaternion", s, reason);
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(err("empty input"));
        }
        let mut parts = [
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        ];
        let mut seen = [false; 4];
        let bytes = text.as_bytes();
        let mut start = 0;
        while start < bytes.len() {
            let mut end = start + 1;
            while end < bytes.len() && bytes[end] != b'+' && bytes[end] != b'-' {
                end += 1;
            }
            let term = &text[start..end];
            let (body, slot) = match term.chars().last() {
                Some('i') => (&term[..term.len() - 1], 1),
                Some('j') => (&term[..term.len() - 1], 2),
                Some('k') => (&term[..term.len() - 1], 3),
                _ => (term, 0),
            };
            let coeff = match body {
                "" | "+" => Rational::one(),
                "-" => -Rational::one(),
                _ => body.parse::<Rational>().map_err(|e| err(&e.reason))?,
            };
            if seen[slot] {
                return Err(err("repeated basis term"));
            }
            seen[slot] = true;
            parts[slot] = coeff;
            start = end;
        }
        let [w, x, y, z] = parts;
        Ok(Quaternion::new(w, x, y, z))
    }
}

macro_rules! quat_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a, R: Ring> $trait<&'a Quaternion<R>> for &'a Quaternion<R> {
            type Output = Quaternion<R>;
            fn $method(self, rhs: &'a Quaternion<R>) -> Quaternion<R> {
                self.$checked(rhs)
                    .expect("quaternions from different rings")
            }
        }
        impl<R: Ring> $trait<Quaternion<R>> for Quaternion<R> {
            type Output = Quaternion<R>;
            fn $method(self, rhs: Quaternion<R>) -> Quaternion<R> {
                (&self).$method(&rhs)
            }
        }
    };
}

quat_binop!(Add, add, try_add);
quat_binop!(Sub, sub, try_sub);
quat_binop!(Mul, mul, try_mul);

impl<R: Ring> Neg for &Quaternion<R> {
    type Output = Quaternion<R>;
    fn neg(self) -> Quaternion<R> {
        self.map(R::negated)
    }
}

impl<R: Ring> Neg for Quaternion<R> {
    type Output = Quaternion<R>;
    fn neg(self) -> Quaternion<R> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(w: i64, x: i64, y: i64, z: i64) -> Quaternion<Rational> {
        Quaternion::from_ints(w, x, y, z)
    }

    #[test]
    fn basis_relations() {
        let (one, i, j, k) = (q(1, 0, 0, 0), q(0, 1, 0, 0), q(0, 0, 1, 0), q(0, 0, 0, 1));
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &k, i);
        assert_eq!(&k * &i, j);
        assert_eq!(&j * &i, -&k);
        for u in [&i, &j, &k] {
            assert_eq!(u * u, -&one);
        }
        assert_eq!(&(&i * &j) * &k, -&one);
    }

    #[test]
    fn hamilton_products() {
        let u = q(1, 1, 2, 3);
        assert_eq!(&u * &u, q(-13, 2, 4, 6));
        assert_eq!(&q(1, 2, 3, 5) * &q(0, 1, 1, 2), q(-15, 2, 2, 1));
    }

    #[test]
    fn conjugate_and_norm() {
        assert_eq!(q(1, 1, 0, 0).conj(), q(1, -1, 0, 0));
        assert_eq!(q(0, 1, 1, 2).norm(), Rational::from(6));
        let (u, v) = (q(1, 1, 0, 0), q(0, 0, 1, 1));
        assert_eq!((&u * &v).norm(), Rational::from(4));
        assert_eq!(u.norm() * v.norm(), Rational::from(4));
    }

    #[test]
    fn commutators() {
        assert_eq!(q(0, 1, 0, 0).commutator(&q(0, 0, 1, 0)), q(0, 0, 0, 2));
        let u = q(1, 1, 2, 3);
        assert!(u.commutator(&u).is_zero());
        assert_eq!(u.commutator(&q(1, 2, 3, 5)), q(0, 2, 2, -2));
    }

    #[test]
    fn mixed_rings_are_rejected() {
        let a = Discriminant::new(5.into()).unwrap();
        let b = Discriminant::new(3.into()).unwrap();
        let u = q(1, 2, 3, 4).lift(&a);
        let v = q(1, 2, 3, 4).lift(&b);
        assert!(matches!(
            u.try_mul(&v),
            Err(ArithError::DiscriminantMismatch { .. })
        ));
        assert!(u.try_commutator(&v).is_err());
    }

    #[test]
    fn display_and_parse() {
        let cases = [
            (q(0, 1, 1, 2), "i+j+2k"),
            (q(1, 1, 2, 3), "1+i+2j+3k"),
            (q(0, -2, -4, 2), "-2i-4j+2k"),
            (q(2, 0, 2, 5), "2+2j+5k"),
            (q(0, 0, 0, 0), "0"),
            (q(-1, 0, 0, -1), "-1-k"),
        ];
        for (value, text) in cases {
            assert_eq!(value.to_string(), text);
            assert_eq!(text.parse::<Quaternion<Rational>>().unwrap(), value);
        }
        let half = Quaternion::new(
            Rational::new(1, 2).unwrap(),
            Rational::zero(),
            Rational::zero(),
            Rational::new(-3, 4).unwrap(),
        );
        assert_eq!(half.to_string(), "1/2-3/4k");
        assert_eq!("1/2-3/4k".parse::<Quaternion<Rational>>().unwrap(), half);
        assert!("2i+3i".parse::<Quaternion<Rational>>().is_err());
        assert!("".parse::<Quaternion<Rational>>().is_err());
        assert!("1+xj".parse::<Quaternion<Rational>>().is_err());
    }

    #[test]
    fn quadext_display_parenthesizes() {
        let d = Discriminant::new(5.into()).unwrap();
        let one = Rational::one();
        let u = Quaternion::new(
            d.embed(2.into()),
            d.element(one.clone(), -&one),
            d.element(3.into(), -&one),
            d.element(4.into(), one.clone()),
        );
        assert_eq!(u.to_string(), "2+(1-√5)i+(3-√5)j+(4+√5)k");
        assert_eq!(
            u.galois_conjugate().to_string(),
            "2+(1+√5)i+(3+√5)j+(4-√5)k"
        );
    }
}
