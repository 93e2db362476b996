//! Exact arithmetic for Horadam quaternion sequences.
//!
//! Scalars are canonical rationals ([`Rational`]); characteristic roots live in
//! the formal quadratic extension Q(√D) ([`QuadExt`]); quaternions are generic
//! over any coefficient [`Ring`]. On top of that sit the Horadam sequence
//! ([`sequence`]), its quaternion lift ([`horadam_quat`]), exact checkers for the
//! Catalan, Cassini, d'Ocagne, commutator and square-difference identities
//! ([`identities`]), and grid-wide verification ([`campaign`]).
//!
//! ```
//! use horadam_core::{HoradamParams, HoradamQuatContext, identities};
//!
//! let ctx = HoradamQuatContext::new(HoradamParams::from_ints(1, 1, 0, 1).unwrap());
//! assert_eq!(ctx.qw_term(1).to_string(), "1+i+2j+3k");
//! let report = identities::cassini_check(&ctx, 1);
//! assert!(report.equal);
//! assert_eq!(report.lhs.to_string(), "2+2j+5k");
//! ```

pub mod bench;
pub mod campaign;
pub mod error;
pub mod horadam_quat;
pub mod identities;
pub mod quad;
pub mod quaternion;
pub mod rational;
pub mod ring;
pub mod sequence;

pub use error::{ArithError, ParamError, ParseError};
pub use horadam_quat::{HoradamQuatContext, QuadQuat, RatQuat, SpecialKind};
pub use identities::{IdentityId, IdentityReport};
pub use quad::{Discriminant, QuadExt};
pub use quaternion::Quaternion;
pub use rational::Rational;
pub use ring::Ring;
pub use sequence::{DerivedConstants, HoradamParams};
