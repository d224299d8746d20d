//! Absolute zeta functions of F1-schemes, computed exactly, together with
//! multiple Hurwitz zeta, multiple gamma and multiple sine functions of
//! negative order.
//!
//! Symbolic objects carry exact rational data ([`Rational`]); numerical
//! routines in [`numerics`] evaluate the same objects through independent
//! representations (series, singular quadrature, Euler–Maclaurin) so every
//! closed form can be cross-checked.
//!
//! ```
//! use f1zeta::{catalog::SchemeSpec, symzeta::zeta_of};
//!
//! let sl2 = SchemeSpec::sl(2).unwrap();
//! let zeta = zeta_of(&sl2.counting());
//! assert_eq!(zeta.to_string(), "(s-1)^1 * (s-3)^-1");
//! ```

pub mod catalog;
pub mod counting;
pub mod error;
pub mod gammasine;
pub mod numerics;
pub mod parser;
pub mod rational;
pub mod symzeta;

pub use catalog::SchemeSpec;
pub use counting::CountingFunction;
pub use error::{Result, ZetaError};
pub use gammasine::{MultiGammaSpec, PeriodVector};
pub use rational::Rational;
pub use symzeta::{ComplexPoint, FeParams, HurwitzForm, PowerProduct, SignedProduct};
