//! Numerical engine for the negative-order multiple Hurwitz zeta and gamma
//! functions, the integral representations they satisfy, and the classical
//! (order one) Hurwitz zeta used for the Euler reflection spot check.
//!
//! Every closed form produced by the symbolic modules has at least one
//! independent numerical route here:
//!
//! * [`series`]: generalized binomial series with an asymptotic tail,
//! * [`integral`]: singular quadrature of the Mellin-type integrals,
//! * [`hurwitz`]: Euler–Maclaurin for `ζ(w, x)` and `∂_w ζ(w, x)`.

pub mod hurwitz;
pub mod integral;
pub mod quad;
pub mod series;
pub mod special;

pub use hurwitz::{classical_hurwitz, euler_reflection_check, log_gamma_one};
pub use integral::{gamma_integral, log_zeta_integral, monomial_kernel_check, QuadSettings};
pub use series::{
    binomial_identity_sum, gamma_series, gen_binom, theorem2_zero_check, zeta_series,
    SeriesSettings,
};
