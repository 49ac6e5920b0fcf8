//! Sharp constants in the L2 Markov inequality with Laguerre weight `t^alpha e^{-t}`.
//!
//! `c_n(alpha)`, the best constant in `||p'|| <= c_n(alpha) ||p||` over polynomials
//! of degree at most `n`, satisfies `1/c_n(alpha)^2 = ` smallest zero of an
//! orthogonal polynomial `Q_n(x, alpha)` given by a three-term recurrence. This
//! crate computes that zero as the smallest eigenvalue of the associated Jacobi
//! matrix, evaluates the known finite-`n` and asymptotic bounds, and checks the
//! closed-form coefficient identities in exact rational arithmetic.
//!
//! ```
//! use markov_laguerre::{markov_constant, WeightAlpha};
//!
//! let alpha = WeightAlpha::new(0.0)?;
//! let c10 = markov_constant(&alpha, 10, 1e-13)?;
//! let turan = 1.0 / (2.0 * (std::f64::consts::PI / 42.0).sin());
//! assert!((c10 - turan).abs() < 1e-11 * turan);
//! # Ok::<(), markov_laguerre::Error>(())
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod bessel;
pub mod bounds;
pub mod error;
pub mod number;
pub mod recurrence;
pub mod tridiag;

pub use bessel::{asymptotic_constant, bessel_j, first_zero, BesselOrder};
pub use bounds::{bounds_report, BoundsReport, Interval};
pub use error::{Error, Result};
pub use number::{NumberMode, Scalar};
pub use recurrence::{
    coeff_a0, coeff_a1, coeff_a2, coeff_a3, qn_coefficients, recurrence_coeffs, reciprocal_b123,
    MonicPoly, RecurrenceCoeffs, WeightAlpha,
};
pub use tridiag::{
    build_jacobi, markov_constant, markov_constant_certified, EigenResult, MarkovConstant,
    TridiagMatrix, DEFAULT_TOL,
};

pub use num_rational::BigRational;
