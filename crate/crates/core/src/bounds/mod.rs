//! Two-sided bounds for `c_n(alpha)^2` and for the asymptotic constant `c(alpha)`.

mod asymptotic;
mod finite;
mod identities;

use serde::{Deserialize, Serialize};

pub use asymptotic::{
    corollary1_bounds, corollary2_bessel_bounds, ratio_r, theorem3_upper, upper_bound_crossings,
};
pub use finite::{
    bounds_report, dorfler_bounds, laguerre_samuelson, power_sums, prop1_bounds, theorem2_bounds,
    turan_constant, BoundsReport, PowerSumTriple, Prop1Bounds, Theorem2Bounds,
};
pub use identities::{
    identity_residuals, lower_residual_coefficients, printed_nu_tilde, residual_sandwich_check,
    resolve_kappa_normalization, upper_residual_coefficients, IdentityResidual, LowerNormalization,
};

/// A closed interval `[lower, upper]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lower: f64,
    pub upper: f64,
}

impl Interval {
    pub fn new(lower: f64, upper: f64) -> Self {
        Self { lower, upper }
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lower <= x && x <= self.upper
    }

    pub fn contains_strictly(&self, x: f64) -> bool {
        self.lower < x && x < self.upper
    }

    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }
}
