//! `J_nu` by its ascending series and the first positive zero `j_{nu,1}`.
//!
//! The asymptotic Markov constant is `c(alpha) = 1 / j_{(alpha-1)/2, 1}`.
//!
//! The alternating series loses accuracy to cancellation as `x` grows. The
//! certified envelope is `-1 < nu <= 25` and any `x` at which
//! `sum |t_m| / t_0` (the cancellation amplification) stays below
//! [`MAX_AMPLIFICATION`]; outside it, evaluation fails instead of degrading.

use serde::{Deserialize, Serialize};

use crate::bounds::corollary2_bessel_bounds;
use crate::error::{Error, Result};
use crate::recurrence::WeightAlpha;

pub const MAX_ORDER: f64 = 25.0;
pub const MAX_AMPLIFICATION: f64 = 1e7;
const ZERO_SCAN_STEP: f64 = 0.5;

pub const DEFAULT_TRUNCATION: f64 = 1e-18;
const MIN_TERMS: usize = 30;
const MAX_TERMS: usize = 2000;
const MAX_ZERO_STEPS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BesselOrder {
    nu: f64,
}

impl BesselOrder {
    pub fn new(nu: f64) -> Result<Self> {
        if !(nu > -1.0 && nu.is_finite()) {
            return Err(Error::InvalidOrder(nu.to_string()));
        }
        Ok(Self { nu })
    }

    /// `nu = (alpha - 1)/2`, the order tied to the Laguerre parameter.
    pub fn from_alpha(alpha: &WeightAlpha) -> Result<Self> {
        Self::new((alpha.get() - 1.0) / 2.0)
    }

    pub fn get(&self) -> f64 {
        self.nu
    }
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// `ln Gamma(x)` for `x > 0` (Lanczos, g = 7, nine terms).
pub fn ln_gamma(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    if x < 0.5 {
        // Gamma(x) = Gamma(x + 1) / x
        return ln_gamma(x + 1.0) - x.ln();
    }
    let z = x - 1.0;
    let series = LANCZOS_COEFFS[1..]
        .iter()
        .enumerate()
        .fold(LANCZOS_COEFFS[0], |acc, (i, c)| acc + c / (z + i as f64 + 1.0));
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (z + 0.5) * t.ln() - t + series.ln()
}

/// Result of summing the ascending series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: f64,
    /// `sum |t_m|`
    pub abs_sum: f64,
    /// `t_0 = (x/2)^nu / Gamma(nu + 1)`
    pub leading: f64,
    pub terms: usize,
}

impl SeriesValue {
    pub fn amplification(&self) -> f64 {
        self.abs_sum / self.leading
    }
}

fn sum_series(nu: f64, x: f64, truncation: f64) -> SeriesValue {
    let half = 0.5 * x;
    let leading = (nu * half.ln() - ln_gamma(nu + 1.0)).exp();
    let q = half * half;
    // Neumaier-compensated summation
    let (mut sum, mut comp, mut abs_sum) = (0.0f64, 0.0f64, 0.0f64);
    let mut term = leading;
    let mut m = 0usize;
    loop {
        let s = sum + term;
        comp += if sum.abs() >= term.abs() { (sum - s) + term } else { (term - s) + sum };
        sum = s;
        abs_sum += term.abs();
        m += 1;
        if (m >= MIN_TERMS && term.abs() <= truncation * (sum + comp).abs()) || m >= MAX_TERMS || term == 0.0 {
            break;
        }
        term = -term * q / (m as f64 * (nu + m as f64));
    }
    SeriesValue {
        value: sum + comp,
        abs_sum,
        leading,
        terms: m,
    }
}

/// Ascending series with an explicit relative truncation threshold.
pub fn bessel_j_series(nu: &BesselOrder, x: f64, truncation: f64) -> Result<SeriesValue> {
    let v = nu.get();
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::InvalidArgument(format!("J_nu(x) needs x > 0, got {x}")));
    }
    if v > MAX_ORDER {
        return Err(Error::OutsideEnvelope {
            nu: v,
            x,
            reason: format!("order above {MAX_ORDER}"),
        });
    }
    let s = sum_series(v, x, truncation);
    if s.leading == 0.0 {
        // (x/2)^nu underflowed; the true value is below the binary64 range.
        return Ok(SeriesValue { value: 0.0, ..s });
    }
    if !(s.amplification() <= MAX_AMPLIFICATION) {
        return Err(Error::OutsideEnvelope {
            nu: v,
            x,
            reason: format!(
                "cancellation amplification {:.3e} exceeds {MAX_AMPLIFICATION:e}",
                s.amplification()
            ),
        });
    }
    Ok(s)
}

/// `J_nu(x)`.
pub fn bessel_j(nu: &BesselOrder, x: f64) -> Result<f64> {
    bessel_j_series(nu, x, DEFAULT_TRUNCATION).map(|s| s.value)
}

/// Largest `x` inside the envelope for this order.
pub fn envelope_x_max(nu: &BesselOrder) -> f64 {
    let amp = |x: f64| {
        let s = sum_series(nu.get(), x, DEFAULT_TRUNCATION);
        s.amplification()
    };
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    while amp(hi) <= MAX_AMPLIFICATION {
        lo = hi;
        hi *= 2.0;
    }
    while hi - lo > 1e-9 * hi {
        let mid = 0.5 * (lo + hi);
        if amp(mid) <= MAX_AMPLIFICATION {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

fn bisect_zero(nu: &BesselOrder, mut lo: f64, mut hi: f64, tol: f64) -> Result<f64> {
    let f_lo = bessel_j(nu, lo)?;
    let f_hi = bessel_j(nu, hi)?;
    if !(f_lo > 0.0 && f_hi < 0.0) {
        return Err(Error::SameSignBracket {
            nu: nu.get(),
            lo,
            hi,
            f_lo,
            f_hi,
        });
    }
    for _ in 0..MAX_ZERO_STEPS {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= tol * mid.max(1.0) || mid <= lo || mid >= hi {
            return Ok(mid);
        }
        let f = bessel_j(nu, mid)?;
        if f == 0.0 {
            return Ok(mid);
        } else if f > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Err(Error::NonConvergence {
        iterations: MAX_ZERO_STEPS,
        lo,
        hi,
    })
}

/// `j_{nu,1}`, located inside the closed-form enclosure
/// `2^{5/6} sqrt(nu+1) ((nu+2)(nu+3))^{1/6} < j < sqrt(2(nu+1)(nu+3))`.
///
/// For larger orders the upper end lies past `j_{nu,2}`, so the enclosure is
/// walked upward from its lower end in steps of at most `ZERO_SCAN_STEP` (below
/// the zero spacing, which exceeds `pi/2` here) and the first sign change is bisected.
/// `J_nu > 0` on `(0, j_{nu,1})`, so a non-positive value at the lower end is
/// reported as [`Error::SameSignBracket`].
pub fn first_zero(nu: &BesselOrder, tol: f64) -> Result<f64> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    let bracket = corollary2_bessel_bounds(nu);
    let f_lo = bessel_j(nu, bracket.lower)?;
    if !(f_lo > 0.0) {
        let f_hi = bessel_j(nu, bracket.upper)?;
        return Err(Error::SameSignBracket {
            nu: nu.get(),
            lo: bracket.lower,
            hi: bracket.upper,
            f_lo,
            f_hi,
        });
    }
    let steps = (bracket.width() / ZERO_SCAN_STEP).ceil().max(1.0) as usize;
    let h = bracket.width() / steps as f64;
    let mut left = bracket.lower;
    for k in 1..=steps {
        let right = if k == steps { bracket.upper } else { bracket.lower + k as f64 * h };
        if bessel_j(nu, right)? <= 0.0 {
            return bisect_zero(nu, left, right, tol);
        }
        left = right;
    }
    // no sign change inside: let bisect_zero report the endpoint values
    bisect_zero(nu, bracket.lower, bracket.upper, tol)
}

/// Diagnostic route to `j_{nu,1}` that ignores the closed-form enclosure:
/// scan `(0, 1.25 * upper]` on `steps` points for the first sign change, then bisect.
pub fn first_zero_scan(nu: &BesselOrder, tol: f64, steps: usize) -> Result<f64> {
    let reach = 1.25 * corollary2_bessel_bounds(nu).upper;
    let h = reach / steps.max(2) as f64;
    let mut x = h;
    while x <= reach {
        let next = x + h;
        if bessel_j(nu, next)? <= 0.0 {
            return bisect_zero(nu, x, next, tol);
        }
        x = next;
    }
    Err(Error::NonConvergence {
        iterations: steps,
        lo: 0.0,
        hi: reach,
    })
}

/// `c(alpha) = lim c_n(alpha)/n = 1 / j_{(alpha-1)/2, 1}`.
pub fn asymptotic_constant(alpha: &WeightAlpha, tol: f64) -> Result<f64> {
    first_zero(&BesselOrder::from_alpha(alpha)?, tol).map(f64::recip)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn order(nu: f64) -> BesselOrder {
        BesselOrder::new(nu).unwrap()
    }

    #[test]
    fn log_gamma_reference_values() {
        assert_relative_eq!(ln_gamma(0.5), PI.sqrt().ln(), max_relative = 1e-14);
        assert!(ln_gamma(1.0).abs() < 1e-14);
        assert!(ln_gamma(2.0).abs() < 1e-14);
        assert_relative_eq!(ln_gamma(1.5), (0.5 * PI.sqrt()).ln(), max_relative = 1e-13);
        let fact_20: f64 = (1..20).map(|k| k as f64).product();
        assert_relative_eq!(ln_gamma(20.0), fact_20.ln(), max_relative = 1e-14);
        // Gamma(0.01) = Gamma(1.01)/0.01
        assert_relative_eq!(ln_gamma(0.01), 4.599479878042022, max_relative = 1e-13);
    }

    #[test]
    fn half_integer_closed_forms() {
        for x in [0.3, 1.0, 2.5, 7.0] {
            let j_half = (2.0 / (PI * x)).sqrt() * x.sin();
            let j_minus_half = (2.0 / (PI * x)).sqrt() * x.cos();
            assert_relative_eq!(bessel_j(&order(0.5), x).unwrap(), j_half, max_relative = 1e-13);
            assert_relative_eq!(bessel_j(&order(-0.5), x).unwrap(), j_minus_half, max_relative = 1e-13);
        }
        assert!(bessel_j(&order(0.5), PI).unwrap().abs() < 1e-15);
        assert!(bessel_j(&order(-0.5), PI / 2.0).unwrap().abs() < 1e-15);
    }

    #[test]
    fn zeros_of_half_integer_orders() {
        assert!((first_zero(&order(0.5), 1e-14).unwrap() - PI).abs() < 1e-13);
        assert!((first_zero(&order(-0.5), 1e-14).unwrap() - PI / 2.0).abs() < 1e-13);
    }

    #[test]
    fn asymptotic_constant_examples() {
        let c = |a: f64| asymptotic_constant(&WeightAlpha::new(a).unwrap(), 1e-14).unwrap();
        assert_relative_eq!(c(0.0), 2.0 / PI, max_relative = 1e-13);
        assert_relative_eq!(c(2.0), 1.0 / PI, max_relative = 1e-13);
    }

    #[test]
    fn scan_agrees_with_bracketed_route() {
        // the series loses digits to cancellation as nu grows, so the zero does too
        for (nu, rel) in [(-0.9, 1e-12), (0.0, 1e-12), (3.3, 1e-11), (24.0, 1e-9)] {
            let a = first_zero(&order(nu), 1e-13).unwrap();
            let b = first_zero_scan(&order(nu), 1e-13, 4000).unwrap();
            assert_relative_eq!(a, b, max_relative = rel);
        }
        let j = first_zero(&order(24.0), 1e-13).unwrap();
        assert_relative_eq!(j, 29.7105088898112, max_relative = 1e-9);
    }

    #[test]
    fn envelope_errors() {
        assert!(matches!(bessel_j(&order(30.0), 1.0), Err(Error::OutsideEnvelope { .. })));
        assert!(matches!(bessel_j(&order(0.0), 60.0), Err(Error::OutsideEnvelope { .. })));
        assert!(matches!(bessel_j(&order(0.0), -1.0), Err(Error::InvalidArgument(_))));
        assert!(BesselOrder::new(-1.0).is_err());
        let x_max = envelope_x_max(&order(25.0));
        assert!(x_max > corollary2_bessel_bounds(&order(25.0)).upper, "{x_max}");
        assert!(bessel_j(&order(25.0), x_max * 0.999).is_ok());
        assert!(bessel_j(&order(25.0), x_max * 1.01).is_err());
    }

    #[test]
    fn truncation_threshold_is_not_load_bearing() {
        for nu in [-0.75, 0.0, 2.5, 12.0, 25.0] {
            let upper = corollary2_bessel_bounds(&order(nu)).upper;
            for frac in [0.1, 0.5, 0.9] {
                let x = frac * upper;
                let a = bessel_j_series(&order(nu), x, DEFAULT_TRUNCATION).unwrap().value;
                let b = bessel_j_series(&order(nu), x, 2.0 * DEFAULT_TRUNCATION).unwrap().value;
                assert!(((a - b) / a).abs() <= 1e-14, "nu={nu} x={x}");
            }
        }
    }
}
