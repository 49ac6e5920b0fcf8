use std::f64::consts::PI;

use super::Interval;
use crate::bessel::BesselOrder;
use crate::error::{Error, Result};
use crate::recurrence::WeightAlpha;

/// Bounds on `c(alpha) = lim c_n(alpha)/n`:
/// `sqrt(2)/sqrt((a+1)(a+5)) <= c(alpha) <= 1/(sqrt(a+1) ((a+3)(a+5))^{1/6})`.
pub fn corollary1_bounds(alpha: &WeightAlpha) -> Interval {
    let a = alpha.get();
    let lower = (2.0 / ((a + 1.0) * (a + 5.0))).sqrt();
    let upper = 1.0 / ((a + 1.0).sqrt() * ((a + 3.0) * (a + 5.0)).powf(1.0 / 6.0));
    Interval::new(lower, upper)
}

/// `2/(alpha + 2 pi - 2)`, stated as an upper bound for `c(alpha)` when `alpha > 1`.
///
/// It is equivalent to `j_{nu,1} > nu + pi - 1/2` with `nu = (alpha-1)/2`, which is
/// an equality at `alpha = 2` and fails on `1 < alpha < 2`; it holds strictly for `alpha > 2`.
pub fn theorem3_upper(alpha: &WeightAlpha) -> Result<f64> {
    let a = alpha.get();
    if !(a > 1.0) {
        return Err(Error::InvalidArgument(format!(
            "the 2/(alpha + 2pi - 2) bound needs alpha > 1, got {a}"
        )));
    }
    Ok(2.0 / (a + 2.0 * PI - 2.0))
}

/// Enclosure of the first positive zero `j_{nu,1}`:
/// `2^{5/6} sqrt(nu+1) ((nu+2)(nu+3))^{1/6} < j_{nu,1} < sqrt(2(nu+1)(nu+3))`.
pub fn corollary2_bessel_bounds(nu: &BesselOrder) -> Interval {
    let v = nu.get();
    let lower = 2f64.powf(5.0 / 6.0) * (v + 1.0).sqrt() * ((v + 2.0) * (v + 3.0)).powf(1.0 / 6.0);
    let upper = (2.0 * (v + 1.0) * (v + 3.0)).sqrt();
    Interval::new(lower, upper)
}

/// Ratio of the two asymptotic bounds, `c_upper(alpha) / c_lower(alpha)`.
pub fn ratio_r(alpha: &WeightAlpha) -> f64 {
    let b = corollary1_bounds(alpha);
    b.upper / b.lower
}

fn upper_gap(a: f64) -> f64 {
    let alpha = WeightAlpha::new(a).expect("alpha > 1 on the crossing search");
    corollary1_bounds(&alpha).upper - 2.0 / (a + 2.0 * PI - 2.0)
}

/// Points in `(1, alpha_max]` where the two upper bounds for `c(alpha)` cross,
/// found by a sign scan with step `step` refined by bisection to `tol`.
pub fn upper_bound_crossings(alpha_max: f64, step: f64, tol: f64) -> Result<Vec<f64>> {
    if !(alpha_max > 1.0) || !(step > 0.0) || !(tol > 0.0) {
        return Err(Error::InvalidArgument(
            "crossing search needs alpha_max > 1, step > 0 and tol > 0".into(),
        ));
    }
    let mut crossings = Vec::new();
    let mut left = 1.0 + step.min(1e-3);
    let mut f_left = upper_gap(left);
    while left < alpha_max {
        let right = (left + step).min(alpha_max);
        let f_right = upper_gap(right);
        if f_left == 0.0 {
            crossings.push(left);
        } else if f_left.signum() != f_right.signum() && f_right != 0.0 {
            let (mut lo, mut hi) = (left, right);
            while hi - lo > tol {
                let mid = 0.5 * (lo + hi);
                if upper_gap(mid).signum() == f_left.signum() {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            crossings.push(0.5 * (lo + hi));
        }
        left = right;
        f_left = f_right;
    }
    Ok(crossings)
}
