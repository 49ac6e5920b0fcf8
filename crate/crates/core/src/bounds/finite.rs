use serde::{Deserialize, Serialize};

use super::Interval;
use crate::error::{Error, Result};
use crate::number::{int, Scalar};
use crate::recurrence::{reciprocal_b123, WeightAlpha};
use crate::tridiag::markov_constant_certified;

/// Power sums of the roots of `P_n`, from its leading coefficients by Newton's identities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PowerSumTriple<T: Scalar = f64> {
    pub p1: T,
    pub p2: T,
    pub p3: T,
}

pub fn power_sums<T: Scalar>(b1: &T, b2: &T, b3: &T) -> PowerSumTriple<T> {
    let p1 = b1.clone();
    let p2 = b1.square() - int::<T>(2) * b2.clone();
    let p3 = b1.cube() - int::<T>(3) * b1.clone() * b2.clone() + int::<T>(3) * b3.clone();
    PowerSumTriple { p1, p2, p3 }
}

/// Bounds on the largest root of a monic polynomial with positive roots
/// `x^n - b1 x^{n-1} + b2 x^{n-2} - b3 x^{n-3} + ...`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Prop1Bounds {
    /// `p1/n <= x_n < p1`
    pub mean: Interval,
    /// `p2/p1 <= x_n < sqrt(p2)`
    pub quadratic: Interval,
    /// `p3/p2 <= x_n < cbrt(p3)`
    pub cubic: Interval,
}

pub fn prop1_bounds(b1: f64, b2: f64, b3: f64, n: usize) -> Result<Prop1Bounds> {
    if n == 0 {
        return Err(Error::InvalidArgument("degree n must be >= 1".into()));
    }
    let PowerSumTriple { p1, p2, p3 } = power_sums(&b1, &b2, &b3);
    if !(p1 > 0.0) || !(p2 > 0.0) || !(p3 > 0.0) {
        return Err(Error::InconsistentInput(format!(
            "power sums ({p1}, {p2}, {p3}) are not all positive"
        )));
    }
    Ok(Prop1Bounds {
        mean: Interval::new(p1 / n as f64, p1),
        quadratic: Interval::new(p2 / p1, p2.sqrt()),
        cubic: Interval::new(p3 / p2, p3.cbrt()),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Theorem2Bounds {
    pub lower: f64,
    pub upper: f64,
    /// `n >= 3` and `n > (alpha+1)/6`.
    pub lower_valid: bool,
    /// `n >= 3`.
    pub upper_valid: bool,
}

pub fn theorem2_bounds(alpha: &WeightAlpha, n: usize) -> Theorem2Bounds {
    let a = alpha.get();
    let nf = n as f64;
    // 2 (n + 2a/3)(n - (a+1)/6) / ((a+1)(a+5)), cleared of inner fractions
    let lower = (3.0 * nf + 2.0 * a) * (6.0 * nf - a - 1.0) / (9.0 * (a + 1.0) * (a + 5.0));
    let upper = (nf + 1.0) * (5.0 * nf + 2.0 * a + 2.0)
        / (5.0 * (a + 1.0) * ((a + 3.0) * (a + 5.0)).cbrt());
    Theorem2Bounds {
        lower,
        upper,
        lower_valid: n >= 3 && 6.0 * nf > a + 1.0,
        upper_valid: n >= 3,
    }
}

pub fn dorfler_bounds(alpha: &WeightAlpha, n: usize) -> Interval {
    let a = alpha.get();
    let nf = n as f64;
    Interval::new(nf * nf / ((a + 1.0) * (a + 3.0)), nf * (nf + 1.0) / (2.0 * (a + 1.0)))
}

/// Enclosure of every root of a real-rooted monic polynomial from `b1`, `b2`.
pub fn laguerre_samuelson(b1: f64, b2: f64, n: usize) -> Result<Interval> {
    if n == 0 {
        return Err(Error::InvalidArgument("degree n must be >= 1".into()));
    }
    let m = n as f64 - 1.0;
    let nf = n as f64;
    let disc = m * m * b1 * b1 - 2.0 * m * nf * b2;
    let slack = 64.0 * f64::EPSILON * (m * m * b1 * b1).max(2.0 * m * nf * b2.abs());
    if disc < -slack || !disc.is_finite() {
        return Err(Error::InconsistentInput(format!(
            "negative Laguerre-Samuelson discriminant {disc}"
        )));
    }
    let root = disc.max(0.0).sqrt();
    Ok(Interval::new((b1 - root) / nf, (b1 + root) / nf))
}

/// `c_n(0) = (2 sin(pi/(4n+2)))^{-1}`.
pub fn turan_constant(n: usize) -> f64 {
    let angle = std::f64::consts::PI / (4 * n + 2) as f64;
    0.5 / angle.sin()
}

/// All finite-`n` quantities for one `(n, alpha)`. Every interval bounds
/// `c_n(alpha)^2`, which is also the largest zero of `P_n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub n: usize,
    pub alpha: f64,
    pub exact_c: f64,
    pub exact_c_sq: f64,
    pub b1: f64,
    pub b2: f64,
    pub b3: f64,
    pub power_sums: PowerSumTriple,
    pub prop1_i: Interval,
    pub prop1_ii: Interval,
    pub prop1_iii: Interval,
    pub thm2: Theorem2Bounds,
    pub dorfler: Interval,
    pub laguerre_samuelson: Interval,
    /// `c_n(0)^2` from the closed form, present only when `alpha == 0`.
    pub turan_c_sq: Option<f64>,
}

impl BoundsReport {
    /// True when a valid Theorem 2 side fails to hold strictly.
    pub fn thm2_violation(&self) -> bool {
        let x = self.exact_c_sq;
        (self.thm2.lower_valid && !(self.thm2.lower < x))
            || (self.thm2.upper_valid && !(x < self.thm2.upper))
    }

    pub fn dorfler_violation(&self) -> bool {
        !self.dorfler.contains(self.exact_c_sq)
    }
}

pub fn bounds_report(alpha: &WeightAlpha, n: usize, tol: f64) -> Result<BoundsReport> {
    let markov = markov_constant_certified(alpha, n, tol)?;
    let (b1, b2, b3) = reciprocal_b123(alpha, n);
    let prop1 = prop1_bounds(b1, b2, b3, n)?;
    let a = alpha.get();
    Ok(BoundsReport {
        n,
        alpha: a,
        exact_c: markov.c,
        exact_c_sq: markov.c_sq,
        b1,
        b2,
        b3,
        power_sums: power_sums(&b1, &b2, &b3),
        prop1_i: prop1.mean,
        prop1_ii: prop1.quadratic,
        prop1_iii: prop1.cubic,
        thm2: theorem2_bounds(alpha, n),
        dorfler: dorfler_bounds(alpha, n),
        laguerre_samuelson: laguerre_samuelson(b1, b2, n)?,
        turan_c_sq: (a == 0.0).then(|| turan_constant(n).powi(2)),
    })
}
