//! Residual polynomials behind the finite-`n` sandwich.
//!
//! With `p2`, `p3` the power sums of the roots of `P_n`,
//!
//! ```text
//! p3 - L(n,a) p2 = sum_{j=1}^{5} kappa_j(a) n^j / ((a+1)^3 (a+2)(a+3)(a+4)(a+5))
//! U(n,a)^3 - p3  = sum_{j=0}^{5} nu_j(a) n^j    / ((a+1)^2 (a+2)(a+3)(a+4)(a+5))
//! ```
//!
//! where `L` and `U` are the lower and upper bounds on `c_n(a)^2`. Positivity of
//! the right-hand sides is what makes the sandwich hold. The chained
//! coefficients `nu~_3 = 4 nu_5 + 2 nu_4 + nu_3`, `nu~_2 = 2 nu~_3 + nu_2`,
//! `nu~_1 = 2 nu~_2 + nu_1` bound the upper residual from below for `n >= 2`.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::finite::{power_sums, PowerSumTriple};
use crate::number::{int, one, Scalar};
use crate::recurrence::{reciprocal_b123, WeightAlpha};

/// Evaluate `scale_num/scale_den * (1+a)^lead_power * sum coeffs[i] a^(deg-i)`.
fn alpha_poly<T: Scalar>(a: &T, scale: (i64, i64), lead_power: u32, coeffs_desc: &[i64]) -> T {
    let body = coeffs_desc
        .iter()
        .fold(T::zero(), |acc, &c| acc * a.clone() + int::<T>(c));
    let lead = (0..lead_power).fold(one::<T>(), |acc, _| acc * (a.clone() + one::<T>()));
    T::ratio(scale.0, scale.1) * lead * body
}

fn kappa<T: Scalar>(a: &T) -> [T; 5] {
    [
        alpha_poly(a, (1, 270), 2, &[10, 100, 321, 1620]),
        alpha_poly(a, (1, 36), 1, &[4, 35, 166, 417, 660]),
        alpha_poly(a, (1, 54), 0, &[4, 36, 192, 625, 1527, 1332]),
        alpha_poly(a, (1, 36), 0, &[1, -1, 157, 579, 780]),
        alpha_poly(a, (1, 30), 0, &[1, 7, 136, 280]),
    ]
}

fn nu<T: Scalar>(a: &T) -> [T; 6] {
    let two_four = (a.clone() + int::<T>(2)) * (a.clone() + int::<T>(4));
    [
        alpha_poly(a, (8, 125), 2, &[1]) * two_four,
        alpha_poly(a, (3, 250), 1, &[16, 152, 439, -52]),
        alpha_poly(a, (1, 500), 0, &[96, 1363, 5656, 9167, 2828]),
        alpha_poly(a, (1, 250), 0, &[16, 363, 2506, 7167, 4708]),
        alpha_poly(a, (1, 100), 0, &[23, 446, 1657, 2164]),
        alpha_poly(a, (3, 5), 0, &[5, 16]),
    ]
}

/// The closed forms printed for `nu~_1, nu~_2, nu~_3`.
///
/// The first two agree with the chain definitions. The printed `nu~_1` equals
/// `2 nu~_2 + nu_1 / (1 + a)` rather than `2 nu~_2 + nu_1`.
pub fn printed_nu_tilde<T: Scalar>(alpha: &WeightAlpha<T>) -> [T; 3] {
    let a = alpha.value();
    [
        alpha_poly(a, (1, 250), 0, &[160, 3323, 25056, 84292, 103184]),
        alpha_poly(a, (1, 100), 0, &[32, 655, 4920, 16595, 20668]),
        alpha_poly(a, (1, 125), 0, &[8, 239, 2368, 9226, 12564]),
    ]
}

/// `kappa_1..kappa_5`, `nu_0..nu_5` and the chained `nu~_1..nu~_3` at one `alpha`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityResidual<T: Scalar = f64> {
    pub kappa: [T; 5],
    pub nu: [T; 6],
    pub nu_tilde: [T; 3],
}

impl<T: Scalar> IdentityResidual<T> {
    pub fn kappa_positive(&self) -> bool {
        self.kappa.iter().all(|v| v.is_positive())
    }

    pub fn nu_tilde_positive(&self) -> bool {
        self.nu_tilde.iter().all(|v| v.is_positive())
    }

    /// Every sign condition the upper-residual argument relies on, including `nu_4, nu_5 > 0`.
    pub fn all_positive(&self) -> bool {
        self.kappa_positive()
            && self.nu_tilde_positive()
            && self.nu[4].is_positive()
            && self.nu[5].is_positive()
    }
}

pub fn identity_residuals<T: Scalar>(alpha: &WeightAlpha<T>) -> IdentityResidual<T> {
    let a = alpha.value();
    let nu = nu(a);
    let two = int::<T>(2);
    let nt3 = int::<T>(4) * nu[5].clone() + two.clone() * nu[4].clone() + nu[3].clone();
    let nt2 = two.clone() * nt3.clone() + nu[2].clone();
    let nt1 = two * nt2.clone() + nu[1].clone();
    IdentityResidual {
        kappa: kappa(a),
        nu,
        nu_tilde: [nt1, nt2, nt3],
    }
}

/// Which constant multiplies `(n + 2a/3)(n - (a+1)/6) p2` in the lower residual.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LowerNormalization {
    /// `2/((a+1)(a+5))`, the constant of the finite-`n` lower bound.
    OnePlusAlpha,
    /// `2/((a+3)(a+5))`.
    ThreePlusAlpha,
}

impl LowerNormalization {
    fn constant<T: Scalar>(self, a: &T) -> T {
        let first = match self {
            LowerNormalization::OnePlusAlpha => a.clone() + one::<T>(),
            LowerNormalization::ThreePlusAlpha => a.clone() + int::<T>(3),
        };
        int::<T>(2) / (first * (a.clone() + int::<T>(5)))
    }
}

fn sums<T: Scalar>(alpha: &WeightAlpha<T>, n: usize) -> PowerSumTriple<T> {
    let (b1, b2, b3) = reciprocal_b123(alpha, n);
    power_sums(&b1, &b2, &b3)
}

fn lower_residual<T: Scalar>(alpha: &WeightAlpha<T>, n: usize, norm: LowerNormalization) -> T {
    let a = alpha.value();
    let nn = int::<T>(n as i64);
    // (n + 2a/3)(n - (a+1)/6) = (3n + 2a)(6n - a - 1)/18
    let quad = (int::<T>(3) * nn.clone() + int::<T>(2) * a.clone())
        * (int::<T>(6) * nn - a.clone() - one::<T>())
        / int::<T>(18);
    let s = sums(alpha, n);
    s.p3 - norm.constant(a) * quad * s.p2
}

fn upper_residual<T: Scalar>(alpha: &WeightAlpha<T>, n: usize) -> T {
    let a = alpha.value();
    let nn = int::<T>(n as i64);
    let a1 = a.clone() + one::<T>();
    // (n+1)^3 (n + 2(a+1)/5)^3 / ((a+1)^3 (a+3)(a+5))
    let base = (nn.clone() + one::<T>()) * (int::<T>(5) * nn + int::<T>(2) * a1.clone()) / int::<T>(5);
    let cube_bound =
        base.cube() / (a1.cube() * (a.clone() + int::<T>(3)) * (a.clone() + int::<T>(5)));
    cube_bound - sums(alpha, n).p3
}

/// `(p3 - L p2, U^3 - p3)` with `L`, `U` the finite-`n` bounds on `c_n^2`.
/// Both are nonnegative wherever the corresponding bound is claimed.
pub fn residual_sandwich_check<T: Scalar>(alpha: &WeightAlpha<T>, n: usize) -> (T, T) {
    (
        lower_residual(alpha, n, LowerNormalization::OnePlusAlpha),
        upper_residual(alpha, n),
    )
}

/// Coefficients (ascending in `n`) of the polynomial through `values[i]` at `n = i`.
fn interpolate(values: &[BigRational]) -> Vec<BigRational> {
    let m = values.len();
    let mut coeffs = vec![BigRational::from_int(0); m];
    for (i, yi) in values.iter().enumerate() {
        let mut basis = vec![BigRational::from_int(1)];
        let mut denom = BigRational::from_int(1);
        for j in (0..m).filter(|&j| j != i) {
            // basis *= (n - j)
            let mut next = vec![BigRational::from_int(0); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c.clone();
                next[k] -= c.clone() * BigRational::from_int(j as i64);
            }
            basis = next;
            denom *= BigRational::from_int(i as i64 - j as i64);
        }
        for (k, c) in basis.into_iter().enumerate() {
            coeffs[k] += yi.clone() * c / denom.clone();
        }
    }
    while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c == &BigRational::from_int(0)) {
        coeffs.pop();
    }
    coeffs
}

fn scale_factor(a: &BigRational, one_plus_power: u32) -> BigRational {
    let mut s = BigRational::from_int(1);
    for _ in 0..one_plus_power {
        s *= a.clone() + BigRational::from_int(1);
    }
    for k in 2..=5 {
        s *= a.clone() + BigRational::from_int(k);
    }
    s
}

/// Exact coefficients in `n` of `(p3 - C (n + 2a/3)(n - (a+1)/6) p2) (a+1)^3 (a+2)..(a+5)`,
/// recovered by interpolation through `n = 0..=8`.
pub fn lower_residual_coefficients(
    alpha: &WeightAlpha<BigRational>,
    norm: LowerNormalization,
) -> Vec<BigRational> {
    let s = scale_factor(alpha.value(), 3);
    let values: Vec<_> = (0..=8).map(|n| lower_residual(alpha, n, norm) * s.clone()).collect();
    interpolate(&values)
}

/// Exact coefficients in `n` of `(U^3 - p3) (a+1)^2 (a+2)..(a+5)`.
pub fn upper_residual_coefficients(alpha: &WeightAlpha<BigRational>) -> Vec<BigRational> {
    let s = scale_factor(alpha.value(), 2);
    let values: Vec<_> = (0..=8).map(|n| upper_residual(alpha, n) * s.clone()).collect();
    interpolate(&values)
}

/// The normalization whose recomputed residual coefficients are exactly
/// `[0, kappa_1, .., kappa_5]`, if any.
pub fn resolve_kappa_normalization(alpha: &WeightAlpha<BigRational>) -> Option<LowerNormalization> {
    let mut expected = vec![BigRational::from_int(0)];
    expected.extend(kappa(alpha.value()));
    [LowerNormalization::OnePlusAlpha, LowerNormalization::ThreePlusAlpha]
        .into_iter()
        .find(|&norm| lower_residual_coefficients(alpha, norm) == expected)
}
