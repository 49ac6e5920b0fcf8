//! The orthogonal polynomials `Q_n(x, alpha)` whose smallest zero is `1 / c_n(alpha)^2`.
//!
//! `Q_n` is generated by the three-term recurrence
//!
//! ```text
//! Q_{m+1}(x) = (x - d_m) Q_m(x) - lambda_m^2 Q_{m-1}(x),   Q_{-1} = 0, Q_0 = 1,
//! d_0 = 1 + alpha,  d_m = 2 + alpha/(m+1),  lambda_m^2 = 1 + alpha/m   (m >= 1).
//! ```
//!
//! The coefficient of `x^k` in `Q_n` is written `a_{k,n}`. The four lowest ones
//! have closed forms ([`coeff_a0`] .. [`coeff_a3`]); the rest only exist through
//! the recurrence ([`qn_coefficients`]).

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::number::{int, one, NumberMode, Scalar};

/// Laguerre exponent of the weight `t^alpha e^{-t}` on `(0, inf)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightAlpha<T: Scalar = f64> {
    value: T,
}

impl<T: Scalar> WeightAlpha<T> {
    pub fn new(value: T) -> Result<Self> {
        if !value.is_finite_value() || value <= int(-1) {
            return Err(Error::InvalidAlpha(format!("{value:?}")));
        }
        Ok(Self { value })
    }

    pub fn value(&self) -> &T {
        &self.value
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64_lossy()
    }
}

impl WeightAlpha<f64> {
    pub fn get(&self) -> f64 {
        self.value
    }
}

impl WeightAlpha<BigRational> {
    /// Nearest binary64 parameter. Fails only if rounding lands on `-1`.
    pub fn to_floating(&self) -> Result<WeightAlpha<f64>> {
        WeightAlpha::new(self.to_f64())
    }
}

/// `d_k`, the diagonal recurrence term.
pub(crate) fn d_term<T: Scalar>(alpha: &T, k: usize) -> T {
    if k == 0 {
        one::<T>() + alpha.clone()
    } else {
        int::<T>(2) + alpha.clone() / int::<T>(k as i64 + 1)
    }
}

/// `lambda_k^2 = 1 + alpha/k` for `k >= 1`.
pub(crate) fn lambda_sq_term<T: Scalar>(alpha: &T, k: usize) -> T {
    debug_assert!(k >= 1);
    one::<T>() + alpha.clone() / int::<T>(k as i64)
}

/// Recurrence data for `Q_1, .., Q_n`: `d_0..d_{n-1}` and `lambda_1^2..lambda_{n-1}^2`.
///
/// `lambda_0` multiplies `Q_{-1} = 0` and is not stored.
#[derive(Debug, Clone, PartialEq)]
pub struct RecurrenceCoeffs<T: Scalar = f64> {
    d: Vec<T>,
    lambda_sq: Vec<T>,
}

impl<T: Scalar> RecurrenceCoeffs<T> {
    pub fn order(&self) -> usize {
        self.d.len()
    }

    /// `d_0, .., d_{n-1}`.
    pub fn diagonal(&self) -> &[T] {
        &self.d
    }

    /// `lambda_1^2, .., lambda_{n-1}^2` (element `i` is `lambda_{i+1}^2`).
    pub fn lambda_sq_values(&self) -> &[T] {
        &self.lambda_sq
    }

    pub fn d(&self, k: usize) -> Option<&T> {
        self.d.get(k)
    }

    /// `lambda_k^2` for `1 <= k <= n-1`.
    pub fn lambda_sq(&self, k: usize) -> Option<&T> {
        k.checked_sub(1).and_then(|i| self.lambda_sq.get(i))
    }
}

pub fn recurrence_coeffs<T: Scalar>(alpha: &WeightAlpha<T>, n: usize) -> Result<RecurrenceCoeffs<T>> {
    if n == 0 {
        return Err(Error::InvalidArgument("recurrence order n must be >= 1".into()));
    }
    let a = alpha.value();
    Ok(RecurrenceCoeffs {
        d: (0..n).map(|k| d_term(a, k)).collect(),
        lambda_sq: (1..n).map(|k| lambda_sq_term(a, k)).collect(),
    })
}

/// Dense coefficients of a monic polynomial; `coeffs[k]` multiplies `x^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct MonicPoly<T: Scalar = f64> {
    coeffs: Vec<T>,
}

impl<T: Scalar> MonicPoly<T> {
    /// Fails unless the vector is nonempty with a top entry of exactly one.
    pub fn from_coeffs(coeffs: Vec<T>) -> Result<Self> {
        match coeffs.last() {
            Some(top) if top.is_one() => Ok(Self { coeffs }),
            _ => Err(Error::InvalidArgument(
                "monic polynomial needs a leading coefficient of exactly 1".into(),
            )),
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// `a_k`, or `None` above the degree (where the coefficient is zero by convention).
    pub fn coeff(&self, k: usize) -> Option<&T> {
        self.coeffs.get(k)
    }

    pub fn mode(&self) -> NumberMode {
        T::MODE
    }

    /// The monic reciprocal `x^n Q(1/x) / a_0`. `None` when `a_0 = 0`.
    pub fn reciprocal(&self) -> Option<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return None;
        }
        let coeffs = self.coeffs.iter().rev().map(|c| c.clone() / a0.clone()).collect();
        Some(Self { coeffs })
    }

    pub fn to_f64(&self) -> MonicPoly<f64> {
        MonicPoly {
            coeffs: self.coeffs.iter().map(Scalar::to_f64_lossy).collect(),
        }
    }
}

/// Advance `(Q_{m-1}, Q_m)` to `Q_{m+1}`.
fn next_row<T: Scalar>(alpha: &T, m: usize, prev: &[T], cur: &[T]) -> Vec<T> {
    let d = d_term(alpha, m);
    let lambda_sq = if m == 0 { T::zero() } else { lambda_sq_term(alpha, m) };
    (0..=m + 1)
        .map(|k| {
            let mut v = if k >= 1 { cur[k - 1].clone() } else { T::zero() };
            if let Some(c) = cur.get(k) {
                v = v - d.clone() * c.clone();
            }
            if let Some(p) = prev.get(k) {
                v = v - lambda_sq.clone() * p.clone();
            }
            v
        })
        .collect()
}

fn check_row<T: Scalar>(row: &[T], m: usize) -> Result<()> {
    if row.iter().all(Scalar::is_finite_value) {
        Ok(())
    } else {
        Err(Error::NumericRange(format!("coefficients of Q_{m}")))
    }
}

/// Coefficients of `Q_n`, keeping only the two most recent rows.
pub fn qn_coefficients<T: Scalar>(alpha: &WeightAlpha<T>, n: usize) -> Result<MonicPoly<T>> {
    let a = alpha.value();
    let mut prev: Vec<T> = Vec::new();
    let mut cur: Vec<T> = vec![T::one()];
    for m in 0..n {
        let next = next_row(a, m, &prev, &cur);
        check_row(&next, m + 1)?;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(MonicPoly { coeffs: cur })
}

/// `Q_0, .., Q_n`, for verification dumps.
pub fn coefficient_triangle<T: Scalar>(alpha: &WeightAlpha<T>, n: usize) -> Result<Vec<MonicPoly<T>>> {
    let a = alpha.value();
    let mut rows: Vec<Vec<T>> = vec![vec![T::one()]];
    for m in 0..n {
        let next = {
            let prev: &[T] = if m == 0 { &[] } else { &rows[m - 1] };
            next_row(a, m, prev, &rows[m])
        };
        check_row(&next, m + 1)?;
        rows.push(next);
    }
    Ok(rows.into_iter().map(|coeffs| MonicPoly { coeffs }).collect())
}

fn shifted<T: Scalar>(alpha: &T, s: i64) -> T {
    alpha.clone() + int::<T>(s)
}

fn poly_n<T: Scalar>(n: usize, offsets: &[i64]) -> T {
    offsets
        .iter()
        .fold(one::<T>(), |acc, &o| acc * int::<T>(n as i64 + o))
}

/// `a_{0,n} = (-1)^n prod_{k=1}^n (1 + alpha/k)`.
pub fn coeff_a0<T: Scalar>(alpha: &WeightAlpha<T>, n: usize) -> T {
    let a = alpha.value();
    let product = (1..=n).fold(one::<T>(), |acc, k| acc * lambda_sq_term(a, k));
    if n.is_multiple_of(2) {
        product
    } else {
        -product
    }
}

/// `a_{1,n} = -n(n+1) / (2(alpha+1)) * a_{0,n}`.
pub fn coeff_a1<T: Scalar>(alpha: &WeightAlpha<T>, n: usize) -> T {
    -(b1_ratio(alpha.value(), n) * coeff_a0(alpha, n))
}

/// `a_{2,n}`; vanishes for `n <= 1`.
pub fn coeff_a2<T: Scalar>(alpha: &WeightAlpha<T>, n: usize) -> T {
    b2_ratio(alpha.value(), n) * coeff_a0(alpha, n)
}

/// `a_{3,n}`; vanishes for `n <= 2`.
pub fn coeff_a3<T: Scalar>(alpha: &WeightAlpha<T>, n: usize) -> T {
    -(b3_ratio(alpha.value(), n) * coeff_a0(alpha, n))
}

fn b1_ratio<T: Scalar>(a: &T, n: usize) -> T {
    poly_n::<T>(n, &[0, 1]) / (int::<T>(2) * shifted(a, 1))
}

fn b2_ratio<T: Scalar>(a: &T, n: usize) -> T {
    let bracket = int::<T>(3) * shifted(a, 2) * int::<T>(n as i64) + int::<T>(2) * shifted(a, 6);
    let den = int::<T>(24) * shifted(a, 1) * shifted(a, 2) * shifted(a, 3);
    poly_n::<T>(n, &[-1, 0, 1]) * bracket / den
}

fn b3_ratio<T: Scalar>(a: &T, n: usize) -> T {
    let nn = int::<T>(n as i64);
    let bracket = int::<T>(5) * shifted(a, 2) * shifted(a, 4) * poly_n::<T>(n, &[0, 1])
        + int::<T>(8) * (int::<T>(7) * a.clone() + int::<T>(20)) * nn
        + int::<T>(12) * shifted(a, 20);
    let den = int::<T>(240)
        * shifted(a, 1)
        * shifted(a, 2)
        * shifted(a, 3)
        * shifted(a, 4)
        * shifted(a, 5);
    poly_n::<T>(n, &[-2, -1, 0, 1]) * bracket / den
}

/// Leading coefficients of the monic reciprocal
/// `P_n(x) = x^n Q_n(1/x) / a_{0,n} = x^n - b1 x^{n-1} + b2 x^{n-2} - b3 x^{n-3} + ...`,
/// i.e. `b_k = (-1)^k a_{k,n} / a_{0,n}`.
pub fn reciprocal_b123<T: Scalar>(alpha: &WeightAlpha<T>, n: usize) -> (T, T, T) {
    let a = alpha.value();
    (b1_ratio(a, n), b2_ratio(a, n), b3_ratio(a, n))
}
