//! Jacobi matrix of the `Q_n` recurrence and Sturm-count bisection for its extreme eigenvalues.
//!
//! The eigenvalues of the symmetric tridiagonal matrix with diagonal `d_0..d_{n-1}`
//! and off-diagonal `lambda_1..lambda_{n-1}` are the zeros of `Q_n`, so the sharp
//! Markov constant is `c_n(alpha) = lambda_min^{-1/2}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::recurrence::{d_term, lambda_sq_term, WeightAlpha};

pub const DEFAULT_TOL: f64 = 1e-13;
pub const MAX_BISECTION_STEPS: usize = 200;

/// Symmetric tridiagonal matrix with strictly positive off-diagonal.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TridiagMatrix {
    diag: Vec<f64>,
    offdiag: Vec<f64>,
    /// Set when the spectrum is known to lie in `(0, inf)`, which lets the
    /// Gershgorin bracket be clamped at zero.
    positive_spectrum: bool,
}

impl TridiagMatrix {
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::InvalidArgument("matrix order must be >= 1".into()));
        }
        if offdiag.len() + 1 != diag.len() {
            return Err(Error::InvalidArgument(format!(
                "off-diagonal length {} does not match order {}",
                offdiag.len(),
                diag.len()
            )));
        }
        if diag.iter().any(|v| !v.is_finite()) || offdiag.iter().any(|&v| !(v > 0.0 && v.is_finite())) {
            return Err(Error::InvalidArgument(
                "entries must be finite with a positive off-diagonal".into(),
            ));
        }
        Ok(Self {
            diag,
            offdiag,
            positive_spectrum: false,
        })
    }

    pub fn order(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[f64] {
        &self.offdiag
    }

    pub fn has_positive_spectrum(&self) -> bool {
        self.positive_spectrum
    }

    fn row_radius(&self, k: usize) -> f64 {
        let left = if k > 0 { self.offdiag[k - 1] } else { 0.0 };
        let right = self.offdiag.get(k).copied().unwrap_or(0.0);
        left + right
    }

    /// Interval containing every eigenvalue, from the Gershgorin discs.
    pub fn gershgorin_bracket(&self) -> (f64, f64) {
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for (k, &d) in self.diag.iter().enumerate() {
            let r = self.row_radius(k);
            lo = lo.min(d - r);
            hi = hi.max(d + r);
        }
        if self.positive_spectrum {
            lo = lo.max(0.0);
        }
        (lo, hi)
    }

    /// Number of eigenvalues strictly below `sigma`.
    ///
    /// Counts negative pivots of the LDL^T factorization of `T - sigma I`. A pivot
    /// that is exactly zero is replaced by `-eps * scale` with
    /// `scale = max(1, |d_k|, row off-diagonals)`.
    pub fn sturm_count(&self, sigma: f64) -> usize {
        let mut count = 0;
        let mut q = 1.0;
        for (k, &d) in self.diag.iter().enumerate() {
            q = if k == 0 {
                d - sigma
            } else {
                let e = self.offdiag[k - 1];
                (d - sigma) - e * e / q
            };
            if q == 0.0 {
                let scale = 1f64.max(d.abs()).max(self.row_radius(k));
                q = -f64::EPSILON * scale;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// The `index`-th smallest eigenvalue (1-based) by bisection on the Sturm count.
    ///
    /// Stops once `hi - lo <= tol * max(|lo|, |hi|)`, so small eigenvalues are
    /// resolved to relative precision. An absolute floor of `tol * eps * scale`
    /// lets an exactly-zero eigenvalue terminate.
    pub fn eigenvalue_by_index(&self, index: usize, tol: f64) -> Result<EigenResult> {
        let n = self.order();
        if index == 0 || index > n {
            return Err(Error::InvalidArgument(format!(
                "eigenvalue index {index} outside 1..={n}"
            )));
        }
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
        }
        let (mut lo, mut hi) = self.gershgorin_bracket();
        // The upper disc edge can itself be an eigenvalue; nudge until it counts.
        let mut nudge = f64::EPSILON * hi.abs().max(1.0);
        while self.sturm_count(hi) < n {
            hi += nudge;
            nudge *= 2.0;
        }
        let scale = lo.abs().max(hi.abs()).max(1.0);
        let floor = tol * f64::EPSILON * scale;

        let mut iterations = 0;
        loop {
            let width = hi - lo;
            if width <= tol * lo.abs().max(hi.abs()) || width <= floor {
                break;
            }
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if iterations == MAX_BISECTION_STEPS {
                return Err(Error::NonConvergence { iterations, lo, hi });
            }
            iterations += 1;
            if self.sturm_count(mid) >= index {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Ok(EigenResult {
            value: 0.5 * (lo + hi),
            bracket: (lo, hi),
            iterations,
            tol,
        })
    }

    pub fn smallest_eigenvalue(&self, tol: f64) -> Result<EigenResult> {
        self.eigenvalue_by_index(1, tol)
    }

    pub fn largest_eigenvalue(&self, tol: f64) -> Result<EigenResult> {
        self.eigenvalue_by_index(self.order(), tol)
    }
}

/// An eigenvalue together with the bisection bracket that certifies it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EigenResult {
    pub value: f64,
    pub bracket: (f64, f64),
    pub iterations: usize,
    pub tol: f64,
}

/// Jacobi matrix whose characteristic polynomial is `Q_n(x, alpha)`.
///
/// The matrix factors as `B B^T` with `B` lower bidiagonal
/// (diagonal `sqrt(1 + alpha/(k+1))`, subdiagonal `1`), so it is positive definite.
pub fn build_jacobi(alpha: &WeightAlpha, n: usize) -> Result<TridiagMatrix> {
    if n == 0 {
        return Err(Error::InvalidArgument("matrix order n must be >= 1".into()));
    }
    let a = alpha.get();
    Ok(TridiagMatrix {
        diag: (0..n).map(|k| d_term(&a, k)).collect(),
        offdiag: (1..n).map(|k| lambda_sq_term(&a, k).sqrt()).collect(),
        positive_spectrum: true,
    })
}

/// `c_n(alpha)` with the enclosure it was derived from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MarkovConstant {
    pub n: usize,
    pub alpha: f64,
    pub c: f64,
    pub c_sq: f64,
    /// `(lo, hi)` for `c`, mapped from the eigenvalue bracket.
    pub c_bracket: (f64, f64),
    pub smallest_zero: EigenResult,
}

pub fn markov_constant_certified(alpha: &WeightAlpha, n: usize, tol: f64) -> Result<MarkovConstant> {
    let eig = build_jacobi(alpha, n)?.smallest_eigenvalue(tol)?;
    let (lo, hi) = eig.bracket;
    let c_upper = if lo > 0.0 { lo.powf(-0.5) } else { f64::INFINITY };
    Ok(MarkovConstant {
        n,
        alpha: alpha.get(),
        c: eig.value.powf(-0.5),
        c_sq: eig.value.recip(),
        c_bracket: (hi.powf(-0.5), c_upper),
        smallest_zero: eig,
    })
}

/// The sharp constant `c_n(alpha)` in `||p'|| <= c_n ||p||` over polynomials of degree `<= n`.
pub fn markov_constant(alpha: &WeightAlpha, n: usize, tol: f64) -> Result<f64> {
    markov_constant_certified(alpha, n, tol).map(|m| m.c)
}
