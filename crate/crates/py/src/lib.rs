//! Python bindings. Build with `maturin develop` (or `cargo build --features extension-module`)
//! and `import markov_laguerre`.

use laguerre_core::bessel::{self, BesselOrder};
use laguerre_core::bounds::{self, Interval};
use laguerre_core::number::parse_rational;
use laguerre_core::recurrence::{self, WeightAlpha};
use laguerre_core::tridiag::{self, TridiagMatrix};
use laguerre_core::{BigRational, Error, DEFAULT_TOL};
use num_bigint::BigInt;
use num_rational::Ratio;
use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::InvalidAlpha(_)
        | Error::InvalidOrder(_)
        | Error::InvalidArgument(_)
        | Error::OutsideEnvelope { .. } => PyValueError::new_err(e.to_string()),
        _ => PyArithmeticError::new_err(e.to_string()),
    }
}

fn alpha_f64(alpha: f64) -> PyResult<WeightAlpha> {
    WeightAlpha::new(alpha).map_err(to_py_err)
}

/// Exact alpha from a `Fraction`, an `int`, a string such as `"-1/4"`, or a float
/// (taken at its exact binary value).
fn alpha_exact(obj: &Bound<'_, PyAny>) -> PyResult<WeightAlpha<BigRational>> {
    let value = if let Ok(text) = obj.extract::<String>() {
        parse_rational(&text).ok_or_else(|| PyValueError::new_err(format!("cannot parse {text:?} as a rational")))?
    } else if let Ok(r) = obj.extract::<Ratio<BigInt>>() {
        r
    } else {
        let x: f64 = obj.extract()?;
        BigRational::from_float(x).ok_or_else(|| PyValueError::new_err(format!("alpha must be finite, got {x}")))?
    };
    WeightAlpha::new(value).map_err(to_py_err)
}

fn pair(i: Interval) -> (f64, f64) {
    (i.lower, i.upper)
}

fn json_to_py<'py>(py: Python<'py>, v: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    use serde_json::Value;
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => match n.as_u64() {
            Some(u) => u.into_pyobject(py)?.into_any(),
            None => n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any(),
        },
        Value::String(s) => s.into_pyobject(py)?.into_any(),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(json_to_py(py, item)?)?;
            }
            list.into_any()
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, item) in map {
                dict.set_item(k, json_to_py(py, item)?)?;
            }
            dict.into_any()
        }
    })
}

fn to_dict<'py, T: serde::Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let v = serde_json::to_value(value).map_err(|e| PyArithmeticError::new_err(e.to_string()))?;
    json_to_py(py, &v)
}

/// Sharp constant `c_n(alpha)`.
#[pyfunction]
#[pyo3(signature = (alpha, n, tol = DEFAULT_TOL))]
fn markov_constant(alpha: f64, n: usize, tol: f64) -> PyResult<f64> {
    tridiag::markov_constant(&alpha_f64(alpha)?, n, tol).map_err(to_py_err)
}

/// `c_n(alpha)` with the certified bracket, as a dict.
#[pyfunction]
#[pyo3(signature = (alpha, n, tol = DEFAULT_TOL))]
fn markov_constant_certified<'py>(py: Python<'py>, alpha: f64, n: usize, tol: f64) -> PyResult<Bound<'py, PyAny>> {
    let m = tridiag::markov_constant_certified(&alpha_f64(alpha)?, n, tol).map_err(to_py_err)?;
    to_dict(py, &m)
}

/// Ascending coefficients of the monic `Q_n`; `mode="rational"` returns `Fraction`s.
#[pyfunction]
#[pyo3(signature = (alpha, n, mode = "floating"))]
fn qn_coefficients<'py>(py: Python<'py>, alpha: &Bound<'py, PyAny>, n: usize, mode: &str) -> PyResult<Bound<'py, PyAny>> {
    match mode {
        "floating" => {
            let p = recurrence::qn_coefficients(&alpha_f64(alpha.extract()?)?, n).map_err(to_py_err)?;
            Ok(p.coeffs().to_vec().into_pyobject(py)?.into_any())
        }
        "rational" => {
            let p = recurrence::qn_coefficients(&alpha_exact(alpha)?, n).map_err(to_py_err)?;
            Ok(p.into_coeffs().into_pyobject(py)?.into_any())
        }
        other => Err(PyValueError::new_err(format!("mode must be 'floating' or 'rational', got {other:?}"))),
    }
}

/// Closed forms `[a0, a1, a2, a3]` of `Q_n`, exact.
#[pyfunction]
fn closed_form_coefficients(alpha: &Bound<'_, PyAny>, n: usize) -> PyResult<Vec<BigRational>> {
    let a = alpha_exact(alpha)?;
    Ok(vec![
        recurrence::coeff_a0(&a, n),
        recurrence::coeff_a1(&a, n),
        recurrence::coeff_a2(&a, n),
        recurrence::coeff_a3(&a, n),
    ])
}

/// `(b1, b2, b3)` of the reciprocal polynomial, exact.
#[pyfunction]
fn reciprocal_b123(alpha: &Bound<'_, PyAny>, n: usize) -> PyResult<(BigRational, BigRational, BigRational)> {
    Ok(recurrence::reciprocal_b123(&alpha_exact(alpha)?, n))
}

/// Full finite-`n` bounds report, as a dict.
#[pyfunction]
#[pyo3(signature = (alpha, n, tol = DEFAULT_TOL))]
fn bounds_report<'py>(py: Python<'py>, alpha: f64, n: usize, tol: f64) -> PyResult<Bound<'py, PyAny>> {
    let r = bounds::bounds_report(&alpha_f64(alpha)?, n, tol).map_err(to_py_err)?;
    to_dict(py, &r)
}

#[pyfunction]
fn theorem2_bounds<'py>(py: Python<'py>, alpha: f64, n: usize) -> PyResult<Bound<'py, PyAny>> {
    to_dict(py, &bounds::theorem2_bounds(&alpha_f64(alpha)?, n))
}

#[pyfunction]
fn dorfler_bounds(alpha: f64, n: usize) -> PyResult<(f64, f64)> {
    Ok(pair(bounds::dorfler_bounds(&alpha_f64(alpha)?, n)))
}

#[pyfunction]
fn prop1_bounds<'py>(py: Python<'py>, b1: f64, b2: f64, b3: f64, n: usize) -> PyResult<Bound<'py, PyAny>> {
    to_dict(py, &bounds::prop1_bounds(b1, b2, b3, n).map_err(to_py_err)?)
}

#[pyfunction]
fn laguerre_samuelson(b1: f64, b2: f64, n: usize) -> PyResult<(f64, f64)> {
    bounds::laguerre_samuelson(b1, b2, n).map(pair).map_err(to_py_err)
}

/// `(c_lower, c_upper)` for `c(alpha) = lim c_n/n`.
#[pyfunction]
fn corollary1_bounds(alpha: f64) -> PyResult<(f64, f64)> {
    Ok(pair(bounds::corollary1_bounds(&alpha_f64(alpha)?)))
}

#[pyfunction]
fn theorem3_upper(alpha: f64) -> PyResult<f64> {
    bounds::theorem3_upper(&alpha_f64(alpha)?).map_err(to_py_err)
}

#[pyfunction]
fn ratio_r(alpha: f64) -> PyResult<f64> {
    Ok(bounds::ratio_r(&alpha_f64(alpha)?))
}

/// Exact `(lower_residual, upper_residual)`; both are nonnegative where the bounds are claimed.
#[pyfunction]
fn residual_sandwich_check(alpha: &Bound<'_, PyAny>, n: usize) -> PyResult<(BigRational, BigRational)> {
    Ok(bounds::residual_sandwich_check(&alpha_exact(alpha)?, n))
}

/// `{"kappa": [...], "nu": [...], "nu_tilde": [...]}` as exact fractions.
#[pyfunction]
fn identity_residuals<'py>(py: Python<'py>, alpha: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyDict>> {
    let r = bounds::identity_residuals(&alpha_exact(alpha)?);
    let dict = PyDict::new(py);
    dict.set_item("kappa", r.kappa.to_vec())?;
    dict.set_item("nu", r.nu.to_vec())?;
    dict.set_item("nu_tilde", r.nu_tilde.to_vec())?;
    dict.set_item("all_positive", r.all_positive())?;
    Ok(dict)
}

#[pyfunction]
fn corollary2_bessel_bounds(nu: f64) -> PyResult<(f64, f64)> {
    Ok(pair(bounds::corollary2_bessel_bounds(&BesselOrder::new(nu).map_err(to_py_err)?)))
}

#[pyfunction]
fn bessel_j(nu: f64, x: f64) -> PyResult<f64> {
    bessel::bessel_j(&BesselOrder::new(nu).map_err(to_py_err)?, x).map_err(to_py_err)
}

#[pyfunction]
#[pyo3(signature = (nu, tol = DEFAULT_TOL))]
fn first_zero(nu: f64, tol: f64) -> PyResult<f64> {
    bessel::first_zero(&BesselOrder::new(nu).map_err(to_py_err)?, tol).map_err(to_py_err)
}

/// `c(alpha) = 1 / j_{(alpha-1)/2, 1}`.
#[pyfunction]
#[pyo3(signature = (alpha, tol = DEFAULT_TOL))]
fn asymptotic_constant(alpha: f64, tol: f64) -> PyResult<f64> {
    bessel::asymptotic_constant(&alpha_f64(alpha)?, tol).map_err(to_py_err)
}

/// Symmetric tridiagonal matrix with Sturm-count bisection.
#[pyclass(frozen, name = "TridiagMatrix")]
struct PyTridiag {
    inner: TridiagMatrix,
}

#[pymethods]
impl PyTridiag {
    #[new]
    fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> PyResult<Self> {
        Ok(PyTridiag { inner: TridiagMatrix::new(diag, offdiag).map_err(to_py_err)? })
    }

    /// Jacobi matrix of the `Q_n` recurrence; its eigenvalues are the zeros of `Q_n`.
    #[staticmethod]
    fn jacobi(alpha: f64, n: usize) -> PyResult<Self> {
        Ok(PyTridiag { inner: tridiag::build_jacobi(&alpha_f64(alpha)?, n).map_err(to_py_err)? })
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn diag(&self) -> Vec<f64> {
        self.inner.diag().to_vec()
    }

    #[getter]
    fn offdiag(&self) -> Vec<f64> {
        self.inner.offdiag().to_vec()
    }

    fn gershgorin_bracket(&self) -> (f64, f64) {
        self.inner.gershgorin_bracket()
    }

    fn sturm_count(&self, sigma: f64) -> usize {
        self.inner.sturm_count(sigma)
    }

    #[pyo3(signature = (tol = DEFAULT_TOL))]
    fn smallest_eigenvalue<'py>(&self, py: Python<'py>, tol: f64) -> PyResult<Bound<'py, PyAny>> {
        to_dict(py, &self.inner.smallest_eigenvalue(tol).map_err(to_py_err)?)
    }

    #[pyo3(signature = (tol = DEFAULT_TOL))]
    fn largest_eigenvalue<'py>(&self, py: Python<'py>, tol: f64) -> PyResult<Bound<'py, PyAny>> {
        to_dict(py, &self.inner.largest_eigenvalue(tol).map_err(to_py_err)?)
    }

    fn __repr__(&self) -> String {
        format!("TridiagMatrix(order={})", self.inner.order())
    }
}

#[pymodule]
pub fn markov_laguerre(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("DEFAULT_TOL", DEFAULT_TOL)?;
    m.add_class::<PyTridiag>()?;
    m.add_function(wrap_pyfunction!(markov_constant, m)?)?;
    m.add_function(wrap_pyfunction!(markov_constant_certified, m)?)?;
    m.add_function(wrap_pyfunction!(qn_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(closed_form_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(reciprocal_b123, m)?)?;
    m.add_function(wrap_pyfunction!(bounds_report, m)?)?;
    m.add_function(wrap_pyfunction!(theorem2_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(dorfler_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(prop1_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(laguerre_samuelson, m)?)?;
    m.add_function(wrap_pyfunction!(corollary1_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(theorem3_upper, m)?)?;
    m.add_function(wrap_pyfunction!(ratio_r, m)?)?;
    m.add_function(wrap_pyfunction!(residual_sandwich_check, m)?)?;
    m.add_function(wrap_pyfunction!(identity_residuals, m)?)?;
    m.add_function(wrap_pyfunction!(corollary2_bessel_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(bessel_j, m)?)?;
    m.add_function(wrap_pyfunction!(first_zero, m)?)?;
    m.add_function(wrap_pyfunction!(asymptotic_constant, m)?)?;
    Ok(())
}
