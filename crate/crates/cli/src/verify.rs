//! Verification suites behind `verify`. Each tolerance is fixed here so that
//! runs are reproducible; only the eigenvalue tolerance comes from `--tol`.

use std::f64::consts::PI;

use serde::Serialize;

use markov_laguerre::bessel::BesselOrder;
use markov_laguerre::bounds::{
    corollary2_bessel_bounds, dorfler_bounds, identity_residuals, power_sums, LowerNormalization,
    residual_sandwich_check, resolve_kappa_normalization, theorem2_bounds,
};
use markov_laguerre::number::parse_rational;
use markov_laguerre::recurrence::coefficient_triangle;
use markov_laguerre::{
    asymptotic_constant, coeff_a0, coeff_a1, coeff_a2, coeff_a3, first_zero,
    markov_constant_certified, reciprocal_b123, BigRational, Scalar, WeightAlpha,
};

use crate::args::{Mode, Suite};
use crate::error::CliError;

/// Alphas of the sandwich grid, as decimal strings so the rational mode sees them exactly.
pub const GRID_ALPHAS: [&str; 9] = ["-0.9", "-0.5", "0", "0.5", "1", "2", "5", "10", "25"];
pub const COEFF_ALPHAS: [&str; 7] = ["-1/2", "-1/4", "0", "1/3", "1", "5/2", "10"];
const COEFF_MAX_N: usize = 60;
const FLOAT_COEFF_RTOL: f64 = 1e-10;
const ASYMPTOTIC_ALPHAS: [f64; 4] = [0.0, 1.0, 2.0, 5.0];
const BESSEL_ZERO_TOL: f64 = 1e-14;
const HALF_INTEGER_ATOL: f64 = 1e-12;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, pass: bool, detail: String) -> Self {
        Check { name: name.into(), pass, detail }
    }
}

fn rational(text: &str) -> BigRational {
    parse_rational(text).expect("suite constants parse")
}

fn float(text: &str) -> f64 {
    rational(text).to_f64_lossy()
}

/// `(n, alpha)` with `3 <= n <= 100` and `n > (alpha+1)/6`.
pub fn sandwich_grid() -> Vec<(usize, &'static str)> {
    GRID_ALPHAS
        .iter()
        .flat_map(|&a| (3..=100).map(move |n| (n, a)))
        .filter(|&(n, a)| n as f64 > (float(a) + 1.0) / 6.0)
        .collect()
}

pub fn run_suite(suite: Suite, mode: Mode, tol: f64) -> Result<Vec<Check>, CliError> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(CliError::Usage(format!("--tol must be positive, got {tol}")));
    }
    match suite {
        Suite::Coeffs => coeffs(mode),
        Suite::Sandwich => sandwich(tol),
        Suite::Asymptotic => asymptotic(tol),
        Suite::Bessel => bessel(),
        Suite::Identities => identities(mode),
    }
}

fn coeffs(mode: Mode) -> Result<Vec<Check>, CliError> {
    let mut checks = Vec::new();
    for text in COEFF_ALPHAS {
        let (bad, compared) = match mode {
            Mode::Rational => compare_coeffs(&WeightAlpha::new(rational(text))?, |x, y| x == y)?,
            Mode::Floating => compare_coeffs(&WeightAlpha::new(float(text))?, |x: &f64, y: &f64| {
                (x - y).abs() <= FLOAT_COEFF_RTOL * y.abs()
            })?,
        };
        let detail = match bad.first() {
            None => format!("{compared} coefficients a0..a3 for n <= {COEFF_MAX_N} match the recurrence"),
            Some(first) => format!("{} of {compared} differ, first at {first}", bad.len()),
        };
        checks.push(Check::new(&format!("coeffs alpha={text}"), bad.is_empty(), detail));
    }
    Ok(checks)
}

fn compare_coeffs<T: Scalar>(
    alpha: &WeightAlpha<T>,
    same: impl Fn(&T, &T) -> bool,
) -> Result<(Vec<String>, usize), CliError> {
    let rows = coefficient_triangle(alpha, COEFF_MAX_N)?;
    let mut bad = Vec::new();
    let mut compared = 0;
    for (n, row) in rows.iter().enumerate().skip(1) {
        let closed = [coeff_a0(alpha, n), coeff_a1(alpha, n), coeff_a2(alpha, n), coeff_a3(alpha, n)];
        for (k, c) in closed.iter().enumerate().take(n + 1) {
            compared += 1;
            if !row.coeff(k).is_some_and(|r| same(r, c)) {
                bad.push(format!("a{k}, n={n}"));
            }
        }
    }
    Ok((bad, compared))
}

fn sandwich(tol: f64) -> Result<Vec<Check>, CliError> {
    let grid = sandwich_grid();
    let (mut thm2_bad, mut dorfler_bad, mut chain_bad, mut dominance_gaps) =
        (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for &(n, text) in &grid {
        let alpha = WeightAlpha::new(float(text))?;
        let x = markov_constant_certified(&alpha, n, tol)?.c_sq;
        let t = theorem2_bounds(&alpha, n);
        if !(t.lower < x && x < t.upper) {
            thm2_bad.push(format!("n={n} alpha={text}"));
        }
        let d = dorfler_bounds(&alpha, n);
        if !d.contains(x) {
            dorfler_bad.push(format!("n={n} alpha={text}"));
        }
        if t.lower < d.lower {
            dominance_gaps.push(format!("n={n} alpha={text}"));
        }
        let (b1, b2, b3) = reciprocal_b123(&WeightAlpha::new(rational(text))?, n);
        let s = power_sums(&b1, &b2, &b3);
        let (b1, p1, p2, p3) = (b1.to_f64_lossy(), s.p1.to_f64_lossy(), s.p2.to_f64_lossy(), s.p3.to_f64_lossy());
        let chain = b1 / n as f64 <= p2 / p1
            && p2 / p1 <= p3 / p2
            && p3 / p2 <= x
            && x < p3.cbrt()
            && x < p2.sqrt()
            && p2.sqrt() < b1;
        if !chain {
            chain_bad.push(format!("n={n} alpha={text}"));
        }
    }
    let report = |bad: &[String]| match bad.first() {
        None => format!("holds at all {} grid points", grid.len()),
        Some(first) => format!("{} violations, first at {first}", bad.len()),
    };
    let checks = vec![
        Check::new("thm2 strict sandwich", thm2_bad.is_empty(), report(&thm2_bad)),
        Check::new("dorfler sandwich", dorfler_bad.is_empty(), report(&dorfler_bad)),
        Check::new("power-sum chain", chain_bad.is_empty(), report(&chain_bad)),
        Check::new("thm2 lower >= dorfler lower", dominance_gaps.is_empty(), report(&dominance_gaps)),
    ];
    Ok(checks)
}

fn asymptotic(tol: f64) -> Result<Vec<Check>, CliError> {
    let mut checks = Vec::new();
    for a in ASYMPTOTIC_ALPHAS {
        let alpha = WeightAlpha::new(a)?;
        let c_inf = asymptotic_constant(&alpha, BESSEL_ZERO_TOL)?;
        let ratio = |n: usize| -> Result<f64, CliError> {
            Ok(markov_constant_certified(&alpha, n, tol)?.c / (n as f64 * c_inf))
        };
        let (r512, r4096) = (ratio(512)?, ratio(4096)?);
        let pass = (0.99..=1.01).contains(&r4096) && (r4096 - 1.0).abs() < (r512 - 1.0).abs();
        checks.push(Check::new(
            &format!("c_n/(n c) alpha={a}"),
            pass,
            format!("n=512: {r512:.9}, n=4096: {r4096:.9}"),
        ));
    }
    Ok(checks)
}

fn bessel() -> Result<Vec<Check>, CliError> {
    let mut outside = Vec::new();
    let mut count = 0;
    for k in 1..=104 {
        let nu = -1.0 + 0.25 * k as f64;
        let order = BesselOrder::new(nu)?;
        let j = first_zero(&order, BESSEL_ZERO_TOL)?;
        count += 1;
        if !corollary2_bessel_bounds(&order).contains_strictly(j) {
            outside.push(nu);
        }
    }
    let e_half = (first_zero(&BesselOrder::new(0.5)?, BESSEL_ZERO_TOL)? - PI).abs();
    let e_mhalf = (first_zero(&BesselOrder::new(-0.5)?, BESSEL_ZERO_TOL)? - PI / 2.0).abs();
    Ok(vec![
        Check::new(
            "j_(nu,1) enclosure",
            outside.is_empty(),
            format!("{} of {count} orders in -0.75..25 outside {:?}", outside.len(), outside),
        ),
        Check::new("j_(1/2,1) = pi", e_half <= HALF_INTEGER_ATOL, format!("error {e_half:.2e}")),
        Check::new("j_(-1/2,1) = pi/2", e_mhalf <= HALF_INTEGER_ATOL, format!("error {e_mhalf:.2e}")),
    ])
}

fn identities(mode: Mode) -> Result<Vec<Check>, CliError> {
    let mut bad = Vec::new();
    let mut count = 0;
    for k in 1..=50_000 {
        let a = -1.0 + 0.01 * k as f64;
        count += 1;
        if !identity_residuals(&WeightAlpha::new(a)?).all_positive() {
            bad.push(a);
        }
    }
    let mut checks = vec![Check::new(
        "kappa_j, nu~_j > 0",
        bad.is_empty(),
        format!("{} failures on {count} alphas in (-1, 499]", bad.len()),
    )];

    let mut negative = Vec::new();
    let grid = sandwich_grid();
    for &(n, text) in &grid {
        let ok = match mode {
            Mode::Rational => {
                let (lo, up) = residual_sandwich_check(&WeightAlpha::new(rational(text))?, n);
                let zero = BigRational::from_int(0);
                lo >= zero && up >= zero
            }
            Mode::Floating => {
                let (lo, up) = residual_sandwich_check(&WeightAlpha::new(float(text))?, n);
                lo >= 0.0 && up >= 0.0
            }
        };
        if !ok {
            negative.push(format!("n={n} alpha={text}"));
        }
    }
    checks.push(Check::new(
        "sandwich residuals >= 0",
        negative.is_empty(),
        match negative.first() {
            None => format!("{} arithmetic, all {} grid points", mode_name(mode), grid.len()),
            Some(first) => format!("{} negative, first at {first}", negative.len()),
        },
    ));

    let resolved: Vec<_> = GRID_ALPHAS
        .iter()
        .map(|&t| WeightAlpha::new(rational(t)).map(|w| resolve_kappa_normalization(&w)))
        .collect::<Result<_, _>>()?;
    let all_one = resolved.iter().all(|r| *r == Some(LowerNormalization::OnePlusAlpha));
    checks.push(Check::new(
        "kappa normalization",
        all_one,
        if all_one {
            "printed kappa_j correspond to the constant 2/((a+1)(a+5))".into()
        } else {
            format!("unresolved: {resolved:?}")
        },
    ));
    Ok(checks)
}

fn mode_name(mode: Mode) -> &'static str {
    match mode {
        Mode::Rational => "exact rational",
        Mode::Floating => "floating",
    }
}
