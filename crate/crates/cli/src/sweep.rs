use std::io::{Read, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use markov_laguerre::{asymptotic_constant, bounds_report, BoundsReport, WeightAlpha};

use crate::error::CliError;

/// One CSV line of a sweep: the full bounds report for `(alpha, n)`, flattened.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub n: usize,
    pub alpha: f64,
    pub exact_c: f64,
    pub exact_c_sq: f64,
    pub b1: f64,
    pub b2: f64,
    pub b3: f64,
    pub p1: f64,
    pub p2: f64,
    pub p3: f64,
    pub prop1_i_lower: f64,
    pub prop1_i_upper: f64,
    pub prop1_ii_lower: f64,
    pub prop1_ii_upper: f64,
    pub prop1_iii_lower: f64,
    pub prop1_iii_upper: f64,
    pub thm2_lower: f64,
    pub thm2_upper: f64,
    pub thm2_lower_valid: bool,
    pub thm2_upper_valid: bool,
    pub thm2_violation: bool,
    pub dorfler_lower: f64,
    pub dorfler_upper: f64,
    pub dorfler_violation: bool,
    pub laguerre_samuelson_lower: f64,
    pub laguerre_samuelson_upper: f64,
    pub turan_c_sq: Option<f64>,
    /// `c_n / (n c(alpha))`, absent when `j_{(alpha-1)/2,1}` is outside the Bessel envelope.
    pub asymptotic_ratio: Option<f64>,
}

pub const HEADER: [&str; 28] = [
    "n",
    "alpha",
    "exact_c",
    "exact_c_sq",
    "b1",
    "b2",
    "b3",
    "p1",
    "p2",
    "p3",
    "prop1_i_lower",
    "prop1_i_upper",
    "prop1_ii_lower",
    "prop1_ii_upper",
    "prop1_iii_lower",
    "prop1_iii_upper",
    "thm2_lower",
    "thm2_upper",
    "thm2_lower_valid",
    "thm2_upper_valid",
    "thm2_violation",
    "dorfler_lower",
    "dorfler_upper",
    "dorfler_violation",
    "laguerre_samuelson_lower",
    "laguerre_samuelson_upper",
    "turan_c_sq",
    "asymptotic_ratio",
];

/// 17 significant digits, enough to round-trip any binary64 value.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map(fmt_f64).unwrap_or_default()
}

impl SweepRow {
    pub fn from_report(r: &BoundsReport, c_inf: Option<f64>) -> Self {
        SweepRow {
            n: r.n,
            alpha: r.alpha,
            exact_c: r.exact_c,
            exact_c_sq: r.exact_c_sq,
            b1: r.b1,
            b2: r.b2,
            b3: r.b3,
            p1: r.power_sums.p1,
            p2: r.power_sums.p2,
            p3: r.power_sums.p3,
            prop1_i_lower: r.prop1_i.lower,
            prop1_i_upper: r.prop1_i.upper,
            prop1_ii_lower: r.prop1_ii.lower,
            prop1_ii_upper: r.prop1_ii.upper,
            prop1_iii_lower: r.prop1_iii.lower,
            prop1_iii_upper: r.prop1_iii.upper,
            thm2_lower: r.thm2.lower,
            thm2_upper: r.thm2.upper,
            thm2_lower_valid: r.thm2.lower_valid,
            thm2_upper_valid: r.thm2.upper_valid,
            thm2_violation: r.thm2_violation(),
            dorfler_lower: r.dorfler.lower,
            dorfler_upper: r.dorfler.upper,
            dorfler_violation: r.dorfler_violation(),
            laguerre_samuelson_lower: r.laguerre_samuelson.lower,
            laguerre_samuelson_upper: r.laguerre_samuelson.upper,
            turan_c_sq: r.turan_c_sq,
            asymptotic_ratio: c_inf.map(|c| r.exact_c / (r.n as f64 * c)),
        }
    }

    pub fn to_record(&self) -> Vec<String> {
        let f = fmt_f64;
        vec![
            self.n.to_string(),
            f(self.alpha),
            f(self.exact_c),
            f(self.exact_c_sq),
            f(self.b1),
            f(self.b2),
            f(self.b3),
            f(self.p1),
            f(self.p2),
            f(self.p3),
            f(self.prop1_i_lower),
            f(self.prop1_i_upper),
            f(self.prop1_ii_lower),
            f(self.prop1_ii_upper),
            f(self.prop1_iii_lower),
            f(self.prop1_iii_upper),
            f(self.thm2_lower),
            f(self.thm2_upper),
            self.thm2_lower_valid.to_string(),
            self.thm2_upper_valid.to_string(),
            self.thm2_violation.to_string(),
            f(self.dorfler_lower),
            f(self.dorfler_upper),
            self.dorfler_violation.to_string(),
            f(self.laguerre_samuelson_lower),
            f(self.laguerre_samuelson_upper),
            fmt_opt(self.turan_c_sq),
            fmt_opt(self.asymptotic_ratio),
        ]
    }

    pub fn from_record(rec: &csv::StringRecord) -> Result<Self, String> {
        if rec.len() != HEADER.len() {
            return Err(format!("expected {} fields, got {}", HEADER.len(), rec.len()));
        }
        let field = |i: usize| &rec[i];
        let num = |i: usize| -> Result<f64, String> {
            field(i).parse().map_err(|e| format!("{}: {e}", HEADER[i]))
        };
        let flag = |i: usize| -> Result<bool, String> {
            field(i).parse().map_err(|e| format!("{}: {e}", HEADER[i]))
        };
        let opt = |i: usize| -> Result<Option<f64>, String> {
            if field(i).is_empty() {
                Ok(None)
            } else {
                num(i).map(Some)
            }
        };
        Ok(SweepRow {
            n: field(0).parse().map_err(|e| format!("n: {e}"))?,
            alpha: num(1)?,
            exact_c: num(2)?,
            exact_c_sq: num(3)?,
            b1: num(4)?,
            b2: num(5)?,
            b3: num(6)?,
            p1: num(7)?,
            p2: num(8)?,
            p3: num(9)?,
            prop1_i_lower: num(10)?,
            prop1_i_upper: num(11)?,
            prop1_ii_lower: num(12)?,
            prop1_ii_upper: num(13)?,
            prop1_iii_lower: num(14)?,
            prop1_iii_upper: num(15)?,
            thm2_lower: num(16)?,
            thm2_upper: num(17)?,
            thm2_lower_valid: flag(18)?,
            thm2_upper_valid: flag(19)?,
            thm2_violation: flag(20)?,
            dorfler_lower: num(21)?,
            dorfler_upper: num(22)?,
            dorfler_violation: flag(23)?,
            laguerre_samuelson_lower: num(24)?,
            laguerre_samuelson_upper: num(25)?,
            turan_c_sq: opt(26)?,
            asymptotic_ratio: opt(27)?,
        })
    }
}

pub fn csv_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out)
}

pub fn write_csv<W: Write>(out: W, rows: &[SweepRow]) -> csv::Result<()> {
    let mut w = csv_writer(out);
    w.write_record(HEADER)?;
    for row in rows {
        w.write_record(row.to_record())?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<SweepRow>, String> {
    let mut r = csv::Reader::from_reader(input);
    let header = r.headers().map_err(|e| e.to_string())?.clone();
    if header.iter().ne(HEADER) {
        return Err("unexpected CSV header".into());
    }
    r.records()
        .map(|rec| rec.map_err(|e| e.to_string()).and_then(|rec| SweepRow::from_record(&rec)))
        .collect()
}

/// `a..b` expands to `a, a+1, ..., b`; pieces are comma-separated.
pub fn parse_n_list(text: &str) -> Result<Vec<usize>, CliError> {
    let mut out = Vec::new();
    for piece in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let parse = |s: &str| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("bad degree {s:?} in --n-list")))
        };
        if let Some((a, b)) = piece.split_once("..") {
            let (a, b) = (parse(a)?, parse(b.trim_start_matches('='))?);
            if a > b {
                return Err(CliError::Usage(format!("empty range {piece:?} in --n-list")));
            }
            out.extend(a..=b);
        } else {
            out.push(parse(piece)?);
        }
    }
    if out.is_empty() {
        return Err(CliError::Usage("--n-list is empty".into()));
    }
    if out.contains(&0) {
        return Err(CliError::Usage("degrees in --n-list must be >= 1".into()));
    }
    Ok(out)
}

pub fn parse_alpha_list(text: &str) -> Result<Vec<f64>, CliError> {
    let out = text
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| p.parse::<f64>().map_err(|_| CliError::Usage(format!("bad alpha {p:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    if out.is_empty() {
        return Err(CliError::Usage("--alpha-list is empty".into()));
    }
    Ok(out)
}

/// `min, min + step, ...` up to `max`, with the endpoint kept despite rounding.
pub fn alpha_range(min: f64, max: f64, step: f64) -> Result<Vec<f64>, CliError> {
    if step.is_nan() || step <= 0.0 || !min.is_finite() || !max.is_finite() || max < min {
        return Err(CliError::Usage(format!(
            "alpha range needs min <= max and step > 0, got {min}..{max} step {step}"
        )));
    }
    let count = ((max - min) / step + 1e-9).floor() as usize;
    Ok((0..=count).map(|k| min + k as f64 * step).collect())
}

/// Rows in (alpha, n) lexicographic order, whatever the pool size.
pub fn sweep_rows(alphas: &[f64], ns: &[usize], tol: f64) -> Result<Vec<SweepRow>, CliError> {
    let weights = alphas
        .iter()
        .map(|&a| WeightAlpha::new(a).map_err(CliError::from))
        .collect::<Result<Vec<_>, _>>()?;
    let limits: Vec<Option<f64>> = weights
        .par_iter()
        .map(|w| match asymptotic_constant(w, 1e-14) {
            Ok(c) => Some(c),
            Err(e) => {
                log::debug!("no asymptotic ratio at alpha = {}: {e}", w.get());
                None
            }
        })
        .collect();
    let jobs: Vec<(usize, usize)> =
        (0..weights.len()).flat_map(|i| ns.iter().map(move |&n| (i, n))).collect();
    jobs.par_iter()
        .map(|&(i, n)| {
            let report = bounds_report(&weights[i], n, tol)?;
            Ok(SweepRow::from_report(&report, limits[i]))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n_lists() {
        assert_eq!(parse_n_list("1,3..5, 9").unwrap(), vec![1, 3, 4, 5, 9]);
        assert_eq!(parse_n_list("3..=4").unwrap(), vec![3, 4]);
        assert_eq!(parse_n_list("3..100").unwrap().len(), 98);
        for bad in ["", " , ", "0", "a", "5..2", "-1"] {
            assert!(matches!(parse_n_list(bad), Err(CliError::Usage(_))), "{bad:?}");
        }
    }

    #[test]
    fn alpha_ranges_keep_the_endpoint() {
        let r = alpha_range(-0.9, 0.3, 0.1).unwrap();
        assert_eq!(r.len(), 13);
        assert!((r[12] - 0.3).abs() < 1e-12);
        assert_eq!(alpha_range(2.0, 2.0, 1.0).unwrap(), vec![2.0]);
        assert!(alpha_range(1.0, 0.0, 0.1).is_err());
        assert!(alpha_range(0.0, 1.0, 0.0).is_err());
        assert_eq!(parse_alpha_list("-0.9, 0,25").unwrap(), vec![-0.9, 0.0, 25.0]);
    }

    #[test]
    fn seventeen_digits() {
        assert_eq!(fmt_f64(0.1), "1.0000000000000001e-1");
        assert_eq!(fmt_f64(0.1).parse::<f64>().unwrap(), 0.1);
    }
}
