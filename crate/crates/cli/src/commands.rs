use std::io::Write;

use serde::Serialize;

use markov_laguerre::bessel::BesselOrder;
use markov_laguerre::bounds::{corollary1_bounds, corollary2_bessel_bounds, ratio_r};
use markov_laguerre::{
    asymptotic_constant, bounds_report, first_zero, markov_constant_certified, Error, WeightAlpha,
};

use crate::args::{BesselArgs, Cli, Command, FigureArgs, Format, PointArgs, SweepArgs, VerifyArgs};
use crate::error::CliError;
use crate::sweep::{
    alpha_range, csv_writer, fmt_f64, parse_alpha_list, parse_n_list, sweep_rows, write_csv, SweepRow,
};
use crate::verify::run_suite;

/// Whether every check a command ran passed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<Status, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {} workers: {e}", cli.jobs)))?;
    match &cli.command {
        Command::Constant(a) => constant(a, cli.format, out),
        Command::Bounds(a) => bounds(a, cli.format, out),
        Command::Sweep(a) => sweep(a, cli.format, &pool, out),
        Command::Verify(a) => verify(a, cli.format, out),
        Command::BesselZero(a) => bessel_zero(a, cli.format, out),
        Command::Figure1(a) => figure1(a, cli.format, out),
    }
}

fn check_tol(tol: f64) -> Result<(), CliError> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(CliError::Usage(format!("--tol must be positive, got {tol}")))
    }
}

fn point(args: &PointArgs) -> Result<WeightAlpha, CliError> {
    check_tol(args.tol)?;
    if args.n == 0 {
        return Err(CliError::Usage("--n must be >= 1".into()));
    }
    Ok(WeightAlpha::new(args.alpha)?)
}

fn write_json<T: Serialize + ?Sized>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn write_table(out: &mut dyn Write, rows: &[(String, String)]) -> Result<(), CliError> {
    let width = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
    for (k, v) in rows {
        writeln!(out, "{k:<width$}  {v}")?;
    }
    Ok(())
}

fn write_pairs_csv(out: &mut dyn Write, header: &[&str], records: &[Vec<String>]) -> Result<(), CliError> {
    let mut w = csv_writer(out);
    w.write_record(header)?;
    for r in records {
        w.write_record(r)?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct ConstantOut {
    n: usize,
    alpha: f64,
    c: f64,
    c_sq: f64,
    c_lower: f64,
    c_upper: f64,
    iterations: usize,
}

fn constant(args: &PointArgs, format: Format, out: &mut dyn Write) -> Result<Status, CliError> {
    let alpha = point(args)?;
    let m = markov_constant_certified(&alpha, args.n, args.tol)?;
    let row = ConstantOut {
        n: m.n,
        alpha: m.alpha,
        c: m.c,
        c_sq: m.c_sq,
        c_lower: m.c_bracket.0,
        c_upper: m.c_bracket.1,
        iterations: m.smallest_zero.iterations,
    };
    match format {
        Format::Json => write_json(out, &row)?,
        Format::Csv => write_pairs_csv(
            out,
            &["n", "alpha", "c", "c_sq", "c_lower", "c_upper", "iterations"],
            &[vec![
                row.n.to_string(),
                fmt_f64(row.alpha),
                fmt_f64(row.c),
                fmt_f64(row.c_sq),
                fmt_f64(row.c_lower),
                fmt_f64(row.c_upper),
                row.iterations.to_string(),
            ]],
        )?,
        Format::Table => write_table(
            out,
            &[
                ("n".into(), row.n.to_string()),
                ("alpha".into(), row.alpha.to_string()),
                ("c_n".into(), format!("{:.17}", row.c)),
                ("c_n^2".into(), format!("{:.17}", row.c_sq)),
                ("c_n in".into(), format!("[{:.17}, {:.17}]", row.c_lower, row.c_upper)),
                ("bisection steps".into(), row.iterations.to_string()),
            ],
        )?,
    }
    Ok(Status::Pass)
}

fn asymptotic_or_none(alpha: &WeightAlpha) -> Option<f64> {
    asymptotic_constant(alpha, 1e-14)
        .map_err(|e| log::debug!("no asymptotic constant at alpha = {}: {e}", alpha.get()))
        .ok()
}

fn bounds(args: &PointArgs, format: Format, out: &mut dyn Write) -> Result<Status, CliError> {
    let alpha = point(args)?;
    let report = bounds_report(&alpha, args.n, args.tol)?;
    match format {
        Format::Json => write_json(out, &report)?,
        Format::Csv => write_csv(out, &[SweepRow::from_report(&report, asymptotic_or_none(&alpha))])?,
        Format::Table => {
            let iv = |lo: f64, hi: f64| format!("{lo:>24.15e} {hi:>24.15e}");
            let mut rows = vec![
                ("n".to_string(), report.n.to_string()),
                ("alpha".into(), report.alpha.to_string()),
                ("c_n^2".into(), format!("{:>24.15e}", report.exact_c_sq)),
                ("c_n".into(), format!("{:>24.15e}", report.exact_c)),
                ("b1 b2 b3".into(), format!("{:.15e} {:.15e} {:.15e}", report.b1, report.b2, report.b3)),
                ("p1 p2 p3".into(), format!(
                    "{:.15e} {:.15e} {:.15e}",
                    report.power_sums.p1, report.power_sums.p2, report.power_sums.p3
                )),
                ("bounds on c_n^2".into(), format!("{:>24} {:>24}", "lower", "upper")),
                ("prop1 (i)".into(), iv(report.prop1_i.lower, report.prop1_i.upper)),
                ("prop1 (ii)".into(), iv(report.prop1_ii.lower, report.prop1_ii.upper)),
                ("prop1 (iii)".into(), iv(report.prop1_iii.lower, report.prop1_iii.upper)),
                ("thm2".into(), format!(
                    "{}  valid: lower {}, upper {}",
                    iv(report.thm2.lower, report.thm2.upper),
                    report.thm2.lower_valid,
                    report.thm2.upper_valid
                )),
                ("dorfler".into(), iv(report.dorfler.lower, report.dorfler.upper)),
                ("laguerre-samuelson".into(), iv(report.laguerre_samuelson.lower, report.laguerre_samuelson.upper)),
            ];
            if let Some(t) = report.turan_c_sq {
                rows.push(("turan c_n^2".into(), format!("{t:>24.15e}")));
            }
            rows.push(("thm2 violation".into(), report.thm2_violation().to_string()));
            rows.push(("dorfler violation".into(), report.dorfler_violation().to_string()));
            write_table(out, &rows)?;
        }
    }
    Ok(if report.thm2_violation() || report.dorfler_violation() { Status::Fail } else { Status::Pass })
}

fn sweep(
    args: &SweepArgs,
    format: Format,
    pool: &rayon::ThreadPool,
    out: &mut dyn Write,
) -> Result<Status, CliError> {
    check_tol(args.tol)?;
    let ns = parse_n_list(&args.n_list)?;
    let alphas = match (&args.alpha, &args.alpha_list) {
        (Some(a), _) => vec![*a],
        (None, Some(list)) => parse_alpha_list(list)?,
        (None, None) => alpha_range(args.alpha_min, args.alpha_max, args.alpha_step)?,
    };
    log::info!("sweep over {} alphas x {} degrees", alphas.len(), ns.len());
    let rows = pool.install(|| sweep_rows(&alphas, &ns, args.tol))?;
    match format {
        Format::Json => write_json(out, &rows)?,
        Format::Csv | Format::Table => write_csv(out, &rows)?,
    }
    let violations = rows.iter().filter(|r| r.thm2_violation || r.dorfler_violation).count();
    if violations > 0 {
        log::error!("{violations} rows violate a sandwich");
        return Ok(Status::Fail);
    }
    Ok(Status::Pass)
}

fn verify(args: &VerifyArgs, format: Format, out: &mut dyn Write) -> Result<Status, CliError> {
    let checks = run_suite(args.suite, args.mode, args.tol)?;
    match format {
        Format::Json => write_json(out, &checks)?,
        Format::Csv => write_pairs_csv(
            out,
            &["check", "status", "detail"],
            &checks
                .iter()
                .map(|c| vec![c.name.clone(), status_word(c.pass).into(), c.detail.clone()])
                .collect::<Vec<_>>(),
        )?,
        Format::Table => {
            for c in &checks {
                writeln!(out, "{} {}: {}", status_word(c.pass), c.name, c.detail)?;
            }
        }
    }
    Ok(if checks.iter().all(|c| c.pass) { Status::Pass } else { Status::Fail })
}

fn status_word(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

#[derive(Serialize)]
struct ZeroOut {
    nu: f64,
    j: f64,
    enclosure_lower: f64,
    enclosure_upper: f64,
}

fn bessel_zero(args: &BesselArgs, format: Format, out: &mut dyn Write) -> Result<Status, CliError> {
    check_tol(args.tol)?;
    let order = match (args.nu, args.alpha) {
        (Some(nu), _) => BesselOrder::new(nu)?,
        (None, Some(a)) => BesselOrder::from_alpha(&WeightAlpha::new(a)?)?,
        (None, None) => return Err(CliError::Usage("give --nu or --alpha".into())),
    };
    let j = first_zero(&order, args.tol).map_err(|e| match e {
        Error::OutsideEnvelope { .. } => CliError::Usage(e.to_string()),
        e => CliError::from(e),
    })?;
    let b = corollary2_bessel_bounds(&order);
    let row = ZeroOut { nu: order.get(), j, enclosure_lower: b.lower, enclosure_upper: b.upper };
    match format {
        Format::Json => write_json(out, &row)?,
        Format::Csv => write_pairs_csv(
            out,
            &["nu", "j", "enclosure_lower", "enclosure_upper"],
            &[vec![fmt_f64(row.nu), fmt_f64(row.j), fmt_f64(row.enclosure_lower), fmt_f64(row.enclosure_upper)]],
        )?,
        Format::Table => write_table(
            out,
            &[
                ("nu".into(), row.nu.to_string()),
                ("j_(nu,1)".into(), format!("{:.17}", row.j)),
                ("enclosure".into(), format!("({:.17}, {:.17})", row.enclosure_lower, row.enclosure_upper)),
            ],
        )?,
    }
    Ok(Status::Pass)
}

#[derive(Serialize)]
struct RatioRow {
    alpha: f64,
    c_lower: f64,
    c_upper: f64,
    r: f64,
    /// `r >= 2` at some `alpha < 500`.
    exceeds_two: bool,
}

fn figure1(args: &FigureArgs, format: Format, out: &mut dyn Write) -> Result<Status, CliError> {
    let alphas = alpha_range(args.alpha_min, args.alpha_max, args.alpha_step)?;
    let rows = alphas
        .iter()
        .map(|&a| {
            let alpha = WeightAlpha::new(a)?;
            let b = corollary1_bounds(&alpha);
            let r = ratio_r(&alpha);
            Ok(RatioRow { alpha: a, c_lower: b.lower, c_upper: b.upper, r, exceeds_two: r >= 2.0 && a < 500.0 })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let nonneg: Vec<&RatioRow> = rows.iter().filter(|r| r.alpha >= 0.0).collect();
    let monotone = nonneg.windows(2).all(|w| w[0].r < w[1].r);
    log::info!("r(alpha) strictly increasing on the sampled alpha >= 0: {monotone}");
    match format {
        Format::Json => write_json(out, &rows)?,
        Format::Csv | Format::Table => write_pairs_csv(
            out,
            &["alpha", "c_lower", "c_upper", "r", "exceeds_two"],
            &rows
                .iter()
                .map(|r| {
                    vec![fmt_f64(r.alpha), fmt_f64(r.c_lower), fmt_f64(r.c_upper), fmt_f64(r.r), r.exceeds_two.to_string()]
                })
                .collect::<Vec<_>>(),
        )?,
    }
    let flagged = rows.iter().filter(|r| r.exceeds_two).count();
    if flagged > 0 {
        log::error!("{flagged} samples with r >= 2 below alpha = 500");
        return Ok(Status::Fail);
    }
    Ok(Status::Pass)
}
