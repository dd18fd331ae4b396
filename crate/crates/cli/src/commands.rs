//! Implementations of the five subcommands.
//!
//! Every command validates its flags (usage problems exit with code 2),
//! computes with the library, and renders a complete output string; the
//! caller decides whether it goes to stdout or a file.  All evaluation is
//! single-threaded, so row order and values are trivially deterministic.

use crate::args::{
    AlgoArg, ApproxArgs, BenchArgs, CheckArgs, EvalArgs, FormatArg, IntegrandArg, SuiteArg,
    TableArgs,
};
use crate::output::{csv_line, fmt_f64, json_document};
use crate::CliError;
use dual_bernstein::approx::{default_quad_m, lsq_bezier};
use dual_bernstein::dualbern::{
    build_by_elevation, dual_via_gram, duality_defect, eval_all_recurrence,
    eval_all_shifted_power, eval_all_short_jacobi, eval_via_jacobi_hahn, DualTable,
};
use dual_bernstein::polyalg::{poly_eval, Basis, Poly};
use dual_bernstein::relations::{
    ode4_composition_mismatch, rec4_composition_mismatch, residual_contiguity,
    residual_diffrec_1, residual_diffrec_2, residual_diffrec_3, residual_f_lemma,
    residual_h_linear, residual_intertwining, residual_ode2, residual_ode4, residual_rec4,
    residual_rec_nonhomog,
};
use dual_bernstein::{Error, WeightParams, CANONICAL_PARAM_SETS};
use serde_json::json;
use std::time::Instant;

/// Evaluation points used by the pointwise identity sweeps.
const SWEEP_X: [f64; 5] = [0.1, 0.25, 0.5, 0.75, 0.9];

fn parse_params(alpha: f64, beta: f64) -> Result<WeightParams, CliError> {
    WeightParams::new(alpha, beta).map_err(|e| CliError::Usage(e.to_string()))
}

/// Map library errors onto the exit-code contract: domain and argument
/// violations are usage errors (the flags asked for something outside the
/// documented range), everything else is a runtime failure.
fn from_core(e: Error) -> CliError {
    match e {
        Error::Domain(_) | Error::InvalidArgument(_) => CliError::Usage(e.to_string()),
        other => CliError::Runtime(other.to_string()),
    }
}

fn table_for(
    algo: AlgoArg,
    n: usize,
    params: WeightParams,
    x: f64,
) -> Result<DualTable, CliError> {
    Ok(match algo {
        AlgoArg::JacobiHahn => eval_via_jacobi_hahn(n, params, x),
        AlgoArg::ShortJacobi => eval_all_short_jacobi(n, params, x),
        AlgoArg::ShiftedPower => eval_all_shifted_power(n, params, x),
        AlgoArg::Elevation => build_by_elevation(n, params, x),
        AlgoArg::Recurrence => eval_all_recurrence(n, params, x),
        AlgoArg::GramOracle => dual_via_gram(n, params, x).map_err(from_core)?,
    })
}

pub fn cmd_eval(args: &EvalArgs) -> Result<String, CliError> {
    let params = parse_params(args.alpha, args.beta)?;
    if !args.x.is_finite() {
        return Err(CliError::Usage(format!("x must be finite (got {})", args.x)));
    }
    if let Some(i) = args.i {
        if i > args.n {
            return Err(CliError::Usage(format!(
                "index i must satisfy 0 <= i <= n (got i = {i}, n = {})",
                args.n
            )));
        }
    }
    let table = table_for(args.algo, args.n, params, args.x)?;
    let indices: Vec<usize> = match args.i {
        Some(i) => vec![i],
        None => (0..=args.n).collect(),
    };
    match args.format {
        FormatArg::Csv => {
            let mut text = String::from("i,value\n");
            for i in indices {
                text.push_str(&csv_line(&[i.to_string(), fmt_f64(table.values[i])]));
            }
            Ok(text)
        }
        FormatArg::Json => {
            let rows = indices
                .into_iter()
                .map(|i| json!({ "i": i, "value": table.values[i] }))
                .collect();
            Ok(json_document(rows))
        }
    }
}

pub fn cmd_table(args: &TableArgs) -> Result<String, CliError> {
    let params = parse_params(args.alpha, args.beta)?;
    if args.grid_m < 1 {
        return Err(CliError::Usage(
            "the grid needs at least one panel (--grid-m >= 1)".to_string(),
        ));
    }
    let m = args.grid_m;
    let mut rows: Vec<(f64, usize, f64)> = Vec::with_capacity((m + 1) * (args.n + 1));
    for k in 0..=m {
        let x = k as f64 / m as f64;
        let table = table_for(args.algo, args.n, params, x)?;
        for i in 0..=args.n {
            rows.push((x, i, table.values[i]));
        }
    }
    match args.format {
        FormatArg::Csv => {
            let mut text = String::from("x,i,value\n");
            for (x, i, v) in rows {
                text.push_str(&csv_line(&[fmt_f64(x), i.to_string(), fmt_f64(v)]));
            }
            Ok(text)
        }
        FormatArg::Json => {
            let rows = rows
                .into_iter()
                .map(|(x, i, v)| json!({ "x": x, "i": i, "value": v }))
                .collect();
            Ok(json_document(rows))
        }
    }
}

/// One benchmark measurement: one method at one degree.
#[derive(Debug, Clone)]
pub struct BenchRecord {
    pub method: &'static str,
    pub n: usize,
    pub grid_m: usize,
    pub repeats: usize,
    pub wall_seconds: f64,
    pub max_cross_dev: f64,
}

fn median(mut samples: Vec<f64>) -> f64 {
    samples.sort_by(f64::total_cmp);
    samples[samples.len() / 2]
}

/// Shortest duration one timed sample is allowed to span.  A single pass can
/// finish in well under a millisecond, where one scheduler preemption skews
/// the measurement by tens of percent; batching passes until the sample
/// reaches this floor keeps that jitter small against the measured span.
const MIN_SAMPLE_SECONDS: f64 = 0.01;

/// Median wall time of one run of `pass`, over `repeats` timed samples, after
/// one discarded warm-up run.  Each sample executes the pass in a batch sized
/// from the warm-up so that the sample spans at least [`MIN_SAMPLE_SECONDS`],
/// and reports the per-pass average; the median is taken across samples.
/// Timing is single-threaded by construction.
fn time_method<F: FnMut()>(repeats: usize, mut pass: F) -> f64 {
    let start = Instant::now();
    pass();
    let warm = start.elapsed().as_secs_f64();
    let batch = ((MIN_SAMPLE_SECONDS / warm.max(1e-9)).ceil() as usize).clamp(1, 10_000);
    let samples: Vec<f64> = (0..repeats)
        .map(|_| {
            let start = Instant::now();
            for _ in 0..batch {
                pass();
            }
            start.elapsed().as_secs_f64() / batch as f64
        })
        .collect();
    median(samples).max(f64::MIN_POSITIVE)
}

/// Time full-table construction over the grid x_k = k/M by iterated degree
/// elevation and by the O(n) index recurrence, and measure how far the two
/// methods drift apart (max over the grid of the largest entry difference
/// relative to the table magnitude at that point).
pub fn bench_records(
    ns: &[usize],
    params: WeightParams,
    grid_m: usize,
    repeats: usize,
) -> Vec<BenchRecord> {
    let xs: Vec<f64> = (0..=grid_m).map(|k| k as f64 / grid_m as f64).collect();
    let mut records = Vec::new();
    for &n in ns {
        let t_elev = time_method(repeats, || {
            for &x in &xs {
                std::hint::black_box(build_by_elevation(n, params, x));
            }
        });
        let t_rec = time_method(repeats, || {
            for &x in &xs {
                std::hint::black_box(eval_all_recurrence(n, params, x));
            }
        });
        let mut dev = 0.0f64;
        for &x in &xs {
            let e = build_by_elevation(n, params, x);
            let r = eval_all_recurrence(n, params, x);
            let mag = e
                .values
                .iter()
                .chain(r.values.iter())
                .fold(0.0f64, |m, v| m.max(v.abs()));
            let diff = (0..=n)
                .map(|i| (e.values[i] - r.values[i]).abs())
                .fold(0.0f64, f64::max);
            dev = dev.max(diff / mag.max(f64::MIN_POSITIVE));
        }
        records.push(BenchRecord {
            method: "elevation",
            n,
            grid_m,
            repeats,
            wall_seconds: t_elev,
            max_cross_dev: dev,
        });
        records.push(BenchRecord {
            method: "recurrence",
            n,
            grid_m,
            repeats,
            wall_seconds: t_rec,
            max_cross_dev: dev,
        });
    }
    records
}

pub fn cmd_bench(args: &BenchArgs) -> Result<String, CliError> {
    let params = parse_params(args.alpha, args.beta)?;
    if args.repeats < 3 {
        return Err(CliError::Usage(format!(
            "--repeats must be at least 3 for a meaningful median (got {})",
            args.repeats
        )));
    }
    if args.grid_m < 1 {
        return Err(CliError::Usage(
            "the grid needs at least one panel (--grid-m >= 1)".to_string(),
        ));
    }
    let records = bench_records(&args.n, params, args.grid_m, args.repeats);
    let mut text = String::from("method,n,M,repeats,wall_seconds,max_cross_dev\n");
    for r in records {
        text.push_str(&csv_line(&[
            r.method.to_string(),
            r.n.to_string(),
            r.grid_m.to_string(),
            r.repeats.to_string(),
            fmt_f64(r.wall_seconds),
            fmt_f64(r.max_cross_dev),
        ]));
    }
    Ok(text)
}

/// Result of one identity sweep inside `check`.
#[derive(Debug, Clone)]
pub struct CheckRow {
    pub identity: &'static str,
    pub worst: f64,
    pub tolerance: f64,
}

impl CheckRow {
    pub fn passes(&self) -> bool {
        self.worst <= self.tolerance
    }
}

fn worst_pointwise(
    n_max: usize,
    sets: &[WeightParams],
    f: &dyn Fn(usize, usize, WeightParams, f64) -> f64,
) -> f64 {
    let mut worst = 0.0f64;
    for &p in sets {
        for n in 0..=n_max {
            for i in 0..=n {
                for &x in &SWEEP_X {
                    worst = worst.max(f(n, i, p, x).abs());
                }
            }
        }
    }
    worst
}

fn rows_lemma(n_max: usize, sets: &[WeightParams]) -> Vec<CheckRow> {
    let mut worst = 0.0f64;
    for p in sets {
        for n in 0..=n_max {
            for i in 0..=n {
                for j in 0..=n {
                    worst = worst.max(residual_f_lemma(n, i, j, p.alpha).abs());
                }
            }
        }
    }
    vec![CheckRow {
        identity: "lemma",
        worst,
        tolerance: 1e-8,
    }]
}

fn rows_diffrec(n_max: usize, sets: &[WeightParams]) -> Vec<CheckRow> {
    vec![
        CheckRow {
            identity: "diffrec-1",
            worst: worst_pointwise(n_max, sets, &residual_diffrec_1),
            tolerance: 1e-8,
        },
        CheckRow {
            identity: "diffrec-2",
            worst: worst_pointwise(n_max, sets, &residual_diffrec_2),
            tolerance: 1e-8,
        },
        CheckRow {
            identity: "diffrec-3",
            worst: worst_pointwise(n_max, sets, &residual_diffrec_3),
            tolerance: 1e-8,
        },
        CheckRow {
            identity: "intertwining",
            worst: worst_pointwise(n_max.min(10), sets, &residual_intertwining),
            tolerance: 1e-9,
        },
    ]
}

fn rows_ode(n_max: usize, sets: &[WeightParams]) -> Vec<CheckRow> {
    let mut composition = 0.0f64;
    for &p in sets {
        for n in 0..=n_max.min(8) {
            for i in 0..=n {
                composition = composition.max(ode4_composition_mismatch(n, i, p).abs());
            }
        }
    }
    let mut contiguity = 0.0f64;
    for &p in sets {
        for n in 0..=n_max.min(20) {
            for &x in &SWEEP_X {
                contiguity = contiguity.max(residual_contiguity(n, p, x).abs());
            }
        }
    }
    vec![
        CheckRow {
            identity: "ode-2",
            worst: worst_pointwise(n_max, sets, &residual_ode2),
            tolerance: 1e-8,
        },
        CheckRow {
            identity: "ode-4",
            worst: worst_pointwise(n_max, sets, &residual_ode4),
            tolerance: 1e-8,
        },
        CheckRow {
            identity: "ode-4-composition",
            worst: composition,
            tolerance: 1e-10,
        },
        CheckRow {
            identity: "contiguity",
            worst: contiguity,
            tolerance: 1e-11,
        },
    ]
}

fn rows_recurrence(n_max: usize, sets: &[WeightParams]) -> Vec<CheckRow> {
    let mut composition = 0.0f64;
    for &p in sets {
        for n in 0..=n_max.min(8) {
            for i in 0..=n {
                composition = composition.max(rec4_composition_mismatch(n, i, p).abs());
            }
        }
    }
    vec![
        CheckRow {
            identity: "rec-nonhomog",
            worst: worst_pointwise(n_max, sets, &residual_rec_nonhomog),
            tolerance: 1e-8,
        },
        CheckRow {
            identity: "rec-4",
            worst: worst_pointwise(n_max, sets, &residual_rec4),
            tolerance: 1e-8,
        },
        CheckRow {
            identity: "rec-4-composition",
            worst: composition,
            tolerance: 1e-10,
        },
        CheckRow {
            identity: "hahn-affine",
            worst: worst_pointwise(n_max, sets, &residual_h_linear),
            tolerance: 1e-11,
        },
    ]
}

fn rows_duality(n_max: usize, sets: &[WeightParams]) -> Vec<CheckRow> {
    let mut worst = 0.0f64;
    for &p in sets {
        for n in 0..=n_max.min(12) {
            for i in 0..=n {
                for j in 0..=n {
                    worst = worst.max(duality_defect(n, i, j, p).abs());
                }
            }
        }
    }
    vec![CheckRow {
        identity: "duality",
        worst,
        tolerance: 1e-6,
    }]
}

fn rows_symmetry(n_max: usize, sets: &[WeightParams]) -> Vec<CheckRow> {
    // The short Jacobi combination is uniformly accurate across the whole
    // grid, so the measured deviation reflects the symmetry property itself
    // rather than the index recurrence's known loss of headroom very close
    // to the interval endpoints.
    let mut worst = 0.0f64;
    for &p in sets {
        let q = p.swapped();
        for n in 0..=n_max.min(15) {
            for k in 0..=100u32 {
                let x = k as f64 / 100.0;
                let t1 = eval_all_short_jacobi(n, p, x);
                let t2 = eval_all_short_jacobi(n, q, 1.0 - x);
                let mag = t1.values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
                for i in 0..=n {
                    let dev = (t1.values[i] - t2.values[n - i]).abs();
                    worst = worst.max(dev / mag.max(f64::MIN_POSITIVE));
                }
            }
        }
    }
    vec![CheckRow {
        identity: "symmetry",
        worst,
        tolerance: 1e-9,
    }]
}

/// Run the named suite and return its rows in a fixed order.
pub fn check_rows(suite: SuiteArg, n_max: usize, sets: &[WeightParams]) -> Vec<CheckRow> {
    match suite {
        SuiteArg::Lemma => rows_lemma(n_max, sets),
        SuiteArg::Diffrec => rows_diffrec(n_max, sets),
        SuiteArg::Ode => rows_ode(n_max, sets),
        SuiteArg::Recurrence => rows_recurrence(n_max, sets),
        SuiteArg::Duality => rows_duality(n_max, sets),
        SuiteArg::Symmetry => rows_symmetry(n_max, sets),
        SuiteArg::All => {
            let mut rows = rows_lemma(n_max, sets);
            rows.extend(rows_diffrec(n_max, sets));
            rows.extend(rows_ode(n_max, sets));
            rows.extend(rows_recurrence(n_max, sets));
            rows.extend(rows_duality(n_max, sets));
            rows.extend(rows_symmetry(n_max, sets));
            rows
        }
    }
}

/// Returns the rendered report and the number of failing rows.
pub fn cmd_check(args: &CheckArgs) -> Result<(String, usize), CliError> {
    let sets: Vec<WeightParams> = match (args.alpha, args.beta) {
        (Some(a), Some(b)) => vec![parse_params(a, b)?],
        _ => CANONICAL_PARAM_SETS
            .iter()
            .map(|&(a, b)| WeightParams::new(a, b).expect("canonical parameters are valid"))
            .collect(),
    };
    let rows = check_rows(args.suite, args.n_max, &sets);
    let mut text = String::from("identity,worst,tolerance,status\n");
    let mut failing = 0usize;
    for row in &rows {
        let status = if row.passes() {
            "pass"
        } else {
            failing += 1;
            "fail"
        };
        text.push_str(&csv_line(&[
            row.identity.to_string(),
            format!("{:e}", row.worst),
            format!("{:e}", row.tolerance),
            status.to_string(),
        ]));
    }
    Ok((text, failing))
}

fn build_integrand(args: &ApproxArgs) -> Result<Box<dyn FnMut(f64) -> f64>, CliError> {
    match args.f {
        IntegrandArg::Poly => {
            let coeffs = args.coeffs.clone().ok_or_else(|| {
                CliError::Usage("--f poly requires --coeffs c0,c1,...".to_string())
            })?;
            if coeffs.is_empty() {
                return Err(CliError::Usage(
                    "--coeffs needs at least one coefficient".to_string(),
                ));
            }
            let p = Poly::new(Basis::MonomialX, coeffs);
            Ok(Box::new(move |x| poly_eval(&p, x)))
        }
        other => {
            if args.coeffs.is_some() {
                return Err(CliError::Usage(
                    "--coeffs only applies to --f poly".to_string(),
                ));
            }
            Ok(match other {
                IntegrandArg::Const1 => Box::new(|_| 1.0),
                IntegrandArg::Exp => Box::new(f64::exp),
                IntegrandArg::Sinpi => Box::new(|x: f64| (std::f64::consts::PI * x).sin()),
                IntegrandArg::Smoothstep => {
                    Box::new(|x: f64| 1.0 / (1.0 + (-20.0 * (x - 0.5)).exp()))
                }
                IntegrandArg::Poly => unreachable!("handled above"),
            })
        }
    }
}

pub fn cmd_approx(args: &ApproxArgs) -> Result<String, CliError> {
    let params = parse_params(args.alpha, args.beta)?;
    let f = build_integrand(args)?;
    let quad_m = args.quad_m.unwrap_or_else(|| default_quad_m(args.n));
    let fit = lsq_bezier(f, args.n, params, quad_m).map_err(from_core)?;
    match args.format {
        FormatArg::Csv => {
            let mut text = String::from("k,I_k\n");
            for (k, c) in fit.coeffs.iter().enumerate() {
                text.push_str(&csv_line(&[k.to_string(), fmt_f64(*c)]));
            }
            text.push_str(&csv_line(&["error".to_string(), fmt_f64(fit.l2_error)]));
            Ok(text)
        }
        FormatArg::Json => {
            let mut rows: Vec<serde_json::Value> = fit
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| json!({ "k": k, "I_k": c }))
                .collect();
            rows.push(json!({ "error": fit.l2_error }));
            Ok(json_document(rows))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const COEFF_TOL: f64 = 1e-10;

    fn eval_args(n: usize, alpha: f64, beta: f64, x: f64) -> EvalArgs {
        EvalArgs {
            n,
            alpha,
            beta,
            x,
            i: None,
            algo: AlgoArg::Recurrence,
            format: FormatArg::Csv,
        }
    }

    #[test]
    fn eval_renders_the_legendre_degree_one_table() {
        let text = cmd_eval(&eval_args(1, 0.0, 0.0, 0.25)).unwrap();
        assert_eq!(text, "i,value\n0,2.5\n1,-0.5\n");
    }

    #[test]
    fn eval_with_single_index_prints_one_row() {
        let mut args = eval_args(0, 0.0, 0.0, 0.9);
        args.i = Some(0);
        assert_eq!(cmd_eval(&args).unwrap(), "i,value\n0,1\n");
    }

    #[test]
    fn eval_rejects_out_of_domain_weight_exponents() {
        let err = cmd_eval(&eval_args(3, -1.5, 0.0, 0.5)).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn eval_rejects_index_beyond_degree() {
        let mut args = eval_args(2, 0.0, 0.0, 0.5);
        args.i = Some(3);
        assert_eq!(cmd_eval(&args).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn eval_rejects_non_finite_x() {
        let err = cmd_eval(&eval_args(2, 0.0, 0.0, f64::INFINITY)).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn gram_oracle_degree_limit_is_a_usage_error() {
        let mut args = eval_args(15, 0.0, 0.0, 0.5);
        args.algo = AlgoArg::GramOracle;
        assert_eq!(cmd_eval(&args).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn table_with_one_panel_hits_the_endpoints_only() {
        let args = TableArgs {
            n: 2,
            alpha: 0.0,
            beta: 0.0,
            grid_m: 1,
            algo: AlgoArg::Recurrence,
            format: FormatArg::Csv,
        };
        let text = cmd_table(&args).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "x,i,value");
        assert_eq!(lines.len(), 1 + 2 * 3);
        for row in &lines[1..4] {
            assert!(row.starts_with("0,"), "row {row} should sit at x = 0");
        }
        for row in &lines[4..7] {
            assert!(row.starts_with("1,"), "row {row} should sit at x = 1");
        }
    }

    #[test]
    fn bench_rejects_too_few_repeats() {
        let args = BenchArgs {
            n: vec![4],
            alpha: 0.0,
            beta: 0.0,
            grid_m: 10,
            repeats: 1,
        };
        assert_eq!(cmd_bench(&args).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn bench_records_report_both_methods_in_agreement() {
        let params = WeightParams::new(0.0, 0.0).unwrap();
        let records = bench_records(&[3], params, 8, 3);
        assert_eq!(records.len(), 2);
        assert_eq!(records[0].method, "elevation");
        assert_eq!(records[1].method, "recurrence");
        for r in &records {
            assert!(r.wall_seconds > 0.0);
            assert!(r.max_cross_dev <= 1e-8, "cross dev {}", r.max_cross_dev);
        }
    }

    #[test]
    fn median_takes_the_upper_middle_sample() {
        assert_eq!(median(vec![3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(vec![4.0, 1.0, 3.0, 2.0]), 3.0);
    }

    #[test]
    fn lemma_suite_passes_at_small_degree() {
        let sets = [WeightParams::new(0.0, 0.0).unwrap()];
        let rows = check_rows(SuiteArg::Lemma, 4, &sets);
        assert_eq!(rows.len(), 1);
        assert!(rows[0].passes(), "worst {}", rows[0].worst);
    }

    #[test]
    fn check_report_has_one_line_per_identity() {
        let args = CheckArgs {
            suite: SuiteArg::Recurrence,
            n_max: 3,
            alpha: Some(-0.5),
            beta: Some(-0.5),
        };
        let (text, failing) = cmd_check(&args).unwrap();
        assert_eq!(failing, 0, "report:\n{text}");
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "identity,worst,tolerance,status");
        assert_eq!(lines.len(), 5);
        for row in &lines[1..] {
            assert!(row.ends_with(",pass"), "row {row}");
        }
    }

    #[test]
    fn approx_constant_has_unit_coefficients() {
        let args = ApproxArgs {
            f: IntegrandArg::Const1,
            coeffs: None,
            n: 3,
            alpha: 0.0,
            beta: 0.0,
            quad_m: None,
            format: FormatArg::Csv,
        };
        let text = cmd_approx(&args).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "k,I_k");
        assert_eq!(lines.len(), 6);
        for row in &lines[1..5] {
            let value: f64 = row.split(',').nth(1).unwrap().parse().unwrap();
            assert!((value - 1.0).abs() <= COEFF_TOL, "row {row}");
        }
        assert!(lines[5].starts_with("error,"));
    }

    #[test]
    fn approx_poly_requires_coefficients() {
        let args = ApproxArgs {
            f: IntegrandArg::Poly,
            coeffs: None,
            n: 2,
            alpha: 0.0,
            beta: 0.0,
            quad_m: None,
            format: FormatArg::Csv,
        };
        assert_eq!(cmd_approx(&args).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn approx_rejects_coefficients_for_other_integrands() {
        let args = ApproxArgs {
            f: IntegrandArg::Exp,
            coeffs: Some(vec![1.0]),
            n: 2,
            alpha: 0.0,
            beta: 0.0,
            quad_m: None,
            format: FormatArg::Csv,
        };
        assert_eq!(cmd_approx(&args).unwrap_err().exit_code(), 2);
    }
}
