//! End-to-end behavior tests that exercise the compiled `dualbern` binary:
//! golden outputs, exit codes, format equivalence, determinism, and
//! round-tripping of CSV values.

use dual_bernstein::dualbern::eval_all_recurrence;
use dual_bernstein::WeightParams;
use std::process::{Command, Output};

const COEFF_TOL: f64 = 1e-10;

fn dualbern(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dualbern"))
        .args(args)
        .output()
        .expect("the dualbern binary should spawn")
}

fn stdout_text(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout should be UTF-8")
}

fn assert_exit(out: &Output, code: i32) {
    assert_eq!(
        out.status.code(),
        Some(code),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn eval_prints_the_legendre_degree_one_table() {
    let out = dualbern(&["eval", "--n", "1", "--alpha", "0", "--beta", "0", "--x", "0.25"]);
    assert_exit(&out, 0);
    assert_eq!(stdout_text(&out), "i,value\n0,2.5\n1,-0.5\n");
}

#[test]
fn eval_single_index_prints_one_row() {
    let out = dualbern(&[
        "eval", "--n", "0", "--alpha", "0", "--beta", "0", "--x", "0.9", "--i", "0",
    ]);
    assert_exit(&out, 0);
    assert_eq!(stdout_text(&out), "i,value\n0,1\n");
}

#[test]
fn eval_rejects_weight_exponent_at_most_minus_one() {
    let out = dualbern(&["eval", "--n", "3", "--alpha", "-1.5", "--beta", "0", "--x", "0.5"]);
    assert_exit(&out, 2);
}

#[test]
fn eval_rejects_missing_required_flags() {
    let out = dualbern(&["eval", "--n", "3", "--alpha", "0", "--beta", "0"]);
    assert_exit(&out, 2);
}

#[test]
fn eval_json_carries_the_same_numbers_as_csv() {
    let flags = ["--n", "4", "--alpha", "-0.33", "--beta", "5.66", "--x", "0.37"];
    let csv_out = dualbern(&[&["eval"], &flags[..]].concat());
    let json_out = dualbern(&[&["eval"], &flags[..], &["--format", "json"]].concat());
    assert_exit(&csv_out, 0);
    assert_exit(&json_out, 0);

    let csv_values: Vec<f64> = stdout_text(&csv_out)
        .lines()
        .skip(1)
        .map(|row| row.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    let parsed: serde_json::Value = serde_json::from_str(&stdout_text(&json_out)).unwrap();
    let json_values: Vec<f64> = parsed
        .as_array()
        .unwrap()
        .iter()
        .map(|obj| obj["value"].as_f64().unwrap())
        .collect();
    assert_eq!(csv_values, json_values);
    assert_eq!(csv_values.len(), 5);
}

#[test]
fn table_with_one_panel_emits_endpoint_rows_only() {
    let out = dualbern(&[
        "table", "--n", "2", "--alpha", "0", "--beta", "0", "--grid-m", "1",
    ]);
    assert_exit(&out, 0);
    let text = stdout_text(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "x,i,value");
    assert_eq!(lines.len(), 7);
    assert!(lines[1..4].iter().all(|row| row.starts_with("0,")));
    assert!(lines[4..7].iter().all(|row| row.starts_with("1,")));
}

#[test]
fn table_csv_round_trips_to_the_in_memory_values() {
    let out = dualbern(&[
        "table", "--n", "4", "--alpha", "-0.33", "--beta", "5.66", "--grid-m", "7",
    ]);
    assert_exit(&out, 0);
    let text = stdout_text(&out);

    let params = WeightParams::new(-0.33, 5.66).unwrap();
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let mut rows = 0usize;
    for record in reader.records() {
        let record = record.unwrap();
        let x: f64 = record[0].parse().unwrap();
        let i: usize = record[1].parse().unwrap();
        let value: f64 = record[2].parse().unwrap();
        let table = eval_all_recurrence(4, params, x);
        assert_eq!(value, table.values[i], "row x = {x}, i = {i}");
        rows += 1;
    }
    assert_eq!(rows, 8 * 5);
}

#[test]
fn table_json_and_csv_carry_identical_numbers() {
    let flags = ["--n", "3", "--alpha", "-0.5", "--beta", "-0.5", "--grid-m", "5"];
    let csv_out = dualbern(&[&["table"], &flags[..]].concat());
    let json_out = dualbern(&[&["table"], &flags[..], &["--format", "json"]].concat());
    assert_exit(&csv_out, 0);
    assert_exit(&json_out, 0);

    let csv_rows: Vec<(f64, usize, f64)> = stdout_text(&csv_out)
        .lines()
        .skip(1)
        .map(|row| {
            let mut fields = row.split(',');
            (
                fields.next().unwrap().parse().unwrap(),
                fields.next().unwrap().parse().unwrap(),
                fields.next().unwrap().parse().unwrap(),
            )
        })
        .collect();
    let parsed: serde_json::Value = serde_json::from_str(&stdout_text(&json_out)).unwrap();
    let json_rows: Vec<(f64, usize, f64)> = parsed
        .as_array()
        .unwrap()
        .iter()
        .map(|obj| {
            (
                obj["x"].as_f64().unwrap(),
                obj["i"].as_u64().unwrap() as usize,
                obj["value"].as_f64().unwrap(),
            )
        })
        .collect();
    assert_eq!(csv_rows, json_rows);
    assert_eq!(csv_rows.len(), 6 * 4);
}

#[test]
fn table_output_is_byte_deterministic() {
    let flags = [
        "table", "--n", "3", "--alpha", "-0.33", "--beta", "5.66", "--grid-m", "10",
    ];
    let first = dualbern(&flags);
    let second = dualbern(&flags);
    assert_exit(&first, 0);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn bench_is_deterministic_except_for_wall_seconds() {
    let flags = [
        "bench", "--n", "3,5", "--alpha", "0", "--beta", "0", "--grid-m", "8", "--repeats", "3",
    ];
    let first = dualbern(&flags);
    let second = dualbern(&flags);
    assert_exit(&first, 0);
    assert_exit(&second, 0);

    let strip_wall = |text: &str| -> Vec<Vec<String>> {
        text.lines()
            .map(|row| {
                row.split(',')
                    .enumerate()
                    .filter(|(idx, _)| *idx != 4)
                    .map(|(_, field)| field.to_string())
                    .collect()
            })
            .collect()
    };
    let a = stdout_text(&first);
    let b = stdout_text(&second);
    assert_eq!(a.lines().next().unwrap(), "method,n,M,repeats,wall_seconds,max_cross_dev");
    assert_eq!(strip_wall(&a), strip_wall(&b));

    let mut reader = csv::Reader::from_reader(a.as_bytes());
    let mut methods = Vec::new();
    for record in reader.records() {
        let record = record.unwrap();
        methods.push(record[0].to_string());
        let wall: f64 = record[4].parse().unwrap();
        let dev: f64 = record[5].parse().unwrap();
        assert!(wall > 0.0);
        assert!(dev <= 1e-8, "cross deviation {dev}");
    }
    assert_eq!(methods, ["elevation", "recurrence", "elevation", "recurrence"]);
}

#[test]
fn bench_rejects_a_single_repeat() {
    let out = dualbern(&[
        "bench", "--n", "4", "--alpha", "0", "--beta", "0", "--repeats", "1",
    ]);
    assert_exit(&out, 2);
}

#[test]
fn check_lemma_suite_passes_at_degree_eight() {
    let out = dualbern(&["check", "--suite", "lemma", "--n-max", "8"]);
    assert_exit(&out, 0);
    let text = stdout_text(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "identity,worst,tolerance,status");
    assert_eq!(lines.len(), 2);
    assert!(lines[1].starts_with("lemma,"));
    assert!(lines[1].ends_with(",pass"));
}

#[test]
fn check_duality_suite_passes_at_degree_eight() {
    let out = dualbern(&["check", "--suite", "duality", "--n-max", "8"]);
    assert_exit(&out, 0);
    assert!(stdout_text(&out).contains("duality,"));
}

#[test]
fn check_rejects_an_unknown_suite() {
    let out = dualbern(&["check", "--suite", "bogus"]);
    assert_exit(&out, 2);
}

#[test]
fn check_rejects_alpha_without_beta() {
    let out = dualbern(&["check", "--suite", "lemma", "--alpha", "0.5"]);
    assert_exit(&out, 2);
}

#[test]
fn approx_constant_yields_unit_coefficients() {
    let out = dualbern(&["approx", "--f", "const1", "--n", "4", "--alpha", "0", "--beta", "0"]);
    assert_exit(&out, 0);
    let text = stdout_text(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "k,I_k");
    assert_eq!(lines.len(), 7);
    for row in &lines[1..6] {
        let value: f64 = row.split(',').nth(1).unwrap().parse().unwrap();
        assert!((value - 1.0).abs() <= COEFF_TOL, "row {row}");
    }
    let error: f64 = lines[6].strip_prefix("error,").unwrap().parse().unwrap();
    assert!(error <= COEFF_TOL);
}

#[test]
fn approx_reproduces_a_linear_polynomial() {
    let out = dualbern(&[
        "approx", "--f", "poly", "--coeffs", "0,1", "--n", "1", "--alpha", "0", "--beta", "0",
    ]);
    assert_exit(&out, 0);
    let text = stdout_text(&out);
    let values: Vec<f64> = text
        .lines()
        .skip(1)
        .take(2)
        .map(|row| row.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert!(values[0].abs() <= 1e-12, "I_0 = {}", values[0]);
    assert!((values[1] - 1.0).abs() <= 1e-12, "I_1 = {}", values[1]);
}

#[test]
fn approx_smoothstep_emits_a_full_report() {
    let out = dualbern(&[
        "approx", "--f", "smoothstep", "--n", "4", "--alpha", "-0.5", "--beta", "-0.5",
        "--format", "json",
    ]);
    assert_exit(&out, 0);
    let parsed: serde_json::Value = serde_json::from_str(&stdout_text(&out)).unwrap();
    let rows = parsed.as_array().unwrap();
    assert_eq!(rows.len(), 6);
    assert!(rows[5]["error"].as_f64().unwrap() >= 0.0);
}

#[test]
fn approx_rejects_poly_without_coefficients() {
    let out = dualbern(&["approx", "--f", "poly", "--n", "2", "--alpha", "0", "--beta", "0"]);
    assert_exit(&out, 2);
}

#[test]
fn out_flag_writes_the_same_bytes_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let flags = ["table", "--n", "2", "--alpha", "0", "--beta", "0", "--grid-m", "4"];

    let to_stdout = dualbern(&flags);
    assert_exit(&to_stdout, 0);

    let to_file = dualbern(&[&flags[..], &["--out", path.to_str().unwrap()]].concat());
    assert_exit(&to_file, 0);
    assert!(to_file.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), to_stdout.stdout);
}
