use std::process::{Command, Output};

use apsum::exact::Rational;
use apsum::PowerSumPolynomial;

fn apsum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_apsum"))
        .args(args)
        .output()
        .expect("run apsum")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn json_coefficients_round_trip_through_eval() {
    for (k, m, r) in [("2", "3", "1"), ("5", "2", "0"), ("0", "4", "7"), ("7", "3", "5")] {
        let out = apsum(&["coeffs", "-k", k, "-m", m, "-r", r, "--format", "json"]);
        assert!(out.status.success());
        let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        let coeffs: Vec<Rational> = doc["coeffs"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_str().unwrap().parse().unwrap())
            .collect();
        let spec = apsum::PowerSumSpec::new(k.parse().unwrap(), m.parse().unwrap(), r.parse().unwrap()).unwrap();
        let poly = PowerSumPolynomial::new(spec, coeffs).unwrap();
        for n in 1..=5u64 {
            let eval = apsum(&["eval", "-k", k, "-m", m, "-r", r, "-n", &n.to_string()]);
            let expected: Rational = stdout(&eval).trim().parse().unwrap();
            assert_eq!(apsum::power_sum::eval_poly(&poly, n), expected);
        }
    }
}

#[test]
fn machine_output_is_byte_stable() {
    for args in [
        vec![
            "coeffs", "-k", "9", "-m", "3", "-r", "2", "--method", "all", "--format", "json",
        ],
        vec!["coeffs", "-k", "6", "--format", "csv"],
        vec!["bench", "--k-max", "6"],
        vec!["bernoulli", "-k", "10", "--table", "--format", "json"],
    ] {
        assert_eq!(apsum(&args).stdout, apsum(&args).stdout, "{args:?}");
    }
}

#[test]
fn errors_go_to_stderr_with_exit_1() {
    for args in [
        vec!["nope"],
        vec!["coeffs", "-k", "2", "-m", "-1"],
        vec!["eval", "-k", "2", "-n", "-4"],
        vec!["whitney", "-m", "0", "--k-max", "3"],
        vec!["stirling", "--kind", "third", "--k-max", "3"],
    ] {
        let out = apsum(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn bench_schema() {
    let out = stdout(&apsum(&["bench", "--k-max", "10", "--t", "1"]));
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("formula_id,k,t,power_evals,total_terms"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 11 * 6);
    let k10: Vec<&Vec<&str>> = rows.iter().filter(|r| r[1] == "10").collect();
    assert_eq!(k10[0][0], "Simple6");
    assert_eq!(k10[0][3], "66");
}

#[test]
fn triangle_rows_have_k_plus_one_columns() {
    let out = stdout(&apsum(&["stirling", "--kind", "r-second", "-r", "2", "--k-max", "6"]));
    for (k, line) in out.lines().enumerate() {
        assert_eq!(line.split(',').count(), k + 1);
    }
    let out = stdout(&apsum(&["whitney", "-m", "3", "-r", "1", "--k-max", "5"]));
    assert_eq!(out.lines().count(), 6);
}
