//! Acceptance criteria AC1..AC10. Each test prints one `PASS`/`FAIL` line
//! (visible with `--nocapture`) and asserts. All comparisons are exact.

use std::process::Command;
use std::time::{Duration, Instant};

use apsum::analysis::{compare_costs, cost_profile, identity_suite, FormulaId};
use apsum::bernoulli::{
    bernoulli_number, bernoulli_number_recurrence, bernoulli_poly_coeffs_binomial, bernoulli_poly_coeffs_stirling,
    bernoulli_poly_eval,
};
use apsum::exact::{binomial_int, factorial, int, pow, ratio, sign, Rational};
use apsum::power_sum::{direct_sum, eval_binomial_form, eval_poly, top_coefficients};
use apsum::special::{r_stirling2, r_whitney, stirling1, stirling1_explicit, stirling2};
use apsum::{BinomialForm, Method, PowerSumSpec};

const K_MAX: u32 = 12;
const M_SET: [u32; 3] = [1, 2, 3];
const R_SET: [u32; 4] = [0, 1, 2, 5];
const N_MAX: u64 = 30;
const TIME_BUDGET: Duration = Duration::from_secs(60);

fn grid() -> Vec<PowerSumSpec> {
    let mut specs = Vec::new();
    for k in 0..=K_MAX {
        for m in M_SET {
            for r in R_SET {
                specs.push(PowerSumSpec::new(k, m, r).unwrap());
            }
        }
    }
    specs
}

/// Collects mismatches; prints the criterion line and fails the test if any.
struct Criterion {
    id: &'static str,
    title: &'static str,
    checked: usize,
    failures: Vec<String>,
    started: Instant,
    budget: Option<Duration>,
}

impl Criterion {
    fn new(id: &'static str, title: &'static str) -> Self {
        Criterion {
            id,
            title,
            checked: 0,
            failures: Vec::new(),
            started: Instant::now(),
            budget: None,
        }
    }

    fn within(mut self, budget: Duration) -> Self {
        self.budget = Some(budget);
        self
    }

    fn expect<T: PartialEq + std::fmt::Debug>(&mut self, what: impl FnOnce() -> String, got: T, want: T) {
        self.checked += 1;
        if got != want {
            self.failures.push(format!("{}: got {got:?}, want {want:?}", what()));
        }
    }

    fn finish(self) {
        let elapsed = self.started.elapsed();
        let mut problems = self.failures;
        if let Some(b) = self.budget {
            if elapsed > b {
                problems.push(format!("took {elapsed:?}, budget {b:?}"));
            }
        }
        let status = if problems.is_empty() { "PASS" } else { "FAIL" };
        println!(
            "{status} {} {} (checked {}, {:.2?})",
            self.id, self.title, self.checked, elapsed
        );
        for p in problems.iter().take(10) {
            println!("    {p}");
        }
        assert!(problems.is_empty(), "{} failed: {} problems", self.id, problems.len());
    }
}

#[test]
fn ac01_five_way_coefficient_agreement() {
    let mut c = Criterion::new("AC1", "coefficient routes agree elementwise").within(TIME_BUDGET);
    for spec in grid() {
        let reference = Method::Simple.coeffs(spec);
        for method in Method::ALL {
            c.expect(
                || format!("{spec:?} {method}"),
                method.coeffs(spec).coeffs().to_vec(),
                reference.coeffs().to_vec(),
            );
        }
    }
    c.finish();
}

#[test]
fn ac02_oracle_equivalence() {
    let mut c = Criterion::new("AC2", "eval_poly and binomial forms equal direct sum, n<=30").within(TIME_BUDGET);
    for spec in grid() {
        let poly = Method::Simple.coeffs(spec);
        for n in 1..=N_MAX {
            let oracle = direct_sum(spec, n).unwrap();
            c.expect(|| format!("{spec:?} n={n} poly"), eval_poly(&poly, n), oracle.clone());
            for form in BinomialForm::ALL {
                c.expect(
                    || format!("{spec:?} n={n} {}", form.name()),
                    eval_binomial_form(spec, n, form).unwrap(),
                    oracle.clone(),
                );
            }
        }
    }
    c.finish();
}

#[test]
fn ac03_top_coefficients() {
    let mut c = Criterion::new("AC3", "closed-form top coefficients match pipelines");
    for spec in grid() {
        for method in [Method::Simple, Method::Griffiths, Method::Bernoulli] {
            let poly = method.coeffs(spec);
            for depth in 0..=spec.k().min(4) {
                let t = spec.k() + 1 - depth;
                c.expect(
                    || format!("{spec:?} {method} depth={depth}"),
                    top_coefficients(spec, depth).unwrap(),
                    poly.coeff(t).unwrap().clone(),
                );
            }
        }
    }
    c.finish();
}

#[test]
fn ac04_bernoulli_integrity() {
    let mut c = Criterion::new("AC4", "Bernoulli explicit vs recurrence, odd zeros, B_12, reflection");
    for k in 0..=30 {
        c.expect(|| format!("B_{k}"), bernoulli_number(k), bernoulli_number_recurrence(k));
    }
    for i in 1..=14 {
        c.expect(
            || format!("B_{}", 2 * i + 1),
            bernoulli_number(2 * i + 1),
            Rational::from_integer(0.into()),
        );
    }
    c.expect(|| "B_12".into(), bernoulli_number(12), ratio(-691, 2730));
    for k in 0..=20 {
        c.expect(
            || format!("B_{k}(1)"),
            bernoulli_poly_eval(k, &int(1)),
            bernoulli_number(k) * int(sign(k)),
        );
    }
    c.finish();
}

#[test]
fn ac05_stirling_bernoulli_coefficient_identities() {
    let mut c = Criterion::new(
        "AC5",
        "Stirling-form B_k(x) coefficients and both binom(k,j)B_{k-j} identities",
    );
    for k in 0..=K_MAX {
        c.expect(
            || format!("k={k} vectors"),
            bernoulli_poly_coeffs_stirling(k),
            bernoulli_poly_coeffs_binomial(k),
        );
        for j in 0..=k {
            let lhs = int(binomial_int(k.into(), j.into())) * bernoulli_number(k - j);
            let rhs: Rational = (j..=k)
                .map(|i| int(stirling1(i + 1, j + 1) * stirling2(k, i)) / int(i + 1))
                .sum::<Rational>()
                * int(j + 1);
            c.expect(|| format!("k={k} j={j} first"), lhs.clone(), rhs);
            if j >= 1 {
                let alt: Rational = (j..=k)
                    .map(|i| int(stirling1(i, j) * stirling2(k - 1, i - 1)) / int(i))
                    .sum::<Rational>()
                    * int(k);
                c.expect(|| format!("k={k} j={j} alternative"), lhs, alt);
            }
        }
    }
    c.finish();
}

#[test]
fn ac06_whitney_and_r_stirling_bernoulli() {
    let mut c = Criterion::new("AC6", "B_k(r/m) via r-Whitney sum; m=1 r-Stirling reduction");
    for m in 1..=3u32 {
        for r in 0..=2u32 {
            for k in 0..=10u32 {
                let sum: Rational = (0..=k)
                    .map(|j| {
                        int(factorial(j) * sign(j)) * r_whitney(k, j, m, r).unwrap() / int(j + 1) / pow(&int(m), k - j)
                    })
                    .sum();
                c.expect(
                    || format!("k={k} m={m} r={r}"),
                    bernoulli_poly_eval(k, &ratio(r, m)),
                    sum,
                );
            }
        }
    }
    for r in 0..=3u32 {
        for k in 0..=10u32 {
            let sum: Rational = (0..=k)
                .map(|j| int(factorial(j) * r_stirling2(k, j, r).unwrap() * sign(j)) / int(j + 1))
                .sum();
            c.expect(
                || format!("k={k} r={r} reduction"),
                bernoulli_poly_eval(k, &int(r)),
                sum,
            );
        }
    }
    c.finish();
}

#[test]
fn ac07_sum_rule_and_bernoulli_sum() {
    let mut c = Criterion::new("AC7", "sum of coefficients is r^k; binomial Bernoulli sum at r/m");
    for spec in grid() {
        let k = spec.k();
        let total: Rational = Method::Simple.coeffs(spec).coeffs().iter().sum();
        c.expect(|| format!("{spec:?} sum"), total, pow(&int(spec.r()), k));
        let x = spec.offset();
        let lhs: Rational = (0..=k)
            .map(|j| int(binomial_int(u64::from(k) + 1, j.into())) * bernoulli_poly_eval(j, &x))
            .sum::<Rational>()
            / int(k + 1);
        c.expect(|| format!("{spec:?} bernoulli sum"), lhs, pow(&x, k));
    }
    c.finish();
}

#[test]
fn ac08_stirling1_explicit() {
    let mut c = Criterion::new("AC8", "explicit s(k,j) equals recurrence, 0<=j<=k<=10");
    for k in 0..=10 {
        for j in 0..=k {
            c.expect(
                || format!("s({k},{j})"),
                stirling1_explicit(k, j).unwrap(),
                stirling1(k, j),
            );
        }
    }
    c.finish();
}

#[test]
fn ac09_cost_profile_laws() {
    let mut c = Criterion::new("AC9", "Simple6 count law, dominance at k=10 t=1, determinism").within(TIME_BUDGET);
    for k in 0..=15u32 {
        for t in 1..=k + 1 {
            let expected = u64::from((k + 2 - t) * (k + 3 - t) / 2);
            c.expect(
                || format!("Simple6 k={k} t={t}"),
                cost_profile(FormulaId::Simple6, k, t).unwrap().power_evals,
                expected,
            );
        }
    }
    let simple = cost_profile(FormulaId::Simple6, 10, 1).unwrap().power_evals;
    for other in [FormulaId::Griffiths1, FormulaId::Bazso2, FormulaId::Ramirez3] {
        let cost = cost_profile(other, 10, 1).unwrap().power_evals;
        c.expect(|| format!("Simple6 ({simple}) < {other} ({cost})"), simple < cost, true);
    }
    let ranking = compare_costs(10, 1).unwrap();
    c.expect(|| "first at k=10 t=1".into(), ranking[0].formula_id, FormulaId::Simple6);
    c.expect(|| "rerun identical".into(), compare_costs(10, 1).unwrap(), ranking);
    c.finish();
}

fn apsum(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_apsum"))
        .args(args)
        .output()
        .expect("run apsum");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn ac10_cli_contract() {
    let mut c = Criterion::new("AC10", "documented CLI invocations and full-grid verify");
    c.expect(
        || "coeffs -k 2 -m 3 -r 1".into(),
        apsum(&["coeffs", "-k", "2", "-m", "3", "-r", "1"]),
        (0, "t=1: -1/2\nt=2: -3/2\nt=3: 3\n".to_string()),
    );
    c.expect(
        || "eval --verify".into(),
        apsum(&["eval", "-k", "2", "-m", "3", "-r", "1", "-n", "4", "--verify"]),
        (0, "166 (oracle: 166, OK)\n".to_string()),
    );
    c.expect(
        || "bernoulli -k 1".into(),
        apsum(&["bernoulli", "-k", "1"]),
        (0, "-1/2\n".to_string()),
    );
    let (code, out) = apsum(&["verify", "--max-k", "12", "-m", "1,2,3", "-r", "0,1,2,5"]);
    c.expect(|| format!("verify exit code\n{out}"), code, 0);
    c.expect(
        || "verify summary".into(),
        out.lines().last().map(str::to_owned),
        Some("21 identities, 0 failed".into()),
    );
    let reports = identity_suite(0, &[1], &[0]).unwrap();
    c.expect(
        || "degenerate grid".into(),
        reports.iter().all(|r| r.passed() && r.checked >= 1),
        true,
    );
    c.finish();
}
