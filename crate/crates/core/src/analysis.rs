//! Identity verification ledger and formula cost profiling.
//!
//! # Cost model
//!
//! A formula's cost for one coefficient `c_{k,t}` is measured by evaluating
//! it with every special number expanded into an explicit finite sum, with
//! no memoization, and counting:
//!
//! * `power_evals`: calls to a scalar power `b^e` (`e >= 0`)
//! * `total_terms`: binomial-coefficient evaluations
//!
//! Prefactors standing outside every summation of the formula (the `m^k`,
//! `C(k+1, t)`, `1/(k+1)!` scalars) are not counted. Everything evaluated
//! inside a summation body is counted once per evaluation, including the
//! prefactors of an expanded special number. Factorials and signs are free.
//!
//! Expansion rules:
//!
//! | number          | expanded as                                                    |
//! |-----------------|----------------------------------------------------------------|
//! | `s(k, j)`       | `sum_t sum_q (-1)^q/t! C(k+t-1,k+t-j) C(2k-j,k-t-j) C(t,q) q^(k-j+t)` |
//! | `S(k, j)`       | `(1/j!) sum_i (-1)^(j-i) C(j,i) i^k`                            |
//! | `W_{m,r}(k, j)` | `1/(m^j j!) sum_i (-1)^(j-i) C(j,i) (m i + r)^k`               |
//! | `A_{m,r}(k, j)` | `sum_i (-1)^i C(k+1,i) [m (j-i) + r]^k`                         |
//! | `B_d(x)`        | `sum_j sum_i (-1)^i/(j+1) C(j,i) (i + x)^d`                     |
//!
//! This is one reasonable way to make "number of summation layers" concrete.
//! It is a measurement, not a minimality argument.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bernoulli::{
    bernoulli_number, bernoulli_number_recurrence, bernoulli_number_stirling, bernoulli_poly_coeffs_binomial,
    bernoulli_poly_coeffs_stirling, bernoulli_poly_eval, eval_ascending,
};
use crate::error::{domain, Result};
use crate::exact::{binomial, binomial_int, factorial, int, pow, pow_int, ratio, sign, Rational};
use crate::power_sum::{
    direct_sum, eval_binomial_form, eval_poly, top_coefficients, whitney_numerator, BinomialForm, Method,
    PowerSumPolynomial, PowerSumSpec,
};
use crate::special::{r_stirling2, r_whitney, stirling1, stirling1_explicit, stirling2};

/// Largest `n` at which polynomial and binomial-form evaluations are
/// compared against direct summation.
pub const ORACLE_N_MAX: u64 = 30;

/// Rational sample points for identities in a free variable `x`.
pub fn sample_points() -> Vec<Rational> {
    [
        (0, 1),
        (1, 1),
        (-1, 1),
        (1, 2),
        (1, 3),
        (-2, 5),
        (7, 4),
        (3, 1),
        (-11, 6),
        (5, 7),
    ]
    .into_iter()
    .map(|(p, q)| ratio(p, q))
    .collect()
}

/// One parameter point where an identity did not hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub params: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of checking one identity over a parameter grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity_id: String,
    pub parameter_grid: String,
    pub checked: usize,
    pub failures: Vec<Failure>,
}

impl IdentityReport {
    fn new(id: &str, grid: String) -> Self {
        IdentityReport {
            identity_id: id.to_string(),
            parameter_grid: grid,
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn check<T: PartialEq + fmt::Display>(&mut self, params: impl FnOnce() -> String, lhs: T, rhs: T) {
        self.checked += 1;
        if lhs != rhs {
            self.failures.push(Failure {
                params: params(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    fn check_vec(&mut self, params: impl FnOnce() -> String, lhs: &[Rational], rhs: &[Rational]) {
        self.check(params, join(lhs), join(rhs));
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {} checked={} failures={} grid=[{}]",
            self.identity_id,
            self.checked,
            self.failures.len(),
            self.parameter_grid
        )
    }
}

fn join(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

/// Runs every identity and cross-formula equality over the given grid.
///
/// The power-sum identities use `k <= max_k` and the `m`, `r` sets. The
/// special-number identities run over their own standard ranges (e.g.
/// Bernoulli numbers up to index 30), extended when `max_k` is larger.
pub fn identity_suite(max_k: u32, m_set: &[u32], r_set: &[u32]) -> Result<Vec<IdentityReport>> {
    if m_set.contains(&0) {
        return Err(domain("m_set entries must be >= 1"));
    }
    let specs: Vec<PowerSumSpec> = (0..=max_k)
        .flat_map(|k| {
            m_set
                .iter()
                .flat_map(move |&m| r_set.iter().map(move |&r| PowerSumSpec::new(k, m, r)))
        })
        .collect::<Result<_>>()?;
    let grid = format!("k<={max_k}, m in {m_set:?}, r in {r_set:?}");

    let jobs: Vec<Box<dyn Fn() -> IdentityReport + Send + Sync + '_>> = vec![
        Box::new(|| five_way_agreement(&specs, &grid)),
        Box::new(|| oracle_eval_poly(&specs, &grid)),
        Box::new(|| oracle_binomial_forms(&specs, &grid)),
        Box::new(|| top_coefficient_agreement(&specs, &grid)),
        Box::new(|| sum_rule(&specs, &grid)),
        Box::new(|| bernoulli_sum_at_offset(&specs, &grid)),
        Box::new(|| leading_coefficient(&specs, &grid)),
        Box::new(|| whitney_integrality(&specs, &grid)),
        Box::new(|| bernoulli_explicit_vs_recurrence(max_k.max(30))),
        Box::new(|| bernoulli_odd_vanish(max_k.max(29))),
        Box::new(|| bernoulli_stirling_form(max_k.max(20))),
        Box::new(|| bernoulli_reflection(max_k.max(20))),
        Box::new(|| stirling_coeffs_vs_eval(max_k.max(12))),
        Box::new(|| stirling_coeffs_vs_binomial(max_k.max(12))),
        Box::new(|| bernoulli_stirling_at_one(max_k.max(12))),
        Box::new(|| coefficient_identity(max_k.max(12))),
        Box::new(|| gould_alternative(max_k.max(12))),
        Box::new(|| binomial_bernoulli_sum(max_k.max(12))),
        Box::new(|| whitney_bernoulli(max_k.max(10), m_set, r_set)),
        Box::new(|| r_stirling_bernoulli(max_k.max(10), r_set.iter().copied().max().unwrap_or(0).max(3))),
        Box::new(|| stirling1_explicit_vs_recurrence(max_k.max(10))),
    ];

    // Each identity is pure and independent.
    let reports = std::thread::scope(|scope| {
        let handles: Vec<_> = jobs.iter().map(|job| scope.spawn(job)).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("identity check panicked"))
            .collect()
    });
    Ok(reports)
}

fn five_way_agreement(specs: &[PowerSumSpec], grid: &str) -> IdentityReport {
    let mut rep = IdentityReport::new("five_way_coefficient_agreement", grid.to_string());
    for &spec in specs {
        let reference = Method::Simple.coeffs(spec);
        for method in &Method::ALL[1..] {
            let other = method.coeffs(spec);
            rep.check_vec(
                || format!("{spec:?} simple vs {method}"),
                reference.coeffs(),
                other.coeffs(),
            );
        }
    }
    rep
}

fn oracle_eval_poly(specs: &[PowerSumSpec], grid: &str) -> IdentityReport {
    let mut rep = IdentityReport::new("eval_poly_equals_direct_sum", format!("{grid}, n<={ORACLE_N_MAX}"));
    for &spec in specs {
        let polys: Vec<PowerSumPolynomial> = Method::ALL.iter().map(|m| m.coeffs(spec)).collect();
        let mut oracle = Rational::zero();
        for n in 1..=ORACLE_N_MAX {
            oracle += int(pow_int(&(BigInt::from(n - 1) * spec.m() + spec.r()), spec.k()));
            for (poly, method) in polys.iter().zip(Method::ALL) {
                rep.check(
                    || format!("{spec:?} n={n} {method}"),
                    eval_poly(poly, n),
                    oracle.clone(),
                );
            }
        }
    }
    rep
}

fn oracle_binomial_forms(specs: &[PowerSumSpec], grid: &str) -> IdentityReport {
    let mut rep = IdentityReport::new("binomial_forms_equal_direct_sum", format!("{grid}, n<={ORACLE_N_MAX}"));
    for &spec in specs {
        for n in 1..=ORACLE_N_MAX {
            let oracle = direct_sum(spec, n).expect("n >= 1");
            for form in BinomialForm::ALL {
                let value = eval_binomial_form(spec, n, form).expect("n >= 1");
                rep.check(|| format!("{spec:?} n={n} {}", form.name()), value, oracle.clone());
            }
        }
    }
    rep
}

fn top_coefficient_agreement(specs: &[PowerSumSpec], grid: &str) -> IdentityReport {
    let mut rep = IdentityReport::new("top_coefficients_closed_form", grid.to_string());
    for &spec in specs {
        let poly = Method::Simple.coeffs(spec);
        for depth in 0..=spec.k().min(4) {
            let closed = top_coefficients(spec, depth).expect("k >= depth");
            let t = spec.k() + 1 - depth;
            rep.check(
                || format!("{spec:?} depth={depth}"),
                closed,
                poly.coeff(t).cloned().unwrap_or_default(),
            );
        }
    }
    rep
}

fn sum_rule(specs: &[PowerSumSpec], grid: &str) -> IdentityReport {
    let mut rep = IdentityReport::new("coefficient_sum_is_r_pow_k", grid.to_string());
    for &spec in specs {
        for method in Method::ALL {
            let total: Rational = method.coeffs(spec).coeffs().iter().sum();
            rep.check(|| format!("{spec:?} {method}"), total, pow(&int(spec.r()), spec.k()));
        }
    }
    rep
}

fn bernoulli_sum_at_offset(specs: &[PowerSumSpec], grid: &str) -> IdentityReport {
    let mut rep = IdentityReport::new("bernoulli_binomial_sum_at_r_over_m", grid.to_string());
    for &spec in specs {
        let x = spec.offset();
        let k = spec.k();
        rep.check(|| format!("{spec:?}"), binomial_bernoulli_lhs(k, &x), pow(&x, k));
    }
    rep
}

fn binomial_bernoulli_lhs(k: u32, x: &Rational) -> Rational {
    let sum: Rational = (0..=k)
        .map(|j| int(binomial_int(u64::from(k) + 1, j.into())) * bernoulli_poly_eval(j, x))
        .sum();
    sum / int(k + 1)
}

fn leading_coefficient(specs: &[PowerSumSpec], grid: &str) -> IdentityReport {
    let mut rep = IdentityReport::new("leading_coefficient_nonzero", grid.to_string());
    for &spec in specs {
        let poly = Method::Simple.coeffs(spec);
        let lead = poly.coeff(spec.k() + 1).cloned().unwrap_or_default();
        let expected = pow(&int(spec.m()), spec.k()) / int(spec.k() + 1);
        rep.check(|| format!("{spec:?} nonzero"), lead.is_zero(), false);
        rep.check(|| format!("{spec:?}"), lead, expected);
    }
    rep
}

fn whitney_integrality(specs: &[PowerSumSpec], grid: &str) -> IdentityReport {
    // m^j j! W is an integer by construction; the interesting observation is
    // whether W itself is, which depends on (m, r). Both are recorded.
    let mut rep = IdentityReport::new("whitney_scaled_integral", grid.to_string());
    for &spec in specs {
        for j in 0..=spec.k() {
            let w = r_whitney(spec.k(), j, spec.m(), spec.r()).expect("m >= 1");
            let scaled = w * int(pow_int(&BigInt::from(spec.m()), j) * factorial(j));
            rep.check(
                || format!("{spec:?} j={j}"),
                scaled.clone(),
                int(whitney_numerator(spec, j)),
            );
            rep.check(|| format!("{spec:?} j={j} integral"), scaled.is_integer(), true);
        }
    }
    rep
}

fn bernoulli_explicit_vs_recurrence(kmax: u32) -> IdentityReport {
    let mut rep = IdentityReport::new("bernoulli_explicit_vs_recurrence", format!("k<={kmax}"));
    for k in 0..=kmax {
        rep.check(|| format!("k={k}"), bernoulli_number(k), bernoulli_number_recurrence(k));
    }
    rep.check(|| "k=12".into(), bernoulli_number(12), ratio(-691, 2730));
    rep
}

fn bernoulli_odd_vanish(kmax: u32) -> IdentityReport {
    let mut rep = IdentityReport::new("bernoulli_odd_vanish", format!("3<=2i+1<={kmax}"));
    for k in (3..=kmax).step_by(2) {
        rep.check(|| format!("k={k}"), bernoulli_number(k), Rational::zero());
    }
    rep
}

fn bernoulli_stirling_form(kmax: u32) -> IdentityReport {
    let mut rep = IdentityReport::new("bernoulli_stirling2_form", format!("k<={kmax}"));
    for k in 0..=kmax {
        rep.check(|| format!("k={k}"), bernoulli_number_stirling(k), bernoulli_number(k));
    }
    rep
}

fn bernoulli_reflection(kmax: u32) -> IdentityReport {
    let mut rep = IdentityReport::new("bernoulli_reflection_at_one", format!("k<={kmax}"));
    for k in 0..=kmax {
        rep.check(
            || format!("k={k}"),
            bernoulli_poly_eval(k, &Rational::one()),
            bernoulli_number(k) * int(sign(k)),
        );
    }
    rep
}

fn stirling_coeffs_vs_eval(kmax: u32) -> IdentityReport {
    let points = sample_points();
    let mut rep = IdentityReport::new(
        "bernoulli_stirling_coeffs_vs_eval",
        format!("k<={kmax}, {} sample x", points.len()),
    );
    for k in 0..=kmax {
        let coeffs = bernoulli_poly_coeffs_stirling(k);
        for x in &points {
            rep.check(
                || format!("k={k} x={x}"),
                eval_ascending(&coeffs, x),
                bernoulli_poly_eval(k, x),
            );
        }
    }
    rep
}

fn stirling_coeffs_vs_binomial(kmax: u32) -> IdentityReport {
    let mut rep = IdentityReport::new("bernoulli_stirling_coeffs_vs_binomial", format!("k<={kmax}"));
    for k in 0..=kmax {
        rep.check_vec(
            || format!("k={k}"),
            &bernoulli_poly_coeffs_stirling(k),
            &bernoulli_poly_coeffs_binomial(k),
        );
    }
    rep
}

fn bernoulli_stirling_at_one(kmax: u32) -> IdentityReport {
    let mut rep = IdentityReport::new("bernoulli_stirling_double_sum_at_one", format!("k<={kmax}"));
    for k in 0..=kmax {
        let total: Rational = bernoulli_poly_coeffs_stirling(k).iter().sum();
        rep.check(|| format!("k={k}"), total * int(sign(k)), bernoulli_number(k));
    }
    rep
}

fn coefficient_identity(kmax: u32) -> IdentityReport {
    let mut rep = IdentityReport::new("binomial_bernoulli_coefficient_identity", format!("0<=j<=k<={kmax}"));
    for k in 0..=kmax {
        for j in 0..=k {
            let lhs = int(binomial_int(k.into(), j.into())) * bernoulli_number(k - j);
            let sum: Rational = (j..=k)
                .map(|i| int(stirling1(i + 1, j + 1) * stirling2(k, i)) / int(i + 1))
                .sum();
            rep.check(|| format!("k={k} j={j}"), lhs, sum * int(j + 1));
        }
    }
    rep
}

fn gould_alternative(kmax: u32) -> IdentityReport {
    let kmax = kmax.max(1);
    let mut rep = IdentityReport::new("gould_alternative_coefficient_identity", format!("1<=j<=k<={kmax}"));
    for k in 1..=kmax {
        for j in 1..=k {
            let lhs = int(binomial_int(k.into(), j.into())) * bernoulli_number(k - j);
            let sum: Rational = (j..=k)
                .map(|i| int(stirling1(i, j) * stirling2(k - 1, i - 1)) / int(i))
                .sum();
            rep.check(|| format!("k={k} j={j}"), lhs, sum * int(k));
        }
    }
    rep
}

fn binomial_bernoulli_sum(kmax: u32) -> IdentityReport {
    let points = sample_points();
    let mut rep = IdentityReport::new(
        "bernoulli_binomial_sum_is_power",
        format!("k<={kmax}, {} sample x", points.len()),
    );
    for k in 0..=kmax {
        for x in &points {
            rep.check(|| format!("k={k} x={x}"), binomial_bernoulli_lhs(k, x), pow(x, k));
        }
    }
    rep
}

fn whitney_bernoulli(kmax: u32, m_set: &[u32], r_set: &[u32]) -> IdentityReport {
    let mut rep = IdentityReport::new(
        "bernoulli_at_r_over_m_via_whitney",
        format!("k<={kmax}, m in {m_set:?}, r in {r_set:?}"),
    );
    for &m in m_set {
        for &r in r_set {
            for k in 0..=kmax {
                let sum: Rational = (0..=k)
                    .map(|j| {
                        let w = r_whitney(k, j, m, r).expect("m >= 1");
                        int(factorial(j) * sign(j)) * w / int(j + 1) / int(pow_int(&BigInt::from(m), k - j))
                    })
                    .sum();
                rep.check(
                    || format!("k={k} m={m} r={r}"),
                    bernoulli_poly_eval(k, &ratio(r, m)),
                    sum,
                );
            }
        }
    }
    rep
}

fn r_stirling_bernoulli(kmax: u32, rmax: u32) -> IdentityReport {
    let mut rep = IdentityReport::new("bernoulli_at_r_via_r_stirling", format!("k<={kmax}, r<={rmax}"));
    for r in 0..=rmax {
        for k in 0..=kmax {
            let sum: Rational = (0..=k)
                .map(|j| {
                    let s = r_stirling2(k, j, r).expect("integral by construction");
                    int(factorial(j) * s * sign(j)) / int(j + 1)
                })
                .sum();
            rep.check(|| format!("k={k} r={r}"), bernoulli_poly_eval(k, &int(r)), sum);
        }
    }
    rep
}

fn stirling1_explicit_vs_recurrence(kmax: u32) -> IdentityReport {
    let mut rep = IdentityReport::new("stirling1_explicit_vs_recurrence", format!("0<=j<=k<={kmax}"));
    for k in 0..=kmax {
        for j in 0..=k {
            let explicit = stirling1_explicit(k, j)
                .map(|v| v.to_string())
                .unwrap_or_else(|e| e.to_string());
            rep.check(|| format!("k={k} j={j}"), explicit, stirling1(k, j).to_string());
        }
    }
    rep
}

/// Formulas compared by the cost profiler, in tie-break order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormulaId {
    /// Double sum of binomials and powers of `i + r/m`.
    Simple6,
    /// The same double sum regrouped through r-Whitney numbers.
    Whitney7,
    /// Double sum over `s(i,j) S(k,i-1)`.
    Griffiths1,
    /// Single sum over `W_{m,r}(k,j) s(j+1,t)`.
    Bazso2,
    /// Double sum over `A_{m,r}(k,k-j) s(k+1,s)`.
    Ramirez3,
    /// `C(k+1,t) B_{k+1-t}(r/m)` with the Bernoulli polynomial expanded.
    Bernoulli4,
}

impl FormulaId {
    pub const ALL: [FormulaId; 6] = [
        FormulaId::Simple6,
        FormulaId::Whitney7,
        FormulaId::Griffiths1,
        FormulaId::Bazso2,
        FormulaId::Ramirez3,
        FormulaId::Bernoulli4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FormulaId::Simple6 => "Simple6",
            FormulaId::Whitney7 => "Whitney7",
            FormulaId::Griffiths1 => "Griffiths1",
            FormulaId::Bazso2 => "Bazso2",
            FormulaId::Ramirez3 => "Ramirez3",
            FormulaId::Bernoulli4 => "Bernoulli4",
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Work done by one formula for one coefficient under full expansion.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CostReport {
    pub formula_id: FormulaId,
    pub k: u32,
    pub t: u32,
    pub power_evals: u64,
    pub total_terms: u64,
}

/// Invocation-local counters. Every expanded evaluation goes through these.
#[derive(Debug, Default)]
struct Tally {
    powers: u64,
    binomials: u64,
}

impl Tally {
    fn pow(&mut self, base: &Rational, e: u32) -> Rational {
        self.powers += 1;
        pow(base, e)
    }

    fn binom(&mut self, x: &Rational, j: u32) -> Rational {
        self.binomials += 1;
        binomial(x, j)
    }

    fn binom_int(&mut self, n: u32, j: u32) -> Rational {
        self.binom(&int(n), j)
    }

    fn stirling1(&mut self, k: u32, j: u32) -> Rational {
        if j > k {
            return Rational::zero();
        }
        let mut total = Rational::zero();
        for t in 0..=(k - j) {
            let outer = self.binom(&int(i64::from(k) + i64::from(t) - 1), k + t - j)
                * self.binom_int(2 * k - j, k - t - j)
                / int(factorial(t));
            for q in 0..=t {
                let term = self.binom_int(t, q) * self.pow(&int(q), k - j + t);
                total += &outer * term * int(sign(q));
            }
        }
        total
    }

    fn stirling2(&mut self, k: u32, j: u32) -> Rational {
        let mut sum = Rational::zero();
        for i in 0..=j {
            sum += self.binom_int(j, i) * self.pow(&int(i), k) * int(sign(j - i));
        }
        sum / int(factorial(j))
    }

    fn whitney(&mut self, k: u32, j: u32, m: u32, r: u32) -> Rational {
        let mut sum = Rational::zero();
        for i in 0..=j {
            sum += self.binom_int(j, i) * self.pow(&int(m * i + r), k) * int(sign(j - i));
        }
        sum / (self.pow(&int(m), j) * int(factorial(j)))
    }

    fn a_number(&mut self, k: u32, j: u32, m: u32, r: u32) -> Rational {
        let mut sum = Rational::zero();
        for i in 0..=j {
            sum += self.binom_int(k + 1, i) * self.pow(&int(m * (j - i) + r), k) * int(sign(i));
        }
        sum
    }

    fn bernoulli_poly(&mut self, d: u32, x: &Rational) -> Rational {
        let mut total = Rational::zero();
        for j in 0..=d {
            let mut inner = Rational::zero();
            for i in 0..=j {
                inner += self.binom_int(j, i) * self.pow(&(int(i) + x), d) * int(sign(i));
            }
            total += inner / int(j + 1);
        }
        total
    }
}

/// Fully expanded evaluation of `c_{k,t}` by the given formula. Returns the
/// coefficient and the counters.
fn expanded_coefficient(formula: FormulaId, spec: PowerSumSpec, t: u32) -> (Rational, Tally) {
    let (k, m, r) = (spec.k(), spec.m(), spec.r());
    let x = spec.offset();
    let d = k + 1 - t;
    let lead = int(binomial_int(u64::from(k) + 1, t.into())) / int(k + 1);
    let m_pow = |e: u32| int(pow_int(&BigInt::from(m), e));
    let mut c = Tally::default();
    let value = match formula {
        FormulaId::Simple6 => {
            let mut sum = Rational::zero();
            for j in 0..=d {
                for i in 0..=j {
                    sum += c.binom_int(j, i) * c.pow(&(int(i) + &x), d) * int(sign(i)) / int(j + 1);
                }
            }
            m_pow(k) * lead * sum
        }
        FormulaId::Whitney7 => {
            let mut sum = Rational::zero();
            for j in 0..=d {
                let w = c.whitney(d, j, m, r);
                sum += c.pow(&int(m), j) * int(factorial(j) * sign(j)) * w / int(j + 1);
            }
            m_pow(t - 1) * lead * sum
        }
        FormulaId::Griffiths1 => {
            let mut sum = Rational::zero();
            for j in t..=k + 1 {
                for i in j..=k + 1 {
                    let w = c.pow(&x, j - t) * c.binom_int(j, t);
                    sum += w * c.stirling1(i, j) * c.stirling2(k, i - 1) / int(i);
                }
            }
            m_pow(k) * sum
        }
        FormulaId::Bazso2 => {
            let mut sum = Rational::zero();
            for j in 0..=k {
                let w = c.pow(&int(m), j) * c.whitney(k, j, m, r) / int(j + 1);
                sum += w * c.stirling1(j + 1, t);
            }
            sum
        }
        FormulaId::Ramirez3 => {
            let mut sum = Rational::zero();
            for j in 0..=k {
                for s in t..=k + 1 {
                    sum += c.a_number(k, k - j, m, r)
                        * c.binom_int(s, t)
                        * c.pow(&int(k - j), s - t)
                        * c.stirling1(k + 1, s);
                }
            }
            sum * int(sign(k + 1 - t)) / int(factorial(k + 1))
        }
        FormulaId::Bernoulli4 => m_pow(k) * lead * c.bernoulli_poly(d, &x),
    };
    (value, c)
}

fn check_t(k: u32, t: u32) -> Result<()> {
    if t == 0 || t > k + 1 {
        return Err(domain(format!("coefficient index t = {t} outside 1..={}", k + 1)));
    }
    Ok(())
}

/// The profiling spec: the counts do not depend on `m` or `r`, so a fixed
/// representative with `m = 2`, `r = 1` is used.
fn profile_spec(k: u32) -> PowerSumSpec {
    PowerSumSpec::new(k, 2, 1).expect("m = 2")
}

/// Instrumented cost of computing `c_{k,t}` by `formula`.
pub fn cost_profile(formula: FormulaId, k: u32, t: u32) -> Result<CostReport> {
    check_t(k, t)?;
    let (_, tally) = expanded_coefficient(formula, profile_spec(k), t);
    Ok(CostReport {
        formula_id: formula,
        k,
        t,
        power_evals: tally.powers,
        total_terms: tally.binomials,
    })
}

/// Fully expanded coefficient value, for checking that the instrumented
/// evaluation computes the same number as the pipelines.
pub fn expanded_value(formula: FormulaId, spec: PowerSumSpec, t: u32) -> Result<Rational> {
    check_t(spec.k(), t)?;
    Ok(expanded_coefficient(formula, spec, t).0)
}

/// All formulas profiled at `(k, t)`, cheapest first; ties keep
/// [`FormulaId`] order.
pub fn compare_costs(k: u32, t: u32) -> Result<Vec<CostReport>> {
    let mut reports = FormulaId::ALL
        .iter()
        .map(|&f| cost_profile(f, k, t))
        .collect::<Result<Vec<_>>>()?;
    reports.sort_by_key(|r| (r.power_evals, r.formula_id));
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_count_examples() {
        assert_eq!(cost_profile(FormulaId::Simple6, 2, 1).unwrap().power_evals, 6);
        for k in 0..8 {
            assert_eq!(cost_profile(FormulaId::Simple6, k, k + 1).unwrap().power_evals, 1);
        }
        assert!(cost_profile(FormulaId::Griffiths1, 2, 1).unwrap().power_evals > 6);
    }

    #[test]
    fn t_range_enforced() {
        assert!(cost_profile(FormulaId::Simple6, 3, 0).is_err());
        assert!(cost_profile(FormulaId::Simple6, 3, 5).is_err());
        assert!(compare_costs(3, 9).is_err());
    }

    #[test]
    fn expanded_values_match_pipelines() {
        for k in 0..=6 {
            for (m, r) in [(1, 0), (2, 1), (3, 5)] {
                let spec = PowerSumSpec::new(k, m, r).unwrap();
                let poly = Method::Simple.coeffs(spec);
                for t in 1..=k + 1 {
                    for f in FormulaId::ALL {
                        assert_eq!(
                            &expanded_value(f, spec, t).unwrap(),
                            poly.coeff(t).unwrap(),
                            "{f} {spec:?} t={t}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn compare_orders_by_count() {
        let reports = compare_costs(5, 6).unwrap();
        assert_eq!(reports[0].formula_id, FormulaId::Simple6);
        assert_eq!(reports[0].power_evals, 1);
        for w in reports.windows(2) {
            assert!((w[0].power_evals, w[0].formula_id) <= (w[1].power_evals, w[1].formula_id));
        }
        for r in compare_costs(0, 1).unwrap() {
            assert!(r.power_evals >= 1);
        }
    }

    #[test]
    fn small_suite_passes() {
        let reports = identity_suite(4, &[1], &[0]).unwrap();
        for r in &reports {
            assert!(r.passed(), "{r} {:?}", r.failures);
            assert!(r.checked >= 1, "{r}");
        }
        assert!(identity_suite(2, &[0], &[0]).is_err());
    }
}
