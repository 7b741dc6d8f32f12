//! Power sums over arithmetic progressions,
//! `S(n) = r^k + (m+r)^k + ... + ((n-1)m + r)^k`, as polynomials in `n`.
//!
//! Every coefficient route here is computed independently; equality between
//! them is asserted by the verification suite in [`crate::analysis`], never
//! inside a pipeline.
//!
//! Cost note: the Ramirez route divides by `(k+1)!` and all routes use exact
//! big rationals, so running time grows superlinearly in `k`. There is no cap;
//! `k <= 30` is comfortable.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::bernoulli::bernoulli_poly_eval;
use crate::error::{domain, Error, Result};
use crate::exact::{binomial, binomial_int, factorial, int, pow, pow_int, ratio, sign, Rational};
use crate::special::{a_number, r_whitney, stirling1, stirling2, whitney_scaled};

/// The triple `(k, m, r)`: power, common difference, first term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PowerSumSpec {
    k: u32,
    m: u32,
    r: u32,
}

impl PowerSumSpec {
    /// Requires `m >= 1`.
    pub fn new(k: u32, m: u32, r: u32) -> Result<Self> {
        if m == 0 {
            return Err(domain("common difference m must be >= 1"));
        }
        Ok(PowerSumSpec { k, m, r })
    }

    /// Validating constructor for signed inputs (CLI, FFI).
    pub fn from_signed(k: i64, m: i64, r: i64) -> Result<Self> {
        let k = u32::try_from(k).map_err(|_| domain(format!("power k = {k} must be >= 0")))?;
        let m = u32::try_from(m)
            .ok()
            .filter(|&m| m >= 1)
            .ok_or_else(|| domain(format!("common difference m = {m} must be >= 1")))?;
        let r = u32::try_from(r).map_err(|_| domain(format!("first term r = {r} must be >= 0")))?;
        Self::new(k, m, r)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// `r/m`, the shift that appears in the Bernoulli-polynomial routes.
    pub fn offset(&self) -> Rational {
        ratio(self.r, self.m)
    }
}

/// `S(n) = sum_{t=1}^{k+1} c_t n^t`. The constant term is not representable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSumPolynomial {
    spec: PowerSumSpec,
    // coeffs[t - 1] = c_t
    coeffs: Vec<Rational>,
}

impl PowerSumPolynomial {
    /// Builds from `c_1..=c_{k+1}`; the length must be `k + 1`.
    pub fn new(spec: PowerSumSpec, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != spec.k as usize + 1 {
            return Err(domain(format!(
                "expected {} coefficients for k = {}, got {}",
                spec.k + 1,
                spec.k,
                coeffs.len()
            )));
        }
        Ok(PowerSumPolynomial { spec, coeffs })
    }

    fn from_fn(spec: PowerSumSpec, f: impl FnMut(u32) -> Rational) -> Self {
        PowerSumPolynomial {
            spec,
            coeffs: (1..=spec.k + 1).map(f).collect(),
        }
    }

    pub fn spec(&self) -> PowerSumSpec {
        self.spec
    }

    /// `c_1, ..., c_{k+1}`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `c_t` for `1 <= t <= k+1`.
    pub fn coeff(&self, t: u32) -> Option<&Rational> {
        t.checked_sub(1).and_then(|i| self.coeffs.get(i as usize))
    }

    pub fn degree(&self) -> u32 {
        self.spec.k + 1
    }

    /// Horner evaluation at any rational `n`.
    pub fn eval(&self, n: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| (acc + c) * n)
    }
}

/// Which form of the double-sum formula `coeffs_simple` evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SimpleVariant {
    /// Binomial coefficients and powers `(i + r/m)^(k+1-t)` only.
    DoubleSum,
    /// The same sum regrouped through r-Whitney numbers.
    WhitneyForm,
}

/// Coefficient route selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Simple,
    Whitney,
    Griffiths,
    Bazso,
    Ramirez,
    Bernoulli,
}

impl Method {
    pub const ALL: [Method; 6] = [
        Method::Simple,
        Method::Whitney,
        Method::Griffiths,
        Method::Bazso,
        Method::Ramirez,
        Method::Bernoulli,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Simple => "simple",
            Method::Whitney => "whitney",
            Method::Griffiths => "griffiths",
            Method::Bazso => "bazso",
            Method::Ramirez => "ramirez",
            Method::Bernoulli => "bernoulli",
        }
    }

    pub fn coeffs(self, spec: PowerSumSpec) -> PowerSumPolynomial {
        match self {
            Method::Simple => coeffs_simple(spec, SimpleVariant::DoubleSum),
            Method::Whitney => coeffs_simple(spec, SimpleVariant::WhitneyForm),
            Method::Griffiths => coeffs_griffiths(spec),
            Method::Bazso => coeffs_bazso(spec),
            Method::Ramirez => coeffs_ramirez(spec),
            Method::Bernoulli => coeffs_from_bernoulli(spec),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| domain(format!("unknown method '{s}'")))
    }
}

/// Closed binomial-basis forms of `S(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinomialForm {
    /// `m^k sum_j j! S(k,j) [C(n + r/m, j+1) - C(r/m, j+1)]`
    Griffiths,
    /// `sum_j m^j j! W_{m,r}(k,j) C(n, j+1)`
    Bazso,
    /// `sum_j A_{m,r}(k, k-j) C(n+j, k+1)`
    Ramirez,
}

impl BinomialForm {
    pub const ALL: [BinomialForm; 3] = [BinomialForm::Griffiths, BinomialForm::Bazso, BinomialForm::Ramirez];

    pub fn name(self) -> &'static str {
        match self {
            BinomialForm::Griffiths => "griffiths-form",
            BinomialForm::Bazso => "bazso-form",
            BinomialForm::Ramirez => "ramirez-form",
        }
    }
}

impl FromStr for BinomialForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BinomialForm::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| domain(format!("unknown binomial form '{s}'")))
    }
}

fn m_pow(m: u32, e: u32) -> Rational {
    int(pow_int(&BigInt::from(m), e))
}

fn whitney(k: u32, j: u32, m: u32, r: u32) -> Rational {
    // m >= 1 is guaranteed by PowerSumSpec
    r_whitney(k, j, m, r).expect("validated spec")
}

/// Brute-force `sum_{i=0}^{n-1} (i m + r)^k`; the ground truth for every
/// other route.
pub fn direct_sum(spec: PowerSumSpec, n: u64) -> Result<Rational> {
    if n == 0 {
        return Err(domain("number of terms n must be >= 1"));
    }
    let total: BigInt = (0..n)
        .map(|i| pow_int(&(BigInt::from(i) * spec.m + spec.r), spec.k))
        .sum();
    Ok(int(total))
}

/// `c_t` as a double sum of binomials and powers of `i + r/m`, or its
/// r-Whitney regrouping.
pub fn coeffs_simple(spec: PowerSumSpec, variant: SimpleVariant) -> PowerSumPolynomial {
    let PowerSumSpec { k, m, r } = spec;
    let x = spec.offset();
    PowerSumPolynomial::from_fn(spec, |t| {
        let d = k + 1 - t;
        let lead = int(binomial_int(u64::from(k) + 1, t.into())) / int(k + 1);
        match variant {
            SimpleVariant::DoubleSum => {
                let mut sum = Rational::zero();
                for j in 0..=d {
                    let mut inner = Rational::zero();
                    for i in 0..=j {
                        inner += int(binomial_int(j.into(), i.into()) * sign(i)) * pow(&(int(i) + &x), d);
                    }
                    sum += inner / int(j + 1);
                }
                m_pow(m, k) * lead * sum
            }
            SimpleVariant::WhitneyForm => {
                let mut sum = Rational::zero();
                for j in 0..=d {
                    let w = whitney(d, j, m, r);
                    sum += m_pow(m, j) * int(factorial(j) * sign(j)) * w / int(j + 1);
                }
                m_pow(m, t - 1) * lead * sum
            }
        }
    })
}

/// `c_t = m^k sum_{j=t}^{k+1} sum_{i=j}^{k+1} (1/i) (r/m)^(j-t) C(j,t) s(i,j) S(k,i-1)`.
pub fn coeffs_griffiths(spec: PowerSumSpec) -> PowerSumPolynomial {
    let PowerSumSpec { k, m, .. } = spec;
    let x = spec.offset();
    PowerSumPolynomial::from_fn(spec, |t| {
        let mut sum = Rational::zero();
        for j in t..=k + 1 {
            let weight = pow(&x, j - t) * int(binomial_int(j.into(), t.into()));
            for i in j..=k + 1 {
                sum += &weight * int(stirling1(i, j) * stirling2(k, i - 1)) / int(i);
            }
        }
        m_pow(m, k) * sum
    })
}

/// `c_t = sum_{j=0}^{k} m^j W_{m,r}(k,j) / (j+1) s(j+1, t)`.
pub fn coeffs_bazso(spec: PowerSumSpec) -> PowerSumPolynomial {
    let PowerSumSpec { k, m, r } = spec;
    let weights: Vec<Rational> = (0..=k)
        .map(|j| m_pow(m, j) * whitney(k, j, m, r) / int(j + 1))
        .collect();
    PowerSumPolynomial::from_fn(spec, |t| {
        weights
            .iter()
            .zip(0u32..)
            .map(|(w, j)| w * int(stirling1(j + 1, t)))
            .sum()
    })
}

/// `c_t = (-1)^(k+1-t)/(k+1)! sum_{j=0}^{k} sum_{s=t}^{k+1} A(k,k-j) C(s,t) (k-j)^(s-t) s(k+1,s)`.
pub fn coeffs_ramirez(spec: PowerSumSpec) -> PowerSumPolynomial {
    let PowerSumSpec { k, m, r } = spec;
    let a: Vec<BigInt> = (0..=k)
        .map(|j| a_number(k, k - j, m, r).expect("validated spec"))
        .collect();
    let kfact = factorial(k + 1);
    PowerSumPolynomial::from_fn(spec, |t| {
        let mut sum = BigInt::zero();
        for (j, a_j) in (0..=k).zip(&a) {
            let base = BigInt::from(k - j);
            for s in t..=k + 1 {
                sum += a_j * binomial_int(s.into(), t.into()) * pow_int(&base, s - t) * stirling1(k + 1, s);
            }
        }
        Rational::new(sum * sign(k + 1 - t), kfact.clone())
    })
}

/// `c_t = m^k/(k+1) C(k+1, t) B_{k+1-t}(r/m)`.
pub fn coeffs_from_bernoulli(spec: PowerSumSpec) -> PowerSumPolynomial {
    let PowerSumSpec { k, m, .. } = spec;
    let x = spec.offset();
    PowerSumPolynomial::from_fn(spec, |t| {
        m_pow(m, k) * int(binomial_int(u64::from(k) + 1, t.into())) * bernoulli_poly_eval(k + 1 - t, &x) / int(k + 1)
    })
}

/// Closed form for `c_{k, k+1-depth}`, `depth` in `0..=4`, requiring `k >= depth`.
///
/// ```text
/// c_{k,k+1} = m^k/(k+1)
/// c_{k,k}   = m^(k-1) (r - m/2)
/// c_{k,k-1} = 1/12 k m^(k-2) (m^2 - 6mr + 6r^2)
/// c_{k,k-2} = 1/12 k(k-1) m^(k-3) r (m^2 - 3mr + 2r^2)
/// c_{k,k-3} = -1/720 k(k-1)(k-2) m^(k-4) (m^4 - 30m^2r^2 + 60mr^3 - 30r^4)
/// ```
pub fn top_coefficients(spec: PowerSumSpec, depth: u32) -> Result<Rational> {
    let PowerSumSpec { k, m, r } = spec;
    if depth > 4 {
        return Err(domain(format!("depth {depth} outside 0..=4")));
    }
    if k < depth {
        return Err(domain(format!("depth {depth} requires k >= {depth}, got k = {k}")));
    }
    let (mq, rq) = (int(m), int(r));
    let kk = int(k);
    let value = match depth {
        0 => m_pow(m, k) / int(k + 1),
        1 => m_pow(m, k - 1) * (&rq - &mq / int(2)),
        2 => ratio(1, 12) * &kk * m_pow(m, k - 2) * (&mq * &mq - int(6) * &mq * &rq + int(6) * &rq * &rq),
        3 => {
            ratio(1, 12)
                * &kk
                * (&kk - int(1))
                * m_pow(m, k - 3)
                * &rq
                * (&mq * &mq - int(3) * &mq * &rq + int(2) * &rq * &rq)
        }
        _ => {
            // Expanding m^k/(k+1) C(k+1, 4) B_4(r/m) gives a leading minus sign.
            ratio(-1, 720)
                * &kk
                * (&kk - int(1))
                * (&kk - int(2))
                * m_pow(m, k - 4)
                * (pow(&mq, 4) - int(30) * pow(&mq, 2) * pow(&rq, 2) + int(60) * &mq * pow(&rq, 3)
                    - int(30) * pow(&rq, 4))
        }
    };
    Ok(value)
}

/// Evaluates `S(n)` from its coefficient vector.
pub fn eval_poly(poly: &PowerSumPolynomial, n: u64) -> Rational {
    poly.eval(&int(n))
}

/// Evaluates `S(n)` through one of the closed binomial-basis forms.
pub fn eval_binomial_form(spec: PowerSumSpec, n: u64, form: BinomialForm) -> Result<Rational> {
    if n == 0 {
        return Err(domain("number of terms n must be >= 1"));
    }
    let PowerSumSpec { k, m, r } = spec;
    let value = match form {
        BinomialForm::Griffiths => {
            let x = spec.offset();
            let shifted = int(n) + &x;
            let sum: Rational = (0..=k)
                .map(|j| int(factorial(j) * stirling2(k, j)) * (binomial(&shifted, j + 1) - binomial(&x, j + 1)))
                .sum();
            m_pow(m, k) * sum
        }
        BinomialForm::Bazso => {
            let mut sum = Rational::zero();
            for j in 0..=k {
                // m^j j! W_{m,r}(k, j) is the undivided alternating sum.
                let w = whitney(k, j, m, r) * m_pow(m, j) * int(factorial(j));
                sum += w * binomial(&int(n), j + 1);
            }
            sum
        }
        BinomialForm::Ramirez => {
            let mut sum = BigInt::zero();
            for j in 0..=k {
                sum += a_number(k, k - j, m, r)? * binomial_int(n + u64::from(j), u64::from(k) + 1);
            }
            int(sum)
        }
    };
    Ok(value)
}

/// `m^j j! W_{m,r}(k,j)` straight from the alternating sum; exposed for the
/// integrality report.
pub fn whitney_numerator(spec: PowerSumSpec, j: u32) -> BigInt {
    whitney_scaled(spec.k, j, spec.m, spec.r).expect("validated spec")
}
