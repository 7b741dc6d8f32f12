//! Bernoulli numbers and polynomials.
//!
//! Convention: `B_1 = -1/2`, i.e. the numbers come from `t e^{xt} / (e^t - 1)`
//! at `x = 0`. Many references use `B_1 = +1/2`; this crate does not.
//!
//! Coefficient vectors are dense, ascending powers, length `k + 1`.

use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{binomial_int, int, pow, ratio, sign, Rational};
use crate::special::{stirling1, stirling2};

/// Memo of `B_k` computed by the explicit double sum.
#[derive(Debug, Default)]
pub struct BernoulliCache {
    numbers: BTreeMap<u32, Rational>,
}

impl BernoulliCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, k: u32) -> Rational {
        self.numbers
            .entry(k)
            .or_insert_with(|| bernoulli_poly_eval(k, &Rational::zero()))
            .clone()
    }

    pub fn len(&self) -> usize {
        self.numbers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.numbers.is_empty()
    }
}

fn shared() -> &'static Mutex<BernoulliCache> {
    static CACHE: OnceLock<Mutex<BernoulliCache>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(BernoulliCache::new()))
}

/// `B_k = sum_{j=0}^{k} sum_{i=0}^{j} (-1)^i / (j+1) C(j, i) i^k`.
pub fn bernoulli_number(k: u32) -> Rational {
    shared().lock().unwrap_or_else(|e| e.into_inner()).get(k)
}

/// `B_k` from `sum_{j=0}^{k} C(k+1, j) B_j = 0`, `B_0 = 1`.
///
/// Shares no code with [`bernoulli_number`]; kept as an oracle.
pub fn bernoulli_number_recurrence(k: u32) -> Rational {
    let mut table: Vec<Rational> = Vec::with_capacity(k as usize + 1);
    table.push(Rational::one());
    for n in 1..=k {
        let acc: Rational = table
            .iter()
            .enumerate()
            .map(|(j, bj)| int(binomial_int(u64::from(n) + 1, j as u64)) * bj)
            .sum();
        table.push(-acc / int(n + 1));
    }
    table.pop().unwrap_or_else(Rational::one)
}

/// `B_k(x) = sum_{j=0}^{k} sum_{i=0}^{j} (-1)^i / (j+1) C(j, i) (i + x)^k`.
pub fn bernoulli_poly_eval(k: u32, x: &Rational) -> Rational {
    let mut total = Rational::zero();
    for j in 0..=k {
        let mut inner = Rational::zero();
        for i in 0..=j {
            let term = pow(&(int(i) + x), k) * int(binomial_int(j.into(), i.into()));
            inner += term * int(sign(i));
        }
        total += inner / int(j + 1);
    }
    total
}

/// Coefficients of `B_k(x)` from the Stirling-number form
/// `[x^j] = sum_{i=j}^{k} (j+1)/(i+1) s(i+1, j+1) S(k, i)`.
pub fn bernoulli_poly_coeffs_stirling(k: u32) -> Vec<Rational> {
    (0..=k)
        .map(|j| {
            (j..=k)
                .map(|i| ratio(j + 1, i + 1) * int(stirling1(i + 1, j + 1) * stirling2(k, i)))
                .sum()
        })
        .collect()
}

/// Coefficients of `B_k(x)` from `sum_j C(k, j) B_{k-j} x^j`.
pub fn bernoulli_poly_coeffs_binomial(k: u32) -> Vec<Rational> {
    (0..=k)
        .map(|j| int(binomial_int(k.into(), j.into())) * bernoulli_number(k - j))
        .collect()
}

/// Horner evaluation of an ascending coefficient vector.
pub fn eval_ascending(coeffs: &[Rational], x: &Rational) -> Rational {
    coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

/// `B_k` as `sum_j (-1)^j j!/(j+1) S(k, j)`.
pub fn bernoulli_number_stirling(k: u32) -> Rational {
    (0..=k)
        .map(|j| {
            let f: BigInt = crate::exact::factorial(j);
            int(f * stirling2(k, j) * sign(j)) / int(j + 1)
        })
        .sum()
}
