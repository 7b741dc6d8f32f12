//! Stirling-family special numbers.
//!
//! The recurrences are the normative implementations; [`stirling1_explicit`]
//! is a second, independent route to the signed first-kind numbers.
//! Indices outside the triangle (`j > k`) evaluate to zero so callers can
//! sum over full index ranges without guards.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{domain, Result};
use crate::exact::{binomial, binomial_int, factorial, int, pow_int, sign, to_integer, Rational};

/// Which recurrence a [`TriangleCache`] fills.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Signed first kind: `s(k+1, j) = s(k, j-1) - k s(k, j)`.
    Stirling1,
    /// Second kind: `S(k+1, j) = j S(k, j) + S(k, j-1)`.
    Stirling2,
}

/// Row-by-row memo of a Stirling triangle. Row `k` holds `j = 0..=k`.
///
/// Rows are only ever appended, so a value once stored never changes.
#[derive(Debug, Clone)]
pub struct TriangleCache {
    family: Family,
    rows: Vec<Vec<BigInt>>,
}

impl TriangleCache {
    pub fn new(family: Family) -> Self {
        TriangleCache {
            family,
            rows: vec![vec![BigInt::one()]],
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Number of rows currently materialized.
    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    fn extend_to(&mut self, k: usize) {
        while self.rows.len() <= k {
            let n = self.rows.len() - 1;
            let prev = &self.rows[n];
            let mut next = vec![BigInt::zero(); n + 2];
            for (j, slot) in next.iter_mut().enumerate() {
                let up_left = if j >= 1 { prev[j - 1].clone() } else { BigInt::zero() };
                let up = prev.get(j).cloned().unwrap_or_default();
                *slot = match self.family {
                    Family::Stirling1 => up_left - up * n,
                    Family::Stirling2 => up_left + up * j,
                };
            }
            self.rows.push(next);
        }
    }

    pub fn get(&mut self, k: u32, j: u32) -> BigInt {
        if j > k {
            return BigInt::zero();
        }
        self.extend_to(k as usize);
        self.rows[k as usize][j as usize].clone()
    }

    /// Row `k` as a vector of length `k + 1`.
    pub fn row(&mut self, k: u32) -> Vec<BigInt> {
        self.extend_to(k as usize);
        self.rows[k as usize].clone()
    }
}

fn shared(family: Family) -> &'static Mutex<TriangleCache> {
    static S1: OnceLock<Mutex<TriangleCache>> = OnceLock::new();
    static S2: OnceLock<Mutex<TriangleCache>> = OnceLock::new();
    let cell = match family {
        Family::Stirling1 => &S1,
        Family::Stirling2 => &S2,
    };
    cell.get_or_init(|| Mutex::new(TriangleCache::new(family)))
}

fn cached(family: Family, k: u32, j: u32) -> BigInt {
    let mut cache = shared(family).lock().unwrap_or_else(|e| e.into_inner());
    cache.get(k, j)
}

/// Signed Stirling number of the first kind `s(k, j)`.
pub fn stirling1(k: u32, j: u32) -> BigInt {
    cached(Family::Stirling1, k, j)
}

/// Stirling number of the second kind `S(k, j)`.
pub fn stirling2(k: u32, j: u32) -> BigInt {
    cached(Family::Stirling2, k, j)
}

/// Row `k` of the requested triangle, `j = 0..=k`.
pub fn triangle_row(family: Family, k: u32) -> Vec<BigInt> {
    let mut cache = shared(family).lock().unwrap_or_else(|e| e.into_inner());
    cache.row(k)
}

/// `s(k, j)` through the closed double sum
///
/// ```text
/// sum_{t=0}^{k-j} sum_{q=0}^{t} (-1)^q / t! * C(k+t-1, k+t-j) C(2k-j, k-t-j) C(t, q) q^(k-j+t)
/// ```
///
/// The first binomial is generalized: at `k = 0` its upper argument is `-1`.
pub fn stirling1_explicit(k: u32, j: u32) -> Result<BigInt> {
    if j > k {
        return Ok(BigInt::zero());
    }
    let mut total = Rational::zero();
    for t in 0..=(k - j) {
        let outer = binomial(&int(i64::from(k) + i64::from(t) - 1), k + t - j)
            * int(binomial_int(u64::from(2 * k - j), u64::from(k - t - j)))
            / int(factorial(t));
        let mut inner = BigInt::zero();
        for q in 0..=t {
            inner += binomial_int(t.into(), q.into()) * pow_int(&BigInt::from(q), k - j + t) * sign(q);
        }
        total += outer * int(inner);
    }
    to_integer(total, || format!("explicit s({k}, {j})"))
}

/// r-Stirling number of the second kind `S_r(k + r, j + r)` via
/// `(1/j!) sum_i (-1)^(j-i) C(j, i) (i + r)^k`.
pub fn r_stirling2(k: u32, j: u32, r: u32) -> Result<BigInt> {
    let mut sum = BigInt::zero();
    for i in 0..=j {
        sum += binomial_int(j.into(), i.into()) * pow_int(&BigInt::from(i + r), k) * sign(j - i);
    }
    to_integer(Rational::new(sum, factorial(j)), || {
        format!("r-Stirling S_{r}({}, {})", k + r, j + r)
    })
}

/// Alternating sum `sum_{i=0}^{j} (-1)^(j-i) C(j, i) (m i + r)^k`, i.e.
/// `m^j j! W_{m,r}(k, j)`.
pub fn whitney_scaled(k: u32, j: u32, m: u32, r: u32) -> Result<BigInt> {
    if m == 0 {
        return Err(domain("common difference m must be >= 1"));
    }
    let mut sum = BigInt::zero();
    for i in 0..=j {
        let base = BigInt::from(m) * i + r;
        sum += binomial_int(j.into(), i.into()) * pow_int(&base, k) * sign(j - i);
    }
    Ok(sum)
}

/// r-Whitney number of the second kind `W_{m,r}(k, j)`.
///
/// Returned as a rational: integrality is checked empirically elsewhere, not
/// assumed here.
pub fn r_whitney(k: u32, j: u32, m: u32, r: u32) -> Result<Rational> {
    let scaled = whitney_scaled(k, j, m, r)?;
    let denom = pow_int(&BigInt::from(m), j) * factorial(j);
    Ok(Rational::new(scaled, denom))
}

/// `A_{m,r}(k, j) = sum_{i=0}^{j} (-1)^i C(k+1, i) [m (j-i) + r]^k`.
pub fn a_number(k: u32, j: u32, m: u32, r: u32) -> Result<BigInt> {
    if m == 0 {
        return Err(domain("common difference m must be >= 1"));
    }
    let mut sum = BigInt::zero();
    for i in 0..=j {
        let base = BigInt::from(m) * (j - i) + r;
        sum += binomial_int(u64::from(k) + 1, i.into()) * pow_int(&base, k) * sign(i);
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn stirling1_examples() {
        for k in 0..12 {
            assert_eq!(stirling1(k, k), b(1));
        }
        assert_eq!(stirling1(3, 2), b(-3));
        assert_eq!(stirling1(4, 1), b(-6));
        assert_eq!(stirling1(0, 0), b(1));
        assert_eq!(stirling1(5, 0), b(0));
        assert_eq!(stirling1(3, 7), b(0));
    }

    #[test]
    fn stirling1_explicit_examples() {
        assert_eq!(stirling1_explicit(0, 0).unwrap(), b(1));
        assert_eq!(stirling1_explicit(3, 1).unwrap(), b(2));
        assert_eq!(stirling1_explicit(3, 2).unwrap(), b(-3));
        assert_eq!(stirling1_explicit(4, 0).unwrap(), b(0));
    }

    #[test]
    fn stirling1_explicit_matches_recurrence() {
        for k in 0..=10 {
            for j in 0..=k {
                assert_eq!(stirling1_explicit(k, j).unwrap(), stirling1(k, j), "s({k},{j})");
            }
        }
    }

    #[test]
    fn stirling2_examples() {
        for k in 1..12 {
            assert_eq!(stirling2(k, 1), b(1));
        }
        assert_eq!(stirling2(0, 0), b(1));
        assert_eq!(stirling2(3, 2), b(3));
        assert_eq!(stirling2(4, 2), b(7));
        assert_eq!(stirling2(2, 5), b(0));
    }

    #[test]
    fn first_kind_row_sums_are_factorials() {
        for k in 0..=10 {
            let s: BigInt = (0..=k).map(|j| num_traits::Signed::abs(&stirling1(k, j))).sum();
            assert_eq!(s, factorial(k));
        }
    }

    fn falling(x: i64, len: u32) -> BigInt {
        (0..len as i64).fold(BigInt::one(), |acc, i| acc * (x - i))
    }

    #[test]
    fn falling_factorial_expansion() {
        for x in 0..=6i64 {
            for k in 0..=8 {
                let s: BigInt = (0..=k).map(|j| stirling1(k, j) * pow_int(&b(x), j)).sum();
                assert_eq!(s, falling(x, k));
            }
        }
    }

    #[test]
    fn second_kind_inverts_first() {
        for x in 0..=6i64 {
            for k in 0..=8 {
                let s: BigInt = (0..=k).map(|j| stirling2(k, j) * falling(x, j)).sum();
                assert_eq!(s, pow_int(&b(x), k));
            }
        }
    }

    #[test]
    fn r_stirling_examples() {
        assert_eq!(r_stirling2(3, 2, 0).unwrap(), b(3));
        assert_eq!(r_stirling2(2, 1, 1).unwrap(), b(3));
        assert_eq!(r_stirling2(0, 0, 5).unwrap(), b(1));
        for k in 0..=8 {
            for j in 0..=8 {
                assert_eq!(r_stirling2(k, j, 0).unwrap(), stirling2(k, j));
            }
        }
    }

    #[test]
    fn whitney_examples() {
        for k in 0..=8 {
            for j in 0..=8 {
                assert_eq!(r_whitney(k, j, 1, 0).unwrap(), int(stirling2(k, j)));
            }
        }
        assert_eq!(r_whitney(2, 1, 2, 1).unwrap(), int(4));
        assert_eq!(r_whitney(3, 0, 7, 2).unwrap(), int(8));
        assert_eq!(r_whitney(0, 0, 3, 9).unwrap(), int(1));
        assert!(r_whitney(1, 1, 0, 0).is_err());
    }

    #[test]
    fn whitney_unit_step_is_r_stirling() {
        for k in 0..=8 {
            for j in 0..=8 {
                for r in 0..=3 {
                    assert_eq!(r_whitney(k, j, 1, r).unwrap(), int(r_stirling2(k, j, r).unwrap()));
                }
            }
        }
    }

    #[test]
    fn a_number_examples() {
        for k in 0..6 {
            for m in 1..4 {
                for r in 0..4 {
                    assert_eq!(a_number(k, 0, m, r).unwrap(), pow_int(&b(r.into()), k));
                }
            }
        }
        assert_eq!(a_number(2, 1, 1, 0).unwrap(), b(1));
        assert_eq!(a_number(1, 1, 2, 1).unwrap(), b(1));
        assert!(a_number(1, 1, 0, 1).is_err());
    }

    #[test]
    fn cache_rows_satisfy_recurrence() {
        for family in [Family::Stirling1, Family::Stirling2] {
            let mut cache = TriangleCache::new(family);
            let _ = cache.get(15, 3);
            assert_eq!(cache.rows(), 16);
            for k in 0..15u32 {
                for j in 1..=k + 1 {
                    let lhs = cache.get(k + 1, j);
                    let rhs = match family {
                        Family::Stirling1 => cache.get(k, j - 1) - cache.get(k, j) * k,
                        Family::Stirling2 => cache.get(k, j - 1) + cache.get(k, j) * j,
                    };
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn concurrent_queries_agree() {
        let handles: Vec<_> = (0..8)
            .map(|i| std::thread::spawn(move || (0..=20u32).map(|j| stirling2(20, (j + i) % 21)).collect::<Vec<_>>()))
            .collect();
        let first: Vec<BigInt> = (0..=20u32).map(|j| stirling2(20, j)).collect();
        for (i, h) in handles.into_iter().enumerate() {
            let got = h.join().unwrap();
            for (j, v) in got.iter().enumerate() {
                assert_eq!(v, &first[(j + i) % 21]);
            }
        }
    }
}
