//! Quantum integers, factorials and Gaussian binomials in `q^2`.
//!
//! All three use the unbalanced convention, so `[n] = 1 + q^2 + ... +
//! q^{2n-2}` and every value is a polynomial with nonnegative coefficients.

use std::sync::{Mutex, OnceLock};

use crate::poly::LaurentPoly;

pub fn quantum_int(n: u32) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for j in 0..n {
        out += &LaurentPoly::q_pow(1, 2 * j as i32);
    }
    out
}

pub fn quantum_factorial(n: u32) -> LaurentPoly {
    (1..=n).fold(LaurentPoly::one(), |acc, k| &acc * &quantum_int(k))
}

fn pascal_rows() -> &'static Mutex<Vec<Vec<LaurentPoly>>> {
    static ROWS: OnceLock<Mutex<Vec<Vec<LaurentPoly>>>> = OnceLock::new();
    ROWS.get_or_init(|| Mutex::new(vec![vec![LaurentPoly::one()]]))
}

/// Gaussian binomial via the q-Pascal rule
/// `[n, k] = [n-1, k-1] + q^{2k} [n-1, k]`, memoized by row.
/// Zero outside `0 <= k <= n`.
pub fn quantum_binomial(n: u32, k: i64) -> LaurentPoly {
    if k < 0 || k > n as i64 {
        return LaurentPoly::zero();
    }
    let k = k as usize;
    let mut rows = pascal_rows().lock().unwrap_or_else(|e| e.into_inner());
    while rows.len() <= n as usize {
        let prev = rows.last().unwrap();
        let m = prev.len();
        let mut row = Vec::with_capacity(m + 1);
        for j in 0..=m {
            let left = if j > 0 { prev[j - 1].clone() } else { LaurentPoly::zero() };
            let right = if j < m {
                prev[j].shifted(crate::poly::GradingShift::new(0, 2 * j as i32, 0))
            } else {
                LaurentPoly::zero()
            };
            row.push(&left + &right);
        }
        rows.push(row);
    }
    rows[n as usize][k].clone()
}

/// Balanced Gaussian binomial, symmetric under `q -> q^{-1}`.
pub fn balanced_binomial(n: u32, k: i64) -> LaurentPoly {
    if k < 0 || k > n as i64 {
        return LaurentPoly::zero();
    }
    let d = (k * (n as i64 - k)) as i32;
    quantum_binomial(n, k).shifted(crate::poly::GradingShift::new(0, -d, 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(quantum_int(0), LaurentPoly::zero());
        assert_eq!(quantum_int(1), LaurentPoly::one());
        assert_eq!(quantum_int(3), p("1 + q^2 + q^4"));
        assert_eq!(quantum_factorial(0), LaurentPoly::one());
        assert_eq!(quantum_factorial(2), p("1 + q^2"));
        assert_eq!(quantum_factorial(3), p("1 + 2*q^2 + 2*q^4 + q^6"));
        assert_eq!(quantum_binomial(5, 0), LaurentPoly::one());
        assert_eq!(quantum_binomial(2, 1), p("1 + q^2"));
        assert_eq!(quantum_binomial(4, 2), p("1 + q^2 + 2*q^4 + q^6 + q^8"));
        assert!(quantum_binomial(3, 4).is_zero());
        assert!(quantum_binomial(3, -1).is_zero());
    }

    #[test]
    fn factorial_ratio() {
        for n in 0..9u32 {
            for k in 0..=n {
                let lhs = &quantum_binomial(n, k as i64)
                    * &(&quantum_factorial(k) * &quantum_factorial(n - k));
                assert_eq!(lhs, quantum_factorial(n));
            }
        }
    }

    #[test]
    fn balanced_is_palindromic() {
        for n in 0..8 {
            for k in 0..=n {
                let b = balanced_binomial(n, k as i64);
                assert_eq!(b.bar_q(), b);
            }
        }
    }
}
