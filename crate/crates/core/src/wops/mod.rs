//! The W-type operators `P^(k)_m`, realised three ways: closed actions on
//! labels, sums of vertex-operator bilinears, and normal-ordered mode sums.

use num_bigint::BigInt;

use crate::rational::{factorial, Rational};
use crate::vertex::Rho;

pub mod brute;
pub mod closed;
pub mod explicit;
pub mod modes;
pub mod named;

pub use brute::{apply_p_brute, apply_p_brute_literal};
pub use closed::{apply_p_closed, apply_p_closed_q, apply_p_closed_s};
pub use modes::apply_p_modes;
pub use named::{apply_named, closed_action_named, NamedOp};

/// Falling factorial `[n]_k = n (n-1) ... (n-k+1)`, with `[n]_0 = 1`.
pub fn falling(n: i64, k: u32) -> BigInt {
    (0..k as i64).fold(BigInt::from(1), |acc, j| acc * (n - j))
}

/// `binom(n, k) = [n]_k / k!` for any integer `n`.
pub fn binom_int(n: i64, k: u32) -> Rational {
    Rational::from_big(falling(n, k), factorial(k as u64))
}

/// `d_k(n) = k! (-1)^{k-1} / 2^k * sum_{j<k} (-2)^j binom(n, j)`.
pub fn coeff_d(k: u32, n: i64) -> Rational {
    assert!(k >= 1, "d_k needs k >= 1");
    let mut sum = Rational::zero();
    let mut pow = Rational::one();
    for j in 0..k {
        sum += &pow * binom_int(n, j);
        pow = pow * Rational::from_int(-2);
    }
    let pre = Rational::from_bigint(factorial(k as u64)) * Rational::sign_pow(k as i64 - 1)
        / Rational::from_int(2).pow(k as i32);
    pre * sum
}

/// `c_k^m(n) = 2 d_k(n-m) - 2 (-1)^m d_k(-n)`.
pub fn coeff_c(k: u32, m: i64, n: i64) -> Rational {
    let two = Rational::from_int(2);
    &two * coeff_d(k, n - m) - two * Rational::sign_pow(m) * coeff_d(k, -n)
}

/// `k! sum_{j<k} rho^j / (1-rho)^{j+1} binom(b, shift - j)`.
fn rho_binomial_sum(k: u32, shift: i64, b: i64, rho: &Rho) -> Rational {
    let r = rho.value();
    let inv = (Rational::one() - r).recip().expect("rho != 1");
    let mut sum = Rational::zero();
    for j in 0..k as i64 {
        let top = shift - j;
        if top < 0 {
            continue;
        }
        sum += r.pow(j as i32) * inv.pow(j as i32 + 1) * binom_int(b, top as u32);
    }
    Rational::from_bigint(factorial(k as u64)) * sum
}

/// `h_k(b; rho) = k! sum_{j<k} rho^j / (1-rho)^{j+1} binom(b, k-j)`.
pub fn coeff_h(k: u32, b: i64, rho: &Rho) -> Rational {
    rho_binomial_sum(k, k as i64, b, rho)
}

/// `g_k(b; rho) = -k! sum_{j<k} rho^j / (1-rho)^{j+1} binom(b, k-1-j)`.
pub fn coeff_g(k: u32, b: i64, rho: &Rho) -> Rational {
    -rho_binomial_sum(k, k as i64 - 1, b, rho)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rhos() -> Vec<Rho> {
        [(0, 1), (-1, 1), (1, 2), (-1, 3), (5, 7)]
            .iter()
            .map(|&(a, b)| Rho::new(Rational::new(a, b)).unwrap())
            .collect()
    }

    #[test]
    fn falling_and_binom() {
        assert_eq!(falling(5, 2), BigInt::from(20));
        assert_eq!(falling(-2, 3), BigInt::from(-24));
        assert_eq!(falling(7, 0), BigInt::from(1));
        assert_eq!(binom_int(-1, 2), Rational::one());
        assert_eq!(binom_int(6, 3), Rational::from_int(20));
    }

    #[test]
    fn d_values() {
        for a in -5..=5 {
            let expect =
                Rational::new(3 * a * a, 2) - Rational::from_int(3 * a) + Rational::new(3, 4);
            assert_eq!(coeff_d(3, a), expect);
            assert_eq!(coeff_d(1, a), Rational::new(1, 2));
        }
        assert_eq!(coeff_d(4, 0), Rational::new(-3, 2));
        for k in 1..7u32 {
            let expect = Rational::from_bigint(factorial(k as u64))
                * Rational::sign_pow(k as i64 - 1)
                / Rational::from_int(2).pow(k as i32);
            assert_eq!(coeff_d(k, 0), expect);
        }
    }

    #[test]
    fn c_values() {
        for m in -6..=6i64 {
            for n in -6..=6i64 {
                let expect = if m.rem_euclid(2) == 1 {
                    3 * (m * m - 2 * m * n + 2 * m + 2 * n * n + 1)
                } else {
                    3 * (m + 2) * (m - 2 * n)
                };
                assert_eq!(coeff_c(3, m, n), Rational::from_int(expect), "m={m} n={n}");
                let one = 1 - if m % 2 == 0 { 1 } else { -1 };
                assert_eq!(coeff_c(1, m, n), Rational::from_int(one));
            }
        }
        assert_eq!(coeff_c(3, 1, 1), Rational::from_int(12));
        assert_eq!(coeff_c(3, 0, 2), Rational::from_int(-24));
    }

    #[test]
    fn h_g_identities() {
        for rho in rhos() {
            for k in 1..=5u32 {
                assert!(coeff_h(k, 0, &rho).is_zero());
                for b in -6..=6 {
                    assert_eq!(
                        coeff_g(k, b, &rho),
                        coeff_h(k, b, &rho) - coeff_h(k, b + 1, &rho),
                        "k={k} b={b} rho={:?}",
                        rho.value()
                    );
                }
            }
            let expect = -(Rational::one() - rho.value()).recip().unwrap();
            assert_eq!(coeff_g(1, 3, &rho), expect);
        }
        for k in 1..=5u32 {
            for b in -6..=6 {
                assert_eq!(coeff_g(k, b, &Rho::q()), -coeff_d(k, b));
                let expect = Rational::from_bigint(-BigInt::from(k) * falling(b, k - 1));
                assert_eq!(coeff_g(k, b, &Rho::schur()), expect);
            }
        }
        assert_eq!(coeff_g(3, 0, &Rho::q()), Rational::new(-3, 4));
    }
}
