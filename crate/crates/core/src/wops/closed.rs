//! Closed actions of `P^(k)_m` on `Q_lambda` and `S_lambda` for arbitrary
//! integer labels, straightened into the partition bases.

use num_bigint::BigInt;

use crate::lincomb::{Basis, LinComb};
use crate::partition::IntVector;
use crate::rational::Rational;
use crate::straighten::{straighten, straighten_q, straighten_schur};

use super::{coeff_c, coeff_d, falling};

/// `P^(k)_m Q_lambda = sum_i c_k^m(lambda_i) Q_{lambda - m e_i}
///   + delta_{m<0} sum_{a=0}^{-m} (-1)^{m-a} d_k(a) Q_{(lambda, a, -m-a)}`.
pub fn apply_p_closed_q(k: u32, m: i64, lambda: &IntVector) -> LinComb {
    if k == 0 {
        return delta_k0(Basis::Q, m, lambda);
    }
    let mut out = LinComb::zero(Basis::Q);
    for (i, &part) in lambda.parts().iter().enumerate() {
        let c = coeff_c(k, m, part);
        if !c.is_zero() {
            out.add_scaled(&straighten_q(&lambda.shifted(i, -m)), &c);
        }
    }
    if m < 0 {
        for a in 0..=-m {
            let c = Rational::sign_pow(m - a) * coeff_d(k, a);
            out.add_scaled(&straighten_q(&lambda.extended(&[a, -m - a])), &c);
        }
    }
    out
}

/// `P^(k)_m S_lambda = sum_i k[lambda_i - m - i]_{k-1} S_{lambda - m e_i}
///   + delta_{m,0} [-l]_k S_lambda
///   + delta_{m<0} sum_{n=1}^{-m} (-1)^{m-n} k[n-l-1]_{k-1} S_{(lambda, n, 1^{-m-n})}`.
pub fn apply_p_closed_s(k: u32, m: i64, lambda: &IntVector) -> LinComb {
    if k == 0 {
        return delta_k0(Basis::Schur, m, lambda);
    }
    let l = lambda.len() as i64;
    let kf = BigInt::from(k);
    let mut out = LinComb::zero(Basis::Schur);
    for (i, &part) in lambda.parts().iter().enumerate() {
        let c = Rational::from_bigint(&kf * falling(part - m - (i as i64 + 1), k - 1));
        if !c.is_zero() {
            out.add_scaled(&straighten_schur(&lambda.shifted(i, -m)), &c);
        }
    }
    if m == 0 {
        out.add_scaled(
            &straighten_schur(lambda),
            &Rational::from_bigint(falling(-l, k)),
        );
    }
    if m < 0 {
        for n in 1..=-m {
            let c =
                Rational::sign_pow(m - n) * Rational::from_bigint(&kf * falling(n - l - 1, k - 1));
            if c.is_zero() {
                continue;
            }
            let mut tail = vec![n];
            tail.extend(std::iter::repeat_n(1, (-m - n) as usize));
            out.add_scaled(&straighten_schur(&lambda.extended(&tail)), &c);
        }
    }
    out
}

pub fn apply_p_closed(basis: Basis, k: u32, m: i64, lambda: &IntVector) -> LinComb {
    match basis {
        Basis::Schur => apply_p_closed_s(k, m, lambda),
        Basis::Q => apply_p_closed_q(k, m, lambda),
    }
}

fn delta_k0(basis: Basis, m: i64, lambda: &IntVector) -> LinComb {
    if m == 0 {
        straighten(basis, lambda)
    } else {
        LinComb::zero(basis)
    }
}
