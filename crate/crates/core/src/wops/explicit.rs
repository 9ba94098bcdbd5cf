//! Written-out closed actions of the named operators. These are
//! specialisations of the general closed action, kept separately so the
//! two can be checked against each other.

use crate::lincomb::{Basis, LinComb};
use crate::partition::IntVector;
use crate::rational::Rational;
use crate::straighten::{straighten_q, straighten_schur};

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// `Lhat_m Q_lambda = sum_i 2(lambda_i - m) Q_{lambda - 2m e_i}
///   + delta_{m<0} sum_{a=0}^{-2m} (-1)^a (2a-1)/4 Q_{(lambda, a, -2m-a)}`.
pub fn lhat_on_q(m: i64, lambda: &IntVector) -> LinComb {
    let mut out = LinComb::zero(Basis::Q);
    for (i, &x) in lambda.parts().iter().enumerate() {
        out.add_scaled(
            &straighten_q(&lambda.shifted(i, -2 * m)),
            &Rational::from_int(2 * (x - m)),
        );
    }
    if m < 0 {
        for a in 0..=-2 * m {
            let c = Rational::sign_pow(a) * r(2 * a - 1, 4);
            out.add_scaled(&straighten_q(&lambda.extended(&[a, -2 * m - a])), &c);
        }
    }
    out
}

/// Cubic action for odd `m`.
pub fn what_on_q(m: i64, lambda: &IntVector) -> LinComb {
    let mut out = LinComb::zero(Basis::Q);
    for (i, &x) in lambda.parts().iter().enumerate() {
        let c = Rational::from_int(2 * x * x - 2 * m * x) + r((m + 1) * (m - 1), 3);
        out.add_scaled(&straighten_q(&lambda.shifted(i, -m)), &c);
    }
    if m < 0 {
        for a in 0..=-m {
            let c =
                Rational::sign_pow(a + 1) * (r(a * a, 2) + r(m * a, 2) + r(m * m, 12) - r(1, 12));
            out.add_scaled(&straighten_q(&lambda.extended(&[a, -m - a])), &c);
        }
    }
    out
}

/// Quartic action for even `m`.
pub fn nhat_on_q(m: i64, lambda: &IntVector) -> LinComb {
    let mut out = LinComb::zero(Basis::Q);
    for (i, &x) in lambda.parts().iter().enumerate() {
        let c = Rational::from_int(2 * x * x * x - 3 * m * x * x + m * m * x - m * x - 2 * x + m)
            + r(m * m, 2);
        out.add_scaled(&straighten_q(&lambda.shifted(i, -m)), &c);
    }
    if m < 0 {
        for a in 0..=-m {
            let c = Rational::sign_pow(m)
                * r(
                    m * m * (2 * a - 1) + 2 * m * (3 * a * a - a - 1) + 4 * a * a * a - 4 * a,
                    8,
                );
            out.add_scaled(&straighten_q(&lambda.extended(&[a, -m - a])), &c);
        }
    }
    out
}

/// Box-adding form of the BGW cut-and-join action on a strict partition:
/// `1/8 sum_{mu = lambda + box strict} (2 i(box) - 1)^2 / 2^{l(mu)-l(lambda)} Q_mu`.
pub fn wbgw_boxes(lambda: &[i64]) -> LinComb {
    let mut out = LinComb::zero(Basis::Q);
    let l = lambda.len();
    for i in 0..=l {
        let mut mu = lambda.to_vec();
        if i == l {
            mu.push(1);
        } else {
            mu[i] += 1;
        }
        let strict = mu.windows(2).all(|w| w[0] > w[1]);
        if !strict {
            continue;
        }
        let col = mu[i];
        let c = r((2 * col - 1) * (2 * col - 1), 8 * (1 << (mu.len() - l)));
        out.add_term(mu, c);
    }
    out
}

/// `(W_KW)^perp Q_mu = sum_i (2mu_i-1)(2mu_i-5)/24 Q_{mu-3e_i}
///   - 1/6 sum_{i != j} Q_{mu-2e_i-e_j} - 1/18 sum_{i,j,k distinct} Q_{mu-e_i-e_j-e_k}`.
pub fn wkw_perp_on_q(mu: &IntVector) -> LinComb {
    let l = mu.len();
    let mut out = LinComb::zero(Basis::Q);
    for i in 0..l {
        let x = mu.parts()[i];
        out.add_scaled(
            &straighten_q(&mu.shifted(i, -3)),
            &r((2 * x - 1) * (2 * x - 5), 24),
        );
        for j in 0..l {
            if j == i {
                continue;
            }
            let v = mu.shifted(i, -2).shifted(j, -1);
            out.add_scaled(&straighten_q(&v), &r(-1, 6));
            for k in 0..l {
                if k == i || k == j {
                    continue;
                }
                let v = mu.shifted(i, -1).shifted(j, -1).shifted(k, -1);
                out.add_scaled(&straighten_q(&v), &r(-1, 18));
            }
        }
    }
    out
}

/// Schur-side Virasoro action.
pub fn l_on_schur(m: i64, lambda: &IntVector) -> LinComb {
    let l = lambda.len() as i64;
    let mut out = LinComb::zero(Basis::Schur);
    for (i, &x) in lambda.parts().iter().enumerate() {
        let i = i as i64 + 1;
        let c = Rational::from_int(x - i) + r(1 - m, 2);
        out.add_scaled(&straighten_schur(&lambda.shifted((i - 1) as usize, -m)), &c);
    }
    if m < 0 {
        for n in 1..=-m {
            let c = Rational::sign_pow(m - n) * (Rational::from_int(n - l) + r(m - 1, 2));
            out.add_scaled(&straighten_schur(&hook_extension(lambda, n, -m - n)), &c);
        }
    }
    if m == 0 {
        out.add_scaled(&straighten_schur(lambda), &r(l * l, 2));
    }
    out
}

/// Schur-side cubic action.
pub fn w_on_schur(m: i64, lambda: &IntVector) -> LinComb {
    let l = lambda.len() as i64;
    let mut out = LinComb::zero(Basis::Schur);
    for (i, &x) in lambda.parts().iter().enumerate() {
        let i = i as i64 + 1;
        let c = r(m * m, 6) + Rational::from_int(i * m - x * m) - r(m, 2)
            + Rational::from_int(i * i - 2 * i * x - i + x * x + x)
            + r(1, 3);
        out.add_scaled(&straighten_schur(&lambda.shifted((i - 1) as usize, -m)), &c);
    }
    if m < 0 {
        for n in 1..=-m {
            let c = r(m * m, 6) + Rational::from_int(m * n - l * m) - r(m, 2)
                + Rational::from_int(n * n - 2 * l * n - n + l * l + l)
                + r(1, 3);
            let c = Rational::sign_pow(m - n) * c;
            out.add_scaled(&straighten_schur(&hook_extension(lambda, n, -m - n)), &c);
        }
    }
    if m == 0 {
        out.add_scaled(&straighten_schur(lambda), &r(-l * l * l, 3));
    }
    out
}

/// `(lambda, n, 1^ones)`.
pub fn hook_extension(lambda: &IntVector, n: i64, ones: i64) -> IntVector {
    let mut tail = vec![n];
    tail.extend(std::iter::repeat_n(1, ones.max(0) as usize));
    lambda.extended(&tail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{partitions_up_to, strict_partitions_up_to};
    use crate::wops::named::{closed_action_named, NamedOp};

    #[test]
    fn q_side_forms_agree() {
        for lam in strict_partitions_up_to(6) {
            let v = lam.to_vector();
            for m in -3..=3 {
                assert_eq!(
                    lhat_on_q(m, &v),
                    closed_action_named(NamedOp::Lhat(m), &v).unwrap()
                );
                if m % 2 != 0 {
                    assert_eq!(
                        what_on_q(m, &v),
                        closed_action_named(NamedOp::What(m), &v).unwrap()
                    );
                } else {
                    assert_eq!(
                        nhat_on_q(m, &v),
                        closed_action_named(NamedOp::Nhat(m), &v).unwrap()
                    );
                }
            }
            assert_eq!(
                wbgw_boxes(lam.parts()),
                closed_action_named(NamedOp::WBGW, &v).unwrap()
            );
            assert_eq!(
                wkw_perp_on_q(&v),
                closed_action_named(NamedOp::WKWperp, &v).unwrap()
            );
        }
    }

    #[test]
    fn schur_side_forms_agree() {
        for lam in partitions_up_to(6) {
            let v = lam.to_vector();
            for m in -3..=3 {
                assert_eq!(
                    l_on_schur(m, &v),
                    closed_action_named(NamedOp::L(m), &v).unwrap()
                );
                assert_eq!(
                    w_on_schur(m, &v),
                    closed_action_named(NamedOp::W(m), &v).unwrap()
                );
            }
        }
    }
}
