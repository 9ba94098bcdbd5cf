//! Pairings on the polynomial ring and expansion in the Schur / Q bases.

use num_bigint::BigInt;

use crate::error::Result;
use crate::lincomb::{Basis, LinComb};
use crate::partition::{partitions_of, strict_partitions_of};
use crate::poly::{Monomial, Poly};
use crate::rational::{factorial, Rational};
use crate::vertex::characters;

/// `<t^a, t^a>` with `(t_m)^perp = (1/(scale * m)) d/dt_m`.
fn monomial_norm(m: &Monomial, scale: i64) -> Rational {
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for (n, e) in m.factors() {
        num *= factorial(e as u64);
        den *= BigInt::from(scale * n as i64).pow(e);
    }
    Rational::from_big(num, den)
}

fn diagonal_pairing(f: &Poly, g: &Poly, scale: i64) -> Rational {
    let (small, large) = if f.len() <= g.len() { (f, g) } else { (g, f) };
    let mut acc = Rational::zero();
    for (m, c) in small.terms() {
        let d = large.coeff(m);
        if !d.is_zero() {
            acc += c * &d * monomial_norm(m, scale);
        }
    }
    acc
}

/// The pairing with `<Q_lambda, Q_mu> = 2^{l(lambda)} delta`, defined on
/// polynomials in the odd variables.
pub fn q_inner(f: &Poly, g: &Poly) -> Result<Rational> {
    f.require_odd_supported()?;
    g.require_odd_supported()?;
    Ok(diagonal_pairing(f, g, 2))
}

/// The Hall pairing, for which the Schur functions are orthonormal.
pub fn hall_inner(f: &Poly, g: &Poly) -> Rational {
    diagonal_pairing(f, g, 1)
}

/// `sum c_lambda F_lambda` as a polynomial.
pub fn lincomb_to_poly(lc: &LinComb) -> Poly {
    let chars = characters();
    let mut out = Poly::zero();
    for (label, c) in lc.terms() {
        out.add_scaled(&chars.get(lc.basis(), label), c);
    }
    out
}

/// Coefficients of `p` in the Schur or Q basis.
pub fn expand_in_basis(p: &Poly, basis: Basis) -> Result<LinComb> {
    if basis == Basis::Q {
        p.require_odd_supported()?;
    }
    let mut out = LinComb::zero(basis);
    let (Some(lo), Some(hi)) = (p.min_degree(), p.degree()) else {
        return Ok(out);
    };
    let chars = characters();
    for d in lo..=hi {
        let component = p.homogeneous_component(d);
        if component.is_zero() {
            continue;
        }
        match basis {
            Basis::Q => {
                for lam in strict_partitions_of(d as i64) {
                    let q = chars.get(Basis::Q, lam.parts());
                    let c =
                        diagonal_pairing(&q, &component, 2) / Rational::from_int(1 << lam.len());
                    out.add_term(lam.parts().to_vec(), c);
                }
            }
            Basis::Schur => {
                for lam in partitions_of(d as i64) {
                    let s = chars.get(Basis::Schur, lam.parts());
                    out.add_term(lam.parts().to_vec(), diagonal_pairing(&s, &component, 1));
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{partitions_up_to, strict_partitions_up_to, IntVector};
    use crate::vertex::{qfun, schur};

    fn iv(p: &[i64]) -> IntVector {
        IntVector::new(p.to_vec())
    }

    #[test]
    fn q_orthogonality() {
        let labels = strict_partitions_up_to(7);
        for a in &labels {
            for b in &labels {
                let v = q_inner(&qfun(&a.to_vector()), &qfun(&b.to_vector())).unwrap();
                let expect = if a == b {
                    Rational::from_int(1 << a.len())
                } else {
                    Rational::zero()
                };
                assert_eq!(v, expect, "{a:?} {b:?}");
            }
        }
        assert_eq!(
            q_inner(&Poly::one(), &Poly::one()).unwrap(),
            Rational::one()
        );
        assert!(q_inner(&Poly::var(2), &Poly::one()).is_err());
    }

    #[test]
    fn schur_orthonormal() {
        let labels = partitions_up_to(6);
        for a in &labels {
            for b in &labels {
                let v = hall_inner(&schur(&a.to_vector()), &schur(&b.to_vector()));
                assert_eq!(v, Rational::from_int((a == b) as i64), "{a:?} {b:?}");
            }
        }
    }

    #[test]
    fn expansion_examples() {
        let two_t1 = Poly::var(1).scale(&Rational::from_int(2));
        assert_eq!(
            expand_in_basis(&two_t1, Basis::Q).unwrap(),
            LinComb::single(Basis::Q, vec![1], Rational::one())
        );
        assert_eq!(
            expand_in_basis(&qfun(&iv(&[1, 2])), Basis::Q).unwrap(),
            LinComb::single(Basis::Q, vec![2, 1], -Rational::one())
        );
        assert!(expand_in_basis(&Poly::zero(), Basis::Schur)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn expansion_round_trip() {
        let mut lc = LinComb::zero(Basis::Q);
        lc.add_term(vec![4, 1], Rational::new(3, 2));
        lc.add_term(vec![2], Rational::from_int(-5));
        lc.add_term(vec![], Rational::from_int(7));
        assert_eq!(
            expand_in_basis(&lincomb_to_poly(&lc), Basis::Q).unwrap(),
            lc
        );

        let mut lc = LinComb::zero(Basis::Schur);
        lc.add_term(vec![2, 2, 1], Rational::new(-1, 3));
        lc.add_term(vec![3], Rational::from_int(2));
        assert_eq!(
            expand_in_basis(&lincomb_to_poly(&lc), Basis::Schur).unwrap(),
            lc
        );
    }
}
