use proptest::prelude::*;

use schurq::inner::{expand_in_basis, lincomb_to_poly};
use schurq::lincomb::{Basis, LinComb};
use schurq::poly::VarAssignment;
use schurq::straighten::straighten;
use schurq::vertex::{apply_b, apply_b_star, hall_littlewood, Rho};
use schurq::wops::{apply_p_brute, apply_p_closed};
use schurq::{IntVector, Monomial, Poly, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| Rational::new(n, d))
}

fn monomial(max_var: usize, odd: bool) -> impl Strategy<Value = Monomial> {
    prop::collection::vec((1..=max_var, 1u32..=3), 0..3).prop_map(move |pairs| {
        Monomial::from_pairs(
            pairs
                .into_iter()
                .map(|(n, e)| (if odd && n % 2 == 0 { n - 1 } else { n }, e)),
        )
    })
}

fn poly_with(max_var: usize, odd: bool) -> impl Strategy<Value = Poly> {
    prop::collection::vec((monomial(max_var, odd), rational()), 0..5).prop_map(Poly::from_terms)
}

fn poly() -> impl Strategy<Value = Poly> {
    poly_with(5, false)
}

fn rho() -> impl Strategy<Value = Rho> {
    prop_oneof![
        Just(Rational::zero()),
        Just(Rational::from_int(-1)),
        Just(Rational::new(1, 2)),
        Just(Rational::new(-1, 3)),
    ]
    .prop_map(|r| Rho::new(r).unwrap())
}

fn point() -> impl Strategy<Value = VarAssignment> {
    prop::collection::vec(rational(), 5).prop_map(|vals| {
        vals.into_iter()
            .enumerate()
            .fold(VarAssignment::new(), |a, (i, v)| a.with(i + 1, v))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(p in poly(), q in poly(), s in poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &s, &p * &(&q * &s));
        prop_assert_eq!(&p * &(&q + &s), &(&p * &q) + &(&p * &s));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn leibniz(p in poly(), n in 1usize..=6) {
        let lhs = p.mul_var(n).partial(n) - p.partial(n).mul_var(n);
        prop_assert_eq!(lhs, p);
    }

    #[test]
    fn grading(p in poly(), q in poly(), n in 1usize..=5) {
        let (Some(dp), Some(dq)) = (p.degree(), q.degree()) else { return Ok(()) };
        let (hp, hq) = (p.homogeneous_component(dp), q.homogeneous_component(dq));
        prop_assert!((&hp * &hq).is_homogeneous_of(dp + dq));
        prop_assert!(hp.mul_var(n).is_homogeneous_of(dp + n as u32));
        let d = hp.partial(n);
        prop_assert!(d.is_zero() || d.is_homogeneous_of(dp - n as u32));
    }

    #[test]
    fn evaluation_is_a_morphism(p in poly(), q in poly(), a in point()) {
        prop_assert_eq!((&p * &q).evaluate(&a), p.evaluate(&a) * q.evaluate(&a));
        prop_assert_eq!((&p + &q).evaluate(&a), p.evaluate(&a) + q.evaluate(&a));
    }

    #[test]
    fn b_relation(rho in rho(), p in poly_with(4, false), m in -3i64..=3, n in -3i64..=3) {
        let p = if rho.is_q() { Poly::from_terms(p.terms().filter(|(m, _)| m.is_odd_supported()).map(|(m, c)| (m.clone(), c.clone()))) } else { p };
        let r = rho.value().clone();
        let bb = |x: i64, y: i64| apply_b(x, &apply_b(y, &p, &rho), &rho);
        prop_assert_eq!(
            bb(m, n) - bb(n, m).scale(&r),
            bb(m + 1, n - 1).scale(&r) - bb(n - 1, m + 1)
        );
    }

    #[test]
    fn b_bstar_relation(rho in rho(), p in poly_with(4, true), a in -3i64..=3, b in -3i64..=3) {
        let r = rho.value().clone();
        let b_bs = |x: i64, y: i64| apply_b(x, &apply_b_star(y, &p, &rho), &rho);
        let bs_b = |y: i64, x: i64| apply_b_star(y, &apply_b(x, &p, &rho), &rho);
        let mut rhs = b_bs(a - 1, b - 1).scale(&r) - bs_b(b - 1, a - 1);
        if a == b {
            let w = Rational::one() - &r;
            rhs.add_scaled(&p, &(&w * &w));
        }
        prop_assert_eq!(b_bs(a, b) - bs_b(b, a).scale(&r), rhs);
    }

    #[test]
    fn straightening_is_sound(parts in prop::collection::vec(-3i64..=6, 0..=4)) {
        let lam = IntVector::new(parts);
        for (basis, rho) in [(Basis::Schur, Rho::schur()), (Basis::Q, Rho::q())] {
            let direct = hall_littlewood(&lam, &rho);
            prop_assert_eq!(&direct, &lincomb_to_poly(&straighten(basis, &lam)));
            prop_assert!(direct.is_zero() || direct.is_homogeneous_of(lam.weight() as u32));
        }
    }

    #[test]
    fn expansion_round_trip(terms in prop::collection::vec((prop::collection::vec(1i64..=4, 0..=3), rational()), 0..4)) {
        for basis in [Basis::Schur, Basis::Q] {
            let mut lc = LinComb::zero(basis);
            for (parts, c) in &terms {
                let mut p = parts.clone();
                p.sort_unstable_by(|a, b| b.cmp(a));
                if basis == Basis::Q {
                    p.dedup();
                }
                lc.add_term(p, c.clone());
            }
            prop_assert_eq!(expand_in_basis(&lincomb_to_poly(&lc), basis).unwrap(), lc);
        }
    }

    #[test]
    fn closed_action_on_random_labels(parts in prop::collection::vec(-2i64..=5, 0..=3), k in 1u32..=4, m in -4i64..=4) {
        let lam = IntVector::new(parts);
        for (basis, rho) in [(Basis::Schur, Rho::schur()), (Basis::Q, Rho::q())] {
            let closed = lincomb_to_poly(&apply_p_closed(basis, k, m, &lam));
            let brute = apply_p_brute(k, m, &rho, &hall_littlewood(&lam, &rho)).unwrap();
            prop_assert_eq!(closed, brute);
        }
    }
}
