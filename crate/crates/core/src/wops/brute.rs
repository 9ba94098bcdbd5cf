//! `P^(k)_m = sum_{a-b=m} g_k(b; rho) B*_a * B_b + delta_{m,0} rho^k k!/(1-rho)^k`
//! at `rho = 0` and `rho = -1`, where `B*_a * B_b = B*_a B_b - (1-rho)
//! delta_{a,b} delta_{b>=0}` is the normal-ordered bilinear.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::lincomb::Basis;
use crate::poly::Poly;
use crate::rational::{factorial, Rational};
use crate::vertex::{characters, derivative_expansion, Rho};

use super::coeff_g;

fn basis_of(rho: &Rho) -> Result<Basis> {
    if rho.is_schur() {
        Ok(Basis::Schur)
    } else if rho.is_q() {
        Ok(Basis::Q)
    } else {
        Err(Error::UnsupportedRho(rho.value().to_string()))
    }
}

/// `(B*_a * B_b) p` for every `b` where it can be nonzero, with `a = b + m`.
///
/// For `b < 0` the product is used as written. For `b >= 0` the reordered
/// forms `-B_{b+1} B*_{a+1}` (`rho = 0`) and `-B_b B*_a` (`rho = -1`) are
/// used; they agree with the definition (see the tests) and stay at low
/// degree, so the window is `-deg p <= b < 0` plus the `b >= 0` range where
/// the inner `B*` is nonzero.
fn star_terms_uncached(basis: Basis, m: i64, p: &Poly) -> Vec<(i64, Poly)> {
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    let deg = deg as i64;
    let ops = characters().ops(basis);
    let lowering = derivative_expansion(p, -1);
    let raising = derivative_expansion(p, 1);
    let mut out = Vec::new();

    for b in -deg..0 {
        let inner = ops.b_from_expansion(b, &lowering);
        if inner.is_zero() {
            continue;
        }
        let t = ops.b_star(b + m, &inner);
        if !t.is_zero() {
            out.push((b, t));
        }
    }

    // shift = 1 at rho = 0, 0 at rho = -1
    let shift = if basis == Basis::Schur { 1 } else { 0 };
    let mut b = 0;
    while b + m + shift <= deg {
        let inner = ops.b_star_from_expansion(b + m + shift, &raising);
        if !inner.is_zero() {
            let t = -ops.b(b + shift, &inner);
            if !t.is_zero() {
                out.push((b, t));
            }
        }
        b += 1;
    }
    out
}

type StarMemo = Mutex<HashMap<(Basis, i64, Poly), Arc<Vec<(i64, Poly)>>>>;

fn star_memo() -> &'static StarMemo {
    static MEMO: OnceLock<StarMemo> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The table is independent of `k`, so sweeps over `k` share it.
fn star_terms(basis: Basis, m: i64, p: &Poly) -> Arc<Vec<(i64, Poly)>> {
    let key = (basis, m, p.clone());
    if let Some(hit) = star_memo().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let terms = Arc::new(star_terms_uncached(basis, m, p));
    star_memo().lock().unwrap().insert(key, terms.clone());
    terms
}

/// Drop the memoised bilinear tables.
pub fn clear_cache() {
    star_memo().lock().unwrap().clear();
}

/// `delta_{m,0} rho^k k! / (1-rho)^k`.
fn constant_part(k: u32, m: i64, rho: &Rho) -> Rational {
    if m != 0 {
        return Rational::zero();
    }
    let r = rho.value();
    let q = r / &(Rational::one() - r);
    q.pow(k as i32) * Rational::from_bigint(factorial(k as u64))
}

/// `P^(k)_m p` by summing vertex-operator bilinears; `rho` must be 0 or -1.
pub fn apply_p_brute(k: u32, m: i64, rho: &Rho, p: &Poly) -> Result<Poly> {
    let basis = basis_of(rho)?;
    if basis == Basis::Q {
        p.require_odd_supported()?;
    }
    if k == 0 {
        return Ok(if m == 0 { p.clone() } else { Poly::zero() });
    }
    let mut out = p.scale(&constant_part(k, m, rho));
    for (b, t) in star_terms(basis, m, p).iter() {
        out.add_scaled(t, &coeff_g(k, *b, rho));
    }
    Ok(out)
}

/// `(B*_a * B_b) p` straight from the definition.
pub fn star_literal(a: i64, b: i64, rho: &Rho, p: &Poly) -> Poly {
    let ops = characters();
    let basis = basis_of(rho).ok();
    let mut out = match basis {
        Some(basis) => {
            let v = ops.ops(basis);
            v.b_star(a, &v.b(b, p))
        }
        None => {
            let v = crate::vertex::VertexOps::new(rho.clone());
            v.b_star(a, &v.b(b, p))
        }
    };
    if a == b && b >= 0 {
        out.add_scaled(p, &-(Rational::one() - rho.value()));
    }
    out
}

/// Reference evaluation of `P^(k)_m p` from the definition of the bilinear,
/// summing `b` over `[-deg p, deg p + |m| + k]`. Slow: intended for checking
/// [`apply_p_brute`] on small inputs.
pub fn apply_p_brute_literal(k: u32, m: i64, rho: &Rho, p: &Poly) -> Result<Poly> {
    basis_of(rho)?;
    if k == 0 {
        return Ok(if m == 0 { p.clone() } else { Poly::zero() });
    }
    let Some(deg) = p.degree() else {
        return Ok(Poly::zero());
    };
    let deg = deg as i64;
    let mut out = p.scale(&constant_part(k, m, rho));
    for b in -deg..=deg + m.abs() + k as i64 {
        let g = coeff_g(k, b, rho);
        if g.is_zero() {
            continue;
        }
        out.add_scaled(&star_literal(b + m, b, rho, p), &g);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::IntVector;
    use crate::vertex::{qfun, schur};

    fn iv(p: &[i64]) -> IntVector {
        IntVector::new(p.to_vec())
    }

    #[test]
    fn k_zero_is_delta() {
        let p = qfun(&iv(&[3, 1]));
        assert_eq!(apply_p_brute(0, 0, &Rho::q(), &p).unwrap(), p);
        assert!(apply_p_brute(0, 2, &Rho::q(), &p).unwrap().is_zero());
    }

    #[test]
    fn examples() {
        let two_t1 = Poly::var(1).scale(&Rational::from_int(2));
        assert_eq!(
            apply_p_brute(1, -1, &Rho::q(), &Poly::one()).unwrap(),
            two_t1
        );
        let q31 = qfun(&iv(&[3, 1]));
        assert_eq!(
            apply_p_brute(2, 0, &Rho::q(), &q31).unwrap(),
            q31.scale(&Rational::from_int(16))
        );
    }

    #[test]
    fn rejects_generic_rho() {
        let rho = Rho::new(Rational::new(1, 2)).unwrap();
        assert!(apply_p_brute(1, 0, &rho, &Poly::one()).is_err());
        assert!(apply_p_brute(1, 0, &Rho::q(), &Poly::var(2)).is_err());
    }

    #[test]
    fn reordered_bilinear_matches_definition() {
        let samples = [
            (Rho::schur(), schur(&iv(&[2, 1]))),
            (Rho::schur(), schur(&iv(&[1]))),
            (Rho::q(), qfun(&iv(&[3, 1]))),
            (Rho::q(), qfun(&iv(&[2]))),
        ];
        for (rho, p) in &samples {
            let basis = basis_of(rho).unwrap();
            for m in -3..=3 {
                let table = star_terms_uncached(basis, m, p);
                let deg = p.degree().unwrap() as i64;
                for b in -deg - 2..=deg + 6 {
                    let fast = table
                        .iter()
                        .find(|(bb, _)| *bb == b)
                        .map(|(_, t)| t.clone())
                        .unwrap_or_else(Poly::zero);
                    assert_eq!(fast, star_literal(b + m, b, rho, p), "m={m} b={b} p={p:?}");
                }
            }
        }
    }

    #[test]
    fn fast_sum_matches_literal_sum() {
        for (rho, p) in [
            (Rho::schur(), schur(&iv(&[2, 1]))),
            (Rho::q(), qfun(&iv(&[2, 1]))),
        ] {
            for k in 1..=4 {
                for m in -3..=3 {
                    assert_eq!(
                        apply_p_brute(k, m, &rho, &p).unwrap(),
                        apply_p_brute_literal(k, m, &rho, &p).unwrap(),
                        "k={k} m={m}"
                    );
                }
            }
        }
    }
}
