//! Vertex operators `B_n`, `B*_n` acting on `Q[t]` for a rational
//! parameter `rho`, and the Hall–Littlewood functions they generate.
//!
//! `B(z) = exp(sum (1-rho^n) t_n z^n) exp(-sum (1/n) d/dt_n z^-n)` and
//! `B*(z) = exp(-sum (1-rho^n) t_n z^n) exp(sum (1/n) d/dt_n z^-n)`.
//! Applied to a polynomial, the derivative exponential produces a finite
//! Laurent polynomial in `z`, so every mode is computed exactly.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::lincomb::Basis;
use crate::partition::IntVector;
use crate::poly::{Monomial, Poly};
use crate::rational::Rational;

/// Deformation parameter; `rho = 1` is excluded.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Rho(Rational);

impl Rho {
    pub fn new(value: Rational) -> Result<Self> {
        if value.is_one() {
            return Err(Error::RhoOne);
        }
        Ok(Rho(value))
    }

    /// `rho = 0`: Schur functions.
    pub fn schur() -> Self {
        Rho(Rational::zero())
    }

    /// `rho = -1`: Schur Q-functions.
    pub fn q() -> Self {
        Rho(-Rational::one())
    }

    pub fn for_basis(basis: Basis) -> Self {
        match basis {
            Basis::Schur => Rho::schur(),
            Basis::Q => Rho::q(),
        }
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn is_schur(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_q(&self) -> bool {
        self.0 == -Rational::one()
    }

    /// `1 - rho^n`.
    pub fn weight(&self, n: usize) -> Rational {
        Rational::one() - self.0.pow(n as i32)
    }
}

/// Coefficients of `z^{-s}` in `exp(sign * sum_n (1/n) d/dt_n z^{-n}) p`,
/// indexed by `s = 0..=deg p`.
pub fn derivative_expansion(p: &Poly, sign: i64) -> Vec<Poly> {
    let deg = p.degree().unwrap_or(0) as usize;
    let mut out = vec![Poly::zero(); deg + 1];
    let mut factors: Vec<(usize, u32)> = Vec::new();
    for (m, c) in p.terms() {
        factors.clear();
        factors.extend(m.factors());
        let mut exps: SmallVec<[u32; 8]> = m.exponents().iter().copied().collect();
        expand_rec(&factors, 0, &mut exps, c.clone(), 0, sign, &mut out);
    }
    out
}

fn expand_rec(
    factors: &[(usize, u32)],
    idx: usize,
    exps: &mut SmallVec<[u32; 8]>,
    coeff: Rational,
    s: usize,
    sign: i64,
    out: &mut [Poly],
) {
    if idx == factors.len() {
        out[s].add_term(Monomial::from_exponents(exps.iter().copied()), coeff);
        return;
    }
    let (n, e) = factors[idx];
    let step = Rational::new(sign, n as i64);
    let mut c = coeff;
    let orig = exps[n - 1];
    for j in 0..=e {
        if j > 0 {
            // binom(e, j) (sign/n)^j, built incrementally
            c = c * Rational::from_int((e - j + 1) as i64) / Rational::from_int(j as i64) * &step;
        }
        exps[n - 1] = orig - j;
        expand_rec(
            factors,
            idx + 1,
            exps,
            c.clone(),
            s + n * j as usize,
            sign,
            out,
        );
    }
    exps[n - 1] = orig;
}

/// Vertex operators for a fixed `rho`, with a cache of the multiplication
/// exponential coefficients.
pub struct VertexOps {
    rho: Rho,
    // [z^r] exp(sum (1-rho^n) t_n z^n) and the same with t -> -t
    creation: Mutex<Vec<Arc<Poly>>>,
    creation_neg: Mutex<Vec<Arc<Poly>>>,
}

impl VertexOps {
    pub fn new(rho: Rho) -> Self {
        VertexOps {
            rho,
            creation: Mutex::new(vec![Arc::new(Poly::one())]),
            creation_neg: Mutex::new(vec![Arc::new(Poly::one())]),
        }
    }

    pub fn rho(&self) -> &Rho {
        &self.rho
    }

    /// `[z^r] exp(sign * sum (1-rho^n) t_n z^n)`, via `r E_r = sum n c_n t_n E_{r-n}`.
    fn creation_coeff(&self, r: usize, negate: bool) -> Arc<Poly> {
        let cache = if negate {
            &self.creation_neg
        } else {
            &self.creation
        };
        let mut table = cache.lock().unwrap();
        while table.len() <= r {
            let k = table.len();
            let mut acc = Poly::zero();
            for n in 1..=k {
                let mut c = self.rho.weight(n) * Rational::from_int(n as i64);
                if c.is_zero() {
                    continue;
                }
                if negate {
                    c = -c;
                }
                acc.add_scaled(&table[k - n].mul_var(n), &c);
            }
            let e = acc.scale(&Rational::new(1, k as i64));
            table.push(Arc::new(e));
        }
        table[r].clone()
    }

    /// `B_n` applied to a polynomial given through its derivative expansion
    /// (see [`derivative_expansion`] with `sign = -1`).
    pub fn b_from_expansion(&self, n: i64, expansion: &[Poly]) -> Poly {
        let mut out = Poly::zero();
        for (s, a) in expansion.iter().enumerate() {
            let r = n + s as i64;
            if r < 0 || a.is_zero() {
                continue;
            }
            let e = self.creation_coeff(r as usize, false);
            out = out + e.mul_poly(a);
        }
        out
    }

    /// `B*_n` applied through the `sign = +1` derivative expansion.
    pub fn b_star_from_expansion(&self, n: i64, expansion: &[Poly]) -> Poly {
        let mut out = Poly::zero();
        for (s, a) in expansion.iter().enumerate() {
            let r = s as i64 - n;
            if r < 0 || a.is_zero() {
                continue;
            }
            let e = self.creation_coeff(r as usize, true);
            out = out + e.mul_poly(a);
        }
        out
    }

    pub fn b(&self, n: i64, p: &Poly) -> Poly {
        if p.is_zero() {
            return Poly::zero();
        }
        // degree of the result would be negative
        if n + (p.degree().unwrap() as i64) < 0 {
            return Poly::zero();
        }
        self.b_from_expansion(n, &derivative_expansion(p, -1))
    }

    pub fn b_star(&self, n: i64, p: &Poly) -> Poly {
        if p.is_zero() {
            return Poly::zero();
        }
        if (p.degree().unwrap() as i64) - n < 0 {
            return Poly::zero();
        }
        self.b_star_from_expansion(n, &derivative_expansion(p, 1))
    }

    /// `H_lambda = B_{lambda_1} ... B_{lambda_l} . 1`.
    pub fn hall_littlewood(&self, lambda: &IntVector) -> Poly {
        let mut p = Poly::one();
        for &part in lambda.parts().iter().rev() {
            p = self.b(part, &p);
            if p.is_zero() {
                break;
            }
        }
        p
    }
}

pub fn apply_b(n: i64, p: &Poly, rho: &Rho) -> Poly {
    VertexOps::new(rho.clone()).b(n, p)
}

pub fn apply_b_star(n: i64, p: &Poly, rho: &Rho) -> Poly {
    VertexOps::new(rho.clone()).b_star(n, p)
}

pub fn hall_littlewood(lambda: &IntVector, rho: &Rho) -> Poly {
    if rho.is_schur() || rho.is_q() {
        let basis = if rho.is_schur() {
            Basis::Schur
        } else {
            Basis::Q
        };
        return (*characters().get(basis, lambda.parts())).clone();
    }
    VertexOps::new(rho.clone()).hall_littlewood(lambda)
}

/// `S_lambda = H_lambda(t; 0)`.
pub fn schur(lambda: &IntVector) -> Poly {
    hall_littlewood(lambda, &Rho::schur())
}

/// `Q_lambda = H_lambda(t; -1)`.
pub fn qfun(lambda: &IntVector) -> Poly {
    hall_littlewood(lambda, &Rho::q())
}

type Memo = Mutex<HashMap<(Basis, Vec<i64>), Arc<Poly>>>;

/// Shared, memoised Schur and Q character polynomials. Each entry is built
/// as `B_{lambda_1}` applied to the cached suffix, so the values are exactly
/// the right-to-left vertex-operator products.
pub struct Characters {
    schur_ops: VertexOps,
    q_ops: VertexOps,
    memo: Memo,
}

impl Characters {
    fn new() -> Self {
        Characters {
            schur_ops: VertexOps::new(Rho::schur()),
            q_ops: VertexOps::new(Rho::q()),
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn ops(&self, basis: Basis) -> &VertexOps {
        match basis {
            Basis::Schur => &self.schur_ops,
            Basis::Q => &self.q_ops,
        }
    }

    pub fn get(&self, basis: Basis, label: &[i64]) -> Arc<Poly> {
        if label.is_empty() {
            return Arc::new(Poly::one());
        }
        let key = (basis, label.to_vec());
        if let Some(p) = self.memo.lock().unwrap().get(&key) {
            return p.clone();
        }
        let tail = self.get(basis, &label[1..]);
        let p = Arc::new(self.ops(basis).b(label[0], &tail));
        self.memo.lock().unwrap().insert(key, p.clone());
        p
    }
}

/// Process-wide character cache.
pub fn characters() -> &'static Characters {
    static CHARS: OnceLock<Characters> = OnceLock::new();
    CHARS.get_or_init(Characters::new)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn mono(pairs: &[(usize, u32)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn rho_one_rejected() {
        assert_eq!(Rho::new(Rational::one()), Err(Error::RhoOne));
    }

    #[test]
    fn b_on_one() {
        for rho in [Rho::schur(), Rho::q(), Rho::new(r(1, 2)).unwrap()] {
            assert_eq!(apply_b(0, &Poly::one(), &rho), Poly::one());
            for n in -4..0 {
                assert!(apply_b(n, &Poly::one(), &rho).is_zero());
            }
            assert_eq!(apply_b_star(0, &Poly::one(), &rho), Poly::one());
            for n in 1..5 {
                assert!(apply_b_star(n, &Poly::one(), &rho).is_zero());
            }
        }
    }

    #[test]
    fn q_side_examples() {
        let q = Rho::q();
        assert_eq!(apply_b(1, &Poly::one(), &q), Poly::var(1).scale(&r(2, 1)));
        let b3 = Poly::from_terms([(mono(&[(3, 1)]), r(2, 1)), (mono(&[(1, 3)]), r(4, 3))]);
        assert_eq!(apply_b(3, &Poly::one(), &q), b3);
        assert_eq!(
            apply_b_star(-1, &Poly::one(), &q),
            Poly::var(1).scale(&r(-2, 1))
        );
        let q21 = Poly::from_terms([(mono(&[(1, 3)]), r(4, 3)), (mono(&[(3, 1)]), r(-4, 1))]);
        assert_eq!(qfun(&IntVector::new(vec![2, 1])), q21);
    }

    #[test]
    fn schur_side_examples() {
        let s2 = Poly::from_terms([(mono(&[(2, 1)]), r(1, 1)), (mono(&[(1, 2)]), r(1, 2))]);
        assert_eq!(schur(&IntVector::new(vec![2])), s2);
        // B*_{-2} . 1 = S_(1,1) = t1^2/2 - t2
        let s11 = Poly::from_terms([(mono(&[(1, 2)]), r(1, 2)), (mono(&[(2, 1)]), r(-1, 1))]);
        assert_eq!(apply_b_star(-2, &Poly::one(), &Rho::schur()), s11);
        assert_eq!(schur(&IntVector::new(vec![1, 1])), s11);
    }

    #[test]
    fn hall_littlewood_basics() {
        for rho in [Rho::schur(), Rho::q(), Rho::new(r(-1, 3)).unwrap()] {
            assert_eq!(hall_littlewood(&IntVector::empty(), &rho), Poly::one());
            let h = hall_littlewood(&IntVector::new(vec![3, 1, 2]), &rho);
            assert!(h.is_homogeneous_of(6));
            assert!(hall_littlewood(&IntVector::new(vec![2, -1]), &rho).is_zero());
            assert_eq!(
                hall_littlewood(&IntVector::new(vec![2, 1, 0]), &rho),
                hall_littlewood(&IntVector::new(vec![2, 1]), &rho)
            );
        }
    }

    #[test]
    fn derivative_expansion_of_monomial() {
        // exp(-d1 z^-1) t1^2 = t1^2 - 2 t1 z^-1 + z^-2
        let e = derivative_expansion(&Poly::term(mono(&[(1, 2)]), r(1, 1)), -1);
        assert_eq!(e.len(), 3);
        assert_eq!(e[0], Poly::term(mono(&[(1, 2)]), r(1, 1)));
        assert_eq!(e[1], Poly::var(1).scale(&r(-2, 1)));
        assert_eq!(e[2], Poly::one());
    }
}
