//! Normal-ordered products of current modes acting on polynomials.
//!
//! `J_{-n} = (1 - rho^n) n t_n` and `J_n = d/dt_n` for `n > 0`, `J_0 = 0`.
//! At `rho = -1` only odd modes are used.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly};
use crate::rational::Rational;
use crate::vertex::Rho;

/// The current `J(z; rho)`.
pub struct Current {
    rho: Rho,
    odd_only: bool,
}

impl Current {
    pub fn new(rho: Rho) -> Self {
        let odd_only = rho.is_q();
        Current { rho, odd_only }
    }

    /// The hatted current at `rho = -1`.
    pub fn hatted() -> Self {
        Current::new(Rho::q())
    }

    /// The Schur current at `rho = 0`.
    pub fn schur() -> Self {
        Current::new(Rho::schur())
    }

    pub fn rho(&self) -> &Rho {
        &self.rho
    }

    fn allowed(&self, n: i64) -> bool {
        n != 0 && (!self.odd_only || n.rem_euclid(2) == 1)
    }

    /// Coefficient of `t_n` in `J_{-n}`.
    fn creation_weight(&self, n: i64) -> Rational {
        self.rho.weight(n as usize) * Rational::from_int(n)
    }

    pub fn check_input(&self, p: &Poly) -> Result<()> {
        if self.odd_only {
            p.require_odd_supported()?;
        }
        Ok(())
    }

    /// `sum c(i_1..i_r) :J_{i_1} ... J_{i_r}: p` over ordered tuples with
    /// `i_1 + ... + i_r = m`.
    pub fn normal_ordered<F>(&self, p: &Poly, r: usize, m: i64, coeff: F) -> Poly
    where
        F: Fn(&[i64]) -> Rational,
    {
        let Some(deg) = p.degree() else {
            return Poly::zero();
        };
        let deg = deg as i64;
        if r == 0 {
            return if m == 0 {
                p.scale(&coeff(&[]))
            } else {
                Poly::zero()
            };
        }
        // annihilators sum to at most deg p, so creators sum to at most deg p - m
        let lo = -(deg - m).max(0);
        let hi = deg;

        // (sorted annihilators, sorted creators) -> summed coefficient
        let mut grouped: HashMap<(Vec<i64>, Vec<i64>), Rational> = HashMap::new();
        let mut tuple = vec![0i64; r];
        self.enumerate(&mut tuple, 0, 0, m, lo, hi, deg, &coeff, &mut grouped);

        let mut lowered: HashMap<Vec<i64>, Poly> = HashMap::new();
        let mut out = Poly::zero();
        for ((ann, cre), c) in grouped {
            if c.is_zero() {
                continue;
            }
            let d = lowered.entry(ann.clone()).or_insert_with(|| {
                ann.iter()
                    .fold(p.clone(), |acc, &n| acc.partial(n as usize))
            });
            if d.is_zero() {
                continue;
            }
            let mut w = c;
            for &n in &cre {
                w = w * self.creation_weight(n);
            }
            if w.is_zero() {
                continue;
            }
            let mono = Monomial::from_pairs(cre.iter().map(|&n| (n as usize, 1)));
            out.add_scaled(&d.mul_term(&mono, &Rational::one()), &w);
        }
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn enumerate<F>(
        &self,
        tuple: &mut Vec<i64>,
        pos: usize,
        partial_sum: i64,
        m: i64,
        lo: i64,
        hi: i64,
        deg: i64,
        coeff: &F,
        grouped: &mut HashMap<(Vec<i64>, Vec<i64>), Rational>,
    ) where
        F: Fn(&[i64]) -> Rational,
    {
        let r = tuple.len();
        let ann_sum: i64 = tuple[..pos].iter().filter(|&&x| x > 0).sum();
        if ann_sum > deg {
            return;
        }
        if pos + 1 == r {
            let last = m - partial_sum;
            if last < lo || last > hi || !self.allowed(last) {
                return;
            }
            if last > 0 && ann_sum + last > deg {
                return;
            }
            tuple[pos] = last;
            let c = coeff(tuple);
            if c.is_zero() {
                return;
            }
            let mut ann: Vec<i64> = tuple.iter().copied().filter(|&x| x > 0).collect();
            let mut cre: Vec<i64> = tuple.iter().filter(|&&x| x < 0).map(|&x| -x).collect();
            ann.sort_unstable();
            cre.sort_unstable();
            *grouped.entry((ann, cre)).or_insert_with(Rational::zero) += c;
            return;
        }
        for x in lo..=hi {
            if !self.allowed(x) {
                continue;
            }
            tuple[pos] = x;
            self.enumerate(
                tuple,
                pos + 1,
                partial_sum + x,
                m,
                lo,
                hi,
                deg,
                coeff,
                grouped,
            );
        }
    }

    /// `sum_{i_1+...+i_r=m} :J_{i_1} ... J_{i_r}: p`.
    pub fn power(&self, p: &Poly, r: usize, m: i64) -> Poly {
        self.normal_ordered(p, r, m, |_| Rational::one())
    }
}

/// `P^(k)_m p` for `k <= 3` through the normal-ordered expansions
/// `P1 = J`, `P2 = :J^2: + dJ`, `P3 = :J^3: + 3:J dJ: + d^2 J`.
pub fn apply_p_modes(k: u32, m: i64, rho: &Rho, p: &Poly) -> Result<Poly> {
    let cur = Current::new(rho.clone());
    cur.check_input(p)?;
    let mf = Rational::from_int(m);
    let one = Rational::one();
    Ok(match k {
        0 => {
            if m == 0 {
                p.clone()
            } else {
                Poly::zero()
            }
        }
        1 => cur.power(p, 1, m),
        2 => {
            let mut out = cur.power(p, 2, m);
            out.add_scaled(&cur.power(p, 1, m), &-(&mf + &one));
            out
        }
        3 => {
            let mut out = cur.power(p, 3, m);
            let mixed = cur.normal_ordered(p, 2, m, |t| Rational::from_int(-t[1] - 1));
            out.add_scaled(&mixed, &Rational::from_int(3));
            out.add_scaled(
                &cur.power(p, 1, m),
                &((&mf + &one) * (&mf + Rational::from_int(2))),
            );
            out
        }
        _ => return Err(Error::ModesUnavailable(k as usize)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::IntVector;
    use crate::vertex::qfun;

    #[test]
    fn examples() {
        let p = qfun(&IntVector::new(vec![2, 1]));
        assert!(apply_p_modes(1, 4, &Rho::q(), &p).unwrap().is_zero());
        assert_eq!(
            apply_p_modes(1, -1, &Rho::schur(), &Poly::one()).unwrap(),
            Poly::var(1)
        );
        let q1 = qfun(&IntVector::new(vec![1]));
        assert_eq!(
            apply_p_modes(2, 0, &Rho::q(), &q1).unwrap(),
            q1.scale(&Rational::from_int(4))
        );
        assert!(matches!(
            apply_p_modes(4, 0, &Rho::q(), &q1),
            Err(Error::ModesUnavailable(4))
        ));
    }

    #[test]
    fn heisenberg() {
        let p = Poly::var(1).mul_poly(&Poly::var(3)) + Poly::var(1).mul_var(1).mul_var(2)
            - Poly::var(5).scale(&Rational::new(2, 3));
        for rho in [Rho::schur(), Rho::new(Rational::new(1, 2)).unwrap()] {
            for m in 1..=4 {
                let a =
                    apply_p_modes(1, m, &rho, &apply_p_modes(1, -m, &rho, &p).unwrap()).unwrap();
                let b =
                    apply_p_modes(1, -m, &rho, &apply_p_modes(1, m, &rho, &p).unwrap()).unwrap();
                let expect = p.scale(&(rho.weight(m as usize) * Rational::from_int(m)));
                assert_eq!(a - b, expect);
            }
        }
    }
}
