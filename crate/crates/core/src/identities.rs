//! Finite-instance checkers for the identities behind the tau-function
//! results: the `D_i` operators on `A`, the quantities Phi, Gamma and Psi,
//! the hook-strip lemma and the action of `B*_n` on Schur functions.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::inner::{expand_in_basis, lincomb_to_poly, q_inner};
use crate::lincomb::{Basis, LinComb};
use crate::partition::IntVector;
use crate::poly::Poly;
use crate::rational::Rational;
use crate::straighten::straighten_schur;
use crate::tau::a_coeff;
use crate::vertex::{apply_b_star, characters, schur, Rho};
use crate::wops::explicit::hook_extension;
use crate::wops::{apply_named, NamedOp};

/// A word in the `D_i`, e.g. `D1^2 D3`. Factors are stored left to right
/// with 0-based indices; the rightmost factor acts first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DWord(pub Vec<(usize, u32)>);

impl DWord {
    pub fn single(i: usize) -> Self {
        DWord(vec![(i, 1)])
    }

    pub fn new(factors: Vec<(usize, u32)>) -> Self {
        DWord(factors)
    }
}

impl fmt::Display for DWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in &self.0 {
            write!(f, "D{}", i + 1)?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Parses `D1^2D3` style words (1-based indices).
impl FromStr for DWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad D-word {s:?}"));
        let mut factors = Vec::new();
        for chunk in s.split('D').skip(1) {
            let chunk = chunk.trim();
            let (idx, exp) = match chunk.split_once('^') {
                Some((i, e)) => (i, e.parse::<u32>().map_err(|_| bad())?),
                None => (chunk, 1),
            };
            let idx: usize = idx.parse().map_err(|_| bad())?;
            if idx == 0 || exp == 0 {
                return Err(bad());
            }
            factors.push((idx - 1, exp));
        }
        if factors.is_empty() && !s.trim().is_empty() {
            return Err(bad());
        }
        Ok(DWord(factors))
    }
}

/// `word . A_mu`, where `D_i A_mu = A_{mu - 2e_i} / (mu_i - 1)`.
pub fn apply_d(word: &DWord, mu: &IntVector) -> Result<Rational> {
    let mut label = mu.parts().to_vec();
    let mut den = Rational::one();
    for &(i, e) in word.0.iter().rev() {
        if i >= label.len() {
            return Err(Error::InvalidArgument(format!(
                "D_{} out of range for {mu:?}",
                i + 1
            )));
        }
        for _ in 0..e {
            let d = label[i] - 1;
            if d == 0 {
                return Err(Error::ZeroDenominator {
                    index: i + 1,
                    label: label.clone(),
                });
            }
            den = den * Rational::from_int(d);
            label[i] -= 2;
        }
    }
    Ok(a_coeff(&IntVector::new(label)) / den)
}

fn d_word(pairs: &[(usize, u32)], mu: &IntVector) -> Result<Rational> {
    apply_d(&DWord::new(pairs.to_vec()), mu)
}

/// `D A_mu = sum_i D_i A_mu`.
pub fn d_total(mu: &IntVector) -> Result<Rational> {
    let mut acc = Rational::zero();
    for i in 0..mu.len() {
        acc += d_word(&[(i, 1)], mu)?;
    }
    Ok(acc)
}

/// `D^2 A_mu = sum_{a,b} D_a D_b A_mu`.
pub fn d2_total(mu: &IntVector) -> Result<Rational> {
    let mut acc = Rational::zero();
    for a in 0..mu.len() {
        for b in 0..mu.len() {
            acc += d_word(&[(a, 1), (b, 1)], mu)?;
        }
    }
    Ok(acc)
}

/// `Phi(mu) = 3|mu| A_{2mu} - 6 sum_i (2mu_i-1)(2mu_i-5) D_i^3 A_{2mu}
///   + 24 sum_{i!=j} D_i^2 D_j A_{2mu} + 8 sum_{i,j,k distinct} D_i D_j D_k A_{2mu}`.
pub fn phi(mu: &IntVector) -> Result<Rational> {
    let two_mu = mu.scaled(2);
    let l = mu.len();
    let p = mu.parts();
    let mut acc = Rational::from_int(3 * mu.weight()) * a_coeff(&two_mu);
    for i in 0..l {
        let c = Rational::from_int(-6 * (2 * p[i] - 1) * (2 * p[i] - 5));
        acc += c * d_word(&[(i, 3)], &two_mu)?;
        for j in 0..l {
            if j == i {
                continue;
            }
            acc += Rational::from_int(24) * d_word(&[(i, 2), (j, 1)], &two_mu)?;
            for k in 0..l {
                if k == i || k == j {
                    continue;
                }
                acc += Rational::from_int(8) * d_word(&[(i, 1), (j, 1), (k, 1)], &two_mu)?;
            }
        }
    }
    Ok(acc)
}

/// `(2 nu_i, 2 nu_j)` and `2 nu` with components `i`, `j` removed.
fn split(nu: &IntVector, i: usize, j: usize) -> (IntVector, IntVector) {
    let p = nu.parts();
    (
        IntVector::new(vec![2 * p[i], 2 * p[j]]),
        nu.without(&[i, j]).scaled(2),
    )
}

/// Sign `(-1)^{i+j+delta_{j>i}}` with 1-based `i`, `j`.
fn pair_sign(i: usize, j: usize) -> Rational {
    let e = (i + 1) + (j + 1) + usize::from(j > i);
    Rational::sign_pow(e as i64)
}

fn require_even_length(nu: &IntVector, min: usize) -> Result<()> {
    if !nu.len().is_multiple_of(2) || nu.len() < min {
        return Err(Error::InvalidArgument(format!(
            "need even length >= {min}, got {nu:?}"
        )));
    }
    Ok(())
}

/// `Gamma(nu) = sum_{i!=j} (-1)^{i+j+delta_{j>i}} DA_{(2nu_i,2nu_j)} DA_{2nu^{i,j}}`.
pub fn gamma(nu: &IntVector) -> Result<Rational> {
    require_even_length(nu, 4)?;
    let l = nu.len();
    let mut acc = Rational::zero();
    for i in 0..l {
        for j in 0..l {
            if i == j {
                continue;
            }
            let (pair, rest) = split(nu, i, j);
            acc += pair_sign(i, j) * d_total(&pair)? * d_total(&rest)?;
        }
    }
    Ok(acc)
}

/// `Psi(nu) = sum_{i<l} (-1)^{i+1} (DA_{(2nu_i,2nu_l)} D^2A_{2nu^{i,l}}
///   + D^2A_{(2nu_i,2nu_l)} DA_{2nu^{i,l}})`.
pub fn psi(nu: &IntVector) -> Result<Rational> {
    require_even_length(nu, 4)?;
    let l = nu.len();
    let mut acc = Rational::zero();
    for i in 0..l - 1 {
        let (pair, rest) = split(nu, i, l - 1);
        let term = d_total(&pair)? * d2_total(&rest)? + d2_total(&pair)? * d_total(&rest)?;
        acc += Rational::sign_pow(i as i64 + 2) * term;
    }
    Ok(acc)
}

/// Both sides of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sides<T> {
    pub lhs: T,
    pub rhs: T,
}

impl<T: PartialEq> Sides<T> {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// The four expansions of `DA_{2nu}` and `D^2 A_{2nu}` along the last
/// components. The two halved forms need `nu_l >= 1` and `nu_l >= 2`
/// respectively and are `None` otherwise.
pub struct DExpansion {
    pub d: Sides<Rational>,
    pub dd: Sides<Rational>,
    pub d_half: Option<Sides<Rational>>,
    pub dd_half: Option<Sides<Rational>>,
}

impl DExpansion {
    pub fn holds(&self) -> bool {
        self.d.holds()
            && self.dd.holds()
            && self.d_half.as_ref().is_none_or(Sides::holds)
            && self.dd_half.as_ref().is_none_or(Sides::holds)
    }
}

pub fn d_expansion(nu: &IntVector) -> Result<DExpansion> {
    require_even_length(nu, 4)?;
    let l = nu.len();
    let two_nu = nu.scaled(2);
    let a = |v: &IntVector| a_coeff(v);

    let mut d_rhs = Rational::zero();
    let mut dd_rhs = Rational::zero();
    for j in 0..l - 1 {
        let (pair, rest) = split(nu, j, l - 1);
        let sign = Rational::sign_pow(j as i64 + 2);
        d_rhs += &sign * (a(&pair) * d_total(&rest)? + d_total(&pair)? * a(&rest));
        dd_rhs += sign
            * (d2_total(&pair)? * a(&rest)
                + Rational::from_int(2) * d_total(&pair)? * d_total(&rest)?
                + a(&pair) * d2_total(&rest)?);
    }

    let last = nu.parts()[l - 1];
    let half = Rational::new(1, 2);
    let mut d_half = None;
    let mut dd_half = None;
    if last >= 1 {
        let mut acc = Rational::zero();
        let mut acc2 = Rational::zero();
        for i in 0..l {
            for j in 0..l {
                if i == j {
                    continue;
                }
                let (pair, rest) = split(nu, i, j);
                let sign = pair_sign(i, j);
                acc += &sign * d_total(&pair)? * a(&rest);
                acc2 += sign * (d2_total(&pair)? * a(&rest) + d_total(&pair)? * d_total(&rest)?);
            }
        }
        d_half = Some(Sides {
            lhs: d_total(&two_nu)?,
            rhs: &half * acc,
        });
        if last >= 2 {
            dd_half = Some(Sides {
                lhs: d2_total(&two_nu)?,
                rhs: &half * acc2,
            });
        }
    }
    Ok(DExpansion {
        d: Sides {
            lhs: d_total(&two_nu)?,
            rhs: d_rhs,
        },
        dd: Sides {
            lhs: d2_total(&two_nu)?,
            rhs: dd_rhs,
        },
        d_half,
        dd_half,
    })
}

/// `S_{(lambda, n, 1^m)}` against `delta_{m,-n} (-1)^m S_lambda`, both as
/// polynomials.
pub fn check_hook_lemma(lambda: &IntVector, n: i64, m: i64) -> Result<Sides<Poly>> {
    if n > 0 || m < 0 {
        return Err(Error::InvalidArgument(format!(
            "hook lemma needs n <= 0 and m >= 0, got n={n} m={m}"
        )));
    }
    let lhs = schur(&hook_extension(lambda, n, m));
    let rhs = if m == -n {
        schur(lambda).scale(&Rational::sign_pow(m))
    } else {
        Poly::zero()
    };
    Ok(Sides { lhs, rhs })
}

/// `B*_n S_lambda = delta_{n<=-l} (-1)^n S_{(lambda+1^l, 1^{-n-l})}
///   + sum_i delta_{lambda_i, n+i-1} (-1)^{i-1} S_{lambda^{i} + (1^{i-1}, 0^{l-i})}`.
pub fn bstar_on_schur_closed(n: i64, lambda: &IntVector) -> LinComb {
    let p = lambda.parts();
    let l = p.len() as i64;
    let mut out = LinComb::zero(Basis::Schur);
    if n <= -l {
        let mut v: Vec<i64> = p.iter().map(|x| x + 1).collect();
        v.extend(std::iter::repeat_n(1, (-n - l) as usize));
        out.add_scaled(
            &straighten_schur(&IntVector::new(v)),
            &Rational::sign_pow(n),
        );
    }
    for (i, &x) in p.iter().enumerate() {
        if x != n + i as i64 {
            continue;
        }
        let mut v = lambda.without(&[i]).0;
        for y in v.iter_mut().take(i) {
            *y += 1;
        }
        out.add_scaled(
            &straighten_schur(&IntVector::new(v)),
            &Rational::sign_pow(i as i64),
        );
    }
    out
}

/// The closed `B*_n S_lambda` against the vertex-operator action expanded
/// in the Schur basis.
pub fn check_bstar_on_schur(n: i64, lambda: &IntVector) -> Result<Sides<LinComb>> {
    let direct = apply_b_star(n, &schur(lambda), &Rho::schur());
    Ok(Sides {
        lhs: bstar_on_schur_closed(n, lambda),
        rhs: expand_in_basis(&direct, Basis::Schur)?,
    })
}

/// `<(W_KW)^perp Q_mu, f>` against `<Q_mu, W_KW f>`.
pub fn check_adjoint(mu: &[i64], f: &Poly) -> Result<Sides<Rational>> {
    let q = characters().get(Basis::Q, mu);
    Ok(Sides {
        lhs: q_inner(&apply_named(NamedOp::WKWperp, &q)?, f)?,
        rhs: q_inner(&q, &apply_named(NamedOp::WKW, f)?)?,
    })
}

/// The closed `(W_KW)^perp` action against the differential operator.
pub fn check_wkw_perp(mu: &IntVector) -> Result<Sides<Poly>> {
    let closed = crate::wops::explicit::wkw_perp_on_q(mu);
    Ok(Sides {
        lhs: lincomb_to_poly(&closed),
        rhs: apply_named(NamedOp::WKWperp, &characters().get(Basis::Q, mu.parts()))?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(p: &[i64]) -> IntVector {
        IntVector::new(p.to_vec())
    }

    #[test]
    fn d_examples() {
        assert_eq!(
            apply_d(&DWord::single(0), &iv(&[6, 2])).unwrap(),
            Rational::new(4, 45)
        );
        assert_eq!(
            apply_d(&DWord::single(1), &iv(&[4, 2])).unwrap(),
            Rational::zero()
        );
        assert_eq!(
            apply_d(&DWord::new(vec![(0, 3)]), &iv(&[6, 2])).unwrap(),
            Rational::zero()
        );
        assert!(matches!(
            apply_d(&DWord::single(0), &iv(&[1, 2])),
            Err(Error::ZeroDenominator { .. })
        ));
        let w: DWord = "D1^2D3".parse().unwrap();
        assert_eq!(w, DWord::new(vec![(0, 2), (2, 1)]));
        assert_eq!(w.to_string(), "D1^2D3");
    }

    #[test]
    fn vanishing_examples() {
        for mu in [&[2, 1][..], &[3, 2, 1, 0], &[1, 0]] {
            assert!(phi(&iv(mu)).unwrap().is_zero(), "phi {mu:?}");
        }
        for nu in [&[3, 2, 1, 0][..], &[4, 3, 2, 1], &[5, 4, 3, 2, 1, 0]] {
            assert!(gamma(&iv(nu)).unwrap().is_zero(), "gamma {nu:?}");
        }
        for nu in [&[3, 2, 1, 0][..], &[4, 3, 2, 0], &[5, 4, 2, 1]] {
            assert!(psi(&iv(nu)).unwrap().is_zero(), "psi {nu:?}");
        }
        assert!(gamma(&iv(&[3, 2])).is_err());
    }

    #[test]
    fn d_expansion_instances() {
        for nu in [&[3, 2, 1, 0][..], &[5, 3, 2, 1], &[6, 4, 3, 2]] {
            let e = d_expansion(&iv(nu)).unwrap();
            assert!(e.holds(), "{nu:?}");
        }
    }

    #[test]
    fn hook_examples() {
        let lam = iv(&[2, 1]);
        let s = check_hook_lemma(&lam, -2, 2).unwrap();
        assert!(s.holds());
        assert_eq!(s.lhs, schur(&lam));
        assert!(check_hook_lemma(&lam, 0, 0).unwrap().holds());
        let s = check_hook_lemma(&lam, -1, 2).unwrap();
        assert!(s.holds() && s.lhs.is_zero());
    }

    #[test]
    fn bstar_examples() {
        assert_eq!(
            bstar_on_schur_closed(0, &iv(&[])),
            LinComb::unit(Basis::Schur)
        );
        assert_eq!(
            bstar_on_schur_closed(-2, &iv(&[])),
            LinComb::single(Basis::Schur, vec![1, 1], Rational::one())
        );
        assert_eq!(
            bstar_on_schur_closed(2, &iv(&[2])),
            LinComb::unit(Basis::Schur)
        );
        for n in -3..=3 {
            for lam in [&[][..], &[1], &[2, 1], &[3, 1, 1]] {
                assert!(
                    check_bstar_on_schur(n, &iv(lam)).unwrap().holds(),
                    "n={n} {lam:?}"
                );
            }
        }
    }
}
