//! Named operators built from the current: Virasoro, cut-and-join and the
//! quartic `N`, together with their closed actions on labels.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lincomb::{Basis, LinComb};
use crate::partition::IntVector;
use crate::poly::Poly;
use crate::rational::Rational;

use super::closed::{apply_p_closed_q, apply_p_closed_s};
use super::modes::Current;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedOp {
    /// Schur-side Virasoro `L_m = 1/2 :J^2:_m`.
    L(i64),
    /// `Lhat_m = 1/2 Phat^(2)_{2m}`.
    Lhat(i64),
    /// Schur-side `W_m = 1/3 :J^3:_m`.
    W(i64),
    /// `What_m = 1/3 :Jhat^3:_m`, odd `m`.
    What(i64),
    /// `Nhat_m = 1/4 :Jhat^4 - (dJhat)^2:_m`, even `m`.
    Nhat(i64),
    W0,
    WBGW,
    WKW,
    WKWperp,
    What3,
}

impl NamedOp {
    pub const NAMES: [&'static str; 10] = [
        "L", "Lhat", "W", "What", "Nhat", "W0", "WBGW", "WKW", "WKWperp", "What3",
    ];

    /// Build from a name and an optional mode index, checking parity.
    pub fn parse(name: &str, m: Option<i64>) -> Result<Self> {
        let need_m = || m.ok_or_else(|| Error::InvalidArgument(format!("operator {name} needs m")));
        let op = match name {
            "L" => NamedOp::L(need_m()?),
            "Lhat" => NamedOp::Lhat(need_m()?),
            "W" => NamedOp::W(need_m()?),
            "What" => NamedOp::What(need_m()?),
            "Nhat" => NamedOp::Nhat(need_m()?),
            "W0" => NamedOp::W0,
            "WBGW" => NamedOp::WBGW,
            "WKW" => NamedOp::WKW,
            "WKWperp" => NamedOp::WKWperp,
            "What3" => NamedOp::What3,
            _ => return Err(Error::InvalidArgument(format!("unknown operator {name:?}"))),
        };
        op.validate()?;
        Ok(op)
    }

    pub fn validate(self) -> Result<()> {
        match self {
            NamedOp::What(m) if m.rem_euclid(2) != 1 => Err(Error::Parity {
                name: "What",
                parity: "odd",
                m,
            }),
            NamedOp::Nhat(m) if m.rem_euclid(2) != 0 => Err(Error::Parity {
                name: "Nhat",
                parity: "even",
                m,
            }),
            _ => Ok(()),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            NamedOp::L(_) => "L",
            NamedOp::Lhat(_) => "Lhat",
            NamedOp::W(_) => "W",
            NamedOp::What(_) => "What",
            NamedOp::Nhat(_) => "Nhat",
            NamedOp::W0 => "W0",
            NamedOp::WBGW => "WBGW",
            NamedOp::WKW => "WKW",
            NamedOp::WKWperp => "WKWperp",
            NamedOp::What3 => "What3",
        }
    }

    /// Hatted operators act on Q-functions, the others on Schur functions.
    pub fn basis(self) -> Basis {
        match self {
            NamedOp::L(_) | NamedOp::W(_) | NamedOp::W0 => Basis::Schur,
            _ => Basis::Q,
        }
    }
}

impl fmt::Display for NamedOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedOp::L(m)
            | NamedOp::Lhat(m)
            | NamedOp::W(m)
            | NamedOp::What(m)
            | NamedOp::Nhat(m) => {
                write!(f, "{}_{}", self.name(), m)
            }
            _ => write!(f, "{}", self.name()),
        }
    }
}

/// `NAME` or `NAME_m`, e.g. `Lhat_-1`.
impl FromStr for NamedOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('_') {
            Some((name, m)) => {
                let m = m
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad mode index in {s:?}")))?;
                NamedOp::parse(name, Some(m))
            }
            None => NamedOp::parse(s, None),
        }
    }
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// `Lhat_m` from its explicit differential-operator form.
fn lhat(m: i64, p: &Poly) -> Poly {
    let mut out = Poly::zero();
    let Some(deg) = p.degree() else {
        return out;
    };
    let deg = deg as i64;
    // sum_{a odd > max(0,-2m)} 2a t_a d/dt_{a+2m}
    let mut a = (-2 * m).max(0) + 1;
    if a % 2 == 0 {
        a += 1;
    }
    while a + 2 * m <= deg {
        let d = p.partial((a + 2 * m) as usize);
        out.add_scaled(&d.mul_var(a as usize), &Rational::from_int(2 * a));
        a += 2;
    }
    if m > 0 {
        for k in (1..2 * m).step_by(2) {
            let d = p.partial(k as usize).partial((2 * m - k) as usize);
            out.add_scaled(&d, &r(1, 2));
        }
    }
    if m < 0 {
        for k in (1..-2 * m).step_by(2) {
            let t = p.mul_var(k as usize).mul_var((-2 * m - k) as usize);
            out.add_scaled(&t, &Rational::from_int(2 * k * (-2 * m - k)));
        }
    }
    out
}

fn what(m: i64, p: &Poly) -> Poly {
    Current::hatted().power(p, 3, m).scale(&r(1, 3))
}

fn nhat(m: i64, p: &Poly) -> Poly {
    let cur = Current::hatted();
    let quartic = cur.power(p, 4, m);
    let grad = cur.normal_ordered(p, 2, m, |t| Rational::from_int((t[0] + 1) * (t[1] + 1)));
    (quartic - grad).scale(&r(1, 4))
}

/// The differential-operator action of a named operator on a polynomial.
pub fn apply_named(op: NamedOp, p: &Poly) -> Result<Poly> {
    op.validate()?;
    if op.basis() == Basis::Q {
        p.require_odd_supported()?;
    }
    let schur = Current::schur();
    Ok(match op {
        NamedOp::L(m) => schur.power(p, 2, m).scale(&r(1, 2)),
        NamedOp::W(m) => schur.power(p, 3, m).scale(&r(1, 3)),
        NamedOp::W0 => schur.power(p, 3, 0).scale(&r(1, 3)),
        NamedOp::Lhat(m) => lhat(m, p),
        NamedOp::What(m) => what(m, p),
        NamedOp::What3 => what(3, p),
        NamedOp::Nhat(m) => nhat(m, p),
        NamedOp::WBGW => {
            let mut out = what(-1, p).scale(&r(1, 4));
            out.add_scaled(&p.mul_var(1), &r(1, 8));
            out
        }
        NamedOp::WKW => {
            let mut out = what(-3, p).scale(&r(1, 12));
            out.add_scaled(&p.mul_var(1).mul_var(1).mul_var(1), &r(-1, 18));
            out.add_scaled(&p.mul_var(3), &r(1, 8));
            out
        }
        NamedOp::WKWperp => {
            let mut out = what(3, p).scale(&r(1, 12));
            out.add_scaled(&p.partial_pow(1, 3), &r(-1, 144));
            out.add_scaled(&p.partial(3), &r(1, 48));
            out
        }
    })
}

/// `sum_j c_j P^(k_j)_m` applied to every label of `lc`.
fn combine(lc: &LinComb, m: i64, parts: &[(u32, Rational)]) -> LinComb {
    lc.flat_map(|label| {
        let lam = IntVector::new(label.to_vec());
        let mut out = LinComb::zero(lc.basis());
        for (k, c) in parts {
            let term = match lc.basis() {
                Basis::Q => apply_p_closed_q(*k, m, &lam),
                Basis::Schur => apply_p_closed_s(*k, m, &lam),
            };
            out.add_scaled(&term, c);
        }
        out
    })
}

/// `1/3 P3_m + (m+2)/2 P2_m + (m+1)(m+2)/6 P1_m`.
fn cubic_parts(m: i64) -> Vec<(u32, Rational)> {
    vec![(3, r(1, 3)), (2, r(m + 2, 2)), (1, r((m + 1) * (m + 2), 6))]
}

/// The closed action on `F_lambda`, assembled from the closed actions of
/// `P^(k)_m`, with multiplication and derivation parts written as
/// `t_n = P1_{-n} / (2n)` and `d/dt_n = P1_n` for odd `n`.
pub fn closed_action_named(op: NamedOp, lambda: &IntVector) -> Result<LinComb> {
    op.validate()?;
    let start = crate::straighten::straighten(op.basis(), lambda);
    let hat_t = |lc: &LinComb, n: i64| combine(lc, -n, &[(1, r(1, 2 * n))]);
    let hat_d = |lc: &LinComb, n: i64| combine(lc, n, &[(1, Rational::one())]);
    Ok(match op {
        NamedOp::L(m) => combine(&start, m, &[(2, r(1, 2)), (1, r(m + 1, 2))]),
        NamedOp::W(m) => combine(&start, m, &cubic_parts(m)),
        NamedOp::W0 => combine(&start, 0, &cubic_parts(0)),
        NamedOp::Lhat(m) => combine(&start, 2 * m, &[(2, r(1, 2))]),
        NamedOp::What(m) => combine(&start, m, &cubic_parts(m)),
        NamedOp::What3 => combine(&start, 3, &cubic_parts(3)),
        NamedOp::Nhat(m) => combine(
            &start,
            m,
            &[(4, r(1, 4)), (3, r(m + 3, 2)), (2, r((m + 2) * (m + 3), 4))],
        ),
        NamedOp::WBGW => {
            let mut out = combine(&start, -1, &cubic_parts(-1)).scale(&r(1, 4));
            out.add_scaled(&hat_t(&start, 1), &r(1, 8));
            out
        }
        NamedOp::WKW => {
            let mut out = combine(&start, -3, &cubic_parts(-3)).scale(&r(1, 12));
            let t1_cubed = hat_t(&hat_t(&hat_t(&start, 1), 1), 1);
            out.add_scaled(&t1_cubed, &r(-1, 18));
            out.add_scaled(&hat_t(&start, 3), &r(1, 8));
            out
        }
        NamedOp::WKWperp => {
            let mut out = combine(&start, 3, &cubic_parts(3)).scale(&r(1, 12));
            let d1_cubed = hat_d(&hat_d(&hat_d(&start, 1), 1), 1);
            out.add_scaled(&d1_cubed, &r(-1, 144));
            out.add_scaled(&hat_d(&start, 3), &r(1, 48));
            out
        }
    })
}
