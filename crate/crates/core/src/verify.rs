//! Exact verification sweeps. Each check compares two independent
//! computations and records counterexamples as JSON payloads.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::identities::{
    check_adjoint, check_bstar_on_schur, check_hook_lemma, check_wkw_perp, d_expansion, d_total,
    gamma, phi, psi,
};
use crate::inner::{expand_in_basis, lincomb_to_poly};
use crate::json::{lincomb_to_json, poly_to_json};
use crate::lincomb::{Basis, LinComb};
use crate::partition::{int_vectors, partitions_up_to, strict_partitions_up_to, IntVector};
use crate::poly::{Monomial, Poly, VarAssignment};
use crate::rational::{factorial, Rational};
use crate::straighten::straighten;
use crate::tau::{
    a_coeff, a_pair_closed, a_pfaffian, a_small, chain_count, double_fact, e_coeff, tau_bgw,
    tau_kw, Method, Series,
};
use crate::vertex::{apply_b, apply_b_star, characters, Rho};
use crate::wops::explicit::{
    l_on_schur, lhat_on_q, nhat_on_q, w_on_schur, wbgw_boxes, what_on_q, wkw_perp_on_q,
};
use crate::wops::{
    apply_named, apply_p_brute, apply_p_closed, apply_p_modes, coeff_c, coeff_d, coeff_g, coeff_h,
    NamedOp,
};

/// Counterexamples kept per check; the failure count is always exact.
const MAX_RECORDED: usize = 10;

/// Sweep sizes. The defaults are the sizes of the acceptance suite.
#[derive(Clone, Debug)]
pub struct Config {
    /// Largest `|lambda|` in the theorem and named-operator sweeps.
    pub max_weight: i64,
    pub m_max: i64,
    pub k_max: u32,
    /// Extra integer-vector labels: maximal length and entry range.
    pub vectors: Option<(usize, i64, i64)>,
    pub virasoro_weight: i64,
    pub bgw_order: u32,
    pub kw_order: u32,
    /// Largest `|lambda|` for the `E` checks; chains use `coeff_weight + 2`.
    pub coeff_weight: i64,
    pub pfaffian_entry: i64,
    /// Entry bound for `phi` and the D-expansions; `gamma`/`psi` use `entry - 2`.
    pub identity_entry: i64,
    /// `tau_MM` pairing uses labels of weight at most `3 * pairing_order`.
    pub pairing_order: u32,
    pub random_cases: usize,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_weight: 8,
            m_max: 5,
            k_max: 4,
            vectors: Some((3, -2, 5)),
            virasoro_weight: 6,
            bgw_order: 6,
            kw_order: 4,
            coeff_weight: 10,
            pfaffian_entry: 12,
            identity_entry: 8,
            pairing_order: 6,
            random_cases: 12,
            seed: 0x5eed,
        }
    }
}

impl Config {
    /// Default sizes with the label-weight sweeps capped at `w`.
    pub fn with_max_weight(w: i64) -> Self {
        let d = Config::default();
        Config {
            max_weight: w,
            m_max: d.m_max.min(w.max(1)),
            vectors: Some((3, -2, d.vectors.unwrap().2.min(w.max(1)))),
            virasoro_weight: d.virasoro_weight.min(w),
            coeff_weight: d.coeff_weight.min(w + 2),
            pfaffian_entry: d.pfaffian_entry.min(w + 4),
            identity_entry: d.identity_entry.min(w.max(4)),
            pairing_order: d.pairing_order.min((w.max(1) as u32).div_ceil(3) + 1),
            bgw_order: d.bgw_order.min(w.max(0) as u32),
            kw_order: d.kw_order.min((w.max(0) as u32).div_ceil(2)),
            ..d
        }
    }
}

#[derive(Clone, Debug)]
pub struct Failure {
    pub case: String,
    pub detail: Value,
}

/// Outcome of one named check.
#[derive(Clone, Debug)]
pub struct Report {
    pub name: String,
    pub checks: usize,
    pub failed: usize,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failed == 0 && self.checks > 0
    }

    pub fn to_json(&self) -> Value {
        let failures: Vec<Value> = self
            .failures
            .iter()
            .map(|f| json!({"case": f.case, "detail": f.detail}))
            .collect();
        json!({
            "check": self.name,
            "passed": self.passed(),
            "cases": self.checks,
            "failed": self.failed,
            "counterexamples": failures,
        })
    }
}

struct Checker {
    report: Report,
}

impl Checker {
    fn new(name: &str) -> Self {
        Checker {
            report: Report {
                name: name.to_string(),
                checks: 0,
                failed: 0,
                failures: Vec::new(),
            },
        }
    }

    fn record(&mut self, ok: bool, case: impl FnOnce() -> String, detail: impl FnOnce() -> Value) {
        self.report.checks += 1;
        if !ok {
            self.report.failed += 1;
            if self.report.failures.len() < MAX_RECORDED {
                self.report.failures.push(Failure {
                    case: case(),
                    detail: detail(),
                });
            }
        }
    }

    fn polys(&mut self, case: impl FnOnce() -> String, lhs: &Poly, rhs: &Poly) {
        self.record(
            lhs == rhs,
            case,
            || json!({"lhs": poly_to_json(lhs), "rhs": poly_to_json(rhs)}),
        );
    }

    fn rationals(&mut self, case: impl FnOnce() -> String, lhs: &Rational, rhs: &Rational) {
        self.record(
            lhs == rhs,
            case,
            || json!({"lhs": lhs.to_string(), "rhs": rhs.to_string()}),
        );
    }

    /// Unwrap, recording an error as a failed case.
    fn ok<T>(&mut self, case: impl FnOnce() -> String, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.record(false, case, || json!({"error": e.to_string()}));
                None
            }
        }
    }

    fn finish(self) -> Report {
        self.report
    }
}

fn iv(parts: &[i64]) -> IntVector {
    IntVector::new(parts.to_vec())
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn char_poly(basis: Basis, label: &IntVector) -> Poly {
    (*characters().get(basis, label.parts())).clone()
}

/// Partition labels of the basis up to the weight, then the extra vectors.
fn sweep_labels(
    basis: Basis,
    max_weight: i64,
    vectors: Option<(usize, i64, i64)>,
) -> Vec<IntVector> {
    let mut out: Vec<IntVector> = match basis {
        Basis::Q => strict_partitions_up_to(max_weight)
            .iter()
            .map(|p| p.to_vector())
            .collect(),
        Basis::Schur => partitions_up_to(max_weight)
            .iter()
            .map(|p| p.to_vector())
            .collect(),
    };
    if let Some((len, lo, hi)) = vectors {
        out.extend(int_vectors(len, lo, hi));
    }
    out
}

/// Strictly decreasing vectors of length `l` with entries in `[0, max]`.
pub fn decreasing_vectors(l: usize, max: i64) -> Vec<IntVector> {
    fn go(l: usize, below: i64, cur: &mut Vec<i64>, out: &mut Vec<IntVector>) {
        if cur.len() == l {
            out.push(IntVector::new(cur.clone()));
            return;
        }
        let need = (l - cur.len() - 1) as i64;
        for x in (need..below).rev() {
            cur.push(x);
            go(l, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(l, max + 1, &mut Vec::new(), &mut out);
    out
}

fn random_poly(rng: &mut StdRng, max_deg: u32, odd_only: bool) -> Poly {
    let mut p = Poly::zero();
    let terms = rng.random_range(1..=4);
    for _ in 0..terms {
        let deg = rng.random_range(0..=max_deg);
        let mut left = deg as usize;
        let mut pairs = Vec::new();
        while left > 0 {
            let mut n = rng.random_range(1..=left);
            if odd_only && n % 2 == 0 {
                n -= 1;
            }
            pairs.push((n, 1));
            left -= n;
        }
        let c = Rational::new(
            rng.random_range(1..=6) * if rng.random_bool(0.5) { 1 } else { -1 },
            rng.random_range(1..=4),
        );
        p.add_term(Monomial::from_pairs(pairs), c);
    }
    p
}

// ---------------------------------------------------------------- theorems

/// Closed `P^(k)_m` on labels against the vertex-operator sum on the
/// corresponding character polynomial.
pub fn closed_vs_brute(basis: Basis, cfg: &Config) -> Report {
    let rho = Rho::for_basis(basis);
    let mut c = Checker::new(&format!("closed_vs_brute_{}", basis.name()));
    for lam in sweep_labels(basis, cfg.max_weight, cfg.vectors) {
        let input = char_poly(basis, &lam);
        for k in 1..=cfg.k_max {
            for m in -cfg.m_max..=cfg.m_max {
                let case = || format!("k={k} m={m} lambda={lam}");
                let closed = lincomb_to_poly(&apply_p_closed(basis, k, m, &lam));
                if let Some(brute) = c.ok(case, apply_p_brute(k, m, &rho, &input)) {
                    c.polys(case, &closed, &brute);
                }
            }
        }
    }
    c.finish()
}

/// `apply_p_modes` against `apply_p_brute` for `k <= 3`.
pub fn modes_vs_brute(basis: Basis, cfg: &Config) -> Report {
    let rho = Rho::for_basis(basis);
    let mut c = Checker::new(&format!("modes_vs_brute_{}", basis.name()));
    for lam in sweep_labels(basis, cfg.max_weight, cfg.vectors) {
        let input = char_poly(basis, &lam);
        for k in 1..=cfg.k_max.min(3) {
            for m in -cfg.m_max..=cfg.m_max {
                let case = || format!("k={k} m={m} lambda={lam}");
                let Some(modes) = c.ok(case, apply_p_modes(k, m, &rho, &input)) else {
                    continue;
                };
                if let Some(brute) = c.ok(case, apply_p_brute(k, m, &rho, &input)) {
                    c.polys(case, &modes, &brute);
                }
            }
        }
    }
    c.finish()
}

/// `P^(k)_0` is diagonal with the predicted eigenvalues.
pub fn eigenfunctions(basis: Basis, cfg: &Config) -> Report {
    let mut c = Checker::new(&format!("eigenvalues_{}", basis.name()));
    for lam in partitions_up_to(cfg.max_weight) {
        if basis == Basis::Q && !lam.is_strict() {
            continue;
        }
        let v = lam.to_vector();
        let l = lam.len() as i64;
        for k in 1..=cfg.k_max {
            let expected = match basis {
                Basis::Q => lam.parts().iter().map(|&x| coeff_c(k, 0, x)).sum(),
                Basis::Schur => {
                    let mut e = Rational::from_bigint(crate::wops::falling(-l, k));
                    for (i, &x) in lam.parts().iter().enumerate() {
                        e += Rational::from_bigint(
                            BigInt::from(k) * crate::wops::falling(x - i as i64 - 1, k - 1),
                        );
                    }
                    e
                }
            };
            let out = apply_p_closed(basis, k, 0, &v);
            let got = out.scalar_multiple_of(lam.parts());
            c.record(
                got.as_ref() == Some(&expected),
                || format!("k={k} lambda={v}"),
                || json!({"action": lincomb_to_json(&out), "expected": expected.to_string()}),
            );
        }
    }
    c.finish()
}

// ---------------------------------------------------------------- named

/// Written-out closed actions against the differential operators.
pub fn named_actions(cfg: &Config) -> Report {
    let m_max = cfg.m_max.min(3);
    let mut c = Checker::new("named_actions");
    let compare = |c: &mut Checker, op: NamedOp, lam: &IntVector, closed: &LinComb| {
        let input = char_poly(op.basis(), lam);
        if let Some(direct) = c.ok(|| format!("{op} lambda={lam}"), apply_named(op, &input)) {
            c.polys(
                || format!("{op} lambda={lam}"),
                &lincomb_to_poly(closed),
                &direct,
            );
        }
    };
    for lam in strict_partitions_up_to(cfg.max_weight) {
        let v = lam.to_vector();
        for m in -m_max..=m_max {
            compare(&mut c, NamedOp::Lhat(m), &v, &lhat_on_q(m, &v));
            if m % 2 != 0 {
                compare(&mut c, NamedOp::What(m), &v, &what_on_q(m, &v));
            } else {
                compare(&mut c, NamedOp::Nhat(m), &v, &nhat_on_q(m, &v));
            }
        }
        compare(&mut c, NamedOp::WBGW, &v, &wbgw_boxes(lam.parts()));
        compare(&mut c, NamedOp::WKWperp, &v, &wkw_perp_on_q(&v));
    }
    for lam in partitions_up_to(cfg.max_weight) {
        let v = lam.to_vector();
        for m in -m_max..=m_max {
            compare(&mut c, NamedOp::L(m), &v, &l_on_schur(m, &v));
            compare(&mut c, NamedOp::W(m), &v, &w_on_schur(m, &v));
        }
    }
    // L^_{-1} Q_(1) = 4 Q_(3) - Q_(2,1) = 12 t3 + 4 t1^3
    let closed = lhat_on_q(-1, &iv(&[1]));
    let mut expected = LinComb::zero(Basis::Q);
    expected.add_term(vec![3], Rational::from_int(4));
    expected.add_term(vec![2, 1], Rational::from_int(-1));
    c.record(
        closed == expected,
        || "Lhat_-1 Q_(1) closed".into(),
        || lincomb_to_json(&closed),
    );
    let spot = Poly::from_terms([
        (Monomial::var_pow(3, 1), Rational::from_int(12)),
        (Monomial::var_pow(1, 3), Rational::from_int(4)),
    ]);
    c.polys(
        || "Lhat_-1 Q_(1) polynomial".into(),
        &lincomb_to_poly(&closed),
        &spot,
    );
    c.finish()
}

/// `[L^_n, L^_m] = 4(n-m) L^_{n+m}` on `Q_lambda`.
pub fn virasoro(cfg: &Config) -> Report {
    let mut c = Checker::new("virasoro");
    for lam in strict_partitions_up_to(cfg.virasoro_weight) {
        let q = char_poly(Basis::Q, &lam.to_vector());
        for n in -3..=-1 {
            for m in -3..=-1 {
                let case = || format!("n={n} m={m} lambda={:?}", lam.parts());
                let run = || -> Result<(Poly, Poly)> {
                    let nm = apply_named(NamedOp::Lhat(n), &apply_named(NamedOp::Lhat(m), &q)?)?;
                    let mn = apply_named(NamedOp::Lhat(m), &apply_named(NamedOp::Lhat(n), &q)?)?;
                    let rhs = apply_named(NamedOp::Lhat(n + m), &q)?
                        .scale(&Rational::from_int(4 * (n - m)));
                    Ok((nm - mn, rhs))
                };
                if let Some((lhs, rhs)) = c.ok(case, run()) {
                    c.polys(case, &lhs, &rhs);
                }
            }
        }
    }
    c.finish()
}

// ---------------------------------------------------------------- relations

pub fn sample_rhos() -> Vec<Rho> {
    [r(0, 1), r(-1, 1), r(1, 2), r(-1, 3)]
        .into_iter()
        .map(|v| Rho::new(v).expect("sample rho differs from 1"))
        .collect()
}

/// Commutation relations of `B` and `B*` at sample `rho` on random
/// polynomials, the vacuum conditions and `B*_n = (-1)^n B_{-n}` at `rho = -1`.
pub fn vertex_relations(cfg: &Config) -> Report {
    let mut c = Checker::new("vertex_relations");
    let mut rng = StdRng::seed_from_u64(cfg.seed);
    let one = Poly::one();
    for rho in sample_rhos() {
        let rv = rho.value().clone();
        for n in -3..=3i64 {
            let b1 = apply_b(n, &one, &rho);
            if n <= 0 {
                let expected = if n == 0 { one.clone() } else { Poly::zero() };
                c.polys(|| format!("rho={rv} B_{n} 1"), &b1, &expected);
            }
            if n >= 0 {
                let expected = if n == 0 { one.clone() } else { Poly::zero() };
                c.polys(
                    || format!("rho={rv} B*_{n} 1"),
                    &apply_b_star(n, &one, &rho),
                    &expected,
                );
            }
        }
        for _ in 0..cfg.random_cases {
            let p = random_poly(&mut rng, 4, rho.is_q());
            let (a, b) = (rng.random_range(-3..=3i64), rng.random_range(-3..=3i64));
            let bb = |x: i64, y: i64| apply_b(x, &apply_b(y, &p, &rho), &rho);
            let lhs = bb(a, b) - bb(b, a).scale(&rv);
            let rhs = bb(a + 1, b - 1).scale(&rv) - bb(b - 1, a + 1);
            c.polys(
                || format!("rho={rv} BB relation a={a} b={b} p={p:?}"),
                &lhs,
                &rhs,
            );

            let b_bs = |x: i64, y: i64| apply_b(x, &apply_b_star(y, &p, &rho), &rho);
            let bs_b = |y: i64, x: i64| apply_b_star(y, &apply_b(x, &p, &rho), &rho);
            let lhs = b_bs(a, b) - bs_b(b, a).scale(&rv);
            let mut rhs = b_bs(a - 1, b - 1).scale(&rv) - bs_b(b - 1, a - 1);
            if a == b {
                let w = Rational::one() - &rv;
                rhs.add_scaled(&p, &(&w * &w));
            }
            c.polys(
                || format!("rho={rv} BB* relation a={a} b={b} p={p:?}"),
                &lhs,
                &rhs,
            );

            if rho.is_q() {
                let lhs = apply_b_star(a, &p, &rho);
                let rhs = apply_b(-a, &p, &rho).scale(&Rational::sign_pow(a));
                c.polys(|| format!("B*_{a} = (-1)^{a} B_{} p={p:?}", -a), &lhs, &rhs);
            }
        }
    }
    c.finish()
}

/// `[P1_m, P1_{-m}] = m (1 - rho^m)` through the mode expansion.
pub fn heisenberg(cfg: &Config) -> Report {
    let mut c = Checker::new("heisenberg");
    let mut rng = StdRng::seed_from_u64(cfg.seed ^ 1);
    for rho in sample_rhos().into_iter().take(3) {
        for m in 1..=3i64 {
            for _ in 0..cfg.random_cases.div_ceil(2) {
                let p = random_poly(&mut rng, 5, rho.is_q());
                let case = || format!("rho={} m={m} p={p:?}", rho.value());
                let run = || -> Result<Poly> {
                    let a = apply_p_modes(1, m, &rho, &apply_p_modes(1, -m, &rho, &p)?)?;
                    let b = apply_p_modes(1, -m, &rho, &apply_p_modes(1, m, &rho, &p)?)?;
                    Ok(a - b)
                };
                if let Some(lhs) = c.ok(case, run()) {
                    let w = rho.weight(m as usize) * Rational::from_int(m);
                    c.polys(case, &lhs, &p.scale(&w));
                }
            }
        }
    }
    c.finish()
}

/// Characters carry no even variables, vertex products straighten to the
/// partition-basis expansions, and expansion round-trips.
pub fn straightening(cfg: &Config) -> Report {
    let mut c = Checker::new("straightening");
    let (len, lo, hi) = (3, -3, cfg.max_weight.clamp(1, 6));
    for lam in int_vectors(len, lo, hi) {
        for basis in [Basis::Schur, Basis::Q] {
            let direct = char_poly(basis, &lam);
            let straight = straighten(basis, &lam);
            c.polys(
                || format!("{} lambda={lam}", basis.name()),
                &direct,
                &lincomb_to_poly(&straight),
            );
            if basis == Basis::Q {
                c.record(
                    direct.is_odd_supported(),
                    || format!("odd support lambda={lam}"),
                    || poly_to_json(&direct),
                );
            }
            let w = lam.weight().max(0) as u32;
            c.record(
                direct.is_zero() || direct.is_homogeneous_of(w),
                || format!("grading {} lambda={lam}", basis.name()),
                || poly_to_json(&direct),
            );
            if let Some(back) = c.ok(
                || format!("expand {} lambda={lam}", basis.name()),
                expand_in_basis(&direct, basis),
            ) {
                c.record(back == straight, || format!("round trip {} lambda={lam}", basis.name()), || {
                    json!({"expanded": lincomb_to_json(&back), "straightened": lincomb_to_json(&straight)})
                });
            }
        }
    }
    c.finish()
}

/// `P^(k)_m 1` at `rho = -1`, the fermionic commutator
/// `[B_a * B_b, B_n] = 2(-1)^n (delta_{n,-b} B_a - delta_{n,-a} B_b)`
/// and the coefficient identities.
pub fn fermionic_lemmas(cfg: &Config) -> Report {
    let mut c = Checker::new("fermionic_lemmas");
    let q = Rho::q();
    for k in 1..=4u32 {
        for m in -4..=0i64 {
            let mut expected = Poly::zero();
            if m < 0 {
                for a in 0..=-m {
                    let coef = Rational::sign_pow(m - a) * coeff_d(k, a);
                    expected.add_scaled(&char_poly(Basis::Q, &iv(&[a, -m - a])), &coef);
                }
            }
            if let Some(got) = c.ok(
                || format!("P{k}_{m} 1"),
                apply_p_brute(k, m, &q, &Poly::one()),
            ) {
                c.polys(|| format!("P{k}_{m} 1"), &got, &expected);
            }
        }
    }

    let mut rng = StdRng::seed_from_u64(cfg.seed ^ 2);
    let ops = characters().ops(Basis::Q);
    let star = |a: i64, b: i64, p: &Poly| {
        let mut out = ops.b(a, &ops.b(b, p));
        if a == -b && b >= 0 {
            out.add_scaled(p, &(Rational::sign_pow(b) * Rational::from_int(-2)));
        }
        out
    };
    for _ in 0..cfg.random_cases * 2 {
        let p = random_poly(&mut rng, 4, true);
        let a = rng.random_range(-3..=3i64);
        let b = rng.random_range(-3..=3i64);
        let n = if rng.random_bool(0.5) {
            -b
        } else {
            rng.random_range(-3..=3i64)
        };
        let lhs = star(a, b, &ops.b(n, &p)) - ops.b(n, &star(a, b, &p));
        let mut rhs = Poly::zero();
        let two = Rational::sign_pow(n) * Rational::from_int(2);
        if n == -b {
            rhs.add_scaled(&ops.b(a, &p), &two);
        }
        if n == -a {
            rhs.add_scaled(&ops.b(b, &p), &-two);
        }
        c.polys(|| format!("[B_{a}*B_{b}, B_{n}] p={p:?}"), &lhs, &rhs);
    }

    for rho in sample_rhos() {
        for k in 1..=5u32 {
            for b in -6..=6i64 {
                let lhs = coeff_g(k, b, &rho);
                let rhs = coeff_h(k, b, &rho) - coeff_h(k, b + 1, &rho);
                c.rationals(
                    || format!("g=h-h rho={} k={k} b={b}", rho.value()),
                    &lhs,
                    &rhs,
                );
            }
        }
    }
    for k in 1..=5u32 {
        for m in -5..=5i64 {
            for n in -6..=6i64 {
                let rhs = Rational::from_int(2) * coeff_d(k, n - m)
                    - Rational::from_int(2) * Rational::sign_pow(m) * coeff_d(k, -n);
                c.rationals(|| format!("c k={k} m={m} n={n}"), &coeff_c(k, m, n), &rhs);
            }
        }
    }
    c.finish()
}

// ---------------------------------------------------------------- tau

fn series_check(c: &mut Checker, label: &str, s: &Series, step: u32, spots: &[(u32, Poly)]) {
    c.record(
        s.check_grading(step),
        || format!("{label} grading"),
        || crate::json::series_to_json(s),
    );
    for (n, expected) in spots {
        if *n <= s.order {
            c.polys(|| format!("{label} hbar^{n}"), &s.component(*n), expected);
        }
    }
}

/// `tau_BGW` both ways, `E` against evaluation and the chain counts.
pub fn bgw(cfg: &Config) -> Report {
    let mut c = Checker::new("bgw");
    let t1 = Poly::var(1);
    let spots = [
        (0, Poly::one()),
        (1, t1.scale(&r(1, 8))),
        (2, (&t1 * &t1).scale(&r(9, 128))),
    ];
    for order in 0..=cfg.bgw_order {
        if let Some(s) = c.ok(
            || format!("tau_bgw({order}, both)"),
            tau_bgw(order, Method::Both),
        ) {
            series_check(&mut c, &format!("tau_bgw({order})"), &s, 1, &spots);
        }
    }
    let point = VarAssignment::new().with(1, Rational::one());
    for lam in strict_partitions_up_to(cfg.coeff_weight) {
        let eval = char_poly(Basis::Q, &lam.to_vector()).evaluate(&point);
        c.rationals(|| format!("E{:?}", lam.parts()), &e_coeff(&lam), &eval);
        let ratio = e_coeff(&lam) / e_coeff(&lam.doubled());
        let prod: Result<Rational> = lam
            .parts()
            .iter()
            .map(|&x| double_fact(2 * x - 1))
            .product();
        if let Some(prod) = c.ok(|| format!("dfact {:?}", lam.parts()), prod) {
            c.rationals(|| format!("E/E2 {:?}", lam.parts()), &ratio, &prod);
        }
    }
    for mu in strict_partitions_up_to(cfg.coeff_weight + 2) {
        let n = mu.weight();
        let formula = Rational::from_bigint(factorial(n as u64)) * e_coeff(&mu)
            / Rational::from_bigint(BigInt::from(2).pow(n as u32));
        let count = Rational::from_bigint(chain_count(&mu));
        c.rationals(|| format!("chains {:?}", mu.parts()), &count, &formula);
    }
    c.finish()
}

/// Weakly positive labels of even length up to 4 with entries `<= max`.
fn pfaffian_labels(max: i64) -> Vec<IntVector> {
    let mut out = Vec::new();
    for l in [2usize, 4] {
        let mut cur = vec![0i64; l];
        loop {
            let v = IntVector::new(cur.clone());
            if v.is_weakly_positive() {
                out.push(v);
            }
            let mut i = 0;
            while i < l && cur[i] == max {
                cur[i] = 0;
                i += 1;
            }
            if i == l {
                break;
            }
            cur[i] += 1;
        }
    }
    out
}

/// `tau_KW` both ways, the `A` oracles and the pairing with `tau_MM`.
pub fn kw(cfg: &Config) -> Report {
    let mut c = Checker::new("kw");
    let t1 = Poly::var(1);
    let t1_3 = &(&t1 * &t1) * &t1;
    let spots = [
        (0, Poly::one()),
        (1, t1_3.scale(&r(1, 6)) + Poly::var(3).scale(&r(1, 8))),
    ];
    for order in 0..=cfg.kw_order {
        if let Some(s) = c.ok(
            || format!("tau_kw({order}, both)"),
            tau_kw(order, Method::Both),
        ) {
            series_check(&mut c, &format!("tau_kw({order})"), &s, 3, &spots);
        }
    }

    for (label, value) in [
        (&[3, 0][..], r(2, 3)),
        (&[1, 2], r(4, 3)),
        (&[6, 0], r(2, 9)),
        (&[4, 2], r(4, 9)),
        (&[2, 0], r(0, 1)),
    ] {
        c.rationals(|| format!("A{label:?}"), &a_coeff(&iv(label)), &value);
    }
    for a in 0..=cfg.pfaffian_entry {
        for b in 0..=cfg.pfaffian_entry {
            if let Some(closed) = a_pair_closed(a, b) {
                c.rationals(
                    || format!("A closed ({a},{b})"),
                    &closed,
                    &a_coeff(&iv(&[a, b])),
                );
            }
        }
    }
    for lam in pfaffian_labels(cfg.pfaffian_entry) {
        if let Some(p) = c.ok(|| format!("A_pfaffian{lam}"), a_pfaffian(&lam)) {
            c.rationals(|| format!("A_pfaffian{lam}"), &p, &a_coeff(&lam));
        }
    }
    for (label, value) in [(&[][..], r(1, 1)), (&[3], r(5, 24)), (&[2], r(0, 1))] {
        c.rationals(|| format!("a{label:?}"), &a_small(&iv(label)), &value);
    }

    // <Q_nu, tau_MM> = a_nu, with tau_MM the closed expansion
    let order = cfg.pairing_order;
    if let Some(s) = c.ok(
        || format!("tau_kw({order}, closed)"),
        tau_kw(order, Method::Closed),
    ) {
        for nu in int_vectors(3, -2, 6) {
            let w = nu.weight();
            if w < 0 || w > 3 * order as i64 {
                continue;
            }
            let q = char_poly(Basis::Q, &nu);
            let comp = if w % 3 == 0 {
                s.component((w / 3) as u32)
            } else {
                Poly::zero()
            };
            let case = || format!("<Q{nu}, tau_MM>");
            if let Some(pair) = c.ok(case, crate::inner::q_inner(&q, &comp)) {
                c.rationals(case, &pair, &a_small(&nu));
            }
        }
    }
    c.finish()
}

// ---------------------------------------------------------------- identities

/// `phi`, `gamma`, `psi`, the D-expansions, `DA_{2(3m+2,3n+2)} = 0`.
pub fn a_identities(cfg: &Config) -> Report {
    let mut c = Checker::new("a_identities");
    let zero = Rational::zero();
    for l in [2usize, 4] {
        for mu in decreasing_vectors(l, cfg.identity_entry) {
            if let Some(v) = c.ok(|| format!("phi{mu}"), phi(&mu)) {
                c.rationals(|| format!("phi{mu}"), &v, &zero);
            }
        }
    }
    let mut gp = decreasing_vectors(4, cfg.identity_entry - 2);
    gp.push(iv(&[5, 4, 3, 2, 1, 0]));
    for nu in &gp {
        if let Some(v) = c.ok(|| format!("gamma{nu}"), gamma(nu)) {
            c.rationals(|| format!("gamma{nu}"), &v, &zero);
        }
        if let Some(v) = c.ok(|| format!("psi{nu}"), psi(nu)) {
            c.rationals(|| format!("psi{nu}"), &v, &zero);
        }
    }
    for nu in decreasing_vectors(4, cfg.identity_entry) {
        if let Some(e) = c.ok(|| format!("dexp{nu}"), d_expansion(&nu)) {
            c.rationals(|| format!("dexp D {nu}"), &e.d.lhs, &e.d.rhs);
            c.rationals(|| format!("dexp DD {nu}"), &e.dd.lhs, &e.dd.rhs);
            if let Some(h) = &e.d_half {
                c.rationals(|| format!("dexp D/2 {nu}"), &h.lhs, &h.rhs);
            }
            if let Some(h) = &e.dd_half {
                c.rationals(|| format!("dexp DD/2 {nu}"), &h.lhs, &h.rhs);
            }
        }
    }
    for m in 0..=4i64 {
        for n in 0..=4i64 {
            let label = iv(&[2 * (3 * m + 2), 2 * (3 * n + 2)]);
            if let Some(v) = c.ok(|| format!("DA{label}"), d_total(&label)) {
                c.rationals(|| format!("DA{label}"), &v, &zero);
            }
        }
    }
    c.finish()
}

/// Hook lemma, `B*` on Schur functions, `(W_KW)^perp` closed form and
/// adjointness.
pub fn operator_identities(cfg: &Config) -> Report {
    let mut c = Checker::new("operator_identities");
    for lam in int_vectors(3, 0, 4) {
        for n in -4..=0 {
            for m in 0..=4 {
                if let Some(s) = c.ok(
                    || format!("hook {lam} n={n} m={m}"),
                    check_hook_lemma(&lam, n, m),
                ) {
                    c.polys(|| format!("hook {lam} n={n} m={m}"), &s.lhs, &s.rhs);
                }
            }
        }
    }
    for lam in int_vectors(3, 0, 5) {
        for n in -4..=4 {
            if let Some(s) = c.ok(
                || format!("bstar n={n} {lam}"),
                check_bstar_on_schur(n, &lam),
            ) {
                c.record(s.holds(), || format!("bstar n={n} {lam}"), || {
                    json!({"closed": lincomb_to_json(&s.lhs), "vertex": lincomb_to_json(&s.rhs)})
                });
            }
        }
    }
    for mu in strict_partitions_up_to(cfg.max_weight) {
        let v = mu.to_vector();
        if let Some(s) = c.ok(|| format!("wkw_perp {v}"), check_wkw_perp(&v)) {
            c.polys(|| format!("wkw_perp {v}"), &s.lhs, &s.rhs);
        }
    }
    let mut rng = StdRng::seed_from_u64(cfg.seed ^ 3);
    for mu in strict_partitions_up_to(cfg.max_weight.min(6)) {
        for _ in 0..3 {
            // aim the degree at |mu| +- 3 so the pairing is usually nonzero
            let target = (mu.weight() + 3).min(9) as u32;
            let f = homogeneous_random(&mut rng, target);
            let case = || format!("adjoint mu={:?} f={f:?}", mu.parts());
            if let Some(s) = c.ok(case, check_adjoint(mu.parts(), &f)) {
                c.rationals(case, &s.lhs, &s.rhs);
            }
        }
    }
    c.finish()
}

fn homogeneous_random(rng: &mut StdRng, deg: u32) -> Poly {
    let mut p = Poly::zero();
    for _ in 0..3 {
        p = p + random_poly(rng, deg, true).homogeneous_component(deg);
        let mut left = deg as usize;
        let mut pairs = Vec::new();
        while left > 0 {
            let mut n = rng.random_range(1..=left);
            if n % 2 == 0 {
                n -= 1;
            }
            pairs.push((n, 1));
            left -= n;
        }
        p.add_term(
            Monomial::from_pairs(pairs),
            Rational::from_int(rng.random_range(1..=5)),
        );
    }
    p
}

// ---------------------------------------------------------------- suites

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Thm1,
    Thm2,
    Relations,
    Virasoro,
    Named,
    Bgw,
    Kw,
    Identities,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 9] = [
        "thm1",
        "thm2",
        "relations",
        "virasoro",
        "named",
        "bgw",
        "kw",
        "identities",
        "all",
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Thm1 => "thm1",
            Suite::Thm2 => "thm2",
            Suite::Relations => "relations",
            Suite::Virasoro => "virasoro",
            Suite::Named => "named",
            Suite::Bgw => "bgw",
            Suite::Kw => "kw",
            Suite::Identities => "identities",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "thm1" => Suite::Thm1,
            "thm2" => Suite::Thm2,
            "relations" => Suite::Relations,
            "virasoro" => Suite::Virasoro,
            "named" => Suite::Named,
            "bgw" => Suite::Bgw,
            "kw" => Suite::Kw,
            "identities" => Suite::Identities,
            "all" => Suite::All,
            _ => return Err(Error::Parse(format!("unknown suite {s:?}"))),
        })
    }
}

/// Run a suite; reports come back in a fixed order.
pub fn run_suite(suite: Suite, cfg: &Config) -> Vec<Report> {
    match suite {
        Suite::Thm1 => vec![
            closed_vs_brute(Basis::Q, cfg),
            modes_vs_brute(Basis::Q, cfg),
            eigenfunctions(Basis::Q, cfg),
        ],
        Suite::Thm2 => vec![
            closed_vs_brute(Basis::Schur, cfg),
            modes_vs_brute(Basis::Schur, cfg),
            eigenfunctions(Basis::Schur, cfg),
        ],
        Suite::Relations => vec![
            vertex_relations(cfg),
            heisenberg(cfg),
            straightening(cfg),
            fermionic_lemmas(cfg),
        ],
        Suite::Virasoro => vec![virasoro(cfg)],
        Suite::Named => vec![named_actions(cfg)],
        Suite::Bgw => vec![bgw(cfg)],
        Suite::Kw => vec![kw(cfg)],
        Suite::Identities => vec![a_identities(cfg), operator_identities(cfg)],
        Suite::All => Suite::NAMES[..8]
            .iter()
            .flat_map(|s| run_suite(s.parse().expect("known suite"), cfg))
            .collect(),
    }
}
