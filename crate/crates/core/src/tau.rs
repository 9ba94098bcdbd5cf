//! BGW and Kontsevich-Witten tau functions, with the evaluation constants
//! `E_lambda`, `A_lambda`, `a_lambda` and chain counts.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lincomb::Basis;
use crate::partition::{strict_partitions_of, IntVector, StrictPartition};
use crate::poly::{Poly, VarAssignment};
use crate::rational::{factorial, Rational};
use crate::straighten::straighten_q;
use crate::vertex::characters;
use crate::wops::{apply_named, NamedOp};

/// Truncated power series in `hbar` with polynomial coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series {
    pub order: u32,
    pub components: BTreeMap<u32, Poly>,
}

impl Series {
    pub fn new(order: u32) -> Self {
        Series {
            order,
            components: BTreeMap::new(),
        }
    }

    pub fn component(&self, n: u32) -> Poly {
        self.components.get(&n).cloned().unwrap_or_else(Poly::zero)
    }

    fn add(&mut self, n: u32, p: &Poly, c: &Rational) {
        let entry = self.components.entry(n).or_insert_with(Poly::zero);
        entry.add_scaled(p, c);
    }

    /// Every `hbar^n` component is homogeneous of degree `step * n` (or zero)
    /// and involves only odd variables.
    pub fn check_grading(&self, step: u32) -> bool {
        self.components
            .iter()
            .all(|(n, p)| p.is_odd_supported() && p.is_homogeneous_of(step * n))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    CutJoin,
    Closed,
    Both,
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cutjoin" => Ok(Method::CutJoin),
            "closed" => Ok(Method::Closed),
            "both" => Ok(Method::Both),
            _ => Err(Error::Parse(format!("unknown method {s:?}"))),
        }
    }
}

/// `(2m+1)!! = (2m+1)(2m-1)!!` for every integer `m`, with `(-1)!! = 1`.
pub fn double_fact(n: i64) -> Result<Rational> {
    if n.rem_euclid(2) == 0 {
        return Err(Error::InvalidArgument(format!(
            "double factorial needs odd input, got {n}"
        )));
    }
    let mut acc = Rational::one();
    if n > 0 {
        let mut j = n;
        while j > 1 {
            acc = acc * Rational::from_int(j);
            j -= 2;
        }
    } else {
        // (-1)!! = 1, and (j-2)!! = j!! / j going down
        let mut j = -1;
        while j > n {
            acc = acc / Rational::from_int(j);
            j -= 2;
        }
    }
    Ok(acc)
}

/// `E_lambda = 2^{|lambda|} / prod lambda_i! * prod_{i<j} (lambda_i - lambda_j)/(lambda_i + lambda_j)`.
pub fn e_coeff(lambda: &StrictPartition) -> Rational {
    let p = lambda.parts();
    let mut acc = Rational::from_int(2).pow(lambda.weight() as i32);
    for &x in p {
        acc = acc / Rational::from_bigint(factorial(x as u64));
    }
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            acc = acc * Rational::new(p[i] - p[j], p[i] + p[j]);
        }
    }
    acc
}

/// Pfaffian of a skew-symmetric matrix by congruence elimination.
pub fn pfaffian(mut a: Vec<Vec<Rational>>) -> Rational {
    let n = a.len();
    if n % 2 == 1 {
        return Rational::zero();
    }
    let mut result = Rational::one();
    for k in (0..n).step_by(2) {
        let Some(p) = (k + 1..n).find(|&j| !a[k][j].is_zero()) else {
            return Rational::zero();
        };
        if p != k + 1 {
            a.swap(k + 1, p);
            for row in a.iter_mut() {
                row.swap(k + 1, p);
            }
            result = -result;
        }
        let pivot = a[k][k + 1].clone();
        result *= &pivot;
        for i in k + 2..n {
            let f = &a[k][i] / &pivot;
            if f.is_zero() {
                continue;
            }
            for j in 0..n {
                let v = &f * &a[k + 1][j];
                a[i][j] -= &v;
            }
            for j in 0..n {
                let v = &f * &a[j][k + 1];
                a[j][i] -= &v;
            }
        }
    }
    result
}

/// Evaluates Q-functions at a point `t_n = a_n` (odd `n`) without building
/// the polynomials: one-row values come from `sum q_n z^n = exp(2 sum a_n z^n)`,
/// two-row values from the kernel `(z-w)/(z+w)`, and strict `Q_mu` is the
/// Pfaffian of the two-row values.
pub struct QEvaluator {
    point: BTreeMap<usize, Rational>,
    q: Mutex<Vec<Rational>>,
}

impl QEvaluator {
    pub fn new(point: &VarAssignment, max_var: usize) -> Result<Self> {
        let mut map = BTreeMap::new();
        for n in 1..=max_var {
            let v = point.get(n);
            if !v.is_zero() {
                if n % 2 == 0 {
                    return Err(Error::EvenVariable(n));
                }
                map.insert(n, v);
            }
        }
        Ok(QEvaluator {
            point: map,
            q: Mutex::new(vec![Rational::one()]),
        })
    }

    /// `q_n` at the point, using `n q_n = sum_k 2k a_k q_{n-k}`.
    pub fn q(&self, n: i64) -> Rational {
        if n < 0 {
            return Rational::zero();
        }
        let mut table = self.q.lock().unwrap();
        while table.len() as i64 <= n {
            let r = table.len();
            let mut acc = Rational::zero();
            for (&k, a) in &self.point {
                if k <= r {
                    acc += Rational::from_int(2 * k as i64) * a * &table[r - k];
                }
            }
            table.push(acc / Rational::from_int(r as i64));
        }
        table[n as usize].clone()
    }

    /// `Q_{(a,b)} = q_a q_b + 2 sum_{k>=1} (-1)^k q_{a+k} q_{b-k}`.
    pub fn two_row(&self, a: i64, b: i64) -> Rational {
        let mut acc = self.q(a) * self.q(b);
        for k in 1..=b.max(0) {
            let term = self.q(a + k) * self.q(b - k) * Rational::from_int(2);
            if k % 2 == 0 {
                acc += term;
            } else {
                acc -= &term;
            }
        }
        acc
    }

    /// `Q_mu` for a strict partition `mu`.
    pub fn strict(&self, mu: &[i64]) -> Rational {
        let mut parts = mu.to_vec();
        if parts.len() % 2 == 1 {
            parts.push(0);
        }
        let n = parts.len();
        let mut mat = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let v = self.two_row(parts[i], parts[j]);
                mat[j][i] = -v.clone();
                mat[i][j] = v;
            }
        }
        pfaffian(mat)
    }

    /// `Q_lambda` for any integer vector, through straightening.
    pub fn eval(&self, lambda: &IntVector) -> Rational {
        straighten_q(lambda)
            .terms()
            .map(|(mu, c)| c * self.strict(mu))
            .sum()
    }
}

fn kw_point() -> &'static QEvaluator {
    static POINT: OnceLock<QEvaluator> = OnceLock::new();
    POINT.get_or_init(|| {
        QEvaluator::new(&VarAssignment::new().with(3, Rational::new(1, 3)), 3).unwrap()
    })
}

fn a_memo() -> &'static Mutex<HashMap<Vec<i64>, Rational>> {
    static MEMO: OnceLock<Mutex<HashMap<Vec<i64>, Rational>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `A_lambda = Q_lambda(0, 1/3, 0, ...)` for any integer vector.
pub fn a_coeff(lambda: &IntVector) -> Rational {
    if lambda.weight().rem_euclid(3) != 0 || lambda.weight() < 0 {
        return Rational::zero();
    }
    if let Some(v) = a_memo().lock().unwrap().get(lambda.parts()) {
        return v.clone();
    }
    let v = kw_point().eval(lambda);
    a_memo()
        .lock()
        .unwrap()
        .insert(lambda.parts().to_vec(), v.clone());
    v
}

/// `A` on a weakly positive pair from the closed forms
/// `A_{(3k1,3k2)} = (2/3)^{k1+k2} / (k1! k2!) (k1-k2)/(k1+k2)` and
/// `A_{(3m+1,3n+2)} = (2/3)^{m+n+1} 2 / (m! n! (m+n+1))`.
pub fn a_pair_closed(a: i64, b: i64) -> Option<Rational> {
    if !IntVector::new(vec![a, b]).is_weakly_positive() {
        return None;
    }
    if (a + b) % 3 != 0 {
        return Some(Rational::zero());
    }
    let two_thirds = Rational::new(2, 3);
    let fact = |n: i64| Rational::from_bigint(factorial(n as u64));
    Some(match (a % 3, b % 3) {
        (0, 0) => {
            let (k1, k2) = (a / 3, b / 3);
            two_thirds.pow((k1 + k2) as i32) / (fact(k1) * fact(k2))
                * Rational::new(k1 - k2, k1 + k2)
        }
        (1, 2) => {
            let (m, n) = (a / 3, b / 3);
            two_thirds.pow((m + n + 1) as i32) * Rational::from_int(2)
                / (fact(m) * fact(n) * Rational::from_int(m + n + 1))
        }
        (2, 1) => -a_pair_closed(b, a)?,
        _ => unreachable!(),
    })
}

/// `A_lambda` by expanding along the last component:
/// `A_lambda = sum_{m<l} (-1)^{m+1} A_{(lambda_m, lambda_l)} A_{lambda without m, l}`,
/// with length-2 values from the closed forms. Pairs outside the closed
/// forms' domain fall back to [`a_coeff`].
pub fn a_pfaffian(lambda: &IntVector) -> Result<Rational> {
    let p = lambda.parts();
    if p.len() % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "A recursion needs even length, got {lambda:?}"
        )));
    }
    Ok(match p.len() {
        0 => Rational::one(),
        2 => a_pair_closed(p[0], p[1]).unwrap_or_else(|| a_coeff(lambda)),
        l => {
            let last = p[l - 1];
            let mut acc = Rational::zero();
            for m in 0..l - 1 {
                let pair = a_pfaffian(&IntVector::new(vec![p[m], last]))?;
                if pair.is_zero() {
                    continue;
                }
                let rest = a_pfaffian(&lambda.without(&[m, l - 1]))?;
                // 1-based index m+1 gives sign (-1)^{m+2}
                let term = pair * rest;
                if m % 2 == 0 {
                    acc += term;
                } else {
                    acc -= &term;
                }
            }
            acc
        }
    })
}

/// `a_lambda` without its `hbar` power: `A_{2 lambda} (1/16)^{|lambda|/3} prod (2 lambda_i - 1)!!`.
pub fn a_small(lambda: &IntVector) -> Rational {
    let w = lambda.weight();
    if w.rem_euclid(3) != 0 {
        return Rational::zero();
    }
    let a = a_coeff(&lambda.scaled(2));
    if a.is_zero() {
        return a;
    }
    let mut acc = a * Rational::new(1, 16).pow((w / 3) as i32);
    for &x in lambda.parts() {
        acc = acc * double_fact(2 * x - 1).expect("2x-1 is odd");
    }
    acc
}

/// Number of chains of strict partitions growing one box at a time from
/// the empty partition to `mu`.
pub fn chain_count(mu: &StrictPartition) -> BigInt {
    fn go(mu: &[i64], memo: &mut HashMap<Vec<i64>, BigInt>) -> BigInt {
        if mu.is_empty() {
            return BigInt::from(1);
        }
        if let Some(v) = memo.get(mu) {
            return v.clone();
        }
        let mut total = BigInt::from(0);
        for i in 0..mu.len() {
            let mut nu = mu.to_vec();
            nu[i] -= 1;
            if nu[i] == 0 {
                if i + 1 != nu.len() {
                    continue;
                }
                nu.pop();
            } else if i + 1 < nu.len() && nu[i] <= nu[i + 1] {
                continue;
            }
            total += go(&nu, memo);
        }
        memo.insert(mu.to_vec(), total.clone());
        total
    }
    go(mu.parts(), &mut HashMap::new())
}

/// `sum_{n <= order} hbar^n / n! W^n . 1`.
fn exponential(op: NamedOp, order: u32) -> Result<Series> {
    let mut s = Series::new(order);
    let mut v = Poly::one();
    let mut fact = Rational::one();
    s.add(0, &v, &Rational::one());
    for n in 1..=order {
        v = apply_named(op, &v)?;
        fact = fact * Rational::from_int(n as i64);
        s.add(n, &v, &fact.recip().unwrap());
    }
    Ok(s)
}

fn bgw_closed(order: u32) -> Series {
    let mut s = Series::new(order);
    let chars = characters();
    for w in 0..=order {
        for lam in strict_partitions_of(w as i64) {
            let mut ratio = Rational::one();
            for &x in lam.parts() {
                ratio = ratio * double_fact(2 * x - 1).unwrap();
            }
            // E^3 / E_{2 lambda}^2 = E (E / E_{2 lambda})^2
            let c = e_coeff(&lam) * ratio.pow(2) * Rational::new(1, 16).pow(w as i32)
                / Rational::from_int(1 << lam.len());
            s.add(w, &chars.get(Basis::Q, lam.parts()), &c);
        }
    }
    s
}

fn kw_closed(order: u32) -> Series {
    let mut s = Series::new(order);
    let chars = characters();
    for n in 0..=order {
        for lam in strict_partitions_of(3 * n as i64) {
            let v = lam.to_vector();
            let a = a_coeff(&v.scaled(2));
            if a.is_zero() {
                continue;
            }
            let mut ratio = Rational::one();
            for &x in lam.parts() {
                ratio = ratio * double_fact(2 * x - 1).unwrap();
            }
            let c =
                ratio * a * Rational::new(1, 16).pow(n as i32) / Rational::from_int(1 << lam.len());
            s.add(n, &chars.get(Basis::Q, lam.parts()), &c);
        }
    }
    s
}

fn run(order: u32, method: Method, op: NamedOp, closed: fn(u32) -> Series) -> Result<Series> {
    match method {
        Method::CutJoin => exponential(op, order),
        Method::Closed => Ok(closed(order)),
        Method::Both => {
            let a = exponential(op, order)?;
            let b = closed(order);
            for n in 0..=order {
                if a.component(n) != b.component(n) {
                    return Err(Error::Discrepancy(format!(
                        "{op} tau at hbar^{n}: cut-and-join {:?} vs closed {:?}",
                        a.component(n),
                        b.component(n)
                    )));
                }
            }
            Ok(a)
        }
    }
}

/// `tau_BGW = exp(hbar W_BGW) . 1` up to `hbar^order`.
pub fn tau_bgw(order: u32, method: Method) -> Result<Series> {
    run(order, method, NamedOp::WBGW, bgw_closed)
}

/// `tau_KW = exp(hbar W_KW) . 1` up to `hbar^order`.
pub fn tau_kw(order: u32, method: Method) -> Result<Series> {
    run(order, method, NamedOp::WKW, kw_closed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::strict_partitions_up_to;
    use crate::vertex::qfun;

    fn iv(p: &[i64]) -> IntVector {
        IntVector::new(p.to_vec())
    }

    fn t3_third() -> VarAssignment {
        VarAssignment::new().with(3, Rational::new(1, 3))
    }

    #[test]
    fn double_factorials() {
        assert_eq!(double_fact(7).unwrap(), Rational::from_int(105));
        assert_eq!(double_fact(-1).unwrap(), Rational::one());
        assert_eq!(double_fact(-5).unwrap(), Rational::new(1, 3));
        assert!(double_fact(4).is_err());
        for m in -8..8 {
            assert_eq!(
                double_fact(2 * m + 1).unwrap(),
                Rational::from_int(2 * m + 1) * double_fact(2 * m - 1).unwrap()
            );
        }
    }

    #[test]
    fn e_examples() {
        assert_eq!(e_coeff(&StrictPartition::empty()), Rational::one());
        assert_eq!(
            e_coeff(&StrictPartition::new(vec![1]).unwrap()),
            Rational::from_int(2)
        );
        assert_eq!(
            e_coeff(&StrictPartition::new(vec![2, 1]).unwrap()),
            Rational::new(4, 3)
        );
    }

    #[test]
    fn a_examples() {
        assert_eq!(a_coeff(&iv(&[3, 0])), Rational::new(2, 3));
        assert_eq!(a_coeff(&iv(&[1, 2])), Rational::new(4, 3));
        assert_eq!(a_coeff(&iv(&[2, 0])), Rational::zero());
        assert_eq!(a_pfaffian(&iv(&[4, 2])).unwrap(), Rational::new(4, 9));
        assert_eq!(a_pfaffian(&iv(&[6, 0])).unwrap(), Rational::new(2, 9));
        // A_{(2,1)} = -A_{(1,2)}, so the expansion gives (2/3)(-4/3)
        assert_eq!(a_coeff(&iv(&[2, 1])), Rational::new(-4, 3));
        assert_eq!(
            a_pfaffian(&iv(&[3, 2, 1, 0])).unwrap(),
            Rational::new(-8, 9)
        );
        assert_eq!(a_coeff(&iv(&[3, 2, 1, 0])), Rational::new(-8, 9));
    }

    #[test]
    fn point_evaluation_matches_polynomials() {
        let points = [
            t3_third(),
            VarAssignment::new().with(1, Rational::one()),
            VarAssignment::new()
                .with(1, Rational::new(2, 5))
                .with(3, Rational::new(-1, 2))
                .with(5, Rational::new(3, 7)),
        ];
        for point in &points {
            let ev = QEvaluator::new(point, 5).unwrap();
            for lam in strict_partitions_up_to(11) {
                let direct = qfun(&lam.to_vector()).evaluate(point);
                assert_eq!(ev.strict(lam.parts()), direct, "{lam:?}");
            }
            for v in crate::partition::int_vectors(3, -2, 4) {
                assert_eq!(ev.eval(&v), qfun(&v).evaluate(point), "{v:?}");
            }
        }
        assert!(QEvaluator::new(&VarAssignment::new().with(2, Rational::one()), 2).is_err());
    }

    #[test]
    fn chains() {
        let c = |p: &[i64]| chain_count(&StrictPartition::new(p.to_vec()).unwrap());
        assert_eq!(c(&[]), BigInt::from(1));
        assert_eq!(c(&[2, 1]), BigInt::from(1));
        assert_eq!(c(&[3]), BigInt::from(1));
        assert_eq!(c(&[3, 1]), BigInt::from(2));
    }

    #[test]
    fn a_small_examples() {
        assert_eq!(a_small(&iv(&[])), Rational::one());
        assert_eq!(a_small(&iv(&[3])), Rational::new(5, 24));
        assert_eq!(a_small(&iv(&[2])), Rational::zero());
    }

    #[test]
    fn low_orders() {
        for method in [Method::CutJoin, Method::Closed] {
            let s = tau_bgw(2, method).unwrap();
            assert_eq!(s.component(0), Poly::one());
            assert_eq!(s.component(1), Poly::var(1).scale(&Rational::new(1, 8)));
            assert_eq!(
                s.component(2),
                Poly::var(1).mul_var(1).scale(&Rational::new(9, 128))
            );
            let k = tau_kw(1, method).unwrap();
            let expect = Poly::var(1)
                .mul_var(1)
                .mul_var(1)
                .scale(&Rational::new(1, 6))
                + Poly::var(3).scale(&Rational::new(1, 8));
            assert_eq!(k.component(1), expect);
        }
        assert!(tau_bgw(4, Method::Both).unwrap().check_grading(1));
        assert!(tau_kw(2, Method::Both).unwrap().check_grading(3));
    }
}
