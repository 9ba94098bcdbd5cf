//! Sparse polynomials over the rationals in graded variables `t_1, t_2, ...`
//! with `deg t_n = n`.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Product `t_1^{e_1} t_2^{e_2} ...`, stored densely by variable index with
/// trailing zero exponents trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    degree: u32,
    exps: SmallVec<[u32; 8]>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    /// `t_n^e`.
    pub fn var_pow(n: usize, e: u32) -> Self {
        assert!(n >= 1, "variable indices start at 1");
        Monomial::from_exponents((1..n).map(|_| 0).chain(std::iter::once(e)))
    }

    /// Build from exponents of `t_1, t_2, ...` in order.
    pub fn from_exponents<I: IntoIterator<Item = u32>>(exps: I) -> Self {
        let mut v: SmallVec<[u32; 8]> = exps.into_iter().collect();
        while v.last() == Some(&0) {
            v.pop();
        }
        let degree = v.iter().enumerate().map(|(i, &e)| (i as u32 + 1) * e).sum();
        Monomial { degree, exps: v }
    }

    /// Build from `(index, exponent)` pairs; repeated indices accumulate.
    pub fn from_pairs<I: IntoIterator<Item = (usize, u32)>>(pairs: I) -> Self {
        let mut v: SmallVec<[u32; 8]> = SmallVec::new();
        for (n, e) in pairs {
            assert!(n >= 1, "variable indices start at 1");
            if v.len() < n {
                v.resize(n, 0);
            }
            v[n - 1] += e;
        }
        Monomial::from_exponents(v)
    }

    /// Graded degree `sum n * e_n`.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Exponent of `t_n` (zero when absent).
    pub fn exponent(&self, n: usize) -> u32 {
        if n == 0 {
            return 0;
        }
        self.exps.get(n - 1).copied().unwrap_or(0)
    }

    /// Largest variable index present, 0 for the unit monomial.
    pub fn max_var(&self) -> usize {
        self.exps.len()
    }

    /// Nonzero `(index, exponent)` pairs in increasing index order.
    pub fn factors(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i + 1, e))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.exps.len() >= other.exps.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut exps = long.exps.clone();
        for (e, s) in exps.iter_mut().zip(short.exps.iter()) {
            *e += *s;
        }
        Monomial {
            degree: self.degree + other.degree,
            exps,
        }
    }

    /// Lower the exponent of `t_n` by `by`; `None` if that would go negative.
    pub fn lower(&self, n: usize, by: u32) -> Option<Monomial> {
        let e = self.exponent(n);
        if e < by {
            return None;
        }
        if by == 0 {
            return Some(self.clone());
        }
        let mut exps = self.exps.clone();
        exps[n - 1] -= by;
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Some(Monomial {
            degree: self.degree - by * n as u32,
            exps,
        })
    }

    /// True when every variable present has odd index.
    pub fn is_odd_supported(&self) -> bool {
        self.factors().all(|(n, _)| n % 2 == 1)
    }
}

/// Ascending graded degree; within a degree, larger exponent of `t_1`
/// first, then of `t_2`, and so on.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            let len = self.exps.len().max(other.exps.len());
            for i in 0..len {
                let a = self.exps.get(i).copied().unwrap_or(0);
                let b = other.exps.get(i).copied().unwrap_or(0);
                match b.cmp(&a) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (n, e) in self.factors() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "t{n}")?;
            } else {
                write!(f, "t{n}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Rational values assigned to variables; unlisted variables evaluate to 0.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VarAssignment {
    values: BTreeMap<usize, Rational>,
}

impl VarAssignment {
    pub fn new() -> Self {
        VarAssignment::default()
    }

    pub fn with(mut self, n: usize, value: Rational) -> Self {
        self.values.insert(n, value);
        self
    }

    pub fn get(&self, n: usize) -> Rational {
        self.values.get(&n).cloned().unwrap_or_else(Rational::zero)
    }
}

/// Polynomial in canonical form: no zero coefficients, terms kept in the
/// deterministic [`Monomial`] order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::term(Monomial::one(), c)
    }

    /// The variable `t_n`.
    pub fn var(n: usize) -> Self {
        Poly::term(Monomial::var_pow(n, 1), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut p = Poly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one())
    }

    /// Add `c * m` in place.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Poly, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (m, a) in &other.terms {
            self.add_term(m.clone(), a * c);
        }
    }

    pub fn add_assign_ref(&mut self, other: &Poly) {
        for (m, a) in &other.terms {
            self.add_term(m.clone(), a.clone());
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_poly(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, a1) in &self.terms {
            for (m2, a2) in &other.terms {
                out.add_term(m1.mul(m2), a1 * a2);
            }
        }
        out
    }

    /// `self * c * t^m` for a single term.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    /// Formal partial derivative with respect to `t_n`.
    pub fn partial(&self, n: usize) -> Poly {
        assert!(n >= 1, "variable indices start at 1");
        let mut out = Poly::zero();
        for (m, a) in &self.terms {
            let e = m.exponent(n);
            if e == 0 {
                continue;
            }
            let lowered = m.lower(n, 1).expect("exponent checked");
            out.add_term(lowered, a * Rational::from_int(e as i64));
        }
        out
    }

    /// `d^j/dt_n^j` in one pass.
    pub fn partial_pow(&self, n: usize, j: u32) -> Poly {
        let mut out = Poly::zero();
        for (m, a) in &self.terms {
            let e = m.exponent(n);
            if e < j {
                continue;
            }
            let falling: i64 = (0..j).map(|i| (e - i) as i64).product();
            out.add_term(m.lower(n, j).unwrap(), a * Rational::from_int(falling));
        }
        out
    }

    /// `self * t_n`.
    pub fn mul_var(&self, n: usize) -> Poly {
        self.mul_term(&Monomial::var_pow(n, 1), &Rational::one())
    }

    pub fn evaluate(&self, a: &VarAssignment) -> Rational {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (n, e) in m.factors() {
                let x = a.get(n);
                if x.is_zero() {
                    v = Rational::zero();
                    break;
                }
                v = v * x.pow(e as i32);
            }
            total += v;
        }
        total
    }

    pub fn homogeneous_component(&self, d: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Largest graded degree of a term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        // terms are sorted by ascending degree
        self.terms.keys().next_back().map(|m| m.degree())
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().next().map(|m| m.degree())
    }

    /// Zero polynomials count as homogeneous of every degree.
    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree() == self.min_degree()
    }

    pub fn max_var(&self) -> usize {
        self.terms.keys().map(|m| m.max_var()).max().unwrap_or(0)
    }

    pub fn is_odd_supported(&self) -> bool {
        self.terms.keys().all(|m| m.is_odd_supported())
    }

    /// Error naming the first even-index variable, if any.
    pub fn require_odd_supported(&self) -> Result<()> {
        for m in self.terms.keys() {
            if let Some((n, _)) = m.factors().find(|(n, _)| n % 2 == 0) {
                return Err(Error::EvenVariable(n));
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m.is_one() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{m:?}")?;
            } else {
                write!(f, "({c})*{m:?}")?;
            }
        }
        Ok(())
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        if self.len() < rhs.len() {
            return rhs + self;
        }
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.mul_poly(rhs)
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        self.mul_poly(&rhs)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.clone().neg()
    }
}

/// Which arithmetic operation [`poly_arith`] performs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(kind: ArithKind, p: &Poly, q: &Poly) -> Poly {
    match kind {
        ArithKind::Add => p + q,
        ArithKind::Sub => p - q,
        ArithKind::Mul => p * q,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn t(n: usize) -> Poly {
        Poly::var(n)
    }

    /// 2 t_3 + 4/3 t_1^3, i.e. Q_(3).
    fn q3() -> Poly {
        Poly::from_terms([
            (Monomial::var_pow(3, 1), r(2, 1)),
            (Monomial::var_pow(1, 3), r(4, 3)),
        ])
    }

    #[test]
    fn arith_examples() {
        assert_eq!(&t(1) + &t(1), t(1).scale(&r(2, 1)));
        assert_eq!(&t(1) * &t(1), Poly::term(Monomial::var_pow(1, 2), r(1, 1)));
        let scaled = q3().scale(&r(3, 2));
        let expect = Poly::from_terms([
            (Monomial::var_pow(3, 1), r(3, 1)),
            (Monomial::var_pow(1, 3), r(2, 1)),
        ]);
        assert_eq!(scaled, expect);
        assert!((&t(2) - &t(2)).is_zero());
    }

    #[test]
    fn partial_examples() {
        let t1sq = &t(1) * &t(1);
        assert_eq!(t1sq.partial(1), t(1).scale(&r(2, 1)));
        assert!(t(3).partial(1).is_zero());
        assert_eq!(q3().partial(3), Poly::constant(r(2, 1)));
        assert_eq!(q3().partial_pow(1, 3), Poly::constant(r(8, 1)));
    }

    #[test]
    fn mul_var_examples() {
        assert_eq!(Poly::one().mul_var(1), t(1));
        assert_eq!(t(1).mul_var(3), &t(1) * &t(3));
        assert_eq!(
            (&t(1) * &t(1)).mul_var(1),
            Poly::term(Monomial::var_pow(1, 3), r(1, 1))
        );
    }

    #[test]
    fn evaluate_examples() {
        let a = VarAssignment::new().with(1, r(1, 1));
        assert_eq!(t(1).scale(&r(2, 1)).evaluate(&a), r(2, 1));
        let a3 = VarAssignment::new().with(3, r(1, 3));
        assert_eq!(q3().evaluate(&a3), r(2, 3));
        assert!(Poly::zero().evaluate(&a3).is_zero());
    }

    #[test]
    fn homogeneous_examples() {
        assert_eq!(q3().homogeneous_component(3), q3());
        let p = &Poly::one() + &t(1);
        assert_eq!(p.homogeneous_component(0), Poly::one());
        assert!((&t(1) * &t(3)).homogeneous_component(3).is_zero());
    }

    #[test]
    fn term_order_is_graded_then_t1_heavy() {
        let a = Monomial::var_pow(1, 3);
        let b = Monomial::from_pairs([(1, 1), (2, 1)]);
        let c = Monomial::var_pow(3, 1);
        let d = Monomial::var_pow(1, 1);
        let mut v = vec![c.clone(), b.clone(), d.clone(), a.clone()];
        v.sort();
        assert_eq!(v, vec![d, a, b, c]);
    }

    #[test]
    fn odd_support() {
        assert!(q3().require_odd_supported().is_ok());
        assert_eq!(
            (&q3() + &t(4)).require_odd_supported(),
            Err(Error::EvenVariable(4))
        );
    }
}
