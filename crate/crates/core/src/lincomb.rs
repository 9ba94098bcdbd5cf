//! Finite formal sums of partition labels in the Schur or Q basis.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    Schur,
    Q,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::Schur => "schur",
            Basis::Q => "q",
        }
    }
}

/// `sum c_mu * F_mu` with `F = S` or `F = Q` fixed per value. Keys are
/// partitions (strict partitions in the Q basis) with trailing zeros dropped.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb {
    basis: Basis,
    terms: BTreeMap<Vec<i64>, Rational>,
}

impl LinComb {
    pub fn zero(basis: Basis) -> Self {
        LinComb {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn single(basis: Basis, label: Vec<i64>, c: Rational) -> Self {
        let mut out = LinComb::zero(basis);
        out.add_term(label, c);
        out
    }

    /// `1 * F_empty`.
    pub fn unit(basis: Basis) -> Self {
        LinComb::single(basis, Vec::new(), Rational::one())
    }

    pub fn basis(&self) -> Basis {
        self.basis
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

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, label: &[i64]) -> Rational {
        self.terms
            .get(label)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, label: Vec<i64>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(label) {
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

    /// `self += c * other`; both must share a basis.
    pub fn add_scaled(&mut self, other: &LinComb, c: &Rational) {
        assert_eq!(self.basis, other.basis, "basis mismatch");
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> LinComb {
        let mut out = LinComb::zero(self.basis);
        out.add_scaled(self, c);
        out
    }

    pub fn plus(&self, other: &LinComb) -> LinComb {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn minus(&self, other: &LinComb) -> LinComb {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    /// Apply a label-wise linear map and collect the results.
    pub fn flat_map<F>(&self, mut f: F) -> LinComb
    where
        F: FnMut(&[i64]) -> LinComb,
    {
        let mut out = LinComb::zero(self.basis);
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// If this is `c * F_label`, return `c`.
    pub fn scalar_multiple_of(&self, label: &[i64]) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(label).cloned(),
            _ => None,
        }
    }
}

impl fmt::Debug for LinComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = match self.basis {
            Basis::Schur => "S",
            Basis::Q => "Q",
        };
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| format!("({c}){sym}{k:?}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
