//! Rewriting `S_lambda` and `Q_lambda` for arbitrary integer vectors as
//! combinations of partition-labelled functions.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::lincomb::{Basis, LinComb};
use crate::partition::IntVector;
use crate::rational::Rational;

/// `S_lambda = +-S_nu` or `0`, by sorting the staircase-shifted parts
/// `lambda_i - i`.
pub fn straighten_schur(lambda: &IntVector) -> LinComb {
    let l = lambda.len();
    let mut shifted: Vec<i64> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &x)| x - (i as i64 + 1))
        .collect();

    // insertion sort into descending order, tracking the permutation sign
    let mut negative = false;
    for i in 1..l {
        let mut j = i;
        while j > 0 && shifted[j - 1] < shifted[j] {
            shifted.swap(j - 1, j);
            negative = !negative;
            j -= 1;
        }
    }
    if shifted.windows(2).any(|w| w[0] == w[1]) {
        return LinComb::zero(Basis::Schur);
    }
    let mut nu: Vec<i64> = shifted
        .iter()
        .enumerate()
        .map(|(i, &x)| x + i as i64 + 1)
        .collect();
    if nu.last().is_some_and(|&x| x < 0) {
        return LinComb::zero(Basis::Schur);
    }
    while nu.last() == Some(&0) {
        nu.pop();
    }
    let c = if negative {
        -Rational::one()
    } else {
        Rational::one()
    };
    LinComb::single(Basis::Schur, nu, c)
}

type InsertMemo = Mutex<HashMap<(i64, Vec<i64>), LinComb>>;

fn insert_memo() -> &'static InsertMemo {
    static MEMO: OnceLock<InsertMemo> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Expansion of `B_n Q_mu` over strict partitions, for a strict partition
/// `mu`, using `B_a B_b = -B_b B_a + 2 (-1)^a delta_{a,-b}` to move `B_n`
/// past larger parts.
fn insert_q(n: i64, mu: &[i64]) -> LinComb {
    let Some((&head, rest)) = mu.split_first() else {
        return match n {
            0 => LinComb::unit(Basis::Q),
            n if n > 0 => LinComb::single(Basis::Q, vec![n], Rational::one()),
            _ => LinComb::zero(Basis::Q),
        };
    };
    if n > head {
        let mut v = Vec::with_capacity(mu.len() + 1);
        v.push(n);
        v.extend_from_slice(mu);
        return LinComb::single(Basis::Q, v, Rational::one());
    }
    if n == head {
        return LinComb::zero(Basis::Q);
    }

    let key = (n, mu.to_vec());
    if let Some(hit) = insert_memo().lock().unwrap().get(&key) {
        return hit.clone();
    }

    let mut out = LinComb::zero(Basis::Q);
    for (nu, c) in insert_q(n, rest).terms() {
        // every part of nu is < head, so prepending keeps it strict
        let mut v = Vec::with_capacity(nu.len() + 1);
        v.push(head);
        v.extend_from_slice(nu);
        out.add_term(v, -c);
    }
    if n == -head {
        out.add_term(rest.to_vec(), Rational::from_int(2) * Rational::sign_pow(n));
    }

    insert_memo().lock().unwrap().insert(key, out.clone());
    out
}

/// Unique expansion of `Q_lambda` over strict partitions.
pub fn straighten_q(lambda: &IntVector) -> LinComb {
    let mut acc = LinComb::unit(Basis::Q);
    for &part in lambda.parts().iter().rev() {
        acc = acc.flat_map(|mu| insert_q(part, mu));
        if acc.is_zero() {
            break;
        }
    }
    acc
}

pub fn straighten(basis: Basis, lambda: &IntVector) -> LinComb {
    match basis {
        Basis::Schur => straighten_schur(lambda),
        Basis::Q => straighten_q(lambda),
    }
}
