//! Canonical JSON forms. Rationals are strings `"num/den"` (just `"num"`
//! when integral), monomials map variable index to exponent, both as strings.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::lincomb::{Basis, LinComb};
use crate::poly::{Monomial, Poly};
use crate::rational::Rational;
use crate::tau::Series;

pub fn rational_to_json(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn monomial_to_json(m: &Monomial) -> Value {
    let mut map = Map::new();
    for (n, e) in m.factors() {
        map.insert(n.to_string(), Value::String(e.to_string()));
    }
    Value::Object(map)
}

/// `{"terms":[{"coeff":..,"monomial":{..}}, ..]}` in the canonical term order.
pub fn poly_to_json(p: &Poly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(m, c)| json!({"coeff": rational_to_json(c), "monomial": monomial_to_json(m)}))
        .collect();
    json!({ "terms": terms })
}

pub fn lincomb_to_json(lc: &LinComb) -> Value {
    let terms: Vec<Value> = lc
        .terms()
        .map(|(label, c)| json!({"coeff": rational_to_json(c), "partition": label}))
        .collect();
    json!({ "basis": lc.basis().name(), "terms": terms })
}

pub fn series_to_json(s: &Series) -> Value {
    let mut comps = Map::new();
    for (n, p) in &s.components {
        comps.insert(n.to_string(), poly_to_json(p));
    }
    json!({ "order": s.order, "components": comps })
}

fn bad(what: &str) -> Error {
    Error::Parse(format!("malformed JSON: {what}"))
}

fn parse_rational(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => s.parse(),
        Value::Number(n) => n
            .as_i64()
            .map(Rational::from_int)
            .ok_or_else(|| bad("non-integer number coefficient")),
        _ => Err(bad("coefficient")),
    }
}

fn parse_u64(v: &Value) -> Result<u64> {
    match v {
        Value::String(s) => s.trim().parse().map_err(|_| bad("integer string")),
        Value::Number(n) => n.as_u64().ok_or_else(|| bad("non-negative integer")),
        _ => Err(bad("integer")),
    }
}

/// Accepts both the wrapped `{"terms":[..]}` form and a bare term array.
pub fn poly_from_json(v: &Value) -> Result<Poly> {
    let terms = match v {
        Value::Object(o) => o.get("terms").ok_or_else(|| bad("missing terms"))?,
        other => other,
    };
    let terms = terms
        .as_array()
        .ok_or_else(|| bad("terms must be an array"))?;
    let mut p = Poly::zero();
    for t in terms {
        let c = parse_rational(t.get("coeff").ok_or_else(|| bad("missing coeff"))?)?;
        let mono = match t.get("monomial") {
            None => Monomial::one(),
            Some(Value::Object(m)) => {
                let mut pairs = Vec::with_capacity(m.len());
                for (k, e) in m {
                    let n: usize = k.trim().parse().map_err(|_| bad("variable index"))?;
                    if n == 0 {
                        return Err(bad("variable index 0"));
                    }
                    let e = u32::try_from(parse_u64(e)?).map_err(|_| bad("exponent"))?;
                    pairs.push((n, e));
                }
                Monomial::from_pairs(pairs)
            }
            Some(_) => return Err(bad("monomial must be an object")),
        };
        p.add_term(mono, c);
    }
    Ok(p)
}

pub fn lincomb_from_json(v: &Value) -> Result<LinComb> {
    let basis = match v.get("basis").and_then(Value::as_str) {
        Some("schur") => Basis::Schur,
        Some("q") => Basis::Q,
        _ => return Err(bad("basis")),
    };
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("terms"))?;
    let mut lc = LinComb::zero(basis);
    for t in terms {
        let c = parse_rational(t.get("coeff").ok_or_else(|| bad("missing coeff"))?)?;
        let label = t
            .get("partition")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("partition"))?
            .iter()
            .map(|x| x.as_i64().ok_or_else(|| bad("partition entry")))
            .collect::<Result<Vec<i64>>>()?;
        lc.add_term(label, c);
    }
    Ok(lc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::IntVector;
    use crate::vertex::qfun;

    #[test]
    fn q21_matches_documented_form() {
        let p = qfun(&IntVector::new(vec![2, 1]));
        let s = serde_json::to_string(&poly_to_json(&p)).unwrap();
        assert_eq!(
            s,
            r#"{"terms":[{"coeff":"4/3","monomial":{"1":"3"}},{"coeff":"-4","monomial":{"3":"1"}}]}"#
        );
        assert_eq!(poly_from_json(&poly_to_json(&p)).unwrap(), p);
    }

    #[test]
    fn variable_keys_keep_numeric_order() {
        let p = Poly::term(
            Monomial::from_pairs([(2, 1), (11, 2)]),
            Rational::new(-1, 2),
        );
        let s = serde_json::to_string(&poly_to_json(&p)).unwrap();
        assert_eq!(
            s,
            r#"{"terms":[{"coeff":"-1/2","monomial":{"2":"1","11":"2"}}]}"#
        );
    }

    #[test]
    fn lincomb_round_trip() {
        let mut lc = LinComb::zero(Basis::Q);
        lc.add_term(vec![3], Rational::from_int(4));
        lc.add_term(vec![2, 1], Rational::from_int(-1));
        let v = lincomb_to_json(&lc);
        assert_eq!(v["basis"], "q");
        assert_eq!(lincomb_from_json(&v).unwrap(), lc);
    }

    #[test]
    fn rejects_garbage() {
        assert!(poly_from_json(&json!({"terms": [{"coeff": "1/0"}]})).is_err());
        assert!(
            poly_from_json(&json!({"terms": [{"coeff": "1", "monomial": {"0": "1"}}]})).is_err()
        );
        assert!(lincomb_from_json(&json!({"basis": "x", "terms": []})).is_err());
    }
}
