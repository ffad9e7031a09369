//! Input documents: a pair together with a tuple or a weight.
//!
//! A document is a JSON object `{"pair": P, "tuple": T}`, `{"pair": P, "mu": [..]}`
//! or `{"pair": P, "tilde": [..]}`. A pair is a JSON pair object, `"BI,5,1"` or
//! an identifier such as `"so5/so4"`. A tuple is a string `"(7/4, 1, 1)"`, an
//! array of components, or `{"alpha": .., "polys": [..]}`; a polynomial is an
//! expression in `u` or an array of its roots. Weight components are
//! expressions in `u` or `{"num": .., "den": ..}` objects.

use serde_json::Value;

use tyk::drinfeld::{centers, max_degree, untilde, DrinfeldTuple, HighestWeight, SymPoly, TildeWeight};
use tyk::exactalg::{RatFunc, Rational};
use tyk::tensorrep::{Family, SymmetricPair};
use tyk::Error;

use crate::expr::{parse_poly, parse_ratfunc, parse_rational};

#[derive(Clone, Debug)]
pub enum Input {
    Tuple(SymmetricPair, DrinfeldTuple),
    Weight(HighestWeight),
}

impl Input {
    pub fn pair(&self) -> &SymmetricPair {
        match self {
            Input::Tuple(p, _) => p,
            Input::Weight(w) => &w.pair,
        }
    }
}

fn parse_err(m: impl Into<String>) -> Error {
    Error::Parse(m.into())
}

pub fn parse_pair_str(s: &str) -> Result<SymmetricPair, Error> {
    let s = s.trim();
    if s.starts_with('{') {
        let v: Value = serde_json::from_str(s).map_err(|e| parse_err(format!("pair: {e}")))?;
        return parse_pair(&v);
    }
    match s {
        "so3" => SymmetricPair::build(Family::BI, 3, 1),
        "so4" => SymmetricPair::build(Family::DIa, 4, 2),
        _ => s.parse(),
    }
}

pub fn parse_pair(v: &Value) -> Result<SymmetricPair, Error> {
    match v {
        Value::String(s) => parse_pair_str(s),
        Value::Object(_) => {
            serde_json::from_value(v.clone()).map_err(|e| parse_err(format!("pair: {e}")))
        }
        _ => Err(parse_err(format!("pair: expected a string or object, got {v}"))),
    }
}

fn scalar(v: &Value) -> Result<Rational, Error> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => n
            .as_i64()
            .map(Rational::int)
            .ok_or_else(|| parse_err(format!("{n} is not an integer; write fractions as strings"))),
        _ => Err(parse_err(format!("expected a rational, got {v}"))),
    }
}

fn check_degree(d: usize) -> Result<(), Error> {
    let cap = max_degree();
    if d > cap {
        return Err(Error::DegreeLimit(format!("degree {d} exceeds TYK_MAX_DEGREE = {cap}")));
    }
    Ok(())
}

fn sym_poly(v: &Value, center: &Rational) -> Result<SymPoly, Error> {
    match v {
        Value::String(s) => {
            let p = parse_poly(s)?;
            check_degree(p.degree().unwrap_or(0))?;
            SymPoly::from_poly(&p, center.clone())
        }
        Value::Number(_) => {
            if scalar(v)? != Rational::one() {
                return Err(Error::InvalidTuple(format!("{v} is not monic")));
            }
            Ok(SymPoly::one(center.clone()))
        }
        Value::Array(rs) => {
            check_degree(rs.len())?;
            let roots = rs.iter().map(scalar).collect::<Result<Vec<_>, _>>()?;
            SymPoly::from_root_list(&roots, center.clone())
        }
        Value::Object(o) => match o.get("roots") {
            Some(rs) => sym_poly(rs, center),
            None => Err(parse_err(format!("polynomial object needs `roots`: {v}"))),
        },
        _ => Err(parse_err(format!("expected a polynomial, got {v}"))),
    }
}

/// Splits `(a, b, (c)(d))` at top-level commas.
fn split_components(s: &str) -> Result<Vec<String>, Error> {
    let t = s.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .ok_or_else(|| parse_err(format!("tuple `{s}` must be parenthesized")))?;
    let mut out = vec![];
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in inner.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return Err(parse_err(format!("unbalanced tuple `{s}`")));
        }
        if c == ',' && depth == 0 {
            out.push(std::mem::take(&mut cur).trim().to_string());
        } else {
            cur.push(c);
        }
    }
    if depth != 0 {
        return Err(parse_err(format!("unbalanced tuple `{s}`")));
    }
    out.push(cur.trim().to_string());
    Ok(out)
}

pub fn parse_tuple(pair: &SymmetricPair, v: &Value) -> Result<DrinfeldTuple, Error> {
    let cs = centers(pair);
    let has_alpha = pair.family != Family::BCD0;
    let (alpha, polys): (Option<Rational>, Vec<Value>) = match v {
        Value::String(s) => {
            let parts: Vec<Value> = split_components(s)?.into_iter().map(Value::String).collect();
            return parse_tuple(pair, &Value::Array(parts));
        }
        Value::Array(items) => {
            if has_alpha {
                let (a, rest) = items
                    .split_first()
                    .ok_or_else(|| Error::InvalidTuple(format!("{pair} needs a scalar α")))?;
                (Some(scalar(a)?), rest.to_vec())
            } else {
                (None, items.clone())
            }
        }
        Value::Object(o) => {
            let alpha = o.get("alpha").map(scalar).transpose()?;
            let polys = match o.get("polys") {
                Some(Value::Array(ps)) => ps.clone(),
                _ => return Err(parse_err("tuple object needs a `polys` array")),
            };
            (alpha, polys)
        }
        _ => return Err(parse_err(format!("expected a tuple, got {v}"))),
    };
    if polys.len() != cs.len() {
        return Err(Error::InvalidTuple(format!(
            "{pair} needs {} polynomials, got {}",
            cs.len(),
            polys.len()
        )));
    }
    let polys = polys.iter().zip(&cs).map(|(p, c)| sym_poly(p, c)).collect::<Result<_, _>>()?;
    let t = DrinfeldTuple { alpha, polys };
    t.validate(pair)?;
    Ok(t)
}

pub fn parse_component(v: &Value) -> Result<RatFunc, Error> {
    let f = match v {
        Value::String(s) => parse_ratfunc(s)?,
        Value::Number(_) => RatFunc::constant(scalar(v)?),
        Value::Object(_) => serde_json::from_value(v.clone()).map_err(|e| parse_err(format!("{e}")))?,
        _ => return Err(parse_err(format!("expected a rational function, got {v}"))),
    };
    check_degree(f.num().degree().unwrap_or(0).max(f.den().degree().unwrap_or(0)))?;
    Ok(f)
}

fn components(v: &Value) -> Result<Vec<RatFunc>, Error> {
    match v {
        Value::Array(xs) => xs.iter().map(parse_component).collect(),
        Value::String(s) => s.split(';').map(|x| parse_component(&Value::String(x.into()))).collect(),
        _ => Err(parse_err(format!("expected a list of components, got {v}"))),
    }
}

pub fn parse_weight(pair: &SymmetricPair, v: &Value) -> Result<HighestWeight, Error> {
    HighestWeight::new(pair.clone(), components(v)?)
}

pub fn parse_tilde(pair: &SymmetricPair, v: &Value) -> Result<HighestWeight, Error> {
    Ok(untilde(&TildeWeight::new(pair.clone(), components(v)?)?))
}

/// One document; `default_pair` fills in a missing `pair`.
pub fn parse_document(v: &Value, default_pair: Option<&SymmetricPair>) -> Result<Input, Error> {
    let o = v.as_object().ok_or_else(|| parse_err(format!("expected a JSON object, got {v}")))?;
    let pair = match (o.get("pair"), default_pair) {
        (Some(p), _) => parse_pair(p)?,
        (None, Some(p)) => p.clone(),
        (None, None) => return Err(parse_err("document has no `pair`")),
    };
    let keys: Vec<&str> = ["tuple", "mu", "tilde"].into_iter().filter(|k| o.contains_key(*k)).collect();
    match keys.as_slice() {
        ["tuple"] => Ok(Input::Tuple(pair.clone(), parse_tuple(&pair, &o["tuple"])?)),
        ["mu"] => Ok(Input::Weight(parse_weight(&pair, &o["mu"])?)),
        ["tilde"] => Ok(Input::Weight(parse_tilde(&pair, &o["tilde"])?)),
        _ => Err(parse_err("document needs exactly one of `tuple`, `mu`, `tilde`")),
    }
}

/// A file holds one document or an array of documents.
pub fn parse_documents(text: &str) -> Result<(bool, Vec<Value>), Error> {
    let v: Value = serde_json::from_str(text).map_err(|e| parse_err(format!("invalid JSON: {e}")))?;
    Ok(match v {
        Value::Array(xs) => (true, xs),
        x => (false, vec![x]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;
    use tyk::exactalg::q;

    fn bi5() -> SymmetricPair {
        SymmetricPair::build(Family::BI, 5, 1).unwrap()
    }

    #[test]
    fn pair_forms_agree() {
        let a = parse_pair(&json!({"family": "BI", "N": 5, "q": 1})).unwrap();
        assert_eq!(a, parse_pair_str("so5/so4").unwrap());
        assert_eq!(a, parse_pair_str("BI,5,1").unwrap());
        assert!(parse_pair_str("so3").unwrap().is_so3());
        assert!(parse_pair_str("so4").unwrap().is_so4());
        assert!(parse_pair_str("so5/so9").is_err());
    }

    #[test]
    fn tuple_forms_agree() {
        let p = bi5();
        let a = parse_tuple(&p, &json!("(7/4, 1, (u-5/4)(u-3/4))")).unwrap();
        let b = parse_tuple(&p, &json!(["7/4", 1, ["5/4", "3/4"]])).unwrap();
        let c = parse_tuple(&p, &json!({"alpha": "7/4", "polys": ["1", "u^2 - 2u + 15/16"]})).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(a.alpha, Some(q(7, 4)));
    }

    #[test]
    fn tuple_errors() {
        let p = bi5();
        assert!(parse_tuple(&p, &json!("(7/4, 1)")).is_err());
        assert!(parse_tuple(&p, &json!("(7/4, 1, u^2+1)")).is_err());
        assert!(parse_tuple(&p, &json!("7/4, 1, 1")).is_err());
        assert!(parse_tuple(&p, &json!(["5/4", 1, "2u"])).is_err());
    }

    #[test]
    fn documents() {
        let d = parse_document(&json!({"pair": "so5/so4", "mu": ["1", "1", "1"]}), None).unwrap();
        assert!(matches!(d, Input::Weight(_)));
        let d = parse_document(&json!({"tuple": "(5/4, 1, 1)"}), Some(&bi5())).unwrap();
        assert!(matches!(d, Input::Tuple(..)));
        assert!(parse_document(&json!({"tuple": "(5/4, 1, 1)"}), None).is_err());
        assert!(parse_document(&json!({"pair": "so5/so4", "mu": [], "tuple": []}), None).is_err());
    }
}
