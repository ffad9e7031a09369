//! JSON renderings. Canonical output uses the library's serde forms; with
//! `pretty`, pairs become identifiers and polynomials factored strings.

use serde_json::{json, Value};

use tyk::drinfeld::{Classification, DrinfeldTuple, HighestWeight, TupleData};
use tyk::tensorrep::SymmetricPair;
use tyk::Error;

pub fn pair(p: &SymmetricPair, pretty: bool) -> Value {
    if pretty {
        Value::String(p.id())
    } else {
        serde_json::to_value(p).expect("pair serializes")
    }
}

pub fn tuple(t: &DrinfeldTuple, pretty: bool) -> Value {
    if pretty {
        Value::String(t.to_pretty())
    } else {
        serde_json::to_value(t).expect("tuple serializes")
    }
}

pub fn tuple_data(t: &TupleData, pretty: bool) -> Value {
    match (t, pretty) {
        (TupleData::Drinfeld(d), _) => tuple(d, pretty),
        (TupleData::So4(s), true) => Value::String(s.to_pretty()),
        (TupleData::So4(s), false) => serde_json::to_value(s).expect("tuple serializes"),
    }
}

pub fn weight(w: &HighestWeight, pretty: bool) -> Value {
    let mu: Vec<Value> = if pretty {
        w.mu.iter().map(|f| Value::String(f.to_factored())).collect()
    } else {
        w.mu.iter().map(|f| serde_json::to_value(f).expect("weight serializes")).collect()
    };
    json!({ "pair": pair(&w.pair, pretty), "mu": mu })
}

pub fn with_tuple(p: &SymmetricPair, t: &DrinfeldTuple, pretty: bool) -> Value {
    json!({ "pair": pair(p, pretty), "tuple": tuple(t, pretty) })
}

pub fn classification(p: &SymmetricPair, c: &Classification, pretty: bool) -> Value {
    json!({
        "pair": pair(p, pretty),
        "verdict": c.verdict,
        "tuple": c.tuple.as_ref().map(|t| tuple_data(t, pretty)),
        "violations": c.violations,
    })
}

pub fn error(e: &Error) -> Value {
    json!({ "error": e.name(), "message": e.to_string() })
}
