//! Canonical JSON: sorted object keys, no insignificant whitespace, exact
//! integers. Big integers are written digit for digit, never as floats.

use std::str::FromStr;

use affchar_core::{CharSeries, DynkinLabel, QLaurent};
use num_bigint::BigInt;
use serde_json::{Map, Number, Value};

pub const SCHEMA_VERSION: u64 = 1;

pub fn int(n: &BigInt) -> Value {
    // arbitrary_precision keeps every digit of the decimal rendering
    Value::Number(Number::from_str(&n.to_string()).expect("decimal integer"))
}

pub fn label(l: &DynkinLabel) -> Value {
    Value::Array(l.entries().iter().map(|&x| Value::from(x)).collect())
}

pub fn poly(p: &QLaurent) -> Value {
    Value::Array(
        p.terms()
            .map(|(e, c)| object([("exponent", Value::from(e)), ("coefficient", int(c))]))
            .collect(),
    )
}

/// `{degree, weight, multiplicity}` rows in (degree, weight) order.
pub fn entries(series: &CharSeries) -> Value {
    Value::Array(
        series
            .iter()
            .map(|(e, w, m)| object([("degree", Value::from(e)), ("weight", label(w)), ("multiplicity", int(m))]))
            .collect(),
    )
}

pub fn object<const N: usize>(fields: [(&str, Value); N]) -> Value {
    let mut map = Map::new();
    for (k, v) in fields {
        map.insert(k.to_string(), v);
    }
    Value::Object(map)
}

/// Serializes with object keys sorted at every level.
pub fn canonical(v: &Value) -> String {
    let mut out = String::new();
    write(v, &mut out);
    out
}

fn write(v: &Value, out: &mut String) {
    match v {
        Value::Array(items) => {
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write(item, out);
            }
            out.push(']');
        }
        Value::Object(map) => {
            let mut keys: Vec<&String> = map.keys().collect();
            keys.sort();
            out.push('{');
            for (i, k) in keys.into_iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&Value::String(k.clone()).to_string());
                out.push(':');
                write(&map[k], out);
            }
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}
