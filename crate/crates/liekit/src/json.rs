//! JSON encodings. Rationals travel as `"p/q"` strings (`"p"` when integral);
//! multiplicities are numbers, or decimal strings once they leave `i64`.

use liekit_core::{Multiplicity, Rational, Weight};
use serde_json::{json, Map, Value};

use crate::{CliError, Result};

pub const SCHEMA_VERSION: u64 = 1;

pub fn rational(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn parse_rational(v: &Value) -> Result<Rational> {
    let bad = || CliError::Usage(format!("expected an integer or \"p/q\" string, found {v}"));
    match v {
        Value::Number(n) => n.as_i64().map(Rational::from_integer).ok_or_else(bad),
        Value::String(s) => match s.split_once('/') {
            None => s.trim().parse::<i64>().map(Rational::from_integer).map_err(|_| bad()),
            Some((p, q)) => {
                let p: i64 = p.trim().parse().map_err(|_| bad())?;
                let q: i64 = q.trim().parse().map_err(|_| bad())?;
                if q == 0 {
                    return Err(bad());
                }
                Ok(Rational::new(p, q))
            }
        },
        _ => Err(bad()),
    }
}

pub fn weight(w: &Weight) -> Value {
    let mut m = Map::new();
    m.insert("coords".into(), Value::Array(w.coords().iter().map(rational).collect()));
    if w.is_affine() {
        m.insert("level".into(), rational(&w.level()));
        m.insert("grade".into(), rational(&w.grade()));
    }
    Value::Object(m)
}

pub fn mult(m: &Multiplicity) -> Value {
    match i64::try_from(m) {
        Ok(x) => json!(x),
        Err(_) => Value::String(m.to_string()),
    }
}

/// Wraps a command result with the schema version and command name.
pub fn envelope(command: &str, algebra: Option<&str>, body: Map<String, Value>) -> Value {
    let mut m = body;
    m.insert("schema_version".into(), json!(SCHEMA_VERSION));
    m.insert("command".into(), json!(command));
    if let Some(a) = algebra {
        m.insert("algebra".into(), json!(a));
    }
    Value::Object(m)
}

pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use liekit_core::weight::frac;
    use num_bigint::BigInt;

    #[test]
    fn rationals() {
        assert_eq!(rational(&frac(3, 2)), json!("3/2"));
        assert_eq!(rational(&frac(4, 2)), json!("2"));
        assert_eq!(parse_rational(&json!("-6/4")).unwrap(), frac(-3, 2));
        assert_eq!(parse_rational(&json!(5)).unwrap(), frac(5, 1));
        assert!(parse_rational(&json!("1/0")).is_err());
        assert!(parse_rational(&json!(0.5)).is_err());
    }

    #[test]
    fn multiplicities() {
        assert_eq!(mult(&BigInt::from(7)), json!(7));
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(mult(&big), json!("123456789012345678901234567890"));
    }
}
