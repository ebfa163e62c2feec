//! Exact numbers in JSON: native integers up to 2^53 in magnitude,
//! decimal strings beyond, `"a/b"` strings for non-integral rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde_json::{Map, Value};

use curvezeta::zeta::ZetaNumerator;

/// Largest magnitude an IEEE double holds exactly.
pub const SAFE_INTEGER: u64 = 1 << 53;

pub fn int(v: &BigInt) -> Value {
    match v.abs().to_u64() {
        Some(m) if m <= SAFE_INTEGER => Value::from(v.to_i64().expect("fits in 54 bits")),
        _ => Value::String(v.to_string()),
    }
}

pub fn uint(v: u128) -> Value {
    if v <= SAFE_INTEGER as u128 {
        Value::from(v as u64)
    } else {
        Value::String(v.to_string())
    }
}

pub fn sint(v: i128) -> Value {
    if v.unsigned_abs() <= SAFE_INTEGER as u128 {
        Value::from(v as i64)
    } else {
        Value::String(v.to_string())
    }
}

pub fn rational(v: &BigRational) -> Value {
    if v.is_integer() {
        int(&v.to_integer())
    } else {
        Value::String(format!("{}/{}", v.numer(), v.denom()))
    }
}

pub fn ints<'a>(vs: impl IntoIterator<Item = &'a BigInt>) -> Value {
    Value::Array(vs.into_iter().map(int).collect())
}

pub fn rationals<'a>(vs: impl IntoIterator<Item = &'a BigRational>) -> Value {
    Value::Array(vs.into_iter().map(rational).collect())
}

/// `{q, genus, coeffs}` with `coeffs` listing `c_0..c_2g`.
pub fn numerator(z: &ZetaNumerator) -> Value {
    let mut m = Map::new();
    m.insert("q".into(), Value::from(z.q().q()));
    m.insert("genus".into(), Value::from(z.genus()));
    m.insert("coeffs".into(), rationals(z.coeffs()));
    m.insert("integral".into(), Value::Bool(z.is_integral()));
    Value::Object(m)
}

/// An object from `(key, value)` pairs, keeping their order.
pub fn object<const N: usize>(pairs: [(&str, Value); N]) -> Map<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}
