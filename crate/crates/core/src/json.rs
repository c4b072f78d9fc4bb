//! Serialize big integers as exact JSON numbers.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

fn number(x: &BigInt) -> serde_json::Number {
    serde_json::Number::from_str(&x.to_string()).expect("decimal integer is a JSON number")
}

pub fn big<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    number(x).serialize(s)
}

pub fn big_vec<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&number(x))?;
    }
    seq.end()
}

/// A JSON value holding an exact integer.
pub fn value(x: &BigInt) -> serde_json::Value {
    serde_json::Value::Number(number(x))
}
