//! Serializes big integers as plain JSON numbers, however many digits they have.

use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use serde::{Serialize, Serializer};

fn number<S: Serializer>(digits: String, serializer: S) -> Result<S::Ok, S::Error> {
    let n = serde_json::Number::from_str(&digits).map_err(serde::ser::Error::custom)?;
    n.serialize(serializer)
}

pub fn int<S: Serializer>(value: &BigInt, serializer: S) -> Result<S::Ok, S::Error> {
    number(value.to_string(), serializer)
}

pub fn uint<S: Serializer>(value: &BigUint, serializer: S) -> Result<S::Ok, S::Error> {
    number(value.to_string(), serializer)
}

pub fn opt_int<S: Serializer>(value: &Option<BigInt>, serializer: S) -> Result<S::Ok, S::Error> {
    match value {
        Some(v) => int(v, serializer),
        None => serializer.serialize_none(),
    }
}

pub fn uint_seq<S: Serializer>(values: &[BigUint], serializer: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = serializer.serialize_seq(Some(values.len()))?;
    for v in values {
        seq.serialize_element(&serde_json::Number::from_str(&v.to_string()).map_err(serde::ser::Error::custom)?)?;
    }
    seq.end()
}
