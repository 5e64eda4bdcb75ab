//! Serde helpers. Big integers are written as decimal strings so that no
//! JSON consumer silently rounds them.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

pub(crate) fn decimal<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub(crate) fn decimals<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}

pub(crate) fn length_table<S: Serializer>(
    values: &BTreeMap<u32, BigInt>,
    s: S,
) -> Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Row {
        n: u32,
        length: String,
    }
    let mut seq = s.serialize_seq(Some(values.len()))?;
    for (n, h) in values {
        seq.serialize_element(&Row {
            n: *n,
            length: h.to_string(),
        })?;
    }
    seq.end()
}
