//! Serializers that write exact values as strings, e.g. `"5/2"`.
//! Use with `#[serde(serialize_with = "...")]`.

use serde::ser::{SerializeSeq, Serializer};

use super::Rational;

pub fn rational<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(r)
}

pub fn rationals<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for r in v {
        seq.serialize_element(&r.to_string())?;
    }
    seq.end()
}

pub fn option_rationals<S: Serializer>(v: &Option<Vec<Rational>>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => rationals(v, s),
        None => s.serialize_none(),
    }
}
