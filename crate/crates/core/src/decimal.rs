//! Exact integers serialize as decimal strings.

use num_bigint::BigUint;
use serde::Serializer;

pub(crate) fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub(crate) fn serialize_option<S: Serializer>(
    v: &Option<BigUint>,
    s: S,
) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.collect_str(v),
        None => s.serialize_none(),
    }
}
