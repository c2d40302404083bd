//! Serializers writing floats with exactly six decimals.

use std::collections::BTreeMap;

use serde::ser::{Error, SerializeMap};
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

use crate::ahp::CriteriaWeights;

struct Fixed(f64);

impl Serialize for Fixed {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return Err(S::Error::custom(format!(
                "cannot write {} as a JSON number",
                self.0
            )));
        }
        // -0.000000 is not what anyone wants to read.
        let x = if self.0 == 0.0 { 0.0 } else { self.0 };
        RawValue::from_string(format!("{x:.6}"))
            .map_err(S::Error::custom)?
            .serialize(s)
    }
}

pub(super) fn value<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    Fixed(*x).serialize(s)
}

pub(super) fn map<K: Serialize, S: Serializer>(
    m: &BTreeMap<K, f64>,
    s: S,
) -> Result<S::Ok, S::Error> {
    let mut out = s.serialize_map(Some(m.len()))?;
    for (k, v) in m {
        out.serialize_entry(k, &Fixed(*v))?;
    }
    out.end()
}

pub(super) fn opt_map<K: Serialize, S: Serializer>(
    m: &BTreeMap<K, Option<f64>>,
    s: S,
) -> Result<S::Ok, S::Error> {
    let mut out = s.serialize_map(Some(m.len()))?;
    for (k, v) in m {
        out.serialize_entry(k, &v.map(Fixed))?;
    }
    out.end()
}

pub(super) fn weights<S: Serializer>(w: &CriteriaWeights, s: S) -> Result<S::Ok, S::Error> {
    let mut out = s.serialize_map(Some(w.len()))?;
    for (q, v) in w.iter() {
        out.serialize_entry(&q, &Fixed(v))?;
    }
    out.end()
}
