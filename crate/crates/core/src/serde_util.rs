//! Serde helpers: exact rationals travel as `"p/q"` strings.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use serde::{de, Deserialize, Deserializer, Serializer};

pub fn rational_to_string<T: std::fmt::Display + Clone + num_integer::Integer>(
    r: &num_rational::Ratio<T>,
) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn parse_parts(s: &str) -> Option<(&str, &str)> {
    match s.split_once('/') {
        Some((p, q)) => Some((p.trim(), q.trim())),
        None => Some((s.trim(), "1")),
    }
}

pub fn parse_big_rational(s: &str) -> Option<BigRational> {
    let (p, q) = parse_parts(s)?;
    let p: BigInt = p.parse().ok()?;
    let q: BigInt = q.parse().ok()?;
    if q == BigInt::from(0) {
        return None;
    }
    Some(BigRational::new(p, q))
}

pub fn parse_rational64(s: &str) -> Option<Rational64> {
    let (p, q) = parse_parts(s)?;
    let p: i64 = p.parse().ok()?;
    let q: i64 = q.parse().ok()?;
    if q == 0 {
        return None;
    }
    Some(Rational64::new(p, q))
}

pub mod big_rational {
    use super::*;

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rational_to_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        parse_big_rational(&s).ok_or_else(|| de::Error::custom(format!("bad rational {s:?}")))
    }
}

pub mod rational64 {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational64, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rational_to_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational64, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational64(&s).ok_or_else(|| de::Error::custom(format!("bad rational {s:?}")))
    }
}

pub mod big_rational_map {
    use super::*;
    use serde::ser::SerializeMap;

    pub fn serialize<S: Serializer>(
        m: &BTreeMap<u64, BigRational>,
        s: S,
    ) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(m.len()))?;
        for (k, v) in m {
            map.serialize_entry(&k.to_string(), &rational_to_string(v))?;
        }
        map.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<BTreeMap<u64, BigRational>, D::Error> {
        let raw = BTreeMap::<String, String>::deserialize(d)?;
        raw.into_iter()
            .map(|(k, v)| {
                let k: u64 =
                    k.parse().map_err(|_| de::Error::custom(format!("bad frequency {k:?}")))?;
                let v = parse_big_rational(&v)
                    .ok_or_else(|| de::Error::custom(format!("bad rational {v:?}")))?;
                Ok((k, v))
            })
            .collect()
    }
}
