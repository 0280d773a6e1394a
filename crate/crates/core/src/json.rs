//! Big integers as plain JSON numbers.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Number;

pub(crate) fn to_number(v: &BigInt) -> Number {
    Number::from_str(&v.to_string()).expect("integer literal is a JSON number")
}

pub(crate) fn from_number(n: &Number) -> Result<BigInt, String> {
    BigInt::from_str(&n.to_string()).map_err(|_| format!("`{n}` is not an integer"))
}

pub(crate) mod matrix {
    use super::*;

    pub fn serialize<S: Serializer>(rows: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
        rows.iter()
            .map(|r| r.iter().map(to_number).collect::<Vec<_>>())
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<BigInt>>, D::Error> {
        let raw = Vec::<Vec<Number>>::deserialize(d)?;
        raw.iter()
            .map(|r| r.iter().map(from_number).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)
    }
}

pub(crate) mod cube {
    use super::*;

    pub fn serialize<S: Serializer>(rows: &[Vec<Vec<BigInt>>], s: S) -> Result<S::Ok, S::Error> {
        rows.iter()
            .map(|m| {
                m.iter()
                    .map(|r| r.iter().map(to_number).collect::<Vec<_>>())
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Vec<BigInt>>>, D::Error> {
        let raw = Vec::<Vec<Vec<Number>>>::deserialize(d)?;
        raw.iter()
            .map(|m| {
                m.iter()
                    .map(|r| r.iter().map(from_number).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)
    }
}

pub(crate) mod scalar {
    use super::*;

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        to_number(v).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        from_number(&Number::deserialize(d)?).map_err(D::Error::custom)
    }
}
