//! JSON shapes of the reports. Integers are emitted as numbers when they
//! fit in an `i64` and as decimal strings otherwise; rationals are always
//! `"p/q"` strings (or `"p"` when integral).

use std::fmt;

use nefcone::reduction::{DomainReport, Mat2};
use nefcone::scalars::{format_rational, parse_rational};
use nefcone::Rational;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(n) => s.serialize_i64(n),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = JsonInt;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<JsonInt, E> {
                Ok(JsonInt(v.into()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<JsonInt, E> {
                Ok(JsonInt(v.into()))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<JsonInt, E> {
                v.parse().map(JsonInt).map_err(E::custom)
            }
        }
        d.deserialize_any(V)
    }
}

impl From<&BigInt> for JsonInt {
    fn from(n: &BigInt) -> Self {
        JsonInt(n.clone())
    }
}

/// A rational as a `"p/q"` string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonRational(pub Rational);

impl Serialize for JsonRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for JsonRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map(JsonRational).map_err(de::Error::custom)
    }
}

/// Integer matrix entries, or rational strings when some entry is not
/// integral.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonMatrix {
    Integer(Vec<Vec<JsonInt>>),
    Rational(Vec<Vec<JsonRational>>),
}

impl JsonMatrix {
    pub fn from_mat2(m: &Mat2) -> Self {
        if m.iter().flatten().all(Rational::is_integer) {
            JsonMatrix::Integer(m.iter().map(|row| row.iter().map(|x| JsonInt(x.to_integer())).collect()).collect())
        } else {
            JsonMatrix::Rational(m.iter().map(|row| row.iter().cloned().map(JsonRational).collect()).collect())
        }
    }
}

pub fn int_rows<'a>(rows: impl IntoIterator<Item = &'a [BigInt]>) -> Vec<Vec<JsonInt>> {
    rows.into_iter().map(|r| r.iter().map(JsonInt::from).collect()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockEntry {
    /// `R`, `C` or `H`.
    pub kind: String,
    pub size: usize,
    pub origin: String,
    pub hermitian_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeReport {
    pub algebra: String,
    pub blocks: Vec<BlockEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PicardReport {
    pub picard_number: usize,
    pub block_dims: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmpleConeReport {
    pub cone: String,
    pub dimension: usize,
    pub orthant: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorEntry {
    pub id: String,
    pub n: u32,
    pub picard_number: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BauerReport {
    pub rational_polyhedral: bool,
    pub factors: Vec<FactorEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonSurfaceRays {
    Rational(Vec<Vec<JsonInt>>),
    Symbolic(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceReport {
    pub rational_polyhedral: bool,
    pub rays: JsonSurfaceRays,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReduceReport {
    pub gred: [JsonInt; 3],
    pub u: Vec<Vec<JsonInt>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FundDomainReport {
    pub d: u64,
    pub unit: String,
    pub pi: Vec<Vec<JsonInt>>,
    pub g: JsonMatrix,
    pub report: DomainReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub pi: Vec<Vec<JsonInt>>,
    pub g: JsonMatrix,
    pub report: DomainReport,
}
