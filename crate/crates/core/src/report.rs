//! Count reports and their JSON/CSV serialization.
//!
//! Values are serialized as strings (counts overflow fixed-width integers
//! almost immediately) and the whole payload is deterministic: no
//! timestamps, no thread counts, fixed field order.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::qexact::IntPoly;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Gl,
    U,
    Sp,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Gl => "gl",
            Family::U => "u",
            Family::Sp => "sp",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Pairs,
    NilpotentPairs,
    ClassSize,
    OrbitSize,
    GroupOrder,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Pairs => "pairs",
            Kind::NilpotentPairs => "nilpotent_pairs",
            Kind::ClassSize => "class_size",
            Kind::OrbitSize => "orbit_size",
            Kind::GroupOrder => "group_order",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BackendTag {
    ClassSum,
    GenFn,
    Oracle,
}

impl BackendTag {
    pub fn name(self) -> &'static str {
        match self {
            BackendTag::ClassSum => "class_sum",
            BackendTag::GenFn => "gen_fn",
            BackendTag::Oracle => "oracle",
        }
    }
}

impl fmt::Display for BackendTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The q of a run: a concrete integer or the indeterminate.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum QSpec {
    Numeric(BigInt),
    Symbolic,
}

impl fmt::Display for QSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QSpec::Numeric(q) => write!(f, "{q}"),
            QSpec::Symbolic => write!(f, "symbolic"),
        }
    }
}

impl FromStr for QSpec {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if s == "symbolic" {
            return Ok(QSpec::Symbolic);
        }
        s.parse::<BigInt>()
            .map(QSpec::Numeric)
            .map_err(|e| e.to_string())
    }
}

/// An exact count: an integer, or a q-polynomial in canonical form.
/// Constant polynomials normalize to the integer variant, so the string
/// form is unambiguous.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CountValue {
    Int(BigInt),
    Poly(IntPoly),
}

impl CountValue {
    pub fn from_poly(p: IntPoly) -> Self {
        match p.degree() {
            None => CountValue::Int(BigInt::from(0)),
            Some(0) => CountValue::Int(p.coeff(0)),
            Some(_) => CountValue::Poly(p),
        }
    }
}

impl fmt::Display for CountValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CountValue::Int(v) => write!(f, "{v}"),
            CountValue::Poly(p) => write!(f, "{p}"),
        }
    }
}

impl FromStr for CountValue {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if let Ok(v) = s.parse::<BigInt>() {
            return Ok(CountValue::Int(v));
        }
        s.parse::<IntPoly>().map(CountValue::from_poly)
    }
}

fn serialize_display<T: fmt::Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn deserialize_qspec<'de, D: Deserializer<'de>>(d: D) -> Result<QSpec, D::Error> {
    let s = String::deserialize(d)?;
    s.parse().map_err(serde::de::Error::custom)
}

fn deserialize_value<'de, D: Deserializer<'de>>(d: D) -> Result<CountValue, D::Error> {
    let s = String::deserialize(d)?;
    s.parse().map_err(serde::de::Error::custom)
}

/// One computed count with its provenance.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CountReport {
    pub family: Family,
    pub kind: Kind,
    pub n: u32,
    #[serde(
        serialize_with = "serialize_display",
        deserialize_with = "deserialize_qspec"
    )]
    pub q: QSpec,
    pub backend: BackendTag,
    #[serde(
        serialize_with = "serialize_display",
        deserialize_with = "deserialize_value"
    )]
    pub value: CountValue,
}

impl CountReport {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.family, self.kind, self.n, self.q, self.backend, self.value
        )
    }
}

/// Run metadata, kept separate from the result payload.  Everything here is
/// a pure function of the invocation so repeated runs emit identical bytes.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Meta {
    pub tool: String,
    pub version: String,
    pub command: String,
}

impl Meta {
    pub fn new(command: impl Into<String>) -> Self {
        Meta {
            tool: "commlie".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
        }
    }
}

/// The JSON document emitted by the CLI: {"meta": …, "results": […]}.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RunOutput {
    pub meta: Meta,
    pub results: Vec<CountReport>,
}

impl RunOutput {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("family,kind,n,q,backend,value\n");
        for r in &self.results {
            s.push_str(&r.csv_row());
            s.push('\n');
        }
        s
    }
}
