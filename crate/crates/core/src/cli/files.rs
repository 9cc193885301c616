//! JSON input files.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::automorphic::InfinityTypeData;
use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::hodge::RegularMotiveData;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MotiveFile {
    pub label: String,
    pub rank: usize,
    pub weight: i64,
    pub hodge_p: Vec<i64>,
}

impl MotiveFile {
    pub fn to_motive(&self) -> Result<RegularMotiveData> {
        if self.rank != self.hodge_p.len() {
            return Err(Error::InvalidMotive(format!(
                "rank {} but {} Hodge numbers",
                self.rank,
                self.hodge_p.len()
            )));
        }
        RegularMotiveData::new(&self.label, self.weight, self.hodge_p.clone())
    }

    pub fn from_motive(m: &RegularMotiveData) -> Self {
        MotiveFile { label: m.label().to_string(), rank: m.rank(), weight: m.weight(), hodge_p: m.hodge_p().to_vec() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepFile {
    pub label: String,
    pub n: usize,
    pub w: i64,
    pub a: Vec<HalfInt>,
    #[serde(default)]
    pub conjugate_self_dual: bool,
    #[serde(default)]
    pub discrete_series_split_place: bool,
}

impl RepFile {
    pub fn to_rep(&self) -> Result<InfinityTypeData> {
        if self.n != self.a.len() {
            return Err(Error::InvalidInfinityType(format!("n = {} but {} exponents", self.n, self.a.len())));
        }
        Ok(InfinityTypeData::new(&self.label, self.w, self.a.clone())?
            .conjugate_self_dual(self.conjugate_self_dual)
            .discrete_series_split_place(self.discrete_series_split_place))
    }

    pub fn from_rep(pi: &InfinityTypeData) -> Self {
        RepFile {
            label: pi.label().to_string(),
            n: pi.n(),
            w: pi.weight(),
            a: pi.a().to_vec(),
            conjugate_self_dual: pi.is_conjugate_self_dual(),
            discrete_series_split_place: pi.has_discrete_series_split_place(),
        }
    }
}

/// A failure to read or parse an input file.
#[derive(Debug)]
pub struct ParseError(pub String);

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

/// One file may hold a single object or an array of them.
pub fn read_json_items<T: for<'de> Deserialize<'de>>(path: &Path) -> std::result::Result<Vec<T>, ParseError> {
    let text = std::fs::read_to_string(path).map_err(|e| ParseError(format!("{}: {e}", path.display())))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| ParseError(format!("{}: {e}", path.display())))?;
    let items = match value {
        serde_json::Value::Array(items) => items,
        other => vec![other],
    };
    items
        .into_iter()
        .map(|v| serde_json::from_value(v).map_err(|e| ParseError(format!("{}: {e}", path.display()))))
        .collect()
}
