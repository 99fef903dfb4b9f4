//! The JSON hypergroup document format.
//!
//! ```json
//! {
//!   "name": "Z2(1/2)",
//!   "order": 2,
//!   "involution": [0, 1],
//!   "constants": [[[1, 0], [0, 1]], [[0, 1], ["1/2", "1/2"]]],
//!   "metadata": {"family": "z2_theta", "params": {"theta": 0.5}}
//! }
//! ```
//!
//! `constants[i][j][k]` is the mass of `δᵢ * δⱼ` at `k`. Entries are numbers or exact
//! rational strings `"p/q"` (or integer strings).

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::cli::canonical::to_canonical_string;
use crate::constructions::preset;
use crate::error::{Error, Result};
use crate::hypergroup::{validate, FiniteHypergroup, StructureTensor};

/// Largest magnitude for which a rational's numerator and denominator are exact in `f64`.
const EXACT_INT: i64 = 1 << 53;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Number(f64),
    Rational(String),
}

impl Entry {
    pub fn value(&self) -> Result<f64> {
        match self {
            Entry::Number(x) => Ok(*x),
            Entry::Rational(s) => parse_rational(s),
        }
    }
}

/// Parses `"p/q"` or `"p"` with `|p|, |q| ≤ 2⁵³`; the single division is correctly rounded.
pub fn parse_rational(s: &str) -> Result<f64> {
    let bad = || Error::Document(format!("invalid rational {s:?}"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p: i64 = p.parse().map_err(|_| bad())?;
    let q: i64 = q.parse().map_err(|_| bad())?;
    if q == 0 || p.abs() > EXACT_INT || q.abs() > EXACT_INT {
        return Err(bad());
    }
    Ok(p as f64 / q as f64)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    pub family: String,
    #[serde(default)]
    pub params: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HypergroupDocument {
    pub name: String,
    pub order: usize,
    pub involution: Vec<usize>,
    pub constants: Vec<Vec<Vec<Entry>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

impl HypergroupDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))
    }

    /// Converts and validates.
    pub fn to_hypergroup(&self) -> Result<FiniteHypergroup> {
        let n = self.order;
        if self.constants.len() != n
            || self.constants.iter().any(|r| r.len() != n || r.iter().any(|c| c.len() != n))
        {
            return Err(Error::DimensionMismatch(format!("constants must be {n}×{n}×{n}")));
        }
        let mut data = Vec::with_capacity(n * n * n);
        for plane in &self.constants {
            for row in plane {
                for e in row {
                    data.push(e.value()?);
                }
            }
        }
        validate(self.name.clone(), StructureTensor::new(n, data)?, self.involution.clone())
    }

    pub fn from_hypergroup(k: &FiniteHypergroup) -> Self {
        let n = k.order();
        HypergroupDocument {
            name: k.name().to_string(),
            order: n,
            involution: k.involution().to_vec(),
            constants: (0..n)
                .map(|i| {
                    (0..n).map(|j| k.product(i, j).iter().map(|&v| Entry::Number(v)).collect()).collect()
                })
                .collect(),
            metadata: None,
        }
    }

    pub fn to_json(&self) -> String {
        to_canonical_string(&serde_json::to_value(self).expect("document serializes"))
    }
}

/// Loads `preset:NAME` from the registry or a document from a file path.
pub fn load(input: &str) -> Result<FiniteHypergroup> {
    if let Some(name) = input.strip_prefix("preset:") {
        return preset(name)
            .cloned()
            .ok_or_else(|| Error::Document(format!("unknown preset {name:?}")));
    }
    load_path(Path::new(input))
}

pub fn load_path(path: &Path) -> Result<FiniteHypergroup> {
    let text = std::fs::read_to_string(path)?;
    HypergroupDocument::from_json(&text)?.to_hypergroup()
}

/// Canonical document text for `k`.
pub fn emit(k: &FiniteHypergroup) -> String {
    HypergroupDocument::from_hypergroup(k).to_json()
}
