//! JSON model documents.
//!
//! ```json
//! {
//!   "labels": ["1", "t"], "unit": "1", "dual": {"1": "1", "t": "t"},
//!   "fusion": [["1","1","1"], ["1","t","t"], ["t","1","t"], ["t","t","1"], ["t","t","t"]],
//!   "F": [{"a": "t", "b": "t", "c": "t", "d": "t", "e": "1", "f": "1", "re": 0.618, "im": 0.0}, ...],
//!   "R": [{"a": "t", "b": "t", "c": "1", "re": -0.809, "im": -0.588}, ...],
//!   "twist": [[1.0, 0.0], [-0.809, 0.588]],
//!   "qdim": [1.0, 1.618],
//!   "S": [[[0.526, 0.0], [0.851, 0.0]], [[0.851, 0.0], [-0.526, 0.0]]],
//!   "T": [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [-0.809, 0.588]]]
//! }
//! ```
//!
//! Fusion entries may carry an explicit multiplicity as a fourth element.
//! Every admissible F- and R-symbol must be listed; unknown keys are rejected.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::model::{AnyonModel, ModelData};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FusionEntry {
    Simple(String, String, String),
    WithMultiplicity(String, String, String, u64),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FEntry {
    pub a: String,
    pub b: String,
    pub c: String,
    pub d: String,
    pub e: String,
    pub f: String,
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct REntry {
    pub a: String,
    pub b: String,
    pub c: String,
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub labels: Vec<String>,
    pub unit: String,
    pub dual: BTreeMap<String, String>,
    pub fusion: Vec<FusionEntry>,
    #[serde(rename = "F")]
    pub f: Vec<FEntry>,
    #[serde(rename = "R")]
    pub r: Vec<REntry>,
    pub twist: Vec<[f64; 2]>,
    pub qdim: Vec<f64>,
    #[serde(rename = "S")]
    pub s: Vec<Vec<[f64; 2]>>,
    #[serde(rename = "T")]
    pub t: Vec<Vec<[f64; 2]>>,
}

fn c(p: [f64; 2]) -> Complex64 {
    Complex64::new(p[0], p[1])
}

fn pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

fn matrix(rows: &[Vec<[f64; 2]>], what: &str) -> Result<DMatrix<Complex64>> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::Parse(format!("{what} must be a square matrix")));
    }
    Ok(DMatrix::from_fn(n, n, |i, j| c(rows[i][j])))
}

fn rows(m: &DMatrix<Complex64>) -> Vec<Vec<[f64; 2]>> {
    (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| pair(m[(i, j)])).collect()).collect()
}

impl ModelDocument {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("model document: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("model documents always serialize")
    }

    pub fn into_data(self) -> Result<ModelData> {
        let idx = |name: &str| -> Result<usize> {
            self.labels.iter().position(|l| l == name).ok_or_else(|| Error::UnknownLabel(name.to_string()))
        };
        let unit = idx(&self.unit)?;
        let mut dual = vec![usize::MAX; self.labels.len()];
        for (a, b) in &self.dual {
            dual[idx(a)?] = idx(b)?;
        }
        if let Some(a) = dual.iter().position(|&d| d == usize::MAX) {
            return Err(Error::Parse(format!("dual of `{}` not given", self.labels[a])));
        }
        let fusion = self
            .fusion
            .iter()
            .map(|e| match e {
                FusionEntry::Simple(a, b, c) => Ok((idx(a)?, idx(b)?, idx(c)?, 1)),
                FusionEntry::WithMultiplicity(a, b, c, n) => Ok((idx(a)?, idx(b)?, idx(c)?, *n)),
            })
            .collect::<Result<Vec<_>>>()?;
        let f_symbols = self
            .f
            .iter()
            .map(|e| {
                Ok((
                    [idx(&e.a)?, idx(&e.b)?, idx(&e.c)?, idx(&e.d)?, idx(&e.e)?, idx(&e.f)?],
                    Complex64::new(e.re, e.im),
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        let r_symbols = self
            .r
            .iter()
            .map(|e| Ok(([idx(&e.a)?, idx(&e.b)?, idx(&e.c)?], Complex64::new(e.re, e.im))))
            .collect::<Result<Vec<_>>>()?;
        Ok(ModelData {
            name: self.name.clone().unwrap_or_else(|| "custom".into()),
            labels: self.labels.clone(),
            unit,
            dual,
            fusion,
            f_symbols,
            r_symbols,
            twists: self.twist.iter().copied().map(c).collect(),
            qdims: self.qdim.clone(),
            s_matrix: matrix(&self.s, "S")?,
            t_matrix: matrix(&self.t, "T")?,
        })
    }

    pub fn from_model(model: &AnyonModel) -> Self {
        let data = model.to_data();
        let n = |i: usize| data.labels[i].clone();
        ModelDocument {
            name: Some(data.name.clone()),
            labels: data.labels.clone(),
            unit: n(data.unit),
            dual: (0..data.labels.len()).map(|a| (n(a), n(data.dual[a]))).collect(),
            fusion: data.fusion.iter().map(|&(a, b, c, _)| FusionEntry::Simple(n(a), n(b), n(c))).collect(),
            f: data
                .f_symbols
                .iter()
                .map(|(k, v)| FEntry {
                    a: n(k[0]),
                    b: n(k[1]),
                    c: n(k[2]),
                    d: n(k[3]),
                    e: n(k[4]),
                    f: n(k[5]),
                    re: v.re,
                    im: v.im,
                })
                .collect(),
            r: data
                .r_symbols
                .iter()
                .map(|(k, v)| REntry { a: n(k[0]), b: n(k[1]), c: n(k[2]), re: v.re, im: v.im })
                .collect(),
            twist: data.twists.iter().copied().map(pair).collect(),
            qdim: data.qdims.clone(),
            s: rows(&data.s_matrix),
            t: rows(&data.t_matrix),
        }
    }
}
