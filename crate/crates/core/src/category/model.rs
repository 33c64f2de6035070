use std::collections::HashMap;

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::eval::max_abs;
use crate::error::{Error, Result};

/// Square block of F-symbols `[F^{abc}_d]_{ef}` for fixed `(a, b, c, d)`.
///
/// Rows run over `e` in `a ⊗ b` with `d` in `e ⊗ c`, columns over `f` in
/// `b ⊗ c` with `d` in `a ⊗ f`, both in ascending label order.
#[derive(Debug, Clone)]
pub struct FBlock {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub matrix: DMatrix<Complex64>,
    pub inverse: DMatrix<Complex64>,
}

impl FBlock {
    pub fn row_of(&self, e: usize) -> Option<usize> {
        self.left.iter().position(|&x| x == e)
    }

    pub fn col_of(&self, f: usize) -> Option<usize> {
        self.right.iter().position(|&x| x == f)
    }
}

/// Raw numeric data of a multiplicity-free braided fusion category, before
/// validation.
#[derive(Debug, Clone)]
pub struct ModelData {
    pub name: String,
    pub labels: Vec<String>,
    pub unit: usize,
    pub dual: Vec<usize>,
    /// `(a, b, c, N_ab^c)` for every non-zero fusion coefficient.
    pub fusion: Vec<(usize, usize, usize, u64)>,
    pub f_symbols: Vec<([usize; 6], Complex64)>,
    pub r_symbols: Vec<([usize; 3], Complex64)>,
    pub twists: Vec<Complex64>,
    pub qdims: Vec<f64>,
    pub s_matrix: DMatrix<Complex64>,
    pub t_matrix: DMatrix<Complex64>,
}

/// A multiplicity-free modular tensor category given by numeric F/R data in
/// the splitting-tree convention:
///
/// * `[F^{abc}_d]_{ef}` expands the tree `d -> (e -> a b) c` in trees
///   `d -> a (f -> b c)`;
/// * `R^{ab}_c` is the eigenvalue of the positive crossing that takes the
///   vertex `c -> a b` to `c -> b a`, the left strand `a` passing over.
///
/// Immutable after construction.
#[derive(Debug, Clone)]
pub struct AnyonModel {
    name: String,
    labels: Vec<String>,
    unit: usize,
    dual: Vec<usize>,
    fusion: Vec<bool>,
    f_symbols: HashMap<[usize; 6], Complex64>,
    f_blocks: HashMap<[usize; 4], FBlock>,
    r_symbols: HashMap<[usize; 3], Complex64>,
    twists: Vec<Complex64>,
    qdims: Vec<f64>,
    s_matrix: DMatrix<Complex64>,
    t_matrix: DMatrix<Complex64>,
}

const STRUCTURE_TOL: f64 = 1e-9;

impl AnyonModel {
    /// Validates structural data (fusion, completeness and invertibility of
    /// F, R, twists, S, T). The pentagon and hexagon identities are checked
    /// separately, see [`crate::category::load_model`].
    pub fn from_data(data: ModelData) -> Result<Self> {
        let l = data.labels.len();
        if l == 0 {
            return Err(Error::InvalidModel("no labels".into()));
        }
        {
            let mut sorted = data.labels.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != l {
                return Err(Error::InvalidModel("labels must be distinct".into()));
            }
        }
        if data.unit >= l {
            return Err(Error::InvalidModel("unit label out of range".into()));
        }
        if data.dual.len() != l || data.dual.iter().any(|&d| d >= l) {
            return Err(Error::InvalidModel("dual must map every label to a label".into()));
        }
        for a in 0..l {
            if data.dual[data.dual[a]] != a {
                return Err(Error::InvalidModel(format!(
                    "dual is not an involution at `{}`",
                    data.labels[a]
                )));
            }
        }

        let mut counts = vec![0u64; l * l * l];
        for &(a, b, c, n) in &data.fusion {
            if a >= l || b >= l || c >= l {
                return Err(Error::InvalidModel("fusion entry out of range".into()));
            }
            counts[(a * l + b) * l + c] += n;
        }
        for a in 0..l {
            for b in 0..l {
                for c in 0..l {
                    let n = counts[(a * l + b) * l + c];
                    if n > 1 {
                        return Err(Error::Multiplicity {
                            a: data.labels[a].clone(),
                            b: data.labels[b].clone(),
                            c: data.labels[c].clone(),
                            n,
                        });
                    }
                }
            }
        }
        let fusion: Vec<bool> = counts.iter().map(|&n| n == 1).collect();
        let fuses = |a: usize, b: usize, c: usize| fusion[(a * l + b) * l + c];
        let name = |a: usize| data.labels[a].as_str();

        for a in 0..l {
            for b in 0..l {
                let unit_left = fuses(data.unit, a, b);
                let unit_right = fuses(a, data.unit, b);
                if unit_left != (a == b) || unit_right != (a == b) {
                    return Err(Error::InvalidModel(format!(
                        "unit axiom fails for `{}`, `{}`",
                        name(a),
                        name(b)
                    )));
                }
                for c in 0..l {
                    if fuses(a, b, c) != fuses(b, a, c) {
                        return Err(Error::InvalidModel(format!(
                            "fusion is not commutative at ({}, {}, {})",
                            name(a),
                            name(b),
                            name(c)
                        )));
                    }
                }
            }
            if !fuses(a, data.dual[a], data.unit) {
                return Err(Error::InvalidModel(format!(
                    "`{}` does not fuse with its dual to the unit",
                    name(a)
                )));
            }
        }

        // F-symbols: exactly the admissible ones.
        let admissible_f = |k: &[usize; 6]| {
            let [a, b, c, d, e, f] = *k;
            fuses(a, b, e) && fuses(e, c, d) && fuses(b, c, f) && fuses(a, f, d)
        };
        let mut f_symbols = HashMap::new();
        for (k, v) in &data.f_symbols {
            if k.iter().any(|&i| i >= l) {
                return Err(Error::InvalidModel("F-symbol index out of range".into()));
            }
            if !admissible_f(k) {
                return Err(Error::InvalidModel(format!(
                    "F-symbol given for inadmissible labels {}",
                    fmt_labels(&data.labels, k)
                )));
            }
            if f_symbols.insert(*k, *v).is_some() {
                return Err(Error::InvalidModel(format!(
                    "F-symbol {} given twice",
                    fmt_labels(&data.labels, k)
                )));
            }
        }
        let mut f_blocks = HashMap::new();
        for a in 0..l {
            for b in 0..l {
                for c in 0..l {
                    for d in 0..l {
                        let left: Vec<usize> =
                            (0..l).filter(|&e| fuses(a, b, e) && fuses(e, c, d)).collect();
                        let right: Vec<usize> =
                            (0..l).filter(|&f| fuses(b, c, f) && fuses(a, f, d)).collect();
                        if left.len() != right.len() {
                            return Err(Error::InvalidModel(format!(
                                "fusion is not associative for ({}, {}, {}) -> {}",
                                name(a),
                                name(b),
                                name(c),
                                name(d)
                            )));
                        }
                        if left.is_empty() {
                            continue;
                        }
                        let mut matrix = DMatrix::zeros(left.len(), right.len());
                        for (i, &e) in left.iter().enumerate() {
                            for (j, &f) in right.iter().enumerate() {
                                let key = [a, b, c, d, e, f];
                                matrix[(i, j)] = *f_symbols.get(&key).ok_or_else(|| {
                                    Error::InvalidModel(format!(
                                        "missing F-symbol {}",
                                        fmt_labels(&data.labels, &key)
                                    ))
                                })?;
                            }
                        }
                        let inverse = matrix.clone().try_inverse().ok_or_else(|| {
                            Error::InvalidModel(format!(
                                "F-matrix for ({}, {}, {}) -> {} is singular",
                                name(a),
                                name(b),
                                name(c),
                                name(d)
                            ))
                        })?;
                        f_blocks.insert([a, b, c, d], FBlock { left, right, matrix, inverse });
                    }
                }
            }
        }

        let mut r_symbols = HashMap::new();
        for (k, v) in &data.r_symbols {
            let [a, b, c] = *k;
            if a >= l || b >= l || c >= l {
                return Err(Error::InvalidModel("R-symbol index out of range".into()));
            }
            if !fuses(a, b, c) {
                return Err(Error::InvalidModel(format!(
                    "R-symbol given for inadmissible labels {}",
                    fmt_labels(&data.labels, k)
                )));
            }
            if v.norm() < STRUCTURE_TOL {
                return Err(Error::InvalidModel(format!(
                    "R-symbol {} is zero",
                    fmt_labels(&data.labels, k)
                )));
            }
            if r_symbols.insert(*k, *v).is_some() {
                return Err(Error::InvalidModel(format!(
                    "R-symbol {} given twice",
                    fmt_labels(&data.labels, k)
                )));
            }
        }
        for a in 0..l {
            for b in 0..l {
                for c in 0..l {
                    if fuses(a, b, c) && !r_symbols.contains_key(&[a, b, c]) {
                        return Err(Error::InvalidModel(format!(
                            "missing R-symbol {}",
                            fmt_labels(&data.labels, &[a, b, c])
                        )));
                    }
                }
            }
        }

        if data.twists.len() != l || data.qdims.len() != l {
            return Err(Error::InvalidModel("twist and qdim need one entry per label".into()));
        }
        if data.twists.iter().any(|t| (t.norm() - 1.0).abs() > STRUCTURE_TOL) {
            return Err(Error::InvalidModel("twists must be unit complex numbers".into()));
        }
        if data.qdims.iter().any(|&d| d.is_nan() || d <= 0.0) {
            return Err(Error::InvalidModel("quantum dimensions must be positive".into()));
        }
        if data.s_matrix.shape() != (l, l) || data.t_matrix.shape() != (l, l) {
            return Err(Error::InvalidModel("S and T must be square of size |labels|".into()));
        }
        for i in 0..l {
            for j in 0..l {
                if (data.s_matrix[(i, j)] - data.s_matrix[(j, i)]).norm() > STRUCTURE_TOL {
                    return Err(Error::InvalidModel("S is not symmetric".into()));
                }
                if i != j && data.t_matrix[(i, j)].norm() > STRUCTURE_TOL {
                    return Err(Error::InvalidModel("T is not diagonal".into()));
                }
            }
        }
        if data.s_matrix.clone().try_inverse().is_none() {
            return Err(Error::InvalidModel("S is not invertible".into()));
        }
        // T = phase * diag(theta)
        let phase = data.t_matrix[(0, 0)] / data.twists[0];
        for a in 0..l {
            if (data.t_matrix[(a, a)] - phase * data.twists[a]).norm() > STRUCTURE_TOL {
                return Err(Error::InvalidModel(
                    "T does not agree with the twists up to a global phase".into(),
                ));
            }
        }

        Ok(AnyonModel {
            name: data.name,
            labels: data.labels,
            unit: data.unit,
            dual: data.dual,
            fusion,
            f_symbols,
            f_blocks,
            r_symbols,
            twists: data.twists,
            qdims: data.qdims,
            s_matrix: data.s_matrix,
            t_matrix: data.t_matrix,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn num_labels(&self) -> usize {
        self.labels.len()
    }

    pub fn label_name(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn label_index(&self, name: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == name)
            .ok_or_else(|| Error::UnknownLabel(name.to_string()))
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn dual(&self, a: usize) -> usize {
        self.dual[a]
    }

    #[inline]
    pub fn fuses(&self, a: usize, b: usize, c: usize) -> bool {
        let l = self.labels.len();
        self.fusion[(a * l + b) * l + c]
    }

    pub fn fusion_coefficient(&self, a: usize, b: usize, c: usize) -> u8 {
        self.fuses(a, b, c) as u8
    }

    /// Channels of `a ⊗ b`, ascending.
    pub fn fusion_channels(&self, a: usize, b: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.num_labels()).filter(move |&c| self.fuses(a, b, c))
    }

    /// `[F^{abc}_d]_{ef}`, zero when inadmissible.
    pub fn f(&self, a: usize, b: usize, c: usize, d: usize, e: usize, f: usize) -> Complex64 {
        self.f_symbols.get(&[a, b, c, d, e, f]).copied().unwrap_or_default()
    }

    pub fn f_block(&self, a: usize, b: usize, c: usize, d: usize) -> Option<&FBlock> {
        self.f_blocks.get(&[a, b, c, d])
    }

    /// `[(F^{abc}_d)^{-1}]_{fe}`, zero when inadmissible.
    pub fn f_inv(&self, a: usize, b: usize, c: usize, d: usize, f: usize, e: usize) -> Complex64 {
        self.f_block(a, b, c, d)
            .and_then(|blk| Some(blk.inverse[(blk.col_of(f)?, blk.row_of(e)?)]))
            .unwrap_or_default()
    }

    /// `R^{ab}_c`, zero when inadmissible.
    pub fn r(&self, a: usize, b: usize, c: usize) -> Complex64 {
        self.r_symbols.get(&[a, b, c]).copied().unwrap_or_default()
    }

    pub fn twist(&self, a: usize) -> Complex64 {
        self.twists[a]
    }

    pub fn qdim(&self, a: usize) -> f64 {
        self.qdims[a]
    }

    pub fn s_matrix(&self) -> &DMatrix<Complex64> {
        &self.s_matrix
    }

    pub fn t_matrix(&self) -> &DMatrix<Complex64> {
        &self.t_matrix
    }

    /// Whether every F-matrix is unitary (to `tol`) and every R-symbol a phase.
    pub fn is_unitary(&self, tol: f64) -> bool {
        self.f_blocks.values().all(|b| {
            let prod = &b.matrix * b.matrix.adjoint();
            max_abs(&(prod - DMatrix::identity(b.left.len(), b.left.len()))) <= tol
        }) && self.r_symbols.values().all(|r| (r.norm() - 1.0).abs() <= tol)
    }

    /// Export to the raw data form; `from_data(to_data())` reproduces the model.
    pub fn to_data(&self) -> ModelData {
        let l = self.num_labels();
        let mut fusion = Vec::new();
        for a in 0..l {
            for b in 0..l {
                for c in 0..l {
                    if self.fuses(a, b, c) {
                        fusion.push((a, b, c, 1));
                    }
                }
            }
        }
        let mut f_symbols: Vec<_> = self.f_symbols.iter().map(|(k, v)| (*k, *v)).collect();
        f_symbols.sort_by_key(|(k, _)| *k);
        let mut r_symbols: Vec<_> = self.r_symbols.iter().map(|(k, v)| (*k, *v)).collect();
        r_symbols.sort_by_key(|(k, _)| *k);
        ModelData {
            name: self.name.clone(),
            labels: self.labels.clone(),
            unit: self.unit,
            dual: self.dual.clone(),
            fusion,
            f_symbols,
            r_symbols,
            twists: self.twists.clone(),
            qdims: self.qdims.clone(),
            s_matrix: self.s_matrix.clone(),
            t_matrix: self.t_matrix.clone(),
        }
    }
}

fn fmt_labels(labels: &[String], idx: &[usize]) -> String {
    let names: Vec<&str> = idx
        .iter()
        .map(|&i| labels.get(i).map(String::as_str).unwrap_or("?"))
        .collect();
    format!("({})", names.join(", "))
}
