//! The permutation modular invariant `Z_{ī,j̄} = δ_{j̄, gī}`.
//!
//! Multi-indices `ī ∈ I^X` are linearized with the first factor most
//! significant, matching the order of Kronecker products.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::category::AnyonModel;
use crate::error::{Error, Result};
use crate::group_action::Perm;
use crate::permutation_module::permute_multi_index;

/// A 0/1 matrix over `I^X` stored by the column of the 1 in each row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZMatrix {
    pub x_size: usize,
    pub labels: usize,
    /// `columns[r]` lists the columns with entry 1 in row `r`.
    pub columns: Vec<Vec<usize>>,
}

pub(crate) fn decode(mut code: usize, x_size: usize, labels: usize) -> Vec<usize> {
    let mut idx = vec![0; x_size];
    for slot in idx.iter_mut().rev() {
        *slot = code % labels;
        code /= labels;
    }
    idx
}

pub(crate) fn encode(idx: &[usize], labels: usize) -> usize {
    idx.iter().fold(0, |acc, &i| acc * labels + i)
}

impl ZMatrix {
    pub fn dim(&self) -> usize {
        self.columns.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> u64 {
        self.columns[row].iter().filter(|&&c| c == col).count() as u64
    }

    /// Entry for multi-indices.
    pub fn entry_at(&self, i: &[usize], j: &[usize]) -> u64 {
        self.entry(encode(i, self.labels), encode(j, self.labels))
    }

    /// Entries are 0 or 1 with exactly one 1 per row and per column.
    pub fn is_permutation_matrix(&self) -> bool {
        let mut col_sums = vec![0usize; self.dim()];
        for row in &self.columns {
            if row.len() != 1 || row[0] >= self.dim() {
                return false;
            }
            col_sums[row[0]] += 1;
        }
        col_sums.iter().all(|&s| s == 1)
    }

    pub fn vacuum(&self) -> u64 {
        self.entry(0, 0)
    }

    pub fn to_dense(&self) -> DMatrix<Complex64> {
        let mut m = DMatrix::zeros(self.dim(), self.dim());
        for (r, cols) in self.columns.iter().enumerate() {
            for &c in cols {
                m[(r, c)] += Complex64::new(1.0, 0.0);
            }
        }
        m
    }

    /// `self · other` as matrices; both must be permutation matrices.
    pub fn product(&self, other: &ZMatrix) -> Result<ZMatrix> {
        if self.dim() != other.dim() || !self.is_permutation_matrix() || !other.is_permutation_matrix() {
            return Err(Error::DimensionMismatch("product needs two permutation matrices of equal size".into()));
        }
        Ok(ZMatrix {
            x_size: self.x_size,
            labels: self.labels,
            columns: self.columns.iter().map(|c| vec![other.columns[c[0]][0]]).collect(),
        })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for r in 0..self.dim() {
            let row: Vec<String> = (0..self.dim()).map(|c| self.entry(r, c).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// `Z_{ī,j̄} = 1` iff `j̄ = gī`, with `(gī)_x = ī_{g^-1 x}`.
pub fn z_matrix(g: &Perm, labels: usize) -> Result<ZMatrix> {
    relabeled(g, labels, None)
}

/// `Z` composed with a relabeling `σ` of `I` applied in every factor,
/// `j̄ = σ(gī)`; used as a negative control when `σ` is not a symmetry of
/// the modular data.
pub fn relabeled_z_matrix(g: &Perm, labels: usize, sigma: &Perm) -> Result<ZMatrix> {
    if sigma.degree() != labels {
        return Err(Error::DimensionMismatch("relabeling must act on the label set".into()));
    }
    relabeled(g, labels, Some(sigma))
}

fn relabeled(g: &Perm, labels: usize, sigma: Option<&Perm>) -> Result<ZMatrix> {
    let x_size = g.degree();
    let dim = (labels as u64)
        .checked_pow(x_size as u32)
        .filter(|&d| d <= 1 << 16)
        .ok_or_else(|| Error::InvalidArgument(format!("{labels}^{x_size} multi-indices is too many")))?
        as usize;
    let columns = (0..dim)
        .map(|r| {
            let mut j = permute_multi_index(g, &decode(r, x_size, labels));
            if let Some(s) = sigma {
                j.iter_mut().for_each(|l| *l = s.apply(*l));
            }
            vec![encode(&j, labels)]
        })
        .collect();
    Ok(ZMatrix { x_size, labels, columns })
}

/// `m^{⊗k}`, first factor most significant.
pub fn kronecker_power(m: &DMatrix<Complex64>, k: usize) -> DMatrix<Complex64> {
    let mut out = DMatrix::from_element(1, 1, Complex64::new(1.0, 0.0));
    for _ in 0..k {
        out = out.kronecker(m);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModularReport {
    /// `‖[S^{⊗X}, Z]‖_max`.
    pub s_residual: f64,
    /// `‖[T^{⊗X}, Z]‖_max`.
    pub t_residual: f64,
    pub vacuum: u64,
    pub is_permutation: bool,
}

impl ModularReport {
    pub fn max_residual(&self) -> f64 {
        self.s_residual.max(self.t_residual)
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.is_permutation && self.vacuum == 1 && self.max_residual() <= tol
    }
}

pub fn check_modular_invariance(model: &AnyonModel, z: &ZMatrix) -> Result<ModularReport> {
    if z.labels != model.num_labels() {
        return Err(Error::DimensionMismatch(format!(
            "Z is indexed by {} labels, the model has {}",
            z.labels,
            model.num_labels()
        )));
    }
    let zd = z.to_dense();
    let commutator = |m: &DMatrix<Complex64>| -> f64 {
        let big = kronecker_power(m, z.x_size);
        let c = &big * &zd - &zd * &big;
        c.iter().map(|e| e.norm()).fold(0.0, f64::max)
    };
    Ok(ModularReport {
        s_residual: commutator(model.s_matrix()),
        t_residual: commutator(model.t_matrix()),
        vacuum: z.vacuum(),
        is_permutation: z.is_permutation_matrix(),
    })
}
