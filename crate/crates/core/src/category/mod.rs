//! Numeric multiplicity-free modular tensor categories: F/R data, fusion-tree
//! bases, evaluation of braid words, and the pentagon/hexagon checks.
//!
//! Conventions are fixed globally: splitting trees in left-canonical form,
//! lexicographic basis order, a positive crossing is the braiding `c` given
//! by the R-symbols, and the ambient associators are absorbed into the tree
//! bases so regrouping cables is the identity.

mod axioms;
mod basis;
pub mod builtin;
mod document;
mod eval;
mod model;
mod word;

use std::path::Path;

pub use axioms::{verify_hexagon, verify_pentagon, AxiomReport};
pub use basis::{sectors, tree_basis, FusionTreeBasis};
pub use document::{FEntry, FusionEntry, ModelDocument, REntry};
pub use eval::{braid_generator, evaluate, evaluate_cabled, evaluate_labels, Assignment, SectorMatrix};
pub use model::{AnyonModel, FBlock, ModelData};
pub use word::{Cable, CabledBraidWord, Crossing, ElementaryWord, Sign, Strand};

use crate::error::{Error, Result};

/// Default equality tolerance for numeric checks.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LoadOptions {
    /// Run the pentagon and hexagon checks and reject the model on failure.
    pub verify: bool,
    pub tolerance: f64,
}

impl Default for LoadOptions {
    fn default() -> Self {
        LoadOptions { verify: true, tolerance: DEFAULT_TOLERANCE }
    }
}

/// Where a model comes from.
#[derive(Debug, Clone, PartialEq)]
pub enum ModelSource {
    Fibonacci,
    Ising,
    VecZn { n: usize, exponent: i64 },
    Document(String),
}

impl ModelSource {
    /// Parses a built-in name: `fibonacci`, `ising`, `vec_z<N>` or
    /// `vec_z<N>:<p>` with `p` the quadratic-form exponent.
    pub fn builtin(name: &str) -> Result<ModelSource> {
        match name {
            "fibonacci" | "fib" => Ok(ModelSource::Fibonacci),
            "ising" => Ok(ModelSource::Ising),
            _ => {
                let rest = name
                    .strip_prefix("vec_z")
                    .ok_or_else(|| Error::InvalidArgument(format!("unknown built-in model `{name}`")))?;
                let (n, p) = match rest.split_once(':') {
                    Some((n, p)) => (n, Some(p)),
                    None => (rest, None),
                };
                let n: usize = n
                    .parse()
                    .map_err(|_| Error::InvalidArgument(format!("bad group order in `{name}`")))?;
                let exponent = match p {
                    Some(p) => p
                        .parse()
                        .map_err(|_| Error::InvalidArgument(format!("bad exponent in `{name}`")))?,
                    None => builtin::default_vec_zn_exponent(n),
                };
                Ok(ModelSource::VecZn { n, exponent })
            }
        }
    }

    /// A built-in name, or else the path of a model document.
    pub fn resolve(reference: &str) -> Result<ModelSource> {
        match ModelSource::builtin(reference) {
            Ok(s) => Ok(s),
            Err(_) if Path::new(reference).exists() => {
                Ok(ModelSource::Document(std::fs::read_to_string(reference)?))
            }
            Err(e) => Err(e),
        }
    }
}

/// Builds and validates a model; runs the pentagon and hexagon checks unless
/// `options.verify` is off.
pub fn load_model(source: &ModelSource, options: LoadOptions) -> Result<AnyonModel> {
    let data = match source {
        ModelSource::Fibonacci => builtin::fibonacci(),
        ModelSource::Ising => builtin::ising(),
        ModelSource::VecZn { n, exponent } => builtin::vec_zn(*n, *exponent)?,
        ModelSource::Document(text) => ModelDocument::parse(text)?.into_data()?,
    };
    let model = AnyonModel::from_data(data)?;
    if options.verify {
        for report in [verify_pentagon(&model), verify_hexagon(&model)] {
            if !report.passes(options.tolerance) {
                return Err(Error::AxiomViolation {
                    identity: format!(
                        "{} identity at {}",
                        report.identity,
                        report.worst_instance.as_deref().unwrap_or("?")
                    ),
                    residual: report.max_residual,
                });
            }
        }
    }
    Ok(model)
}

/// Loads a built-in model by name with default options.
pub fn builtin_model(name: &str) -> Result<AnyonModel> {
    load_model(&ModelSource::builtin(name)?, LoadOptions::default())
}
