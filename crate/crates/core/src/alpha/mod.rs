//! α-induction on the permutation module, the transformation
//! `Γ: α⁺(U) ⇒ α⁻(ᵍU)`, and the permutation modular invariant.
//!
//! All words here live on one `<g>`-orbit of size `n` and use the slot names
//! `U0 .. U{n-1}`, `V0 .. V{n-1}`, `M`, where `Uk` stands for `U^-k`, i.e.
//! `U_{g^-k x_o}`. The twisted multi-index `ᵍU` has `(ᵍU)^-k = U^-(k+1 mod n)`.
//!
//! Which `Hom(α⁺_ī, α⁻_j̄)` are non-zero is not computed from module functor
//! natural transformations; the checks here cover the computable half (`Γ`
//! is natural and invertible) and `Z` is built from the permutation formula.

mod induction;
mod zmatrix;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::category::{
    evaluate, AnyonModel, Assignment, Cable, CabledBraidWord, Crossing, ElementaryWord, SectorMatrix, Sign, Strand,
};
use crate::error::{Error, Result};
use crate::group_action::{Orbit, Perm};
use crate::permutation_module::{action_word, psi, slot_cables, slot_name};

pub use induction::{induction_step_check, induction_words, InductionReport, InductionWords};
pub use zmatrix::{check_modular_invariance, kronecker_power, relabeled_z_matrix, z_matrix, ModularReport, ZMatrix};

/// `γ⁺` uses the braiding, `γ⁻` its reverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Kind {
    Plus,
    Minus,
}

impl Kind {
    pub fn sign(self) -> Sign {
        match self {
            Kind::Plus => Sign::Positive,
            Kind::Minus => Sign::Negative,
        }
    }
}

fn flat(x: &[Vec<Strand>]) -> Vec<Strand> {
    x.iter().flatten().cloned().collect()
}

/// `ᵍU` for cables in action order.
pub fn twist_cables<T: Clone>(u: &[T]) -> Vec<T> {
    let mut out = u.to_vec();
    if !out.is_empty() {
        out.rotate_left(1);
    }
    out
}

/// Componentwise crossing on the interleaved word `U0 V0 U1 V1 .. M`:
/// `c_{U^-k, V^-k}` (positive) or `c_{V^-k, U^-k}^{-1}` (negative) for every k.
fn componentwise_crossing(u: &[Vec<Strand>], v: &[Vec<Strand>], m: &[Strand], sign: Sign) -> Result<ElementaryWord> {
    let mut cables = Vec::new();
    for (k, (uk, vk)) in u.iter().zip(v).enumerate() {
        cables.push(Cable::new(format!("u{k}"), uk.clone()));
        cables.push(Cable::new(format!("v{k}"), vk.clone()));
    }
    cables.push(Cable::new("m", m.to_vec()));
    let crossings = (0..u.len()).map(|k| Crossing::new(2 * k, sign)).collect();
    Ok(CabledBraidWord::new(cables, crossings)?.expand())
}

/// `γ^{U,±}_{V,M} = ψ_{V,U,M} ∘ (c^{±} ⊗ id_M) ∘ ψ^{-1}_{U,V,M}` for cables
/// `u`, `v`, `m`, from `U.. V.. M` to `V.. U.. M`.
pub fn constraint_word(kind: Kind, u: &[Vec<Strand>], v: &[Vec<Strand>], m: &[Strand]) -> Result<ElementaryWord> {
    if u.len() != v.len() || u.is_empty() {
        return Err(Error::InvalidArgument("U and V need the same positive number of cables".into()));
    }
    psi(u, v, m)?
        .inverse()
        .then(&componentwise_crossing(u, v, m, kind.sign())?)?
        .then(&psi(v, u, m)?)
}

/// `Γ_M` for cables `u` and module cable `m`: `U^0` crosses over the rest of
/// `U`, then winds once around `m` (`c_{M,U^0} ∘ c_{U^0,M}`).
pub fn gamma_word(u: &[Vec<Strand>], m: &[Strand]) -> Result<ElementaryWord> {
    if u.is_empty() {
        return Err(Error::InvalidArgument("Γ needs at least one U-cable".into()));
    }
    let cables = vec![
        Cable::new("u0", u[0].clone()),
        Cable::new("rest", flat(&u[1..])),
        Cable::new("m", m.to_vec()),
    ];
    let crossings = vec![Crossing::pos(0), Crossing::pos(1), Crossing::pos(1)];
    Ok(CabledBraidWord::new(cables, crossings)?.expand())
}

/// `(L, R)`: both sides of the naturality of `Γ` with respect to the module
/// functor constraints, from `U.. V.. M` to `V.. U1 .. U{n-1} U0 M`.
pub fn naturality_words(u: &[Vec<Strand>], v: &[Vec<Strand>], m: &[Strand]) -> Result<(ElementaryWord, ElementaryWord)> {
    let lhs = constraint_word(Kind::Plus, u, v, m)?.then(&gamma_word(u, m)?.tensor(&flat(v), &[]))?;
    let vm: Vec<Strand> = flat(v).into_iter().chain(m.iter().cloned()).collect();
    let rhs = gamma_word(u, &vm)?.then(&constraint_word(Kind::Minus, &twist_cables(u), v, m)?)?;
    Ok((lhs, rhs))
}

fn single_slots(n: usize) -> (Vec<Vec<Strand>>, Vec<Vec<Strand>>, Vec<Strand>) {
    (slot_cables("U", n), slot_cables("V", n), vec![Strand::slot("M")])
}

fn slot_assignment(u: &[usize], v: &[usize], m: Option<usize>) -> Assignment {
    let mut a = Assignment::new();
    for (k, &l) in u.iter().enumerate() {
        a.insert(slot_name("U", k), l);
    }
    for (k, &l) in v.iter().enumerate() {
        a.insert(slot_name("V", k), l);
    }
    if let Some(m) = m {
        a.insert("M".into(), m);
    }
    a
}

/// The module functor constraint `γ^{U,±}_{V,M}` on one orbit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleFunctorConstraint {
    pub kind: Kind,
    /// Labels of `U^0, U^-1, ..`.
    pub u: Vec<usize>,
    pub v: Vec<usize>,
    pub word: ElementaryWord,
}

impl ModuleFunctorConstraint {
    pub fn evaluate(&self, model: &AnyonModel, m: usize) -> Result<SectorMatrix> {
        evaluate(model, &self.word, &slot_assignment(&self.u, &self.v, Some(m)))
    }
}

/// `γ^{U,±}_{V,M}` for labels given in action order.
pub fn gamma_constraint(kind: Kind, u: &[usize], v: &[usize]) -> Result<ModuleFunctorConstraint> {
    let (uc, vc, m) = single_slots(u.len());
    if v.len() != u.len() {
        return Err(Error::InvalidArgument("U and V must have the same length".into()));
    }
    Ok(ModuleFunctorConstraint { kind, u: u.to_vec(), v: v.to_vec(), word: constraint_word(kind, &uc, &vc, &m)? })
}

/// `Γ_M` on one orbit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaTransform {
    pub n: usize,
    pub u: Vec<usize>,
    pub word: ElementaryWord,
}

impl GammaTransform {
    pub fn evaluate(&self, model: &AnyonModel, m: usize) -> Result<SectorMatrix> {
        evaluate(model, &self.word, &slot_assignment(&self.u, &[], Some(m)))
    }
}

pub fn gamma_transform(u: &[usize]) -> Result<GammaTransform> {
    let (uc, _, m) = single_slots(u.len());
    Ok(GammaTransform { n: u.len(), u: u.to_vec(), word: gamma_word(&uc, &m)? })
}

/// Residual of the naturality equation for labels `u`, `v` (action order)
/// and module label `m`.
pub fn check_gamma_naturality(model: &AnyonModel, u: &[usize], v: &[usize], m: usize) -> Result<f64> {
    if u.len() != v.len() {
        return Err(Error::InvalidArgument("U and V must have the same length".into()));
    }
    let (uc, vc, mc) = single_slots(u.len());
    let (lhs, rhs) = naturality_words(&uc, &vc, &mc)?;
    let slots = slot_assignment(u, v, Some(m));
    evaluate(model, &lhs, &slots)?.max_difference(&evaluate(model, &rhs, &slots)?)
}

/// Naturality for multi-indices `u`, `v` over X on the orbit `orbit` of `g`.
pub fn check_gamma_naturality_on_orbit(
    model: &AnyonModel,
    g: &Perm,
    orbit: &Orbit,
    u: &[usize],
    v: &[usize],
    m: usize,
) -> Result<f64> {
    let w = action_word(g, orbit)?;
    if u.len() != g.degree() || v.len() != g.degree() {
        return Err(Error::InvalidArgument("multi-index length does not match X".into()));
    }
    check_gamma_naturality(model, &w.read(u), &w.read(v), m)
}

/// Smallest singular value of `Γ_M` over all sectors.
pub fn gamma_min_singular_value(model: &AnyonModel, u: &[usize], m: usize) -> Result<f64> {
    Ok(gamma_transform(u)?.evaluate(model, m)?.min_singular_value())
}

/// Evaluates a word on single-strand slots `U*`, `V*`, `M`.
pub(crate) fn evaluate_slots(
    model: &AnyonModel,
    word: &ElementaryWord,
    u: &[usize],
    v: &[usize],
    m: usize,
) -> Result<SectorMatrix> {
    let slots: HashMap<String, usize> = slot_assignment(u, v, Some(m));
    evaluate(model, word, &slots)
}

#[cfg(test)]
mod tests;
