//! The induction step behind the naturality of `Γ`: an invertible pure braid
//! `F` on `U.. V.. M` with `Lⁿ ∘ F = Lⁿ⁻¹` and `Rⁿ ∘ F = Rⁿ⁻¹`, where the
//! right-hand sides use the merged cables `(U^-1 U^-2)` and `(V^-1 V^-2)`.

use serde::{Deserialize, Serialize};

use super::{evaluate_slots, naturality_words};
use crate::category::{AnyonModel, Cable, CabledBraidWord, Crossing, ElementaryWord, Sign, Strand};
use crate::error::{Error, Result};
use crate::permutation_module::slot_cables;

/// Sign of the crossings that carry `U^-2` rightwards past
/// `(U^-3 .. U^-n+1)` and `V^0`.
pub(crate) const TRAVEL: Sign = Sign::Negative;
/// Sign of the double crossing of `U^-2` with `V^-1`.
pub(crate) const WIND: Sign = Sign::Positive;

/// `U^-2` moves right to `V^-1` with `travel` crossings, winds around it
/// twice with `wind` crossings and returns the way it came.
pub(crate) fn f_word(n: usize, travel: Sign, wind: Sign) -> Result<ElementaryWord> {
    if n < 3 {
        return Err(Error::InvalidArgument("the induction step needs n ≥ 3".into()));
    }
    let (u, v) = (slot_cables("U", n), slot_cables("V", n));
    let rest = |c: &[Vec<Strand>]| c.iter().flatten().cloned().collect::<Vec<_>>();
    let cables = vec![
        Cable::new("u01", rest(&u[..2])),
        Cable::new("u2", u[2].clone()),
        Cable::new("u3", rest(&u[3..])),
        Cable::new("v0", v[0].clone()),
        Cable::new("v1", v[1].clone()),
        Cable::new("v2", rest(&v[2..])),
        Cable::single("M"),
    ];
    let crossings = vec![
        Crossing::new(1, travel),
        Crossing::new(2, travel),
        Crossing::new(3, wind),
        Crossing::new(3, wind),
        Crossing::new(2, travel.flip()),
        Crossing::new(1, travel.flip()),
    ];
    Ok(CabledBraidWord::new(cables, crossings)?.expand())
}

fn merged(c: &[Vec<Strand>]) -> Vec<Vec<Strand>> {
    let mut out = vec![c[0].clone(), c[1].iter().chain(&c[2]).cloned().collect()];
    out.extend(c[3..].iter().cloned());
    out
}

/// All words entering the induction step at orbit size `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InductionWords {
    pub n: usize,
    pub f: ElementaryWord,
    pub l: ElementaryWord,
    pub r: ElementaryWord,
    pub l_merged: ElementaryWord,
    pub r_merged: ElementaryWord,
}

pub fn induction_words(n: usize) -> Result<InductionWords> {
    induction_words_with(n, TRAVEL, WIND)
}

pub(crate) fn induction_words_with(n: usize, travel: Sign, wind: Sign) -> Result<InductionWords> {
    let f = f_word(n, travel, wind)?;
    let (u, v, m) = (slot_cables("U", n), slot_cables("V", n), vec![Strand::slot("M")]);
    let (l, r) = naturality_words(&u, &v, &m)?;
    let (l_merged, r_merged) = naturality_words(&merged(&u), &merged(&v), &m)?;
    Ok(InductionWords { n, f: f.clone(), l: f.then(&l)?, r: f.then(&r)?, l_merged, r_merged })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InductionReport {
    /// `‖Lⁿ ∘ F - Lⁿ⁻¹‖`.
    pub l_residual: f64,
    /// `‖Rⁿ ∘ F - Rⁿ⁻¹‖`.
    pub r_residual: f64,
    pub f_min_singular_value: f64,
}

impl InductionReport {
    pub fn max_residual(&self) -> f64 {
        self.l_residual.max(self.r_residual)
    }
}

/// Evaluates both induction identities for labels `u`, `v` (action order,
/// length `n ≥ 3`) and module label `m`. `InductionWords::l` and `r` already
/// include `F`.
pub fn induction_step_check(model: &AnyonModel, u: &[usize], v: &[usize], m: usize) -> Result<InductionReport> {
    check_with(model, &induction_words(u.len())?, u, v, m)
}

pub(crate) fn check_with(
    model: &AnyonModel,
    words: &InductionWords,
    u: &[usize],
    v: &[usize],
    m: usize,
) -> Result<InductionReport> {
    if v.len() != u.len() || u.len() != words.n {
        return Err(Error::InvalidArgument("U and V need one label per orbit element".into()));
    }
    let ev = |w: &ElementaryWord| evaluate_slots(model, w, u, v, m);
    Ok(InductionReport {
        l_residual: ev(&words.l)?.max_difference(&ev(&words.l_merged)?)?,
        r_residual: ev(&words.r)?.max_difference(&ev(&words.r_merged)?)?,
        f_min_singular_value: ev(&words.f)?.min_singular_value(),
    })
}
