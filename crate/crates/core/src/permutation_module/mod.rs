//! The module category `C^{⊠O_g}` over `C^{⊠X}`.
//!
//! For a `<g>`-orbit `o` with smallest element `x_o` the multi-index object
//! `(A_x)` acts on the factor of `o` by `A_{x_o} A_{g^-1 x_o} .. A_{g^-n+1 x_o} M`.
//! The associator `ψ_{A,B,M}: ((A ⊗ B) ⊗ M) -> (A ⊗ (B ⊗ M))` is the positive
//! shuffle braid that moves every `B`-strand over the `A`-strands of larger
//! exponent. Orbits act independently.
//!
//! Inside one orbit of size `n`, slot names carry the exponent magnitude:
//! `A0, A1, ..` stand for `A^0, A^-1, ..`, i.e. `A_{x_o}, A_{g^-1 x_o}, ..`.

mod checks;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::category::{Cable, CabledBraidWord, Crossing, ElementaryWord, Strand};
use crate::error::{Error, Result};
use crate::group_action::{orbits, Orbit, Perm, PermutationAction};

pub use checks::{
    module_pentagon_check, module_pentagon_check_multi, neutral_structure_check, pentagon_words, permute_multi_index,
    unit_check,
    NeutralReport, PentagonAssignment, UnitSide,
};

/// Name of the slot for `prefix^{-k}` inside one orbit.
pub fn slot_name(prefix: &str, k: usize) -> String {
    format!("{prefix}{k}")
}

/// Single-strand cables `prefix0, prefix1, .., prefix{n-1}`.
pub fn slot_cables(prefix: &str, n: usize) -> Vec<Vec<Strand>> {
    (0..n).map(|k| vec![Strand::Slot(slot_name(prefix, k))]).collect()
}

/// Factor order of the module action on one `<g>`-orbit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionWord {
    pub orbit: Orbit,
    /// `[x_o, g^-1 x_o, .., g^-n+1 x_o]`.
    pub factor_order: Vec<usize>,
}

impl ActionWord {
    pub fn len(&self) -> usize {
        self.factor_order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factor_order.is_empty()
    }

    /// Strands `A_{x}` in action order followed by the module slot `M`.
    pub fn strands(&self, prefix: &str, module_slot: &str) -> Vec<Strand> {
        self.factor_order
            .iter()
            .map(|x| Strand::Slot(format!("{prefix}_{x}")))
            .chain(std::iter::once(Strand::slot(module_slot)))
            .collect()
    }

    /// Labels of a multi-index over X, read in action order.
    pub fn read<T: Copy>(&self, multi_index: &[T]) -> Vec<T> {
        self.factor_order.iter().map(|&x| multi_index[x]).collect()
    }

    pub fn display_with(&self, x_labels: &[String]) -> String {
        let mut parts: Vec<String> =
            self.factor_order.iter().map(|&x| format!("A_{}", x_labels[x])).collect();
        parts.push("M".into());
        parts.join(" ")
    }
}

impl fmt::Display for ActionWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.factor_order {
            write!(f, "A_{x} ")?;
        }
        write!(f, "M")
    }
}

/// The action word of `g` on `orbit`.
pub fn action_word(g: &Perm, orbit: &Orbit) -> Result<ActionWord> {
    if !orbit.is_stable_under(g) {
        return Err(Error::OrbitNotStable);
    }
    let g_inv = g.inverse();
    let base = orbit.base_point();
    let mut factor_order = vec![base];
    let mut x = g_inv.apply(base);
    while x != base {
        factor_order.push(x);
        x = g_inv.apply(x);
    }
    if factor_order.len() != orbit.size() {
        return Err(Error::InvalidArgument("orbit is not a single <g>-orbit".into()));
    }
    Ok(ActionWord { orbit: orbit.clone(), factor_order })
}

/// Action words for every `<g>`-orbit of X, sorted by base point.
pub fn module_structure(action: &PermutationAction, g: &Perm) -> Result<Vec<ActionWord>> {
    if g.degree() != action.size() {
        return Err(Error::InvalidPermutation("g does not act on X".into()));
    }
    orbits(action.size(), std::slice::from_ref(g))
        .iter()
        .map(|o| action_word(g, o))
        .collect()
}

/// The associator on one orbit of size `n` as a cabled word over the cables
/// `A0 B0 A1 B1 .. A{n-1} B{n-1} M`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShuffleAssociator {
    pub n: usize,
    pub word: CabledBraidWord,
    /// `(l, k)` for every crossing, in order: `B^-l` passes over `A^-k`.
    pub moves: Vec<(usize, usize)>,
}

/// Builds `ψ = f^(1) ⊗ id_M` for an orbit of size `n ≥ 1`: for
/// `l = n-2, .., 0` and `k = l+1, .., n-1`, `B^-l` crosses over `A^-k`.
pub fn associator(n: usize) -> Result<ShuffleAssociator> {
    if n == 0 {
        return Err(Error::InvalidArgument("orbit size must be positive".into()));
    }
    let mut cables = Vec::with_capacity(2 * n + 1);
    for k in 0..n {
        cables.push(Cable::single(slot_name("A", k)));
        cables.push(Cable::single(slot_name("B", k)));
    }
    cables.push(Cable::single("M"));

    // current position of each cable, tracked as a list of names
    let mut order: Vec<String> = cables.iter().map(|c| c.name.clone()).collect();
    let mut crossings = Vec::new();
    let mut moves = Vec::new();
    for l in (0..n.saturating_sub(1)).rev() {
        for k in l + 1..n {
            let b = slot_name("B", l);
            let a = slot_name("A", k);
            let pos = order.iter().position(|c| *c == b).expect("cable present");
            if order[pos + 1] != a {
                return Err(Error::Composition(format!("{b} is not adjacent to {a}")));
            }
            crossings.push(Crossing::pos(pos));
            moves.push((l, k));
            order.swap(pos, pos + 1);
        }
    }
    Ok(ShuffleAssociator { n, word: CabledBraidWord::new(cables, crossings)?, moves })
}

impl ShuffleAssociator {
    /// `ψ_{A,B,M}` with each slot cable replaced by the given strands:
    /// `a[k]` fills `A^-k`, `b[k]` fills `B^-k`, `m` fills `M`.
    pub fn instantiate(&self, a: &[Vec<Strand>], b: &[Vec<Strand>], m: &[Strand]) -> Result<ElementaryWord> {
        if a.len() != self.n || b.len() != self.n {
            return Err(Error::InvalidArgument(format!(
                "associator of size {} needs {} A- and B-cables",
                self.n, self.n
            )));
        }
        let mut contents = HashMap::new();
        for k in 0..self.n {
            contents.insert(slot_name("A", k), a[k].clone());
            contents.insert(slot_name("B", k), b[k].clone());
        }
        contents.insert("M".to_string(), m.to_vec());
        Ok(self.word.with_contents(&contents).expand())
    }
}

/// `ψ_{A,B,M}` for cable contents `a`, `b`, `m`; the orbit size is `a.len()`.
pub fn psi(a: &[Vec<Strand>], b: &[Vec<Strand>], m: &[Strand]) -> Result<ElementaryWord> {
    associator(a.len())?.instantiate(a, b, m)
}

#[cfg(test)]
mod tests;
