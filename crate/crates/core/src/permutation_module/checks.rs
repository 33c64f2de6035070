use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{module_structure, psi, slot_cables, slot_name};
use crate::category::{
    braid_generator, evaluate, tree_basis, Assignment, Crossing, ElementaryWord, Sign, Strand,
};
use crate::category::AnyonModel;
use crate::error::{Error, Result};
use crate::group_action::{Perm, PermutationAction};

/// Simple labels for the slots of one orbit of size `n`: `a[k]` labels
/// `A^-k`, likewise `b`, `c`; `m` labels the module slot.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PentagonAssignment {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub c: Vec<usize>,
    pub m: usize,
}

impl PentagonAssignment {
    pub fn n(&self) -> usize {
        self.a.len()
    }

    /// Reads `[a.., b.., c.., m]`.
    pub fn from_flat(n: usize, flat: &[usize]) -> Result<Self> {
        if flat.len() != 3 * n + 1 {
            return Err(Error::InvalidArgument(format!("expected {} labels, got {}", 3 * n + 1, flat.len())));
        }
        Ok(PentagonAssignment {
            a: flat[..n].to_vec(),
            b: flat[n..2 * n].to_vec(),
            c: flat[2 * n..3 * n].to_vec(),
            m: flat[3 * n],
        })
    }

    fn slots(&self) -> Assignment {
        let mut map = Assignment::new();
        for (prefix, labels) in [("A", &self.a), ("B", &self.b), ("C", &self.c)] {
            for (k, &l) in labels.iter().enumerate() {
                map.insert(slot_name(prefix, k), l);
            }
        }
        map.insert("M".into(), self.m);
        map
    }
}

fn zip_cables(x: &[Vec<Strand>], y: &[Vec<Strand>]) -> Vec<Vec<Strand>> {
    x.iter().zip(y).map(|(p, q)| p.iter().chain(q).cloned().collect()).collect()
}

fn flat(x: &[Vec<Strand>]) -> Vec<Strand> {
    x.iter().flatten().cloned().collect()
}

/// Both sides of the mixed pentagon on one orbit, as elementary words from
/// `A0 B0 C0 A1 B1 C1 .. M` to `A.. B.. C.. M`.
pub fn pentagon_words(n: usize) -> Result<(ElementaryWord, ElementaryWord)> {
    let (a, b, c) = (slot_cables("A", n), slot_cables("B", n), slot_cables("C", n));
    let m = vec![Strand::slot("M")];
    let cm: Vec<Strand> = flat(&c).into_iter().chain(m.iter().cloned()).collect();

    // ψ_{A,B,C⊗M} ∘ ψ_{A⊗B,C,M}
    let lhs = psi(&zip_cables(&a, &b), &c, &m)?.then(&psi(&a, &b, &cm)?)?;
    // (id_A ⊗ ψ_{B,C,M}) ∘ ψ_{A,B⊗C,M}
    let rhs = psi(&a, &zip_cables(&b, &c), &m)?.then(&psi(&b, &c, &m)?.tensor(&flat(&a), &[]))?;
    Ok((lhs, rhs))
}

/// Residual of the mixed pentagon on one orbit of size `labels.n()`.
pub fn module_pentagon_check(model: &AnyonModel, labels: &PentagonAssignment) -> Result<f64> {
    let n = labels.n();
    if labels.b.len() != n || labels.c.len() != n {
        return Err(Error::InvalidArgument("A, B and C need one label per orbit element".into()));
    }
    let (lhs, rhs) = pentagon_words(n)?;
    let slots = labels.slots();
    evaluate(model, &lhs, &slots)?.max_difference(&evaluate(model, &rhs, &slots)?)
}

/// Mixed pentagon for multi-indices `a`, `b`, `c` over X and one module
/// label per `<g>`-orbit; orbits are checked independently.
pub fn module_pentagon_check_multi(
    model: &AnyonModel,
    action: &PermutationAction,
    g: &Perm,
    a: &[usize],
    b: &[usize],
    c: &[usize],
    m: &[usize],
) -> Result<f64> {
    let words = module_structure(action, g)?;
    if [a.len(), b.len(), c.len()].iter().any(|&l| l != action.size()) || m.len() != words.len() {
        return Err(Error::InvalidArgument("multi-index length does not match X and its orbits".into()));
    }
    let mut worst: f64 = 0.0;
    for (w, &mo) in words.iter().zip(m) {
        let labels = PentagonAssignment { a: w.read(a), b: w.read(b), c: w.read(c), m: mo };
        worst = worst.max(module_pentagon_check(model, &labels)?);
    }
    Ok(worst)
}

/// Which slots of `ψ_{A,B,M}` carry the unit in [`unit_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum UnitSide {
    A,
    B,
    M,
}

/// Drops the strands whose labels are the unit together with every crossing
/// that involves one of them.
fn strip_units(model: &AnyonModel, source: &[usize], crossings: &[Crossing]) -> (Vec<usize>, Vec<Crossing>) {
    let unit = model.unit();
    let mut order: Vec<usize> = source.to_vec();
    let mut kept = Vec::new();
    for c in crossings {
        let (l, r) = (order[c.position], order[c.position + 1]);
        if l != unit && r != unit {
            let pos = order[..c.position].iter().filter(|&&x| x != unit).count();
            kept.push(Crossing::new(pos, c.sign));
        }
        order.swap(c.position, c.position + 1);
    }
    (source.iter().copied().filter(|&x| x != unit).collect(), kept)
}

/// Residual between the evaluation of a word and the evaluation of the same
/// word with unit strands removed; trees are matched by deleting the unit
/// positions from their paths.
pub(crate) fn unit_stripping_residual(model: &AnyonModel, source: &[usize], crossings: &[Crossing]) -> Result<f64> {
    let full = crate::category::evaluate_labels(model, source, crossings)?;
    let (s_word, s_cross) = strip_units(model, source, crossings);
    if s_word.is_empty() {
        return full.identity_residual();
    }
    let stripped = crate::category::evaluate_labels(model, &s_word, &s_cross)?;
    let unit = model.unit();
    let project = |word: &[usize], path: &[usize]| -> Vec<usize> {
        word.iter().zip(path).filter(|(&w, _)| w != unit).map(|(_, &p)| p).collect()
    };
    let mut worst: f64 = 0.0;
    for (&charge, block) in full.blocks() {
        let src = tree_basis(model, full.source_word(), charge);
        let dst = tree_basis(model, full.target_word(), charge);
        let s_src = tree_basis(model, stripped.source_word(), charge);
        let s_dst = tree_basis(model, stripped.target_word(), charge);
        let small = stripped
            .block(charge)
            .ok_or_else(|| Error::DimensionMismatch(format!("sector {charge} lost by unit stripping")))?;
        for (j, sp) in src.paths().iter().enumerate() {
            let sj = s_src.index_of(&project(full.source_word(), sp)).expect("stripped tree exists");
            for (i, tp) in dst.paths().iter().enumerate() {
                let si = s_dst.index_of(&project(full.target_word(), tp)).expect("stripped tree exists");
                worst = worst.max((block[(i, j)] - small[(si, sj)]).norm());
            }
        }
    }
    Ok(worst)
}

/// Module unit axiom: `ψ_{A,B,M}` with the slots on `side` set to the unit
/// agrees with the unit-stripped evaluation (the identity when A or B is the
/// unit). `labels` fills the other slots as `[a.., b.., m]`, entries on
/// `side` are ignored.
pub fn unit_check(model: &AnyonModel, n: usize, side: UnitSide, labels: &[usize]) -> Result<f64> {
    if labels.len() != 2 * n + 1 {
        return Err(Error::InvalidArgument(format!("expected {} labels, got {}", 2 * n + 1, labels.len())));
    }
    let unit = model.unit();
    let mut a = labels[..n].to_vec();
    let mut b = labels[n..2 * n].to_vec();
    let mut m = labels[2 * n];
    match side {
        UnitSide::A => a.fill(unit),
        UnitSide::B => b.fill(unit),
        UnitSide::M => m = unit,
    }
    let word = psi(&slot_cables("A", n), &slot_cables("B", n), &[Strand::slot("M")])?;
    let mut slots = Assignment::new();
    for k in 0..n {
        slots.insert(slot_name("A", k), a[k]);
        slots.insert(slot_name("B", k), b[k]);
    }
    slots.insert("M".into(), m);
    let source: Vec<usize> = word
        .source()
        .iter()
        .map(|s| match s {
            Strand::Slot(name) => slots[name],
            Strand::Label(l) => *l,
        })
        .collect();
    unit_stripping_residual(model, &source, word.crossings())
}

/// Checks on the structure of `C^{⊠X}` that the module construction takes
/// as given.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NeutralReport {
    /// Multi-indices `ī` with `g^-1 (g ī) != ī`, over all generators.
    pub permutation_mismatches: usize,
    pub multi_indices_checked: usize,
    /// Componentwise braiding of simple multi-indices against the product
    /// of R-symbols.
    pub braiding_residual: f64,
    pub braiding_instances: usize,
}

impl NeutralReport {
    pub fn passes(&self, tol: f64) -> bool {
        self.permutation_mismatches == 0 && self.braiding_residual <= tol
    }
}

/// `(g ī)_x = ī_{g^-1 x}`.
pub fn permute_multi_index(g: &Perm, index: &[usize]) -> Vec<usize> {
    let g_inv = g.inverse();
    (0..index.len()).map(|x| index[g_inv.apply(x)]).collect()
}

/// Largest number of multi-indices visited per check.
const NEUTRAL_LIMIT: usize = 4096;

pub fn neutral_structure_check(model: &AnyonModel, action: &PermutationAction) -> Result<NeutralReport> {
    let size = action.size();
    let labels = model.num_labels();
    let indices = multi_indices(size, labels, NEUTRAL_LIMIT);

    let mut gens: Vec<Perm> = action.generators().values().cloned().collect();
    gens.push(action.identity());
    let mut mismatches = 0;
    for g in &gens {
        let g_inv = g.inverse();
        mismatches += indices
            .iter()
            .filter(|i| permute_multi_index(&g_inv, &permute_multi_index(g, i)) != **i)
            .count();
    }

    // braiding of (ā, b̄) in channel c̄ is ∏_x R^{a_x b_x}_{c_x}
    let mut braiding_residual: f64 = 0.0;
    let mut braiding_instances = 0;
    let mut cache: HashMap<(usize, usize, usize), num_complex::Complex64> = HashMap::new();
    for a in &indices {
        for b in indices.iter().take(64) {
            for c in channels(model, a, b).into_iter().take(16) {
                let mut componentwise = num_complex::Complex64::new(1.0, 0.0);
                let mut product = num_complex::Complex64::new(1.0, 0.0);
                for x in 0..size {
                    let key = (a[x], b[x], c[x]);
                    let entry = match cache.get(&key) {
                        Some(v) => *v,
                        None => {
                            let m = braid_generator(model, &[a[x], b[x]], 0, Sign::Positive, c[x])?;
                            cache.insert(key, m[(0, 0)]);
                            m[(0, 0)]
                        }
                    };
                    componentwise *= entry;
                    product *= model.r(a[x], b[x], c[x]);
                }
                braiding_residual = braiding_residual.max((componentwise - product).norm());
                braiding_instances += 1;
            }
        }
    }
    Ok(NeutralReport {
        permutation_mismatches: mismatches,
        multi_indices_checked: indices.len() * gens.len(),
        braiding_residual,
        braiding_instances,
    })
}

/// Up to `limit` multi-indices of length `size` in lexicographic order.
fn multi_indices(size: usize, labels: usize, limit: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![0; size]];
    while out.len() < limit {
        let mut next = out.last().expect("non-empty").clone();
        let mut x = size;
        loop {
            if x == 0 {
                return out;
            }
            x -= 1;
            next[x] += 1;
            if next[x] < labels {
                break;
            }
            next[x] = 0;
        }
        out.push(next);
    }
    out
}

/// Multi-index fusion channels of `a ⊗ b`, componentwise.
fn channels(model: &AnyonModel, a: &[usize], b: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for x in 0..a.len() {
        let opts: Vec<usize> = model.fusion_channels(a[x], b[x]).collect();
        out = out
            .into_iter()
            .flat_map(|prefix| {
                opts.iter().map(move |&c| {
                    let mut p = prefix.clone();
                    p.push(c);
                    p
                })
            })
            .collect();
    }
    out
}
