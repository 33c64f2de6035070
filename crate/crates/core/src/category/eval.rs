use std::collections::{BTreeMap, HashMap};

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::basis::{tree_basis, FusionTreeBasis};
use super::model::AnyonModel;
use super::word::{CabledBraidWord, Crossing, ElementaryWord, Sign, Strand};
use crate::error::{Error, Result};

/// Simple labels for the object slots of a word.
pub type Assignment = HashMap<String, usize>;

/// A morphism between two words of simple labels, one block per total charge
/// with non-empty source basis. Block rows index trees of the target word,
/// columns trees of the source word.
#[derive(Debug, Clone, PartialEq)]
pub struct SectorMatrix {
    source_word: Vec<usize>,
    target_word: Vec<usize>,
    blocks: BTreeMap<usize, DMatrix<Complex64>>,
}

impl SectorMatrix {
    pub fn identity(model: &AnyonModel, word: &[usize]) -> Self {
        let blocks = (0..model.num_labels())
            .filter_map(|c| {
                let d = tree_basis(model, word, c).dim();
                (d > 0).then(|| (c, DMatrix::identity(d, d)))
            })
            .collect();
        SectorMatrix { source_word: word.to_vec(), target_word: word.to_vec(), blocks }
    }

    pub fn source_word(&self) -> &[usize] {
        &self.source_word
    }

    pub fn target_word(&self) -> &[usize] {
        &self.target_word
    }

    pub fn blocks(&self) -> &BTreeMap<usize, DMatrix<Complex64>> {
        &self.blocks
    }

    pub fn block(&self, charge: usize) -> Option<&DMatrix<Complex64>> {
        self.blocks.get(&charge)
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &SectorMatrix) -> Result<SectorMatrix> {
        if self.target_word != next.source_word {
            return Err(Error::Composition("sector matrices do not compose".into()));
        }
        let mut blocks = BTreeMap::new();
        for (c, m) in &self.blocks {
            let n = next
                .blocks
                .get(c)
                .ok_or_else(|| Error::Composition(format!("sector {c} missing")))?;
            blocks.insert(*c, n * m);
        }
        Ok(SectorMatrix { source_word: self.source_word.clone(), target_word: next.target_word.clone(), blocks })
    }

    /// Largest entry-wise difference over all sectors; words must agree.
    pub fn max_difference(&self, other: &SectorMatrix) -> Result<f64> {
        if self.source_word != other.source_word || self.target_word != other.target_word {
            return Err(Error::DimensionMismatch("compared morphisms have different words".into()));
        }
        if self.blocks.keys().ne(other.blocks.keys()) {
            return Err(Error::DimensionMismatch("compared morphisms have different sectors".into()));
        }
        Ok(self
            .blocks
            .iter()
            .map(|(c, m)| max_abs(&(m - &other.blocks[c])))
            .fold(0.0, f64::max))
    }

    /// Distance from the identity; requires equal source and target words.
    pub fn identity_residual(&self) -> Result<f64> {
        if self.source_word != self.target_word {
            return Err(Error::DimensionMismatch("not an endomorphism".into()));
        }
        Ok(self
            .blocks
            .values()
            .map(|m| max_abs(&(m - DMatrix::identity(m.nrows(), m.ncols()))))
            .fold(0.0, f64::max))
    }

    /// `max_c ‖M_c M_c† - 1‖_max`.
    pub fn unitarity_residual(&self) -> f64 {
        self.blocks
            .values()
            .map(|m| max_abs(&(m * m.adjoint() - DMatrix::identity(m.nrows(), m.nrows()))))
            .fold(0.0, f64::max)
    }

    /// Smallest singular value over all sectors (0 for a non-square block).
    pub fn min_singular_value(&self) -> f64 {
        self.blocks
            .values()
            .map(|m| {
                if m.nrows() != m.ncols() {
                    return 0.0;
                }
                m.clone().singular_values().iter().copied().fold(f64::INFINITY, f64::min)
            })
            .fold(f64::INFINITY, f64::min)
    }
}

/// Matrix of one elementary crossing of strands `i`, `i + 1` of `word` in the
/// sector `total_charge` (rows: trees of the exchanged word, columns: trees of
/// `word`).
pub fn braid_generator(
    model: &AnyonModel,
    word: &[usize],
    i: usize,
    sign: Sign,
    total_charge: usize,
) -> Result<DMatrix<Complex64>> {
    if i + 1 >= word.len() {
        return Err(Error::CrossingOutOfRange { position: i, len: word.len() });
    }
    let src = tree_basis(model, word, total_charge);
    let mut swapped = word.to_vec();
    swapped.swap(i, i + 1);
    let dst = tree_basis(model, &swapped, total_charge);
    let mut m = DMatrix::zeros(dst.dim(), src.dim());
    for (s, path) in src.paths().iter().enumerate() {
        for (t, coef) in crossing_images(model, word, &dst, path, i, sign) {
            m[(t, s)] += coef;
        }
    }
    Ok(m)
}

/// Images of the tree `path` of `word` under the crossing at `i`, as
/// `(index in dst, coefficient)` pairs.
fn crossing_images(
    model: &AnyonModel,
    word: &[usize],
    dst: &FusionTreeBasis,
    path: &[usize],
    i: usize,
    sign: Sign,
) -> Vec<(usize, Complex64)> {
    let (a, b) = (word[i], word[i + 1]);
    let r = |f: usize| match sign {
        Sign::Positive => model.r(a, b, f),
        Sign::Negative => model.r(b, a, f).inv(),
    };
    let mut out = Vec::new();
    if i == 0 {
        let mut p = path.to_vec();
        p[0] = b;
        if let Some(t) = dst.index_of(&p) {
            out.push((t, r(path[1])));
        }
        return out;
    }
    let (x, y, z) = (path[i - 1], path[i], path[i + 1]);
    let Some(fwd) = model.f_block(x, a, b, z) else { return out };
    let Some(back) = model.f_block(x, b, a, z) else { return out };
    let row = fwd.row_of(y).expect("path is admissible");
    let mut p = path.to_vec();
    for (yi, &y_new) in back.left.iter().enumerate() {
        let mut coef = Complex64::default();
        for (fi, &f) in fwd.right.iter().enumerate() {
            // the same f indexes the right basis of both blocks
            let Some(bi) = back.col_of(f) else { continue };
            coef += fwd.matrix[(row, fi)] * r(f) * back.inverse[(bi, yi)];
        }
        if coef == Complex64::default() {
            continue;
        }
        p[i] = y_new;
        if let Some(t) = dst.index_of(&p) {
            out.push((t, coef));
        }
    }
    out
}

fn resolve(strands: &[Strand], assignment: &Assignment, num_labels: usize) -> Result<Vec<usize>> {
    strands
        .iter()
        .map(|s| match s {
            Strand::Label(l) if *l < num_labels => Ok(*l),
            Strand::Label(l) => Err(Error::UnknownLabel(format!("#{l}"))),
            Strand::Slot(name) => match assignment.get(name) {
                Some(&l) if l < num_labels => Ok(l),
                Some(&l) => Err(Error::UnknownLabel(format!("#{l}"))),
                None => Err(Error::UnassignedSlot(name.clone())),
            },
        })
        .collect()
}

/// Evaluates an elementary word under an assignment of simple labels to its
/// slots.
pub fn evaluate(model: &AnyonModel, word: &ElementaryWord, assignment: &Assignment) -> Result<SectorMatrix> {
    let source = resolve(word.source(), assignment, model.num_labels())?;
    evaluate_labels(model, &source, word.crossings())
}

/// Evaluates crossings applied to a word of simple labels.
pub fn evaluate_labels(model: &AnyonModel, source: &[usize], crossings: &[Crossing]) -> Result<SectorMatrix> {
    if let Some(c) = crossings.iter().find(|c| c.position + 1 >= source.len()) {
        return Err(Error::CrossingOutOfRange { position: c.position, len: source.len() });
    }
    let mut blocks = BTreeMap::new();
    let mut target = source.to_vec();
    for c in &crossings.iter().map(|c| c.position).collect::<Vec<_>>() {
        target.swap(*c, c + 1);
    }
    for charge in 0..model.num_labels() {
        let src_basis = tree_basis(model, source, charge);
        if src_basis.is_empty() {
            continue;
        }
        let mut word = source.to_vec();
        let mut basis = src_basis.clone();
        let mut state = DMatrix::<Complex64>::identity(basis.dim(), basis.dim());
        for c in crossings {
            let mut next_word = word.clone();
            next_word.swap(c.position, c.position + 1);
            let next_basis = tree_basis(model, &next_word, charge);
            let mut next = DMatrix::<Complex64>::zeros(next_basis.dim(), state.ncols());
            for (s, path) in basis.paths().iter().enumerate() {
                for (t, coef) in crossing_images(model, &word, &next_basis, path, c.position, c.sign) {
                    let row = state.row(s) * coef;
                    let mut dst = next.row_mut(t);
                    dst += row;
                }
            }
            word = next_word;
            basis = next_basis;
            state = next;
        }
        blocks.insert(charge, state);
    }
    Ok(SectorMatrix { source_word: source.to_vec(), target_word: target, blocks })
}

/// Expands the cabled word and evaluates it.
pub fn evaluate_cabled(model: &AnyonModel, word: &CabledBraidWord, assignment: &Assignment) -> Result<SectorMatrix> {
    evaluate(model, &word.expand(), assignment)
}

/// Largest entry modulus.
pub(crate) fn max_abs(m: &DMatrix<Complex64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}
