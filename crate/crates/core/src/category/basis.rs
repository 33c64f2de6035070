use std::collections::HashMap;

use super::model::AnyonModel;

/// Left-canonical splitting trees of `Hom(total_charge, w_0 ⊗ .. ⊗ w_{k-1})`.
///
/// A tree is stored as its charge path `p` with `p[j]` the total charge of the
/// first `j + 1` strands, so `p[0] = w_0` and `p[k-1] = total_charge`; the
/// internal labels are `p[1..k-1]`. Trees are sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionTreeBasis {
    word: Vec<usize>,
    total_charge: usize,
    trees: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl FusionTreeBasis {
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn total_charge(&self) -> usize {
        self.total_charge
    }

    pub fn dim(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    /// Charge paths, one per tree.
    pub fn paths(&self) -> &[Vec<usize>] {
        &self.trees
    }

    pub fn internal_labels(&self, i: usize) -> &[usize] {
        let p = &self.trees[i];
        if p.len() <= 2 {
            &[]
        } else {
            &p[1..p.len() - 1]
        }
    }

    pub fn index_of(&self, path: &[usize]) -> Option<usize> {
        self.index.get(path).copied()
    }
}

/// All admissible left-canonical trees; empty when none exist. An empty word
/// is treated as the unit object.
pub fn tree_basis(model: &AnyonModel, word: &[usize], total_charge: usize) -> FusionTreeBasis {
    let mut trees = Vec::new();
    if word.is_empty() {
        if total_charge == model.unit() {
            trees.push(Vec::new());
        }
    } else {
        let mut path = Vec::with_capacity(word.len());
        path.push(word[0]);
        extend(model, word, total_charge, &mut path, &mut trees);
    }
    let index = trees.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
    FusionTreeBasis { word: word.to_vec(), total_charge, trees, index }
}

fn extend(model: &AnyonModel, word: &[usize], total: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let j = path.len();
    if j == word.len() {
        if path[j - 1] == total {
            out.push(path.clone());
        }
        return;
    }
    let prev = path[j - 1];
    for c in model.fusion_channels(prev, word[j]) {
        path.push(c);
        extend(model, word, total, path, out);
        path.pop();
    }
}

/// Total charges with a non-empty basis.
pub fn sectors(model: &AnyonModel, word: &[usize]) -> Vec<usize> {
    (0..model.num_labels()).filter(|&c| !tree_basis(model, word, c).is_empty()).collect()
}
