//! Braid words as syntax: elementary words over strands and cabled words
//! whose crossings act on bundles of strands.
//!
//! Crossing positions are 0-based: a crossing at `i` exchanges the strands
//! (or cables) at positions `i` and `i + 1`. A positive crossing is the
//! braiding `c_{X,Y}` with the left strand passing over the right one; a
//! negative crossing at `i` is the inverse of the positive crossing on the
//! exchanged word, so it takes `Y X` to `X Y` with `X` again on top.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn from_i8(s: i8) -> Result<Sign> {
        match s {
            1 => Ok(Sign::Positive),
            -1 => Ok(Sign::Negative),
            _ => Err(Error::InvalidArgument(format!("crossing sign must be +1 or -1, got {s}"))),
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

/// One strand: either a named object slot, filled in by an assignment at
/// evaluation time, or a fixed simple label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Strand {
    Slot(String),
    Label(usize),
}

impl Strand {
    pub fn slot(name: impl Into<String>) -> Strand {
        Strand::Slot(name.into())
    }
}

impl fmt::Display for Strand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strand::Slot(s) => write!(f, "{s}"),
            Strand::Label(l) => write!(f, "#{l}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    pub position: usize,
    pub sign: Sign,
}

impl Crossing {
    pub fn new(position: usize, sign: Sign) -> Self {
        Crossing { position, sign }
    }

    pub fn pos(position: usize) -> Self {
        Crossing { position, sign: Sign::Positive }
    }

    pub fn neg(position: usize) -> Self {
        Crossing { position, sign: Sign::Negative }
    }
}

/// A word in elementary crossings over a fixed source sequence of strands.
/// Crossings are applied first to last.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementaryWord {
    source: Vec<Strand>,
    crossings: Vec<Crossing>,
}

impl ElementaryWord {
    pub fn new(source: Vec<Strand>, crossings: Vec<Crossing>) -> Result<Self> {
        let len = source.len();
        if let Some(c) = crossings.iter().find(|c| c.position + 1 >= len) {
            return Err(Error::CrossingOutOfRange { position: c.position, len });
        }
        Ok(ElementaryWord { source, crossings })
    }

    pub fn identity(source: Vec<Strand>) -> Self {
        ElementaryWord { source, crossings: Vec::new() }
    }

    pub fn source(&self) -> &[Strand] {
        &self.source
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    /// Strand order after all crossings.
    pub fn target(&self) -> Vec<Strand> {
        let mut order = self.source.clone();
        for c in &self.crossings {
            order.swap(c.position, c.position + 1);
        }
        order
    }

    /// Permutation of positions: entry `j` is the source position of the
    /// strand that ends at position `j`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.source.len()).collect();
        for c in &self.crossings {
            order.swap(c.position, c.position + 1);
        }
        order
    }

    /// `self` followed by `next`; the target strands of `self` must equal the
    /// source strands of `next`.
    pub fn then(&self, next: &ElementaryWord) -> Result<ElementaryWord> {
        let target = self.target();
        if target != next.source {
            return Err(Error::Composition(format!(
                "target [{}] does not match source [{}]",
                join(&target),
                join(&next.source)
            )));
        }
        let mut crossings = self.crossings.clone();
        crossings.extend_from_slice(&next.crossings);
        Ok(ElementaryWord { source: self.source.clone(), crossings })
    }

    pub fn inverse(&self) -> ElementaryWord {
        ElementaryWord {
            source: self.target(),
            crossings: self
                .crossings
                .iter()
                .rev()
                .map(|c| Crossing::new(c.position, c.sign.flip()))
                .collect(),
        }
    }

    /// `id_prefix ⊗ self ⊗ id_suffix`.
    pub fn tensor(&self, prefix: &[Strand], suffix: &[Strand]) -> ElementaryWord {
        let shift = prefix.len();
        let mut source = prefix.to_vec();
        source.extend_from_slice(&self.source);
        source.extend_from_slice(suffix);
        ElementaryWord {
            source,
            crossings: self
                .crossings
                .iter()
                .map(|c| Crossing::new(c.position + shift, c.sign))
                .collect(),
        }
    }

    /// Replaces strands in the source by other strands (e.g. renaming slots).
    pub fn rename(&self, f: impl Fn(&Strand) -> Strand) -> ElementaryWord {
        ElementaryWord { source: self.source.iter().map(f).collect(), crossings: self.crossings.clone() }
    }
}

fn join(strands: &[Strand]) -> String {
    strands.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// A bundle of parallel strands.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cable {
    pub name: String,
    pub strands: Vec<Strand>,
}

impl Cable {
    pub fn new(name: impl Into<String>, strands: Vec<Strand>) -> Self {
        Cable { name: name.into(), strands }
    }

    /// A cable holding the single slot of the same name.
    pub fn single(name: impl Into<String>) -> Self {
        let name = name.into();
        Cable { strands: vec![Strand::Slot(name.clone())], name }
    }

    pub fn width(&self) -> usize {
        self.strands.len()
    }
}

/// A braid word whose crossings exchange whole cables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CabledBraidWord {
    cables: Vec<Cable>,
    crossings: Vec<Crossing>,
}

impl CabledBraidWord {
    pub fn new(cables: Vec<Cable>, crossings: Vec<Crossing>) -> Result<Self> {
        let len = cables.len();
        if let Some(c) = crossings.iter().find(|c| c.position + 1 >= len) {
            return Err(Error::CrossingOutOfRange { position: c.position, len });
        }
        Ok(CabledBraidWord { cables, crossings })
    }

    pub fn cables(&self) -> &[Cable] {
        &self.cables
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    /// Cable order after all crossings.
    pub fn target_cables(&self) -> Vec<Cable> {
        let mut order = self.cables.clone();
        for c in &self.crossings {
            order.swap(c.position, c.position + 1);
        }
        order
    }

    /// The same word with cable contents replaced by name; cables missing
    /// from `contents` keep their strands. Empty cables are allowed and
    /// contribute no elementary crossings.
    pub fn with_contents(&self, contents: &HashMap<String, Vec<Strand>>) -> CabledBraidWord {
        CabledBraidWord {
            cables: self
                .cables
                .iter()
                .map(|c| match contents.get(&c.name) {
                    Some(s) => Cable::new(c.name.clone(), s.clone()),
                    None => c.clone(),
                })
                .collect(),
            crossings: self.crossings.clone(),
        }
    }

    /// Expands every cable crossing into elementary crossings: an `m`-strand
    /// cable crossing an `n`-strand cable gives `m n` crossings of the same
    /// sign, moving the right cable's strands leftwards one at a time.
    pub fn expand(&self) -> ElementaryWord {
        let source: Vec<Strand> = self.cables.iter().flat_map(|c| c.strands.iter().cloned()).collect();
        let mut widths: Vec<usize> = self.cables.iter().map(Cable::width).collect();
        let mut crossings = Vec::new();
        for c in &self.crossings {
            let start: usize = widths[..c.position].iter().sum();
            let (m, n) = (widths[c.position], widths[c.position + 1]);
            for r in 0..n {
                // strand r of the right cable sits at start + m + r and moves
                // left past the m strands of the left cable
                for k in (0..m).rev() {
                    crossings.push(Crossing::new(start + k + r, c.sign));
                }
            }
            widths.swap(c.position, c.position + 1);
        }
        ElementaryWord { source, crossings }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(name: &str) -> Strand {
        Strand::slot(name)
    }

    #[test]
    fn cable_crossing_expands_to_product_of_widths() {
        let w = CabledBraidWord::new(
            vec![
                Cable::new("L", vec![s("a"), s("b")]),
                Cable::new("R", vec![s("c"), s("d"), s("e")]),
            ],
            vec![Crossing::pos(0)],
        )
        .unwrap();
        let e = w.expand();
        assert_eq!(e.len(), 6);
        assert_eq!(e.target(), vec![s("c"), s("d"), s("e"), s("a"), s("b")]);
        assert!(e.crossings().iter().all(|c| c.sign == Sign::Positive));
    }

    #[test]
    fn single_strand_over_pair() {
        let w = CabledBraidWord::new(
            vec![Cable::single("U"), Cable::new("N", vec![s("V"), s("M")])],
            vec![Crossing::pos(0)],
        )
        .unwrap();
        assert_eq!(w.expand().crossings(), &[Crossing::pos(0), Crossing::pos(1)]);

        let w = CabledBraidWord::new(
            vec![Cable::new("N", vec![s("V"), s("M")]), Cable::single("U")],
            vec![Crossing::pos(0)],
        )
        .unwrap();
        assert_eq!(w.expand().crossings(), &[Crossing::pos(1), Crossing::pos(0)]);
    }

    #[test]
    fn composition_checks_strands() {
        let a = ElementaryWord::new(vec![s("x"), s("y")], vec![Crossing::pos(0)]).unwrap();
        let b = ElementaryWord::new(vec![s("y"), s("x")], vec![Crossing::neg(0)]).unwrap();
        assert_eq!(a.then(&b).unwrap().target(), vec![s("x"), s("y")]);
        assert!(a.then(&a).is_err());
        assert_eq!(a.inverse(), b);
    }

    #[test]
    fn out_of_range_crossing_is_rejected() {
        assert!(matches!(
            ElementaryWord::new(vec![s("x"), s("y")], vec![Crossing::pos(1)]),
            Err(Error::CrossingOutOfRange { .. })
        ));
    }

    #[test]
    fn tensor_shifts_positions() {
        let a = ElementaryWord::new(vec![s("x"), s("y")], vec![Crossing::pos(0)]).unwrap();
        let t = a.tensor(&[s("p"), s("q")], &[s("z")]);
        assert_eq!(t.crossings(), &[Crossing::pos(2)]);
        assert_eq!(t.target(), vec![s("p"), s("q"), s("y"), s("x"), s("z")]);
    }
}
