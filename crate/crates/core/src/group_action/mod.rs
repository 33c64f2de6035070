//! Finite G-sets given by generator permutations: element enumeration, orbits,
//! and the component data of the covers of the three-holed sphere.
//!
//! Group elements are represented only by their image in the symmetric group
//! on X. Products use function composition throughout: `g1*g2` means "apply
//! `g2` first, then `g1`".

mod cover;
mod oracle;
mod perm;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use cover::{cover_components, CoverComponent};
pub use oracle::{genus_oracle, lifted_complex, LiftedComplex, LiftedComponent};
pub use perm::Perm;

/// Default cap on the number of enumerated group elements.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 1_000_000;

/// On-disk form of a G-set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDocument {
    pub x: Vec<String>,
    #[serde(default)]
    pub generators: BTreeMap<String, Vec<usize>>,
    #[serde(default)]
    pub elements: BTreeMap<String, String>,
}

/// An ordered finite set X together with a group acting on it through
/// generator permutations. The order on X is the order of `x_labels`.
#[derive(Debug, Clone, PartialEq)]
pub struct PermutationAction {
    x_labels: Vec<String>,
    generators: BTreeMap<String, Perm>,
    elements: BTreeMap<String, String>,
}

impl PermutationAction {
    pub fn new(x_labels: Vec<String>, generators: BTreeMap<String, Perm>) -> Result<Self> {
        let distinct: BTreeSet<_> = x_labels.iter().collect();
        if distinct.len() != x_labels.len() {
            return Err(Error::Parse("element names in `x` must be distinct".into()));
        }
        if x_labels.is_empty() {
            return Err(Error::Parse("`x` must be non-empty".into()));
        }
        for (name, p) in &generators {
            if p.degree() != x_labels.len() {
                return Err(Error::InvalidPermutation(format!(
                    "generator `{name}` acts on {} points, X has {}",
                    p.degree(),
                    x_labels.len()
                )));
            }
            check_symbol(name)?;
        }
        Ok(PermutationAction { x_labels, generators, elements: BTreeMap::new() })
    }

    /// The G-set on `0..n` with elements named by their index.
    pub fn on_points(n: usize, generators: impl IntoIterator<Item = (String, Perm)>) -> Result<Self> {
        Self::new((0..n).map(|i| i.to_string()).collect(), generators.into_iter().collect())
    }

    /// `Z/n` acting on `0..n` by the generator `r: x -> x+1`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("X must be non-empty".into()));
        }
        let r = Perm::new((0..n).map(|x| (x + 1) % n).collect())?;
        Self::on_points(n, [("r".to_string(), r)])
    }

    /// `S_n` acting on `0..n`, generated by the n-cycle `r` and the
    /// transposition `s = (0 1)`.
    pub fn symmetric(n: usize) -> Result<Self> {
        let mut action = Self::cyclic(n)?;
        if n > 1 {
            action.generators.insert("s".into(), Perm::from_cycles(n, &[&[0, 1]])?);
        }
        Ok(action)
    }

    /// `cyclic:<n>`, `symmetric:<n>`, or else the path of a group document.
    pub fn resolve_reference(reference: &str) -> Result<Self> {
        let builtin = |prefix: &str| {
            reference
                .strip_prefix(prefix)
                .map(|n| n.parse::<usize>().map_err(|_| Error::Parse(format!("bad size in `{reference}`"))))
        };
        if let Some(n) = builtin("cyclic:") {
            return Self::cyclic(n?);
        }
        if let Some(n) = builtin("symmetric:") {
            return Self::symmetric(n?);
        }
        Self::from_json(&std::fs::read_to_string(reference)?)
    }

    pub fn from_document(doc: GroupDocument) -> Result<Self> {
        let generators = doc
            .generators
            .into_iter()
            .map(|(name, images)| {
                Perm::new(images)
                    .map(|p| (name.clone(), p))
                    .map_err(|e| Error::Parse(format!("generator `{name}`: {e}")))
            })
            .collect::<Result<BTreeMap<_, _>>>()?;
        let mut action = Self::new(doc.x, generators)?;
        for (name, word) in doc.elements {
            check_symbol(&name)?;
            if action.generators.contains_key(&name) {
                return Err(Error::Parse(format!("element `{name}` shadows a generator")));
            }
            action.elements.insert(name, word);
        }
        // every named element must resolve, and without cycles
        for name in action.elements.keys() {
            action.resolve(name)?;
        }
        Ok(action)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GroupDocument =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("group document: {e}")))?;
        Self::from_document(doc)
    }

    pub fn to_document(&self) -> GroupDocument {
        GroupDocument {
            x: self.x_labels.clone(),
            generators: self
                .generators
                .iter()
                .map(|(k, p)| (k.clone(), p.images().to_vec()))
                .collect(),
            elements: self.elements.clone(),
        }
    }

    pub fn x_labels(&self) -> &[String] {
        &self.x_labels
    }

    pub fn size(&self) -> usize {
        self.x_labels.len()
    }

    pub fn generators(&self) -> &BTreeMap<String, Perm> {
        &self.generators
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.size())
    }

    /// Resolves a word such as `r*r`, `a^-1*b`, `g^2` or `1` to a permutation.
    /// Factors act right to left.
    pub fn resolve(&self, word: &str) -> Result<Perm> {
        self.resolve_inner(word, &mut Vec::new())
    }

    fn resolve_inner(&self, word: &str, stack: &mut Vec<String>) -> Result<Perm> {
        let malformed = |reason: &str| Error::MalformedWord {
            word: word.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = word.trim();
        if trimmed.is_empty() {
            return Err(malformed("empty word"));
        }
        let mut result = self.identity();
        for factor in trimmed.split('*') {
            let factor = factor.trim();
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => {
                    let e: i64 = e.trim().parse().map_err(|_| malformed("bad exponent"))?;
                    (n.trim(), e)
                }
                None => (factor, 1),
            };
            if name.is_empty() {
                return Err(malformed("empty factor"));
            }
            let base = if matches!(name, "1" | "e" | "id") {
                self.identity()
            } else if let Some(p) = self.generators.get(name) {
                p.clone()
            } else if let Some(w) = self.elements.get(name) {
                if stack.iter().any(|s| s == name) {
                    return Err(malformed("cyclic element definition"));
                }
                stack.push(name.to_string());
                let p = self.resolve_inner(w, stack)?;
                stack.pop();
                p
            } else {
                return Err(Error::UnknownSymbol(name.to_string()));
            };
            result = result.compose(&base.pow(exp));
        }
        Ok(result)
    }

    /// All elements of the permutation image of G, sorted lexicographically by
    /// image array.
    pub fn enumerate_group(&self) -> Result<Vec<Perm>> {
        self.enumerate_group_with_limit(DEFAULT_ENUMERATION_LIMIT)
    }

    pub fn enumerate_group_with_limit(&self, limit: usize) -> Result<Vec<Perm>> {
        let gens: Vec<&Perm> = self.generators.values().collect();
        let id = self.identity();
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(id.clone());
        queue.push_back(id);
        while let Some(p) = queue.pop_front() {
            for g in &gens {
                let q = g.compose(&p);
                if !seen.contains(&q) {
                    if seen.len() >= limit {
                        return Err(Error::GroupTooLarge { limit });
                    }
                    seen.insert(q.clone());
                    queue.push_back(q);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }
}

fn check_symbol(name: &str) -> Result<()> {
    let ok = !name.is_empty()
        && !matches!(name, "1" | "e" | "id")
        && name.chars().all(|c| c.is_alphanumeric() || c == '_');
    if ok {
        Ok(())
    } else {
        Err(Error::Parse(format!("`{name}` is not a valid generator/element name")))
    }
}

/// An orbit of a subgroup acting on X.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Orbit {
    elements: Vec<usize>,
}

impl Orbit {
    pub(crate) fn from_elements(elements: Vec<usize>) -> Self {
        debug_assert!(!elements.is_empty());
        Orbit { elements }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    /// Smallest element under the order on X.
    pub fn base_point(&self) -> usize {
        *self.elements.iter().min().expect("orbits are non-empty")
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.contains(&x)
    }

    pub fn is_stable_under(&self, p: &Perm) -> bool {
        self.elements.iter().all(|&x| self.contains(p.apply(x)))
    }
}

/// Partition of `0..degree` into orbits of the group generated by `gens`.
///
/// Orbits come sorted by base point. For a single generator `g` each orbit is
/// listed as `x_o, g^-1 x_o, g^-2 x_o, ..`; otherwise in ascending order.
pub fn orbits(degree: usize, gens: &[Perm]) -> Vec<Orbit> {
    if let [g] = gens {
        let g_inv = g.inverse();
        let mut seen = vec![false; degree];
        let mut out = Vec::new();
        for start in 0..degree {
            if seen[start] {
                continue;
            }
            let mut elements = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                elements.push(x);
                x = g_inv.apply(x);
            }
            out.push(Orbit::from_elements(elements));
        }
        return out;
    }

    let mut uf = UnionFind::<usize>::new(degree);
    for g in gens {
        for x in 0..degree {
            uf.union(x, g.apply(x));
        }
    }
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for x in 0..degree {
        classes.entry(uf.find(x)).or_default().push(x);
    }
    let mut out: Vec<Orbit> = classes.into_values().map(Orbit::from_elements).collect();
    out.sort_by_key(Orbit::base_point);
    out
}

impl PermutationAction {
    pub fn orbits(&self, gens: &[Perm]) -> Vec<Orbit> {
        orbits(self.size(), gens)
    }
}
