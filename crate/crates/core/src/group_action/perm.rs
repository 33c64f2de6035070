use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `{0, .., n-1}` stored as its image array: `self[x]` is the
/// image of `x`.
///
/// Products follow function composition: `a.compose(&b)` is "apply `b`, then
/// `a`", which is what `a*b` means in group words.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &y in &images {
            if y >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {y} out of range for {n} points"
                )));
            }
            if std::mem::replace(&mut seen[y], true) {
                return Err(Error::InvalidPermutation(format!("image {y} repeated")));
            }
        }
        Ok(Perm(images))
    }

    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    /// Builds a permutation from disjoint cycles, e.g. `[[0, 1, 2]]` for `0 -> 1 -> 2 -> 0`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                let y = cycle[(k + 1) % cycle.len()];
                if x >= n || y >= n {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle entry out of range for {n} points"
                    )));
                }
                if std::mem::replace(&mut touched[x], true) {
                    return Err(Error::InvalidPermutation(format!(
                        "point {x} appears in two cycles"
                    )));
                }
                images[x] = y;
            }
        }
        Perm::new(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in compose");
        Perm(other.0.iter().map(|&y| self.0[y]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.degree()];
        for (x, &y) in self.0.iter().enumerate() {
            inv[y] = x;
        }
        Perm(inv)
    }

    pub fn pow(&self, k: i64) -> Perm {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut result = Perm::identity(self.degree());
        for _ in 0..k.unsigned_abs() {
            result = base.compose(&result);
        }
        result
    }

    /// Multiplicative order.
    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = self.compose(&p);
            k += 1;
        }
        k
    }

    /// Number of cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.degree()];
        let mut count = 0;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x];
            }
        }
        count
    }
}

impl TryFrom<Vec<usize>> for Perm {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Perm::new(v)
    }
}

impl From<Perm> for Vec<usize> {
    fn from(p: Perm) -> Self {
        p.0
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.0)
    }
}

impl fmt::Display for Perm {
    /// Cycle notation, fixed points omitted; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut wrote = false;
        for start in 0..self.degree() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
                first = false;
                x = self.0[x];
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::new(vec![0, 0, 1]).is_err());
        assert!(Perm::new(vec![0, 3, 1]).is_err());
        assert!(Perm::new(vec![2, 0, 1]).is_ok());
    }

    #[test]
    fn compose_applies_right_factor_first() {
        let a = Perm::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Perm::from_cycles(3, &[&[1, 2]]).unwrap();
        // (0 1)(1 2): 1 -> 2 -> 2, 2 -> 1 -> 0, 0 -> 0 -> 1
        let ab = a.compose(&b);
        assert_eq!(ab.images(), &[1, 2, 0]);
        assert_eq!(ab.to_string(), "(0 1 2)");
    }

    #[test]
    fn pow_and_order() {
        let r = Perm::new(vec![1, 2, 3, 0]).unwrap();
        assert_eq!(r.order(), 4);
        assert_eq!(r.pow(-1), r.inverse());
        assert_eq!(r.pow(4), Perm::identity(4));
        assert_eq!(r.pow(3), r.inverse());
        assert_eq!(r.cycle_count(), 1);
        assert_eq!(Perm::identity(5).cycle_count(), 5);
    }
}
