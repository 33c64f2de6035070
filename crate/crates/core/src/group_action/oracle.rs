//! Independent genus computation: lift an explicit cell decomposition of the
//! sphere, branched over three points, sheet by sheet and count cells.
//!
//! The base complex has vertices `v` (regular) and `b0, b1, b2` (the three
//! boundary circles, collapsed), edges `e_i` from `v` to `b_i`, and a single
//! hexagonal face with sides `e0+, e0-, e1+, e1-, e2+, e2-` in
//! counter-clockwise order around `v`. Crossing `e_i` from its `-` side to its
//! `+` side moves from sheet `x` to sheet `sigma_i(x)`, where the sheet
//! permutations are `g2`, `g1`, `(g1 g2)^-1` so that a small loop around `v`
//! has trivial monodromy.

use std::collections::BTreeMap;

use petgraph::unionfind::UnionFind;

use super::{Orbit, Perm};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedComponent {
    /// Face copies (= sheets), ascending.
    pub sheets: Vec<usize>,
    /// Lifted vertices over each branch point, in the order `g1`, `g2`, `g1 g2`.
    pub branch_vertices: [usize; 3],
    pub regular_vertices: usize,
    pub edges: usize,
    pub faces: usize,
}

impl LiftedComponent {
    pub fn euler_characteristic(&self) -> i64 {
        let v = self.branch_vertices.iter().sum::<usize>() + self.regular_vertices;
        v as i64 - self.edges as i64 + self.faces as i64
    }

    /// Genus of the closed-up surface, or an error when the counts do not
    /// describe a closed orientable surface.
    pub fn genus(&self) -> Result<usize> {
        let twice = 2 - self.euler_characteristic();
        if twice < 0 || twice % 2 != 0 {
            return Err(Error::CoverInconsistency(format!(
                "lifted complex has Euler characteristic {}",
                self.euler_characteristic()
            )));
        }
        Ok((twice / 2) as usize)
    }
}

#[derive(Debug, Clone)]
pub struct LiftedComplex {
    pub components: Vec<LiftedComponent>,
}

/// Builds the lifted complex for monodromies `g1`, `g2` around the first two
/// boundaries.
pub fn lifted_complex(g1: &Perm, g2: &Perm) -> Result<LiftedComplex> {
    if g1.degree() != g2.degree() {
        return Err(Error::InvalidPermutation("g1 and g2 act on different sets".into()));
    }
    let n = g1.degree();
    let g3 = g1.compose(g2).inverse();
    // edge slot i around v carries the sheet change sigma[i]
    let sigma = [g2.clone(), g1.clone(), g3];
    // which boundary (g1 = 0, g2 = 1, g1g2 = 2) each edge slot runs to
    let boundary_of_slot = [1usize, 0, 2];

    // Faces glue across every lifted edge.
    let mut faces = UnionFind::<usize>::new(n);
    for s in &sigma {
        for x in 0..n {
            faces.union(x, s.apply(x));
        }
    }

    // Corners: (face x, kind). kind 0..3 = corner at b over slot i,
    // kind 3..6 = corner at v between side (i-1)+ and side i-.
    let corner = |x: usize, kind: usize| x * 6 + kind;
    let mut corners = UnionFind::<usize>::new(6 * n);
    for x in 0..n {
        for i in 0..3 {
            let inv = sigma[i].inverse();
            // around b_i: the corner of face x continues in face sigma_i^-1(x)
            corners.union(corner(x, i), corner(inv.apply(x), i));
            // around v: the corner before side i- in face x continues before
            // side (i-1)- in the neighbouring face across e_i
            let prev = (i + 2) % 3;
            corners.union(corner(x, 3 + i), corner(inv.apply(x), 3 + prev));
        }
    }

    let mut by_component: BTreeMap<usize, LiftedComponent> = BTreeMap::new();
    for x in 0..n {
        let c = by_component.entry(faces.find(x)).or_insert_with(|| LiftedComponent {
            sheets: Vec::new(),
            branch_vertices: [0; 3],
            regular_vertices: 0,
            edges: 0,
            faces: 0,
        });
        c.sheets.push(x);
        c.faces += 1;
        c.edges += 3;
    }
    // Count vertex classes by their representative corners.
    let mut counted = vec![false; 6 * n];
    for x in 0..n {
        let comp = faces.find(x);
        for kind in 0..6 {
            let rep = corners.find(corner(x, kind));
            if std::mem::replace(&mut counted[rep], true) {
                continue;
            }
            let c = by_component.get_mut(&comp).expect("component exists");
            if kind < 3 {
                c.branch_vertices[boundary_of_slot[kind]] += 1;
            } else {
                c.regular_vertices += 1;
            }
        }
    }
    Ok(LiftedComplex { components: by_component.into_values().collect() })
}

/// Genus of the component of the cover lying over `orbit`.
pub fn genus_oracle(g1: &Perm, g2: &Perm, orbit: &Orbit) -> Result<usize> {
    let complex = lifted_complex(g1, g2)?;
    let x = orbit.base_point();
    let comp = complex
        .components
        .iter()
        .find(|c| c.sheets.contains(&x))
        .ok_or_else(|| Error::CoverInconsistency("orbit not found in lifted complex".into()))?;
    if comp.sheets.len() != orbit.size() || !orbit.elements().iter().all(|y| comp.sheets.contains(y)) {
        return Err(Error::CoverInconsistency(
            "orbit is not a <g1, g2>-orbit".into(),
        ));
    }
    comp.genus()
}
