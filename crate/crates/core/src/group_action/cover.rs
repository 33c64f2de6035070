use serde::{Deserialize, Serialize};

use super::{orbits, Orbit, Perm};
use crate::error::{Error, Result};

/// One connected component of the X-associated cover of the three-holed
/// sphere with boundary monodromies `g1`, `g2`, `(g1 g2)^-1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverComponent {
    /// The `<g1, g2>`-orbit this component lies over.
    pub orbit: Orbit,
    pub sheets: usize,
    /// `<g1>`-orbits contained in `orbit`.
    pub boundaries_1: Vec<Orbit>,
    /// `<g2>`-orbits contained in `orbit`.
    pub boundaries_2: Vec<Orbit>,
    /// `<g1 g2>`-orbits contained in `orbit`.
    pub boundaries_3: Vec<Orbit>,
    pub genus: usize,
}

impl CoverComponent {
    pub fn boundary_count(&self) -> usize {
        self.boundaries_1.len() + self.boundaries_2.len() + self.boundaries_3.len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        -(self.sheets as i64)
    }
}

/// Components of the cover, one per `<g1, g2>`-orbit, with genus from
/// `chi = -sheets = 2 - 2 genus - boundaries`.
pub fn cover_components(g1: &Perm, g2: &Perm) -> Result<Vec<CoverComponent>> {
    if g1.degree() != g2.degree() {
        return Err(Error::InvalidPermutation("g1 and g2 act on different sets".into()));
    }
    let n = g1.degree();
    let g3 = g1.compose(g2);
    let joint = orbits(n, &[g1.clone(), g2.clone()]);
    let cyc1 = orbits(n, std::slice::from_ref(g1));
    let cyc2 = orbits(n, std::slice::from_ref(g2));
    let cyc3 = orbits(n, &[g3]);

    let inside = |cyclic: &[Orbit], o: &Orbit| -> Vec<Orbit> {
        cyclic.iter().filter(|c| o.contains(c.base_point())).cloned().collect()
    };

    joint
        .into_iter()
        .map(|orbit| {
            let boundaries_1 = inside(&cyc1, &orbit);
            let boundaries_2 = inside(&cyc2, &orbit);
            let boundaries_3 = inside(&cyc3, &orbit);
            let sheets = orbit.size();
            let boundaries = boundaries_1.len() + boundaries_2.len() + boundaries_3.len();
            // 2 - 2 genus - boundaries = -sheets
            let twice_genus = 2 + sheets as i64 - boundaries as i64;
            if twice_genus < 0 || twice_genus % 2 != 0 {
                return Err(Error::CoverInconsistency(format!(
                    "orbit {:?} gives 2*genus = {twice_genus}",
                    orbit.elements()
                )));
            }
            Ok(CoverComponent {
                orbit,
                sheets,
                boundaries_1,
                boundaries_2,
                boundaries_3,
                genus: (twice_genus / 2) as usize,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Perm {
        Perm::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn s3_transpositions_give_one_sphere() {
        let comps = cover_components(&cyc(3, &[&[0, 1]]), &cyc(3, &[&[1, 2]])).unwrap();
        assert_eq!(comps.len(), 1);
        let c = &comps[0];
        assert_eq!(c.sheets, 3);
        assert_eq!(
            (c.boundaries_1.len(), c.boundaries_2.len(), c.boundaries_3.len()),
            (2, 2, 1)
        );
        assert_eq!(c.genus, 0);
    }

    #[test]
    fn trivial_cover() {
        let id = Perm::identity(4);
        let comps = cover_components(&id, &id).unwrap();
        assert_eq!(comps.len(), 4);
        for c in comps {
            assert_eq!((c.sheets, c.boundary_count(), c.genus), (1, 3, 0));
        }
    }

    #[test]
    fn module_action_cover_has_genus_zero() {
        let g = Perm::new(vec![1, 2, 0, 4, 3, 5]).unwrap();
        let comps = cover_components(&g.inverse(), &Perm::identity(6)).unwrap();
        assert_eq!(comps.len(), 3);
        for c in &comps {
            assert_eq!(c.genus, 0);
            assert_eq!(c.boundaries_1.len(), 1);
            assert_eq!(c.boundaries_2.len(), c.sheets);
            assert_eq!(c.boundaries_3.len(), 1);
        }
    }

    #[test]
    fn commuting_three_cycles() {
        let r = cyc(3, &[&[0, 1, 2]]);
        let comps = cover_components(&r, &r).unwrap();
        // <r>, <r>, <r^2>: one boundary each, 3 sheets: 2 - 3 + 3 = 2 -> genus 1
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].boundary_count(), 3);
        assert_eq!(comps[0].genus, 1);
    }
}
