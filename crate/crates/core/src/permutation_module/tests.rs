use proptest::prelude::*;

use super::*;
use crate::category::{builtin_model, evaluate, Assignment, Sign};
use crate::group_action::PermutationAction;

fn cyclic(n: usize) -> Perm {
    Perm::new((0..n).map(|x| (x + 1) % n).collect()).unwrap()
}

fn whole(n: usize) -> Orbit {
    orbits(n, &[cyclic(n)]).remove(0)
}

/// Position map of the riffle unshuffle `A0 B0 A1 B1 .. M -> A.. B.. M`:
/// entry `j` is the source position of the strand ending at `j`.
fn unshuffle(n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).map(|k| 2 * k).collect();
    p.extend((0..n).map(|k| 2 * k + 1));
    p.push(2 * n);
    p
}

#[test]
fn action_word_on_z4() {
    let w = action_word(&cyclic(4), &whole(4)).unwrap();
    assert_eq!(w.factor_order, vec![0, 3, 2, 1]);
    assert_eq!(w.to_string(), "A_0 A_3 A_2 A_1 M");
}

#[test]
fn action_word_fixed_point_and_swap() {
    let g = Perm::new(vec![0, 2, 1]).unwrap();
    let os = orbits(3, std::slice::from_ref(&g));
    assert_eq!(action_word(&g, &os[0]).unwrap().factor_order, vec![0]);
    assert_eq!(action_word(&g, &os[1]).unwrap().factor_order, vec![1, 2]);
    let swap = Perm::new(vec![1, 0]).unwrap();
    assert_eq!(action_word(&swap, &whole(2)).unwrap().to_string(), "A_0 A_1 M");
}

#[test]
fn action_word_rejects_unstable_orbit() {
    let g = Perm::new(vec![1, 0, 2]).unwrap();
    let o = orbits(3, &[Perm::new(vec![0, 2, 1]).unwrap()]).remove(1);
    assert!(matches!(action_word(&g, &o), Err(Error::OrbitNotStable)));
}

#[test]
fn module_structure_has_independent_orbits() {
    let action = PermutationAction::on_points(4, [("g".to_string(), Perm::new(vec![1, 0, 3, 2]).unwrap())]).unwrap();
    let g = action.resolve("g").unwrap();
    let words = module_structure(&action, &g).unwrap();
    assert_eq!(words.len(), 2);
    assert_eq!(words[0].factor_order, vec![0, 1]);
    assert_eq!(words[1].factor_order, vec![2, 3]);
}

#[test]
fn associator_small_cases() {
    assert!(associator(1).unwrap().word.crossings().is_empty());
    assert_eq!(associator(2).unwrap().moves, vec![(0, 1)]);
    assert_eq!(associator(3).unwrap().moves, vec![(1, 2), (0, 1), (0, 2)]);
    assert!(associator(0).is_err());
}

#[test]
fn associator_is_riffle_unshuffle() {
    for n in 1..=8 {
        let psi = associator(n).unwrap();
        assert_eq!(psi.word.crossings().len(), n * (n - 1) / 2);
        assert!(psi.word.crossings().iter().all(|c| c.sign == Sign::Positive));
        assert!(psi.moves.iter().all(|&(l, k)| k > l));
        assert_eq!(psi.word.expand().permutation(), unshuffle(n), "n = {n}");
    }
}

#[test]
fn pentagon_words_share_permutation() {
    for n in 1..=4 {
        let (l, r) = pentagon_words(n).unwrap();
        assert_eq!(l.source(), r.source());
        assert_eq!(l.target(), r.target());
    }
}

#[test]
fn pentagon_trivial_orbit_is_exact() {
    let fib = builtin_model("fibonacci").unwrap();
    let (l, r) = pentagon_words(1).unwrap();
    assert!(l.is_empty() && r.is_empty());
    let labels = PentagonAssignment { a: vec![1], b: vec![1], c: vec![1], m: 1 };
    assert_eq!(module_pentagon_check(&fib, &labels).unwrap(), 0.0);
}

#[test]
fn pentagon_fibonacci_all_tau() {
    let fib = builtin_model("fibonacci").unwrap();
    let labels = PentagonAssignment { a: vec![1; 2], b: vec![1; 2], c: vec![1; 2], m: 1 };
    assert!(module_pentagon_check(&fib, &labels).unwrap() < 1e-9);
}

#[test]
fn pentagon_ising_all_sigma() {
    let ising = builtin_model("ising").unwrap();
    let labels = PentagonAssignment { a: vec![1; 3], b: vec![1; 3], c: vec![1; 3], m: 1 };
    assert!(module_pentagon_check(&ising, &labels).unwrap() < 1e-9);
}

#[test]
fn pentagon_multi_orbit() {
    let ising = builtin_model("ising").unwrap();
    let action = PermutationAction::on_points(3, [("g".to_string(), Perm::new(vec![1, 0, 2]).unwrap())]).unwrap();
    let g = action.resolve("g").unwrap();
    let r = module_pentagon_check_multi(&ising, &action, &g, &[1, 2, 1], &[1, 1, 0], &[2, 1, 1], &[1, 2]).unwrap();
    assert!(r < 1e-9);
    assert!(module_pentagon_check_multi(&ising, &action, &g, &[1, 2], &[1, 1, 0], &[2, 1, 1], &[1, 2]).is_err());
}

#[test]
fn unit_checks() {
    let fib = builtin_model("fibonacci").unwrap();
    let ising = builtin_model("ising").unwrap();
    assert!(unit_check(&fib, 2, UnitSide::A, &[1, 1, 1, 1, 1]).unwrap() < 1e-12);
    assert!(unit_check(&ising, 3, UnitSide::B, &[1, 2, 1, 0, 0, 0, 1]).unwrap() < 1e-12);
    assert!(unit_check(&fib, 2, UnitSide::M, &[1, 1, 1, 1, 1]).unwrap() < 1e-12);
}

#[test]
fn psi_with_unit_module_is_unitary_shuffle() {
    let fib = builtin_model("fibonacci").unwrap();
    let word = psi(&slot_cables("A", 2), &slot_cables("B", 2), &[Strand::slot("M")]).unwrap();
    let slots: Assignment = [("A0", 1), ("A1", 1), ("B0", 1), ("B1", 1), ("M", 0)]
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect();
    assert!(evaluate(&fib, &word, &slots).unwrap().unitarity_residual() < 1e-12);
}

#[test]
fn neutral_structure() {
    let fib = builtin_model("fibonacci").unwrap();
    let swap = PermutationAction::on_points(2, [("s".to_string(), Perm::new(vec![1, 0]).unwrap())]).unwrap();
    let r = neutral_structure_check(&fib, &swap).unwrap();
    assert!(r.passes(1e-12), "{r:?}");
    assert_eq!(r.multi_indices_checked, 8);
    assert!(r.braiding_instances > 0);
    let id = Perm::identity(3);
    assert_eq!(permute_multi_index(&id, &[2, 0, 1]), vec![2, 0, 1]);
    assert_eq!(permute_multi_index(&cyclic(3), &[5, 6, 7]), vec![7, 5, 6]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn psi_is_unitary(n in 1usize..4, labels in proptest::collection::vec(0usize..3, 7)) {
        let ising = builtin_model("ising").unwrap();
        let word = psi(&slot_cables("A", n), &slot_cables("B", n), &[Strand::slot("M")]).unwrap();
        let mut slots = Assignment::new();
        for k in 0..n {
            slots.insert(slot_name("A", k), labels[k]);
            slots.insert(slot_name("B", k), labels[3 + k]);
        }
        slots.insert("M".into(), labels[6]);
        prop_assert!(evaluate(&ising, &word, &slots).unwrap().unitarity_residual() < 1e-9);
    }

    #[test]
    fn mixed_pentagon_fibonacci_n4(flat in proptest::collection::vec(0usize..2, 13)) {
        let fib = builtin_model("fibonacci").unwrap();
        let labels = PentagonAssignment::from_flat(4, &flat).unwrap();
        prop_assert!(module_pentagon_check(&fib, &labels).unwrap() < 1e-9);
    }

    #[test]
    fn permuting_multi_indices_is_an_action(
        imgs in Just((0..4).collect::<Vec<usize>>()).prop_shuffle(),
        imgs2 in Just((0..4).collect::<Vec<usize>>()).prop_shuffle(),
        idx in proptest::collection::vec(0usize..3, 4),
    ) {
        let g = Perm::new(imgs).unwrap();
        let h = Perm::new(imgs2).unwrap();
        let gh = g.compose(&h);
        prop_assert_eq!(permute_multi_index(&g, &permute_multi_index(&h, &idx)), permute_multi_index(&gh, &idx));
    }
}
