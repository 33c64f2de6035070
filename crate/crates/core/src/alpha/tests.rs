use proptest::prelude::*;

use super::induction::{check_with, induction_words_with, TRAVEL, WIND};
use super::zmatrix::{decode, encode};
use super::*;
use crate::category::builtin_model;
use crate::sweep;

fn cyclic(n: usize) -> Perm {
    Perm::new((0..n).map(|x| (x + 1) % n).collect()).unwrap()
}

fn exhaustive_naturality(name: &str, n: usize) -> f64 {
    let model = builtin_model(name).unwrap();
    let all = sweep::exhaustive(2 * n + 1, model.num_labels()).unwrap();
    sweep::run(&all, |a| check_gamma_naturality(&model, &a[..n], &a[n..2 * n], a[2 * n])).unwrap().max_residual
}

#[test]
fn constraint_at_n1_is_plain_braiding() {
    let c = gamma_constraint(Kind::Plus, &[1], &[1]).unwrap();
    assert_eq!(c.word.crossings(), &[Crossing::pos(0)]);
    let fib = builtin_model("fibonacci").unwrap();
    let m = c.evaluate(&fib, 1).unwrap();
    assert!(m.unitarity_residual() < 1e-12);
}

#[test]
fn plus_and_minus_constraints_cancel() {
    let u = [1, 1];
    let v = [1, 0];
    let plus = gamma_constraint(Kind::Plus, &u, &v).unwrap();
    // γ⁻ with U and V exchanged runs V.. U.. M -> U.. V.. M
    let minus = gamma_constraint(Kind::Minus, &v, &u).unwrap();
    let uc = slot_cables("U", 2);
    let vc = slot_cables("V", 2);
    let m = vec![Strand::slot("M")];
    let back = constraint_word(Kind::Minus, &vc, &uc, &m).unwrap();
    let round = plus.word.then(&back).unwrap();
    let fib = builtin_model("fibonacci").unwrap();
    let e = evaluate_slots(&fib, &round, &u, &v, 1).unwrap();
    assert!(e.identity_residual().unwrap() < 1e-12);
    assert_eq!(minus.kind, Kind::Minus);
}

#[test]
fn constraint_fibonacci_n2_is_unitary() {
    let fib = builtin_model("fibonacci").unwrap();
    let c = gamma_constraint(Kind::Plus, &[1, 1], &[1, 1]).unwrap();
    assert!(c.evaluate(&fib, 1).unwrap().unitarity_residual() < 1e-9);
}

#[test]
fn gamma_shapes() {
    let g1 = gamma_transform(&[1]).unwrap();
    assert_eq!(g1.word.crossings().len(), 2);
    let g3 = gamma_transform(&[1, 1, 1]).unwrap();
    assert_eq!(g3.word.crossings().len(), 4);
    // U0 ends just before M
    let t = g3.word.target();
    assert_eq!(t[2], Strand::slot("U0"));
    assert_eq!(t[3], Strand::slot("M"));
}

#[test]
fn gamma_pointed_is_double_braiding() {
    let model = builtin_model("vec_z4").unwrap();
    for a in 0..4 {
        for b in 0..4 {
            let g = gamma_transform(&[a]).unwrap().evaluate(&model, b).unwrap();
            let c = (a + b) % 4;
            let expected = model.r(a, b, c) * model.r(b, a, c);
            assert!((g.block(c).unwrap()[(0, 0)] - expected).norm() < 1e-12);
        }
    }
}

#[test]
fn gamma_is_invertible() {
    let fib = builtin_model("fibonacci").unwrap();
    for u in sweep::exhaustive(2, 2).unwrap() {
        for m in 0..2 {
            assert!(gamma_min_singular_value(&fib, &u, m).unwrap() > 1e-6);
        }
    }
}

#[test]
fn naturality_exhaustive_small() {
    for name in ["fibonacci", "ising", "vec_z3"] {
        for n in 1..=2 {
            let r = exhaustive_naturality(name, n);
            assert!(r < 1e-9, "{name} n={n}: {r}");
        }
    }
}

#[test]
fn naturality_on_orbit_reads_action_order() {
    let ising = builtin_model("ising").unwrap();
    let g = cyclic(3);
    let orbit = crate::group_action::orbits(3, std::slice::from_ref(&g)).remove(0);
    let r = check_gamma_naturality_on_orbit(&ising, &g, &orbit, &[1, 2, 0], &[1, 1, 2], 1).unwrap();
    assert!(r < 1e-9);
}

#[test]
fn naturality_breaks_with_untwisted_u() {
    // replacing ᵍU by U on the right-hand side must fail for a non-trivial model
    let fib = builtin_model("fibonacci").unwrap();
    let (u, v, m) = (slot_cables("U", 2), slot_cables("V", 2), vec![Strand::slot("M")]);
    let (lhs, _) = naturality_words(&u, &v, &m).unwrap();
    let vm: Vec<Strand> = v.iter().flatten().cloned().chain(m.iter().cloned()).collect();
    let wrong = gamma_word(&u, &vm)
        .unwrap()
        .then(&constraint_word(Kind::Plus, &twist_cables(&u), &v, &m).unwrap())
        .unwrap();
    let a = evaluate_slots(&fib, &lhs, &[1, 1], &[1, 1], 1).unwrap();
    let b = evaluate_slots(&fib, &wrong, &[1, 1], &[1, 1], 1).unwrap();
    assert!(a.max_difference(&b).unwrap() > 1e-3);
}

#[test]
fn induction_words_agree_on_permutation() {
    let w = induction_words(3).unwrap();
    assert_eq!(w.f.permutation(), (0..7).collect::<Vec<_>>());
    assert_eq!(w.l.target(), w.l_merged.target());
    assert_eq!(w.r.target(), w.r_merged.target());
    assert_eq!(w.l.source(), w.l_merged.source());
}

#[test]
fn induction_fibonacci_all_tau() {
    let fib = builtin_model("fibonacci").unwrap();
    let r = induction_step_check(&fib, &[1; 3], &[1; 3], 1).unwrap();
    assert!(r.max_residual() < 1e-9, "{r:?}");
    assert!(r.f_min_singular_value > 1e-6);
}

#[test]
fn induction_pointed_is_exact() {
    let model = builtin_model("vec_z3").unwrap();
    let r = induction_step_check(&model, &[1, 2, 1], &[2, 2, 1], 1).unwrap();
    assert!(r.max_residual() < 1e-12, "{r:?}");
}

#[test]
fn other_f_candidates_fail() {
    let fib = builtin_model("fibonacci").unwrap();
    for travel in [Sign::Positive, Sign::Negative] {
        for wind in [Sign::Positive, Sign::Negative] {
            if (travel, wind) == (TRAVEL, WIND) {
                continue;
            }
            let words = induction_words_with(3, travel, wind).unwrap();
            let r = check_with(&fib, &words, &[1; 3], &[1; 3], 1).unwrap();
            assert!(r.l_residual > 1e-3, "{travel:?} {wind:?}");
        }
    }
}

#[test]
fn induction_rejects_small_orbits() {
    let fib = builtin_model("fibonacci").unwrap();
    assert!(induction_step_check(&fib, &[1, 1], &[1, 1], 1).is_err());
}

#[test]
fn z_identity_is_identity() {
    let z = z_matrix(&Perm::identity(2), 3).unwrap();
    assert!(z.is_permutation_matrix());
    assert!((0..9).all(|r| z.columns[r] == vec![r]));
    let ising = builtin_model("ising").unwrap();
    let rep = check_modular_invariance(&ising, &z).unwrap();
    assert_eq!(rep.max_residual(), 0.0);
}

#[test]
fn z_fibonacci_swap() {
    let z = z_matrix(&Perm::new(vec![1, 0]).unwrap(), 2).unwrap();
    for i in 0..2 {
        for j in 0..2 {
            assert_eq!(z.entry_at(&[i, j], &[j, i]), 1);
        }
    }
    assert_eq!(z.vacuum(), 1);
    let fib = builtin_model("fibonacci").unwrap();
    assert!(check_modular_invariance(&fib, &z).unwrap().passes(1e-9));
}

#[test]
fn z_ising_three_cycle_has_order_three() {
    let z = z_matrix(&cyclic(3), 3).unwrap();
    assert_eq!(z.dim(), 27);
    let z2 = z.product(&z).unwrap();
    let z3 = z2.product(&z).unwrap();
    assert_ne!(z2, z);
    assert!((0..27).all(|r| z3.columns[r] == vec![r]));
    let ising = builtin_model("ising").unwrap();
    assert!(check_modular_invariance(&ising, &z).unwrap().passes(1e-9));
}

#[test]
fn relabeled_z_fails() {
    let fib = builtin_model("fibonacci").unwrap();
    let swap01 = Perm::new(vec![1, 0]).unwrap();
    let z = relabeled_z_matrix(&Perm::new(vec![1, 0]).unwrap(), 2, &swap01).unwrap();
    let rep = check_modular_invariance(&fib, &z).unwrap();
    assert!(rep.is_permutation);
    assert!(rep.max_residual() >= 1e-3);
    assert!(!rep.passes(1e-9));
}

#[test]
fn z_checks_label_count() {
    let fib = builtin_model("fibonacci").unwrap();
    let z = z_matrix(&Perm::identity(2), 3).unwrap();
    assert!(check_modular_invariance(&fib, &z).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn encoding_round_trips(idx in proptest::collection::vec(0usize..4, 0..5)) {
        prop_assert_eq!(decode(encode(&idx, 4), idx.len(), 4), idx);
    }

    #[test]
    fn z_composes_contravariantly(
        g in Just((0..3).collect::<Vec<usize>>()).prop_shuffle(),
        h in Just((0..3).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let (g, h) = (Perm::new(g).unwrap(), Perm::new(h).unwrap());
        let zg = z_matrix(&g, 2).unwrap();
        let zh = z_matrix(&h, 2).unwrap();
        prop_assert_eq!(zg.product(&zh).unwrap(), z_matrix(&h.compose(&g), 2).unwrap());
    }

    #[test]
    fn naturality_ising_n3(flat in proptest::collection::vec(0usize..3, 7)) {
        let ising = builtin_model("ising").unwrap();
        prop_assert!(check_gamma_naturality(&ising, &flat[..3], &flat[3..6], flat[6]).unwrap() < 1e-9);
    }
}
