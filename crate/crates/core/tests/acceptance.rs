//! End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
//! if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::Instant;

use num_complex::Complex64;
use permod::alpha::{
    check_gamma_naturality, check_modular_invariance, gamma_min_singular_value, induction_step_check,
    relabeled_z_matrix, z_matrix,
};
use permod::category::{verify_hexagon, verify_pentagon, AnyonModel, ModelData, ModelSource};
use permod::category::{load_model, LoadOptions};
use permod::group_action::{cover_components, lifted_complex, orbits, Perm, PermutationAction};
use permod::permutation_module::{module_pentagon_check, PentagonAssignment};
use permod::sweep;
use permod::Result;

type Criterion = fn() -> Result<(bool, String)>;

const TOL: f64 = 1e-9;
const SEED: u64 = 20240501;

const BUILTINS: [&str; 6] = ["fibonacci", "ising", "vec_z2", "vec_z3", "vec_z4", "vec_z5"];

fn model(name: &str) -> Result<AnyonModel> {
    load_model(&ModelSource::builtin(name)?, LoadOptions::default())
}

fn data(name: &str) -> Result<ModelData> {
    Ok(model(name)?.to_data())
}

fn all_perms(n: usize) -> Result<Vec<Perm>> {
    PermutationAction::symmetric(n)?.enumerate_group()
}

/// Adds 1e-3 to one F-symbol, preferring one with no unit label.
fn perturbed(name: &str) -> Result<AnyonModel> {
    let mut d = data(name)?;
    let unit = d.unit;
    let idx = d
        .f_symbols
        .iter()
        .position(|(k, _)| k.iter().all(|&l| l != unit))
        .unwrap_or(d.f_symbols.len() - 1);
    d.f_symbols[idx].1 += Complex64::new(1e-3, 0.0);
    AnyonModel::from_data(d)
}

fn criterion_1() -> Result<(bool, String)> {
    let mut worst: f64 = 0.0;
    let mut weakest_failure = f64::INFINITY;
    for name in BUILTINS {
        let m = model(name)?;
        worst = worst.max(verify_pentagon(&m).max_residual).max(verify_hexagon(&m).max_residual);
        let p = perturbed(name)?;
        let broken = verify_pentagon(&p).max_residual.max(verify_hexagon(&p).max_residual);
        weakest_failure = weakest_failure.min(broken);
    }
    Ok((
        worst < TOL && weakest_failure >= 1e-4,
        format!("max residual {worst:.2e} over {} models, smallest perturbed residual {weakest_failure:.2e}", BUILTINS.len()),
    ))
}

fn criterion_2() -> Result<(bool, String)> {
    let mut pairs = 0usize;
    let mut mismatches = 0usize;
    for n in [3, 4] {
        let perms = all_perms(n)?;
        for g1 in &perms {
            for g2 in &perms {
                pairs += 1;
                let ours = cover_components(g1, g2)?;
                let oracle = lifted_complex(g1, g2)?.components;
                let mut ok = ours.len() == oracle.len();
                for c in &ours {
                    let Some(o) = oracle.iter().find(|o| o.sheets.contains(&c.orbit.base_point())) else {
                        ok = false;
                        continue;
                    };
                    let counts = [c.boundaries_1.len(), c.boundaries_2.len(), c.boundaries_3.len()];
                    ok &= o.sheets.len() == c.sheets && o.branch_vertices == counts && o.genus()? == c.genus;
                }
                if !ok {
                    mismatches += 1;
                }
            }
        }
    }
    Ok((mismatches == 0, format!("{pairs} pairs from S3 and S4, {mismatches} mismatches")))
}

fn criterion_3() -> Result<(bool, String)> {
    let mut checked = 0usize;
    let mut bad = 0usize;
    let id = Perm::identity(4);
    for g in all_perms(4)? {
        let comps = cover_components(&g.inverse(), &id)?;
        for o in orbits(4, std::slice::from_ref(&g)) {
            checked += 1;
            let c = comps.iter().find(|c| c.orbit.contains(o.base_point())).expect("orbit covered");
            if c.genus != 0 {
                bad += 1;
            }
        }
    }
    Ok((bad == 0, format!("{checked} orbits over all 24 elements of S4, {bad} of positive genus")))
}

fn pentagon_sweep(m: &AnyonModel, n: usize, assignments: &[Vec<usize>]) -> Result<sweep::SweepReport> {
    sweep::run(assignments, |a| module_pentagon_check(m, &PentagonAssignment::from_flat(n, a)?))
}

fn criterion_4() -> Result<(bool, String)> {
    let mut worst: f64 = 0.0;
    let mut instances = 0usize;
    for name in ["fibonacci", "ising"] {
        let m = model(name)?;
        let labels = m.num_labels();
        for n in 1..=3 {
            let r = pentagon_sweep(&m, n, &sweep::exhaustive(3 * n + 1, labels)?)?;
            worst = worst.max(r.max_residual);
            instances += r.instances;
        }
        let r = pentagon_sweep(&m, 4, &sweep::sample(13, labels, 200, SEED))?;
        worst = worst.max(r.max_residual);
        instances += r.instances;
    }
    Ok((worst < TOL, format!("max residual {worst:.2e} over {instances} assignments")))
}

fn criterion_5() -> Result<(bool, String)> {
    let mut worst: f64 = 0.0;
    let mut min_sv = f64::INFINITY;
    let mut instances = 0usize;
    for name in ["fibonacci", "ising", "vec_z5"] {
        let m = model(name)?;
        let labels = m.num_labels();
        for n in 1..=3 {
            let all = if n < 3 {
                sweep::exhaustive(2 * n + 1, labels)?
            } else {
                sweep::sample(2 * n + 1, labels, 200, SEED)
            };
            let r = sweep::run(&all, |a| check_gamma_naturality(&m, &a[..n], &a[n..2 * n], a[2 * n]))?;
            worst = worst.max(r.max_residual);
            instances += r.instances;
            for a in &all {
                min_sv = min_sv.min(gamma_min_singular_value(&m, &a[..n], a[2 * n])?);
            }
        }
    }
    Ok((
        worst < TOL && min_sv > 1e-6,
        format!("max residual {worst:.2e} over {instances} assignments, smallest singular value of Γ {min_sv:.3e}"),
    ))
}

fn criterion_6() -> Result<(bool, String)> {
    let (mut l, mut r) = (0.0f64, 0.0f64);
    let mut instances = 0usize;
    for name in ["fibonacci", "vec_z3"] {
        let m = model(name)?;
        for a in sweep::exhaustive(7, m.num_labels())? {
            let rep = induction_step_check(&m, &a[..3], &a[3..6], a[6])?;
            l = l.max(rep.l_residual);
            r = r.max(rep.r_residual);
            instances += 1;
        }
    }
    Ok((l < TOL && r < TOL, format!("L residual {l:.2e}, R residual {r:.2e} over {instances} assignments at n = 3")))
}

fn criterion_7() -> Result<(bool, String)> {
    let mut worst: f64 = 0.0;
    let mut structural = true;
    let mut count = 0usize;
    let mut control = f64::INFINITY;
    for name in BUILTINS {
        let m = model(name)?;
        let labels = m.num_labels();
        for x in 1..=3 {
            for g in all_perms(x)? {
                let z = z_matrix(&g, labels)?;
                let rep = check_modular_invariance(&m, &z)?;
                structural &= rep.is_permutation && rep.vacuum == 1;
                worst = worst.max(rep.max_residual());
                count += 1;
            }
        }
        // swap the unit with another label in every factor
        let swap = Perm::from_cycles(labels, &[&[0, 1]])?;
        let wrong = relabeled_z_matrix(&Perm::from_cycles(2, &[&[0, 1]])?, labels, &swap)?;
        control = control.min(check_modular_invariance(&m, &wrong)?.max_residual());
    }
    Ok((
        structural && worst < TOL && control >= 1e-3,
        format!("{count} (model, g) pairs, max commutator {worst:.2e}, permutation/vacuum ok: {structural}, negative control {control:.2e}"),
    ))
}

fn criterion_8() -> Result<(bool, String)> {
    let runs: [&[&str]; 3] = [
        &["pentagon", "--model", "ising", "--group", "cyclic:3", "--g", "r", "--samples", "60"],
        &["gamma", "--model", "fibonacci", "--group", "symmetric:3", "--g", "r*s", "--samples", "60"],
        &["induction", "--model", "vec_z3", "--samples", "40"],
    ];
    let mut identical = 0usize;
    for args in runs {
        let mut full = vec!["permod"];
        full.extend_from_slice(args);
        full.extend_from_slice(&["--format", "structured", "--seed", "7"]);
        let a = permod::cli::run(full.clone()).output;
        let b = permod::cli::run(full.clone()).output;
        let c = Command::new(env!("CARGO_BIN_EXE_permod")).args(&full[1..]).output()?;
        if a == b && a.as_bytes() == c.stdout.as_slice() {
            identical += 1;
        }
    }
    Ok((identical == runs.len(), format!("{identical}/{} commands byte-identical across 3 runs", runs.len())))
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 8] = [
        ("category axioms", criterion_1),
        ("cover combinatorics", criterion_2),
        ("genus zero", criterion_3),
        ("mixed pentagon", criterion_4),
        ("gamma naturality", criterion_5),
        ("induction step", criterion_6),
        ("permutation modular invariant", criterion_7),
        ("determinism", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (pass, summary) = match check() {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        if !pass {
            failed += 1;
        }
        println!(
            "[{}] criterion {} ({name}): {summary} [{:.1}s]",
            if pass { "PASS" } else { "FAIL" },
            i + 1,
            start.elapsed().as_secs_f64()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criterion/criteria failed");
        ExitCode::FAILURE
    }
}
