//! The `permod` command line: one subcommand per check, text or structured
//! (JSON) reports, exit status 0 iff every residual is within tolerance.

mod report;

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::alpha::{
    check_gamma_naturality, check_modular_invariance, gamma_min_singular_value, induction_step_check, z_matrix,
};
use crate::category::{
    load_model, verify_hexagon, verify_pentagon, AnyonModel, LoadOptions, ModelDocument, ModelSource,
};
use crate::error::{Error, Result};
use crate::group_action::{cover_components, genus_oracle, Perm, PermutationAction};
use crate::permutation_module::{
    associator, module_pentagon_check_multi, module_structure, neutral_structure_check, ActionWord,
};
use crate::sweep::{self, SweepReport};

pub use report::{Format, Report};

#[derive(Debug, Parser)]
#[command(name = "permod", version, about = "Checks for permutation module categories and their modular invariants")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Largest residual that still counts as a pass.
    #[arg(long, default_value_t = 1e-9, value_parser = positive_f64)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Seed for randomized sweeps.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Structured,
}

#[derive(Debug, Clone, Args)]
pub struct ModelArg {
    /// Built-in model (`fibonacci`, `ising`, `vec_z<N>[:<p>]`) or a model file.
    #[arg(long)]
    pub model: String,
}

#[derive(Debug, Clone, Args)]
pub struct GroupArg {
    /// Group file, or `cyclic:<n>` / `symmetric:<n>`.
    #[arg(long)]
    pub group: String,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    /// Enumerate every simple assignment instead of sampling.
    #[arg(long)]
    pub exhaustive: bool,
    /// Number of random assignments when not exhaustive.
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Pentagon and hexagon equations of a model.
    VerifyCategory {
        #[command(flatten)]
        model: ModelArg,
        #[command(flatten)]
        common: Common,
    },
    /// Components of the cover of the three-holed sphere with monodromies g1, g2.
    Covers {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        g1: String,
        #[arg(long)]
        g2: String,
        #[command(flatten)]
        common: Common,
    },
    /// Module action word for every <g>-orbit.
    Action {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, default_value = "1")]
        g: String,
        #[command(flatten)]
        common: Common,
    },
    /// Crossings of the shuffle associator on an orbit of size n.
    Associator {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Mixed pentagon of the permutation module.
    Pentagon {
        #[command(flatten)]
        model: ModelArg,
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, default_value = "1")]
        g: String,
        #[command(flatten)]
        sweep: SweepArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Naturality and invertibility of Γ: α⁺(U) ⇒ α⁻(ᵍU).
    Gamma {
        #[command(flatten)]
        model: ModelArg,
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, default_value = "1")]
        g: String,
        #[command(flatten)]
        sweep: SweepArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Induction step relating orbit sizes n and n-1.
    Induction {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[command(flatten)]
        sweep: SweepArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Permutation modular invariant Z(g) and its S/T commutators.
    Zmatrix {
        #[command(flatten)]
        model: ModelArg,
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, default_value = "1")]
        g: String,
        /// Include the matrix in the report.
        #[arg(long)]
        dump: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Print a model as a model file.
    ExportModel {
        #[command(flatten)]
        model: ModelArg,
    },
}

fn positive_f64(s: &str) -> std::result::Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        Ok(_) => Err("tolerance must be positive".into()),
        Err(e) => Err(e.to_string()),
    }
}

/// Outcome of one invocation: text for stdout and the exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub status: i32,
}

/// Parses arguments and runs the command. Usage errors exit with 2, failed
/// checks with 1.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => return Outcome { output: e.render().to_string(), status: e.exit_code() },
    };
    match execute(&cli.command) {
        Ok(Executed::Report(report, format)) => {
            let status = if report.pass { 0 } else { 1 };
            Outcome { output: report.render(format), status }
        }
        Ok(Executed::Raw(text)) => Outcome { output: text, status: 0 },
        Err(e) => Outcome { output: format!("error: {e}\n"), status: 2 },
    }
}

enum Executed {
    Report(Report, Format),
    Raw(String),
}

fn load(model: &ModelArg) -> Result<AnyonModel> {
    load_model(&ModelSource::resolve(&model.model)?, LoadOptions::default())
}

fn resolve_g(action: &PermutationAction, word: &str) -> Result<Perm> {
    action.resolve(word)
}

fn execute(command: &Command) -> Result<Executed> {
    let (report, common) = match command {
        Command::VerifyCategory { model, common } => (cmd_verify_category(model, common)?, common),
        Command::Covers { group, g1, g2, common } => (cmd_covers(group, g1, g2, common)?, common),
        Command::Action { group, g, common } => (cmd_action(group, g, common)?, common),
        Command::Associator { n, common } => (cmd_associator(*n, common)?, common),
        Command::Pentagon { model, group, g, sweep, common } => (cmd_pentagon(model, group, g, sweep, common)?, common),
        Command::Gamma { model, group, g, sweep, common } => (cmd_gamma(model, group, g, sweep, common)?, common),
        Command::Induction { model, n, sweep, common } => (cmd_induction(model, *n, sweep, common)?, common),
        Command::Zmatrix { model, group, g, dump, common } => (cmd_zmatrix(model, group, g, *dump, common)?, common),
        Command::ExportModel { model } => {
            let m = load_model(&ModelSource::resolve(&model.model)?, LoadOptions { verify: false, ..Default::default() })?;
            return Ok(Executed::Raw(ModelDocument::from_model(&m).to_json() + "\n"));
        }
    };
    let format = match common.format {
        OutputFormat::Text => Format::Text,
        OutputFormat::Structured => Format::Structured,
    };
    Ok(Executed::Report(report, format))
}

fn cmd_verify_category(model: &ModelArg, common: &Common) -> Result<Report> {
    // structural validation only; the axioms are what this command reports
    let m = load_model(&ModelSource::resolve(&model.model)?, LoadOptions { verify: false, ..Default::default() })?;
    let mut report = Report::new("verify-category", common.tol);
    report.input("model", json!(model.model));
    report.input("labels", json!(m.labels()));
    for axiom in [verify_pentagon(&m), verify_hexagon(&m)] {
        if let Some(w) = &axiom.worst_instance {
            report.note(format!("{} worst instance: {w}", axiom.identity));
        }
        report.residual(&axiom.identity, axiom.max_residual, axiom.instances as u64);
    }
    Ok(report.finish())
}

fn cmd_covers(group: &GroupArg, g1: &str, g2: &str, common: &Common) -> Result<Report> {
    let action = PermutationAction::resolve_reference(&group.group)?;
    let (p1, p2) = (resolve_g(&action, g1)?, resolve_g(&action, g2)?);
    let components = cover_components(&p1, &p2)?;
    let mut report = Report::new("covers", common.tol);
    report.input("group", json!(group.group));
    report.input("g1", json!(g1));
    report.input("g2", json!(g2));
    let mut mismatches = 0u64;
    let mut rows = Vec::new();
    let labels = action.x_labels();
    for c in &components {
        let oracle = genus_oracle(&p1, &p2, &c.orbit)?;
        if oracle != c.genus {
            mismatches += 1;
        }
        let orbit: Vec<&str> = c.orbit.elements().iter().map(|&x| labels[x].as_str()).collect();
        report.note(format!(
            "orbit {{{}}}: sheets {}, boundaries {}+{}+{}, genus {}",
            orbit.join(","),
            c.sheets,
            c.boundaries_1.len(),
            c.boundaries_2.len(),
            c.boundaries_3.len(),
            c.genus
        ));
        rows.push(json!({
            "orbit": orbit,
            "sheets": c.sheets,
            "boundaries": [c.boundaries_1.len(), c.boundaries_2.len(), c.boundaries_3.len()],
            "genus": c.genus,
        }));
    }
    report.residual("oracle_mismatches", mismatches as f64, components.len() as u64);
    report.detail("components", json!(rows));
    Ok(report.finish())
}

fn cmd_action(group: &GroupArg, g: &str, common: &Common) -> Result<Report> {
    let action = PermutationAction::resolve_reference(&group.group)?;
    let p = resolve_g(&action, g)?;
    let words = module_structure(&action, &p)?;
    let mut report = Report::new("action", common.tol);
    report.input("group", json!(group.group));
    report.input("g", json!(g));
    let rendered: Vec<String> = words.iter().map(|w| w.display_with(action.x_labels())).collect();
    for r in &rendered {
        report.note(r.clone());
    }
    // an action word must list its orbit once, starting at the base point
    let malformed = words.iter().filter(|w| !well_formed(w, &p)).count();
    report.residual("malformed_words", malformed as f64, words.len() as u64);
    report.detail("words", json!(rendered));
    Ok(report.finish())
}

fn well_formed(w: &ActionWord, g: &Perm) -> bool {
    let g_inv = g.inverse();
    w.factor_order.first() == Some(&w.orbit.base_point())
        && w.factor_order.len() == w.orbit.size()
        && w.factor_order.windows(2).all(|p| g_inv.apply(p[0]) == p[1])
}

fn cmd_associator(n: usize, common: &Common) -> Result<Report> {
    let psi = associator(n)?;
    let mut report = Report::new("associator", common.tol);
    report.input("n", json!(n));
    let mut expected: Vec<usize> = (0..n).map(|k| 2 * k).chain((0..n).map(|k| 2 * k + 1)).collect();
    expected.push(2 * n);
    let perm_ok = psi.word.expand().permutation() == expected;
    let count_ok = psi.word.crossings().len() == n * (n - 1) / 2;
    report.residual("permutation_mismatch", if perm_ok { 0.0 } else { 1.0 }, 1);
    report.residual("crossing_count_mismatch", if count_ok { 0.0 } else { 1.0 }, 1);
    for (l, k) in &psi.moves {
        let b = if *l == 0 { "B^0".to_string() } else { format!("B^-{l}") };
        report.note(format!("{b} over A^-{k}"));
    }
    report.detail("moves", json!(psi.moves));
    Ok(report.finish())
}

fn assignments(slots: usize, labels: usize, sweep: &SweepArgs, seed: u64) -> Result<Vec<Vec<usize>>> {
    if sweep.exhaustive {
        sweep::exhaustive(slots, labels)
    } else {
        Ok(sweep::sample(slots, labels, sweep.samples, seed))
    }
}

fn sweep_inputs(report: &mut Report, sweep: &SweepArgs, seed: u64) {
    report.input("exhaustive", json!(sweep.exhaustive));
    if !sweep.exhaustive {
        report.input("samples", json!(sweep.samples));
        report.input("seed", json!(seed));
    }
}

fn worst_note(report: &mut Report, name: &str, r: &SweepReport) {
    if let Some(w) = &r.worst {
        report.note(format!("{name} worst assignment: {w:?}"));
    }
}

fn cmd_pentagon(model: &ModelArg, group: &GroupArg, g: &str, sw: &SweepArgs, common: &Common) -> Result<Report> {
    let m = load(model)?;
    let action = PermutationAction::resolve_reference(&group.group)?;
    let p = resolve_g(&action, g)?;
    let orbits = module_structure(&action, &p)?.len();
    let x = action.size();
    let all = assignments(3 * x + orbits, m.num_labels(), sw, common.seed)?;
    let result = sweep::run(&all, |a| {
        module_pentagon_check_multi(&m, &action, &p, &a[..x], &a[x..2 * x], &a[2 * x..3 * x], &a[3 * x..])
    })?;
    let neutral = neutral_structure_check(&m, &action)?;

    let mut report = Report::new("pentagon", common.tol);
    report.input("model", json!(model.model));
    report.input("group", json!(group.group));
    report.input("g", json!(g));
    sweep_inputs(&mut report, sw, common.seed);
    report.residual("mixed_pentagon", result.max_residual, result.instances as u64);
    report.residual("neutral_braiding", neutral.braiding_residual, neutral.braiding_instances as u64);
    report.residual(
        "neutral_permutation_mismatches",
        neutral.permutation_mismatches as f64,
        neutral.multi_indices_checked as u64,
    );
    worst_note(&mut report, "mixed_pentagon", &result);
    Ok(report.finish())
}

fn cmd_gamma(model: &ModelArg, group: &GroupArg, g: &str, sw: &SweepArgs, common: &Common) -> Result<Report> {
    let m = load(model)?;
    let action = PermutationAction::resolve_reference(&group.group)?;
    let p = resolve_g(&action, g)?;
    let words = module_structure(&action, &p)?;
    let x = action.size();
    let all = assignments(2 * x + words.len(), m.num_labels(), sw, common.seed)?;
    let naturality = sweep::run(&all, |a| {
        let mut worst: f64 = 0.0;
        for (w, &mo) in words.iter().zip(&a[2 * x..]) {
            worst = worst.max(check_gamma_naturality(&m, &w.read(&a[..x]), &w.read(&a[x..2 * x]), mo)?);
        }
        Ok(worst)
    })?;
    let mut min_sv = f64::INFINITY;
    for a in &all {
        for (w, &mo) in words.iter().zip(&a[2 * x..]) {
            min_sv = min_sv.min(gamma_min_singular_value(&m, &w.read(&a[..x]), mo)?);
        }
    }

    let mut report = Report::new("gamma", common.tol);
    report.input("model", json!(model.model));
    report.input("group", json!(group.group));
    report.input("g", json!(g));
    sweep_inputs(&mut report, sw, common.seed);
    report.residual("naturality", naturality.max_residual, naturality.instances as u64);
    report.require("gamma_invertible", min_sv > GAMMA_SINGULAR_FLOOR);
    report.detail("gamma_min_singular_value", json!(min_sv));
    report.note(format!("smallest singular value of Γ: {min_sv:.6e}"));
    worst_note(&mut report, "naturality", &naturality);
    Ok(report.finish())
}

/// Smallest singular value of `Γ` accepted as invertible.
pub const GAMMA_SINGULAR_FLOOR: f64 = 1e-6;

fn cmd_induction(model: &ModelArg, n: usize, sw: &SweepArgs, common: &Common) -> Result<Report> {
    if n < 3 {
        return Err(Error::InvalidArgument("the induction step needs n ≥ 3".into()));
    }
    let m = load(model)?;
    let all = assignments(2 * n + 1, m.num_labels(), sw, common.seed)?;
    let l = sweep::run(&all, |a| Ok(induction_step_check(&m, &a[..n], &a[n..2 * n], a[2 * n])?.l_residual))?;
    let r = sweep::run(&all, |a| Ok(induction_step_check(&m, &a[..n], &a[n..2 * n], a[2 * n])?.r_residual))?;
    let mut report = Report::new("induction", common.tol);
    report.input("model", json!(model.model));
    report.input("n", json!(n));
    sweep_inputs(&mut report, sw, common.seed);
    report.residual("left", l.max_residual, l.instances as u64);
    report.residual("right", r.max_residual, r.instances as u64);
    worst_note(&mut report, "left", &l);
    worst_note(&mut report, "right", &r);
    Ok(report.finish())
}

fn cmd_zmatrix(model: &ModelArg, group: &GroupArg, g: &str, dump: bool, common: &Common) -> Result<Report> {
    let m = load(model)?;
    let action = PermutationAction::resolve_reference(&group.group)?;
    let p = resolve_g(&action, g)?;
    let z = z_matrix(&p, m.num_labels())?;
    let check = check_modular_invariance(&m, &z)?;
    let mut report = Report::new("zmatrix", common.tol);
    report.input("model", json!(model.model));
    report.input("group", json!(group.group));
    report.input("g", json!(g));
    report.residual("s_commutator", check.s_residual, 1);
    report.residual("t_commutator", check.t_residual, 1);
    report.require("permutation_matrix", check.is_permutation);
    report.require("vacuum_coupling", check.vacuum == 1);
    report.detail("dim", json!(z.dim()));
    if dump {
        report.detail("columns", json!(z.columns.iter().map(|c| c[0]).collect::<Vec<_>>()));
        let rows: Vec<String> = z.render().lines().map(|l| format!("    {l}")).collect();
        report.note(format!("Z =\n{}", rows.join("\n")));
    }
    Ok(report.finish())
}
