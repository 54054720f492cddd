//! Command-line orchestration: parse types and weights, dispatch to the
//! library, and emit text, JSON, or CSV reports.

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::exact::rational::rat;
use crate::gk::{cuspidal_possible, fixture_kappas, gk_dimension, kappas, min_gk};
use crate::hecke::{CoxeterSystem, KlTable};
use crate::rootsys::{RootSystem, Rs, TypeLabel};
use crate::subsys::{
    borel_de_siebenthal, catalog_maximal_classes, cartan_closed_witness, realize_subsystem,
    rootsubsystem_of_length, FieldSpec, RealizeOutcome,
};
use crate::verma::{
    growth_experiment, jantzen_sum_check, shapovalov_factors, JantzenCheck, RewriteSystem,
};
use crate::weights::{parse_weight, ToralWeight};

/// Exit status conventions: 0 success, 1 usage error, 2 mathematical check
/// failure.
pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CHECK_FAILED: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Parser, Debug)]
#[command(
    name = "qgkdim",
    about = "Exact computations for quantum-group highest-weight modules: integral subsystems, Kazhdan-Lusztig a-functions, GK dimensions, Shapovalov forms, and dimension growth at roots of unity",
    disable_help_subcommand = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: OutputFormat,
    /// Cap on enumerated Weyl-group sizes.
    #[arg(long, global = true, default_value_t = 1200)]
    pub cap: usize,
    /// Height bound for the rewriting engine.
    #[arg(long, global = true, default_value_t = 24)]
    pub height: usize,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 314159)]
    pub seed: u64,
    /// Allow the full F4 a-function (slow: hours).
    #[arg(long, global = true, default_value_t = false)]
    pub f4_afunction: bool,
    /// Allow G2 Gram computations (slow completion).
    #[arg(long, global = true, default_value_t = false)]
    pub g2_gram: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Integral subsystem, dominance, regularity and the vanishing set of a weight.
    Subsystem(TypeWeightArgs),
    /// Gelfand-Kirillov dimension of the simple highest-weight module.
    Gkdim(TypeWeightArgs),
    /// Lusztig's a-function of a Coxeter type: one line per element.
    Afunction {
        #[arg(long = "type")]
        type_label: String,
    },
    /// Minimal GK-dimension constants per type, checked against the built-in table.
    Tables {
        #[arg(long, value_delimiter = ',')]
        types: Vec<String>,
        /// Which table: 2 = (kappa0, kappa1, kappa2) rows, 1 = maximal subsystem classes.
        #[arg(long, default_value_t = 2)]
        table: u8,
        /// Derive maximal classes by exhaustive enumeration (rank <= 3) instead of the catalog.
        #[arg(long, default_value_t = false)]
        enumerate: bool,
    },
    /// Dimension growth of the simple module at roots of unity.
    Growth {
        #[command(flatten)]
        tw: TypeWeightArgs,
        #[arg(long, value_delimiter = ',')]
        ells: Vec<u64>,
    },
    /// Jantzen sum formula check (deterministic weight or randomized suite).
    Jantzen {
        #[arg(long = "type")]
        type_label: String,
        #[arg(long)]
        weight: Option<String>,
        /// Weight-space coordinates, e.g. "1,1".
        #[arg(long)]
        nu: Option<String>,
        /// Number of random cases when no explicit weight is given.
        #[arg(long, default_value_t = 50)]
        cases: usize,
        #[arg(long, default_value_t = 6)]
        max_height: usize,
    },
    /// Shapovalov determinant factors for a weight space.
    Shapovalov {
        #[arg(long = "type")]
        type_label: String,
        #[arg(long)]
        nu: String,
        #[arg(long)]
        weight: Option<String>,
    },
    /// Realize a subsystem as the integral system of a weight over a field.
    Realize {
        #[arg(long = "type")]
        type_label: String,
        /// Target: "long-roots", "short-roots", or "bds:<index>".
        #[arg(long)]
        target: String,
        /// Field constraint, e.g. "D=4,g=1" or "D=*,g=2".
        #[arg(long)]
        field: String,
    },
}

#[derive(Args, Debug)]
pub struct TypeWeightArgs {
    #[arg(long = "type")]
    pub type_label: String,
    #[arg(long)]
    pub weight: String,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("mathematical check failed: {0}")]
    CheckFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::CheckFailed(_) => EXIT_CHECK_FAILED,
        }
    }
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn build_type(s: &str) -> Result<Rs, CliError> {
    RootSystem::build_str(s).map_err(usage)
}

fn build_weight(rs: &Rs, lit: &str) -> Result<ToralWeight, CliError> {
    parse_weight(rs, lit).map_err(usage)
}

fn parse_nu(rs: &Rs, s: &str) -> Result<Vec<i64>, CliError> {
    let coords: Result<Vec<i64>, _> = s.split(',').map(|p| p.trim().parse::<i64>()).collect();
    let coords = coords.map_err(|e| usage(format!("bad weight-space coordinates {s:?}: {e}")))?;
    if coords.len() != rs.rank() {
        return Err(usage(format!(
            "expected {} coordinates, got {}",
            rs.rank(),
            coords.len()
        )));
    }
    Ok(coords)
}

/// Reports
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SubsystemReport {
    pub ambient_type: String,
    pub weight: String,
    pub integral_type: String,
    pub positive_roots: Vec<String>,
    pub group_order: usize,
    pub dominant: bool,
    pub antidominant: bool,
    pub regular: bool,
    pub verma_irreducible: bool,
    pub vanishing_pairs: Vec<(u64, String)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AFunctionRow {
    pub word: String,
    pub length: usize,
    pub a: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Table2Row {
    pub r#type: String,
    pub kappa0: u64,
    pub kappa1: u64,
    pub kappa2: u64,
    pub min01: u64,
    pub min_over_rational_torsion: u64,
    pub cuspidal: bool,
    pub matches_fixture: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Table1Row {
    pub r#type: String,
    pub maximal_classes: Vec<MaximalClass>,
    pub kappa0: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MaximalClass {
    pub label: String,
    pub positive_count: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RealizeReport {
    pub ambient_type: String,
    pub target: String,
    pub field: String,
    pub feasible: bool,
    pub witness: Option<String>,
    pub verified: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShapovalovReport {
    pub r#type: String,
    pub nu: Vec<i64>,
    pub factors: Vec<ShapFactorRow>,
    pub evaluated: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShapFactorRow {
    pub m: i64,
    pub alpha: String,
    pub bracket_arg: i64,
    pub exponent: u64,
}

/// Run a parsed command, returning the rendered output.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Subsystem(tw) => cmd_subsystem(cli, tw),
        Command::Gkdim(tw) => cmd_gkdim(cli, tw),
        Command::Afunction { type_label } => cmd_afunction(cli, type_label),
        Command::Tables {
            types,
            table,
            enumerate,
        } => cmd_tables(cli, types, *table, *enumerate),
        Command::Growth { tw, ells } => cmd_growth(cli, tw, ells),
        Command::Jantzen {
            type_label,
            weight,
            nu,
            cases,
            max_height,
        } => cmd_jantzen(cli, type_label, weight.as_deref(), nu.as_deref(), *cases, *max_height),
        Command::Shapovalov {
            type_label,
            nu,
            weight,
        } => cmd_shapovalov(cli, type_label, nu, weight.as_deref()),
        Command::Realize {
            type_label,
            target,
            field,
        } => cmd_realize(cli, type_label, target, field),
    }
}

fn render<T: Serialize>(cli: &Cli, value: &T, text: String) -> Result<String, CliError> {
    match cli.format {
        OutputFormat::Json => {
            serde_json::to_string_pretty(value).map_err(|e| usage(format!("serialization: {e}")))
        }
        _ => Ok(text),
    }
}

pub fn subsystem_report(rs: &Rs, w: &ToralWeight, cap: usize) -> Result<SubsystemReport, CliError> {
    let sub = w.integral_subsystem();
    let data = w.integral_coxeter(cap).map_err(usage)?;
    let regular = data.is_regular(w);
    Ok(SubsystemReport {
        ambient_type: rs.label().to_string(),
        weight: w.to_literal(),
        integral_type: sub.label().to_string(),
        positive_roots: sub.positive_strings(),
        group_order: data.coxeter.order(),
        dominant: w.is_dominant(),
        antidominant: w.is_antidominant(),
        regular,
        verma_irreducible: w.verma_irreducible(),
        vanishing_pairs: w
            .vanishing_pairs()
            .into_iter()
            .map(|(m, alpha)| (m, rs.root_string(alpha)))
            .collect(),
    })
}

fn cmd_subsystem(cli: &Cli, tw: &TypeWeightArgs) -> Result<String, CliError> {
    let rs = build_type(&tw.type_label)?;
    let w = build_weight(&rs, &tw.weight)?;
    let report = subsystem_report(&rs, &w, cli.cap)?;
    let mut text = String::new();
    text.push_str(&format!(
        "ambient {}  weight {}\n",
        report.ambient_type, report.weight
    ));
    text.push_str(&format!(
        "integral subsystem: {} with positive roots [{}]\n",
        report.integral_type,
        report.positive_roots.join(", ")
    ));
    text.push_str(&format!(
        "|W_Lambda| = {}  dominant: {}  antidominant: {}  regular: {}\n",
        report.group_order, report.dominant, report.antidominant, report.regular
    ));
    text.push_str(&format!(
        "Verma irreducible: {}  vanishing pairs: {:?}\n",
        report.verma_irreducible, report.vanishing_pairs
    ));
    render(cli, &report, text)
}

fn cmd_gkdim(cli: &Cli, tw: &TypeWeightArgs) -> Result<String, CliError> {
    let rs = build_type(&tw.type_label)?;
    let w = build_weight(&rs, &tw.weight)?;
    let report = gk_dimension(&w, cli.cap).map_err(usage)?;
    let text = format!(
        "type {}  weight {}\nintegral type {}  witness length {}  a = {}\nGK dimension d = {} (|Phi+| = {})\n",
        report.ambient_type,
        report.weight,
        report.integral_type,
        report.witness_length,
        report.a_value,
        report.gk_dimension,
        report.num_positive
    );
    render(cli, &report, text)
}

fn cmd_afunction(cli: &Cli, type_label: &str) -> Result<String, CliError> {
    let rs = build_type(type_label)?;
    let order_bound = crate::rootsys::weyl_order(rs.label().components()[0]);
    if !cli.f4_afunction && order_bound > 400 {
        return Err(usage(format!(
            "a-function for {type_label} has |W| = {order_bound}; pass --f4-afunction to accept a multi-hour run"
        )));
    }
    let cs = CoxeterSystem::from_type(type_label, cli.cap).map_err(usage)?;
    let kl = KlTable::build(&cs);
    let a = kl.a_function();
    let rows: Vec<AFunctionRow> = (0..cs.order())
        .map(|e| AFunctionRow {
            word: cs
                .group()
                .word(e)
                .iter()
                .map(|&i| format!("s{}", i + 1))
                .collect::<Vec<_>>()
                .join(""),
            length: cs.group().length(e),
            a: a[e],
        })
        .collect();
    let mut text = String::from("word\tlength\ta\n");
    for r in &rows {
        let w = if r.word.is_empty() { "e" } else { &r.word };
        text.push_str(&format!("{w}\t{}\t{}\n", r.length, r.a));
    }
    render(cli, &rows, text)
}

fn cmd_tables(cli: &Cli, types: &[String], table: u8, enumerate: bool) -> Result<String, CliError> {
    let list: Vec<String> = if types.is_empty() {
        ["A2", "B2", "B3", "C3", "D4", "F4", "G2", "E6", "E7", "E8"]
            .iter()
            .map(|s| s.to_string())
            .collect()
    } else {
        types.to_vec()
    };
    if table == 1 {
        let mut rows = vec![];
        for t in &list {
            let rs = build_type(t)?;
            if !rs.label().is_irreducible() {
                return Err(usage(format!("table rows require irreducible types, got {t}")));
            }
            let classes: Vec<MaximalClass> = if enumerate {
                crate::subsys::maximal_subsystems_enumerated(&rs, cli.cap)
                    .map_err(usage)?
                    .into_iter()
                    .map(|c| MaximalClass {
                        label: c.label().to_string(),
                        positive_count: c.num_positive(),
                    })
                    .collect()
            } else {
                catalog_maximal_classes(rs.label().components()[0])
                    .into_iter()
                    .map(|c| MaximalClass {
                        label: c.label,
                        positive_count: c.positive_count,
                    })
                    .collect()
            };
            let k = kappas(&rs).map_err(usage)?;
            rows.push(Table1Row {
                r#type: t.clone(),
                maximal_classes: classes,
                kappa0: k.kappa0,
            });
        }
        let mut text = String::new();
        for r in &rows {
            text.push_str(&format!("{}: kappa0 = {}\n", r.r#type, r.kappa0));
            for c in &r.maximal_classes {
                text.push_str(&format!("  {}  ({} positive roots)\n", c.label, c.positive_count));
            }
        }
        return render(cli, &rows, text);
    }
    let mut rows = vec![];
    let mut all_match = true;
    for t in &list {
        let rs = build_type(t)?;
        if !rs.label().is_irreducible() {
            return Err(usage(format!("table rows require irreducible types, got {t}")));
        }
        let k = kappas(&rs).map_err(usage)?;
        let comp = rs.label().components()[0];
        let fixture = fixture_kappas(comp);
        let matches = (k.kappa0, k.kappa1, k.kappa2) == fixture;
        all_match &= matches;
        let gamma = crate::subsys::gamma_invariant(&rs).map_err(usage)?;
        rows.push(Table2Row {
            r#type: t.clone(),
            kappa0: k.kappa0,
            kappa1: k.kappa1,
            kappa2: k.kappa2,
            min01: k.min01(),
            min_over_rational_torsion: min_gk(&rs, &FieldSpec::new(Some(2), gamma as u32))
                .map_err(usage)?,
            cuspidal: cuspidal_possible(&TypeLabel(vec![comp])),
            matches_fixture: matches,
        });
    }
    let mut text = String::from("type\tkappa0\tkappa1\tkappa2\tmin\tmin(Q-torsion)\tcuspidal\n");
    for r in &rows {
        let flag0 = if r.kappa0 == r.min01 { "*" } else { "" };
        let flag1 = if r.kappa1 == r.min01 { "*" } else { "" };
        text.push_str(&format!(
            "{}\t{}{}\t{}{}\t{}\t{}\t{}\t{}\n",
            r.r#type, r.kappa0, flag0, r.kappa1, flag1, r.kappa2, r.min01,
            r.min_over_rational_torsion, r.cuspidal
        ));
    }
    let out = render(cli, &rows, text)?;
    if !all_match {
        return Err(CliError::CheckFailed(format!(
            "computed minimal GK constants disagree with the built-in table:\n{out}"
        )));
    }
    Ok(out)
}

fn cmd_growth(cli: &Cli, tw: &TypeWeightArgs, ells: &[u64]) -> Result<String, CliError> {
    let rs = build_type(&tw.type_label)?;
    if rs.label().components().iter().any(|c| c.letter == 'G') && !cli.g2_gram {
        return Err(usage("G2 Gram computations are gated; pass --g2-gram"));
    }
    let w = build_weight(&rs, &tw.weight)?;
    if ells.len() < 2 {
        return Err(usage("need at least two orders in --ells"));
    }
    let system = RewriteSystem::build(&rs, cli.height).map_err(usage)?;
    let report = growth_experiment(&system, &w, ells, cli.cap).map_err(usage)?;
    // CSV: ell, total_dim, exponent_estimate, J(ell)
    let mut csv = String::from("ell,total_dim,exponent_estimate,J\n");
    for (s, (ell, j)) in report.samples.iter().zip(report.agreement.iter()) {
        debug_assert_eq!(s.order, *ell);
        csv.push_str(&format!(
            "{},{},{},{}\n",
            s.order, s.total, report.exponent_value, j
        ));
    }
    match cli.format {
        OutputFormat::Json => render(cli, &report, String::new()),
        _ => {
            let mut text = csv;
            if matches!(cli.format, OutputFormat::Text) {
                text.push_str(&format!(
                    "exponent {} (exact: {})  gk dimension {}\n",
                    report.exponent, report.exact, report.gk.gk_dimension
                ));
            }
            Ok(text)
        }
    }
}

/// Deterministically seeded random toral weights for the Jantzen suite.
pub fn random_weights(rs: &Rs, count: usize, seed: u64) -> Vec<ToralWeight> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = vec![];
    while out.len() < count {
        let n = rs.rank();
        let mut torsion = vec![];
        let mut exponent = vec![];
        for _ in 0..n {
            let den = [1u64, 2, 3, 4][rng.gen_range(0..4)];
            let num = rng.gen_range(0..den);
            torsion.push(rat(num as i64, den as i64));
            let c_num = rng.gen_range(-4..=4i64);
            let c_den = [1i64, 2][rng.gen_range(0..2)];
            exponent.push(rat(c_num, c_den));
        }
        out.push(ToralWeight::new(rs.clone(), torsion, exponent));
    }
    out
}

fn cmd_jantzen(
    cli: &Cli,
    type_label: &str,
    weight: Option<&str>,
    nu: Option<&str>,
    cases: usize,
    max_height: usize,
) -> Result<String, CliError> {
    let rs = build_type(type_label)?;
    let system = RewriteSystem::build(&rs, cli.height.max(max_height)).map_err(usage)?;
    let mut checks: Vec<JantzenCheck> = vec![];
    match (weight, nu) {
        (Some(wl), Some(ns)) => {
            let w = build_weight(&rs, wl)?;
            let nu = parse_nu(&rs, ns)?;
            checks.push(jantzen_sum_check(&system, &w, &nu));
        }
        (Some(wl), None) => {
            let w = build_weight(&rs, wl)?;
            for h in 1..=max_height as i64 {
                for nu in crate::verma::rewrite::weights_of_height(&rs, h) {
                    checks.push(jantzen_sum_check(&system, &w, &nu));
                }
            }
        }
        _ => {
            let weights = random_weights(&rs, cases, cli.seed);
            let mut rng = StdRng::seed_from_u64(cli.seed ^ 0x9e3779b97f4a7c15);
            for w in weights {
                let h = rng.gen_range(1..=max_height as i64);
                let nus = crate::verma::rewrite::weights_of_height(&rs, h);
                let nu = nus[rng.gen_range(0..nus.len())].clone();
                checks.push(jantzen_sum_check(&system, &w, &nu));
            }
        }
    }
    let failures: Vec<&JantzenCheck> = checks.iter().filter(|c| !c.equal).collect();
    let mut text = String::from("weight\tnu\tlhs\trhs\tequal\n");
    for c in &checks {
        text.push_str(&format!(
            "{}\t{:?}\t{}\t{}\t{}\n",
            c.weight, c.nu, c.lhs, c.rhs, c.equal
        ));
    }
    let out = render(cli, &checks, text)?;
    if !failures.is_empty() {
        return Err(CliError::CheckFailed(format!(
            "{} of {} Jantzen checks failed\n{out}",
            failures.len(),
            checks.len()
        )));
    }
    Ok(out)
}

fn cmd_shapovalov(
    cli: &Cli,
    type_label: &str,
    nu: &str,
    weight: Option<&str>,
) -> Result<String, CliError> {
    let rs = build_type(type_label)?;
    let nu = parse_nu(&rs, nu)?;
    let factors = shapovalov_factors(&rs, &nu);
    let evaluated = match weight {
        Some(wl) => {
            let w = build_weight(&rs, wl)?;
            let system = RewriteSystem::build(&rs, cli.height).map_err(usage)?;
            let ctx = crate::verma::symbolic_context(&system, crate::verma::SymbolicWeight::Toral(&w));
            Some(crate::verma::shapovalov_det_formula(&ctx, &nu).to_string())
        }
        None => None,
    };
    let report = ShapovalovReport {
        r#type: type_label.to_string(),
        nu: nu.clone(),
        factors: factors
            .iter()
            .map(|f| ShapFactorRow {
                m: f.m,
                alpha: rs.root_string(f.alpha),
                bracket_arg: f.bracket_arg,
                exponent: f.multiplicity,
            })
            .collect(),
        evaluated,
    };
    let mut text = format!("det S_nu factors for {type_label}, nu = {nu:?}\n");
    for f in &report.factors {
        text.push_str(&format!(
            "([{}]_(q_{{{}}}) * [K_{{{}}}; {}])^{}\n",
            f.m, f.alpha, f.alpha, f.bracket_arg, f.exponent
        ));
    }
    if let Some(v) = &report.evaluated {
        text.push_str(&format!("value at weight: {v}\n"));
    }
    render(cli, &report, text)
}

fn cmd_realize(cli: &Cli, type_label: &str, target: &str, field: &str) -> Result<String, CliError> {
    let rs = build_type(type_label)?;
    let spec = FieldSpec::parse(field)
        .ok_or_else(|| usage(format!("bad field spec {field:?}; expected e.g. D=4,g=1")))?;
    let sub = match target {
        "long-roots" => rootsubsystem_of_length(&rs, true),
        "short-roots" => rootsubsystem_of_length(&rs, false),
        other => {
            let Some(k) = other.strip_prefix("bds:").and_then(|s| s.parse::<usize>().ok()) else {
                return Err(usage(format!(
                    "bad target {other:?}; expected long-roots, short-roots or bds:<index>"
                )));
            };
            let classes = borel_de_siebenthal(&rs, cli.cap).map_err(usage)?;
            classes
                .get(k)
                .cloned()
                .ok_or_else(|| usage(format!("bds index {k} out of range ({} classes)", classes.len())))?
        }
    };
    let outcome = realize_subsystem(&sub, &spec);
    let (feasible, witness, verified) = match &outcome {
        RealizeOutcome::Witness(w) => {
            let ok = w.integral_subsystem().positive_members() == sub.positive_members();
            (true, Some(w.to_literal()), Some(ok))
        }
        RealizeOutcome::Infeasible => (false, None, None),
    };
    // Also exercise the explicit full-rank witness when applicable.
    let _ = cartan_closed_witness(&sub);
    let report = RealizeReport {
        ambient_type: type_label.to_string(),
        target: format!("{} [{}]", target, sub.label()),
        field: spec.to_string(),
        feasible,
        witness,
        verified,
    };
    let text = if report.feasible {
        format!(
            "target {} over {}: witness {} (verified: {})\n",
            report.target,
            report.field,
            report.witness.as_deref().unwrap_or("-"),
            report.verified.unwrap_or(false)
        )
    } else {
        format!("target {} over {}: infeasible\n", report.target, report.field)
    };
    if let Some(false) = report.verified {
        return Err(CliError::CheckFailed(
            "witness verification failed".to_string(),
        ));
    }
    render(cli, &report, text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli_with(cmd: Command, format: OutputFormat) -> Cli {
        Cli {
            command: cmd,
            format,
            cap: 1200,
            height: 12,
            seed: 7,
            f4_afunction: false,
            g2_gram: false,
        }
    }

    #[test]
    fn subsystem_command_on_example_weight() {
        let cli = cli_with(
            Command::Subsystem(TypeWeightArgs {
                type_label: "B2".into(),
                weight: "t=0,c=0;t=1/4,c=-1".into(),
            }),
            OutputFormat::Text,
        );
        let out = run(&cli).unwrap();
        assert!(out.contains("A1^L x A1^L"), "{out}");
        assert!(out.contains("dominant: true"), "{out}");
        assert!(out.contains("regular: true"), "{out}");
    }

    #[test]
    fn json_reports_round_trip() {
        let rs = RootSystem::build_str("B2").unwrap();
        let w = parse_weight(&rs, "t=0,c=0;t=1/4,c=-1").unwrap();
        let rep = subsystem_report(&rs, &w, 100).unwrap();
        let json = serde_json::to_string(&rep).unwrap();
        let back: SubsystemReport = serde_json::from_str(&json).unwrap();
        assert_eq!(rep, back);

        let gk = gk_dimension(&w, 100).unwrap();
        let json = serde_json::to_string(&gk).unwrap();
        let back: crate::gk::GkReport = serde_json::from_str(&json).unwrap();
        assert_eq!(gk, back);

        let row = Table2Row {
            r#type: "B2".into(),
            kappa0: 2,
            kappa1: 2,
            kappa2: 3,
            min01: 2,
            min_over_rational_torsion: 2,
            cuspidal: true,
            matches_fixture: true,
        };
        let json = serde_json::to_string(&row).unwrap();
        let back: Table2Row = serde_json::from_str(&json).unwrap();
        assert_eq!(row, back);
    }

    #[test]
    fn tables_text_has_flags() {
        let cli = cli_with(
            Command::Tables {
                types: vec!["B3".into(), "E8".into()],
                table: 2,
                enumerate: false,
            },
            OutputFormat::Text,
        );
        let out = run(&cli).unwrap();
        assert!(out.contains("B3\t3*\t4\t5\t3\t4"), "{out}");
        assert!(out.contains("E8\t56\t29*\t29\t29\t29"), "{out}");
    }

    #[test]
    fn realize_infeasible_over_rational_torsion() {
        let cli = cli_with(
            Command::Realize {
                type_label: "B2".into(),
                target: "long-roots".into(),
                field: "D=2,g=2".into(),
            },
            OutputFormat::Text,
        );
        let out = run(&cli).unwrap();
        assert!(out.contains("infeasible"), "{out}");
        // Feasible case with verified witness.
        let cli = cli_with(
            Command::Realize {
                type_label: "B2".into(),
                target: "long-roots".into(),
                field: "D=4,g=1".into(),
            },
            OutputFormat::Text,
        );
        let out = run(&cli).unwrap();
        assert!(out.contains("verified: true"), "{out}");
    }

    #[test]
    fn afunction_gate_rejects_f4_by_default() {
        let cli = cli_with(
            Command::Afunction {
                type_label: "F4".into(),
            },
            OutputFormat::Text,
        );
        let err = run(&cli).unwrap_err();
        assert_eq!(err.exit_code(), EXIT_USAGE);
    }

    #[test]
    fn parse_errors_are_usage_errors() {
        let cli = cli_with(
            Command::Subsystem(TypeWeightArgs {
                type_label: "B2".into(),
                weight: "t=oops".into(),
            }),
            OutputFormat::Text,
        );
        let err = run(&cli).unwrap_err();
        assert_eq!(err.exit_code(), EXIT_USAGE);
    }

    #[test]
    fn growth_csv_shape() {
        let cli = cli_with(
            Command::Growth {
                tw: TypeWeightArgs {
                    type_label: "A1".into(),
                    weight: "t=1/4".into(),
                },
                ells: vec![5, 7],
            },
            OutputFormat::Csv,
        );
        let out = run(&cli).unwrap();
        let mut lines = out.lines();
        assert_eq!(lines.next(), Some("ell,total_dim,exponent_estimate,J"));
        assert!(lines.next().unwrap().starts_with("5,5,"));
        assert!(lines.next().unwrap().starts_with("7,7,"));
    }

    #[test]
    fn random_weights_are_deterministic() {
        let rs = RootSystem::build_str("A2").unwrap();
        let a = random_weights(&rs, 5, 42);
        let b = random_weights(&rs, 5, 42);
        assert_eq!(a, b);
        let c = random_weights(&rs, 5, 43);
        assert_ne!(a, c);
    }
}
