//! Command-line interface. Exit codes: 0 holds, 1 refuted or violated,
//! 2 usage or parse error.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use ciflie_core::oracle::theorem::ReportVerdict;
use ciflie_core::oracle::{TheoremId, ValueGrid};
use ciflie_core::value::parse_rational;
use ciflie_core::verify::{self, Structure};
use ciflie_core::{check_axioms, ops, CifSet, CutThreshold, Error as CoreError};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::format::{self, FormatError};
use crate::report::{aggregate, replay, run_theorem, theorem_space};

#[derive(Debug, Parser)]
#[command(name = "ciflie", version, about = "CIF sets over finite Lie superalgebras")]
pub struct Cli {
    /// Maximum universe size for exhaustive loops (default: $CIF_UNIVERSE_CAP or 100000).
    #[arg(long, global = true)]
    pub universe_cap: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the superalgebra axioms of an algebra document.
    Validate { file: PathBuf },
    /// Run a verifier on a CIF set document.
    Check {
        set: PathBuf,
        #[arg(long, value_enum)]
        predicate: Predicate,
    },
    /// Apply an operation and write the result document.
    Op {
        #[arg(value_enum)]
        op: OpName,
        inputs: Vec<PathBuf>,
        #[arg(long, default_value = "-")]
        out: PathBuf,
        #[arg(long)]
        alpha: Option<u32>,
        /// Cut threshold magnitude.
        #[arg(long)]
        t: Option<String>,
        /// Cut threshold phase.
        #[arg(long)]
        s: Option<String>,
        /// Linear map document for image/preimage.
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// Run theorem batches and print an aggregate report.
    Theorems {
        /// Comma-separated theorem ids (default: all).
        #[arg(long, value_delimiter = ',')]
        ids: Vec<String>,
        /// Algebra document or built-in name.
        #[arg(long, default_value = "heisenberg_5_1")]
        algebra: String,
        /// Number of seeds per theorem.
        #[arg(long, default_value_t = 50)]
        seeds: u64,
        /// First seed.
        #[arg(long, default_value_t = 0)]
        seed_start: u64,
        /// Value grid, e.g. "0,1/2,1" (default: tenths).
        #[arg(long)]
        grid: Option<String>,
        /// Map document replacing the default map of mapped theorems.
        #[arg(long)]
        map: Option<PathBuf>,
        /// Include wall-clock time in the report.
        #[arg(long)]
        timing: bool,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
    /// Re-run the counterexamples of a saved report.
    Replay { report: PathBuf },
    /// Write a built-in document.
    Fixture {
        /// heisenberg_5_1, paper_example, trivial or abelian_P_D0_D1.
        name: String,
        /// Output directory (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Algebra for `trivial`.
        #[arg(long)]
        algebra: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Predicate {
    Subspace,
    Subsuper,
    Ideal,
    AntiSubsuper,
    AntiIdeal,
    Graded,
    Homogeneous,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OpName {
    Sum,
    Intersect,
    Union,
    Scalar,
    Image,
    Preimage,
    CompC,
    CompL,
    CutUpper,
    CutLower,
}

/// Holds (0) or refuted (1); errors map to 2 except the semantic ones.
fn status(ok: bool) -> u8 {
    if ok {
        0
    } else {
        1
    }
}

fn exit_code_for(err: &anyhow::Error) -> u8 {
    let core = err.downcast_ref::<CoreError>().or_else(|| match err.downcast_ref::<FormatError>() {
        Some(FormatError::Core(e)) => Some(e),
        _ => None,
    });
    match core {
        Some(CoreError::NotHomogeneousPair { .. } | CoreError::AxiomViolation { .. }) => 1,
        _ => 2,
    }
}

pub fn main() -> ExitCode {
    ExitCode::from(run_from(std::env::args_os()))
}

/// Parse arguments and run; returns the process exit code.
pub fn run_from<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    if let Some(cap) = cli.universe_cap {
        crate::set_universe_cap(cap);
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            exit_code_for(&e)
        }
    }
}

pub fn run(command: Command) -> anyhow::Result<u8> {
    match command {
        Command::Validate { file } => validate(&file),
        Command::Check { set, predicate } => check(&set, predicate),
        Command::Op { op, inputs, out, alpha, t, s, map } => {
            apply_op(op, &inputs, &out, alpha, t.as_deref(), s.as_deref(), map.as_deref())
        }
        Command::Theorems { ids, algebra, seeds, seed_start, grid, map, timing, out } => {
            theorems(&ids, &algebra, seed_start..seed_start + seeds, grid.as_deref(), map.as_deref(), timing, &out)
        }
        Command::Replay { report } => {
            let results = replay(&format::read_json(&report)?)?;
            let list: Vec<Value> = results
                .iter()
                .map(|r| json!({"theorem": r.theorem.name(), "variant": r.variant, "outcome": r.outcome.name()}))
                .collect();
            let refuted = results.iter().any(|r| r.still_refutes());
            format::write_json(Path::new("-"), &json!({"replayed": list, "refuted": refuted}))?;
            Ok(status(!refuted))
        }
        Command::Fixture { name, out, algebra } => {
            let doc = format::fixture(&name, algebra.as_deref())?;
            match out {
                Some(dir) => {
                    fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
                    format::write_json(&dir.join(format!("{name}.json")), &doc)?;
                }
                None => format::write_json(Path::new("-"), &doc)?,
            }
            Ok(0)
        }
    }
}

fn validate(file: &Path) -> anyhow::Result<u8> {
    let doc = format::algebra_doc(&format::read_json(file)?)?;
    let report = check_axioms(doc.p, doc.d0, doc.d1, &doc.sc)?;
    let axioms: Vec<Value> = report
        .checks
        .iter()
        .map(|(axiom, w)| json!({"axiom": axiom.name(), "holds": w.is_none(), "witness": w}))
        .collect();
    let warnings: Vec<String> = report.warnings.iter().map(|w| w.to_string()).collect();
    format::write_json(Path::new("-"), &json!({"valid": report.is_valid(), "axioms": axioms, "warnings": warnings}))?;
    if let Some((axiom, Some(w))) = report.checks.iter().find(|(_, w)| w.is_some()) {
        eprintln!("violated: {axiom} at basis ({}, {}, {})", w[0], w[1], w[2]);
    }
    Ok(status(report.is_valid()))
}

fn check(set: &Path, predicate: Predicate) -> anyhow::Result<u8> {
    let a = format::load_set(set)?;
    let v = match predicate {
        Predicate::Subspace => verify::is_cif_subspace(&a),
        Predicate::Subsuper => verify::check_structure(&a, Structure::Subsuperalgebra),
        Predicate::Ideal => verify::check_structure(&a, Structure::Ideal),
        Predicate::AntiSubsuper => verify::check_structure(&a, Structure::AntiSubsuperalgebra),
        Predicate::AntiIdeal => verify::check_structure(&a, Structure::AntiIdeal),
        Predicate::Graded => verify::is_z2_graded(&a),
        Predicate::Homogeneous => verify::homogeneity(&a),
    };
    format::write_json(Path::new("-"), &format::verdict_to_json(&v))?;
    Ok(status(v.holds))
}

fn one(op: OpName, inputs: &[PathBuf], n: usize) -> anyhow::Result<()> {
    if inputs.len() != n {
        bail!("{op:?} takes {n} input document(s), got {}", inputs.len());
    }
    Ok(())
}

fn threshold(t: Option<&str>, s: Option<&str>) -> anyhow::Result<CutThreshold> {
    let (Some(t), Some(s)) = (t, s) else { bail!("cuts need both --t and --s") };
    Ok(CutThreshold::new(parse_rational(t)?, parse_rational(s)?)?)
}

fn apply_op(
    op: OpName,
    inputs: &[PathBuf],
    out: &Path,
    alpha: Option<u32>,
    t: Option<&str>,
    s: Option<&str>,
    map: Option<&Path>,
) -> anyhow::Result<u8> {
    let set = |i: usize| -> anyhow::Result<CifSet> { Ok(format::load_set(&inputs[i])?) };
    let pair = || -> anyhow::Result<(CifSet, CifSet)> {
        one(op, inputs, 2)?;
        Ok((set(0)?, set(1)?))
    };
    let single = || -> anyhow::Result<CifSet> {
        one(op, inputs, 1)?;
        set(0)
    };
    let load_map = || -> anyhow::Result<_> {
        let Some(m) = map else { bail!("{op:?} needs --map") };
        Ok(format::load_map(m)?)
    };
    let doc = match op {
        OpName::Sum => {
            let (a, b) = pair()?;
            format::set_to_json(&ops::sum(&a, &b)?)
        }
        OpName::Intersect => {
            let (a, b) = pair()?;
            format::set_to_json(&ops::intersect(&a, &b)?)
        }
        OpName::Union => {
            let (a, b) = pair()?;
            format::set_to_json(&ops::union(&a, &b)?)
        }
        OpName::Scalar => {
            let Some(alpha) = alpha else { bail!("scalar needs --alpha") };
            format::set_to_json(&ops::scalar_transform(alpha, &single()?))
        }
        OpName::Image => {
            let a = single()?;
            format::set_to_json(&ops::image(&load_map()?, &a)?)
        }
        OpName::Preimage => {
            let b = single()?;
            format::set_to_json(&ops::preimage(&load_map()?, &b)?)
        }
        OpName::CompC => format::set_to_json(&ops::complement_c(&single()?)),
        OpName::CompL => format::set_to_json(&ops::complement_l(&single()?)),
        OpName::CutUpper => format::crisp_to_json(&verify::upper_cut(&single()?, threshold(t, s)?)),
        OpName::CutLower => format::crisp_to_json(&verify::lower_cut(&single()?, threshold(t, s)?)),
    };
    format::write_json(out, &doc)?;
    Ok(0)
}

fn theorems(
    ids: &[String],
    algebra: &str,
    seeds: std::ops::Range<u64>,
    grid: Option<&str>,
    map: Option<&Path>,
    timing: bool,
    out: &Path,
) -> anyhow::Result<u8> {
    let ids: Vec<TheoremId> = if ids.is_empty() {
        TheoremId::ALL.to_vec()
    } else {
        ids.iter().map(|s| s.trim().parse()).collect::<Result<_, _>>()?
    };
    let grid = match grid {
        Some(g) => ValueGrid::parse(g)?,
        None => ValueGrid::default(),
    };
    let map = map.map(format::load_map).transpose()?;
    let space = match &map {
        Some(m) => m.source().clone(),
        None => theorem_space(algebra)?,
    };
    let reports = ids
        .iter()
        .map(|&id| run_theorem(id, &space, &grid, seeds.clone(), map.as_ref()))
        .collect::<Result<Vec<_>, _>>()?;
    for r in &reports {
        eprintln!("{}: {} ({} instances)", r.batch.id, r.verdict().name(), r.batch.instances);
    }
    format::write_json(out, &aggregate(&reports, timing))?;
    Ok(status(reports.iter().all(|r| r.verdict() != ReportVerdict::Refuted)))
}
