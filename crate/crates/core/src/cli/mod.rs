//! The `paralg` command line.
//!
//! Exit codes: 0 all checks passed, 1 violations found, 2 usage, structural
//! or I/O error, 3 resource limit (dimension cap, cutoff too small).

mod report;

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::{check_axioms, AlgebraFile, CheckOptions};
use crate::catalog::{self, SU11ExtensionParams};
use crate::fock::{build_green_rep, FockError, GreenRep, Manifest, ModeLayout};
use crate::ops::{Family, OpId, SYSTEM_FAMILIES};
use crate::scalar::{Scalar, DEFAULT_TOL};
use crate::verify::{self, sets, EvalOptions, RelationExpr, VerifyError, EXTRACTION_TOL};

pub use report::{Outcome, Report};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "paralg", version, about = "Z2,2-graded Lie algebras and parastatistics")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Relative tolerance (default 1e-9; 1e-8 for extract and classify).
    #[arg(long, global = true, allow_hyphen_values = true, value_parser = positive_f64)]
    pub tol: Option<f64>,
    /// Worker threads for relation evaluation.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the graded-algebra axioms of an algebra file or catalog entry.
    Check(CheckArgs),
    /// List or export built-in algebras.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
    /// Build a Green-ansatz representation.
    Rep {
        #[command(subcommand)]
        command: RepCommand,
    },
    /// Evaluate relation sets on a representation.
    Verify(VerifyArgs),
    /// Recover structure constants from a representation.
    Extract(ExtractArgs),
    /// Closure and dimension of the symmetry and statistics subalgebras.
    Classify(LayoutArgs),
    /// Spectra of the supercharge Hamiltonians.
    Spectrum(LayoutArgs),
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Algebra JSON file.
    #[arg(required_unless_present = "catalog")]
    pub file: Option<PathBuf>,
    /// Check a catalog entry instead of a file.
    #[arg(long, conflicts_with = "file")]
    pub catalog: Option<String>,
    #[command(flatten)]
    pub lambda: LambdaArgs,
}

#[derive(Debug, Args, Default)]
pub struct LambdaArgs {
    /// λ₁ for the su(1,1) entries, as `re,im` (default `0,-1`).
    #[arg(long, allow_hyphen_values = true)]
    pub lambda1: Option<String>,
    /// λ₂ (default `0`).
    #[arg(long, allow_hyphen_values = true)]
    pub lambda2: Option<String>,
    /// λ₃ (default `2`).
    #[arg(long, allow_hyphen_values = true)]
    pub lambda3: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    List,
    Export {
        id: String,
        /// Output path; stdout if absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        lambda: LambdaArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum RepCommand {
    Build {
        #[command(flatten)]
        layout: LayoutArgs,
        /// Write the generator manifest here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args, Clone)]
pub struct LayoutArgs {
    #[arg(long, default_value_t = 1)]
    pub parabosons: usize,
    #[arg(long, default_value_t = 1)]
    pub parafermions: usize,
    #[arg(long, default_value_t = 2)]
    pub order: usize,
    #[arg(long, default_value_t = 6)]
    pub cutoff: usize,
    /// Load the representation from a manifest instead of building it.
    #[arg(long)]
    pub rep: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub layout: LayoutArgs,
    /// Built-in relation sets (comma separated or repeated); `closure` is
    /// `eq14` plus `closure15_19`. Default `eq12` unless --relations is given.
    #[arg(long, value_delimiter = ',')]
    pub set: Vec<String>,
    /// Relation-set JSON file.
    #[arg(long)]
    pub relations: Option<PathBuf>,
    /// Skip the Hermitian-conjugate relations.
    #[arg(long)]
    pub no_conjugates: bool,
}

#[derive(Debug, Args)]
pub struct ExtractArgs {
    #[command(flatten)]
    pub layout: LayoutArgs,
    /// Operators to use as the basis, e.g. `Ma_1_1,Ma_1_2`.
    #[arg(long, value_delimiter = ',', conflicts_with = "families")]
    pub basis: Vec<String>,
    /// Operator families to use as the basis, e.g. `Ma,Ba,Badag`. Default:
    /// all fourteen.
    #[arg(long, value_delimiter = ',')]
    pub families: Vec<String>,
    /// Write the extracted algebra JSON here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        _ => Err(format!("expected a positive number, got {s:?}")),
    }
}

/// A failure that ends the run with a message and an exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        let code = match &e {
            VerifyError::CutoffTooSmall { .. } | VerifyError::Resource(_) => EXIT_RESOURCE,
            VerifyError::Fock(FockError::TooLarge { .. }) => EXIT_RESOURCE,
            _ => EXIT_USAGE,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<FockError> for CliError {
    fn from(e: FockError) -> Self {
        VerifyError::from(e).into()
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))
}

fn parse_scalar(s: &str) -> Result<Scalar, CliError> {
    let (re, im) = s.split_once(',').unwrap_or((s, "0"));
    Scalar::from_parts(re, im).map_err(|e| CliError::usage(format!("bad scalar {s:?}: {e}")))
}

fn su11_params(l: &LambdaArgs) -> Result<SU11ExtensionParams, CliError> {
    let d = SU11ExtensionParams::paraboson_point();
    let pick = |arg: &Option<String>, default: Scalar| arg.as_deref().map_or(Ok(default), parse_scalar);
    Ok(SU11ExtensionParams::new(
        pick(&l.lambda1, d.lambda1)?,
        pick(&l.lambda2, d.lambda2)?,
        pick(&l.lambda3, d.lambda3)?,
    ))
}

fn catalog_file(id: &str, l: &LambdaArgs) -> Result<AlgebraFile, CliError> {
    let params = su11_params(l)?;
    catalog::lookup(id, Some(&params)).map_err(|e| CliError::usage(e.to_string()))
}

fn layout_config(l: &LayoutArgs) -> Value {
    match &l.rep {
        Some(p) => json!({ "rep": p.display().to_string() }),
        None => json!({
            "parabosons": l.parabosons,
            "parafermions": l.parafermions,
            "order": l.order,
            "cutoff": l.cutoff,
        }),
    }
}

fn load_rep(l: &LayoutArgs) -> Result<GreenRep, CliError> {
    match &l.rep {
        Some(path) => {
            let m =
                Manifest::from_json(&read(path)?).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
            Ok(m.to_rep()?)
        }
        None => {
            let layout = ModeLayout::new(l.parabosons, l.parafermions, l.order, l.cutoff)?;
            Ok(build_green_rep(&layout)?)
        }
    }
}

fn cmd_check(a: &CheckArgs, tol: f64) -> Result<Outcome, CliError> {
    let (file, source) = match (&a.file, &a.catalog) {
        (Some(p), _) => {
            let f = AlgebraFile::from_json(&read(p)?).map_err(|e| CliError::usage(format!("{}: {e}", p.display())))?;
            (f, p.display().to_string())
        }
        (None, Some(id)) => (catalog_file(id, &a.lambda)?, format!("catalog:{id}")),
        (None, None) => return Err(CliError::usage("give an algebra file or --catalog")),
    };
    let (spec, warnings) = file.to_spec().map_err(|e| CliError::usage(format!("{source}: {e}")))?;
    let suite = check_axioms(&spec, &CheckOptions { tol });
    let mut text = format!("{source}: dim {} (subspaces {:?})\n", spec.dim(), spec.subspace_dims());
    for w in &warnings {
        text += &format!("warning: {w}\n");
    }
    for r in [&suite.grading, &suite.supersymmetrization, &suite.involution] {
        text += &report::check_line(r);
    }
    match (&suite.jacobi, &suite.jacobi_refused) {
        (Some(j), _) => text += &report::check_line(&j.report),
        (None, Some(why)) => text += &format!("jacobi: REFUSED ({why})\n"),
        _ => {}
    }
    text += &format!("jacobi classes over occupied subspaces: {}\n", suite.jacobi_classes);
    Ok(Outcome {
        passed: suite.passed,
        config: json!({ "source": source, "tol": tol }),
        result: json!({ "dim": spec.dim(), "subspace_dims": spec.subspace_dims(), "warnings": warnings, "axioms": suite }),
        text,
    })
}

fn cmd_catalog(c: &CatalogCommand) -> Result<Outcome, CliError> {
    match c {
        CatalogCommand::List => {
            let entries: Vec<Value> = catalog::ENTRIES
                .iter()
                .map(|e| json!({ "id": e.id, "description": e.description }))
                .collect();
            let text = catalog::ENTRIES
                .iter()
                .map(|e| format!("{:<22} {}\n", e.id, e.description))
                .collect();
            Ok(Outcome {
                passed: true,
                config: json!({}),
                result: json!({ "entries": entries }),
                text,
            })
        }
        CatalogCommand::Export { id, out, lambda } => {
            let body = catalog_file(id, lambda)?.to_json();
            let text = match out {
                Some(p) => {
                    write(p, &body)?;
                    format!("wrote {id} to {}\n", p.display())
                }
                None => body + "\n",
            };
            Ok(Outcome {
                passed: true,
                config: json!({ "id": id, "out": out.as_ref().map(|p| p.display().to_string()) }),
                result: json!({}),
                text,
            })
        }
    }
}

fn cmd_rep_build(layout: &LayoutArgs, out: &Option<PathBuf>) -> Result<Outcome, CliError> {
    let rep = load_rep(layout)?;
    let manifest = Manifest::from_rep(&rep);
    if let Some(p) = out {
        write(p, &manifest.to_json())?;
    }
    let nnz: Vec<(String, usize)> = manifest
        .generators
        .iter()
        .map(|(k, v)| (k.clone(), v.triplets.len()))
        .collect();
    let mut text = format!(
        "dimension {} over {} sites\n",
        rep.dim(),
        rep.layout().site_order().len()
    );
    for (k, n) in &nnz {
        text += &format!("  {k}: {n} nonzeros\n");
    }
    if let Some(p) = out {
        text += &format!("wrote manifest to {}\n", p.display());
    }
    Ok(Outcome {
        passed: true,
        config: json!({ "layout": layout_config(layout), "out": out.as_ref().map(|p| p.display().to_string()) }),
        result: json!({ "dimension": rep.dim(), "nonzeros": nnz.into_iter().collect::<std::collections::BTreeMap<_, _>>() }),
        text,
    })
}

fn cmd_verify(a: &VerifyArgs, tol: f64, workers: Option<usize>) -> Result<Outcome, CliError> {
    let mut names = a.set.clone();
    if names.is_empty() && a.relations.is_none() {
        names.push("eq12".into());
    }
    let mut rels: Vec<RelationExpr> = Vec::new();
    for n in &names {
        match n.as_str() {
            "closure" => rels.extend([sets::eq14(), sets::closure15_19()].concat()),
            _ => rels.extend(sets::builtin(n).ok_or_else(|| {
                CliError::usage(format!(
                    "unknown relation set {n:?}; known: closure, {}",
                    sets::BUILTIN_SETS.join(", ")
                ))
            })?),
        }
    }
    if let Some(p) = &a.relations {
        let text = read(p)?;
        rels.extend(verify::parse_relation_set(&text).map_err(|e| CliError::usage(format!("{}: {e}", p.display())))?);
    }
    let rep = load_rep(&a.layout)?;
    if names.iter().any(|n| n == "canonical_p1") && rep.layout().order != 1 {
        return Err(CliError::usage(format!(
            "canonical_p1 holds only at order 1, got p = {}",
            rep.layout().order
        )));
    }
    let opts = EvalOptions {
        tol,
        workers,
        conjugates: !a.no_conjugates,
    };
    let report = verify::eval_relations(&rep, &rels, &opts)?;
    Ok(Outcome {
        passed: report.passed,
        config: json!({
            "layout": layout_config(&a.layout),
            "sets": names,
            "relations": a.relations.as_ref().map(|p| p.display().to_string()),
            "conjugates": opts.conjugates,
            "tol": tol,
        }),
        text: report::residual_text(&report),
        result: serde_json::to_value(&report).expect("report serializes"),
    })
}

fn basis_from(a: &ExtractArgs, m: usize, n: usize) -> Result<(Vec<OpId>, bool), CliError> {
    if !a.basis.is_empty() {
        let ids = a
            .basis
            .iter()
            .map(|s| s.parse::<OpId>().map_err(|e| CliError::usage(e.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok((ids, false));
    }
    if a.families.is_empty() {
        return Ok((OpId::enumerate(m, n, &SYSTEM_FAMILIES), true));
    }
    let fams = a
        .families
        .iter()
        .map(|s| Family::from_symbol(s).ok_or_else(|| CliError::usage(format!("unknown family {s:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((OpId::enumerate(m, n, &fams), false))
}

fn cmd_extract(a: &ExtractArgs, tol: f64) -> Result<Outcome, CliError> {
    let rep = load_rep(&a.layout)?;
    let (m, n) = (rep.layout().parabosons, rep.layout().parafermions);
    let (basis, full) = basis_from(a, m, n)?;
    for id in &basis {
        if !id.in_range(m, n) {
            return Err(CliError::usage(format!(
                "operator {id} is out of range for M={m}, N={n}"
            )));
        }
    }
    let (spec, extraction) = verify::extract_structure_constants(&rep, &basis, tol)?;
    let axioms = check_axioms(&spec, &CheckOptions { tol });
    let matches_catalog = if full {
        let want = catalog::build_para_lie_super(m, n).map_err(|e| CliError::usage(e.to_string()))?;
        Some(AlgebraFile::from_spec(&want) == AlgebraFile::from_spec(&spec))
    } else {
        None
    };
    if let Some(p) = &a.out {
        write(p, &AlgebraFile::from_spec(&spec).to_json())?;
    }
    let mut text = format!(
        "{} operators, {} brackets on {} safe states\nmax out-of-span residual {:.3e}, max lattice distance {:.3e}\n",
        basis.len(),
        extraction.pairs,
        extraction.safe_states,
        extraction.max_relative_residual,
        extraction.max_lattice_distance
    );
    if let Some(w) = &extraction.worst_pair {
        text += &format!("worst pair: {} ∘ {}\n", w.left, w.right);
    }
    for r in [&axioms.grading, &axioms.supersymmetrization, &axioms.involution] {
        text += &report::check_line(r);
    }
    if let Some(j) = &axioms.jacobi {
        text += &report::check_line(&j.report);
    }
    if let Some(ok) = matches_catalog {
        text += &format!(
            "matches catalog para_lie_super_{m}_{n}: {}\n",
            if ok { "yes" } else { "NO" }
        );
    }
    Ok(Outcome {
        passed: extraction.passed && axioms.passed && matches_catalog != Some(false),
        config: json!({ "layout": layout_config(&a.layout), "basis": extraction.basis, "tol": tol }),
        result: json!({ "extraction": extraction, "axioms": axioms, "matches_catalog": matches_catalog }),
        text,
    })
}

fn cmd_classify(l: &LayoutArgs, tol: f64) -> Result<Outcome, CliError> {
    let rep = load_rep(l)?;
    let c = verify::classify_subalgebras(&rep, tol)?;
    let mut text = format!(
        "extraction: max out-of-span residual {:.3e}, max lattice distance {:.3e}\n",
        c.extraction.max_relative_residual, c.extraction.max_lattice_distance
    );
    for s in &c.subalgebras {
        text += &format!(
            "{:<24} {:<22} dim {:>3} (expected {:>3})  {}  {}\n",
            s.name,
            s.identification,
            s.dimension,
            s.expected_dimension,
            if s.closed { "closed" } else { "NOT CLOSED" },
            if s.passed { "PASS" } else { "FAIL" }
        );
    }
    Ok(Outcome {
        passed: c.passed,
        config: json!({ "layout": layout_config(l), "tol": tol }),
        result: serde_json::to_value(&c).expect("report serializes"),
        text,
    })
}

fn cmd_spectrum(l: &LayoutArgs) -> Result<Outcome, CliError> {
    let rep = load_rep(l)?;
    let s = verify::supercharge_spectra(&rep)?;
    let text = format!(
        "safe states: {}\nH_Q: min {:.12} max {:.12} (threshold {:.3e}) {}\nH_F: min {:.12} max {:.12} (reported only)\n",
        s.safe_states,
        s.h_q.min,
        s.h_q.max,
        s.psd_threshold,
        if s.h_q_positive_semidefinite { "PSD" } else { "NOT PSD" },
        s.h_f.min,
        s.h_f.max
    );
    Ok(Outcome {
        passed: s.passed,
        config: json!({ "layout": layout_config(l) }),
        result: serde_json::to_value(&s).expect("report serializes"),
        text,
    })
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Check(_) => "check",
        Command::Catalog {
            command: CatalogCommand::List,
        } => "catalog list",
        Command::Catalog { .. } => "catalog export",
        Command::Rep { .. } => "rep build",
        Command::Verify(_) => "verify",
        Command::Extract(_) => "extract",
        Command::Classify(_) => "classify",
        Command::Spectrum(_) => "spectrum",
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    let tol = cli.tol.unwrap_or(DEFAULT_TOL);
    let workers = cli.workers.map(|w| w as usize);
    let run = || match &cli.command {
        Command::Check(a) => cmd_check(a, tol),
        Command::Catalog { command } => cmd_catalog(command),
        Command::Rep {
            command: RepCommand::Build { layout, out },
        } => cmd_rep_build(layout, out),
        Command::Verify(a) => cmd_verify(a, tol, workers),
        Command::Extract(a) => cmd_extract(a, cli.tol.unwrap_or(EXTRACTION_TOL)),
        Command::Classify(l) => cmd_classify(l, cli.tol.unwrap_or(EXTRACTION_TOL)),
        Command::Spectrum(l) => cmd_spectrum(l),
    };
    verify::with_workers(workers, run)
}

/// Runs a parsed command line, returning the report and the exit code.
pub fn run(cli: &Cli) -> (Report, i32) {
    let start = Instant::now();
    let outcome = dispatch(cli);
    let report = Report::new(command_name(&cli.command), outcome, start.elapsed());
    let code = report.exit_code;
    (report, code)
}

/// Parses `args`, runs, prints to stdout/stderr, and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
        }
    };
    let (report, code) = run(&cli);
    match cli.format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => {
            print!("{}", report.text);
            if let Some(e) = &report.error {
                eprintln!("error: {e}");
            } else if code == EXIT_VIOLATIONS {
                eprintln!("checks failed");
            }
        }
    }
    code
}
