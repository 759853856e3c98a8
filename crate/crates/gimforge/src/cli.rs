//! Command-line front end: `validate`, `classify`, `dims`, `verify-examples`.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::classify::{classify, to_dot};
use crate::error::{Error, Result};
use crate::gim::{gram, symmetrizer, validate_gim, Gim};
use crate::io::read_matrix;
use crate::liealg::{present, presentation, DegreeFilter, EnumBounds, GradedAlgebraTruncation, GradedPresentation, RelationKind};
use crate::verify::{golden_templates, verify_examples};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_INDEFINITE: i32 = 4;
pub const EXIT_DECOMPOSABLE: i32 = 5;

pub const DEFAULT_DEGREE: u32 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Part {
    /// Raising generators only.
    Positive,
    /// Raising and lowering generators.
    All,
}

#[derive(Debug, Parser)]
#[command(name = "gimforge", version, about = "Exact computations with generalized intersection matrices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Degree cap for truncated Lie algebra computations.
    #[arg(long, global = true)]
    pub degree: Option<u32>,
    /// Depth bound for basis enumeration.
    #[arg(long, global = true)]
    pub depth: Option<usize>,
    /// Node bound for basis enumeration.
    #[arg(long = "max-nodes", global = true)]
    pub max_nodes: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Relation family: gim, im or pra.
    #[arg(long, global = true)]
    pub relations: Option<String>,
    /// Which generators the truncation uses.
    #[arg(long, global = true, value_enum)]
    pub part: Option<Part>,
    /// Seed for randomized checks.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// File of `key = value` lines; flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Checks the matrix axioms and reports symmetrizer, definiteness and corank.
    Validate { path: PathBuf },
    /// Classifies a semi-positive matrix into a modified Dynkin type.
    Classify { path: PathBuf },
    /// Graded dimensions of gim, im or Pra of a matrix, or of a JSON presentation.
    Dims { path: PathBuf },
    /// Runs the worked examples end to end.
    VerifyExamples,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    /// Degree cap; a presentation file may supply its own.
    pub degree: Option<u32>,
    pub bounds: EnumBounds,
    pub format: Format,
    pub relations: RelationKind,
    pub part: Part,
    pub seed: u64,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self> {
        let mut cfg = RunConfig {
            command: cli.command,
            degree: None,
            bounds: EnumBounds::default(),
            format: Format::Text,
            relations: RelationKind::Gim,
            part: Part::Positive,
            seed: 0,
        };
        if let Some(path) = &cli.config {
            cfg.apply_file(path)?;
        }
        if let Some(d) = cli.degree {
            cfg.degree = Some(d);
        }
        if let Some(d) = cli.depth {
            cfg.bounds.depth = d;
        }
        if let Some(n) = cli.max_nodes {
            cfg.bounds.nodes = n;
        }
        if let Some(f) = cli.format {
            cfg.format = f;
        }
        if let Some(r) = &cli.relations {
            cfg.relations = r.parse()?;
        }
        if let Some(p) = cli.part {
            cfg.part = p;
        }
        if let Some(s) = cli.seed {
            cfg.seed = s;
        }
        cfg.check()?;
        Ok(cfg)
    }

    fn apply_file(&mut self, path: &Path) -> Result<()> {
        let src = std::fs::read_to_string(path)?;
        for (k, line) in src.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| Error::Parse(format!("config line {}: expected key = value", k + 1)))?;
            let value = value.trim().trim_matches('"');
            let num = |v: &str| v.parse::<u64>().map_err(|_| Error::Parse(format!("config line {}: {v:?} is not a number", k + 1)));
            match key.trim() {
                "degree" => self.degree = Some(num(value)? as u32),
                "depth" => self.bounds.depth = num(value)? as usize,
                "max-nodes" | "max_nodes" => self.bounds.nodes = num(value)? as usize,
                "seed" => self.seed = num(value)?,
                "relations" => self.relations = value.parse()?,
                "format" => self.format = Format::from_str(value, true).map_err(Error::Parse)?,
                "part" => self.part = Part::from_str(value, true).map_err(Error::Parse)?,
                other => return Err(Error::Parse(format!("config line {}: unknown key {other:?}", k + 1))),
            }
        }
        Ok(())
    }

    fn check(&self) -> Result<()> {
        if self.degree == Some(0) {
            return Err(Error::InvalidArgument("--degree must be at least 1".into()));
        }
        if self.bounds.depth == 0 || self.bounds.nodes == 0 {
            return Err(Error::InvalidArgument("enumeration bounds must be positive".into()));
        }
        Ok(())
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidGim(_) | Error::NotSquare { .. } | Error::Empty => EXIT_INVALID,
        Error::Parse(_) | Error::Io(_) | Error::Json(_) => EXIT_PARSE,
        Error::Indefinite => EXIT_INDEFINITE,
        Error::Decomposable(_) => EXIT_DECOMPOSABLE,
        _ => EXIT_FAILURE,
    }
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_PARSE;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    init_threads();
    let result = RunConfig::from_cli(cli).and_then(|cfg| execute(&cfg, out));
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn init_threads() {
    if let Some(n) = std::env::var("GIMFORGE_THREADS").ok().and_then(|v| v.parse::<usize>().ok()).filter(|&n| n > 0) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

pub fn execute(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    match &cfg.command {
        Command::Validate { path } => cmd_validate(path, cfg, out),
        Command::Classify { path } => cmd_classify(path, cfg, out),
        Command::Dims { path } => cmd_dims(path, cfg, out),
        Command::VerifyExamples => cmd_verify_examples(cfg, out),
    }
}

fn read_gim(path: &Path) -> Result<Gim> {
    validate_gim(read_matrix(path)?)
}

pub fn cmd_validate(path: &Path, cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let rows = read_matrix(path)?;
    let m = match validate_gim(rows) {
        Ok(m) => m,
        Err(e @ (Error::InvalidGim(_) | Error::NotSquare { .. } | Error::Empty)) => {
            match cfg.format {
                Format::Json => writeln!(out, "{}", json!({ "valid": false, "error": e.to_string() }))?,
                _ => writeln!(out, "invalid: {e}")?,
            }
            return Ok(EXIT_INVALID);
        }
        Err(e) => return Err(e),
    };
    let sym = symmetrizer(&m);
    let (definiteness, corank) = match &sym {
        Ok(s) => {
            let g = gram(&m, s);
            (Some(g.definiteness.to_string()), Some(g.corank))
        }
        Err(_) => (None, None),
    };
    match cfg.format {
        Format::Json => {
            let v = json!({
                "valid": true,
                "n": m.n(),
                "symmetrizer": sym.as_ref().ok().map(|s| s.s.clone()),
                "symmetrizable": sym.is_ok(),
                "definiteness": definiteness,
                "corank": corank,
                "blocks": m.blocks().iter().map(|b| b.iter().map(|i| i + 1).collect::<Vec<_>>()).collect::<Vec<_>>(),
            });
            writeln!(out, "{v}")?;
        }
        _ => {
            writeln!(out, "valid GIM of size {}", m.n())?;
            match &sym {
                Ok(s) => {
                    writeln!(out, "symmetrizer: diag({})", s.s.iter().map(i64::to_string).collect::<Vec<_>>().join(","))?;
                    writeln!(out, "definiteness: {}", definiteness.expect("symmetrizable"))?;
                    writeln!(out, "corank: {}", corank.expect("symmetrizable"))?;
                }
                Err(e) => writeln!(out, "symmetrizer: none ({e})")?,
            }
            if !m.is_indecomposable() {
                writeln!(out, "blocks: {:?}", m.blocks().iter().map(|b| b.iter().map(|i| i + 1).collect::<Vec<_>>()).collect::<Vec<_>>())?;
            }
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_classify(path: &Path, cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let m = read_gim(path)?;
    let r = match classify(&m) {
        Err(Error::Decomposable(blocks)) => {
            let one_based: Vec<Vec<usize>> = blocks.iter().map(|b| b.iter().map(|i| i + 1).collect()).collect();
            return Err(Error::Decomposable(one_based));
        }
        other => other?,
    };
    match cfg.format {
        Format::Text => write!(out, "{}", r.to_text())?,
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&r.to_json())?)?,
        Format::Dot => write!(out, "{}", to_dot(&r.label))?,
    }
    Ok(EXIT_OK)
}

fn load_presentation(path: &Path, cfg: &RunConfig) -> Result<(GradedPresentation, Option<u32>)> {
    let src = std::fs::read_to_string(path)?;
    if src.trim_start().starts_with('{') {
        let v: serde_json::Value = serde_json::from_str(&src).map_err(|e| Error::Parse(e.to_string()))?;
        if v.get("generators").is_some() {
            let p = GradedPresentation::from_json(&v)?;
            let cap = p.cap;
            return Ok((p, cap));
        }
    }
    let m = validate_gim(crate::io::parse_matrix(&src)?)?;
    Ok((presentation(&m, cfg.relations, cfg.bounds)?, None))
}

pub fn truncation(path: &Path, cfg: &RunConfig) -> Result<GradedAlgebraTruncation> {
    let (p, file_cap) = load_presentation(path, cfg)?;
    let cap = cfg.degree.or(file_cap).unwrap_or(DEFAULT_DEGREE);
    let filter = match cfg.part {
        Part::Positive => DegreeFilter::PositiveOnly,
        Part::All => DegreeFilter::All,
    };
    present(&p, cap, filter)
}

pub fn cmd_dims(path: &Path, cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let t = truncation(path, cfg)?;
    match cfg.format {
        Format::Json => writeln!(out, "{}", t.dims_json())?,
        _ => write!(out, "{}", dims_text(&t))?,
    }
    Ok(EXIT_OK)
}

pub fn dims_text(t: &GradedAlgebraTruncation) -> String {
    let dims: Vec<(String, usize)> = t
        .graded_dims()
        .into_iter()
        .filter(|(_, d)| *d > 0)
        .map(|(k, d)| (format!("({})", k.iter().map(i64::to_string).collect::<Vec<_>>().join(",")), d))
        .collect();
    let width = dims.iter().map(|(k, _)| k.len()).max().unwrap_or(6).max(6);
    let mut s = format!("{:<width$}  dim\n", "degree");
    for (k, d) in &dims {
        s.push_str(&format!("{k:<width$}  {d}\n"));
    }
    s.push_str(&format!("heights: {}\n", t.height_dims().iter().map(usize::to_string).collect::<Vec<_>>().join(" ")));
    if let Some(pra) = &t.presentation.pra {
        s.push_str(&format!("bases: {}\ncomplete: {}\n", pra.bases, t.complete));
    }
    for &g in &t.inconsistent {
        s.push_str(&format!("warning: generator {} is forced to zero\n", t.presentation.generators[g].name));
    }
    s
}

pub fn cmd_verify_examples(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let results = verify_examples(&golden_templates(), cfg.seed);
    for r in &results {
        writeln!(out, "{r}")?;
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    writeln!(out, "{} passed, {} failed", results.len() - failed, failed)?;
    Ok(if failed == 0 { EXIT_OK } else { EXIT_FAILURE })
}
