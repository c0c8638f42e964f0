//! Command-line front end.
//!
//! Exit codes: 0 when every check passed, 1 when a mathematical violation was
//! found, 2 for usage or configuration errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{
    bernstein_bound_vector, c_parabolic_with, cuspidal_alpha_sq_bound, nonselfdual_bound_vector,
    parabolic_bound_vector_with, trivial_norm, GroupKind, ParabolicMode,
};
use crate::error::{Error, Result};
use crate::orderings::ExpVector;
use crate::spectrum::UnitaryChar;
use crate::verifier::{
    self, default_characters, enumerate_dual_points, enumerate_negative,
    enumerate_strongly_negative, GridSpec, ViolationReport,
};

/// Directory that relative `--output` paths are resolved against.
pub const OUTPUT_DIR_ENV: &str = "SPDUAL_OUTPUT_DIR";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "spdual",
    version,
    about = "Norm bounds on the unramified unitary dual of Sp(2n,F)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List parameter points with their norm vectors.
    Enumerate {
        #[arg(long, value_enum)]
        family: Family,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Print a bound vector or constant.
    Bounds(BoundsArgs),
    /// Check bound theorems over the enumerated dual.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Strongly negative representations.
    Sn,
    /// Negative representations.
    Neg,
    /// Points of the grid unitary dual.
    Dual,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    BoundByTrivial,
    Isolation,
    ClassBounds,
    Filters,
    Extremal,
    All,
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum BoundKind {
    Trivial,
    Parabolic,
    Bernstein,
    Nonselfdual,
    CuspidalAlpha,
    CParabolic,
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum GroupArg {
    #[default]
    Sp,
    So,
}

impl From<GroupArg> for GroupKind {
    fn from(g: GroupArg) -> Self {
        match g {
            GroupArg::Sp => GroupKind::Sp,
            GroupArg::So => GroupKind::SoOdd,
        }
    }
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    #[default]
    GlRank,
    Multiplicity,
    RankRatio,
}

impl From<ModeArg> for ParabolicMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::GlRank => ParabolicMode::GlRank,
            ModeArg::Multiplicity => ParabolicMode::Multiplicity,
            ModeArg::RankRatio => ParabolicMode::RankRatio,
        }
    }
}

#[derive(Args, Debug)]
pub struct GridArgs {
    /// Rank of the group.
    #[arg(long)]
    pub q: u32,
    /// Exponent grid denominator.
    #[arg(long, default_value_t = 8)]
    pub denominator: u32,
    /// Character angles, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub characters: Option<Vec<UnitaryChar>>,
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Output file; relative paths resolve against $SPDUAL_OUTPUT_DIR if set.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    #[arg(value_enum)]
    pub kind: BoundKind,
    #[arg(long)]
    pub p: Option<u32>,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long, value_enum, default_value_t = GroupArg::Sp)]
    pub group: GroupArg,
    #[arg(long)]
    pub q: Option<u32>,
    #[arg(long)]
    pub jord_card: Option<u32>,
    /// Whether the reducibility point is integral (cuspidal-alpha only).
    #[arg(long)]
    pub integral: bool,
    #[arg(long, value_enum, default_value_t = ModeArg::GlRank)]
    pub mode: ModeArg,
}

/// Resolved settings of one invocation.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub q: u32,
    pub grid: GridSpec,
    pub format: Format,
    pub output: Option<PathBuf>,
}

impl RunConfig {
    pub fn from_args(grid: &GridArgs, out: &OutputArgs) -> Result<Self> {
        let characters = grid.characters.clone().unwrap_or_else(default_characters);
        Ok(RunConfig {
            q: grid.q,
            grid: GridSpec::new(grid.denominator, characters)?,
            format: out.format,
            output: out.output.as_deref().map(resolve_output),
        })
    }
}

fn resolve_output(path: &Path) -> PathBuf {
    match std::env::var_os(OUTPUT_DIR_ENV) {
        Some(dir) if path.is_relative() => Path::new(&dir).join(path),
        _ => path.to_path_buf(),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(&cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(command: &Command) -> Result<i32> {
    match command {
        Command::Enumerate { family, grid, out } => {
            let config = RunConfig::from_args(grid, out)?;
            cmd_enumerate(*family, &config)
        }
        Command::Bounds(args) => {
            println!("{}", cmd_bounds(args)?);
            Ok(EXIT_OK)
        }
        Command::Verify { suite, grid, out } => {
            let config = RunConfig::from_args(grid, out)?;
            cmd_verify(*suite, &config)
        }
    }
}

fn emit(config: &RunConfig, text: &str) -> Result<()> {
    let io_err = |e: std::io::Error| Error::InvalidParameter(format!("cannot write output: {e}"));
    match &config.output {
        Some(path) => std::fs::write(path, text).map_err(io_err),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(io_err),
    }
}

#[derive(Serialize)]
struct Record {
    family: &'static str,
    point: String,
    norm: ExpVector,
}

fn family_name(family: Family) -> &'static str {
    match family {
        Family::Sn => "sn",
        Family::Neg => "neg",
        Family::Dual => "dual",
    }
}

pub fn enumerate_records(family: Family, config: &RunConfig) -> Result<Vec<(String, ExpVector)>> {
    let q = config.q;
    Ok(match family {
        Family::Sn => enumerate_strongly_negative(q)
            .into_iter()
            .map(|(j, n)| (j.to_string(), n))
            .collect(),
        Family::Neg => enumerate_negative(q, &config.grid)
            .into_iter()
            .map(|(neg, n)| (neg.to_string(), n))
            .collect(),
        Family::Dual => {
            if q == 0 {
                return Err(Error::Precondition(
                    "dual enumeration requires q >= 1".into(),
                ));
            }
            enumerate_dual_points(q, &config.grid)
                .into_iter()
                .map(|pt| {
                    let n = pt.norm();
                    (pt.to_string(), n)
                })
                .collect()
        }
    })
}

pub fn cmd_enumerate(family: Family, config: &RunConfig) -> Result<i32> {
    let rows = enumerate_records(family, config)?;
    let name = family_name(family);
    let bound = trivial_norm(GroupKind::Sp, config.q);
    let text = match config.format {
        Format::Json => {
            let records: Vec<_> = rows
                .into_iter()
                .map(|(point, norm)| Record {
                    family: name,
                    point,
                    norm,
                })
                .collect();
            to_json(&records)
        }
        Format::Csv => {
            let mut w = csv_writer();
            for (point, norm) in &rows {
                let verdict = if norm.leq_s(&bound)? { "ok" } else { "exceeds" };
                w.write_record([name, point, &norm.to_string(), &bound.to_string(), verdict])
                    .map_err(csv_err)?;
            }
            finish_csv(w)?
        }
        Format::Text => rows.iter().fold(String::new(), |mut s, (point, norm)| {
            let _ = writeln!(s, "{point}\t({norm})");
            s
        }),
    };
    emit(config, &text)?;
    Ok(EXIT_OK)
}

fn missing(flag: &str, kind: BoundKind) -> Error {
    let kind = kind.to_possible_value().map(|v| v.get_name().to_string());
    Error::InvalidParameter(format!(
        "bounds {} requires --{flag}",
        kind.unwrap_or_default()
    ))
}

fn positive(value: Option<u32>, flag: &str, kind: BoundKind) -> Result<u32> {
    match value {
        None => Err(missing(flag, kind)),
        Some(0) => Err(Error::InvalidParameter(format!(
            "--{flag} must be positive"
        ))),
        Some(v) => Ok(v),
    }
}

/// The requested bound, formatted as comma-separated exact rationals.
pub fn cmd_bounds(args: &BoundsArgs) -> Result<String> {
    let kind = args.kind;
    let g: GroupKind = args.group.into();
    let q = || args.q.ok_or_else(|| missing("q", kind));
    Ok(match kind {
        BoundKind::Trivial => {
            let q = positive(args.q, "q", kind)?;
            trivial_norm(g, q).to_string()
        }
        BoundKind::Parabolic => {
            let p = positive(args.p, "p", kind)?;
            let n = positive(args.n, "n", kind)?;
            parabolic_bound_vector_with(args.mode.into(), p, n, g, q()?).to_string()
        }
        BoundKind::Bernstein => {
            let card = args.jord_card.ok_or_else(|| missing("jord-card", kind))?;
            bernstein_bound_vector(card, positive(args.n, "n", kind)?).to_string()
        }
        BoundKind::Nonselfdual => {
            nonselfdual_bound_vector(positive(args.n, "n", kind)?).to_string()
        }
        BoundKind::CuspidalAlpha => {
            let p = positive(args.p, "p", kind)?;
            cuspidal_alpha_sq_bound(p, g, q()?, args.integral).to_string()
        }
        BoundKind::CParabolic => {
            let p = positive(args.p, "p", kind)?;
            let n = args.n.unwrap_or(1);
            c_parabolic_with(args.mode.into(), p, n, g, q()?).to_string()
        }
    })
}

/// Reports for one suite.
pub fn run_suite(suite: Suite, q: u32, grid: &GridSpec) -> Result<Vec<ViolationReport>> {
    Ok(match suite {
        Suite::BoundByTrivial => vec![verifier::verify_bound_by_trivial(q, grid)?],
        Suite::Isolation => vec![verifier::verify_isolation(q, grid)?],
        Suite::ClassBounds => verifier::verify_class_bounds(q, grid)?,
        Suite::Filters => vec![verifier::verify_filters_consistency(q, grid)?],
        Suite::Extremal => vec![verifier::verify_extremal(q, grid)?],
        Suite::All => {
            let mut all = Vec::new();
            for s in [
                Suite::BoundByTrivial,
                Suite::Isolation,
                Suite::ClassBounds,
                Suite::Filters,
                Suite::Extremal,
            ] {
                all.extend(run_suite(s, q, grid)?);
            }
            all
        }
    })
}

pub fn cmd_verify(suite: Suite, config: &RunConfig) -> Result<i32> {
    let reports = run_suite(suite, config.q, &config.grid)?;
    let text = match config.format {
        Format::Json => to_json(&reports),
        Format::Csv => {
            let mut w = csv_writer();
            for r in &reports {
                for v in &r.violations {
                    w.write_record([
                        r.theorem.as_str(),
                        &v.point,
                        &v.norm.to_string(),
                        &v.bound.to_string(),
                        &v.ordering,
                    ])
                    .map_err(csv_err)?;
                }
            }
            finish_csv(w)?
        }
        Format::Text => reports.iter().fold(String::new(), |mut s, r| {
            let status = if r.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(
                s,
                "{status} {} q={} D={}: {} points, {} violations, {} equality witnesses",
                r.theorem,
                r.domain.q,
                r.domain.denominator,
                r.points_checked,
                r.violations.len(),
                r.equality_witnesses.len()
            );
            for v in &r.violations {
                let _ = writeln!(
                    s,
                    "  {}  norm ({})  bound ({})  {}",
                    v.point, v.norm, v.bound, v.ordering
                );
            }
            s
        }),
    };
    emit(config, &text)?;
    Ok(if reports.iter().all(ViolationReport::passed) {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["family", "parameters", "norm", "bound", "verdict"])
        .expect("write to memory");
    w
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w
        .into_inner()
        .map_err(|e| Error::InvalidParameter(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn csv_err(e: csv::Error) -> Error {
    Error::InvalidParameter(format!("csv: {e}"))
}
