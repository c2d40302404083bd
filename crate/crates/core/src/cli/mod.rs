//! Command-line driver.
//!
//! Exit statuses: 0 on success, 1 when inputs fail validation (one message per
//! line on standard error), 2 when a file cannot be read or written.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use chrono::NaiveDate;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::ahp::{run_ahp, CriteriaWeights, Method};
use crate::dataset::{
    parse_grade_matrix, parse_records, summary_stats, GradeMatrix, ProductRecord, RecordsError,
    Strictness, SummaryStats,
};
use crate::report::{build_report, emit_csv, emit_json, render_svg_bars, SvgStyle};
use crate::template::{builtin_template, Quality};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_IO: i32 = 2;

/// Raw weights deviating from 1 by more than this are reported when renormalized.
pub const WEIGHT_SUM_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Parser)]
#[command(
    name = "softqual",
    version,
    about = "Rank software products by quality with AHP"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rank products per quality and overall.
    Rank(RunConfig),
    /// Summary statistics over product records.
    Stats(StatsArgs),
    /// Check records and grades without ranking.
    Validate(ValidateArgs),
    /// Grading template operations.
    #[command(subcommand)]
    Template(TemplateCommand),
}

#[derive(Debug, Args)]
pub struct RunConfig {
    /// CSV grade matrix: name,group,<quality ids...>
    #[arg(long = "grades")]
    pub grades_path: PathBuf,
    /// JSON product records; when given they must name the graded products.
    #[arg(long = "records")]
    pub records_path: Option<PathBuf>,
    /// `equal`, or a JSON file mapping quality ids to non-negative weights.
    #[arg(long, default_value = "equal")]
    pub weights: String,
    /// `column` or `eigen`.
    #[arg(long, default_value = "column")]
    pub method: Method,
    #[arg(long = "out")]
    pub output_dir: PathBuf,
    /// YYYY-MM-DD; defaults to today.
    #[arg(long)]
    pub reference_date: Option<NaiveDate>,
    /// Report record violations as warnings instead of failing.
    #[arg(long = "no-strict", action = clap::ArgAction::SetFalse)]
    pub strict: bool,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    #[arg(long = "records")]
    pub records_path: PathBuf,
    #[arg(long)]
    pub reference_date: Option<NaiveDate>,
    /// Directory for stats.json.
    #[arg(long = "out", default_value = ".")]
    pub output_dir: PathBuf,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    #[arg(long = "records")]
    pub records_path: Option<PathBuf>,
    #[arg(long = "grades")]
    pub grades_path: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum TemplateCommand {
    /// Write the built-in template as JSON.
    Export {
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug)]
pub enum CliError {
    Io { path: PathBuf, message: String },
    Invalid(Vec<String>),
}

impl CliError {
    fn io(path: &Path, e: impl std::fmt::Display) -> Self {
        CliError::Io {
            path: path.to_path_buf(),
            message: e.to_string(),
        }
    }

    fn invalid(message: impl Into<String>) -> Self {
        CliError::Invalid(vec![message.into()])
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => EXIT_IO,
            CliError::Invalid(_) => EXIT_INVALID,
        }
    }

    pub fn lines(&self) -> Vec<String> {
        match self {
            CliError::Io { path, message } => vec![format!("{}: {message}", path.display())],
            CliError::Invalid(lines) => lines.clone(),
        }
    }
}

/// Parses `args` (including the program name), runs the command and returns the exit status.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_IO } else { EXIT_OK };
        }
    };
    match run(cli.command) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            for line in e.lines() {
                eprintln!("{line}");
            }
            e.exit_code()
        }
    }
}

pub fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Rank(config) => cmd_rank(&config),
        Command::Stats(args) => cmd_stats(&args),
        Command::Validate(args) => cmd_validate(&args),
        Command::Template(TemplateCommand::Export { out }) => cmd_template_export(out.as_deref()),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError::io(path, e))
}

fn create_dir(path: &Path) -> Result<(), CliError> {
    fs::create_dir_all(path).map_err(|e| CliError::io(path, e))
}

fn today() -> NaiveDate {
    chrono::Local::now().date_naive()
}

fn load_grades(path: &Path) -> Result<GradeMatrix, CliError> {
    parse_grade_matrix(&read(path)?).map_err(|e| {
        CliError::Invalid(
            e.0.iter()
                .map(|x| format!("{}: {x}", path.display()))
                .collect(),
        )
    })
}

/// Records plus the violations that were tolerated.
fn load_records(
    path: &Path,
    strictness: Strictness,
) -> Result<(Vec<ProductRecord>, Vec<String>), CliError> {
    let text = read(path)?;
    if text.trim().is_empty() {
        return Ok((Vec::new(), Vec::new()));
    }
    match parse_records(&text, &builtin_template(), strictness) {
        Ok(parsed) => Ok((
            parsed.records,
            parsed.violations.iter().map(ToString::to_string).collect(),
        )),
        Err(RecordsError::Invalid(vs)) => Err(CliError::Invalid(
            vs.iter().map(ToString::to_string).collect(),
        )),
        Err(e) => Err(CliError::invalid(format!("{}: {e}", path.display()))),
    }
}

fn load_weights(spec: &str, qualities: &[Quality]) -> Result<CriteriaWeights, CliError> {
    if spec == "equal" {
        return Ok(CriteriaWeights::equal(qualities));
    }
    let path = Path::new(spec);
    let raw: BTreeMap<String, f64> = serde_json::from_str(&read(path)?)
        .map_err(|e| CliError::invalid(format!("{}: {e}", path.display())))?;
    let mut errors = Vec::new();
    let mut by_quality = BTreeMap::new();
    for (id, w) in raw {
        match id.parse::<Quality>() {
            Ok(q) => {
                by_quality.insert(q, w);
            }
            Err(e) => errors.push(format!("{}: {e}", path.display())),
        }
    }
    if !errors.is_empty() {
        return Err(CliError::Invalid(errors));
    }
    let (weights, sum) = CriteriaWeights::from_raw(by_quality)
        .map_err(|e| CliError::invalid(format!("{}: {e}", path.display())))?;
    if (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
        eprintln!("warning: weights sum to {sum}; renormalized to 1");
    }
    Ok(weights)
}

pub fn cmd_rank(config: &RunConfig) -> Result<(), CliError> {
    let gm = load_grades(&config.grades_path)?;
    let records = match &config.records_path {
        Some(path) => {
            let strictness = if config.strict {
                Strictness::Strict
            } else {
                Strictness::Lenient
            };
            let (records, warnings) = load_records(path, strictness)?;
            for w in warnings {
                eprintln!("warning: {w}");
            }
            Some(records)
        }
        None => None,
    };
    let weights = load_weights(&config.weights, gm.qualities())?;
    let reference_date = config.reference_date.unwrap_or_else(today);

    let result =
        run_ahp(&gm, &weights, config.method).map_err(|e| CliError::invalid(e.to_string()))?;
    let report = build_report(&result, records.as_deref(), reference_date)
        .map_err(|e| CliError::invalid(e.to_string()))?;

    let out = &config.output_dir;
    create_dir(out)?;
    write(&out.join("report.json"), &emit_json(&report))?;
    let style = SvgStyle::default();
    let mut series = Vec::new();
    for q in report.qualities() {
        series.push(report.series(Some(q)));
    }
    series.push(report.series(None));
    for s in series {
        let s = s.map_err(|e| CliError::invalid(e.to_string()))?;
        write(&out.join(format!("{}.csv", s.label)), &emit_csv(&s))?;
        let svg = render_svg_bars(&s, &style).map_err(|e| CliError::invalid(e.to_string()))?;
        write(&out.join(format!("ahp_{}.svg", s.label)), &svg)?;
    }
    print!("{}", report.to_table());
    Ok(())
}

#[derive(Serialize)]
struct StatsDocument<'a> {
    reference_date: NaiveDate,
    #[serde(flatten)]
    stats: &'a SummaryStats,
}

pub fn cmd_stats(args: &StatsArgs) -> Result<(), CliError> {
    let (records, _) = load_records(&args.records_path, Strictness::Lenient)?;
    let reference_date = args.reference_date.unwrap_or_else(today);
    let stats = summary_stats(&records, Some(reference_date));
    create_dir(&args.output_dir)?;
    let mut json = serde_json::to_string_pretty(&StatsDocument {
        reference_date,
        stats: &stats,
    })
    .expect("stats serialize");
    json.push('\n');
    write(&args.output_dir.join("stats.json"), &json)?;
    print!("{}", stats.to_text());
    Ok(())
}

pub fn cmd_validate(args: &ValidateArgs) -> Result<(), CliError> {
    let mut violations = Vec::new();
    if let Some(path) = &args.records_path {
        match load_records(path, Strictness::Lenient) {
            Ok((_, found)) => violations.extend(found),
            Err(CliError::Invalid(found)) => violations.extend(found),
            Err(e) => return Err(e),
        }
    }
    if let Some(path) = &args.grades_path {
        match load_grades(path) {
            Ok(_) => {}
            Err(CliError::Invalid(found)) => violations.extend(found),
            Err(e) => return Err(e),
        }
    }
    println!("{} violations", violations.len());
    if violations.is_empty() {
        Ok(())
    } else {
        Err(CliError::Invalid(violations))
    }
}

pub fn cmd_template_export(out: Option<&Path>) -> Result<(), CliError> {
    let json = builtin_template().to_json();
    match out {
        Some(path) => write(path, &json),
        None => {
            print!("{json}");
            Ok(())
        }
    }
}
