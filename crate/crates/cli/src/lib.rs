//! Batch front end: loads a 2-group (built-in or JSON), runs one command
//! and renders the result as an ASCII table or JSON.

mod check;
mod commands;
mod input;
mod table;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use check::{check, run_suites, SuiteResult};
pub use commands::inner_matrix;
pub use input::{Bundle, NamedRepSpec, Workspace};

#[derive(thiserror::Error, Debug)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation failed: {0}")]
    Invalid(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 2,
            CliError::Invalid(_) => 1,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Clone, Debug, PartialEq, Eq)]
pub enum Command {
    /// Summary of the 2-group: orders, cocycle and duality data.
    Describe,
    /// The representations in play (catalogue or input).
    Irreps,
    /// Dimensions and π₂-eigencharacters of every 2-character at each class.
    Chartable,
    /// Joint 2-characters at every canonical input.
    Jointtable,
    /// Fusion rules of the catalogue irreducibles.
    Fusion,
    /// Dimensions of pairwise inner products.
    Inner,
    /// Center object and algebra checks for one representation.
    Center { irrep: String },
    /// Every invariant suite; exits 1 on any violation.
    Check,
}

#[derive(Args, Clone, Debug, PartialEq, Eq)]
pub struct Source {
    /// Built-in 2-group, e.g. G1, G2, BA(Z3), grp(S3).
    #[arg(long, global = true)]
    pub builtin: Option<String>,
    /// JSON file holding a 2-group or {"two_group": ..., "reps": [...]}.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
}

/// One batch job.
#[derive(Parser, Clone, Debug, PartialEq, Eq)]
#[command(name = "twochar", version, about = "2-character computations for finite 2-groups")]
pub struct JobSpec {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub source: Source,
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Compute fusion and inner-product cells in parallel.
    #[arg(long, global = true)]
    pub parallel: bool,
}

/// Rendered result of a command. `ok` is false when a check inside the
/// command found a violation.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub text: String,
    pub json: serde_json::Value,
    pub ok: bool,
}

impl Outcome {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => serde_json::to_string_pretty(&self.json).expect("json values serialize") + "\n",
        }
    }
}

pub fn load(source: &Source) -> Result<Workspace, CliError> {
    match (&source.builtin, &source.input) {
        (Some(name), None) => Workspace::builtin(name),
        (None, Some(path)) => Workspace::from_path(path),
        _ => Err(CliError::Usage("give exactly one of --builtin and --input".into())),
    }
}

pub fn run(job: &JobSpec) -> Result<Outcome, CliError> {
    let ws = load(&job.source)?;
    execute(&ws, &job.command, job.parallel)
}

pub fn execute(ws: &Workspace, command: &Command, parallel: bool) -> Result<Outcome, CliError> {
    match command {
        Command::Describe => Ok(commands::describe(ws)),
        Command::Irreps => commands::irreps(ws),
        Command::Chartable => commands::chartable(ws),
        Command::Jointtable => commands::jointtable(ws),
        Command::Fusion => commands::fusion(ws, parallel),
        Command::Inner => commands::inner(ws, parallel),
        Command::Center { irrep } => commands::center(ws, irrep),
        Command::Check => Ok(check::check(ws)),
    }
}

/// Runs a job end to end and returns the process exit code.
pub fn main_with(job: &JobSpec) -> i32 {
    match run(job) {
        Ok(outcome) => {
            let rendered = outcome.render(job.format);
            let written = match &job.output {
                Some(path) => std::fs::write(path, rendered).map_err(|e| format!("{}: {e}", path.display())),
                None => {
                    print!("{rendered}");
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return 2;
            }
            if outcome.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
