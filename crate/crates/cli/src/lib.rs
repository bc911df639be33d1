//! The `radx` command line: structure files, catalog access, radicals,
//! verification suites, enumeration and counterexample searches.

pub mod doc;
mod commands;
mod render;

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use radx_core::{AlgebraError, Limits};
use serde::Serialize;
use serde_json::{json, Value};

pub use doc::{Kind, Structure, StructureDocument};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_FAILURE: i32 = 3;
pub const EXIT_LIMIT: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "radx", version, about = "Radicals and structure theory of finite hemirings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Print one machine-readable JSON report.
    #[arg(long, global = true)]
    pub json: bool,
    /// Cap on the number of congruences any enumeration may produce.
    #[arg(long, global = true, value_name = "N")]
    pub limit_congruences: Option<u64>,
    /// Cap on the number of ideals any enumeration may produce.
    #[arg(long, global = true, value_name = "N")]
    pub limit_ideals: Option<u64>,
    /// Worker threads; output does not depend on this.
    #[arg(long, global = true, value_name = "N")]
    pub jobs: Option<usize>,
    /// Report wall-clock time in `elapsed_ms`. Off by default so that output
    /// is byte-identical across runs.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Args, Clone)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Structure file (JSON).
    pub file: Option<PathBuf>,
    /// Catalog structure, e.g. B, Z4, END_N5, N5.
    #[arg(long, value_name = "NAME")]
    pub builtin: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check every axiom of a structure file.
    Validate(Source),
    /// Structural flags of a hemiring, semimodule or monoid.
    Classify(Source),
    /// Compute one of the radicals J, Js, BM, BMCs.
    Radical {
        #[arg(long)]
        kind: String,
        /// auto, semiregular, annihilators or star (J only).
        #[arg(long, default_value = "auto")]
        method: String,
        /// Reading of "simple semiring" for BMCs: both or congruence.
        #[arg(long, default_value = "both")]
        reading: String,
        #[command(flatten)]
        source: Source,
    },
    /// Bourne quotient by a two-sided ideal.
    Quotient {
        /// Comma-separated element labels.
        #[arg(long, value_delimiter = ',')]
        ideal: Vec<String>,
        #[command(flatten)]
        source: Source,
    },
    /// The matrix hemiring M_n(R).
    Matrix {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        source: Source,
    },
    /// The hemiring of additive endomorphisms of a commutative monoid.
    End {
        /// Use the additive reduct when the source is a hemiring.
        #[arg(long)]
        monoid: bool,
        #[command(flatten)]
        source: Source,
    },
    /// Simple semimodules up to isomorphism.
    Simples(Source),
    /// Irreducible semimodules up to isomorphism.
    Irreducibles(Source),
    /// Run theorem checks.
    Verify {
        /// A theorem id, or `all`.
        #[arg(long)]
        suite: String,
        /// Matrix size for the matrix checks (default 2).
        #[arg(long)]
        n: Option<usize>,
        /// Element label of an idempotent for the corner checks.
        #[arg(long)]
        idempotent: Option<String>,
        #[command(flatten)]
        source: Source,
    },
    /// Hemirings of one order up to isomorphism.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long, value_delimiter = ',')]
        predicate: Vec<String>,
        #[arg(long)]
        count_only: bool,
    },
    /// Exhaustive counterexample search for an open problem.
    Search {
        /// P1 (Js vs J) or P3 (BM vs Cs).
        #[arg(long)]
        problem: String,
        #[arg(long)]
        max_order: usize,
    },
    /// Print a structure as a JSON document.
    Export(Source),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Validate(_) => "validate",
            Command::Classify(_) => "classify",
            Command::Radical { .. } => "radical",
            Command::Quotient { .. } => "quotient",
            Command::Matrix { .. } => "matrix",
            Command::End { .. } => "end",
            Command::Simples(_) => "simples",
            Command::Irreducibles(_) => "irreducibles",
            Command::Verify { .. } => "verify",
            Command::Enumerate { .. } => "enumerate",
            Command::Search { .. } => "search",
            Command::Export(_) => "export",
        }
    }
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
    pub witnesses: Vec<Value>,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INPUT,
            message: message.into(),
            witnesses: Vec::new(),
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        let code = match e {
            AlgebraError::ResourceLimit { .. } => EXIT_LIMIT,
            _ => EXIT_INPUT,
        };
        let witnesses = match &e {
            AlgebraError::AxiomViolation { axiom, witness } => {
                vec![json!({ "axiom": axiom.name(), "elements": witness })]
            }
            _ => Vec::new(),
        };
        CliError {
            code,
            message: e.to_string(),
            witnesses,
        }
    }
}

/// What a command produced, before formatting.
#[derive(Debug)]
pub struct Outcome {
    pub inputs: Value,
    pub result: Value,
    pub witnesses: Vec<Value>,
    pub status: &'static str,
    pub code: i32,
    pub text: String,
}

#[derive(Serialize)]
struct Report<'a> {
    command: &'a str,
    inputs: &'a Value,
    result: &'a Value,
    witnesses: &'a [Value],
    status: &'a str,
    elapsed_ms: Option<u64>,
}

/// Exit code plus the bytes for standard output and standard error.
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run_from<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Output { code, stdout: text, stderr: String::new() }
            } else {
                Output { code, stdout: String::new(), stderr: text }
            }
        }
    }
}

pub fn run(cli: Cli) -> Output {
    let defaults = Limits::current();
    Limits {
        max_congruences: cli.limit_congruences.unwrap_or(defaults.max_congruences),
        max_ideals: cli.limit_ideals.unwrap_or(defaults.max_ideals),
        ..defaults
    }
    .install();
    if let Some(jobs) = cli.jobs {
        // only the first call in a process can size the global pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global();
    }
    let start = Instant::now();
    let outcome = commands::dispatch(&cli.command);
    let elapsed = cli.timing.then(|| start.elapsed().as_millis() as u64);
    let command = cli.command.name();
    match outcome {
        Ok(o) => {
            let stdout = if cli.json {
                let report = Report {
                    command,
                    inputs: &o.inputs,
                    result: &o.result,
                    witnesses: &o.witnesses,
                    status: o.status,
                    elapsed_ms: elapsed,
                };
                to_json(&report)
            } else {
                o.text
            };
            Output { code: o.code, stdout, stderr: String::new() }
        }
        Err(e) => {
            let stderr = format!("error: {}\n", e.message);
            let stdout = if cli.json {
                let result = json!({ "error": e.message });
                let report = Report {
                    command,
                    inputs: &commands::inputs(&cli.command),
                    result: &result,
                    witnesses: &e.witnesses,
                    status: if e.code == EXIT_LIMIT { "resource_limit" } else { "invalid" },
                    elapsed_ms: elapsed,
                };
                to_json(&report)
            } else {
                e.witnesses.iter().map(|w| format!("witness: {w}\n")).collect()
            };
            Output { code: e.code, stdout, stderr }
        }
    }
}

pub(crate) fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}
