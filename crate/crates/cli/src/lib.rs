//! Category description language, bundled fixture corpus and the `unital`
//! command line front end.

pub mod commands;
pub mod corpus;
pub mod dsl;
pub mod report;

use std::ffi::OsString;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use unital_core::exec::DEFAULT_MAX_CANDIDATES;
use unital_core::{AuditConfig, Error};

use crate::report::{render, Outcome, Status};

/// Environment variable capping candidate evaluations per audit.
pub const MAX_CANDIDATES_VAR: &str = "UNITAL_MAX_CANDIDATES";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: dsl::ParseError },
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    pub fn status(&self) -> Status {
        match self {
            CliError::Core(e) if e.is_theorem_violation() => Status::TheoremViolation,
            _ => Status::InvalidInput,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "unital", version, about = "Audits units of finite strict semi-monoidal categories")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Write the report to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Run audits on one thread.
    #[arg(long, global = true)]
    pub serial: bool,
}

#[derive(Debug, Args)]
pub struct CategoryInput {
    pub file: PathBuf,
    /// Restrict to one category of the document.
    #[arg(long, value_name = "NAME")]
    pub category: Option<String>,
}

#[derive(Debug, Args)]
pub struct FunctorInput {
    pub file: PathBuf,
    /// Restrict to one functor of the document.
    #[arg(long, value_name = "NAME")]
    pub functor: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Structural validation of every category and functor.
    Validate { file: PathBuf },
    /// Units in both forms, their round trip and the category of units.
    Units(CategoryInput),
    /// The category of units with its canonical morphisms.
    UnitCat(CategoryInput),
    /// The LR form of one unit given as OBJ:MOR.
    Derive {
        #[command(flatten)]
        input: CategoryInput,
        #[arg(long, value_name = "OBJ:MOR")]
        unit: String,
    },
    /// Every LR candidate with its axiom verdicts.
    Axioms(CategoryInput),
    /// Compares the exchange law against the agreement and multiplicativity laws.
    KellyAudit(CategoryInput),
    /// Unit compatibilities of the declared functors.
    FunctorAudit {
        #[command(flatten)]
        input: FunctorInput,
        /// Also audit every multiplicative functor between the categories.
        #[arg(long)]
        exhaustive: bool,
    },
    /// The lift of a monoidal functor to the categories of units.
    Lift(FunctorInput),
    /// Monoids for the designated unit, in both senses.
    Monoids(CategoryInput),
    /// Fair presentations and their round trips.
    Fair(CategoryInput),
    /// Left and right lax compatibilities listed separately.
    LaxAudit(FunctorInput),
    /// Bounded hunt for a lax compatibility satisfying only one side.
    Search {
        #[arg(long, value_name = "N")]
        max_objects: usize,
        #[arg(long, value_name = "M")]
        max_morphisms: usize,
        #[arg(long, value_name = "SECONDS")]
        max_seconds: Option<u64>,
    },
    /// Writes the bundled fixture corpus.
    Fixtures {
        #[arg(long, value_name = "DIR")]
        emit: PathBuf,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Units(_) => "units",
            Command::UnitCat(_) => "unit-cat",
            Command::Derive { .. } => "derive",
            Command::Axioms(_) => "axioms",
            Command::KellyAudit(_) => "kelly-audit",
            Command::FunctorAudit { .. } => "functor-audit",
            Command::Lift(_) => "lift",
            Command::Monoids(_) => "monoids",
            Command::Fair(_) => "fair",
            Command::LaxAudit(_) => "lax-audit",
            Command::Search { .. } => "search",
            Command::Fixtures { .. } => "fixtures",
        }
    }
}

fn load(path: &PathBuf) -> Result<dsl::CatDocument, CliError> {
    let text =
        std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    dsl::parse(&text).map_err(|source| CliError::Parse { path: path.display().to_string(), source })
}

/// The audit configuration, with the candidate cap taken from the environment.
pub fn audit_config(serial: bool) -> Result<AuditConfig, CliError> {
    let base = if serial { AuditConfig::serial() } else { AuditConfig::default() };
    match std::env::var(MAX_CANDIDATES_VAR) {
        Ok(v) => {
            let n: u64 = v.trim().parse().map_err(|_| {
                CliError::Usage(format!("{MAX_CANDIDATES_VAR} must be a non-negative integer, got `{v}`"))
            })?;
            Ok(base.with_max_candidates(n))
        }
        Err(_) => Ok(base.with_max_candidates(DEFAULT_MAX_CANDIDATES)),
    }
}

/// Runs a parsed command and returns its outcome.
pub fn execute(cmd: &Command, serial: bool) -> Result<Outcome, CliError> {
    let cfg = audit_config(serial)?;
    match cmd {
        Command::Validate { file } => commands::validate(&load(file)?),
        Command::Units(i) => commands::units(&load(&i.file)?, i.category.as_deref(), &cfg),
        Command::UnitCat(i) => commands::unit_cat(&load(&i.file)?, i.category.as_deref()),
        Command::Derive { input, unit } => commands::derive(&load(&input.file)?, input.category.as_deref(), unit),
        Command::Axioms(i) => commands::axioms(&load(&i.file)?, i.category.as_deref(), &cfg),
        Command::KellyAudit(i) => commands::kelly_audit(&load(&i.file)?, i.category.as_deref(), &cfg),
        Command::FunctorAudit { input, exhaustive } => {
            commands::functor_audit(&load(&input.file)?, input.functor.as_deref(), *exhaustive, &cfg)
        }
        Command::Lift(i) => commands::lift(&load(&i.file)?, i.functor.as_deref(), &cfg),
        Command::Monoids(i) => commands::monoids(&load(&i.file)?, i.category.as_deref(), &cfg),
        Command::Fair(i) => commands::fair(&load(&i.file)?, i.category.as_deref(), &cfg),
        Command::LaxAudit(i) => commands::lax_audit(&load(&i.file)?, i.functor.as_deref()),
        Command::Search { max_objects, max_morphisms, max_seconds } => {
            commands::search(*max_objects, *max_morphisms, *max_seconds, &cfg)
        }
        Command::Fixtures { emit } => commands::emit_fixtures(emit),
    }
}

/// Parses arguments, runs the command, writes the report and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let name = cli.command.name();
    let (status, body) = match execute(&cli.command, cli.global.serial) {
        Ok(o) => (o.status, o.body),
        Err(e) => {
            eprintln!("unital {name}: {e}");
            (e.status(), serde_json::json!({"error": e.to_string()}))
        }
    };
    let text = render(name, status, body);
    let written = match &cli.global.out {
        Some(path) => std::fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("unital {name}: cannot write report: {e}");
        return 1;
    }
    status.exit_code()
}
