//! Batch command-line interface.
//!
//! Exit codes: `0` success, `1` usage or configuration error, `2` a theorem
//! check or verification failed.

mod render;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::clans::{ClanError, RealFormSpec};
use crate::coxeter::CoxeterError;
use crate::engine::EngineError;
use crate::oracle::OracleError;

/// Largest `p + q` the CLI accepts.
pub const CLI_MAX_RANK: usize = 6;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILURE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Clan(#[from] ClanError),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// List every orbit with its dimension data.
    Orbits,
    /// The monoid action graph.
    WeakOrder,
    /// Hasse diagram of the closure order.
    ClosureOrder,
    /// Codimension-one closures reachable from CLAN.
    Jset { clan: String },
    /// Raising subword of WORD acting on CLAN.
    Minexpr { clan: String, word: String },
    /// The orbit whose closure is CLAN^cl times the Schubert closure of WORD.
    Demazure { clan: String, word: String },
    /// Run the theorem suite.
    Theorems,
    /// Orbits S and w with length(w) = codim S - 1 whose product has codim >= 2.
    Counterexample,
    /// Cross-check the clan model against the finite-field oracle.
    Verify,
}

#[derive(Debug, Parser)]
#[command(
    name = "korbits",
    version,
    about = "GL(p) x GL(q) orbit closures on full flags"
)]
struct Args {
    /// Signature as P,Q.
    #[arg(long, global = true, value_name = "P,Q")]
    pq: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Prime field order for `verify`.
    #[arg(long, global = true, default_value_t = 3, value_name = "Q")]
    field: u32,
    /// Write output here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

/// A validated invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub spec: RealFormSpec,
    pub command: Command,
    pub format: Format,
    pub field: u32,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(p: usize, q: usize, command: Command) -> Result<Self, CliError> {
        if p + q > CLI_MAX_RANK {
            return Err(CliError::Usage(format!(
                "p + q = {} exceeds the limit {CLI_MAX_RANK}",
                p + q
            )));
        }
        Ok(RunConfig {
            spec: RealFormSpec::new(p, q)?,
            command,
            format: Format::Text,
            field: 3,
            out: None,
        })
    }

    pub fn with_format(mut self, format: Format) -> Self {
        self.format = format;
        self
    }

    pub fn with_field(mut self, field: u32) -> Self {
        self.field = field;
        self
    }
}

/// Rendered output and the exit code it implies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub exit_code: i32,
}

fn parse_pq(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || {
        CliError::Usage(format!(
            "--pq expects P,Q with positive integers, got {s:?}"
        ))
    };
    let (p, q) = s.split_once(',').ok_or_else(bad)?;
    let p = p.trim().parse().map_err(|_| bad())?;
    let q = q.trim().parse().map_err(|_| bad())?;
    Ok((p, q))
}

/// Parses command-line arguments (including the program name) into a config.
pub fn parse_args<I, T>(args: I) -> Result<RunConfig, Result<String, String>>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let text = e.render().to_string();
            return Err(if e.use_stderr() { Err(text) } else { Ok(text) });
        }
    };
    let config = || -> Result<RunConfig, CliError> {
        let pq = args
            .pq
            .as_deref()
            .ok_or_else(|| CliError::Usage("--pq P,Q is required".into()))?;
        let (p, q) = parse_pq(pq)?;
        let mut cfg = RunConfig::new(p, q, args.command.clone())?
            .with_format(args.format)
            .with_field(args.field);
        cfg.out = args.out.clone();
        Ok(cfg)
    };
    config().map_err(|e| Err(format!("error: {e}")))
}

/// Executes a config and renders its output.
pub fn run(cfg: &RunConfig) -> Result<Outcome, CliError> {
    render::run(cfg)
}

/// Entry point used by the binary; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match parse_args(args) {
        Ok(cfg) => cfg,
        Err(Ok(help)) => {
            print!("{help}");
            return EXIT_OK;
        }
        Err(Err(usage)) => {
            eprintln!("{}", usage.trim_end());
            return EXIT_USAGE;
        }
    };
    let outcome = match run(&cfg) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    match &cfg.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &outcome.output) {
                eprintln!("error: {}", CliError::Io(e));
                return EXIT_USAGE;
            }
        }
        None => print!("{}", outcome.output),
    }
    outcome.exit_code
}
