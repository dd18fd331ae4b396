//! Library half of the `dualbern` command-line tool.
//!
//! The binary is a thin wrapper: it parses flags with clap (usage problems
//! exit with code 2) and calls [`run`], which dispatches to the subcommand
//! implementations in [`commands`] and writes the rendered output to stdout
//! or `--out <path>`.
//!
//! Exit-code contract: 0 on success, 1 when a check suite finds a tolerance
//! violation or a computation fails at runtime, 2 for usage errors.

use std::fmt;

pub mod args;
pub mod commands;
pub mod output;

use args::{Cli, Command};

/// Failure modes of a subcommand, carrying the process exit code.
#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    /// Flags were syntactically valid but semantically unusable.
    Usage(String),
    /// A check suite ran to completion and found violations.
    Check(String),
    /// A computation or I/O operation failed.
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Check(_) | CliError::Runtime(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Check(msg) | CliError::Runtime(msg) => {
                write!(f, "{msg}")
            }
        }
    }
}

impl std::error::Error for CliError {}

/// Execute a parsed command line.
pub fn run(cli: Cli) -> Result<(), CliError> {
    let rendered = match &cli.command {
        Command::Eval(a) => commands::cmd_eval(a)?,
        Command::Table(a) => commands::cmd_table(a)?,
        Command::Bench(a) => commands::cmd_bench(a)?,
        Command::Check(a) => {
            let (text, failing) = commands::cmd_check(a)?;
            output::write_output(cli.out.as_deref(), &text)?;
            return if failing == 0 {
                Ok(())
            } else {
                Err(CliError::Check(format!(
                    "{failing} identity check(s) exceeded tolerance"
                )))
            };
        }
        Command::Approx(a) => commands::cmd_approx(a)?,
    };
    output::write_output(cli.out.as_deref(), &rendered)
}
