//! Command-line front end for `hipermotif`: matching, graph generation
//! and benchmark sweeps.

use std::io::Write;

pub mod args;
pub mod bench;
pub mod commands;
pub mod report;

pub use args::Cli;
pub use report::{mean_ci95, AblationRow, BenchReport, BenchRow};

/// A bad combination of flags; reported like a clap usage error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

/// Runs a parsed command, writing results to `stdout` unless `-o` is given.
pub fn execute(cli: &Cli, stdout: &mut dyn Write) -> anyhow::Result<()> {
    match &cli.command {
        args::Command::Match(a) => commands::cmd_match(a, stdout),
        args::Command::Generate(a) => commands::cmd_generate(a, stdout),
        args::Command::Bench(a) => bench::cmd_bench(a, stdout),
    }
}
