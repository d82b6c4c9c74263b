use std::io;
use std::process::ExitCode;

use clap::{CommandFactory, Parser};
use hipermotif_cli::{execute, Cli, UsageError};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    match execute(&cli, &mut stdout.lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            if let Some(usage) = err.downcast_ref::<UsageError>() {
                let mut cmd = Cli::command();
                let sub = cli.command.name();
                let cmd = cmd.find_subcommand_mut(sub).expect("known subcommand");
                cmd.error(clap::error::ErrorKind::MissingRequiredArgument, usage).exit();
            }
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
