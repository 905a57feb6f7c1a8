mod args;
mod cmd;
mod output;
mod spins;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use thiserror::Error;

use args::{Cli, Command};
use output::{Format, Report};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Document(String),
    #[error("internal error: {0}")]
    Invariant(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Document(_) => 2,
            CliError::Invariant(_) => 3,
        }
    }
}

fn run(cli: Cli) -> Result<Report, CliError> {
    match cli.command {
        Command::Wigner(c) => cmd::wigner::run(c),
        Command::Poly(c) => cmd::poly::run(c),
        Command::Asym(c) => cmd::asym::run(c),
        Command::Statesum(a) => cmd::statesum::run(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match (cli.json, cli.csv) {
        (true, _) => Format::Json,
        (_, true) => Format::Csv,
        _ => Format::Table,
    };
    match spinnet::par::with_thread_cap(|| run(cli)) {
        Ok(report) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not worth a panic
            let _ = stdout.write_all(report.render(format).as_bytes());
            let _ = stdout.flush();
            match report.failure {
                Some(msg) => {
                    eprintln!("check failed: {msg}");
                    ExitCode::from(3)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
