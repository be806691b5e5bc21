use clap::Parser;
use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(syncro_cli::run(syncro_cli::Cli::parse()))
}
