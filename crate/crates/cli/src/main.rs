use std::process::ExitCode;

use clap::Parser;

mod args;
mod commands;
mod failure;
mod report;

fn main() -> ExitCode {
    let cli = args::Cli::parse();
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("selfsim: {failure}");
            ExitCode::from(failure.code())
        }
    }
}
