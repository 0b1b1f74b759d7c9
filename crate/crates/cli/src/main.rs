use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = casimir_cli::Cli::parse();
    match casimir_cli::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("casimir: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
