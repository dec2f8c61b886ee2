use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let args = qsl_cli::cli::Args::parse();
    match qsl_cli::cli::execute(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qsl: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
