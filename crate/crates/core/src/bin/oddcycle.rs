use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use oddcycle::cli::{run, Cli, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli);
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &outcome.text) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(EXIT_USAGE as u8);
        }
    } else if outcome.code == 0 || !outcome.text.starts_with("error:") {
        let _ = std::io::stdout().write_all(outcome.text.as_bytes());
    } else {
        let _ = std::io::stderr().write_all(outcome.text.as_bytes());
    }
    ExitCode::from(outcome.code as u8)
}
