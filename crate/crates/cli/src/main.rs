use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use cornermosaic::commands::{run, Cli};

fn main() -> ExitCode {
    let outcome = run(Cli::parse());
    print!("{}", outcome.stdout);
    let _ = std::io::stdout().flush();
    if !outcome.stderr.is_empty() {
        eprintln!("error: {}", outcome.stderr);
    }
    ExitCode::from(outcome.code as u8)
}
