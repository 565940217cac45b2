use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = aldous::Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let outcome = aldous::run(&cli, &mut out);
    let _ = out.flush();
    match outcome {
        aldous::Outcome::Success => ExitCode::SUCCESS,
        aldous::Outcome::CheckFailed(msg) => {
            eprintln!("aldous: {msg}");
            ExitCode::from(1)
        }
        aldous::Outcome::Usage(msg) => {
            eprintln!("aldous: {msg}");
            ExitCode::from(2)
        }
    }
}
