use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use spreadlab_cli::app::{execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (stdout, stderr, code) = execute(&cli);
    if !stdout.is_empty() {
        std::io::stdout().write_all(stdout.as_bytes()).expect("stdout write");
    }
    if !stderr.is_empty() {
        std::io::stderr().write_all(stderr.as_bytes()).expect("stderr write");
    }
    ExitCode::from(code)
}
