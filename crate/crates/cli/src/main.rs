//! `qlcm` — exact-arithmetic workbench for least common multiples of
//! q-arithmetic progressions.
//!
//! Exit codes: 0 when every requested check passes, 1 when a mathematical
//! counterexample is found, 2 on usage or domain errors.

use clap::Parser;

mod eval;
mod examples;
mod opts;
mod render;
mod table;
mod verify;

use opts::{Cli, Command};

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => std::process::exit(code),
        Err(message) => {
            eprintln!("error: {message}");
            std::process::exit(2);
        }
    }
}

fn run(cli: &Cli) -> Result<i32, String> {
    match &cli.command {
        Command::Eval { op } => eval::run(cli, op),
        Command::Verify { suites } => verify::run(cli, suites),
        Command::Table => table::run(cli),
        Command::Examples => examples::run(cli),
    }
}
