mod args;
mod commands;
mod output;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

use args::Cli;
use commands::Failure;
use output::{Output, Status};

/// Writes to stdout, treating a closed pipe as success.
fn emit(text: &str) {
    let mut stdout = io::stdout().lock();
    let _ = stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush());
}

fn print_json(out: &Output, seed: u64) {
    let text = serde_json::to_string_pretty(&out.envelope(seed)).expect("envelope serializes");
    emit(&format!("{text}\n"));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let seed = cli.global.seed;
    let out = match commands::run(&cli.command, seed) {
        Ok(out) => out,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Domain(msg)) => {
            let mut out = Output::ok(serde_json::json!({ "error": msg }));
            out.status = Status::Error;
            print_json(&out, seed);
            return ExitCode::from(1);
        }
    };
    if cli.global.csv {
        match out.table.as_ref().map(|t| t.to_csv()) {
            Some(Ok(text)) => emit(&text),
            Some(Err(e)) => {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            None => {
                eprintln!("error: this command has no tabular output; drop --csv");
                return ExitCode::from(2);
            }
        }
    } else {
        print_json(&out, seed);
    }
    match out.status {
        Status::Ok => ExitCode::SUCCESS,
        Status::Error => ExitCode::from(1),
    }
}
