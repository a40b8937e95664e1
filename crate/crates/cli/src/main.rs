mod args;
mod commands;
mod render;

use std::process::ExitCode;

use clap::Parser;
use serde_json::Value;

use args::{Cli, Command};
use commands::{CliError, Outcome, SCHEMA};

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let bits = commands::precision_bits()?;
    match &cli.command {
        Command::Analyze(a) => commands::analyze(a, bits),
        Command::Scan(a) => commands::scan(a, bits),
        Command::Twins(a) => commands::twins(a),
        Command::Verify(a) => commands::verify(a, bits),
        Command::Shen(a) => commands::shen(a, bits),
        Command::Families(a) => commands::families(a),
        Command::Regulator(a) => commands::regulator_cmd(a, bits),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            let mut value = out.value;
            if let Value::Object(map) = &mut value {
                map.insert("schema".into(), Value::from(SCHEMA));
                map.insert("pass".into(), Value::Bool(out.ok));
            }
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
            } else {
                print!("{}", render::text(&value));
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
