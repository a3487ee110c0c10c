mod commands;
mod config;

use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::{json, Value};

use commands::{Failure, Outcome, Status};
use config::{Cli, Command, FileConfig, Format, RunConfig};

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Adjacency => "adjacency",
        Command::System => "system",
        Command::Idempotents => "idempotents",
        Command::VerifyQ5 => "verify-q5",
        Command::Automorphisms => "automorphisms",
        Command::Groebner { .. } => "groebner",
    }
}

fn run(cli: &Cli, cfg: &RunConfig) -> Result<Outcome, Failure> {
    commands::check_format(cfg, matches!(cli.command, Command::Adjacency))?;
    match &cli.command {
        Command::Adjacency => commands::adjacency(cfg),
        Command::System => commands::system(cfg),
        Command::Idempotents => commands::idempotents(cfg),
        Command::VerifyQ5 => commands::verify_q5(cfg),
        Command::Automorphisms => commands::automorphisms(cfg),
        Command::Groebner { input } => commands::groebner(cfg, input),
    }
}

fn envelope(command: &str, cfg: Option<&RunConfig>, status: Status) -> Value {
    json!({
        "tool": "qring",
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "config": cfg,
        "status": status,
        "exit_code": status.exit_code(),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => ExitCode::SUCCESS,
                _ => ExitCode::from(Status::InvalidInput.exit_code() as u8),
            };
        }
    };
    let name = command_name(&cli.command);
    let json_requested = cli.flags.format == Some(Format::Json);

    let file = match &cli.flags.config {
        Some(path) => match FileConfig::load(path) {
            Ok(f) => f,
            Err(message) => {
                return report_failure(name, None, json_requested, &Failure::invalid(message))
            }
        },
        None => FileConfig::default(),
    };
    let cfg = RunConfig::resolve(&cli.flags, file);

    let start = Instant::now();
    let outcome = match run(&cli, &cfg) {
        Ok(o) => o,
        Err(f) => return report_failure(name, Some(&cfg), cfg.format == Format::Json, &f),
    };
    let elapsed = start.elapsed();

    match cfg.format {
        Format::Json => {
            let mut v = envelope(name, Some(&cfg), outcome.status);
            v["checks"] = json!(outcome.checks);
            v["result"] = outcome.result;
            if cli.flags.timing {
                v["duration_ms"] = json!(elapsed.as_secs_f64() * 1e3);
            }
            println!("{}", serde_json::to_string_pretty(&v).expect("json"));
        }
        Format::Csv => print!("{}", outcome.csv.unwrap_or_default()),
        Format::Text => {
            print!("{}", outcome.text);
            if cli.flags.timing {
                println!("duration: {:.3} ms", elapsed.as_secs_f64() * 1e3);
            }
        }
    }
    if outcome.status != Status::Pass {
        eprintln!("qring: {}", status_message(outcome.status));
    }
    ExitCode::from(outcome.status.exit_code() as u8)
}

fn status_message(s: Status) -> &'static str {
    match s {
        Status::Pass => "ok",
        Status::VerificationFailed => "verification failed",
        Status::BudgetExhausted => "budget exhausted",
        Status::InvalidInput => "invalid input",
    }
}

fn report_failure(command: &str, cfg: Option<&RunConfig>, json: bool, f: &Failure) -> ExitCode {
    if json {
        let mut v = envelope(command, cfg, f.status);
        v["error"] = json!(f.message);
        println!("{}", serde_json::to_string_pretty(&v).expect("json"));
    }
    eprintln!("qring: {}: {}", status_message(f.status), f.message);
    ExitCode::from(f.status.exit_code() as u8)
}
