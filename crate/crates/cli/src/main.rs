mod args;
mod commands;
mod output;
mod published;

use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use farey_index::stats::Workers;

use args::{Cli, Command, Format};
use commands::CmdError;
use output::{emit, RunManifest};

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RUNTIME: u8 = 3;

fn default_format(command: &Command) -> Format {
    match command {
        Command::Tables(_) | Command::Converge(_) | Command::Orbit(_) => Format::Csv,
        _ => Format::Text,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.workers == 0 {
        eprintln!("error: --workers must be at least 1");
        return ExitCode::from(EXIT_USAGE);
    }
    let workers = Workers::new(cli.workers);
    let started = Instant::now();
    let result = match &cli.command {
        Command::Identities(a) => commands::identities(a, workers),
        Command::Constants(a) => commands::constants(a),
        Command::Tables(a) => commands::tables(a),
        Command::Converge(a) => commands::converge(a, workers),
        Command::Orbit(a) => commands::orbit(a),
        Command::Visible(a) => commands::visible(a),
    };
    let output = match result {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(match e {
                CmdError::Usage(_) => EXIT_USAGE,
                CmdError::Runtime(_) => EXIT_RUNTIME,
            });
        }
    };
    let manifest = RunManifest {
        command: cli.command.name(),
        parameters: serde_json::to_value(&cli.command).unwrap_or_default(),
        version: env!("CARGO_PKG_VERSION"),
        workers: cli.workers,
        duration_ms: started.elapsed().as_millis(),
    };
    let format = cli.format.unwrap_or_else(|| default_format(&cli.command));
    if let Err(e) = emit(&output, format, &manifest, cli.out.as_deref()) {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_RUNTIME);
    }
    if output.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY)
    }
}
