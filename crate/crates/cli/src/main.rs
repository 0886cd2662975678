use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use seaweed_cli::args::{Cli, Command};
use seaweed_cli::commands::{self, CliError, Outcome};

fn configure_threads() -> Result<(), CliError> {
    if let Ok(v) = std::env::var("SEAWEED_THREADS") {
        let n: usize = v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("SEAWEED_THREADS must be a positive integer, got {v:?}")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Failed(e.to_string()))?;
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    configure_threads()?;
    match &cli.command {
        Command::Check(a) => commands::check(a),
        Command::Spectrum(a) => commands::spectrum(a),
        Command::Enumerate(a) => commands::enumerate(a),
        Command::Oracle(a) => commands::oracle(a),
        Command::Render(a) => commands::render(a),
    }
}

fn out_path(cli: &Cli) -> Option<&std::path::Path> {
    match &cli.command {
        Command::Check(a) | Command::Spectrum(a) | Command::Render(a) => a.out.as_deref(),
        Command::Oracle(a) => a.seaweed.out.as_deref(),
        Command::Enumerate(a) => a.out.as_deref(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome { text, code }) => {
            let written = match out_path(&cli) {
                Some(p) => std::fs::write(p, &text).map_err(|e| format!("{}: {e}", p.display())),
                None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
