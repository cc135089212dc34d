use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};

use hyperoct_cli::cache::Cache;
use hyperoct_cli::suites::{self, Suite, SuiteError};

#[derive(Parser)]
#[command(name = "hyperoct", version, about = "Verify identities for the hyperoctahedral groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite at rank n.
    Verify {
        suite: Suite,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            let usage = e
                .downcast_ref::<SuiteError>()
                .is_some_and(|s| matches!(s, SuiteError::OutOfBounds { .. }));
            ExitCode::from(if usage { EXIT_USAGE } else { EXIT_FAILED })
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let Command::Verify { suite, n, format, out } = cli.command;
    let (min, max) = suite.bounds();
    if !suite.admits(n) {
        return Err(SuiteError::OutOfBounds { suite, n, min, max }.into());
    }
    let mut cache = Cache::from_env();
    if let Some(c) = cache.as_mut() {
        c.load();
    }
    let report = suites::run(suite, n)?;
    if let Some(c) = cache.as_mut() {
        c.save();
        for w in c.warnings() {
            eprintln!("warning: {w}");
        }
    }
    let rendered = match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    };
    match out {
        Some(path) => std::fs::write(&path, rendered)
            .with_context(|| format!("writing {}", path.display()))?,
        None => print!("{rendered}"),
    }
    Ok(if report.all_passed() { ExitCode::SUCCESS } else { ExitCode::from(EXIT_FAILED) })
}
