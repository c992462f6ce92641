mod commands;
mod input;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use output::{emit, EXIT_USAGE};

#[derive(Parser)]
#[command(name = "strongprops", version, about = "Strong Arnold, Strong Spectral and Strong Multiplicity Property toolkit")]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Decide the SAP, SSP or SMP for a matrix, or re-check a saved report.
    Verify(commands::verify::VerifyArgs),
    /// Lower and upper bounds on q(G) with their justifications.
    Bounds(commands::bounds::BoundsArgs),
    /// Place q(G) relative to |G|.
    Classify(commands::classify::ClassifyArgs),
    /// Lift a certificate matrix to a supergraph.
    Lift(commands::lift::LiftArgs),
    /// List, show, export or check certificates.
    #[command(subcommand)]
    Corpus(commands::corpus::CorpusCommand),
    /// Gershgorin sufficient test for the SSP.
    Gersh(commands::gersh::GershArgs),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let run = match cli.command {
        Command::Verify(a) => commands::verify::run(&a),
        Command::Bounds(a) => commands::bounds::run(&a),
        Command::Classify(a) => commands::classify::run(&a),
        Command::Lift(a) => commands::lift::run(&a),
        Command::Corpus(c) => commands::corpus::run(&c),
        Command::Gersh(a) => commands::gersh::run(&a),
    };
    match run.and_then(|r| emit(&r, cli.format, cli.out.as_deref())) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
