use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use koszul_core::frontend::{
    emit_report, parse_spec, run_analysis, AnalysisError, AnalysisOptions, Check, Format,
};
use koszul_core::Execution;

/// Exact Koszulity, Gorenstein, potential and PBW analysis of quadratic algebras.
#[derive(Parser)]
#[command(name = "koszul", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze an algebra spec file.
    Analyze {
        file: PathBuf,
        /// Total degree of the Koszulity certificate (default: derived from A!).
        #[arg(long)]
        max_degree: Option<usize>,
        /// Comma-separated checks: dims, koszul, gorenstein, potential, pbw,
        /// curved, lie, ce, l-complex (default: the file's options block, else all).
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<Check>>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Run every inner loop on the calling thread.
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Machine,
}

const EXIT_INPUT: u8 = 1;
const EXIT_INCONSISTENT: u8 = 2;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_INPUT)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let Command::Analyze {
        file,
        max_degree,
        checks,
        format,
        out,
        sequential,
    } = cli.command;

    let text = match std::fs::read_to_string(&file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", file.display());
            return ExitCode::from(EXIT_INPUT);
        }
    };
    let spec = match parse_spec(&text) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{}:{e}", file.display());
            return ExitCode::from(EXIT_INPUT);
        }
    };
    let options = AnalysisOptions {
        max_degree,
        checks,
        exec: if sequential {
            Execution::Sequential
        } else {
            Execution::default()
        },
    };
    let report = match run_analysis(&spec, &options) {
        Ok(r) => r,
        Err(e @ AnalysisError::Inconsistency { .. }) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INCONSISTENT);
        }
        Err(e) => {
            eprintln!("{}: {e}", file.display());
            return ExitCode::from(EXIT_INPUT);
        }
    };
    let rendered = emit_report(
        &report,
        match format {
            OutputFormat::Text => Format::Text,
            OutputFormat::Machine => Format::Machine,
        },
    );
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, rendered) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_INPUT);
            }
        }
        None => print!("{rendered}"),
    }
    ExitCode::SUCCESS
}
