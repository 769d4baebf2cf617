use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use unproj_cli::commands::{self, Verbosity};
use unproj_cli::export::parse_dialect;
use unproj_cli::{CliError, Format, Result};
use unproj_core::verify::Suite;

/// Generators, verification suites and CAS scripts for the type II_1 unprojection.
#[derive(Parser)]
#[command(name = "unproj", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write all generators of I_Y for one n.
    Generate {
        #[arg(long)]
        n: usize,
        /// plain, json, m2-dialect or sgr-dialect.
        #[arg(long, default_value = "plain")]
        format: Format,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the verification suites; exits 0 iff every check passes.
    ///
    /// UNPROJ_VERBOSITY selects quiet, normal or detail text output.
    Verify {
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run a single suite.
        #[arg(long)]
        suite: Option<Suite>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
    },
    /// Apply a substitution document to every generator.
    Substitute {
        /// JSON file, or the name of a shipped document.
        #[arg(long)]
        spec: String,
        #[arg(long, default_value = "plain")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a self-contained Macaulay2 or Singular script.
    ExportCas {
        #[command(flatten)]
        source: Source,
        /// m2-dialect (cas-script-A) or sgr-dialect (cas-script-B).
        #[arg(long, value_parser = parse_dialect)]
        dialect: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    spec: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Generate { n, format, out } => {
            commands::write_output(out.as_deref(), &commands::generate(n)?.render(format))?;
        }
        Command::Verify { n_max, seed, suite, report } => {
            let verbosity = Verbosity::from_env()?;
            let reports = commands::verify(n_max, seed, suite)?;
            let text = match report {
                ReportFormat::Text => commands::render_reports_text(&reports, verbosity),
                ReportFormat::Json => commands::render_reports_json(&reports),
            };
            commands::write_output(None, &text)?;
            return Ok(reports.iter().all(|r| r.passed()));
        }
        Command::Substitute { spec, format, out } => {
            let result = commands::substitute(&commands::load_spec(&spec)?)?;
            for w in &result.warnings {
                eprintln!("warning: {w}");
            }
            commands::write_output(out.as_deref(), &result.bundle.render(format))?;
        }
        Command::ExportCas { source, dialect, out } => {
            let bundle = match (source.n, source.spec) {
                (Some(n), _) => commands::generate(n)?,
                (None, Some(spec)) => commands::substitute(&commands::load_spec(&spec)?)?.bundle,
                (None, None) => return Err(CliError::Usage("one of --n or --spec is required".into())),
            };
            commands::write_output(out.as_deref(), &bundle.render(dialect))?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
