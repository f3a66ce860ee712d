use std::path::PathBuf;
use std::process::ExitCode;

use clap::{error::ErrorKind, Args, Parser, Subcommand};

use tricat_cli::{builtin, emit, load_scenario, run, validate, verify_report, CliError, Format, ReportDocument, ScenarioDocument};

#[derive(Parser)]
#[command(name = "tricat", version, about = "Check triangle-functor conditions on finite catalogs of complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario file.
    Check {
        scenario: PathBuf,
        #[command(flatten)]
        opts: RunOpts,
    },
    /// Run the built-in forgetful functor on the derived catalog of b → a.
    ExampleA2 {
        #[command(flatten)]
        opts: RunOpts,
    },
    /// Re-verify the witnesses of a saved JSON report and render it.
    Report {
        /// Saved report; reads stdin when absent.
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args)]
struct RunOpts {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Sampling seed; falls back to TRICAT_SEED, then the scenario's seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Override the scenario's field: `q` or `gf:<p>`.
    #[arg(long)]
    field: Option<String>,
    /// Enumerate Hom spaces exhaustively up to this many elements.
    #[arg(long)]
    sample_bound: Option<u64>,
}

const EXIT_USAGE: u8 = 1;
const EXIT_INCONSISTENT: u8 = 2;

fn apply(mut doc: ScenarioDocument, opts: &RunOpts) -> Result<ScenarioDocument, CliError> {
    let env_seed = match std::env::var("TRICAT_SEED") {
        Ok(s) => Some(
            s.trim()
                .parse::<u64>()
                .map_err(|_| CliError::Scenario(format!("TRICAT_SEED is not a u64: `{s}`")))?,
        ),
        Err(_) => None,
    };
    if let Some(seed) = opts.seed.or(env_seed) {
        doc.policy.seed = seed;
    }
    if let Some(f) = &opts.field {
        doc.field = f.clone();
    }
    if let Some(b) = opts.sample_bound {
        doc.policy.exhaustive_bound = b;
    }
    validate(&doc)?;
    Ok(doc)
}

/// Prints the report, then fails on broken implications or unreproducible witnesses.
fn finish(report: &ReportDocument, format: Format) -> Result<ExitCode, CliError> {
    print!("{}", emit(report, format));
    let mut problems: Vec<String> = report
        .violations()
        .into_iter()
        .map(|r| format!("implication violated: {r}"))
        .collect();
    for c in verify_report(report)? {
        if !c.reproduced {
            problems.push(format!("{} witness not reproduced: {}", c.condition, c.detail));
        }
    }
    for p in &problems {
        eprintln!("error: {p}");
    }
    Ok(if problems.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_INCONSISTENT)
    })
}

fn execute(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Check { scenario, opts } => {
            let doc = apply(load_scenario(&scenario)?, &opts)?;
            finish(&run(&doc)?, opts.format)
        }
        Command::ExampleA2 { opts } => {
            let doc = apply(builtin::a2(), &opts)?;
            finish(&run(&doc)?, opts.format)
        }
        Command::Report { input, format } => {
            let text = match &input {
                Some(p) => std::fs::read_to_string(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?,
                None => std::io::read_to_string(std::io::stdin()).map_err(|e| CliError::Io(format!("stdin: {e}")))?,
            };
            finish(&ReportDocument::from_json(&text)?, format)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                CliError::Core {
                    source: tricat_core::Error::Internal(_),
                    ..
                } => ExitCode::from(EXIT_INCONSISTENT),
                _ => ExitCode::from(EXIT_USAGE),
            }
        }
    }
}
