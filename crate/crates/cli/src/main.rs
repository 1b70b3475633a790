use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use ferrers::linalg::Field;

mod commands;
mod input;

pub const EXIT_OK: u8 = 0;
pub const EXIT_VALIDATION: u8 = 2;
pub const EXIT_HYPOTHESIS: u8 = 3;
pub const EXIT_MISMATCH: u8 = 4;
pub const EXIT_CONDITION: u8 = 5;

#[derive(Parser, Debug)]
#[command(name = "ferrers", version, about = "Cellular resolutions of generalized Ferrers ideals")]
struct Cli {
    /// Coefficient field: a prime `p` or `Q`. Repeatable or comma separated.
    #[arg(
        long = "field",
        global = true,
        env = "FERRERS_DEFAULT_FIELDS",
        value_delimiter = ',',
        default_value = "2,32003"
    )]
    fields: Vec<Field>,

    /// Which brute-force Betti oracle to cross-check against.
    #[arg(long, global = true, value_enum, default_value_t = OracleChoice::Both)]
    oracle: OracleChoice,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Worker threads for the parallel checks.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OracleChoice {
    Koszul,
    Taylor,
    Both,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExportKind {
    Complex,
    Chain,
    Betti,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a shape and print its diagram and generators.
    Shape { file: PathBuf },
    /// Build the cellular free complex of a shape.
    Resolve {
        file: PathBuf,
        /// Use the labels specialized by y_i -> x_i.
        #[arg(long)]
        specialize: bool,
    },
    /// Betti numbers of a shape or ideal, cross-checked against the oracles.
    Betti {
        file: PathBuf,
        #[arg(long)]
        specialize: bool,
    },
    /// Apply y_j -> x_sigma(j) to a shape or ideal.
    Specialize {
        file: PathBuf,
        /// Targets sigma(1),...,sigma(m); identity when omitted.
        #[arg(long, value_delimiter = ',')]
        sigma: Option<Vec<usize>>,
    },
    /// Run every consistency check on a shape, ideal, or complex.
    Verify {
        file: PathBuf,
        #[arg(long)]
        specialize: bool,
    },
    /// Edge-ideal analysis of a graph.
    Graph {
        #[command(subcommand)]
        action: GraphAction,
    },
    /// Export a complex, chain complex, Betti table, or DOT picture.
    Export {
        file: PathBuf,
        #[arg(long)]
        specialize: bool,
        #[arg(long, value_enum, default_value_t = ExportKind::Complex)]
        what: ExportKind,
    },
}

#[derive(Subcommand, Debug)]
enum GraphAction {
    /// Closed-form invariants with oracle confirmation.
    Analyze { file: PathBuf },
    /// Vertex ordering, derived shape, and condition check.
    Shape { file: PathBuf },
    /// Threshold certificate and the threshold shape.
    Threshold { file: PathBuf },
}

/// Settings shared by every command.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub fields: Vec<Field>,
    pub oracle: OracleChoice,
    pub format: Format,
}

/// What a command prints and how the process exits.
pub struct Outcome {
    pub code: u8,
    pub text: String,
    pub json: serde_json::Value,
}

fn dispatch(command: Command, cfg: &RunConfig) -> Result<Outcome> {
    match command {
        Command::Shape { file } => commands::shape(&file),
        Command::Resolve { file, specialize } => commands::resolve(&file, specialize),
        Command::Betti { file, specialize } => commands::betti(&file, specialize, cfg),
        Command::Specialize { file, sigma } => commands::specialize(&file, sigma),
        Command::Verify { file, specialize } => commands::verify(&file, specialize, cfg),
        Command::Graph { action } => match action {
            GraphAction::Analyze { file } => commands::graph_analyze(&file, cfg),
            GraphAction::Shape { file } => commands::graph_shape(&file),
            GraphAction::Threshold { file } => commands::graph_threshold(&file, cfg),
        },
        Command::Export {
            file,
            specialize,
            what,
        } => commands::export(&file, specialize, what),
    }
}

fn emit(outcome: &Outcome, format: Format, out: Option<&PathBuf>) -> Result<()> {
    let body = match format {
        Format::Json => serde_json::to_string_pretty(&outcome.json)? + "\n",
        Format::Text => outcome.text.clone(),
    };
    match out {
        Some(path) => fs::write(path, body).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(body.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global() {
            eprintln!("warning: could not size the thread pool: {e}");
        }
    }
    let cfg = RunConfig {
        fields: cli.fields,
        oracle: cli.oracle,
        format: cli.format,
    };
    if cfg.fields.is_empty() {
        eprintln!("error: at least one field is required");
        return ExitCode::from(EXIT_VALIDATION);
    }
    let outcome = match dispatch(cli.command, &cfg) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(EXIT_VALIDATION);
        }
    };
    if let Err(e) = emit(&outcome, cfg.format, cli.out.as_ref()) {
        eprintln!("error: {e:#}");
        return ExitCode::from(EXIT_VALIDATION);
    }
    ExitCode::from(outcome.code)
}
