use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod config;
mod error;

use commands::{Flags, Format};
use error::CliResult;

/// Demazure crystals, extremal vectors and character checks for
/// symmetrizable Kac-Moody algebras.
#[derive(Debug, Parser)]
#[command(name = "demcrystal", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List B_w(lambda) with weights.
    Demazure(Common),
    /// Solve for the extremal vector x_w.
    Extremal(Common),
    /// Generate the inequality system and test ampleness.
    Polytope(Common),
    /// Compare ch(B_w(lambda)) with D_w(e^lambda).
    Character(Common),
    /// Emit the crystal graph.
    Graph {
        #[command(flatten)]
        common: Common,
        /// Use the whole crystal B(lambda) instead of B_w(lambda).
        #[arg(long)]
        full: bool,
    },
    /// Check the config and print a summary.
    Validate(Common),
}

#[derive(Debug, Args)]
struct Common {
    #[arg(long)]
    config: String,
    /// Print coordinates as (..., x_2, x_1).
    #[arg(long)]
    paper_order: bool,
    /// Cross-check against a brute-force enumeration.
    #[arg(long)]
    verify: bool,
    /// Also run the independent extremal-vector oracle.
    #[arg(long)]
    oracle: bool,
    /// Treat exhausted budgets as failures.
    #[arg(long)]
    strict: bool,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

type Handler = fn(&config::Problem, Flags, &mut String) -> CliResult<()>;

fn run(
    common: &Common,
    full: bool,
    default_format: Format,
    handler: Handler,
    out: &mut String,
) -> CliResult<()> {
    let problem = config::load(&common.config)?.validate()?;
    let flags = Flags {
        paper_order: common.paper_order || problem.paper_order,
        verify: common.verify,
        oracle: common.oracle,
        strict: common.strict,
        full,
        format: common.format.unwrap_or(default_format),
    };
    handler(&problem, flags, out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, full, format, handler): (&Common, bool, Format, Handler) = match &cli.command {
        Command::Demazure(c) => (c, false, Format::Text, commands::demazure),
        Command::Extremal(c) => (c, false, Format::Text, commands::extremal),
        Command::Polytope(c) => (c, false, Format::Text, commands::polytope),
        Command::Character(c) => (c, false, Format::Text, commands::character),
        Command::Graph { common, full } => (common, *full, Format::Dot, commands::graph),
        Command::Validate(c) => (c, false, Format::Text, commands::validate),
    };
    let mut out = String::new();
    let result = run(common, full, format, handler, &mut out);
    print!("{out}");
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
