use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use deltaderiv::parse_rational;
use deltaderiv_cli::{run, Command, Format, JobSpec, Source, EXIT_INPUT};

/// Exact δ-derivations of Lie algebras with values in modules.
#[derive(Parser)]
#[command(name = "deltaderiv", version)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Basis of Der_δ(L, V) at one δ.
    Solve(Opts),
    /// Every rational δ where the dimension jumps.
    Scan(Opts),
    /// Check the solver against the closed-form catalog.
    Verify(Opts),
    /// Print the descriptors and JSON form of an algebra and module.
    Describe(Opts),
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Table,
}

#[derive(Args)]
struct Opts {
    /// Algebra descriptor, e.g. "sl2 o+ sl3".
    #[arg(long)]
    algebra: Option<String>,
    /// Module descriptor, e.g. "V(1) (x) natural".
    #[arg(long)]
    module: Option<String>,
    /// δ as p/q (no decimals).
    #[arg(long, allow_hyphen_values = true)]
    delta: Option<String>,
    /// Test δ = 0 as well (scan).
    #[arg(long)]
    include_zero: bool,
    /// Basis index of a diagonal grading element (solve).
    #[arg(long, value_name = "IDX")]
    grading_element: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
    /// JSON file with "algebra" and "module" (as written by describe).
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
    /// Largest V(n) checked by verify (default 4).
    #[arg(long, value_name = "N")]
    max_n: Option<usize>,
}

fn job(command: Command, o: Opts) -> Result<JobSpec, String> {
    let source = match (o.algebra, o.module, o.input) {
        (None, None, None) => None,
        (Some(algebra), Some(module), None) => Some(Source::Descriptors { algebra, module }),
        (None, None, Some(path)) => Some(Source::File(path)),
        (_, _, Some(_)) => return Err("--input cannot be combined with --algebra/--module".into()),
        _ => return Err("--algebra and --module go together".into()),
    };
    let delta = o
        .delta
        .map(|d| parse_rational(&d).map_err(|e| format!("invalid delta: {e}")))
        .transpose()?;
    Ok(JobSpec {
        command,
        source,
        delta,
        include_zero: o.include_zero,
        grading_element: o.grading_element,
        format: match o.format {
            FormatArg::Json => Format::Json,
            FormatArg::Table => Format::Table,
        },
        output: o.output,
        max_n: o.max_n,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, opts) = match cli.command {
        Sub::Solve(o) => (Command::Solve, o),
        Sub::Scan(o) => (Command::Scan, o),
        Sub::Verify(o) => (Command::Verify, o),
        Sub::Describe(o) => (Command::Describe, o),
    };
    let code = match job(command, opts) {
        Ok(job) => run(&job),
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_INPUT
        }
    };
    ExitCode::from(code as u8)
}
