//! Front end for the δ-derivation engine: descriptor parsing, job
//! validation, and deterministic JSON / table rendering.

pub mod descriptor;
pub mod job;
mod render;

use std::fs;
use std::path::{Path, PathBuf};

use deltaderiv::catalog::verify_all;
use deltaderiv::lie::{AlgebraSchema, ModuleSchema};
use deltaderiv::{
    scan, solve, ArithError, LieAlgebra, LieError, Representation, ScanOptions, SolveError,
    Validation,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use descriptor::{parse_descriptor, Descriptor, DescriptorError, ParseError};
pub use job::{Command, Format, JobSpec, Source};

/// Exit status for a successful run.
pub const EXIT_OK: i32 = 0;
/// A verification check failed.
pub const EXIT_VERIFY_FAILED: i32 = 1;
/// Bad flags, descriptors or input files.
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Descriptor(#[from] DescriptorError),
    #[error("{0}")]
    Job(String),
    #[error("invalid delta: {0}")]
    Delta(#[from] ArithError),
    #[error("{path}: {message}")]
    Input { path: PathBuf, message: String },
    #[error("cannot write {path}: {message}")]
    Output { path: PathBuf, message: String },
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Solve(SolveError::VerificationFailure { .. }) => EXIT_VERIFY_FAILED,
            _ => EXIT_INPUT,
        }
    }
}

/// The file format read by `--input` and written by `describe`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub descriptor: Option<DescriptorText>,
    pub algebra: AlgebraSchema,
    pub module: ModuleSchema,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescriptorText {
    pub algebra: String,
    pub module: String,
}

/// What a run produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Artifact {
    pub text: String,
    pub exit_code: i32,
}

struct Loaded {
    algebra: LieAlgebra,
    module: Representation,
    descriptor: Option<DescriptorText>,
}

fn load(source: &Source) -> Result<Loaded, CliError> {
    match source {
        Source::Descriptors { algebra, module } => {
            let d = parse_descriptor(algebra, module)?;
            let (a, m) = d.build()?;
            Ok(Loaded {
                algebra: a,
                module: m,
                descriptor: Some(DescriptorText {
                    algebra: d.algebra.to_string(),
                    module: d.module.to_string(),
                }),
            })
        }
        Source::File(path) => {
            let input_err = |message: String| CliError::Input {
                path: path.clone(),
                message,
            };
            let text = fs::read_to_string(path).map_err(|e| input_err(e.to_string()))?;
            let file: InputFile =
                serde_json::from_str(&text).map_err(|e| input_err(e.to_string()))?;
            let algebra = file
                .algebra
                .build(Validation::Full)
                .map_err(|e| input_err(format!("algebra: {e}")))?;
            let module = file
                .module
                .build(&algebra, Validation::Full)
                .map_err(|e| input_err(format!("module: {e}")))?;
            Ok(Loaded {
                algebra,
                module,
                descriptor: file.descriptor,
            })
        }
    }
}

/// Runs a job and renders its result; nothing is written.
pub fn execute(job: &JobSpec) -> Result<Artifact, CliError> {
    job.validate()?;
    if job.command == Command::Verify {
        let report = verify_all(job.max_n.unwrap_or(4));
        let exit_code = if report.all_passed() {
            EXIT_OK
        } else {
            EXIT_VERIFY_FAILED
        };
        return Ok(Artifact {
            text: render::verify(&report, job.format),
            exit_code,
        });
    }
    let loaded = load(job.source.as_ref().expect("validated"))?;
    let (algebra, module) = (&loaded.algebra, &loaded.module);
    let text = match job.command {
        Command::Solve => {
            let delta = job.delta.as_ref().expect("validated");
            let space = solve(algebra, module, delta, job.grading_element)?;
            render::solve(algebra, &space, job.format)
        }
        Command::Scan => {
            let report = scan(
                algebra,
                module,
                ScanOptions {
                    include_zero: job.include_zero,
                },
            )?;
            render::scan(&report, job.format)
        }
        Command::Describe => {
            let file = InputFile {
                descriptor: loaded.descriptor.clone(),
                algebra: AlgebraSchema::from_algebra(algebra),
                module: ModuleSchema::from_module(module),
            };
            render::describe(&file, algebra, module, job.format)
        }
        Command::Verify => unreachable!(),
    };
    Ok(Artifact {
        text,
        exit_code: EXIT_OK,
    })
}

fn write_output(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Output {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

/// Runs a job, writes the artifact to `--output` or standard output, and
/// returns the process exit code. Errors go to standard error.
pub fn run(job: &JobSpec) -> i32 {
    let result = execute(job).and_then(|artifact| {
        match &job.output {
            Some(path) => write_output(path, &artifact.text)?,
            None => print!("{}", artifact.text),
        }
        Ok(artifact.exit_code)
    });
    result.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        e.exit_code()
    })
}
