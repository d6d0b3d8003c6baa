//! Command-line front end for `ettk`.
//!
//! [`run`] parses arguments, executes one subcommand and returns the text to
//! print with the process exit status.

pub mod commands;
pub mod registry;
pub mod reproduce;

use std::ffi::OsString;
use std::fmt::Debug;

use clap::Parser;

pub use commands::{Cli, Command};
pub use registry::FixtureRegistry;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("fixture: {0}")]
    Fixture(String),
    #[error("{module}::{variant}: {message}")]
    Compute {
        module: &'static str,
        variant: String,
        message: String,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            _ => EXIT_FAILURE,
        }
    }

    pub(crate) fn compute<E: Debug + std::fmt::Display>(module: &'static str, e: E) -> Self {
        let dbg = format!("{e:?}");
        let variant = dbg
            .split(|c: char| !c.is_alphanumeric() && c != '_')
            .next()
            .unwrap_or_default()
            .to_string();
        CliError::Compute {
            module,
            variant,
            message: e.to_string(),
        }
    }
}

macro_rules! module_error {
    ($($ty:path => $module:literal),* $(,)?) => {
        $(impl From<$ty> for CliError {
            fn from(e: $ty) -> Self {
                CliError::compute($module, e)
            }
        })*
    };
}

module_error!(
    ettk::chartab::ChartabError => "chartab",
    ettk::blocks::BlockError => "blocks",
    ettk::etcheck::EtError => "etcheck",
    ettk::perm::PermError => "perm",
    ettk::cyclo::CycloError => "cyclo",
);

impl From<ettk::rank::RankError> for CliError {
    fn from(e: ettk::rank::RankError) -> Self {
        use ettk::rank::RankError::*;
        match e {
            MatrixSyntax(_) | MergeSyntax(_) => CliError::Usage(e.to_string()),
            _ => CliError::compute("rank", e),
        }
    }
}

/// What a command produced: a JSON document, its prose rendering, and
/// whether the checked object passed.
#[derive(Clone, Debug)]
pub struct Report {
    pub json: serde_json::Value,
    pub prose: String,
    pub ok: bool,
}

impl Report {
    pub fn new(json: serde_json::Value, prose: String) -> Self {
        Report { json, prose, ok: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let pretty = cli.pretty;
    match commands::execute(cli) {
        Ok(report) => {
            let mut stdout = if pretty {
                report.prose
            } else {
                serde_json::to_string_pretty(&report.json).expect("JSON values serialise")
            };
            stdout.push('\n');
            Outcome {
                code: if report.ok { EXIT_OK } else { EXIT_FAILURE },
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}
