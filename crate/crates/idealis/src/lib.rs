//! IO, parameter files, seeded property suites and the command-line front end
//! for [`idealis_core`].

use std::fmt;

use serde_json::{json, Value};

pub mod checks;
pub mod cli;
pub mod gen;
pub mod json;
pub mod params;

/// Environment variable capping working clopen levels.
pub const MAX_LEVEL_ENV: &str = "IDEALIS_MAX_LEVEL";
pub const DEFAULT_MAX_LEVEL: u32 = 12;

/// Errors surfaced by the tool, each with a stable name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliError {
    /// A precondition of a core operation failed.
    Contract(idealis_core::Error),
    /// A parameter file was written under another coding convention.
    CodingMismatch {
        found: String,
    },
    UnknownSuite(String),
    /// Input that does not parse.
    Malformed(String),
}

impl CliError {
    pub fn malformed(msg: impl Into<String>) -> Self {
        CliError::Malformed(msg.into())
    }

    pub fn name(&self) -> &'static str {
        match self {
            CliError::Contract(e) => e.name(),
            CliError::CodingMismatch { .. } => "CodingMismatch",
            CliError::UnknownSuite(_) => "UnknownSuite",
            CliError::Malformed(_) => "MalformedInput",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Malformed(_) => 1,
            _ => 2,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "error": self.name(), "detail": self.to_string() })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Contract(e) => write!(f, "{e}"),
            CliError::CodingMismatch { found } => {
                write!(
                    f,
                    "parameter uses coding {found:?}, this tool uses {:?}",
                    idealis_core::CODING
                )
            }
            CliError::UnknownSuite(s) => write!(f, "unknown suite {s:?}"),
            CliError::Malformed(s) => f.write_str(s),
        }
    }
}

impl std::error::Error for CliError {}

impl From<idealis_core::Error> for CliError {
    fn from(e: idealis_core::Error) -> Self {
        CliError::Contract(e)
    }
}

/// Reads the level cap from the environment; unset means the default.
pub fn level_cap_from_env() -> Result<u32, CliError> {
    match std::env::var(MAX_LEVEL_ENV) {
        Ok(s) => s
            .trim()
            .parse::<u32>()
            .ok()
            .filter(|&v| v <= idealis_core::space::HARD_MAX_LEVEL)
            .ok_or_else(|| {
                CliError::malformed(format!(
                    "{MAX_LEVEL_ENV}={s:?} is not a level between 0 and {}",
                    idealis_core::space::HARD_MAX_LEVEL
                ))
            }),
        Err(_) => Ok(DEFAULT_MAX_LEVEL),
    }
}
