//! CLI errors mapped to documented exit codes.

use std::fmt;

/// Exit codes: 0 ok, 2 parse, 3 invalid polygon/construction, 4 radius,
/// 5 IO.
#[derive(Clone, Debug)]
pub enum CliError {
    /// Unreadable or malformed input (file, JSON, arguments).
    Parse(String),
    /// Polygon fails validation, or a geometric construction is
    /// infeasible.
    InvalidPolygon(String),
    /// Disc radius outside the admissible range.
    Radius(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::InvalidPolygon(_) => 3,
            CliError::Radius(_) => 4,
            CliError::Io(_) => 5,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::InvalidPolygon(m) => write!(f, "invalid polygon: {m}"),
            CliError::Radius(m) => write!(f, "radius error: {m}"),
            CliError::Io(m) => write!(f, "io error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}
