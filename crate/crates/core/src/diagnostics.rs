use std::fmt;

use serde::Serialize;

/// Machine-readable diagnostic codes.
pub mod codes {
    pub const NONINTEGRAL_C: &str = "NONINTEGRAL_C";
    pub const WEIL_FAIL: &str = "WEIL_FAIL";
    pub const NEGATIVE_COUNT: &str = "NEGATIVE_COUNT";
    pub const SYMMETRY_FAIL: &str = "SYMMETRY_FAIL";
    pub const SERRE_TABLE_MISMATCH: &str = "SERRE_TABLE_MISMATCH";
    pub const ORACLE_MISMATCH: &str = "ORACLE_MISMATCH";
    pub const BUDGET_LIMITED: &str = "BUDGET_LIMITED";
    pub const SINGULAR_POINT: &str = "SINGULAR_POINT";
    pub const GENUS_MISMATCH: &str = "GENUS_MISMATCH";
    pub const SUBSEQUENCE_MISMATCH: &str = "SUBSEQUENCE_MISMATCH";
    pub const SERRE_UNKNOWN: &str = "SERRE_UNKNOWN";
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Info,
    Warning,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub level: Level,
    pub code: String,
    pub message: String,
}

impl Diagnostic {
    pub fn new(level: Level, code: &str, message: impl Into<String>) -> Self {
        Diagnostic {
            level,
            code: code.to_string(),
            message: message.into(),
        }
    }

    pub fn info(code: &str, message: impl Into<String>) -> Self {
        Self::new(Level::Info, code, message)
    }

    pub fn warning(code: &str, message: impl Into<String>) -> Self {
        Self::new(Level::Warning, code, message)
    }

    pub fn error(code: &str, message: impl Into<String>) -> Self {
        Self::new(Level::Error, code, message)
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let level = match self.level {
            Level::Info => "info",
            Level::Warning => "warning",
            Level::Error => "error",
        };
        write!(f, "{level}[{}]: {}", self.code, self.message)
    }
}
