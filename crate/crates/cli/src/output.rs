use clap::ValueEnum;
use serde::Serialize;
use thiserror::Error;

/// Bumped whenever a result layout changes incompatibly.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] monodromy_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot serialize result: {0}")]
    Serialize(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) | CliError::Serialize(_) => 1,
        }
    }
}

pub type CliResult = Result<Output, CliError>;

/// A result in both renderings: compact JSON and human-readable text.
pub struct Output {
    json: String,
    text: String,
}

impl Output {
    pub fn new<T: Serialize + ?Sized>(value: &T, text: impl Into<String>) -> CliResult {
        Ok(Output { json: serde_json::to_string(value)?, text: text.into() })
    }

    pub fn render(&self, command: &str, format: Format) -> String {
        match format {
            Format::Text => self.text.trim_end().to_string(),
            Format::Json => format!(
                "{{\"schema_version\":{SCHEMA_VERSION},\"command\":{},\"result\":{}}}",
                serde_json::Value::String(command.into()),
                self.json
            ),
        }
    }
}

/// One line per item.
pub fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().collect::<Vec<_>>().join("\n")
}
