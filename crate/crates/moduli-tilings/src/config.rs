//! Run configuration shared by the command-line binary and the examples.
//!
//! Defaults can be overridden by a key-value config file (`key = value`, one
//! per line, `#` comments) and then by command-line flags. The output
//! directory falls back to the `MODULI_TILINGS_OUTDIR` environment variable.

use std::path::PathBuf;
use std::str::FromStr;

use thiserror::Error;

pub const OUTDIR_ENV: &str = "MODULI_TILINGS_OUTDIR";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("malformed config line {line}: expected `key = value`")]
    MalformedLine { line: usize },
    #[error("unknown config key `{0}`")]
    UnknownKey(String),
    #[error("invalid value for `{key}`: {value}")]
    InvalidValue { key: String, value: String },
    #[error("unknown output format `{0}` (expected text, json, dot or csv)")]
    UnknownFormat(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Dot,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            "dot" => Ok(OutputFormat::Dot),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(ConfigError::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    /// Enumeration limit for glued cell complexes.
    pub max_complex_n: usize,
    /// Enumeration limit for bracketing posets and truncation checks.
    pub max_poset_n: usize,
    /// Numeric tolerance for tie detection and sphere-slice checks.
    pub epsilon: f64,
    /// Seed for the chamber sampling runs.
    pub seed: u64,
    pub format: OutputFormat,
    /// Thread cap for internal parallelism; `None` leaves the default.
    pub threads: Option<usize>,
    pub outdir: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_complex_n: 4,
            max_poset_n: 7,
            epsilon: 1e-9,
            seed: 0,
            format: OutputFormat::Text,
            threads: None,
            outdir: std::env::var_os(OUTDIR_ENV).map(PathBuf::from),
        }
    }
}

impl RunConfig {
    /// Applies `key = value` lines from a config file on top of `self`.
    pub fn apply_file(&mut self, contents: &str) -> Result<(), ConfigError> {
        for (i, raw) in contents.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or(ConfigError::MalformedLine { line: i + 1 })?;
            let (key, value) = (key.trim(), value.trim());
            let invalid = || ConfigError::InvalidValue {
                key: key.to_string(),
                value: value.to_string(),
            };
            match key {
                "max_complex_n" => self.max_complex_n = value.parse().map_err(|_| invalid())?,
                "max_poset_n" => self.max_poset_n = value.parse().map_err(|_| invalid())?,
                "epsilon" => self.epsilon = value.parse().map_err(|_| invalid())?,
                "seed" => self.seed = value.parse().map_err(|_| invalid())?,
                "format" => self.format = value.parse()?,
                "threads" => self.threads = Some(value.parse().map_err(|_| invalid())?),
                "outdir" => self.outdir = Some(PathBuf::from(value)),
                other => return Err(ConfigError::UnknownKey(other.to_string())),
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_config_file() {
        let mut config = RunConfig::default();
        config
            .apply_file("max_complex_n = 3\nformat = json # trailing comment\n\nseed=42\n")
            .unwrap();
        assert_eq!(config.max_complex_n, 3);
        assert_eq!(config.format, OutputFormat::Json);
        assert_eq!(config.seed, 42);
    }

    #[test]
    fn rejects_unknown_keys_and_bad_values() {
        let mut config = RunConfig::default();
        assert_eq!(
            config.apply_file("nope = 1").unwrap_err(),
            ConfigError::UnknownKey("nope".into())
        );
        assert!(matches!(
            config.apply_file("seed = banana").unwrap_err(),
            ConfigError::InvalidValue { .. }
        ));
        assert_eq!(
            config.apply_file("format = yaml").unwrap_err(),
            ConfigError::UnknownFormat("yaml".into())
        );
    }
}
