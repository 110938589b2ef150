//! Tool configuration: defaults, `key = value` files and overrides.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use crate::tolerance::Tolerances;

/// Environment variable naming an optional configuration file.
pub const CONFIG_ENV: &str = "AGILE_CONFIG";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, ConfigError> {
        match s.trim().to_ascii_lowercase().as_str() {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(ConfigError(format!("unknown output format `{other}`"))),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToolConfig {
    pub residual_tol: f64,
    pub singular_tol: f64,
    pub structure_tol: f64,
    pub grid_n: usize,
    /// `None` selects each command's own default.
    pub output_format: Option<OutputFormat>,
}

impl Default for ToolConfig {
    fn default() -> Self {
        ToolConfig {
            residual_tol: 1e-6,
            singular_tol: 1e-7,
            structure_tol: 1e-7,
            grid_n: 64,
            output_format: None,
        }
    }
}

/// Explicit settings that take precedence over the file.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ConfigOverrides {
    pub residual_tol: Option<f64>,
    pub singular_tol: Option<f64>,
    pub structure_tol: Option<f64>,
    pub grid_n: Option<usize>,
    pub output_format: Option<OutputFormat>,
}

fn parse_tol(key: &str, value: &str) -> Result<f64, ConfigError> {
    let x: f64 = value
        .parse()
        .map_err(|_| ConfigError(format!("{key}: not a number: `{value}`")))?;
    check_tol(key, x)
}

fn check_tol(key: &str, x: f64) -> Result<f64, ConfigError> {
    if !(x.is_finite() && x > 0.0) {
        return Err(ConfigError(format!("{key}: must be positive and finite")));
    }
    Ok(x)
}

fn parse_grid(value: &str) -> Result<usize, ConfigError> {
    let n: usize = value
        .parse()
        .map_err(|_| ConfigError(format!("grid_n: not an integer: `{value}`")))?;
    check_grid(n)
}

fn check_grid(n: usize) -> Result<usize, ConfigError> {
    if n < 8 {
        return Err(ConfigError("grid_n: must be at least 8".into()));
    }
    Ok(n)
}

impl ToolConfig {
    /// Parses `key = value` lines on top of the defaults. Blank lines and
    /// lines starting with `#` are ignored; unknown keys are errors.
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut cfg = ToolConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| ConfigError(format!("line {}: expected `key = value`", lineno + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "residual_tol" => cfg.residual_tol = parse_tol(key, value)?,
                "singular_tol" => cfg.singular_tol = parse_tol(key, value)?,
                "structure_tol" => cfg.structure_tol = parse_tol(key, value)?,
                "grid_n" => cfg.grid_n = parse_grid(value)?,
                "output_format" => cfg.output_format = Some(value.parse()?),
                other => {
                    return Err(ConfigError(format!("line {}: unknown key `{other}`", lineno + 1)))
                }
            }
        }
        Ok(cfg)
    }

    pub fn from_file(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ConfigError(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Defaults, then the file named by `AGILE_CONFIG` if it is set.
    pub fn from_env() -> Result<Self, ConfigError> {
        match std::env::var_os(CONFIG_ENV) {
            Some(p) if !p.is_empty() => Self::from_file(Path::new(&p)),
            _ => Ok(ToolConfig::default()),
        }
    }

    pub fn with_overrides(mut self, o: &ConfigOverrides) -> Result<Self, ConfigError> {
        if let Some(x) = o.residual_tol {
            self.residual_tol = check_tol("--tol-residual", x)?;
        }
        if let Some(x) = o.singular_tol {
            self.singular_tol = check_tol("--tol-singular", x)?;
        }
        if let Some(x) = o.structure_tol {
            self.structure_tol = check_tol("--tol-structure", x)?;
        }
        if let Some(n) = o.grid_n {
            self.grid_n = check_grid(n)?;
        }
        if o.output_format.is_some() {
            self.output_format = o.output_format;
        }
        Ok(self)
    }

    pub fn tolerances(&self) -> Tolerances {
        Tolerances {
            residual: self.residual_tol,
            singular: self.singular_tol,
            structure: self.structure_tol,
            ..Tolerances::default()
        }
    }

    pub fn format_or(&self, default: OutputFormat) -> OutputFormat {
        self.output_format.unwrap_or(default)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_keys() {
        let cfg = ToolConfig::parse(
            "# comment\nresidual_tol = 1e-8\n singular_tol=2e-7\nstructure_tol = 1e-9\n\ngrid_n = 32\noutput_format = CSV\n",
        )
        .unwrap();
        assert_eq!(cfg.residual_tol, 1e-8);
        assert_eq!(cfg.singular_tol, 2e-7);
        assert_eq!(cfg.structure_tol, 1e-9);
        assert_eq!(cfg.grid_n, 32);
        assert_eq!(cfg.output_format, Some(OutputFormat::Csv));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(ToolConfig::parse("foo = 1").is_err());
        assert!(ToolConfig::parse("residual_tol").is_err());
        assert!(ToolConfig::parse("residual_tol = -1").is_err());
        assert!(ToolConfig::parse("grid_n = 4").is_err());
        assert!(ToolConfig::parse("output_format = xml").is_err());
    }

    #[test]
    fn overrides_win() {
        let cfg = ToolConfig::parse("residual_tol = 1e-3\noutput_format = csv")
            .unwrap()
            .with_overrides(&ConfigOverrides {
                residual_tol: Some(1e-9),
                output_format: Some(OutputFormat::Json),
                ..Default::default()
            })
            .unwrap();
        assert_eq!(cfg.residual_tol, 1e-9);
        assert_eq!(cfg.output_format, Some(OutputFormat::Json));
        assert_eq!(cfg.tolerances().residual, 1e-9);
    }
}
