//! Config files and parameter resolution.
//!
//! The file format is line based:
//!
//! ```text
//! # comment
//! [ising]
//! n = 8
//! g0 = 0.9
//!
//! [output]
//! csv = ising.csv
//! ```
//!
//! Sections are model names plus `sweep` and `output`. Unknown sections,
//! unknown keys and repeated keys are errors. Flags given on the command line
//! replace values from the file.

use std::collections::BTreeMap;
use std::path::Path;

use crate::error::{CliError, Result};

pub const SECTIONS: &[(&str, &[&str])] = &[
    ("helstrom", &["fidelity", "p0"]),
    (
        "ising",
        &[
            "n",
            "j",
            "g0",
            "g1",
            "t",
            "grid",
            "delta",
            "target_fidelity",
        ],
    ),
    (
        "opo",
        &[
            "omega",
            "g0",
            "g1",
            "t",
            "lambda1",
            "delta",
            "n_modes",
            "target_fidelity",
            "p0",
            "truncation",
        ],
    ),
    ("dicke", &["omega", "g0", "g1", "t", "truncation"]),
    (
        "fisher",
        &["gamma_norm", "g", "g_min", "g_max", "points", "scale"],
    ),
    ("sweep", &["variable", "start", "stop", "points", "scale"]),
    (
        "output",
        &["csv", "svg", "oracle_check", "threads", "log_x", "log_y"],
    ),
];

fn schema(section: &str) -> Option<&'static [&'static str]> {
    SECTIONS
        .iter()
        .find(|(name, _)| *name == section)
        .map(|(_, keys)| *keys)
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConfigFile {
    sections: BTreeMap<String, BTreeMap<String, String>>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::parse(&text).map_err(|e| match e {
            CliError::Invalid(msg) => CliError::Invalid(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut sections: BTreeMap<String, BTreeMap<String, String>> = BTreeMap::new();
        let mut current: Option<String> = None;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = i + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
                let name = name.trim();
                if schema(name).is_none() {
                    return Err(CliError::invalid(format!(
                        "line {lineno}: unknown section [{name}]"
                    )));
                }
                sections.entry(name.to_string()).or_default();
                current = Some(name.to_string());
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(CliError::invalid(format!(
                    "line {lineno}: expected `key = value`"
                )));
            };
            let (key, value) = (key.trim(), value.trim());
            let Some(section) = current.as_deref() else {
                return Err(CliError::invalid(format!(
                    "line {lineno}: `{key}` appears before any section"
                )));
            };
            if !schema(section).unwrap_or(&[]).contains(&key) {
                return Err(CliError::invalid(format!(
                    "line {lineno}: unknown key `{key}` in [{section}]"
                )));
            }
            if value.is_empty() {
                return Err(CliError::invalid(format!(
                    "line {lineno}: `{key}` has no value"
                )));
            }
            let entries = sections.entry(section.to_string()).or_default();
            if entries.insert(key.to_string(), value.to_string()).is_some() {
                return Err(CliError::invalid(format!(
                    "line {lineno}: `{key}` repeated in [{section}]"
                )));
            }
        }
        Ok(ConfigFile { sections })
    }

    pub fn section(&self, name: &str) -> Option<&BTreeMap<String, String>> {
        self.sections.get(name)
    }
}

/// Resolved parameters of one section: file values overlaid with flags.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Params {
    section: &'static str,
    values: BTreeMap<String, String>,
}

impl Params {
    pub fn resolve(
        section: &'static str,
        file: Option<&ConfigFile>,
        flags: impl IntoIterator<Item = (&'static str, Option<String>)>,
    ) -> Self {
        let mut values = file
            .and_then(|f| f.section(section))
            .cloned()
            .unwrap_or_default();
        for (key, value) in flags {
            if let Some(v) = value {
                values.insert(key.to_string(), v);
            }
        }
        Params { section, values }
    }

    pub fn section(&self) -> &'static str {
        self.section
    }

    pub fn with(&self, key: &str, value: f64) -> Self {
        let mut next = self.clone();
        next.values.insert(key.to_string(), value.to_string());
        next
    }

    pub fn raw(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    fn missing(&self, key: &str) -> CliError {
        CliError::invalid(format!(
            "missing parameter `{key}` (pass --{} or set it in [{}])",
            key.replace('_', "-"),
            self.section
        ))
    }

    pub fn parse<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>> {
        match self.raw(key) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|_| CliError::invalid(format!("parameter `{key}`: cannot parse `{v}`"))),
        }
    }

    pub fn f64(&self, key: &str) -> Result<f64> {
        self.parse(key)?.ok_or_else(|| self.missing(key))
    }

    pub fn f64_or(&self, key: &str, default: f64) -> Result<f64> {
        Ok(self.parse(key)?.unwrap_or(default))
    }

    pub fn usize(&self, key: &str) -> Result<usize> {
        self.parse(key)?.ok_or_else(|| self.missing(key))
    }

    pub fn usize_or(&self, key: &str, default: usize) -> Result<usize> {
        Ok(self.parse(key)?.unwrap_or(default))
    }

    pub fn flag(&self, key: &str) -> Result<bool> {
        match self.raw(key) {
            None => Ok(false),
            Some("true") | Some("1") => Ok(true),
            Some("false") | Some("0") => Ok(false),
            Some(v) => Err(CliError::invalid(format!(
                "parameter `{key}`: expected true or false, got `{v}`"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Scale {
    #[default]
    Linear,
    Log,
}

impl std::str::FromStr for Scale {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "linear" | "lin" => Ok(Scale::Linear),
            "log" => Ok(Scale::Log),
            _ => Err(format!("unknown scale `{s}`")),
        }
    }
}

impl std::fmt::Display for Scale {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Scale::Linear => "linear",
            Scale::Log => "log",
        })
    }
}

/// Values of one parameter to evaluate, in order.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub variable: String,
    pub start: f64,
    pub stop: f64,
    pub points: usize,
    pub scale: Scale,
}

impl SweepSpec {
    pub fn new(
        variable: impl Into<String>,
        start: f64,
        stop: f64,
        points: usize,
        scale: Scale,
    ) -> Result<Self> {
        let spec = SweepSpec {
            variable: variable.into(),
            start,
            stop,
            points,
            scale,
        };
        if !(start.is_finite() && stop.is_finite() && start < stop) {
            return Err(CliError::invalid(format!(
                "sweep needs finite start < stop, got {start} and {stop}"
            )));
        }
        if points == 0 {
            return Err(CliError::invalid("sweep needs at least one point"));
        }
        if scale == Scale::Log && start <= 0.0 {
            return Err(CliError::invalid("a log sweep needs start > 0"));
        }
        Ok(spec)
    }

    /// Reads `[sweep]`; `None` when no variable is named.
    pub fn from_params(p: &Params) -> Result<Option<Self>> {
        let Some(variable) = p.raw("variable") else {
            return Ok(None);
        };
        let scale = p.parse::<Scale>("scale")?.unwrap_or_default();
        Self::new(
            variable,
            p.f64("start")?,
            p.f64("stop")?,
            p.usize("points")?,
            scale,
        )
        .map(Some)
    }

    pub fn grid(&self) -> Vec<f64> {
        grid(self.start, self.stop, self.points, self.scale)
    }
}

/// `n` points from `start` to `stop` inclusive; both ends are exact.
pub fn grid(start: f64, stop: f64, n: usize, scale: Scale) -> Vec<f64> {
    match (n, scale) {
        (0, _) => vec![],
        (1, _) => vec![start],
        (_, Scale::Log) => critdet::spectral::log_spaced(start, stop, n).unwrap_or_default(),
        (_, Scale::Linear) => {
            let step = (stop - start) / (n - 1) as f64;
            (0..n)
                .map(|i| {
                    if i == n - 1 {
                        stop
                    } else {
                        start + i as f64 * step
                    }
                })
                .collect()
        }
    }
}
