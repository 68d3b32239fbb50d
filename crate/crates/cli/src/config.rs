//! Flat `key = value` run configuration.
//!
//! Keys mirror the fields of [`RunConfig`]; the model couplings appear as
//! `m`, `A`, `B`, `alpha`, `gamma`. Blank lines and `#` comments are ignored.

use std::f64::consts::FRAC_PI_4;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use dirac_osc_core::{Dimension, LadderConvention, ModelParams};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError {
    pub line: Option<usize>,
    pub field: String,
    pub message: String,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "line {line}, field `{}`: {}", self.field, self.message),
            None => write!(f, "field `{}`: {}", self.field, self.message),
        }
    }
}

impl std::error::Error for ConfigError {}

impl ConfigError {
    fn field(field: &str, message: impl Into<String>) -> Self {
        ConfigError { line: None, field: field.to_owned(), message: message.into() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Spectrum,
    Evolve,
    Sweep,
    Verify,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Spectrum => "spectrum",
            Mode::Evolve => "evolve",
            Mode::Sweep => "sweep",
            Mode::Verify => "verify",
        }
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "spectrum" => Ok(Mode::Spectrum),
            "evolve" => Ok(Mode::Evolve),
            "sweep" => Ok(Mode::Sweep),
            "verify" => Ok(Mode::Verify),
            _ => Err(format!("unknown mode `{s}` (spectrum, evolve, sweep, verify)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn as_str(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format `{s}` (csv, json)")),
        }
    }
}

/// Inclusive range of sector invariants, written `a..=b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SectorRange {
    pub start: i64,
    pub end: i64,
}

impl fmt::Display for SectorRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..={}", self.start, self.end)
    }
}

impl FromStr for SectorRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (a, b) = s.split_once("..=").ok_or_else(|| format!("expected `a..=b`, got `{s}`"))?;
        let start = a.trim().parse().map_err(|e| format!("bad start `{a}`: {e}"))?;
        let end = b.trim().parse().map_err(|e| format!("bad end `{b}`: {e}"))?;
        if start > end {
            return Err(format!("empty range {start}..={end}"));
        }
        Ok(SectorRange { start, end })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub mode: Mode,
    pub params: ModelParams,
    /// `None` follows the dimension's default ladder scale.
    pub convention: Option<LadderConvention>,
    pub n: u32,
    pub theta: f64,
    pub t_min: f64,
    pub t_max: f64,
    pub t_steps: usize,
    pub gamma_min: f64,
    /// `None` means twice the mass.
    pub gamma_max: Option<f64>,
    pub gamma_steps: usize,
    pub n_range: SectorRange,
    pub n_max_truncation: u32,
    pub output_path: Option<PathBuf>,
    pub format: Format,
    pub seed: u64,
    pub draws: usize,
}

impl Default for RunConfig {
    /// `m = 3.2`, `alpha = 1.2`, `A = 0`, `B = 1`, `theta = pi/4`, `n = 0`.
    fn default() -> Self {
        RunConfig {
            mode: Mode::Spectrum,
            params: ModelParams::new(Dimension::One).with_mass(3.2).with_couplings(0.0, 1.0).with_alpha(1.2),
            convention: None,
            n: 0,
            theta: FRAC_PI_4,
            t_min: 0.0,
            t_max: 30.0,
            t_steps: 300,
            gamma_min: 0.0,
            gamma_max: None,
            gamma_steps: 64,
            n_range: SectorRange { start: 0, end: 10 },
            n_max_truncation: 8,
            output_path: None,
            format: Format::Csv,
            seed: 1,
            draws: 10_000,
        }
    }
}

const KEYS: [&str; 22] = [
    "mode",
    "dimension",
    "m",
    "A",
    "B",
    "alpha",
    "gamma",
    "convention",
    "n",
    "theta",
    "t_min",
    "t_max",
    "t_steps",
    "gamma_min",
    "gamma_max",
    "gamma_steps",
    "n_range",
    "n_max_truncation",
    "output_path",
    "format",
    "seed",
    "draws",
];

fn parse<T: FromStr>(key: &str, value: &str) -> Result<T, ConfigError>
where
    T::Err: fmt::Display,
{
    value.parse().map_err(|e: T::Err| ConfigError::field(key, format!("cannot parse `{value}`: {e}")))
}

fn parse_convention(value: &str) -> Result<Option<LadderConvention>, String> {
    match value {
        "auto" => Ok(None),
        "unit" => Ok(Some(LadderConvention::UNIT)),
        "sqrt2" => Ok(Some(LadderConvention::SQRT2)),
        "chiral" => Ok(Some(LadderConvention::CHIRAL)),
        other => {
            let scale: f64 = other.parse().map_err(|_| format!("expected auto, unit, sqrt2, chiral or a number, got `{other}`"))?;
            LadderConvention::new(scale).map(Some).map_err(|e| e.to_string())
        }
    }
}

fn convention_text(c: Option<LadderConvention>) -> String {
    match c {
        None => "auto".into(),
        Some(c) if c == LadderConvention::UNIT => "unit".into(),
        Some(c) if c == LadderConvention::SQRT2 => "sqrt2".into(),
        Some(c) if c == LadderConvention::CHIRAL => "chiral".into(),
        Some(c) => c.scale().to_string(),
    }
}

impl RunConfig {
    /// Parses a whole file on top of the defaults and validates the result.
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut cfg = RunConfig::default();
        let mut seen: Vec<&str> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content.split_once('=').ok_or_else(|| ConfigError {
                line: Some(line),
                field: content.to_owned(),
                message: "expected `key = value`".into(),
            })?;
            let key = key.trim();
            if seen.contains(&key) {
                return Err(ConfigError { line: Some(line), field: key.to_owned(), message: "duplicate key".into() });
            }
            cfg.set(key, value.trim()).map_err(|e| ConfigError { line: Some(line), ..e })?;
            seen.push(key);
        }
        cfg.validate()?;
        Ok(cfg)
    }

    /// Sets one field from its textual value.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), ConfigError> {
        match key {
            "mode" => self.mode = parse(key, value)?,
            "dimension" => {
                let d: u8 = parse(key, value)?;
                self.params.dimension = Dimension::from_index(d).map_err(|e| ConfigError::field(key, e.to_string()))?;
            }
            "m" => self.params.m = parse(key, value)?,
            "A" => self.params.a = parse(key, value)?,
            "B" => self.params.b = parse(key, value)?,
            "alpha" => self.params.alpha = parse(key, value)?,
            "gamma" => self.params.gamma = parse(key, value)?,
            "convention" => self.convention = parse_convention(value).map_err(|e| ConfigError::field(key, e))?,
            "n" => self.n = parse(key, value)?,
            "theta" => self.theta = parse(key, value)?,
            "t_min" => self.t_min = parse(key, value)?,
            "t_max" => self.t_max = parse(key, value)?,
            "t_steps" => self.t_steps = parse(key, value)?,
            "gamma_min" => self.gamma_min = parse(key, value)?,
            "gamma_max" => self.gamma_max = if value == "auto" { None } else { Some(parse(key, value)?) },
            "gamma_steps" => self.gamma_steps = parse(key, value)?,
            "n_range" => self.n_range = parse(key, value)?,
            "n_max_truncation" => self.n_max_truncation = parse(key, value)?,
            "output_path" => self.output_path = if value.is_empty() { None } else { Some(PathBuf::from(value)) },
            "format" => self.format = parse(key, value)?,
            "seed" => self.seed = parse(key, value)?,
            "draws" => self.draws = parse(key, value)?,
            _ => return Err(ConfigError::field(key, "unknown key")),
        }
        Ok(())
    }

    /// Applies `key=value` overrides in order.
    pub fn apply_overrides<'a>(&mut self, pairs: impl IntoIterator<Item = &'a str>) -> Result<(), ConfigError> {
        for pair in pairs {
            let (k, v) = pair.split_once('=').ok_or_else(|| ConfigError::field(pair, "expected key=value"))?;
            self.set(k.trim(), v.trim())?;
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        self.model().validate().map_err(|e| ConfigError::field("params", e.to_string()))?;
        let finite = [("theta", self.theta), ("t_min", self.t_min), ("t_max", self.t_max), ("gamma_min", self.gamma_min)];
        for (key, v) in finite.into_iter().chain(self.gamma_max.map(|g| ("gamma_max", g))) {
            if !v.is_finite() {
                return Err(ConfigError::field(key, "must be finite"));
            }
        }
        if self.t_max < self.t_min {
            return Err(ConfigError::field("t_max", "must not be below t_min"));
        }
        if self.gamma_max() < self.gamma_min {
            return Err(ConfigError::field("gamma_max", "must not be below gamma_min"));
        }
        for (key, steps) in [("t_steps", self.t_steps), ("gamma_steps", self.gamma_steps), ("draws", self.draws)] {
            if steps < 1 {
                return Err(ConfigError::field(key, "must be at least 1"));
            }
        }
        if self.n_max_truncation < 2 {
            return Err(ConfigError::field("n_max_truncation", "must be at least 2"));
        }
        Ok(())
    }

    /// Model parameters with the ladder convention resolved.
    pub fn model(&self) -> ModelParams {
        let convention = self.convention.unwrap_or_else(|| LadderConvention::default_for(self.params.dimension));
        self.params.with_convention(convention)
    }

    pub fn gamma_max(&self) -> f64 {
        self.gamma_max.unwrap_or(2.0 * self.params.m)
    }

    /// `t_steps + 1` evenly spaced times including both ends.
    pub fn t_grid(&self) -> Vec<f64> {
        grid(self.t_min, self.t_max, self.t_steps)
    }

    pub fn gamma_grid(&self) -> Vec<f64> {
        grid(self.gamma_min, self.gamma_max(), self.gamma_steps)
    }

    /// Serializes every key; [`RunConfig::parse`] reads it back unchanged.
    pub fn to_text(&self) -> String {
        let p = &self.params;
        let values: [String; 22] = [
            self.mode.as_str().into(),
            p.dimension.index().to_string(),
            p.m.to_string(),
            p.a.to_string(),
            p.b.to_string(),
            p.alpha.to_string(),
            p.gamma.to_string(),
            convention_text(self.convention),
            self.n.to_string(),
            self.theta.to_string(),
            self.t_min.to_string(),
            self.t_max.to_string(),
            self.t_steps.to_string(),
            self.gamma_min.to_string(),
            self.gamma_max.map_or_else(|| "auto".into(), |g| g.to_string()),
            self.gamma_steps.to_string(),
            self.n_range.to_string(),
            self.n_max_truncation.to_string(),
            self.output_path.as_ref().map_or_else(String::new, |p| p.display().to_string()),
            self.format.as_str().into(),
            self.seed.to_string(),
            self.draws.to_string(),
        ];
        KEYS.iter().zip(values).map(|(k, v)| format!("{k} = {v}\n")).collect()
    }
}

pub fn grid(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    let h = (hi - lo) / steps as f64;
    (0..=steps).map(|k| if k == steps { hi } else { lo + h * k as f64 }).collect()
}
