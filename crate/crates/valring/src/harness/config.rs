//! Flat `key = value` experiment configuration with repeated `ring =` lines.
//!
//! Example:
//! ```text
//! # rings default to the standard grid when omitted
//! ring = Z/2^2
//! ring = GF(3)[t]/t^2
//! experiment = thm1
//! trials = 100
//! master_seed = 42
//! sizes = 3,3,3
//! format = csv
//! output = out.csv
//! ```

use crate::error::{Error, Result};
use crate::ring::RingSpec;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Experiment {
    Spectrum,
    Mixing,
    Incidence,
    Energy,
    Thm1,
    Thm2,
    Plunnecke,
    All,
}

impl Experiment {
    pub fn name(self) -> &'static str {
        match self {
            Experiment::Spectrum => "spectrum",
            Experiment::Mixing => "mixing",
            Experiment::Incidence => "incidence",
            Experiment::Energy => "energy",
            Experiment::Thm1 => "thm1",
            Experiment::Thm2 => "thm2",
            Experiment::Plunnecke => "plunnecke",
            Experiment::All => "all",
        }
    }
}

impl FromStr for Experiment {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "spectrum" => Experiment::Spectrum,
            "mixing" => Experiment::Mixing,
            "incidence" => Experiment::Incidence,
            "energy" => Experiment::Energy,
            "thm1" => Experiment::Thm1,
            "thm2" => Experiment::Thm2,
            "plunnecke" => Experiment::Plunnecke,
            "all" => Experiment::All,
            _ => return Err(Error::Config(format!("unknown experiment {s:?}"))),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "csv" => OutputFormat::Csv,
            "json" => OutputFormat::Json,
            _ => return Err(Error::Config(format!("unknown format {s:?} (csv|json)"))),
        })
    }
}

/// Rings used by `all` when the config names none.
pub const DEFAULT_GRID: [&str; 5] =
    ["Z/2^2", "Z/2^3", "Z/3^2", "GF(2)[t]/t^2", "GF(3)[t]/t^2"];

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub rings: Vec<String>,
    pub experiment: Experiment,
    pub trials: u64,
    pub master_seed: u64,
    /// Graph dimension; None runs both 3 and 4 where applicable.
    pub d: Option<usize>,
    /// Incidence sample sizes.
    pub points: usize,
    pub planes: usize,
    /// thm1 set sizes |A|,|B|,|C|.
    pub sizes: (usize, usize, usize),
    /// thm2 / energy set size.
    pub size: usize,
    /// Plünnecke δ as a fraction.
    pub delta: (u64, u64),
    pub k: u32,
    pub part_cap: u64,
    pub output: Option<String>,
    pub format: OutputFormat,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            rings: Vec::new(),
            experiment: Experiment::All,
            trials: 100,
            master_seed: 42,
            d: None,
            points: 30,
            planes: 30,
            sizes: (3, 3, 3),
            size: 4,
            delta: (1, 2),
            k: 2,
            part_cap: crate::graph::DEFAULT_PART_CAP,
            output: None,
            format: OutputFormat::Csv,
        }
    }
}

fn parse_num<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .parse::<T>()
        .map_err(|_| Error::Config(format!("bad value for {key}: {value:?}")))
}

impl ExperimentConfig {
    /// Parse the flat key=value format; later keys override earlier ones,
    /// except `ring` which accumulates.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = ExperimentConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Config(format!("line {}: expected key = value", lineno + 1))
            })?;
            cfg.apply(key.trim(), value.trim())?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn apply(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "ring" => self.rings.push(value.to_string()),
            "experiment" => self.experiment = value.parse()?,
            "trials" => self.trials = parse_num(key, value)?,
            "master_seed" | "seed" => self.master_seed = parse_num(key, value)?,
            "d" => self.d = Some(parse_num(key, value)?),
            "points" => self.points = parse_num(key, value)?,
            "planes" => self.planes = parse_num(key, value)?,
            "sizes" => {
                let parts: Vec<&str> = value.split(',').map(str::trim).collect();
                if parts.len() != 3 {
                    return Err(Error::Config(format!(
                        "sizes wants three comma-separated values, got {value:?}"
                    )));
                }
                self.sizes = (
                    parse_num(key, parts[0])?,
                    parse_num(key, parts[1])?,
                    parse_num(key, parts[2])?,
                );
            }
            "size" => self.size = parse_num(key, value)?,
            "delta" => {
                let (n, d) = value.split_once('/').ok_or_else(|| {
                    Error::Config(format!("delta wants num/den, got {value:?}"))
                })?;
                self.delta = (parse_num(key, n.trim())?, parse_num(key, d.trim())?);
            }
            "k" => self.k = parse_num(key, value)?,
            "part_cap" => self.part_cap = parse_num(key, value)?,
            "output" => self.output = Some(value.to_string()),
            "format" => self.format = value.parse()?,
            _ => return Err(Error::Config(format!("unknown key {key:?}"))),
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials < 1 {
            return Err(Error::Config("trials must be >= 1".into()));
        }
        for spec in &self.rings {
            RingSpec::parse(spec)
                .map_err(|e| Error::Config(format!("ring {spec:?}: {e}")))?;
        }
        if let Some(d) = self.d {
            if d < 2 {
                return Err(Error::Config("d must be >= 2".into()));
            }
        }
        let (n, den) = self.delta;
        if n == 0 || n >= den {
            return Err(Error::Config(format!("delta {n}/{den} not in (0,1)")));
        }
        if self.sizes.0 < 1 || self.sizes.1 < 1 || self.sizes.2 < 1 || self.size < 1 {
            return Err(Error::Config("set sizes must be >= 1".into()));
        }
        if self.points < 1 || self.planes < 1 {
            return Err(Error::Config("points/planes must be >= 1".into()));
        }
        Ok(())
    }

    /// Parsed ring grid; falls back to the default grid.
    pub fn ring_grid(&self) -> Result<Vec<RingSpec>> {
        let names: Vec<&str> = if self.rings.is_empty() {
            DEFAULT_GRID.to_vec()
        } else {
            self.rings.iter().map(String::as_str).collect()
        };
        names.iter().map(|s| RingSpec::parse(s)).collect()
    }
}
