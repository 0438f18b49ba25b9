//! Flat `key = value` configuration files and the bundled presets.

use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::priors::{Prior, PriorParams};
use crate::superpixels::{ObjectSeeds, OisfParams};

/// How the first iteration picks its queries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QueryStrategy {
    /// Background queries from border superpixels of each color cluster.
    Border,
    /// Foreground queries thresholded from the integrated prior map.
    Prior,
    /// Queries taken from user scribbles.
    Scribble,
}

impl FromStr for QueryStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "border" => Ok(Self::Border),
            "prior" => Ok(Self::Prior),
            "scribble" => Ok(Self::Scribble),
            other => Err(Error::InvalidParameter(format!(
                "query_strategy must be border, prior or scribble, got '{other}'"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PipelineConfig {
    pub oisf: OisfParams,
    pub priors: Vec<Prior>,
    pub prior_params: PriorParams,
    pub psi: f64,
    pub sigma_s: f64,
    pub lambda: f64,
    pub ca_steps: usize,
    pub iterations: usize,
    pub query_strategy: QueryStrategy,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        Self {
            oisf: OisfParams::default(),
            priors: vec![Prior::Center, Prior::Uniqueness, Prior::RedYellow, Prior::White, Prior::Focus],
            prior_params: PriorParams::default(),
            psi: 0.5,
            sigma_s: 0.4,
            lambda: 0.01,
            ca_steps: 1,
            iterations: 8,
            query_strategy: QueryStrategy::Border,
        }
    }
}

pub const PRESETS: &[(&str, &str)] = &[
    ("ecssd", include_str!("../../presets/ecssd.cfg")),
    ("dut_omron", include_str!("../../presets/dut_omron.cfg")),
    ("icoseg", include_str!("../../presets/icoseg.cfg")),
    ("msra10k", include_str!("../../presets/msra10k.cfg")),
    ("lungs", include_str!("../../presets/lungs.cfg")),
    ("parasites", include_str!("../../presets/parasites.cfg")),
];

fn parse_value<T: FromStr>(line: usize, key: &str, value: &str) -> Result<T> {
    value.parse().map_err(|_| Error::Config {
        line,
        message: format!("invalid value '{value}' for {key}"),
    })
}

impl PipelineConfig {
    pub fn preset(name: &str) -> Result<Self> {
        let (_, text) = PRESETS
            .iter()
            .find(|(n, _)| *n == name)
            .ok_or_else(|| Error::UnknownPreset(name.to_string()))?;
        Self::parse(text)
    }

    pub fn preset_names() -> impl Iterator<Item = &'static str> {
        PRESETS.iter().map(|(n, _)| *n)
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    /// Parses over the defaults.
    pub fn parse(text: &str) -> Result<Self> {
        let mut config = Self::default();
        config.apply(text)?;
        Ok(config)
    }

    /// Applies `key = value` lines over the current values, then validates.
    pub fn apply(&mut self, text: &str) -> Result<()> {
        let mut n_object: Option<(usize, String)> = None;
        let mut fraction_mode = matches!(self.oisf.n_object, ObjectSeeds::Fraction(_));
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content.split_once('=').ok_or_else(|| Error::Config {
                line,
                message: format!("expected key = value, got '{content}'"),
            })?;
            let (key, value) = (key.trim(), value.trim());
            let pp = &mut self.prior_params;
            match key {
                "n" => self.oisf.n = parse_value(line, key, value)?,
                "alpha" => self.oisf.alpha = parse_value(line, key, value)?,
                "beta" => self.oisf.beta = parse_value(line, key, value)?,
                "gamma" => self.oisf.gamma = parse_value(line, key, value)?,
                "kappa" => self.oisf.kappa = parse_value(line, key, value)?,
                "inner_iters" => self.oisf.inner_iters = parse_value(line, key, value)?,
                "psi" => self.psi = parse_value(line, key, value)?,
                "sigma_s" => self.sigma_s = parse_value(line, key, value)?,
                "lambda" => self.lambda = parse_value(line, key, value)?,
                "ca_steps" => self.ca_steps = parse_value(line, key, value)?,
                "iterations" => self.iterations = parse_value(line, key, value)?,
                "n_object" => n_object = Some((line, value.to_string())),
                "n_object_mode" => {
                    fraction_mode = match value {
                        "count" => false,
                        "fraction" => true,
                        _ => {
                            return Err(Error::Config {
                                line,
                                message: format!("n_object_mode must be count or fraction, got '{value}'"),
                            })
                        }
                    }
                }
                "sigma1" => pp.sigma1 = parse_value(line, key, value)?,
                "sigma2" => pp.sigma2 = parse_value(line, key, value)?,
                "sigma3" => pp.sigma3 = parse_value(line, key, value)?,
                "sigma3_prime" => pp.sigma3_prime = parse_value(line, key, value)?,
                "sigma4" => pp.sigma4 = parse_value(line, key, value)?,
                "sigma5" => pp.sigma5 = parse_value(line, key, value)?,
                "sigma_scribble" => pp.sigma_scribble = parse_value(line, key, value)?,
                "s0" => pp.s0 = parse_value(line, key, value)?,
                "s1" => pp.s1 = parse_value(line, key, value)?,
                "priors" => {
                    self.priors = value
                        .split(',')
                        .map(str::trim)
                        .filter(|s| !s.is_empty())
                        .map(|s| {
                            s.parse().map_err(|_| Error::Config {
                                line,
                                message: format!("unknown prior '{s}'"),
                            })
                        })
                        .collect::<Result<_>>()?;
                }
                "query_strategy" => {
                    self.query_strategy = value.parse().map_err(|e: Error| Error::Config {
                        line,
                        message: e.to_string(),
                    })?
                }
                other => return Err(Error::UnknownConfigKey(other.to_string())),
            }
        }

        self.oisf.n_object = match (n_object, fraction_mode, self.oisf.n_object) {
            (Some((line, v)), true, _) => ObjectSeeds::Fraction(parse_value(line, "n_object", &v)?),
            (Some((line, v)), false, _) => ObjectSeeds::Count(parse_value(line, "n_object", &v)?),
            (None, true, ObjectSeeds::Count(_)) => {
                return Err(Error::InvalidParameter(
                    "n_object_mode = fraction needs an explicit n_object".into(),
                ))
            }
            (None, false, ObjectSeeds::Fraction(_)) => {
                return Err(Error::InvalidParameter(
                    "n_object_mode = count needs an explicit n_object".into(),
                ))
            }
            (None, _, current) => current,
        };
        self.validate()
    }

    pub fn validate(&self) -> Result<()> {
        self.oisf.validate()?;
        self.prior_params.validate()?;
        let bad = |m: String| Err(Error::InvalidParameter(m));
        if self.iterations < 2 {
            return bad(format!("iterations must be at least 2, got {}", self.iterations));
        }
        if !(0.0..=1.0).contains(&self.psi) {
            return bad(format!("psi must lie in [0, 1], got {}", self.psi));
        }
        if !(self.sigma_s > 0.0 && self.sigma_s <= 1.0) {
            return bad(format!("sigma_s must lie in (0, 1], got {}", self.sigma_s));
        }
        if !(self.lambda > 0.0 && self.lambda <= 1.0) {
            return bad(format!("lambda must lie in (0, 1], got {}", self.lambda));
        }
        Ok(())
    }
}
