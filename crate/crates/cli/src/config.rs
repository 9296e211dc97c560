//! Run configuration.
//!
//! A run is described by a JSON file; every field can be overridden by a
//! same-named command-line flag, so batch configs stay reproducible while
//! ad-hoc sweeps stay cheap.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use billiard_core::dynamics::SamplingMode;

use crate::error::CliError;

/// Artifacts a run can emit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputKind {
    Summary,
    Events,
    Svg,
    UnfoldingSvg,
}

impl std::str::FromStr for OutputKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "summary" => Ok(OutputKind::Summary),
            "events" => Ok(OutputKind::Events),
            "svg" => Ok(OutputKind::Svg),
            "unfolding_svg" => Ok(OutputKind::UnfoldingSvg),
            other => Err(format!(
                "unknown output '{other}' (expected summary, events, svg, unfolding_svg)"
            )),
        }
    }
}

fn default_outputs() -> Vec<OutputKind> {
    vec![OutputKind::Summary]
}

fn default_max_time() -> f64 {
    0.0
}

/// One simulation run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunConfig {
    pub polygon_path: String,
    pub radius: f64,
    pub n_trajectories: usize,
    pub max_bounces: usize,
    /// Time cap per trajectory; `<= 0` disables it.
    #[serde(default = "default_max_time")]
    pub max_time: f64,
    pub seed: u64,
    pub mode: SamplingMode,
    #[serde(default = "default_outputs")]
    pub outputs: Vec<OutputKind>,
}

/// Optional per-field overrides collected from the command line.
#[derive(Clone, Debug, Default)]
pub struct ConfigOverrides {
    pub polygon_path: Option<String>,
    pub radius: Option<f64>,
    pub n_trajectories: Option<usize>,
    pub max_bounces: Option<usize>,
    pub max_time: Option<f64>,
    pub seed: Option<u64>,
    pub mode: Option<SamplingMode>,
    pub outputs: Option<Vec<OutputKind>>,
}

impl RunConfig {
    pub fn load(path: &Path, overrides: &ConfigOverrides) -> Result<RunConfig, CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Parse(format!("cannot read config {}: {e}", path.display())))?;
        let mut cfg: RunConfig = serde_json::from_str(&text)
            .map_err(|e| CliError::Parse(format!("bad config {}: {e}", path.display())))?;
        cfg.apply(overrides);
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn apply(&mut self, o: &ConfigOverrides) {
        if let Some(v) = &o.polygon_path {
            self.polygon_path = v.clone();
        }
        if let Some(v) = o.radius {
            self.radius = v;
        }
        if let Some(v) = o.n_trajectories {
            self.n_trajectories = v;
        }
        if let Some(v) = o.max_bounces {
            self.max_bounces = v;
        }
        if let Some(v) = o.max_time {
            self.max_time = v;
        }
        if let Some(v) = o.seed {
            self.seed = v;
        }
        if let Some(v) = o.mode {
            self.mode = v;
        }
        if let Some(v) = &o.outputs {
            self.outputs = v.clone();
        }
    }

    pub fn validate(&mut self) -> Result<(), CliError> {
        if self.n_trajectories < 1 {
            return Err(CliError::Parse("n_trajectories must be >= 1".into()));
        }
        if self.max_bounces < 1 {
            return Err(CliError::Parse("max_bounces must be >= 1".into()));
        }
        if !self.radius.is_finite() || self.radius < 0.0 {
            return Err(CliError::Radius(format!(
                "radius must be finite and nonnegative, got {}",
                self.radius
            )));
        }
        // dedupe, stable order
        let set: BTreeSet<OutputKind> = self.outputs.iter().copied().collect();
        self.outputs = set.into_iter().collect();
        if self.outputs.contains(&OutputKind::UnfoldingSvg) && self.radius != 0.0 {
            return Err(CliError::Parse(
                "unfolding_svg output requires radius = 0".into(),
            ));
        }
        Ok(())
    }

    pub fn wants(&self, kind: OutputKind) -> bool {
        self.outputs.contains(&kind)
    }
}
