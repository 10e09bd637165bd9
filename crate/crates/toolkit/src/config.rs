//! Global experiment settings: flags layered over an optional JSON file.

use std::fs;
use std::path::{Path, PathBuf};

use rii_core::hypograph::{PartitionParams, Threshold};
use rii_core::scalar::{rational, Rational, Scalar};
use serde::{Deserialize, Serialize};

use crate::Error;

/// Steps per unit level of the exact-mode threshold staircases.
const STAIRS_PER_UNIT: i64 = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

/// Overrides for the thick-thin construction.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PartitionOverrides {
    pub k: Option<f64>,
    /// Coefficient of the gap filling threshold `c e^{-t}`.
    pub fill_coeff: Option<f64>,
    /// Coefficient of the thin threshold `c e^{-t}`.
    pub thin_coeff: Option<f64>,
    pub exceptional_gap: Option<f64>,
    /// Float-mode root-finding tolerance on levels.
    pub tolerance: Option<f64>,
}

impl PartitionOverrides {
    pub fn float_params(&self) -> PartitionParams<f64> {
        let mut p = PartitionParams::float(self.k.unwrap_or(1.0));
        if let Some(c) = self.fill_coeff {
            p.width_e = Threshold::Exponential { coeff: c };
        }
        if let Some(c) = self.thin_coeff {
            p.width_n = Threshold::Exponential { coeff: c };
        }
        if let Some(g) = self.exceptional_gap {
            p.exceptional_gap = g;
        }
        if let Some(t) = self.tolerance {
            p.tolerance = t;
        }
        p
    }

    /// Exact parameters with base level `xi` and staircase thresholds that
    /// stay below the exponential ones on `[xi, top]`.
    pub fn exact_params(
        &self,
        xi: &Rational,
        top: &Rational,
    ) -> Result<PartitionParams<Rational>, Error> {
        let bad = |e: rii_core::hypograph::HypographError| Error::Usage(e.to_string());
        let span = (top.clone() - xi.clone()).ceil().as_f64().max(1.0) as i64;
        let cuts: Vec<Rational> = (1..=span * STAIRS_PER_UNIT)
            .map(|i| xi.clone() + rational(i, STAIRS_PER_UNIT))
            .collect();
        let k = Rational::from_f64(self.k.unwrap_or(1.0))
            .ok_or_else(|| Error::Usage("partition.k must be finite".into()))?;
        let mut p = PartitionParams::exact(
            xi.clone(),
            k,
            Threshold::staircase_below_exponential(self.fill_coeff.unwrap_or(4.0), cuts.clone())
                .map_err(bad)?,
            Threshold::staircase_below_exponential(self.thin_coeff.unwrap_or(24.0), cuts)
                .map_err(bad)?,
        );
        if let Some(g) = self.exceptional_gap {
            p.exceptional_gap = Rational::from_f64(g)
                .ok_or_else(|| Error::Usage("exceptional gap must be finite".into()))?;
        }
        Ok(p)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    pub out: Option<PathBuf>,
    pub format: Option<Format>,
    pub tolerance: Option<f64>,
    pub partition: PartitionOverrides,
}

impl ExperimentConfig {
    pub fn load(path: &Path) -> Result<Self, Error> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        serde_json::from_str(&text)
            .map_err(|e| Error::Usage(format!("config {}: {e}", path.display())))
    }

    /// Fields set in `flags` win over `self`.
    pub fn merged_with(mut self, flags: ExperimentConfig) -> Self {
        self.seed = flags.seed.or(self.seed);
        self.samples = flags.samples.or(self.samples);
        self.out = flags.out.or(self.out);
        self.format = flags.format.or(self.format);
        self.tolerance = flags.tolerance.or(self.tolerance);
        let (p, q) = (&mut self.partition, flags.partition);
        p.k = q.k.or(p.k);
        p.fill_coeff = q.fill_coeff.or(p.fill_coeff);
        p.thin_coeff = q.thin_coeff.or(p.thin_coeff);
        p.exceptional_gap = q.exceptional_gap.or(p.exceptional_gap);
        p.tolerance = q.tolerance.or(p.tolerance);
        self
    }

    pub fn validate(&self) -> Result<(), Error> {
        let positive = |name: &str, v: Option<f64>| match v {
            Some(x) if !(x > 0.0 && x.is_finite()) => {
                Err(Error::Usage(format!("{name} must be positive, got {x}")))
            }
            _ => Ok(()),
        };
        positive("tolerance", self.tolerance)?;
        positive("partition.fill_coeff", self.partition.fill_coeff)?;
        positive("partition.thin_coeff", self.partition.thin_coeff)?;
        positive("partition.exceptional_gap", self.partition.exceptional_gap)?;
        positive("partition.tolerance", self.partition.tolerance)?;
        if let Some(k) = self.partition.k {
            if !(k >= 1.0 && k.is_finite()) {
                return Err(Error::Usage(format!(
                    "partition.k must be at least 1, got {k}"
                )));
            }
        }
        Ok(())
    }

    pub fn require_seed(&self) -> Result<u64, Error> {
        self.seed
            .ok_or_else(|| Error::Usage("--seed is required for this subcommand".into()))
    }

    pub fn tolerance_or(&self, default: f64) -> f64 {
        self.tolerance.unwrap_or(default)
    }
}
