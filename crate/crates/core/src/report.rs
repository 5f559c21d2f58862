//! Machine-readable run reports and the run configuration shared by the
//! CLI and the C interface.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::ansatz::AnsatzSpec;
use crate::claims::{ClaimParams, ClaimVerdict, ScalingSweep};
use crate::field_calculus::Scheme;
use crate::geometry::Metric;
use crate::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

/// Everything a run needs; loadable from TOML and overridable by flags.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(default)]
pub struct RunConfig {
    pub preset: Option<String>,
    /// inline term specification, used when no preset is named
    pub spec: Option<AnsatzSpec>,
    pub metric: String,
    pub x0_rotation: bool,
    pub beta: Vec<f64>,
    pub s: Vec<f64>,
    pub scheme_order: usize,
    pub scheme_step: f64,
    pub quad_order: usize,
    pub claims: Vec<String>,
    pub seed: u64,
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            preset: Some("paper-single".into()),
            spec: None,
            metric: "minkowski".into(),
            x0_rotation: false,
            beta: vec![1.0],
            s: vec![1.0, 0.0, 0.0],
            scheme_order: 4,
            scheme_step: 1e-3,
            quad_order: 8,
            claims: Vec::new(),
            seed: 7,
            out: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        Metric::from_name(&self.metric)?;
        if self.beta.is_empty() {
            return Err(Error::InvalidConfig("beta list is empty".into()));
        }
        for &b in &self.beta {
            if !(b > 0.0) {
                return Err(Error::InvalidConfig(format!("beta {b} must be positive")));
            }
        }
        if self.scheme_order != 2 && self.scheme_order != 4 {
            return Err(Error::InvalidConfig(format!(
                "scheme order must be 2 or 4, got {}",
                self.scheme_order
            )));
        }
        if !(self.scheme_step > 0.0) {
            return Err(Error::InvalidConfig("scheme step must be positive".into()));
        }
        if self.quad_order == 0 || self.quad_order > 64 {
            return Err(Error::InvalidConfig(format!(
                "quadrature order {} out of range 1..=64",
                self.quad_order
            )));
        }
        if self.preset.is_none() && self.spec.is_none() {
            return Err(Error::InvalidConfig(
                "either a preset name or an inline spec is required".into(),
            ));
        }
        let known = crate::claims::claim_registry();
        for c in &self.claims {
            if !known.iter().any(|k| k.id == c) {
                return Err(Error::UnknownClaim(c.clone()));
            }
        }
        Ok(())
    }

    pub fn metric_enum(&self) -> Result<Metric> {
        Metric::from_name(&self.metric)
    }

    pub fn scheme(&self) -> Scheme {
        Scheme {
            order: self.scheme_order,
            step: self.scheme_step,
        }
    }

    pub fn claim_params(&self) -> Result<ClaimParams> {
        Ok(ClaimParams {
            beta: self.beta[0],
            s: self.s.clone(),
            metric: self.metric_enum()?,
            scheme: self.scheme(),
            quad_order: self.quad_order,
            seed: self.seed,
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Report {
    pub schema_version: u32,
    pub toolkit_version: String,
    pub config: RunConfig,
    pub verdicts: Vec<ClaimVerdict>,
    pub sweeps: Vec<ScalingSweep>,
    pub timing_ms: u64,
}

impl Report {
    pub fn new(config: RunConfig, verdicts: Vec<ClaimVerdict>, sweeps: Vec<ScalingSweep>, timing_ms: u64) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            toolkit_version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            verdicts,
            sweeps,
            timing_ms,
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    /// True when every verdict passed the oracle/quadrature gate.
    pub fn gates_ok(&self) -> bool {
        self.verdicts.iter().all(|v| v.gate_ok)
    }
}
