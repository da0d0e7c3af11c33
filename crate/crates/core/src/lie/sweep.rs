use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{
    check_idempotency, check_key_identity, check_section_equivariance, check_self_action, check_self_distributivity,
    noether_sweep, AdjointSection, MatrixGroupModel, ModelKind, NoetherReport, ParametrizedQuandle, ResidualReport,
    SamplePlan, SampledBundle, MEMBERSHIP_TOLERANCE, PRIMITIVE_TOLERANCE,
};
use crate::error::{Error, Result};

const POINTS_PER_BASE: usize = 4;
const SECTION_SCALE: f64 = 1.0;
const NOETHER_T_SAMPLES: usize = 8;

/// Input to [`run_sweep`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub model: ModelKind,
    pub base_points: usize,
    pub samples: usize,
    pub seed: u64,
    pub t_range: [f64; 2],
    pub tolerance: f64,
}

impl SweepConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: Self = serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn validate(&self) -> Result<()> {
        let [lo, hi] = self.t_range;
        if !(lo.is_finite() && hi.is_finite() && self.tolerance.is_finite()) {
            return Err(Error::NonFinite);
        }
        if lo > hi {
            return Err(Error::Input(format!("empty t_range [{lo}, {hi}]")));
        }
        if self.base_points == 0 || self.samples == 0 {
            return Err(Error::Input("base_points and samples must be positive".into()));
        }
        if self.tolerance < 0.0 {
            return Err(Error::Input("tolerance must be nonnegative".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub model: ModelKind,
    pub seed: u64,
    pub base_points: usize,
    pub samples: usize,
    pub axioms: Vec<ResidualReport>,
    pub noether: NoetherReport,
    pub passed: bool,
}

/// Draws a bundle and section from `cfg.seed`, then runs every axiom check
/// and the Noether sweep with the same seed.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepReport> {
    cfg.validate()?;
    let model = MatrixGroupModel::new(cfg.model, MEMBERSHIP_TOLERANCE)?;
    let plan = SamplePlan { samples: cfg.samples, seed: cfg.seed, t_range: (cfg.t_range[0], cfg.t_range[1]) };
    let mut rng = plan.rng();
    let bundle = SampledBundle::random(model, cfg.base_points, POINTS_PER_BASE, &mut rng)?;
    let section = AdjointSection::random(&bundle, SECTION_SCALE, &mut rng);
    let q = ParametrizedQuandle::new(bundle, section);

    let axioms = vec![
        check_idempotency(&q, &plan, cfg.tolerance)?,
        check_self_action(&q, &plan, cfg.tolerance)?,
        check_self_distributivity(&q, &plan, cfg.tolerance)?,
        check_key_identity(&q, &plan, cfg.tolerance)?,
        check_section_equivariance(&q, &plan, PRIMITIVE_TOLERANCE)?,
    ];
    let noether = noether_sweep(&q, &plan, NOETHER_T_SAMPLES, cfg.tolerance)?;
    let passed = axioms.iter().all(|r| r.passed) && noether.passed;
    Ok(SweepReport {
        model: cfg.model,
        seed: cfg.seed,
        base_points: cfg.base_points,
        samples: cfg.samples,
        axioms,
        noether,
        passed,
    })
}
