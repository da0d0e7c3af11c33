//! Parametrized gauge quandles over matrix groups.
//!
//! A smooth bundle is modeled as a trivialized sample `M_s × G` for a matrix
//! group `G`. A section `X` of the adjoint bundle is stored by one algebra
//! element per base point and evaluated as `X(m, g) = g⁻¹ X_m g`. The operation
//!
//! ```text
//! p₁ ◁ₜ p₂ = p₁ · exp(−t X(p₁)) · exp(t X(p₂))
//! ```
//!
//! is checked numerically against the Lie-quandle axioms (self-action,
//! self-distributivity, idempotency), the conjugation identity
//! `exp(t X(p₁·exp(s X(p₂)))) = exp(−s X(p₂)) exp(t X(p₁)) exp(s X(p₂))`, and
//! the Noether symmetry of "`p₂` fixes `p₁` for all `t`".
//!
//! Residuals are Frobenius norms of differences. Every random draw comes from
//! a seeded `ChaCha8Rng`, and the seed is echoed in every report.

mod expm;
mod model;
mod sweep;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub use expm::{mat_exp, one_norm, SCALED_NORM_BOUND};
pub use model::{MatrixGroupModel, ModelKind, MEMBERSHIP_TOLERANCE};
pub use sweep::{run_sweep, SweepConfig, SweepReport};

use crate::error::{Error, Result};

pub type Matrix = DMatrix<Complex64>;

/// Tolerance for identities built from several exponentials.
pub const COMPOSITE_TOLERANCE: f64 = 1e-8;
/// Tolerance for single operations and exact-by-construction identities.
pub const PRIMITIVE_TOLERANCE: f64 = 1e-12;

/// A point `(m, g)` of a sampled bundle.
#[derive(Debug, Clone, PartialEq)]
pub struct LiePoint {
    pub base: usize,
    pub coord: Matrix,
}

/// Distance between points; infinite across fibers.
pub fn point_distance(a: &LiePoint, b: &LiePoint) -> f64 {
    if a.base == b.base {
        (&a.coord - &b.coord).norm()
    } else {
        f64::INFINITY
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SampledBundle {
    model: MatrixGroupModel,
    base_points: usize,
    points: Vec<LiePoint>,
}

impl SampledBundle {
    pub fn new(model: MatrixGroupModel, base_points: usize, points: Vec<LiePoint>) -> Result<Self> {
        if base_points == 0 {
            return Err(Error::Input("base must be nonempty".into()));
        }
        for p in &points {
            if p.base >= base_points {
                return Err(Error::BaseOutOfRange { base: p.base, size: base_points });
            }
            model.check_member(&p.coord)?;
        }
        Ok(Self { model, base_points, points })
    }

    /// `per_base` random points on every fiber.
    pub fn random<R: Rng>(model: MatrixGroupModel, base_points: usize, per_base: usize, rng: &mut R) -> Result<Self> {
        let points = (0..base_points)
            .flat_map(|base| (0..per_base).map(move |_| base))
            .map(|base| LiePoint { base, coord: model.random_element(rng) })
            .collect();
        Self::new(model, base_points, points)
    }

    pub fn model(&self) -> &MatrixGroupModel {
        &self.model
    }

    pub fn base_points(&self) -> usize {
        self.base_points
    }

    pub fn points(&self) -> &[LiePoint] {
        &self.points
    }

    /// A fresh point: uniform base, random group coordinate.
    pub fn sample_point<R: Rng>(&self, rng: &mut R) -> LiePoint {
        LiePoint { base: rng.random_range(0..self.base_points), coord: self.model.random_element(rng) }
    }

    /// `p · g`.
    pub fn act(&self, p: &LiePoint, g: &Matrix) -> LiePoint {
        LiePoint { base: p.base, coord: &p.coord * g }
    }
}

/// `X(m, g) = g⁻¹ X_m g`, stored by `X_m`.
#[derive(Debug, Clone, PartialEq)]
pub struct AdjointSection {
    section_values: Vec<Matrix>,
}

impl AdjointSection {
    pub fn new(bundle: &SampledBundle, section_values: Vec<Matrix>) -> Result<Self> {
        if section_values.len() != bundle.base_points() {
            return Err(Error::SizeMismatch { left: section_values.len(), right: bundle.base_points() });
        }
        for x in &section_values {
            bundle.model().check_algebra(x)?;
        }
        Ok(Self { section_values })
    }

    pub fn zero(bundle: &SampledBundle) -> Self {
        let n = bundle.model().dim();
        Self { section_values: vec![Matrix::zeros(n, n); bundle.base_points()] }
    }

    /// Algebra coefficients uniform in `[-scale, scale]` at each base point.
    pub fn random<R: Rng>(bundle: &SampledBundle, scale: f64, rng: &mut R) -> Self {
        let values = (0..bundle.base_points()).map(|_| bundle.model().random_algebra(rng, scale)).collect();
        Self { section_values: values }
    }

    pub fn section_values(&self) -> &[Matrix] {
        &self.section_values
    }

    /// Replaces `X_m`.
    pub fn with_value(&self, bundle: &SampledBundle, base: usize, value: Matrix) -> Result<Self> {
        bundle.model().check_algebra(&value)?;
        let mut values = self.section_values.clone();
        let size = values.len();
        *values.get_mut(base).ok_or(Error::BaseOutOfRange { base, size })? = value;
        Ok(Self { section_values: values })
    }

    pub fn eval(&self, model: &MatrixGroupModel, p: &LiePoint) -> Matrix {
        model.inverse(&p.coord) * &self.section_values[p.base] * &p.coord
    }
}

/// A sampled bundle together with the section defining `◁ₜ`.
#[derive(Debug, Clone, PartialEq)]
pub struct ParametrizedQuandle {
    pub bundle: SampledBundle,
    pub section: AdjointSection,
}

fn scaled(a: &Matrix, t: f64) -> Matrix {
    a * Complex64::new(t, 0.0)
}

impl ParametrizedQuandle {
    pub fn new(bundle: SampledBundle, section: AdjointSection) -> Self {
        Self { bundle, section }
    }

    pub fn model(&self) -> &MatrixGroupModel {
        self.bundle.model()
    }

    pub fn x(&self, p: &LiePoint) -> Matrix {
        self.section.eval(self.model(), p)
    }

    /// `exp(t X(p))`.
    pub fn flow(&self, p: &LiePoint, t: f64) -> Result<Matrix> {
        mat_exp(&scaled(&self.x(p), t))
    }

    /// `p₁ ◁ₜ p₂`. The result must stay in the group within the model tolerance.
    pub fn op(&self, p1: &LiePoint, p2: &LiePoint, t: f64) -> Result<LiePoint> {
        if !t.is_finite() {
            return Err(Error::NonFinite);
        }
        let coord = &p1.coord * self.flow(p1, -t)? * self.flow(p2, t)?;
        self.model().check_member(&coord)?;
        Ok(LiePoint { base: p1.base, coord })
    }
}

/// `p₁ ◁ₜ p₂` for the quandle defined by `x` on `bundle`.
pub fn op_t(bundle: &SampledBundle, x: &AdjointSection, p1: &LiePoint, p2: &LiePoint, t: f64) -> Result<LiePoint> {
    ParametrizedQuandle::new(bundle.clone(), x.clone()).op(p1, p2, t)
}

/// Number of samples, seed, and the interval `s` and `t` are drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SamplePlan {
    pub samples: usize,
    pub seed: u64,
    pub t_range: (f64, f64),
}

impl SamplePlan {
    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    fn param<R: Rng>(&self, rng: &mut R) -> f64 {
        let (lo, hi) = self.t_range;
        if lo == hi {
            lo
        } else {
            rng.random_range(lo..=hi)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub check: String,
    pub seed: u64,
    pub samples: usize,
    pub max_residual: f64,
    /// Index of the sample attaining `max_residual`.
    pub worst_sample: usize,
    pub tolerance: f64,
    pub passed: bool,
}

fn residual_report(
    check: &str,
    plan: &SamplePlan,
    tolerance: f64,
    mut sample: impl FnMut(&mut ChaCha8Rng) -> Result<f64>,
) -> Result<ResidualReport> {
    let mut rng = plan.rng();
    let mut max_residual = 0.0_f64;
    let mut worst_sample = 0;
    for i in 0..plan.samples {
        let r = sample(&mut rng)?;
        // NaN compares false, so route it through is_nan
        if r > max_residual || r.is_nan() {
            max_residual = r;
            worst_sample = i;
        }
    }
    Ok(ResidualReport {
        check: check.to_string(),
        seed: plan.seed,
        samples: plan.samples,
        max_residual,
        worst_sample,
        tolerance,
        passed: max_residual <= tolerance,
    })
}

/// `x ◁ₛ x = x`.
pub fn check_idempotency(q: &ParametrizedQuandle, plan: &SamplePlan, tolerance: f64) -> Result<ResidualReport> {
    residual_report("idempotency", plan, tolerance, |rng| {
        let x = q.bundle.sample_point(rng);
        let s = plan.param(rng);
        Ok(point_distance(&q.op(&x, &x, s)?, &x))
    })
}

/// `(x ◁ₜ y) ◁ₛ y = x ◁ₛ₊ₜ y`.
pub fn check_self_action(q: &ParametrizedQuandle, plan: &SamplePlan, tolerance: f64) -> Result<ResidualReport> {
    residual_report("self_action", plan, tolerance, |rng| {
        let (x, y) = (q.bundle.sample_point(rng), q.bundle.sample_point(rng));
        let (s, t) = (plan.param(rng), plan.param(rng));
        let lhs = q.op(&q.op(&x, &y, t)?, &y, s)?;
        let rhs = q.op(&x, &y, s + t)?;
        Ok(point_distance(&lhs, &rhs))
    })
}

/// `(x ◁ₜ y) ◁ₛ z = (x ◁ₛ z) ◁ₜ (y ◁ₛ z)`.
pub fn check_self_distributivity(q: &ParametrizedQuandle, plan: &SamplePlan, tolerance: f64) -> Result<ResidualReport> {
    residual_report("self_distributivity", plan, tolerance, |rng| {
        let x = q.bundle.sample_point(rng);
        let y = q.bundle.sample_point(rng);
        let z = q.bundle.sample_point(rng);
        let (s, t) = (plan.param(rng), plan.param(rng));
        let lhs = q.op(&q.op(&x, &y, t)?, &z, s)?;
        let rhs = q.op(&q.op(&x, &z, s)?, &q.op(&y, &z, s)?, t)?;
        Ok(point_distance(&lhs, &rhs))
    })
}

/// `exp(t X(p₁·exp(s X(p₂)))) = exp(−s X(p₂)) exp(t X(p₁)) exp(s X(p₂))`.
pub fn check_key_identity(q: &ParametrizedQuandle, plan: &SamplePlan, tolerance: f64) -> Result<ResidualReport> {
    residual_report("key_identity", plan, tolerance, |rng| {
        let (p1, p2) = (q.bundle.sample_point(rng), q.bundle.sample_point(rng));
        let (s, t) = (plan.param(rng), plan.param(rng));
        let h = q.flow(&p2, s)?;
        let lhs = q.flow(&q.bundle.act(&p1, &h), t)?;
        let rhs = q.flow(&p2, -s)? * q.flow(&p1, t)? * &h;
        Ok((lhs - rhs).norm())
    })
}

/// `X(p·g) = g⁻¹ X(p) g` on random `(p, g)`.
pub fn check_section_equivariance(
    q: &ParametrizedQuandle,
    plan: &SamplePlan,
    tolerance: f64,
) -> Result<ResidualReport> {
    residual_report("section_equivariance", plan, tolerance, |rng| {
        let p = q.bundle.sample_point(rng);
        let g = q.model().random_element(rng);
        let lhs = q.x(&q.bundle.act(&p, &g));
        let rhs = q.model().inverse(&g) * q.x(&p) * &g;
        Ok((lhs - rhs).norm())
    })
}

/// Outcome of testing whether `p₁` and `p₂` fix each other for all sampled `t`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NoetherDiagnostics {
    /// `p₁ ◁ₜ p₂ = p₁` for every sampled `t`.
    pub forward_fixes: bool,
    /// `p₂ ◁ₜ p₁ = p₂` for every sampled `t`.
    pub backward_fixes: bool,
    /// `‖X(p₁) − X(p₂)‖ ≤ tolerance`, which forces both for every real `t`.
    pub algebra_equal: bool,
    pub max_forward_residual: f64,
    pub max_backward_residual: f64,
    pub algebra_gap: f64,
    /// The two directional predicates agree.
    pub agree: bool,
}

pub fn check_noether(
    q: &ParametrizedQuandle,
    p1: &LiePoint,
    p2: &LiePoint,
    t_samples: &[f64],
    tolerance: f64,
) -> Result<NoetherDiagnostics> {
    if t_samples.is_empty() {
        return Err(Error::Input("no t samples".into()));
    }
    let mut max_forward_residual = 0.0_f64;
    let mut max_backward_residual = 0.0_f64;
    for &t in t_samples {
        max_forward_residual = max_forward_residual.max(point_distance(&q.op(p1, p2, t)?, p1));
        max_backward_residual = max_backward_residual.max(point_distance(&q.op(p2, p1, t)?, p2));
    }
    let forward_fixes = max_forward_residual <= tolerance;
    let backward_fixes = max_backward_residual <= tolerance;
    let algebra_gap = (q.x(p1) - q.x(p2)).norm();
    Ok(NoetherDiagnostics {
        forward_fixes,
        backward_fixes,
        algebra_equal: algebra_gap <= tolerance,
        max_forward_residual,
        max_backward_residual,
        algebra_gap,
        agree: forward_fixes == backward_fixes,
    })
}

/// Random pairs and pairs built with `X(p₁) = X(p₂)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NoetherReport {
    pub seed: u64,
    pub random_pairs: usize,
    pub random_agreements: usize,
    /// Random pairs where the algebra criterion matched the sampled predicates.
    pub random_algebra_consistent: usize,
    pub constructed_pairs: usize,
    pub constructed_fixing_both_ways: usize,
    pub max_constructed_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

/// A partner `p₂` for `p₁` with `X(p₂) = X(p₁)`, on a random fiber.
///
/// On the same fiber `p₂ = (m, exp(α X_m) g₁)`, since `exp(α X_m)` commutes
/// with `X_m`. On another fiber `m₂` the section value there is
/// replaced by `g₂ g₁⁻¹ X_{m₁} g₁ g₂⁻¹`.
pub fn matched_pair<R: Rng>(
    q: &ParametrizedQuandle,
    p1: &LiePoint,
    rng: &mut R,
) -> Result<(ParametrizedQuandle, LiePoint)> {
    let model = q.model();
    let base = rng.random_range(0..q.bundle.base_points());
    if base == p1.base {
        let alpha = rng.random_range(-2.0..=2.0);
        let shift = mat_exp(&scaled(&q.section.section_values()[base], alpha))?;
        let p2 = LiePoint { base, coord: shift * &p1.coord };
        return Ok((q.clone(), p2));
    }
    let g2 = model.random_element(rng);
    let x1 = q.x(p1);
    let value = &g2 * x1 * model.inverse(&g2);
    let section = q.section.with_value(&q.bundle, base, value)?;
    Ok((ParametrizedQuandle::new(q.bundle.clone(), section), LiePoint { base, coord: g2 }))
}

/// Noether agreement over `plan.samples` random pairs and as many matched pairs.
pub fn noether_sweep(
    q: &ParametrizedQuandle,
    plan: &SamplePlan,
    t_count: usize,
    tolerance: f64,
) -> Result<NoetherReport> {
    let mut rng = plan.rng();
    let mut random_agreements = 0;
    let mut random_algebra_consistent = 0;
    let mut constructed_fixing_both_ways = 0;
    let mut max_constructed_residual = 0.0_f64;
    for _ in 0..plan.samples {
        let ts: Vec<f64> = (0..t_count).map(|_| plan.param(&mut rng)).collect();
        let (p1, p2) = (q.bundle.sample_point(&mut rng), q.bundle.sample_point(&mut rng));
        let d = check_noether(q, &p1, &p2, &ts, tolerance)?;
        random_agreements += usize::from(d.agree);
        random_algebra_consistent += usize::from(d.algebra_equal == d.forward_fixes);

        let (matched, partner) = matched_pair(q, &p1, &mut rng)?;
        let d = check_noether(&matched, &p1, &partner, &ts, tolerance)?;
        max_constructed_residual = max_constructed_residual.max(d.max_forward_residual).max(d.max_backward_residual);
        constructed_fixing_both_ways += usize::from(d.forward_fixes && d.backward_fixes && d.algebra_equal);
    }
    Ok(NoetherReport {
        seed: plan.seed,
        random_pairs: plan.samples,
        random_agreements,
        random_algebra_consistent,
        constructed_pairs: plan.samples,
        constructed_fixing_both_ways,
        max_constructed_residual,
        tolerance,
        passed: random_agreements == plan.samples
            && random_algebra_consistent == plan.samples
            && constructed_fixing_both_ways == plan.samples,
    })
}
