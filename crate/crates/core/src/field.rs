//! Electromagnetic field models: pointwise E and B values together with all
//! eight first-derivative vectors, analytic preset fields, and a
//! central-difference adapter for derivative-free field descriptions.
//!
//! Derivative convention: `de[a]` is ∂E/∂x^a with x^0 = ct, so the stored
//! "time" derivative is (1/c) ∂E/∂t. Presets with closed-form derivatives
//! fill the slots exactly; the finite-difference adapter fills them to
//! O(h²).

use crate::algebra::{SpacetimePoint, Vec3};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum FieldError {
    #[error("field model '{model}' is singular at ({0}, {1}, {2}, {3})", point.0[0], point.0[1], point.0[2], point.0[3])]
    Singularity { model: String, point: SpacetimePoint },
    #[error("field model evaluated at non-finite point")]
    NonFinitePoint,
    #[error("unknown field preset '{0}'")]
    UnknownPreset(String),
    #[error("invalid parameter for preset '{preset}': {message}")]
    InvalidParameter { preset: String, message: String },
}

/// E, B, and their four spacetime derivatives at one point.
///
/// `de[a]` = ∂E/∂x^a and `db[a]` = ∂B/∂x^a for a ∈ {0,1,2,3}.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct FieldSample {
    pub e: Vec3,
    pub b: Vec3,
    pub de: [Vec3; 4],
    pub db: [Vec3; 4],
}

impl FieldSample {
    pub fn uniform(e: Vec3, b: Vec3) -> Self {
        FieldSample { e, b, ..Default::default() }
    }

    /// ∇·E from the spatial derivative slots.
    pub fn div_e(&self) -> f64 {
        self.de[1].x + self.de[2].y + self.de[3].z
    }

    /// ∇·B from the spatial derivative slots.
    pub fn div_b(&self) -> f64 {
        self.db[1].x + self.db[2].y + self.db[3].z
    }

    /// ∇×E from the spatial derivative slots.
    pub fn curl_e(&self) -> Vec3 {
        Vec3::new(
            self.de[2].z - self.de[3].y,
            self.de[3].x - self.de[1].z,
            self.de[1].y - self.de[2].x,
        )
    }

    /// ∇×B from the spatial derivative slots.
    pub fn curl_b(&self) -> Vec3 {
        Vec3::new(
            self.db[2].z - self.db[3].y,
            self.db[3].x - self.db[1].z,
            self.db[1].y - self.db[2].x,
        )
    }

    /// The sample whose field values are the derivative slice `a` of this
    /// sample, with its own derivative slots zeroed. Used to push linearity
    /// of the connection through to connection derivatives.
    pub fn derivative_slice(&self, a: usize) -> FieldSample {
        FieldSample::uniform(self.de[a], self.db[a])
    }

    /// Largest field or derivative component magnitude.
    pub fn max_abs(&self) -> f64 {
        let mut m = self.e.max_abs().max(self.b.max_abs());
        for a in 0..4 {
            m = m.max(self.de[a].max_abs()).max(self.db[a].max_abs());
        }
        m
    }

    /// Residuals of the four source-free Maxwell equations at this sample:
    /// (∇·E, ∇·B, max |∇×E + ∂B/∂x⁰|, max |∇×B − ∂E/∂x⁰|).
    pub fn maxwell_residuals(&self) -> (f64, f64, f64, f64) {
        let faraday = self.curl_e() + self.db[0];
        let ampere = self.curl_b() - self.de[0];
        (self.div_e(), self.div_b(), faraday.max_abs(), ampere.max_abs())
    }
}

/// A deterministic, side-effect-free map from spacetime points to field
/// samples, with metadata used by verification suites.
pub trait FieldModel: Send + Sync {
    fn name(&self) -> &str;

    /// True when the derivative slots are filled from closed forms rather
    /// than finite differences.
    fn analytic_derivatives(&self) -> bool {
        true
    }

    /// True when the model satisfies the source-free Maxwell equations at
    /// every regular point.
    fn maxwell_consistent(&self) -> bool;

    fn sample(&self, p: SpacetimePoint) -> Result<FieldSample, FieldError>;
}

/// Evaluate a model at `p`: the model's E, B, and all eight derivative
/// vectors.
pub fn eval_field(model: &dyn FieldModel, p: SpacetimePoint) -> Result<FieldSample, FieldError> {
    if !p.is_finite() {
        return Err(FieldError::NonFinitePoint);
    }
    model.sample(p)
}

// ---------------------------------------------------------------------------
// Presets
// ---------------------------------------------------------------------------

/// Constant E and B everywhere; all derivatives vanish.
#[derive(Clone, Debug)]
pub struct UniformField {
    name: String,
    e: Vec3,
    b: Vec3,
}

impl FieldModel for UniformField {
    fn name(&self) -> &str {
        &self.name
    }

    fn maxwell_consistent(&self) -> bool {
        true
    }

    fn sample(&self, _p: SpacetimePoint) -> Result<FieldSample, FieldError> {
        Ok(FieldSample::uniform(self.e, self.b))
    }
}

pub fn uniform_e(e: Vec3) -> UniformField {
    UniformField { name: "uniform_E".into(), e, b: Vec3::zero() }
}

pub fn uniform_b(b: Vec3) -> UniformField {
    UniformField { name: "uniform_B".into(), e: Vec3::zero(), b }
}

pub fn crossed_eb(e: Vec3, b: Vec3) -> UniformField {
    UniformField { name: "crossed_EB".into(), e, b }
}

/// Linearly polarized plane wave moving toward +z:
/// E = (E₀ cos φ, 0, 0), B = (0, E₀ cos φ, 0) with φ = k (z − ct).
/// k = 0 degenerates to a uniform crossed field and is allowed.
#[derive(Clone, Debug)]
pub struct PlaneWave {
    pub e0: f64,
    pub k: f64,
}

pub fn plane_wave(e0: f64, k: f64) -> PlaneWave {
    PlaneWave { e0, k }
}

impl FieldModel for PlaneWave {
    fn name(&self) -> &str {
        "plane_wave"
    }

    fn maxwell_consistent(&self) -> bool {
        true
    }

    fn sample(&self, p: SpacetimePoint) -> Result<FieldSample, FieldError> {
        let phase = self.k * (p[3] - p[0]);
        let (s, c) = phase.sin_cos();
        let amp = self.e0 * c;
        let damp = self.e0 * self.k * s; // d(amp)/dx^3 = -damp·(-1)… see below
        let mut fs = FieldSample::uniform(Vec3::new(amp, 0.0, 0.0), Vec3::new(0.0, amp, 0.0));
        // ∂(E₀ cos k(x³−x⁰))/∂x⁰ = +E₀ k sin φ ; ∂/∂x³ = −E₀ k sin φ
        fs.de[0] = Vec3::new(damp, 0.0, 0.0);
        fs.de[3] = Vec3::new(-damp, 0.0, 0.0);
        fs.db[0] = Vec3::new(0.0, damp, 0.0);
        fs.db[3] = Vec3::new(0.0, -damp, 0.0);
        Ok(fs)
    }
}

/// Static Coulomb field E = q_src r̂ / r², B = 0, singular at the spatial
/// origin.
#[derive(Clone, Debug)]
pub struct Coulomb {
    pub q_src: f64,
}

pub fn coulomb(q_src: f64) -> Coulomb {
    Coulomb { q_src }
}

impl FieldModel for Coulomb {
    fn name(&self) -> &str {
        "coulomb"
    }

    fn maxwell_consistent(&self) -> bool {
        // ∇·E = 0 and ∇×E = 0 away from the singular worldline.
        true
    }

    fn sample(&self, p: SpacetimePoint) -> Result<FieldSample, FieldError> {
        let r = p.spatial();
        let r2 = r.norm_sqr();
        if r2 == 0.0 {
            return Err(FieldError::Singularity { model: "coulomb".into(), point: p });
        }
        let rn = r2.sqrt();
        let r3 = r2 * rn;
        let r5 = r3 * r2;
        let mut fs = FieldSample::uniform(r * (self.q_src / r3), Vec3::zero());
        // ∂E_i/∂x_j = q (δ_ij / r³ − 3 x_i x_j / r⁵)
        for j in 1..4 {
            let xj = p[j];
            let mut d = Vec3::new(
                -3.0 * self.q_src * r.x * xj / r5,
                -3.0 * self.q_src * r.y * xj / r5,
                -3.0 * self.q_src * r.z * xj / r5,
            );
            match j {
                1 => d.x += self.q_src / r3,
                2 => d.y += self.q_src / r3,
                _ => d.z += self.q_src / r3,
            }
            fs.de[j] = d;
        }
        Ok(fs)
    }
}

/// Field affine in the coordinates: E = E₀ + G_E · x, B = B₀ + G_B · x,
/// with arbitrary 3×4 gradient matrices (columns indexed by x^a). The
/// gradients need not satisfy Maxwell's equations, which makes this the
/// preset of choice for driving identity checks off-shell; the consistency
/// flag is computed truthfully from the matrices.
#[derive(Clone, Debug)]
pub struct LinearGradient {
    pub e0: Vec3,
    pub b0: Vec3,
    /// grad_e[i][a] = ∂E_i/∂x^a
    pub grad_e: [[f64; 4]; 3],
    /// grad_b[i][a] = ∂B_i/∂x^a
    pub grad_b: [[f64; 4]; 3],
    maxwell: bool,
}

pub fn linear_gradient(
    e0: Vec3,
    b0: Vec3,
    grad_e: [[f64; 4]; 3],
    grad_b: [[f64; 4]; 3],
) -> LinearGradient {
    let probe = FieldSample {
        e: e0,
        b: b0,
        de: columns(&grad_e),
        db: columns(&grad_b),
    };
    let (div_e, div_b, faraday, ampere) = probe.maxwell_residuals();
    let maxwell =
        div_e == 0.0 && div_b == 0.0 && faraday == 0.0 && ampere == 0.0;
    LinearGradient { e0, b0, grad_e, grad_b, maxwell }
}

fn columns(g: &[[f64; 4]; 3]) -> [Vec3; 4] {
    let mut out = [Vec3::zero(); 4];
    for (a, slot) in out.iter_mut().enumerate() {
        *slot = Vec3::new(g[0][a], g[1][a], g[2][a]);
    }
    out
}

impl FieldModel for LinearGradient {
    fn name(&self) -> &str {
        "linear_gradient"
    }

    fn maxwell_consistent(&self) -> bool {
        self.maxwell
    }

    fn sample(&self, p: SpacetimePoint) -> Result<FieldSample, FieldError> {
        let de = columns(&self.grad_e);
        let db = columns(&self.grad_b);
        let mut e = self.e0;
        let mut b = self.b0;
        for a in 0..4 {
            e += de[a] * p[a];
            b += db[a] * p[a];
        }
        Ok(FieldSample { e, b, de, db })
    }
}

// ---------------------------------------------------------------------------
// Finite-difference adapter
// ---------------------------------------------------------------------------

/// Wraps a derivative-free field description; derivative slots are filled
/// with central differences, O(h²) accurate. The step is either fixed or,
/// by default, cbrt(machine epsilon) × max(1, |coordinate|) per axis.
pub struct FiniteDifference<F> {
    name: String,
    raw: F,
    h: Option<f64>,
    maxwell: bool,
}

/// `raw` maps a point to (E, B). `h` must be positive.
pub fn finite_difference_adapter<F>(raw: F, h: f64, maxwell: bool) -> FiniteDifference<F>
where
    F: Fn(SpacetimePoint) -> Result<(Vec3, Vec3), FieldError> + Send + Sync,
{
    assert!(h > 0.0, "finite-difference step must be positive");
    FiniteDifference { name: "finite_difference".into(), raw, h: Some(h), maxwell }
}

/// Finite-difference adapter with the per-axis default step.
pub fn finite_difference_adapter_auto<F>(raw: F, maxwell: bool) -> FiniteDifference<F>
where
    F: Fn(SpacetimePoint) -> Result<(Vec3, Vec3), FieldError> + Send + Sync,
{
    FiniteDifference { name: "finite_difference".into(), raw, h: None, maxwell }
}

impl<F> FieldModel for FiniteDifference<F>
where
    F: Fn(SpacetimePoint) -> Result<(Vec3, Vec3), FieldError> + Send + Sync,
{
    fn name(&self) -> &str {
        &self.name
    }

    fn analytic_derivatives(&self) -> bool {
        false
    }

    fn maxwell_consistent(&self) -> bool {
        self.maxwell
    }

    fn sample(&self, p: SpacetimePoint) -> Result<FieldSample, FieldError> {
        let (e, b) = (self.raw)(p)?;
        let mut fs = FieldSample::uniform(e, b);
        for a in 0..4 {
            let h = self.h.unwrap_or_else(|| default_fd_step(p[a]));
            let (ep, bp) = (self.raw)(p.shifted(a, h))?;
            let (em, bm) = (self.raw)(p.shifted(a, -h))?;
            fs.de[a] = (ep - em) / (2.0 * h);
            fs.db[a] = (bp - bm) / (2.0 * h);
        }
        Ok(fs)
    }
}

/// Default central-difference step for coordinate magnitude `x`:
/// cbrt(machine epsilon) × max(1, |x|).
pub fn default_fd_step(x: f64) -> f64 {
    f64::EPSILON.cbrt() * x.abs().max(1.0)
}

// ---------------------------------------------------------------------------
// Preset factory (CLI surface)
// ---------------------------------------------------------------------------

/// Numeric parameters accepted by [`preset`]. Unused entries are ignored by
/// presets that do not need them; required entries missing from the bag are
/// reported as [`FieldError::InvalidParameter`].
#[derive(Clone, Debug, Default)]
pub struct PresetParams {
    pub e: Option<Vec3>,
    pub b: Option<Vec3>,
    pub e0: Option<f64>,
    pub k: Option<f64>,
    pub q_src: Option<f64>,
    pub grad_e: Option<[[f64; 4]; 3]>,
    pub grad_b: Option<[[f64; 4]; 3]>,
}

/// Preset names accepted by [`preset`].
pub const PRESET_NAMES: [&str; 6] = [
    "uniform_E",
    "uniform_B",
    "crossed_EB",
    "plane_wave",
    "coulomb",
    "linear_gradient",
];

/// Build a field model by preset name.
pub fn preset(name: &str, params: &PresetParams) -> Result<Box<dyn FieldModel>, FieldError> {
    let missing = |what: &str| FieldError::InvalidParameter {
        preset: name.to_string(),
        message: format!("missing parameter '{what}'"),
    };
    match name {
        "uniform_E" => Ok(Box::new(uniform_e(params.e.ok_or_else(|| missing("field.e"))?))),
        "uniform_B" => Ok(Box::new(uniform_b(params.b.ok_or_else(|| missing("field.b"))?))),
        "crossed_EB" => Ok(Box::new(crossed_eb(
            params.e.ok_or_else(|| missing("field.e"))?,
            params.b.ok_or_else(|| missing("field.b"))?,
        ))),
        "plane_wave" => Ok(Box::new(plane_wave(
            params.e0.ok_or_else(|| missing("field.e0"))?,
            params.k.ok_or_else(|| missing("field.k"))?,
        ))),
        "coulomb" => Ok(Box::new(coulomb(params.q_src.ok_or_else(|| missing("field.q_src"))?))),
        "linear_gradient" => Ok(Box::new(linear_gradient(
            params.e.unwrap_or(Vec3::zero()),
            params.b.unwrap_or(Vec3::zero()),
            params.grad_e.unwrap_or_default(),
            params.grad_b.unwrap_or_default(),
        ))),
        other => Err(FieldError::UnknownPreset(other.to_string())),
    }
}
