//! Trace of the curvature 2-form — the first Chern class of the
//! electromagnetic connection — and its numerical exactness checks.
//!
//! Internally every 2-form lives in the x⁰ = ct basis; the dt-based
//! coefficients of the displayed six-term expression are produced only at
//! the reporting layer (dx ∧ dt = (1/c) dx ∧ dx⁰).
//!
//! The κ-normalized trace form equals −d(E·dx) identically: the Γ·Γ terms
//! of the curvature cancel pairwise under the trace, and the surviving
//! derivative terms assemble the exterior derivative of the 1-form
//! −(E_x dx + E_y dy + E_z dz). The form is therefore exact, hence closed,
//! for any differentiable field.

use crate::algebra::{CScalar, SpacetimePoint};
use crate::connection::{build_jet, Placement};
use crate::curvature::riemann;
use crate::field::{eval_field, FieldError, FieldModel};
use crate::particle::ParticleParams;

/// Ordered index pairs of the stored 2-form components.
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Labels of the display basis, ordered time pairs first, then the
/// spatial pairs dy∧dz, dx∧dz, dx∧dy.
pub const DISPLAY_LABELS: [&str; 6] = ["dx^dt", "dy^dt", "dz^dt", "dy^dz", "dx^dz", "dx^dy"];

/// A 2-form stored as six coefficients w_ab of dx^a ∧ dx^b for a < b,
/// in 1/cm²; the a > b half is the implicit antisymmetric image.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct TwoForm {
    w: [CScalar; 6],
}

impl TwoForm {
    pub fn from_upper(w: [CScalar; 6]) -> Self {
        TwoForm { w }
    }

    /// Coefficient of dx^a ∧ dx^b for any a ≠ b (antisymmetric), zero on
    /// the diagonal.
    pub fn get(&self, a: usize, b: usize) -> CScalar {
        match PAIRS.iter().position(|&p| p == (a, b)) {
            Some(n) => self.w[n],
            None => match PAIRS.iter().position(|&p| p == (b, a)) {
                Some(n) => -self.w[n],
                None => CScalar::ZERO,
            },
        }
    }

    pub fn upper(&self) -> &[CScalar; 6] {
        &self.w
    }

    pub fn max_abs(&self) -> f64 {
        self.w.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn sub(&self, other: &TwoForm) -> TwoForm {
        let mut w = [CScalar::ZERO; 6];
        for n in 0..6 {
            w[n] = self.w[n] - other.w[n];
        }
        TwoForm { w }
    }

    pub fn scale(&self, s: f64) -> TwoForm {
        let mut w = self.w;
        for v in &mut w {
            *v *= s;
        }
        TwoForm { w }
    }

    /// Coefficients in the displayed basis and order
    /// (dx∧dt, dy∧dt, dz∧dt, dy∧dz, dx∧dz, dx∧dy): the dt-paired entries
    /// pick up the factor −c from dx^i ∧ dx⁰ = −c dx^i ∧ dt.
    pub fn display_basis(&self, c: f64) -> [CScalar; 6] {
        [
            -self.get(0, 1) * c,
            -self.get(0, 2) * c,
            -self.get(0, 3) * c,
            self.get(2, 3),
            self.get(1, 3),
            self.get(1, 2),
        ]
    }
}

/// Trace of the curvature 2-form, raw (κ retained) and κ-normalized.
#[derive(Clone, Copy, Debug)]
pub struct ChernForm {
    pub raw: TwoForm,
    pub normalized: TwoForm,
}

/// w_ab = Σ_i R^i_iab for a < b. The κ-normalized variant divides out the
/// common multiplier and is the one compared against the displayed
/// expression.
pub fn curvature_trace_form(
    model: &dyn FieldModel,
    p: SpacetimePoint,
    pp: &ParticleParams,
) -> Result<ChernForm, FieldError> {
    let jet = build_jet(model, p, pp, Placement::Full)?;
    let r = riemann(&jet);
    let mut w = [CScalar::ZERO; 6];
    for (n, &(a, b)) in PAIRS.iter().enumerate() {
        w[n] = (0..4).map(|i| r.get(i, i, a, b)).sum();
    }
    let raw = TwoForm::from_upper(w);
    Ok(ChernForm { normalized: raw.scale(1.0 / pp.kappa()), raw })
}

/// Direct evaluation of the displayed six-term 2-form from the field
/// derivatives, κ-free, stored in the x⁰ basis: w_ab = ∂_b E_a − ∂_a E_b
/// with E_0 ≡ 0.
pub fn field_derivative_form(model: &dyn FieldModel, p: SpacetimePoint) -> Result<TwoForm, FieldError> {
    let fs = eval_field(model, p)?;
    let d = |a: usize, i: usize| match i {
        0 => 0.0,
        _ => fs.de[a][i - 1],
    };
    let mut w = [CScalar::ZERO; 6];
    for (n, &(a, b)) in PAIRS.iter().enumerate() {
        w[n] = CScalar::new(d(b, a) - d(a, b), 0.0);
    }
    Ok(TwoForm::from_upper(w))
}

/// Numerical check that the κ-normalized trace form is the exterior
/// derivative of −E·dx.
#[derive(Clone, Copy, Debug)]
pub struct ExactnessReport {
    /// max |trace form − d(−E·dx)| with the exterior derivative taken by
    /// central differences of step h.
    pub deviation: f64,
    /// Same deviation at step h/2.
    pub deviation_half: f64,
    /// deviation / deviation_half; ≈ 4 for O(h²) convergence, NaN when the
    /// halved deviation underflows to zero (already exact).
    pub ratio: f64,
    pub scale: f64,
}

/// Compare the κ-normalized trace form at `p` against the finite-difference
/// exterior derivative of the 1-form −(E_x dx + E_y dy + E_z dz).
pub fn exactness_check(
    model: &dyn FieldModel,
    p: SpacetimePoint,
    pp: &ParticleParams,
    h: f64,
) -> Result<ExactnessReport, FieldError> {
    let reference = curvature_trace_form(model, p, pp)?.normalized;
    let dev = |step: f64| -> Result<f64, FieldError> {
        let d = fd_exterior_derivative(model, p, step)?;
        Ok(reference.sub(&d).max_abs())
    };
    let deviation = dev(h)?;
    let deviation_half = dev(h / 2.0)?;
    let scale = reference.max_abs().max(eval_field(model, p)?.max_abs()).max(1.0);
    Ok(ExactnessReport {
        deviation,
        deviation_half,
        ratio: deviation / deviation_half,
        scale,
    })
}

/// Closedness probe: max component of the finite-difference exterior
/// derivative of the κ-normalized trace form, a 3-form with components
/// (dw)_abc = ∂_a w_bc − ∂_b w_ac + ∂_c w_ab for a < b < c. The trace form
/// is exact, so this vanishes to the O(h²) accuracy of the differences.
pub fn closedness_check(
    model: &dyn FieldModel,
    p: SpacetimePoint,
    pp: &ParticleParams,
    h: f64,
) -> Result<f64, FieldError> {
    let form_at = |q: SpacetimePoint| -> Result<TwoForm, FieldError> {
        Ok(curvature_trace_form(model, q, pp)?.normalized)
    };
    let mut max: f64 = 0.0;
    for a in 0..4 {
        for b in (a + 1)..4 {
            for c in (b + 1)..4 {
                let d_a = form_at(p.shifted(a, h))?.get(b, c) - form_at(p.shifted(a, -h))?.get(b, c);
                let d_b = form_at(p.shifted(b, h))?.get(a, c) - form_at(p.shifted(b, -h))?.get(a, c);
                let d_c = form_at(p.shifted(c, h))?.get(a, b) - form_at(p.shifted(c, -h))?.get(a, b);
                let dw = (d_a - d_b + d_c) / (2.0 * h);
                max = max.max(dw.norm());
            }
        }
    }
    Ok(max)
}

/// Central-difference exterior derivative of ω = −E·dx:
/// (dω)_ab = ∂_a ω_b − ∂_b ω_a with ω_0 = 0, ω_i = −E_i.
fn fd_exterior_derivative(
    model: &dyn FieldModel,
    p: SpacetimePoint,
    h: f64,
) -> Result<TwoForm, FieldError> {
    // omega(q)[mu]
    let omega = |q: SpacetimePoint| -> Result<[f64; 4], FieldError> {
        let fs = eval_field(model, q)?;
        Ok([0.0, -fs.e.x, -fs.e.y, -fs.e.z])
    };
    let mut d = [[0.0; 4]; 4]; // d[a][mu] = ∂_a ω_mu
    for (a, row) in d.iter_mut().enumerate() {
        let plus = omega(p.shifted(a, h))?;
        let minus = omega(p.shifted(a, -h))?;
        for mu in 0..4 {
            row[mu] = (plus[mu] - minus[mu]) / (2.0 * h);
        }
    }
    let mut w = [CScalar::ZERO; 6];
    for (n, &(a, b)) in PAIRS.iter().enumerate() {
        w[n] = CScalar::new(d[a][b] - d[b][a], 0.0);
    }
    Ok(TwoForm::from_upper(w))
}
