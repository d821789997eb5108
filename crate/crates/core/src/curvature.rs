//! Curvature of the electromagnetic connection: the Riemann tensor, its
//! Ricci contraction, the three symmetry combinations whose vanishing
//! expresses Coulomb's, Ampère's, and Faraday's laws, geometric source
//! densities, and the continuity check.
//!
//! Closed forms carried by the symmetry combinations (complex arithmetic
//! throughout, with the right-hand sides real):
//!
//! * Σᵢ R_ii            = κ²(E² + B²) + 2κ ∇·E
//! * R_0i + R_i0        = κ²(E×B)_i + κ(∇×B − ∂E/∂x⁰)_i
//! * R_ij − R_ji        = κ(∇×E + ∂B/∂x⁰)_k  for (i,j,k) cyclic
//!
//! so each combination vanishes exactly on fields obeying the matching
//! Maxwell equation.

use crate::algebra::{CScalar, SpacetimePoint, Vec3};
use crate::connection::{ConnectionJet, Placement};
use crate::field::{eval_field, FieldError, FieldModel, FieldSample};
use crate::particle::ParticleParams;

/// Rank-4 curvature tensor R^i_jkl in 1/cm², antisymmetric in (k, l).
#[derive(Clone, Debug)]
pub struct Riemann {
    r: Box<[[[[CScalar; 4]; 4]; 4]; 4]>,
}

impl Riemann {
    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> CScalar {
        self.r[i][j][k][l]
    }

    pub fn max_abs(&self) -> f64 {
        let mut m: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    for l in 0..4 {
                        let v = self.r[i][j][k][l];
                        m = m.max(v.re.abs()).max(v.im.abs());
                    }
                }
            }
        }
        m
    }
}

/// Ricci tensor R_ij = Σ_k R^k_jki.
#[derive(Clone, Copy, Debug)]
pub struct Ricci {
    ric: [[CScalar; 4]; 4],
}

impl Ricci {
    pub fn get(&self, i: usize, j: usize) -> CScalar {
        self.ric[i][j]
    }

    pub fn trace(&self) -> CScalar {
        (0..4).map(|i| self.ric[i][i]).sum()
    }
}

/// R^i_jkl = (∂Γ^i_lj/∂x_k − ∂Γ^i_kj/∂x_l)
///         + Σ_m (Γ^m_lj Γ^i_km − Γ^m_kj Γ^i_lm).
pub fn riemann(jet: &ConnectionJet) -> Riemann {
    let g = &jet.gamma;
    let mut r = Box::new([[[[CScalar::ZERO; 4]; 4]; 4]; 4]);
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                for l in 0..4 {
                    let mut v = jet.d_gamma[k].get(i, l, j) - jet.d_gamma[l].get(i, k, j);
                    for m in 0..4 {
                        v += g.get(m, l, j) * g.get(i, k, m) - g.get(m, k, j) * g.get(i, l, m);
                    }
                    r[i][j][k][l] = v;
                }
            }
        }
    }
    Riemann { r }
}

/// Contraction R_ij = Σ_k R^k_jki.
pub fn ricci(r: &Riemann) -> Ricci {
    let mut ric = [[CScalar::ZERO; 4]; 4];
    for (i, row) in ric.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            *slot = (0..4).map(|k| r.get(k, j, k, i)).sum();
        }
    }
    Ricci { ric }
}

/// Charge density, current density, energy density, and Poynting vector
/// tied to the geometry: ρ = −κu with u = (E²+B²)/8π, and J = −κS with
/// S = (c/4π) E×B.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SourceDensities {
    pub rho: f64,
    pub j: Vec3,
    pub u: f64,
    pub s: Vec3,
}

pub fn geometric_sources(fs: &FieldSample, pp: &ParticleParams) -> SourceDensities {
    let u = (fs.e.norm_sqr() + fs.b.norm_sqr()) / (8.0 * std::f64::consts::PI);
    let s = fs.e.cross(fs.b) * (pp.c() / (4.0 * std::f64::consts::PI));
    let kappa = pp.kappa();
    SourceDensities { rho: -kappa * u, j: s * (-kappa), u, s }
}

/// The three Ricci symmetry combinations at one point, each paired with its
/// closed-form right-hand side. Residual = complex combination minus real
/// closed form; the scale is max(1, κ²(E²+B²)).
#[derive(Clone, Copy, Debug)]
pub struct SymmetryReport {
    pub trace: CScalar,
    /// R_0i + R_i0 for i = 1, 2, 3.
    pub mixed: [CScalar; 3],
    /// R_12 − R_21, R_31 − R_13, R_23 − R_32.
    pub spatial: [CScalar; 3],
    pub trace_expected: f64,
    pub mixed_expected: [f64; 3],
    pub spatial_expected: [f64; 3],
    scale: f64,
}

/// Index pairs of the spatial differences, in report order.
pub const SPATIAL_PAIRS: [(usize, usize); 3] = [(1, 2), (3, 1), (2, 3)];

impl SymmetryReport {
    pub fn residual_trace(&self) -> CScalar {
        self.trace - self.trace_expected
    }

    pub fn residual_mixed(&self, i: usize) -> CScalar {
        self.mixed[i] - self.mixed_expected[i]
    }

    pub fn residual_spatial(&self, i: usize) -> CScalar {
        self.spatial[i] - self.spatial_expected[i]
    }

    /// max(1, κ²(E²+B²)): the reference magnitude residual tolerances are
    /// measured against.
    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// Largest residual magnitude across all seven combinations.
    pub fn max_residual(&self) -> f64 {
        let mut m = self.residual_trace().norm();
        for i in 0..3 {
            m = m.max(self.residual_mixed(i).norm());
            m = m.max(self.residual_spatial(i).norm());
        }
        m
    }
}

/// Evaluate the Ricci symmetry combinations and their closed forms at `p`.
pub fn symmetry_report(
    model: &dyn FieldModel,
    p: SpacetimePoint,
    pp: &ParticleParams,
    pl: Placement,
) -> Result<SymmetryReport, FieldError> {
    let fs = eval_field(model, p)?;
    let jet = crate::connection::jet_from_sample(&fs, pp, pl);
    Ok(symmetry_report_from(&fs, &jet, pp))
}

/// Same as [`symmetry_report`] for an already assembled sample and jet.
pub fn symmetry_report_from(
    fs: &FieldSample,
    jet: &ConnectionJet,
    pp: &ParticleParams,
) -> SymmetryReport {
    let ric = ricci(&riemann(jet));
    let kappa = pp.kappa();
    let e2b2 = fs.e.norm_sqr() + fs.b.norm_sqr();
    let exb = fs.e.cross(fs.b);
    let ampere = fs.curl_b() - fs.de[0];
    let faraday = fs.curl_e() + fs.db[0];

    let mixed = [
        ric.get(0, 1) + ric.get(1, 0),
        ric.get(0, 2) + ric.get(2, 0),
        ric.get(0, 3) + ric.get(3, 0),
    ];
    let spatial = [
        ric.get(1, 2) - ric.get(2, 1),
        ric.get(3, 1) - ric.get(1, 3),
        ric.get(2, 3) - ric.get(3, 2),
    ];
    // pair (1,2) ↔ z, (3,1) ↔ y, (2,3) ↔ x
    let spatial_expected = [kappa * faraday.z, kappa * faraday.y, kappa * faraday.x];
    let mixed_expected = [
        kappa * kappa * exb.x + kappa * ampere.x,
        kappa * kappa * exb.y + kappa * ampere.y,
        kappa * kappa * exb.z + kappa * ampere.z,
    ];

    SymmetryReport {
        trace: ric.trace(),
        mixed,
        spatial,
        trace_expected: kappa * kappa * e2b2 + 2.0 * kappa * fs.div_e(),
        mixed_expected,
        spatial_expected,
        scale: (kappa * kappa * e2b2).max(1.0),
    }
}

/// Continuity of the geometric sources at one point.
#[derive(Clone, Copy, Debug)]
pub struct ContinuityCheck {
    /// ∂ρ/∂t + ∇·J, assembled from the field derivative slots.
    pub residual: f64,
    /// J·E, identically zero because J ∝ E×B.
    pub j_dot_e: f64,
    /// Reference magnitude for relative comparisons.
    pub scale: f64,
}

/// ∂ρ/∂t + ∇·J for ρ = −κ(E²+B²)/8π and J = −κ(c/4π)E×B:
///
///   −κc/4π · [ E·∂E/∂x⁰ + B·∂B/∂x⁰ + B·(∇×E) − E·(∇×B) ]
///
/// which vanishes on Maxwell-consistent fields (Poynting's theorem with
/// J·E = 0).
pub fn continuity_residual(
    model: &dyn FieldModel,
    p: SpacetimePoint,
    pp: &ParticleParams,
) -> Result<ContinuityCheck, FieldError> {
    let fs = eval_field(model, p)?;
    let kappa = pp.kappa();
    let c = pp.c();
    let pref = -kappa * c / (4.0 * std::f64::consts::PI);
    let residual = pref
        * (fs.e.dot(fs.de[0]) + fs.b.dot(fs.db[0]) + fs.b.dot(fs.curl_e())
            - fs.e.dot(fs.curl_b()));
    let sources = geometric_sources(&fs, pp);
    let j_dot_e = sources.j.dot(fs.e);
    let scale = (kappa.abs() * c * (fs.e.norm_sqr() + fs.b.norm_sqr())).max(1.0)
        * fs.max_abs().max(1.0);
    Ok(ContinuityCheck { residual, j_dot_e, scale })
}
