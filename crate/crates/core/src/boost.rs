//! Linearized Lorentz transformation of the connection and the comparison
//! of the six "observable" component averages against the first-order
//! field transforms.
//!
//! The connection is transported as a (1,2)-tensor under the constant-γ
//! linear boost, with nothing dropped; the O(β²) truncation lives only in
//! the comparison target, where excess powers of γ are set to 1.

use crate::algebra::{CScalar, Vec3};
use crate::connection::Connection;
use crate::particle::ParticleParams;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum BoostError {
    #[error("boost speed must satisfy |beta| < 1, got {0}")]
    BadBeta(f64),
    #[error("boost axis must be 1, 2, or 3, got {0}")]
    BadAxis(usize),
}

/// A boost along one coordinate axis with velocity β = v/c.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoostSpec {
    axis: usize,
    beta: f64,
}

impl BoostSpec {
    pub fn new(axis: usize, beta: f64) -> Result<Self, BoostError> {
        if !(1..=3).contains(&axis) {
            return Err(BoostError::BadAxis(axis));
        }
        if !(beta.abs() < 1.0) {
            return Err(BoostError::BadBeta(beta));
        }
        Ok(BoostSpec { axis, beta })
    }

    pub fn axis(&self) -> usize {
        self.axis
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn gamma(&self) -> f64 {
        1.0 / (1.0 - self.beta * self.beta).sqrt()
    }
}

pub type Matrix4 = [[f64; 4]; 4];

/// Λ and Λ⁻¹ in (x⁰, x, y, z) coordinates. For a boost along z:
/// x'⁰ = γx⁰ − γβz, z' = γz − γβx⁰, transverse coordinates unchanged;
/// the inverse is the same matrix with β negated.
pub fn boost_matrix(bs: &BoostSpec) -> (Matrix4, Matrix4) {
    (matrix_for(bs.axis, bs.beta), matrix_for(bs.axis, -bs.beta))
}

fn matrix_for(axis: usize, beta: f64) -> Matrix4 {
    let gamma = 1.0 / (1.0 - beta * beta).sqrt();
    let mut m = [[0.0; 4]; 4];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    m[0][0] = gamma;
    m[axis][axis] = gamma;
    m[0][axis] = -gamma * beta;
    m[axis][0] = -gamma * beta;
    m
}

/// Γ'^i_jk = Σ Λ^i_a (Λ⁻¹)^b_j (Λ⁻¹)^d_k Γ^a_bd. Valid for connections of
/// uniform fields, where the second-derivative term of the general
/// transformation law is absent.
pub fn transform_connection(c: &Connection, bs: &BoostSpec) -> Connection {
    let (lambda, lambda_inv) = boost_matrix(bs);
    let mut out = [[[CScalar::ZERO; 4]; 4]; 4];
    for (i, plane) in out.iter_mut().enumerate() {
        for (j, row) in plane.iter_mut().enumerate() {
            for (k, slot) in row.iter_mut().enumerate() {
                let mut v = CScalar::ZERO;
                for a in 0..4 {
                    if lambda[i][a] == 0.0 {
                        continue;
                    }
                    for b in 0..4 {
                        if lambda_inv[b][j] == 0.0 {
                            continue;
                        }
                        for d in 0..4 {
                            let w = lambda[i][a] * lambda_inv[b][j] * lambda_inv[d][k];
                            if w != 0.0 {
                                v += c.get(a, b, d) * w;
                            }
                        }
                    }
                }
                *slot = v;
            }
        }
    }
    Connection::from_components(out)
}

/// The six "observable" component averages, normalized by κ so that the
/// untransformed full connection returns (E, B) exactly:
///
/// * eObs_i  = −Re Γ^i₀₀ / κ
/// * bObs_x  = Re(Γ³₀₂ + Γ³₂₀ − Γ²₃₀ − Γ²₀₃) / 2κ, and cyclic analogues.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ObservableSet {
    pub e_obs: Vec3,
    pub b_obs: Vec3,
}

pub fn observables(c: &Connection, pp: &ParticleParams) -> ObservableSet {
    let kappa = pp.kappa();
    let avg = |rows: [(usize, usize, usize); 4]| {
        let [(a1, b1, c1), (a2, b2, c2), (a3, b3, c3), (a4, b4, c4)] = rows;
        (c.get(a1, b1, c1) + c.get(a2, b2, c2) - c.get(a3, b3, c3) - c.get(a4, b4, c4)).re
            / (2.0 * kappa)
    };
    ObservableSet {
        e_obs: Vec3::new(
            -c.get(1, 0, 0).re / kappa,
            -c.get(2, 0, 0).re / kappa,
            -c.get(3, 0, 0).re / kappa,
        ),
        b_obs: Vec3::new(
            avg([(3, 0, 2), (3, 2, 0), (2, 3, 0), (2, 0, 3)]),
            avg([(1, 0, 3), (1, 3, 0), (3, 1, 0), (3, 0, 1)]),
            avg([(2, 0, 1), (2, 1, 0), (1, 2, 0), (1, 0, 2)]),
        ),
    }
}

/// First-order transformed fields for a boost along `axis`, with γ → 1:
/// e.g. along z, E_x → E_x − βB_y, B_x → B_x + βE_y, the parallel
/// components unchanged.
pub fn first_order_fields(e: Vec3, b: Vec3, bs: &BoostSpec) -> (Vec3, Vec3) {
    let beta = bs.beta();
    let n = axis_unit(bs.axis());
    // E' = E + β n×B, B' = B − β n×E to first order
    (e + n.cross(b) * beta, b - n.cross(e) * beta)
}

/// Transformed fields with the γ factors of the textbook boost retained on
/// the transverse components (reported for transparency, not compared).
pub fn gamma_transformed_fields(e: Vec3, b: Vec3, bs: &BoostSpec) -> (Vec3, Vec3) {
    let beta = bs.beta();
    let gamma = bs.gamma();
    let n = axis_unit(bs.axis());
    let e_par = n * e.dot(n);
    let b_par = n * b.dot(n);
    let e_t = (e - e_par + n.cross(b) * beta) * gamma;
    let b_t = (b - b_par - n.cross(e) * beta) * gamma;
    (e_par + e_t, b_par + b_t)
}

fn axis_unit(axis: usize) -> Vec3 {
    match axis {
        1 => Vec3::new(1.0, 0.0, 0.0),
        2 => Vec3::new(0.0, 1.0, 0.0),
        _ => Vec3::new(0.0, 0.0, 1.0),
    }
}

/// Deviation bound constant for [`boost_check`]: per-row deviation from
/// the first-order target is required to stay below `BOOST_DEVIATION_BOUND·β²`
/// for unit-magnitude fields. Fitted once from the β-scaling sweep and frozen.
pub const BOOST_DEVIATION_BOUND: f64 = 10.0;

/// One row of the observable-average comparison.
#[derive(Clone, Copy, Debug)]
pub struct ObservableRow {
    pub label: &'static str,
    pub initial: f64,
    pub observed: f64,
    /// First-order target with γ → 1.
    pub expected: f64,
    /// Target with the γ factors retained, for transparency.
    pub expected_gamma: f64,
    pub deviation: f64,
}

#[derive(Clone, Debug)]
pub struct BoostReport {
    pub rows: [ObservableRow; 6],
    pub beta: f64,
    /// The per-row deviation bound C·β² in force for this report.
    pub bound: f64,
}

impl BoostReport {
    pub fn max_deviation(&self) -> f64 {
        self.rows.iter().map(|r| r.deviation.abs()).fold(0.0, f64::max)
    }

    pub fn within_bound(&self) -> bool {
        self.rows.iter().all(|r| r.deviation.abs() <= self.bound)
    }
}

/// Transform the connection of the uniform fields (E, B), read the
/// observable averages back, and compare them with the first-order field
/// transforms.
pub fn boost_check(e: Vec3, b: Vec3, bs: &BoostSpec, pp: &ParticleParams) -> BoostReport {
    let fs = crate::field::FieldSample::uniform(e, b);
    let gamma = crate::connection::build_connection(&fs, pp, crate::connection::Placement::Full);
    let obs = observables(&transform_connection(&gamma, bs), pp);
    let (e1, b1) = first_order_fields(e, b, bs);
    let (eg, bg) = gamma_transformed_fields(e, b, bs);

    let labels = ["B_x", "B_y", "B_z", "E_x", "E_y", "E_z"];
    let initial = [b.x, b.y, b.z, e.x, e.y, e.z];
    let observed = [
        obs.b_obs.x, obs.b_obs.y, obs.b_obs.z,
        obs.e_obs.x, obs.e_obs.y, obs.e_obs.z,
    ];
    let expected = [b1.x, b1.y, b1.z, e1.x, e1.y, e1.z];
    let expected_gamma = [bg.x, bg.y, bg.z, eg.x, eg.y, eg.z];

    let mut rows = [ObservableRow {
        label: "",
        initial: 0.0,
        observed: 0.0,
        expected: 0.0,
        expected_gamma: 0.0,
        deviation: 0.0,
    }; 6];
    for (n, row) in rows.iter_mut().enumerate() {
        *row = ObservableRow {
            label: labels[n],
            initial: initial[n],
            observed: observed[n],
            expected: expected[n],
            expected_gamma: expected_gamma[n],
            deviation: observed[n] - expected[n],
        };
    }
    BoostReport { rows, beta: bs.beta(), bound: BOOST_DEVIATION_BOUND * bs.beta() * bs.beta() }
}
