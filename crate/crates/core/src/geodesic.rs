//! Charged-particle dynamics from the real parts of the connection: the
//! extended Lorentz force with its fourth (time) equation, a fixed-step
//! fourth-order integrator, the classical baseline, pointwise force
//! probes, and the decay-rate asymmetry experiment.
//!
//! State convention: the path parameter is s = cτ (a length), the
//! 4-velocity is u^μ = dx^μ/ds, so u⁰ = dt/dτ and the spatial components
//! are velocities in units of c. The equations of motion are
//!
//!   du^μ/ds = −Σ_jk Re(Γ^μ_jk) u^j u^k,
//!
//! whose time component reduces to du⁰/ds = 2κ(E·u⃗)u⁰: lab time runs fast
//! or slow against proper time according to the sign of E·v. No metric is
//! assumed anywhere, so no normalization is imposed on u; launches choose
//! u⁰ directly (default 1).

use crate::algebra::{SpacetimePoint, Vec3};
use crate::connection::{build_connection, Placement};
use crate::field::{eval_field, FieldError, FieldModel, FieldSample};
use crate::particle::ParticleParams;
use thiserror::Error;

/// Why an integration stopped before reaching its horizon.
#[derive(Debug, Error, PartialEq)]
pub enum AbortReason {
    #[error("time reversal: u0 = {u0}")]
    TimeReversal { u0: f64 },
    #[error(transparent)]
    Singularity(#[from] FieldError),
}

#[derive(Debug, Error, PartialEq)]
pub enum IntegrateError {
    #[error("integration step must be positive, got {0}")]
    BadStep(f64),
    #[error("integration horizon must be positive, got {0}")]
    BadHorizon(f64),
    #[error("integration aborted at s = {s}: {reason}")]
    Aborted {
        s: f64,
        /// Last state that passed the runtime monitors.
        last_good: GeodesicState,
        reason: AbortReason,
    },
}

#[derive(Debug, Error, PartialEq)]
pub enum DecayError {
    #[error(transparent)]
    Integrate(#[from] IntegrateError),
    #[error("decay experiment requires a proper lifetime tau0 on the particle")]
    MissingLifetime,
}

/// Position and 4-velocity of a test particle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeodesicState {
    pub x: SpacetimePoint,
    pub u: [f64; 4],
}

impl GeodesicState {
    /// Launch at `x` with spatial velocity `v` in units of c and u⁰ = 1.
    pub fn launch(x: SpacetimePoint, v_over_c: Vec3) -> Self {
        GeodesicState { x, u: [1.0, v_over_c.x, v_over_c.y, v_over_c.z] }
    }

    pub fn u_spatial(&self) -> Vec3 {
        Vec3::new(self.u[1], self.u[2], self.u[3])
    }
}

/// d(state)/ds: coordinate and velocity derivatives.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StateDerivative {
    pub dx: [f64; 4],
    pub du: [f64; 4],
}

/// Which force law drives the integration.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Rhs {
    /// Full geodesic equation from the real connection components.
    Geodesic(Placement),
    /// Classical Lorentz force with u⁰ held constant.
    Classical,
}

/// du^μ/ds = −Σ_jk Re(Γ^μ_jk) u^j u^k, dx^μ/ds = u^μ.
pub fn geodesic_rhs(
    st: &GeodesicState,
    model: &dyn FieldModel,
    pp: &ParticleParams,
    pl: Placement,
) -> Result<StateDerivative, FieldError> {
    let fs = eval_field(model, st.x)?;
    Ok(geodesic_rhs_from_sample(st, &fs, pp, pl))
}

/// Same as [`geodesic_rhs`] for an already evaluated field sample.
pub fn geodesic_rhs_from_sample(
    st: &GeodesicState,
    fs: &FieldSample,
    pp: &ParticleParams,
    pl: Placement,
) -> StateDerivative {
    let g = build_connection(fs, pp, pl);
    let mut du = [0.0; 4];
    for (mu, slot) in du.iter_mut().enumerate() {
        let mut acc = 0.0;
        for j in 0..4 {
            for k in 0..4 {
                let re = g.get(mu, j, k).re;
                if re != 0.0 {
                    acc -= re * st.u[j] * st.u[k];
                }
            }
        }
        *slot = acc;
    }
    StateDerivative { dx: st.u, du }
}

/// Classical baseline: du^i/ds = κ(E_i u⁰ + (u⃗×B)_i) u⁰ with du⁰/ds = 0.
pub fn classical_rhs(
    st: &GeodesicState,
    model: &dyn FieldModel,
    pp: &ParticleParams,
) -> Result<StateDerivative, FieldError> {
    let fs = eval_field(model, st.x)?;
    let kappa = pp.kappa();
    let u0 = st.u[0];
    let f = (fs.e * u0 + st.u_spatial().cross(fs.b)) * (kappa * u0);
    Ok(StateDerivative { dx: st.u, du: [0.0, f.x, f.y, f.z] })
}

fn rhs_eval(
    rhs: Rhs,
    st: &GeodesicState,
    model: &dyn FieldModel,
    pp: &ParticleParams,
) -> Result<StateDerivative, FieldError> {
    match rhs {
        Rhs::Geodesic(pl) => geodesic_rhs(st, model, pp, pl),
        Rhs::Classical => classical_rhs(st, model, pp),
    }
}

/// One integration sample: path parameter s (cm) and the state there.
#[derive(Clone, Copy, Debug)]
pub struct TrajectorySample {
    pub s: f64,
    pub state: GeodesicState,
}

impl TrajectorySample {
    /// Proper time s/c in seconds.
    pub fn tau(&self, pp: &ParticleParams) -> f64 {
        self.s / pp.c()
    }

    /// Lab time x⁰/c in seconds.
    pub fn t(&self, pp: &ParticleParams) -> f64 {
        self.state.x.ct() / pp.c()
    }

    /// dt/dτ = u⁰.
    pub fn dt_dtau(&self) -> f64 {
        self.state.u[0]
    }
}

/// Integration output: samples at every accepted step, strictly increasing
/// in s, plus the method metadata.
#[derive(Clone, Debug)]
pub struct Trajectory {
    pub samples: Vec<TrajectorySample>,
    pub step: f64,
    pub method_order: u32,
}

impl Trajectory {
    pub fn last(&self) -> &TrajectorySample {
        self.samples.last().expect("trajectory has at least the launch sample")
    }

    /// Peak relative drift of |u⃗| against the launch value, meaningful for
    /// pure magnetic motion where speed is conserved.
    pub fn speed_drift(&self) -> f64 {
        let v0 = self.samples[0].state.u_spatial().norm();
        if v0 == 0.0 {
            return 0.0;
        }
        self.samples
            .iter()
            .map(|s| (s.state.u_spatial().norm() - v0).abs() / v0)
            .fold(0.0, f64::max)
    }

    /// Peak drift of u⁰ against the launch value.
    pub fn u0_drift(&self) -> f64 {
        let u0 = self.samples[0].state.u[0];
        self.samples
            .iter()
            .map(|s| (s.state.u[0] - u0).abs())
            .fold(0.0, f64::max)
    }
}

/// Classical fixed-step RK4 in s from 0 to `s_end`, with the final step
/// shortened to land exactly on `s_end`. Every accepted state must keep
/// u⁰ > 0; a violation aborts with the failing s and the last good state
/// still in the trajectory.
pub fn integrate(
    rhs: Rhs,
    st0: GeodesicState,
    model: &dyn FieldModel,
    pp: &ParticleParams,
    s_end: f64,
    h: f64,
) -> Result<Trajectory, IntegrateError> {
    if !(h > 0.0) {
        return Err(IntegrateError::BadStep(h));
    }
    if !(s_end > 0.0) {
        return Err(IntegrateError::BadHorizon(s_end));
    }
    if st0.u[0] <= 0.0 {
        return Err(IntegrateError::Aborted {
            s: 0.0,
            last_good: st0,
            reason: AbortReason::TimeReversal { u0: st0.u[0] },
        });
    }

    let mut samples = Vec::with_capacity((s_end / h).ceil() as usize + 2);
    samples.push(TrajectorySample { s: 0.0, state: st0 });
    let mut s = 0.0;
    let mut state = st0;

    while s < s_end {
        let step = h.min(s_end - s);
        let next = rk4_step(rhs, &state, model, pp, step).map_err(|e| {
            IntegrateError::Aborted { s, last_good: state, reason: AbortReason::Singularity(e) }
        })?;
        s += step;
        // written as a negated comparison so NaN also trips the monitor
        if !(next.u[0] > 0.0) {
            return Err(IntegrateError::Aborted {
                s,
                last_good: state,
                reason: AbortReason::TimeReversal { u0: next.u[0] },
            });
        }
        state = next;
        samples.push(TrajectorySample { s, state });
        if step < h * 1e-12 {
            break; // guard against a zero-progress tail step
        }
    }

    Ok(Trajectory { samples, step: h, method_order: 4 })
}

fn rk4_step(
    rhs: Rhs,
    st: &GeodesicState,
    model: &dyn FieldModel,
    pp: &ParticleParams,
    h: f64,
) -> Result<GeodesicState, FieldError> {
    let shift = |st0: &GeodesicState, k: &StateDerivative, f: f64| -> GeodesicState {
        let mut x = st0.x.0;
        let mut u = st0.u;
        for mu in 0..4 {
            x[mu] += f * k.dx[mu];
            u[mu] += f * k.du[mu];
        }
        GeodesicState { x: SpacetimePoint(x), u }
    };

    let k1 = rhs_eval(rhs, st, model, pp)?;
    let k2 = rhs_eval(rhs, &shift(st, &k1, 0.5 * h), model, pp)?;
    let k3 = rhs_eval(rhs, &shift(st, &k2, 0.5 * h), model, pp)?;
    let k4 = rhs_eval(rhs, &shift(st, &k3, h), model, pp)?;

    let mut x = st.x.0;
    let mut u = st.u;
    for mu in 0..4 {
        x[mu] += h / 6.0 * (k1.dx[mu] + 2.0 * k2.dx[mu] + 2.0 * k3.dx[mu] + k4.dx[mu]);
        u[mu] += h / 6.0 * (k1.du[mu] + 2.0 * k2.du[mu] + 2.0 * k3.du[mu] + k4.du[mu]);
    }
    Ok(GeodesicState { x: SpacetimePoint(x), u })
}

/// Default integration step: 1/1000 of the shortest characteristic length
/// among 1/(κ|B|), 1/(κ|E|), and the horizon itself.
pub fn default_step(pp: &ParticleParams, e: Vec3, b: Vec3, s_end: f64) -> f64 {
    let kappa = pp.kappa().abs();
    let mut s_char = s_end;
    if kappa > 0.0 {
        let eb = e.norm().max(0.0);
        let bb = b.norm().max(0.0);
        if bb > 0.0 {
            s_char = s_char.min(1.0 / (kappa * bb));
        }
        if eb > 0.0 {
            s_char = s_char.min(1.0 / (kappa * eb));
        }
    }
    s_char / 1000.0
}

// ---------------------------------------------------------------------------
// Force probe
// ---------------------------------------------------------------------------

/// Pointwise force ratios in a uniform electric field at velocity v:
/// the component of the measured force along each direction of E divided
/// by the classical qE value there.
#[derive(Clone, Copy, Debug)]
pub struct ForceProbe {
    /// F·v̂ / (q E·v̂); `None` when E has no component along v.
    pub parallel_ratio: Option<f64>,
    /// F·ê⊥ / (q |E⊥|) for ê⊥ the unit E-component transverse to v;
    /// `None` when E is parallel to v. Equals 1 − v²/c².
    pub transverse_ratio: Option<f64>,
}

/// Evaluate the geodesic right-hand side with u = (1, v/c) in the uniform
/// field `e` and report the transverse and parallel force ratios.
pub fn force_probe(e: Vec3, v_over_c: Vec3, pp: &ParticleParams) -> ForceProbe {
    let fs = FieldSample::uniform(e, Vec3::zero());
    let st = GeodesicState::launch(SpacetimePoint::origin(), v_over_c);
    let d = geodesic_rhs_from_sample(&st, &fs, pp, Placement::Full);
    // force in Gaussian units: m d²x/dτ² = m c² du/ds
    let f = Vec3::new(d.du[1], d.du[2], d.du[3]) * (pp.m() * pp.c() * pp.c());
    let qe = e * pp.q();

    let Some(v_hat) = v_over_c.normalized() else {
        // at rest the force is exactly qE
        let ratio = if e.norm() > 0.0 { f.dot(e) / qe.dot(e) } else { 1.0 };
        return ForceProbe { parallel_ratio: Some(ratio), transverse_ratio: Some(ratio) };
    };

    let e_par = e.dot(v_hat);
    let parallel_ratio = (e_par != 0.0).then(|| f.dot(v_hat) / (pp.q() * e_par));
    let e_perp = e - v_hat * e_par;
    let transverse_ratio = e_perp
        .normalized()
        .map(|t_hat| f.dot(t_hat) / (pp.q() * e_perp.norm()));
    ForceProbe { parallel_ratio, transverse_ratio }
}

// ---------------------------------------------------------------------------
// Decay experiment
// ---------------------------------------------------------------------------

/// One row of the decay comparison, indexed by common lab time.
#[derive(Clone, Copy, Debug)]
pub struct DecayRow {
    /// Lab time in seconds.
    pub t: f64,
    pub tau_plus: f64,
    pub tau_minus: f64,
    /// Instantaneous lab-frame decay rates Γ± = (1/τ₀)(dτ/dt)±.
    pub rate_plus: f64,
    pub rate_minus: f64,
    /// Survival fractions exp(−τ±/τ₀).
    pub survival_plus: f64,
    pub survival_minus: f64,
    /// A = (Γ₊ − Γ₋)/(Γ₊ + Γ₋).
    pub asymmetry: f64,
}

/// Decay-rate comparison of two particles launched parallel (+) and
/// antiparallel (−) to a uniform electric field at equal speed.
#[derive(Clone, Debug)]
pub struct DecayReport {
    pub rows: Vec<DecayRow>,
    pub plus: Trajectory,
    pub minus: Trajectory,
}

/// Integrate the two launches to `s_end` with step `h`, then resample both
/// onto a common lab-time grid and form rates, survival fractions, and the
/// asymmetry curve. The particle must carry a proper lifetime.
pub fn decay_experiment(
    e: Vec3,
    speed: f64,
    pp: &ParticleParams,
    s_end: f64,
    h: f64,
) -> Result<DecayReport, DecayError> {
    let tau0 = pp.tau0().ok_or(DecayError::MissingLifetime)?;
    // E = 0 leaves the launch axis arbitrary; both curves coincide anyway
    let dir = e.normalized().unwrap_or(Vec3::new(1.0, 0.0, 0.0));
    let model_plus = crate::field::uniform_e(e);

    let launch = |sign: f64| {
        integrate(
            Rhs::Geodesic(Placement::Full),
            GeodesicState::launch(SpacetimePoint::origin(), dir * (sign * speed)),
            &model_plus,
            pp,
            s_end,
            h,
        )
    };
    let plus = launch(1.0)?;
    let minus = launch(-1.0)?;

    // common lab-time range covered by both trajectories
    let t_end = plus.last().t(pp).min(minus.last().t(pp));
    let n = plus.samples.len().min(minus.samples.len()).min(1001);
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let t = t_end * i as f64 / (n - 1).max(1) as f64;
        let (tau_p, u0_p) = sample_at_lab_time(&plus, pp, t);
        let (tau_m, u0_m) = sample_at_lab_time(&minus, pp, t);
        let rate_plus = 1.0 / (tau0 * u0_p);
        let rate_minus = 1.0 / (tau0 * u0_m);
        rows.push(DecayRow {
            t,
            tau_plus: tau_p,
            tau_minus: tau_m,
            rate_plus,
            rate_minus,
            survival_plus: (-tau_p / tau0).exp(),
            survival_minus: (-tau_m / tau0).exp(),
            asymmetry: (rate_plus - rate_minus) / (rate_plus + rate_minus),
        });
    }
    Ok(DecayReport { rows, plus, minus })
}

/// Linear interpolation of (τ, u⁰) at lab time `t`; lab time is strictly
/// increasing along any trajectory with u⁰ > 0.
fn sample_at_lab_time(traj: &Trajectory, pp: &ParticleParams, t: f64) -> (f64, f64) {
    let samples = &traj.samples;
    let mut lo = 0;
    let mut hi = samples.len() - 1;
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if samples[mid].t(pp) <= t {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let (a, b) = (&samples[lo], &samples[hi]);
    let (ta, tb) = (a.t(pp), b.t(pp));
    if tb == ta {
        return (a.tau(pp), a.state.u[0]);
    }
    let w = ((t - ta) / (tb - ta)).clamp(0.0, 1.0);
    (
        a.tau(pp) + w * (b.tau(pp) - a.tau(pp)),
        a.state.u[0] + w * (b.state.u[0] - a.state.u[0]),
    )
}
