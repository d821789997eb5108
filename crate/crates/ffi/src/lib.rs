//! C ABI over the electromagnetic connection engine: opaque field-model
//! handles, plain-struct reports, and status codes. All pointers are
//! borrowed for the duration of the call unless documented otherwise;
//! handles returned by the `emgeo_model_*` constructors are owned by the
//! caller and released with [`emgeo_model_free`].
//!
//! Index conventions match the engine: coordinates (x⁰, x¹, x², x³) =
//! (ct, x, y, z); dense tensors are row-major, Γ^i_jk at `[(i*4 + j)*4 + k]`.

use emgeo::boost::BoostSpec;
use emgeo::connection::{build_connection, torsion, Placement};
use emgeo::field::{
    coulomb, crossed_eb, linear_gradient, plane_wave, FieldError, FieldModel,
};
use emgeo::geodesic::{integrate, GeodesicState, IntegrateError, Rhs};
use emgeo::{eval_field, CScalar, ParticleParams, SpacetimePoint, Vec3};
use std::os::raw::c_char;

/// Status code returned by every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmgeoStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A parameter was out of range (mass, step, beta, placement, ...).
    InvalidParameter = 2,
    /// The field model is singular at the requested point.
    Singularity = 3,
    /// The u⁰ > 0 monitor tripped during integration.
    TimeReversal = 4,
    /// The caller-provided buffer cannot hold the result.
    BufferTooSmall = 5,
}

/// Placement of the magnetic connection components.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmgeoPlacement {
    Lorentz = 0,
    Full = 1,
    Alternative = 2,
}

impl From<EmgeoPlacement> for Placement {
    fn from(p: EmgeoPlacement) -> Placement {
        match p {
            EmgeoPlacement::Lorentz => Placement::LorentzOnly,
            EmgeoPlacement::Full => Placement::Full,
            EmgeoPlacement::Alternative => Placement::AlternativeFull,
        }
    }
}

/// Test-particle parameters in Gaussian units; `tau0 <= 0` means "no
/// lifetime attached".
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct EmgeoParticle {
    pub q: f64,
    pub m: f64,
    pub c: f64,
    pub tau0: f64,
}

/// The Ricci symmetry combinations and their closed-form targets at one
/// point. Residual magnitudes are measured against `scale`.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default)]
pub struct EmgeoSymmetryReport {
    pub trace_re: f64,
    pub trace_im: f64,
    pub mixed_re: [f64; 3],
    pub mixed_im: [f64; 3],
    pub spatial_re: [f64; 3],
    pub spatial_im: [f64; 3],
    pub trace_expected: f64,
    pub mixed_expected: [f64; 3],
    pub spatial_expected: [f64; 3],
    pub scale: f64,
    pub max_residual: f64,
}

/// Opaque field-model handle.
pub struct EmgeoModel {
    inner: Box<dyn FieldModel>,
}

fn model_handle(inner: Box<dyn FieldModel>) -> *mut EmgeoModel {
    Box::into_raw(Box::new(EmgeoModel { inner }))
}

unsafe fn vec3_from(ptr: *const f64) -> Option<Vec3> {
    if ptr.is_null() {
        return None;
    }
    let s = std::slice::from_raw_parts(ptr, 3);
    Some(Vec3::new(s[0], s[1], s[2]))
}

unsafe fn grad_from(ptr: *const f64) -> Option<[[f64; 4]; 3]> {
    if ptr.is_null() {
        return None;
    }
    let s = std::slice::from_raw_parts(ptr, 12);
    let mut g = [[0.0; 4]; 3];
    for i in 0..3 {
        g[i].copy_from_slice(&s[4 * i..4 * i + 4]);
    }
    Some(g)
}

unsafe fn point_from(ptr: *const f64) -> Option<SpacetimePoint> {
    if ptr.is_null() {
        return None;
    }
    let s = std::slice::from_raw_parts(ptr, 4);
    Some(SpacetimePoint([s[0], s[1], s[2], s[3]]))
}

fn particle_from(p: &EmgeoParticle) -> Result<ParticleParams, EmgeoStatus> {
    let pp = ParticleParams::new(p.q, p.m, p.c).map_err(|_| EmgeoStatus::InvalidParameter)?;
    if p.tau0 > 0.0 {
        pp.with_lifetime(p.tau0).map_err(|_| EmgeoStatus::InvalidParameter)
    } else {
        Ok(pp)
    }
}

/// Uniform field model with constant E and B.
///
/// # Safety
/// `e` and `b` must each point to 3 readable doubles.
#[no_mangle]
pub unsafe extern "C" fn emgeo_model_uniform(e: *const f64, b: *const f64) -> *mut EmgeoModel {
    match (vec3_from(e), vec3_from(b)) {
        (Some(e), Some(b)) => model_handle(Box::new(crossed_eb(e, b))),
        _ => std::ptr::null_mut(),
    }
}

/// Plane wave moving toward +z with amplitude `e0` and wavenumber `k`.
#[no_mangle]
pub extern "C" fn emgeo_model_plane_wave(e0: f64, k: f64) -> *mut EmgeoModel {
    model_handle(Box::new(plane_wave(e0, k)))
}

/// Static Coulomb field of source charge `q_src`, singular at the origin.
#[no_mangle]
pub extern "C" fn emgeo_model_coulomb(q_src: f64) -> *mut EmgeoModel {
    model_handle(Box::new(coulomb(q_src)))
}

/// Field affine in the coordinates: base values plus 3×4 gradient matrices
/// in row-major order (rows E_x, E_y, E_z; columns x⁰..x³).
///
/// # Safety
/// `e0` and `b0` must each point to 3 readable doubles; `grad_e` and
/// `grad_b` must each point to 12 readable doubles.
#[no_mangle]
pub unsafe extern "C" fn emgeo_model_linear_gradient(
    e0: *const f64,
    b0: *const f64,
    grad_e: *const f64,
    grad_b: *const f64,
) -> *mut EmgeoModel {
    match (vec3_from(e0), vec3_from(b0), grad_from(grad_e), grad_from(grad_b)) {
        (Some(e0), Some(b0), Some(ge), Some(gb)) => {
            model_handle(Box::new(linear_gradient(e0, b0, ge, gb)))
        }
        _ => std::ptr::null_mut(),
    }
}

/// Release a model handle. Null is ignored.
///
/// # Safety
/// `model` must be null or a pointer previously returned by one of the
/// `emgeo_model_*` constructors, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn emgeo_model_free(model: *mut EmgeoModel) {
    if !model.is_null() {
        drop(Box::from_raw(model));
    }
}

fn field_status(e: &FieldError) -> EmgeoStatus {
    match e {
        FieldError::Singularity { .. } => EmgeoStatus::Singularity,
        _ => EmgeoStatus::InvalidParameter,
    }
}

unsafe fn write_tensor(
    re: *mut f64,
    im: *mut f64,
    get: impl Fn(usize, usize, usize) -> CScalar,
) {
    let re = std::slice::from_raw_parts_mut(re, 64);
    let im = std::slice::from_raw_parts_mut(im, 64);
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                let v = get(i, j, k);
                re[(i * 4 + j) * 4 + k] = v.re;
                im[(i * 4 + j) * 4 + k] = v.im;
            }
        }
    }
}

/// Connection components Γ^i_jk at `point`, written into two 64-entry
/// buffers indexed `(i*4 + j)*4 + k`.
///
/// # Safety
/// `model`, `particle`, and `point` must be valid for reads (`point`: 4
/// doubles); `out_re` and `out_im` must each point to 64 writable doubles.
#[no_mangle]
pub unsafe extern "C" fn emgeo_connection(
    model: *const EmgeoModel,
    particle: *const EmgeoParticle,
    placement: EmgeoPlacement,
    point: *const f64,
    out_re: *mut f64,
    out_im: *mut f64,
) -> EmgeoStatus {
    if model.is_null() || particle.is_null() || out_re.is_null() || out_im.is_null() {
        return EmgeoStatus::NullArgument;
    }
    let Some(p) = point_from(point) else {
        return EmgeoStatus::NullArgument;
    };
    let pp = match particle_from(&*particle) {
        Ok(pp) => pp,
        Err(s) => return s,
    };
    let fs = match eval_field((*model).inner.as_ref(), p) {
        Ok(fs) => fs,
        Err(e) => return field_status(&e),
    };
    let gamma = build_connection(&fs, &pp, placement.into());
    write_tensor(out_re, out_im, |i, j, k| gamma.get(i, j, k));
    EmgeoStatus::Ok
}

/// Torsion components T^i_jk at `point`, same layout as
/// [`emgeo_connection`].
///
/// # Safety
/// Same contract as [`emgeo_connection`].
#[no_mangle]
pub unsafe extern "C" fn emgeo_torsion(
    model: *const EmgeoModel,
    particle: *const EmgeoParticle,
    placement: EmgeoPlacement,
    point: *const f64,
    out_re: *mut f64,
    out_im: *mut f64,
) -> EmgeoStatus {
    if model.is_null() || particle.is_null() || out_re.is_null() || out_im.is_null() {
        return EmgeoStatus::NullArgument;
    }
    let Some(p) = point_from(point) else {
        return EmgeoStatus::NullArgument;
    };
    let pp = match particle_from(&*particle) {
        Ok(pp) => pp,
        Err(s) => return s,
    };
    let fs = match eval_field((*model).inner.as_ref(), p) {
        Ok(fs) => fs,
        Err(e) => return field_status(&e),
    };
    let t = torsion(&build_connection(&fs, &pp, placement.into()));
    write_tensor(out_re, out_im, |i, j, k| t.get(i, j, k));
    EmgeoStatus::Ok
}

/// Ricci symmetry combinations and closed-form targets at `point`.
///
/// # Safety
/// `model`, `particle`, `point` (4 doubles), and `out` must be valid;
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn emgeo_symmetry_report(
    model: *const EmgeoModel,
    particle: *const EmgeoParticle,
    placement: EmgeoPlacement,
    point: *const f64,
    out: *mut EmgeoSymmetryReport,
) -> EmgeoStatus {
    if model.is_null() || particle.is_null() || out.is_null() {
        return EmgeoStatus::NullArgument;
    }
    let Some(p) = point_from(point) else {
        return EmgeoStatus::NullArgument;
    };
    let pp = match particle_from(&*particle) {
        Ok(pp) => pp,
        Err(s) => return s,
    };
    let rep = match emgeo::curvature::symmetry_report(
        (*model).inner.as_ref(),
        p,
        &pp,
        placement.into(),
    ) {
        Ok(rep) => rep,
        Err(e) => return field_status(&e),
    };
    let mut r = EmgeoSymmetryReport {
        trace_re: rep.trace.re,
        trace_im: rep.trace.im,
        trace_expected: rep.trace_expected,
        mixed_expected: rep.mixed_expected,
        spatial_expected: rep.spatial_expected,
        scale: rep.scale(),
        max_residual: rep.max_residual(),
        ..Default::default()
    };
    for i in 0..3 {
        r.mixed_re[i] = rep.mixed[i].re;
        r.mixed_im[i] = rep.mixed[i].im;
        r.spatial_re[i] = rep.spatial[i].re;
        r.spatial_im[i] = rep.spatial[i].im;
    }
    *out = r;
    EmgeoStatus::Ok
}

/// The six "observable" component averages of the connection of uniform
/// fields (e, b), Lorentz-boosted along `axis` with velocity `beta`.
/// `out_e` and `out_b` receive three doubles each.
///
/// # Safety
/// `e`, `b` (3 doubles each), `particle`, `out_e`, `out_b` (3 writable
/// doubles each) must be valid.
#[no_mangle]
pub unsafe extern "C" fn emgeo_boost_observables(
    e: *const f64,
    b: *const f64,
    particle: *const EmgeoParticle,
    axis: usize,
    beta: f64,
    out_e: *mut f64,
    out_b: *mut f64,
) -> EmgeoStatus {
    if particle.is_null() || out_e.is_null() || out_b.is_null() {
        return EmgeoStatus::NullArgument;
    }
    let (Some(e), Some(b)) = (vec3_from(e), vec3_from(b)) else {
        return EmgeoStatus::NullArgument;
    };
    let pp = match particle_from(&*particle) {
        Ok(pp) => pp,
        Err(s) => return s,
    };
    let Ok(bs) = BoostSpec::new(axis, beta) else {
        return EmgeoStatus::InvalidParameter;
    };
    let fs = emgeo::FieldSample::uniform(e, b);
    let gamma = build_connection(&fs, &pp, Placement::Full);
    let obs = emgeo::boost::observables(
        &emgeo::boost::transform_connection(&gamma, &bs),
        &pp,
    );
    let oe = std::slice::from_raw_parts_mut(out_e, 3);
    let ob = std::slice::from_raw_parts_mut(out_b, 3);
    for i in 0..3 {
        oe[i] = obs.e_obs[i];
        ob[i] = obs.b_obs[i];
    }
    EmgeoStatus::Ok
}

/// Integrate the geodesic from `x0`, `u0` to path length `s_end` with step
/// `h`. Samples are written as rows of 9 doubles (s, x⁰..x³, u⁰..u³) into
/// `out`, which holds `capacity` rows; `written` receives the row count.
/// Returns `BufferTooSmall` (with `written` = required rows) when the
/// trajectory does not fit.
///
/// # Safety
/// All pointers must be valid; `out` must allow `capacity * 9` writable
/// doubles; `x0` and `u0` point to 4 readable doubles each.
#[no_mangle]
pub unsafe extern "C" fn emgeo_geodesic_integrate(
    model: *const EmgeoModel,
    particle: *const EmgeoParticle,
    placement: EmgeoPlacement,
    x0: *const f64,
    u0: *const f64,
    s_end: f64,
    h: f64,
    out: *mut f64,
    capacity: usize,
    written: *mut usize,
) -> EmgeoStatus {
    if model.is_null() || particle.is_null() || out.is_null() || written.is_null() {
        return EmgeoStatus::NullArgument;
    }
    let (Some(x), Some(u)) = (point_from(x0), point_from(u0)) else {
        return EmgeoStatus::NullArgument;
    };
    let pp = match particle_from(&*particle) {
        Ok(pp) => pp,
        Err(s) => return s,
    };
    let st0 = GeodesicState { x, u: u.0 };
    let traj = match integrate(
        Rhs::Geodesic(placement.into()),
        st0,
        (*model).inner.as_ref(),
        &pp,
        s_end,
        h,
    ) {
        Ok(t) => t,
        Err(IntegrateError::Aborted { reason, .. }) => {
            return match reason {
                emgeo::geodesic::AbortReason::TimeReversal { .. } => EmgeoStatus::TimeReversal,
                emgeo::geodesic::AbortReason::Singularity(_) => EmgeoStatus::Singularity,
            }
        }
        Err(_) => return EmgeoStatus::InvalidParameter,
    };
    *written = traj.samples.len();
    if traj.samples.len() > capacity {
        return EmgeoStatus::BufferTooSmall;
    }
    let rows = std::slice::from_raw_parts_mut(out, traj.samples.len() * 9);
    for (n, s) in traj.samples.iter().enumerate() {
        let row = &mut rows[n * 9..n * 9 + 9];
        row[0] = s.s;
        row[1..5].copy_from_slice(&s.state.x.0);
        row[5..9].copy_from_slice(&s.state.u);
    }
    EmgeoStatus::Ok
}

/// Crate version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn emgeo_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}
