//! Command-line entry point: `table`, `verify`, `simulate`, `decay`,
//! `boost`, and `chern`, all driven by the same flat configuration.
//!
//! Exit-code contract, stable across versions:
//! 0 success, 1 configuration error, 2 identity breach, 3 runtime abort.
//!
//! Every configuration key doubles as a long flag (`--particle.q 2.0`);
//! flags override the file. `--seed`, `--tolerance`, `--format`, and
//! `--out` are shorthands for `grid.seed`, `numeric.tolerance`,
//! `output.format`, and `output.path`.

use crate::algebra::{SpacetimePoint, Vec3};
use crate::boost::{boost_check, transform_connection, BoostSpec};
use crate::chern::{curvature_trace_form, exactness_check, field_derivative_form, DISPLAY_LABELS};
use crate::config::{ConfigError, RunConfig, KNOWN_KEYS};
use crate::connection::{
    build_connection, dump_connection, dump_torsion, torsion, torsion_epsilon_sum,
    torsion_epsilon_sum_covariant, Placement,
};
use crate::curvature::{continuity_residual, symmetry_report, SymmetryReport};
use crate::field::{eval_field, FieldError, FieldModel};
use crate::geodesic::{
    decay_experiment, default_step, integrate, DecayError, GeodesicState, IntegrateError, Rhs,
};
use crate::report::RecordWriter;
use clap::{Arg, ArgAction, ArgMatches, Command};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt::Write as _;
use std::io::Write;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 1;
pub const EXIT_BREACH: i32 = 2;
pub const EXIT_ABORT: i32 = 3;

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn config(message: impl Into<String>) -> Self {
        Failure { code: EXIT_CONFIG, message: message.into() }
    }

    fn abort(message: impl Into<String>) -> Self {
        Failure { code: EXIT_ABORT, message: message.into() }
    }
}

impl From<ConfigError> for Failure {
    fn from(e: ConfigError) -> Self {
        Failure::config(e.to_string())
    }
}

impl From<FieldError> for Failure {
    fn from(e: FieldError) -> Self {
        match e {
            FieldError::Singularity { .. } => Failure::abort(e.to_string()),
            _ => Failure::config(e.to_string()),
        }
    }
}

struct CmdOutput {
    body: String,
    code: i32,
    /// Extra line for stderr (worst offender, abort diagnostics).
    note: Option<String>,
}

impl CmdOutput {
    fn ok(body: String) -> Self {
        CmdOutput { body, code: EXIT_OK, note: None }
    }
}

/// Parse `args` (without the program name) and run; report bodies go to
/// `output.path` when set, otherwise to `stdout`.
pub fn run(args: &[String], stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let mut argv = vec!["emgeo".to_string()];
    argv.extend_from_slice(args);
    let matches = match build_command().try_get_matches_from(&argv) {
        Ok(m) => m,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{rendered}");
                EXIT_OK
            } else {
                let _ = write!(stderr, "{rendered}");
                EXIT_CONFIG
            };
        }
    };

    let (name, sub) = matches.subcommand().expect("subcommand required");
    let result = load_config(sub).and_then(|cfg| {
        let out = match name {
            "table" => cmd_table(&cfg)?,
            "verify" => cmd_verify(&cfg)?,
            "simulate" => cmd_simulate(&cfg)?,
            "decay" => cmd_decay(&cfg)?,
            "boost" => cmd_boost(&cfg)?,
            "chern" => cmd_chern(&cfg)?,
            _ => unreachable!(),
        };
        Ok((cfg, out))
    });

    match result {
        Ok((cfg, out)) => {
            if let Some(note) = &out.note {
                let _ = writeln!(stderr, "{note}");
            }
            match cfg.get("output.path") {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &out.body) {
                        let _ = writeln!(stderr, "cannot write '{path}': {e}");
                        return EXIT_CONFIG;
                    }
                }
                None => {
                    let _ = write!(stdout, "{}", out.body);
                }
            }
            out.code
        }
        Err(f) => {
            let _ = writeln!(stderr, "{}", f.message);
            f.code
        }
    }
}

fn build_command() -> Command {
    let with_keys = |mut c: Command| {
        c = c
            .arg(Arg::new("config").long("config").value_name("PATH"))
            .arg(Arg::new("out").long("out").value_name("PATH"))
            .arg(Arg::new("format").long("format").value_name("FMT"))
            .arg(Arg::new("seed").long("seed").value_name("N"))
            .arg(
                Arg::new("tolerance")
                    .long("tolerance")
                    .value_name("X")
                    .allow_hyphen_values(true),
            );
        for key in KNOWN_KEYS {
            c = c.arg(
                Arg::new(key)
                    .long(key)
                    .value_name("VALUE")
                    .action(ArgAction::Set)
                    .allow_hyphen_values(true),
            );
        }
        c
    };
    Command::new("emgeo")
        .about("Electromagnetic connection geometry: identity checks and geodesic simulations")
        .subcommand_required(true)
        .arg_required_else_help(true)
        .subcommands([
            with_keys(Command::new("table").about("Dump connection (and torsion) component tables")),
            with_keys(Command::new("verify").about("Run the Maxwell identity suites over a grid")),
            with_keys(Command::new("simulate").about("Integrate a charged-particle geodesic")),
            with_keys(Command::new("decay").about("Opposite-launch decay-rate asymmetry experiment")),
            with_keys(Command::new("boost").about("Lorentz-transform the connection and compare observables")),
            with_keys(Command::new("chern").about("Curvature trace 2-form and exactness checks")),
        ])
}

fn load_config(matches: &ArgMatches) -> Result<RunConfig, Failure> {
    let mut cfg = match matches.get_one::<String>("config") {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::config(format!("cannot read config '{path}': {e}")))?;
            RunConfig::parse(&text, path)?
        }
        None => RunConfig::default(),
    };
    for key in KNOWN_KEYS {
        if let Some(v) = matches.get_one::<String>(key) {
            cfg.set(key, v, &format!("flag --{key}"))?;
        }
    }
    for (flag, key) in [
        ("seed", "grid.seed"),
        ("tolerance", "numeric.tolerance"),
        ("format", "output.format"),
        ("out", "output.path"),
    ] {
        if let Some(v) = matches.get_one::<String>(flag) {
            cfg.set(key, v, &format!("flag --{flag}"))?;
        }
    }
    if let Some(fmt) = cfg.get("output.format") {
        if fmt != "text" && fmt != "records" {
            return Err(Failure::config(format!(
                "output.format must be 'text' or 'records', got '{fmt}'"
            )));
        }
    }
    Ok(cfg)
}

fn format_is_text(cfg: &RunConfig) -> bool {
    cfg.get("output.format") == Some("text")
}

fn header_comment(cfg: &RunConfig, command: &str, extra: &[(&str, String)]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# schema_version = {}", crate::report::SCHEMA_VERSION);
    let _ = writeln!(s, "# command = {command}");
    let _ = writeln!(s, "# preset = {}", cfg.get("field.preset").unwrap_or("uniform_E"));
    for (k, v) in extra {
        let _ = writeln!(s, "# {k} = {v}");
    }
    s
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

fn cmd_table(cfg: &RunConfig) -> Result<CmdOutput, Failure> {
    let pp = cfg.particle()?;
    let model = cfg.field_model()?;
    let pl = cfg.get_placement()?;
    let point = cfg.get_point("table.point")?.unwrap_or(SpacetimePoint::origin());
    let want_torsion = cfg.get_bool("table.torsion")?.unwrap_or(false);

    let fs = eval_field(model.as_ref(), point)?;
    let gamma = build_connection(&fs, &pp, pl);

    let mut body = header_comment(
        cfg,
        "table",
        &[
            ("placement", pl.label().to_string()),
            ("kind", if want_torsion { "torsion".into() } else { "connection".into() }),
            ("columns", "i j k re im".to_string()),
        ],
    );
    if want_torsion {
        body.push_str(&dump_torsion(&torsion(&gamma)));
    } else {
        body.push_str(&dump_connection(&gamma));
    }
    Ok(CmdOutput::ok(body))
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct Breach {
    identity: &'static str,
    point: usize,
    ratio: f64,
}

struct IdentityTracker {
    name: &'static str,
    max_residual: f64,
    worst_ratio: f64,
    worst_point: usize,
}

impl IdentityTracker {
    fn new(name: &'static str) -> Self {
        IdentityTracker { name, max_residual: 0.0, worst_ratio: 0.0, worst_point: 0 }
    }

    fn feed(&mut self, point: usize, residual: f64, tolerance: f64) {
        self.max_residual = self.max_residual.max(residual);
        let ratio = residual / tolerance;
        if ratio > self.worst_ratio {
            self.worst_ratio = ratio;
            self.worst_point = point;
        }
    }
}

fn cmd_verify(cfg: &RunConfig) -> Result<CmdOutput, Failure> {
    let pp = cfg.particle()?;
    let model = cfg.field_model()?;
    let pl = cfg.get_placement()?;
    let tol = cfg.get_f64("numeric.tolerance")?.unwrap_or(1e-9);
    let (points, seed) = build_grid(cfg)?;

    // Two layers per law: the closed-form identities hold for every field
    // and catch implementation defects; the physical residuals measure the
    // configured field's distance from Maxwell's equations through the
    // geometry and flag non-Maxwellian inputs.
    let mut trackers = [
        IdentityTracker::new("coulomb_closed_form"),
        IdentityTracker::new("ampere_closed_form"),
        IdentityTracker::new("faraday_closed_form"),
        IdentityTracker::new("div_b_closed_form"),
        IdentityTracker::new("coulomb_div_e"),
        IdentityTracker::new("ampere_displacement"),
        IdentityTracker::new("faraday_spatial_difference"),
        IdentityTracker::new("div_b_epsilon_sum"),
        IdentityTracker::new("continuity"),
        IdentityTracker::new("j_dot_e"),
        IdentityTracker::new("placement_equivalence"),
    ];
    let [coulomb_cf, ampere_cf, faraday_cf, div_b_cf, gauss_e, ampere_phys, faraday_phys, gauss_b, continuity, j_dot_e, placement_eq] =
        &mut trackers;

    let mut w = RecordWriter::new("verify");
    w.push_str("preset", model.name());
    w.push_str("placement", pl.label());
    w.push_u64("seed", seed);
    w.push_u64("grid_points", points.len() as u64);
    w.push_f64("tolerance", tol);

    for (idx, &p) in points.iter().enumerate() {
        let rep = symmetry_report(model.as_ref(), p, &pp, pl)?;
        let scale = rep.scale();
        push_symmetry_records(&mut w, &format!("point_{idx}"), &rep);

        coulomb_cf.feed(idx, rep.residual_trace().norm(), tol * scale);
        for i in 0..3 {
            ampere_cf.feed(idx, rep.residual_mixed(i).norm(), tol * scale);
            faraday_cf.feed(idx, rep.residual_spatial(i).norm(), tol * scale);
            faraday_phys.feed(idx, rep.spatial[i].norm(), tol * scale);
        }

        let fs = eval_field(model.as_ref(), p)?;
        let kappa = pp.kappa();
        // physical residuals measured through the Ricci combinations
        let exb = fs.e.cross(fs.b);
        let k2 = kappa * kappa;
        gauss_e.feed(idx, (rep.trace - k2 * (fs.e.norm_sqr() + fs.b.norm_sqr())).norm(), tol * scale);
        for i in 0..3 {
            let exb_i = [exb.x, exb.y, exb.z][i];
            ampere_phys.feed(idx, (rep.mixed[i] - k2 * exb_i).norm(), tol * scale);
        }

        let eps = torsion_epsilon_sum(model.as_ref(), p, &pp, pl)?;
        let eps_expected = 2.0 * kappa * fs.div_b();
        let eps_scale = (kappa.abs() * fs.max_abs()).max(1.0);
        w.push_f64(&format!("point_{idx}.epsilon_sum_re"), eps.re);
        w.push_f64(&format!("point_{idx}.epsilon_sum_im"), eps.im);
        w.push_f64(&format!("point_{idx}.residual_epsilon"), (eps - eps_expected).norm());
        div_b_cf.feed(idx, (eps - eps_expected).norm(), tol * eps_scale);
        gauss_b.feed(idx, eps.norm(), tol * eps_scale);

        // diagnostic only: the same sum with full covariant corrections
        let eps_cov = torsion_epsilon_sum_covariant(model.as_ref(), p, &pp, pl)?;
        w.push_f64(&format!("point_{idx}.epsilon_sum_covariant_re"), eps_cov.re);
        w.push_f64(&format!("point_{idx}.epsilon_sum_covariant_im"), eps_cov.im);

        let cont = continuity_residual(model.as_ref(), p, &pp)?;
        w.push_f64(&format!("point_{idx}.continuity_residual"), cont.residual);
        w.push_f64(&format!("point_{idx}.j_dot_e"), cont.j_dot_e);
        continuity.feed(idx, cont.residual.abs(), tol * cont.scale);
        j_dot_e.feed(idx, cont.j_dot_e.abs(), 1e-14 * cont.scale);

        if pl != Placement::LorentzOnly {
            let other = match pl {
                Placement::Full => Placement::AlternativeFull,
                _ => Placement::Full,
            };
            let rep_other = symmetry_report(model.as_ref(), p, &pp, other)?;
            let mut diff = (rep.trace - rep_other.trace).norm();
            for i in 0..3 {
                diff = diff.max((rep.mixed[i] - rep_other.mixed[i]).norm());
                diff = diff.max((rep.spatial[i] - rep_other.spatial[i]).norm());
            }
            placement_eq.feed(idx, diff, 1e-12 * scale);
        }
    }

    let mut worst: Option<Breach> = None;
    for t in &trackers {
        w.push_f64(&format!("max_residual.{}", t.name), t.max_residual);
        if t.worst_ratio > 1.0 {
            let better = worst.as_ref().map_or(true, |b| t.worst_ratio > b.ratio);
            if better {
                worst = Some(Breach { identity: t.name, point: t.worst_point, ratio: t.worst_ratio });
            }
        }
    }
    w.push_str("result", if worst.is_none() { "pass" } else { "fail" });
    if let Some(b) = &worst {
        w.push_str("worst_identity", b.identity);
        w.push_u64("worst_point", b.point as u64);
    }

    let body = if format_is_text(cfg) {
        let mut s = String::from("identity                  max residual\n");
        for t in &trackers {
            let _ = writeln!(s, "{:<25} {:e}", t.name, t.max_residual);
        }
        let _ = writeln!(s, "result: {}", if worst.is_none() { "pass" } else { "fail" });
        s
    } else {
        w.finish()
    };

    Ok(match worst {
        None => CmdOutput::ok(body),
        Some(b) => CmdOutput {
            body,
            code: EXIT_BREACH,
            note: Some(format!(
                "identity breach: {} exceeded tolerance by {:.3e}x at point {}",
                b.identity, b.ratio, b.point
            )),
        },
    })
}

fn push_symmetry_records(w: &mut RecordWriter, prefix: &str, rep: &SymmetryReport) {
    w.push_f64(&format!("{prefix}.trace_re"), rep.trace.re);
    w.push_f64(&format!("{prefix}.trace_im"), rep.trace.im);
    for i in 0..3 {
        w.push_f64(&format!("{prefix}.mixed_{}", i + 1), rep.mixed[i].re);
    }
    let labels = ["12", "31", "23"];
    for i in 0..3 {
        w.push_f64(&format!("{prefix}.spatial_{}", labels[i]), rep.spatial[i].re);
    }
    w.push_f64(&format!("{prefix}.residual_trace"), rep.residual_trace().norm());
    for i in 0..3 {
        w.push_f64(&format!("{prefix}.residual_mixed_{}", i + 1), rep.residual_mixed(i).norm());
    }
    for i in 0..3 {
        w.push_f64(
            &format!("{prefix}.residual_spatial_{}", labels[i]),
            rep.residual_spatial(i).norm(),
        );
    }
}

fn build_grid(cfg: &RunConfig) -> Result<(Vec<SpacetimePoint>, u64), Failure> {
    let seed = cfg.get_u64("grid.seed")?.unwrap_or(42);
    if let Some(list) = cfg.get_point_list("grid.list")? {
        if list.is_empty() {
            return Err(Failure::config("grid.list is empty"));
        }
        return Ok((list, seed));
    }
    let n = cfg.get_u64("grid.points")?.unwrap_or(20);
    if n == 0 {
        return Err(Failure::config("empty grid: grid.points = 0"));
    }
    let extent = cfg.get_f64("grid.extent")?.unwrap_or(1.0);
    if !(extent > 0.0) {
        return Err(Failure::config(format!("grid.extent must be positive, got {extent}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points = (0..n)
        .map(|_| {
            SpacetimePoint([
                rng.gen_range(-extent..=extent),
                rng.gen_range(-extent..=extent),
                rng.gen_range(-extent..=extent),
                rng.gen_range(-extent..=extent),
            ])
        })
        .collect();
    Ok((points, seed))
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

fn sample_fields_for_defaults(
    model: &dyn FieldModel,
    at: SpacetimePoint,
) -> (Vec3, Vec3) {
    match model.sample(at) {
        Ok(fs) => (fs.e, fs.b),
        Err(_) => (Vec3::zero(), Vec3::zero()),
    }
}

fn cmd_simulate(cfg: &RunConfig) -> Result<CmdOutput, Failure> {
    let pp = cfg.particle()?;
    let model = cfg.field_model()?;
    let pl = cfg.get_placement()?;
    let x0 = cfg.get_point("sim.x0")?.unwrap_or(SpacetimePoint::origin());
    let u0 = cfg.get_four("sim.u0")?.unwrap_or([1.0, 0.0, 0.0, 0.0]);
    let s_end = cfg.get_f64("numeric.tau_end")?.unwrap_or(1.0) * pp.c();
    if !(s_end > 0.0) {
        return Err(Failure::config(format!("numeric.tau_end must be positive")));
    }
    let (e, b) = sample_fields_for_defaults(model.as_ref(), x0);
    let h = cfg.get_f64("numeric.h")?.unwrap_or_else(|| default_step(&pp, e, b, s_end));

    let st0 = GeodesicState { x: x0, u: u0 };
    let traj = integrate(Rhs::Geodesic(pl), st0, model.as_ref(), &pp, s_end, h)
        .map_err(integrate_failure)?;

    let mut body = header_comment(
        cfg,
        "simulate",
        &[
            ("placement", pl.label().to_string()),
            ("step_cm", format!("{h}")),
            ("s_end_cm", format!("{s_end}")),
            ("method_order", "4".to_string()),
        ],
    );
    body.push_str("tau_s,t_s,x_cm,y_cm,z_cm,u0,u1,u2,u3\n");
    for s in &traj.samples {
        let _ = writeln!(
            body,
            "{},{},{},{},{},{},{},{},{}",
            s.tau(&pp),
            s.t(&pp),
            s.state.x[1],
            s.state.x[2],
            s.state.x[3],
            s.state.u[0],
            s.state.u[1],
            s.state.u[2],
            s.state.u[3],
        );
    }
    let _ = writeln!(body, "# speed_drift = {}", traj.speed_drift());
    let _ = writeln!(body, "# u0_drift = {}", traj.u0_drift());
    Ok(CmdOutput::ok(body))
}

fn integrate_failure(e: IntegrateError) -> Failure {
    match &e {
        IntegrateError::Aborted { s, last_good, .. } => Failure::abort(format!(
            "{e}\nlast good state: s = {s}, x = ({}, {}, {}, {}), u = ({}, {}, {}, {})",
            last_good.x[0],
            last_good.x[1],
            last_good.x[2],
            last_good.x[3],
            last_good.u[0],
            last_good.u[1],
            last_good.u[2],
            last_good.u[3],
        )),
        _ => Failure::config(e.to_string()),
    }
}

// ---------------------------------------------------------------------------
// decay
// ---------------------------------------------------------------------------

fn cmd_decay(cfg: &RunConfig) -> Result<CmdOutput, Failure> {
    let pp = cfg.particle()?;
    if pp.tau0().is_none() {
        return Err(Failure::config("decay requires particle.tau0"));
    }
    let e = cfg.get_vec3("field.e")?.unwrap_or(Vec3::zero());
    let beta = cfg.get_f64("decay.beta")?.unwrap_or(0.5);
    if !(0.0..1.0).contains(&beta) {
        return Err(Failure::config(format!("decay.beta must lie in [0, 1), got {beta}")));
    }
    let s_end = cfg.get_f64("numeric.tau_end")?.unwrap_or(1.0) * pp.c();
    let h = cfg.get_f64("numeric.h")?.unwrap_or_else(|| default_step(&pp, e, Vec3::zero(), s_end));

    let rep = decay_experiment(e, beta, &pp, s_end, h).map_err(|err| match err {
        DecayError::Integrate(e) => integrate_failure(e),
        other => Failure::config(other.to_string()),
    })?;

    let mut body = header_comment(
        cfg,
        "decay",
        &[
            ("beta", format!("{beta}")),
            ("step_cm", format!("{h}")),
            ("s_end_cm", format!("{s_end}")),
        ],
    );
    body.push_str(
        "t,tau_plus,tau_minus,rate_plus,rate_minus,survival_plus,survival_minus,asymmetry\n",
    );
    for r in &rep.rows {
        let _ = writeln!(
            body,
            "{},{},{},{},{},{},{},{}",
            r.t,
            r.tau_plus,
            r.tau_minus,
            r.rate_plus,
            r.rate_minus,
            r.survival_plus,
            r.survival_minus,
            r.asymmetry,
        );
    }
    Ok(CmdOutput::ok(body))
}

// ---------------------------------------------------------------------------
// boost
// ---------------------------------------------------------------------------

fn cmd_boost(cfg: &RunConfig) -> Result<CmdOutput, Failure> {
    let pp = cfg.particle()?;
    let e = cfg.get_vec3("field.e")?.unwrap_or(Vec3::zero());
    let b = cfg.get_vec3("field.b")?.unwrap_or(Vec3::zero());
    let axis = match cfg.get("boost.axis").unwrap_or("3") {
        "1" | "x" => 1,
        "2" | "y" => 2,
        "3" | "z" => 3,
        other => {
            return Err(Failure::config(format!(
                "boost.axis must be one of 1/2/3/x/y/z, got '{other}'"
            )))
        }
    };
    let beta = cfg.get_f64("boost.beta")?.unwrap_or(0.0);
    let bs = BoostSpec::new(axis, beta).map_err(|e| Failure::config(e.to_string()))?;

    let rep = boost_check(e, b, &bs, &pp);

    if format_is_text(cfg) {
        let mut s = String::new();
        let _ = writeln!(s, "boost axis {axis}, beta {beta}, bound {}", rep.bound);
        let _ = writeln!(s, "{:<4} {:>14} {:>14} {:>14} {:>14}", "row", "initial", "observed", "expected", "deviation");
        for r in &rep.rows {
            let _ = writeln!(
                s,
                "{:<4} {:>14.6e} {:>14.6e} {:>14.6e} {:>14.6e}",
                r.label, r.initial, r.observed, r.expected, r.deviation
            );
        }
        return Ok(CmdOutput::ok(s));
    }

    let mut w = RecordWriter::new("boost");
    w.push_u64("axis", axis as u64);
    w.push_f64("beta", beta);
    w.push_f64("gamma", bs.gamma());
    w.push_f64("bound", rep.bound);
    for r in &rep.rows {
        w.push_f64(&format!("row_{}.initial", r.label), r.initial);
        w.push_f64(&format!("row_{}.observed", r.label), r.observed);
        w.push_f64(&format!("row_{}.expected", r.label), r.expected);
        w.push_f64(&format!("row_{}.expected_gamma", r.label), r.expected_gamma);
        w.push_f64(&format!("row_{}.deviation", r.label), r.deviation);
    }
    w.push_f64("max_deviation", rep.max_deviation());
    // the full transformed connection, for the components that have no
    // observable interpretation
    let fs = crate::field::FieldSample::uniform(e, b);
    let transformed = transform_connection(&build_connection(&fs, &pp, Placement::Full), &bs);
    for ((i, j, k), v) in transformed.components() {
        if v == crate::algebra::CScalar::ZERO {
            continue;
        }
        w.push_f64(&format!("gamma_prime.{i}{j}{k}_re"), v.re);
        w.push_f64(&format!("gamma_prime.{i}{j}{k}_im"), v.im);
    }
    Ok(CmdOutput::ok(w.finish()))
}

// ---------------------------------------------------------------------------
// chern
// ---------------------------------------------------------------------------

fn cmd_chern(cfg: &RunConfig) -> Result<CmdOutput, Failure> {
    let pp = cfg.particle()?;
    let model = cfg.field_model()?;
    let point = cfg.get_point("chern.point")?.unwrap_or(SpacetimePoint::origin());
    let h = cfg.get_f64("chern.h")?.unwrap_or(1e-3);
    if !(h > 0.0) {
        return Err(Failure::config(format!("chern.h must be positive, got {h}")));
    }

    let form = curvature_trace_form(model.as_ref(), point, &pp)?;
    let direct = field_derivative_form(model.as_ref(), point)?;
    let exact = exactness_check(model.as_ref(), point, &pp, h)?;
    let c = pp.c();

    let raw = form.raw.display_basis(c);
    let normalized = form.normalized.display_basis(c);
    let displayed = direct.display_basis(c);

    if format_is_text(cfg) {
        let mut s = String::new();
        let _ = writeln!(s, "{:<8} {:>14} {:>14} {:>14}", "basis", "raw_re", "normalized_re", "displayed_re");
        for (n, label) in DISPLAY_LABELS.iter().enumerate() {
            let _ = writeln!(
                s,
                "{:<8} {:>14.6e} {:>14.6e} {:>14.6e}",
                label, raw[n].re, normalized[n].re, displayed[n].re
            );
        }
        let _ = writeln!(s, "exactness deviation {:e} (h), {:e} (h/2), ratio {}", exact.deviation, exact.deviation_half, exact.ratio);
        return Ok(CmdOutput::ok(s));
    }

    let mut w = RecordWriter::new("chern");
    w.push_f64("h", h);
    for (n, label) in DISPLAY_LABELS.iter().enumerate() {
        let key = label.replace('^', "_");
        w.push_f64(&format!("raw.{key}_re"), raw[n].re);
        w.push_f64(&format!("raw.{key}_im"), raw[n].im);
        w.push_f64(&format!("normalized.{key}_re"), normalized[n].re);
        w.push_f64(&format!("normalized.{key}_im"), normalized[n].im);
        w.push_f64(&format!("direct.{key}_re"), displayed[n].re);
        w.push_f64(&format!("direct.{key}_im"), displayed[n].im);
    }
    w.push_f64("match_residual", form.normalized.sub(&direct).max_abs());
    w.push_f64("exactness.deviation", exact.deviation);
    w.push_f64("exactness.deviation_half", exact.deviation_half);
    w.push_f64("exactness.ratio", exact.ratio);
    Ok(CmdOutput::ok(w.finish()))
}
