//! The electromagnetic connection Γ^i_jk, its torsion, and the
//! Kronecker-signed torsion-derivative sum that carries ∇·B.
//!
//! Components live in a dense 4×4×4 complex array. Every component is a
//! linear function of (E, B) with coefficient proportional to κ = q/mc²;
//! zero entries are semantically meaningful and tests assert them exactly.
//! Three placements of the magnetic components are supported: the bare
//! Lorentz-force rows, the full placement, and the alternative full
//! placement whose B-rows differ only in their antisymmetric part.

use crate::algebra::{levi_civita, sqrt_five_sixths, CScalar, SpacetimePoint};
use crate::field::{FieldError, FieldModel, FieldSample};
use crate::particle::ParticleParams;
use std::fmt::Write as _;

/// Which slots carry the magnetic components, and whether the non-Lorentz
/// rows (Γ⁰ rows and the complex spatial E-rows) are populated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Placement {
    /// Only the rows readable from the classical Lorentz force.
    LorentzOnly,
    /// The complete electromagnetic connection.
    Full,
    /// Full connection with the alternative placement of the Lorentz
    /// B-rows; identical symmetric part, opposite torsion in those rows.
    AlternativeFull,
}

impl Placement {
    pub fn parse(s: &str) -> Option<Placement> {
        match s {
            "lorentz" => Some(Placement::LorentzOnly),
            "full" => Some(Placement::Full),
            "alternative" => Some(Placement::AlternativeFull),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Placement::LorentzOnly => "lorentz",
            Placement::Full => "full",
            Placement::AlternativeFull => "alternative",
        }
    }
}

/// Dense rank-(1,2) complex tensor: `get(i, j, k)` = Γ^i_jk, in 1/cm.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Connection {
    g: [[[CScalar; 4]; 4]; 4],
}

impl Connection {
    pub fn zero() -> Self {
        Connection { g: [[[CScalar::ZERO; 4]; 4]; 4] }
    }

    /// Wrap a dense component array `g[i][j][k]` = Γ^i_jk.
    pub fn from_components(g: [[[CScalar; 4]; 4]; 4]) -> Self {
        Connection { g }
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> CScalar {
        self.g[i][j][k]
    }

    fn add(&mut self, i: usize, j: usize, k: usize, v: CScalar) {
        self.g[i][j][k] += v;
    }

    /// Iterator over all 64 components as ((i, j, k), Γ^i_jk).
    pub fn components(&self) -> impl Iterator<Item = ((usize, usize, usize), CScalar)> + '_ {
        (0..64).map(move |n| {
            let (i, j, k) = (n / 16, (n / 4) % 4, n % 4);
            ((i, j, k), self.g[i][j][k])
        })
    }

    /// Largest component magnitude (max of |re|, |im| over all entries).
    pub fn max_abs(&self) -> f64 {
        self.components()
            .map(|(_, v)| v.re.abs().max(v.im.abs()))
            .fold(0.0, f64::max)
    }
}

/// Torsion T^i_jk = Γ^i_jk − Γ^i_kj, exactly antisymmetric in (j, k).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Torsion {
    t: [[[CScalar; 4]; 4]; 4],
}

impl Torsion {
    pub fn get(&self, i: usize, j: usize, k: usize) -> CScalar {
        self.t[i][j][k]
    }

    /// Components with j < k as ((i, j, k), T^i_jk); the j > k half is the
    /// antisymmetric image.
    pub fn upper_components(&self) -> impl Iterator<Item = ((usize, usize, usize), CScalar)> + '_ {
        (0..4).flat_map(move |i| {
            (0..4).flat_map(move |j| {
                ((j + 1)..4).map(move |k| ((i, j, k), self.t[i][j][k]))
            })
        })
    }
}

/// Connection together with its four coordinate derivatives
/// ∂Γ/∂x^a, assembled from the field derivative slots by linearity.
#[derive(Clone, Copy, Debug)]
pub struct ConnectionJet {
    pub gamma: Connection,
    pub d_gamma: [Connection; 4],
}

/// Populate the connection at one field sample.
///
/// The Lorentz rows carry −κE on Γ^i₀₀ and ±κB on the six mixed slots
/// selected by the placement. The full placements add the Γ⁰ B-rows
/// (±κB/2), the Γ⁰ E-rows (−κE, symmetric), and the twelve complex spatial
/// E-rows with coefficients ±i√(5/6)·κE and (1 ± i√(5/6))·κE.
pub fn build_connection(s: &FieldSample, pp: &ParticleParams, pl: Placement) -> Connection {
    let kappa = pp.kappa();
    let sigma = sqrt_five_sixths();
    let re = |x: f64| CScalar::new(x, 0.0);
    let im = |x: f64| CScalar::new(0.0, x);

    let ke = [kappa * s.e.x, kappa * s.e.y, kappa * s.e.z];
    let kb = [kappa * s.b.x, kappa * s.b.y, kappa * s.b.z];

    let mut g = Connection::zero();

    // Lorentz E-rows: Γ^i₀₀ = −κE_i
    for i in 0..3 {
        g.add(i + 1, 0, 0, re(-ke[i]));
    }

    // Lorentz B-rows, per placement.
    match pl {
        Placement::LorentzOnly | Placement::Full => {
            g.add(2, 3, 0, re(-kb[0]));
            g.add(3, 1, 0, re(-kb[1]));
            g.add(1, 2, 0, re(-kb[2]));
            g.add(3, 0, 2, re(kb[0]));
            g.add(1, 0, 3, re(kb[1]));
            g.add(2, 0, 1, re(kb[2]));
        }
        Placement::AlternativeFull => {
            g.add(2, 0, 3, re(-kb[0]));
            g.add(3, 0, 1, re(-kb[1]));
            g.add(1, 0, 2, re(-kb[2]));
            g.add(3, 2, 0, re(kb[0]));
            g.add(1, 3, 0, re(kb[1]));
            g.add(2, 1, 0, re(kb[2]));
        }
    }

    if pl == Placement::LorentzOnly {
        return g;
    }

    // Γ⁰ B-rows: ±κB/2
    g.add(0, 3, 2, re(-0.5 * kb[0]));
    g.add(0, 1, 3, re(-0.5 * kb[1]));
    g.add(0, 2, 1, re(-0.5 * kb[2]));
    g.add(0, 2, 3, re(0.5 * kb[0]));
    g.add(0, 3, 1, re(0.5 * kb[1]));
    g.add(0, 1, 2, re(0.5 * kb[2]));

    // Γ⁰ E-rows, symmetric in (j, k)
    for i in 0..3 {
        g.add(0, 0, i + 1, re(-ke[i]));
        g.add(0, i + 1, 0, re(-ke[i]));
    }

    // Complex spatial E-rows. Column order follows the table exactly; the
    // E_z column pairs +i√(5/6) with the y-slots and −i√(5/6) with the
    // x-slots.
    g.add(2, 2, 1, im(sigma * ke[0]));
    g.add(3, 3, 2, im(sigma * ke[1]));
    g.add(2, 2, 3, im(sigma * ke[2]));
    g.add(2, 1, 2, im(sigma * ke[0]));
    g.add(3, 2, 3, im(sigma * ke[1]));
    g.add(2, 3, 2, im(sigma * ke[2]));
    g.add(3, 3, 1, im(-sigma * ke[0]));
    g.add(1, 1, 2, im(-sigma * ke[1]));
    g.add(1, 1, 3, im(-sigma * ke[2]));
    g.add(3, 1, 3, im(-sigma * ke[0]));
    g.add(1, 2, 1, im(-sigma * ke[1]));
    g.add(1, 3, 1, im(-sigma * ke[2]));
    g.add(1, 2, 2, CScalar::new(ke[0], sigma * ke[0]));
    g.add(2, 3, 3, CScalar::new(ke[1], sigma * ke[1]));
    g.add(3, 2, 2, CScalar::new(ke[2], sigma * ke[2]));
    g.add(1, 3, 3, CScalar::new(ke[0], -sigma * ke[0]));
    g.add(2, 1, 1, CScalar::new(ke[1], -sigma * ke[1]));
    g.add(3, 1, 1, CScalar::new(ke[2], -sigma * ke[2]));

    g
}

/// Connection and its coordinate derivatives at `p`. Because every
/// component is linear in (E, B), ∂Γ/∂x^a is the connection built from the
/// derivative slice a of the field sample.
pub fn build_jet(
    model: &dyn FieldModel,
    p: SpacetimePoint,
    pp: &ParticleParams,
    pl: Placement,
) -> Result<ConnectionJet, FieldError> {
    let s = crate::field::eval_field(model, p)?;
    Ok(jet_from_sample(&s, pp, pl))
}

/// Jet assembled from an already evaluated sample.
pub fn jet_from_sample(s: &FieldSample, pp: &ParticleParams, pl: Placement) -> ConnectionJet {
    let gamma = build_connection(s, pp, pl);
    let d_gamma = [
        build_connection(&s.derivative_slice(0), pp, pl),
        build_connection(&s.derivative_slice(1), pp, pl),
        build_connection(&s.derivative_slice(2), pp, pl),
        build_connection(&s.derivative_slice(3), pp, pl),
    ];
    ConnectionJet { gamma, d_gamma }
}

/// Antisymmetric part of the connection, exact arithmetic.
pub fn torsion(c: &Connection) -> Torsion {
    let mut t = [[[CScalar::ZERO; 4]; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                t[i][j][k] = c.get(i, j, k) - c.get(i, k, j);
            }
        }
    }
    Torsion { t }
}

/// Σ_{ijkl} ε_{ijkl} ∂T^i_jk/∂x^l. For the full placements this equals
/// 2κ∇·B, so a zero sum is the fourth Maxwell equation.
///
/// The derivative here is the plain partial derivative; see
/// [`torsion_epsilon_sum_covariant`] for the diagnostic variant with the
/// full connection-correction terms.
pub fn torsion_epsilon_sum(
    model: &dyn FieldModel,
    p: SpacetimePoint,
    pp: &ParticleParams,
    pl: Placement,
) -> Result<CScalar, FieldError> {
    let jet = build_jet(model, p, pp, pl)?;
    Ok(epsilon_sum_partial(&jet))
}

fn epsilon_sum_partial(jet: &ConnectionJet) -> CScalar {
    let mut sum = CScalar::ZERO;
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                for l in 0..4 {
                    let eps = levi_civita(i, j, k, l);
                    if eps == 0 {
                        continue;
                    }
                    let dt = jet.d_gamma[l].get(i, j, k) - jet.d_gamma[l].get(i, k, j);
                    sum += dt * eps as f64;
                }
            }
        }
    }
    sum
}

/// Diagnostic: the ε-signed sum over the full covariant derivative
/// ∇_l T^i_jk = ∂_l T^i_jk + Γ^i_lm T^m_jk − Γ^m_lj T^i_mk − Γ^m_lk T^i_jm.
/// Reported alongside the partial-derivative sum, never asserted.
pub fn torsion_epsilon_sum_covariant(
    model: &dyn FieldModel,
    p: SpacetimePoint,
    pp: &ParticleParams,
    pl: Placement,
) -> Result<CScalar, FieldError> {
    let jet = build_jet(model, p, pp, pl)?;
    let tor = torsion(&jet.gamma);
    let mut sum = epsilon_sum_partial(&jet);
    let g = &jet.gamma;
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                for l in 0..4 {
                    let eps = levi_civita(i, j, k, l);
                    if eps == 0 {
                        continue;
                    }
                    let mut corr = CScalar::ZERO;
                    for m in 0..4 {
                        corr += g.get(i, l, m) * tor.get(m, j, k)
                            - g.get(m, l, j) * tor.get(i, m, k)
                            - g.get(m, l, k) * tor.get(i, j, m);
                    }
                    sum += corr * eps as f64;
                }
            }
        }
    }
    Ok(sum)
}

// ---------------------------------------------------------------------------
// Table dump
// ---------------------------------------------------------------------------

/// One row per nonzero component, columns `i j k re im`, laid out for
/// eyeball comparison against the connection and torsion tables. Zero input
/// produces the sentinel line "no nonzero components".
pub fn dump_connection(c: &Connection) -> String {
    dump_rows(c.components())
}

/// Torsion dump, j < k rows only.
pub fn dump_torsion(t: &Torsion) -> String {
    dump_rows(t.upper_components())
}

fn dump_rows(rows: impl Iterator<Item = ((usize, usize, usize), CScalar)>) -> String {
    let mut out = String::new();
    let mut any = false;
    for ((i, j, k), v) in rows {
        if v == CScalar::ZERO {
            continue;
        }
        any = true;
        let _ = writeln!(out, "{} {} {} {} {}", i, j, k, v.re, v.im);
    }
    if !any {
        out.push_str("no nonzero components\n");
    }
    out
}
