//! Independent symbolic expansion of the curvature, used as the oracle the
//! numeric implementation is checked against.
//!
//! Everything here is exact: polynomials over 31 symbols (κ, the six field
//! components, and their 24 coordinate derivatives) with coefficients in
//! the ring (a + bσ), a and b Gaussian rationals, σ² = 5/6. The curvature
//! expansion, the Ricci contraction, and the closed-form targets are all
//! manipulated as polynomials, so identity checks are coefficient-wise and
//! carry no tolerance at all. Floating-point enters only in [`Poly::eval`].
//!
//! Nothing in this module calls the connection or curvature code paths of
//! the crate under test.

use emgeo::{CScalar, FieldSample};
use num_rational::Ratio;
use std::collections::BTreeMap;

type R = Ratio<i64>;

pub const NVARS: usize = 31;
pub const KAPPA: u8 = 0;

/// Field component symbols: E_x, E_y, E_z = 1..3, B_x, B_y, B_z = 4..6.
pub fn e_var(i: usize) -> u8 {
    1 + i as u8
}

pub fn b_var(i: usize) -> u8 {
    4 + i as u8
}

/// ∂E_i/∂x^a and ∂B_i/∂x^a symbols.
pub fn de_var(i: usize, a: usize) -> u8 {
    7 + (4 * i + a) as u8
}

pub fn db_var(i: usize, a: usize) -> u8 {
    19 + (4 * i + a) as u8
}

/// Coefficient a + b·σ with a, b ∈ ℚ(i) and σ² = 5/6.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Coeff {
    a_re: R,
    a_im: R,
    b_re: R,
    b_im: R,
}

impl Coeff {
    pub const fn zero() -> Self {
        Coeff {
            a_re: R::new_raw(0, 1),
            a_im: R::new_raw(0, 1),
            b_re: R::new_raw(0, 1),
            b_im: R::new_raw(0, 1),
        }
    }

    pub fn int(n: i64) -> Self {
        Coeff { a_re: R::from_integer(n), ..Coeff::zero() }
    }

    pub fn frac(num: i64, den: i64) -> Self {
        Coeff { a_re: R::new(num, den), ..Coeff::zero() }
    }

    /// n·iσ
    pub fn imag_sigma(n: i64) -> Self {
        Coeff { b_im: R::from_integer(n), ..Coeff::zero() }
    }

    /// re + im·iσ (the table's (1 ± iσ) entries).
    pub fn with_imag_sigma(re: i64, im: i64) -> Self {
        Coeff {
            a_re: R::from_integer(re),
            b_im: R::from_integer(im),
            ..Coeff::zero()
        }
    }

    pub fn is_zero(&self) -> bool {
        *self == Coeff::zero()
    }

    fn add(&self, o: &Coeff) -> Coeff {
        Coeff {
            a_re: self.a_re + o.a_re,
            a_im: self.a_im + o.a_im,
            b_re: self.b_re + o.b_re,
            b_im: self.b_im + o.b_im,
        }
    }

    fn neg(&self) -> Coeff {
        Coeff { a_re: -self.a_re, a_im: -self.a_im, b_re: -self.b_re, b_im: -self.b_im }
    }

    fn mul(&self, o: &Coeff) -> Coeff {
        // complex products of the σ-free and σ-parts
        let (ax, ay, bx, by) = (self.a_re, self.a_im, self.b_re, self.b_im);
        let (cx, cy, dx, dy) = (o.a_re, o.a_im, o.b_re, o.b_im);
        let s2 = R::new(5, 6); // σ²
        // (a + bσ)(c + dσ) = (ac + σ²bd) + (ad + bc)σ
        Coeff {
            a_re: ax * cx - ay * cy + s2 * (bx * dx - by * dy),
            a_im: ax * cy + ay * cx + s2 * (bx * dy + by * dx),
            b_re: ax * dx - ay * dy + bx * cx - by * cy,
            b_im: ax * dy + ay * dx + bx * cy + by * cx,
        }
    }

    pub fn to_complex(&self, sigma: f64) -> CScalar {
        let f = |r: R| *r.numer() as f64 / *r.denom() as f64;
        CScalar::new(f(self.a_re) + f(self.b_re) * sigma, f(self.a_im) + f(self.b_im) * sigma)
    }
}

/// Multivariate polynomial: monomial (sorted symbol list, with repetition)
/// to coefficient. Zero coefficients are pruned eagerly, so `is_zero` is a
/// structural check.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Poly {
    terms: BTreeMap<Vec<u8>, Coeff>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    /// coeff · Π vars
    pub fn term(coeff: Coeff, vars: &[u8]) -> Self {
        if coeff.is_zero() {
            return Poly::zero();
        }
        let mut mono = vars.to_vec();
        mono.sort_unstable();
        let mut terms = BTreeMap::new();
        terms.insert(mono, coeff);
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            let entry = out.terms.entry(m.clone()).or_insert_with(Coeff::zero);
            *entry = entry.add(c);
            if entry.is_zero() {
                out.terms.remove(m);
            }
        }
        out
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect() }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let mut mono = ma.clone();
                mono.extend_from_slice(mb);
                mono.sort_unstable();
                let c = ca.mul(cb);
                let entry = out.terms.entry(mono).or_insert_with(Coeff::zero);
                *entry = entry.add(&c);
                if entry.is_zero() {
                    let key: Vec<u8> = {
                        let mut k = ma.clone();
                        k.extend_from_slice(mb);
                        k.sort_unstable();
                        k
                    };
                    out.terms.remove(&key);
                }
            }
        }
        out
    }

    pub fn eval(&self, values: &[f64; NVARS], sigma: f64) -> CScalar {
        let mut sum = CScalar::ZERO;
        for (mono, coeff) in &self.terms {
            let mut prod = 1.0;
            for &v in mono {
                prod *= values[v as usize];
            }
            sum += coeff.to_complex(sigma) * prod;
        }
        sum
    }
}

/// Which placement's table to transcribe.
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Table {
    Full,
    AlternativeFull,
}

/// Transcription of the connection tables with the field symbols given by
/// `e_syms`/`b_syms` (so the same rows serve both Γ and its coordinate
/// derivatives, which are linear in the field symbols).
fn table_with_symbols(e_syms: [u8; 3], b_syms: [u8; 3], table: Table) -> Vec<(usize, usize, usize, Poly)> {
    let mut rows: Vec<(usize, usize, usize, Poly)> = Vec::new();
    let mut add = |i: usize, j: usize, k: usize, c: Coeff, field: u8| {
        rows.push((i, j, k, Poly::term(c, &[KAPPA, field])));
    };
    let [ex, ey, ez] = e_syms;
    let [bx, by, bz] = b_syms;

    // Lorentz E rows
    add(1, 0, 0, Coeff::int(-1), ex);
    add(2, 0, 0, Coeff::int(-1), ey);
    add(3, 0, 0, Coeff::int(-1), ez);
    // Lorentz B rows
    match table {
        Table::Full => {
            add(2, 3, 0, Coeff::int(-1), bx);
            add(3, 1, 0, Coeff::int(-1), by);
            add(1, 2, 0, Coeff::int(-1), bz);
            add(3, 0, 2, Coeff::int(1), bx);
            add(1, 0, 3, Coeff::int(1), by);
            add(2, 0, 1, Coeff::int(1), bz);
        }
        Table::AlternativeFull => {
            add(2, 0, 3, Coeff::int(-1), bx);
            add(3, 0, 1, Coeff::int(-1), by);
            add(1, 0, 2, Coeff::int(-1), bz);
            add(3, 2, 0, Coeff::int(1), bx);
            add(1, 3, 0, Coeff::int(1), by);
            add(2, 1, 0, Coeff::int(1), bz);
        }
    }
    // Γ⁰ B rows
    add(0, 3, 2, Coeff::frac(-1, 2), bx);
    add(0, 1, 3, Coeff::frac(-1, 2), by);
    add(0, 2, 1, Coeff::frac(-1, 2), bz);
    add(0, 2, 3, Coeff::frac(1, 2), bx);
    add(0, 3, 1, Coeff::frac(1, 2), by);
    add(0, 1, 2, Coeff::frac(1, 2), bz);
    // Γ⁰ E rows
    add(0, 0, 1, Coeff::int(-1), ex);
    add(0, 0, 2, Coeff::int(-1), ey);
    add(0, 0, 3, Coeff::int(-1), ez);
    add(0, 1, 0, Coeff::int(-1), ex);
    add(0, 2, 0, Coeff::int(-1), ey);
    add(0, 3, 0, Coeff::int(-1), ez);
    // complex spatial E rows
    add(2, 2, 1, Coeff::imag_sigma(1), ex);
    add(3, 3, 2, Coeff::imag_sigma(1), ey);
    add(2, 2, 3, Coeff::imag_sigma(1), ez);
    add(2, 1, 2, Coeff::imag_sigma(1), ex);
    add(3, 2, 3, Coeff::imag_sigma(1), ey);
    add(2, 3, 2, Coeff::imag_sigma(1), ez);
    add(3, 3, 1, Coeff::imag_sigma(-1), ex);
    add(1, 1, 2, Coeff::imag_sigma(-1), ey);
    add(1, 1, 3, Coeff::imag_sigma(-1), ez);
    add(3, 1, 3, Coeff::imag_sigma(-1), ex);
    add(1, 2, 1, Coeff::imag_sigma(-1), ey);
    add(1, 3, 1, Coeff::imag_sigma(-1), ez);
    add(1, 2, 2, Coeff::with_imag_sigma(1, 1), ex);
    add(2, 3, 3, Coeff::with_imag_sigma(1, 1), ey);
    add(3, 2, 2, Coeff::with_imag_sigma(1, 1), ez);
    add(1, 3, 3, Coeff::with_imag_sigma(1, -1), ex);
    add(2, 1, 1, Coeff::with_imag_sigma(1, -1), ey);
    add(3, 1, 1, Coeff::with_imag_sigma(1, -1), ez);

    rows
}

pub type Rank3 = Vec<Vec<Vec<Poly>>>;

fn empty_rank3() -> Rank3 {
    vec![vec![vec![Poly::zero(); 4]; 4]; 4]
}

/// Γ^i_jk as polynomials in the field symbols.
pub fn gamma_poly(table: Table) -> Rank3 {
    let mut g = empty_rank3();
    for (i, j, k, p) in table_with_symbols([e_var(0), e_var(1), e_var(2)], [b_var(0), b_var(1), b_var(2)], table) {
        g[i][j][k] = g[i][j][k].add(&p);
    }
    g
}

/// ∂Γ^i_jk/∂x^a as polynomials in the derivative symbols.
pub fn d_gamma_poly(a: usize, table: Table) -> Rank3 {
    let mut g = empty_rank3();
    for (i, j, k, p) in table_with_symbols(
        [de_var(0, a), de_var(1, a), de_var(2, a)],
        [db_var(0, a), db_var(1, a), db_var(2, a)],
        table,
    ) {
        g[i][j][k] = g[i][j][k].add(&p);
    }
    g
}

pub struct RiemannPoly {
    r: Vec<Poly>, // flattened [i][j][k][l]
}

impl RiemannPoly {
    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> &Poly {
        &self.r[((i * 4 + j) * 4 + k) * 4 + l]
    }
}

/// Symbolic expansion of the curvature components
/// R^i_jkl = ∂Γ^i_lj/∂x_k − ∂Γ^i_kj/∂x_l + Σ_m(Γ^m_lj Γ^i_km − Γ^m_kj Γ^i_lm).
pub fn riemann_poly(table: Table) -> RiemannPoly {
    let g = gamma_poly(table);
    let dg: Vec<Rank3> = (0..4).map(|a| d_gamma_poly(a, table)).collect();
    let mut r = Vec::with_capacity(256);
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                for l in 0..4 {
                    let mut p = dg[k][i][l][j].sub(&dg[l][i][k][j]);
                    for m in 0..4 {
                        p = p.add(&g[m][l][j].mul(&g[i][k][m]));
                        p = p.sub(&g[m][k][j].mul(&g[i][l][m]));
                    }
                    r.push(p);
                }
            }
        }
    }
    RiemannPoly { r }
}

/// R_ij = Σ_k R^k_jki.
pub fn ricci_poly(r: &RiemannPoly) -> Vec<Vec<Poly>> {
    let mut ric = vec![vec![Poly::zero(); 4]; 4];
    for (i, row) in ric.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            for k in 0..4 {
                *slot = slot.add(r.get(k, j, k, i));
            }
        }
    }
    ric
}

// ---------------------------------------------------------------------------
// Closed-form targets, written directly from the displayed expressions.
// ---------------------------------------------------------------------------

/// κ²(E² + B²) + 2κ ∇·E
pub fn trace_target() -> Poly {
    let mut p = Poly::zero();
    for i in 0..3 {
        p = p.add(&Poly::term(Coeff::int(1), &[KAPPA, KAPPA, e_var(i), e_var(i)]));
        p = p.add(&Poly::term(Coeff::int(1), &[KAPPA, KAPPA, b_var(i), b_var(i)]));
    }
    for i in 0..3 {
        p = p.add(&Poly::term(Coeff::int(2), &[KAPPA, de_var(i, i + 1)]));
    }
    p
}

/// κ²(E×B)_i + κ(∇×B − ∂E/∂x⁰)_i for i = 0, 1, 2 (x, y, z).
pub fn mixed_target(i: usize) -> Poly {
    let (a, b) = ((i + 1) % 3, (i + 2) % 3);
    let mut p = Poly::term(Coeff::int(1), &[KAPPA, KAPPA, e_var(a), b_var(b)]);
    p = p.sub(&Poly::term(Coeff::int(1), &[KAPPA, KAPPA, e_var(b), b_var(a)]));
    // (∇×B)_i = ∂B_b/∂x_a − ∂B_a/∂x_b with spatial coordinate indices a+1, b+1
    p = p.add(&Poly::term(Coeff::int(1), &[KAPPA, db_var(b, a + 1)]));
    p = p.sub(&Poly::term(Coeff::int(1), &[KAPPA, db_var(a, b + 1)]));
    p = p.sub(&Poly::term(Coeff::int(1), &[KAPPA, de_var(i, 0)]));
    p
}

/// κ(∇×E + ∂B/∂x⁰)_i for i = 0, 1, 2 (x, y, z).
pub fn faraday_target(i: usize) -> Poly {
    let (a, b) = ((i + 1) % 3, (i + 2) % 3);
    let mut p = Poly::term(Coeff::int(1), &[KAPPA, de_var(b, a + 1)]);
    p = p.sub(&Poly::term(Coeff::int(1), &[KAPPA, de_var(a, b + 1)]));
    p = p.add(&Poly::term(Coeff::int(1), &[KAPPA, db_var(i, 0)]));
    p
}

/// κ(∂_b E_a − ∂_a E_b) with E_0 ≡ 0: the trace of the curvature 2-form.
pub fn chern_target(a: usize, b: usize) -> Poly {
    let mut p = Poly::zero();
    if a > 0 {
        p = p.add(&Poly::term(Coeff::int(1), &[KAPPA, de_var(a - 1, b)]));
    }
    if b > 0 {
        p = p.sub(&Poly::term(Coeff::int(1), &[KAPPA, de_var(b - 1, a)]));
    }
    p
}

/// 2κ ∇·B
pub fn epsilon_sum_target() -> Poly {
    let mut p = Poly::zero();
    for i in 0..3 {
        p = p.add(&Poly::term(Coeff::int(2), &[KAPPA, db_var(i, i + 1)]));
    }
    p
}

/// Σ_{ijkl} ε_{ijkl} ∂T^i_jk/∂x^l expanded symbolically.
pub fn epsilon_sum_poly(table: Table) -> Poly {
    let dg: Vec<Rank3> = (0..4).map(|a| d_gamma_poly(a, table)).collect();
    let mut p = Poly::zero();
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                for l in 0..4 {
                    let eps = emgeo::levi_civita(i, j, k, l);
                    if eps == 0 {
                        continue;
                    }
                    let dt = dg[l][i][j][k].sub(&dg[l][i][k][j]);
                    let signed = if eps > 0 { dt } else { dt.neg() };
                    p = p.add(&signed);
                }
            }
        }
    }
    p
}

/// Valuation of the 31 symbols from a field sample and κ.
pub fn valuation(fs: &FieldSample, kappa: f64) -> [f64; NVARS] {
    let mut v = [0.0; NVARS];
    v[KAPPA as usize] = kappa;
    for i in 0..3 {
        v[e_var(i) as usize] = fs.e[i];
        v[b_var(i) as usize] = fs.b[i];
        for a in 0..4 {
            v[de_var(i, a) as usize] = fs.de[a][i];
            v[db_var(i, a) as usize] = fs.db[a][i];
        }
    }
    v
}
