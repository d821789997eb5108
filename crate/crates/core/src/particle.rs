//! Test-particle parameters in Gaussian units.

use thiserror::Error;

/// Speed of light in cm/s.
pub const SPEED_OF_LIGHT_CGS: f64 = 2.99792458e10;

#[derive(Debug, Error, PartialEq)]
pub enum ParticleError {
    #[error("particle mass must be positive, got {0}")]
    NonPositiveMass(f64),
    #[error("speed of light must be positive, got {0}")]
    NonPositiveC(f64),
    #[error("proper lifetime must be positive, got {0}")]
    NonPositiveLifetime(f64),
}

/// Charge, mass, speed of light, and optional proper lifetime of the test
/// particle. The coupling κ = q/(mc²) is always recomputed from (q, m, c);
/// it is never stored, so it cannot go stale.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ParticleParams {
    q: f64,
    m: f64,
    c: f64,
    tau0: Option<f64>,
}

impl ParticleParams {
    /// `q` in statcoulomb, `m` in gram, `c` in cm/s.
    pub fn new(q: f64, m: f64, c: f64) -> Result<Self, ParticleError> {
        if !(m > 0.0) {
            return Err(ParticleError::NonPositiveMass(m));
        }
        if !(c > 0.0) {
            return Err(ParticleError::NonPositiveC(c));
        }
        Ok(ParticleParams { q, m, c, tau0: None })
    }

    /// Convenience constructor with q = m = c = 1 (natural test units).
    pub fn unit() -> Self {
        ParticleParams { q: 1.0, m: 1.0, c: 1.0, tau0: None }
    }

    /// Attach a proper lifetime `tau0` in seconds (decay experiments).
    pub fn with_lifetime(mut self, tau0: f64) -> Result<Self, ParticleError> {
        if !(tau0 > 0.0) {
            return Err(ParticleError::NonPositiveLifetime(tau0));
        }
        self.tau0 = Some(tau0);
        Ok(self)
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn tau0(&self) -> Option<f64> {
        self.tau0
    }

    /// κ = q/(mc²), the common multiplier of every connection component,
    /// in 1/(statvolt·cm⁻¹·cm).
    pub fn kappa(&self) -> f64 {
        self.q / (self.m * self.c * self.c)
    }

    /// Same particle with the charge sign flipped.
    pub fn conjugate_charge(&self) -> Self {
        ParticleParams { q: -self.q, ..*self }
    }
}
