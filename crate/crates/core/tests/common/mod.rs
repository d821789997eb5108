//! Shared helpers for the integration and acceptance suites.
//!
//! Each test target compiles its own copy and uses its own subset.
#![allow(dead_code)]

pub mod oracle;

use emgeo::{FieldSample, Vec3};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Relative magnitude of `got − want` against max(1, |want|).
pub fn rel_err(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(1.0)
}

pub fn random_vec3(rng: &mut ChaCha8Rng) -> Vec3 {
    Vec3::new(
        rng.gen_range(-1.0..=1.0),
        rng.gen_range(-1.0..=1.0),
        rng.gen_range(-1.0..=1.0),
    )
}

/// Field sample with every field and derivative slot drawn from [−1, 1].
pub fn random_sample(rng: &mut ChaCha8Rng) -> FieldSample {
    let mut fs = FieldSample::uniform(random_vec3(rng), random_vec3(rng));
    for a in 0..4 {
        fs.de[a] = random_vec3(rng);
        fs.db[a] = random_vec3(rng);
    }
    fs
}
