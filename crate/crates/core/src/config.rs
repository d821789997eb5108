//! Run configuration: a flat key/value text file with dotted section keys,
//! every key also overridable by a long command-line flag of the same
//! name. Unknown keys are rejected with the file and line they came from.
//!
//! Value syntax: numbers as plain floats/integers, 3-vectors as "x,y,z",
//! spacetime points and 4-velocities as four comma-separated numbers,
//! gradient matrices as twelve comma-separated numbers (rows E_x, E_y,
//! E_z × columns x⁰..x³), point lists as semicolon-separated points.

use crate::algebra::{SpacetimePoint, Vec3};
use crate::connection::Placement;
use std::collections::BTreeMap;
use std::fmt;

/// Every key the configuration understands.
pub const KNOWN_KEYS: [&str; 31] = [
    "output.path",
    "particle.q",
    "particle.m",
    "particle.c",
    "particle.tau0",
    "field.preset",
    "field.e",
    "field.b",
    "field.e0",
    "field.k",
    "field.q_src",
    "field.grad_e",
    "field.grad_b",
    "placement",
    "numeric.h",
    "numeric.tau_end",
    "numeric.tolerance",
    "grid.points",
    "grid.seed",
    "grid.extent",
    "grid.list",
    "sim.x0",
    "sim.u0",
    "decay.beta",
    "boost.axis",
    "boost.beta",
    "table.torsion",
    "table.point",
    "chern.point",
    "chern.h",
    "output.format",
];

#[derive(Debug, PartialEq)]
pub struct ConfigError {
    /// "file:line" or "flag --key" — where the offending entry came from.
    pub location: String,
    pub message: String,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

impl std::error::Error for ConfigError {}

fn err(location: impl Into<String>, message: impl Into<String>) -> ConfigError {
    ConfigError { location: location.into(), message: message.into() }
}

/// Key/value store with provenance; later insertions win.
#[derive(Clone, Debug, Default)]
pub struct RunConfig {
    values: BTreeMap<String, (String, String)>, // key -> (value, location)
}

impl RunConfig {
    /// Parse the config file text. `source` names the file in errors.
    pub fn parse(text: &str, source: &str) -> Result<RunConfig, ConfigError> {
        let mut cfg = RunConfig::default();
        for (n, raw) in text.lines().enumerate() {
            let location = format!("{}:{}", source, n + 1);
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(err(location, format!("expected 'key = value', got '{raw}'")));
            };
            cfg.set(key.trim(), value.trim(), &location)?;
        }
        Ok(cfg)
    }

    /// Insert one entry, rejecting unknown keys.
    pub fn set(&mut self, key: &str, value: &str, location: &str) -> Result<(), ConfigError> {
        if !KNOWN_KEYS.contains(&key) {
            return Err(err(location, format!("unknown key '{key}'")));
        }
        self.values.insert(key.to_string(), (value.to_string(), location.to_string()));
        Ok(())
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(|(v, _)| v.as_str())
    }

    fn entry(&self, key: &str) -> Option<(&str, &str)> {
        self.values.get(key).map(|(v, l)| (v.as_str(), l.as_str()))
    }

    pub fn get_f64(&self, key: &str) -> Result<Option<f64>, ConfigError> {
        self.entry(key)
            .map(|(v, l)| {
                v.parse::<f64>()
                    .map_err(|_| err(l, format!("key '{key}': expected a number, got '{v}'")))
            })
            .transpose()
    }

    pub fn get_u64(&self, key: &str) -> Result<Option<u64>, ConfigError> {
        self.entry(key)
            .map(|(v, l)| {
                v.parse::<u64>()
                    .map_err(|_| err(l, format!("key '{key}': expected an integer, got '{v}'")))
            })
            .transpose()
    }

    pub fn get_bool(&self, key: &str) -> Result<Option<bool>, ConfigError> {
        self.entry(key)
            .map(|(v, l)| match v {
                "true" => Ok(true),
                "false" => Ok(false),
                _ => Err(err(l, format!("key '{key}': expected true/false, got '{v}'"))),
            })
            .transpose()
    }

    pub fn get_vec3(&self, key: &str) -> Result<Option<Vec3>, ConfigError> {
        self.entry(key)
            .map(|(v, l)| {
                let nums = parse_numbers(v)
                    .map_err(|m| err(l, format!("key '{key}': {m}")))?;
                if nums.len() != 3 {
                    return Err(err(l, format!("key '{key}': expected 3 numbers, got {}", nums.len())));
                }
                Ok(Vec3::new(nums[0], nums[1], nums[2]))
            })
            .transpose()
    }

    pub fn get_point(&self, key: &str) -> Result<Option<SpacetimePoint>, ConfigError> {
        Ok(self.get_four(key)?.map(SpacetimePoint))
    }

    pub fn get_four(&self, key: &str) -> Result<Option<[f64; 4]>, ConfigError> {
        self.entry(key)
            .map(|(v, l)| {
                let nums = parse_numbers(v)
                    .map_err(|m| err(l, format!("key '{key}': {m}")))?;
                if nums.len() != 4 {
                    return Err(err(l, format!("key '{key}': expected 4 numbers, got {}", nums.len())));
                }
                Ok([nums[0], nums[1], nums[2], nums[3]])
            })
            .transpose()
    }

    /// Twelve numbers, rows E_x, E_y, E_z by columns x⁰..x³.
    pub fn get_gradient(&self, key: &str) -> Result<Option<[[f64; 4]; 3]>, ConfigError> {
        self.entry(key)
            .map(|(v, l)| {
                let nums = parse_numbers(v)
                    .map_err(|m| err(l, format!("key '{key}': {m}")))?;
                if nums.len() != 12 {
                    return Err(err(l, format!("key '{key}': expected 12 numbers, got {}", nums.len())));
                }
                let mut g = [[0.0; 4]; 3];
                for i in 0..3 {
                    g[i].copy_from_slice(&nums[4 * i..4 * i + 4]);
                }
                Ok(g)
            })
            .transpose()
    }

    /// Semicolon-separated list of spacetime points.
    pub fn get_point_list(&self, key: &str) -> Result<Option<Vec<SpacetimePoint>>, ConfigError> {
        self.entry(key)
            .map(|(v, l)| {
                let mut points = Vec::new();
                for part in v.split(';') {
                    let part = part.trim();
                    if part.is_empty() {
                        continue;
                    }
                    let nums = parse_numbers(part)
                        .map_err(|m| err(l, format!("key '{key}': {m}")))?;
                    if nums.len() != 4 {
                        return Err(err(
                            l,
                            format!("key '{key}': each point needs 4 numbers, got {}", nums.len()),
                        ));
                    }
                    points.push(SpacetimePoint([nums[0], nums[1], nums[2], nums[3]]));
                }
                Ok(points)
            })
            .transpose()
    }

    pub fn get_placement(&self) -> Result<Placement, ConfigError> {
        match self.entry("placement") {
            None => Ok(Placement::Full),
            Some((v, l)) => Placement::parse(v).ok_or_else(|| {
                err(l, format!("key 'placement': expected lorentz/full/alternative, got '{v}'"))
            }),
        }
    }

    /// Particle from particle.* keys; q = m = 1 and CGS c unless set.
    pub fn particle(&self) -> Result<crate::particle::ParticleParams, ConfigError> {
        let q = self.get_f64("particle.q")?.unwrap_or(1.0);
        let m = self.get_f64("particle.m")?.unwrap_or(1.0);
        let c = self
            .get_f64("particle.c")?
            .unwrap_or(crate::particle::SPEED_OF_LIGHT_CGS);
        let mut pp = crate::particle::ParticleParams::new(q, m, c)
            .map_err(|e| err("particle", e.to_string()))?;
        if let Some(tau0) = self.get_f64("particle.tau0")? {
            pp = pp.with_lifetime(tau0).map_err(|e| err("particle.tau0", e.to_string()))?;
        }
        Ok(pp)
    }

    /// Field model from field.* keys.
    pub fn field_model(&self) -> Result<Box<dyn crate::field::FieldModel>, ConfigError> {
        let name = self.get("field.preset").unwrap_or("uniform_E");
        let params = crate::field::PresetParams {
            e: self.get_vec3("field.e")?,
            b: self.get_vec3("field.b")?,
            e0: self.get_f64("field.e0")?,
            k: self.get_f64("field.k")?,
            q_src: self.get_f64("field.q_src")?,
            grad_e: self.get_gradient("field.grad_e")?,
            grad_b: self.get_gradient("field.grad_b")?,
        };
        crate::field::preset(name, &params).map_err(|e| err("field", e.to_string()))
    }
}

fn parse_numbers(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|p| {
            let p = p.trim();
            p.parse::<f64>().map_err(|_| format!("'{p}' is not a number"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_file_with_comments_and_overrides() {
        let text = "\n# comment\nparticle.q = 2.0  # trailing\nfield.preset = plane_wave\nfield.e0 = 1.5\nfield.k = 2\n";
        let mut cfg = RunConfig::parse(text, "run.cfg").unwrap();
        assert_eq!(cfg.get_f64("particle.q").unwrap(), Some(2.0));
        cfg.set("particle.q", "-3.5", "flag --particle.q").unwrap();
        assert_eq!(cfg.get_f64("particle.q").unwrap(), Some(-3.5));
        let model = cfg.field_model().unwrap();
        assert_eq!(model.name(), "plane_wave");
    }

    #[test]
    fn unknown_key_reports_location() {
        let e = RunConfig::parse("particle.charge = 1\n", "run.cfg").unwrap_err();
        assert_eq!(e.location, "run.cfg:1");
        assert!(e.message.contains("particle.charge"));

        let e = RunConfig::parse("\n\nnope = 1\n", "x.cfg").unwrap_err();
        assert_eq!(e.location, "x.cfg:3");
    }

    #[test]
    fn malformed_values_report_key_and_location() {
        let cfg = RunConfig::parse("field.e = 1,2\n", "run.cfg").unwrap();
        let e = cfg.get_vec3("field.e").unwrap_err();
        assert_eq!(e.location, "run.cfg:1");
        assert!(e.message.contains("expected 3 numbers"));

        let cfg = RunConfig::parse("particle.q = fast\n", "run.cfg").unwrap();
        assert!(cfg.get_f64("particle.q").is_err());

        let e = RunConfig::parse("just a line\n", "run.cfg").unwrap_err();
        assert!(e.message.contains("key = value"));
    }

    #[test]
    fn vectors_points_and_gradients() {
        let text = "field.e = 1, 0, -2\nsim.x0 = 0,1,2,3\nfield.grad_e = 0,1,0,0, 0,0,0,0, 0,0,0,0\ngrid.list = 0,0,0,0 ; 1,1,1,1\n";
        let cfg = RunConfig::parse(text, "t").unwrap();
        assert_eq!(cfg.get_vec3("field.e").unwrap(), Some(Vec3::new(1.0, 0.0, -2.0)));
        assert_eq!(
            cfg.get_point("sim.x0").unwrap(),
            Some(SpacetimePoint([0.0, 1.0, 2.0, 3.0]))
        );
        let g = cfg.get_gradient("field.grad_e").unwrap().unwrap();
        assert_eq!(g[0][1], 1.0);
        assert_eq!(cfg.get_point_list("grid.list").unwrap().unwrap().len(), 2);
    }

    #[test]
    fn particle_defaults_and_placement() {
        let cfg = RunConfig::parse("", "t").unwrap();
        let pp = cfg.particle().unwrap();
        assert_eq!(pp.q(), 1.0);
        assert_eq!(pp.c(), crate::particle::SPEED_OF_LIGHT_CGS);
        assert_eq!(cfg.get_placement().unwrap(), Placement::Full);

        let cfg = RunConfig::parse("placement = alternative\nparticle.c = 1\n", "t").unwrap();
        assert_eq!(cfg.get_placement().unwrap(), Placement::AlternativeFull);
        assert_eq!(cfg.particle().unwrap().c(), 1.0);

        let cfg = RunConfig::parse("placement = sideways\n", "t").unwrap();
        assert!(cfg.get_placement().is_err());
    }
}
