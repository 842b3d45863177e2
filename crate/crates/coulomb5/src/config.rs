//! Run configuration shared by every subcommand.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use coulomb5_core::PhysParams;

/// Configuration errors; all of them map to the usage exit code.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ConfigError {
    #[error("invalid radial grid {0:?}: expected MIN:MAX:N with 0 < MIN < MAX and N >= 2")]
    Grid(String),
    #[error("invalid tolerance override {0:?}: expected NAME=VALUE with VALUE > 0")]
    TolSyntax(String),
    #[error("unknown tolerance {0:?}; known names: {known}", known = Tolerances::names().join(", "))]
    TolName(String),
    #[error("unknown output format {0:?}: expected csv or json")]
    Format(String),
    #[error("invalid parameter: {0}")]
    Param(String),
}

/// Output file format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(ConfigError::Format(s.to_owned())),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Csv => "csv",
            Format::Json => "json",
        })
    }
}

/// Uniform radial grid `r_min, ..., r_max` with `n_r` points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialGrid {
    pub r_min: f64,
    pub r_max: f64,
    pub n_r: usize,
}

impl RadialGrid {
    pub fn new(r_min: f64, r_max: f64, n_r: usize) -> Result<Self, ConfigError> {
        let grid = RadialGrid { r_min, r_max, n_r };
        if !(r_min > 0.0 && r_max > r_min && r_max.is_finite() && n_r >= 2) {
            return Err(ConfigError::Grid(grid.to_string()));
        }
        Ok(grid)
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        let step = (self.r_max - self.r_min) / (self.n_r - 1) as f64;
        (0..self.n_r).map(move |i| {
            if i + 1 == self.n_r {
                self.r_max
            } else {
                self.r_min + step * i as f64
            }
        })
    }
}

impl Default for RadialGrid {
    fn default() -> Self {
        RadialGrid {
            r_min: 10.0,
            r_max: 500.0,
            n_r: 50,
        }
    }
}

impl FromStr for RadialGrid {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ConfigError::Grid(s.to_owned());
        let parts: Vec<&str> = s.split(':').collect();
        let [lo, hi, n] = parts[..] else {
            return Err(bad());
        };
        let lo: f64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: f64 = hi.trim().parse().map_err(|_| bad())?;
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        RadialGrid::new(lo, hi, n).map_err(|_| bad())
    }
}

impl fmt::Display for RadialGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.r_min, self.r_max, self.n_r)
    }
}

/// Default tolerance of every named check.
///
/// Each value is the acceptance bound of the corresponding identity; the
/// residual it is compared with is documented with the check in
/// [`crate::suites`].
pub const DEFAULT_TOLERANCES: &[(&str, f64)] = &[
    // | |u|^4 - |x|^2 | / max(1, |u|^4)
    ("euler_identity", 1e-12),
    // | ([J_a, J_b] - i eps J_c) f |, analytic partials
    ("su2_commutators", 1e-10),
    // | Delta_8 (f o x) - 4 r Delta_5 f |
    ("laplacian_identity", 1e-7),
    // oscillator residual of the pulled-back continuum state, relative
    ("duality", 1e-5),
    // | delta_{lam+1} - delta_lam + arctan(1/(ak(lam+2))) |
    ("phase_recurrence", 1e-12),
    ("radial_ode", 1e-6),
    ("hyperspherical_pde", 1e-6),
    ("parabolic_ode", 1e-7),
    ("parabolic_pde", 1e-6),
    ("separation_identity", 1e-6),
    ("scattering_pde", 1e-6),
    // | psi - e^{ik x0} | at a = 1e6
    ("free_limit", 1e-5),
    // | incident + scattered - psi | / |psi| at kr = 400, theta = pi/2
    ("asymptotic_split", 3e-2),
];

/// Named tolerances with overrides applied.
#[derive(Debug, Clone, PartialEq)]
pub struct Tolerances(BTreeMap<&'static str, f64>);

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances(DEFAULT_TOLERANCES.iter().copied().collect())
    }
}

impl Tolerances {
    pub fn names() -> Vec<&'static str> {
        DEFAULT_TOLERANCES.iter().map(|&(n, _)| n).collect()
    }

    /// Tolerance of the named check.
    ///
    /// # Panics
    /// On a name not in [`DEFAULT_TOLERANCES`]; names are compile-time
    /// constants of the suites.
    pub fn get(&self, name: &str) -> f64 {
        match self.0.get(name) {
            Some(&v) => v,
            None => panic!("no tolerance named {name:?}"),
        }
    }

    /// Apply one override; `all` sets every tolerance.
    pub fn apply(&mut self, o: &TolOverride) -> Result<(), ConfigError> {
        if o.name == "all" {
            self.0.values_mut().for_each(|v| *v = o.value);
            return Ok(());
        }
        match self.0.get_mut(o.name.as_str()) {
            Some(v) => {
                *v = o.value;
                Ok(())
            }
            None => Err(ConfigError::TolName(o.name.clone())),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, f64)> + '_ {
        self.0.iter().map(|(&k, &v)| (k, v))
    }
}

/// One `--tol NAME=VALUE` argument.
#[derive(Debug, Clone, PartialEq)]
pub struct TolOverride {
    pub name: String,
    pub value: f64,
}

impl FromStr for TolOverride {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ConfigError::TolSyntax(s.to_owned());
        let (name, value) = s.split_once('=').ok_or_else(bad)?;
        let value: f64 = value.trim().parse().map_err(|_| bad())?;
        if !(value > 0.0 && value.is_finite()) {
            return Err(bad());
        }
        let name = name.trim();
        if name != "all" && !Tolerances::names().contains(&name) {
            return Err(ConfigError::TolName(name.to_owned()));
        }
        Ok(TolOverride {
            name: name.to_owned(),
            value,
        })
    }
}

/// Everything a subcommand needs.
///
/// Internal units are `hbar = mu = 1`; `a` and `k` are the only physical
/// knobs and `e^2 = 1/a`.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub a: f64,
    pub k: f64,
    pub lam_max: u32,
    pub grid_r: RadialGrid,
    pub n_theta: usize,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub seed: u64,
    pub tolerances: Tolerances,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            a: 1.0,
            k: 1.0,
            lam_max: 3,
            grid_r: RadialGrid::default(),
            n_theta: 36,
            format: Format::Csv,
            out: None,
            seed: 0,
            tolerances: Tolerances::default(),
        }
    }
}

impl RunConfig {
    /// Check the invariants not already enforced by the field types.
    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(self.a > 0.0 && self.a.is_finite()) {
            return Err(ConfigError::Param(format!(
                "--a must be positive and finite, got {}",
                self.a
            )));
        }
        if !(self.k > 0.0 && self.k.is_finite()) {
            return Err(ConfigError::Param(format!(
                "--k must be positive and finite, got {}",
                self.k
            )));
        }
        if self.n_theta < 1 {
            return Err(ConfigError::Param("--grid-theta must be at least 1".into()));
        }
        RadialGrid::new(self.grid_r.r_min, self.grid_r.r_max, self.grid_r.n_r)?;
        Ok(())
    }

    /// Physical parameters in internal units.
    pub fn params(&self) -> Result<PhysParams, ConfigError> {
        PhysParams::natural(self.a, self.k).map_err(|e| ConfigError::Param(e.to_string()))
    }

    /// `key=value` echo of the configuration written into every output.
    pub fn metadata(&self, command: &str) -> Vec<(String, String)> {
        vec![
            ("command".into(), command.into()),
            ("hbar".into(), "1".into()),
            ("mu".into(), "1".into()),
            ("a".into(), self.a.to_string()),
            ("k".into(), self.k.to_string()),
            ("e2".into(), (1.0 / self.a).to_string()),
            ("lam_max".into(), self.lam_max.to_string()),
            ("grid_r".into(), self.grid_r.to_string()),
            ("grid_theta".into(), self.n_theta.to_string()),
            ("seed".into(), self.seed.to_string()),
        ]
    }
}
