//! Verification suites behind `verify` and `basis-check`.
//!
//! Every check draws its sample points from its own stream of a ChaCha8
//! generator seeded by the run seed, evaluates them in parallel, and keeps
//! the largest residual. Sampling is sequential and results are collected
//! in sample order, so a report depends only on the configuration and the
//! seed, never on the thread count.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use coulomb5_core::hurwitz::{
    commutator_residual, duality_residual, euler_identity_residual, laplacian_identity_residual, DualityParams,
    FnField, Generator, Polynomial, R5Point, R8Point,
};
use coulomb5_core::hyperspherical::{self, basis_at, phase_shift, radial_ode_residual, HyperLabel, HyperPoint};
use coulomb5_core::parabolic::{
    self, phi_ode_residual, separation_identity, Branch, ParaLabel, ParaPoint, SeparationConstant,
};
use coulomb5_core::scattering::{self, asymptotic_state_with, scattering_state, AsymptoticConfig};
use coulomb5_core::special::wrap_phase;
use coulomb5_core::{ComplexScalar as C, HalfInt, PhysParams, Result as CoreResult};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::config::{ConfigError, RunConfig, Tolerances};

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub samples: usize,
    /// Largest residual over the samples; `NaN` if any sample produced a
    /// non-finite residual.
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    /// First evaluation error, in sample order.
    pub error: Option<String>,
}

/// Checks of one suite.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub suite: &'static str,
    pub checks: Vec<Check>,
    /// Not part of any written output, which must be reproducible.
    pub wall_time: Duration,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Evaluate `f` on every sample and compare the largest residual with the
/// named tolerance.
pub fn measure<S, F>(name: &'static str, tol: &Tolerances, samples: &[S], f: F) -> Check
where
    S: Sync,
    F: Fn(&S) -> CoreResult<f64> + Sync + Send,
{
    let results: Vec<CoreResult<f64>> = samples.par_iter().map(&f).collect();
    let mut max = 0.0_f64;
    let mut error = None;
    for r in results {
        match r {
            Ok(v) if v.is_finite() => max = max.max(v),
            Ok(_) => max = f64::NAN,
            Err(e) => {
                error.get_or_insert_with(|| e.to_string());
            }
        }
    }
    let tolerance = tol.get(name);
    Check {
        name,
        samples: samples.len(),
        max_residual: max,
        tolerance,
        pass: error.is_none() && max <= tolerance,
        error,
    }
}

/// Independent stream `stream` of the run's generator.
fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn timed(suite: &'static str, run: impl FnOnce() -> Vec<Check>) -> VerificationReport {
    let start = Instant::now();
    let checks = run();
    VerificationReport {
        suite,
        checks,
        wall_time: start.elapsed(),
    }
}

fn h(twice: i32) -> HalfInt {
    HalfInt::from_twice(twice)
}

/// A point with `|u|` uniform in `[lo, hi]` and uniformly random direction.
fn shell_point(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> R8Point {
    loop {
        let mut u = [0.0; 8];
        u.iter_mut().for_each(|v| *v = rng.gen_range(-1.0..1.0));
        let n = u.iter().map(|v| v * v).sum::<f64>().sqrt();
        if n > 1e-3 && n <= 1.0 {
            let target = rng.gen_range(lo..hi);
            return R8Point::new(u.map(|v| v * target / n));
        }
    }
}

/// Every check of `verify`, grouped by suite.
pub fn cmd_verify(cfg: &RunConfig) -> Result<Vec<VerificationReport>, ConfigError> {
    let p = cfg.params()?;
    Ok(vec![
        hurwitz_suite(cfg, &p),
        hyperspherical_suite(cfg, &p),
        parabolic_suite(cfg, &p),
        scattering_suite(cfg, &p),
    ])
}

/// Number of random points in the Euler-identity sweep.
pub const EULER_SAMPLES: usize = 100_000;

pub fn hurwitz_suite(cfg: &RunConfig, p: &PhysParams) -> VerificationReport {
    let tol = &cfg.tolerances;
    timed("hurwitz", || {
        let mut rng = rng_for(cfg.seed, 1);
        let pts: Vec<R8Point> = (0..EULER_SAMPLES)
            .map(|_| {
                let mut u = [0.0; 8];
                u.iter_mut().for_each(|v| *v = rng.gen_range(-2.0..2.0));
                R8Point::new(u)
            })
            .collect();
        let euler = measure("euler_identity", tol, &pts, |u| {
            let s = u.norm_sq();
            Ok(euler_identity_residual(u) / (s * s).max(1.0))
        });

        // every quadratic monomial, every ordered pair of generators
        let mut rng = rng_for(cfg.seed, 2);
        let pts: Vec<R8Point> = (0..4).map(|_| shell_point(&mut rng, 0.5, 2.0)).collect();
        let mut cases = Vec::new();
        for i in 0..8 {
            for j in i..8 {
                let mut e = [0; 8];
                e[i] += 1;
                e[j] += 1;
                let f = Polynomial::monomial(C::new(1.0, 0.0), e);
                for u in &pts {
                    for a in Generator::ALL {
                        for b in Generator::ALL {
                            cases.push((f.clone(), *u, a, b));
                        }
                    }
                }
            }
        }
        let comm = measure("su2_commutators", tol, &cases, |(f, u, a, b)| {
            commutator_residual(*a, *b, f, u)
        });

        let fields = [
            Polynomial::<5>::coordinate(0),
            Polynomial::<5>::norm_sq(),
            Polynomial::<5>::monomial(C::new(1.0, 0.0), [0, 1, 1, 0, 0]),
        ];
        let mut rng = rng_for(cfg.seed, 3);
        let cases: Vec<(usize, R8Point)> = (0..fields.len())
            .flat_map(|i| {
                (0..100)
                    .map(|_| (i, shell_point(&mut rng, 0.5, 2.0)))
                    .collect::<Vec<_>>()
            })
            .collect();
        let lap = measure("laplacian_identity", tol, &cases, |(i, u)| {
            laplacian_identity_residual(&fields[*i], u)
        });

        // the hyperspherical lam = L = 0 continuum state pulled back to R^8
        let d = DualityParams::from_coulomb(p);
        let label = HyperLabel::scalar(0);
        let psi = FnField(|x: &[f64; 5]| basis_at(p, &label, &R5Point::new(*x)).unwrap_or(C::new(f64::NAN, f64::NAN)));
        let mut rng = rng_for(cfg.seed, 4);
        let pts: Vec<R8Point> = (0..20).map(|_| shell_point(&mut rng, 0.5, 2.0)).collect();
        let dual = measure("duality", tol, &pts, |u| {
            Ok(duality_residual(&psi, &d, HalfInt::ZERO, u)?.relative())
        });

        vec![euler, comm, lap, dual]
    })
}

/// Labels of the hyperspherical PDE check, `(lambda, 2L, 2m, 2m')`.
pub const HYPERSPHERICAL_LABELS: [(u32, i32, i32, i32); 3] = [(0, 0, 0, 0), (1, 0, 0, 0), (2, 2, 2, 0)];

pub fn hyperspherical_suite(cfg: &RunConfig, p: &PhysParams) -> VerificationReport {
    let tol = &cfg.tolerances;
    timed("hyperspherical", || {
        let lams: Vec<u32> = (0..=cfg.lam_max.max(10)).collect();
        let rec = measure("phase_recurrence", tol, &lams, |&lam| {
            let d0 = phase_shift(p, lam)?;
            let d1 = phase_shift(p, lam + 1)?;
            let want = -(1.0 / (p.a * p.k * (f64::from(lam) + 2.0))).atan();
            Ok(wrap_phase(d1 - d0 - want).abs())
        });

        let cases: Vec<(u32, f64)> = (0..=cfg.lam_max)
            .flat_map(|lam| cfg.grid_r.points().map(move |r| (lam, r)))
            .collect();
        let ode = measure("radial_ode", tol, &cases, |&(lam, r)| {
            Ok(radial_ode_residual(p, lam, r)?.relative())
        });

        let mut rng = rng_for(cfg.seed, 5);
        let mut cases = Vec::new();
        for &(lam, l, m, mp) in &HYPERSPHERICAL_LABELS {
            let label = HyperLabel::new(lam, h(l), h(m), h(mp)).expect("valid label");
            for _ in 0..50 {
                cases.push((label, interior_hyper_point(&mut rng, p.k)));
            }
        }
        let pde = measure("hyperspherical_pde", tol, &cases, |(label, hp)| {
            Ok(hyperspherical::pde_residual(p, label, hp)?.relative())
        });
        vec![rec, ode, pde]
    })
}

fn interior_hyper_point(rng: &mut ChaCha8Rng, k: f64) -> HyperPoint {
    HyperPoint::new(
        rng.gen_range(0.5..8.0) / k,
        rng.gen_range(0.3..2.8),
        rng.gen_range(0.0..6.2),
        rng.gen_range(0.3..2.8),
        rng.gen_range(0.0..12.5),
    )
    .expect("interior point")
}

fn interior_para_point(rng: &mut ChaCha8Rng, k: f64) -> ParaPoint {
    ParaPoint::new(
        rng.gen_range(0.3..10.0) / k,
        rng.gen_range(0.3..10.0) / k,
        rng.gen_range(0.0..6.2),
        rng.gen_range(0.3..2.8),
        rng.gen_range(0.0..12.5),
    )
    .expect("interior point")
}

/// Labels of the parabolic checks, `(sigma, 2L, 2m, 2m')`.
pub const PARABOLIC_LABELS: [(f64, i32, i32, i32); 4] =
    [(0.0, 0, 0, 0), (0.6, 0, 0, 0), (0.5, 2, 2, -2), (-0.9, 2, 0, 2)];

pub fn parabolic_suite(cfg: &RunConfig, p: &PhysParams) -> VerificationReport {
    let tol = &cfg.tolerances;
    timed("parabolic", || {
        let mut cases = Vec::new();
        for l in [0, 2] {
            for sigma in [-1.0, 0.0, 0.7] {
                for branch in [Branch::Xi, Branch::Eta] {
                    for x in [0.3, 1.0, 4.0, 12.0, 35.0] {
                        cases.push((l, sigma, branch, x / p.k));
                    }
                }
            }
        }
        let ode = measure("parabolic_ode", tol, &cases, |&(l, sigma, branch, x)| {
            let s = SeparationConstant::from_sigma(sigma)?;
            Ok(phi_ode_residual(p, &s, h(l), branch, x)?.relative())
        });

        let mut rng = rng_for(cfg.seed, 6);
        let mut cases = Vec::new();
        for &(sigma, l, m, mp) in &PARABOLIC_LABELS {
            let label = ParaLabel::new(
                SeparationConstant::from_sigma(sigma).expect("real sigma"),
                h(l),
                h(m),
                h(mp),
            )
            .expect("valid label");
            for _ in 0..20 {
                cases.push((label, interior_para_point(&mut rng, p.k)));
            }
        }
        let pde = measure("parabolic_pde", tol, &cases, |(label, pt)| {
            Ok(parabolic::pde_residual(p, label, pt)?.relative())
        });

        // the identity is algebraic: trial functions that solve nothing
        let phi1 = |x: f64| C::new(x * x * (-0.3 * x).exp(), 0.2 * x.sin());
        let phi2 = |x: f64| C::new(1.0 / (1.0 + x), x.cos());
        let sep = measure("separation_identity", tol, &cases, |(label, pt)| {
            let sigma = label.sep.sigma().re;
            Ok(separation_identity(p, sigma, label.l, label.m, label.mp, phi1, phi2, pt)?.relative())
        });
        vec![ode, pde, sep]
    })
}

/// `ak` of the free-particle limit check: `a = 1e6` at `k = 1`.
pub const FREE_LIMIT_AK: f64 = 1e6;

pub fn scattering_suite(cfg: &RunConfig, p: &PhysParams) -> VerificationReport {
    let tol = &cfg.tolerances;
    timed("scattering", || {
        let mut rng = rng_for(cfg.seed, 7);
        let pts: Vec<(f64, f64)> = (0..50)
            .map(|_| (rng.gen_range(0.2..30.0) / p.k, rng.gen_range(0.2..30.0) / p.k))
            .collect();
        let pde = measure("scattering_pde", tol, &pts, |&(xi, eta)| {
            Ok(scattering::pde_residual(p, xi, eta)?.relative())
        });

        let q = PhysParams::natural(FREE_LIMIT_AK / p.k, p.k).expect("k already validated");
        let grid: Vec<(f64, f64)> = (0..20)
            .flat_map(|i| (0..20).map(move |j| ((0.5 + 2.5 * f64::from(i)) / p.k, (0.5 + 2.5 * f64::from(j)) / p.k)))
            .collect();
        let lim = measure("free_limit", tol, &grid, |&(xi, eta)| {
            let psi = scattering_state(&q, xi, eta)?;
            Ok((psi - C::new(0.0, 0.5 * q.k * (xi - eta)).exp()).norm())
        });

        let split = measure("asymptotic_split", tol, &[(400.0 / p.k, PI / 2.0)], |&(r, theta)| {
            split_error(p, r, theta)
        });
        vec![pde, lim, split]
    })
}

/// `|incident + scattered - psi| / |psi|` with the default decomposition.
pub fn split_error(p: &PhysParams, r: f64, theta: f64) -> CoreResult<f64> {
    split_error_with(p, r, theta, &AsymptoticConfig::default())
}

pub fn split_error_with(p: &PhysParams, r: f64, theta: f64, cfg: &AsymptoticConfig) -> CoreResult<f64> {
    let d = asymptotic_state_with(p, r, theta, cfg)?;
    let (xi, eta) = parabolic_of(r, theta);
    let psi = scattering_state(p, xi, eta)?;
    Ok((d.total() - psi).norm() / psi.norm())
}

/// `(xi, eta)` at distance `r` and polar angle `theta` from the `x0` axis.
pub fn parabolic_of(r: f64, theta: f64) -> (f64, f64) {
    let (s, c) = ((0.5 * theta).sin(), (0.5 * theta).cos());
    (2.0 * r * c * c, 2.0 * r * s * s)
}
