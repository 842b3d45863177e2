//! Tables written by `radial-table`, `xsec`, `scatter-field` and
//! `basis-check`.
//!
//! Rows are computed in parallel and collected in grid order, so a table
//! depends only on the configuration.

use std::f64::consts::PI;

use coulomb5_core::hyperspherical::{self, phase_shift, radial_asymptotic, radial_continuum, HyperLabel, HyperPoint};
use coulomb5_core::parabolic::{self, ParaLabel, ParaPoint, SeparationConstant};
use coulomb5_core::scattering::{amplitude, asymptotic_state, cross_section, ScatteringSolution, DEFAULT_THRESHOLD};
use coulomb5_core::{Error as CoreError, HalfInt};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::config::RunConfig;
use crate::suites::parabolic_of;
use crate::Error;

/// One table cell.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Bool(bool),
    Text(String),
    /// Written as an empty CSV field and as JSON `null`.
    Empty,
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Empty, Cell::Num)
    }
}

/// Column names and rows in output order.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Table {
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    /// Index of a column by name.
    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|&c| c == name)
    }
}

fn collect_rows<S, F>(cases: &[S], f: F) -> Result<Vec<Vec<Cell>>, Error>
where
    S: Sync,
    F: Fn(&S) -> Result<Vec<Cell>, CoreError> + Sync + Send,
{
    let rows: Result<Vec<_>, CoreError> = cases.par_iter().map(f).collect();
    Ok(rows?)
}

pub const RADIAL_COLUMNS: [&str; 6] = ["r", "lambda", "R", "R_asymptotic", "abs_diff", "delta_lambda"];

/// `R_k,lam(r)` against its leading asymptotic form on the radial grid, for
/// every `lam <= lam_max`, lambda-major.
pub fn radial_table(cfg: &RunConfig) -> Result<Table, Error> {
    let p = cfg.params()?;
    let cases: Vec<(u32, f64)> = (0..=cfg.lam_max)
        .flat_map(|lam| cfg.grid_r.points().map(move |r| (lam, r)))
        .collect();
    let mut t = Table::new(&RADIAL_COLUMNS);
    t.rows = collect_rows(&cases, |&(lam, r)| {
        let exact = radial_continuum(&p, lam, r)?.re;
        let asym = radial_asymptotic(&p, lam, r)?;
        Ok(vec![
            r.into(),
            Cell::Int(i64::from(lam)),
            exact.into(),
            asym.into(),
            (exact - asym).abs().into(),
            phase_shift(&p, lam)?.into(),
        ])
    })?;
    Ok(t)
}

pub const XSEC_COLUMNS: [&str; 6] = ["theta", "amp_re", "amp_im", "abs_f_sq", "xsec_printed", "ratio"];

/// The amplitude and cross section as quoted, at `theta_i = pi i / n` for
/// `i = 1..=n`; `ratio = |f|^2 / xsec`.
pub fn xsec_table(cfg: &RunConfig) -> Result<Table, Error> {
    let p = cfg.params()?;
    let n = cfg.n_theta;
    let thetas: Vec<f64> = (1..=n)
        .map(|i| if i == n { PI } else { PI * i as f64 / n as f64 })
        .collect();
    let mut t = Table::new(&XSEC_COLUMNS);
    t.rows = collect_rows(&thetas, |&theta| {
        let f = amplitude(&p, theta)?;
        let xs = cross_section(&p, theta)?;
        let f2 = f.norm_sqr();
        Ok(vec![
            theta.into(),
            f.re.into(),
            f.im.into(),
            f2.into(),
            xs.into(),
            (f2 / xs).into(),
        ])
    })?;
    Ok(t)
}

pub const SCATTER_COLUMNS: [&str; 12] = [
    "r",
    "theta",
    "xi",
    "eta",
    "psi_re",
    "psi_im",
    "psi_abs_sq",
    "incident_re",
    "incident_im",
    "scattered_re",
    "scattered_im",
    "split_rel_err",
];

/// The scattering state on the `(r, theta)` grid, `theta_j = pi j / n` for
/// `j = 0..=n`, with its incident/scattered split where `k eta` reaches the
/// asymptotic threshold. On the forward axis (`eta = 0`) the state is the
/// incident wave itself and the split columns carry it alone; elsewhere
/// below the threshold they are empty.
pub fn scatter_field_table(cfg: &RunConfig) -> Result<Table, Error> {
    let p = cfg.params()?;
    let sol = ScatteringSolution::new(&p)?;
    let n = cfg.n_theta;
    let cases: Vec<(f64, f64)> = cfg
        .grid_r
        .points()
        .flat_map(|r| (0..=n).map(move |j| (r, if j == n { PI } else { PI * j as f64 / n as f64 })))
        .collect();
    let mut t = Table::new(&SCATTER_COLUMNS);
    t.rows = collect_rows(&cases, |&(r, theta)| {
        let (xi, eta) = parabolic_of(r, theta);
        let psi = sol.psi(xi, eta)?;
        let mut row: Vec<Cell> = vec![
            r.into(),
            theta.into(),
            xi.into(),
            eta.into(),
            psi.re.into(),
            psi.im.into(),
            psi.norm_sqr().into(),
        ];
        if eta == 0.0 {
            row.extend([psi.re.into(), psi.im.into(), 0.0.into(), 0.0.into(), Cell::Empty]);
        } else if p.k * eta >= DEFAULT_THRESHOLD {
            let d = asymptotic_state(&p, r, theta)?;
            let err = (d.total() - psi).norm() / psi.norm();
            row.extend([
                d.incident.re.into(),
                d.incident.im.into(),
                d.scattered.re.into(),
                d.scattered.im.into(),
                err.into(),
            ]);
        } else {
            row.extend(std::iter::repeat_n(Cell::Empty, 5));
        }
        Ok(row)
    })?;
    Ok(t)
}

pub const HYPERSPHERICAL_CHECK_COLUMNS: [&str; 12] = [
    "lambda",
    "L",
    "m",
    "mp",
    "r",
    "theta",
    "alpha",
    "beta",
    "gamma",
    "residual",
    "tolerance",
    "pass",
];
pub const PARABOLIC_CHECK_COLUMNS: [&str; 12] = [
    "sigma",
    "L",
    "m",
    "mp",
    "xi",
    "eta",
    "alpha",
    "beta",
    "gamma",
    "residual",
    "tolerance",
    "pass",
];

/// Separation constants of the parabolic basis check.
pub const BASIS_CHECK_SIGMAS: [f64; 3] = [-0.5, 0.0, 0.5];

fn half(v: HalfInt) -> Cell {
    Cell::Num(v.value())
}

/// Per-point PDE residuals of the hyperspherical basis (or, with
/// `parabolic`, the parabolic basis) for every label with `2L <= lam_max`:
/// `lam = 0..=lam_max` with `m = L, m' = -L` in the hyperspherical case and
/// `sigma` in [`BASIS_CHECK_SIGMAS`] in the parabolic one. Each label is
/// sampled at `n_r` seeded interior points with radial coordinates drawn
/// from the radial grid's range.
pub fn basis_check_table(cfg: &RunConfig, parabolic: bool) -> Result<(Table, bool), Error> {
    let p = cfg.params()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(if parabolic { 9 } else { 8 });
    let (lo, hi) = (cfg.grid_r.r_min, cfg.grid_r.r_max);
    let (name, columns): (&str, &[&'static str]) = if parabolic {
        ("parabolic_pde", &PARABOLIC_CHECK_COLUMNS)
    } else {
        ("hyperspherical_pde", &HYPERSPHERICAL_CHECK_COLUMNS)
    };
    let tol = cfg.tolerances.get(name);
    let mut t = Table::new(columns);
    let angles = |rng: &mut ChaCha8Rng| {
        (
            rng.gen_range(0.0..6.2),
            rng.gen_range(0.3..2.8),
            rng.gen_range(0.0..12.5),
        )
    };
    if parabolic {
        let mut cases = Vec::new();
        for sigma in BASIS_CHECK_SIGMAS {
            for l in 0..=cfg.lam_max as i32 {
                let l = HalfInt::from_twice(l);
                let sep = SeparationConstant::from_sigma(sigma)?;
                let label = ParaLabel::new(sep, l, l, HalfInt::from_twice(-l.twice()))?;
                for _ in 0..cfg.grid_r.n_r {
                    let (xi, eta) = (rng.gen_range(lo..hi), rng.gen_range(lo..hi));
                    let (a, b, g) = angles(&mut rng);
                    cases.push((label, ParaPoint::new(xi, eta, a, b, g)?));
                }
            }
        }
        t.rows = collect_rows(&cases, |(label, pt)| {
            let res = parabolic::pde_residual(&p, label, pt)?.relative();
            Ok(vec![
                label.sep.sigma().re.into(),
                half(label.l),
                half(label.m),
                half(label.mp),
                pt.xi.into(),
                pt.eta.into(),
                pt.alpha.into(),
                pt.beta.into(),
                pt.gamma.into(),
                res.into(),
                tol.into(),
                Cell::Bool(res <= tol),
            ])
        })?;
    } else {
        let mut cases = Vec::new();
        for lam in 0..=cfg.lam_max {
            for l in 0..=lam as i32 {
                let l = HalfInt::from_twice(l);
                let label = HyperLabel::new(lam, l, l, HalfInt::from_twice(-l.twice()))?;
                for _ in 0..cfg.grid_r.n_r {
                    let (r, theta) = (rng.gen_range(lo..hi), rng.gen_range(0.3..2.8));
                    let (a, b, g) = angles(&mut rng);
                    cases.push((label, HyperPoint::new(r, theta, a, b, g)?));
                }
            }
        }
        t.rows = collect_rows(&cases, |(label, hp)| {
            let res = hyperspherical::pde_residual(&p, label, hp)?.relative();
            Ok(vec![
                Cell::Int(i64::from(label.lam)),
                half(label.l),
                half(label.m),
                half(label.mp),
                hp.r.into(),
                hp.theta.into(),
                hp.alpha.into(),
                hp.beta.into(),
                hp.gamma.into(),
                res.into(),
                tol.into(),
                Cell::Bool(res <= tol),
            ])
        })?;
    }
    let pass = t.rows.iter().all(|row| row.last() == Some(&Cell::Bool(true)));
    Ok((t, pass))
}
