//! Kummer's confluent hypergeometric function `F(a; c; z) = 1F1(a; c; z)`
//! and the asymptotic series `G(a; c; z)`.
//!
//! Two evaluation routes:
//!
//! * the power series, summed in double-double arithmetic so that the
//!   `e^|z|`-sized cancellation on the imaginary axis does not eat the
//!   result,
//! * the large-`|z|` representation
//!   `F = G(c)/G(c-a) (-z)^-a G(a; a-c+1; -z) + G(c)/G(a) e^z z^(a-c) G(c-a; 1-a; z)`
//!   with each `G` series cut at its smallest term.
//!
//! [`kummer_f`] uses the series up to `|z| = 30` and the asymptotic form
//! beyond, falling back to the series whenever the asymptotic error estimate
//! misses the target.

use super::dd::{CDd, Dd, EPS as DD_EPS};
use super::gamma::log_gamma;
use crate::{ComplexScalar as C, Error, Result};
#[cfg(not(feature = "std"))]
use num_traits::Float;

/// A function value with its estimated absolute error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AccuracyReport {
    pub value: C,
    pub est_abs_error: f64,
    pub terms_used: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KummerConfig {
    /// `|z|` above which the asymptotic representation is tried first.
    pub switch_radius: f64,
    /// Term cap for either series.
    pub max_terms: usize,
    /// Target relative error.
    pub rel_tol: f64,
}

impl Default for KummerConfig {
    fn default() -> Self {
        KummerConfig {
            switch_radius: 30.0,
            max_terms: 500,
            rel_tol: 1e-11,
        }
    }
}

const F64_EPS: f64 = f64::EPSILON;

fn is_nonpositive_integer(z: C) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

/// `F(a; c; z)` with the default configuration.
pub fn kummer_f(a: C, c: C, z: C) -> Result<AccuracyReport> {
    kummer_f_with(a, c, z, &KummerConfig::default())
}

/// `F(a; c; z)`.
///
/// The relative-error target is measured against `max(|F|, s)` where `s` is
/// the magnitude of the terms that cancel to produce `F` (the two asymptotic
/// contributions, or the double-precision rounding floor of the power
/// series). Away from zeros of `F` that is a plain relative error.
pub fn kummer_f_with(a: C, c: C, z: C, cfg: &KummerConfig) -> Result<AccuracyReport> {
    if is_nonpositive_integer(c) {
        return Err(Error::Pole { re: c.re, im: c.im });
    }
    if !(a.re.is_finite() && a.im.is_finite() && z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain("kummer_f of a non-finite argument"));
    }
    if z == C::new(0.0, 0.0) || a == C::new(0.0, 0.0) {
        return Ok(AccuracyReport {
            value: C::new(1.0, 0.0),
            est_abs_error: 0.0,
            terms_used: 0,
        });
    }

    if z.norm() <= cfg.switch_radius {
        let (rep, scale) = series_dd(a, c, z, cfg.max_terms)?;
        return accept(rep, scale, cfg.rel_tol);
    }

    let (asym, asym_scale) = asymptotic(a, c, z, cfg.max_terms)?;
    if asym.est_abs_error <= cfg.rel_tol * asym_scale {
        return Ok(asym);
    }
    match series_dd(a, c, z, cfg.max_terms) {
        Ok((ser, ser_scale)) if ser.est_abs_error < asym.est_abs_error => accept(ser, ser_scale, cfg.rel_tol),
        _ => accept(asym, asym_scale, cfg.rel_tol),
    }
}

fn accept(rep: AccuracyReport, scale: f64, rel_tol: f64) -> Result<AccuracyReport> {
    if rep.est_abs_error <= rel_tol * scale {
        Ok(rep)
    } else {
        Err(Error::NonConvergence {
            est_error: rep.est_abs_error / scale,
            terms: rep.terms_used,
        })
    }
}

/// Power series only (no method switching).
pub fn kummer_series(a: C, c: C, z: C, max_terms: usize) -> Result<AccuracyReport> {
    if is_nonpositive_integer(c) {
        return Err(Error::Pole { re: c.re, im: c.im });
    }
    series_dd(a, c, z, max_terms).map(|(r, _)| r)
}

/// Asymptotic representation only (no method switching).
pub fn kummer_asymptotic(a: C, c: C, z: C, max_terms: usize) -> Result<AccuracyReport> {
    if is_nonpositive_integer(c) {
        return Err(Error::Pole { re: c.re, im: c.im });
    }
    if z == C::new(0.0, 0.0) {
        return Err(Error::Domain("asymptotic representation needs z != 0"));
    }
    asymptotic(a, c, z, max_terms).map(|(r, _)| r)
}

fn series_dd(a: C, c: C, z: C, max_terms: usize) -> Result<(AccuracyReport, f64)> {
    let a_dd = CDd::from_c64(a);
    let c_dd = CDd::from_c64(c);
    let z_dd = CDd::from_c64(z);
    let zn = z.norm();

    let mut sum = CDd::ONE;
    let mut term = CDd::ONE;
    let mut abs_sum = 1.0;
    let mut tail = 0.0;
    let mut n = 0usize;
    let mut converged = false;
    while n < max_terms {
        let nf = n as f64;
        let num = a_dd.add_real(nf) * z_dd;
        let den = c_dd.add_real(nf).scale(Dd::from_f64(nf + 1.0));
        term = term * num / den;
        sum = sum + term;
        n += 1;
        let tn = term.norm();
        abs_sum += tn;
        if tn == 0.0 {
            // a is a non-positive integer: the series terminated
            tail = 0.0;
            converged = true;
            break;
        }
        let ratio = (a + n as f64).norm() * zn / ((c + n as f64).norm() * (n as f64 + 1.0));
        if ratio < 0.5 {
            tail = tn * ratio / (1.0 - ratio);
            let floor = (1e-18 * sum.norm()).max(DD_EPS * abs_sum);
            if tail <= floor {
                converged = true;
                break;
            }
        }
    }
    let value = sum.to_c64();
    let est = 4.0 * DD_EPS * abs_sum * (n as f64 + 1.0) + tail + F64_EPS * value.norm();
    let rep = AccuracyReport {
        value,
        est_abs_error: est,
        terms_used: n,
    };
    if !converged {
        return Err(Error::NonConvergence {
            est_error: est,
            terms: n,
        });
    }
    let scale = value.norm().max(F64_EPS * abs_sum);
    Ok((rep, scale))
}

/// One optimally truncated `G` sum: `(value, error estimate, terms)`.
fn g_optimal_raw(a: C, c: C, z: C, max_terms: usize) -> (C, f64, usize) {
    let mut sum = C::new(0.0, 0.0);
    let mut term = C::new(1.0, 0.0);
    let mut n = 0usize;
    loop {
        let nf = n as f64;
        let next = term * (a + nf) * (c + nf) / (z * (nf + 1.0));
        if next.norm() == 0.0 {
            sum += term;
            return (sum, F64_EPS * sum.norm(), n + 1);
        }
        if n > 0 && next.norm() >= term.norm() {
            // `term` is the smallest; it is the first omitted one.
            return (sum, term.norm(), n);
        }
        sum += term;
        if next.norm() <= F64_EPS * sum.norm() {
            return (sum, next.norm() + F64_EPS * sum.norm(), n + 1);
        }
        term = next;
        n += 1;
        if n >= max_terms {
            return (sum, term.norm(), n);
        }
    }
}

fn asymptotic(a: C, c: C, z: C, max_terms: usize) -> Result<(AccuracyReport, f64)> {
    let ln_gc = log_gamma(c)?;
    let mut value = C::new(0.0, 0.0);
    let mut err = 0.0;
    let mut scale = 0.0;
    let mut terms = 0;

    // G(c)/G(c-a) (-z)^-a G(a; a-c+1; -z)
    match log_gamma(c - a) {
        Ok(ln_gca) => {
            let expo = ln_gc - ln_gca - a * (-z).ln();
            let pre = expo.exp();
            let (g, g_err, n) = g_optimal_raw(a, a - c + 1.0, -z, max_terms);
            let t = pre * g;
            let round = 4.0 * F64_EPS * (ln_gc.norm() + ln_gca.norm() + (a * (-z).ln()).norm() + 1.0);
            value += t;
            err += pre.norm() * g_err + round * t.norm();
            scale += t.norm();
            terms += n;
        }
        Err(Error::Pole { .. }) => {}
        Err(e) => return Err(e),
    }

    // G(c)/G(a) e^z z^(a-c) G(c-a; 1-a; z)
    match log_gamma(a) {
        Ok(ln_ga) => {
            let expo = ln_gc - ln_ga + z + (a - c) * z.ln();
            let pre = expo.exp();
            let (g, g_err, n) = g_optimal_raw(c - a, C::new(1.0, 0.0) - a, z, max_terms);
            let t = pre * g;
            let round = 4.0 * F64_EPS * (ln_gc.norm() + ln_ga.norm() + z.norm() + ((a - c) * z.ln()).norm() + 1.0);
            value += t;
            err += pre.norm() * g_err + round * t.norm();
            scale += t.norm();
            terms += n;
        }
        Err(Error::Pole { .. }) => {}
        Err(e) => return Err(e),
    }

    let rep = AccuracyReport {
        value,
        est_abs_error: err,
        terms_used: terms,
    };
    Ok((rep, scale.max(value.norm())))
}

/// `G(a; c; z)` truncated after `n_terms` corrections: `sum_{n=0}^{n_terms}
/// (a)_n (c)_n / (n! z^n)`.
pub fn kummer_g_asymptotic(a: C, c: C, z: C, n_terms: usize) -> C {
    let mut sum = C::new(1.0, 0.0);
    let mut term = C::new(1.0, 0.0);
    for n in 0..n_terms {
        let nf = n as f64;
        term = term * (a + nf) * (c + nf) / (z * (nf + 1.0));
        sum += term;
    }
    sum
}

/// `G(a; c; z)` cut at its smallest term.
///
/// Fails with [`Error::Divergent`] when the terms start growing before the
/// smallest one drops below `rel_tol * |G|`.
pub fn kummer_g_optimal(a: C, c: C, z: C, rel_tol: f64, max_terms: usize) -> Result<AccuracyReport> {
    if z == C::new(0.0, 0.0) {
        return Err(Error::Domain("asymptotic series needs z != 0"));
    }
    let (value, err, n) = g_optimal_raw(a, c, z, max_terms);
    if err > rel_tol * value.norm() {
        return Err(Error::Divergent {
            smallest_term: err,
            terms: n,
        });
    }
    Ok(AccuracyReport {
        value,
        est_abs_error: err,
        terms_used: n,
    })
}
