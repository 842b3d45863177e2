//! Complex log-gamma on the principal branch.
//!
//! The argument is shifted to `Re z >= 15` with the recurrence
//! `ln G(z) = ln G(z + n) - sum_j ln(z + j)` (principal logs, which keeps the
//! result on the branch that is analytic off the negative real axis) and the
//! Stirling series is summed there.

use crate::{ComplexScalar as C, Error, Result};
use core::f64::consts::PI;
#[cfg(not(feature = "std"))]
use num_traits::Float;

const SHIFT_TO: f64 = 15.0;
const MIN_RE: f64 = -1e5;
const POLE_TOL: f64 = 1e-14;
const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

// B_{2k} / (2k (2k-1)), k = 1..8
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

fn is_pole(z: C) -> bool {
    z.re <= POLE_TOL && z.im.abs() <= POLE_TOL && (z.re - z.re.round()).abs() <= POLE_TOL
}

fn stirling(z: C) -> C {
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut corr = C::new(0.0, 0.0);
    let mut pow = inv;
    for c in STIRLING {
        corr += pow * c;
        pow *= inv2;
    }
    (z - 0.5) * z.ln() - z + HALF_LN_2PI + corr
}

/// Principal-branch `ln Gamma(z)`.
pub fn log_gamma(z: C) -> Result<C> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain("log_gamma of a non-finite argument"));
    }
    if is_pole(z) {
        return Err(Error::Pole { re: z.re, im: z.im });
    }
    if z.re < MIN_RE {
        return Err(Error::Domain("log_gamma: real part below -1e5"));
    }
    let mut shifted = z;
    let mut logs = C::new(0.0, 0.0);
    while shifted.re < SHIFT_TO {
        logs += shifted.ln();
        shifted += 1.0;
    }
    Ok(stirling(shifted) - logs)
}

/// `Gamma(z)`.
pub fn gamma(z: C) -> Result<C> {
    log_gamma(z).map(|l| l.exp())
}

/// `1 / Gamma(z)`, which is entire: zero at the poles of `Gamma`.
pub fn rgamma(z: C) -> Result<C> {
    match log_gamma(z) {
        Ok(l) => Ok((-l).exp()),
        Err(Error::Pole { .. }) => Ok(C::new(0.0, 0.0)),
        Err(e) => Err(e),
    }
}

/// `ln Gamma(x)` for real `x > 0`.
pub fn ln_gamma_real(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain("ln_gamma_real requires x > 0"));
    }
    log_gamma(C::new(x, 0.0)).map(|l| l.re)
}

/// `ln n!`
pub fn ln_factorial(n: u32) -> f64 {
    if n < 2 {
        return 0.0;
    }
    // n + 1 >= 3 is never a pole
    log_gamma(C::new(f64::from(n) + 1.0, 0.0)).map_or(f64::NAN, |l| l.re)
}

/// `arg Gamma(z)` reduced to `(-pi, pi]`.
pub fn arg_gamma(z: C) -> Result<f64> {
    log_gamma(z).map(|l| wrap_phase(l.im))
}

/// Reduce an angle to `(-pi, pi]`.
pub fn wrap_phase(phi: f64) -> f64 {
    let two_pi = 2.0 * PI;
    let mut w = phi % two_pi;
    if w <= -PI {
        w += two_pi;
    } else if w > PI {
        w -= two_pi;
    }
    w
}
