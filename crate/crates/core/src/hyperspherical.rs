//! Hyperspherical coordinates on `R^5` and the continuum basis
//! `psi = sqrt((2L+1)/(2 pi^2)) R_k,lam(r) Z_lam,L(theta) D^L_mm'(alpha, beta, gamma)`.
//!
//! Coordinates:
//!
//! ```text
//! x0        = r cos(theta)
//! x2 + i x1 = r sin(theta) sin(beta/2) exp(i (alpha - gamma)/2)
//! x4 + i x3 = r sin(theta) cos(beta/2) exp(i (alpha + gamma)/2)
//! ```
//!
//! with `theta, beta` in `[0, pi]`, `alpha` in `[0, 2 pi)` and `gamma` in
//! `[0, 4 pi)`. The volume element is `r^4/8 sin^3(theta) sin(beta)`.

#[cfg(not(feature = "std"))]
use num_traits::Float;

use core::f64::consts::{FRAC_PI_2, LN_2, PI};

use crate::hurwitz::R5Point;
use crate::numdiff::{self, STEP_FIRST, STEP_SECOND};
use crate::special::{arg_gamma, gegenbauer, kummer_f, ln_factorial, ln_gamma_real, log_gamma, wigner_d, wrap_phase};
use crate::{ComplexScalar as C, Error, HalfInt, PhysParams, Residual, Result};

const TWO_PI: f64 = 2.0 * PI;
const FOUR_PI: f64 = 4.0 * PI;

/// A point in hyperspherical coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperPoint {
    pub r: f64,
    pub theta: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl HyperPoint {
    /// Checks the coordinate ranges.
    pub fn new(r: f64, theta: f64, alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        if !(r >= 0.0 && r.is_finite()) {
            return Err(Error::Domain("r must be finite and non-negative"));
        }
        if !(0.0..=PI).contains(&theta) || !(0.0..=PI).contains(&beta) {
            return Err(Error::Domain("theta and beta must lie in [0, pi]"));
        }
        if !(0.0..TWO_PI).contains(&alpha) || !(0.0..FOUR_PI).contains(&gamma) {
            return Err(Error::Domain("alpha must lie in [0, 2 pi) and gamma in [0, 4 pi)"));
        }
        Ok(HyperPoint {
            r,
            theta,
            alpha,
            beta,
            gamma,
        })
    }
}

/// Quantum numbers `(lambda, L, m, m')` of the hyperspherical basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HyperLabel {
    pub lam: u32,
    pub l: HalfInt,
    pub m: HalfInt,
    pub mp: HalfInt,
}

impl HyperLabel {
    /// `lambda = 2L, 2L+1, ...`, `|m|, |m'| <= L` with `m, m'` in the
    /// integrality class of `L`.
    pub fn new(lam: u32, l: HalfInt, m: HalfInt, mp: HalfInt) -> Result<Self> {
        check_lam_l(lam, l)?;
        if m.abs() > l || mp.abs() > l {
            return Err(Error::Label("|m| and |m'| must not exceed L"));
        }
        if !l.same_class(m) || !l.same_class(mp) {
            return Err(Error::Label("m and m' must share the integrality of L"));
        }
        Ok(HyperLabel { lam, l, m, mp })
    }

    /// `L = m = m' = 0`.
    pub fn scalar(lam: u32) -> Self {
        HyperLabel {
            lam,
            l: HalfInt::ZERO,
            m: HalfInt::ZERO,
            mp: HalfInt::ZERO,
        }
    }
}

fn check_lam_l(lam: u32, l: HalfInt) -> Result<()> {
    if l.twice() < 0 {
        return Err(Error::Label("L must be non-negative"));
    }
    if i64::from(lam) < i64::from(l.twice()) {
        return Err(Error::Label("lambda must be at least 2L"));
    }
    Ok(())
}

// ------------------------------------------------------------ coordinates

pub fn from_hyperspherical(h: &HyperPoint) -> R5Point {
    let (st, ct) = h.theta.sin_cos();
    let (sb, cb) = (0.5 * h.beta).sin_cos();
    let rho = h.r * st;
    let (s1, c1) = (0.5 * (h.alpha - h.gamma)).sin_cos();
    let (s2, c2) = (0.5 * (h.alpha + h.gamma)).sin_cos();
    R5Point::new([h.r * ct, rho * sb * s1, rho * sb * c1, rho * cb * s2, rho * cb * c2])
}

/// Inverse of [`from_hyperspherical`].
///
/// Fails with [`Error::Origin`] at `x = 0` and with
/// [`Error::SingularLocus`] on the `x0` axis, where the Euler angles are
/// undefined. Where only `beta` is degenerate (`sin beta = 0`) the
/// undetermined angle combination is set to zero.
pub fn to_hyperspherical(x: &R5Point) -> Result<HyperPoint> {
    let r = x.r();
    if r == 0.0 {
        return Err(Error::Origin);
    }
    let w21 = C::new(x.x[2], x.x[1]);
    let w43 = C::new(x.x[4], x.x[3]);
    let rho = w21.norm().hypot(w43.norm());
    let theta = rho.atan2(x.x[0]);
    if rho <= f64::EPSILON * r {
        return Err(Error::SingularLocus { r, theta });
    }
    let (alpha, beta, gamma) = euler_angles(w21, w43);
    Ok(HyperPoint {
        r,
        theta,
        alpha,
        beta,
        gamma,
    })
}

/// Euler angles from `w21 = x2 + i x1` and `w43 = x4 + i x3`, which are
/// proportional to `sin(beta/2) e^{i(alpha-gamma)/2}` and
/// `cos(beta/2) e^{i(alpha+gamma)/2}` with a common positive factor.
pub(crate) fn euler_angles(w21: C, w43: C) -> (f64, f64, f64) {
    let beta = 2.0 * w21.norm().atan2(w43.norm());
    let phi1 = if w21.norm() == 0.0 { 0.0 } else { w21.arg() };
    let phi2 = if w43.norm() == 0.0 { 0.0 } else { w43.arg() };
    // alpha - gamma = 2 phi1 (mod 4 pi), alpha + gamma = 2 phi2 (mod 4 pi);
    // shifting both by the same multiple of 2 pi keeps both relations.
    let sum = phi1 + phi2;
    let n = (sum / TWO_PI).floor();
    let alpha = sum - n * TWO_PI;
    let gamma = (phi2 - phi1 - n * TWO_PI) % FOUR_PI;
    let gamma = if gamma < 0.0 { gamma + FOUR_PI } else { gamma };
    (
        if alpha >= TWO_PI { 0.0 } else { alpha },
        beta,
        if gamma >= FOUR_PI { 0.0 } else { gamma },
    )
}

/// `dV = r^4/8 sin^3(theta) sin(beta) dr dtheta dalpha dbeta dgamma`.
pub fn volume_element(h: &HyperPoint) -> f64 {
    h.r.powi(4) / 8.0 * h.theta.sin().powi(3) * h.beta.sin()
}

// ------------------------------------------------------------- Z function

/// `ln` of the constant in front of `sin^(2L) C^(2L+3/2)_(lam-2L)(cos theta)`.
fn ln_z_constant(lam: u32, l: HalfInt) -> Result<f64> {
    let two_l = l.twice() as u32;
    let n = lam - two_l;
    let g = ln_gamma_real(f64::from(two_l) + 1.5)?;
    Ok(f64::from(two_l + 1) * LN_2
        + g
        + 0.5 * ((2.0 * f64::from(lam) + 3.0).ln() + ln_factorial(n) - (TWO_PI).ln() - ln_factorial(lam + two_l + 2)))
}

/// `Z_lam,L(theta)`, normalised so that `int_0^pi Z^2 sin^3 = 1`.
pub fn z_function(lam: u32, l: HalfInt, theta: f64) -> Result<f64> {
    check_lam_l(lam, l)?;
    let two_l = l.twice();
    let n = lam - two_l as u32;
    let c = gegenbauer(n, f64::from(two_l) + 1.5, theta.cos());
    Ok(ln_z_constant(lam, l)?.exp() * theta.sin().powi(two_l) * c)
}

// ------------------------------------------------------- radial functions

/// `R_k,lam(r)`.
///
/// ```text
/// R = C (2ikr)^lam / (2 lam + 3)! e^{-ikr} F(lam + 2 + i eta; 2 lam + 4; 2ikr),
/// C = (-i)^lam 4 k^2 e^{pi eta / 2} |Gamma(lam + 2 - i eta)|,   eta = 1/(a k).
/// ```
///
/// The phases `(-i)^lam (2i)^lam = 2^lam` cancel exactly, and the moduli
/// are combined in log space. The result is real up to rounding; its
/// imaginary part is returned rather than discarded.
pub fn radial_continuum(p: &PhysParams, lam: u32, r: f64) -> Result<C> {
    if !(r >= 0.0 && r.is_finite()) {
        return Err(Error::Domain("r must be finite and non-negative"));
    }
    let k = p.k;
    let eta = p.coulomb_strength();
    let l = f64::from(lam);
    let ln_gamma_mod = log_gamma(C::new(l + 2.0, -eta))?.re;
    let ln_pref = 2.0 * LN_2 + 2.0 * k.ln() + FRAC_PI_2 * eta + ln_gamma_mod - ln_factorial(2 * lam + 3);
    if r == 0.0 {
        return Ok(if lam == 0 {
            C::new(ln_pref.exp(), 0.0)
        } else {
            C::new(0.0, 0.0)
        });
    }
    let kr = k * r;
    let ln_mod = ln_pref + l * (2.0 * kr).ln();
    let f = kummer_f(C::new(l + 2.0, eta), C::new(2.0 * l + 4.0, 0.0), C::new(0.0, 2.0 * kr))?;
    Ok(C::new(0.0, -kr).exp() * f.value * ln_mod.exp())
}

/// Leading large-`r` form `(2/r^2) sin(kr + eta ln(2kr) - pi(lam+1)/2 + delta_lam)`.
pub fn radial_asymptotic(p: &PhysParams, lam: u32, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::Domain("asymptotic form needs r > 0"));
    }
    let kr = p.k * r;
    let phase = kr + p.coulomb_strength() * (2.0 * kr).ln() - FRAC_PI_2 * (f64::from(lam) + 1.0) + phase_shift(p, lam)?;
    Ok(2.0 / (r * r) * phase.sin())
}

/// Large-`r` expansion with `n_terms` corrections of the asymptotic series,
///
/// ```text
/// R ~ (2/r^2) Re{ exp(-i Phi) G(lam + 2 + i eta; i eta - lam - 1; -2ikr) },
/// Phi = kr + eta ln(2kr) + delta_lam - pi (lam + 2)/2,
/// ```
///
/// which is the outgoing and incoming pair of the two-sided large-argument
/// representation of `F`. With `n_terms = 0` it is [`radial_asymptotic`];
/// each further term lowers the error by one power of `1/(kr)` until the
/// series reaches its smallest term.
pub fn radial_asymptotic_series(p: &PhysParams, lam: u32, r: f64, n_terms: usize) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::Domain("asymptotic form needs r > 0"));
    }
    let kr = p.k * r;
    let eta = p.coulomb_strength();
    let l = f64::from(lam);
    let phase = kr + eta * (2.0 * kr).ln() + phase_shift(p, lam)? - FRAC_PI_2 * (l + 2.0);
    let g = crate::special::kummer_g_asymptotic(
        C::new(l + 2.0, eta),
        C::new(-l - 1.0, eta),
        C::new(0.0, -2.0 * kr),
        n_terms,
    );
    Ok(2.0 / (r * r) * (C::new(0.0, -phase).exp() * g).re)
}

/// Coulomb phase shift `delta_lam = arg Gamma(lam + 2 - i/(ak))`, principal
/// value in `(-pi, pi]`.
pub fn phase_shift(p: &PhysParams, lam: u32) -> Result<f64> {
    let eta = p.coulomb_strength();
    if eta == 0.0 {
        return Ok(0.0);
    }
    Ok(wrap_phase(arg_gamma(C::new(f64::from(lam) + 2.0, -eta))?))
}

/// Residual of `R'' + 4R'/r + [k^2 + 2/(a r) - lam(lam+3)/r^2] R = 0` with
/// finite-difference derivatives.
pub fn radial_ode_residual(p: &PhysParams, lam: u32, r: f64) -> Result<Residual> {
    if !(r > 0.0) {
        return Err(Error::Domain("radial equation is checked at r > 0"));
    }
    let h = fd_step_radial(p, r);
    let f = |t: f64| radial_continuum(p, lam, t).unwrap_or(C::new(f64::NAN, f64::NAN));
    let d1 = numdiff::first(f, r, h * STEP_FIRST / STEP_SECOND).value;
    let d2 = numdiff::second(f, r, h).value;
    let v = f(r);
    if !(v.re.is_finite() && d1.re.is_finite() && d2.re.is_finite()) {
        // surface the underlying error
        radial_continuum(p, lam, r)?;
    }
    let l = f64::from(lam);
    Ok(Residual::from_terms(&[
        d2,
        d1 * (4.0 / r),
        v * (p.k * p.k),
        v * (2.0 / (p.a * r)),
        -v * (l * (l + 3.0) / (r * r)),
    ]))
}

/// Step for `r`-derivatives: a fixed fraction of `r`, capped at `k h = 0.05`.
///
/// Beyond the cap the function oscillates on the scale `1/k`, and after
/// extrapolation the truncation error at `k h = 0.05` is below `1e-10`
/// relative; a smaller step only amplifies rounding in the function values.
fn fd_step_radial(p: &PhysParams, r: f64) -> f64 {
    STEP_SECOND * r.min(25.0 / p.k)
}

// -------------------------------------------------------------- the basis

/// `sqrt((2L+1)/(2 pi^2)) Z_lam,L(theta) D^L_mm'(alpha, beta, gamma)`.
pub fn angular_function(label: &HyperLabel, theta: f64, alpha: f64, beta: f64, gamma: f64) -> Result<C> {
    let norm = ((f64::from(label.l.twice()) + 1.0) / (2.0 * PI * PI)).sqrt();
    let z = z_function(label.lam, label.l, theta)?;
    let d = wigner_d(label.l, label.m, label.mp, alpha, beta, gamma)?;
    Ok(d * (norm * z))
}

/// `psi_k,lam,L,m,m'` at a hyperspherical point.
pub fn basis_function(p: &PhysParams, label: &HyperLabel, h: &HyperPoint) -> Result<C> {
    let y = angular_function(label, h.theta, h.alpha, h.beta, h.gamma)?;
    Ok(radial_continuum(p, label.lam, h.r)? * y)
}

/// `psi_k,lam,L,m,m'` at a Cartesian point.
///
/// On the `x0` axis and at the origin the Euler angles are undefined; the
/// value is the continuous limit when `L = 0` (the only sector without
/// angle dependence) and [`Error::SingularLocus`] otherwise.
pub fn basis_at(p: &PhysParams, label: &HyperLabel, x: &R5Point) -> Result<C> {
    match to_hyperspherical(x) {
        Ok(h) => basis_function(p, label, &h),
        Err(Error::SingularLocus { r, theta }) if label.l == HalfInt::ZERO => basis_function(
            p,
            label,
            &HyperPoint {
                r,
                theta,
                alpha: 0.0,
                beta: 0.0,
                gamma: 0.0,
            },
        ),
        Err(Error::Origin) if label.l == HalfInt::ZERO => basis_function(
            p,
            label,
            &HyperPoint {
                r: 0.0,
                theta: 0.0,
                alpha: 0.0,
                beta: 0.0,
                gamma: 0.0,
            },
        ),
        Err(Error::Origin) => Err(Error::SingularLocus { r: 0.0, theta: 0.0 }),
        Err(e) => Err(e),
    }
}

/// Residual of `-hbar^2/(2 mu) Delta_5 psi - e^2/r psi - eps psi = 0` for a
/// basis function at an interior point, with the Laplacian in
/// hyperspherical form
///
/// ```text
/// Delta_5 = r^-4 d_r r^4 d_r + (r^2 sin^3 theta)^-1 d_theta sin^3 theta d_theta
///           - 4 L^2 / (r^2 sin^2 theta),
/// L^2     = -[d_bb + cot b d_b + (d_aa - 2 cos b d_ag + d_gg) / sin^2 b],
/// ```
///
/// every derivative taken by finite differences of `basis_function`.
pub fn pde_residual(p: &PhysParams, label: &HyperLabel, h: &HyperPoint) -> Result<Residual> {
    let (st, sb) = (h.theta.sin(), h.beta.sin());
    if !(h.r > 0.0) || st == 0.0 || sb == 0.0 {
        return Err(Error::SingularLocus { r: h.r, theta: h.theta });
    }
    let psi = basis_function(p, label, h)?;
    let eval = |v: &[f64; 5]| {
        basis_function(
            p,
            label,
            &HyperPoint {
                r: v[0],
                theta: v[1],
                alpha: v[2],
                beta: v[3],
                gamma: v[4],
            },
        )
        .unwrap_or(C::new(f64::NAN, f64::NAN))
    };
    let at = [h.r, h.theta, h.alpha, h.beta, h.gamma];
    let hr = fd_step_radial(p, h.r);
    let ha = STEP_SECOND;
    let d1 = |i: usize, step: f64| numdiff::partial(&eval, &at, i, step * STEP_FIRST / STEP_SECOND).value;
    let d2 = |i: usize, j: usize, step: f64| numdiff::second_partial(&eval, &at, i, j, step).value;

    let r = h.r;
    let radial = d2(0, 0, hr) + d1(0, hr) * (4.0 / r);
    let polar = (d2(1, 1, ha) + d1(1, ha) * (3.0 * h.theta.cos() / st)) / (r * r);
    let l_sq = l_squared(&eval, &at);
    let angular = -l_sq * (4.0 / (r * r * st * st));
    let lap = [radial, polar, angular];
    if lap.iter().any(|v| !(v.re.is_finite() && v.im.is_finite())) {
        return Err(Error::Domain("basis function not evaluable around the sample point"));
    }
    let kin = p.kinetic();
    Ok(Residual::from_terms(&[
        -radial * kin,
        -polar * kin,
        -angular * kin,
        -psi * (p.e2 / r),
        -psi * p.energy(),
    ]))
}

/// `L^2 psi` by finite differences, for `psi` given as a function of five
/// coordinates whose last three are `(alpha, beta, gamma)`.
///
/// ```text
/// L^2 = -[d_bb + cot b d_b + (d_aa - 2 cos b d_ag + d_gg) / sin^2 b]
/// ```
pub(crate) fn l_squared<F: Fn(&[f64; 5]) -> C>(eval: &F, at: &[f64; 5]) -> C {
    let ha = STEP_SECOND;
    let d1 = |i: usize| numdiff::partial(eval, at, i, STEP_FIRST).value;
    let d2 = |i: usize, j: usize| numdiff::second_partial(eval, at, i, j, ha).value;
    let (sb, cb) = at[3].sin_cos();
    -(d2(3, 3) + d1(3) * (cb / sb) + (d2(2, 2) - d2(2, 4) * (2.0 * cb) + d2(4, 4)) / (sb * sb))
}
