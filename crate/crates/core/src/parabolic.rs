//! Parabolic coordinates on `R^5` and the parabolic continuum basis
//! `psi = sqrt((2L+1)/(2 pi^2)) C Phi_{k,Omega,L}(xi) Phi_{k,-Omega,L}(eta) D^L_mm'`.
//!
//! Coordinates:
//!
//! ```text
//! x0        = (xi - eta)/2
//! x2 + i x1 = sqrt(xi eta) sin(beta/2) exp(i (alpha - gamma)/2)
//! x4 + i x3 = sqrt(xi eta) cos(beta/2) exp(i (alpha + gamma)/2)
//! ```
//!
//! so that `xi = r + x0`, `eta = r - x0`. The volume element is
//! `xi eta (xi + eta)/32 sin(beta)` and the Laplacian
//!
//! ```text
//! Delta_5 = 4/(xi + eta) [xi^-1 d_xi xi^2 d_xi + eta^-1 d_eta eta^2 d_eta]
//!           - 4 L^2 / (xi eta).
//! ```
//!
//! Multiplying the Schrodinger equation by `(xi + eta)/4` separates it into
//!
//! ```text
//! xi^-1 (xi^2 Phi')' + [k^2 xi/4 - L(L+1)/xi + s k sigma + 1/(2a)] Phi = 0
//! ```
//!
//! with `s = +1` for `xi` and `s = -1` for `eta`, where
//! `sigma = sqrt(mu) Omega / (2 hbar k)` is the dimensionless separation
//! constant.

#[cfg(not(feature = "std"))]
use num_traits::Float;

use core::f64::consts::{FRAC_PI_2, PI};

use crate::hurwitz::R5Point;
use crate::hyperspherical::{euler_angles, l_squared};
use crate::numdiff::{self, STEP_FIRST, STEP_SECOND};
use crate::special::{kummer_f, ln_gamma_real, log_gamma, wigner_d};
use crate::{ComplexScalar as C, Error, HalfInt, PhysParams, Residual, Result};

const TWO_PI: f64 = 2.0 * PI;
const FOUR_PI: f64 = 4.0 * PI;

/// A point in parabolic coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParaPoint {
    pub xi: f64,
    pub eta: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl ParaPoint {
    /// Checks the coordinate ranges.
    pub fn new(xi: f64, eta: f64, alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        if !(xi >= 0.0 && xi.is_finite() && eta >= 0.0 && eta.is_finite()) {
            return Err(Error::Domain("xi and eta must be finite and non-negative"));
        }
        if !(0.0..=PI).contains(&beta) {
            return Err(Error::Domain("beta must lie in [0, pi]"));
        }
        if !(0.0..TWO_PI).contains(&alpha) || !(0.0..FOUR_PI).contains(&gamma) {
            return Err(Error::Domain("alpha must lie in [0, 2 pi) and gamma in [0, 4 pi)"));
        }
        Ok(ParaPoint {
            xi,
            eta,
            alpha,
            beta,
            gamma,
        })
    }

    /// `r = (xi + eta)/2`.
    pub fn r(&self) -> f64 {
        0.5 * (self.xi + self.eta)
    }
}

/// The parabolic separation constant, stored as the dimensionless
/// `sigma = sqrt(mu) Omega / (2 hbar k)` for the wavenumber it was built at.
///
/// Public constructors only admit real `Omega`, the spectrum of the
/// parabolic basis. The complex value that selects the scattering boundary
/// condition is built inside [`crate::scattering`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeparationConstant {
    sigma: C,
}

impl SeparationConstant {
    /// From `Omega` in the units of `p`.
    pub fn from_omega(p: &PhysParams, omega: f64) -> Result<Self> {
        if !omega.is_finite() {
            return Err(Error::Domain("Omega must be finite"));
        }
        Ok(Self::from_complex_omega(p, C::new(omega, 0.0)))
    }

    /// From the dimensionless `sigma` directly.
    pub fn from_sigma(sigma: f64) -> Result<Self> {
        if !sigma.is_finite() {
            return Err(Error::Domain("sigma must be finite"));
        }
        Ok(SeparationConstant {
            sigma: C::new(sigma, 0.0),
        })
    }

    pub(crate) fn from_complex_omega(p: &PhysParams, omega: C) -> Self {
        SeparationConstant {
            sigma: omega * (p.mu.sqrt() / (2.0 * p.hbar * p.k)),
        }
    }

    pub fn sigma(&self) -> C {
        self.sigma
    }

    /// `Omega = 2 hbar k sigma / sqrt(mu)` in the units of `p`.
    pub fn omega(&self, p: &PhysParams) -> C {
        self.sigma * (2.0 * p.hbar * p.k / p.mu.sqrt())
    }

    /// `Omega -> -Omega`, the constant seen by the `eta` equation.
    pub fn negated(self) -> Self {
        SeparationConstant { sigma: -self.sigma }
    }
}

/// Quantum numbers `(Omega, L, m, m')` of the parabolic basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParaLabel {
    pub sep: SeparationConstant,
    pub l: HalfInt,
    pub m: HalfInt,
    pub mp: HalfInt,
}

impl ParaLabel {
    /// `L >= 0`, `|m|, |m'| <= L` with `m, m'` in the integrality class of `L`.
    pub fn new(sep: SeparationConstant, l: HalfInt, m: HalfInt, mp: HalfInt) -> Result<Self> {
        if l.twice() < 0 {
            return Err(Error::Label("L must be non-negative"));
        }
        if m.abs() > l || mp.abs() > l {
            return Err(Error::Label("|m| and |m'| must not exceed L"));
        }
        if !l.same_class(m) || !l.same_class(mp) {
            return Err(Error::Label("m and m' must share the integrality of L"));
        }
        Ok(ParaLabel { sep, l, m, mp })
    }

    /// `L = m = m' = 0`.
    pub fn scalar(sep: SeparationConstant) -> Self {
        ParaLabel {
            sep,
            l: HalfInt::ZERO,
            m: HalfInt::ZERO,
            mp: HalfInt::ZERO,
        }
    }
}

/// Which of the two separated equations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// `+ k sigma` in the bracket.
    Xi,
    /// `- k sigma` in the bracket.
    Eta,
}

impl Branch {
    fn sign(self) -> f64 {
        match self {
            Branch::Xi => 1.0,
            Branch::Eta => -1.0,
        }
    }
}

// ------------------------------------------------------------ coordinates

pub fn from_parabolic(pt: &ParaPoint) -> R5Point {
    let rho = (pt.xi * pt.eta).sqrt();
    let (sb, cb) = (0.5 * pt.beta).sin_cos();
    let (s1, c1) = (0.5 * (pt.alpha - pt.gamma)).sin_cos();
    let (s2, c2) = (0.5 * (pt.alpha + pt.gamma)).sin_cos();
    R5Point::new([
        0.5 * (pt.xi - pt.eta),
        rho * sb * s1,
        rho * sb * c1,
        rho * cb * s2,
        rho * cb * c2,
    ])
}

/// Inverse of [`from_parabolic`].
///
/// On the axis `xi eta = 0` (which includes the origin) the Euler angles are
/// undefined and [`Error::ParabolicAxis`] is returned, carrying the
/// well-defined `xi` and `eta`.
pub fn to_parabolic(x: &R5Point) -> Result<ParaPoint> {
    let r = x.r();
    let w21 = C::new(x.x[2], x.x[1]);
    let w43 = C::new(x.x[4], x.x[3]);
    let rho = w21.norm().hypot(w43.norm());
    let x0 = x.x[0];
    // r - |x0| cancels near the axis; use rho^2 / (r + |x0|) instead.
    let (xi, eta) = if x0 >= 0.0 {
        let xi = r + x0;
        (xi, if xi > 0.0 { rho * rho / xi } else { 0.0 })
    } else {
        let eta = r - x0;
        (rho * rho / eta, eta)
    };
    if rho <= f64::EPSILON * r || r == 0.0 {
        return Err(Error::ParabolicAxis { xi, eta });
    }
    let (alpha, beta, gamma) = euler_angles(w21, w43);
    Ok(ParaPoint {
        xi,
        eta,
        alpha,
        beta,
        gamma,
    })
}

/// `dV = xi eta (xi + eta)/32 sin(beta) dxi deta dalpha dbeta dgamma`.
pub fn volume_element(pt: &ParaPoint) -> f64 {
    pt.xi * pt.eta * (pt.xi + pt.eta) / 32.0 * pt.beta.sin()
}

// ---------------------------------------------------------- Phi functions

fn kummer_a(p: &PhysParams, sep: &SeparationConstant, l: HalfInt) -> C {
    let i_sigma = C::new(0.0, 1.0) * sep.sigma;
    C::new(l.value() + 1.0, 0.5 * p.coulomb_strength()) + i_sigma
}

/// `Phi_{k,Omega,L}(x) = (ikx)^L / (2L+1)! e^{-ikx/2} F(L+1 + i/(2ak) + i sigma; 2L+2; ikx)`.
///
/// `(ikx)^L` uses the principal branch, `i^L = e^{i pi L/2}`, which matters
/// for half-integer `L`.
pub fn phi_function(p: &PhysParams, sep: &SeparationConstant, l: HalfInt, x: f64) -> Result<C> {
    if !(x >= 0.0 && x.is_finite()) {
        return Err(Error::Domain("x must be finite and non-negative"));
    }
    if l.twice() < 0 {
        return Err(Error::Label("L must be non-negative"));
    }
    let lv = l.value();
    let ln_fact = ln_gamma_real(2.0 * lv + 2.0)?;
    let kx = p.k * x;
    let f = kummer_f(kummer_a(p, sep, l), C::new(2.0 * lv + 2.0, 0.0), C::new(0.0, kx))?;
    let power = if l.twice() == 0 {
        C::new(1.0, 0.0)
    } else if kx == 0.0 {
        C::new(0.0, 0.0)
    } else {
        C::from_polar((lv * kx.ln()).exp(), FRAC_PI_2 * lv)
    };
    Ok(power * C::new(0.0, -0.5 * kx).exp() * f.value * (-ln_fact).exp())
}

/// Large-`x` envelope of `|Phi_{k,Omega,L}(x)|` for real `Omega`,
///
/// ```text
/// 2 exp(-pi Im(A)/2) / (|Gamma(A)| k x),   A = L+1 + i/(2ak) + i sigma,
/// ```
///
/// the sum of the moduli of the two leading large-argument terms of `F`.
pub fn phi_envelope(p: &PhysParams, sep: &SeparationConstant, l: HalfInt, x: f64) -> Result<f64> {
    if sep.sigma.im != 0.0 {
        return Err(Error::Domain("envelope is defined for real Omega"));
    }
    if !(x > 0.0) {
        return Err(Error::Domain("envelope needs x > 0"));
    }
    let a = kummer_a(p, sep, l);
    let ln_g = log_gamma(a)?.re;
    Ok(2.0 * (-FRAC_PI_2 * a.im - ln_g).exp() / (p.k * x))
}

/// `C_{k,Omega,L} = e^{-i pi L} sqrt(hbar^2 k^3 / (2 pi mu)) e^{pi/(2ak)}
/// |Gamma(L+1 - i/(2ak) - i sigma) Gamma(L+1 - i/(2ak) + i sigma)|`.
///
/// The sign `(-1)^L` is read as `e^{-i pi L}`, which for half-integer `L`
/// cancels the `i^{2L}` of the two `Phi` factors and keeps the basis real
/// up to the Wigner function.
pub fn normalization(p: &PhysParams, sep: &SeparationConstant, l: HalfInt) -> Result<C> {
    let lv = l.value();
    let eta = p.coulomb_strength();
    let i_sigma = C::new(0.0, 1.0) * sep.sigma;
    let g1 = log_gamma(C::new(lv + 1.0, -0.5 * eta) - i_sigma)?.re;
    let g2 = log_gamma(C::new(lv + 1.0, -0.5 * eta) + i_sigma)?.re;
    let ln_mod = 0.5 * (p.hbar * p.hbar * p.k.powi(3) / (TWO_PI * p.mu)).ln() + FRAC_PI_2 * eta + g1 + g2;
    Ok(C::from_polar(ln_mod.exp(), -PI * lv))
}

// -------------------------------------------------------------- the basis

/// `psi_{k,Omega,L,m,m'}` at a parabolic point.
pub fn parabolic_basis(p: &PhysParams, label: &ParaLabel, pt: &ParaPoint) -> Result<C> {
    let norm = ((f64::from(label.l.twice()) + 1.0) / (2.0 * PI * PI)).sqrt();
    let c = normalization(p, &label.sep, label.l)?;
    let f1 = phi_function(p, &label.sep, label.l, pt.xi)?;
    let f2 = phi_function(p, &label.sep.negated(), label.l, pt.eta)?;
    let d = wigner_d(label.l, label.m, label.mp, pt.alpha, pt.beta, pt.gamma)?;
    Ok(c * f1 * f2 * d * norm)
}

/// `psi_{k,Omega,L,m,m'}` at a Cartesian point.
///
/// On the axis the value is the continuous limit when `L = 0` and
/// [`Error::ParabolicAxis`] otherwise.
pub fn parabolic_basis_at(p: &PhysParams, label: &ParaLabel, x: &R5Point) -> Result<C> {
    match to_parabolic(x) {
        Ok(pt) => parabolic_basis(p, label, &pt),
        Err(Error::ParabolicAxis { xi, eta }) if label.l == HalfInt::ZERO => parabolic_basis(
            p,
            label,
            &ParaPoint {
                xi,
                eta,
                alpha: 0.0,
                beta: 0.0,
                gamma: 0.0,
            },
        ),
        Err(e) => Err(e),
    }
}

// -------------------------------------------------------------- residuals

/// Step for derivatives along `xi` or `eta`: a fixed fraction of the
/// coordinate, capped at `k h = 0.05` as for the radial function.
fn fd_step(p: &PhysParams, x: f64) -> f64 {
    STEP_SECOND * x.min(25.0 / p.k)
}

fn nan() -> C {
    C::new(f64::NAN, f64::NAN)
}

fn all_finite(v: &[C]) -> bool {
    v.iter().all(|z| z.re.is_finite() && z.im.is_finite())
}

/// The five terms of the separated equation
/// `x Phi'' + 2 Phi' + [k^2 x/4 - L(L+1)/x + s k sigma + 1/(2a)] Phi`
/// for an arbitrary function `f`, derivatives by finite differences.
fn ode_terms<F: Fn(f64) -> C>(p: &PhysParams, sigma: C, l: HalfInt, branch: Branch, f: F, x: f64) -> [C; 5] {
    let h = fd_step(p, x);
    let d1 = numdiff::first(&f, x, h * STEP_FIRST / STEP_SECOND).value;
    let d2 = numdiff::second(&f, x, h).value;
    let v = f(x);
    let k = p.k;
    [
        d2 * x,
        d1 * 2.0,
        v * (k * k * x / 4.0 - l.casimir() / x),
        v * sigma * (branch.sign() * k),
        v * (0.5 / p.a),
    ]
}

/// Residual of the separated equation of `branch` for `Phi_{k,Omega,L}`
/// with the constant `sep` itself (not negated).
///
/// `Phi(x; sigma)` solves the `xi` equation with `sigma`; `Phi(x; -sigma)`
/// solves the `eta` equation with `sigma`.
pub fn phi_ode_residual(
    p: &PhysParams,
    sep: &SeparationConstant,
    l: HalfInt,
    branch: Branch,
    x: f64,
) -> Result<Residual> {
    if !(x > 0.0) {
        return Err(Error::Domain("separated equations are checked at x > 0"));
    }
    let phi_sep = match branch {
        Branch::Xi => *sep,
        Branch::Eta => sep.negated(),
    };
    phi_function(p, &phi_sep, l, x)?;
    let f = |t: f64| phi_function(p, &phi_sep, l, t).unwrap_or(nan());
    let terms = ode_terms(p, sep.sigma, l, branch, f, x);
    if !all_finite(&terms) {
        return Err(Error::Domain("Phi not evaluable around the sample point"));
    }
    Ok(Residual::from_terms(&terms))
}

/// The five terms of `Delta_5 psi + (2 mu / hbar^2)(eps + 2 e^2/(xi + eta)) psi`
/// for `psi` given on `(xi, eta, alpha, beta, gamma)`:
/// `xi` part, `eta` part, `L^2` part, energy, Coulomb.
pub(crate) fn schrodinger_terms<F: Fn(&[f64; 5]) -> C>(p: &PhysParams, eval: &F, at: &[f64; 5]) -> [C; 5] {
    let (xi, eta) = (at[0], at[1]);
    let d1 = |i: usize, step: f64| numdiff::partial(eval, at, i, step * STEP_FIRST / STEP_SECOND).value;
    let d2 = |i: usize, step: f64| numdiff::second_partial(eval, at, i, i, step).value;
    let (hx, he) = (fd_step(p, xi), fd_step(p, eta));
    let w = 4.0 / (xi + eta);
    let xi_part = (d2(0, hx) * xi + d1(0, hx) * 2.0) * w;
    let eta_part = (d2(1, he) * eta + d1(1, he) * 2.0) * w;
    let angular = -l_squared(eval, at) * (4.0 / (xi * eta));
    let psi = eval(at);
    let scale = 2.0 * p.mu / (p.hbar * p.hbar);
    [
        xi_part,
        eta_part,
        angular,
        psi * (scale * p.energy()),
        psi * (scale * 2.0 * p.e2 / (xi + eta)),
    ]
}

fn check_interior(pt: &ParaPoint) -> Result<()> {
    if !(pt.xi > 0.0 && pt.eta > 0.0) || pt.beta.sin() == 0.0 {
        return Err(Error::ParabolicAxis { xi: pt.xi, eta: pt.eta });
    }
    Ok(())
}

/// Residual of the Schrodinger equation in parabolic form for a basis
/// function, every derivative taken by finite differences.
pub fn pde_residual(p: &PhysParams, label: &ParaLabel, pt: &ParaPoint) -> Result<Residual> {
    check_interior(pt)?;
    parabolic_basis(p, label, pt)?;
    let eval = |v: &[f64; 5]| {
        parabolic_basis(
            p,
            label,
            &ParaPoint {
                xi: v[0],
                eta: v[1],
                alpha: v[2],
                beta: v[3],
                gamma: v[4],
            },
        )
        .unwrap_or(nan())
    };
    let terms = schrodinger_terms(p, &eval, &[pt.xi, pt.eta, pt.alpha, pt.beta, pt.gamma]);
    if !all_finite(&terms) {
        return Err(Error::Domain("basis function not evaluable around the sample point"));
    }
    Ok(Residual::from_terms(&terms))
}

/// Separation identity for `psi = Phi1(xi) Phi2(eta) D^L_mm'` with arbitrary
/// `Phi1`, `Phi2` (solutions or not):
///
/// ```text
/// (xi + eta)/4 [Schrodinger operator] psi
///     = D (Phi2 E_xi[Phi1] + Phi1 E_eta[Phi2]),
/// ```
///
/// where `E_xi`, `E_eta` are the left-hand sides of the separated equations
/// with constant `sigma`. Both sides are computed independently by finite
/// differences; the returned residual is their difference, normalised by the
/// magnitudes of all contributing terms.
#[allow(clippy::too_many_arguments)]
pub fn separation_identity<F1, F2>(
    p: &PhysParams,
    sigma: f64,
    l: HalfInt,
    m: HalfInt,
    mp: HalfInt,
    phi1: F1,
    phi2: F2,
    pt: &ParaPoint,
) -> Result<Residual>
where
    F1: Fn(f64) -> C,
    F2: Fn(f64) -> C,
{
    check_interior(pt)?;
    let d = |a: f64, b: f64, g: f64| wigner_d(l, m, mp, a, b, g);
    d(pt.alpha, pt.beta, pt.gamma)?;
    let eval = |v: &[f64; 5]| phi1(v[0]) * phi2(v[1]) * d(v[2], v[3], v[4]).unwrap_or(nan());
    let lhs = schrodinger_terms(p, &eval, &[pt.xi, pt.eta, pt.alpha, pt.beta, pt.gamma]);
    let w = 0.25 * (pt.xi + pt.eta);
    let sigma = C::new(sigma, 0.0);
    let e_xi = ode_terms(p, sigma, l, Branch::Xi, &phi1, pt.xi);
    let e_eta = ode_terms(p, sigma, l, Branch::Eta, &phi2, pt.eta);
    let dv = d(pt.alpha, pt.beta, pt.gamma)?;
    let (v1, v2) = (phi1(pt.xi), phi2(pt.eta));
    let mut terms = [C::new(0.0, 0.0); 15];
    for (i, t) in lhs.iter().enumerate() {
        terms[i] = t * w;
    }
    for i in 0..5 {
        terms[5 + i] = -e_xi[i] * v2 * dv;
        terms[10 + i] = -e_eta[i] * v1 * dv;
    }
    if !all_finite(&terms) {
        return Err(Error::Domain("trial functions not evaluable around the sample point"));
    }
    Ok(Residual::from_terms(&terms))
}
