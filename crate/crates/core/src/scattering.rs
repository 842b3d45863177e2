//! Coulomb scattering in five dimensions.
//!
//! The `L = 0` parabolic equations with the complex separation constant
//! `Omega = -hbar/(a sqrt(mu)) - 2i hbar k/sqrt(mu)` give the scattering state
//!
//! ```text
//! psi = C_k e^{ik(xi - eta)/2} F(i nu; 2; ik eta),   nu = 1/(ak),
//! C_k = e^{pi nu/2} Gamma(2 - i nu),
//! ```
//!
//! normalised so that the incident wave has unit amplitude. The two terms
//! of the large-argument expansion of `F` split it into
//!
//! ```text
//! incident  = e^{ikx0 - i nu ln(k eta)}              G(i nu; i nu - 1; -ik eta)
//! scattered = f(theta)/r^2 e^{ikr + i nu ln(2kr)}    G(2 - i nu; 1 - i nu; ik eta)
//! ```
//!
//! with `eta = 2r sin^2(theta/2)` and
//!
//! ```text
//! f(theta) = (1 - iak) / (4 a^2 k^4 sin^4(theta/2))
//!            Gamma(2 - i nu)/Gamma(2 + i nu) e^{2i nu ln sin(theta/2)}.
//! ```
//!
//! [`amplitude_derived`] is this coefficient. [`amplitude`] and
//! [`cross_section`] are the closed forms in the form they are usually quoted,
//! the first with `sin^2(theta/2)` in the denominator and the second with
//! `sin^8(theta/2)`; they are not mutually consistent, and
//! [`amplitude_cross_section_ratio`] reports `|f|^2 / (d sigma/d Omega)` for
//! the quoted pair rather than silently preferring one.

#[cfg(not(feature = "std"))]
use num_traits::Float;

use core::f64::consts::{FRAC_PI_2, PI};

use crate::parabolic::{schrodinger_terms, SeparationConstant};
use crate::special::{kummer_f, kummer_g_asymptotic, log_gamma};
use crate::{ComplexScalar as C, Error, PhysParams, Residual, Result};

/// Default lower bound on `k eta` for [`asymptotic_state`].
pub const DEFAULT_THRESHOLD: f64 = 50.0;

/// `Omega = -hbar/(a sqrt(mu)) - 2i hbar k / sqrt(mu)`, the separation
/// constant that selects a plane wave incident along `+x0`.
pub fn separation_constant(p: &PhysParams) -> C {
    let s = p.mu.sqrt();
    C::new(-p.hbar / (p.a * s), -2.0 * p.hbar * p.k / s)
}

/// [`separation_constant`] in the form used by [`crate::parabolic`]
/// (`sigma = -1/(2ak) - i`).
pub fn separation(p: &PhysParams) -> SeparationConstant {
    SeparationConstant::from_complex_omega(p, separation_constant(p))
}

/// The scattering solution at fixed `a` and `k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringSolution {
    pub k: f64,
    pub a: f64,
    /// `C_k = e^{pi/(2ak)} Gamma(2 - i/(ak))`.
    pub c_k: C,
}

impl ScatteringSolution {
    pub fn new(p: &PhysParams) -> Result<Self> {
        let nu = p.coulomb_strength();
        let c_k = (log_gamma(C::new(2.0, -nu))? + FRAC_PI_2 * nu).exp();
        Ok(ScatteringSolution { k: p.k, a: p.a, c_k })
    }

    /// `psi(xi, eta)`.
    pub fn psi(&self, xi: f64, eta: f64) -> Result<C> {
        if !(xi >= 0.0 && eta >= 0.0 && xi.is_finite() && eta.is_finite()) {
            return Err(Error::Domain("xi and eta must be finite and non-negative"));
        }
        let nu = 1.0 / (self.a * self.k);
        let f = kummer_f(C::new(0.0, nu), C::new(2.0, 0.0), C::new(0.0, self.k * eta))?;
        Ok(self.c_k * C::new(0.0, 0.5 * self.k * (xi - eta)).exp() * f.value)
    }
}

/// `psi_k(xi, eta) = C_k e^{ik(xi - eta)/2} F(i/(ak); 2; ik eta)`.
pub fn scattering_state(p: &PhysParams, xi: f64, eta: f64) -> Result<C> {
    ScatteringSolution::new(p)?.psi(xi, eta)
}

/// Incident and scattered parts of the scattering state at large `k eta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticDecomposition {
    pub incident: C,
    pub scattered: C,
    /// Amplitude of the scattered wave, `scattered = f/r^2 e^{ikr + i nu ln 2kr}`
    /// at leading order; see [`amplitude_derived`].
    pub f_theta: C,
}

impl AsymptoticDecomposition {
    pub fn total(&self) -> C {
        self.incident + self.scattered
    }
}

/// Controls for [`asymptotic_state_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticConfig {
    /// Smallest accepted `k eta = kr(1 - cos theta)`.
    pub threshold: f64,
    /// Number of `1/(k eta)` corrections kept in the incident wave. The
    /// scattered wave, itself of relative order `(k eta)^-2`, keeps
    /// `n_terms - 2` corrections (none below two), so that the truncation
    /// error is of order `(k eta)^-(n_terms+1)` throughout.
    pub n_terms: usize,
}

impl Default for AsymptoticConfig {
    /// Threshold 50 and one correction, the order of the bracket
    /// `1 + (ak - i)/(2 a^2 k^3 r sin^2(theta/2))`.
    fn default() -> Self {
        AsymptoticConfig {
            threshold: DEFAULT_THRESHOLD,
            n_terms: 1,
        }
    }
}

/// [`asymptotic_state_with`] with the default configuration.
pub fn asymptotic_state(p: &PhysParams, r: f64, theta: f64) -> Result<AsymptoticDecomposition> {
    asymptotic_state_with(p, r, theta, &AsymptoticConfig::default())
}

/// Large-distance split of the scattering state at `(r, theta)`.
///
/// Fails with [`Error::ForwardDivergence`] at `theta = 0` and with
/// [`Error::BelowThreshold`] when `k eta` is below the threshold.
pub fn asymptotic_state_with(
    p: &PhysParams,
    r: f64,
    theta: f64,
    cfg: &AsymptoticConfig,
) -> Result<AsymptoticDecomposition> {
    check_angle(theta)?;
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::Domain("r must be positive and finite"));
    }
    let s = (0.5 * theta).sin();
    let k = p.k;
    let k_eta = 2.0 * k * r * s * s;
    if !(k_eta >= cfg.threshold) {
        return Err(Error::BelowThreshold {
            k_eta,
            threshold: cfg.threshold,
        });
    }
    let nu = p.coulomb_strength();
    let x0 = r * theta.cos();
    let g_in = kummer_g_asymptotic(C::new(0.0, nu), C::new(-1.0, nu), C::new(0.0, -k_eta), cfg.n_terms);
    let incident = C::new(0.0, k * x0 - nu * k_eta.ln()).exp() * g_in;
    let f_theta = amplitude_derived(p, theta)?;
    let g_out = kummer_g_asymptotic(
        C::new(2.0, -nu),
        C::new(1.0, -nu),
        C::new(0.0, k_eta),
        cfg.n_terms.saturating_sub(2),
    );
    let scattered = f_theta / (r * r) * C::new(0.0, k * r + nu * (2.0 * k * r).ln()).exp() * g_out;
    Ok(AsymptoticDecomposition {
        incident,
        scattered,
        f_theta,
    })
}

fn check_angle(theta: f64) -> Result<()> {
    if theta == 0.0 {
        return Err(Error::ForwardDivergence);
    }
    if !(theta > 0.0 && theta <= PI) {
        return Err(Error::Domain("theta must lie in (0, pi]"));
    }
    Ok(())
}

/// `Gamma(2 - i nu) / Gamma(2 + i nu)`, unimodular.
fn gamma_ratio(nu: f64) -> Result<C> {
    if nu == 0.0 {
        return Ok(C::new(1.0, 0.0));
    }
    Ok(C::from_polar(1.0, -2.0 * log_gamma(C::new(2.0, nu))?.im))
}

fn amplitude_common(p: &PhysParams, theta: f64, sin_power: i32) -> Result<C> {
    check_angle(theta)?;
    let k = p.k;
    let nu = p.coulomb_strength();
    let s = (0.5 * theta).sin();
    // (1 - iak)/(a^2 k^4) = nu^2 (1 - iak)/k^2, finite as a -> infinity
    let pre = C::new(nu * nu, -nu) / (4.0 * k * k * s.powi(sin_power));
    Ok(pre * gamma_ratio(nu)? * C::new(0.0, 2.0 * nu * s.ln()).exp())
}

/// Scattering amplitude in its quoted closed form,
///
/// ```text
/// f(theta) = (1 - iak) / (4 a^2 k^4 sin^2(theta/2))
///            Gamma(2 - i/ak)/Gamma(2 + i/ak) exp((2i/ak) ln sin(theta/2)).
/// ```
pub fn amplitude(p: &PhysParams, theta: f64) -> Result<C> {
    amplitude_common(p, theta, 2)
}

/// The coefficient of the outgoing wave in the scattering state itself:
/// the same expression as [`amplitude`] with `sin^4(theta/2)` in the
/// denominator. `|amplitude_derived|^2` equals [`cross_section`].
pub fn amplitude_derived(p: &PhysParams, theta: f64) -> Result<C> {
    amplitude_common(p, theta, 4)
}

/// Differential cross section as quoted,
/// `(1 + a^2 k^2) / (16 a^4 k^8 sin^8(theta/2))`.
pub fn cross_section(p: &PhysParams, theta: f64) -> Result<f64> {
    check_angle(theta)?;
    let nu = p.coulomb_strength();
    let k = p.k;
    let s = (0.5 * theta).sin();
    // (1 + a^2 k^2)/(a^4 k^8) = nu^2 (nu^2 + 1)/k^4
    Ok(nu * nu * (nu * nu + 1.0) / (16.0 * k.powi(4) * s.powi(8)))
}

/// `|amplitude|^2 / cross_section`, which evaluates to `sin^4(theta/2)`:
/// the two quoted forms differ by that factor.
pub fn amplitude_cross_section_ratio(p: &PhysParams, theta: f64) -> Result<f64> {
    let f = amplitude(p, theta)?;
    let xs = cross_section(p, theta)?;
    if xs == 0.0 {
        return Err(Error::Domain("cross section vanishes for the free particle"));
    }
    Ok(f.norm_sqr() / xs)
}

/// Residual of the Schrodinger equation in parabolic form for the
/// scattering state at `(xi, eta)`, derivatives by finite differences.
pub fn pde_residual(p: &PhysParams, xi: f64, eta: f64) -> Result<Residual> {
    if !(xi > 0.0 && eta > 0.0) {
        return Err(Error::ParabolicAxis { xi, eta });
    }
    let sol = ScatteringSolution::new(p)?;
    sol.psi(xi, eta)?;
    let eval = |v: &[f64; 5]| sol.psi(v[0], v[1]).unwrap_or(C::new(f64::NAN, f64::NAN));
    let terms = schrodinger_terms(p, &eval, &[xi, eta, 0.0, FRAC_PI_2, 0.0]);
    if terms.iter().any(|t| !(t.re.is_finite() && t.im.is_finite())) {
        return Err(Error::Domain("scattering state not evaluable around the sample point"));
    }
    Ok(Residual::from_terms(&terms))
}
