use crate::{Error, Result};

/// Physical parameters of the Coulomb problem.
///
/// `a = hbar^2 / (mu e^2)` is the Bohr radius and `k = sqrt(2 mu eps) / hbar`
/// the wavenumber. Internally the crate works with `hbar = mu = 1`, but the
/// general constructor keeps the full set so callers can rescale.
/// `a = +inf` (`e^2 = 0`) is the free particle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysParams {
    pub a: f64,
    pub k: f64,
    pub hbar: f64,
    pub mu: f64,
    pub e2: f64,
}

impl PhysParams {
    /// `hbar = mu = 1`, `e^2 = 1/a`.
    pub fn natural(a: f64, k: f64) -> Result<Self> {
        Self::from_physical(1.0, 1.0, 1.0 / a, k)
    }

    pub fn from_physical(hbar: f64, mu: f64, e2: f64, k: f64) -> Result<Self> {
        if !(hbar > 0.0 && hbar.is_finite()) {
            return Err(Error::Params("hbar must be positive and finite"));
        }
        if !(mu > 0.0 && mu.is_finite()) {
            return Err(Error::Params("mu must be positive and finite"));
        }
        if !(e2 >= 0.0 && e2.is_finite()) {
            return Err(Error::Params("e^2 must be non-negative and finite"));
        }
        if !(k > 0.0 && k.is_finite()) {
            return Err(Error::Params("k must be positive and finite"));
        }
        let a = hbar * hbar / (mu * e2);
        Ok(PhysParams { a, k, hbar, mu, e2 })
    }

    /// Same physics at a different wavenumber.
    pub fn with_k(self, k: f64) -> Result<Self> {
        Self::from_physical(self.hbar, self.mu, self.e2, k)
    }

    /// Dimensionless Coulomb strength `1/(a k)`.
    pub fn coulomb_strength(&self) -> f64 {
        1.0 / (self.a * self.k)
    }

    /// Energy `eps = hbar^2 k^2 / (2 mu)`.
    pub fn energy(&self) -> f64 {
        self.hbar * self.hbar * self.k * self.k / (2.0 * self.mu)
    }

    /// Kinetic prefactor `hbar^2 / (2 mu)`.
    pub fn kinetic(&self) -> f64 {
        self.hbar * self.hbar / (2.0 * self.mu)
    }
}
