//! Numerical core for the five-dimensional Coulomb continuum problem.
//!
//! The crate covers
//!
//! * special functions over complex arguments ([`special`]): log-gamma,
//!   Kummer's confluent hypergeometric function and its asymptotic series,
//!   Gegenbauer polynomials and Wigner D-functions,
//! * the quadratic Hurwitz map from R^8 to R^5 and the operator identities
//!   that tie the eight-dimensional repulsive oscillator to the
//!   five-dimensional Coulomb problem ([`hurwitz`]),
//! * the hyperspherical and parabolic continuum bases ([`hyperspherical`],
//!   [`parabolic`]),
//! * the Coulomb scattering state, its asymptotic split into incident and
//!   scattered waves, and the cross section ([`scattering`]).
//!
//! Everything here is pure computation. The crate is `no_std` (it needs
//! `alloc`); the `std` feature only switches the float intrinsics used by
//! `num-traits` from `libm` to the platform implementations.
#![no_std]
#![warn(missing_debug_implementations)]
// `!(x > 0.0)` is used on purpose so that NaN fails the check; indexed
// loops read better than iterator chains for small fixed-size matrices.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

extern crate alloc;

mod error;
mod halfint;
mod params;

pub mod hurwitz;
pub mod hyperspherical;
pub mod linalg;
pub mod numdiff;
pub mod parabolic;
pub mod quadrature;
pub mod scattering;
pub mod special;

pub use error::{Error, Result};
pub use halfint::HalfInt;
pub use params::PhysParams;

/// Complex double used throughout.
pub type ComplexScalar = num_complex::Complex64;

/// Relative residual of an equation `sum_i term_i = 0`, normalised by the
/// sum of the term magnitudes.
///
/// Returned by every PDE and ODE residual routine in this crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Residual {
    /// `|sum_i term_i|`
    pub absolute: f64,
    /// `sum_i |term_i|`
    pub scale: f64,
}

impl Residual {
    pub(crate) fn from_terms(terms: &[ComplexScalar]) -> Self {
        let mut total = ComplexScalar::new(0.0, 0.0);
        let mut scale = 0.0;
        for t in terms {
            total += t;
            scale += t.norm();
        }
        Residual {
            absolute: total.norm(),
            scale,
        }
    }

    /// `absolute / scale`, or `absolute` when every term vanishes.
    pub fn relative(&self) -> f64 {
        if self.scale > 0.0 {
            self.absolute / self.scale
        } else {
            self.absolute
        }
    }
}
