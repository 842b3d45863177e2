//! Wigner D-functions in the convention
//! `D^L_{m m'}(alpha, beta, gamma) = e^{-i m alpha} d^L_{m m'}(beta) e^{-i m' gamma}`,
//! with `d` from Wigner's finite sum. Half-integer `L` is allowed.

use crate::{ComplexScalar as C, Error, HalfInt, Result};
#[cfg(not(feature = "std"))]
use num_traits::Float;

/// Largest `L` accepted; keeps every factorial below `f64` overflow.
pub const MAX_L: i32 = 80;

fn factorial(n: i32) -> f64 {
    (2..=n).fold(1.0, |acc, k| acc * f64::from(k))
}

fn check_labels(l: HalfInt, m: HalfInt, mp: HalfInt) -> Result<()> {
    if l.twice() < 0 {
        return Err(Error::Label("L must be non-negative"));
    }
    if l.twice() > 2 * MAX_L {
        return Err(Error::Label("L above supported maximum"));
    }
    if !l.same_class(m) || !l.same_class(mp) {
        return Err(Error::Label("m and m' must share the integrality of L"));
    }
    if m.abs() > l || mp.abs() > l {
        return Err(Error::Label("|m| and |m'| must not exceed L"));
    }
    Ok(())
}

/// Wigner's small `d^L_{m m'}(beta)`.
pub fn wigner_small_d(l: HalfInt, m: HalfInt, mp: HalfInt, beta: f64) -> Result<f64> {
    wigner_small_d_derivatives(l, m, mp, beta).map(|d| d[0])
}

/// `[d, d', d'']` of `d^L_{m m'}` with respect to `beta`, differentiated
/// term by term in the finite sum.
pub fn wigner_small_d_derivatives(l: HalfInt, m: HalfInt, mp: HalfInt, beta: f64) -> Result<[f64; 3]> {
    check_labels(l, m, mp)?;
    let (j2, m2, p2) = (l.twice(), m.twice(), mp.twice());
    // all of these are integers by the class check
    let j_plus_m = (j2 + m2) / 2;
    let j_minus_m = (j2 - m2) / 2;
    let j_plus_p = (j2 + p2) / 2;
    let j_minus_p = (j2 - p2) / 2;
    let m_minus_p = (m2 - p2) / 2;

    let norm = (factorial(j_plus_p) * factorial(j_minus_p) * factorial(j_plus_m) * factorial(j_minus_m)).sqrt();
    let (c, s) = ((0.5 * beta).cos(), (0.5 * beta).sin());
    let mono = |p: i32, q: i32| if p < 0 || q < 0 { 0.0 } else { c.powi(p) * s.powi(q) };

    let s_min = 0.max(-m_minus_p);
    let s_max = j_plus_p.min(j_minus_m);
    let mut out = [0.0; 3];
    for k in s_min..=s_max {
        let den = factorial(j_plus_p - k) * factorial(k) * factorial(m_minus_p + k) * factorial(j_minus_m - k);
        let p = j2 - m_minus_p - 2 * k;
        let q = m_minus_p + 2 * k;
        let sign = if (m_minus_p + k).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        let w = sign / den;
        let (pf, qf) = (f64::from(p), f64::from(q));
        // d/dx c^p s^q = -p c^(p-1) s^(q+1) + q c^(p+1) s^(q-1), x = beta/2
        let first = -pf * mono(p - 1, q + 1) + qf * mono(p + 1, q - 1);
        let second = pf * (pf - 1.0) * mono(p - 2, q + 2) - pf * (qf + 1.0) * mono(p, q) - qf * (pf + 1.0) * mono(p, q)
            + qf * (qf - 1.0) * mono(p + 2, q - 2);
        out[0] += w * mono(p, q);
        out[1] += w * 0.5 * first;
        out[2] += w * 0.25 * second;
    }
    Ok([norm * out[0], norm * out[1], norm * out[2]])
}

/// `D^L_{m m'}(alpha, beta, gamma)`.
pub fn wigner_d(l: HalfInt, m: HalfInt, mp: HalfInt, alpha: f64, beta: f64, gamma: f64) -> Result<C> {
    let d = wigner_small_d(l, m, mp, beta)?;
    let phase = -(m.value() * alpha + mp.value() * gamma);
    Ok(C::from_polar(d, phase))
}
