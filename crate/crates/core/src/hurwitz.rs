//! The quadratic Hurwitz map `R^8 -> R^5`, the three fiber generators `J_a`,
//! and residual checks for the identities that connect the eight-dimensional
//! repulsive oscillator with the five-dimensional Coulomb problem.
//!
//! Conventions: `hbar = mu = 1` unless a [`DualityParams`] says otherwise;
//! coordinates `u` carry units of `length^(1/2)` so that `r = |u|^2` is a
//! length.
//!
//! Fields are passed through the [`ScalarField`] trait. A field may supply
//! analytic first and second partials; when it does not, central differences
//! with one Richardson step are used and their error estimate is checked
//! against [`FD_TOLERANCE`].

#[cfg(not(feature = "std"))]
use num_traits::Float;

use alloc::vec::Vec;

use crate::numdiff::{self, STEP_FIRST, STEP_SECOND};
use crate::{ComplexScalar as C, Error, HalfInt, PhysParams, Residual, Result};

/// Relative tolerance on the finite-difference error estimate used when a
/// field has no analytic partials.
///
/// The estimate is the error of the unextrapolated stencil, `O(h^2)`, so it
/// overstates the error of the returned value by orders of magnitude; the
/// gate is there to catch fields that the step does not resolve at all.
pub const FD_TOLERANCE: f64 = 1e-4;

const ZERO: C = C::new(0.0, 0.0);

/// A point of the oscillator space `R^8`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct R8Point {
    pub u: [f64; 8],
}

/// A point of the Coulomb space `R^5`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct R5Point {
    pub x: [f64; 5],
}

impl R8Point {
    pub fn new(u: [f64; 8]) -> Self {
        R8Point { u }
    }

    pub fn norm_sq(&self) -> f64 {
        self.u.iter().map(|v| v * v).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }
}

impl R5Point {
    pub fn new(x: [f64; 5]) -> Self {
        R5Point { x }
    }

    /// Euclidean radius `r`.
    pub fn r(&self) -> f64 {
        let m = self.x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        if m == 0.0 {
            return 0.0;
        }
        m * self.x.iter().map(|v| (v / m) * (v / m)).sum::<f64>().sqrt()
    }
}

/// `(coefficient, p, q)`: the term `coefficient * u_p u_q` of one component.
type QuadTerm = (f64, usize, usize);

/// Real expansion of the map, component by component.
const MAP_TERMS: [&[QuadTerm]; 5] = [
    &[
        (1.0, 0, 0),
        (1.0, 1, 1),
        (1.0, 2, 2),
        (1.0, 3, 3),
        (-1.0, 4, 4),
        (-1.0, 5, 5),
        (-1.0, 6, 6),
        (-1.0, 7, 7),
    ],
    &[(2.0, 0, 4), (2.0, 1, 5), (-2.0, 2, 6), (-2.0, 3, 7)],
    &[(2.0, 0, 5), (-2.0, 1, 4), (2.0, 2, 7), (-2.0, 3, 6)],
    &[(2.0, 0, 6), (2.0, 1, 7), (2.0, 2, 4), (2.0, 3, 5)],
    &[(2.0, 0, 7), (-2.0, 1, 6), (-2.0, 2, 5), (2.0, 3, 4)],
];

/// The Hurwitz map.
///
/// ```text
/// x0        = u0^2 + u1^2 + u2^2 + u3^2 - u4^2 - u5^2 - u6^2 - u7^2
/// x2 + i x1 = 2 [(u0 + i u1)(u5 + i u4) + (u2 - i u3)(u7 - i u6)]
/// x4 + i x3 = 2 [(u0 + i u1)(u7 + i u6) - (u2 - i u3)(u5 - i u4)]
/// ```
///
/// The relative sign in the last line is the one for which `|x| = |u|^2`
/// holds and the generators `J_a` annihilate every component; with a `+`
/// there the map is not conformal.
///
/// The map is even, so `hurwitz_map(-u) == hurwitz_map(u)` bit for bit.
pub fn hurwitz_map(p: &R8Point) -> R5Point {
    let u = &p.u;
    let x0 =
        u[0] * u[0] + u[1] * u[1] + u[2] * u[2] + u[3] * u[3] - (u[4] * u[4] + u[5] * u[5] + u[6] * u[6] + u[7] * u[7]);
    let z01 = C::new(u[0], u[1]);
    let z23 = C::new(u[2], -u[3]);
    let w21 = (z01 * C::new(u[5], u[4]) + z23 * C::new(u[7], -u[6])) * 2.0;
    let w43 = (z01 * C::new(u[7], u[6]) - z23 * C::new(u[5], -u[4])) * 2.0;
    R5Point::new([x0, w21.im, w21.re, w43.im, w43.re])
}

/// `dx_i / du_mu` at `u`. The rows are orthogonal with squared length
/// `4 |u|^2 = 4 r`.
pub fn jacobian(p: &R8Point) -> [[f64; 8]; 5] {
    let mut jac = [[0.0; 8]; 5];
    for (row, terms) in jac.iter_mut().zip(MAP_TERMS.iter()) {
        for &(c, a, b) in terms.iter() {
            if a == b {
                row[a] += 2.0 * c * p.u[a];
            } else {
                row[a] += c * p.u[b];
                row[b] += c * p.u[a];
            }
        }
    }
    jac
}

/// Constant second partials `d^2 x_i / du_mu du_nu` of the (quadratic) map.
pub fn map_hessians() -> [[[f64; 8]; 8]; 5] {
    let mut h = [[[0.0; 8]; 8]; 5];
    for (hi, terms) in h.iter_mut().zip(MAP_TERMS.iter()) {
        for &(c, a, b) in terms.iter() {
            if a == b {
                hi[a][a] += 2.0 * c;
            } else {
                hi[a][b] += c;
                hi[b][a] += c;
            }
        }
    }
    h
}

/// `| |u|^4 - |x(u)|^2 |`.
pub fn euler_identity_residual(p: &R8Point) -> f64 {
    let u2 = p.norm_sq();
    let x = hurwitz_map(p);
    let x2: f64 = x.x.iter().map(|v| v * v).sum();
    (u2 * u2 - x2).abs()
}

// ------------------------------------------------------------------ fields

/// A complex scalar field on `R^N`, optionally with analytic partials.
pub trait ScalarField<const N: usize> {
    fn value(&self, u: &[f64; N]) -> C;

    /// Analytic gradient, if known.
    fn gradient(&self, _u: &[f64; N]) -> Option<[C; N]> {
        None
    }

    /// Analytic Hessian, if known.
    fn hessian(&self, _u: &[f64; N]) -> Option<[[C; N]; N]> {
        None
    }
}

impl<const N: usize, T: ScalarField<N> + ?Sized> ScalarField<N> for &T {
    fn value(&self, u: &[f64; N]) -> C {
        (**self).value(u)
    }
    fn gradient(&self, u: &[f64; N]) -> Option<[C; N]> {
        (**self).gradient(u)
    }
    fn hessian(&self, u: &[f64; N]) -> Option<[[C; N]; N]> {
        (**self).hessian(u)
    }
}

/// A field given only by its values; derivatives come from finite
/// differences.
#[derive(Debug, Clone, Copy)]
pub struct FnField<F>(pub F);

impl<const N: usize, F: Fn(&[f64; N]) -> C> ScalarField<N> for FnField<F> {
    fn value(&self, u: &[f64; N]) -> C {
        (self.0)(u)
    }
}

/// A sparse polynomial `sum_t c_t prod_i u_i^(e_t,i)` with exact partials.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Polynomial<const N: usize> {
    terms: Vec<(C, [u32; N])>,
}

impl<const N: usize> Polynomial<N> {
    pub fn new() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn monomial(coef: C, exps: [u32; N]) -> Self {
        Polynomial::new().term(coef, exps)
    }

    /// The coordinate function `u_i`.
    pub fn coordinate(i: usize) -> Self {
        let mut e = [0; N];
        e[i] = 1;
        Polynomial::monomial(C::new(1.0, 0.0), e)
    }

    /// `|u|^2`.
    pub fn norm_sq() -> Self {
        (0..N).fold(Polynomial::new(), |p, i| {
            let mut e = [0; N];
            e[i] = 2;
            p.term(C::new(1.0, 0.0), e)
        })
    }

    /// Adds one term.
    pub fn term(mut self, coef: C, exps: [u32; N]) -> Self {
        self.terms.push((coef, exps));
        self
    }

    pub fn terms(&self) -> &[(C, [u32; N])] {
        &self.terms
    }

    fn eval_with(&self, u: &[f64; N], d: &[usize]) -> C {
        let mut total = ZERO;
        for (coef, exps) in &self.terms {
            let mut e = *exps;
            let mut factor = 1.0;
            for &i in d {
                if e[i] == 0 {
                    factor = 0.0;
                    break;
                }
                factor *= f64::from(e[i]);
                e[i] -= 1;
            }
            if factor == 0.0 {
                continue;
            }
            let mono: f64 = u.iter().zip(e.iter()).map(|(&x, &k)| pow_u(x, k)).product();
            total += coef * (factor * mono);
        }
        total
    }
}

fn pow_u(x: f64, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, _| acc * x)
}

impl<const N: usize> ScalarField<N> for Polynomial<N> {
    fn value(&self, u: &[f64; N]) -> C {
        self.eval_with(u, &[])
    }

    fn gradient(&self, u: &[f64; N]) -> Option<[C; N]> {
        let mut g = [ZERO; N];
        for (i, gi) in g.iter_mut().enumerate() {
            *gi = self.eval_with(u, &[i]);
        }
        Some(g)
    }

    fn hessian(&self, u: &[f64; N]) -> Option<[[C; N]; N]> {
        let mut h = [[ZERO; N]; N];
        for i in 0..N {
            for j in i..N {
                let v = self.eval_with(u, &[i, j]);
                h[i][j] = v;
                h[j][i] = v;
            }
        }
        Some(h)
    }
}

/// The pull-back `f5 o hurwitz_map` as a field on `R^8`, with analytic
/// partials by the chain rule whenever `f5` has them.
#[derive(Debug, Clone, Copy)]
pub struct PullBack<F>(pub F);

impl<F: ScalarField<5>> ScalarField<8> for PullBack<F> {
    fn value(&self, u: &[f64; 8]) -> C {
        self.0.value(&hurwitz_map(&R8Point::new(*u)).x)
    }

    fn gradient(&self, u: &[f64; 8]) -> Option<[C; 8]> {
        let p = R8Point::new(*u);
        let g5 = self.0.gradient(&hurwitz_map(&p).x)?;
        let jac = jacobian(&p);
        let mut g = [ZERO; 8];
        for (mu, gm) in g.iter_mut().enumerate() {
            *gm = (0..5).map(|i| g5[i] * jac[i][mu]).sum();
        }
        Some(g)
    }

    fn hessian(&self, u: &[f64; 8]) -> Option<[[C; 8]; 8]> {
        let p = R8Point::new(*u);
        let x = hurwitz_map(&p);
        let g5 = self.0.gradient(&x.x)?;
        let h5 = self.0.hessian(&x.x)?;
        let jac = jacobian(&p);
        let hx = map_hessians();
        let mut h = [[ZERO; 8]; 8];
        for mu in 0..8 {
            for nu in 0..8 {
                let mut acc = ZERO;
                for i in 0..5 {
                    acc += g5[i] * hx[i][mu][nu];
                    for j in 0..5 {
                        acc += h5[i][j] * (jac[i][mu] * jac[j][nu]);
                    }
                }
                h[mu][nu] = acc;
            }
        }
        Some(h)
    }
}

fn check_fd(error: f64, scale: f64) -> Result<()> {
    let tolerance = FD_TOLERANCE * scale.max(1.0);
    if error > tolerance {
        return Err(Error::StepSize {
            estimate: error,
            tolerance,
        });
    }
    Ok(())
}

fn fd_step(u: &[f64], base: f64) -> f64 {
    base * u.iter().fold(1.0f64, |m, v| m.max(v.abs()))
}

/// Gradient, analytic when available.
pub fn gradient_of<const N: usize, F: ScalarField<N>>(f: &F, u: &[f64; N]) -> Result<[C; N]> {
    if let Some(g) = f.gradient(u) {
        return Ok(g);
    }
    let h = fd_step(u, STEP_FIRST);
    let eval = |v: &[f64; N]| f.value(v);
    let mut g = [ZERO; N];
    for (i, gi) in g.iter_mut().enumerate() {
        let e = numdiff::partial(&eval, u, i, h);
        check_fd(e.error, e.value.norm())?;
        *gi = e.value;
    }
    Ok(g)
}

/// Hessian, analytic when available.
pub fn hessian_of<const N: usize, F: ScalarField<N>>(f: &F, u: &[f64; N]) -> Result<[[C; N]; N]> {
    if let Some(h) = f.hessian(u) {
        return Ok(h);
    }
    let step = fd_step(u, STEP_SECOND);
    let eval = |v: &[f64; N]| f.value(v);
    let mut h = [[ZERO; N]; N];
    for i in 0..N {
        for j in i..N {
            let e = numdiff::second_partial(&eval, u, i, j, step);
            check_fd(e.error, e.value.norm())?;
            h[i][j] = e.value;
            h[j][i] = e.value;
        }
    }
    Ok(h)
}

// -------------------------------------------------------------- generators

/// One of the three fiber generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    J1,
    J2,
    J3,
}

impl Generator {
    pub const ALL: [Generator; 3] = [Generator::J1, Generator::J2, Generator::J3];

    /// 1, 2 or 3.
    pub fn index(self) -> usize {
        match self {
            Generator::J1 => 1,
            Generator::J2 => 2,
            Generator::J3 => 3,
        }
    }

    pub fn from_index(a: usize) -> Result<Self> {
        match a {
            1 => Ok(Generator::J1),
            2 => Ok(Generator::J2),
            3 => Ok(Generator::J3),
            _ => Err(Error::Label("generator index must be 1, 2 or 3")),
        }
    }

    /// `J_a = (i/2) sum_t c_t u_(p_t) d/du_(q_t)`, listed as `(c, p, q)`.
    pub fn terms(self) -> &'static [(f64, usize, usize); 8] {
        const J1: [(f64, usize, usize); 8] = [
            (1.0, 1, 0),
            (-1.0, 0, 1),
            (1.0, 3, 2),
            (-1.0, 2, 3),
            (1.0, 5, 4),
            (-1.0, 4, 5),
            (1.0, 7, 6),
            (-1.0, 6, 7),
        ];
        const J2: [(f64, usize, usize); 8] = [
            (1.0, 2, 0),
            (-1.0, 3, 1),
            (-1.0, 0, 2),
            (1.0, 1, 3),
            (-1.0, 6, 4),
            (1.0, 7, 5),
            (1.0, 4, 6),
            (-1.0, 5, 7),
        ];
        const J3: [(f64, usize, usize); 8] = [
            (1.0, 3, 0),
            (1.0, 2, 1),
            (-1.0, 1, 2),
            (-1.0, 0, 3),
            (-1.0, 7, 4),
            (-1.0, 6, 5),
            (1.0, 5, 6),
            (1.0, 4, 7),
        ];
        match self {
            Generator::J1 => &J1,
            Generator::J2 => &J2,
            Generator::J3 => &J3,
        }
    }
}

/// Levi-Civita symbol on generator indices, with the third generator:
/// `[J_a, J_b] = i eps_abc J_c`.
fn structure(a: Generator, b: Generator) -> Option<(f64, Generator)> {
    use Generator::*;
    match (a, b) {
        (J1, J2) => Some((1.0, J3)),
        (J2, J3) => Some((1.0, J1)),
        (J3, J1) => Some((1.0, J2)),
        (J2, J1) => Some((-1.0, J3)),
        (J3, J2) => Some((-1.0, J1)),
        (J1, J3) => Some((-1.0, J2)),
        _ => None,
    }
}

const HALF_I: C = C::new(0.0, 0.5);

fn j_from_gradient(a: Generator, u: &[f64; 8], g: &[C; 8]) -> C {
    a.terms().iter().map(|&(c, p, q)| g[q] * (c * u[p])).sum::<C>() * HALF_I
}

/// `(J_a f)(u)`.
pub fn apply_j<F: ScalarField<8>>(a: Generator, f: &F, u: &R8Point) -> Result<C> {
    let g = gradient_of(f, &u.u)?;
    Ok(j_from_gradient(a, &u.u, &g))
}

/// `(J_a J_b f)(u)` from the gradient and Hessian of `f`.
fn apply_jj(a: Generator, b: Generator, u: &[f64; 8], g: &[C; 8], h: &[[C; 8]; 8]) -> C {
    let mut acc = ZERO;
    for &(c, p, q) in a.terms() {
        for &(c2, p2, q2) in b.terms() {
            let mut t = h[q][q2] * u[p2];
            if q == p2 {
                t += g[q2];
            }
            acc += t * (c * c2 * u[p]);
        }
    }
    acc * (HALF_I * HALF_I)
}

/// `|([J_a, J_b] - i eps_abc J_c) f (u)|`.
pub fn commutator_residual<F: ScalarField<8>>(a: Generator, b: Generator, f: &F, u: &R8Point) -> Result<f64> {
    let g = gradient_of(f, &u.u)?;
    let h = hessian_of(f, &u.u)?;
    let comm = apply_jj(a, b, &u.u, &g, &h) - apply_jj(b, a, &u.u, &g, &h);
    let rhs = match structure(a, b) {
        Some((s, c)) => C::new(0.0, s) * j_from_gradient(c, &u.u, &g),
        None => ZERO,
    };
    Ok((comm - rhs).norm())
}

/// `(J^2 f)(u) = sum_a (J_a J_a f)(u)`.
pub fn casimir<F: ScalarField<8>>(f: &F, u: &R8Point) -> Result<C> {
    let g = gradient_of(f, &u.u)?;
    let h = hessian_of(f, &u.u)?;
    Ok(Generator::ALL.iter().map(|&a| apply_jj(a, a, &u.u, &g, &h)).sum())
}

// ------------------------------------------------------ Laplacian identity

/// `|Delta_8 (f5 o x)(u) - 4 r (Delta_5 f5)(x(u))|`.
///
/// `J^2` annihilates every function of `x`, so the fiber term of the
/// decomposition drops out. Both Laplacians are analytic when `f5` supplies
/// a gradient and Hessian (the eight-dimensional one then goes through the
/// chain rule); otherwise both are taken by finite differences.
pub fn laplacian_identity_residual<F: ScalarField<5>>(f5: &F, u: &R8Point) -> Result<f64> {
    let x = hurwitz_map(u);
    let pull = PullBack(f5);
    match (pull.hessian(&u.u), f5.hessian(&x.x)) {
        (Some(h8), Some(h5)) => {
            let lap8: C = (0..8).map(|i| h8[i][i]).sum();
            let lap5: C = (0..5).map(|i| h5[i][i]).sum();
            Ok((lap8 - lap5 * (4.0 * x.r())).norm())
        }
        _ => laplacian_identity_residual_fd(f5, u),
    }
}

/// As [`laplacian_identity_residual`], always with finite differences on
/// the composite in `R^8` and on `f5` in `R^5`.
pub fn laplacian_identity_residual_fd<F: ScalarField<5>>(f5: &F, u: &R8Point) -> Result<f64> {
    if u.norm_sq() == 0.0 {
        return Err(Error::Origin);
    }
    let x = hurwitz_map(u);
    let f8 = |v: &[f64; 8]| f5.value(&hurwitz_map(&R8Point::new(*v)).x);
    let lap8 = numdiff::laplacian(&f8, &u.u, fd_step(&u.u, STEP_SECOND));
    let g5 = |v: &[f64; 5]| f5.value(v);
    let lap5 = numdiff::laplacian(&g5, &x.x, fd_step(&x.x, STEP_SECOND));
    let r4 = 4.0 * x.r();
    check_fd(lap8.error + r4 * lap5.error, lap8.value.norm() + r4 * lap5.value.norm())?;
    Ok((lap8.value - lap5.value * r4).norm())
}

// ----------------------------------------------------------------- duality

/// Parameters on both sides of the duality.
///
/// The oscillator `(-hbar^2/(2 mu) Delta_8 - mu omega^2 u^2 / 2) psi = E psi`
/// maps onto the Coulomb problem with coupling `e^2 = E / 4` at energy
/// `eps = mu omega^2 / 8`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DualityParams {
    pub omega: f64,
    pub energy: f64,
    pub eps: f64,
    pub e2: f64,
    pub mu: f64,
    pub hbar: f64,
}

impl DualityParams {
    /// The oscillator dual to a Coulomb problem.
    pub fn from_coulomb(p: &PhysParams) -> Self {
        let eps = p.energy();
        DualityParams {
            omega: (8.0 * eps / p.mu).sqrt(),
            energy: 4.0 * p.e2,
            eps,
            e2: p.e2,
            mu: p.mu,
            hbar: p.hbar,
        }
    }

    /// The Coulomb problem dual to an oscillator.
    pub fn from_oscillator(omega: f64, energy: f64, mu: f64, hbar: f64) -> Result<Self> {
        if !(omega > 0.0 && omega.is_finite()) {
            return Err(Error::Params("omega must be positive and finite"));
        }
        if !(energy >= 0.0 && energy.is_finite()) {
            return Err(Error::Params("oscillator energy must be non-negative"));
        }
        if !(mu > 0.0 && mu.is_finite() && hbar > 0.0 && hbar.is_finite()) {
            return Err(Error::Params("mu and hbar must be positive and finite"));
        }
        Ok(DualityParams {
            omega,
            energy,
            eps: mu * omega * omega / 8.0,
            e2: energy / 4.0,
            mu,
            hbar,
        })
    }

    /// The Coulomb-side physical parameters.
    pub fn coulomb(&self) -> Result<PhysParams> {
        PhysParams::from_physical(
            self.hbar,
            self.mu,
            self.e2,
            (2.0 * self.mu * self.eps).sqrt() / self.hbar,
        )
    }

    /// Largest relative violation of `eps = mu omega^2 / 8` and `E = 4 e^2`.
    pub fn consistency(&self) -> f64 {
        let d1 = (self.eps - self.mu * self.omega * self.omega / 8.0).abs() / self.eps.abs().max(f64::MIN_POSITIVE);
        let d2 = (self.energy - 4.0 * self.e2).abs() / self.energy.abs().max(f64::MIN_POSITIVE);
        d1.max(d2)
    }
}

/// Residual of the eight-dimensional repulsive-oscillator equation for
/// `psi(u) = psi5(x(u))`.
///
/// The terms are `-hbar^2/(2 mu) Delta_8 psi`, `-mu omega^2 |u|^2 psi / 2`
/// and `-E psi`; the Laplacian is taken by finite differences of the
/// composite. Only the `J = 0` sector, where the fiber factor is constant,
/// has a pull-back of this form; any other `j` is rejected.
pub fn duality_residual<F: ScalarField<5>>(psi5: &F, p: &DualityParams, j: HalfInt, u: &R8Point) -> Result<Residual> {
    if j != HalfInt::ZERO {
        return Err(Error::FiberSpin);
    }
    let u2 = u.norm_sq();
    if u2 == 0.0 {
        return Err(Error::Origin);
    }
    let f8 = |v: &[f64; 8]| psi5.value(&hurwitz_map(&R8Point::new(*v)).x);
    let lap = numdiff::laplacian(&f8, &u.u, fd_step(&u.u, STEP_SECOND));
    let psi = f8(&u.u);
    let kin = p.hbar * p.hbar / (2.0 * p.mu);
    Ok(Residual::from_terms(&[
        -lap.value * kin,
        -psi * (p.mu * p.omega * p.omega * u2 / 2.0),
        -psi * p.energy,
    ]))
}

/// Residual of the five-dimensional member of the dual tower,
/// `[-hbar^2/(2 mu) Delta_5 - e^2/r + hbar^2 J(J+1)/(2 mu r^2)] psi = eps psi`,
/// at `x`, with the Laplacian by finite differences.
pub fn tower_residual<F: ScalarField<5>>(psi5: &F, p: &DualityParams, j: HalfInt, x: &R5Point) -> Result<Residual> {
    if j.twice() < 0 {
        return Err(Error::Label("fiber spin J must be non-negative"));
    }
    let r = x.r();
    if r == 0.0 {
        return Err(Error::Origin);
    }
    let f = |v: &[f64; 5]| psi5.value(v);
    let lap = numdiff::laplacian(&f, &x.x, fd_step(&x.x, STEP_SECOND));
    let psi = f(&x.x);
    let kin = p.hbar * p.hbar / (2.0 * p.mu);
    Ok(Residual::from_terms(&[
        -lap.value * kin,
        -psi * (p.e2 / r),
        psi * (kin * j.casimir() / (r * r)),
        -psi * p.eps,
    ]))
}
