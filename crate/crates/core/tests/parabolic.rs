#![allow(clippy::needless_range_loop, clippy::excessive_precision)]

mod common;

use common::{kummer_by_quadrature, lanczos_gamma};
use coulomb5_core::hurwitz::R5Point;
use coulomb5_core::hyperspherical::{to_hyperspherical, HyperPoint};
use coulomb5_core::linalg::determinant;
use coulomb5_core::numdiff;
use coulomb5_core::parabolic::*;
use coulomb5_core::{ComplexScalar as C, Error, HalfInt, PhysParams};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

fn h(twice: i32) -> HalfInt {
    HalfInt::from_twice(twice)
}

fn sep(sigma: f64) -> SeparationConstant {
    SeparationConstant::from_sigma(sigma).unwrap()
}

fn random_point(rng: &mut ChaCha8Rng, max: f64) -> ParaPoint {
    ParaPoint::new(
        rng.gen_range(0.3..max),
        rng.gen_range(0.3..max),
        rng.gen_range(0.0..6.2),
        rng.gen_range(0.3..2.8),
        rng.gen_range(0.0..12.5),
    )
    .unwrap()
}

/// `Phi` from the Euler-integral oracle for `F`.
fn phi_oracle(k: f64, inv_a: f64, sigma: f64, l: f64, x: f64) -> C {
    let a = C::new(l + 1.0, 0.5 * inv_a / k + sigma);
    let c = C::new(2.0 * l + 2.0, 0.0);
    let f = kummer_by_quadrature(a, c, C::new(0.0, k * x));
    let power = C::new(0.0, k * x).powf(l);
    power / lanczos_gamma(c) * C::new(0.0, -0.5 * k * x).exp() * f
}

// ------------------------------------------------------------ coordinates

#[test]
fn coordinate_examples() {
    assert_eq!(
        to_parabolic(&R5Point::new([2.0, 0.0, 0.0, 0.0, 0.0])),
        Err(Error::ParabolicAxis { xi: 4.0, eta: 0.0 })
    );
    assert_eq!(
        to_parabolic(&R5Point::new([-2.0, 0.0, 0.0, 0.0, 0.0])),
        Err(Error::ParabolicAxis { xi: 0.0, eta: 4.0 })
    );
    assert_eq!(
        to_parabolic(&R5Point::new([0.0; 5])),
        Err(Error::ParabolicAxis { xi: 0.0, eta: 0.0 })
    );
    // xi = 2, eta = 2, beta = pi: x0 = 0, x2 + i x1 = 2
    let x = from_parabolic(&ParaPoint::new(2.0, 2.0, 0.0, PI, 0.0).unwrap());
    let expect = [0.0, 0.0, 2.0, 0.0, 0.0];
    for i in 0..5 {
        assert!((x.x[i] - expect[i]).abs() < 1e-15, "{:?}", x.x);
    }
    assert!(ParaPoint::new(-1.0, 1.0, 0.0, 1.0, 0.0).is_err());
    assert!(ParaPoint::new(1.0, 1.0, 7.0, 1.0, 0.0).is_err());
}

fn round_trip_error(x: [f64; 5]) -> f64 {
    let p = R5Point::new(x);
    let pt = to_parabolic(&p).unwrap();
    assert!(
        ParaPoint::new(pt.xi, pt.eta, pt.alpha, pt.beta, pt.gamma).is_ok(),
        "{pt:?}"
    );
    let back = from_parabolic(&pt);
    (0..5).map(|i| (back.x[i] - x[i]).abs()).fold(0.0, f64::max) / p.r()
}

#[test]
fn coordinate_round_trip_sweep() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for _ in 0..10_000 {
        let x: [f64; 5] = std::array::from_fn(|_| rng.gen_range(-3.0..3.0));
        assert!(round_trip_error(x) <= 1e-12);
    }
    // nearly on the axis, both directions: eta (resp. xi) keeps its digits
    let x = [1.0, 0.0, 1e-9, 0.0, 0.0];
    let pt = to_parabolic(&R5Point::new(x)).unwrap();
    assert!((pt.eta - 1e-18 / (1.0 + (1.0f64 + 1e-18).sqrt())).abs() <= 1e-30);
    let pt = to_parabolic(&R5Point::new([-1.0, 0.0, 0.0, 1e-9, 0.0])).unwrap();
    assert!((pt.xi / 5e-19 - 1.0).abs() <= 1e-12);
}

#[test]
fn agrees_with_hyperspherical_angles() {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    for _ in 0..1000 {
        let x: [f64; 5] = std::array::from_fn(|_| rng.gen_range(-3.0..3.0));
        let p = to_parabolic(&R5Point::new(x)).unwrap();
        let hs: HyperPoint = to_hyperspherical(&R5Point::new(x)).unwrap();
        let (c, r) = (hs.theta.cos(), hs.r);
        assert!((p.xi - r * (1.0 + c)).abs() <= 1e-12 * r);
        assert!((p.eta - r * (1.0 - c)).abs() <= 1e-12 * r);
        assert!((p.r() - r).abs() <= 1e-12 * r);
        assert_eq!((p.alpha, p.beta, p.gamma), (hs.alpha, hs.beta, hs.gamma));
    }
}

proptest! {
    #[test]
    fn parabolic_round_trip(x in prop::array::uniform5(-10.0f64..10.0)) {
        let rho = (x[1] * x[1] + x[2] * x[2] + x[3] * x[3] + x[4] * x[4]).sqrt();
        prop_assume!(rho > 1e-6);
        prop_assert!(round_trip_error(x) <= 1e-12);
    }

    #[test]
    fn exchange_reflects_x0(xi in 0.01f64..5.0, eta in 0.01f64..5.0, beta in 0.0f64..3.1) {
        let a = from_parabolic(&ParaPoint::new(xi, eta, 1.0, beta, 2.0).unwrap());
        let b = from_parabolic(&ParaPoint::new(eta, xi, 1.0, beta, 2.0).unwrap());
        prop_assert_eq!(a.x[0], -b.x[0]);
        for i in 1..5 {
            prop_assert_eq!(a.x[i], b.x[i]);
        }
    }
}

#[test]
fn volume_element_is_the_jacobian() {
    let mut rng = ChaCha8Rng::seed_from_u64(35);
    for _ in 0..20 {
        let pt = random_point(&mut rng, 3.0);
        let q = [pt.xi, pt.eta, pt.alpha, pt.beta, pt.gamma];
        let mut m = [[0.0; 5]; 5];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                let f = |v: &[f64; 5]| {
                    let p = ParaPoint {
                        xi: v[0],
                        eta: v[1],
                        alpha: v[2],
                        beta: v[3],
                        gamma: v[4],
                    };
                    C::new(from_parabolic(&p).x[i], 0.0)
                };
                *entry = numdiff::partial(&f, &q, j, 1e-3).value.re;
            }
        }
        let dv = volume_element(&pt);
        assert!((determinant(m).abs() - dv).abs() <= 1e-10 * dv, "{pt:?}");
    }
}

// ---------------------------------------------------------- Phi functions

#[test]
fn phi_matches_integral_oracle() {
    let p = PhysParams::natural(1.0, 1.0).unwrap();
    let got = phi_function(&p, &sep(0.5), h(2), 3.0).unwrap();
    let want = phi_oracle(1.0, 1.0, 0.5, 1.0, 3.0);
    assert!((got - want).norm() <= 1e-11 * want.norm(), "{got} vs {want}");
    // frozen from the oracle
    let frozen = C::new(PHI_FROZEN.0, PHI_FROZEN.1);
    assert!((got - frozen).norm() <= 1e-12 * frozen.norm(), "{got}");

    for (k, inv_a, sigma, l2, x) in [
        (1.0, 0.5, 0.0, 0, 0.4),
        (0.7, 1.0, -0.8, 1, 2.5),
        (2.0, 0.1, 1.3, 3, 6.0),
        (1.0, 2.0, 0.3, 4, 10.0),
        (1.5, 0.0, -0.2, 2, 7.0),
    ] {
        let p = PhysParams::natural(1.0 / inv_a, k).unwrap();
        let got = phi_function(&p, &sep(sigma), h(l2), x).unwrap();
        let want = phi_oracle(k, inv_a, sigma, f64::from(l2) / 2.0, x);
        assert!(
            (got - want).norm() <= 1e-10 * want.norm(),
            "{k} {inv_a} {sigma} {l2} {x}: {got} vs {want}"
        );
    }
}

/// `Phi(3)` at `a = k = 1`, `sigma = 1/2`, `L = 1`; purely imaginary since
/// `Phi i^-L` is real.
const PHI_FROZEN: (f64, f64) = (0.0, 1.649_744_911_662_357_48e-1);

#[test]
fn phi_phase_is_i_to_the_l() {
    // For real Omega, Phi(x) i^-L is real.
    let p = PhysParams::natural(1.3, 0.8).unwrap();
    for l2 in 0..5 {
        let l = h(l2);
        for x in [0.2, 1.5, 9.0, 40.0, 150.0] {
            let v = phi_function(&p, &sep(-0.6), l, x).unwrap();
            let rot = v * C::from_polar(1.0, -PI / 2.0 * l.value());
            assert!(rot.im.abs() <= 1e-10 * rot.norm().max(1e-300), "L {l2} x {x}: {v}");
        }
    }
}

#[test]
fn phi_solves_the_xi_equation() {
    for (a, k) in [(1.0, 1.0), (2.0, 0.5), (0.5, 2.0)] {
        let p = PhysParams::natural(a, k).unwrap();
        for l2 in 0..4 {
            for sigma in [-1.0, 0.0, 0.7] {
                for x in [0.3, 1.0, 4.0, 12.0, 35.0] {
                    let r = phi_ode_residual(&p, &sep(sigma), h(l2), Branch::Xi, x).unwrap();
                    assert!(r.relative() <= 1e-7, "a {a} k {k} L {l2} sigma {sigma} x {x}: {r:?}");
                }
            }
        }
    }
}

#[test]
fn negated_constant_solves_the_eta_equation() {
    let p = PhysParams::natural(1.0, 1.0).unwrap();
    let s = sep(0.8);
    for x in [0.5, 3.0, 20.0] {
        // the eta branch evaluates Phi(x; -sigma)
        let r = phi_ode_residual(&p, &s, h(2), Branch::Eta, x).unwrap();
        assert!(r.relative() <= 1e-7, "{r:?}");
        // and the map is not trivial: Phi(x; -sigma) differs from Phi(x; sigma)
        let plus = phi_function(&p, &s, h(2), x).unwrap();
        let minus = phi_function(&p, &s.negated(), h(2), x).unwrap();
        assert!((plus - minus).norm() > 1e-3 * plus.norm());
    }
}

#[test]
fn phi_ode_rejects_origin() {
    let p = PhysParams::natural(1.0, 1.0).unwrap();
    assert!(phi_ode_residual(&p, &sep(0.0), h(0), Branch::Xi, 0.0).is_err());
    assert!(phi_function(&p, &sep(0.0), h(0), -1.0).is_err());
}

/// Largest `|f|` over one period `2 pi / k` starting at `x0`.
fn window_max<F: Fn(f64) -> f64>(f: F, x0: f64, k: f64) -> f64 {
    (0..400)
        .map(|i| f(x0 + 2.0 * PI / k * f64::from(i) / 400.0))
        .fold(0.0, f64::max)
}

#[test]
fn phi_envelope_is_reached() {
    for (inv_a, sigma, l2) in [(0.5, 0.3, 0), (1.0, -0.7, 1), (0.2, 0.0, 2), (1.0, 1.2, 3)] {
        let p = PhysParams::natural(1.0 / inv_a, 1.0).unwrap();
        let s = sep(sigma);
        let mut last = f64::INFINITY;
        for x0 in [200.0, 800.0, 3200.0] {
            let env = phi_envelope(&p, &s, h(l2), x0).unwrap();
            let peak = window_max(|x| phi_function(&p, &s, h(l2), x).unwrap().norm() * x, x0, p.k) / x0;
            let err = (peak / env - 1.0).abs();
            assert!(err <= 20.0 / x0, "x {x0}: peak {peak} env {env}");
            assert!(err < last || err < 1e-3);
            last = err;
        }
    }
}

#[test]
fn normalised_product_has_a_universal_envelope() {
    // xi eta |C Phi(xi; sigma) Phi(eta; -sigma)| -> 4 sqrt(hbar^2 k^3/(2 pi mu)) / k^2
    // for every sigma and L: the normalisation fixes the asymptotic amplitude.
    let p = PhysParams::from_physical(1.1, 0.9, 0.6, 1.4).unwrap();
    let want = 4.0 * (p.hbar * p.hbar * p.k.powi(3) / (2.0 * PI * p.mu)).sqrt() / (p.k * p.k);
    for (sigma, l2) in [(0.0, 0), (0.9, 1), (-1.5, 2), (0.4, 4)] {
        let s = sep(sigma);
        let c = normalization(&p, &s, h(l2)).unwrap().norm();
        let (x1, x2) = (2000.0, 2500.0);
        let got =
            c * phi_envelope(&p, &s, h(l2), x1).unwrap() * phi_envelope(&p, &s.negated(), h(l2), x2).unwrap() * x1 * x2;
        assert!(
            (got - want).abs() <= 1e-12 * want,
            "sigma {sigma} L {l2}: {got} vs {want}"
        );
    }
}

#[test]
fn normalization_examples() {
    // L = 0, sigma = 0, a = k = 1: sqrt(1/(2 pi)) e^{pi/2} |Gamma(1 - i/2)|^2
    let p = PhysParams::natural(1.0, 1.0).unwrap();
    let g = lanczos_gamma(C::new(1.0, -0.5)).norm_sqr();
    let want = (1.0 / (2.0 * PI)).sqrt() * (PI / 2.0).exp() * g;
    let got = normalization(&p, &sep(0.0), h(0)).unwrap();
    assert!((got - C::new(want, 0.0)).norm() <= 1e-13 * want, "{got} vs {want}");
    // (-1)^L = e^{-i pi L}
    let half = normalization(&p, &sep(0.0), h(1)).unwrap();
    assert!(half.re.abs() <= 1e-15 * half.norm() && half.im < 0.0);
    let one = normalization(&p, &sep(0.0), h(2)).unwrap();
    assert!(one.re < 0.0 && one.im.abs() <= 1e-15 * one.norm());
    // symmetric under sigma -> -sigma
    let a = normalization(&p, &sep(0.7), h(3)).unwrap();
    let b = normalization(&p, &sep(-0.7), h(3)).unwrap();
    assert!((a - b).norm() <= 1e-14 * a.norm());
}

// -------------------------------------------------------------- the basis

#[test]
fn scalar_basis_ignores_euler_angles() {
    let p = PhysParams::natural(1.0, 1.0).unwrap();
    let label = ParaLabel::scalar(sep(0.4));
    let a = parabolic_basis(&p, &label, &ParaPoint::new(1.2, 2.3, 0.0, 0.5, 0.0).unwrap()).unwrap();
    let b = parabolic_basis(&p, &label, &ParaPoint::new(1.2, 2.3, 4.0, 2.5, 9.0).unwrap()).unwrap();
    assert_eq!(a, b);
    // and the axis value is the continuous limit
    let on = parabolic_basis_at(&p, &label, &R5Point::new([1.5, 0.0, 0.0, 0.0, 0.0])).unwrap();
    let near = parabolic_basis_at(&p, &label, &R5Point::new([1.5, 1e-7, 0.0, 0.0, 0.0])).unwrap();
    assert!((on - near).norm() <= 1e-10 * on.norm());
    let spin = ParaLabel::new(sep(0.4), h(2), h(0), h(0)).unwrap();
    assert!(matches!(
        parabolic_basis_at(&p, &spin, &R5Point::new([1.5, 0.0, 0.0, 0.0, 0.0])),
        Err(Error::ParabolicAxis { .. })
    ));
}

#[test]
fn radial_part_is_real() {
    // C Phi(xi) Phi(eta) is real for real Omega: the i^{2L} of the two Phi
    // factors is cancelled by e^{-i pi L}.
    let p = PhysParams::natural(0.8, 1.1).unwrap();
    for l2 in 0..5 {
        let label = ParaLabel::new(sep(0.3), h(l2), h(l2), h(l2)).unwrap();
        let pt = ParaPoint::new(2.0, 3.5, 0.0, 0.0, 0.0).unwrap();
        let v = parabolic_basis(&p, &label, &pt).unwrap();
        assert!(v.im.abs() <= 1e-12 * v.norm(), "L {l2}: {v}");
    }
}

#[test]
fn exchange_symmetry() {
    // (xi <-> eta, Omega <-> -Omega) maps the basis to itself
    let p = PhysParams::natural(1.0, 1.2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(36);
    for l2 in 0..3 {
        let la = ParaLabel::new(sep(0.6), h(l2), h(-l2), h(l2)).unwrap();
        let lb = ParaLabel::new(sep(-0.6), h(l2), h(-l2), h(l2)).unwrap();
        for _ in 0..10 {
            let pt = random_point(&mut rng, 8.0);
            let swapped = ParaPoint {
                xi: pt.eta,
                eta: pt.xi,
                ..pt
            };
            let a = parabolic_basis(&p, &la, &pt).unwrap();
            let b = parabolic_basis(&p, &lb, &swapped).unwrap();
            assert!((a - b).norm() <= 1e-13 * a.norm().max(1e-300));
        }
    }
}

#[test]
fn basis_solves_the_parabolic_equation() {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    for (a, k) in [(1.0, 1.0), (2.0, 0.7)] {
        let p = PhysParams::natural(a, k).unwrap();
        for (sigma, l2, m2, mp2) in [(0.0, 0, 0, 0), (0.5, 1, 1, -1), (-0.9, 2, 0, 2), (1.2, 2, -2, 0)] {
            let label = ParaLabel::new(sep(sigma), h(l2), h(m2), h(mp2)).unwrap();
            for _ in 0..8 {
                let pt = random_point(&mut rng, 10.0);
                let r = pde_residual(&p, &label, &pt).unwrap();
                assert!(r.relative() <= 1e-6, "{label:?} {pt:?}: {r:?}");
            }
        }
    }
}

#[test]
fn basis_agrees_with_cartesian_laplacian() {
    // Independent of the parabolic form of the Laplacian: differentiate the
    // Cartesian evaluation directly.
    let p = PhysParams::natural(1.0, 1.0).unwrap();
    let label = ParaLabel::new(sep(0.3), h(2), h(2), h(0)).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(38);
    for _ in 0..10 {
        let pt = random_point(&mut rng, 6.0);
        let x = from_parabolic(&pt).x;
        let f = |v: &[f64; 5]| parabolic_basis_at(&p, &label, &R5Point::new(*v)).unwrap();
        let lap = numdiff::laplacian(&f, &x, 4e-3).value;
        let psi = f(&x);
        let r = (x.iter().map(|v| v * v).sum::<f64>()).sqrt();
        let res = lap * 0.5 + psi * (p.e2 / r + p.energy());
        let scale = lap.norm() * 0.5 + psi.norm() * (p.e2 / r + p.energy());
        assert!(res.norm() <= 1e-6 * scale, "{pt:?}: {res} / {scale}");
    }
}

#[test]
fn pde_residual_rejects_axis() {
    let p = PhysParams::natural(1.0, 1.0).unwrap();
    let label = ParaLabel::scalar(sep(0.0));
    assert!(matches!(
        pde_residual(&p, &label, &ParaPoint::new(0.0, 1.0, 0.0, 1.0, 0.0).unwrap()),
        Err(Error::ParabolicAxis { .. })
    ));
    assert!(pde_residual(&p, &label, &ParaPoint::new(1.0, 1.0, 0.0, 0.0, 0.0).unwrap()).is_err());
}

#[test]
fn separation_identity_for_trial_functions() {
    // Neither trial function solves anything; the identity is algebraic.
    let p = PhysParams::natural(1.0, 1.0).unwrap();
    let phi1 = |x: f64| C::new(x * x * (-0.3 * x).exp(), 0.2 * x.sin());
    let phi2 = |x: f64| C::new(1.0 / (1.0 + x), x.cos());
    let mut rng = ChaCha8Rng::seed_from_u64(39);
    for (sigma, l2, m2, mp2) in [(0.0, 0, 0, 0), (0.7, 1, -1, 1), (-0.4, 2, 2, 0), (1.1, 3, 1, -1)] {
        for _ in 0..6 {
            let pt = random_point(&mut rng, 6.0);
            let r = separation_identity(&p, sigma, h(l2), h(m2), h(mp2), phi1, phi2, &pt).unwrap();
            assert!(r.relative() <= 1e-6, "{pt:?}: {r:?}");
            assert!(r.scale > 1e-3, "identity must not be trivially zero");
        }
    }
}

#[test]
fn same_energy_as_hyperspherical_basis() {
    // Both bases are parameterised by k alone: eps = hbar^2 k^2 / (2 mu).
    let p = PhysParams::from_physical(1.3, 0.7, 0.4, 2.0).unwrap();
    assert!((p.energy() - 1.3f64 * 1.3 * 4.0 / 1.4).abs() <= 1e-14 * p.energy());
}
