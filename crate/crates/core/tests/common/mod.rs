#![allow(clippy::excessive_precision)]

//! Independent reference implementations used only by the test suites.
//!
//! None of these share code paths with the crate under test: gamma is the
//! Lanczos approximation (the crate uses Stirling + recurrence), Kummer's
//! function is obtained from its Euler integral by tanh-sinh quadrature or
//! by integrating Kummer's ODE with an adaptive Dormand-Prince scheme.
#![allow(dead_code)]

use num_complex::Complex64 as C;
use std::f64::consts::PI;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Gamma(z) by Lanczos (g = 7, n = 9) with reflection for Re z < 1/2.
pub fn lanczos_gamma(z: C) -> C {
    if z.re < 0.5 {
        let s = (z * PI).sin();
        return C::new(PI, 0.0) / (s * lanczos_gamma(C::new(1.0, 0.0) - z));
    }
    let z = z - 1.0;
    let mut acc = C::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powc(z + 0.5) * (-t).exp() * acc
}

/// tanh-sinh quadrature of `f` over (0, 1); `f` receives `(t, 1 - t)`
/// with the complement computed without cancellation.
pub fn tanh_sinh<F: Fn(f64, f64) -> C>(f: F, h: f64, s_max: f64) -> C {
    let n = (s_max / h).ceil() as i64;
    let mut acc = C::new(0.0, 0.0);
    for j in -n..=n {
        let s = j as f64 * h;
        let u = PI * s.sinh();
        let t = 1.0 / (1.0 + (-u).exp());
        let tc = 1.0 / (1.0 + u.exp());
        if t == 0.0 || tc == 0.0 {
            continue;
        }
        let w = PI * s.cosh() * t * tc;
        acc += f(t, tc) * w;
    }
    acc * h
}

/// `1F1(a; c; z)` from the Euler integral; needs `Re c > Re a > 0`.
pub fn kummer_by_quadrature(a: C, c: C, z: C) -> C {
    assert!(c.re > a.re && a.re > 0.0);
    let integral = tanh_sinh(
        |t, tc| (z * t).exp() * ((a - 1.0) * t.ln()).exp() * ((c - a - 1.0) * tc.ln()).exp(),
        1.0 / 256.0,
        4.5,
    );
    lanczos_gamma(c) / (lanczos_gamma(a) * lanczos_gamma(c - a)) * integral
}

/// Adaptive Dormand-Prince 5(4) for a complex system `y' = f(t, y)` from
/// `t0` to `t1`.
pub fn dopri5<const N: usize, F: Fn(f64, &[C; N]) -> [C; N]>(f: F, t0: f64, y0: [C; N], t1: f64, tol: f64) -> [C; N] {
    const A: [[f64; 6]; 6] = [
        [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
        [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
        [
            19372.0 / 6561.0,
            -25360.0 / 2187.0,
            64448.0 / 6561.0,
            -212.0 / 729.0,
            0.0,
            0.0,
        ],
        [
            9017.0 / 3168.0,
            -355.0 / 33.0,
            46732.0 / 5247.0,
            49.0 / 176.0,
            -5103.0 / 18656.0,
            0.0,
        ],
        [
            35.0 / 384.0,
            0.0,
            500.0 / 1113.0,
            125.0 / 192.0,
            -2187.0 / 6784.0,
            11.0 / 84.0,
        ],
    ];
    const CN: [f64; 7] = [0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
    const B5: [f64; 7] = [
        35.0 / 384.0,
        0.0,
        500.0 / 1113.0,
        125.0 / 192.0,
        -2187.0 / 6784.0,
        11.0 / 84.0,
        0.0,
    ];
    const B4: [f64; 7] = [
        5179.0 / 57600.0,
        0.0,
        7571.0 / 16695.0,
        393.0 / 640.0,
        -92097.0 / 339200.0,
        187.0 / 2100.0,
        1.0 / 40.0,
    ];

    let mut t = t0;
    let mut y = y0;
    let dir = (t1 - t0).signum();
    let mut h = dir * 1e-3 * (t1 - t0).abs().max(1.0);
    let zero = [C::new(0.0, 0.0); N];
    while (t1 - t) * dir > 0.0 {
        if (t + h - t1) * dir > 0.0 {
            h = t1 - t;
        }
        let mut k = [zero; 7];
        k[0] = f(t, &y);
        for s in 1..7 {
            let mut ys = y;
            for (j, kj) in k.iter().enumerate().take(s) {
                let coef = A[s - 1][j];
                if coef != 0.0 {
                    for i in 0..N {
                        ys[i] += kj[i] * (h * coef);
                    }
                }
            }
            k[s] = f(t + CN[s] * h, &ys);
        }
        let mut y5 = y;
        let mut err = 0.0f64;
        for i in 0..N {
            let mut d5 = C::new(0.0, 0.0);
            let mut d4 = C::new(0.0, 0.0);
            for s in 0..7 {
                d5 += k[s][i] * B5[s];
                d4 += k[s][i] * B4[s];
            }
            y5[i] += d5 * h;
            let scale = tol * (1.0 + y[i].norm().max(y5[i].norm()));
            err = err.max(((d5 - d4) * h).norm() / scale);
        }
        if err <= 1.0 {
            t += h;
            y = y5;
        }
        let factor = if err == 0.0 {
            5.0
        } else {
            (0.9 * err.powf(-0.2)).clamp(0.2, 5.0)
        };
        h *= factor;
    }
    y
}

/// `1F1(a; c; z)` by integrating Kummer's equation `z w'' + (c - z) w' - a w = 0`
/// along the ray from the origin. The start values at `|z| = 1e-3` come from
/// a few terms of the power series.
pub fn kummer_by_ode(a: C, c: C, z: C) -> C {
    let dir = z / z.norm();
    let t0 = 1e-3;
    let z0 = dir * t0;
    // F and F' at z0 from the leading series terms (|z0| tiny)
    let mut f0 = C::new(1.0, 0.0);
    let mut df0 = C::new(0.0, 0.0);
    let mut term = C::new(1.0, 0.0);
    for n in 0..12 {
        let nf = n as f64;
        // d/dz of term_{n+1} = (n+1) term_{n+1} / z
        term = term * (a + nf) * z0 / ((c + nf) * (nf + 1.0));
        f0 += term;
        df0 += term * (nf + 1.0) / z0;
    }
    let rhs = |t: f64, y: &[C; 2]| {
        let zz = dir * t;
        let second = (a * y[0] - (c - zz) * y[1]) / zz;
        [dir * y[1], dir * second]
    };
    dopri5(rhs, t0, [f0, df0], z.norm(), 1e-14)[0]
}

/// Power-series solution of the Coulomb radial equation
/// `R'' + 4R'/r + (k^2 + 2/(a r) - lam(lam+3)/r^2) R = 0`, `R = r^lam sum b_j r^j`,
/// normalised so that `b_0 = lead`. Returns `(R, R')`.
pub fn radial_series(k: f64, inv_a: f64, lam: u32, lead: f64, r: f64) -> (f64, f64) {
    let lamf = lam as f64;
    let mut b = vec![lead];
    let mut value = 0.0;
    let mut deriv = 0.0;
    let mut j = 0usize;
    loop {
        if j > 0 {
            let jf = j as f64;
            let prev = b[j - 1];
            let prev2 = if j >= 2 { b[j - 2] } else { 0.0 };
            b.push(-(2.0 * inv_a * prev + k * k * prev2) / (jf * (jf + 2.0 * lamf + 3.0)));
        }
        let p = lamf + j as f64;
        let term = b[j] * r.powf(p);
        value += term;
        deriv += b[j] * p * r.powf(p - 1.0);
        if j > 20 && term.abs() < 1e-18 * value.abs() && b[j - 1].abs() * r.powf(p - 1.0) < 1e-18 * value.abs() {
            break;
        }
        j += 1;
        assert!(j < 2000, "radial series did not converge");
    }
    (value, deriv)
}

/// Coulomb radial function from the series start values plus ODE
/// integration out to `r`.
pub fn radial_by_ode(k: f64, inv_a: f64, lam: u32, lead: f64, r: f64) -> f64 {
    let r0 = 0.5f64.min(r);
    let (v0, d0) = radial_series(k, inv_a, lam, lead, r0);
    if r <= r0 {
        return v0;
    }
    let centrifugal = (lam * (lam + 3)) as f64;
    let rhs = |t: f64, y: &[C; 2]| {
        let acc = -(y[1] * (4.0 / t)) - y[0] * (k * k + 2.0 * inv_a / t - centrifugal / (t * t));
        [y[1], acc]
    };
    dopri5(rhs, r0, [C::new(v0, 0.0), C::new(d0, 0.0)], r, 1e-14)[0].re
}
