//! Central finite differences with one step of Richardson extrapolation.
//!
//! Each routine evaluates the stencil at `h` and `h/2` and combines them as
//! `(4 D(h/2) - D(h)) / 3`, which is fourth order. The difference between the
//! extrapolated value and `D(h/2)` is returned as the error estimate; it is
//! the error of the unextrapolated stencil and so bounds the extrapolated one
//! from above.

use crate::ComplexScalar as C;

/// Default step for first derivatives, in units of the coordinate scale.
pub const STEP_FIRST: f64 = 1e-3;
/// Default step for second and mixed derivatives.
pub const STEP_SECOND: f64 = 2e-3;

/// An extrapolated derivative and its error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: C,
    pub error: f64,
}

fn extrapolate(coarse: C, fine: C) -> Estimate {
    let value = (fine * 4.0 - coarse) / 3.0;
    Estimate {
        value,
        error: (value - fine).norm(),
    }
}

pub fn first<F: Fn(f64) -> C>(f: F, x: f64, h: f64) -> Estimate {
    let d = |h: f64| (f(x + h) - f(x - h)) / (2.0 * h);
    extrapolate(d(h), d(h * 0.5))
}

pub fn second<F: Fn(f64) -> C>(f: F, x: f64, h: f64) -> Estimate {
    let f0 = f(x);
    let d = |h: f64| (f(x + h) - f0 * 2.0 + f(x - h)) / (h * h);
    extrapolate(d(h), d(h * 0.5))
}

pub fn mixed<F: Fn(f64, f64) -> C>(f: F, x: f64, y: f64, hx: f64, hy: f64) -> Estimate {
    let d = |s: f64| {
        let (a, b) = (hx * s, hy * s);
        (f(x + a, y + b) - f(x + a, y - b) - f(x - a, y + b) + f(x - a, y - b)) / (4.0 * a * b)
    };
    extrapolate(d(1.0), d(0.5))
}

/// Partial derivative along axis `i` of a function on `R^N`.
pub fn partial<const N: usize, F: Fn(&[f64; N]) -> C>(f: &F, u: &[f64; N], i: usize, h: f64) -> Estimate {
    first(
        |t| {
            let mut v = *u;
            v[i] = t;
            f(&v)
        },
        u[i],
        h,
    )
}

/// Second partial `d^2 f / du_i du_j`.
pub fn second_partial<const N: usize, F: Fn(&[f64; N]) -> C>(
    f: &F,
    u: &[f64; N],
    i: usize,
    j: usize,
    h: f64,
) -> Estimate {
    if i == j {
        second(
            |t| {
                let mut v = *u;
                v[i] = t;
                f(&v)
            },
            u[i],
            h,
        )
    } else {
        mixed(
            |s, t| {
                let mut v = *u;
                v[i] = s;
                v[j] = t;
                f(&v)
            },
            u[i],
            u[j],
            h,
            h,
        )
    }
}

/// Cartesian Laplacian on `R^N`; the error is the sum of the per-axis estimates.
pub fn laplacian<const N: usize, F: Fn(&[f64; N]) -> C>(f: &F, u: &[f64; N], h: f64) -> Estimate {
    let mut value = C::new(0.0, 0.0);
    let mut error = 0.0;
    for i in 0..N {
        let e = second_partial(f, u, i, i, h);
        value += e.value;
        error += e.error;
    }
    Estimate { value, error }
}
