//! Acceptance criteria, one printed line per criterion.
//!
//! Run with `cargo test -p coulomb5 --test acceptance -- --nocapture` to see
//! the report. Every bound below is the one the criterion states; the
//! residual checks reuse the `verify` suites, whose samples depend only on
//! the seed.
//!
//! Criterion 5 asks for a leading-order asymptotic error of at most 1e-2 at
//! kr = 200 for every lambda <= 3. The first omitted term of the asymptotic
//! series has size |(lam+2+i eta)(i eta-lam-1)| / (2kr), which is above 1e-2
//! at kr = 200 for every lambda >= 1, so no correct implementation meets the
//! bound. The line is printed as FAIL; the test then requires the measured
//! error to be that term to within 10%, which pins down the reason.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use coulomb5::suites::{
    hurwitz_suite, hyperspherical_suite, parabolic_suite, scattering_suite, split_error, split_error_with, Check,
    VerificationReport,
};
use coulomb5::{RunConfig, Table};
use coulomb5_core::hyperspherical::{radial_asymptotic, radial_continuum};
use coulomb5_core::quadrature::GaussLegendre;
use coulomb5_core::scattering::{amplitude_cross_section_ratio, cross_section, AsymptoticConfig};
use coulomb5_core::special::{gegenbauer, kummer_f, kummer_g_asymptotic, log_gamma, wigner_d};
use coulomb5_core::{ComplexScalar as C, HalfInt, PhysParams};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Euler identity, relative to `max(1, |u|^4)`.
const EULER_TOL: f64 = 1e-12;
const EULER_TIME: Duration = Duration::from_secs(1);
const SU2_TOL: f64 = 1e-10;
const SU2_TIME: Duration = Duration::from_secs(1);
const LAPLACIAN_TOL: f64 = 1e-7;
const LAPLACIAN_TIME: Duration = Duration::from_secs(10);
/// Relative to the local second-derivative scale.
const DUALITY_TOL: f64 = 1e-5;
const DUALITY_TIME: Duration = Duration::from_secs(30);
/// Envelope-normalised, at kr = 200.
const RADIAL_ASYMPTOTIC_TOL: f64 = 1e-2;
const RADIAL_ASYMPTOTIC_TIME: Duration = Duration::from_secs(5);
/// Allowed distance of a fitted convergence order from the expected one.
const ORDER_SLACK: f64 = 0.15;
const PHASE_RECURRENCE_TOL: f64 = 1e-12;
const HYPERSPHERICAL_PDE_TOL: f64 = 1e-6;
const HYPERSPHERICAL_PDE_TIME: Duration = Duration::from_secs(30);
const PARABOLIC_ODE_TOL: f64 = 1e-7;
const PARABOLIC_PDE_TOL: f64 = 1e-6;
const PARABOLIC_TIME: Duration = Duration::from_secs(30);
const SCATTERING_PDE_TOL: f64 = 1e-6;
/// Pointwise `|psi - exp(i k x0)|` at `a = 1e6`.
const FREE_LIMIT_TOL: f64 = 1e-5;
/// Relative split error at kr = 400, theta = pi/2, 1/(ak) = 0.5.
const SPLIT_TOL: f64 = 3e-2;
/// Back-scattering cross section at a = k = 1, exact.
const BACK_SCATTERING: f64 = 0.125;
const GAMMA_RECURRENCE_TOL: f64 = 1e-12;
const KUMMER_CONTIGUITY_TOL: f64 = 1e-10;
const ASYMPTOTIC_SPLICE_TOL: f64 = 1e-8;
const GEGENBAUER_TOL: f64 = 1e-12;
const WIGNER_UNITARITY_TOL: f64 = 1e-12;
const SPECIAL_TIME: Duration = Duration::from_secs(5);

/// Coulomb strengths `1/(ak)` swept at `k = 1`.
const STRENGTHS: [f64; 3] = [0.1, 0.5, 1.0];
/// Criteria reported as FAIL because the bound is below the leading
/// truncation error of the asymptotic form itself.
const INFEASIBLE: [u32; 1] = [5];

struct Outcome {
    id: u32,
    title: &'static str,
    pass: bool,
    detail: String,
}

fn line(o: &Outcome) -> String {
    format!(
        "[{}] {:>2}. {}: {}",
        if o.pass { "PASS" } else { "FAIL" },
        o.id,
        o.title,
        o.detail
    )
}

fn config(inv_ak: f64) -> RunConfig {
    RunConfig {
        a: 1.0 / inv_ak,
        ..RunConfig::default()
    }
}

fn params(inv_ak: f64) -> PhysParams {
    config(inv_ak).params().unwrap()
}

/// One suite at every swept strength, with the slowest run time.
fn suite_sweep(run: fn(&RunConfig, &PhysParams) -> VerificationReport) -> (Vec<VerificationReport>, Duration) {
    let reports: Vec<VerificationReport> = STRENGTHS.iter().map(|&s| run(&config(s), &params(s))).collect();
    let slowest = reports.iter().map(|r| r.wall_time).max().unwrap_or_default();
    (reports, slowest)
}

/// Largest residual of the named check over the sweep; `NaN` on any error.
fn worst(reports: &[VerificationReport], name: &str) -> (f64, usize) {
    let checks: Vec<&Check> = reports
        .iter()
        .flat_map(|r| &r.checks)
        .filter(|c| c.name == name)
        .collect();
    assert!(!checks.is_empty(), "no check named {name}");
    let samples = checks.iter().map(|c| c.samples).sum();
    if let Some(c) = checks.iter().find(|c| c.error.is_some()) {
        eprintln!("{name}: {}", c.error.as_deref().unwrap_or_default());
        return (f64::NAN, samples);
    }
    (checks.iter().map(|c| c.max_residual).fold(0.0, f64::max), samples)
}

fn residual_outcome(
    id: u32,
    title: &'static str,
    reports: &[VerificationReport],
    name: &str,
    tol: f64,
    time: Duration,
    limit: Duration,
) -> Outcome {
    let (max, samples) = worst(reports, name);
    let pass = max <= tol && time < limit;
    Outcome {
        id,
        title,
        pass,
        detail: format!("max {max:.3e} <= {tol:e} over {samples} samples ({time:.2?} < {limit:?})"),
    }
}

/// Least-squares slope of `ln y` against `ln x`.
fn log_log_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    for &(x, y) in points {
        let (lx, ly) = (x.ln(), y.ln());
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}

/// `max |R - asymptotic| / (2/r^2)` over one wavelength starting at `kr`.
fn envelope_error(p: &PhysParams, lam: u32, kr: f64) -> f64 {
    (0..64)
        .map(|j| {
            let r = (kr + 2.0 * PI * f64::from(j) / 64.0) / p.k;
            let exact = radial_continuum(p, lam, r).unwrap().re;
            (exact - radial_asymptotic(p, lam, r).unwrap()).abs() / (2.0 / (r * r))
        })
        .fold(0.0, f64::max)
}

/// `|(lam + 2 + i eta)(i eta - lam - 1)| / 2`, the coefficient of `1/(kr)`
/// in the first omitted asymptotic term.
fn first_omitted(eta: f64, lam: u32) -> f64 {
    let l = f64::from(lam);
    (C::new(l + 2.0, eta) * C::new(-l - 1.0, eta)).norm() / 2.0
}

fn radial_asymptotics() -> (Outcome, bool) {
    let start = Instant::now();
    let mut worst_err: f64 = 0.0;
    let mut failing = Vec::new();
    let mut explained = true;
    let mut order_dev: f64 = 0.0;
    for eta in STRENGTHS {
        let p = params(eta);
        for lam in 0..4 {
            let errs: Vec<(f64, f64)> = [200.0, 400.0, 800.0]
                .iter()
                .map(|&kr| (kr, envelope_error(&p, lam, kr)))
                .collect();
            let e200 = errs[0].1;
            worst_err = worst_err.max(e200);
            if e200 > RADIAL_ASYMPTOTIC_TOL {
                let predicted = first_omitted(eta, lam) / 200.0;
                explained &= (e200 - predicted).abs() <= 0.1 * predicted && predicted > RADIAL_ASYMPTOTIC_TOL;
                failing.push(format!("(1/ak {eta}, lam {lam}) {e200:.2e}"));
            }
            order_dev = order_dev.max((-log_log_slope(&errs) - 1.0).abs());
        }
    }
    let time = start.elapsed();
    let rate_ok = order_dev <= ORDER_SLACK;
    let pass = failing.is_empty() && rate_ok && time < RADIAL_ASYMPTOTIC_TIME;
    let mut detail = format!(
        "max {worst_err:.3e} vs bound {RADIAL_ASYMPTOTIC_TOL:e} at kr=200; first-order rate within {order_dev:.3} ({time:.2?} < {RADIAL_ASYMPTOTIC_TIME:?})"
    );
    if !failing.is_empty() {
        detail += &format!(
            "; above bound: {}; each equals the first omitted term |(lam+2+i eta)(i eta-lam-1)|/(2kr): {}",
            failing.join(", "),
            if explained { "yes" } else { "NO" }
        );
    }
    let o = Outcome {
        id: 5,
        title: "radial asymptotics",
        pass,
        detail,
    };
    (o, explained && rate_ok && time < RADIAL_ASYMPTOTIC_TIME)
}

fn decomposition() -> Outcome {
    let p = params(0.5);
    let at_reference = split_error(&p, 400.0, PI / 2.0).unwrap_or(f64::NAN);
    // one correction kept: the first omitted term is of order (k eta)^-2
    let cfg = AsymptoticConfig {
        threshold: 1.0,
        ..AsymptoticConfig::default()
    };
    let pts: Vec<(f64, f64)> = [200.0, 400.0, 800.0, 1600.0, 3200.0, 6400.0]
        .iter()
        .map(|&r| (r, split_error_with(&p, r, PI / 2.0, &cfg).unwrap_or(f64::NAN)))
        .collect();
    let expected = cfg.n_terms as f64 + 1.0;
    let order = -log_log_slope(&pts);
    let pass = at_reference <= SPLIT_TOL && (order - expected).abs() <= ORDER_SLACK;
    Outcome {
        id: 10,
        title: "asymptotic decomposition",
        pass,
        detail: format!(
            "error {at_reference:.3e} <= {SPLIT_TOL:e} at kr=400; fitted order {order:.3} vs {expected} over kr 200..6400"
        ),
    }
}

fn cross_section_point() -> Outcome {
    let p = params(1.0);
    let back = cross_section(&p, PI).unwrap();
    let ratios: Vec<String> = [PI / 6.0, PI / 3.0, PI / 2.0, PI]
        .iter()
        .map(|&t| {
            let r = amplitude_cross_section_ratio(&p, t).unwrap();
            format!("{:.4}:{r:.6}", t)
        })
        .collect();
    let table: Table = coulomb5::tables::xsec_table(&RunConfig {
        n_theta: 12,
        ..config(1.0)
    })
    .unwrap();
    let report = table.column("ratio").is_some() && table.rows.len() == 12;
    Outcome {
        id: 11,
        title: "cross-section point value",
        pass: back == BACK_SCATTERING && report,
        detail: format!(
            "dsigma/dOmega(pi) = {back} == {BACK_SCATTERING}; |f quoted|^2 / dsigma/dOmega at theta {} (= sin^4(theta/2), reported, not asserted); ratio column in xsec table: {report}",
            ratios.join(" ")
        ),
    }
}

fn c(re: f64, im: f64) -> C {
    C::new(re, im)
}

fn rel(a: C, b: C) -> f64 {
    (a - b).norm() / b.norm()
}

fn special_functions() -> Outcome {
    let start = Instant::now();

    let mut gamma_rec: f64 = 0.0;
    for i in 0..=40 {
        for j in 0..=40 {
            let z = c(-5.95 + 0.75 * f64::from(i), -20.0 + f64::from(j));
            let ratio = (log_gamma(z + 1.0).unwrap() - log_gamma(z).unwrap()).exp();
            gamma_rec = gamma_rec.max(rel(ratio, z));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut contiguity: f64 = 0.0;
    for _ in 0..200 {
        let a = c(rng.gen_range(-2.0..3.0), rng.gen_range(-1.5..1.5));
        let cc = c(rng.gen_range(0.5..5.0), rng.gen_range(-1.0..1.0));
        let z = c(rng.gen_range(-8.0..8.0), rng.gen_range(-25.0..25.0));
        let f = |a: C| kummer_f(a, cc, z).unwrap().value;
        let terms = [(cc - a) * f(a - 1.0), (a * 2.0 - cc + z) * f(a), -a * f(a + 1.0)];
        let scale: f64 = terms.iter().map(|t| t.norm()).sum();
        contiguity = contiguity.max((terms[0] + terms[1] + terms[2]).norm() / scale.max(1.0));
    }

    let lg = |x: C| log_gamma(x).unwrap();
    let mut splice: f64 = 0.0;
    for (a, cc) in [(c(2.0, 0.3), c(4.0, 0.0)), (c(3.0, 1.0), c(6.0, 0.0))] {
        for y in [30.0, 40.0, 50.0, 60.0] {
            let z = c(0.0, y);
            let t1 = (lg(cc) - lg(cc - a) - a * (-z).ln()).exp() * kummer_g_asymptotic(a, a - cc + 1.0, -z, 20);
            let t2 =
                (lg(cc) - lg(a) + z + (a - cc) * z.ln()).exp() * kummer_g_asymptotic(cc - a, c(1.0, 0.0) - a, z, 20);
            splice = splice.max(rel(t1 + t2, kummer_f(a, cc, z).unwrap().value));
        }
    }

    let mut gegen: f64 = 0.0;
    for (lam, two_lam) in [(1.5, 3u32), (3.5, 7u32)] {
        let mut binomial = 1.0;
        for n in 0..=12u32 {
            if n > 0 {
                binomial *= f64::from(n + two_lam - 1) / f64::from(n);
            }
            gegen = gegen.max((gegenbauer(n, lam, 1.0) - binomial).abs() / binomial);
        }
    }
    let rule = GaussLegendre::new(20);
    let orth = rule
        .integrate(-1.0, 1.0, |x| {
            gegenbauer(2, 1.5, x) * gegenbauer(3, 1.5, x) * (1.0 - x * x)
        })
        .abs()
        .max(
            rule.integrate(-1.0, 1.0, |x| {
                gegenbauer(4, 3.5, x) * gegenbauer(6, 3.5, x) * (1.0 - x * x).powi(3)
            })
            .abs(),
        );

    let h = HalfInt::from_twice;
    let mut unitarity: f64 = 0.0;
    for l2 in 0..=4 {
        for m2 in (-l2..=l2).step_by(2) {
            for (a, b, g) in [(0.1, 0.4, 0.9), (2.0, 1.7, 5.5), (4.0, 3.0, 11.0)] {
                let s: f64 = (-l2..=l2)
                    .step_by(2)
                    .map(|p2| wigner_d(h(l2), h(m2), h(p2), a, b, g).unwrap().norm_sqr())
                    .sum();
                unitarity = unitarity.max((s - 1.0).abs());
            }
        }
    }
    let time = start.elapsed();

    let pass = gamma_rec <= GAMMA_RECURRENCE_TOL
        && contiguity <= KUMMER_CONTIGUITY_TOL
        && splice <= ASYMPTOTIC_SPLICE_TOL
        && gegen.max(orth) <= GEGENBAUER_TOL
        && unitarity <= WIGNER_UNITARITY_TOL
        && time < SPECIAL_TIME;
    Outcome {
        id: 12,
        title: "special-function invariants",
        pass,
        detail: format!(
            "gamma recurrence {gamma_rec:.1e} <= {GAMMA_RECURRENCE_TOL:e}, Kummer contiguity {contiguity:.1e} <= {KUMMER_CONTIGUITY_TOL:e}, \
             splice {splice:.1e} <= {ASYMPTOTIC_SPLICE_TOL:e}, Gegenbauer {:.1e} <= {GEGENBAUER_TOL:e}, \
             Wigner unitarity {unitarity:.1e} <= {WIGNER_UNITARITY_TOL:e} ({time:.2?} < {SPECIAL_TIME:?})",
            gegen.max(orth)
        ),
    }
}

#[test]
fn acceptance() {
    let mut outcomes = Vec::new();

    let (hurwitz, t) = suite_sweep(hurwitz_suite);
    outcomes.push(residual_outcome(
        1,
        "Euler identity",
        &hurwitz,
        "euler_identity",
        EULER_TOL,
        t,
        EULER_TIME,
    ));
    outcomes.push(residual_outcome(
        2,
        "su(2) commutators",
        &hurwitz,
        "su2_commutators",
        SU2_TOL,
        t,
        SU2_TIME,
    ));
    outcomes.push(residual_outcome(
        3,
        "Laplacian decomposition",
        &hurwitz,
        "laplacian_identity",
        LAPLACIAN_TOL,
        t,
        LAPLACIAN_TIME,
    ));
    outcomes.push(residual_outcome(
        4,
        "oscillator-Coulomb duality",
        &hurwitz,
        "duality",
        DUALITY_TOL,
        t,
        DUALITY_TIME,
    ));

    let (radial, explained) = radial_asymptotics();
    outcomes.push(radial);

    let (hyper, t) = suite_sweep(hyperspherical_suite);
    let (max, samples) = worst(&hyper, "phase_recurrence");
    outcomes.push(Outcome {
        id: 6,
        title: "phase-shift recurrence",
        pass: max <= PHASE_RECURRENCE_TOL,
        detail: format!("max {max:.3e} <= {PHASE_RECURRENCE_TOL:e} over {samples} (1/ak, lambda) pairs, lambda <= 10"),
    });
    outcomes.push(residual_outcome(
        7,
        "hyperspherical PDE",
        &hyper,
        "hyperspherical_pde",
        HYPERSPHERICAL_PDE_TOL,
        t,
        HYPERSPHERICAL_PDE_TIME,
    ));

    let (para, t) = suite_sweep(parabolic_suite);
    let (ode, ode_n) = worst(&para, "parabolic_ode");
    let (pde, pde_n) = worst(&para, "parabolic_pde");
    outcomes.push(Outcome {
        id: 8,
        title: "parabolic separation",
        pass: ode <= PARABOLIC_ODE_TOL && pde <= PARABOLIC_PDE_TOL && t < PARABOLIC_TIME,
        detail: format!(
            "ODE max {ode:.3e} <= {PARABOLIC_ODE_TOL:e} ({ode_n} samples), PDE max {pde:.3e} <= {PARABOLIC_PDE_TOL:e} ({pde_n} samples), L in {{0, 1}} ({t:.2?} < {PARABOLIC_TIME:?})"
        ),
    });

    let (scat, _) = suite_sweep(scattering_suite);
    let (pde, pde_n) = worst(&scat, "scattering_pde");
    let (free, free_n) = worst(&scat, "free_limit");
    outcomes.push(Outcome {
        id: 9,
        title: "scattering state",
        pass: pde <= SCATTERING_PDE_TOL && free <= FREE_LIMIT_TOL,
        detail: format!(
            "PDE max {pde:.3e} <= {SCATTERING_PDE_TOL:e} ({pde_n} samples), free limit a=1e6 max {free:.3e} <= {FREE_LIMIT_TOL:e} ({free_n} grid points)"
        ),
    });

    outcomes.push(decomposition());
    outcomes.push(cross_section_point());
    outcomes.push(special_functions());

    println!();
    for o in &outcomes {
        println!("{}", line(o));
    }
    let passed = outcomes.iter().filter(|o| o.pass).count();
    println!(
        "{passed}/{} criteria pass; infeasible as stated: {INFEASIBLE:?}",
        outcomes.len()
    );

    for o in &outcomes {
        if INFEASIBLE.contains(&o.id) {
            assert!(!o.pass, "criterion {} now passes; drop it from INFEASIBLE", o.id);
        } else {
            assert!(o.pass, "{}", line(o));
        }
    }
    assert!(explained, "radial asymptotic error is not the leading truncation term");
}
