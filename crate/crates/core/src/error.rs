use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma function pole at z = {re} {im:+}i")]
    Pole { re: f64, im: f64 },

    #[error("argument outside the supported domain: {0}")]
    Domain(&'static str),

    #[error("series failed to reach tolerance: estimated error {est_error:e} after {terms} terms")]
    NonConvergence { est_error: f64, terms: usize },

    #[error("asymptotic series diverges before reaching tolerance (smallest term {smallest_term:e} at n = {terms})")]
    Divergent { smallest_term: f64, terms: usize },

    #[error("finite-difference error estimate {estimate:e} exceeds tolerance {tolerance:e}")]
    StepSize { estimate: f64, tolerance: f64 },

    #[error("point lies on the coordinate singular locus (r = {r}, theta = {theta}); Euler angles undefined")]
    SingularLocus { r: f64, theta: f64 },

    #[error("point lies on the parabolic axis (xi = {xi}, eta = {eta}); Euler angles undefined")]
    ParabolicAxis { xi: f64, eta: f64 },

    #[error("operator is singular at the origin")]
    Origin,

    #[error("scattering angle theta = 0 is the Coulomb forward divergence")]
    ForwardDivergence,

    #[error("k*eta = {k_eta} is below the asymptotic threshold {threshold}")]
    BelowThreshold { k_eta: f64, threshold: f64 },

    #[error("invalid quantum numbers: {0}")]
    Label(&'static str),

    #[error("invalid physical parameters: {0}")]
    Params(&'static str),

    #[error("only the J = 0 fiber sector has a solution source")]
    FiberSpin,
}
