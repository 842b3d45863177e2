//! Special functions over complex arguments.

mod dd;
mod gamma;
mod gegenbauer;
mod kummer;
mod wigner;

pub use gamma::{arg_gamma, gamma, ln_factorial, ln_gamma_real, log_gamma, rgamma, wrap_phase};
pub use gegenbauer::gegenbauer;
pub use kummer::{
    kummer_asymptotic, kummer_f, kummer_f_with, kummer_g_asymptotic, kummer_g_optimal, kummer_series, AccuracyReport,
    KummerConfig,
};
pub use wigner::{wigner_d, wigner_small_d, wigner_small_d_derivatives, MAX_L as WIGNER_MAX_L};
