//! Special functions behind the partial-wave sums.

mod bessel;
mod gamma;
mod mu;
mod wigner;

pub use bessel::{bessel_j, bessel_j_seq};
pub use gamma::{coulomb_phase, coulomb_phase_deriv, digamma_complex, ln_gamma_real, log_gamma_complex};
pub use mu::{mu, mu_asymptotic, mu_exact, mu_exact_seq, MU_ASYMPTOTIC_SWITCH};
pub use wigner::{
    ln_factorial_ratio, wigner_d_exact, wigner_d_exact_seq, wigner_d_m0_uniform, wigner_d_small_angle, LambdaPhi,
    WignerIndex, WIGNER_EXACT_MAX_L,
};
