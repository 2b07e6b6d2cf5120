//! Partial-wave probability kernels.
//!
//! Every kernel reduces to a [`PartialWaveSeries`]: a list of per-`l`
//! complex coefficients with their time shifts `ξ_l`, so the probability at
//! any `δ` is `prefactor · |Σ_l c_l e^{-(δ-ξ_l)²/8}|²`. Maximizing over `δ`
//! therefore costs one pass over the stored terms per evaluation.

mod amplitude;
mod classical;
mod forward;
mod general;
mod series;
mod small_angle;
mod table;

pub use amplitude::{free_amplitude, lm_density, phi_free, AmplitudeModel, LmDensity};
pub use classical::{
    cross_section_from_probability, mev2_to_angstrom2, probability_from_cross_section, rutherford_probability,
    theta_deviation, theta_one,
};
pub use forward::{forward_series, probability_forward};
pub use general::{
    head_on_series, probability_general, probability_head_on, AzimuthalHarmonics, GeneralKernel, WignerSource,
};
pub use series::{PartialWaveSeries, ProbabilityResult, SeriesTerm};
pub use small_angle::{probability_small_angle, probability_small_angle_with, SmallAngleKernel, SMALL_ANGLE_BETA_MAX};
pub use table::{build_phase_table, PhaseShiftTable, TruncationPolicy};
