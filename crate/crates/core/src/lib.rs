//! Partial-wave engine for Coulomb scattering of Gaussian wavepackets.
//!
//! The crate evaluates wavepacket-to-wavepacket transition probabilities for a
//! projectile aimed at a point charge with an arbitrary impact parameter, and
//! compares them with the classical Rutherford formula. All numerical code is
//! generic over the scalar type through [`Real`]; the `*F64` / `*F32` aliases
//! at the crate root name the concrete instantiations.
//!
//! Module map:
//!
//! - [`specfun`]: complex log-gamma and digamma, Coulomb phases, Bessel `J_n`,
//!   scaled modified Bessel `mu_m`, Wigner rotation matrices.
//! - [`scenario`]: the dimensionless parameter set and the laboratory mapping.
//! - [`partialwave`]: phase-shift tables and the probability kernels.
//! - [`averaging`]: integration over the impact-parameter plane.
//! - [`rutherford`]: classical reference cross sections.

// `!(x > 0)` guards are written that way so NaN is rejected too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod averaging;
pub mod error;
pub mod optimize;
pub mod partialwave;
pub mod quadrature;
pub mod real;
pub mod rutherford;
pub mod scenario;
pub mod specfun;
pub mod summation;

pub use error::{Error, Result};
pub use real::Real;

pub use averaging::{average_over_impact, averaging_identity_check, DeltaPolicy, KernelChoice, QuadratureSpec};
pub use optimize::{find_delta_max, DeltaMax, DeltaSearch};
pub use partialwave::{
    build_phase_table, cross_section_from_probability, lm_density, phi_free, probability_forward, probability_general,
    probability_head_on, probability_small_angle, rutherford_probability, theta_deviation, theta_one, PhaseShiftTable,
    ProbabilityResult, TruncationPolicy, WignerSource,
};
pub use rutherford::{rutherford_cross_section, ComparisonPoint};
pub use scenario::{delta_of_time, ln_2pr, scenario_from_physical, PhysicalMapping, PhysicalParams, Scenario};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub type ScenarioF64 = Scenario<f64>;
pub type ScenarioF32 = Scenario<f32>;
pub type PhysicalParamsF64 = PhysicalParams<f64>;
pub type PhysicalParamsF32 = PhysicalParams<f32>;
pub type PhaseShiftTableF64 = PhaseShiftTable<f64>;
pub type PhaseShiftTableF32 = PhaseShiftTable<f32>;
pub type TruncationPolicyF64 = TruncationPolicy<f64>;
pub type TruncationPolicyF32 = TruncationPolicy<f32>;
pub type ProbabilityResultF64 = ProbabilityResult<f64>;
pub type ProbabilityResultF32 = ProbabilityResult<f32>;
pub type QuadratureSpecF64 = QuadratureSpec<f64>;
pub type QuadratureSpecF32 = QuadratureSpec<f32>;
pub type ComplexF64 = num_complex::Complex<f64>;
pub type ComplexF32 = num_complex::Complex<f32>;
