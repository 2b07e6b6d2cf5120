//! Classical Rutherford cross section for comparison curves.

use crate::scenario::{ALPHA, HBAR_C_MEV_FM};
use crate::{Error, Real, Result};

/// Square femtometres per barn.
pub const FM2_PER_BARN: f64 = 100.0;

/// `Z₁²Z₂²α²/(16E² sin⁴(θ/2))` in MeV⁻² per steradian, `E` the kinetic energy.
pub fn rutherford_cross_section<F: Real>(theta: F, z1: u32, z2: u32, energy: F) -> Result<F> {
    if !(theta > F::zero() && theta <= F::PI()) {
        return Err(Error::domain("rutherford_cross_section", format!("θ = {theta} outside (0, π]")));
    }
    if !(energy > F::zero()) {
        return Err(Error::domain("rutherford_cross_section", format!("energy must be positive, got {energy}")));
    }
    let zza = F::from_int(z1 as i64 * z2 as i64) * F::lit(ALPHA);
    let s = (theta / F::lit(2.0)).sin();
    let s2 = s * s;
    Ok(zza * zza / (F::lit(16.0) * energy * energy * s2 * s2))
}

/// MeV⁻² → barn.
pub fn mev2_to_barn<F: Real>(x: F) -> F {
    x * F::lit(HBAR_C_MEV_FM * HBAR_C_MEV_FM / FM2_PER_BARN)
}

/// MeV⁻² → Å².
pub fn mev2_to_angstrom2<F: Real>(x: F) -> F {
    crate::partialwave::mev2_to_angstrom2(x)
}

/// Model and classical probabilities at one angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonPoint<F> {
    pub theta: F,
    pub p_model: F,
    pub p_ruth: F,
    /// `p_model / p_ruth`, NaN when `p_ruth` is not positive.
    pub ratio: F,
}

impl<F: Real> ComparisonPoint<F> {
    pub fn new(theta: F, p_model: F, p_ruth: F) -> Self {
        let ratio = if p_ruth > F::zero() { p_model / p_ruth } else { F::nan() };
        Self { theta, p_model, p_ruth, ratio }
    }
}
