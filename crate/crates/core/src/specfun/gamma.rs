//! Complex log-gamma and digamma, and the Coulomb phase built from them.

use num_complex::Complex;

use crate::{Error, Real, Result};

// B_{2k} for k = 1..=10
const BERNOULLI: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
];

const SHIFT_TARGET: f64 = 10.0;

fn shift_count<F: Real>(re: F) -> usize {
    let target = F::lit(SHIFT_TARGET);
    if re >= target {
        0
    } else {
        (target - re).ceil().to_usize().unwrap_or(0)
    }
}

/// `ln Γ(z)` on the branch that is continuous in `z` across `Re z > 0`
/// (the imaginary part is not reduced modulo 2π).
///
/// Stirling series with ten Bernoulli terms once `Re z ≥ 10`; smaller
/// arguments are shifted upward with `ln Γ(z) = ln Γ(z+n) − Σ ln(z+k)`.
pub fn log_gamma_complex<F: Real>(z: Complex<F>) -> Result<Complex<F>> {
    if !(z.re > F::zero()) || !z.im.is_finite() {
        return Err(Error::domain("log_gamma_complex", format!("Re z must be positive, got z = {} + {}i", z.re, z.im)));
    }
    let n = shift_count(z.re);
    let mut shift = Complex::new(F::zero(), F::zero());
    let mut w = z;
    for _ in 0..n {
        shift = shift + w.ln();
        w = w + F::one();
    }
    let half = F::lit(0.5);
    let ln_two_pi_half = F::lit(0.918_938_533_204_672_8);
    let mut s = (w - half) * w.ln() - w + ln_two_pi_half;
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut pow = inv;
    for (k, &b) in BERNOULLI.iter().enumerate() {
        let k2 = F::from_count(2 * (k + 1));
        let term = pow * (F::lit(b) / (k2 * (k2 - F::one())));
        s = s + term;
        if term.norm() < F::epsilon() * F::lit(1e-3) * s.norm() {
            break;
        }
        pow = pow * inv2;
    }
    Ok(s - shift)
}

/// `ψ(z) = d ln Γ(z)/dz` for `Re z > 0`.
pub fn digamma_complex<F: Real>(z: Complex<F>) -> Result<Complex<F>> {
    if !(z.re > F::zero()) || !z.im.is_finite() {
        return Err(Error::domain("digamma_complex", format!("Re z must be positive, got z = {} + {}i", z.re, z.im)));
    }
    let n = shift_count(z.re);
    let mut shift = Complex::new(F::zero(), F::zero());
    let mut w = z;
    for _ in 0..n {
        shift = shift + w.inv();
        w = w + F::one();
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut s = w.ln() - inv * F::lit(0.5);
    let mut pow = inv2;
    for (k, &b) in BERNOULLI.iter().enumerate() {
        let term = pow * (F::lit(b) / F::from_count(2 * (k + 1)));
        s = s - term;
        if term.norm() < F::epsilon() * F::lit(1e-3) * s.norm() {
            break;
        }
        pow = pow * inv2;
    }
    Ok(s - shift)
}

/// Real `ln Γ(x)` for `x > 0`.
pub fn ln_gamma_real<F: Real>(x: F) -> Result<F> {
    if !(x > F::zero()) {
        return Err(Error::domain("ln_gamma_real", format!("x must be positive, got {x}")));
    }
    Ok(log_gamma_complex(Complex::new(x, F::zero()))?.re)
}

/// Coulomb phase `σ_l(η) = Im ln Γ(l + 1 + iη)`.
pub fn coulomb_phase<F: Real>(l: u32, eta: F) -> F {
    let z = Complex::new(F::from_int(l as i64 + 1), eta);
    log_gamma_complex(z).expect("Re z ≥ 1").im
}

/// `∂σ_l/∂η = Re ψ(l + 1 + iη)`.
pub fn coulomb_phase_deriv<F: Real>(l: u32, eta: F) -> F {
    let z = Complex::new(F::from_int(l as i64 + 1), eta);
    digamma_complex(z).expect("Re z ≥ 1").re
}
