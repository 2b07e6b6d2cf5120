use crate::scenario::{FM_PER_ANGSTROM, HBAR_C_MEV_FM};
use crate::{Error, Real, Result};

/// `4ε⁴η²/sin⁴(θ/2)`: the Rutherford cross section in probability units.
/// Not bounded by 1.
pub fn rutherford_probability<F: Real>(theta: F, eta: F, eps: F) -> Result<F> {
    if !(theta > F::zero() && theta <= F::PI()) {
        return Err(Error::domain("rutherford_probability", format!("θ = {theta} outside (0, π]")));
    }
    let s = (theta / F::lit(2.0)).sin();
    let s2 = s * s;
    let e2 = eps * eps;
    Ok(F::lit(4.0) * e2 * e2 * eta * eta / (s2 * s2))
}

/// `dσ/dΩ = p²/(16σ_p⁴) P`, in MeV⁻² per steradian.
pub fn cross_section_from_probability<F: Real>(p_value: F, p_momentum: F, sigma_p: F) -> F {
    let s2 = sigma_p * sigma_p;
    p_momentum * p_momentum / (F::lit(16.0) * s2 * s2) * p_value
}

/// Inverse of [`cross_section_from_probability`].
pub fn probability_from_cross_section<F: Real>(xs: F, p_momentum: F, sigma_p: F) -> F {
    let s2 = sigma_p * sigma_p;
    xs * (F::lit(16.0) * s2 * s2) / (p_momentum * p_momentum)
}

/// MeV⁻² → Å².
pub fn mev2_to_angstrom2<F: Real>(x: F) -> F {
    let a = HBAR_C_MEV_FM / FM_PER_ANGSTROM;
    x * F::lit(a * a)
}

/// Angular size `4ε|η|` of the region where the head-on result departs from
/// the classical one.
pub fn theta_deviation<F: Real>(eta: F, eps: F) -> F {
    F::lit(4.0) * eps * eta.abs()
}

/// Angle `ε√(8|η|)` at which the Rutherford probability reaches 1.
pub fn theta_one<F: Real>(eta: F, eps: F) -> F {
    eps * (F::lit(8.0) * eta.abs()).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rutherford_values() {
        let half_pi = std::f64::consts::FRAC_PI_2;
        assert!((rutherford_probability(half_pi, 22.8, 0.001).unwrap() / 8.3174e-9 - 1.0).abs() < 1e-4);
        let v = rutherford_probability(half_pi, 3.0, 0.01_f64).unwrap();
        assert!((v - 16.0 * 1e-8 * 9.0).abs() < 1e-20);
        assert!(rutherford_probability(0.0, 22.8, 0.001_f64).is_err());
    }

    #[test]
    fn theta_one_is_where_probability_reaches_one() {
        let t1 = theta_one(22.8, 0.001_f64);
        assert!((t1 - 0.014).abs() < 5e-4);
        let p = rutherford_probability(t1, 22.8, 0.001).unwrap();
        assert!((p - 1.0).abs() < 1e-4);
    }

    #[test]
    fn deviation_angle() {
        assert!((theta_deviation(22.8, 0.001_f64) - 0.0912).abs() < 1e-12);
        assert_eq!(theta_deviation(22.8, 0.002_f64), 2.0 * theta_deviation(22.8, 0.001));
        assert_eq!(theta_deviation(0.0, 0.001_f64), 0.0);
        assert_eq!(theta_deviation(-22.8, 0.001_f64), theta_deviation(22.8, 0.001));
    }

    #[test]
    fn cross_section_round_trip() {
        let (p, sp) = (189.16, 0.18916);
        assert_eq!(cross_section_from_probability(0.0, p, sp), 0.0);
        for pv in [1e-9_f64, 0.3, 7.0] {
            let back = probability_from_cross_section(cross_section_from_probability(pv, p, sp), p, sp);
            assert!((back / pv - 1.0).abs() < 1e-14);
        }
    }
}
