//! Dimensionless scattering parameters and their laboratory origin.
//!
//! Natural units throughout (ħ = c = 1, energies and momenta in MeV, lengths
//! in MeV⁻¹); lengths are converted to Å only at the boundary.

use crate::{Error, Real, Result};

/// Fine-structure constant.
pub const ALPHA: f64 = 1.0 / 137.035_999_084;
/// ħc in MeV·fm.
pub const HBAR_C_MEV_FM: f64 = 197.326_980_4;
pub const FM_PER_ANGSTROM: f64 = 1.0e5;
/// Kinetic energy / rest mass below which the nonrelativistic mapping applies.
pub const NONRELATIVISTIC_LIMIT: f64 = 0.01;

/// One point of parameter space: `(η, ε, β, φ_b, θ, δ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scenario<F> {
    eta: F,
    eps: F,
    beta: F,
    phi_b: F,
    theta: F,
    delta: F,
}

impl<F: Real> Scenario<F> {
    /// Head-on scenario (`β = φ_b = θ = δ = 0`).
    pub fn new(eta: F, eps: F) -> Result<Self> {
        if !eta.is_finite() {
            return Err(Error::param("eta", format!("must be finite, got {eta}")));
        }
        if !(eps > F::zero() && eps <= F::lit(0.1)) {
            return Err(Error::param("eps", format!("must lie in (0, 0.1], got {eps}")));
        }
        Ok(Self { eta, eps, beta: F::zero(), phi_b: F::zero(), theta: F::zero(), delta: F::zero() })
    }

    /// Sets `β = b/σ_x`; rejects `β > 1/√ε`.
    pub fn with_beta(mut self, beta: F) -> Result<Self> {
        if !(beta >= F::zero()) || !beta.is_finite() {
            return Err(Error::param("beta", format!("must be finite and non-negative, got {beta}")));
        }
        let bound = self.eps.sqrt().recip();
        if beta > bound {
            return Err(Error::param("beta", format!("{beta} exceeds the validity bound 1/√ε = {bound}")));
        }
        self.beta = beta;
        Ok(self)
    }

    /// Sets the impact-parameter azimuth, reduced into `[0, 2π)`.
    pub fn with_phi(mut self, phi_b: F) -> Result<Self> {
        if !phi_b.is_finite() {
            return Err(Error::param("phi_b", format!("must be finite, got {phi_b}")));
        }
        let tau = F::TAU();
        let mut p = phi_b % tau;
        if p < F::zero() {
            p = p + tau;
        }
        if p >= tau {
            p = F::zero();
        }
        self.phi_b = p;
        Ok(self)
    }

    pub fn with_theta(mut self, theta: F) -> Result<Self> {
        if !(theta >= F::zero() && theta <= F::PI()) {
            return Err(Error::param("theta", format!("must lie in [0, π], got {theta}")));
        }
        self.theta = theta;
        Ok(self)
    }

    pub fn with_delta(mut self, delta: F) -> Result<Self> {
        if !delta.is_finite() {
            return Err(Error::param("delta", format!("must be finite, got {delta}")));
        }
        self.delta = delta;
        Ok(self)
    }

    pub fn eta(&self) -> F {
        self.eta
    }
    pub fn eps(&self) -> F {
        self.eps
    }
    pub fn beta(&self) -> F {
        self.beta
    }
    pub fn phi_b(&self) -> F {
        self.phi_b
    }
    pub fn theta(&self) -> F {
        self.theta
    }
    pub fn delta(&self) -> F {
        self.delta
    }

    /// Classical angular momentum `b·p = β/(2ε)`.
    pub fn bp(&self) -> F {
        self.beta / (F::lit(2.0) * self.eps)
    }
}

/// Laboratory inputs for a projectile of charge `z2` on a target of charge `z1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams<F> {
    pub z1: u32,
    pub z2: u32,
    /// Kinetic energy, MeV.
    pub kinetic_energy: F,
    /// Projectile rest mass, MeV.
    pub projectile_mass: F,
    pub eps: F,
}

impl<F: Real> PhysicalParams<F> {
    pub fn energy_to_mass(&self) -> F {
        self.kinetic_energy / self.projectile_mass
    }

    pub fn is_nonrelativistic(&self) -> bool {
        self.energy_to_mass() < F::lit(NONRELATIVISTIC_LIMIT)
    }

    pub fn validate(&self) -> Result<()> {
        if self.z1 == 0 || self.z2 == 0 {
            return Err(Error::param("z1/z2", "atomic numbers must be positive"));
        }
        if !(self.kinetic_energy > F::zero() && self.kinetic_energy.is_finite()) {
            return Err(Error::param("kinetic_energy", format!("must be positive, got {}", self.kinetic_energy)));
        }
        if !(self.projectile_mass > F::zero() && self.projectile_mass.is_finite()) {
            return Err(Error::param("projectile_mass", format!("must be positive, got {}", self.projectile_mass)));
        }
        if !(self.eps > F::zero()) {
            return Err(Error::param("eps", format!("must be positive, got {}", self.eps)));
        }
        if !self.is_nonrelativistic() {
            return Err(Error::Relativistic { ratio: self.energy_to_mass().to_f64_lossy() });
        }
        Ok(())
    }
}

/// Result of [`scenario_from_physical`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalMapping<F> {
    pub scenario: Scenario<F>,
    /// `p = √(2 m₀ E)`, MeV.
    pub p_momentum: F,
    /// `σ_p = ε p`, MeV.
    pub sigma_p: F,
    pub projectile_mass: F,
    /// Spatial width `σ_x = 1/(2σ_p)`, MeV⁻¹.
    pub sigma_x_natural: F,
    /// Starting separation `R = σ_x/√ε`, MeV⁻¹.
    pub r_natural: F,
    /// `σ_x` in Å.
    pub sigma_x: F,
    /// `R` in Å.
    pub r: F,
}

/// Converts a natural-unit length (MeV⁻¹) into Å.
pub fn natural_length_to_angstrom<F: Real>(len: F) -> F {
    len * F::lit(HBAR_C_MEV_FM / FM_PER_ANGSTROM)
}

/// Maps laboratory inputs onto a head-on [`Scenario`].
///
/// `η = Z₁Z₂ α m₀/p`: the strength parameter carries the charge product.
pub fn scenario_from_physical<F: Real>(p: &PhysicalParams<F>) -> Result<PhysicalMapping<F>> {
    p.validate()?;
    let two = F::lit(2.0);
    let m0 = p.projectile_mass;
    let p_momentum = (two * m0 * p.kinetic_energy).sqrt();
    let z12 = F::from_int(p.z1 as i64 * p.z2 as i64);
    let eta = z12 * F::lit(ALPHA) * m0 / p_momentum;
    let scenario = Scenario::new(eta, p.eps)?;
    let sigma_p = p.eps * p_momentum;
    let sigma_x_natural = (two * sigma_p).recip();
    let r_natural = sigma_x_natural / p.eps.sqrt();
    Ok(PhysicalMapping {
        scenario,
        p_momentum,
        sigma_p,
        projectile_mass: m0,
        sigma_x_natural,
        r_natural,
        sigma_x: natural_length_to_angstrom(sigma_x_natural),
        r: natural_length_to_angstrom(r_natural),
    })
}

/// `ln(2pR) = -(3/2) ln ε`.
pub fn ln_2pr<F: Real>(s: &Scenario<F>) -> F {
    ln_2pr_eps(s.eps)
}

pub(crate) fn ln_2pr_eps<F: Real>(eps: F) -> F {
    F::lit(-1.5) * eps.ln()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TimeShiftKind {
    Delay,
    Advancement,
    Centered,
}

impl TimeShiftKind {
    pub fn of<F: Real>(delta: F) -> Self {
        if delta > F::zero() {
            TimeShiftKind::Delay
        } else if delta < F::zero() {
            TimeShiftKind::Advancement
        } else {
            TimeShiftKind::Centered
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            TimeShiftKind::Delay => "time delay",
            TimeShiftKind::Advancement => "advancement",
            TimeShiftKind::Centered => "centered",
        }
    }
}

/// `δ = (pT/m₀ - 2R)/σ_x` for an interaction time `T` in MeV⁻¹.
pub fn delta_of_time<F: Real>(t: F, m: &PhysicalMapping<F>) -> (F, TimeShiftKind) {
    let d = (m.p_momentum * t / m.projectile_mass - F::lit(2.0) * m.r_natural) / m.sigma_x_natural;
    (d, TimeShiftKind::of(d))
}
