//! Small-angle kernel with `|m_i|, |m_f| ≤ 2` summed in closed form.

use num_complex::Complex;

use super::general::window_tail;
use super::{PartialWaveSeries, PhaseShiftTable, ProbabilityResult, SeriesTerm, TruncationPolicy};
use crate::specfun::{bessel_j_seq, mu};
use crate::{Error, Real, Result, Scenario};

/// Largest impact parameter accepted by the small-angle kernel.
pub const SMALL_ANGLE_BETA_MAX: f64 = 3.0;

/// Table of `J_0 … J_4 (lθ)` for one angle.
#[derive(Debug, Clone)]
pub struct SmallAngleKernel<F> {
    theta: F,
    l_max: u32,
    prefactor: F,
    j: Vec<[F; 5]>,
}

impl<F: Real> SmallAngleKernel<F> {
    pub fn new(theta: F, l_max: u32) -> Result<Self> {
        if !(theta > F::zero() && theta <= F::lit(0.5)) {
            return Err(Error::regime("probability_small_angle", format!("θ = {theta} outside (0, 0.5]")));
        }
        let j = (0..=l_max)
            .map(|l| {
                let v = bessel_j_seq(4, F::from_int(l as i64) * theta);
                [v[0], v[1], v[2], v[3], v[4]]
            })
            .collect();
        Ok(Self { theta, l_max, prefactor: theta / theta.sin(), j })
    }

    pub fn theta(&self) -> F {
        self.theta
    }

    pub fn series(
        &self,
        beta: F,
        phi: F,
        table: &PhaseShiftTable<F>,
        policy: &TruncationPolicy<F>,
    ) -> Result<PartialWaveSeries<F>> {
        policy.validate()?;
        if !(beta >= F::zero() && beta <= F::lit(SMALL_ANGLE_BETA_MAX)) {
            return Err(Error::regime(
                "probability_small_angle",
                format!("β = {beta} outside [0, {SMALL_ANGLE_BETA_MAX}]"),
            ));
        }
        let eps = table.eps();
        let (lo, hi) = policy.window(eps, beta);
        if hi > self.l_max {
            return Err(Error::param(
                "l_window",
                format!("window end {hi} exceeds the kernel's l_max = {}", self.l_max),
            ));
        }
        table.require(lo, hi)?;
        let two = F::lit(2.0);
        let four = F::lit(4.0);
        let bp = beta / (two * eps);
        let (c1, c2, c3, c4) = (phi.cos(), (two * phi).cos(), (F::lit(3.0) * phi).cos(), (four * phi).cos());
        let four_e2 = four * eps * eps;
        let mut terms = Vec::new();
        let mut dropped = F::zero();
        let mut asym = false;
        for l in lo..=hi {
            let lf = F::from_int(l as i64);
            let d = eps * (lf - bp);
            let env = (-two * d * d).exp();
            let base = four_e2 * (lf + F::lit(0.5)) * env;
            if env < policy.term_floor {
                dropped = dropped + base * F::lit(9.0);
                continue;
            }
            let z = eps * lf * beta;
            let (m0, a0) = mu(0, z);
            let (m1, a1) = mu(1, z);
            let (m2, a2) = mu(2, z);
            asym |= a0 | a1 | a2;
            let j = &self.j[l as usize];
            let re = j[0] * (m0 * m0 + two * m1 * m1 + two * m2 * m2)
                - four * j[2] * m2 * m0 * c2
                - two * j[2] * m1 * m1 * c2
                + two * j[4] * m2 * m2 * c4;
            let im = -four * j[1] * m2 * m1 * c1 - four * j[1] * m1 * m0 * c1 + four * j[3] * m2 * m1 * c3;
            let coeff = table.phase(l) * Complex::new(base * re, base * im);
            terms.push(SeriesTerm { l, xi: table.xi(l), coeff });
        }
        Ok(PartialWaveSeries {
            terms,
            prefactor: self.prefactor,
            l_window: (lo, hi),
            m_cut_used: 2,
            dropped_amplitude: dropped + window_tail(eps, policy.half_width(eps), bp) * F::lit(9.0),
            mu_asymptotic_used: asym,
        })
    }
}

/// Small-angle probability at the scenario's `(θ, β, φ_b, δ)`.
pub fn probability_small_angle<F: Real>(s: &Scenario<F>, table: &PhaseShiftTable<F>) -> Result<ProbabilityResult<F>> {
    probability_small_angle_with(s, table, &TruncationPolicy::default())
}

pub fn probability_small_angle_with<F: Real>(
    s: &Scenario<F>,
    table: &PhaseShiftTable<F>,
    policy: &TruncationPolicy<F>,
) -> Result<ProbabilityResult<F>> {
    let (_, hi) = policy.window(table.eps(), s.beta());
    let kernel = SmallAngleKernel::new(s.theta(), hi)?;
    Ok(kernel.series(s.beta(), s.phi_b(), table, policy)?.result(s.delta()))
}
