use num_complex::Complex;

use crate::optimize::{find_delta_max, DeltaMax, DeltaSearch};
use crate::summation::ComplexCompensatedSum;
use crate::{Real, Result};

/// Outcome of one probability evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbabilityResult<F> {
    pub value: F,
    pub delta_used: F,
    pub l_window: (u32, u32),
    pub m_cut_used: u32,
    /// Bound on the probability change from terms outside the window or
    /// below the term floor.
    pub truncation_estimate: F,
    /// Whether any `μ_m` came from the large-argument form.
    pub mu_asymptotic_used: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesTerm<F> {
    pub l: u32,
    pub xi: F,
    pub coeff: Complex<F>,
}

/// `prefactor · |Σ_l c_l e^{-(δ-ξ_l)²/8}|²`, terms in ascending `l`.
#[derive(Debug, Clone, PartialEq)]
pub struct PartialWaveSeries<F> {
    pub terms: Vec<SeriesTerm<F>>,
    pub prefactor: F,
    pub l_window: (u32, u32),
    pub m_cut_used: u32,
    /// Bound on `|Σ c_l|` over the dropped terms.
    pub dropped_amplitude: F,
    pub mu_asymptotic_used: bool,
}

impl<F: Real> PartialWaveSeries<F> {
    pub fn amplitude(&self, delta: F) -> Complex<F> {
        let eighth = F::lit(0.125);
        let mut acc = ComplexCompensatedSum::new();
        for t in &self.terms {
            let d = delta - t.xi;
            acc.add(t.coeff * (-(d * d) * eighth).exp());
        }
        acc.value()
    }

    pub fn evaluate(&self, delta: F) -> F {
        self.prefactor * self.amplitude(delta).norm_sqr()
    }

    pub fn result(&self, delta: F) -> ProbabilityResult<F> {
        let amp = self.amplitude(delta);
        let a = amp.norm();
        let t = self.dropped_amplitude;
        ProbabilityResult {
            value: self.prefactor * amp.norm_sqr(),
            delta_used: delta,
            l_window: self.l_window,
            m_cut_used: self.m_cut_used,
            truncation_estimate: self.prefactor * (F::lit(2.0) * a * t + t * t),
            mu_asymptotic_used: self.mu_asymptotic_used,
        }
    }

    pub fn maximize(&self, search: &DeltaSearch<F>) -> Result<(DeltaMax<F>, ProbabilityResult<F>)> {
        let best = find_delta_max(|d| self.evaluate(d), search)?;
        Ok((best, self.result(best.delta_max)))
    }
}
