use super::general::window_tail;
use super::{PartialWaveSeries, PhaseShiftTable, ProbabilityResult, SeriesTerm, TruncationPolicy};
use crate::{Error, Real, Result};

/// Smallest `β` for which the Stirling-reduced forward sum is trusted.
pub const FORWARD_BETA_MIN: f64 = 10.0;

/// Forward (`θ = 0`) series
/// `Σ_l 4ε²(l+½) e^{-2ε²(l-bp)²} / √(8πε² l bp) · e^{2iσ_l} e^{-(δ-ξ_l)²/8}`.
pub fn forward_series<F: Real>(
    table: &PhaseShiftTable<F>,
    beta: F,
    policy: &TruncationPolicy<F>,
) -> Result<PartialWaveSeries<F>> {
    policy.validate()?;
    if !(beta >= F::lit(FORWARD_BETA_MIN)) {
        return Err(Error::regime(
            "probability_forward",
            format!("β = {beta} is below {FORWARD_BETA_MIN}; use probability_general with θ = 0"),
        ));
    }
    let eps = table.eps();
    let bp = beta / (F::lit(2.0) * eps);
    let (lo, hi) = policy.window(eps, beta);
    let lo = lo.max(1);
    table.require(lo, hi)?;
    let four_e2 = F::lit(4.0) * eps * eps;
    let eight_pi_e2 = F::lit(8.0) * F::PI() * eps * eps;
    let mut terms = Vec::new();
    let mut dropped = F::zero();
    for l in lo..=hi {
        let lf = F::from_int(l as i64);
        let d = eps * (lf - bp);
        let env = (F::lit(-2.0) * d * d).exp();
        let w = four_e2 * (lf + F::lit(0.5)) * env / (eight_pi_e2 * lf * bp).sqrt();
        if env < policy.term_floor {
            dropped = dropped + w;
            continue;
        }
        terms.push(SeriesTerm { l, xi: table.xi(l), coeff: table.phase(l).scale(w) });
    }
    Ok(PartialWaveSeries {
        terms,
        prefactor: F::one(),
        l_window: (lo, hi),
        m_cut_used: 0,
        dropped_amplitude: dropped + window_tail(eps, policy.half_width(eps), bp),
        mu_asymptotic_used: true,
    })
}

/// Forward scattering probability at large impact parameter.
pub fn probability_forward<F: Real>(eta: F, beta: F, eps: F, delta: F) -> Result<ProbabilityResult<F>> {
    let policy = TruncationPolicy::default();
    if !(beta >= F::lit(FORWARD_BETA_MIN)) {
        return Err(Error::regime(
            "probability_forward",
            format!("β = {beta} is below {FORWARD_BETA_MIN}; use probability_general with θ = 0"),
        ));
    }
    let table = super::build_phase_table(eta, eps, beta, &policy)?;
    Ok(forward_series(&table, beta, &policy)?.result(delta))
}
