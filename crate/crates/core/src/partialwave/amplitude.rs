use super::TruncationPolicy;
use crate::specfun::{ln_factorial_ratio, mu, LambdaPhi, WignerIndex};
use crate::{Real, Result, Scenario};

/// Which form of the incoming-packet amplitude a kernel uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AmplitudeModel {
    /// `2ε√(l+½) [(l+|m|)!/(l-|m|)!]^{1/2} Λ^{-|m|} e^{-ε²(Λ-bp)²} μ_{|m|}(2ε²Λ bp)`.
    Full,
    /// Small-angle reduction: `Λ → l`, factorial ratio `Λ^{-|m|}` → 1,
    /// giving `2ε√(l+½) e^{-ε²(l-bp)²} μ_{|m|}(εlβ)`.
    SmallAngle,
}

impl AmplitudeModel {
    /// Gaussian weight of the amplitude product at `l`, used for the term floor.
    pub(crate) fn envelope<F: Real>(self, l: u32, eps: F, bp: F) -> F {
        let x = match self {
            AmplitudeModel::Full => LambdaPhi::<F>::new(l, 0).lambda,
            AmplitudeModel::SmallAngle => F::from_int(l as i64),
        };
        let d = eps * (x - bp);
        (F::lit(-2.0) * d * d).exp()
    }
}

/// Amplitude of partial wave `(l, m)` in a packet with impact parameter `β`.
/// The flag reports use of the large-argument `μ` form.
pub fn free_amplitude<F: Real>(l: u32, m: i32, eps: F, beta: F, model: AmplitudeModel) -> (F, bool) {
    let two = F::lit(2.0);
    let bp = beta / (two * eps);
    let a = m.unsigned_abs();
    let lf = F::from_int(l as i64);
    let norm = two * eps * (lf + F::lit(0.5)).sqrt();
    match model {
        AmplitudeModel::Full => {
            if a > l {
                return (F::zero(), false);
            }
            let lam = LambdaPhi::<F>::new(l, m).lambda;
            let d = eps * (lam - bp);
            let env = (-(d * d)).exp();
            let ratio = if a == 0 {
                F::one()
            } else {
                (F::lit(0.5) * ln_factorial_ratio::<F>(l, m) - F::from_int(a as i64) * lam.ln()).exp()
            };
            let (mu_v, asym) = mu(a, eps * lam * beta);
            (norm * ratio * env * mu_v, asym)
        }
        AmplitudeModel::SmallAngle => {
            let d = eps * (lf - bp);
            let env = (-(d * d)).exp();
            let (mu_v, asym) = mu(a, eps * lf * beta);
            (norm * env * mu_v, asym)
        }
    }
}

/// `Φ_free(l, m)` for the scenario's `ε` and `β`.
pub fn phi_free<F: Real>(l: u32, m: i32, s: &Scenario<F>) -> Result<F> {
    WignerIndex::new(l, m, 0)?;
    Ok(free_amplitude(l, m, s.eps(), s.beta(), AmplitudeModel::Full).0)
}

/// Amplitudes `[a_0, …, a_{m_cut}]` indexed by `|m|`.
pub(crate) fn amplitude_row<F: Real>(
    l: u32,
    m_cut: u32,
    eps: F,
    beta: F,
    model: AmplitudeModel,
    out: &mut Vec<F>,
) -> bool {
    out.clear();
    let mut asym = false;
    for a in 0..=m_cut {
        if a > 0 && beta == F::zero() {
            out.push(F::zero());
            continue;
        }
        let (v, flag) = free_amplitude(l, a as i32, eps, beta, model);
        asym |= flag;
        out.push(v);
    }
    asym
}

/// `|Φ_free(l, m)|²` on the `l`-window × `|m| ≤ m_cut`.
#[derive(Debug, Clone, PartialEq)]
pub struct LmDensity<F> {
    pub l_lo: u32,
    pub l_hi: u32,
    pub m_cut: u32,
    /// Row-major: `values[(l - l_lo) * (2 m_cut + 1) + (m + m_cut)]`.
    pub values: Vec<F>,
    pub mu_asymptotic_used: bool,
}

impl<F: Real> LmDensity<F> {
    fn width(&self) -> usize {
        2 * self.m_cut as usize + 1
    }

    pub fn get(&self, l: u32, m: i32) -> F {
        let row = (l - self.l_lo) as usize;
        self.values[row * self.width() + (m + self.m_cut as i32) as usize]
    }

    pub fn total(&self) -> F {
        crate::summation::compensated_sum(&self.values)
    }

    /// `(l, m)` of the largest entry; ties keep the first in row-major order.
    pub fn argmax(&self) -> (u32, i32) {
        let mut best = (0usize, F::neg_infinity());
        for (i, &v) in self.values.iter().enumerate() {
            if v > best.1 {
                best = (i, v);
            }
        }
        let w = self.width();
        (self.l_lo + (best.0 / w) as u32, (best.0 % w) as i32 - self.m_cut as i32)
    }

    /// Marginal over `l` as `(m, weight)` pairs.
    pub fn m_marginal(&self) -> Vec<(i32, F)> {
        let w = self.width();
        let mut out: Vec<(i32, F)> = (0..w).map(|j| (j as i32 - self.m_cut as i32, F::zero())).collect();
        for row in self.values.chunks(w) {
            for (o, &v) in out.iter_mut().zip(row) {
                o.1 = o.1 + v;
            }
        }
        out
    }

    /// Standard deviation of `m` under the density `|Φ|²`.
    pub fn m_std(&self) -> F {
        let marg = self.m_marginal();
        let tot: F = marg.iter().map(|p| p.1).sum();
        let var: F = marg.iter().map(|&(m, w)| F::from_int((m * m) as i64) * w).sum::<F>() / tot;
        var.sqrt()
    }

    /// Root-mean-square `m` weighted by the amplitude `|Φ|` rather than `|Φ|²`.
    pub fn m_amplitude_width(&self) -> F {
        let w = self.width();
        let mut tot = F::zero();
        let mut second = F::zero();
        for row in self.values.chunks(w) {
            for (j, &v) in row.iter().enumerate() {
                let m = F::from_int(j as i64 - self.m_cut as i64);
                let a = v.sqrt();
                tot = tot + a;
                second = second + m * m * a;
            }
        }
        (second / tot).sqrt()
    }
}

pub fn lm_density<F: Real>(s: &Scenario<F>, policy: &TruncationPolicy<F>) -> Result<LmDensity<F>> {
    policy.validate()?;
    let (l_lo, l_hi) = policy.window(s.eps(), s.beta());
    let m_cut = policy.m_cut_for(s.beta());
    let w = 2 * m_cut as usize + 1;
    let mut values = Vec::with_capacity((l_hi - l_lo + 1) as usize * w);
    let mut row = Vec::new();
    let mut asym = false;
    for l in l_lo..=l_hi {
        asym |= amplitude_row(l, m_cut, s.eps(), s.beta(), AmplitudeModel::Full, &mut row);
        for m in -(m_cut as i32)..=(m_cut as i32) {
            let a = if m.unsigned_abs() > l { F::zero() } else { row[m.unsigned_abs() as usize] };
            values.push(a * a);
        }
    }
    Ok(LmDensity { l_lo, l_hi, m_cut, values, mu_asymptotic_used: asym })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scen(beta: f64) -> Scenario<f64> {
        Scenario::new(22.8, 0.001).unwrap().with_beta(beta).unwrap()
    }

    #[test]
    fn head_on_amplitudes() {
        let s = scen(0.0);
        for l in [0u32, 3, 700] {
            assert_eq!(phi_free(l.max(1), 1, &s).unwrap(), 0.0);
            assert_eq!(phi_free(l.max(2), -2, &s).unwrap(), 0.0);
            let lam = LambdaPhi::<f64>::new(l, 0).lambda;
            let expect = 2.0 * 0.001 * (l as f64 + 0.5).sqrt() * (-(0.001 * lam) * (0.001 * lam)).exp();
            assert!((phi_free(l, 0, &s).unwrap() - expect).abs() < 1e-17);
        }
        assert!(phi_free(2, 3, &s).is_err());
    }

    #[test]
    fn normalization() {
        for beta in [0.0, 1.0, 3.0, 10.0] {
            let s = scen(beta);
            let policy = TruncationPolicy { m_cut: Some(if beta > 5.0 { 40 } else { 12 }), ..Default::default() };
            let total = lm_density(&s, &policy).unwrap().total();
            assert!((total - 1.0).abs() < 0.05, "β = {beta}: {total}");
        }
    }

    #[test]
    fn density_peak_and_symmetry() {
        let d = lm_density(&scen(10.0), &TruncationPolicy::default()).unwrap();
        let (l, m) = d.argmax();
        assert!((l as i64 - 5000).abs() <= 2, "peak at l = {l}");
        assert_eq!(m, 0);
        for l in [4000u32, 5000, 6100] {
            for m in 1..=d.m_cut as i32 {
                let (a, b) = (d.get(l, m), d.get(l, -m));
                assert!((a - b).abs() <= 1e-12 * a.abs());
            }
        }
    }

    #[test]
    fn m_widths() {
        // |Φ| is Gaussian in m with width β/√2, so |Φ|² has width β/2
        let d = lm_density(&scen(10.0), &TruncationPolicy::default()).unwrap();
        let amp = d.m_amplitude_width();
        assert!((amp / (10.0 / 2.0_f64.sqrt()) - 1.0).abs() < 0.15, "{amp}");
        let std = d.m_std();
        assert!((std / 5.0 - 1.0).abs() < 0.05, "{std}");
    }

    #[test]
    fn small_angle_model_reduces_at_head_on() {
        for l in [0u32, 10, 2500] {
            let (a, _) = free_amplitude(l, 0, 0.001_f64, 0.0, AmplitudeModel::SmallAngle);
            let expect = 2.0 * 0.001 * (l as f64 + 0.5).sqrt() * (-(0.001 * l as f64).powi(2)).exp();
            assert!((a - expect).abs() < 1e-17);
        }
    }
}
