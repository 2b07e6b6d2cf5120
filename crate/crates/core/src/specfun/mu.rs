//! Exponentially scaled modified Bessel functions `μ_m(z) = e^{-z} I_m(z)`.

use crate::Real;

/// Argument at which [`mu`] switches from [`mu_exact`] to [`mu_asymptotic`].
pub const MU_ASYMPTOTIC_SWITCH: f64 = 50.0;

const SERIES_LIMIT: f64 = 30.0;

/// `e^{-z} I_m(z)` for `z ≥ 0`.
pub fn mu_exact<F: Real>(m: u32, z: F) -> F {
    if z < F::lit(SERIES_LIMIT) {
        series(m, z)
    } else {
        miller(m, z)[m as usize]
    }
}

/// `[μ_0(z), …, μ_{m_max}(z)]`.
pub fn mu_exact_seq<F: Real>(m_max: u32, z: F) -> Vec<F> {
    if z < F::lit(SERIES_LIMIT) {
        (0..=m_max).map(|m| series(m, z)).collect()
    } else {
        miller(m_max, z)
    }
}

/// Large-`z` form `e^{-(m²-1/4)/2z} / √(2πz)`, uniform in `m`.
pub fn mu_asymptotic<F: Real>(m: u32, z: F) -> F {
    let m = F::from_int(m as i64);
    let two = F::lit(2.0);
    (-(m * m - F::lit(0.25)) / (two * z)).exp() / (two * F::PI() * z).sqrt()
}

/// Exact below [`MU_ASYMPTOTIC_SWITCH`], asymptotic at and above it.
/// The flag reports whether the asymptotic form was used.
pub fn mu<F: Real>(m: u32, z: F) -> (F, bool) {
    if z >= F::lit(MU_ASYMPTOTIC_SWITCH) {
        (mu_asymptotic(m, z), true)
    } else {
        (mu_exact(m, z), false)
    }
}

pub(crate) fn series<F: Real>(m: u32, z: F) -> F {
    if z == F::zero() {
        return if m == 0 { F::one() } else { F::zero() };
    }
    let half = z / F::lit(2.0);
    let mf = F::from_int(m as i64);
    // e^{-z} (z/2)^m / m!, in logs so large m and z do not overflow
    let ln_first = -z + mf * half.ln() - super::ln_gamma_real(mf + F::one()).expect("m + 1 > 0");
    let mut term = ln_first.exp();
    if term == F::zero() {
        return F::zero();
    }
    let q = half * half;
    let mut sum = term;
    let mut k = 0i64;
    loop {
        k += 1;
        let kf = F::from_int(k);
        term = term * q / (kf * (kf + mf));
        sum = sum + term;
        if kf > half && term <= F::epsilon() * sum * F::lit(0.1) {
            break;
        }
        if k > 100_000 {
            break;
        }
    }
    sum
}

/// Downward recurrence `i_{k-1} = (2k/z) i_k + i_{k+1}`, normalized with
/// `e^{-z}(I_0 + 2 Σ I_k) = 1`.
pub(crate) fn miller<F: Real>(m_max: u32, z: F) -> Vec<F> {
    let zf = z.to_f64_lossy();
    let start = m_max as usize + (80.0 * zf).sqrt().ceil() as usize + 30;
    let len = m_max as usize + 1;
    let two = F::lit(2.0);
    let big = F::max_value().sqrt().sqrt();
    let mut out = vec![F::zero(); len];
    let mut next = F::zero();
    let mut cur = F::min_positive_value().sqrt();
    let mut norm = F::zero();
    for k in (1..=start).rev() {
        if k < len {
            out[k] = cur;
        }
        norm = norm + two * cur;
        let prev = two * F::from_count(k) / z * cur + next;
        next = cur;
        cur = prev;
        if cur > big {
            let s = big.recip();
            cur = cur * s;
            next = next * s;
            norm = norm * s;
            for v in out.iter_mut() {
                *v = *v * s;
            }
        }
    }
    out[0] = cur;
    norm = norm + cur;
    for v in out.iter_mut() {
        *v = *v / norm;
    }
    out
}
