//! Integer-order Bessel functions of the first kind.

use crate::Real;

const SERIES_LIMIT: f64 = 2.0;

/// `J_n(x)` for `n ≥ 0`, `x ≥ 0`.
pub fn bessel_j<F: Real>(n: u32, x: F) -> F {
    if x < F::lit(SERIES_LIMIT) {
        return series(n, x);
    }
    bessel_j_seq(n, x)[n as usize]
}

/// `[J_0(x), …, J_{n_max}(x)]` from one backward (Miller) recurrence.
///
/// For `x < 2` each order comes from its ascending series instead.
pub fn bessel_j_seq<F: Real>(n_max: u32, x: F) -> Vec<F> {
    let len = n_max as usize + 1;
    if x < F::lit(SERIES_LIMIT) {
        return (0..=n_max).map(|n| series(n, x)).collect();
    }
    let xf = x.to_f64_lossy();
    let top = (n_max as f64).max(xf.ceil()) + 16.0 + (10.0 * xf.cbrt()).ceil();
    let mut start = top as usize;
    start += start % 2;

    let two = F::lit(2.0);
    let big = F::max_value().sqrt().sqrt();
    let mut out = vec![F::zero(); len];
    let mut next = F::zero();
    let mut cur = F::min_positive_value().sqrt();
    // normalization: J_0 + 2 Σ J_{2k} = 1
    let mut norm = F::zero();
    for k in (1..=start).rev() {
        if k < len {
            out[k] = cur;
        }
        if k % 2 == 0 {
            norm = norm + two * cur;
        }
        let prev = two * F::from_count(k) / x * cur - next;
        next = cur;
        cur = prev;
        if cur.abs() > big {
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

fn series<F: Real>(n: u32, x: F) -> F {
    if x == F::zero() {
        return if n == 0 { F::one() } else { F::zero() };
    }
    let half = x / F::lit(2.0);
    let mut term = F::one();
    for k in 1..=n {
        term = term * half / F::from_int(k as i64);
    }
    let q = -half * half;
    let mut sum = term;
    let nf = F::from_int(n as i64);
    for k in 1..200 {
        let kf = F::from_int(k);
        term = term * q / (kf * (kf + nf));
        sum = sum + term;
        if term.abs() <= F::epsilon() * sum.abs() * F::lit(0.1) {
            break;
        }
    }
    sum
}
