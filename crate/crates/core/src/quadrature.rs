//! Gauss-Legendre rules.

use crate::{Error, Real, Result};

/// Nodes and weights of an `n`-point Gauss-Legendre rule.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussLegendre<F> {
    pub nodes: Vec<F>,
    pub weights: Vec<F>,
}

impl<F: Real> GaussLegendre<F> {
    /// Rule on `[-1, 1]`; nodes from Newton iteration on `P_n`.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::param("n_beta", "a Gauss-Legendre rule needs at least one node"));
        }
        let mut nodes = vec![0.0_f64; n];
        let mut weights = vec![0.0_f64; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 1.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(n, x);
            dp = if d != 0.0 { d } else { dp };
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        Ok(Self { nodes: nodes.into_iter().map(F::lit).collect(), weights: weights.into_iter().map(F::lit).collect() })
    }

    /// Rule mapped onto `[a, b]`.
    pub fn on_interval(n: usize, a: F, b: F) -> Result<Self> {
        let base = Self::new(n)?;
        let half = (b - a) / F::lit(2.0);
        let mid = (b + a) / F::lit(2.0);
        Ok(Self {
            nodes: base.nodes.iter().map(|&x| mid + half * x).collect(),
            weights: base.weights.iter().map(|&w| w * half).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integrate<G: FnMut(F) -> F>(&self, mut f: G) -> F {
        let mut acc = crate::summation::CompensatedSum::new();
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            acc.add(w * f(x));
        }
        acc.value()
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}
