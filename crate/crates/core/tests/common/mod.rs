//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's spread or transform routines.
#![allow(dead_code)]

use std::f64::consts::PI;

use discrete_uncertainty::{GridSpec, Signal};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

pub const BOUND: f64 = 1.0 / (16.0 * PI * PI);

/// Centered indices `-N/2+1 ..= N/2`.
pub fn indices(n: usize) -> impl Iterator<Item = i64> {
    let h = (n / 2) as i64;
    (-h + 1)..=h
}

/// `sum_m d(m / sqrt N, a)^2 w_m / sum w`, nearest image taken explicitly.
pub fn spread_at(weights: &[f64], a: f64) -> f64 {
    let n = weights.len();
    let p = (n as f64).sqrt();
    let total: f64 = weights.iter().sum();
    indices(n)
        .zip(weights)
        .map(|(m, w)| {
            let j = m as f64 / p;
            let d = [-1.0, 0.0, 1.0]
                .iter()
                .map(|k| (j - a + k * p).abs())
                .fold(f64::INFINITY, f64::min);
            d * d * w
        })
        .sum::<f64>()
        / total
}

fn golden(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let r = (5f64.sqrt() - 1.0) / 2.0;
    let mut best = f(lo).min(f(hi));
    for _ in 0..200 {
        let a = hi - r * (hi - lo);
        let b = lo + r * (hi - lo);
        let (fa, fb) = (f(a), f(b));
        best = best.min(fa).min(fb);
        if fa <= fb {
            hi = b;
        } else {
            lo = a;
        }
        if hi - lo < 1e-15 {
            break;
        }
    }
    best.min(f(0.5 * (lo + hi)))
}

/// Minimum over a dense center grid on `(-sqrt N/2, sqrt N/2]`, each
/// near-best local minimum refined by golden-section search.
pub fn dense_min(weights: &[f64], samples: usize) -> f64 {
    let p = (weights.len() as f64).sqrt();
    let h = p / samples as f64;
    let values: Vec<f64> = (0..samples)
        .map(|i| spread_at(weights, -0.5 * p + h * (i as f64 + 1.0)))
        .collect();
    let coarse = values.iter().cloned().fold(f64::INFINITY, f64::min);
    let mut best = coarse;
    for i in 0..samples {
        let prev = values[(i + samples - 1) % samples];
        let next = values[(i + 1) % samples];
        if values[i] <= prev && values[i] <= next && values[i] <= coarse + 1e-6 {
            let a = -0.5 * p + h * (i as f64 + 1.0);
            best = best.min(golden(|c| spread_at(weights, c), a - h, a + h));
        }
    }
    best
}

/// Unitary DFT by the textbook double sum with floating phases.
pub fn naive_dft(values: &[Complex64]) -> Vec<Complex64> {
    let n = values.len();
    let s = 1.0 / (n as f64).sqrt();
    indices(n)
        .map(|p| {
            indices(n)
                .zip(values)
                .map(|(m, v)| {
                    let phase = -2.0 * PI * ((m * p) as f64) / n as f64;
                    v * Complex64::new(phase.cos(), phase.sin())
                })
                .sum::<Complex64>()
                * s
        })
        .collect()
}

pub fn energy(values: &[Complex64]) -> Vec<f64> {
    values.iter().map(|v| v.norm_sqr()).collect()
}

pub fn random_complex(grid: GridSpec, rng: &mut ChaCha8Rng) -> Signal {
    Signal::from_fn(grid, |_| {
        Complex64::new(
            StandardNormal.sample(&mut *rng),
            StandardNormal.sample(&mut *rng),
        )
    })
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Best `|<x, y>| / (|x| |y|)` over circular shifts of `y`, optionally
/// also over `y` multiplied by `(-1)^m`. Real parts only.
pub fn shift_correlation(x: &Signal, y: &Signal, alternating: bool) -> f64 {
    let n = x.len();
    let xs: Vec<f64> = x.values().iter().map(|v| v.re).collect();
    let ys: Vec<f64> = y.values().iter().map(|v| v.re).collect();
    let nx = xs.iter().map(|v| v * v).sum::<f64>().sqrt();
    let ny = ys.iter().map(|v| v * v).sum::<f64>().sqrt();
    let mut best: f64 = 0.0;
    for s in 0..n {
        for flip in [false, true] {
            if flip && !alternating {
                continue;
            }
            let dot: f64 = (0..n)
                .map(|i| {
                    let k = (i + s) % n;
                    let sign = if flip && k % 2 == 1 { -1.0 } else { 1.0 };
                    xs[i] * ys[k] * sign
                })
                .sum();
            best = best.max(dot.abs() / (nx * ny));
        }
    }
    best
}
