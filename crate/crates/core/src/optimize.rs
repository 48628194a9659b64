//! Projected gradient descent of `v_x * v_x_hat` over real unit vectors.
//!
//! Both variances are minima over a center, so at fixed centers the
//! objective is a quadratic form and its gradient is exact there (envelope
//! argument). At a breakpoint the center picked by the variance routine
//! (smallest tie) fixes the piece, which makes the subgradient choice
//! deterministic.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::Serialize;

use crate::dft::{dft, idft};
use crate::error::{Error, Result};
use crate::grid::{circular_distance, GridSpec};
use crate::signal::Signal;
use crate::spread::variance_of_energy;

/// Step halvings tried before an iteration gives up on finding a decrease.
const MAX_HALVINGS: usize = 60;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OptimizerTrace {
    pub iterations: usize,
    pub final_product: f64,
    /// `(iteration, product)` after each iteration, starting at 1.
    pub history: Vec<(usize, f64)>,
    pub seed: u64,
}

struct Evaluation {
    product: f64,
    gradient: Vec<f64>,
}

/// Product and its gradient at a real unit vector `x`.
fn evaluate(grid: &GridSpec, x: &[f64]) -> Result<Evaluation> {
    let signal = Signal::from_real(*grid, x)?;
    let energy = signal.energy();
    let total: f64 = energy.iter().sum();
    let (v_time, mu_time) = variance_of_energy(grid, &energy)?;

    let spectrum = dft(&signal);
    let (v_freq, mu_freq) = variance_of_energy(grid, &spectrum.energy())?;

    let grad_time: Vec<f64> = grid
        .points()
        .zip(x)
        .map(|(p, &xi)| 2.0 * xi * (circular_distance(grid, p.j, mu_time).powi(2) - v_time) / total)
        .collect();

    let weighted: Vec<Complex64> = grid
        .points()
        .zip(spectrum.values())
        .map(|(p, y)| y * ((circular_distance(grid, p.j, mu_freq).powi(2) - v_freq) / total))
        .collect();
    let back = idft(&Signal::new(*grid, weighted)?);

    let gradient = grad_time
        .iter()
        .zip(back.values())
        .map(|(gt, gf)| v_freq * gt + v_time * 2.0 * gf.re)
        .collect();
    Ok(Evaluation {
        product: v_time * v_freq,
        gradient,
    })
}

fn normalize(x: &mut [f64]) -> Result<()> {
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if !(norm > 0.0) {
        return Err(Error::ZeroSignal);
    }
    x.iter_mut().for_each(|v| *v /= norm);
    Ok(())
}

/// Minimizes the uncertainty product from a seeded Gaussian-noise start.
///
/// `step` is the initial move length on the sphere; it is halved whenever a
/// step fails to decrease the product and never grows back, so the trace is
/// non-increasing. Returns the best signal (unit norm) and the trace.
pub fn optimize_window(
    grid: &GridSpec,
    seed: u64,
    max_iters: usize,
    step: f64,
) -> Result<(Signal, OptimizerTrace)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let start: Vec<f64> = (0..grid.n())
        .map(|_| StandardNormal.sample(&mut rng))
        .collect();
    let start = Signal::from_real(*grid, &start)?;
    optimize_window_from(&start, seed, max_iters, step)
}

/// Same descent from a given start; only the real part of `start` is used.
pub fn optimize_window_from(
    start: &Signal,
    seed: u64,
    max_iters: usize,
    step: f64,
) -> Result<(Signal, OptimizerTrace)> {
    if max_iters == 0 {
        return Err(Error::InvalidParameter(
            "max_iters must be at least 1".into(),
        ));
    }
    if !(step > 0.0 && step.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "step must be positive, got {step}"
        )));
    }
    let grid = *start.grid();
    let mut x: Vec<f64> = start.values().iter().map(|v| v.re).collect();
    normalize(&mut x)?;

    let mut current = evaluate(&grid, &x)?;
    let mut step = step;
    let mut history = Vec::with_capacity(max_iters);
    for iteration in 1..=max_iters {
        // tangent component of the gradient
        let radial: f64 = current.gradient.iter().zip(&x).map(|(g, v)| g * v).sum();
        let tangent: Vec<f64> = current
            .gradient
            .iter()
            .zip(&x)
            .map(|(g, v)| g - radial * v)
            .collect();
        let gnorm = tangent.iter().map(|g| g * g).sum::<f64>().sqrt();

        if gnorm > 0.0 && gnorm.is_finite() {
            for _ in 0..MAX_HALVINGS {
                let mut candidate: Vec<f64> = x
                    .iter()
                    .zip(&tangent)
                    .map(|(v, g)| v - step * g / gnorm)
                    .collect();
                normalize(&mut candidate)?;
                let trial = evaluate(&grid, &candidate)?;
                if trial.product < current.product {
                    x = candidate;
                    current = trial;
                    break;
                }
                step *= 0.5;
            }
        }
        history.push((iteration, current.product));
    }

    let signal = Signal::from_real(grid, &x)?;
    let trace = OptimizerTrace {
        iterations: history.len(),
        final_product: current.product,
        history,
        seed,
    };
    Ok((signal, trace))
}
