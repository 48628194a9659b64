//! Spread measures for signals on the centered grid.
//!
//! The circular variance is the d^2-weighted energy spread around the best
//! center `a` on the circle of circumference `sqrt(N)`. The angular spread,
//! sparsity and entropy are geometry-blind comparison measures.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::dft::dft;
use crate::error::{Error, Result};
use crate::grid::{circular_distance, GridSpec};
use crate::signal::Signal;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Measure {
    CircularVariance,
    Angular,
    Sparsity,
    Entropy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Domain {
    Time,
    Frequency,
}

/// Value of one spread measure for one signal in one domain.
///
/// `mean` is the minimizing center for the circular variance and the
/// circular mean direction (in grid units) for the angular spread; it is
/// absent for sparsity and entropy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpreadReport {
    pub measure: Measure,
    pub domain: Domain,
    pub mean: Option<f64>,
    pub value: f64,
}

/// Circular variance and its minimizing center.
///
/// The objective `a -> sum_j d(j, a)^2 |x(j)|^2` is quadratic between
/// consecutive grid points: the antipode of a grid point is again a grid
/// point, so the nearest lattice image of every sample is fixed on each
/// piece. Each piece is minimized in closed form and the best piece wins.
/// Ties go to the smallest center in `(-sqrt(N)/2, sqrt(N)/2]`.
pub fn circular_variance(x: &Signal) -> Result<SpreadReport> {
    let (value, mean) = variance_of_energy(x.grid(), &x.energy())?;
    Ok(SpreadReport {
        measure: Measure::CircularVariance,
        domain: Domain::Time,
        mean: Some(mean),
        value,
    })
}

/// Normalized spread `sum_j d(j, a)^2 |x(j)|^2 / ||x||^2` around a fixed `a`.
pub fn circular_variance_at(x: &Signal, a: f64) -> Result<f64> {
    let energy = x.energy();
    let total: f64 = energy.iter().sum();
    if total <= 0.0 {
        return Err(Error::ZeroSignal);
    }
    let grid = x.grid();
    let weighted: f64 = grid
        .points()
        .zip(&energy)
        .map(|(p, w)| circular_distance(grid, p.j, a).powi(2) * w)
        .sum();
    Ok(weighted / total)
}

/// Exact circular variance for an energy distribution in storage order.
///
/// Returns `(variance, mean)`.
pub(crate) fn variance_of_energy(grid: &GridSpec, energy: &[f64]) -> Result<(f64, f64)> {
    let n = grid.n() as i64;
    let half = n / 2;
    let total: f64 = energy.iter().sum();
    if !(total > 0.0) {
        return Err(Error::ZeroSignal);
    }
    let support: Vec<(i64, f64)> = energy
        .iter()
        .enumerate()
        .filter(|(_, &w)| w > 0.0)
        .map(|(pos, &w)| (grid.index(pos), w))
        .collect();

    let mut best_value = f64::INFINITY;
    let mut best_mean = 0.0;
    // piece [m0, m0 + 1] in index units, m0 = -n/2 .. n/2 - 1
    for m0 in -half..half {
        let (mut s0, mut s1) = (0.0, 0.0);
        for &(m, w) in &support {
            let r = unwrap_offset(m - m0, n);
            s0 += w;
            s1 += w * r as f64;
        }
        let c = (s1 / s0).clamp(0.0, 1.0);
        let spread: f64 = support
            .iter()
            .map(|&(m, w)| {
                let d = unwrap_offset(m - m0, n) as f64 - c;
                w * d * d
            })
            .sum();
        let value = spread / (s0 * n as f64);
        let mut mean = (m0 as f64 + c) * grid.spacing();
        if m0 == -half && c == 0.0 {
            mean = 0.5 * grid.period();
        }
        let tol = 1e-12 * (1.0 + best_value.min(value));
        if value < best_value - tol || ((value - best_value).abs() <= tol && mean < best_mean) {
            best_mean = mean;
        }
        best_value = best_value.min(value);
    }
    Ok((best_value.max(0.0), best_mean))
}

/// Representative of `offset` modulo `n` in `-n/2+1 ..= n/2`.
#[inline]
fn unwrap_offset(offset: i64, n: i64) -> i64 {
    let half = n / 2;
    (offset + half - 1).rem_euclid(n) - half + 1
}

/// First circular moment of the energy after mapping `j -> 2 pi j / sqrt(N)`.
pub fn first_circular_moment(x: &Signal) -> Result<Complex64> {
    let total = x.norm_sq();
    if total <= 0.0 {
        return Err(Error::ZeroSignal);
    }
    let n = x.grid().n() as i64;
    let sum: Complex64 = x
        .grid()
        .points()
        .zip(x.values())
        .map(|(p, v)| {
            let theta = 2.0 * PI * p.m.rem_euclid(n) as f64 / n as f64;
            Complex64::from_polar(v.norm_sqr(), theta)
        })
        .sum();
    Ok(sum / total)
}

/// Breitenberger-style angular spread `(1 - |tau|^2) / |tau|^2`, converted
/// back to squared grid units by the factor `N / (4 pi^2)` so it can be
/// compared with the circular variance.
pub fn angular_spread(x: &Signal) -> Result<SpreadReport> {
    let tau = first_circular_moment(x)?;
    let r2 = tau.norm_sqr();
    if r2.sqrt() < 1e-12 {
        return Err(Error::ZeroCircularMoment);
    }
    let n = x.grid().n() as f64;
    let angular = ((1.0 - r2) / r2).max(0.0);
    let mean = x
        .grid()
        .wrap_coordinate(tau.arg() * x.grid().period() / (2.0 * PI));
    Ok(SpreadReport {
        measure: Measure::Angular,
        domain: Domain::Time,
        mean: Some(mean),
        value: angular * n / (4.0 * PI * PI),
    })
}

/// Number of entries with `|x(j)| > threshold`.
pub fn sparsity(x: &Signal, threshold: f64) -> Result<SpreadReport> {
    if !(threshold >= 0.0) {
        return Err(Error::InvalidParameter(format!(
            "sparsity threshold must be nonnegative, got {threshold}"
        )));
    }
    let count = x.values().iter().filter(|v| v.norm() > threshold).count();
    Ok(SpreadReport {
        measure: Measure::Sparsity,
        domain: Domain::Time,
        mean: None,
        value: count as f64,
    })
}

/// Shannon entropy (natural log) of `|x(j)|^2 / ||x||^2`.
pub fn entropy(x: &Signal) -> Result<SpreadReport> {
    let total = x.norm_sq();
    if total <= 0.0 {
        return Err(Error::ZeroSignal);
    }
    let value = x
        .values()
        .iter()
        .map(|v| v.norm_sqr() / total)
        .filter(|&p| p > 0.0)
        .map(|p| -p * p.ln())
        .sum::<f64>()
        .max(0.0);
    Ok(SpreadReport {
        measure: Measure::Entropy,
        domain: Domain::Time,
        mean: None,
        value,
    })
}

/// Evaluates `measure` on `x` (time domain) or on `dft(x)` (frequency domain).
pub fn measure_spread(
    x: &Signal,
    measure: Measure,
    domain: Domain,
    threshold: f64,
) -> Result<SpreadReport> {
    let transformed;
    let target = match domain {
        Domain::Time => x,
        Domain::Frequency => {
            transformed = dft(x);
            &transformed
        }
    };
    let mut report = match measure {
        Measure::CircularVariance => circular_variance(target)?,
        Measure::Angular => angular_spread(target)?,
        Measure::Sparsity => sparsity(target, threshold)?,
        Measure::Entropy => entropy(target)?,
    };
    report.domain = domain;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::make_grid;

    fn dense_min(x: &Signal, samples: usize) -> f64 {
        let p = x.grid().period();
        (0..samples)
            .map(|i| -0.5 * p + p * (i as f64 + 1.0) / samples as f64)
            .map(|a| circular_variance_at(x, a).unwrap())
            .fold(f64::INFINITY, f64::min)
    }

    #[test]
    fn delta_has_zero_variance() {
        for n in [2, 4, 16, 64] {
            let g = make_grid(n).unwrap();
            let r = circular_variance(&Signal::delta(g, 0)).unwrap();
            assert_eq!(r.value, 0.0);
            assert_eq!(r.mean, Some(0.0));
        }
    }

    #[test]
    fn uniform_n16_matches_dense_oracle() {
        let g = make_grid(16).unwrap();
        let x = Signal::uniform(g);
        let r = circular_variance(&x).unwrap();
        // centered on a grid point the spread is sum m^2 / 256; halfway
        // between two points it drops to sum (m - 1/2)^2 / 256
        let on_point: f64 = (-7..=8).map(|m: i64| (m * m) as f64).sum::<f64>() / 256.0;
        let between: f64 = (-7..=8).map(|m: i64| (m as f64 - 0.5).powi(2)).sum::<f64>() / 256.0;
        assert!((circular_variance_at(&x, 0.0).unwrap() - on_point).abs() < 1e-12);
        let oracle = dense_min(&x, 100_000);
        assert!(
            (r.value - between).abs() < 1e-12,
            "{} vs {}",
            r.value,
            between
        );
        assert!((oracle - between).abs() < 1e-8);
        assert!(r.value < on_point);
    }

    #[test]
    fn variance_at_examples() {
        let g = make_grid(16).unwrap();
        let d = Signal::delta(g, 0);
        assert_eq!(circular_variance_at(&d, 0.0).unwrap(), 0.0);
        assert!((circular_variance_at(&d, 2.0).unwrap() - 4.0).abs() < 1e-15);
    }

    #[test]
    fn zero_signal_rejected() {
        let g = make_grid(8).unwrap();
        let z = Signal::zeros(g);
        assert_eq!(circular_variance(&z).unwrap_err(), Error::ZeroSignal);
        assert_eq!(
            circular_variance_at(&z, 0.0).unwrap_err(),
            Error::ZeroSignal
        );
        assert_eq!(entropy(&z).unwrap_err(), Error::ZeroSignal);
        assert_eq!(angular_spread(&z).unwrap_err(), Error::ZeroSignal);
    }

    #[test]
    fn symmetric_pair_breaks_tie_low() {
        // pulses at m = -1 and m = 1: centers 0 and the antipode 2 tie only if
        // the spread is equal; here 0 wins outright
        let g = make_grid(16).unwrap();
        let x = Signal::delta(g, -1).scaled(Complex64::new(1.0, 0.0));
        let y = Signal::new(
            g,
            x.values()
                .iter()
                .zip(Signal::delta(g, 1).values())
                .map(|(a, b)| a + b)
                .collect(),
        )
        .unwrap();
        let r = circular_variance(&y).unwrap();
        assert!((r.value - 1.0 / 16.0).abs() < 1e-15);
        assert!(r.mean.unwrap().abs() < 1e-15);

        // antipodal pair m = 0 and m = 8: centers -1 and 1 tie, -1 is reported
        let z = Signal::new(
            g,
            Signal::delta(g, 0)
                .values()
                .iter()
                .zip(Signal::delta(g, 8).values())
                .map(|(a, b)| a + b)
                .collect(),
        )
        .unwrap();
        let r = circular_variance(&z).unwrap();
        assert!((r.value - 1.0).abs() < 1e-12);
        assert!((r.mean.unwrap() + 1.0).abs() < 1e-12);
    }

    #[test]
    fn angular_examples() {
        let g = make_grid(16).unwrap();
        let r = angular_spread(&Signal::delta(g, 0)).unwrap();
        assert!(r.value.abs() < 1e-15);
        assert_eq!(
            angular_spread(&Signal::uniform(g)).unwrap_err(),
            Error::ZeroCircularMoment
        );
    }

    #[test]
    fn sparsity_examples() {
        let g = make_grid(16).unwrap();
        assert_eq!(sparsity(&Signal::delta(g, 2), 0.0).unwrap().value, 1.0);
        assert_eq!(sparsity(&Signal::uniform(g), 0.0).unwrap().value, 16.0);
        let comb = Signal::comb(g, 4).unwrap();
        let tol = 1e-12 * comb.norm();
        let s_time = sparsity(&comb, tol).unwrap().value;
        let s_freq = sparsity(&crate::dft::dft_direct(&comb), tol).unwrap().value;
        assert_eq!(s_time, 4.0);
        assert_eq!(s_freq, 4.0);
        assert_eq!(s_time * s_freq, 16.0);
        assert!(sparsity(&comb, -1.0).is_err());
    }

    #[test]
    fn entropy_examples() {
        let g = make_grid(16).unwrap();
        assert_eq!(entropy(&Signal::delta(g, 0)).unwrap().value, 0.0);
        assert!((entropy(&Signal::uniform(g)).unwrap().value - 16f64.ln()).abs() < 1e-12);
        let comb = Signal::comb(g, 4).unwrap();
        assert!((entropy(&comb).unwrap().value - 4f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn frequency_domain_report_is_tagged() {
        let g = make_grid(16).unwrap();
        let r = measure_spread(
            &Signal::delta(g, 0),
            Measure::Entropy,
            Domain::Frequency,
            0.0,
        )
        .unwrap();
        assert_eq!(r.domain, Domain::Frequency);
        assert!((r.value - 16f64.ln()).abs() < 1e-12);
    }
}
