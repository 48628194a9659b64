//! Uncertainty products, the discrete/continuous sandwich check, width
//! sweeps and the circle asymptotics table.

use rayon::prelude::*;
use serde::Serialize;

use crate::continuous::{
    angular_spread_to_time, circle_moments, coefficient_spread_to_ordinary, continuous_variance,
    CircleMoments, HEISENBERG_BOUND,
};
use crate::dft::dft;
use crate::error::{Error, Result};
use crate::grid::{make_grid, GridSpec};
use crate::localized::{gaussian, GaussianParams, LocalizedFunction};
use crate::periodize::{localization_epsilon, periodize_sample, DEFAULT_TAIL_TOL};
use crate::signal::Signal;
use crate::spread::{circular_variance, Domain};

/// Relative slack on both sides of the sandwich and on the lower bound.
///
/// For well-localized functions `sqrt(eps)` drops far below machine
/// precision and the sandwich degenerates to an equality, which the
/// quadrature (successive-estimate tolerance 1e-12) and the O(N) sums can
/// only meet to about this accuracy.
pub const SANDWICH_RTOL: f64 = 1e-11;

/// Time and frequency circular variances of one signal.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct UncertaintyReport {
    pub v_time: f64,
    pub mean_time: f64,
    pub v_freq: f64,
    pub mean_freq: f64,
    pub product: f64,
}

pub fn uncertainty(x: &Signal) -> Result<UncertaintyReport> {
    let t = circular_variance(x)?;
    let f = circular_variance(&dft(x))?;
    Ok(UncertaintyReport {
        v_time: t.value,
        mean_time: t.mean.unwrap_or(0.0),
        v_freq: f.value,
        mean_freq: f.mean.unwrap_or(0.0),
        product: t.value * f.value,
    })
}

/// `v_x * v_x_hat`.
pub fn uncertainty_product(x: &Signal) -> Result<f64> {
    Ok(uncertainty(x)?.product)
}

/// Discrete versus continuous uncertainty for one function on one grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremReport {
    pub n: usize,
    pub function_label: String,
    pub epsilon: f64,
    pub continuous_time: f64,
    pub continuous_freq: f64,
    pub continuous_product: f64,
    /// Absent only when the bound is vacuous and the function decays too
    /// slowly to be periodized.
    pub discrete_product: Option<f64>,
    pub sandwich_low: f64,
    pub sandwich_high: f64,
    pub lower_bound: f64,
    pub sandwich_pass: bool,
    pub bound_pass: bool,
    /// `sqrt(eps) >= 1`: the sandwich says nothing.
    pub vacuous: bool,
}

/// Checks `sqrt(v_f v_f_hat)(1 - sqrt eps) <= sqrt(v_x v_x_hat) <=
/// sqrt(v_f v_f_hat)(1 + sqrt eps)` and `v_x v_x_hat >= (1 - sqrt eps)^2 /
/// (16 pi^2)` for `x = x_f`.
pub fn verify_main_theorem(f: &LocalizedFunction, grid: &GridSpec) -> Result<TheoremReport> {
    let epsilon = localization_epsilon(f, grid)?;
    let root_eps = epsilon.sqrt();
    let vacuous = root_eps >= 1.0;

    let v_time = continuous_variance(f, Domain::Time)?.variance;
    let v_freq = continuous_variance(f, Domain::Frequency)?.variance;
    let continuous_product = v_time * v_freq;
    let root_cp = continuous_product.sqrt();
    let low_root = root_cp * (1.0 - root_eps);
    let high_root = root_cp * (1.0 + root_eps);
    let lower_bound = (1.0 - root_eps).powi(2) * HEISENBERG_BOUND;

    let discrete_product = match periodize_sample(f, grid, DEFAULT_TAIL_TOL) {
        Ok(x) => Some(uncertainty_product(&x)?),
        Err(Error::InsufficientDecay { .. }) if vacuous => None,
        Err(e) => return Err(e),
    };

    let (sandwich_pass, bound_pass) = match discrete_product {
        Some(dp) if !vacuous => {
            let root_dp = dp.sqrt();
            (
                root_dp >= low_root * (1.0 - SANDWICH_RTOL)
                    && root_dp <= high_root * (1.0 + SANDWICH_RTOL),
                dp >= lower_bound * (1.0 - SANDWICH_RTOL),
            )
        }
        _ => (false, false),
    };

    Ok(TheoremReport {
        n: grid.n(),
        function_label: f.label().to_string(),
        epsilon,
        continuous_time: v_time,
        continuous_freq: v_freq,
        continuous_product,
        discrete_product,
        sandwich_low: low_root.max(0.0).powi(2),
        sandwich_high: high_root.powi(2),
        lower_bound,
        sandwich_pass,
        bound_pass,
        vacuous,
    })
}

/// `steps` evenly spaced Gaussian widths from `c_min` to `c_max`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WidthRange {
    pub c_min: f64,
    pub c_max: f64,
    pub steps: usize,
}

impl WidthRange {
    pub fn widths(&self) -> Result<Vec<f64>> {
        let Self {
            c_min,
            c_max,
            steps,
        } = *self;
        if !(c_min > 0.0 && c_max.is_finite() && c_min <= c_max) {
            return Err(Error::InvalidParameter(format!(
                "width range needs 0 < c_min <= c_max, got [{c_min}, {c_max}]"
            )));
        }
        if steps == 0 {
            return Err(Error::InvalidParameter("steps must be at least 1".into()));
        }
        if steps == 1 {
            return Ok(vec![c_min]);
        }
        let span = c_max - c_min;
        Ok((0..steps)
            .map(|i| {
                if i + 1 == steps {
                    c_max
                } else {
                    c_min + span * i as f64 / (steps - 1) as f64
                }
            })
            .collect())
    }
}

/// One sweep point; a failed row keeps its error message.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub n: usize,
    pub c: f64,
    pub report: std::result::Result<TheoremReport, String>,
}

/// Main-theorem reports for centered Gaussians over `widths x n_list`, in
/// order of ascending `n`, then ascending `c`. Rows run in parallel.
pub fn sweep(widths: WidthRange, n_list: &[usize]) -> Result<Vec<SweepRow>> {
    let cs = widths.widths()?;
    let mut ns = n_list.to_vec();
    ns.sort_unstable();
    let points: Vec<(usize, f64)> = ns
        .iter()
        .flat_map(|&n| cs.iter().map(move |&c| (n, c)))
        .collect();
    Ok(points
        .into_par_iter()
        .map(|(n, c)| SweepRow {
            n,
            c,
            report: sweep_point(n, c).map_err(|e| e.to_string()),
        })
        .collect())
}

fn sweep_point(n: usize, c: f64) -> Result<TheoremReport> {
    let grid = make_grid(n)?;
    verify_main_theorem(&gaussian(GaussianParams::centered(c)?)?, &grid)
}

/// One row of the circle asymptotics table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CircleRow {
    pub a: f64,
    pub n_coeffs: usize,
    pub angular_variance: f64,
    pub coeff_variance: f64,
    /// `a^2 * angular_variance`, tends to `v_f`.
    pub time_spread: f64,
    /// `coeff_variance / (4 pi^2 a^2)`, tends to `v_f_hat`.
    pub freq_spread: f64,
    /// `time_spread * freq_spread`, tends to `v_f v_f_hat`.
    pub product: f64,
    /// `angular_variance * coeff_variance`, always above 1/4.
    pub circle_product: f64,
}

impl CircleRow {
    fn new(a: f64, n_coeffs: usize, m: &CircleMoments) -> Self {
        let time_spread = angular_spread_to_time(m.angular_variance, a);
        let freq_spread = coefficient_spread_to_ordinary(m.coeff_variance, a);
        Self {
            a,
            n_coeffs,
            angular_variance: m.angular_variance,
            coeff_variance: m.coeff_variance,
            time_spread,
            freq_spread,
            product: time_spread * freq_spread,
            circle_product: m.circle_product(),
        }
    }
}

const MAX_COEFFS: usize = 1 << 15;

/// Circle measures of the periodized dilates `f_a` for each `a`, with the
/// coefficient range grown until the tail energy is negligible.
pub fn circle_asymptotics(f: &LocalizedFunction, a_list: &[f64]) -> Result<Vec<CircleRow>> {
    a_list
        .iter()
        .map(|&a| {
            if !(a > 0.0 && a.is_finite()) {
                return Err(Error::InvalidParameter(format!(
                    "dilation a must be positive, got {a}"
                )));
            }
            let mut n_coeffs = ((16.0 * a).ceil() as usize).max(32);
            loop {
                match circle_moments(f, a, n_coeffs) {
                    Ok(m) => return Ok(CircleRow::new(a, n_coeffs, &m)),
                    Err(Error::InsufficientCoefficients { .. }) if n_coeffs < MAX_COEFFS => {
                        n_coeffs *= 2;
                    }
                    Err(e) => return Err(e),
                }
            }
        })
        .collect()
}
