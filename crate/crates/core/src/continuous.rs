//! Continuous-side reference values.
//!
//! Two Fourier conventions live here and are never mixed implicitly:
//!
//! * the line transform `f_hat(xi) = int f(t) exp(-2 pi i xi t) dt`
//!   (ordinary frequency), used by [`continuous_variance`];
//! * `2 pi`-periodic functions with coefficients
//!   `f_hat(k) = (1 / 2 pi) int_0^{2 pi} f(t) exp(-i k t) dt` (angular
//!   frequency), used by [`circle_moments`].
//!
//! [`coefficient_spread_to_ordinary`] is the only conversion between them.

use std::f64::consts::PI;

use num_complex::Complex64;
use rustfft::FftDirection;
use serde::Serialize;

use crate::dft::fft_in_place;
use crate::error::{Error, Result};
use crate::localized::LocalizedFunction;
use crate::quadrature::integrate_line;
use crate::spread::Domain;

/// `1 / (16 pi^2)`, the Heisenberg lower bound for `v_f v_f_hat`.
pub const HEISENBERG_BOUND: f64 = 1.0 / (16.0 * PI * PI);

/// Lower bound of the angular-spread product for functions on the circle.
pub const CIRCLE_BOUND: f64 = 0.25;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ContinuousMoments {
    pub mean: f64,
    pub variance: f64,
    pub norm_sq: f64,
}

/// Mean, variance and squared norm of `|f|^2` (time side) or `|f_hat|^2`
/// (frequency side) by quadrature.
pub fn continuous_variance(f: &LocalizedFunction, side: Domain) -> Result<ContinuousMoments> {
    let density = |t: f64| match side {
        Domain::Time => f.f(t).norm_sqr(),
        Domain::Frequency => f.f_hat(t).norm_sqr(),
    };
    let norm_sq = integrate_line(density)?;
    if !(norm_sq > 0.0) {
        return Err(Error::ZeroSignal);
    }
    let mean = integrate_line(|t| t * density(t))? / norm_sq;
    let variance = integrate_line(|t| (t - mean).powi(2) * density(t))? / norm_sq;
    Ok(ContinuousMoments {
        mean,
        variance,
        norm_sq,
    })
}

/// `v_f * v_f_hat`.
pub fn continuous_product(f: &LocalizedFunction) -> Result<f64> {
    Ok(continuous_variance(f, Domain::Time)?.variance
        * continuous_variance(f, Domain::Frequency)?.variance)
}

/// Circle-domain measures of the `2 pi`-periodized dilate
/// `f_a(t) = sqrt(a) sum_k f(a (t + 2 pi k))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleMoments {
    /// `(1 / ||f_a||^2) int_0^{2 pi} exp(i t) |f_a(t)|^2 dt`.
    pub tau: Complex64,
    /// `(1 - |tau|^2) / |tau|^2`.
    pub angular_variance: f64,
    /// Variance of `k` under the weights `|f_hat_a(k)|^2`, `|k| <= n_coeffs`.
    pub coeff_variance: f64,
    pub coeff_mean: f64,
    /// Energy fraction of the coefficients beyond `n_coeffs`.
    pub coeff_tail: f64,
    /// Periodic samples used for the final estimate.
    pub samples: usize,
}

impl CircleMoments {
    /// `angular_variance * coeff_variance`, bounded below by 1/4.
    pub fn circle_product(&self) -> f64 {
        self.angular_variance * self.coeff_variance
    }
}

const CIRCLE_STABILITY: f64 = 1e-10;
const CIRCLE_TAIL: f64 = 1e-12;
const MAX_IMAGES: i64 = 10_000;

/// `f_a(t)` with the image sum truncated once further terms are negligible.
fn periodized_dilate(f: &LocalizedFunction, a: f64, t: f64) -> Result<Complex64> {
    let term = |k: i64| -> Result<Complex64> {
        let s = a * (t + 2.0 * PI * k as f64);
        let v = f.f(s);
        if !(v.re.is_finite() && v.im.is_finite()) {
            return Err(Error::NonFinite(s));
        }
        Ok(v)
    };
    let mut acc = term(0)?;
    for k in 1..=MAX_IMAGES {
        let (p, m) = (term(k)?, term(-k)?);
        acc += p + m;
        if k >= 2 && p.norm().max(m.norm()) <= 1e-18 * acc.norm() {
            return Ok(acc * a.sqrt());
        }
    }
    Err(Error::InsufficientDecay {
        bound: f64::NAN,
        tol: 1e-18,
        periods: MAX_IMAGES as usize,
    })
}

/// Circle moments of `f_a`.
///
/// `tau` comes from the periodic trapezoid rule and the coefficients from a
/// discrete transform of the same samples; the sample count doubles until
/// both are stable to 1e-10.
pub fn circle_moments(f: &LocalizedFunction, a: f64, n_coeffs: usize) -> Result<CircleMoments> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "dilation a must be positive, got {a}"
        )));
    }
    if n_coeffs == 0 {
        return Err(Error::InvalidParameter("n_coeffs must be positive".into()));
    }
    let mut samples = (4 * (2 * n_coeffs + 1)).next_power_of_two().max(64);
    let mut previous: Option<CircleMoments> = None;
    for _ in 0..16 {
        let current = circle_moments_at(f, a, n_coeffs, samples)?;
        if let Some(prev) = previous {
            let dv = (current.coeff_variance - prev.coeff_variance).abs();
            let dt = (current.tau - prev.tau).norm();
            if dv <= CIRCLE_STABILITY * current.coeff_variance.abs().max(f64::MIN_POSITIVE)
                && dt <= CIRCLE_STABILITY
            {
                if current.coeff_tail > CIRCLE_TAIL {
                    return Err(Error::InsufficientCoefficients {
                        n_coeffs,
                        tail: current.coeff_tail,
                    });
                }
                return Ok(current);
            }
        }
        previous = Some(current);
        samples *= 2;
    }
    Err(Error::Quadrature(16))
}

fn circle_moments_at(
    f: &LocalizedFunction,
    a: f64,
    n_coeffs: usize,
    samples: usize,
) -> Result<CircleMoments> {
    let m = samples;
    let mut buf = Vec::with_capacity(m);
    let mut mass = 0.0;
    let mut first = Complex64::new(0.0, 0.0);
    for q in 0..m {
        let t = -PI + 2.0 * PI * q as f64 / m as f64;
        let v = periodized_dilate(f, a, t)?;
        let w = v.norm_sqr();
        mass += w;
        first += Complex64::from_polar(w, t);
        buf.push(v);
    }
    if !(mass > 0.0) {
        return Err(Error::ZeroSignal);
    }
    let tau = first / mass;
    let r2 = tau.norm_sqr();
    if r2 == 0.0 {
        return Err(Error::ZeroCircularMoment);
    }

    // |f_hat_a(k)| = |FFT[k mod m]| / m; the sample offset only changes phases
    fft_in_place(&mut buf, FftDirection::Forward);
    let half = (m / 2) as i64;
    let n = n_coeffs as i64;
    let (mut s0, mut s1, mut tail) = (0.0, 0.0, 0.0);
    let weights: Vec<(i64, f64)> = ((-half + 1)..=half)
        .map(|k| (k, buf[k.rem_euclid(m as i64) as usize].norm_sqr()))
        .collect();
    for &(k, w) in &weights {
        if k.abs() <= n {
            s0 += w;
            s1 += w * k as f64;
        } else {
            tail += w;
        }
    }
    let coeff_mean = s1 / s0;
    let coeff_variance = weights
        .iter()
        .filter(|(k, _)| k.abs() <= n)
        .map(|&(k, w)| (k as f64 - coeff_mean).powi(2) * w)
        .sum::<f64>()
        / s0;

    Ok(CircleMoments {
        tau,
        angular_variance: ((1.0 - r2) / r2).max(0.0),
        coeff_variance,
        coeff_mean,
        coeff_tail: tail / (s0 + tail),
        samples: m,
    })
}

/// Rescales the angular spread of `f_a` to the time variance of `f`:
/// `a^2 * angular_variance`.
pub fn angular_spread_to_time(angular_variance: f64, a: f64) -> f64 {
    a * a * angular_variance
}

/// Rescales the coefficient variance of `f_a` (integer angular frequencies)
/// to the ordinary-frequency variance of `f_hat`: `k = 2 pi a xi`.
pub fn coefficient_spread_to_ordinary(coeff_variance: f64, a: f64) -> f64 {
    coeff_variance / (4.0 * PI * PI * a * a)
}
