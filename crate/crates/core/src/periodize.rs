//! Periodized sampling `x_f(j) = N^{-1/4} sum_{l in sqrt(N) Z} f(j + l)` and
//! the localization constant that controls it.

use num_complex::Complex64;

use crate::dft::dft;
use crate::error::{Error, Result};
use crate::grid::GridSpec;
use crate::localized::{gaussian, Component, GaussianParams, LocalizedFunction};
use crate::signal::Signal;

pub const DEFAULT_TAIL_TOL: f64 = 1e-14;

/// Largest number of periods summed on each side of the origin.
pub const MAX_PERIODS: usize = 64;

/// Geometric ratio of the numeric supremum search.
const SEARCH_RATIO: f64 = 1.01;
/// The search runs from the radius out to `radius * 2^11`.
const SEARCH_SPAN: f64 = 2048.0;

/// `sup_{|t| >= radius} t^2 |g(t)|` for one component of `f`.
///
/// Uses the closed form when `f` carries one. Otherwise samples a geometric
/// grid (ratio 1.01) on both half-lines, stops early once the envelope has
/// decayed to zero, and polishes the best sample by golden-section search.
pub fn component_sup(f: &LocalizedFunction, component: Component, radius: f64) -> Result<f64> {
    if let Some(s) = f.closed_form_sup(component, radius) {
        return Ok(s);
    }
    let g = |t: f64| -> Result<f64> {
        let v = f.eval(component, t).norm();
        if !v.is_finite() {
            return Err(Error::NonFinite(t));
        }
        Ok(t * t * v)
    };

    let steps = (SEARCH_SPAN.ln() / SEARCH_RATIO.ln()).ceil() as usize;
    let mut best = 0.0;
    let mut best_t = radius;
    let mut samples: Vec<(f64, f64)> = Vec::with_capacity(steps + 1);
    for sign in [1.0, -1.0] {
        samples.clear();
        let mut t = radius;
        let mut decreasing_run = 0usize;
        for _ in 0..=steps {
            let v = g(sign * t)?;
            if let Some(&(_, prev)) = samples.last() {
                if v <= prev {
                    decreasing_run += 1;
                } else {
                    decreasing_run = 0;
                }
            }
            samples.push((t, v));
            if v > best {
                best = v;
                best_t = sign * t;
            }
            // eventually-decreasing envelope that has underflowed
            if v == 0.0 && decreasing_run >= 8 {
                break;
            }
            t *= SEARCH_RATIO;
        }
        if samples.len() == steps + 1 {
            let (t_end, v_end) = samples[steps];
            let quarter = g(sign * t_end / 4.0)?;
            if v_end > 1.01 * quarter && v_end >= best {
                return Err(Error::NotLocalized {
                    component: component.name(),
                    t: t_end,
                });
            }
        }
    }

    // golden-section polish around the best sample
    let t0 = best_t.abs();
    let sign = best_t.signum();
    let (mut lo, mut hi) = ((t0 / SEARCH_RATIO).max(radius), t0 * SEARCH_RATIO);
    let phi = 0.5 * (5f64.sqrt() - 1.0);
    for _ in 0..60 {
        let a = hi - phi * (hi - lo);
        let b = lo + phi * (hi - lo);
        if g(sign * a)? >= g(sign * b)? {
            hi = b;
        } else {
            lo = a;
        }
    }
    Ok(best.max(g(sign * 0.5 * (lo + hi))?))
}

/// Smallest `eps` with `|g(t)| <= eps / t^2` for `|t| >= sqrt(N)/2`, taken
/// jointly over `f`, `f'`, `f_hat` and `f_hat'`.
pub fn localization_epsilon(f: &LocalizedFunction, grid: &GridSpec) -> Result<f64> {
    let radius = 0.5 * grid.period();
    Component::ALL
        .iter()
        .try_fold(0.0f64, |acc, &c| Ok(acc.max(component_sup(f, c, radius)?)))
}

/// Number of periods `L` summed on each side, chosen so that the `eps/t^2`
/// envelope beyond `(L + 1/2) sqrt(N)` bounds the discarded tail below
/// `tail_tol`.
pub fn lattice_periods(f: &LocalizedFunction, grid: &GridSpec, tail_tol: f64) -> Result<usize> {
    if !(tail_tol > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "tail tolerance must be positive, got {tail_tol}"
        )));
    }
    let n = grid.n() as f64;
    let prefactor = n.powf(-0.25);
    let mut bound = f64::INFINITY;
    for periods in 1..=MAX_PERIODS {
        let radius = (periods as f64 + 0.5) * grid.period();
        let eps = component_sup(f, Component::Time, radius)?;
        // sum_{|k| > L} 1 / ((|k| - 1/2)^2 N) <= 2 / (N (L - 1/2))
        bound = prefactor * 2.0 * eps / (n * (periods as f64 - 0.5));
        if bound < tail_tol {
            return Ok(periods);
        }
    }
    Err(Error::InsufficientDecay {
        bound,
        tol: tail_tol,
        periods: MAX_PERIODS,
    })
}

/// Periodizes and samples the time side of `f` on `grid`.
pub fn periodize_sample(f: &LocalizedFunction, grid: &GridSpec, tail_tol: f64) -> Result<Signal> {
    let periods = lattice_periods(f, grid, tail_tol)?;
    periodize_with_periods(f, grid, periods)
}

/// Periodized samples with the lattice sum cut at `|l| <= periods * sqrt(N)`.
pub fn periodize_with_periods(
    f: &LocalizedFunction,
    grid: &GridSpec,
    periods: usize,
) -> Result<Signal> {
    let prefactor = (grid.n() as f64).powf(-0.25);
    let p = grid.period();
    let mut values = Vec::with_capacity(grid.n());
    for pt in grid.points() {
        let mut acc = Complex64::new(0.0, 0.0);
        // outermost images first
        for k in (1..=periods as i64).rev() {
            for shift in [k, -k] {
                let t = pt.j + shift as f64 * p;
                let v = f.f(t);
                if !(v.re.is_finite() && v.im.is_finite()) {
                    return Err(Error::NonFinite(t));
                }
                acc += v;
            }
        }
        let v = f.f(pt.j);
        if !(v.re.is_finite() && v.im.is_finite()) {
            return Err(Error::NonFinite(pt.j));
        }
        acc += v;
        values.push(acc * prefactor);
    }
    Signal::new(*grid, values)
}

/// Periodized samples of `phi_{a,b}` with the default tail tolerance.
pub fn discrete_gaussian(params: GaussianParams, grid: &GridSpec) -> Result<Signal> {
    discrete_gaussian_with_tol(params, grid, DEFAULT_TAIL_TOL)
}

pub fn discrete_gaussian_with_tol(
    params: GaussianParams,
    grid: &GridSpec,
    tail_tol: f64,
) -> Result<Signal> {
    periodize_sample(&gaussian(params)?, grid, tail_tol)
}

/// `max |dft(x_f) - x_{f_hat}|`: both sides of the Poisson identity,
/// computed independently.
pub fn poisson_duality_residual(f: &LocalizedFunction, grid: &GridSpec) -> Result<f64> {
    let x = periodize_sample(f, grid, DEFAULT_TAIL_TOL)?;
    let x_dual = periodize_sample(&f.dual(), grid, DEFAULT_TAIL_TOL)?;
    Ok(dft(&x).max_abs_diff(&x_dual))
}
