//! Time-frequency uncertainty for finite discrete signals.
//!
//! Signals live on the centered grid `{-N/2+1, ..., N/2} / sqrt(N)`, which is
//! periodic with period `sqrt(N)`. Their time and frequency spreads are
//! measured by the circular variance, and the uncertainty product
//! `v_x * v_x_hat` of periodized samples of a localized function `f` is
//! compared with the continuous product `v_f * v_f_hat >= 1/(16 pi^2)`.
//!
//! ```
//! use discrete_uncertainty::{make_grid, discrete_gaussian, uncertainty_product, GaussianParams};
//!
//! let grid = make_grid(256).unwrap();
//! let x = discrete_gaussian(GaussianParams::centered(1.0).unwrap(), &grid).unwrap();
//! let p = uncertainty_product(&x).unwrap();
//! assert!((p - 1.0 / (16.0 * std::f64::consts::PI.powi(2))).abs() < 1e-8);
//! ```

// `!(x > 0.0)` style checks are meant to reject NaN as well
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod continuous;
pub mod dft;
pub mod error;
pub mod experiments;
pub mod grid;
pub mod io;
pub mod localized;
pub mod optimize;
pub mod periodize;
pub mod quadrature;
pub mod signal;
pub mod spread;

pub use continuous::{
    circle_moments, continuous_product, continuous_variance, CircleMoments, ContinuousMoments,
    CIRCLE_BOUND, HEISENBERG_BOUND,
};
pub use dft::{dft, dft_direct, idft, idft_direct};
pub use error::{Error, Result};
pub use experiments::{
    circle_asymptotics, sweep, uncertainty, uncertainty_product, verify_main_theorem, CircleRow,
    SweepRow, TheoremReport, UncertaintyReport, WidthRange,
};
pub use grid::{circular_distance, make_grid, GridPoint, GridSpec};
pub use localized::{
    gaussian, hermite_gaussian, lorentzian, Component, GaussianParams, LocalizedFunction,
};
pub use optimize::{optimize_window, optimize_window_from, OptimizerTrace};
pub use periodize::{
    discrete_gaussian, localization_epsilon, periodize_sample, poisson_duality_residual,
};
pub use signal::Signal;
pub use spread::{
    angular_spread, circular_variance, circular_variance_at, entropy, measure_spread, sparsity,
    Domain, Measure, SpreadReport,
};
