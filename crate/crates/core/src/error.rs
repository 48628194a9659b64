use thiserror::Error;

/// Errors raised by the grid, measure, periodization and quadrature routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("odd length unsupported: n = {0} (the centered grid needs an even length)")]
    OddLength(usize),

    #[error("grid length must be at least 2, got {0}")]
    TooShort(usize),

    #[error("signal has {got} values but the grid has {expected} points")]
    LengthMismatch { expected: usize, got: usize },

    #[error("zero signal has no spread")]
    ZeroSignal,

    #[error("angular spread undefined: zero first circular moment")]
    ZeroCircularMoment,

    #[error("non-finite function value at t = {0}")]
    NonFinite(f64),

    #[error("insufficient decay: lattice tail bound {bound:e} still above {tol:e} after {periods} periods")]
    InsufficientDecay {
        bound: f64,
        tol: f64,
        periods: usize,
    },

    #[error("not localized: t^2 |{component}(t)| keeps growing out to t = {t:e}")]
    NotLocalized { component: &'static str, t: f64 },

    #[error("quadrature failed: no convergence after {0} interval halvings")]
    Quadrature(usize),

    #[error(
        "insufficient n_coeffs: {tail:e} of the coefficient energy lies beyond |k| = {n_coeffs}"
    )]
    InsufficientCoefficients { n_coeffs: usize, tail: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
