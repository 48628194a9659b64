//! Functions on the real line together with their Fourier transforms and
//! derivatives.
//!
//! The Fourier transform convention is `f_hat(xi) = int f(t) exp(-2 pi i xi t) dt`.
//! Every callable must be safe to evaluate concurrently.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type ComplexFn = Arc<dyn Fn(f64) -> Complex64 + Send + Sync>;

/// Closed-form `sup_{|t| >= radius} t^2 |g(t)|` for a component `g`.
pub type SupFn = Arc<dyn Fn(Component, f64) -> f64 + Send + Sync>;

/// The four callables that enter the localization constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Component {
    Time,
    TimeDerivative,
    Frequency,
    FrequencyDerivative,
}

impl Component {
    pub const ALL: [Component; 4] = [
        Component::Time,
        Component::TimeDerivative,
        Component::Frequency,
        Component::FrequencyDerivative,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Component::Time => "f",
            Component::TimeDerivative => "f'",
            Component::Frequency => "f_hat",
            Component::FrequencyDerivative => "f_hat'",
        }
    }

    fn dual(self) -> Self {
        match self {
            Component::Time => Component::Frequency,
            Component::TimeDerivative => Component::FrequencyDerivative,
            Component::Frequency => Component::Time,
            Component::FrequencyDerivative => Component::TimeDerivative,
        }
    }
}

/// A function `f`, its transform `f_hat` and both derivatives.
///
/// Derivatives are supplied analytically; nothing here differentiates
/// numerically.
#[derive(Clone)]
pub struct LocalizedFunction {
    label: String,
    time: ComplexFn,
    time_deriv: ComplexFn,
    freq: ComplexFn,
    freq_deriv: ComplexFn,
    sup: Option<SupFn>,
}

impl fmt::Debug for LocalizedFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LocalizedFunction")
            .field("label", &self.label)
            .field("closed_form_sup", &self.sup.is_some())
            .finish()
    }
}

impl LocalizedFunction {
    pub fn new(
        label: impl Into<String>,
        f: impl Fn(f64) -> Complex64 + Send + Sync + 'static,
        f_prime: impl Fn(f64) -> Complex64 + Send + Sync + 'static,
        f_hat: impl Fn(f64) -> Complex64 + Send + Sync + 'static,
        f_hat_prime: impl Fn(f64) -> Complex64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            label: label.into(),
            time: Arc::new(f),
            time_deriv: Arc::new(f_prime),
            freq: Arc::new(f_hat),
            freq_deriv: Arc::new(f_hat_prime),
            sup: None,
        }
    }

    /// Attaches a closed-form tail supremum, which lets the localization
    /// estimate skip its numeric search.
    pub fn with_closed_form_sup(
        mut self,
        sup: impl Fn(Component, f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        self.sup = Some(Arc::new(sup));
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn closed_form_sup(&self, component: Component, radius: f64) -> Option<f64> {
        self.sup.as_ref().map(|s| s(component, radius))
    }

    #[inline]
    pub fn eval(&self, component: Component, t: f64) -> Complex64 {
        match component {
            Component::Time => (self.time)(t),
            Component::TimeDerivative => (self.time_deriv)(t),
            Component::Frequency => (self.freq)(t),
            Component::FrequencyDerivative => (self.freq_deriv)(t),
        }
    }

    #[inline]
    pub fn f(&self, t: f64) -> Complex64 {
        (self.time)(t)
    }

    #[inline]
    pub fn f_hat(&self, xi: f64) -> Complex64 {
        (self.freq)(xi)
    }

    /// The function whose time side is `f_hat`. Its transform is `f(-t)`.
    pub fn dual(&self) -> Self {
        let time = self.time.clone();
        let time_deriv = self.time_deriv.clone();
        Self {
            label: format!("dual of {}", self.label),
            time: self.freq.clone(),
            time_deriv: self.freq_deriv.clone(),
            freq: Arc::new(move |t| time(-t)),
            freq_deriv: Arc::new(move |t| -time_deriv(-t)),
            sup: self
                .sup
                .clone()
                .map(|s| Arc::new(move |c: Component, r| s(c.dual(), r)) as SupFn),
        }
    }

    /// Largest deviation between `f_hat` and a numerical transform of `f`
    /// at the given frequencies, relative to `max |f_hat|` over them.
    pub fn transform_residual(&self, frequencies: &[f64]) -> Result<f64> {
        let mut worst: f64 = 0.0;
        let mut scale: f64 = 0.0;
        for &xi in frequencies {
            let re = crate::quadrature::integrate_line(|t| {
                (self.f(t) * Complex64::from_polar(1.0, -2.0 * PI * xi * t)).re
            })?;
            let im = crate::quadrature::integrate_line(|t| {
                (self.f(t) * Complex64::from_polar(1.0, -2.0 * PI * xi * t)).im
            })?;
            let expected = self.f_hat(xi);
            worst = worst.max((Complex64::new(re, im) - expected).norm());
            scale = scale.max(expected.norm());
        }
        Ok(if scale > 0.0 { worst / scale } else { worst })
    }
}

/// Parameters of `exp(2 pi i b (t - a)) exp(-pi (t - a)^2 / c)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianParams {
    pub c: f64,
    pub center: f64,
    pub modulation: f64,
}

impl GaussianParams {
    pub fn new(c: f64, center: f64, modulation: f64) -> Result<Self> {
        let p = Self {
            c,
            center,
            modulation,
        };
        p.validate()?;
        Ok(p)
    }

    /// Centered, unmodulated Gaussian of width `c`.
    pub fn centered(c: f64) -> Result<Self> {
        Self::new(c, 0.0, 0.0)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.c > 0.0 && self.c.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "gaussian width c must be positive and finite, got {}",
                self.c
            )));
        }
        if !self.center.is_finite() || !self.modulation.is_finite() {
            return Err(Error::InvalidParameter(
                "gaussian center and modulation must be finite".into(),
            ));
        }
        Ok(())
    }
}

/// `sup_{|t| >= r} amp |t|^k exp(-pi t^2 / s)`.
fn gaussian_tail_sup(amp: f64, k: i32, s: f64, r: f64) -> f64 {
    let peak = (k as f64 * s / (2.0 * PI)).sqrt();
    let t = r.max(peak);
    amp * t.powi(k) * (-PI * t * t / s).exp()
}

/// The Gaussian `phi_{a,b}` with all four callables in closed form.
///
/// `f_hat(xi) = sqrt(c) exp(-2 pi i a xi) exp(-pi c (xi - b)^2)`.
pub fn gaussian(params: GaussianParams) -> Result<LocalizedFunction> {
    params.validate()?;
    let GaussianParams {
        c,
        center: a,
        modulation: b,
    } = params;
    let sqrt_c = c.sqrt();

    let f = move |t: f64| {
        let s = t - a;
        Complex64::from_polar((-PI * s * s / c).exp(), 2.0 * PI * b * s)
    };
    let f_prime = move |t: f64| {
        let s = t - a;
        Complex64::new(-2.0 * PI * s / c, 2.0 * PI * b) * f(t)
    };
    let f_hat = move |xi: f64| {
        let s = xi - b;
        Complex64::from_polar(sqrt_c * (-PI * c * s * s).exp(), -2.0 * PI * a * xi)
    };
    let f_hat_prime = move |xi: f64| {
        let s = xi - b;
        Complex64::new(-2.0 * PI * c * s, -2.0 * PI * a) * f_hat(xi)
    };

    let label = if a == 0.0 && b == 0.0 {
        format!("gaussian(c={c})")
    } else {
        format!("gaussian(c={c}, a={a}, b={b})")
    };
    let g = LocalizedFunction::new(label, f, f_prime, f_hat, f_hat_prime);
    if a == 0.0 && b == 0.0 {
        Ok(g.with_closed_form_sup(move |component, r| match component {
            Component::Time => gaussian_tail_sup(1.0, 2, c, r),
            Component::TimeDerivative => gaussian_tail_sup(2.0 * PI / c, 3, c, r),
            Component::Frequency => gaussian_tail_sup(sqrt_c, 2, 1.0 / c, r),
            Component::FrequencyDerivative => {
                gaussian_tail_sup(2.0 * PI * c * sqrt_c, 3, 1.0 / c, r)
            }
        }))
    } else {
        Ok(g)
    }
}

/// Physicists' Hermite polynomials `H_0 ..= H_n` at `x`.
fn hermite(n: usize, x: f64) -> (f64, f64) {
    // returns (H_n, H_{n-1}), with H_{-1} = 0
    let (mut prev, mut cur) = (0.0, 1.0);
    for k in 0..n {
        let next = 2.0 * x * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    (cur, prev)
}

/// Hermite function `H_n(sqrt(2 pi) t) exp(-pi t^2)`, an eigenfunction of the
/// transform with eigenvalue `(-i)^n`.
pub fn hermite_gaussian(order: usize) -> LocalizedFunction {
    let scale = (2.0 * PI).sqrt();
    let h = move |t: f64| {
        let (hn, _) = hermite(order, scale * t);
        hn * (-PI * t * t).exp()
    };
    let h_prime = move |t: f64| {
        let (hn, hn1) = hermite(order, scale * t);
        (scale * 2.0 * order as f64 * hn1 - 2.0 * PI * t * hn) * (-PI * t * t).exp()
    };
    let eigen = Complex64::new(0.0, -1.0).powu(order as u32);
    LocalizedFunction::new(
        format!("hermite_gaussian(n={order})"),
        move |t| Complex64::new(h(t), 0.0),
        move |t| Complex64::new(h_prime(t), 0.0),
        move |xi| eigen * h(xi),
        move |xi| eigen * h_prime(xi),
    )
}

/// `amplitude / (1 + t^2)`, transform `amplitude pi exp(-2 pi |xi|)`.
///
/// Decays only quadratically, so `t^2 |f(t)|` tends to `amplitude`.
pub fn lorentzian(amplitude: f64) -> LocalizedFunction {
    let a = amplitude;
    LocalizedFunction::new(
        format!("lorentzian(amplitude={a})"),
        move |t| Complex64::new(a / (1.0 + t * t), 0.0),
        move |t| Complex64::new(-2.0 * a * t / (1.0 + t * t).powi(2), 0.0),
        move |xi: f64| Complex64::new(a * PI * (-2.0 * PI * xi.abs()).exp(), 0.0),
        move |xi: f64| {
            let sign = if xi > 0.0 {
                1.0
            } else if xi < 0.0 {
                -1.0
            } else {
                0.0
            };
            Complex64::new(
                -2.0 * PI * PI * a * sign * (-2.0 * PI * xi.abs()).exp(),
                0.0,
            )
        },
    )
}
