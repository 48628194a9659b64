use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::{GridPoint, GridSpec};

/// A complex sequence on the centered grid, stored in index order
/// `m = -n/2+1 ..= n/2`.
#[derive(Debug, Clone, PartialEq)]
pub struct Signal {
    grid: GridSpec,
    values: Vec<Complex64>,
}

impl Signal {
    pub fn new(grid: GridSpec, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.n() {
            return Err(Error::LengthMismatch {
                expected: grid.n(),
                got: values.len(),
            });
        }
        Ok(Self { grid, values })
    }

    pub fn zeros(grid: GridSpec) -> Self {
        Self {
            grid,
            values: vec![Complex64::new(0.0, 0.0); grid.n()],
        }
    }

    /// Unit pulse at index `m` (reduced modulo `n`).
    pub fn delta(grid: GridSpec, m: i64) -> Self {
        let mut s = Self::zeros(grid);
        let pos = grid.position(grid.wrap_index(m));
        s.values[pos] = Complex64::new(1.0, 0.0);
        s
    }

    /// Samples `f` at every grid coordinate.
    pub fn from_fn(grid: GridSpec, mut f: impl FnMut(GridPoint) -> Complex64) -> Self {
        let values = grid.points().map(&mut f).collect();
        Self { grid, values }
    }

    pub fn from_real(grid: GridSpec, values: &[f64]) -> Result<Self> {
        Self::new(
            grid,
            values.iter().map(|&v| Complex64::new(v, 0.0)).collect(),
        )
    }

    /// Constant signal with unit norm.
    pub fn uniform(grid: GridSpec) -> Self {
        let v = 1.0 / (grid.n() as f64).sqrt();
        Self {
            grid,
            values: vec![Complex64::new(v, 0.0); grid.n()],
        }
    }

    /// Unit pulses at every index divisible by `step`, normalized.
    pub fn comb(grid: GridSpec, step: usize) -> Result<Self> {
        if step == 0 || !grid.n().is_multiple_of(step) {
            return Err(Error::InvalidParameter(format!(
                "comb step {step} must divide n = {}",
                grid.n()
            )));
        }
        let mut s = Self::zeros(grid);
        for (pos, v) in s.values.iter_mut().enumerate() {
            if grid.index(pos).rem_euclid(step as i64) == 0 {
                *v = Complex64::new(1.0, 0.0);
            }
        }
        Ok(s.normalized())
    }

    #[inline]
    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    #[inline]
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    /// Value at grid index `m`.
    pub fn at(&self, m: i64) -> Complex64 {
        self.values[self.grid.position(self.grid.wrap_index(m))]
    }

    pub fn norm_sq(&self) -> f64 {
        self.values.iter().map(|v| v.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Energy distribution `|x(j)|^2` in storage order.
    pub fn energy(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.norm_sqr()).collect()
    }

    /// Rescaled copy with unit norm; the zero signal is returned unchanged.
    pub fn normalized(&self) -> Self {
        let norm = self.norm();
        if norm == 0.0 {
            return self.clone();
        }
        self.scaled(Complex64::new(1.0 / norm, 0.0))
    }

    pub fn scaled(&self, factor: Complex64) -> Self {
        Self {
            grid: self.grid,
            values: self.values.iter().map(|v| v * factor).collect(),
        }
    }

    /// Circular shift by `steps` grid positions: `y(m) = x(m - steps)`.
    pub fn circular_shift(&self, steps: i64) -> Self {
        let n = self.values.len() as i64;
        let k = steps.rem_euclid(n) as usize;
        let mut values = self.values.clone();
        values.rotate_right(k);
        Self {
            grid: self.grid,
            values,
        }
    }

    /// Pointwise multiplication by `exp(2 pi i m p / n)`, i.e. modulation by the
    /// grid frequency `p / sqrt(n)`.
    pub fn modulate(&self, p: i64) -> Self {
        let n = self.grid.n() as i64;
        let values = self
            .grid
            .points()
            .zip(&self.values)
            .map(|(pt, v)| {
                let phase =
                    2.0 * std::f64::consts::PI * ((pt.m * p).rem_euclid(n)) as f64 / n as f64;
                v * Complex64::from_polar(1.0, phase)
            })
            .collect();
        Self {
            grid: self.grid,
            values,
        }
    }

    /// Largest componentwise distance to `other`.
    pub fn max_abs_diff(&self, other: &Signal) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}
