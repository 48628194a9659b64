//! The centered sampling grid `{-N/2+1, ..., N/2} / sqrt(N)` and its circular metric.
//!
//! Points are addressed either by their integer index `m` or by their real
//! coordinate `j = m / sqrt(N)`. The grid is periodic with period `sqrt(N)`,
//! so the two ends of the index range are neighbours.

use crate::error::{Error, Result};

/// Geometry of the centered grid of length `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    n: usize,
    period: f64,
    spacing: f64,
}

/// One point of the grid: integer index and real coordinate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridPoint {
    pub m: i64,
    pub j: f64,
}

/// Builds the grid of length `n`.
///
/// Only even lengths are supported; the index set `-n/2+1 ..= n/2` is not
/// integer valued otherwise.
pub fn make_grid(n: usize) -> Result<GridSpec> {
    GridSpec::new(n)
}

impl GridSpec {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooShort(n));
        }
        if !n.is_multiple_of(2) {
            return Err(Error::OddLength(n));
        }
        let period = (n as f64).sqrt();
        Ok(Self {
            n,
            period,
            spacing: period / n as f64,
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// `sqrt(n)`.
    #[inline]
    pub fn period(&self) -> f64 {
        self.period
    }

    /// `1 / sqrt(n)`.
    #[inline]
    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    /// Smallest index, `-n/2 + 1`.
    #[inline]
    pub fn min_index(&self) -> i64 {
        1 - (self.n / 2) as i64
    }

    /// Largest index, `n/2`.
    #[inline]
    pub fn max_index(&self) -> i64 {
        (self.n / 2) as i64
    }

    /// Storage position of index `m` (must lie in the index range).
    #[inline]
    pub fn position(&self, m: i64) -> usize {
        debug_assert!(m >= self.min_index() && m <= self.max_index());
        (m - self.min_index()) as usize
    }

    /// Index stored at position `pos`.
    #[inline]
    pub fn index(&self, pos: usize) -> i64 {
        pos as i64 + self.min_index()
    }

    /// Maps any integer onto the index range by reducing modulo `n`.
    #[inline]
    pub fn wrap_index(&self, m: i64) -> i64 {
        let n = self.n as i64;
        (m - self.min_index()).rem_euclid(n) + self.min_index()
    }

    #[inline]
    pub fn coordinate(&self, m: i64) -> f64 {
        m as f64 * self.spacing
    }

    pub fn point(&self, pos: usize) -> GridPoint {
        let m = self.index(pos);
        GridPoint {
            m,
            j: self.coordinate(m),
        }
    }

    /// Grid points in storage order, `m = -n/2+1 ..= n/2`.
    pub fn points(&self) -> impl Iterator<Item = GridPoint> + '_ {
        (0..self.n).map(|pos| self.point(pos))
    }

    /// Reduces a real coordinate into the half-open interval `(-sqrt(n)/2, sqrt(n)/2]`.
    pub fn wrap_coordinate(&self, a: f64) -> f64 {
        let half = 0.5 * self.period;
        let r = (a + half).rem_euclid(self.period);
        // rem_euclid lands in [0, period); shift to (-half, half]
        if r == 0.0 {
            half
        } else {
            r - half
        }
    }
}

/// Distance between `j` and `a` on the circle of circumference `sqrt(n)`.
///
/// The result lies in `[0, sqrt(n)/2]`.
pub fn circular_distance(grid: &GridSpec, j: f64, a: f64) -> f64 {
    let p = grid.period();
    let r = (j - a).rem_euclid(p);
    r.min(p - r).max(0.0)
}
