//! Unitary DFT on the centered grid.
//!
//! With `j = m / sqrt(N)` and `k = p / sqrt(N)` the kernel `exp(-2 pi i j k)`
//! is the ordinary `exp(-2 pi i m p / N)`, so the fast path only has to
//! rotate the centered index range onto the `0..N` layout used by the FFT
//! (index `m` goes to slot `m mod N`) and back. The direct `O(N^2)` sums work
//! on centered indices and serve as the reference.

use std::cell::RefCell;
use std::f64::consts::PI;

use num_complex::Complex64;
use rustfft::{FftDirection, FftPlanner};

use crate::signal::Signal;

thread_local! {
    static PLANNER: RefCell<FftPlanner<f64>> = RefCell::new(FftPlanner::new());
}

/// Forward transform, `x_hat(k) = N^{-1/2} sum_j x(j) exp(-2 pi i j k)`.
pub fn dft(x: &Signal) -> Signal {
    fast(x, FftDirection::Forward)
}

/// Inverse transform, exact inverse of [`dft`].
pub fn idft(x_hat: &Signal) -> Signal {
    fast(x_hat, FftDirection::Inverse)
}

/// Forward transform by direct summation of the kernel.
pub fn dft_direct(x: &Signal) -> Signal {
    direct(x, -1.0)
}

/// Inverse transform by direct summation of the kernel.
pub fn idft_direct(x_hat: &Signal) -> Signal {
    direct(x_hat, 1.0)
}

/// Unnormalized in-place FFT on the conventional `0..len` layout.
pub(crate) fn fft_in_place(buf: &mut [Complex64], direction: FftDirection) {
    let fft = PLANNER.with(|p| p.borrow_mut().plan_fft(buf.len(), direction));
    fft.process(buf);
}

fn fast(x: &Signal, direction: FftDirection) -> Signal {
    let grid = *x.grid();
    let n = grid.n();
    // storage position of m = 0
    let origin = (n / 2) - 1;
    let mut buf = x.values().to_vec();
    buf.rotate_left(origin);

    fft_in_place(&mut buf, direction);

    let scale = 1.0 / (n as f64).sqrt();
    for v in buf.iter_mut() {
        *v *= scale;
    }
    buf.rotate_right(origin);
    Signal::new(grid, buf).expect("transform preserves length")
}

fn direct(x: &Signal, sign: f64) -> Signal {
    let grid = *x.grid();
    let n = grid.n() as i64;
    let scale = 1.0 / (n as f64).sqrt();
    // twiddles indexed by (m p) mod n keep the phase argument exact
    let twiddle: Vec<Complex64> = (0..n)
        .map(|r| Complex64::from_polar(1.0, sign * 2.0 * PI * r as f64 / n as f64))
        .collect();
    let values = grid
        .points()
        .map(|k| {
            let sum: Complex64 = grid
                .points()
                .zip(x.values())
                .map(|(j, v)| v * twiddle[(j.m * k.m).rem_euclid(n) as usize])
                .sum();
            sum * scale
        })
        .collect();
    Signal::new(grid, values).expect("transform preserves length")
}
