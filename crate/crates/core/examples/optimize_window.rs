//! Gradient descent on the product from random starts. Every run ends on
//! the bound; the width it settles on depends on the start.

use discrete_uncertainty::{make_grid, optimize_window, uncertainty, HEISENBERG_BOUND};

fn main() -> discrete_uncertainty::Result<()> {
    let grid = make_grid(64)?;
    for seed in 0..3 {
        let (x, trace) = optimize_window(&grid, seed, 2000, 0.2)?;
        let u = uncertainty(&x)?;
        let first = trace.history[0].1;
        println!(
            "seed {seed}: {first:.6e} -> {:.12e} (bound {HEISENBERG_BOUND:.12e}), v_time {:.4} v_freq {:.4}",
            trace.final_product, u.v_time, u.v_freq
        );
    }
    Ok(())
}
