//! Unitary DFT on the centered grid: a pulse spreads flat, the transform
//! inverts exactly and the fast path agrees with the direct sum.

use discrete_uncertainty::{dft, dft_direct, idft, make_grid, Signal};

fn main() -> discrete_uncertainty::Result<()> {
    let grid = make_grid(8)?;
    let pulse = Signal::delta(grid, 0);
    let spectrum = dft(&pulse);
    for (p, v) in grid.points().zip(spectrum.values()) {
        println!("k = {:+.4}  x_hat = {:.4}", p.j, v);
    }

    let x = Signal::from_fn(grid, |p| (p.j * 1.3).sin().into());
    println!("round trip error  {:.2e}", idft(&dft(&x)).max_abs_diff(&x));
    println!(
        "fast vs direct    {:.2e}",
        dft(&x).max_abs_diff(&dft_direct(&x))
    );
    println!(
        "energy before/after {:.12} {:.12}",
        x.norm_sq(),
        dft(&x).norm_sq()
    );
    Ok(())
}
