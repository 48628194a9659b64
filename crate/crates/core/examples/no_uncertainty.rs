//! A pulse at the origin has zero time spread, so its product is zero even
//! though its spectrum is flat. Circular variances never exceed N/4.

use discrete_uncertainty::{make_grid, uncertainty, Signal};

fn main() -> discrete_uncertainty::Result<()> {
    for n in [4, 16, 64, 256] {
        let grid = make_grid(n)?;
        let u = uncertainty(&Signal::delta(grid, 0))?;
        println!(
            "N = {n:4}: v_time = {}, v_freq = {:.4} (cap {}), product = {}",
            u.v_time,
            u.v_freq,
            n / 4,
            u.product
        );
    }
    Ok(())
}
