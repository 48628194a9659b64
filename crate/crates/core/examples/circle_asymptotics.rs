//! Periodized dilates f_a of a Gaussian on the circle: rescaled spreads
//! approach the line values and the circle product stays above 1/4.

use discrete_uncertainty::{circle_asymptotics, gaussian, GaussianParams, HEISENBERG_BOUND};

fn main() -> discrete_uncertainty::Result<()> {
    let f = gaussian(GaussianParams::centered(1.0)?)?;
    println!("     a  time_spread  freq_spread  |product - bound|  circle_product");
    for r in circle_asymptotics(&f, &[1.0, 2.0, 4.0, 8.0, 16.0])? {
        println!(
            "{:6.1}  {:.9}  {:.9}  {:.3e}          {:.9}",
            r.a,
            r.time_spread,
            r.freq_spread,
            (r.product - HEISENBERG_BOUND).abs(),
            r.circle_product
        );
    }
    Ok(())
}
