//! The four spread measures of a comb, in time and in frequency.

use discrete_uncertainty::{make_grid, measure_spread, Domain, Measure, Signal};

fn main() -> discrete_uncertainty::Result<()> {
    let grid = make_grid(16)?;
    let comb = Signal::comb(grid, 4)?;
    let measures = [
        Measure::CircularVariance,
        Measure::Sparsity,
        Measure::Entropy,
    ];
    for measure in measures {
        for domain in [Domain::Time, Domain::Frequency] {
            let r = measure_spread(&comb, measure, domain, 1e-12)?;
            println!(
                "{measure:?} {domain:?}: value {:.6} mean {:?}",
                r.value, r.mean
            );
        }
    }
    // the uniform comb cancels on the circle, a narrow pulse train does not
    let near = Signal::from_fn(grid, |p| {
        if p.m.abs() <= 1 {
            1.0.into()
        } else {
            0.0.into()
        }
    });
    let r = measure_spread(&near, Measure::Angular, Domain::Time, 0.0)?;
    println!("angular spread of a 3-point bump: {:.6}", r.value);
    Ok(())
}
