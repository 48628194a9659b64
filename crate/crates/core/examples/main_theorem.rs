//! Discrete versus continuous product with the localization constant, for a
//! well localized Gaussian, a coarse grid and a slowly decaying function.

use discrete_uncertainty::{gaussian, lorentzian, make_grid, verify_main_theorem, GaussianParams};

fn main() -> discrete_uncertainty::Result<()> {
    let g = gaussian(GaussianParams::centered(1.0)?)?;
    for (f, n) in [(&g, 256), (&g, 16)] {
        let r = verify_main_theorem(f, &make_grid(n)?)?;
        println!(
            "{} N = {n}: eps {:.3e}, [{:.10}, {:.10}] contains {:.10}: {} / bound {}",
            r.function_label,
            r.epsilon,
            r.sandwich_low,
            r.sandwich_high,
            r.discrete_product.unwrap_or(f64::NAN),
            r.sandwich_pass,
            r.bound_pass
        );
    }
    let r = verify_main_theorem(&lorentzian(2.0), &make_grid(16)?)?;
    println!(
        "{}: eps {:.3} vacuous {} discrete product {:?}",
        r.function_label, r.epsilon, r.vacuous, r.discrete_product
    );
    Ok(())
}
