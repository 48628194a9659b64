//! Continuous variances by quadrature: Gaussians sit on the bound, Hermite
//! functions and the Lorentzian sit above it.

use discrete_uncertainty::{
    continuous_product, continuous_variance, gaussian, hermite_gaussian, lorentzian, Domain,
    GaussianParams, HEISENBERG_BOUND,
};

fn main() -> discrete_uncertainty::Result<()> {
    for c in [0.25, 1.0, 4.0] {
        let f = gaussian(GaussianParams::centered(c)?)?;
        let t = continuous_variance(&f, Domain::Time)?;
        let w = continuous_variance(&f, Domain::Frequency)?;
        println!(
            "gaussian c = {c}: v_f {:.8} v_f_hat {:.8} ratio to bound {:.12}",
            t.variance,
            w.variance,
            t.variance * w.variance / HEISENBERG_BOUND
        );
    }
    for n in 1..4 {
        let p = continuous_product(&hermite_gaussian(n))?;
        println!("hermite {n}: ratio {:.9}", p / HEISENBERG_BOUND);
    }
    let p = continuous_product(&lorentzian(1.0))?;
    println!("lorentzian: ratio {:.9}", p / HEISENBERG_BOUND);
    Ok(())
}
