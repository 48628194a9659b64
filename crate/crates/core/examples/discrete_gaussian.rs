//! Periodized, sampled Gaussians and how close they get to 1/(16 pi^2).

use discrete_uncertainty::{
    discrete_gaussian, gaussian, make_grid, poisson_duality_residual, uncertainty, GaussianParams,
    HEISENBERG_BOUND,
};

fn main() -> discrete_uncertainty::Result<()> {
    println!("bound 1/(16 pi^2) = {HEISENBERG_BOUND:.10}");
    for n in [16, 64, 256, 1024] {
        let grid = make_grid(n)?;
        let x = discrete_gaussian(GaussianParams::centered(1.0)?, &grid)?;
        let u = uncertainty(&x)?;
        println!(
            "N = {n:4}: v_time {:.10} v_freq {:.10} product {:.12e}",
            u.v_time, u.v_freq, u.product
        );
    }
    let grid = make_grid(256)?;
    for c in [0.5, 1.0, 2.0] {
        let f = gaussian(GaussianParams::centered(c)?)?;
        println!(
            "c = {c}: |dft(x_f) - x_f_hat| = {:.2e}",
            poisson_duality_residual(&f, &grid)?
        );
    }
    Ok(())
}
