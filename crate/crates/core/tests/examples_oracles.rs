//! Worked examples checked against values computed here from first
//! principles.

mod common;

use std::f64::consts::PI;

use discrete_uncertainty::periodize::component_sup;
use discrete_uncertainty::spread::first_circular_moment;
use discrete_uncertainty::*;
use num_complex::Complex64;

use common::{dense_min, energy, naive_dft, random_complex, rng, spread_at, BOUND};

fn gauss(c: f64) -> LocalizedFunction {
    gaussian(GaussianParams::centered(c).unwrap()).unwrap()
}

#[test]
fn grid_examples() {
    let g = make_grid(4).unwrap();
    let pts: Vec<f64> = g.points().map(|p| p.j).collect();
    assert_eq!(pts, vec![-0.5, 0.0, 0.5, 1.0]);
    let g = make_grid(16).unwrap();
    assert_eq!(g.period(), 4.0);
    assert_eq!(g.spacing(), 0.25);
    assert!(make_grid(3)
        .unwrap_err()
        .to_string()
        .contains("odd length unsupported"));
}

#[test]
fn distance_examples() {
    let g = make_grid(16).unwrap();
    assert!((circular_distance(&g, 2.0, -1.75) - 0.25).abs() < 1e-15);
    assert_eq!(circular_distance(&g, 0.5, 0.5), 0.0);
    assert_eq!(circular_distance(&g, 1.0, -1.0), 2.0);
}

#[test]
fn dft_against_naive_sum() {
    for n in [4usize, 16, 30, 64] {
        let g = make_grid(n).unwrap();
        let x = random_complex(g, &mut rng(n as u64));
        let naive = naive_dft(x.values());
        let fast = dft(&x);
        for (a, b) in fast.values().iter().zip(&naive) {
            assert!((a - b).norm() < 1e-12);
        }
    }
}

#[test]
fn dft_round_trip_n1024() {
    let g = make_grid(1024).unwrap();
    let x = random_complex(g, &mut rng(1024));
    assert!(idft(&dft(&x)).max_abs_diff(&x) < 1e-12);
}

#[test]
fn flat_spectrum_inverts_to_delta() {
    let g = make_grid(4).unwrap();
    let flat = Signal::from_fn(g, |_| Complex64::new(0.5, 0.0));
    assert!(idft(&flat).max_abs_diff(&Signal::delta(g, 0)) < 1e-15);
}

#[test]
fn variance_matches_dense_oracle_on_random_signals() {
    for seed in 0..20u64 {
        let g = make_grid(if seed % 2 == 0 { 16 } else { 32 }).unwrap();
        let x = random_complex(g, &mut rng(seed));
        let exact = circular_variance(&x).unwrap();
        let w = energy(x.values());
        assert!((exact.value - dense_min(&w, 10_000)).abs() < 1e-9);
        // the reported center attains the value
        let mu = exact.mean.unwrap();
        assert!((spread_at(&w, mu) - exact.value).abs() < 1e-12);
        assert!(mu > -g.period() / 2.0 && mu <= g.period() / 2.0);
    }
}

#[test]
fn variance_at_examples() {
    for n in [4usize, 16, 64] {
        let g = make_grid(n).unwrap();
        let d = Signal::delta(g, 0);
        assert_eq!(circular_variance_at(&d, 0.0).unwrap(), 0.0);
        let half = g.period() / 2.0;
        assert!((circular_variance_at(&d, half).unwrap() - n as f64 / 4.0).abs() < 1e-12);
    }
}

#[test]
fn sampled_centers_never_beat_the_minimum() {
    let g = make_grid(32).unwrap();
    let x = random_complex(g, &mut rng(99));
    let v = circular_variance(&x).unwrap().value;
    for i in 0..10_000 {
        let a = -g.period() / 2.0 + g.period() * (i as f64 + 0.5) / 10_000.0;
        assert!(circular_variance_at(&x, a).unwrap() >= v - 1e-9);
    }
}

#[test]
fn angular_spread_examples() {
    let g = make_grid(16).unwrap();
    assert_eq!(angular_spread(&Signal::delta(g, 0)).unwrap().value, 0.0);
    assert_eq!(
        angular_spread(&Signal::uniform(g)).unwrap_err(),
        Error::ZeroCircularMoment
    );

    let g = make_grid(256).unwrap();
    let x = discrete_gaussian(GaussianParams::centered(1.0).unwrap(), &g).unwrap();
    let ang = angular_spread(&x).unwrap().value;
    let var = circular_variance(&x).unwrap().value;
    assert!((ang - var).abs() < 0.05 * var, "{ang} vs {var}");

    // first moment from its definition
    let w = energy(x.values());
    let total: f64 = w.iter().sum();
    let tau: Complex64 = common::indices(256)
        .zip(&w)
        .map(|(m, p)| Complex64::from_polar(p / total, 2.0 * PI * m as f64 / 256.0))
        .sum();
    assert!((first_circular_moment(&x).unwrap() - tau).norm() < 1e-14);
}

#[test]
fn sparsity_and_entropy_examples() {
    let g = make_grid(16).unwrap();
    let comb = Signal::comb(g, 4).unwrap();
    let s_time = sparsity(&comb, 1e-12).unwrap().value;
    let s_freq = sparsity(&dft(&comb), 1e-12).unwrap().value;
    assert_eq!((s_time, s_freq, s_time * s_freq), (4.0, 4.0, 16.0));
    assert_eq!(sparsity(&Signal::delta(g, 3), 0.0).unwrap().value, 1.0);
    assert_eq!(sparsity(&Signal::uniform(g), 0.0).unwrap().value, 16.0);

    assert_eq!(entropy(&Signal::delta(g, 0)).unwrap().value, 0.0);
    assert!((entropy(&Signal::uniform(g)).unwrap().value - 16f64.ln()).abs() < 1e-14);
    assert!((entropy(&comb).unwrap().value - 4f64.ln()).abs() < 1e-14);
}

#[test]
fn sampled_gaussian_at_origin() {
    // 16^{-1/4} (1 + 2 e^{-16 pi} + 2 e^{-64 pi} + ...)
    let g = make_grid(16).unwrap();
    let x = discrete_gaussian(GaussianParams::centered(1.0).unwrap(), &g).unwrap();
    let direct: f64 = 0.5
        * (-3..=3)
            .map(|k: i32| (-PI * (4.0 * k as f64).powi(2)).exp())
            .sum::<f64>();
    assert!((x.at(0).re - direct).abs() < 1e-15);
    assert!((x.at(0).re - 0.5).abs() < 1e-15);
}

#[test]
fn sampled_gaussian_norm_matches_quadrature() {
    // ||x_f||^2 = N^{-1/2} sum_j |sum_l f(j + l)|^2; for N = 256 the images
    // do not overlap, so this is a Riemann sum of |f|^2 with step 1/16
    let n = 256usize;
    let g = make_grid(n).unwrap();
    let x = discrete_gaussian(GaussianParams::centered(1.0).unwrap(), &g).unwrap();
    let integral = continuous_variance(&gauss(1.0), Domain::Time)
        .unwrap()
        .norm_sq;
    assert!((x.norm_sq() - integral).abs() < 1e-10);
}

#[test]
fn self_dual_gaussian() {
    let g = make_grid(256).unwrap();
    let x = discrete_gaussian(GaussianParams::centered(1.0).unwrap(), &g).unwrap();
    assert!(dft(&x).max_abs_diff(&x) < 1e-10);
}

#[test]
fn shifted_center_is_one_step_shift() {
    let g = make_grid(64).unwrap();
    let base = discrete_gaussian(GaussianParams::centered(1.0).unwrap(), &g).unwrap();
    let moved = discrete_gaussian(GaussianParams::new(1.0, g.spacing(), 0.0).unwrap(), &g).unwrap();
    assert!(moved.max_abs_diff(&base.circular_shift(1)) < 1e-14);
}

#[test]
fn localization_examples() {
    let f = gauss(1.0);
    let sup = component_sup(&f, Component::Time, 2.0).unwrap();
    let expected = 4.0 * (-4.0 * PI).exp();
    assert!((sup - expected).abs() < 1e-12 * expected);
    assert!((expected - 1.395e-5).abs() < 1e-8);

    let eps = localization_epsilon(&f, &make_grid(256).unwrap()).unwrap();
    assert!(eps < 1e-40);

    let eps = localization_epsilon(&lorentzian(1.0), &make_grid(16).unwrap()).unwrap();
    assert!(eps.is_finite() && eps < 1.0 && eps > 0.9);
}

#[test]
fn poisson_residual_examples() {
    let g = make_grid(256).unwrap();
    assert!(poisson_duality_residual(&gauss(1.0), &g).unwrap() < 1e-10);
    assert!(poisson_duality_residual(&gauss(4.0), &g).unwrap() < 1e-8);
    let coarse = poisson_duality_residual(&gauss(1.0), &make_grid(4).unwrap()).unwrap();
    assert!(coarse.is_finite());
}

#[test]
fn continuous_gaussian_moments() {
    let v = 1.0 / (4.0 * PI);
    let t = continuous_variance(&gauss(1.0), Domain::Time)
        .unwrap()
        .variance;
    assert!((t - v).abs() < 1e-12);
    assert!((v - 0.0795775).abs() < 1e-7);
    let f = continuous_variance(&gauss(1.0), Domain::Frequency)
        .unwrap()
        .variance;
    assert!((t * f - BOUND).abs() < 1e-12 * BOUND);
    assert!((BOUND - 0.00633257).abs() < 1e-8);

    let t2 = continuous_variance(&gauss(2.0), Domain::Time)
        .unwrap()
        .variance;
    let f2 = continuous_variance(&gauss(2.0), Domain::Frequency)
        .unwrap()
        .variance;
    assert!((t2 - 2.0 / (4.0 * PI)).abs() < 1e-12);
    assert!((f2 - 1.0 / (8.0 * PI)).abs() < 1e-12);
}

#[test]
fn circle_moments_a8() {
    let m = circle_moments(&gauss(1.0), 8.0, 256).unwrap();
    let v = 1.0 / (4.0 * PI);
    let time = 64.0 * m.angular_variance;
    let freq = m.coeff_variance / (4.0 * PI * PI * 64.0);
    assert!((time - v).abs() < 0.02 * v);
    assert!((freq - v).abs() < 0.02 * v);
    let r2 = m.tau.norm_sqr();
    assert!((1.0 - r2) * m.coeff_variance >= r2 / 4.0 - 1e-9);
}

#[test]
fn product_examples() {
    for n in [2usize, 16, 256] {
        let g = make_grid(n).unwrap();
        assert_eq!(uncertainty_product(&Signal::delta(g, 0)).unwrap(), 0.0);
        let x = random_complex(g, &mut rng(3 * n as u64));
        assert!(uncertainty_product(&x).unwrap() <= (n as f64 / 4.0).powi(2));
    }
}

#[test]
fn main_theorem_examples() {
    let r = verify_main_theorem(&gauss(1.0), &make_grid(256).unwrap()).unwrap();
    assert!(r.sandwich_pass && r.bound_pass);

    // at N = 16 the derivative term dominates the f term 4 e^{-4 pi}
    let r = verify_main_theorem(&gauss(1.0), &make_grid(16).unwrap()).unwrap();
    assert!(r.sandwich_pass && r.bound_pass);
    // t^2 |f'(t)| = 2 pi t^3 e^{-pi t^2} is decreasing past t = 2
    let eps = 16.0 * PI * (-4.0 * PI).exp();
    assert!((r.epsilon - eps).abs() < 1e-9 * eps, "{}", r.epsilon);
    assert!(r.epsilon > 4.0 * (-4.0 * PI).exp());

    let r = verify_main_theorem(&lorentzian(2.0), &make_grid(16).unwrap()).unwrap();
    assert!(r.vacuous);
}

#[test]
fn sweep_examples() {
    let w = WidthRange {
        c_min: 1.0,
        c_max: 1.0,
        steps: 4,
    };
    assert!(sweep(w, &[]).unwrap().is_empty());
    let rows = sweep(w, &[64]).unwrap();
    assert_eq!(rows.len(), 4);
    assert!(rows.windows(2).all(|p| p[0].report == p[1].report));
}

#[test]
fn circle_table_examples() {
    let rows = circle_asymptotics(&gauss(1.0), &[2.0, 4.0, 8.0, 16.0]).unwrap();
    let errs: Vec<f64> = rows.iter().map(|r| (r.product - BOUND).abs()).collect();
    assert!(errs.windows(2).all(|w| w[1] < w[0]));
    assert!(rows.iter().all(|r| r.circle_product > 0.25));
    assert_eq!(circle_asymptotics(&gauss(1.0), &[3.0]).unwrap().len(), 1);
}

#[test]
fn optimizer_from_gaussian_does_not_ascend() {
    let g = make_grid(32).unwrap();
    let x = discrete_gaussian(GaussianParams::centered(1.0).unwrap(), &g).unwrap();
    let start = uncertainty_product(&x).unwrap();
    let (_, trace) = optimize_window_from(&x, 0, 20, 0.1).unwrap();
    assert!(trace.final_product <= start);
    let (_, trace) = optimize_window(&g, 1, 1, 0.1).unwrap();
    assert_eq!(trace.history.len(), 1);
}
