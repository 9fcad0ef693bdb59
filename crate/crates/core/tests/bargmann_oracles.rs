//! Grid sweeps checking every closed-form transform image against the
//! quadrature route. The unit tests inside the library pin spot values and
//! frozen constants; this suite walks the closed forms across parameter
//! grids wide enough to catch any n-, a-, k-, or z-dependent slip.

use num_complex::Complex64;
use oscfock::bargmann::{
    blim_closed, bso_closed, forward, hk_closed, hkn_closed, integral_rep_one, integral_rep_two,
    modulate_bargmann, sigma_n, RealFn,
};
use oscfock::fock::norm as fock_norm;
use oscfock::fock::EntireFn;
use oscfock::hermite::hermite_fn;
use oscfock::quadrature::{fock_rule, gauss_hermite_rule};
use oscfock::superosc::{ftilde_limit, SuperoscParams};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Representative points with |z| ≤ 2 covering all quadrants and the axes.
const Z_GRID: [(f64, f64); 6] = [
    (0.0, 0.0),
    (1.5, 0.0),
    (0.0, 1.0),
    (-1.0, 0.8),
    (0.7, -0.7),
    (-0.4, -1.2),
];

const A_GRID: [f64; 3] = [1.5, 2.0, 3.0];
const N_GRID: [usize; 4] = [1, 4, 8, 12];

#[test]
fn modulated_gaussian_images_match_quadrature_on_the_grid() {
    let rule = gauss_hermite_rule(96).unwrap();
    for n in N_GRID {
        for a in A_GRID {
            let params = SuperoscParams::new(n, c(a, 0.0)).unwrap();
            let phi = RealFn::new("ftilde_n", move |x| params.ftilde_n(x));
            for (re, im) in Z_GRID {
                let z = c(re, im);
                let by_quad = forward(&phi, z, &rule).unwrap();
                let closed = bso_closed(z, n, a).unwrap();
                assert!(
                    (by_quad - closed).norm() < 1e-8,
                    "n={n} a={a} z={z}: {by_quad} vs {closed}"
                );
            }
        }
    }
}

#[test]
fn modulated_limit_image_matches_quadrature_on_the_grid() {
    let rule = gauss_hermite_rule(96).unwrap();
    for a in A_GRID {
        let phi = RealFn::new("ftilde", move |x| ftilde_limit(x, a).unwrap());
        for (re, im) in Z_GRID {
            let z = c(re, im);
            let by_quad = forward(&phi, z, &rule).unwrap();
            let closed = blim_closed(z, a).unwrap();
            assert!(
                (by_quad - closed).norm() < 1e-9,
                "a={a} z={z}: {by_quad} vs {closed}"
            );
        }
    }
}

#[test]
fn hermite_modulation_images_match_quadrature_on_the_grid() {
    let rule = gauss_hermite_rule(96).unwrap();
    for n in N_GRID {
        for a in A_GRID {
            let params = SuperoscParams::new(n, c(a, 0.0)).unwrap();
            for k in 0..=4usize {
                // φ(x) = h_k(x) · F_n(x, a): the closed image is the
                // shifted-argument superposition.
                let p = params.clone();
                let phi = RealFn::new("hk*fn", move |x| {
                    hermite_fn(k, x).unwrap() * p.fn_sum(c(x, 0.0))
                });
                for (re, im) in Z_GRID {
                    let z = c(re, im);
                    let by_quad = forward(&phi, z, &rule).unwrap();
                    let closed = hkn_closed(z, k, n, a).unwrap();
                    assert!(
                        (by_quad - closed).norm() < 1e-8,
                        "n={n} a={a} k={k} z={z}: {by_quad} vs {closed}"
                    );
                }
            }
        }
    }
}

#[test]
fn hermite_modulation_limits_match_quadrature_on_the_grid() {
    let rule = gauss_hermite_rule(96).unwrap();
    for a in A_GRID {
        for k in 0..=4usize {
            let phi = RealFn::new("hk*exp(iax)", move |x| {
                hermite_fn(k, x).unwrap() * c(0.0, a * x).exp()
            });
            for (re, im) in Z_GRID {
                let z = c(re, im);
                let by_quad = forward(&phi, z, &rule).unwrap();
                let closed = hk_closed(z, k, a).unwrap();
                assert!(
                    (by_quad - closed).norm() < 1e-8,
                    "a={a} k={k} z={z}: {by_quad} vs {closed}"
                );
            }
        }
    }
}

#[test]
fn hermite_modulation_converges_to_its_limit() {
    // h_k F_n → h_k e^{iax} in the image space: the closed-form gap
    // |hkn − hk| decreases along n for every k on the grid.
    for a in [1.5, 2.0] {
        for k in 0..=4usize {
            let z = c(0.5, -0.3);
            let limit = hk_closed(z, k, a).unwrap();
            let mut prev = f64::INFINITY;
            for n in [4usize, 8, 16, 32] {
                let gap = (hkn_closed(z, k, n, a).unwrap() - limit).norm();
                assert!(gap < prev, "a={a} k={k} n={n}: {gap} !< {prev}");
                prev = gap;
            }
        }
    }
}

#[test]
fn weyl_superposition_route_agrees_with_modulation() {
    // Route independence: Σ_j C_j W_{b_j}[Bψ] computed term-by-term from
    // quadrature equals the direct image of the modulated signal.
    let rule = gauss_hermite_rule(96).unwrap();
    for (n, a) in [(2usize, 2.0), (6, 1.5), (8, 3.0)] {
        for k in 0..=2usize {
            let psi = RealFn::new("h_k", move |x| c(hermite_fn(k, x).unwrap(), 0.0));
            let params = SuperoscParams::new(n, c(a, 0.0)).unwrap();
            let p = params.clone();
            let psi2 = psi.clone();
            let modulated = RealFn::new("hk*fn", move |x| {
                psi2.eval(x) * p.fn_sum(c(x, 0.0))
            });
            for (re, im) in [(0.0, 0.0), (1.0, 0.5)] {
                let z = c(re, im);
                let superposed = modulate_bargmann(&psi, n, a, z, &rule).unwrap();
                let direct = forward(&modulated, z, &rule).unwrap();
                assert!(
                    (superposed - direct).norm() < 1e-8,
                    "n={n} a={a} k={k} z={z}: {superposed} vs {direct}"
                );
            }
        }
    }
}

#[test]
fn first_integral_representation_reconstructs_on_the_grid() {
    let rule2 = fock_rule(96).unwrap();
    let x_grid = [-1.5, -0.75, 0.0, 0.75, 1.5];
    for n in [1usize, 2, 4, 8] {
        for a in [1.5, 2.0] {
            let params = SuperoscParams::new(n, c(a, 0.0)).unwrap();
            for x in x_grid {
                let rep = integral_rep_one(x, n, a, &rule2).unwrap();
                let direct = params.fn_sum(c(x, 0.0));
                assert!(
                    (rep - direct).norm() < 1e-7,
                    "n={n} a={a} x={x}: {rep} vs {direct}"
                );
            }
        }
    }
}

#[test]
fn second_integral_representation_reconstructs_on_the_grid() {
    let rule = gauss_hermite_rule(96).unwrap();
    for (n, a) in [(1usize, 2.0), (4, 2.0), (6, 1.5), (8, 3.0)] {
        let params = SuperoscParams::new(n, c(a, 0.0)).unwrap();
        for (re, im) in [(0.0, 0.0), (1.0, 0.0), (0.5, 0.5), (-0.6, 0.9)] {
            let z = c(re, im);
            let rep = integral_rep_two(z, n, a, &rule).unwrap();
            let direct = params.fn_sum(z);
            assert!(
                (rep - direct).norm() < 1e-8,
                "n={n} a={a} z={z}: {rep} vs {direct}"
            );
        }
    }
}

#[test]
fn sigma_forms_agree_everywhere_on_the_grid() {
    for (n, a) in [(1usize, 2.0), (3, 1.5), (6, 2.0), (10, 3.0)] {
        for x in [-2.0, -0.7, 0.0, 0.7, 2.0] {
            let (kernel_route, explicit_route) = sigma_n(x, n, a).unwrap();
            assert!(
                (kernel_route - explicit_route).norm() < 1e-12 * explicit_route.norm().max(1.0),
                "n={n} a={a} x={x}: {kernel_route} vs {explicit_route}"
            );
        }
    }
}

#[test]
fn fock_norms_match_the_two_dimensional_integral() {
    // ‖F_n(·, a)‖ from the double-double bilinear closed form against the
    // 2D Gaussian-measure quadrature of |F_n(z)|².
    let rule2 = fock_rule(96).unwrap();
    for (n, a) in [(1usize, 1.5), (1, 2.0), (2, 2.0), (3, 2.0)] {
        let closed = oscfock::bargmann::fock_norm_fn(n, a).unwrap();
        let params = SuperoscParams::new(n, c(a, 0.0)).unwrap();
        let f = EntireFn::new("fn_sum", move |z| params.fn_sum(z));
        let by_quad = fock_norm(&f, &rule2).unwrap();
        assert!(
            (closed - by_quad).abs() < 1e-8 * closed.max(1.0),
            "n={n} a={a}: {closed} vs {by_quad}"
        );
    }
}
