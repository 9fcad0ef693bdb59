//! The verification suite: every closed-form identity the library exports,
//! cross-checked against an independent quadrature route on the configured
//! grids, one report entry per identity.

use std::time::Instant;

use num_complex::Complex64;

use oscfock::bargmann::{
    appell_apply, blim_closed, bso_with, forward, hk_closed, integral_rep_one_with,
    integral_rep_two_with, phi_ell, RealFn,
};
use oscfock::fock::{
    basis_e, norm, normalized_kernel, weyl_apply, weyl_compose_check, EntireFn,
};
use oscfock::fourier::{
    approx_fourier_factorization, double_fourier_check, fourier_ftilde_n_with,
    fourier_quadrature, gaussian_signal, hermite_signal, translation_weyl_intertwine,
    ApproxSeq,
};
use oscfock::hermite::{hermite_fn, hkn};
use oscfock::quadrature::{fock_rule, gauss_hermite_rule, QuadRule1D, QuadRule2D};
use oscfock::superosc::{fn_product, ftilde_limit, SuperoscParams};

use crate::config::SuiteConfig;
use crate::report::{ReportEntry, VerificationReport};
use crate::CliError;

/// Identity ids in report order, with their default tolerances. These are
/// the keys `--tolerance ID=VAL` accepts.
pub const IDENTITIES: &[(&str, f64)] = &[
    ("sum_product", 1e-10),
    ("coefficient_sum", 1e-12),
    ("frequency_moment", 1e-10),
    ("basis_map", 1e-9),
    ("modulated_image", 1e-8),
    ("modulated_limit_image", 1e-9),
    ("hermite_modulated_image", 1e-8),
    ("hermite_limit_image", 1e-8),
    ("weyl_composition", 1e-12),
    ("weyl_unitarity", 1e-9),
    ("appell_ladder", 1e-11),
    ("integral_rep_one", 1e-7),
    ("integral_rep_two", 1e-8),
    ("fourier_closed", 1e-8),
    ("fourier_factorization", 1e-8),
    ("gaussian_image", 1e-8),
    ("gaussian_mass", 1e-9),
    ("double_fourier", 1e-7),
    ("translation_weyl", 1e-7),
];

pub fn known_ids() -> Vec<&'static str> {
    IDENTITIES.iter().map(|(id, _)| *id).collect()
}

fn nan_c() -> Complex64 {
    Complex64::new(f64::NAN, f64::NAN)
}

/// Shared per-run context: quadrature rules and the coefficient tables for
/// every configured (n, a) pair, built once.
struct Ctx {
    rule: QuadRule1D,
    rule2: QuadRule2D,
    combos: Vec<SuperoscParams>,
}

impl Ctx {
    fn build(cfg: &SuiteConfig) -> Result<Ctx, CliError> {
        let rule = gauss_hermite_rule(cfg.quad_order)
            .map_err(|e| CliError::Usage(e.to_string()))?;
        let rule2 = fock_rule(cfg.quad_order).map_err(|e| CliError::Usage(e.to_string()))?;
        let mut combos = Vec::new();
        for &n in &cfg.n_list {
            for &a in &cfg.a_list {
                combos.push(cfg.build_params(n, a)?);
            }
        }
        Ok(Ctx { rule, rule2, combos })
    }
}

type CheckFn = fn(&SuiteConfig, &Ctx) -> Result<f64, oscfock::error::Error>;

/// Run the full suite. Trace lines go to stderr; the machine-readable
/// report is the return value.
pub fn run(cfg: &SuiteConfig) -> Result<VerificationReport, CliError> {
    let ctx = Ctx::build(cfg)?;
    let checks: &[(&str, &str, CheckFn)] = &[
        (
            "sum_product",
            "superposition sum matches the product form on the z grid (scaled by amplification)",
            check_sum_product,
        ),
        (
            "coefficient_sum",
            "sequence coefficients sum to one",
            check_coefficient_sum,
        ),
        (
            "frequency_moment",
            "first frequency moment of the coefficients equals the amplitude",
            check_frequency_moment,
        ),
        (
            "basis_map",
            "transform maps Hermite functions to normalized monomials",
            check_basis_map,
        ),
        (
            "modulated_image",
            "transform of the Gaussian-modulated sequence matches its closed image",
            check_modulated_image,
        ),
        (
            "modulated_limit_image",
            "transform of the Gaussian-modulated limit wave matches its closed image",
            check_modulated_limit_image,
        ),
        (
            "hermite_modulated_image",
            "transform of Hermite-modulated sequences matches the closed family",
            check_hermite_modulated_image,
        ),
        (
            "hermite_limit_image",
            "transform of Hermite-modulated limit waves matches the closed family",
            check_hermite_limit_image,
        ),
        (
            "weyl_composition",
            "Weyl shifts compose up to the symplectic phase",
            check_weyl_composition,
        ),
        (
            "weyl_unitarity",
            "Weyl shifts preserve the quadrature norm",
            check_weyl_unitarity,
        ),
        (
            "appell_ladder",
            "ladder operator steps down the Appell family",
            check_appell_ladder,
        ),
        (
            "integral_rep_one",
            "coherent superposition pulls back to the sequence on the real line",
            check_integral_rep_one,
        ),
        (
            "integral_rep_two",
            "transform of the kernel superposition recovers the entire sequence",
            check_integral_rep_two,
        ),
        (
            "fourier_closed",
            "Fourier transform of the modulated sequence matches its closed form",
            check_fourier_closed,
        ),
        (
            "fourier_factorization",
            "Fourier transform of shifted signals factorizes through the sum form",
            check_fourier_factorization,
        ),
        (
            "gaussian_image",
            "Gaussian shift sequence transforms onto the modulated sequence",
            check_gaussian_image,
        ),
        (
            "gaussian_mass",
            "Gaussian shift sequence keeps unit mass",
            check_gaussian_mass,
        ),
        (
            "double_fourier",
            "double Fourier transform reflects the Gaussian shift sequence",
            check_double_fourier,
        ),
        (
            "translation_weyl",
            "translation conjugates to a rescaled Weyl shift under the transform",
            check_translation_weyl,
        ),
    ];

    let mut entries = Vec::with_capacity(checks.len());
    for (id, statement, check) in checks {
        let default_tol = IDENTITIES
            .iter()
            .find(|(i, _)| i == id)
            .map(|(_, t)| *t)
            .expect("check table and identity table agree");
        let tol = cfg.tolerance(id, default_tol);
        let start = Instant::now();
        let max_abs_error =
            check(cfg, &ctx).map_err(|e| CliError::Usage(format!("{id}: {e}")))?;
        let runtime_s = start.elapsed().as_secs_f64();
        let pass = max_abs_error <= tol;
        eprintln!(
            "{} {id}: max error {max_abs_error:.3e} vs tolerance {tol:.1e} ({runtime_s:.2}s)",
            if pass { "PASS" } else { "FAIL" }
        );
        entries.push(ReportEntry {
            id: id.to_string(),
            statement: statement.to_string(),
            max_abs_error,
            tolerance: tol,
            pass,
            runtime_s,
        });
    }

    let report = VerificationReport::new(entries);
    if !report.all_passed() {
        let failing: Vec<&str> = report
            .entries
            .iter()
            .filter(|e| !e.pass)
            .map(|e| e.id.as_str())
            .collect();
        eprintln!(
            "{} of {} identities failed: {}",
            report.summary.failed,
            report.summary.total,
            failing.join(", ")
        );
    } else {
        eprintln!("all {} identities passed", report.summary.total);
    }
    Ok(report)
}

fn check_sum_product(
    cfg: &SuiteConfig,
    ctx: &Ctx,
) -> Result<f64, oscfock::error::Error> {
    let mut worst: f64 = 0.0;
    for p in &ctx.combos {
        let scale = p.amplification().max(1.0);
        for &z in &cfg.z_grid {
            let gap = (p.fn_sum(z) - fn_product(z, p.n(), p.a())?).norm() / scale;
            worst = worst.max(gap);
        }
    }
    Ok(worst)
}

fn check_coefficient_sum(
    _cfg: &SuiteConfig,
    ctx: &Ctx,
) -> Result<f64, oscfock::error::Error> {
    let mut worst: f64 = 0.0;
    for p in &ctx.combos {
        worst = worst.max((p.coefficient_sum() - Complex64::new(1.0, 0.0)).norm());
    }
    Ok(worst)
}

fn check_frequency_moment(
    _cfg: &SuiteConfig,
    ctx: &Ctx,
) -> Result<f64, oscfock::error::Error> {
    let mut worst: f64 = 0.0;
    for p in &ctx.combos {
        worst = worst.max((p.frequency_moment(1) - p.a()).norm());
    }
    Ok(worst)
}

fn check_basis_map(cfg: &SuiteConfig, ctx: &Ctx) -> Result<f64, oscfock::error::Error> {
    let mut worst: f64 = 0.0;
    for k in 0..=6usize {
        let hk = RealFn::new(format!("h_{k}"), move |x| {
            Complex64::new(hermite_fn(k, x).unwrap_or(f64::NAN), 0.0)
        });
        let ek = basis_e(k)?;
        for &z in &cfg.z_grid {
            worst = worst.max((forward(&hk, z, &ctx.rule)? - ek.eval(z)).norm());
        }
    }
    Ok(worst)
}

fn check_modulated_image(
    cfg: &SuiteConfig,
    ctx: &Ctx,
) -> Result<f64, oscfock::error::Error> {
    let mut worst: f64 = 0.0;
    for p in &ctx.combos {
        let pc = p.clone();
        let phi = RealFn::new(format!("ftilde_{}", p.n()), move |x| pc.ftilde_n(x));
        for &z in &cfg.z_grid {
            worst = worst.max((forward(&phi, z, &ctx.rule)? - bso_with(z, p)?).norm());
        }
    }
    Ok(worst)
}

fn check_modulated_limit_image(
    cfg: &SuiteConfig,
    ctx: &Ctx,
) -> Result<f64, oscfock::error::Error> {
    let mut worst: f64 = 0.0;
    for &a in &cfg.a_list {
        let phi = RealFn::new(format!("ftilde_lim_{a}"), move |x| {
            ftilde_limit(x, a).unwrap_or_else(|_| nan_c())
        });
        for &z in &cfg.z_grid {
            worst = worst.max((forward(&phi, z, &ctx.rule)? - blim_closed(z, a)?).norm());
        }
    }
    Ok(worst)
}

fn check_hermite_modulated_image(
    cfg: &SuiteConfig,
    ctx: &Ctx,
) -> Result<f64, oscfock::error::Error> {
    let mut worst: f64 = 0.0;
    for p in &ctx.combos {
        for k in 0..=4usize {
            let pc = p.clone();
            let phi = RealFn::new(format!("h{k}_f{}", p.n()), move |x| {
                hkn(x, k, &pc).unwrap_or_else(|_| nan_c())
            });
            for &z in &cfg.z_grid {
                worst = worst.max(
                    (forward(&phi, z, &ctx.rule)?
                        - oscfock::bargmann::hkn_with(z, k, p)?)
                    .norm(),
                );
            }
        }
    }
    Ok(worst)
}

fn check_hermite_limit_image(
    cfg: &SuiteConfig,
    ctx: &Ctx,
) -> Result<f64, oscfock::error::Error> {
    let mut worst: f64 = 0.0;
    for &a in &cfg.a_list {
        for k in 0..=4usize {
            let phi = RealFn::new(format!("h{k}_lim_{a}"), move |x| {
                Complex64::new(hermite_fn(k, x).unwrap_or(f64::NAN), 0.0)
                    * Complex64::new(0.0, a * x).exp()
            });
            for &z in &cfg.z_grid {
                worst = worst
                    .max((forward(&phi, z, &ctx.rule)? - hk_closed(z, k, a)?).norm());
            }
        }
    }
    Ok(worst)
}

/// Shifts for the pointwise Weyl checks: the configured z grid scaled to
/// half size, which keeps the exponential factors of order e^|z|² small
/// enough that the 1e-12 absolute tolerance is meaningful in f64.
fn half_grid(cfg: &SuiteConfig) -> Vec<Complex64> {
    cfg.z_grid.iter().map(|&z| 0.5 * z).collect()
}

fn check_weyl_composition(
    cfg: &SuiteConfig,
    _ctx: &Ctx,
) -> Result<f64, oscfock::error::Error> {
    let probe = basis_e(1)?;
    let shifts = half_grid(cfg);
    let mut worst: f64 = 0.0;
    for &u in &shifts {
        for &v in &shifts {
            for &z in &shifts {
                let (lhs, rhs) = weyl_compose_check(u, v, &probe, z);
                worst = worst.max((lhs - rhs).norm());
            }
        }
    }
    Ok(worst)
}

fn check_weyl_unitarity(
    cfg: &SuiteConfig,
    ctx: &Ctx,
) -> Result<f64, oscfock::error::Error> {
    let probes: Vec<EntireFn> = vec![
        basis_e(0)?,
        basis_e(1)?,
        normalized_kernel(Complex64::new(0.5, 0.0)).as_entire(),
    ];
    let mut worst: f64 = 0.0;
    for f in &probes {
        let base = norm(f, &ctx.rule2)?;
        for &s in &half_grid(cfg) {
            let shifted = norm(&weyl_apply(s, f), &ctx.rule2)?;
            worst = worst.max((shifted - base).abs());
        }
    }
    Ok(worst)
}

fn check_appell_ladder(
    cfg: &SuiteConfig,
    _ctx: &Ctx,
) -> Result<f64, oscfock::error::Error> {
    let mut worst: f64 = 0.0;
    for &a in &cfg.a_list {
        for ell in 1..=6usize {
            for &z in &cfg.z_grid {
                worst = worst
                    .max((appell_apply(ell, a, z)? - phi_ell(z, ell - 1, a)?).norm());
            }
        }
    }
    Ok(worst)
}

fn check_integral_rep_one(
    cfg: &SuiteConfig,
    ctx: &Ctx,
) -> Result<f64, oscfock::error::Error> {
    let mut worst: f64 = 0.0;
    for p in &ctx.combos {
        for &x in &cfg.x_grid {
            let rep = integral_rep_one_with(x, p, &ctx.rule2)?;
            worst = worst.max((rep - p.fn_sum(Complex64::new(x, 0.0))).norm());
        }
    }
    Ok(worst)
}

fn check_integral_rep_two(
    cfg: &SuiteConfig,
    ctx: &Ctx,
) -> Result<f64, oscfock::error::Error> {
    let mut worst: f64 = 0.0;
    for p in &ctx.combos {
        for &z in &cfg.z_grid {
            let rep = integral_rep_two_with(z, p, &ctx.rule)?;
            worst = worst.max((rep - p.fn_sum(z)).norm());
        }
    }
    Ok(worst)
}

fn check_fourier_closed(
    cfg: &SuiteConfig,
    ctx: &Ctx,
) -> Result<f64, oscfock::error::Error> {
    let mut worst: f64 = 0.0;
    for p in &ctx.combos {
        let pc = p.clone();
        let phi = RealFn::new(format!("ftilde_{}", p.n()), move |x| pc.ftilde_n(x));
        for &lam in &cfg.x_grid {
            let by_quad = fourier_quadrature(&phi, lam, &ctx.rule)?;
            worst = worst.max((by_quad - fourier_ftilde_n_with(lam, p)?).norm());
        }
    }
    Ok(worst)
}

fn check_fourier_factorization(
    cfg: &SuiteConfig,
    ctx: &Ctx,
) -> Result<f64, oscfock::error::Error> {
    let mut worst: f64 = 0.0;
    for p in &ctx.combos {
        for k in 0..=2usize {
            let seq = ApproxSeq::from_params(hermite_signal(k)?, p.clone())?;
            for &lam in &cfg.x_grid {
                let (lhs, rhs) = approx_fourier_factorization(&seq, lam, &ctx.rule)?;
                worst = worst.max((lhs - rhs).norm());
            }
        }
    }
    Ok(worst)
}

/// The Gaussian shift sequence: ψ the unit-mass Gaussian, so that the
/// transform collapses to the Gaussian-modulated sequence at the frequency.
fn gaussian_seq(p: &SuperoscParams) -> Result<ApproxSeq, oscfock::error::Error> {
    ApproxSeq::from_params(gaussian_signal(), p.clone())
}

fn check_gaussian_image(
    cfg: &SuiteConfig,
    ctx: &Ctx,
) -> Result<f64, oscfock::error::Error> {
    let mut worst: f64 = 0.0;
    for p in &ctx.combos {
        let seq = gaussian_seq(p)?;
        let seq_fn = seq.as_real_fn();
        for &lam in &cfg.x_grid {
            let img = fourier_quadrature(&seq_fn, lam, &ctx.rule)?;
            worst = worst.max((img - p.ftilde_n(lam)).norm());
        }
    }
    Ok(worst)
}

fn check_gaussian_mass(
    _cfg: &SuiteConfig,
    ctx: &Ctx,
) -> Result<f64, oscfock::error::Error> {
    let mut worst: f64 = 0.0;
    for p in &ctx.combos {
        let seq = gaussian_seq(p)?;
        let seq_fn = seq.as_real_fn();
        let mass = ctx.rule.integrate_plain(|x| seq_fn.eval(x))?;
        worst = worst.max((mass - Complex64::new(1.0, 0.0)).norm());
    }
    Ok(worst)
}

fn check_double_fourier(
    cfg: &SuiteConfig,
    ctx: &Ctx,
) -> Result<f64, oscfock::error::Error> {
    let mut worst: f64 = 0.0;
    for p in &ctx.combos {
        let seq = gaussian_seq(p)?;
        for &xi in &cfg.x_grid {
            let (lhs, rhs) = double_fourier_check(&seq, xi, &ctx.rule)?;
            worst = worst.max((lhs - rhs).norm());
        }
    }
    Ok(worst)
}

fn check_translation_weyl(
    cfg: &SuiteConfig,
    ctx: &Ctx,
) -> Result<f64, oscfock::error::Error> {
    let probes: Vec<EntireFn> = vec![
        EntireFn::new("1", |_| Complex64::new(1.0, 0.0)),
        basis_e(1)?,
        normalized_kernel(Complex64::new(0.5, 0.0)).as_entire(),
    ];
    let z_probes: Vec<Complex64> = cfg.z_grid.iter().copied().take(2).collect();
    let mut worst: f64 = 0.0;
    for b in [0.0, 0.5, 1.0] {
        for f in &probes {
            for &z in &z_probes {
                let (lhs, rhs) =
                    translation_weyl_intertwine(b, f, z, &ctx.rule, &ctx.rule2)?;
                worst = worst.max((lhs - rhs).norm());
            }
        }
    }
    Ok(worst)
}
