//! Convergence tables: gap-to-limit as a function of the sequence index,
//! for the three superposition limits the library proves.

use num_complex::Complex64;

use oscfock::fock::{weyl_supershift_gap, EntireFn};
use oscfock::fourier::gaussian_supershift_gap;
use oscfock::superosc::fn_product;

use crate::config::SuiteConfig;
use crate::report::Table;
use crate::CliError;

/// Which limit to tabulate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ConvergeKind {
    /// sup over the x grid of |F_n(x) − e^{iax}| (product form; no
    /// amplification guard, stable at any n).
    Superosc,
    /// |Σ_j C_j (W_{b_j} 1)(z) − (W_{−ia/√2} 1)(z)| at the first z-grid point.
    Weyl,
    /// |Σ_j C_j e^{λh_j − h_j²/2} − e^{−a²/2 + aλ}| at the first x-grid point.
    #[value(name = "fourier_limit", alias = "fourier-limit")]
    FourierLimit,
}

fn sup_gap_product(n: usize, a: f64, xs: &[f64]) -> Result<f64, CliError> {
    let ac = Complex64::new(a, 0.0);
    let mut sup: f64 = 0.0;
    for &x in xs {
        let z = Complex64::new(x, 0.0);
        let fnx = fn_product(z, n, ac).map_err(|e| CliError::Usage(e.to_string()))?;
        let limit = Complex64::new(0.0, a * x).exp();
        sup = sup.max((fnx - limit).norm());
    }
    Ok(sup)
}

/// Default abscissas for the superoscillation gap: 201 uniform points on
/// [−1, 1], dense enough that the sup is stable to well under 5%.
fn default_xs() -> Vec<f64> {
    (0..201).map(|i| -1.0 + i as f64 / 100.0).collect()
}

pub fn run(kind: ConvergeKind, cfg: &SuiteConfig, grid_given: bool) -> Result<Table, CliError> {
    let a = cfg.a_list[0];
    let mut rows = Vec::with_capacity(cfg.n_list.len());
    match kind {
        ConvergeKind::Superosc => {
            // The product form needs no coefficient table, so the
            // amplification guard does not apply here; the gap is stable
            // at any index.
            let xs: Vec<f64> = if grid_given {
                cfg.x_grid.clone()
            } else {
                default_xs()
            };
            for &n in &cfg.n_list {
                rows.push(vec![n as f64, sup_gap_product(n, a, &xs)?]);
            }
        }
        ConvergeKind::Weyl => {
            let one = EntireFn::new("1", |_| Complex64::new(1.0, 0.0));
            let z = cfg.z_grid[0];
            for &n in &cfg.n_list {
                let params = cfg.build_params(n, a)?;
                let gap = weyl_supershift_gap(&one, &params, z)
                    .map_err(|e| CliError::Usage(e.to_string()))?;
                rows.push(vec![n as f64, gap]);
            }
        }
        ConvergeKind::FourierLimit => {
            let lam = if grid_given { cfg.x_grid[0] } else { 0.5 * a };
            for &n in &cfg.n_list {
                let params = cfg.build_params(n, a)?;
                let gap = gaussian_supershift_gap(lam, &params)
                    .map_err(|e| CliError::Usage(e.to_string()))?;
                rows.push(vec![n as f64, gap]);
            }
        }
    }
    Ok(Table {
        columns: vec!["n", "gap"],
        rows,
    })
}
