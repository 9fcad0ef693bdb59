//! Grid evaluation of the library's named objects, for plotting and
//! downstream analysis. Output is deterministic: identical configuration
//! gives byte-identical tables.

use oscfock::bargmann::{bso_with, hkn_with, sigma_with};
use oscfock::fock::coherent_superposition;

use crate::config::SuiteConfig;
use crate::report::Table;
use crate::CliError;

/// Which object to evaluate. Objects over the complex plane are evaluated
/// on the z grid; real-line objects on the x grid (complex grid tokens are
/// rejected for those).
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum EvalObject {
    /// The superoscillating sum F_n(z) on the z grid.
    Fn,
    /// The Gaussian-modulated sequence F_n(x) e^{−x²/2} on the x grid.
    #[value(name = "ftilde_n", alias = "ftilde-n")]
    FtildeN,
    /// The closed-form transform image of the modulated sequence, z grid.
    Bso,
    /// The closed-form transform image of the Hermite-modulated sequence
    /// of degree k, z grid.
    Hkn,
    /// The inverse image σ_n of the entire sequence (kernel route), x grid.
    #[value(name = "sigma_n", alias = "sigma-n")]
    SigmaN,
    /// The coherent-state superposition Σ_j C_j k_{b_j}(z), z grid.
    #[value(name = "coherent_sum", alias = "coherent-sum")]
    CoherentSum,
}

fn x_only(cfg: &SuiteConfig, what: &str) -> Result<Vec<f64>, CliError> {
    if cfg.z_grid.iter().any(|z| z.im != 0.0) {
        return Err(CliError::Usage(format!(
            "{what} is a real-line object; the grid must contain only real points"
        )));
    }
    Ok(cfg.x_grid.clone())
}

/// Evaluate `object` for the FIRST configured n and a (the lists' heads)
/// on the matching grid.
pub fn run(object: EvalObject, k: usize, cfg: &SuiteConfig) -> Result<Table, CliError> {
    let n = cfg.n_list[0];
    let a = cfg.a_list[0];
    let params = cfg.build_params(n, a)?;
    let complex_err = |e: oscfock::error::Error| CliError::Usage(e.to_string());

    let (columns, rows) = match object {
        EvalObject::Fn => {
            let rows = cfg
                .z_grid
                .iter()
                .map(|&z| {
                    let v = params.fn_sum(z);
                    vec![z.re, z.im, v.re, v.im]
                })
                .collect();
            (vec!["re_z", "im_z", "re", "im"], rows)
        }
        EvalObject::Bso => {
            let mut rows = Vec::with_capacity(cfg.z_grid.len());
            for &z in &cfg.z_grid {
                let v = bso_with(z, &params).map_err(complex_err)?;
                rows.push(vec![z.re, z.im, v.re, v.im]);
            }
            (vec!["re_z", "im_z", "re", "im"], rows)
        }
        EvalObject::Hkn => {
            let mut rows = Vec::with_capacity(cfg.z_grid.len());
            for &z in &cfg.z_grid {
                let v = hkn_with(z, k, &params).map_err(complex_err)?;
                rows.push(vec![z.re, z.im, v.re, v.im]);
            }
            (vec!["re_z", "im_z", "re", "im"], rows)
        }
        EvalObject::CoherentSum => {
            let mut rows = Vec::with_capacity(cfg.z_grid.len());
            for &z in &cfg.z_grid {
                let v = coherent_superposition(&params, z).map_err(complex_err)?;
                rows.push(vec![z.re, z.im, v.re, v.im]);
            }
            (vec!["re_z", "im_z", "re", "im"], rows)
        }
        EvalObject::FtildeN => {
            let xs = x_only(cfg, "ftilde_n")?;
            let rows = xs
                .iter()
                .map(|&x| {
                    let v = params.ftilde_n(x);
                    vec![x, v.re, v.im]
                })
                .collect();
            (vec!["x", "re", "im"], rows)
        }
        EvalObject::SigmaN => {
            let xs = x_only(cfg, "sigma_n")?;
            let mut rows = Vec::with_capacity(xs.len());
            for &x in &xs {
                let (explicit, _kernel_calls) =
                    sigma_with(x, &params).map_err(complex_err)?;
                rows.push(vec![x, explicit.re, explicit.im]);
            }
            (vec!["x", "re", "im"], rows)
        }
    };

    Ok(Table { columns, rows })
}
