//! Run configuration: defaults, optional TOML file, command-line overrides,
//! and validation (including the cancellation guard).

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use num_complex::Complex64;
use serde::Deserialize;

use crate::CliError;

/// Output format for reports, tables, and grid dumps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Fully resolved configuration: defaults, overlaid by the optional config
/// file, overlaid by command-line flags.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub quad_order: usize,
    pub n_list: Vec<usize>,
    pub a_list: Vec<f64>,
    pub z_grid: Vec<Complex64>,
    pub x_grid: Vec<f64>,
    pub tolerances: BTreeMap<String, f64>,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    pub allow_unstable: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            quad_order: 96,
            n_list: vec![1, 2, 4, 8, 12],
            a_list: vec![1.5, 2.0],
            z_grid: vec![
                Complex64::new(0.0, 0.0),
                Complex64::new(1.5, 0.0),
                Complex64::new(0.0, 1.0),
                Complex64::new(-1.0, 0.8),
                Complex64::new(0.7, -0.7),
            ],
            x_grid: vec![-1.5, -0.75, 0.0, 0.75, 1.5],
            tolerances: BTreeMap::new(),
            format: OutputFormat::Csv,
            out: None,
            allow_unstable: false,
        }
    }
}

/// The subset of fields a TOML config file may set; everything is optional
/// and flags override the file.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    quad_order: Option<usize>,
    n_list: Option<Vec<usize>>,
    a_list: Option<Vec<f64>>,
    /// Complex points as `[re, im]` pairs.
    z_grid: Option<Vec<(f64, f64)>>,
    x_grid: Option<Vec<f64>>,
    tolerances: Option<BTreeMap<String, f64>>,
    format: Option<String>,
    out: Option<PathBuf>,
    allow_unstable: Option<bool>,
}

/// Command-line values that override the file and the defaults. Collected
/// by clap in `main.rs`.
#[derive(Clone, Debug, Default, clap::Args)]
pub struct CommonArgs {
    /// Gauss-Hermite order used by every quadrature cross-check.
    #[arg(long, value_name = "M")]
    pub quad_order: Option<usize>,

    /// Sequence indices, comma separated (e.g. `--n 1,4,8`).
    #[arg(long, value_name = "LIST", value_delimiter = ',')]
    pub n: Option<Vec<usize>>,

    /// Amplitudes a > 1, comma separated (e.g. `--a 1.5,2`).
    #[arg(long, value_name = "LIST", value_delimiter = ',')]
    pub a: Option<Vec<f64>>,

    /// Grid points, comma separated; each token is a real `x` or a complex
    /// `re:im` (e.g. `--grid 0,1.5,0:1`). Replaces the z-grid when the
    /// tokens are complex-valued and the x-grid when all are real.
    #[arg(long, value_name = "TOKENS")]
    pub grid: Option<String>,

    /// Output format for the report/table/dump.
    #[arg(long, value_enum, value_name = "FMT")]
    pub format: Option<OutputFormat>,

    /// Write the output to this file instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Override one identity tolerance, as `ID=VALUE`; repeatable.
    #[arg(long = "tolerance", value_name = "ID=VAL")]
    pub tolerance: Vec<String>,

    /// Accept parameters past the cancellation guard (a^n > 1e12). Results
    /// lose roughly one digit per factor of 10 of amplification.
    #[arg(long)]
    pub allow_unstable: bool,

    /// TOML file with the same fields as the flags; flags win.
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
}

/// A `--grid` value parsed into points; complex tokens use `re:im`.
pub fn parse_grid(raw: &str) -> Result<Vec<Complex64>, CliError> {
    let mut points = Vec::new();
    for token in raw.split(',') {
        let token = token.trim();
        if token.is_empty() {
            return Err(CliError::Usage(format!("empty grid token in {raw:?}")));
        }
        let parse = |s: &str| -> Result<f64, CliError> {
            s.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Usage(format!("grid token {token:?} is not numeric")))
        };
        let point = match token.split_once(':') {
            Some((re, im)) => Complex64::new(parse(re)?, parse(im)?),
            None => Complex64::new(parse(token)?, 0.0),
        };
        if !point.re.is_finite() || !point.im.is_finite() {
            return Err(CliError::Usage(format!("grid token {token:?} is not finite")));
        }
        points.push(point);
    }
    Ok(points)
}

fn parse_format(s: &str) -> Result<OutputFormat, CliError> {
    match s {
        "csv" => Ok(OutputFormat::Csv),
        "json" => Ok(OutputFormat::Json),
        other => Err(CliError::Usage(format!(
            "unknown format {other:?}; expected \"csv\" or \"json\""
        ))),
    }
}

fn parse_tolerance_flag(raw: &str) -> Result<(String, f64), CliError> {
    let (id, val) = raw.split_once('=').ok_or_else(|| {
        CliError::Usage(format!("--tolerance expects ID=VALUE, got {raw:?}"))
    })?;
    let val: f64 = val.trim().parse().map_err(|_| {
        CliError::Usage(format!("tolerance value in {raw:?} is not numeric"))
    })?;
    Ok((id.trim().to_string(), val))
}

impl SuiteConfig {
    /// defaults ← config file ← flags, then validation.
    pub fn resolve(args: &CommonArgs, known_tolerance_ids: &[&str]) -> Result<Self, CliError> {
        let mut cfg = SuiteConfig::default();

        if let Some(path) = &args.config {
            cfg.apply_file(path)?;
        }

        if let Some(m) = args.quad_order {
            cfg.quad_order = m;
        }
        if let Some(n) = &args.n {
            cfg.n_list = n.clone();
        }
        if let Some(a) = &args.a {
            cfg.a_list = a.clone();
        }
        if let Some(raw) = &args.grid {
            let points = parse_grid(raw)?;
            if points.iter().all(|p| p.im == 0.0) {
                cfg.x_grid = points.iter().map(|p| p.re).collect();
            }
            cfg.z_grid = points;
        }
        if let Some(f) = args.format {
            cfg.format = f;
        }
        if let Some(out) = &args.out {
            cfg.out = Some(out.clone());
        }
        for raw in &args.tolerance {
            let (id, val) = parse_tolerance_flag(raw)?;
            cfg.tolerances.insert(id, val);
        }
        if args.allow_unstable {
            cfg.allow_unstable = true;
        }

        cfg.validate(known_tolerance_ids)?;
        Ok(cfg)
    }

    fn apply_file(&mut self, path: &Path) -> Result<(), CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            CliError::Usage(format!("cannot read config file {}: {e}", path.display()))
        })?;
        let file: FileConfig = toml::from_str(&text).map_err(|e| {
            CliError::Usage(format!("config file {}: {e}", path.display()))
        })?;

        if let Some(m) = file.quad_order {
            self.quad_order = m;
        }
        if let Some(n) = file.n_list {
            self.n_list = n;
        }
        if let Some(a) = file.a_list {
            self.a_list = a;
        }
        if let Some(z) = file.z_grid {
            self.z_grid = z.iter().map(|&(re, im)| Complex64::new(re, im)).collect();
        }
        if let Some(x) = file.x_grid {
            self.x_grid = x;
        }
        if let Some(t) = file.tolerances {
            self.tolerances.extend(t);
        }
        if let Some(f) = &file.format {
            self.format = parse_format(f)?;
        }
        if let Some(out) = file.out {
            self.out = Some(out);
        }
        if let Some(u) = file.allow_unstable {
            self.allow_unstable = u;
        }
        Ok(())
    }

    fn validate(&self, known_tolerance_ids: &[&str]) -> Result<(), CliError> {
        if self.quad_order == 0 || self.quad_order > oscfock::quadrature::MAX_ORDER {
            return Err(CliError::Usage(format!(
                "quad order must be in 1..={}, got {}",
                oscfock::quadrature::MAX_ORDER,
                self.quad_order
            )));
        }
        if self.n_list.is_empty() || self.a_list.is_empty() {
            return Err(CliError::Usage("n and a lists must be non-empty".into()));
        }
        if self.z_grid.is_empty() || self.x_grid.is_empty() {
            return Err(CliError::Usage("grids must be non-empty".into()));
        }
        for &n in &self.n_list {
            if n == 0 {
                return Err(CliError::Usage("sequence index n must be at least 1".into()));
            }
        }
        for &a in &self.a_list {
            if !(a > 1.0) || !a.is_finite() {
                return Err(CliError::Usage(format!(
                    "amplitude must be a finite real > 1, got {a}"
                )));
            }
        }
        for (&n, &a) in self
            .n_list
            .iter()
            .flat_map(|n| self.a_list.iter().map(move |a| (n, a)))
        {
            let amp = oscfock::superosc::amplification(n, Complex64::new(a, 0.0));
            if amp > oscfock::superosc::AMPLIFICATION_LIMIT && !self.allow_unstable {
                return Err(CliError::Usage(format!(
                    "n = {n}, a = {a}: amplification a^n ≈ {amp:.3e} exceeds the \
                     cancellation guard {:.0e} (double precision would keep fewer than \
                     four digits); pass --allow-unstable to run anyway",
                    oscfock::superosc::AMPLIFICATION_LIMIT
                )));
            }
        }
        for (id, &tol) in &self.tolerances {
            if !(tol > 0.0) || !tol.is_finite() {
                return Err(CliError::Usage(format!(
                    "tolerance for {id:?} must be a positive real, got {tol}"
                )));
            }
            if !known_tolerance_ids.is_empty() && !known_tolerance_ids.contains(&id.as_str()) {
                return Err(CliError::Usage(format!(
                    "unknown identity id {id:?} in tolerance override; known ids: {}",
                    known_tolerance_ids.join(", ")
                )));
            }
        }
        Ok(())
    }

    /// Tolerance for an identity: the configured override or the default.
    pub fn tolerance(&self, id: &str, default: f64) -> f64 {
        self.tolerances.get(id).copied().unwrap_or(default)
    }

    /// Build one coefficient table under the configured guard policy.
    pub fn build_params(
        &self,
        n: usize,
        a: f64,
    ) -> Result<oscfock::superosc::SuperoscParams, CliError> {
        let a = Complex64::new(a, 0.0);
        let built = if self.allow_unstable {
            oscfock::superosc::SuperoscParams::new_unguarded(n, a)
        } else {
            oscfock::superosc::SuperoscParams::new(n, a)
        };
        built.map_err(|e| CliError::Usage(e.to_string()))
    }
}
