//! Verification report structures and their CSV/JSON renderings.

use serde::Serialize;

/// Result of one identity check aggregated over the configured grids.
#[derive(Clone, Debug, Serialize)]
pub struct ReportEntry {
    /// Stable identifier, also the key accepted by `--tolerance`.
    pub id: String,
    /// What was checked, in plain words (kept free of commas for CSV).
    pub statement: String,
    /// Largest absolute deviation observed across the grid.
    pub max_abs_error: f64,
    /// Tolerance the deviation was compared against.
    pub tolerance: f64,
    pub pass: bool,
    /// Wall-clock seconds spent on this check.
    pub runtime_s: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub entries: Vec<ReportEntry>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new(entries: Vec<ReportEntry>) -> Self {
        let total = entries.len();
        let passed = entries.iter().filter(|e| e.pass).count();
        VerificationReport {
            entries,
            summary: Summary {
                total,
                passed,
                failed: total - passed,
            },
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("id,statement,max_abs_error,tolerance,pass,runtime_s\n");
        for e in &self.entries {
            out.push_str(&format!(
                "{},{},{},{},{},{:.3}\n",
                e.id,
                e.statement,
                e.max_abs_error,
                e.tolerance,
                e.pass,
                e.runtime_s
            ));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// A rectangular numeric table (used by `converge` and `eval`): a header
/// row plus data rows, rendered as CSV or as a JSON array of objects.
#[derive(Clone, Debug)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| format!("{v}")).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let objects: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| {
                let map: serde_json::Map<String, serde_json::Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, v)| {
                        (
                            c.to_string(),
                            serde_json::Number::from_f64(*v)
                                .map(serde_json::Value::Number)
                                .unwrap_or(serde_json::Value::Null),
                        )
                    })
                    .collect();
                serde_json::Value::Object(map)
            })
            .collect();
        let mut s =
            serde_json::to_string_pretty(&objects).expect("table serializes");
        s.push('\n');
        s
    }
}
