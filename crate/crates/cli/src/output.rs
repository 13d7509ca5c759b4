//! Plot-ready CSV output: a leading `#` comment block (tool version,
//! scenario, config hash, seeds, scenario-level summaries) followed by a
//! header row and data rows. Everything is rendered through deterministic
//! formatting so identical runs produce identical bytes.

use crate::config::{fmt_f64, ExperimentConfig};

pub struct Table {
    comments: Vec<String>,
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Table {
    /// Starts a table with the standard provenance block for `cfg`.
    pub fn new(cfg: &ExperimentConfig, header: Vec<&'static str>) -> Self {
        let mut comments = vec![
            format!("tool = alphatune-cli {}", env!("CARGO_PKG_VERSION")),
            format!("scenario = {}", cfg.scenario.name()),
            format!("config_hash = fnv1a:{}", cfg.hash()),
            format!("seed = {}", cfg.seed),
        ];
        for line in cfg.canonical_string().lines() {
            comments.push(format!("config: {line}"));
        }
        Table {
            comments,
            header,
            rows: Vec::new(),
        }
    }

    pub fn comment(&mut self, text: impl Into<String>) {
        self.comments.push(text.into());
    }

    /// Adds a `key = value` comment with a deterministically formatted float.
    pub fn comment_value(&mut self, key: &str, value: f64) {
        self.comments.push(format!("{key} = {}", fmt_f64(value)));
    }

    pub fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.header.len());
        self.rows.push(cells);
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            out.push_str("# ");
            out.push_str(c);
            out.push('\n');
        }
        out.push_str(&self.header.join(","));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// Cell helper for floats.
pub fn cell(v: f64) -> String {
    fmt_f64(v)
}

/// Cell helper for probabilities: clamped to [0, 1] at this reporting
/// boundary only (estimators may legitimately stray outside when p/n is
/// close to 1; comparisons elsewhere always use the raw values).
pub fn cell_probability(v: f64) -> String {
    fmt_f64(v.clamp(0.0, 1.0))
}

/// Comma-joined seed list for provenance comments.
pub fn seed_list(seeds: &[u64]) -> String {
    seeds
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
