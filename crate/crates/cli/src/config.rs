//! Experiment configuration: a small `key = value` file format plus
//! command-line overrides, validated per scenario, with a canonical
//! serialization that is hashed into every output header.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};

use alphatune::AlphaGrid;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scenario {
    KnownSweep,
    SynthSweep,
    DeValidate,
    GeValidate,
    Tune,
}

impl Scenario {
    pub fn name(self) -> &'static str {
        match self {
            Scenario::KnownSweep => "known-sweep",
            Scenario::SynthSweep => "synth-sweep",
            Scenario::DeValidate => "de-validate",
            Scenario::GeValidate => "ge-validate",
            Scenario::Tune => "tune",
        }
    }
}

/// Synthetic model family (see [`crate::models`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Common,
    Distinct,
    Isotropic,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Common => "common",
            Family::Distinct => "distinct",
            Family::Isotropic => "isotropic",
        }
    }

    pub fn has_common_covariance(self) -> bool {
        !matches!(self, Family::Distinct)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassifierKind {
    Lda,
    Centroid,
    Rlda,
    Rplda,
    Svm,
    Logistic,
}

impl ClassifierKind {
    pub fn name(self) -> &'static str {
        match self {
            ClassifierKind::Lda => "lda",
            ClassifierKind::Centroid => "centroid",
            ClassifierKind::Rlda => "rlda",
            ClassifierKind::Rplda => "rplda",
            ClassifierKind::Svm => "svm",
            ClassifierKind::Logistic => "logistic",
        }
    }
}

/// Base classifier plus its native hyperparameters.
#[derive(Debug, Clone)]
pub struct ClassifierSpec {
    pub kind: ClassifierKind,
    /// Ridge for `rlda`.
    pub gamma: f64,
    /// Penalty for `svm`.
    pub penalty: f64,
    /// Projection dimension for `rplda`; `None` picks `min(p, n-4)/2`.
    pub rp_dim: Option<usize>,
    /// Ensemble size for `rplda`.
    pub rp_members: usize,
    /// Pre-tune the native hyperparameter per training set by exact-error
    /// grid search before sweeping alpha.
    pub tune_native: bool,
}

/// Everything a scenario run needs. Construct via [`ExperimentConfig::build`].
#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub scenario: Scenario,
    pub family: Family,
    pub p: usize,
    pub n0: usize,
    pub n1: usize,
    pub classifier: ClassifierSpec,
    pub alpha_min: f64,
    pub alpha_max: f64,
    pub alpha_step: f64,
    pub reps: usize,
    pub seed: u64,
    pub assume_common_cov: bool,
    /// Dimensions for the validate scenarios (fixed `p/n` ratio).
    pub p_list: Vec<usize>,
    /// `p/n` for the validate scenarios.
    pub ratio: f64,
    pub train_csv: Option<PathBuf>,
    pub test_csv: Option<PathBuf>,
}

/// Command-line overrides applied on top of the config file.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub seed: Option<u64>,
    pub reps: Option<usize>,
    pub alpha_min: Option<f64>,
    pub alpha_max: Option<f64>,
    pub alpha_step: Option<f64>,
    pub assume_common_cov: Option<bool>,
}

impl ExperimentConfig {
    /// Parses `key = value` text (comments start with `#`), applies
    /// `overrides`, fills defaults, and validates for `scenario`.
    pub fn build(scenario: Scenario, file_text: &str, overrides: &Overrides) -> Result<Self> {
        let raw = parse_key_values(file_text)?;
        Self::from_raw(scenario, raw, overrides)
    }

    /// [`ExperimentConfig::build`] reading the optional config file first.
    pub fn load(
        scenario: Scenario,
        config_path: Option<&Path>,
        overrides: &Overrides,
    ) -> Result<Self> {
        let text = match config_path {
            Some(path) => {
                std::fs::read_to_string(path).map_err(|source| CliError::ConfigIo {
                    path: path.to_path_buf(),
                    source,
                })?
            }
            None => String::new(),
        };
        Self::build(scenario, &text, overrides)
    }

    fn from_raw(
        scenario: Scenario,
        mut raw: BTreeMap<String, String>,
        overrides: &Overrides,
    ) -> Result<Self> {
        if let Some(s) = raw.remove("scenario") {
            if s != scenario.name() {
                return Err(CliError::Config(format!(
                    "config file says scenario = {s} but the {} subcommand was invoked",
                    scenario.name()
                )));
            }
        }
        let family = match raw.remove("family").as_deref() {
            None | Some("common") => Family::Common,
            Some("distinct") => Family::Distinct,
            Some("isotropic") => Family::Isotropic,
            Some(other) => {
                return Err(CliError::Config(format!(
                    "unknown family '{other}' (expected common | distinct | isotropic)"
                )))
            }
        };
        let kind = match raw.remove("classifier").as_deref() {
            None | Some("lda") => ClassifierKind::Lda,
            Some("centroid") => ClassifierKind::Centroid,
            Some("rlda") => ClassifierKind::Rlda,
            Some("rplda") => ClassifierKind::Rplda,
            Some("svm") => ClassifierKind::Svm,
            Some("logistic") => ClassifierKind::Logistic,
            Some(other) => {
                return Err(CliError::Config(format!(
                    "unknown classifier '{other}' \
                     (expected lda | centroid | rlda | rplda | svm | logistic)"
                )))
            }
        };
        let classifier = ClassifierSpec {
            kind,
            gamma: take_parsed(&mut raw, "gamma")?.unwrap_or(0.1),
            penalty: take_parsed(&mut raw, "penalty")?.unwrap_or(1.0),
            rp_dim: take_parsed(&mut raw, "rp_dim")?,
            rp_members: take_parsed(&mut raw, "rp_members")?.unwrap_or(50),
            tune_native: take_parsed(&mut raw, "tune_native")?.unwrap_or(false),
        };
        let assume_common_cov = overrides
            .assume_common_cov
            .map(Ok)
            .or_else(|| take_parsed(&mut raw, "assume_common_cov").transpose())
            .transpose()?
            .unwrap_or_else(|| family.has_common_covariance());
        let config = Self {
            scenario,
            family,
            p: take_parsed(&mut raw, "p")?.unwrap_or(match scenario {
                Scenario::KnownSweep => 200,
                _ => 400,
            }),
            n0: take_parsed(&mut raw, "n0")?.unwrap_or(225),
            n1: take_parsed(&mut raw, "n1")?.unwrap_or(225),
            classifier,
            alpha_min: overrides
                .alpha_min
                .or(take_parsed(&mut raw, "alpha_min")?)
                .unwrap_or(-0.5),
            alpha_max: overrides
                .alpha_max
                .or(take_parsed(&mut raw, "alpha_max")?)
                .unwrap_or(2.0),
            alpha_step: overrides
                .alpha_step
                .or(take_parsed(&mut raw, "alpha_step")?)
                .unwrap_or(0.005),
            reps: overrides.reps.or(take_parsed(&mut raw, "reps")?).unwrap_or(100),
            seed: overrides.seed.or(take_parsed(&mut raw, "seed")?).unwrap_or(42),
            assume_common_cov,
            p_list: take_list(&mut raw, "p_list")?.unwrap_or_else(|| vec![100, 200, 400]),
            ratio: take_parsed(&mut raw, "ratio")?.unwrap_or(0.5),
            train_csv: raw.remove("train_csv").map(PathBuf::from),
            test_csv: raw.remove("test_csv").map(PathBuf::from),
        };
        if let Some(key) = raw.keys().next() {
            return Err(CliError::Config(format!("unknown config key '{key}'")));
        }
        config.validate()?;
        Ok(config)
    }

    /// The alpha grid described by `alpha_min/alpha_max/alpha_step`.
    pub fn alpha_grid(&self) -> Result<Vec<f64>> {
        let grid = AlphaGrid::new(self.alpha_min, self.alpha_max, self.alpha_step)
            .map_err(|e| CliError::Config(format!("bad alpha grid: {e}")))?;
        Ok(grid.values())
    }

    /// Class sizes for a validate-scenario dimension `p` at the configured
    /// `p/n` ratio: `n` split as evenly as possible.
    pub fn validate_counts(&self, p: usize) -> (usize, usize) {
        let n = (p as f64 / self.ratio).round() as usize;
        let n0 = n / 2;
        (n0, n - n0)
    }

    fn validate(&self) -> Result<()> {
        self.alpha_grid()?;
        if self.reps == 0 {
            return Err(CliError::Config("reps must be at least 1".into()));
        }
        let needs_model = !matches!(self.scenario, Scenario::Tune);
        if needs_model && self.family != Family::Isotropic && self.p < 4 {
            return Err(CliError::Config(format!(
                "the {} family needs p >= 4, got p = {}",
                self.family.name(),
                self.p
            )));
        }
        match self.scenario {
            Scenario::KnownSweep => {
                if !self.family.has_common_covariance() {
                    return Err(CliError::Config(
                        "known-sweep requires a common-covariance family \
                         (common or isotropic)"
                            .into(),
                    ));
                }
            }
            Scenario::SynthSweep => {
                if self.n0 < 2 || self.n1 < 2 {
                    return Err(CliError::Config(format!(
                        "synth-sweep needs n0, n1 >= 2, got ({}, {})",
                        self.n0, self.n1
                    )));
                }
                self.validate_classifier()?;
            }
            Scenario::DeValidate | Scenario::GeValidate => {
                if self.p_list.is_empty() {
                    return Err(CliError::Config("p_list must not be empty".into()));
                }
                if !(self.ratio > 0.0 && self.ratio < 1.0) {
                    return Err(CliError::Config(format!(
                        "ratio (p/n) must lie in (0, 1), got {}",
                        self.ratio
                    )));
                }
                for &p in &self.p_list {
                    let (n0, n1) = self.validate_counts(p);
                    let n = n0 + n1;
                    if p + 2 >= n {
                        return Err(CliError::Config(format!(
                            "growth regime requires p < n - 2; p = {p} with \
                             ratio {} gives n = {n}",
                            self.ratio
                        )));
                    }
                    if self.family != Family::Isotropic && p < 4 {
                        return Err(CliError::Config(format!(
                            "the {} family needs p >= 4, got p = {p} in p_list",
                            self.family.name()
                        )));
                    }
                }
                if self.scenario == Scenario::DeValidate
                    && self.assume_common_cov
                    && !self.family.has_common_covariance()
                {
                    return Err(CliError::Config(
                        "assume_common_cov = true is incompatible with the \
                         distinct family for de-validate; set it to false"
                            .into(),
                    ));
                }
            }
            Scenario::Tune => {
                if self.train_csv.is_none() {
                    return Err(CliError::Config(
                        "tune requires train_csv = <path> in the config file".into(),
                    ));
                }
                if self.classifier.tune_native {
                    return Err(CliError::Config(
                        "tune_native needs a known model to score against; \
                         it is unavailable for the tune scenario"
                            .into(),
                    ));
                }
                if self.classifier.kind != ClassifierKind::Lda && self.test_csv.is_none() {
                    return Err(CliError::Config(
                        "tuning a non-lda base classifier requires test_csv \
                         (the G-estimated curve applies to the lda weight vector only)"
                            .into(),
                    ));
                }
                if self.classifier.kind != ClassifierKind::Lda {
                    self.validate_classifier()?;
                }
            }
        }
        Ok(())
    }

    fn validate_classifier(&self) -> Result<()> {
        let c = &self.classifier;
        match c.kind {
            ClassifierKind::Rlda if !(c.gamma > 0.0) => Err(CliError::Config(format!(
                "rlda needs gamma > 0, got {}",
                c.gamma
            ))),
            ClassifierKind::Svm if !(c.penalty > 0.0) => Err(CliError::Config(format!(
                "svm needs penalty > 0, got {}",
                c.penalty
            ))),
            ClassifierKind::Rplda if c.rp_members == 0 => {
                Err(CliError::Config("rplda needs rp_members >= 1".into()))
            }
            _ => Ok(()),
        }
    }

    /// Canonical serialization: every setting that affects this scenario,
    /// one `key = value` per line, sorted by key. Hashed into output headers;
    /// identical canonical strings mean identical runs.
    pub fn canonical_string(&self) -> String {
        let mut map: BTreeMap<&'static str, String> = BTreeMap::new();
        map.insert("scenario", self.scenario.name().to_string());
        map.insert("alpha_min", fmt_f64(self.alpha_min));
        map.insert("alpha_max", fmt_f64(self.alpha_max));
        map.insert("alpha_step", fmt_f64(self.alpha_step));
        map.insert("seed", self.seed.to_string());
        match self.scenario {
            Scenario::KnownSweep => {
                map.insert("family", self.family.name().to_string());
                map.insert("p", self.p.to_string());
            }
            Scenario::SynthSweep => {
                map.insert("family", self.family.name().to_string());
                map.insert("p", self.p.to_string());
                map.insert("n0", self.n0.to_string());
                map.insert("n1", self.n1.to_string());
                map.insert("reps", self.reps.to_string());
                self.classifier_keys(&mut map);
            }
            Scenario::DeValidate | Scenario::GeValidate => {
                map.insert("family", self.family.name().to_string());
                map.insert(
                    "p_list",
                    self.p_list
                        .iter()
                        .map(|p| p.to_string())
                        .collect::<Vec<_>>()
                        .join(","),
                );
                map.insert("ratio", fmt_f64(self.ratio));
                map.insert("reps", self.reps.to_string());
                map.insert("assume_common_cov", self.assume_common_cov.to_string());
            }
            Scenario::Tune => {
                map.insert(
                    "train_csv",
                    self.train_csv
                        .as_deref()
                        .map(|p| p.display().to_string())
                        .unwrap_or_default(),
                );
                if let Some(test) = &self.test_csv {
                    map.insert("test_csv", test.display().to_string());
                }
                map.insert("assume_common_cov", self.assume_common_cov.to_string());
                map.insert("classifier", self.classifier.kind.name().to_string());
            }
        }
        let mut out = String::new();
        for (k, v) in map {
            out.push_str(k);
            out.push_str(" = ");
            out.push_str(&v);
            out.push('\n');
        }
        out
    }

    fn classifier_keys(&self, map: &mut BTreeMap<&'static str, String>) {
        let c = &self.classifier;
        map.insert("classifier", c.kind.name().to_string());
        map.insert("tune_native", c.tune_native.to_string());
        match c.kind {
            ClassifierKind::Rlda => {
                map.insert("gamma", fmt_f64(c.gamma));
            }
            ClassifierKind::Svm => {
                map.insert("penalty", fmt_f64(c.penalty));
            }
            ClassifierKind::Rplda => {
                if let Some(d) = c.rp_dim {
                    map.insert("rp_dim", d.to_string());
                }
                map.insert("rp_members", c.rp_members.to_string());
            }
            _ => {}
        }
    }

    /// FNV-1a (64-bit) hash of the canonical string, as fixed-width hex.
    pub fn hash(&self) -> String {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for byte in self.canonical_string().bytes() {
            h ^= u64::from(byte);
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
        format!("{h:016x}")
    }
}

/// Shortest round-trip decimal form, used everywhere a float reaches output
/// so reruns are byte-identical.
pub fn fmt_f64(v: f64) -> String {
    format!("{v}")
}

fn parse_key_values(text: &str) -> Result<BTreeMap<String, String>> {
    let mut map = BTreeMap::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(CliError::Config(format!(
                "config line {}: expected 'key = value', got '{line}'",
                idx + 1
            )));
        };
        let key = key.trim().to_string();
        let value = value.trim().to_string();
        if map.insert(key.clone(), value).is_some() {
            return Err(CliError::Config(format!(
                "config line {}: duplicate key '{key}'",
                idx + 1
            )));
        }
    }
    Ok(map)
}

fn take_parsed<T>(raw: &mut BTreeMap<String, String>, key: &str) -> Result<Option<T>>
where
    T: std::str::FromStr,
    T::Err: fmt::Display,
{
    match raw.remove(key) {
        None => Ok(None),
        Some(text) => text.parse::<T>().map(Some).map_err(|e| {
            CliError::Config(format!("config key '{key}': cannot parse '{text}': {e}"))
        }),
    }
}

fn take_list(raw: &mut BTreeMap<String, String>, key: &str) -> Result<Option<Vec<usize>>> {
    match raw.remove(key) {
        None => Ok(None),
        Some(text) => text
            .split(',')
            .map(|part| {
                part.trim().parse::<usize>().map_err(|e| {
                    CliError::Config(format!(
                        "config key '{key}': cannot parse '{}': {e}",
                        part.trim()
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(Some),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_defaults_and_overrides() {
        let cfg = ExperimentConfig::build(
            Scenario::SynthSweep,
            "p = 40\nn0 = 30\nn1 = 30\nseed = 7\n",
            &Overrides {
                seed: Some(9),
                reps: Some(3),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(cfg.p, 40);
        assert_eq!(cfg.seed, 9, "flag overrides file");
        assert_eq!(cfg.reps, 3);
        assert_eq!(cfg.alpha_step, 0.005);
        assert_eq!(cfg.classifier.kind, ClassifierKind::Lda);
        assert!(cfg.assume_common_cov);
    }

    #[test]
    fn rejects_unknown_keys_and_bad_values() {
        let err =
            ExperimentConfig::build(Scenario::SynthSweep, "turbo = on\n", &Overrides::default())
                .unwrap_err();
        assert!(err.to_string().contains("unknown config key 'turbo'"), "{err}");
        let err = ExperimentConfig::build(Scenario::SynthSweep, "p = many\n", &Overrides::default())
            .unwrap_err();
        assert!(err.to_string().contains("cannot parse 'many'"), "{err}");
        let err = ExperimentConfig::build(Scenario::SynthSweep, "p\n", &Overrides::default())
            .unwrap_err();
        assert!(err.to_string().contains("expected 'key = value'"), "{err}");
    }

    #[test]
    fn growth_regime_checked_at_config_time() {
        let err = ExperimentConfig::build(
            Scenario::DeValidate,
            "p_list = 100\nratio = 0.98039215686\n", // n = 102 = p + 2
            &Overrides::default(),
        )
        .unwrap_err();
        assert_eq!(err.exit_code(), crate::error::EXIT_CONFIG);
        assert!(err.to_string().contains("p < n - 2"), "{err}");
    }

    #[test]
    fn distinct_family_known_sweep_rejected() {
        let err = ExperimentConfig::build(
            Scenario::KnownSweep,
            "family = distinct\np = 20\n",
            &Overrides::default(),
        )
        .unwrap_err();
        assert!(err.to_string().contains("common-covariance family"), "{err}");
    }

    #[test]
    fn canonical_string_is_sorted_and_stable() {
        let cfg = ExperimentConfig::build(
            Scenario::SynthSweep,
            "n1 = 30\np = 40\nn0 = 30\nreps = 2\n",
            &Overrides::default(),
        )
        .unwrap();
        let canon = cfg.canonical_string();
        let keys: Vec<&str> = canon
            .lines()
            .map(|l| l.split(" = ").next().unwrap())
            .collect();
        let mut sorted = keys.clone();
        sorted.sort_unstable();
        assert_eq!(keys, sorted);
        assert_eq!(cfg.hash().len(), 16);
        // same settings from differently ordered text hash identically
        let cfg2 = ExperimentConfig::build(
            Scenario::SynthSweep,
            "reps = 2\nn0 = 30\nn1 = 30\np = 40\n",
            &Overrides::default(),
        )
        .unwrap();
        assert_eq!(cfg.hash(), cfg2.hash());
    }

    #[test]
    fn tune_requires_train_csv() {
        let err = ExperimentConfig::build(Scenario::Tune, "", &Overrides::default()).unwrap_err();
        assert!(err.to_string().contains("train_csv"), "{err}");
    }

    #[test]
    fn scenario_key_must_match_subcommand() {
        let err = ExperimentConfig::build(
            Scenario::Tune,
            "scenario = synth-sweep\ntrain_csv = x.csv\n",
            &Overrides::default(),
        )
        .unwrap_err();
        assert!(err.to_string().contains("subcommand"), "{err}");
    }
}
