//! Seeded Monte Carlo experiments over random graphs.
//!
//! Trial `i` draws its graph from sub-seed `derive_seed(seed, i)`, computes
//! the exact energy and every bound, and re-checks soundness before the row
//! is accepted. Rows are returned in trial order whatever the thread count,
//! so the CSV output is byte-identical across runs.

mod csv_io;
mod plot;
mod sachs_check;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::asymptotics::{ba_limit_constant, er_f, er_f_closed_upper, SeriesValue};
use crate::bounds::BoundReport;
use crate::graph::Graph;
use crate::par;
use crate::random::{derive_seed, GenSpec, Model};
use crate::spectral::energy;
use crate::{Error, Result};

pub use csv_io::{read_csv, write_csv, CsvHeader, CsvTable, CSV_COLUMNS, CSV_SCHEMA_VERSION};
pub use plot::{render_svg, PlotData};
pub use sachs_check::{random_weighted_graph, sachs_check, SachsCheckReport, SACHS_CHECK_MAX_N};

pub const SUMMARY_SCHEMA_VERSION: u32 = 1;

/// Terms used for the ER reference value `f(λ)`.
pub const ER_REFERENCE_TERMS: usize = 40;

/// Truncation index used for the BA reference constant.
pub const BA_REFERENCE_TERMS: usize = 100_001;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExperimentConfig {
    pub model: Model,
    pub n: usize,
    pub trials: usize,
    /// ER only.
    pub lambda: f64,
    pub seed: u64,
    /// Worker threads; 0 picks the rayon default. Has no effect on output.
    pub threads: usize,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            model: Model::BaTree,
            n: 500,
            trials: 50,
            lambda: 1.0,
            seed: 42,
            threads: 0,
        }
    }
}

impl ExperimentConfig {
    /// The scale of the published figures: `n = 2000`, 200 trials.
    pub fn paper_scale(mut self) -> Self {
        self.n = 2000;
        self.trials = 200;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials < 1 {
            return Err(Error::out_of_range("trials", "need at least one trial"));
        }
        if self.n < 3 {
            return Err(Error::out_of_range("n", format!("{} < 3", self.n)));
        }
        self.gen_spec(0).validate()
    }

    fn gen_spec(&self, trial: usize) -> GenSpec {
        GenSpec {
            model: self.model,
            n: self.n,
            lambda: self.lambda,
            seed: derive_seed(self.seed, trial as u64),
        }
    }

    /// The asymptotic per-vertex bound this model converges under.
    pub fn reference(&self) -> Result<Reference> {
        match self.model {
            Model::BaTree => Ok(Reference {
                name: "ba_limit_constant",
                series: ba_limit_constant(BA_REFERENCE_TERMS)?,
                closed_upper: None,
            }),
            Model::Er => Ok(Reference {
                name: "er_f",
                series: er_f(self.lambda, ER_REFERENCE_TERMS)?,
                closed_upper: Some(er_f_closed_upper(self.lambda)?),
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Reference {
    pub name: &'static str,
    pub series: SeriesValue,
    pub closed_upper: Option<f64>,
}

/// One trial's measurements.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResultRow {
    pub trial: usize,
    pub seed: u64,
    pub n: usize,
    pub edges: usize,
    pub leaves: usize,
    pub energy: f64,
    pub energy_per_n: f64,
    pub bounds: BoundReport,
}

impl ResultRow {
    pub fn measure(trial: usize, seed: u64, g: &Graph) -> Result<Self> {
        let profile = g.degree_profile();
        let e = energy(g)?;
        Ok(ResultRow {
            trial,
            seed,
            n: g.n(),
            edges: g.edge_count(),
            leaves: profile.leaves.len(),
            energy: e,
            energy_per_n: e / g.n() as f64,
            bounds: BoundReport::with_profile(g, &profile),
        })
    }

    /// Energy must not exceed any applicable bound by more than `1e-7 n`.
    pub fn check_soundness(&self) -> Result<()> {
        match self.bounds.first_violation(self.energy, soundness_slack(self.n)) {
            None => Ok(()),
            Some((bound, value)) => Err(Error::Soundness {
                trial: self.trial,
                energy: self.energy,
                bound,
                value,
            }),
        }
    }
}

/// Absolute slack allowed in energy-versus-bound comparisons.
pub fn soundness_slack(n: usize) -> f64 {
    1e-7 * n as f64
}

fn run_trial(config: &ExperimentConfig, trial: usize) -> Result<ResultRow> {
    let spec = config.gen_spec(trial);
    let g = spec.generate()?;
    let row = ResultRow::measure(trial, spec.seed, &g)?;
    row.check_soundness()?;
    Ok(row)
}

/// Runs every trial, in parallel when the `parallel` feature is enabled.
pub fn run_experiment(config: &ExperimentConfig) -> Result<Vec<ResultRow>> {
    config.validate()?;
    par::map_indexed(config.trials, config.threads, |i| run_trial(config, i))
        .into_iter()
        .collect()
}

/// Single-threaded reference path, always available.
pub fn run_experiment_sequential(config: &ExperimentConfig) -> Result<Vec<ResultRow>> {
    config.validate()?;
    par::map_sequential(config.trials, |i| run_trial(config, i))
        .into_iter()
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Stat {
    pub mean: f64,
    pub min: f64,
    pub max: f64,
    /// Trials contributing (the bound was applicable).
    pub count: usize,
}

impl Stat {
    fn of(values: impl IntoIterator<Item = f64>) -> Option<Stat> {
        let mut count = 0;
        let (mut sum, mut min, mut max) = (0.0, f64::INFINITY, f64::NEG_INFINITY);
        for v in values {
            count += 1;
            sum += v;
            min = min.min(v);
            max = max.max(v);
        }
        (count > 0).then(|| Stat {
            mean: sum / count as f64,
            min,
            max,
            count,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub schema_version: u32,
    pub config: SummaryConfig,
    pub energy_per_n: Stat,
    pub edges_per_n: Stat,
    pub leaves_per_n: Stat,
    /// `name -> stats of bound / n`, only for bounds applicable in some trial.
    pub bounds_per_n: BTreeMap<String, Stat>,
    pub reference: Reference,
}

/// The output-affecting part of the configuration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SummaryConfig {
    pub model: Model,
    pub n: usize,
    pub trials: usize,
    pub lambda: Option<f64>,
    pub seed: u64,
}

impl Summary {
    pub fn new(config: &ExperimentConfig, rows: &[ResultRow]) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::out_of_range("trials", "no rows to summarize"));
        }
        let per_n = |f: &dyn Fn(&ResultRow) -> f64| {
            Stat::of(rows.iter().map(|r| f(r) / r.n as f64)).expect("rows is non-empty")
        };
        let names = [
            "mcclelland",
            "koolen_moulton",
            "aj",
            "ad",
            "tp",
            "tpg",
            "global",
            "global_isolated",
            "degree_hist",
        ];
        let bounds_per_n = names
            .iter()
            .filter_map(|&name| {
                let values = rows.iter().filter_map(|r| {
                    r.bounds
                        .applicable()
                        .into_iter()
                        .find(|&(b, _)| b == name)
                        .map(|(_, v)| v / r.n as f64)
                });
                Stat::of(values).map(|s| (name.to_string(), s))
            })
            .collect();
        Ok(Summary {
            schema_version: SUMMARY_SCHEMA_VERSION,
            config: SummaryConfig {
                model: config.model,
                n: config.n,
                trials: config.trials,
                lambda: (config.model == Model::Er).then_some(config.lambda),
                seed: config.seed,
            },
            energy_per_n: per_n(&|r| r.energy),
            edges_per_n: per_n(&|r| r.edges as f64),
            leaves_per_n: per_n(&|r| r.leaves as f64),
            bounds_per_n,
            reference: config.reference()?,
        })
    }

    pub fn bound(&self, name: &str) -> Option<&Stat> {
        self.bounds_per_n.get(name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(model: Model) -> ExperimentConfig {
        ExperimentConfig {
            model,
            n: 60,
            trials: 6,
            lambda: 1.5,
            seed: 3,
            threads: 2,
        }
    }

    #[test]
    fn validation() {
        let mut c = small(Model::BaTree);
        c.trials = 0;
        assert!(run_experiment(&c).unwrap_err().is_validation());
        let mut c = small(Model::BaTree);
        c.n = 2;
        assert!(c.validate().is_err());
        let mut c = small(Model::Er);
        c.lambda = 0.0;
        assert!(c.validate().is_err());
    }

    #[test]
    fn rows_in_trial_order_and_sound() {
        for model in [Model::BaTree, Model::Er] {
            let c = small(model);
            let rows = run_experiment(&c).unwrap();
            assert_eq!(rows.iter().map(|r| r.trial).collect::<Vec<_>>(), (0..6).collect::<Vec<_>>());
            assert_eq!(rows, run_experiment_sequential(&c).unwrap());
            for r in &rows {
                assert_eq!(r.seed, derive_seed(c.seed, r.trial as u64));
                r.check_soundness().unwrap();
            }
        }
    }

    #[test]
    fn soundness_tripwire() {
        let c = small(Model::BaTree);
        let mut row = run_experiment(&c).unwrap().remove(0);
        row.energy = row.bounds.tpg + 1.0;
        assert!(matches!(row.check_soundness(), Err(Error::Soundness { .. })));
    }

    #[test]
    fn summary_contents() {
        let c = small(Model::BaTree);
        let rows = run_experiment(&c).unwrap();
        let s = Summary::new(&c, &rows).unwrap();
        assert_eq!(s.schema_version, SUMMARY_SCHEMA_VERSION);
        assert!((s.edges_per_n.mean - 59.0 / 60.0).abs() < 1e-12);
        assert!(s.bound("ad").is_some());
        assert!(s.energy_per_n.max <= s.bound("tpg").unwrap().max);
        assert_eq!(s.reference.name, "ba_limit_constant");
        assert!(Summary::new(&c, &[]).is_err());
    }

    #[test]
    fn paper_scale_preset() {
        let c = ExperimentConfig::default().paper_scale();
        assert_eq!((c.n, c.trials), (2000, 200));
    }
}
