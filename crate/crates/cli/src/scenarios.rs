//! Named pairs of distributions with ground-truth dominance probabilities.

use std::path::Path;

use probdom::compare::oracle_dominance;
use probdom::uncertain::DistributionSpec;
use rayon::prelude::*;

use crate::config::ConfigFile;
use crate::error::{CliError, CliResult};

/// The scenario set shipped with the harness.
pub const CANONICAL: &str = include_str!("../scenarios/canonical.conf");

#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub name: String,
    pub x1: DistributionSpec,
    pub x2: DistributionSpec,
    /// `P(x1 > x2)` from the integration oracle.
    pub oracle: f64,
    pub resolution: usize,
    pub provenance: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioSet {
    pub scenarios: Vec<Scenario>,
}

struct Entry {
    name: String,
    x1: DistributionSpec,
    x2: DistributionSpec,
    stored: Option<f64>,
    provenance: String,
}

fn entries(cfg: &ConfigFile) -> CliResult<Vec<Entry>> {
    let mut out = Vec::new();
    for name in cfg.section_names() {
        cfg.check_keys(name, &["x1", "x2", "oracle", "provenance"])?;
        let section = cfg.section(name).expect("listed section");
        let spec = |key: &str| -> CliResult<DistributionSpec> {
            let text = section.get(key).ok_or_else(|| CliError::input(format!("scenario `{name}` lacks `{key}`")))?;
            text.parse().map_err(|e| CliError::input(format!("scenario `{name}`: {e}")))
        };
        let stored = section
            .get("oracle")
            .map(|v| v.parse::<f64>().map_err(|_| CliError::input(format!("scenario `{name}`: bad oracle `{v}`"))))
            .transpose()?;
        out.push(Entry {
            name: name.clone(),
            x1: spec("x1")?,
            x2: spec("x2")?,
            stored,
            provenance: section.get("provenance").cloned().unwrap_or_else(|| "derived-oracle".into()),
        });
    }
    if out.is_empty() {
        return Err(CliError::input("scenario file defines no scenarios"));
    }
    Ok(out)
}

impl ScenarioSet {
    /// Parses a scenario file and computes every oracle probability.
    pub fn parse(text: &str, resolution: usize) -> CliResult<Self> {
        if resolution < 1_000 {
            return Err(CliError::input("oracle resolution must be at least 1000"));
        }
        let entries = entries(&ConfigFile::parse(text)?)?;
        let scenarios = entries
            .into_par_iter()
            .map(|e| {
                let p = oracle_dominance(&e.x1, &e.x2, resolution);
                if !(0.0..=1.0).contains(&p) {
                    return Err(CliError::input(format!("oracle failed for scenario `{}`: {p}", e.name)));
                }
                if let Some(s) = e.stored {
                    let tol = 1e-6 + 10.0 / resolution as f64;
                    if (s - p).abs() > tol {
                        return Err(CliError::input(format!("scenario `{}` stores oracle {s}, computed {p}", e.name)));
                    }
                }
                Ok(Scenario { name: e.name, x1: e.x1, x2: e.x2, oracle: p, resolution, provenance: e.provenance })
            })
            .collect::<CliResult<Vec<_>>>()?;
        Ok(ScenarioSet { scenarios })
    }

    pub fn load(path: &Path, resolution: usize) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(CliError::io(format!("reading {}", path.display())))?;
        Self::parse(&text, resolution)
    }

    pub fn canonical(resolution: usize) -> CliResult<Self> {
        Self::parse(CANONICAL, resolution)
    }

    pub fn get(&self, name: &str) -> Option<&Scenario> {
        self.scenarios.iter().find(|s| s.name == name)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("scenario,x1,x2,oracle,resolution,provenance\n");
        for s in &self.scenarios {
            out.push_str(&format!("{},{},{},{},{},{}\n", s.name, s.x1, s.x2, s.oracle, s.resolution, s.provenance));
        }
        out
    }
}
