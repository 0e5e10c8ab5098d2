pub mod compare;
pub mod metrics;
pub mod optimize;
pub mod sweep;
pub mod timing;

use std::path::{Path, PathBuf};

use probdom::compare::{Operator, OperatorConfig};

use crate::args::{CommonArgs, OperatorArgs};
use crate::config::{pick, ConfigFile};
use crate::error::{CliError, CliResult};

const OPERATOR_KEYS: [&str; 6] = ["gamma", "omega", "quantile_steps", "pairwise_samples", "mean_threshold", "spread_threshold"];
const COMMON_KEYS: [&str; 2] = ["seed", "out_dir"];

pub(crate) fn load_config(common: &CommonArgs) -> CliResult<ConfigFile> {
    match &common.config {
        Some(path) => ConfigFile::load(path),
        None => Ok(ConfigFile::default()),
    }
}

/// Allowed keys of a section: the command's own plus the shared ones.
pub(crate) fn keys<'a>(own: &[&'a str], with_operator: bool) -> Vec<&'a str> {
    let mut all: Vec<&str> = own.to_vec();
    all.extend(COMMON_KEYS);
    if with_operator {
        all.extend(OPERATOR_KEYS);
    }
    all
}

pub(crate) fn operator_config(args: &OperatorArgs, cfg: &ConfigFile, section: &str) -> CliResult<OperatorConfig> {
    let d = OperatorConfig::default();
    let c = OperatorConfig {
        gamma: pick(args.gamma, cfg, section, "gamma")?.unwrap_or(d.gamma),
        omega: pick(args.omega, cfg, section, "omega")?.unwrap_or(d.omega),
        quantile_steps: pick(args.quantile_steps, cfg, section, "quantile_steps")?.unwrap_or(d.quantile_steps),
        pairwise_samples: pick(args.pairwise_samples, cfg, section, "pairwise_samples")?.unwrap_or(d.pairwise_samples),
        mean_threshold: pick(args.mean_threshold, cfg, section, "mean_threshold")?.unwrap_or(d.mean_threshold),
        spread_threshold: pick(args.spread_threshold, cfg, section, "spread_threshold")?.unwrap_or(d.spread_threshold),
    };
    c.validate()?;
    Ok(c)
}

pub(crate) fn parse_operator(id: &str) -> CliResult<Operator> {
    id.parse().map_err(|e: probdom::Error| CliError::input(e.to_string()))
}

pub(crate) fn seed(common: &CommonArgs, cfg: &ConfigFile, section: &str) -> CliResult<u64> {
    Ok(pick(common.seed, cfg, section, "seed")?.unwrap_or(0))
}

pub(crate) fn out_dir(common: &CommonArgs, cfg: &ConfigFile, section: &str) -> CliResult<Option<PathBuf>> {
    pick(common.out_dir.clone(), cfg, section, "out_dir")
}

pub(crate) fn write_file(dir: &Path, name: &str, contents: &str) -> CliResult<PathBuf> {
    std::fs::create_dir_all(dir).map_err(CliError::io(format!("creating {}", dir.display())))?;
    let path = dir.join(name);
    std::fs::write(&path, contents).map_err(CliError::io(format!("writing {}", path.display())))?;
    Ok(path)
}

pub(crate) fn read_file(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(CliError::io(format!("reading {}", path.display())))
}
