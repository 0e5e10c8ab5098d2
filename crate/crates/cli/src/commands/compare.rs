use std::path::Path;

use probdom::compare::{Comparator, ComparisonReport, Operator, Sense};
use probdom::uncertain::{DistributionSpec, SamplePopulation, UncertainValue};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{keys, load_config, operator_config, parse_operator, read_file, seed};
use crate::args::CompareArgs;
use crate::config::pick;
use crate::error::{CliError, CliResult};

const SECTION: &str = "compare";

pub fn parse_sense(s: &str) -> CliResult<Sense> {
    match s.trim().to_ascii_lowercase().as_str() {
        "min" | "minimize" => Ok(Sense::Minimize),
        "max" | "maximize" => Ok(Sense::Maximize),
        other => Err(CliError::input(format!("sense must be `min` or `max`, got `{other}`"))),
    }
}

/// A distribution spec, or else a sample file kept in file order.
pub fn load_value(arg: &str) -> CliResult<UncertainValue> {
    let path = Path::new(arg);
    if path.is_file() {
        let draws = SamplePopulation::parse_draws(&read_file(path)?).map_err(|e| CliError::input(format!("{arg}: {e}")))?;
        return Ok(UncertainValue::from_draws(draws)?);
    }
    match arg.parse::<DistributionSpec>() {
        Ok(spec) => Ok(UncertainValue::closed_form(spec)),
        Err(e) if arg.contains('(') => Err(CliError::input(e.to_string())),
        Err(_) => Err(CliError::input(format!("`{arg}` is neither a distribution spec nor a readable sample file"))),
    }
}

/// The CSV printed by `compare`: header plus one row.
pub fn run(args: &CompareArgs) -> CliResult<String> {
    let cfg = load_config(&args.common)?;
    cfg.check_keys(SECTION, &keys(&["op", "sense"], true))?;
    let op: Operator = parse_operator(&pick(args.op.clone(), &cfg, SECTION, "op")?.unwrap_or_else(|| "emp".into()))?;
    let sense = match pick(args.sense.clone(), &cfg, SECTION, "sense")? {
        Some(s) => parse_sense(&s)?,
        None => Sense::Minimize,
    };
    let op_cfg = operator_config(&args.operator, &cfg, SECTION)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed(&args.common, &cfg, SECTION)?);

    let a = load_value(&args.a)?;
    let b = load_value(&args.b)?;
    let report = Comparator::new(op, op_cfg)?.compare_with_rng(&a, &b, sense, &mut rng)?;
    Ok(format!("{}\n{}\n", ComparisonReport::CSV_HEADER, report.csv_row(op)))
}
