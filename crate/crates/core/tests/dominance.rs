use probdom::compare::{Comparator, Operator, OperatorConfig, Sense};
use probdom::dominance::{dominates, non_dominated_filter, Individual};
use probdom::uncertain::UncertainValue;
use proptest::prelude::*;

/// Crisp Pareto dominance on plain numbers under per-objective senses.
fn crisp(a: &[f64], b: &[f64], senses: &[Sense]) -> bool {
    let better = |x: f64, y: f64, s: Sense| match s {
        Sense::Maximize => x > y,
        Sense::Minimize => x < y,
    };
    let no_worse = a.iter().zip(b).zip(senses).all(|((&x, &y), &s)| !better(y, x, s));
    let some_better = a.iter().zip(b).zip(senses).any(|((&x, &y), &s)| better(x, y, s));
    no_worse && some_better
}

/// Constant objectives: three identical draws per value.
fn constant(values: &[f64]) -> Individual {
    let objectives = values.iter().map(|&v| UncertainValue::from_draws(vec![v; 3]).unwrap()).collect();
    Individual::new(vec![], objectives).unwrap()
}

fn all_comparators() -> Vec<Comparator> {
    ["pw", "uni1", "uni2", "gauss", "hist:0.01", "emp", "reduce", "mean", "threestage"]
        .iter()
        .map(|id| Comparator::new(id.parse::<Operator>().unwrap(), OperatorConfig::default()).unwrap())
        .collect()
}

/// Values on a 0.05 grid, so distinct values never share a histogram bin.
fn grid_point(m: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec((0u32..8).prop_map(|k| f64::from(k) * 0.05 + 0.001), m)
}

fn senses(m: usize) -> impl Strategy<Value = Vec<Sense>> {
    prop::collection::vec(prop_oneof![Just(Sense::Maximize), Just(Sense::Minimize)], m)
}

fn noisy_individual(m: usize) -> impl Strategy<Value = Individual> {
    prop::collection::vec(prop::collection::vec(0.0..1.0f64, 4), m).prop_map(|objs| {
        let objectives = objs.into_iter().map(|d| UncertainValue::from_draws(d).unwrap()).collect();
        Individual::new(vec![], objectives).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn zero_variance_reduces_to_crisp_dominance(
        (a, b, s) in (1usize..4).prop_flat_map(|m| (grid_point(m), grid_point(m), senses(m)))
    ) {
        let want = crisp(&a, &b, &s);
        for c in all_comparators() {
            prop_assert_eq!(dominates(&constant(&a), &constant(&b), &c, &s).unwrap(), want, "{}", c.op);
        }
    }

    #[test]
    fn irreflexive(ind in noisy_individual(3), s in senses(3)) {
        for c in all_comparators() {
            prop_assert!(!dominates(&ind, &ind, &c, &s).unwrap(), "{}", c.op);
        }
    }

    #[test]
    fn filter_equals_brute_force(pop in prop::collection::vec(noisy_individual(2), 1..12)) {
        let s = [Sense::Minimize, Sense::Minimize];
        for c in all_comparators() {
            let got = non_dominated_filter(&pop, &c, &s).unwrap();
            let want: Vec<Individual> = pop
                .iter()
                .filter(|b| !pop.iter().any(|a| dominates(a, b, &c, &s).unwrap()))
                .cloned()
                .collect();
            prop_assert_eq!(got, want);
        }
    }
}
