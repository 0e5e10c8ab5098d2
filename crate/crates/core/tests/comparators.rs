use probdom::compare::{
    compare_empirical, compare_pairwise, compare_reduced, compare_sorted, count_greater_pairs, oracle_dominance,
    prob_greater_gauss, prob_greater_uniform, Comparator, Histogram, OperatorConfig, Sense,
};
use probdom::uncertain::{DistributionSpec, SamplePopulation, UncertainValue};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn naive_pairs(a: &[f64], b: &[f64]) -> u64 {
    let mut count = 0;
    for x in a {
        for y in b {
            if x > y {
                count += 1;
            }
        }
    }
    count
}

fn sorted_list(ties: bool) -> impl Strategy<Value = Vec<f64>> {
    let values = if ties { (0u32..25).prop_map(|v| f64::from(v) / 8.0).boxed() } else { (0.0..1.0f64).boxed() };
    prop::collection::vec(values, 1..=200).prop_map(|mut v| {
        v.sort_by(f64::total_cmp);
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn merge_scan_equals_double_loop_with_ties(a in sorted_list(true), b in sorted_list(true)) {
        prop_assert_eq!(count_greater_pairs(&a, &b), naive_pairs(&a, &b));
    }

    #[test]
    fn merge_scan_equals_double_loop_without_ties(a in sorted_list(false), b in sorted_list(false)) {
        prop_assert_eq!(count_greater_pairs(&a, &b), naive_pairs(&a, &b));
    }

    #[test]
    fn complement_counts_ties(a in sorted_list(true), b in sorted_list(true)) {
        let ties = a.iter().map(|x| b.iter().filter(|y| *y == x).count() as u64).sum::<u64>();
        let nm = (a.len() * b.len()) as u64;
        prop_assert_eq!(count_greater_pairs(&a, &b) + count_greater_pairs(&b, &a), nm - ties);
        let p = compare_sorted(&a, &b) + compare_sorted(&b, &a);
        prop_assert!((p - (1.0 - ties as f64 / nm as f64)).abs() < 1e-12);
    }
}

fn random_uniform(rng: &mut impl Rng) -> DistributionSpec {
    let lo = rng.random_range(-1.0..1.0);
    DistributionSpec::uniform(lo, lo + rng.random_range(0.05..1.5)).unwrap()
}

fn random_gaussian(rng: &mut impl Rng) -> DistributionSpec {
    DistributionSpec::gaussian(rng.random_range(-1.0..1.0), rng.random_range(0.01..1.0)).unwrap()
}

#[test]
fn uniform_bounds_exact_on_uniform_inputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..20 {
        let (a, b) = (random_uniform(&mut rng), random_uniform(&mut rng));
        let p = prob_greater_uniform(a.support().unwrap(), b.support().unwrap());
        let truth = oracle_dominance(&a, &b, 1_000_000);
        assert!((p - truth).abs() <= 1e-6, "{a} vs {b}: {p} vs {truth}");
    }
}

#[test]
fn gauss_exact_on_gaussian_inputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..20 {
        let (a, b) = (random_gaussian(&mut rng), random_gaussian(&mut rng));
        let p = prob_greater_gauss(a.mean(), a.variance(), b.mean(), b.variance());
        let truth = oracle_dominance(&a, &b, 1_000_000);
        assert!((p - truth).abs() <= 1e-6, "{a} vs {b}: {p} vs {truth}");
    }
}

#[test]
fn histogram_error_within_overlap_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for omega in [0.01, 0.05, 0.1] {
        for _ in 0..15 {
            let (a, b) = (random_uniform(&mut rng), random_uniform(&mut rng));
            let ha = Histogram::build(&UncertainValue::closed_form(a), omega).unwrap();
            let hb = Histogram::build(&UncertainValue::closed_form(b), omega).unwrap();
            assert!((ha.masses().iter().sum::<f64>() - 1.0).abs() < 1e-9);
            let p = ha.prob_greater(&hb).unwrap();
            let bound = ha.error_bound(&hb).unwrap();
            let truth = oracle_dominance(&a, &b, 200_000);
            assert!((p - truth).abs() <= bound + 1e-9, "omega={omega} {a} vs {b}: |{p} - {truth}| > {bound}");
        }
    }
}

#[test]
fn reduced_tracks_full_comparison() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    let u = DistributionSpec::uniform(0.0, 1.0).unwrap();
    let v = DistributionSpec::uniform(0.1, 1.1).unwrap();
    for _ in 0..20 {
        let a = SamplePopulation::from_unsorted(u.sample_n(10_000, &mut rng)).unwrap();
        let b = SamplePopulation::from_unsorted(v.sample_n(10_000, &mut rng)).unwrap();
        assert!((compare_reduced(&a, &b) - compare_empirical(&a, &b)).abs() <= 0.05);
    }
}

/// 99th percentile of absolute errors over `reps` repetitions.
fn p99_error(truth: f64, reps: usize, mut estimate: impl FnMut() -> f64) -> f64 {
    let mut errs: Vec<f64> = (0..reps).map(|_| (estimate() - truth).abs()).collect();
    errs.sort_by(f64::total_cmp);
    errs[((reps as f64 * 0.99).ceil() as usize).min(reps) - 1]
}

#[test]
fn sampling_operators_converge() {
    let pairs = [
        ("uniform(0.2,0.9)", "uniform(0,0.7)"),
        ("gaussian(0.55,0.04)", "gaussian(0.45,0.05)"),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    for (sa, sb) in pairs {
        let (a, b): (DistributionSpec, DistributionSpec) = (sa.parse().unwrap(), sb.parse().unwrap());
        let truth = oracle_dominance(&a, &b, 1_000_000);
        let mut curves = [vec![], vec![], vec![]];
        for n in [100, 1_000, 10_000] {
            let draw = |rng: &mut ChaCha8Rng| (a.sample_n(n, rng), b.sample_n(n, rng));
            curves[0].push(p99_error(truth, 200, || {
                let (x, y) = draw(&mut rng);
                compare_pairwise(&x, &y).unwrap()
            }));
            curves[1].push(p99_error(truth, 200, || {
                let (x, y) = draw(&mut rng);
                compare_empirical(&SamplePopulation::from_unsorted(x).unwrap(), &SamplePopulation::from_unsorted(y).unwrap())
            }));
            curves[2].push(p99_error(truth, 200, || {
                let (x, y) = draw(&mut rng);
                compare_reduced(&SamplePopulation::from_unsorted(x).unwrap(), &SamplePopulation::from_unsorted(y).unwrap())
            }));
        }
        for curve in &curves {
            let inversions = curve.windows(2).filter(|w| w[1] > w[0]).count();
            assert!(inversions <= 1, "{sa} vs {sb}: {curve:?}");
            assert!(curve[2] < curve[0], "{sa} vs {sb}: {curve:?}");
        }
    }
}

#[test]
fn comparator_end_to_end_on_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(26);
    let a = DistributionSpec::uniform(0.4, 1.0).unwrap();
    let b = DistributionSpec::uniform(0.2, 0.8).unwrap();
    let truth = oracle_dominance(&a, &b, 1_000_000);
    assert!((truth - 7.0 / 9.0).abs() < 1e-6);
    let va = UncertainValue::from_draws(a.sample_n(20_000, &mut rng)).unwrap();
    let vb = UncertainValue::from_draws(b.sample_n(20_000, &mut rng)).unwrap();
    for op in ["pw", "uni1", "uni2", "emp", "reduce", "hist:0.01"] {
        let c = Comparator::new(op.parse().unwrap(), OperatorConfig::default()).unwrap();
        let r = c.compare(&va, &vb, Sense::Maximize).unwrap();
        let p = r.p_greater.unwrap();
        assert!((p - truth).abs() < 0.03, "{op}: {p} vs {truth}");
        assert_eq!(r.decision, probdom::compare::Decision::Better, "{op}");
    }
}
