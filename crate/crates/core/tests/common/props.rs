//! Randomized property checks shared by the property tests and the
//! acceptance suite.

#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use rand::Rng;

use nichemo::algorithms::{nsga2_environmental_selection, spea2_environmental_selection, truncate_archive};
use nichemo::base::euclidean_distance;
use nichemo::diversity::{niched_diversity_rows, KnnIndex};
use nichemo::dominance::sort_objectives;
use nichemo::harness::{execute_runs, write_results, ExperimentConfig, Parallelism, RunRecord};
use nichemo::indicators::{igd_plus, igdx};
use nichemo::stats::wilcoxon_rank_sum;
use nichemo::{
    AlgorithmConfig, AlgorithmKind, DiversityEstimator, Individual, NicheConfig, NicheSize, Population, ProblemKind,
    ProblemSpec, Verdict,
};

fn views(rows: &[Vec<f64>]) -> Vec<&[f64]> {
    rows.iter().map(Vec::as_slice).collect()
}

fn estimator(pick: bool) -> DiversityEstimator {
    if pick {
        DiversityEstimator::CrowdingDistance
    } else {
        DiversityEstimator::Spea2Density
    }
}

fn members(decisions: &[Vec<f64>], objectives: &[Vec<f64>]) -> Vec<Individual<f64>> {
    decisions.iter().zip(objectives).map(|(x, f)| Individual::evaluated(x.clone(), f.clone())).collect()
}

/// Classic SPEA2 truncation: repeatedly drop the member whose sorted
/// distances to the other remaining members are lexicographically smallest.
fn truncation_oracle(rows: &[Vec<f64>], target: usize) -> Vec<usize> {
    let mut alive: Vec<usize> = (0..rows.len()).collect();
    while alive.len() > target {
        let key = |i: usize| -> Vec<f64> {
            let mut d: Vec<f64> =
                alive.iter().filter(|&&j| j != i).map(|&j| euclidean_distance(&rows[i], &rows[j]).unwrap()).collect();
            d.sort_by(f64::total_cmp);
            d
        };
        let mut victim = alive[0];
        let mut best = key(victim);
        for &i in &alive[1..] {
            let k = key(i);
            if k < best {
                victim = i;
                best = k;
            }
        }
        alive.retain(|&i| i != victim);
    }
    alive
}

pub fn estimator_locality(seed: u64, n: usize, crowd: bool) -> Result<(), TestCaseError> {
    let mut rng = super::rng(seed);
    let d = rng.gen_range(1..4);
    let xs = super::random_rows(&mut rng, n, d, false);
    let mut fs = super::random_rows(&mut rng, n, 2, false);
    let k = rng.gen_range(1..n - 1);
    let i = rng.gen_range(0..n);
    let before = niched_diversity_rows(&views(&xs), &views(&fs), estimator(crowd), NicheConfig::new(k)).unwrap();
    let index = KnnIndex::build(&views(&xs));
    let niche = index.nearest(i, k).to_vec();
    let outside: Vec<usize> = (0..n).filter(|j| *j != i && !niche.contains(j)).collect();
    let j = outside[rng.gen_range(0..outside.len())];
    fs[j] = vec![rng.gen::<f64>() * 10.0, rng.gen::<f64>() * 10.0];
    let after = niched_diversity_rows(&views(&xs), &views(&fs), estimator(crowd), NicheConfig::new(k)).unwrap();
    prop_assert_eq!(before[i].to_bits(), after[i].to_bits());
    Ok(())
}

pub fn whole_set_niche_reduces_to_base_estimator(seed: u64, n: usize, crowd: bool) -> Result<(), TestCaseError> {
    let mut rng = super::rng(seed);
    let xs = super::random_rows(&mut rng, n, 2, false);
    let m = rng.gen_range(2..4);
    let fs = super::random_rows(&mut rng, n, m, seed % 2 == 0);
    let niched = niched_diversity_rows(&views(&xs), &views(&fs), estimator(crowd), NicheConfig::whole_set(n)).unwrap();
    let base = estimator(crowd).estimate_rows(&views(&fs)).unwrap();
    let same = niched.iter().zip(&base).all(|(a, b)| a.to_bits() == b.to_bits());
    prop_assert!(same);
    Ok(())
}

pub fn whole_set_niche_reduces_at_selection(seed: u64, half: usize, spea: bool) -> Result<(), TestCaseError> {
    let mut rng = super::rng(seed);
    let n = 2 * half;
    let xs = super::random_rows(&mut rng, n, 2, false);
    let fs = super::random_rows(&mut rng, n, 2, seed % 3 == 0);
    let pop = || Population::new(members(&xs, &fs), half);
    let select = |niche| {
        if spea {
            spea2_environmental_selection(pop(), half, niche).unwrap()
        } else {
            nsga2_environmental_selection(pop(), half, niche).unwrap()
        }
    };
    let base: Vec<Vec<f64>> = select(None).iter().map(|m| m.decision().to_vec()).collect();
    let whole: Vec<Vec<f64>> = select(Some(NicheSize::WholeSet)).iter().map(|m| m.decision().to_vec()).collect();
    prop_assert_eq!(base, whole);
    Ok(())
}

pub fn density_lies_in_half_open_unit_half(seed: u64, n: usize, k_frac: f64) -> Result<(), TestCaseError> {
    let mut rng = super::rng(seed);
    let xs = super::random_rows(&mut rng, n, 2, false);
    let fs = super::random_rows(&mut rng, n, 2, seed % 2 == 0);
    let k = 1 + ((n - 1) as f64 * k_frac) as usize;
    let k = k.min(n - 1);
    let dens =
        niched_diversity_rows(&views(&xs), &views(&fs), DiversityEstimator::Spea2Density, NicheConfig::new(k)).unwrap();
    for v in dens {
        prop_assert!(v > 0.0 && v <= 0.5, "density {}", v);
    }
    Ok(())
}

pub fn metric_axioms(seed: u64, d: usize) -> Result<(), TestCaseError> {
    let mut rng = super::rng(seed);
    let p = super::random_rows(&mut rng, 3, d, seed % 2 == 0);
    let dist = |a: &[f64], b: &[f64]| euclidean_distance(a, b).unwrap();
    prop_assert_eq!(dist(&p[0], &p[0]), 0.0);
    prop_assert!(dist(&p[0], &p[1]) >= 0.0);
    prop_assert_eq!(dist(&p[0], &p[1]), dist(&p[1], &p[0]));
    prop_assert!(dist(&p[0], &p[2]) <= dist(&p[0], &p[1]) + dist(&p[1], &p[2]) + 1e-12);
    Ok(())
}

pub fn indicators_never_grow_when_points_are_added(seed: u64, n: usize, r: usize) -> Result<(), TestCaseError> {
    let mut rng = super::rng(seed);
    let sols = super::random_rows(&mut rng, n + 1, 2, false);
    let reference = super::random_rows(&mut rng, r, 2, false);
    let (fewer, more) = (&sols[..n], &sols[..]);
    let a: f64 = igd_plus(fewer, &reference).unwrap();
    let b: f64 = igd_plus(more, &reference).unwrap();
    prop_assert!(b <= a && b >= 0.0);
    let a: f64 = igdx(fewer, &reference).unwrap();
    let b: f64 = igdx(more, &reference).unwrap();
    prop_assert!(b <= a && b >= 0.0);
    // solutions containing the reference set score zero
    let all: Vec<Vec<f64>> = reference.iter().chain(fewer).cloned().collect();
    prop_assert_eq!(igd_plus(&all, &reference).unwrap(), 0.0);
    prop_assert_eq!(igdx(&all, &reference).unwrap(), 0.0);
    Ok(())
}

pub fn igd_plus_rewards_dominating_sets(seed: u64, n: usize, shift: f64) -> Result<(), TestCaseError> {
    let mut rng = super::rng(seed);
    let sols = super::random_rows(&mut rng, n, 2, false);
    let better: Vec<Vec<f64>> = sols.iter().map(|s| s.iter().map(|v| v - shift).collect()).collect();
    let reference = super::random_rows(&mut rng, 30, 2, false);
    prop_assert!(igd_plus(&better, &reference).unwrap() <= igd_plus(&sols, &reference).unwrap());
    Ok(())
}

pub fn rank_sum_symmetry_and_invariance(seed: u64, n1: usize, n2: usize, shift: f64) -> Result<(), TestCaseError> {
    let mut rng = super::rng(seed);
    let coarse = seed % 2 == 0;
    let draw = |rng: &mut rand_chacha::ChaCha8Rng, n: usize, s: f64| -> Vec<f64> {
        (0..n).map(|_| if coarse { rng.gen_range(0..4) as f64 + s } else { rng.gen::<f64>() + s }).collect()
    };
    let a = draw(&mut rng, n1, shift);
    let b = draw(&mut rng, n2, 0.0);
    let ab = wilcoxon_rank_sum(&a, &b).unwrap();
    let ba = wilcoxon_rank_sum(&b, &a).unwrap();
    prop_assert!((0.0..=1.0).contains(&ab.p_value));
    prop_assert!((ab.p_value - ba.p_value).abs() <= 1e-12);
    prop_assert_eq!(ab.symbol, ba.symbol.mirrored());
    prop_assert_eq!(ab.symbol == Verdict::Approx, ab.p_value >= 0.05);
    let scaled_a: Vec<f64> = a.iter().map(|v| v * 3.5).collect();
    let scaled_b: Vec<f64> = b.iter().map(|v| v * 3.5).collect();
    prop_assert_eq!(wilcoxon_rank_sum(&scaled_a, &scaled_b).unwrap().symbol, ab.symbol);
    let far: Vec<f64> = a.iter().map(|v| v - 100.0).collect();
    prop_assert_eq!(wilcoxon_rank_sum(&far, &b).unwrap().symbol, Verdict::Plus);
    Ok(())
}

pub fn sorting_partitions_into_valid_fronts(seed: u64, n: usize, m: usize) -> Result<(), TestCaseError> {
    let mut rng = super::rng(seed);
    let rows = super::random_rows(&mut rng, n, m, seed % 2 == 0);
    let fronts = sort_objectives(&views(&rows)).unwrap().into_fronts();
    let mut seen: Vec<usize> = fronts.concat();
    seen.sort_unstable();
    prop_assert_eq!(seen, (0..n).collect::<Vec<_>>());
    for (k, front) in fronts.iter().enumerate() {
        for &i in front {
            prop_assert!(!front.iter().any(|&j| super::dominates(&rows[j], &rows[i])));
            if k > 0 {
                prop_assert!(fronts[k - 1].iter().any(|&j| super::dominates(&rows[j], &rows[i])));
            }
        }
    }
    Ok(())
}

pub fn truncation_matches_oracle(seed: u64, n: usize) -> Result<(), TestCaseError> {
    let mut rng = super::rng(seed);
    let rows = super::random_rows(&mut rng, n, 2, false);
    let xs = super::random_rows(&mut rng, n, 2, false);
    let target = rng.gen_range(1..n);
    let base = truncate_archive(&views(&rows), &views(&xs), target, None);
    prop_assert_eq!(&base, &truncation_oracle(&rows, target));
    let whole = truncate_archive(&views(&rows), &views(&xs), target, Some(NicheSize::WholeSet));
    prop_assert_eq!(base, whole);
    let niched = truncate_archive(&views(&rows), &views(&xs), target, Some(NicheSize::Auto));
    prop_assert_eq!(niched.len(), target);
    Ok(())
}

pub fn runs_respect_budget_and_bounds(seed: u64, kind: usize, prob: usize, pop: usize) -> Result<(), TestCaseError> {
    let problem = ProblemSpec::<f64>::new(ProblemKind::ALL[prob]);
    let evals = pop * 3 + (seed % 7) as usize;
    let cfg = AlgorithmConfig::new(AlgorithmKind::ALL[kind], pop, evals);
    let out = nichemo::algorithms::run_algorithm(&problem, &cfg, seed).unwrap();
    prop_assert!(out.evaluations >= evals && out.evaluations < evals + pop);
    prop_assert_eq!(out.population.len(), pop);
    for m in out.population.iter() {
        for ((&x, &lo), &hi) in m.decision().iter().zip(problem.lower()).zip(problem.upper()) {
            prop_assert!(x >= lo && x <= hi);
        }
    }
    Ok(())
}

pub fn results_are_independent_of_parallelism(seed: u64, prob: usize, jobs: usize) -> Result<(), TestCaseError> {
    let cfg = |threads| ExperimentConfig {
        problems: vec![ProblemKind::ALL[prob].id().into(), ProblemKind::ALL[(prob + 3) % 10].id().into()],
        algorithms: AlgorithmKind::ALL.iter().map(|a| a.id().to_string()).collect(),
        runs: 2,
        population_size: 6,
        max_evaluations: 18,
        base_seed: seed,
        reference_set_size: 60,
        parallelism: Parallelism::Threads(threads),
        ..Default::default()
    };
    let csv = |threads| -> Vec<u8> {
        let records: Vec<RunRecord> = execute_runs(&cfg(threads)).unwrap().iter().map(RunRecord::from).collect();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("r.csv");
        write_results(&path, &records).unwrap();
        std::fs::read(path).unwrap()
    };
    prop_assert_eq!(csv(1), csv(jobs));
    Ok(())
}

macro_rules! suite {
    ($($name:ident: $cases:expr, ($($arg:ident in $strat:expr),*);)*) => {
        /// Runs every property through a fresh runner; `Err` holds the failure.
        pub fn run_suite() -> Vec<(&'static str, u32, Result<(), String>)> {
            let mut results = Vec::new();
            $(
                let mut runner = TestRunner::new(Config { cases: $cases, failure_persistence: None, ..Config::default() });
                let r = runner
                    .run(&($($strat,)*), |($($arg,)*)| $name($($arg),*))
                    .map_err(|e| e.to_string());
                results.push((stringify!($name), $cases, r));
            )*
            results
        }
    };
}

suite! {
    estimator_locality: 256, (seed in any::<u64>(), n in 4usize..30, crowd in any::<bool>());
    whole_set_niche_reduces_to_base_estimator: 256, (seed in any::<u64>(), n in 2usize..40, crowd in any::<bool>());
    whole_set_niche_reduces_at_selection: 256, (seed in any::<u64>(), half in 2usize..16, spea in any::<bool>());
    density_lies_in_half_open_unit_half: 256, (seed in any::<u64>(), n in 2usize..40, k_frac in 0.0f64..1.0);
    metric_axioms: 256, (seed in any::<u64>(), d in 1usize..8);
    indicators_never_grow_when_points_are_added: 256, (seed in any::<u64>(), n in 1usize..20, r in 1usize..60);
    igd_plus_rewards_dominating_sets: 256, (seed in any::<u64>(), n in 1usize..20, shift in 0.0f64..1.0);
    rank_sum_symmetry_and_invariance: 256, (seed in any::<u64>(), n1 in 10usize..35, n2 in 10usize..35, shift in -1.0f64..1.0);
    sorting_partitions_into_valid_fronts: 256, (seed in any::<u64>(), n in 1usize..60, m in 2usize..5);
    truncation_matches_oracle: 256, (seed in any::<u64>(), n in 2usize..30);
    runs_respect_budget_and_bounds: 256, (seed in any::<u64>(), kind in 0usize..4, prob in 0usize..10, pop in 4usize..12);
    results_are_independent_of_parallelism: 200, (seed in 0u64..1_000_000, prob in 0usize..10, jobs in 2usize..5);
}
