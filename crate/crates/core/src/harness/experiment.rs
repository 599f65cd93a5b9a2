use std::path::Path;

use rayon::prelude::*;

use super::io::{dump_population, write_results, RunRecord};
use super::tables::ComparisonTables;
use super::{ExperimentConfig, MEDIAN_DIR, POPULATIONS_DIR, RESULTS_FILE, TABLES_FILE};
use crate::algorithms::run_algorithm;
use crate::base::individual_rows;
use crate::dominance::sort_objectives;
use crate::indicators::{igd_plus, igdx};
use crate::{AlgorithmConfig, AlgorithmKind, Error, Population, ProblemKind, ProblemSpec, Result};

/// One finished run with its indicator values.
#[derive(Debug, Clone)]
pub struct RunResult {
    pub problem: ProblemKind,
    pub algorithm: AlgorithmKind,
    pub run_index: usize,
    pub seed: u64,
    pub igdx: f64,
    pub igd_plus: f64,
    pub evaluations_used: usize,
    /// Final population; the archive for the SPEA2 variants.
    pub final_population: Population<f64>,
}

struct ProblemSetup {
    problem: ProblemSpec<f64>,
    pareto_set: Vec<Vec<f64>>,
    pareto_front: Vec<Vec<f64>>,
}

impl ProblemSetup {
    fn new(kind: ProblemKind, reference_size: usize) -> Result<Self> {
        let problem = ProblemSpec::new(kind);
        let (pareto_set, pareto_front) = problem.sample_reference_sets(reference_size)?;
        Ok(Self { problem, pareto_set, pareto_front })
    }
}

/// `(igdx, igd_plus)` of the non-dominated members of `population`.
pub fn evaluate_outcome(
    population: &Population<f64>,
    pareto_set: &[Vec<f64>],
    pareto_front: &[Vec<f64>],
) -> Result<(f64, f64)> {
    let rows = individual_rows(population.members())?;
    if rows.is_empty() {
        return Err(Error::State("empty final population".into()));
    }
    let front = sort_objectives(&rows)?.into_fronts().swap_remove(0);
    let objectives: Vec<&[f64]> = front.iter().map(|&i| rows[i]).collect();
    let decisions: Vec<&[f64]> = front.iter().map(|&i| population.members()[i].decision()).collect();
    Ok((igdx(&decisions, pareto_set)?, igd_plus(&objectives, pareto_front)?))
}

fn run_with_setup(
    setup: &ProblemSetup,
    algorithm: AlgorithmKind,
    run_index: usize,
    cfg: &ExperimentConfig,
) -> Result<RunResult> {
    let seed = cfg.seed_for(run_index);
    let alg_cfg = AlgorithmConfig::new(algorithm, cfg.population_size, cfg.max_evaluations);
    let outcome = run_algorithm(&setup.problem, &alg_cfg, seed)?;
    let (x, f) = evaluate_outcome(&outcome.population, &setup.pareto_set, &setup.pareto_front)?;
    Ok(RunResult {
        problem: setup.problem.kind(),
        algorithm,
        run_index,
        seed,
        igdx: x,
        igd_plus: f,
        evaluations_used: outcome.evaluations,
        final_population: outcome.population,
    })
}

/// One run of `algorithm` on `problem` with the config's settings and the
/// seed of `run_index`.
pub fn run_single(
    problem: ProblemKind,
    algorithm: AlgorithmKind,
    run_index: usize,
    cfg: &ExperimentConfig,
) -> Result<RunResult> {
    let setup = ProblemSetup::new(problem, cfg.reference_set_size)?;
    run_with_setup(&setup, algorithm, run_index, cfg)
}

/// Executes the full run matrix in memory; results are ordered by
/// (problem, algorithm, run) in config order whatever the scheduling.
pub fn execute_runs(cfg: &ExperimentConfig) -> Result<Vec<RunResult>> {
    cfg.validate()?;
    let problems = cfg.problem_kinds()?;
    let algorithms = cfg.algorithm_kinds()?;
    let setups = problems.iter().map(|&p| ProblemSetup::new(p, cfg.reference_set_size)).collect::<Result<Vec<_>>>()?;
    let tasks: Vec<(usize, usize, usize)> = (0..setups.len())
        .flat_map(|p| (0..algorithms.len()).flat_map(move |a| (0..cfg.runs).map(move |r| (p, a, r))))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.parallelism.threads())
        .build()
        .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
    let mut results: Vec<((usize, usize, usize), RunResult)> = pool.install(|| {
        tasks
            .par_iter()
            .map(|&(p, a, r)| run_with_setup(&setups[p], algorithms[a], r, cfg).map(|res| ((p, a, r), res)))
            .collect::<Result<Vec<_>>>()
    })?;
    results.sort_by_key(|(key, _)| *key);
    Ok(results.into_iter().map(|(_, r)| r).collect())
}

/// Position in `runs` of the run with the median IGD+ (lower median, ties
/// broken by run index).
pub fn median_run(runs: &[&RunResult]) -> Option<usize> {
    if runs.is_empty() {
        return None;
    }
    let mut order: Vec<usize> = (0..runs.len()).collect();
    order.sort_by(|&a, &b| {
        runs[a].igd_plus.total_cmp(&runs[b].igd_plus).then(runs[a].run_index.cmp(&runs[b].run_index))
    });
    Some(order[(order.len() - 1) / 2])
}

fn write_outputs(cfg: &ExperimentConfig, results: &[RunResult], tables: &ComparisonTables) -> Result<()> {
    let out = &cfg.output_directory;
    std::fs::create_dir_all(out)?;
    let records: Vec<RunRecord> = results.iter().map(RunRecord::from).collect();
    write_results(&out.join(RESULTS_FILE), &records)?;
    for r in results {
        let dir = out.join(POPULATIONS_DIR).join(r.problem.id()).join(r.algorithm.id());
        std::fs::create_dir_all(&dir)?;
        dump_population(r, &dir.join(format!("run_{:03}.csv", r.run_index)))?;
    }
    let median_dir = out.join(MEDIAN_DIR);
    std::fs::create_dir_all(&median_dir)?;
    for chunk in results.chunk_by(|a, b| a.problem == b.problem && a.algorithm == b.algorithm) {
        let refs: Vec<&RunResult> = chunk.iter().collect();
        if let Some(m) = median_run(&refs) {
            let r = refs[m];
            dump_population(r, &median_dir.join(format!("{}_{}.csv", r.problem.id(), r.algorithm.id())))?;
        }
    }
    write_text(&out.join(TABLES_FILE), &tables.render())
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text)?;
    Ok(())
}

/// Runs the matrix, writes the results CSV, population dumps, median-run
/// dumps and rendered tables, and returns the tables.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ComparisonTables> {
    let results = execute_runs(cfg)?;
    let records: Vec<RunRecord> = results.iter().map(RunRecord::from).collect();
    let tables = ComparisonTables::from_records(&records, &cfg.problem_kinds()?, &cfg.algorithm_kinds()?)?;
    write_outputs(cfg, &results, &tables)?;
    Ok(tables)
}
