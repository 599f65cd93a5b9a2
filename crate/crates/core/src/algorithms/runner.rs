use crate::algorithms::mating::{binary_tournament, TournamentKey};
use crate::algorithms::variation::{mutate_in_place, sbx};
use crate::algorithms::{nsga2_environmental_selection, spea2_environmental_selection};
use crate::base::{Individual, Population, RandomStream};
use crate::{AlgorithmConfig, ProblemSpec, Result, Scalar};

/// Final state of one run. For the SPEA2 variants the population is the archive.
#[derive(Debug, Clone)]
pub struct RunOutcome<T> {
    pub population: Population<T>,
    pub evaluations: usize,
    pub generations: usize,
    pub seed: u64,
}

struct Evaluator<'a, T: Scalar> {
    problem: &'a ProblemSpec<T>,
    count: usize,
}

impl<T: Scalar> Evaluator<'_, T> {
    fn evaluate(&mut self, individual: &mut Individual<T>) -> Result<()> {
        let f = self.problem.evaluate(individual.decision())?;
        self.count += 1;
        individual.set_objectives(f);
        Ok(())
    }
}

/// `size` decision vectors drawn uniformly in the problem's box.
pub fn initial_population<T: Scalar>(
    problem: &ProblemSpec<T>,
    size: usize,
    rng: &mut RandomStream,
) -> Vec<Individual<T>> {
    (0..size)
        .map(|_| {
            let x = problem
                .lower()
                .iter()
                .zip(problem.upper())
                .map(|(&lo, &hi)| T::lit(rng.uniform_in(lo.as_f64(), hi.as_f64())).max(lo).min(hi))
                .collect();
            Individual::new(x)
        })
        .collect()
}

fn select<T: Scalar>(cfg: &AlgorithmConfig<T>, merged: Population<T>) -> Result<Population<T>> {
    if cfg.kind.is_spea2() {
        spea2_environmental_selection(merged, cfg.population_size, cfg.niche())
    } else {
        nsga2_environmental_selection(merged, cfg.population_size, cfg.niche())
    }
}

/// Runs one seeded optimization until the evaluation budget is used up.
pub fn run_algorithm<T: Scalar>(
    problem: &ProblemSpec<T>,
    cfg: &AlgorithmConfig<T>,
    seed: u64,
) -> Result<RunOutcome<T>> {
    run_algorithm_observed(problem, cfg, seed, |_, _| {})
}

/// Like [`run_algorithm`], calling `observer(generation, population)` after the
/// initial selection (generation 0) and after every generation.
///
/// A generation always produces a full set of offspring, so the final count
/// may overshoot the budget by less than one population.
pub fn run_algorithm_observed<T: Scalar, F>(
    problem: &ProblemSpec<T>,
    cfg: &AlgorithmConfig<T>,
    seed: u64,
    mut observer: F,
) -> Result<RunOutcome<T>>
where
    F: FnMut(usize, &Population<T>),
{
    cfg.validate()?;
    let n = cfg.population_size;
    let mut rng = RandomStream::new(seed);
    let mut evaluator = Evaluator { problem, count: 0 };

    let mut members = initial_population(problem, n, &mut rng);
    for m in members.iter_mut() {
        evaluator.evaluate(m)?;
    }
    let mut population = select(cfg, Population::new(members, n))?;
    let mut generation = 0;
    observer(generation, &population);

    let key = if cfg.kind.is_spea2() { TournamentKey::Fitness } else { TournamentKey::RankThenDiversity };
    let (lower, upper) = (problem.lower(), problem.upper());
    while evaluator.count < cfg.max_evaluations {
        let parents = population.members();
        let mut offspring = Vec::with_capacity(n);
        while offspring.len() < n {
            let a = binary_tournament(parents, &mut rng, key)?;
            let b = binary_tournament(parents, &mut rng, key)?;
            let (mut c1, mut c2) =
                sbx(parents[a].decision(), parents[b].decision(), &cfg.variation, lower, upper, &mut rng);
            mutate_in_place(&mut c1, &cfg.variation, lower, upper, &mut rng);
            mutate_in_place(&mut c2, &cfg.variation, lower, upper, &mut rng);
            offspring.push(Individual::new(c1));
            if offspring.len() < n {
                offspring.push(Individual::new(c2));
            }
        }
        for child in offspring.iter_mut() {
            evaluator.evaluate(child)?;
        }
        let mut merged = population.into_members();
        merged.extend(offspring);
        population = select(cfg, Population::new(merged, n))?;
        generation += 1;
        observer(generation, &population);
    }

    Ok(RunOutcome { population, evaluations: evaluator.count, generations: generation, seed })
}
