//! NSGA-II, SPEA2 and their niching variants.

mod config;
mod mating;
mod nsga2;
mod runner;
mod spea2;
mod variation;

pub use config::{AlgorithmConfig, AlgorithmKind, NicheSize, VariationConfig};
pub use mating::{binary_tournament, TournamentKey};
pub use nsga2::nsga2_environmental_selection;
pub use runner::{initial_population, run_algorithm, run_algorithm_observed, RunOutcome};
pub use spea2::{spea2_environmental_selection, truncate_archive};
pub use variation::{polynomial_mutation, sbx_crossover};
