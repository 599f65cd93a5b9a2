//! Niching diversity estimation for multi-modal multi-objective optimization.
//!
//! The crate provides NSGA-II and SPEA2 together with niching variants whose
//! diversity estimators are restricted to each solution's nearest neighbours
//! in decision space, the ten SYM-PART / Omni-test / MMF benchmark problems,
//! the IGDX and IGD+ indicators, a rank-sum comparison, and an experiment
//! harness that reproduces the full comparison matrix.
//!
//! All numeric code is generic over [`Scalar`] (`f32` or `f64`); the `*64`
//! aliases below fix the scalar to `f64`, which is what the harness uses.

pub mod algorithms;
pub mod base;
pub mod diversity;
pub mod dominance;
mod error;
pub mod harness;
pub mod indicators;
pub mod problems;
mod scalar;
pub mod stats;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub use algorithms::{AlgorithmConfig, AlgorithmKind, NicheSize, RunOutcome, VariationConfig};
pub use base::{Individual, Population, RandomStream};
pub use diversity::{DiversityEstimator, NicheConfig, Orientation};
pub use dominance::FrontPartition;
pub use problems::{ProblemKind, ProblemSpec};
pub use stats::{ComparisonVerdict, Verdict};

pub type Individual64 = Individual<f64>;
pub type Individual32 = Individual<f32>;
pub type Population64 = Population<f64>;
pub type Population32 = Population<f32>;
pub type ProblemSpec64 = ProblemSpec<f64>;
pub type ProblemSpec32 = ProblemSpec<f32>;
pub type AlgorithmConfig64 = AlgorithmConfig<f64>;
pub type VariationConfig64 = VariationConfig<f64>;
pub type RunOutcome64 = RunOutcome<f64>;
