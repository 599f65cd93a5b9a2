//! Experiment harness: configuration, the parallel run matrix, result
//! persistence and the comparison tables.

mod config;
mod experiment;
mod io;
mod tables;

pub use config::{ConfigOverrides, ExperimentConfig, Parallelism};
pub use experiment::{evaluate_outcome, execute_runs, median_run, run_experiment, run_single, RunResult};
pub use io::{dump_members, dump_population, read_results, write_results, RunRecord};
pub use tables::{format_value, render_tables, CellSummary, ComparisonTable, ComparisonTables, Tally};

/// File names inside the output directory.
pub const RESULTS_FILE: &str = "results.csv";
pub const TABLES_FILE: &str = "tables.md";
pub const POPULATIONS_DIR: &str = "populations";
pub const MEDIAN_DIR: &str = "median";
