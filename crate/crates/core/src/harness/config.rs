use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Deserializer};

use crate::{AlgorithmKind, Error, ProblemKind, Result};

/// Worker thread count for the run matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Parallelism {
    #[default]
    Auto,
    Threads(usize),
}

impl Parallelism {
    /// Thread count, where `Auto` means one per available core.
    pub fn threads(self) -> usize {
        match self {
            Parallelism::Auto => std::thread::available_parallelism().map_or(1, |n| n.get()),
            Parallelism::Threads(n) => n,
        }
    }
}

impl FromStr for Parallelism {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("auto") {
            return Ok(Parallelism::Auto);
        }
        match s.parse::<usize>() {
            Ok(n) if n > 0 => Ok(Parallelism::Threads(n)),
            _ => Err(Error::Config(format!("parallelism '{s}' is not auto or a positive integer"))),
        }
    }
}

impl fmt::Display for Parallelism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parallelism::Auto => f.write_str("auto"),
            Parallelism::Threads(n) => write!(f, "{n}"),
        }
    }
}

impl<'de> Deserialize<'de> for Parallelism {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Count(i64),
            Text(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Count(n) if n > 0 => Ok(Parallelism::Threads(n as usize)),
            Raw::Count(n) => Err(serde::de::Error::custom(format!("parallelism {n} is not positive"))),
            Raw::Text(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// One experiment: every problem × algorithm × run combination.
///
/// Loaded from TOML (all keys optional, unknown keys rejected); defaults are
/// the standard protocol over the full problem and algorithm registries.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub problems: Vec<String>,
    pub algorithms: Vec<String>,
    pub runs: usize,
    pub population_size: usize,
    pub max_evaluations: usize,
    pub base_seed: u64,
    pub reference_set_size: usize,
    pub output_directory: PathBuf,
    pub parallelism: Parallelism,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            problems: ProblemKind::ALL.iter().map(|p| p.id().to_string()).collect(),
            algorithms: AlgorithmKind::ALL.iter().map(|a| a.id().to_string()).collect(),
            runs: 31,
            population_size: 100,
            max_evaluations: 50_000,
            base_seed: 1,
            reference_set_size: 10_000,
            output_directory: PathBuf::from("results"),
            parallelism: Parallelism::Auto,
        }
    }
}

/// Command-line values that replace the corresponding config entries.
#[derive(Debug, Clone, Default)]
pub struct ConfigOverrides {
    pub problems: Option<Vec<String>>,
    pub algorithms: Option<Vec<String>>,
    pub runs: Option<usize>,
    pub population_size: Option<usize>,
    pub max_evaluations: Option<usize>,
    pub base_seed: Option<u64>,
    pub reference_set_size: Option<usize>,
    pub output_directory: Option<PathBuf>,
    pub parallelism: Option<Parallelism>,
}

impl ExperimentConfig {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_toml_str(&text)
    }

    pub fn apply(&mut self, o: ConfigOverrides) {
        macro_rules! take {
            ($($field:ident),*) => { $(if let Some(v) = o.$field { self.$field = v; })* };
        }
        take!(
            problems,
            algorithms,
            runs,
            population_size,
            max_evaluations,
            base_seed,
            reference_set_size,
            output_directory,
            parallelism
        );
    }

    pub fn problem_kinds(&self) -> Result<Vec<ProblemKind>> {
        parse_unique(&self.problems, "problem")
    }

    pub fn algorithm_kinds(&self) -> Result<Vec<AlgorithmKind>> {
        parse_unique(&self.algorithms, "algorithm")
    }

    /// Checks names against the registries and the numeric ranges.
    pub fn validate(&self) -> Result<()> {
        self.problem_kinds()?;
        self.algorithm_kinds()?;
        if self.runs == 0 {
            return Err(Error::Config("runs must be at least 1".into()));
        }
        if self.reference_set_size == 0 {
            return Err(Error::Config("reference set size must be positive".into()));
        }
        if let Parallelism::Threads(0) = self.parallelism {
            return Err(Error::Config("parallelism must be positive".into()));
        }
        if self.base_seed.checked_add(self.runs as u64).is_none() {
            return Err(Error::Config("base seed + runs overflows".into()));
        }
        for kind in self.algorithm_kinds()? {
            crate::AlgorithmConfig::<f64>::new(kind, self.population_size, self.max_evaluations).validate()?;
        }
        Ok(())
    }

    /// Seed of run `run_index`; shared across problems and algorithms so that
    /// runs are seed-paired.
    pub fn seed_for(&self, run_index: usize) -> u64 {
        self.base_seed + run_index as u64
    }
}

fn parse_unique<K: FromStr<Err = Error> + PartialEq>(names: &[String], what: &str) -> Result<Vec<K>> {
    if names.is_empty() {
        return Err(Error::Config(format!("empty {what} list")));
    }
    let mut out = Vec::with_capacity(names.len());
    for name in names {
        let kind: K = name.parse().map_err(|e: Error| Error::Config(format!("unknown {what}: {e}")))?;
        if !out.contains(&kind) {
            out.push(kind);
        }
    }
    Ok(out)
}
