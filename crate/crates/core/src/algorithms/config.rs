use std::fmt;
use std::str::FromStr;

use crate::{Error, Result, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgorithmKind {
    Nsga2,
    NichingNsga2,
    Spea2,
    NichingSpea2,
}

impl AlgorithmKind {
    pub const ALL: [AlgorithmKind; 4] =
        [AlgorithmKind::Nsga2, AlgorithmKind::NichingNsga2, AlgorithmKind::Spea2, AlgorithmKind::NichingSpea2];

    /// Identifier used in configs and CSV files.
    pub fn id(self) -> &'static str {
        match self {
            AlgorithmKind::Nsga2 => "nsga2",
            AlgorithmKind::NichingNsga2 => "niching_nsga2",
            AlgorithmKind::Spea2 => "spea2",
            AlgorithmKind::NichingSpea2 => "niching_spea2",
        }
    }

    pub fn display_name(self) -> &'static str {
        match self {
            AlgorithmKind::Nsga2 => "NSGA-II",
            AlgorithmKind::NichingNsga2 => "Niching-NSGA-II",
            AlgorithmKind::Spea2 => "SPEA2",
            AlgorithmKind::NichingSpea2 => "Niching-SPEA2",
        }
    }

    pub fn is_niching(self) -> bool {
        matches!(self, AlgorithmKind::NichingNsga2 | AlgorithmKind::NichingSpea2)
    }

    pub fn is_spea2(self) -> bool {
        matches!(self, AlgorithmKind::Spea2 | AlgorithmKind::NichingSpea2)
    }

    /// The algorithm a niching variant is compared against.
    pub fn baseline(self) -> Option<AlgorithmKind> {
        match self {
            AlgorithmKind::NichingNsga2 => Some(AlgorithmKind::Nsga2),
            AlgorithmKind::NichingSpea2 => Some(AlgorithmKind::Spea2),
            _ => None,
        }
    }
}

impl fmt::Display for AlgorithmKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for AlgorithmKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace(['-', ' '], "_");
        match norm.as_str() {
            "nsga2" | "nsga_ii" => Ok(AlgorithmKind::Nsga2),
            "niching_nsga2" | "niching_nsga_ii" => Ok(AlgorithmKind::NichingNsga2),
            "spea2" => Ok(AlgorithmKind::Spea2),
            "niching_spea2" => Ok(AlgorithmKind::NichingSpea2),
            _ => Err(Error::Lookup(format!("algorithm '{s}'"))),
        }
    }
}

/// How many decision-space neighbours form a niche.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NicheSize {
    /// `floor(sqrt(|S|))` for an estimated set `S`.
    Auto,
    Fixed(usize),
    /// Every other member of the estimated set; niching then changes nothing.
    WholeSet,
}

impl NicheSize {
    /// Effective `k` for a set of `set_size` members, clamped to `set_size - 1`.
    /// `None` when the set has fewer than two members.
    pub fn resolve(self, set_size: usize) -> Option<usize> {
        if set_size < 2 {
            return None;
        }
        let k = match self {
            NicheSize::Auto => crate::diversity::isqrt(set_size),
            NicheSize::Fixed(k) => k,
            NicheSize::WholeSet => set_size - 1,
        };
        Some(k.clamp(1, set_size - 1))
    }
}

impl FromStr for NicheSize {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "auto" => Ok(NicheSize::Auto),
            "all" | "whole" => Ok(NicheSize::WholeSet),
            v => v
                .parse::<usize>()
                .ok()
                .filter(|&k| k > 0)
                .map(NicheSize::Fixed)
                .ok_or_else(|| Error::Config(format!("niche size '{s}' is not auto, all or a positive integer"))),
        }
    }
}

/// Simulated binary crossover and polynomial mutation settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VariationConfig<T> {
    pub crossover_probability: T,
    pub crossover_distribution_index: T,
    /// Per-variable mutation probability; `None` means `1 / D`.
    pub mutation_probability: Option<T>,
    pub mutation_distribution_index: T,
}

impl<T: Scalar> Default for VariationConfig<T> {
    fn default() -> Self {
        Self {
            crossover_probability: T::one(),
            crossover_distribution_index: T::lit(20.0),
            mutation_probability: None,
            mutation_distribution_index: T::lit(20.0),
        }
    }
}

impl<T: Scalar> VariationConfig<T> {
    pub fn mutation_probability_for(&self, dimension: usize) -> T {
        self.mutation_probability.unwrap_or_else(|| T::one() / T::from_usize_lossy(dimension.max(1)))
    }

    pub fn validate(&self) -> Result<()> {
        let unit = |v: T| v >= T::zero() && v <= T::one();
        if !unit(self.crossover_probability) {
            return Err(Error::Config("crossover probability outside [0, 1]".into()));
        }
        if let Some(p) = self.mutation_probability {
            if !unit(p) {
                return Err(Error::Config("mutation probability outside [0, 1]".into()));
            }
        }
        if !(self.crossover_distribution_index > T::zero() && self.mutation_distribution_index > T::zero()) {
            return Err(Error::Config("distribution indices must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlgorithmConfig<T> {
    pub kind: AlgorithmKind,
    pub population_size: usize,
    pub max_evaluations: usize,
    pub niche_k: NicheSize,
    pub variation: VariationConfig<T>,
}

impl<T: Scalar> AlgorithmConfig<T> {
    pub fn new(kind: AlgorithmKind, population_size: usize, max_evaluations: usize) -> Self {
        Self { kind, population_size, max_evaluations, niche_k: NicheSize::Auto, variation: VariationConfig::default() }
    }

    pub fn with_niche(mut self, niche_k: NicheSize) -> Self {
        self.niche_k = niche_k;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.population_size < 4 {
            return Err(Error::Config(format!("population size {} below 4", self.population_size)));
        }
        if self.max_evaluations < self.population_size {
            return Err(Error::Config(format!(
                "evaluation budget {} below population size {}",
                self.max_evaluations, self.population_size
            )));
        }
        self.variation.validate()
    }

    /// Niche setting used by environmental selection, `None` for the baselines.
    pub fn niche(&self) -> Option<NicheSize> {
        self.kind.is_niching().then_some(self.niche_k)
    }
}
