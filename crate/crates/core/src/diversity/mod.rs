//! Diversity estimators and their niching restriction.
//!
//! A diversity estimator scores each solution of a set `S` from its
//! relationship to the other members. The niching variant scores solution
//! `x_i` using only the sub-set formed by `x_i` and its `k` nearest
//! neighbours in *decision* space, so that solutions in distinct regions of
//! the decision space never compete for objective-space diversity.

mod crowding;
mod density;
mod niche;

pub use crowding::{crowding_distance, crowding_distance_rows};
pub(crate) use density::isqrt;
pub use density::{default_density_k, sigma_k_rows, spea2_density, spea2_sigma_k};
pub(crate) use niche::niched_diversity_with_index;
pub use niche::{decision_space_knn, niched_diversity, niched_diversity_rows, KnnIndex};

use crate::{Error, Result, Scalar};

/// Whether larger or smaller scores mean better diversity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    LargerIsBetter,
    SmallerIsBetter,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiversityEstimator {
    /// NSGA-II crowding distance: mean side length of the cuboid spanned by a
    /// solution's sorted neighbours in each objective; `+inf` on the boundary.
    CrowdingDistance,
    /// SPEA2 density `1 / (sigma_k + 2)` with `k = floor(sqrt(|S|))`.
    Spea2Density,
}

impl DiversityEstimator {
    pub fn orientation(self) -> Orientation {
        match self {
            DiversityEstimator::CrowdingDistance => Orientation::LargerIsBetter,
            DiversityEstimator::Spea2Density => Orientation::SmallerIsBetter,
        }
    }

    /// Scores every row of an objective-space point set.
    pub fn estimate_rows<T: Scalar>(self, rows: &[&[T]]) -> Result<Vec<T>> {
        match self {
            DiversityEstimator::CrowdingDistance => crowding_distance_rows(rows),
            DiversityEstimator::Spea2Density => {
                let k = default_density_k(rows.len())?;
                spea2_density(&sigma_k_rows(rows, k)?)
            }
        }
    }
}

/// Niche size: each solution's niche holds itself plus its `k` nearest
/// neighbours in decision space (Euclidean, unnormalized).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NicheConfig {
    pub k: usize,
}

impl NicheConfig {
    pub fn new(k: usize) -> Self {
        Self { k }
    }

    /// Niche covering the whole set of `set_size` members.
    pub fn whole_set(set_size: usize) -> Self {
        Self { k: set_size.saturating_sub(1) }
    }

    pub fn validate(&self, set_size: usize) -> Result<()> {
        if self.k == 0 || self.k + 1 > set_size {
            return Err(Error::Domain(format!(
                "niche size k = {} outside 1..={} for a set of {set_size}",
                self.k,
                set_size.saturating_sub(1)
            )));
        }
        Ok(())
    }
}
