//! Shared data types, bound handling and the seeded random stream.

mod individual;
mod rng;
mod vector;

pub(crate) use individual::objective_rows as individual_rows;
pub use individual::{Individual, Population};
pub use rng::RandomStream;
pub use vector::{clamp_to_bounds, euclidean_distance, squared_distance};
