use crate::{Error, Result, Scalar};

/// Componentwise `min(upper, max(lower, x))`.
pub fn clamp_to_bounds<T: Scalar>(decision: &[T], lower: &[T], upper: &[T]) -> Result<Vec<T>> {
    if lower.len() != decision.len() {
        return Err(Error::dim(decision.len(), lower.len()));
    }
    if upper.len() != decision.len() {
        return Err(Error::dim(decision.len(), upper.len()));
    }
    Ok(decision.iter().zip(lower.iter().zip(upper)).map(|(&x, (&lo, &hi))| hi.min(lo.max(x))).collect())
}

pub fn euclidean_distance<T: Scalar>(a: &[T], b: &[T]) -> Result<T> {
    if a.len() != b.len() {
        return Err(Error::dim(a.len(), b.len()));
    }
    Ok(squared_distance(a, b).sqrt())
}

/// Squared Euclidean distance; callers guarantee equal lengths.
#[inline]
pub fn squared_distance<T: Scalar>(a: &[T], b: &[T]) -> T {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(T::zero(), |acc, (&x, &y)| acc + (x - y) * (x - y))
}
