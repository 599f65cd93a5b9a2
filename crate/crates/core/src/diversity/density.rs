use std::cmp::Ordering;

use crate::base::{individual_rows, squared_distance, Individual};
use crate::{Error, Result, Scalar};

/// `floor(sqrt(n))` clamped to `[1, n - 1]`.
pub fn default_density_k(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::Domain(format!("density needs at least 2 members, got {n}")));
    }
    Ok(isqrt(n).clamp(1, n - 1))
}

pub(crate) fn isqrt(n: usize) -> usize {
    let mut r = (n as f64).sqrt() as usize;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Objective-space distance from each row to its `k`-th nearest other row.
pub fn sigma_k_rows<T: Scalar>(rows: &[&[T]], k: usize) -> Result<Vec<T>> {
    let n = rows.len();
    if k == 0 || k >= n {
        return Err(Error::Domain(format!("k = {k} outside 1..={} for {n} members", n.saturating_sub(1))));
    }
    let mut scratch = Vec::with_capacity(n - 1);
    Ok((0..n)
        .map(|i| {
            scratch.clear();
            scratch.extend((0..n).filter(|&j| j != i).map(|j| squared_distance(rows[i], rows[j])));
            kth_smallest(&mut scratch, k).sqrt()
        })
        .collect())
}

/// 1-indexed k-th smallest value; reorders `values`.
pub(crate) fn kth_smallest<T: Scalar>(values: &mut [T], k: usize) -> T {
    let (_, kth, _) = values.select_nth_unstable_by(k - 1, |a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
    *kth
}

pub fn spea2_sigma_k<T: Scalar>(members: &[Individual<T>], k: usize) -> Result<Vec<T>> {
    sigma_k_rows(&individual_rows(members)?, k)
}

/// `1 / (sigma + 2)` entry-wise.
pub fn spea2_density<T: Scalar>(sigma_k: &[T]) -> Result<Vec<T>> {
    let two = T::lit(2.0);
    sigma_k
        .iter()
        .map(|&s| {
            if s < T::zero() || s.is_nan() {
                Err(Error::Domain(format!("negative neighbour distance {s}")))
            } else {
                Ok(T::one() / (s + two))
            }
        })
        .collect()
}
