use std::cmp::Ordering;

use crate::base::{individual_rows, Individual};
use crate::{Error, Result, Scalar};

/// Crowding distance of every row. No objective normalization is applied.
///
/// Per objective the rows are ordered by `(value, index)`; the first and last
/// in that order are boundary solutions and score `+inf`.
pub fn crowding_distance_rows<T: Scalar>(rows: &[&[T]]) -> Result<Vec<T>> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::Domain("crowding distance of an empty set".into()));
    }
    let m = rows[0].len();
    if let Some(bad) = rows.iter().find(|r| r.len() != m) {
        return Err(Error::dim(m, bad.len()));
    }
    if n <= 2 {
        return Ok(vec![T::infinity(); n]);
    }

    let mut distance = vec![T::zero(); n];
    let mut order: Vec<usize> = (0..n).collect();
    for obj in 0..m {
        order.sort_by(|&a, &b| rows[a][obj].partial_cmp(&rows[b][obj]).unwrap_or(Ordering::Equal).then(a.cmp(&b)));
        distance[order[0]] = T::infinity();
        distance[order[n - 1]] = T::infinity();
        for w in order.windows(3) {
            let (left, mid, right) = (w[0], w[1], w[2]);
            distance[mid] = distance[mid] + (rows[right][obj] - rows[left][obj]);
        }
    }
    let m = T::from_usize_lossy(m);
    Ok(distance.into_iter().map(|d| d / m).collect())
}

pub fn crowding_distance<T: Scalar>(members: &[Individual<T>]) -> Result<Vec<T>> {
    crowding_distance_rows(&individual_rows(members)?)
}
