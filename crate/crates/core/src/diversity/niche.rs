use std::cmp::Ordering;

use crate::base::{individual_rows, squared_distance, Individual};
use crate::{DiversityEstimator, Error, NicheConfig, Result, Scalar};

/// Neighbour order of every member of a set in decision space.
///
/// `neighbours(i)` lists all `j != i` by ascending Euclidean distance, ties by
/// smaller index.
#[derive(Debug, Clone)]
pub struct KnnIndex {
    order: Vec<Vec<usize>>,
}

impl KnnIndex {
    pub fn build<T: Scalar>(decisions: &[&[T]]) -> Self {
        let n = decisions.len();
        let mut dist = vec![T::zero(); n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                let d = squared_distance(decisions[i], decisions[j]);
                dist[i * n + j] = d;
                dist[j * n + i] = d;
            }
        }
        let order = (0..n)
            .map(|i| {
                let row = &dist[i * n..(i + 1) * n];
                let mut others: Vec<usize> = (0..n).filter(|&j| j != i).collect();
                others.sort_by(|&a, &b| row[a].partial_cmp(&row[b]).unwrap_or(Ordering::Equal).then(a.cmp(&b)));
                others
            })
            .collect();
        Self { order }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn neighbours(&self, i: usize) -> &[usize] {
        &self.order[i]
    }

    pub fn nearest(&self, i: usize, k: usize) -> &[usize] {
        &self.order[i][..k]
    }
}

/// The `k` members nearest to member `i` in decision space, nearest first.
pub fn decision_space_knn<T: Scalar>(members: &[Individual<T>], i: usize, k: usize) -> Result<Vec<usize>> {
    let n = members.len();
    if i >= n {
        return Err(Error::Domain(format!("index {i} out of range for {n} members")));
    }
    NicheConfig::new(k).validate(n)?;
    let rows: Vec<&[T]> = members.iter().map(|m| m.decision()).collect();
    let mut others: Vec<(T, usize)> =
        (0..n).filter(|&j| j != i).map(|j| (squared_distance(rows[i], rows[j]), j)).collect();
    others.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap_or(Ordering::Equal).then(a.1.cmp(&b.1)));
    Ok(others.into_iter().take(k).map(|(_, j)| j).collect())
}

/// Diversity of each member computed only within its niche.
///
/// The niche of `i` is `{i}` plus its `k` decision-space nearest neighbours,
/// kept in population order; the estimator runs on that sub-set and the value
/// at `i`'s position is reported.
pub fn niched_diversity_rows<T: Scalar>(
    decisions: &[&[T]],
    objectives: &[&[T]],
    estimator: DiversityEstimator,
    niche: NicheConfig,
) -> Result<Vec<T>> {
    let n = objectives.len();
    if decisions.len() != n {
        return Err(Error::dim(n, decisions.len()));
    }
    niche.validate(n)?;
    let index = KnnIndex::build(decisions);
    niched_diversity_with_index(&index, objectives, estimator, niche.k)
}

pub(crate) fn niched_diversity_with_index<T: Scalar>(
    index: &KnnIndex,
    objectives: &[&[T]],
    estimator: DiversityEstimator,
    k: usize,
) -> Result<Vec<T>> {
    let mut members = Vec::with_capacity(k + 1);
    let mut rows = Vec::with_capacity(k + 1);
    (0..objectives.len())
        .map(|i| {
            members.clear();
            members.extend_from_slice(index.nearest(i, k));
            members.push(i);
            members.sort_unstable();
            let pos = members.binary_search(&i).expect("member of its own niche");
            rows.clear();
            rows.extend(members.iter().map(|&j| objectives[j]));
            Ok(estimator.estimate_rows(&rows)?[pos])
        })
        .collect()
}

pub fn niched_diversity<T: Scalar>(
    members: &[Individual<T>],
    estimator: DiversityEstimator,
    niche: NicheConfig,
) -> Result<Vec<T>> {
    let objectives = individual_rows(members)?;
    let decisions: Vec<&[T]> = members.iter().map(|m| m.decision()).collect();
    niched_diversity_rows(&decisions, &objectives, estimator, niche)
}
