//! Pareto dominance, non-dominated sorting and SPEA2 raw fitness.
//!
//! All objectives are minimized.

use crate::base::{Individual, Population};
use crate::{Error, Result, Scalar};

/// Partition of population indices into successive non-dominated fronts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrontPartition {
    fronts: Vec<Vec<usize>>,
}

impl FrontPartition {
    pub fn fronts(&self) -> &[Vec<usize>] {
        &self.fronts
    }

    pub fn into_fronts(self) -> Vec<Vec<usize>> {
        self.fronts
    }

    pub fn len(&self) -> usize {
        self.fronts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fronts.is_empty()
    }

    /// Front index of every population member.
    pub fn ranks(&self, population_len: usize) -> Vec<usize> {
        let mut ranks = vec![usize::MAX; population_len];
        for (r, front) in self.fronts.iter().enumerate() {
            for &i in front {
                ranks[i] = r;
            }
        }
        ranks
    }
}

/// True iff `a` is no worse than `b` everywhere and strictly better somewhere.
pub fn dominates<T: Scalar>(a: &[T], b: &[T]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::dim(a.len(), b.len()));
    }
    Ok(dominates_unchecked(a, b))
}

#[inline]
pub(crate) fn dominates_unchecked<T: Scalar>(a: &[T], b: &[T]) -> bool {
    let mut strictly = false;
    for (&x, &y) in a.iter().zip(b) {
        if x > y {
            return false;
        }
        if x < y {
            strictly = true;
        }
    }
    strictly
}

fn check_rows<T: Scalar>(rows: &[&[T]]) -> Result<()> {
    if let Some(first) = rows.first() {
        if let Some(bad) = rows.iter().find(|r| r.len() != first.len()) {
            return Err(Error::dim(first.len(), bad.len()));
        }
    }
    Ok(())
}

/// Fast non-dominated sort over raw objective rows.
///
/// Each front lists indices in ascending order.
pub fn sort_objectives<T: Scalar>(rows: &[&[T]]) -> Result<FrontPartition> {
    check_rows(rows)?;
    let n = rows.len();
    let mut dominated_by_count = vec![0usize; n];
    let mut dominates_list: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in (i + 1)..n {
            if dominates_unchecked(rows[i], rows[j]) {
                dominates_list[i].push(j);
                dominated_by_count[j] += 1;
            } else if dominates_unchecked(rows[j], rows[i]) {
                dominates_list[j].push(i);
                dominated_by_count[i] += 1;
            }
        }
    }

    let mut fronts = Vec::new();
    let mut current: Vec<usize> = (0..n).filter(|&i| dominated_by_count[i] == 0).collect();
    while !current.is_empty() {
        let mut next = Vec::new();
        for &i in &current {
            for &j in &dominates_list[i] {
                dominated_by_count[j] -= 1;
                if dominated_by_count[j] == 0 {
                    next.push(j);
                }
            }
        }
        next.sort_unstable();
        fronts.push(std::mem::replace(&mut current, next));
    }
    Ok(FrontPartition { fronts })
}

/// Sorts the population into fronts and stores each member's front index as its rank.
pub fn non_dominated_sort<T: Scalar>(pop: &mut Population<T>) -> Result<FrontPartition> {
    let partition = sort_objectives(&pop.objective_rows()?)?;
    let ranks = partition.ranks(pop.len());
    for (m, r) in pop.members_mut().iter_mut().zip(ranks) {
        m.rank = Some(r);
    }
    Ok(partition)
}

/// SPEA2 strength `S(i)` (number of members `i` dominates) and raw fitness
/// `R(i)` (sum of the strengths of every member dominating `i`).
pub fn strength_and_raw_rows<T: Scalar>(rows: &[&[T]]) -> Result<(Vec<usize>, Vec<usize>)> {
    check_rows(rows)?;
    let n = rows.len();
    let mut dominators: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut strength = vec![0usize; n];
    for i in 0..n {
        for j in 0..n {
            if i != j && dominates_unchecked(rows[i], rows[j]) {
                strength[i] += 1;
                dominators[j].push(i);
            }
        }
    }
    let raw = dominators.iter().map(|ds| ds.iter().map(|&d| strength[d]).sum()).collect();
    Ok((strength, raw))
}

/// Raw fitness of every member; zero exactly for non-dominated members.
pub fn spea2_strength_and_raw<T: Scalar>(members: &[Individual<T>]) -> Result<Vec<T>> {
    let rows = crate::base::individual_rows(members)?;
    let (_, raw) = strength_and_raw_rows(&rows)?;
    Ok(raw.into_iter().map(T::from_usize_lossy).collect())
}
