use std::cmp::Ordering;

use crate::base::{individual_rows, squared_distance, Individual, Population};
use crate::diversity::{niched_diversity_with_index, KnnIndex};
use crate::dominance::strength_and_raw_rows;
use crate::{DiversityEstimator, Error, NicheSize, Result, Scalar};

/// SPEA2 survivor selection, optionally with niched density and truncation.
///
/// Fitness is raw fitness plus density. The non-dominated members form the
/// archive; a short archive is topped up with the best-fitness dominated
/// members, an oversized one is truncated by [`truncate_archive`]. Survivors
/// keep population order and carry fitness and density.
pub fn spea2_environmental_selection<T: Scalar>(
    merged: Population<T>,
    survivors: usize,
    niche: Option<NicheSize>,
) -> Result<Population<T>> {
    let n = merged.len();
    if n < survivors {
        return Err(Error::Domain(format!("cannot select {survivors} survivors from {n} members")));
    }
    let rows = individual_rows(merged.members())?;
    let decisions: Vec<&[T]> = merged.members().iter().map(|m| m.decision()).collect();
    let (_, raw) = strength_and_raw_rows(&rows)?;

    let density = match niche.and_then(|ns| ns.resolve(n)) {
        _ if n < 2 => vec![T::zero(); n],
        None => DiversityEstimator::Spea2Density.estimate_rows(&rows)?,
        Some(k) => {
            let index = KnnIndex::build(&decisions);
            niched_diversity_with_index(&index, &rows, DiversityEstimator::Spea2Density, k)?
        }
    };
    let fitness: Vec<T> = raw.iter().zip(&density).map(|(&r, &d)| T::from_usize_lossy(r) + d).collect();

    let mut archive: Vec<usize> = (0..n).filter(|&i| raw[i] == 0).collect();
    if archive.len() < survivors {
        let mut rest: Vec<usize> = (0..n).filter(|&i| raw[i] != 0).collect();
        rest.sort_by(|&a, &b| fitness[a].partial_cmp(&fitness[b]).unwrap_or(Ordering::Equal).then(a.cmp(&b)));
        archive.extend_from_slice(&rest[..survivors - archive.len()]);
        archive.sort_unstable();
    } else if archive.len() > survivors {
        let q_rows: Vec<&[T]> = archive.iter().map(|&i| rows[i]).collect();
        let q_dec: Vec<&[T]> = archive.iter().map(|&i| decisions[i]).collect();
        let kept = truncate_archive(&q_rows, &q_dec, survivors, niche);
        archive = kept.into_iter().map(|p| archive[p]).collect();
    }

    let mut members: Vec<Option<Individual<T>>> = merged.into_members().into_iter().map(Some).collect();
    let kept = archive
        .into_iter()
        .map(|i| {
            let mut m = members[i].take().expect("each index kept once");
            m.clear_scores();
            m.fitness = Some(fitness[i]);
            m.diversity = Some(density[i]);
            m
        })
        .collect();
    Ok(Population::new(kept, survivors))
}

/// Archive truncation: repeatedly removes the member whose ascending list of
/// objective-space distances to the other members is lexicographically
/// smallest (ties: lowest position), until `target` remain.
///
/// With a niche, the distance list only covers the member's current
/// decision-space niche (its `k` nearest remaining neighbours), and niches are
/// refreshed after every removal.
///
/// Returns the kept positions in ascending order.
pub fn truncate_archive<T: Scalar>(
    objectives: &[&[T]],
    decisions: &[&[T]],
    target: usize,
    niche: Option<NicheSize>,
) -> Vec<usize> {
    let n = objectives.len();
    if n <= target {
        return (0..n).collect();
    }
    let mut dist = vec![T::zero(); n * n];
    for i in 0..n {
        for j in (i + 1)..n {
            let d = squared_distance(objectives[i], objectives[j]).sqrt();
            dist[i * n + j] = d;
            dist[j * n + i] = d;
        }
    }
    let dist_row = |i: usize| &dist[i * n..(i + 1) * n];

    let mut alive = vec![true; n];
    let mut remaining = n;

    let mut by_distance: Option<Vec<Vec<usize>>> = None;
    let knn = niche.map(|_| KnnIndex::build(decisions));
    let mut cached_k = 0usize;
    let mut keys: Vec<Option<(Vec<usize>, Vec<T>)>> = vec![None; n];

    while remaining > target {
        let k = niche.and_then(|ns| ns.resolve(remaining)).unwrap_or(remaining - 1);

        let victim = if k >= remaining - 1 {
            // every remaining member is in every niche: plain SPEA2 truncation
            let lists = by_distance.get_or_insert_with(|| {
                (0..n)
                    .map(|i| {
                        let row = dist_row(i);
                        let mut others: Vec<usize> = (0..n).filter(|&j| j != i).collect();
                        others.sort_by(|&a, &b| row[a].partial_cmp(&row[b]).unwrap_or(Ordering::Equal).then(a.cmp(&b)));
                        others
                    })
                    .collect()
            });
            let key = |i: usize| {
                let row = dist_row(i);
                lists[i].iter().filter(|&&j| alive[j]).map(move |&j| row[j])
            };
            let mut best = None;
            for i in (0..n).filter(|&i| alive[i]) {
                match best {
                    None => best = Some(i),
                    Some(b) if key(i).partial_cmp(key(b)) == Some(Ordering::Less) => best = Some(i),
                    _ => {}
                }
            }
            best.expect("at least one member remains")
        } else {
            let knn = knn.as_ref().expect("niche index built when niching");
            if k != cached_k {
                keys.iter_mut().for_each(|slot| *slot = None);
                cached_k = k;
            }
            let mut best: Option<usize> = None;
            for i in 0..n {
                if !alive[i] {
                    continue;
                }
                if keys[i].is_none() {
                    let members: Vec<usize> = knn.neighbours(i).iter().copied().filter(|&j| alive[j]).take(k).collect();
                    let row = dist_row(i);
                    let mut d: Vec<T> = members.iter().map(|&j| row[j]).collect();
                    d.sort_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
                    keys[i] = Some((members, d));
                }
                best = match best {
                    None => Some(i),
                    Some(b) => {
                        let ki = &keys[i].as_ref().expect("filled").1;
                        let kb = &keys[b].as_ref().expect("filled").1;
                        if ki.partial_cmp(kb) == Some(Ordering::Less) {
                            Some(i)
                        } else {
                            Some(b)
                        }
                    }
                };
            }
            best.expect("at least one member remains")
        };

        alive[victim] = false;
        remaining -= 1;
        keys[victim] = None;
        for slot in keys.iter_mut() {
            if slot.as_ref().is_some_and(|(members, _)| members.contains(&victim)) {
                *slot = None;
            }
        }
    }
    (0..n).filter(|&i| alive[i]).collect()
}
