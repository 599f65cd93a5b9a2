use std::cmp::Ordering;

use crate::base::{individual_rows, Individual, Population};
use crate::diversity::{crowding_distance_rows, niched_diversity_with_index, KnnIndex};
use crate::dominance::sort_objectives;
use crate::{DiversityEstimator, Error, NicheSize, Result, Scalar};

/// NSGA-II survivor selection.
///
/// Whole fronts are admitted in rank order; the front that does not fit is
/// cut by descending crowding distance (ties by index). Crowding distance is
/// computed per front, and within decision-space niches of that front when
/// `niche` is given. Survivors keep population order and carry their rank
/// and diversity.
pub fn nsga2_environmental_selection<T: Scalar>(
    merged: Population<T>,
    survivors: usize,
    niche: Option<NicheSize>,
) -> Result<Population<T>> {
    if merged.len() < survivors {
        return Err(Error::Domain(format!("cannot select {survivors} survivors from {} members", merged.len())));
    }
    let rows = individual_rows(merged.members())?;
    let partition = sort_objectives(&rows)?;

    let mut scores: Vec<Option<(usize, T)>> = vec![None; merged.len()];
    let mut chosen = Vec::with_capacity(survivors);
    for (rank, front) in partition.fronts().iter().enumerate() {
        if chosen.len() == survivors {
            break;
        }
        let diversity = front_diversity(merged.members(), &rows, front, niche)?;
        for (&i, &d) in front.iter().zip(&diversity) {
            scores[i] = Some((rank, d));
        }
        let room = survivors - chosen.len();
        if front.len() <= room {
            chosen.extend_from_slice(front);
        } else {
            let mut order: Vec<usize> = (0..front.len()).collect();
            order.sort_by(|&a, &b| {
                diversity[b].partial_cmp(&diversity[a]).unwrap_or(Ordering::Equal).then(front[a].cmp(&front[b]))
            });
            chosen.extend(order[..room].iter().map(|&p| front[p]));
        }
    }
    chosen.sort_unstable();

    let mut members: Vec<Option<Individual<T>>> = merged.into_members().into_iter().map(Some).collect();
    let kept = chosen
        .into_iter()
        .map(|i| {
            let mut m = members[i].take().expect("each index chosen once");
            let (rank, d) = scores[i].expect("scored before admission");
            m.clear_scores();
            m.rank = Some(rank);
            m.diversity = Some(d);
            m
        })
        .collect();
    Ok(Population::new(kept, survivors))
}

fn front_diversity<T: Scalar>(
    members: &[Individual<T>],
    rows: &[&[T]],
    front: &[usize],
    niche: Option<NicheSize>,
) -> Result<Vec<T>> {
    let front_rows: Vec<&[T]> = front.iter().map(|&i| rows[i]).collect();
    match niche.and_then(|n| n.resolve(front.len())) {
        None => crowding_distance_rows(&front_rows),
        Some(k) => {
            let decisions: Vec<&[T]> = front.iter().map(|&i| members[i].decision()).collect();
            let index = KnnIndex::build(&decisions);
            niched_diversity_with_index(&index, &front_rows, DiversityEstimator::CrowdingDistance, k)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pop(points: &[(f64, [f64; 2])]) -> Population<f64> {
        Population::from_members(points.iter().map(|(x, f)| Individual::evaluated(vec![*x], f.to_vec())).collect())
    }

    fn objectives(p: &Population<f64>) -> Vec<Vec<f64>> {
        p.iter().map(|m| m.objectives().unwrap().to_vec()).collect()
    }

    #[test]
    fn exact_front_is_returned_unchanged() {
        let merged = pop(&[(0.0, [0.0, 2.0]), (1.0, [3.0, 3.0]), (2.0, [1.0, 1.0]), (3.0, [2.0, 0.0])]);
        let out = nsga2_environmental_selection(merged, 3, None).unwrap();
        assert_eq!(objectives(&out), vec![vec![0.0, 2.0], vec![1.0, 1.0], vec![2.0, 0.0]]);
        assert!(out.iter().all(|m| m.rank == Some(0)));
    }

    #[test]
    fn near_duplicate_is_dropped_without_niching() {
        let merged = pop(&[(0.0, [0.0, 2.0]), (0.5, [1.0, 1.0]), (1.0, [2.0, 0.0]), (0.51, [1.01, 0.99])]);
        let out = nsga2_environmental_selection(merged, 3, None).unwrap();
        assert_eq!(objectives(&out), vec![vec![0.0, 2.0], vec![1.0, 1.0], vec![2.0, 0.0]]);
    }

    #[test]
    fn niching_keeps_equivalent_solution_in_distant_region() {
        // (1,1) and (1.01,0.99) sit far apart in decision space; with k = 1 every
        // niche has two members, so every score is +inf and index order decides.
        let merged = pop(&[(0.0, [0.0, 2.0]), (0.1, [1.0, 1.0]), (0.2, [2.0, 0.0]), (9.0, [1.01, 0.99])]);
        let out = nsga2_environmental_selection(merged, 3, Some(NicheSize::Fixed(1))).unwrap();
        assert!(out.iter().all(|m| m.diversity == Some(f64::INFINITY)));
        assert_eq!(objectives(&out), vec![vec![0.0, 2.0], vec![1.0, 1.0], vec![2.0, 0.0]]);

        let merged = pop(&[(9.0, [1.01, 0.99]), (0.0, [0.0, 2.0]), (0.1, [1.0, 1.0]), (0.2, [2.0, 0.0])]);
        let out = nsga2_environmental_selection(merged, 3, Some(NicheSize::Fixed(1))).unwrap();
        assert_eq!(objectives(&out)[0], vec![1.01, 0.99]);
    }

    #[test]
    fn later_fronts_fill_in_rank_order() {
        let merged = pop(&[(0.0, [3.0, 3.0]), (0.0, [0.0, 0.0]), (0.0, [2.0, 2.0]), (0.0, [1.0, 1.0])]);
        let out = nsga2_environmental_selection(merged, 2, None).unwrap();
        assert_eq!(objectives(&out), vec![vec![0.0, 0.0], vec![1.0, 1.0]]);
        assert_eq!(out.members()[1].rank, Some(1));
    }

    #[test]
    fn too_few_members_is_a_domain_error() {
        let merged = pop(&[(0.0, [0.0, 0.0])]);
        assert!(matches!(nsga2_environmental_selection(merged, 2, None), Err(Error::Domain(_))));
    }
}
