//! Quality indicators: IGD+ in objective space, IGDX in decision space, and
//! the diagnostics behind the equivalent-solution and subset-coverage claims.

use crate::base::{individual_rows, squared_distance, Individual};
use crate::{Error, ProblemSpec, Result, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IndicatorKind {
    IgdPlus,
    Igdx,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IndicatorResult<T> {
    pub kind: IndicatorKind,
    pub value: T,
    pub reference_size: usize,
}

fn check_sets<T: Scalar, S: AsRef<[T]>, R: AsRef<[T]>>(solutions: &[S], reference: &[R]) -> Result<usize> {
    if solutions.is_empty() || reference.is_empty() {
        return Err(Error::Domain("indicator needs non-empty solution and reference sets".into()));
    }
    let width = reference[0].as_ref().len();
    for row in solutions.iter().map(AsRef::as_ref).chain(reference.iter().map(AsRef::as_ref)) {
        if row.len() != width {
            return Err(Error::dim(width, row.len()));
        }
    }
    Ok(width)
}

fn mean_of_min<T: Scalar, S: AsRef<[T]>, R: AsRef<[T]>>(
    solutions: &[S],
    reference: &[R],
    sq_dist: impl Fn(&[T], &[T]) -> T,
) -> T {
    let total = reference.iter().fold(T::zero(), |acc, r| {
        let nearest = solutions.iter().map(|a| sq_dist(a.as_ref(), r.as_ref())).fold(T::infinity(), T::min);
        acc + nearest.sqrt()
    });
    total / T::from_usize_lossy(reference.len())
}

/// Mean over reference points `r` of `min_a sqrt(sum_m max(a_m - r_m, 0)^2)`.
pub fn igd_plus<T: Scalar, S: AsRef<[T]>, R: AsRef<[T]>>(solutions: &[S], reference: &[R]) -> Result<T> {
    check_sets(solutions, reference)?;
    Ok(mean_of_min(solutions, reference, |a, r| {
        a.iter().zip(r).fold(T::zero(), |s, (&ai, &ri)| {
            let d = (ai - ri).max(T::zero());
            s + d * d
        })
    }))
}

/// Mean over reference points of the Euclidean distance to the nearest solution.
pub fn igdx<T: Scalar, S: AsRef<[T]>, R: AsRef<[T]>>(solutions: &[S], reference: &[R]) -> Result<T> {
    check_sets(solutions, reference)?;
    Ok(mean_of_min(solutions, reference, squared_distance))
}

/// Unordered pairs whose objective vectors lie within `delta` of each other.
pub fn equivalent_pairs<T: Scalar>(solutions: &[Individual<T>], delta: T) -> Result<usize> {
    if !(delta > T::zero()) {
        return Err(Error::Domain(format!("delta must be positive, got {delta}")));
    }
    let rows = individual_rows(solutions)?;
    let limit = delta * delta;
    let mut count = 0;
    for i in 0..rows.len() {
        for j in (i + 1)..rows.len() {
            if squared_distance(rows[i], rows[j]) <= limit {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Coverage radius around each subset's reference points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CoverageRadius<T> {
    Absolute(T),
    /// Fraction of the diagonal of the subset's bounding box.
    BoundingBoxFraction(T),
}

impl<T: Scalar> Default for CoverageRadius<T> {
    fn default() -> Self {
        CoverageRadius::BoundingBoxFraction(T::lit(0.05))
    }
}

/// Reference points per subset used by [`subset_coverage`].
pub const COVERAGE_POINTS_PER_SUBSET: usize = 200;

/// Number of Pareto subsets with at least one solution within the radius of
/// one of the subset's reference points (decision space).
pub fn subset_coverage<T: Scalar>(
    solutions: &[Individual<T>],
    problem: &ProblemSpec<T>,
    radius: CoverageRadius<T>,
) -> usize {
    let rows: Vec<&[T]> = solutions.iter().map(|m| m.decision()).collect();
    subset_coverage_rows(&rows, problem, radius)
}

pub fn subset_coverage_rows<T: Scalar>(
    solutions: &[&[T]],
    problem: &ProblemSpec<T>,
    radius: CoverageRadius<T>,
) -> usize {
    (0..problem.equivalent_subset_count())
        .filter(|&s| {
            let reference = problem.subset_sample(s, COVERAGE_POINTS_PER_SUBSET);
            let r = match radius {
                CoverageRadius::Absolute(r) => r,
                CoverageRadius::BoundingBoxFraction(f) => f * bounding_box_diagonal(&reference),
            };
            let limit = r * r;
            solutions.iter().any(|x| reference.iter().any(|p| squared_distance(x, p) <= limit))
        })
        .count()
}

fn bounding_box_diagonal<T: Scalar>(points: &[Vec<T>]) -> T {
    let width = points[0].len();
    (0..width)
        .map(|d| {
            let (lo, hi) =
                points.iter().fold((T::infinity(), T::neg_infinity()), |(lo, hi), p| (lo.min(p[d]), hi.max(p[d])));
            (hi - lo) * (hi - lo)
        })
        .fold(T::zero(), |a, b| a + b)
        .sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ProblemKind;

    #[test]
    fn igd_plus_examples() {
        let r = vec![vec![0.0, 1.0], vec![1.0, 0.0]];
        assert_eq!(igd_plus(&r, &r).unwrap(), 0.0);
        assert_eq!(igd_plus(&[vec![0.0, 0.0]], &[vec![1.0, 1.0]]).unwrap(), 0.0);
        assert_eq!(igd_plus(&[vec![1.0, 1.0]], &[vec![0.0, 0.0]]).unwrap(), 2f64.sqrt());
        let empty: Vec<Vec<f64>> = vec![];
        assert!(igd_plus(&empty, &r).is_err());
        assert!(igd_plus(&[vec![1.0]], &r).is_err());
    }

    #[test]
    fn igdx_examples() {
        let r = vec![vec![0.5, 1.0], vec![2.0, 0.0]];
        assert_eq!(igdx(&r, &r).unwrap(), 0.0);
        assert_eq!(igdx(&[vec![1.0]], &[vec![0.0]]).unwrap(), 1.0);
        let empty: Vec<Vec<f64>> = vec![];
        assert!(igdx(&r, &empty).is_err());
    }

    fn with_objectives(points: &[[f64; 2]]) -> Vec<Individual<f64>> {
        points.iter().map(|f| Individual::evaluated(vec![0.0], f.to_vec())).collect()
    }

    #[test]
    fn equivalent_pair_counts() {
        assert_eq!(equivalent_pairs(&with_objectives(&[[1.0, 1.0], [1.0, 1.0]]), 1e-9).unwrap(), 1);
        assert_eq!(equivalent_pairs(&with_objectives(&[[0.0, 0.0], [1.0, 0.0], [3.0, 0.0]]), 0.5).unwrap(), 0);
        assert_eq!(equivalent_pairs(&with_objectives(&[[0.0, 0.0], [1.0, 0.0], [3.0, 0.0]]), 2.0).unwrap(), 2);
        assert!(equivalent_pairs(&with_objectives(&[[0.0, 0.0]]), 0.0).is_err());
    }

    #[test]
    fn coverage_examples() {
        let p = ProblemSpec::<f64>::new(ProblemKind::SymPart);
        let full: Vec<Individual<f64>> = p.pareto_set_sample(900).into_iter().map(Individual::new).collect();
        assert_eq!(subset_coverage(&full, &p, CoverageRadius::default()), 9);

        let far = vec![Individual::new(vec![-19.0, 19.0]), Individual::new(vec![19.0, -4.0])];
        assert_eq!(subset_coverage(&far, &p, CoverageRadius::default()), 0);

        let centres: Vec<Individual<f64>> = (0..9).map(|s| Individual::new(p.subset_point(s, 0.5))).collect();
        assert_eq!(subset_coverage(&centres, &p, CoverageRadius::default()), 9);
        assert_eq!(subset_coverage(&centres[..4], &p, CoverageRadius::Absolute(0.01)), 4);
    }
}
