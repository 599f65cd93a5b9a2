//! Summary statistics and the two-sided Wilcoxon rank-sum test.

use std::cmp::Ordering;
use std::fmt;

use statrs::function::erf::erfc;

use crate::{Error, Result, Scalar};

/// Significance level of the rank-sum comparison.
pub const SIGNIFICANCE: f64 = 0.05;

/// Smallest sample size accepted by [`wilcoxon_rank_sum`].
pub const MIN_SAMPLE: usize = 10;

/// Samples at or below this size on both sides use the exact permutation
/// distribution; larger ones the normal approximation.
pub const EXACT_LIMIT: usize = 20;

/// Arithmetic mean and sample standard deviation (`n - 1` denominator).
pub fn mean_std<T: Scalar>(values: &[T]) -> Result<(T, T)> {
    if values.len() < 2 {
        return Err(Error::Domain(format!("mean/std needs at least 2 values, got {}", values.len())));
    }
    let n = T::from_usize_lossy(values.len());
    let mean = values.iter().fold(T::zero(), |s, &v| s + v) / n;
    let ss = values.iter().fold(T::zero(), |s, &v| s + (v - mean) * (v - mean));
    Ok((mean, (ss / (n - T::one())).sqrt()))
}

/// Lower median (the `(n - 1) / 2`-th order statistic).
pub fn median<T: Scalar>(values: &[T]) -> T {
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
    sorted[(sorted.len() - 1) / 2]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// First sample significantly better (smaller).
    Plus,
    /// First sample significantly worse.
    Minus,
    /// No significant difference.
    Approx,
}

impl Verdict {
    pub fn symbol(self) -> &'static str {
        match self {
            Verdict::Plus => "+",
            Verdict::Minus => "-",
            Verdict::Approx => "≈",
        }
    }

    pub fn mirrored(self) -> Self {
        match self {
            Verdict::Plus => Verdict::Minus,
            Verdict::Minus => Verdict::Plus,
            Verdict::Approx => Verdict::Approx,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonVerdict {
    pub symbol: Verdict,
    pub p_value: f64,
}

/// Average ranks (1-based) of the pooled sample, plus the tie groups' sizes.
fn pooled_ranks(pooled: &[f64]) -> (Vec<f64>, Vec<usize>) {
    let n = pooled.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| pooled[a].partial_cmp(&pooled[b]).unwrap_or(Ordering::Equal));
    let mut ranks = vec![0.0; n];
    let mut ties = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        while j < n && pooled[order[j]] == pooled[order[i]] {
            j += 1;
        }
        let avg = (i + j + 1) as f64 / 2.0;
        for &o in &order[i..j] {
            ranks[o] = avg;
        }
        ties.push(j - i);
        i = j;
    }
    (ranks, ties)
}

/// Two-sided rank-sum test of `a` against `b`; smaller values are better.
///
/// Uses average ranks for ties. Small samples get the exact permutation
/// distribution of the rank sum; larger ones the tie- and continuity-corrected
/// normal approximation. A significant result is `Plus` when `a` has the
/// smaller median (mean rank when medians coincide).
pub fn wilcoxon_rank_sum<T: Scalar>(a: &[T], b: &[T]) -> Result<ComparisonVerdict> {
    let (n1, n2) = (a.len(), b.len());
    if n1 < MIN_SAMPLE || n2 < MIN_SAMPLE {
        return Err(Error::Domain(format!("rank-sum test needs {MIN_SAMPLE}+ values per sample, got {n1} and {n2}")));
    }
    let pooled: Vec<f64> = a.iter().chain(b).map(|v| v.as_f64()).collect();
    if pooled.iter().any(|v| v.is_nan()) {
        return Err(Error::Domain("NaN in rank-sum sample".into()));
    }
    let (ranks, ties) = pooled_ranks(&pooled);
    let rank_sum_a: f64 = ranks[..n1].iter().sum();

    let p_value = if n1 <= EXACT_LIMIT && n2 <= EXACT_LIMIT {
        exact_p_value(&ranks, n1)
    } else {
        normal_p_value(rank_sum_a, n1, n2, &ties)
    };

    let symbol = if p_value >= SIGNIFICANCE {
        Verdict::Approx
    } else {
        let (ma, mb) = (median(&pooled[..n1]), median(&pooled[n1..]));
        let a_better = match ma.partial_cmp(&mb) {
            Some(Ordering::Less) => true,
            Some(Ordering::Greater) => false,
            _ => rank_sum_a / n1 as f64 <= ranks[n1..].iter().sum::<f64>() / n2 as f64,
        };
        if a_better {
            Verdict::Plus
        } else {
            Verdict::Minus
        }
    };
    Ok(ComparisonVerdict { symbol, p_value })
}

fn normal_p_value(rank_sum_a: f64, n1: usize, n2: usize, ties: &[usize]) -> f64 {
    let (f1, f2) = (n1 as f64, n2 as f64);
    let n = f1 + f2;
    let u = rank_sum_a - f1 * (f1 + 1.0) / 2.0;
    let mu = f1 * f2 / 2.0;
    let tie_term: f64 = ties.iter().map(|&t| (t as f64).powi(3) - t as f64).sum();
    let var = f1 * f2 / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)));
    if var <= 0.0 {
        return 1.0;
    }
    let z = ((u - mu).abs() - 0.5) / var.sqrt();
    if z <= 0.0 {
        return 1.0;
    }
    erfc(z / std::f64::consts::SQRT_2).min(1.0)
}

/// Exact two-sided p-value `P(|S - E[S]| >= |s_obs - E[S]|)` of the rank sum
/// of the first `n1` ranks under random relabelling, conditional on ties.
fn exact_p_value(ranks: &[f64], n1: usize) -> f64 {
    // doubled average ranks are integers
    let doubled: Vec<usize> = ranks.iter().map(|r| (2.0 * r).round() as usize).collect();
    let total: usize = doubled.iter().sum();
    let n = ranks.len();
    let observed: usize = doubled[..n1].iter().sum();
    // ways[j][s]: subsets of size j with doubled rank sum s
    let mut ways = vec![vec![0f64; total + 1]; n1 + 1];
    ways[0][0] = 1.0;
    for &r in &doubled {
        for j in (1..=n1).rev() {
            let (lower, upper) = ways.split_at_mut(j);
            let prev = &lower[j - 1];
            let cur = &mut upper[0];
            for s in (r..=total).rev() {
                if prev[s - r] != 0.0 {
                    cur[s] += prev[s - r];
                }
            }
        }
    }
    // E[S] in doubled units is n1 (n + 1)
    let centre = (n1 * (n + 1)) as i64;
    let dev = (observed as i64 - centre).abs();
    let dist = &ways[n1];
    let all: f64 = dist.iter().sum();
    let extreme: f64 =
        dist.iter().enumerate().filter(|&(s, _)| (s as i64 - centre).abs() >= dev).map(|(_, &w)| w).sum();
    (extreme / all).min(1.0)
}
