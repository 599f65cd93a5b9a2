//! Brute-force reference implementations shared by the oracle tests and the
//! acceptance suite. Written for clarity, not speed, and independent of the
//! library code they check.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `rows` random objective vectors; a coarse integer grid when `coarse` so
/// that ties and duplicates are common.
pub fn random_rows(rng: &mut ChaCha8Rng, n: usize, m: usize, coarse: bool) -> Vec<Vec<f64>> {
    (0..n)
        .map(|_| (0..m).map(|_| if coarse { rng.gen_range(0..5) as f64 } else { rng.gen::<f64>() }).collect())
        .collect()
}

pub fn dominates(a: &[f64], b: &[f64]) -> bool {
    let mut strictly = false;
    for (x, y) in a.iter().zip(b) {
        if x > y {
            return false;
        }
        if x < y {
            strictly = true;
        }
    }
    strictly
}

/// Fronts by repeated peeling of the non-dominated remainder.
pub fn peel_fronts(rows: &[Vec<f64>]) -> Vec<Vec<usize>> {
    let mut remaining: Vec<usize> = (0..rows.len()).collect();
    let mut fronts = Vec::new();
    while !remaining.is_empty() {
        let front: Vec<usize> =
            remaining.iter().copied().filter(|&i| !remaining.iter().any(|&j| dominates(&rows[j], &rows[i]))).collect();
        remaining.retain(|i| !front.contains(i));
        fronts.push(front);
    }
    fronts
}

/// SPEA2 strength `S(i)` and raw fitness `R(i) = sum of S(j)` over dominators `j`.
pub fn strength_and_raw(rows: &[Vec<f64>]) -> (Vec<usize>, Vec<usize>) {
    let n = rows.len();
    let mut strength = vec![0; n];
    for i in 0..n {
        for j in 0..n {
            if dominates(&rows[i], &rows[j]) {
                strength[i] += 1;
            }
        }
    }
    let mut raw = vec![0; n];
    for i in 0..n {
        for j in 0..n {
            if dominates(&rows[j], &rows[i]) {
                raw[i] += strength[j];
            }
        }
    }
    (strength, raw)
}

pub fn igd_plus(solutions: &[Vec<f64>], reference: &[Vec<f64>]) -> f64 {
    let mut total = 0.0;
    for r in reference {
        let mut best = f64::INFINITY;
        for a in solutions {
            let mut s = 0.0;
            for m in 0..r.len() {
                let d = if a[m] > r[m] { a[m] - r[m] } else { 0.0 };
                s += d * d;
            }
            best = best.min(s.sqrt());
        }
        total += best;
    }
    total / reference.len() as f64
}

pub fn igdx(solutions: &[Vec<f64>], reference: &[Vec<f64>]) -> f64 {
    let mut total = 0.0;
    for r in reference {
        let mut best = f64::INFINITY;
        for a in solutions {
            let s: f64 = a.iter().zip(r).map(|(x, y)| (x - y).powi(2)).sum();
            best = best.min(s.sqrt());
        }
        total += best;
    }
    total / reference.len() as f64
}

/// Two-pass mean and sample standard deviation.
pub fn mean_std(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

/// Midranks of the pooled sample by counting smaller and equal values.
fn midranks(pooled: &[f64]) -> Vec<f64> {
    pooled
        .iter()
        .map(|&v| {
            let less = pooled.iter().filter(|&&w| w < v).count() as f64;
            let equal = pooled.iter().filter(|&&w| w == v).count() as f64;
            less + (equal + 1.0) / 2.0
        })
        .collect()
}

/// Exact two-sided rank-sum p-value by enumerating every relabelling of the
/// pooled sample into groups of sizes `|a|` and `|b|`.
pub fn exact_rank_sum_p(a: &[f64], b: &[f64]) -> f64 {
    let pooled: Vec<f64> = a.iter().chain(b).copied().collect();
    let ranks = midranks(&pooled);
    let n1 = a.len();
    let observed: f64 = ranks[..n1].iter().sum();
    let centre = n1 as f64 * (pooled.len() as f64 + 1.0) / 2.0;
    let threshold = (observed - centre).abs() - 1e-9;
    let mut extreme = 0u64;
    let mut total = 0u64;
    fn walk(ranks: &[f64], start: usize, left: usize, sum: f64, centre: f64, thr: f64, ext: &mut u64, tot: &mut u64) {
        if left == 0 {
            *tot += 1;
            if (sum - centre).abs() >= thr {
                *ext += 1;
            }
            return;
        }
        for i in start..=ranks.len() - left {
            walk(ranks, i + 1, left - 1, sum + ranks[i], centre, thr, ext, tot);
        }
    }
    walk(&ranks, 0, n1, 0.0, centre, threshold, &mut extreme, &mut total);
    extreme as f64 / total as f64
}
pub mod props;
