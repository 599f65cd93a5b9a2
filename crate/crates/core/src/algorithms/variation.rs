//! Real-coded variation: bounded simulated binary crossover and polynomial
//! mutation, following Deb's reference implementation.

use crate::base::{Individual, RandomStream};
use crate::{Error, Result, Scalar, VariationConfig};

const EPS: f64 = 1.0e-14;

fn check_len(len: usize, lower: &[impl Sized], upper: &[impl Sized]) -> Result<()> {
    if lower.len() != len {
        return Err(Error::dim(len, lower.len()));
    }
    if upper.len() != len {
        return Err(Error::dim(len, upper.len()));
    }
    Ok(())
}

/// Simulated binary crossover. Children are fresh (unevaluated) individuals.
pub fn sbx_crossover<T: Scalar>(
    a: &Individual<T>,
    b: &Individual<T>,
    cfg: &VariationConfig<T>,
    lower: &[T],
    upper: &[T],
    rng: &mut RandomStream,
) -> Result<(Individual<T>, Individual<T>)> {
    let (x1, x2) = (a.decision(), b.decision());
    if x1.len() != x2.len() {
        return Err(Error::dim(x1.len(), x2.len()));
    }
    check_len(x1.len(), lower, upper)?;
    let (c1, c2) = sbx(x1, x2, cfg, lower, upper, rng);
    Ok((Individual::new(c1), Individual::new(c2)))
}

pub(crate) fn sbx<T: Scalar>(
    x1: &[T],
    x2: &[T],
    cfg: &VariationConfig<T>,
    lower: &[T],
    upper: &[T],
    rng: &mut RandomStream,
) -> (Vec<T>, Vec<T>) {
    let mut c1 = x1.to_vec();
    let mut c2 = x2.to_vec();
    if !rng.coin(cfg.crossover_probability.as_f64()) {
        return (c1, c2);
    }
    let eta = cfg.crossover_distribution_index.as_f64();
    let exponent = 1.0 / (eta + 1.0);
    let spread = |beta: f64, u: f64| -> f64 {
        let alpha = 2.0 - beta.powf(-(eta + 1.0));
        if u <= 1.0 / alpha {
            (u * alpha).powf(exponent)
        } else {
            (1.0 / (2.0 - u * alpha)).powf(exponent)
        }
    };
    for i in 0..x1.len() {
        if !rng.coin(0.5) {
            continue;
        }
        let (p1, p2) = (x1[i].as_f64(), x2[i].as_f64());
        if (p1 - p2).abs() <= EPS {
            continue;
        }
        let (y1, y2) = if p1 < p2 { (p1, p2) } else { (p2, p1) };
        let (lo, hi) = (lower[i].as_f64(), upper[i].as_f64());
        let u = rng.uniform();

        let beta_low = 1.0 + 2.0 * (y1 - lo) / (y2 - y1);
        let low_child = 0.5 * ((y1 + y2) - spread(beta_low, u) * (y2 - y1));
        let beta_high = 1.0 + 2.0 * (hi - y2) / (y2 - y1);
        let high_child = 0.5 * ((y1 + y2) + spread(beta_high, u) * (y2 - y1));

        let low_child = T::lit(low_child.clamp(lo, hi));
        let high_child = T::lit(high_child.clamp(lo, hi));
        if rng.coin(0.5) {
            c1[i] = high_child;
            c2[i] = low_child;
        } else {
            c1[i] = low_child;
            c2[i] = high_child;
        }
    }
    (c1, c2)
}

/// Polynomial mutation with per-variable probability (default `1 / D`).
pub fn polynomial_mutation<T: Scalar>(
    x: &Individual<T>,
    cfg: &VariationConfig<T>,
    lower: &[T],
    upper: &[T],
    rng: &mut RandomStream,
) -> Result<Individual<T>> {
    check_len(x.decision().len(), lower, upper)?;
    let mut y = x.decision().to_vec();
    mutate_in_place(&mut y, cfg, lower, upper, rng);
    Ok(Individual::new(y))
}

pub(crate) fn mutate_in_place<T: Scalar>(
    y: &mut [T],
    cfg: &VariationConfig<T>,
    lower: &[T],
    upper: &[T],
    rng: &mut RandomStream,
) {
    let p = cfg.mutation_probability_for(y.len()).as_f64();
    let eta = cfg.mutation_distribution_index.as_f64();
    let power = 1.0 / (eta + 1.0);
    for i in 0..y.len() {
        if !rng.coin(p) {
            continue;
        }
        let (lo, hi) = (lower[i].as_f64(), upper[i].as_f64());
        if hi <= lo {
            continue;
        }
        let v = y[i].as_f64();
        let delta1 = (v - lo) / (hi - lo);
        let delta2 = (hi - v) / (hi - lo);
        let u = rng.uniform();
        let deltaq = if u <= 0.5 {
            let xy = 1.0 - delta1;
            let val = 2.0 * u + (1.0 - 2.0 * u) * xy.powf(eta + 1.0);
            val.powf(power) - 1.0
        } else {
            let xy = 1.0 - delta2;
            let val = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * xy.powf(eta + 1.0);
            1.0 - val.powf(power)
        };
        y[i] = T::lit((v + deltaq * (hi - lo)).clamp(lo, hi));
    }
}
