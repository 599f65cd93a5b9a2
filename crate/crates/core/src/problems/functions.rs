//! Objective functions of the benchmark problems and closed-form
//! parameterizations of their Pareto sets and fronts.
//!
//! All problems have two objectives. Every Pareto subset is parameterized by
//! `t` in `[0, 1]`; `subset_point(s, t)` for different `s` but equal `t` map
//! to the same objective vector `set_image(t)`.

use super::ProblemKind;
use crate::Scalar;

// SYM-PART (simple variant) tile parameters.
const SP_A: f64 = 1.0;
const SP_B: f64 = 10.0;
const SP_C: f64 = 8.0;

pub(super) fn dimension(kind: ProblemKind) -> usize {
    match kind {
        ProblemKind::OmniTest => 3,
        _ => 2,
    }
}

pub(super) fn bounds(kind: ProblemKind) -> (Vec<f64>, Vec<f64>) {
    use std::f64::consts::PI;
    match kind {
        ProblemKind::SymPart => (vec![-20.0; 2], vec![20.0; 2]),
        ProblemKind::OmniTest => (vec![0.0; 3], vec![6.0; 3]),
        ProblemKind::Mmf1 => (vec![1.0, -1.0], vec![3.0, 1.0]),
        ProblemKind::Mmf2 => (vec![0.0, 0.0], vec![1.0, 2.0]),
        ProblemKind::Mmf3 => (vec![0.0, 0.0], vec![1.0, 1.5]),
        ProblemKind::Mmf4 => (vec![-1.0, 0.0], vec![1.0, 2.0]),
        ProblemKind::Mmf5 => (vec![1.0, -1.0], vec![3.0, 3.0]),
        ProblemKind::Mmf6 => (vec![1.0, -1.0], vec![3.0, 2.0]),
        ProblemKind::Mmf7 => (vec![1.0, -1.0], vec![3.0, 1.0]),
        ProblemKind::Mmf8 => (vec![-PI, 0.0], vec![PI, 9.0]),
    }
}

pub(super) fn subset_count(kind: ProblemKind) -> usize {
    match kind {
        ProblemKind::SymPart => 9,
        ProblemKind::OmniTest => 27,
        ProblemKind::Mmf1 | ProblemKind::Mmf2 | ProblemKind::Mmf3 | ProblemKind::Mmf7 => 2,
        ProblemKind::Mmf4 | ProblemKind::Mmf5 | ProblemKind::Mmf6 | ProblemKind::Mmf8 => 4,
    }
}

#[inline]
fn c<T: Scalar>(v: f64) -> T {
    T::lit(v)
}

/// `sin(6 pi t + pi)`, the Pareto-set curve shared by MMF1 and MMF5-6.
#[inline]
fn wave<T: Scalar>(t: T) -> T {
    (c::<T>(6.0) * T::PI() * t + T::PI()).sin()
}

/// `4 y^2 - 2 cos(20 y pi / sqrt 2) + 2`, zero at `y = 0`.
#[inline]
fn multimodal_bump<T: Scalar>(y: T) -> T {
    c::<T>(4.0) * y * y - c::<T>(2.0) * (c::<T>(20.0) * y * T::PI() / T::SQRT_2()).cos() + c::<T>(2.0)
}

/// MMF7 Pareto-set curve.
#[inline]
fn mmf7_curve<T: Scalar>(t: T) -> T {
    let inner = c::<T>(0.3) * t * t * (c::<T>(24.0) * T::PI() * t + c::<T>(4.0) * T::PI()).cos() + c::<T>(0.6) * t;
    inner * wave(t)
}

pub(super) fn evaluate<T: Scalar>(kind: ProblemKind, x: &[T]) -> Vec<T> {
    let one = T::one();
    let two = c::<T>(2.0);
    match kind {
        ProblemKind::SymPart => {
            let (a, b, cc) = (c::<T>(SP_A), c::<T>(SP_B), c::<T>(SP_C));
            let (x1, x2) = (x[0], x[1]);
            let t1_hat = x1.signum() * ((x1.abs() - a - cc / two) / (two * a + cc)).ceil();
            let t2_hat = x2.signum() * ((x2.abs() - b / two) / b).ceil();
            let t1 = t1_hat.signum() * t1_hat.abs().min(one);
            let t2 = t2_hat.signum() * t2_hat.abs().min(one);
            let p1 = x1 - t1 * cc;
            let p2 = x2 - t2 * b;
            vec![(p1 + a).powi(2) + p2 * p2, (p1 - a).powi(2) + p2 * p2]
        }
        ProblemKind::OmniTest => {
            let f1 = x.iter().fold(T::zero(), |s, &v| s + (T::PI() * v).sin());
            let f2 = x.iter().fold(T::zero(), |s, &v| s + (T::PI() * v).cos());
            vec![f1, f2]
        }
        ProblemKind::Mmf1 => {
            let t = (x[0] - two).abs();
            vec![t, one - t.sqrt() + two * (x[1] - wave(t)).powi(2)]
        }
        ProblemKind::Mmf2 => {
            let root = x[0].sqrt();
            let y = if x[1] <= one { x[1] - root } else { x[1] - one - root };
            vec![x[0], one - root + two * multimodal_bump(y)]
        }
        ProblemKind::Mmf3 => {
            let root = x[0].sqrt();
            let lower_branch = x[1] <= c(0.5) || (x[1] < one && x[0] > c(0.25));
            let y = if lower_branch { x[1] - root } else { x[1] - c(0.5) - root };
            vec![x[0], one - root + two * multimodal_bump(y)]
        }
        ProblemKind::Mmf4 => {
            let t = x[0].abs();
            let shift = if x[1] <= one { T::zero() } else { one };
            vec![t, one - x[0] * x[0] + two * (x[1] - shift - (T::PI() * t).sin()).powi(2)]
        }
        ProblemKind::Mmf5 => {
            let t = (x[0] - two).abs();
            let shift = if x[1] <= one { T::zero() } else { two };
            vec![t, one - t.sqrt() + two * (x[1] - shift - wave(t)).powi(2)]
        }
        ProblemKind::Mmf6 => {
            // The two Pareto-set curves x2 = s and x2 = s + 1 overlap in x2;
            // each point is scored against the curve on its side of s + 1/2.
            let t = (x[0] - two).abs();
            let s = wave(t);
            let shift = if x[1] - s < c(0.5) { T::zero() } else { one };
            vec![t, one - t.sqrt() + two * (x[1] - shift - s).powi(2)]
        }
        ProblemKind::Mmf7 => {
            let t = (x[0] - two).abs();
            vec![t, one - t.sqrt() + (x[1] - mmf7_curve(t)).powi(2)]
        }
        ProblemKind::Mmf8 => {
            let t = x[0].abs();
            let s = t.sin();
            let shift = if x[1] <= c(4.0) { T::zero() } else { c(4.0) };
            let base = (one - s * s).max(T::zero()).sqrt();
            vec![s, base + two * (x[1] - shift - s - t).powi(2)]
        }
    }
}

/// Point with parameter `t` on Pareto subset `s`.
pub(super) fn subset_point<T: Scalar>(kind: ProblemKind, s: usize, t: T) -> Vec<T> {
    let one = T::one();
    let two = c::<T>(2.0);
    let side = |s: usize| if s % 2 == 0 { -one } else { one };
    match kind {
        ProblemKind::SymPart => {
            let col = c::<T>((s % 3) as f64 - 1.0);
            let row = c::<T>((s / 3) as f64 - 1.0);
            vec![col * c(SP_C) + (two * t - one) * c(SP_A), row * c(SP_B)]
        }
        ProblemKind::OmniTest => {
            let mut digits = s;
            (0..3)
                .map(|_| {
                    let m = digits % 3;
                    digits /= 3;
                    one + c::<T>(2.0 * m as f64) + c::<T>(0.5) * t
                })
                .collect()
        }
        ProblemKind::Mmf1 => vec![two + side(s) * t, wave(t)],
        ProblemKind::Mmf2 => vec![t, t.sqrt() + c((s % 2) as f64)],
        ProblemKind::Mmf3 => vec![t, t.sqrt() + c(0.5 * (s % 2) as f64)],
        ProblemKind::Mmf4 => vec![side(s) * t, (T::PI() * t).sin() + c((s / 2) as f64)],
        ProblemKind::Mmf5 => vec![two + side(s) * t, wave(t) + c(2.0 * (s / 2) as f64)],
        ProblemKind::Mmf6 => vec![two + side(s) * t, wave(t) + c((s / 2) as f64)],
        ProblemKind::Mmf7 => vec![two + side(s) * t, mmf7_curve(t)],
        ProblemKind::Mmf8 => {
            let u = T::PI() * t;
            vec![side(s) * u, u.sin() + u + c(4.0 * (s / 2) as f64)]
        }
    }
}

/// Objective vector shared by `subset_point(s, t)` for every subset `s`.
pub(super) fn set_image<T: Scalar>(kind: ProblemKind, t: T) -> Vec<T> {
    let one = T::one();
    match kind {
        ProblemKind::SymPart => {
            let p = c::<T>(2.0) * t - one;
            let a = c::<T>(SP_A);
            vec![(p + a).powi(2), (p - a).powi(2)]
        }
        ProblemKind::OmniTest => {
            let theta = T::PI() * (one + c::<T>(0.5) * t);
            vec![c::<T>(3.0) * theta.sin(), c::<T>(3.0) * theta.cos()]
        }
        ProblemKind::Mmf4 => vec![t, one - t * t],
        ProblemKind::Mmf8 => {
            let u = T::PI() * t;
            vec![u.sin(), u.cos().abs()]
        }
        _ => vec![t, one - t.sqrt()],
    }
}

/// Pareto front parameterized by `u` in `[0, 1]`, one pass end to end.
pub(super) fn front_curve<T: Scalar>(kind: ProblemKind, u: T) -> Vec<T> {
    match kind {
        ProblemKind::Mmf8 => {
            let theta = T::FRAC_PI_2() * u;
            vec![theta.sin(), theta.cos()]
        }
        _ => set_image(kind, u),
    }
}
