//! One-dimensional counterexamples, in floating point.
//!
//! On the line, a tuple `a_1, …, a_n` with all weights one has nonzero
//! solutions: if `λ` is a root of `g(z) = Σ_j e^{a_j z}`, then
//! `f(x) = e^{λx}` satisfies `Σ_j f(t + a_j) = e^{λt}·g(λ) = 0` for every
//! translation `t`. For `a = (1, …, n)` the root `λ = 2πi/n` works. The real
//! exponent `λ = 2π/n` does not, since then every term is positive.
//!
//! This is the only part of the crate that uses floating point.

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::error::usage;
use crate::exactfield::BigRational;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GalleryReport {
    pub lambda: Complex64,
    /// Largest `|Σ_j e^{λ(t + a_j)}| / |e^{λt}|` over the sampled `t`.
    pub max_residual: f64,
    /// The same over reflected copies `t − a_j`.
    pub reflection_residual: f64,
    /// The residual of the real exponent `λ = 2π/n`, for comparison.
    pub real_exponent_residual: f64,
    pub converged: bool,
}

const MAX_ITER: usize = 100;

fn to_f64(a: &[BigRational]) -> Vec<f64> {
    a.iter().map(|x| x.to_f64().expect("finite rational")).collect()
}

fn g(a: &[f64], z: Complex64) -> (Complex64, Complex64) {
    a.iter().fold((Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)), |(v, dv), &aj| {
        let e = (z * aj).exp();
        (v + e, dv + e * aj)
    })
}

/// Deterministic translations in `[−5, 5]`.
pub fn sample_translations(samples: usize) -> Vec<f64> {
    match samples {
        0 => Vec::new(),
        1 => vec![0.0],
        _ => (0..samples).map(|k| -5.0 + 10.0 * k as f64 / (samples - 1) as f64).collect(),
    }
}

/// `max_t |Σ_j e^{λ(t + σ·a_j)}| / |e^{λt}|` with `σ = ±1`.
pub fn translation_residual(a: &[f64], lambda: Complex64, samples: usize, reflect: bool) -> f64 {
    let sigma = if reflect { -1.0 } else { 1.0 };
    sample_translations(samples)
        .into_iter()
        .map(|t| {
            let sum: Complex64 = a.iter().map(|&aj| (lambda * (t + sigma * aj)).exp()).sum();
            sum.norm() / (lambda * t).exp().norm()
        })
        .fold(0.0, f64::max)
}

/// Finds a root `λ` of `Σ_j e^{a_j z}` by Newton iteration and reports how
/// well `e^{λx}` solves every translated copy.
///
/// Starts run over the grid `re ∈ {0, −1, 1}`, `im ∈ {0.5, 1, …, 8}` in that
/// order; among converged starts the root of least modulus (then largest
/// imaginary part) is kept.
pub fn exp_counterexample_1d(a: &[BigRational], tolerance: f64, samples: usize) -> Result<GalleryReport> {
    if a.len() < 2 {
        return usage("need at least two points");
    }
    let af = to_f64(a);
    let mut best: Option<Complex64> = None;
    let mut starts = 0;
    for re in [0.0, -1.0, 1.0] {
        for k in 1..=16 {
            starts += 1;
            let mut z = Complex64::new(re, 0.5 * k as f64);
            for _ in 0..MAX_ITER {
                let (v, dv) = g(&af, z);
                if dv.norm() == 0.0 || !z.is_finite() {
                    break;
                }
                z -= v / dv;
                if g(&af, z).0.norm() < tolerance {
                    break;
                }
            }
            if !z.is_finite() || g(&af, z).0.norm() >= tolerance {
                continue;
            }
            let better = match best {
                None => true,
                Some(b) => {
                    let (nz, nb) = (z.norm(), b.norm());
                    nz < nb - 1e-9 || ((nz - nb).abs() <= 1e-9 && z.im > b.im)
                }
            };
            if better {
                best = Some(z);
            }
        }
    }
    let lambda = best.ok_or(Error::NoConvergence { starts })?;
    let n = a.len() as f64;
    Ok(GalleryReport {
        lambda,
        max_residual: translation_residual(&af, lambda, samples, false),
        reflection_residual: translation_residual(&af, lambda, samples, true),
        real_exponent_residual: translation_residual(&af, Complex64::new(2.0 * std::f64::consts::PI / n, 0.0), samples, false),
        converged: true,
    })
}
