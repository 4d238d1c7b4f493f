//! Limiting degree statistics of Barabási–Albert trees and sparse
//! Erdős–Rényi graphs, and the per-vertex energy bounds they imply.
//!
//! Series are summed with Neumaier compensation; `λ^k / k!` is carried as a
//! running product so no factorial is ever formed.

use serde::Serialize;

use crate::{Error, Result};

/// Smallest truncation index for which the BA tail estimate is valid.
pub const BA_MIN_TERMS: usize = 21;

/// Terms used when certifying `f(λ) < 1`.
pub const HYPOENERGETIC_TERMS: usize = 40;

/// A truncated series together with a bound on the discarded tail.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesValue {
    pub value: f64,
    pub truncation_bound: f64,
    /// Index of the last term included.
    pub terms_used: usize,
}

impl SeriesValue {
    /// One-sided certified upper bound on the full series.
    pub fn upper(&self) -> f64 {
        self.value + self.truncation_bound
    }
}

#[derive(Debug, Default, Clone, Copy)]
struct NeumaierSum {
    sum: f64,
    compensation: f64,
}

impl NeumaierSum {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn total(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// Limiting fraction of vertices of degree `k` in a BA tree, `4 / (k(k+1)(k+2))`.
pub fn ba_nk(k: usize) -> f64 {
    let k = k as f64;
    4.0 / (k * (k + 1.0) * (k + 2.0))
}

/// Limiting fraction of leaves whose neighbor has degree `k`,
/// `(2(k+2)(k+3) - 24) / (k(k+1)(k+2)(k+3))`.
pub fn ba_nk1(k: usize) -> f64 {
    let k = k as f64;
    (2.0 * (k + 2.0) * (k + 3.0) - 24.0) / (k * (k + 1.0) * (k + 2.0) * (k + 3.0))
}

/// `3 n_{k,1} / n_k + k` in closed form, `(k(5k+21) - 18) / (2(k+3))`.
pub fn ba_star_radicand(k: usize) -> f64 {
    let k = k as f64;
    (k * (5.0 * k + 21.0) - 18.0) / (2.0 * (k + 3.0))
}

/// Partial sum `Σ_{k=2}^{m} n_k sqrt(3 n_{k,1}/n_k + k)` of the limiting
/// per-vertex energy bound for BA trees, with tail bound
/// `8 sqrt(3) / (3 (m-1)^{3/2})`.
pub fn ba_limit_constant(m: usize) -> Result<SeriesValue> {
    if m < BA_MIN_TERMS {
        return Err(Error::out_of_range(
            "BA term count",
            format!("m = {m} < {BA_MIN_TERMS}"),
        ));
    }
    let mut sum = NeumaierSum::default();
    // smallest terms first
    for k in (2..=m).rev() {
        sum.add(ba_nk(k) * ba_star_radicand(k).sqrt());
    }
    Ok(SeriesValue {
        value: sum.total(),
        truncation_bound: 8.0 * 3f64.sqrt() / (3.0 * ((m - 1) as f64).powf(1.5)),
        terms_used: m,
    })
}

fn check_lambda(lambda: f64) -> Result<()> {
    if lambda > 0.0 && lambda.is_finite() {
        Ok(())
    } else {
        Err(Error::out_of_range("lambda", format!("need λ > 0, got {lambda}")))
    }
}

/// `λ^k / k!` by running product.
fn poisson_weight(lambda: f64, k: usize) -> f64 {
    (1..=k).fold(1.0, |acc, i| acc * lambda / i as f64)
}

/// Limiting fraction of degree-`k` vertices in `G(n, λ/n)`, `λ^k e^{-λ} / k!`.
pub fn er_nk(lambda: f64, k: usize) -> f64 {
    poisson_weight(lambda, k) * (-lambda).exp()
}

/// Limiting fraction of leaves whose neighbor has degree `k`,
/// `λ^k e^{-2λ} / (k-1)!`.
pub fn er_nk1(lambda: f64, k: usize) -> f64 {
    if k == 0 {
        return 0.0;
    }
    k as f64 * poisson_weight(lambda, k) * (-2.0 * lambda).exp()
}

/// Partial sum of
/// `f(λ) = 2λe^{-2λ} + e^{-λ} sqrt(3e^{-λ}+1) Σ_{k>=2} λ^k sqrt(k) / k!`
/// up to `k = terms`, with tail bound `sqrt(3e^{-λ}+1) λ^terms / terms!`.
pub fn er_f(lambda: f64, terms: usize) -> Result<SeriesValue> {
    check_lambda(lambda)?;
    if terms < 2 {
        return Err(Error::out_of_range("ER term count", format!("{terms} < 2")));
    }
    let decay = (-lambda).exp();
    let radical = (3.0 * decay + 1.0).sqrt();
    let mut weight = lambda;
    let mut series = NeumaierSum::default();
    for k in 2..=terms {
        weight *= lambda / k as f64;
        series.add(weight * (k as f64).sqrt());
    }
    Ok(SeriesValue {
        value: 2.0 * lambda * decay * decay + decay * radical * series.total(),
        truncation_bound: radical * weight,
        terms_used: terms,
    })
}

/// Closed-form upper bound on `f(λ)` from `sqrt(x) <= x/sqrt(8) + 1/sqrt(2)`
/// for `x >= 2`.
pub fn er_f_closed_upper(lambda: f64) -> Result<f64> {
    check_lambda(lambda)?;
    let decay = (-lambda).exp();
    let radical = (3.0 * decay + 1.0).sqrt();
    Ok(2.0 * lambda * decay * decay
        + radical * ((lambda + 2.0) - decay * (3.0 * lambda + 2.0)) / 8f64.sqrt())
}

/// True iff the certified upper bound on `f(λ)` at
/// [`HYPOENERGETIC_TERMS`] terms is below 1.
pub fn hypoenergetic_check(lambda: f64) -> Result<bool> {
    Ok(er_f(lambda, HYPOENERGETIC_TERMS)?.upper() < 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ba_coefficients() {
        assert!((ba_nk(1) - 2.0 / 3.0).abs() < 1e-15);
        assert!((ba_nk(2) - 1.0 / 6.0).abs() < 1e-15);
        assert_eq!(ba_nk1(1), 0.0);
    }

    #[test]
    fn radicand_identity() {
        for k in 2..=50 {
            let direct = 3.0 * ba_nk1(k) / ba_nk(k) + k as f64;
            assert!((direct - ba_star_radicand(k)).abs() < 1e-12, "k = {k}");
        }
    }

    #[test]
    fn ba_constant() {
        let s = ba_limit_constant(100_001).unwrap();
        assert!((s.truncation_bound - 1.46059e-7).abs() < 1e-12);
        assert!((s.value - 0.95999).abs() < 1e-5);
        assert!(ba_limit_constant(20).is_err());
        assert!(ba_limit_constant(21).is_ok());
    }

    #[test]
    fn er_coefficients() {
        assert!((er_nk(1.0, 1) - (-1f64).exp()).abs() < 1e-15);
        assert!((er_nk1(1.0, 1) - (-2f64).exp()).abs() < 1e-15);
        for lambda in [0.3, 1.0, 2.5, 6.0] {
            let total: f64 = (0..60).map(|k| er_nk(lambda, k)).sum();
            assert!((total - 1.0).abs() < 1e-12, "λ = {lambda}");
        }
    }

    #[test]
    fn er_f_reference_values() {
        let s = er_f(4.0 / 3.0, 13).unwrap();
        assert!((s.truncation_bound - 9.04577e-9).abs() < 1e-13);
        assert!((s.value - 0.99911).abs() < 1e-5);
        assert!(er_f(1.0, 1).is_err());
        assert!(er_f(0.0, 10).is_err());
    }

    #[test]
    fn er_f_at_one_matches_log_space_oracle() {
        // independent route: terms from exp(k ln λ - ln k!) summed largest-last
        let lambda: f64 = 1.0;
        let mut ln_fact = 0.0;
        let mut terms = Vec::new();
        for k in 1..=20usize {
            ln_fact += (k as f64).ln();
            if k >= 2 {
                terms.push(((k as f64) * lambda.ln() - ln_fact).exp() * (k as f64).sqrt());
            }
        }
        terms.reverse();
        let series: f64 = terms.iter().sum();
        let d = (-lambda).exp();
        let oracle = 2.0 * lambda * d * d + d * (3.0 * d + 1.0).sqrt() * series;
        let got = er_f(1.0, 20).unwrap().value;
        assert!((got - oracle).abs() < 1e-13);
        assert!((got - 0.8585).abs() < 1e-4);
    }

    #[test]
    fn closed_upper() {
        assert!((er_f_closed_upper(2.0).unwrap() - 1.296).abs() < 1e-3);
        assert!(er_f_closed_upper(1e-9).unwrap().abs() < 1e-8);
        for i in 1..=50 {
            let lambda = 0.1 * i as f64;
            assert!(er_f(lambda, 40).unwrap().value <= er_f_closed_upper(lambda).unwrap());
        }
    }

    #[test]
    fn hypoenergetic() {
        assert!(hypoenergetic_check(4.0 / 3.0).unwrap());
        assert!(hypoenergetic_check(1.0).unwrap());
        assert!(hypoenergetic_check(0.5).unwrap());
        assert!(!hypoenergetic_check(3.0).unwrap());
        assert!(er_f(3.0, HYPOENERGETIC_TERMS).unwrap().value >= 1.0);
    }

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let mut s = NeumaierSum::default();
        s.add(1.0);
        for _ in 0..10 {
            s.add(1e-16);
        }
        s.add(-1.0);
        assert!((s.total() - 1e-15).abs() < 1e-30);
    }
}
