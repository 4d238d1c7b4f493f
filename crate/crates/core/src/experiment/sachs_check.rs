use rand::Rng;
use serde::Serialize;

use crate::par;
use crate::random::{derive_seed, rng_from_seed};
use crate::spectral::{char_poly_from_spectrum, sachs_char_poly, symmetric_eigenvalues, WeightedGraph};
use crate::{Error, Result};

/// Largest size the self-check accepts.
pub const SACHS_CHECK_MAX_N: usize = 12;

/// Per-coefficient tolerance, relative to `max(1, |b_k|)`.
pub const SACHS_CHECK_TOLERANCE: f64 = 1e-6;

/// Each pair is an edge with probability 1/2, weight uniform in
/// `±[0.25, 2)`.
pub fn random_weighted_graph<R: Rng>(n: usize, rng: &mut R) -> WeightedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.5) {
                let magnitude = rng.gen_range(0.25..2.0);
                let w = if rng.gen_bool(0.5) { magnitude } else { -magnitude };
                edges.push((u, v, w));
            }
        }
    }
    WeightedGraph::new(n, edges).expect("generated pairs are distinct")
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SachsCheckReport {
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub passed: bool,
}

/// Compares Sachs coefficients with the expansion of `Π (x - λ_i)` on
/// `trials` random weighted graphs of order `n`.
pub fn sachs_check(n: usize, trials: usize, seed: u64, threads: usize) -> Result<SachsCheckReport> {
    if n == 0 || n > SACHS_CHECK_MAX_N {
        return Err(Error::out_of_range(
            "sachs-check n",
            format!("need 1 <= n <= {SACHS_CHECK_MAX_N}, got {n}"),
        ));
    }
    if trials == 0 {
        return Err(Error::out_of_range("trials", "need at least one trial"));
    }
    let deviations = par::map_indexed(trials, threads, |i| -> Result<f64> {
        let mut rng = rng_from_seed(derive_seed(seed, i as u64));
        let wg = random_weighted_graph(n, &mut rng);
        let sachs = sachs_char_poly(&wg)?;
        let expanded = char_poly_from_spectrum(&symmetric_eigenvalues(&wg)?);
        Ok(expanded.max_relative_deviation(&sachs))
    });
    let mut max_deviation: f64 = 0.0;
    for d in deviations {
        max_deviation = max_deviation.max(d?);
    }
    Ok(SachsCheckReport {
        n,
        trials,
        seed,
        max_deviation,
        tolerance: SACHS_CHECK_TOLERANCE,
        passed: max_deviation < SACHS_CHECK_TOLERANCE,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn passes_at_six() {
        let r = sachs_check(6, 100, 1, 0).unwrap();
        assert!(r.passed, "max deviation {}", r.max_deviation);
    }

    #[test]
    fn single_vertex_is_trivial() {
        let r = sachs_check(1, 3, 1, 1).unwrap();
        assert_eq!(r.max_deviation, 0.0);
        assert!(r.passed);
    }

    #[test]
    fn size_cap() {
        assert!(sachs_check(13, 1, 1, 1).unwrap_err().is_validation());
        assert!(sachs_check(0, 1, 1, 1).is_err());
        assert!(sachs_check(4, 0, 1, 1).is_err());
    }
}
