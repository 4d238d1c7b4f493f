//! Seeded Barabási–Albert tree and Erdős–Rényi `G(n, λ/n)` generators.
//!
//! Every generator is a pure function of its parameters and a 64-bit seed.
//! The stream is ChaCha8 seeded through [`rng_from_seed`]; experiments give
//! trial `i` the sub-seed [`derive_seed`]`(seed, i)` so results do not depend
//! on how trials are scheduled across threads.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::{Error, Result};

/// Largest `n` sampled pair by pair; above it ER sampling skips geometrically.
pub const ER_DENSE_LIMIT: usize = 4096;

pub type GraphRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> GraphRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Sub-seed for stream `index` of a run seeded with `seed`.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    splitmix64(seed ^ splitmix64(index))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Model {
    BaTree,
    Er,
}

/// A generator request.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    pub model: Model,
    pub n: usize,
    /// Expected degree for ER (`p = λ / n`); ignored for BA.
    pub lambda: f64,
    pub seed: u64,
}

impl GenSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::out_of_range("n", format!("{} < 2", self.n)));
        }
        if self.model == Model::Er {
            check_lambda(self.n, self.lambda)?;
        }
        Ok(())
    }

    pub fn generate(&self) -> Result<Graph> {
        match self.model {
            Model::BaTree => ba_tree(self.n, self.seed),
            Model::Er => er_graph(self.n, self.lambda, self.seed),
        }
    }
}

fn check_lambda(n: usize, lambda: f64) -> Result<()> {
    if !(lambda > 0.0 && lambda < n as f64) {
        return Err(Error::out_of_range(
            "lambda",
            format!("need 0 < λ < n = {n}, got {lambda}"),
        ));
    }
    Ok(())
}

/// Preferential-attachment tree on `n` vertices seeded from the edge `{0, 1}`.
///
/// Vertex `t` attaches to an existing vertex chosen with probability
/// proportional to its current degree. Every edge pushes both endpoints onto
/// `ends`, so a uniform draw from `ends` is exactly a degree-weighted draw.
pub fn ba_tree(n: usize, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(Error::out_of_range("n", format!("{n} < 2")));
    }
    let mut rng = rng_from_seed(seed);
    let mut ends = Vec::with_capacity(2 * (n - 1));
    let mut edges = Vec::with_capacity(n - 1);
    edges.push((0, 1));
    ends.extend([0, 1]);
    for t in 2..n {
        let target = ends[rng.gen_range(0..ends.len())];
        edges.push((target, t));
        ends.extend([target, t]);
    }
    Graph::from_edges(n, edges)
}

/// Erdős–Rényi graph with edge probability `p = λ / n`.
pub fn er_graph(n: usize, lambda: f64, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(Error::out_of_range("n", format!("{n} < 2")));
    }
    check_lambda(n, lambda)?;
    let p = lambda / n as f64;
    let mut rng = rng_from_seed(seed);
    let edges = if n <= ER_DENSE_LIMIT {
        er_pairwise(n, p, &mut rng)
    } else {
        er_skipping(n, p, &mut rng)
    };
    Graph::from_edges(n, edges)
}

fn er_pairwise<R: Rng>(n: usize, p: f64, rng: &mut R) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    edges
}

/// Walks the upper triangle row by row, jumping over runs of absent pairs
/// whose lengths are Geometric(p).
fn er_skipping<R: Rng>(n: usize, p: f64, rng: &mut R) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    let log_q = (-p).ln_1p();
    let (mut u, mut v) = (0usize, 0usize);
    loop {
        // 1 - U lies in (0, 1], so the log is finite.
        let r = 1.0 - rng.gen::<f64>();
        let skip = (r.ln() / log_q).floor();
        if skip >= u64::MAX as f64 {
            break;
        }
        let mut advance = skip as u64 + 1;
        // move `advance` positions along the sequence (0,1),(0,2),..,(1,2),..
        loop {
            let remaining = (n - 1 - v) as u64;
            if advance <= remaining {
                v += advance as usize;
                break;
            }
            advance -= remaining;
            u += 1;
            if u + 1 >= n {
                return edges;
            }
            v = u;
        }
        edges.push((u, v));
    }
    edges
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ba_small_cases() {
        for seed in 0..5 {
            let k2 = ba_tree(2, seed).unwrap();
            assert_eq!(k2.canonical_edges(), vec![(0, 1)]);
            let p3 = ba_tree(3, seed).unwrap();
            assert_eq!(p3.edge_count(), 2);
            let mut deg = p3.degrees();
            deg.sort_unstable();
            assert_eq!(deg, vec![1, 1, 2]);
        }
        assert!(ba_tree(1, 0).is_err());
    }

    #[test]
    fn ba_is_tree() {
        for seed in 0..20 {
            assert!(ba_tree(200, seed).unwrap().is_tree());
        }
    }

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(ba_tree(500, 9).unwrap(), ba_tree(500, 9).unwrap());
        assert_eq!(er_graph(300, 1.5, 9).unwrap(), er_graph(300, 1.5, 9).unwrap());
        assert_eq!(
            er_graph(5000, 1.5, 9).unwrap(),
            er_graph(5000, 1.5, 9).unwrap()
        );
        assert_ne!(ba_tree(500, 9).unwrap(), ba_tree(500, 10).unwrap());
    }

    #[test]
    fn er_parameter_range() {
        assert!(er_graph(10, 0.0, 1).is_err());
        assert!(er_graph(10, 10.0, 1).is_err());
        assert!(er_graph(10, -1.0, 1).is_err());
        assert!(er_graph(10, f64::NAN, 1).is_err());
        assert!(er_graph(1, 0.5, 1).is_err());
        assert!(er_graph(10, 9.99, 1).is_ok());
    }

    #[test]
    fn skipping_sampler_edge_density() {
        // mean |E| = C(n,2) λ/n ≈ λ n / 2
        let n = 20_000;
        let lambda = 2.0;
        let g = er_graph(n, lambda, 3).unwrap();
        let expected = (n as f64 - 1.0) * lambda / 2.0;
        let sd = expected.sqrt();
        assert!((g.edge_count() as f64 - expected).abs() < 5.0 * sd);
    }

    #[test]
    fn skipping_sampler_covers_all_pairs_at_high_density() {
        let mut rng = rng_from_seed(1);
        let edges = er_skipping(30, 0.999_999, &mut rng);
        assert_eq!(edges.len(), 30 * 29 / 2);
        assert!(edges.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn derived_seeds_differ() {
        let seeds: std::collections::BTreeSet<_> = (0..1000).map(|i| derive_seed(42, i)).collect();
        assert_eq!(seeds.len(), 1000);
        assert_eq!(derive_seed(42, 7), derive_seed(42, 7));
    }
}
