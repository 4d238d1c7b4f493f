//! Spectra, energy, and characteristic polynomials.

mod eigen;
mod sachs;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::graph::Graph;
use crate::{Error, Result};

pub use eigen::{symmetric_eigenvalues_in_place, MAX_SWEEPS};
pub use sachs::{sachs_char_poly, SACHS_MAX_N};

/// Symmetric real edge weights on the vertices `0..n`, zero on non-edges.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    n: usize,
    weights: BTreeMap<(usize, usize), f64>,
}

impl WeightedGraph {
    /// Builds from `(u, v, w)` triples. Zero weights are dropped; loops,
    /// repeated pairs, non-finite weights and ids `>= n` are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, f64)>,
    {
        let mut weights = BTreeMap::new();
        for (u, v, w) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !w.is_finite() {
                return Err(Error::out_of_range("edge weight", w.to_string()));
            }
            let key = (u.min(v), u.max(v));
            if weights.contains_key(&key) {
                return Err(Error::DuplicateEdge(key.0, key.1));
            }
            if w != 0.0 {
                weights.insert(key, w);
            }
        }
        Ok(WeightedGraph { n, weights })
    }

    /// Unit weights on the edges of `g`.
    pub fn from_graph(g: &Graph) -> Self {
        WeightedGraph {
            n: g.n(),
            weights: g.edges().iter().map(|&(u, v)| ((u, v), 1.0)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weight(&self, u: usize, v: usize) -> f64 {
        self.weights
            .get(&(u.min(v), u.max(v)))
            .copied()
            .unwrap_or(0.0)
    }

    /// Non-zero entries as `(u, v, w)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.weights.iter().map(|(&(u, v), &w)| (u, v, w))
    }

    /// Row-major dense weight matrix.
    pub fn to_dense(&self) -> Vec<f64> {
        let n = self.n;
        let mut a = vec![0.0; n * n];
        for (u, v, w) in self.edges() {
            a[u * n + v] = w;
            a[v * n + u] = w;
        }
        a
    }

    /// Largest absolute row sum, the scale used for eigenvalue accuracy.
    pub fn max_row_sum(&self) -> f64 {
        let mut rows = vec![0.0; self.n];
        for (u, v, w) in self.edges() {
            rows[u] += w.abs();
            rows[v] += w.abs();
        }
        rows.into_iter().fold(0.0, f64::max)
    }
}

/// Eigenvalues sorted descending, and their absolute sum.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub energy: f64,
}

impl Spectrum {
    fn from_values(mut eigenvalues: Vec<f64>) -> Self {
        eigenvalues.sort_by(|a, b| b.total_cmp(a));
        let energy = abs_sum(&eigenvalues);
        Spectrum {
            eigenvalues,
            energy,
        }
    }
}

/// Coefficients `b_0..b_n` of `φ(x) = Σ b_k x^{n-k}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CharPoly {
    pub coeffs: Vec<f64>,
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().fold(0.0, |acc, &b| acc * x + b)
    }

    /// Largest `|a_k - b_k| / max(1, |b_k|)` against a reference polynomial.
    pub fn max_relative_deviation(&self, reference: &CharPoly) -> f64 {
        assert_eq!(self.coeffs.len(), reference.coeffs.len());
        self.coeffs
            .iter()
            .zip(&reference.coeffs)
            .map(|(a, b)| (a - b).abs() / b.abs().max(1.0))
            .fold(0.0, f64::max)
    }
}

fn abs_sum(values: &[f64]) -> f64 {
    let mut v: Vec<f64> = values.iter().map(|x| x.abs()).collect();
    v.sort_by(f64::total_cmp);
    v.iter().sum()
}

/// Spectrum of the weight matrix.
pub fn symmetric_eigenvalues(wg: &WeightedGraph) -> Result<Spectrum> {
    let mut a = wg.to_dense();
    let values = symmetric_eigenvalues_in_place(&mut a, wg.n())?;
    Ok(Spectrum::from_values(values))
}

/// Adjacency spectrum of `g`, assembled component by component.
pub fn spectrum(g: &Graph) -> Result<Spectrum> {
    let mut values = Vec::with_capacity(g.n());
    for component in g.connected_components() {
        if component.len() == 1 {
            values.push(0.0);
            continue;
        }
        let sub = g.induced_subgraph(&component);
        let mut a = sub.adjacency_matrix();
        values.extend(symmetric_eigenvalues_in_place(&mut a, sub.n())?);
    }
    Ok(Spectrum::from_values(values))
}

/// `E(G) = Σ |λ_i|` over the adjacency eigenvalues.
pub fn energy(g: &Graph) -> Result<f64> {
    Ok(spectrum(g)?.energy)
}

pub fn energy_weighted(wg: &WeightedGraph) -> Result<f64> {
    Ok(symmetric_eigenvalues(wg)?.energy)
}

/// Energy of a star with the given edge weights, `2 sqrt(Σ w²)`.
pub fn star_energy_closed_form(weights: &[f64]) -> f64 {
    2.0 * weights.iter().map(|w| w * w).sum::<f64>().sqrt()
}

/// Expands `Π (x - λ_i)`.
pub fn char_poly_from_spectrum(s: &Spectrum) -> CharPoly {
    let mut coeffs = vec![1.0];
    for &lambda in &s.eigenvalues {
        let mut next = coeffs.clone();
        next.push(0.0);
        for (k, &c) in coeffs.iter().enumerate() {
            next[k + 1] -= lambda * c;
        }
        coeffs = next;
    }
    CharPoly { coeffs }
}
