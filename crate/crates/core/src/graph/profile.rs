use std::collections::BTreeMap;

use serde::Serialize;

use super::Graph;

/// Per-vertex leaf statistics and the global counts derived from them.
///
/// A leaf has degree 1, an inner vertex degree at least 2, an isolated vertex
/// degree 0. For every vertex `degree = leaf_neighbors + inner_neighbors`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegreeProfile {
    pub degree: Vec<usize>,
    /// `l(v)`: neighbors of degree 1.
    pub leaf_neighbors: Vec<usize>,
    /// `δ(v)`: neighbors of degree at least 2.
    pub inner_neighbors: Vec<usize>,
    pub leaves: Vec<usize>,
    pub inner: Vec<usize>,
    pub isolated: Vec<usize>,
    /// Edges whose endpoints are both leaves (isolated `K2` components).
    pub e11: usize,
    /// `k -> |N_k|`, the number of vertices of degree `k` (including `k = 0`).
    pub hist_degree: BTreeMap<usize, usize>,
    /// `k -> |N_{k,1}|`, the number of leaves whose neighbor has degree `k`.
    pub hist_leaf_parent: BTreeMap<usize, usize>,
}

impl DegreeProfile {
    pub fn new(g: &Graph) -> Self {
        let degree = g.degrees();
        let n = g.n();
        let mut leaf_neighbors = vec![0; n];
        let mut inner_neighbors = vec![0; n];
        let mut leaves = Vec::new();
        let mut inner = Vec::new();
        let mut isolated = Vec::new();
        let mut hist_degree = BTreeMap::new();
        let mut hist_leaf_parent = BTreeMap::new();

        for v in 0..n {
            for &w in g.neighbors(v) {
                if degree[w] == 1 {
                    leaf_neighbors[v] += 1;
                } else {
                    inner_neighbors[v] += 1;
                }
            }
            match degree[v] {
                0 => isolated.push(v),
                1 => {
                    leaves.push(v);
                    let parent = g.neighbors(v)[0];
                    *hist_leaf_parent.entry(degree[parent]).or_insert(0) += 1;
                }
                _ => inner.push(v),
            }
            *hist_degree.entry(degree[v]).or_insert(0) += 1;
        }

        let e11 = g
            .edges()
            .iter()
            .filter(|&&(u, v)| degree[u] == 1 && degree[v] == 1)
            .count();

        DegreeProfile {
            degree,
            leaf_neighbors,
            inner_neighbors,
            leaves,
            inner,
            isolated,
            e11,
            hist_degree,
            hist_leaf_parent,
        }
    }

    pub fn n(&self) -> usize {
        self.degree.len()
    }

    /// Number of edges, recovered from the handshake identity.
    pub fn edge_count(&self) -> usize {
        self.degree.iter().sum::<usize>() / 2
    }

    pub fn max_degree(&self) -> usize {
        self.degree.iter().copied().max().unwrap_or(0)
    }

    /// Checks every structural identity the profile must satisfy, returning a
    /// description of the first one that fails.
    pub fn check_invariants(&self, edge_count: usize) -> Result<(), String> {
        let n = self.n();
        for v in 0..n {
            if self.degree[v] != self.leaf_neighbors[v] + self.inner_neighbors[v] {
                return Err(format!("d != l + δ at vertex {v}"));
            }
        }
        if self.degree.iter().sum::<usize>() != 2 * edge_count {
            return Err("degree sum != 2|E|".into());
        }
        let l_sum: usize = self.inner.iter().map(|&v| self.leaf_neighbors[v]).sum();
        if l_sum + 2 * self.e11 != self.leaves.len() {
            return Err("Σ_{V'} l(v) != |L| - 2 e11".into());
        }
        if self.isolated.is_empty() {
            let d_sum: usize = self.inner.iter().map(|&v| self.degree[v]).sum();
            if d_sum + self.leaves.len() != 2 * edge_count {
                return Err("Σ_{V'} d(v) != 2|E| - |L|".into());
            }
        }
        if self.leaves.len() + self.inner.len() + self.isolated.len() != n {
            return Err("L, V', I do not partition V".into());
        }
        if self.hist_degree.values().sum::<usize>() != n {
            return Err("Σ |N_k| != n".into());
        }
        if self.hist_degree.iter().map(|(k, c)| k * c).sum::<usize>() != 2 * edge_count {
            return Err("Σ k |N_k| != 2|E|".into());
        }
        if self.hist_leaf_parent.values().sum::<usize>() != self.leaves.len() {
            return Err("Σ |N_{k,1}| != |L|".into());
        }
        if self.hist_leaf_parent.get(&1).copied().unwrap_or(0) != 2 * self.e11 {
            return Err("|N_{1,1}| != 2 e11".into());
        }
        Ok(())
    }
}
