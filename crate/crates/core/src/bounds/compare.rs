//! When the star bound beats the degree bound for trees.

use serde::Serialize;

use super::{ad_from_degrees, star_sum};
use crate::graph::Graph;
use crate::{Error, Result};

/// `f(x, y) = sqrt(4x + 4(y - 1)) - sqrt(4x + y)`; per inner vertex with
/// `x = l(v)` and `y = δ(v)` this is the degree-bound term minus the star term.
pub fn f_leaf_inner(x: f64, y: f64) -> f64 {
    (4.0 * x + 4.0 * (y - 1.0)).sqrt() - (4.0 * x + y).sqrt()
}

/// The four sufficient conditions under which the star bound is at most the
/// tree degree bound. Each condition implies the one before it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AdTpComparison {
    /// `(v, f(l(v), δ(v)))` for inner vertices with `δ(v) >= 1`.
    pub f_values: Vec<(usize, f64)>,
    /// Inner vertices with exactly one inner neighbor.
    pub v1: Vec<usize>,
    /// Inner vertices with at least two inner neighbors.
    pub v2: Vec<usize>,
    /// Smallest leaf count over `v1`.
    pub l1: Option<usize>,
    /// Largest leaf count over `v2`.
    pub l2: Option<usize>,
    pub cond_i: bool,
    pub cond_ii: bool,
    pub cond_iii: bool,
    pub cond_iv: bool,
    pub tp: f64,
    pub ad: f64,
}

/// Evaluates the comparison on a tree with at least three vertices.
///
/// A star center has `δ = 0`, outside the domain of `f`; it belongs to
/// neither `v1` nor `v2`, so for a star every sum is empty and each
/// condition reads `0 >= 0`.
pub fn ad_tp_comparison(t: &Graph) -> Result<AdTpComparison> {
    if t.n() < 3 || !t.is_tree() {
        return Err(Error::Inapplicable(
            "comparison requires a tree on at least 3 vertices",
        ));
    }
    let p = t.degree_profile();
    let l = |v: usize| p.leaf_neighbors[v];
    let (v1, v2): (Vec<usize>, Vec<usize>) = p
        .inner
        .iter()
        .copied()
        .filter(|&v| p.inner_neighbors[v] >= 1)
        .partition(|&v| p.inner_neighbors[v] == 1);

    let f_values: Vec<(usize, f64)> = p
        .inner
        .iter()
        .filter(|&&v| p.inner_neighbors[v] >= 1)
        .map(|&v| (v, f_leaf_inner(l(v) as f64, p.inner_neighbors[v] as f64)))
        .collect();

    let sum_i: f64 = f_values.iter().map(|&(_, f)| f).sum();
    let sum_ii: f64 = v1.iter().map(|&v| f_leaf_inner(l(v) as f64, 1.0)).sum::<f64>()
        + v2.iter().map(|&v| f_leaf_inner(l(v) as f64, 2.0)).sum::<f64>();

    let l1 = v1.iter().map(|&v| l(v)).min();
    let l2 = v2.iter().map(|&v| l(v)).max();
    let lhs_iii = l2.map_or(0.0, |l2| {
        let l2 = l2 as f64;
        ((l2 + 1.0).sqrt() - (l2 + 0.5).sqrt()) * v2.len() as f64
    });
    let rhs_iii = l1.map_or(0.0, |l1| {
        let l1 = l1 as f64;
        ((l1 + 0.25).sqrt() - l1.sqrt()) * v1.len() as f64
    });
    let n = t.n() as f64;
    let cond_iv = 2.0 * (n.sqrt() - (n - 0.5).sqrt()) * v2.len() as f64 >= v1.len() as f64;

    Ok(AdTpComparison {
        cond_i: sum_i >= 0.0,
        cond_ii: sum_ii >= 0.0,
        cond_iii: lhs_iii >= rhs_iii,
        cond_iv,
        f_values,
        v1,
        v2,
        l1,
        l2,
        tp: star_sum(&p),
        ad: ad_from_degrees(&p.degree),
    })
}

/// Whether the star bound improves the degree-root bound on the double star
/// `S_{p,q}`, i.e. `sqrt(4p+1) + sqrt(4q+1) <= 2 (sqrt(p) + sqrt(q+1))`.
pub fn double_star_improvement_check(p: usize, q: usize) -> Result<bool> {
    if p < 1 || p > q {
        return Err(Error::out_of_range("double star", format!("need 1 <= p <= q, got p={p}, q={q}")));
    }
    let (p, q) = (p as f64, q as f64);
    Ok((4.0 * p + 1.0).sqrt() + (4.0 * q + 1.0).sqrt() <= 2.0 * (p.sqrt() + (q + 1.0).sqrt()))
}

/// Returns `k` when `4 l(v) + δ(v) = k` for every inner vertex, the case in
/// which the local and global bounds coincide.
pub fn equality_condition_check(g: &Graph) -> Result<Option<usize>> {
    if g.n() < 3 || !g.is_connected() {
        return Err(Error::Inapplicable(
            "equality check requires a connected graph on at least 3 vertices",
        ));
    }
    let p = g.degree_profile();
    let mut values = p
        .inner
        .iter()
        .map(|&v| 4 * p.leaf_neighbors[v] + p.inner_neighbors[v]);
    let first = values.next();
    Ok(first.filter(|&k| values.all(|x| x == k)))
}
