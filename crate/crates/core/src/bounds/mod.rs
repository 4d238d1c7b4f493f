//! Closed-form upper bounds on graph energy.
//!
//! Besides McClelland, Koolen–Moulton and the degree-root bounds, this module
//! evaluates the leaf-aware bound obtained from covering a graph by weighted
//! stars centered at inner vertices (leaf edges weight 1, inner edges weight
//! 1/2): each star contributes `sqrt(3 l(v) + d(v))`, and by Ky-Fan the sum
//! dominates the energy.

mod compare;
mod stars;

use serde::Serialize;

use crate::graph::{DegreeProfile, Graph};
use crate::{Error, Result};

pub use compare::{
    ad_tp_comparison, double_star_improvement_check, equality_condition_check, f_leaf_inner,
    AdTpComparison,
};
pub use stars::{star_decomposition, Star, StarDecomposition, StarWeight};

/// `sqrt(2 m n)`.
pub fn mcclelland(g: &Graph) -> f64 {
    (2.0 * g.edge_count() as f64 * g.n() as f64).sqrt()
}

/// `2m/n + sqrt((n-1)(2m - (2m/n)²))`, defined when `2m >= n`.
pub fn koolen_moulton(g: &Graph) -> Option<f64> {
    let n = g.n() as f64;
    let two_m = 2.0 * g.edge_count() as f64;
    if g.n() == 0 || two_m < n {
        return None;
    }
    let avg = two_m / n;
    // clamp the rounding residue for regular graphs, where the radicand is 0
    Some(avg + ((n - 1.0) * (two_m - avg * avg)).max(0.0).sqrt())
}

/// `Σ sqrt(d_i)`.
pub fn aj_bound(g: &Graph) -> f64 {
    (0..g.n()).map(|v| (g.degree(v) as f64).sqrt()).sum()
}

/// Tree bound `2 sqrt(Δ) + Σ_{i>=2} 2 sqrt(d_i - 1)` over degrees sorted
/// descending (`d_1 = Δ`). Defined for trees with at least three vertices.
pub fn ad_bound(t: &Graph) -> Option<f64> {
    if t.n() < 3 || !t.is_tree() {
        return None;
    }
    Some(ad_from_degrees(&t.degrees()))
}

fn ad_from_degrees(degrees: &[usize]) -> f64 {
    let mut d = degrees.to_vec();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let rest: f64 = d[1..].iter().map(|&x| 2.0 * ((x - 1) as f64).sqrt()).sum();
    rest + 2.0 * (d[0] as f64).sqrt()
}

/// Sum of the star energies: `Σ_{v ∈ V'} sqrt(3 l(v) + d(v))`.
fn star_sum(p: &DegreeProfile) -> f64 {
    p.inner
        .iter()
        .map(|&v| ((3 * p.leaf_neighbors[v] + p.degree[v]) as f64).sqrt())
        .sum()
}

/// Local bound for connected graphs on at least three vertices.
pub fn tp_bound(g: &Graph) -> Option<f64> {
    tp_applicable(g).then(|| star_sum(&g.degree_profile()))
}

/// The same quantity written as `Σ_{v ∈ V'} sqrt(4 l(v) + δ(v))`.
pub fn tp_bound_inner_form(g: &Graph) -> Option<f64> {
    if !tp_applicable(g) {
        return None;
    }
    let p = g.degree_profile();
    Some(
        p.inner
            .iter()
            .map(|&v| ((4 * p.leaf_neighbors[v] + p.inner_neighbors[v]) as f64).sqrt())
            .sum(),
    )
}

fn tp_applicable(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected()
}

/// General local bound `2 e11 + Σ_{v ∈ V'} sqrt(3 l(v) + d(v))`, valid for
/// every graph.
pub fn tpg_bound(g: &Graph) -> f64 {
    tpg_from_profile(&g.degree_profile())
}

fn tpg_from_profile(p: &DegreeProfile) -> f64 {
    2.0 * p.e11 as f64 + star_sum(p)
}

/// `2 e11 + sqrt(2 (|V| - |L|)(|E| + |L| - 3 e11))`; requires no isolated
/// vertices.
pub fn global_bound(g: &Graph) -> Result<f64> {
    let p = g.degree_profile();
    if !p.isolated.is_empty() {
        return Err(Error::Inapplicable(
            "global bound requires a graph without isolated vertices",
        ));
    }
    Ok(global_from_profile(&p, 0))
}

/// Variant of [`global_bound`] that discounts isolated vertices; always
/// applies.
pub fn global_bound_isolated(g: &Graph) -> f64 {
    let p = g.degree_profile();
    global_from_profile(&p, p.isolated.len())
}

fn global_from_profile(p: &DegreeProfile, isolated: usize) -> f64 {
    let vertices = (p.n() - p.leaves.len() - isolated) as f64;
    let weight = (p.edge_count() + p.leaves.len() - 3 * p.e11) as f64;
    2.0 * p.e11 as f64 + (2.0 * vertices * weight).sqrt()
}

/// Bound from the degree histograms,
/// `2 e11 + Σ_{k>=2} |N_k| sqrt(3 |N_{k,1}| / |N_k| + k)`.
pub fn degree_hist_bound(p: &DegreeProfile) -> f64 {
    let buckets: f64 = p
        .hist_degree
        .range(2..)
        .filter(|&(_, &count)| count > 0)
        .map(|(&k, &count)| {
            let leaves = p.hist_leaf_parent.get(&k).copied().unwrap_or(0) as f64;
            let count = count as f64;
            count * (3.0 * leaves / count + k as f64).sqrt()
        })
        .sum();
    2.0 * p.e11 as f64 + buckets
}

/// Every bound evaluated on one graph; `None` marks an inapplicable bound.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub mcclelland: f64,
    pub koolen_moulton: Option<f64>,
    pub aj: f64,
    pub ad: Option<f64>,
    pub tp: Option<f64>,
    pub tpg: f64,
    pub global: Option<f64>,
    pub global_isolated: f64,
    pub degree_hist: f64,
}

impl BoundReport {
    pub fn new(g: &Graph) -> Self {
        Self::with_profile(g, &g.degree_profile())
    }

    /// Uses a precomputed profile of `g`.
    pub fn with_profile(g: &Graph, p: &DegreeProfile) -> Self {
        let connected = g.is_connected();
        let is_tree = connected && g.edge_count() + 1 == g.n();
        BoundReport {
            mcclelland: mcclelland(g),
            koolen_moulton: koolen_moulton(g),
            aj: aj_bound(g),
            ad: (is_tree && g.n() >= 3).then(|| ad_from_degrees(&p.degree)),
            tp: (connected && g.n() >= 3).then(|| star_sum(p)),
            tpg: tpg_from_profile(p),
            global: p.isolated.is_empty().then(|| global_from_profile(p, 0)),
            global_isolated: global_from_profile(p, p.isolated.len()),
            degree_hist: degree_hist_bound(p),
        }
    }

    /// `(name, value)` for every applicable bound.
    pub fn applicable(&self) -> Vec<(&'static str, f64)> {
        let all = [
            ("mcclelland", Some(self.mcclelland)),
            ("koolen_moulton", self.koolen_moulton),
            ("aj", Some(self.aj)),
            ("ad", self.ad),
            ("tp", self.tp),
            ("tpg", Some(self.tpg)),
            ("global", self.global),
            ("global_isolated", Some(self.global_isolated)),
            ("degree_hist", Some(self.degree_hist)),
        ];
        all.into_iter()
            .filter_map(|(name, v)| v.map(|v| (name, v)))
            .collect()
    }

    /// First bound that `energy` exceeds by more than `slack`.
    pub fn first_violation(&self, energy: f64, slack: f64) -> Option<(&'static str, f64)> {
        self.applicable()
            .into_iter()
            .find(|&(_, bound)| energy > bound + slack)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, star};

    const TOL: f64 = 1e-12;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < TOL
    }

    #[test]
    fn mcclelland_values() {
        assert!(close(mcclelland(&path(2).unwrap()), 2.0));
        assert!(close(mcclelland(&path(3).unwrap()), 12f64.sqrt()));
        assert_eq!(mcclelland(&Graph::empty(4)), 0.0);
    }

    #[test]
    fn koolen_moulton_values() {
        assert!(close(koolen_moulton(&complete(3).unwrap()).unwrap(), 4.0));
        assert!(close(koolen_moulton(&path(2).unwrap()).unwrap(), 2.0));
        let p4 = koolen_moulton(&path(4).unwrap()).unwrap();
        assert!(close(p4, 1.5 + (3.0f64 * (6.0 - 2.25)).sqrt()));
        assert!((p4 - 4.854).abs() < 1e-3);
        // 2m = 2 < n = 3
        assert_eq!(koolen_moulton(&Graph::from_edges(3, [(0, 1)]).unwrap()), None);
    }

    #[test]
    fn aj_values() {
        for n in 1..20 {
            let expect = n as f64 + (n as f64).sqrt();
            assert!(close(aj_bound(&star(n).unwrap()), expect));
        }
        assert!(close(aj_bound(&path(4).unwrap()), 2.0 + 2.0 * 2f64.sqrt()));
        assert!(close(aj_bound(&path(2).unwrap()), 2.0));
    }

    #[test]
    fn ad_values() {
        for n in 2..20 {
            assert!(close(ad_bound(&star(n).unwrap()).unwrap(), 2.0 * (n as f64).sqrt()));
        }
        assert!(close(ad_bound(&path(3).unwrap()).unwrap(), 2.0 * 2f64.sqrt()));
        assert!(close(ad_bound(&path(4).unwrap()).unwrap(), 2.0 + 2.0 * 2f64.sqrt()));
        assert_eq!(ad_bound(&cycle(4).unwrap()), None);
        assert_eq!(ad_bound(&path(2).unwrap()), None);
    }

    #[test]
    fn tp_values() {
        for n in 2..30 {
            assert!(close(tp_bound(&star(n).unwrap()).unwrap(), 2.0 * (n as f64).sqrt()));
        }
        assert!(close(tp_bound(&path(4).unwrap()).unwrap(), 2.0 * 5f64.sqrt()));
        for n in 3..10 {
            assert!(close(tp_bound(&cycle(n).unwrap()).unwrap(), n as f64 * 2f64.sqrt()));
        }
        assert_eq!(tp_bound(&path(2).unwrap()), None);
        assert_eq!(tp_bound(&Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap()), None);
    }

    #[test]
    fn tp_forms_agree() {
        for g in [path(7).unwrap(), star(6).unwrap(), cycle(5).unwrap(), complete(5).unwrap()] {
            assert!(close(tp_bound(&g).unwrap(), tp_bound_inner_form(&g).unwrap()));
        }
    }

    #[test]
    fn tpg_values() {
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(close(tpg_bound(&two_k2), 4.0));
        assert!(close(tpg_bound(&star(7).unwrap()), 2.0 * 7f64.sqrt()));
        assert_eq!(tpg_bound(&Graph::empty(1)), 0.0);
    }

    #[test]
    fn global_values() {
        for n in 2..20 {
            assert!(close(global_bound(&star(n).unwrap()).unwrap(), 2.0 * (n as f64).sqrt()));
        }
        assert!(close(global_bound(&path(4).unwrap()).unwrap(), 20f64.sqrt()));
        assert!(close(global_bound(&path(2).unwrap()).unwrap(), 2.0));
        let with_isolated = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(matches!(global_bound(&with_isolated), Err(Error::Inapplicable(_))));
        assert!(close(global_bound_isolated(&with_isolated), 20f64.sqrt()));
    }

    #[test]
    fn degree_hist_values() {
        let s5 = star(5).unwrap().degree_profile();
        assert!(close(degree_hist_bound(&s5), 2.0 * 5f64.sqrt()));
        for d in [2usize, 3, 4] {
            let g = if d == 2 { cycle(8).unwrap() } else { complete(d + 1).unwrap() };
            let expect = g.n() as f64 * (d as f64).sqrt();
            assert!(close(degree_hist_bound(&g.degree_profile()), expect));
        }
        assert!(close(degree_hist_bound(&path(4).unwrap().degree_profile()), 2.0 * 5f64.sqrt()));
    }

    #[test]
    fn report_flags() {
        let r = BoundReport::new(&path(2).unwrap());
        assert!(close(r.tpg, 2.0));
        assert_eq!(r.tp, None);
        assert_eq!(r.ad, None);
        let r = BoundReport::new(&path(4).unwrap());
        assert!(r.tp.is_some() && r.ad.is_some() && r.global.is_some());
        assert_eq!(r.applicable().len(), 9);
        assert_eq!(r.first_violation(4.47, 0.0), None);
        assert_eq!(r.first_violation(4.6, 0.0).map(|(name, _)| name), Some("tp"));
    }
}
