use std::collections::BTreeMap;

use serde::Serialize;

use crate::graph::Graph;
use crate::spectral::{star_energy_closed_form, WeightedGraph};
use crate::{Error, Result};

/// Edge weight inside a star: 1 towards a leaf, 1/2 towards an inner vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StarWeight {
    Half,
    One,
}

impl StarWeight {
    /// The weight in units of 1/2.
    pub fn halves(self) -> u32 {
        match self {
            StarWeight::Half => 1,
            StarWeight::One => 2,
        }
    }

    pub fn value(self) -> f64 {
        self.halves() as f64 / 2.0
    }
}

/// The star `S(v)`: `center` joined to each of its neighbors.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Star {
    pub center: usize,
    pub rays: Vec<(usize, StarWeight)>,
}

impl Star {
    pub fn weights(&self) -> Vec<f64> {
        self.rays.iter().map(|&(_, w)| w.value()).collect()
    }

    /// `2 sqrt(Σ w²)`.
    pub fn energy(&self) -> f64 {
        star_energy_closed_form(&self.weights())
    }

    /// The star as a weighted graph on its own vertices, center relabelled to
    /// 0 and the rays to `1..=rays.len()` in order.
    pub fn to_weighted_graph(&self) -> WeightedGraph {
        WeightedGraph::new(
            self.rays.len() + 1,
            self.rays
                .iter()
                .enumerate()
                .map(|(i, &(_, w))| (0, i + 1, w.value())),
        )
        .expect("a star is a simple graph")
    }
}

/// Cover of a graph by the weighted stars centered at its inner vertices.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StarDecomposition {
    pub n: usize,
    pub stars: Vec<Star>,
}

impl StarDecomposition {
    /// Sum of the stars' weight matrices, in halves, keyed by `(u, v)` with
    /// `u < v`.
    pub fn superposition(&self) -> BTreeMap<(usize, usize), u32> {
        let mut total = BTreeMap::new();
        for star in &self.stars {
            for &(w, weight) in &star.rays {
                let key = (star.center.min(w), star.center.max(w));
                *total.entry(key).or_insert(0) += weight.halves();
            }
        }
        total
    }

    /// True iff the superposed weight matrices equal the adjacency matrix of
    /// `g` exactly.
    pub fn reproduces(&self, g: &Graph) -> bool {
        let total = self.superposition();
        total.len() == g.edge_count()
            && total
                .iter()
                .all(|(&(u, v), &halves)| halves == 2 && g.has_edge(u, v))
    }

    /// `Σ_v E(S(v))`.
    pub fn energy_sum(&self) -> f64 {
        self.stars.iter().map(Star::energy).sum()
    }
}

/// Star decomposition of a connected graph on at least three vertices.
pub fn star_decomposition(g: &Graph) -> Result<StarDecomposition> {
    if g.n() < 3 || !g.is_connected() {
        return Err(Error::Inapplicable(
            "star decomposition requires a connected graph on at least 3 vertices",
        ));
    }
    let stars = (0..g.n())
        .filter(|&v| g.degree(v) >= 2)
        .map(|v| Star {
            center: v,
            rays: g
                .neighbors(v)
                .iter()
                .map(|&w| {
                    let weight = if g.degree(w) == 1 {
                        StarWeight::One
                    } else {
                        StarWeight::Half
                    };
                    (w, weight)
                })
                .collect(),
        })
        .collect();
    Ok(StarDecomposition { n: g.n(), stars })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::tp_bound;
    use crate::graph::{complete, cycle, path, star};
    use crate::spectral::{energy, energy_weighted};

    #[test]
    fn p4_stars() {
        let g = path(4).unwrap();
        let d = star_decomposition(&g).unwrap();
        assert_eq!(d.stars.len(), 2);
        for s in &d.stars {
            let mut w = s.weights();
            w.sort_by(f64::total_cmp);
            assert_eq!(w, vec![0.5, 1.0]);
            assert!((s.energy() - 5f64.sqrt()).abs() < 1e-12);
        }
        assert!(d.reproduces(&g));
    }

    #[test]
    fn star_is_one_star() {
        let g = star(6).unwrap();
        let d = star_decomposition(&g).unwrap();
        assert_eq!(d.stars.len(), 1);
        assert!(d.stars[0].rays.iter().all(|&(_, w)| w == StarWeight::One));
        assert!(d.reproduces(&g));
    }

    #[test]
    fn triangle_stars() {
        let g = cycle(3).unwrap();
        let d = star_decomposition(&g).unwrap();
        assert_eq!(d.stars.len(), 3);
        for s in &d.stars {
            assert_eq!(s.weights(), vec![0.5, 0.5]);
            assert!((s.energy() - 2f64.sqrt()).abs() < 1e-12);
        }
        assert!(d.reproduces(&g));
    }

    #[test]
    fn ky_fan_and_tp_agree() {
        for g in [path(9).unwrap(), complete(6).unwrap(), cycle(7).unwrap()] {
            let d = star_decomposition(&g).unwrap();
            assert!((d.energy_sum() - tp_bound(&g).unwrap()).abs() < 1e-9);
            let eigen_sum: f64 = d
                .stars
                .iter()
                .map(|s| energy_weighted(&s.to_weighted_graph()).unwrap())
                .sum();
            assert!((eigen_sum - d.energy_sum()).abs() < 1e-9);
            assert!(energy(&g).unwrap() <= eigen_sum + 1e-9);
        }
    }

    #[test]
    fn broken_cover_detected() {
        let g = path(4).unwrap();
        let mut d = star_decomposition(&g).unwrap();
        d.stars[0].rays[1].1 = StarWeight::One;
        assert!(!d.reproduces(&g));
        d.stars.pop();
        assert!(!d.reproduces(&g));
    }

    #[test]
    fn inapplicable() {
        assert!(star_decomposition(&path(2).unwrap()).is_err());
        assert!(star_decomposition(&Graph::from_edges(5, [(0, 1), (1, 2), (3, 4)]).unwrap()).is_err());
    }
}
