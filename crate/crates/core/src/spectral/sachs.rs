//! Characteristic polynomial by Sachs sub-graph enumeration.
//!
//! For a weighted graph `φ(x) = Σ b_k x^{n-k}` with
//! `b_k = Σ_S (-1)^{r(S)} 2^{c(S)} W(S)`, the sum running over sub-graphs `S`
//! on `k` vertices whose components are single edges or cycles; `r(S)` counts
//! components, `c(S)` cycles, and `W(S)` multiplies `w²` per edge component
//! and the edge weights along each cycle.

use super::{CharPoly, WeightedGraph};
use crate::{Error, Result};

/// Largest vertex count accepted by the enumeration.
pub const SACHS_MAX_N: usize = 14;

pub fn sachs_char_poly(wg: &WeightedGraph) -> Result<CharPoly> {
    let n = wg.n();
    if n > SACHS_MAX_N {
        return Err(Error::out_of_range(
            "Sachs enumeration size",
            format!("n = {n} exceeds {SACHS_MAX_N}"),
        ));
    }
    let w = wg.to_dense();
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|u| (0..n).filter(|&v| w[u * n + v] != 0.0).collect())
        .collect();
    let mut enumerator = Enumerator {
        n,
        w: &w,
        adj: &adj,
        coeffs: vec![0.0; n + 1],
    };
    enumerator.extend(0, 0, 1.0);
    let mut coeffs = enumerator.coeffs;
    coeffs[0] = 1.0;
    Ok(CharPoly { coeffs })
}

struct Enumerator<'a> {
    n: usize,
    w: &'a [f64],
    adj: &'a [Vec<usize>],
    coeffs: Vec<f64>,
}

impl Enumerator<'_> {
    /// Every Sachs sub-graph is built exactly once: vertices are decided in
    /// increasing order, and the smallest undecided vertex `v` is either left
    /// out, matched to a larger vertex, or made the smallest vertex of a cycle.
    fn extend(&mut self, start: usize, used: u32, weight: f64) {
        let Some(v) = (start..self.n).find(|&v| used & (1 << v) == 0) else {
            self.coeffs[used.count_ones() as usize] += weight;
            return;
        };
        // `v` not covered
        self.extend(v + 1, used, weight);

        for &u in &self.adj[v] {
            if u > v && used & (1 << u) == 0 {
                let x = self.w[v * self.n + u];
                self.extend(v + 1, used | 1 << v | 1 << u, -weight * x * x);
            }
        }

        let mut path = vec![v];
        self.cycles_from(v, used | 1 << v, &mut path, 1.0, weight);
    }

    /// Extends the simple path `path` (starting at `root`) through vertices
    /// larger than `root`; closes a cycle whenever the path has at least three
    /// vertices and its end is adjacent to `root`. Each cycle is taken in the
    /// direction whose second vertex is smaller than its last.
    fn cycles_from(&mut self, root: usize, used: u32, path: &mut Vec<usize>, prod: f64, weight: f64) {
        let end = *path.last().unwrap();
        let n = self.n;
        for &next in &self.adj[end] {
            if next <= root || used & (1 << next) != 0 {
                continue;
            }
            let step = prod * self.w[end * n + next];
            path.push(next);
            let with_next = used | 1 << next;
            if path.len() >= 3 && path[1] < next {
                let closing = self.w[next * n + root];
                if closing != 0.0 {
                    self.extend(root + 1, with_next, -2.0 * weight * step * closing);
                }
            }
            self.cycles_from(root, with_next, path, step, weight);
            path.pop();
        }
    }
}
