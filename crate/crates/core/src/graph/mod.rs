//! Simple undirected graphs, standard families, and degree statistics.

mod io;
mod profile;

use std::collections::VecDeque;

use crate::{Error, Result};

pub use io::{load_edge_list, parse_edge_list, save_edge_list, write_edge_list};
pub use profile::DegreeProfile;

/// A simple undirected graph on the vertices `0..n`.
///
/// Edges are stored canonically as `(u, v)` with `u < v`; adjacency lists are
/// sorted. A `Graph` is immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph, rejecting self-loops, duplicate edges and ids `>= n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut canonical = Vec::new();
        for (u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
            canonical.push((u.min(v), u.max(v)));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let mut sorted = canonical.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Graph {
            n,
            edges: canonical,
            adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in insertion order, each as `(min, max)`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges sorted lexicographically; two graphs with equal canonical edge
    /// lists and vertex counts are identical.
    pub fn canonical_edges(&self) -> Vec<(usize, usize)> {
        let mut e = self.edges.clone();
        e.sort_unstable();
        e
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut components = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut component = Vec::new();
            while let Some(v) = queue.pop_front() {
                component.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    /// True iff the graph is connected and has exactly `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() + 1 == self.n && self.is_connected()
    }

    /// Subgraph induced by `vertices`, relabelled to `0..vertices.len()` in
    /// the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                edges.push((index[u], index[v]));
            }
        }
        Graph::from_edges(vertices.len(), edges).expect("induced subgraph of a simple graph")
    }

    /// Renames vertex `v` to `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let mut check = perm.to_vec();
        check.sort_unstable();
        if perm.len() != self.n || check.iter().enumerate().any(|(i, &p)| i != p) {
            return Err(Error::out_of_range("permutation", "not a permutation of 0..n"));
        }
        Graph::from_edges(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::from_edges(self.n + other.n, edges).expect("union of simple graphs")
    }

    /// Dense 0/1 adjacency matrix in row-major order.
    pub fn adjacency_matrix(&self) -> Vec<f64> {
        let mut a = vec![0.0; self.n * self.n];
        for &(u, v) in &self.edges {
            a[u * self.n + v] = 1.0;
            a[v * self.n + u] = 1.0;
        }
        a
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile::new(self)
    }
}

/// Named graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Path on `n` vertices.
    Path(usize),
    /// Star with `n` leaves (`n + 1` vertices), center 0.
    Star(usize),
    /// Cycle on `n >= 3` vertices.
    Cycle(usize),
    /// Complete graph on `n` vertices.
    Complete(usize),
    /// Centers of `S_p` and `S_q` joined by an edge.
    DoubleStar(usize, usize),
}

/// Builds a member of a standard family.
pub fn make_family(kind: Family) -> Result<Graph> {
    match kind {
        Family::Path(n) => {
            require(n >= 1, "path size", n)?;
            Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
        }
        Family::Star(n) => {
            require(n >= 1, "star size", n)?;
            Graph::from_edges(n + 1, (1..=n).map(|i| (0, i)))
        }
        Family::Cycle(n) => {
            require(n >= 3, "cycle size", n)?;
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Family::Complete(n) => {
            require(n >= 1, "complete graph size", n)?;
            Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        Family::DoubleStar(p, q) => {
            require(p >= 1, "double star p", p)?;
            require(q >= 1, "double star q", q)?;
            // centers 0 and 1, then p leaves on 0 and q leaves on 1
            let leaves_p = (0..p).map(|i| (0, 2 + i));
            let leaves_q = (0..q).map(|i| (1, 2 + p + i));
            Graph::from_edges(p + q + 2, std::iter::once((0, 1)).chain(leaves_p).chain(leaves_q))
        }
    }
}

pub fn path(n: usize) -> Result<Graph> {
    make_family(Family::Path(n))
}

pub fn star(leaves: usize) -> Result<Graph> {
    make_family(Family::Star(leaves))
}

pub fn cycle(n: usize) -> Result<Graph> {
    make_family(Family::Cycle(n))
}

pub fn complete(n: usize) -> Result<Graph> {
    make_family(Family::Complete(n))
}

pub fn double_star(p: usize, q: usize) -> Result<Graph> {
    make_family(Family::DoubleStar(p, q))
}

fn require(ok: bool, what: &'static str, value: usize) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::out_of_range(what, value.to_string()))
    }
}
