#![allow(dead_code)]

use graph_energy::graph::{complete, cycle, double_star, path, star, Graph};

/// `det(M)` by cofactor expansion along the first row.
pub fn det_laplace(m: &[Vec<f64>]) -> f64 {
    let n = m.len();
    if n == 0 {
        return 1.0;
    }
    if n == 1 {
        return m[0][0];
    }
    let mut total = 0.0;
    for j in 0..n {
        if m[0][j] == 0.0 {
            continue;
        }
        let minor: Vec<Vec<f64>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
            .collect();
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        total += sign * m[0][j] * det_laplace(&minor);
    }
    total
}

/// `det(xI - A)` for a small graph.
pub fn char_poly_at(g: &Graph, x: f64) -> f64 {
    let n = g.n();
    let m: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        x
                    } else if g.has_edge(i, j) {
                        -1.0
                    } else {
                        0.0
                    }
                })
                .collect()
        })
        .collect();
    det_laplace(&m)
}

/// Roots of the characteristic polynomial by sign changes on a fine grid
/// over `[-n, n]` followed by bisection. Only simple roots are found, which
/// suffices for paths and odd-multiplicity roots.
pub fn char_poly_roots(g: &Graph) -> Vec<f64> {
    let bound = g.n() as f64 + 0.5;
    let steps = 20_000;
    let h = 2.0 * bound / steps as f64;
    let mut roots = Vec::new();
    let mut lo = -bound;
    let mut f_lo = char_poly_at(g, lo);
    for i in 1..=steps {
        let hi = -bound + i as f64 * h;
        let f_hi = char_poly_at(g, hi);
        if f_lo == 0.0 {
            roots.push(lo);
        } else if f_lo * f_hi < 0.0 {
            let (mut a, mut b, mut fa) = (lo, hi, f_lo);
            for _ in 0..200 {
                let mid = 0.5 * (a + b);
                let fm = char_poly_at(g, mid);
                if fa * fm <= 0.0 {
                    b = mid;
                } else {
                    a = mid;
                    fa = fm;
                }
            }
            roots.push(0.5 * (a + b));
        }
        lo = hi;
        f_lo = f_hi;
    }
    roots
}

/// Every standard family member with at most `max_n` vertices.
pub fn family_corpus(max_n: usize) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.push((format!("P{n}"), path(n).unwrap()));
        out.push((format!("K{n}"), complete(n).unwrap()));
        if n >= 3 {
            out.push((format!("C{n}"), cycle(n).unwrap()));
        }
        if n >= 2 {
            out.push((format!("S{}", n - 1), star(n - 1).unwrap()));
        }
    }
    for p in 1..max_n {
        for q in p..max_n {
            if p + q + 2 <= max_n {
                out.push((format!("S{{{p},{q}}}"), double_star(p, q).unwrap()));
            }
        }
    }
    out
}
