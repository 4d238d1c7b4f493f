//! Eigenvalues of a dense real symmetric matrix.
//!
//! Householder reduction to tridiagonal form followed by the implicit-shift
//! QL iteration, after the EISPACK `tred2`/`tql2` pair with the eigenvector
//! accumulation dropped.

use crate::{Error, Result};

/// QL sweeps allowed per eigenvalue before giving up.
pub const MAX_SWEEPS: usize = 64;

/// Eigenvalues of the `n x n` symmetric matrix stored row-major in `a`, in
/// ascending order. Only the lower triangle is read; `a` is overwritten.
pub fn symmetric_eigenvalues_in_place(a: &mut [f64], n: usize) -> Result<Vec<f64>> {
    assert_eq!(a.len(), n * n, "matrix must be n x n");
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    tridiagonalize(a, n, &mut d, &mut e);
    tridiagonal_ql(&mut d, &mut e)?;
    d.sort_by(f64::total_cmp);
    Ok(d)
}

/// Reduces `a` to a symmetric tridiagonal matrix with diagonal `d` and
/// subdiagonal `e[1..n]` (`e[i]` couples rows `i - 1` and `i`).
fn tridiagonalize(a: &mut [f64], n: usize, d: &mut [f64], e: &mut [f64]) {
    let idx = |i: usize, j: usize| i * n + j;
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let scale: f64 = (0..=l).map(|k| a[idx(i, k)].abs()).sum();
            if scale == 0.0 {
                e[i] = a[idx(i, l)];
            } else {
                for k in 0..=l {
                    a[idx(i, k)] /= scale;
                    h += a[idx(i, k)] * a[idx(i, k)];
                }
                let f = a[idx(i, l)];
                let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h -= f * g;
                a[idx(i, l)] = f - g;
                let mut f = 0.0;
                for j in 0..=l {
                    let mut g = 0.0;
                    for k in 0..=j {
                        g += a[idx(j, k)] * a[idx(i, k)];
                    }
                    for k in j + 1..=l {
                        g += a[idx(k, j)] * a[idx(i, k)];
                    }
                    e[j] = g / h;
                    f += e[j] * a[idx(i, j)];
                }
                let hh = f / (h + h);
                for j in 0..=l {
                    let f = a[idx(i, j)];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        a[idx(j, k)] -= f * e[k] + g * a[idx(i, k)];
                    }
                }
            }
        } else {
            e[i] = a[idx(i, l)];
        }
        d[i] = h;
    }
    e[0] = 0.0;
    for i in 0..n {
        d[i] = a[idx(i, i)];
    }
}

/// Diagonalizes the tridiagonal matrix `(d, e)` in place; on return `d`
/// holds the eigenvalues (unsorted).
fn tridiagonal_ql(d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    for l in 0..n {
        let mut sweeps = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > MAX_SWEEPS {
                return Err(Error::NoConvergence(MAX_SWEEPS));
            }

            // Wilkinson-style shift from the leading 2x2 block.
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eig(rows: &[&[f64]]) -> Vec<f64> {
        let n = rows.len();
        let mut a: Vec<f64> = rows.iter().flat_map(|r| r.iter().copied()).collect();
        symmetric_eigenvalues_in_place(&mut a, n).unwrap()
    }

    #[test]
    fn two_by_two() {
        let ev = eig(&[&[0.0, 1.0], &[1.0, 0.0]]);
        assert!((ev[0] + 1.0).abs() < 1e-15);
        assert!((ev[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn diagonal_and_empty() {
        assert_eq!(eig(&[&[3.0, 0.0], &[0.0, -2.0]]), vec![-2.0, 3.0]);
        assert_eq!(eig(&[&[5.0]]), vec![5.0]);
        assert!(symmetric_eigenvalues_in_place(&mut [], 0).unwrap().is_empty());
    }

    #[test]
    fn known_three_by_three() {
        // [[2,-1,0],[-1,2,-1],[0,-1,2]] has eigenvalues 2 - √2, 2, 2 + √2
        let ev = eig(&[&[2.0, -1.0, 0.0], &[-1.0, 2.0, -1.0], &[0.0, -1.0, 2.0]]);
        let s = 2f64.sqrt();
        for (got, want) in ev.iter().zip([2.0 - s, 2.0, 2.0 + s]) {
            assert!((got - want).abs() < 1e-14, "{got} vs {want}");
        }
    }

    #[test]
    fn trace_and_frobenius_preserved() {
        let n = 9;
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..=i {
                let x = ((i * 7 + j * 3) % 11) as f64 / 3.0 - 1.5;
                a[i * n + j] = x;
                a[j * n + i] = x;
            }
        }
        let trace: f64 = (0..n).map(|i| a[i * n + i]).sum();
        let frob: f64 = a.iter().map(|x| x * x).sum();
        let ev = symmetric_eigenvalues_in_place(&mut a.clone(), n).unwrap();
        assert!((ev.iter().sum::<f64>() - trace).abs() < 1e-12);
        assert!((ev.iter().map(|x| x * x).sum::<f64>() - frob).abs() < 1e-11);
    }
}
