//! Laplacian spectrum by cyclic Jacobi rotations.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Sweeps stop once the off-diagonal Frobenius norm drops below this.
pub const JACOBI_TOLERANCE: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

/// Dense row-major combinatorial Laplacian `L = D - A`.
pub fn laplacian(g: &Graph) -> Vec<f64> {
    let n = g.n();
    let mut l = vec![0.0; n * n];
    for v in 0..n {
        l[v * n + v] = g.degree(v) as f64;
    }
    for (u, v) in g.edges() {
        l[u * n + v] = -1.0;
        l[v * n + u] = -1.0;
    }
    l
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

/// Eigenvalues of a symmetric `n x n` row-major matrix, ascending.
pub fn symmetric_eigenvalues(mut a: Vec<f64>, n: usize) -> Vec<f64> {
    assert_eq!(a.len(), n * n);
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a, n) < JACOBI_TOLERANCE {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let tau = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eig.sort_by(f64::total_cmp);
    eig
}

pub fn laplacian_spectrum(g: &Graph) -> Vec<f64> {
    symmetric_eigenvalues(laplacian(g), g.n())
}

/// Second-smallest Laplacian eigenvalue (Fiedler value), clamped at zero.
pub fn algebraic_connectivity(g: &Graph) -> Result<f64> {
    if g.n() < 2 {
        return Err(Error::Input(format!(
            "algebraic connectivity needs at least two vertices, got {}",
            g.n()
        )));
    }
    Ok(laplacian_spectrum(g)[1].max(0.0))
}
