//! Gauss–Jacobi rules by the Golub–Welsch eigenvalue method.

use nalgebra::{DMatrix, SymmetricEigen};
use statrs::function::gamma::gamma;

/// Nodes and weights on `[-1, 1]` for the weight `(1-t)^α (1+t)^β`,
/// nodes ascending.
pub fn gauss_jacobi(count: usize, alpha: f64, beta: f64) -> (Vec<f64>, Vec<f64>) {
    assert!(count > 0 && alpha > -1.0 && beta > -1.0);
    let ab = alpha + beta;
    let mut jacobi = DMatrix::<f64>::zeros(count, count);
    for k in 0..count {
        let kf = k as f64;
        let diag = if k == 0 {
            (beta - alpha) / (ab + 2.0)
        } else {
            (beta * beta - alpha * alpha) / ((2.0 * kf + ab) * (2.0 * kf + ab + 2.0))
        };
        jacobi[(k, k)] = diag;
        if k + 1 < count {
            let j = kf + 1.0;
            let s = 2.0 * j + ab;
            let off = (4.0 * j * (j + alpha) * (j + beta) * (j + ab)
                / (s * s * (s + 1.0) * (s - 1.0)))
                .sqrt();
            jacobi[(k, k + 1)] = off;
            jacobi[(k + 1, k)] = off;
        }
    }
    let mu0 = 2f64.powf(ab + 1.0) * gamma(alpha + 1.0) * gamma(beta + 1.0) / gamma(ab + 2.0);
    let eig = SymmetricEigen::new(jacobi);
    let mut pairs: Vec<(f64, f64)> = (0..count)
        .map(|k| {
            let v0 = eig.eigenvectors[(0, k)];
            (eig.eigenvalues[k], mu0 * v0 * v0)
        })
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    pairs.into_iter().unzip()
}

pub fn gauss_legendre(count: usize) -> (Vec<f64>, Vec<f64>) {
    gauss_jacobi(count, 0.0, 0.0)
}
