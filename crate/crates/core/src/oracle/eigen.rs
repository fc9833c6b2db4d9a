//! Finite-difference residual of `Ẑ Ψ = -n(n+2) Ψ` on a square grid.

use rayon::prelude::*;

use crate::bases::{BasisFn, BasisId};
use crate::error::{domain, Result};

const MIN_RESOLUTION: usize = 64;
const ROUNDOFF_FLOOR: f64 = 1e-8;

struct Grid {
    size: usize,
    h: f64,
}

impl Grid {
    fn coord(&self, i: usize) -> f64 {
        -1.0 + self.h * i as f64
    }

    fn r(&self, i: usize, j: usize) -> f64 {
        self.coord(i).hypot(self.coord(j))
    }

    /// Centered `x ∂_x + y ∂_y` of `field` at `(i, j)`.
    fn radial_derivative(&self, field: &[Vec<[f64; 2]>], i: usize, j: usize) -> [f64; 2] {
        let (x, y) = (self.coord(i), self.coord(j));
        let d = 2.0 * self.h;
        std::array::from_fn(|c| {
            x * (field[i + 1][j][c] - field[i - 1][j][c]) / d
                + y * (field[i][j + 1][c] - field[i][j - 1][c]) / d
        })
    }
}

/// `max |ẐΨ + n(n+2)Ψ| / max |Ψ|` over grid points at least `3h` inside
/// the rim, with `h = 2/(resolution-1)`.
pub fn zernike_eigen_residual(basis: &BasisId, resolution: usize) -> Result<f64> {
    if resolution < MIN_RESOLUTION {
        return Err(domain(format!(
            "resolution {resolution} is below {MIN_RESOLUTION}"
        )));
    }
    let f = BasisFn::new(*basis)?;
    let n = f64::from(basis.label.n());
    let energy = n * (n + 2.0);
    let grid = Grid {
        size: resolution,
        h: 2.0 / (resolution - 1) as f64,
    };
    let h = grid.h;
    let inside = |i: usize, j: usize, margin: f64| grid.r(i, j) <= 1.0 - margin * h + 1e-12;

    let psi: Vec<Vec<[f64; 2]>> = (0..grid.size)
        .into_par_iter()
        .map(|i| {
            (0..grid.size)
                .map(|j| {
                    if inside(i, j, 0.0) {
                        let v = f.disk_value(grid.coord(i), grid.coord(j));
                        [v.re, v.im]
                    } else {
                        [0.0; 2]
                    }
                })
                .collect()
        })
        .collect();
    let scale = psi
        .iter()
        .flatten()
        .map(|v| v[0].hypot(v[1]))
        .fold(0.0, f64::max);

    let first: Vec<Vec<[f64; 2]>> = (0..grid.size)
        .into_par_iter()
        .map(|i| {
            (0..grid.size)
                .map(|j| {
                    if inside(i, j, 2.0) {
                        grid.radial_derivative(&psi, i, j)
                    } else {
                        [0.0; 2]
                    }
                })
                .collect()
        })
        .collect();

    let worst: Vec<f64> = (0..grid.size)
        .into_par_iter()
        .map(|i| {
            (0..grid.size)
                .filter(|&j| inside(i, j, 3.0))
                .map(|j| {
                    let second = grid.radial_derivative(&first, i, j);
                    let residual: [f64; 2] = std::array::from_fn(|c| {
                        let lap = (psi[i + 1][j][c]
                            + psi[i - 1][j][c]
                            + psi[i][j + 1][c]
                            + psi[i][j - 1][c]
                            - 4.0 * psi[i][j][c])
                            / (h * h);
                        lap - second[c] - 2.0 * first[i][j][c] + energy * psi[i][j][c]
                    });
                    residual[0].hypot(residual[1])
                })
                .fold(0.0, f64::max)
        })
        .collect();
    let worst = worst.into_iter().fold(0.0, f64::max);
    Ok(if scale > 0.0 { worst / scale } else { worst })
}

/// Residuals over a refinement sequence and the observed orders between
/// consecutive resolutions.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenConvergence {
    pub resolutions: Vec<usize>,
    pub residuals: Vec<f64>,
    pub orders: Vec<Option<f64>>,
}

impl EigenConvergence {
    /// Every refinement either shows order at least `min_order` or starts
    /// from a residual already at round-off.
    pub fn is_convergent(&self, min_order: f64) -> bool {
        self.orders
            .iter()
            .zip(&self.residuals)
            .all(|(order, &coarse)| {
                coarse < ROUNDOFF_FLOOR || order.is_some_and(|o| o >= min_order)
            })
    }

    pub fn finest(&self) -> f64 {
        *self.residuals.last().expect("at least one resolution")
    }
}

pub fn eigen_convergence(basis: &BasisId, resolutions: &[usize]) -> Result<EigenConvergence> {
    let residuals = resolutions
        .iter()
        .map(|&r| zernike_eigen_residual(basis, r))
        .collect::<Result<Vec<_>>>()?;
    let orders = resolutions
        .windows(2)
        .zip(residuals.windows(2))
        .map(|(res, val)| {
            let ratio = (res[1] - 1) as f64 / (res[0] - 1) as f64;
            (val[0] > 0.0 && val[1] > 0.0).then(|| (val[0] / val[1]).ln() / ratio.ln())
        })
        .collect();
    Ok(EigenConvergence {
        resolutions: resolutions.to_vec(),
        residuals,
        orders,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bases::{MultipletLabel, System};

    fn basis(system: System, label: MultipletLabel) -> BasisId {
        BasisId::disk(system, label).unwrap()
    }

    #[test]
    fn constant_is_exact() {
        let b = basis(System::I, MultipletLabel::polar(0, 0).unwrap());
        assert!(zernike_eigen_residual(&b, 64).unwrap() < 1e-10);
        assert!(zernike_eigen_residual(&b, 32).is_err());
    }

    #[test]
    fn cubic_converges_at_second_order() {
        let b = basis(System::I, MultipletLabel::polar(3, 1).unwrap());
        let c = eigen_convergence(&b, &[128, 256, 512]).unwrap();
        assert!(c.finest() < 1e-3);
        assert!(c.is_convergent(1.8), "{c:?}");
        assert!(c.residuals[2] > ROUNDOFF_FLOOR);
    }

    #[test]
    fn cartesian_bases_share_the_eigenvalue() {
        let b = basis(System::II, MultipletLabel::cartesian(1, 1));
        assert!(zernike_eigen_residual(&b, 512).unwrap() < 1e-3);
        let b = basis(System::I, MultipletLabel::polar(2, 0).unwrap());
        assert!(zernike_eigen_residual(&b, 512).unwrap() < 1e-3);
    }
}
