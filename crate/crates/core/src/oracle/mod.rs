//! Numerical cross-checks: quadrature on the disk and hemisphere, overlap
//! and boundary projections of the coefficients, reconstruction of
//! expansions, and a finite-difference test of the eigenvalue equation.

mod eigen;
mod grid;
mod quadrature;

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bases::{
    gegenbauer_c, norm_constant, BasisFn, BasisId, HemispherePoint, MultipletLabel, System,
};
use crate::error::{domain, Result};
use crate::interbasis::{assemble_matrix, Pair, Route};

pub use eigen::{eigen_convergence, zernike_eigen_residual, EigenConvergence};
pub use grid::GridSample;
pub use quadrature::{gauss_jacobi, gauss_legendre};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RadialRule {
    /// Gauss–Legendre in `u = r²`, for `d²r`.
    Legendre,
    /// Gauss–Legendre in the height `ξ₃`, for `dΩ = d²r/ξ₃`.
    Height,
}

/// Product rule on the disk: Gaussian in `u = r²`, trapezoid in `φ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    pub radial_nodes: usize,
    pub angular_nodes: usize,
    pub rule: RadialRule,
}

impl QuadratureSpec {
    pub fn new(radial_nodes: usize, angular_nodes: usize, rule: RadialRule) -> Result<Self> {
        if radial_nodes == 0 || angular_nodes == 0 {
            return Err(domain(
                "quadrature needs at least one node in each direction",
            ));
        }
        Ok(QuadratureSpec {
            radial_nodes,
            angular_nodes,
            rule,
        })
    }

    /// The smallest rule exact for products of functions of degree `n`.
    pub fn for_degree(n: u32) -> Self {
        QuadratureSpec {
            radial_nodes: n as usize + 2,
            angular_nodes: 2 * n as usize + 3,
            rule: RadialRule::Legendre,
        }
    }

    pub fn with_rule(mut self, rule: RadialRule) -> Self {
        self.rule = rule;
        self
    }

    pub fn is_exact_for(&self, n: u32) -> bool {
        self.radial_nodes >= n as usize + 2 && self.angular_nodes >= 2 * n as usize + 3
    }

    /// Nodes `(x, y)` in a fixed order, with weights summing to the disk
    /// area `π` (`Legendre`) or to the hemisphere area `2π` (`Height`).
    fn nodes(&self) -> Vec<(f64, f64, f64)> {
        let (t, w) = gauss_legendre(self.radial_nodes);
        let dphi = 2.0 * PI / self.angular_nodes as f64;
        let mut out = Vec::with_capacity(t.len() * self.angular_nodes);
        for (t, w) in t.iter().zip(&w) {
            let (r, weight) = match self.rule {
                RadialRule::Legendre => (((1.0 + t) / 2.0).sqrt(), 0.25 * w * dphi),
                RadialRule::Height => {
                    let z = (1.0 + t) / 2.0;
                    ((1.0 - z * z).sqrt(), 0.5 * w * dphi)
                }
            };
            for k in 0..self.angular_nodes {
                let phi = dphi * k as f64;
                out.push((r * phi.cos(), r * phi.sin(), weight));
            }
        }
        out
    }
}

/// A quadrature value with a flag raised when the rule is below the
/// exactness floor for the declared degree.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Estimate {
    pub value: Complex64,
    pub under_resolved: bool,
}

fn weighted_sum(nodes: &[(f64, f64, f64)], f: impl Fn(f64, f64) -> Complex64 + Sync) -> Complex64 {
    let partial: Vec<Complex64> = nodes
        .par_chunks(64)
        .map(|chunk| chunk.iter().map(|&(x, y, w)| f(x, y) * w).sum())
        .collect();
    partial.into_iter().sum()
}

/// `∫_D f* g d²r`.
pub fn inner_product_disk<F, G>(f: F, g: G, spec: &QuadratureSpec, degree: u32) -> Estimate
where
    F: Fn(f64, f64) -> Complex64 + Sync,
    G: Fn(f64, f64) -> Complex64 + Sync,
{
    let spec = spec.with_rule(RadialRule::Legendre);
    let value = weighted_sum(&spec.nodes(), |x, y| f(x, y).conj() * g(x, y));
    Estimate {
        value,
        under_resolved: !spec.is_exact_for(degree),
    }
}

/// `∫_H f* g dΩ` over the upper hemisphere.
pub fn inner_product_hemisphere<F, G>(f: F, g: G, spec: &QuadratureSpec, degree: u32) -> Estimate
where
    F: Fn(&HemispherePoint) -> Complex64 + Sync,
    G: Fn(&HemispherePoint) -> Complex64 + Sync,
{
    let spec = spec.with_rule(RadialRule::Height);
    let value = weighted_sum(&spec.nodes(), |x, y| {
        let p = lift(x, y);
        f(&p).conj() * g(&p)
    });
    Estimate {
        value,
        under_resolved: !spec.is_exact_for(degree),
    }
}

fn lift(x: f64, y: f64) -> HemispherePoint {
    let z = (1.0 - x * x - y * y).max(0.0).sqrt();
    HemispherePoint::from_xi([x, y, z]).expect("quadrature nodes lie inside the disk")
}

fn disk_basis(system: System, label: MultipletLabel) -> Result<BasisFn> {
    BasisFn::new(BasisId::disk(system, label)?)
}

/// Overlap `(Ψ_col, Ψ_row)_D`, the quadrature estimate of the matrix entry
/// at `(row, col)`.
pub fn coeff_by_quadrature(
    pair: Pair,
    row: MultipletLabel,
    col: MultipletLabel,
    spec: &QuadratureSpec,
) -> Result<Estimate> {
    if row.n() != col.n() {
        return Err(domain(format!(
            "labels {row} and {col} lie in different multiplets"
        )));
    }
    let (row_system, col_system) = pair.systems();
    let a = disk_basis(col_system, col)?;
    let b = disk_basis(row_system, row)?;
    Ok(inner_product_disk(
        |x, y| a.disk_value(x, y),
        |x, y| b.disk_value(x, y),
        spec,
        row.n(),
    ))
}

fn boundary_integral(n: u32, m: i32, integrand: impl Fn(f64) -> f64) -> Complex64 {
    let count = 64.max(2 * n as usize + 2);
    let dphi = 2.0 * PI / count as f64;
    (0..count)
        .map(|k| {
            let phi = dphi * k as f64;
            Complex64::from_polar(integrand(phi) * dphi, -f64::from(m) * phi)
        })
        .sum()
}

fn boundary_prefactor(n: u32, m: i32, constant: f64) -> f64 {
    let n_r = (n - m.unsigned_abs()) / 2;
    let sign = if n_r.is_multiple_of(2) { 1.0 } else { -1.0 };
    sign * constant / (2.0 * (PI * (f64::from(n) + 1.0)).sqrt())
}

fn check_boundary_labels(n: u32, m: i32, k1: u32) -> Result<()> {
    MultipletLabel::polar(n, m)?;
    if k1 > n {
        return Err(domain(format!("index {k1} exceeds n = {n}")));
    }
    Ok(())
}

/// `W^{n,m}_{n₁}` from the rim `r = 1`, where the polar functions reduce
/// to pure harmonics.
pub fn boundary_projection_w(n: u32, m: i32, n1: u32) -> Result<Complex64> {
    check_boundary_labels(n, m, n1)?;
    let (n2, lambda) = (n - n1, f64::from(n1) + 1.0);
    let c = norm_constant(n1, n2).to_f64_real();
    let integral = boundary_integral(n, m, |phi| {
        phi.sin().powi(n1 as i32) * gegenbauer_c(n2, lambda, phi.cos())
    });
    Ok(integral * boundary_prefactor(n, m, c))
}

/// `Ŵ^{n,m}_{ℓ₁}` from the rim.
pub fn boundary_projection_what(n: u32, m: i32, l1: u32) -> Result<Complex64> {
    check_boundary_labels(n, m, l1)?;
    let (l2, lambda) = (n - l1, f64::from(l1) + 1.0);
    let c = norm_constant(l1, l2).to_f64_real();
    let integral = boundary_integral(n, m, |phi| {
        phi.cos().powi(l1 as i32) * gegenbauer_c(l2, lambda, phi.sin())
    });
    Ok(integral * boundary_prefactor(n, m, c))
}

/// Which side of an interbasis pair is expanded in terms of the other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    /// A row-system function as a sum over the column system.
    Forward,
    /// A column-system function as a sum over the row system.
    Inverse,
}

/// Largest deviation, over the hemisphere points, between `Υ_target` and
/// its expansion in the other basis of the pair.
pub fn reconstruct_expansion(
    pair: Pair,
    direction: Direction,
    target: MultipletLabel,
    route: Route,
    points: &[HemispherePoint],
) -> Result<f64> {
    let matrix = assemble_matrix(target.n(), pair, route)?;
    let (row_system, col_system) = pair.systems();
    let (target_system, other_system, labels) = match direction {
        Direction::Forward => (row_system, col_system, &matrix.cols),
        Direction::Inverse => (col_system, row_system, &matrix.rows),
    };
    let lhs = BasisFn::new(BasisId::hemisphere(target_system, target)?)?;
    let terms: Vec<(Complex64, BasisFn)> = labels
        .iter()
        .enumerate()
        .map(|(k, &label)| {
            let coefficient = match direction {
                Direction::Forward => matrix.entries[row_of(&matrix.rows, target)?][k].to_complex(),
                Direction::Inverse => matrix.entries[k][row_of(&matrix.cols, target)?]
                    .to_complex()
                    .conj(),
            };
            Ok((
                coefficient,
                BasisFn::new(BasisId::hemisphere(other_system, label)?)?,
            ))
        })
        .collect::<Result<_>>()?;
    Ok(points
        .iter()
        .map(|p| {
            let rhs: Complex64 = terms.iter().map(|(c, f)| c * f.hemisphere_value(p)).sum();
            (lhs.hemisphere_value(p) - rhs).norm()
        })
        .fold(0.0, f64::max))
}

fn row_of(labels: &[MultipletLabel], target: MultipletLabel) -> Result<usize> {
    labels.iter().position(|&l| l == target).ok_or_else(|| {
        domain(format!(
            "label {target} does not belong to this side of the pair"
        ))
    })
}
