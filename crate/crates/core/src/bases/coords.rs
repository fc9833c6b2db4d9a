//! Points on the unit disk and on the upper hemisphere, with the three
//! spherical charts of the hemisphere.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

const SLACK: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiskPoint {
    pub x: f64,
    pub y: f64,
}

impl DiskPoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if x * x + y * y > 1.0 + SLACK || x.is_nan() || y.is_nan() {
            return Err(domain(format!("({x}, {y}) lies outside the unit disk")));
        }
        Ok(DiskPoint { x, y })
    }

    pub fn from_polar(r: f64, phi: f64) -> Result<Self> {
        if !(0.0..=1.0 + SLACK).contains(&r) {
            return Err(domain(format!("radius {r} outside [0, 1]")));
        }
        Ok(DiskPoint {
            x: r * phi.cos(),
            y: r * phi.sin(),
        })
    }

    pub fn r(&self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn phi(&self) -> f64 {
        self.y.atan2(self.x)
    }

    pub fn r2(&self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    /// Height of the point lifted to the hemisphere; zero on the boundary.
    pub fn xi3(&self) -> f64 {
        (1.0 - self.r2()).max(0.0).sqrt()
    }

    pub fn lift(&self) -> HemispherePoint {
        HemispherePoint {
            xi: [self.x, self.y, self.xi3()],
        }
    }
}

/// The three orientations of spherical coordinates on the hemisphere:
/// poles along `ξ₃` (I), `ξ₁` (II) and `ξ₂` (III).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Chart {
    I,
    II,
    III,
}

impl Chart {
    /// Closed ranges of `(ϑ, φ)`.
    pub fn ranges(self) -> ((f64, f64), (f64, f64)) {
        match self {
            Chart::I => ((0.0, FRAC_PI_2), (-PI, PI)),
            Chart::II => ((0.0, PI), (0.0, PI)),
            Chart::III => ((0.0, PI), (-FRAC_PI_2, FRAC_PI_2)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HemispherePoint {
    xi: [f64; 3],
}

impl HemispherePoint {
    pub fn from_xi(xi: [f64; 3]) -> Result<Self> {
        let norm = xi.iter().map(|v| v * v).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > 1e-9 || xi[2] < -SLACK {
            return Err(domain(format!(
                "{xi:?} is not on the upper unit hemisphere"
            )));
        }
        Ok(HemispherePoint { xi })
    }

    pub fn from_angles(chart: Chart, theta: f64, phi: f64) -> Result<Self> {
        let ((t0, t1), (p0, p1)) = chart.ranges();
        if theta < t0 - SLACK || theta > t1 + SLACK || phi < p0 - SLACK || phi > p1 + SLACK {
            return Err(domain(format!(
                "angles ({theta}, {phi}) outside the range of chart {chart:?}"
            )));
        }
        let (st, ct, sp, cp) = (theta.sin(), theta.cos(), phi.sin(), phi.cos());
        let xi = match chart {
            Chart::I => [st * cp, st * sp, ct],
            Chart::II => [ct, st * cp, st * sp],
            Chart::III => [st * sp, ct, st * cp],
        };
        Ok(HemispherePoint {
            xi: [xi[0], xi[1], xi[2].max(0.0)],
        })
    }

    pub fn xi(&self) -> [f64; 3] {
        self.xi
    }

    /// `(ϑ, φ)` in the given chart. Where `φ` is undefined (at a pole) it is
    /// taken as the low end of its range, except chart I uses 0.
    pub fn angles(&self, chart: Chart) -> (f64, f64) {
        let [x1, x2, x3] = self.xi;
        let acos = |v: f64| v.clamp(-1.0, 1.0).acos();
        match chart {
            Chart::I => (acos(x3), x2.atan2(x1)),
            Chart::II => (acos(x1), x3.atan2(x2)),
            Chart::III => (acos(x2), x1.atan2(x3)),
        }
    }

    pub fn project(&self) -> DiskPoint {
        DiskPoint {
            x: self.xi[0],
            y: self.xi[1],
        }
    }
}

/// Convert `(ϑ, φ)` from one chart to another through the `ξ` components.
pub fn map_coordinates(from: Chart, theta: f64, phi: f64, to: Chart) -> Result<(f64, f64)> {
    Ok(HemispherePoint::from_angles(from, theta, phi)?.angles(to))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn north_pole_in_every_chart() {
        let p = HemispherePoint::from_xi([0.0, 0.0, 1.0]).unwrap();
        assert_eq!(p.angles(Chart::I).0, 0.0);
        let (t, f) = p.angles(Chart::II);
        assert!((t - FRAC_PI_2).abs() < 1e-15 && (f - FRAC_PI_2).abs() < 1e-15);
        let (t, f) = p.angles(Chart::III);
        assert!((t - FRAC_PI_2).abs() < 1e-15 && f.abs() < 1e-15);
    }

    #[test]
    fn chart_relations_and_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let theta = rng.gen_range(0.0..FRAC_PI_2);
            let phi = rng.gen_range(-PI..PI);
            let p = HemispherePoint::from_angles(Chart::I, theta, phi).unwrap();
            let (t2, p2) = p.angles(Chart::II);
            let (t3, p3) = p.angles(Chart::III);
            assert!((t2.cos() - theta.sin() * phi.cos()).abs() < 1e-12);
            assert!((t3.cos() - theta.sin() * phi.sin()).abs() < 1e-12);
            let q = (1.0 - (theta.sin() * phi.cos()).powi(2)).sqrt();
            assert!((p2.cos() - theta.sin() * phi.sin() / q).abs() < 1e-12);
            for chart in [Chart::I, Chart::II, Chart::III] {
                let (a, b) = p.angles(chart);
                let back = map_coordinates(chart, a, b, Chart::I).unwrap();
                assert!((back.0 - theta).abs() < 1e-12 && (back.1 - phi).abs() < 1e-12);
            }
            let (a, b) = map_coordinates(Chart::II, t2, p2, Chart::III).unwrap();
            assert!((a - t3).abs() < 1e-12 && (b - p3).abs() < 1e-12);
        }
    }

    #[test]
    fn out_of_range() {
        assert!(HemispherePoint::from_angles(Chart::I, 2.0, 0.0).is_err());
        assert!(HemispherePoint::from_angles(Chart::II, 1.0, -0.5).is_err());
        assert!(HemispherePoint::from_xi([0.0, 0.0, -1.0]).is_err());
        assert!(DiskPoint::new(0.8, 0.8).is_err());
        assert!(DiskPoint::new(f64::NAN, 0.0).is_err());
    }
}
