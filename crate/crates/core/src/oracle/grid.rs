use num_complex::Complex64;
use rayon::prelude::*;

use crate::bases::{BasisFn, BasisId, Domain};
use crate::error::{domain, Result};

/// Basis values on a cell-centred `resolution × resolution` grid over
/// `[-1, 1]²`, row 0 at `y = +1`. Cells outside the disk hold zero and are
/// masked out.
#[derive(Clone, Debug)]
pub struct GridSample {
    pub resolution: usize,
    pub values: Vec<Complex64>,
    pub mask: Vec<bool>,
}

impl GridSample {
    pub const RESOLUTIONS: std::ops::RangeInclusive<usize> = 32..=4096;

    pub fn sample(basis: &BasisId, resolution: usize) -> Result<Self> {
        if !Self::RESOLUTIONS.contains(&resolution) {
            return Err(domain(format!(
                "resolution {resolution} outside [32, 4096]"
            )));
        }
        let f = BasisFn::new(*basis)?;
        let cells: Vec<(Complex64, bool)> = (0..resolution * resolution)
            .into_par_iter()
            .map(|k| {
                let (x, y) = Self::centre(resolution, k / resolution, k % resolution);
                let r2 = x * x + y * y;
                if r2 > 1.0 {
                    return (Complex64::new(0.0, 0.0), false);
                }
                let v = f.disk_value(x, y);
                let v = match basis.domain {
                    Domain::Disk => v,
                    Domain::Hemisphere => v * (1.0 - r2).sqrt(),
                };
                (v, true)
            })
            .collect();
        let (values, mask) = cells.into_iter().unzip();
        Ok(GridSample {
            resolution,
            values,
            mask,
        })
    }

    /// `(x, y)` at the centre of cell `(row, col)`.
    pub fn centre(resolution: usize, row: usize, col: usize) -> (f64, f64) {
        let step = 2.0 / resolution as f64;
        (
            -1.0 + step * (col as f64 + 0.5),
            1.0 - step * (row as f64 + 0.5),
        )
    }

    pub fn get(&self, row: usize, col: usize) -> Option<Complex64> {
        let k = row * self.resolution + col;
        self.mask[k].then_some(self.values[k])
    }

    /// Largest modulus over cells inside the disk.
    pub fn max_abs(&self) -> f64 {
        self.inside().map(Complex64::norm).fold(0.0, f64::max)
    }

    pub fn inside(&self) -> impl Iterator<Item = Complex64> + '_ {
        self.values
            .iter()
            .zip(&self.mask)
            .filter(|(_, &m)| m)
            .map(|(v, _)| *v)
    }

    /// Binary PPM (P6) of `part` of the values on a blue–white–red scale
    /// symmetric about zero and clipped at the largest `|part|`; white
    /// outside the disk.
    pub fn to_ppm(&self, part: impl Fn(Complex64) -> f64) -> Vec<u8> {
        let mut out = format!("P6\n{} {}\n255\n", self.resolution, self.resolution).into_bytes();
        let scale = self.inside().map(|v| part(v).abs()).fold(0.0, f64::max);
        for (v, &m) in self.values.iter().zip(&self.mask) {
            let t = if m && scale > 0.0 {
                (part(*v) / scale).clamp(-1.0, 1.0)
            } else {
                0.0
            };
            let fade = |t: f64| (255.0 * (1.0 - t)).round() as u8;
            let pixel = if t >= 0.0 {
                [255, fade(t), fade(t)]
            } else {
                [fade(-t), fade(-t), 255]
            };
            out.extend_from_slice(&pixel);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bases::{MultipletLabel, System};

    fn sample(system: System, label: MultipletLabel, res: usize) -> GridSample {
        GridSample::sample(&BasisId::disk(system, label).unwrap(), res).unwrap()
    }

    #[test]
    fn constant_disk() {
        let g = sample(System::I, MultipletLabel::polar(0, 0).unwrap(), 32);
        let c = 1.0 / std::f64::consts::PI.sqrt();
        assert!(g.inside().all(|v| (v.re - c).abs() < 1e-14));
        assert!(g.values.iter().all(|v| v.is_finite()));
        assert_eq!(g.get(0, 0), None);
        assert!(GridSample::sample(
            &BasisId::disk(System::I, MultipletLabel::polar(0, 0).unwrap()).unwrap(),
            16
        )
        .is_err());
    }

    #[test]
    fn reflection_symmetry() {
        let r = 256;
        let g = sample(System::II, MultipletLabel::cartesian(1, 1), r);
        let h = sample(System::III, MultipletLabel::cartesian(2, 0), r);
        for row in 0..r {
            for col in 0..r {
                if let Some(v) = g.get(row, col) {
                    assert!((v + g.get(r - 1 - row, col).unwrap()).norm() < 1e-13);
                }
                if let Some(v) = h.get(row, col) {
                    assert!((v - h.get(row, r - 1 - col).unwrap()).norm() < 1e-13);
                }
            }
        }
    }

    #[test]
    fn ppm_layout() {
        let g = sample(System::I, MultipletLabel::polar(2, 2).unwrap(), 32);
        let ppm = g.to_ppm(|v| v.re);
        let header = b"P6\n32 32\n255\n";
        assert_eq!(&ppm[..header.len()], header);
        assert_eq!(ppm.len(), header.len() + 3 * 32 * 32);
        assert_eq!(&ppm[header.len()..header.len() + 3], &[255, 255, 255]);
    }
}
