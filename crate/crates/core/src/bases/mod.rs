//! The three separable eigenbases of the Zernike operator
//! `∇² - (r·∇)² - 2 r·∇` on the unit disk, all with eigenvalue `n(n+2)`:
//!
//! * I, polar: `√((n+1)/π) r^|m| P^{(|m|,0)}_{n_r}(1-2r²) e^{imφ}`;
//! * II, x-oriented: `C (1-x²)^{n₁/2} C^{n₁+1}_{n₂}(x) P_{n₁}(y/√(1-x²))`;
//! * III, y-oriented: `C P_{ℓ₁}(x/√(1-y²)) (1-y²)^{ℓ₁/2} C^{ℓ₁+1}_{ℓ₂}(y)`;
//!
//! and their hemisphere counterparts `Υ = ξ₃^{1/2} Ψ`.

mod coords;
mod poly;

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::exact::{fact, int, ExactValue};

pub use coords::{map_coordinates, Chart, DiskPoint, HemispherePoint};
pub use poly::{gegenbauer_c, jacobi_p, legendre_homogeneous, legendre_p};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LabelKind {
    Polar,
    Cartesian,
}

/// Quantum numbers of one basis function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MultipletLabel {
    Polar { n: u32, m: i32 },
    Cartesian { k1: u32, k2: u32 },
}

impl MultipletLabel {
    pub fn polar(n: u32, m: i32) -> Result<Self> {
        if m.unsigned_abs() > n || !(n - m.unsigned_abs()).is_multiple_of(2) {
            return Err(domain(format!("m = {m} is not in -{n}, -{n}+2, …, {n}")));
        }
        Ok(MultipletLabel::Polar { n, m })
    }

    pub fn cartesian(k1: u32, k2: u32) -> Self {
        MultipletLabel::Cartesian { k1, k2 }
    }

    pub fn n(&self) -> u32 {
        match *self {
            MultipletLabel::Polar { n, .. } => n,
            MultipletLabel::Cartesian { k1, k2 } => k1 + k2,
        }
    }

    pub fn kind(&self) -> LabelKind {
        match self {
            MultipletLabel::Polar { .. } => LabelKind::Polar,
            MultipletLabel::Cartesian { .. } => LabelKind::Cartesian,
        }
    }

    /// Radial quantum number `(n - |m|)/2` of a polar label.
    pub fn n_r(&self) -> Option<u32> {
        match *self {
            MultipletLabel::Polar { n, m } => Some((n - m.unsigned_abs()) / 2),
            MultipletLabel::Cartesian { .. } => None,
        }
    }

    fn validate(&self) -> Result<()> {
        if let MultipletLabel::Polar { n, m } = *self {
            Self::polar(n, m)?;
        }
        Ok(())
    }
}

impl fmt::Display for MultipletLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MultipletLabel::Polar { n, m } => write!(f, "(n={n}, m={m})"),
            MultipletLabel::Cartesian { k1, k2 } => write!(f, "({k1}, {k2})"),
        }
    }
}

/// All labels of the multiplet `n`: `m = -n, -n+2, …, n` or `k₁ = 0, …, n`.
pub fn enumerate_multiplet(n: u32, kind: LabelKind) -> Vec<MultipletLabel> {
    match kind {
        LabelKind::Polar => (0..=n)
            .map(|i| MultipletLabel::Polar {
                n,
                m: 2 * i as i32 - n as i32,
            })
            .collect(),
        LabelKind::Cartesian => (0..=n)
            .map(|k1| MultipletLabel::cartesian(k1, n - k1))
            .collect(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum System {
    I,
    II,
    III,
}

impl System {
    pub fn chart(self) -> Chart {
        match self {
            System::I => Chart::I,
            System::II => Chart::II,
            System::III => Chart::III,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Domain {
    Disk,
    Hemisphere,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BasisId {
    pub system: System,
    pub label: MultipletLabel,
    pub domain: Domain,
}

impl BasisId {
    pub fn new(system: System, label: MultipletLabel, domain: Domain) -> Result<Self> {
        label.validate()?;
        let ok = matches!(
            (system, label.kind()),
            (System::I, LabelKind::Polar) | (System::II | System::III, LabelKind::Cartesian)
        );
        if !ok {
            return Err(domain_err(system, &label));
        }
        Ok(BasisId {
            system,
            label,
            domain,
        })
    }

    pub fn disk(system: System, label: MultipletLabel) -> Result<Self> {
        Self::new(system, label, Domain::Disk)
    }

    pub fn hemisphere(system: System, label: MultipletLabel) -> Result<Self> {
        Self::new(system, label, Domain::Hemisphere)
    }
}

fn domain_err(system: System, label: &MultipletLabel) -> crate::Error {
    domain(format!("system {system:?} cannot carry the label {label}"))
}

/// `C_{k₁,k₂} = 2^{k₁} k₁! √((2k₁+1)(k₁+k₂+1) k₂! / (π (2k₁+k₂+1)!))`.
pub fn norm_constant(k1: u32, k2: u32) -> ExactValue {
    let (a, b) = (i64::from(k1), i64::from(k2));
    let scale = int(1i64 << k1.min(62)) * fact(a);
    let scale = if k1 > 62 {
        (0..k1 - 62).fold(scale, |acc, _| acc * int(2))
    } else {
        scale
    };
    let radicand = int((2 * a + 1) * (a + b + 1)) * fact(b) / fact(2 * a + b + 1);
    ExactValue::scaled_sqrt(scale, radicand)
        .expect("positive radicand")
        .with_sqrt_pi_power(-1)
}

/// A basis function with its constant precomputed, for repeated evaluation.
#[derive(Clone, Debug)]
pub struct BasisFn {
    id: BasisId,
    constant: f64,
}

impl BasisFn {
    pub fn new(id: BasisId) -> Result<Self> {
        BasisId::new(id.system, id.label, id.domain)?;
        let constant = match id.label {
            MultipletLabel::Polar { n, .. } => ((f64::from(n) + 1.0) / PI).sqrt(),
            MultipletLabel::Cartesian { k1, k2 } => norm_constant(k1, k2).to_f64_real(),
        };
        Ok(BasisFn { id, constant })
    }

    pub fn id(&self) -> &BasisId {
        &self.id
    }

    /// Value of the disk function at `(x, y)`; no range check.
    pub fn disk_value(&self, x: f64, y: f64) -> Complex64 {
        match (self.id.system, self.id.label) {
            (System::I, MultipletLabel::Polar { n, m }) => {
                let am = m.unsigned_abs();
                let r2 = x * x + y * y;
                let radial = self.constant
                    * r2.sqrt().powi(am as i32)
                    * jacobi_p((n - am) / 2, f64::from(am), 0.0, 1.0 - 2.0 * r2);
                let phase = f64::from(m) * y.atan2(x);
                Complex64::from_polar(radial, phase)
            }
            (System::II, MultipletLabel::Cartesian { k1, k2 }) => Complex64::new(
                self.constant
                    * gegenbauer_c(k2, f64::from(k1) + 1.0, x)
                    * legendre_homogeneous(k1, y, 1.0 - x * x),
                0.0,
            ),
            (System::III, MultipletLabel::Cartesian { k1, k2 }) => Complex64::new(
                self.constant
                    * legendre_homogeneous(k1, x, 1.0 - y * y)
                    * gegenbauer_c(k2, f64::from(k1) + 1.0, y),
                0.0,
            ),
            _ => unreachable!("validated at construction"),
        }
    }

    /// Hemisphere value `ξ₃^{1/2} Ψ` at the projection of `p`.
    pub fn hemisphere_value(&self, p: &HemispherePoint) -> Complex64 {
        let [x, y, z] = p.xi();
        self.disk_value(x, y) * z.max(0.0).sqrt()
    }
}

/// `Ψ` of a disk basis at a disk point.
pub fn psi(basis: &BasisId, p: &DiskPoint) -> Result<Complex64> {
    if basis.domain != Domain::Disk {
        return Err(domain(
            "psi evaluates disk bases; use upsilon on the hemisphere",
        ));
    }
    Ok(BasisFn::new(*basis)?.disk_value(p.x, p.y))
}

/// `Υ` of a hemisphere basis at a hemisphere point.
pub fn upsilon(basis: &BasisId, p: &HemispherePoint) -> Result<Complex64> {
    if basis.domain != Domain::Hemisphere {
        return Err(domain(
            "upsilon evaluates hemisphere bases; use psi on the disk",
        ));
    }
    Ok(BasisFn::new(*basis)?.hemisphere_value(p))
}
