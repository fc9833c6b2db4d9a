use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{rational_to_f64, square_free_split, Rational};
use crate::error::{domain, Result};

/// A number `i^phase · magnitude · √radicand · π^(sqrt_pi_power/2)`.
///
/// Canonical form: `phase ∈ {0,1,2,3}`, `magnitude ≥ 0`, `radicand` a
/// square-free positive integer. Zero is `(0, 0, 1)`. Two canonical values
/// are equal iff they are equal as complex numbers, so `==` is exact
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExactValue {
    phase: u8,
    magnitude: Rational,
    radicand: Rational,
    sqrt_pi_power: i32,
}

/// Canonicalises `i^phase · magnitude · √radicand`: folds the sign of the
/// magnitude into the phase and moves every square factor of the radicand
/// into the magnitude.
pub fn sqrt_normalize(phase: i64, magnitude: Rational, radicand: Rational) -> Result<ExactValue> {
    if radicand.is_negative() {
        return Err(domain(format!("negative radicand {radicand}")));
    }
    if magnitude.is_zero() || radicand.is_zero() {
        return Ok(ExactValue::zero());
    }
    let mut phase = phase.rem_euclid(4) as u8;
    let mut magnitude = magnitude;
    if magnitude.is_negative() {
        magnitude = -magnitude;
        phase = (phase + 2) % 4;
    }
    // √(p/q) = √(pq)/q
    let (p, q) = (radicand.numer().clone(), radicand.denom().clone());
    let pq = (&p * &q).to_biguint().expect("positive");
    let (root, free) = square_free_split(&pq);
    magnitude *= Rational::new(BigInt::from(root), q);
    Ok(ExactValue {
        phase,
        magnitude,
        radicand: Rational::from_integer(BigInt::from(free)),
        sqrt_pi_power: 0,
    })
}

impl ExactValue {
    /// Builds and normalises `i^phase · magnitude · √radicand`.
    pub fn new(phase: i64, magnitude: Rational, radicand: Rational) -> Result<Self> {
        sqrt_normalize(phase, magnitude, radicand)
    }

    pub fn zero() -> Self {
        ExactValue {
            phase: 0,
            magnitude: Rational::zero(),
            radicand: Rational::one(),
            sqrt_pi_power: 0,
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    /// `i^k`.
    pub fn i_pow(k: i64) -> Self {
        ExactValue {
            phase: k.rem_euclid(4) as u8,
            ..Self::one()
        }
    }

    /// `(-1)^k`.
    pub fn sign(k: i64) -> Self {
        Self::i_pow(2 * k.rem_euclid(2))
    }

    pub fn from_rational(q: Rational) -> Self {
        sqrt_normalize(0, q, Rational::one()).expect("radicand 1")
    }

    /// `√r` for `r ≥ 0`.
    pub fn sqrt(r: Rational) -> Result<Self> {
        sqrt_normalize(0, Rational::one(), r)
    }

    /// `q · √r`.
    pub fn scaled_sqrt(q: Rational, r: Rational) -> Result<Self> {
        sqrt_normalize(0, q, r)
    }

    /// Multiplies by `π^(k/2)`.
    pub fn with_sqrt_pi_power(mut self, k: i32) -> Self {
        if !self.is_zero() {
            self.sqrt_pi_power += k;
        }
        self
    }

    pub fn phase(&self) -> u8 {
        self.phase
    }

    pub fn magnitude(&self) -> &Rational {
        &self.magnitude
    }

    pub fn radicand(&self) -> &Rational {
        &self.radicand
    }

    /// Exponent `k` of the symbolic factor `π^(k/2)`.
    pub fn sqrt_pi_power(&self) -> i32 {
        self.sqrt_pi_power
    }

    pub fn is_zero(&self) -> bool {
        self.magnitude.is_zero()
    }

    /// True for real values (phase 0 or 2, or zero).
    pub fn is_real(&self) -> bool {
        self.is_zero() || self.phase.is_multiple_of(2)
    }

    /// `magnitude² · radicand`, i.e. `|value|²` without the `π` factor.
    pub fn abs2(&self) -> Rational {
        &self.magnitude * &self.magnitude * &self.radicand
    }

    pub fn conj(&self) -> Self {
        ExactValue {
            phase: (4 - self.phase) % 4,
            ..self.clone()
        }
    }

    /// Multiplies by a rational.
    pub fn scale(&self, q: &Rational) -> Self {
        let mut out = sqrt_normalize(
            self.phase as i64,
            &self.magnitude * q,
            self.radicand.clone(),
        )
        .expect("radicand already valid");
        out.sqrt_pi_power = if out.is_zero() { 0 } else { self.sqrt_pi_power };
        out
    }

    /// Real part signed magnitude for values known to be real.
    pub fn signed_real(&self) -> Option<(Rational, Rational)> {
        match self.phase {
            _ if self.is_zero() => Some((Rational::zero(), Rational::one())),
            0 => Some((self.magnitude.clone(), self.radicand.clone())),
            2 => Some((-self.magnitude.clone(), self.radicand.clone())),
            _ => None,
        }
    }

    /// Double-precision value; the square root is taken once of the exact
    /// rational `magnitude² · radicand`.
    pub fn to_complex(&self) -> Complex64 {
        if self.is_zero() {
            return Complex64::new(0.0, 0.0);
        }
        let mut mag = rational_to_f64(&self.abs2()).sqrt();
        if self.sqrt_pi_power != 0 {
            mag *= std::f64::consts::PI.sqrt().powi(self.sqrt_pi_power);
        }
        match self.phase {
            0 => Complex64::new(mag, 0.0),
            1 => Complex64::new(0.0, mag),
            2 => Complex64::new(-mag, 0.0),
            _ => Complex64::new(0.0, -mag),
        }
    }

    pub fn to_f64_real(&self) -> f64 {
        self.to_complex().re
    }
}

/// `exact_mul`: the algebra is closed under multiplication. Radicands are
/// square-free, so only their gcd needs extracting.
impl Mul<&ExactValue> for &ExactValue {
    type Output = ExactValue;

    fn mul(self, rhs: &ExactValue) -> ExactValue {
        if self.is_zero() || rhs.is_zero() {
            return ExactValue::zero();
        }
        let a = self.radicand.to_integer();
        let b = rhs.radicand.to_integer();
        let g = a.gcd(&b);
        let radicand = (&a / &g) * (&b / &g);
        ExactValue {
            phase: (self.phase + rhs.phase) % 4,
            magnitude: &self.magnitude * &rhs.magnitude * Rational::from_integer(g),
            radicand: Rational::from_integer(radicand),
            sqrt_pi_power: self.sqrt_pi_power + rhs.sqrt_pi_power,
        }
    }
}

impl Mul for ExactValue {
    type Output = ExactValue;

    fn mul(self, rhs: ExactValue) -> ExactValue {
        &self * &rhs
    }
}

impl Mul<&ExactValue> for ExactValue {
    type Output = ExactValue;

    fn mul(self, rhs: &ExactValue) -> ExactValue {
        &self * rhs
    }
}

impl Neg for ExactValue {
    type Output = ExactValue;

    fn neg(self) -> ExactValue {
        &self * &ExactValue::sign(1)
    }
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let (sign, unit) = match self.phase {
            0 => ("", ""),
            1 => ("", "i·"),
            2 => ("-", ""),
            _ => ("-", "i·"),
        };
        write!(f, "{sign}{unit}{}", self.magnitude)?;
        if !self.radicand.is_one() {
            write!(f, "·√{}", self.radicand)?;
        }
        if self.sqrt_pi_power != 0 {
            write!(f, "·π^({}/2)", self.sqrt_pi_power)?;
        }
        Ok(())
    }
}

impl fmt::Debug for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactValue({self})")
    }
}
