//! Terminating hypergeometric series `pFq(a; b | 1)` with exact rational
//! parameters, the discrete orthogonal polynomials built from them, and the
//! transformations used to bring balanced `4F3` series to Racah form.
//!
//! A denominator parameter may be flagged *regularized*: the series is then
//! divided by `Γ(b)`, and its terms carry `1/Γ(b+s)` instead of `1/(b)_s`.
//! This is the entire function of `b` that closed forms of the shape
//! `1/(k-1)! · pFq(…; k; …)` denote when `k` is a nonpositive integer.

mod discrete;
mod transform;

use std::fmt;

use num_traits::{One, ToPrimitive, Zero};

use crate::error::{domain, Error, Result};
use crate::exact::{as_integer, fact, is_nonpositive_integer, rgamma_int, Rational};

pub use discrete::{dual_hahn_r, hahn_q, hahn_weight_norm, racah_r, RacahParams, TruncationBranch};
pub use transform::{transform_f32, transform_reversal, transform_whipple, Transformed};

/// Parameters of a terminating `pFq(…|1)`.
#[derive(Clone, PartialEq, Eq)]
pub struct HypergeometricSpec {
    numerator: Vec<Rational>,
    denominator: Vec<Rational>,
    regularized: Vec<bool>,
}

impl HypergeometricSpec {
    /// Plain series; rejects nonterminating parameter lists and poles that
    /// fall inside the summation range.
    pub fn new(numerator: Vec<Rational>, denominator: Vec<Rational>) -> Result<Self> {
        let regularized = vec![false; denominator.len()];
        Self::with_regularized(numerator, denominator, regularized)
    }

    /// Series with the given denominators regularized (see module docs).
    pub fn with_regularized(
        numerator: Vec<Rational>,
        denominator: Vec<Rational>,
        regularized: Vec<bool>,
    ) -> Result<Self> {
        if regularized.len() != denominator.len() {
            return Err(domain("one regularization flag per denominator parameter"));
        }
        for (b, &r) in denominator.iter().zip(&regularized) {
            if r && as_integer(b).is_none() {
                return Err(domain(format!(
                    "cannot regularize non-integer denominator {b}"
                )));
            }
        }
        let spec = HypergeometricSpec {
            numerator,
            denominator,
            regularized,
        };
        let degree = spec.try_termination_degree()?;
        spec.check_poles(degree)?;
        Ok(spec)
    }

    /// Convenience constructor from small integer ratios `(num, den)`.
    pub fn from_ratios(numerator: &[(i64, i64)], denominator: &[(i64, i64)]) -> Result<Self> {
        let conv = |v: &[(i64, i64)]| v.iter().map(|&(n, d)| crate::exact::rat(n, d)).collect();
        Self::new(conv(numerator), conv(denominator))
    }

    /// Same parameters with denominator `index` regularized.
    pub fn regularize(mut self, index: usize) -> Result<Self> {
        if index >= self.denominator.len() {
            return Err(domain(format!("no denominator parameter #{index}")));
        }
        self.regularized[index] = true;
        Self::with_regularized(self.numerator, self.denominator, self.regularized)
    }

    pub fn numerator(&self) -> &[Rational] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[Rational] {
        &self.denominator
    }

    pub fn is_regularized(&self, index: usize) -> bool {
        self.regularized[index]
    }

    pub fn any_regularized(&self) -> bool {
        self.regularized.iter().any(|&r| r)
    }

    /// `(p, q)` for a `pFq`.
    pub fn order(&self) -> (usize, usize) {
        (self.numerator.len(), self.denominator.len())
    }

    /// Smallest `|a|` over the nonpositive-integer numerator parameters.
    pub fn termination_degree(&self) -> u64 {
        self.try_termination_degree()
            .expect("validated at construction")
    }

    fn try_termination_degree(&self) -> Result<u64> {
        self.numerator
            .iter()
            .filter(|a| is_nonpositive_integer(a))
            .map(|a| (-a).to_integer().to_u64().expect("small"))
            .min()
            .ok_or_else(|| domain("series does not terminate: no nonpositive-integer numerator"))
    }

    fn check_poles(&self, degree: u64) -> Result<()> {
        for (index, (b, &reg)) in self.denominator.iter().zip(&self.regularized).enumerate() {
            if reg || !is_nonpositive_integer(b) {
                continue;
            }
            // (b)_s vanishes from s = 1 - b on
            let first_zero = (1 - as_integer(b).expect("integer")) as u64;
            if first_zero <= degree {
                return Err(Error::Pole {
                    index,
                    value: b.to_string(),
                    term: first_zero as usize,
                });
            }
        }
        Ok(())
    }

    /// Balanced (Saalschützian): `Σ a + 1 = Σ b`.
    pub fn is_saalschutzian(&self) -> bool {
        let a: Rational = self.numerator.iter().sum();
        let b: Rational = self.denominator.iter().sum();
        a + Rational::one() == b
    }

    /// Exact value of the (possibly regularized) terminating series.
    pub fn eval(&self) -> Result<Rational> {
        let degree = self.termination_degree();
        self.check_poles(degree)?;
        let mut total = Rational::zero();
        // running Π(a)_s and Π(b)_s s! over the unregularized denominators
        let mut num = Rational::one();
        let mut den = Rational::one();
        for s in 0..=degree {
            if s > 0 {
                let prev = Rational::from_integer((s - 1).into());
                for a in &self.numerator {
                    num *= a + &prev;
                }
                for (b, &reg) in self.denominator.iter().zip(&self.regularized) {
                    if !reg {
                        den *= b + &prev;
                    }
                }
                den *= Rational::from_integer(s.into());
            }
            if num.is_zero() {
                break;
            }
            let mut term = &num / &den;
            for (b, &reg) in self.denominator.iter().zip(&self.regularized) {
                if reg {
                    let k = as_integer(b).expect("integer") + s as i64;
                    term *= rgamma_int(k);
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Naive float evaluation, term by term.
    pub fn eval_f64(&self) -> f64 {
        let degree = self.termination_degree();
        let f = |x: &Rational| crate::exact::rational_to_f64(x);
        let mut total = 0.0;
        let mut term = 1.0;
        for s in 0..=degree {
            let mut t = term;
            for (b, &reg) in self.denominator.iter().zip(&self.regularized) {
                if reg {
                    let k = as_integer(b).expect("integer") + s as i64;
                    t *= if k <= 0 {
                        0.0
                    } else {
                        crate::exact::rational_to_f64(&fact(k - 1).recip())
                    };
                }
            }
            total += t;
            let sf = s as f64;
            let mut ratio = 1.0 / (sf + 1.0);
            for a in &self.numerator {
                ratio *= f(a) + sf;
            }
            for (b, &reg) in self.denominator.iter().zip(&self.regularized) {
                if !reg {
                    ratio /= f(b) + sf;
                }
            }
            term *= ratio;
        }
        total
    }

    /// Same series with its parameters listed in another order; `num[i]` is
    /// the index of the old numerator that goes to position `i`.
    pub fn permuted(&self, num: &[usize], den: &[usize]) -> Result<Self> {
        let is_perm = |p: &[usize], len: usize| {
            let mut seen = vec![false; len];
            p.len() == len
                && p.iter()
                    .all(|&i| i < len && !std::mem::replace(&mut seen[i], true))
        };
        if !is_perm(num, self.numerator.len()) || !is_perm(den, self.denominator.len()) {
            return Err(domain("not a permutation of the parameter positions"));
        }
        Self::with_regularized(
            num.iter().map(|&i| self.numerator[i].clone()).collect(),
            den.iter().map(|&i| self.denominator[i].clone()).collect(),
            den.iter().map(|&i| self.regularized[i]).collect(),
        )
    }

    /// Equality of the numerator and denominator parameter multisets.
    pub fn same_parameters(&self, other: &Self) -> bool {
        let sorted = |v: &[Rational]| {
            let mut v = v.to_vec();
            v.sort();
            v
        };
        sorted(&self.numerator) == sorted(&other.numerator)
            && sorted(&self.denominator) == sorted(&other.denominator)
    }
}

impl fmt::Debug for HypergeometricSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Rational]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        let den = self
            .denominator
            .iter()
            .zip(&self.regularized)
            .map(|(b, &r)| if r { format!("[{b}]") } else { b.to_string() })
            .collect::<Vec<_>>()
            .join(", ");
        let (p, q) = self.order();
        write!(f, "{p}F{q}({}; {den} | 1)", join(&self.numerator))
    }
}

/// Exact value of a terminating series at unit argument.
pub fn eval_pfq_unit(spec: &HypergeometricSpec) -> Result<Rational> {
    spec.eval()
}

pub fn is_saalschutzian(spec: &HypergeometricSpec) -> bool {
    spec.is_saalschutzian()
}
