//! The Gegenbauer–Legendre moment integral and the Whipple–reversal–Whipple
//! chain that carries the II–III series to Racah form.

use num_traits::Zero;

use crate::error::{domain, Result};
use crate::exact::{fact, int, pochhammer, ExactValue, Rational};
use crate::hypergeom::{transform_reversal, transform_whipple, HypergeometricSpec, Transformed};

use super::two_three::{canonical_spec, family_4f3, ParityCase, ParitySplit};
use super::{gamma_ratio, half_plus, sign, two_pow};

/// `J^{μ,λ}_{n,m} = ∫₋₁¹ (1-x²)^μ C^λ_n(x) P_m(x) dx`, zero when `n + m` is odd.
pub fn gegenbauer_legendre_moment(
    mu: u32,
    lambda: &Rational,
    n: u32,
    m: u32,
) -> Result<ExactValue> {
    if *lambda <= Rational::zero() {
        return Err(domain(format!("λ = {lambda} must be positive")));
    }
    if (n + m) % 2 == 1 {
        return Ok(ExactValue::zero());
    }
    let mu = i64::from(mu);
    let odd = i64::from(n % 2);
    let (q, p) = (i64::from(n / 2), i64::from(m / 2));
    let spec = HypergeometricSpec::with_regularized(
        vec![int(-q), int(q + odd) + lambda, int(mu + 1), int(mu + 1)],
        vec![
            lambda + Rational::new(1.into(), 2.into()),
            half_plus(mu + p + 1 + odd),
            int(mu - p + 1),
        ],
        vec![false, false, true],
    )?;
    let two_lambda = lambda * int(2);
    let value = sign(p) * pochhammer(&two_lambda, (2 * q + odd) as u64) / fact(2 * q + odd)
        * gamma_ratio(half_plus(p + odd), half_plus(mu + p + 1 + odd))
        / fact(p)
        * fact(mu)
        * fact(mu)
        * spec.eval()?;
    Ok(ExactValue::from_rational(value))
}

/// The three transformations from a family's II–III series to its
/// canonical Racah arrangement.
#[derive(Clone, Debug)]
pub struct RacahChain {
    pub start: HypergeometricSpec,
    pub steps: [Transformed; 3],
}

impl RacahChain {
    /// Product of the three step prefactors.
    pub fn prefactor(&self) -> Rational {
        self.steps.iter().map(|t| &t.prefactor).product()
    }

    pub fn end(&self) -> &HypergeometricSpec {
        &self.steps[2].spec
    }

    pub fn value(&self) -> Result<Rational> {
        Ok(self.prefactor() * self.end().eval()?)
    }
}

/// Families with a known closed form at the end of the chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainFamily {
    EvenEven,
    OddEven,
    OddOdd,
}

impl ChainFamily {
    fn case(self) -> ParityCase {
        match self {
            ChainFamily::EvenEven => ParityCase::EvenEven,
            ChainFamily::OddEven => ParityCase::OddEven,
            ChainFamily::OddOdd => ParityCase::OddOdd,
        }
    }
}

fn split(case: ParityCase, q1: u32, q2: u32, p1: u32, p2: u32) -> Result<ParitySplit> {
    if q1 + q2 != p1 + p2 {
        return Err(domain(format!(
            "q₁+q₂ = {} differs from p₁+p₂ = {}",
            q1 + q2,
            p1 + p2
        )));
    }
    let w = i64::from;
    Ok(ParitySplit {
        case,
        q1: w(q1),
        q2: w(q2),
        p1: w(p1),
        p2: w(p2),
    })
}

/// Whipple, reversal, Whipple applied to the family series
/// `4F3(-q₂, y, q₁+1, q₁+1; u, v, q₁-p₁+1)`.
pub fn racah_chain(case: ParityCase, q1: u32, q2: u32, p1: u32, p2: u32) -> Result<RacahChain> {
    let s = split(case, q1, q2, p1, p2)?;
    let start = family_4f3(&s)?;
    // x = z = q₁+1, y, u, v, w in place
    let first = transform_whipple(&start.permuted(&[0, 2, 1, 3], &[0, 1, 2])?)?;
    // leading -p₁; the former -q₂ becomes z
    let second = transform_reversal(&first.spec.permuted(&[1, 2, 3, 0], &[1, 0, 2])?)?;
    // z = -q₁, u = -(q₁+p₁), v = q₂-p₁+1, w = N+c
    let third = transform_whipple(&second.spec.permuted(&[0, 1, 2, 3], &[1, 2, 0])?)?;
    Ok(RacahChain {
        start,
        steps: [first, second, third],
    })
}

/// The closed form at the end of the chain: its prefactor and the
/// canonical Racah series.
pub fn racah_chain_closed_form(
    family: ChainFamily,
    q1: u32,
    q2: u32,
    p1: u32,
    p2: u32,
) -> Result<(Rational, HypergeometricSpec)> {
    let s = split(family.case(), q1, q2, p1, p2)?;
    let (q1, q2, p1, p2) = (s.q1, s.q2, s.p1, s.p2);
    let nn = s.big_n();
    let f = fact;
    let prefactor = match family {
        ChainFamily::EvenEven => {
            sign(p1)
                * two_pow(2 * q1 + 4 * p1 + 1)
                * gamma_ratio(half_plus(q1 + p1 + 1), half_plus(p1))
                * f(p1)
                * f(2 * q2)
                * f(2 * p2)
                * f(q1 + nn)
                * f(p1 + nn).pow(2)
                * f(4 * q1 + 1)
                / (f(q2)
                    * f(p2).pow(2)
                    * f(2 * q1).pow(2)
                    * f(2 * q1 + 2 * nn + 1)
                    * f(2 * p1 + 2 * nn + 1))
        }
        ChainFamily::OddEven => {
            sign(p1)
                * two_pow(2 * (q1 + 2 * p1 + 1))
                * gamma_ratio(half_plus(q1 + p1 + 1), half_plus(p1))
                * f(p1)
                * f(2 * q2)
                * f(2 * p2 + 1)
                * f(q1 + nn + 1)
                * f(p1 + nn + 1).pow(2)
                * f(4 * q1 + 3)
                / (int(nn + 1)
                    * f(q2)
                    * f(p2).pow(2)
                    * f(2 * q1 + 1).pow(2)
                    * f(2 * q1 + 2 * nn + 3)
                    * f(2 * p1 + 2 * nn + 2))
        }
        ChainFamily::OddOdd => {
            sign(p1)
                * two_pow(2 * (q1 + 2 * p1 + 1))
                * gamma_ratio(half_plus(q1 + p1 + 2), half_plus(p1 + 1))
                * f(p1)
                * f(2 * q2 + 1)
                * f(2 * p2 + 1)
                * f(q1 + nn + 1)
                * f(p1 + nn + 1)
                * f(p1 + nn + 2)
                * f(4 * q1 + 3)
                / (int((nn + 1) * (nn + 2))
                    * f(q2)
                    * f(p2).pow(2)
                    * f(2 * q1 + 1).pow(2)
                    * f(2 * q1 + 2 * nn + 3)
                    * f(2 * p1 + 2 * nn + 3))
        }
    };
    Ok((prefactor, canonical_spec(&s)?))
}
