//! The II–III coefficients `U^{n₁,n₂}_{ℓ₁,ℓ₂}`.
//!
//! A coefficient vanishes unless `n₁ ≡ ℓ₂` and `n₂ ≡ ℓ₁ (mod 2)`; the
//! surviving ones fall into four parity families, written with
//! `N = q₁ + q₂ = p₁ + p₂`:
//!
//! | family | ℓ₁ | ℓ₂ | n₁ | n₂ |
//! |---|---|---|---|---|
//! | even–even | 2q₁ | 2q₂ | 2p₁ | 2p₂ |
//! | even–odd | 2q₁ | 2q₂+1 | 2p₁+1 | 2p₂ |
//! | odd–even | 2q₁+1 | 2q₂ | 2p₁ | 2p₂+1 |
//! | odd–odd | 2q₁+1 | 2q₂+1 | 2p₁+1 | 2p₂+1 |

use crate::coupling::{clebsch_gordan, SpinLabel};
use crate::error::{domain, Result};
use crate::exact::{exact_sum, fact, int, ExactValue, Rational};
use crate::hypergeom::{racah_r, HypergeometricSpec, RacahParams};

use super::{gamma_ratio, half_plus, inadmissible, sign, two_pow, Pair, Route};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParityCase {
    EvenEven,
    EvenOdd,
    OddEven,
    OddOdd,
}

/// Half-labels of an allowed II–III entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParitySplit {
    pub case: ParityCase,
    pub q1: i64,
    pub q2: i64,
    pub p1: i64,
    pub p2: i64,
}

impl ParitySplit {
    pub fn big_n(&self) -> i64 {
        self.q1 + self.q2
    }
}

/// Family and half-labels, or `None` for a parity-forbidden entry.
pub fn parity_split(l1: u32, l2: u32, n1: u32, n2: u32) -> Result<Option<ParitySplit>> {
    if l1 + l2 != n1 + n2 {
        return Err(domain(format!(
            "ℓ₁+ℓ₂ = {} and n₁+n₂ = {} must agree",
            l1 + l2,
            n1 + n2
        )));
    }
    if n1 % 2 != l2 % 2 {
        return Ok(None);
    }
    let case = match (l1 % 2, l2 % 2) {
        (0, 0) => ParityCase::EvenEven,
        (0, _) => ParityCase::EvenOdd,
        (_, 0) => ParityCase::OddEven,
        _ => ParityCase::OddOdd,
    };
    let h = |k: u32| i64::from(k / 2);
    Ok(Some(ParitySplit {
        case,
        q1: h(l1),
        q2: h(l2),
        p1: h(n1),
        p2: h(n2),
    }))
}

/// `U^{n₁,n₂}_{ℓ₁,ℓ₂}` by the chosen route; all three agree exactly.
pub fn u_ii_iii(l1: u32, l2: u32, n1: u32, n2: u32, route: Route) -> Result<ExactValue> {
    let split = parity_split(l1, l2, n1, n2)?;
    match route {
        Route::CGSum => cg_sum(l1, n1, l1 + l2),
        Route::Hyper4F3 => match split {
            None => Ok(ExactValue::zero()),
            Some(s) => hyper_4f3(&s),
        },
        Route::Racah => match split {
            None => Ok(ExactValue::zero()),
            Some(s) => racah(&s, RacahVariant::Primary),
        },
        other => Err(inadmissible(other, Pair::TwoThree)),
    }
}

/// `i^{ℓ₁+n₂} Σ_k (-1)^{ℓ₁+k} C^{ℓ₁,0}_{n/2,n/2-k; n/2,k-n/2} C^{n₁,0}_{n/2,n/2-k; n/2,k-n/2}`.
fn cg_sum(l1: u32, n1: u32, n: u32) -> Result<ExactValue> {
    let n2 = n - n1;
    let mut terms = Vec::with_capacity(n as usize + 1);
    for k in 0..=n {
        let two_m = n as i32 - 2 * k as i32;
        let a = SpinLabel::new(n, two_m)?;
        let b = SpinLabel::new(n, -two_m)?;
        let x = clebsch_gordan(a, b, SpinLabel::new(2 * l1, 0)?)?;
        let y = clebsch_gordan(a, b, SpinLabel::new(2 * n1, 0)?)?;
        terms.push(ExactValue::sign(i64::from(l1 + k)) * x * y);
    }
    Ok(ExactValue::i_pow(i64::from(l1 + n2)) * exact_sum(terms.iter())?)
}

/// The balanced `4F3(-q₂, y, q₁+1, q₁+1; u, v, q₁-p₁+1 | 1)` of a family,
/// regularized in its last denominator.
pub fn family_4f3(s: &ParitySplit) -> Result<HypergeometricSpec> {
    let ParitySplit {
        case, q1, q2, p1, ..
    } = *s;
    let (y, u, v) = match case {
        ParityCase::EvenEven => (
            2 * q1 + q2 + 1,
            half_plus(2 * q1 + 1),
            half_plus(q1 + p1 + 1),
        ),
        ParityCase::EvenOdd => (
            2 * q1 + q2 + 2,
            half_plus(2 * q1 + 1),
            half_plus(q1 + p1 + 2),
        ),
        ParityCase::OddEven => (
            2 * q1 + q2 + 2,
            half_plus(2 * q1 + 2),
            half_plus(q1 + p1 + 1),
        ),
        ParityCase::OddOdd => (
            2 * q1 + q2 + 3,
            half_plus(2 * q1 + 2),
            half_plus(q1 + p1 + 2),
        ),
    };
    HypergeometricSpec::with_regularized(
        vec![int(-q2), int(y), int(q1 + 1), int(q1 + 1)],
        vec![u, v, int(q1 - p1 + 1)],
        vec![false, false, true],
    )
}

fn hyper_4f3(s: &ParitySplit) -> Result<ExactValue> {
    let ParitySplit {
        case,
        q1,
        q2,
        p1,
        p2,
    } = *s;
    let series = family_4f3(s)?.eval()?;
    let quarter = |a: i64, b: i64| int(a * b) / int(4);
    let (q, r): (Rational, Rational) = match case {
        ParityCase::EvenEven => (
            sign(q2) * two_pow(-2 * p1) * fact(p2) / fact(p1) * fact(2 * q1) * fact(2 * q1)
                / (fact(4 * q1 + 1) * fact(2 * p1 + p2))
                * gamma_ratio(half_plus(p1), half_plus(q1 + p1 + 1)),
            quarter(4 * p1 + 1, 4 * q1 + 1) * fact(4 * p1 + 2 * p2 + 1) * fact(4 * q1 + 2 * q2 + 1)
                / (fact(2 * p2) * fact(2 * q2)),
        ),
        ParityCase::EvenOdd => (
            sign(q2) * two_pow(-2 * p1 - 1) * fact(p2) / fact(p1) * fact(2 * q1) * fact(2 * q1)
                / (fact(2 * p1 + p2 + 1) * fact(4 * q1 + 1))
                * gamma_ratio(half_plus(p1 + 1), half_plus(q1 + p1 + 2)),
            quarter(4 * p1 + 3, 4 * q1 + 1) * fact(4 * p1 + 2 * p2 + 3) * fact(4 * q1 + 2 * q2 + 2)
                / (fact(2 * p2) * fact(2 * q2 + 1)),
        ),
        ParityCase::OddEven => {
            let n = 2 * p1 + 2 * p2 + 1;
            (
                sign(q2) * two_pow(-2 * p1) * fact(p2) * fact(2 * q1 + 1) * fact(2 * q1 + 1)
                    / (fact(p1) * fact(2 * p1 + p2 + 1) * fact(4 * q1 + 3))
                    * gamma_ratio(half_plus(p1), half_plus(q1 + p1 + 1)),
                quarter(4 * p1 + 1, 4 * q1 + 3) * fact(2 * p1 + n + 1) * fact(2 * q1 + n + 2)
                    / (fact(2 * p2 + 1) * fact(2 * q2)),
            )
        }
        ParityCase::OddOdd => {
            let n = 2 * p1 + 2 * p2 + 2;
            (
                sign(q2) * two_pow(-2 * p1 - 1) * fact(p2) * fact(2 * q1 + 1) * fact(2 * q1 + 1)
                    / (fact(p1) * fact(2 * p1 + p2 + 2) * fact(4 * q1 + 3))
                    * gamma_ratio(half_plus(p1 + 1), half_plus(q1 + p1 + 2)),
                quarter(4 * p1 + 3, 4 * q1 + 3) * fact(2 * p1 + n + 2) * fact(2 * q1 + n + 2)
                    / (fact(2 * p2 + 1) * fact(2 * q2 + 1)),
            )
        }
    };
    ExactValue::scaled_sqrt(q * series, r)
}

/// Which of the two Racah forms of a family to use, or its
/// hypergeometric series in canonical Racah arrangement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RacahVariant {
    /// `R_{q₁}(λ(p₁))`, except the even–odd family which uses `R_{p₁}(λ(q₁))`.
    Primary,
    /// Degree and lattice point swapped, with the matching weight and norm.
    Dual,
    /// `4F3(-p₁, p₁+a, q₁+b, -q₁; N+c, 1, -N | 1)` with its prefactor.
    Series,
}

/// Racah parameters `(α, β, γ, δ)` of a family, for the primary and dual forms.
pub fn racah_family(case: ParityCase, big_n: i64) -> (RacahParams, RacahParams) {
    let n = int(big_n);
    let half = |k: i64| half_plus(k);
    let make = |a: Rational, b: Rational, d: Rational| {
        RacahParams::new(a, b, -(&n + int(1)), d, big_n as u32).expect("γ+1 = -N")
    };
    match case {
        ParityCase::EvenEven => {
            let p = make(n.clone(), -half(big_n), half(big_n));
            (p.clone(), p)
        }
        ParityCase::EvenOdd | ParityCase::OddEven => {
            let plain = make(&n + int(1), -half(big_n), half(big_n));
            let shifted = make(&n + int(1), -half(big_n + 1), half(big_n + 1));
            (plain, shifted)
        }
        ParityCase::OddOdd => {
            let p = make(&n + int(2), -half(big_n + 1), half(big_n + 1));
            (p.clone(), p)
        }
    }
}

/// `U` through the Racah polynomials of its family.
pub fn u_ii_iii_racah(
    l1: u32,
    l2: u32,
    n1: u32,
    n2: u32,
    variant: RacahVariant,
) -> Result<ExactValue> {
    match parity_split(l1, l2, n1, n2)? {
        None => Ok(ExactValue::zero()),
        Some(s) => racah(&s, variant),
    }
}

/// `sign · √ρ / d · R` with `d = d_q √d_r`.
fn weighted(
    sign_k: i64,
    rho: Rational,
    dq: Rational,
    dr: Rational,
    poly: Rational,
) -> Result<ExactValue> {
    ExactValue::scaled_sqrt(sign(sign_k) * poly / dq, rho / dr)
}

fn racah(s: &ParitySplit, variant: RacahVariant) -> Result<ExactValue> {
    let ParitySplit {
        case,
        q1,
        q2,
        p1,
        p2,
    } = *s;
    let big_n = s.big_n();
    let nn = big_n;
    let sg = p1 + q2;
    let (primary, dual) = racah_family(case, big_n);
    let r = |deg: i64, x: i64, p: &RacahParams| racah_r(deg as u32, x as u32, p);
    if variant == RacahVariant::Series {
        return canonical_series(s);
    }
    let primary_form = variant == RacahVariant::Primary;
    match case {
        ParityCase::EvenEven => {
            let rho = |a: i64, b: i64| {
                two_pow(4 * a)
                    * int((2 * nn + 1) * (4 * a + 1))
                    * fact(2 * b)
                    * fact(a + nn)
                    * fact(a + nn)
                    / (fact(2 * a + 2 * nn + 1) * fact(b) * fact(b))
            };
            let dq = |a: i64, b: i64| fact(b) * two_pow(-2 * a) / fact(a + nn);
            let dr = |a: i64, b: i64| {
                int(2 * nn + 1) * fact(2 * a + 2 * nn + 1) / (int(4 * a + 1) * fact(2 * b))
            };
            if primary_form {
                weighted(
                    sg,
                    rho(p1, p2),
                    dq(q1, q2),
                    dr(q1, q2),
                    r(q1, p1, &primary)?,
                )
            } else {
                weighted(
                    sg,
                    rho(q1, q2),
                    dq(p1, p2),
                    dr(p1, p2),
                    r(p1, q1, &primary)?,
                )
            }
        }
        ParityCase::EvenOdd => {
            if primary_form {
                let rho = two_pow(4 * q1 + 1)
                    * int(4 * q1 + 1)
                    * fact(2 * q2 + 1)
                    * fact(q1 + nn + 1).pow(2)
                    / (int(nn + 1) * fact(2 * q1 + 2 * nn + 2) * fact(q2).pow(2));
                let dq = fact(p2) * two_pow(-2 * p1) / fact(p1 + nn + 1);
                let dr = int(nn + 1) * fact(2 * p1 + 2 * nn + 3)
                    / (int(2 * (4 * p1 + 3)) * fact(2 * p2));
                weighted(sg, rho, dq, dr, r(p1, q1, &primary)?)
            } else {
                let rho = two_pow(4 * p1 + 1)
                    * int((2 * nn + 1) * (2 * nn + 3) * (4 * p1 + 3))
                    * fact(2 * p2)
                    * fact(p1 + nn + 1).pow(2)
                    / (int(3 * (nn + 1)) * fact(2 * p1 + 2 * nn + 3) * fact(p2).pow(2));
                let dq = fact(q2) * two_pow(-2 * q1) / fact(q1 + nn + 1);
                let dr = int((nn + 1) * (2 * nn + 1) * (2 * nn + 3)) * fact(2 * q1 + 2 * nn + 2)
                    / (int(6 * (4 * q1 + 1)) * fact(2 * q2 + 1));
                weighted(sg, rho, dq, dr, r(q1, p1, &dual)?)
            }
        }
        ParityCase::OddEven => {
            if primary_form {
                let rho = two_pow(4 * p1 + 1)
                    * int(4 * p1 + 1)
                    * fact(2 * p2 + 1)
                    * fact(p1 + nn + 1).pow(2)
                    / (int(nn + 1) * fact(2 * p1 + 2 * nn + 2) * fact(p2).pow(2));
                let dq = fact(q2) * two_pow(-2 * q1) / fact(q1 + nn + 1);
                let dr = int(nn + 1) * fact(2 * q1 + 2 * nn + 3)
                    / (int(2 * (4 * q1 + 3)) * fact(2 * q2));
                weighted(sg, rho, dq, dr, r(q1, p1, &primary)?)
            } else {
                let rho = two_pow(4 * q1 + 1)
                    * int((2 * nn + 1) * (2 * nn + 3) * (4 * q1 + 3))
                    * fact(2 * q2)
                    * fact(q1 + nn + 1).pow(2)
                    / (int(3 * (nn + 1)) * fact(2 * q1 + 2 * nn + 3) * fact(q2).pow(2));
                let dq = fact(p2) * two_pow(-2 * p1) / fact(p1 + nn + 1);
                let dr = int((nn + 1) * (2 * nn + 1) * (2 * nn + 3)) * fact(2 * p1 + 2 * nn + 2)
                    / (int(6 * (4 * p1 + 1)) * fact(2 * p2 + 1));
                weighted(sg, rho, dq, dr, r(p1, q1, &dual)?)
            }
        }
        ParityCase::OddOdd => {
            let rho = |a: i64, b: i64| {
                two_pow(4 * a + 2)
                    * int((2 * nn + 3) * (4 * a + 3))
                    * fact(2 * b + 1)
                    * fact(a + nn + 2).pow(2)
                    / (int(3 * (nn + 1) * (nn + 2)) * fact(2 * a + 2 * nn + 4) * fact(b).pow(2))
            };
            let dq = |a: i64, b: i64| fact(b) * two_pow(-2 * a - 1) / fact(a + nn + 2);
            let dr = |a: i64, b: i64| {
                int((nn + 1) * (nn + 2) * (2 * nn + 3)) * fact(2 * a + 2 * nn + 4)
                    / (int(3 * (4 * a + 3)) * fact(2 * b + 1))
            };
            if primary_form {
                weighted(
                    sg,
                    rho(p1, p2),
                    dq(q1, q2),
                    dr(q1, q2),
                    r(q1, p1, &primary)?,
                )
            } else {
                weighted(
                    sg,
                    rho(q1, q2),
                    dq(p1, p2),
                    dr(p1, p2),
                    r(p1, q1, &primary)?,
                )
            }
        }
    }
}

/// The Racah-arranged `4F3` of a family (the end point of the
/// Whipple–reversal–Whipple chain) and the coefficient built from it.
pub(crate) fn canonical_spec(s: &ParitySplit) -> Result<HypergeometricSpec> {
    let ParitySplit { case, q1, p1, .. } = *s;
    let nn = s.big_n();
    let (a, b, c) = match case {
        ParityCase::EvenEven => (half_plus(p1), half_plus(q1), nn + 1),
        ParityCase::EvenOdd => (half_plus(p1 + 1), half_plus(q1), nn + 2),
        ParityCase::OddEven => (half_plus(p1), half_plus(q1 + 1), nn + 2),
        ParityCase::OddOdd => (half_plus(p1 + 1), half_plus(q1 + 1), nn + 3),
    };
    HypergeometricSpec::new(
        vec![int(-p1), a, b, int(-q1)],
        vec![int(c), int(1), int(-nn)],
    )
}

fn canonical_series(s: &ParitySplit) -> Result<ExactValue> {
    let ParitySplit {
        case,
        q1,
        q2,
        p1,
        p2,
    } = *s;
    let nn = s.big_n();
    let series = canonical_spec(s)?.eval()?;
    let sg = sign(p1 + q2);
    let (q, r) = match case {
        ParityCase::EvenEven => (
            sg * two_pow(2 * (q1 + p1)) * fact(q1 + nn) * fact(p1 + nn) / (fact(q2) * fact(p2)),
            int((4 * q1 + 1) * (4 * p1 + 1)) * fact(2 * q2) * fact(2 * p2)
                / (fact(2 * q1 + 2 * nn + 1) * fact(2 * p1 + 2 * nn + 1)),
        ),
        ParityCase::EvenOdd => (
            sg * two_pow(2 * q1 + 2 * p1 + 1) * fact(q1 + nn + 1) * fact(p1 + nn + 1)
                / (int(nn + 1) * fact(q2) * fact(p2)),
            int((4 * q1 + 1) * (4 * p1 + 3)) * fact(2 * q2 + 1) * fact(2 * p2)
                / (fact(2 * q1 + 2 * nn + 2) * fact(2 * p1 + 2 * nn + 3)),
        ),
        ParityCase::OddEven => (
            sg * two_pow(2 * q1 + 2 * p1 + 1) * fact(q1 + nn + 1) * fact(p1 + nn + 1)
                / (int(nn + 1) * fact(q2) * fact(p2)),
            int((4 * p1 + 1) * (4 * q1 + 3)) * fact(2 * p2 + 1) * fact(2 * q2)
                / (fact(2 * nn + 2 * p1 + 2) * fact(2 * nn + 2 * q1 + 3)),
        ),
        ParityCase::OddOdd => (
            sg * two_pow(2 * q1 + 2 * p1 + 2) * fact(q1 + nn + 2) * fact(p1 + nn + 2)
                / (int((nn + 1) * (nn + 2)) * fact(q2) * fact(p2)),
            int((4 * p1 + 3) * (4 * q1 + 3)) * fact(2 * p2 + 1) * fact(2 * q2 + 1)
                / (fact(2 * nn + 2 * p1 + 4) * fact(2 * nn + 2 * q1 + 4)),
        ),
    };
    ExactValue::scaled_sqrt(q * series, r)
}
