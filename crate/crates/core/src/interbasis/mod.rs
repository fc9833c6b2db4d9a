//! Interbasis expansion coefficients within a multiplet of fixed `n`.
//!
//! * `W^{n,m}_{n₁,n₂}`: `Υ^II_{n₁,n₂} = Σ_m W Υ^I_{n,m}`;
//! * `W̃^{n,m}_{n₁,n₂} = W*`: the inverse expansion of `Υ^I` in basis II;
//! * `Ŵ^{n,m}_{ℓ₁,ℓ₂} = (-1)^{ℓ₁} (-i)^m W^{n,m}_{ℓ₁,ℓ₂}`: `Υ^III` in basis I;
//! * `U^{n₁,n₂}_{ℓ₁,ℓ₂}`: `Υ^III_{ℓ₁,ℓ₂} = Σ_{n₂} U Υ^II_{n₁,n₂}`.
//!
//! Each coefficient is the overlap `(Ψ_source, Ψ_target)` on the disk.

mod identities;
mod matrix;
mod two_three;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bases::{MultipletLabel, System};
use crate::coupling::special_cg;
use crate::error::{domain, Error, Result};
use crate::exact::{fact, int, rat, ExactValue, Rational};
use crate::hypergeom::{hahn_q, hahn_weight_norm, HypergeometricSpec};

pub use identities::{
    gegenbauer_legendre_moment, racah_chain, racah_chain_closed_form, ChainFamily, RacahChain,
};
pub use matrix::{assemble_matrix, CoefficientMatrix};
pub use two_three::{
    family_4f3, parity_split, racah_family, u_ii_iii, u_ii_iii_racah, ParityCase, ParitySplit,
    RacahVariant,
};

/// The three interbasis pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pair {
    #[serde(rename = "I-II")]
    OneTwo,
    #[serde(rename = "I-III")]
    OneThree,
    #[serde(rename = "II-III")]
    TwoThree,
}

impl Pair {
    pub const ALL: [Pair; 3] = [Pair::OneTwo, Pair::OneThree, Pair::TwoThree];

    pub fn routes(self) -> &'static [Route] {
        match self {
            Pair::OneTwo | Pair::OneThree => &[Route::Hyper3F2, Route::ClebschGordan, Route::Hahn],
            Pair::TwoThree => &[Route::CGSum, Route::Hyper4F3, Route::Racah],
        }
    }

    pub fn default_route(self) -> Route {
        self.routes()[0]
    }

    pub fn admits(self, route: Route) -> bool {
        self.routes().contains(&route)
    }

    /// `(row system, column system)` of the coefficient matrix.
    pub fn systems(self) -> (System, System) {
        match self {
            Pair::OneTwo => (System::II, System::I),
            Pair::OneThree => (System::III, System::I),
            Pair::TwoThree => (System::III, System::II),
        }
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pair::OneTwo => "I-II",
            Pair::OneThree => "I-III",
            Pair::TwoThree => "II-III",
        })
    }
}

impl FromStr for Pair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "I-II" => Ok(Pair::OneTwo),
            "I-III" => Ok(Pair::OneThree),
            "II-III" => Ok(Pair::TwoThree),
            _ => Err(domain(format!(
                "unknown pair {s:?}; expected I-II, I-III or II-III"
            ))),
        }
    }
}

/// Closed form used to evaluate a coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Route {
    #[serde(rename = "3f2")]
    Hyper3F2,
    #[serde(rename = "cg")]
    ClebschGordan,
    #[serde(rename = "hahn")]
    Hahn,
    #[serde(rename = "cgsum")]
    CGSum,
    #[serde(rename = "4f3")]
    Hyper4F3,
    #[serde(rename = "racah")]
    Racah,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Hyper3F2 => "3f2",
            Route::ClebschGordan => "cg",
            Route::Hahn => "hahn",
            Route::CGSum => "cgsum",
            Route::Hyper4F3 => "4f3",
            Route::Racah => "racah",
        })
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "3f2" => Ok(Route::Hyper3F2),
            "cg" => Ok(Route::ClebschGordan),
            "hahn" => Ok(Route::Hahn),
            "cgsum" => Ok(Route::CGSum),
            "4f3" => Ok(Route::Hyper4F3),
            "racah" => Ok(Route::Racah),
            _ => Err(domain(format!("unknown route {s:?}"))),
        }
    }
}

fn inadmissible(route: Route, pair: Pair) -> Error {
    Error::InadmissibleRoute {
        route: route.to_string(),
        pair: pair.to_string(),
    }
}

fn check_labels(n: u32, m: i32, n1: u32) -> Result<()> {
    MultipletLabel::polar(n, m)?;
    if n1 > n {
        return Err(domain(format!("n₁ = {n1} exceeds n = {n}")));
    }
    Ok(())
}

/// `i^{n₁} (-1)^{(m+|m|)/2}`.
fn w_phase(m: i32, n1: u32) -> ExactValue {
    let flip = if m > 0 { m as i64 } else { 0 };
    ExactValue::i_pow(i64::from(n1) + 2 * flip)
}

/// The regularized `3F2(-n₂, n₁+1, -(n+m)/2; -n, n₁-(n+m)/2+1 | 1) / Γ(n₁-(n+m)/2+1)`
/// of the hypergeometric form of `W`.
pub(crate) fn w_3f2_spec(n: u32, m: i32, n1: u32) -> Result<HypergeometricSpec> {
    let (n, n1) = (i64::from(n), i64::from(n1));
    let j = (n + i64::from(m)) / 2;
    HypergeometricSpec::with_regularized(
        vec![int(n1 - n), int(n1 + 1), int(-j)],
        vec![int(-n), int(n1 - j + 1)],
        vec![false, true],
    )
}

/// `W^{n,m}_{n₁,n₂}` by the chosen route; all three agree exactly.
pub fn w_i_ii(n: u32, m: i32, n1: u32, route: Route) -> Result<ExactValue> {
    check_labels(n, m, n1)?;
    let phase = w_phase(m, n1);
    let (ni, n1i) = (i64::from(n), i64::from(n1));
    let n2 = ni - n1i;
    let j = (ni + i64::from(m)) / 2;
    let real = match route {
        Route::Hyper3F2 => {
            let sum = w_3f2_spec(n, m, n1)?.eval()?;
            let q = fact(ni) * fact(n1i) / fact(j) * sum;
            let r = int(2 * n1i + 1) / (fact(n2) * fact(ni + n1i + 1));
            ExactValue::scaled_sqrt(q, r)?
        }
        Route::ClebschGordan => special_cg(n, m, n1)?,
        Route::Hahn => {
            let a = int(-ni - 1);
            let q = hahn_q(n - n1, &int(j), &a, &a, n)?;
            let (rho, d2) = hahn_weight_norm(j as u32, n - n1, &a, &a, n)?;
            ExactValue::scaled_sqrt(q, rho / d2)?
        }
        other => return Err(inadmissible(other, Pair::OneTwo)),
    };
    Ok(phase * real)
}

/// `W̃^{n,m}_{n₁,n₂} = (-i)^{n₁} (-1)^{(m+|m|)/2} C^{n₁,0}_{n/2,-m/2; n/2,m/2}`.
pub fn wtilde_ii_i(n: u32, m: i32, n1: u32) -> Result<ExactValue> {
    check_labels(n, m, n1)?;
    Ok(w_phase(m, n1).conj() * special_cg(n, m, n1)?)
}

/// `Ŵ^{n,m}_{ℓ₁,ℓ₂} = (-1)^{ℓ₁} (-i)^m W^{n,m}_{ℓ₁,ℓ₂}`.
pub fn what_i_iii(n: u32, m: i32, l1: u32, route: Route) -> Result<ExactValue> {
    let w = w_i_ii(n, m, l1, route).map_err(|e| match e {
        Error::InadmissibleRoute { .. } => inadmissible(route, Pair::OneThree),
        other => other,
    })?;
    // (-1)^{ℓ₁} (-i)^m = i^{2ℓ₁ - m}
    Ok(ExactValue::i_pow(2 * i64::from(l1) - i64::from(m)) * w)
}

/// Ratio `Γ(a)/Γ(b)` for `a - b` integral, as an exact rational.
pub(crate) fn gamma_ratio(a: Rational, b: Rational) -> Rational {
    crate::exact::gamma_ratio(&a, &b).expect("no pole in the prefactor")
}

/// `2^k` for any integer `k`.
pub(crate) fn two_pow(k: i64) -> Rational {
    let p = Rational::from_integer(num_bigint::BigInt::from(1) << k.unsigned_abs() as usize);
    if k >= 0 {
        p
    } else {
        p.recip()
    }
}

pub(crate) fn sign(k: i64) -> Rational {
    if k.rem_euclid(2) == 0 {
        int(1)
    } else {
        int(-1)
    }
}

pub(crate) fn half_plus(k: i64) -> Rational {
    rat(2 * k + 1, 2)
}
