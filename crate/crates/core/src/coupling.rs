//! su(2) Clebsch–Gordan coefficients in closed form and the 6j parameter
//! identification of the even–even II–III coefficients.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::exact::{fact, int, rat, ExactValue, Rational};
use crate::hypergeom::HypergeometricSpec;

/// A spin `j` with projection `m`, both stored doubled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpinLabel {
    pub two_j: u32,
    pub two_m: i32,
}

impl SpinLabel {
    pub fn new(two_j: u32, two_m: i32) -> Result<Self> {
        if two_m.unsigned_abs() > two_j || (two_j as i64 + two_m as i64) % 2 != 0 {
            return Err(domain(format!(
                "projection {two_m}/2 is not admissible for spin {two_j}/2"
            )));
        }
        Ok(SpinLabel { two_j, two_m })
    }

    pub fn j(&self) -> Rational {
        rat(i64::from(self.two_j), 2)
    }

    pub fn m(&self) -> Rational {
        rat(i64::from(self.two_m), 2)
    }
}

/// Integer `(x + y)/2` for doubled quantities of equal parity.
fn half_sum(x: i64, y: i64) -> i64 {
    debug_assert!((x + y) % 2 == 0);
    (x + y) / 2
}

/// `C^{c,γ}_{a,α; b,β}`: zero unless `γ = α + β` and `(a, b, c)` is a triangle.
///
/// Evaluated as `√R · (2a)! · Σ_s (…)/Γ(c-a-β+1+s)`, the regularized
/// `3F2(c-a-b, α-a, b-a+c+1; -2a, c-a-β+1 | 1)`.
pub fn clebsch_gordan(a: SpinLabel, b: SpinLabel, c: SpinLabel) -> Result<ExactValue> {
    for s in [a, b, c] {
        SpinLabel::new(s.two_j, s.two_m)?;
    }
    let (ta, tb, tc) = (i64::from(a.two_j), i64::from(b.two_j), i64::from(c.two_j));
    let (tal, tbe, tga) = (i64::from(a.two_m), i64::from(b.two_m), i64::from(c.two_m));
    if tga != tal + tbe || tc < (ta - tb).abs() || tc > ta + tb || (ta + tb + tc) % 2 != 0 {
        return Ok(ExactValue::zero());
    }
    let radicand = int(tc + 1)
        * fact(half_sum(tb + tc, -ta))
        * fact(half_sum(tb, -tbe))
        * fact(half_sum(tc, tga))
        * fact(half_sum(tc, -tga))
        / (fact(half_sum(ta + tb, -tc))
            * fact(half_sum(ta - tb, tc))
            * fact(half_sum(ta + tb, tc) + 1)
            * fact(half_sum(ta, tal))
            * fact(half_sum(ta, -tal))
            * fact(half_sum(tb, tbe)));
    let spec = HypergeometricSpec::with_regularized(
        vec![
            int(half_sum(tc - ta, -tb)),
            int(half_sum(tal, -ta)),
            int(half_sum(tb - ta, tc) + 1),
        ],
        vec![int(-ta), int(half_sum(tc - ta, -tbe) + 1)],
        vec![false, true],
    )?;
    let sum = spec.eval()? * fact(ta);
    ExactValue::scaled_sqrt(sum, radicand)
}

/// `C^{n₁,0}_{n/2,-m/2; n/2,m/2}`.
pub fn special_cg(n: u32, m: i32, n1: u32) -> Result<ExactValue> {
    crate::bases::MultipletLabel::polar(n, m)?;
    if n1 > n {
        return Err(domain(format!("n₁ = {n1} exceeds n = {n}")));
    }
    clebsch_gordan(
        SpinLabel::new(n, -m)?,
        SpinLabel::new(n, m)?,
        SpinLabel::new(2 * n1, 0)?,
    )
}

/// The six labels `(ℓ₁, ℓ₂, ℓ₁₂, ℓ₃, ℓ, ℓ₂₃)` of a 6j symbol whose balanced
/// `4F3` reproduces the series of the even–even coefficient `U^{2p₁,2p₂}_{2q₁,2q₂}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SixjLabels {
    pub l1: Rational,
    pub l2: Rational,
    pub l12: Rational,
    pub l3: Rational,
    pub l: Rational,
    pub l23: Rational,
}

impl SixjLabels {
    pub fn as_array(&self) -> [&Rational; 6] {
        [&self.l1, &self.l2, &self.l12, &self.l3, &self.l, &self.l23]
    }

    /// Numerator and denominator parameters of the balanced `4F3` of the symbol.
    pub fn hypergeometric_parameters(&self) -> (Vec<Rational>, Vec<Rational>) {
        let (l1, l2, l12, l3, l, l23) =
            (&self.l1, &self.l2, &self.l12, &self.l3, &self.l, &self.l23);
        let one = int(1);
        let numerator = vec![
            l1 - l2 - l12,
            l3 - l2 - l23,
            -l1 - l2 - l12 - &one,
            -l2 - l3 - l23 - &one,
        ];
        let denominator = vec![
            -(l2 * int(2)),
            l - l2 - l12 - l23,
            -l2 - l12 - l - l23 - &one,
        ];
        (numerator, denominator)
    }
}

pub fn sixj_parameter_map(q1: u32, q2: u32, p1: u32, p2: u32) -> Result<SixjLabels> {
    if q1 + q2 != p1 + p2 {
        return Err(domain(format!(
            "q₁+q₂ = {} differs from p₁+p₂ = {}",
            q1 + q2,
            p1 + p2
        )));
    }
    let (q1, q2, p1) = (i64::from(q1), i64::from(q2), i64::from(p1));
    let big_n = q1 + q2;
    Ok(SixjLabels {
        l1: rat(-big_n - 2, 2),
        l2: rat(p1 - q1 - 1, 2),
        l12: rat(q2 - p1 - 1, 2),
        l3: rat(big_n - 1, 2),
        l: rat(q1 - p1 - 1, 2),
        l23: rat(-2 - 2 * q1 - p1 - q2, 2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::exact_sum;

    fn s(two_j: u32, two_m: i32) -> SpinLabel {
        SpinLabel::new(two_j, two_m).unwrap()
    }

    /// `√((j ∓ m)(j ± m + 1))` with doubled arguments.
    fn ladder(two_j: i64, two_m: i64, up: bool) -> ExactValue {
        let v = if up {
            (two_j - two_m) * (two_j + two_m + 2)
        } else {
            (two_j + two_m) * (two_j - two_m + 2)
        };
        ExactValue::sqrt(rat(v, 4)).unwrap()
    }

    /// Coupled states `|J, M⟩` as maps `two_m1 -> coefficient`, built from the
    /// stretched state annihilated by `J₊` and lowered with `J₋`.
    fn oracle_states(tj1: i64, tj2: i64, tj: i64) -> Vec<(i64, Vec<(i64, ExactValue)>)> {
        let m1_range = |tm: i64| -> Vec<i64> {
            (-tj1..=tj1)
                .step_by(2)
                .filter(|&m1| (tm - m1).abs() <= tj2)
                .collect()
        };
        // J₊|J,J⟩ = 0 relates consecutive m1 components
        let ms = m1_range(tj);
        let mut top: Vec<(i64, ExactValue)> = Vec::new();
        let mut cur = ExactValue::one();
        for (i, &m1) in ms.iter().enumerate().rev() {
            if i + 1 < ms.len() {
                let m1p = m1 + 2;
                // c(m1) a₊(j1, m1) + c(m1+1) a₊(j2, J - m1 - 1) = 0
                let num = ladder(tj2, tj - m1p, true);
                let den = ladder(tj1, m1, true);
                let ratio = num
                    * ExactValue::from_rational(int(-1))
                    * ExactValue::sqrt(den.abs2().recip()).unwrap();
                cur = cur * ratio;
            }
            top.push((m1, cur.clone()));
        }
        let norm: Rational = top.iter().map(|(_, c)| c.abs2()).sum();
        let scale = ExactValue::sqrt(norm.recip()).unwrap();
        let top: Vec<_> = top
            .into_iter()
            .map(|(m1, c)| (m1, c * scale.clone()))
            .collect();
        let mut states = vec![(tj, top)];
        let mut tm = tj;
        while tm > -tj {
            let (_, prev) = states.last().unwrap();
            let lower = ladder(tj, tm, false);
            let inv = ExactValue::sqrt(lower.abs2().recip()).unwrap();
            let mut next = Vec::new();
            for m1 in m1_range(tm - 2) {
                let mut parts = Vec::new();
                for (pm1, c) in prev {
                    if *pm1 == m1 + 2 {
                        parts.push(c.clone() * ladder(tj1, *pm1, false));
                    }
                    if *pm1 == m1 {
                        parts.push(c.clone() * ladder(tj2, tm - pm1, false));
                    }
                }
                let v = exact_sum(parts.iter()).unwrap() * inv.clone();
                next.push((m1, v));
            }
            tm -= 2;
            states.push((tm, next));
        }
        states
    }

    #[test]
    fn spot_values() {
        assert_eq!(
            clebsch_gordan(s(0, 0), s(0, 0), s(0, 0)).unwrap(),
            ExactValue::one()
        );
        assert_eq!(
            clebsch_gordan(s(1, 1), s(1, -1), s(2, 0)).unwrap(),
            ExactValue::sqrt(rat(1, 2)).unwrap()
        );
        assert!(clebsch_gordan(s(1, 1), s(1, 1), s(2, 0)).unwrap().is_zero());
        assert!(clebsch_gordan(s(2, 0), s(2, 0), s(6, 0)).unwrap().is_zero());
        assert_eq!(special_cg(0, 0, 0).unwrap(), ExactValue::one());
        assert_eq!(
            special_cg(1, 1, 0).unwrap(),
            -ExactValue::sqrt(rat(1, 2)).unwrap()
        );
        assert!(SpinLabel::new(1, 0).is_err());
        assert!(special_cg(2, 0, 3).is_err());
    }

    #[test]
    fn agrees_with_ladder_oracle() {
        for tj1 in 0..=6i64 {
            for tj2 in 0..=6i64 {
                let mut tj = (tj1 - tj2).abs();
                while tj <= (tj1 + tj2).min(6) {
                    for (tm, comps) in oracle_states(tj1, tj2, tj) {
                        for (m1, want) in comps {
                            let got = clebsch_gordan(
                                s(tj1 as u32, m1 as i32),
                                s(tj2 as u32, (tm - m1) as i32),
                                s(tj as u32, tm as i32),
                            )
                            .unwrap();
                            assert_eq!(
                                got, want,
                                "j1={tj1}/2 j2={tj2}/2 J={tj}/2 M={tm}/2 m1={m1}/2"
                            );
                        }
                    }
                    tj += 2;
                }
            }
        }
    }

    #[test]
    fn special_family_is_orthogonal_and_flips_sign() {
        for n in 0..=10u32 {
            for m in (-(n as i32)..=n as i32).step_by(2) {
                for n1 in 0..=n {
                    let v = special_cg(n, m, n1).unwrap();
                    assert!(v.is_real());
                    let flipped = special_cg(n, -m, n1).unwrap();
                    let sign = if (n - n1) % 2 == 0 { 1 } else { -1 };
                    assert_eq!(flipped, v.scale(&int(sign)));
                }
                for mp in (-(n as i32)..=n as i32).step_by(2) {
                    let products: Vec<ExactValue> = (0..=n)
                        .map(|n1| special_cg(n, m, n1).unwrap() * special_cg(n, mp, n1).unwrap())
                        .collect();
                    let total = exact_sum(products.iter()).unwrap();
                    let want = if m == mp {
                        ExactValue::one()
                    } else {
                        ExactValue::zero()
                    };
                    assert_eq!(total, want, "n={n} m={m} m'={mp}");
                }
            }
        }
    }

    #[test]
    fn sixj_labels() {
        let l = sixj_parameter_map(0, 0, 0, 0).unwrap();
        let h = rat(-1, 2);
        assert_eq!(
            l,
            SixjLabels {
                l1: int(-1),
                l2: h.clone(),
                l12: h.clone(),
                l3: h.clone(),
                l: h,
                l23: int(-1)
            }
        );
        assert!(sixj_parameter_map(1, 0, 0, 0).is_err());
        for big_n in 0..=6u32 {
            for q1 in 0..=big_n {
                for p1 in 0..=big_n {
                    let labels = sixj_parameter_map(q1, big_n - q1, p1, big_n - p1).unwrap();
                    for v in labels.as_array() {
                        assert!((v * int(2)).is_integer());
                    }
                }
            }
        }
    }
}
