//! The acceptance criteria, one PASS/FAIL line each. Run with
//! `cargo test -p zernike-core --test acceptance -- --nocapture`.

use std::time::{Duration, Instant};

use zernike_core::bases::{enumerate_multiplet, LabelKind, MultipletLabel};
use zernike_core::coupling::sixj_parameter_map;
use zernike_core::exact::int;
use zernike_core::hypergeom::racah_r;
use zernike_core::interbasis::{
    family_4f3, racah_family, u_ii_iii, u_ii_iii_racah, w_i_ii, what_i_iii, Pair, ParityCase,
    ParitySplit, RacahVariant, Route,
};
use zernike_core::oracle::{coeff_by_quadrature, reconstruct_expansion, Direction, QuadratureSpec};
use zernike_core::verify::{run_suite, sample_points, Report, Suite};
use zernike_core::{ExactValue, Rational, Result};

struct Outcome {
    passed: bool,
    detail: String,
}

fn from_report(report: Report) -> Outcome {
    let failed: Vec<String> = report.failures().map(|c| c.to_string()).collect();
    Outcome {
        passed: failed.is_empty(),
        detail: if failed.is_empty() {
            format!("{} checks", report.checks.len())
        } else {
            failed.join("; ")
        },
    }
}

fn criterion(
    id: u32,
    title: &str,
    budget: Option<Duration>,
    body: impl FnOnce() -> Result<Outcome>,
) -> bool {
    let start = Instant::now();
    let outcome = body().unwrap_or_else(|e| Outcome {
        passed: false,
        detail: format!("error: {e}"),
    });
    let elapsed = start.elapsed();
    let in_time = budget.is_none_or(|b| elapsed <= b);
    let passed = outcome.passed && in_time;
    let budget_note = budget.map_or(String::new(), |b| format!(" / {}s", b.as_secs()));
    println!(
        "{} [{id:>2}] {title}: {} ({:.2}s{budget_note})",
        if passed { "PASS" } else { "FAIL" },
        outcome.detail,
        elapsed.as_secs_f64()
    );
    passed
}

fn polar_labels(n: u32) -> impl Iterator<Item = i32> {
    enumerate_multiplet(n, LabelKind::Polar)
        .into_iter()
        .map(|l| match l {
            MultipletLabel::Polar { m, .. } => m,
            MultipletLabel::Cartesian { .. } => unreachable!(),
        })
}

fn quadrature_gap(
    pair: Pair,
    n: u32,
    value: impl Fn(&MultipletLabel, &MultipletLabel) -> Result<ExactValue>,
) -> Result<f64> {
    let spec = QuadratureSpec::for_degree(n);
    let kind = |p: Pair| {
        if p == Pair::TwoThree {
            LabelKind::Cartesian
        } else {
            LabelKind::Polar
        }
    };
    let mut worst = 0f64;
    for row in enumerate_multiplet(n, LabelKind::Cartesian) {
        for col in enumerate_multiplet(n, kind(pair)) {
            let q = coeff_by_quadrature(pair, row, col, &spec)?.value;
            worst = worst.max((q - value(&row, &col)?.to_complex()).norm());
        }
    }
    Ok(worst)
}

fn k1(label: &MultipletLabel) -> u32 {
    match *label {
        MultipletLabel::Cartesian { k1, .. } => k1,
        MultipletLabel::Polar { .. } => unreachable!(),
    }
}

fn polar_parts(label: &MultipletLabel) -> (u32, i32) {
    match *label {
        MultipletLabel::Polar { n, m } => (n, m),
        MultipletLabel::Cartesian { .. } => unreachable!(),
    }
}

fn one_two_routes() -> Result<Outcome> {
    let (mut mismatches, mut total, mut gap) = (0, 0, 0f64);
    for n in 0..=10 {
        for m in polar_labels(n) {
            for n1 in 0..=n {
                let values = [Route::Hyper3F2, Route::ClebschGordan, Route::Hahn]
                    .map(|r| w_i_ii(n, m, n1, r))
                    .into_iter()
                    .collect::<Result<Vec<_>>>()?;
                mismatches += values.windows(2).filter(|w| w[0] != w[1]).count();
                total += 1;
            }
        }
        gap = gap.max(quadrature_gap(Pair::OneTwo, n, |row, col| {
            let (n, m) = polar_parts(col);
            w_i_ii(n, m, k1(row), Route::Hahn)
        })?);
    }
    Ok(Outcome {
        passed: mismatches == 0 && gap <= 1e-9,
        detail: format!(
            "{total} coefficients, {mismatches} route mismatches, quadrature gap {gap:.1e}"
        ),
    })
}

fn one_three_phase() -> Result<Outcome> {
    let (mut mismatches, mut total, mut gap) = (0, 0, 0f64);
    for n in 0..=8 {
        for m in polar_labels(n) {
            for l1 in 0..=n {
                let w = w_i_ii(n, m, l1, Route::ClebschGordan)?;
                // (-1)^{ℓ₁} (-i)^m = i^{2ℓ₁ - m}
                let expected = ExactValue::i_pow(2 * i64::from(l1) - i64::from(m)) * w;
                for &route in Pair::OneThree.routes() {
                    mismatches += usize::from(what_i_iii(n, m, l1, route)? != expected);
                    total += 1;
                }
            }
        }
        gap = gap.max(quadrature_gap(Pair::OneThree, n, |row, col| {
            let (n, m) = polar_parts(col);
            what_i_iii(n, m, k1(row), Route::Hahn)
        })?);
    }
    Ok(Outcome {
        passed: mismatches == 0 && gap <= 1e-9,
        detail: format!("{total} evaluations, {mismatches} mismatches, quadrature gap {gap:.1e}"),
    })
}

fn two_three_routes() -> Result<Outcome> {
    let (mut mismatches, mut total, mut gap) = (0, 0, 0f64);
    for n in 0..=8 {
        for l1 in 0..=n {
            for n1 in 0..=n {
                let (l2, n2) = (n - l1, n - n1);
                let reference = u_ii_iii(l1, l2, n1, n2, Route::CGSum)?;
                let forms = [
                    u_ii_iii(l1, l2, n1, n2, Route::Hyper4F3)?,
                    u_ii_iii(l1, l2, n1, n2, Route::Racah)?,
                    u_ii_iii_racah(l1, l2, n1, n2, RacahVariant::Primary)?,
                    u_ii_iii_racah(l1, l2, n1, n2, RacahVariant::Dual)?,
                    u_ii_iii_racah(l1, l2, n1, n2, RacahVariant::Series)?,
                ];
                mismatches += forms.iter().filter(|f| **f != reference).count();
                total += forms.len();
            }
        }
        gap = gap.max(quadrature_gap(Pair::TwoThree, n, |row, col| {
            let (
                MultipletLabel::Cartesian { k1: l1, k2: l2 },
                MultipletLabel::Cartesian { k1: n1, k2: n2 },
            ) = (*row, *col)
            else {
                unreachable!()
            };
            u_ii_iii(l1, l2, n1, n2, Route::CGSum)
        })?);
    }
    Ok(Outcome {
        passed: mismatches == 0 && gap <= 1e-9,
        detail: format!("{total} closed-form evaluations, {mismatches} differ from the CG sum, quadrature gap {gap:.1e}"),
    })
}

fn unitarity_and_inverse() -> Result<Outcome> {
    let report = run_suite(Suite::Unitarity, 10, Some(1e-12))?;
    let points = sample_points(100, 7);
    let mut worst = 0f64;
    for n in 0..=10 {
        for label in enumerate_multiplet(n, LabelKind::Polar) {
            let e = reconstruct_expansion(
                Pair::OneTwo,
                Direction::Inverse,
                label,
                Route::ClebschGordan,
                &points,
            )?;
            worst = worst.max(e);
        }
    }
    let mut outcome = from_report(report);
    outcome.passed &= worst <= 1e-10;
    outcome.detail = format!(
        "{}, inverse expansion error {worst:.1e} at 100 points",
        outcome.detail
    );
    Ok(outcome)
}

fn chain_and_duality() -> Result<Outcome> {
    let mut outcome = from_report(run_suite(Suite::RacahChain, 5, None)?);
    let (mut mismatches, mut total) = (0, 0);
    for big_n in 0..=6u32 {
        let (params, _) = racah_family(ParityCase::EvenEven, i64::from(big_n));
        for q1 in 0..=big_n {
            for p1 in 0..=big_n {
                mismatches += usize::from(racah_r(q1, p1, &params)? != racah_r(p1, q1, &params)?);
                total += 1;
            }
        }
    }
    outcome.passed &= mismatches == 0;
    outcome.detail = format!(
        "{}, self-duality {mismatches} of {total} mismatched",
        outcome.detail
    );
    Ok(outcome)
}

fn sixj_map() -> Result<Outcome> {
    let (mut bad, mut total) = (0, 0);
    let sorted = |v: &[Rational]| {
        let mut v = v.to_vec();
        v.sort();
        v
    };
    for big_n in 0..=6u32 {
        for q1 in 0..=big_n {
            for p1 in 0..=big_n {
                let (q2, p2) = (big_n - q1, big_n - p1);
                let labels = sixj_parameter_map(q1, q2, p1, p2)?;
                let half_integral = labels.as_array().iter().all(|v| (*v * int(2)).is_integer());
                let (num, den) = labels.hypergeometric_parameters();
                let w = i64::from;
                let series = family_4f3(&ParitySplit {
                    case: ParityCase::EvenEven,
                    q1: w(q1),
                    q2: w(q2),
                    p1: w(p1),
                    p2: w(p2),
                })?;
                let same = sorted(&num) == sorted(series.numerator())
                    && sorted(&den) == sorted(series.denominator());
                bad += usize::from(!(half_integral && same));
                total += 1;
            }
        }
    }
    Ok(Outcome {
        passed: bad == 0,
        detail: format!("{total} splits, {bad} mismatched"),
    })
}

#[test]
fn acceptance_criteria() {
    let secs = Duration::from_secs;
    let results = [
        criterion(
            1,
            "basis orthonormality, n ≤ 8, 1e-9",
            Some(secs(30)),
            || {
                Ok(from_report(run_suite(
                    Suite::Orthonormality,
                    8,
                    Some(1e-9),
                )?))
            },
        ),
        criterion(
            2,
            "eigenvalue n(n+2), residual ≤ 1e-3 at 512², O(h²)",
            Some(secs(60)),
            || Ok(from_report(run_suite(Suite::Eigenvalue, 3, Some(1e-3))?)),
        ),
        criterion(
            3,
            "I-II routes 3f2 = cg = hahn, n ≤ 10",
            Some(secs(20)),
            one_two_routes,
        ),
        criterion(4, "I-III phase relation, n ≤ 8", None, one_three_phase),
        criterion(
            5,
            "II-III cgsum = 4f3 = racah, n ≤ 8",
            Some(secs(60)),
            two_three_routes,
        ),
        criterion(
            6,
            "parity-forbidden entries exactly zero, n ≤ 10",
            None,
            || Ok(from_report(run_suite(Suite::Parity, 10, None)?)),
        ),
        criterion(
            7,
            "unitarity n ≤ 10 and inverse expansion",
            None,
            unitarity_and_inverse,
        ),
        criterion(8, "Hahn orthogonality and dual Hahn, N ≤ 8", None, || {
            Ok(from_report(run_suite(Suite::HahnOrthogonality, 8, None)?))
        }),
        criterion(
            9,
            "Gegenbauer-Legendre moments vs quadrature, 1e-10",
            None,
            || Ok(from_report(run_suite(Suite::Moments, 8, Some(1e-10))?)),
        ),
        criterion(
            10,
            "three-step Racah chain N ≤ 5, self-duality N ≤ 6",
            None,
            chain_and_duality,
        ),
        criterion(11, "6j parameter map, N ≤ 6", None, sixj_map),
    ];
    let failed = results.iter().filter(|p| !**p).count();
    println!(
        "{} of {} acceptance criteria passed",
        results.len() - failed,
        results.len()
    );
    assert_eq!(failed, 0);
}
