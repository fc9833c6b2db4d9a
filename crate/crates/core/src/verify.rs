//! Named invariant suites. Each check either compares exact values and
//! counts mismatches or measures a float error against a tolerance.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bases::{
    enumerate_multiplet, gegenbauer_c, legendre_p, BasisFn, BasisId, HemispherePoint, LabelKind,
    MultipletLabel, System,
};
use crate::coupling::sixj_parameter_map;
use crate::error::{domain, Error, Result};
use crate::exact::{int, rat, ExactValue, Rational};
use crate::hypergeom::{dual_hahn_r, hahn_q, hahn_weight_norm, racah_r};
use crate::interbasis::{
    assemble_matrix, family_4f3, gegenbauer_legendre_moment, parity_split, racah_chain,
    racah_chain_closed_form, racah_family, u_ii_iii, u_ii_iii_racah, w_i_ii, what_i_iii,
    ChainFamily, Pair, ParityCase, ParitySplit, RacahVariant, Route,
};
use crate::oracle::{
    boundary_projection_w, boundary_projection_what, coeff_by_quadrature, eigen_convergence,
    gauss_jacobi, inner_product_disk, reconstruct_expansion, Direction, QuadratureSpec,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Suite {
    Orthonormality,
    Unitarity,
    Routes,
    Parity,
    Expansions,
    Eigenvalue,
    Moments,
    RacahChain,
    HahnOrthogonality,
    RacahDuality,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Orthonormality,
        Suite::Unitarity,
        Suite::Routes,
        Suite::Parity,
        Suite::Expansions,
        Suite::Eigenvalue,
        Suite::Moments,
        Suite::RacahChain,
        Suite::HahnOrthogonality,
        Suite::RacahDuality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Orthonormality => "orthonormality",
            Suite::Unitarity => "unitarity",
            Suite::Routes => "routes",
            Suite::Parity => "parity",
            Suite::Expansions => "expansions",
            Suite::Eigenvalue => "eigenvalue",
            Suite::Moments => "appendixA",
            Suite::RacahChain => "appendixB",
            Suite::HahnOrthogonality => "hahn-orthogonality",
            Suite::RacahDuality => "racah-duality",
        }
    }

    pub fn default_n_max(self) -> u32 {
        match self {
            Suite::Orthonormality
            | Suite::Expansions
            | Suite::Moments
            | Suite::HahnOrthogonality => 8,
            Suite::Unitarity | Suite::Routes | Suite::Parity => 10,
            Suite::Eigenvalue => 3,
            Suite::RacahChain => 5,
            Suite::RacahDuality => 6,
        }
    }

    /// Tolerance of the float checks; exact checks ignore it.
    pub fn default_tolerance(self) -> f64 {
        match self {
            Suite::Unitarity => 1e-12,
            Suite::Expansions | Suite::Moments => 1e-10,
            Suite::Eigenvalue => 1e-3,
            _ => 1e-9,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| domain(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum Measure {
    Exact { mismatches: usize, total: usize },
    Float { error: f64, tolerance: f64 },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub measure: Measure,
    pub passed: bool,
    pub note: Option<String>,
}

impl Check {
    pub fn exact(name: impl Into<String>, mismatches: usize, total: usize) -> Self {
        Check {
            name: name.into(),
            measure: Measure::Exact { mismatches, total },
            passed: mismatches == 0,
            note: None,
        }
    }

    pub fn float(name: impl Into<String>, error: f64, tolerance: f64) -> Self {
        Check {
            name: name.into(),
            measure: Measure::Float { error, tolerance },
            passed: error <= tolerance,
            note: None,
        }
    }

    /// Also require `ok`, explaining a failure with `note`.
    fn and(mut self, ok: bool, note: impl Into<String>) -> Self {
        if !ok {
            self.passed = false;
            self.note = Some(note.into());
        }
        self
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        match &self.measure {
            Measure::Exact { mismatches, total } => write!(
                f,
                "{status} {}: exact, {mismatches} of {total} mismatched",
                self.name
            )?,
            Measure::Float { error, tolerance } => write!(
                f,
                "{status} {}: error {error:.3e} (tolerance {tolerance:.0e})",
                self.name
            )?,
        }
        if let Some(note) = &self.note {
            write!(f, " [{note}]")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub n_max: u32,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let failed = self.failures().count();
        write!(
            f,
            "suite {} (n ≤ {}): {} checks, {failed} failed",
            self.suite,
            self.n_max,
            self.checks.len()
        )
    }
}

/// Run `suite` up to `n_max` (the largest degree, `N`, or label, as the
/// suite reads it). Errors are reserved for broken internal invariants.
pub fn run_suite(suite: Suite, n_max: u32, tolerance: Option<f64>) -> Result<Report> {
    let tol = tolerance.unwrap_or_else(|| suite.default_tolerance());
    let checks = match suite {
        Suite::Orthonormality => orthonormality(n_max, tol)?,
        Suite::Unitarity => unitarity(n_max, tol)?,
        Suite::Routes => routes(n_max, tol)?,
        Suite::Parity => parity(n_max)?,
        Suite::Expansions => expansions(n_max, tol)?,
        Suite::Eigenvalue => eigenvalue(n_max, tol)?,
        Suite::Moments => moments(n_max, tol)?,
        Suite::RacahChain => chain(n_max)?,
        Suite::HahnOrthogonality => hahn_orthogonality(n_max)?,
        Suite::RacahDuality => racah_duality(n_max)?,
    };
    Ok(Report {
        suite,
        n_max,
        checks,
    })
}

fn kind(system: System) -> LabelKind {
    match system {
        System::I => LabelKind::Polar,
        System::II | System::III => LabelKind::Cartesian,
    }
}

fn basis(system: System, label: MultipletLabel) -> Result<BasisFn> {
    BasisFn::new(BasisId::disk(system, label)?)
}

fn orthonormality(n_max: u32, tol: f64) -> Result<Vec<Check>> {
    let spec = QuadratureSpec::for_degree(n_max);
    [System::I, System::II, System::III]
        .into_iter()
        .map(|system| {
            let fns = (0..=n_max)
                .flat_map(|n| enumerate_multiplet(n, kind(system)))
                .map(|label| basis(system, label))
                .collect::<Result<Vec<_>>>()?;
            let mut worst = 0f64;
            let mut exact_rule = true;
            for (a, fa) in fns.iter().enumerate() {
                for (b, fb) in fns.iter().enumerate().skip(a) {
                    let e = inner_product_disk(
                        |x, y| fa.disk_value(x, y),
                        |x, y| fb.disk_value(x, y),
                        &spec,
                        n_max,
                    );
                    let delta = if a == b { 1.0 } else { 0.0 };
                    worst = worst.max((e.value - delta).norm());
                    exact_rule &= !e.under_resolved;
                }
            }
            Ok(Check::float(
                format!("system {system:?}, {} functions", fns.len()),
                worst,
                tol,
            )
            .and(exact_rule, "quadrature below exactness floor"))
        })
        .collect()
}

fn unitarity(n_max: u32, tol: f64) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for pair in Pair::ALL {
        for &route in pair.routes() {
            for n in 0..=n_max {
                // exact row norms and orthogonality are enforced on assembly
                let m = assemble_matrix(n, pair, route)?.to_complex();
                let mut worst = 0f64;
                for a in 0..m.len() {
                    for b in 0..m.len() {
                        let dot: Complex64 =
                            m[a].iter().zip(&m[b]).map(|(x, y)| x * y.conj()).sum();
                        let delta = if a == b { 1.0 } else { 0.0 };
                        worst = worst.max((dot - delta).norm());
                    }
                }
                checks.push(Check::float(
                    format!("{pair} route {route} n={n}"),
                    worst,
                    tol,
                ));
            }
        }
    }
    Ok(checks)
}

fn max_quadrature_error(pair: Pair, n: u32, route: Route) -> Result<f64> {
    let m = assemble_matrix(n, pair, route)?;
    let spec = QuadratureSpec::for_degree(n);
    let mut worst = 0f64;
    for (r, row) in m.rows.iter().enumerate() {
        for (c, col) in m.cols.iter().enumerate() {
            let q = coeff_by_quadrature(pair, *row, *col, &spec)?;
            worst = worst.max((q.value - m.entries[r][c].to_complex()).norm());
        }
    }
    Ok(worst)
}

fn routes(n_max: u32, tol: f64) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in 0..=n_max {
        let polar = enumerate_multiplet(n, LabelKind::Polar);
        let (mut w_bad, mut phase_bad, mut total, mut rim) = (0, 0, 0, 0f64);
        for label in &polar {
            let MultipletLabel::Polar { m, .. } = *label else {
                unreachable!()
            };
            for k1 in 0..=n {
                let w = w_i_ii(n, m, k1, Route::ClebschGordan)?;
                let hat = what_i_iii(n, m, k1, Route::ClebschGordan)?;
                for route in [Route::Hyper3F2, Route::Hahn] {
                    w_bad += usize::from(w_i_ii(n, m, k1, route)? != w);
                    w_bad += usize::from(what_i_iii(n, m, k1, route)? != hat);
                }
                // Ŵ = (-1)^{ℓ₁} (-i)^m W
                phase_bad += usize::from(
                    hat != ExactValue::i_pow(2 * i64::from(k1) - i64::from(m)) * w.clone(),
                );
                total += 1;
                rim = rim.max((boundary_projection_w(n, m, k1)? - w.to_complex()).norm());
                rim = rim.max((boundary_projection_what(n, m, k1)? - hat.to_complex()).norm());
            }
        }
        checks.push(Check::exact(
            format!("I-II/I-III 3f2 = cg = hahn, n={n}"),
            w_bad,
            4 * total,
        ));
        checks.push(Check::exact(
            format!("I-III phase relation, n={n}"),
            phase_bad,
            total,
        ));
        checks.push(Check::float(
            format!("I-II/I-III rim projection, n={n}"),
            rim,
            tol.min(1e-10),
        ));

        let (mut u_bad, mut u_total) = (0, 0);
        for l1 in 0..=n {
            for n1 in 0..=n {
                let (l2, n2) = (n - l1, n - n1);
                let reference = u_ii_iii(l1, l2, n1, n2, Route::CGSum)?;
                let others = [
                    u_ii_iii(l1, l2, n1, n2, Route::Hyper4F3)?,
                    u_ii_iii(l1, l2, n1, n2, Route::Racah)?,
                    u_ii_iii_racah(l1, l2, n1, n2, RacahVariant::Primary)?,
                    u_ii_iii_racah(l1, l2, n1, n2, RacahVariant::Dual)?,
                    u_ii_iii_racah(l1, l2, n1, n2, RacahVariant::Series)?,
                ];
                u_bad += others.iter().filter(|v| **v != reference).count();
                u_total += others.len();
            }
        }
        checks.push(Check::exact(
            format!("II-III cgsum = 4f3 = racah, n={n}"),
            u_bad,
            u_total,
        ));
        for pair in Pair::ALL {
            let error = max_quadrature_error(pair, n, pair.default_route())?;
            checks.push(Check::float(
                format!("{pair} against quadrature, n={n}"),
                error,
                tol,
            ));
        }
    }
    Ok(checks)
}

fn parity(n_max: u32) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in 0..=n_max {
        let (mut bad, mut total) = (0, 0);
        for l1 in 0..=n {
            for n1 in 0..=n {
                let (l2, n2) = (n - l1, n - n1);
                if parity_split(l1, l2, n1, n2)?.is_some() {
                    continue;
                }
                for &route in Pair::TwoThree.routes() {
                    bad += usize::from(!u_ii_iii(l1, l2, n1, n2, route)?.is_zero());
                    total += 1;
                }
                for variant in [
                    RacahVariant::Primary,
                    RacahVariant::Dual,
                    RacahVariant::Series,
                ] {
                    bad += usize::from(!u_ii_iii_racah(l1, l2, n1, n2, variant)?.is_zero());
                    total += 1;
                }
            }
        }
        let forbidden = total / 6;
        checks.push(Check::exact(
            format!("forbidden entries vanish, n={n} ({forbidden} entries)"),
            bad,
            total,
        ));
    }
    Ok(checks)
}

/// 100 fixed pseudo-random points spread uniformly over the hemisphere.
pub fn sample_points(count: usize, seed: u64) -> Vec<HemispherePoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let z: f64 = rng.gen_range(0.0..1.0);
            let phi: f64 = rng.gen_range(0.0..2.0 * PI);
            let r = (1.0 - z * z).sqrt();
            HemispherePoint::from_xi([r * phi.cos(), r * phi.sin(), z]).expect("unit vector")
        })
        .collect()
}

fn expansions(n_max: u32, tol: f64) -> Result<Vec<Check>> {
    let points = sample_points(100, 2026);
    let mut checks = Vec::new();
    for pair in Pair::ALL {
        let (row_system, col_system) = pair.systems();
        for direction in [Direction::Forward, Direction::Inverse] {
            let target_system = match direction {
                Direction::Forward => row_system,
                Direction::Inverse => col_system,
            };
            for n in 0..=n_max {
                let mut worst = 0f64;
                for label in enumerate_multiplet(n, kind(target_system)) {
                    let e = reconstruct_expansion(
                        pair,
                        direction,
                        label,
                        pair.default_route(),
                        &points,
                    )?;
                    worst = worst.max(e);
                }
                let name = format!("{pair} {direction:?} expansion of {target_system:?}, n={n}");
                checks.push(Check::float(name, worst, tol));
            }
        }
    }
    Ok(checks)
}

fn eigenvalue(n_max: u32, tol: f64) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for system in [System::I, System::II, System::III] {
        for n in 0..=n_max {
            for label in enumerate_multiplet(n, kind(system)) {
                let c = eigen_convergence(&BasisId::disk(system, label)?, &[128, 256, 512])?;
                let orders: Vec<String> = c
                    .orders
                    .iter()
                    .map(|o| o.map_or("-".into(), |o| format!("{o:.2}")))
                    .collect();
                let check = Check::float(
                    format!("system {system:?} {label} at 512²"),
                    c.finest(),
                    tol,
                )
                .and(
                    c.is_convergent(1.8),
                    format!("orders {}", orders.join(", ")),
                );
                checks.push(check);
            }
        }
    }
    Ok(checks)
}

fn moments(max_degree: u32, tol: f64) -> Result<Vec<Check>> {
    let lambdas = [int(1), rat(3, 2), int(2), rat(5, 2)];
    let mut checks = Vec::new();
    for mu in 0..=4u32 {
        // Gauss–Jacobi with weight (1-x²)^μ is exact for the polynomial part
        let (x, w) = gauss_jacobi(max_degree as usize + 1, f64::from(mu), f64::from(mu));
        for lambda in &lambdas {
            let lf = crate::exact::rational_to_f64(lambda);
            let mut worst = 0f64;
            for n in 0..=max_degree {
                for m in 0..=max_degree {
                    let exact = gegenbauer_legendre_moment(mu, lambda, n, m)?.to_f64_real();
                    let quad: f64 = x
                        .iter()
                        .zip(&w)
                        .map(|(&t, &w)| w * gegenbauer_c(n, lf, t) * legendre_p(m, t))
                        .sum();
                    worst = worst.max((exact - quad).abs());
                }
            }
            checks.push(Check::float(format!("μ={mu} λ={lambda}"), worst, tol));
        }
    }
    Ok(checks)
}

fn splits(big_n: u32) -> impl Iterator<Item = (u32, u32, u32, u32)> {
    (0..=big_n).flat_map(move |q1| (0..=big_n).map(move |p1| (q1, big_n - q1, p1, big_n - p1)))
}

fn chain(n_max: u32) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for big_n in 0..=n_max {
        let (mut bad, mut total) = (0, 0);
        for (q1, q2, p1, p2) in splits(big_n) {
            for case in [
                ParityCase::EvenEven,
                ParityCase::EvenOdd,
                ParityCase::OddEven,
                ParityCase::OddOdd,
            ] {
                let chain = racah_chain(case, q1, q2, p1, p2)?;
                let start = chain.start.eval()?;
                bad += usize::from(chain.value()? != start);
                total += 1;
                let family = match case {
                    ParityCase::EvenEven => ChainFamily::EvenEven,
                    ParityCase::OddEven => ChainFamily::OddEven,
                    ParityCase::OddOdd => ChainFamily::OddOdd,
                    ParityCase::EvenOdd => continue,
                };
                let (prefactor, spec) = racah_chain_closed_form(family, q1, q2, p1, p2)?;
                let ok = chain.end().same_parameters(&spec)
                    && chain.prefactor() == prefactor
                    && prefactor * spec.eval()? == start;
                bad += usize::from(!ok);
                total += 1;
            }
        }
        checks.push(Check::exact(
            format!("three-step chain and closed forms, N={big_n}"),
            bad,
            total,
        ));
    }
    Ok(checks)
}

fn hahn_orthogonality(n_max: u32) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for big_n in 0..=n_max {
        let a = int(-i64::from(big_n) - 1);
        let (mut bad, mut total) = (0, 0);
        for p in 0..=big_n {
            for q in 0..=p {
                let mut sum = Rational::zero();
                for j in 0..=big_n {
                    let (rho, _) = hahn_weight_norm(j, q, &a, &a, big_n)?;
                    let x = int(j.into());
                    sum += rho * hahn_q(p, &x, &a, &a, big_n)? * hahn_q(q, &x, &a, &a, big_n)?;
                }
                let want = if p == q {
                    hahn_weight_norm(0, q, &a, &a, big_n)?.1
                } else {
                    Rational::zero()
                };
                bad += usize::from(sum != want);
                total += 1;
            }
        }
        checks.push(Check::exact(
            format!("Hahn orthogonality, N={big_n}"),
            bad,
            total,
        ));

        // the multiplet n = N: R_{(n+m)/2}(λ(n₂)) = Q_{n₂}((n+m)/2)
        let (mut bad, mut total) = (0, 0);
        for j in 0..=big_n {
            for n2 in 0..=big_n {
                let r = dual_hahn_r(j, n2, &a, &a, big_n)?;
                bad += usize::from(r != hahn_q(n2, &int(j.into()), &a, &a, big_n)?);
                total += 1;
            }
        }
        checks.push(Check::exact(
            format!("dual Hahn identification, n={big_n}"),
            bad,
            total,
        ));
    }
    Ok(checks)
}

fn racah_duality(n_max: u32) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for big_n in 0..=n_max {
        let (params, _) = racah_family(ParityCase::EvenEven, i64::from(big_n));
        let (mut bad, mut total) = (0, 0);
        for q1 in 0..=big_n {
            for p1 in 0..=big_n {
                bad += usize::from(racah_r(q1, p1, &params)? != racah_r(p1, q1, &params)?);
                total += 1;
            }
        }
        checks.push(Check::exact(
            format!("Racah self-duality, N={big_n}"),
            bad,
            total,
        ));

        let (mut bad, mut total) = (0, 0);
        for (q1, q2, p1, p2) in splits(big_n) {
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
            let same = same_multiset(&num, series.numerator())
                && same_multiset(&den, series.denominator());
            bad += usize::from(!(half_integral && same));
            total += 1;
        }
        checks.push(Check::exact(
            format!("6j labels reproduce the even-even series, N={big_n}"),
            bad,
            total,
        ));
    }
    Ok(checks)
}

fn same_multiset(a: &[Rational], b: &[Rational]) -> bool {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    a.sort();
    b.sort();
    a == b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("unknown".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        for suite in Suite::ALL {
            let n = if suite == Suite::Eigenvalue { 1 } else { 2 };
            let report = run_suite(suite, n, None).unwrap();
            assert!(report.passed(), "{report}");
            assert!(!report.checks.is_empty());
        }
    }

    #[test]
    fn failing_check_is_reported() {
        let c = Check::float("x", 1.0, 0.5);
        assert!(!c.passed);
        assert!(c.to_string().starts_with("FAIL x"));
        assert!(Check::exact("y", 0, 3).passed);
        let c = Check::float("z", 0.0, 1.0).and(false, "slow");
        assert!(!c.passed && c.to_string().ends_with("[slow]"));
    }
}
