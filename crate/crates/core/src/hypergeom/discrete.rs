//! Hahn, dual Hahn and Racah polynomials as terminating series.

use num_traits::One;

use super::HypergeometricSpec;
use crate::error::{domain, Result};
use crate::exact::{fact, int, Rational};

/// Hahn polynomial `Q_n(x; α, β, N) = 3F2(-n, -x, n+α+β+1; α+1, -N | 1)`.
pub fn hahn_q(
    degree: u32,
    x: &Rational,
    alpha: &Rational,
    beta: &Rational,
    big_n: u32,
) -> Result<Rational> {
    if degree > big_n {
        return Err(domain(format!("Hahn degree {degree} exceeds N = {big_n}")));
    }
    let n = int(degree.into());
    HypergeometricSpec::new(
        vec![-&n, -x, &n + alpha + beta + int(1)],
        vec![alpha + int(1), int(-i64::from(big_n))],
    )?
    .eval()
}

/// Dual Hahn polynomial
/// `R_n(λ(x); γ, δ, N) = 3F2(-n, -x, x+γ+δ+1; γ+1, -N | 1)`, `λ(x) = x(x+γ+δ+1)`.
pub fn dual_hahn_r(
    degree: u32,
    x: u32,
    gamma: &Rational,
    delta: &Rational,
    big_n: u32,
) -> Result<Rational> {
    if degree > big_n || x > big_n {
        return Err(domain(format!(
            "dual Hahn needs n, x <= N = {big_n}, got n = {degree}, x = {x}"
        )));
    }
    let xr = int(x.into());
    HypergeometricSpec::new(
        vec![int(-i64::from(degree)), -&xr, &xr + gamma + delta + int(1)],
        vec![gamma + int(1), int(-i64::from(big_n))],
    )?
    .eval()
}

/// Which denominator of a Racah series equals `-N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TruncationBranch {
    Alpha,
    BetaDelta,
    Gamma,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RacahParams {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    pub delta: Rational,
    pub n: u32,
}

impl RacahParams {
    /// Requires `α+1`, `β+δ+1` or `γ+1` to equal `-N`.
    pub fn new(
        alpha: Rational,
        beta: Rational,
        gamma: Rational,
        delta: Rational,
        n: u32,
    ) -> Result<Self> {
        let p = RacahParams {
            alpha,
            beta,
            gamma,
            delta,
            n,
        };
        if p.branches().is_empty() {
            return Err(domain(format!(
                "no Racah truncation: none of α+1 = {}, β+δ+1 = {}, γ+1 = {} equals -{}",
                &p.alpha + int(1),
                &p.beta + &p.delta + int(1),
                &p.gamma + int(1),
                n
            )));
        }
        Ok(p)
    }

    fn branches(&self) -> Vec<TruncationBranch> {
        let target = int(-i64::from(self.n));
        let one = Rational::one();
        let mut out = Vec::new();
        if &self.gamma + &one == target {
            out.push(TruncationBranch::Gamma);
        }
        if &self.alpha + &one == target {
            out.push(TruncationBranch::Alpha);
        }
        if &self.beta + &self.delta + &one == target {
            out.push(TruncationBranch::BetaDelta);
        }
        out
    }

    /// The truncating denominator, preferring `γ+1`.
    pub fn branch(&self) -> TruncationBranch {
        self.branches()[0]
    }

    /// Quadratic lattice `λ(x) = x(x+γ+δ+1)`.
    pub fn lattice(&self, x: &Rational) -> Rational {
        x * (x + &self.gamma + &self.delta + int(1))
    }

    /// Parameters of the dual family `(γ, δ, α, β)`.
    pub fn dual(&self) -> Result<Self> {
        Self::new(
            self.gamma.clone(),
            self.delta.clone(),
            self.alpha.clone(),
            self.beta.clone(),
            self.n,
        )
    }

    pub fn spec(&self, degree: u32, x: u32) -> Result<HypergeometricSpec> {
        if degree > self.n || x > self.n {
            return Err(domain(format!(
                "Racah needs n, x <= N = {}, got n = {degree}, x = {x}",
                self.n
            )));
        }
        let (n, x) = (int(degree.into()), int(x.into()));
        HypergeometricSpec::new(
            vec![
                -&n,
                &n + &self.alpha + &self.beta + int(1),
                -&x,
                &x + &self.gamma + &self.delta + int(1),
            ],
            vec![
                &self.alpha + int(1),
                &self.beta + &self.delta + int(1),
                &self.gamma + int(1),
            ],
        )
    }
}

/// Racah polynomial
/// `R_n(λ(x)) = 4F3(-n, n+α+β+1, -x, x+γ+δ+1; α+1, β+δ+1, γ+1 | 1)`.
pub fn racah_r(degree: u32, x: u32, params: &RacahParams) -> Result<Rational> {
    params.spec(degree, x)?.eval()
}

/// Weight `ρ(j) = C(N, j)²` and squared norm
/// `d_n² = n! (2N+1-n)! / ((2N-2n+1) N!²)` of the Hahn family with
/// `α = β = -N-1`, the one that carries the disk coefficients.
pub fn hahn_weight_norm(
    j: u32,
    degree: u32,
    alpha: &Rational,
    beta: &Rational,
    big_n: u32,
) -> Result<(Rational, Rational)> {
    let nn = i64::from(big_n);
    if *alpha != int(-nn - 1) || *beta != int(-nn - 1) {
        return Err(domain(format!(
            "weight is tabulated only for α = β = -N-1 = {}",
            -nn - 1
        )));
    }
    if j > big_n || degree > big_n {
        return Err(domain(format!(
            "j = {j}, n = {degree} must not exceed N = {big_n}"
        )));
    }
    let (j, n) = (i64::from(j), i64::from(degree));
    let binom = fact(nn) / (fact(j) * fact(nn - j));
    let rho = &binom * &binom;
    let d2 = fact(n) * fact(2 * nn + 1 - n) / (int(2 * nn - 2 * n + 1) * fact(nn) * fact(nn));
    Ok((rho, d2))
}
