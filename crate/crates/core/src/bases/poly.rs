//! Classical polynomials by forward three-term recurrence in the degree.

/// Legendre `P_n(x)`.
pub fn legendre_p(n: u32, x: f64) -> f64 {
    legendre_homogeneous(n, x, 1.0)
}

/// `s^n P_n(t/s)` with `s² = s2`, a polynomial in `(t, s2)`.
///
/// Stays finite and smooth where `s → 0`, which is where the Cartesian
/// bases put the argument of their Legendre factor.
pub fn legendre_homogeneous(n: u32, t: f64, s2: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, t);
    if n == 0 {
        return prev;
    }
    for k in 1..n {
        let k = f64::from(k);
        let next = ((2.0 * k + 1.0) * t * cur - k * s2 * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Gegenbauer `C^λ_n(x)`.
pub fn gegenbauer_c(n: u32, lambda: f64, x: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, 2.0 * lambda * x);
    if n == 0 {
        return prev;
    }
    for k in 1..n {
        let k = f64::from(k);
        let next = (2.0 * (k + lambda) * x * cur - (k + 2.0 * lambda - 1.0) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Jacobi `P^{(α,β)}_n(x)`.
pub fn jacobi_p(n: u32, alpha: f64, beta: f64, x: f64) -> f64 {
    let ab = alpha + beta;
    let (mut prev, mut cur) = (1.0, 0.5 * (alpha - beta) + 0.5 * (ab + 2.0) * x);
    if n == 0 {
        return prev;
    }
    for k in 1..n {
        let k = f64::from(k);
        let c = 2.0 * k + ab;
        let a1 = 2.0 * (k + 1.0) * (k + ab + 1.0) * c;
        let a2 = (c + 1.0) * (alpha * alpha - beta * beta);
        let a3 = c * (c + 1.0) * (c + 2.0);
        let a4 = 2.0 * (k + alpha) * (k + beta) * (c + 2.0);
        let next = ((a2 + a3 * x) * cur - a4 * prev) / a1;
        prev = cur;
        cur = next;
    }
    cur
}
