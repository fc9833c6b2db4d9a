//! Exact arithmetic: rationals, factorials, Pochhammer symbols and the
//! multiplicative algebra of numbers `i^k · q · √s`.

mod squarefree;
mod sum;
mod value;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{domain, Result};

pub use squarefree::square_free_split;
pub use sum::{exact_sum, SurdSum};
pub use value::{sqrt_normalize, ExactValue};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// `n/d` as a [`Rational`].
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer `n` as a [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n!` as a big unsigned integer.
pub fn factorial_big(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `n!` exactly.
pub fn factorial(n: i64) -> Result<Rational> {
    if n < 0 {
        return Err(domain(format!("factorial of negative integer {n}")));
    }
    Ok(Rational::from_integer(BigInt::from(factorial_big(
        n as u64,
    ))))
}

/// `n!` for arguments already known to be nonnegative.
pub(crate) fn fact(n: i64) -> Rational {
    factorial(n).expect("factorial argument is nonnegative")
}

/// Rising factorial `(a)_k = a (a+1) … (a+k-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &Rational, k: u64) -> Rational {
    let mut acc = Rational::one();
    let mut x = a.clone();
    for _ in 0..k {
        if x.is_zero() {
            return Rational::zero();
        }
        acc *= &x;
        x += Rational::one();
    }
    acc
}

/// `1/Γ(k)` for integer `k`: zero at the poles `k ≤ 0`.
pub fn rgamma_int(k: i64) -> Rational {
    if k <= 0 {
        Rational::zero()
    } else {
        fact(k - 1).recip()
    }
}

/// `Γ(a)/Γ(b)` when `a - b` is an integer, as a ratio of Pochhammer symbols.
pub fn gamma_ratio(a: &Rational, b: &Rational) -> Result<Rational> {
    let diff = a - b;
    if !diff.is_integer() {
        return Err(domain(format!("Γ({a})/Γ({b}) needs an integer difference")));
    }
    let k = diff.to_integer().to_i64().expect("small shift");
    if k >= 0 {
        Ok(pochhammer(b, k as u64))
    } else {
        let p = pochhammer(a, (-k) as u64);
        if p.is_zero() {
            return Err(domain(format!("Γ({a})/Γ({b}) has a pole")));
        }
        Ok(p.recip())
    }
}

/// Integer value of a rational, if it is one.
pub fn as_integer(x: &Rational) -> Option<i64> {
    if x.is_integer() {
        x.to_integer().to_i64()
    } else {
        None
    }
}

/// True when `x` is an integer `≤ 0`.
pub fn is_nonpositive_integer(x: &Rational) -> bool {
    x.is_integer() && !x.is_positive()
}

/// Nearest `f64` to a rational of any size.
pub fn rational_to_f64(x: &Rational) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let num = x.numer().abs();
    let den = x.denom().clone();
    let shift = num.bits() as i64 - den.bits() as i64 - 64;
    let q = if shift >= 0 {
        num.div_floor(&(den << shift as usize))
    } else {
        (num << (-shift) as usize).div_floor(&den)
    };
    let half = (shift / 2) as i32;
    let mag =
        q.to_f64().unwrap_or(f64::INFINITY) * 2f64.powi(half) * 2f64.powi(shift as i32 - half);
    if x.is_negative() {
        -mag
    } else {
        mag
    }
}
