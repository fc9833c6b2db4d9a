//! Transformations of terminating series at unit argument.
//!
//! Each returns a [`Transformed`] pair `(prefactor, spec)` such that the
//! original series equals `prefactor · spec.eval()`.
//!
//! A Pochhammer factor `(x)_n` in a prefactor is always paired with a new
//! denominator `1 - x - n`. When `x` is an integer in `1-n ..= 0` the factor
//! vanishes while the new denominator is a pole inside the summation range;
//! the limit is `(-1)^n (-x)!` times the series with that denominator
//! regularized.

use num_traits::{One, Zero};

use super::HypergeometricSpec;
use crate::error::{domain, Error, Result};
use crate::exact::{as_integer, fact, int, pochhammer, rgamma_int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transformed {
    pub prefactor: Rational,
    pub spec: HypergeometricSpec,
}

impl Transformed {
    pub fn value(&self) -> Result<Rational> {
        if self.prefactor.is_zero() {
            return Ok(Rational::zero());
        }
        Ok(&self.prefactor * self.spec.eval()?)
    }
}

/// `(x)_n` and the new denominator `1 - x - n` with its regularization flag.
fn paired(x: &Rational, n: u64) -> (Rational, Rational, bool) {
    let new_den = int(1) - x - int(n as i64);
    match as_integer(x) {
        Some(k) if n > 0 && k <= 0 && k > -(n as i64) => {
            let sign = if n.is_multiple_of(2) { int(1) } else { int(-1) };
            (sign * fact(-k), new_den, true)
        }
        _ => (pochhammer(x, n), new_den, false),
    }
}

/// `1/(b)_n`, or `1/Γ(b+n)` when `b` was already regularized.
fn inverse_pochhammer(spec: &HypergeometricSpec, index: usize, n: u64) -> Result<Rational> {
    let b = &spec.denominator()[index];
    if spec.is_regularized(index) {
        return Ok(rgamma_int(as_integer(b).expect("integer") + n as i64));
    }
    let p = pochhammer(b, n);
    if p.is_zero() {
        return Err(Error::Pole {
            index,
            value: b.to_string(),
            term: n as usize,
        });
    }
    Ok(p.recip())
}

fn leading_degree(spec: &HypergeometricSpec, shape: (usize, usize)) -> Result<u64> {
    if spec.order() != shape {
        return Err(domain(format!(
            "expected a {}F{} series, got {:?}",
            shape.0, shape.1, spec
        )));
    }
    let a = &spec.numerator()[0];
    let n = match as_integer(a) {
        Some(k) if k <= 0 => (-k) as u64,
        _ => {
            return Err(domain(format!(
                "first numerator parameter {a} must be a nonpositive integer"
            )))
        }
    };
    // an earlier-terminating numerator can mask a pole the identities do not tolerate
    for (index, b) in spec.denominator().iter().enumerate() {
        if spec.is_regularized(index) {
            continue;
        }
        if let Some(k) = as_integer(b) {
            if k <= 0 && ((1 - k) as u64) <= n {
                return Err(Error::Pole {
                    index,
                    value: b.to_string(),
                    term: (1 - k) as usize,
                });
            }
        }
    }
    Ok(n)
}

/// Terminating Thomae relation
/// `3F2(-N, b, c; d, e) = (d-b)_N/(d)_N · 3F2(-N, b, e-c; 1+b-d-N, e)`.
pub fn transform_f32(spec: &HypergeometricSpec) -> Result<Transformed> {
    let n = leading_degree(spec, (3, 2))?;
    let [a, b, c] = [0, 1, 2].map(|i| spec.numerator()[i].clone());
    let e = spec.denominator()[1].clone();
    let d = &spec.denominator()[0];
    let (pair, new_d, reg_d) = paired(&(d - &b), n);
    let prefactor = pair * inverse_pochhammer(spec, 0, n)?;
    let out = HypergeometricSpec::with_regularized(
        vec![a, b, &e - &c],
        vec![new_d, e],
        vec![reg_d, spec.is_regularized(1)],
    )?;
    Ok(Transformed {
        prefactor,
        spec: out,
    })
}

/// Whipple's relation between balanced terminating `4F3` series:
/// `4F3(-n, x, y, z; u, v, w) = (v-z)_n (u-z)_n / ((v)_n (u)_n)
///   · 4F3(-n, w-x, w-y, z; 1-u+z-n, 1-v+z-n, w)`.
pub fn transform_whipple(spec: &HypergeometricSpec) -> Result<Transformed> {
    let n = leading_degree(spec, (4, 3))?;
    if !spec.is_saalschutzian() {
        return Err(domain(format!("{spec:?} is not balanced")));
    }
    let num = spec.numerator();
    let (x, y, z) = (&num[1], &num[2], &num[3]);
    let den = spec.denominator();
    let (u, v, w) = (&den[0], &den[1], &den[2]);
    let (pu, du, ru) = paired(&(u - z), n);
    let (pv, dv, rv) = paired(&(v - z), n);
    let prefactor = pu * pv * inverse_pochhammer(spec, 0, n)? * inverse_pochhammer(spec, 1, n)?;
    let out = HypergeometricSpec::with_regularized(
        vec![num[0].clone(), w - x, w - y, z.clone()],
        vec![du, dv, w.clone()],
        vec![ru, rv, spec.is_regularized(2)],
    )?;
    Ok(Transformed {
        prefactor,
        spec: out,
    })
}

/// Reversal of the order of summation of a terminating `4F3`:
/// `4F3(-n, x, y, z; u, v, w) = (-1)^n (x)_n (y)_n (z)_n / ((u)_n (v)_n (w)_n)
///   · 4F3(-n, 1-u-n, 1-v-n, 1-w-n; 1-x-n, 1-y-n, 1-z-n)`.
pub fn transform_reversal(spec: &HypergeometricSpec) -> Result<Transformed> {
    let n = leading_degree(spec, (4, 3))?;
    let num = spec.numerator();
    let mut prefactor = if n % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    };
    let mut new_den = Vec::with_capacity(3);
    let mut flags = Vec::with_capacity(3);
    for x in &num[1..] {
        let (p, d, r) = paired(x, n);
        prefactor *= p;
        new_den.push(d);
        flags.push(r);
    }
    let mut new_num = vec![num[0].clone()];
    for (i, b) in spec.denominator().iter().enumerate() {
        prefactor *= inverse_pochhammer(spec, i, n)?;
        new_num.push(int(1) - b - int(n as i64));
    }
    let out = HypergeometricSpec::with_regularized(new_num, new_den, flags)?;
    Ok(Transformed {
        prefactor,
        spec: out,
    })
}
