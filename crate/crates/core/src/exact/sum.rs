use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{ExactValue, Rational};
use crate::error::{Error, Result};

/// Exact accumulator for sums of [`ExactValue`]s.
///
/// Terms are grouped by their square-free radicand; square roots of distinct
/// square-free integers are linearly independent over the rationals, so the
/// sum is a single `i^k · q · √s` exactly when at most one group survives
/// with a purely real or purely imaginary coefficient.
#[derive(Debug, Clone, Default)]
pub struct SurdSum {
    groups: BTreeMap<BigInt, (Rational, Rational)>,
    sqrt_pi_power: Option<i32>,
    mixed_pi: bool,
}

impl SurdSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, v: &ExactValue) {
        if v.is_zero() {
            return;
        }
        match self.sqrt_pi_power {
            None => self.sqrt_pi_power = Some(v.sqrt_pi_power()),
            Some(p) if p != v.sqrt_pi_power() => self.mixed_pi = true,
            _ => {}
        }
        let entry = self
            .groups
            .entry(v.radicand().to_integer())
            .or_insert_with(|| (Rational::zero(), Rational::zero()));
        let q = v.magnitude();
        match v.phase() {
            0 => entry.0 += q,
            1 => entry.1 += q,
            2 => entry.0 -= q,
            _ => entry.1 -= q,
        }
    }

    pub fn finish(self) -> Result<ExactValue> {
        if self.mixed_pi {
            return Err(Error::NotRepresentable);
        }
        let mut live = self
            .groups
            .into_iter()
            .filter(|(_, (re, im))| !re.is_zero() || !im.is_zero());
        let Some((radicand, (re, im))) = live.next() else {
            return Ok(ExactValue::zero());
        };
        if live.next().is_some() || (!re.is_zero() && !im.is_zero()) {
            return Err(Error::NotRepresentable);
        }
        let (phase, q) = if im.is_zero() { (0, re) } else { (1, im) };
        let v = ExactValue::new(phase, q, Rational::from_integer(radicand))?;
        Ok(v.with_sqrt_pi_power(self.sqrt_pi_power.unwrap_or(0)))
    }
}

impl<'a> FromIterator<&'a ExactValue> for SurdSum {
    fn from_iter<I: IntoIterator<Item = &'a ExactValue>>(iter: I) -> Self {
        let mut s = SurdSum::new();
        for v in iter {
            s.add(v);
        }
        s
    }
}

/// Exact sum of values expected to collapse to a single surd.
pub fn exact_sum<'a>(values: impl IntoIterator<Item = &'a ExactValue>) -> Result<ExactValue> {
    values.into_iter().collect::<SurdSum>().finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn collapses_like_radicands() {
        let a = ExactValue::scaled_sqrt(rat(1, 2), int(8)).unwrap(); // √2
        let b = ExactValue::scaled_sqrt(int(-3), int(2)).unwrap(); // -3√2
        assert_eq!(
            exact_sum([&a, &b]).unwrap(),
            ExactValue::scaled_sqrt(int(-2), int(2)).unwrap()
        );
    }

    #[test]
    fn cancels_to_zero() {
        let a = ExactValue::i_pow(1);
        let b = ExactValue::i_pow(3);
        assert_eq!(exact_sum([&a, &b]).unwrap(), ExactValue::zero());
    }

    #[test]
    fn rejects_mixed_surds() {
        let a = ExactValue::sqrt(int(2)).unwrap();
        let b = ExactValue::sqrt(int(3)).unwrap();
        assert_eq!(exact_sum([&a, &b]), Err(Error::NotRepresentable));
        let c = ExactValue::one();
        let d = ExactValue::i_pow(1);
        assert_eq!(exact_sum([&c, &d]), Err(Error::NotRepresentable));
    }
}
