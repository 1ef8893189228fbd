//! Exact integer helpers.
//!
//! Scalars are `i64` at the API boundary. Products and sums are formed in
//! `i128` and narrowed back with a check, so every operation either returns
//! the exact value or an [`Overflow`].

use std::fmt;
use std::ops::Deref;

use thiserror::Error;

/// Result of an operation whose exact value does not fit in the external range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("integer overflow in {op}")]
pub struct Overflow {
    pub op: &'static str,
}

impl Overflow {
    pub const fn new(op: &'static str) -> Self {
        Overflow { op }
    }
}

/// Narrows a wide intermediate to `i64`.
#[inline]
pub fn narrow(value: i128, op: &'static str) -> Result<i64, Overflow> {
    i64::try_from(value).map_err(|_| Overflow::new(op))
}

#[inline]
pub fn add(a: i64, b: i64) -> Result<i64, Overflow> {
    a.checked_add(b).ok_or(Overflow::new("add"))
}

#[inline]
pub fn sub(a: i64, b: i64) -> Result<i64, Overflow> {
    a.checked_sub(b).ok_or(Overflow::new("sub"))
}

#[inline]
pub fn mul(a: i64, b: i64) -> Result<i64, Overflow> {
    narrow(a as i128 * b as i128, "mul")
}

/// Greatest common divisor. `gcd(0, b) = |b|`, which lets folds start from 0.
pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut x, mut y) = (a.unsigned_abs(), b.unsigned_abs());
    while y != 0 {
        let r = x % y;
        x = y;
        y = r;
    }
    // Only gcd(i64::MIN, 0) or gcd(i64::MIN, i64::MIN) can exceed i64::MAX.
    x.min(i64::MAX as u64) as i64
}

/// gcd of every element; 0 for an empty slice.
pub fn gcd_all(values: &[i64]) -> i64 {
    values.iter().fold(0, |acc, &v| gcd(acc, v))
}

/// Least common multiple of two positive integers.
pub fn lcm(a: i64, b: i64) -> Result<i64, Overflow> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    narrow((a / gcd(a, b)) as i128 * b as i128, "lcm").map(i64::abs)
}

pub fn lcm_all(values: &[i64]) -> Result<i64, Overflow> {
    values.iter().try_fold(1, |acc, &v| lcm(acc, v))
}

/// `⌈num / den⌉` for `den ≥ 1`. The numerator is taken wide so callers can
/// pass an unnarrowed product.
pub fn ceil_div(num: i128, den: i128) -> Result<i64, Overflow> {
    assert!(den >= 1, "ceil_div requires a positive denominator");
    let q = num.div_euclid(den);
    let q = if num.rem_euclid(den) == 0 { q } else { q + 1 };
    narrow(q, "ceil_div")
}

/// An `i64` whose arithmetic is checked against overflow.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CheckedInt(i64);

impl CheckedInt {
    pub const ZERO: CheckedInt = CheckedInt(0);
    pub const ONE: CheckedInt = CheckedInt(1);

    pub const fn new(value: i64) -> Self {
        CheckedInt(value)
    }

    pub const fn get(self) -> i64 {
        self.0
    }

    pub fn checked_add(self, rhs: impl Into<CheckedInt>) -> Result<Self, Overflow> {
        add(self.0, rhs.into().0).map(CheckedInt)
    }

    pub fn checked_sub(self, rhs: impl Into<CheckedInt>) -> Result<Self, Overflow> {
        sub(self.0, rhs.into().0).map(CheckedInt)
    }

    pub fn checked_mul(self, rhs: impl Into<CheckedInt>) -> Result<Self, Overflow> {
        mul(self.0, rhs.into().0).map(CheckedInt)
    }

    /// Exact division; fails if `rhs` does not divide `self`.
    pub fn div_exact(self, rhs: impl Into<CheckedInt>) -> Result<Self, Overflow> {
        let rhs = rhs.into().0;
        if rhs == 0 || self.0 % rhs != 0 {
            return Err(Overflow::new("div_exact"));
        }
        self.0.checked_div(rhs).map(CheckedInt).ok_or(Overflow::new("div_exact"))
    }
}

impl From<i64> for CheckedInt {
    fn from(value: i64) -> Self {
        CheckedInt(value)
    }
}

impl From<CheckedInt> for i64 {
    fn from(value: CheckedInt) -> Self {
        value.0
    }
}

impl Deref for CheckedInt {
    type Target = i64;

    fn deref(&self) -> &i64 {
        &self.0
    }
}

impl fmt::Display for CheckedInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(15, 21), 3);
        assert_eq!(gcd(7, 7), 7);
        assert_eq!(gcd(16, 23), 1);
        assert_eq!(gcd(0, 9), 9);
        assert_eq!(gcd_all(&[10, 15, 21]), 1);
        assert_eq!(gcd_all(&[12, 18, 30]), 6);
    }

    #[test]
    fn ceil_div_examples() {
        assert_eq!(ceil_div(315, 90), Ok(4));
        assert_eq!(ceil_div(0, 5), Ok(0));
        assert_eq!(ceil_div(9 * 2, 4), Ok(5));
        assert_eq!(ceil_div(-7, 2), Ok(-3));
    }

    #[test]
    fn lcm_examples() {
        assert_eq!(lcm_all(&[55, 22, 10]), Ok(110));
        assert_eq!(lcm(1, 9), Ok(9));
        assert_eq!(lcm(4, 6), Ok(12));
    }

    #[test]
    fn overflow_is_signalled() {
        assert!(mul(i64::MAX, 2).is_err());
        assert!(add(i64::MAX, 1).is_err());
        assert!(sub(i64::MIN, 1).is_err());
        assert!(lcm(i64::MAX, i64::MAX - 1).is_err());
        assert!(ceil_div(i128::from(i64::MAX) * 4, 2).is_err());
        assert!(CheckedInt::new(1 << 62).checked_mul(4).is_err());
        assert_eq!(CheckedInt::new(12).div_exact(4), Ok(CheckedInt::new(3)));
        assert!(CheckedInt::new(13).div_exact(4).is_err());
    }

    proptest! {
        #[test]
        fn gcd_lcm_product(a in 1i64..1_000_000, b in 1i64..1_000_000) {
            prop_assert_eq!(gcd(a, b) as i128 * lcm(a, b).unwrap() as i128, a as i128 * b as i128);
        }

        #[test]
        fn ceil_div_brackets(n in 0i64..10_000_000, d in 1i64..10_000) {
            let q = ceil_div(n as i128, d as i128).unwrap();
            prop_assert!(q * d >= n);
            prop_assert!((q - 1) * d < n);
        }
    }
}
