//! Representation counts `d(n; A)`: the number of non-negative integer
//! solutions of `a_1 x_1 + ... + a_k x_k = n`.
//!
//! Several strategies are provided and they must agree:
//!
//! * a prefix table built one part at a time from the generating series
//!   `1 / ((1 - x^a_1) ... (1 - x^a_k))`,
//! * a direct congruence count for two parts,
//! * splitting off one part, which reduces three parts to a sum of
//!   two-part counts.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactint::{gcd, gcd_all, Overflow};
use crate::limits::Limits;

/// An ordered tuple of `k >= 2` positive integers with its cached gcd.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Tuple {
    parts: Vec<i64>,
    #[serde(skip)]
    overall_gcd: i64,
}

impl Tuple {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.len() < 2 {
            return Err(Error::InvalidTuple(format!(
                "need at least 2 parts, got {}",
                parts.len()
            )));
        }
        if let Some(bad) = parts.iter().find(|&&p| p < 1) {
            return Err(Error::InvalidTuple(format!("part {bad} is not a positive integer")));
        }
        let overall_gcd = gcd_all(&parts);
        Ok(Tuple { parts, overall_gcd })
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn overall_gcd(&self) -> i64 {
        self.overall_gcd
    }

    pub fn min_part(&self) -> i64 {
        *self.parts.iter().min().expect("tuple has at least two parts")
    }

    /// `Ok` iff the parts are coprime as a whole, i.e. `g(A; s)` exists.
    pub fn require_coprime(&self) -> Result<()> {
        if self.overall_gcd == 1 {
            Ok(())
        } else {
            Err(Error::NotCoprime { parts: self.parts.clone(), gcd: self.overall_gcd })
        }
    }

    pub fn require_arity(&self, k: usize) -> Result<()> {
        if self.len() == k {
            Ok(())
        } else {
            Err(Error::WrongArity { expected: k, got: self.len() })
        }
    }

    /// The tuple with `part` prepended.
    pub fn prepend(&self, part: i64) -> Result<Tuple> {
        let mut parts = Vec::with_capacity(self.len() + 1);
        parts.push(part);
        parts.extend_from_slice(&self.parts);
        Tuple::new(parts)
    }
}

impl FromStr for Tuple {
    type Err = Error;

    /// Parses comma-separated positive integers, keeping their order.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<i64>()
                    .map_err(|_| Error::InvalidTuple(format!("{t:?} is not an integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        Tuple::new(parts)
    }
}

impl fmt::Display for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// `d(0; A), d(1; A), ..., d(N; A)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenumerantTable {
    tuple: Tuple,
    counts: Vec<u64>,
}

impl DenumerantTable {
    pub fn tuple(&self) -> &Tuple {
        &self.tuple
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Largest `n` covered by the table.
    pub fn n_max(&self) -> i64 {
        self.counts.len() as i64 - 1
    }

    /// `d(n; A)` when `n` is covered; negative `n` gives `Some(0)`.
    pub fn get(&self, n: i64) -> Option<u64> {
        if n < 0 {
            Some(0)
        } else {
            self.counts.get(n as usize).copied()
        }
    }
}

/// Builds counts for `0..len` by multiplying in one factor `1/(1 - x^a)` at a time.
pub(crate) fn series_counts(parts: &[i64], len: usize) -> Result<Vec<u64>> {
    let mut counts = vec![0u64; len];
    if len == 0 {
        return Ok(counts);
    }
    counts[0] = 1;
    for &a in parts {
        let a = a as usize;
        for n in a..len {
            counts[n] = counts[n]
                .checked_add(counts[n - a])
                .ok_or(Overflow::new("denumerant count"))?;
        }
    }
    Ok(counts)
}

/// Prefix of the counting sequence up to and including `n_max`.
pub fn denumerant_series(tuple: &Tuple, n_max: u64, limits: &Limits) -> Result<DenumerantTable> {
    let len = n_max.checked_add(1).ok_or(Overflow::new("series length"))?;
    limits.check_capacity(len)?;
    let counts = series_counts(tuple.parts(), len as usize)?;
    Ok(DenumerantTable { tuple: tuple.clone(), counts })
}

/// Inverse of `x` modulo `m` for coprime `x, m` with `m >= 1`.
fn mod_inverse(x: i128, m: i128) -> i128 {
    let (mut r0, mut r1) = (x.rem_euclid(m), m);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert!(r0 == 1 || m == 1);
    s0.rem_euclid(m)
}

/// `d(n; a, b)`: the number of `y` in `[0, n/b]` with `n - y b ≡ 0 (mod a)`.
///
/// The solutions form one residue class modulo `a / gcd(a, b)`, so the
/// count is read off from the least solution. Non-coprime pairs are
/// handled by dividing out the gcd.
pub fn denumerant_two(n: i64, a: i64, b: i64) -> u64 {
    assert!(a >= 1 && b >= 1, "parts must be positive");
    if n < 0 {
        return 0;
    }
    let g = gcd(a, b);
    if n % g != 0 {
        return 0;
    }
    let (n, a, b) = ((n / g) as i128, (a / g) as i128, (b / g) as i128);
    let y_max = n / b;
    let y0 = (n % a) * mod_inverse(b, a) % a;
    if y0 > y_max {
        0
    } else {
        ((y_max - y0) / a + 1) as u64
    }
}

fn largest_part_index(parts: &[i64]) -> usize {
    parts
        .iter()
        .enumerate()
        .max_by_key(|&(_, &p)| p)
        .map(|(i, _)| i)
        .expect("non-empty")
}

fn denumerant_three(n: i64, parts: &[i64]) -> Result<u64> {
    let split = largest_part_index(parts);
    let big = parts[split];
    let rest: Vec<i64> = parts
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != split)
        .map(|(_, &p)| p)
        .collect();
    let mut total = 0u64;
    let mut m = n;
    while m >= 0 {
        total = total
            .checked_add(denumerant_two(m, rest[0], rest[1]))
            .ok_or(Overflow::new("denumerant count"))?;
        m -= big;
    }
    Ok(total)
}

/// `d(n; A)` with the default [`Limits`].
pub fn denumerant(n: i64, tuple: &Tuple) -> Result<u64> {
    denumerant_with(n, tuple, &Limits::default())
}

/// `d(n; A)`, zero for negative `n`.
///
/// Two parts use the congruence count and three parts split off the
/// largest part; neither needs a table. Four or more parts fill a table up
/// to `n`, which must fit in `limits.table_capacity`.
pub fn denumerant_with(n: i64, tuple: &Tuple, limits: &Limits) -> Result<u64> {
    if n < 0 {
        return Ok(0);
    }
    let parts = tuple.parts();
    match parts.len() {
        2 => Ok(denumerant_two(n, parts[0], parts[1])),
        3 => denumerant_three(n, parts),
        _ => {
            let len = n as u64 + 1;
            limits.check_capacity(len)?;
            Ok(series_counts(parts, len as usize)?[n as usize])
        }
    }
}

/// `Σ_{j=0}^{⌊m/a1⌋} d(m - j·a1; rest)`, which equals `d(m; a1, rest...)`.
pub fn split_by_part(m: i64, a1: i64, rest: &Tuple) -> Result<u64> {
    if a1 < 1 {
        return Err(Error::InvalidInput(format!("split part {a1} is not positive")));
    }
    let mut total = 0u64;
    let mut r = m;
    while r >= 0 {
        total = total
            .checked_add(denumerant(r, rest)?)
            .ok_or(Overflow::new("denumerant count"))?;
        r -= a1;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(parts: &[i64]) -> Tuple {
        Tuple::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn tuple_validation() {
        assert!(matches!(Tuple::new(vec![3]), Err(Error::InvalidTuple(_))));
        assert!(matches!(Tuple::new(vec![3, 0]), Err(Error::InvalidTuple(_))));
        assert!(matches!(Tuple::new(vec![3, -5]), Err(Error::InvalidTuple(_))));
        assert_eq!(t(&[6, 10, 15]).overall_gcd(), 1);
        assert_eq!(t(&[6, 10]).overall_gcd(), 2);
        assert!(t(&[6, 10]).require_coprime().is_err());
        assert_eq!("10, 15,21".parse::<Tuple>().unwrap().parts(), &[10, 15, 21]);
        assert!("10,x".parse::<Tuple>().is_err());
        assert_eq!(t(&[10, 15, 21]).to_string(), "(10,15,21)");
    }

    #[test]
    fn point_values() {
        assert_eq!(denumerant(120, &t(&[10, 15, 21])).unwrap(), 6);
        assert_eq!(denumerant(0, &t(&[3, 5])).unwrap(), 1);
        assert_eq!(denumerant(7, &t(&[3, 5])).unwrap(), 0);
        assert_eq!(denumerant(53, &t(&[3, 7])).unwrap(), 2);
        assert_eq!(denumerant(-4, &t(&[3, 7])).unwrap(), 0);
    }

    #[test]
    fn series_values() {
        let lim = Limits::default();
        assert_eq!(
            denumerant_series(&t(&[3, 5]), 7, &lim).unwrap().counts(),
            &[1, 0, 0, 1, 0, 1, 1, 0]
        );
        assert_eq!(denumerant_series(&t(&[2, 3]), 0, &lim).unwrap().counts(), &[1]);
        let table = denumerant_series(&t(&[10, 15, 21]), 120, &lim).unwrap();
        assert_eq!(table.get(120), Some(6));
        assert_eq!(table.get(-1), Some(0));
        assert_eq!(table.get(121), None);
    }

    #[test]
    fn series_capacity() {
        let err = denumerant_series(&t(&[2, 3]), 100, &Limits::new(50)).unwrap_err();
        assert_eq!(err, Error::CapacityExceeded { requested: 101, capacity: 50 });
        let four = t(&[2, 3, 5, 7]);
        assert!(denumerant_with(100, &four, &Limits::new(50)).is_err());
        assert!(denumerant_with(40, &four, &Limits::new(50)).is_ok());
    }

    #[test]
    fn two_part_values() {
        assert_eq!(denumerant_two(31, 4, 5), 1);
        assert_eq!(denumerant_two(-1, 3, 7), 0);
        assert_eq!(denumerant_two(63, 3, 7), 4);
        assert_eq!(denumerant_two(12, 4, 6), 2);
        assert_eq!(denumerant_two(13, 4, 6), 0);
        assert_eq!(denumerant_two(5, 1, 1), 6);
    }

    #[test]
    fn two_part_large_target() {
        let n = 10_000_019i64;
        let brute = (0..=n / 7).filter(|y| (n - 7 * y) % 3 == 0).count();
        assert_eq!(denumerant_two(n, 3, 7), brute as u64);
    }

    #[test]
    fn splitting() {
        let rest = t(&[5, 7]);
        assert_eq!(
            split_by_part(89, 10, &rest).unwrap(),
            denumerant(89, &t(&[10, 5, 7])).unwrap()
        );
        assert_eq!(split_by_part(0, 4, &t(&[3, 5])).unwrap(), 1);
        assert_eq!(
            split_by_part(20, 100, &t(&[3, 5])).unwrap(),
            denumerant(20, &t(&[3, 5])).unwrap()
        );
        assert!(split_by_part(5, 0, &rest).is_err());
    }

    #[test]
    fn count_overflow_is_signalled() {
        let ones = t(&[1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1]);
        let err = denumerant_series(&ones, 200_000, &Limits::default()).unwrap_err();
        assert!(matches!(err, Error::Overflow(_)));
    }
}
