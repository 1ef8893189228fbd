//! Generalized Frobenius numbers `g(A; s)`: the largest integer with at
//! most `s` representations by the parts of `A`.

use std::fmt;

use serde::Serialize;

use crate::closedform;
use crate::denumerant::Tuple;
use crate::error::{Error, Result};
use crate::exactint::{gcd, gcd_all, narrow, Overflow};
use crate::limits::Limits;

/// How a [`GenFrobResult`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    TwoVarClosedForm,
    BruteForce,
    GcdReduction,
    Theorem1,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::TwoVarClosedForm => "two_var_closed_form",
            Method::BruteForce => "brute_force",
            Method::GcdReduction => "gcd_reduction",
            Method::Theorem1 => "theorem1",
        })
    }
}

/// A `(tuple, s)` pair for which `g(A; s)` exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenFrobQuery {
    tuple: Tuple,
    s: u64,
}

impl GenFrobQuery {
    pub fn new(tuple: Tuple, s: u64) -> Result<Self> {
        tuple.require_coprime()?;
        Ok(GenFrobQuery { tuple, s })
    }

    pub fn tuple(&self) -> &Tuple {
        &self.tuple
    }

    pub fn s(&self) -> u64 {
        self.s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenFrobResult {
    /// `g(A; s)`; `-1` when every non-negative integer has more than `s` representations.
    pub value: i64,
    pub method: Method,
    /// `min(A)` consecutive `(n, d(n; A))` pairs above `value`, each with `d > s`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_window: Option<Vec<(i64, u64)>>,
}

impl GenFrobResult {
    fn closed(value: i64, method: Method) -> Self {
        GenFrobResult { value, method, witness_window: None }
    }
}

/// `g(a, b; s) = (s+1)ab - a - b` for coprime `a, b`.
///
/// `s = -1` is accepted and yields the sentinel `-2`, so that
/// `g(a, b; i-1) < m <= g(a, b; i)` also reads correctly for `i = 0`.
pub fn gen_frobenius_two(a: i64, b: i64, s: i64) -> Result<i64> {
    if a < 1 || b < 1 {
        return Err(Error::InvalidInput(format!("parts ({a}, {b}) must be positive")));
    }
    let g = gcd(a, b);
    if g != 1 {
        return Err(Error::NotCoprime { parts: vec![a, b], gcd: g });
    }
    match s {
        -1 => Ok(-2),
        s if s < -1 => Err(Error::InvalidInput(format!("s = {s} is below -1"))),
        s => narrow(
            (s as i128 + 1) * a as i128 * b as i128 - a as i128 - b as i128,
            "gen_frobenius_two",
        )
        .map_err(Error::from),
    }
}

const INITIAL_SEARCH_LEN: usize = 1024;

/// Counts for `0..len`, saturating at `u64::MAX`; only comparisons with `s` matter here.
fn saturating_counts(parts: &[i64], len: usize) -> Vec<u64> {
    let mut counts = vec![0u64; len];
    if len > 0 {
        counts[0] = 1;
    }
    for &a in parts {
        let a = a as usize;
        for n in a..len {
            counts[n] = counts[n].saturating_add(counts[n - a]);
        }
    }
    counts
}

/// Scans `counts` for the first run of `window` consecutive entries above `s`.
/// Returns the largest index before that run with count `<= s` (or `-1`) and
/// the run's start.
fn find_window(counts: &[u64], s: u64, window: usize) -> Option<(i64, usize)> {
    let mut last_small = -1i64;
    let mut run = 0usize;
    for (n, &c) in counts.iter().enumerate() {
        if c <= s {
            last_small = n as i64;
            run = 0;
        } else {
            run += 1;
            if run == window {
                return Some((last_small, n + 1 - window));
            }
        }
    }
    None
}

/// `g(A; s)` by direct search.
///
/// Counts are tabulated over a growing prefix (doubling each round) until
/// `min(A)` consecutive integers all have more than `s` representations.
/// Every larger integer is one of those plus a multiple of `min(A)`, and
/// adding a part never loses a representation, so nothing beyond the run
/// can have `s` or fewer.
pub fn gen_frobenius_brute(tuple: &Tuple, s: u64, limits: &Limits) -> Result<GenFrobResult> {
    tuple.require_coprime()?;
    let window = tuple.min_part() as usize;
    let mut len = INITIAL_SEARCH_LEN.max(2 * window);
    loop {
        limits.check_cancelled()?;
        let capped = len.min(limits.table_capacity);
        let counts = saturating_counts(tuple.parts(), capped);
        if let Some((value, start)) = find_window(&counts, s, window) {
            let witness = (start..start + window).map(|n| (n as i64, counts[n])).collect();
            return Ok(GenFrobResult {
                value,
                method: Method::BruteForce,
                witness_window: Some(witness),
            });
        }
        if capped < len || capped == limits.table_capacity {
            return Err(Error::CapacityExceeded {
                requested: (capped as u64).saturating_mul(2),
                capacity: limits.table_capacity,
            });
        }
        len = len.saturating_mul(2);
    }
}

/// `g(a_1, ..., a_k; s) = l·g(a_1, a_2/l, ..., a_k/l; s) + a_1(l - 1)` with
/// `l = gcd(a_2, ..., a_k)`.
///
/// A reduced pair goes to the two-part closed form; anything longer is
/// searched directly.
pub fn beck_kifer_reduce(tuple: &Tuple, s: u64, limits: &Limits) -> Result<GenFrobResult> {
    tuple.require_coprime()?;
    let parts = tuple.parts();
    let a1 = parts[0];
    let ell = gcd_all(&parts[1..]);
    let mut reduced = Vec::with_capacity(parts.len());
    reduced.push(a1);
    reduced.extend(parts[1..].iter().map(|&p| p / ell));
    let inner = if reduced.len() == 2 {
        let s = i64::try_from(s).map_err(|_| Overflow::new("s"))?;
        gen_frobenius_two(reduced[0], reduced[1], s)?
    } else {
        gen_frobenius_brute(&Tuple::new(reduced)?, s, limits)?.value
    };
    let value = narrow(
        ell as i128 * inner as i128 + a1 as i128 * (ell as i128 - 1),
        "beck_kifer_reduce",
    )?;
    Ok(GenFrobResult::closed(value, Method::GcdReduction))
}

/// Strategy selection for [`gen_frobenius`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Closed form when one applies, otherwise brute force.
    #[default]
    Auto,
    Brute,
    /// Closed form only; fails with [`Error::NoApplicableCase`] otherwise.
    Closed,
}

fn closed_form(tuple: &Tuple, s: u64) -> Result<Option<GenFrobResult>> {
    let parts = tuple.parts();
    match parts.len() {
        2 => {
            let s = i64::try_from(s).map_err(|_| Overflow::new("s"))?;
            let value = gen_frobenius_two(parts[0], parts[1], s)?;
            Ok(Some(GenFrobResult::closed(value, Method::TwoVarClosedForm)))
        }
        3 => {
            for case in closedform::detect_cases(tuple)? {
                if let Some(index) = closedform::index_for_sigma(&case, s)? {
                    let value = closedform::theorem1_value(&case, index)?;
                    return Ok(Some(GenFrobResult::closed(value, Method::Theorem1)));
                }
            }
            Ok(None)
        }
        _ => Ok(None),
    }
}

/// `g(A; s)` by the requested strategy.
///
/// `Auto` tries the two-part closed form, then a three-part closed-form
/// case whose index equals `s`, then brute force.
pub fn gen_frobenius(tuple: &Tuple, s: u64, strategy: Strategy, limits: &Limits) -> Result<GenFrobResult> {
    tuple.require_coprime()?;
    match strategy {
        Strategy::Brute => gen_frobenius_brute(tuple, s, limits),
        Strategy::Closed => closed_form(tuple, s)?.ok_or_else(|| {
            Error::NoApplicableCase(format!("no closed form gives g{tuple} at s = {s}"))
        }),
        Strategy::Auto => match closed_form(tuple, s)? {
            Some(r) => Ok(r),
            None => gen_frobenius_brute(tuple, s, limits),
        },
    }
}
