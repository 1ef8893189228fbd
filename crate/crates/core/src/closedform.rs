//! Closed forms for three-part tuples under a divisibility condition.
//!
//! For a triple `(a_1, a_2, a_3)` with `gcd = 1`, pick a pivot `a_i` and let
//! `d_i` be the gcd of the other two parts `a_j, a_k`. If `a_i` is divisible
//! by `a_j / d_i` or by `a_k / d_i`, then for every `s >= 0`
//!
//! ```text
//! g(A; Σ_{j=0}^{s} ⌈j·a_j·a_k / (a_i·d_i²)⌉) = (s+1)·a_j·a_k/d_i + a_i·d_i - a_1 - a_2 - a_3.
//! ```
//!
//! Each pivot that satisfies the condition is a [`TheoremCase`]. The
//! left-hand index is a [`SIndex`]; the triangular, pairwise-coprime and
//! `(1, a, b)` families below are instances of the same identity.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::denumerant::Tuple;
use crate::error::{Error, Result};
use crate::exactint::{ceil_div, gcd, mul, narrow, Overflow};

/// One pivot of a triple for which the closed form holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TheoremCase {
    parts: [i64; 3],
    /// Index (0-based) of the part playing the pivot role.
    pub pivot: usize,
    /// gcd of the two non-pivot parts.
    pub d: i64,
    /// Index of the non-pivot part whose quotient by `d` divides the pivot.
    pub modulus_part: usize,
    /// Product of the non-pivot parts.
    pub sigma_coeff_num: i64,
    /// `pivot · d²`.
    pub sigma_coeff_den: i64,
}

impl TheoremCase {
    /// The case with the given pivot, if the divisibility condition holds.
    pub fn for_pivot(tuple: &Tuple, pivot: usize) -> Result<Option<TheoremCase>> {
        tuple.require_arity(3)?;
        if pivot > 2 {
            return Err(Error::InvalidInput(format!("pivot index {pivot} out of range")));
        }
        let p = tuple.parts();
        let parts = [p[0], p[1], p[2]];
        let [j, k] = others(pivot);
        let d = gcd(parts[j], parts[k]);
        let Some(modulus_part) = [j, k].into_iter().find(|&m| parts[pivot] % (parts[m] / d) == 0)
        else {
            return Ok(None);
        };
        Ok(Some(TheoremCase {
            parts,
            pivot,
            d,
            modulus_part,
            sigma_coeff_num: mul(parts[j], parts[k])?,
            sigma_coeff_den: mul(parts[pivot], mul(d, d)?)?,
        }))
    }

    pub fn parts(&self) -> [i64; 3] {
        self.parts
    }

    pub fn pivot_value(&self) -> i64 {
        self.parts[self.pivot]
    }

    /// 1-based pivot position, as used in reports.
    pub fn pivot_label(&self) -> usize {
        self.pivot + 1
    }
}

fn others(i: usize) -> [usize; 2] {
    match i {
        0 => [1, 2],
        1 => [0, 2],
        _ => [0, 1],
    }
}

/// Every pivot of the triple satisfying the divisibility condition, in pivot order.
///
/// A pivot appears once even when both non-pivot quotients divide it.
pub fn detect_cases(tuple: &Tuple) -> Result<Vec<TheoremCase>> {
    tuple.require_arity(3)?;
    tuple.require_coprime()?;
    let mut cases = Vec::new();
    for pivot in 0..3 {
        if let Some(case) = TheoremCase::for_pivot(tuple, pivot)? {
            cases.push(case);
        }
    }
    Ok(cases)
}

/// A closed-form index: `sigma = Σ_{j=0}^{s} ⌈j·num/den⌉`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SIndex {
    pub s: u64,
    pub sigma: u64,
}

/// `Σ_{i=0}^{n-1} ⌊(a·i + b) / m⌋` in `O(log)` steps.
fn floor_sum(mut n: u128, mut m: u128, mut a: u128, mut b: u128) -> Option<u128> {
    let mut acc: u128 = 0;
    while n > 0 {
        if a >= m {
            let tri = if n.is_multiple_of(2) {
                (n / 2).checked_mul(n - 1)?
            } else {
                n.checked_mul((n - 1) / 2)?
            };
            acc = acc.checked_add(tri.checked_mul(a / m)?)?;
            a %= m;
        }
        if b >= m {
            acc = acc.checked_add(n.checked_mul(b / m)?)?;
            b %= m;
        }
        let y_max = a.checked_mul(n)?.checked_add(b)?;
        if y_max < m {
            break;
        }
        n = y_max / m;
        b = y_max % m;
        std::mem::swap(&mut m, &mut a);
    }
    Some(acc)
}

/// `Σ_{j=0}^{s} ⌈j·num/den⌉` for `num >= 0`, `den >= 1`.
pub fn cumulative_ceil_sum(num: i64, den: i64, s: u64) -> Result<u64> {
    if num < 0 || den < 1 {
        return Err(Error::InvalidInput(format!("bad ratio {num}/{den}")));
    }
    // ⌈j·p/q⌉ = ⌊(j·p + q - 1)/q⌋
    let total = floor_sum(s as u128 + 1, den as u128, num as u128, den as u128 - 1)
        .ok_or(Overflow::new("sigma_index"))?;
    u64::try_from(total).map_err(|_| Overflow::new("sigma_index").into())
}

/// Index at which the case pins `g`.
pub fn sigma_index(case: &TheoremCase, s: u64) -> Result<SIndex> {
    let sigma = cumulative_ceil_sum(case.sigma_coeff_num, case.sigma_coeff_den, s)?;
    Ok(SIndex { s, sigma })
}

/// The `s` whose index equals `sigma`, if any. Indices strictly increase in `s`.
pub fn index_for_sigma(case: &TheoremCase, sigma: u64) -> Result<Option<u64>> {
    // sigma(s) >= s, so the answer lies in [0, sigma].
    let (mut lo, mut hi) = (0u64, sigma);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if sigma_index(case, mid)?.sigma < sigma {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    Ok((sigma_index(case, lo)?.sigma == sigma).then_some(lo))
}

/// `(s+1)·a_j·a_k/d + a_i·d - a_1 - a_2 - a_3`; the division by `d` is exact.
pub fn theorem1_value(case: &TheoremCase, s: u64) -> Result<i64> {
    let quotient = case.sigma_coeff_num / case.d;
    debug_assert_eq!(quotient * case.d, case.sigma_coeff_num);
    let total: i128 = case.parts.iter().map(|&p| p as i128).sum();
    let value = (s as i128 + 1)
        .checked_mul(quotient as i128)
        .ok_or(Overflow::new("theorem1_value"))?
        + case.pivot_value() as i128 * case.d as i128
        - total;
    Ok(narrow(value, "theorem1_value")?)
}

/// One row `(s, Σ, g(A; Σ))` of a closed-form table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TheoremRow {
    pub s: u64,
    pub sigma: u64,
    pub g: i64,
}

pub fn theorem1_row(case: &TheoremCase, s: u64) -> Result<TheoremRow> {
    Ok(TheoremRow { s, sigma: sigma_index(case, s)?.sigma, g: theorem1_value(case, s)? })
}

/// The union of the three index sequences truncated at `s_max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct USet {
    /// Every union element produced up to `s_max`, ascending.
    pub values: Vec<u64>,
    /// Elements up to this bound are final: each sequence already exceeds
    /// it beyond `s_max`.
    pub complete_through: u64,
}

impl USet {
    pub fn complete_prefix(&self) -> &[u64] {
        let end = self.values.partition_point(|&v| v <= self.complete_through);
        &self.values[..end]
    }

    /// Membership, or `None` when `x` lies past the complete prefix.
    pub fn contains(&self, x: u64) -> Option<bool> {
        (x <= self.complete_through).then(|| self.values.binary_search(&x).is_ok())
    }
}

/// Union over all three pivots of `{Σ_{j=0}^{s} ⌈j·a_j·a_k/(a_i·d_i²)⌉ : s <= s_max}`,
/// whether or not the pivot satisfies the divisibility condition.
pub fn u_set(tuple: &Tuple, s_max: u64) -> Result<USet> {
    tuple.require_arity(3)?;
    let p = tuple.parts();
    let mut values = BTreeSet::new();
    let mut complete_through = u64::MAX;
    for i in 0..3 {
        let [j, k] = others(i);
        let d = gcd(p[j], p[k]);
        let num = mul(p[j], p[k])? as i128;
        let den = mul(p[i], mul(d, d)?)? as i128;
        let mut sigma = 0u64;
        values.insert(0);
        for step in 1..=s_max {
            let term = ceil_div(step as i128 * num, den)?;
            sigma = sigma.checked_add(term as u64).ok_or(Overflow::new("u_set"))?;
            values.insert(sigma);
        }
        complete_through = complete_through.min(sigma);
    }
    Ok(USet { values: values.into_iter().collect(), complete_through })
}

/// `t_n = n(n+1)/2`.
pub fn triangular(n: i64) -> Result<i64> {
    if n < 1 {
        return Err(Error::InvalidInput(format!("triangular index {n} must be positive")));
    }
    Ok(narrow(n as i128 * (n as i128 + 1) / 2, "triangular")?)
}

/// Which pivot of `(t_n, t_{n+1}, t_{n+2})` to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriangularVariant {
    /// Pivot `t_n`, `d = gcd(t_{n+1}, t_{n+2})`.
    First,
    /// Pivot `t_{n+2}`, `d = gcd(t_n, t_{n+1})`.
    Second,
}

/// `(t_n, t_{n+1}, t_{n+2})`.
pub fn triangular_triple(n: i64) -> Result<Tuple> {
    Tuple::new(vec![triangular(n)?, triangular(n + 1)?, triangular(n + 2)?])
}

/// The first triangular variant written directly in `n` and `s`:
///
/// * even `n`: index `s(s+1) + Σ_{j=1}^{s} ⌈6j/n⌉`, value `(n+1)(n+2)(2s(n+3) + 3n)/4 - 1`;
/// * odd `n >= 3`: index `Σ_{j=1}^{s} ⌈j(n+3)/(2n)⌉`, value `(n+1)(n+2)((n+3)s + 3(n-1))/4 - 1`.
///
/// `None` for `n = 1`, which has no such form.
pub fn triangular_rewritten(n: i64, s: u64) -> Result<Option<(u64, i64)>> {
    if n < 1 {
        return Err(Error::InvalidInput(format!("triangular index {n} must be positive")));
    }
    let (n_w, s_w) = (n as i128, s as i128);
    let (mut sigma, numerator): (i128, i128) = if n % 2 == 0 {
        (s_w * (s_w + 1), (n_w + 1) * (n_w + 2) * (2 * s_w * (n_w + 3) + 3 * n_w))
    } else if n >= 3 {
        (0, (n_w + 1) * (n_w + 2) * ((n_w + 3) * s_w + 3 * (n_w - 1)))
    } else {
        return Ok(None);
    };
    for j in 1..=s_w {
        sigma += if n % 2 == 0 {
            ceil_div(6 * j, n_w)?
        } else {
            ceil_div(j * (n_w + 3), 2 * n_w)?
        } as i128;
    }
    if numerator % 4 != 0 {
        return Err(Error::Inconsistent(format!("rewritten value for n = {n} is not integral")));
    }
    let sigma = u64::try_from(sigma).map_err(|_| Overflow::new("triangular_rewritten"))?;
    Ok(Some((sigma, narrow(numerator / 4 - 1, "triangular_rewritten")?)))
}

/// `(Σ, g(t_n, t_{n+1}, t_{n+2}; Σ))` for the chosen variant.
///
/// The first variant is also evaluated through [`triangular_rewritten`]
/// and the two must agree.
pub fn triangular_frobenius(n: i64, s: u64, variant: TriangularVariant) -> Result<(u64, i64)> {
    let tuple = triangular_triple(n)?;
    let pivot = match variant {
        TriangularVariant::First => 0,
        TriangularVariant::Second => 2,
    };
    let case = TheoremCase::for_pivot(&tuple, pivot)?.ok_or_else(|| {
        Error::Inconsistent(format!("divisibility condition fails for {tuple} pivot {}", pivot + 1))
    })?;
    let row = theorem1_row(&case, s)?;
    if variant == TriangularVariant::First {
        if let Some(alt) = triangular_rewritten(n, s)? {
            if alt != (row.sigma, row.g) {
                return Err(Error::Inconsistent(format!(
                    "n = {n}, s = {s}: general form gives ({}, {}), rewritten form gives {alt:?}",
                    row.sigma, row.g
                )));
            }
        }
    }
    Ok((row.sigma, row.g))
}

/// `g(m2·m3, m1·m3, m1·m2; t_n) = m1·m2·m3·(n+2) - m1·m2 - m1·m3 - m2·m3`
/// for pairwise coprime `m1, m2, m3`.
pub fn pairwise_coprime_frobenius(m1: i64, m2: i64, m3: i64, n: u64) -> Result<i64> {
    let ms = [m1, m2, m3];
    if ms.iter().any(|&m| m < 1) {
        return Err(Error::InvalidInput(format!("{ms:?} must be positive")));
    }
    for (x, y) in [(m1, m2), (m1, m3), (m2, m3)] {
        let g = gcd(x, y);
        if g != 1 {
            return Err(Error::NotCoprime { parts: vec![x, y], gcd: g });
        }
    }
    let (m1, m2, m3, n) = (m1 as i128, m2 as i128, m3 as i128, n as i128);
    let value = narrow(
        m1 * m2 * m3 * (n + 2) - m1 * m2 - m1 * m3 - m2 * m3,
        "pairwise_coprime_frobenius",
    )?;

    let tuple = Tuple::new(vec![
        narrow(m2 * m3, "pairwise_coprime_frobenius")?,
        narrow(m1 * m3, "pairwise_coprime_frobenius")?,
        narrow(m1 * m2, "pairwise_coprime_frobenius")?,
    ])?;
    let case = TheoremCase::for_pivot(&tuple, 0)?
        .ok_or_else(|| Error::Inconsistent(format!("pivot 1 of {tuple} fails the condition")))?;
    let row = theorem1_row(&case, n as u64)?;
    let t_n = u64::try_from(n * (n + 1) / 2).map_err(|_| Overflow::new("t_n"))?;
    if row.sigma != t_n || row.g != value {
        return Err(Error::Inconsistent(format!(
            "{tuple}, n = {n}: expected index {t_n} and value {value}, case gives {row:?}"
        )));
    }
    Ok(value)
}

/// `(Σ, g(1, a, b; Σ))` with `Σ = Σ_{j=0}^{s} ⌈jb/a⌉` and `g = sb - 1`.
pub fn one_a_b_frobenius(a: i64, b: i64, s: u64) -> Result<(u64, i64)> {
    if a < 1 || b < 1 {
        return Err(Error::InvalidInput(format!("({a}, {b}) must be positive")));
    }
    let sigma = cumulative_ceil_sum(b, a, s)?;
    let value = narrow(s as i128 * b as i128 - 1, "one_a_b_frobenius")?;

    let tuple = Tuple::new(vec![1, a, b])?;
    let case = TheoremCase::for_pivot(&tuple, 1)?
        .ok_or_else(|| Error::Inconsistent(format!("pivot 2 of {tuple} fails the condition")))?;
    let row = theorem1_row(&case, s)?;
    if (row.sigma, row.g) != (sigma, value) {
        return Err(Error::Inconsistent(format!(
            "{tuple}, s = {s}: expected ({sigma}, {value}), case gives {row:?}"
        )));
    }
    Ok((sigma, value))
}
