//! Property suites that check the lemmas and closed forms against direct
//! counting.
//!
//! Each single check returns a [`VerificationReport`]; the `*_suite`
//! functions sweep a bounded range (or a seeded random sample of it) and
//! merge the per-input reports. Inputs that violate a hypothesis are
//! counted as invalid, never as failures.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::closedform::{detect_cases, theorem1_row};
use crate::denumerant::{denumerant_series, denumerant_two, DenumerantTable, Tuple};
use crate::error::{Error, Result};
use crate::exactint::gcd;
use crate::frobenius::{gen_frobenius_brute, gen_frobenius_two};
use crate::limits::Limits;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub inputs: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub cases_run: u64,
    pub invalid_inputs: u64,
    pub failures: Vec<Failure>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport {
            suite: suite.into(),
            cases_run: 0,
            invalid_inputs: 0,
            failures: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, inputs: String, expected: impl ToString, actual: impl ToString) {
        self.failures.push(Failure {
            inputs,
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    /// Folds `other` into `self`; failures stay sorted by inputs.
    pub fn merge(&mut self, other: VerificationReport) {
        self.cases_run += other.cases_run;
        self.invalid_inputs += other.invalid_inputs;
        self.failures.extend(other.failures);
        self.failures.sort();
        self.elapsed += other.elapsed;
    }

    /// Line-delimited rendering. The summary line comes first, then one
    /// line per failure. Elapsed time is only included on request, so that
    /// the default output is reproducible.
    pub fn render(&self, format: ReportFormat, with_timing: bool) -> String {
        let status = if self.passed() { "pass" } else { "fail" };
        let mut out = String::new();
        match format {
            ReportFormat::Text => {
                write!(
                    out,
                    "suite={} status={} cases_run={} invalid_inputs={} failures={}",
                    self.suite,
                    status,
                    self.cases_run,
                    self.invalid_inputs,
                    self.failures.len()
                )
                .unwrap();
                if with_timing {
                    write!(out, " elapsed_ms={}", self.elapsed.as_millis()).unwrap();
                }
                out.push('\n');
                for f in &self.failures {
                    writeln!(
                        out,
                        "failure suite={} inputs={} expected={} actual={}",
                        self.suite, f.inputs, f.expected, f.actual
                    )
                    .unwrap();
                }
            }
            ReportFormat::Json => {
                let mut summary = serde_json::json!({
                    "suite": self.suite,
                    "status": status,
                    "cases_run": self.cases_run,
                    "invalid_inputs": self.invalid_inputs,
                    "failures": self.failures.len(),
                });
                if with_timing {
                    summary["elapsed_ms"] = serde_json::json!(self.elapsed.as_millis() as u64);
                }
                writeln!(out, "{summary}").unwrap();
                for f in &self.failures {
                    let line = serde_json::json!({ "suite": self.suite, "failure": f });
                    writeln!(out, "{line}").unwrap();
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Text,
    Json,
}

/// How a suite chooses its inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Sampling {
    #[default]
    Exhaustive,
    Random { seed: u64, samples: usize },
}

fn timed(suite: &str, run: impl FnOnce(&mut VerificationReport) -> Result<()>) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new(suite);
    run(&mut report)?;
    report.failures.sort();
    report.elapsed = start.elapsed();
    Ok(report)
}

fn divides_some_part(c: i64, parts: &[i64]) -> bool {
    parts.iter().any(|&a| c % a == 0)
}

fn lemma2_scan(
    tuple: &Tuple,
    s: u64,
    c: i64,
    g: i64,
    table: &DenumerantTable,
    report: &mut VerificationReport,
) {
    let mut m = g;
    let mut j = 0;
    while m >= 0 {
        let count = table.get(m).expect("table covers g");
        report.cases_run += 1;
        if count > s {
            report.fail(format!("A={tuple} s={s} c={c} j={j}"), format!("d<={s}"), format!("d={count}"));
        }
        m -= c;
        j += 1;
    }
}

fn lemma2_precondition(tuple: &Tuple, c: i64) -> Result<()> {
    tuple.require_coprime()?;
    if c < 1 || !divides_some_part(c, tuple.parts()) {
        return Err(Error::InvalidInput(format!("c = {c} is not a positive multiple of a part of {tuple}")));
    }
    Ok(())
}

/// `d(g(A; s) - j·c; A) <= s` for every `j` with `0 <= j·c <= g(A; s)`,
/// where `c` is a multiple of some part.
pub fn check_lemma2(tuple: &Tuple, s: u64, c: i64, limits: &Limits) -> Result<VerificationReport> {
    lemma2_precondition(tuple, c)?;
    timed("lemma2", |report| {
        let g = gen_frobenius_brute(tuple, s, limits)?.value;
        let table = denumerant_series(tuple, g.max(0) as u64, limits)?;
        lemma2_scan(tuple, s, c, g, &table, report);
        Ok(())
    })
}

fn pair_precondition(a: i64, b: i64, c: i64) -> Result<()> {
    if a < 1 || b < 1 {
        return Err(Error::InvalidInput(format!("({a}, {b}) must be positive")));
    }
    let g = gcd(a, b);
    if g != 1 {
        return Err(Error::NotCoprime { parts: vec![a, b], gcd: g });
    }
    if c < 1 || (c % a != 0 && c % b != 0) {
        return Err(Error::InvalidInput(format!("c = {c} is not a positive multiple of {a} or {b}")));
    }
    Ok(())
}

/// For two coprime parts: `d(g_s - j·c) = i` iff `g_{i-1} < g_s - j·c <= g_i`,
/// for every admissible `j` and every `i` in `0..=s`, with `g_{-1} = -2`.
pub fn check_lemma3(a: i64, b: i64, s: u64, c: i64) -> Result<VerificationReport> {
    pair_precondition(a, b, c)?;
    timed("lemma3", |report| {
        let s_i = i64::try_from(s).map_err(|_| Error::InvalidInput(format!("s = {s} too large")))?;
        let g: Vec<i64> = (-1..=s_i)
            .map(|i| gen_frobenius_two(a, b, i))
            .collect::<Result<_>>()?;
        // g[i + 1] = g(a, b; i)
        let g_s = g[s as usize + 1];
        let mut m = g_s;
        let mut j = 0;
        while m >= 0 {
            let count = denumerant_two(m, a, b);
            for i in 0..=s {
                report.cases_run += 1;
                let count_is_i = count == i;
                let in_band = g[i as usize] < m && m <= g[i as usize + 1];
                if count_is_i != in_band {
                    report.fail(
                        format!("a={a} b={b} s={s} c={c} j={j} i={i}"),
                        format!("d==i <=> g_(i-1)<m<=g_i (in_band={in_band})"),
                        format!("d={count}"),
                    );
                }
            }
            m -= c;
            j += 1;
        }
        Ok(())
    })
}

/// `(d(g(a, b; s) - j·c; a, b))_j` is non-increasing over `0 <= j·c <= g(a, b; s)`.
pub fn check_decreasing(a: i64, b: i64, s: u64, c: i64) -> Result<VerificationReport> {
    pair_precondition(a, b, c)?;
    timed("decreasing", |report| {
        let s_i = i64::try_from(s).map_err(|_| Error::InvalidInput(format!("s = {s} too large")))?;
        let g_s = gen_frobenius_two(a, b, s_i)?;
        let mut prev: Option<u64> = None;
        let mut m = g_s;
        let mut j = 0;
        while m >= 0 {
            let count = denumerant_two(m, a, b);
            report.cases_run += 1;
            if let Some(p) = prev {
                if count > p {
                    report.fail(
                        format!("a={a} b={b} s={s} c={c} j={j}"),
                        format!("d<={p}"),
                        format!("d={count}"),
                    );
                }
            }
            prev = Some(count);
            m -= c;
            j += 1;
        }
        Ok(())
    })
}

/// Reports for every input, in input order, merged into one.
fn run_all<I, F>(suite: &str, inputs: Vec<I>, check: F) -> Result<VerificationReport>
where
    I: Send + Sync,
    F: Fn(&I) -> Result<VerificationReport> + Send + Sync,
{
    let start = Instant::now();
    let results: Vec<Result<VerificationReport>> = inputs.par_iter().map(&check).collect();
    let mut total = VerificationReport::new(suite);
    for r in results {
        match r {
            Ok(report) => total.merge(report),
            Err(Error::InvalidInput(_)) | Err(Error::NotCoprime { .. }) => total.invalid_inputs += 1,
            Err(e) => return Err(e),
        }
    }
    total.elapsed = start.elapsed();
    Ok(total)
}

/// Bounds for the two-part suites (`lemma3`, `decreasing`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairBounds {
    pub max_ab: i64,
    pub max_s: u64,
    pub max_c: i64,
}

impl Default for PairBounds {
    fn default() -> Self {
        PairBounds { max_ab: 20, max_s: 4, max_c: 80 }
    }
}

fn pair_inputs(bounds: PairBounds, sampling: Sampling) -> Vec<(i64, i64, u64, i64)> {
    match sampling {
        Sampling::Exhaustive => {
            let mut v = Vec::new();
            for a in 1..=bounds.max_ab {
                for b in 1..=bounds.max_ab {
                    if gcd(a, b) != 1 {
                        continue;
                    }
                    for s in 0..=bounds.max_s {
                        for c in 1..=bounds.max_c {
                            if c % a == 0 || c % b == 0 {
                                v.push((a, b, s, c));
                            }
                        }
                    }
                }
            }
            v
        }
        Sampling::Random { seed, samples } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..samples)
                .map(|_| {
                    (
                        rng.gen_range(1..=bounds.max_ab),
                        rng.gen_range(1..=bounds.max_ab),
                        rng.gen_range(0..=bounds.max_s),
                        rng.gen_range(1..=bounds.max_c),
                    )
                })
                .collect()
        }
    }
}

pub fn lemma3_suite(bounds: PairBounds, sampling: Sampling) -> Result<VerificationReport> {
    run_all("lemma3", pair_inputs(bounds, sampling), |&(a, b, s, c)| check_lemma3(a, b, s, c))
}

pub fn decreasing_suite(bounds: PairBounds, sampling: Sampling) -> Result<VerificationReport> {
    run_all("decreasing", pair_inputs(bounds, sampling), |&(a, b, s, c)| {
        check_decreasing(a, b, s, c)
    })
}

/// Bounds for the `lemma2` suite: all pairs and triples of parts up to `max_part`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lemma2Bounds {
    pub max_part: i64,
    pub max_s: u64,
    pub max_c: i64,
}

impl Default for Lemma2Bounds {
    fn default() -> Self {
        Lemma2Bounds { max_part: 20, max_s: 3, max_c: 60 }
    }
}

/// Non-decreasing pairs and triples; `g` and `d` do not depend on order.
fn small_tuples(max_part: i64) -> Vec<Vec<i64>> {
    let mut v = Vec::new();
    for a in 1..=max_part {
        for b in a..=max_part {
            v.push(vec![a, b]);
            for c in b..=max_part {
                v.push(vec![a, b, c]);
            }
        }
    }
    v
}

pub fn lemma2_suite(bounds: Lemma2Bounds, limits: &Limits, sampling: Sampling) -> Result<VerificationReport> {
    let inputs: Vec<(Vec<i64>, u64)> = match sampling {
        Sampling::Exhaustive => small_tuples(bounds.max_part)
            .into_iter()
            .flat_map(|p| (0..=bounds.max_s).map(move |s| (p.clone(), s)))
            .collect(),
        Sampling::Random { seed, samples } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..samples)
                .map(|_| {
                    let k = rng.gen_range(2..=3);
                    let parts = (0..k).map(|_| rng.gen_range(1..=bounds.max_part)).collect();
                    (parts, rng.gen_range(0..=bounds.max_s))
                })
                .collect()
        }
    };
    // One oracle table per (A, s), shared by every c.
    run_all("lemma2", inputs, |(parts, s)| {
        let tuple = Tuple::new(parts.clone())?;
        tuple.require_coprime()?;
        timed("lemma2", |report| {
            let g = gen_frobenius_brute(&tuple, *s, limits)?.value;
            let table = denumerant_series(&tuple, g.max(0) as u64, limits)?;
            for c in 1..=bounds.max_c {
                if lemma2_precondition(&tuple, c).is_ok() {
                    lemma2_scan(&tuple, *s, c, g, &table, report);
                } else {
                    report.invalid_inputs += 1;
                }
            }
            Ok(())
        })
    })
}

/// Closed form against brute force for every detected case of one triple.
pub fn check_theorem1(tuple: &Tuple, s_bound: u64, limits: &Limits) -> Result<VerificationReport> {
    let cases = detect_cases(tuple)?;
    timed("theorem1", |report| {
        for case in &cases {
            for s in 0..=s_bound {
                let row = theorem1_row(case, s)?;
                let oracle = gen_frobenius_brute(tuple, row.sigma, limits)?.value;
                report.cases_run += 1;
                if oracle != row.g {
                    report.fail(
                        format!("A={tuple} pivot={} s={s} sigma={}", case.pivot_label(), row.sigma),
                        oracle,
                        row.g,
                    );
                }
            }
        }
        Ok(())
    })
}

/// Every ordered triple with parts in `1..=part_bound` and gcd 1, every
/// detected case, every `s <= s_bound`.
pub fn cross_check_theorem1(part_bound: i64, s_bound: u64, limits: &Limits) -> Result<VerificationReport> {
    cross_check_theorem1_sampled(part_bound, s_bound, limits, Sampling::Exhaustive)
}

pub fn cross_check_theorem1_sampled(
    part_bound: i64,
    s_bound: u64,
    limits: &Limits,
    sampling: Sampling,
) -> Result<VerificationReport> {
    let triples: Vec<[i64; 3]> = match sampling {
        Sampling::Exhaustive => {
            let r = 1..=part_bound;
            r.clone()
                .flat_map(|a| r.clone().flat_map(move |b| (1..=part_bound).map(move |c| [a, b, c])))
                .filter(|t| gcd(gcd(t[0], t[1]), t[2]) == 1)
                .collect()
        }
        Sampling::Random { seed, samples } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..samples)
                .map(|_| [0; 3].map(|_| rng.gen_range(1..=part_bound)))
                .collect()
        }
    };
    run_all("theorem1", triples, |t| check_theorem1(&Tuple::new(t.to_vec())?, s_bound, limits))
}
