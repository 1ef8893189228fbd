//! Command-line front end.
//!
//! [`run`] does all the work and writes to the given sinks, so the binary
//! is a thin wrapper and tests can drive commands in-process.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::closedform::{
    detect_cases, one_a_b_frobenius, pairwise_coprime_frobenius, theorem1_row, triangular,
    triangular_frobenius, triangular_triple, u_set, TheoremCase, TheoremRow, TriangularVariant,
};
use crate::denumerant::{denumerant_series, denumerant_with, Tuple};
use crate::error::{Error, Result};
use crate::frobenius::{beck_kifer_reduce, gen_frobenius, gen_frobenius_brute, Strategy};
use crate::limits::Limits;
use crate::verify::{
    cross_check_theorem1_sampled, decreasing_suite, lemma2_suite, lemma3_suite, Lemma2Bounds,
    PairBounds, ReportFormat, Sampling, VerificationReport,
};

/// Rows with an index above this are never checked by brute force.
pub const CROSS_CHECK_MAX_SIGMA: u64 = 100_000;

#[derive(Debug, Parser)]
#[command(name = "genfrob", version, about = "Denumerants and generalized Frobenius numbers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print d(n; A).
    Denumerant {
        #[arg(long)]
        tuple: Tuple,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Print d(0; A), ..., d(N; A), one per line.
    Series {
        #[arg(long)]
        tuple: Tuple,
        #[arg(long)]
        n_max: u64,
    },
    /// Print g(A; s).
    Frobenius {
        #[arg(long)]
        tuple: Tuple,
        #[arg(long)]
        s: u64,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Closed-form table for every applicable pivot of a triple.
    Theorem1 {
        #[arg(long)]
        tuple: Tuple,
        /// Restrict to one pivot (1-based position in the tuple).
        #[arg(long)]
        pivot: Option<usize>,
        /// Check rows with a small index against brute force.
        #[arg(long)]
        cross_check: bool,
        #[command(flatten)]
        table: TableArgs,
    },
    /// Union of the three index sequences of a triple.
    Uset {
        #[arg(long)]
        tuple: Tuple,
        #[arg(long)]
        s_max: u64,
    },
    /// Closed-form table for (t_n, t_{n+1}, t_{n+2}).
    Triangular {
        #[arg(long)]
        n: i64,
        #[arg(long, value_enum, default_value_t = VariantArg::First)]
        variant: VariantArg,
        #[command(flatten)]
        table: TableArgs,
    },
    /// g(m2·m3, m1·m3, m1·m2; t_n) for pairwise coprime m1, m2, m3; rows are n.
    Coprime {
        /// m1,m2,m3
        #[arg(long)]
        m: Tuple,
        #[command(flatten)]
        table: TableArgs,
    },
    /// g(1, a, b; Σ) table.
    #[command(name = "one-a-b")]
    OneAB {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
        #[command(flatten)]
        table: TableArgs,
    },
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Brute,
    Closed,
    Reduce,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    First,
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
    Markdown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Column {
    S,
    Sigma,
    G,
}

impl Column {
    fn name(self) -> &'static str {
        match self {
            Column::S => "s",
            Column::Sigma => "sigma",
            Column::G => "g",
        }
    }

    fn value(self, row: &TheoremRow) -> String {
        match self {
            Column::S => row.s.to_string(),
            Column::Sigma => row.sigma.to_string(),
            Column::G => row.g.to_string(),
        }
    }
}

/// Sorted, duplicate-free list of row indices, written `a..b,extra,...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowList(pub Vec<u64>);

impl FromStr for RowList {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |item: &str| Error::InvalidInput(format!("bad row item {item:?}"));
        let mut rows = Vec::new();
        for item in s.split(',').map(str::trim) {
            if let Some((lo, hi)) = item.split_once("..") {
                let lo: u64 = lo.trim().parse().map_err(|_| bad(item))?;
                let hi: u64 = hi.trim().parse().map_err(|_| bad(item))?;
                if hi < lo {
                    return Err(bad(item));
                }
                rows.extend(lo..=hi);
            } else {
                rows.push(item.parse().map_err(|_| bad(item))?);
            }
        }
        if rows.is_empty() {
            return Err(Error::InvalidInput("row list is empty".into()));
        }
        if rows.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput(format!("rows {s:?} are not strictly increasing")));
        }
        Ok(RowList(rows))
    }
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    /// Row indices, e.g. `0..5,100,10000`.
    #[arg(long = "s", default_value = "0..5")]
    pub rows: RowList,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "s,sigma,g")]
    pub columns: Vec<Column>,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    pub format: TableFormat,
}

/// Rows to print plus the columns and output format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableSpec {
    pub rows: Vec<u64>,
    pub columns: Vec<Column>,
    pub format: TableFormat,
}

impl From<&TableArgs> for TableSpec {
    fn from(a: &TableArgs) -> Self {
        TableSpec { rows: a.rows.0.clone(), columns: a.columns.clone(), format: a.format }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Lemma2,
    Lemma3,
    Decreasing,
    Theorem1,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormatArg {
    Text,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: SuiteArg,
    /// Largest part of a pair (lemma3, decreasing). Default 20.
    #[arg(long)]
    pub max_ab: Option<i64>,
    /// Largest part of a tuple (lemma2 default 20, theorem1 default 30).
    #[arg(long)]
    pub max_part: Option<i64>,
    /// Largest s (lemma2 default 3, others 4).
    #[arg(long)]
    pub max_s: Option<u64>,
    /// Largest c (lemma2 default 60, lemma3/decreasing default 80).
    #[arg(long)]
    pub max_c: Option<i64>,
    /// Draw this many random inputs instead of sweeping exhaustively.
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = ReportFormatArg::Text)]
    pub format: ReportFormatArg,
    /// Include elapsed time (makes output non-reproducible).
    #[arg(long)]
    pub timing: bool,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// One table of closed-form rows, labelled by the case that produced it.
#[derive(Debug, Clone)]
struct CaseTable {
    pivot: usize,
    pivot_value: i64,
    d: i64,
    rows: Vec<TheoremRow>,
}

#[derive(Serialize)]
struct JsonDoc<'a> {
    tuple: &'a [i64],
    cases: Vec<JsonCase>,
}

#[derive(Serialize)]
struct JsonCase {
    pivot: usize,
    d: i64,
    rows: Vec<serde_json::Map<String, serde_json::Value>>,
}

fn render_tables(tuple: &[i64], tables: &[CaseTable], spec: &TableSpec) -> String {
    let mut out = String::new();
    match spec.format {
        TableFormat::Csv => {
            for (i, t) in tables.iter().enumerate() {
                if tables.len() > 1 {
                    if i > 0 {
                        out.push('\n');
                    }
                    writeln!(out, "# pivot={} part={} d={}", t.pivot, t.pivot_value, t.d).unwrap();
                }
                let header: Vec<_> = spec.columns.iter().map(|c| c.name()).collect();
                writeln!(out, "{}", header.join(",")).unwrap();
                for row in &t.rows {
                    let cells: Vec<_> = spec.columns.iter().map(|c| c.value(row)).collect();
                    writeln!(out, "{}", cells.join(",")).unwrap();
                }
            }
        }
        TableFormat::Markdown => {
            for (i, t) in tables.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                writeln!(out, "pivot {} (part {}), d = {}\n", t.pivot, t.pivot_value, t.d).unwrap();
                let header: Vec<_> = spec.columns.iter().map(|c| c.name()).collect();
                writeln!(out, "| {} |", header.join(" | ")).unwrap();
                writeln!(out, "|{}", "---|".repeat(header.len())).unwrap();
                for row in &t.rows {
                    let cells: Vec<_> = spec.columns.iter().map(|c| c.value(row)).collect();
                    writeln!(out, "| {} |", cells.join(" | ")).unwrap();
                }
            }
        }
        TableFormat::Json => {
            let doc = JsonDoc {
                tuple,
                cases: tables
                    .iter()
                    .map(|t| JsonCase {
                        pivot: t.pivot,
                        d: t.d,
                        rows: t
                            .rows
                            .iter()
                            .map(|row| {
                                spec.columns
                                    .iter()
                                    .map(|&c| {
                                        let v = match c {
                                            Column::S => serde_json::json!(row.s),
                                            Column::Sigma => serde_json::json!(row.sigma),
                                            Column::G => serde_json::json!(row.g),
                                        };
                                        (c.name().to_string(), v)
                                    })
                                    .collect()
                            })
                            .collect(),
                    })
                    .collect(),
            };
            out.push_str(&serde_json::to_string(&doc).expect("serializable"));
            out.push('\n');
        }
    }
    out
}

fn case_table(case: &TheoremCase, rows: &[u64]) -> Result<CaseTable> {
    Ok(CaseTable {
        pivot: case.pivot_label(),
        pivot_value: case.pivot_value(),
        d: case.d,
        rows: rows.iter().map(|&s| theorem1_row(case, s)).collect::<Result<_>>()?,
    })
}

/// Brute-force check of each row that is cheap enough; returns how many were checked.
fn cross_check(tuple: &Tuple, tables: &[CaseTable], limits: &Limits) -> Result<usize> {
    let mut checked = 0;
    for t in tables {
        for row in &t.rows {
            let needed = row.g.saturating_add(2 * tuple.min_part()).max(0) as u64;
            if row.sigma > CROSS_CHECK_MAX_SIGMA || needed > limits.table_capacity as u64 {
                continue;
            }
            let oracle = gen_frobenius_brute(tuple, row.sigma, limits)?.value;
            if oracle != row.g {
                return Err(Error::Inconsistent(format!(
                    "{tuple} pivot {} s = {}: closed form {} but brute force {}",
                    t.pivot, row.s, row.g, oracle
                )));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

fn run_verify(args: &VerifyArgs, limits: &Limits) -> Result<VerificationReport> {
    let sampling = match args.samples {
        Some(samples) => Sampling::Random { seed: args.seed, samples },
        None => Sampling::Exhaustive,
    };
    let pair = PairBounds {
        max_ab: args.max_ab.unwrap_or(20),
        max_s: args.max_s.unwrap_or(4),
        max_c: args.max_c.unwrap_or(80),
    };
    let lemma2 = Lemma2Bounds {
        max_part: args.max_part.unwrap_or(20),
        max_s: args.max_s.unwrap_or(3),
        max_c: args.max_c.unwrap_or(60),
    };
    let theorem1 = || {
        cross_check_theorem1_sampled(args.max_part.unwrap_or(30), args.max_s.unwrap_or(4), limits, sampling)
    };
    match args.suite {
        SuiteArg::Lemma2 => lemma2_suite(lemma2, limits, sampling),
        SuiteArg::Lemma3 => lemma3_suite(pair, sampling),
        SuiteArg::Decreasing => decreasing_suite(pair, sampling),
        SuiteArg::Theorem1 => theorem1(),
        SuiteArg::All => {
            let mut all = VerificationReport::new("all");
            for r in [
                lemma2_suite(lemma2, limits, sampling)?,
                lemma3_suite(pair, sampling)?,
                decreasing_suite(pair, sampling)?,
                theorem1()?,
            ] {
                all.merge(r);
            }
            Ok(all)
        }
    }
}

/// Executes one command; returns the process exit code.
pub fn run(cli: &Cli, limits: &Limits, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Denumerant { tuple, n } => {
            writeln!(out, "{}", denumerant_with(*n, tuple, limits)?)?;
        }
        Command::Series { tuple, n_max } => {
            let table = denumerant_series(tuple, *n_max, limits)?;
            for (n, c) in table.counts().iter().enumerate() {
                writeln!(out, "{n},{c}")?;
            }
        }
        Command::Frobenius { tuple, s, method } => {
            let result = match method {
                MethodArg::Auto => gen_frobenius(tuple, *s, Strategy::Auto, limits)?,
                MethodArg::Brute => gen_frobenius(tuple, *s, Strategy::Brute, limits)?,
                MethodArg::Closed => gen_frobenius(tuple, *s, Strategy::Closed, limits)?,
                MethodArg::Reduce => beck_kifer_reduce(tuple, *s, limits)?,
            };
            writeln!(out, "{}", result.value)?;
            writeln!(out, "method: {}", result.method)?;
            if let Some(window) = &result.witness_window {
                let cells: Vec<_> = window.iter().map(|(n, d)| format!("{n}:{d}")).collect();
                writeln!(out, "window: {}", cells.join(" "))?;
            }
        }
        Command::Theorem1 { tuple, pivot, cross_check: check, table } => {
            let spec = TableSpec::from(table);
            let mut cases = detect_cases(tuple)?;
            if let Some(p) = pivot {
                cases.retain(|c| c.pivot_label() == *p);
            }
            if cases.is_empty() {
                return Err(Error::NoApplicableCase(format!(
                    "no pivot of {tuple} satisfies the divisibility condition"
                )));
            }
            let tables = cases.iter().map(|c| case_table(c, &spec.rows)).collect::<Result<Vec<_>>>()?;
            if *check {
                let n = cross_check(tuple, &tables, limits)?;
                writeln!(err, "cross-checked {n} rows against brute force")?;
            }
            out.write_all(render_tables(tuple.parts(), &tables, &spec).as_bytes())?;
        }
        Command::Uset { tuple, s_max } => {
            let u = u_set(tuple, *s_max)?;
            let prefix: Vec<_> = u.complete_prefix().iter().map(u64::to_string).collect();
            writeln!(out, "{}", prefix.join(","))?;
            writeln!(out, "complete_through={} s_max={}", u.complete_through, s_max)?;
        }
        Command::Triangular { n, variant, table } => {
            let spec = TableSpec::from(table);
            let variant = match variant {
                VariantArg::First => TriangularVariant::First,
                VariantArg::Second => TriangularVariant::Second,
            };
            let tuple = triangular_triple(*n)?;
            let pivot = if variant == TriangularVariant::First { 0 } else { 2 };
            let case = TheoremCase::for_pivot(&tuple, pivot)?
                .ok_or_else(|| Error::Inconsistent(format!("{tuple} pivot {} fails", pivot + 1)))?;
            let rows = spec
                .rows
                .iter()
                .map(|&s| {
                    let (sigma, g) = triangular_frobenius(*n, s, variant)?;
                    Ok(TheoremRow { s, sigma, g })
                })
                .collect::<Result<Vec<_>>>()?;
            let t = CaseTable { pivot: case.pivot_label(), pivot_value: case.pivot_value(), d: case.d, rows };
            out.write_all(render_tables(tuple.parts(), &[t], &spec).as_bytes())?;
        }
        Command::Coprime { m, table } => {
            let spec = TableSpec::from(table);
            m.require_arity(3)?;
            let [m1, m2, m3] = [m.parts()[0], m.parts()[1], m.parts()[2]];
            let rows = spec
                .rows
                .iter()
                .map(|&n| {
                    let g = pairwise_coprime_frobenius(m1, m2, m3, n)?;
                    let sigma = if n == 0 { 0 } else { triangular(n as i64)? as u64 };
                    Ok(TheoremRow { s: n, sigma, g })
                })
                .collect::<Result<Vec<_>>>()?;
            let tuple = [m2 * m3, m1 * m3, m1 * m2];
            let t = CaseTable { pivot: 1, pivot_value: tuple[0], d: m1, rows };
            out.write_all(render_tables(&tuple, &[t], &spec).as_bytes())?;
        }
        Command::OneAB { a, b, table } => {
            let spec = TableSpec::from(table);
            let rows = spec
                .rows
                .iter()
                .map(|&s| {
                    let (sigma, g) = one_a_b_frobenius(*a, *b, s)?;
                    Ok(TheoremRow { s, sigma, g })
                })
                .collect::<Result<Vec<_>>>()?;
            let t = CaseTable { pivot: 2, pivot_value: *a, d: 1, rows };
            out.write_all(render_tables(&[1, *a, *b], &[t], &spec).as_bytes())?;
        }
        Command::Verify(args) => {
            let report = run_verify(args, limits)?;
            let format = match args.format {
                ReportFormatArg::Text => ReportFormat::Text,
                ReportFormatArg::Json => ReportFormat::Json,
            };
            let text = report.render(format, args.timing);
            match &args.output {
                Some(path) => std::fs::write(path, text)?,
                None => out.write_all(text.as_bytes())?,
            }
            return Ok(if report.passed() { 0 } else { 1 });
        }
    }
    Ok(0)
}

/// Parses `args`, runs, and reports errors on `err`. Returns the exit code.
pub fn main_with_args<I, T>(args: I, limits: &Limits, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
        }
    };
    match run(&cli, limits, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("genfrob").chain(args.iter().copied());
        let code = main_with_args(argv, &Limits::default(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn row_list_parsing() {
        assert_eq!("0..5,100,10000".parse::<RowList>().unwrap().0, vec![0, 1, 2, 3, 4, 5, 100, 10000]);
        assert_eq!("7".parse::<RowList>().unwrap().0, vec![7]);
        assert!("3,2".parse::<RowList>().is_err());
        assert!("0..5,5".parse::<RowList>().is_err());
        assert!("5..1".parse::<RowList>().is_err());
        assert!("a".parse::<RowList>().is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["denumerant", "--tuple", "3,5", "--n", "7"]).0, 0);
        assert_eq!(run_args(&["denumerant", "--tuple", "3,0", "--n", "7"]).0, 2);
        assert_eq!(run_args(&["frobenius", "--tuple", "6,10", "--s", "0"]).0, 2);
        assert_eq!(run_args(&["nonsense"]).0, 2);
        let (code, _, err) = run_args(&["series", "--tuple", "3,5", "--n-max", "20000000"]);
        assert_eq!(code, 3, "{err}");
    }

    #[test]
    fn negative_targets_parse() {
        assert_eq!(run_args(&["denumerant", "--tuple", "3,5", "--n", "-4"]).1, "0\n");
    }

    #[test]
    fn columns_selection() {
        let (_, out, _) = run_args(&["one-a-b", "--a", "4", "--b", "9", "--s", "0..2", "--columns", "s,g"]);
        assert_eq!(out, "s,g\n0,-1\n1,8\n2,17\n");
    }
}
