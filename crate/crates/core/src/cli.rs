//! Command-line front end, kept in the library so it can be driven in-process.
//!
//! Exit codes: 0 when every check holds, 1 when a checked claim fails (the
//! report carries a witness), 2 for usage, parse and scale errors.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io::Read;
use std::ops::RangeInclusive;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use crate::algebra::{
    ekr_inclusion_matrix, ekr_matrix_report, exact_rank, family_polynomials, frw_report,
    polynomial_coefficient_matrix,
};
use crate::ekr_pipeline::{decompose, run_chain};
use crate::error::Error;
use crate::oracle::{max_intersecting_bruteforce, max_t_intersecting_bruteforce, random_maximal_intersecting, OracleConfig};
use crate::set_core::{binomial, format_family, parse_family, Subset, UniformFamily};
use crate::shadow::{katona_check, shadow};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "ekr", version, about = "Exact checks for intersecting set families")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the s-shadow of a family file.
    Shadow {
        /// Family file, or `-` for standard input.
        file: String,
        #[arg(long = "s")]
        s: usize,
    },
    /// Run one verification on a family file.
    Verify {
        kind: VerifyKind,
        /// Family file, or `-` for standard input.
        file: String,
        /// Asserted intersection lower bound (katona); defaults to the actual minimum.
        #[arg(long = "b")]
        b: Option<usize>,
        /// Incidence order (frw); defaults to the number of intersection sizes.
        #[arg(long = "s")]
        s: Option<usize>,
        #[arg(long, default_value_t = 1)]
        pivot: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Print the inclusion matrix instead of the report (rank only).
        #[arg(long)]
        dump: bool,
    },
    /// Check seeded random maximal intersecting families over a parameter grid.
    Sweep {
        /// Ground sizes, e.g. `4..8` (inclusive) or `6`.
        #[arg(long = "n", value_parser = parse_range)]
        n: RangeInclusive<usize>,
        /// Uniformities, e.g. `2..3` (inclusive).
        #[arg(long = "k", value_parser = parse_range)]
        k: RangeInclusive<usize>,
        /// `all` or a comma-separated list.
        #[arg(long, default_value = "1")]
        pivots: Pivots,
        #[arg(long, default_value_t = 10)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_delimiter = ',', default_value = "chain")]
        checks: Vec<Check>,
        #[arg(long = "max-binom", default_value_t = OracleConfig::default().max_binom)]
        max_binom: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Exact maximum t-intersecting family size by clique search.
    Oracle {
        n: usize,
        k: usize,
        #[arg(default_value_t = 1)]
        t: usize,
        #[arg(long = "max-binom", default_value_t = OracleConfig::default().max_binom)]
        max_binom: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum VerifyKind {
    Katona,
    Ekr,
    Frw,
    Rank,
    Poly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum)]
pub enum Check {
    Katona,
    Chain,
    Matrix,
    Polynomial,
    Oracle,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pivots {
    All,
    List(Vec<usize>),
}

impl FromStr for Pivots {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "all" {
            return Ok(Pivots::All);
        }
        s.split(',')
            .map(|p| match p.trim().parse::<usize>() {
                Ok(0) | Err(_) => Err(format!("bad pivot {p:?}")),
                Ok(v) => Ok(v),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Pivots::List)
    }
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad range {s:?}"));
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (num(lo)?, num(hi.trim_start_matches('='))?),
        None => (num(s)?, num(s)?),
    };
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok(lo..=hi)
}

/// What a command printed and how it exits.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match cli.command {
        Command::Shadow { file, s } => cmd_shadow(&file, s),
        Command::Verify {
            kind,
            file,
            b,
            s,
            pivot,
            format,
            dump,
        } => cmd_verify(kind, &file, b, s, pivot, format, dump),
        Command::Sweep {
            n,
            k,
            pivots,
            samples,
            seed,
            checks,
            max_binom,
            format,
        } => {
            let spec = SweepSpec {
                n_range: n,
                k_range: k,
                pivots,
                samples_per_cell: samples,
                seed,
                checks: checks.into_iter().collect(),
            };
            let config = OracleConfig {
                max_binom,
                ..OracleConfig::default()
            };
            cmd_sweep(&spec, &config, format)
        }
        Command::Oracle {
            n,
            k,
            t,
            max_binom,
            format,
        } => {
            let config = OracleConfig {
                max_binom,
                ..OracleConfig::default()
            };
            cmd_oracle(n, k, t, &config, format)
        }
    }
}

fn read_family(file: &str) -> Result<UniformFamily, Outcome> {
    let text = if file == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Outcome::usage(format!("reading standard input: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(file).map_err(|e| Outcome::usage(format!("{file}: {e}")))?
    };
    parse_family(&text).map_err(|e| Outcome::usage(format!("{file}: {e}")))
}

fn cmd_shadow(file: &str, s: usize) -> Outcome {
    let family = match read_family(file) {
        Ok(f) => f,
        Err(out) => return out,
    };
    match shadow(&family, s) {
        Ok(sh) => Outcome::ok(format_family(&sh)),
        Err(e) => Outcome::usage(e),
    }
}

/// Flattens a JSON object into dotted keys; arrays become space-separated
/// values and null becomes the empty string.
fn flatten(prefix: &str, value: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(&key(k), v, out);
            }
        }
        Value::Array(items) => {
            let parts: Vec<String> = items
                .iter()
                .map(|v| match v {
                    Value::Array(inner) => inner.iter().map(scalar).collect::<Vec<_>>().join(" "),
                    other => scalar(other),
                })
                .collect();
            let sep = if items.iter().any(Value::is_array) { "|" } else { " " };
            out.push((prefix.to_string(), parts.join(sep)));
        }
        other => out.push((prefix.to_string(), scalar(other))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn csv_text(headers: &[String], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(headers).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

fn render<T: Serialize>(report: &T, format: Format) -> String {
    let value = serde_json::to_value(report).expect("reports serialize");
    match format {
        Format::Json => value.to_string() + "\n",
        Format::Csv => {
            let mut fields = Vec::new();
            flatten("", &value, &mut fields);
            let (h, v): (Vec<String>, Vec<String>) = fields.into_iter().unzip();
            csv_text(&h, &[v])
        }
    }
}

#[derive(Serialize)]
struct Violation {
    error: &'static str,
    message: String,
    witness: Vec<Subset>,
}

fn violation(e: &Error, format: Format) -> Option<Outcome> {
    let (error, witness) = match e {
        Error::NotIntersecting { witness } => ("not_intersecting", witness),
        Error::NotBIntersecting { witness, .. } => ("not_b_intersecting", witness),
        _ => return None,
    };
    let report = Violation {
        error,
        message: e.to_string(),
        witness: vec![witness.0, witness.1],
    };
    Some(Outcome {
        code: EXIT_VIOLATED,
        stdout: render(&report, format),
        stderr: String::new(),
    })
}

fn failure(e: Error, format: Format) -> Outcome {
    violation(&e, format).unwrap_or_else(|| Outcome::usage(e))
}

fn verdict<T: Serialize>(report: &T, holds: bool, format: Format) -> Outcome {
    Outcome {
        code: if holds { EXIT_OK } else { EXIT_VIOLATED },
        stdout: render(report, format),
        stderr: String::new(),
    }
}

#[derive(Serialize)]
struct PolynomialReport {
    cols: usize,
    family_size: usize,
    independent: bool,
    pivot: usize,
    polynomials: Vec<String>,
    rank: usize,
}

fn cmd_verify(
    kind: VerifyKind,
    file: &str,
    b: Option<usize>,
    s: Option<usize>,
    pivot: usize,
    format: Format,
    dump: bool,
) -> Outcome {
    let family = match read_family(file) {
        Ok(f) => f,
        Err(out) => return out,
    };
    if dump && kind != VerifyKind::Rank {
        return Outcome::usage("--dump applies to `verify rank` only");
    }
    let result = match kind {
        VerifyKind::Katona => {
            let b = b.unwrap_or_else(|| family.min_pairwise_intersection().unwrap_or(family.k()));
            katona_check(&family, b).map(|r| verdict(&r, r.holds, format))
        }
        VerifyKind::Ekr => decompose(&family, pivot)
            .and_then(|d| run_chain(&d))
            .map(|r| verdict(&r, r.all_steps_hold(), format)),
        VerifyKind::Frw => {
            let s = s.unwrap_or_else(|| family.intersection_sizes().len());
            frw_report(&family, s).map(|r| verdict(&r, r.independent, format))
        }
        VerifyKind::Rank => decompose(&family, pivot).and_then(|d| {
            if dump {
                ekr_inclusion_matrix(&d).map(|m| Outcome::ok(m.dump()))
            } else {
                ekr_matrix_report(&d).map(|r| verdict(&r, r.independent, format))
            }
        }),
        VerifyKind::Poly => decompose(&family, pivot).and_then(|d| {
            let coeffs = polynomial_coefficient_matrix(&d)?;
            let rank = exact_rank(&coeffs);
            let report = PolynomialReport {
                cols: coeffs.first().map_or(binomial(d.n - 1, d.k - 1) as usize, Vec::len),
                family_size: d.family_size(),
                independent: rank == d.family_size(),
                pivot,
                polynomials: family_polynomials(&d)?.iter().map(ToString::to_string).collect(),
                rank,
            };
            Ok(verdict(&report, report.independent, format))
        }),
    };
    result.unwrap_or_else(|e| failure(e, format))
}

fn cmd_oracle(n: usize, k: usize, t: usize, config: &OracleConfig, format: Format) -> Outcome {
    let result = if t == 1 {
        max_intersecting_bruteforce(n, k, config)
    } else {
        max_t_intersecting_bruteforce(n, k, t, config)
    };
    match result {
        Ok(r) => {
            let mut out = Outcome::ok(render(&r, format));
            out.stderr = format!("elapsed {:.3} ms\n", r.elapsed.as_secs_f64() * 1e3);
            out
        }
        Err(e) => Outcome::usage(e),
    }
}

/// A parameter grid for [`sweep`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepSpec {
    pub n_range: RangeInclusive<usize>,
    pub k_range: RangeInclusive<usize>,
    pub pivots: Pivots,
    pub samples_per_cell: usize,
    pub seed: u64,
    pub checks: BTreeSet<Check>,
}

/// One CSV row. Unrequested checks are `None`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub n: usize,
    pub k: usize,
    pub pivot: Option<usize>,
    pub sample: Option<usize>,
    pub status: &'static str,
    pub family_size: Option<usize>,
    pub bound: Option<u64>,
    pub katona: Option<bool>,
    pub chain: Option<bool>,
    pub matrix: Option<bool>,
    pub polynomial: Option<bool>,
    pub oracle: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub failed: usize,
    pub passed: usize,
    pub rows: usize,
    pub skipped_cells: usize,
}

/// Seed of sample `sample` in cell `(n, k)`.
pub fn sample_seed(seed: u64, n: usize, k: usize, sample: usize) -> u64 {
    seed ^ ((n as u64) << 48) ^ ((k as u64) << 32) ^ sample as u64
}

/// Runs the grid. Rows come out ordered by `(n, k, pivot, sample)`; cells
/// with `n < 2k` appear as one `skipped` row. Pivots beyond `n` are left out
/// of that cell.
pub fn sweep(spec: &SweepSpec, config: &OracleConfig) -> Result<(Vec<SweepRow>, SweepSummary), String> {
    let cells: Vec<(usize, usize)> = spec
        .n_range
        .clone()
        .flat_map(|n| spec.k_range.clone().map(move |k| (n, k)))
        .collect();

    for &(n, k) in &cells {
        if n == 0 || n > 64 {
            return Err(format!("cell n={n} k={k}: ground size outside [1, 64]"));
        }
        if k == 0 && n >= 2 * k {
            return Err(format!("cell n={n} k={k}: uniformity must be at least 1"));
        }
        if spec.checks.contains(&Check::Oracle) && n >= 2 * k && binomial(n, k) > config.max_binom {
            return Err(format!(
                "cell n={n} k={k}: C({n}, {k}) = {} exceeds the oracle limit {}",
                binomial(n, k),
                config.max_binom
            ));
        }
    }

    let mut rows = Vec::new();
    let mut skipped_cells = 0;
    let has = |c: Check| spec.checks.contains(&c);
    for (n, k) in cells {
        let skipped = SweepRow {
            n,
            k,
            pivot: None,
            sample: None,
            status: "skipped",
            family_size: None,
            bound: None,
            katona: None,
            chain: None,
            matrix: None,
            polynomial: None,
            oracle: None,
        };
        if n < 2 * k {
            skipped_cells += 1;
            rows.push(skipped);
            continue;
        }
        let bound = binomial(n - 1, k - 1);
        let oracle = if has(Check::Oracle) {
            let r = max_intersecting_bruteforce(n, k, config).map_err(|e| format!("cell n={n} k={k}: {e}"))?;
            Some(r.max_size as u64 == bound)
        } else {
            None
        };
        let pivots: Vec<usize> = match &spec.pivots {
            Pivots::All => (1..=n).collect(),
            Pivots::List(list) => list.iter().copied().filter(|&p| p <= n).collect(),
        };
        let families = (0..spec.samples_per_cell)
            .map(|s| random_maximal_intersecting(n, k, sample_seed(spec.seed, n, k, s)))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| format!("cell n={n} k={k}: {e}"))?;
        for &pivot in &pivots {
            for (sample, family) in families.iter().enumerate() {
                let d = decompose(family, pivot).map_err(|e| e.to_string())?;
                let katona = has(Check::Katona).then(|| {
                    let b = family.min_pairwise_intersection().unwrap_or(k);
                    katona_check(family, b).is_ok_and(|r| r.holds)
                });
                let chain = has(Check::Chain).then(|| run_chain(&d).is_ok_and(|r| r.all_steps_hold()));
                let matrix = has(Check::Matrix).then(|| ekr_matrix_report(&d).is_ok_and(|r| r.independent));
                let polynomial = has(Check::Polynomial).then(|| {
                    polynomial_coefficient_matrix(&d).is_ok_and(|m| exact_rank(&m) == family.len())
                });
                let all = [katona, chain, matrix, polynomial, oracle];
                let ok = all.iter().all(|c| c.unwrap_or(true)) && family.len() as u64 <= bound;
                rows.push(SweepRow {
                    pivot: Some(pivot),
                    sample: Some(sample),
                    status: if ok { "ok" } else { "fail" },
                    family_size: Some(family.len()),
                    bound: Some(bound),
                    katona,
                    chain,
                    matrix,
                    polynomial,
                    oracle,
                    ..skipped.clone()
                });
            }
        }
    }
    let passed = rows.iter().filter(|r| r.status == "ok").count();
    let failed = rows.iter().filter(|r| r.status == "fail").count();
    let summary = SweepSummary {
        failed,
        passed,
        rows: rows.len(),
        skipped_cells,
    };
    Ok((rows, summary))
}

fn cmd_sweep(spec: &SweepSpec, config: &OracleConfig, format: Format) -> Outcome {
    let (rows, summary) = match sweep(spec, config) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(e),
    };
    let stdout = match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Sweep<'a> {
                rows: &'a [SweepRow],
                summary: &'a SweepSummary,
            }
            serde_json::to_string(&Sweep {
                rows: &rows,
                summary: &summary,
            })
            .expect("rows serialize")
                + "\n"
        }
        Format::Csv => {
            let headers: Vec<String> = [
                "n", "k", "pivot", "sample", "status", "family_size", "bound", "katona", "chain", "matrix",
                "polynomial", "oracle",
            ]
            .map(String::from)
            .to_vec();
            let cell = |v: Option<String>| v.unwrap_or_default();
            let records: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        r.k.to_string(),
                        cell(r.pivot.map(|x| x.to_string())),
                        cell(r.sample.map(|x| x.to_string())),
                        r.status.to_string(),
                        cell(r.family_size.map(|x| x.to_string())),
                        cell(r.bound.map(|x| x.to_string())),
                        cell(r.katona.map(|x| x.to_string())),
                        cell(r.chain.map(|x| x.to_string())),
                        cell(r.matrix.map(|x| x.to_string())),
                        cell(r.polynomial.map(|x| x.to_string())),
                        cell(r.oracle.map(|x| x.to_string())),
                    ]
                })
                .collect();
            let mut text = csv_text(&headers, &records);
            writeln!(
                text,
                "# summary rows={} passed={} failed={} skipped_cells={}",
                summary.rows, summary.passed, summary.failed, summary.skipped_cells
            )
            .unwrap();
            text
        }
    };
    Outcome {
        code: if summary.failed == 0 { EXIT_OK } else { EXIT_VIOLATED },
        stdout,
        stderr: String::new(),
    }
}
