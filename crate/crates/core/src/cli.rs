//! Command-line front end: `list`, `show`, `run`, `verify`, `sweep`.
//!
//! Reports go to stdout as JSON (one pretty document for a single report,
//! one compact line per report for streams) or as text tables with
//! `--table`. Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | every requested check is PASS, WARN or INFO |
//! | 1 | some check is FAIL |
//! | 2 | usage error (bad flag, unparsable value, unknown parameter name) |
//! | 3 | unknown catalog id |
//! | 4 | malformed or unreadable spec file |
//! | 5 | parameter outside its domain |
//! | 6 | entry is metadata-only and cannot be verified |

use std::path::Path;
use std::time::Instant;

use clap::{ArgAction, Args, Parser, Subcommand};
use serde::Serialize;

use crate::algebra::spec::load_spec;
use crate::catalog::{
    self, entries, entry, export_entry, resolve_metric, table_row, verify_entry, CatalogEntry, EntryKind,
    MetricStatus, TableRow,
};
use crate::error::{CatalogError, SpecError};
use crate::exact::Rational;
use crate::report::{run_pipeline, Check, Report, Stage, Verdict};
use crate::soliton::{SolitonClass, Status};
use crate::Params;

pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNKNOWN_ID: i32 = 3;
pub const EXIT_SPEC: i32 = 4;
pub const EXIT_DOMAIN: i32 = 5;
pub const EXIT_UNVERIFIABLE: i32 = 6;

/// Most points a sweep will generate.
const SWEEP_LIMIT: usize = 10_000;

#[derive(Parser, Debug)]
#[command(name = "nomizu", version, about = "Exact curvature, Segre types and Ricci solitons of metric Lie algebras")]
pub struct Cli {
    /// Human-readable tables instead of JSON.
    #[arg(long, global = true, conflicts_with = "json")]
    pub table: bool,
    /// JSON output (the default).
    #[arg(long, global = true)]
    pub json: bool,
    /// Record wall-clock time per report (makes output run-dependent).
    #[arg(long, global = true)]
    pub timing: bool,
    /// Accepted for compatibility; every computation is deterministic.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List catalog entries and metadata-only table rows.
    List,
    /// Show an entry: parameters, fixtures, metric resolution.
    Show { id: String },
    /// Run pipeline stages on a catalog entry or a JSON spec file.
    Run {
        target: String,
        #[command(flatten)]
        params: ParamArgs,
        /// Comma-separated stages, or "all".
        #[arg(long, default_value = "all")]
        stages: String,
    },
    /// Diff an entry (or "all") against its printed fixtures.
    Verify {
        target: String,
        #[command(flatten)]
        params: ParamArgs,
        /// Sample values used when no parameter is bound, comma-separated.
        #[arg(long, allow_hyphen_values = true)]
        samples: Option<String>,
    },
    /// Verify an entry over a grid of parameter values.
    Sweep {
        id: String,
        #[command(flatten)]
        params: ParamArgs,
        /// NAME=START:STOP:STEP, inclusive of STOP; repeatable.
        #[arg(long = "range", required = true, action = ArgAction::Append)]
        ranges: Vec<String>,
    },
}

#[derive(Args, Debug, Default, Clone)]
pub struct ParamArgs {
    /// Bind a parameter to a rational "p/q".
    #[arg(
        long = "param",
        num_args = 2,
        value_names = ["NAME", "VALUE"],
        allow_hyphen_values = true,
        action = ArgAction::Append
    )]
    pub param: Vec<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    pub eps: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    pub k1: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    pub k2: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    pub k3: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<Rational>,
}

impl ParamArgs {
    pub fn bindings(&self) -> Result<Params, CliError> {
        let mut out = Params::new();
        for kv in self.param.chunks(2) {
            let v: Rational = kv[1]
                .parse()
                .map_err(|_| CliError::Usage(format!("--param {}: {:?} is not a rational p/q", kv[0], kv[1])))?;
            out.insert(kv[0].clone(), v);
        }
        let named = [
            ("alpha", &self.alpha),
            ("eps", &self.eps),
            ("k1", &self.k1),
            ("k2", &self.k2),
            ("k3", &self.k3),
            ("a", &self.a),
            ("lambda", &self.lambda),
            ("b", &self.b),
            ("c", &self.c),
        ];
        for (name, v) in named {
            if let Some(v) = v {
                out.insert(name.to_string(), v.clone());
            }
        }
        Ok(out)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Spec(#[from] SpecError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Spec(_) => EXIT_SPEC,
            CliError::Catalog(e) => match e {
                CatalogError::UnknownId(_) => EXIT_UNKNOWN_ID,
                CatalogError::Domain { .. } => EXIT_DOMAIN,
                CatalogError::UnknownParameter(..) => EXIT_USAGE,
                CatalogError::MetadataOnly(_) => EXIT_UNVERIFIABLE,
                _ => EXIT_FAIL,
            },
        }
    }
}

/// Output of one command: text for stdout plus the exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

#[derive(Debug, Clone, Copy)]
struct Format {
    table: bool,
    timing: bool,
}

pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            out.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// Run a parsed command line.
pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let fmt = Format {
        table: cli.table,
        timing: cli.timing,
    };
    match &cli.command {
        Command::List => Ok(cmd_list(fmt)),
        Command::Show { id } => cmd_show(id, fmt),
        Command::Run { target, params, stages } => {
            let stages = Stage::parse_list(stages).map_err(CliError::Usage)?;
            let report = cmd_run(target, &params.bindings()?, &stages, fmt.timing)?;
            Ok(single(report, fmt))
        }
        Command::Verify { target, params, samples } => {
            let samples = samples.as_deref().map(parse_samples).transpose()?;
            cmd_verify(target, &params.bindings()?, samples.as_deref(), fmt)
        }
        Command::Sweep { id, params, ranges } => cmd_sweep(id, &params.bindings()?, ranges, fmt),
    }
}

fn parse_samples(csv: &str) -> Result<Vec<Rational>, CliError> {
    csv.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("--samples: {s:?} is not a rational p/q")))
        })
        .collect()
}

fn code_for(reports: &[Report]) -> i32 {
    if reports.iter().all(Report::passed) {
        0
    } else {
        EXIT_FAIL
    }
}

fn single(report: Report, fmt: Format) -> Outcome {
    let code = code_for(std::slice::from_ref(&report));
    let stdout = if fmt.table {
        report.to_table()
    } else {
        report.to_json() + "\n"
    };
    Outcome { stdout, code }
}

fn stream(reports: &[Report], fmt: Format) -> String {
    let mut out = String::new();
    for r in reports {
        if fmt.table {
            out.push_str(&r.to_table());
            out.push('\n');
        } else {
            out.push_str(&serde_json::to_string(r).expect("report serializes"));
            out.push('\n');
        }
    }
    out
}

#[derive(Serialize)]
struct ListItem<'a> {
    id: &'a str,
    kind: String,
    title: String,
    params: Vec<&'a str>,
}

pub fn cmd_list_items() -> Vec<(String, String, String)> {
    let mut out: Vec<(String, String, String)> = entries()
        .iter()
        .map(|e| (e.id.to_string(), kind_name(e.kind).to_string(), e.title.to_string()))
        .collect();
    for row in catalog::TABLE_ROWS {
        out.push((row.id.to_string(), "UNVERIFIABLE".to_string(), format!("Table {} row {} {}", row.table, row.case, row.segre)));
    }
    out
}

fn kind_name(k: EntryKind) -> &'static str {
    match k {
        EntryKind::Full => "FULL",
        EntryKind::Partial => "PARTIAL",
        EntryKind::MetadataOnly => "UNVERIFIABLE",
    }
}

fn cmd_list(fmt: Format) -> Outcome {
    let items: Vec<ListItem> = entries()
        .iter()
        .map(|e| ListItem {
            id: e.id,
            kind: kind_name(e.kind).into(),
            title: e.title.into(),
            params: e.param_names(),
        })
        .chain(catalog::TABLE_ROWS.iter().map(|row| ListItem {
            id: row.id,
            kind: "UNVERIFIABLE".into(),
            title: format!("Table {} row {} {}", row.table, row.case, row.segre),
            params: Vec::new(),
        }))
        .collect();
    let stdout = if fmt.table {
        let w = items.iter().map(|i| i.id.chars().count()).max().unwrap_or(0);
        items
            .iter()
            .map(|i| format!("{:<w$}  {:<12}  {}\n", i.id, i.kind, i.title))
            .collect()
    } else {
        serde_json::to_string_pretty(&items).expect("list serializes") + "\n"
    };
    Outcome { stdout, code: 0 }
}

#[derive(Serialize)]
struct Unverifiable<'a> {
    id: &'a str,
    verdict: &'static str,
    reason: &'static str,
    row: &'a TableRow,
}

const UNVERIFIABLE_REASON: &str = "bracket relations are not given, only the table row";

fn unverifiable(row: &TableRow) -> Unverifiable<'_> {
    Unverifiable {
        id: row.id,
        verdict: "UNVERIFIABLE",
        reason: UNVERIFIABLE_REASON,
        row,
    }
}

fn row_table(row: &TableRow) -> String {
    format!(
        "{}  UNVERIFIABLE  Table {} {}  metric {}  X = {}  ς = {}  invariant {}\n",
        row.id, row.table, row.segre, row.metric, row.field, row.sigma, row.invariant
    )
}

fn cmd_show(id: &str, fmt: Format) -> Result<Outcome, CliError> {
    if let Some(row) = table_row(id) {
        let stdout = if fmt.table {
            row_table(row)
        } else {
            serde_json::to_string_pretty(&unverifiable(row)).expect("row serializes") + "\n"
        };
        return Ok(Outcome { stdout, code: 0 });
    }
    let e = entry(id)?;
    let export = export_entry(id, &Params::new())?;
    let resolution = resolve_metric(id)?;
    let stdout = if fmt.table {
        show_table(e, &resolution)
    } else {
        let v = serde_json::json!({ "entry": export, "metric_resolution": resolution });
        serde_json::to_string_pretty(&v).expect("entry serializes") + "\n"
    };
    Ok(Outcome { stdout, code: 0 })
}

fn show_table(e: &CatalogEntry, res: &catalog::MetricResolution) -> String {
    let mut out = format!("{}  {}  {}\n", e.id, kind_name(e.kind), e.title);
    for note in e.notes {
        out += &format!("  {note}\n");
    }
    out += &format!("  dims r={} n={}\n", e.r, e.n);
    for p in e.params {
        out += &format!("  param {:<7} default {:<4} {}\n", p.name, p.default_value(), p.constraint);
    }
    match res.status {
        MetricStatus::Resolved => out += &format!("  metric {} (explicit)\n", crate::report::matrix_inline(&res.metric)),
        MetricStatus::Searched => {
            out += &format!("  metric {} (searched)\n", crate::report::matrix_inline(&res.metric));
            for c in &res.candidates {
                let ricci = match c.ricci_match {
                    Some(true) => "ϱ ok",
                    Some(false) => "ϱ no",
                    None => "ϱ -",
                };
                out += &format!(
                    "    {:<28} {}  Λ matched {:?}{}\n",
                    c.label,
                    ricci,
                    c.lambda_match.iter().map(|i| i + 1).collect::<Vec<_>>(),
                    if c.survived { "  survivor" } else { "" }
                );
            }
            if !res.excluded_lambda.is_empty() {
                out += &format!(
                    "    printed Λ in a failing torsion identity: {:?}\n",
                    res.excluded_lambda.iter().map(|i| i + 1).collect::<Vec<_>>()
                );
            }
        }
    }
    out
}

/// Run stages on a catalog id or a spec file. No fixture comparison.
pub fn cmd_run(target: &str, params: &Params, stages: &[Stage], timing: bool) -> Result<Report, CliError> {
    let start = Instant::now();
    let looks_like_file = Path::new(target).is_file() || target.ends_with(".json") || target.ends_with(".spec");
    let (id, bindings, pair) = if looks_like_file && entry(target).is_err() {
        if !params.is_empty() {
            return Err(CliError::Usage("parameters cannot be bound on a spec file".into()));
        }
        let pair = load_spec(target)?;
        let id = if pair.id().is_empty() {
            Path::new(target)
                .file_stem()
                .map_or(target.to_string(), |s| s.to_string_lossy().into_owned())
        } else {
            pair.id().to_string()
        };
        let bindings = pair.meta().params.clone();
        (id, bindings, pair)
    } else {
        if table_row(target).is_some() {
            return Err(CatalogError::MetadataOnly(target.to_string()).into());
        }
        let inst = catalog::instantiate(target, params)?;
        (inst.entry.id.to_string(), inst.params, inst.pair)
    };
    let mut report = Report::new(id, bindings);
    run_pipeline(&mut report, &pair, stages);
    if timing {
        report.timing_us = Some(start.elapsed().as_micros() as u64);
    }
    Ok(report)
}

fn timed_verify(id: &str, params: &Params, timing: bool) -> Result<Report, CatalogError> {
    let start = Instant::now();
    let mut r = verify_entry(id, params)?;
    if timing {
        r.timing_us = Some(start.elapsed().as_micros() as u64);
    }
    Ok(r)
}

/// Reports for one entry: at the bound parameters, or at every sample point
/// when none are bound.
pub fn verify_points(e: &CatalogEntry, params: &Params, samples: Option<&[Rational]>) -> Vec<Params> {
    if !params.is_empty() {
        return vec![params.clone()];
    }
    let default = catalog::default_samples();
    e.sample_points(samples.unwrap_or(&default))
}

fn cmd_verify(target: &str, params: &Params, samples: Option<&[Rational]>, fmt: Format) -> Result<Outcome, CliError> {
    if target == "all" {
        return verify_all(params, samples, fmt);
    }
    if table_row(target).is_some() {
        return Err(CatalogError::MetadataOnly(target.to_string()).into());
    }
    let e = entry(target)?;
    let points = verify_points(e, params, samples);
    let reports = points
        .iter()
        .map(|p| timed_verify(e.id, p, fmt.timing))
        .collect::<Result<Vec<_>, _>>()?;
    if reports.len() == 1 {
        return Ok(single(reports.into_iter().next().expect("one report"), fmt));
    }
    Ok(Outcome {
        stdout: stream(&reports, fmt),
        code: code_for(&reports),
    })
}

/// Every entry at every sample point, in catalog order; entries run on
/// separate threads.
pub fn verify_all_reports(samples: Option<&[Rational]>, timing: bool) -> Result<Vec<Report>, CatalogError> {
    let results: Vec<Result<Vec<Report>, CatalogError>> = std::thread::scope(|s| {
        let handles: Vec<_> = entries()
            .iter()
            .map(|e| {
                s.spawn(move || {
                    verify_points(e, &Params::new(), samples)
                        .iter()
                        .map(|p| timed_verify(e.id, p, timing))
                        .collect::<Result<Vec<_>, _>>()
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("verification thread")).collect()
    });
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

fn verify_all(params: &Params, samples: Option<&[Rational]>, fmt: Format) -> Result<Outcome, CliError> {
    if !params.is_empty() {
        return Err(CliError::Usage("`verify all` takes --samples, not parameter bindings".into()));
    }
    let reports = verify_all_reports(samples, fmt.timing)?;
    let summary = acceptance_summary(&reports);
    let mut stdout = stream(&reports, fmt);
    for row in catalog::TABLE_ROWS {
        if fmt.table {
            stdout += &row_table(row);
        } else {
            stdout += &serde_json::to_string(&unverifiable(row)).expect("row serializes");
            stdout.push('\n');
        }
    }
    if fmt.table {
        stdout.push('\n');
        for c in &summary {
            stdout += &format!("{:<4}  {}  {}\n", c.verdict, c.name, c.detail);
        }
    } else {
        stdout += &serde_json::to_string(&serde_json::json!({ "acceptance": summary })).expect("summary serializes");
        stdout.push('\n');
    }
    let failed = !reports.iter().all(Report::passed) || summary.iter().any(|c| c.verdict == Verdict::Fail);
    Ok(Outcome {
        stdout,
        code: if failed { EXIT_FAIL } else { 0 },
    })
}

fn of<'a>(reports: &'a [Report], ids: &[&str]) -> Vec<&'a Report> {
    reports.iter().filter(|r| ids.contains(&r.id.as_str())).collect()
}

fn all_pass(reports: &[&Report], prefix: &str) -> (bool, usize) {
    let mut n = 0;
    let mut ok = true;
    for r in reports {
        for c in r.checks.iter().filter(|c| c.name.starts_with(prefix)) {
            n += 1;
            ok &= c.verdict == Verdict::Pass;
        }
    }
    (ok && n > 0, n)
}

fn criterion(n: usize, what: &str, ok: bool, detail: String) -> Check {
    Check {
        name: format!("criterion {n:>2}: {what}"),
        verdict: if ok { Verdict::Pass } else { Verdict::Fail },
        detail,
    }
}

const THM31: [&str; 2] = ["thm3.1-i", "thm3.1-ii"];
const THM32: [&str; 2] = ["thm3.2-i", "thm3.2-ii"];
const THM41: &str = "thm4.1-(22)";
const THM42: &str = "thm4.2-[1,(12)]";
const CASE1315: &str = "case-1.3.1:5";

/// Acceptance criteria 1–11 judged from verification reports over the
/// sampled points; 12 and 13 are property suites run by `cargo test`.
pub fn acceptance_summary(reports: &[Report]) -> Vec<Check> {
    let mut out = Vec::new();
    let ricci = |ids: &[&str]| {
        let rs = of(reports, ids);
        let (ok, n) = all_pass(&rs, "printed_ricci");
        (ok, format!("{n} printed ϱ comparisons over {} reports", rs.len()))
    };
    let (ok, d) = ricci(&THM31);
    out.push(criterion(1, "Ricci reproduction, neutral family", ok, d));
    let (ok, d) = ricci(&THM32);
    out.push(criterion(2, "Ricci reproduction, Lorentzian family", ok, d));
    let (ok, d) = ricci(&[THM42]);
    out.push(criterion(3, "Ricci reproduction, [1,(12)]", ok, d));
    let (ok, d) = ricci(&[THM41]);
    out.push(criterion(4, "Ricci reproduction, [(22)]", ok, d));

    let rs = of(reports, &["thm3.1-ii", THM41, THM42]);
    let mismatched: Vec<String> = rs
        .iter()
        .flat_map(|r| {
            r.checks
                .iter()
                .filter(|c| c.name.starts_with("printed_lambda") && c.verdict != Verdict::Pass)
                .map(move |c| format!("{} {}", r.id, c.name))
        })
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    let (_, n) = all_pass(&rs, "printed_lambda");
    out.push(criterion(
        5,
        "connection reproduction",
        mismatched.is_empty() && n > 0,
        if mismatched.is_empty() {
            format!("{n} printed Λ comparisons")
        } else {
            format!("printed Λ not reproduced: {}", mismatched.join(", "))
        },
    ));

    let inconsistent = |id: &str| {
        let rs = of(reports, &[id]);
        let ok = !rs.is_empty()
            && rs.iter().all(|r| {
                r.stages.soliton.as_ref().is_some_and(|s| s.status == Status::Inconsistent && s.certificate.is_some())
                    && r.check("soliton_claim").is_some_and(|c| c.verdict == Verdict::Pass)
            });
        (ok, rs)
    };
    let (ok, rs) = inconsistent("thm3.1-ii");
    out.push(criterion(6, "nonexistence, neutral (ii)", ok, format!("{} samples inconsistent with certificate", rs.len())));
    let (ok, rs) = inconsistent(THM41);
    let agree = rs
        .iter()
        .all(|r| r.check("printed_system_agreement").is_some_and(|c| c.verdict == Verdict::Pass));
    out.push(criterion(
        7,
        "nonexistence, [(22)]",
        ok && agree,
        format!("{} samples; printed and assembled systems agree: {agree}", rs.len()),
    ));

    let rs = of(reports, &[THM42]);
    let ok = !rs.is_empty()
        && rs.iter().all(|r| {
            let k = &r.params["k1"];
            let v = k / &(Rational::one() + &(Rational::integer(2) * k * k));
            let z = Rational::zero();
            r.stages.soliton.as_ref().is_some_and(|s| {
                s.particular.as_deref() == Some(&[z.clone(), v.clone(), v, z.clone(), z][..])
                    && s.directions.is_empty()
                    && s.class == Some(SolitonClass::Steady)
                    && !s.einstein
            })
        });
    out.push(criterion(8, "existence, [1,(12)]", ok, format!("{} samples, x = (0, k₁/(1+2k₁²), k₁/(1+2k₁²), 0), ς = 0", rs.len())));

    let rs = of(reports, &[CASE1315]);
    let ok = !rs.is_empty()
        && rs.iter().all(|r| {
            let (a, l) = (&r.params["a"], &r.params["lambda"]);
            let x2 = -(l * l + Rational::integer(4)) / (Rational::integer(4) * a * l);
            let z = Rational::zero();
            r.stages.soliton.as_ref().is_some_and(|s| {
                s.particular.as_deref() == Some(&[z.clone(), x2, z.clone(), z.clone(), z][..]) && s.directions.is_empty()
            }) && r.check("soliton_field").is_some_and(|c| c.verdict == Verdict::Warn)
                && r.check("invariant_field").is_some_and(|c| c.verdict == Verdict::Pass)
        });
    out.push(criterion(9, "printed system, case 1.3.1:5", ok, format!("{} samples, x₂ = −(λ²+4)/(4aλ) with sign WARN", rs.len())));

    let full: Vec<&str> = entries().iter().filter(|e| e.kind == EntryKind::Full).map(|e| e.id).collect();
    let rs = of(reports, &full);
    let (ok, n) = all_pass(&rs, "conformally_flat");
    out.push(criterion(10, "conformal flatness", ok && n == rs.len(), format!("{n} Weyl checks over {} reports", rs.len())));

    let segre_ok = |ids: &[&str]| {
        let rs = of(reports, ids);
        !rs.is_empty() && rs.iter().all(|r| r.check("segre_type").is_some_and(|c| c.verdict == Verdict::Pass))
    };
    let nilpotent = of(reports, &[THM42])
        .iter()
        .all(|r| r.stages.segre.as_ref().is_some_and(|s| s.min_poly == "t^2"));
    let roundtrip = crate::segre::TABLE_SYMBOLS
        .iter()
        .all(|s| s.parse::<crate::segre::SegreSymbol>().is_ok_and(|x| x.to_string() == *s));
    let (a, b) = (segre_ok(&THM31), segre_ok(&THM32));
    out.push(criterion(
        11,
        "Segre types",
        a && b && nilpotent && roundtrip,
        format!("neutral {a}, Lorentzian {b}, [1,(12)] minimal polynomial t^2 {nilpotent}, table round-trip {roundtrip}"),
    ));
    for (n, what) in [(12, "property suites"), (13, "oracle equivalence")] {
        out.push(Check {
            name: format!("criterion {n}: {what}"),
            verdict: Verdict::Info,
            detail: "run `cargo test --test acceptance`".into(),
        });
    }
    out
}

/// Parse NAME=START:STOP:STEP into the inclusive list of values.
pub fn parse_range(s: &str) -> Result<(String, Vec<Rational>), CliError> {
    let bad = || CliError::Usage(format!("--range {s:?}: expected NAME=START:STOP:STEP"));
    let (name, spec) = s.split_once('=').ok_or_else(bad)?;
    let parts: Vec<Rational> = spec
        .split(':')
        .map(|p| p.parse().map_err(|_| bad()))
        .collect::<Result<_, _>>()?;
    let [start, stop, step] = parts.as_slice() else {
        return Err(bad());
    };
    if step.signum() <= 0 {
        return Err(CliError::Usage(format!("--range {s:?}: STEP must be positive")));
    }
    let mut vals = Vec::new();
    let mut v = start.clone();
    while &v <= stop {
        if vals.len() >= SWEEP_LIMIT {
            return Err(CliError::Usage(format!("--range {s:?}: more than {SWEEP_LIMIT} points")));
        }
        vals.push(v.clone());
        v = &v + step;
    }
    Ok((name.to_string(), vals))
}

/// Cartesian product of the ranges on top of fixed bindings. Points outside
/// a parameter's domain are dropped and listed separately.
pub fn sweep_points(e: &CatalogEntry, fixed: &Params, ranges: &[(String, Vec<Rational>)]) -> Result<(Vec<Params>, Vec<Params>), CliError> {
    let mut grid = vec![fixed.clone()];
    for (name, vals) in ranges {
        let mut next = Vec::new();
        for p in &grid {
            for v in vals {
                let mut q = p.clone();
                q.insert(name.clone(), v.clone());
                next.push(q);
            }
        }
        if next.len() > SWEEP_LIMIT {
            return Err(CliError::Usage(format!("sweep grid exceeds {SWEEP_LIMIT} points")));
        }
        grid = next;
    }
    let mut keep = Vec::new();
    let mut skipped = Vec::new();
    for p in grid {
        match e.complete_params(&p) {
            Ok(_) => keep.push(p),
            Err(CatalogError::Domain { .. }) => skipped.push(p),
            Err(err) => return Err(err.into()),
        }
    }
    Ok((keep, skipped))
}

fn cmd_sweep(id: &str, fixed: &Params, ranges: &[String], fmt: Format) -> Result<Outcome, CliError> {
    if table_row(id).is_some() {
        return Err(CatalogError::MetadataOnly(id.to_string()).into());
    }
    let e = entry(id)?;
    let ranges = ranges.iter().map(|r| parse_range(r)).collect::<Result<Vec<_>, _>>()?;
    let (points, skipped) = sweep_points(e, fixed, &ranges)?;
    for p in &skipped {
        let s: Vec<String> = p.iter().map(|(k, v)| format!("{k}={v}")).collect();
        eprintln!("skipping {}: outside the parameter domain", s.join(", "));
    }
    let reports = points
        .iter()
        .map(|p| timed_verify(e.id, p, fmt.timing))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Outcome {
        stdout: stream(&reports, fmt),
        code: code_for(&reports),
    })
}
