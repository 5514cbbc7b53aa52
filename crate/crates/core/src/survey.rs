//! Batch obstruction surveys over slope grids, with deterministic reports.
//!
//! A survey job names profiles, two slope ranges and a subset of checks; the
//! runner evaluates every (cover profile, base profile, cover slope, base
//! slope) combination independently and in a fixed order, so repeated runs
//! of the same job produce byte-identical reports.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::obstruction::{
    dimension_gap, obstruct_lspace_cover, obstruct_same_knot, Certificate, CoverQuery, Status,
};
use crate::profile::KnotProfile;
use crate::slope::SurgerySlope;

/// The tests a survey can run per pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    SameKnot,
    Genus,
    DimensionGap,
    LspaceCover,
}

impl CheckKind {
    /// All checks, in the canonical row order.
    pub fn all() -> [CheckKind; 4] {
        [
            CheckKind::SameKnot,
            CheckKind::Genus,
            CheckKind::DimensionGap,
            CheckKind::LspaceCover,
        ]
    }
}

impl std::fmt::Display for CheckKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CheckKind::SameKnot => "same-knot",
            CheckKind::Genus => "genus",
            CheckKind::DimensionGap => "dimension-gap",
            CheckKind::LspaceCover => "lspace-cover",
        };
        write!(f, "{s}")
    }
}

/// Outcome of one check on one row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum CheckOutcome {
    /// The test certified the obstruction.
    Fired { certificate: Certificate },
    /// The test ran and found nothing.
    Silent,
    /// The test's hypotheses do not fit this query (e.g. same-knot on
    /// distinct profiles); it was skipped.
    NotApplicable,
    /// The test could not be evaluated; the row survives with the message.
    Failed { error: String },
}

/// One evaluated (cover, base) combination.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRow {
    pub cover_knot: String,
    pub cover_p: i64,
    pub cover_q: i64,
    pub base_knot: String,
    pub base_p: i64,
    pub base_q: i64,
    /// Requested checks in canonical order with their outcomes.
    pub checks: Vec<(CheckKind, CheckOutcome)>,
    /// (max cover dim, min base dim) when the dimension-gap check ran.
    pub dim_gap: Option<(u64, u64)>,
    pub verdict: Status,
}

impl SurveyRow {
    pub fn certificates(&self) -> impl Iterator<Item = &Certificate> {
        self.checks.iter().filter_map(|(_, o)| match o {
            CheckOutcome::Fired { certificate } => Some(certificate),
            _ => None,
        })
    }
}

/// Inclusive numerator/denominator bounds for slope enumeration.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SlopeRange {
    pub p_min: i64,
    pub p_max: i64,
    pub q_min: i64,
    pub q_max: i64,
}

impl SlopeRange {
    /// Enumerates the box, reduces every fraction, de-duplicates, and sorts.
    /// p = 0 entries are skipped; q bounds must stay positive.
    pub fn enumerate(&self) -> Result<Vec<SurgerySlope>> {
        if self.q_min < 1 {
            return Err(Error::InvalidInput(format!(
                "slope range requires q_min >= 1 (got {})",
                self.q_min
            )));
        }
        if self.p_min > self.p_max || self.q_min > self.q_max {
            return Err(Error::InvalidInput(
                "slope range bounds must satisfy min <= max".into(),
            ));
        }
        let mut set = BTreeSet::new();
        for p in self.p_min..=self.p_max {
            if p == 0 {
                continue;
            }
            for q in self.q_min..=self.q_max {
                set.insert(SurgerySlope::new(p, q)?);
            }
        }
        Ok(set.into_iter().collect())
    }
}

/// A survey job as read from a job file.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurveyJob {
    /// Profile names; resolved against `profiles_file` first, then built-ins.
    pub profiles: Vec<String>,
    /// Optional profile document supplying non-built-in profiles.
    #[serde(default)]
    pub profiles_file: Option<String>,
    pub cover_slopes: SlopeRange,
    pub base_slopes: SlopeRange,
    /// Subset of checks to run; defaults to all four.
    #[serde(default)]
    pub checks: Option<Vec<CheckKind>>,
    /// Pin the coefficient prime of the putative cover degree.
    #[serde(default)]
    pub prime: Option<u64>,
    /// Worker-thread bound for row evaluation; defaults to all cores.
    #[serde(default)]
    pub workers: Option<usize>,
    #[serde(default)]
    pub output: Option<OutputSpec>,
}

/// Where and how to write the report.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSpec {
    pub path: String,
    pub format: ReportFormat,
}

/// Parses a job document.
pub fn parse_job(text: &str) -> Result<SurveyJob> {
    toml::from_str(text).map_err(|e| Error::Parse {
        what: "survey job",
        detail: e.to_string(),
    })
}

/// A job with profiles and slopes materialized, ready to run.
#[derive(Debug, Clone)]
pub struct ResolvedJob {
    pub profiles: Vec<KnotProfile>,
    pub cover_slopes: Vec<SurgerySlope>,
    pub base_slopes: Vec<SurgerySlope>,
    pub checks: Vec<CheckKind>,
    pub prime: Option<u64>,
    pub workers: Option<usize>,
}

impl ResolvedJob {
    /// Validates profiles, the pinned prime, and check-list sanity.
    pub fn validate(&self) -> Result<()> {
        if self.profiles.is_empty() {
            return Err(Error::InvalidInput("survey needs at least one profile".into()));
        }
        for p in &self.profiles {
            p.validated()?;
            if let Some(r) = self.prime {
                if !p.coefficient_note.asserts(r) {
                    return Err(Error::CoefficientMismatch {
                        name: p.name.clone(),
                        prime: r,
                    });
                }
            }
        }
        if self.checks.is_empty() {
            return Err(Error::InvalidInput("survey needs at least one check".into()));
        }
        Ok(())
    }
}

/// Check outcomes in canonical order, as stored on a row.
pub type CheckOutcomes = Vec<(CheckKind, CheckOutcome)>;

/// Evaluates the requested checks for one query, in canonical order.
///
/// Inapplicable tests are recorded as such rather than skipped silently, and
/// failures are captured per check so a sweep never aborts on one row.
pub fn evaluate_checks(
    query: &CoverQuery,
    checks: &[CheckKind],
) -> (CheckOutcomes, Option<(u64, u64)>) {
    let mut outcomes = Vec::with_capacity(checks.len());
    let mut gap = None;
    for kind in CheckKind::all() {
        if !checks.contains(&kind) {
            continue;
        }
        let outcome = match kind {
            CheckKind::SameKnot => {
                if !query.same_knot_applicable() {
                    CheckOutcome::NotApplicable
                } else {
                    match obstruct_same_knot(
                        &query.cover_profile,
                        query.cover_slope,
                        query.base_slope,
                    ) {
                        Ok(v) => match v.certificates().first() {
                            Some(c) => CheckOutcome::Fired {
                                certificate: c.clone(),
                            },
                            None => CheckOutcome::Silent,
                        },
                        Err(e) => CheckOutcome::Failed {
                            error: e.to_string(),
                        },
                    }
                }
            }
            CheckKind::Genus => {
                if !query.genus_applicable() {
                    CheckOutcome::NotApplicable
                } else {
                    match crate::obstruction::obstruct_lspace_knots(
                        &query.cover_profile,
                        query.cover_slope,
                        &query.base_profile,
                        query.base_slope,
                    ) {
                        Ok(v) => match v.certificates().first() {
                            Some(c) => CheckOutcome::Fired {
                                certificate: c.clone(),
                            },
                            None => CheckOutcome::Silent,
                        },
                        Err(e) => CheckOutcome::Failed {
                            error: e.to_string(),
                        },
                    }
                }
            }
            CheckKind::DimensionGap => match dimension_gap(query) {
                Ok((max_cover, min_base)) => {
                    gap = Some((max_cover, min_base));
                    if max_cover < min_base {
                        CheckOutcome::Fired {
                            certificate: Certificate::DimensionGap {
                                max_cover_dim: max_cover,
                                min_base_dim: min_base,
                            },
                        }
                    } else {
                        CheckOutcome::Silent
                    }
                }
                Err(e) => CheckOutcome::Failed {
                    error: e.to_string(),
                },
            },
            CheckKind::LspaceCover => match obstruct_lspace_cover(query) {
                Ok(v) => match v.certificates().first() {
                    Some(c) => CheckOutcome::Fired {
                        certificate: c.clone(),
                    },
                    None => CheckOutcome::Silent,
                },
                Err(e) => CheckOutcome::Failed {
                    error: e.to_string(),
                },
            },
        };
        outcomes.push((kind, outcome));
    }
    (outcomes, gap)
}

fn evaluate_row(
    cover_profile: &KnotProfile,
    cover_slope: SurgerySlope,
    base_profile: &KnotProfile,
    base_slope: SurgerySlope,
    checks: &[CheckKind],
    prime: Option<u64>,
) -> SurveyRow {
    let mut query = CoverQuery::new(
        cover_profile.clone(),
        cover_slope,
        base_profile.clone(),
        base_slope,
    );
    if let Some(r) = prime {
        query = query.with_prime(r);
    }
    let (checks, dim_gap) = evaluate_checks(&query, checks);
    let fired = checks
        .iter()
        .any(|(_, o)| matches!(o, CheckOutcome::Fired { .. }));
    SurveyRow {
        cover_knot: cover_profile.name.clone(),
        cover_p: cover_slope.p(),
        cover_q: cover_slope.q(),
        base_knot: base_profile.name.clone(),
        base_p: base_slope.p(),
        base_q: base_slope.q(),
        checks,
        dim_gap,
        verdict: if fired {
            Status::Obstructed
        } else {
            Status::NotObstructed
        },
    }
}

/// Runs the survey: one row per (cover profile, base profile, cover slope,
/// base slope) in that lexicographic order. Rows are evaluated in parallel
/// up to the job's worker bound; output order is independent of scheduling.
pub fn run_survey(job: &ResolvedJob) -> Result<Vec<SurveyRow>> {
    job.validate()?;
    let mut tasks = Vec::new();
    for cover_profile in &job.profiles {
        for base_profile in &job.profiles {
            for &cover_slope in &job.cover_slopes {
                for &base_slope in &job.base_slopes {
                    tasks.push((cover_profile, base_profile, cover_slope, base_slope));
                }
            }
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(job.workers.unwrap_or(0))
        .build()
        .map_err(|e| Error::InvalidInput(format!("cannot build worker pool: {e}")))?;
    let rows = pool.install(|| {
        tasks
            .par_iter()
            .map(|(cp, bp, cs, bs)| evaluate_row(cp, *cs, bp, *bs, &job.checks, job.prime))
            .collect()
    });
    Ok(rows)
}

// ---------------------------------------------------------------------------
// Report emission
// ---------------------------------------------------------------------------

/// Report serialization formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReportFormat {
    /// Human-oriented aligned text.
    Text,
    /// Comma-separated values with a metadata comment line.
    Csv,
    /// Line-delimited JSON records; carries full certificates and round-trips.
    Jsonl,
}

impl std::str::FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "text" | "tabular" => Ok(ReportFormat::Text),
            "csv" => Ok(ReportFormat::Csv),
            "jsonl" => Ok(ReportFormat::Jsonl),
            other => Err(Error::InvalidInput(format!(
                "unknown report format `{other}` (expected text, csv or jsonl)"
            ))),
        }
    }
}

/// Report metadata: tool version and content hashes of the profiles used.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportHeader {
    pub tool: String,
    pub version: String,
    /// (profile name, content hash), sorted by name.
    pub profiles: Vec<(String, String)>,
}

impl ReportHeader {
    pub fn new(profiles: &[KnotProfile]) -> Self {
        let mut entries: Vec<(String, String)> = profiles
            .iter()
            .map(|p| (p.name.clone(), p.content_hash()))
            .collect();
        entries.sort();
        entries.dedup();
        ReportHeader {
            tool: "floercover".to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            profiles: entries,
        }
    }
}

fn outcome_cell(row: &SurveyRow, kind: CheckKind) -> String {
    match row.checks.iter().find(|(k, _)| *k == kind) {
        None => String::new(),
        Some((_, CheckOutcome::Fired { .. })) => "obstructed".to_string(),
        Some((_, CheckOutcome::Silent)) => "clear".to_string(),
        Some((_, CheckOutcome::NotApplicable)) => "n/a".to_string(),
        Some((_, CheckOutcome::Failed { error })) => format!("error: {error}"),
    }
}

const CSV_COLUMNS: [&str; 12] = [
    "cover_knot",
    "cover_p",
    "cover_q",
    "base_knot",
    "base_p",
    "base_q",
    "same_knot",
    "genus",
    "dim_gap_max",
    "dim_gap_min",
    "lspace_cover",
    "verdict",
];

fn csv_report(header: &ReportHeader, rows: &[SurveyRow]) -> String {
    let mut meta = format!("# {} {} profiles=", header.tool, header.version);
    let parts: Vec<String> = header
        .profiles
        .iter()
        .map(|(n, h)| format!("{n}:{h}"))
        .collect();
    meta.push_str(&parts.join(";"));
    meta.push('\n');

    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(CSV_COLUMNS).expect("in-memory write");
    for row in rows {
        let (gmax, gmin) = match row.dim_gap {
            Some((a, b)) => (a.to_string(), b.to_string()),
            None => (String::new(), String::new()),
        };
        writer
            .write_record([
                row.cover_knot.clone(),
                row.cover_p.to_string(),
                row.cover_q.to_string(),
                row.base_knot.clone(),
                row.base_p.to_string(),
                row.base_q.to_string(),
                outcome_cell(row, CheckKind::SameKnot),
                outcome_cell(row, CheckKind::Genus),
                gmax,
                gmin,
                outcome_cell(row, CheckKind::LspaceCover),
                row.verdict.to_string(),
            ])
            .expect("in-memory write");
    }
    let body = String::from_utf8(writer.into_inner().expect("in-memory flush"))
        .expect("csv output is UTF-8");
    meta + &body
}

fn jsonl_report(header: &ReportHeader, rows: &[SurveyRow]) -> String {
    let mut out = String::new();
    out.push_str(&serde_json::to_string(header).expect("header serializes"));
    out.push('\n');
    for row in rows {
        out.push_str(&serde_json::to_string(row).expect("row serializes"));
        out.push('\n');
    }
    out
}

fn text_report(header: &ReportHeader, rows: &[SurveyRow]) -> String {
    let mut out = format!("# {} {}\n", header.tool, header.version);
    for (name, hash) in &header.profiles {
        out.push_str(&format!("# profile {name} {hash}\n"));
    }
    let headers = [
        "cover", "base", "same-knot", "genus", "dim-gap", "lspace", "verdict",
    ];
    let mut table: Vec<[String; 7]> = Vec::with_capacity(rows.len());
    for row in rows {
        let gap = match row.dim_gap {
            Some((a, b)) => format!("{a} vs {b}"),
            None => String::new(),
        };
        table.push([
            format!("{} {}/{}", row.cover_knot, row.cover_p, row.cover_q),
            format!("{} {}/{}", row.base_knot, row.base_p, row.base_q),
            outcome_cell(row, CheckKind::SameKnot),
            outcome_cell(row, CheckKind::Genus),
            gap,
            outcome_cell(row, CheckKind::LspaceCover),
            row.verdict.to_string(),
        ]);
    }
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for line in &table {
        for (w, cell) in widths.iter_mut().zip(line.iter()) {
            *w = (*w).max(cell.len());
        }
    }
    let fmt_line = |cells: &[String]| -> String {
        let joined: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        joined.join("  ").trim_end().to_string() + "\n"
    };
    out.push_str(&fmt_line(
        &headers.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
    ));
    for line in &table {
        out.push_str(&fmt_line(line));
    }
    out
}

/// Serializes rows into the requested format. Byte-deterministic: the same
/// header and rows always produce the same document.
pub fn emit_report(header: &ReportHeader, rows: &[SurveyRow], format: ReportFormat) -> String {
    match format {
        ReportFormat::Text => text_report(header, rows),
        ReportFormat::Csv => csv_report(header, rows),
        ReportFormat::Jsonl => jsonl_report(header, rows),
    }
}

/// Parses a JSONL report back into its header and rows.
pub fn parse_report(text: &str) -> Result<(ReportHeader, Vec<SurveyRow>)> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header_line = lines.next().ok_or(Error::Parse {
        what: "survey report",
        detail: "empty document".into(),
    })?;
    let header: ReportHeader = serde_json::from_str(header_line).map_err(|e| Error::Parse {
        what: "survey report header",
        detail: e.to_string(),
    })?;
    let mut rows = Vec::new();
    for line in lines {
        let row: SurveyRow = serde_json::from_str(line).map_err(|e| Error::Parse {
            what: "survey report row",
            detail: e.to_string(),
        })?;
        rows.push(row);
    }
    Ok((header, rows))
}
