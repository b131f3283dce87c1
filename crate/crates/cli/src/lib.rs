//! Command-line front end for `festcal-core`.
//!
//! [`run`] takes the full argument list (program name first) and returns the
//! exit code together with the text destined for stdout and stderr, so the
//! binary is a thin wrapper and the whole interface is testable in-process.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::collections::BTreeSet;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use festcal_core::analysis::{analyze_gaps, count_by_millennium, scan_range_with, ScanOptions};
use festcal_core::festival::festivals_on;
use festcal_core::render::{render_counts, render_gaps, render_report};
use festcal_core::{
    checks, festival_span, fixed_to_gregorian, fixed_to_hebrew, BucketConvention, Festival,
    FestivalKind, GregorianDate, HebrewDate, OutputFormat, Predicate,
};
use serde_json::json;

#[derive(Debug, Parser)]
#[command(
    name = "festcal",
    about = "Hebrew/Gregorian calendar arithmetic and Christmas coincidence scans"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Convert a date between the Gregorian and Hebrew calendars.
    Convert(ConvertArgs),
    /// Gregorian span of a festival in a Hebrew year.
    Festival(FestivalArgs),
    /// List Gregorian years whose Christmas falls in a festival.
    Scan(ScanArgs),
    /// Gap sequence between coincidence years, checked against an allowed set.
    Gaps(GapsArgs),
    /// Coincidence counts bucketed by millennium.
    Count(CountArgs),
    /// Recompute every published coincidence figure and print a pass/fail table.
    Reproduce(OutArgs),
}

#[derive(Debug, Args)]
struct OutArgs {
    /// Write the rendered output to FILE instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct FormatArgs {
    #[arg(long, default_value = "plain", value_parser = parse_format)]
    format: OutputFormat,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Debug, Args)]
struct FestivalOptions {
    /// Count Shemini Atzeret as the 8th day of Sukkot.
    #[arg(long)]
    shemini_atzeret: bool,
    /// Add the diaspora extra day to Pesach and Shavuot.
    #[arg(long)]
    diaspora: bool,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct ConvertInput {
    /// Gregorian date, YYYY-MM-DD.
    #[arg(long)]
    gregorian: Option<String>,
    /// Hebrew date, YEAR-MONTH-DAY with MONTH a name or number (Nisan = 1).
    #[arg(long)]
    hebrew: Option<String>,
}

#[derive(Debug, Args)]
struct ConvertArgs {
    #[command(flatten)]
    input: ConvertInput,
    #[command(flatten)]
    options: FestivalOptions,
    #[command(flatten)]
    format: FormatArgs,
}

#[derive(Debug, Args)]
struct FestivalArgs {
    #[arg(long, value_parser = parse_festival)]
    festival: FestivalKind,
    /// Hebrew year.
    #[arg(long)]
    year: i64,
    #[command(flatten)]
    options: FestivalOptions,
    #[command(flatten)]
    format: FormatArgs,
}

#[derive(Debug, Args)]
struct ScanSelection {
    #[arg(long, default_value_t = 1801)]
    from: i64,
    #[arg(long, default_value_t = 20_000)]
    to: i64,
    #[arg(long, default_value = "hanukkah", value_parser = parse_festival)]
    festival: FestivalKind,
    /// Test December 25 shifted by this many days.
    #[arg(long, default_value_t = 0, allow_negative_numbers = true,
          value_parser = clap::value_parser!(i64).range(-1..=1))]
    predicate_offset: i64,
    #[command(flatten)]
    options: FestivalOptions,
    /// Worker threads for the scan (output does not depend on it).
    #[arg(long)]
    threads: Option<usize>,
}

impl ScanSelection {
    fn festival(&self) -> Festival {
        Festival::new(self.festival)
            .with_shemini_atzeret(self.options.shemini_atzeret)
            .with_diaspora(self.options.diaspora)
    }

    fn scan(&self) -> Result<festcal_core::OccurrenceReport, String> {
        let predicate = Predicate::with_offset(self.predicate_offset).map_err(|e| e.to_string())?;
        let options = ScanOptions {
            threads: self.threads,
            ..ScanOptions::default()
        };
        scan_range_with(self.from, self.to, self.festival(), predicate, options)
            .map_err(|e| e.to_string())
    }
}

#[derive(Debug, Args)]
struct ScanArgs {
    #[command(flatten)]
    selection: ScanSelection,
    #[command(flatten)]
    format: FormatArgs,
}

#[derive(Debug, Args)]
struct GapsArgs {
    #[command(flatten)]
    selection: ScanSelection,
    /// Use this comma-separated year list instead of scanning.
    #[arg(
        long,
        value_delimiter = ',',
        allow_negative_numbers = true,
        conflicts_with = "input"
    )]
    years: Option<Vec<i64>>,
    /// Read years (one per line, as written by `scan --format plain`) from FILE.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
    #[arg(long, value_delimiter = ',', default_value = "2,3,5,8")]
    allowed_set: Vec<i64>,
    #[command(flatten)]
    format: FormatArgs,
}

#[derive(Debug, Args)]
struct CountArgs {
    #[command(flatten)]
    selection: ScanSelection,
    /// `ordinal` buckets 2001-3000, `round` buckets 2000-2999.
    #[arg(long, default_value = "ordinal", value_parser = parse_buckets)]
    buckets: BucketConvention,
    #[command(flatten)]
    format: FormatArgs,
}

fn parse_format(s: &str) -> Result<OutputFormat, String> {
    s.parse()
}

fn parse_festival(s: &str) -> Result<FestivalKind, String> {
    s.parse().map_err(|_| {
        format!("unknown festival {s:?} (expected hanukkah, sukkot, roshhashanah, pesach, shavuot)")
    })
}

fn parse_buckets(s: &str) -> Result<BucketConvention, String> {
    match s {
        "ordinal" => Ok(BucketConvention::Ordinal),
        "round" => Ok(BucketConvention::Round),
        other => Err(format!(
            "unknown bucket convention {other:?} (expected ordinal or round)"
        )),
    }
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        Outcome {
            code: 2,
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
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };

    let (outcome, out) = match cli.command {
        Command::Convert(a) => {
            let out = a.format.out.out.clone();
            (convert(a), out)
        }
        Command::Festival(a) => {
            let out = a.format.out.out.clone();
            (festival(a), out)
        }
        Command::Scan(a) => {
            let out = a.format.out.out.clone();
            (scan(a), out)
        }
        Command::Gaps(a) => {
            let out = a.format.out.out.clone();
            (gaps(a), out)
        }
        Command::Count(a) => {
            let out = a.format.out.out.clone();
            (count(a), out)
        }
        Command::Reproduce(a) => {
            let results = checks::run_all();
            let code = if results.iter().all(|c| c.pass) { 0 } else { 1 };
            (
                Outcome {
                    code,
                    stdout: checks::render_table(&results),
                    stderr: String::new(),
                },
                a.out,
            )
        }
    };
    match out {
        Some(path) if outcome.code != 2 => match std::fs::write(&path, &outcome.stdout) {
            Ok(()) => Outcome {
                stdout: String::new(),
                ..outcome
            },
            Err(e) => Outcome {
                code: 2,
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
            },
        },
        _ => outcome,
    }
}

fn festival_suffix(hits: &[(Festival, i64)]) -> String {
    hits.iter()
        .map(|(f, i)| format!("; {} day {i}", f.kind.name()))
        .collect()
}

fn convert(a: ConvertArgs) -> Outcome {
    let (gregorian, hebrew) = if let Some(text) = &a.input.gregorian {
        let g: GregorianDate = match text.parse() {
            Ok(g) => g,
            Err(e) => return Outcome::usage(e),
        };
        match fixed_to_hebrew(g.to_fixed()) {
            Ok(h) => (g, h),
            Err(e) => return Outcome::usage(e),
        }
    } else {
        let text = a.input.hebrew.as_deref().unwrap_or_default();
        let h: HebrewDate = match text.parse() {
            Ok(h) => h,
            Err(e) => return Outcome::usage(e),
        };
        match fixed_to_gregorian(h.to_fixed()) {
            Ok(g) => (g, h),
            Err(e) => return Outcome::usage(e),
        }
    };
    let day = gregorian.to_fixed();
    let weekday = day.weekday();
    let hits = festivals_on(day, a.options.shemini_atzeret, a.options.diaspora);

    let text = match a.format.format {
        OutputFormat::Plain => {
            let shown = if a.input.gregorian.is_some() {
                hebrew.to_string()
            } else {
                gregorian.to_string()
            };
            format!("{shown} ({weekday}){}\n", festival_suffix(&hits))
        }
        OutputFormat::Csv => {
            let fests: Vec<String> = hits
                .iter()
                .map(|(f, i)| format!("{} day {i}", f.kind.name()))
                .collect();
            format!(
                "gregorian,hebrew,weekday,fixed_day,festivals\n{gregorian},{hebrew},{weekday},{day},{}\n",
                fests.join(";")
            )
        }
        OutputFormat::Json => {
            let fests: Vec<_> = hits
                .iter()
                .map(|(f, i)| json!({ "festival": f.kind.key(), "day": i }))
                .collect();
            let doc = json!({
                "gregorian": gregorian.to_string(),
                "hebrew": hebrew,
                "hebrew_text": hebrew.to_string(),
                "weekday": weekday,
                "fixed_day": day,
                "festivals": fests,
            });
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("json"))
        }
    };
    Outcome::ok(text)
}

fn festival(a: FestivalArgs) -> Outcome {
    let f = Festival::new(a.festival)
        .with_shemini_atzeret(a.options.shemini_atzeret)
        .with_diaspora(a.options.diaspora);
    let span = match festival_span(f, a.year) {
        Ok(s) => s,
        Err(e) => return Outcome::usage(e),
    };
    let (Ok(first), Ok(last)) = (
        fixed_to_gregorian(span.first),
        fixed_to_gregorian(span.last),
    ) else {
        return Outcome::usage(format!("{} {} precedes Gregorian year 1", f, a.year));
    };
    let text = match a.format.format {
        OutputFormat::Plain => format!("{first}..{last}\n"),
        OutputFormat::Csv => format!(
            "festival,hebrew_year,first,last,days\n{},{},{first},{last},{}\n",
            f.kind.key(),
            a.year,
            span.len()
        ),
        OutputFormat::Json => {
            let doc = json!({
                "festival": f,
                "hebrew_year": a.year,
                "first": first.to_string(),
                "last": last.to_string(),
                "first_day": span.first,
                "last_day": span.last,
                "days": span.len(),
            });
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("json"))
        }
    };
    Outcome::ok(text)
}

fn scan(a: ScanArgs) -> Outcome {
    match a.selection.scan() {
        Ok(report) => Outcome::ok(render_report(&report, a.format.format)),
        Err(e) => Outcome::usage(e),
    }
}

fn read_years(path: &PathBuf) -> Result<Vec<i64>, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| l.parse::<i64>().map_err(|_| format!("not a year: {l:?}")))
        .collect()
}

fn gaps(a: GapsArgs) -> Outcome {
    let years = if let Some(ys) = a.years {
        ys
    } else if let Some(path) = &a.input {
        match read_years(path) {
            Ok(ys) => ys,
            Err(e) => return Outcome::usage(e),
        }
    } else {
        match a.selection.scan() {
            Ok(r) => r.years,
            Err(e) => return Outcome::usage(e),
        }
    };
    let allowed: BTreeSet<i64> = a.allowed_set.into_iter().collect();
    let report = match analyze_gaps(&years, &allowed) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(e),
    };
    let code = if report.verdict.ok { 0 } else { 1 };
    Outcome {
        code,
        stdout: render_gaps(&report, a.format.format),
        stderr: String::new(),
    }
}

fn count(a: CountArgs) -> Outcome {
    match a.selection.scan() {
        Ok(report) => Outcome::ok(render_counts(
            &count_by_millennium(&report, a.buckets),
            a.format.format,
        )),
        Err(e) => Outcome::usage(e),
    }
}
