//! Text renderings of reports: plain, CSV and JSON.
//!
//! Output is byte-deterministic. Non-empty output ends in exactly one
//! newline; an empty plain listing is the empty string.

use std::fmt::Write;
use std::str::FromStr;

use serde::Serialize;

use crate::analysis::{GapReport, GapVerdict, MillenniumCount, OccurrenceReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Plain,
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plain" => Ok(OutputFormat::Plain),
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!(
                "unknown format {other:?} (expected plain, csv or json)"
            )),
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("reports serialize");
    out.push('\n');
    out
}

/// Plain: one year per line. CSV: `year,hebrew_date,festival_day_index`.
pub fn render_report(report: &OccurrenceReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => report.years.iter().map(|y| format!("{y}\n")).collect(),
        OutputFormat::Csv => {
            let mut out = String::from("year,hebrew_date,festival_day_index\n");
            for o in &report.occurrences {
                let _ = writeln!(out, "{},{},{}", o.year, o.hebrew_date, o.festival_day_index);
            }
            out
        }
        OutputFormat::Json => json(report),
    }
}

pub fn render_verdict(verdict: &GapVerdict, format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => {
            let mut out = String::from(if verdict.ok { "ok\n" } else { "violations\n" });
            for v in &verdict.violations {
                let _ = write!(out, "index {} gap {}", v.index, v.gap);
                if let Some((a, b)) = v.years {
                    let _ = write!(out, " ({a} -> {b})");
                }
                out.push('\n');
            }
            out
        }
        OutputFormat::Csv => {
            let mut out = String::from("index,gap,from_year,to_year\n");
            for v in &verdict.violations {
                let (a, b) = v.years.map_or((String::new(), String::new()), |(a, b)| {
                    (a.to_string(), b.to_string())
                });
                let _ = writeln!(out, "{},{},{a},{b}", v.index, v.gap);
            }
            out
        }
        OutputFormat::Json => json(verdict),
    }
}

fn join_set(set: &std::collections::BTreeSet<i64>) -> String {
    set.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

/// Plain: one `gap fibonacci|not-fibonacci` line per gap, then the verdict.
pub fn render_gaps(report: &GapReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => {
            let mut out = String::new();
            for g in &report.gaps {
                let flag = if g.fibonacci {
                    "fibonacci"
                } else {
                    "not-fibonacci"
                };
                let _ = writeln!(out, "{} {flag}", g.gap);
            }
            let _ = writeln!(
                out,
                "allowed {{{}}}: {}",
                join_set(&report.verdict.allowed_set),
                if report.verdict.ok { "ok" } else { "FAILED" }
            );
            for v in &report.verdict.violations {
                let _ = write!(out, "violation index {} gap {}", v.index, v.gap);
                if let Some((a, b)) = v.years {
                    let _ = write!(out, " ({a} -> {b})");
                }
                out.push('\n');
            }
            out
        }
        OutputFormat::Csv => {
            let mut out = String::from("from_year,to_year,gap,fibonacci,allowed\n");
            for (i, g) in report.gaps.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}",
                    report.years[i],
                    report.years[i + 1],
                    g.gap,
                    g.fibonacci,
                    report.verdict.allowed_set.contains(&g.gap)
                );
            }
            out
        }
        OutputFormat::Json => json(report),
    }
}

pub fn render_counts(counts: &[MillenniumCount], format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => counts
            .iter()
            .map(|c| {
                format!(
                    "{}-{} {} ({}%)\n",
                    c.from,
                    c.to,
                    c.count,
                    format_percent(c.percent())
                )
            })
            .collect(),
        OutputFormat::Csv => {
            let mut out = String::from("from,to,count,years_scanned,percent\n");
            for c in counts {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}",
                    c.from,
                    c.to,
                    c.count,
                    c.years_scanned,
                    format_percent(c.percent())
                );
            }
            out
        }
        OutputFormat::Json => json(&counts),
    }
}

/// Percentage with at most one decimal, trailing `.0` dropped: `27`, `26.9`.
pub fn format_percent(p: f64) -> String {
    let tenths = (p * 10.0).round() as i64;
    if tenths % 10 == 0 {
        format!("{}", tenths / 10)
    } else {
        format!("{}.{}", tenths / 10, tenths % 10)
    }
}
