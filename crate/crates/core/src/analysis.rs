//! Scanning Gregorian years for coincidences, millennium buckets, gap
//! sequences and Fibonacci membership.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::AnalysisError;
use crate::festival::{coincides, Festival, Predicate};
use crate::hebrew::HebrewDate;

/// Largest Gregorian year a scan may reach.
pub const MAX_SCAN_YEAR: i64 = 25_000;

/// Gaps observed between consecutive coincidence years.
pub const FIBONACCI_GAPS: [i64; 4] = [2, 3, 5, 8];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Occurrence {
    pub year: i64,
    pub hebrew_date: HebrewDate,
    pub festival_day_index: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OccurrenceReport {
    pub festival: Festival,
    pub predicate: Predicate,
    pub from: i64,
    pub to: i64,
    pub years: Vec<i64>,
    pub gaps: Vec<i64>,
    pub first: Option<i64>,
    pub last: Option<i64>,
    pub occurrences: Vec<Occurrence>,
}

impl OccurrenceReport {
    fn from_occurrences(
        festival: Festival,
        predicate: Predicate,
        from: i64,
        to: i64,
        occurrences: Vec<Occurrence>,
    ) -> Self {
        let years: Vec<i64> = occurrences.iter().map(|o| o.year).collect();
        let gaps = successive_differences(&years);
        OccurrenceReport {
            festival,
            predicate,
            from,
            to,
            first: years.first().copied(),
            last: years.last().copied(),
            years,
            gaps,
            occurrences,
        }
    }

    /// Years of this report lying in `from..=to`.
    pub fn years_within(&self, from: i64, to: i64) -> Vec<i64> {
        self.years
            .iter()
            .copied()
            .filter(|y| (from..=to).contains(y))
            .collect()
    }
}

/// How a scan is split across threads. Output never depends on these settings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanOptions {
    /// `None` uses rayon's global pool; `Some(1)` runs on the calling thread.
    pub threads: Option<usize>,
    /// Years per work unit.
    pub chunk_years: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            threads: None,
            chunk_years: 256,
        }
    }
}

impl ScanOptions {
    pub const SEQUENTIAL: ScanOptions = ScanOptions {
        threads: Some(1),
        chunk_years: usize::MAX,
    };
}

fn check_range(from: i64, to: i64) -> Result<(), AnalysisError> {
    if from < 1 || from > to || to > MAX_SCAN_YEAR {
        return Err(AnalysisError::InvalidRange {
            from,
            to,
            max: MAX_SCAN_YEAR,
        });
    }
    Ok(())
}

fn occurrence(year: i64, festival: Festival, predicate: Predicate) -> Option<Occurrence> {
    let result = coincides(year, festival, predicate).expect("scan years are validated");
    result
        .festival_day_index
        .map(|festival_day_index| Occurrence {
            year,
            hebrew_date: result.hebrew_date_of_christmas,
            festival_day_index,
        })
}

fn scan_chunk(from: i64, to: i64, festival: Festival, predicate: Predicate) -> Vec<Occurrence> {
    (from..=to)
        .filter_map(|y| occurrence(y, festival, predicate))
        .collect()
}

/// All years in `from..=to` whose Christmas falls in `festival` under `predicate`.
pub fn scan_range(
    from: i64,
    to: i64,
    festival: Festival,
    predicate: Predicate,
) -> Result<OccurrenceReport, AnalysisError> {
    scan_range_with(from, to, festival, predicate, ScanOptions::default())
}

pub fn scan_range_with(
    from: i64,
    to: i64,
    festival: Festival,
    predicate: Predicate,
    options: ScanOptions,
) -> Result<OccurrenceReport, AnalysisError> {
    check_range(from, to)?;
    let chunk = options.chunk_years.clamp(1, (to - from + 1) as usize) as i64;
    let starts: Vec<i64> = (from..=to).step_by(chunk as usize).collect();
    let run = |start: &i64| scan_chunk(*start, (*start + chunk - 1).min(to), festival, predicate);

    let chunks: Vec<Vec<Occurrence>> = match options.threads {
        Some(1) => starts.iter().map(run).collect(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(|| starts.par_iter().map(run).collect()),
        None => starts.par_iter().map(run).collect(),
    };
    let occurrences = chunks.into_iter().flatten().collect();
    Ok(OccurrenceReport::from_occurrences(
        festival,
        predicate,
        from,
        to,
        occurrences,
    ))
}

/// First coincidence year strictly after `year`, searching up to `limit`.
pub fn next_occurrence_after(
    year: i64,
    limit: i64,
    festival: Festival,
    predicate: Predicate,
) -> Option<i64> {
    (year + 1..=limit.min(MAX_SCAN_YEAR)).find(|&y| occurrence(y, festival, predicate).is_some())
}

/// Where millennium buckets start.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BucketConvention {
    /// 1000k+1 ..= 1000(k+1), e.g. 2001–3000 is the third millennium.
    #[default]
    Ordinal,
    /// 1000k ..= 1000k+999, e.g. 2000–2999.
    Round,
}

impl BucketConvention {
    fn bucket_of(self, year: i64) -> i64 {
        match self {
            BucketConvention::Ordinal => (year - 1).div_euclid(1000),
            BucketConvention::Round => year.div_euclid(1000),
        }
    }

    fn bounds(self, bucket: i64) -> (i64, i64) {
        match self {
            BucketConvention::Ordinal => (1000 * bucket + 1, 1000 * (bucket + 1)),
            BucketConvention::Round => (1000 * bucket, 1000 * bucket + 999),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MillenniumCount {
    pub from: i64,
    pub to: i64,
    pub count: usize,
    /// Years of the bucket actually inside the scanned range.
    pub years_scanned: i64,
}

impl MillenniumCount {
    /// Share of scanned years that coincide, as a percentage.
    pub fn percent(&self) -> f64 {
        if self.years_scanned == 0 {
            return 0.0;
        }
        100.0 * self.count as f64 / self.years_scanned as f64
    }
}

/// Buckets every millennium overlapping the report's range and counts its years.
pub fn count_by_millennium(
    report: &OccurrenceReport,
    convention: BucketConvention,
) -> Vec<MillenniumCount> {
    let first = convention.bucket_of(report.from);
    let last = convention.bucket_of(report.to);
    let mut buckets: Vec<MillenniumCount> = (first..=last)
        .map(|b| {
            let (from, to) = convention.bounds(b);
            let years_scanned = to.min(report.to) - from.max(report.from) + 1;
            MillenniumCount {
                from,
                to,
                count: 0,
                years_scanned,
            }
        })
        .collect();
    for &y in &report.years {
        buckets[(convention.bucket_of(y) - first) as usize].count += 1;
    }
    buckets
}

fn successive_differences(years: &[i64]) -> Vec<i64> {
    years.windows(2).map(|w| w[1] - w[0]).collect()
}

/// Consecutive differences of a strictly increasing sequence.
pub fn gap_sequence(years: &[i64]) -> Result<Vec<i64>, AnalysisError> {
    if let Some(index) = years.windows(2).position(|w| w[1] <= w[0]) {
        return Err(AnalysisError::NotIncreasing {
            index: index + 1,
            prev: years[index],
            next: years[index + 1],
        });
    }
    Ok(successive_differences(years))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapViolation {
    pub index: usize,
    pub gap: i64,
    /// The two years the gap separates, when the years were supplied.
    pub years: Option<(i64, i64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapVerdict {
    pub allowed_set: BTreeSet<i64>,
    pub ok: bool,
    pub violations: Vec<GapViolation>,
}

/// Checks every gap against `allowed`, collecting all violations.
///
/// `years`, when given, must be the sequence the gaps came from; it is used
/// to report the offending pair.
pub fn verify_gap_set(gaps: &[i64], allowed: &BTreeSet<i64>, years: Option<&[i64]>) -> GapVerdict {
    let violations: Vec<GapViolation> = gaps
        .iter()
        .enumerate()
        .filter(|(_, g)| !allowed.contains(g))
        .map(|(index, &gap)| GapViolation {
            index,
            gap,
            years: years.and_then(|ys| Some((*ys.get(index)?, *ys.get(index + 1)?))),
        })
        .collect();
    GapVerdict {
        allowed_set: allowed.clone(),
        ok: violations.is_empty(),
        violations,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapEntry {
    pub gap: i64,
    pub fibonacci: bool,
}

/// Gaps of a year list, each flagged for Fibonacci membership, plus the verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapReport {
    pub years: Vec<i64>,
    pub gaps: Vec<GapEntry>,
    pub verdict: GapVerdict,
}

pub fn analyze_gaps(years: &[i64], allowed: &BTreeSet<i64>) -> Result<GapReport, AnalysisError> {
    let gaps = gap_sequence(years)?;
    let verdict = verify_gap_set(&gaps, allowed, Some(years));
    let gaps = gaps
        .into_iter()
        .map(|gap| {
            Ok(GapEntry {
                gap,
                fibonacci: is_fibonacci(gap)?,
            })
        })
        .collect::<Result<_, AnalysisError>>()?;
    Ok(GapReport {
        years: years.to_vec(),
        gaps,
        verdict,
    })
}

fn is_perfect_square(n: u128) -> bool {
    let r = n.isqrt();
    r * r == n
}

/// `n` is Fibonacci iff 5n²+4 or 5n²−4 is a perfect square.
pub fn is_fibonacci(n: i64) -> Result<bool, AnalysisError> {
    if n < 1 {
        return Err(AnalysisError::NonPositive(n));
    }
    let five_sq = 5 * (n as u128) * (n as u128);
    Ok(is_perfect_square(five_sq + 4) || is_perfect_square(five_sq - 4))
}

/// Whether the mean Hebrew year (35975351/98496 days) exceeds the mean
/// Gregorian year (146097/400 days). Compared exactly by cross-multiplication.
pub fn hebrew_year_outruns_gregorian() -> bool {
    use crate::gregorian::DAYS_PER_400_YEARS;
    use crate::hebrew::{MEAN_YEAR_DENOMINATOR, MEAN_YEAR_NUMERATOR};
    MEAN_YEAR_NUMERATOR * 400 > DAYS_PER_400_YEARS * MEAN_YEAR_DENOMINATOR
}
