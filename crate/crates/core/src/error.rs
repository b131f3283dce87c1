use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CalendarError {
    #[error("molad instant must be non-negative, got {0} parts")]
    NegativeMolad(i64),
    #[error("Hebrew year must be at least 1, got {0}")]
    HebrewYearOutOfRange(i64),
    #[error("month {month} does not exist in Hebrew year {year}")]
    InvalidHebrewMonth { year: i64, month: u8 },
    #[error("invalid Hebrew date {year}-{month}-{day}")]
    InvalidHebrewDate { year: i64, month: u8, day: u8 },
    #[error("day {0} precedes the Hebrew epoch")]
    BeforeHebrewEpoch(i64),
    #[error("Gregorian year must be at least 1, got {0}")]
    GregorianYearOutOfRange(i64),
    #[error("invalid Gregorian date {year}-{month}-{day}")]
    InvalidGregorianDate { year: i64, month: u8, day: u8 },
    #[error("day {0} precedes Gregorian 0001-01-01")]
    BeforeGregorianEpoch(i64),
    #[error("cannot parse date {0:?}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("scan range {from}..={to} is invalid (need 1 <= from <= to <= {max})")]
    InvalidRange { from: i64, to: i64, max: i64 },
    #[error("sequence is not strictly increasing at index {index} ({prev} then {next})")]
    NotIncreasing { index: usize, prev: i64, next: i64 },
    #[error("Fibonacci membership is defined for n >= 1, got {0}")]
    NonPositive(i64),
    #[error("predicate offset must be -1, 0 or 1, got {0}")]
    InvalidOffset(i64),
}
