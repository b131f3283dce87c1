//! Exact arithmetic for the fixed Hebrew calendar and the proleptic
//! Gregorian calendar, plus tools for finding Gregorian years in which
//! Christmas falls inside a Jewish festival.
//!
//! ```
//! use festcal_core::{coincides, Festival, Predicate};
//!
//! let r = coincides(2011, Festival::HANUKKAH, Predicate::DEFAULT).unwrap();
//! assert_eq!(r.hebrew_date_of_christmas.to_string(), "5772 Kislev 29");
//! assert_eq!(r.festival_day_index, Some(5));
//! ```

pub mod analysis;
pub mod checks;
pub mod daycount;
pub mod error;
pub mod festival;
pub mod gregorian;
pub mod hebrew;
pub mod render;

pub use analysis::{
    analyze_gaps, count_by_millennium, gap_sequence, is_fibonacci, scan_range, scan_range_with,
    verify_gap_set, BucketConvention, GapReport, GapVerdict, MillenniumCount, OccurrenceReport,
    ScanOptions, FIBONACCI_GAPS, MAX_SCAN_YEAR,
};
pub use daycount::{decompose_molad, weekday, FixedDay, MoladInstant, MoladParts, Weekday};
pub use error::{AnalysisError, CalendarError};
pub use festival::{
    coincides, festival_span, CoincidenceResult, Festival, FestivalKind, FestivalSpan, Predicate,
};
pub use gregorian::{
    christmas, fixed_to_gregorian, gregorian_to_fixed, is_gregorian_leap, GregorianDate,
};
pub use hebrew::{
    fixed_to_hebrew, hebrew_month_length, hebrew_new_year, hebrew_to_fixed, hebrew_year_length,
    is_hebrew_leap, molad_tishrei, months_in_year, HebrewDate, YearClass, YearType,
};
pub use render::OutputFormat;
