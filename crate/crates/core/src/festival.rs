//! Festival spans and the Christmas coincidence predicate.
//!
//! A Hebrew day is labelled by the Gregorian civil day that shares its
//! daylight hours, so "December 25 is the 5th day of Hanukkah" means the
//! 5th candle was lit on the evening of December 24.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::daycount::FixedDay;
use crate::error::{AnalysisError, CalendarError};
use crate::gregorian::christmas;
use crate::hebrew::{fixed_to_hebrew, HebrewDate, KISLEV, NISAN, SIVAN, TISHREI};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FestivalKind {
    Hanukkah,
    Sukkot,
    RoshHashanah,
    Pesach,
    Shavuot,
}

impl FestivalKind {
    pub const ALL: [FestivalKind; 5] = [
        FestivalKind::RoshHashanah,
        FestivalKind::Sukkot,
        FestivalKind::Hanukkah,
        FestivalKind::Pesach,
        FestivalKind::Shavuot,
    ];

    pub const fn name(self) -> &'static str {
        match self {
            FestivalKind::Hanukkah => "Hanukkah",
            FestivalKind::Sukkot => "Sukkot",
            FestivalKind::RoshHashanah => "Rosh Hashanah",
            FestivalKind::Pesach => "Pesach",
            FestivalKind::Shavuot => "Shavuot",
        }
    }

    /// Lower-case identifier used on the command line and in JSON.
    pub const fn key(self) -> &'static str {
        match self {
            FestivalKind::Hanukkah => "hanukkah",
            FestivalKind::Sukkot => "sukkot",
            FestivalKind::RoshHashanah => "roshhashanah",
            FestivalKind::Pesach => "pesach",
            FestivalKind::Shavuot => "shavuot",
        }
    }
}

impl FromStr for FestivalKind {
    type Err = CalendarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect::<String>()
            .to_ascii_lowercase();
        Ok(match key.as_str() {
            "hanukkah" | "chanukah" | "hanukah" | "chanukkah" => FestivalKind::Hanukkah,
            "sukkot" | "succot" | "sukkos" => FestivalKind::Sukkot,
            "roshhashanah" | "roshhashana" => FestivalKind::RoshHashanah,
            "pesach" | "passover" => FestivalKind::Pesach,
            "shavuot" | "shavuos" => FestivalKind::Shavuot,
            _ => return Err(CalendarError::Parse(s.to_string())),
        })
    }
}

/// A festival together with its length options.
///
/// `shemini_atzeret` only affects Sukkot; `diaspora` only Pesach and Shavuot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Festival {
    pub kind: FestivalKind,
    pub shemini_atzeret: bool,
    pub diaspora: bool,
}

impl Festival {
    pub const fn new(kind: FestivalKind) -> Self {
        Festival {
            kind,
            shemini_atzeret: false,
            diaspora: false,
        }
    }

    pub const HANUKKAH: Festival = Festival::new(FestivalKind::Hanukkah);
    pub const SUKKOT: Festival = Festival::new(FestivalKind::Sukkot);

    pub const fn with_shemini_atzeret(mut self, on: bool) -> Self {
        self.shemini_atzeret = on;
        self
    }

    pub const fn with_diaspora(mut self, on: bool) -> Self {
        self.diaspora = on;
        self
    }

    /// Number of days in the span.
    pub const fn length(&self) -> i64 {
        match self.kind {
            FestivalKind::Hanukkah => 8,
            FestivalKind::Sukkot if self.shemini_atzeret => 8,
            FestivalKind::Sukkot => 7,
            FestivalKind::RoshHashanah => 2,
            FestivalKind::Pesach if self.diaspora => 8,
            FestivalKind::Pesach => 7,
            FestivalKind::Shavuot if self.diaspora => 2,
            FestivalKind::Shavuot => 1,
        }
    }

    /// Hebrew (month, day) of the first day.
    pub const fn first_day(&self) -> (u8, u8) {
        match self.kind {
            FestivalKind::Hanukkah => (KISLEV, 25),
            FestivalKind::Sukkot => (TISHREI, 15),
            FestivalKind::RoshHashanah => (TISHREI, 1),
            FestivalKind::Pesach => (NISAN, 15),
            FestivalKind::Shavuot => (SIVAN, 6),
        }
    }
}

impl fmt::Display for Festival {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.kind.name())
    }
}

/// Inclusive range of fixed days covered by a festival in one Hebrew year.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FestivalSpan {
    pub hebrew_year: i64,
    pub first: FixedDay,
    pub last: FixedDay,
}

impl FestivalSpan {
    pub fn len(&self) -> i64 {
        self.last - self.first + 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() <= 0
    }

    pub fn contains(&self, day: FixedDay) -> bool {
        self.first <= day && day <= self.last
    }

    /// 1-based day index of `day` within the span.
    pub fn day_index(&self, day: FixedDay) -> Option<i64> {
        self.contains(day).then(|| day - self.first + 1)
    }
}

pub fn festival_span(festival: Festival, hebrew_year: i64) -> Result<FestivalSpan, CalendarError> {
    let (month, day) = festival.first_day();
    let first = HebrewDate::new(hebrew_year, month, day)?.to_fixed();
    Ok(FestivalSpan {
        hebrew_year,
        first,
        last: first + (festival.length() - 1),
    })
}

/// How Christmas is compared with the festival: the day tested is
/// December 25 shifted by `offset_days`.
///
/// * `0`: December 25 is a festival day (a Hanukkah candle is lit on the
///   evening of December 24).
/// * `-1`: December 24 is a festival day.
/// * `+1`: December 26 is a festival day (a candle is lit on Christmas night).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Predicate {
    pub offset_days: i64,
}

impl Predicate {
    pub const DEFAULT: Predicate = Predicate { offset_days: 0 };
    pub const VARIANTS: [Predicate; 3] = [
        Predicate { offset_days: -1 },
        Predicate { offset_days: 0 },
        Predicate { offset_days: 1 },
    ];

    pub fn with_offset(offset_days: i64) -> Result<Self, AnalysisError> {
        if !(-1..=1).contains(&offset_days) {
            return Err(AnalysisError::InvalidOffset(offset_days));
        }
        Ok(Predicate { offset_days })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoincidenceResult {
    pub coincides: bool,
    pub hebrew_date_of_christmas: HebrewDate,
    pub festival_day_index: Option<i64>,
}

pub fn coincides(
    gregorian_year: i64,
    festival: Festival,
    predicate: Predicate,
) -> Result<CoincidenceResult, CalendarError> {
    let day = christmas(gregorian_year)? + predicate.offset_days;
    let hebrew = fixed_to_hebrew(day)?;
    let span = festival_span(festival, hebrew.year)?;
    let index = span.day_index(day);
    Ok(CoincidenceResult {
        coincides: index.is_some(),
        hebrew_date_of_christmas: hebrew,
        festival_day_index: index,
    })
}

/// Every festival (with the given options) that `day` belongs to, with its day index.
pub fn festivals_on(day: FixedDay, shemini_atzeret: bool, diaspora: bool) -> Vec<(Festival, i64)> {
    let Ok(hebrew) = fixed_to_hebrew(day) else {
        return Vec::new();
    };
    FestivalKind::ALL
        .iter()
        .map(|&k| {
            Festival::new(k)
                .with_shemini_atzeret(shemini_atzeret)
                .with_diaspora(diaspora)
        })
        .filter_map(|f| {
            let span = festival_span(f, hebrew.year).ok()?;
            Some((f, span.day_index(day)?))
        })
        .collect()
}
