//! Linear day count, weekdays, and exact molad time arithmetic.
//!
//! Every calendar in this crate converts to and from [`FixedDay`], a plain
//! signed day number with day 1 on Gregorian 0001-01-01 (a Monday). Molad
//! times are counted in halakim ("parts", 1/1080 of an hour) from 18:00 at
//! the start of the Sunday that opens the molad week.

use std::fmt;
use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};

use crate::error::CalendarError;

/// Parts in one hour.
pub const PARTS_PER_HOUR: i64 = 1080;
/// Parts in one day.
pub const PARTS_PER_DAY: i64 = 24 * PARTS_PER_HOUR;

/// A day in the shared linear day count. Day 1 is Gregorian 0001-01-01.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FixedDay(pub i64);

impl FixedDay {
    pub const fn new(day: i64) -> Self {
        FixedDay(day)
    }

    pub const fn get(self) -> i64 {
        self.0
    }

    pub fn weekday(self) -> Weekday {
        weekday(self)
    }
}

impl Add<i64> for FixedDay {
    type Output = FixedDay;

    fn add(self, days: i64) -> FixedDay {
        FixedDay(self.0 + days)
    }
}

impl Sub<i64> for FixedDay {
    type Output = FixedDay;

    fn sub(self, days: i64) -> FixedDay {
        FixedDay(self.0 - days)
    }
}

impl Sub for FixedDay {
    type Output = i64;

    fn sub(self, other: FixedDay) -> i64 {
        self.0 - other.0
    }
}

impl fmt::Display for FixedDay {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Weekday {
    Sunday,
    Monday,
    Tuesday,
    Wednesday,
    Thursday,
    Friday,
    Saturday,
}

impl Weekday {
    pub const ALL: [Weekday; 7] = [
        Weekday::Sunday,
        Weekday::Monday,
        Weekday::Tuesday,
        Weekday::Wednesday,
        Weekday::Thursday,
        Weekday::Friday,
        Weekday::Saturday,
    ];

    /// Index with 0 = Sunday.
    pub const fn index(self) -> u8 {
        self as u8
    }

    /// Maps any integer onto a weekday, mod 7, 0 = Sunday.
    pub const fn from_index(index: i64) -> Weekday {
        Weekday::ALL[index.rem_euclid(7) as usize]
    }

    pub const fn name(self) -> &'static str {
        match self {
            Weekday::Sunday => "Sunday",
            Weekday::Monday => "Monday",
            Weekday::Tuesday => "Tuesday",
            Weekday::Wednesday => "Wednesday",
            Weekday::Thursday => "Thursday",
            Weekday::Friday => "Friday",
            Weekday::Saturday => "Saturday",
        }
    }
}

impl fmt::Display for Weekday {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Weekday of a fixed day; day 0 is a Sunday. Correct for negative days.
pub const fn weekday(day: FixedDay) -> Weekday {
    Weekday::from_index(day.0)
}

/// An exact molad timestamp, in parts since 18:00 opening day 1 of the molad week.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MoladInstant(pub i64);

/// A molad split into (day index, hour, part). Day index 1 is a Sunday.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MoladParts {
    pub day: i64,
    pub hour: i64,
    pub part: i64,
}

impl MoladParts {
    pub const fn to_instant(self) -> MoladInstant {
        MoladInstant(PARTS_PER_DAY * (self.day - 1) + PARTS_PER_HOUR * self.hour + self.part)
    }

    /// Weekday of the molad's day index (day index 1 is a Sunday).
    pub const fn weekday(self) -> Weekday {
        Weekday::from_index(self.day - 1)
    }
}

impl MoladInstant {
    pub const fn parts(self) -> i64 {
        self.0
    }

    /// Parts elapsed since the start (18:00) of the molad's day.
    pub const fn time_of_day(self) -> i64 {
        self.0.rem_euclid(PARTS_PER_DAY)
    }

    /// Day index of the molad, 1-based. Defined for negative instants too.
    pub const fn day_index(self) -> i64 {
        self.0.div_euclid(PARTS_PER_DAY) + 1
    }

    pub fn decompose(self) -> Result<MoladParts, CalendarError> {
        decompose_molad(self)
    }
}

/// Splits a non-negative molad instant into its unique (day, hour, part) triple.
pub fn decompose_molad(molad: MoladInstant) -> Result<MoladParts, CalendarError> {
    if molad.0 < 0 {
        return Err(CalendarError::NegativeMolad(molad.0));
    }
    let within_day = molad.time_of_day();
    Ok(MoladParts {
        day: molad.day_index(),
        hour: within_day / PARTS_PER_HOUR,
        part: within_day % PARTS_PER_HOUR,
    })
}
