//! Proleptic Gregorian calendar. Years before 1582 use the same rules;
//! no Julian transition is modelled.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::daycount::FixedDay;
use crate::error::CalendarError;

/// Days in 400 Gregorian years. Divisible by 7.
pub const DAYS_PER_400_YEARS: i64 = 146_097;

const DAYS_BEFORE_MONTH: [i64; 12] = [0, 31, 59, 90, 120, 151, 181, 212, 243, 273, 304, 334];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GregorianDate {
    pub year: i64,
    pub month: u8,
    pub day: u8,
}

pub const fn is_gregorian_leap(year: i64) -> bool {
    year.rem_euclid(4) == 0 && (year.rem_euclid(100) != 0 || year.rem_euclid(400) == 0)
}

pub const fn gregorian_month_length(year: i64, month: u8) -> u8 {
    match month {
        4 | 6 | 9 | 11 => 30,
        2 if is_gregorian_leap(year) => 29,
        2 => 28,
        _ => 31,
    }
}

impl GregorianDate {
    pub fn new(year: i64, month: u8, day: u8) -> Result<Self, CalendarError> {
        if year < 1 {
            return Err(CalendarError::GregorianYearOutOfRange(year));
        }
        if !(1..=12).contains(&month) || day < 1 || day > gregorian_month_length(year, month) {
            return Err(CalendarError::InvalidGregorianDate { year, month, day });
        }
        Ok(GregorianDate { year, month, day })
    }

    pub fn to_fixed(self) -> FixedDay {
        gregorian_to_fixed(self)
    }

    pub fn from_fixed(day: FixedDay) -> Result<Self, CalendarError> {
        fixed_to_gregorian(day)
    }

    fn day_of_year(self) -> i64 {
        let leap_bump = if self.month > 2 && is_gregorian_leap(self.year) {
            1
        } else {
            0
        };
        DAYS_BEFORE_MONTH[usize::from(self.month - 1)] + leap_bump + i64::from(self.day)
    }
}

/// Days before January 1 of `year`.
const fn days_before_year(year: i64) -> i64 {
    let y = year - 1;
    365 * y + y.div_euclid(4) - y.div_euclid(100) + y.div_euclid(400)
}

pub fn gregorian_to_fixed(date: GregorianDate) -> FixedDay {
    FixedDay(days_before_year(date.year) + date.day_of_year())
}

pub fn fixed_to_gregorian(day: FixedDay) -> Result<GregorianDate, CalendarError> {
    if day.0 < 1 {
        return Err(CalendarError::BeforeGregorianEpoch(day.0));
    }
    let d0 = day.0 - 1;
    let n400 = d0.div_euclid(DAYS_PER_400_YEARS);
    let d1 = d0.rem_euclid(DAYS_PER_400_YEARS);
    let n100 = d1 / 36_524;
    let d2 = d1 % 36_524;
    let n4 = d2 / 1_461;
    let d3 = d2 % 1_461;
    let n1 = d3 / 365;
    let mut year = 400 * n400 + 100 * n100 + 4 * n4 + n1;
    // Last day of a leap cycle (Dec 31 of a year divisible by 4 or 400).
    if n100 != 4 && n1 != 4 {
        year += 1;
    }

    let mut remaining = day.0 - days_before_year(year);
    let mut month = 1u8;
    loop {
        let len = i64::from(gregorian_month_length(year, month));
        if remaining <= len {
            break;
        }
        remaining -= len;
        month += 1;
    }
    Ok(GregorianDate {
        year,
        month,
        day: remaining as u8,
    })
}

/// Fixed day of December 25 in the given Gregorian year.
pub fn christmas(year: i64) -> Result<FixedDay, CalendarError> {
    Ok(GregorianDate::new(year, 12, 25)?.to_fixed())
}

impl fmt::Display for GregorianDate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:04}-{:02}-{:02}", self.year, self.month, self.day)
    }
}

impl FromStr for GregorianDate {
    type Err = CalendarError;

    /// Parses `YYYY-MM-DD`; years may have any number of digits (`16103-12-25`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CalendarError::Parse(s.to_string());
        let mut parts = s.trim().split('-');
        let (Some(y), Some(m), Some(d), None) =
            (parts.next(), parts.next(), parts.next(), parts.next())
        else {
            return Err(bad());
        };
        let year = y.parse::<i64>().map_err(|_| bad())?;
        let month = m.parse::<u8>().map_err(|_| bad())?;
        let day = d.parse::<u8>().map_err(|_| bad())?;
        GregorianDate::new(year, month, day)
    }
}
