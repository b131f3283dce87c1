//! The fixed arithmetic Hebrew calendar.
//!
//! Months are numbered from Nisan (1) so that Tishrei is 7 and, in leap
//! years, Adar II is 13. Days within a year still accumulate in civil order,
//! starting at 1 Tishrei.
//!
//! The new year is found from the molad of Tishrei and the four
//! postponements:
//!
//! 1. molad zaken: a molad at or after 18h moves the new year to the next day;
//! 2. lo ADU: the new year never falls on Sunday, Wednesday or Friday;
//! 3. GaTaRaD: in a common year a Tuesday molad at or after 9h 204p moves
//!    the new year to Thursday;
//! 4. BeTUTaKPaT: after a leap year a Monday molad at or after 15h 589p
//!    moves the new year to Tuesday.
//!
//! Rules 3 and 4 look at the original molad, not the postponed day.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::daycount::{FixedDay, MoladInstant, Weekday, PARTS_PER_DAY, PARTS_PER_HOUR};
use crate::error::CalendarError;

pub const NISAN: u8 = 1;
pub const IYYAR: u8 = 2;
pub const SIVAN: u8 = 3;
pub const TAMMUZ: u8 = 4;
pub const AV: u8 = 5;
pub const ELUL: u8 = 6;
pub const TISHREI: u8 = 7;
pub const CHESHVAN: u8 = 8;
pub const KISLEV: u8 = 9;
pub const TEVET: u8 = 10;
pub const SHEVAT: u8 = 11;
/// Adar in a common year, Adar I in a leap year.
pub const ADAR: u8 = 12;
pub const ADAR_II: u8 = 13;

/// Mean lunation: 29d 12h 793p.
pub const LUNATION_PARTS: i64 = 29 * PARTS_PER_DAY + 12 * PARTS_PER_HOUR + 793;
/// Molad of Tishrei, year 1: day 2, 5h, 204p (BaHaRaD).
pub const EPOCH_MOLAD: MoladInstant = MoladInstant(PARTS_PER_DAY + 5 * PARTS_PER_HOUR + 204);

/// Fixed day of molad day index 1, the Sunday that opens the molad week.
const MOLAD_WEEK_SUNDAY: FixedDay = FixedDay(-1_373_428);

const MOLAD_ZAKEN: i64 = 18 * PARTS_PER_HOUR;
const GATARAD: i64 = 9 * PARTS_PER_HOUR + 204;
const BETUTAKPAT: i64 = 15 * PARTS_PER_HOUR + 589;

/// Days in 19 Hebrew years, in units of 1/98496 day (mean year = 35975351/98496 days).
pub const MEAN_YEAR_NUMERATOR: i64 = 35_975_351;
pub const MEAN_YEAR_DENOMINATOR: i64 = 98_496;

const MONTH_NAMES: [&str; 13] = [
    "Nisan", "Iyyar", "Sivan", "Tammuz", "Av", "Elul", "Tishrei", "Cheshvan", "Kislev", "Tevet",
    "Shevat", "Adar", "Adar II",
];

pub const fn is_hebrew_leap(year: i64) -> bool {
    (7 * year + 1).rem_euclid(19) < 7
}

pub const fn months_in_year(year: i64) -> u8 {
    if is_hebrew_leap(year) {
        13
    } else {
        12
    }
}

/// Months elapsed from the epoch molad to Tishrei of `year`.
pub const fn months_elapsed(year: i64) -> i64 {
    (235 * year - 234).div_euclid(19)
}

pub const fn molad_tishrei(year: i64) -> MoladInstant {
    MoladInstant(EPOCH_MOLAD.0 + LUNATION_PARTS * months_elapsed(year))
}

/// 1 Tishrei of `year`.
pub fn hebrew_new_year(year: i64) -> FixedDay {
    let molad = molad_tishrei(year);
    let molad_day = molad.day_index();
    let time = molad.time_of_day();
    let molad_weekday = Weekday::from_index(molad_day - 1);

    let day_index = if !is_hebrew_leap(year) && molad_weekday == Weekday::Tuesday && time >= GATARAD
    {
        molad_day + 2
    } else if is_hebrew_leap(year - 1) && molad_weekday == Weekday::Monday && time >= BETUTAKPAT {
        molad_day + 1
    } else {
        let mut day = molad_day;
        if time >= MOLAD_ZAKEN {
            day += 1;
        }
        if matches!(
            Weekday::from_index(day - 1),
            Weekday::Sunday | Weekday::Wednesday | Weekday::Friday
        ) {
            day += 1;
        }
        day
    };
    MOLAD_WEEK_SUNDAY + (day_index - 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum YearClass {
    /// Cheshvan and Kislev both 29 days.
    Deficient,
    /// Cheshvan 29, Kislev 30.
    Regular,
    /// Cheshvan and Kislev both 30 days.
    Complete,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct YearType {
    pub length: u16,
    pub class: YearClass,
    pub leap: bool,
}

impl YearType {
    pub const VALID_LENGTHS: [u16; 6] = [353, 354, 355, 383, 384, 385];

    fn from_length(length: i64) -> YearType {
        assert!(
            Self::VALID_LENGTHS.contains(&(length as u16)),
            "impossible Hebrew year length {length}"
        );
        let class = match length % 10 {
            3 => YearClass::Deficient,
            4 => YearClass::Regular,
            _ => YearClass::Complete,
        };
        YearType {
            length: length as u16,
            class,
            leap: length >= 383,
        }
    }
}

pub fn hebrew_year_length(year: i64) -> YearType {
    YearType::from_length(hebrew_new_year(year + 1) - hebrew_new_year(year))
}

fn month_length_in(year_type: YearType, month: u8) -> u8 {
    match month {
        NISAN | SIVAN | AV | TISHREI | SHEVAT => 30,
        IYYAR | TAMMUZ | ELUL | TEVET | ADAR_II => 29,
        ADAR if year_type.leap => 30,
        ADAR => 29,
        CHESHVAN if year_type.class == YearClass::Complete => 30,
        CHESHVAN => 29,
        KISLEV if year_type.class == YearClass::Deficient => 29,
        KISLEV => 30,
        _ => unreachable!("month validated by caller"),
    }
}

pub fn hebrew_month_length(year: i64, month: u8) -> Result<u8, CalendarError> {
    if month < 1 || month > months_in_year(year) {
        return Err(CalendarError::InvalidHebrewMonth { year, month });
    }
    Ok(month_length_in(hebrew_year_length(year), month))
}

/// Month numbers of `year` in civil order, Tishrei first.
pub fn civil_months(year: i64) -> impl Iterator<Item = u8> {
    let last = months_in_year(year);
    (TISHREI..=last).chain(NISAN..=ELUL)
}

pub fn month_name(year: i64, month: u8) -> &'static str {
    match month {
        ADAR if is_hebrew_leap(year) => "Adar I",
        1..=13 => MONTH_NAMES[usize::from(month - 1)],
        _ => "?",
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HebrewDate {
    pub year: i64,
    pub month: u8,
    pub day: u8,
}

impl HebrewDate {
    pub fn new(year: i64, month: u8, day: u8) -> Result<Self, CalendarError> {
        if year < 1 {
            return Err(CalendarError::HebrewYearOutOfRange(year));
        }
        let len = hebrew_month_length(year, month)?;
        if day < 1 || day > len {
            return Err(CalendarError::InvalidHebrewDate { year, month, day });
        }
        Ok(HebrewDate { year, month, day })
    }

    pub fn month_name(&self) -> &'static str {
        month_name(self.year, self.month)
    }

    pub fn to_fixed(self) -> FixedDay {
        hebrew_to_fixed(self)
    }

    pub fn from_fixed(day: FixedDay) -> Result<Self, CalendarError> {
        fixed_to_hebrew(day)
    }
}

/// Converts a validated Hebrew date to its fixed day.
pub fn hebrew_to_fixed(date: HebrewDate) -> FixedDay {
    let year_type = hebrew_year_length(date.year);
    let before: i64 = civil_months(date.year)
        .take_while(|&m| m != date.month)
        .map(|m| i64::from(month_length_in(year_type, m)))
        .sum();
    hebrew_new_year(date.year) + before + i64::from(date.day) - 1
}

pub fn hebrew_epoch() -> FixedDay {
    hebrew_new_year(1)
}

/// Hebrew year containing `day`.
pub fn hebrew_year_of(day: FixedDay) -> Result<i64, CalendarError> {
    let epoch = hebrew_epoch();
    if day < epoch {
        return Err(CalendarError::BeforeHebrewEpoch(day.0));
    }
    let mut year = ((day - epoch) * MEAN_YEAR_DENOMINATOR).div_euclid(MEAN_YEAR_NUMERATOR) + 1;
    while hebrew_new_year(year + 1) <= day {
        year += 1;
    }
    while hebrew_new_year(year) > day {
        year -= 1;
    }
    Ok(year)
}

pub fn fixed_to_hebrew(day: FixedDay) -> Result<HebrewDate, CalendarError> {
    let year = hebrew_year_of(day)?;
    let year_type = hebrew_year_length(year);
    let mut remaining = day - hebrew_new_year(year);
    for month in civil_months(year) {
        let len = i64::from(month_length_in(year_type, month));
        if remaining < len {
            return Ok(HebrewDate {
                year,
                month,
                day: (remaining + 1) as u8,
            });
        }
        remaining -= len;
    }
    unreachable!("day {day} lies past the end of Hebrew year {year}")
}

impl fmt::Display for HebrewDate {
    /// `5772 Kislev 29`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.year, self.month_name(), self.day)
    }
}

/// Parses a month given as a number (Nisan = 1) or an English name.
pub fn parse_month(year: i64, text: &str) -> Option<u8> {
    if let Ok(n) = text.parse::<u8>() {
        return Some(n);
    }
    let key: String = text
        .chars()
        .filter(|c| c.is_ascii_alphanumeric())
        .collect::<String>()
        .to_ascii_lowercase();
    let month = match key.as_str() {
        "nisan" => NISAN,
        "iyyar" | "iyar" => IYYAR,
        "sivan" => SIVAN,
        "tammuz" | "tamuz" => TAMMUZ,
        "av" => AV,
        "elul" => ELUL,
        "tishrei" | "tishri" => TISHREI,
        "cheshvan" | "heshvan" | "marcheshvan" => CHESHVAN,
        "kislev" => KISLEV,
        "tevet" | "teves" => TEVET,
        "shevat" | "shvat" => SHEVAT,
        "adar" | "adari" | "adar1" => ADAR,
        "adarii" | "adar2" => ADAR_II,
        "adarbet" | "veadar" => ADAR_II,
        _ => return None,
    };
    // Plain "Adar" in a leap year is ambiguous; it means the month of Purim there.
    if key == "adar" && is_hebrew_leap(year) {
        return Some(ADAR_II);
    }
    Some(month)
}

impl FromStr for HebrewDate {
    type Err = CalendarError;

    /// Accepts `YEAR-MONTH-DAY` where MONTH is a number (Nisan = 1) or a name,
    /// e.g. `5772-9-29` or `5772-Kislev-29`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CalendarError::Parse(s.to_string());
        let mut parts = s.trim().split('-');
        let (Some(y), Some(m), Some(d), None) =
            (parts.next(), parts.next(), parts.next(), parts.next())
        else {
            return Err(bad());
        };
        let year = y.parse::<i64>().map_err(|_| bad())?;
        let month = parse_month(year, m).ok_or_else(bad)?;
        let day = d.parse::<u8>().map_err(|_| bad())?;
        HebrewDate::new(year, month, day)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::daycount::{decompose_molad, weekday};
    use crate::gregorian::GregorianDate;
    use proptest::prelude::*;

    /// Leap positions of the Metonic cycle, written out.
    fn metonic_table_leap(year: i64) -> bool {
        [3, 6, 8, 11, 14, 17, 19].contains(&(((year - 1) % 19) + 1))
    }

    #[test]
    fn leap_examples() {
        assert!(is_hebrew_leap(19));
        assert!(!is_hebrew_leap(5772));
        assert!(is_hebrew_leap(5774));
        assert_eq!(months_in_year(19), 13);
        assert_eq!(months_in_year(5772), 12);
        assert_eq!(months_in_year(1), 12);
    }

    #[test]
    fn leap_formula_matches_metonic_table() {
        for y in 1..=30_000 {
            assert_eq!(is_hebrew_leap(y), metonic_table_leap(y), "year {y}");
        }
    }

    #[test]
    fn molad_examples() {
        assert_eq!(molad_tishrei(1), MoladInstant(31_524));
        assert_eq!(molad_tishrei(2), MoladInstant(9_216_720));
        assert_eq!(LUNATION_PARTS, 765_433);

        // Direct summation of lunations, month by month through the cycle.
        let mut parts = 31_524i64;
        let mut months = 0i64;
        for y in 1..5772 {
            let n = if metonic_table_leap(y) { 13 } else { 12 };
            for _ in 0..n {
                parts += 765_433;
            }
            months += n;
        }
        assert_eq!(months, months_elapsed(5772));
        assert_eq!(molad_tishrei(5772), MoladInstant(parts));
        // Tuesday 23h 158p counted from 18:00 Monday, i.e. Tuesday 17:08 and 14 parts.
        let p = decompose_molad(molad_tishrei(5772)).unwrap();
        assert_eq!(p.weekday(), Weekday::Tuesday);
        assert_eq!((p.hour, p.part), (23, 158));
    }

    #[test]
    fn epoch_is_monday_minus_1373427() {
        assert_eq!(hebrew_new_year(1), FixedDay(-1_373_427));
        assert_eq!(weekday(hebrew_new_year(1)), Weekday::Monday);
    }

    #[test]
    fn new_year_5772_is_2011_09_29() {
        let g = GregorianDate::new(2011, 9, 29).unwrap().to_fixed();
        assert_eq!(hebrew_new_year(5772), g);
        assert_eq!(g, FixedDay(734_409));
        assert_eq!(weekday(g), Weekday::Thursday);
        assert_eq!(
            hebrew_new_year(5773),
            GregorianDate::new(2012, 9, 17).unwrap().to_fixed()
        );
        assert_eq!(
            hebrew_new_year(5774),
            GregorianDate::new(2013, 9, 5).unwrap().to_fixed()
        );
    }

    #[test]
    fn new_year_avoids_adu() {
        for y in [5770, 1, 2, 3, 5772, 5773, 12_234] {
            let wd = weekday(hebrew_new_year(y));
            assert!(!matches!(
                wd,
                Weekday::Sunday | Weekday::Wednesday | Weekday::Friday
            ));
        }
    }

    #[test]
    fn year_types() {
        let t = hebrew_year_length(5772);
        assert_eq!(
            t,
            YearType {
                length: 354,
                class: YearClass::Regular,
                leap: false
            }
        );
        let t = hebrew_year_length(5773);
        assert_eq!(
            t,
            YearType {
                length: 353,
                class: YearClass::Deficient,
                leap: false
            }
        );
        assert!(hebrew_year_length(5774).leap);
    }

    #[test]
    fn month_lengths() {
        assert_eq!(hebrew_month_length(5772, CHESHVAN).unwrap(), 29);
        assert_eq!(hebrew_month_length(5772, KISLEV).unwrap(), 30);
        assert_eq!(hebrew_month_length(5773, KISLEV).unwrap(), 29);
        assert_eq!(hebrew_month_length(5772, ADAR).unwrap(), 29);
        assert_eq!(hebrew_month_length(5774, ADAR).unwrap(), 30);
        assert_eq!(hebrew_month_length(5774, ADAR_II).unwrap(), 29);
        assert!(hebrew_month_length(5772, ADAR_II).is_err());
        assert!(hebrew_month_length(5772, 0).is_err());
    }

    #[test]
    fn final_adar_of_common_years_is_29() {
        for y in (1..2000).filter(|&y| !is_hebrew_leap(y)) {
            assert_eq!(hebrew_month_length(y, ADAR).unwrap(), 29);
        }
    }

    #[test]
    fn to_fixed_examples() {
        let d = |y, m, d| HebrewDate::new(y, m, d).unwrap().to_fixed();
        assert_eq!(d(5772, TISHREI, 1), FixedDay(734_409));
        assert_eq!(d(5772, KISLEV, 25), FixedDay(734_409 + 30 + 29 + 24));
        assert_eq!(d(5772, KISLEV, 25), FixedDay(734_492));
        assert_eq!(d(5772, KISLEV, 29), FixedDay(734_496));
    }

    #[test]
    fn from_fixed_examples() {
        assert_eq!(
            fixed_to_hebrew(FixedDay(734_409)).unwrap(),
            HebrewDate::new(5772, TISHREI, 1).unwrap()
        );
        assert_eq!(
            fixed_to_hebrew(FixedDay(734_496)).unwrap(),
            HebrewDate::new(5772, KISLEV, 29).unwrap()
        );
        let d = FixedDay(500_000);
        assert_eq!(fixed_to_hebrew(d).unwrap().to_fixed(), d);
        assert_eq!(
            fixed_to_hebrew(FixedDay(-1_373_427)).unwrap(),
            HebrewDate::new(1, TISHREI, 1).unwrap()
        );
        assert!(matches!(
            fixed_to_hebrew(FixedDay(-1_373_428)),
            Err(CalendarError::BeforeHebrewEpoch(_))
        ));
    }

    #[test]
    fn invalid_dates_rejected() {
        assert!(HebrewDate::new(5772, KISLEV, 31).is_err());
        assert!(HebrewDate::new(5773, KISLEV, 30).is_err());
        assert!(HebrewDate::new(5772, 13, 1).is_err());
        assert!(HebrewDate::new(0, 7, 1).is_err());
    }

    #[test]
    fn display_and_parse() {
        let d = HebrewDate::new(5772, KISLEV, 29).unwrap();
        assert_eq!(d.to_string(), "5772 Kislev 29");
        assert_eq!("5772-Kislev-29".parse::<HebrewDate>().unwrap(), d);
        assert_eq!("5772-9-29".parse::<HebrewDate>().unwrap(), d);
        assert_eq!(month_name(5774, ADAR), "Adar I");
        assert_eq!(month_name(5772, ADAR), "Adar");
        assert_eq!("5774-Adar-14".parse::<HebrewDate>().unwrap().month, ADAR_II);
    }

    #[test]
    fn year_structure_over_full_range() {
        let mut prev = hebrew_new_year(1);
        for y in 1..=23_762 {
            let next = hebrew_new_year(y + 1);
            let length = next - prev;
            let t = YearType::from_length(length);
            assert_eq!(t.leap, is_hebrew_leap(y), "year {y}");
            assert!(!matches!(
                weekday(prev),
                Weekday::Sunday | Weekday::Wednesday | Weekday::Friday
            ));
            assert_eq!(
                molad_tishrei(y + 1).0 - molad_tishrei(y).0,
                LUNATION_PARTS * i64::from(months_in_year(y))
            );
            let month_total: i64 = civil_months(y)
                .map(|m| i64::from(month_length_in(t, m)))
                .sum();
            assert_eq!(month_total, length);
            prev = next;
        }
    }

    proptest! {
        #[test]
        fn roundtrip_fixed(d in -1_373_427i64..=9_000_000) {
            let h = fixed_to_hebrew(FixedDay(d)).unwrap();
            prop_assert_eq!(HebrewDate::new(h.year, h.month, h.day).unwrap(), h);
            prop_assert_eq!(h.to_fixed(), FixedDay(d));
        }
    }
}
