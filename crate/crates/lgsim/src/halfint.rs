//! Exact half-integer arithmetic for spin quantum numbers.
//!
//! Spin magnitudes and magnetic quantum numbers live on the lattice
//! {0, ±1/2, ±1, ±3/2, ...}. Storing the doubled value as an integer keeps
//! j, m, j−m and block offsets exact, so basis indices and parity signs
//! never depend on floating-point comparisons.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use crate::error::Error;

/// A half-integer stored as its doubled value: `HalfInt::from_twice(5)` is 5/2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt {
    twice: i32,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };

    /// The integer `n` as a half-integer.
    pub const fn new(n: i32) -> Self {
        HalfInt { twice: 2 * n }
    }

    /// Construct from the doubled value.
    pub const fn from_twice(twice: i32) -> Self {
        HalfInt { twice }
    }

    /// The doubled value (always exact).
    pub const fn twice(self) -> i32 {
        self.twice
    }

    /// Floating-point value. Exact: doubled values are small integers.
    pub fn value(self) -> f64 {
        f64::from(self.twice) / 2.0
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    /// `self − other` when that difference is an integer, `None` when the two
    /// values lie on different lattices (integer vs half-odd).
    pub fn integer_offset_from(self, other: HalfInt) -> Option<i32> {
        let d = self.twice - other.twice;
        (d % 2 == 0).then_some(d / 2)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice + rhs.twice }
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice - rhs.twice }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { twice: -self.twice }
    }
}

impl fmt::Display for HalfInt {
    /// Integers print bare ("2", "-1"), half-odd values print as "n/2" ("5/2", "-3/2").
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    /// Accepts an integer ("2", "-1") or an explicit halves form ("5/2", "-3/2").
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let malformed = || {
            Error::Malformed(format!(
                "expected a half-integer like \"2\" or \"5/2\", got {s:?}"
            ))
        };
        if let Some((num, den)) = s.split_once('/') {
            if den.trim() != "2" {
                return Err(malformed());
            }
            let twice: i32 = num.trim().parse().map_err(|_| malformed())?;
            Ok(HalfInt::from_twice(twice))
        } else {
            let n: i32 = s.parse().map_err(|_| malformed())?;
            Ok(HalfInt::new(n))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn doubled_representation_round_trips() {
        for twice in -20..=20 {
            let h = HalfInt::from_twice(twice);
            assert_eq!(h.twice(), twice);
            assert_eq!(h.value(), f64::from(twice) / 2.0);
            assert_eq!(h.is_integer(), twice % 2 == 0);
        }
    }

    #[test]
    fn arithmetic_is_exact() {
        let a = HalfInt::from_twice(5); // 5/2
        let b = HalfInt::from_twice(3); // 3/2
        assert_eq!(a + b, HalfInt::new(4));
        assert_eq!(a - b, HalfInt::new(1));
        assert_eq!(-a, HalfInt::from_twice(-5));
        assert_eq!(a.integer_offset_from(b), Some(1));
        assert_eq!(b.integer_offset_from(a), Some(-1));
        // Integer and half-odd values are on different lattices.
        assert_eq!(a.integer_offset_from(HalfInt::new(1)), None);
    }

    #[test]
    fn display_formats() {
        assert_eq!(HalfInt::new(2).to_string(), "2");
        assert_eq!(HalfInt::new(-1).to_string(), "-1");
        assert_eq!(HalfInt::from_twice(5).to_string(), "5/2");
        assert_eq!(HalfInt::from_twice(-3).to_string(), "-3/2");
        assert_eq!(HalfInt::ZERO.to_string(), "0");
    }

    #[test]
    fn parses_integers_and_halves() {
        assert_eq!("2".parse::<HalfInt>().unwrap(), HalfInt::new(2));
        assert_eq!("-1".parse::<HalfInt>().unwrap(), HalfInt::new(-1));
        assert_eq!("5/2".parse::<HalfInt>().unwrap(), HalfInt::from_twice(5));
        assert_eq!("-3/2".parse::<HalfInt>().unwrap(), HalfInt::from_twice(-3));
        assert_eq!(" 1/2 ".parse::<HalfInt>().unwrap(), HalfInt::from_twice(1));
        // Doubled-value round trip through Display.
        for twice in -9..=9 {
            let h = HalfInt::from_twice(twice);
            assert_eq!(h.to_string().parse::<HalfInt>().unwrap(), h);
        }
    }

    #[test]
    fn rejects_malformed_strings() {
        for bad in ["", "x", "5/3", "5/", "/2", "2.5", "1/2/2", "5 / 2x"] {
            assert!(bad.parse::<HalfInt>().is_err(), "accepted {bad:?}");
        }
    }
}
