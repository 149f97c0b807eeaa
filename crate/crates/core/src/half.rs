use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Serialize, Serializer};

use crate::error::{invalid, Result};

/// Integer or half-integer quantum number, stored as twice its value so that
/// ladder arithmetic stays exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HalfInt(i32);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);
    pub const HALF: HalfInt = HalfInt(1);

    pub const fn from_doubled(doubled: i32) -> Self {
        HalfInt(doubled)
    }

    pub const fn from_int(value: i32) -> Self {
        HalfInt(2 * value)
    }

    pub const fn doubled(self) -> i32 {
        self.0
    }

    pub fn value(self) -> f64 {
        f64::from(self.0) / 2.0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// Parses a real value that must be an exact multiple of 1/2.
    pub fn try_from_f64(x: f64) -> Result<Self> {
        let doubled = 2.0 * x;
        if !doubled.is_finite() || doubled.fract() != 0.0 || doubled.abs() > f64::from(i32::MAX) {
            return Err(invalid(format!("{x} is not a half-integer")));
        }
        Ok(HalfInt(doubled as i32))
    }

    /// Difference `self - other` as an integer, if it is one.
    pub fn integer_gap(self, other: HalfInt) -> Option<i32> {
        let d = self.0 - other.0;
        (d % 2 == 0).then_some(d / 2)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl Add<i32> for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: i32) -> HalfInt {
        HalfInt(self.0 + 2 * rhs)
    }
}

impl Sub<i32> for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: i32) -> HalfInt {
        HalfInt(self.0 - 2 * rhs)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_f64(self.value())
    }
}
