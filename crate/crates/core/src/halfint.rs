//! Exact half-integers.
//!
//! Infinity-type exponents and automorphic critical points live in
//! `Z + k/2`. A [`HalfInt`] stores twice its value, so every operation is
//! plain integer arithmetic.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };

    pub const fn from_int(v: i64) -> Self {
        HalfInt { twice: 2 * v }
    }

    /// The half-integer `twice / 2`.
    pub const fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub const fn twice(self) -> i64 {
        self.twice
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub fn to_integer(self) -> Option<i64> {
        self.is_integer().then_some(self.twice / 2)
    }

    /// Multiply by an integer; the product may land back in `Z`.
    pub fn mul_int(self, k: i64) -> Self {
        HalfInt { twice: self.twice * k }
    }

    /// Whether `self` lies in the coset `Z + parity/2`.
    pub fn in_coset(self, parity: i64) -> bool {
        (self.twice - parity).rem_euclid(2) == 0
    }
}

impl From<i64> for HalfInt {
    fn from(v: i64) -> Self {
        HalfInt::from_int(v)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice + rhs.twice }
    }
}

impl Add<i64> for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: i64) -> HalfInt {
        HalfInt { twice: self.twice + 2 * rhs }
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice - rhs.twice }
    }
}

impl Sub<i64> for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: i64) -> HalfInt {
        HalfInt { twice: self.twice - 2 * rhs }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { twice: -self.twice }
    }
}

impl fmt::Display for HalfInt {
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

    /// Accepts `"k"` or `"k/2"` for any integer `k`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidHalfInt(s.to_string());
        let t = s.trim();
        match t.split_once('/') {
            None => t.parse::<i64>().map(HalfInt::from_int).map_err(|_| bad()),
            Some((num, den)) => {
                let num: i64 = num.trim().parse().map_err(|_| bad())?;
                match den.trim() {
                    "1" => Ok(HalfInt::from_int(num)),
                    "2" => Ok(HalfInt::from_twice(num)),
                    _ => Err(bad()),
                }
            }
        }
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.to_integer() {
            Some(v) => serializer.serialize_i64(v),
            None => serializer.serialize_str(&self.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for HalfInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct HalfIntVisitor;

        impl Visitor<'_> for HalfIntVisitor {
            type Value = HalfInt;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a string \"k/2\"")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<HalfInt, E> {
                Ok(HalfInt::from_int(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<HalfInt, E> {
                i64::try_from(v)
                    .map(HalfInt::from_int)
                    .map_err(|_| E::custom("integer out of range"))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<HalfInt, E> {
                v.parse().map_err(E::custom)
            }
        }

        deserializer.deserialize_any(HalfIntVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        assert_eq!("3/2".parse::<HalfInt>().unwrap(), HalfInt::from_twice(3));
        assert_eq!("-1/2".parse::<HalfInt>().unwrap(), HalfInt::from_twice(-1));
        assert_eq!("4/2".parse::<HalfInt>().unwrap(), HalfInt::from_int(2));
        assert_eq!("7".parse::<HalfInt>().unwrap(), HalfInt::from_int(7));
        assert_eq!(HalfInt::from_twice(-3).to_string(), "-3/2");
        assert_eq!(HalfInt::from_int(-3).to_string(), "-3");
        for bad in ["1/3", "0.5", "", "a/2", "1/2/2"] {
            assert!(bad.parse::<HalfInt>().is_err(), "{bad}");
        }
    }

    #[test]
    fn arithmetic_is_exact() {
        let a = HalfInt::from_twice(1);
        let b = HalfInt::from_twice(-3);
        assert_eq!(a + b, HalfInt::from_int(-1));
        assert_eq!(a - b, HalfInt::from_int(2));
        assert_eq!(a.mul_int(4), HalfInt::from_int(2));
        assert!(b < a);
        assert!(a.in_coset(1) && !a.in_coset(0));
    }

    #[test]
    fn json_encoding() {
        let v: Vec<HalfInt> = serde_json::from_str(r#"[1, "-1/2", "3"]"#).unwrap();
        assert_eq!(v, vec![HalfInt::from_int(1), HalfInt::from_twice(-1), HalfInt::from_int(3)]);
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"[1,"-1/2",3]"#);
        assert!(serde_json::from_str::<HalfInt>("0.5").is_err());
    }
}
