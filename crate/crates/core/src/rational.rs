//! Exact rational scalars.
//!
//! `Q` wraps a 64-bit `Ratio` and performs every operation with overflow
//! checks. An overflow is a bug at desk scale, so it panics instead of
//! wrapping silently.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// An exact rational number.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Q(Ratio<i64>);

impl Q {
    pub const ZERO: Q = Q(Ratio::new_raw(0, 1));
    pub const ONE: Q = Q(Ratio::new_raw(1, 1));

    /// Builds `num/den`; panics when `den == 0`.
    pub fn new(num: i64, den: i64) -> Q {
        assert!(den != 0, "zero denominator");
        Q(Ratio::new(num, den))
    }

    pub fn int(v: i64) -> Q {
        Q(Ratio::from_integer(v))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    /// The integer value, if this is an integer.
    pub fn to_integer(&self) -> Option<i64> {
        self.is_integer().then(|| self.numer())
    }

    pub fn floor(&self) -> i64 {
        self.0.floor().to_integer()
    }

    pub fn ceil(&self) -> i64 {
        self.0.ceil().to_integer()
    }

    pub fn abs(&self) -> Q {
        Q(self.0.abs())
    }

    pub fn recip(&self) -> Q {
        assert!(!self.is_zero(), "reciprocal of zero");
        Q(self.0.recip())
    }

    pub fn checked_div(&self, other: &Q) -> Option<Q> {
        if other.is_zero() {
            return None;
        }
        self.0.checked_div(&other.0).map(Q)
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// `(-1)^k` for an integer `k`.
    pub fn sign_power(k: i64) -> Q {
        if k.rem_euclid(2) == 0 {
            Q::ONE
        } else {
            -Q::ONE
        }
    }

    pub fn pow(&self, e: u32) -> Q {
        let mut acc = Q::ONE;
        for _ in 0..e {
            acc *= *self;
        }
        acc
    }

    pub fn inner(&self) -> Ratio<i64> {
        self.0
    }
}

impl From<i64> for Q {
    fn from(v: i64) -> Q {
        Q::int(v)
    }
}

impl From<i32> for Q {
    fn from(v: i32) -> Q {
        Q::int(v as i64)
    }
}

impl Zero for Q {
    fn zero() -> Q {
        Q::ZERO
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Q {
    fn one() -> Q {
        Q::ONE
    }
}

impl Add for Q {
    type Output = Q;
    fn add(self, rhs: Q) -> Q {
        Q(self.0.checked_add(&rhs.0).expect("rational overflow in addition"))
    }
}

impl Sub for Q {
    type Output = Q;
    fn sub(self, rhs: Q) -> Q {
        Q(self.0.checked_sub(&rhs.0).expect("rational overflow in subtraction"))
    }
}

impl Mul for Q {
    type Output = Q;
    fn mul(self, rhs: Q) -> Q {
        Q(self.0.checked_mul(&rhs.0).expect("rational overflow in multiplication"))
    }
}

impl Div for Q {
    type Output = Q;
    fn div(self, rhs: Q) -> Q {
        assert!(!rhs.is_zero(), "division by zero");
        Q(self.0.checked_div(&rhs.0).expect("rational overflow in division"))
    }
}

impl Neg for Q {
    type Output = Q;
    fn neg(self) -> Q {
        Q(-self.0)
    }
}

impl AddAssign for Q {
    fn add_assign(&mut self, rhs: Q) {
        *self = *self + rhs;
    }
}

impl SubAssign for Q {
    fn sub_assign(&mut self, rhs: Q) {
        *self = *self - rhs;
    }
}

impl MulAssign for Q {
    fn mul_assign(&mut self, rhs: Q) {
        *self = *self * rhs;
    }
}

impl Sum for Q {
    fn sum<I: Iterator<Item = Q>>(iter: I) -> Q {
        iter.fold(Q::ZERO, |a, b| a + b)
    }
}

impl Product for Q {
    fn product<I: Iterator<Item = Q>>(iter: I) -> Q {
        iter.fold(Q::ONE, |a, b| a * b)
    }
}

impl PartialEq<i64> for Q {
    fn eq(&self, other: &i64) -> bool {
        self.is_integer() && self.numer() == *other
    }
}

impl PartialOrd<i64> for Q {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.partial_cmp(&Q::int(*other))
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Q {
    type Err = Error;

    /// Accepts `p`, `p/q` and surrounding whitespace.
    fn from_str(s: &str) -> Result<Q, Error> {
        let bad = || Error::Parse(format!("not a rational: {s:?}"));
        let s = s.trim();
        match s.split_once('/') {
            None => s.parse::<i64>().map(Q::int).map_err(|_| bad()),
            Some((p, q)) => {
                let p = p.trim().parse::<i64>().map_err(|_| bad())?;
                let q = q.trim().parse::<i64>().map_err(|_| bad())?;
                if q == 0 {
                    return Err(bad());
                }
                Ok(Q::new(p, q))
            }
        }
    }
}

impl Serialize for Q {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses a comma-separated list of rationals, e.g. `"3,1,-5/2"`.
pub fn parse_list(s: &str) -> Result<Vec<Q>, Error> {
    s.split(',').map(str::parse).collect()
}
