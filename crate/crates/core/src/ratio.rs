//! Exact nonnegative rationals for isoperimetric constants and check margins.
//!
//! All combinatorial constants in this crate are quotients of small integer
//! counts, but the inequalities we verify have margins like `h^2 / (48 d)`
//! where float comparison would be untrustworthy. Everything here is kept as
//! reduced big-integer rationals; floats only appear at the presentation
//! layer.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{BigUint, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;

/// A reduced nonnegative rational `num/den` with unbounded naturals.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRatio(BigRational);

impl ExactRatio {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den != 0, "denominator must be positive");
        ExactRatio(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn zero() -> Self {
        ExactRatio(BigRational::zero())
    }

    pub fn from_integer(n: u64) -> Self {
        ExactRatio(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        assert!(!r.is_negative(), "ExactRatio must be nonnegative");
        ExactRatio(r)
    }

    pub fn numer(&self) -> BigUint {
        self.0.numer().magnitude().clone()
    }

    pub fn denom(&self) -> BigUint {
        self.0.denom().magnitude().clone()
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// `num/den` rendering, e.g. `1/3`; integers render as `n/1`.
    pub fn fraction_string(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }

    /// Decimal rendering with 12 fractional digits, truncated-free via
    /// rounding on the scaled integer quotient.
    pub fn decimal_string(&self) -> String {
        let scale = BigUint::from(10u32).pow(12);
        let num = self.numer() * &scale;
        let den = self.denom();
        let q = &num / &den;
        let r = &num % &den;
        let q = if &r * 2u32 >= den.clone() {
            q + 1u32
        } else {
            q
        };
        let digits = q.to_string();
        if digits.len() <= 12 {
            format!("0.{digits:0>12}")
        } else {
            let (int, frac) = digits.split_at(digits.len() - 12);
            format!("{int}.{frac}")
        }
    }

    pub fn cmp_ratio(&self, other: &ExactRatio) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl fmt::Display for ExactRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fraction_string())
    }
}

impl Serialize for ExactRatio {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ExactRatio", 3)?;
        s.serialize_field("num", &self.numer().to_string())?;
        s.serialize_field("den", &self.denom().to_string())?;
        s.serialize_field("decimal", &self.decimal_string())?;
        s.end()
    }
}

/// Signed big rationals are used internally for check margins.
pub fn big_ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
