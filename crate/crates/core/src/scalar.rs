use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed, ToPrimitive};

/// An exact ordered field the dimension formulas can be evaluated in.
///
/// Only exact rational types implement this; the formulas compare and test
/// integrality of their results, which is meaningless in floating point.
pub trait ExactScalar: Clone + PartialOrd + Num + Neg<Output = Self> + Debug + Display {
    fn from_int(v: i64) -> Self;

    fn ratio(numer: i64, denom: i64) -> Self {
        Self::from_int(numer) / Self::from_int(denom)
    }

    fn is_integral(&self) -> bool;

    /// The value as an `i64` if it is an integer that fits.
    fn to_i64_exact(&self) -> Option<i64>;
}

impl<T> ExactScalar for Ratio<T>
where
    T: Integer + Signed + Clone + From<i64> + ToPrimitive + Debug + Display,
{
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(T::from(v))
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }

    fn to_i64_exact(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }
}

/// Converts an unsigned count into a scalar.
pub(crate) fn from_u64<S: ExactScalar>(v: u64) -> S {
    match i64::try_from(v) {
        Ok(v) => S::from_int(v),
        Err(_) => {
            let hi = S::from_int((v >> 32) as i64);
            let lo = S::from_int((v & 0xffff_ffff) as i64);
            hi * S::from_int(1 << 32) + lo
        }
    }
}
