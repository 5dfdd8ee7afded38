//! Scalar and integer bounds shared by the numeric parts of the crate.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, PrimInt, Signed};

/// A field-like scalar in which signature areas can be evaluated.
///
/// Exact rationals give exact areas; floats are offered for plotting and quick estimates.
pub trait Scalar: Num + Clone + PartialOrd + Debug {
    fn from_fraction(num: i64, den: i64) -> Self;
}

impl Scalar for f32 {
    fn from_fraction(num: i64, den: i64) -> Self {
        num as f32 / den as f32
    }
}

impl Scalar for f64 {
    fn from_fraction(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
}

impl Scalar for Ratio<i64> {
    fn from_fraction(num: i64, den: i64) -> Self {
        Ratio::new(num, den)
    }
}

impl Scalar for Ratio<i128> {
    fn from_fraction(num: i64, den: i64) -> Self {
        Ratio::new(num as i128, den as i128)
    }
}

/// Machine integers usable as coordinates of quadratic integers.
pub trait RingInt:
    PrimInt + Signed + Integer + Hash + Debug + Display + Send + Sync + 'static
{
}

impl<T> RingInt for T where
    T: PrimInt + Signed + Integer + Hash + Debug + Display + Send + Sync + 'static
{
}
