//! Scalar traits shared by the generic arithmetic in this crate.
//!
//! Everything that does linear algebra or polynomial arithmetic is written
//! against [`Scalar`] (a commutative ring) or [`FieldScalar`] (a field with
//! exact zero tests). The concrete instantiations used by the rest of the
//! crate are the aliases at the crate root, but small fixed-width exact
//! types such as `Ratio<i64>` work too and are handy in tests.

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num, Signed};

/// A commutative ring element usable by the generic algorithms.
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> + FromPrimitive {}

impl<T> Scalar for T where T: Clone + Debug + PartialEq + Num + Neg<Output = Self> + FromPrimitive {}

/// A field whose zero test is exact.
///
/// Floating-point types satisfy the trait bounds but not the contract;
/// pivoting and eigenspace decisions here assume `is_zero` is decisive.
pub trait FieldScalar: Scalar + Signed {}

impl<T> FieldScalar for T where T: Scalar + Signed {}

pub(crate) fn from_i64<T: Scalar>(v: i64) -> T {
    T::from_i64(v).expect("scalar type cannot represent a small integer")
}
