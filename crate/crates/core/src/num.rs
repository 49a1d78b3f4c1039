//! Scalar abstraction.
//!
//! Every closed-form evaluator and counting routine in this crate is generic
//! over an exact integer type. Machine integers (`i64`, `i128`) are fine for
//! desk-scale inputs; [`num_bigint::BigInt`] is the default used by the
//! crate-root aliases and never overflows.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact signed integer type.
pub trait Int:
    Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive + Send + Sync
{
    /// Lossless conversion from a structural count.
    fn from_u64(v: u64) -> Self {
        <Self as FromPrimitive>::from_u64(v).expect("value does not fit the scalar type")
    }

    fn from_i64(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("value does not fit the scalar type")
    }
}

impl<T> Int for T where
    T: Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive + Send + Sync
{
}

/// Counter used by enumeration routines: only needs `0`, `1` and addition.
pub trait Counter: num_traits::Zero + num_traits::One + Clone + Send + Sync {}

impl<T> Counter for T where T: num_traits::Zero + num_traits::One + Clone + Send + Sync {}
