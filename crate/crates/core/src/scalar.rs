//! The scalar abstraction underlying all linear algebra in this crate.
//!
//! Every computation here is a finite check of polynomial identities, so the
//! only thing we need from a scalar type is exact field arithmetic with exact
//! equality. The blanket impl keeps the trait open: any type with the right
//! `num-traits` surface qualifies. The crate ships one instantiation,
//! [`crate::Q`] (arbitrary-precision rationals), and everything downstream is
//! written against that alias.
//!
//! Floating-point types technically satisfy the bounds but violate the
//! exactness contract (equality after arithmetic must be decidable), so no
//! float aliases are provided.

use std::fmt::{Debug, Display};
use std::ops::{Div, Neg, Sub};

use num_traits::{FromPrimitive, One, Zero};

/// An exact field scalar.
///
/// `Zero`/`One` bring addition and multiplication; `Sub`, `Div`, `Neg`
/// complete the field operations. `PartialEq` must be exact equality of
/// field elements, not an approximation.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
    + FromPrimitive
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Debug
        + Display
        + Zero
        + One
        + Neg<Output = T>
        + Sub<Output = T>
        + Div<Output = T>
        + FromPrimitive
{
}

/// Embed a machine integer into the scalar field.
pub fn from_int<S: Scalar>(k: i64) -> S {
    S::from_i64(k).expect("field embeds i64")
}
