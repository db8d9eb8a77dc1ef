//! Exact integer scalars.
//!
//! Every evaluator in this crate is written once against [`Scalar`] and
//! instantiated at `i64`/`i128` for allocation-free sweeps or at
//! [`BigInt`](num_bigint::BigInt) where no bound on the inputs is known.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact signed integer ring element.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + Ord
    + Hash
    + Integer
    + Signed
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    /// Lifts a small constant into the ring.
    fn lit(v: i64) -> Self {
        Self::from_i64(v).expect("small constant fits every scalar")
    }

    /// Residue in `[0, modulus)`, also for negative values.
    fn residue(&self, modulus: i64) -> i64 {
        self.mod_floor(&Self::lit(modulus))
            .to_i64()
            .expect("residue is below the modulus")
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }
}

impl<T> Scalar for T where
    T: Clone
        + Debug
        + Display
        + Ord
        + Hash
        + Integer
        + Signed
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}
