//! Exact group determinants of `G = C2^2 x| C4` and the set of integers they
//! attain: `{16m + 1} ∪ 2^14 Z`.
//!
//! The determinant is available three ways that check one another:
//! the Cayley-matrix determinant ([`eval_oracle`]), the closed-form
//! factorization `D4(b) D4(c) F(d)^2` ([`eval_factored`]) and the product
//! over irreducible representations ([`frobenius_eval`]). All arithmetic is
//! generic over an exact integer [`Scalar`]; the aliases below fix the
//! common instantiations.

pub mod analysis;
pub mod error;
pub mod evaluators;
pub mod group;
pub mod harness;
pub mod linalg;
pub mod scalar;
pub mod witness;

pub use analysis::{check_membership, classify, classify_c4, Classification, Outcome, Reason};
pub use error::{Error, Result};
pub use evaluators::{
    eval_factored, eval_factored_checked, eval_oracle, frobenius_eval, transform, Assignment,
    FactorBreakdown, TransformedVars,
};
pub use group::{CayleyMatrix, GroupElement, GroupId};
pub use linalg::{det_exact, Gaussian};
pub use scalar::Scalar;
pub use witness::{family_assignment, witness, Witness, WitnessFamily};

pub use num_bigint::BigInt;

/// Inputs for the allocation-free sweep path.
pub type FastAssignment = Assignment<i128>;
pub type BigAssignment = Assignment<BigInt>;
pub type FastBreakdown = FactorBreakdown<i128>;
pub type BigBreakdown = FactorBreakdown<BigInt>;
pub type GaussianInt = Gaussian<i64>;
pub type BigGaussian = Gaussian<BigInt>;
pub type BigClassification = Classification<BigInt>;
