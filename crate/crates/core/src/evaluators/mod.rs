//! Closed-form evaluation of the group determinants.
//!
//! `D_G(a) = D4(b) * D4(c) * F(d)^2`, where `b`, `c`, `d` are the linear
//! images of the 16 inputs computed by [`transform`]. The same value is also
//! available from the 16x16 Cayley determinant ([`eval_oracle`]) and from the
//! product over irreducible representations ([`frobenius_eval`]).

mod frobenius;

pub use frobenius::{frobenius_eval, frobenius_parts, FrobeniusParts, RepMatrix, Representation};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::GroupId;
use crate::linalg::det_exact;
use crate::scalar::Scalar;

/// Largest `|a_i|` accepted by [`eval_factored_checked`]. Every individual
/// factor is at most quartic in the inputs, which keeps it inside `i128`.
pub const FIXED_WIDTH_INPUT_BOUND: i128 = 1 << 20;

/// The 16 values `a_0..a_15`, indexed by `j = t + 4s + 8r`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Assignment<T = i64>(pub [T; 16]);

impl<T: Scalar> Assignment<T> {
    pub fn new(values: [T; 16]) -> Self {
        Self(values)
    }

    pub fn from_slice(values: &[T]) -> Result<Self> {
        let arr: [T; 16] = values
            .to_vec()
            .try_into()
            .map_err(|v: Vec<T>| Error::Arity(v.len()))?;
        Ok(Self(arr))
    }

    pub fn zero() -> Self {
        Self(std::array::from_fn(|_| T::zero()))
    }

    /// The indicator of the identity element; its determinant is 1.
    pub fn identity() -> Self {
        Self(std::array::from_fn(|j| {
            if j == 0 {
                T::one()
            } else {
                T::zero()
            }
        }))
    }

    pub fn values(&self) -> &[T; 16] {
        &self.0
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Assignment<U> {
        Assignment(self.0.each_ref().map(f))
    }

    pub fn to_big(&self) -> Assignment<BigInt> {
        self.map(crate::linalg::to_big)
    }

    /// Narrows to a fixed-width scalar, if every entry fits.
    pub fn narrow<U: Scalar>(&self) -> Option<Assignment<U>> {
        let v: Option<Vec<U>> = self
            .0
            .iter()
            .map(|x| x.to_i128().and_then(U::from_i128))
            .collect();
        v.map(|v| Assignment::from_slice(&v).expect("length preserved"))
    }
}

impl<T: Scalar> FromStr for Assignment<T> {
    type Err = Error;

    /// Parses 16 comma-separated decimal integers.
    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| T::from_str_radix(t, 10).map_err(|_| Error::Parse(t.to_string())))
            .collect::<Result<Vec<T>>>()?;
        Self::from_slice(&values)
    }
}

impl<T: fmt::Display> fmt::Display for Assignment<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// The vectors `b` (4), `c` (4) and `d` (8).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TransformedVars<T> {
    pub b: [T; 4],
    pub c: [T; 4],
    pub d: [T; 8],
}

/// `m0`, `m1` and `F = m0 * m1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BigF<T> {
    pub m0: T,
    pub m1: T,
    pub value: T,
}

/// Every factor of `D4(b) * D4(c) * F(d)^2`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct FactorBreakdown<T> {
    pub d4b: T,
    pub d4c: T,
    pub m0: T,
    pub m1: T,
    #[serde(rename = "F")]
    pub big_f: T,
    pub product: T,
}

impl<T: Scalar> FactorBreakdown<T> {
    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> FactorBreakdown<U> {
        FactorBreakdown {
            d4b: f(&self.d4b),
            d4c: f(&self.d4c),
            m0: f(&self.m0),
            m1: f(&self.m1),
            big_f: f(&self.big_f),
            product: f(&self.product),
        }
    }
}

/// `x^2 + y^2 - z^2 - w^2`.
pub fn f4<T: Scalar>(x: &T, y: &T, z: &T, w: &T) -> T {
    x.square() + y.square() - z.square() - w.square()
}

pub fn big_f<T: Scalar>(w: &[T; 8]) -> BigF<T> {
    let w = |i: usize| w[i].clone();
    let m0 = f4(
        &(w(0) - w(2)),
        &(w(1) - w(3)),
        &(w(4) - w(6)),
        &(w(5) - w(7)),
    );
    let m1 = f4(
        &(w(5) + w(7)),
        &(w(0) + w(2)),
        &(w(1) + w(3)),
        &(w(4) + w(6)),
    );
    let value = m0.clone() * m1.clone();
    BigF { m0, m1, value }
}

/// Group determinant of C4 (a 4x4 circulant) in closed form.
pub fn d4<T: Scalar>(x: &[T; 4]) -> T {
    let x = |i: usize| x[i].clone();
    let plus = (x(0) + x(2)).square() - (x(1) + x(3)).square();
    let minus = (x(0) - x(2)).square() + (x(1) - x(3)).square();
    plus * minus
}

/// Group determinant of C4 x C2 as a product of two C4 determinants.
pub fn d4x2<T: Scalar>(y: &[T; 8]) -> T {
    let sum = std::array::from_fn(|i| y[i].clone() + y[i + 4].clone());
    let diff = std::array::from_fn(|i| y[i].clone() - y[i + 4].clone());
    d4(&sum) * d4(&diff)
}

pub fn transform<T: Scalar>(a: &Assignment<T>) -> TransformedVars<T> {
    let a = |i: usize| a.0[i].clone();
    TransformedVars {
        b: std::array::from_fn(|i| (a(i) + a(i + 8)) + (a(i + 4) + a(i + 12))),
        c: std::array::from_fn(|i| (a(i) + a(i + 8)) - (a(i + 4) + a(i + 12))),
        d: std::array::from_fn(|i| a(i) - a(i + 8)),
    }
}

pub fn eval_factored<T: Scalar>(a: &Assignment<T>) -> FactorBreakdown<T> {
    breakdown_from(&transform(a))
}

pub fn breakdown_from<T: Scalar>(v: &TransformedVars<T>) -> FactorBreakdown<T> {
    let d4b = d4(&v.b);
    let d4c = d4(&v.c);
    let BigF { m0, m1, value } = big_f(&v.d);
    let product = d4b.clone() * d4c.clone() * value.square();
    FactorBreakdown {
        d4b,
        d4c,
        m0,
        m1,
        big_f: value,
        product,
    }
}

/// `D4x2(a_i + a_{i+8}) * F(a_i - a_{i+8})^2`, the split before `D4x2` is
/// factored further.
pub fn eval_via_d4x2<T: Scalar>(a: &Assignment<T>) -> T {
    let sum = std::array::from_fn(|i| a.0[i].clone() + a.0[i + 8].clone());
    let diff = std::array::from_fn(|i| a.0[i].clone() - a.0[i + 8].clone());
    d4x2(&sum) * big_f(&diff).value.square()
}

/// Fixed-width evaluation for sweeps. Inputs beyond
/// [`FIXED_WIDTH_INPUT_BOUND`] are rejected; the final product is checked.
pub fn eval_factored_checked(a: &Assignment<i128>) -> Result<FactorBreakdown<i128>> {
    if let Some(&value) = a.0.iter().find(|v| v.abs() > FIXED_WIDTH_INPUT_BOUND) {
        return Err(Error::InputOutOfRange {
            value,
            bound: FIXED_WIDTH_INPUT_BOUND,
        });
    }
    let v = transform(a);
    let d4b = d4(&v.b);
    let d4c = d4(&v.c);
    let BigF { m0, m1, value } = big_f(&v.d);
    let product = d4b
        .checked_mul(d4c)
        .and_then(|p| p.checked_mul(value))
        .and_then(|p| p.checked_mul(value))
        .ok_or(Error::Overflow)?;
    Ok(FactorBreakdown {
        d4b,
        d4c,
        m0,
        m1,
        big_f: value,
        product,
    })
}

/// Exact determinant of the Cayley matrix of `group` with the given values.
pub fn group_det<T: Scalar>(group: GroupId, values: &[T]) -> BigInt {
    let m = group.cayley_matrix().substitute(values);
    det_exact(&m).expect("Cayley matrices are square")
}

/// The 16x16 determinant `det(a_{g h^-1})`, computed exactly.
pub fn eval_oracle<T: Scalar>(a: &Assignment<T>) -> BigInt {
    group_det(GroupId::G16, &a.0)
}
