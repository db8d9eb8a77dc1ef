//! Exact determinants and Gaussian integers.

use num_bigint::BigInt;
use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// `re + im * sqrt(-1)` over an exact integer scalar.
pub type Gaussian<T> = Complex<T>;

/// `sqrt(-1)^k` for any integer `k`.
pub fn i_pow<T: Scalar>(k: i64) -> Gaussian<T> {
    match k.rem_euclid(4) {
        0 => Complex::new(T::one(), T::zero()),
        1 => Complex::new(T::zero(), T::one()),
        2 => Complex::new(-T::one(), T::zero()),
        _ => Complex::new(T::zero(), -T::one()),
    }
}

/// `ad - bc` of a 2x2 Gaussian matrix.
pub fn det2_gaussian<T: Scalar>(m: &[[Gaussian<T>; 2]; 2]) -> Gaussian<T> {
    m[0][0].clone() * m[1][1].clone() - m[0][1].clone() * m[1][0].clone()
}

/// Fraction-free (Bareiss) elimination over any exact integer scalar.
///
/// Each step divides exactly by the previous pivot, so intermediate entries
/// are minors of the input. Pivoting takes the first nonzero entry in the
/// column; a row swap flips the sign. With a fixed-width `T` the caller is
/// responsible for the Hadamard bound; [`det_exact`] always uses `BigInt`.
pub fn det_bareiss<T: Scalar>(mut m: Vec<Vec<T>>) -> Result<T> {
    let n = m.len();
    if n == 0 || m.iter().any(|row| row.len() != n) {
        return Err(Error::DimensionMismatch {
            rows: n,
            cols: m.iter().map(Vec::len).collect(),
        });
    }
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return Ok(T::zero());
        };
        if p != k {
            m.swap(p, k);
            negate = !negate;
        }
        let (upper, lower) = m.split_at_mut(k + 1);
        let pivot_row = &upper[k];
        let pivot = pivot_row[k].clone();
        for row in lower.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..n {
                let num = row[j].clone() * pivot.clone() - lead.clone() * pivot_row[j].clone();
                debug_assert!((num.clone() % prev.clone()).is_zero());
                row[j] = num / prev.clone();
            }
            row[k] = T::zero();
        }
        prev = pivot;
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Exact determinant of an integer matrix in arbitrary precision.
pub fn det_exact<T: Scalar>(m: &[Vec<T>]) -> Result<BigInt> {
    let lifted = m
        .iter()
        .map(|row| row.iter().map(to_big).collect())
        .collect();
    det_bareiss::<BigInt>(lifted)
}

pub(crate) fn to_big<T: Scalar>(v: &T) -> BigInt {
    v.to_i128()
        .map(BigInt::from)
        .unwrap_or_else(|| v.to_string().parse().expect("integer Display parses"))
}

/// Identity matrix, mostly for tests and callers building permutations.
pub fn identity<T: Scalar>(n: usize) -> Vec<Vec<T>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { T::one() } else { T::zero() })
                .collect()
        })
        .collect()
}
