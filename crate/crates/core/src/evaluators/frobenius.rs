//! The ten irreducible representations of G and the group determinant as
//! `prod_k det(sum_g phi_k(g) a_g)^(deg phi_k)`.
//!
//! `phi_0..phi_7` are the characters `g1 -> 1`, `g2 -> (-1)^(k/4)`,
//! `g3 -> i^k`. `phi_8`, `phi_9` are two-dimensional with `g1 -> -I`,
//! `g2 -> (-1)^k [[0,1],[1,0]]`, `g3 -> i^(k+1) diag(1,-1)`.

use num_complex::Complex;
use num_traits::{One, Zero};

use super::Assignment;
use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::linalg::{det2_gaussian, i_pow, Gaussian};
use crate::scalar::Scalar;

/// A 1x1 or 2x2 matrix over the Gaussian integers. One-dimensional values
/// live in the top-left cell with the rest zero.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RepMatrix {
    pub dim: usize,
    pub cells: [[Gaussian<i64>; 2]; 2],
}

impl RepMatrix {
    fn scalar(z: Gaussian<i64>) -> Self {
        Self {
            dim: 1,
            cells: [[z, Complex::zero()], [Complex::zero(), Complex::zero()]],
        }
    }

    fn matrix(cells: [[Gaussian<i64>; 2]; 2]) -> Self {
        Self { dim: 2, cells }
    }

    fn scale(self, z: Gaussian<i64>) -> Self {
        Self {
            dim: self.dim,
            cells: self.cells.map(|row| row.map(|c| c * z)),
        }
    }

    pub fn identity(dim: usize) -> Self {
        match dim {
            1 => Self::scalar(Complex::one()),
            _ => Self::matrix([
                [Complex::one(), Complex::zero()],
                [Complex::zero(), Complex::one()],
            ]),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim);
        let a = &self.cells;
        let b = &rhs.cells;
        let cells =
            std::array::from_fn(|i| std::array::from_fn(|j| a[i][0] * b[0][j] + a[i][1] * b[1][j]));
        Self {
            dim: self.dim,
            cells,
        }
    }

    pub fn pow(&self, e: u8) -> Self {
        (0..e).fold(Self::identity(self.dim), |acc, _| acc.mul(self))
    }
}

/// One of the ten irreducible representations `phi_k`, `k` in `0..=9`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Representation(u8);

impl Representation {
    pub fn new(k: u8) -> Self {
        assert!(k <= 9, "representation index {k} out of range");
        Self(k)
    }

    pub fn all() -> impl Iterator<Item = Self> {
        (0..=9).map(Self)
    }

    pub fn index(self) -> u8 {
        self.0
    }

    pub fn degree(self) -> usize {
        if self.0 < 8 {
            1
        } else {
            2
        }
    }

    /// Images of `g1`, `g2`, `g3`.
    pub fn generators(self) -> [RepMatrix; 3] {
        let k = i64::from(self.0);
        let one = Complex::new(1, 0);
        let zero = Complex::new(0, 0);
        if self.0 < 8 {
            let sign = if (k / 4) % 2 == 0 { 1 } else { -1 };
            [
                RepMatrix::scalar(one),
                RepMatrix::scalar(Complex::new(sign, 0)),
                RepMatrix::scalar(i_pow(k)),
            ]
        } else {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            [
                RepMatrix::identity(2).scale(Complex::new(-1, 0)),
                RepMatrix::matrix([[zero, one], [one, zero]]).scale(Complex::new(sign, 0)),
                RepMatrix::matrix([[one, zero], [zero, -one]]).scale(i_pow(k + 1)),
            ]
        }
    }

    /// `phi(g1^r g2^s g3^t) = phi(g1)^r phi(g2)^s phi(g3)^t`.
    pub fn image(self, g: GroupElement) -> RepMatrix {
        let [p1, p2, p3] = self.generators();
        p1.pow(g.r()).mul(&p2.pow(g.s())).mul(&p3.pow(g.t()))
    }
}

/// The blocks `M_k = sum_g phi_k(g) a_g` and their determinants.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FrobeniusParts<T> {
    /// `M_0..M_7`.
    pub scalars: [Gaussian<T>; 8],
    /// `M_8`, `M_9`.
    pub blocks: [[[Gaussian<T>; 2]; 2]; 2],
    /// `det M_8`, `det M_9`.
    pub block_dets: [Gaussian<T>; 2],
}

fn lift<T: Scalar>(z: Gaussian<i64>) -> Gaussian<T> {
    Complex::new(T::lit(z.re), T::lit(z.im))
}

pub fn frobenius_parts<T: Scalar>(a: &Assignment<T>) -> FrobeniusParts<T> {
    let zero = || Complex::new(T::zero(), T::zero());
    let mut acc: [[[Gaussian<T>; 2]; 2]; 10] =
        std::array::from_fn(|_| std::array::from_fn(|_| std::array::from_fn(|_| zero())));
    for g in GroupElement::all() {
        let weight = Complex::new(a.0[g.index()].clone(), T::zero());
        for (rep, m) in Representation::all().zip(acc.iter_mut()) {
            let image = rep.image(g);
            let d = rep.degree();
            for (row, cells) in m.iter_mut().zip(&image.cells).take(d) {
                for (x, &c) in row.iter_mut().zip(cells).take(d) {
                    *x = x.clone() + lift::<T>(c) * weight.clone();
                }
            }
        }
    }
    let scalars = std::array::from_fn(|k| acc[k][0][0].clone());
    let blocks = [acc[8].clone(), acc[9].clone()];
    let block_dets = [det2_gaussian(&blocks[0]), det2_gaussian(&blocks[1])];
    FrobeniusParts {
        scalars,
        blocks,
        block_dets,
    }
}

/// `prod_{k<8} M_k * (det M_8)^2 * (det M_9)^2`; the imaginary part must
/// vanish.
pub fn frobenius_eval<T: Scalar>(a: &Assignment<T>) -> Result<Gaussian<T>> {
    let parts = frobenius_parts(a);
    let linear = parts
        .scalars
        .iter()
        .fold(Complex::new(T::one(), T::zero()), |acc, m| acc * m.clone());
    let [d8, d9] = parts.block_dets;
    let z = linear * d8.clone() * d8 * d9.clone() * d9;
    if !z.im.is_zero() {
        return Err(Error::NonRealFrobenius {
            re: z.re.to_string(),
            im: z.im.to_string(),
        });
    }
    Ok(z)
}
