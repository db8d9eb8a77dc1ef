//! The three groups whose determinants appear in the factorization:
//! C4, C4 x C2 and G = C2^2 x| C4 = <g1, g2, g3 | g1^2 = g2^2 = g3^4 = e,
//! g1 central, g2 g3 = g3 g2 g1>.
//!
//! Public APIs speak element *indices*: `r` for C4, `r + 4s` for C4 x C2 and
//! `t + 4s + 8r` for the element `g1^r g2^s g3^t` of G, so that an
//! assignment `a[j]` lines up with the variable `z_j`.

use std::fmt;

/// Element `g1^r g2^s g3^t` of G in normal form.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct GroupElement {
    r: u8,
    s: u8,
    t: u8,
}

impl GroupElement {
    pub const IDENTITY: Self = Self { r: 0, s: 0, t: 0 };
    pub const G1: Self = Self { r: 1, s: 0, t: 0 };
    pub const G2: Self = Self { r: 0, s: 1, t: 0 };
    pub const G3: Self = Self { r: 0, s: 0, t: 1 };

    /// Builds the normal form, reducing `r`, `s` mod 2 and `t` mod 4.
    pub fn new(r: u8, s: u8, t: u8) -> Self {
        Self {
            r: r & 1,
            s: s & 1,
            t: t & 3,
        }
    }

    pub fn from_index(j: usize) -> Self {
        assert!(j < 16, "element index {j} out of range");
        let j = j as u8;
        Self {
            r: j >> 3,
            s: (j >> 2) & 1,
            t: j & 3,
        }
    }

    pub fn index(self) -> usize {
        (self.t + 4 * self.s + 8 * self.r) as usize
    }

    pub fn r(self) -> u8 {
        self.r
    }

    pub fn s(self) -> u8 {
        self.s
    }

    pub fn t(self) -> u8 {
        self.t
    }

    /// All 16 elements in index order.
    pub fn all() -> impl Iterator<Item = Self> {
        (0..16).map(Self::from_index)
    }

    // Moving g2^s' left across g3^t picks up g1^(t s').
    pub fn multiply(self, rhs: Self) -> Self {
        Self {
            r: (self.r + rhs.r + self.t * rhs.s) & 1,
            s: (self.s + rhs.s) & 1,
            t: (self.t + rhs.t) & 3,
        }
    }

    pub fn inverse(self) -> Self {
        Self {
            r: (self.r + self.t * self.s) & 1,
            s: self.s,
            t: (4 - self.t) & 3,
        }
    }

    pub fn pow(self, mut e: u32) -> Self {
        let mut acc = Self::IDENTITY;
        let mut base = self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.multiply(base);
            }
            base = base.multiply(base);
            e >>= 1;
        }
        acc
    }

    pub fn order(self) -> u32 {
        (1..=16).find(|&k| self.pow(k) == Self::IDENTITY).unwrap()
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g1^{} g2^{} g3^{}", self.r, self.s, self.t)
    }
}

/// Which of the three groups a Cayley matrix is built for.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GroupId {
    C4,
    C4xC2,
    G16,
}

impl GroupId {
    pub fn order(self) -> usize {
        match self {
            GroupId::C4 => 4,
            GroupId::C4xC2 => 8,
            GroupId::G16 => 16,
        }
    }

    /// Product of the elements with indices `x` and `y`, as an index.
    pub fn multiply(self, x: usize, y: usize) -> usize {
        match self {
            GroupId::C4 => (x + y) % 4,
            GroupId::C4xC2 => (x % 4 + y % 4) % 4 + 4 * ((x / 4 + y / 4) % 2),
            GroupId::G16 => GroupElement::from_index(x)
                .multiply(GroupElement::from_index(y))
                .index(),
        }
    }

    pub fn inverse(self, x: usize) -> usize {
        match self {
            GroupId::C4 => (4 - x) % 4,
            GroupId::C4xC2 => (4 - x % 4) % 4 + 4 * (x / 4),
            GroupId::G16 => GroupElement::from_index(x).inverse().index(),
        }
    }

    pub fn cayley_matrix(self) -> CayleyMatrix {
        let n = self.order();
        let entries = (0..n)
            .map(|g| (0..n).map(|h| self.multiply(g, self.inverse(h))).collect())
            .collect();
        CayleyMatrix { order: n, entries }
    }
}

/// Index matrix with `entries[g][h] = index(g h^-1)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CayleyMatrix {
    order: usize,
    entries: Vec<Vec<usize>>,
}

impl CayleyMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entry(&self, g: usize, h: usize) -> usize {
        self.entries[g][h]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.entries
    }

    /// Substitutes `values[entry]` into every cell.
    pub fn substitute<T: Clone>(&self, values: &[T]) -> Vec<Vec<T>> {
        assert_eq!(values.len(), self.order, "one value per group element");
        self.entries
            .iter()
            .map(|row| row.iter().map(|&j| values[j].clone()).collect())
            .collect()
    }
}
