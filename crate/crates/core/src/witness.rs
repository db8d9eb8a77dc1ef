//! Explicit assignments realizing every attainable value.
//!
//! Each family is the constant vector `m` plus a fixed offset pattern, and
//! its determinant is a linear function of `m`:
//!
//! | family | value            |
//! |--------|------------------|
//! | 1      | `16m + 1`        |
//! | 2      | `2^14 (4m + 1)`  |
//! | 3      | `-2^14 (4m + 1)` |
//! | 4      | `2^15 (2m + 1)`  |
//! | 5      | `2^16 m`         |

use serde::{Serialize, Serializer};

use crate::analysis::classify;
use crate::error::{Error, Result};
use crate::evaluators::Assignment;
use crate::scalar::Scalar;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum WitnessFamily {
    One,
    Two,
    Three,
    Four,
    Five,
}

const OFFSETS: [[i64; 16]; 5] = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0],
    [1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0],
    [1, 1, 1, 1, 0, 1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0],
    [1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, -1],
];

impl WitnessFamily {
    pub const ALL: [WitnessFamily; 5] = [
        WitnessFamily::One,
        WitnessFamily::Two,
        WitnessFamily::Three,
        WitnessFamily::Four,
        WitnessFamily::Five,
    ];

    pub fn from_id(id: u8) -> Result<Self> {
        match id {
            1..=5 => Ok(Self::ALL[usize::from(id - 1)]),
            _ => Err(Error::UnknownFamily(id)),
        }
    }

    pub fn id(self) -> u8 {
        self as u8 + 1
    }

    pub fn offsets(self) -> &'static [i64; 16] {
        &OFFSETS[self as usize]
    }

    pub fn assignment<T: Scalar>(self, m: &T) -> Assignment<T> {
        Assignment(self.offsets().map(|o| m.clone() + T::lit(o)))
    }

    /// The closed-form determinant of [`Self::assignment`].
    pub fn value<T: Scalar>(self, m: &T) -> T {
        let lit = T::lit;
        let m = m.clone();
        match self {
            WitnessFamily::One => lit(16) * m + lit(1),
            WitnessFamily::Two => lit(1 << 14) * (lit(4) * m + lit(1)),
            WitnessFamily::Three => -(lit(1 << 14) * (lit(4) * m + lit(1))),
            WitnessFamily::Four => lit(1 << 15) * (lit(2) * m + lit(1)),
            WitnessFamily::Five => lit(1 << 16) * m,
        }
    }

    pub fn value_formula(self) -> &'static str {
        match self {
            WitnessFamily::One => "16m+1",
            WitnessFamily::Two => "2^14(4m+1)",
            WitnessFamily::Three => "-2^14(4m+1)",
            WitnessFamily::Four => "2^15(2m+1)",
            WitnessFamily::Five => "2^16 m",
        }
    }
}

impl Serialize for WitnessFamily {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u8(self.id())
    }
}

pub fn family_assignment<T: Scalar>(id: u8, m: &T) -> Result<Assignment<T>> {
    Ok(WitnessFamily::from_id(id)?.assignment(m))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness<T> {
    pub family: WitnessFamily,
    pub m: T,
    pub assignment: Assignment<T>,
}

/// The canonical assignment with determinant `n`, or `None` when `n` is not
/// attainable.
pub fn witness<T: Scalar>(n: &T) -> Option<Witness<T>> {
    let c = classify(n);
    let (family, m) = (c.family?, c.m?);
    let assignment = family.assignment(&m);
    Some(Witness {
        family,
        m,
        assignment,
    })
}
