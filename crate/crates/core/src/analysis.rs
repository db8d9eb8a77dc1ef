//! Which integers are group determinants of G, and the congruences that
//! rule the others out.
//!
//! Odd values are always `1 (mod 16)` and even values are always divisible
//! by `2^14`. The checkers below test the individual steps on concrete
//! assignments; [`classify`] decides membership and names the witness
//! family that realizes an attainable value.

use serde::Serialize;

use crate::evaluators::{eval_factored, transform, Assignment, TransformedVars};
use crate::scalar::Scalar;
use crate::witness::WitnessFamily;

pub const TWO_POW_14: i64 = 1 << 14;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Reason {
    #[serde(rename = "ODD_1_MOD_16")]
    Odd1Mod16,
    #[serde(rename = "EVEN_2POW14")]
    Even2Pow14,
    #[serde(rename = "ODD_NOT_1_MOD_16")]
    OddNot1Mod16,
    #[serde(rename = "EVEN_NOT_2POW14")]
    EvenNot2Pow14,
}

impl Reason {
    pub fn code(self) -> &'static str {
        match self {
            Reason::Odd1Mod16 => "ODD_1_MOD_16",
            Reason::Even2Pow14 => "EVEN_2POW14",
            Reason::OddNot1Mod16 => "ODD_NOT_1_MOD_16",
            Reason::EvenNot2Pow14 => "EVEN_NOT_2POW14",
        }
    }
}

/// Verdict for one integer. `family` and `m` are set exactly when the value
/// is attainable, and then `family.value(m)` reproduces it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Classification<T> {
    pub achievable: bool,
    pub family: Option<WitnessFamily>,
    pub m: Option<T>,
    pub reason: Reason,
}

pub fn classify<T: Scalar>(n: &T) -> Classification<T> {
    let lit = T::lit;
    let found = |family, m, reason| Classification {
        achievable: true,
        family: Some(family),
        m: Some(m),
        reason,
    };
    let missing = |reason| Classification {
        achievable: false,
        family: None,
        m: None,
        reason,
    };

    if n.is_odd() {
        return if n.residue(16) == 1 {
            found(
                WitnessFamily::One,
                (n.clone() - T::one()) / lit(16),
                Reason::Odd1Mod16,
            )
        } else {
            missing(Reason::OddNot1Mod16)
        };
    }
    if n.residue(TWO_POW_14) != 0 {
        return missing(Reason::EvenNot2Pow14);
    }
    let k = n.clone() / lit(TWO_POW_14);
    let (family, m) = match k.residue(4) {
        1 => (WitnessFamily::Two, (k - lit(1)) / lit(4)),
        3 => (WitnessFamily::Three, -(k + lit(1)) / lit(4)),
        2 => (WitnessFamily::Four, (k - lit(2)) / lit(4)),
        _ => (WitnessFamily::Five, k / lit(4)),
    };
    found(family, m, Reason::Even2Pow14)
}

/// Membership in the attainable set of C4: odd numbers and multiples of 16.
pub fn classify_c4<T: Scalar>(n: &T) -> bool {
    n.is_odd() || n.residue(16) == 0
}

/// `value ≡ 1 (mod 16)` or `2^14 | value`.
pub fn check_membership<T: Scalar>(value: &T) -> bool {
    value.residue(16) == 1 || value.residue(TWO_POW_14) == 0
}

/// Result of a conditional congruence check.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    NotApplicable,
    Holds,
    Violated,
}

impl Outcome {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Outcome::Holds
        } else {
            Outcome::Violated
        }
    }
}

fn sum<T: Scalar>(xs: &[T]) -> T {
    xs.iter().cloned().fold(T::zero(), |acc, x| acc + x)
}

/// `b0 + b2` and `b1 + b3` have different parity.
pub fn odd_hypothesis<T: Scalar>(v: &TransformedVars<T>) -> bool {
    let even = v.b[0].clone() + v.b[2].clone();
    let odd = v.b[1].clone() + v.b[3].clone();
    (even - odd).is_odd()
}

/// `d0 d2 + d4 d6 + d1 d3 + d5 d7`.
pub fn cross_term<T: Scalar>(d: &[T; 8]) -> T {
    let p = |i: usize, j: usize| d[i].clone() * d[j].clone();
    p(0, 2) + p(4, 6) + p(1, 3) + p(5, 7)
}

/// `1 - 8 (d0 d2 + d4 d6 + d1 d3 + d5 d7) mod 16`.
fn mod16_target<T: Scalar>(d: &[T; 8]) -> i64 {
    (T::one() - T::lit(8) * cross_term(d)).residue(16)
}

/// `b_i ≡ c_i ≡ d_i + d_{i+4} (mod 2)` for every `i < 4`.
pub fn check_remark_2_3<T: Scalar>(a: &Assignment<T>) -> bool {
    let v = transform(a);
    (0..4).all(|i| {
        let dd = (v.d[i].clone() + v.d[i + 4].clone()).residue(2);
        v.b[i].residue(2) == dd && v.c[i].residue(2) == dd
    })
}

/// The three parity congruences `D4(b) ≡ Σb`, `D4(c) ≡ Σc`, `F(d) ≡ Σd`.
pub fn check_lemma_2_4<T: Scalar>(a: &Assignment<T>) -> bool {
    let v = transform(a);
    let f = eval_factored(a);
    f.d4b.residue(2) == sum(&v.b).residue(2)
        && f.d4c.residue(2) == sum(&v.c).residue(2)
        && f.big_f.residue(2) == sum(&v.d).residue(2)
}

/// `D_G ≡ D4(b) ≡ D4(c) ≡ F(d) (mod 2)`.
pub fn check_lemma_2_5<T: Scalar>(a: &Assignment<T>) -> bool {
    let f = eval_factored(a);
    let p = f.product.residue(2);
    p == f.d4b.residue(2) && p == f.d4c.residue(2) && p == f.big_f.residue(2)
}

/// Under the odd hypothesis, `D4(b) D4(c) ≡ 1 - 8 Σ d_i d_{i+2} (mod 16)`.
pub fn check_lemma_3_3<T: Scalar>(a: &Assignment<T>) -> Outcome {
    let v = transform(a);
    if !odd_hypothesis(&v) {
        return Outcome::NotApplicable;
    }
    let f = eval_factored(a);
    Outcome::from_bool((f.d4b * f.d4c).residue(16) == mod16_target(&v.d))
}

/// Under the odd hypothesis, `F(d)^2 ≡ 1 - 8 Σ d_i d_{i+2} (mod 16)`.
pub fn check_lemma_3_4<T: Scalar>(a: &Assignment<T>) -> Outcome {
    let v = transform(a);
    if !odd_hypothesis(&v) {
        return Outcome::NotApplicable;
    }
    let f = eval_factored(a);
    Outcome::from_bool(f.big_f.square().residue(16) == mod16_target(&v.d))
}

pub fn check_lemma_3_3_and_3_4<T: Scalar>(a: &Assignment<T>) -> Outcome {
    match (check_lemma_3_3(a), check_lemma_3_4(a)) {
        (Outcome::NotApplicable, _) => Outcome::NotApplicable,
        (Outcome::Holds, Outcome::Holds) => Outcome::Holds,
        _ => Outcome::Violated,
    }
}

/// The intermediate steps behind the `F(d)^2` congruence: under the odd
/// hypothesis `m0 ≡ m1 ≡ Σd ≡ 1 (mod 2)` and
/// `m0^2 ≡ m1^2 + 8 Σ d_i d_{i+2} (mod 16)`.
pub fn check_lemma_3_4_algebra<T: Scalar>(a: &Assignment<T>) -> Outcome {
    let v = transform(a);
    if !odd_hypothesis(&v) {
        return Outcome::NotApplicable;
    }
    let f = eval_factored(a);
    let parity = sum(&v.d).residue(2);
    let parities = parity == 1 && f.m0.residue(2) == 1 && f.m1.residue(2) == 1;
    let lhs = f.m0.square().residue(16);
    let rhs = (f.m1.square() + T::lit(8) * cross_term(&v.d)).residue(16);
    Outcome::from_bool(parities && lhs == rhs)
}

/// Under the even hypothesis `b0 + b2 ≡ b1 + b3 (mod 2)`, `8 | F(d)`.
pub fn check_lemma_3_5<T: Scalar>(a: &Assignment<T>) -> Outcome {
    let v = transform(a);
    if odd_hypothesis(&v) {
        return Outcome::NotApplicable;
    }
    let f = eval_factored(a);
    Outcome::from_bool(f.big_f.residue(8) == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    const ONES_BUT_FIRST: [i64; 16] = [2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1];
    const FAMILY2_M0: [i64; 16] = [1, 0, 1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0];

    #[test]
    fn classify_examples() {
        let c = classify(&17i64);
        assert!(c.achievable);
        assert_eq!((c.family, c.m), (Some(WitnessFamily::One), Some(1)));
        assert_eq!(c.reason, Reason::Odd1Mod16);

        let c = classify(&-16384i64);
        assert_eq!((c.family, c.m), (Some(WitnessFamily::Three), Some(0)));

        let c = classify(&8192i64);
        assert!(!c.achievable);
        assert_eq!(
            (c.family, c.m, c.reason),
            (None, None, Reason::EvenNot2Pow14)
        );

        assert_eq!(classify(&33i64).m, Some(2));
        let zero = classify(&0i64);
        assert_eq!((zero.family, zero.m), (Some(WitnessFamily::Five), Some(0)));
        assert_eq!(classify(&2i64).reason, Reason::EvenNot2Pow14);
        assert_eq!(classify(&5i64).reason, Reason::OddNot1Mod16);
        assert_eq!(classify(&-15i64).m, Some(-1));
    }

    #[test]
    fn classify_big_values() {
        let n: BigInt = "340282366920938463463374607431768211457".parse().unwrap(); // 2^128 + 1
        let c = classify(&n);
        assert!(c.achievable);
        assert_eq!(c.m.unwrap() * BigInt::from(16) + 1, n);
    }

    #[test]
    fn c4_values() {
        assert!(classify_c4(&3i64));
        assert!(classify_c4(&16i64));
        assert!(classify_c4(&-16i64));
        assert!(!classify_c4(&8i64));
        assert!(!classify_c4(&2i64));
    }

    #[test]
    fn membership_values() {
        assert!(check_membership(&1i64));
        assert!(check_membership(&16384i64));
        assert!(check_membership(&-16384i64));
        assert!(check_membership(&-15i64));
        assert!(!check_membership(&5i64));
        assert!(!check_membership(&8192i64));
    }

    #[test]
    fn lemma_checks_on_examples() {
        let zero = Assignment::<i64>::zero();
        let ones = Assignment(ONES_BUT_FIRST);
        let fam2 = Assignment(FAMILY2_M0);
        assert!(check_lemma_2_4(&zero));
        assert!(check_lemma_2_4(&ones));
        assert!(check_lemma_2_5(&ones));
        assert!(check_remark_2_3(&fam2));

        assert_eq!(check_lemma_3_3_and_3_4(&zero), Outcome::NotApplicable);
        assert_eq!(check_lemma_3_3_and_3_4(&ones), Outcome::Holds);
        assert_eq!(check_lemma_3_4_algebra(&ones), Outcome::Holds);

        assert_eq!(check_lemma_3_5(&zero), Outcome::Holds);
        assert_eq!(check_lemma_3_5(&fam2), Outcome::Holds);
        assert_eq!(eval_factored(&fam2).big_f, -8);
        assert_eq!(check_lemma_3_5(&ones), Outcome::NotApplicable);
    }

    #[test]
    fn cross_term_matches_definition() {
        let d = [1i64, 2, 3, 4, 5, 6, 7, 8];
        assert_eq!(cross_term(&d), 3 + 5 * 7 + 2 * 4 + 6 * 8);
    }
}
