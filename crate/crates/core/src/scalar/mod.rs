//! Exact arithmetic for every base field the kernel supports:
//! ℚ, GF(p^k) (k ≥ 1, so GF(p) and GF(4) included), and GF(p^k)(t).
//!
//! Fields are context objects and elements are plain data; all operations
//! take the field by reference. This keeps towers, whose arithmetic needs
//! runtime structure, on the same footing as the built-in scalars.

pub mod base;
pub mod ff;
pub mod ratfunc;

pub use base::{BaseField, FieldScalar};
pub use ff::{Ff, FfElem};
pub use ratfunc::{RatFunc, RatFuncElem};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt::Debug;

/// A field given as a context object. `Elem` is plain data; every operation
/// is pure and the context is immutable, so values may be shared freely
/// between threads.
pub trait Field: Clone + PartialEq + Debug {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    /// The image of an integer under the canonical ring map ℤ → F.
    fn from_int(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// The fixed total order on elements used for canonical sorting
    /// (rationals by value, finite-field residues by integer encoding).
    fn cmp_elem(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering;
    /// Characteristic of the field (0 for ℚ).
    fn characteristic(&self) -> u64;
    /// Canonical display string for an element.
    fn elem_string(&self, a: &Self::Elem) -> String;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

/// The rational numbers with arbitrary-precision arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_int(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn cmp_elem(&self, a: &BigRational, b: &BigRational) -> Ordering {
        a.cmp(b)
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn elem_string(&self, a: &BigRational) -> String {
        rational_string(a)
    }
}

/// Canonical rational print: bare integer when the denominator is 1,
/// otherwise "a/b" with positive b.
pub fn rational_string(a: &BigRational) -> String {
    if a.denom().is_one() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

/// Parse "a" or "a/b" into a rational.
pub fn parse_rational(s: &str) -> crate::error::Result<BigRational> {
    let s = s.trim();
    let mk_err = || crate::error::Error::ParseError(format!("bad rational: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| mk_err())?;
        let d: BigInt = d.trim().parse().map_err(|_| mk_err())?;
        if d.is_zero() {
            return Err(crate::error::Error::DivisionByZero);
        }
        Ok(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().map_err(|_| mk_err())?;
        Ok(BigRational::from_integer(n))
    }
}

/// Is the rational a square of a rational?  Returns the nonnegative root.
pub fn rational_sqrt(a: &BigRational) -> Option<BigRational> {
    if a.is_negative() {
        return None;
    }
    let ns = a.numer().sqrt();
    let ds = a.denom().sqrt();
    if &(&ns * &ns) == a.numer() && &(&ds * &ds) == a.denom() {
        Some(BigRational::new(ns, ds))
    } else {
        None
    }
}

/// The canonical enumeration of ℚ used for element enumerations and the
/// automorphism metric: 0, then for height h = 1, 2, ... all reduced a/b
/// with max(|a|, b) = h, ordered by (numerator, denominator).
pub fn rational_by_code(code: usize) -> BigRational {
    let mut seen = 0usize;
    if code == 0 {
        return BigRational::zero();
    }
    let mut h: i64 = 1;
    loop {
        let mut batch: Vec<(i64, i64)> = Vec::new();
        for a in -h..=h {
            for b in 1..=h {
                if a.abs().max(b) == h && num_integer::gcd(a.abs().max(1), b) == 1 && a != 0 {
                    batch.push((a, b));
                }
            }
        }
        batch.sort();
        for (a, b) in batch {
            seen += 1;
            if seen == code {
                return BigRational::new(BigInt::from(a), BigInt::from(b));
            }
        }
        h += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_field_axioms_on_samples() {
        let q = Rationals;
        let xs: Vec<BigRational> = (-4..5).map(|n| q.from_int(n) / q.from_int(3)).collect();
        for a in &xs {
            for b in &xs {
                for c in &xs {
                    assert_eq!(q.add(&q.add(a, b), c), q.add(a, &q.add(b, c)));
                    assert_eq!(q.mul(a, &q.add(b, c)), q.add(&q.mul(a, b), &q.mul(a, c)));
                }
                if !q.is_zero(b) {
                    let d = q.div(a, b).unwrap();
                    assert_eq!(q.mul(&d, b), *a);
                }
            }
        }
    }

    #[test]
    fn rational_parse_and_print() {
        assert_eq!(rational_string(&parse_rational("5/6").unwrap()), "5/6");
        assert_eq!(rational_string(&parse_rational("-4/2").unwrap()), "-2");
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn sqrt_detects_squares() {
        let q = Rationals;
        assert_eq!(rational_sqrt(&q.from_int(49)), Some(q.from_int(7)));
        assert_eq!(rational_sqrt(&q.from_int(2)), None);
        assert_eq!(rational_sqrt(&q.from_int(-4)), None);
        let nine_fourths = BigRational::new(BigInt::from(9), BigInt::from(4));
        assert_eq!(
            rational_sqrt(&nine_fourths),
            Some(BigRational::new(BigInt::from(3), BigInt::from(2)))
        );
    }

    #[test]
    fn rational_code_enumeration_starts_as_expected() {
        let got: Vec<String> = (0..7).map(|i| rational_string(&rational_by_code(i))).collect();
        assert_eq!(got, vec!["0", "-1", "1", "-2", "-1/2", "1/2", "2"]);
    }
}
