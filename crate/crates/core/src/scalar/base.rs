//! The dynamic base-field layer: one tagged scalar type covering every
//! supported base field, with the descriptor strings used by the CLI
//! ("Q", "Fp:<p>", "Fq:<p>^<k>", "RatFunc:<p>").

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::ff::{Ff, FfElem};
use crate::scalar::ratfunc::{RatFunc, RatFuncElem};
use crate::scalar::{parse_rational, rational_string, Field};
use num_rational::BigRational;
use std::cmp::Ordering;

/// A supported base field. GF(p) is GF(p^1); the descriptor distinguishes
/// them only for display.
#[derive(Clone, Debug, PartialEq)]
pub enum BaseField {
    Q,
    Ff(Ff),
    RatFunc(RatFunc),
}

/// An exact element of some base field. Arithmetic is closed within one tag;
/// the public `scalar_arith` rejects mixed tags with `MixedFields`.
#[derive(Clone, Debug, PartialEq)]
pub enum FieldScalar {
    Rat(BigRational),
    Ff(FfElem),
    RatFunc(RatFuncElem),
}

impl BaseField {
    pub fn rationals() -> BaseField {
        BaseField::Q
    }

    pub fn prime_field(p: u64) -> Result<BaseField> {
        Ok(BaseField::Ff(Ff::prime(p)?))
    }

    pub fn galois_field(p: u64, k: usize) -> Result<BaseField> {
        Ok(BaseField::Ff(Ff::galois(p, k)?))
    }

    pub fn rational_functions(p: u64) -> Result<BaseField> {
        Ok(BaseField::RatFunc(RatFunc::new(Ff::prime(p)?)))
    }

    /// GF(p^k)(t); needed internally for GF(4)(t).
    pub fn rational_functions_over(coeff: Ff) -> BaseField {
        BaseField::RatFunc(RatFunc::new(coeff))
    }

    /// Parse a CLI descriptor: "Q", "Fp:<p>", "Fq:<p>^<k>", "RatFunc:<p>".
    pub fn parse_descriptor(s: &str) -> Result<BaseField> {
        let s = s.trim();
        if s == "Q" {
            return Ok(BaseField::Q);
        }
        if let Some(p) = s.strip_prefix("Fp:") {
            let p: u64 = p.parse().map_err(|_| Error::ParseError(format!("bad prime in {s:?}")))?;
            return BaseField::prime_field(p);
        }
        if let Some(rest) = s.strip_prefix("Fq:") {
            let (p, k) = rest
                .split_once('^')
                .ok_or_else(|| Error::ParseError(format!("expected Fq:<p>^<k>, got {s:?}")))?;
            let p: u64 = p.parse().map_err(|_| Error::ParseError(format!("bad prime in {s:?}")))?;
            let k: usize = k.parse().map_err(|_| Error::ParseError(format!("bad exponent in {s:?}")))?;
            return BaseField::galois_field(p, k);
        }
        if let Some(p) = s.strip_prefix("RatFunc:") {
            let p: u64 = p.parse().map_err(|_| Error::ParseError(format!("bad prime in {s:?}")))?;
            return BaseField::rational_functions(p);
        }
        Err(Error::ParseError(format!("unknown base field descriptor {s:?}")))
    }

    pub fn descriptor(&self) -> String {
        match self {
            BaseField::Q => "Q".to_string(),
            BaseField::Ff(f) => {
                if f.k() == 1 {
                    format!("Fp:{}", f.p())
                } else {
                    format!("Fq:{}^{}", f.p(), f.k())
                }
            }
            BaseField::RatFunc(r) => {
                let c = r.coeff_field();
                if c.k() == 1 {
                    format!("RatFunc:{}", c.p())
                } else {
                    format!("RatFunc:{}^{}", c.p(), c.k())
                }
            }
        }
    }

    /// Parse one scalar in this field's canonical string form.
    pub fn parse_scalar(&self, s: &str) -> Result<FieldScalar> {
        let s = s.trim();
        match self {
            BaseField::Q => Ok(FieldScalar::Rat(parse_rational(s)?)),
            BaseField::Ff(f) => {
                let code: u64 = s
                    .parse()
                    .map_err(|_| Error::ParseError(format!("bad finite-field code {s:?}")))?;
                if code >= f.order() {
                    return Err(Error::ParseError(format!(
                        "code {code} out of range for field of order {}",
                        f.order()
                    )));
                }
                Ok(FieldScalar::Ff(f.decode(code)))
            }
            BaseField::RatFunc(r) => {
                // "c0,c1,.../d0,d1,..." with integer-encoded coefficients;
                // the denominator part may be omitted for polynomials.
                let (n, d) = match s.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (s, "1"),
                };
                let parse_poly = |part: &str| -> Result<Poly<Ff>> {
                    let mut coeffs = Vec::new();
                    for piece in part.split(',') {
                        let code: u64 = piece.trim().parse().map_err(|_| {
                            Error::ParseError(format!("bad coefficient {piece:?} in {s:?}"))
                        })?;
                        coeffs.push(r.coeff_field().decode(code));
                    }
                    Ok(Poly::new(r.coeff_field(), coeffs))
                };
                let num = parse_poly(n)?;
                let den = parse_poly(d)?;
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(FieldScalar::RatFunc(r.make(num, den)))
            }
        }
    }

    /// Canonical scalar string, inverse to `parse_scalar`.
    pub fn scalar_string(&self, a: &FieldScalar) -> String {
        match (self, a) {
            (BaseField::Q, FieldScalar::Rat(r)) => rational_string(r),
            (BaseField::Ff(f), FieldScalar::Ff(e)) => f.encode(e).to_string(),
            (BaseField::RatFunc(r), FieldScalar::RatFunc(e)) => {
                let f = r.coeff_field();
                let fmt = |p: &Poly<Ff>| -> String {
                    if p.is_zero() {
                        "0".to_string()
                    } else {
                        p.coeffs()
                            .iter()
                            .map(|c| f.encode(c).to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    }
                };
                if e.den.deg() == 0 {
                    fmt(&e.num)
                } else {
                    format!("{}/{}", fmt(&e.num), fmt(&e.den))
                }
            }
            _ => panic!("scalar does not belong to this base field"),
        }
    }
}

macro_rules! dispatch2 {
    ($self:ident, $a:ident, $b:ident, $f:ident, $op:ident) => {
        match ($self, $a, $b) {
            (BaseField::Q, FieldScalar::Rat(x), FieldScalar::Rat(y)) => {
                FieldScalar::Rat(Rationals.$op(x, y))
            }
            (BaseField::Ff($f), FieldScalar::Ff(x), FieldScalar::Ff(y)) => {
                FieldScalar::Ff($f.$op(x, y))
            }
            (BaseField::RatFunc($f), FieldScalar::RatFunc(x), FieldScalar::RatFunc(y)) => {
                FieldScalar::RatFunc($f.$op(x, y))
            }
            _ => panic!("mixed base-field scalars"),
        }
    };
}

use crate::scalar::Rationals;

impl Field for BaseField {
    type Elem = FieldScalar;

    fn zero(&self) -> FieldScalar {
        match self {
            BaseField::Q => FieldScalar::Rat(Rationals.zero()),
            BaseField::Ff(f) => FieldScalar::Ff(f.zero()),
            BaseField::RatFunc(r) => FieldScalar::RatFunc(r.zero()),
        }
    }
    fn one(&self) -> FieldScalar {
        match self {
            BaseField::Q => FieldScalar::Rat(Rationals.one()),
            BaseField::Ff(f) => FieldScalar::Ff(f.one()),
            BaseField::RatFunc(r) => FieldScalar::RatFunc(r.one()),
        }
    }
    fn from_int(&self, n: i64) -> FieldScalar {
        match self {
            BaseField::Q => FieldScalar::Rat(Rationals.from_int(n)),
            BaseField::Ff(f) => FieldScalar::Ff(f.from_int(n)),
            BaseField::RatFunc(r) => FieldScalar::RatFunc(r.from_int(n)),
        }
    }
    fn add(&self, a: &FieldScalar, b: &FieldScalar) -> FieldScalar {
        dispatch2!(self, a, b, f, add)
    }
    fn sub(&self, a: &FieldScalar, b: &FieldScalar) -> FieldScalar {
        dispatch2!(self, a, b, f, sub)
    }
    fn mul(&self, a: &FieldScalar, b: &FieldScalar) -> FieldScalar {
        dispatch2!(self, a, b, f, mul)
    }
    fn neg(&self, a: &FieldScalar) -> FieldScalar {
        match (self, a) {
            (BaseField::Q, FieldScalar::Rat(x)) => FieldScalar::Rat(Rationals.neg(x)),
            (BaseField::Ff(f), FieldScalar::Ff(x)) => FieldScalar::Ff(f.neg(x)),
            (BaseField::RatFunc(r), FieldScalar::RatFunc(x)) => FieldScalar::RatFunc(r.neg(x)),
            _ => panic!("mixed base-field scalars"),
        }
    }
    fn inv(&self, a: &FieldScalar) -> Option<FieldScalar> {
        match (self, a) {
            (BaseField::Q, FieldScalar::Rat(x)) => Rationals.inv(x).map(FieldScalar::Rat),
            (BaseField::Ff(f), FieldScalar::Ff(x)) => f.inv(x).map(FieldScalar::Ff),
            (BaseField::RatFunc(r), FieldScalar::RatFunc(x)) => r.inv(x).map(FieldScalar::RatFunc),
            _ => panic!("mixed base-field scalars"),
        }
    }
    fn is_zero(&self, a: &FieldScalar) -> bool {
        match (self, a) {
            (BaseField::Q, FieldScalar::Rat(x)) => Rationals.is_zero(x),
            (BaseField::Ff(f), FieldScalar::Ff(x)) => f.is_zero(x),
            (BaseField::RatFunc(r), FieldScalar::RatFunc(x)) => r.is_zero(x),
            _ => panic!("mixed base-field scalars"),
        }
    }
    fn cmp_elem(&self, a: &FieldScalar, b: &FieldScalar) -> Ordering {
        match (self, a, b) {
            (BaseField::Q, FieldScalar::Rat(x), FieldScalar::Rat(y)) => Rationals.cmp_elem(x, y),
            (BaseField::Ff(f), FieldScalar::Ff(x), FieldScalar::Ff(y)) => f.cmp_elem(x, y),
            (BaseField::RatFunc(r), FieldScalar::RatFunc(x), FieldScalar::RatFunc(y)) => {
                r.cmp_elem(x, y)
            }
            _ => panic!("mixed base-field scalars"),
        }
    }
    fn characteristic(&self) -> u64 {
        match self {
            BaseField::Q => 0,
            BaseField::Ff(f) => f.characteristic(),
            BaseField::RatFunc(r) => r.characteristic(),
        }
    }
    fn elem_string(&self, a: &FieldScalar) -> String {
        self.scalar_string(a)
    }
}

/// Scalar arithmetic op codes for the public entry point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact field arithmetic with tag checking: the spec-level `scalar_arith`.
pub fn scalar_arith(
    field: &BaseField,
    a: &FieldScalar,
    b: &FieldScalar,
    op: ArithOp,
) -> Result<FieldScalar> {
    let tag_ok = matches!(
        (field, a, b),
        (BaseField::Q, FieldScalar::Rat(_), FieldScalar::Rat(_))
            | (BaseField::Ff(_), FieldScalar::Ff(_), FieldScalar::Ff(_))
            | (BaseField::RatFunc(_), FieldScalar::RatFunc(_), FieldScalar::RatFunc(_))
    );
    if !tag_ok {
        return Err(Error::MixedFields);
    }
    match op {
        ArithOp::Add => Ok(field.add(a, b)),
        ArithOp::Sub => Ok(field.sub(a, b)),
        ArithOp::Mul => Ok(field.mul(a, b)),
        ArithOp::Div => field.div(a, b).ok_or(Error::DivisionByZero),
    }
}

/// The first `count` rational primes, 2 first.
pub fn rational_primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut n = 2u64;
    while out.len() < count {
        if (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0) {
            out.push(n);
        }
        n += 1;
    }
    out
}

/// The i-th rational prime with p₀ = 2.
pub fn nth_prime(i: usize) -> u64 {
    rational_primes(i + 1)[i]
}

/// The first `count` monic irreducibles of GF(p^k)[t] in canonical order
/// (degree, then coefficient sequence under the integer encoding).
pub fn irreducibles_ff(field: &Ff, count: usize) -> Vec<Poly<Ff>> {
    let mut out = Vec::with_capacity(count);
    let q = field.order();
    let mut degree = 1usize;
    while out.len() < count {
        // enumerate monic polynomials of this degree by counting in base q
        let total = q.pow(degree as u32);
        for code in 0..total {
            let mut coeffs = Vec::with_capacity(degree + 1);
            let mut c = code;
            for _ in 0..degree {
                coeffs.push(field.decode(c % q));
                c /= q;
            }
            coeffs.push(field.one());
            let p = Poly::new(field, coeffs);
            if crate::poly::factor_ff::is_irreducible(field, &p) {
                out.push(p);
                if out.len() == count {
                    break;
                }
            }
        }
        degree += 1;
    }
    out
}

/// The spec-level `enumerate_irreducibles`: over GF(p^k) returns monic
/// irreducible polynomials; the marker base "rational-primes" returns the
/// rational primes as degree-0 stand-ins is not meaningful, so the CLI maps
/// it to `rational_primes` directly.
pub fn enumerate_irreducibles(base: &BaseField, count: usize) -> Result<Vec<Poly<Ff>>> {
    match base {
        BaseField::Ff(f) => Ok(irreducibles_ff(f, count)),
        _ => Err(Error::UnsupportedBase(format!(
            "enumerate_irreducibles needs a finite field, got {}",
            base.descriptor()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_arith_examples() {
        // (1/2) + (1/3) = 5/6
        let q = BaseField::Q;
        let a = q.parse_scalar("1/2").unwrap();
        let b = q.parse_scalar("1/3").unwrap();
        let c = scalar_arith(&q, &a, &b, ArithOp::Add).unwrap();
        assert_eq!(q.scalar_string(&c), "5/6");

        // in GF(3): 2 × 2 = 1
        let f3 = BaseField::prime_field(3).unwrap();
        let two = f3.parse_scalar("2").unwrap();
        let four = scalar_arith(&f3, &two, &two, ArithOp::Mul).unwrap();
        assert_eq!(f3.scalar_string(&four), "1");

        // in GF(3)(t): t/(t²+1) × (t²+1) = t
        let rf = BaseField::rational_functions(3).unwrap();
        let a = rf.parse_scalar("0,1/1,0,1").unwrap();
        let b = rf.parse_scalar("1,0,1").unwrap();
        let c = scalar_arith(&rf, &a, &b, ArithOp::Mul).unwrap();
        assert_eq!(rf.scalar_string(&c), "0,1");
    }

    #[test]
    fn mixed_tags_rejected() {
        let q = BaseField::Q;
        let a = q.parse_scalar("1").unwrap();
        let f3 = BaseField::prime_field(3).unwrap();
        let b = f3.parse_scalar("1").unwrap();
        assert_eq!(scalar_arith(&q, &a, &b, ArithOp::Add), Err(Error::MixedFields));
    }

    #[test]
    fn division_by_zero_rejected() {
        let q = BaseField::Q;
        let a = q.parse_scalar("1").unwrap();
        let z = q.zero();
        assert_eq!(scalar_arith(&q, &a, &z, ArithOp::Div), Err(Error::DivisionByZero));
    }

    #[test]
    fn descriptors_roundtrip() {
        for d in ["Q", "Fp:5", "Fq:2^2", "RatFunc:3"] {
            let f = BaseField::parse_descriptor(d).unwrap();
            assert_eq!(f.descriptor(), d);
        }
        assert!(BaseField::parse_descriptor("Fp:4").is_err());
    }

    #[test]
    fn rational_primes_first_four() {
        assert_eq!(rational_primes(4), vec![2, 3, 5, 7]);
    }
}
