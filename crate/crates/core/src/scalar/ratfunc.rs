//! The rational function field GF(p^k)(t), the quotient field of the
//! Euclidean ring GF(p^k)[t]. Its monic irreducible polynomials play the
//! role of the primes in the characteristic-p constructions.

use crate::poly::Poly;
use crate::scalar::ff::Ff;
use crate::scalar::Field;
use std::cmp::Ordering;

/// Reduced fraction num/den with den monic and gcd(num, den) = 1.
#[derive(Clone, Debug, PartialEq)]
pub struct RatFuncElem {
    pub num: Poly<Ff>,
    pub den: Poly<Ff>,
}

/// GF(p^k)(t); the context carries the coefficient field.
#[derive(Clone, Debug, PartialEq)]
pub struct RatFunc {
    coeff: Ff,
}

impl RatFunc {
    pub fn new(coeff: Ff) -> Self {
        RatFunc { coeff }
    }

    pub fn coeff_field(&self) -> &Ff {
        &self.coeff
    }

    /// Canonicalize a raw fraction: reduce by the gcd and make the
    /// denominator monic.
    pub fn make(&self, num: Poly<Ff>, den: Poly<Ff>) -> RatFuncElem {
        assert!(!den.is_zero(), "zero denominator in GF(q)(t)");
        if num.is_zero() {
            return RatFuncElem { num: Poly::zero(), den: Poly::one(&self.coeff) };
        }
        let g = num.gcd(&self.coeff, &den);
        let num = num.div_exact(&self.coeff, &g);
        let den = den.div_exact(&self.coeff, &g);
        let (unit, den) = den.monic(&self.coeff);
        let uinv = self.coeff.inv(&unit).expect("unit invertible");
        let num = num.scale(&self.coeff, &uinv);
        RatFuncElem { num, den }
    }

    /// Embed a polynomial as a fraction with denominator 1.
    pub fn from_poly(&self, p: Poly<Ff>) -> RatFuncElem {
        RatFuncElem { num: p, den: Poly::one(&self.coeff) }
    }

    /// The indeterminate t.
    pub fn t(&self) -> RatFuncElem {
        self.from_poly(Poly::x(&self.coeff))
    }

    /// Is this element a square in GF(q)(t)?  In odd characteristic an
    /// element is a square iff its unit part is a square in GF(q) and every
    /// irreducible occurs to an even power; equivalently num·den is a
    /// square polynomial times a square unit.
    pub fn is_square(&self, a: &RatFuncElem) -> bool {
        self.sqrt(a).is_some()
    }

    pub fn sqrt(&self, a: &RatFuncElem) -> Option<RatFuncElem> {
        if a.num.is_zero() {
            return Some(self.zero());
        }
        let sn = poly_sqrt(&self.coeff, &a.num)?;
        let sd = poly_sqrt(&self.coeff, &a.den)?;
        Some(self.make(sn, sd))
    }

    /// Is this element a cube?  Used over GF(4)(t).
    pub fn is_cube(&self, a: &RatFuncElem) -> bool {
        self.cbrt(a).is_some()
    }

    pub fn cbrt(&self, a: &RatFuncElem) -> Option<RatFuncElem> {
        if a.num.is_zero() {
            return Some(self.zero());
        }
        let cn = poly_kth_root(&self.coeff, &a.num, 3)?;
        let cd = poly_kth_root(&self.coeff, &a.den, 3)?;
        Some(self.make(cn, cd))
    }
}

/// Exact square root of a polynomial over GF(q), if it is a perfect square.
pub fn poly_sqrt(field: &Ff, f: &Poly<Ff>) -> Option<Poly<Ff>> {
    poly_kth_root(field, f, 2)
}

/// Exact k-th root by coefficient matching from the top term down.
pub fn poly_kth_root(field: &Ff, f: &Poly<Ff>, k: usize) -> Option<Poly<Ff>> {
    if f.is_zero() {
        return Some(Poly::zero());
    }
    let d = f.deg();
    if d % k != 0 {
        return None;
    }
    let rd = d / k;
    let lead = f.leading(field);
    let rl = (0..field.order())
        .map(|c| field.decode(c))
        .find(|x| field.pow(x, k as u64) == lead)?;
    let mut root = vec![field.zero(); rd + 1];
    root[rd] = rl.clone();
    // determine coefficients from degree rd-1 downward
    for i in (0..rd).rev() {
        let cur = Poly::new(field, root.clone());
        let mut powed = Poly::one(field);
        for _ in 0..k {
            powed = powed.mul(field, &cur);
        }
        // coefficient of x^(rd*(k-1)+i) in root^k is k*rl^(k-1)*root[i] + known
        let idx = rd * (k - 1) + i;
        let want = f.coeff(field, idx);
        let have = powed.coeff(field, idx);
        let kc = field.from_int(k as i64);
        let scale = field.mul(&kc, &field.pow(&rl, (k - 1) as u64));
        let scale_inv = field.inv(&scale)?;
        let delta = field.mul(&field.sub(&want, &have), &scale_inv);
        root[i] = delta;
    }
    let cand = Poly::new(field, root);
    let mut powed = Poly::one(field);
    for _ in 0..k {
        powed = powed.mul(field, &cand);
    }
    if &powed == f {
        Some(cand)
    } else {
        None
    }
}

impl Field for RatFunc {
    type Elem = RatFuncElem;

    fn zero(&self) -> RatFuncElem {
        RatFuncElem { num: Poly::zero(), den: Poly::one(&self.coeff) }
    }
    fn one(&self) -> RatFuncElem {
        RatFuncElem { num: Poly::one(&self.coeff), den: Poly::one(&self.coeff) }
    }
    fn from_int(&self, n: i64) -> RatFuncElem {
        self.from_poly(Poly::constant(&self.coeff, self.coeff.from_int(n)))
    }
    fn add(&self, a: &RatFuncElem, b: &RatFuncElem) -> RatFuncElem {
        let num = a
            .num
            .mul(&self.coeff, &b.den)
            .add(&self.coeff, &b.num.mul(&self.coeff, &a.den));
        let den = a.den.mul(&self.coeff, &b.den);
        self.make(num, den)
    }
    fn sub(&self, a: &RatFuncElem, b: &RatFuncElem) -> RatFuncElem {
        self.add(a, &self.neg(b))
    }
    fn mul(&self, a: &RatFuncElem, b: &RatFuncElem) -> RatFuncElem {
        let num = a.num.mul(&self.coeff, &b.num);
        let den = a.den.mul(&self.coeff, &b.den);
        self.make(num, den)
    }
    fn neg(&self, a: &RatFuncElem) -> RatFuncElem {
        RatFuncElem { num: a.num.neg(&self.coeff), den: a.den.clone() }
    }
    fn inv(&self, a: &RatFuncElem) -> Option<RatFuncElem> {
        if a.num.is_zero() {
            None
        } else {
            Some(self.make(a.den.clone(), a.num.clone()))
        }
    }
    fn is_zero(&self, a: &RatFuncElem) -> bool {
        a.num.is_zero()
    }
    fn cmp_elem(&self, a: &RatFuncElem, b: &RatFuncElem) -> Ordering {
        a.den
            .cmp_canonical(&self.coeff, &b.den)
            .then_with(|| a.num.cmp_canonical(&self.coeff, &b.num))
    }
    fn characteristic(&self) -> u64 {
        self.coeff.characteristic()
    }
    fn elem_string(&self, a: &RatFuncElem) -> String {
        let n = a.num.to_string_var(&self.coeff, "t");
        if a.den.is_monic(&self.coeff) && a.den.deg() == 0 {
            n
        } else {
            format!("({})/({})", n, a.den.to_string_var(&self.coeff, "t"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf3t() -> RatFunc {
        RatFunc::new(Ff::prime(3).unwrap())
    }

    #[test]
    fn cancellation() {
        let f = gf3t();
        // t/(t²+1) × (t²+1) = t
        let t2p1 = f.from_poly(Poly::from_ints(f.coeff_field(), &[1, 0, 1]));
        let a = f.div(&f.t(), &t2p1).unwrap();
        let prod = f.mul(&a, &t2p1);
        assert_eq!(prod, f.t());
    }

    #[test]
    fn field_axioms_sampled() {
        let f = gf3t();
        let xs = vec![
            f.one(),
            f.t(),
            f.add(&f.t(), &f.one()),
            f.div(&f.one(), &f.t()).unwrap(),
            f.div(&f.t(), &f.add(&f.t(), &f.from_int(2))).unwrap(),
        ];
        for a in &xs {
            for b in &xs {
                for c in &xs {
                    assert_eq!(f.add(&f.add(a, b), c), f.add(a, &f.add(b, c)));
                    assert_eq!(f.mul(a, &f.add(b, c)), f.add(&f.mul(a, b), &f.mul(a, c)));
                }
                if !f.is_zero(b) {
                    assert_eq!(f.mul(&f.div(a, b).unwrap(), b), *a);
                }
            }
        }
    }

    #[test]
    fn square_and_cube_detection() {
        let f = gf3t();
        let t = f.t();
        let t2 = f.mul(&t, &t);
        assert!(f.is_square(&t2));
        assert!(!f.is_square(&t));
        // 2·t² is not a square over GF(3): 2 is a nonsquare unit
        let two_t2 = f.mul(&f.from_int(2), &t2);
        assert!(!f.is_square(&two_t2));

        let gf4 = RatFunc::new(Ff::galois(2, 2).unwrap());
        let t = gf4.t();
        let t3 = gf4.mul(&gf4.mul(&t, &t), &t);
        assert!(gf4.is_cube(&t3));
        assert!(!gf4.is_cube(&t));
    }
}
