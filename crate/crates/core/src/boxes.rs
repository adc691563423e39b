//! Exact rational interval and rectangle arithmetic. Rectangles are
//! axis-aligned with rational corners; all operations return enclosures,
//! which is what the root-isolation refinement loops need.

use crate::poly::Poly;
use crate::scalar::{Field, Rationals};
use num_rational::BigRational;
use num_traits::Zero;

/// Closed interval [lo, hi] with rational endpoints; lo ≤ hi.
#[derive(Clone, Debug, PartialEq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "inverted interval");
        Interval { lo, hi }
    }
    pub fn point(x: BigRational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }
    pub fn mid(&self) -> BigRational {
        (&self.lo + &self.hi) / Rationals.from_int(2)
    }
    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }
    pub fn contains_zero(&self) -> bool {
        self.contains(&BigRational::zero())
    }
    pub fn is_disjoint(&self, other: &Interval) -> bool {
        self.hi < other.lo || other.hi < self.lo
    }
    pub fn add(&self, other: &Interval) -> Interval {
        Interval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }
    pub fn sub(&self, other: &Interval) -> Interval {
        Interval::new(&self.lo - &other.hi, &self.hi - &other.lo)
    }
    pub fn neg(&self) -> Interval {
        Interval::new(-self.hi.clone(), -self.lo.clone())
    }
    pub fn mul(&self, other: &Interval) -> Interval {
        let cands = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = cands.iter().min().unwrap().clone();
        let hi = cands.iter().max().unwrap().clone();
        Interval::new(lo, hi)
    }
    /// {1/x : x ∈ self}; requires 0 ∉ self.
    pub fn recip(&self) -> Interval {
        assert!(!self.contains_zero(), "reciprocal of interval containing zero");
        Interval::new(self.hi.recip(), self.lo.recip())
    }
    /// Exact range of {x² : x ∈ self} (tighter than mul with itself).
    pub fn square(&self) -> Interval {
        let l2 = &self.lo * &self.lo;
        let h2 = &self.hi * &self.hi;
        if self.contains_zero() {
            Interval::new(BigRational::zero(), l2.max(h2))
        } else {
            Interval::new(l2.clone().min(h2.clone()), l2.max(h2))
        }
    }
}

/// Axis-aligned rectangle in ℂ with rational corners.
#[derive(Clone, Debug, PartialEq)]
pub struct Rect {
    pub re: Interval,
    pub im: Interval,
}

impl Rect {
    pub fn new(re: Interval, im: Interval) -> Self {
        Rect { re, im }
    }
    pub fn point(re: BigRational, im: BigRational) -> Self {
        Rect { re: Interval::point(re), im: Interval::point(im) }
    }
    pub fn real_point(re: BigRational) -> Self {
        Rect::point(re, BigRational::zero())
    }
    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }
    pub fn is_disjoint(&self, other: &Rect) -> bool {
        self.re.is_disjoint(&other.re) || self.im.is_disjoint(&other.im)
    }
    pub fn conj(&self) -> Rect {
        Rect { re: self.re.clone(), im: self.im.neg() }
    }
    pub fn add(&self, other: &Rect) -> Rect {
        Rect { re: self.re.add(&other.re), im: self.im.add(&other.im) }
    }
    pub fn sub(&self, other: &Rect) -> Rect {
        Rect { re: self.re.sub(&other.re), im: self.im.sub(&other.im) }
    }
    pub fn neg(&self) -> Rect {
        Rect { re: self.re.neg(), im: self.im.neg() }
    }
    pub fn mul(&self, other: &Rect) -> Rect {
        let re = self.re.mul(&other.re).sub(&self.im.mul(&other.im));
        let im = self.re.mul(&other.im).add(&self.im.mul(&other.re));
        Rect { re, im }
    }
    /// Enclosure of {1/z}; requires 0 ∉ rect (one coordinate interval must
    /// exclude zero so that |z|² is bounded away from 0).
    pub fn recip(&self) -> Rect {
        assert!(!self.contains_zero());
        let d = self.re.square().add(&self.im.square());
        assert!(!d.contains_zero(), "recip needs a box separated from zero");
        let dr = d.recip();
        Rect { re: self.re.mul(&dr), im: self.im.neg().mul(&dr) }
    }
}

/// Horner evaluation of a rational polynomial on a rectangle.
pub fn eval_poly_on_rect(p: &Poly<Rationals>, z: &Rect) -> Rect {
    let zerop = Rect::point(BigRational::zero(), BigRational::zero());
    let mut acc = zerop;
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(z).add(&Rect::real_point(c.clone()));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::parse_rational;

    fn iv(a: &str, b: &str) -> Interval {
        Interval::new(parse_rational(a).unwrap(), parse_rational(b).unwrap())
    }

    #[test]
    fn interval_mul_signs() {
        let a = iv("-2", "3");
        let b = iv("-1", "4");
        let m = a.mul(&b);
        assert_eq!(m, iv("-8", "12"));
    }

    #[test]
    fn rect_mul_matches_complex_mul() {
        // (1+2i)(3−i) = 5+5i, as degenerate rectangles
        let a = Rect::point(parse_rational("1").unwrap(), parse_rational("2").unwrap());
        let b = Rect::point(parse_rational("3").unwrap(), parse_rational("-1").unwrap());
        let m = a.mul(&b);
        assert_eq!(m, Rect::point(parse_rational("5").unwrap(), parse_rational("5").unwrap()));
    }

    #[test]
    fn eval_on_point_rect() {
        let q = Rationals;
        let p = Poly::from_ints(&q, &[-2, 0, 1]);
        // p(3) = 7
        let v = eval_poly_on_rect(&p, &Rect::real_point(q.from_int(3)));
        assert_eq!(v, Rect::real_point(q.from_int(7)));
    }

    #[test]
    fn recip_encloses() {
        // 1/(2+i) = (2−i)/5
        let z = Rect::new(iv("3/2", "5/2"), iv("1/2", "3/2"));
        let r = z.recip();
        let truth_re = parse_rational("2/5").unwrap();
        let truth_im = parse_rational("-1/5").unwrap();
        assert!(r.re.contains(&truth_re));
        assert!(r.im.contains(&truth_im));
    }
}
