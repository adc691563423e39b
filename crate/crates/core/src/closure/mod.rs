//! A concrete algebraic closure of ℚ at finite stages: algebraic numbers
//! as (monic irreducible minimal polynomial, isolating rectangle), with
//! identity judged by (minpoly, root index) in the canonical root order.
//! The closure is never materialized; every "first" choice is a function
//! of the canonical enumeration.

pub mod arith;
pub mod embed;

use crate::boxes::{Interval, Rect};
use crate::error::{Error, Result};
use crate::poly::isolate::{count_roots_in_rect, isolate_roots, refine_rect};
use crate::poly::sturm::SturmChain;
use crate::poly::{factor_q, Poly};
use crate::scalar::{Field, Rationals};
use num_rational::BigRational;
use num_traits::Zero;

/// An element of the algebraic closure of ℚ.
#[derive(Clone, Debug)]
pub struct AlgebraicNumber {
    minpoly: Poly<Rationals>,
    rect: Rect,
    index: usize,
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.minpoly == other.minpoly && self.index == other.index
    }
}
impl Eq for AlgebraicNumber {}

impl AlgebraicNumber {
    /// Construct from a monic irreducible minimal polynomial and an
    /// isolating rectangle; locates the canonical root index and replaces
    /// the rectangle by the canonical one.
    pub fn new(minpoly: Poly<Rationals>, rect: Rect) -> Result<AlgebraicNumber> {
        let q = Rationals;
        if minpoly.is_zero() || minpoly.deg() == 0 {
            return Err(Error::ZeroPolynomial);
        }
        let (_, minpoly) = minpoly.monic(&q);
        if minpoly.deg() == 1 {
            let root = q.neg(&minpoly.coeffs()[0]);
            return Ok(AlgebraicNumber {
                minpoly,
                rect: Rect::real_point(root),
                index: 0,
            });
        }
        let canonical = isolate_roots(&minpoly)?;
        let mut mine = rect;
        loop {
            let hits: Vec<usize> = canonical
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_disjoint(&mine))
                .map(|(i, _)| i)
                .collect();
            if hits.len() == 1 && rect_inside(&mine, &canonical[hits[0]]) {
                let index = hits[0];
                return Ok(AlgebraicNumber { minpoly, rect: canonical[index].clone(), index });
            }
            if hits.is_empty() {
                return Err(Error::NoSuchRoot("rectangle isolates no root".into()));
            }
            mine = refine_rect(&minpoly, &mine);
        }
    }

    fn from_canonical(minpoly: Poly<Rationals>, rect: Rect, index: usize) -> AlgebraicNumber {
        AlgebraicNumber { minpoly, rect, index }
    }

    pub fn from_rational(r: BigRational) -> AlgebraicNumber {
        let q = Rationals;
        AlgebraicNumber {
            minpoly: Poly::new(&q, vec![q.neg(&r), q.one()]),
            rect: Rect::real_point(r),
            index: 0,
        }
    }

    pub fn from_int(n: i64) -> AlgebraicNumber {
        AlgebraicNumber::from_rational(Rationals.from_int(n))
    }

    pub fn zero() -> AlgebraicNumber {
        AlgebraicNumber::from_int(0)
    }

    pub fn minpoly(&self) -> &Poly<Rationals> {
        &self.minpoly
    }

    pub fn rect(&self) -> &Rect {
        &self.rect
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn degree(&self) -> usize {
        self.minpoly.deg()
    }

    pub fn is_zero(&self) -> bool {
        self.is_rational().map(|r| r.is_zero()).unwrap_or(false)
    }

    pub fn is_rational(&self) -> Option<BigRational> {
        if self.minpoly.deg() == 1 {
            Some(Rationals.neg(&self.minpoly.coeffs()[0]))
        } else {
            None
        }
    }

    /// One refinement step on the isolating rectangle.
    pub fn refined(&self) -> AlgebraicNumber {
        AlgebraicNumber {
            minpoly: self.minpoly.clone(),
            rect: refine_rect(&self.minpoly, &self.rect),
            index: self.index,
        }
    }

    /// Refine until both box dimensions have width < eps.
    pub fn refined_below(&self, eps: &BigRational) -> AlgebraicNumber {
        let mut cur = self.clone();
        while &cur.rect.re.width() >= eps || &cur.rect.im.width() >= eps {
            cur = cur.refined();
        }
        cur
    }

    /// The complex conjugate: same minimal polynomial, mirrored rectangle.
    pub fn conj(&self) -> AlgebraicNumber {
        AlgebraicNumber::new(self.minpoly.clone(), self.rect.conj()).expect("conjugate root")
    }

    /// True iff the number equals its conjugate, decided by whether the
    /// isolating rectangle traps a real root of the minimal polynomial.
    pub fn is_real(&self) -> bool {
        if !self.rect.im.contains_zero() {
            return false;
        }
        if self.rect.re.lo == self.rect.re.hi {
            return self.minpoly.eval(&Rationals, &self.rect.re.lo).is_zero();
        }
        let chain = SturmChain::new(&self.minpoly);
        self.minpoly.eval(&Rationals, &self.rect.re.lo).is_zero()
            || chain.count_half_open(&self.rect.re.lo, &self.rect.re.hi) > 0
    }

    /// Exact comparison of two real algebraic numbers.
    pub fn cmp_real(&self, other: &AlgebraicNumber) -> std::cmp::Ordering {
        assert!(self.is_real() && other.is_real());
        if self == other {
            return std::cmp::Ordering::Equal;
        }
        let mut a = self.clone();
        let mut b = other.clone();
        loop {
            if a.rect.re.hi < b.rect.re.lo {
                return std::cmp::Ordering::Less;
            }
            if b.rect.re.hi < a.rect.re.lo {
                return std::cmp::Ordering::Greater;
            }
            a = a.refined();
            b = b.refined();
        }
    }

    /// Exact sign of a real algebraic number.
    pub fn sign(&self) -> i32 {
        assert!(self.is_real());
        if let Some(r) = self.is_rational() {
            return if r.is_zero() {
                0
            } else if r > BigRational::zero() {
                1
            } else {
                -1
            };
        }
        // irrational: refine until the interval excludes zero
        let mut cur = self.clone();
        loop {
            if cur.rect.re.lo > BigRational::zero() {
                return 1;
            }
            if cur.rect.re.hi < BigRational::zero() {
                return -1;
            }
            cur = cur.refined();
        }
    }
}

fn rect_inside(inner: &Rect, outer: &Rect) -> bool {
    outer.re.lo <= inner.re.lo
        && inner.re.hi <= outer.re.hi
        && outer.im.lo <= inner.im.lo
        && inner.im.hi <= outer.im.hi
}

/// All roots of an arbitrary nonzero rational polynomial as algebraic
/// numbers, in the canonical order (real ascending, then non-real by
/// (re, im)).
pub fn all_roots(p: &Poly<Rationals>) -> Result<Vec<AlgebraicNumber>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let fac = factor_q::factor_q(p)?;
    let rects = isolate_roots(p)?;
    let mut out = Vec::with_capacity(rects.len());
    for rect in rects {
        // find the irreducible factor this root belongs to
        let mut owner: Option<&Poly<Rationals>> = None;
        let mut r = rect.clone();
        loop {
            let candidates: Vec<&Poly<Rationals>> = fac
                .factors
                .iter()
                .map(|(h, _)| h)
                .filter(|h| root_possible(h, &r))
                .collect();
            if candidates.len() == 1 {
                owner = Some(candidates[0]);
                break;
            }
            assert!(!candidates.is_empty(), "root lost its factor");
            r = refine_rect(&p.squarefree_part(&Rationals), &r);
        }
        out.push(AlgebraicNumber::new(owner.unwrap().clone(), r)?);
    }
    Ok(out)
}

/// Quick test: can `h` have a root inside the rectangle?
fn root_possible(h: &Poly<Rationals>, rect: &Rect) -> bool {
    if rect.im.lo == rect.im.hi && rect.im.lo.is_zero() {
        if rect.re.lo == rect.re.hi {
            return h.eval(&Rationals, &rect.re.lo).is_zero();
        }
        let chain = SturmChain::new(h);
        return h.eval(&Rationals, &rect.re.lo).is_zero()
            || chain.count_half_open(&rect.re.lo, &rect.re.hi) > 0;
    }
    match count_roots_in_rect(h, rect) {
        Some(c) => c > 0,
        None => true, // boundary degeneracy: keep as candidate, refinement decides
    }
}

/// Root selectors for `designated_root`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootSelector {
    /// Index in the canonical root order.
    Index(usize),
    /// First (smallest) real root > 0.
    FirstRealPositive,
    /// First enumerated primitive m-th root of unity for p = x^m − 1;
    /// the tie-break is the smallest argument in (0, 2π).
    FirstPrimitive,
}

/// The canonically designated root of a polynomial.
pub fn designated_root(p: &Poly<Rationals>, which: &RootSelector) -> Result<AlgebraicNumber> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    match which {
        RootSelector::Index(i) => {
            let roots = all_roots(p)?;
            roots
                .get(*i)
                .cloned()
                .ok_or_else(|| Error::NoSuchRoot(format!("index {i} out of range")))
        }
        RootSelector::FirstRealPositive => {
            let roots = all_roots(p)?;
            for r in roots {
                if r.is_real() && r.sign() > 0 {
                    return Ok(r);
                }
            }
            Err(Error::NoSuchRoot("no positive real root".into()))
        }
        RootSelector::FirstPrimitive => {
            let q = Rationals;
            let m = p.deg();
            let mut xm1 = vec![q.from_int(0); m + 1];
            xm1[0] = q.from_int(-1);
            xm1[m] = q.one();
            if *p != Poly::new(&q, xm1) {
                return Err(Error::NoSuchRoot(
                    "primitive-root selector needs p = x^m − 1".into(),
                ));
            }
            let phi = cyclotomic_poly(m as u64);
            if m == 1 {
                return Ok(AlgebraicNumber::from_int(1));
            }
            if m == 2 {
                return Ok(AlgebraicNumber::from_int(-1));
            }
            // smallest argument in (0, 2π): the root with im > 0 of maximal re
            let roots = all_roots(&phi)?;
            let mut best: Option<AlgebraicNumber> = None;
            for r in roots {
                if r.is_real() || !upper_half(&r) {
                    continue;
                }
                best = Some(match best {
                    None => r,
                    Some(b) => {
                        if cmp_re(&r, &b) == std::cmp::Ordering::Greater {
                            r
                        } else {
                            b
                        }
                    }
                });
            }
            best.ok_or_else(|| Error::NoSuchRoot("no primitive root found".into()))
        }
    }
}

fn upper_half(a: &AlgebraicNumber) -> bool {
    let mut cur = a.clone();
    loop {
        if cur.rect.im.lo > BigRational::zero() {
            return true;
        }
        if cur.rect.im.hi < BigRational::zero() {
            return false;
        }
        if cur.is_real() {
            return false;
        }
        cur = cur.refined();
    }
}

/// Compare real parts of two distinct-known-unequal-re algebraic numbers.
fn cmp_re(a: &AlgebraicNumber, b: &AlgebraicNumber) -> std::cmp::Ordering {
    let mut x = a.clone();
    let mut y = b.clone();
    loop {
        if x.rect.re.hi < y.rect.re.lo {
            return std::cmp::Ordering::Less;
        }
        if y.rect.re.hi < x.rect.re.lo {
            return std::cmp::Ordering::Greater;
        }
        x = x.refined();
        y = y.refined();
    }
}

/// Φ_m by the Möbius product formula ∏ (x^d − 1)^{μ(m/d)}.
pub fn cyclotomic_poly(m: u64) -> Poly<Rationals> {
    let q = Rationals;
    let mut num = Poly::one(&q);
    let mut den = Poly::one(&q);
    for d in 1..=m {
        if m % d != 0 {
            continue;
        }
        let mu = moebius(m / d);
        if mu == 0 {
            continue;
        }
        let mut xd1 = vec![q.from_int(0); d as usize + 1];
        xd1[0] = q.from_int(-1);
        xd1[d as usize] = q.one();
        let f = Poly::new(&q, xd1);
        if mu == 1 {
            num = num.mul(&q, &f);
        } else {
            den = den.mul(&q, &f);
        }
    }
    num.div_exact(&q, &den)
}

fn moebius(mut n: u64) -> i64 {
    let mut count = 0;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            count += 1;
        }
        d += 1;
    }
    if n > 1 {
        count += 1;
    }
    if count % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The canonical enumeration stage: the designated roots of the first
/// `stage` irreducible monic integer polynomials, in order.
pub struct ClosureEnumeration {
    pub stage: usize,
    pub polys: Vec<Poly<Rationals>>,
    pub roots: Vec<AlgebraicNumber>,
}

/// Monic integer polynomials in blocks of max(degree, height) = h,
/// ordered within a block by (degree, coefficient sequence).
pub fn monic_int_polys() -> impl Iterator<Item = Poly<Rationals>> {
    (1i64..).flat_map(|h| {
        let q = Rationals;
        let mut block: Vec<Poly<Rationals>> = Vec::new();
        for deg in 1..=(h as usize) {
            let mut coeffs = vec![-h; deg];
            loop {
                let height = coeffs.iter().map(|c| c.abs()).max().unwrap_or(0);
                if height.max(deg as i64) == h {
                    let mut v: Vec<i64> = coeffs.clone();
                    v.push(1);
                    block.push(Poly::from_ints(&q, &v));
                }
                // advance the coefficient counter
                let mut i = 0;
                loop {
                    if i == deg {
                        break;
                    }
                    coeffs[i] += 1;
                    if coeffs[i] <= h {
                        break;
                    }
                    coeffs[i] = -h;
                    i += 1;
                }
                if i == deg {
                    break;
                }
            }
        }
        block
    })
}

/// First `count` monic irreducible integer polynomials in canonical order.
pub fn irreducible_int_polys(count: usize) -> Vec<Poly<Rationals>> {
    monic_int_polys()
        .filter(|p| p.deg() >= 1 && factor_q::is_irreducible_q(p))
        .take(count)
        .collect()
}

pub fn closure_enumeration(stage: usize) -> ClosureEnumeration {
    let polys = irreducible_int_polys(stage);
    let mut roots = Vec::new();
    for p in &polys {
        roots.extend(all_roots(p).expect("nonzero"));
    }
    ClosureEnumeration { stage, polys, roots }
}

/// Interval enclosure of the value for numeric work.
pub fn enclosure(a: &AlgebraicNumber) -> Rect {
    a.rect.clone()
}

/// A convenient degenerate interval constructor.
pub fn rational_interval(lo: i64, hi: i64) -> Interval {
    Interval::new(Rationals.from_int(lo), Rationals.from_int(hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(ints: &[i64]) -> Poly<Rationals> {
        Poly::from_ints(&Rationals, ints)
    }

    #[test]
    fn sqrt2_designated() {
        let r = designated_root(&qp(&[-2, 0, 1]), &RootSelector::FirstRealPositive).unwrap();
        assert!(r.is_real());
        assert_eq!(r.sign(), 1);
        assert_eq!(r.degree(), 2);
        // index 1: the positive root comes second in (real ascending) order
        assert_eq!(r.index(), 1);
    }

    #[test]
    fn no_real_root_for_x2_plus_1() {
        let err = designated_root(&qp(&[1, 0, 1]), &RootSelector::FirstRealPositive).unwrap_err();
        assert!(matches!(err, Error::NoSuchRoot(_)));
    }

    #[test]
    fn primitive_fourth_root_is_i() {
        // x⁴ − 1: the designated primitive root has positive imaginary part
        let r = designated_root(&qp(&[-1, 0, 0, 0, 1]), &RootSelector::FirstPrimitive).unwrap();
        assert_eq!(r.minpoly(), &qp(&[1, 0, 1]));
        assert!(!r.is_real());
        assert!(r.rect().im.lo >= BigRational::zero());
    }

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(3), qp(&[1, 1, 1]));
        assert_eq!(cyclotomic_poly(4), qp(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6), qp(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), qp(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn conjugation_closure_of_root_sets() {
        // the designated roots of x³ − 2 are closed under conjugation
        let roots = all_roots(&qp(&[-2, 0, 0, 1])).unwrap();
        assert_eq!(roots.len(), 3);
        for r in &roots {
            let c = r.conj();
            assert!(roots.iter().any(|s| s == &c));
        }
    }

    #[test]
    fn equality_by_minpoly_and_index() {
        let a = designated_root(&qp(&[-2, 0, 1]), &RootSelector::FirstRealPositive).unwrap();
        let b = a.refined().refined();
        assert_eq!(a, b);
        let c = designated_root(&qp(&[-2, 0, 1]), &RootSelector::Index(0)).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn is_real_examples() {
        let cbrt2 = designated_root(&qp(&[-2, 0, 0, 1]), &RootSelector::FirstRealPositive).unwrap();
        assert!(cbrt2.is_real());
        let roots = all_roots(&qp(&[-2, 0, 0, 1])).unwrap();
        let complex_count = roots.iter().filter(|r| !r.is_real()).count();
        assert_eq!(complex_count, 2);
    }

    #[test]
    fn enumeration_is_stage_deterministic() {
        let polys = irreducible_int_polys(5);
        let strings: Vec<String> =
            polys.iter().map(|p| p.to_string_var(&Rationals, "x")).collect();
        // block 1: x−1, x, x+1; block 2 starts with x−2, x+2, then quadratics
        assert_eq!(strings[0], "x-1");
        assert_eq!(strings[1], "x");
        assert_eq!(strings[2], "x+1");
        assert_eq!(strings[3], "x-2");
        assert_eq!(strings[4], "x+2");
        let e1 = closure_enumeration(4);
        let e2 = closure_enumeration(4);
        assert_eq!(e1.roots.len(), e2.roots.len());
        for (a, b) in e1.roots.iter().zip(e2.roots.iter()) {
            assert_eq!(a, b);
        }
    }
}
