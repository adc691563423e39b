//! Exact arithmetic of algebraic numbers: the minimal polynomial of a sum,
//! product, or quotient comes from a resultant, factored over ℚ; the right
//! irreducible factor and root are pinned down by interval refinement with
//! a certified root count.

use crate::boxes::{eval_poly_on_rect, Rect};
use crate::closure::AlgebraicNumber;
use crate::error::{Error, Result};
use crate::poly::isolate::{count_roots_in_rect, lagrange_interpolate};
use crate::poly::sturm::SturmChain;
use crate::poly::{factor_q, Poly};
use crate::scalar::{Field, Rationals};
use num_rational::BigRational;
use num_traits::Zero;

/// Res_y(p(y), F(x, y)) for monic p, where F is given as a function that
/// produces F(x₀, y) ∈ ℚ[y] for rational x₀, with deg_x F ≤ degx.
fn resultant_in_x(
    p: &Poly<Rationals>,
    degx: usize,
    f_at: impl Fn(&BigRational) -> Poly<Rationals>,
) -> Poly<Rationals> {
    let q = Rationals;
    let mut xs = Vec::with_capacity(degx + 1);
    let mut ys = Vec::with_capacity(degx + 1);
    for k in 0..=degx {
        let x0 = q.from_int(k as i64);
        ys.push(p.resultant(&q, &f_at(&x0)));
        xs.push(x0);
    }
    lagrange_interpolate(&xs, &ys)
}

/// Arithmetic operations on algebraic numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn alg_arith(a: &AlgebraicNumber, b: &AlgebraicNumber, op: AlgOp) -> Result<AlgebraicNumber> {
    match op {
        AlgOp::Add => Ok(add(a, b)),
        AlgOp::Sub => Ok(add(a, &neg(b))),
        AlgOp::Mul => Ok(mul(a, b)),
        AlgOp::Div => {
            if b.is_zero() {
                Err(Error::DivisionByZero)
            } else {
                Ok(mul(a, &inv(b)))
            }
        }
    }
}

pub fn neg(a: &AlgebraicNumber) -> AlgebraicNumber {
    let q = Rationals;
    if let Some(r) = a.is_rational() {
        return AlgebraicNumber::from_rational(-r);
    }
    let m = a.minpoly();
    // p(−x), made monic
    let coeffs: Vec<BigRational> = m
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
        .collect();
    let p = Poly::new(&q, coeffs).monic(&q).1;
    AlgebraicNumber::new(p, a.rect().neg()).expect("negation root")
}

pub fn inv(a: &AlgebraicNumber) -> AlgebraicNumber {
    let q = Rationals;
    if let Some(r) = a.is_rational() {
        assert!(!r.is_zero(), "inverse of zero");
        return AlgebraicNumber::from_rational(r.recip());
    }
    let m = a.minpoly();
    let mut coeffs: Vec<BigRational> = m.coeffs().to_vec();
    coeffs.reverse();
    let p = Poly::new(&q, coeffs).monic(&q).1;
    // refine until the box is separated from zero, then invert the box
    let mut cur = a.clone();
    loop {
        let r = cur.rect();
        if !r.re.contains_zero() || !r.im.contains_zero() {
            let rect = r.recip();
            if let Ok(x) = AlgebraicNumber::new(p.clone(), rect) {
                return x;
            }
        }
        cur = cur.refined();
    }
}

pub fn add(a: &AlgebraicNumber, b: &AlgebraicNumber) -> AlgebraicNumber {
    let q = Rationals;
    match (a.is_rational(), b.is_rational()) {
        (Some(x), Some(y)) => return AlgebraicNumber::from_rational(x + y),
        (Some(x), None) => return shift(b, &x),
        (None, Some(y)) => return shift(a, &y),
        _ => {}
    }
    let pa = a.minpoly();
    let pb = b.minpoly();
    // roots of Res_y(pa(y), pb(x − y)) are all sums of roots
    let degx = pa.deg() * pb.deg();
    let res = resultant_in_x(pa, degx, |x0| {
        let lin = Poly::new(&q, vec![x0.clone(), q.from_int(-1)]);
        compose_linear(pb, &lin)
    });
    select_root(&res, a, b, |ra, rb| ra.add(rb))
}

pub fn mul(a: &AlgebraicNumber, b: &AlgebraicNumber) -> AlgebraicNumber {
    let q = Rationals;
    if a.is_zero() || b.is_zero() {
        return AlgebraicNumber::zero();
    }
    match (a.is_rational(), b.is_rational()) {
        (Some(x), Some(y)) => return AlgebraicNumber::from_rational(x * y),
        (Some(x), None) => return scale(b, &x),
        (None, Some(y)) => return scale(a, &y),
        _ => {}
    }
    let pa = a.minpoly();
    let pb = b.minpoly();
    let db = pb.deg();
    // roots of Res_y(pa(y), y^db · pb(x/y)): products of roots (0 excluded
    // because the minimal polynomials here are irreducible of degree ≥ 2)
    let degx = pa.deg() * db;
    let res = resultant_in_x(pa, degx, |x0| {
        // Σ pb_j · x0^j · y^(db−j)
        let mut coeffs = vec![q.from_int(0); db + 1];
        let mut xpow = q.one();
        for (j, c) in pb.coeffs().iter().enumerate() {
            coeffs[db - j] = c * &xpow;
            xpow *= x0;
        }
        Poly::new(&q, coeffs)
    });
    select_root(&res, a, b, |ra, rb| ra.mul(rb))
}

/// a + r for rational r: substitute x → x − r into the minimal polynomial.
fn shift(a: &AlgebraicNumber, r: &BigRational) -> AlgebraicNumber {
    let q = Rationals;
    let lin = Poly::new(&q, vec![-r.clone(), q.one()]);
    let p = compose_linear(a.minpoly(), &lin).monic(&q).1;
    let rect = a.rect().add(&Rect::real_point(r.clone()));
    AlgebraicNumber::new(p, rect).expect("shifted root")
}

/// a · r for rational r ≠ 0.
fn scale(a: &AlgebraicNumber, r: &BigRational) -> AlgebraicNumber {
    let q = Rationals;
    assert!(!r.is_zero());
    // p(x/r) cleared: Σ cᵢ r^{n−i} xⁱ
    let n = a.minpoly().deg();
    let coeffs: Vec<BigRational> = a
        .minpoly()
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let mut pow = q.one();
            for _ in 0..(n - i) {
                pow *= r;
            }
            c * pow
        })
        .collect();
    let p = Poly::new(&q, coeffs).monic(&q).1;
    let rect = a.rect().mul(&Rect::real_point(r.clone()));
    AlgebraicNumber::new(p, rect).expect("scaled root")
}

/// p(l(x)) for linear l.
fn compose_linear(p: &Poly<Rationals>, l: &Poly<Rationals>) -> Poly<Rationals> {
    let q = Rationals;
    let mut acc = Poly::<Rationals>::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(&q, l).add(&q, &Poly::constant(&q, c.clone()));
    }
    acc
}

/// Identify the irreducible factor of `res` vanishing at the combined
/// value and certify an isolating rectangle for it.
fn select_root(
    res: &Poly<Rationals>,
    a: &AlgebraicNumber,
    b: &AlgebraicNumber,
    combine: impl Fn(&Rect, &Rect) -> Rect,
) -> AlgebraicNumber {
    let q = Rationals;
    let fac = factor_q::factor_q(res).expect("nonzero resultant");
    let mut candidates: Vec<Poly<Rationals>> = fac.factors.into_iter().map(|(h, _)| h).collect();
    let mut ra = a.clone();
    let mut rb = b.clone();
    loop {
        let rect = combine(ra.rect(), rb.rect());
        candidates.retain(|h| {
            let e = eval_poly_on_rect(h, &rect);
            e.re.contains_zero() && e.im.contains_zero()
        });
        assert!(!candidates.is_empty(), "value lost all minimal polynomial candidates");
        if candidates.len() == 1 {
            let h = &candidates[0];
            if h.deg() == 1 {
                return AlgebraicNumber::from_rational(q.neg(&h.coeffs()[0]));
            }
            // certify that the rectangle isolates exactly one root of h
            if rect.im.lo == rect.im.hi && rect.im.lo.is_zero() {
                let chain = SturmChain::new(h);
                if rect.re.lo != rect.re.hi
                    && !h.eval(&q, &rect.re.lo).is_zero()
                    && chain.count_half_open(&rect.re.lo, &rect.re.hi) == 1
                {
                    return AlgebraicNumber::new(h.clone(), rect).expect("isolated real root");
                }
            } else if count_roots_in_rect(h, &rect) == Some(1) {
                return AlgebraicNumber::new(h.clone(), rect).expect("isolated complex root");
            }
        }
        ra = ra.refined();
        rb = rb.refined();
    }
}

/// Evaluate a polynomial with algebraic-number coefficients at an
/// algebraic number, exactly.
pub fn eval_alg_poly(coeffs: &[AlgebraicNumber], x: &AlgebraicNumber) -> AlgebraicNumber {
    let mut acc = AlgebraicNumber::zero();
    for c in coeffs.iter().rev() {
        acc = add(&mul(&acc, x), c);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::{designated_root, RootSelector};

    fn qp(ints: &[i64]) -> Poly<Rationals> {
        Poly::from_ints(&Rationals, ints)
    }

    fn sqrt(n: i64) -> AlgebraicNumber {
        designated_root(&qp(&[-n, 0, 1]), &RootSelector::FirstRealPositive).unwrap()
    }

    #[test]
    fn sqrt2_squared_is_2() {
        let r = sqrt(2);
        let sq = mul(&r, &r);
        assert_eq!(sq, AlgebraicNumber::from_int(2));
    }

    #[test]
    fn sqrt2_plus_sqrt3() {
        let s = add(&sqrt(2), &sqrt(3));
        assert_eq!(s.minpoly(), &qp(&[1, 0, -10, 0, 1]));
        assert!(s.is_real());
        // the value is about 3.146
        let refined = s.refined_below(&BigRational::new(1.into(), 100.into()));
        assert!(refined.rect().re.lo > Rationals.from_int(3));
        assert!(refined.rect().re.hi < Rationals.from_int(4));
    }

    #[test]
    fn cube_roots_of_unity_sum_to_minus_one() {
        // ζ₃ + ζ₃² = −1
        let phi = qp(&[1, 1, 1]);
        let roots = crate::closure::all_roots(&phi).unwrap();
        let s = add(&roots[0], &roots[1]);
        assert_eq!(s, AlgebraicNumber::from_int(-1));
    }

    #[test]
    fn division_and_inverse() {
        let r = sqrt(2);
        let one = div_ok(&r, &r);
        assert_eq!(one, AlgebraicNumber::from_int(1));
        let half_sqrt2 = div_ok(&AlgebraicNumber::from_int(1), &r);
        // 1/√2 has minimal polynomial x² − 1/2
        let expect = Poly::new(
            &Rationals,
            vec![
                BigRational::new((-1).into(), 2.into()),
                BigRational::zero(),
                BigRational::from_integer(1.into()),
            ],
        );
        assert_eq!(half_sqrt2.minpoly(), &expect);
        assert!(alg_arith(&r, &AlgebraicNumber::zero(), AlgOp::Div).is_err());
    }

    fn div_ok(a: &AlgebraicNumber, b: &AlgebraicNumber) -> AlgebraicNumber {
        alg_arith(a, b, AlgOp::Div).unwrap()
    }

    #[test]
    fn complex_arithmetic() {
        // i·∛2 is not real; (i·∛2)³ = −2i... check via minimal polynomial:
        // x = i·∛2 satisfies x⁶ = −4 ⇒ x⁶ + 4 = 0; minpoly is degree 6
        let i = designated_root(&qp(&[-1, 0, 0, 0, 1]), &RootSelector::FirstPrimitive).unwrap();
        let cbrt2 = designated_root(&qp(&[-2, 0, 0, 1]), &RootSelector::FirstRealPositive).unwrap();
        let prod = mul(&i, &cbrt2);
        assert!(!prod.is_real());
        // x = i·∛2 satisfies x⁶ = −4, and x⁶ + 4 is its minimal polynomial
        assert_eq!(prod.minpoly(), &qp(&[4, 0, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn eval_alg_poly_small() {
        // √2 is a root of x² − 2 with algebraic coefficient arithmetic
        let r = sqrt(2);
        let v = eval_alg_poly(
            &[AlgebraicNumber::from_int(-2), AlgebraicNumber::zero(), AlgebraicNumber::from_int(1)],
            &r,
        );
        assert!(v.is_zero());
    }

    #[test]
    fn arithmetic_refinement_independent() {
        let a = sqrt(2);
        let b = sqrt(3).refined().refined().refined();
        let s1 = add(&a, &sqrt(3));
        let s2 = add(&a.refined(), &b);
        assert_eq!(s1, s2);
    }
}
