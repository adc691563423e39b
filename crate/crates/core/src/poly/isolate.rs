//! Certified complex root isolation by rectangle subdivision.
//!
//! The number of roots inside a rectangle is computed exactly from the
//! winding number of f around the boundary, which reduces to Cauchy
//! indices of Im f / Re f along the four edges (Sturm–Tarski). Rectangles
//! whose boundary passes through a root, or whose corners make the index
//! undefined, are detected and the offending split line is moved.

use crate::boxes::{Interval, Rect};
use crate::error::{Error, Result};
use crate::poly::sturm::{cauchy_bound, isolate_real_roots, SturmChain};
use crate::poly::Poly;
use crate::scalar::{Field, Rationals};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

/// Re and Im parts of f along a line, as polynomials in the free coordinate.
/// Horizontal: z = t + i·c. Vertical: z = c + i·t.
fn edge_polys(
    f: &Poly<Rationals>,
    c: &BigRational,
    horizontal: bool,
) -> (Poly<Rationals>, Poly<Rationals>) {
    let q = Rationals;
    let mut re = Poly::<Rationals>::zero();
    let mut im = Poly::<Rationals>::zero();
    let t = Poly::x(&q);
    let cc = Poly::constant(&q, c.clone());
    for coeff in f.coeffs().iter().rev() {
        // (re + i·im) · (z) + coeff
        let (nre, nim) = if horizontal {
            // z = t + i c
            (
                re.mul(&q, &t).sub(&q, &im.mul(&q, &cc)),
                re.mul(&q, &cc).add(&q, &im.mul(&q, &t)),
            )
        } else {
            // z = c + i t
            (
                re.mul(&q, &cc).sub(&q, &im.mul(&q, &t)),
                re.mul(&q, &t).add(&q, &im.mul(&q, &cc)),
            )
        };
        re = nre.add(&q, &Poly::constant(&q, coeff.clone()));
        im = nim;
    }
    (re, im)
}

/// Cauchy index of Q/P over (a, b) via the signed remainder sequence:
/// V(a) − V(b). Requires P(a) ≠ 0 and P(b) ≠ 0.
fn cauchy_index(
    p: &Poly<Rationals>,
    qq: &Poly<Rationals>,
    a: &BigRational,
    b: &BigRational,
) -> Option<i64> {
    let q = Rationals;
    if p.eval(&q, a).is_zero() || p.eval(&q, b).is_zero() {
        return None;
    }
    let mut chain = vec![p.clone(), qq.clone()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[n - 2].rem(&q, &chain[n - 1]).unwrap();
        if r.is_zero() {
            break;
        }
        chain.push(r.neg(&q));
    }
    let vars = |x: &BigRational| -> i64 {
        let mut last = 0i32;
        let mut v = 0i64;
        for pol in &chain {
            let e = pol.eval(&q, x);
            let s = if e.is_zero() {
                0
            } else if e.is_positive() {
                1
            } else {
                -1
            };
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    };
    Some(vars(a) - vars(b))
}

/// Exact number of roots of the squarefree `f` strictly inside `rect`,
/// or None when a root lies on the boundary or a corner makes the edge
/// index undefined (the caller then moves the rectangle slightly).
pub fn count_roots_in_rect(f: &Poly<Rationals>, rect: &Rect) -> Option<usize> {
    let q = Rationals;
    if f.deg() == 0 {
        return Some(0);
    }
    let (xlo, xhi) = (&rect.re.lo, &rect.re.hi);
    let (ylo, yhi) = (&rect.im.lo, &rect.im.hi);
    if xlo >= xhi || ylo >= yhi {
        return None;
    }
    // edges: (fixed coordinate, horizontal?, param from, param to)
    let edges = [
        (ylo.clone(), true, xlo.clone(), xhi.clone()),
        (xhi.clone(), false, ylo.clone(), yhi.clone()),
        (yhi.clone(), true, xhi.clone(), xlo.clone()),
        (xlo.clone(), false, yhi.clone(), ylo.clone()),
    ];
    let mut total: i64 = 0;
    for (c, horizontal, t0, t1) in edges {
        let (p, qq) = edge_polys(f, &c, horizontal);
        // a root of f on the edge is a common zero of P and Q there
        let g = p.gcd(&q, &qq);
        if g.deg() > 0 {
            let (lo, hi) = if t0 < t1 { (&t0, &t1) } else { (&t1, &t0) };
            if !g.eval(&q, lo).is_zero() {
                let chain = SturmChain::new(&g.squarefree_part(&q));
                if chain.count_half_open(lo, hi) > 0 {
                    return None;
                }
            } else {
                return None;
            }
        } else if p.is_zero() {
            // f maps the whole edge into the imaginary axis: the index is
            // undefined; treat as a degenerate boundary
            return None;
        }
        let (a, b, sign) = if t0 < t1 { (t0, t1, 1) } else { (t1, t0, -1) };
        let ind = cauchy_index(&p, &qq, &a, &b)?;
        total += sign * ind;
    }
    if total % 2 != 0 {
        return None;
    }
    let count = -total / 2;
    if count < 0 {
        return None;
    }
    Some(count as usize)
}

/// A strictly increasing sequence of interior split candidates for (lo, hi).
fn split_candidates(lo: &BigRational, hi: &BigRational) -> impl Iterator<Item = BigRational> {
    let lo = lo.clone();
    let hi = hi.clone();
    (0u64..64).map(move |k| {
        // mid, then points drifting by odd 1/(2k+3) fractions of the width
        let q = Rationals;
        let w = &hi - &lo;
        let frac = BigRational::new((k + 1).into(), (2 * k + 3).into());
        &lo + w * frac * q.one()
    })
}

/// Split a rectangle with a known root count into children with exact
/// counts; the split line dodges roots and corner degeneracies.
fn split_rect(f: &Poly<Rationals>, rect: &Rect, count: usize) -> Vec<(Rect, usize)> {
    let vertical_split = rect.re.width() >= rect.im.width();
    let (lo, hi) = if vertical_split {
        (rect.re.lo.clone(), rect.re.hi.clone())
    } else {
        (rect.im.lo.clone(), rect.im.hi.clone())
    };
    for m in split_candidates(&lo, &hi) {
        if m <= lo || m >= hi {
            continue;
        }
        let (r1, r2) = if vertical_split {
            (
                Rect::new(Interval::new(lo.clone(), m.clone()), rect.im.clone()),
                Rect::new(Interval::new(m.clone(), hi.clone()), rect.im.clone()),
            )
        } else {
            (
                Rect::new(rect.re.clone(), Interval::new(lo.clone(), m.clone())),
                Rect::new(rect.re.clone(), Interval::new(m.clone(), hi.clone())),
            )
        };
        if let (Some(c1), Some(c2)) = (count_roots_in_rect(f, &r1), count_roots_in_rect(f, &r2)) {
            if c1 + c2 == count {
                return vec![(r1, c1), (r2, c2)];
            }
        }
    }
    panic!("no valid split line found");
}

/// Isolating boxes for the non-real roots of a squarefree polynomial,
/// upper half plane only, each box strictly above the real axis.
fn isolate_upper_roots(f: &Poly<Rationals>, pairs: usize) -> Vec<Rect> {
    if pairs == 0 {
        return Vec::new();
    }
    let q = Rationals;
    // outer box: perturb the bound until the boundary is clean and the
    // lower edge delta sits below every positive imaginary part
    let bound = cauchy_bound(f) + q.one();
    let mut delta = BigRational::one();
    let mut bump = 0i64;
    let outer = loop {
        let b = &bound + BigRational::new(bump.into(), 7.into());
        let rect = Rect::new(
            Interval::new(-b.clone(), b.clone()),
            Interval::new(delta.clone(), b.clone()),
        );
        match count_roots_in_rect(f, &rect) {
            Some(c) if c == pairs => break rect,
            Some(_) => {
                delta /= q.from_int(2);
            }
            None => {
                bump += 1;
                delta *= BigRational::new(61.into(), 64.into());
            }
        }
        assert!(bump < 10_000, "outer box search failed");
    };
    let mut done = Vec::new();
    let mut stack = vec![(outer, pairs)];
    while let Some((rect, count)) = stack.pop() {
        if count == 0 {
            continue;
        }
        if count == 1 {
            done.push(rect);
            continue;
        }
        for child in split_rect(f, &rect, count) {
            stack.push(child);
        }
    }
    done
}

/// Refine an isolating box (exactly one root inside) by one split step.
pub fn refine_rect(f: &Poly<Rationals>, rect: &Rect) -> Rect {
    if rect.im.lo == rect.im.hi {
        // real root: refine the interval by Sturm bisection, or keep a point
        if rect.re.lo == rect.re.hi {
            return rect.clone();
        }
        let chain = SturmChain::new(f);
        let (lo, hi) = crate::poly::sturm::halve(&chain, (rect.re.lo.clone(), rect.re.hi.clone()));
        return Rect::new(Interval::new(lo, hi), rect.im.clone());
    }
    let mut parts = split_rect(f, rect, 1);
    let (a, ca) = parts.remove(0);
    if ca == 1 {
        a
    } else {
        parts.remove(0).0
    }
}

/// Squarefree part over ℚ with content normalized.
pub fn squarefree_q(f: &Poly<Rationals>) -> Poly<Rationals> {
    f.squarefree_part(&Rationals)
}

/// Isolating rectangles for all distinct complex roots of `f`:
/// real roots first in ascending order as height-0 rectangles, then
/// non-real roots ordered by (real part, imaginary part).
pub fn isolate_roots(f: &Poly<Rationals>) -> Result<Vec<Rect>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.deg() == 0 {
        return Ok(Vec::new());
    }
    let sf = squarefree_q(f);
    let real = isolate_real_roots(&sf);
    let mut rects: Vec<Rect> = real
        .into_iter()
        .map(|(a, b)| Rect::new(Interval::new(a, b), Interval::point(BigRational::zero())))
        .collect();
    let pairs = (sf.deg() - rects.len()) / 2;
    let upper = isolate_upper_roots(&sf, pairs);
    let mut nonreal: Vec<Rect> = Vec::new();
    for u in upper {
        nonreal.push(u.conj());
        nonreal.push(u);
    }
    sort_nonreal(&sf, &mut nonreal);
    rects.extend(nonreal);
    Ok(rects)
}

/// Sort non-real isolating boxes by (re, im) exactly.
fn sort_nonreal(f: &Poly<Rationals>, boxes: &mut [Rect]) {
    let n = boxes.len();
    for i in 1..n {
        for j in (1..=i).rev() {
            if cmp_roots(f, &boxes[j - 1], &boxes[j]) == Ordering::Greater {
                boxes.swap(j - 1, j);
            } else {
                break;
            }
        }
    }
}

/// Exact (re, im) comparison of two distinct roots of the squarefree `f`,
/// given isolating boxes. Refines boxes; when the real-part intervals keep
/// overlapping, decides equality of real parts through the sum-of-roots
/// resultant and falls back to the imaginary parts.
pub fn cmp_roots(f: &Poly<Rationals>, a: &Rect, b: &Rect) -> Ordering {
    let mut ra = a.clone();
    let mut rb = b.clone();
    for _ in 0..12 {
        if let Some(o) = partial_cmp_by(&ra.re, &rb.re) {
            return o.then_with(|| cmp_im(f, &ra, &rb));
        }
        ra = refine_rect(f, &ra);
        rb = refine_rect(f, &rb);
    }
    // real parts may be genuinely equal: decide with the resultant whose
    // roots are the sums of pairs of roots of f (2·Re z among them)
    if real_parts_equal(f, &ra, &rb) {
        cmp_im(f, &ra, &rb)
    } else {
        loop {
            if let Some(o) = partial_cmp_by(&ra.re, &rb.re) {
                return o;
            }
            ra = refine_rect(f, &ra);
            rb = refine_rect(f, &rb);
        }
    }
}

fn partial_cmp_by(x: &Interval, y: &Interval) -> Option<Ordering> {
    if x.hi < y.lo {
        Some(Ordering::Less)
    } else if y.hi < x.lo {
        Some(Ordering::Greater)
    } else {
        None
    }
}

fn cmp_im(f: &Poly<Rationals>, a: &Rect, b: &Rect) -> Ordering {
    let mut ra = a.clone();
    let mut rb = b.clone();
    loop {
        if let Some(o) = partial_cmp_by(&ra.im, &rb.im) {
            return o;
        }
        if ra == rb {
            return Ordering::Equal;
        }
        ra = refine_rect(f, &ra);
        rb = refine_rect(f, &rb);
    }
}

/// The polynomial whose roots are all pairwise sums of roots of f,
/// computed as Res_y(f(y), f(x − y)) by evaluation–interpolation.
fn sum_of_roots_poly(f: &Poly<Rationals>) -> Poly<Rationals> {
    let q = Rationals;
    let n = f.deg();
    let deg = n * n;
    let mut xs = Vec::with_capacity(deg + 1);
    let mut ys = Vec::with_capacity(deg + 1);
    for k in 0..=deg {
        let x0 = q.from_int(k as i64);
        // f(x0 − y) as a polynomial in y
        let mut shifted = Poly::<Rationals>::zero();
        let minus_y = Poly::new(&q, vec![x0.clone(), q.from_int(-1)]);
        for c in f.coeffs().iter().rev() {
            shifted = shifted
                .mul(&q, &minus_y)
                .add(&q, &Poly::constant(&q, c.clone()));
        }
        ys.push(f.resultant(&q, &shifted));
        xs.push(x0);
    }
    lagrange_interpolate(&xs, &ys)
}

pub fn lagrange_interpolate(xs: &[BigRational], ys: &[BigRational]) -> Poly<Rationals> {
    let q = Rationals;
    let mut acc = Poly::<Rationals>::zero();
    for (i, yi) in ys.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut term = Poly::constant(&q, yi.clone());
        for (j, xj) in xs.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = &xs[i] - xj;
            let lin = Poly::new(&q, vec![-xj / &denom, denom.recip()]);
            term = term.mul(&q, &lin);
        }
        acc = acc.add(&q, &term);
    }
    acc
}

/// Do two roots (given by isolating boxes) of `f` have equal real parts?
/// Both values 2·Re are roots of the sum resultant; they are equal iff they
/// land in the same isolating interval of that polynomial.
fn real_parts_equal(f: &Poly<Rationals>, a: &Rect, b: &Rect) -> bool {
    let q = Rationals;
    let s = sum_of_roots_poly(f).squarefree_part(&q);
    let ivs = isolate_real_roots(&s);
    let chain = SturmChain::new(&s);
    let mut ra = a.clone();
    let mut rb = b.clone();
    loop {
        // enclosures of 2·Re for both roots
        let two = q.from_int(2);
        let ia = Interval::new(&ra.re.lo * &two, &ra.re.hi * &two);
        let ib = Interval::new(&rb.re.lo * &two, &rb.re.hi * &two);
        let find = |iv: &Interval| -> Option<usize> {
            let mut hits = Vec::new();
            for (idx, (lo, hi)) in ivs.iter().enumerate() {
                if !(hi < &iv.lo || &iv.hi < lo) {
                    hits.push(idx);
                }
            }
            if hits.len() == 1 {
                Some(hits[0])
            } else {
                None
            }
        };
        // the enclosure must also pin down a unique root of s inside itself
        let pinned = |iv: &Interval| -> bool {
            chain.count_half_open(&iv.lo, &iv.hi) <= 1
        };
        if let (Some(i), Some(j)) = (find(&ia), find(&ib)) {
            if pinned(&ia) && pinned(&ib) {
                return i == j;
            }
        }
        ra = refine_rect(f, &ra);
        rb = refine_rect(f, &rb);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(ints: &[i64]) -> Poly<Rationals> {
        Poly::from_ints(&Rationals, ints)
    }

    fn iv(a: i64, b: i64) -> Interval {
        Interval::new(Rationals.from_int(a), Rationals.from_int(b))
    }

    #[test]
    fn winding_count_basic() {
        // f = z has one root in a box around 0
        let f = qp(&[0, 1]);
        let r = Rect::new(iv(-1, 1), iv(-1, 1));
        assert_eq!(count_roots_in_rect(&f, &r), Some(1));
        let r2 = Rect::new(iv(1, 2), iv(1, 2));
        assert_eq!(count_roots_in_rect(&f, &r2), Some(0));
    }

    #[test]
    fn winding_count_x2_plus_1() {
        let f = qp(&[1, 0, 1]);
        // box around i only
        let upper = Rect::new(iv(-1, 1), iv(0, 2));
        assert_eq!(count_roots_in_rect(&f, &upper), Some(1));
        // box around both ±i
        let both = Rect::new(iv(-1, 1), iv(-2, 2));
        assert_eq!(count_roots_in_rect(&f, &both), Some(2));
    }

    #[test]
    fn boundary_root_detected() {
        let f = qp(&[0, 1]);
        // 0 sits on the left edge
        let r = Rect::new(iv(0, 1), iv(-1, 1));
        assert_eq!(count_roots_in_rect(&f, &r), None);
    }

    #[test]
    fn isolate_x2_minus_2() {
        let rects = isolate_roots(&qp(&[-2, 0, 1])).unwrap();
        assert_eq!(rects.len(), 2);
        for r in &rects {
            assert_eq!(r.im.lo, r.im.hi);
        }
        assert!(rects[0].re.hi < rects[1].re.lo);
    }

    #[test]
    fn isolate_x2_plus_1() {
        let rects = isolate_roots(&qp(&[1, 0, 1])).unwrap();
        assert_eq!(rects.len(), 2);
        // both non-real, symmetric about the real axis, excluding it
        assert!(rects[0].im.hi < BigRational::zero());
        assert!(rects[1].im.lo > BigRational::zero());
        assert_eq!(rects[0], rects[1].conj());
    }

    #[test]
    fn isolate_linear_degenerate() {
        let rects = isolate_roots(&qp(&[-1, 1])).unwrap();
        assert_eq!(rects.len(), 1);
        assert_eq!(rects[0], Rect::real_point(Rationals.one()));
    }

    #[test]
    fn isolate_x4_minus_2_count_and_order() {
        let rects = isolate_roots(&qp(&[-2, 0, 0, 0, 1])).unwrap();
        assert_eq!(rects.len(), 4);
        // two real, two purely imaginary; non-real ordered by (re, im)
        assert_eq!(rects.iter().filter(|r| r.im.lo == r.im.hi).count(), 2);
        let nonreal: Vec<&Rect> = rects.iter().filter(|r| r.im.lo != r.im.hi).collect();
        assert!(nonreal[0].im.hi < nonreal[1].im.lo);
    }

    #[test]
    fn equal_real_parts_tiebreak() {
        // (x²+1)(x²+4): roots ±i, ±2i all share Re = 0
        let q = Rationals;
        let f = qp(&[1, 0, 1]).mul(&q, &qp(&[4, 0, 1]));
        let rects = isolate_roots(&f).unwrap();
        assert_eq!(rects.len(), 4);
        // ordered by imaginary part: -2, -1, 1, 2
        let mids: Vec<BigRational> = rects.iter().map(|r| r.im.mid()).collect();
        for w in mids.windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn disjointness_and_per_box_counts() {
        let q = Rationals;
        // x^5 - 4x + 1: 3 real roots, one conjugate pair
        let f = qp(&[1, -4, 0, 0, 0, 1]);
        let rects = isolate_roots(&f).unwrap();
        assert_eq!(rects.len(), 5);
        for i in 0..rects.len() {
            for j in i + 1..rects.len() {
                assert!(rects[i].is_disjoint(&rects[j]), "{i} vs {j}");
            }
        }
        // each non-degenerate complex box certifies one root
        for r in &rects {
            if r.im.lo != r.im.hi {
                assert_eq!(count_roots_in_rect(&f, r), Some(1));
            } else {
                let chain = SturmChain::new(&f);
                if r.re.lo != r.re.hi {
                    assert_eq!(chain.count_half_open(&r.re.lo, &r.re.hi), 1);
                } else {
                    assert!(f.eval(&q, &r.re.lo).is_zero());
                }
            }
        }
    }
}
