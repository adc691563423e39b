//! Sturm sequences: exact real-root counting and isolation over ℚ.
//!
//! Rational roots are split off by factorization first, so the remaining
//! isolation never has to worry about hitting a root with a rational
//! bisection point.

use crate::poly::{factor_q, Poly};
use crate::scalar::{Field, Rationals};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub struct SturmChain {
    chain: Vec<Poly<Rationals>>,
}

fn sign(r: &BigRational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl SturmChain {
    /// Chain p, p', −rem(p, p'), ... for a squarefree p.
    pub fn new(p: &Poly<Rationals>) -> Self {
        let q = Rationals;
        let mut chain = vec![p.clone(), p.derivative(&q)];
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
        SturmChain { chain }
    }

    fn variations(signs: impl Iterator<Item = i32>) -> usize {
        let mut last = 0i32;
        let mut v = 0usize;
        for s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        let q = Rationals;
        Self::variations(self.chain.iter().map(|p| sign(&p.eval(&q, x))))
    }

    pub fn variations_at_infinity(&self, positive: bool) -> usize {
        let q = Rationals;
        Self::variations(self.chain.iter().map(|p| {
            if p.is_zero() {
                return 0;
            }
            let s = sign(&p.leading(&q));
            if positive || p.deg() % 2 == 0 {
                s
            } else {
                -s
            }
        }))
    }

    /// Number of distinct real roots in the half-open interval (a, b].
    pub fn count_half_open(&self, a: &BigRational, b: &BigRational) -> usize {
        let va = self.variations_at(a);
        let vb = self.variations_at(b);
        va.saturating_sub(vb)
    }

    pub fn count_all_real(&self) -> usize {
        let vm = self.variations_at_infinity(false);
        let vp = self.variations_at_infinity(true);
        vm.saturating_sub(vp)
    }
}

/// 1 + max |aᵢ/aₙ|: every complex root has absolute value below this.
pub fn cauchy_bound(p: &Poly<Rationals>) -> BigRational {
    let q = Rationals;
    let lead = p.leading(&q);
    let mut m = BigRational::zero();
    for c in p.coeffs().iter().take(p.coeffs().len().saturating_sub(1)) {
        let r = (c / &lead).abs();
        if r > m {
            m = r;
        }
    }
    m + q.one()
}

/// Exact sign of p(x).
pub fn sign_at(p: &Poly<Rationals>, x: &BigRational) -> i32 {
    sign(&p.eval(&Rationals, x))
}

/// Isolating intervals for the real roots of a squarefree polynomial,
/// in ascending order. Rational roots come back as degenerate points;
/// irrational roots as closed intervals [a, b] with rational non-root
/// endpoints containing exactly one root. Intervals are pairwise disjoint.
pub fn isolate_real_roots(p: &Poly<Rationals>) -> Vec<(BigRational, BigRational)> {
    let q = Rationals;
    assert!(!p.is_zero());
    if p.deg() == 0 {
        return Vec::new();
    }
    // split off rational roots exactly
    let fac = factor_q::factor_q(p).expect("nonzero");
    let mut rational_roots: Vec<BigRational> = Vec::new();
    let mut rest = Poly::one(&q);
    for (f, _) in &fac.factors {
        if f.deg() == 1 {
            rational_roots.push(q.neg(&f.coeffs()[0]));
        } else {
            rest = rest.mul(&q, f);
        }
    }
    let mut out: Vec<(BigRational, BigRational)> =
        rational_roots.iter().map(|r| (r.clone(), r.clone())).collect();

    if rest.deg() >= 2 {
        let chain = SturmChain::new(&rest);
        let bound = cauchy_bound(&rest);
        let lo = -bound.clone();
        let hi = bound;
        let total = chain.count_half_open(&lo, &hi);
        let mut stack = vec![(lo, hi, total)];
        let mut isolated: Vec<(BigRational, BigRational)> = Vec::new();
        while let Some((a, b, n)) = stack.pop() {
            if n == 0 {
                continue;
            }
            if n == 1 {
                isolated.push((a, b));
                continue;
            }
            let mid = (&a + &b) / Rationals.from_int(2);
            // rest has no rational roots, so mid is never a root
            let left = chain.count_half_open(&a, &mid);
            stack.push((a, mid.clone(), left));
            stack.push((mid, b, n - left));
        }
        // shrink until intervals (and the rational points) are pairwise disjoint
        loop {
            let mut all: Vec<(BigRational, BigRational)> = out.clone();
            all.extend(isolated.iter().cloned());
            all.sort();
            let overlapping = all.windows(2).any(|w| w[0].1 >= w[1].0);
            if !overlapping {
                break;
            }
            for iv in isolated.iter_mut() {
                *iv = halve(&chain, iv.clone());
            }
        }
        out.extend(isolated);
    }
    out.sort();
    out
}

/// One bisection step keeping the unique root of the chain's polynomial.
pub fn halve(chain: &SturmChain, (a, b): (BigRational, BigRational)) -> (BigRational, BigRational) {
    if a == b {
        return (a, b);
    }
    let mid = (&a + &b) / Rationals.from_int(2);
    if chain.count_half_open(&a, &mid) == 1 {
        (a, mid)
    } else {
        (mid, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::parse_rational;

    fn qp(ints: &[i64]) -> Poly<Rationals> {
        Poly::from_ints(&Rationals, ints)
    }

    #[test]
    fn count_roots_of_quadratics() {
        let chain = SturmChain::new(&qp(&[-2, 0, 1]));
        assert_eq!(chain.count_all_real(), 2);
        let chain = SturmChain::new(&qp(&[1, 0, 1]));
        assert_eq!(chain.count_all_real(), 0);
    }

    #[test]
    fn isolate_sqrt2() {
        let ivs = isolate_real_roots(&qp(&[-2, 0, 1]));
        assert_eq!(ivs.len(), 2);
        // −√2 then √2
        assert!(ivs[0].1 < BigRational::zero());
        assert!(ivs[1].0 > BigRational::zero());
        let chain = SturmChain::new(&qp(&[-2, 0, 1]));
        for (a, b) in &ivs {
            assert_eq!(chain.count_half_open(a, b), 1);
        }
    }

    #[test]
    fn rational_roots_become_points() {
        // (x−1)(x²−2)
        let q = Rationals;
        let f = qp(&[-1, 1]).mul(&q, &qp(&[-2, 0, 1]));
        let ivs = isolate_real_roots(&f);
        assert_eq!(ivs.len(), 3);
        assert!(ivs.iter().any(|(a, b)| a == b && *a == q.one()));
    }

    #[test]
    fn disjointness_of_close_roots() {
        // roots 1/3 and 1/2 and 5/12: all rational and close together
        let q = Rationals;
        let f = qp(&[0, 1])
            .sub(&q, &Poly::constant(&q, parse_rational("1/3").unwrap()))
            .mul(
                &q,
                &qp(&[0, 1]).sub(&q, &Poly::constant(&q, parse_rational("1/2").unwrap())),
            )
            .mul(
                &q,
                &qp(&[0, 1]).sub(&q, &Poly::constant(&q, parse_rational("5/12").unwrap())),
            );
        let ivs = isolate_real_roots(&f);
        assert_eq!(ivs.len(), 3);
        for w in ivs.windows(2) {
            assert!(w[0].1 < w[1].0);
        }
    }

    #[test]
    fn quintic_with_three_real_roots() {
        // x^5 − 4x + 1 has 3 real roots
        let ivs = isolate_real_roots(&qp(&[1, -4, 0, 0, 0, 1]));
        assert_eq!(ivs.len(), 3);
    }
}
