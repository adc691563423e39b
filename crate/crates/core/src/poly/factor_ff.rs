//! Cantor–Zassenhaus factorization over GF(p^k): squarefree decomposition,
//! distinct-degree splitting, then equal-degree splitting. The random
//! elements come from a SplitMix64 stream seeded from the input polynomial,
//! so repeated runs produce identical results.

use crate::poly::{squarefree_decomposition, Factorization, Poly};
use crate::scalar::ff::{Ff, FfElem};
use crate::scalar::Field;

/// Deterministic 64-bit stream; the constants are the reference SplitMix64.
pub struct SplitMix64(pub u64);

impl SplitMix64 {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }
}

fn seed_from_poly(field: &Ff, f: &Poly<Ff>) -> u64 {
    let mut h = 0xcbf29ce484222325u64;
    let mut mix = |v: u64| {
        h ^= v;
        h = h.wrapping_mul(0x100000001b3);
    };
    mix(field.p());
    mix(field.k() as u64);
    for c in f.coeffs() {
        mix(field.encode(c).wrapping_add(1));
    }
    h
}

/// x^(q^j) mod f for j = 1: one application of the q-power Frobenius.
fn frobenius_step(field: &Ff, a: &Poly<Ff>, f: &Poly<Ff>) -> Poly<Ff> {
    a.pow_mod(field, field.order(), f).expect("frobenius")
}

/// Rabin irreducibility test.
pub fn is_irreducible(field: &Ff, f: &Poly<Ff>) -> bool {
    let n = match f.degree() {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    let f = f.monic(field).1;
    let x = Poly::x(field);
    // x^(q^i) mod f for i = 1..n
    let mut frob = Vec::with_capacity(n + 1);
    frob.push(x.clone());
    for _ in 0..n {
        let last = frob.last().unwrap();
        frob.push(frobenius_step(field, last, &f));
    }
    if frob[n] != x.rem(field, &f).unwrap() {
        return false;
    }
    let mut primes = Vec::new();
    let mut m = n;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            primes.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        primes.push(m);
    }
    for r in primes {
        let g = frob[n / r].sub(field, &x).gcd(field, &f);
        if g.deg() > 0 {
            return false;
        }
    }
    true
}

/// The first monic irreducible of the given degree in canonical order.
pub fn first_irreducible_of_degree(field: &Ff, degree: usize) -> Poly<Ff> {
    let q = field.order();
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
        if is_irreducible(field, &p) {
            return p;
        }
    }
    unreachable!("an irreducible of every degree exists over a finite field")
}

/// Distinct-degree decomposition of a monic squarefree polynomial:
/// returns (product of irreducible factors of degree d, d).
fn distinct_degree(field: &Ff, f: &Poly<Ff>) -> Vec<(Poly<Ff>, usize)> {
    let mut out = Vec::new();
    let mut f = f.clone();
    let x = Poly::x(field);
    let mut h = x.clone();
    let mut d = 0usize;
    while f.deg() > 0 {
        d += 1;
        if 2 * d > f.deg() {
            out.push((f.clone(), f.deg()));
            break;
        }
        h = frobenius_step(field, &h, &f);
        let g = h.sub(field, &x).gcd(field, &f);
        if g.deg() > 0 {
            out.push((g.clone(), d));
            f = f.div_exact(field, &g);
            h = h.rem(field, &f).expect("ddf rem");
        }
    }
    out
}

/// Random polynomial of degree < bound from the deterministic stream.
fn random_poly(field: &Ff, rng: &mut SplitMix64, bound: usize) -> Poly<Ff> {
    let q = field.order();
    let coeffs: Vec<FfElem> = (0..bound).map(|_| field.decode(rng.next_u64() % q)).collect();
    Poly::new(field, coeffs)
}

/// Equal-degree splitting: f is monic squarefree, all factors of degree d.
fn equal_degree(field: &Ff, f: &Poly<Ff>, d: usize, rng: &mut SplitMix64) -> Vec<Poly<Ff>> {
    if f.deg() == d {
        return vec![f.clone()];
    }
    let q = field.order();
    loop {
        let a = random_poly(field, rng, f.deg());
        if a.deg() == 0 && q > 2 {
            continue;
        }
        let g0 = a.gcd(field, f);
        if g0.deg() > 0 && g0.deg() < f.deg() {
            let mut out = equal_degree(field, &g0, d, rng);
            out.extend(equal_degree(field, &f.div_exact(field, &g0), d, rng));
            return out;
        }
        let splitter = if field.p() == 2 {
            // trace map to GF(2): sum of a^(2^i) over the 2-power degree
            let m = (field.k() * d) as u32;
            let mut acc = a.rem(field, f).unwrap();
            let mut term = acc.clone();
            for _ in 1..m {
                term = term.pow_mod(field, 2, f).unwrap();
                acc = acc.add(field, &term).rem(field, f).unwrap();
            }
            acc
        } else {
            // a^((q^d-1)/2) - 1 via the norm to GF(q) then a small power
            let mut norm = a.rem(field, f).unwrap();
            let mut frob = a.rem(field, f).unwrap();
            for _ in 1..d {
                frob = frob.pow_mod(field, q, f).unwrap();
                norm = norm.mul(field, &frob).rem(field, f).unwrap();
            }
            let e = norm.pow_mod(field, (q - 1) / 2, f).unwrap();
            e.sub(field, &Poly::one(field))
        };
        let g = splitter.gcd(field, f);
        if g.deg() > 0 && g.deg() < f.deg() {
            let mut out = equal_degree(field, &g, d, rng);
            out.extend(equal_degree(field, &f.div_exact(field, &g), d, rng));
            return out;
        }
    }
}

/// Complete factorization over GF(p^k), canonical order, deterministic.
pub fn factor(field: &Ff, f: &Poly<Ff>) -> crate::error::Result<Factorization<Ff>> {
    if f.is_zero() {
        return Err(crate::error::Error::ZeroPolynomial);
    }
    let unit = f.leading(field);
    let mut rng = SplitMix64(seed_from_poly(field, f));
    let pth_root = |c: &FfElem| -> FfElem {
        // Frobenius inverse: c^(q/p)
        field.pow(c, field.order() / field.p())
    };
    let mut factors: Vec<(Poly<Ff>, usize)> = Vec::new();
    for (g, mult) in squarefree_decomposition(field, f, &pth_root) {
        for (h, d) in distinct_degree(field, &g) {
            for irr in equal_degree(field, &h, d, &mut rng) {
                factors.push((irr.monic(field).1, mult));
            }
        }
    }
    let mut fac = Factorization { unit, factors };
    fac.sort_canonical(field);
    Ok(fac)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_irreducibles_gf2() {
        let f2 = Ff::prime(2).unwrap();
        let irr = crate::scalar::base::irreducibles_ff(&f2, 3);
        let strings: Vec<String> = irr.iter().map(|p| p.to_string_var(&f2, "t")).collect();
        assert_eq!(strings, vec!["t", "t+1", "t^2+t+1"]);
    }

    #[test]
    fn first_irreducibles_gf4() {
        let gf4 = Ff::galois(2, 2).unwrap();
        let irr = crate::scalar::base::irreducibles_ff(&gf4, 2);
        let strings: Vec<String> = irr.iter().map(|p| p.to_string_var(&gf4, "t")).collect();
        assert_eq!(strings, vec!["t", "t+1"]);
    }

    #[test]
    fn factor_small_gf3() {
        let f3 = Ff::prime(3).unwrap();
        // x^2 + 1 factors over GF(3)? (-1 is not a QR mod 3, so irreducible)
        let f = Poly::from_ints(&f3, &[1, 0, 1]);
        let fac = factor(&f3, &f).unwrap();
        assert!(fac.is_irreducible());
        // x^2 - 1 = (x+1)(x+2)
        let g = Poly::from_ints(&f3, &[-1, 0, 1]);
        let fac = factor(&f3, &g).unwrap();
        assert_eq!(fac.factors.len(), 2);
        assert_eq!(fac.expand(&f3), g);
    }

    #[test]
    fn factor_with_multiplicity_gf2() {
        let f2 = Ff::prime(2).unwrap();
        // (x+1)^2 (x^2+x+1)
        let a = Poly::from_ints(&f2, &[1, 1]);
        let b = Poly::from_ints(&f2, &[1, 1, 1]);
        let f = a.mul(&f2, &a).mul(&f2, &b);
        let fac = factor(&f2, &f).unwrap();
        assert_eq!(fac.expand(&f2), f);
        assert_eq!(fac.factors.len(), 2);
        let mults: Vec<usize> = fac.factors.iter().map(|(_, m)| *m).collect();
        assert!(mults.contains(&2) && mults.contains(&1));
    }

    #[test]
    fn factor_gf9_deterministic() {
        let f9 = Ff::galois(3, 2).unwrap();
        // x^4 - 1 over GF(9) splits into linear factors (GF(9)* has order 8)
        let f = Poly::from_ints(&f9, &[-1, 0, 0, 0, 1]);
        let fac1 = factor(&f9, &f).unwrap();
        let fac2 = factor(&f9, &f).unwrap();
        assert_eq!(fac1, fac2);
        assert_eq!(fac1.factors.len(), 4);
        assert!(fac1.factors.iter().all(|(p, _)| p.deg() == 1));
        assert_eq!(fac1.expand(&f9), f);
    }

    #[test]
    fn irreducibility_matches_enumeration_gf2_deg4() {
        let f2 = Ff::prime(2).unwrap();
        // over GF(2) there are exactly 3 irreducible quartics
        let mut count = 0;
        for code in 0..16u64 {
            let mut coeffs: Vec<FfElem> = Vec::new();
            let mut c = code;
            for _ in 0..4 {
                coeffs.push(f2.decode(c % 2));
                c /= 2;
            }
            coeffs.push(f2.one());
            let p = Poly::new(&f2, coeffs);
            if is_irreducible(&f2, &p) {
                count += 1;
            }
        }
        assert_eq!(count, 3);
    }
}
