//! Factorization over ℚ: squarefree decomposition, then factorization
//! modulo a good prime, Hensel lifting to a Landau–Mignotte height, and
//! subset recombination. The brute-force Kronecker method in
//! `crate::oracle` cross-checks this whole path.

use crate::error::{Error, Result};
use crate::poly::{factor_ff, squarefree_decomposition, Factorization, Poly};
use crate::scalar::ff::Ff;
use crate::scalar::{Field, Rationals};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

type ZPoly = Vec<BigInt>;

fn z_trim(mut v: ZPoly) -> ZPoly {
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
    v
}

fn z_mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    z_trim(out)
}

fn z_sub(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    let mut out = vec![BigInt::zero(); n];
    for (i, item) in out.iter_mut().enumerate() {
        let x = a.get(i).cloned().unwrap_or_else(BigInt::zero);
        let y = b.get(i).cloned().unwrap_or_else(BigInt::zero);
        *item = x - y;
    }
    z_trim(out)
}

/// Content (gcd of coefficients, sign of the leading coefficient).
fn z_content(a: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
    }
    if g.is_zero() {
        g = BigInt::one();
    }
    if a.last().map(|c| c.is_negative()).unwrap_or(false) {
        g = -g;
    }
    g
}

fn z_primitive(a: &[BigInt]) -> ZPoly {
    let c = z_content(a);
    a.iter().map(|x| x / &c).collect()
}

/// Clear denominators: returns the primitive integer polynomial and the
/// rational unit u with input = u · primitive.
fn to_primitive_z(f: &Poly<Rationals>) -> (BigRational, ZPoly) {
    let q = Rationals;
    let mut lcm = BigInt::one();
    for c in f.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let ints: ZPoly = f
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let content = z_content(&ints);
    let prim: ZPoly = ints.iter().map(|x| x / &content).collect();
    let unit = BigRational::new(content, lcm);
    debug_assert!(!q.is_zero(&unit));
    (unit, prim)
}

fn z_to_q(a: &[BigInt]) -> Poly<Rationals> {
    Poly::new(
        &Rationals,
        a.iter().map(|c| BigRational::from_integer(c.clone())).collect(),
    )
}

fn z_to_ff(field: &Ff, a: &[BigInt]) -> Poly<Ff> {
    let p = BigInt::from(field.p());
    let coeffs = a
        .iter()
        .map(|c| {
            let r = c.mod_floor(&p);
            let r: u64 = r.to_string().parse().unwrap();
            if r == 0 {
                Vec::new()
            } else {
                vec![r]
            }
        })
        .collect();
    Poly::new(field, coeffs)
}

fn ff_to_z(field: &Ff, a: &Poly<Ff>) -> ZPoly {
    a.coeffs().iter().map(|c| BigInt::from(field.encode(c))).collect()
}

/// Symmetric representative of a mod m in (-m/2, m/2].
fn symmetric(a: &BigInt, m: &BigInt) -> BigInt {
    let r = a.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn z_mod_sym(a: &[BigInt], m: &BigInt) -> ZPoly {
    z_trim(a.iter().map(|c| symmetric(c, m)).collect())
}

/// 2^(n+1) · |lc| · ceil(‖g‖₂): every integer factor of g scaled by the
/// leading coefficient stays below this height.
fn mignotte_bound(g: &[BigInt]) -> BigInt {
    let norm2_sq: BigInt = g.iter().map(|c| c * c).sum();
    let norm2 = norm2_sq.sqrt() + 1;
    let lc = g.last().unwrap().abs();
    let n = g.len() - 1;
    (BigInt::one() << (n + 1)) * norm2 * lc
}

/// Linear multi-factor Hensel lifting: from f ≡ lc·∏gᵢ (mod p) to (mod pᵉ).
fn hensel_lift(f: &[BigInt], p: u64, e: u32, field: &Ff, gs: &[Poly<Ff>]) -> Vec<ZPoly> {
    let r = gs.len();
    let lc = f.last().unwrap().clone();
    // Bezout data mod p: tᵢ ≡ (∏_{j≠i} gⱼ)⁻¹ mod gᵢ
    let mut ts: Vec<Poly<Ff>> = Vec::with_capacity(r);
    for i in 0..r {
        let mut prod = Poly::one(field);
        for (j, g) in gs.iter().enumerate() {
            if j != i {
                prod = prod.mul(field, g).rem(field, &gs[i]).unwrap();
            }
        }
        let (d, s, _) = prod.ext_gcd(field, &gs[i]);
        assert_eq!(d.deg(), 0, "factors not coprime mod p");
        let dinv = field.inv(&d.coeffs()[0]).unwrap();
        ts.push(s.scale(field, &dinv).rem(field, &gs[i]).unwrap());
    }
    let lc_mod = z_to_ff(field, &[lc.clone()]);
    let lc_inv = field.inv(&lc_mod.coeffs()[0]).expect("lc invertible mod p");

    let mut lifted: Vec<ZPoly> = gs.iter().map(|g| ff_to_z(field, g)).collect();
    let big_p = BigInt::from(p);
    let mut modulus = big_p.clone();
    for _ in 1..e {
        // error = f - lc·∏Gᵢ, divisible by the current modulus
        let mut prod: ZPoly = vec![lc.clone()];
        for g in &lifted {
            prod = z_mul(&prod, g);
        }
        let err = z_sub(f, &prod);
        let err_over: ZPoly = err.iter().map(|c| c / &modulus).collect();
        let e_mod = z_to_ff(field, &err_over);
        for i in 0..r {
            let delta = e_mod
                .scale(field, &lc_inv)
                .mul(field, &ts[i])
                .rem(field, &gs[i])
                .unwrap();
            let delta_z = ff_to_z(field, &delta);
            for (k, d) in delta_z.iter().enumerate() {
                let d_sym = symmetric(d, &big_p);
                while lifted[i].len() <= k {
                    lifted[i].push(BigInt::zero());
                }
                lifted[i][k] += &modulus * d_sym;
            }
            lifted[i] = z_trim(lifted[i].clone());
        }
        modulus *= &big_p;
    }
    lifted
}

fn divides_exactly(h: &[BigInt], f: &[BigInt]) -> bool {
    if h.is_empty() {
        return false;
    }
    let q = Rationals;
    let (_, r) = z_to_q(f).divmod(&q, &z_to_q(h)).unwrap();
    r.is_zero()
}

/// Factor a primitive squarefree integer polynomial into primitive
/// irreducible integer polynomials with positive leading coefficients.
fn factor_squarefree_z(g: &ZPoly) -> Vec<ZPoly> {
    let n = g.len() - 1;
    if n <= 1 {
        return vec![g.clone()];
    }
    // choose a good prime: lc stays a unit and the reduction is squarefree;
    // among the first few good primes keep the one with fewest modular factors
    let mut best: Option<(Ff, Vec<Poly<Ff>>)> = None;
    let mut good_seen = 0;
    for &p in &[3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43] {
        let field = Ff::prime(p).unwrap();
        if g.last().unwrap().mod_floor(&BigInt::from(p)).is_zero() {
            continue;
        }
        let gp = z_to_ff(&field, g);
        if gp.deg() != n {
            continue;
        }
        let d = gp.derivative(&field);
        if gp.gcd(&field, &d).deg() != 0 {
            continue;
        }
        let fac = factor_ff::factor(&field, &gp).unwrap();
        let polys: Vec<Poly<Ff>> = fac.factors.into_iter().map(|(q, _)| q).collect();
        good_seen += 1;
        let better = match &best {
            None => true,
            Some((_, cur)) => polys.len() < cur.len(),
        };
        if better {
            best = Some((field, polys));
        }
        if good_seen >= 3 || best.as_ref().map(|(_, v)| v.len()) == Some(1) {
            break;
        }
    }
    let (field, gs) = best.expect("a good prime exists for a squarefree polynomial");
    if gs.len() == 1 {
        return vec![g.clone()];
    }

    let bound = mignotte_bound(g);
    let p = field.p();
    let mut e = 1u32;
    let mut pe = BigInt::from(p);
    while pe <= &bound * 2 {
        pe *= p;
        e += 1;
    }
    let lifted = hensel_lift(g, p, e, &field, &gs);

    // subset recombination
    let mut remaining: Vec<ZPoly> = lifted;
    let mut f_rem = g.clone();
    let mut found: Vec<ZPoly> = Vec::new();
    let mut size = 1usize;
    'outer: while 2 * size <= remaining.len() {
        let idxs: Vec<usize> = (0..remaining.len()).collect();
        for combo in combinations(&idxs, size) {
            let lc = f_rem.last().unwrap().clone();
            let mut prodc: ZPoly = vec![lc];
            for &i in &combo {
                prodc = z_mul(&prodc, &remaining[i]);
                prodc = z_mod_sym(&prodc, &pe);
            }
            let cand = z_primitive(&z_mod_sym(&prodc, &pe));
            if cand.len() > 1 && divides_exactly(&cand, &f_rem) {
                let quot = exact_quotient(&f_rem, &cand);
                found.push(cand);
                f_rem = z_primitive(&quot);
                let mut keep = Vec::new();
                for (i, g) in remaining.into_iter().enumerate() {
                    if !combo.contains(&i) {
                        keep.push(g);
                    }
                }
                remaining = keep;
                continue 'outer;
            }
        }
        size += 1;
    }
    if f_rem.len() > 1 {
        found.push(f_rem);
    }
    found
}

fn exact_quotient(f: &[BigInt], h: &[BigInt]) -> ZPoly {
    let q = Rationals;
    let (quot, r) = z_to_q(f).divmod(&q, &z_to_q(h)).unwrap();
    assert!(r.is_zero());
    let (_, prim) = to_primitive_z(&quot);
    prim
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut combo: Vec<usize> = (0..k).collect();
    if k > items.len() {
        return out;
    }
    loop {
        out.push(combo.iter().map(|&i| items[i]).collect());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if combo[i] != i + items.len() - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        combo[i] += 1;
        for j in i + 1..k {
            combo[j] = combo[j - 1] + 1;
        }
    }
}

/// Complete factorization over ℚ into monic irreducibles in canonical
/// order, with the leading coefficient as the unit.
pub fn factor_q(f: &Poly<Rationals>) -> Result<Factorization<Rationals>> {
    let q = Rationals;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let unit = f.leading(&q);
    let mut factors: Vec<(Poly<Rationals>, usize)> = Vec::new();
    for (g, mult) in squarefree_decomposition(&q, f, &|c| c.clone()) {
        let (_, prim) = to_primitive_z(&g);
        for zfac in factor_squarefree_z(&prim) {
            let qq = z_to_q(&zfac).monic(&q).1;
            factors.push((qq, mult));
        }
    }
    let mut fac = Factorization { unit, factors };
    fac.sort_canonical(&q);
    Ok(fac)
}

/// Convenience irreducibility test over ℚ.
pub fn is_irreducible_q(f: &Poly<Rationals>) -> bool {
    f.deg() >= 1 && factor_q(f).map(|fac| fac.is_irreducible()).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(ints: &[i64]) -> Poly<Rationals> {
        Poly::from_ints(&Rationals, ints)
    }

    #[test]
    fn x4_minus_2_is_irreducible() {
        assert!(is_irreducible_q(&qp(&[-2, 0, 0, 0, 1])));
    }

    #[test]
    fn splits_x2_minus_1() {
        let fac = factor_q(&qp(&[-1, 0, 1])).unwrap();
        assert_eq!(fac.factors.len(), 2);
        assert_eq!(fac.expand(&Rationals), qp(&[-1, 0, 1]));
    }

    #[test]
    fn wheel_of_factors() {
        // (x²+1)(x²−2)²(x−3), with a non-unit leading coefficient
        let q = Rationals;
        let f = qp(&[1, 0, 1])
            .mul(&q, &qp(&[-2, 0, 1]))
            .mul(&q, &qp(&[-2, 0, 1]))
            .mul(&q, &qp(&[-3, 1]))
            .scale(&q, &q.from_int(6));
        let fac = factor_q(&f).unwrap();
        assert_eq!(fac.expand(&q), f);
        assert_eq!(fac.unit, q.from_int(6));
        let degs: Vec<(usize, usize)> =
            fac.factors.iter().map(|(p, m)| (p.deg(), *m)).collect();
        assert!(degs.contains(&(1, 1)));
        assert!(degs.contains(&(2, 1)));
        assert!(degs.contains(&(2, 2)));
    }

    #[test]
    fn cyclotomic_x12_minus_1() {
        // x^12−1 = Φ1·Φ2·Φ3·Φ4·Φ6·Φ12: six irreducible factors
        let mut coeffs = vec![0i64; 13];
        coeffs[0] = -1;
        coeffs[12] = 1;
        let fac = factor_q(&qp(&coeffs)).unwrap();
        assert_eq!(fac.factors.len(), 6);
        assert_eq!(fac.expand(&Rationals), qp(&coeffs));
    }

    #[test]
    fn swinnerton_dyer_needs_recombination() {
        // minimal polynomial of √2+√3: x⁴−10x²+1 factors into four linears
        // mod every prime but is irreducible over ℚ
        assert!(is_irreducible_q(&qp(&[1, 0, -10, 0, 1])));
    }

    #[test]
    fn rational_coefficients_handled() {
        // (x − 1/2)(x + 1/3) scaled arbitrarily
        let q = Rationals;
        let f = Poly::new(
            &q,
            vec![
                BigRational::new(BigInt::from(-1), BigInt::from(6)),
                BigRational::new(BigInt::from(-1), BigInt::from(6)),
                BigRational::one(),
            ],
        );
        let fac = factor_q(&f).unwrap();
        assert_eq!(fac.factors.len(), 2);
        assert_eq!(fac.expand(&q), f);
    }
}
