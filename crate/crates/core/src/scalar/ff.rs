//! GF(p^k) as GF(p)[t] modulo a monic irreducible polynomial.
//!
//! k = 1 gives the prime fields; the GF(4) modulus is fixed as t² + t + 1.
//! Elements are coefficient vectors over GF(p) with no trailing zeros, and
//! the canonical integer encoding Σ cᵢ pⁱ orders them.

use crate::error::{Error, Result};
use crate::scalar::Field;
use std::cmp::Ordering;

/// Residue modulo the context's modulus: coefficients over GF(p),
/// constant term first, no trailing zeros.
pub type FfElem = Vec<u64>;

/// A finite field GF(p^k).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ff {
    p: u64,
    k: usize,
    /// Monic irreducible over GF(p) of degree k; length k+1, constant first.
    modulus: Vec<u64>,
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Ff {
    /// The prime field GF(p).
    pub fn prime(p: u64) -> Result<Ff> {
        if !is_prime_u64(p) {
            return Err(Error::UnsupportedBase(format!("{p} is not prime")));
        }
        Ok(Ff { p, k: 1, modulus: vec![0, 1] })
    }

    /// GF(p^k) with the given monic modulus over GF(p). Irreducibility is
    /// the caller's responsibility for k > 1; `galois` checks it.
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<Ff> {
        if !is_prime_u64(p) {
            return Err(Error::UnsupportedBase(format!("{p} is not prime")));
        }
        let k = modulus.len() - 1;
        if k == 0 || modulus[k] != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::UnsupportedBase("bad modulus".into()));
        }
        Ok(Ff { p, k, modulus })
    }

    /// GF(p^k) with the canonical modulus: the first monic irreducible of
    /// degree k in the canonical polynomial order. For GF(4) this is
    /// t² + t + 1, the unique irreducible quadratic over GF(2).
    pub fn galois(p: u64, k: usize) -> Result<Ff> {
        if k == 1 {
            return Ff::prime(p);
        }
        let base = Ff::prime(p)?;
        let modulus = crate::poly::factor_ff::first_irreducible_of_degree(&base, k);
        let modulus: Vec<u64> = modulus
            .coeffs()
            .iter()
            .map(|c| c.first().copied().unwrap_or(0))
            .collect();
        Ff::with_modulus(p, modulus)
    }

    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn k(&self) -> usize {
        self.k
    }
    pub fn order(&self) -> u64 {
        self.p.pow(self.k as u32)
    }
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Canonical integer encoding Σ cᵢ pⁱ.
    pub fn encode(&self, a: &FfElem) -> u64 {
        let mut acc = 0u64;
        for &c in a.iter().rev() {
            acc = acc * self.p + c;
        }
        acc
    }

    /// Inverse of `encode`.
    pub fn decode(&self, mut code: u64) -> FfElem {
        let mut v = Vec::new();
        while code > 0 {
            v.push(code % self.p);
            code /= self.p;
        }
        v
    }

    /// All field elements in encoding order.
    pub fn all_elements(&self) -> Vec<FfElem> {
        (0..self.order()).map(|c| self.decode(c)).collect()
    }

    fn trim(mut v: Vec<u64>) -> Vec<u64> {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    /// Multiply raw GF(p) coefficient vectors without reduction.
    fn raw_mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        Self::trim(out)
    }

    fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        while v.len() > self.k {
            let d = v.len() - 1;
            let c = v[d];
            v.pop();
            if c == 0 {
                continue;
            }
            // x^d = x^{d-k} * (x^k - modulus_low)
            for i in 0..self.k {
                let m = self.modulus[i];
                if m != 0 {
                    let idx = d - self.k + i;
                    let sub = (c * m) % self.p;
                    v[idx] = (v[idx] + self.p - sub + self.p * self.p) % self.p;
                }
            }
        }
        Self::trim(v)
    }
}

impl Field for Ff {
    type Elem = FfElem;

    fn zero(&self) -> FfElem {
        Vec::new()
    }
    fn one(&self) -> FfElem {
        vec![1]
    }
    fn from_int(&self, n: i64) -> FfElem {
        let p = self.p as i64;
        let r = ((n % p) + p) % p;
        if r == 0 {
            Vec::new()
        } else {
            vec![r as u64]
        }
    }
    fn add(&self, a: &FfElem, b: &FfElem) -> FfElem {
        let n = a.len().max(b.len());
        let mut out = vec![0u64; n];
        for i in 0..n {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            out[i] = (x + y) % self.p;
        }
        Self::trim(out)
    }
    fn sub(&self, a: &FfElem, b: &FfElem) -> FfElem {
        let n = a.len().max(b.len());
        let mut out = vec![0u64; n];
        for i in 0..n {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            out[i] = (x + self.p - y) % self.p;
        }
        Self::trim(out)
    }
    fn mul(&self, a: &FfElem, b: &FfElem) -> FfElem {
        self.reduce(self.raw_mul(a, b))
    }
    fn neg(&self, a: &FfElem) -> FfElem {
        Self::trim(a.iter().map(|&c| (self.p - c) % self.p).collect())
    }
    fn inv(&self, a: &FfElem) -> Option<FfElem> {
        if a.is_empty() {
            return None;
        }
        // a^(q-2) in the multiplicative group of order q-1.
        Some(self.pow(a, self.order() - 2))
    }
    fn is_zero(&self, a: &FfElem) -> bool {
        a.is_empty()
    }
    fn cmp_elem(&self, a: &FfElem, b: &FfElem) -> Ordering {
        self.encode(a).cmp(&self.encode(b))
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn elem_string(&self, a: &FfElem) -> String {
        self.encode(a).to_string()
    }
}

impl Ff {
    /// Is `a` a square in GF(p^k)?  Char 2 fields are perfect, so always.
    pub fn is_square(&self, a: &FfElem) -> bool {
        if self.is_zero(a) || self.p == 2 {
            return true;
        }
        let e = (self.order() - 1) / 2;
        self.is_one(&self.pow(a, e))
    }

    /// A square root of `a` when one exists. Fields here are tiny, so scan.
    pub fn sqrt(&self, a: &FfElem) -> Option<FfElem> {
        (0..self.order())
            .map(|c| self.decode(c))
            .find(|x| self.mul(x, x) == *a)
    }

    /// Is `a` a cube in GF(p^k)?
    pub fn is_cube(&self, a: &FfElem) -> bool {
        let q = self.order();
        if self.is_zero(a) || (q - 1) % 3 != 0 {
            return true;
        }
        self.is_one(&self.pow(a, (q - 1) / 3))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf3_arithmetic() {
        let f = Ff::prime(3).unwrap();
        // 2 * 2 = 4 mod 3 = 1
        assert_eq!(f.mul(&vec![2], &vec![2]), vec![1]);
        assert_eq!(f.inv(&vec![2]), Some(vec![2]));
        assert!(f.inv(&f.zero()).is_none());
    }

    #[test]
    fn gf4_has_modulus_t2_t_1() {
        let f = Ff::galois(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        // a * a = a + 1 in GF(4) where a is the class of t
        let a = vec![0, 1];
        assert_eq!(f.mul(&a, &a), vec![1, 1]);
        // every nonzero element cubed is 1
        for code in 1..4 {
            let x = f.decode(code);
            assert_eq!(f.pow(&x, 3), f.one());
        }
    }

    #[test]
    fn field_axioms_gf9() {
        let f = Ff::galois(3, 2).unwrap();
        let xs = f.all_elements();
        for a in &xs {
            for b in &xs {
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in &xs {
                    assert_eq!(f.mul(&f.mul(a, b), c), f.mul(a, &f.mul(b, c)));
                    assert_eq!(f.mul(a, &f.add(b, c)), f.add(&f.mul(a, b), &f.mul(a, c)));
                }
            }
            if !f.is_zero(a) {
                let ai = f.inv(a).unwrap();
                assert_eq!(f.mul(a, &ai), f.one());
            }
        }
    }

    #[test]
    fn squares_in_gf5() {
        let f = Ff::prime(5).unwrap();
        let squares: Vec<bool> = (0..5).map(|c| f.is_square(&f.decode(c))).collect();
        assert_eq!(squares, vec![true, true, false, false, true]);
        assert_eq!(f.sqrt(&vec![4]), Some(vec![2]));
    }
}
