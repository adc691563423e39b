//! Dense univariate polynomials over any `Field`, plus the shared
//! algorithms: division, gcd, resultants, squarefree decomposition, and the
//! canonical (degree, coefficient-lex) order that makes every "first
//! polynomial" construction deterministic.

pub mod factor_ff;
pub mod factor_q;
pub mod isolate;
pub mod sturm;
pub mod trager;

use crate::error::{Error, Result};
use crate::scalar::Field;
use std::cmp::Ordering;

/// Coefficients with the constant term first and no trailing zero.
/// The zero polynomial has an empty coefficient list.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<F: Field> {
    coeffs: Vec<F::Elem>,
}

impl<F: Field> Poly<F> {
    pub fn new(field: &F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().map(|c| field.is_zero(c)).unwrap_or(false) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(field: &F, c: F::Elem) -> Self {
        Poly::new(field, vec![c])
    }

    pub fn one(field: &F) -> Self {
        Poly::constant(field, field.one())
    }

    /// The monomial x.
    pub fn x(field: &F) -> Self {
        Poly { coeffs: vec![field.zero(), field.one()] }
    }

    /// Build from small integers, e.g. `[-2, 0, 1]` for x² − 2.
    pub fn from_ints(field: &F, ints: &[i64]) -> Self {
        Poly::new(field, ints.iter().map(|&n| field.from_int(n)).collect())
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, field: &F, i: usize) -> F::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree as usize with deg 0 for the zero polynomial.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self, field: &F) -> F::Elem {
        self.coeffs.last().cloned().unwrap_or_else(|| field.zero())
    }

    pub fn is_monic(&self, field: &F) -> bool {
        self.coeffs.last().map(|c| field.is_one(c)).unwrap_or(false)
    }

    pub fn add(&self, field: &F, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(field.add(&self.coeff(field, i), &other.coeff(field, i)));
        }
        Poly::new(field, out)
    }

    pub fn sub(&self, field: &F, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(field.sub(&self.coeff(field, i), &other.coeff(field, i)));
        }
        Poly::new(field, out)
    }

    pub fn neg(&self, field: &F) -> Self {
        Poly { coeffs: self.coeffs.iter().map(|c| field.neg(c)).collect() }
    }

    pub fn mul(&self, field: &F, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if field.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if field.is_zero(b) {
                    continue;
                }
                out[i + j] = field.add(&out[i + j], &field.mul(a, b));
            }
        }
        Poly::new(field, out)
    }

    pub fn scale(&self, field: &F, c: &F::Elem) -> Self {
        Poly::new(field, self.coeffs.iter().map(|a| field.mul(a, c)).collect())
    }

    pub fn shift_up(&self, field: &F, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![field.zero(); k];
        out.extend(self.coeffs.iter().cloned());
        Poly { coeffs: out }
    }

    /// Quotient and remainder; errors on zero divisor. The divisor's leading
    /// coefficient must be invertible (always true over a field).
    pub fn divmod(&self, field: &F, divisor: &Self) -> Result<(Self, Self)> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dlead = divisor.leading(field);
        let dinv = field.inv(&dlead).ok_or(Error::DivisionByZero)?;
        let ddeg = divisor.deg();
        let mut rem = self.coeffs.clone();
        if rem.len() < divisor.coeffs.len() {
            return Ok((Poly::zero(), self.clone()));
        }
        let qlen = rem.len() - ddeg;
        let mut quot = vec![field.zero(); qlen];
        for i in (0..qlen).rev() {
            let top = rem[i + ddeg].clone();
            if field.is_zero(&top) {
                continue;
            }
            let q = field.mul(&top, &dinv);
            for (j, d) in divisor.coeffs.iter().enumerate() {
                let sub = field.mul(&q, d);
                rem[i + j] = field.sub(&rem[i + j], &sub);
            }
            quot[i] = q;
        }
        Ok((Poly::new(field, quot), Poly::new(field, rem)))
    }

    pub fn rem(&self, field: &F, divisor: &Self) -> Result<Self> {
        Ok(self.divmod(field, divisor)?.1)
    }

    /// Exact division; panics if not divisible (internal use).
    pub fn div_exact(&self, field: &F, divisor: &Self) -> Self {
        let (q, r) = self.divmod(field, divisor).expect("division by zero");
        assert!(r.is_zero(), "polynomial division was not exact");
        q
    }

    /// Monic associate and the unit that was divided out.
    pub fn monic(&self, field: &F) -> (F::Elem, Self) {
        if self.is_zero() {
            return (field.one(), Poly::zero());
        }
        let lead = self.leading(field);
        if field.is_one(&lead) {
            return (lead, self.clone());
        }
        let inv = field.inv(&lead).expect("leading coefficient not invertible");
        (lead, self.scale(field, &inv))
    }

    /// Monic gcd.
    pub fn gcd(&self, field: &F, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(field, &b).expect("gcd division");
            a = b;
            b = r;
        }
        a.monic(field).1
    }

    /// Extended gcd: returns (g, s, t) with g monic and s·self + t·other = g.
    pub fn ext_gcd(&self, field: &F, other: &Self) -> (Self, Self, Self) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut s0 = Poly::one(field);
        let mut s1 = Poly::<F>::zero();
        let mut t0 = Poly::<F>::zero();
        let mut t1 = Poly::one(field);
        while !r1.is_zero() {
            let (q, r) = r0.divmod(field, &r1).expect("ext_gcd division");
            let s = s0.sub(field, &q.mul(field, &s1));
            let t = t0.sub(field, &q.mul(field, &t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (Poly::zero(), Poly::zero(), Poly::zero());
        }
        let lead = r0.leading(field);
        let inv = field.inv(&lead).expect("gcd leading");
        (
            r0.scale(field, &inv),
            s0.scale(field, &inv),
            t0.scale(field, &inv),
        )
    }

    pub fn derivative(&self, field: &F) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            let mut term = field.zero();
            // i·c computed by repeated addition modulo the characteristic
            let reps = if field.characteristic() == 0 {
                i as u64
            } else {
                (i as u64) % field.characteristic()
            };
            for _ in 0..reps {
                term = field.add(&term, c);
            }
            out.push(term);
        }
        Poly::new(field, out)
    }

    pub fn eval(&self, field: &F, x: &F::Elem) -> F::Elem {
        let mut acc = field.zero();
        for c in self.coeffs.iter().rev() {
            acc = field.add(&field.mul(&acc, x), c);
        }
        acc
    }

    /// Compose with another polynomial: self(g(x)).
    pub fn compose(&self, field: &F, g: &Self) -> Self {
        let mut acc = Poly::<F>::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(field, g).add(field, &Poly::constant(field, c.clone()));
        }
        acc
    }

    /// self^e mod m.
    pub fn pow_mod(&self, field: &F, mut e: u64, m: &Self) -> Result<Self> {
        let mut base = self.rem(field, m)?;
        let mut acc = Poly::one(field).rem(field, m)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(field, &base).rem(field, m)?;
            }
            base = base.mul(field, &base).rem(field, m)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// The resultant of self and other via the Euclidean remainder sequence.
    pub fn resultant(&self, field: &F, other: &Self) -> F::Elem {
        if self.is_zero() || other.is_zero() {
            return field.zero();
        }
        let mut a = self.clone();
        let mut b = other.clone();
        let mut acc = field.one();
        loop {
            let da = a.deg();
            let db = b.deg();
            if db == 0 {
                let lead = b.leading(field);
                return field.mul(&acc, &field.pow(&lead, da as u64));
            }
            let r = a.rem(field, &b).expect("resultant division");
            if r.is_zero() {
                return field.zero();
            }
            let dr = r.deg();
            // res(a,b) = (-1)^(da·db) · lc(b)^(da-dr) · res(b,r)
            if (da * db) % 2 == 1 {
                acc = field.neg(&acc);
            }
            let lead = b.leading(field);
            acc = field.mul(&acc, &field.pow(&lead, (da - dr) as u64));
            a = b;
            b = r;
        }
    }

    /// f / gcd(f, f'): the product of the distinct irreducible factors,
    /// valid in characteristic 0 and for separable inputs in char p.
    pub fn squarefree_part(&self, field: &F) -> Self {
        if self.deg() == 0 {
            return self.monic(field).1;
        }
        let d = self.derivative(field);
        if d.is_zero() {
            // char p with f = g(x^p); the callers that need this case use
            // the full decomposition below instead.
            return self.monic(field).1;
        }
        let g = self.gcd(field, &d);
        self.div_exact(field, &g).monic(field).1
    }

    /// Canonical order: degree first, then the coefficient sequence from the
    /// constant term upward under the field's element order.
    pub fn cmp_canonical(&self, field: &F, other: &Self) -> Ordering {
        match self.coeffs.len().cmp(&other.coeffs.len()) {
            Ordering::Equal => {}
            o => return o,
        }
        for (a, b) in self.coeffs.iter().zip(other.coeffs.iter()) {
            match field.cmp_elem(a, b) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        Ordering::Equal
    }

    /// Render with the given variable name, e.g. "x^4-10*x^2+1".
    pub fn to_string_var(&self, field: &F, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if field.is_zero(c) {
                continue;
            }
            let cs = field.elem_string(c);
            let term = match i {
                0 => cs,
                _ => {
                    let pow = if i == 1 { var.to_string() } else { format!("{var}^{i}") };
                    if cs == "1" {
                        pow
                    } else if cs == "-1" {
                        format!("-{pow}")
                    } else if cs.contains(['+', '-', '/']) && !cs.starts_with('-') {
                        format!("({cs})*{pow}")
                    } else if cs.contains(['+', '/']) {
                        format!("({cs})*{pow}")
                    } else {
                        format!("{cs}*{pow}")
                    }
                }
            };
            if parts.is_empty() || term.starts_with('-') {
                parts.push(term);
            } else {
                parts.push(format!("+{term}"));
            }
        }
        parts.concat()
    }
}

/// A complete factorization: unit · ∏ factorᵢ^multᵢ with monic irreducible
/// factors in canonical order.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization<F: Field> {
    pub unit: F::Elem,
    pub factors: Vec<(Poly<F>, usize)>,
}

impl<F: Field> Factorization<F> {
    /// Re-expand to the original polynomial.
    pub fn expand(&self, field: &F) -> Poly<F> {
        let mut acc = Poly::constant(field, self.unit.clone());
        for (p, m) in &self.factors {
            for _ in 0..*m {
                acc = acc.mul(field, p);
            }
        }
        acc
    }

    pub fn sort_canonical(&mut self, field: &F) {
        self.factors
            .sort_by(|(a, _), (b, _)| a.cmp_canonical(field, b));
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    /// Roots in the coefficient field, read off the linear factors.
    pub fn roots(&self, field: &F) -> Vec<F::Elem> {
        let mut out = Vec::new();
        for (p, _) in &self.factors {
            if p.deg() == 1 {
                // monic x + c has root -c
                out.push(field.neg(&p.coeffs()[0]));
            }
        }
        out
    }
}

/// Squarefree decomposition valid over char 0 and perfect char-p fields
/// (the kernel's finite fields are perfect). Returns (gᵢ, mᵢ) with the gᵢ
/// monic, squarefree, pairwise coprime and input = unit·∏gᵢ^mᵢ.
pub fn squarefree_decomposition<F: Field>(
    field: &F,
    f: &Poly<F>,
    pth_root_coeff: &dyn Fn(&F::Elem) -> F::Elem,
) -> Vec<(Poly<F>, usize)> {
    let p = field.characteristic();
    let f = f.monic(field).1;
    if f.deg() == 0 {
        return Vec::new();
    }
    let deriv = f.derivative(field);
    if p > 0 && deriv.is_zero() {
        // f = g(x^p): take the p-th root coefficientwise and recurse.
        let mut g = Vec::new();
        for (i, c) in f.coeffs().iter().enumerate() {
            if i % (p as usize) == 0 {
                g.push(pth_root_coeff(c));
            }
        }
        let g = Poly::new(field, g);
        return squarefree_decomposition(field, &g, pth_root_coeff)
            .into_iter()
            .map(|(q, m)| (q, m * p as usize))
            .collect();
    }
    let mut out: Vec<(Poly<F>, usize)> = Vec::new();
    let mut c = f.gcd(field, &deriv);
    let mut w = f.div_exact(field, &c);
    let mut i = 1usize;
    while w.deg() > 0 {
        let y = w.gcd(field, &c);
        let fac = w.div_exact(field, &y);
        if fac.deg() > 0 {
            out.push((fac, i));
        }
        w = y;
        c = c.div_exact(field, &w);
        i += 1;
    }
    if c.deg() > 0 {
        // leftover p-th powers
        let mut g = Vec::new();
        for (j, coeff) in c.coeffs().iter().enumerate() {
            if j % (p as usize) == 0 {
                g.push(pth_root_coeff(coeff));
            }
        }
        let g = Poly::new(field, g);
        for (q, m) in squarefree_decomposition(field, &g, pth_root_coeff) {
            out.push((q, m * p as usize));
        }
    }
    // merge factors that appear twice (possible after the p-th root branch)
    out.sort_by(|a, b| a.1.cmp(&b.1));
    out
}
