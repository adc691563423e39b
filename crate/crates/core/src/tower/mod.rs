//! Algebraic extensions as explicit towers of simple extensions.
//!
//! A tower is a base field plus a chain of stages, each given by a monic
//! polynomial irreducible over the tower below it. Elements are coordinate
//! vectors over the base field in the product basis ∏ genᵢ^{eᵢ} with
//! 0 ≤ eᵢ < degᵢ; arithmetic works levelwise (an element of level j is a
//! polynomial of degree < degⱼ over level j−1) and skips zero chunks, so
//! monomial-heavy data stays cheap even in large towers.

pub mod carro;
pub mod factor;
pub mod member;
pub mod primitive;
pub mod radical;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{BaseField, Field, FieldScalar};
use std::cmp::Ordering;

/// One simple-extension stage: a generator name and its monic minimal
/// polynomial over the tower below, stored as coefficient vectors of
/// length = degree of the tower below (constant coefficient first).
#[derive(Clone, Debug, PartialEq)]
pub struct Stage {
    pub name: String,
    pub minpoly: Vec<Vec<FieldScalar>>,
}

impl Stage {
    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }
}

/// A finite tower of simple extensions over a base field.
#[derive(Clone, Debug, PartialEq)]
pub struct Tower {
    base: BaseField,
    stages: Vec<Stage>,
    /// sizes[j] = degree of the tower formed by the first j stages.
    sizes: Vec<usize>,
}

/// An element of a tower: coordinates over the base field in the product
/// basis. The owning tower is passed to every operation.
#[derive(Clone, Debug, PartialEq)]
pub struct TowerElem(pub Vec<FieldScalar>);

impl Tower {
    pub fn new(base: BaseField) -> Tower {
        Tower { base, stages: Vec::new(), sizes: vec![1] }
    }

    pub fn rationals() -> Tower {
        Tower::new(BaseField::Q)
    }

    pub fn base(&self) -> &BaseField {
        &self.base
    }

    pub fn stages(&self) -> &[Stage] {
        &self.stages
    }

    pub fn num_stages(&self) -> usize {
        self.stages.len()
    }

    pub fn degree(&self) -> usize {
        *self.sizes.last().unwrap()
    }

    /// Degree of the subtower formed by the first j stages.
    pub fn size_at(&self, j: usize) -> usize {
        self.sizes[j]
    }

    /// The tower consisting of the first `j` stages.
    pub fn prefix(&self, j: usize) -> Tower {
        assert!(j <= self.stages.len());
        Tower {
            base: self.base.clone(),
            stages: self.stages[..j].to_vec(),
            sizes: self.sizes[..=j].to_vec(),
        }
    }

    /// Is `other` a stage-prefix of self?
    pub fn has_prefix(&self, other: &Tower) -> bool {
        self.base == other.base
            && other.stages.len() <= self.stages.len()
            && self.stages[..other.stages.len()] == other.stages[..]
    }

    /// Append a stage without an irreducibility check. The callers that use
    /// this hold an independent certificate of irreducibility (minimality
    /// from the membership solver, or a radical criterion).
    pub fn push_stage_unchecked(&self, name: &str, minpoly: Vec<Vec<FieldScalar>>) -> Tower {
        let d = minpoly.len() - 1;
        assert!(d >= 1, "stage degree must be at least 1");
        let below = self.degree();
        for c in &minpoly {
            assert_eq!(c.len(), below, "minpoly coefficient has wrong length");
        }
        // monic check
        let lead = &minpoly[d];
        assert!(
            self.base.is_one(&lead[0]) && lead[1..].iter().all(|c| self.base.is_zero(c)),
            "stage minpoly must be monic"
        );
        let mut stages = self.stages.clone();
        stages.push(Stage { name: name.to_string(), minpoly });
        let mut sizes = self.sizes.clone();
        sizes.push(below * d);
        Tower { base: self.base.clone(), stages, sizes }
    }

    /// Adjoin a root of `m`, a polynomial with coefficients in this tower.
    /// Verifies irreducibility; on failure reports a nontrivial factor.
    pub fn adjoin(&self, name: &str, m: &Poly<Tower>) -> Result<Tower> {
        if m.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (_, m) = m.monic(self);
        let d = m.deg();
        if d == 0 {
            return Err(Error::ReduciblePolynomial("1".into()));
        }
        if d >= 2 {
            factor::check_irreducible(self, &m)?;
        }
        let minpoly = m.coeffs().iter().map(|c| c.0.clone()).collect();
        Ok(self.push_stage_unchecked(name, minpoly))
    }

    pub fn zero_elem(&self) -> TowerElem {
        TowerElem(vec![self.base.zero(); self.degree()])
    }

    pub fn one_elem(&self) -> TowerElem {
        self.from_base(self.base.one())
    }

    pub fn from_base(&self, c: FieldScalar) -> TowerElem {
        let mut v = vec![self.base.zero(); self.degree()];
        v[0] = c;
        TowerElem(v)
    }

    pub fn from_int_elem(&self, n: i64) -> TowerElem {
        self.from_base(self.base.from_int(n))
    }

    /// The generator of stage j (0-indexed) as an element of this tower.
    pub fn gen_elem(&self, j: usize) -> TowerElem {
        assert!(j < self.stages.len());
        let mut v = vec![self.base.zero(); self.degree()];
        v[self.sizes[j]] = self.base.one();
        TowerElem(v)
    }

    /// Basis monomial ∏ genⱼ^{eⱼ}; exponents must satisfy eⱼ < degⱼ.
    pub fn monomial(&self, exps: &[usize]) -> TowerElem {
        assert_eq!(exps.len(), self.stages.len());
        let mut idx = 0usize;
        for (j, &e) in exps.iter().enumerate() {
            assert!(e < self.stages[j].degree());
            idx += e * self.sizes[j];
        }
        let mut v = vec![self.base.zero(); self.degree()];
        v[idx] = self.base.one();
        TowerElem(v)
    }

    /// Exponent tuple of basis index `idx`.
    pub fn exponents_of(&self, mut idx: usize) -> Vec<usize> {
        let mut exps = vec![0usize; self.stages.len()];
        for j in (0..self.stages.len()).rev() {
            exps[j] = idx / self.sizes[j];
            idx %= self.sizes[j];
        }
        exps
    }

    /// View an element of a prefix tower inside this tower.
    pub fn lift(&self, from: &Tower, elem: &TowerElem) -> TowerElem {
        assert!(self.has_prefix(from), "lift source is not a prefix");
        let mut v = elem.0.clone();
        v.resize(self.degree(), self.base.zero());
        TowerElem(v)
    }

    /// Restrict an element to a prefix tower if its support allows it.
    pub fn restrict(&self, to: &Tower, elem: &TowerElem) -> Option<TowerElem> {
        assert!(self.has_prefix(to));
        let d = to.degree();
        for (idx, c) in elem.0.iter().enumerate() {
            if idx >= d && !self.base.is_zero(c) {
                return None;
            }
        }
        Some(TowerElem(elem.0[..d].to_vec()))
    }

    // ---- levelwise arithmetic on raw coordinate slices ----

    fn slice_is_zero(&self, a: &[FieldScalar]) -> bool {
        a.iter().all(|c| self.base.is_zero(c))
    }

    fn raw_add(&self, a: &[FieldScalar], b: &[FieldScalar]) -> Vec<FieldScalar> {
        a.iter().zip(b.iter()).map(|(x, y)| self.base.add(x, y)).collect()
    }

    fn raw_sub(&self, a: &[FieldScalar], b: &[FieldScalar]) -> Vec<FieldScalar> {
        a.iter().zip(b.iter()).map(|(x, y)| self.base.sub(x, y)).collect()
    }

    fn raw_neg(&self, a: &[FieldScalar]) -> Vec<FieldScalar> {
        a.iter().map(|x| self.base.neg(x)).collect()
    }

    /// Multiply two elements of the level-j subtower (slices of sizes[j]).
    fn raw_mul(&self, level: usize, a: &[FieldScalar], b: &[FieldScalar]) -> Vec<FieldScalar> {
        if level == 0 {
            return vec![self.base.mul(&a[0], &b[0])];
        }
        let d = self.stages[level - 1].degree();
        let s = self.sizes[level - 1];
        let mut acc = vec![self.base.zero(); (2 * d - 1) * s];
        for p in 0..d {
            let ac = &a[p * s..(p + 1) * s];
            if self.slice_is_zero(ac) {
                continue;
            }
            for q in 0..d {
                let bc = &b[q * s..(q + 1) * s];
                if self.slice_is_zero(bc) {
                    continue;
                }
                let prod = self.raw_mul(level - 1, ac, bc);
                let dst = (p + q) * s;
                for (i, v) in prod.into_iter().enumerate() {
                    acc[dst + i] = self.base.add(&acc[dst + i], &v);
                }
            }
        }
        // reduce chunks of degree ≥ d with the stage's monic minpoly:
        // g^e = g^(e−d) · (−Σ mᵢ gⁱ)
        let minpoly = &self.stages[level - 1].minpoly;
        for e in (d..2 * d - 1).rev() {
            let chunk = acc[e * s..(e + 1) * s].to_vec();
            if self.slice_is_zero(&chunk) {
                continue;
            }
            for v in acc[e * s..(e + 1) * s].iter_mut() {
                *v = self.base.zero();
            }
            for (i, m) in minpoly.iter().enumerate().take(d) {
                if self.slice_is_zero(m) {
                    continue;
                }
                let prod = self.raw_mul(level - 1, &chunk, m);
                let dst = (e - d + i) * s;
                for (k, v) in prod.into_iter().enumerate() {
                    acc[dst + k] = self.base.sub(&acc[dst + k], &v);
                }
            }
        }
        acc.truncate(d * s);
        acc
    }

    /// Inverse in the level-j subtower via extended Euclid over level j−1.
    fn raw_inv(&self, level: usize, a: &[FieldScalar]) -> Option<Vec<FieldScalar>> {
        if self.slice_is_zero(a) {
            return None;
        }
        if level == 0 {
            return self.base.inv(&a[0]).map(|x| vec![x]);
        }
        let lf = LevelField { tower: self, level: level - 1 };
        let d = self.stages[level - 1].degree();
        let s = self.sizes[level - 1];
        let chunks: Vec<Vec<FieldScalar>> =
            (0..d).map(|p| a[p * s..(p + 1) * s].to_vec()).collect();
        let apoly = Poly::new(&lf, chunks);
        let mpoly = Poly::new(&lf, self.stages[level - 1].minpoly.clone());
        let (g, sco, _) = apoly.ext_gcd(&lf, &mpoly);
        if g.deg() != 0 {
            return None;
        }
        let ginv = lf.inv(&g.coeffs()[0])?;
        let inv = sco.scale(&lf, &ginv);
        let mut out = vec![self.base.zero(); d * s];
        for (p, chunk) in inv.coeffs().iter().enumerate() {
            out[p * s..(p + 1) * s].clone_from_slice(chunk);
        }
        Some(out)
    }

    // ---- public element operations ----

    pub fn add(&self, a: &TowerElem, b: &TowerElem) -> TowerElem {
        TowerElem(self.raw_add(&a.0, &b.0))
    }
    pub fn sub(&self, a: &TowerElem, b: &TowerElem) -> TowerElem {
        TowerElem(self.raw_sub(&a.0, &b.0))
    }
    pub fn neg(&self, a: &TowerElem) -> TowerElem {
        TowerElem(self.raw_neg(&a.0))
    }
    pub fn mul(&self, a: &TowerElem, b: &TowerElem) -> TowerElem {
        TowerElem(self.raw_mul(self.stages.len(), &a.0, &b.0))
    }
    pub fn inv(&self, a: &TowerElem) -> Option<TowerElem> {
        self.raw_inv(self.stages.len(), &a.0).map(TowerElem)
    }
    pub fn div(&self, a: &TowerElem, b: &TowerElem) -> Option<TowerElem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
    pub fn is_zero_elem(&self, a: &TowerElem) -> bool {
        self.slice_is_zero(&a.0)
    }
    pub fn scale(&self, a: &TowerElem, c: &FieldScalar) -> TowerElem {
        TowerElem(a.0.iter().map(|x| self.base.mul(x, c)).collect())
    }
    pub fn pow_elem(&self, a: &TowerElem, mut e: u64) -> TowerElem {
        let mut base = a.clone();
        let mut acc = self.one_elem();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// The stage-j minimal polynomial as a polynomial over the prefix tower.
    pub fn stage_minpoly(&self, j: usize) -> Poly<Tower> {
        let prefix = self.prefix(j);
        Poly::new(
            &prefix,
            self.stages[j].minpoly.iter().map(|c| TowerElem(c.clone())).collect(),
        )
    }

    /// The stage-j minimal polynomial with coefficients lifted to this tower.
    pub fn stage_minpoly_lifted(&self, j: usize) -> Poly<Tower> {
        let prefix = self.prefix(j);
        Poly::new(
            self,
            self.stages[j]
                .minpoly
                .iter()
                .map(|c| self.lift(&prefix, &TowerElem(c.clone())))
                .collect(),
        )
    }

    /// Minimal polynomial of an element over the base field, by finding the
    /// first linear dependency among its powers.
    pub fn minpoly_over_base(&self, a: &TowerElem) -> Poly<BaseField> {
        let mut span = crate::linalg::IncrementalSpan::new(self.base.clone());
        let mut power = self.one_elem();
        loop {
            let sv = crate::linalg::to_sparse(&self.base, &power.0);
            match span.insert(sv) {
                Ok(()) => power = self.mul(&power, a),
                Err(expr) => {
                    // power_k = Σ exprᵢ·powerᵢ ⇒ minpoly = x^k − Σ exprᵢ xⁱ
                    let mut coeffs: Vec<FieldScalar> =
                        expr.iter().map(|c| self.base.neg(c)).collect();
                    coeffs.push(self.base.one());
                    return Poly::new(&self.base, coeffs);
                }
            }
        }
    }

    /// Map an element through generator images into another tower over the
    /// same base: coords ↦ Σ c · ∏ imagesⱼ^{eⱼ}.
    pub fn map_element(&self, elem: &TowerElem, target: &Tower, images: &[TowerElem]) -> TowerElem {
        assert_eq!(images.len(), self.stages.len());
        assert_eq!(self.base, *target.base());
        let mut acc = target.zero_elem();
        let mut powers: Vec<Vec<TowerElem>> =
            images.iter().map(|g| vec![target.one_elem(), g.clone()]).collect();
        for (idx, c) in elem.0.iter().enumerate() {
            if self.base.is_zero(c) {
                continue;
            }
            let exps = self.exponents_of(idx);
            let mut term = target.from_base(c.clone());
            for (j, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[j].len() <= e {
                    let next = target.mul(powers[j].last().unwrap(), &images[j]);
                    powers[j].push(next);
                }
                term = target.mul(&term, &powers[j][e]);
            }
            acc = target.add(&acc, &term);
        }
        acc
    }

    /// Evaluate a polynomial over this tower at an element.
    pub fn eval_poly(&self, p: &Poly<Tower>, x: &TowerElem) -> TowerElem {
        let mut acc = self.zero_elem();
        for c in p.coeffs().iter().rev() {
            acc = self.add(&self.mul(&acc, x), c);
        }
        acc
    }

    /// Render an element as a sum of named monomials, e.g. "1-2*a*b".
    pub fn elem_string(&self, a: &TowerElem) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (idx, c) in a.0.iter().enumerate() {
            if self.base.is_zero(c) {
                continue;
            }
            let cs = self.base.scalar_string(c);
            let exps = self.exponents_of(idx);
            let mut mono = String::new();
            for (j, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !mono.is_empty() {
                    mono.push('*');
                }
                mono.push_str(&self.stages[j].name);
                if e > 1 {
                    mono.push_str(&format!("^{e}"));
                }
            }
            let term = if mono.is_empty() {
                cs
            } else if cs == "1" {
                mono
            } else if cs == "-1" {
                format!("-{mono}")
            } else if cs.contains(['+', '/']) || (cs.contains('-') && !cs.starts_with('-')) {
                format!("({cs})*{mono}")
            } else {
                format!("{cs}*{mono}")
            };
            if parts.is_empty() || term.starts_with('-') {
                parts.push(term);
            } else {
                parts.push(format!("+{term}"));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.concat()
        }
    }
}

/// The level-j subtower viewed as a field with elements = raw coordinate
/// vectors of length sizes[j]; this lets the generic polynomial algorithms
/// run inside towers.
#[derive(Clone)]
pub struct LevelField<'t> {
    pub tower: &'t Tower,
    pub level: usize,
}

impl std::fmt::Debug for LevelField<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LevelField(level {})", self.level)
    }
}

impl PartialEq for LevelField<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.tower, other.tower) && self.level == other.level
    }
}

impl Field for LevelField<'_> {
    type Elem = Vec<FieldScalar>;

    fn zero(&self) -> Vec<FieldScalar> {
        vec![self.tower.base.zero(); self.tower.sizes[self.level]]
    }
    fn one(&self) -> Vec<FieldScalar> {
        let mut v = self.zero();
        v[0] = self.tower.base.one();
        v
    }
    fn from_int(&self, n: i64) -> Vec<FieldScalar> {
        let mut v = self.zero();
        v[0] = self.tower.base.from_int(n);
        v
    }
    fn add(&self, a: &Vec<FieldScalar>, b: &Vec<FieldScalar>) -> Vec<FieldScalar> {
        self.tower.raw_add(a, b)
    }
    fn sub(&self, a: &Vec<FieldScalar>, b: &Vec<FieldScalar>) -> Vec<FieldScalar> {
        self.tower.raw_sub(a, b)
    }
    fn mul(&self, a: &Vec<FieldScalar>, b: &Vec<FieldScalar>) -> Vec<FieldScalar> {
        self.tower.raw_mul(self.level, a, b)
    }
    fn neg(&self, a: &Vec<FieldScalar>) -> Vec<FieldScalar> {
        self.tower.raw_neg(a)
    }
    fn inv(&self, a: &Vec<FieldScalar>) -> Option<Vec<FieldScalar>> {
        self.tower.raw_inv(self.level, a)
    }
    fn is_zero(&self, a: &Vec<FieldScalar>) -> bool {
        self.tower.slice_is_zero(a)
    }
    fn cmp_elem(&self, a: &Vec<FieldScalar>, b: &Vec<FieldScalar>) -> Ordering {
        for (x, y) in a.iter().zip(b.iter()) {
            match self.tower.base.cmp_elem(x, y) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        Ordering::Equal
    }
    fn characteristic(&self) -> u64 {
        self.tower.base.characteristic()
    }
    fn elem_string(&self, a: &Vec<FieldScalar>) -> String {
        let prefix = self.tower.prefix(self.level);
        prefix.elem_string(&TowerElem(a.clone()))
    }
}

impl Field for Tower {
    type Elem = TowerElem;

    fn zero(&self) -> TowerElem {
        self.zero_elem()
    }
    fn one(&self) -> TowerElem {
        self.one_elem()
    }
    fn from_int(&self, n: i64) -> TowerElem {
        self.from_int_elem(n)
    }
    fn add(&self, a: &TowerElem, b: &TowerElem) -> TowerElem {
        Tower::add(self, a, b)
    }
    fn sub(&self, a: &TowerElem, b: &TowerElem) -> TowerElem {
        Tower::sub(self, a, b)
    }
    fn mul(&self, a: &TowerElem, b: &TowerElem) -> TowerElem {
        Tower::mul(self, a, b)
    }
    fn neg(&self, a: &TowerElem) -> TowerElem {
        Tower::neg(self, a)
    }
    fn inv(&self, a: &TowerElem) -> Option<TowerElem> {
        Tower::inv(self, a)
    }
    fn is_zero(&self, a: &TowerElem) -> bool {
        self.is_zero_elem(a)
    }
    fn cmp_elem(&self, a: &TowerElem, b: &TowerElem) -> Ordering {
        for (x, y) in a.0.iter().zip(b.0.iter()) {
            match self.base.cmp_elem(x, y) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        Ordering::Equal
    }
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
    fn elem_string(&self, a: &TowerElem) -> String {
        Tower::elem_string(self, a)
    }
}

#[cfg(test)]
pub mod tests {
    use super::*;

    /// ℚ(√2, √3) built with unchecked stages (adjoin is covered by the
    /// factor tests).
    pub fn q_sqrt2_sqrt3() -> Tower {
        let t0 = Tower::rationals();
        let q = BaseField::Q;
        let t1 = t0.push_stage_unchecked(
            "a",
            vec![vec![q.from_int(-2)], vec![q.from_int(0)], vec![q.from_int(1)]],
        );
        t1.push_stage_unchecked(
            "b",
            vec![
                vec![q.from_int(-3), q.from_int(0)],
                vec![q.from_int(0), q.from_int(0)],
                vec![q.from_int(1), q.from_int(0)],
            ],
        )
    }

    #[test]
    fn arithmetic_in_biquadratic_field() {
        let t = q_sqrt2_sqrt3();
        assert_eq!(t.degree(), 4);
        let r2 = t.gen_elem(0);
        let r3 = t.gen_elem(1);
        let r6 = t.mul(&r2, &r3);
        assert_eq!(t.mul(&r6, &r6), t.from_int_elem(6));
        // (√2+√3)² = 5 + 2√6
        let s = t.add(&r2, &r3);
        let s2 = t.mul(&s, &s);
        let expect = t.add(&t.from_int_elem(5), &t.scale(&r6, &BaseField::Q.from_int(2)));
        assert_eq!(s2, expect);
    }

    #[test]
    fn inverse_roundtrip() {
        let t = q_sqrt2_sqrt3();
        let s = t.add(&t.add(&t.gen_elem(0), &t.gen_elem(1)), &t.from_int_elem(1));
        let inv = t.inv(&s).unwrap();
        assert_eq!(t.mul(&s, &inv), t.one_elem());
        assert!(t.inv(&t.zero_elem()).is_none());
    }

    #[test]
    fn minpoly_of_sum_of_roots() {
        let t = q_sqrt2_sqrt3();
        let s = t.add(&t.gen_elem(0), &t.gen_elem(1));
        let m = t.minpoly_over_base(&s);
        assert_eq!(m, Poly::from_ints(&BaseField::Q, &[1, 0, -10, 0, 1]));
        let m2 = t.minpoly_over_base(&t.gen_elem(0));
        assert_eq!(m2, Poly::from_ints(&BaseField::Q, &[-2, 0, 1]));
    }

    #[test]
    fn map_element_conjugation() {
        let t = q_sqrt2_sqrt3();
        let images = vec![t.neg(&t.gen_elem(0)), t.gen_elem(1)];
        let s = t.add(&t.gen_elem(0), &t.gen_elem(1));
        let mapped = t.map_element(&s, &t, &images);
        assert_eq!(mapped, t.add(&t.neg(&t.gen_elem(0)), &t.gen_elem(1)));
        let r6 = t.mul(&t.gen_elem(0), &t.gen_elem(1));
        assert_eq!(t.map_element(&r6, &t, &images), t.neg(&r6));
    }

    #[test]
    fn elem_rendering() {
        let t = q_sqrt2_sqrt3();
        let s = t.add(&t.gen_elem(0), &t.from_int_elem(1));
        assert_eq!(t.elem_string(&s), "1+a");
        let m = t.mul(&t.gen_elem(0), &t.gen_elem(1));
        assert_eq!(t.elem_string(&m), "a*b");
    }

    #[test]
    fn restrict_and_lift() {
        let t = q_sqrt2_sqrt3();
        let p = t.prefix(1);
        let r2p = p.gen_elem(0);
        let lifted = t.lift(&p, &r2p);
        assert_eq!(lifted, t.gen_elem(0));
        assert_eq!(t.restrict(&p, &lifted), Some(r2p));
        assert!(t.restrict(&p, &t.gen_elem(1)).is_none());
    }
}
