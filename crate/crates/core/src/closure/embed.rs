//! Towers embedded in the closure: each stage generator carries a
//! designated algebraic-number value. Adjunction by value factors the
//! value's minimal polynomial over the tower and selects the factor that
//! vanishes at the value; embeddings of abstract towers into the closure
//! are found by certified interval exclusion over the conjugate roots.

use crate::boxes::{eval_poly_on_rect, Rect};
use crate::closure::arith::{eval_alg_poly, mul as alg_mul};
use crate::closure::{all_roots, designated_root, AlgebraicNumber, RootSelector};
use crate::error::{Error, Result};
use crate::poly::sturm::SturmChain;
use crate::poly::Poly;
use crate::scalar::{BaseField, Field, FieldScalar, Rationals};
use crate::tower::{factor as tfactor, Tower, TowerElem};
use num_rational::BigRational;
use num_traits::Zero;

/// A tower over ℚ together with closure values for its generators.
#[derive(Clone, Debug)]
pub struct EmbeddedTower {
    pub tower: Tower,
    pub images: Vec<AlgebraicNumber>,
}

fn as_rational(c: &FieldScalar) -> BigRational {
    match c {
        FieldScalar::Rat(r) => r.clone(),
        _ => panic!("embedded towers work over ℚ"),
    }
}

fn base_poly_to_q(p: &Poly<BaseField>) -> Poly<Rationals> {
    Poly::new(&Rationals, p.coeffs().iter().map(as_rational).collect())
}

impl EmbeddedTower {
    pub fn rationals() -> EmbeddedTower {
        EmbeddedTower { tower: Tower::rationals(), images: Vec::new() }
    }

    /// Interval enclosure of an element's value, given refined images.
    pub fn elem_enclosure(&self, elem: &TowerElem, images: &[AlgebraicNumber]) -> Rect {
        let zero = Rect::real_point(BigRational::zero());
        let mut acc = zero;
        for (idx, c) in elem.0.iter().enumerate() {
            let cr = as_rational(c);
            if cr.is_zero() {
                continue;
            }
            let exps = self.tower.exponents_of(idx);
            let mut term = Rect::real_point(cr);
            for (j, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    term = term.mul(images[j].rect());
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// The exact value of a tower element: its minimal polynomial over ℚ
    /// plus an interval enclosure refined until it isolates one root.
    pub fn elem_value(&self, elem: &TowerElem) -> AlgebraicNumber {
        let q = Rationals;
        let m = base_poly_to_q(&self.tower.minpoly_over_base(elem));
        if m.deg() == 1 {
            return AlgebraicNumber::from_rational(q.neg(&m.coeffs()[0]));
        }
        let mut images = self.images.clone();
        loop {
            let rect = self.elem_enclosure(elem, &images);
            if rect.im.contains_zero() && rect.im.lo == rect.im.hi {
                // exact real enclosure (all images real so far)
                let chain = SturmChain::new(&m);
                if rect.re.lo != rect.re.hi
                    && !m.eval(&q, &rect.re.lo).is_zero()
                    && chain.count_half_open(&rect.re.lo, &rect.re.hi) == 1
                {
                    if let Ok(v) = AlgebraicNumber::new(m.clone(), rect) {
                        return v;
                    }
                }
            } else if crate::poly::isolate::count_roots_in_rect(&m, &rect) == Some(1) {
                if let Ok(v) = AlgebraicNumber::new(m.clone(), rect) {
                    return v;
                }
            }
            images = images.iter().map(|a| a.refined()).collect();
        }
    }

    /// Adjoin an algebraic number: returns the extended tower (unchanged if
    /// the value is already present) and the element representing it.
    pub fn adjoin_value(&self, name: &str, alpha: &AlgebraicNumber) -> Result<(EmbeddedTower, TowerElem)> {
        let fac = tfactor::factor(
            &self.tower,
            &Poly::new(
                &self.tower,
                alpha
                    .minpoly()
                    .coeffs()
                    .iter()
                    .map(|c| self.tower.from_base(FieldScalar::Rat(c.clone())))
                    .collect(),
            ),
        )?;
        let mut candidates: Vec<Poly<Tower>> = fac.factors.into_iter().map(|(h, _)| h).collect();
        let mut images = self.images.clone();
        let mut a = alpha.clone();
        loop {
            candidates.retain(|h| {
                let e = self.eval_factor_enclosure(h, &images, &a);
                e.re.contains_zero() && e.im.contains_zero()
            });
            assert!(!candidates.is_empty(), "value vanished from every factor");
            if candidates.len() == 1 {
                break;
            }
            images = images.iter().map(|x| x.refined()).collect();
            a = a.refined();
        }
        let h = candidates.remove(0);
        if h.deg() == 1 {
            let elem = self.tower.neg(&h.coeffs()[0]);
            return Ok((self.clone(), elem));
        }
        let new_tower = self.tower.push_stage_unchecked(
            name,
            h.coeffs().iter().map(|c| c.0.clone()).collect(),
        );
        let mut new_images = self.images.clone();
        new_images.push(alpha.clone());
        let ext = EmbeddedTower { tower: new_tower, images: new_images };
        let elem = ext.tower.gen_elem(ext.tower.num_stages() - 1);
        Ok((ext, elem))
    }

    fn eval_factor_enclosure(
        &self,
        h: &Poly<Tower>,
        images: &[AlgebraicNumber],
        at: &AlgebraicNumber,
    ) -> Rect {
        let mut acc = Rect::real_point(BigRational::zero());
        for c in h.coeffs().iter().rev() {
            acc = acc.mul(at.rect()).add(&self.elem_enclosure(c, images));
        }
        acc
    }

    /// Find the element with a given value, if the value lies in the field.
    pub fn locate_value(&self, alpha: &AlgebraicNumber) -> Option<TowerElem> {
        let lifted = Poly::new(
            &self.tower,
            alpha
                .minpoly()
                .coeffs()
                .iter()
                .map(|c| self.tower.from_base(FieldScalar::Rat(c.clone())))
                .collect(),
        );
        let roots = tfactor::roots_in(&self.tower, &lifted).ok()?;
        roots.into_iter().find(|r| &self.elem_value(r) == alpha)
    }
}

/// Per-stage root selectors for `embed_tower`.
#[derive(Clone, Debug)]
pub enum StageSelector {
    /// Index into the canonical roots of the generator's absolute minimal
    /// polynomial.
    CanonicalIndex(usize),
    FirstRealPositive,
    /// First non-real consistent root ("imaginary").
    FirstNonReal,
    /// An explicit value; rejected with InconsistentChoice when it fails
    /// the stage polynomial.
    Value(AlgebraicNumber),
}

/// Embed an abstract tower over ℚ into the closure: for each stage the
/// selector picks among the consistent roots of the stage polynomial's
/// image, where consistency is certified by counting (exactly deg(m)
/// conjugates survive interval exclusion). The chosen images are verified
/// exactly by resultant arithmetic at the end.
pub fn embed_tower(t: &Tower, selectors: &[StageSelector]) -> Result<EmbeddedTower> {
    assert_eq!(*t.base(), BaseField::Q);
    assert_eq!(selectors.len(), t.num_stages());
    let mut emb = EmbeddedTower { tower: t.prefix(0), images: Vec::new() };
    for (j, selector) in selectors.iter().enumerate() {
        let gen = t.gen_elem(j);
        let m_abs = base_poly_to_q(&t.minpoly_over_base(&gen));
        let mj = t.stage_minpoly(j);
        let d = mj.deg();
        let mut roots = all_roots(&m_abs)?;
        // exclude inconsistent conjugates until exactly d remain
        let mut images = emb.images.clone();
        while roots.len() > d {
            let before = roots.len();
            roots.retain(|v| {
                let e = emb.eval_factor_enclosure(
                    &lift_to(&emb.tower, &mj),
                    &images,
                    v,
                );
                e.re.contains_zero() && e.im.contains_zero()
            });
            if roots.len() == before {
                roots = roots.iter().map(|v| v.refined()).collect();
                images = images.iter().map(|v| v.refined()).collect();
            }
        }
        let chosen = match selector {
            StageSelector::CanonicalIndex(i) => roots
                .iter()
                .find(|v| v.index() == *i)
                .cloned()
                .ok_or_else(|| {
                    Error::InconsistentChoice(format!("root index {i} fails stage {j}"))
                })?,
            StageSelector::FirstRealPositive => roots
                .iter()
                .find(|v| v.is_real() && v.sign() > 0)
                .cloned()
                .ok_or_else(|| Error::NoSuchRoot(format!("no positive real root at stage {j}")))?,
            StageSelector::FirstNonReal => roots
                .iter()
                .find(|v| !v.is_real())
                .cloned()
                .ok_or_else(|| Error::NoSuchRoot(format!("no non-real root at stage {j}")))?,
            StageSelector::Value(v) => {
                if v.minpoly() != &m_abs || !roots.iter().any(|r| r == v) {
                    return Err(Error::InconsistentChoice(format!(
                        "selected value fails the stage-{j} minimal polynomial"
                    )));
                }
                v.clone()
            }
        };
        // exact verification: m_j's image vanishes at the chosen value
        let coeff_values: Vec<AlgebraicNumber> =
            mj.coeffs().iter().map(|c| emb.elem_value(c)).collect();
        let check = eval_alg_poly(&coeff_values, &chosen);
        if !check.is_zero() {
            return Err(Error::InconsistentChoice(format!(
                "stage-{j} image does not annihilate the chosen root"
            )));
        }
        emb = EmbeddedTower {
            tower: t.prefix(j + 1),
            images: {
                let mut v = emb.images;
                v.push(chosen);
                v
            },
        };
    }
    Ok(emb)
}

fn lift_to(t: &Tower, p: &Poly<Tower>) -> Poly<Tower> {
    Poly::new(
        t,
        p.coeffs()
            .iter()
            .map(|c| {
                let mut v = c.0.clone();
                v.resize(t.degree(), BaseField::Q.zero());
                TowerElem(v)
            })
            .collect(),
    )
}

/// Canonical generator expressions: "sqrt:<n>", "root:<k>:<n>", "zeta:<m>".
pub fn designated_value(expr: &str) -> Result<AlgebraicNumber> {
    let q = Rationals;
    if let Some(n) = expr.strip_prefix("sqrt:") {
        let n: i64 = n.parse().map_err(|_| Error::ParseError(format!("bad sqrt expr {expr:?}")))?;
        if n == 0 {
            return Err(Error::ParseError("sqrt:0 is rational".into()));
        }
        let p = Poly::from_ints(&q, &[-n, 0, 1]);
        return if n > 0 {
            designated_root(&p, &RootSelector::FirstRealPositive)
        } else {
            designated_root(&p, &RootSelector::Index(1))
        };
    }
    if let Some(rest) = expr.strip_prefix("root:") {
        let (k, n) = rest
            .split_once(':')
            .ok_or_else(|| Error::ParseError(format!("expected root:<k>:<n>, got {expr:?}")))?;
        let k: usize = k.parse().map_err(|_| Error::ParseError(format!("bad degree in {expr:?}")))?;
        let n: i64 = n.parse().map_err(|_| Error::ParseError(format!("bad radicand in {expr:?}")))?;
        if k == 0 || n <= 0 {
            return Err(Error::ParseError("root:<k>:<n> needs k ≥ 1, n ≥ 1".into()));
        }
        let mut coeffs = vec![0i64; k + 1];
        coeffs[0] = -n;
        coeffs[k] = 1;
        return designated_root(&Poly::from_ints(&q, &coeffs), &RootSelector::FirstRealPositive);
    }
    if let Some(m) = expr.strip_prefix("zeta:") {
        let m: usize = m.parse().map_err(|_| Error::ParseError(format!("bad order in {expr:?}")))?;
        if m == 0 {
            return Err(Error::ParseError("zeta:0 is undefined".into()));
        }
        let mut coeffs = vec![0i64; m + 1];
        coeffs[0] = -1;
        coeffs[m] = 1;
        return designated_root(&Poly::from_ints(&q, &coeffs), &RootSelector::FirstPrimitive);
    }
    Err(Error::ParseError(format!("unknown generator expression {expr:?}")))
}

/// Product expressions like "zeta:3*root:3:2" build composite values.
pub fn parse_value_expr(expr: &str) -> Result<AlgebraicNumber> {
    let mut acc: Option<AlgebraicNumber> = None;
    for part in expr.split('*') {
        let v = designated_value(part.trim())?;
        acc = Some(match acc {
            None => v,
            Some(a) => alg_mul(&a, &v),
        });
    }
    acc.ok_or_else(|| Error::ParseError("empty generator expression".into()))
}

/// Build an embedded tower from a list of generator expressions; values
/// already in the field are skipped.
pub fn embedded_tower_from_exprs(exprs: &[&str]) -> Result<EmbeddedTower> {
    let mut emb = EmbeddedTower::rationals();
    for (i, expr) in exprs.iter().enumerate() {
        let v = parse_value_expr(expr)?;
        let (next, _) = emb.adjoin_value(&format!("g{i}"), &v)?;
        emb = next;
    }
    Ok(emb)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(ints: &[i64]) -> Poly<Rationals> {
        Poly::from_ints(&Rationals, ints)
    }

    #[test]
    fn embed_sqrt2_positively() {
        let t = Tower::rationals()
            .adjoin("s", &Poly::from_ints(&Tower::rationals(), &[-2, 0, 1]))
            .unwrap();
        let emb = embed_tower(&t, &[StageSelector::FirstRealPositive]).unwrap();
        assert!(emb.images[0].is_real());
        assert_eq!(emb.images[0].sign(), 1);
    }

    #[test]
    fn embed_quartic_imaginary_squares_to_minus_sqrt2() {
        // ℚ(⁴√2) with the "imaginary" selector: the image of √2 = (⁴√2)²
        // must be −√2
        let t0 = Tower::rationals();
        let t = t0.adjoin("f", &Poly::from_ints(&t0, &[-2, 0, 0, 0, 1])).unwrap();
        let emb = embed_tower(&t, &[StageSelector::FirstNonReal]).unwrap();
        let v = &emb.images[0];
        assert!(!v.is_real());
        let sq = alg_mul(v, v);
        // −√2: the negative root of x² − 2
        let neg_sqrt2 = designated_root(&qp(&[-2, 0, 1]), &RootSelector::Index(0)).unwrap();
        assert_eq!(sq, neg_sqrt2);
    }

    #[test]
    fn embed_rejects_wrong_value() {
        let t0 = Tower::rationals();
        let t = t0.adjoin("s", &Poly::from_ints(&t0, &[-2, 0, 1])).unwrap();
        let err = embed_tower(&t, &[StageSelector::Value(AlgebraicNumber::from_int(1))]).unwrap_err();
        assert!(matches!(err, Error::InconsistentChoice(_)));
    }

    #[test]
    fn embedded_field_q_zeta3_cbrt2_has_degree_6() {
        let emb = embedded_tower_from_exprs(&["zeta:3", "root:3:2"]).unwrap();
        assert_eq!(emb.tower.degree(), 6);
        // ζ₃·∛2 lies in the field
        let z = parse_value_expr("zeta:3*root:3:2").unwrap();
        assert!(emb.locate_value(&z).is_some());
    }

    #[test]
    fn adjoin_value_skips_present_values() {
        let emb = embedded_tower_from_exprs(&["sqrt:2"]).unwrap();
        let v = designated_value("sqrt:2").unwrap();
        let (same, elem) = emb.adjoin_value("again", &v).unwrap();
        assert_eq!(same.tower.degree(), 2);
        assert_eq!(elem, emb.tower.gen_elem(0));
        // √8 = 2√2 is also already present
        let v8 = designated_value("sqrt:8").unwrap();
        let (same2, elem8) = emb.adjoin_value("r8", &v8).unwrap();
        assert_eq!(same2.tower.degree(), 2);
        assert_eq!(
            elem8,
            emb.tower.scale(&emb.tower.gen_elem(0), &BaseField::Q.from_int(2))
        );
    }

    #[test]
    fn elem_value_of_sum() {
        let emb = embedded_tower_from_exprs(&["sqrt:2", "sqrt:3"]).unwrap();
        let s = emb.tower.add(&emb.tower.gen_elem(0), &emb.tower.gen_elem(1));
        let v = emb.elem_value(&s);
        assert_eq!(v.minpoly(), &qp(&[1, 0, -10, 0, 1]));
        assert!(v.is_real());
        assert_eq!(v.sign(), 1);
    }
}
