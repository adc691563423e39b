//! Primitive elements: a single generator for a finite separable tower,
//! found as the first integer-weight combination of the stage generators
//! whose minimal polynomial has full degree.

use crate::error::{Error, Result};
use crate::linalg::{to_sparse, IncrementalSpan};
use crate::poly::Poly;
use crate::scalar::{BaseField, Field, FieldScalar};
use crate::tower::{Tower, TowerElem};

/// A primitive element together with its power basis inside the tower.
pub struct PrimitiveData {
    pub gamma: TowerElem,
    pub weights: Vec<i64>,
    pub minpoly: Poly<BaseField>,
    /// Coordinates of γ⁰ … γ^(n−1).
    pub powers: Vec<Vec<FieldScalar>>,
}

/// Is every stage separable over the tower below it?
pub fn is_separable(t: &Tower) -> bool {
    if t.base().characteristic() == 0 {
        return true;
    }
    for j in 0..t.num_stages() {
        let prefix = t.prefix(j);
        let m = t.stage_minpoly(j);
        let d = m.derivative(&prefix);
        if d.is_zero() || m.gcd(&prefix, &d).deg() != 0 {
            return false;
        }
    }
    true
}

/// Weight vectors (1, c₁, …, c_{m−1}) over ℕ in (total, lex) order.
fn weight_vectors(parts: usize) -> impl Iterator<Item = Vec<i64>> {
    (0u64..).flat_map(move |total| compositions(total, parts))
}

fn compositions(total: u64, parts: usize) -> Vec<Vec<i64>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            let mut v = vec![first as i64];
            v.append(&mut rest);
            out.push(v);
        }
    }
    out
}

/// The primitive element, its minimal polynomial over the base, and the
/// power basis. Deterministic: the first weight vector in canonical order
/// that reaches full degree wins.
pub fn primitive_data(t: &Tower) -> Result<PrimitiveData> {
    if !is_separable(t) {
        return Err(Error::InseparableTower);
    }
    let n = t.degree();
    let m = t.num_stages();
    if m == 0 {
        return Ok(PrimitiveData {
            gamma: t.zero_elem(),
            weights: vec![],
            minpoly: Poly::x(t.base()),
            powers: vec![t.one_elem().0],
        });
    }
    for tail in weight_vectors(m - 1) {
        let mut weights = vec![1i64];
        weights.extend(tail);
        let mut gamma = t.zero_elem();
        for (j, &w) in weights.iter().enumerate() {
            if w != 0 {
                gamma = t.add(&gamma, &t.scale(&t.gen_elem(j), &t.base().from_int(w)));
            }
        }
        let (minpoly, powers) = minpoly_with_powers(t, &gamma);
        if minpoly.deg() == n {
            return Ok(PrimitiveData { gamma, weights, minpoly, powers });
        }
    }
    unreachable!("separable towers have primitive elements")
}

pub fn primitive_element(t: &Tower) -> Result<(TowerElem, Poly<BaseField>)> {
    let data = primitive_data(t)?;
    Ok((data.gamma, data.minpoly))
}

/// Minimal polynomial of an element plus the powers collected on the way.
fn minpoly_with_powers(t: &Tower, a: &TowerElem) -> (Poly<BaseField>, Vec<Vec<FieldScalar>>) {
    let base = t.base();
    let mut span = IncrementalSpan::new(base.clone());
    let mut powers: Vec<Vec<FieldScalar>> = Vec::new();
    let mut power = t.one_elem();
    loop {
        match span.insert(to_sparse(base, &power.0)) {
            Ok(()) => {
                powers.push(power.0.clone());
                power = t.mul(&power, a);
            }
            Err(expr) => {
                let mut coeffs: Vec<FieldScalar> = expr.iter().map(|c| base.neg(c)).collect();
                coeffs.push(base.one());
                return (Poly::new(base, coeffs), powers);
            }
        }
    }
}

/// Solver for representations in a primitive element's power basis.
pub struct PowerBasis {
    span: IncrementalSpan<BaseField>,
}

impl PowerBasis {
    pub fn new(t: &Tower, data: &PrimitiveData) -> PowerBasis {
        let base = t.base().clone();
        let mut span = IncrementalSpan::new(base.clone());
        for p in &data.powers {
            span.insert(to_sparse(&base, p)).expect("power basis is independent");
        }
        PowerBasis { span }
    }

    /// Express a tower element as a polynomial in γ of degree < n.
    pub fn express(&self, t: &Tower, elem: &TowerElem) -> Poly<BaseField> {
        let base = t.base();
        let coeffs = self
            .span
            .express(&to_sparse(base, &elem.0))
            .expect("power basis spans the tower");
        Poly::new(base, coeffs)
    }
}

/// Evaluate a base-coefficient polynomial at a tower element.
pub fn eval_base_poly(t: &Tower, p: &Poly<BaseField>, x: &TowerElem) -> TowerElem {
    let mut acc = t.zero_elem();
    for c in p.coeffs().iter().rev() {
        acc = t.add(&t.mul(&acc, x), &t.from_base(c.clone()));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tower::tests::q_sqrt2_sqrt3;

    #[test]
    fn primitive_of_single_stage_is_generator() {
        let t = q_sqrt2_sqrt3().prefix(1);
        let (g, m) = primitive_element(&t).unwrap();
        assert_eq!(g, t.gen_elem(0));
        assert_eq!(m, Poly::from_ints(&BaseField::Q, &[-2, 0, 1]));
    }

    #[test]
    fn primitive_of_biquadratic_is_sum() {
        let t = q_sqrt2_sqrt3();
        let (g, m) = primitive_element(&t).unwrap();
        // first working weights are (1, 1): γ = √2 + √3
        assert_eq!(g, t.add(&t.gen_elem(0), &t.gen_elem(1)));
        assert_eq!(m, Poly::from_ints(&BaseField::Q, &[1, 0, -10, 0, 1]));
    }

    #[test]
    fn power_basis_roundtrip() {
        let t = q_sqrt2_sqrt3();
        let data = primitive_data(&t).unwrap();
        let pb = PowerBasis::new(&t, &data);
        // √2 as a polynomial in γ, then back
        let r2 = t.gen_elem(0);
        let p = pb.express(&t, &r2);
        let back = eval_base_poly(&t, &p, &data.gamma);
        assert_eq!(back, r2);
    }
}
