//! Enumerated subfields: exact membership by linear algebra over the
//! product basis of the generated subtower, and transport of structure,
//! which re-presents the generated subfield as a standalone tower with a
//! verified embedding back into the ambient one.

use crate::linalg::{to_sparse, IncrementalSpan};
use crate::scalar::{Field, FieldScalar};
use crate::tower::{Tower, TowerElem};

/// A finite prefix of an enumeration of subfield generators, all living in
/// one ambient tower.
#[derive(Clone, Debug)]
pub struct SubfieldEnumeration {
    pub gens: Vec<TowerElem>,
}

/// The standalone presentation of a generated subfield.
pub struct Transport {
    /// The subfield as a tower over the same base.
    pub tower: Tower,
    /// Images of the subtower's stage generators in the ambient tower.
    pub gen_images: Vec<TowerElem>,
    /// Ambient coordinates of each subtower basis monomial, in the
    /// subtower's basis order.
    pub basis_in_ambient: Vec<TowerElem>,
    /// Input generators that were already in the span, with their
    /// expression over the subtower basis.
    pub redundant: Vec<(usize, Vec<FieldScalar>)>,
}

impl Transport {
    /// Map a subtower element to the ambient tower (linear in the basis).
    pub fn to_ambient(&self, ambient: &Tower, elem: &TowerElem) -> TowerElem {
        let mut acc = ambient.zero_elem();
        for (i, c) in elem.0.iter().enumerate() {
            if ambient.base().is_zero(c) {
                continue;
            }
            acc = ambient.add(&acc, &ambient.scale(&self.basis_in_ambient[i], c));
        }
        acc
    }

    /// Homomorphism check on all generator pairs plus hit-check for the
    /// redundant generators.
    pub fn verify(&self, ambient: &Tower, sub: &SubfieldEnumeration) -> bool {
        let g = &self.tower;
        for i in 0..g.num_stages() {
            for j in 0..g.num_stages() {
                let prod = g.mul(&g.gen_elem(i), &g.gen_elem(j));
                let lhs = self.to_ambient(ambient, &prod);
                let rhs = ambient.mul(&self.gen_images[i], &self.gen_images[j]);
                if lhs != rhs {
                    return false;
                }
            }
        }
        for (idx, expr) in &self.redundant {
            let elem = self.to_ambient(ambient, &TowerElem(expr.clone()));
            if elem != sub.gens[*idx] {
                return false;
            }
        }
        true
    }
}

/// Transport of structure: build a tower isomorphic to the subfield
/// generated by `sub` over the base, together with the embedding data.
/// Redundant generators are detected by the membership solver and skipped.
pub fn transport(ambient: &Tower, sub: &SubfieldEnumeration) -> Transport {
    let base = ambient.base().clone();
    let mut g_tower = Tower::new(base.clone());
    let mut basis: Vec<TowerElem> = vec![ambient.one_elem()];
    let mut span = IncrementalSpan::new(base.clone());
    span.insert(to_sparse(&base, &ambient.one_elem().0)).unwrap();
    let mut gen_images: Vec<TowerElem> = Vec::new();
    let mut redundant: Vec<(usize, Vec<FieldScalar>)> = Vec::new();

    for (gi, g) in sub.gens.iter().enumerate() {
        if let Some(expr) = span.express(&to_sparse(&base, &g.0)) {
            redundant.push((gi, pad_to(&base, expr, g_tower.degree())));
            continue;
        }
        // minimal polynomial of g over the current subfield: grow the span
        // of basis·gʲ until g^k falls inside
        let mut ext = IncrementalSpan::new(base.clone());
        let mut meta: Vec<(usize, usize)> = Vec::new();
        let mut powers: Vec<TowerElem> = vec![ambient.one_elem()];
        let (deg, expr) = 'search: {
            for k in 0.. {
                for (b, bv) in basis.iter().enumerate() {
                    let v = ambient.mul(bv, &powers[k]);
                    if ext.insert(to_sparse(&base, &v.0)).is_ok() {
                        meta.push((k, b));
                    }
                }
                let next = ambient.mul(&powers[k], g);
                if let Some(expr) = ext.express(&to_sparse(&base, &next.0)) {
                    break 'search (k + 1, expr);
                }
                powers.push(next);
            }
            unreachable!("algebraic element has a minimal polynomial")
        };
        let old_dim = g_tower.degree();
        let mut minpoly: Vec<Vec<FieldScalar>> = vec![vec![base.zero(); old_dim]; deg + 1];
        for (pos, c) in expr.iter().enumerate() {
            let (j, b) = meta[pos];
            minpoly[j][b] = base.neg(c);
        }
        minpoly[deg][0] = base.one();
        let name = format!("g{}", g_tower.num_stages());
        g_tower = g_tower.push_stage_unchecked(&name, minpoly);
        gen_images.push(g.clone());
        // new basis in the subtower's index order: index = e·old_dim + b
        let mut new_basis = Vec::with_capacity(old_dim * deg);
        for e in 0..deg {
            for bv in basis.iter() {
                new_basis.push(ambient.mul(bv, &powers[e]));
            }
        }
        basis = new_basis;
        span = IncrementalSpan::new(base.clone());
        for bv in &basis {
            span.insert(to_sparse(&base, &bv.0)).expect("subtower basis independent");
        }
    }

    Transport { tower: g_tower, gen_images, basis_in_ambient: basis, redundant }
}

fn pad_to(base: &crate::scalar::BaseField, mut v: Vec<FieldScalar>, dim: usize) -> Vec<FieldScalar> {
    v.resize(dim, base.zero());
    v
}

/// Membership of `candidate` in the subfield generated by `sub`: the
/// expression over the subtower's product basis, or None.
pub fn member(
    ambient: &Tower,
    candidate: &TowerElem,
    sub: &SubfieldEnumeration,
) -> Option<TowerElem> {
    let tr = transport(ambient, sub);
    member_via(ambient, candidate, &tr)
}

/// Membership against an already-computed transport.
pub fn member_via(ambient: &Tower, candidate: &TowerElem, tr: &Transport) -> Option<TowerElem> {
    let base = ambient.base();
    let mut span = IncrementalSpan::new(base.clone());
    for bv in &tr.basis_in_ambient {
        span.insert(to_sparse(base, &bv.0)).expect("basis independent");
    }
    span.express(&to_sparse(base, &candidate.0))
        .map(|expr| TowerElem(pad_to(base, expr, tr.tower.degree())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;
    use crate::scalar::BaseField;

    fn quad_tower(radicands: &[i64]) -> Tower {
        let mut t = Tower::rationals();
        for (i, &r) in radicands.iter().enumerate() {
            let m = Poly::from_ints(&t, &[-r, 0, 1]);
            t = t.adjoin(&format!("r{i}"), &m).unwrap();
        }
        t
    }

    #[test]
    fn sqrt6_is_member_of_sqrt2_sqrt3() {
        let t = quad_tower(&[2, 3]);
        let r6 = t.mul(&t.gen_elem(0), &t.gen_elem(1));
        let sub = SubfieldEnumeration { gens: vec![t.gen_elem(0), t.gen_elem(1)] };
        let w = member(&t, &r6, &sub).unwrap();
        // the witness reproduces √6 through the transport
        let tr = transport(&t, &sub);
        assert_eq!(tr.to_ambient(&t, &w), r6);
        assert!(tr.verify(&t, &sub));
    }

    #[test]
    fn roth_non_membership() {
        // √2 ∉ ⟨√3, √5⟩ inside ℚ(√2, √3, √5)
        let t = quad_tower(&[2, 3, 5]);
        let sub = SubfieldEnumeration { gens: vec![t.gen_elem(1), t.gen_elem(2)] };
        assert!(member(&t, &t.gen_elem(0), &sub).is_none());
    }

    #[test]
    fn transport_drops_redundant_generators() {
        // ⟨√2, √8⟩: √8 = 2√2 is redundant, degree stays 2
        let t = quad_tower(&[2]);
        let r8 = t.scale(&t.gen_elem(0), &BaseField::Q.from_int(2));
        let sub = SubfieldEnumeration { gens: vec![t.gen_elem(0), r8] };
        let tr = transport(&t, &sub);
        assert_eq!(tr.tower.degree(), 2);
        assert_eq!(tr.redundant.len(), 1);
        assert!(tr.verify(&t, &sub));
    }

    #[test]
    fn transport_of_product_generator() {
        // ⟨√2·√3⟩ inside ℚ(√2, √3) is a degree-2 tower (ℚ(√6))
        let t = quad_tower(&[2, 3]);
        let r6 = t.mul(&t.gen_elem(0), &t.gen_elem(1));
        let sub = SubfieldEnumeration { gens: vec![r6.clone()] };
        let tr = transport(&t, &sub);
        assert_eq!(tr.tower.degree(), 2);
        // minpoly of the new generator is x² − 6
        assert_eq!(
            tr.tower.stage_minpoly(0),
            Poly::from_ints(&Tower::rationals(), &[-6, 0, 1])
        );
        assert!(tr.verify(&t, &sub));
    }

    #[test]
    fn transport_trivial_subfield() {
        let t = quad_tower(&[2]);
        let sub = SubfieldEnumeration { gens: vec![t.one_elem()] };
        let tr = transport(&t, &sub);
        assert_eq!(tr.tower.degree(), 1);
        assert_eq!(tr.redundant.len(), 1);
    }

    #[test]
    fn function_field_roth_instance() {
        // √(t+1) ∉ ⟨√t⟩ over GF(3)(t) inside GF(3)(t)(√t, √(t+1))
        let rf = BaseField::rational_functions(3).unwrap();
        let mut t = Tower::new(rf.clone());
        for (i, s) in ["0,1", "1,1"].iter().enumerate() {
            let r = rf.parse_scalar(s).unwrap();
            let m = Poly::new(&t, vec![t.from_base(rf.neg(&r)), t.zero_elem(), t.one_elem()]);
            t = t.adjoin(&format!("r{i}"), &m).unwrap();
        }
        let sub = SubfieldEnumeration { gens: vec![t.gen_elem(0)] };
        assert!(member(&t, &t.gen_elem(1), &sub).is_none());
        // but t itself is a member (it is in the base)
        let tv = t.from_base(rf.parse_scalar("0,1").unwrap());
        assert!(member(&t, &tv, &sub).is_some());
    }
}
