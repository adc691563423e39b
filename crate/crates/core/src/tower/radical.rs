//! Radical element tests inside towers: exact square roots in towers all
//! of whose stages are quadratic (any characteristic ≠ 2), and the Kummer
//! cube-root criterion for cube-radical towers over GF(q)(t) with q ≡ 1
//! mod 3. These drive the fast factorization paths that keep the large
//! sign-propagation towers cheap.

use crate::scalar::{rational_sqrt, BaseField, Field, FieldScalar};
use crate::tower::{Tower, TowerElem};

/// Every stage has degree 2.
pub fn all_stages_quadratic(t: &Tower) -> bool {
    t.stages().iter().all(|s| s.degree() == 2)
}

/// Every stage is x³ − c with c supported in the base field.
pub fn all_stages_cube_radical(t: &Tower) -> bool {
    t.stages().iter().all(|s| {
        s.degree() == 3
            && s.minpoly[1].iter().all(|c| t.base().is_zero(c))
            && s.minpoly[2].iter().all(|c| t.base().is_zero(c))
            && s.minpoly[0][1..].iter().all(|c| t.base().is_zero(c))
    })
}

fn base_sqrt(base: &BaseField, c: &FieldScalar) -> Option<FieldScalar> {
    match (base, c) {
        (BaseField::Q, FieldScalar::Rat(r)) => rational_sqrt(r).map(FieldScalar::Rat),
        (BaseField::Ff(f), FieldScalar::Ff(e)) => f.sqrt(e).map(FieldScalar::Ff),
        (BaseField::RatFunc(r), FieldScalar::RatFunc(e)) => r.sqrt(e).map(FieldScalar::RatFunc),
        _ => panic!("scalar does not match base field"),
    }
}

/// Exact square root of an element in a tower whose stages are all
/// quadratic; `None` when the element is not a square. Characteristic 2 is
/// not supported (the completion-of-the-square steps divide by 2).
pub fn sqrt_in_tower(t: &Tower, a: &TowerElem) -> Option<TowerElem> {
    assert!(all_stages_quadratic(t), "sqrt recursion needs quadratic stages");
    assert_ne!(t.base().characteristic(), 2);
    sqrt_level(t, t.num_stages(), &a.0).map(TowerElem)
}

fn sqrt_level(t: &Tower, level: usize, a: &[FieldScalar]) -> Option<Vec<FieldScalar>> {
    let base = t.base();
    if level == 0 {
        return base_sqrt(base, &a[0]).map(|x| vec![x]);
    }
    let s = t.size_at(level - 1);
    let lf = crate::tower::LevelField { tower: t, level: level - 1 };
    let half = base.inv(&base.from_int(2)).unwrap();
    let halve = |v: &[FieldScalar]| -> Vec<FieldScalar> {
        v.iter().map(|c| base.mul(c, &half)).collect()
    };
    // stage minpoly x² + b·x + a0; pass to the shifted generator
    // G = g + b/2 with G² = b²/4 − a0
    let a0 = &t.stages()[level - 1].minpoly[0];
    let b = &t.stages()[level - 1].minpoly[1];
    let half_b = halve(b);
    let dd = lf.sub(&lf.mul(&half_b, &half_b), a0);
    let c0 = a[..s].to_vec();
    let c1 = a[s..].to_vec();
    // a = u + v·G
    let u = lf.sub(&c0, &lf.mul(&c1, &half_b));
    let v = c1;
    let compose = |x: &[FieldScalar], y: &[FieldScalar]| -> Vec<FieldScalar> {
        // the element x + y·G back in g-coordinates: (x + y·b/2) + y·g
        let mut out = lf.add(&x.to_vec(), &lf.mul(&y.to_vec(), &half_b));
        out.extend_from_slice(y);
        out
    };
    if lf.is_zero(&v) {
        if let Some(r) = sqrt_level(t, level - 1, &u) {
            let zero = lf.zero();
            return Some(compose(&r, &zero));
        }
        // try x = w·G with w² = u/dd
        let dinv = lf.inv(&dd)?;
        if let Some(w) = sqrt_level(t, level - 1, &lf.mul(&u, &dinv)) {
            let zero = lf.zero();
            return Some(compose(&zero, &w));
        }
        return None;
    }
    // x = p + q·G with 2pq = v and p² + q²·dd = u: p² satisfies
    // y² − u·y + v²·dd/4 = 0
    let disc = lf.sub(&lf.mul(&u, &u), &lf.mul(&lf.mul(&v, &v), &dd));
    let root = sqrt_level(t, level - 1, &disc)?;
    for sign in [1i64, -1] {
        let signed = if sign == 1 { root.clone() } else { lf.neg(&root) };
        let p2 = halve(&lf.add(&u, &signed));
        if lf.is_zero(&p2) {
            continue;
        }
        if let Some(p) = sqrt_level(t, level - 1, &p2) {
            let two_p_inv = lf.inv(&lf.add(&p, &p))?;
            let q = lf.mul(&v, &two_p_inv);
            let cand = compose(&p, &q);
            // paranoia: confirm the square
            let sq = t.mul(
                &TowerElem(pad(t, level, &cand)),
                &TowerElem(pad(t, level, &cand)),
            );
            let target = TowerElem(pad(t, level, a));
            if sq == target {
                return Some(cand);
            }
        }
    }
    None
}

fn pad(t: &Tower, _level: usize, v: &[FieldScalar]) -> Vec<FieldScalar> {
    let mut out = v.to_vec();
    out.resize(t.degree(), t.base().zero());
    out
}

/// Is x³ − c reducible over a cube-radical tower (rᵢ³ = pᵢ over GF(q)(t),
/// ζ₃ in the base)? By Kummer theory c is a cube in the tower iff
/// c·∏pᵢ^{2eᵢ} is a cube in the base field for some exponent vector e.
/// Returns a cube root when reducible.
pub fn cube_root_in_cube_tower(t: &Tower, c: &FieldScalar) -> Option<TowerElem> {
    assert!(all_stages_cube_radical(t));
    let BaseField::RatFunc(rf) = t.base() else {
        panic!("cube tower must sit over a rational function field")
    };
    assert_eq!(
        (rf.coeff_field().order() - 1) % 3,
        0,
        "base must contain the cube roots of unity"
    );
    let FieldScalar::RatFunc(ce) = c else { panic!("scalar mismatch") };
    let k = t.num_stages();
    let radicands: Vec<crate::scalar::RatFuncElem> = (0..k)
        .map(|j| {
            let FieldScalar::RatFunc(p) = &t.stages()[j].minpoly[0][0] else {
                panic!("cube stage radicand")
            };
            rf.neg(p) // minpoly is x³ − p, stored constant is −p
        })
        .collect();
    let mut exps = vec![0usize; k];
    loop {
        // candidate = c · ∏ pᵢ^{2eᵢ}
        let mut cand = ce.clone();
        for (j, &e) in exps.iter().enumerate() {
            for _ in 0..(2 * e) {
                cand = rf.mul(&cand, &radicands[j]);
            }
        }
        if let Some(w) = rf.cbrt(&cand) {
            // c = (w · ∏ rᵢ^{eᵢ} / pᵢ^{eᵢ})³
            let mut root = t.from_base(FieldScalar::RatFunc(w));
            for (j, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    root = t.mul(&root, &t.gen_elem(j));
                }
                let pinv = rf.inv(&radicands[j]).unwrap();
                for _ in 0..e {
                    root = t.scale(&root, &FieldScalar::RatFunc(pinv.clone()));
                }
            }
            let cube = t.mul(&t.mul(&root, &root), &root);
            assert_eq!(cube, t.from_base(c.clone()), "cube root certificate failed");
            return Some(root);
        }
        // next exponent vector
        let mut j = 0;
        loop {
            if j == k {
                return None;
            }
            exps[j] += 1;
            if exps[j] < 3 {
                break;
            }
            exps[j] = 0;
            j += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::BaseField;

    fn quad_tower(radicands: &[i64]) -> Tower {
        let q = BaseField::Q;
        let mut t = Tower::rationals();
        for (i, &r) in radicands.iter().enumerate() {
            let dim = t.degree();
            let mut c0 = vec![q.zero(); dim];
            c0[0] = q.from_int(-r);
            let zero = vec![q.zero(); dim];
            let mut one = vec![q.zero(); dim];
            one[0] = q.one();
            t = t.push_stage_unchecked(&format!("r{i}"), vec![c0, zero, one]);
        }
        t
    }

    #[test]
    fn sqrt_of_products_of_radicands() {
        let t = quad_tower(&[2, 3]);
        // 6 is a square (√2·√3), 2 is a square, 5 is not
        let six = t.from_int_elem(6);
        let s = sqrt_in_tower(&t, &six).unwrap();
        assert_eq!(t.mul(&s, &s), six);
        assert!(sqrt_in_tower(&t, &t.from_int_elem(2)).is_some());
        assert!(sqrt_in_tower(&t, &t.from_int_elem(5)).is_none());
        // (1+√2)² = 3+2√2 is a square
        let e = t.add(&t.one_elem(), &t.gen_elem(0));
        let sq = t.mul(&e, &e);
        let back = sqrt_in_tower(&t, &sq).unwrap();
        assert_eq!(t.mul(&back, &back), sq);
    }

    #[test]
    fn sqrt_roth_instance() {
        // √2 ∉ ℚ(√3, √5): x²−2 has no root there
        let t = quad_tower(&[3, 5]);
        assert!(sqrt_in_tower(&t, &t.from_int_elem(2)).is_none());
        assert!(sqrt_in_tower(&t, &t.from_int_elem(15)).is_some());
    }

    #[test]
    fn sqrt_with_negative_radicand() {
        // ℚ(i): −4 is a square, 2 is not, −1 is
        let t = quad_tower(&[-1]);
        let m4 = t.from_int_elem(-4);
        let s = sqrt_in_tower(&t, &m4).unwrap();
        assert_eq!(t.mul(&s, &s), m4);
        assert!(sqrt_in_tower(&t, &t.from_int_elem(2)).is_none());
    }

    #[test]
    fn sqrt_of_tower_element_radicand() {
        // ℚ(√2, √(√2)) = ℚ(2^{1/4}): √2 has a square root
        let q = BaseField::Q;
        let t1 = quad_tower(&[2]);
        // stage x² − √2 over ℚ(√2): constant coeff −√2 = (0, −1)
        let t2 = t1.push_stage_unchecked(
            "f",
            vec![
                vec![q.zero(), q.from_int(-1)],
                vec![q.zero(), q.zero()],
                vec![q.one(), q.zero()],
            ],
        );
        let r2 = t2.lift(&t1, &t1.gen_elem(0));
        let s = sqrt_in_tower(&t2, &r2).unwrap();
        assert_eq!(t2.mul(&s, &s), r2);
        // −√2 is not a square in this real field
        assert!(sqrt_in_tower(&t2, &t2.neg(&r2)).is_none());
    }

    #[test]
    fn sqrt_over_gf3_t() {
        // GF(3)(t)(√t): t is a square, t+1 is not
        let rf = BaseField::rational_functions(3).unwrap();
        let t_elem = rf.parse_scalar("0,1").unwrap();
        let mut t = Tower::new(rf.clone());
        let c0 = vec![rf.neg(&t_elem)];
        t = t.push_stage_unchecked("r", vec![c0, vec![rf.zero()], vec![rf.one()]]);
        assert!(sqrt_in_tower(&t, &t.from_base(t_elem)).is_some());
        let tp1 = rf.parse_scalar("1,1").unwrap();
        assert!(sqrt_in_tower(&t, &t.from_base(tp1)).is_none());
    }
}
