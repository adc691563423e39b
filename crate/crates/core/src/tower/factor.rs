//! Factorization over towers: the dispatch between the radical fast paths
//! (quadratics and x⁴ − c over quadratic-stage towers, x³ − c over cube
//! towers) and the general Trager reduction for number-field towers.
//! Function-field towers are supported only on the radical paths.

use crate::error::{Error, Result};
use crate::poly::{squarefree_decomposition, Factorization, Poly};
use crate::scalar::{BaseField, Field, FieldScalar};
use crate::tower::radical;
use crate::tower::{Tower, TowerElem};

/// Error out with a nontrivial factor if `m` (monic, deg ≥ 2) is reducible.
pub fn check_irreducible(t: &Tower, m: &Poly<Tower>) -> Result<()> {
    match find_nontrivial_factor(t, m)? {
        None => Ok(()),
        Some(f) => Err(Error::ReduciblePolynomial(f.to_string_var(t, "x"))),
    }
}

fn find_nontrivial_factor(t: &Tower, m: &Poly<Tower>) -> Result<Option<Poly<Tower>>> {
    // quadratic over a quadratic-stage tower: discriminant square test
    if m.deg() == 2 && radical::all_stages_quadratic(t) && t.base().characteristic() != 2 {
        return Ok(split_quadratic(t, m).map(|(l1, _)| l1));
    }
    // cube radical over a cube tower in characteristic 2
    if m.deg() == 3
        && matches!(t.base(), BaseField::RatFunc(_))
        && radical::all_stages_cube_radical(t)
    {
        if let Some(c) = pure_radical_constant(t, m) {
            return Ok(radical::cube_root_in_cube_tower(t, &c).map(|r| {
                Poly::new(t, vec![t.neg(&r), t.one_elem()])
            }));
        }
    }
    match t.base() {
        BaseField::Q => {
            let fac = factor(t, m)?;
            if fac.is_irreducible() {
                Ok(None)
            } else {
                Ok(Some(fac.factors[0].0.clone()))
            }
        }
        _ => Err(Error::UnsupportedDomain(format!(
            "factorization over towers with base {}",
            t.base().descriptor()
        ))),
    }
}

/// For m = x^d − c with every other coefficient zero, the constant c.
fn pure_radical_constant(t: &Tower, m: &Poly<Tower>) -> Option<FieldScalar> {
    let d = m.deg();
    for i in 1..d {
        if !t.is_zero_elem(&m.coeffs()[i]) {
            return None;
        }
    }
    let c = t.neg(&m.coeffs()[0]);
    if c.0[1..].iter().all(|x| t.base().is_zero(x)) {
        Some(c.0[0].clone())
    } else {
        None
    }
}

/// Split a monic quadratic over a quadratic-stage tower via its
/// discriminant; returns the two linear factors if it splits.
fn split_quadratic(t: &Tower, m: &Poly<Tower>) -> Option<(Poly<Tower>, Poly<Tower>)> {
    let b = &m.coeffs()[1];
    let c = &m.coeffs()[0];
    let four = t.from_int_elem(4);
    let disc = t.sub(&t.mul(b, b), &t.mul(&four, c));
    let s = radical::sqrt_in_tower(t, &disc)?;
    let half = t.inv(&t.from_int_elem(2)).unwrap();
    let r1 = t.mul(&t.sub(&s, b), &half);
    let r2 = t.mul(&t.sub(&t.neg(&s), b), &half);
    Some((
        Poly::new(t, vec![t.neg(&r1), t.one_elem()]),
        Poly::new(t, vec![t.neg(&r2), t.one_elem()]),
    ))
}

/// Factor a monic squarefree polynomial over the tower.
fn factor_squarefree(t: &Tower, f: &Poly<Tower>) -> Result<Vec<Poly<Tower>>> {
    if f.deg() <= 1 {
        return Ok(vec![f.clone()]);
    }
    if radical::all_stages_quadratic(t) && t.base().characteristic() != 2 {
        if f.deg() == 2 {
            return Ok(match split_quadratic(t, f) {
                Some((a, b)) => vec![a, b],
                None => vec![f.clone()],
            });
        }
        // x⁴ − c: quartic radical analysis stays inside the sqrt solver
        if f.deg() == 4 {
            if let Some(c) = quartic_radical_constant(t, f) {
                return Ok(factor_quartic_radical(t, &c));
            }
        }
    }
    if f.deg() == 3
        && matches!(t.base(), BaseField::RatFunc(_))
        && radical::all_stages_cube_radical(t)
    {
        if let Some(c) = pure_radical_constant(t, f) {
            return Ok(match radical::cube_root_in_cube_tower(t, &c) {
                Some(r) => {
                    let lin = Poly::new(t, vec![t.neg(&r), t.one_elem()]);
                    let quot = f.div_exact(t, &lin);
                    let mut out = vec![lin];
                    out.extend(factor_squarefree(t, &quot)?);
                    out
                }
                None => vec![f.clone()],
            });
        }
    }
    match t.base() {
        BaseField::Q => crate::poly::trager::factor_squarefree_over_q_tower(t, f),
        _ => Err(Error::UnsupportedDomain(format!(
            "factorization over towers with base {}",
            t.base().descriptor()
        ))),
    }
}

/// f = x⁴ − c as a tower element c (any coefficients), or None.
fn quartic_radical_constant(t: &Tower, f: &Poly<Tower>) -> Option<TowerElem> {
    if f.deg() != 4 {
        return None;
    }
    for i in 1..4 {
        if !t.is_zero_elem(&f.coeffs()[i]) {
            return None;
        }
    }
    Some(t.neg(&f.coeffs()[0]))
}

/// Complete factorization of x⁴ − c over a quadratic-stage char-0 tower:
/// a pure-radical case analysis on which of √c, √−c, √(±2√−c) exist.
fn factor_quartic_radical(t: &Tower, c: &TowerElem) -> Vec<Poly<Tower>> {
    let one = t.one_elem();
    let x4mc = {
        let mut coeffs = vec![t.neg(c), t.zero_elem(), t.zero_elem(), t.zero_elem(), one.clone()];
        coeffs[4] = t.one_elem();
        Poly::new(t, coeffs)
    };
    if let Some(w) = radical::sqrt_in_tower(t, c) {
        // (x² − w)(x² + w), each possibly splitting further
        let a = Poly::new(t, vec![t.neg(&w), t.zero_elem(), one.clone()]);
        let b = Poly::new(t, vec![w.clone(), t.zero_elem(), one.clone()]);
        let mut out = Vec::new();
        for q in [a, b] {
            match split_quadratic(t, &q) {
                Some((l1, l2)) => {
                    out.push(l1);
                    out.push(l2);
                }
                None => out.push(q),
            }
        }
        return out;
    }
    if let Some(s) = radical::sqrt_in_tower(t, &t.neg(c)) {
        // try (x² ± ux + s) with u² = 2s, then (x² ± ux − s) with u² = −2s
        let two = t.from_int_elem(2);
        for (v, u2) in [(s.clone(), t.mul(&two, &s)), (t.neg(&s), t.neg(&t.mul(&two, &s)))] {
            if let Some(u) = radical::sqrt_in_tower(t, &u2) {
                let a = Poly::new(t, vec![v.clone(), u.clone(), one.clone()]);
                let b = Poly::new(t, vec![v.clone(), t.neg(&u), one.clone()]);
                debug_assert_eq!(a.mul(t, &b), x4mc);
                let mut out = Vec::new();
                for q in [a, b] {
                    match split_quadratic(t, &q) {
                        Some((l1, l2)) => {
                            out.push(l1);
                            out.push(l2);
                        }
                        None => out.push(q),
                    }
                }
                return out;
            }
        }
    }
    vec![x4mc]
}

/// Complete factorization over the tower, canonical order.
pub fn factor(t: &Tower, f: &Poly<Tower>) -> Result<Factorization<Tower>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let unit = f.leading(t);
    let (_, f) = f.monic(t);
    if f.deg() == 0 {
        return Ok(Factorization { unit, factors: vec![] });
    }
    let char_p = t.base().characteristic();
    let parts = if char_p == 0 {
        squarefree_decomposition(t, &f, &|c: &TowerElem| c.clone())
    } else {
        // the function-field uses are all separable radical polynomials;
        // fall back to a plain gcd split for safety
        let d = f.derivative(t);
        if d.is_zero() || f.gcd(t, &d).deg() > 0 {
            return Err(Error::UnsupportedDomain(
                "inseparable polynomial over a function-field tower".into(),
            ));
        }
        vec![(f.clone(), 1)]
    };
    let mut factors = Vec::new();
    for (g, mult) in parts {
        for irr in factor_squarefree(t, &g)? {
            factors.push((irr.monic(t).1, mult));
        }
    }
    let mut fac = Factorization { unit, factors };
    fac.sort_canonical(t);
    Ok(fac)
}

/// The set of roots of f in the tower, from the linear factors, in
/// canonical element order.
pub fn roots_in(t: &Tower, f: &Poly<Tower>) -> Result<Vec<TowerElem>> {
    let fac = factor(t, f)?;
    let mut roots: Vec<TowerElem> = fac
        .factors
        .iter()
        .filter(|(p, _)| p.deg() == 1)
        .map(|(p, _)| t.neg(&p.coeffs()[0]))
        .collect();
    roots.sort_by(|a, b| t.cmp_elem(a, b));
    Ok(roots)
}

/// Roots of a base-coefficient polynomial in the tower.
pub fn roots_in_base_poly(t: &Tower, f: &Poly<BaseField>) -> Result<Vec<TowerElem>> {
    let lifted = Poly::new(t, f.coeffs().iter().map(|c| t.from_base(c.clone())).collect());
    roots_in(t, &lifted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tower::tests::q_sqrt2_sqrt3;

    fn tp(t: &Tower, ints: &[i64]) -> Poly<Tower> {
        Poly::from_ints(t, ints)
    }

    #[test]
    fn adjoin_examples() {
        let q0 = Tower::rationals();
        let t1 = q0.adjoin("a", &tp(&q0, &[-2, 0, 1])).unwrap();
        assert_eq!(t1.degree(), 2);
        let t2 = t1.adjoin("b", &tp(&t1, &[-3, 0, 1])).unwrap();
        assert_eq!(t2.degree(), 4);
        // x² − 4 is reducible with witness x − 2
        let err = q0.adjoin("a", &tp(&q0, &[-4, 0, 1])).unwrap_err();
        match err {
            Error::ReduciblePolynomial(w) => assert_eq!(w, "x-2"),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn x2_minus_2_splits_over_sqrt2() {
        let t = q_sqrt2_sqrt3().prefix(1);
        let roots = roots_in(&t, &tp(&t, &[-2, 0, 1])).unwrap();
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0], t.neg(&t.gen_elem(0)));
        assert_eq!(roots[1], t.gen_elem(0));
    }

    #[test]
    fn roth_roots_empty() {
        // x² − 2 over ℚ(√3, √5) has no roots
        let q0 = Tower::rationals();
        let t1 = q0.adjoin("a", &tp(&q0, &[-3, 0, 1])).unwrap();
        let t2 = t1.adjoin("b", &tp(&t1, &[-5, 0, 1])).unwrap();
        let roots = roots_in(&t2, &tp(&t2, &[-2, 0, 1])).unwrap();
        assert!(roots.is_empty());
    }

    #[test]
    fn cubic_field_partial_split() {
        // x³ − 2 over ℚ(∛2): exactly one root
        let q0 = Tower::rationals();
        let t = q0.adjoin("c", &tp(&q0, &[-2, 0, 0, 1])).unwrap();
        let roots = roots_in(&t, &tp(&t, &[-2, 0, 0, 1])).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0], t.gen_elem(0));
    }

    #[test]
    fn factorization_reexpands() {
        let t = q_sqrt2_sqrt3();
        // (x² − 2)(x² − 5) over ℚ(√2, √3): first splits, second stays
        let f = tp(&t, &[-2, 0, 1]).mul(&t, &tp(&t, &[-5, 0, 1]));
        let fac = factor(&t, &f).unwrap();
        assert_eq!(fac.expand(&t), f);
        assert_eq!(fac.factors.len(), 3);
    }

    #[test]
    fn quartic_x4_minus_2_over_quartic_tower() {
        // ℚ(√2, ⁴√2 as √(√2)): x⁴ − 2 = (x − ⁴√2)(x + ⁴√2)(x² + √2)
        let q0 = Tower::rationals();
        let t1 = q0.adjoin("s", &tp(&q0, &[-2, 0, 1])).unwrap();
        let mut m = Poly::from_ints(&t1, &[0, 0, 1]);
        m = m.sub(&t1, &Poly::constant(&t1, t1.gen_elem(0)));
        let t2 = t1.adjoin("f", &m).unwrap();
        assert_eq!(t2.degree(), 4);
        let fac = factor(&t2, &tp(&t2, &[-2, 0, 0, 0, 1])).unwrap();
        let degs: Vec<usize> = fac.factors.iter().map(|(p, _)| p.deg()).collect();
        assert_eq!(degs.iter().filter(|&&d| d == 1).count(), 2);
        assert_eq!(degs.iter().filter(|&&d| d == 2).count(), 1);
        assert_eq!(fac.expand(&t2), tp(&t2, &[-2, 0, 0, 0, 1]));
    }

    #[test]
    fn x4_minus_2_irreducible_over_multiquadratic() {
        // over ℚ(√3, √14): x⁴ − 2 is irreducible
        let q0 = Tower::rationals();
        let t1 = q0.adjoin("a", &tp(&q0, &[-3, 0, 1])).unwrap();
        let t2 = t1.adjoin("b", &tp(&t1, &[-14, 0, 1])).unwrap();
        let fac = factor(&t2, &tp(&t2, &[-2, 0, 0, 0, 1])).unwrap();
        assert!(fac.is_irreducible());
    }

    #[test]
    fn gf3t_quadratic_adjoin_and_roth() {
        // GF(3)(t): adjoin √t, then x² − (t+1) stays irreducible
        let rf = BaseField::rational_functions(3).unwrap();
        let t0 = Tower::new(rf.clone());
        let tvar = rf.parse_scalar("0,1").unwrap();
        let m = Poly::new(
            &t0,
            vec![t0.from_base(rf.neg(&tvar)), t0.zero_elem(), t0.one_elem()],
        );
        let t1 = t0.adjoin("r0", &m).unwrap();
        let tp1 = rf.parse_scalar("1,1").unwrap();
        let m2 = Poly::new(
            &t1,
            vec![t1.from_base(rf.neg(&tp1)), t1.zero_elem(), t1.one_elem()],
        );
        assert!(check_irreducible(&t1, &m2).is_ok());
        // but x² − t is now reducible with root r0
        let mt = Poly::new(
            &t1,
            vec![t1.from_base(rf.neg(&tvar)), t1.zero_elem(), t1.one_elem()],
        );
        assert!(check_irreducible(&t1, &mt).is_err());
    }
}
