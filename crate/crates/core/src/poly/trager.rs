//! Trager's reduction for factoring over a number-field tower: express the
//! tower through a primitive element γ, push the polynomial into
//! ℚ(γ)[x], factor its shifted norm over ℚ, and pull the factors back as
//! gcds. The shift s is the first integer making the norm squarefree.

use crate::error::Result;
use crate::poly::isolate::lagrange_interpolate;
use crate::poly::{factor_q, Poly};
use crate::scalar::{BaseField, Field, FieldScalar, Rationals};
use crate::tower::primitive::{eval_base_poly, primitive_data, PowerBasis};
use crate::tower::{Tower, TowerElem};
use num_rational::BigRational;
use std::cmp::Ordering;

/// ℚ[y]/(m): the simple-extension view of a tower, with elements reduced
/// rational polynomials.
#[derive(Clone)]
pub struct SimpleExt {
    pub m: Poly<Rationals>,
}

impl std::fmt::Debug for SimpleExt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SimpleExt(deg {})", self.m.deg())
    }
}

impl PartialEq for SimpleExt {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m
    }
}

impl Field for SimpleExt {
    type Elem = Poly<Rationals>;

    fn zero(&self) -> Poly<Rationals> {
        Poly::zero()
    }
    fn one(&self) -> Poly<Rationals> {
        Poly::one(&Rationals)
    }
    fn from_int(&self, n: i64) -> Poly<Rationals> {
        Poly::from_ints(&Rationals, &[n])
    }
    fn add(&self, a: &Poly<Rationals>, b: &Poly<Rationals>) -> Poly<Rationals> {
        a.add(&Rationals, b)
    }
    fn sub(&self, a: &Poly<Rationals>, b: &Poly<Rationals>) -> Poly<Rationals> {
        a.sub(&Rationals, b)
    }
    fn mul(&self, a: &Poly<Rationals>, b: &Poly<Rationals>) -> Poly<Rationals> {
        a.mul(&Rationals, b).rem(&Rationals, &self.m).unwrap()
    }
    fn neg(&self, a: &Poly<Rationals>) -> Poly<Rationals> {
        a.neg(&Rationals)
    }
    fn inv(&self, a: &Poly<Rationals>) -> Option<Poly<Rationals>> {
        if a.is_zero() {
            return None;
        }
        let (g, s, _) = a.ext_gcd(&Rationals, &self.m);
        if g.deg() != 0 {
            return None;
        }
        let ginv = Rationals.inv(&g.coeffs()[0]).unwrap();
        Some(s.scale(&Rationals, &ginv).rem(&Rationals, &self.m).unwrap())
    }
    fn is_zero(&self, a: &Poly<Rationals>) -> bool {
        a.is_zero()
    }
    fn cmp_elem(&self, a: &Poly<Rationals>, b: &Poly<Rationals>) -> Ordering {
        a.cmp_canonical(&Rationals, b)
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn elem_string(&self, a: &Poly<Rationals>) -> String {
        a.to_string_var(&Rationals, "y")
    }
}

fn to_rational(base: &BaseField, c: &FieldScalar) -> BigRational {
    match (base, c) {
        (BaseField::Q, FieldScalar::Rat(r)) => r.clone(),
        _ => panic!("expected a rational scalar"),
    }
}

/// Res_y(m(y), Σⱼ fⱼ(y)·(x − s·y)ʲ) by evaluation–interpolation; m monic.
fn shifted_norm(m: &Poly<Rationals>, fcoeffs: &[Poly<Rationals>], s: i64) -> Poly<Rationals> {
    let q = Rationals;
    let degf = fcoeffs.len() - 1;
    let degx = m.deg() * degf;
    let mut xs = Vec::with_capacity(degx + 1);
    let mut ys = Vec::with_capacity(degx + 1);
    for k in 0..=degx {
        let x0 = q.from_int(k as i64);
        // (x0 − s·y) as a polynomial in y
        let lin = Poly::new(&q, vec![x0.clone(), q.from_int(-s)]);
        let mut acc = Poly::<Rationals>::zero();
        for c in fcoeffs.iter().rev() {
            acc = acc.mul(&q, &lin).add(&q, c);
        }
        ys.push(m.resultant(&q, &acc));
        xs.push(x0);
    }
    lagrange_interpolate(&xs, &ys)
}

/// Factor a monic squarefree polynomial over a tower with base ℚ into
/// monic irreducible factors (unsorted; the caller sorts canonically).
pub fn factor_squarefree_over_q_tower(t: &Tower, f: &Poly<Tower>) -> Result<Vec<Poly<Tower>>> {
    assert_eq!(*t.base(), BaseField::Q);
    let q = Rationals;
    let n = t.degree();
    if f.deg() == 1 {
        return Ok(vec![f.clone()]);
    }
    if n == 1 {
        // the tower is ℚ in disguise
        let fq = Poly::new(&q, f.coeffs().iter().map(|c| to_rational(t.base(), &c.0[0])).collect());
        let fac = factor_q::factor_q(&fq)?;
        return Ok(fac
            .factors
            .into_iter()
            .map(|(g, _)| {
                Poly::new(
                    t,
                    g.coeffs().iter().map(|c| t.from_base(FieldScalar::Rat(c.clone()))).collect(),
                )
            })
            .collect());
    }
    let data = primitive_data(t)?;
    let pb = PowerBasis::new(t, &data);
    let fcoeffs: Vec<Poly<Rationals>> = f
        .coeffs()
        .iter()
        .map(|c| {
            let p = pb.express(t, c);
            Poly::new(&q, p.coeffs().iter().map(|x| to_rational(t.base(), x)).collect())
        })
        .collect();
    let m = Poly::new(
        &q,
        data.minpoly.coeffs().iter().map(|x| to_rational(t.base(), x)).collect(),
    );
    // find a shift making the norm squarefree
    let mut shift = 0i64;
    let norm = loop {
        let norm = shifted_norm(&m, &fcoeffs, shift);
        let d = norm.derivative(&q);
        if !d.is_zero() && norm.gcd(&q, &d).deg() == 0 {
            break norm;
        }
        shift += 1;
        assert!(shift < 64, "no squarefree norm shift found");
    };
    let hs = factor_q::factor_q(&norm)?;
    let ext = SimpleExt { m: m.clone() };
    let f_ext = Poly::new(&ext, fcoeffs);
    let gamma_poly = Poly::x(&q); // the class of y in ℚ[y]/m
    let mut out = Vec::new();
    for (h, _) in hs.factors {
        // h(x + s·γ) in ℚ(γ)[x]
        let lin = Poly::new(
            &ext,
            vec![gamma_poly.scale(&q, &q.from_int(shift)), Poly::one(&q)],
        );
        let mut hshift = Poly::<SimpleExt>::zero();
        for c in h.coeffs().iter().rev() {
            hshift = hshift
                .mul(&ext, &lin)
                .add(&ext, &Poly::constant(&ext, Poly::constant(&q, c.clone())));
        }
        let g = f_ext.gcd(&ext, &hshift);
        if g.deg() >= 1 {
            // map coefficients ℚ(γ) → tower
            let coeffs: Vec<TowerElem> = g
                .coeffs()
                .iter()
                .map(|c| {
                    let cb = Poly::new(
                        t.base(),
                        c.coeffs().iter().map(|r| FieldScalar::Rat(r.clone())).collect(),
                    );
                    eval_base_poly(t, &cb, &data.gamma)
                })
                .collect();
            out.push(Poly::new(t, coeffs));
        }
    }
    // the factors must reproduce f
    let product = out.iter().fold(Poly::one(t), |acc, g| acc.mul(t, g));
    assert_eq!(product, *f, "Trager factors failed to reproduce the input");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::BaseField;

    /// ℚ(∛2)
    fn cbrt2_tower() -> Tower {
        let q = BaseField::Q;
        Tower::rationals().push_stage_unchecked(
            "c",
            vec![
                vec![q.from_int(-2)],
                vec![q.from_int(0)],
                vec![q.from_int(0)],
                vec![q.from_int(1)],
            ],
        )
    }

    #[test]
    fn x3_minus_2_over_its_own_field() {
        let t = cbrt2_tower();
        let f = Poly::from_ints(&t, &[-2, 0, 0, 1]);
        let factors = factor_squarefree_over_q_tower(&t, &f).unwrap();
        // (x − ∛2) · irreducible quadratic
        assert_eq!(factors.len(), 2);
        let degs: Vec<usize> = factors.iter().map(|g| g.deg()).collect();
        assert!(degs.contains(&1) && degs.contains(&2));
    }

    #[test]
    fn x2_minus_2_over_sqrt2() {
        let t = crate::tower::tests::q_sqrt2_sqrt3().prefix(1);
        let f = Poly::from_ints(&t, &[-2, 0, 1]);
        let factors = factor_squarefree_over_q_tower(&t, &f).unwrap();
        assert_eq!(factors.len(), 2);
        assert!(factors.iter().all(|g| g.deg() == 1));
    }

    #[test]
    fn x2_minus_2_stays_irreducible_over_sqrt3() {
        let q = BaseField::Q;
        let t = Tower::rationals().push_stage_unchecked(
            "b",
            vec![vec![q.from_int(-3)], vec![q.from_int(0)], vec![q.from_int(1)]],
        );
        let f = Poly::from_ints(&t, &[-2, 0, 1]);
        let factors = factor_squarefree_over_q_tower(&t, &f).unwrap();
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0].deg(), 2);
    }
}
