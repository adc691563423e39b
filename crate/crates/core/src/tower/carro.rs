//! Cube-root towers over GF(4)(t): builds GF(4)(t)(r₀, …, rₙ) with
//! rᵢ³ = pᵢ for distinct irreducible pᵢ and certifies by exact linear
//! algebra that the 3ⁿ⁺¹ products ∏ rᵢ^{εᵢ} are linearly independent
//! over GF(4)(t).

use crate::error::{Error, Result};
use crate::linalg::{to_sparse, IncrementalSpan};
use crate::poly::{factor_ff, Poly};
use crate::scalar::{BaseField, Ff, Field, FieldScalar};
use crate::tower::{Tower, TowerElem};

#[derive(Debug)]
pub struct CubeRootBasisReport {
    pub tower: Tower,
    /// 3^(number of primes)
    pub dimension: usize,
    pub independent: bool,
    /// Dimensions of the matrix whose rank was computed.
    pub certificate_rows: usize,
    pub certificate_cols: usize,
}

/// Build the cube-root tower over GF(4)(t) for the given distinct monic
/// irreducibles and verify the independence of the ε-products.
pub fn cube_root_basis_check(primes: &[Poly<Ff>]) -> Result<CubeRootBasisReport> {
    let gf4 = Ff::galois(2, 2).unwrap();
    for p in primes {
        if !p.is_monic(&gf4) || !factor_ff::is_irreducible(&gf4, p) {
            return Err(Error::NotIrreducible(p.to_string_var(&gf4, "t")));
        }
    }
    for i in 0..primes.len() {
        for j in i + 1..primes.len() {
            if primes[i] == primes[j] {
                return Err(Error::DuplicatePrimes);
            }
        }
    }
    let base = BaseField::rational_functions_over(gf4.clone());
    let mut tower = Tower::new(base.clone());
    for (i, p) in primes.iter().enumerate() {
        let BaseField::RatFunc(rf) = &base else { unreachable!() };
        let pe = FieldScalar::RatFunc(rf.from_poly(p.clone()));
        let m = Poly::new(
            &tower,
            vec![
                tower.from_base(base.neg(&pe)),
                tower.zero_elem(),
                tower.zero_elem(),
                tower.one_elem(),
            ],
        );
        tower = tower.adjoin(&format!("r{i}"), &m)?;
    }
    // exact rank of the ε-product vectors
    let dim = tower.degree();
    let mut span = IncrementalSpan::new(base.clone());
    let mut exps = vec![0usize; primes.len()];
    let mut inserted = 0usize;
    loop {
        let mut prod = tower.one_elem();
        for (j, &e) in exps.iter().enumerate() {
            for _ in 0..e {
                prod = tower.mul(&prod, &tower.gen_elem(j));
            }
        }
        if span.insert(to_sparse(&base, &prod.0)).is_ok() {
            inserted += 1;
        }
        let mut j = 0;
        loop {
            if j == exps.len() {
                return Ok(CubeRootBasisReport {
                    dimension: dim,
                    independent: inserted == dim && span.rank() == dim,
                    certificate_rows: dim,
                    certificate_cols: dim,
                    tower,
                });
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

    fn gf4_poly(ints: &[i64]) -> Poly<Ff> {
        Poly::from_ints(&Ff::galois(2, 2).unwrap(), ints)
    }

    #[test]
    fn single_prime_t() {
        let report = cube_root_basis_check(&[gf4_poly(&[0, 1])]).unwrap();
        assert!(report.independent);
        assert_eq!(report.dimension, 3);
        assert_eq!((report.certificate_rows, report.certificate_cols), (3, 3));
    }

    #[test]
    fn two_primes_t_and_t_plus_1() {
        let report = cube_root_basis_check(&[gf4_poly(&[0, 1]), gf4_poly(&[1, 1])]).unwrap();
        assert!(report.independent);
        assert_eq!(report.dimension, 9);
    }

    #[test]
    fn duplicates_rejected() {
        let err = cube_root_basis_check(&[gf4_poly(&[0, 1]), gf4_poly(&[0, 1])]).unwrap_err();
        assert_eq!(err, Error::DuplicatePrimes);
    }

    #[test]
    fn reducible_prime_rejected() {
        // t² is not irreducible
        let err = cube_root_basis_check(&[gf4_poly(&[0, 0, 1])]).unwrap_err();
        assert!(matches!(err, Error::NotIrreducible(_)));
    }
}
