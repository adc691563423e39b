//! Dense exact linear algebra over any `Field`: Gaussian elimination for
//! solving, rank, and kernels. Everything the membership solver and the
//! fixed-field computation need.

use crate::scalar::Field;

/// Row-major matrix of field elements.
#[derive(Clone, Debug)]
pub struct Matrix<F: Field> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn from_columns(field: &F, cols: &[Vec<F::Elem>]) -> Self {
        let rows = cols.first().map(|c| c.len()).unwrap_or(0);
        let mut m = Matrix::zeros(field, rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                *m.at_mut(i, j) = v.clone();
            }
        }
        m
    }

    pub fn at(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut F::Elem {
        &mut self.data[i * self.cols + j]
    }

    /// Reduced row echelon form; returns the pivot column of each pivot row.
    pub fn rref(&mut self, field: &F) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let pivot_row = (row..self.rows).find(|&r| !field.is_zero(self.at(r, col)));
            let Some(p) = pivot_row else { continue };
            // swap rows p and row
            if p != row {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, row * self.cols + j);
                }
            }
            let inv = field.inv(self.at(row, col)).expect("pivot nonzero");
            for j in col..self.cols {
                let v = field.mul(self.at(row, j), &inv);
                *self.at_mut(row, j) = v;
            }
            for r in 0..self.rows {
                if r == row || field.is_zero(self.at(r, col)) {
                    continue;
                }
                let factor = self.at(r, col).clone();
                for j in col..self.cols {
                    let sub = field.mul(&factor, self.at(row, j));
                    let v = field.sub(self.at(r, j), &sub);
                    *self.at_mut(r, j) = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self, field: &F) -> usize {
        let mut m = self.clone();
        m.rref(field).len()
    }
}

/// Solve A·x = b for one solution, or None if inconsistent.
/// A is given by columns.
pub fn solve_columns<F: Field>(
    field: &F,
    columns: &[Vec<F::Elem>],
    b: &[F::Elem],
) -> Option<Vec<F::Elem>> {
    let rows = b.len();
    let n = columns.len();
    let mut aug = Matrix::zeros(field, rows, n + 1);
    for (j, col) in columns.iter().enumerate() {
        assert_eq!(col.len(), rows, "column length mismatch");
        for i in 0..rows {
            *aug.at_mut(i, j) = col[i].clone();
        }
    }
    for i in 0..rows {
        *aug.at_mut(i, n) = b[i].clone();
    }
    let pivots = aug.rref(field);
    if pivots.contains(&n) {
        return None; // pivot in the augmented column: inconsistent
    }
    let mut x = vec![field.zero(); n];
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = aug.at(row, n).clone();
    }
    Some(x)
}

/// First linear dependency among the given vectors: the smallest prefix
/// v₀..vₖ that is dependent, returned as coefficients c₀..cₖ with cₖ = 1
/// and Σ cᵢ vᵢ = 0. None if all vectors are independent.
pub fn first_dependency<F: Field>(field: &F, vectors: &[Vec<F::Elem>]) -> Option<Vec<F::Elem>> {
    for k in 0..vectors.len() {
        if let Some(mut c) = solve_columns(
            field,
            &vectors[..k],
            &vectors[k].iter().map(|v| field.neg(v)).collect::<Vec<_>>(),
        ) {
            c.push(field.one());
            return Some(c);
        }
    }
    None
}

/// Basis of the solution space of A·x = 0, A given by rows.
pub fn kernel_basis<F: Field>(field: &F, rows_in: &[Vec<F::Elem>], cols: usize) -> Vec<Vec<F::Elem>> {
    let rows = rows_in.len();
    let mut m = Matrix::zeros(field, rows, cols);
    for (i, r) in rows_in.iter().enumerate() {
        assert_eq!(r.len(), cols);
        for j in 0..cols {
            *m.at_mut(i, j) = r[j].clone();
        }
    }
    let pivots = m.rref(field);
    let mut basis = Vec::new();
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    for free in 0..cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![field.zero(); cols];
        v[free] = field.one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = field.neg(m.at(row, free));
        }
        basis.push(v);
    }
    basis
}

/// Sparse column vector: sorted (index, nonzero value) pairs.
pub type SparseVec<F> = Vec<(usize, <F as Field>::Elem)>;

pub fn to_sparse<F: Field>(field: &F, dense: &[F::Elem]) -> SparseVec<F> {
    dense
        .iter()
        .enumerate()
        .filter(|(_, v)| !field.is_zero(v))
        .map(|(i, v)| (i, v.clone()))
        .collect()
}

pub fn to_dense<F: Field>(field: &F, sparse: &SparseVec<F>, dim: usize) -> Vec<F::Elem> {
    let mut out = vec![field.zero(); dim];
    for (i, v) in sparse {
        out[*i] = v.clone();
    }
    out
}

fn sparse_axpy<F: Field>(field: &F, a: &SparseVec<F>, c: &F::Elem, b: &SparseVec<F>) -> SparseVec<F> {
    // a + c·b, merging sorted index lists
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0usize, 0usize);
    while i < a.len() || j < b.len() {
        let next = match (a.get(i), b.get(j)) {
            (Some((ia, va)), Some((ib, vb))) => {
                if ia < ib {
                    i += 1;
                    (*ia, va.clone())
                } else if ib < ia {
                    j += 1;
                    (*ib, field.mul(c, vb))
                } else {
                    let v = field.add(va, &field.mul(c, vb));
                    i += 1;
                    j += 1;
                    (*ia, v)
                }
            }
            (Some((ia, va)), None) => {
                i += 1;
                (*ia, va.clone())
            }
            (None, Some((ib, vb))) => {
                j += 1;
                (*ib, field.mul(c, vb))
            }
            (None, None) => unreachable!(),
        };
        if !field.is_zero(&next.1) {
            out.push(next);
        }
    }
    out
}

/// Growing span with exact membership queries and expressions in terms of
/// the inserted vectors. Sparse throughout, so monomial-heavy data (tower
/// basis vectors) stays cheap.
pub struct IncrementalSpan<F: Field> {
    field: F,
    /// (pivot row, reduced column scaled to pivot 1, expression of that
    /// column over the inserted vectors)
    pivots: Vec<(usize, SparseVec<F>, Vec<F::Elem>)>,
    inserted: usize,
}

impl<F: Field> IncrementalSpan<F> {
    pub fn new(field: F) -> Self {
        IncrementalSpan { field, pivots: Vec::new(), inserted: 0 }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn inserted(&self) -> usize {
        self.inserted
    }

    fn reduce(&self, v: &SparseVec<F>) -> (SparseVec<F>, Vec<F::Elem>) {
        let f = &self.field;
        let mut cur = v.clone();
        let mut combo = vec![f.zero(); self.inserted];
        for (row, col, expr) in &self.pivots {
            let coeff = cur.iter().find(|(i, _)| i == row).map(|(_, v)| v.clone());
            if let Some(c) = coeff {
                let nc = f.neg(&c);
                cur = sparse_axpy(f, &cur, &nc, col);
                for (k, e) in expr.iter().enumerate() {
                    combo[k] = f.add(&combo[k], &f.mul(&c, e));
                }
            }
        }
        (cur, combo)
    }

    /// Express v over the inserted vectors, if it lies in the span.
    pub fn express(&self, v: &SparseVec<F>) -> Option<Vec<F::Elem>> {
        let (residual, combo) = self.reduce(v);
        if residual.is_empty() {
            Some(combo)
        } else {
            None
        }
    }

    /// Insert a vector. `Ok(())` if it enlarged the span; `Err(expr)` with
    /// the expression over previously inserted vectors if dependent.
    /// Dependent vectors are not counted as inserted.
    pub fn insert(&mut self, v: SparseVec<F>) -> std::result::Result<(), Vec<F::Elem>> {
        let f = self.field.clone();
        let (residual, combo) = self.reduce(&v);
        if residual.is_empty() {
            return Err(combo);
        }
        let (row, lead) = residual[0].clone();
        let inv = f.inv(&lead).expect("nonzero pivot");
        let col: SparseVec<F> = residual
            .iter()
            .map(|(i, x)| (*i, f.mul(x, &inv)))
            .collect();
        // expression of the normalized column: (v − Σ combo·inserted)/lead
        let mut expr: Vec<F::Elem> = combo.iter().map(|c| f.mul(&f.neg(c), &inv)).collect();
        expr.push(inv);
        // pad older pivot expressions to the new inserted count and keep the
        // pivot set mutually reduced (zero at every other pivot row)
        for (_, pcol, pexpr) in self.pivots.iter_mut() {
            pexpr.push(f.zero());
            let c = pcol.iter().find(|(i, _)| *i == row).map(|(_, v)| v.clone());
            if let Some(c) = c {
                let nc = f.neg(&c);
                *pcol = sparse_axpy(&f, pcol, &nc, &col);
                for (k, e) in expr.iter().enumerate() {
                    pexpr[k] = f.sub(&pexpr[k], &f.mul(&c, e));
                }
            }
        }
        self.inserted += 1;
        self.pivots.push((row, col, expr));
        self.pivots.sort_by_key(|(r, _, _)| *r);
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Field, Rationals};

    #[test]
    fn solve_and_rank() {
        let q = Rationals;
        let cols = vec![
            vec![q.from_int(1), q.from_int(0)],
            vec![q.from_int(1), q.from_int(1)],
        ];
        let b = vec![q.from_int(3), q.from_int(2)];
        let x = solve_columns(&q, &cols, &b).unwrap();
        assert_eq!(x, vec![q.from_int(1), q.from_int(2)]);

        let inconsistent = solve_columns(
            &q,
            &[vec![q.from_int(1), q.from_int(2)]],
            &[q.from_int(1), q.from_int(3)],
        );
        assert!(inconsistent.is_none());
    }

    #[test]
    fn dependency_detection() {
        let q = Rationals;
        let vs = vec![
            vec![q.from_int(1), q.from_int(0)],
            vec![q.from_int(0), q.from_int(1)],
            vec![q.from_int(2), q.from_int(3)],
        ];
        let dep = first_dependency(&q, &vs).unwrap();
        assert_eq!(dep.len(), 3);
        assert_eq!(dep[0], q.from_int(-2));
        assert_eq!(dep[1], q.from_int(-3));
        assert_eq!(dep[2], q.from_int(1));
    }

    #[test]
    fn incremental_span_expressions() {
        let q = Rationals;
        let mut span = IncrementalSpan::new(q.clone());
        let v = |ints: &[i64]| -> SparseVec<Rationals> {
            to_sparse(&q, &ints.iter().map(|&n| q.from_int(n)).collect::<Vec<_>>())
        };
        span.insert(v(&[1, 2, 0])).unwrap();
        span.insert(v(&[0, 1, 1])).unwrap();
        assert_eq!(span.rank(), 2);
        // [2, 5, 1] = 2·v0 + 1·v1
        let expr = span.express(&v(&[2, 5, 1])).unwrap();
        assert_eq!(expr, vec![q.from_int(2), q.from_int(1)]);
        assert!(span.express(&v(&[0, 0, 1])).is_none());
        // inserting a dependent vector reports its expression
        let err = span.insert(v(&[1, 3, 1])).unwrap_err();
        assert_eq!(err, vec![q.from_int(1), q.from_int(1)]);
        assert_eq!(span.inserted(), 2);
    }

    #[test]
    fn kernel_of_singular_map() {
        let q = Rationals;
        let rows = vec![
            vec![q.from_int(1), q.from_int(2), q.from_int(3)],
            vec![q.from_int(2), q.from_int(4), q.from_int(6)],
        ];
        let basis = kernel_basis(&q, &rows, 3);
        assert_eq!(basis.len(), 2);
        for v in basis {
            let dot: num_rational::BigRational = rows[0]
                .iter()
                .zip(v.iter())
                .map(|(a, b)| a * b)
                .fold(q.zero(), |acc, t| acc + t);
            assert!(q.is_zero(&dot));
        }
    }
}
