//! Finite-dimensional associative algebras given by structure constants.

use crate::error::{Error, Result};
use crate::exactla::{Field, FieldSpec, Matrix};

use super::Terms;

/// An algebra with basis `e_0..e_{d-1}`; `table[i][j]` expands `e_i e_j`.
#[derive(Clone, Debug)]
pub struct Algebra<F> {
    field: FieldSpec,
    dim: usize,
    table: Vec<Vec<Terms<F>>>,
    unit: Vec<F>,
}

impl<F: Field> Algebra<F> {
    pub fn new(field: FieldSpec, dim: usize, table: Vec<Vec<Terms<F>>>, unit: Vec<F>) -> Self {
        Algebra { field, dim, table, unit }
    }

    /// Builds the table from dense product vectors `products[i][j] = e_i e_j`.
    pub fn from_dense(field: FieldSpec, products: Vec<Vec<Vec<F>>>, unit: Vec<F>) -> Self {
        let dim = unit.len();
        let table = products
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|v| {
                        v.into_iter()
                            .enumerate()
                            .filter(|(_, c)| !c.is_zero())
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Algebra { field, dim, table, unit }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    pub fn product(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero_in(&self.field); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let s = xi.clone() * yj;
                for (k, c) in &self.table[i][j] {
                    out[*k] += s.clone() * c;
                }
            }
        }
        out
    }

    /// Trace form `T[i][j] = tr(L_{e_i} L_{e_j})`.
    pub fn trace_form(&self) -> Matrix<F> {
        let d = self.dim;
        let f = self.field;
        // (L_i)_{k,l}: coefficient of e_k in e_i e_l
        let mut t = Matrix::zeros(f, d, d);
        for i in 0..d {
            for j in i..d {
                let mut acc = F::zero_in(&f);
                for l in 0..d {
                    // sum over k of (L_i)_{l,k} (L_j)_{k,l}
                    for (k, cj) in &self.table[j][l] {
                        for (m, ci) in &self.table[i][*k] {
                            if *m == l {
                                acc += ci.clone() * cj;
                            }
                        }
                    }
                }
                t[(i, j)] = acc.clone();
                t[(j, i)] = acc;
            }
        }
        t
    }

    /// Basis (as columns) of the Jacobson radical, by Dickson's trace-form criterion.
    ///
    /// Valid in characteristic 0 and in characteristic `p > dim`.
    pub fn radical(&self) -> Result<Matrix<F>> {
        let p = self.field.characteristic();
        if p != 0 && p <= self.dim as u64 {
            return Err(Error::RadicalNotComputable { dim: self.dim, p });
        }
        if self.dim == 0 {
            return Ok(Matrix::zeros(self.field, 0, 0));
        }
        Ok(self.trace_form().kernel_basis())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Rational;
    use num_traits::Zero;

    fn r(n: i64) -> Rational {
        Rational::from_i64(&FieldSpec::Rational, n)
    }

    #[test]
    fn group_algebra_of_order_two_is_semisimple() {
        // e_0 = 1, e_1 = s, s^2 = 1
        let table = vec![
            vec![vec![(0, r(1))], vec![(1, r(1))]],
            vec![vec![(1, r(1))], vec![(0, r(1))]],
        ];
        let a = Algebra::new(FieldSpec::Rational, 2, table, vec![r(1), r(0)]);
        assert_eq!(a.radical().unwrap().cols(), 0);
    }

    #[test]
    fn upper_triangular_has_one_dimensional_radical() {
        // e11, e12, e22 with matrix-unit products
        let z = Vec::new;
        let table = vec![
            vec![vec![(0, r(1))], vec![(1, r(1))], z()],
            vec![z(), z(), vec![(1, r(1))]],
            vec![z(), z(), vec![(2, r(1))]],
        ];
        let a = Algebra::new(FieldSpec::Rational, 3, table, vec![r(1), r(0), r(1)]);
        let j = a.radical().unwrap();
        assert_eq!(j.cols(), 1);
        assert!(j[(0, 0)].is_zero() && j[(2, 0)].is_zero());
    }

    #[test]
    fn small_characteristic_is_refused() {
        let f = FieldSpec::Prime { p: 2 };
        let one = crate::exactla::Fp::new(1, 2);
        let table = vec![
            vec![vec![(0, one)], vec![(1, one)]],
            vec![vec![(1, one)], vec![(0, one)]],
        ];
        let a = Algebra::new(f, 2, table, vec![one, crate::exactla::Fp::new(0, 2)]);
        assert_eq!(a.radical(), Err(Error::RadicalNotComputable { dim: 2, p: 2 }));
    }
}
