//! Incremental independence testing.

use super::field::{Field, FieldSpec};
use super::matrix::Matrix;

/// Accumulates vectors, keeping those that enlarge the span.
#[derive(Clone)]
pub struct SpanBuilder<F> {
    field: FieldSpec,
    len: usize,
    reduced: Vec<Vec<F>>,
    pivots: Vec<usize>,
    kept: Vec<Vec<F>>,
}

impl<F: Field> SpanBuilder<F> {
    pub fn new(field: FieldSpec, len: usize) -> Self {
        SpanBuilder { field, len, reduced: Vec::new(), pivots: Vec::new(), kept: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.kept.len()
    }

    fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut w = v.to_vec();
        for (row, &p) in self.reduced.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let c = w[p].clone();
            for (x, r) in w.iter_mut().zip(row).skip(p) {
                if !r.is_zero() {
                    *x -= c.clone() * r;
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Adds `v` if it is independent of what is kept; reports whether it was.
    pub fn push(&mut self, v: Vec<F>) -> bool {
        assert_eq!(v.len(), self.len, "vector length");
        let mut w = self.reduce(&v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].inverse();
        for x in w.iter_mut().skip(p) {
            *x *= &inv;
        }
        self.reduced.push(w);
        self.pivots.push(p);
        self.kept.push(v);
        true
    }

    /// The kept vectors as columns.
    pub fn basis(&self) -> Matrix<F> {
        let mut m = Matrix::zeros(self.field, self.len, self.kept.len());
        for (j, v) in self.kept.iter().enumerate() {
            for (i, x) in v.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn into_vectors(self) -> Vec<Vec<F>> {
        self.kept
    }
}
