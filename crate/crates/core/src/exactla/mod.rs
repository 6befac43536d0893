//! Exact scalar arithmetic over Q and F_p and dense linear algebra on top of it.
//!
//! Everything here is pure: matrices are values, elimination is deterministic
//! (pivot on the first nonzero entry in column order), and no floating point
//! is involved anywhere.

mod field;
mod fp;
mod matrix;
mod poly;
mod span;

pub use field::{Field, FieldSpec, Rational, MAX_PRIME};
pub use fp::Fp;
pub use matrix::{quotient_coords, Echelon, Matrix, Quotient};
pub use poly::{minimal_polynomial, Poly};
pub use span::SpanBuilder;

/// Coordinates with respect to a fixed family of independent vectors.
///
/// The family is given as the columns of `basis`; coordinates of a vector in
/// its span are read off a square invertible row selection.
#[derive(Clone)]
pub struct Coordinates<F> {
    basis: Matrix<F>,
    rows: Vec<usize>,
    inverse: Matrix<F>,
}

impl<F: Field> Coordinates<F> {
    /// `basis` must have independent columns.
    pub fn new(basis: Matrix<F>) -> Self {
        let field = basis.field();
        let pivot_rows = basis.transpose().rref().pivots;
        debug_assert_eq!(pivot_rows.len(), basis.cols(), "basis columns are dependent");
        let square = basis.select_rows(&pivot_rows);
        let inverse = if square.rows() == 0 {
            Matrix::zeros(field, 0, 0)
        } else {
            square.inverse().expect("independent columns give an invertible selection")
        };
        Coordinates { basis, rows: pivot_rows, inverse }
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    /// Coordinates of each column of `vectors`; `None` if some column leaves the span.
    pub fn solve(&self, vectors: &Matrix<F>) -> Option<Matrix<F>> {
        let x = &self.inverse * &vectors.select_rows(&self.rows);
        if &self.basis * &x == *vectors {
            Some(x)
        } else {
            None
        }
    }

    /// Coordinates of a single vector.
    pub fn coords(&self, v: &[F]) -> Option<Vec<F>> {
        let m = Matrix::column_vector(self.basis.field(), v.to_vec());
        self.solve(&m).map(|x| x.column(0))
    }
}

#[cfg(test)]
mod tests;
