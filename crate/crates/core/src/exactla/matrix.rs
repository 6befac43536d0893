//! Dense matrices over an exact field.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::Zero;
use serde_json::Value;

use crate::error::{Error, Result};

use super::field::{Field, FieldSpec};

/// A dense row-major matrix whose entries all belong to `field`.
#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
    field: FieldSpec,
}

/// Reduced row echelon form together with its rank profile.
#[derive(Clone, PartialEq)]
pub struct Echelon<F> {
    pub reduced: Matrix<F>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Coordinates on a quotient `k^n / span(sub)`.
///
/// `proj` has full row rank and kills `sub`; `section` holds the standard
/// basis vectors that complete `sub` to a basis, so `proj * section = I`.
#[derive(Clone, PartialEq)]
pub struct Quotient<F> {
    pub proj: Matrix<F>,
    pub section: Matrix<F>,
    pub dim: usize,
    pub complement: Vec<usize>,
}

impl<F: Field> Matrix<F> {
    pub fn new(field: FieldSpec, rows: usize, cols: usize, data: Vec<F>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if !F::supports(&field) {
            return Err(Error::InvalidField(format!("scalar type cannot represent {field}")));
        }
        Ok(Matrix { rows, cols, data, field })
    }

    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero_in(&field); rows * cols],
            field,
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = F::one_in(&field);
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<F>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Self::new(field, r, c, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let data = rows
            .iter()
            .flat_map(|row| {
                assert_eq!(row.len(), c, "ragged rows");
                row.iter().map(|&x| F::from_i64(&field, x))
            })
            .collect();
        Matrix { rows: r, cols: c, data, field }
    }

    pub fn column_vector(field: FieldSpec, entries: Vec<F>) -> Self {
        let n = entries.len();
        Matrix { rows: n, cols: 1, data: entries, field }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn data(&self) -> &[F] {
        &self.data
    }

    pub fn into_data(self) -> Vec<F> {
        self.data
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            Err(Error::FieldMismatch(self.field, other.field))
        } else {
            Ok(())
        }
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data, field: self.field }
    }

    pub fn scale(&self, c: &F) -> Self {
        let data = self.data.iter().map(|x| x.clone() * c).collect();
        Matrix { data, ..*self }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                let brow = other.row(k);
                let orow = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (o, b) in orow.iter_mut().zip(brow) {
                    if !b.is_zero() {
                        *o += a.clone() * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if self.shape() != other.shape() {
            return Err(Error::Shape("addition of differently shaped matrices".into()));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.clone() + b)
            .collect();
        Ok(Matrix { data, ..*self })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    /// `[self | other]`
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if self.rows != other.rows {
            return Err(Error::Shape("hstack row mismatch".into()));
        }
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Ok(Matrix { rows: self.rows, cols, data, field: self.field })
    }

    /// `[self ; other]`
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if self.cols != other.cols {
            return Err(Error::Shape("vstack column mismatch".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix { rows: self.rows + other.rows, cols: self.cols, data, field: self.field })
    }

    pub fn hstack_all(field: FieldSpec, rows: usize, parts: &[Matrix<F>]) -> Result<Self> {
        parts
            .iter()
            .try_fold(Self::zeros(field, rows, 0), |acc, m| acc.hstack(m))
    }

    pub fn vstack_all(field: FieldSpec, cols: usize, parts: &[Matrix<F>]) -> Result<Self> {
        parts
            .iter()
            .try_fold(Self::zeros(field, 0, cols), |acc, m| acc.vstack(m))
    }

    pub fn block_diag(field: FieldSpec, blocks: &[Matrix<F>]) -> Self {
        let rows = blocks.iter().map(Matrix::rows).sum();
        let cols = blocks.iter().map(Matrix::cols).sum();
        let mut out = Self::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix<F>) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r0 + i, c0 + j)] = block[(i, j)].clone();
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in r0..r0 + rows {
            data.extend_from_slice(&self.row(i)[c0..c0 + cols]);
        }
        Matrix { rows, cols, data, field: self.field }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            let row = self.row(i);
            data.extend(cols.iter().map(|&j| row[j].clone()));
        }
        Matrix { rows: self.rows, cols: cols.len(), data, field: self.field }
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &i in rows {
            data.extend_from_slice(self.row(i));
        }
        Matrix { rows: rows.len(), cols: self.cols, data, field: self.field }
    }

    /// Reduced row echelon form; pivots are the first nonzero entries in column order.
    pub fn rref(&self) -> Echelon<F> {
        let mut a = self.clone();
        let (rank, pivots) = a.reduce_in_place(self.cols);
        Echelon { reduced: a, rank, pivots }
    }

    /// Gauss-Jordan on the first `limit` columns; later columns ride along.
    fn reduce_in_place(&mut self, limit: usize) -> (usize, Vec<usize>) {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..limit {
            if r == rows {
                break;
            }
            let Some(found) = (r..rows).find(|&i| !self.data[i * cols + c].is_zero()) else {
                continue;
            };
            if found != r {
                for j in 0..cols {
                    self.data.swap(found * cols + j, r * cols + j);
                }
            }
            let inv = self.data[r * cols + c].inverse();
            for j in c..cols {
                let x = &mut self.data[r * cols + j];
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
            let support: Vec<usize> = (c..cols)
                .filter(|&j| !self.data[r * cols + j].is_zero())
                .collect();
            let pivot_row: Vec<F> = support.iter().map(|&j| self.data[r * cols + j].clone()).collect();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = self.data[i * cols + c].clone();
                if factor.is_zero() {
                    continue;
                }
                for (j, pv) in support.iter().zip(&pivot_row) {
                    let t = factor.clone() * pv;
                    self.data[i * cols + j] -= &t;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (r, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Columns form a basis of the null space, one per free column in index order.
    pub fn kernel_basis(&self) -> Self {
        let ech = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !ech.pivots.contains(c)).collect();
        let mut k = Self::zeros(self.field, self.cols, free.len());
        for (n, &fc) in free.iter().enumerate() {
            k[(fc, n)] = F::one_in(&self.field);
            for (row, &pc) in ech.pivots.iter().enumerate() {
                k[(pc, n)] = -ech.reduced[(row, fc)].clone();
            }
        }
        k
    }

    /// A basis of the column space: the pivot columns of `self`.
    pub fn column_space_basis(&self) -> Self {
        let ech = self.rref();
        self.select_columns(&ech.pivots)
    }

    /// Solves `self * X = b`; free variables are set to zero.
    pub fn solve_right(&self, b: &Self) -> Result<Self> {
        self.check_field(b)?;
        if self.rows != b.rows {
            return Err(Error::Shape(format!(
                "solve: {} equations but right-hand side has {} rows",
                self.rows, b.rows
            )));
        }
        let mut aug = self.hstack(b)?;
        let (rank, pivots) = aug.reduce_in_place(self.cols);
        for i in rank..self.rows {
            if aug.row(i)[self.cols..].iter().any(|x| !x.is_zero()) {
                return Err(Error::NoSolution);
            }
        }
        let mut x = Self::zeros(self.field, self.cols, b.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x[(pc, j)] = aug[(row, self.cols + j)].clone();
            }
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Shape("inverse of a non-square matrix".into()));
        }
        let x = self.solve_right(&Self::identity(self.field, self.rows))?;
        if self.try_mul(&x)?.is_identity() {
            Ok(x)
        } else {
            Err(Error::NoSolution)
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Whether every column of `other` lies in the column space of `self`.
    pub fn spans(&self, other: &Self) -> bool {
        if other.cols == 0 {
            return true;
        }
        let r = self.rank();
        match self.hstack(other) {
            Ok(m) => m.rank() == r,
            Err(_) => false,
        }
    }
}

/// Coordinates on `k^ambient / span(sub_basis)`, completing the pivot
/// columns of `sub_basis` with standard basis vectors in index order.
pub fn quotient_coords<F: Field>(
    field: FieldSpec,
    ambient_dim: usize,
    sub_basis: &Matrix<F>,
) -> Result<Quotient<F>> {
    if sub_basis.rows() != ambient_dim {
        return Err(Error::Shape(format!(
            "subspace vectors have length {} but ambient dimension is {ambient_dim}",
            sub_basis.rows()
        )));
    }
    if sub_basis.field() != field {
        return Err(Error::FieldMismatch(sub_basis.field(), field));
    }
    let s = sub_basis.cols();
    let mut aug = sub_basis.hstack(&Matrix::identity(field, ambient_dim))?;
    let (_, pivots) = aug.reduce_in_place(s + ambient_dim);
    let mut proj_rows = Vec::new();
    let mut complement = Vec::new();
    for (row, &pc) in pivots.iter().enumerate() {
        if pc >= s {
            complement.push(pc - s);
            proj_rows.push(row);
        }
    }
    let proj = aug.select_rows(&proj_rows).block(0, s, proj_rows.len(), ambient_dim);
    let section = Matrix::identity(field, ambient_dim).select_columns(&complement);
    Ok(Quotient { dim: complement.len(), proj, section, complement })
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;

    fn index(&self, (i, j): (usize, usize)) -> &F {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<F> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Field> Mul for &Matrix<F> {
    type Output = Matrix<F>;

    fn mul(self, rhs: &Matrix<F>) -> Matrix<F> {
        self.try_mul(rhs).expect("matrix product")
    }
}

impl<F: Field> Add for &Matrix<F> {
    type Output = Matrix<F>;

    fn add(self, rhs: &Matrix<F>) -> Matrix<F> {
        self.try_add(rhs).expect("matrix sum")
    }
}

impl<F: Field> Sub for &Matrix<F> {
    type Output = Matrix<F>;

    fn sub(self, rhs: &Matrix<F>) -> Matrix<F> {
        self.try_sub(rhs).expect("matrix difference")
    }
}

impl<F: Field> Neg for &Matrix<F> {
    type Output = Matrix<F>;

    fn neg(self) -> Matrix<F> {
        let data = self.data.iter().map(|x| -x.clone()).collect();
        Matrix { data, ..*self }
    }
}

impl<F: Field> fmt::Debug for Echelon<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Echelon")
            .field("reduced", &self.reduced)
            .field("rank", &self.rank)
            .field("pivots", &self.pivots)
            .finish()
    }
}

impl<F: Field> fmt::Debug for Quotient<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Quotient")
            .field("proj", &self.proj)
            .field("dim", &self.dim)
            .finish()
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix<{}>{}x{}[", self.field, self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|x| x.render(&self.field)).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl<F: Field> Matrix<F> {
    /// JSON array of arrays of scalar strings.
    pub fn to_json(&self) -> Value {
        Value::Array(
            (0..self.rows)
                .map(|i| {
                    Value::Array(
                        self.row(i)
                            .iter()
                            .map(|x| Value::String(x.render(&self.field)))
                            .collect(),
                    )
                })
                .collect(),
        )
    }

    /// Inverse of [`Matrix::to_json`]; `cols` disambiguates matrices without rows.
    pub fn from_json(field: FieldSpec, value: &Value, rows: usize, cols: usize) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("matrix: {why}"));
        let arr = value.as_array().ok_or_else(|| bad("expected an array of rows"))?;
        if arr.len() != rows {
            return Err(bad(&format!("expected {rows} rows, found {}", arr.len())));
        }
        let mut data = Vec::with_capacity(rows * cols);
        for row in arr {
            let row = row.as_array().ok_or_else(|| bad("row is not an array"))?;
            if row.len() != cols {
                return Err(bad(&format!("expected {cols} columns, found {}", row.len())));
            }
            for x in row {
                let s = match x {
                    Value::String(s) => s.clone(),
                    Value::Number(n) => n.to_string(),
                    _ => return Err(bad("entries must be strings")),
                };
                data.push(F::parse_in(&field, &s)?);
            }
        }
        Matrix::new(field, rows, cols, data)
    }
}
