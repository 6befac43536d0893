//! Univariate polynomials, just enough to split endomorphisms.

use num_traits::Zero;

use super::field::{Field, FieldSpec};
use super::matrix::Matrix;

/// Coefficients stored lowest degree first, with no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<F> {
    coeffs: Vec<F>,
    field: FieldSpec,
}

impl<F: Field> Poly<F> {
    pub fn new(field: FieldSpec, mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs, field }
    }

    pub fn constant(field: FieldSpec, c: F) -> Self {
        Self::new(field, vec![c])
    }

    /// `x - c`
    pub fn linear(field: FieldSpec, c: F) -> Self {
        Self::new(field, vec![-c, F::one_in(&field)])
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inverse();
                Self::new(self.field, self.coeffs.iter().map(|c| c.clone() * &inv).collect())
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = F::zero_in(&self.field);
        let c = (0..n)
            .map(|i| {
                self.coeffs.get(i).unwrap_or(&z).clone() + other.coeffs.get(i).unwrap_or(&z)
            })
            .collect();
        Self::new(self.field, c)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.field, self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(self.field, vec![]);
        }
        let mut c = vec![F::zero_in(&self.field); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a.clone() * b;
            }
        }
        Self::new(self.field, c)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.lead().unwrap().inverse();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![F::zero_in(&self.field); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let q = rem.last().unwrap().clone() * &lead_inv;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                let t = q.clone() * d;
                rem[k + i] -= &t;
            }
            quot[k] = q;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Self::new(self.field, quot), Self::new(self.field, rem))
    }

    pub fn derivative(&self) -> Self {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, a)| a.clone() * &F::from_i64(&self.field, i as i64))
            .collect();
        Self::new(self.field, c)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let f = self.field;
        let one = Self::constant(f, F::one_in(&f));
        let zero = Self::new(f, vec![]);
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (one.clone(), zero.clone());
        let (mut t0, mut t1) = (zero, one);
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = r0.lead().map(|l| l.inverse()).unwrap_or_else(|| F::one_in(&f));
        let c = Self::constant(f, inv);
        (r0.mul(&c), s0.mul(&c), t0.mul(&c))
    }

    /// `self(m)` by Horner's rule.
    pub fn eval_matrix(&self, m: &Matrix<F>) -> Matrix<F> {
        let n = m.rows();
        let mut acc = Matrix::zeros(self.field, n, n);
        let id = Matrix::identity(self.field, n);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * m) + &id.scale(c);
        }
        acc
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero_in(&self.field);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

impl<F: Field> Poly<F> {
    /// Roots in the field that [`Field::root_candidates`] can find, without repetition.
    pub fn roots(&self) -> Vec<F> {
        let mut out: Vec<F> = Vec::new();
        for c in F::root_candidates(&self.coeffs, &self.field) {
            if self.eval(&c).is_zero() && !out.contains(&c) {
                out.push(c);
            }
        }
        out
    }
}

/// Minimal polynomial of a square matrix, via the first linear dependence
/// among its powers.
pub fn minimal_polynomial<F: Field>(m: &Matrix<F>) -> Poly<F> {
    let field = m.field();
    let n = m.rows();
    let mut powers: Vec<Vec<F>> = vec![Matrix::identity(field, n).into_data()];
    let mut current = Matrix::identity(field, n);
    loop {
        current = &current * m;
        let candidate = current.data().to_vec();
        let k = powers.len();
        // columns: I, m, ..., m^{k-1}; right-hand side m^k
        let mut cols = Vec::with_capacity(n * n * k);
        for row in 0..n * n {
            for p in &powers {
                cols.push(p[row].clone());
            }
        }
        let a = Matrix::new(field, n * n, k, cols).expect("power matrix");
        let b = Matrix::column_vector(field, candidate.clone());
        if let Ok(x) = a.solve_right(&b) {
            let mut coeffs: Vec<F> = x.column(0).into_iter().map(|c| -c).collect();
            coeffs.push(F::one_in(&field));
            return Poly::new(field, coeffs);
        }
        powers.push(candidate);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Rational;

    fn q(c: &[i64]) -> Poly<Rational> {
        let f = FieldSpec::Rational;
        Poly::new(f, c.iter().map(|&x| Rational::from_i64(&f, x)).collect())
    }

    #[test]
    fn division_and_gcd() {
        // (x-1)(x-2) and (x-1)(x+3)
        let a = q(&[2, -3, 1]);
        let b = q(&[-3, 2, 1]);
        assert_eq!(a.gcd(&b), q(&[-1, 1]));
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    #[test]
    fn minimal_polynomial_of_projection() {
        let f = FieldSpec::Rational;
        let m = Matrix::<Rational>::from_i64(f, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]]);
        assert_eq!(minimal_polynomial(&m), q(&[0, -1, 1]));
    }
}
