//! `End(a)`-equivariant linear maps between two representations.
//!
//! Representations are given by one matrix per basis element of `End(a)`,
//! in local order. When that basis is a group of invertible order the
//! Reynolds operator is used; otherwise the commutation equations for the
//! generators of `End(a)` are solved directly.

use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, SpanBuilder};
use crate::lincat::{GroupBasis, LinCat};

fn reshape<F: Field>(field: crate::exactla::FieldSpec, rows: usize, cols: usize, v: Vec<F>) -> Matrix<F> {
    Matrix::new(field, rows, cols, v).expect("vector length matches shape")
}

/// `X ↦ |G|^{-1} Σ_g ρ_W(g) X ρ_V(g^{-1})`.
pub(crate) fn average<F: Field>(g: &GroupBasis, rho_v: &[Matrix<F>], rho_w: &[Matrix<F>], x: &Matrix<F>) -> Matrix<F> {
    let field = x.field();
    let mut acc = Matrix::zeros(field, x.rows(), x.cols());
    for e in 0..g.order() {
        acc = &acc + &(&(&rho_w[e] * x) * &rho_v[g.inverse[e]]);
    }
    let n = F::from_i64(&field, g.order() as i64);
    acc.scale(&n.inverse())
}

/// Image of the matrix unit `E_{ij}` under averaging, row-major.
fn average_unit<F: Field>(g: &GroupBasis, rho_v: &[Matrix<F>], rho_w: &[Matrix<F>], i: usize, j: usize) -> Vec<F> {
    let (dw, dv) = (rho_w[0].rows(), rho_v[0].rows());
    let field = rho_w[0].field();
    let mut out = vec![F::zero_in(&field); dw * dv];
    for e in 0..g.order() {
        let w = &rho_w[e];
        let v = &rho_v[g.inverse[e]];
        for r in 0..dw {
            let a = &w[(r, i)];
            if a.is_zero() {
                continue;
            }
            for (c, b) in v.row(j).iter().enumerate() {
                if !b.is_zero() {
                    out[r * dv + c] += a.clone() * b;
                }
            }
        }
    }
    let n = F::from_i64(&field, g.order() as i64).inverse();
    for x in &mut out {
        *x *= &n;
    }
    out
}

/// Dimension of the space of invariants, when the field pins it down.
fn expected_dim<F: Field>(g: &GroupBasis, rho_v: &[Matrix<F>], rho_w: &[Matrix<F>]) -> Option<usize> {
    let field = rho_w[0].field();
    let (dw, dv) = (rho_w[0].rows(), rho_v[0].rows());
    let p = field.characteristic();
    if p != 0 && p <= (dw * dv) as u64 {
        return None;
    }
    let trace = |m: &Matrix<F>| (0..m.rows()).fold(F::zero_in(&field), |s, i| s + &m[(i, i)]);
    let mut t = F::zero_in(&field);
    for e in 0..g.order() {
        t += trace(&rho_w[e]) * trace(&rho_v[g.inverse[e]]);
    }
    t *= F::from_i64(&field, g.order() as i64).inverse();
    t.render(&field).parse().ok()
}

/// Commutation equations `ρ_W(x) X - X ρ_V(x) = 0` over the generators of `End(a)`.
fn commutation_rows<F: Field>(cat: &LinCat<F>, a: usize, rho_v: &[Matrix<F>], rho_w: &[Matrix<F>]) -> Matrix<F> {
    let field = cat.field();
    let (dw, dv) = (rho_w[0].rows(), rho_v[0].rows());
    let gens = cat.end_generators(a);
    let start = cat.hom(a, a).start;
    let mut m = Matrix::zeros(field, gens.len() * dw * dv, dw * dv);
    for (t, &x) in gens.iter().enumerate() {
        let (w, v) = (&rho_w[x - start], &rho_v[x - start]);
        for i in 0..dw {
            for j in 0..dv {
                let row = (t * dw + i) * dv + j;
                for l in 0..dw {
                    if !w[(i, l)].is_zero() {
                        m[(row, l * dv + j)] += &w[(i, l)];
                    }
                }
                for l in 0..dv {
                    if !v[(l, j)].is_zero() {
                        m[(row, i * dv + l)] -= &v[(l, j)];
                    }
                }
            }
        }
    }
    m
}

/// A basis of `Hom_{End(a)}(V, W)`; each map is a `dim W x dim V` matrix.
pub fn equivariant_maps<F: Field>(cat: &LinCat<F>, a: usize, rho_v: &[Matrix<F>], rho_w: &[Matrix<F>]) -> Vec<Matrix<F>> {
    let field = cat.field();
    let (Some(v0), Some(w0)) = (rho_v.first(), rho_w.first()) else {
        return Vec::new();
    };
    let (dw, dv) = (w0.rows(), v0.rows());
    if dw == 0 || dv == 0 {
        return Vec::new();
    }
    if cat.hom_dim(a, a) == 1 {
        return (0..dw * dv)
            .map(|k| {
                let mut m = Matrix::zeros(field, dw, dv);
                m[(k / dv, k % dv)] = F::one_in(&field);
                m
            })
            .collect();
    }
    if let Some(g) = cat.averaging_group(a) {
        let target = expected_dim(&g, rho_v, rho_w);
        let mut span = SpanBuilder::new(field, dw * dv);
        'outer: for i in 0..dw {
            for j in 0..dv {
                if target == Some(span.rank()) {
                    break 'outer;
                }
                span.push(average_unit(&g, rho_v, rho_w, i, j));
            }
        }
        return span.into_vectors().into_iter().map(|v| reshape(field, dw, dv, v)).collect();
    }
    let k = commutation_rows(cat, a, rho_v, rho_w).kernel_basis();
    (0..k.cols()).map(|c| reshape(field, dw, dv, k.column(c))).collect()
}

/// An equivariant `X: V -> W` with `q X = target`, where `q: W -> U` and
/// `target: V -> U` are equivariant.
pub fn equivariant_lift<F: Field>(
    cat: &LinCat<F>,
    a: usize,
    rho_v: &[Matrix<F>],
    rho_w: &[Matrix<F>],
    q: &Matrix<F>,
    target: &Matrix<F>,
) -> Result<Matrix<F>> {
    let field = cat.field();
    let (dw, dv) = (q.cols(), target.cols());
    if dw == 0 || dv == 0 {
        return Ok(Matrix::zeros(field, dw, dv));
    }
    if let Some(g) = cat.averaging_group(a) {
        let x0 = q.solve_right(target)?;
        return Ok(average(&g, rho_v, rho_w, &x0));
    }
    if cat.hom_dim(a, a) == 1 {
        return q.solve_right(target);
    }
    // q X = target, row-major unknowns
    let du = q.rows();
    let mut lhs = Matrix::zeros(field, du * dv, dw * dv);
    let mut rhs = Matrix::zeros(field, du * dv, 1);
    for u in 0..du {
        for j in 0..dv {
            for i in 0..dw {
                lhs[(u * dv + j, i * dv + j)] = q[(u, i)].clone();
            }
            rhs[(u * dv + j, 0)] = target[(u, j)].clone();
        }
    }
    let comm = commutation_rows(cat, a, rho_v, rho_w);
    let zeros = Matrix::zeros(field, comm.rows(), 1);
    let system = lhs.vstack(&comm)?;
    let x = system
        .solve_right(&rhs.vstack(&zeros)?)
        .map_err(|_| Error::Internal("no equivariant lift exists".into()))?;
    Ok(reshape(field, dw, dv, x.column(0)))
}
