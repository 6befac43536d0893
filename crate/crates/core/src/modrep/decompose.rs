//! Endomorphism algebras, splitting into indecomposables, isomorphism search.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{minimal_polynomial, Field, Matrix, Poly};
use crate::lincat::Algebra;

use super::construct::kernel;
use super::hom::{hom_space, HomSpace};
use super::module::{Module, ModuleMap};

/// Random combinations tried after the basis elements.
pub const DEFAULT_BUDGET: usize = 24;

const SEED: u64 = 0x00a5_7e11;

/// `End(M)` with its structure constants and Jacobson radical.
pub struct EndAlgebra<F> {
    pub space: HomSpace<F>,
    pub algebra: Algebra<F>,
    /// Columns are coordinates of a basis of the radical.
    pub radical: Matrix<F>,
}

impl<F: Field> EndAlgebra<F> {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// `dim End(M) / J`.
    pub fn top_dim(&self) -> usize {
        self.space.dim() - self.radical.cols()
    }

    pub fn radical_maps(&self) -> Vec<ModuleMap<F>> {
        (0..self.radical.cols())
            .map(|j| self.space.combination(&self.radical.column(j)))
            .collect()
    }

    /// Whether a combination of the basis lies in the radical.
    pub fn in_radical(&self, coeffs: &[F]) -> bool {
        let v = Matrix::column_vector(self.space.src().field(), coeffs.to_vec());
        self.radical.spans(&v)
    }
}

pub fn end_algebra<F: Field>(m: &Arc<Module<F>>) -> Result<EndAlgebra<F>> {
    let space = hom_space(m, m)?;
    let field = m.field();
    let basis = space.basis();
    let mut products = Vec::with_capacity(basis.len());
    for x in basis {
        let mut row = Vec::with_capacity(basis.len());
        for y in basis {
            let c = space
                .coords(&x.after(y))
                .ok_or_else(|| Error::Internal("End(M) is not closed".into()))?;
            row.push(c);
        }
        products.push(row);
    }
    let unit = space
        .coords(&ModuleMap::identity(m.clone()))
        .unwrap_or_else(|| vec![F::zero_in(&field); 0]);
    let algebra = Algebra::from_dense(field, products, unit);
    let radical = algebra.radical()?;
    Ok(EndAlgebra { space, algebra, radical })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Indecomposable,
    /// No splitting found; `End/J` has this dimension.
    ProbablyIndecomposable(usize),
}

#[derive(Clone)]
pub struct Piece<F> {
    pub module: Arc<Module<F>>,
    pub multiplicity: usize,
    pub verdict: Verdict,
}

fn eval_map<F: Field>(p: &Poly<F>, f: &ModuleMap<F>) -> ModuleMap<F> {
    let comps = f.comps().iter().map(|c| p.eval_matrix(c)).collect();
    ModuleMap::raw(f.src().clone(), f.dst().clone(), comps)
}

fn block_matrix<F: Field>(f: &ModuleMap<F>) -> Matrix<F> {
    Matrix::block_diag(f.src().field(), f.comps())
}

/// Splits `m = f g` with `f, g` coprime and nonconstant, `f` collecting every
/// irreducible factor of `h`.
fn primary_split<F: Field>(m: &Poly<F>, h: &Poly<F>) -> Option<(Poly<F>, Poly<F>)> {
    let deg = m.degree()?;
    if h.degree().unwrap_or(0) == 0 {
        return None;
    }
    let field = m.field();
    let mut power = Poly::constant(field, F::one_in(&field));
    for _ in 0..deg {
        power = power.mul(h);
    }
    let f = m.gcd(&power).monic();
    let fd = f.degree()?;
    if fd == 0 || fd == deg {
        return None;
    }
    let (g, r) = m.div_rem(&f);
    debug_assert!(r.is_zero());
    Some((f, g.monic()))
}

/// Coprime factorizations of a minimal polynomial worth trying.
fn factorizations<F: Field>(m: &Poly<F>) -> Vec<(Poly<F>, Poly<F>)> {
    let field = m.field();
    let mut out = Vec::new();
    for r in m.roots() {
        let h = Poly::linear(field, -r);
        if let Some(s) = primary_split(m, &h) {
            out.push(s);
            return out;
        }
    }
    // roots of unity that are not in the field
    for n in 2..=12usize {
        let mut c = vec![F::zero_in(&field); n + 1];
        c[0] = -F::one_in(&field);
        c[n] = F::one_in(&field);
        let h = m.gcd(&Poly::new(field, c));
        if let Some(s) = primary_split(m, &h) {
            out.push(s);
            return out;
        }
    }
    // a square-free part that is not the whole polynomial
    let d = m.gcd(&m.derivative());
    if let Some(s) = primary_split(m, &d) {
        out.push(s);
    }
    out
}

/// Tries to split `m` as a direct sum of two nonzero submodules.
fn split_once<F: Field>(m: &Arc<Module<F>>, end: &EndAlgebra<F>, budget: usize) -> Result<Option<(Arc<Module<F>>, Arc<Module<F>>)>> {
    let field = m.field();
    let dim = end.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut candidates: Vec<Vec<F>> = (0..dim)
        .map(|i| {
            let mut v = vec![F::zero_in(&field); dim];
            v[i] = F::one_in(&field);
            v
        })
        .collect();
    for _ in 0..budget {
        candidates.push((0..dim).map(|_| F::from_i64(&field, rng.gen_range(-3..=3))).collect());
    }
    for c in candidates {
        let x = end.space.combination(&c);
        let mp = minimal_polynomial(&block_matrix(&x));
        if let Some((f, g)) = factorizations(&mp).into_iter().next() {
            let (a, _) = kernel(&eval_map(&f, &x))?;
            let (b, _) = kernel(&eval_map(&g, &x))?;
            if !a.is_zero() && !b.is_zero() {
                return Ok(Some((a, b)));
            }
        }
    }
    Ok(None)
}

fn split_all<F: Field>(m: &Arc<Module<F>>, budget: usize, out: &mut Vec<(Arc<Module<F>>, Verdict)>) -> Result<()> {
    if m.is_zero() {
        return Ok(());
    }
    let end = end_algebra(m)?;
    if end.top_dim() == 1 {
        out.push((m.clone(), Verdict::Indecomposable));
        return Ok(());
    }
    match split_once(m, &end, budget)? {
        Some((a, b)) => {
            split_all(&a, budget, out)?;
            split_all(&b, budget, out)
        }
        None => {
            out.push((m.clone(), Verdict::ProbablyIndecomposable(end.top_dim())));
            Ok(())
        }
    }
}

/// Splits `m` into summands, grouping isomorphic ones.
pub fn decompose<F: Field>(m: &Arc<Module<F>>, budget: usize) -> Result<Vec<Piece<F>>> {
    let mut raw = Vec::new();
    split_all(m, budget, &mut raw)?;
    let mut pieces: Vec<Piece<F>> = Vec::new();
    'next: for (module, verdict) in raw {
        for p in pieces.iter_mut() {
            if let IsoVerdict::Isomorphic(_) = find_iso(&p.module, &module, budget)? {
                p.multiplicity += 1;
                continue 'next;
            }
        }
        pieces.push(Piece { module, multiplicity: 1, verdict });
    }
    Ok(pieces)
}

/// Whether `m` is indecomposable with local endomorphism ring.
pub fn is_indecomposable<F: Field>(m: &Arc<Module<F>>) -> Result<bool> {
    Ok(!m.is_zero() && end_algebra(m)?.top_dim() == 1)
}

#[derive(Clone)]
pub enum IsoVerdict<F> {
    Isomorphic(ModuleMap<F>),
    NotIsomorphic,
    /// No isomorphism found within the budget.
    Undetermined,
}

impl<F> IsoVerdict<F> {
    pub fn is_iso(&self) -> bool {
        matches!(self, IsoVerdict::Isomorphic(_))
    }
}

/// Looks for an isomorphism among basis elements and random combinations of
/// `Hom(M, N)`.
pub fn find_iso<F: Field>(m: &Arc<Module<F>>, n: &Arc<Module<F>>, budget: usize) -> Result<IsoVerdict<F>> {
    m.cat().ensure_same(n.cat())?;
    if m.dims() != n.dims() {
        return Ok(IsoVerdict::NotIsomorphic);
    }
    if m.is_zero() {
        return Ok(IsoVerdict::Isomorphic(ModuleMap::zero(m.clone(), n.clone())));
    }
    let h = hom_space(m, n)?;
    if h.dim() == 0 || h.dim() != hom_space(m, m)?.dim() {
        return Ok(IsoVerdict::NotIsomorphic);
    }
    for b in h.basis() {
        if b.is_iso() {
            return Ok(IsoVerdict::Isomorphic(b.clone()));
        }
    }
    let field = m.field();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..budget.max(1) {
        let c: Vec<F> = (0..h.dim()).map(|_| F::from_i64(&field, rng.gen_range(-3..=3))).collect();
        let f = h.combination(&c);
        if f.is_iso() {
            return Ok(IsoVerdict::Isomorphic(f));
        }
    }
    Ok(IsoVerdict::Undetermined)
}
