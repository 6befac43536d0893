//! Projectives of the form `⊕_s C(a_s,-) ⊗_{End(a_s)} V_s`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{quotient_coords, Field, FieldSpec, Matrix};
use crate::lincat::LinCat;

use super::equivariant::equivariant_maps;
use super::module::{Module, ModuleMap};

/// One ledger entry: an object and an `End(obj)`-module `V`, given by the
/// action of each basis element of `End(obj)`.
#[derive(Clone)]
pub struct Summand<F> {
    pub obj: usize,
    pub rho: Vec<Matrix<F>>,
}

impl<F: Field> Summand<F> {
    pub fn dim(&self) -> usize {
        self.rho.first().map(Matrix::rows).unwrap_or(0)
    }
}

/// Coordinates of `(C(a,b) ⊗ V) / relations` for one summand at one object.
#[derive(Clone)]
struct Block<F> {
    proj: Matrix<F>,
    section: Matrix<F>,
}

/// An induced projective with its ledger and its realization as a module.
#[derive(Clone)]
pub struct InducedProjective<F> {
    summands: Vec<Summand<F>>,
    module: Arc<Module<F>>,
    /// `blocks[s][b]`
    blocks: Vec<Vec<Block<F>>>,
    /// `offsets[s][b]`: first coordinate of summand `s` inside `P(b)`.
    offsets: Vec<Vec<usize>>,
}

/// `(L ⊗ I_d) u` for `u` indexed by `i * d + k`.
fn apply_left<F: Field>(l: &Matrix<F>, d: usize, u: &[F]) -> Vec<F> {
    let field = l.field();
    let mut out = vec![F::zero_in(&field); l.rows() * d];
    for (idx, x) in u.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let (i, k) = (idx / d, idx % d);
        for m in 0..l.rows() {
            let c = &l[(m, i)];
            if !c.is_zero() {
                out[m * d + k] += c.clone() * x;
            }
        }
    }
    out
}

/// Quotient by `(f∘x) ⊗ v - f ⊗ x v` when `End(a)` is a group acting freely on
/// the basis of `C(a,b)` by precomposition: one copy of `V` per orbit.
fn free_block<F: Field>(cat: &LinCat<F>, s: &Summand<F>, b: usize) -> Option<Block<F>> {
    let a = s.obj;
    let g = cat.group_basis(a)?;
    let field = cat.field();
    let one = F::one_in(&field);
    let (p, d) = (cat.hom_dim(a, b), s.dim());
    let t = cat.tensor(a, a, b);
    let mut owner: Vec<Option<(usize, usize)>> = vec![None; p];
    let mut reps = Vec::new();
    for f in 0..p {
        if owner[f].is_some() {
            continue;
        }
        let r = reps.len();
        reps.push(f);
        for e in 0..g.order() {
            match t[e][f].as_slice() {
                [(k, c)] if *c == one && owner[*k].is_none() => owner[*k] = Some((r, e)),
                _ => return None,
            }
        }
    }
    let dim = reps.len() * d;
    let mut proj = Matrix::zeros(field, dim, p * d);
    for (f, o) in owner.iter().enumerate() {
        let (r, e) = o.expect("every basis element lies in an orbit");
        proj.set_block(r * d, f * d, &s.rho[e]);
    }
    let mut section = Matrix::zeros(field, p * d, dim);
    for (r, &f) in reps.iter().enumerate() {
        for k in 0..d {
            section[(f * d + k, r * d + k)] = one.clone();
        }
    }
    Some(Block { proj, section })
}

fn general_block<F: Field>(cat: &LinCat<F>, s: &Summand<F>, b: usize) -> Result<Block<F>> {
    let a = s.obj;
    let field = cat.field();
    let (p, d) = (cat.hom_dim(a, b), s.dim());
    let gens = cat.end_generators(a);
    let start = cat.hom(a, a).start;
    let t = cat.tensor(a, a, b);
    let mut rel = Matrix::zeros(field, p * d, gens.len() * p * d);
    let mut col = 0;
    for &x in &gens {
        let xl = x - start;
        let rx = &s.rho[xl];
        for i in 0..p {
            for k in 0..d {
                for (m, c) in &t[xl][i] {
                    rel[(m * d + k, col)] += c;
                }
                for l in 0..d {
                    if !rx[(l, k)].is_zero() {
                        rel[(i * d + l, col)] -= &rx[(l, k)];
                    }
                }
                col += 1;
            }
        }
    }
    let q = quotient_coords(field, p * d, &rel)?;
    Ok(Block { proj: q.proj, section: q.section })
}

impl<F: Field> InducedProjective<F> {
    pub fn new(cat: &Arc<LinCat<F>>, summands: Vec<Summand<F>>) -> Result<Self> {
        let field = cat.field();
        let n = cat.num_objects();
        for s in &summands {
            cat.check_object(s.obj)?;
            if s.rho.len() != cat.hom_dim(s.obj, s.obj) || s.rho.iter().any(|r| r.shape() != (s.dim(), s.dim())) {
                return Err(Error::InvalidModule(format!("bad End({})-module in an induced projective", s.obj)));
            }
        }
        let mut blocks = Vec::with_capacity(summands.len());
        for s in &summands {
            let mut per = Vec::with_capacity(n);
            for b in 0..n {
                if b < s.obj || cat.hom_dim(s.obj, b) == 0 || s.dim() == 0 {
                    per.push(Block {
                        proj: Matrix::zeros(field, 0, cat.hom_dim(s.obj, b) * s.dim()),
                        section: Matrix::zeros(field, cat.hom_dim(s.obj, b) * s.dim(), 0),
                    });
                    continue;
                }
                let blk = match free_block(cat, s, b) {
                    Some(blk) => blk,
                    None => general_block(cat, s, b)?,
                };
                per.push(blk);
            }
            blocks.push(per);
        }
        let mut offsets = vec![vec![0; n]; summands.len()];
        let mut dims = vec![0; n];
        for (si, per) in blocks.iter().enumerate() {
            for b in 0..n {
                offsets[si][b] = dims[b];
                dims[b] += per[b].proj.rows();
            }
        }
        let mut act = Vec::with_capacity(cat.num_morphisms());
        for (h, m) in cat.morphisms().iter().enumerate() {
            let (b, c) = (m.src, m.dst);
            let mut full = Matrix::zeros(field, dims[c], dims[b]);
            for (si, s) in summands.iter().enumerate() {
                let (bb, bc) = (&blocks[si][b], &blocks[si][c]);
                if bb.proj.rows() == 0 || bc.proj.rows() == 0 {
                    continue;
                }
                let l = cat.left_matrix(h, s.obj);
                let d = s.dim();
                let cols: Vec<Vec<F>> = (0..bb.section.cols())
                    .map(|j| apply_left(&l, d, &bb.section.column(j)))
                    .collect();
                let moved = Matrix::from_rows(field, cols)?.transpose();
                full.set_block(offsets[si][c], offsets[si][b], &(&bc.proj * &moved));
            }
            act.push(full);
        }
        let module = Arc::new(Module::assemble(cat.clone(), dims, act)?);
        Ok(InducedProjective { summands, module, blocks, offsets })
    }

    /// `C(a,-)` as an induced projective, `V = End(a)` acting on itself.
    pub fn representable(cat: &Arc<LinCat<F>>, a: usize) -> Result<Self> {
        cat.check_object(a)?;
        let rho = cat.hom(a, a).map(|g| cat.left_matrix(g, a)).collect();
        InducedProjective::new(cat, vec![Summand { obj: a, rho }])
    }

    pub fn module(&self) -> &Arc<Module<F>> {
        &self.module
    }

    pub fn summands(&self) -> &[Summand<F>] {
        &self.summands
    }

    pub fn cat(&self) -> &Arc<LinCat<F>> {
        self.module.cat()
    }

    pub fn field(&self) -> FieldSpec {
        self.module.field()
    }

    /// Highest object carrying a summand.
    pub fn max_object(&self) -> Option<usize> {
        self.summands.iter().filter(|s| s.dim() > 0).map(|s| s.obj).max()
    }

    /// `v ↦ id ⊗ v`, from `V_s` into `P(a_s)`.
    pub fn embedding(&self, s: usize) -> Matrix<F> {
        let sm = &self.summands[s];
        let a = sm.obj;
        let d = sm.dim();
        let field = self.field();
        let id = self.cat().identity(a);
        let mut u = Matrix::zeros(field, id.len() * d, d);
        for (i, c) in id.iter().enumerate() {
            for k in 0..d {
                u[(i * d + k, k)] = c.clone();
            }
        }
        let local = &self.blocks[s][a].proj * &u;
        let mut out = Matrix::zeros(field, self.module.dim(a), d);
        out.set_block(self.offsets[s][a], 0, &local);
        out
    }

    /// Components of the map `P -> N` that is `ψ: V_s -> N(a_s)` on summand `s`
    /// and zero on the others.
    pub fn extend(&self, s: usize, n: &Module<F>, psi: &Matrix<F>) -> Vec<Matrix<F>> {
        (0..self.cat().num_objects()).map(|b| self.extend_at(s, n, psi, b)).collect()
    }

    /// One component of [`InducedProjective::extend`].
    pub fn extend_at(&self, s: usize, n: &Module<F>, psi: &Matrix<F>, b: usize) -> Matrix<F> {
        let a = self.summands[s].obj;
        let field = self.field();
        let mut out = Matrix::zeros(field, n.dim(b), self.module.dim(b));
        let blk = &self.blocks[s][b];
        if blk.proj.rows() > 0 && n.dim(b) > 0 {
            let parts: Vec<Matrix<F>> = self.cat().hom(a, b).map(|f| n.act(f) * psi).collect();
            let wide = Matrix::hstack_all(field, n.dim(b), &parts).expect("same height");
            out.set_block(0, self.offsets[s][b], &(&wide * &blk.section));
        }
        out
    }

    /// The map `P -> N` given by one equivariant map per summand.
    pub fn map_to(&self, n: &Arc<Module<F>>, psis: &[Matrix<F>]) -> ModuleMap<F> {
        let mut out = ModuleMap::zero(self.module.clone(), n.clone());
        for (s, psi) in psis.iter().enumerate() {
            let part = ModuleMap::raw(self.module.clone(), n.clone(), self.extend(s, n, psi));
            out = out.add(&part);
        }
        out
    }

    /// A basis of `Hom(P, N)`: pairs `(summand, ψ)` with `ψ` running over
    /// `Hom_{End(a_s)}(V_s, N(a_s))`.
    pub fn hom_generators(&self, n: &Module<F>) -> Vec<(usize, Matrix<F>)> {
        let mut out = Vec::new();
        for (s, sm) in self.summands.iter().enumerate() {
            let rho_n = n.end_action(sm.obj);
            for psi in equivariant_maps(self.cat(), sm.obj, &sm.rho, &rho_n) {
                out.push((s, psi));
            }
        }
        out
    }

    /// `Hom(P, N)` as module maps, in the order of [`InducedProjective::hom_generators`].
    pub fn hom_basis(&self, n: &Arc<Module<F>>) -> Vec<ModuleMap<F>> {
        self.hom_generators(n)
            .into_iter()
            .map(|(s, psi)| ModuleMap::raw(self.module.clone(), n.clone(), self.extend(s, n, &psi)))
            .collect()
    }
}
