//! Star duals of induced projectives, the transpose, and the translations.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{Coordinates, Field, Matrix};
use crate::modrep::{cokernel, is_fd, minimal_presentation, equivariant_maps, FdVerdict, InducedProjective, Module, ModuleMap, Presentation};

/// `P* = Hom(P, C)` as a module over the opposite category, with the
/// equivariant bases used as coordinates.
pub struct StarDual<F> {
    pub module: Arc<Module<F>>,
    /// `bases[s][x]`: a basis of `Hom_{End(a_s)}(V_s, C(x, a_s))`.
    bases: Vec<Vec<Vec<Matrix<F>>>>,
    coords: Vec<Vec<Coordinates<F>>>,
    /// `offsets[s][x]` inside `P*(x)`, indexed by objects of the original category.
    offsets: Vec<Vec<usize>>,
}

fn flat<F: Field>(field: crate::FieldSpec, maps: &[Matrix<F>], len: usize) -> Matrix<F> {
    let mut out = Matrix::zeros(field, len, maps.len());
    for (j, m) in maps.iter().enumerate() {
        for (i, x) in m.data().iter().enumerate() {
            out[(i, j)] = x.clone();
        }
    }
    out
}

impl<F: Field> StarDual<F> {
    pub fn new(p: &InducedProjective<F>) -> Result<Self> {
        let cat = p.cat();
        let field = cat.field();
        let n = cat.num_objects();
        let l = cat.top();
        let mut bases = Vec::new();
        let mut coords = Vec::new();
        for s in p.summands() {
            let a = s.obj;
            let mut per = Vec::with_capacity(n);
            let mut per_c = Vec::with_capacity(n);
            for x in 0..n {
                let b = if x <= a && cat.hom_dim(x, a) > 0 {
                    let rho_w: Vec<Matrix<F>> = cat.hom(a, a).map(|e| cat.left_matrix(e, x)).collect();
                    equivariant_maps(cat, a, &s.rho, &rho_w)
                } else {
                    Vec::new()
                };
                per_c.push(Coordinates::new(flat(field, &b, cat.hom_dim(x, a) * s.dim())));
                per.push(b);
            }
            bases.push(per);
            coords.push(per_c);
        }
        let mut offsets = vec![vec![0; n]; bases.len()];
        let mut dims = vec![0; n];
        for (si, per) in bases.iter().enumerate() {
            for x in 0..n {
                offsets[si][x] = dims[x];
                dims[x] += per[x].len();
            }
        }
        let op = cat.opposite();
        let mut act = vec![Matrix::zeros(field, 0, 0); cat.num_morphisms()];
        for (h, mo) in cat.morphisms().iter().enumerate() {
            // h: x' -> x acts as P*(x) -> P*(x'), ψ ↦ ψ∘h
            let (xp, x) = (mo.src, mo.dst);
            let mut m = Matrix::zeros(field, dims[xp], dims[x]);
            for (si, s) in p.summands().iter().enumerate() {
                if bases[si][x].is_empty() || bases[si][xp].is_empty() {
                    continue;
                }
                let r = cat.right_matrix(h, s.obj);
                for (k, psi) in bases[si][x].iter().enumerate() {
                    let moved = &r * psi;
                    let c = coords[si][xp]
                        .coords(moved.data())
                        .ok_or_else(|| Error::Internal("star dual is not closed under precomposition".into()))?;
                    for (i, v) in c.into_iter().enumerate() {
                        m[(offsets[si][xp] + i, offsets[si][x] + k)] = v;
                    }
                }
            }
            act[cat.op_index(h)] = m;
        }
        let op_dims = (0..n).map(|o| dims[l - o]).collect();
        let module = Arc::new(Module::assemble(op, op_dims, act)?);
        Ok(StarDual { module, bases, coords, offsets })
    }
}

/// `f*: Q* -> P*` for `f: P -> Q`, precomposition with `f`.
fn star_map<F: Field>(
    f: &ModuleMap<F>,
    p: &InducedProjective<F>,
    q: &InducedProjective<F>,
    p_star: &StarDual<F>,
    q_star: &StarDual<F>,
) -> Result<ModuleMap<F>> {
    let cat = p.cat();
    let field = cat.field();
    let n = cat.num_objects();
    let l = cat.top();
    let mut comps = vec![Matrix::zeros(field, 0, 0); n];
    for x in 0..n {
        let rows = p_star.module.dim(l - x);
        let cols = q_star.module.dim(l - x);
        let mut m = Matrix::zeros(field, rows, cols);
        if rows > 0 && cols > 0 {
            let rep = Module::representable(cat, x)?;
            for (s, per) in q_star.bases.iter().enumerate() {
                for (k, psi) in per[x].iter().enumerate() {
                    for (t, ts) in p.summands().iter().enumerate() {
                        let b = ts.obj;
                        if p_star.bases[t][x].is_empty() {
                            continue;
                        }
                        let phi = q.extend_at(s, &rep, psi, b);
                        let img = &(&phi * f.comp(b)) * &p.embedding(t);
                        let c = p_star.coords[t][x]
                            .coords(img.data())
                            .ok_or_else(|| Error::Internal("precomposition left the star dual".into()))?;
                        for (i, v) in c.into_iter().enumerate() {
                            m[(p_star.offsets[t][x] + i, q_star.offsets[s][x] + k)] = v;
                        }
                    }
                }
            }
        }
        comps[l - x] = m;
    }
    ModuleMap::new(q_star.module.clone(), p_star.module.clone(), comps)
}

/// `Tr M = coker(f1*: P0* -> P1*)` over the opposite category.
pub fn transpose_from<F: Field>(pres: &Presentation<F>) -> Result<Arc<Module<F>>> {
    let p0 = pres.p0();
    let p1 = pres.p1();
    let p0s = StarDual::new(p0)?;
    let p1s = StarDual::new(p1)?;
    let f1s = star_map(&pres.f1, p1, p0, &p1s, &p0s)?;
    Ok(cokernel(&f1s)?.0)
}

pub fn transpose<F: Field>(m: &Arc<Module<F>>) -> Result<Arc<Module<F>>> {
    transpose_from(&minimal_presentation(m)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TranslationFlag {
    Projective,
    Injective,
}

/// Result of `τ` or `τ⁻`.
#[derive(Clone)]
pub struct Translation<F> {
    pub module: Arc<Module<F>>,
    pub flag: Option<TranslationFlag>,
    /// The presentation used reaches within the margin of the horizon.
    pub margin_warning: bool,
}

/// `τ M = D Tr M`, from a given minimal presentation.
pub fn tau_from<F: Field>(pres: &Presentation<F>, margin: usize) -> Result<Translation<F>> {
    let cat = pres.module().cat();
    let margin_warning = pres.touches_margin(margin);
    if pres.cover.is_projective() {
        return Ok(Translation {
            module: Arc::new(Module::zero(cat)),
            flag: Some(TranslationFlag::Projective),
            margin_warning,
        });
    }
    let tr = transpose_from(pres)?;
    Ok(Translation { module: Arc::new(tr.dual()), flag: None, margin_warning })
}

pub fn tau<F: Field>(m: &Arc<Module<F>>, margin: usize) -> Result<Translation<F>> {
    tau_from(&minimal_presentation(m)?, margin)
}

/// `τ⁻ M = Tr D M`; needs `M` finite dimensional within the window.
pub fn tau_minus<F: Field>(m: &Arc<Module<F>>, margin: usize) -> Result<Translation<F>> {
    if is_fd(m, margin) != FdVerdict::FiniteDimensional {
        return Err(Error::NotFiniteDimensional);
    }
    tau_minus_unchecked(m, margin)
}

/// `Tr D M` without the finiteness gate. Inside a finite truncation this is
/// always computable; whether it means anything for the untruncated category
/// is the caller's call.
pub fn tau_minus_unchecked<F: Field>(m: &Arc<Module<F>>, margin: usize) -> Result<Translation<F>> {
    let dm = Arc::new(m.dual());
    let pres = minimal_presentation(&dm)?;
    let margin_warning = pres.touches_margin(margin);
    if pres.cover.is_projective() {
        return Ok(Translation {
            module: Arc::new(Module::zero(m.cat())),
            flag: Some(TranslationFlag::Injective),
            margin_warning,
        });
    }
    let module = transpose_from(&pres)?;
    debug_assert!(module.cat().same(m.cat()));
    Ok(Translation { module, flag: None, margin_warning })
}
