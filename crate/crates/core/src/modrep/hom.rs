//! Spaces of natural transformations.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{Coordinates, Field, Matrix};

use super::cover::{projective_cover, Cover};
use super::module::{Module, ModuleMap};

/// A basis of `Hom(M, N)` with coordinates.
#[derive(Clone)]
pub struct HomSpace<F> {
    src: Arc<Module<F>>,
    dst: Arc<Module<F>>,
    basis: Vec<ModuleMap<F>>,
    coords: Coordinates<F>,
}

impl<F: Field> HomSpace<F> {
    fn from_basis(src: Arc<Module<F>>, dst: Arc<Module<F>>, basis: Vec<ModuleMap<F>>) -> Self {
        let field = src.field();
        let len: usize = (0..src.dims().len()).map(|a| src.dim(a) * dst.dim(a)).sum();
        let mut m = Matrix::zeros(field, len, basis.len());
        for (j, b) in basis.iter().enumerate() {
            for (i, x) in b.flatten().into_iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        HomSpace { src, dst, basis, coords: Coordinates::new(m) }
    }

    pub fn src(&self) -> &Arc<Module<F>> {
        &self.src
    }

    pub fn dst(&self) -> &Arc<Module<F>> {
        &self.dst
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[ModuleMap<F>] {
        &self.basis
    }

    /// Coordinates of a map with the same source and target; `None` if the
    /// matrices are not a natural transformation in the span.
    pub fn coords(&self, f: &ModuleMap<F>) -> Option<Vec<F>> {
        self.coords.coords(&f.flatten())
    }

    pub fn combination(&self, coeffs: &[F]) -> ModuleMap<F> {
        ModuleMap::combination(&self.src, &self.dst, &self.basis, coeffs)
    }

    /// Columns are the coordinates of the given maps.
    pub fn coord_matrix(&self, maps: &[ModuleMap<F>]) -> Result<Matrix<F>> {
        let field = self.src.field();
        let mut out = Matrix::zeros(field, self.dim(), maps.len());
        for (j, f) in maps.iter().enumerate() {
            let c = self
                .coords(f)
                .ok_or_else(|| Error::Internal("map is not in the Hom space".into()))?;
            for (i, x) in c.into_iter().enumerate() {
                out[(i, j)] = x;
            }
        }
        Ok(out)
    }
}

/// `Hom(M, N)` read off a projective cover of `M`: maps `P0 -> N` that vanish
/// on `ΩM`, pushed down through a right inverse of the cover.
pub fn hom_from_cover<F: Field>(cover: &Cover<F>, n: &Arc<Module<F>>) -> Result<HomSpace<F>> {
    let m = &cover.module;
    m.cat().ensure_same(n.cat())?;
    let field = m.field();
    let cands = cover.projective.hom_basis(n);
    let omega = &cover.inclusion;
    let rows: usize = (0..n.dims().len()).map(|b| n.dim(b) * cover.syzygy.dim(b)).sum();
    let mut system = Matrix::zeros(field, rows, cands.len());
    for (t, psi) in cands.iter().enumerate() {
        let mut r = 0;
        for (pb, ib) in psi.comps().iter().zip(omega.comps()) {
            for x in (pb * ib).into_data() {
                system[(r, t)] = x;
                r += 1;
            }
        }
    }
    let k = system.kernel_basis();
    let basis = (0..k.cols())
        .map(|j| {
            let comps = (0..n.dims().len())
                .map(|b| {
                    let mut acc = Matrix::zeros(field, n.dim(b), cover.p0().dim(b));
                    for (t, psi) in cands.iter().enumerate() {
                        let c = &k[(t, j)];
                        if !c.is_zero() {
                            acc = &acc + &psi.comp(b).scale(c);
                        }
                    }
                    &acc * &cover.right_inverse[b]
                })
                .collect();
            ModuleMap::raw(m.clone(), n.clone(), comps)
        })
        .collect();
    Ok(HomSpace::from_basis(m.clone(), n.clone(), basis))
}

pub fn hom_space<F: Field>(m: &Arc<Module<F>>, n: &Arc<Module<F>>) -> Result<HomSpace<F>> {
    m.cat().ensure_same(n.cat())?;
    hom_from_cover(&projective_cover(m)?, n)
}

/// `Hom(M, N)` as the kernel of the naturality equations on generators.
///
/// Independent of covers; slower on large modules.
pub fn hom_by_naturality<F: Field>(m: &Arc<Module<F>>, n: &Arc<Module<F>>) -> Result<HomSpace<F>> {
    let cat = m.cat();
    cat.ensure_same(n.cat())?;
    let field = cat.field();
    let objs = cat.num_objects();
    let mut offsets = vec![0; objs + 1];
    for a in 0..objs {
        offsets[a + 1] = offsets[a] + n.dim(a) * m.dim(a);
    }
    let unknowns = offsets[objs];
    let mut eqs: Vec<Vec<F>> = Vec::new();
    for &g in cat.generators() {
        let mo = cat.morphism(g);
        let (b, c) = (mo.src, mo.dst);
        let (ng, mg) = (n.act(g), m.act(g));
        // N(g) X_b - X_c M(g) = 0, entry (i, j) with i in N(c), j in M(b)
        for i in 0..n.dim(c) {
            for j in 0..m.dim(b) {
                let mut row = vec![F::zero_in(&field); unknowns];
                for l in 0..n.dim(b) {
                    if !ng[(i, l)].is_zero() {
                        row[offsets[b] + l * m.dim(b) + j] += &ng[(i, l)];
                    }
                }
                for l in 0..m.dim(c) {
                    if !mg[(l, j)].is_zero() {
                        row[offsets[c] + i * m.dim(c) + l] -= &mg[(l, j)];
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    eqs.push(row);
                }
            }
        }
    }
    let system = if eqs.is_empty() {
        Matrix::zeros(field, 0, unknowns)
    } else {
        Matrix::from_rows(field, eqs)?
    };
    let k = system.kernel_basis();
    let basis = (0..k.cols())
        .map(|j| {
            let comps = (0..objs)
                .map(|a| {
                    let v: Vec<F> = (offsets[a]..offsets[a + 1]).map(|r| k[(r, j)].clone()).collect();
                    Matrix::new(field, n.dim(a), m.dim(a), v).expect("block size")
                })
                .collect();
            ModuleMap::raw(m.clone(), n.clone(), comps)
        })
        .collect();
    Ok(HomSpace::from_basis(m.clone(), n.clone(), basis))
}
