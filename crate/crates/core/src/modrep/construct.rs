//! Objectwise kernels, cokernels and pushouts.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{quotient_coords, Coordinates, Field, Matrix};

use super::module::{Module, ModuleMap};

/// The submodule spanned objectwise by the columns of `bases`, which must be
/// independent and closed under the action.
pub fn submodule<F: Field>(m: &Arc<Module<F>>, bases: Vec<Matrix<F>>) -> Result<(Arc<Module<F>>, ModuleMap<F>)> {
    let cat = m.cat();
    let field = cat.field();
    let coords: Vec<Coordinates<F>> = bases.iter().cloned().map(Coordinates::new).collect();
    let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
    let act = cat
        .morphisms()
        .iter()
        .enumerate()
        .map(|(g, mo)| {
            let (a, b) = (mo.src, mo.dst);
            if dims[a] == 0 || dims[b] == 0 {
                return Ok(Matrix::zeros(field, dims[b], dims[a]));
            }
            coords[b]
                .solve(&(m.act(g) * &bases[a]))
                .ok_or_else(|| Error::Internal("subspaces are not closed under the action".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let sub = Arc::new(Module::assemble(cat.clone(), dims, act)?);
    let incl = ModuleMap::raw(sub.clone(), m.clone(), bases);
    Ok((sub, incl))
}

/// `ker f` with its inclusion.
pub fn kernel<F: Field>(f: &ModuleMap<F>) -> Result<(Arc<Module<F>>, ModuleMap<F>)> {
    let bases = f.comps().iter().map(Matrix::kernel_basis).collect();
    submodule(f.src(), bases)
}

/// `coker f` with its projection.
pub fn cokernel<F: Field>(f: &ModuleMap<F>) -> Result<(Arc<Module<F>>, ModuleMap<F>)> {
    let nm = f.dst();
    let cat = nm.cat();
    let field = cat.field();
    let quots = (0..cat.num_objects())
        .map(|b| quotient_coords(field, nm.dim(b), f.comp(b)))
        .collect::<Result<Vec<_>>>()?;
    let dims: Vec<usize> = quots.iter().map(|q| q.dim).collect();
    let act = cat
        .morphisms()
        .iter()
        .enumerate()
        .map(|(g, mo)| &(&quots[mo.dst].proj * nm.act(g)) * &quots[mo.src].section)
        .collect();
    let c = Arc::new(Module::assemble(cat.clone(), dims, act)?);
    let proj = ModuleMap::raw(nm.clone(), c.clone(), quots.into_iter().map(|q| q.proj).collect());
    Ok((c, proj))
}

/// Image of `f` with the factorization `M ↠ im f ↪ N`.
pub fn image<F: Field>(f: &ModuleMap<F>) -> Result<(Arc<Module<F>>, ModuleMap<F>, ModuleMap<F>)> {
    let bases: Vec<Matrix<F>> = f.comps().iter().map(Matrix::column_space_basis).collect();
    let onto = f
        .comps()
        .iter()
        .zip(&bases)
        .map(|(c, b)| {
            Coordinates::new(b.clone())
                .solve(c)
                .ok_or_else(|| Error::Internal("map leaves its image".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let (im, incl) = submodule(f.dst(), bases)?;
    Ok((im.clone(), ModuleMap::raw(f.src().clone(), im, onto), incl))
}

/// Pushout of `f: A -> B` and `g: A -> C`, the cokernel of `(f, -g): A -> B ⊕ C`.
///
/// Returns the pushout with the maps from `B` and `C`.
pub fn pushout<F: Field>(f: &ModuleMap<F>, g: &ModuleMap<F>) -> Result<(Arc<Module<F>>, ModuleMap<F>, ModuleMap<F>)> {
    f.src().cat().ensure_same(g.src().cat())?;
    let sum = Module::direct_sum(&[f.dst().clone(), g.dst().clone()])?;
    let comps = (0..f.comps().len())
        .map(|a| f.comp(a).vstack(&-g.comp(a)))
        .collect::<Result<Vec<_>>>()?;
    let fg = ModuleMap::raw(f.src().clone(), sum.sum.clone(), comps);
    let (p, proj) = cokernel(&fg)?;
    let from_b = proj.after(&sum.inclusions[0]);
    let from_c = proj.after(&sum.inclusions[1]);
    Ok((p, from_b, from_c))
}
