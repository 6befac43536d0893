//! Radicals, tops, projective covers, presentations and injective envelopes.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{quotient_coords, Field, Matrix};

use super::construct::{cokernel, kernel, submodule};
use super::equivariant::equivariant_lift;
use super::fd::{is_fd, FdVerdict};
use super::induced::{InducedProjective, Summand};
use super::module::{Module, ModuleMap};

/// Columns spanning `rad M(a)` for every object: the images of all
/// morphisms arriving from lower objects.
///
/// Needs every `End(a)` to be semisimple, so that no radical of an
/// endomorphism algebra contributes.
pub fn radical_spaces<F: Field>(m: &Module<F>) -> Result<Vec<Matrix<F>>> {
    let cat = m.cat();
    cat.ensure_semisimple()?;
    let field = cat.field();
    Ok((0..cat.num_objects())
        .map(|a| {
            let parts: Vec<Matrix<F>> = (0..a)
                .filter(|&c| m.dim(c) > 0)
                .flat_map(|c| cat.hom(c, a))
                .map(|g| m.act(g).clone())
                .collect();
            Matrix::hstack_all(field, m.dim(a), &parts)
                .expect("same height")
                .column_space_basis()
        })
        .collect())
}

/// `rad M` with its inclusion.
pub fn radical_submodule<F: Field>(m: &Arc<Module<F>>) -> Result<(Arc<Module<F>>, ModuleMap<F>)> {
    submodule(m, radical_spaces(m)?)
}

/// `M / rad M`, keeping the action of each `End(a)`, with the projection.
pub fn top<F: Field>(m: &Arc<Module<F>>) -> Result<(Arc<Module<F>>, ModuleMap<F>)> {
    let (_, incl) = radical_submodule(m)?;
    cokernel(&incl)
}

/// A projective cover `f0: P0 -> M` with its kernel.
#[derive(Clone)]
pub struct Cover<F> {
    pub module: Arc<Module<F>>,
    pub projective: InducedProjective<F>,
    pub map: ModuleMap<F>,
    /// Right inverse of each component of `map`.
    pub right_inverse: Vec<Matrix<F>>,
    pub syzygy: Arc<Module<F>>,
    pub inclusion: ModuleMap<F>,
}

impl<F: Field> Cover<F> {
    pub fn p0(&self) -> &Arc<Module<F>> {
        self.projective.module()
    }

    pub fn is_projective(&self) -> bool {
        self.syzygy.is_zero()
    }
}

/// Whether `ker f ⊆ rad P` at every object.
pub fn kernel_in_radical<F: Field>(f: &ModuleMap<F>) -> Result<bool> {
    let rad = radical_spaces(f.src())?;
    Ok(f.comps().iter().zip(&rad).all(|(c, r)| r.spans(&c.kernel_basis())))
}

/// The projective cover `C(a,-) ⊗ top M(a) -> M`, summed over objects.
///
/// The generator maps are equivariant sections of `M(a) -> top M(a)`.
pub fn projective_cover<F: Field>(m: &Arc<Module<F>>) -> Result<Cover<F>> {
    let cat = m.cat();
    let field = cat.field();
    let rad = radical_spaces(m)?;
    let mut summands = Vec::new();
    let mut sections = Vec::new();
    for (a, r) in rad.iter().enumerate() {
        let q = quotient_coords(field, m.dim(a), r)?;
        if q.dim == 0 {
            continue;
        }
        let rho_m = m.end_action(a);
        let rho_t: Vec<Matrix<F>> = rho_m.iter().map(|x| &(&q.proj * x) * &q.section).collect();
        let sigma = equivariant_lift(cat, a, &rho_t, &rho_m, &q.proj, &Matrix::identity(field, q.dim))?;
        summands.push(Summand { obj: a, rho: rho_t });
        sections.push(sigma);
    }
    let projective = InducedProjective::new(cat, summands)?;
    let map = projective.map_to(m, &sections);
    if !map.is_epi() {
        return Err(Error::Internal("projective cover is not surjective".into()));
    }
    if !kernel_in_radical(&map)? {
        return Err(Error::Internal("projective cover is not minimal".into()));
    }
    let right_inverse = map
        .comps()
        .iter()
        .map(|c| c.solve_right(&Matrix::identity(field, c.rows())))
        .collect::<Result<Vec<_>>>()?;
    let (syzygy, inclusion) = kernel(&map)?;
    Ok(Cover { module: m.clone(), projective, map, right_inverse, syzygy, inclusion })
}

/// `ΩM` with its inclusion into the cover.
pub fn syzygy<F: Field>(m: &Arc<Module<F>>) -> Result<(Arc<Module<F>>, ModuleMap<F>)> {
    let c = projective_cover(m)?;
    Ok((c.syzygy, c.inclusion))
}

/// A minimal presentation `P1 -> P0 -> M -> 0`.
#[derive(Clone)]
pub struct Presentation<F> {
    pub cover: Cover<F>,
    pub next: Cover<F>,
    /// `P1 -> P0`, the cover of `ΩM` followed by its inclusion.
    pub f1: ModuleMap<F>,
}

impl<F: Field> Presentation<F> {
    pub fn module(&self) -> &Arc<Module<F>> {
        &self.cover.module
    }

    pub fn p0(&self) -> &InducedProjective<F> {
        &self.cover.projective
    }

    pub fn p1(&self) -> &InducedProjective<F> {
        &self.next.projective
    }

    pub fn f0(&self) -> &ModuleMap<F> {
        &self.cover.map
    }

    /// Whether a summand of `P0` or `P1` sits within `margin` of the
    /// truncation horizon.
    pub fn touches_margin(&self, margin: usize) -> bool {
        let cat = self.cover.module.cat();
        let top = cat.top();
        let flip = cat.is_opposite();
        self.p0()
            .summands()
            .iter()
            .chain(self.p1().summands())
            .filter(|s| s.dim() > 0)
            .map(|s| if flip { top - s.obj } else { s.obj })
            .any(|o| o + margin > top)
    }

    /// `ker f0 ⊆ rad P0` and `ker f1 ⊆ rad P1`.
    pub fn is_minimal(&self) -> Result<bool> {
        Ok(kernel_in_radical(&self.cover.map)? && kernel_in_radical(&self.f1)?)
    }
}

pub fn minimal_presentation<F: Field>(m: &Arc<Module<F>>) -> Result<Presentation<F>> {
    let cover = projective_cover(m)?;
    presentation_from_cover(cover)
}

pub fn presentation_from_cover<F: Field>(cover: Cover<F>) -> Result<Presentation<F>> {
    let next = projective_cover(&cover.syzygy)?;
    let f1 = cover.inclusion.after(&next.map);
    Ok(Presentation { cover, next, f1 })
}

/// An injective envelope `M -> I`, dual to a projective cover of `D M`.
#[derive(Clone)]
pub struct Envelope<F> {
    pub injective: Arc<Module<F>>,
    pub inclusion: ModuleMap<F>,
    pub dual_cover: Cover<F>,
}

/// Needs `M` finite dimensional within the truncation window.
pub fn injective_envelope<F: Field>(m: &Arc<Module<F>>, margin: usize) -> Result<Envelope<F>> {
    if is_fd(m, margin) != FdVerdict::FiniteDimensional {
        return Err(Error::NotFiniteDimensional);
    }
    injective_envelope_unchecked(m)
}

/// Envelope without the finiteness gate; used where the truncation is the
/// object of study.
pub(crate) fn injective_envelope_unchecked<F: Field>(m: &Arc<Module<F>>) -> Result<Envelope<F>> {
    let dm = Arc::new(m.dual());
    let dual_cover = projective_cover(&dm)?;
    let injective = Arc::new(dual_cover.p0().dual());
    let inclusion = dual_cover.map.dual_between(m.clone(), injective.clone());
    Ok(Envelope { injective, inclusion, dual_cover })
}
