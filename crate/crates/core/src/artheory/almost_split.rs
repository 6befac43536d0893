//! Almost split sequences from the socle of `Ext¹(M, τM)` over `End(M)`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{quotient_coords, Field, Matrix};
use crate::modrep::{decompose, end_algebra, hom_space, minimal_presentation, EndAlgebra, HomSpace, Module, ModuleMap, DEFAULT_BUDGET};

use super::ext::{lift_to_covers, realize_extension, Ext, ShortExactSeq};
use super::transpose::{tau_from, Translation};

pub struct AlmostSplit<F> {
    pub seq: ShortExactSeq<F>,
    pub tau: Translation<F>,
    /// Coordinates of the chosen class in `Ext¹(M, τM)`.
    pub class: Vec<F>,
    pub ext_dim: usize,
}

/// Right action of each radical basis element of `End(M)` on `Ext¹(M, X)`.
pub fn radical_actions<F: Field>(ext: &Ext<F>, end: &EndAlgebra<F>) -> Result<Vec<Matrix<F>>> {
    let cover = &ext.presentation.cover;
    end.radical_maps()
        .iter()
        .map(|r| {
            let (_, r_omega) = lift_to_covers(r, cover, cover)?;
            ext.pullback_matrix(ext, &r_omega)
        })
        .collect()
}

pub fn almost_split<F: Field>(m: &Arc<Module<F>>, margin: usize) -> Result<AlmostSplit<F>> {
    if m.is_zero() {
        return Err(Error::NotIndecomposable);
    }
    let pres = Arc::new(minimal_presentation(m)?);
    if pres.cover.is_projective() {
        return Err(Error::IsProjective);
    }
    let end = end_algebra(m)?;
    if end.top_dim() != 1 {
        let pieces = decompose(m, DEFAULT_BUDGET)?;
        if pieces.len() != 1 || pieces[0].multiplicity != 1 {
            return Err(Error::NotIndecomposable);
        }
    }
    let tau = tau_from(&pres, margin)?;
    let ext = Ext::new(pres, &tau.module)?;
    let field = m.field();
    let d = ext.dim();
    let actions = radical_actions(&ext, &end)?;
    let stacked = Matrix::vstack_all(field, d, &actions)?;
    let socle = stacked.kernel_basis();
    if socle.cols() == 0 {
        return Err(Error::Internal("Ext(M, τM) has no socle".into()));
    }
    let class = socle.column(0);
    let seq = realize_extension(&ext.class(&class))?;
    Ok(AlmostSplit { seq, tau, class, ext_dim: d })
}

/// Coefficient vectors (columns) of `rad(X, M)` in the basis of `Hom(X, M)`:
/// maps `h` with `h∘s ∈ rad End(M)` for every `s: M -> X`.
pub fn non_retractions<F: Field>(x: &Arc<Module<F>>, end: &EndAlgebra<F>) -> Result<(HomSpace<F>, Matrix<F>)> {
    let m = end.space.src();
    let field = m.field();
    let hom_xm = hom_space(x, m)?;
    let hom_mx = hom_space(m, x)?;
    let top = quotient_coords(field, end.dim(), &end.radical)?;
    let mut blocks = Vec::with_capacity(hom_mx.dim());
    for s in hom_mx.basis() {
        let comps: Vec<ModuleMap<F>> = hom_xm.basis().iter().map(|h| h.after(s)).collect();
        blocks.push(&top.proj * &end.space.coord_matrix(&comps)?);
    }
    let system = Matrix::vstack_all(field, hom_xm.dim(), &blocks)?;
    let rad = system.kernel_basis();
    Ok((hom_xm, rad))
}

/// Whether every non-retraction `X -> M` factors through `p: E -> M`.
pub fn lifts_non_retractions<F: Field>(seq: &ShortExactSeq<F>, end: &EndAlgebra<F>, x: &Arc<Module<F>>) -> Result<bool> {
    let (hom_xm, rad) = non_retractions(x, end)?;
    if rad.cols() == 0 {
        return Ok(true);
    }
    let lifted: Vec<ModuleMap<F>> = hom_space(x, &seq.e)?.basis().iter().map(|g| seq.p.after(g)).collect();
    Ok(hom_xm.coord_matrix(&lifted)?.spans(&rad))
}

/// Checks of an almost split sequence against a finite test family.
#[derive(Clone, Debug)]
pub struct AlmostSplitCheck {
    pub exact: bool,
    pub non_split: bool,
    /// Labels of family members with a non-retraction that does not lift.
    pub failures: Vec<String>,
}

impl AlmostSplitCheck {
    pub fn passed(&self) -> bool {
        self.exact && self.non_split && self.failures.is_empty()
    }
}

pub fn check_almost_split<F: Field>(seq: &ShortExactSeq<F>, family: &[(String, Arc<Module<F>>)]) -> Result<AlmostSplitCheck> {
    let end = end_algebra(&seq.b)?;
    let mut failures = Vec::new();
    for (label, x) in family {
        if !lifts_non_retractions(seq, &end, x)? {
            failures.push(label.clone());
        }
    }
    Ok(AlmostSplitCheck { exact: seq.is_exact(), non_split: !seq.is_split()?, failures })
}
