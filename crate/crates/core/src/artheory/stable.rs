//! Hom modulo maps factoring through projectives or injectives.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{quotient_coords, Field, Quotient};
use crate::modrep::{hom_from_cover, hom_space, injective_envelope, is_fd, projective_cover, Cover, Envelope, FdVerdict, HomSpace, Module, ModuleMap};

/// A quotient of `Hom(M, N)` by an ideal of trivial maps.
pub struct StableHom<F> {
    pub hom: HomSpace<F>,
    pub quotient: Quotient<F>,
}

impl<F: Field> StableHom<F> {
    pub fn dim(&self) -> usize {
        self.quotient.dim
    }

    /// Whether a map dies in the quotient.
    pub fn is_trivial(&self, f: &ModuleMap<F>) -> Result<bool> {
        let c = self.hom.coord_matrix(std::slice::from_ref(f))?;
        Ok((&self.quotient.proj * &c).is_zero())
    }

    fn build(hom: HomSpace<F>, trivial: Vec<ModuleMap<F>>) -> Result<Self> {
        let field = hom.src().field();
        let sub = hom.coord_matrix(&trivial)?;
        let quotient = quotient_coords(field, hom.dim(), &sub)?;
        Ok(StableHom { hom, quotient })
    }
}

/// `Hom_under(M, N)`, using a cover of `M` for Hom spaces out of `M` and the
/// cover `f0: P0 -> N` as the test epimorphism.
pub fn stable_hom_proj_from<F: Field>(cm: &Cover<F>, cn: &Cover<F>) -> Result<StableHom<F>> {
    let hom = hom_from_cover(cm, &cn.module)?;
    let through = hom_from_cover(cm, cn.p0())?;
    let trivial = through.basis().iter().map(|g| cn.map.after(g)).collect();
    StableHom::build(hom, trivial)
}

pub fn stable_hom_proj<F: Field>(m: &Arc<Module<F>>, n: &Arc<Module<F>>) -> Result<StableHom<F>> {
    stable_hom_proj_from(&projective_cover(m)?, &projective_cover(n)?)
}

/// `Hom_over(N, X)` through the injective envelope `N -> I`.
pub fn stable_hom_inj_from<F: Field>(cn: &Cover<F>, env: &Envelope<F>, x: &Arc<Module<F>>) -> Result<StableHom<F>> {
    let hom = hom_from_cover(cn, x)?;
    let trivial = hom_space(&env.injective, x)?
        .basis()
        .iter()
        .map(|g| g.after(&env.inclusion))
        .collect();
    StableHom::build(hom, trivial)
}

/// Needs `N` finite dimensional within the window.
pub fn stable_hom_inj<F: Field>(n: &Arc<Module<F>>, x: &Arc<Module<F>>, margin: usize) -> Result<StableHom<F>> {
    if is_fd(n, margin) != FdVerdict::FiniteDimensional {
        return Err(Error::NotFiniteDimensional);
    }
    let env = injective_envelope(n, margin)?;
    stable_hom_inj_from(&projective_cover(n)?, &env, x)
}
