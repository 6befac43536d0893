//! `Ext¹` through a minimal presentation, extension classes and their
//! realization as short exact sequences.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{quotient_coords, Field, Matrix, Quotient};
use crate::modrep::{
    equivariant_lift, hom_from_cover, hom_space, minimal_presentation, pushout, Cover, HomSpace, Module, ModuleMap,
    Presentation,
};

/// `0 -> A -> E -> B -> 0`.
#[derive(Clone)]
pub struct ShortExactSeq<F> {
    pub a: Arc<Module<F>>,
    pub e: Arc<Module<F>>,
    pub b: Arc<Module<F>>,
    pub i: ModuleMap<F>,
    pub p: ModuleMap<F>,
}

impl<F: Field> ShortExactSeq<F> {
    /// Objectwise exactness.
    pub fn is_exact(&self) -> bool {
        self.i.is_mono()
            && self.p.is_epi()
            && self.p.after(&self.i).is_zero()
            && (0..self.e.dims().len()).all(|x| self.e.dim(x) == self.a.dim(x) + self.b.dim(x))
    }

    /// Whether `p` has a section: `id_B` lies in `p ∘ Hom(B, E)`.
    pub fn is_split(&self) -> Result<bool> {
        let end_b = hom_space(&self.b, &self.b)?;
        let lifted: Vec<ModuleMap<F>> = hom_space(&self.b, &self.e)?.basis().iter().map(|g| self.p.after(g)).collect();
        let img = end_b.coord_matrix(&lifted)?;
        let id = end_b.coord_matrix(&[ModuleMap::identity(self.b.clone())])?;
        Ok(img.spans(&id))
    }
}

/// `Ext¹(M, N) = coker(Hom(P0, N) -> Hom(ΩM, N))`.
#[derive(Clone)]
pub struct Ext<F> {
    pub presentation: Arc<Presentation<F>>,
    pub target: Arc<Module<F>>,
    /// `Hom(ΩM, N)`.
    pub cocycles: HomSpace<F>,
    quotient: Quotient<F>,
}

/// A class in `Ext¹(M, N)` with a representing cocycle `ΩM -> N`.
#[derive(Clone)]
pub struct ExtClass<F> {
    pub presentation: Arc<Presentation<F>>,
    pub cocycle: ModuleMap<F>,
    pub coords: Vec<F>,
}

impl<F: Field> ExtClass<F> {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|x| x.is_zero())
    }
}

impl<F: Field> Ext<F> {
    pub fn new(presentation: Arc<Presentation<F>>, n: &Arc<Module<F>>) -> Result<Self> {
        let cover = &presentation.cover;
        cover.module.cat().ensure_same(n.cat())?;
        let field = n.field();
        let cocycles = hom_from_cover(&presentation.next, n)?;
        let restricted: Vec<ModuleMap<F>> = cover
            .projective
            .hom_basis(n)
            .iter()
            .map(|psi| psi.after(&cover.inclusion))
            .collect();
        let coboundaries = cocycles.coord_matrix(&restricted)?;
        let quotient = quotient_coords(field, cocycles.dim(), &coboundaries)?;
        Ok(Ext { presentation, target: n.clone(), cocycles, quotient })
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim
    }

    pub fn source(&self) -> &Arc<Module<F>> {
        self.presentation.module()
    }

    /// Class of a cocycle `ΩM -> N`.
    pub fn coords(&self, cocycle: &ModuleMap<F>) -> Result<Vec<F>> {
        let c = self
            .cocycles
            .coords(cocycle)
            .ok_or_else(|| Error::Internal("not a map out of the syzygy".into()))?;
        let v = Matrix::column_vector(self.target.field(), c);
        Ok((&self.quotient.proj * &v).column(0))
    }

    pub fn class(&self, coords: &[F]) -> ExtClass<F> {
        let v = Matrix::column_vector(self.target.field(), coords.to_vec());
        let c = (&self.quotient.section * &v).column(0);
        ExtClass {
            presentation: self.presentation.clone(),
            cocycle: self.cocycles.combination(&c),
            coords: coords.to_vec(),
        }
    }

    /// The `j`-th basis class.
    pub fn basis_class(&self, j: usize) -> ExtClass<F> {
        let field = self.target.field();
        let mut c = vec![F::zero_in(&field); self.dim()];
        c[j] = F::one_in(&field);
        self.class(&c)
    }

    /// Matrix of `ξ ↦ ξ·f` from `self = Ext(M, X)` to `other = Ext(L, X)` for
    /// `f: L -> M`, given the lift `f_Ω: ΩL -> ΩM`.
    pub fn pullback_matrix(&self, other: &Ext<F>, f_omega: &ModuleMap<F>) -> Result<Matrix<F>> {
        let field = self.target.field();
        let mut out = Matrix::zeros(field, other.dim(), self.dim());
        for j in 0..self.dim() {
            let c = self.basis_class(j).cocycle.after(f_omega);
            for (i, x) in other.coords(&c)?.into_iter().enumerate() {
                out[(i, j)] = x;
            }
        }
        Ok(out)
    }
}

pub fn ext1<F: Field>(m: &Arc<Module<F>>, n: &Arc<Module<F>>) -> Result<Ext<F>> {
    Ext::new(Arc::new(minimal_presentation(m)?), n)
}

/// Lifts `f: M -> N` to the projective covers and restricts to the syzygies.
pub fn lift_to_covers<F: Field>(f: &ModuleMap<F>, cm: &Cover<F>, cn: &Cover<F>) -> Result<(ModuleMap<F>, ModuleMap<F>)> {
    let cat = cm.module.cat();
    let p = &cm.projective;
    let psis = p
        .summands()
        .iter()
        .enumerate()
        .map(|(s, sm)| {
            let a = sm.obj;
            let target = &(f.comp(a) * cm.map.comp(a)) * &p.embedding(s);
            equivariant_lift(cat, a, &sm.rho, &cn.p0().end_action(a), cn.map.comp(a), &target)
        })
        .collect::<Result<Vec<_>>>()?;
    let phi0 = p.map_to(cn.p0(), &psis);
    let comps = (0..cat.num_objects())
        .map(|b| {
            let rhs = phi0.comp(b) * cm.inclusion.comp(b);
            cn.inclusion.comp(b).solve_right(&rhs)
        })
        .collect::<Result<Vec<_>>>()?;
    let phi_omega = ModuleMap::raw(cm.syzygy.clone(), cn.syzygy.clone(), comps);
    Ok((phi0, phi_omega))
}

/// `0 -> N -> E -> M -> 0`, with `E` the pushout of `ΩM -> P0` along the cocycle.
pub fn realize_extension<F: Field>(x: &ExtClass<F>) -> Result<ShortExactSeq<F>> {
    let cover = &x.presentation.cover;
    let m = cover.module.clone();
    let n = x.cocycle.dst().clone();
    let field = m.field();
    let (e, from_p0, from_n) = pushout(&cover.inclusion, &x.cocycle)?;
    let comps = (0..m.dims().len())
        .map(|b| {
            let h = from_p0.comp(b).hstack(from_n.comp(b))?;
            let sec = h.solve_right(&Matrix::identity(field, h.rows()))?;
            let f = cover.map.comp(b).hstack(&Matrix::zeros(field, m.dim(b), n.dim(b)))?;
            Ok(&f * &sec)
        })
        .collect::<Result<Vec<_>>>()?;
    let p = ModuleMap::raw(e.clone(), m.clone(), comps);
    Ok(ShortExactSeq { a: n, e, b: m, i: from_n, p })
}
