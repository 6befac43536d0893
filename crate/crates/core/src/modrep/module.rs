use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{Field, FieldSpec, Matrix};
use crate::lincat::{LinCat, Terms};

/// A functor from a category to finite-dimensional vector spaces.
///
/// `act[g]` is the matrix of the basis morphism `g`, of shape
/// `dims[dst g] x dims[src g]`.
#[derive(Clone)]
pub struct Module<F> {
    cat: Arc<LinCat<F>>,
    dims: Vec<usize>,
    act: Vec<Matrix<F>>,
}

/// A natural transformation, one matrix per object.
#[derive(Clone)]
pub struct ModuleMap<F> {
    src: Arc<Module<F>>,
    dst: Arc<Module<F>>,
    comps: Vec<Matrix<F>>,
}

impl<F: Field> Module<F> {
    /// Builds and validates a module.
    pub fn new(cat: Arc<LinCat<F>>, dims: Vec<usize>, act: Vec<Matrix<F>>) -> Result<Self> {
        let m = Module { cat, dims, act };
        m.validate()?;
        Ok(m)
    }

    /// Builds a module that is a functor by construction; a failed re-check
    /// is an internal error.
    pub(crate) fn assemble(cat: Arc<LinCat<F>>, dims: Vec<usize>, act: Vec<Matrix<F>>) -> Result<Self> {
        let m = Module { cat, dims, act };
        m.validate().map_err(|e| Error::Internal(format!("constructed module is not a functor: {e}")))?;
        Ok(m)
    }

    pub fn zero(cat: &Arc<LinCat<F>>) -> Self {
        let f = cat.field();
        let act = cat.morphisms().iter().map(|_| Matrix::zeros(f, 0, 0)).collect();
        Module { cat: cat.clone(), dims: vec![0; cat.num_objects()], act }
    }

    pub fn cat(&self) -> &Arc<LinCat<F>> {
        &self.cat
    }

    pub fn field(&self) -> FieldSpec {
        self.cat.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, a: usize) -> usize {
        self.dims[a]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn act(&self, g: usize) -> &Matrix<F> {
        &self.act[g]
    }

    pub fn actions(&self) -> &[Matrix<F>] {
        &self.act
    }

    /// Matrix of a linear combination of the basis of `C(a,b)`.
    pub fn act_terms(&self, a: usize, b: usize, terms: &Terms<F>) -> Matrix<F> {
        let f = self.field();
        let start = self.cat.hom(a, b).start;
        let mut out = Matrix::zeros(f, self.dims[b], self.dims[a]);
        for (k, c) in terms {
            if !c.is_zero() {
                out = &out + &self.act[start + k].scale(c);
            }
        }
        out
    }

    /// Matrix of a coefficient vector in `C(a,b)`.
    pub fn act_vec(&self, a: usize, b: usize, v: &[F]) -> Matrix<F> {
        let terms: Terms<F> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, c.clone()))
            .collect();
        self.act_terms(a, b, &terms)
    }

    /// Action of the basis of `End(a)`, in local order.
    pub fn end_action(&self, a: usize) -> Vec<Matrix<F>> {
        self.cat.hom(a, a).map(|g| self.act[g].clone()).collect()
    }

    /// Checks shapes, the identity law and composition with every generator.
    pub fn validate(&self) -> Result<()> {
        let c = &self.cat;
        let n = c.num_objects();
        let bad = |m: String| Err(Error::InvalidModule(m));
        if self.dims.len() != n {
            return bad(format!("{} dimensions for {n} objects", self.dims.len()));
        }
        if self.act.len() != c.num_morphisms() {
            return bad(format!("{} matrices for {} morphisms", self.act.len(), c.num_morphisms()));
        }
        for (g, m) in c.morphisms().iter().enumerate() {
            if self.act[g].shape() != (self.dims[m.dst], self.dims[m.src]) {
                return bad(format!("matrix of `{}` has the wrong shape", m.label));
            }
            if self.act[g].field() != c.field() {
                return Err(Error::FieldMismatch(self.act[g].field(), c.field()));
            }
        }
        for a in 0..n {
            if self.dims[a] > 0 && !self.act_vec(a, a, c.identity(a)).is_identity() {
                return bad(format!("identity of {a} does not act as the identity"));
            }
        }
        for &g in c.generators() {
            let gm = c.morphism(g);
            let (b, cc) = (gm.src, gm.dst);
            let j = c.local(g);
            for x in 0..=b {
                if self.dims[x] == 0 {
                    continue;
                }
                for f in c.hom(x, b) {
                    let lhs = self.act_terms(x, cc, c.compose_basis(x, b, cc, c.local(f), j));
                    if lhs != &self.act[g] * &self.act[f] {
                        return bad(format!("composition `{}` after `{}` is not respected", gm.label, c.label(f)));
                    }
                }
            }
        }
        Ok(())
    }

    /// The representable functor `C(a,-)`.
    pub fn representable(cat: &Arc<LinCat<F>>, a: usize) -> Result<Self> {
        cat.check_object(a)?;
        let dims = (0..cat.num_objects()).map(|b| cat.hom_dim(a, b)).collect();
        let act = (0..cat.num_morphisms()).map(|g| cat.left_matrix(g, a)).collect();
        Ok(Module { cat: cat.clone(), dims, act })
    }

    /// The injective `D C(-,a)`, the dual of a representable over the opposite.
    pub fn injective(cat: &Arc<LinCat<F>>, a: usize) -> Result<Self> {
        cat.check_object(a)?;
        let op = cat.opposite();
        Ok(Module::representable(&op, cat.top() - a)?.dual())
    }

    /// The simple concentrated at `a` with the trivial action of `End(a)`.
    ///
    /// Needs `End(a)` to be one-dimensional or to have a group basis; other
    /// simples are built with [`Module::simple_with`].
    pub fn simple(cat: &Arc<LinCat<F>>, a: usize) -> Result<Self> {
        cat.check_object(a)?;
        let f = cat.field();
        let d = cat.hom_dim(a, a);
        let rho: Vec<Matrix<F>> = if d == 1 {
            let id = &cat.identity(a)[0];
            vec![Matrix::new(f, 1, 1, vec![id.inverse()])?]
        } else if cat.group_basis(a).is_some() {
            vec![Matrix::identity(f, 1); d]
        } else {
            return Err(Error::InvalidModule(format!(
                "End({a}) has no canonical one-dimensional module; supply one"
            )));
        };
        Module::simple_with(cat, a, rho)
    }

    /// The module equal to `V` at `a` and zero elsewhere, where `rho` gives
    /// the action of the basis of `End(a)` on `V`.
    pub fn simple_with(cat: &Arc<LinCat<F>>, a: usize, rho: Vec<Matrix<F>>) -> Result<Self> {
        cat.check_object(a)?;
        if rho.len() != cat.hom_dim(a, a) {
            return Err(Error::InvalidModule(format!("End({a}) needs {} matrices", cat.hom_dim(a, a))));
        }
        let v = rho.first().map(|m| m.rows()).unwrap_or(0);
        let mut dims = vec![0; cat.num_objects()];
        dims[a] = v;
        let f = cat.field();
        let mut act: Vec<Matrix<F>> = cat
            .morphisms()
            .iter()
            .map(|m| Matrix::zeros(f, dims[m.dst], dims[m.src]))
            .collect();
        for (g, r) in cat.hom(a, a).zip(rho) {
            act[g] = r;
        }
        Module::new(cat.clone(), dims, act)
    }

    /// `D M = Hom_k(M, k)` over the opposite category.
    pub fn dual(&self) -> Self {
        let op = self.cat.opposite();
        let l = self.cat.top();
        let dims = (0..self.dims.len()).map(|x| self.dims[l - x]).collect();
        let mut act = vec![Matrix::zeros(self.field(), 0, 0); self.act.len()];
        for (g, m) in self.act.iter().enumerate() {
            act[self.cat.op_index(g)] = m.transpose();
        }
        Module { cat: op, dims, act }
    }

    /// Direct sum with its inclusions and projections.
    pub fn direct_sum(parts: &[Arc<Module<F>>]) -> Result<DirectSum<F>> {
        let first = parts.first().ok_or_else(|| Error::InvalidModule("empty direct sum".into()))?;
        let cat = first.cat.clone();
        for p in parts {
            cat.ensure_same(&p.cat)?;
        }
        let f = cat.field();
        let n = cat.num_objects();
        let dims: Vec<usize> = (0..n).map(|a| parts.iter().map(|p| p.dims[a]).sum()).collect();
        let act = (0..cat.num_morphisms())
            .map(|g| {
                let blocks: Vec<Matrix<F>> = parts.iter().map(|p| p.act[g].clone()).collect();
                Matrix::block_diag(f, &blocks)
            })
            .collect();
        let sum = Arc::new(Module { cat: cat.clone(), dims: dims.clone(), act });
        let mut inclusions = Vec::new();
        let mut projections = Vec::new();
        let mut offsets = vec![0; n];
        for p in parts {
            let mut inc = Vec::with_capacity(n);
            let mut pr = Vec::with_capacity(n);
            for a in 0..n {
                let mut i = Matrix::zeros(f, dims[a], p.dims[a]);
                i.set_block(offsets[a], 0, &Matrix::identity(f, p.dims[a]));
                pr.push(i.transpose());
                inc.push(i);
                offsets[a] += p.dims[a];
            }
            inclusions.push(ModuleMap::raw(p.clone(), sum.clone(), inc));
            projections.push(ModuleMap::raw(sum.clone(), p.clone(), pr));
        }
        Ok(DirectSum { sum, inclusions, projections })
    }

    /// Whether both modules have identical dimensions and matrices.
    pub fn same_data(&self, other: &Self) -> bool {
        self.cat.same(&other.cat) && self.dims == other.dims && self.act == other.act
    }
}

impl<F: Field> fmt::Debug for Module<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module({}, dims {:?})", self.cat.name(), self.dims)
    }
}

/// `M_1 ⊕ ... ⊕ M_r` with its structure maps.
pub struct DirectSum<F> {
    pub sum: Arc<Module<F>>,
    pub inclusions: Vec<ModuleMap<F>>,
    pub projections: Vec<ModuleMap<F>>,
}

impl<F: Field> ModuleMap<F> {
    /// Builds and checks naturality on generators.
    pub fn new(src: Arc<Module<F>>, dst: Arc<Module<F>>, comps: Vec<Matrix<F>>) -> Result<Self> {
        let m = ModuleMap { src, dst, comps };
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn raw(src: Arc<Module<F>>, dst: Arc<Module<F>>, comps: Vec<Matrix<F>>) -> Self {
        ModuleMap { src, dst, comps }
    }

    pub fn validate(&self) -> Result<()> {
        let cat = self.src.cat();
        cat.ensure_same(self.dst.cat())?;
        let n = cat.num_objects();
        if self.comps.len() != n {
            return Err(Error::InvalidModule(format!("{} components for {n} objects", self.comps.len())));
        }
        for a in 0..n {
            if self.comps[a].shape() != (self.dst.dim(a), self.src.dim(a)) {
                return Err(Error::InvalidModule(format!("component at {a} has the wrong shape")));
            }
        }
        for &g in cat.generators() {
            let m = cat.morphism(g);
            if self.dst.act(g) * &self.comps[m.src] != &self.comps[m.dst] * self.src.act(g) {
                return Err(Error::InvalidModule(format!("not natural at `{}`", m.label)));
            }
        }
        Ok(())
    }

    pub fn zero(src: Arc<Module<F>>, dst: Arc<Module<F>>) -> Self {
        let f = src.field();
        let comps = (0..src.dims().len())
            .map(|a| Matrix::zeros(f, dst.dim(a), src.dim(a)))
            .collect();
        ModuleMap { src, dst, comps }
    }

    pub fn identity(m: Arc<Module<F>>) -> Self {
        let f = m.field();
        let comps = m.dims().iter().map(|&d| Matrix::identity(f, d)).collect();
        ModuleMap { src: m.clone(), dst: m, comps }
    }

    pub fn src(&self) -> &Arc<Module<F>> {
        &self.src
    }

    pub fn dst(&self) -> &Arc<Module<F>> {
        &self.dst
    }

    pub fn comps(&self) -> &[Matrix<F>] {
        &self.comps
    }

    pub fn comp(&self, a: usize) -> &Matrix<F> {
        &self.comps[a]
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &ModuleMap<F>) -> ModuleMap<F> {
        let comps = self.comps.iter().zip(&first.comps).map(|(g, f)| g * f).collect();
        ModuleMap { src: first.src.clone(), dst: self.dst.clone(), comps }
    }

    pub fn add(&self, other: &ModuleMap<F>) -> ModuleMap<F> {
        let comps = self.comps.iter().zip(&other.comps).map(|(a, b)| a + b).collect();
        ModuleMap { src: self.src.clone(), dst: self.dst.clone(), comps }
    }

    pub fn scale(&self, c: &F) -> ModuleMap<F> {
        let comps = self.comps.iter().map(|m| m.scale(c)).collect();
        ModuleMap { src: self.src.clone(), dst: self.dst.clone(), comps }
    }

    pub fn neg(&self) -> ModuleMap<F> {
        let comps = self.comps.iter().map(|m| -m).collect();
        ModuleMap { src: self.src.clone(), dst: self.dst.clone(), comps }
    }

    /// `Σ c_i maps_i`, all with the given source and target.
    pub fn combination(src: &Arc<Module<F>>, dst: &Arc<Module<F>>, maps: &[ModuleMap<F>], coeffs: &[F]) -> ModuleMap<F> {
        let mut out = ModuleMap::zero(src.clone(), dst.clone());
        for (m, c) in maps.iter().zip(coeffs) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.comps.iter_mut().zip(&m.comps) {
                *o = &*o + &x.scale(c);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Matrix::is_zero)
    }

    pub fn is_iso(&self) -> bool {
        self.comps.iter().all(Matrix::is_invertible)
    }

    pub fn is_mono(&self) -> bool {
        self.comps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_epi(&self) -> bool {
        self.comps.iter().all(|m| m.rank() == m.rows())
    }

    /// Inverse of an isomorphism.
    pub fn inverse(&self) -> Result<ModuleMap<F>> {
        let comps = self.comps.iter().map(Matrix::inverse).collect::<Result<_>>()?;
        Ok(ModuleMap { src: self.dst.clone(), dst: self.src.clone(), comps })
    }

    /// All components stacked into one column, row-major within each component.
    pub fn flatten(&self) -> Vec<F> {
        self.comps.iter().flat_map(|m| m.data().iter().cloned()).collect()
    }

    /// `D f: D N -> D M` over the opposite.
    pub fn dual(&self) -> ModuleMap<F> {
        self.dual_between(Arc::new(self.dst.dual()), Arc::new(self.src.dual()))
    }

    /// `D f` with prebuilt duals of target and source.
    pub fn dual_between(&self, dst_dual: Arc<Module<F>>, src_dual: Arc<Module<F>>) -> ModuleMap<F> {
        let l = self.src.cat().top();
        let comps = (0..self.comps.len()).map(|x| self.comps[l - x].transpose()).collect();
        ModuleMap { src: dst_dual, dst: src_dual, comps }
    }

    /// Same matrices, reinterpreted between modules with identical data.
    pub fn retarget(&self, src: Arc<Module<F>>, dst: Arc<Module<F>>) -> ModuleMap<F> {
        ModuleMap { src, dst, comps: self.comps.clone() }
    }
}

impl<F: Field> fmt::Debug for ModuleMap<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleMap({:?} -> {:?})", self.src.dims(), self.dst.dims())
    }
}
