//! Finite presentations of triangular k-linear categories on objects `0..=L`.
//!
//! Morphisms are numbered globally, grouped by `(source, target)` in
//! lexicographic order, and each Hom space keeps the order of its basis
//! labels. Composition is a table of structure constants.

mod algebra;
mod json;

use std::collections::HashMap;
use std::fmt;
use std::ops::Range;
use std::sync::{Arc, OnceLock, Weak};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{Field, FieldSpec, Matrix};

pub use algebra::Algebra;

/// Sparse expansion of a morphism in a Hom basis.
pub type Terms<F> = Vec<(usize, F)>;

/// `tensor[i][j]` expands `g_j ∘ f_i` for `f_i ∈ C(a,b)`, `g_j ∈ C(b,c)`.
pub type Tensor<F> = Vec<Vec<Terms<F>>>;

/// Where a category came from; decides which injectivity rule applies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Origin {
    Quiver,
    Fi { group_order: usize },
    Vi { q: u64 },
    UserSupplied,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub src: usize,
    pub dst: usize,
    pub label: String,
}

/// Raw presentation data, before indexing.
#[derive(Clone, Debug)]
pub struct CatData<F> {
    pub field: FieldSpec,
    pub top: usize,
    /// `hom[a][b]`: basis labels of `C(a,b)`.
    pub hom: Vec<Vec<Vec<String>>>,
    pub comp: HashMap<(usize, usize, usize), Tensor<F>>,
    pub id: Vec<Vec<F>>,
}

/// Group structure on the basis of `End(a)`, when the basis is closed under
/// composition and every element is invertible.
#[derive(Clone, Debug)]
pub struct GroupBasis {
    /// `mult[i][j]` is the local index of `e_i ∘ e_j`.
    pub mult: Vec<Vec<usize>>,
    pub inverse: Vec<usize>,
    pub identity: usize,
}

impl GroupBasis {
    pub fn order(&self) -> usize {
        self.inverse.len()
    }
}

/// One failed law found by [`LinCat::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub law: String,
    pub morphisms: Vec<String>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at ({})", self.law, self.morphisms.join(", "))
    }
}

/// Dimension sequence `dim C(a,j)` for `j = a..=L` with a horizon verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Growth {
    pub object: usize,
    pub dims: Vec<usize>,
    pub window: usize,
    pub verdict: GrowthVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum GrowthVerdict {
    Bounded(usize),
    GrowingAtHorizon,
}

enum Link<F> {
    Owned(Arc<LinCat<F>>),
    Back(Weak<LinCat<F>>),
}

/// A validated-shape presentation of a triangular Hom-finite category.
pub struct LinCat<F> {
    field: FieldSpec,
    top: usize,
    name: String,
    origin: Origin,
    is_opposite: bool,
    morphisms: Vec<Morphism>,
    starts: Vec<usize>,
    comp: Vec<Tensor<F>>,
    id: Vec<Vec<F>>,
    by_label: HashMap<String, usize>,
    op_index: Vec<usize>,
    opposite: OnceLock<Link<F>>,
    generators: OnceLock<Vec<usize>>,
    radicals: Vec<OnceLock<Result<Matrix<F>>>>,
    groups: Vec<OnceLock<Option<Arc<GroupBasis>>>>,
}

impl<F: Field> LinCat<F> {
    /// Indexes a presentation, checking shapes, triangularity and label uniqueness.
    ///
    /// The category laws themselves are checked by [`LinCat::validate`].
    pub fn from_data(data: CatData<F>, name: impl Into<String>, origin: Origin) -> Result<Self> {
        let CatData { field, top, hom, comp, id } = data;
        if !F::supports(&field) {
            return Err(Error::InvalidCategory(format!(
                "field {field} is not representable by the scalar type"
            )));
        }
        field.check()?;
        let n = top + 1;
        let bad = |m: String| Error::InvalidCategory(m);
        if hom.len() != n || hom.iter().any(|row| row.len() != n) {
            return Err(bad(format!("hom table must be {n}x{n}")));
        }
        let mut morphisms = Vec::new();
        let mut starts = Vec::with_capacity(n * n + 1);
        let mut by_label = HashMap::new();
        for a in 0..n {
            for b in 0..n {
                starts.push(morphisms.len());
                if b < a && !hom[a][b].is_empty() {
                    return Err(bad(format!("C({a},{b}) must be zero since {b} < {a}")));
                }
                for label in &hom[a][b] {
                    if by_label.insert(label.clone(), morphisms.len()).is_some() {
                        return Err(bad(format!("duplicate morphism label `{label}`")));
                    }
                    morphisms.push(Morphism { src: a, dst: b, label: label.clone() });
                }
            }
        }
        starts.push(morphisms.len());
        let dim = |a: usize, b: usize| starts[a * n + b + 1] - starts[a * n + b];
        for a in 0..n {
            if id.get(a).map(Vec::len) != Some(dim(a, a)) {
                return Err(bad(format!("identity of {a} has the wrong length")));
            }
        }
        if id.len() != n {
            return Err(bad("identity table has the wrong length".into()));
        }
        let mut table = vec![Vec::new(); n * n * n];
        let mut comp = comp;
        for a in 0..n {
            for b in a..n {
                for c in b..n {
                    let (p, q) = (dim(a, b), dim(b, c));
                    let t = match comp.remove(&(a, b, c)) {
                        Some(t) => t,
                        None if p == 0 || q == 0 => vec![vec![Vec::new(); q]; p],
                        None => return Err(bad(format!("missing composition table {a},{b},{c}"))),
                    };
                    if t.len() != p || t.iter().any(|row| row.len() != q) {
                        return Err(bad(format!("composition table {a},{b},{c} has the wrong shape")));
                    }
                    let r = dim(a, c);
                    let mut clean = Vec::with_capacity(p);
                    for row in t {
                        let mut out_row = Vec::with_capacity(q);
                        for terms in row {
                            let mut acc: Terms<F> = Vec::new();
                            for (k, c) in terms {
                                if k >= r {
                                    return Err(bad(format!("coefficient index {k} out of range in {a},{b},{c}")));
                                }
                                if !c.is_zero() {
                                    acc.push((k, c));
                                }
                            }
                            acc.sort_by_key(|t| t.0);
                            out_row.push(merge_terms(acc));
                        }
                        clean.push(out_row);
                    }
                    table[(a * n + b) * n + c] = clean;
                }
            }
        }
        if let Some(((a, b, c), _)) = comp.into_iter().next() {
            return Err(bad(format!("composition table {a},{b},{c} is outside the triangle")));
        }
        let mut op_index = vec![0; morphisms.len()];
        // the opposite lists C(a,b) as C^op(L-b, L-a); replay its ordering
        let mut next = 0;
        for x in 0..n {
            for y in 0..n {
                let (a, b) = (top - y, top - x);
                for g in starts[a * n + b]..starts[a * n + b + 1] {
                    op_index[g] = next;
                    next += 1;
                }
            }
        }
        Ok(LinCat {
            field,
            top,
            name: name.into(),
            origin,
            is_opposite: false,
            morphisms,
            starts,
            comp: table,
            id,
            by_label,
            op_index,
            opposite: OnceLock::new(),
            generators: OnceLock::new(),
            radicals: (0..n).map(|_| OnceLock::new()).collect(),
            groups: (0..n).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// The top object `L`.
    pub fn top(&self) -> usize {
        self.top
    }

    pub fn num_objects(&self) -> usize {
        self.top + 1
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn origin(&self) -> &Origin {
        &self.origin
    }

    pub fn is_opposite(&self) -> bool {
        self.is_opposite
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn num_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn morphism(&self, g: usize) -> &Morphism {
        &self.morphisms[g]
    }

    pub fn label(&self, g: usize) -> &str {
        &self.morphisms[g].label
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.by_label.get(label).copied()
    }

    /// Global indices of the basis of `C(a,b)`.
    pub fn hom(&self, a: usize, b: usize) -> Range<usize> {
        let n = self.num_objects();
        self.starts[a * n + b]..self.starts[a * n + b + 1]
    }

    pub fn hom_dim(&self, a: usize, b: usize) -> usize {
        self.hom(a, b).len()
    }

    /// Position of a morphism inside its own Hom basis.
    pub fn local(&self, g: usize) -> usize {
        let m = &self.morphisms[g];
        g - self.hom(m.src, m.dst).start
    }

    /// Index of the same morphism inside [`LinCat::opposite`].
    pub fn op_index(&self, g: usize) -> usize {
        self.op_index[g]
    }

    pub fn identity(&self, a: usize) -> &[F] {
        &self.id[a]
    }

    pub fn check_object(&self, a: usize) -> Result<()> {
        if a > self.top {
            Err(Error::InvalidObject(a))
        } else {
            Ok(())
        }
    }

    /// Structure constants for `C(a,b) x C(b,c) -> C(a,c)`.
    pub fn tensor(&self, a: usize, b: usize, c: usize) -> &Tensor<F> {
        let n = self.num_objects();
        &self.comp[(a * n + b) * n + c]
    }

    /// `g_j ∘ f_i` for local indices.
    pub fn compose_basis(&self, a: usize, b: usize, c: usize, i: usize, j: usize) -> &Terms<F> {
        &self.tensor(a, b, c)[i][j]
    }

    /// `g ∘ f` for coefficient vectors `f ∈ C(a,b)` and `g ∈ C(b,c)`.
    pub fn compose(&self, a: usize, b: usize, c: usize, g: &[F], f: &[F]) -> Vec<F> {
        let mut out = vec![F::zero_in(&self.field); self.hom_dim(a, c)];
        if a > b || b > c {
            return out;
        }
        let t = self.tensor(a, b, c);
        for (i, fi) in f.iter().enumerate() {
            if fi.is_zero() {
                continue;
            }
            for (j, gj) in g.iter().enumerate() {
                if gj.is_zero() {
                    continue;
                }
                let s = fi.clone() * gj;
                for (k, c) in &t[i][j] {
                    out[*k] += s.clone() * c;
                }
            }
        }
        out
    }

    /// Matrix of `v ↦ g ∘ v` from `C(a, src g)` to `C(a, dst g)`.
    pub fn left_matrix(&self, g: usize, a: usize) -> Matrix<F> {
        let Morphism { src: b, dst: c, .. } = self.morphisms[g];
        let (p, r) = (self.hom_dim(a, b), self.hom_dim(a, c));
        let mut m = Matrix::zeros(self.field, r, p);
        if a <= b {
            let j = self.local(g);
            let t = self.tensor(a, b, c);
            for i in 0..p {
                for (k, x) in &t[i][j] {
                    m[(*k, i)] = x.clone();
                }
            }
        }
        m
    }

    /// Matrix of `v ↦ v ∘ f` from `C(dst f, c)` to `C(src f, c)`.
    pub fn right_matrix(&self, f: usize, c: usize) -> Matrix<F> {
        let Morphism { src: a, dst: b, .. } = self.morphisms[f];
        let (q, r) = (self.hom_dim(b, c), self.hom_dim(a, c));
        let mut m = Matrix::zeros(self.field, r, q);
        if b <= c {
            let i = self.local(f);
            let t = self.tensor(a, b, c);
            for j in 0..q {
                for (k, x) in &t[i][j] {
                    m[(*k, j)] = x.clone();
                }
            }
        }
        m
    }

    /// The endomorphism algebra of `a`, with `e_i e_j = e_i ∘ e_j`.
    pub fn endo_algebra(&self, a: usize) -> Algebra<F> {
        let t = self.tensor(a, a, a);
        let d = self.hom_dim(a, a);
        let table = (0..d)
            .map(|i| (0..d).map(|j| t[j][i].clone()).collect())
            .collect();
        Algebra::new(self.field, d, table, self.id[a].clone())
    }

    /// Group structure of the basis of `End(a)`, if there is one.
    pub fn group_basis(&self, a: usize) -> Option<Arc<GroupBasis>> {
        self.groups[a].get_or_init(|| self.find_group(a)).clone()
    }

    fn find_group(&self, a: usize) -> Option<Arc<GroupBasis>> {
        let d = self.hom_dim(a, a);
        let one = F::one_in(&self.field);
        let identity = self.id[a].iter().position(|x| !x.is_zero())?;
        if self.id[a][identity] != one || self.id[a].iter().filter(|x| !x.is_zero()).count() != 1 {
            return None;
        }
        let t = self.tensor(a, a, a);
        let mut mult = vec![vec![0; d]; d];
        for (i, row) in mult.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                match t[j][i].as_slice() {
                    [(k, c)] if *c == one => *slot = *k,
                    _ => return None,
                }
            }
        }
        let mut inverse = vec![usize::MAX; d];
        for i in 0..d {
            inverse[i] = (0..d).find(|&j| mult[j][i] == identity && mult[i][j] == identity)?;
        }
        Some(Arc::new(GroupBasis { mult, inverse, identity }))
    }

    /// True when `|G|` is invertible for a group basis of `End(a)`.
    pub fn averaging_group(&self, a: usize) -> Option<Arc<GroupBasis>> {
        let g = self.group_basis(a)?;
        let p = self.field.characteristic();
        if p != 0 && g.order() as u64 % p == 0 {
            return None;
        }
        Some(g)
    }

    /// A generating set of basis morphisms, chosen greedily.
    ///
    /// Pairs `(a,b)` are visited by increasing `b - a`; a basis morphism is
    /// kept when it is not already in the span of composites of earlier
    /// choices applied to identities.
    pub fn generators(&self) -> &[usize] {
        self.generators.get_or_init(|| self.find_generators())
    }

    /// Generators lying in `End(a)`.
    pub fn end_generators(&self, a: usize) -> Vec<usize> {
        self.generators()
            .iter()
            .copied()
            .filter(|&g| self.morphisms[g].src == a && self.morphisms[g].dst == a)
            .collect()
    }

    fn find_generators(&self) -> Vec<usize> {
        let n = self.num_objects();
        let mut gens: Vec<usize> = Vec::new();
        for dist in 0..n {
            for a in 0..n - dist {
                let b = a + dist;
                let range = self.hom(a, b);
                if range.is_empty() {
                    continue;
                }
                let mut span = self.closure(a, b, &gens);
                for g in range {
                    let mut e = vec![F::zero_in(&self.field); self.hom_dim(a, b)];
                    e[self.local(g)] = F::one_in(&self.field);
                    let v = Matrix::column_vector(self.field, e);
                    let cur = span.rank();
                    if span.hstack(&v).expect("same height").rank() > cur {
                        gens.push(g);
                        span = self.closure(a, b, &gens);
                    }
                }
            }
        }
        gens.sort_unstable();
        gens
    }

    /// Span in `C(a,b)` of all composites of `gens` applied to `id_a`.
    fn closure(&self, a: usize, b: usize, gens: &[usize]) -> Matrix<F> {
        let f = self.field;
        let mut spans: Vec<Matrix<F>> = Vec::with_capacity(b - a + 1);
        for c in a..=b {
            let dim = self.hom_dim(a, c);
            let mut cols: Vec<Matrix<F>> = Vec::new();
            if c == a {
                cols.push(Matrix::column_vector(f, self.id[a].clone()));
            }
            for &g in gens {
                let m = &self.morphisms[g];
                if m.dst == c && m.src >= a && m.src < c {
                    let s = &spans[m.src - a];
                    if s.cols() > 0 {
                        cols.push(&self.left_matrix(g, a) * s);
                    }
                }
            }
            let mut span = Matrix::hstack_all(f, dim, &cols)
                .expect("same height")
                .column_space_basis();
            let ends: Vec<Matrix<F>> = gens
                .iter()
                .filter(|&&g| self.morphisms[g].src == c && self.morphisms[g].dst == c)
                .map(|&g| self.left_matrix(g, a))
                .collect();
            loop {
                let mut parts = vec![span.clone()];
                parts.extend(ends.iter().map(|e| e * &span));
                let next = Matrix::hstack_all(f, dim, &parts)
                    .expect("same height")
                    .column_space_basis();
                if next.cols() == span.cols() {
                    break;
                }
                span = next;
            }
            spans.push(span);
        }
        spans.pop().unwrap_or_else(|| Matrix::zeros(f, 0, 0))
    }

    /// Checks associativity and the identity laws on every basis triple.
    pub fn validate(&self) -> Vec<Violation> {
        let n = self.num_objects();
        let mut quads = Vec::new();
        for a in 0..n {
            for b in a..n {
                for c in b..n {
                    for d in c..n {
                        quads.push((a, b, c, d));
                    }
                }
            }
        }
        let mut out: Vec<Violation> = quads
            .par_iter()
            .flat_map_iter(|&(a, b, c, d)| self.check_assoc(a, b, c, d))
            .collect();
        for a in 0..n {
            for b in a..n {
                for f in self.hom(a, b) {
                    let mut e = vec![F::zero_in(&self.field); self.hom_dim(a, b)];
                    e[self.local(f)] = F::one_in(&self.field);
                    if self.compose(a, b, b, &self.id[b], &e) != e {
                        out.push(Violation {
                            law: "left identity".into(),
                            morphisms: vec![format!("id_{b}"), self.label(f).to_string()],
                        });
                    }
                    if self.compose(a, a, b, &e, &self.id[a]) != e {
                        out.push(Violation {
                            law: "right identity".into(),
                            morphisms: vec![self.label(f).to_string(), format!("id_{a}")],
                        });
                    }
                }
            }
        }
        out
    }

    fn check_assoc(&self, a: usize, b: usize, c: usize, d: usize) -> Vec<Violation> {
        let (fb, gb, hb) = (self.hom(a, b), self.hom(b, c), self.hom(c, d));
        let mut out = Vec::new();
        if fb.is_empty() || gb.is_empty() || hb.is_empty() {
            return out;
        }
        let (gf_t, hg_t) = (self.tensor(a, b, c), self.tensor(b, c, d));
        let (left_t, right_t) = (self.tensor(a, b, d), self.tensor(a, c, d));
        let r = self.hom_dim(a, d);
        let z = F::zero_in(&self.field);
        for i in 0..fb.len() {
            for j in 0..gb.len() {
                let gf = &gf_t[i][j];
                for k in 0..hb.len() {
                    let mut lhs = vec![z.clone(); r];
                    for (m, x) in &hg_t[j][k] {
                        for (t, y) in &left_t[i][*m] {
                            lhs[*t] += x.clone() * y;
                        }
                    }
                    let mut rhs = vec![z.clone(); r];
                    for (m, x) in gf {
                        for (t, y) in &right_t[*m][k] {
                            rhs[*t] += x.clone() * y;
                        }
                    }
                    if lhs != rhs {
                        out.push(Violation {
                            law: "associativity".into(),
                            morphisms: vec![
                                self.label(hb.start + k).to_string(),
                                self.label(gb.start + j).to_string(),
                                self.label(fb.start + i).to_string(),
                            ],
                        });
                    }
                }
            }
        }
        out
    }

    /// `dim C(a,j)` for `j = a..=L`, with a verdict read off the last `window` entries.
    pub fn hom_growth(&self, a: usize, window: usize) -> Result<Growth> {
        self.check_object(a)?;
        let dims: Vec<usize> = (a..=self.top).map(|j| self.hom_dim(a, j)).collect();
        let w = window.max(1).min(dims.len());
        let tail = &dims[dims.len() - w..];
        let verdict = if tail.iter().all(|&x| x == tail[0]) {
            GrowthVerdict::Bounded(tail[0])
        } else {
            GrowthVerdict::GrowingAtHorizon
        };
        Ok(Growth { object: a, dims, window: w, verdict })
    }

    /// Columns spanning `rad C(a,b)`: everything off the diagonal, the
    /// Jacobson radical of `End(a)` on it.
    pub fn radical_basis(&self, a: usize, b: usize) -> Result<Matrix<F>> {
        self.check_object(a)?;
        self.check_object(b)?;
        if a != b {
            return Ok(Matrix::identity(self.field, self.hom_dim(a, b)));
        }
        self.radicals[a]
            .get_or_init(|| self.endo_algebra(a).radical())
            .clone()
    }

    /// Fails with [`Error::NonSemisimpleEnd`] unless every `End(a)` has zero radical.
    pub fn ensure_semisimple(&self) -> Result<()> {
        for a in 0..self.num_objects() {
            if self.radical_basis(a, a)?.cols() > 0 {
                return Err(Error::NonSemisimpleEnd(a));
            }
        }
        Ok(())
    }

    /// The opposite category, objects relabeled `a ↦ L - a`.
    ///
    /// Cached; the opposite of the opposite is this very category.
    pub fn opposite(self: &Arc<Self>) -> Arc<Self> {
        let link = self.opposite.get_or_init(|| {
            let op = Arc::new(self.build_opposite());
            let _ = op.opposite.set(Link::Back(Arc::downgrade(self)));
            Link::Owned(op)
        });
        match link {
            Link::Owned(op) => op.clone(),
            Link::Back(w) => w.upgrade().unwrap_or_else(|| Arc::new(self.build_opposite())),
        }
    }

    fn build_opposite(&self) -> Self {
        let n = self.num_objects();
        let l = self.top;
        let hom = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| {
                        self.hom(l - y, l - x)
                            .map(|g| self.morphisms[g].label.clone())
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let mut comp = HashMap::new();
        for x in 0..n {
            for y in x..n {
                for z in y..n {
                    let t = self.tensor(l - z, l - y, l - x);
                    let (p, q) = (self.hom_dim(l - y, l - x), self.hom_dim(l - z, l - y));
                    let flipped: Tensor<F> = (0..p)
                        .map(|i| (0..q).map(|j| t[j][i].clone()).collect())
                        .collect();
                    comp.insert((x, y, z), flipped);
                }
            }
        }
        let id = (0..n).map(|x| self.id[l - x].clone()).collect();
        let data = CatData { field: self.field, top: l, hom, comp, id };
        let name = match self.name.strip_suffix("^op") {
            Some(base) => base.to_string(),
            None => format!("{}^op", self.name),
        };
        let mut op = LinCat::from_data(data, name, self.origin.clone())
            .expect("the opposite of an indexed category is well formed");
        op.is_opposite = !self.is_opposite;
        op
    }

    /// Pointer equality, falling back to equality of the presentations.
    pub fn same(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }

    pub fn ensure_same(self: &Arc<Self>, other: &Arc<Self>) -> Result<()> {
        if self.same(other) {
            Ok(())
        } else {
            Err(Error::CategoryMismatch)
        }
    }
}

impl<F: Field> PartialEq for LinCat<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.top == other.top
            && self.morphisms == other.morphisms
            && self.id == other.id
            && self.comp == other.comp
    }
}

impl<F: Field> fmt::Debug for LinCat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LinCat")
            .field("name", &self.name)
            .field("field", &self.field)
            .field("top", &self.top)
            .field("morphisms", &self.morphisms.len())
            .finish()
    }
}

fn merge_terms<F: Field>(sorted: Terms<F>) -> Terms<F> {
    let mut out: Terms<F> = Vec::with_capacity(sorted.len());
    for (k, c) in sorted {
        match out.last_mut() {
            Some((j, acc)) if *j == k => *acc += c,
            _ => out.push((k, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

#[cfg(test)]
mod tests;
