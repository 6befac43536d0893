//! Named modules: the interval catalog of the linear quiver, standard test
//! families, and the `P:a` / `I:a` / `S:a` / `X:i:j` naming scheme.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};
use crate::lincat::LinCat;
use crate::modrep::Module;

/// Labeled modules, in a fixed order.
pub type Family<F> = Vec<(String, Arc<Module<F>>)>;

/// Whether every `C(a,b)` with `a ≤ b` is one-dimensional.
pub fn is_linear<F: Field>(cat: &LinCat<F>) -> bool {
    (0..cat.num_objects()).all(|a| (a..cat.num_objects()).all(|b| cat.hom_dim(a, b) == 1))
}

/// `X_ij`: `k` on `[i, j]`, every basis morphism inside acting by its
/// identity coefficient.
pub fn interval_module<F: Field>(cat: &Arc<LinCat<F>>, i: usize, j: usize) -> Result<Module<F>> {
    if !is_linear(cat) {
        return Err(Error::WrongBackend("interval modules need a linear quiver".into()));
    }
    if i > j || j > cat.top() {
        return Err(Error::InvalidModule(format!("no interval [{i}, {j}]")));
    }
    let field = cat.field();
    let dims: Vec<usize> = (0..cat.num_objects()).map(|a| usize::from(i <= a && a <= j)).collect();
    let act = cat
        .morphisms()
        .iter()
        .map(|m| {
            let mut x = Matrix::zeros(field, dims[m.dst], dims[m.src]);
            if dims[m.src] == 1 && dims[m.dst] == 1 {
                x[(0, 0)] = F::one_in(&field);
            }
            x
        })
        .collect();
    Module::new(cat.clone(), dims, act)
}

/// All `X_ij`, `0 ≤ i ≤ j ≤ L`, ordered by `(i, j)`.
pub fn linear_catalog<F: Field>(cat: &Arc<LinCat<F>>) -> Result<Family<F>> {
    let l = cat.top();
    let mut out = Vec::with_capacity((l + 1) * (l + 2) / 2);
    for i in 0..=l {
        for j in i..=l {
            out.push((format!("X:{i}:{j}"), Arc::new(interval_module(cat, i, j)?)));
        }
    }
    Ok(out)
}

/// Representables, injectives and (where canonical) simples at every object.
pub fn standard_family<F: Field>(cat: &Arc<LinCat<F>>) -> Result<Family<F>> {
    let mut out = Vec::new();
    for a in 0..=cat.top() {
        out.push((format!("P:{a}"), Arc::new(Module::representable(cat, a)?)));
    }
    for a in 0..=cat.top() {
        out.push((format!("I:{a}"), Arc::new(Module::injective(cat, a)?)));
    }
    for a in 0..=cat.top() {
        if let Ok(s) = Module::simple(cat, a) {
            out.push((format!("S:{a}"), Arc::new(s)));
        }
    }
    Ok(out)
}

/// The catalog for linear quivers, the standard family otherwise.
pub fn corpus<F: Field>(cat: &Arc<LinCat<F>>) -> Result<Family<F>> {
    if is_linear(cat) {
        linear_catalog(cat)
    } else {
        standard_family(cat)
    }
}

fn parse_index(s: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::Parse(format!("expected an object index, found {s:?}")))
}

/// Resolves `P:a`, `I:a`, `S:a` or `X:i:j`.
pub fn named_module<F: Field>(cat: &Arc<LinCat<F>>, name: &str) -> Result<Module<F>> {
    let parts: Vec<&str> = name.split(':').collect();
    match parts.as_slice() {
        ["P", a] => Module::representable(cat, parse_index(a)?),
        ["I", a] => Module::injective(cat, parse_index(a)?),
        ["S", a] => Module::simple(cat, parse_index(a)?),
        ["X", i, j] => interval_module(cat, parse_index(i)?, parse_index(j)?),
        _ => Err(Error::Parse(format!("unknown module name {name:?}"))),
    }
}
