//! DOT rendering of the truncated AR quiver of a linear quiver.

use std::collections::BTreeSet;
use std::fmt::Write;
use std::sync::Arc;

use arx_core::artheory::{almost_split, is_linear, linear_catalog, Family};
use arx_core::modrep::{decompose, find_iso, minimal_presentation, Module, DEFAULT_BUDGET};
use arx_core::{Error, Field, LinCat, Result};

fn node(label: &str) -> String {
    label.replace(':', "_")
}

fn find<F: Field>(m: &Arc<Module<F>>, family: &Family<F>) -> Result<Option<usize>> {
    for (k, (_, x)) in family.iter().enumerate() {
        if x.dims() == m.dims() && find_iso(x, m, DEFAULT_BUDGET)?.is_iso() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Nodes are the catalog modules; solid edges run through the middle terms
/// of almost split sequences, dashed edges go from `X` to `τX`.
pub fn arquiver<F: Field>(cat: &Arc<LinCat<F>>, margin: usize) -> Result<String> {
    if !is_linear(cat) {
        return Err(Error::WrongBackend("the AR quiver diagram needs a linear quiver".into()));
    }
    let family = linear_catalog(cat)?;
    let mut solid = BTreeSet::new();
    let mut dashed = BTreeSet::new();
    for (k, (_, m)) in family.iter().enumerate() {
        if minimal_presentation(m)?.cover.is_projective() {
            continue;
        }
        let a = almost_split(m, margin)?;
        let left = find(&a.seq.a, &family)?.ok_or_else(|| Error::Internal("translate outside the catalog".into()))?;
        dashed.insert((k, left));
        for piece in decompose(&a.seq.e, DEFAULT_BUDGET)? {
            let y = find(&piece.module, &family)?.ok_or_else(|| Error::Internal("middle term outside the catalog".into()))?;
            solid.insert((left, y));
            solid.insert((y, k));
        }
    }
    let mut out = String::new();
    let _ = writeln!(out, "digraph arquiver {{");
    let _ = writeln!(out, "  rankdir=LR;");
    let _ = writeln!(out, "  node [shape=box];");
    for (label, m) in &family {
        let dims: Vec<String> = m.dims().iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "  {} [label=\"{}\\n{}\"];", node(label), label, dims.join(""));
    }
    for (s, t) in &solid {
        let _ = writeln!(out, "  {} -> {};", node(&family[*s].0), node(&family[*t].0));
    }
    for (s, t) in &dashed {
        let _ = writeln!(out, "  {} -> {} [style=dashed];", node(&family[*s].0), node(&family[*t].0));
    }
    out.push_str("}\n");
    Ok(out)
}
