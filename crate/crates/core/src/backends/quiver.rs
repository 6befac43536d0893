//! Path categories of finite acyclic quivers.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::exactla::{Field, FieldSpec};
use crate::lincat::{CatData, LinCat, Origin};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub src: usize,
    pub dst: usize,
    pub label: String,
}

/// Vertices `0..=top`; every arrow goes from a smaller to a larger vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverSpec {
    pub top: usize,
    pub arrows: Vec<Arrow>,
}

impl QuiverSpec {
    pub fn new(top: usize, arrows: Vec<Arrow>) -> Result<Self> {
        let mut seen = HashSet::new();
        for a in &arrows {
            if a.src >= a.dst {
                return Err(Error::InvalidQuiver(format!(
                    "arrow `{}` goes from {} to {}; sources must be smaller than targets",
                    a.label, a.src, a.dst
                )));
            }
            if a.dst > top {
                return Err(Error::InvalidQuiver(format!("arrow `{}` leaves the truncation", a.label)));
            }
            if a.label.is_empty() || a.label.contains(['.', ',', ' ']) {
                return Err(Error::InvalidQuiver(format!("bad arrow label `{}`", a.label)));
            }
            if !seen.insert(a.label.clone()) {
                return Err(Error::InvalidQuiver(format!("duplicate arrow label `{}`", a.label)));
            }
        }
        Ok(QuiverSpec { top, arrows })
    }

    /// One arrow per line, `src -> dst : label`; `#` starts a comment.
    /// A line holding a single number raises the top vertex.
    pub fn parse(text: &str) -> Result<Self> {
        let mut arrows = Vec::new();
        let mut top = 0;
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = || Error::Parse(format!("line {}: expected `src -> dst : label`", n + 1));
            if let Ok(v) = line.parse::<usize>() {
                top = top.max(v);
                continue;
            }
            let (ends, label) = line.split_once(':').ok_or_else(bad)?;
            let (s, d) = ends.split_once("->").ok_or_else(bad)?;
            let src: usize = s.trim().parse().map_err(|_| bad())?;
            let dst: usize = d.trim().parse().map_err(|_| bad())?;
            top = top.max(src).max(dst);
            arrows.push(Arrow { src, dst, label: label.trim().to_string() });
        }
        QuiverSpec::new(top, arrows)
    }

    /// All paths `a -> b`, as arrow indices in traversal order, sorted by
    /// their sequences of arrow labels.
    pub fn paths(&self, a: usize, b: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut stack = vec![(a, Vec::new())];
        while let Some((v, path)) = stack.pop() {
            if v == b {
                out.push(path.clone());
            }
            if v >= b {
                continue;
            }
            for (i, ar) in self.arrows.iter().enumerate() {
                if ar.src == v && ar.dst <= b {
                    let mut p = path.clone();
                    p.push(i);
                    stack.push((ar.dst, p));
                }
            }
        }
        out.sort_by(|p, q| self.compare(p, q));
        out
    }

    fn compare(&self, p: &[usize], q: &[usize]) -> Ordering {
        let lp = p.iter().map(|&i| self.arrows[i].label.as_str());
        let lq = q.iter().map(|&i| self.arrows[i].label.as_str());
        lp.cmp(lq)
    }

    fn path_label(&self, a: usize, path: &[usize]) -> String {
        if path.is_empty() {
            format!("e{a}")
        } else {
            path.iter()
                .map(|&i| self.arrows[i].label.as_str())
                .collect::<Vec<_>>()
                .join(".")
        }
    }
}

/// The k-linearization of a quiver: paths as basis, concatenation as composition.
pub fn quiver_category<F: Field>(q: &QuiverSpec, field: FieldSpec, name: &str) -> Result<LinCat<F>> {
    let n = q.top + 1;
    let mut paths = vec![vec![Vec::new(); n]; n];
    let mut index: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
    let mut hom = vec![vec![Vec::new(); n]; n];
    for a in 0..n {
        for b in a..n {
            paths[a][b] = q.paths(a, b);
            for (k, p) in paths[a][b].iter().enumerate() {
                index.insert((a, p.clone()), k);
                hom[a][b].push(q.path_label(a, p));
            }
        }
    }
    let one = F::one_in(&field);
    let mut comp = HashMap::new();
    for a in 0..n {
        for b in a..n {
            for c in b..n {
                let t: Vec<Vec<_>> = paths[a][b]
                    .iter()
                    .map(|f| {
                        paths[b][c]
                            .iter()
                            .map(|g| {
                                let mut fg = f.clone();
                                fg.extend_from_slice(g);
                                vec![(index[&(a, fg)], one.clone())]
                            })
                            .collect()
                    })
                    .collect();
                comp.insert((a, b, c), t);
            }
        }
    }
    let id = (0..n).map(|_| vec![one.clone()]).collect();
    LinCat::from_data(CatData { field, top: q.top, hom, comp, id }, name, Origin::Quiver)
        .map_err(|e| match e {
            Error::InvalidCategory(m) => Error::InvalidQuiver(m),
            e => e,
        })
}

/// `0 -> 1 -> ... -> L` with arrows `a1, a2, ...`.
pub fn linear<F: Field>(top: usize, field: FieldSpec) -> Result<LinCat<F>> {
    let arrows = (1..=top)
        .map(|i| Arrow { src: i - 1, dst: i, label: format!("a{i}") })
        .collect();
    quiver_category(&QuiverSpec::new(top, arrows)?, field, &format!("linear:{top}"))
}

/// Arrows `alpha_i: 0 -> i` for `i >= 1` and `beta_i: i-1 -> i` for `i >= 2`.
pub fn star_ray<F: Field>(top: usize, field: FieldSpec) -> Result<LinCat<F>> {
    let mut arrows: Vec<Arrow> = (1..=top)
        .map(|i| Arrow { src: 0, dst: i, label: format!("alpha{i}") })
        .collect();
    arrows.extend((2..=top).map(|i| Arrow { src: i - 1, dst: i, label: format!("beta{i}") }));
    quiver_category(&QuiverSpec::new(top, arrows)?, field, &format!("star_ray:{top}"))
}
