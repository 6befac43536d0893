//! FI_G: finite sets `[n]`, morphisms `(f, g)` with `f` injective and `g: [m] -> G`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exactla::{Field, FieldSpec};
use crate::lincat::{CatData, LinCat, Origin};

use super::{GroupTable, MAX_HOM_DIM};

/// Injections `[m] -> [n]` as value tuples, in lexicographic order.
pub fn injections(m: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(m: usize, n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(m, n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    if m <= n {
        go(m, n, &mut Vec::new(), &mut vec![false; n], &mut out);
    }
    out
}

/// All words of length `m` over `0..k`, lexicographically.
fn words(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..k).map(move |x| {
                    let mut w = w.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

fn hom_dim(m: usize, n: usize, g: usize) -> Option<usize> {
    if m > n {
        return Some(0);
    }
    let mut d = 1usize;
    for i in 0..m {
        d = d.checked_mul(n - i)?.checked_mul(g)?;
    }
    Some(d)
}

fn join(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

pub fn fi_category<F: Field>(top: usize, field: FieldSpec) -> Result<LinCat<F>> {
    fi_build(top, &GroupTable::trivial(), field, format!("fi:{top}"))
}

pub fn fi_g_category<F: Field>(top: usize, g: &GroupTable, field: FieldSpec) -> Result<LinCat<F>> {
    fi_build(top, g, field, format!("fi_g:{top}:{}", g.order))
}

fn fi_build<F: Field>(top: usize, g: &GroupTable, field: FieldSpec, name: String) -> Result<LinCat<F>> {
    let k = g.order;
    let mut largest_end = 0;
    for n in 0..=top {
        for m in 0..=n {
            hom_dim(m, n, k).filter(|&d| d <= MAX_HOM_DIM).ok_or_else(|| {
                Error::ScaleExceeded(format!("dim C({m},{n}) exceeds {MAX_HOM_DIM}"))
            })?;
        }
        largest_end = largest_end.max(hom_dim(n, n, k).unwrap_or(usize::MAX));
    }
    if !field.inverts_up_to(largest_end as u64) {
        return Err(Error::CharacteristicUnsupported(format!(
            "{field}: endomorphism algebras up to dimension {largest_end} need characteristic 0 or p > {largest_end}"
        )));
    }
    let n_obj = top + 1;
    // basis[m][n]: (injection, group word)
    let mut basis = vec![vec![Vec::new(); n_obj]; n_obj];
    let mut index: Vec<Vec<HashMap<(Vec<usize>, Vec<usize>), usize>>> =
        vec![vec![HashMap::new(); n_obj]; n_obj];
    let mut hom = vec![vec![Vec::new(); n_obj]; n_obj];
    for m in 0..n_obj {
        for n in m..n_obj {
            let ws = words(m, k);
            for f in injections(m, n) {
                for w in &ws {
                    index[m][n].insert((f.clone(), w.clone()), basis[m][n].len());
                    let label = if k == 1 {
                        format!("{m}>{n}:{}", join(&f))
                    } else {
                        format!("{m}>{n}:{}|{}", join(&f), join(w))
                    };
                    hom[m][n].push(label);
                    basis[m][n].push((f.clone(), w.clone()));
                }
            }
        }
    }
    let one = F::one_in(&field);
    let mut comp = HashMap::new();
    for a in 0..n_obj {
        for b in a..n_obj {
            for c in b..n_obj {
                let t: Vec<Vec<_>> = basis[a][b]
                    .iter()
                    .map(|(f, gf)| {
                        basis[b][c]
                            .iter()
                            .map(|(h, gh)| {
                                // (h, gh) ∘ (f, gf) = (h∘f, x ↦ gh(f(x)) · gf(x))
                                let hf: Vec<usize> = f.iter().map(|&x| h[x]).collect();
                                let w: Vec<usize> =
                                    (0..a).map(|x| g.mul(gh[f[x]], gf[x])).collect();
                                vec![(index[a][c][&(hf, w)], one.clone())]
                            })
                            .collect()
                    })
                    .collect();
                comp.insert((a, b, c), t);
            }
        }
    }
    let id = (0..n_obj)
        .map(|n| {
            let e = index[n][n][&((0..n).collect(), vec![g.identity; n])];
            let mut v = vec![F::zero_in(&field); basis[n][n].len()];
            v[e] = one.clone();
            v
        })
        .collect();
    LinCat::from_data(CatData { field, top, hom, comp, id }, name, Origin::Fi { group_order: k })
}
