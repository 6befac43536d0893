//! VI over a small prime field: `F_q^n` with injective linear maps.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exactla::{Field, FieldSpec};
use crate::lincat::{CatData, LinCat, Origin};

use super::MAX_HOM_DIM;

/// `n x m` matrix over `F_q` stored column by column.
type Cols = Vec<Vec<u64>>;

fn vectors(n: usize, q: u64) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..q).map(move |x| {
                    let mut v = v.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

fn rank(cols: &Cols, n: usize, q: u64) -> usize {
    let mut rows: Vec<Vec<u64>> = (0..n).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
    let m = cols.len();
    let mut r = 0;
    for c in 0..m {
        let Some(p) = (r..n).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, p);
        let inv = (1..q).find(|x| x * rows[r][c] % q == 1).expect("prime field");
        for x in rows[r].iter_mut() {
            *x = *x * inv % q;
        }
        for i in 0..n {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..m {
                    rows[i][j] = (rows[i][j] + q * q - f * rows[r][j] % q) % q;
                }
            }
        }
        r += 1;
    }
    r
}

/// Injective maps `F_q^m -> F_q^n`, lexicographic in their columns.
fn injective_maps(m: usize, n: usize, q: u64) -> Vec<Cols> {
    let vs = vectors(n, q);
    let mut out: Vec<Cols> = vec![Vec::new()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|cols| {
                vs.iter().filter_map(move |v| {
                    let mut c = cols.clone();
                    c.push(v.clone());
                    (rank(&c, n, q) == c.len()).then_some(c)
                })
            })
            .collect();
    }
    out
}

fn hom_dim(m: usize, n: usize, q: u64) -> u64 {
    (0..m).map(|i| q.pow(n as u32) - q.pow(i as u32)).product()
}

pub fn vi_category<F: Field>(top: usize, q: u64, field: FieldSpec) -> Result<LinCat<F>> {
    if q != 2 && q != 3 {
        return Err(Error::ScaleExceeded(format!("VI is supported for q in {{2, 3}}, not {q}")));
    }
    if top > 3 {
        return Err(Error::ScaleExceeded(format!("VI is supported up to L = 3, not {top}")));
    }
    let largest = (0..=top).map(|n| hom_dim(n, n, q)).max().unwrap_or(1);
    let widest = (0..=top)
        .flat_map(|n| (0..=n).map(move |m| hom_dim(m, n, q)))
        .max()
        .unwrap_or(1);
    if widest > MAX_HOM_DIM as u64 {
        return Err(Error::ScaleExceeded(format!(
            "VI with q = {q}, L = {top} has a Hom space of dimension {widest}"
        )));
    }
    if !field.inverts_up_to(largest) {
        return Err(Error::CharacteristicUnsupported(format!(
            "{field}: endomorphism algebras up to dimension {largest} need characteristic 0 or p > {largest}"
        )));
    }
    let n_obj = top + 1;
    let mut basis = vec![vec![Vec::new(); n_obj]; n_obj];
    let mut index: Vec<Vec<HashMap<Cols, usize>>> = vec![vec![HashMap::new(); n_obj]; n_obj];
    let mut hom = vec![vec![Vec::new(); n_obj]; n_obj];
    for m in 0..n_obj {
        for n in m..n_obj {
            for (k, cols) in injective_maps(m, n, q).into_iter().enumerate() {
                let body: Vec<String> = cols
                    .iter()
                    .map(|c| c.iter().map(u64::to_string).collect::<String>())
                    .collect();
                hom[m][n].push(format!("{m}>{n}:{}", body.join(",")));
                index[m][n].insert(cols.clone(), k);
                basis[m][n].push(cols);
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
                    .map(|f: &Cols| {
                        basis[b][c]
                            .iter()
                            .map(|g: &Cols| {
                                // column j of g·f is g applied to column j of f
                                let gf: Cols = f
                                    .iter()
                                    .map(|fc| {
                                        (0..c)
                                            .map(|i| {
                                                fc.iter()
                                                    .enumerate()
                                                    .map(|(t, x)| g[t][i] * x)
                                                    .sum::<u64>()
                                                    % q
                                            })
                                            .collect()
                                    })
                                    .collect();
                                vec![(index[a][c][&gf], one.clone())]
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
            let e: Cols = (0..n).map(|j| (0..n).map(|i| u64::from(i == j)).collect()).collect();
            let mut v = vec![F::zero_in(&field); basis[n][n].len()];
            v[index[n][n][&e]] = one.clone();
            v
        })
        .collect();
    LinCat::from_data(CatData { field, top, hom, comp, id }, format!("vi:{top}:{q}"), Origin::Vi { q })
}
