//! Category JSON: `{field, L, hom{"a,b"}, comp{"a,b,c"}, id{"a"}}`.

use std::collections::{BTreeMap, HashMap};

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::exactla::{Field, FieldSpec};

use super::{CatData, LinCat, Origin, Tensor};

fn parse_err(m: impl Into<String>) -> Error {
    Error::InvalidCategory(m.into())
}

fn scalar<F: Field>(field: &FieldSpec, v: &Value) -> Result<F> {
    match v {
        Value::String(s) => F::parse_in(field, s),
        Value::Number(n) => F::parse_in(field, &n.to_string()),
        _ => Err(parse_err(format!("expected a scalar, got {v}"))),
    }
}

fn key_indices(key: &str, count: usize) -> Result<Vec<usize>> {
    let parts: Vec<usize> = key
        .split(',')
        .map(|p| p.trim().parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| parse_err(format!("bad key `{key}`")))?;
    if parts.len() != count {
        return Err(parse_err(format!("key `{key}` needs {count} indices")));
    }
    Ok(parts)
}

impl<F: Field> LinCat<F> {
    /// Serializes with sorted keys; empty Hom spaces are omitted.
    pub fn to_json(&self) -> Value {
        let n = self.num_objects();
        let mut hom = BTreeMap::new();
        for a in 0..n {
            for b in a..n {
                let r = self.hom(a, b);
                if !r.is_empty() {
                    let labels: Vec<&str> = r.map(|g| self.label(g)).collect();
                    hom.insert(format!("{a},{b}"), json!(labels));
                }
            }
        }
        let mut comp = BTreeMap::new();
        for a in 0..n {
            for b in a..n {
                for c in b..n {
                    let (p, q, r) = (self.hom_dim(a, b), self.hom_dim(b, c), self.hom_dim(a, c));
                    if p == 0 || q == 0 {
                        continue;
                    }
                    let t = self.tensor(a, b, c);
                    let rows: Vec<Value> = (0..p)
                        .map(|i| {
                            let row: Vec<Value> = (0..q)
                                .map(|j| {
                                    let mut v = vec![F::zero_in(&self.field); r];
                                    for (k, x) in &t[i][j] {
                                        v[*k] = x.clone();
                                    }
                                    Value::Array(
                                        v.iter().map(|x| Value::String(x.render(&self.field))).collect(),
                                    )
                                })
                                .collect();
                            Value::Array(row)
                        })
                        .collect();
                    comp.insert(format!("{a},{b},{c}"), Value::Array(rows));
                }
            }
        }
        let id: BTreeMap<String, Value> = (0..n)
            .map(|a| {
                let v: Vec<Value> = self
                    .identity(a)
                    .iter()
                    .map(|x| Value::String(x.render(&self.field)))
                    .collect();
                (a.to_string(), Value::Array(v))
            })
            .collect();
        json!({
            "field": serde_json::to_value(self.field).expect("field serializes"),
            "L": self.top,
            "hom": hom,
            "comp": comp,
            "id": id,
        })
    }

    /// SHA-256 of the compact serialization, as lowercase hex.
    pub fn content_hash(&self) -> String {
        let bytes = serde_json::to_vec(&self.to_json()).expect("json serializes");
        Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Parses a category; the result is tagged as user supplied.
    pub fn from_json(value: &Value, name: &str) -> Result<Self> {
        let obj = value.as_object().ok_or_else(|| parse_err("category must be an object"))?;
        let field: FieldSpec = serde_json::from_value(
            obj.get("field").cloned().ok_or_else(|| parse_err("missing `field`"))?,
        )
        .map_err(|e| parse_err(format!("bad field: {e}")))?;
        field.check()?;
        let top = obj
            .get("L")
            .and_then(Value::as_u64)
            .ok_or_else(|| parse_err("missing or bad `L`"))? as usize;
        let n = top + 1;
        let empty = Map::new();
        let section = |k: &str| -> Result<&Map<String, Value>> {
            match obj.get(k) {
                None => Ok(&empty),
                Some(Value::Object(m)) => Ok(m),
                Some(_) => Err(parse_err(format!("`{k}` must be an object"))),
            }
        };
        let mut hom = vec![vec![Vec::new(); n]; n];
        for (key, labels) in section("hom")? {
            let ix = key_indices(key, 2)?;
            let (a, b) = (ix[0], ix[1]);
            if a >= n || b >= n {
                return Err(Error::InvalidObject(a.max(b)));
            }
            let labels = labels
                .as_array()
                .ok_or_else(|| parse_err(format!("hom `{key}` must be a list")))?;
            hom[a][b] = labels
                .iter()
                .map(|l| l.as_str().map(str::to_string).ok_or_else(|| parse_err("labels must be strings")))
                .collect::<Result<_>>()?;
        }
        let mut comp: HashMap<(usize, usize, usize), Tensor<F>> = HashMap::new();
        for (key, rows) in section("comp")? {
            let ix = key_indices(key, 3)?;
            let (a, b, c) = (ix[0], ix[1], ix[2]);
            if a >= n || b >= n || c >= n {
                return Err(Error::InvalidObject(a.max(b).max(c)));
            }
            let rows = rows.as_array().ok_or_else(|| parse_err(format!("comp `{key}` must be a list")))?;
            let mut t = Vec::with_capacity(rows.len());
            for row in rows {
                let row = row.as_array().ok_or_else(|| parse_err(format!("comp `{key}` rows must be lists")))?;
                let mut out = Vec::with_capacity(row.len());
                for v in row {
                    let v = v.as_array().ok_or_else(|| parse_err(format!("comp `{key}` entries must be lists")))?;
                    if v.len() != hom[a][c].len() {
                        return Err(parse_err(format!("comp `{key}` vectors must have length dim C({a},{c})")));
                    }
                    let mut terms = Vec::new();
                    for (k, x) in v.iter().enumerate() {
                        terms.push((k, scalar::<F>(&field, x)?));
                    }
                    out.push(terms);
                }
                t.push(out);
            }
            comp.insert((a, b, c), t);
        }
        let ids = section("id")?;
        let mut id = Vec::with_capacity(n);
        for a in 0..n {
            let v = match ids.get(&a.to_string()) {
                Some(Value::Array(v)) => v.iter().map(|x| scalar::<F>(&field, x)).collect::<Result<Vec<F>>>()?,
                Some(_) => return Err(parse_err(format!("id `{a}` must be a list"))),
                None if hom[a][a].is_empty() => Vec::new(),
                None => return Err(parse_err(format!("missing identity of {a}"))),
            };
            id.push(v);
        }
        LinCat::from_data(CatData { field, top, hom, comp, id }, name, Origin::UserSupplied)
    }
}
