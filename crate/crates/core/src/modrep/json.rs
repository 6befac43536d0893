//! Module JSON: `{"cat": <hash or inline category>, "dims": [..], "act": {label: matrix}}`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};
use crate::lincat::LinCat;

use super::module::Module;

impl<F: Field> Module<F> {
    /// Serializes with the category's content hash; matrices with an empty
    /// side are omitted.
    pub fn to_json(&self) -> Value {
        let cat = self.cat();
        let act: BTreeMap<&str, Value> = (0..cat.num_morphisms())
            .filter(|&g| self.act(g).rows() > 0 && self.act(g).cols() > 0)
            .map(|g| (cat.label(g), self.act(g).to_json()))
            .collect();
        json!({ "cat": cat.content_hash(), "dims": self.dims(), "act": act })
    }

    /// Parses a module over `cat`; the `cat` field must name the same category.
    pub fn from_json(cat: &Arc<LinCat<F>>, value: &Value) -> Result<Self> {
        let bad = |m: &str| Error::InvalidModule(m.to_string());
        let obj = value.as_object().ok_or_else(|| bad("module must be an object"))?;
        match obj.get("cat") {
            None => {}
            Some(Value::String(h)) => {
                if *h != cat.content_hash() {
                    return Err(Error::CategoryMismatch);
                }
            }
            Some(inline @ Value::Object(_)) => {
                if LinCat::<F>::from_json(inline, cat.name())? != **cat {
                    return Err(Error::CategoryMismatch);
                }
            }
            Some(_) => return Err(bad("`cat` must be a hash or a category")),
        }
        let dims: Vec<usize> = obj
            .get("dims")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing `dims`"))?
            .iter()
            .map(|d| d.as_u64().map(|x| x as usize).ok_or_else(|| bad("dims must be integers")))
            .collect::<Result<_>>()?;
        if dims.len() != cat.num_objects() {
            return Err(bad("one dimension per object is required"));
        }
        let field = cat.field();
        let mut act: Vec<Matrix<F>> = cat
            .morphisms()
            .iter()
            .map(|m| Matrix::zeros(field, dims[m.dst], dims[m.src]))
            .collect();
        if let Some(entries) = obj.get("act") {
            let entries = entries.as_object().ok_or_else(|| bad("`act` must be an object"))?;
            for (label, m) in entries {
                let g = cat
                    .index_of(label)
                    .ok_or_else(|| Error::InvalidModule(format!("unknown morphism `{label}`")))?;
                let mo = cat.morphism(g);
                act[g] = Matrix::from_json(field, m, dims[mo.dst], dims[mo.src])?;
            }
        }
        Module::new(cat.clone(), dims, act)
    }
}
