//! Generators of category presentations: acyclic quivers, FI_G and VI.

mod fi;
mod group;
mod quiver;
mod vi;

use std::path::Path;

use crate::error::{Error, Result};
use crate::exactla::{Field, FieldSpec};
use crate::lincat::LinCat;

pub use fi::{fi_category, fi_g_category, injections};
pub use group::GroupTable;
pub use quiver::{linear, quiver_category, star_ray, Arrow, QuiverSpec};
pub use vi::vi_category;

/// Largest Hom dimension any builtin generator will produce.
pub const MAX_HOM_DIM: usize = 10_000;

fn parse_num(s: &str, what: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| Error::Parse(format!("`{s}` is not a valid {what}")))
}

/// Builds a category from a builtin name (`linear:<L>`, `star_ray:<L>`,
/// `fi:<L>`, `fi_g:<L>:<group-file>`, `vi:<L>:<q>`) or from a file holding
/// category JSON or quiver text.
pub fn build_category<F: Field>(spec: &str, field: FieldSpec) -> Result<LinCat<F>> {
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        ["linear", l] => Ok(linear(parse_num(l, "truncation level")?, field)?),
        ["star_ray", l] => Ok(star_ray(parse_num(l, "truncation level")?, field)?),
        ["fi", l] => fi_category(parse_num(l, "truncation level")?, field),
        ["fi_g", l, group] => {
            let g = match group.strip_prefix('C').map(|n| n.parse::<usize>()) {
                Some(Ok(n)) if !Path::new(group).exists() => GroupTable::cyclic(n)?,
                _ => GroupTable::from_file(Path::new(group))?,
            };
            fi_g_category(parse_num(l, "truncation level")?, &g, field)
        }
        ["vi", l, q] => vi_category(parse_num(l, "truncation level")?, parse_num(q, "field size")? as u64, field),
        _ => {
            let path = Path::new(spec);
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("cannot read category `{spec}`: {e}")))?;
            let name = path
                .file_stem()
                .and_then(|s| s.to_str())
                .unwrap_or(spec)
                .to_string();
            if text.trim_start().starts_with('{') {
                let value: serde_json::Value =
                    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{spec}: {e}")))?;
                let cat = LinCat::from_json(&value, &name)?;
                let violations = cat.validate();
                if let Some(v) = violations.first() {
                    return Err(Error::InvalidCategory(format!(
                        "{v} ({} violations in total)",
                        violations.len()
                    )));
                }
                Ok(cat)
            } else {
                let q = QuiverSpec::parse(&text)?;
                quiver_category(&q, field, &name)
            }
        }
    }
}

#[cfg(test)]
mod tests;
