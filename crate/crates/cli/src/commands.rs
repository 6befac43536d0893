use std::path::Path;
use std::sync::Arc;

use serde_json::{json, Value};

use arx_core::artheory::{
    almost_split, check_almost_split, classify_gar, corpus, ext1, standard_family, tau, tau_minus, Family, Translation,
};
use arx_core::backends::build_category;
use arx_core::modrep::{decompose, find_iso, hom_space, Module, DEFAULT_BUDGET};
use arx_core::suites::run_suite;
use arx_core::{Error, Field, FieldSpec, LinCat, Result};

use crate::{CatCmd, Cli, Command, DotCmd, ModCmd};

pub struct Output {
    pub json: Value,
    /// Human rendering; `None` means the JSON is printed either way.
    pub table: Option<String>,
    /// Printed verbatim in both modes (DOT).
    pub raw: Option<String>,
    pub status: u8,
    /// Extra lines for stderr.
    pub notes: Vec<String>,
}

impl Output {
    fn json(json: Value, table: String) -> Self {
        Output { json, table: Some(table), raw: None, status: 0, notes: Vec::new() }
    }

    pub fn render(&self, pretty: bool) -> String {
        if let Some(raw) = &self.raw {
            return raw.clone();
        }
        match (&self.table, pretty) {
            (Some(t), true) => t.clone(),
            _ => format!("{}\n", serde_json::to_string_pretty(&self.json).expect("json values serialize")),
        }
    }
}

pub fn run<F: Field>(cli: &Cli, field: FieldSpec) -> Result<Output> {
    match &cli.command {
        Command::Cat(c) => cat_cmd::<F>(cli, c, field),
        Command::Mod(c) => {
            let cat = Arc::new(build_category::<F>(&cli.cat, field)?);
            mod_cmd(&cat, c, cli.margin)
        }
        Command::Verify { suite } => {
            let cat = Arc::new(build_category::<F>(&cli.cat, field)?);
            verify(&cat, suite, cli.margin)
        }
        Command::Dot(DotCmd::Arquiver) => {
            let cat = Arc::new(build_category::<F>(&cli.cat, field)?);
            let text = crate::dot::arquiver(&cat, cli.margin)?;
            Ok(Output { json: Value::Null, table: None, raw: Some(text), status: 0, notes: Vec::new() })
        }
    }
}

fn cat_cmd<F: Field>(cli: &Cli, c: &CatCmd, field: FieldSpec) -> Result<Output> {
    let pick = |s: &Option<String>| s.clone().unwrap_or_else(|| cli.cat.clone());
    match c {
        CatCmd::Build { spec } => {
            let cat = build_category::<F>(&pick(spec), field)?;
            Ok(Output { json: cat.to_json(), table: None, raw: None, status: 0, notes: Vec::new() })
        }
        CatCmd::Validate { spec } => validate::<F>(&pick(spec), field),
        CatCmd::Growth { spec } => {
            let cat = build_category::<F>(&pick(spec), field)?;
            let rows = (0..cat.num_objects())
                .map(|a| cat.hom_growth(a, cli.margin))
                .collect::<Result<Vec<_>>>()?;
            let mut table = format!("{} (window {})\n", cat.name(), cli.margin);
            for g in &rows {
                let dims: Vec<String> = g.dims.iter().map(ToString::to_string).collect();
                table.push_str(&format!("{:>3}: {}  {:?}\n", g.object, dims.join(" "), g.verdict));
            }
            Ok(Output::json(json!({ "category": cat.name(), "growth": rows }), table))
        }
    }
}

/// Category JSON files are parsed without the law check so that every
/// violation can be listed.
fn validate<F: Field>(spec: &str, field: FieldSpec) -> Result<Output> {
    let path = Path::new(spec);
    let cat = match std::fs::read_to_string(path) {
        Ok(text) if text.trim_start().starts_with('{') => {
            let value: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{spec}: {e}")))?;
            let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or(spec);
            LinCat::<F>::from_json(&value, name)?
        }
        _ => build_category::<F>(spec, field)?,
    };
    let violations = cat.validate();
    let mut table = String::new();
    if violations.is_empty() {
        table.push_str("Ok\n");
    }
    for v in &violations {
        table.push_str(&format!("{v}\n"));
    }
    let status = if violations.is_empty() { 0 } else { 2 };
    Ok(Output {
        json: json!({ "category": cat.name(), "ok": violations.is_empty(), "violations": violations }),
        table: Some(table),
        raw: None,
        status,
        notes: Vec::new(),
    })
}

fn load<F: Field>(cat: &Arc<LinCat<F>>, name: &str) -> Result<Arc<Module<F>>> {
    let path = Path::new(name);
    let m = if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {name}: {e}")))?;
        let value: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{name}: {e}")))?;
        Module::from_json(cat, &value)?
    } else {
        arx_core::artheory::named_module(cat, name)?
    };
    Ok(Arc::new(m))
}

/// Catalog label of a module isomorphic to `m`, if any.
fn identify<F: Field>(m: &Arc<Module<F>>, family: &Family<F>) -> Result<Option<String>> {
    if m.is_zero() {
        return Ok(Some("0".into()));
    }
    for (label, x) in family {
        if x.dims() == m.dims() && find_iso(x, m, DEFAULT_BUDGET)?.is_iso() {
            return Ok(Some(label.clone()));
        }
    }
    Ok(None)
}

fn name_of(id: &Option<String>, m: &Module<impl Field>) -> String {
    id.clone().unwrap_or_else(|| format!("{:?}", m.dims()))
}

fn describe<F: Field>(m: &Arc<Module<F>>, family: &Family<F>) -> Result<Value> {
    Ok(json!({ "dims": m.dims(), "identified_as": identify(m, family)?, "module": m.to_json() }))
}

fn translation<F: Field>(what: &str, arg: &str, t: &Translation<F>, family: &Family<F>) -> Result<Output> {
    let id = identify(&t.module, family)?;
    let table = format!(
        "{what} {arg} = {}  dims {:?}{}{}\n",
        name_of(&id, &t.module),
        t.module.dims(),
        t.flag.map(|f| format!("  ({f:?})")).unwrap_or_default(),
        if t.margin_warning { "  [margin warning]" } else { "" }
    );
    let json = json!({
        "input": arg,
        "dims": t.module.dims(),
        "identified_as": id,
        "flag": t.flag,
        "margin_warning": t.margin_warning,
        "module": t.module.to_json(),
    });
    Ok(Output::json(json, table))
}

fn mod_cmd<F: Field>(cat: &Arc<LinCat<F>>, c: &ModCmd, margin: usize) -> Result<Output> {
    let family = corpus(cat)?;
    match c {
        ModCmd::Define { module } => {
            let m = load(cat, module)?;
            Ok(Output { json: m.to_json(), table: None, raw: None, status: 0, notes: Vec::new() })
        }
        ModCmd::Hom { src, dst } => {
            let (m, n) = (load(cat, src)?, load(cat, dst)?);
            let h = hom_space(&m, &n)?;
            let basis: Vec<Value> = h
                .basis()
                .iter()
                .map(|f| Value::Array(f.comps().iter().map(|c| c.to_json()).collect()))
                .collect();
            let table = format!("dim Hom({src}, {dst}) = {}\n", h.dim());
            Ok(Output::json(json!({ "src": src, "dst": dst, "dim": h.dim(), "basis": basis }), table))
        }
        ModCmd::Ext { src, dst } => {
            let (m, n) = (load(cat, src)?, load(cat, dst)?);
            let d = ext1(&m, &n)?.dim();
            Ok(Output::json(json!({ "src": src, "dst": dst, "dim": d }), format!("dim Ext1({src}, {dst}) = {d}\n")))
        }
        ModCmd::Tau { module } => translation("tau", module, &tau(&load(cat, module)?, margin)?, &family),
        ModCmd::Tauminus { module } => translation("tau-", module, &tau_minus(&load(cat, module)?, margin)?, &family),
        ModCmd::Ass { module } => ass(cat, module, margin, &family),
        ModCmd::Classify { module } => {
            let m = load(cat, module)?;
            let audit_family = standard_family(cat)?;
            let k = classify_gar(&m, margin, &audit_family)?;
            let mut table = format!("{module}: r_member {}, l_member {:?} (rule {:?})\n", k.r_member, k.l_member, k.rule);
            for s in &k.summands {
                table.push_str(&format!(
                    "  {:?} x{}  fd {:?}  projective {}  {:?}\n",
                    s.dims, s.multiplicity, s.fd, s.projective, s.l_member
                ));
            }
            if let Some(a) = &k.audit {
                table.push_str(&format!("  Ext audit: {} tested, nonzero for {:?}\n", a.tested.len(), a.nonvanishing));
            }
            let json = serde_json::to_value(&k).map_err(|e| Error::Internal(e.to_string()))?;
            Ok(Output::json(json, table))
        }
        ModCmd::Decompose { module } => {
            let m = load(cat, module)?;
            let mut pieces = Vec::new();
            let mut table = String::new();
            for p in decompose(&m, DEFAULT_BUDGET)? {
                let id = identify(&p.module, &family)?;
                table.push_str(&format!("{} x{}  {:?}\n", name_of(&id, &p.module), p.multiplicity, p.verdict));
                pieces.push(json!({
                    "dims": p.module.dims(),
                    "identified_as": id,
                    "multiplicity": p.multiplicity,
                    "verdict": p.verdict,
                    "module": p.module.to_json(),
                }));
            }
            Ok(Output::json(json!({ "input": module, "pieces": pieces }), table))
        }
    }
}

fn ass<F: Field>(cat: &Arc<LinCat<F>>, arg: &str, margin: usize, family: &Family<F>) -> Result<Output> {
    let m = load(cat, arg)?;
    let a = almost_split(&m, margin)?;
    let check = check_almost_split(&a.seq, family)?;
    let middle: Vec<Value> = decompose(&a.seq.e, DEFAULT_BUDGET)?
        .iter()
        .map(|p| {
            Ok(json!({
                "dims": p.module.dims(),
                "identified_as": identify(&p.module, family)?,
                "multiplicity": p.multiplicity,
            }))
        })
        .collect::<Result<_>>()?;
    let left = identify(&a.seq.a, family)?;
    let mid = identify(&a.seq.e, family)?;
    let right = identify(&a.seq.b, family)?;
    let mut table = format!(
        "0 -> {} -> {} -> {} -> 0\n",
        name_of(&left, &a.seq.a),
        name_of(&mid, &a.seq.e),
        name_of(&right, &a.seq.b)
    );
    table.push_str(&format!(
        "exact {}, non-split {}, right almost split on {}/{} test modules{}\n",
        check.exact,
        check.non_split,
        family.len() - check.failures.len(),
        family.len(),
        if a.tau.margin_warning { "  [margin warning]" } else { "" }
    ));
    let json = json!({
        "input": arg,
        "left": describe(&a.seq.a, family)?,
        "middle": { "dims": a.seq.e.dims(), "identified_as": mid, "summands": middle },
        "right": describe(&a.seq.b, family)?,
        "ext_dim": a.ext_dim,
        "margin_warning": a.tau.margin_warning,
        "check": {
            "exact": check.exact,
            "non_split": check.non_split,
            "family_size": family.len(),
            "failures": check.failures,
        },
    });
    let mut out = Output::json(json, table);
    if !check.passed() {
        out.status = 1;
    }
    Ok(out)
}

fn verify<F: Field>(cat: &Arc<LinCat<F>>, suite: &str, margin: usize) -> Result<Output> {
    let report = run_suite(suite, cat, margin)?;
    let failures = report.failures();
    let warned = report.records.iter().filter(|r| r.margin_warning).count();
    let skipped = report.records.iter().filter(|r| r.skip_reason.is_some() && r.pass).count();
    let summary = format!(
        "{suite} on {}: {} checks, {failures} failures, {warned} margin-warned, {skipped} skipped",
        cat.name(),
        report.records.len()
    );
    let mut table = String::new();
    for r in &report.records {
        let status = match (&r.skip_reason, r.pass) {
            (Some(_), true) => "skip",
            (_, true) => "pass",
            (_, false) => "FAIL",
        };
        table.push_str(&format!(
            "{status:<4} {:<24} {:<28} {:>4} {:>4}{}\n",
            r.check,
            r.inputs.join(" "),
            r.lhs,
            r.rhs,
            if r.margin_warning { "  [margin]" } else { "" }
        ));
    }
    table.push_str(&summary);
    table.push('\n');
    let json = serde_json::to_value(&report.records).map_err(|e| Error::Internal(e.to_string()))?;
    Ok(Output {
        json,
        table: Some(table),
        raw: None,
        status: if failures == 0 { 0 } else { 1 },
        notes: vec![summary],
    })
}
