//! Dimension checks of the AR formulas, `Tr Tr`, and the defect formula.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::Field;
use crate::modrep::{find_iso, hom_space, injective_envelope, is_fd, minimal_presentation, Envelope, FdVerdict, Module, ModuleMap, Presentation, DEFAULT_BUDGET};

use super::ext::{Ext, ShortExactSeq};
use super::stable::{stable_hom_inj_from, stable_hom_proj_from};
use super::transpose::{tau_from, transpose, Translation};

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub check: String,
    pub inputs: Vec<String>,
    pub lhs: usize,
    pub rhs: usize,
    pub pass: bool,
    pub margin_warning: bool,
    pub skip_reason: Option<String>,
}

impl CheckRecord {
    pub fn compare(check: &str, inputs: Vec<String>, lhs: usize, rhs: usize, margin_warning: bool) -> Self {
        CheckRecord { check: check.into(), inputs, lhs, rhs, pass: lhs == rhs, margin_warning, skip_reason: None }
    }

    pub fn skipped(check: &str, inputs: Vec<String>, reason: impl Into<String>) -> Self {
        CheckRecord {
            check: check.into(),
            inputs,
            lhs: 0,
            rhs: 0,
            pass: true,
            margin_warning: false,
            skip_reason: Some(reason.into()),
        }
    }

    pub fn failed(check: &str, inputs: Vec<String>, err: &Error) -> Self {
        CheckRecord {
            check: check.into(),
            inputs,
            lhs: 0,
            rhs: 1,
            pass: false,
            margin_warning: false,
            skip_reason: Some(format!("error: {err}")),
        }
    }
}

/// Everything the pairwise checks need from one module, computed once.
pub struct Prepared<F> {
    pub label: String,
    pub module: Arc<Module<F>>,
    pub presentation: Arc<Presentation<F>>,
    pub tau: Translation<F>,
    pub fd: FdVerdict,
    pub envelope: Option<Envelope<F>>,
}

impl<F: Field> Prepared<F> {
    pub fn new(label: impl Into<String>, module: Arc<Module<F>>, margin: usize) -> Result<Self> {
        let presentation = Arc::new(minimal_presentation(&module)?);
        let tau = tau_from(&presentation, margin)?;
        let fd = is_fd(&module, margin);
        let envelope = if fd == FdVerdict::FiniteDimensional {
            Some(injective_envelope(&module, margin)?)
        } else {
            None
        };
        Ok(Prepared { label: label.into(), module, presentation, tau, fd, envelope })
    }

    pub fn margin_warning(&self, margin: usize) -> bool {
        self.tau.margin_warning || self.presentation.touches_margin(margin)
    }
}

/// `dim Ext¹(N, τM) = dim Hom_under(M, N)` and, for fd `N`,
/// `dim Hom_over(N, τM) = dim Ext¹(M, N)`.
pub fn verify_ar_formula<F: Field>(m: &Prepared<F>, n: &Prepared<F>, margin: usize) -> Result<Vec<CheckRecord>> {
    let inputs = vec![m.label.clone(), n.label.clone()];
    let warn = m.margin_warning(margin);
    let lhs1 = Ext::new(n.presentation.clone(), &m.tau.module)?.dim();
    let rhs1 = stable_hom_proj_from(&m.presentation.cover, &n.presentation.cover)?.dim();
    let mut out = vec![CheckRecord::compare("ar_formula_1", inputs.clone(), lhs1, rhs1, warn)];
    match &n.envelope {
        Some(env) => {
            let lhs2 = stable_hom_inj_from(&n.presentation.cover, env, &m.tau.module)?.dim();
            let rhs2 = Ext::new(m.presentation.clone(), &n.module)?.dim();
            out.push(CheckRecord::compare("ar_formula_2", inputs, lhs2, rhs2, warn));
        }
        None => out.push(CheckRecord::skipped(
            "ar_formula_2",
            inputs,
            "second module is not finite dimensional within the window",
        )),
    }
    Ok(out)
}

/// `Tr Tr M ≅ M`, with an explicit isomorphism.
pub fn trtr_check<F: Field>(label: &str, m: &Arc<Module<F>>) -> Result<CheckRecord> {
    let pres = minimal_presentation(m)?;
    if pres.cover.is_projective() {
        return Err(Error::IsProjective);
    }
    let tr = transpose(m)?;
    let trtr = transpose(&tr)?;
    let found = find_iso(&trtr, m, DEFAULT_BUDGET)?.is_iso();
    Ok(CheckRecord::compare("trtr", vec![label.into()], usize::from(found), 1, false))
}

/// `dim coker(Hom(E, X) -> Hom(A, X))` for `0 -> A -> E -> B -> 0`.
pub fn covariant_defect<F: Field>(seq: &ShortExactSeq<F>, x: &Arc<Module<F>>) -> Result<usize> {
    let hom_a = hom_space(&seq.a, x)?;
    let restricted: Vec<ModuleMap<F>> = hom_space(&seq.e, x)?.basis().iter().map(|g| g.after(&seq.i)).collect();
    Ok(hom_a.dim() - hom_a.coord_matrix(&restricted)?.rank())
}

/// `dim coker(Hom(M, E) -> Hom(M, B))`.
pub fn contravariant_defect<F: Field>(seq: &ShortExactSeq<F>, m: &Arc<Module<F>>) -> Result<usize> {
    let hom_b = hom_space(m, &seq.b)?;
    let pushed: Vec<ModuleMap<F>> = hom_space(m, &seq.e)?.basis().iter().map(|g| seq.p.after(g)).collect();
    Ok(hom_b.dim() - hom_b.coord_matrix(&pushed)?.rank())
}

/// `dim δ_*(τM) = dim δ^*(M)`.
pub fn defect_check<F: Field>(seq_label: &str, seq: &ShortExactSeq<F>, m: &Prepared<F>, margin: usize) -> Result<CheckRecord> {
    let lhs = covariant_defect(seq, &m.tau.module)?;
    let rhs = contravariant_defect(seq, &m.module)?;
    Ok(CheckRecord::compare(
        "defect",
        vec![seq_label.into(), m.label.clone()],
        lhs,
        rhs,
        m.margin_warning(margin),
    ))
}
