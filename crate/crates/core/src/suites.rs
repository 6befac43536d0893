//! Verification sweeps over a category's corpus, one report per suite.
//!
//! Work inside a suite runs in parallel; records come back sorted by check
//! name and inputs.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::artheory::{
    almost_split, check_almost_split, classify_gar, corpus, ext1, injectivity_rule, is_linear, realize_extension,
    standard_family, tau_from, Ext, tau_minus, tau_minus_unchecked, trtr_check, verify_ar_formula, defect_check, CheckRecord,
    Family, InjectivityRule, LMember, Prepared, ShortExactSeq, YesReason, interval_module,
};
use crate::error::{Error, Result};
use crate::exactla::Field;
use crate::lincat::LinCat;
use crate::modrep::{find_iso, hom_space, is_fd, minimal_presentation, syzygy, FdVerdict, Module, DEFAULT_BUDGET};

const MARGIN_SKIP: &str = "presentation of the test module reaches the margin";

pub const SUITES: [&str; 9] = ["yoneda", "arformula", "almostsplit", "tautau", "trtr", "classify", "defect", "hereditary", "fiinj"];

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub category: String,
    pub records: Vec<CheckRecord>,
}

impl SuiteReport {
    pub fn failures(&self) -> usize {
        self.records.iter().filter(|r| !r.pass).count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }
}

fn finish(suite: &str, cat: &LinCat<impl Field>, mut records: Vec<CheckRecord>) -> SuiteReport {
    records.sort_by(|a, b| (&a.check, &a.inputs).cmp(&(&b.check, &b.inputs)));
    SuiteReport { suite: suite.into(), category: cat.name().into(), records }
}

fn guard(check: &str, inputs: Vec<String>, r: Result<CheckRecord>) -> CheckRecord {
    r.unwrap_or_else(|e| CheckRecord::failed(check, inputs, &e))
}

pub fn run_suite<F: Field>(name: &str, cat: &Arc<LinCat<F>>, margin: usize) -> Result<SuiteReport> {
    match name {
        "yoneda" => yoneda(cat),
        "arformula" => arformula(cat, margin),
        "almostsplit" => almostsplit(cat, margin),
        "tautau" => tautau(cat, margin),
        "trtr" => trtr(cat, margin),
        "classify" => classify(cat, margin),
        "defect" => defect(cat, margin),
        "hereditary" => hereditary(cat),
        "fiinj" => fiinj(cat, margin),
        _ => Err(Error::Parse(format!("unknown suite {name:?}; expected one of {}", SUITES.join(", ")))),
    }
}

fn prepare_all<F: Field>(family: &Family<F>, margin: usize) -> Result<Vec<Prepared<F>>> {
    family
        .par_iter()
        .map(|(l, m)| Prepared::new(l.clone(), m.clone(), margin))
        .collect()
}

/// `dim Hom(P_a, M) = dim M(a)` and `dim Hom(M, I_a) = dim M(a)`.
pub fn yoneda<F: Field>(cat: &Arc<LinCat<F>>) -> Result<SuiteReport> {
    let family = corpus(cat)?;
    let objects: Vec<usize> = (0..cat.num_objects()).collect();
    let reps: Vec<(Arc<Module<F>>, Arc<Module<F>>)> = objects
        .iter()
        .map(|&a| Ok((Arc::new(Module::representable(cat, a)?), Arc::new(Module::injective(cat, a)?))))
        .collect::<Result<_>>()?;
    let records = family
        .par_iter()
        .flat_map_iter(|(label, m)| {
            let reps = &reps;
            objects.iter().flat_map(move |&a| {
                let (p, i) = &reps[a];
                let inp = |k: &str| vec![label.clone(), format!("{k}:{a}")];
                let proj = guard("yoneda_proj", inp("P"), hom_space(p, m).map(|h| CheckRecord::compare("yoneda_proj", inp("P"), h.dim(), m.dim(a), false)));
                let inj = guard("yoneda_inj", inp("I"), hom_space(m, i).map(|h| CheckRecord::compare("yoneda_inj", inp("I"), h.dim(), m.dim(a), false)));
                [proj, inj]
            })
        })
        .collect();
    Ok(finish("yoneda", cat, records))
}

/// Both AR formulas over all ordered pairs of the corpus.
pub fn arformula<F: Field>(cat: &Arc<LinCat<F>>, margin: usize) -> Result<SuiteReport> {
    let prepared = prepare_all(&corpus(cat)?, margin)?;
    let pairs: Vec<(usize, usize)> = (0..prepared.len()).flat_map(|i| (0..prepared.len()).map(move |j| (i, j))).collect();
    let records = pairs
        .par_iter()
        .flat_map_iter(|&(i, j)| {
            let (m, n) = (&prepared[i], &prepared[j]);
            verify_ar_formula(m, n, margin)
                .unwrap_or_else(|e| vec![CheckRecord::failed("ar_formula", vec![m.label.clone(), n.label.clone()], &e)])
        })
        .collect();
    Ok(finish("arformula", cat, records))
}

/// Almost split sequences ending at every fd non-projective corpus member.
pub fn almostsplit<F: Field>(cat: &Arc<LinCat<F>>, margin: usize) -> Result<SuiteReport> {
    let family = corpus(cat)?;
    let targets: Vec<&(String, Arc<Module<F>>)> = family
        .iter()
        .filter(|(_, m)| is_fd(m, margin) == FdVerdict::FiniteDimensional)
        .collect();
    let records = targets
        .par_iter()
        .flat_map_iter(|(label, m)| {
            let inp = vec![label.clone()];
            let one = || -> Result<Vec<CheckRecord>> {
                let pres = minimal_presentation(m)?;
                if pres.cover.is_projective() {
                    return Ok(Vec::new());
                }
                let a = almost_split(m, margin)?;
                let warn = a.tau.margin_warning;
                let check = check_almost_split(&a.seq, &family)?;
                let left = find_iso(&a.seq.a, &a.tau.module, DEFAULT_BUDGET)?.is_iso();
                let passing = family.len() - check.failures.len();
                Ok(vec![
                    CheckRecord::compare("ass_exact", inp.clone(), usize::from(check.exact), 1, warn),
                    CheckRecord::compare("ass_non_split", inp.clone(), usize::from(check.non_split), 1, warn),
                    CheckRecord::compare("ass_left_term", inp.clone(), usize::from(left), 1, warn),
                    CheckRecord::compare("ass_right_almost_split", inp.clone(), passing, family.len(), warn),
                ])
            };
            one().unwrap_or_else(|e| vec![CheckRecord::failed("ass", inp.clone(), &e)])
        })
        .collect();
    Ok(finish("almostsplit", cat, records))
}

/// `τ⁻τ ≅ id` and `ττ⁻ ≅ id` on fd indecomposable corpus members, plus the
/// interval shift `τ X_ij ≅ X_{i+1,j+1}` on linear quivers.
///
/// `τ⁻` is applied to `τM` even when `τM` sits inside the margin; such
/// records carry the margin warning.
pub fn tautau<F: Field>(cat: &Arc<LinCat<F>>, margin: usize) -> Result<SuiteReport> {
    let family = corpus(cat)?;
    let linear = is_linear(cat);
    let records = family
        .par_iter()
        .filter(|(_, m)| is_fd(m, margin) == FdVerdict::FiniteDimensional)
        .flat_map_iter(|(label, m)| {
            let inp = vec![label.clone()];
            let one = || -> Result<Vec<CheckRecord>> {
                let mut out = Vec::new();
                let pres = minimal_presentation(m)?;
                if !pres.cover.is_projective() {
                    let t = tau_from(&pres, margin)?;
                    let gated = is_fd(&t.module, margin) == FdVerdict::FiniteDimensional;
                    let back = tau_minus_unchecked(&t.module, margin)?;
                    let ok = find_iso(&back.module, m, DEFAULT_BUDGET)?.is_iso();
                    let warn = t.margin_warning || back.margin_warning || !gated;
                    out.push(CheckRecord::compare("tau_minus_tau", inp.clone(), usize::from(ok), 1, warn));
                    if linear {
                        let (i, j) = interval_of(m);
                        if j < cat.top() {
                            let expected = Arc::new(interval_module(cat, i + 1, j + 1)?);
                            let ok = find_iso(&t.module, &expected, DEFAULT_BUDGET)?.is_iso();
                            out.push(CheckRecord::compare("tau_interval", inp.clone(), usize::from(ok), 1, t.margin_warning));
                        }
                    }
                }
                let up = tau_minus(m, margin)?;
                if up.flag.is_none() {
                    let pres = minimal_presentation(&up.module)?;
                    let there = tau_from(&pres, margin)?;
                    let ok = find_iso(&there.module, m, DEFAULT_BUDGET)?.is_iso();
                    out.push(CheckRecord::compare("tau_tau_minus", inp.clone(), usize::from(ok), 1, up.margin_warning || there.margin_warning));
                }
                Ok(out)
            };
            one().unwrap_or_else(|e| vec![CheckRecord::failed("tautau", inp.clone(), &e)])
        })
        .collect();
    Ok(finish("tautau", cat, records))
}

/// Support `[i, j]` of an interval module, read off its dimension vector.
fn interval_of<F: Field>(m: &Module<F>) -> (usize, usize) {
    let support: Vec<usize> = (0..m.dims().len()).filter(|&a| m.dim(a) > 0).collect();
    (support[0], *support.last().expect("nonzero module"))
}

/// `Tr Tr M ≅ M` on fd non-projective corpus members.
pub fn trtr<F: Field>(cat: &Arc<LinCat<F>>, margin: usize) -> Result<SuiteReport> {
    let family = corpus(cat)?;
    let records = family
        .par_iter()
        .filter(|(_, m)| is_fd(m, margin) == FdVerdict::FiniteDimensional)
        .filter_map(|(label, m)| match trtr_check(label, m) {
            Err(Error::IsProjective) => None,
            r => Some(guard("trtr", vec![label.clone()], r)),
        })
        .collect();
    Ok(finish("trtr", cat, records))
}

/// Expected left membership from the category's own description of its
/// injective objects, when one is known.
fn expected_l<F: Field>(cat: &LinCat<F>, label: &str, m: &Module<F>, margin: usize) -> Option<bool> {
    let rule = injectivity_rule(cat, margin);
    let parts: Vec<&str> = label.split(':').collect();
    match (rule, parts.as_slice()) {
        (InjectivityRule::IntervalFiniteQuiver, ["X", i, j]) if is_linear(cat) => {
            let (i, j): (usize, usize) = (i.parse().ok()?, j.parse().ok()?);
            Some(j + margin <= cat.top() || (i == 0 && j == cat.top()))
        }
        (InjectivityRule::Projectives, ["P", _]) => Some(true),
        (InjectivityRule::Projectives, _) => match is_fd(m, margin) {
            FdVerdict::FiniteDimensional => Some(true),
            FdVerdict::NotFiniteDimensional => Some(false),
            FdVerdict::BoundaryUnclear => None,
        },
        _ => None,
    }
}

/// `classify_gar` over the corpus against the category's rule.
pub fn classify<F: Field>(cat: &Arc<LinCat<F>>, margin: usize) -> Result<SuiteReport> {
    let family = corpus(cat)?;
    let audit_family = standard_family(cat)?;
    let records = family
        .par_iter()
        .flat_map_iter(|(label, m)| {
            let inp = vec![label.clone()];
            let one = || -> Result<Vec<CheckRecord>> {
                let c = classify_gar(m, margin, &audit_family)?;
                let got = c.l_member.is_yes();
                let mut out = vec![CheckRecord::compare("r_member", inp.clone(), usize::from(c.r_member), 1, false)];
                out.push(match expected_l(cat, label, m, margin) {
                    Some(want) => CheckRecord::compare("l_member", inp.clone(), usize::from(got), usize::from(want), false),
                    None => CheckRecord::skipped("l_member", inp.clone(), format!("no oracle; classified as {:?}", c.l_member)),
                });
                if c.l_member == LMember::Yes(YesReason::InjectiveObject) && c.summands.iter().all(|s| s.projective) {
                    // P_a is injective in fp C: Ext¹(T, P_a) vanishes on the family
                    for (tl, t) in &audit_family {
                        let inputs = vec![tl.clone(), label.clone()];
                        let pres = Arc::new(minimal_presentation(t)?);
                        if pres.touches_margin(margin) {
                            out.push(CheckRecord::skipped("ext_into_injective", inputs, MARGIN_SKIP));
                            continue;
                        }
                        let d = Ext::new(pres, m)?.dim();
                        out.push(CheckRecord::compare("ext_into_injective", inputs, d, 0, false));
                    }
                }
                Ok(out)
            };
            one().unwrap_or_else(|e| vec![CheckRecord::failed("classify", inp.clone(), &e)])
        })
        .collect();
    Ok(finish("classify", cat, records))
}

/// A pool of non-split sequences realized from `Ext¹` between corpus
/// members, at least `min` of them when the corpus allows.
pub fn sequence_pool<F: Field>(family: &Family<F>, min: usize) -> Result<Vec<(String, ShortExactSeq<F>)>> {
    let mut pool = Vec::new();
    for (lm, m) in family {
        for (ln, n) in family {
            if pool.len() >= min {
                return Ok(pool);
            }
            let e = ext1(m, n)?;
            if e.dim() > 0 {
                pool.push((format!("{ln}>{lm}"), realize_extension(&e.basis_class(0))?));
            }
        }
    }
    Ok(pool)
}

/// `dim δ_*(τM) = dim δ^*(M)` for a pool of sequences and every corpus
/// member whose `τ` is finite dimensional.
pub fn defect<F: Field>(cat: &Arc<LinCat<F>>, margin: usize) -> Result<SuiteReport> {
    let family = corpus(cat)?;
    let pool = sequence_pool(&family, 24)?;
    let prepared: Vec<Prepared<F>> = prepare_all(&family, margin)?
        .into_iter()
        .filter(|p| is_fd(&p.tau.module, margin) == FdVerdict::FiniteDimensional)
        .collect();
    let pairs: Vec<(usize, usize)> = (0..pool.len()).flat_map(|i| (0..prepared.len()).map(move |j| (i, j))).collect();
    let records = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (sl, seq) = &pool[i];
            let p = &prepared[j];
            guard("defect", vec![sl.clone(), p.label.clone()], defect_check(sl, seq, p, margin))
        })
        .collect();
    Ok(finish("defect", cat, records))
}

/// `Ω² M = 0` for every corpus member.
pub fn hereditary<F: Field>(cat: &Arc<LinCat<F>>) -> Result<SuiteReport> {
    let family = corpus(cat)?;
    let records = family
        .par_iter()
        .map(|(label, m)| {
            let r = syzygy(m).and_then(|(o, _)| syzygy(&o)).map(|(o2, _)| {
                CheckRecord::compare("second_syzygy_dim", vec![label.clone()], o2.total_dim(), 0, false)
            });
            guard("second_syzygy_dim", vec![label.clone()], r)
        })
        .collect();
    Ok(finish("hereditary", cat, records))
}

/// `Ext¹(T, P_a) = 0` for every representable and every family member `T`.
pub fn fiinj<F: Field>(cat: &Arc<LinCat<F>>, margin: usize) -> Result<SuiteReport> {
    let family = standard_family(cat)?;
    let pairs: Vec<(usize, usize)> = (0..family.len()).flat_map(|t| (0..cat.num_objects()).map(move |a| (t, a))).collect();
    let records = pairs
        .par_iter()
        .map(|&(t, a)| {
            let (tl, tm) = &family[t];
            let inp = vec![tl.clone(), format!("P:{a}")];
            let r = (|| {
                let p = Arc::new(Module::representable(cat, a)?);
                let pres = Arc::new(minimal_presentation(tm)?);
                if pres.touches_margin(margin) {
                    return Ok(CheckRecord::skipped("ext_into_projective", inp.clone(), MARGIN_SKIP));
                }
                let d = Ext::new(pres, &p)?.dim();
                Ok(CheckRecord::compare("ext_into_projective", inp.clone(), d, 0, false))
            })();
            guard("ext_into_projective", inp, r)
        })
        .collect();
    Ok(finish("fiinj", cat, records))
}
