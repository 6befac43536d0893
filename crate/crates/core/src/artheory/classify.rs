//! Membership in the left and right parts of the generalized AR duality.

use std::sync::Arc;

use serde::Serialize;

use crate::error::Result;
use crate::exactla::Field;
use crate::lincat::{GrowthVerdict, LinCat, Origin};
use crate::modrep::{decompose, find_iso, is_fd, projective_cover, FdVerdict, Module, Verdict, DEFAULT_BUDGET};

use super::ext::ext1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum YesReason {
    FiniteDimensional,
    InjectiveObject,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LMember {
    Yes(YesReason),
    No,
    BoundaryUnclear,
}

impl LMember {
    pub fn is_yes(&self) -> bool {
        matches!(self, LMember::Yes(_))
    }
}

/// Which description of the injective objects of `fp C` applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InjectivityRule {
    /// Uniformly interval finite quiver: `P_0` and the fd injectives.
    IntervalFiniteQuiver,
    /// FI and VI: the finitely generated projectives.
    Projectives,
    Unknown,
}

pub fn injectivity_rule<F: Field>(cat: &LinCat<F>, window: usize) -> InjectivityRule {
    if cat.is_opposite() {
        return InjectivityRule::Unknown;
    }
    match cat.origin() {
        Origin::Quiver => {
            let bounded = (0..cat.num_objects()).all(|a| {
                cat.hom_growth(a, window)
                    .map(|g| matches!(g.verdict, GrowthVerdict::Bounded(_)))
                    .unwrap_or(false)
            });
            if bounded {
                InjectivityRule::IntervalFiniteQuiver
            } else {
                InjectivityRule::Unknown
            }
        }
        Origin::Fi { .. } | Origin::Vi { .. } => InjectivityRule::Projectives,
        Origin::UserSupplied => InjectivityRule::Unknown,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SummandClass {
    pub dims: Vec<usize>,
    pub multiplicity: usize,
    pub indecomposable: Verdict,
    pub fd: FdVerdict,
    pub projective: bool,
    pub l_member: LMember,
}

/// Sample evidence when no injectivity rule is known: the members `T` of a
/// test family with `Ext¹(T, M) ≠ 0`.
#[derive(Clone, Debug, Serialize)]
pub struct ExtAudit {
    pub tested: Vec<String>,
    pub nonvanishing: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub r_member: bool,
    pub l_member: LMember,
    pub rule: InjectivityRule,
    pub summands: Vec<SummandClass>,
    /// Present only under [`InjectivityRule::Unknown`]; evidence, not proof.
    pub audit: Option<ExtAudit>,
}

fn from_fd(v: FdVerdict) -> LMember {
    match v {
        FdVerdict::FiniteDimensional => LMember::Yes(YesReason::FiniteDimensional),
        FdVerdict::NotFiniteDimensional => LMember::No,
        FdVerdict::BoundaryUnclear => LMember::BoundaryUnclear,
    }
}

/// Classifies each indecomposable summand of `m`. `family` feeds the Ext
/// audit when the category has no known injectivity rule.
pub fn classify_gar<F: Field>(
    m: &Arc<Module<F>>,
    window: usize,
    family: &[(String, Arc<Module<F>>)],
) -> Result<Classification> {
    let cat = m.cat();
    let rule = injectivity_rule(cat, window);
    let p0 = Arc::new(Module::representable(cat, 0)?);
    let mut summands = Vec::new();
    for piece in decompose(m, DEFAULT_BUDGET)? {
        let x = &piece.module;
        let fd = is_fd(x, window);
        let projective = projective_cover(x)?.is_projective();
        let l_member = match rule {
            InjectivityRule::IntervalFiniteQuiver if projective => {
                if find_iso(x, &p0, DEFAULT_BUDGET)?.is_iso() {
                    LMember::Yes(YesReason::InjectiveObject)
                } else {
                    LMember::No
                }
            }
            InjectivityRule::Projectives if projective => LMember::Yes(YesReason::InjectiveObject),
            _ => from_fd(fd),
        };
        summands.push(SummandClass {
            dims: x.dims().to_vec(),
            multiplicity: piece.multiplicity,
            indecomposable: piece.verdict,
            fd,
            projective,
            l_member,
        });
    }
    let l_member = if summands.iter().any(|s| s.l_member == LMember::No) {
        LMember::No
    } else if summands.iter().any(|s| s.l_member == LMember::BoundaryUnclear) {
        LMember::BoundaryUnclear
    } else if summands.iter().any(|s| s.l_member == LMember::Yes(YesReason::InjectiveObject)) {
        LMember::Yes(YesReason::InjectiveObject)
    } else {
        LMember::Yes(YesReason::FiniteDimensional)
    };
    let audit = if rule == InjectivityRule::Unknown {
        let mut tested = Vec::new();
        let mut nonvanishing = Vec::new();
        for (label, t) in family {
            tested.push(label.clone());
            if ext1(t, m)?.dim() > 0 {
                nonvanishing.push(label.clone());
            }
        }
        Some(ExtAudit { tested, nonvanishing })
    } else {
        None
    };
    Ok(Classification { r_member: true, l_member, rule, summands, audit })
}
