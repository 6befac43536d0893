//! Transpose, AR translations, `Ext¹`, almost split sequences, stable Hom
//! spaces and the checks built from them.

mod almost_split;
mod catalog;
mod classify;
mod ext;
mod stable;
mod transpose;
mod verify;

pub use almost_split::{almost_split, check_almost_split, lifts_non_retractions, non_retractions, radical_actions, AlmostSplit, AlmostSplitCheck};
pub use catalog::{corpus, interval_module, is_linear, linear_catalog, named_module, standard_family, Family};
pub use classify::{classify_gar, injectivity_rule, Classification, ExtAudit, InjectivityRule, LMember, SummandClass, YesReason};
pub use ext::{ext1, lift_to_covers, realize_extension, Ext, ExtClass, ShortExactSeq};
pub use stable::{stable_hom_inj, stable_hom_inj_from, stable_hom_proj, stable_hom_proj_from, StableHom};
pub use transpose::{tau, tau_from, tau_minus, tau_minus_unchecked, transpose, transpose_from, StarDual, Translation, TranslationFlag};
pub use verify::{contravariant_defect, covariant_defect, defect_check, trtr_check, verify_ar_formula, CheckRecord, Prepared};

#[cfg(test)]
mod tests;
