use std::sync::Arc;

use super::*;
use crate::backends::{fi_category, linear};
use crate::exactla::{FieldSpec, Rational};
use crate::lincat::LinCat;
use crate::modrep::{find_iso, hom_space, Module, DEFAULT_BUDGET};

const Q: FieldSpec = FieldSpec::Rational;
const W: usize = 3;

fn lin(l: usize) -> Arc<LinCat<Rational>> {
    Arc::new(linear(l, Q).unwrap())
}

fn fi(l: usize) -> Arc<LinCat<Rational>> {
    Arc::new(fi_category(l, Q).unwrap())
}

fn x(c: &Arc<LinCat<Rational>>, i: usize, j: usize) -> Arc<Module<Rational>> {
    Arc::new(interval_module(c, i, j).unwrap())
}

fn iso(a: &Arc<Module<Rational>>, b: &Arc<Module<Rational>>) -> bool {
    find_iso(a, b, DEFAULT_BUDGET).unwrap().is_iso()
}

#[test]
fn transpose_of_interval_is_shifted_interval_over_opposite() {
    let c = lin(8);
    let op = c.opposite();
    for (i, j) in [(1, 1), (0, 3), (2, 5)] {
        let tr = transpose(&x(&c, i, j)).unwrap();
        assert!(Arc::ptr_eq(tr.cat(), &op));
        // [i+1, j+1] relabelled by a ↦ L - a
        let expected = x(&op, 8 - (j + 1), 8 - (i + 1));
        assert!(iso(&tr, &expected), "Tr X_{i}{j}");
    }
    assert!(transpose(&Arc::new(Module::representable(&c, 2).unwrap())).unwrap().is_zero());
}

#[test]
fn tau_shifts_intervals() {
    let c = lin(8);
    for i in 0..=5 {
        for j in i..=5 {
            let t = tau(&x(&c, i, j), W).unwrap();
            assert!(t.flag.is_none());
            assert!(iso(&t.module, &x(&c, i + 1, j + 1)), "tau X_{i}{j}");
            let back = tau_minus(&t.module, W);
            if j + 1 <= 5 {
                assert!(iso(&back.unwrap().module, &x(&c, i, j)));
            }
        }
    }
    let p = tau(&x(&c, 3, 8), W).unwrap();
    assert_eq!(p.flag, Some(TranslationFlag::Projective));
    assert!(p.module.is_zero());
    let inj = tau_minus(&x(&c, 0, 2), W).unwrap();
    assert_eq!(inj.flag, Some(TranslationFlag::Injective));
    assert_eq!(tau_minus(&x(&c, 2, 8), W).err(), Some(crate::Error::NotFiniteDimensional));
}

#[test]
fn fi_simple_translates() {
    let c = fi(4);
    let s0 = Arc::new(Module::simple(&c, 0).unwrap());
    let s1 = Arc::new(Module::simple(&c, 1).unwrap());
    let tr = transpose(&s0).unwrap();
    assert_eq!(tr.dims(), &[0, 0, 0, 1, 0]);
    let t = tau(&s0, W).unwrap();
    assert!(iso(&t.module, &s1));
    assert!(trtr_check("S:0", &s0).unwrap().pass);
}

#[test]
fn ext_examples() {
    let c = lin(8);
    assert_eq!(ext1(&x(&c, 1, 1), &x(&c, 2, 2)).unwrap().dim(), 1);
    assert_eq!(ext1(&x(&c, 2, 2), &x(&c, 1, 1)).unwrap().dim(), 0);
    let p = Arc::new(Module::representable(&c, 3).unwrap());
    for (_, n) in linear_catalog(&c).unwrap().iter().step_by(5) {
        assert_eq!(ext1(&p, n).unwrap().dim(), 0);
    }
    let f = fi(4);
    let s0 = Arc::new(Module::simple(&f, 0).unwrap());
    let p0 = Arc::new(Module::representable(&f, 0).unwrap());
    assert_eq!(ext1(&s0, &p0).unwrap().dim(), 0);
}

#[test]
fn realized_extensions() {
    let c = lin(8);
    let e = ext1(&x(&c, 1, 1), &x(&c, 2, 2)).unwrap();
    let seq = realize_extension(&e.basis_class(0)).unwrap();
    assert!(seq.is_exact());
    assert!(!seq.is_split().unwrap());
    assert!(iso(&seq.e, &x(&c, 1, 2)));
    let zero = realize_extension(&e.class(&[Rational::from_integer(0.into())])).unwrap();
    assert!(zero.is_exact());
    assert!(zero.is_split().unwrap());
}

#[test]
fn stable_hom_examples() {
    let c = lin(8);
    let x11 = x(&c, 1, 1);
    assert_eq!(stable_hom_proj(&x11, &x11).unwrap().dim(), 1);
    let p2 = Arc::new(Module::representable(&c, 2).unwrap());
    for (_, n) in linear_catalog(&c).unwrap() {
        assert_eq!(stable_hom_proj(&p2, &n).unwrap().dim(), 0);
    }
    let i3 = Arc::new(Module::injective(&c, 3).unwrap());
    assert_eq!(stable_hom_inj(&i3, &x(&c, 0, 5), W).unwrap().dim(), 0);
    assert_eq!(stable_hom_inj(&x11, &x11, W).unwrap().dim(), 1);
    assert!(stable_hom_inj(&p2, &x11, W).is_err());
}

#[test]
fn almost_split_examples() {
    let c = lin(8);
    let family = linear_catalog(&c).unwrap();
    let a = almost_split(&x(&c, 1, 1), W).unwrap();
    assert!(iso(&a.seq.a, &x(&c, 2, 2)));
    assert!(iso(&a.seq.e, &x(&c, 1, 2)));
    assert!(check_almost_split(&a.seq, &family).unwrap().passed());

    let a = almost_split(&x(&c, 0, 0), W).unwrap();
    assert!(iso(&a.seq.a, &x(&c, 1, 1)));
    assert!(iso(&a.seq.e, &x(&c, 0, 1)));

    // middle term with two summands
    let a = almost_split(&x(&c, 1, 3), W).unwrap();
    assert_eq!(a.seq.e.dims(), &[0, 1, 2, 2, 1, 0, 0, 0, 0]);
    assert!(check_almost_split(&a.seq, &family).unwrap().passed());

    assert_eq!(almost_split(&x(&c, 4, 8), W).err(), Some(crate::Error::IsProjective));
}

#[test]
fn split_sequence_fails_the_almost_split_check() {
    let c = lin(5);
    let family = linear_catalog(&c).unwrap();
    let e = ext1(&x(&c, 1, 1), &x(&c, 2, 2)).unwrap();
    let split = realize_extension(&e.class(&[Rational::from_integer(0.into())])).unwrap();
    assert!(!check_almost_split(&split, &family).unwrap().passed());
}

#[test]
fn ar_formulas_on_a_small_catalog() {
    let c = lin(4);
    let prepared: Vec<Prepared<Rational>> = linear_catalog(&c)
        .unwrap()
        .into_iter()
        .map(|(l, m)| Prepared::new(l, m, 1).unwrap())
        .collect();
    for m in &prepared {
        for n in &prepared {
            for r in verify_ar_formula(m, n, 1).unwrap() {
                assert!(r.pass, "{r:?}");
            }
        }
    }
}

#[test]
fn ar_formula_on_fi() {
    let c = fi(3);
    let s0 = Prepared::new("S:0", Arc::new(Module::simple(&c, 0).unwrap()), 1).unwrap();
    let p0 = Prepared::new("P:0", Arc::new(Module::representable(&c, 0).unwrap()), 1).unwrap();
    let recs = verify_ar_formula(&s0, &p0, 1).unwrap();
    assert!(recs[0].pass);
    assert_eq!(recs[0].lhs, 0);
    assert!(recs[1].skip_reason.is_some());
}

#[test]
fn catalog_shape() {
    let c = lin(3);
    let cat = linear_catalog(&c).unwrap();
    assert_eq!(cat.len(), 10);
    for j in 0..=3 {
        assert!(iso(&x(&c, 0, j), &Arc::new(Module::injective(&c, j).unwrap())));
        assert!(iso(&x(&c, j, 3), &Arc::new(Module::representable(&c, j).unwrap())));
    }
    for (a, (_, m)) in cat.iter().enumerate() {
        for (_, n) in &cat[a + 1..] {
            assert!(!iso(m, n));
        }
    }
    assert!(linear_catalog(&fi(2)).is_err());
}

#[test]
fn classification_on_linear_quiver() {
    let c = lin(8);
    let cl = |m: &Arc<Module<Rational>>| classify_gar(m, W, &[]).unwrap();
    assert_eq!(cl(&x(&c, 0, 8)).l_member, LMember::Yes(YesReason::InjectiveObject));
    assert_eq!(cl(&x(&c, 1, 8)).l_member, LMember::No);
    assert_eq!(cl(&x(&c, 2, 4)).l_member, LMember::Yes(YesReason::FiniteDimensional));
    assert_eq!(cl(&x(&c, 2, 6)).l_member, LMember::BoundaryUnclear);
    let sum = Module::direct_sum(&[x(&c, 0, 1), x(&c, 1, 8)]).unwrap().sum;
    let k = cl(&sum);
    assert_eq!(k.summands.len(), 2);
    assert_eq!(k.l_member, LMember::No);
    assert!(k.r_member);
}

#[test]
fn classification_on_fi() {
    let c = fi(3);
    for a in 0..=3 {
        let p = Arc::new(Module::representable(&c, a).unwrap());
        let k = classify_gar(&p, W, &[]).unwrap();
        assert_eq!(k.rule, InjectivityRule::Projectives);
        assert_eq!(k.l_member, LMember::Yes(YesReason::InjectiveObject));
    }
}

#[test]
fn unknown_rule_reports_an_audit() {
    let c = Arc::new(crate::backends::star_ray::<Rational>(4, Q).unwrap());
    let p1 = Arc::new(Module::representable(&c, 1).unwrap());
    let family = standard_family(&c).unwrap();
    let k = classify_gar(&p1, W, &family).unwrap();
    assert_eq!(k.rule, InjectivityRule::Unknown);
    assert_eq!(k.audit.unwrap().tested.len(), family.len());
}

#[test]
fn defect_formula_on_an_almost_split_sequence() {
    let c = lin(6);
    let a = almost_split(&x(&c, 1, 2), 1).unwrap();
    for (l, m) in linear_catalog(&c).unwrap() {
        let p = Prepared::new(l, m, 1).unwrap();
        assert!(defect_check("ass", &a.seq, &p, 1).unwrap().pass);
    }
}

#[test]
fn end_action_kills_radical_on_socle() {
    let c = lin(6);
    let m = x(&c, 1, 2);
    let e = ext1(&m, &tau(&m, 1).unwrap().module).unwrap();
    let end = crate::modrep::end_algebra(&m).unwrap();
    assert!(radical_actions(&e, &end).unwrap().is_empty());
    assert_eq!(hom_space(&m, &m).unwrap().dim(), 1);
}
