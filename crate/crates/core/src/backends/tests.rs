use super::*;
use crate::exactla::{Fp, Rational};
use crate::lincat::LinCat;

const Q: FieldSpec = FieldSpec::Rational;

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[test]
fn linear_and_star_dimensions() {
    let c: LinCat<Rational> = linear(5, Q).unwrap();
    for i in 0..=5 {
        for j in i..=5 {
            assert_eq!(c.hom_dim(i, j), 1);
        }
    }
    let s: LinCat<Rational> = star_ray(6, Q).unwrap();
    for j in 1..=6 {
        assert_eq!(s.hom_dim(0, j), j);
    }
    let point = quiver_category::<Rational>(&QuiverSpec::new(0, vec![]).unwrap(), Q, "pt").unwrap();
    assert_eq!(point.num_morphisms(), 1);
}

#[test]
fn backward_arrows_are_rejected() {
    let bad = QuiverSpec::parse("2 -> 1 : x\n");
    assert!(matches!(bad, Err(Error::InvalidQuiver(_))));
    let q = QuiverSpec::parse("# two arrows\n0 -> 1 : x\n1 -> 3 : y\n").unwrap();
    assert_eq!(q.top, 3);
    assert_eq!(q.arrows.len(), 2);
}

#[test]
fn fi_dimensions_follow_the_injection_count() {
    let c: LinCat<Rational> = fi_category(4, Q).unwrap();
    for n in 0..=4 {
        for m in 0..=n {
            assert_eq!(c.hom_dim(m, n), factorial(n) / factorial(n - m));
            assert_eq!(c.hom_dim(m, n), injections(m, n).len());
        }
    }
    assert_eq!(c.hom_dim(1, 2), 2);
    assert_eq!(c.hom_dim(2, 3), 6);
    assert_eq!(c.hom_dim(2, 2), 2);
}

#[test]
fn fi_g_dimensions() {
    let g = GroupTable::cyclic(2).unwrap();
    let c: LinCat<Rational> = fi_g_category(3, &g, Q).unwrap();
    assert!(c.validate().is_empty());
    for n in 0..=3 {
        for m in 0..=n {
            let expect = 2usize.pow(m as u32) * factorial(n) / factorial(n - m);
            assert_eq!(c.hom_dim(m, n), expect);
        }
    }
    assert_eq!(c.hom_dim(1, 2), 4);
}

#[test]
fn fi_rejects_small_characteristic() {
    let r = fi_category::<Fp>(4, FieldSpec::Prime { p: 5 });
    assert!(matches!(r, Err(Error::CharacteristicUnsupported(_))));
    assert!(fi_category::<Fp>(3, FieldSpec::Prime { p: 7 }).is_ok());
}

#[test]
fn vi_dimensions() {
    let c: LinCat<Rational> = vi_category(2, 2, Q).unwrap();
    assert!(c.validate().is_empty());
    assert_eq!(c.hom_dim(1, 2), 3);
    assert_eq!(c.hom_dim(2, 2), 6);
    assert_eq!(c.hom_dim(0, 2), 1);
    assert_eq!(c.hom_dim(1, 1), 1);
    assert!(matches!(vi_category::<Rational>(3, 3, Q), Err(Error::ScaleExceeded(_))));
    assert!(matches!(vi_category::<Rational>(2, 5, Q), Err(Error::ScaleExceeded(_))));
}

#[test]
fn vi_q3_small() {
    let c: LinCat<Rational> = vi_category(2, 3, Q).unwrap();
    assert_eq!(c.hom_dim(1, 2), 8);
    assert_eq!(c.hom_dim(2, 2), 48);
}

#[test]
fn builtin_names_parse() {
    assert_eq!(build_category::<Rational>("linear:3", Q).unwrap().top(), 3);
    assert_eq!(build_category::<Rational>("fi_g:2:C2", Q).unwrap().hom_dim(1, 1), 2);
    assert!(matches!(build_category::<Rational>("linear:x", Q), Err(Error::Parse(_))));
}
