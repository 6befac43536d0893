use std::sync::Arc;

use proptest::prelude::*;

use super::*;
use crate::backends::{fi_category, linear, quiver_category, star_ray, Arrow, QuiverSpec};
use crate::exactla::Rational;

const Q: FieldSpec = FieldSpec::Rational;

fn lin(l: usize) -> Arc<LinCat<Rational>> {
    Arc::new(linear(l, Q).unwrap())
}

#[test]
fn backend_categories_validate() {
    assert!(lin(5).validate().is_empty());
    assert!(fi_category::<Rational>(3, Q).unwrap().validate().is_empty());
    assert!(star_ray::<Rational>(4, Q).unwrap().validate().is_empty());
}

#[test]
fn corrupted_coefficient_is_reported() {
    let c = fi_category::<Rational>(2, Q).unwrap();
    let mut v = c.to_json();
    // bump the first coefficient of the first entry of the 1,1,2 table
    let entry = &mut v["comp"]["1,1,2"][0][0][0];
    let old: i64 = entry.as_str().unwrap().parse().unwrap();
    *entry = serde_json::Value::String((old + 1).to_string());
    let bad = LinCat::<Rational>::from_json(&v, "bad").unwrap();
    let report = bad.validate();
    assert!(!report.is_empty());
    assert!(report.iter().any(|r| r.morphisms.iter().any(|m| m.starts_with("1>2"))));
}

#[test]
fn opposite_of_linear_is_linear() {
    let c = lin(6);
    let op = c.opposite();
    assert!(op.validate().is_empty());
    for a in 0..=6 {
        for b in 0..=6 {
            assert_eq!(op.hom_dim(a, b), c.hom_dim(a, b));
            assert_eq!(op.hom_dim(6 - b, 6 - a), c.hom_dim(a, b));
        }
    }
    assert!(Arc::ptr_eq(&op.opposite(), &c));
    assert!(op.is_opposite());
}

#[test]
fn opposite_indices_match_labels() {
    let c = Arc::new(fi_category::<Rational>(3, Q).unwrap());
    let op = c.opposite();
    assert!(op.validate().is_empty());
    for g in 0..c.num_morphisms() {
        let h = c.op_index(g);
        assert_eq!(op.label(h), c.label(g));
        let (m, n) = (c.morphism(g), op.morphism(h));
        assert_eq!((n.src, n.dst), (3 - m.dst, 3 - m.src));
    }
}

#[test]
fn radical_examples() {
    let c = lin(4);
    assert_eq!(c.radical_basis(1, 3).unwrap().cols(), 1);
    assert_eq!(c.radical_basis(2, 2).unwrap().cols(), 0);
    let fi = fi_category::<Rational>(3, Q).unwrap();
    assert_eq!(fi.radical_basis(2, 2).unwrap().cols(), 0);
    assert!(fi.ensure_semisimple().is_ok());
}

#[test]
fn radical_is_closed_under_composition() {
    let c = star_ray::<Rational>(4, Q).unwrap();
    for a in 0..=4 {
        for b in a..=4 {
            for d in b..=4 {
                let (r1, r2, r3) = (
                    c.radical_basis(a, b).unwrap(),
                    c.radical_basis(b, d).unwrap(),
                    c.radical_basis(a, d).unwrap(),
                );
                for i in 0..r1.cols() {
                    for j in 0..r2.cols() {
                        let v = c.compose(a, b, d, &r2.column(j), &r1.column(i));
                        let m = Matrix::column_vector(Q, v);
                        assert!(r3.hstack(&m).unwrap().rank() == r3.rank());
                    }
                }
            }
        }
    }
}

#[test]
fn growth_verdicts() {
    let g = lin(8).hom_growth(0, 3).unwrap();
    assert_eq!(g.dims, vec![1; 9]);
    assert_eq!(g.verdict, GrowthVerdict::Bounded(1));

    let s = star_ray::<Rational>(8, Q).unwrap().hom_growth(0, 3).unwrap();
    assert_eq!(s.dims, vec![1, 1, 2, 3, 4, 5, 6, 7, 8]);
    assert_eq!(s.verdict, GrowthVerdict::GrowingAtHorizon);

    let f = fi_category::<Rational>(4, Q).unwrap().hom_growth(1, 3).unwrap();
    assert_eq!(f.dims, vec![1, 2, 3, 4]);
    assert_eq!(f.verdict, GrowthVerdict::GrowingAtHorizon);
}

#[test]
fn generators_of_a_quiver_are_its_arrows() {
    let c = star_ray::<Rational>(4, Q).unwrap();
    let labels: Vec<&str> = c.generators().iter().map(|&g| c.label(g)).collect();
    assert_eq!(labels.len(), 4 + 3);
    assert!(labels.iter().all(|l| !l.contains('.') && !l.starts_with('e')));
}

#[test]
fn group_bases_are_detected() {
    let fi = fi_category::<Rational>(3, Q).unwrap();
    let g = fi.group_basis(3).unwrap();
    assert_eq!(g.order(), 6);
    assert!(lin(2).group_basis(1).is_some());
}

#[test]
fn json_round_trip_is_stable() {
    let c = fi_category::<Rational>(2, Q).unwrap();
    let v = c.to_json();
    let back = LinCat::<Rational>::from_json(&v, "copy").unwrap();
    assert_eq!(back, c);
    assert_eq!(back.content_hash(), c.content_hash());
    assert_eq!(back.origin(), &Origin::UserSupplied);
}

#[test]
fn triangularity_is_enforced_on_load() {
    let mut v = lin(2).to_json();
    v["hom"]["2,1"] = serde_json::json!(["back"]);
    assert!(matches!(
        LinCat::<Rational>::from_json(&v, "x"),
        Err(Error::InvalidCategory(_))
    ));
}

fn path_count_dp(q: &QuiverSpec, a: usize, b: usize) -> usize {
    let mut count = vec![0usize; q.top + 1];
    count[a] = 1;
    for v in a..=q.top {
        for ar in &q.arrows {
            if ar.src == v {
                count[ar.dst] += count[v];
            }
        }
    }
    count[b]
}

fn random_quiver() -> impl Strategy<Value = QuiverSpec> {
    (2usize..6).prop_flat_map(|top| {
        proptest::collection::vec((0..top, 1..=top), 0..8).prop_map(move |pairs| {
            let arrows = pairs
                .into_iter()
                .filter(|(s, d)| s < d)
                .enumerate()
                .map(|(i, (src, dst))| Arrow { src, dst, label: format!("x{i}") })
                .collect();
            QuiverSpec::new(top, arrows).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn path_basis_matches_dp(q in random_quiver()) {
        let c = quiver_category::<Rational>(&q, Q, "q").unwrap();
        prop_assert!(c.validate().is_empty());
        for a in 0..=q.top {
            prop_assert_eq!(c.hom_dim(a, a), 1);
            for b in a + 1..=q.top {
                prop_assert_eq!(c.hom_dim(a, b), path_count_dp(&q, a, b));
            }
        }
        let c = Arc::new(c);
        prop_assert!(c.opposite().validate().is_empty());
    }
}
