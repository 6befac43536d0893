use proptest::prelude::*;

use super::*;
use crate::error::Error;

const Q: FieldSpec = FieldSpec::Rational;
const F2: FieldSpec = FieldSpec::Prime { p: 2 };
const F5: FieldSpec = FieldSpec::Prime { p: 5 };

fn qm(rows: &[&[i64]]) -> Matrix<Rational> {
    Matrix::from_i64(Q, rows)
}

fn fm(field: FieldSpec, rows: &[&[i64]]) -> Matrix<Fp> {
    Matrix::from_i64(field, rows)
}

#[test]
fn rref_over_f5() {
    let e = fm(F5, &[&[2, 4], &[1, 2]]).rref();
    assert_eq!(e.reduced, fm(F5, &[&[1, 2], &[0, 0]]));
    assert_eq!(e.rank, 1);
    assert_eq!(e.pivots, vec![0]);
}

#[test]
fn rref_identity_and_zero() {
    let id = Matrix::<Rational>::identity(Q, 3);
    let e = id.rref();
    assert_eq!(e.reduced, id);
    assert_eq!(e.rank, 3);
    let z = Matrix::<Rational>::zeros(Q, 2, 3);
    let e = z.rref();
    assert_eq!(e.reduced, z);
    assert_eq!(e.rank, 0);
}

#[test]
fn kernel_examples() {
    assert_eq!(Matrix::<Rational>::identity(Q, 2).kernel_basis().cols(), 0);

    let k = qm(&[&[1, 1], &[1, 1]]).kernel_basis();
    assert_eq!(k.shape(), (2, 1));
    // spans (1,-1)
    assert_eq!(k[(0, 0)], -k[(1, 0)].clone());
    assert!(!k.is_zero());

    let k = fm(F2, &[&[1, 1]]).kernel_basis();
    assert_eq!(k, fm(F2, &[&[1], &[1]]));
}

#[test]
fn solve_examples() {
    let b = qm(&[&[3, -1], &[7, 2]]);
    assert_eq!(Matrix::identity(Q, 2).solve_right(&b).unwrap(), b);

    let a = qm(&[&[1, 1], &[1, 1]]);
    assert_eq!(a.solve_right(&qm(&[&[1], &[0]])), Err(Error::NoSolution));

    let x = fm(F5, &[&[2]]).solve_right(&fm(F5, &[&[1]])).unwrap();
    assert_eq!(x, fm(F5, &[&[3]]));
}

#[test]
fn solve_shape_and_field_errors() {
    let a = qm(&[&[1, 0], &[0, 1]]);
    assert!(matches!(a.solve_right(&qm(&[&[1]])), Err(Error::Shape(_))));
    let p = Matrix::<Rational>::new(FieldSpec::Rational, 1, 1, vec![Rational::from_i64(&Q, 1)]).unwrap();
    assert!(p.try_mul(&p).is_ok());
    let bad = Matrix::<Fp>::identity(F2, 2);
    let other = Matrix::<Fp>::identity(F5, 2);
    assert!(matches!(bad.try_mul(&other), Err(Error::FieldMismatch(..))));
}

#[test]
fn quotient_examples() {
    let q = quotient_coords(Q, 2, &qm(&[&[1], &[0]])).unwrap();
    assert_eq!(q.dim, 1);
    assert_eq!(q.proj, qm(&[&[0, 1]]));

    let q = quotient_coords(Q, 2, &Matrix::<Rational>::identity(Q, 2)).unwrap();
    assert_eq!(q.dim, 0);

    let q = quotient_coords(Q, 3, &Matrix::<Rational>::zeros(Q, 3, 0)).unwrap();
    assert_eq!(q.proj, Matrix::identity(Q, 3));

    assert!(matches!(
        quotient_coords(Q, 3, &qm(&[&[1], &[0]])),
        Err(Error::Shape(_))
    ));
}

#[test]
fn scalar_strings() {
    let x = Rational::parse_in(&Q, "-6/4").unwrap();
    assert_eq!(x.render(&Q), "-3/2");
    assert_eq!(Rational::parse_in(&Q, "7").unwrap().render(&Q), "7");
    assert!(Rational::parse_in(&Q, "1/0").is_err());
    assert_eq!(Fp::parse_in(&F5, "-1").unwrap().render(&F5), "4");
    let m = fm(F5, &[&[1, 2], &[3, 4]]);
    let back = Matrix::<Fp>::from_json(F5, &m.to_json(), 2, 2).unwrap();
    assert_eq!(back, m);
}

#[test]
fn field_spec_parsing() {
    assert_eq!("rational".parse::<FieldSpec>().unwrap(), Q);
    assert_eq!("fp:7".parse::<FieldSpec>().unwrap(), FieldSpec::Prime { p: 7 });
    assert!("fp:8".parse::<FieldSpec>().is_err());
    assert!("fp:1".parse::<FieldSpec>().is_err());
    let json = serde_json::to_string(&FieldSpec::Prime { p: 5 }).unwrap();
    assert_eq!(json, r#"{"kind":"prime","p":5}"#);
}

#[test]
fn coordinates_roundtrip() {
    let basis = qm(&[&[1, 0], &[1, 1], &[0, 2]]);
    let c = Coordinates::new(basis.clone());
    let v = &basis * &qm(&[&[3], &[-2]]);
    assert_eq!(c.solve(&v).unwrap(), qm(&[&[3], &[-2]]));
    assert!(c.coords(&[Rational::from_i64(&Q, 1), Rational::from_i64(&Q, 0), Rational::from_i64(&Q, 0)]).is_none());
}

fn small_matrix(field: FieldSpec) -> impl Strategy<Value = Matrix<Rational>> {
    (1usize..5, 1usize..5).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(-3i64..4, r * c).prop_map(move |v| {
            let data = v.into_iter().map(|x| Rational::from_i64(&field, x)).collect();
            Matrix::new(field, r, c, data).unwrap()
        })
    })
}

fn small_fp_matrix(p: u64) -> impl Strategy<Value = Matrix<Fp>> {
    let field = FieldSpec::Prime { p };
    (1usize..6, 1usize..6).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(0i64..p as i64, r * c).prop_map(move |v| {
            let data = v.into_iter().map(|x| Fp::from_i64(&field, x)).collect();
            Matrix::new(field, r, c, data).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn kernel_is_annihilated(m in small_matrix(Q)) {
        let k = m.kernel_basis();
        prop_assert!((&m * &k).is_zero());
        prop_assert_eq!(m.rank() + k.cols(), m.cols());
        prop_assert_eq!(k.rank(), k.cols());
    }

    #[test]
    fn kernel_is_annihilated_mod_p(m in small_fp_matrix(3)) {
        let k = m.kernel_basis();
        prop_assert!((&m * &k).is_zero());
        prop_assert_eq!(m.rank() + k.cols(), m.cols());
    }

    #[test]
    fn rref_is_idempotent(m in small_matrix(Q)) {
        let once = m.rref().reduced;
        prop_assert_eq!(once.rref().reduced, once.clone());
    }

    #[test]
    fn solutions_are_exact(m in small_matrix(Q), seed in proptest::collection::vec(-2i64..3, 4)) {
        let x0 = Matrix::new(Q, m.cols(), 1,
            (0..m.cols()).map(|i| Rational::from_i64(&Q, seed[i % seed.len()])).collect()).unwrap();
        let b = &m * &x0;
        let x = m.solve_right(&b).unwrap();
        prop_assert_eq!(&m * &x, b);
    }

    #[test]
    fn quotient_kills_exactly_the_subspace(m in small_matrix(Q)) {
        let q = quotient_coords(Q, m.rows(), &m).unwrap();
        prop_assert!((&q.proj * &m).is_zero());
        prop_assert_eq!(q.proj.rank(), q.dim);
        prop_assert_eq!(q.dim, m.rows() - m.rank());
        // kernel of proj equals the column space of m
        let k = q.proj.kernel_basis();
        prop_assert_eq!(k.hstack(&m).unwrap().rank(), k.cols());
        prop_assert!((&q.proj * &q.section).is_identity());
    }
}
