use std::sync::Arc;

use proptest::prelude::*;

use super::*;
use crate::backends::{fi_category, linear, star_ray, vi_category};
use crate::exactla::{Field, FieldSpec, Fp, Matrix, Rational};
use crate::lincat::LinCat;

const Q: FieldSpec = FieldSpec::Rational;

fn lin(l: usize) -> Arc<LinCat<Rational>> {
    Arc::new(linear(l, Q).unwrap())
}

fn fi(l: usize) -> Arc<LinCat<Rational>> {
    Arc::new(fi_category(l, Q).unwrap())
}

/// Interval module on a linear quiver, built from scratch: every path inside
/// `[i, j]` acts by 1.
fn interval<F: Field>(cat: &Arc<LinCat<F>>, i: usize, j: usize) -> Arc<Module<F>> {
    let f = cat.field();
    let dims: Vec<usize> = (0..cat.num_objects()).map(|a| usize::from(i <= a && a <= j)).collect();
    let act = cat
        .morphisms()
        .iter()
        .map(|m| {
            let mut x = Matrix::zeros(f, dims[m.dst], dims[m.src]);
            if dims[m.src] == 1 && dims[m.dst] == 1 {
                x[(0, 0)] = F::one_in(&f);
            }
            x
        })
        .collect();
    Arc::new(Module::new(cat.clone(), dims, act).unwrap())
}

fn arc<F: Field>(m: Module<F>) -> Arc<Module<F>> {
    Arc::new(m)
}

#[test]
fn representables_and_injectives_on_linear() {
    let c = lin(5);
    let p2 = Module::representable(&c, 2).unwrap();
    assert_eq!(p2.dims(), &[0, 0, 1, 1, 1, 1]);
    let i3 = Module::injective(&c, 3).unwrap();
    assert_eq!(i3.dims(), &[1, 1, 1, 1, 0, 0]);
    assert!(Arc::ptr_eq(i3.cat(), &c));
    let s1 = Module::simple(&c, 1).unwrap();
    assert_eq!(s1.dims(), &[0, 1, 0, 0, 0, 0]);
}

#[test]
fn injective_is_an_interval_from_zero() {
    let c = lin(5);
    for j in 0..=5 {
        let ij = arc(Module::injective(&c, j).unwrap());
        assert!(find_iso(&ij, &interval(&c, 0, j), 8).unwrap().is_iso());
    }
}

#[test]
fn fi_representable_dims() {
    let c = fi(4);
    assert_eq!(Module::representable(&c, 0).unwrap().dims(), &[1, 1, 1, 1, 1]);
    assert_eq!(Module::representable(&c, 1).unwrap().dims(), &[0, 1, 2, 3, 4]);
    assert_eq!(Module::representable(&c, 2).unwrap().dims(), &[0, 0, 2, 6, 12]);
}

#[test]
fn double_dual_is_identical() {
    let c = fi(3);
    let m = Module::representable(&c, 1).unwrap();
    let dd = m.dual().dual();
    assert!(Arc::ptr_eq(dd.cat(), &c));
    assert!(dd.same_data(&m));
    assert_eq!(m.dual().dims(), &[3, 2, 1, 0]);
}

#[test]
fn dual_of_representable_is_injective_over_opposite() {
    let c = lin(4);
    let p1 = Module::representable(&c, 1).unwrap();
    let d = arc(p1.dual());
    let op = c.opposite();
    let i3 = arc(Module::injective(&op, 3).unwrap());
    assert!(find_iso(&d, &i3, 8).unwrap().is_iso());
}

#[test]
fn hom_between_intervals() {
    let c = lin(4);
    let x11 = interval(&c, 1, 1);
    let x01 = interval(&c, 0, 1);
    assert_eq!(hom_space(&x11, &x01).unwrap().dim(), 1);
    assert_eq!(hom_space(&x01, &x11).unwrap().dim(), 0);
    assert_eq!(hom_by_naturality(&x11, &x01).unwrap().dim(), 1);
    assert_eq!(hom_by_naturality(&x01, &x11).unwrap().dim(), 0);
    let zero = arc(Module::zero(&c));
    assert_eq!(hom_space(&x01, &zero).unwrap().dim(), 0);
}

#[test]
fn yoneda_on_small_categories() {
    let cats: Vec<Arc<LinCat<Rational>>> = vec![lin(4), Arc::new(star_ray(4, Q).unwrap()), fi(3)];
    for c in cats {
        let mods: Vec<Arc<Module<Rational>>> = (0..=c.top())
            .flat_map(|a| {
                [
                    arc(Module::representable(&c, a).unwrap()),
                    arc(Module::injective(&c, a).unwrap()),
                ]
            })
            .collect();
        for m in &mods {
            for a in 0..=c.top() {
                let p = arc(Module::representable(&c, a).unwrap());
                let i = arc(Module::injective(&c, a).unwrap());
                assert_eq!(hom_space(&p, m).unwrap().dim(), m.dim(a), "{} P_{a}", c.name());
                assert_eq!(hom_space(m, &i).unwrap().dim(), m.dim(a), "{} I_{a}", c.name());
            }
        }
    }
}

#[test]
fn cover_route_matches_naturality_route() {
    let c = fi(3);
    let mods: Vec<Arc<Module<Rational>>> = (0..=3)
        .flat_map(|a| {
            [
                arc(Module::representable(&c, a).unwrap()),
                arc(Module::injective(&c, a).unwrap()),
                arc(Module::simple(&c, a).unwrap()),
            ]
        })
        .collect();
    for m in &mods {
        for n in &mods {
            let a = hom_space(m, n).unwrap();
            let b = hom_by_naturality(m, n).unwrap();
            assert_eq!(a.dim(), b.dim(), "{:?} -> {:?}", m.dims(), n.dims());
            for f in a.basis() {
                f.validate().unwrap();
                assert!(b.coords(f).is_some());
            }
        }
    }
}

#[test]
fn kernel_of_cover_of_interval() {
    let c = lin(5);
    let p0 = arc(Module::representable(&c, 0).unwrap());
    let x01 = interval(&c, 0, 1);
    let h = hom_space(&p0, &x01).unwrap();
    assert_eq!(h.dim(), 1);
    let (k, incl) = kernel(&h.basis()[0]).unwrap();
    assert_eq!(k.dims(), &[0, 0, 1, 1, 1, 1]);
    assert!(incl.is_mono());
    let p2 = arc(Module::representable(&c, 2).unwrap());
    assert!(find_iso(&k, &p2, 8).unwrap().is_iso());
}

#[test]
fn cokernel_of_zero_map() {
    let c = lin(3);
    let m = interval(&c, 1, 2);
    let z = arc(Module::zero(&c));
    let (q, _) = cokernel(&ModuleMap::zero(z, m.clone())).unwrap();
    assert!(q.same_data(&m));
}

#[test]
fn radical_and_top() {
    let c = lin(5);
    let p0 = arc(Module::representable(&c, 0).unwrap());
    let (r, _) = radical_submodule(&p0).unwrap();
    assert_eq!(r.dims(), &[0, 1, 1, 1, 1, 1]);
    let (t, _) = top(&interval(&c, 2, 4)).unwrap();
    assert_eq!(t.dims(), &[0, 0, 1, 0, 0, 0]);
    let s = arc(Module::simple(&c, 3).unwrap());
    assert!(radical_submodule(&s).unwrap().0.is_zero());
}

#[test]
fn presentation_of_interval() {
    let c = lin(5);
    let pres = minimal_presentation(&interval(&c, 0, 1)).unwrap();
    assert_eq!(pres.p0().module().dims(), &[1, 1, 1, 1, 1, 1]);
    assert_eq!(pres.p1().module().dims(), &[0, 0, 1, 1, 1, 1]);
    assert_eq!(pres.p0().summands()[0].obj, 0);
    assert_eq!(pres.p1().summands()[0].obj, 2);
    assert!(pres.is_minimal().unwrap());
    assert!(pres.f1.is_mono());
}

#[test]
fn projective_has_zero_syzygy() {
    let c = fi(3);
    for a in 0..=3 {
        let p = arc(Module::representable(&c, a).unwrap());
        let cov = projective_cover(&p).unwrap();
        assert!(cov.is_projective());
        assert!(find_iso(cov.p0(), &p, 8).unwrap().is_iso());
    }
}

#[test]
fn fi_simple_presentation() {
    let c = fi(4);
    let s0 = arc(Module::simple(&c, 0).unwrap());
    let pres = minimal_presentation(&s0).unwrap();
    assert_eq!(pres.p0().module().dims(), &[1, 1, 1, 1, 1]);
    assert_eq!(pres.p1().module().dims(), &[0, 1, 2, 3, 4]);
    // the image of P_1(n) -> P_0(n) is everything for n >= 1
    let ranks: Vec<usize> = pres.f1.comps().iter().map(Matrix::rank).collect();
    assert_eq!(ranks, vec![0, 1, 1, 1, 1]);
    assert!(pres.is_minimal().unwrap());
}

#[test]
fn fi_top_of_representable_is_regular() {
    let c = fi(3);
    let p2 = arc(Module::representable(&c, 2).unwrap());
    let cov = projective_cover(&p2).unwrap();
    assert_eq!(cov.projective.summands().len(), 1);
    assert_eq!(cov.projective.summands()[0].dim(), 2);
}

#[test]
fn injective_envelope_of_simple() {
    let c = lin(5);
    let s2 = arc(Module::simple(&c, 2).unwrap());
    let env = injective_envelope(&s2, 3).unwrap();
    assert_eq!(env.injective.dims(), &[1, 1, 1, 0, 0, 0]);
    assert!(env.inclusion.is_mono());
    let x12 = interval(&c, 1, 2);
    let env = injective_envelope(&x12, 3).unwrap();
    assert_eq!(env.injective.dims(), &[1, 1, 1, 0, 0, 0]);
    let (q, _) = cokernel(&env.inclusion).unwrap();
    assert_eq!(q.dims(), &[1, 0, 0, 0, 0, 0]);
    assert_eq!(
        injective_envelope(&arc(Module::representable(&c, 0).unwrap()), 3).err(),
        Some(crate::Error::NotFiniteDimensional)
    );
}

#[test]
fn fd_verdicts() {
    let c = lin(8);
    assert_eq!(is_fd(&interval(&c, 1, 4), 3), FdVerdict::FiniteDimensional);
    assert_eq!(is_fd(&interval(&c, 1, 8), 3), FdVerdict::NotFiniteDimensional);
    assert_eq!(is_fd(&interval(&c, 8, 8), 3), FdVerdict::BoundaryUnclear);
}

#[test]
fn decompose_sum_of_intervals() {
    let c = lin(3);
    let a = interval(&c, 0, 1);
    let b = interval(&c, 1, 1);
    let s = Module::direct_sum(&[a.clone(), b.clone()]).unwrap().sum;
    let pieces = decompose(&s, DEFAULT_BUDGET).unwrap();
    assert_eq!(pieces.len(), 2);
    assert!(pieces.iter().all(|p| p.verdict == Verdict::Indecomposable && p.multiplicity == 1));
    let total: Vec<usize> = (0..4).map(|o| pieces.iter().map(|p| p.module.dim(o)).sum()).collect();
    assert_eq!(total, s.dims());

    let twice = Module::direct_sum(&[b.clone(), b.clone()]).unwrap().sum;
    let pieces = decompose(&twice, DEFAULT_BUDGET).unwrap();
    assert_eq!(pieces.len(), 1);
    assert_eq!(pieces[0].multiplicity, 2);
}

#[test]
fn intervals_and_fi_representables_are_indecomposable() {
    let c = lin(4);
    assert!(is_indecomposable(&interval(&c, 1, 3)).unwrap());
    let f = fi(3);
    assert!(is_indecomposable(&arc(Module::representable(&f, 1).unwrap())).unwrap());
    assert_eq!(end_algebra(&arc(Module::representable(&f, 1).unwrap())).unwrap().dim(), 1);
}

#[test]
fn end_of_non_split_pair_has_radical() {
    let c = lin(3);
    let s = Module::direct_sum(&[interval(&c, 0, 1), interval(&c, 1, 1)]).unwrap().sum;
    let e = end_algebra(&s).unwrap();
    assert_eq!(e.dim(), 3);
    assert_eq!(e.radical.cols(), 1);
}

#[test]
fn vi_and_prime_field_covers() {
    let c: Arc<LinCat<Rational>> = Arc::new(vi_category(2, 2, Q).unwrap());
    let s0 = arc(Module::simple(&c, 0).unwrap());
    let pres = minimal_presentation(&s0).unwrap();
    assert!(pres.is_minimal().unwrap());
    assert_eq!(pres.p1().module().dims(), &[0, 1, 3]);

    let f7 = FieldSpec::Prime { p: 7 };
    let c: Arc<LinCat<Fp>> = Arc::new(fi_category(3, f7).unwrap());
    let s1 = arc(Module::simple(&c, 1).unwrap());
    let pres = minimal_presentation(&s1).unwrap();
    assert!(pres.is_minimal().unwrap());
    assert_eq!(hom_space(&pres.cover.syzygy, &s1).unwrap().dim(), hom_by_naturality(&pres.cover.syzygy, &s1).unwrap().dim());
}

#[test]
fn module_json_round_trip() {
    let c = fi(3);
    let m = Module::representable(&c, 1).unwrap();
    let v = m.to_json();
    let back = Module::from_json(&c, &v).unwrap();
    assert!(back.same_data(&m));
    let other = lin(3);
    assert!(Module::from_json(&other, &v).is_err());
}

#[test]
fn non_functor_is_rejected() {
    let c = lin(2);
    let m = interval(&c, 0, 2);
    let mut act: Vec<Matrix<Rational>> = m.actions().to_vec();
    let g = c.index_of("a1").unwrap();
    act[g] = Matrix::from_i64(Q, &[&[2]]);
    assert!(Module::new(c.clone(), m.dims().to_vec(), act).is_err());
}

fn small_interval() -> impl Strategy<Value = (usize, usize, usize, usize)> {
    (0usize..6, 0usize..6, 0usize..6, 0usize..6).prop_map(|(a, b, c, d)| (a.min(b), a.max(b), c.min(d), c.max(d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn exactness_counts_reconcile((i, j, k, l) in small_interval(), pick in 0usize..4) {
        let c = lin(5);
        let m = interval(&c, i, j);
        let n = interval(&c, k, l);
        let h = hom_space(&m, &n).unwrap();
        prop_assume!(h.dim() > 0);
        let f = &h.basis()[pick % h.dim()];
        let (ker, _) = kernel(f).unwrap();
        let (cok, _) = cokernel(f).unwrap();
        for a in 0..6 {
            let r = f.comp(a).rank();
            prop_assert_eq!(ker.dim(a), m.dim(a) - r);
            prop_assert_eq!(cok.dim(a), n.dim(a) - r);
        }
    }

    #[test]
    fn linear_modules_are_hereditary((i, j, k, l) in small_interval()) {
        let c = lin(5);
        let s = Module::direct_sum(&[interval(&c, i, j), interval(&c, k, l)]).unwrap().sum;
        let (omega, _) = syzygy(&s).unwrap();
        let (omega2, _) = syzygy(&omega).unwrap();
        prop_assert!(omega2.is_zero());
    }

    #[test]
    fn hom_routes_agree((i, j, k, l) in small_interval()) {
        let c = lin(5);
        let m = interval(&c, i, j);
        let n = interval(&c, k, l);
        let expected = usize::from(k <= i && i <= l && l <= j);
        prop_assert_eq!(hom_space(&m, &n).unwrap().dim(), expected);
        prop_assert_eq!(hom_by_naturality(&m, &n).unwrap().dim(), expected);
    }
}
