use std::collections::BTreeMap;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::random::{random_combination, random_duplex, random_mixed};
use super::*;
use crate::algebra::FinAlgebra;
use crate::linalg::{Fp, Matrix};
use crate::module::FinModule;
use crate::tame::{is_acyclic_on, TameComplex};

fn f3() -> Fp {
    Fp::new(3).unwrap()
}

fn ring() -> Arc<KoszulRing> {
    let s4 = Arc::new(FinAlgebra::truncated_polynomial(f3(), 4).unwrap());
    let w = s4.basis(2);
    Arc::new(KoszulRing::new(s4, w).unwrap())
}

fn d1(r: &Arc<KoszulRing>) -> Duplex {
    let s = r.base();
    let free = FinModule::free(s.clone(), 1);
    let x = free.act(&s.basis(1));
    Duplex::new(r.clone(), free.clone(), free, x.clone(), x).unwrap()
}

#[test]
fn koszul_regular_is_valid_and_round_trips() {
    let r = ring();
    let x = MixedComplex::koszul_regular(r.clone());
    assert!(x.check().is_empty());
    let c = x.to_cdg();
    assert!(c.validate().is_empty());
    assert_eq!(MixedComplex::from_cdg(r.clone(), &c).unwrap(), x);
    let reg = crate::graded::CdgModule::regular(r.cdg().clone()).unwrap();
    assert!(MixedComplex::from_cdg(r.clone(), &reg).unwrap() == x);
}

#[test]
fn duplex_checks() {
    let r = ring();
    let d = d1(&r);
    assert!(d.check().is_empty());
    let s = r.base();
    let free = FinModule::free(s.clone(), 1);
    let bad = Duplex::unchecked(r.clone(), free.clone(), free.clone(), free.act(&s.basis(1)), free.act(&s.basis(3))).unwrap();
    let report = bad.check();
    assert!(report.iter().any(|m| m.contains("fg")), "{report:?}");
}

#[test]
fn fold_of_koszul() {
    let r = ring();
    let x = MixedComplex::koszul_regular(r.clone());
    let m = fold(&x, FoldMode::Product).unwrap();
    assert_eq!(m, fold(&x, FoldMode::Sum).unwrap());
    assert_eq!(m.f, Matrix::identity(f3(), 4));
    assert_eq!(m.g, m.m1.act(r.w()));
    assert_eq!(fold(&iota(&d1(&r)), FoldMode::Sum).unwrap(), d1(&r));
}

#[test]
fn sbar_of_d1() {
    let r = ring();
    let sb = sbar(&d1(&r)).unwrap();
    assert!(sb.check_window(-6, 6).is_empty());
    for n in -2..=2 {
        assert_eq!(sb.comp_dim(n), 8);
    }
    let x = d1(&r).f;
    let fl = f3();
    let expected = Matrix::vstack(&[
        &Matrix::hstack(&[&x, &x.mul(&x)]),
        &Matrix::hstack(&[&Matrix::identity(fl, 4).neg(), &x.neg()]),
    ]);
    assert_eq!(sb.d(0), expected);
    assert_eq!(sb.d(-2), expected);
    let a = sb.window_eval(-3, 1);
    let b = sb.window_eval(-1, 3);
    for n in -1..=1 {
        assert_eq!(a.comp(n), b.comp(n));
    }
    assert_eq!(a.s(0), b.s(0));
    assert_eq!(a.s(1), b.s(1));
    assert_eq!(a.d(-1), b.d(-1));
    assert_eq!(a.d(0), b.d(0));
    assert!(TameComplex::zero(r).window_eval(-5, 5).is_zero());
}

#[test]
fn induce_koszul_examples() {
    let r = ring();
    let s = r.base();
    let v = SComplex::stalk(FinModule::free(s.clone(), 1), 0);
    let k = induce_koszul(&r, &v, 0).unwrap();
    assert_eq!(k, MixedComplex::koszul_regular(r.clone()));
    assert_eq!(k.total_dim(), 2 * v.total_dim());
    assert!(k.s_contraction().unwrap().is_some());
    assert!(MixedComplex::koszul_regular(r.clone()).suspend(1).s_contraction().unwrap().is_some());
}

#[test]
fn adjunction_counit_and_unit() {
    let r = ring();
    let x = MixedComplex::koszul_regular(r.clone());
    let eps = counit(&x).unwrap();
    let src = sbar(&fold(&x, FoldMode::Product).unwrap()).unwrap();
    assert!(is_koszul_morphism(&src, &x, &|n| eps.get(&n).cloned().unwrap_or_else(|| Matrix::zeros(f3(), x.comp_dim(n), src.comp_dim(n))), -3, 3));
    assert!(eps[&0].is_surjective() && eps[&-1].is_surjective());
    let m = d1(&r);
    let eta = unit(&m).unwrap();
    let ix = iota(&m);
    let tgt = sbar(&m.suspend()).unwrap();
    assert!(is_koszul_morphism(&ix, &tgt, &|n| eta.get(&n).cloned().unwrap_or_else(|| Matrix::zeros(f3(), tgt.comp_dim(n), ix.comp_dim(n))), -3, 3));
    assert!(eta.values().all(|e| e.is_injective()));
}

#[test]
fn adjunction_round_trips() {
    let r = ring();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..5 {
        let m = random_duplex(&r, 2, &mut rng).unwrap();
        let x = random_mixed(&r, &mut rng).unwrap();
        let fx = fold(&x, FoldMode::Product).unwrap();
        // sbar ⊣ fold∏
        let basis = m.hom_space(&fx).unwrap();
        let b0: Vec<Matrix> = basis.iter().map(|b| b.0.clone()).collect();
        let b1: Vec<Matrix> = basis.iter().map(|b| b.1.clone()).collect();
        for _ in 0..3 {
            let mut rr = ChaCha8Rng::seed_from_u64(rand::Rng::gen(&mut rng));
            let mut rr2 = rr.clone();
            let phi = (
                random_combination(&b0, fx.m0.dim(), m.m0.dim(), f3(), &mut rr),
                random_combination(&b1, fx.m1.dim(), m.m1.dim(), f3(), &mut rr2),
            );
            let alpha = prod_to_koszul(&m, &x, &phi).unwrap();
            assert_eq!(prod_to_duplex(&m, &x, &alpha).unwrap(), phi);
        }
        let sb = sbar(&m).unwrap();
        let (a, b) = x.support_range().unwrap();
        for alpha in koszul_hom_space(&sb, &x, a, b).unwrap() {
            let phi = prod_to_duplex(&m, &x, &alpha).unwrap();
            assert_eq!(prod_to_koszul(&m, &x, &phi).unwrap(), alpha);
        }
        // fold⊕ ⊣ sbar∘Σ
        let sbs = sbar(&m.suspend()).unwrap();
        for alpha in koszul_hom_space(&x, &sbs, a, b).unwrap() {
            let phi = sum_to_duplex(&x, &m, &alpha).unwrap();
            assert_eq!(sum_to_koszul(&x, &m, &phi).unwrap(), alpha);
        }
        for phi in fx.hom_space(&m).unwrap() {
            let alpha = sum_to_koszul(&x, &m, &phi).unwrap();
            assert_eq!(sum_to_duplex(&x, &m, &alpha).unwrap(), phi);
        }
    }
}

#[test]
fn bar_complex_is_acyclic() {
    let r = ring();
    let x = MixedComplex::koszul_regular(r.clone());
    let bar = bar_complex(&x, 8).unwrap();
    assert!(bar.check().is_empty(), "{:?}", bar.check());
    assert!(bar.is_acyclic_on(-6, 6).unwrap());
    let b0 = bar_complex(&x, 0).unwrap();
    assert!(b0.augmentation.values().all(|q| q.is_surjective()));
    assert!(bar_complex(&x, 2).unwrap().is_acyclic_on(-6, 6).is_err());
    for k in 0..=2 {
        assert_eq!(bar.terms[k].total_dim(), 2 * x.total_dim());
    }
}

#[test]
fn completed_bar_closed_form_matches_totalization() {
    let r = ring();
    let x = MixedComplex::koszul_regular(r.clone());
    let b = completed_bar(&x).unwrap();
    let dims: Vec<usize> = (-3..=2).map(|n| b.comp_dim(n)).collect();
    assert_eq!(dims, vec![8, 8, 8, 4, 0, 0]);
    assert!(b.check_window(-8, 4).is_empty());
    let tot = totalization(&x, -6, 2, SignRule::Quoted).unwrap();
    assert!(tot.mismatches(&b).is_empty(), "{:?}", tot.mismatches(&b));
    for rule in [SignRule::WithoutTriangular, SignRule::WithoutSlot, SignRule::Trivial] {
        assert!(!totalization(&x, -6, 2, rule).unwrap().mismatches(&b).is_empty(), "{rule:?}");
    }
}

#[test]
fn alpha_epi_and_filtration() {
    let r = ring();
    let x = MixedComplex::koszul_regular(r.clone());
    let ae = alpha_epi(&x).unwrap();
    assert!(ae.check(-6, 6).is_empty(), "{:?}", ae.check(-6, 6));
    assert_eq!(ae.source.comp_dim(3), 8);
    assert_eq!(ae.kernel.comp_dim(0), 4);
    assert!(counit_factorization_check(&x, -6, 6).unwrap());
    for i in 0..=2 {
        let q = filtration_quotient(&x, i).unwrap();
        let target = induce_koszul(&r, &x.underlying(), -2 * i - 2).unwrap();
        assert!(koszul_isomorphism(&q, &target).unwrap().is_found(), "i = {i}");
    }
}

#[test]
fn random_objects_are_valid() {
    let r = ring();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..10 {
        let x = random_mixed(&r, &mut rng).unwrap();
        let m = fold(&x, FoldMode::Sum).unwrap();
        assert!(m.check().is_empty());
        let (a, b) = x.support_range().unwrap();
        assert!(completed_bar(&x).is_ok());
        let tot = totalization(&x, a - 4, b, SignRule::Quoted).unwrap();
        assert!(tot.mismatches(&completed_bar(&x).unwrap()).is_empty());
        assert!(counit_factorization_check(&x, a - 2, b + 2).unwrap());
        let d = random_duplex(&r, 3, &mut rng).unwrap();
        assert!(sbar(&d).unwrap().check_window(-4, 4).is_empty());
    }
    let _ = BTreeMap::<i64, Matrix>::new();
    let _ = is_acyclic_on;
}
