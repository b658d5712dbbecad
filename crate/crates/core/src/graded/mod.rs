//! Graded algebras and modules, curved dg rings and modules, and the functors between them.

mod functors;
mod hom;
mod module;
mod ring;

pub use functors::{
    cdg_ext1_check, cone, cone_id, g_map, g_minus, g_plus, gminus_counit, gminus_to_cdg, gminus_to_graded,
    gminus_unit, gplus_counit, gplus_to_cdg, gplus_to_graded, gplus_unit, CdgExtCheck,
};
pub use hom::{
    cdg_morphisms, cohomology_dims, contracting_homotopy, dg_hom, graded_hom_space, hom_differential,
    homotopy_classes, is_cdg_injective, is_cdg_projective, is_contractible, HomComplex,
};
pub use module::{CdgModule, GradedModule};
pub use ring::{CdgRing, GradedAlgebra, GradingGroup};

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::FinAlgebra;
    use crate::linalg::{Fp, Matrix};
    use crate::module::FinModule;

    fn f3() -> Fp {
        Fp::new(3).unwrap()
    }

    fn s(n: usize) -> Arc<FinAlgebra> {
        Arc::new(FinAlgebra::truncated_polynomial(f3(), n).unwrap())
    }

    fn koszul() -> Arc<CdgRing> {
        let s4 = s(4);
        Arc::new(CdgRing::koszul(&s4, &s4.basis(2)).unwrap())
    }

    fn dg_s2() -> Arc<CdgRing> {
        Arc::new(CdgRing::ring_as_dg(s(2)).unwrap())
    }

    fn stalk_k(ring: &Arc<CdgRing>, d: i64) -> CdgModule {
        let a = ring.base().clone();
        let k = FinModule::cyclic(a.clone(), &[a.basis(1)]).unwrap();
        let z = GradedModule::concentrated(ring.algebra().clone(), k, d).unwrap();
        CdgModule::new(ring.clone(), z, Matrix::zeros(f3(), 1, 1)).unwrap()
    }

    #[test]
    fn g_plus_of_k_is_cone_of_identity() {
        let r = dg_s2();
        let k = stalk_k(&r, 0);
        let g = g_plus(&r, k.sharp()).unwrap();
        assert!(g.validate().is_empty());
        assert_eq!(g.dim(), 2);
        assert_eq!(g.diff_at(0), Matrix::identity(f3(), 1));
        let h = cohomology_dims(&g, -1..=2).unwrap();
        assert!(h.values().all(|&d| d == 0));
        let gm = g_minus(&r, k.sharp()).unwrap();
        assert_eq!(gm, g.suspend(1));
        assert!(gm.validate().is_empty());
    }

    #[test]
    fn g_plus_over_koszul_valid_and_contractible() {
        let r = koszul();
        let x = CdgModule::regular(r.clone()).unwrap();
        let g = g_plus(&r, x.sharp()).unwrap();
        assert!(g.validate().is_empty(), "{:?}", g.validate());
        assert!(is_contractible(&g).unwrap());
        assert!(is_cdg_projective(&g).unwrap());
    }

    #[test]
    fn adjunction_round_trips() {
        let r = koszul();
        let x = CdgModule::regular(r.clone()).unwrap();
        let z = x.sharp().clone();
        let g = g_plus(&r, &z).unwrap();
        // identity of G⁺Z ↦ unit ↦ identity
        let id = Matrix::identity(f3(), g.dim());
        let unit = gplus_to_graded(&r, &z, &g, &id).unwrap();
        assert_eq!(unit, gplus_unit(&z));
        assert_eq!(gplus_to_cdg(&z, &g, &unit).unwrap(), id);
        for psi in graded_hom_space(&z, x.sharp(), 0).unwrap() {
            let phi = gplus_to_cdg(&z, &x, &psi).unwrap();
            assert!(g.is_morphism(&x, &phi));
            assert_eq!(gplus_to_graded(&r, &z, &x, &phi).unwrap(), psi);
            let phi2 = gminus_to_cdg(&x, &z, &psi).unwrap();
            let gm = g_minus(&r, &z).unwrap();
            assert!(x.is_morphism(&gm, &phi2));
            assert_eq!(gminus_to_graded(&r, &x, &z, &phi2).unwrap(), psi);
        }
        // triangle identities
        let eps = gplus_counit(&g);
        assert_eq!(eps.mul(&g_map(&gplus_unit(&z))), id);
        assert_eq!(gplus_counit(&x).mul(&gplus_unit(&z)), Matrix::identity(f3(), x.dim()));
        let gm = g_minus(&r, &z).unwrap();
        assert_eq!(g_map(&gminus_counit(&z)).mul(&gminus_unit(&gm)), Matrix::identity(f3(), gm.dim()));
        assert_eq!(gminus_counit(&z).mul(&gminus_unit(&x)), Matrix::identity(f3(), x.dim()));
    }

    #[test]
    fn cones_are_contractible() {
        let r = koszul();
        let x = CdgModule::regular(r.clone()).unwrap();
        let (c, epi) = cone_id(&x).unwrap();
        assert!(c.validate().is_empty());
        assert!(c.is_morphism(&x, &epi));
        assert!(epi.is_surjective());
        let h = contracting_homotopy(&c).unwrap().unwrap();
        let id = Matrix::identity(f3(), c.dim());
        assert_eq!(c.diff().mul(&h).add(&h.mul(c.diff())), id);
        assert_eq!(homotopy_classes(&c, &c, 0).unwrap().0, 0);
        assert!(is_cdg_projective(&c).unwrap());
        assert!(!is_contractible(&x).unwrap());
        assert!(!is_cdg_projective(&x).unwrap());
        let zero = CdgModule::zero(r);
        assert!(is_cdg_projective(&zero).unwrap() && is_cdg_injective(&zero).unwrap());
        let ds = dg_s2();
        let (ck, _) = cone_id(&stalk_k(&ds, 0)).unwrap();
        assert_eq!(ck.dim(), 2);
        assert!(is_contractible(&ck).unwrap());
    }

    #[test]
    fn dg_hom_of_koszul() {
        let r = koszul();
        let x = CdgModule::regular(r.clone()).unwrap();
        let h = dg_hom(&x, &x).unwrap();
        assert_eq!(h.dim(0), 4);
        assert_eq!(h.dim(-1), 4);
        assert_eq!(h.bases.values().map(|b| b.len()).sum::<usize>(), 8);
        assert!(h.d_squared_zero());
        let (n, reps) = homotopy_classes(&x, &x, 0).unwrap();
        assert_eq!(n, reps.len());
        assert!(n > 0);
        for k in -2..=2 {
            let hs = dg_hom(&x.suspend(k), &x).unwrap();
            assert!(hs.d_squared_zero());
        }
        let ds = dg_s2();
        let (c, _) = homotopy_classes(&stalk_k(&ds, 0), &stalk_k(&ds, 0), 1).unwrap();
        assert_eq!(c, 0);
    }

    #[test]
    fn ext_cross_check_on_koszul() {
        let r = koszul();
        let x = CdgModule::regular(r.clone()).unwrap();
        let (c, _) = cone_id(&x).unwrap();
        for (a, b) in [(&x, &x), (&x, &c), (&c, &x), (&x.suspend(1), &x)] {
            let e = cdg_ext1_check(&r, a, b).unwrap();
            assert_eq!(e.via_presentation, e.via_homotopy);
        }
    }
}
