use cdgforge::corpus::Corpus;
use cdgforge::mf::random::{random_duplex, random_mixed};
use cdgforge::mf::{completed_bar, fold, sbar, totalization, FoldMode, KoszulData, SignRule};
use cdgforge::verify::curvature_check;
use cdgforge::Fp;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn corpus() -> Corpus {
    Corpus::standard(Fp::new(3).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn random_mixed_complexes_are_valid(seed in any::<u64>()) {
        let c = corpus();
        let x = random_mixed(&c.ring, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        prop_assert!(x.check().is_empty());
        let prod = fold(&x, FoldMode::Product).unwrap();
        prop_assert!(curvature_check(&prod));
        prop_assert_eq!(&prod, &fold(&x, FoldMode::Sum).unwrap());
    }

    #[test]
    fn suspension_composes(seed in any::<u64>(), m in -3i64..=3, n in -3i64..=3) {
        let c = corpus();
        let x = random_mixed(&c.ring, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        prop_assert_eq!(x.suspend(m).suspend(n), x.suspend(m + n));
        prop_assert!(x.suspend(m).check().is_empty());
    }

    #[test]
    fn sbar_of_random_duplex(seed in any::<u64>()) {
        let c = corpus();
        let d = random_duplex(&c.ring, 3, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        prop_assert!(curvature_check(&d));
        prop_assert!(sbar(&d).unwrap().check_window(-4, 4).is_empty());
    }

    #[test]
    fn completed_bar_matches_totalization(seed in any::<u64>()) {
        let c = corpus();
        let x = random_mixed(&c.ring, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        let Some((a, b)) = x.support_range() else { return Ok(()) };
        let closed = completed_bar(&x).unwrap();
        prop_assert!(totalization(&x, a - 3, b, SignRule::Quoted).unwrap().mismatches(&closed).is_empty());
    }
}
