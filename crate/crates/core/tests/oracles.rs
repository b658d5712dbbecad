use cdgforge::corpus::{truncation_module, Corpus};
use cdgforge::module::{ext1, find_isomorphism, projective_resolution, stable_hom, FinModule, PdVerdict, StableMode};
use cdgforge::oracle;
use cdgforge::Fp;

fn small_modules(c: &Corpus) -> Vec<(String, FinModule)> {
    let mut out = c.s2_modules.clone();
    for i in 1..=3 {
        out.push((format!("S4/x^{i}"), truncation_module(&c.s4, i)));
    }
    out
}

fn pairs(c: &Corpus) -> Vec<(String, FinModule, FinModule)> {
    let mods = small_modules(c);
    let mut out = vec![];
    for (a, m) in &mods {
        for (b, n) in &mods {
            if m.algebra().name() == n.algebra().name() && m.dim() * n.dim() <= 9 {
                out.push((format!("{a},{b}"), m.clone(), n.clone()));
            }
        }
    }
    out
}

#[test]
fn hom_dims_match_enumeration() {
    for p in [2, 3, 5] {
        let c = Corpus::standard(Fp::new(p).unwrap()).unwrap();
        for (name, m, n) in pairs(&c).into_iter().filter(|(_, m, n)| p < 5 || m.dim() * n.dim() <= 6) {
            assert_eq!(m.hom_space(&n).unwrap().len(), oracle::hom_dim(&m, &n).unwrap(), "{name} over F{p}");
        }
    }
}

#[test]
fn ext1_matches_enumeration() {
    let c = Corpus::standard(Fp::new(3).unwrap()).unwrap();
    for (name, m, n) in pairs(&c) {
        let (omega, cover, incl) = m.syzygy().unwrap();
        if omega.dim() * n.dim() > 12 || cover.module.dim() * n.dim() > 12 {
            continue;
        }
        let want = oracle::ext1_dim(&omega, &cover.module, &incl, &n).unwrap();
        assert_eq!(ext1(&m, &n).unwrap().dim, want, "{name}");
    }
}

#[test]
fn stable_hom_matches_enumeration() {
    let c = Corpus::standard(Fp::new(3).unwrap()).unwrap();
    for (name, m, n) in pairs(&c) {
        let q = n.projective_cover().unwrap().module;
        if m.dim() * q.dim() > 12 || q.dim() * n.dim() > 12 {
            continue;
        }
        let want = oracle::stable_hom_dim(&m, &n, &q).unwrap();
        assert_eq!(stable_hom(&m, &n, StableMode::Projectives).unwrap().dim, want, "{name}");
    }
}

#[test]
fn isomorphism_search_matches_enumeration() {
    let c = Corpus::standard(Fp::new(3).unwrap()).unwrap();
    for (name, m, n) in pairs(&c) {
        assert_eq!(find_isomorphism(&m, &n).unwrap().is_found(), oracle::isomorphic(&m, &n).unwrap(), "{name}");
    }
}

#[test]
fn s2_values() {
    let c = Corpus::standard(Fp::new(3).unwrap()).unwrap();
    let k = c.k();
    let s2 = c.s2_modules[1].1.clone();

    assert_eq!(oracle::hom_dim(&k, &k).unwrap(), 1);
    let q = s2.clone();
    assert_eq!(oracle::stable_hom_dim(&k, &k, &q).unwrap(), 1);
    let (omega, cover, incl) = k.syzygy().unwrap();
    assert_eq!(oracle::ext1_dim(&omega, &cover.module, &incl, &k).unwrap(), 1);
    assert_eq!(oracle::ext1_dim(&omega, &cover.module, &incl, &s2).unwrap(), 0);
    assert!(oracle::isomorphic(&omega, &k).unwrap());

    let r = projective_resolution(&k, 3).unwrap();
    assert!(matches!(r.verdict, PdVerdict::Infinite { earlier: 0, later: 1 }));
    assert_eq!(projective_resolution(&s2, 3).unwrap().verdict, PdVerdict::Finite(0));
}

#[test]
fn enumeration_refuses_large_instances() {
    let c = Corpus::standard(Fp::new(3).unwrap()).unwrap();
    let s4 = FinModule::free(c.s4.clone(), 2);
    assert!(oracle::homs(&s4, &s4).is_err());
}
