//! The standard corpus: `S2 = F[x]/(x²)`, `S4 = F[x]/(x⁴)` with `w = x²`, the Koszul algebra
//! `K = K_{S4,x²}`, `X_K`, `D1 = (S4 ⇄ S4; x, x)` and objects derived from them.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::FinAlgebra;
use crate::error::Result;
use crate::graded::{cone_id, CdgModule, CdgRing, GradedModule};
use crate::linalg::{Fp, Matrix};
use crate::mf::{induce_koszul, iota, Duplex, KoszulData, KoszulRing, MixedComplex, SComplex};
use crate::module::FinModule;

#[derive(Clone, Debug)]
pub struct Corpus {
    pub field: Fp,
    pub s2: Arc<FinAlgebra>,
    pub s4: Arc<FinAlgebra>,
    pub ring: Arc<KoszulRing>,
    pub dg_s2: Arc<CdgRing>,
    /// `S2`-modules `k`, `S2`, `k ⊕ S2`.
    pub s2_modules: Vec<(String, FinModule)>,
    /// `S4`-modules `S4/(xⁱ)`, `i = 1..=4`.
    pub s4_modules: Vec<(String, FinModule)>,
    pub d1: Duplex,
    pub mixed: Vec<(String, MixedComplex)>,
    /// Cdg modules over `dg(S2)`, then over `K`.
    pub cdg: Vec<(String, CdgModule)>,
    /// `⋯ → S2 →x S2 → ⋯` on `[-3, 3]`.
    pub periodic: SComplex,
}

/// `S/(xⁱ)` for `S = F[x]/(xⁿ)`.
pub fn truncation_module(s: &Arc<FinAlgebra>, i: usize) -> FinModule {
    FinModule::cyclic(s.clone(), &[s.basis(s.dim() - i)]).expect("cyclic submodule")
}

pub fn periodic_x(s: &Arc<FinAlgebra>, lo: i64, hi: i64) -> SComplex {
    let free = FinModule::free(s.clone(), 1);
    let x = free.act(&s.basis(1));
    let comps = (lo..=hi).map(|n| (n, free.clone())).collect();
    let d = (lo..hi).map(|n| (n, x.clone())).collect();
    SComplex::new(s.clone(), comps, d).expect("x² = 0 in S2")
}

fn stalk_cdg(ring: &Arc<CdgRing>, m: &FinModule, deg: i64) -> Result<CdgModule> {
    let z = GradedModule::concentrated(ring.algebra().clone(), m.clone(), deg)?;
    CdgModule::new(ring.clone(), z, Matrix::zeros(m.field(), m.dim(), m.dim()))
}

impl Corpus {
    pub fn standard(field: Fp) -> Result<Corpus> {
        let s2 = Arc::new(FinAlgebra::truncated_polynomial(field, 2)?.named("S2"));
        let s4 = Arc::new(FinAlgebra::truncated_polynomial(field, 4)?.named("S4"));
        let ring = Arc::new(KoszulRing::new(s4.clone(), s4.basis(2))?);
        let dg_s2 = Arc::new(CdgRing::ring_as_dg(s2.clone())?);

        let k2 = truncation_module(&s2, 1);
        let free2 = FinModule::free(s2.clone(), 1);
        let s2_modules = vec![
            ("k".to_string(), k2.clone()),
            ("S2".to_string(), free2.clone()),
            ("k+S2".to_string(), FinModule::direct_sum(&[&k2, &free2])?),
        ];
        let s4_modules = (1..=4).map(|i| (format!("S4/x^{i}"), truncation_module(&s4, i))).collect();

        let free4 = FinModule::free(s4.clone(), 1);
        let x = free4.act(&s4.basis(1));
        let d1 = Duplex::new(ring.clone(), free4.clone(), free4.clone(), x.clone(), x)?;

        let xk = MixedComplex::koszul_regular(ring.clone());
        let ind = induce_koszul(&ring, &SComplex::stalk(free4.clone(), 0), 0)?;
        let ind_k = induce_koszul(&ring, &SComplex::stalk(truncation_module(&s4, 1), 0), 1)?;
        let mixed = vec![
            ("X_K".to_string(), xk.clone()),
            ("ΣX_K".to_string(), xk.suspend(1)),
            ("i(D1)".to_string(), iota(&d1)),
            ("K⊗S4".to_string(), ind),
            ("K⊗Σk".to_string(), ind_k),
        ];

        let mut cdg = Vec::new();
        for (name, m) in &s2_modules[..2] {
            let st = stalk_cdg(&dg_s2, m, 0)?;
            let (c, _) = cone_id(&st)?;
            cdg.push((format!("ι⁰{name}"), st));
            cdg.push((format!("cone(ι⁰{name})"), c));
        }
        let xk_cdg = xk.to_cdg();
        let (c, _) = cone_id(&xk_cdg)?;
        cdg.push(("X_K".to_string(), xk_cdg));
        cdg.push(("cone(X_K)".to_string(), c));
        cdg.push(("i(D1)".to_string(), iota(&d1).to_cdg()));

        Ok(Corpus {
            field,
            periodic: periodic_x(&s2, -3, 3),
            s2,
            s4,
            ring,
            dg_s2,
            s2_modules,
            s4_modules,
            d1,
            mixed,
            cdg,
        })
    }

    pub fn k(&self) -> FinModule {
        self.s2_modules[0].1.clone()
    }

    pub fn mixed_named(&self, name: &str) -> Option<&MixedComplex> {
        self.mixed.iter().find(|(n, _)| n == name).map(|(_, x)| x)
    }

    /// Every named object, for `describe`.
    pub fn names(&self) -> BTreeMap<String, String> {
        let mut out = BTreeMap::new();
        for (n, m) in self.s2_modules.iter().chain(&self.s4_modules) {
            out.insert(n.clone(), format!("module over {}, dim {}", m.algebra().name(), m.dim()));
        }
        for (n, x) in &self.mixed {
            let dims: Vec<String> = x.degrees().into_iter().map(|d| format!("{d}:{}", x.comp_dim(d))).collect();
            out.insert(n.clone(), format!("mixed complex over K_(S4,x^2), dims {}", dims.join(" ")));
        }
        for (n, x) in &self.cdg {
            out.entry(n.clone()).or_insert_with(|| format!("cdg module over {}, dim {}", x.ring().name(), x.dim()));
        }
        out.insert("D1".into(), "duplex S4 ⇄ S4, f = g = x".into());
        out.insert("P".into(), "complex ⋯ → S2 →x S2 → ⋯ on [-3, 3]".into());
        out
    }
}
