//! Verification suites over the standard corpus and seeded random objects.
//!
//! Every check yields one [`Record`]; a suite passes when all its records do.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::corpus::{periodic_x, Corpus};
use crate::error::{Error, Result};
use crate::graded::{
    cohomology_dims, cone_id, dg_hom, g_map, g_minus, g_plus, gminus_counit, gminus_to_cdg, gminus_to_graded,
    gminus_unit, gplus_counit, gplus_to_cdg, gplus_to_graded, gplus_unit, graded_hom_space, homotopy_classes,
    CdgModule, CdgRing, GradedModule,
};
use crate::linalg::{Fp, Matrix};
use crate::mf::random::{random_combination, random_duplex, random_mixed, random_two_term};
use crate::mf::{
    alpha_epi, bar_complex, completed_bar, counit_factorization_check, filtration_quotient, fold, induce_koszul,
    koszul_hom_space, koszul_isomorphism, prod_to_duplex, prod_to_koszul, sbar, sum_to_duplex, sum_to_koszul,
    totalization, Duplex, FoldMode, KoszulData, MixedComplex, SComplex, SignRule,
};
use crate::model::{
    cosyzygy, gorenstein_membership, path_object, q0_iota_check, right_homotopic, weakly_trivial_examples_check,
    Verdict,
};
use crate::module::{ext1, find_isomorphism, projective_resolution, stable_hom, FinModule, PdVerdict, StableMode};
use crate::oracle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One assertion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub id: String,
    pub status: Status,
    pub lhs_dims: Vec<usize>,
    pub rhs_dims: Vec<usize>,
    pub witness_present: bool,
}

impl Record {
    pub fn new(id: impl Into<String>, pass: bool) -> Record {
        Record {
            id: id.into(),
            status: if pass { Status::Pass } else { Status::Fail },
            lhs_dims: vec![],
            rhs_dims: vec![],
            witness_present: false,
        }
    }

    pub fn dims(mut self, lhs: Vec<usize>, rhs: Vec<usize>) -> Record {
        self.lhs_dims = lhs;
        self.rhs_dims = rhs;
        self
    }

    pub fn witness(mut self, present: bool) -> Record {
        self.witness_present = present;
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Expected value vs computed value.
    pub fn compare(id: impl Into<String>, expected: usize, got: usize) -> Record {
        Record::new(id, expected == got).dims(vec![expected], vec![got])
    }
}

/// One JSON object per line, in order.
pub fn to_json_lines(records: &[Record]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(r).expect("records serialize"));
        out.push('\n');
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Curvature,
    Sbar,
    Adjunction,
    Bar,
    GPlusMinus,
    Gorenstein,
    Homotopy,
    Sign,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Curvature,
        Suite::Sbar,
        Suite::Adjunction,
        Suite::Bar,
        Suite::GPlusMinus,
        Suite::Gorenstein,
        Suite::Homotopy,
        Suite::Sign,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Curvature => "curvature",
            Suite::Sbar => "sbar",
            Suite::Adjunction => "adjunction",
            Suite::Bar => "bar",
            Suite::GPlusMinus => "gpm",
            Suite::Gorenstein => "gorenstein",
            Suite::Homotopy => "homotopy",
            Suite::Sign => "sign",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Overrides every per-suite random count.
    pub random_count: Option<usize>,
    /// Acyclicity window.
    pub window: (i64, i64),
    /// Validation window for tame objects.
    pub validation_window: (i64, i64),
    pub filtration_depth: i64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { seed: 0, random_count: None, window: (-6, 6), validation_window: (-4, 4), filtration_depth: 2 }
    }
}

impl VerifyConfig {
    fn count(&self, default: usize) -> usize {
        self.random_count.unwrap_or(default)
    }

    fn rng(&self, suite: Suite) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ suite as u64)
    }
}

pub fn run_suite(suite: Suite, corpus: &Corpus, cfg: &VerifyConfig) -> Result<Vec<Record>> {
    let mut rng = cfg.rng(suite);
    let mut out = match suite {
        Suite::Curvature => curvature(corpus, cfg, &mut rng),
        Suite::Sbar => sbar_laws(corpus, cfg, &mut rng),
        Suite::Adjunction => adjunction(corpus, cfg, &mut rng),
        Suite::Bar => bar(corpus, cfg),
        Suite::GPlusMinus => g_plus_minus(corpus, cfg, &mut rng),
        Suite::Gorenstein => gorenstein(corpus),
        Suite::Homotopy => homotopy(corpus),
        Suite::Sign => sign(corpus),
    }?;
    for r in &mut out {
        r.id = format!("{suite}/{}", r.id);
    }
    Ok(out)
}

pub fn run_all(corpus: &Corpus, cfg: &VerifyConfig) -> Result<Vec<Record>> {
    let mut out = Vec::new();
    for s in Suite::ALL {
        out.extend(run_suite(s, corpus, cfg)?);
    }
    Ok(out)
}

fn sub_rng(rng: &mut ChaCha8Rng) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(rng.gen())
}

/// `fg = w` and `gf = w`, exactly.
pub fn curvature_check(m: &Duplex) -> bool {
    let w = m.ring().w();
    m.g.mul(&m.f) == m.m0.act(w) && m.f.mul(&m.g) == m.m1.act(w)
}

fn curvature(corpus: &Corpus, cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<Vec<Record>> {
    let mut out = Vec::new();
    let mut check = |id: String, x: &MixedComplex| -> Result<()> {
        let m = fold(x, FoldMode::Product)?;
        let sum = fold(x, FoldMode::Sum)?;
        let dims = vec![m.m0.dim(), m.m1.dim()];
        out.push(Record::new(id, curvature_check(&m) && m == sum).dims(dims.clone(), dims));
        Ok(())
    };
    for (name, x) in &corpus.mixed {
        check(format!("fold/{name}"), x)?;
    }
    for i in 0..cfg.count(50) {
        let x = random_mixed(&corpus.ring, &mut sub_rng(rng))?;
        check(format!("fold/random/{i}"), &x)?;
    }
    Ok(out)
}

fn sbar_record(id: String, m: &Duplex, (lo, hi): (i64, i64)) -> Result<Record> {
    let t = sbar(m)?;
    let errs = t.check_window(lo, hi);
    let dims = (lo..=hi).map(|n| t.comp_dim(n)).collect();
    Ok(Record::new(id, errs.is_empty()).dims(dims, vec![m.m0.dim(), m.m1.dim()]))
}

fn sbar_laws(corpus: &Corpus, cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<Vec<Record>> {
    let mut out = vec![sbar_record("D1".into(), &corpus.d1, cfg.validation_window)?];
    for i in 0..cfg.count(20) {
        let m = random_duplex(&corpus.ring, 3, &mut sub_rng(rng))?;
        out.push(sbar_record(format!("random/{i}"), &m, cfg.validation_window)?);
    }
    Ok(out)
}

/// A random element of the span of `basis`, the same coefficients on both components.
fn random_pair(basis: &[(Matrix, Matrix)], zero: (Matrix, Matrix), rng: &mut impl Rng) -> (Matrix, Matrix) {
    let (mut a, mut b) = zero;
    let p = a.field().p();
    for (u, v) in basis {
        let c = rng.gen_range(0..p);
        a.add_scaled(u, c);
        b.add_scaled(v, c);
    }
    (a, b)
}

fn random_degreewise(
    basis: &[BTreeMap<i64, Matrix>],
    zero: BTreeMap<i64, Matrix>,
    rng: &mut impl Rng,
) -> BTreeMap<i64, Matrix> {
    let mut out = zero;
    for b in basis {
        let c = rng.gen_range(0..out.values().next().map_or(2, |m| m.field().p()));
        for (n, m) in b {
            if let Some(o) = out.get_mut(n) {
                o.add_scaled(m, c);
            }
        }
    }
    out
}

fn zero_map(f: Fp, rows: usize, cols: usize) -> Matrix {
    Matrix::zeros(f, rows, cols)
}

fn adjunction(corpus: &Corpus, cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<Vec<Record>> {
    let f = corpus.field;
    let ring = &corpus.ring;
    let mut out = Vec::new();
    let count = cfg.count(20);
    for i in 0..count {
        let mut r = sub_rng(rng);
        let m = random_duplex(ring, 2, &mut r)?;
        let x = random_mixed(ring, &mut r)?;
        let (a, b) = x.support_range().unwrap_or((0, 0));
        let fx = fold(&x, FoldMode::Product)?;

        // sbar ⊣ fold∏, both directions
        let basis = m.hom_space(&fx)?;
        let zero = (zero_map(f, fx.m0.dim(), m.m0.dim()), zero_map(f, fx.m1.dim(), m.m1.dim()));
        let phi = random_pair(&basis, zero, &mut r);
        let alpha = prod_to_koszul(&m, &x, &phi)?;
        let back = prod_to_duplex(&m, &x, &alpha)?;
        out.push(Record::new(format!("prod/duplex/{i}"), back == phi).dims(vec![basis.len()], vec![]).witness(true));
        let sb = sbar(&m)?;
        let hom = koszul_hom_space(&sb, &x, a, b)?;
        let zero = x.degrees().into_iter().map(|n| (n, zero_map(f, x.comp_dim(n), sb.comp_dim(n)))).collect();
        let alpha = random_degreewise(&hom, zero, &mut r);
        let again = prod_to_koszul(&m, &x, &prod_to_duplex(&m, &x, &alpha)?)?;
        out.push(
            Record::new(format!("prod/koszul/{i}"), again == alpha).dims(vec![hom.len()], vec![basis.len()]),
        );

        // fold⊕ ⊣ sbar∘Σ, both directions
        let basis = fx.hom_space(&m)?;
        let zero = (zero_map(f, m.m0.dim(), fx.m0.dim()), zero_map(f, m.m1.dim(), fx.m1.dim()));
        let phi = random_pair(&basis, zero, &mut r);
        let back = sum_to_duplex(&x, &m, &sum_to_koszul(&x, &m, &phi)?)?;
        out.push(Record::new(format!("sum/duplex/{i}"), back == phi).dims(vec![basis.len()], vec![]));
        let sbs = sbar(&m.suspend())?;
        let hom = koszul_hom_space(&x, &sbs, a, b)?;
        let zero = x.degrees().into_iter().map(|n| (n, zero_map(f, sbs.comp_dim(n), x.comp_dim(n)))).collect();
        let alpha = random_degreewise(&hom, zero, &mut r);
        let again = sum_to_koszul(&x, &m, &sum_to_duplex(&x, &m, &alpha)?)?;
        out.push(Record::new(format!("sum/koszul/{i}"), again == alpha).dims(vec![hom.len()], vec![basis.len()]));
    }
    for i in 0..count {
        let mut r = sub_rng(rng);
        let x = random_mixed(ring, &mut r)?.to_cdg();
        let z = random_mixed(ring, &mut r)?.to_cdg().sharp().clone();
        out.push(g_adjunction_record(format!("g/{i}"), ring.cdg(), &z, &x, &mut r)?);
    }
    for i in 0..count {
        let mut r = sub_rng(rng);
        let x = random_two_term(&corpus.s2, 2, &mut r)?.suspend(1);
        let m = random_s2_module(corpus, &mut r)?;
        let errs = q0_iota_check(&x, &m)?;
        let (q, _) = cosyzygy(&x, 0);
        out.push(Record::new(format!("q0/{i}"), errs.is_empty()).dims(vec![q.dim()], vec![m.dim()]));
    }
    Ok(out)
}

/// Triangle identities of `G⁺ ⊣ (−)♯ ⊣ G⁻` and round trips of random transposes.
fn g_adjunction_record(id: String, ring: &Arc<CdgRing>, z: &GradedModule, x: &CdgModule, rng: &mut impl Rng) -> Result<Record> {
    let f = ring.field();
    let gp = g_plus(ring, z)?;
    let gm = g_minus(ring, z)?;
    let mut ok = gplus_counit(&gp).mul(&g_map(&gplus_unit(z))) == Matrix::identity(f, gp.dim())
        && gplus_counit(x).mul(&gplus_unit(x.sharp())) == Matrix::identity(f, x.dim())
        && g_map(&gminus_counit(z)).mul(&gminus_unit(&gm)) == Matrix::identity(f, gm.dim())
        && gminus_counit(x.sharp()).mul(&gminus_unit(x)) == Matrix::identity(f, x.dim());
    let into = graded_hom_space(z, x.sharp(), 0)?;
    let psi = random_combination(&into, x.dim(), z.dim(), f, rng);
    ok &= gplus_to_graded(ring, z, x, &gplus_to_cdg(z, x, &psi)?)? == psi;
    let from = graded_hom_space(x.sharp(), z, 0)?;
    let psi = random_combination(&from, z.dim(), x.dim(), f, rng);
    ok &= gminus_to_graded(ring, x, z, &gminus_to_cdg(x, z, &psi)?)? == psi;
    Ok(Record::new(id, ok).dims(vec![into.len()], vec![from.len()]))
}

fn random_s2_module(corpus: &Corpus, rng: &mut impl Rng) -> Result<FinModule> {
    let parts: Vec<FinModule> =
        (0..rng.gen_range(1..=2)).map(|_| corpus.s2_modules[rng.gen_range(0..2)].1.clone()).collect();
    FinModule::direct_sum(&parts.iter().collect::<Vec<_>>())
}

fn bar(corpus: &Corpus, cfg: &VerifyConfig) -> Result<Vec<Record>> {
    let (lo, hi) = cfg.window;
    if hi - lo < 2 {
        return Err(Error::WindowInsufficient(format!("[{lo}, {hi}] has no interior degree")));
    }
    let radius = lo.abs().max(hi.abs());
    let mut out = Vec::new();
    for (name, x) in &corpus.mixed {
        let Some((a, b)) = x.support_range() else { continue };
        let depth = (radius + 2).max(b - lo + 1) as usize;
        let bc = bar_complex(x, depth)?;
        let acyclic = bc.check().is_empty() && bc.is_acyclic_on(lo, hi)?;
        out.push(Record::new(format!("acyclic/{name}"), acyclic).dims(vec![depth], vec![]));

        let closed = completed_bar(x)?;
        let tot = totalization(x, a - 4, b, SignRule::Quoted)?;
        let bad = tot.mismatches(&closed);
        let dims = (a - 4..=b).map(|n| closed.comp_dim(n)).collect();
        out.push(Record::new(format!("closed_form/{name}"), bad.is_empty()).dims(dims, vec![bad.len()]));

        let ae = alpha_epi(x)?;
        let ok = ae.check(a - 2, b + 2).is_empty() && counit_factorization_check(x, a - 2, b + 2)?;
        let dims = vec![ae.source.comp_dim(0), ae.target.comp_dim(0), ae.kernel.comp_dim(0)];
        out.push(Record::new(format!("eps=q.alpha/{name}"), ok).dims(dims, vec![]));
    }
    let xk = corpus.mixed_named("X_K").expect("corpus has X_K");
    for i in 0..=cfg.filtration_depth {
        let q = filtration_quotient(xk, i)?;
        let target = induce_koszul(&corpus.ring, &xk.underlying(), -2 * i - 2)?;
        let found = koszul_isomorphism(&q, &target)?.is_found();
        out.push(
            Record::new(format!("filtration/{i}"), found)
                .dims(vec![q.total_dim()], vec![target.total_dim()])
                .witness(found),
        );
    }
    Ok(out)
}

/// A direct sum of `k` and `S2` in degrees `-2..=2`, moved by a random graded automorphism.
pub fn random_graded_s2(corpus: &Corpus, ring: &Arc<CdgRing>, rng: &mut impl Rng) -> Result<GradedModule> {
    let mut parts = Vec::new();
    for _ in 0..rng.gen_range(1..=3) {
        let m = corpus.s2_modules[rng.gen_range(0..2)].1.clone();
        parts.push(GradedModule::concentrated(ring.algebra().clone(), m, rng.gen_range(-2..=2))?);
    }
    let z = GradedModule::direct_sum(&parts.iter().collect::<Vec<_>>())?;
    let ends = graded_hom_space(&z, &z, 0)?;
    let u = loop {
        let u = random_combination(&ends, z.dim(), z.dim(), corpus.field, rng);
        if u.is_invertible() {
            break u;
        }
    };
    let ui = u.inverse().expect("invertible");
    let action = (0..ring.dim()).map(|i| u.mul(z.action(i)).mul(&ui)).collect();
    let total = FinModule::new(z.total().algebra().clone(), z.dim(), action)?;
    GradedModule::new(ring.algebra().clone(), total, z.degrees().to_vec())
}

fn g_plus_minus(corpus: &Corpus, cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<Vec<Record>> {
    let ring = &corpus.dg_s2;
    let mut out = Vec::new();
    for i in 0..cfg.count(20) {
        let z = random_graded_s2(corpus, ring, &mut sub_rng(rng))?;
        for (tag, g) in [("plus", g_plus(ring, &z)?), ("minus", g_minus(ring, &z)?)] {
            let (lo, hi) = (*g.support().first().unwrap_or(&0), *g.support().last().unwrap_or(&0));
            let h = cohomology_dims(&g, lo - 1..=hi + 1)?;
            let dims: Vec<usize> = h.values().copied().collect();
            out.push(Record::new(format!("{tag}/{i}"), dims.iter().all(|&d| d == 0)).dims(dims, vec![z.dim()]));
        }
    }
    Ok(out)
}

fn gorenstein(corpus: &Corpus) -> Result<Vec<Record>> {
    let f = corpus.field;
    let k = corpus.k();
    let s2 = corpus.s2_modules[1].1.clone();
    let mut out = Vec::new();

    let res = projective_resolution(&k, 3)?;
    let repeat = matches!(res.verdict, PdVerdict::Infinite { later, .. } if later <= 3);
    let brute = oracle::isomorphic(&res.syzygies[1], &k)?;
    out.push(Record::new("pd(k)=inf", repeat && brute).dims(vec![res.terms.len()], vec![]).witness(brute));
    let res = projective_resolution(&s2, 3)?;
    out.push(Record::new("pd(S2)=0", res.verdict == PdVerdict::Finite(0)));

    for (name, m) in &corpus.s2_modules {
        let r = gorenstein_membership(m, 3)?;
        let ok = r.gorenstein_projective == Verdict::Yes && r.gorenstein_injective == Verdict::Yes;
        out.push(Record::new(format!("gp/{name}"), ok).witness(r.witness.is_some()));
    }
    let r = gorenstein_membership(&k, 3)?;
    let w = r.witness.as_ref();
    let periodic = w.is_some_and(|w| w.period.is_some_and(|p| 2 % p == 0));
    let q0 = w.map(|w| cosyzygy(&w.complex, 0).0);
    let q0_iso = match &q0 {
        Some(q) => find_isomorphism(q, &k)?.is_found() && oracle::isomorphic(q, &k)?,
        None => false,
    };
    out.push(
        Record::new("gp/k/witness", periodic && q0_iso)
            .dims(vec![q0.map_or(0, |q| q.dim())], vec![k.dim()])
            .witness(w.is_some()),
    );

    // x: k → S2 presents Ω k
    let incl = Matrix::from_rows(f, &[vec![0], vec![1]]);
    let st = stable_hom(&k, &k, StableMode::Projectives)?.dim;
    out.push(Record::compare("stable_hom(k,k)", 1, st));
    out.push(Record::compare("stable_hom(k,k)/oracle", st, oracle::stable_hom_dim(&k, &k, &s2)?));
    let e = ext1(&k, &k)?.dim;
    out.push(Record::compare("ext1(k,k)", 1, e));
    out.push(Record::compare("ext1(k,k)/oracle", e, oracle::ext1_dim(&k, &s2, &incl, &k)?));
    let e = ext1(&k, &s2)?.dim;
    out.push(Record::compare("ext1(k,S2)", 0, e));
    out.push(Record::compare("ext1(k,S2)/oracle", e, oracle::ext1_dim(&k, &s2, &incl, &s2)?));
    for (name, m) in &corpus.s2_modules[..2] {
        for (tname, t) in &corpus.s2_modules[..2] {
            let h = m.hom_space(t)?.len();
            out.push(Record::compare(format!("hom({name},{tname})/oracle"), h, oracle::hom_dim(m, t)?));
        }
    }
    Ok(out)
}

fn homotopy(corpus: &Corpus) -> Result<Vec<Record>> {
    let mut out = Vec::new();
    let k = corpus.k();
    let cover = k.projective_cover()?;
    let p = path_object(&k, &cover.module, &cover.map)?;
    out.push(
        Record::new("path_object(k,S2->k)", p.py.dim() == 3 && p.check().is_empty())
            .dims(vec![p.py.dim()], vec![3]),
    );

    let modules: Vec<&(String, FinModule)> = corpus.s2_modules.iter().chain(&corpus.s4_modules).collect();
    let mut agree = 0;
    let mut total = 0;
    for (yname, y) in &modules {
        let cover = y.projective_cover()?;
        let po = path_object(y, &cover.module, &cover.map)?;
        if !po.check().is_empty() {
            out.push(Record::new(format!("path_object({yname})"), false));
            continue;
        }
        for (_, x) in modules.iter().filter(|(_, x)| x.algebra() == y.algebra()) {
            let hom = x.hom_space(y)?;
            let mut maps = vec![Matrix::zeros(x.field(), y.dim(), x.dim())];
            maps.extend(hom);
            for f in &maps {
                for g in &maps {
                    total += 1;
                    agree += usize::from(right_homotopic(x, f, g, &po)?.agree());
                }
            }
        }
    }
    out.push(Record::new("right_homotopic=factor_through_cover", agree == total).dims(vec![agree], vec![total]));

    let (kx, s2x) = (&corpus.s2_modules[0].1, &corpus.s2_modules[1].1);
    let id = Matrix::identity(corpus.field, 1);
    let v = right_homotopic(kx, &id, &Matrix::zeros(corpus.field, 1, 1), &p)?;
    out.push(Record::new("id_k~0", !v.path_object && v.agree()));
    let into = Matrix::from_rows(corpus.field, &[vec![1, 0]]);
    let v = right_homotopic(s2x, &into, &Matrix::zeros(corpus.field, 1, 2), &p)?;
    out.push(Record::new("S2->k~0", v.path_object && v.agree()));

    for (name, x) in &corpus.cdg {
        let (c, _) = cone_id(x)?;
        let (dim, _) = homotopy_classes(&c, &c, 0)?;
        out.push(Record::compare(format!("[C,C]/cone({name})"), 0, dim));
    }

    let free = corpus.s2_modules[1].1.clone();
    let cases = [
        ("iota2(S2)", SComplex::stalk(free.clone(), 2), periodic_x(&corpus.s2, -3, 3)),
        ("zero", SComplex::new(corpus.s2.clone(), BTreeMap::new(), BTreeMap::new())?, periodic_x(&corpus.s2, -3, 3)),
        ("k->S2->k", bounded_acyclic(corpus)?, periodic_x(&corpus.s2, -5, 3)),
    ];
    for (name, x, p) in cases {
        out.push(Record::new(format!("weakly_trivial/{name}"), weakly_trivial_examples_check(&p, &x)?));
    }
    Ok(out)
}

/// `k →x S2 → k` in degrees `-2..=0`, the bounded piece of `τ≤0` of the periodic complex.
pub fn bounded_acyclic(corpus: &Corpus) -> Result<SComplex> {
    let f = corpus.field;
    let k = corpus.k();
    let comps = BTreeMap::from([(-2, k.clone()), (-1, corpus.s2_modules[1].1.clone()), (0, k)]);
    let d = BTreeMap::from([
        (-2, Matrix::from_rows(f, &[vec![0], vec![1]])),
        (-1, Matrix::from_rows(f, &[vec![1, 0]])),
    ]);
    SComplex::new(corpus.s2.clone(), comps, d)
}

fn sign(corpus: &Corpus) -> Result<Vec<Record>> {
    let mut out = Vec::new();
    let mut ok = true;
    for (_, x) in &corpus.cdg {
        for m in -2..=2 {
            for n in -2..=2 {
                ok &= x.suspend(m).suspend(n) == x.suspend(m + n);
            }
        }
    }
    for (_, x) in &corpus.mixed {
        for m in -2..=2 {
            for n in -2..=2 {
                ok &= x.suspend(m).suspend(n) == x.suspend(m + n);
            }
        }
    }
    out.push(Record::new("suspend_composition", ok));

    for (an, a) in &corpus.cdg {
        for (bn, b) in &corpus.cdg {
            if a.ring().name() != b.ring().name() {
                continue;
            }
            let h = dg_hom(a, b)?;
            let dims = h.bases.values().map(|v| v.len()).collect();
            out.push(Record::new(format!("dg_hom_d2/{an},{bn}"), h.d_squared_zero()).dims(dims, vec![]));
        }
    }

    let mut broken: BTreeMap<String, usize> = BTreeMap::new();
    for (name, x) in &corpus.mixed {
        let Some((a, b)) = x.support_range() else { continue };
        let closed = completed_bar(x)?;
        let quoted = totalization(x, a - 4, b, SignRule::Quoted)?.mismatches(&closed).len();
        out.push(Record::compare(format!("totalization/{name}"), 0, quoted));
        for rule in [SignRule::WithoutTriangular, SignRule::WithoutSlot, SignRule::Trivial] {
            *broken.entry(format!("{rule:?}")).or_default() += totalization(x, a - 4, b, rule)?.mismatches(&closed).len();
        }
    }
    for (rule, bad) in broken {
        out.push(Record::new(format!("mutation/{rule}"), bad > 0).dims(vec![bad], vec![]));
    }
    Ok(out)
}
