//! JSON scenarios: named algebras, modules, duplexes, mixed complexes, complexes and maps,
//! followed by a list of commands. See `docs/scenario.md` for the schema.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Deserialize;

use crate::algebra::FinAlgebra;
use crate::corpus::Corpus;
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Fp, Matrix};
use crate::mf::{
    alpha_epi, bar_complex, completed_bar, counit_factorization_check, filtration_quotient, fold, induce_koszul,
    iota, koszul_isomorphism, sbar, totalization, Duplex, FoldMode, KoszulData, KoszulRing, MixedComplex, SComplex,
    SignRule,
};
use crate::model::{
    gorenstein_membership, mixed_model_class_test, orthogonal_membership, path_object, right_homotopic,
    weakly_trivial_examples_check, Side, Verdict,
};
use crate::module::{ext1, projective_resolution, stable_hom, FinModule, PdVerdict, StableMode};
use crate::verify::{curvature_check, run_suite, Record, Suite, VerifyConfig};

type IntMatrix = Vec<Vec<i64>>;

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum FieldEntry {
    Prime(u64),
    Name(String),
}

impl FieldEntry {
    pub fn spec(&self) -> Result<FieldSpec> {
        match self {
            FieldEntry::Prime(p) => Ok(FieldSpec::Prime(*p)),
            FieldEntry::Name(s) if s == "Q" || s == "rationals" => Ok(FieldSpec::Rationals),
            FieldEntry::Name(s) => Err(Error::Parse(format!("unknown field `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum AlgebraSpec {
    /// `F[x]/(xⁿ)`
    Truncated { truncated_polynomial: usize },
    Explicit { dim: usize, mult: Vec<IntMatrix>, unit: Vec<i64> },
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KoszulSpec {
    pub base: String,
    pub w: Vec<i64>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum ModuleSpec {
    Free { algebra: String, free: usize },
    /// `A / (gens)`
    Cyclic { algebra: String, cyclic: Vec<Vec<i64>> },
    Explicit { algebra: String, dim: usize, action: Vec<IntMatrix> },
    Sum { sum: Vec<String> },
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DuplexSpec {
    pub ring: String,
    pub m0: String,
    pub m1: String,
    pub f: IntMatrix,
    pub g: IntMatrix,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum MixedSpec {
    KoszulRegular { ring: String, koszul_regular: bool },
    Iota { iota: String },
    Induced { ring: String, induce: String, #[serde(default)] shift: i64 },
    Explicit {
        ring: String,
        components: BTreeMap<String, String>,
        #[serde(default)]
        d: BTreeMap<String, IntMatrix>,
        #[serde(default)]
        s: BTreeMap<String, IntMatrix>,
    },
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexSpec {
    pub algebra: String,
    pub components: BTreeMap<String, String>,
    #[serde(default)]
    pub d: BTreeMap<String, IntMatrix>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismSpec {
    pub source: String,
    pub target: String,
    pub matrix: IntMatrix,
}

#[derive(Clone, Copy, Debug, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum SideSpec {
    Left,
    Right,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case", deny_unknown_fields)]
pub enum Command {
    CheckMixed { object: String },
    Fold { object: String },
    Sbar { object: String, window: Option<(i64, i64)> },
    CompletedBar { object: String },
    AlphaEpi { object: String },
    BarAcyclic { object: String, window: Option<(i64, i64)>, depth: Option<usize> },
    Filtration { object: String, depth: Option<i64> },
    Hom { source: String, target: String, expect: Option<usize> },
    Ext1 { source: String, target: String, expect: Option<usize> },
    StableHom { source: String, target: String, expect: Option<usize> },
    Pd { module: String, bound: Option<usize>, expect: Option<String> },
    Gorenstein { module: String, bound: Option<usize>, expect_gp: Option<bool> },
    Orthogonal { list: Vec<String>, object: String, side: SideSpec, expect: Option<bool> },
    PathObject { object: String, expect_dim: Option<usize> },
    RightHomotopic { f: String, g: String, expect: Option<bool> },
    MixedClasses { object: String, expect_cofibrant: Option<bool>, expect_fibrant: Option<bool> },
    WeaklyTrivial { p: String, x: String },
    Suite { name: String },
}

impl Command {
    /// The suite a command reports under, for `--only`.
    pub fn group(&self) -> &'static str {
        match self {
            Command::CheckMixed { .. } | Command::Fold { .. } => "curvature",
            Command::Sbar { .. } => "sbar",
            Command::CompletedBar { .. }
            | Command::AlphaEpi { .. }
            | Command::BarAcyclic { .. }
            | Command::Filtration { .. } => "bar",
            Command::Hom { .. }
            | Command::Ext1 { .. }
            | Command::StableHom { .. }
            | Command::Pd { .. }
            | Command::Gorenstein { .. }
            | Command::Orthogonal { .. } => "gorenstein",
            Command::PathObject { .. }
            | Command::RightHomotopic { .. }
            | Command::MixedClasses { .. }
            | Command::WeaklyTrivial { .. } => "homotopy",
            Command::Suite { .. } => "suite",
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    #[serde(default)]
    pub field: Option<FieldEntry>,
    #[serde(default)]
    pub algebras: BTreeMap<String, AlgebraSpec>,
    #[serde(default)]
    pub koszul: BTreeMap<String, KoszulSpec>,
    #[serde(default)]
    pub modules: BTreeMap<String, ModuleSpec>,
    #[serde(default)]
    pub duplexes: BTreeMap<String, DuplexSpec>,
    #[serde(default)]
    pub mixed: BTreeMap<String, MixedSpec>,
    #[serde(default)]
    pub complexes: BTreeMap<String, ComplexSpec>,
    #[serde(default)]
    pub morphisms: BTreeMap<String, MorphismSpec>,
    #[serde(default)]
    pub commands: Vec<Command>,
}

impl Scenario {
    pub fn from_json(text: &str) -> Result<Scenario> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Resolved and validated objects of a scenario.
#[derive(Debug)]
pub struct Workspace {
    pub field: Fp,
    pub algebras: BTreeMap<String, Arc<FinAlgebra>>,
    pub rings: BTreeMap<String, Arc<KoszulRing>>,
    pub modules: BTreeMap<String, FinModule>,
    pub duplexes: BTreeMap<String, Duplex>,
    pub mixed: BTreeMap<String, MixedComplex>,
    pub complexes: BTreeMap<String, SComplex>,
    pub morphisms: BTreeMap<String, (String, String, Matrix)>,
    pub commands: Vec<Command>,
}

fn lookup<'a, T>(map: &'a BTreeMap<String, T>, kind: &str, name: &str) -> Result<&'a T> {
    map.get(name).ok_or_else(|| Error::Validation(format!("unknown {kind} `{name}`")))
}

fn degree(key: &str) -> Result<i64> {
    key.parse().map_err(|_| Error::Parse(format!("degree key `{key}` is not an integer")))
}

fn matrix(f: Fp, rows: usize, cols: usize, m: &IntMatrix, what: &str) -> Result<Matrix> {
    if m.len() != rows || m.iter().any(|r| r.len() != cols) {
        return Err(Error::Validation(format!("{what}: expected a {rows}×{cols} matrix")));
    }
    if rows == 0 || cols == 0 {
        return Ok(Matrix::zeros(f, rows, cols));
    }
    Ok(Matrix::from_rows(f, m))
}

fn to_vec(f: Fp, v: &[i64]) -> Vec<u64> {
    v.iter().map(|&x| f.from_i64(x)).collect()
}

impl Workspace {
    /// Build and validate every object; `field` overrides the scenario's field.
    pub fn build(sc: &Scenario, field: Option<FieldSpec>) -> Result<Workspace> {
        let spec = match (field, &sc.field) {
            (Some(f), _) => f,
            (None, Some(e)) => e.spec()?,
            (None, None) => FieldSpec::default(),
        };
        let f = spec.to_field()?;
        let mut ws = Workspace {
            field: f,
            algebras: BTreeMap::new(),
            rings: BTreeMap::new(),
            modules: BTreeMap::new(),
            duplexes: BTreeMap::new(),
            mixed: BTreeMap::new(),
            complexes: BTreeMap::new(),
            morphisms: BTreeMap::new(),
            commands: sc.commands.clone(),
        };
        for (name, a) in &sc.algebras {
            let alg = match a {
                AlgebraSpec::Truncated { truncated_polynomial } => FinAlgebra::truncated_polynomial(f, *truncated_polynomial)?,
                AlgebraSpec::Explicit { dim, mult, unit } => FinAlgebra::new(f, *dim, mult.clone(), unit.clone())?,
            };
            ws.algebras.insert(name.clone(), Arc::new(alg.named(name.clone())));
        }
        for (name, k) in &sc.koszul {
            let base = lookup(&ws.algebras, "algebra", &k.base)?.clone();
            if k.w.len() != base.dim() {
                return Err(Error::Validation(format!("w of `{name}` has the wrong length")));
            }
            ws.rings.insert(name.clone(), Arc::new(KoszulRing::new(base, to_vec(f, &k.w))?));
        }
        ws.build_modules(sc)?;
        for (name, d) in &sc.duplexes {
            let ring = lookup(&ws.rings, "Koszul ring", &d.ring)?.clone();
            let m0 = lookup(&ws.modules, "module", &d.m0)?.clone();
            let m1 = lookup(&ws.modules, "module", &d.m1)?.clone();
            let fm = matrix(f, m1.dim(), m0.dim(), &d.f, &format!("{name}.f"))?;
            let gm = matrix(f, m0.dim(), m1.dim(), &d.g, &format!("{name}.g"))?;
            let x = Duplex::new(ring, m0, m1, fm, gm).map_err(|e| Error::Validation(format!("{name}: {e}")))?;
            ws.duplexes.insert(name.clone(), x);
        }
        for (name, c) in &sc.complexes {
            let alg = lookup(&ws.algebras, "algebra", &c.algebra)?.clone();
            let comps = ws.components(&c.components)?;
            let d = ws.maps(&comps, &c.d, 1, name)?;
            let x = SComplex::new(alg, comps, d).map_err(|e| Error::Validation(format!("{name}: {e}")))?;
            ws.complexes.insert(name.clone(), x);
        }
        for (name, m) in &sc.mixed {
            let x = ws.build_mixed(name, m)?;
            ws.mixed.insert(name.clone(), x);
        }
        for (name, m) in &sc.morphisms {
            let src = lookup(&ws.modules, "module", &m.source)?;
            let tgt = lookup(&ws.modules, "module", &m.target)?;
            let mat = matrix(f, tgt.dim(), src.dim(), &m.matrix, name)?;
            if !src.is_homomorphism(tgt, &mat) {
                return Err(Error::Validation(format!("{name} is not a module homomorphism")));
            }
            ws.morphisms.insert(name.clone(), (m.source.clone(), m.target.clone(), mat));
        }
        Ok(ws)
    }

    fn build_modules(&mut self, sc: &Scenario) -> Result<()> {
        let f = self.field;
        let mut pending: Vec<(&String, &ModuleSpec)> = sc.modules.iter().collect();
        while !pending.is_empty() {
            let before = pending.len();
            let mut rest = Vec::new();
            for (name, m) in pending {
                let built = match m {
                    ModuleSpec::Free { algebra, free } => {
                        Some(FinModule::free(lookup(&self.algebras, "algebra", algebra)?.clone(), *free))
                    }
                    ModuleSpec::Cyclic { algebra, cyclic } => {
                        let a = lookup(&self.algebras, "algebra", algebra)?.clone();
                        let gens: Vec<Vec<u64>> = cyclic.iter().map(|g| to_vec(f, g)).collect();
                        Some(FinModule::cyclic(a, &gens)?)
                    }
                    ModuleSpec::Explicit { algebra, dim, action } => {
                        let a = lookup(&self.algebras, "algebra", algebra)?.clone();
                        Some(FinModule::from_int_matrices(a, *dim, action).map_err(|e| Error::Validation(format!("{name}: {e}")))?)
                    }
                    ModuleSpec::Sum { sum } => {
                        if sum.iter().all(|s| self.modules.contains_key(s)) {
                            let parts: Vec<&FinModule> = sum.iter().map(|s| &self.modules[s]).collect();
                            Some(FinModule::direct_sum(&parts)?)
                        } else {
                            None
                        }
                    }
                };
                match built {
                    Some(x) => {
                        self.modules.insert(name.clone(), x);
                    }
                    None => rest.push((name, m)),
                }
            }
            if rest.len() == before {
                let names: Vec<&str> = rest.iter().map(|(n, _)| n.as_str()).collect();
                return Err(Error::Validation(format!("unresolved module references in {}", names.join(", "))));
            }
            pending = rest;
        }
        Ok(())
    }

    fn components(&self, comps: &BTreeMap<String, String>) -> Result<BTreeMap<i64, FinModule>> {
        comps.iter().map(|(k, m)| Ok((degree(k)?, lookup(&self.modules, "module", m)?.clone()))).collect()
    }

    /// Maps keyed by source degree `n`, going to degree `n + step`.
    fn maps(
        &self,
        comps: &BTreeMap<i64, FinModule>,
        maps: &BTreeMap<String, IntMatrix>,
        step: i64,
        name: &str,
    ) -> Result<BTreeMap<i64, Matrix>> {
        let dim = |n: i64| comps.get(&n).map_or(0, |m| m.dim());
        maps.iter()
            .map(|(k, m)| {
                let n = degree(k)?;
                Ok((n, matrix(self.field, dim(n + step), dim(n), m, &format!("{name} at degree {n}"))?))
            })
            .collect()
    }

    fn build_mixed(&self, name: &str, m: &MixedSpec) -> Result<MixedComplex> {
        let wrap = |e: Error| Error::Validation(format!("{name}: {e}"));
        match m {
            MixedSpec::KoszulRegular { ring, koszul_regular } => {
                let r = lookup(&self.rings, "Koszul ring", ring)?.clone();
                Ok(if *koszul_regular { MixedComplex::koszul_regular(r) } else { MixedComplex::zero(r) })
            }
            MixedSpec::Iota { iota: d } => Ok(iota(lookup(&self.duplexes, "duplex", d)?)),
            MixedSpec::Induced { ring, induce, shift } => {
                let r = lookup(&self.rings, "Koszul ring", ring)?.clone();
                induce_koszul(&r, lookup(&self.complexes, "complex", induce)?, *shift).map_err(wrap)
            }
            MixedSpec::Explicit { ring, components, d, s } => {
                let r = lookup(&self.rings, "Koszul ring", ring)?.clone();
                let comps = self.components(components)?;
                let dm = self.maps(&comps, d, 1, name)?;
                let sm = self.maps(&comps, s, -1, name)?;
                MixedComplex::new(r, comps, dm, sm).map_err(wrap)
            }
        }
    }

    fn module(&self, name: &str) -> Result<&FinModule> {
        lookup(&self.modules, "module", name)
    }

    fn mixed_obj(&self, name: &str) -> Result<&MixedComplex> {
        lookup(&self.mixed, "mixed complex", name)
    }
}

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    pub only: Option<String>,
    pub verify: VerifyConfig,
}

/// Records plus human-readable notes.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub records: Vec<Record>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.passed())
    }
}

fn expect_eq<T: PartialEq>(expect: Option<T>, got: T) -> bool {
    expect.is_none_or(|e| e == got)
}

fn verdict(v: &Verdict) -> String {
    match v {
        Verdict::Yes => "yes".into(),
        Verdict::No => "no".into(),
        Verdict::Undecided(b) => format!("undecided({b})"),
    }
}

fn pd_text(v: &PdVerdict) -> String {
    match v {
        PdVerdict::Finite(n) => n.to_string(),
        PdVerdict::Infinite { .. } => "infinite".into(),
        PdVerdict::Unknown => "unknown".into(),
    }
}

pub fn run(ws: &Workspace, opts: &RunOptions) -> Result<Report> {
    let mut report = Report::default();
    for (i, cmd) in ws.commands.iter().enumerate() {
        if let Some(only) = &opts.only {
            let selected = match cmd {
                Command::Suite { name } => name == only,
                _ => cmd.group() == only,
            };
            if !selected {
                continue;
            }
        }
        run_command(ws, i, cmd, opts, &mut report)?;
    }
    Ok(report)
}

fn run_command(ws: &Workspace, i: usize, cmd: &Command, opts: &RunOptions, out: &mut Report) -> Result<()> {
    let f = ws.field;
    let id = |tag: &str, obj: &str| format!("{i}/{tag}/{obj}");
    let rec = &mut out.records;
    match cmd {
        Command::CheckMixed { object } => {
            let x = ws.mixed_obj(object)?;
            let dims = x.degrees().into_iter().map(|n| x.comp_dim(n)).collect();
            rec.push(Record::new(id("check_mixed", object), x.check().is_empty()).dims(dims, vec![]));
        }
        Command::Fold { object } => {
            let x = ws.mixed_obj(object)?;
            let m = fold(x, FoldMode::Product)?;
            let dims = vec![m.m0.dim(), m.m1.dim()];
            rec.push(Record::new(id("fold", object), curvature_check(&m)).dims(dims.clone(), dims));
        }
        Command::Sbar { object, window } => {
            let m = lookup(&ws.duplexes, "duplex", object)?;
            let (lo, hi) = window.unwrap_or(opts.verify.validation_window);
            let t = sbar(m)?;
            let dims = (lo..=hi).map(|n| t.comp_dim(n)).collect();
            rec.push(Record::new(id("sbar", object), t.check_window(lo, hi).is_empty()).dims(dims, vec![]));
        }
        Command::CompletedBar { object } => {
            let x = ws.mixed_obj(object)?;
            let (a, b) = x.support_range().unwrap_or((0, 0));
            let closed = completed_bar(x)?;
            let bad = totalization(x, a - 4, b, SignRule::Quoted)?.mismatches(&closed).len();
            let dims = (a - 4..=b).map(|n| closed.comp_dim(n)).collect();
            rec.push(Record::new(id("completed_bar", object), bad == 0).dims(dims, vec![bad]));
        }
        Command::AlphaEpi { object } => {
            let x = ws.mixed_obj(object)?;
            let (a, b) = x.support_range().unwrap_or((0, 0));
            let ae = alpha_epi(x)?;
            let ok = ae.check(a - 2, b + 2).is_empty() && counit_factorization_check(x, a - 2, b + 2)?;
            let dims = vec![ae.source.comp_dim(0), ae.target.comp_dim(0), ae.kernel.comp_dim(0)];
            rec.push(Record::new(id("alpha_epi", object), ok).dims(dims, vec![]));
        }
        Command::BarAcyclic { object, window, depth } => {
            let x = ws.mixed_obj(object)?;
            let (lo, hi) = window.unwrap_or(opts.verify.window);
            if hi - lo < 2 {
                return Err(Error::WindowInsufficient(format!("[{lo}, {hi}] has no interior degree")));
            }
            let b = x.support_range().map_or(0, |r| r.1);
            let depth = depth.unwrap_or((lo.abs().max(hi.abs()) + 2).max(b - lo + 1) as usize);
            let ok = bar_complex(x, depth)?.is_acyclic_on(lo, hi)?;
            rec.push(Record::new(id("bar_acyclic", object), ok).dims(vec![depth], vec![]));
        }
        Command::Filtration { object, depth } => {
            let x = ws.mixed_obj(object)?;
            for n in 0..=depth.unwrap_or(opts.verify.filtration_depth) {
                let q = filtration_quotient(x, n)?;
                let target = induce_koszul(x.ring(), &x.underlying(), -2 * n - 2)?;
                let found = koszul_isomorphism(&q, &target)?.is_found();
                rec.push(
                    Record::new(id("filtration", &format!("{object}/{n}")), found)
                        .dims(vec![q.total_dim()], vec![target.total_dim()])
                        .witness(found),
                );
            }
        }
        Command::Hom { source, target, expect } => {
            let d = ws.module(source)?.hom_space(ws.module(target)?)?.len();
            rec.push(Record::new(id("hom", &format!("{source},{target}")), expect_eq(*expect, d)).dims(vec![d], expect.iter().copied().collect()));
        }
        Command::Ext1 { source, target, expect } => {
            let d = ext1(ws.module(source)?, ws.module(target)?)?.dim;
            rec.push(Record::new(id("ext1", &format!("{source},{target}")), expect_eq(*expect, d)).dims(vec![d], expect.iter().copied().collect()));
        }
        Command::StableHom { source, target, expect } => {
            let s = stable_hom(ws.module(source)?, ws.module(target)?, StableMode::Projectives)?;
            rec.push(
                Record::new(id("stable_hom", &format!("{source},{target}")), expect_eq(*expect, s.dim))
                    .dims(vec![s.dim], expect.iter().copied().collect())
                    .witness(!s.representatives.is_empty()),
            );
        }
        Command::Pd { module, bound, expect } => {
            let r = projective_resolution(ws.module(module)?, bound.unwrap_or(3))?;
            let text = pd_text(&r.verdict);
            out.notes.push(format!("pd({module}) = {text}"));
            rec.push(Record::new(id("pd", module), expect_eq(expect.as_deref(), text.as_str())).dims(vec![r.terms.len()], vec![]));
        }
        Command::Gorenstein { module, bound, expect_gp } => {
            let r = gorenstein_membership(ws.module(module)?, bound.unwrap_or(3))?;
            out.notes.push(format!(
                "{module}: pd = {}, GP = {}, GI = {}, witness = {}",
                pd_text(&r.pd),
                verdict(&r.gorenstein_projective),
                verdict(&r.gorenstein_injective),
                r.witness.as_ref().map_or("none".into(), |w| match w.period {
                    Some(p) => format!("period {p} on [{}, {}]", w.window.0, w.window.1),
                    None => format!("aperiodic on [{}, {}]", w.window.0, w.window.1),
                }),
            ));
            let gp = r.gorenstein_projective == Verdict::Yes;
            rec.push(Record::new(id("gorenstein", module), expect_eq(*expect_gp, gp)).witness(r.witness.is_some()));
        }
        Command::Orthogonal { list, object, side, expect } => {
            let mods: Vec<FinModule> = list.iter().map(|n| ws.module(n).cloned()).collect::<Result<_>>()?;
            let side = if *side == SideSpec::Left { Side::Left } else { Side::Right };
            let o = orthogonal_membership(&mods, ws.module(object)?, side)?;
            rec.push(Record::new(id("orthogonal", object), expect_eq(*expect, o.member)).dims(o.ext_dims, vec![]));
        }
        Command::PathObject { object, expect_dim } => {
            let y = ws.module(object)?;
            let cover = y.projective_cover()?;
            let p = path_object(y, &cover.module, &cover.map)?;
            let ok = p.check().is_empty() && expect_eq(*expect_dim, p.py.dim());
            rec.push(Record::new(id("path_object", object), ok).dims(vec![p.py.dim()], expect_dim.iter().copied().collect()));
        }
        Command::RightHomotopic { f: fname, g: gname, expect } => {
            let (s1, t1, fm) = lookup(&ws.morphisms, "morphism", fname)?;
            let (s2, t2, gm) = lookup(&ws.morphisms, "morphism", gname)?;
            if s1 != s2 || t1 != t2 {
                return Err(Error::Validation(format!("{fname} and {gname} have different shapes")));
            }
            let y = ws.module(t1)?;
            let cover = y.projective_cover()?;
            let p = path_object(y, &cover.module, &cover.map)?;
            let v = right_homotopic(ws.module(s1)?, fm, gm, &p)?;
            let ok = v.agree() && expect_eq(*expect, v.path_object);
            rec.push(Record::new(id("right_homotopic", &format!("{fname},{gname}")), ok));
        }
        Command::MixedClasses { object, expect_cofibrant, expect_fibrant } => {
            let v = mixed_model_class_test(ws.mixed_obj(object)?)?;
            out.notes.push(format!("{object}: cofibrant = {}, fibrant = {}", v.ctr_sing_cofibrant, v.ctr_sing_fibrant_abs));
            let ok = expect_eq(*expect_cofibrant, v.ctr_sing_cofibrant) && expect_eq(*expect_fibrant, v.ctr_sing_fibrant_abs);
            rec.push(Record::new(id("mixed_classes", object), ok));
        }
        Command::WeaklyTrivial { p, x } => {
            let pc = lookup(&ws.complexes, "complex", p)?;
            let xc = lookup(&ws.complexes, "complex", x)?;
            rec.push(Record::new(id("weakly_trivial", &format!("{p},{x}")), weakly_trivial_examples_check(pc, xc)?));
        }
        Command::Suite { name } => {
            let corpus = Corpus::standard(f)?;
            let suites: Vec<Suite> = if name == "all" { Suite::ALL.to_vec() } else { vec![name.parse()?] };
            for s in suites {
                rec.extend(run_suite(s, &corpus, &opts.verify)?);
            }
        }
    }
    Ok(())
}
