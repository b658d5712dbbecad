use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::FinAlgebra;
use crate::error::{Error, Result};
use crate::graded::{CdgModule, CdgRing, GradedModule};
use crate::linalg::{Fp, LinearSystem, Matrix, Term};
use crate::module::FinModule;

/// A commutative base `S`, a central `w`, and the Koszul cdg ring `K_{S,w}` built from them.
#[derive(Clone, Debug)]
pub struct KoszulRing {
    s: Arc<FinAlgebra>,
    w: Vec<u64>,
    k: Arc<CdgRing>,
}

impl PartialEq for KoszulRing {
    fn eq(&self, other: &Self) -> bool {
        *self.s == *other.s && self.w == other.w
    }
}

impl KoszulRing {
    pub fn new(s: Arc<FinAlgebra>, w: Vec<u64>) -> Result<Self> {
        let k = Arc::new(CdgRing::koszul(&s, &w)?);
        Ok(KoszulRing { s, w, k })
    }

    pub fn base(&self) -> &Arc<FinAlgebra> {
        &self.s
    }

    pub fn w(&self) -> &[u64] {
        &self.w
    }

    pub fn cdg(&self) -> &Arc<CdgRing> {
        &self.k
    }

    pub fn field(&self) -> Fp {
        self.s.field()
    }

    /// The element `1·s` of `K` in its basis coordinates.
    pub fn s_element(&self) -> Vec<u64> {
        let mut v = vec![0; self.s.dim()];
        v.extend_from_slice(self.s.unit());
        v
    }
}

pub(crate) fn same_koszul(a: &Arc<KoszulRing>, b: &Arc<KoszulRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// ℤ-graded objects given degreewise by S-modules `X^n` with `d: X^n → X^{n+1}` and `s: X^n → X^{n-1}`.
pub trait KoszulData {
    fn ring(&self) -> &Arc<KoszulRing>;
    fn comp(&self, n: i64) -> FinModule;
    fn d(&self, n: i64) -> Matrix;
    fn s(&self, n: i64) -> Matrix;

    fn comp_dim(&self, n: i64) -> usize {
        self.comp(n).dim()
    }

    /// Every violated mixed-complex identity with source degree in `[lo, hi]`.
    fn check_window(&self, lo: i64, hi: i64) -> Vec<String> {
        let ring = self.ring();
        let f = ring.field();
        let mut out = Vec::new();
        for n in lo..=hi {
            let x = self.comp(n);
            let dn = self.d(n);
            let sn = self.s(n);
            if !self.d(n + 1).mul(&dn).is_zero() {
                out.push(format!("d²≠0 at degree {n}"));
            }
            if !self.s(n - 1).mul(&sn).is_zero() {
                out.push(format!("s²≠0 at degree {n}"));
            }
            let ds = self.d(n - 1).mul(&sn).add(&self.s(n + 1).mul(&dn));
            if ds != x.act(ring.w()) {
                out.push(format!("ds+sd≠w at degree {n}"));
            }
            let (xp, xm) = (self.comp(n + 1), self.comp(n - 1));
            for &g in ring.base().generators() {
                if dn.mul(x.action(g)) != xp.action(g).mul(&dn) {
                    out.push(format!("d not S-linear at degree {n}"));
                }
                if sn.mul(x.action(g)) != xm.action(g).mul(&sn) {
                    out.push(format!("s not S-linear at degree {n}"));
                }
            }
            let _ = f;
        }
        out
    }

    /// `dim H^n(X, d)` for `n` in `[lo, hi]`; errors if `d² ≠ 0` there.
    fn d_cohomology(&self, lo: i64, hi: i64) -> Result<BTreeMap<i64, usize>> {
        let mut out = BTreeMap::new();
        for n in lo..=hi {
            let (din, dout) = (self.d(n - 1), self.d(n));
            if !dout.mul(&din).is_zero() {
                return Err(Error::Validation(format!("d²≠0 at degree {}", n - 1)));
            }
            out.insert(n, self.comp_dim(n) - dout.rank() - din.rank());
        }
        Ok(out)
    }
}

/// A finite-support curved mixed complex: `d² = 0`, `s² = 0`, `ds + sd = w`.
#[derive(Clone, Debug)]
pub struct MixedComplex {
    ring: Arc<KoszulRing>,
    comps: BTreeMap<i64, FinModule>,
    d: BTreeMap<i64, Matrix>,
    s: BTreeMap<i64, Matrix>,
}

impl PartialEq for MixedComplex {
    fn eq(&self, other: &Self) -> bool {
        same_koszul(&self.ring, &other.ring) && self.comps == other.comps && self.d == other.d && self.s == other.s
    }
}

impl KoszulData for MixedComplex {
    fn ring(&self) -> &Arc<KoszulRing> {
        &self.ring
    }

    fn comp(&self, n: i64) -> FinModule {
        self.comps.get(&n).cloned().unwrap_or_else(|| FinModule::zero(self.ring.base().clone()))
    }

    fn comp_dim(&self, n: i64) -> usize {
        self.comps.get(&n).map_or(0, |m| m.dim())
    }

    fn d(&self, n: i64) -> Matrix {
        self.d
            .get(&n)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(self.ring.field(), self.comp_dim(n + 1), self.comp_dim(n)))
    }

    fn s(&self, n: i64) -> Matrix {
        self.s
            .get(&n)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(self.ring.field(), self.comp_dim(n - 1), self.comp_dim(n)))
    }
}

impl MixedComplex {
    /// Components keyed by degree; `d[n]: X^n → X^{n+1}`, `s[n]: X^n → X^{n-1}`. Missing maps are zero.
    pub fn new(
        ring: Arc<KoszulRing>,
        comps: BTreeMap<i64, FinModule>,
        d: BTreeMap<i64, Matrix>,
        s: BTreeMap<i64, Matrix>,
    ) -> Result<Self> {
        let x = Self::unchecked(ring, comps, d, s)?;
        let report = x.check();
        if report.is_empty() {
            Ok(x)
        } else {
            Err(Error::Validation(report.join("; ")))
        }
    }

    pub(crate) fn unchecked(
        ring: Arc<KoszulRing>,
        comps: BTreeMap<i64, FinModule>,
        d: BTreeMap<i64, Matrix>,
        s: BTreeMap<i64, Matrix>,
    ) -> Result<Self> {
        let comps: BTreeMap<i64, FinModule> = comps.into_iter().filter(|(_, m)| !m.is_zero()).collect();
        for m in comps.values() {
            if **m.algebra() != **ring.base() {
                return Err(Error::AlgebraMismatch);
            }
        }
        let dim = |n: i64| comps.get(&n).map_or(0, |m| m.dim());
        for (&n, m) in &d {
            if m.shape() != (dim(n + 1), dim(n)) {
                return Err(Error::InvalidInput(format!("d at degree {n} has wrong shape")));
            }
        }
        for (&n, m) in &s {
            if m.shape() != (dim(n - 1), dim(n)) {
                return Err(Error::InvalidInput(format!("s at degree {n} has wrong shape")));
            }
        }
        let d = d.into_iter().filter(|(_, m)| m.rows() > 0 && m.cols() > 0).collect();
        let s = s.into_iter().filter(|(_, m)| m.rows() > 0 && m.cols() > 0).collect();
        Ok(MixedComplex { ring, comps, d, s })
    }

    pub fn zero(ring: Arc<KoszulRing>) -> Self {
        MixedComplex { ring, comps: BTreeMap::new(), d: BTreeMap::new(), s: BTreeMap::new() }
    }

    /// `K_{S,w}` over itself: `X^0 = S`, `X^{-1} = S·s`, `d = w·`, `s = id`.
    pub fn koszul_regular(ring: Arc<KoszulRing>) -> Self {
        let s = ring.base().clone();
        let free = FinModule::free(s.clone(), 1);
        let w = free.act(ring.w());
        let id = Matrix::identity(ring.field(), s.dim());
        let comps = BTreeMap::from([(-1, free.clone()), (0, free)]);
        MixedComplex::unchecked(ring, comps, BTreeMap::from([(-1, w)]), BTreeMap::from([(0, id)]))
            .expect("shapes are consistent")
    }

    /// Every violated identity on the support (plus one degree either side).
    pub fn check(&self) -> Vec<String> {
        match self.support_range() {
            Some((lo, hi)) => self.check_window(lo - 1, hi + 1),
            None => Vec::new(),
        }
    }

    pub fn support_range(&self) -> Option<(i64, i64)> {
        Some((*self.comps.keys().next()?, *self.comps.keys().next_back()?))
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn total_dim(&self) -> usize {
        self.comps.values().map(|m| m.dim()).sum()
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.comps.keys().copied().collect()
    }

    /// `ΣⁿX`: `(ΣⁿX)^k = X^{k+n}`, `d ↦ (-1)^n d`, `s ↦ (-1)^n s` (`s` is odd).
    pub fn suspend(&self, n: i64) -> MixedComplex {
        let f = self.ring.field();
        let sg = f.sign(n);
        MixedComplex {
            ring: self.ring.clone(),
            comps: self.comps.iter().map(|(&k, m)| (k - n, m.clone())).collect(),
            d: self.d.iter().map(|(&k, m)| (k - n, m.scale(sg))).collect(),
            s: self.s.iter().map(|(&k, m)| (k - n, m.scale(sg))).collect(),
        }
    }

    pub fn direct_sum(parts: &[&MixedComplex]) -> Result<MixedComplex> {
        let first = parts.first().ok_or_else(|| Error::InvalidInput("empty direct sum".into()))?;
        if parts.iter().any(|p| !same_koszul(&p.ring, &first.ring)) {
            return Err(Error::AlgebraMismatch);
        }
        let f = first.ring.field();
        let mut degrees: Vec<i64> = parts.iter().flat_map(|p| p.comps.keys().copied()).collect();
        degrees.sort();
        degrees.dedup();
        let mut comps = BTreeMap::new();
        let mut d = BTreeMap::new();
        let mut s = BTreeMap::new();
        for &n in &degrees {
            let cs: Vec<FinModule> = parts.iter().map(|p| p.comp(n)).collect();
            comps.insert(n, FinModule::direct_sum(&cs.iter().collect::<Vec<_>>())?);
            let ds: Vec<Matrix> = parts.iter().map(|p| p.d(n)).collect();
            d.insert(n, Matrix::block_diag(f, &ds.iter().collect::<Vec<_>>()));
            let ss: Vec<Matrix> = parts.iter().map(|p| p.s(n)).collect();
            s.insert(n, Matrix::block_diag(f, &ss.iter().collect::<Vec<_>>()));
        }
        Self::unchecked(first.ring.clone(), comps, d, s)
    }

    /// Transport the structure along degreewise S-isomorphisms `u^n: X^n → Y^n` (`Y` has the same modules
    /// when `u^n` commutes with the action; otherwise the action is conjugated too).
    pub fn conjugate(&self, u: &BTreeMap<i64, Matrix>) -> Result<MixedComplex> {
        let mut comps = BTreeMap::new();
        let mut inv = BTreeMap::new();
        for (&n, m) in &self.comps {
            let un = u.get(&n).ok_or_else(|| Error::InvalidInput(format!("missing automorphism in degree {n}")))?;
            let ui = un.inverse().ok_or_else(|| Error::InvalidInput(format!("not invertible in degree {n}")))?;
            let action = m.actions().iter().map(|a| un.mul(a).mul(&ui)).collect();
            comps.insert(n, FinModule::new(m.algebra().clone(), m.dim(), action)?);
            inv.insert(n, ui);
        }
        let d = self.d.iter().map(|(&n, m)| (n, u[&(n + 1)].mul(m).mul(&inv[&n]))).collect();
        let s = self.s.iter().map(|(&n, m)| (n, u[&(n - 1)].mul(m).mul(&inv[&n]))).collect();
        Self::unchecked(self.ring.clone(), comps, d, s)
    }

    /// Total-matrix form as a cdg module over `K_{S,w}`; components in increasing degree.
    pub fn to_cdg(&self) -> CdgModule {
        let ring = &self.ring;
        let k = ring.cdg();
        let f = ring.field();
        let n_s = ring.base().dim();
        let offsets = self.offsets();
        let total = self.total_dim();
        let mut degrees = Vec::with_capacity(total);
        for (&n, m) in &self.comps {
            degrees.extend(std::iter::repeat_n(n, m.dim()));
        }
        let mut diff = Matrix::zeros(f, total, total);
        let mut smat = Matrix::zeros(f, total, total);
        for &n in self.comps.keys() {
            if let Some(&o1) = offsets.get(&(n + 1)) {
                diff.set_block(o1, offsets[&n], &self.d(n));
            }
            if let Some(&o0) = offsets.get(&(n - 1)) {
                smat.set_block(o0, offsets[&n], &self.s(n));
            }
        }
        let mut action = Vec::with_capacity(2 * n_s);
        for i in 0..n_s {
            let blocks: Vec<&Matrix> = self.comps.values().map(|m| m.action(i)).collect();
            action.push(Matrix::block_diag(f, &blocks));
        }
        for i in 0..n_s {
            let a = action[i].clone();
            action.push(smat.mul(&a));
        }
        let fm = FinModule::new_unchecked(k.base().clone(), total, action);
        let sharp = GradedModule::new(k.algebra().clone(), fm, degrees).expect("degrees are consistent");
        CdgModule::new(k.clone(), sharp, diff).expect("mixed complex identities give a cdg module")
    }

    /// Inverse of [`MixedComplex::to_cdg`] for any cdg module over `K_{S,w}`.
    pub fn from_cdg(ring: Arc<KoszulRing>, x: &CdgModule) -> Result<MixedComplex> {
        if **x.ring() != **ring.cdg() {
            return Err(Error::AlgebraMismatch);
        }
        let n_s = ring.base().dim();
        let sm = x.sharp().total().act(&ring.s_element());
        let mut comps = BTreeMap::new();
        let mut d = BTreeMap::new();
        let mut s = BTreeMap::new();
        for n in x.support() {
            let idx = x.indices(n);
            let action = (0..n_s).map(|i| x.action(i).select(&idx, &idx)).collect();
            comps.insert(n, FinModule::new(ring.base().clone(), idx.len(), action)?);
            d.insert(n, x.diff().select(&x.indices(n + 1), &idx));
            s.insert(n, sm.select(&x.indices(n - 1), &idx));
        }
        MixedComplex::new(ring, comps, d, s)
    }

    /// `n ↦` offset of `X^n` inside the total basis used by [`MixedComplex::to_cdg`].
    pub fn offsets(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        let mut acc = 0;
        for (&n, m) in &self.comps {
            out.insert(n, acc);
            acc += m.dim();
        }
        out
    }

    /// An S-linear `h` of degree +1 with `sh + hs = id`, if `(X, s)` is contractible.
    pub fn s_contraction(&self) -> Result<Option<BTreeMap<i64, Matrix>>> {
        let f = self.ring.field();
        let degrees = self.degrees();
        let mut sys = LinearSystem::new(f);
        let mut blocks = BTreeMap::new();
        for &n in &degrees {
            if self.comp_dim(n + 1) > 0 {
                blocks.insert(n, sys.add_block(self.comp_dim(n + 1), self.comp_dim(n)));
            }
        }
        let neg = f.neg(1);
        let gens = self.ring.base().generators().to_vec();
        let mut owned = Vec::new();
        for &n in &degrees {
            let x = self.comp(n);
            if let Some(&b) = blocks.get(&n) {
                let xp = self.comp(n + 1);
                for &g in &gens {
                    owned.push((n, Some((b, x.action(g).clone(), xp.action(g).clone()))));
                }
            }
            owned.push((n, None));
        }
        for (n, item) in &owned {
            let n = *n;
            match item {
                Some((b, rx, rxp)) => {
                    let dim = (rxp.rows(), rx.cols());
                    sys.add_equation(dim.0, dim.1, &[Term::right(*b, rx), Term::left(neg, rxp, *b)], None);
                }
                None => {
                    // s^{n+1} h^n + h^{n-1} s^n = id on X^n
                    let dim = self.comp_dim(n);
                    let sp = self.s(n + 1);
                    let sn = self.s(n);
                    let mut terms = Vec::new();
                    if let Some(&b) = blocks.get(&n) {
                        terms.push(Term::left(1, &sp, b));
                    }
                    if let Some(&b) = blocks.get(&(n - 1)) {
                        terms.push(Term::right(b, &sn));
                    }
                    let id = Matrix::identity(f, dim);
                    if terms.is_empty() {
                        if dim > 0 {
                            return Ok(None);
                        }
                        continue;
                    }
                    sys.add_equation(dim, dim, &terms, Some(&id));
                }
            }
        }
        Ok(sys.particular().map(|sol| blocks.keys().copied().zip(sol).collect()))
    }
}

/// A bounded complex of S-modules (`d² = 0`, `d` S-linear).
#[derive(Clone, Debug, PartialEq)]
pub struct SComplex {
    base: Arc<FinAlgebra>,
    comps: BTreeMap<i64, FinModule>,
    d: BTreeMap<i64, Matrix>,
}

impl SComplex {
    pub fn new(base: Arc<FinAlgebra>, comps: BTreeMap<i64, FinModule>, d: BTreeMap<i64, Matrix>) -> Result<Self> {
        let comps: BTreeMap<i64, FinModule> = comps.into_iter().filter(|(_, m)| !m.is_zero()).collect();
        let x = SComplex { base, comps, d };
        for m in x.comps.values() {
            if **m.algebra() != *x.base {
                return Err(Error::AlgebraMismatch);
            }
        }
        for (&n, m) in &x.d {
            if m.shape() != (x.comp_dim(n + 1), x.comp_dim(n)) {
                return Err(Error::InvalidInput(format!("d at degree {n} has wrong shape")));
            }
            if !x.comp(n).is_homomorphism(&x.comp(n + 1), m) {
                return Err(Error::Validation(format!("d not S-linear at degree {n}")));
            }
            if !x.d(n + 1).mul(m).is_zero() {
                return Err(Error::Validation(format!("d²≠0 at degree {n}")));
            }
        }
        Ok(x)
    }

    /// A single module in degree `n`.
    pub fn stalk(m: FinModule, n: i64) -> Self {
        let base = m.algebra().clone();
        SComplex::new(base, BTreeMap::from([(n, m)]), BTreeMap::new()).expect("stalks are complexes")
    }

    pub fn base(&self) -> &Arc<FinAlgebra> {
        &self.base
    }

    pub fn comp(&self, n: i64) -> FinModule {
        self.comps.get(&n).cloned().unwrap_or_else(|| FinModule::zero(self.base.clone()))
    }

    pub fn comp_dim(&self, n: i64) -> usize {
        self.comps.get(&n).map_or(0, |m| m.dim())
    }

    pub fn d(&self, n: i64) -> Matrix {
        self.d
            .get(&n)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(self.base.field(), self.comp_dim(n + 1), self.comp_dim(n)))
    }

    pub fn support_range(&self) -> Option<(i64, i64)> {
        Some((*self.comps.keys().next()?, *self.comps.keys().next_back()?))
    }

    pub fn total_dim(&self) -> usize {
        self.comps.values().map(|m| m.dim()).sum()
    }

    /// `(ΣⁿV)^k = V^{k+n}`, `d ↦ (-1)^n d`.
    pub fn suspend(&self, n: i64) -> SComplex {
        let sg = self.base.field().sign(n);
        SComplex {
            base: self.base.clone(),
            comps: self.comps.iter().map(|(&k, m)| (k - n, m.clone())).collect(),
            d: self.d.iter().map(|(&k, m)| (k - n, m.scale(sg))).collect(),
        }
    }
}

impl MixedComplex {
    /// Forget `s`.
    pub fn underlying(&self) -> SComplex {
        SComplex { base: self.ring.base().clone(), comps: self.comps.clone(), d: self.d.clone() }
    }
}

/// `K ⊗_S Σ^shift V` for a complex of S-modules `V`.
///
/// Degree `m` holds the `1`-slot `(Σ^shift V)^m` followed by the `s`-slot `(Σ^shift V)^{m+1}`;
/// `d = [[∂, w], [0, -∂]]`, `s = [[0, 0], [1, 0]]`.
pub fn induce_koszul(ring: &Arc<KoszulRing>, v: &SComplex, shift: i64) -> Result<MixedComplex> {
    if **v.base() != **ring.base() {
        return Err(Error::AlgebraMismatch);
    }
    let ring = ring.clone();
    let f = ring.field();
    let y = v.suspend(shift);
    let range = match y.support_range() {
        Some(r) => r,
        None => return Ok(MixedComplex::zero(ring)),
    };
    let mut comps = BTreeMap::new();
    let mut d = BTreeMap::new();
    let mut s = BTreeMap::new();
    for m in range.0 - 1..=range.1 {
        comps.insert(m, FinModule::direct_sum(&[&y.comp(m), &y.comp(m + 1)])?);
    }
    for m in range.0 - 1..=range.1 {
        // d: (Y^m, Y^{m+1}) → (Y^{m+1}, Y^{m+2})
        let (y0, y1, y2) = (y.comp_dim(m), y.comp_dim(m + 1), y.comp_dim(m + 2));
        let mut dm = Matrix::zeros(f, y1 + y2, y0 + y1);
        dm.set_block(0, 0, &y.d(m));
        dm.set_block(0, y0, &y.comp(m + 1).act(ring.w()));
        dm.set_block(y1, y0, &y.d(m + 1).neg());
        if m < range.1 {
            d.insert(m, dm);
        }
        // s: (Y^m, Y^{m+1}) → (Y^{m-1}, Y^m)
        let ym1 = y.comp_dim(m - 1);
        let mut sm = Matrix::zeros(f, ym1 + y0, y0 + y1);
        sm.set_block(ym1, 0, &Matrix::identity(f, y0));
        if m > range.0 - 1 {
            s.insert(m, sm);
        }
    }
    MixedComplex::new(ring, comps, d, s)
}

/// Degreewise S-linear maps `α^n: X^n → Y^n` for `n` in `[lo, hi]` commuting with `d` and `s`.
///
/// Both sides are read through [`KoszulData`], so either may be a tame (infinite) object, as long as
/// one of them vanishes outside `[lo, hi]`.
pub fn koszul_hom_space(x: &dyn KoszulData, y: &dyn KoszulData, lo: i64, hi: i64) -> Result<Vec<BTreeMap<i64, Matrix>>> {
    if !same_koszul(x.ring(), y.ring()) {
        return Err(Error::AlgebraMismatch);
    }
    let ring = x.ring().clone();
    let f = ring.field();
    let neg = f.neg(1);
    let mut sys = LinearSystem::new(f);
    let mut blocks = BTreeMap::new();
    let xs: BTreeMap<i64, FinModule> = (lo - 1..=hi + 1).map(|n| (n, x.comp(n))).collect();
    let ys: BTreeMap<i64, FinModule> = (lo - 1..=hi + 1).map(|n| (n, y.comp(n))).collect();
    for n in lo..=hi {
        if xs[&n].dim() > 0 && ys[&n].dim() > 0 {
            blocks.insert(n, sys.add_block(ys[&n].dim(), xs[&n].dim()));
        }
    }
    struct Eq {
        rows: usize,
        cols: usize,
        terms: Vec<(u64, Option<Matrix>, i64, Option<Matrix>)>,
    }
    let mut eqs = Vec::new();
    for n in lo..=hi {
        if blocks.contains_key(&n) {
            for &g in ring.base().generators() {
                eqs.push(Eq {
                    rows: ys[&n].dim(),
                    cols: xs[&n].dim(),
                    terms: vec![(1, None, n, Some(xs[&n].action(g).clone())), (neg, Some(ys[&n].action(g).clone()), n, None)],
                });
            }
        }
    }
    for n in lo - 1..=hi {
        // α^{n+1} d_X^n = d_Y^n α^n
        let mut terms = Vec::new();
        if blocks.contains_key(&(n + 1)) {
            terms.push((1, None, n + 1, Some(x.d(n))));
        }
        if blocks.contains_key(&n) {
            terms.push((neg, Some(y.d(n)), n, None));
        }
        if !terms.is_empty() {
            eqs.push(Eq { rows: ys[&(n + 1)].dim(), cols: xs[&n].dim(), terms });
        }
    }
    for n in lo..=hi + 1 {
        // α^{n-1} s_X^n = s_Y^n α^n
        let mut terms = Vec::new();
        if blocks.contains_key(&(n - 1)) {
            terms.push((1, None, n - 1, Some(x.s(n))));
        }
        if blocks.contains_key(&n) {
            terms.push((neg, Some(y.s(n)), n, None));
        }
        if !terms.is_empty() {
            eqs.push(Eq { rows: ys[&(n - 1)].dim(), cols: xs[&n].dim(), terms });
        }
    }
    for e in &eqs {
        if e.rows == 0 || e.cols == 0 {
            continue;
        }
        let ts: Vec<Term> = e
            .terms
            .iter()
            .map(|(c, l, b, r)| Term::new(*c, l.as_ref(), blocks[b], r.as_ref()))
            .collect();
        sys.add_equation(e.rows, e.cols, &ts, None);
    }
    let keys: Vec<i64> = blocks.keys().copied().collect();
    Ok(sys.kernel().into_iter().map(|sol| keys.iter().copied().zip(sol).collect()).collect())
}

/// Does the degreewise family `α` commute with `d`, `s` and the S-action on `[lo, hi]`?
pub fn is_koszul_morphism(x: &dyn KoszulData, y: &dyn KoszulData, alpha: &dyn Fn(i64) -> Matrix, lo: i64, hi: i64) -> bool {
    let ring = x.ring();
    (lo..=hi).all(|n| {
        let a = alpha(n);
        let (xn, yn) = (x.comp(n), y.comp(n));
        a.shape() == (yn.dim(), xn.dim())
            && alpha(n + 1).mul(&x.d(n)) == y.d(n).mul(&a)
            && alpha(n - 1).mul(&x.s(n)) == y.s(n).mul(&a)
            && ring.base().generators().iter().all(|&g| a.mul(xn.action(g)) == yn.action(g).mul(&a))
    })
}
