use std::collections::BTreeMap;

use super::adjunction::counit;
use super::duplex::{fold, fold_offsets, sbar, FoldMode};
use super::koszul::{induce_koszul, is_koszul_morphism, koszul_hom_space, KoszulData, MixedComplex};
use crate::error::{Error, Result};
use crate::linalg::{Fp, Matrix};
use crate::module::{search_invertible, FinModule, IsoVerdict};
use crate::tame::{End, TameComplex};

/// The augmented bar complex `⋯ → K⊗Σ²X → K⊗ΣX → K⊗X → X`.
#[derive(Clone, Debug)]
pub struct BarComplex {
    pub x: MixedComplex,
    /// `C_k = K ⊗_S Σ^k X` for `k = 0..=depth`.
    pub terms: Vec<MixedComplex>,
    /// `maps[k-1][m] = b_k: C_k^m → C_{k-1}^m`.
    pub maps: Vec<BTreeMap<i64, Matrix>>,
    /// `q_0: C_0 → X`, `a⊗x ↦ ax`.
    pub augmentation: BTreeMap<i64, Matrix>,
}

fn internal_range(x: &MixedComplex, depth: usize) -> (i64, i64) {
    let (a, b) = x.support_range().unwrap_or((0, 0));
    (a - depth as i64 - 2, b + 1)
}

/// Terms up to `depth`; `b_k(1⊗x) = s⊗x + (-1)^k 1⊗sx`, `b_k(s⊗x) = (-1)^k s⊗sx`.
pub fn bar_complex(x: &MixedComplex, depth: usize) -> Result<BarComplex> {
    let ring = x.ring().clone();
    let fl = ring.field();
    let v = x.underlying();
    let terms: Vec<MixedComplex> =
        (0..=depth).map(|k| induce_koszul(&ring, &v, k as i64)).collect::<Result<_>>()?;
    let (lo, hi) = internal_range(x, depth);
    let xd = |j: i64| x.comp_dim(j);
    let mut maps = Vec::with_capacity(depth);
    for k in 1..=depth as i64 {
        let eps = fl.sign(k);
        let mut bk = BTreeMap::new();
        for m in lo..=hi {
            let (j0, j1, j2) = (m + k - 1, m + k, m + k + 1);
            let mut b = Matrix::zeros(fl, xd(j0) + xd(j1), xd(j1) + xd(j2));
            b.set_block(0, 0, &x.s(j1).scale(eps));
            b.set_block(xd(j0), 0, &Matrix::identity(fl, xd(j1)));
            b.set_block(xd(j0), xd(j1), &x.s(j2).scale(eps));
            bk.insert(m, b);
        }
        maps.push(bk);
    }
    let mut augmentation = BTreeMap::new();
    for m in lo..=hi {
        augmentation.insert(m, Matrix::hstack(&[&Matrix::identity(fl, xd(m)), &x.s(m + 1)]));
    }
    Ok(BarComplex { x: x.clone(), terms, maps, augmentation })
}

impl BarComplex {
    pub fn depth(&self) -> usize {
        self.terms.len() - 1
    }

    fn b(&self, k: usize, m: i64) -> Matrix {
        self.maps[k - 1].get(&m).cloned().unwrap_or_else(|| {
            Matrix::zeros(self.x.ring().field(), self.terms[k - 1].comp_dim(m), self.terms[k].comp_dim(m))
        })
    }

    fn q(&self, m: i64) -> Matrix {
        self.augmentation
            .get(&m)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(self.x.ring().field(), self.x.comp_dim(m), self.terms[0].comp_dim(m)))
    }

    /// Violations of: each `b_k` and `q_0` is a morphism of `K`-modules, `b∘b = 0`, `q_0∘b_1 = 0`.
    pub fn check(&self) -> Vec<String> {
        let mut out = Vec::new();
        let (lo, hi) = internal_range(&self.x, self.depth());
        let (lo, hi) = (lo + 1, hi - 1);
        if !is_koszul_morphism(&self.terms[0], &self.x, &|m| self.q(m), lo, hi) {
            out.push("augmentation is not a morphism".to_string());
        }
        for k in 1..=self.depth() {
            if !is_koszul_morphism(&self.terms[k], &self.terms[k - 1], &|m| self.b(k, m), lo, hi) {
                out.push(format!("b_{k} is not a morphism"));
            }
            for m in lo..=hi {
                let prev = if k == 1 { self.q(m) } else { self.b(k - 1, m) };
                if !prev.mul(&self.b(k, m)).is_zero() {
                    out.push(format!("composite through C_{} nonzero in degree {m}", k - 1));
                }
            }
        }
        out
    }

    /// Exactness of `C_depth^m → ⋯ → C_0^m → X^m → 0` at `X^m, C_0^m, …, C_{depth-1}^m` for `m` in `[lo, hi]`.
    pub fn is_acyclic_on(&self, lo: i64, hi: i64) -> Result<bool> {
        if lo > hi {
            return Err(Error::WindowInsufficient(format!("empty window [{lo}, {hi}]")));
        }
        let needed = self.x.support_range().map_or(0, |(_, b)| (b - lo + 1).max(0) as usize);
        if self.depth() < needed {
            return Err(Error::WindowInsufficient(format!(
                "depth {} cannot certify exactness down to degree {lo}; need {needed}",
                self.depth()
            )));
        }
        for m in lo..=hi {
            if self.q(m).rank() != self.x.comp_dim(m) {
                return Ok(false);
            }
            for k in 0..self.depth() {
                let out = if k == 0 { self.q(m) } else { self.b(k, m) };
                let inc = self.b(k + 1, m);
                if !out.mul(&inc).is_zero() || self.terms[k].comp_dim(m) - out.rank() != inc.rank() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Which factors `X^j` occur in degree `n`.
type Include = dyn Fn(i64, i64) -> bool;

fn factors(x: &MixedComplex, n: i64, include: &Include) -> Vec<(i64, usize)> {
    let mut acc = 0;
    let mut out = Vec::new();
    for j in x.degrees() {
        if include(n, j) {
            out.push((j, acc));
            acc += x.comp_dim(j);
        }
    }
    out
}

fn factor_dim(x: &MixedComplex, fs: &[(i64, usize)]) -> usize {
    fs.last().map_or(0, |&(j, o)| o + x.comp_dim(j))
}

fn factor_module(x: &MixedComplex, fs: &[(i64, usize)]) -> Result<FinModule> {
    if fs.is_empty() {
        return Ok(FinModule::zero(x.ring().base().clone()));
    }
    let ms: Vec<FinModule> = fs.iter().map(|&(j, _)| x.comp(j)).collect();
    FinModule::direct_sum(&ms.iter().collect::<Vec<_>>())
}

/// `d` acts on `X^j` as `∂ + s − id` for `j ≡ n` and as `w − ∂ − s` otherwise; `s` is `id` on `j ≡ n`.
fn closed_d(x: &MixedComplex, n: i64, include: &Include) -> Matrix {
    let fl = x.ring().field();
    let (src, tgt) = (factors(x, n, include), factors(x, n + 1, include));
    let pos: BTreeMap<i64, usize> = tgt.iter().copied().collect();
    let mut d = Matrix::zeros(fl, factor_dim(x, &tgt), factor_dim(x, &src));
    let neg = fl.neg(1);
    for &(j, c) in &src {
        let xj = x.comp(j);
        let parts: Vec<(i64, Matrix)> = if (j - n).rem_euclid(2) == 0 {
            vec![
                (j + 1, x.d(j)),
                (j - 1, x.s(j)),
                (j, Matrix::identity(fl, xj.dim()).scale(neg)),
            ]
        } else {
            vec![
                (j, xj.act(x.ring().w())),
                (j + 1, x.d(j).scale(neg)),
                (j - 1, x.s(j).scale(neg)),
            ]
        };
        for (t, m) in parts {
            if let Some(&r) = pos.get(&t) {
                if m.rows() > 0 {
                    let mut cur = d.select(&(r..r + m.rows()).collect::<Vec<_>>(), &(c..c + m.cols()).collect::<Vec<_>>());
                    cur = cur.add(&m);
                    d.set_block(r, c, &cur);
                }
            }
        }
    }
    d
}

fn closed_s(x: &MixedComplex, n: i64, include: &Include) -> Matrix {
    let fl = x.ring().field();
    let (src, tgt) = (factors(x, n, include), factors(x, n - 1, include));
    let pos: BTreeMap<i64, usize> = tgt.iter().copied().collect();
    let mut s = Matrix::zeros(fl, factor_dim(x, &tgt), factor_dim(x, &src));
    for &(j, c) in &src {
        if (j - n).rem_euclid(2) == 0 {
            if let Some(&r) = pos.get(&j) {
                s.set_block(r, c, &Matrix::identity(fl, x.comp_dim(j)));
            }
        }
    }
    s
}

fn closed_form(x: &MixedComplex, include: &Include, lo: i64, hi: i64, below: End, above: End) -> Result<TameComplex> {
    let comps = (lo..=hi).map(|n| factor_module(x, &factors(x, n, include))).collect::<Result<Vec<_>>>()?;
    let d = (lo..hi).map(|n| closed_d(x, n, include)).collect();
    let s = (lo + 1..=hi).map(|n| closed_s(x, n, include)).collect();
    TameComplex::new(x.ring().clone(), lo, comps, d, s, below, above)
}

/// `B∏X` in closed form: `(B∏X)^n = ∏_{j ≥ n} X^j`.
pub fn completed_bar(x: &MixedComplex) -> Result<TameComplex> {
    let (a, b) = match x.support_range() {
        Some(r) => r,
        None => return Ok(TameComplex::zero(x.ring().clone())),
    };
    closed_form(x, &|n, j| j >= n, a - 4, b, End::Periodic2, End::Zero)
}

/// Sign normalization `a⊗x ↦ σ a⊗x` identifying `Σ^k(K⊗Σ^kX)` with the closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignRule {
    /// `σ = (-1)^{k|a| + k(k+1)/2}`.
    Quoted,
    /// `σ = (-1)^{k|a|}`.
    WithoutTriangular,
    /// `σ = (-1)^{k(k+1)/2}`.
    WithoutSlot,
    Trivial,
}

impl SignRule {
    fn sign(self, f: Fp, k: i64, slot: i64) -> u64 {
        let tri = k * (k + 1) / 2;
        f.sign(match self {
            SignRule::Quoted => k * slot + tri,
            SignRule::WithoutTriangular => k * slot,
            SignRule::WithoutSlot => tri,
            SignRule::Trivial => 0,
        })
    }
}

/// `Tot^∏` of the bar complex on a window, in closed-form coordinates.
#[derive(Clone, Debug)]
pub struct Totalization {
    pub lo: i64,
    pub hi: i64,
    pub d: BTreeMap<i64, Matrix>,
    pub s: BTreeMap<i64, Matrix>,
}

impl Totalization {
    /// Degrees in `[lo, hi]` where `d` or `s` differ from `b`.
    pub fn mismatches(&self, b: &TameComplex) -> Vec<i64> {
        (self.lo..=self.hi).filter(|&n| self.d[&n] != b.d(n) || self.s[&n] != b.s(n)).collect()
    }
}

/// `Tot^n = ⊕_k (Σ^k C_k)^n = ⊕_k C_k^{n+k}` with `d = (-1)^k D_{C_k} + b_k` and `s = (-1)^k s_{C_k}`,
/// conjugated by the sign rule.
pub fn totalization(x: &MixedComplex, lo: i64, hi: i64, rule: SignRule) -> Result<Totalization> {
    let fl = x.ring().field();
    let top = x.support_range().map_or(lo, |(_, b)| b);
    let depth = ((top - lo + 1).max(0) / 2 + 1) as usize;
    let bar = bar_complex(x, depth)?;
    let cols = |n: i64| -> Vec<(usize, usize)> {
        let mut acc = 0;
        (0..=depth)
            .map(|k| {
                let dim = bar.terms[k].comp_dim(n + k as i64);
                let r = (acc, dim);
                acc += dim;
                r
            })
            .collect()
    };
    let total = |c: &[(usize, usize)]| c.last().map_or(0, |&(o, d)| o + d);
    let signs = |n: i64| -> Matrix {
        let mut diag = Vec::new();
        for k in 0..=depth as i64 {
            let j1 = n + 2 * k;
            diag.extend(std::iter::repeat_n(rule.sign(fl, k, 0), x.comp_dim(j1)));
            diag.extend(std::iter::repeat_n(rule.sign(fl, k, 1), x.comp_dim(j1 + 1)));
        }
        let mut m = Matrix::zeros(fl, diag.len(), diag.len());
        for (i, v) in diag.into_iter().enumerate() {
            m.set(i, i, v);
        }
        m
    };
    let mut d = BTreeMap::new();
    let mut s = BTreeMap::new();
    for n in lo..=hi {
        let (src, up, down) = (cols(n), cols(n + 1), cols(n - 1));
        let mut dn = Matrix::zeros(fl, total(&up), total(&src));
        let mut sn = Matrix::zeros(fl, total(&down), total(&src));
        for k in 0..=depth {
            let m = n + k as i64;
            let c = &bar.terms[k];
            let sg = fl.sign(k as i64);
            if src[k].1 > 0 {
                if up[k].1 > 0 {
                    dn.set_block(up[k].0, src[k].0, &c.d(m).scale(sg));
                }
                if k > 0 && up[k - 1].1 > 0 {
                    dn.set_block(up[k - 1].0, src[k].0, &bar.b(k, m));
                }
                if down[k].1 > 0 {
                    sn.set_block(down[k].0, src[k].0, &c.s(m).scale(sg));
                }
            }
        }
        let (sig, sig_up, sig_down) = (signs(n), signs(n + 1), signs(n - 1));
        d.insert(n, sig_up.mul(&dn).mul(&sig));
        s.insert(n, sig_down.mul(&sn).mul(&sig));
    }
    Ok(Totalization { lo, hi, d, s })
}

/// `q: B∏X → X` in degree `n`: the identity on `X^n` and `s` on `X^{n+1}`.
pub fn q_map(x: &MixedComplex, n: i64) -> Matrix {
    let fl = x.ring().field();
    let fs = factors(x, n, &|n, j| j >= n);
    let mut q = Matrix::zeros(fl, x.comp_dim(n), factor_dim(x, &fs));
    for (j, o) in fs {
        if j == n {
            q.set_block(0, o, &Matrix::identity(fl, x.comp_dim(n)));
        } else if j == n + 1 {
            q.set_block(0, o, &x.s(n + 1));
        }
    }
    q
}

/// The epimorphism `α: sbar(fold∏ X) → B∏X`, its kernel and the kernel's filtration.
#[derive(Clone, Debug)]
pub struct AlphaEpi {
    pub x: MixedComplex,
    pub source: TameComplex,
    pub target: TameComplex,
    pub kernel: TameComplex,
}

/// Position of `X^j` inside `sbar(fold X)^n = M^{n} ⊕ M^{n+1}`.
fn sbar_position(x: &MixedComplex, n: i64, j: i64) -> usize {
    let off = fold_offsets(x);
    if (j - n).rem_euclid(2) == 0 {
        off[&j]
    } else {
        let first: usize = x.degrees().iter().filter(|&&i| (i - n).rem_euclid(2) == 0).map(|&i| x.comp_dim(i)).sum();
        first + off[&j]
    }
}

fn selection(x: &MixedComplex, n: i64, include: &Include, source_dim: usize) -> Matrix {
    let fl = x.ring().field();
    let fs = factors(x, n, include);
    let mut m = Matrix::zeros(fl, factor_dim(x, &fs), source_dim);
    for (j, o) in fs {
        m.set_block(o, sbar_position(x, n, j), &Matrix::identity(fl, x.comp_dim(j)));
    }
    m
}

pub fn alpha_epi(x: &MixedComplex) -> Result<AlphaEpi> {
    let source = sbar(&fold(x, FoldMode::Product)?)?;
    let target = completed_bar(x)?;
    let kernel = match x.support_range() {
        Some((a, b)) => closed_form(x, &|n, j| j < n, a, b + 4, End::Zero, End::Periodic2)?,
        None => TameComplex::zero(x.ring().clone()),
    };
    Ok(AlphaEpi { x: x.clone(), source, target, kernel })
}

impl AlphaEpi {
    /// `α^n`: projection onto the factors `j ≥ n`.
    pub fn alpha(&self, n: i64) -> Matrix {
        selection(&self.x, n, &|n, j| j >= n, self.source.comp_dim(n))
    }

    /// `ker(α)^n = ∏_{j<n} X^j → sbar(fold X)^n`.
    pub fn kernel_inclusion(&self, n: i64) -> Matrix {
        selection(&self.x, n, &|n, j| j < n, self.source.comp_dim(n)).transpose()
    }

    /// Violations on `[lo, hi]`: `α` and the inclusion are morphisms, `α` is onto, the sequence is exact.
    pub fn check(&self, lo: i64, hi: i64) -> Vec<String> {
        let mut out = Vec::new();
        if !is_koszul_morphism(&self.source, &self.target, &|n| self.alpha(n), lo, hi) {
            out.push("α is not a morphism".to_string());
        }
        if !is_koszul_morphism(&self.kernel, &self.source, &|n| self.kernel_inclusion(n), lo, hi) {
            out.push("ker α → sbar(fold X) is not a morphism".to_string());
        }
        for n in lo..=hi {
            let (a, i) = (self.alpha(n), self.kernel_inclusion(n));
            if !a.is_surjective() {
                out.push(format!("α not onto in degree {n}"));
            }
            if !a.mul(&i).is_zero() || !i.is_injective() || i.rank() + a.rank() != self.source.comp_dim(n) {
                out.push(format!("not exact in degree {n}"));
            }
        }
        out
    }
}

/// `F_i/F_{i+1}` for the filtration `F_i^n = ∏_{j < n-2i} X^j` of `ker α`.
pub fn filtration_quotient(x: &MixedComplex, i: i64) -> Result<MixedComplex> {
    let (a, b) = match x.support_range() {
        Some(r) => r,
        None => return Ok(MixedComplex::zero(x.ring().clone())),
    };
    let include = move |n: i64, j: i64| j >= n - 2 * i - 2 && j < n - 2 * i;
    let (lo, hi) = (a + 2 * i + 1, b + 2 * i + 2);
    let comps = (lo..=hi).map(|n| Ok((n, factor_module(x, &factors(x, n, &include))?))).collect::<Result<_>>()?;
    let d = (lo..hi).map(|n| (n, closed_d(x, n, &include))).collect();
    let s = (lo + 1..=hi).map(|n| (n, closed_s(x, n, &include))).collect();
    MixedComplex::new(x.ring().clone(), comps, d, s)
}

/// Search for an isomorphism of mixed complexes, returned on the [`MixedComplex::to_cdg`] bases.
pub fn koszul_isomorphism(a: &MixedComplex, b: &MixedComplex) -> Result<IsoVerdict> {
    if a.total_dim() != b.total_dim() || a.degrees().iter().any(|&n| a.comp_dim(n) != b.comp_dim(n)) {
        return Ok(IsoVerdict::NotIsomorphic);
    }
    let (lo, hi) = match (a.support_range(), b.support_range()) {
        (Some((a0, a1)), Some((b0, b1))) => (a0.min(b0), a1.max(b1)),
        _ => return Ok(IsoVerdict::Found(Matrix::zeros(a.ring().field(), 0, 0))),
    };
    let fl = a.ring().field();
    let (oa, ob) = (a.offsets(), b.offsets());
    let basis: Vec<Matrix> = koszul_hom_space(a, b, lo, hi)?
        .into_iter()
        .map(|blocks| {
            let mut m = Matrix::zeros(fl, b.total_dim(), a.total_dim());
            for (n, blk) in blocks {
                m.set_block(ob[&n], oa[&n], &blk);
            }
            m
        })
        .collect();
    Ok(search_invertible(fl, &basis, a.total_dim()))
}

/// `ε_X = q ∘ α` on `[lo, hi]`.
pub fn counit_factorization_check(x: &MixedComplex, lo: i64, hi: i64) -> Result<bool> {
    let eps = counit(x)?;
    let ae = alpha_epi(x)?;
    let fl = x.ring().field();
    Ok((lo..=hi).all(|n| {
        let e = eps
            .get(&n)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(fl, x.comp_dim(n), ae.source.comp_dim(n)));
        e == q_map(x, n).mul(&ae.alpha(n))
    }))
}
