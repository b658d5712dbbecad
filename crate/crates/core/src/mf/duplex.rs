use std::collections::BTreeMap;
use std::sync::Arc;

use super::koszul::{same_koszul, KoszulData, KoszulRing, MixedComplex};
use crate::error::{Error, Result};
use crate::linalg::{LinearSystem, Matrix, Term};
use crate::module::FinModule;
use crate::tame::{End, TameComplex};

/// An `(S, w)`-duplex `f: M⁰ ⇄ M¹ :g` with `fg = w`, `gf = w`.
#[derive(Clone, Debug)]
pub struct Duplex {
    ring: Arc<KoszulRing>,
    pub m0: FinModule,
    pub m1: FinModule,
    pub f: Matrix,
    pub g: Matrix,
}

impl PartialEq for Duplex {
    fn eq(&self, other: &Self) -> bool {
        same_koszul(&self.ring, &other.ring)
            && self.m0 == other.m0
            && self.m1 == other.m1
            && self.f == other.f
            && self.g == other.g
    }
}

impl Duplex {
    pub fn new(ring: Arc<KoszulRing>, m0: FinModule, m1: FinModule, f: Matrix, g: Matrix) -> Result<Self> {
        let x = Self::unchecked(ring, m0, m1, f, g)?;
        let report = x.check();
        if report.is_empty() {
            Ok(x)
        } else {
            Err(Error::Validation(report.join("; ")))
        }
    }

    pub fn unchecked(ring: Arc<KoszulRing>, m0: FinModule, m1: FinModule, f: Matrix, g: Matrix) -> Result<Self> {
        if **m0.algebra() != **ring.base() || **m1.algebra() != **ring.base() {
            return Err(Error::AlgebraMismatch);
        }
        if f.shape() != (m1.dim(), m0.dim()) || g.shape() != (m0.dim(), m1.dim()) {
            return Err(Error::InvalidInput("duplex maps have wrong shapes".into()));
        }
        Ok(Duplex { ring, m0, m1, f, g })
    }

    pub fn zero(ring: Arc<KoszulRing>) -> Self {
        let z = FinModule::zero(ring.base().clone());
        let m = Matrix::zeros(ring.field(), 0, 0);
        Duplex { ring, m0: z.clone(), m1: z, f: m.clone(), g: m }
    }

    pub fn ring(&self) -> &Arc<KoszulRing> {
        &self.ring
    }

    /// Every violated duplex identity.
    pub fn check(&self) -> Vec<String> {
        let mut out = Vec::new();
        let w = self.ring.w();
        if self.f.mul(&self.g) != self.m1.act(w) {
            out.push("fg≠w on M¹".to_string());
        }
        if self.g.mul(&self.f) != self.m0.act(w) {
            out.push("gf≠w on M⁰".to_string());
        }
        if !self.m0.is_homomorphism(&self.m1, &self.f) {
            out.push("f not S-linear".to_string());
        }
        if !self.m1.is_homomorphism(&self.m0, &self.g) {
            out.push("g not S-linear".to_string());
        }
        out
    }

    pub fn module(&self, parity: i64) -> &FinModule {
        if parity.rem_euclid(2) == 0 {
            &self.m0
        } else {
            &self.m1
        }
    }

    /// The map leaving `M^parity`.
    pub fn map(&self, parity: i64) -> &Matrix {
        if parity.rem_euclid(2) == 0 {
            &self.f
        } else {
            &self.g
        }
    }

    /// `ΣM = (M¹ ⇄ M⁰; -g, -f)`.
    pub fn suspend(&self) -> Duplex {
        Duplex {
            ring: self.ring.clone(),
            m0: self.m1.clone(),
            m1: self.m0.clone(),
            f: self.g.neg(),
            g: self.f.neg(),
        }
    }

    pub fn direct_sum(parts: &[&Duplex]) -> Result<Duplex> {
        let first = parts.first().ok_or_else(|| Error::InvalidInput("empty direct sum".into()))?;
        let fl = first.ring.field();
        let m0 = FinModule::direct_sum(&parts.iter().map(|p| &p.m0).collect::<Vec<_>>())?;
        let m1 = FinModule::direct_sum(&parts.iter().map(|p| &p.m1).collect::<Vec<_>>())?;
        let f = Matrix::block_diag(fl, &parts.iter().map(|p| &p.f).collect::<Vec<_>>());
        let g = Matrix::block_diag(fl, &parts.iter().map(|p| &p.g).collect::<Vec<_>>());
        Duplex::new(first.ring.clone(), m0, m1, f, g)
    }

    /// Is `(u0, u1)` a morphism of duplexes `self → target`?
    pub fn is_morphism(&self, target: &Duplex, u: &(Matrix, Matrix)) -> bool {
        let (u0, u1) = u;
        u0.shape() == (target.m0.dim(), self.m0.dim())
            && u1.shape() == (target.m1.dim(), self.m1.dim())
            && self.m0.is_homomorphism(&target.m0, u0)
            && self.m1.is_homomorphism(&target.m1, u1)
            && u1.mul(&self.f) == target.f.mul(u0)
            && u0.mul(&self.g) == target.g.mul(u1)
    }

    /// Basis of the morphisms `self → target`.
    pub fn hom_space(&self, target: &Duplex) -> Result<Vec<(Matrix, Matrix)>> {
        if !same_koszul(&self.ring, &target.ring) {
            return Err(Error::AlgebraMismatch);
        }
        let fl = self.ring.field();
        let neg = fl.neg(1);
        let mut sys = LinearSystem::new(fl);
        let b0 = sys.add_block(target.m0.dim(), self.m0.dim());
        let b1 = sys.add_block(target.m1.dim(), self.m1.dim());
        for &gen in self.ring.base().generators() {
            let (a0, c0) = (self.m0.action(gen), target.m0.action(gen));
            sys.add_equation(c0.rows(), a0.cols(), &[Term::right(b0, a0), Term::left(neg, c0, b0)], None);
            let (a1, c1) = (self.m1.action(gen), target.m1.action(gen));
            sys.add_equation(c1.rows(), a1.cols(), &[Term::right(b1, a1), Term::left(neg, c1, b1)], None);
        }
        sys.add_equation(
            target.m1.dim(),
            self.m0.dim(),
            &[Term::right(b1, &self.f), Term::left(neg, &target.f, b0)],
            None,
        );
        sys.add_equation(
            target.m0.dim(),
            self.m1.dim(),
            &[Term::right(b0, &self.g), Term::left(neg, &target.g, b1)],
            None,
        );
        Ok(sys.kernel().into_iter().map(|mut v| {
            let u1 = v.pop().expect("two blocks");
            let u0 = v.pop().expect("two blocks");
            (u0, u1)
        }).collect())
    }
}

/// `i(M)`: `M¹` in degree -1 and `M⁰` in degree 0 with `d = g`, `s = f`; `fold(i(M)) = M`.
pub fn iota(m: &Duplex) -> MixedComplex {
    let comps = BTreeMap::from([(-1, m.m1.clone()), (0, m.m0.clone())]);
    MixedComplex::new(
        m.ring.clone(),
        comps,
        BTreeMap::from([(-1, m.g.clone())]),
        BTreeMap::from([(0, m.f.clone())]),
    )
    .expect("a duplex gives a mixed complex")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FoldMode {
    Sum,
    Product,
}

/// Positions of `X^n` inside `M^{n mod 2}` of the folding.
pub(crate) fn fold_offsets(x: &MixedComplex) -> BTreeMap<i64, usize> {
    let mut acc = [0usize; 2];
    let mut out = BTreeMap::new();
    for n in x.degrees() {
        let p = n.rem_euclid(2) as usize;
        out.insert(n, acc[p]);
        acc[p] += x.comp_dim(n);
    }
    out
}

/// `M⁰ = ⊕ X^{2n}`, `M¹ = ⊕ X^{2n+1}` (increasing degree), both maps `d + s`.
///
/// Sums and products agree on finite support.
pub fn fold(x: &MixedComplex, _mode: FoldMode) -> Result<Duplex> {
    let ring = x.ring().clone();
    let fl = ring.field();
    let degrees = x.degrees();
    let parts = |p: i64| -> Vec<FinModule> {
        degrees.iter().filter(|n| n.rem_euclid(2) == p).map(|&n| x.comp(n)).collect()
    };
    let sum = |ms: Vec<FinModule>| -> Result<FinModule> {
        if ms.is_empty() {
            Ok(FinModule::zero(ring.base().clone()))
        } else {
            FinModule::direct_sum(&ms.iter().collect::<Vec<_>>())
        }
    };
    let m0 = sum(parts(0))?;
    let m1 = sum(parts(1))?;
    let off = fold_offsets(x);
    let mut f = Matrix::zeros(fl, m1.dim(), m0.dim());
    let mut g = Matrix::zeros(fl, m0.dim(), m1.dim());
    for &n in &degrees {
        let target = if n.rem_euclid(2) == 0 { &mut f } else { &mut g };
        if x.comp_dim(n + 1) > 0 {
            target.set_block(off[&(n + 1)], off[&n], &x.d(n));
        }
        if x.comp_dim(n - 1) > 0 {
            target.set_block(off[&(n - 1)], off[&n], &x.s(n));
        }
    }
    Duplex::new(ring, m0, m1, f, g)
}

/// `fold` on a degreewise morphism `v: X → Y`.
pub fn fold_map(x: &MixedComplex, y: &MixedComplex, v: &BTreeMap<i64, Matrix>) -> (Matrix, Matrix) {
    let fl = x.ring().field();
    let (ox, oy) = (fold_offsets(x), fold_offsets(y));
    let dim = |z: &MixedComplex, p: i64| -> usize {
        z.degrees().iter().filter(|n| n.rem_euclid(2) == p).map(|&n| z.comp_dim(n)).sum()
    };
    let mut u = [
        Matrix::zeros(fl, dim(y, 0), dim(x, 0)),
        Matrix::zeros(fl, dim(y, 1), dim(x, 1)),
    ];
    for (&n, m) in v {
        if x.comp_dim(n) > 0 && y.comp_dim(n) > 0 {
            u[n.rem_euclid(2) as usize].set_block(oy[&n], ox[&n], m);
        }
    }
    let [u0, u1] = u;
    (u0, u1)
}

/// `sbar(M)`: `M⁰ ⊕ M¹` in even degrees and `M¹ ⊕ M⁰` in odd degrees, with
/// `d = [[f, w], [-1, -g]]` (even → odd), `[[g, w], [-1, -f]]` (odd → even) and `s = [[0, 0], [1, 0]]`.
pub fn sbar(m: &Duplex) -> Result<TameComplex> {
    let report = m.check();
    if !report.is_empty() {
        return Err(Error::Validation(report.join("; ")));
    }
    let ring = m.ring.clone();
    let fl = ring.field();
    let comp = |p: i64| FinModule::direct_sum(&[m.module(p), m.module(p + 1)]);
    let dmat = |p: i64| {
        let (a, b) = (m.module(p), m.module(p + 1));
        let mut d = Matrix::zeros(fl, b.dim() + a.dim(), a.dim() + b.dim());
        d.set_block(0, 0, m.map(p));
        d.set_block(0, a.dim(), &b.act(ring.w()));
        d.set_block(b.dim(), 0, &Matrix::identity(fl, a.dim()).neg());
        d.set_block(b.dim(), a.dim(), &m.map(p + 1).neg());
        d
    };
    let smat = |p: i64| {
        // from degree p (M^p ⊕ M^{p+1}) to degree p-1 (M^{p+1} ⊕ M^p)
        let (a, b) = (m.module(p), m.module(p + 1));
        let mut s = Matrix::zeros(fl, b.dim() + a.dim(), a.dim() + b.dim());
        s.set_block(b.dim(), 0, &Matrix::identity(fl, a.dim()));
        s
    };
    let comps = vec![comp(0)?, comp(1)?, comp(0)?, comp(1)?];
    let d = vec![dmat(0), dmat(1), dmat(0)];
    let s = vec![smat(1), smat(0), smat(1)];
    TameComplex::new(ring, 0, comps, d, s, End::Periodic2, End::Periodic2)
}

/// `sbar` on a duplex morphism, in degree `n`.
pub fn sbar_map(u: &(Matrix, Matrix), n: i64) -> Matrix {
    let (u0, u1) = u;
    if n.rem_euclid(2) == 0 {
        Matrix::block_diag(u0.field(), &[u0, u1])
    } else {
        Matrix::block_diag(u0.field(), &[u1, u0])
    }
}
