use std::collections::BTreeSet;
use std::sync::Arc;

use super::ring::{same_ring, CdgRing, GradedAlgebra, GradingGroup};
use crate::error::{Error, Result};
use crate::linalg::{Fp, Matrix};
use crate::module::FinModule;

/// A graded module stored as one total module with a degree label per basis vector.
#[derive(Clone, Debug)]
pub struct GradedModule {
    algebra: Arc<GradedAlgebra>,
    total: FinModule,
    degrees: Vec<i64>,
}

impl PartialEq for GradedModule {
    fn eq(&self, other: &Self) -> bool {
        *self.algebra == *other.algebra && self.degrees == other.degrees && self.total == other.total
    }
}

impl GradedModule {
    pub fn new(algebra: Arc<GradedAlgebra>, total: FinModule, degrees: Vec<i64>) -> Result<Self> {
        if degrees.len() != total.dim() {
            return Err(Error::InvalidInput("one degree per basis vector required".into()));
        }
        if **total.algebra() != **algebra.base() {
            return Err(Error::AlgebraMismatch);
        }
        let gr = algebra.grading();
        let degrees: Vec<i64> = degrees.into_iter().map(|d| gr.norm(d)).collect();
        let m = GradedModule { algebra, total, degrees };
        for i in 0..m.algebra.dim() {
            let a = m.total.action(i);
            let shift = m.algebra.degree(i);
            for c in 0..m.dim() {
                for r in 0..m.dim() {
                    if a.get(r, c) != 0 && m.degrees[r] != gr.norm(m.degrees[c] + shift) {
                        return Err(Error::Validation(format!(
                            "action of e{i} does not have degree {shift} (entry {r},{c})"
                        )));
                    }
                }
            }
        }
        Ok(m)
    }

    pub(crate) fn from_parts(algebra: Arc<GradedAlgebra>, total: FinModule, degrees: Vec<i64>) -> Self {
        GradedModule { algebra, total, degrees }
    }

    pub fn zero(algebra: Arc<GradedAlgebra>) -> Self {
        let total = FinModule::zero(algebra.base().clone());
        GradedModule { algebra, total, degrees: vec![] }
    }

    /// The free module of rank 1 with generator in degree `d`.
    pub fn free(algebra: Arc<GradedAlgebra>, d: i64) -> Self {
        let gr = algebra.grading();
        let degrees = algebra.degrees().iter().map(|&e| gr.norm(e + d)).collect();
        let total = FinModule::free(algebra.base().clone(), 1);
        GradedModule { algebra, total, degrees }
    }

    /// An ungraded module over the degree-0 algebra of a trivially graded algebra, placed in degree `d`.
    pub fn concentrated(algebra: Arc<GradedAlgebra>, m: FinModule, d: i64) -> Result<Self> {
        let n = m.dim();
        Self::new(algebra, m, vec![d; n])
    }

    pub fn algebra(&self) -> &Arc<GradedAlgebra> {
        &self.algebra
    }

    pub fn grading(&self) -> GradingGroup {
        self.algebra.grading()
    }

    pub fn field(&self) -> Fp {
        self.algebra.field()
    }

    pub fn total(&self) -> &FinModule {
        &self.total
    }

    pub fn dim(&self) -> usize {
        self.total.dim()
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn action(&self, i: usize) -> &Matrix {
        self.total.action(i)
    }

    /// Basis indices of the degree-`d` component.
    pub fn indices(&self, d: i64) -> Vec<usize> {
        let d = self.grading().norm(d);
        (0..self.degrees.len()).filter(|&i| self.degrees[i] == d).collect()
    }

    pub fn component_dim(&self, d: i64) -> usize {
        let d = self.grading().norm(d);
        self.degrees.iter().filter(|&&e| e == d).count()
    }

    pub fn support(&self) -> BTreeSet<i64> {
        self.degrees.iter().copied().collect()
    }

    /// Shift degrees and sign the action: `(Σⁿ X)^k = X^{k+n}`, `a ↦ (-1)^{|a|n} a`.
    pub fn suspend(&self, n: i64) -> GradedModule {
        let f = self.field();
        let gr = self.grading();
        let degrees = self.degrees.iter().map(|&d| gr.norm(d - n)).collect();
        let action = (0..self.algebra.dim())
            .map(|i| self.action(i).scale(f.sign(self.algebra.degree(i) * n)))
            .collect();
        let total = FinModule::new_unchecked(self.total.algebra().clone(), self.dim(), action);
        GradedModule { algebra: self.algebra.clone(), total, degrees }
    }

    pub fn direct_sum(mods: &[&GradedModule]) -> Result<GradedModule> {
        let first = mods.first().ok_or_else(|| Error::InvalidInput("empty direct sum".into()))?;
        if mods.iter().any(|m| *m.algebra != *first.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        let total = FinModule::direct_sum(&mods.iter().map(|m| &m.total).collect::<Vec<_>>())?;
        let degrees = mods.iter().flat_map(|m| m.degrees.iter().copied()).collect();
        Ok(GradedModule { algebra: first.algebra.clone(), total, degrees })
    }

    /// Does `f: self → target` have degree `k`?
    pub fn has_degree(&self, target: &GradedModule, f: &Matrix, k: i64) -> bool {
        let gr = self.grading();
        f.shape() == (target.dim(), self.dim())
            && (0..self.dim())
                .all(|c| (0..target.dim()).all(|r| f.get(r, c) == 0 || target.degrees[r] == gr.norm(self.degrees[c] + k)))
    }

    /// Degree-`k` graded homomorphism: `f(ax) = (-1)^{|a|k} a f(x)`.
    pub fn is_graded_hom(&self, target: &GradedModule, f: &Matrix, k: i64) -> bool {
        let fld = self.field();
        self.has_degree(target, f, k)
            && (0..self.algebra.dim()).all(|i| {
                f.mul(self.action(i)) == target.action(i).mul(f).scale(fld.sign(self.algebra.degree(i) * k))
            })
    }

    /// Restrict to a graded submodule spanned by homogeneous columns.
    pub fn submodule(&self, basis: &Matrix, degrees: Vec<i64>) -> GradedModule {
        let (m, _) = self.total.submodule(basis);
        GradedModule { algebra: self.algebra.clone(), total: m, degrees }
    }
}

/// A cdg module: a graded module with a degree +1 endomorphism `D` (total matrix).
#[derive(Clone, Debug)]
pub struct CdgModule {
    ring: Arc<CdgRing>,
    sharp: GradedModule,
    diff: Matrix,
}

impl PartialEq for CdgModule {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.sharp == other.sharp && self.diff == other.diff
    }
}

impl CdgModule {
    pub fn new(ring: Arc<CdgRing>, sharp: GradedModule, diff: Matrix) -> Result<Self> {
        let m = CdgModule { ring, sharp, diff };
        let report = m.validate();
        if report.is_empty() {
            Ok(m)
        } else {
            Err(Error::Validation(report.join("; ")))
        }
    }

    pub(crate) fn from_parts(ring: Arc<CdgRing>, sharp: GradedModule, diff: Matrix) -> Self {
        CdgModule { ring, sharp, diff }
    }

    /// List every violated identity; empty means valid.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        let f = self.field();
        let n = self.dim();
        let ring = &self.ring;
        if *self.sharp.algebra != **ring.algebra() {
            out.push("underlying graded module lives over a different algebra".into());
            return out;
        }
        if self.diff.shape() != (n, n) {
            out.push("differential has wrong shape".into());
            return out;
        }
        if !self.sharp.has_degree(&self.sharp, &self.diff, 1) {
            out.push("differential is not of degree +1".into());
        }
        for i in 0..ring.dim() {
            // D ρ(a) = ρ(∂a) + (-1)^{|a|} ρ(a) D
            let a = ring.base().basis(i);
            let lhs = self.diff.mul(self.sharp.action(i));
            let rhs = self
                .sharp
                .total()
                .act(&ring.d(&a))
                .add(&self.sharp.action(i).mul(&self.diff).scale(f.sign(ring.degree(i))));
            report_cells(&mut out, &format!("leibniz e{i}"), &lhs, &rhs, self.sharp.degrees());
        }
        let d2 = self.diff.mul(&self.diff);
        let w = self.sharp.total().act(ring.curvature());
        report_cells(&mut out, "curvature", &d2, &w, self.sharp.degrees());
        out
    }

    pub fn zero(ring: Arc<CdgRing>) -> Self {
        let f = ring.field();
        let sharp = GradedModule::zero(ring.algebra().clone());
        CdgModule { ring, sharp, diff: Matrix::zeros(f, 0, 0) }
    }

    /// The ring as a module over itself, `D = ∂`.
    pub fn regular(ring: Arc<CdgRing>) -> Result<Self> {
        let sharp = GradedModule::free(ring.algebra().clone(), 0);
        let diff = ring.diff().clone();
        Self::new(ring, sharp, diff)
    }

    pub fn ring(&self) -> &Arc<CdgRing> {
        &self.ring
    }

    pub fn sharp(&self) -> &GradedModule {
        &self.sharp
    }

    pub fn into_sharp(self) -> GradedModule {
        self.sharp
    }

    pub fn diff(&self) -> &Matrix {
        &self.diff
    }

    pub fn field(&self) -> Fp {
        self.ring.field()
    }

    pub fn dim(&self) -> usize {
        self.sharp.dim()
    }

    pub fn grading(&self) -> GradingGroup {
        self.ring.grading()
    }

    pub fn degrees(&self) -> &[i64] {
        self.sharp.degrees()
    }

    pub fn indices(&self, d: i64) -> Vec<usize> {
        self.sharp.indices(d)
    }

    pub fn support(&self) -> BTreeSet<i64> {
        self.sharp.support()
    }

    pub fn action(&self, i: usize) -> &Matrix {
        self.sharp.action(i)
    }

    /// Component map `D: X^d → X^{d+1}`.
    pub fn diff_at(&self, d: i64) -> Matrix {
        self.diff.select(&self.indices(d + 1), &self.indices(d))
    }

    /// `ΣⁿX`: `(ΣⁿX)^k = X^{k+n}`, `D ↦ (-1)^n D`, `a ↦ (-1)^{|a|n} a`.
    pub fn suspend(&self, n: i64) -> CdgModule {
        let f = self.field();
        CdgModule { ring: self.ring.clone(), sharp: self.sharp.suspend(n), diff: self.diff.scale(f.sign(n)) }
    }

    pub fn direct_sum(mods: &[&CdgModule]) -> Result<CdgModule> {
        let first = mods.first().ok_or_else(|| Error::InvalidInput("empty direct sum".into()))?;
        if mods.iter().any(|m| !same_ring(&m.ring, &first.ring)) {
            return Err(Error::AlgebraMismatch);
        }
        let sharp = GradedModule::direct_sum(&mods.iter().map(|m| &m.sharp).collect::<Vec<_>>())?;
        let diff = Matrix::block_diag(first.field(), &mods.iter().map(|m| &m.diff).collect::<Vec<_>>());
        Ok(CdgModule { ring: first.ring.clone(), sharp, diff })
    }

    pub fn is_morphism(&self, target: &CdgModule, f: &Matrix) -> bool {
        same_ring(&self.ring, &target.ring)
            && self.sharp.is_graded_hom(&target.sharp, f, 0)
            && f.mul(&self.diff) == target.diff.mul(f)
    }

    /// Restrict to the sub-cdg-module spanned by homogeneous columns of `basis`.
    pub fn submodule(&self, basis: &Matrix, degrees: Vec<i64>) -> CdgModule {
        let sharp = self.sharp.submodule(basis, degrees);
        let diff = if basis.cols() == 0 {
            Matrix::zeros(self.field(), 0, 0)
        } else {
            basis.solve_matrix(&self.diff.mul(basis)).expect("span is not D-stable")
        };
        CdgModule { ring: self.ring.clone(), sharp, diff }
    }

    /// Kernel of a morphism, with homogeneous basis and inclusion.
    pub fn kernel_of(&self, f: &Matrix) -> (CdgModule, Matrix) {
        let fld = self.field();
        let mut cols = Vec::new();
        let mut degrees = Vec::new();
        for d in self.support() {
            let idx = self.indices(d);
            let all: Vec<usize> = (0..f.rows()).collect();
            let block = f.select(&all, &idx);
            for v in block.kernel() {
                let mut full = vec![0; self.dim()];
                for (&i, &x) in idx.iter().zip(&v) {
                    full[i] = x;
                }
                cols.push(full);
                degrees.push(d);
            }
        }
        let basis = Matrix::from_columns(fld, self.dim(), &cols);
        (self.submodule(&basis, degrees), basis)
    }

    /// Quotient by the sub-cdg-module spanned by homogeneous columns of `sub` (with degrees).
    pub fn quotient(&self, sub: &Matrix, sub_degrees: &[i64]) -> (CdgModule, Matrix) {
        let fld = self.field();
        let n = self.dim();
        // complete degreewise so the complement is homogeneous
        let mut comp_cols: Vec<Vec<u64>> = Vec::new();
        let mut comp_deg = Vec::new();
        let mut all_cols: Vec<Vec<u64>> = Vec::new();
        for d in self.support() {
            let mine: Vec<Vec<u64>> =
                (0..sub.cols()).filter(|&c| sub_degrees[c] == d).map(|c| sub.column(c)).collect();
            let mut current = mine.clone();
            all_cols.extend(mine);
            for i in self.indices(d) {
                let mut e = vec![0; n];
                e[i] = 1;
                let mut cand = current.clone();
                cand.push(e.clone());
                if Matrix::from_columns(fld, n, &cand).rank() == cand.len() {
                    current = cand;
                    comp_cols.push(e.clone());
                    comp_deg.push(d);
                }
            }
        }
        let complement = Matrix::from_columns(fld, n, &comp_cols);
        let mut full = all_cols.clone();
        full.extend(comp_cols.iter().cloned());
        let inv = Matrix::from_columns(fld, n, &full).inverse().expect("completed basis");
        let k = all_cols.len();
        let rows: Vec<usize> = (k..n).collect();
        let cols: Vec<usize> = (0..n).collect();
        let proj = inv.select(&rows, &cols);
        let action = (0..self.ring.dim()).map(|i| proj.mul(&self.action(i).mul(&complement))).collect();
        let total = FinModule::new_unchecked(self.ring.base().clone(), comp_cols.len(), action);
        let sharp = GradedModule::from_parts(self.ring.algebra().clone(), total, comp_deg);
        let diff = proj.mul(&self.diff.mul(&complement));
        (CdgModule { ring: self.ring.clone(), sharp, diff }, proj)
    }
}

fn report_cells(out: &mut Vec<String>, label: &str, lhs: &Matrix, rhs: &Matrix, degrees: &[i64]) {
    let mut count = 0;
    for r in 0..lhs.rows() {
        for c in 0..lhs.cols() {
            if lhs.get(r, c) != rhs.get(r, c) {
                if count < 8 {
                    out.push(format!("{label}: cell ({r},{c}) from degree {} to degree {}", degrees[c], degrees[r]));
                }
                count += 1;
            }
        }
    }
    if count > 8 {
        out.push(format!("{label}: {} further cells", count - 8));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FinAlgebra;

    fn koszul() -> Arc<CdgRing> {
        let s = FinAlgebra::truncated_polynomial(Fp::new(3).unwrap(), 4).unwrap();
        let w = s.basis(2);
        Arc::new(CdgRing::koszul(&s, &w).unwrap())
    }

    #[test]
    fn koszul_over_itself_is_valid() {
        let k = koszul();
        let x = CdgModule::regular(k.clone()).unwrap();
        assert!(x.validate().is_empty());
        assert_eq!(x.support().into_iter().collect::<Vec<_>>(), vec![-1, 0]);
        let mut bad = x.diff().clone();
        // negate D on the degree -1 component
        for r in 0..8 {
            for c in 4..8 {
                bad.set(r, c, x.field().neg(bad.get(r, c)));
            }
        }
        let broken = CdgModule::from_parts(k.clone(), x.sharp().clone(), bad);
        let report = broken.validate();
        assert!(report.iter().any(|l| l.starts_with("leibniz") || l.starts_with("curvature")));
        assert!(CdgModule::zero(k).validate().is_empty());
    }

    #[test]
    fn suspension_composes_strictly() {
        let k = koszul();
        let x = CdgModule::regular(k).unwrap();
        for m in -2..=2 {
            for n in -2..=2 {
                assert_eq!(x.suspend(n).suspend(m), x.suspend(m + n));
            }
        }
        let s1 = x.suspend(1);
        assert_eq!(s1.support().into_iter().collect::<Vec<_>>(), vec![-2, -1]);
        assert!(s1.validate().is_empty());
        assert_eq!(s1.diff(), &x.diff().neg());
        // s acts with a sign, S does not
        assert_eq!(s1.action(4), &x.action(4).neg());
        assert_eq!(s1.action(1), x.action(1));
    }

    #[test]
    fn kernel_and_quotient() {
        let k = koszul();
        let x = CdgModule::regular(k).unwrap();
        let f = x.diff().clone();
        // D is not a morphism, but ρ(x) is central of degree 0
        let rx = x.action(1).clone();
        assert!(x.is_morphism(&x, &rx));
        let (ker, incl) = x.kernel_of(&rx);
        assert!(ker.validate().is_empty());
        assert_eq!(ker.dim(), 2);
        let (q, proj) = x.quotient(&incl, ker.degrees());
        assert!(q.validate().is_empty());
        assert_eq!(q.dim(), 6);
        assert!(x.is_morphism(&q, &proj));
        assert!(!x.is_morphism(&x, &f));
    }
}
