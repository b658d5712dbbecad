use std::sync::Arc;

use crate::algebra::FinAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Fp, Matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GradingGroup {
    Z,
    Z2,
}

impl GradingGroup {
    /// Canonical representative (`0`/`1` for ℤ/2).
    #[inline]
    pub fn norm(&self, d: i64) -> i64 {
        match self {
            GradingGroup::Z => d,
            GradingGroup::Z2 => d.rem_euclid(2),
        }
    }

    #[inline]
    pub fn parity(&self, d: i64) -> i64 {
        d.rem_euclid(2)
    }

    pub fn one(&self) -> i64 {
        1
    }
}

/// An algebra with a homogeneous basis; `degrees[i]` is the degree of `e_i`.
#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    grading: GradingGroup,
    base: Arc<FinAlgebra>,
    degrees: Vec<i64>,
}

impl PartialEq for GradedAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.grading == other.grading && self.degrees == other.degrees && *self.base == *other.base
    }
}

impl GradedAlgebra {
    pub fn new(grading: GradingGroup, base: Arc<FinAlgebra>, degrees: Vec<i64>) -> Result<Self> {
        if degrees.len() != base.dim() {
            return Err(Error::InvalidInput("one degree per basis element required".into()));
        }
        let degrees: Vec<i64> = degrees.into_iter().map(|d| grading.norm(d)).collect();
        let n = base.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if base.coeff(i, j, k) != 0 && degrees[k] != grading.norm(degrees[i] + degrees[j]) {
                        return Err(Error::Validation(format!("e{i} e{j} has a component outside degree |e{i}|+|e{j}|")));
                    }
                }
            }
        }
        if base.unit().iter().zip(&degrees).any(|(&c, &d)| c != 0 && d != 0) {
            return Err(Error::Validation("unit is not in degree 0".into()));
        }
        Ok(GradedAlgebra { grading, base, degrees })
    }

    pub fn grading(&self) -> GradingGroup {
        self.grading
    }

    pub fn base(&self) -> &Arc<FinAlgebra> {
        &self.base
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.degrees[i]
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn field(&self) -> Fp {
        self.base.field()
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    /// Degree of a nonzero homogeneous element.
    pub fn degree_of(&self, a: &[u64]) -> Option<i64> {
        let mut d = None;
        for (i, &c) in a.iter().enumerate() {
            if c != 0 {
                match d {
                    None => d = Some(self.degrees[i]),
                    Some(e) if e != self.degrees[i] => return None,
                    _ => {}
                }
            }
        }
        d
    }
}

/// A curved dg ring: graded algebra, degree +1 derivation `∂` (column `i` is `∂e_i`) and curvature `w`.
#[derive(Clone, Debug)]
pub struct CdgRing {
    algebra: Arc<GradedAlgebra>,
    diff: Matrix,
    curvature: Vec<u64>,
    name: String,
}

impl PartialEq for CdgRing {
    fn eq(&self, other: &Self) -> bool {
        *self.algebra == *other.algebra && self.diff == other.diff && self.curvature == other.curvature
    }
}

impl CdgRing {
    pub fn new(algebra: Arc<GradedAlgebra>, diff: Matrix, curvature: Vec<u64>) -> Result<Self> {
        let ring = CdgRing { algebra, diff, curvature, name: String::new() };
        ring.validate()?;
        Ok(ring)
    }

    fn validate(&self) -> Result<()> {
        let g = &self.algebra;
        let a = g.base();
        let f = a.field();
        let n = a.dim();
        let gr = g.grading();
        if self.diff.shape() != (n, n) || self.curvature.len() != n {
            return Err(Error::InvalidInput("differential or curvature has wrong shape".into()));
        }
        for i in 0..n {
            for k in 0..n {
                if self.diff.get(k, i) != 0 && g.degree(k) != gr.norm(g.degree(i) + 1) {
                    return Err(Error::Validation(format!("∂e{i} is not of degree |e{i}|+1")));
                }
            }
        }
        if let Some(d) = g.degree_of(&self.curvature) {
            if d != gr.norm(2) {
                return Err(Error::Validation("curvature is not of degree 2".into()));
            }
        } else if self.curvature.iter().any(|&c| c != 0) {
            return Err(Error::Validation("curvature is not homogeneous".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = self.d(&a.mul(&a.basis(i), &a.basis(j)));
                let t1 = a.mul(&self.d(&a.basis(i)), &a.basis(j));
                let t2 = a.mul(&a.basis(i), &self.d(&a.basis(j)));
                let sgn = f.sign(g.degree(i));
                let rhs: Vec<u64> = t1.iter().zip(&t2).map(|(&x, &y)| f.add(x, f.mul(sgn, y))).collect();
                if lhs != rhs {
                    return Err(Error::Validation(format!("Leibniz rule fails on (e{i}, e{j})")));
                }
            }
        }
        if self.d(&self.curvature).iter().any(|&c| c != 0) {
            return Err(Error::Validation("∂(w) ≠ 0".into()));
        }
        for i in 0..n {
            let x = a.basis(i);
            let dd = self.d(&self.d(&x));
            let wx = a.mul(&self.curvature, &x);
            let xw = a.mul(&x, &self.curvature);
            let comm: Vec<u64> = wx.iter().zip(&xw).map(|(&p, &q)| f.sub(p, q)).collect();
            if dd != comm {
                return Err(Error::Validation(format!("∂²(e{i}) ≠ [w, e{i}]")));
            }
        }
        Ok(())
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// `R` concentrated in degree 0 with `∂ = 0`, `w = 0`.
    pub fn ring_as_dg(r: Arc<FinAlgebra>) -> Result<Self> {
        let n = r.dim();
        let f = r.field();
        let name = format!("dg({})", r.name());
        let g = GradedAlgebra::new(GradingGroup::Z, r, vec![0; n])?;
        Ok(Self::new(Arc::new(g), Matrix::zeros(f, n, n), vec![0; n])?.named(name))
    }

    /// The Koszul algebra `S[s]/(s²)`, `|s| = -1`, `∂s = w`.
    ///
    /// Basis: `b_0..b_{n-1}` (a basis of `S`, degree 0) followed by `b_0 s..b_{n-1} s` (degree -1).
    pub fn koszul(s: &FinAlgebra, w: &[u64]) -> Result<Self> {
        check_central(s, w)?;
        let n = s.dim();
        let f = s.field();
        let mut mult = vec![vec![vec![0i64; 2 * n]; 2 * n]; 2 * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = f.to_i64(s.coeff(i, j, k));
                    mult[i][j][k] = c;
                    mult[i][n + j][n + k] = c;
                    mult[n + i][j][n + k] = c;
                }
            }
        }
        let mut unit: Vec<i64> = s.unit().iter().map(|&x| f.to_i64(x)).collect();
        unit.extend(std::iter::repeat_n(0, n));
        let base = FinAlgebra::new(f, 2 * n, mult, unit)?.named(format!("K({})", s.name()));
        let mut degrees = vec![0; n];
        degrees.extend(std::iter::repeat_n(-1, n));
        let g = GradedAlgebra::new(GradingGroup::Z, Arc::new(base), degrees)?;
        // ∂(b_i s) = b_i w
        let mut diff = Matrix::zeros(f, 2 * n, 2 * n);
        for i in 0..n {
            let bw = s.mul(&s.basis(i), w);
            for (k, &c) in bw.iter().enumerate() {
                diff.set(k, n + i, c);
            }
        }
        Ok(Self::new(Arc::new(g), diff, vec![0; 2 * n])?.named(format!("K({}, w)", s.name())))
    }

    /// `S_w`: ℤ/2-graded, `S` in degree 0, zero differential, curvature `w`.
    pub fn curved_two_periodic(s: Arc<FinAlgebra>, w: &[u64]) -> Result<Self> {
        check_central(&s, w)?;
        let n = s.dim();
        let f = s.field();
        let name = format!("{}_w", s.name());
        let g = GradedAlgebra::new(GradingGroup::Z2, s, vec![0; n])?;
        Ok(Self::new(Arc::new(g), Matrix::zeros(f, n, n), w.to_vec())?.named(name))
    }

    pub fn algebra(&self) -> &Arc<GradedAlgebra> {
        &self.algebra
    }

    pub fn base(&self) -> &Arc<FinAlgebra> {
        self.algebra.base()
    }

    pub fn grading(&self) -> GradingGroup {
        self.algebra.grading()
    }

    pub fn field(&self) -> Fp {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.algebra.degree(i)
    }

    pub fn diff(&self) -> &Matrix {
        &self.diff
    }

    pub fn curvature(&self) -> &[u64] {
        &self.curvature
    }

    /// `∂` applied to an element.
    pub fn d(&self, a: &[u64]) -> Vec<u64> {
        self.diff.mul_vec(a)
    }
}

fn check_central(s: &FinAlgebra, w: &[u64]) -> Result<()> {
    if w.len() != s.dim() {
        return Err(Error::InvalidInput("curvature has wrong length".into()));
    }
    if !s.is_central(w) {
        return Err(Error::Validation("w is not central".into()));
    }
    Ok(())
}

pub(crate) fn same_ring(a: &Arc<CdgRing>, b: &Arc<CdgRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s4() -> FinAlgebra {
        FinAlgebra::truncated_polynomial(Fp::new(3).unwrap(), 4).unwrap()
    }

    #[test]
    fn koszul_shape() {
        let s = s4();
        let w = s.basis(2);
        let k = CdgRing::koszul(&s, &w).unwrap();
        assert_eq!(k.dim(), 8);
        assert_eq!(k.grading(), GradingGroup::Z);
        assert_eq!(k.d(&k.base().basis(4)), {
            let mut v = vec![0; 8];
            v[2] = 1;
            v
        });
        assert!(k.base().is_local());
    }

    #[test]
    fn curved_two_periodic_shape() {
        let s = Arc::new(s4());
        let w = s.basis(2);
        let r = CdgRing::curved_two_periodic(s, &w).unwrap();
        assert_eq!(r.grading(), GradingGroup::Z2);
        assert_eq!(r.curvature(), &w[..]);
    }

    #[test]
    fn rejects_bad_derivation() {
        let s = s4();
        let w = s.basis(2);
        let k = CdgRing::koszul(&s, &w).unwrap();
        let mut bad = k.diff().clone();
        bad.set(1, 4, 1);
        assert!(CdgRing::new(k.algebra().clone(), bad, vec![0; 8]).is_err());
    }
}
