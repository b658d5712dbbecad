use std::collections::BTreeMap;

use super::module::{CdgModule, GradedModule};
use super::ring::GradingGroup;
use crate::error::{Error, Result};
use crate::linalg::{Coordinates, Fp, LinearSystem, Matrix, Term};
use crate::module::quotient_indices;

/// Basis of degree-`k` graded homomorphisms `X → Y`, as total `dim Y × dim X` matrices.
pub fn graded_hom_space(x: &GradedModule, y: &GradedModule, k: i64) -> Result<Vec<Matrix>> {
    if **x.algebra() != **y.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    let f = x.field();
    let alg = x.algebra().clone();
    let gr = x.grading();
    let mut sys = LinearSystem::new(f);
    let src_degrees: Vec<i64> = x.support().into_iter().collect();
    let mut blocks = BTreeMap::new();
    for &d in &src_degrees {
        let (rows, cols) = (y.component_dim(d + k), x.component_dim(d));
        if rows > 0 && cols > 0 {
            blocks.insert(d, sys.add_block(rows, cols));
        }
    }
    if blocks.is_empty() {
        return Ok(Vec::new());
    }
    // f ρ_X(a) = (-1)^{|a|k} ρ_Y(a) f on generators, checked block by block
    let mut owned: Vec<(usize, usize, Vec<(u64, Option<Matrix>, usize, Option<Matrix>)>)> = Vec::new();
    for &g in alg.base().generators() {
        let da = alg.degree(g);
        let sign = f.neg(f.sign(da * k));
        for &d in &src_degrees {
            let out_deg = gr.norm(d + da + k);
            let rows = y.indices(out_deg);
            let cols = x.indices(d);
            if rows.is_empty() {
                continue;
            }
            let mut terms = Vec::new();
            // f_{d+|a|} ρ_X(a)|_{X^d}
            let mid = gr.norm(d + da);
            if blocks.contains_key(&mid) {
                let r = x.action(g).select(&x.indices(mid), &cols);
                if !r.is_zero() {
                    terms.push((1, None, index_of(&blocks, mid), Some(r)));
                }
            }
            // ρ_Y(a)|_{Y^{d+k}} f_d
            if blocks.contains_key(&d) {
                let l = y.action(g).select(&rows, &y.indices(d + k));
                if !l.is_zero() {
                    terms.push((sign, Some(l), index_of(&blocks, d), None));
                }
            }
            if !terms.is_empty() {
                owned.push((rows.len(), cols.len(), terms));
            }
        }
    }
    let ids: Vec<_> = blocks.values().copied().collect();
    for (rows, cols, terms) in &owned {
        let ts: Vec<Term> = terms
            .iter()
            .map(|(c, l, b, r)| Term::new(*c, l.as_ref(), ids[*b], r.as_ref()))
            .collect();
        sys.add_equation(*rows, *cols, &ts, None);
    }
    let keys: Vec<i64> = blocks.keys().copied().collect();
    Ok(sys
        .kernel()
        .into_iter()
        .map(|sol| {
            let mut m = Matrix::zeros(f, y.dim(), x.dim());
            for (d, blk) in keys.iter().zip(&sol) {
                m.set_indexed(&y.indices(d + k), &x.indices(*d), blk);
            }
            m
        })
        .collect())
}

fn index_of(blocks: &BTreeMap<i64, crate::linalg::BlockId>, d: i64) -> usize {
    blocks.keys().position(|&k| k == d).expect("block exists")
}

/// A finite complex of vector spaces whose elements are matrices.
#[derive(Clone, Debug)]
pub struct HomComplex {
    pub grading: GradingGroup,
    pub field: Fp,
    pub shape: (usize, usize),
    /// Basis of each nonzero component.
    pub bases: BTreeMap<i64, Vec<Matrix>>,
    /// Differential `k → k+1` in the bases above (`dim_{k+1} × dim_k`).
    pub diffs: BTreeMap<i64, Matrix>,
}

impl HomComplex {
    pub fn dim(&self, k: i64) -> usize {
        self.bases.get(&self.grading.norm(k)).map_or(0, |b| b.len())
    }

    fn diff(&self, k: i64) -> Matrix {
        let k = self.grading.norm(k);
        self.diffs
            .get(&k)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(self.field, self.dim(k + 1), self.dim(k)))
    }

    /// Check `d∘d = 0` on every component.
    pub fn d_squared_zero(&self) -> bool {
        self.bases.keys().all(|&k| self.diff(k + 1).mul(&self.diff(k)).is_zero())
    }

    /// Cycles of degree `k` as total matrices.
    pub fn cycles(&self, k: i64) -> Vec<Matrix> {
        let basis = match self.bases.get(&self.grading.norm(k)) {
            Some(b) => b,
            None => return Vec::new(),
        };
        self.diff(k).kernel().iter().map(|v| combine(self.field, self.shape, basis, v)).collect()
    }

    pub fn boundaries(&self, k: i64) -> Vec<Matrix> {
        let prev = self.grading.norm(k - 1);
        let basis = match self.bases.get(&self.grading.norm(k)) {
            Some(b) => b,
            None => return Vec::new(),
        };
        let dm = self.diff(prev);
        let cs = dm.column_space();
        (0..cs.cols()).map(|c| combine(self.field, self.shape, basis, &cs.column(c))).collect()
    }

    /// `H^k` with cycle representatives of a basis.
    pub fn cohomology(&self, k: i64) -> (usize, Vec<Matrix>) {
        let z = self.cycles(k);
        let b = self.boundaries(k);
        let flat = |ms: &[Matrix]| ms.iter().map(|m| m.data().to_vec()).collect::<Vec<_>>();
        let len = self.shape.0 * self.shape.1;
        let reps = quotient_indices(self.field, len, &flat(&b), &flat(&z));
        (reps.len(), reps.into_iter().map(|i| z[i].clone()).collect())
    }
}

fn combine(f: Fp, shape: (usize, usize), basis: &[Matrix], coeffs: &[u64]) -> Matrix {
    let mut m = Matrix::zeros(f, shape.0, shape.1);
    for (b, &c) in basis.iter().zip(coeffs) {
        if c != 0 {
            m.add_scaled(b, c);
        }
    }
    m
}

/// Degrees `k` for which `Hom^k(X, Y)` can be nonzero.
fn hom_degrees(x: &GradedModule, y: &GradedModule) -> Vec<i64> {
    match x.grading() {
        GradingGroup::Z2 => vec![0, 1],
        GradingGroup::Z => {
            let (sx, sy) = (x.support(), y.support());
            match (sx.first(), sx.last(), sy.first(), sy.last()) {
                (Some(&xl), Some(&xh), Some(&yl), Some(&yh)) => (yl - xh..=yh - xl).collect(),
                _ => vec![],
            }
        }
    }
}

/// `d(f) = D_Y f - (-1)^k f D_X` on a degree-`k` map.
pub fn hom_differential(x: &CdgModule, y: &CdgModule, f: &Matrix, k: i64) -> Matrix {
    let fld = x.field();
    y.diff().mul(f).sub(&f.mul(x.diff()).scale(fld.sign(k)))
}

/// The complex `Hom_{A♯}(X♯, Σ^k Y♯)` with the dg differential.
pub fn dg_hom(x: &CdgModule, y: &CdgModule) -> Result<HomComplex> {
    if !super::ring::same_ring(x.ring(), y.ring()) {
        return Err(Error::AlgebraMismatch);
    }
    let f = x.field();
    let shape = (y.dim(), x.dim());
    let mut bases = BTreeMap::new();
    for k in hom_degrees(x.sharp(), y.sharp()) {
        let b = graded_hom_space(x.sharp(), y.sharp(), k)?;
        if !b.is_empty() {
            bases.insert(k, b);
        }
    }
    let gr = x.grading();
    let mut diffs = BTreeMap::new();
    for (&k, basis) in &bases {
        let next = gr.norm(k + 1);
        let cols: Vec<Vec<u64>> = match bases.get(&next) {
            Some(nb) => {
                let coords = Coordinates::new(f, shape, nb);
                basis
                    .iter()
                    .map(|b| coords.of(&hom_differential(x, y, b, k)).expect("d(f) is a graded map of degree k+1"))
                    .collect()
            }
            None => {
                for b in basis {
                    assert!(hom_differential(x, y, b, k).is_zero(), "d(f) must vanish when Hom^(k+1) = 0");
                }
                continue;
            }
        };
        diffs.insert(k, Matrix::from_columns(f, bases[&next].len(), &cols));
    }
    Ok(HomComplex { grading: gr, field: f, shape, bases, diffs })
}

/// `[X, Σ^k Y] = H^k Hom(X, Y)`.
pub fn homotopy_classes(x: &CdgModule, y: &CdgModule, k: i64) -> Result<(usize, Vec<Matrix>)> {
    Ok(dg_hom(x, y)?.cohomology(k))
}

/// Closed degree-0 maps, i.e. cdg morphisms `X → Y`.
pub fn cdg_morphisms(x: &CdgModule, y: &CdgModule) -> Result<Vec<Matrix>> {
    Ok(dg_hom(x, y)?.cycles(0))
}

/// Solve `D h + h D = id` for an `A♯`-linear `h` of degree -1.
pub fn contracting_homotopy(x: &CdgModule) -> Result<Option<Matrix>> {
    let f = x.field();
    let n = x.dim();
    if n == 0 {
        return Ok(Some(Matrix::zeros(f, 0, 0)));
    }
    let basis = graded_hom_space(x.sharp(), x.sharp(), -1)?;
    let images: Vec<Vec<u64>> = basis.iter().map(|h| hom_differential(x, x, h, -1).data().to_vec()).collect();
    if images.is_empty() {
        return Ok(None);
    }
    let m = Matrix::from_columns(f, n * n, &images);
    let id = Matrix::identity(f, n);
    Ok(m.solve(id.data()).map(|c| combine(f, (n, n), &basis, &c)))
}

pub fn is_contractible(x: &CdgModule) -> Result<bool> {
    Ok(contracting_homotopy(x)?.is_some())
}

/// `X♯` projective and `X` contractible.
pub fn is_cdg_projective(x: &CdgModule) -> Result<bool> {
    Ok(x.sharp().total().is_projective()? && is_contractible(x)?)
}

pub fn is_cdg_injective(x: &CdgModule) -> Result<bool> {
    Ok(x.sharp().total().is_injective()? && is_contractible(x)?)
}

/// Cohomology dimensions of an honest complex (`D² = 0`) in each degree of `degrees`.
pub fn cohomology_dims(x: &CdgModule, degrees: impl IntoIterator<Item = i64>) -> Result<BTreeMap<i64, usize>> {
    if !x.diff().mul(x.diff()).is_zero() {
        return Err(Error::Validation("D² ≠ 0, cohomology undefined".into()));
    }
    let mut out = BTreeMap::new();
    for d in degrees {
        let outgoing = x.diff_at(d);
        let incoming = x.diff_at(d - 1);
        let dim = x.indices(d).len();
        out.insert(d, dim - outgoing.rank() - incoming.rank());
    }
    Ok(out)
}
