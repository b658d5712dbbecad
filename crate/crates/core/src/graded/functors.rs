use std::sync::Arc;

use super::hom::{cdg_morphisms, homotopy_classes};
use super::module::{CdgModule, GradedModule};
use super::ring::CdgRing;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::module::{quotient_indices, FinModule};

/// `G⁺(Z) = Z ⊕ ΩZ` with the twisted action and `D(x + ∂y) = wy + ∂x`.
///
/// Basis: the basis of `Z` (the `x` block) followed by a second copy (the `∂y` block, degree +1).
pub fn g_plus(ring: &Arc<CdgRing>, z: &GradedModule) -> Result<CdgModule> {
    if **z.algebra() != **ring.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    let f = ring.field();
    let n = z.dim();
    let gr = ring.grading();
    let mut degrees = z.degrees().to_vec();
    degrees.extend(z.degrees().iter().map(|&d| gr.norm(d + 1)));
    let zt = z.total();
    let action = (0..ring.dim())
        .map(|i| {
            let sgn = f.sign(ring.degree(i));
            let a = z.action(i);
            let da = zt.act(&ring.d(&ring.base().basis(i)));
            let mut m = Matrix::zeros(f, 2 * n, 2 * n);
            m.set_block(0, 0, a);
            m.set_block(0, n, &da.scale(f.neg(sgn)));
            m.set_block(n, n, &a.scale(sgn));
            m
        })
        .collect();
    let mut diff = Matrix::zeros(f, 2 * n, 2 * n);
    diff.set_block(0, n, &zt.act(ring.curvature()));
    diff.set_block(n, 0, &Matrix::identity(f, n));
    let total = FinModule::new_unchecked(ring.base().clone(), 2 * n, action);
    let sharp = GradedModule::from_parts(ring.algebra().clone(), total, degrees);
    Ok(CdgModule::from_parts(ring.clone(), sharp, diff))
}

/// `G⁻ = Σ ∘ G⁺`.
pub fn g_minus(ring: &Arc<CdgRing>, z: &GradedModule) -> Result<CdgModule> {
    Ok(g_plus(ring, z)?.suspend(1))
}

/// `G^±` on a graded map `ψ: Z → Z'` (the same block-diagonal matrix for both).
pub fn g_map(psi: &Matrix) -> Matrix {
    Matrix::block_diag(psi.field(), &[psi, psi])
}

/// `ψ: Z → X♯` ↦ `φ = [ψ, D_X ψ]: G⁺(Z) → X`.
pub fn gplus_to_cdg(z: &GradedModule, x: &CdgModule, psi: &Matrix) -> Result<Matrix> {
    if !z.is_graded_hom(x.sharp(), psi, 0) {
        return Err(Error::NotAMorphism("ψ is not a degree-0 graded map Z → X♯".into()));
    }
    Ok(Matrix::hstack(&[psi, &x.diff().mul(psi)]))
}

/// `φ: G⁺(Z) → X` ↦ its restriction to the `x` block.
pub fn gplus_to_graded(ring: &Arc<CdgRing>, z: &GradedModule, x: &CdgModule, phi: &Matrix) -> Result<Matrix> {
    let g = g_plus(ring, z)?;
    if !g.is_morphism(x, phi) {
        return Err(Error::NotAMorphism("φ is not a cdg morphism G⁺(Z) → X".into()));
    }
    let rows: Vec<usize> = (0..x.dim()).collect();
    let cols: Vec<usize> = (0..z.dim()).collect();
    Ok(phi.select(&rows, &cols))
}

/// `ψ: X♯ → Z` ↦ `φ = (-ψ D_X ; ψ): X → G⁻(Z)`.
pub fn gminus_to_cdg(x: &CdgModule, z: &GradedModule, psi: &Matrix) -> Result<Matrix> {
    if !x.sharp().is_graded_hom(z, psi, 0) {
        return Err(Error::NotAMorphism("ψ is not a degree-0 graded map X♯ → Z".into()));
    }
    Ok(Matrix::vstack(&[&psi.mul(x.diff()).neg(), psi]))
}

/// `φ: X → G⁻(Z)` ↦ its component in the `∂y` block.
pub fn gminus_to_graded(ring: &Arc<CdgRing>, x: &CdgModule, z: &GradedModule, phi: &Matrix) -> Result<Matrix> {
    let g = g_minus(ring, z)?;
    if !x.is_morphism(&g, phi) {
        return Err(Error::NotAMorphism("φ is not a cdg morphism X → G⁻(Z)".into()));
    }
    let n = z.dim();
    let rows: Vec<usize> = (n..2 * n).collect();
    let cols: Vec<usize> = (0..x.dim()).collect();
    Ok(phi.select(&rows, &cols))
}

/// Unit `Z → G⁺(Z)♯` and counit `G⁺(X♯) → X` of `G⁺ ⊣ (−)♯`.
pub fn gplus_unit(z: &GradedModule) -> Matrix {
    let f = z.field();
    let n = z.dim();
    Matrix::vstack(&[&Matrix::identity(f, n), &Matrix::zeros(f, n, n)])
}

pub fn gplus_counit(x: &CdgModule) -> Matrix {
    Matrix::hstack(&[&Matrix::identity(x.field(), x.dim()), x.diff()])
}

/// Unit `X → G⁻(X♯)` and counit `G⁻(Z)♯ → Z` of `(−)♯ ⊣ G⁻`.
pub fn gminus_unit(x: &CdgModule) -> Matrix {
    Matrix::vstack(&[&x.diff().neg(), &Matrix::identity(x.field(), x.dim())])
}

pub fn gminus_counit(z: &GradedModule) -> Matrix {
    let f = z.field();
    let n = z.dim();
    Matrix::hstack(&[&Matrix::zeros(f, n, n), &Matrix::identity(f, n)])
}

/// `cone(f) = B ⊕ ΣA` with `D = [[D_B, f], [0, -D_A]]`.
pub fn cone(a: &CdgModule, b: &CdgModule, f: &Matrix) -> Result<CdgModule> {
    if !a.is_morphism(b, f) {
        return Err(Error::NotAMorphism("cone needs a cdg morphism".into()));
    }
    let sa = a.suspend(1);
    let mut m = CdgModule::direct_sum(&[b, &sa])?;
    let mut diff = m.diff().clone();
    diff.set_block(0, b.dim(), f);
    m = CdgModule::from_parts(m.ring().clone(), m.sharp().clone(), diff);
    Ok(m)
}

/// `cone(id_{ΩX})` with the canonical epimorphism onto `X`.
pub fn cone_id(x: &CdgModule) -> Result<(CdgModule, Matrix)> {
    let omega = x.suspend(-1);
    let id = Matrix::identity(x.field(), x.dim());
    let c = cone(&omega, &omega, &id)?;
    let epi = Matrix::hstack(&[&Matrix::zeros(x.field(), x.dim(), x.dim()), &id]);
    Ok((c, epi))
}

/// `Ext¹` in the category of cdg modules computed two ways, for `X` with `X♯` projective:
/// from the presentation `0 → K → G⁺(X♯) → X → 0`, and as `[ΩX, Y]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CdgExtCheck {
    pub via_presentation: usize,
    pub via_homotopy: usize,
}

pub fn cdg_ext1_check(ring: &Arc<CdgRing>, x: &CdgModule, y: &CdgModule) -> Result<CdgExtCheck> {
    if !x.sharp().total().is_projective()? {
        return Err(Error::InvalidInput("X♯ must be projective".into()));
    }
    let g = g_plus(ring, x.sharp())?;
    let eps = gplus_counit(x);
    let (k, incl) = g.kernel_of(&eps);
    let hom_k = cdg_morphisms(&k, y)?;
    let hom_g = cdg_morphisms(&g, y)?;
    let restricted: Vec<Vec<u64>> = hom_g.iter().map(|h| h.mul(&incl).data().to_vec()).collect();
    let flat: Vec<Vec<u64>> = hom_k.iter().map(|h| h.data().to_vec()).collect();
    let via_presentation = quotient_indices(ring.field(), y.dim() * k.dim(), &restricted, &flat).len();
    let (via_homotopy, _) = homotopy_classes(&x.suspend(-1), y, 0)?;
    Ok(CdgExtCheck { via_presentation, via_homotopy })
}
