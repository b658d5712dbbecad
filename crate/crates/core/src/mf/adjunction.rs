use std::collections::BTreeMap;

use super::duplex::{fold, fold_offsets, iota, sbar, Duplex, FoldMode};
use super::koszul::{is_koszul_morphism, KoszulData, MixedComplex};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

fn range(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// Rows of `φ^{n mod 2}: M → fold(X)` landing in `X^n`.
fn rows_of(x: &MixedComplex, phi: &(Matrix, Matrix), n: i64) -> Matrix {
    let off = fold_offsets(x);
    let p = if n.rem_euclid(2) == 0 { &phi.0 } else { &phi.1 };
    let dim = x.comp_dim(n);
    let start = off.get(&n).copied().unwrap_or(0);
    p.select(&(start..start + dim).collect::<Vec<_>>(), &range(p.cols()))
}

/// Columns of `φ^{n mod 2}: fold(X) → M` leaving `X^n`.
fn cols_of(x: &MixedComplex, phi: &(Matrix, Matrix), n: i64) -> Matrix {
    let off = fold_offsets(x);
    let p = if n.rem_euclid(2) == 0 { &phi.0 } else { &phi.1 };
    let dim = x.comp_dim(n);
    let start = off.get(&n).copied().unwrap_or(0);
    p.select(&range(p.rows()), &(start..start + dim).collect::<Vec<_>>())
}

fn window(x: &MixedComplex) -> (i64, i64) {
    let (a, b) = x.support_range().unwrap_or((0, 0));
    (a - 1, b + 1)
}

/// `sbar ⊣ fold∏`: a duplex morphism `φ: M → fold(X)` ↦ `α: sbar(M) → X`,
/// `α^n = (α_n, s α_{n+1})` with `α_n` the `X^n` component of `φ`.
pub fn prod_to_koszul(m: &Duplex, x: &MixedComplex, phi: &(Matrix, Matrix)) -> Result<BTreeMap<i64, Matrix>> {
    let fx = fold(x, FoldMode::Product)?;
    if !m.is_morphism(&fx, phi) {
        return Err(Error::NotAMorphism("φ is not a duplex morphism M → fold(X)".into()));
    }
    let mut out = BTreeMap::new();
    for n in x.degrees() {
        let a = rows_of(x, phi, n);
        let a1 = x.s(n + 1).mul(&rows_of(x, phi, n + 1));
        out.insert(n, Matrix::hstack(&[&a, &a1]));
    }
    Ok(out)
}

/// Inverse of [`prod_to_koszul`]: keep the first slot of each `α^n`.
pub fn prod_to_duplex(m: &Duplex, x: &MixedComplex, alpha: &BTreeMap<i64, Matrix>) -> Result<(Matrix, Matrix)> {
    let sb = sbar(m)?;
    let fl = x.ring().field();
    let get = |n: i64| {
        alpha
            .get(&n)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(fl, x.comp_dim(n), sb.comp_dim(n)))
    };
    let (lo, hi) = window(x);
    if alpha.keys().any(|&n| x.comp_dim(n) == 0) || !is_koszul_morphism(&sb, x, &get, lo, hi) {
        return Err(Error::NotAMorphism("α is not a morphism sbar(M) → X".into()));
    }
    let mut parts: [Vec<Matrix>; 2] = [Vec::new(), Vec::new()];
    for n in x.degrees() {
        let p = n.rem_euclid(2) as usize;
        let first = m.module(n).dim();
        let a = get(n);
        parts[p].push(a.select(&range(a.rows()), &range(first)));
    }
    let stack = |ps: &[Matrix], cols: usize| {
        if ps.is_empty() {
            Matrix::zeros(fl, 0, cols)
        } else {
            Matrix::vstack(&ps.iter().collect::<Vec<_>>())
        }
    };
    Ok((stack(&parts[0], m.m0.dim()), stack(&parts[1], m.m1.dim())))
}

/// `fold⊕ ⊣ sbar∘Σ`: a duplex morphism `φ: fold(X) → M` ↦ `α: X → sbar(ΣM)`,
/// `α^n = (α_{n-1} s ; α_n)` with `α_n` the `X^n` component of `φ`.
pub fn sum_to_koszul(x: &MixedComplex, m: &Duplex, phi: &(Matrix, Matrix)) -> Result<BTreeMap<i64, Matrix>> {
    let fx = fold(x, FoldMode::Sum)?;
    if !fx.is_morphism(m, phi) {
        return Err(Error::NotAMorphism("φ is not a duplex morphism fold(X) → M".into()));
    }
    let mut out = BTreeMap::new();
    for n in x.degrees() {
        let a = cols_of(x, phi, n);
        let a1 = cols_of(x, phi, n - 1).mul(&x.s(n));
        out.insert(n, Matrix::vstack(&[&a1, &a]));
    }
    Ok(out)
}

/// Inverse of [`sum_to_koszul`]: keep the second slot of each `α^n`.
pub fn sum_to_duplex(x: &MixedComplex, m: &Duplex, alpha: &BTreeMap<i64, Matrix>) -> Result<(Matrix, Matrix)> {
    let sb = sbar(&m.suspend())?;
    let fl = x.ring().field();
    let get = |n: i64| {
        alpha
            .get(&n)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(fl, sb.comp_dim(n), x.comp_dim(n)))
    };
    let (lo, hi) = window(x);
    if alpha.keys().any(|&n| x.comp_dim(n) == 0) || !is_koszul_morphism(x, &sb, &get, lo, hi) {
        return Err(Error::NotAMorphism("α is not a morphism X → sbar(ΣM)".into()));
    }
    let mut parts: [Vec<Matrix>; 2] = [Vec::new(), Vec::new()];
    for n in x.degrees() {
        let p = n.rem_euclid(2) as usize;
        let skip = m.module(n + 1).dim();
        let a = get(n);
        parts[p].push(a.select(&(skip..a.rows()).collect::<Vec<_>>(), &range(a.cols())));
    }
    let stack = |ps: &[Matrix], rows: usize| {
        if ps.is_empty() {
            Matrix::zeros(fl, rows, 0)
        } else {
            Matrix::hstack(&ps.iter().collect::<Vec<_>>())
        }
    };
    Ok((stack(&parts[0], m.m0.dim()), stack(&parts[1], m.m1.dim())))
}

/// `ε_X: sbar(fold X) → X`, the transpose of the identity of `fold X`.
pub fn counit(x: &MixedComplex) -> Result<BTreeMap<i64, Matrix>> {
    let fx = fold(x, FoldMode::Product)?;
    let id = (Matrix::identity(x.ring().field(), fx.m0.dim()), Matrix::identity(x.ring().field(), fx.m1.dim()));
    prod_to_koszul(&fx, x, &id)
}

/// `η: i(M) → sbar(ΣM)`, the transpose of the identity of `M = fold(i(M))`.
pub fn unit(m: &Duplex) -> Result<BTreeMap<i64, Matrix>> {
    let x = iota(m);
    let fl = m.ring().field();
    let id = (Matrix::identity(fl, m.m0.dim()), Matrix::identity(fl, m.m1.dim()));
    sum_to_koszul(&x, m, &id)
}
