//! Seeded generators of valid duplexes, mixed complexes and morphisms over a commutative base.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::Rng;

use super::duplex::{iota, Duplex};
use super::koszul::{induce_koszul, KoszulData, KoszulRing, MixedComplex, SComplex};
use crate::algebra::FinAlgebra;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::module::FinModule;

pub fn random_element(s: &FinAlgebra, rng: &mut impl Rng) -> Vec<u64> {
    let p = s.field().p();
    (0..s.dim()).map(|_| rng.gen_range(0..p)).collect()
}

/// A random S-linear map `S^cols → S^rows` (S commutative).
pub fn random_free_map(s: &FinAlgebra, rows: usize, cols: usize, rng: &mut impl Rng) -> Matrix {
    let n = s.dim();
    let mut m = Matrix::zeros(s.field(), rows * n, cols * n);
    for i in 0..rows {
        for j in 0..cols {
            m.set_block(i * n, j * n, &s.left_matrix(&random_element(s, rng)));
        }
    }
    m
}

/// A random S-linear automorphism of `S^rank`.
pub fn random_automorphism(s: &FinAlgebra, rank: usize, rng: &mut impl Rng) -> Matrix {
    loop {
        let m = random_free_map(s, rank, rank, rng);
        if m.is_invertible() {
            return m;
        }
    }
}

/// A random linear combination of `basis`.
pub fn random_combination(basis: &[Matrix], rows: usize, cols: usize, f: crate::linalg::Fp, rng: &mut impl Rng) -> Matrix {
    let mut m = Matrix::zeros(f, rows, cols);
    for b in basis {
        m.add_scaled(b, rng.gen_range(0..f.p()));
    }
    m
}

/// Pairs `(u, v)` of basis elements of `S` with `uv = w`.
pub fn factorizations(ring: &KoszulRing) -> Vec<(Vec<u64>, Vec<u64>)> {
    let s = ring.base();
    let mut out = Vec::new();
    for i in 0..s.dim() {
        let u = s.basis(i);
        if let Some(v) = s.left_matrix(&u).solve(ring.w()) {
            out.push((u, v));
        }
    }
    out
}

/// `f = P diag(u_i) Q`, `g = Q⁻¹ diag(v_i) P⁻¹` on free modules of rank `1..=max_rank`.
pub fn random_duplex(ring: &Arc<KoszulRing>, max_rank: usize, rng: &mut impl Rng) -> Result<Duplex> {
    let s = ring.base();
    let pairs = factorizations(ring);
    if pairs.is_empty() {
        return Err(Error::InvalidInput("w has no factorization into basis elements".into()));
    }
    let r = rng.gen_range(1..=max_rank.max(1));
    let fl = s.field();
    let chosen: Vec<&(Vec<u64>, Vec<u64>)> = (0..r).map(|_| &pairs[rng.gen_range(0..pairs.len())]).collect();
    let du = Matrix::block_diag(fl, &chosen.iter().map(|(u, _)| s.left_matrix(u)).collect::<Vec<_>>().iter().collect::<Vec<_>>());
    let dv = Matrix::block_diag(fl, &chosen.iter().map(|(_, v)| s.left_matrix(v)).collect::<Vec<_>>().iter().collect::<Vec<_>>());
    let p = random_automorphism(s, r, rng);
    let q = random_automorphism(s, r, rng);
    let (pi, qi) = (p.inverse().expect("automorphism"), q.inverse().expect("automorphism"));
    let free = FinModule::free(s.clone(), r);
    Duplex::new(ring.clone(), free.clone(), free, p.mul(&du).mul(&q), qi.mul(&dv).mul(&pi))
}

/// A random two-term complex of free S-modules in degrees `0, 1`.
pub fn random_two_term(s: &Arc<FinAlgebra>, max_rank: usize, rng: &mut impl Rng) -> Result<SComplex> {
    let (r0, r1) = (rng.gen_range(1..=max_rank.max(1)), rng.gen_range(1..=max_rank.max(1)));
    let d = random_free_map(s, r1, r0, rng);
    let comps = BTreeMap::from([(0, FinModule::free(s.clone(), r0)), (1, FinModule::free(s.clone(), r1))]);
    SComplex::new(s.clone(), comps, BTreeMap::from([(0, d)]))
}

/// A direct sum of shifted blocks (`K` itself, `i(M)` for random duplexes, induced complexes)
/// transported along random degreewise automorphisms.
pub fn random_mixed(ring: &Arc<KoszulRing>, rng: &mut impl Rng) -> Result<MixedComplex> {
    let s = ring.base();
    let count = rng.gen_range(1..=3);
    let mut blocks = Vec::new();
    for _ in 0..count {
        let shift = rng.gen_range(-2..=2);
        let b = match rng.gen_range(0..3) {
            0 => MixedComplex::koszul_regular(ring.clone()),
            1 => iota(&random_duplex(ring, 2, rng)?),
            _ => induce_koszul(ring, &random_two_term(s, 2, rng)?, 0)?,
        };
        blocks.push(b.suspend(shift));
    }
    let sum = MixedComplex::direct_sum(&blocks.iter().collect::<Vec<_>>())?;
    let mut u = BTreeMap::new();
    for n in sum.degrees() {
        let rank = sum.comp_dim(n) / s.dim();
        u.insert(n, random_automorphism(s, rank, rng));
    }
    let x = sum.conjugate(&u)?;
    let report = x.check();
    if report.is_empty() {
        Ok(x)
    } else {
        Err(Error::Validation(report.join("; ")))
    }
}
