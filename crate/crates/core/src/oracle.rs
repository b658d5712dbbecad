//! Brute-force counterparts of the linear-algebra answers, by exhaustive enumeration of matrices.
//! Only usable for tiny instances (at most `LIMIT` candidate matrices).

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::linalg::{Fp, Matrix};
use crate::module::FinModule;

pub const LIMIT: u64 = 1 << 20;

/// Every `rows × cols` matrix over `f`.
pub fn all_matrices(f: Fp, rows: usize, cols: usize) -> Result<impl Iterator<Item = Matrix>> {
    let n = rows * cols;
    let p = f.p();
    let count = p.checked_pow(n as u32).filter(|&c| c <= LIMIT);
    let Some(count) = count else {
        return Err(Error::InvalidInput(format!("{p}^{n} candidates is too many to enumerate")));
    };
    Ok((0..count).map(move |mut idx| {
        let mut data = Vec::with_capacity(n);
        for _ in 0..n {
            data.push(idx % p);
            idx /= p;
        }
        Matrix::from_data(f, rows, cols, data)
    }))
}

fn is_hom(m: &FinModule, n: &FinModule, f: &Matrix) -> bool {
    (0..m.algebra().dim()).all(|i| f.mul(m.action(i)) == n.action(i).mul(f))
}

pub fn homs(m: &FinModule, n: &FinModule) -> Result<Vec<Matrix>> {
    Ok(all_matrices(m.field(), n.dim(), m.dim())?.filter(|f| is_hom(m, n, f)).collect())
}

/// `log_p` of a power of `p`.
fn log_p(f: Fp, count: usize) -> usize {
    let mut c = count as u64;
    let mut d = 0;
    while c > 1 {
        c /= f.p();
        d += 1;
    }
    d
}

pub fn hom_dim(m: &FinModule, n: &FinModule) -> Result<usize> {
    Ok(log_p(m.field(), homs(m, n)?.len()))
}

/// `Ext¹(M, N)` from a presentation `0 → Ω → P → M → 0` given by `incl: Ω → P`:
/// `|Hom(Ω, N)| / |{φ ∘ incl}|`.
pub fn ext1_dim(omega: &FinModule, p: &FinModule, incl: &Matrix, n: &FinModule) -> Result<usize> {
    let cocycles = homs(omega, n)?.len();
    let restricted: BTreeSet<Vec<u64>> = homs(p, n)?.iter().map(|phi| phi.mul(incl).data().to_vec()).collect();
    Ok(log_p(n.field(), cocycles / restricted.len()))
}

/// `Hom(M, N)` modulo maps `M → Q → N` for the given projective `Q`.
pub fn stable_hom_dim(m: &FinModule, n: &FinModule, q: &FinModule) -> Result<usize> {
    let all = homs(m, n)?.len();
    let into: Vec<Matrix> = homs(m, q)?;
    let out: Vec<Matrix> = homs(q, n)?;
    let mut factoring = BTreeSet::new();
    for a in &into {
        for b in &out {
            factoring.insert(b.mul(a).data().to_vec());
        }
    }
    let mut span: BTreeSet<Vec<u64>> = factoring.clone();
    loop {
        let before = span.len();
        let items: Vec<Vec<u64>> = span.iter().cloned().collect();
        for a in &items {
            for b in &factoring {
                span.insert(a.iter().zip(b).map(|(&x, &y)| m.field().add(x, y)).collect());
            }
        }
        if span.len() == before {
            break;
        }
    }
    Ok(log_p(m.field(), all / span.len()))
}

pub fn isomorphic(m: &FinModule, n: &FinModule) -> Result<bool> {
    if m.dim() != n.dim() {
        return Ok(false);
    }
    Ok(all_matrices(m.field(), n.dim(), m.dim())?.any(|f| f.is_invertible() && is_hom(m, n, &f)))
}
