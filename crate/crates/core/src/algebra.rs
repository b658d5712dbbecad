//! Finite-dimensional unital associative algebras given by structure constants.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::linalg::{Fp, Matrix};

/// A finite-dimensional algebra with basis `e_0..e_{n-1}` and `e_i e_j = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug)]
pub struct FinAlgebra {
    field: Fp,
    dim: usize,
    mult: Vec<u64>,
    unit: Vec<u64>,
    left: Vec<Matrix>,
    radical: Matrix,
    commutative: bool,
    name: String,
    gens: OnceLock<Vec<usize>>,
}

impl PartialEq for FinAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.dim == other.dim && self.mult == other.mult && self.unit == other.unit
    }
}

impl Eq for FinAlgebra {}

impl FinAlgebra {
    /// Validate structure constants and compute the radical.
    ///
    /// Commutative algebras get their radical from the kernel of an iterated Frobenius map.
    /// Non-commutative ones must use [`FinAlgebra::with_radical`].
    pub fn new(field: Fp, dim: usize, mult: Vec<Vec<Vec<i64>>>, unit: Vec<i64>) -> Result<Self> {
        let alg = Self::unchecked(field, dim, &mult, &unit)?;
        alg.validate_axioms()?;
        if !alg.commutative {
            return Err(Error::Unsupported(
                "non-commutative algebras need an explicit radical basis (with_radical)".into(),
            ));
        }
        let radical = alg.frobenius_radical();
        Ok(FinAlgebra { radical, ..alg })
    }

    /// Non-commutative algebras: the caller supplies a basis of the Jacobson radical, which is
    /// validated as a nilpotent two-sided ideal with reduced commutative quotient.
    pub fn with_radical(
        field: Fp,
        dim: usize,
        mult: Vec<Vec<Vec<i64>>>,
        unit: Vec<i64>,
        radical: Vec<Vec<i64>>,
    ) -> Result<Self> {
        let alg = Self::unchecked(field, dim, &mult, &unit)?;
        alg.validate_axioms()?;
        let cols: Vec<Vec<u64>> =
            radical.iter().map(|v| v.iter().map(|&x| field.from_i64(x)).collect()).collect();
        if cols.iter().any(|c| c.len() != dim) {
            return Err(Error::InvalidInput("radical vectors have wrong length".into()));
        }
        let rad = Matrix::from_columns(field, dim, &cols).column_space();
        let alg = FinAlgebra { radical: rad, ..alg };
        alg.validate_radical()?;
        Ok(alg)
    }

    fn unchecked(field: Fp, dim: usize, mult: &[Vec<Vec<i64>>], unit: &[i64]) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidInput("algebra dimension must be positive".into()));
        }
        if mult.len() != dim || mult.iter().any(|r| r.len() != dim || r.iter().any(|c| c.len() != dim)) {
            return Err(Error::InvalidInput(format!("structure constants must be {dim}x{dim}x{dim}")));
        }
        if unit.len() != dim {
            return Err(Error::InvalidInput("unit has wrong length".into()));
        }
        let mut flat = vec![0u64; dim * dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    flat[(i * dim + j) * dim + k] = field.from_i64(mult[i][j][k]);
                }
            }
        }
        let unit: Vec<u64> = unit.iter().map(|&x| field.from_i64(x)).collect();
        let left = (0..dim)
            .map(|i| Matrix::from_fn(field, dim, dim, |k, j| flat[(i * dim + j) * dim + k]))
            .collect::<Vec<_>>();
        let commutative = (0..dim).all(|i| {
            (0..dim).all(|j| (0..dim).all(|k| flat[(i * dim + j) * dim + k] == flat[(j * dim + i) * dim + k]))
        });
        Ok(FinAlgebra {
            field,
            dim,
            mult: flat,
            unit,
            left,
            radical: Matrix::zeros(field, dim, 0),
            commutative,
            name: String::new(),
            gens: OnceLock::new(),
        })
    }

    fn validate_axioms(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = self.mul(&self.mul(&self.basis(i), &self.basis(j)), &self.basis(k));
                    let rhs = self.mul(&self.basis(i), &self.mul(&self.basis(j), &self.basis(k)));
                    if lhs != rhs {
                        return Err(Error::Validation(format!("associativity fails on (e{i} e{j}) e{k}")));
                    }
                }
            }
        }
        for i in 0..n {
            if self.mul(&self.unit, &self.basis(i)) != self.basis(i) || self.mul(&self.basis(i), &self.unit) != self.basis(i)
            {
                return Err(Error::Validation(format!("unit law fails on e{i}")));
            }
        }
        Ok(())
    }

    fn validate_radical(&self) -> Result<()> {
        let rad: Vec<Vec<u64>> = (0..self.radical.cols()).map(|c| self.radical.column(c)).collect();
        for r in &rad {
            for i in 0..self.dim {
                for prod in [self.mul(&self.basis(i), r), self.mul(r, &self.basis(i))] {
                    if !self.in_span(&self.radical, &prod) {
                        return Err(Error::Validation("declared radical is not a two-sided ideal".into()));
                    }
                }
            }
        }
        // J^(dim+1) = 0
        let mut power = rad.clone();
        for _ in 0..self.dim {
            let mut next = Vec::new();
            for a in &power {
                for b in &rad {
                    next.push(self.mul(a, b));
                }
            }
            let m = Matrix::from_columns(self.field, self.dim, &next);
            let span = m.column_space();
            power = (0..span.cols()).map(|c| span.column(c)).collect();
            if power.is_empty() {
                break;
            }
        }
        if !power.is_empty() {
            return Err(Error::Validation("declared radical is not nilpotent".into()));
        }
        // A/J commutative and reduced
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ab = self.mul(&self.basis(i), &self.basis(j));
                let ba = self.mul(&self.basis(j), &self.basis(i));
                let diff: Vec<u64> = ab.iter().zip(&ba).map(|(&x, &y)| self.field.sub(x, y)).collect();
                if !self.in_span(&self.radical, &diff) {
                    return Err(Error::Validation("A/J is not commutative; radical too small".into()));
                }
            }
        }
        let frob = self.frobenius_power_matrix();
        let image_mod_j = Matrix::hstack(&[&frob, &self.radical]).rank();
        if image_mod_j != self.dim {
            return Err(Error::Validation("A/J is not reduced; radical too small".into()));
        }
        Ok(())
    }

    fn in_span(&self, basis: &Matrix, v: &[u64]) -> bool {
        if v.iter().all(|&x| x == 0) {
            return true;
        }
        basis.cols() > 0 && basis.solve(v).is_some()
    }

    /// Matrix of `a ↦ a^(p^m)` with `p^m ≥ dim`, which is additive on commutative algebras
    /// (and on A/J for the validation above).
    fn frobenius_power_matrix(&self) -> Matrix {
        let p = self.field.p();
        let mut e = 1u64;
        let mut q = p;
        while (q as usize) < self.dim + 1 {
            q *= p;
            e += 1;
        }
        let cols: Vec<Vec<u64>> = (0..self.dim)
            .map(|i| {
                let mut x = self.basis(i);
                for _ in 0..e {
                    x = self.pow(&x, p);
                }
                x
            })
            .collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    fn frobenius_radical(&self) -> Matrix {
        let m = self.frobenius_power_matrix();
        m.kernel_matrix()
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// `F_p[x]/(x^n)` with basis `1, x, …, x^{n-1}`.
    pub fn truncated_polynomial(field: Fp, n: usize) -> Result<Self> {
        let mut mult = vec![vec![vec![0i64; n]; n]; n];
        for (i, row) in mult.iter_mut().enumerate() {
            for (j, c) in row.iter_mut().enumerate() {
                if i + j < n {
                    c[i + j] = 1;
                }
            }
        }
        let mut unit = vec![0; n];
        unit[0] = 1;
        Ok(Self::new(field, n, mult, unit)?.named(format!("F{}[x]/(x^{})", field.p(), n)))
    }

    /// Product algebra `A × B`, basis of A followed by basis of B.
    pub fn product(a: &FinAlgebra, b: &FinAlgebra) -> Result<Self> {
        if a.field != b.field {
            return Err(Error::AlgebraMismatch);
        }
        let (m, n) = (a.dim, b.dim);
        let d = m + n;
        let mut mult = vec![vec![vec![0i64; d]; d]; d];
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    mult[i][j][k] = a.field.to_i64(a.coeff(i, j, k));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    mult[m + i][m + j][m + k] = b.field.to_i64(b.coeff(i, j, k));
                }
            }
        }
        let unit: Vec<i64> = a.unit.iter().chain(&b.unit).map(|&x| a.field.to_i64(x)).collect();
        if a.commutative && b.commutative {
            Ok(Self::new(a.field, d, mult, unit)?.named(format!("{} x {}", a.name, b.name)))
        } else {
            let mut rad: Vec<Vec<i64>> = Vec::new();
            for c in 0..a.radical.cols() {
                let mut v: Vec<i64> = a.radical.column(c).iter().map(|&x| a.field.to_i64(x)).collect();
                v.extend(std::iter::repeat_n(0, n));
                rad.push(v);
            }
            for c in 0..b.radical.cols() {
                let mut v = vec![0i64; m];
                v.extend(b.radical.column(c).iter().map(|&x| b.field.to_i64(x)));
                rad.push(v);
            }
            Self::with_radical(a.field, d, mult, unit, rad)
        }
    }

    pub fn opposite(&self) -> FinAlgebra {
        let n = self.dim;
        let mut mult = vec![0u64; n * n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    mult[(i * n + j) * n + k] = self.mult[(j * n + i) * n + k];
                }
            }
        }
        let left = (0..n)
            .map(|i| Matrix::from_fn(self.field, n, n, |k, j| mult[(i * n + j) * n + k]))
            .collect();
        FinAlgebra {
            field: self.field,
            dim: n,
            mult,
            unit: self.unit.clone(),
            left,
            radical: self.radical.clone(),
            commutative: self.commutative,
            name: format!("{}^op", self.name),
            gens: OnceLock::new(),
        }
    }

    #[inline]
    pub fn field(&self) -> Fp {
        self.field
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn coeff(&self, i: usize, j: usize, k: usize) -> u64 {
        self.mult[(i * self.dim + j) * self.dim + k]
    }

    pub fn unit(&self) -> &[u64] {
        &self.unit
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn basis(&self, i: usize) -> Vec<u64> {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.dim]
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let f = self.field;
        let n = self.dim;
        let mut out = vec![0u64; n];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let c = f.mul(ai, bj);
                for (k, o) in out.iter_mut().enumerate() {
                    let s = self.mult[(i * n + j) * n + k];
                    if s != 0 {
                        *o = f.add(*o, f.mul(c, s));
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &[u64], e: u64) -> Vec<u64> {
        let mut r = self.unit.clone();
        for _ in 0..e {
            r = self.mul(&r, a);
        }
        r
    }

    /// Matrix of left multiplication by `e_i`.
    pub fn left_basis_matrix(&self, i: usize) -> &Matrix {
        &self.left[i]
    }

    /// Matrix of left multiplication by an arbitrary element.
    pub fn left_matrix(&self, a: &[u64]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.dim, self.dim);
        for (i, &c) in a.iter().enumerate() {
            m.add_scaled(&self.left[i], c);
        }
        m
    }

    pub fn is_central(&self, a: &[u64]) -> bool {
        (0..self.dim).all(|i| self.mul(a, &self.basis(i)) == self.mul(&self.basis(i), a))
    }

    /// Columns span the Jacobson radical.
    pub fn radical(&self) -> &Matrix {
        &self.radical
    }

    pub fn is_local(&self) -> bool {
        self.radical.cols() + 1 == self.dim
    }

    /// Greedy list of basis indices generating the algebra (together with the unit).
    pub fn generators(&self) -> &[usize] {
        self.gens.get_or_init(|| generators_by(self.field, self.dim, &self.unit, |a, b| self.mul(a, b)))
    }

    /// Complete set of primitive orthogonal idempotents.
    ///
    /// Local algebras return `[1]`. Otherwise the algebra must be commutative with split
    /// semisimple quotient; the idempotents are found in the Frobenius image, a subalgebra
    /// isomorphic to `A/J`.
    pub fn primitive_idempotents(&self) -> Result<Vec<Vec<u64>>> {
        if self.is_local() {
            return Ok(vec![self.unit.clone()]);
        }
        if !self.commutative {
            return Err(Error::Unsupported("idempotent splitting needs a commutative or local algebra".into()));
        }
        let f = self.field;
        let frob = self.frobenius_power_matrix().column_space();
        let t: Vec<Vec<u64>> = (0..frob.cols()).map(|c| frob.column(c)).collect();
        let mut parts: Vec<Vec<Vec<u64>>> = vec![t.clone()];
        for x in &t {
            let mut next = Vec::new();
            for part in parts {
                if part.len() <= 1 {
                    next.push(part);
                    continue;
                }
                let pm = Matrix::from_columns(f, self.dim, &part);
                let mut pieces = Vec::new();
                let mut total = 0;
                for lambda in 0..f.p() {
                    // eigenvectors of multiplication by x inside this part
                    let mut sys = Vec::new();
                    for v in &part {
                        let xv = self.mul(x, v);
                        let d: Vec<u64> = xv.iter().zip(v).map(|(&a, &b)| f.sub(a, f.mul(lambda, b))).collect();
                        sys.push(d);
                    }
                    let img = Matrix::from_columns(f, self.dim, &sys);
                    let ker = img.kernel();
                    if ker.is_empty() {
                        continue;
                    }
                    total += ker.len();
                    pieces.push(ker.iter().map(|c| pm.mul_vec(c)).collect::<Vec<_>>());
                }
                if total != part.len() {
                    return Err(Error::Unsupported("semisimple quotient is not split over the prime field".into()));
                }
                next.extend(pieces);
            }
            parts = next;
        }
        let mut out = Vec::new();
        for part in parts {
            let v = &part[0];
            let sq = self.mul(v, v);
            let k = v.iter().position(|&x| x != 0).expect("nonzero basis vector");
            let c = f.mul(sq[k], f.inv(v[k]));
            out.push(v.iter().map(|&x| f.mul(x, f.inv(c))).collect());
        }
        Ok(out)
    }
}

/// Greedy generating set for an algebra given by a multiplication closure.
pub(crate) fn generators_by(field: Fp, dim: usize, unit: &[u64], mul: impl Fn(&[u64], &[u64]) -> Vec<u64>) -> Vec<usize> {
    let basis = |i: usize| {
        let mut v = vec![0; dim];
        v[i] = 1;
        v
    };
    let mut gens: Vec<usize> = Vec::new();
    let mut span: Vec<Vec<u64>> = vec![unit.to_vec()];
    let in_span = |span: &Vec<Vec<u64>>, v: &[u64]| {
        let m = Matrix::from_columns(field, dim, span);
        m.solve(v).is_some()
    };
    for i in 0..dim {
        if in_span(&span, &basis(i)) {
            continue;
        }
        gens.push(i);
        // close the span under multiplication by generators on both sides
        let mut frontier = span.clone();
        frontier.push(basis(i));
        span.push(basis(i));
        while let Some(v) = frontier.pop() {
            for &g in &gens {
                for prod in [mul(&basis(g), &v), mul(&v, &basis(g))] {
                    if !in_span(&span, &prod) {
                        span.push(prod.clone());
                        frontier.push(prod);
                    }
                }
            }
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> Fp {
        Fp::new(3).unwrap()
    }

    #[test]
    fn truncated_polynomial_is_local() {
        let s4 = FinAlgebra::truncated_polynomial(f3(), 4).unwrap();
        assert_eq!(s4.dim(), 4);
        assert!(s4.is_local());
        assert_eq!(s4.radical().cols(), 3);
        assert_eq!(s4.generators(), &[1]);
        let x = s4.basis(1);
        assert_eq!(s4.pow(&x, 4), s4.zero());
    }

    #[test]
    fn ground_field_has_zero_radical() {
        let k = FinAlgebra::truncated_polynomial(f3(), 1).unwrap();
        assert_eq!(k.radical().cols(), 0);
        assert!(k.generators().is_empty());
    }

    #[test]
    fn bad_structure_constants_rejected() {
        // e1*e1 = e0 but unit is e1: unit law fails
        let f = f3();
        let mult = vec![vec![vec![1, 0], vec![0, 0]], vec![vec![0, 0], vec![1, 0]]];
        assert!(FinAlgebra::new(f, 2, mult, vec![0, 1]).is_err());
    }

    #[test]
    fn product_idempotents() {
        let s2 = FinAlgebra::truncated_polynomial(f3(), 2).unwrap();
        let k = FinAlgebra::truncated_polynomial(f3(), 1).unwrap();
        let a = FinAlgebra::product(&s2, &k).unwrap();
        assert!(!a.is_local());
        let e = a.primitive_idempotents().unwrap();
        assert_eq!(e.len(), 2);
        for x in &e {
            assert_eq!(&a.mul(x, x), x);
        }
        assert_eq!(a.mul(&e[0], &e[1]), a.zero());
    }

    #[test]
    fn upper_triangular_with_declared_radical() {
        // 2x2 upper triangular matrices: basis e11, e12, e22
        let f = f3();
        let mut mult = vec![vec![vec![0i64; 3]; 3]; 3];
        mult[0][0][0] = 1; // e11 e11
        mult[0][1][1] = 1; // e11 e12
        mult[1][2][1] = 1; // e12 e22
        mult[2][2][2] = 1; // e22 e22
        let a = FinAlgebra::with_radical(f, 3, mult.clone(), vec![1, 0, 1], vec![vec![0, 1, 0]]).unwrap();
        assert!(!a.is_commutative());
        assert!(FinAlgebra::with_radical(f, 3, mult.clone(), vec![1, 0, 1], vec![]).is_err());
        assert!(FinAlgebra::new(f, 3, mult, vec![1, 0, 1]).is_err());
    }
}
