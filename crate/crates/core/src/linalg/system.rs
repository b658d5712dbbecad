//! Linear systems whose unknowns are matrix blocks.
//!
//! Hom spaces, chain maps, homotopies and lifting problems all have the shape
//! "find block matrices `U_b` with `Σ c·L·U_b·R = B`". [`LinearSystem`] collects
//! such equations and keeps them in incremental echelon form, so memory stays
//! bounded by the number of unknowns no matter how many equations are added.

use super::field::Fp;
use super::matrix::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockId(usize);

/// One summand `coeff · left · U[block] · right` of a matrix equation.
/// A missing `left`/`right` stands for the identity.
#[derive(Clone, Copy)]
pub struct Term<'a> {
    pub coeff: u64,
    pub left: Option<&'a Matrix>,
    pub block: BlockId,
    pub right: Option<&'a Matrix>,
}

impl<'a> Term<'a> {
    pub fn new(coeff: u64, left: Option<&'a Matrix>, block: BlockId, right: Option<&'a Matrix>) -> Self {
        Term { coeff, left, block, right }
    }

    /// `U · right`
    pub fn right(block: BlockId, right: &'a Matrix) -> Self {
        Term { coeff: 1, left: None, block, right: Some(right) }
    }

    /// `coeff · left · U`
    pub fn left(coeff: u64, left: &'a Matrix, block: BlockId) -> Self {
        Term { coeff, left: Some(left), block, right: None }
    }

    pub fn bare(coeff: u64, block: BlockId) -> Self {
        Term { coeff, left: None, block, right: None }
    }
}

pub struct LinearSystem {
    field: Fp,
    blocks: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    nvars: usize,
    // echelon rows of length nvars + 1; the last slot is the right-hand side
    rows: Vec<Vec<u64>>,
    pivot_row: Vec<Option<usize>>,
    inconsistent: bool,
    frozen: bool,
}

impl LinearSystem {
    pub fn new(field: Fp) -> Self {
        LinearSystem {
            field,
            blocks: Vec::new(),
            offsets: Vec::new(),
            nvars: 0,
            rows: Vec::new(),
            pivot_row: Vec::new(),
            inconsistent: false,
            frozen: false,
        }
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    /// Register an unknown `rows × cols` block. All blocks must be added before equations.
    pub fn add_block(&mut self, rows: usize, cols: usize) -> BlockId {
        assert!(!self.frozen, "blocks must be declared before equations");
        self.blocks.push((rows, cols));
        self.offsets.push(self.nvars);
        self.nvars += rows * cols;
        BlockId(self.blocks.len() - 1)
    }

    pub fn block_shape(&self, b: BlockId) -> (usize, usize) {
        self.blocks[b.0]
    }

    pub fn num_unknowns(&self) -> usize {
        self.nvars
    }

    fn freeze(&mut self) {
        if !self.frozen {
            self.frozen = true;
            self.pivot_row = vec![None; self.nvars + 1];
        }
    }

    /// Add the matrix equation `Σ terms = rhs` (rhs = 0 when `None`), whose value is `out_rows × out_cols`.
    pub fn add_equation(&mut self, out_rows: usize, out_cols: usize, terms: &[Term<'_>], rhs: Option<&Matrix>) {
        self.freeze();
        let f = self.field;
        if let Some(b) = rhs {
            assert_eq!(b.shape(), (out_rows, out_cols), "rhs shape mismatch");
        }
        for t in terms {
            let (br, bc) = self.blocks[t.block.0];
            if let Some(l) = t.left {
                assert_eq!(l.shape(), (out_rows, br), "left factor shape mismatch");
            } else {
                assert_eq!(br, out_rows, "block rows must equal equation rows");
            }
            if let Some(r) = t.right {
                assert_eq!(r.shape(), (bc, out_cols), "right factor shape mismatch");
            } else {
                assert_eq!(bc, out_cols, "block cols must equal equation cols");
            }
        }
        let mut row = vec![0u64; self.nvars + 1];
        for i in 0..out_rows {
            for j in 0..out_cols {
                row.iter_mut().for_each(|x| *x = 0);
                for t in terms {
                    let c = t.coeff % f.p();
                    if c == 0 {
                        continue;
                    }
                    let (br, bc) = self.blocks[t.block.0];
                    let off = self.offsets[t.block.0];
                    let lefts: Vec<(usize, u64)> = match t.left {
                        Some(l) => (0..br).filter_map(|a| Some((a, l.get(i, a))).filter(|x| x.1 != 0)).collect(),
                        None => vec![(i, 1)],
                    };
                    let rights: Vec<(usize, u64)> = match t.right {
                        Some(r) => (0..bc).filter_map(|b| Some((b, r.get(b, j))).filter(|x| x.1 != 0)).collect(),
                        None => vec![(j, 1)],
                    };
                    for &(a, la) in &lefts {
                        let cl = f.mul(c, la);
                        for &(b, rb) in &rights {
                            let v = off + a * bc + b;
                            row[v] = f.add(row[v], f.mul(cl, rb));
                        }
                    }
                }
                if let Some(b) = rhs {
                    row[self.nvars] = b.get(i, j);
                }
                self.insert_row(row.clone());
            }
        }
    }

    fn insert_row(&mut self, mut row: Vec<u64>) {
        let f = self.field;
        let p = f.p();
        let n = self.nvars;
        for c in 0..=n {
            let v = row[c];
            if v == 0 {
                continue;
            }
            match self.pivot_row[c] {
                Some(ri) => {
                    let neg = p - v;
                    let prow = &self.rows[ri];
                    for k in c..=n {
                        let pv = prow[k];
                        if pv != 0 {
                            row[k] = (row[k] + neg * pv) % p;
                        }
                    }
                }
                None => {
                    if c == n {
                        self.inconsistent = true;
                        return;
                    }
                    let inv = f.inv(v);
                    for x in row[c..].iter_mut() {
                        *x = f.mul(*x, inv);
                    }
                    self.pivot_row[c] = Some(self.rows.len());
                    self.rows.push(row);
                    return;
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_consistent(&self) -> bool {
        !self.inconsistent
    }

    fn back_substitute(&self) -> Vec<Vec<u64>> {
        let f = self.field;
        let p = f.p();
        let n = self.nvars;
        let mut order: Vec<(usize, usize)> =
            (0..n).filter_map(|c| self.pivot_row.get(c).copied().flatten().map(|r| (c, r))).collect();
        order.sort();
        let mut rows: Vec<Vec<u64>> = order.iter().map(|&(_, r)| self.rows[r].clone()).collect();
        let pivots: Vec<usize> = order.iter().map(|&(c, _)| c).collect();
        for i in (0..rows.len()).rev() {
            let pc = pivots[i];
            for j in 0..i {
                let v = rows[j][pc];
                if v != 0 {
                    let neg = p - v;
                    let (head, tail) = rows.split_at_mut(i);
                    let src = &tail[0];
                    for k in pc..=n {
                        if src[k] != 0 {
                            head[j][k] = (head[j][k] + neg * src[k]) % p;
                        }
                    }
                }
            }
        }
        rows
    }

    fn unpack(&self, v: &[u64]) -> Vec<Matrix> {
        self.blocks
            .iter()
            .zip(&self.offsets)
            .map(|(&(r, c), &off)| Matrix::from_data(self.field, r, c, v[off..off + r * c].to_vec()))
            .collect()
    }

    /// Basis of the solution space of the homogeneous system.
    pub fn kernel(&self) -> Vec<Vec<Matrix>> {
        let n = self.nvars;
        let f = self.field;
        let rows = self.back_substitute();
        let mut is_pivot = vec![false; n];
        let mut pivots = Vec::new();
        for r in &rows {
            let pc = r.iter().position(|&x| x != 0).expect("echelon rows are nonzero");
            is_pivot[pc] = true;
            pivots.push(pc);
        }
        let mut out = Vec::new();
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0; n];
            v[free] = 1;
            for (r, &pc) in rows.iter().zip(&pivots) {
                v[pc] = f.neg(r[free]);
            }
            out.push(self.unpack(&v));
        }
        out
    }

    pub fn kernel_dim(&self) -> usize {
        self.nvars - self.rows.len()
    }

    /// One solution of the inhomogeneous system, if it is consistent.
    pub fn particular(&self) -> Option<Vec<Matrix>> {
        if self.inconsistent {
            return None;
        }
        let n = self.nvars;
        let rows = self.back_substitute();
        let mut v = vec![0; n];
        for r in &rows {
            let pc = r.iter().position(|&x| x != 0).expect("echelon rows are nonzero");
            v[pc] = r[n];
        }
        Some(self.unpack(&v))
    }
}

/// Express matrices in the coordinates of a fixed linearly independent family.
pub struct Coordinates {
    field: Fp,
    shape: (usize, usize),
    len: usize,
    echelon: Matrix,
    pivots: Vec<usize>,
}

impl Coordinates {
    pub fn new(field: Fp, shape: (usize, usize), basis: &[Matrix]) -> Self {
        let len = shape.0 * shape.1;
        let cols: Vec<Vec<u64>> = basis.iter().map(|m| m.data().to_vec()).collect();
        let stacked = Matrix::from_columns(field, len, &cols);
        // rref of [B | I] lets us read off coordinates for any target later
        let aug = Matrix::hstack(&[&stacked, &Matrix::identity(field, len)]);
        let (echelon, pivots) = aug.rref();
        assert!(
            pivots.iter().take(basis.len()).enumerate().all(|(i, &c)| c == i),
            "coordinate family must be linearly independent"
        );
        Coordinates { field, shape, len: basis.len(), echelon, pivots }
    }

    pub fn dim(&self) -> usize {
        self.len
    }

    /// Coordinates of `m`, or `None` if `m` is outside the span.
    pub fn of(&self, m: &Matrix) -> Option<Vec<u64>> {
        assert_eq!(m.shape(), self.shape);
        let total = self.shape.0 * self.shape.1;
        let v = m.data();
        let p = self.field.p();
        // transformed = E * v where E is the right half of the echelon form
        let mut t = vec![0u64; total];
        for (i, ti) in t.iter_mut().enumerate() {
            let mut acc = 0;
            for (j, &vj) in v.iter().enumerate() {
                if vj != 0 {
                    acc = (acc + self.echelon.get(i, self.len + j) * vj) % p;
                }
            }
            *ti = acc;
        }
        let rank_rows = self.pivots.iter().take_while(|&&c| c < self.len).count();
        if t[rank_rows..].iter().any(|&x| x != 0) {
            return None;
        }
        Some(t[..self.len].to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> Fp {
        Fp::new(3).unwrap()
    }

    #[test]
    fn commutant_of_nilpotent_jordan_block() {
        // matrices commuting with [[0,1],[0,0]] form a 2-dimensional space
        let f = f3();
        let n = Matrix::from_rows(f, &[vec![0, 1], vec![0, 0]]);
        let mut sys = LinearSystem::new(f);
        let u = sys.add_block(2, 2);
        sys.add_equation(2, 2, &[Term::right(u, &n), Term::left(f.neg(1), &n, u)], None);
        let k = sys.kernel();
        assert_eq!(k.len(), 2);
        for sol in &k {
            assert_eq!(sol[0].mul(&n), n.mul(&sol[0]));
        }
    }

    #[test]
    fn particular_solution_of_lifting_problem() {
        let f = f3();
        let a = Matrix::from_rows(f, &[vec![1, 1]]);
        let target = Matrix::from_rows(f, &[vec![2]]);
        let mut sys = LinearSystem::new(f);
        let u = sys.add_block(2, 1);
        sys.add_equation(1, 1, &[Term::left(1, &a, u)], Some(&target));
        let sol = sys.particular().unwrap();
        assert_eq!(a.mul(&sol[0]), target);
        assert_eq!(sys.kernel_dim(), 1);
    }

    #[test]
    fn detects_inconsistency() {
        let f = f3();
        let mut sys = LinearSystem::new(f);
        let u = sys.add_block(1, 1);
        let one = Matrix::identity(f, 1);
        let two = one.scale(2);
        sys.add_equation(1, 1, &[Term::bare(1, u)], Some(&one));
        sys.add_equation(1, 1, &[Term::bare(1, u)], Some(&two));
        assert!(sys.particular().is_none());
    }

    #[test]
    fn coordinates_roundtrip() {
        let f = f3();
        let b = vec![Matrix::from_rows(f, &[vec![1, 0]]), Matrix::from_rows(f, &[vec![1, 1]])];
        let c = Coordinates::new(f, (1, 2), &b);
        let m = Matrix::from_rows(f, &[vec![0, 2]]);
        let co = c.of(&m).unwrap();
        let mut re = Matrix::zeros(f, 1, 2);
        re.add_scaled(&b[0], co[0]);
        re.add_scaled(&b[1], co[1]);
        assert_eq!(re, m);
        let c1 = Coordinates::new(f, (1, 2), &b[..1]);
        assert!(c1.of(&m).is_none());
    }
}
