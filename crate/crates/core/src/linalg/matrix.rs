use std::fmt;

use rand::Rng;

use super::field::Fp;

/// Dense matrix over a prime field, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Fp,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.field.to_i64(self.get(r, c)))?;
            }
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(field: Fp, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: Fp, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn scalar(field: Fp, n: usize, c: u64) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = c % field.p();
        }
        m
    }

    pub fn from_data(field: Fp, rows: usize, cols: usize, data: Vec<u64>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must equal rows*cols");
        let data = data.into_iter().map(|x| x % field.p()).collect();
        Matrix { field, rows, cols, data }
    }

    /// Build from integer rows, reducing mod p. All rows must have equal length.
    pub fn from_rows(field: Fp, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix rows");
            for (j, &v) in row.iter().enumerate() {
                m.data[i * c + j] = field.from_i64(v);
            }
        }
        m
    }

    pub fn from_fn(field: Fp, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u64) -> Self {
        let mut m = Self::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = f(i, j) % field.p();
            }
        }
        m
    }

    /// Columns given as vectors of length `rows`.
    pub fn from_columns(field: Fp, rows: usize, columns: &[Vec<u64>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, &v) in col.iter().enumerate() {
                m.data[i * columns.len() + j] = v;
            }
        }
        m
    }

    pub fn random(field: Fp, rows: usize, cols: usize, rng: &mut impl Rng) -> Self {
        Self::from_fn(field, rows, cols, |_, _| rng.gen_range(0..field.p()))
    }

    #[inline]
    pub fn field(&self) -> Fp {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn data(&self) -> &[u64] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v % self.field.p();
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "shape mismatch in add");
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        self.with_data(data)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "shape mismatch in sub");
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        self.with_data(data)
    }

    pub fn neg(&self) -> Matrix {
        let f = self.field;
        self.with_data(self.data.iter().map(|&a| f.neg(a)).collect())
    }

    pub fn scale(&self, c: u64) -> Matrix {
        let f = self.field;
        let c = c % f.p();
        self.with_data(self.data.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn add_scaled(&mut self, other: &Matrix, c: u64) {
        assert_eq!(self.shape(), other.shape());
        let f = self.field;
        let c = c % f.p();
        if c == 0 {
            return;
        }
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = f.add(*a, f.mul(b, c));
        }
    }

    fn with_data(&self, data: Vec<u64>) -> Matrix {
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul: {:?} * {:?}", self.shape(), other.shape());
        let p = self.field.p();
        let mut out = vec![0u64; self.rows * other.cols];
        for i in 0..self.rows {
            let orow = &mut out[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, &b) in orow.iter_mut().zip(brow) {
                    *o = (*o + a * b) % p;
                }
            }
        }
        Matrix { field: self.field, rows: self.rows, cols: other.cols, data: out }
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(self.cols, v.len());
        let p = self.field.p();
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(0, |acc, (&a, &b)| (acc + a * b) % p))
            .collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn pow(&self, e: u32) -> Matrix {
        assert!(self.is_square());
        let mut r = Matrix::identity(self.field, self.rows);
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Extract the submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]))
    }

    /// Write `block` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols, "block out of range");
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.data[(r0 + i) * self.cols + c0 + j] = block.get(i, j);
            }
        }
    }

    /// Write `block` into the positions named by index lists.
    pub fn set_indexed(&mut self, rows: &[usize], cols: &[usize], block: &Matrix) {
        assert_eq!((rows.len(), cols.len()), block.shape());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                self.data[r * self.cols + c] = block.get(i, j);
            }
        }
    }

    pub fn hstack(blocks: &[&Matrix]) -> Matrix {
        let field = blocks[0].field;
        let rows = blocks[0].rows;
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(field, rows, cols);
        let mut c0 = 0;
        for b in blocks {
            assert_eq!(b.rows, rows);
            m.set_block(0, c0, b);
            c0 += b.cols;
        }
        m
    }

    pub fn vstack(blocks: &[&Matrix]) -> Matrix {
        let field = blocks[0].field;
        let cols = blocks[0].cols;
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut m = Matrix::zeros(field, rows, cols);
        let mut r0 = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            m.set_block(r0, 0, b);
            r0 += b.rows;
        }
        m
    }

    pub fn block_diag(field: Fp, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            m.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let p = f.p();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(piv) = (r..rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if piv != r {
                for j in 0..cols {
                    self.data.swap(piv * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(self.data[r * cols + c]);
            for j in c..cols {
                self.data[r * cols + j] = f.mul(self.data[r * cols + j], inv);
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = self.data[i * cols + c];
                if factor == 0 {
                    continue;
                }
                let neg = p - factor;
                for j in c..cols {
                    let v = self.data[r * cols + j];
                    if v != 0 {
                        self.data[i * cols + j] = (self.data[i * cols + j] + neg * v) % p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<u64>> {
        let f = self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0; self.cols];
            v[free] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(i, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Kernel basis packed as the columns of a matrix.
    pub fn kernel_matrix(&self) -> Matrix {
        Matrix::from_columns(self.field, self.cols, &self.kernel())
    }

    /// A basis of the column space, as a subset of the original columns.
    pub fn column_space(&self) -> Matrix {
        let (_, pivots) = self.rref();
        self.select(&(0..self.rows).collect::<Vec<_>>(), &pivots)
    }

    /// One solution of `self * x = b`, if any.
    pub fn solve(&self, b: &[u64]) -> Option<Vec<u64>> {
        assert_eq!(b.len(), self.rows);
        let bm = Matrix::from_columns(self.field, self.rows, &[b.to_vec()]);
        self.solve_matrix(&bm).map(|x| x.column(0))
    }

    /// One solution `X` of `self * X = B`, if any.
    pub fn solve_matrix(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(b.rows, self.rows);
        let aug = Matrix::hstack(&[self, b]);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.field, self.cols, b.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.data[pc * b.cols + j] = r.get(i, self.cols + j);
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let x = self.solve_matrix(&Matrix::identity(self.field, self.rows))?;
        Some(x)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.rows
    }

    /// Entries as symmetric integers, row by row.
    pub fn to_int_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|r| self.row(r).iter().map(|&v| self.field.to_i64(v)).collect()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f3() -> Fp {
        Fp::new(3).unwrap()
    }

    #[test]
    fn rank_and_kernel_small() {
        let m = Matrix::from_rows(f3(), &[vec![1, 2, 0], vec![2, 1, 0]]);
        // second row = 2 * first row mod 3
        assert_eq!(m.rank(), 1);
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn solve_and_inverse() {
        let m = Matrix::from_rows(f3(), &[vec![1, 1], vec![0, 2]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(f3(), 2));
        assert!(Matrix::zeros(f3(), 2, 2).inverse().is_none());
        let x = m.solve(&[2, 1]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![2, 1]);
    }

    #[test]
    fn inconsistent_system() {
        let m = Matrix::from_rows(f3(), &[vec![1, 0], vec![1, 0]]);
        assert!(m.solve(&[1, 2]).is_none());
    }

    proptest! {
        #[test]
        fn rank_nullity(seed in any::<u64>(), r in 0usize..7, c in 0usize..7) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = Matrix::random(f3(), r, c, &mut rng);
            prop_assert_eq!(m.rank() + m.kernel().len(), c);
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn solve_finds_preimages(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let a = Matrix::random(f3(), 4, 5, &mut rng);
            let x = Matrix::random(f3(), 5, 2, &mut rng);
            let b = a.mul(&x);
            let y = a.solve_matrix(&b).expect("consistent by construction");
            prop_assert_eq!(a.mul(&y), b);
        }
    }
}
