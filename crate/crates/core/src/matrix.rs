//! Dense matrices over F_p.
//!
//! Entries are stored row-major as reduced residues. Shape mismatches in the
//! arithmetic operators are programming errors and panic, like the std
//! operators do; the fallible entry points are the constructors.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::PrimeField;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Result of Gauss-Jordan elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Solution set `particular + span(kernel columns)` of a linear system.
#[derive(Clone, Debug)]
pub struct AffineSolution {
    pub particular: Vec<u32>,
    pub kernel: Matrix,
}

impl AffineSolution {
    pub fn dim(&self) -> usize {
        self.kernel.cols()
    }
}

impl Matrix {
    pub fn new(field: PrimeField, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {}x{} matrix",
                data.len(),
                rows,
                cols
            )));
        }
        if let Some(bad) = data.iter().find(|&&v| v >= field.p()) {
            return Err(Error::InvalidInput(format!(
                "entry {} is not a residue mod {}",
                bad,
                field.p()
            )));
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    /// Builds a matrix from signed integers, reducing mod p.
    pub fn from_i64(field: PrimeField, rows: usize, cols: usize, data: &[i64]) -> Result<Self> {
        let data = data.iter().map(|&v| field.reduce(v)).collect();
        Matrix::new(field, rows, cols, data)
    }

    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        let flat: Vec<i64> = rows.iter().flatten().copied().collect();
        Matrix::from_i64(field, rows.len(), cols, &flat)
    }

    /// Columns given as reduced residue vectors of length `rows`.
    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<u32>]) -> Self {
        let cols = columns.len();
        let mut m = Matrix::zeros(field, rows, cols);
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, &v) in c.iter().enumerate() {
                m.data[i * cols + j] = v % field.p();
            }
        }
        m
    }

    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// The matrix unit E_{i,j} (0-based) of size n.
    pub fn unit(field: PrimeField, n: usize, i: usize, j: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        m.data[i * n + j] = 1;
        m
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
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

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn data(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v % self.field.p();
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    /// Rows as signed integers, for serialization.
    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|&v| v as i64).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_strictly_upper_triangular(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols.min(i + 1)).all(|j| self.get(i, j) == 0))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        assert_eq!(self.field, rhs.field);
        let p = self.field.p() as u64;
        let mut out = vec![0u64; self.rows * rhs.cols];
        for i in 0..self.rows {
            let orow = &mut out[i * rhs.cols..(i + 1) * rhs.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let rrow = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                for (o, &b) in orow.iter_mut().zip(rrow) {
                    *o = (*o + a * b as u64) % p;
                }
            }
        }
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: rhs.cols,
            data: out.into_iter().map(|v| v as u32).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        let p = self.field.p() as u64;
        (0..self.rows)
            .map(|i| {
                let mut acc = 0u64;
                for (a, &b) in self.row(i).iter().zip(v) {
                    acc = (acc + *a as u64 * b as u64) % p;
                }
                acc as u32
            })
            .collect()
    }

    fn zip_with(&self, rhs: &Matrix, f: impl Fn(u32, u32) -> u32) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| f(a, b)).collect(),
        }
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        let f = self.field;
        self.zip_with(rhs, |a, b| f.add(a, b))
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        let f = self.field;
        self.zip_with(rhs, |a, b| f.sub(a, b))
    }

    pub fn scale(&self, c: u32) -> Matrix {
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.neg(a)).collect(),
        }
    }

    /// `self += c * other`
    pub fn add_scaled_assign(&mut self, c: u32, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if c == 0 {
            return;
        }
        let f = self.field;
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = f.mul_add(*a, c, b);
        }
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `AB - BA`
    pub fn commutator(&self, rhs: &Matrix) -> Matrix {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let f = self.field;
        let (r, c) = (self.rows * rhs.rows, self.cols * rhs.cols);
        let mut m = Matrix::zeros(f, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        m.data[(i * rhs.rows + k) * c + j * rhs.cols + l] = f.mul(a, rhs.get(k, l));
                    }
                }
            }
        }
        m
    }

    pub fn block_diag(field: PrimeField, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.data[(r0 + i) * cols + c0 + j] = b.get(i, j);
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows, "hstack row mismatch");
        let cols = self.cols + rhs.cols;
        let mut m = Matrix::zeros(self.field, self.rows, cols);
        for i in 0..self.rows {
            m.data[i * cols..i * cols + self.cols].copy_from_slice(self.row(i));
            m.data[i * cols + self.cols..(i + 1) * cols].copy_from_slice(rhs.row(i));
        }
        m
    }

    pub fn vstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Matrix {
            field: self.field,
            rows: self.rows + rhs.rows,
            cols: self.cols,
            data,
        }
    }

    /// Stack many matrices with equal column counts.
    pub fn vstack_all(field: PrimeField, cols: usize, parts: &[Matrix]) -> Matrix {
        let mut data = Vec::new();
        let mut rows = 0;
        for m in parts {
            assert_eq!(m.cols, cols);
            data.extend_from_slice(&m.data);
            rows += m.rows;
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Matrix {
            field: self.field,
            rows: idx.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.rows, idx.len());
        for i in 0..self.rows {
            for (jj, &j) in idx.iter().enumerate() {
                m.data[i * idx.len() + jj] = self.get(i, j);
            }
        }
        m
    }

    /// Reduced row echelon form. Pivots are chosen as the first nonzero entry
    /// in column-scan order, so the output is deterministic.
    pub fn rref(&self) -> Echelon {
        let f = self.field;
        let p = f.p() as u64;
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| a[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    a.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(a[r * cols + c]) as u64;
            for j in c..cols {
                a[r * cols + j] = ((a[r * cols + j] as u64 * inv) % p) as u32;
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = a[i * cols + c];
                if factor == 0 {
                    continue;
                }
                let neg = (p - factor as u64) % p;
                for j in c..cols {
                    let v = a[r * cols + j];
                    if v != 0 {
                        a[i * cols + j] = ((a[i * cols + j] as u64 + neg * v as u64) % p) as u32;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon {
            reduced: Matrix {
                field: f,
                rows,
                cols,
                data: a,
            },
            rank: pivots.len(),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        // Eliminate along the shorter side.
        if self.rows > self.cols {
            self.transpose().rref().rank
        } else {
            self.rref().rank
        }
    }

    /// Basis of the right null space, as the columns of a `cols x k` matrix.
    /// Vector t has a 1 in the t-th free column.
    pub fn kernel(&self) -> Matrix {
        let e = self.rref();
        kernel_from_rref(&e, self.cols)
    }

    /// All solutions of `self * x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &[u32]) -> Option<AffineSolution> {
        assert_eq!(b.len(), self.rows, "right-hand side length");
        let f = self.field;
        let aug = self.hstack(&Matrix::from_columns(f, self.rows, &[b.to_vec()]));
        let e = aug.rref();
        if e.pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut particular = vec![0u32; self.cols];
        for (row, &pc) in e.pivots.iter().enumerate() {
            particular[pc] = e.reduced.get(row, self.cols);
        }
        let coeff = Echelon {
            reduced: e.reduced.select_cols(&(0..self.cols).collect::<Vec<_>>()),
            pivots: e.pivots.clone(),
            rank: e.rank,
        };
        Some(AffineSolution {
            particular,
            kernel: kernel_from_rref(&coeff, self.cols),
        })
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let e = self.hstack(&Matrix::identity(self.field, n)).rref();
        if e.pivots.len() < n || (n > 0 && e.pivots[n - 1] != n - 1) {
            return None;
        }
        let idx: Vec<usize> = (n..2 * n).collect();
        Some(e.reduced.select_cols(&idx))
    }

    pub fn determinant(&self) -> u32 {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let f = self.field;
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = 1u32;
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| a[i * n + c] != 0) else {
                return 0;
            };
            if pr != c {
                for j in 0..n {
                    a.swap(pr * n + j, c * n + j);
                }
                det = f.neg(det);
            }
            let piv = a[c * n + c];
            det = f.mul(det, piv);
            let inv = f.inv(piv);
            for i in c + 1..n {
                let factor = f.mul(a[i * n + c], inv);
                if factor == 0 {
                    continue;
                }
                for j in c..n {
                    a[i * n + j] = f.sub(a[i * n + j], f.mul(factor, a[c * n + j]));
                }
            }
        }
        det
    }
}

fn kernel_from_rref(e: &Echelon, cols: usize) -> Matrix {
    let f = e.reduced.field;
    let mut is_pivot = vec![false; cols];
    for &c in &e.pivots {
        is_pivot[c] = true;
    }
    let free: Vec<usize> = (0..cols).filter(|&c| !is_pivot[c]).collect();
    let mut k = Matrix::zeros(f, cols, free.len());
    for (t, &fc) in free.iter().enumerate() {
        k.data[fc * free.len() + t] = 1;
        for (row, &pc) in e.pivots.iter().enumerate() {
            let v = e.reduced.get(row, fc);
            k.data[pc * free.len() + t] = f.neg(v);
        }
    }
    k
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix<F_{}>{}x{} {}", self.field.p(), self.rows, self.cols, self)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn rref_identity_is_fixed() {
        let id = Matrix::identity(f(5), 3);
        let e = id.rref();
        assert_eq!(e.reduced, id);
        assert_eq!(e.pivots, vec![0, 1, 2]);
        assert_eq!(e.rank, 3);
    }

    #[test]
    fn rref_zero() {
        let z = Matrix::zeros(f(5), 2, 4);
        let e = z.rref();
        assert_eq!(e.reduced, z);
        assert!(e.pivots.is_empty());
        assert_eq!(e.rank, 0);
    }

    #[test]
    fn rref_rank_one() {
        // Hand elimination: R2 <- R2 - 2 R1 gives [[1,2],[0,0]].
        let m = Matrix::from_rows(f(5), &[vec![1, 2], vec![2, 4]]).unwrap();
        let e = m.rref();
        assert_eq!(e.reduced, Matrix::from_rows(f(5), &[vec![1, 2], vec![0, 0]]).unwrap());
        assert_eq!(e.pivots, vec![0]);
        assert_eq!(e.rank, 1);
    }

    #[test]
    fn kernel_and_solve() {
        let m = Matrix::from_rows(f(7), &[vec![1, 2, 3], vec![2, 4, 6]]).unwrap();
        let k = m.kernel();
        assert_eq!(k.cols(), 2);
        assert!(m.mul(&k).is_zero());
        let sol = m.solve(&[1, 2]).unwrap();
        assert_eq!(m.mul_vec(&sol.particular), vec![1, 2]);
        assert_eq!(sol.dim(), 2);
        assert!(m.solve(&[1, 3]).is_none());
    }

    #[test]
    fn inverse_and_determinant() {
        let m = Matrix::from_rows(f(7), &[vec![2, 1], vec![1, 1]]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(f(7), 2));
        assert_eq!(m.determinant(), 1);
        let s = Matrix::from_rows(f(7), &[vec![1, 2], vec![2, 4]]).unwrap();
        assert!(s.inverse().is_none());
        assert_eq!(s.determinant(), 0);
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(Matrix::new(f(3), 2, 2, vec![0; 3]).is_err());
        assert!(Matrix::new(f(3), 1, 1, vec![3]).is_err());
        assert!(Matrix::from_rows(f(3), &[vec![1], vec![1, 2]]).is_err());
    }

    #[test]
    fn kron_of_identities() {
        let a = Matrix::identity(f(3), 2);
        assert_eq!(a.kron(&a), Matrix::identity(f(3), 4));
    }

    #[test]
    fn strictly_upper() {
        let u = Matrix::unit(f(3), 3, 0, 2);
        assert!(u.is_strictly_upper_triangular());
        assert!(!u.transpose().is_strictly_upper_triangular());
        assert!(!Matrix::identity(f(3), 3).is_strictly_upper_triangular());
    }
}
