//! Subspaces of F_p^n in canonical form.
//!
//! A subspace is stored by its reduced column echelon basis: column s has a 1
//! in pivot row `pivots[s]`, zeros above it and zeros in every other pivot row,
//! with pivot rows increasing. This form is unique, so equality of subspaces
//! is equality of the stored matrices, and the pivot rows double as the chart
//! index of the plane.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::Matrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// The span of the columns of `span`, in canonical form. Idempotent.
    pub fn canonical(span: &Matrix) -> Subspace {
        let e = span.transpose().rref();
        let rows: Vec<usize> = (0..e.rank).collect();
        let basis = e.reduced.select_rows(&rows).transpose();
        Subspace {
            basis,
            pivots: e.pivots,
        }
    }

    /// As [`Subspace::canonical`], but fails unless the span has dimension
    /// exactly `dim`.
    pub fn canonical_with_dim(span: &Matrix, dim: usize) -> Result<Subspace> {
        let s = Subspace::canonical(span);
        if s.dim() != dim {
            return Err(Error::DimensionTooSmall {
                expected: dim,
                found: s.dim(),
            });
        }
        Ok(s)
    }

    /// Wraps a matrix already known to be in reduced column echelon form.
    pub(crate) fn from_canonical_unchecked(basis: Matrix, pivots: Vec<usize>) -> Subspace {
        debug_assert_eq!(Subspace::canonical(&basis).basis, basis);
        Subspace { basis, pivots }
    }

    pub fn zero(field: PrimeField, n: usize) -> Subspace {
        Subspace {
            basis: Matrix::zeros(field, n, 0),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, n: usize) -> Subspace {
        Subspace {
            basis: Matrix::identity(field, n),
            pivots: (0..n).collect(),
        }
    }

    pub fn from_vectors(field: PrimeField, n: usize, vectors: &[Vec<u32>]) -> Subspace {
        Subspace::canonical(&Matrix::from_columns(field, n, vectors))
    }

    pub fn field(&self) -> PrimeField {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    /// The canonical `n x r` basis matrix.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// Pivot rows, increasing, 0-based.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> Vec<Vec<u32>> {
        self.basis.columns()
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        assert_eq!(v.len(), self.ambient_dim());
        let c: Vec<u32> = self.pivots.iter().map(|&i| v[i]).collect();
        (self.basis.mul_vec(&c) == v).then_some(c)
    }

    pub fn contains_vector(&self, v: &[u32]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.basis_vectors().iter().all(|v| self.contains_vector(v))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim() != other.ambient_dim() || self.field() != other.field() {
            return Err(Error::ShapeMismatch(format!(
                "subspaces of F_{}^{} and F_{}^{}",
                self.field().p(),
                self.ambient_dim(),
                other.field().p(),
                other.ambient_dim()
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Subspace::canonical(&self.basis.hstack(&other.basis)))
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        // x = A a = B b  <=>  [A | -B] (a, b) = 0
        let stacked = self.basis.hstack(&other.basis.neg());
        let k = stacked.kernel();
        let a_part: Vec<usize> = (0..self.dim()).collect();
        let coeffs = k.select_rows(&a_part);
        Ok(Subspace::canonical(&self.basis.mul(&coeffs)))
    }

    /// Extends the canonical basis of `self` by standard basis vectors to a
    /// basis of `outer`, returning only the added vectors of `outer`'s basis.
    /// `self` must be contained in `outer`.
    pub fn complement_in(&self, outer: &Subspace) -> Vec<Vec<u32>> {
        let mut acc = self.clone();
        let mut extra = Vec::new();
        for v in outer.basis_vectors() {
            if !acc.contains_vector(&v) {
                acc = acc
                    .sum(&Subspace::from_vectors(self.field(), self.ambient_dim(), std::slice::from_ref(&v)))
                    .expect("same ambient space");
                extra.push(v);
            }
        }
        extra
    }

    /// The image of the subspace under a linear map.
    pub fn image_under(&self, map: &Matrix) -> Subspace {
        Subspace::canonical(&map.mul(&self.basis))
    }
}

/// The column space of `m` as a canonical subspace.
pub fn column_space(m: &Matrix) -> Subspace {
    Subspace::canonical(m)
}

/// The right null space of `m` as a canonical subspace.
pub fn null_space(m: &Matrix) -> Subspace {
    Subspace::canonical(&m.kernel())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn e(n: usize, i: usize) -> Vec<u32> {
        let mut v = vec![0; n];
        v[i] = 1;
        v
    }

    #[test]
    fn canonical_of_skewed_basis() {
        let fld = f(5);
        // columns e1 + e2, e2
        let span = Matrix::from_columns(fld, 3, &[vec![1, 1, 0], vec![0, 1, 0]]);
        let s = Subspace::canonical(&span);
        assert_eq!(s.basis_vectors(), vec![e(3, 0), e(3, 1)]);
        assert_eq!(s.pivots(), &[0, 1]);
        assert_eq!(Subspace::canonical(s.basis()), s);
    }

    #[test]
    fn zero_span() {
        let fld = f(3);
        let s = Subspace::canonical(&Matrix::zeros(fld, 4, 2));
        assert_eq!(s.dim(), 0);
        assert!(Subspace::canonical_with_dim(&Matrix::zeros(fld, 4, 2), 1).is_err());
        assert!(Subspace::canonical_with_dim(&Matrix::zeros(fld, 4, 2), 0).is_ok());
    }

    #[test]
    fn sum_and_intersection_of_coordinate_lines() {
        let fld = f(5);
        let a = Subspace::from_vectors(fld, 3, &[e(3, 0)]);
        let b = Subspace::from_vectors(fld, 3, &[e(3, 1)]);
        assert_eq!(a.sum(&b).unwrap().dim(), 2);
        assert_eq!(a.intersection(&b).unwrap().dim(), 0);
        assert_eq!(a.sum(&a).unwrap(), a);
        assert_eq!(a.intersection(&a).unwrap(), a);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let fld = f(5);
        let a = Subspace::full(fld, 3);
        let b = Subspace::full(fld, 4);
        assert!(a.sum(&b).is_err());
        assert!(a.intersection(&b).is_err());
    }

    #[test]
    fn coordinates_roundtrip() {
        let fld = f(7);
        let s = Subspace::from_vectors(fld, 4, &[vec![1, 2, 0, 3], vec![0, 1, 1, 1]]);
        let v = s.basis().mul_vec(&[3, 5]);
        assert_eq!(s.coordinates(&v), Some(vec![3, 5]));
        assert!(!s.contains_vector(&e(4, 3)));
    }

    #[test]
    fn complement() {
        let fld = f(3);
        let outer = Subspace::full(fld, 3);
        let inner = Subspace::from_vectors(fld, 3, &[vec![1, 1, 0]]);
        let extra = inner.complement_in(&outer);
        assert_eq!(extra.len(), 2);
        let mut all = extra.clone();
        all.push(vec![1, 1, 0]);
        assert_eq!(Subspace::from_vectors(fld, 3, &all).dim(), 3);
    }
}
