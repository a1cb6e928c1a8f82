//! Rational points of Grassmannians: canonical plane representatives, charts,
//! Plücker coordinates and enumeration by pivot pattern.
//!
//! Every r-plane in F_p^n has a unique reduced column echelon basis whose
//! pivot rows Σ form the lexicographically least r-subset with invertible
//! minor. Enumerating Grass(r, n)(F_p) therefore amounts to walking the pivot
//! patterns Σ and, for each, all values of the free entries below the pivots.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::Matrix;
use crate::subspace::Subspace;

/// Default cap on the number of points an enumeration may produce.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// An r-plane in F_p^n, stored in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlanePoint {
    subspace: Subspace,
}

impl PlanePoint {
    pub fn new(subspace: Subspace) -> Self {
        PlanePoint { subspace }
    }

    /// The plane spanned by the columns of `span`, which must have rank `r`.
    pub fn from_span(span: &Matrix, r: usize) -> Result<Self> {
        Ok(PlanePoint {
            subspace: Subspace::canonical_with_dim(span, r)?,
        })
    }

    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    /// The canonical n x r basis, identity on the rows of Σ.
    pub fn basis(&self) -> &Matrix {
        self.subspace.basis()
    }

    /// Σ, 0-based.
    pub fn sigma(&self) -> &[usize] {
        self.subspace.pivots()
    }

    /// Σ, 1-based, as used in reports.
    pub fn sigma_one_based(&self) -> Vec<usize> {
        self.sigma().iter().map(|i| i + 1).collect()
    }

    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.subspace.ambient_dim()
    }

    pub fn field(&self) -> PrimeField {
        self.subspace.field()
    }

    pub fn plucker(&self) -> PluckerVector {
        plucker(self.basis())
    }
}

/// Plücker coordinates indexed by r-subsets in lexicographic order, scaled
/// so the first nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PluckerVector {
    pub n: usize,
    pub r: usize,
    pub coords: Vec<u32>,
}

impl PluckerVector {
    /// The coordinate at the r-subset `sigma` (0-based, increasing).
    pub fn at(&self, sigma: &[usize]) -> Option<u32> {
        (0..self.n)
            .combinations(self.r)
            .position(|c| c == sigma)
            .map(|k| self.coords[k])
    }
}

/// Plücker vector of the column span of a rank-r, n x r matrix.
pub fn plucker(basis: &Matrix) -> PluckerVector {
    let field = basis.field();
    let (n, r) = (basis.rows(), basis.cols());
    let mut coords: Vec<u32> = (0..n)
        .combinations(r)
        .map(|rows| basis.select_rows(&rows).determinant())
        .collect();
    if let Some(&lead) = coords.iter().find(|&&c| c != 0) {
        let inv = field.inv(lead);
        for c in coords.iter_mut() {
            *c = field.mul(*c, inv);
        }
    }
    PluckerVector { n, r, coords }
}

/// The chart representative A · (A_Σ)^{-1}, whose rows at Σ form the
/// identity. Fails when the Σ-minor of `basis` vanishes.
pub fn chart_representative(basis: &Matrix, sigma: &[usize]) -> Result<Matrix> {
    if sigma.len() != basis.cols() || sigma.iter().any(|&i| i >= basis.rows()) {
        return Err(Error::ShapeMismatch(format!(
            "chart {:?} for an {} x {} basis",
            sigma,
            basis.rows(),
            basis.cols()
        )));
    }
    let minor = basis.select_rows(sigma);
    let inv = minor
        .inverse()
        .ok_or_else(|| Error::ChartMismatch(sigma.to_vec()))?;
    Ok(basis.mul(&inv))
}

/// Number of r-dimensional subspaces of F_q^n.
pub fn gaussian_binomial(n: usize, r: usize, q: u64) -> u128 {
    if r > n {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..r {
        num *= q.pow((n - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    num / den
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// All pivot patterns Σ ⊂ {0..n-1} of size r, lexicographically.
pub fn pivot_patterns(n: usize, r: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).combinations(r)
}

/// The free entries (row, column) of the echelon cell of Σ in column-major
/// order: column s may be nonzero at rows below σ_s that are not pivots.
pub fn free_positions(n: usize, sigma: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (s, &row) in sigma.iter().enumerate() {
        for i in row + 1..n {
            if !sigma.contains(&i) {
                out.push((i, s));
            }
        }
    }
    out
}

/// The canonical basis with identity on Σ and the given free entries.
pub(crate) fn cell_matrix(field: PrimeField, n: usize, sigma: &[usize], free: &[(usize, usize)], values: &[u32]) -> Matrix {
    let mut m = Matrix::zeros(field, n, sigma.len());
    for (s, &row) in sigma.iter().enumerate() {
        m.set(row, s, 1);
    }
    for (&(i, s), &v) in free.iter().zip(values) {
        m.set(i, s, v);
    }
    m
}

/// Every point of the echelon cell of Σ, free entries in odometer order
/// (last entry fastest).
pub fn cell_points(field: PrimeField, n: usize, sigma: Vec<usize>) -> impl Iterator<Item = PlanePoint> {
    let free = free_positions(n, &sigma);
    crate::liealg::all_vectors(field, free.len()).map(move |values| {
        let m = cell_matrix(field, n, &sigma, &free, &values);
        let pivots = sigma.clone();
        PlanePoint::new(Subspace::from_canonical_unchecked(m, pivots))
    })
}

/// Streams Grass(r, n)(F_p) in lexicographic order of (Σ, free entries).
/// Refuses when the Gaussian binomial exceeds `budget`.
pub fn enumerate_grassmannian(
    field: PrimeField,
    n: usize,
    r: usize,
    budget: u128,
) -> Result<impl Iterator<Item = PlanePoint>> {
    let total = gaussian_binomial(n, r, field.p() as u64);
    if total > budget {
        return Err(Error::budget(format!("Grass({}, {})(F_{})", r, n, field.p()), total, budget));
    }
    Ok(pivot_patterns(n, r).flat_map(move |sigma| cell_points(field, n, sigma)))
}
