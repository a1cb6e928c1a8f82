//! Restricted Lie algebras given by structure constants and a p-map on basis
//! vectors.
//!
//! The p-map is extended to arbitrary elements with Jacobson's formula (see
//! [`jacobson`]); algebras built from matrices also carry their realization so
//! that every structure-constant computation can be checked against matrix
//! arithmetic.

pub mod catalog;
pub mod jacobson;
pub mod parabolic;

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::Matrix;
use crate::subspace::Subspace;

pub use catalog::*;
pub use parabolic::Parabolic;

/// Coordinates of an element relative to the algebra's fixed basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraElement {
    coords: Vec<u32>,
}

impl AlgebraElement {
    pub fn new(coords: Vec<u32>) -> Self {
        AlgebraElement { coords }
    }

    pub fn zero(n: usize) -> Self {
        AlgebraElement { coords: vec![0; n] }
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<u32> {
        self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &AlgebraElement, field: PrimeField) -> AlgebraElement {
        AlgebraElement {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| field.add(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, c: u32, field: PrimeField) -> AlgebraElement {
        AlgebraElement {
            coords: self.coords.iter().map(|&a| field.mul(a, c)).collect(),
        }
    }
}

impl From<Vec<u32>> for AlgebraElement {
    fn from(coords: Vec<u32>) -> Self {
        AlgebraElement { coords }
    }
}

/// Solves for coordinates of a flattened matrix in a fixed basis of matrices.
#[derive(Clone, Debug)]
struct CoordinateMap {
    basis: Matrix,
    rows: Vec<usize>,
    inv: Matrix,
}

impl CoordinateMap {
    fn new(field: PrimeField, mats: &[Matrix]) -> Result<Self> {
        let cols: Vec<Vec<u32>> = mats.iter().map(|m| m.data().to_vec()).collect();
        let size = mats.first().map_or(0, |m| m.data().len());
        let basis = Matrix::from_columns(field, size, &cols);
        let e = basis.transpose().rref();
        if e.rank != mats.len() {
            return Err(Error::InvalidInput(
                "realizing matrices are linearly dependent".into(),
            ));
        }
        let rows = e.pivots;
        let inv = basis
            .select_rows(&rows)
            .inverse()
            .expect("pivot rows of a full-rank matrix form an invertible block");
        Ok(CoordinateMap { basis, rows, inv })
    }

    fn coords(&self, m: &Matrix) -> Option<Vec<u32>> {
        let v = m.data();
        let sel: Vec<u32> = self.rows.iter().map(|&i| v[i]).collect();
        let c = self.inv.mul_vec(&sel);
        (self.basis.mul_vec(&c) == v).then_some(c)
    }
}

/// A finite-dimensional restricted Lie algebra over F_p.
#[derive(Clone, Debug)]
pub struct RestrictedLieAlgebra {
    name: String,
    field: PrimeField,
    labels: Vec<String>,
    /// `structure[(i*n + j)*n + k]` is the coefficient of x_k in [x_i, x_j].
    structure: Vec<u32>,
    /// ad(x_i); column j holds [x_i, x_j].
    ad_basis: Vec<Matrix>,
    p_map: Vec<Vec<u32>>,
    realization: Option<Vec<Matrix>>,
    coordinate_map: Option<CoordinateMap>,
    nilradical: Option<Matrix>,
}

impl RestrictedLieAlgebra {
    /// Builds an algebra from dense structure constants and the p-map on
    /// basis vectors, checking antisymmetry, the Jacobi identity and
    /// restrictedness.
    pub fn new(
        name: impl Into<String>,
        field: PrimeField,
        labels: Vec<String>,
        structure: Vec<u32>,
        p_map: Vec<Vec<u32>>,
    ) -> Result<Self> {
        let g = Self::new_unchecked(name, field, labels, structure, p_map)?;
        g.validate()?;
        Ok(g)
    }

    /// Shape checks only.
    pub fn new_unchecked(
        name: impl Into<String>,
        field: PrimeField,
        labels: Vec<String>,
        structure: Vec<u32>,
        p_map: Vec<Vec<u32>>,
    ) -> Result<Self> {
        let n = labels.len();
        if structure.len() != n * n * n {
            return Err(Error::ShapeMismatch(format!(
                "{} structure constants for dimension {}",
                structure.len(),
                n
            )));
        }
        if p_map.len() != n || p_map.iter().any(|v| v.len() != n) {
            return Err(Error::ShapeMismatch("p-map table must be n vectors of length n".into()));
        }
        let structure: Vec<u32> = structure.into_iter().map(|c| c % field.p()).collect();
        let ad_basis = (0..n)
            .map(|i| {
                let mut m = Matrix::zeros(field, n, n);
                for j in 0..n {
                    for k in 0..n {
                        m.set(k, j, structure[(i * n + j) * n + k]);
                    }
                }
                m
            })
            .collect();
        Ok(RestrictedLieAlgebra {
            name: name.into(),
            field,
            labels,
            structure,
            ad_basis,
            p_map,
            realization: None,
            coordinate_map: None,
            nilradical: None,
        })
    }

    /// Builds the restricted subalgebra of gl_m spanned by `mats`: structure
    /// constants from commutators, p-map from p-th matrix powers. Fails if the
    /// span is not closed under either operation.
    pub fn from_matrices(
        name: impl Into<String>,
        field: PrimeField,
        labels: Vec<String>,
        mats: Vec<Matrix>,
    ) -> Result<Self> {
        let n = mats.len();
        if labels.len() != n {
            return Err(Error::ShapeMismatch("one label per matrix".into()));
        }
        let cmap = CoordinateMap::new(field, &mats)?;
        let mut structure = vec![0u32; n * n * n];
        for i in 0..n {
            for j in 0..n {
                let c = cmap.coords(&mats[i].commutator(&mats[j])).ok_or_else(|| {
                    Error::InvalidInput(format!(
                        "span not closed under brackets: [{}, {}]",
                        labels[i], labels[j]
                    ))
                })?;
                structure[(i * n + j) * n..(i * n + j + 1) * n].copy_from_slice(&c);
            }
        }
        let p = field.p() as u64;
        let p_map = mats
            .iter()
            .zip(&labels)
            .map(|(m, l)| {
                cmap.coords(&m.pow(p)).ok_or_else(|| {
                    Error::InvalidInput(format!("span not closed under p-th powers: {}", l))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let mut g = Self::new_unchecked(name, field, labels, structure, p_map)?;
        g.realization = Some(mats);
        g.coordinate_map = Some(cmap);
        Ok(g)
    }

    pub(crate) fn with_nilradical(mut self, basis: Matrix) -> Self {
        debug_assert_eq!(basis.rows(), self.dim());
        self.nilradical = Some(basis);
        self
    }

    pub(crate) fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> u32 {
        let n = self.dim();
        self.structure[(i * n + j) * n + k]
    }

    pub fn p_map_table(&self) -> &[Vec<u32>] {
        &self.p_map
    }

    pub fn realization(&self) -> Option<&[Matrix]> {
        self.realization.as_deref()
    }

    /// Basis (as columns of a `dim x d` matrix) of the standard nilradical,
    /// when the constructor knows one.
    pub fn nilradical(&self) -> Option<&Matrix> {
        self.nilradical.as_ref()
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElement {
        let mut c = vec![0; self.dim()];
        c[i] = 1;
        AlgebraElement::new(c)
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement::zero(self.dim())
    }

    /// Element from signed coordinates.
    pub fn element(&self, coords: &[i64]) -> Result<AlgebraElement> {
        self.check_len(coords.len())?;
        Ok(AlgebraElement::new(
            coords.iter().map(|&c| self.field.reduce(c)).collect(),
        ))
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> AlgebraElement {
        AlgebraElement::new((0..self.dim()).map(|_| rng.gen_range(0..self.p())).collect())
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.dim() {
            return Err(Error::AlgebraMismatch(format!(
                "element of length {} in {} (dimension {})",
                len,
                self.name,
                self.dim()
            )));
        }
        Ok(())
    }

    /// Matrix of ad(x) on the algebra.
    pub fn ad(&self, x: &AlgebraElement) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field, n, n);
        for (i, &c) in x.coords().iter().enumerate() {
            m.add_scaled_assign(c, &self.ad_basis[i]);
        }
        m
    }

    pub fn ad_basis(&self, i: usize) -> &Matrix {
        &self.ad_basis[i]
    }

    pub fn bracket(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_len(x.len())?;
        self.check_len(y.len())?;
        Ok(self.bracket_coords(x.coords(), y.coords()))
    }

    pub(crate) fn bracket_coords(&self, x: &[u32], y: &[u32]) -> AlgebraElement {
        let n = self.dim();
        let f = self.field;
        let p = f.p() as u64;
        let mut out = vec![0u64; n];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let ab = (a as u64 * b as u64) % p;
                let row = &self.structure[(i * n + j) * n..(i * n + j + 1) * n];
                for (o, &c) in out.iter_mut().zip(row) {
                    if c != 0 {
                        *o = (*o + ab * c as u64) % p;
                    }
                }
            }
        }
        AlgebraElement::new(out.into_iter().map(|v| v as u32).collect())
    }

    /// x^[p], extended off the basis by p-semilinearity and Jacobson's formula.
    pub fn p_power(&self, x: &AlgebraElement) -> AlgebraElement {
        assert_eq!(x.len(), self.dim(), "element of the wrong algebra");
        jacobson::p_power(self, x.coords())
    }

    pub fn is_p_nilpotent(&self, x: &AlgebraElement) -> bool {
        self.p_power(x).is_zero()
    }

    /// The realizing matrix of `x`, when the algebra sits inside some gl_m.
    pub fn realize(&self, x: &AlgebraElement) -> Option<Matrix> {
        let mats = self.realization.as_ref()?;
        let m = mats[0].rows();
        let mut out = Matrix::zeros(self.field, m, m);
        for (c, b) in x.coords().iter().zip(mats) {
            out.add_scaled_assign(*c, b);
        }
        Some(out)
    }

    /// Coordinates of a matrix lying in the realized span.
    pub fn coordinates_of(&self, m: &Matrix) -> Option<AlgebraElement> {
        self.coordinate_map.as_ref()?.coords(m).map(AlgebraElement::new)
    }

    /// Checks antisymmetry, the Jacobi identity, restrictedness
    /// (ad(x_i^[p]) = ad(x_i)^p) and, when present, agreement with the
    /// realization.
    pub fn validate(&self) -> Result<()> {
        let n = self.dim();
        let f = self.field;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if self.structure_constant(i, j, k) != f.neg(self.structure_constant(j, i, k)) {
                        return Err(Error::InvariantViolation(format!(
                            "{}: antisymmetry fails for ({}, {})",
                            self.name, self.labels[i], self.labels[j]
                        )));
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in j + 1..n {
                    let t1 = self.ad_basis[i].mul_vec(&self.ad_basis[j].column(k));
                    let t2 = self.ad_basis[j].mul_vec(&self.ad_basis[k].column(i));
                    let t3 = self.ad_basis[k].mul_vec(&self.ad_basis[i].column(j));
                    if t1.iter().zip(&t2).zip(&t3).any(|((&a, &b), &c)| f.add(f.add(a, b), c) != 0) {
                        return Err(Error::InvariantViolation(format!(
                            "{}: Jacobi fails for ({}, {}, {})",
                            self.name, self.labels[i], self.labels[j], self.labels[k]
                        )));
                    }
                }
            }
        }
        for i in 0..n {
            let lhs = self.ad(&AlgebraElement::new(self.p_map[i].clone()));
            let rhs = self.ad_basis[i].pow(f.p() as u64);
            if lhs != rhs {
                return Err(Error::InvariantViolation(format!(
                    "{}: ad({}^[p]) != ad({})^p",
                    self.name, self.labels[i], self.labels[i]
                )));
            }
        }
        if let Some(mats) = &self.realization {
            for i in 0..n {
                for j in 0..n {
                    let sc = self.bracket_coords(self.basis_element(i).coords(), self.basis_element(j).coords());
                    if self.realize(&sc).as_ref() != Some(&mats[i].commutator(&mats[j])) {
                        return Err(Error::InvariantViolation(format!(
                            "{}: realization bracket mismatch at ({}, {})",
                            self.name, self.labels[i], self.labels[j]
                        )));
                    }
                }
                let pm = AlgebraElement::new(self.p_map[i].clone());
                if self.realize(&pm).as_ref() != Some(&mats[i].pow(f.p() as u64)) {
                    return Err(Error::InvariantViolation(format!(
                        "{}: realization p-power mismatch at {}",
                        self.name, self.labels[i]
                    )));
                }
            }
        }
        if let Some(nil) = &self.nilradical {
            let s = Subspace::canonical(nil);
            for a in s.basis_vectors() {
                for b in s.basis_vectors() {
                    if !s.contains_vector(self.bracket_coords(&a, &b).coords()) {
                        return Err(Error::InvariantViolation(format!(
                            "{}: recorded nilradical is not a subalgebra",
                            self.name
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Every p-nilpotent element over F_p, by exhaustion over the p^n points.
    pub fn nilpotent_cone_points(&self, budget: u128) -> Result<Vec<AlgebraElement>> {
        let total = (self.p() as u128)
            .checked_pow(self.dim() as u32)
            .unwrap_or(u128::MAX);
        if total > budget {
            return Err(Error::budget("nilpotent cone scan", total, budget));
        }
        Ok(all_vectors(self.field, self.dim())
            .map(AlgebraElement::new)
            .filter(|x| self.is_p_nilpotent(x))
            .collect())
    }

    /// Dimensions of the lower central series g = g^1 ⊇ g^2 ⊇ ..., stopping
    /// at the first repeat.
    pub fn lower_central_series_dims(&self) -> Vec<usize> {
        let n = self.dim();
        let mut term = Subspace::full(self.field, n);
        let mut dims = vec![n];
        loop {
            let mut gens = Vec::new();
            for i in 0..n {
                for v in term.basis_vectors() {
                    gens.push(self.ad_basis[i].mul_vec(&v));
                }
            }
            let next = Subspace::from_vectors(self.field, n, &gens);
            if next.dim() == term.dim() {
                return dims;
            }
            dims.push(next.dim());
            term = next;
            if term.dim() == 0 {
                return dims;
            }
        }
    }

    /// Whether x^[p] = 0 for every x. Decided structurally when the basis
    /// table vanishes and brackets of length p vanish; otherwise by scanning
    /// all p^n elements within `budget`.
    pub fn has_trivial_p_map(&self, budget: u128) -> Result<bool> {
        if self.p_map.iter().any(|v| v.iter().any(|&c| c != 0)) {
            return Ok(false);
        }
        let lcs = self.lower_central_series_dims();
        // lcs[k] is the dimension of the (k+1)-th term; Jacobson's correction
        // lies in the p-th term.
        if lcs.last() == Some(&0) && lcs.len() <= self.p() as usize {
            return Ok(true);
        }
        let total = (self.p() as u128)
            .checked_pow(self.dim() as u32)
            .unwrap_or(u128::MAX);
        if total > budget {
            return Err(Error::budget("p-map triviality scan", total, budget));
        }
        Ok(all_vectors(self.field, self.dim())
            .all(|v| self.p_power(&AlgebraElement::new(v)).is_zero()))
    }
}

/// Every vector of F_p^n in lexicographic order (last coordinate fastest).
pub fn all_vectors(field: PrimeField, n: usize) -> impl Iterator<Item = Vec<u32>> {
    let p = field.p();
    let mut next = Some(vec![0u32; n]);
    std::iter::from_fn(move || {
        let cur = next.take()?;
        let mut succ = cur.clone();
        let mut k = n;
        loop {
            if k == 0 {
                break;
            }
            k -= 1;
            succ[k] += 1;
            if succ[k] < p {
                next = Some(succ);
                break;
            }
            succ[k] = 0;
        }
        Some(cur)
    })
}
