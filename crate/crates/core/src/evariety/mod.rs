//! Elementary subalgebras: the membership predicate, exhaustive enumeration of
//! E(r, g)(F_p), maximality, the Heisenberg/Lagrangian correspondence and the
//! triangularization algorithms for gl_n and sp_2n.

pub mod heisenberg;
pub mod maximal;
pub mod search;
pub mod triangularize;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::grassmann::PlanePoint;
use crate::liealg::{all_vectors, AlgebraElement, RestrictedLieAlgebra};
use crate::matrix::Matrix;

pub use heisenberg::{is_lagrangian_preimage, lagrangian_count, SymplecticQuotient};
pub use maximal::{is_maximal_elementary, is_maximal_via_socle, socle_dimension};
pub use search::{enumerate_elementary, Enumeration, SearchOptions};
pub use triangularize::{engel_triangularize, random_symplectic, symplectic_flag_triangularize};

/// Planes with at most this many elements get the full-scan certificate.
pub const DEFAULT_FULL_SCAN_LIMIT: u64 = 4096;

/// How the vanishing of the p-map on a plane was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certificate {
    /// Every element of the plane was checked.
    FullScan,
    /// The basis vectors and their pairwise sums were checked.
    BasisAndPairs,
}

impl Certificate {
    pub fn as_str(self) -> &'static str {
        match self {
            Certificate::FullScan => "full-scan",
            Certificate::BasisAndPairs => "basis-and-pairs",
        }
    }
}

/// A point of E(r, g)(F_p).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ElementaryPoint {
    plane: PlanePoint,
    basis: Vec<AlgebraElement>,
    certificate: Certificate,
}

impl ElementaryPoint {
    /// Checks the plane and wraps it, or fails with the first violation.
    pub fn new(g: &RestrictedLieAlgebra, plane: PlanePoint, full_scan_limit: u64) -> Result<Self> {
        if plane.ambient_dim() != g.dim() || plane.field() != g.field() {
            return Err(Error::AlgebraMismatch(format!(
                "plane in F_{}^{} for {}",
                plane.field().p(),
                plane.ambient_dim(),
                g.name()
            )));
        }
        match certify(g, plane.basis(), full_scan_limit) {
            Some(certificate) => Ok(ElementaryPoint {
                basis: plane.basis().columns().into_iter().map(AlgebraElement::new).collect(),
                plane,
                certificate,
            }),
            None => Err(Error::InvalidInput(format!(
                "plane with pivots {:?} is not elementary in {}",
                plane.sigma_one_based(),
                g.name()
            ))),
        }
    }

    /// The plane spanned by the columns of `span` (rank r).
    pub fn from_span(g: &RestrictedLieAlgebra, span: &Matrix) -> Result<Self> {
        let r = span.rank();
        Self::new(g, PlanePoint::from_span(span, r)?, DEFAULT_FULL_SCAN_LIMIT)
    }

    pub(crate) fn from_parts(plane: PlanePoint, certificate: Certificate) -> Self {
        ElementaryPoint {
            basis: plane.basis().columns().into_iter().map(AlgebraElement::new).collect(),
            plane,
            certificate,
        }
    }

    pub fn plane(&self) -> &PlanePoint {
        &self.plane
    }

    /// u_1, ..., u_r: the canonical basis columns.
    pub fn basis_elements(&self) -> &[AlgebraElement] {
        &self.basis
    }

    pub fn certificate(&self) -> Certificate {
        self.certificate
    }

    pub fn r(&self) -> usize {
        self.plane.dim()
    }

    pub fn field(&self) -> PrimeField {
        self.plane.field()
    }

    pub fn sigma(&self) -> &[usize] {
        self.plane.sigma()
    }
}

/// Whether the plane is an abelian subalgebra on which the p-map vanishes.
pub fn is_elementary(g: &RestrictedLieAlgebra, plane: &PlanePoint) -> bool {
    plane.ambient_dim() == g.dim() && certify(g, plane.basis(), DEFAULT_FULL_SCAN_LIMIT).is_some()
}

/// Checks commutativity of the basis and vanishing of the p-map; returns
/// which certificate was produced.
pub(crate) fn certify(g: &RestrictedLieAlgebra, basis: &Matrix, full_scan_limit: u64) -> Option<Certificate> {
    let cols = basis.columns();
    for (s, a) in cols.iter().enumerate() {
        for b in &cols[s + 1..] {
            if !g.bracket_coords(a, b).is_zero() {
                return None;
            }
        }
    }
    let f = g.field();
    let total = (f.p() as u128).checked_pow(cols.len() as u32).unwrap_or(u128::MAX);
    if total <= full_scan_limit as u128 {
        for c in all_vectors(f, cols.len()) {
            let x = AlgebraElement::new(basis.mul_vec(&c));
            if !g.p_power(&x).is_zero() {
                return None;
            }
        }
        Some(Certificate::FullScan)
    } else {
        for (s, a) in cols.iter().enumerate() {
            if !g.p_power(&AlgebraElement::new(a.clone())).is_zero() {
                return None;
            }
            for b in &cols[s + 1..] {
                let sum = AlgebraElement::new(a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect());
                if !g.p_power(&sum).is_zero() {
                    return None;
                }
            }
        }
        Some(Certificate::BasisAndPairs)
    }
}

/// The block plane ε_1 ⊕ ... ⊕ ε_s inside the direct sum of the algebras
/// the points come from (bases concatenated in order).
pub fn direct_sum_planes(points: &[&ElementaryPoint]) -> Result<PlanePoint> {
    let first = points
        .first()
        .ok_or_else(|| Error::InvalidInput("direct sum of no planes".into()))?;
    let f = first.field();
    let n: usize = points.iter().map(|p| p.plane().ambient_dim()).sum();
    let r: usize = points.iter().map(|p| p.r()).sum();
    let mut m = Matrix::zeros(f, n, r);
    let (mut ro, mut co) = (0, 0);
    for pt in points {
        let b = pt.plane().basis();
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                m.set(ro + i, co + j, b.get(i, j));
            }
        }
        ro += b.rows();
        co += b.cols();
    }
    PlanePoint::from_span(&m, r)
}
