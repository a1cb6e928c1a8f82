//! The symplectic quotient of a Heisenberg algebra and the Lagrangian
//! description of its maximal elementary subalgebras.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::liealg::{all_vectors, RestrictedLieAlgebra};
use crate::matrix::Matrix;
use crate::subspace::{null_space, Subspace};

use super::ElementaryPoint;

/// W = g / z with ⟨x, y⟩ = the z-coefficient of [σx, σy], where σ picks the
/// span of the standard basis vectors complementary to the center.
#[derive(Clone, Debug)]
pub struct SymplecticQuotient {
    field: PrimeField,
    center: Vec<u32>,
    lifts: Vec<Vec<u32>>,
    form: Matrix,
    /// Coordinates in (lifts..., center) of a vector of g.
    to_coords: Matrix,
}

impl SymplecticQuotient {
    /// Fails unless g has a one-dimensional center equal to [g, g], on which
    /// the induced form is nondegenerate, and a vanishing p-map.
    pub fn new(g: &RestrictedLieAlgebra) -> Result<Self> {
        let field = g.field();
        let n = g.dim();
        let ads: Vec<Matrix> = (0..n).map(|i| g.ad_basis(i).clone()).collect();
        let center = null_space(&Matrix::vstack_all(field, n, &ads));
        if center.dim() != 1 {
            return Err(Error::NotHeisenberg(format!("center of {} has dimension {}", g.name(), center.dim())));
        }
        let z = center.basis_vectors().remove(0);
        let derived: Vec<Vec<u32>> = ads.iter().flat_map(|a| a.columns()).collect();
        if Subspace::from_vectors(field, n, &derived) != center {
            return Err(Error::NotHeisenberg(format!("[g, g] is not the center of {}", g.name())));
        }
        if !g.has_trivial_p_map(1 << 24)? {
            return Err(Error::NotHeisenberg(format!("{} has a nonzero p-map", g.name())));
        }
        let lifts = center.complement_in(&Subspace::full(field, n));
        let mut cols = lifts.clone();
        cols.push(z.clone());
        let to_coords = Matrix::from_columns(field, n, &cols)
            .inverse()
            .expect("lifts and center form a basis");
        let w = lifts.len();
        let mut form = Matrix::zeros(field, w, w);
        for a in 0..w {
            for b in 0..w {
                let br = g.bracket_coords(&lifts[a], &lifts[b]);
                form.set(a, b, to_coords.mul_vec(br.coords())[w]);
            }
        }
        if form.rank() != w {
            return Err(Error::NotHeisenberg(format!("induced form on {} is degenerate", g.name())));
        }
        Ok(SymplecticQuotient {
            field,
            center: z,
            lifts,
            form,
            to_coords,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.lifts.len()
    }

    pub fn form(&self) -> &Matrix {
        &self.form
    }

    pub fn center(&self) -> &[u32] {
        &self.center
    }

    /// The image in W of a vector of g.
    pub fn project(&self, x: &[u32]) -> Vec<u32> {
        let mut c = self.to_coords.mul_vec(x);
        c.truncate(self.dim());
        c
    }

    pub fn pairing(&self, a: &[u32], b: &[u32]) -> u32 {
        let fb = self.form.mul_vec(b);
        a.iter().zip(&fb).fold(0, |acc, (&x, &y)| self.field.mul_add(acc, x, y))
    }

    pub fn is_isotropic(&self, vectors: &[Vec<u32>]) -> bool {
        vectors
            .iter()
            .enumerate()
            .all(|(s, a)| vectors[s + 1..].iter().all(|b| self.pairing(a, b) == 0))
    }

    pub fn is_lagrangian(&self, sub: &Subspace) -> bool {
        2 * sub.dim() == self.dim() && self.is_isotropic(&sub.basis_vectors())
    }

    /// Every Lagrangian subspace of W, by scanning isotropic flags. Intended
    /// for small W.
    pub fn lagrangians(&self) -> Vec<Subspace> {
        let mut acc = Vec::new();
        self.extend_isotropic(&mut Vec::new(), &mut acc);
        let mut seen = std::collections::HashSet::new();
        acc.retain(|s| seen.insert(s.clone()));
        acc
    }

    fn extend_isotropic(&self, chosen: &mut Vec<Vec<u32>>, out: &mut Vec<Subspace>) {
        let w = self.dim();
        if 2 * chosen.len() == w {
            out.push(Subspace::from_vectors(self.field, w, chosen));
            return;
        }
        let span = Subspace::from_vectors(self.field, w, chosen);
        for v in all_vectors(self.field, w) {
            if v.iter().all(|&c| c == 0) || span.contains_vector(&v) {
                continue;
            }
            if chosen.iter().all(|u| self.pairing(u, &v) == 0) {
                chosen.push(v);
                self.extend_isotropic(chosen, out);
                chosen.pop();
            }
        }
    }
}

/// Whether the plane contains the center and projects onto a Lagrangian
/// subspace of the symplectic quotient.
pub fn is_lagrangian_preimage(q: &SymplecticQuotient, pt: &ElementaryPoint) -> bool {
    let sub = pt.plane().subspace();
    if !sub.contains_vector(q.center()) {
        return false;
    }
    let images: Vec<Vec<u32>> = sub.basis_vectors().iter().map(|v| q.project(v)).collect();
    q.is_lagrangian(&Subspace::from_vectors(q.field(), q.dim(), &images))
}

/// Number of Lagrangian subspaces of a 2m-dimensional symplectic space over
/// F_q: ∏_{i=1}^{m} (q^i + 1).
pub fn lagrangian_count(m: usize, q: u64) -> u128 {
    (1..=m as u32).map(|i| (q as u128).pow(i) + 1).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{heisenberg, sl};

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn quotient_of_heisenberg() {
        let h = heisenberg(f(5), 3).unwrap();
        let q = SymplecticQuotient::new(&h).unwrap();
        assert_eq!(q.dim(), 4);
        assert_eq!(q.center(), &[0, 0, 0, 0, 1]);
        let form = q.form();
        assert_eq!(form.transpose().neg(), *form);
    }

    #[test]
    fn rejects_non_heisenberg() {
        assert!(matches!(SymplecticQuotient::new(&sl(f(3), 2).unwrap()), Err(Error::NotHeisenberg(_))));
    }

    #[test]
    fn lagrangian_counts() {
        assert_eq!(lagrangian_count(1, 3), 4);
        assert_eq!(lagrangian_count(2, 3), 40);
        let q = SymplecticQuotient::new(&heisenberg(f(3), 3).unwrap()).unwrap();
        assert_eq!(q.lagrangians().len(), 40);
    }
}
