//! Conjugating elementary subalgebras of gl_n and sp_2n into the standard
//! nilradical by building invariant flags.

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::liealg::{symplectic_form, RestrictedLieAlgebra};
use crate::matrix::Matrix;
use crate::subspace::{null_space, Subspace};

use super::ElementaryPoint;

fn realized_basis(g: &RestrictedLieAlgebra, pt: &ElementaryPoint) -> Result<Vec<Matrix>> {
    if g.realization().is_none() {
        return Err(Error::InvalidInput(format!("{} has no matrix realization", g.name())));
    }
    Ok(pt.basis_elements().iter().map(|u| g.realize(u).unwrap()).collect())
}

fn matrix_size(g: &RestrictedLieAlgebra) -> usize {
    g.realization().and_then(|r| r.first()).map_or(0, |m| m.rows())
}

/// Rows whose common kernel is the span of `flag`.
fn annihilator(field: PrimeField, m: usize, flag: &[Vec<u32>]) -> Matrix {
    if flag.is_empty() {
        return Matrix::identity(field, m);
    }
    Matrix::from_columns(field, m, flag).transpose().kernel().transpose()
}

/// The first canonical basis vector of `{v : constraints v = 0}` not already
/// in the span of `flag`.
fn next_flag_vector(field: PrimeField, m: usize, constraints: &[Matrix], flag: &[Vec<u32>]) -> Result<Vec<u32>> {
    let span = Subspace::from_vectors(field, m, flag);
    let candidates = if constraints.is_empty() {
        Subspace::full(field, m)
    } else {
        null_space(&Matrix::vstack_all(field, m, constraints))
    };
    candidates
        .basis_vectors()
        .into_iter()
        .find(|v| !span.contains_vector(v))
        .ok_or_else(|| Error::InvariantViolation("no invariant vector extends the flag: operators are not commuting nilpotents".into()))
}

/// Returns g with g u g^{-1} strictly upper triangular for every u in ε.
/// Builds v_1, v_2, ... with u v_k ∈ span(v_1..v_{k-1}) for all u, each
/// v_k the first canonical vector of the preimage not yet in the flag; then
/// g = [v_1 ... v_n]^{-1}.
pub fn engel_triangularize(g: &RestrictedLieAlgebra, pt: &ElementaryPoint) -> Result<Matrix> {
    let ops = realized_basis(g, pt)?;
    let field = g.field();
    let m = matrix_size(g);
    let mut flag: Vec<Vec<u32>> = Vec::with_capacity(m);
    for _ in 0..m {
        let ann = annihilator(field, m, &flag);
        let constraints: Vec<Matrix> = ops.iter().map(|u| ann.mul(u)).collect();
        let v = next_flag_vector(field, m, &constraints, &flag)?;
        flag.push(v);
    }
    let conj = Matrix::from_columns(field, m, &flag)
        .inverse()
        .expect("a full flag is a basis");
    let inv = Matrix::from_columns(field, m, &flag);
    for u in &ops {
        if !conj.mul(u).mul(&inv).is_strictly_upper_triangular() {
            return Err(Error::InvariantViolation("Engel flag failed to triangularize".into()));
        }
    }
    Ok(conj)
}

/// Whether a 2n x 2n matrix lies in the standard nilradical
/// [[A, B], [0, −A^T]] with A strictly upper triangular.
pub fn in_symplectic_nilradical(m: &Matrix) -> bool {
    let n = m.rows() / 2;
    (0..n).all(|i| (0..n).all(|j| m.get(n + i, j) == 0)) && {
        let a: Vec<usize> = (0..n).collect();
        m.select_rows(&a).select_cols(&a).is_strictly_upper_triangular()
    }
}

/// Returns g ∈ Sp_2n with g u g^{-1} in the standard nilradical for every u
/// in ε ⊂ sp_2n. Grows an ε-invariant isotropic flag V_1 ⊂ ... ⊂ V_n, each
/// new vector taken from V_i^⊥ with u v ∈ V_i, then completes V_n to a
/// symplectic basis [V | W] and inverts.
pub fn symplectic_flag_triangularize(g: &RestrictedLieAlgebra, pt: &ElementaryPoint) -> Result<Matrix> {
    let ops = realized_basis(g, pt)?;
    let field = g.field();
    let m = matrix_size(g);
    if !m.is_multiple_of(2) {
        return Err(Error::InvalidInput(format!("{} is not realized in an even-dimensional gl", g.name())));
    }
    let n = m / 2;
    let s = symplectic_form(field, n);
    for u in &ops {
        if u.transpose().mul(&s) != s.mul(u).neg() {
            return Err(Error::InvalidInput(format!("{} is not realized inside sp_{}", g.name(), m)));
        }
    }
    let mut flag: Vec<Vec<u32>> = Vec::with_capacity(n);
    for _ in 0..n {
        let mut constraints = Vec::new();
        if !flag.is_empty() {
            constraints.push(Matrix::from_columns(field, m, &flag).transpose().mul(&s));
        }
        let ann = annihilator(field, m, &flag);
        constraints.extend(ops.iter().map(|u| ann.mul(u)));
        let v = next_flag_vector(field, m, &constraints, &flag)?;
        flag.push(v);
    }
    let v = Matrix::from_columns(field, m, &flag);
    // W with V^T S W = I, then W' = W + V M/2 where M = W^T S W.
    let vts = v.transpose().mul(&s);
    let mut w_cols = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = vec![0u32; n];
        e[j] = 1;
        let sol = vts
            .solve(&e)
            .ok_or_else(|| Error::InvariantViolation("isotropic flag is degenerate".into()))?;
        w_cols.push(sol.particular);
    }
    let w = Matrix::from_columns(field, m, &w_cols);
    let half = field.inv(2);
    let w = w.add(&v.mul(&w.transpose().mul(&s).mul(&w).scale(half)));
    let basis = v.hstack(&w);
    if basis.transpose().mul(&s).mul(&basis) != s {
        return Err(Error::InvariantViolation("completed basis is not symplectic".into()));
    }
    let conj = basis.inverse().expect("symplectic matrices are invertible");
    for u in &ops {
        if !in_symplectic_nilradical(&conj.mul(u).mul(&basis)) {
            return Err(Error::InvariantViolation("isotropic flag failed to triangularize".into()));
        }
    }
    Ok(conj)
}

/// A product of random symplectic transvections x ↦ x + a ⟨v, x⟩ v.
pub fn random_symplectic<R: Rng + ?Sized>(field: PrimeField, n: usize, rng: &mut R) -> Matrix {
    let m = 2 * n;
    let s = symplectic_form(field, n);
    let mut g = Matrix::identity(field, m);
    for _ in 0..4 * m {
        let v: Vec<u32> = (0..m).map(|_| rng.gen_range(0..field.p())).collect();
        let a = rng.gen_range(1..field.p());
        let col = Matrix::from_columns(field, m, &[v]);
        let t = Matrix::identity(field, m).add(&col.mul(&col.transpose()).mul(&s).scale(a));
        g = t.mul(&g);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{gl, sp};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn point_from_matrices(g: &RestrictedLieAlgebra, mats: &[Matrix]) -> ElementaryPoint {
        let cols: Vec<Vec<u32>> = mats.iter().map(|m| g.coordinates_of(m).unwrap().into_coords()).collect();
        ElementaryPoint::from_span(g, &Matrix::from_columns(g.field(), g.dim(), &cols)).unwrap()
    }

    #[test]
    fn engel_on_upper_triangular_is_identity() {
        let fld = f(5);
        let g = gl(fld, 3).unwrap();
        let pt = point_from_matrices(&g, &[Matrix::unit(fld, 3, 0, 1), Matrix::unit(fld, 3, 0, 2)]);
        assert_eq!(engel_triangularize(&g, &pt).unwrap(), Matrix::identity(fld, 3));
    }

    #[test]
    fn engel_on_lower_triangular_permutes() {
        let fld = f(5);
        let g = gl(fld, 3).unwrap();
        let pt = point_from_matrices(&g, &[Matrix::unit(fld, 3, 1, 0), Matrix::unit(fld, 3, 2, 0)]);
        let c = engel_triangularize(&g, &pt).unwrap();
        for u in pt.basis_elements() {
            let m = g.realize(u).unwrap();
            assert!(c.mul(&m).mul(&c.inverse().unwrap()).is_strictly_upper_triangular());
        }
        // a permutation matrix
        assert!((0..3).all(|i| c.row(i).iter().filter(|&&x| x == 1).count() == 1));
    }

    #[test]
    fn symplectic_flag_recovers_conjugated_lagrangian_block() {
        let fld = f(5);
        let g = sp(fld, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        // the upper-right symmetric block: an elementary subalgebra of dimension 3
        let blocks: Vec<Matrix> = (4..7).map(|i| g.realize(&g.basis_element(i)).unwrap()).collect();
        let h = random_symplectic(fld, 2, &mut rng);
        let hinv = h.inverse().unwrap();
        let conj: Vec<Matrix> = blocks.iter().map(|b| h.mul(b).mul(&hinv)).collect();
        let pt = point_from_matrices(&g, &conj);
        let c = symplectic_flag_triangularize(&g, &pt).unwrap();
        let s = symplectic_form(fld, 2);
        assert_eq!(c.transpose().mul(&s).mul(&c), s);
        let cinv = c.inverse().unwrap();
        for u in pt.basis_elements() {
            assert!(in_symplectic_nilradical(&c.mul(&g.realize(u).unwrap()).mul(&cinv)));
        }
    }

    #[test]
    fn random_symplectic_preserves_form() {
        let fld = f(7);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let s = symplectic_form(fld, 3);
        let h = random_symplectic(fld, 3, &mut rng);
        assert_eq!(h.transpose().mul(&s).mul(&h), s);
    }
}
