//! Maximality of elementary subalgebras, by brute force and by the socle of
//! the adjoint module.

use crate::error::{Error, Result};
use crate::liealg::{all_vectors, AlgebraElement, RestrictedLieAlgebra};
use crate::matrix::Matrix;
use crate::subspace::{null_space, Subspace};

use super::ElementaryPoint;

/// The centralizer of ε in g.
pub fn centralizer(g: &RestrictedLieAlgebra, pt: &ElementaryPoint) -> Subspace {
    let n = g.dim();
    if pt.r() == 0 {
        return Subspace::full(g.field(), n);
    }
    let ads: Vec<Matrix> = pt.basis_elements().iter().map(|u| g.ad(u)).collect();
    null_space(&Matrix::vstack_all(g.field(), n, &ads))
}

/// Whether no p-nilpotent x ∉ ε commutes with ε. Scans the projective
/// points of a complement of ε in its centralizer (for x commuting with ε,
/// (e + x)^[p] = x^[p] when e ∈ ε).
pub fn is_maximal_elementary(g: &RestrictedLieAlgebra, pt: &ElementaryPoint, budget: u128) -> Result<bool> {
    let c = centralizer(g, pt);
    let extra = pt.plane().subspace().complement_in(&c);
    let k = extra.len() as u32;
    let q = g.p() as u128;
    let lines = (q.pow(k) - 1) / (q - 1);
    if lines > budget {
        return Err(Error::budget("maximality scan", lines, budget));
    }
    let comp = Matrix::from_columns(g.field(), g.dim(), &extra);
    for coeffs in all_vectors(g.field(), extra.len()) {
        // one representative per line: leading nonzero coordinate equal to 1
        if coeffs.iter().find(|&&c| c != 0) != Some(&1) {
            continue;
        }
        if g.is_p_nilpotent(&AlgebraElement::new(comp.mul_vec(&coeffs))) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// dim Soc(ε*(g_ad)), the common kernel of ad(u_s) on g.
pub fn socle_dimension(g: &RestrictedLieAlgebra, pt: &ElementaryPoint) -> usize {
    centralizer(g, pt).dim()
}

/// The socle criterion: ε is maximal iff dim Soc(ε*(g_ad)) = r. Only valid
/// when the p-map of g vanishes identically; otherwise fails.
pub fn is_maximal_via_socle(g: &RestrictedLieAlgebra, pt: &ElementaryPoint, budget: u128) -> Result<bool> {
    if !g.has_trivial_p_map(budget)? {
        return Err(Error::NonTrivialPMap(g.name().to_string()));
    }
    Ok(socle_dimension(g, pt) == pt.r())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::liealg::{gl, nilradical_upper};

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn pt(g: &RestrictedLieAlgebra, cols: &[&[i64]]) -> ElementaryPoint {
        let cols: Vec<Vec<u32>> = cols.iter().map(|c| g.element(c).unwrap().into_coords()).collect();
        ElementaryPoint::from_span(g, &Matrix::from_columns(g.field(), g.dim(), &cols)).unwrap()
    }

    #[test]
    fn u12_is_maximal_in_gl3() {
        let g = gl(f(5), 3).unwrap();
        let e = pt(&g, &[&[0, 1, 0, 0, 0, 0, 0, 0, 0], &[0, 0, 1, 0, 0, 0, 0, 0, 0]]);
        assert!(is_maximal_elementary(&g, &e, 1 << 20).unwrap());
    }

    #[test]
    fn regular_line_is_not_maximal() {
        let g = gl(f(5), 3).unwrap();
        let e = pt(&g, &[&[0, 1, 0, 0, 0, 1, 0, 0, 0]]);
        assert!(!is_maximal_elementary(&g, &e, 1 << 20).unwrap());
    }

    #[test]
    fn socle_criterion_needs_trivial_p_map() {
        let u3 = nilradical_upper(f(3), 4).unwrap();
        let e = pt(&u3, &[&[0, 0, 1, 0, 0, 0]]);
        assert!(matches!(is_maximal_via_socle(&u3, &e, 1 << 20), Err(Error::NonTrivialPMap(_))));
        let u5 = nilradical_upper(f(5), 4).unwrap();
        let e = pt(&u5, &[&[0, 0, 1, 0, 0, 0]]);
        assert_eq!(
            is_maximal_via_socle(&u5, &e, 1 << 20).unwrap(),
            is_maximal_elementary(&u5, &e, 1 << 20).unwrap()
        );
    }
}
