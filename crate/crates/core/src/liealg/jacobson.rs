//! Jacobson's formula for the p-map on sums.
//!
//! (x + y)^[p] = x^[p] + y^[p] + sum_{i=1}^{p-1} s_i(x, y), where i * s_i(x, y)
//! is the coefficient of t^(i-1) in ad(t x + y)^(p-1)(x).

use crate::field::PrimeField;
use crate::matrix::Matrix;

use super::{AlgebraElement, RestrictedLieAlgebra};

/// sum_i s_i(x, y) for x, y given by their ad matrices and x's coordinates.
pub fn correction(field: PrimeField, ad_x: &Matrix, ad_y: &Matrix, x: &[u32]) -> Vec<u32> {
    let p = field.p() as usize;
    let n = x.len();
    // poly[d] = coefficient of t^d in ad(t x + y)^k (x)
    let mut poly: Vec<Vec<u32>> = vec![x.to_vec()];
    for _ in 0..p - 1 {
        let mut next = vec![vec![0u32; n]; poly.len() + 1];
        for (d, v) in poly.iter().enumerate() {
            if v.iter().all(|&c| c == 0) {
                continue;
            }
            for (o, a) in next[d].iter_mut().zip(ad_y.mul_vec(v)) {
                *o = field.add(*o, a);
            }
            for (o, a) in next[d + 1].iter_mut().zip(ad_x.mul_vec(v)) {
                *o = field.add(*o, a);
            }
        }
        poly = next;
    }
    let mut out = vec![0u32; n];
    for i in 1..p {
        let inv = field.inv(i as u32);
        for (o, &c) in out.iter_mut().zip(&poly[i - 1]) {
            *o = field.mul_add(*o, inv, c);
        }
    }
    out
}

/// x^[p] from the basis table, adding one coordinate at a time.
pub(crate) fn p_power(g: &RestrictedLieAlgebra, x: &[u32]) -> AlgebraElement {
    let f = g.field();
    let n = g.dim();
    let p = f.p() as u64;
    let mut acc = vec![0u32; n];
    let mut acc_pow = vec![0u32; n];
    let mut ad_acc = Matrix::zeros(f, n, n);
    let mut started = false;
    for (i, &c) in x.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let cp = f.pow(c, p);
        for (o, &v) in acc_pow.iter_mut().zip(&g.p_map_table()[i]) {
            *o = f.mul_add(*o, cp, v);
        }
        let ad_y = g.ad_basis(i).scale(c);
        if started && !ad_acc.column(i).iter().all(|&v| v == 0) {
            for (o, v) in acc_pow.iter_mut().zip(correction(f, &ad_acc, &ad_y, &acc)) {
                *o = f.add(*o, v);
            }
        }
        acc[i] = c;
        ad_acc.add_scaled_assign(1, &ad_y);
        started = true;
    }
    AlgebraElement::new(acc_pow)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::catalog::gl;

    #[test]
    fn agrees_with_matrix_powers_in_gl4() {
        let f = PrimeField::new(5).unwrap();
        let g = gl(f, 4).unwrap();
        let mut seed = 17u64;
        for _ in 0..40 {
            let coords: Vec<u32> = (0..16)
                .map(|_| {
                    seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    ((seed >> 33) % 5) as u32
                })
                .collect();
            let x = AlgebraElement::new(coords);
            let m = g.realize(&x).unwrap();
            assert_eq!(g.realize(&g.p_power(&x)).unwrap(), m.pow(5));
        }
    }

    #[test]
    fn commuting_summands_need_no_correction() {
        let f = PrimeField::new(3).unwrap();
        let g = gl(f, 2).unwrap();
        // E11 + E22 is the identity
        let x = g.element(&[1, 0, 0, 1]).unwrap();
        assert_eq!(g.p_power(&x), x);
    }
}
