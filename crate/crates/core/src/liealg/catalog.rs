//! Constructors for the algebras used throughout: matrix algebras, Heisenberg
//! algebras, abelian algebras, and ways of combining them.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::Matrix;
use crate::repmod::RestrictedModule;
use crate::subspace::Subspace;

use super::parabolic::Parabolic;
use super::{AlgebraElement, RestrictedLieAlgebra};

fn unit_label(i: usize, j: usize) -> String {
    format!("E[{},{}]", i + 1, j + 1)
}

/// `dim x idx.len()` matrix whose columns are the standard basis vectors `idx`.
pub(crate) fn coordinate_basis(field: PrimeField, dim: usize, idx: &[usize]) -> Matrix {
    let mut m = Matrix::zeros(field, dim, idx.len());
    for (c, &i) in idx.iter().enumerate() {
        m.set(i, c, 1);
    }
    m
}

/// The span of the matrix units E_ij at `positions` inside gl_n (must be
/// closed under brackets and p-th powers).
pub(crate) fn elementary_span(
    field: PrimeField,
    name: &str,
    n: usize,
    positions: &[(usize, usize)],
) -> Result<RestrictedLieAlgebra> {
    if positions.is_empty() {
        return RestrictedLieAlgebra::new_unchecked(name, field, Vec::new(), Vec::new(), Vec::new());
    }
    let labels = positions.iter().map(|&(i, j)| unit_label(i, j)).collect();
    let mats = positions
        .iter()
        .map(|&(i, j)| Matrix::unit(field, n, i, j))
        .collect();
    let g = RestrictedLieAlgebra::from_matrices(name, field, labels, mats)?;
    let nil: Vec<usize> = (0..positions.len())
        .filter(|&k| positions[k].0 < positions[k].1)
        .collect();
    Ok(g.with_nilradical(coordinate_basis(field, positions.len(), &nil)))
}

fn check_n(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidInput(format!("{} needs n >= 1", what)));
    }
    Ok(())
}

/// gl_n with basis E_ij in row-major order.
pub fn gl(field: PrimeField, n: usize) -> Result<RestrictedLieAlgebra> {
    check_n(n, "gl_n")?;
    let pos: Vec<_> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    elementary_span(field, &format!("gl_{}", n), n, &pos)
}

/// sl_n with basis E_ij (i != j, row-major) followed by H_i = E_ii − E_{i+1,i+1}.
pub fn sl(field: PrimeField, n: usize) -> Result<RestrictedLieAlgebra> {
    if n < 2 {
        return Err(Error::InvalidInput("sl_n needs n >= 2".into()));
    }
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    let mut nil = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                if i < j {
                    nil.push(mats.len());
                }
                labels.push(unit_label(i, j));
                mats.push(Matrix::unit(field, n, i, j));
            }
        }
    }
    for i in 0..n - 1 {
        labels.push(format!("H[{}]", i + 1));
        let mut h = Matrix::unit(field, n, i, i);
        h.set(i + 1, i + 1, field.neg(1));
        mats.push(h);
    }
    let d = mats.len();
    Ok(RestrictedLieAlgebra::from_matrices(format!("sl_{}", n), field, labels, mats)?
        .with_nilradical(coordinate_basis(field, d, &nil)))
}

/// The 2n x 2n matrix S = [[0, I], [−I, 0]].
pub fn symplectic_form(field: PrimeField, n: usize) -> Matrix {
    let mut s = Matrix::zeros(field, 2 * n, 2 * n);
    for i in 0..n {
        s.set(i, n + i, 1);
        s.set(n + i, i, field.neg(1));
    }
    s
}

/// sp_2n = { m : m^T S = −S m } ⊂ gl_2n. Basis: E_ij − E_{n+j,n+i} (row-major
/// in i, j), then the symmetric upper-right block (i <= j), then the
/// symmetric lower-left block (i <= j). The recorded nilradical is
/// [[A, B], [0, −A^T]] with A strictly upper triangular and B symmetric.
pub fn sp(field: PrimeField, n: usize) -> Result<RestrictedLieAlgebra> {
    check_n(n, "sp_2n")?;
    let m = 2 * n;
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    let mut nil = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut a = Matrix::unit(field, m, i, j);
            a.set(n + j, n + i, field.sub(a.get(n + j, n + i), 1));
            if i < j {
                nil.push(mats.len());
            }
            labels.push(format!("A[{},{}]", i + 1, j + 1));
            mats.push(a);
        }
    }
    for (tag, lower) in [("B", false), ("C", true)] {
        for i in 0..n {
            for j in i..n {
                let (r0, c0) = if lower { (n, 0) } else { (0, n) };
                let mut b = Matrix::unit(field, m, r0 + i, c0 + j);
                b.set(r0 + j, c0 + i, 1);
                if !lower {
                    nil.push(mats.len());
                }
                labels.push(format!("{}[{},{}]", tag, i + 1, j + 1));
                mats.push(b);
            }
        }
    }
    let d = mats.len();
    Ok(RestrictedLieAlgebra::from_matrices(format!("sp_{}", m), field, labels, mats)?
        .with_nilradical(coordinate_basis(field, d, &nil)))
}

/// u_n, the strictly upper triangular n x n matrices.
pub fn nilradical_upper(field: PrimeField, n: usize) -> Result<RestrictedLieAlgebra> {
    check_n(n, "u_n")?;
    let g = Parabolic::new(n, &[])?.nilradical_algebra(field)?;
    let d = g.dim();
    Ok(g.with_nilradical(Matrix::identity(field, d)))
}

/// The nilradical u_J of the standard parabolic p_J ⊂ gl_n (J 1-based simple roots).
pub fn parabolic_nilradical(field: PrimeField, n: usize, j: &[usize]) -> Result<RestrictedLieAlgebra> {
    let g = Parabolic::new(n, j)?.nilradical_algebra(field)?;
    let d = g.dim();
    Ok(g.with_nilradical(Matrix::identity(field, d)))
}

/// u_{r,s} ⊂ gl_{r+s}: matrices supported in the upper-right r x s block.
pub fn u_rs(field: PrimeField, r: usize, s: usize) -> Result<RestrictedLieAlgebra> {
    if r == 0 || s == 0 {
        return Err(Error::InvalidInput("u_{r,s} needs r, s >= 1".into()));
    }
    Ok(Parabolic::from_block_sizes(&[r, s])?
        .nilradical_algebra(field)?
        .with_name(format!("u_{{{},{}}}", r, s)))
}

/// The Heisenberg algebra of dimension 2n − 1 with basis x_1..x_{n−1},
/// y_1..y_n, [x_i, y_j] = δ_ij y_n and trivial p-map. Realized in gl_{n+1}
/// by x_i = E_{1,i+1}, y_i = E_{i+1,n+1} (i < n), y_n = E_{1,n+1}.
pub fn heisenberg(field: PrimeField, n: usize) -> Result<RestrictedLieAlgebra> {
    check_n(n, "heisenberg(n)")?;
    let m = n + 1;
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    for i in 1..n {
        labels.push(format!("x{}", i));
        mats.push(Matrix::unit(field, m, 0, i));
    }
    for i in 1..n {
        labels.push(format!("y{}", i));
        mats.push(Matrix::unit(field, m, i, n));
    }
    labels.push(format!("y{}", n));
    mats.push(Matrix::unit(field, m, 0, n));
    let d = mats.len();
    Ok(
        RestrictedLieAlgebra::from_matrices(format!("heis_{}", n), field, labels, mats)?
            .with_nilradical(Matrix::identity(field, d)),
    )
}

/// g_a^{⊕n}: abelian with zero p-map.
pub fn abelian(field: PrimeField, n: usize) -> Result<RestrictedLieAlgebra> {
    check_n(n, "abelian(n)")?;
    let labels = (1..=n).map(|i| format!("t{}", i)).collect();
    let e = Matrix::unit(field, 2, 0, 1);
    let zero = Matrix::zeros(field, 2, 2);
    let mats = (0..n)
        .map(|i| {
            let blocks: Vec<&Matrix> = (0..n).map(|k| if k == i { &e } else { &zero }).collect();
            Matrix::block_diag(field, &blocks)
        })
        .collect();
    Ok(
        RestrictedLieAlgebra::from_matrices(format!("g_a^{}", n), field, labels, mats)?
            .with_nilradical(Matrix::identity(field, n)),
    )
}

/// The direct sum of restricted Lie algebras, bases concatenated.
pub fn direct_sum(parts: &[&RestrictedLieAlgebra]) -> Result<RestrictedLieAlgebra> {
    let first = parts
        .first()
        .ok_or_else(|| Error::InvalidInput("direct sum of no algebras".into()))?;
    let field = first.field();
    if parts.iter().any(|g| g.field() != field) {
        return Err(Error::AlgebraMismatch("summands over different fields".into()));
    }
    let n: usize = parts.iter().map(|g| g.dim()).sum();
    let mut structure = vec![0u32; n * n * n];
    let mut p_map = vec![vec![0u32; n]; n];
    let mut labels = Vec::new();
    let mut offset = 0;
    for (s, g) in parts.iter().enumerate() {
        let d = g.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    structure[((offset + i) * n + offset + j) * n + offset + k] = g.structure_constant(i, j, k);
                }
            }
            p_map[offset + i][offset..offset + d].copy_from_slice(&g.p_map_table()[i]);
            labels.push(format!("{}:{}", s + 1, g.labels()[i]));
        }
        offset += d;
    }
    let name = parts.iter().map(|g| g.name().to_string()).collect::<Vec<_>>().join(" + ");
    let mut out = RestrictedLieAlgebra::new_unchecked(name, field, labels, structure, p_map)?;
    if parts.iter().all(|g| g.realization().is_some() && g.dim() > 0) {
        let sizes: Vec<usize> = parts.iter().map(|g| g.realization().unwrap()[0].rows()).collect();
        let mut mats = Vec::with_capacity(n);
        for (s, g) in parts.iter().enumerate() {
            for b in g.realization().unwrap() {
                let zeros: Vec<Matrix> = sizes.iter().map(|&m| Matrix::zeros(field, m, m)).collect();
                let blocks: Vec<&Matrix> = (0..parts.len()).map(|t| if t == s { b } else { &zeros[t] }).collect();
                mats.push(Matrix::block_diag(field, &blocks));
            }
        }
        let labels = out.labels().to_vec();
        out = RestrictedLieAlgebra::from_matrices(out.name().to_string(), field, labels, mats)?;
    }
    if parts.iter().all(|g| g.nilradical().is_some()) {
        let total: usize = parts.iter().map(|g| g.nilradical().unwrap().cols()).sum();
        let mut nil = Matrix::zeros(field, n, total);
        let (mut ro, mut co) = (0, 0);
        for g in parts {
            let b = g.nilradical().unwrap();
            for i in 0..b.rows() {
                for j in 0..b.cols() {
                    nil.set(ro + i, co + j, b.get(i, j));
                }
            }
            ro += b.rows();
            co += b.cols();
        }
        out = out.with_nilradical(nil);
    }
    Ok(out)
}

/// W ⋊ h for a restricted h-module W: basis w_1..w_d then the basis of h,
/// [h, w] = ρ(h) w, [w, w'] = 0, (w, 0)^[p] = 0, (0, x)^[p] = (0, x^[p]).
pub fn semidirect(module: &RestrictedModule) -> Result<RestrictedLieAlgebra> {
    let h = module.algebra();
    let field = h.field();
    let d = module.dim();
    let m = h.dim();
    let n = d + m;
    let mut structure = vec![0u32; n * n * n];
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                structure[((d + i) * n + d + j) * n + d + k] = h.structure_constant(i, j, k);
            }
        }
        let rho = module.action(i);
        for a in 0..d {
            for b in 0..d {
                let c = rho.get(b, a);
                structure[((d + i) * n + a) * n + b] = c;
                structure[(a * n + d + i) * n + b] = field.neg(c);
            }
        }
    }
    let mut p_map = vec![vec![0u32; n]; n];
    for i in 0..m {
        p_map[d + i][d..].copy_from_slice(&h.p_map_table()[i]);
    }
    let mut labels: Vec<String> = (1..=d).map(|a| format!("w{}", a)).collect();
    labels.extend(h.labels().iter().cloned());
    RestrictedLieAlgebra::new(format!("W({}) x| {}", d, h.name()), field, labels, structure, p_map)
}

/// g_{1,n} = V ⋊ gl_n for the defining module V, realized in gl_{n+1} as
/// matrices [[A, v], [0, 0]]. Basis: E_ij of gl_n, then E_{i,n+1}.
pub fn g1(field: PrimeField, n: usize) -> Result<RestrictedLieAlgebra> {
    check_n(n, "g_{1,n}")?;
    let mut pos: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    pos.extend((0..n).map(|i| (i, n)));
    Ok(elementary_span(field, &format!("g_{{1,{}}}", n), n + 1, &pos)?.with_name(format!("g1_{}", n)))
}

/// The restricted central extension of gl_2n split as Lie algebras, with
/// (b, x)^[p] = (φ(x), x^[p]). Basis: the central c, then E_ij of gl_2n.
/// `phi` gives φ on the E_ij (row-major); over F_p a semilinear functional is
/// linear on rational points.
pub fn central_extension_gl2n(field: PrimeField, n: usize, phi: &[u32]) -> Result<RestrictedLieAlgebra> {
    check_n(n, "central extension of gl_2n")?;
    let base = gl(field, 2 * n)?;
    let m = base.dim();
    if phi.len() != m {
        return Err(Error::ShapeMismatch(format!(
            "functional has {} coefficients, gl_{} has dimension {}",
            phi.len(),
            2 * n,
            m
        )));
    }
    let dim = m + 1;
    let mut structure = vec![0u32; dim * dim * dim];
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                structure[((i + 1) * dim + j + 1) * dim + k + 1] = base.structure_constant(i, j, k);
            }
        }
    }
    let mut p_map = vec![vec![0u32; dim]; dim];
    for i in 0..m {
        p_map[i + 1][0] = phi[i] % field.p();
        p_map[i + 1][1..].copy_from_slice(&base.p_map_table()[i]);
    }
    let mut labels = vec!["c".to_string()];
    labels.extend(base.labels().iter().cloned());
    let mut nil = vec![0];
    nil.extend((0..2 * n).flat_map(|i| (i + 1..2 * n).map(move |j| 1 + i * 2 * n + j)));
    Ok(
        RestrictedLieAlgebra::new(format!("gl~_{}", 2 * n), field, labels, structure, p_map)?
            .with_nilradical(coordinate_basis(field, dim, &nil)),
    )
}

/// The trace functional on gl_2n as coefficients on E_ij.
pub fn trace_functional(n: usize) -> Vec<u32> {
    let m = 2 * n;
    (0..m * m).map(|k| u32::from(k / m == k % m)).collect()
}

/// The restricted subalgebra of `g` spanned by the columns of `basis`,
/// re-expressed in that basis. Fails unless the span is closed under
/// brackets and the p-map.
pub fn subalgebra(g: &RestrictedLieAlgebra, basis: &Matrix, name: &str) -> Result<RestrictedLieAlgebra> {
    if basis.rows() != g.dim() {
        return Err(Error::ShapeMismatch(format!(
            "basis vectors of length {} in algebra of dimension {}",
            basis.rows(),
            g.dim()
        )));
    }
    let field = g.field();
    let s = Subspace::canonical(basis);
    let vecs = s.basis_vectors();
    let r = vecs.len();
    let mut structure = vec![0u32; r * r * r];
    for i in 0..r {
        for j in 0..r {
            let b = g.bracket_coords(&vecs[i], &vecs[j]);
            let c = s
                .coordinates(b.coords())
                .ok_or_else(|| Error::InvalidInput(format!("{} is not closed under brackets", name)))?;
            structure[(i * r + j) * r..(i * r + j + 1) * r].copy_from_slice(&c);
        }
    }
    let p_map = vecs
        .iter()
        .map(|v| {
            s.coordinates(g.p_power(&AlgebraElement::new(v.clone())).coords())
                .ok_or_else(|| Error::InvalidInput(format!("{} is not closed under the p-map", name)))
        })
        .collect::<Result<Vec<_>>>()?;
    let labels: Vec<String> = s
        .pivots()
        .iter()
        .map(|&i| format!("<{}>", g.labels()[i]))
        .collect();
    let out = match g.realization() {
        Some(_) if r > 0 => {
            let mats = vecs
                .iter()
                .map(|v| g.realize(&AlgebraElement::new(v.clone())).unwrap())
                .collect();
            RestrictedLieAlgebra::from_matrices(name, field, labels, mats)?
        }
        _ => RestrictedLieAlgebra::new(name, field, labels, structure, p_map)?,
    };
    let inside_nilradical = g
        .nilradical()
        .is_some_and(|nil| Subspace::canonical(nil).contains(&s));
    Ok(if inside_nilradical {
        out.with_nilradical(Matrix::identity(field, r))
    } else {
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(gl(f(3), 3).unwrap().dim(), 9);
        assert_eq!(sl(f(3), 3).unwrap().dim(), 8);
        assert_eq!(sp(f(3), 2).unwrap().dim(), 10);
        assert_eq!(sp(f(3), 2).unwrap().nilradical().unwrap().cols(), 4);
        assert_eq!(nilradical_upper(f(3), 4).unwrap().dim(), 6);
        assert_eq!(u_rs(f(3), 2, 3).unwrap().dim(), 6);
        assert_eq!(heisenberg(f(3), 3).unwrap().dim(), 5);
        assert_eq!(g1(f(3), 2).unwrap().dim(), 6);
        assert_eq!(central_extension_gl2n(f(3), 1, &[0; 4]).unwrap().dim(), 5);
    }

    #[test]
    fn every_constructor_validates() {
        for p in [3, 5] {
            let fld = f(p);
            let algebras = vec![
                gl(fld, 3).unwrap(),
                sl(fld, 3).unwrap(),
                sp(fld, 2).unwrap(),
                nilradical_upper(fld, 4).unwrap(),
                parabolic_nilradical(fld, 5, &[2, 3]).unwrap(),
                heisenberg(fld, 3).unwrap(),
                abelian(fld, 3).unwrap(),
                g1(fld, 2).unwrap(),
                central_extension_gl2n(fld, 1, &trace_functional(1)).unwrap(),
            ];
            for g in &algebras {
                g.validate().unwrap_or_else(|e| panic!("{}: {}", g.name(), e));
            }
            let s2 = sl(fld, 2).unwrap();
            direct_sum(&[&s2, &s2]).unwrap().validate().unwrap();
        }
    }

    #[test]
    fn heisenberg_two_is_u3() {
        let h = heisenberg(f(5), 2).unwrap();
        // x1, y1, y2 with [x1, y1] = y2
        let b = h.bracket(&h.basis_element(0), &h.basis_element(1)).unwrap();
        assert_eq!(b, h.basis_element(2));
        for i in 0..3 {
            assert!(h.bracket(&h.basis_element(2), &h.basis_element(i)).unwrap().is_zero());
        }
    }

    #[test]
    fn gl3_unit_bracket() {
        let g = gl(f(7), 3).unwrap();
        // [E12, E23] = E13
        let b = g.bracket(&g.basis_element(1), &g.basis_element(5)).unwrap();
        assert_eq!(b, g.basis_element(2));
    }

    #[test]
    fn u4_p_map_is_not_trivial_at_three() {
        let fld = f(3);
        let u = nilradical_upper(fld, 4).unwrap();
        // E12 + E23 + E34 cubes to E14 in characteristic 3
        let x = u.element(&[1, 0, 0, 1, 0, 1]).unwrap();
        let m = u.realize(&x).unwrap();
        assert_eq!(m.pow(3), Matrix::unit(fld, 4, 0, 3));
        assert_eq!(u.realize(&u.p_power(&x)).unwrap(), m.pow(3));
        assert!(!u.has_trivial_p_map(1 << 20).unwrap());
        assert!(nilradical_upper(f(5), 4).unwrap().has_trivial_p_map(1 << 20).unwrap());
    }

    #[test]
    fn split_central_extension() {
        let fld = f(3);
        let g = central_extension_gl2n(fld, 1, &[0; 4]).unwrap();
        let base = gl(fld, 2).unwrap();
        let mut rng = rand::thread_rng();
        for _ in 0..20 {
            let x = base.random_element(&mut rng);
            let mut c = vec![0];
            c.extend_from_slice(x.coords());
            let mut want = vec![0];
            want.extend_from_slice(base.p_power(&x).coords());
            assert_eq!(g.p_power(&AlgebraElement::new(c)).into_coords(), want);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(sl(f(3), 1).is_err());
        assert!(heisenberg(f(3), 0).is_err());
        assert!(parabolic_nilradical(f(3), 3, &[5]).is_err());
    }
}
