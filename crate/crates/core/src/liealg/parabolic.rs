//! Standard parabolic subalgebras of gl_n and their nilradicals, described by
//! row/column block predicates.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::Matrix;
use crate::subspace::Subspace;

use super::RestrictedLieAlgebra;

/// The standard parabolic p_J ⊂ gl_n whose Levi factor contains the simple
/// roots in J. Indices in J are 1-based (α_i = ε_i − ε_{i+1}); the diagonal
/// blocks break after every position i ∉ J.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parabolic {
    n: usize,
    levi_roots: Vec<usize>,
    block: Vec<usize>,
}

impl Parabolic {
    pub fn new(n: usize, levi_roots: &[usize]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("parabolic of gl_0".into()));
        }
        let mut j = levi_roots.to_vec();
        j.sort_unstable();
        j.dedup();
        if j.len() != levi_roots.len() {
            return Err(Error::InvalidInput(format!("repeated simple root in J = {:?}", levi_roots)));
        }
        if let Some(&bad) = j.iter().find(|&&i| i == 0 || i >= n) {
            return Err(Error::InvalidInput(format!(
                "simple root {} out of range 1..{} for gl_{}",
                bad,
                n - 1,
                n
            )));
        }
        let mut block = vec![0; n];
        for i in 1..n {
            block[i] = block[i - 1] + usize::from(!j.contains(&i));
        }
        Ok(Parabolic {
            n,
            levi_roots: j,
            block,
        })
    }

    /// The parabolic with diagonal blocks of the given sizes.
    pub fn from_block_sizes(sizes: &[usize]) -> Result<Self> {
        if sizes.contains(&0) {
            return Err(Error::InvalidInput("empty diagonal block".into()));
        }
        let n: usize = sizes.iter().sum();
        let mut breaks = Vec::new();
        let mut acc = 0;
        for &s in &sizes[..sizes.len().saturating_sub(1)] {
            acc += s;
            breaks.push(acc);
        }
        let j: Vec<usize> = (1..n).filter(|i| !breaks.contains(i)).collect();
        Parabolic::new(n, &j)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn levi_roots(&self) -> &[usize] {
        &self.levi_roots
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.block[self.n - 1] + 1];
        for &b in &self.block {
            sizes[b] += 1;
        }
        sizes
    }

    /// Matrix positions (0-based) of the nilradical: block(i) < block(j).
    pub fn nilradical_positions(&self) -> Vec<(usize, usize)> {
        self.positions(|bi, bj| bi < bj)
    }

    /// Matrix positions (0-based) of the parabolic: block(i) <= block(j).
    pub fn parabolic_positions(&self) -> Vec<(usize, usize)> {
        self.positions(|bi, bj| bi <= bj)
    }

    fn positions(&self, keep: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
        let n = self.n;
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| keep(self.block[i], self.block[j]))
            .collect()
    }

    pub fn nilradical_algebra(&self, field: PrimeField) -> Result<RestrictedLieAlgebra> {
        let pos = self.nilradical_positions();
        let name = if self.levi_roots.is_empty() {
            format!("u_{}", self.n)
        } else {
            format!("u_J(n={}, J={:?})", self.n, self.levi_roots)
        };
        super::catalog::elementary_span(field, &name, self.n, &pos)
    }

    pub fn parabolic_algebra(&self, field: PrimeField) -> Result<RestrictedLieAlgebra> {
        let pos = self.parabolic_positions();
        super::catalog::elementary_span(field, &format!("p_J(n={}, J={:?})", self.n, self.levi_roots), self.n, &pos)
    }
}

/// Whether [u, p] = u for the nilradical u of the parabolic p, computed on
/// matrix units in gl_n.
pub fn com_check_nilradical(par: &Parabolic, field: PrimeField) -> bool {
    let n = par.n();
    let u = par.nilradical_positions();
    let mut brackets = Vec::new();
    for &(a, b) in &par.parabolic_positions() {
        let x = Matrix::unit(field, n, a, b);
        for &(c, d) in &u {
            brackets.push(x.commutator(&Matrix::unit(field, n, c, d)).data().to_vec());
        }
    }
    Subspace::from_vectors(field, n * n, &brackets).dim() == u.len()
}
