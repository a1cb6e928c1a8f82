//! Restricted representations presented by one operator per basis vector of
//! the algebra, and their restrictions to elementary subalgebras.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::evariety::ElementaryPoint;
use crate::field::PrimeField;
use crate::liealg::{AlgebraElement, RestrictedLieAlgebra};
use crate::matrix::Matrix;

/// Largest module dimension the constructors will build.
pub const MAX_MODULE_DIM: usize = 4096;

/// Schema version of the JSON module format.
pub const MODULE_SCHEMA_VERSION: u32 = 1;

/// A restricted module: ρ(x_i) for every basis vector x_i.
#[derive(Clone, Debug)]
pub struct RestrictedModule {
    algebra: Arc<RestrictedLieAlgebra>,
    name: String,
    dim: usize,
    action: Vec<Matrix>,
}

impl RestrictedModule {
    /// Builds and validates a module.
    pub fn new(algebra: Arc<RestrictedLieAlgebra>, name: impl Into<String>, action: Vec<Matrix>) -> Result<Self> {
        let m = Self::new_unchecked(algebra, name, action)?;
        m.validate()?;
        Ok(m)
    }

    /// Shape checks only; for bulk synthetic input.
    pub fn new_unchecked(
        algebra: Arc<RestrictedLieAlgebra>,
        name: impl Into<String>,
        action: Vec<Matrix>,
    ) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::ShapeMismatch(format!(
                "{} operators for an algebra of dimension {}",
                action.len(),
                algebra.dim()
            )));
        }
        let dim = action.first().map_or(0, |m| m.rows());
        if action
            .iter()
            .any(|m| m.rows() != dim || m.cols() != dim || m.field() != algebra.field())
        {
            return Err(Error::ShapeMismatch("operators must be square of equal size over the algebra's field".into()));
        }
        if dim > MAX_MODULE_DIM {
            return Err(Error::budget("module dimension", dim as u128, MAX_MODULE_DIM as u128));
        }
        Ok(RestrictedModule {
            algebra,
            name: name.into(),
            dim,
            action,
        })
    }

    /// Checks ρ([x_i, x_j]) = [ρ(x_i), ρ(x_j)] and ρ(x_i)^p = ρ(x_i^[p]).
    pub fn validate(&self) -> Result<()> {
        let g = &self.algebra;
        let n = g.dim();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.act(&g.bracket_coords(g.basis_element(i).coords(), g.basis_element(j).coords()));
                if lhs != self.action[i].commutator(&self.action[j]) {
                    return Err(Error::InvariantViolation(format!(
                        "{}: bracket compatibility fails for ({}, {})",
                        self.name,
                        g.labels()[i],
                        g.labels()[j]
                    )));
                }
            }
            let lhs = self.action[i].pow(g.p() as u64);
            if lhs != self.act(&AlgebraElement::new(g.p_map_table()[i].clone())) {
                return Err(Error::InvariantViolation(format!(
                    "{}: p-power compatibility fails for {}",
                    self.name,
                    g.labels()[i]
                )));
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &RestrictedLieAlgebra {
        &self.algebra
    }

    pub fn algebra_arc(&self) -> &Arc<RestrictedLieAlgebra> {
        &self.algebra
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> PrimeField {
        self.algebra.field()
    }

    /// ρ(x_i).
    pub fn action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    /// ρ(x) = Σ x_i ρ(x_i).
    pub fn act(&self, x: &AlgebraElement) -> Matrix {
        let mut out = Matrix::zeros(self.field(), self.dim, self.dim);
        for (&c, m) in x.coords().iter().zip(&self.action) {
            if c != 0 {
                out.add_scaled_assign(c, m);
            }
        }
        out
    }

    fn same_algebra(&self, other: &RestrictedModule) -> Result<()> {
        if !Arc::ptr_eq(&self.algebra, &other.algebra)
            && (self.algebra.name() != other.algebra.name()
                || self.algebra.dim() != other.algebra.dim()
                || self.field() != other.field())
        {
            return Err(Error::AlgebraMismatch(format!(
                "modules over {} and {}",
                self.algebra.name(),
                other.algebra.name()
            )));
        }
        Ok(())
    }

    /// The one-dimensional trivial module k.
    pub fn trivial(algebra: Arc<RestrictedLieAlgebra>) -> Self {
        let f = algebra.field();
        let action = vec![Matrix::zeros(f, 1, 1); algebra.dim()];
        RestrictedModule {
            algebra,
            name: "k".into(),
            dim: 1,
            action,
        }
    }

    /// The module given by the algebra's matrix realization.
    pub fn defining(algebra: Arc<RestrictedLieAlgebra>) -> Result<Self> {
        let action = algebra
            .realization()
            .ok_or_else(|| Error::InvalidInput(format!("{} has no matrix realization", algebra.name())))?
            .to_vec();
        Self::new(algebra, "V", action)
    }

    pub fn adjoint(algebra: Arc<RestrictedLieAlgebra>) -> Result<Self> {
        let action = (0..algebra.dim()).map(|i| algebra.ad_basis(i).clone()).collect();
        Self::new(algebra, "ad", action)
    }

    /// M^#, with x acting by −ρ(x)^T.
    pub fn dual(&self) -> Self {
        RestrictedModule {
            algebra: self.algebra.clone(),
            name: format!("({})^#", self.name),
            dim: self.dim,
            action: self.action.iter().map(|m| m.transpose().neg()).collect(),
        }
    }

    /// M ⊗ N with x acting by ρ(x) ⊗ 1 + 1 ⊗ ρ'(x).
    pub fn tensor(&self, other: &RestrictedModule) -> Result<Self> {
        self.same_algebra(other)?;
        let f = self.field();
        let dim = self.dim * other.dim;
        if dim > MAX_MODULE_DIM {
            return Err(Error::budget("module dimension", dim as u128, MAX_MODULE_DIM as u128));
        }
        let i1 = Matrix::identity(f, self.dim);
        let i2 = Matrix::identity(f, other.dim);
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| a.kron(&i2).add(&i1.kron(b)))
            .collect();
        Self::new(self.algebra.clone(), format!("{} (x) {}", self.name, other.name), action)
    }

    pub fn direct_sum(&self, other: &RestrictedModule) -> Result<Self> {
        self.same_algebra(other)?;
        let f = self.field();
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| Matrix::block_diag(f, &[a, b]))
            .collect();
        Self::new_unchecked(self.algebra.clone(), format!("{} + {}", self.name, other.name), action)
    }

    /// The regular module of u(g_a^{⊕r}) = k[t_1..t_r]/(t_s^p), repeated
    /// `a` times, over the given abelian algebra of dimension r.
    pub fn free_over_abelian(algebra: Arc<RestrictedLieAlgebra>, a: usize) -> Result<Self> {
        let tuple = free_module(algebra.field(), algebra.dim(), a)?;
        Self::new(algebra, format!("free({})", a), tuple.ops)
    }

    /// k[t]/(t^p) with t_i acting by multiplication by t and the other
    /// coordinates of an abelian algebra acting by zero.
    pub fn coordinate_free(algebra: Arc<RestrictedLieAlgebra>, i: usize) -> Result<Self> {
        if i >= algebra.dim() {
            return Err(Error::OutOfRange(format!("coordinate {} of {}", i + 1, algebra.name())));
        }
        let f = algebra.field();
        let p = f.p() as usize;
        let block = free_module(f, 1, 1)?.ops.remove(0);
        let action = (0..algebra.dim())
            .map(|k| if k == i { block.clone() } else { Matrix::zeros(f, p, p) })
            .collect();
        Self::new(algebra, format!("free_t{}", i + 1), action)
    }

    /// Loads a module from JSON `{schema_version, dim, action: [[[int]]]}`,
    /// one d x d integer matrix (list of rows) per basis vector.
    pub fn from_json_str(algebra: Arc<RestrictedLieAlgebra>, json: &str) -> Result<Self> {
        let file: ModuleFile = serde_json::from_str(json)?;
        if file.schema_version != MODULE_SCHEMA_VERSION {
            return Err(Error::InvalidInput(format!(
                "module schema_version {} (expected {})",
                file.schema_version, MODULE_SCHEMA_VERSION
            )));
        }
        let f = algebra.field();
        let action = file
            .action
            .iter()
            .map(|rows| {
                let m = Matrix::from_rows(f, rows)?;
                if m.rows() != file.dim || m.cols() != file.dim {
                    return Err(Error::ShapeMismatch(format!("operator is not {} x {}", file.dim, file.dim)));
                }
                Ok(m)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(algebra, file.name.unwrap_or_else(|| "file".into()), action)
    }

    pub fn from_json_file(algebra: Arc<RestrictedLieAlgebra>, path: &Path) -> Result<Self> {
        Self::from_json_str(algebra, &std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> Result<String> {
        let file = ModuleFile {
            schema_version: MODULE_SCHEMA_VERSION,
            name: Some(self.name.clone()),
            dim: self.dim,
            action: self.action.iter().map(|m| m.to_rows()).collect(),
        };
        Ok(serde_json::to_string(&file)?)
    }

    /// The operators ρ(u_1), ..., ρ(u_r) for the canonical basis of ε.
    pub fn restrict(&self, pt: &ElementaryPoint) -> Result<RestrictedTuple> {
        if pt.plane().ambient_dim() != self.algebra.dim() || pt.field() != self.field() {
            return Err(Error::AlgebraMismatch(format!(
                "plane in a {}-dimensional space, module over {}",
                pt.plane().ambient_dim(),
                self.algebra.name()
            )));
        }
        Ok(self.restrict_basis(pt.plane().basis()))
    }

    /// The operators for the columns of an arbitrary basis matrix.
    pub fn restrict_basis(&self, basis: &Matrix) -> RestrictedTuple {
        let ops = basis
            .columns()
            .into_iter()
            .map(|c| self.act(&AlgebraElement::new(c)))
            .collect();
        RestrictedTuple {
            field: self.field(),
            dim: self.dim,
            ops,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct ModuleFile {
    schema_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    dim: usize,
    action: Vec<Vec<Vec<i64>>>,
}

/// Commuting p-nilpotent operators: a module for u(g_a^{⊕r}).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedTuple {
    field: PrimeField,
    dim: usize,
    ops: Vec<Matrix>,
}

impl RestrictedTuple {
    /// Checks that the operators are square of one size, pairwise commute and
    /// have vanishing p-th power.
    pub fn new(field: PrimeField, dim: usize, ops: Vec<Matrix>) -> Result<Self> {
        if ops.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::ShapeMismatch(format!("operators must be {} x {}", dim, dim)));
        }
        let t = RestrictedTuple { field, dim, ops };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<()> {
        for (s, a) in self.ops.iter().enumerate() {
            if !a.pow(self.field.p() as u64).is_zero() {
                return Err(Error::InvariantViolation(format!("operator {} is not p-nilpotent", s + 1)));
            }
            for (t, b) in self.ops.iter().enumerate().skip(s + 1) {
                if !a.commutator(b).is_zero() {
                    return Err(Error::InvariantViolation(format!(
                        "operators {} and {} do not commute",
                        s + 1,
                        t + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn r(&self) -> usize {
        self.ops.len()
    }

    pub fn ops(&self) -> &[Matrix] {
        &self.ops
    }

    /// Negative transposes: the restriction of the dual module.
    pub fn dual(&self) -> Self {
        RestrictedTuple {
            field: self.field,
            dim: self.dim,
            ops: self.ops.iter().map(|m| m.transpose().neg()).collect(),
        }
    }

    /// Operators of the basis u'_t = Σ_s g_{st} u_s.
    pub fn rebase(&self, g: &Matrix) -> Self {
        let ops = (0..g.cols())
            .map(|t| {
                let mut m = Matrix::zeros(self.field, self.dim, self.dim);
                for (s, op) in self.ops.iter().enumerate() {
                    m.add_scaled_assign(g.get(s, t), op);
                }
                m
            })
            .collect();
        RestrictedTuple {
            field: self.field,
            dim: self.dim,
            ops,
        }
    }
}

/// The regular representation of k[t_1..t_r]/(t_s^p), repeated `a` times.
/// Monomials t^e are indexed in mixed radix with e_1 most significant.
pub fn free_module(field: PrimeField, r: usize, a: usize) -> Result<RestrictedTuple> {
    if r == 0 || a == 0 {
        return Err(Error::InvalidInput("free module needs r >= 1 and a >= 1".into()));
    }
    let p = field.p() as usize;
    let block = (p as u128).checked_pow(r as u32).unwrap_or(u128::MAX);
    let dim = block.saturating_mul(a as u128);
    if dim > MAX_MODULE_DIM as u128 {
        return Err(Error::budget("free module dimension", dim, MAX_MODULE_DIM as u128));
    }
    let block = block as usize;
    let dim = dim as usize;
    let ops = (0..r)
        .map(|s| {
            let stride = p.pow((r - 1 - s) as u32);
            let mut m = Matrix::zeros(field, dim, dim);
            for copy in 0..a {
                for idx in 0..block {
                    if (idx / stride) % p + 1 < p {
                        m.set(copy * block + idx + stride, copy * block + idx, 1);
                    }
                }
            }
            m
        })
        .collect();
    RestrictedTuple::new(field, dim, ops)
}
