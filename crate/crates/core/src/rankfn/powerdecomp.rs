//! Writing a monomial of degree i < p as a combination of i-th powers of
//! linear forms.
//!
//! For two variables, x^a y^b = Σ_{j=0}^{i} c_j (j x + y)^i where c solves
//! the system Σ_j C(i, k) j^k c_j = δ_{k,a} (k = 0..i), a Vandermonde matrix
//! with rows scaled by nonzero binomials. More variables are handled by
//! decomposing the trailing monomial first and substituting each of its
//! linear forms for y.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::Matrix;

/// One summand a · λ^i, λ = Σ_k form[k] x_k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerTerm {
    pub coeff: u32,
    pub form: Vec<u32>,
}

fn binomial(field: PrimeField, n: usize, k: usize) -> u32 {
    let mut c = 1u32;
    for t in 0..k {
        c = field.mul(c, (n - t) as u32 % field.p());
        c = field.div(c, (t + 1) as u32);
    }
    c
}

/// Coefficients c_0..c_i with x^a y^{i−a} = Σ_j c_j (j x + y)^i.
fn two_variable(field: PrimeField, i: usize, a: usize) -> Vec<u32> {
    let mut v = Matrix::zeros(field, i + 1, i + 1);
    for k in 0..=i {
        let b = binomial(field, i, k);
        for j in 0..=i {
            v.set(k, j, field.mul(b, field.pow(j as u32, k as u64)));
        }
    }
    let mut rhs = vec![0u32; i + 1];
    rhs[a] = 1;
    v.solve(&rhs).expect("scaled Vandermonde matrix is invertible").particular
}

/// Terms a_j, λ_j with x_1^{e_1} ... x_n^{e_n} = Σ a_j λ_j^i, i = Σ e_k.
/// Requires i < p.
pub fn power_decompose(field: PrimeField, exps: &[usize]) -> Result<Vec<PowerTerm>> {
    let n = exps.len();
    let i: usize = exps.iter().sum();
    if i >= field.p() as usize {
        return Err(Error::InvalidInput(format!(
            "degree {} is not below p = {}",
            i,
            field.p()
        )));
    }
    let mut terms = vec![PowerTerm {
        coeff: 1,
        form: vec![0; n],
    }];
    let mut degree = 0;
    for k in (0..n).rev() {
        let e = exps[k];
        if e == 0 {
            continue;
        }
        if degree == 0 {
            terms[0].form[k] = 1;
            degree = e;
            continue;
        }
        let total = degree + e;
        let c = two_variable(field, total, e);
        let mut next = Vec::with_capacity(terms.len() * c.len());
        for t in &terms {
            for (j, &cj) in c.iter().enumerate() {
                let coeff = field.mul(t.coeff, cj);
                if coeff == 0 {
                    continue;
                }
                let mut form = t.form.clone();
                form[k] = j as u32 % field.p();
                next.push(PowerTerm { coeff, form });
            }
        }
        terms = next;
        degree = total;
    }
    Ok(terms)
}

/// Sparse polynomial over F_p keyed by exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    field: PrimeField,
    nvars: usize,
    terms: BTreeMap<Vec<usize>, u32>,
}

impl Polynomial {
    pub fn zero(field: PrimeField, nvars: usize) -> Self {
        Polynomial {
            field,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: PrimeField, nvars: usize, c: u32) -> Self {
        let mut p = Self::zero(field, nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn monomial(field: PrimeField, exps: &[usize]) -> Self {
        let mut p = Self::zero(field, exps.len());
        p.add_term(exps.to_vec(), 1);
        p
    }

    pub fn linear(field: PrimeField, form: &[u32]) -> Self {
        let mut p = Self::zero(field, form.len());
        for (k, &c) in form.iter().enumerate() {
            let mut e = vec![0; form.len()];
            e[k] = 1;
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exps: Vec<usize>, c: u32) {
        let f = self.field;
        let entry = self.terms.entry(exps).or_insert(0);
        *entry = f.add(*entry, c % f.p());
        self.terms.retain(|_, v| *v != 0);
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, u32> {
        &self.terms
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let mut out = Self::zero(self.field, self.nvars);
        for (e, &v) in &self.terms {
            out.add_term(e.clone(), self.field.mul(v, c));
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Self::zero(self.field, self.nvars);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                let e: Vec<usize> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, self.field.mul(ca, cb));
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Polynomial {
        let mut out = Self::constant(self.field, self.nvars, 1);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }
}

/// Σ a_j λ_j^degree, expanded.
pub fn expand_power_sum(field: PrimeField, nvars: usize, terms: &[PowerTerm], degree: usize) -> Polynomial {
    terms.iter().fold(Polynomial::zero(field, nvars), |acc, t| {
        acc.add(&Polynomial::linear(field, &t.form).pow(degree).scale(t.coeff))
    })
}

/// Decomposes the monomial and checks the identity by expansion.
pub fn verify_power_decomposition(field: PrimeField, exps: &[usize]) -> Result<bool> {
    let terms = power_decompose(field, exps)?;
    let degree = exps.iter().sum();
    Ok(expand_power_sum(field, exps.len(), &terms, degree) == Polynomial::monomial(field, exps))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn single_variable_is_itself() {
        let t = power_decompose(f(5), &[1]).unwrap();
        assert_eq!(t, vec![PowerTerm { coeff: 1, form: vec![1] }]);
    }

    #[test]
    fn xy_at_five() {
        let t = power_decompose(f(5), &[1, 1]).unwrap();
        let got: Vec<(u32, Vec<u32>)> = t.into_iter().map(|t| (t.coeff, t.form)).collect();
        assert_eq!(got, vec![(3, vec![0, 1]), (1, vec![1, 1]), (1, vec![2, 1])]);
    }

    #[test]
    fn rejects_degree_at_least_p() {
        assert!(power_decompose(f(3), &[2, 1]).is_err());
    }

    #[test]
    fn expansion_identity() {
        assert!(verify_power_decomposition(f(7), &[2, 1, 3]).unwrap());
        assert!(verify_power_decomposition(f(5), &[0, 2, 0]).unwrap());
        assert!(verify_power_decomposition(f(3), &[0, 0]).unwrap());
    }
}
