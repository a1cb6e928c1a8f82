//! Exhaustive enumeration of E(r, g)(F_p).
//!
//! Planes are walked by pivot pattern Σ. Within a pattern the canonical basis
//! columns are filled one at a time; once some columns are fixed, commuting
//! with them is a linear condition on the free entries of the next column, so
//! each column ranges over an affine solution space rather than over all its
//! free entries. The column with the smallest solution space is filled next,
//! and each candidate column is tested for p-nilpotency before descending.

use std::borrow::Cow;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grassmann::{free_positions, pivot_patterns, PlanePoint};
use crate::liealg::{all_vectors, subalgebra, AlgebraElement, RestrictedLieAlgebra};
use crate::matrix::Matrix;
use crate::subspace::Subspace;

use super::{certify, ElementaryPoint, DEFAULT_FULL_SCAN_LIMIT};

/// Default cap on candidate columns examined by one enumeration.
pub const DEFAULT_NODE_BUDGET: u64 = 200_000_000;

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Restrict to planes inside the span of these columns (must span a
    /// restricted subalgebra).
    pub within: Option<Matrix>,
    /// Maximum number of candidate columns examined.
    pub budget: u64,
    /// Worker threads; 0 uses the global pool.
    pub workers: usize,
    pub full_scan_limit: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            within: None,
            budget: DEFAULT_NODE_BUDGET,
            workers: 0,
            full_scan_limit: DEFAULT_FULL_SCAN_LIMIT,
        }
    }
}

impl SearchOptions {
    pub fn within(mut self, basis: Matrix) -> Self {
        self.within = Some(basis);
        self
    }

    pub fn budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }
}

/// The result of an enumeration, in canonical order.
#[derive(Clone, Debug)]
pub struct Enumeration {
    pub points: Vec<ElementaryPoint>,
    /// Candidate columns examined.
    pub nodes: u64,
    /// Pivot patterns visited.
    pub patterns: usize,
}

struct Ctx<'a> {
    h: &'a RestrictedLieAlgebra,
    sigma: &'a [usize],
    free: Vec<Vec<usize>>,
    counter: &'a AtomicU64,
    abort: &'a AtomicBool,
    budget: u64,
}

impl Ctx<'_> {
    fn tick(&self) -> Result<()> {
        if self.abort.load(Ordering::Relaxed) {
            return Err(Error::budget("elementary plane search", self.budget as u128 + 1, self.budget as u128));
        }
        let used = self.counter.fetch_add(1, Ordering::Relaxed) + 1;
        if used > self.budget {
            self.abort.store(true, Ordering::Relaxed);
            return Err(Error::budget("elementary plane search", used as u128, self.budget as u128));
        }
        Ok(())
    }

    fn is_p_nilpotent(&self, x: &[u32]) -> bool {
        let x = AlgebraElement::new(x.to_vec());
        match self.h.realize(&x) {
            Some(m) => m.pow(self.h.p() as u64).is_zero(),
            None => self.h.p_power(&x).is_zero(),
        }
    }

    /// Column s = e_{σ_s} + Σ a_i e_{F_s[i]} commuting with every assigned
    /// column: the affine space of admissible `a`.
    fn admissible(&self, s: usize, ads: &[Matrix]) -> Option<(Vec<u32>, Matrix)> {
        let f = self.h.field();
        let fs = &self.free[s];
        if ads.is_empty() {
            return Some((vec![0; fs.len()], Matrix::identity(f, fs.len())));
        }
        let n = self.h.dim();
        let mut a = Matrix::zeros(f, ads.len() * n, fs.len());
        let mut b = vec![0u32; ads.len() * n];
        for (t, ad) in ads.iter().enumerate() {
            for row in 0..n {
                b[t * n + row] = f.neg(ad.get(row, self.sigma[s]));
                for (c, &i) in fs.iter().enumerate() {
                    a.set(t * n + row, c, ad.get(row, i));
                }
            }
        }
        let sol = a.solve(&b)?;
        Some((sol.particular, sol.kernel))
    }

    fn column(&self, s: usize, a: &[u32]) -> Vec<u32> {
        let mut v = vec![0u32; self.h.dim()];
        v[self.sigma[s]] = 1;
        for (&i, &c) in self.free[s].iter().zip(a) {
            v[i] = c;
        }
        v
    }

    fn backtrack(&self, cols: &mut Vec<Option<Vec<u32>>>, ads: &mut Vec<Matrix>, out: &mut Vec<Vec<Vec<u32>>>) -> Result<()> {
        let open: Vec<usize> = (0..cols.len()).filter(|&s| cols[s].is_none()).collect();
        if open.is_empty() {
            out.push(cols.iter().map(|c| c.clone().unwrap()).collect());
            return Ok(());
        }
        let mut best: Option<(usize, Vec<u32>, Matrix)> = None;
        for &s in &open {
            let Some((part, ker)) = self.admissible(s, ads) else {
                return Ok(());
            };
            if best.as_ref().is_none_or(|b| ker.cols() < b.2.cols()) {
                best = Some((s, part, ker));
            }
        }
        let (s, part, ker) = best.expect("at least one open column");
        let f = self.h.field();
        for c in all_vectors(f, ker.cols()) {
            self.tick()?;
            let mut a = part.clone();
            for (o, v) in a.iter_mut().zip(ker.mul_vec(&c)) {
                *o = f.add(*o, v);
            }
            let u = self.column(s, &a);
            if !self.is_p_nilpotent(&u) {
                continue;
            }
            ads.push(self.h.ad(&AlgebraElement::new(u.clone())));
            cols[s] = Some(u);
            let res = self.backtrack(cols, ads, out);
            cols[s] = None;
            ads.pop();
            res?;
        }
        Ok(())
    }
}

/// Every r-dimensional elementary subalgebra of `g` (inside `opts.within`
/// when given), ordered by pivot pattern and then by the free entries of the
/// canonical basis. The order does not depend on the worker count.
pub fn enumerate_elementary(g: &RestrictedLieAlgebra, r: usize, opts: &SearchOptions) -> Result<Enumeration> {
    let field = g.field();
    let (h, embed): (Cow<RestrictedLieAlgebra>, Option<Matrix>) = match &opts.within {
        Some(w) => {
            let s = Subspace::canonical(w);
            let sub = subalgebra(g, s.basis(), &format!("{} (restricted)", g.name()))?;
            (Cow::Owned(sub), Some(s.basis().clone()))
        }
        None => (Cow::Borrowed(g), None),
    };
    let k = h.dim();
    if r > k {
        return Ok(Enumeration {
            points: Vec::new(),
            nodes: 0,
            patterns: 0,
        });
    }
    let patterns: Vec<Vec<usize>> = pivot_patterns(k, r).collect();
    let counter = AtomicU64::new(0);
    let abort = AtomicBool::new(false);
    let run_pattern = |sigma: &Vec<usize>| -> Result<Vec<Vec<Vec<u32>>>> {
        let positions = free_positions(k, sigma);
        let free = (0..r)
            .map(|s| positions.iter().filter(|&&(_, c)| c == s).map(|&(i, _)| i).collect())
            .collect();
        let ctx = Ctx {
            h: &h,
            sigma,
            free,
            counter: &counter,
            abort: &abort,
            budget: opts.budget,
        };
        let mut out = Vec::new();
        ctx.backtrack(&mut vec![None; r], &mut Vec::new(), &mut out)?;
        let key = |cols: &Vec<Vec<u32>>| -> Vec<u32> { positions.iter().map(|&(i, s)| cols[s][i]).collect() };
        out.sort_by_cached_key(key);
        Ok(out)
    };
    let per_pattern: Vec<Result<Vec<Vec<Vec<u32>>>>> = if opts.workers == 0 {
        patterns.par_iter().map(run_pattern).collect()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.workers)
            .build()
            .map_err(|e| Error::InvalidInput(format!("worker pool: {}", e)))?
            .install(|| patterns.par_iter().map(run_pattern).collect())
    };
    let mut points = Vec::new();
    for res in per_pattern {
        for cols in res? {
            let local = Matrix::from_columns(field, k, &cols);
            let basis = match &embed {
                Some(b) => b.mul(&local),
                None => local,
            };
            let plane = PlanePoint::from_span(&basis, r)?;
            let cert = certify(g, plane.basis(), opts.full_scan_limit).ok_or_else(|| {
                Error::InvariantViolation(format!(
                    "search produced a non-elementary plane with pivots {:?}",
                    plane.sigma_one_based()
                ))
            })?;
            points.push(ElementaryPoint::from_parts(plane, cert));
        }
    }
    Ok(Enumeration {
        points,
        nodes: counter.load(Ordering::Relaxed),
        patterns: patterns.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evariety::is_elementary;
    use crate::field::PrimeField;
    use crate::grassmann::{enumerate_grassmannian, DEFAULT_BUDGET};
    use crate::liealg::{gl, nilradical_upper, sl};

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn agrees_with_filtered_grassmannian() {
        let g = nilradical_upper(f(3), 3).unwrap();
        let fast: Vec<PlanePoint> = enumerate_elementary(&g, 2, &SearchOptions::default())
            .unwrap()
            .points
            .into_iter()
            .map(|p| p.plane().clone())
            .collect();
        let slow: Vec<PlanePoint> = enumerate_grassmannian(f(3), 3, 2, DEFAULT_BUDGET)
            .unwrap()
            .filter(|pl| is_elementary(&g, pl))
            .collect();
        assert_eq!(fast, slow);
        assert_eq!(fast.len(), 4);
    }

    #[test]
    fn order_is_independent_of_workers() {
        let g = sl(f(3), 3).unwrap();
        let a = enumerate_elementary(&g, 2, &SearchOptions::default().workers(1)).unwrap();
        let b = enumerate_elementary(&g, 2, &SearchOptions::default().workers(4)).unwrap();
        assert_eq!(a.points, b.points);
        assert!(!a.points.is_empty());
    }

    #[test]
    fn within_nilradical() {
        let g = gl(f(3), 3).unwrap();
        let opts = SearchOptions::default().within(g.nilradical().unwrap().clone());
        let e = enumerate_elementary(&g, 2, &opts).unwrap();
        assert_eq!(e.points.len(), 4);
        for pt in &e.points {
            assert!(is_elementary(&g, pt.plane()));
        }
    }

    #[test]
    fn budget_refusal() {
        let g = gl(f(3), 3).unwrap();
        let err = enumerate_elementary(&g, 2, &SearchOptions::default().budget(10)).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }

    #[test]
    fn too_large_r_is_empty() {
        let g = nilradical_upper(f(3), 3).unwrap();
        assert!(enumerate_elementary(&g, 4, &SearchOptions::default()).unwrap().points.is_empty());
    }
}
