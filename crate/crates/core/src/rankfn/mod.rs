//! Radical and socle ranks of restrictions ε*M, Jordan types, freeness,
//! support loci and rank surveys over E(r, g)(F_p).

pub mod powerdecomp;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::evariety::{is_maximal_elementary, ElementaryPoint};
use crate::grassmann::chart_representative;
use crate::liealg::{all_vectors, AlgebraElement};
use crate::matrix::Matrix;
use crate::repmod::{RestrictedModule, RestrictedTuple};

pub use powerdecomp::{power_decompose, PowerTerm};

/// The largest j with possibly nonzero Rad^j: (p − 1) r.
pub fn max_degree(t: &RestrictedTuple) -> usize {
    (t.field().p() as usize - 1) * t.r()
}

/// Compositions j_1 + ... + j_r = j with 0 <= j_s <= cap, lexicographic.
pub fn compositions(j: usize, r: usize, cap: usize) -> Vec<Vec<usize>> {
    fn rec(j: usize, r: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if r == 0 {
            if j == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if j > cap * r {
            return;
        }
        for a in 0..=cap.min(j) {
            cur.push(a);
            rec(j - a, r - 1, cap, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(j, r, cap, &mut Vec::new(), &mut out);
    out
}

/// u_1^{e_1} ... u_r^{e_r}.
pub fn monomial(t: &RestrictedTuple, exps: &[usize]) -> Matrix {
    let mut m = Matrix::identity(t.field(), t.dim());
    for (op, &e) in t.ops().iter().zip(exps) {
        if e > 0 {
            m = m.mul(&op.pow(e as u64));
        }
    }
    m
}

fn check_degree(t: &RestrictedTuple, j: usize) -> Result<()> {
    if j > max_degree(t) {
        return Err(Error::OutOfRange(format!("degree j = {} (0..={})", j, max_degree(t))));
    }
    Ok(())
}

fn degree_monomials(t: &RestrictedTuple, j: usize) -> Vec<Matrix> {
    let cap = t.field().p() as usize - 1;
    compositions(j, t.r(), cap).iter().map(|e| monomial(t, e)).collect()
}

/// dim Rad^j(ε*M): the rank of all degree-j monomials placed side by side.
/// Rad^0 = M.
pub fn rad_dim(t: &RestrictedTuple, j: usize) -> Result<usize> {
    check_degree(t, j)?;
    let mons = degree_monomials(t, j);
    if mons.is_empty() {
        return Ok(0);
    }
    let mut stacked = mons[0].clone();
    for m in &mons[1..] {
        stacked = stacked.hstack(m);
    }
    Ok(stacked.rank())
}

/// dim Soc^j(ε*M): the common kernel of all degree-j monomials. Soc^0 = 0.
pub fn soc_dim(t: &RestrictedTuple, j: usize) -> Result<usize> {
    check_degree(t, j)?;
    let mons = degree_monomials(t, j);
    if mons.is_empty() {
        return Ok(t.dim());
    }
    Ok(t.dim() - Matrix::vstack_all(t.field(), t.dim(), &mons).rank())
}

/// dim Rad^j for j = 0..=(p−1)r via Rad^j = Σ_s u_s Rad^{j−1}.
pub fn radical_series_dims(t: &RestrictedTuple) -> Vec<usize> {
    let f = t.field();
    let mut cur = Matrix::identity(f, t.dim());
    let mut dims = vec![cur.rank()];
    for _ in 0..max_degree(t) {
        let images: Vec<Vec<u32>> = t.ops().iter().flat_map(|u| u.mul(&cur).columns()).collect();
        let next = crate::subspace::Subspace::from_vectors(f, t.dim(), &images);
        dims.push(next.dim());
        cur = next.basis().clone();
    }
    dims
}

/// Jordan type of the single operator of a rank-one restriction, as a
/// non-increasing partition of dim M.
pub fn jordan_type(t: &RestrictedTuple) -> Result<Vec<usize>> {
    if t.r() != 1 {
        return Err(Error::InvalidInput(format!("Jordan type needs r = 1, got r = {}", t.r())));
    }
    let u = &t.ops()[0];
    let d = t.dim();
    let mut ranks = vec![d];
    let mut pw = Matrix::identity(t.field(), d);
    while *ranks.last().unwrap() > 0 {
        pw = pw.mul(u);
        let rk = pw.rank();
        if rk == *ranks.last().unwrap() {
            return Err(Error::InvariantViolation("operator is not nilpotent".into()));
        }
        ranks.push(rk);
    }
    // blocks of size >= k: ranks[k-1] − ranks[k]
    let mut parts = Vec::new();
    let at_least: Vec<usize> = (1..ranks.len()).map(|k| ranks[k - 1] - ranks[k]).collect();
    for k in (1..=at_least.len()).rev() {
        let exactly = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
        parts.extend(std::iter::repeat_n(k, exactly));
    }
    Ok(parts)
}

/// (free?, a) where a = rank of Π_s u_s^{p−1}; ε*M is free iff a p^r = dim M.
pub fn is_free_restriction(t: &RestrictedTuple) -> (bool, usize) {
    let cap = t.field().p() as usize - 1;
    let a = monomial(t, &vec![cap; t.r()]).rank();
    let block = (t.field().p() as usize).pow(t.r() as u32);
    (a * block == t.dim(), a)
}

/// Θ_s^Σ(ε) = Σ_i Y_{i,s} ρ(x_i), where Y is the chart representative of the
/// plane spanned by `basis` in the chart Σ (s is 0-based).
pub fn theta_specialize(m: &RestrictedModule, basis: &Matrix, sigma: &[usize], s: usize) -> Result<Matrix> {
    if basis.rows() != m.algebra().dim() {
        return Err(Error::AlgebraMismatch(format!(
            "plane in a {}-dimensional space, module over {}",
            basis.rows(),
            m.algebra().name()
        )));
    }
    if s >= basis.cols() {
        return Err(Error::OutOfRange(format!("operator index {} for r = {}", s, basis.cols())));
    }
    let y = chart_representative(basis, sigma)?;
    Ok(m.act(&AlgebraElement::new(y.column(s))))
}

/// Whether some nonzero x ∈ ε has non-free restriction, by scanning the
/// lines of ε.
pub fn in_support_via_lines(m: &RestrictedModule, pt: &ElementaryPoint) -> bool {
    let f = m.field();
    let basis = pt.plane().basis();
    all_vectors(f, pt.r())
        .filter(|c| c.iter().find(|&&x| x != 0) == Some(&1))
        .any(|c| {
            let x = AlgebraElement::new(basis.mul_vec(&c));
            let t = m.restrict_basis(&Matrix::from_columns(f, basis.rows(), &[x.into_coords()]));
            !is_free_restriction(&t).0
        })
}

/// Radical and socle dimensions of ε*M for j = 0..=(p−1)r, with freeness,
/// support membership and (optionally) maximality of ε.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankProfile {
    pub sigma: Vec<usize>,
    pub basis: Matrix,
    pub rad: Vec<usize>,
    pub soc: Vec<usize>,
    pub free: bool,
    pub free_rank: usize,
    /// Some line of ε is non-free.
    pub in_support: bool,
    /// ε*M itself is not free.
    pub in_support_direct: bool,
    pub maximal: Option<bool>,
}

pub fn rank_profile(m: &RestrictedModule, pt: &ElementaryPoint) -> Result<RankProfile> {
    let t = m.restrict(pt)?;
    let d = max_degree(&t);
    let rad = (0..=d).map(|j| rad_dim(&t, j)).collect::<Result<Vec<_>>>()?;
    let soc = (0..=d).map(|j| soc_dim(&t, j)).collect::<Result<Vec<_>>>()?;
    let (free, free_rank) = is_free_restriction(&t);
    Ok(RankProfile {
        sigma: pt.sigma().to_vec(),
        basis: pt.plane().basis().clone(),
        rad,
        soc,
        free,
        free_rank,
        in_support: in_support_via_lines(m, pt),
        in_support_direct: !free,
        maximal: None,
    })
}

#[derive(Clone, Debug, Default)]
pub struct SurveyOptions {
    /// Also decide maximality of every point, with this scan budget.
    pub maximality_budget: Option<u128>,
    /// Worker threads; 0 uses the global pool.
    pub workers: usize,
}

/// Profiles of every surveyed point with observed extremes and loci. The
/// extremes are taken over the surveyed F_p-points only.
#[derive(Clone, Debug)]
pub struct RankSurvey {
    pub module: String,
    pub r: usize,
    pub degree: usize,
    pub profiles: Vec<RankProfile>,
    pub rad_max: Vec<usize>,
    pub rad_min: Vec<usize>,
    pub soc_max: Vec<usize>,
    pub soc_min: Vec<usize>,
}

impl RankSurvey {
    pub fn from_profiles(module: impl Into<String>, r: usize, degree: usize, profiles: Vec<RankProfile>) -> Self {
        let ext = |f: &dyn Fn(&RankProfile) -> &Vec<usize>, max: bool| -> Vec<usize> {
            (0..=degree)
                .map(|j| {
                    let it = profiles.iter().map(|p| f(p)[j]);
                    if max {
                        it.max().unwrap_or(0)
                    } else {
                        it.min().unwrap_or(0)
                    }
                })
                .collect()
        };
        RankSurvey {
            module: module.into(),
            r,
            degree,
            rad_max: ext(&|p| &p.rad, true),
            rad_min: ext(&|p| &p.rad, false),
            soc_max: ext(&|p| &p.soc, true),
            soc_min: ext(&|p| &p.soc, false),
            profiles,
        }
    }

    /// Indices of points with dim Rad^j below the observed maximum.
    pub fn rad_locus(&self, j: usize) -> Vec<usize> {
        (0..self.profiles.len())
            .filter(|&k| self.profiles[k].rad[j] < self.rad_max[j])
            .collect()
    }

    /// Indices of points with dim Soc^j above the observed minimum.
    pub fn soc_locus(&self, j: usize) -> Vec<usize> {
        (0..self.profiles.len())
            .filter(|&k| self.profiles[k].soc[j] > self.soc_min[j])
            .collect()
    }

    /// Indices of points in the support locus (line scan).
    pub fn support_locus(&self) -> Vec<usize> {
        (0..self.profiles.len()).filter(|&k| self.profiles[k].in_support).collect()
    }

    /// Indices of points whose restriction is not free.
    pub fn support_locus_direct(&self) -> Vec<usize> {
        (0..self.profiles.len())
            .filter(|&k| self.profiles[k].in_support_direct)
            .collect()
    }

    pub fn constant_rad(&self, j: usize) -> bool {
        self.rad_locus(j).is_empty()
    }

    pub fn constant_soc(&self, j: usize) -> bool {
        self.soc_locus(j).is_empty()
    }
}

/// Profiles of `m` at every given point, in the given order.
pub fn rank_survey(m: &RestrictedModule, points: &[ElementaryPoint], r: usize, opts: &SurveyOptions) -> Result<RankSurvey> {
    let g = m.algebra();
    let one = |pt: &ElementaryPoint| -> Result<RankProfile> {
        let mut prof = rank_profile(m, pt)?;
        if let Some(b) = opts.maximality_budget {
            prof.maximal = Some(is_maximal_elementary(g, pt, b)?);
        }
        Ok(prof)
    };
    let profiles: Result<Vec<RankProfile>> = if opts.workers == 0 {
        points.par_iter().map(one).collect()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.workers)
            .build()
            .map_err(|e| Error::InvalidInput(format!("worker pool: {}", e)))?
            .install(|| points.par_iter().map(one).collect())
    };
    let degree = (m.field().p() as usize - 1) * r;
    Ok(RankSurvey::from_profiles(m.name(), r, degree, profiles?))
}
