//! Verification recipes: each states a claim, computes the data over F_p and
//! returns a verdict.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::evariety::triangularize::in_symplectic_nilradical;
use crate::evariety::{
    direct_sum_planes, enumerate_elementary, is_lagrangian_preimage, is_maximal_elementary, lagrangian_count,
    random_symplectic, socle_dimension, symplectic_flag_triangularize, ElementaryPoint, SearchOptions,
    SymplecticQuotient,
};
use crate::field::PrimeField;
use crate::liealg::{
    direct_sum, gl, heisenberg, nilradical_upper, sl, sp, symplectic_form, AlgebraElement, RestrictedLieAlgebra,
};
use crate::matrix::Matrix;
use crate::rankfn::powerdecomp::verify_power_decomposition;
use crate::rankfn::{compositions, rad_dim, rank_survey, SurveyOptions};
use crate::repmod::RestrictedModule;
use crate::subspace::Subspace;

use super::catalog::{parse_algebra, parse_module};
use super::output::SCHEMA_VERSION;

pub const RECIPES: [&str; 9] = [
    "sl-even",
    "sl-odd",
    "sp",
    "heisenberg",
    "product",
    "open-orbit",
    "maximality",
    "radsoc",
    "powerdecomp",
];

#[derive(Clone, Debug)]
pub struct RecipeParams {
    pub p: u32,
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub r: Option<usize>,
    pub algebra: Option<String>,
    pub module: Option<String>,
    pub seed: u64,
    pub budget: u64,
    pub workers: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub recipe: String,
    pub claim: String,
    /// How the search space was reduced, if it was.
    pub reduction: Option<String>,
    pub parameters: Vec<(String, String)>,
    pub observed: Vec<String>,
    pub pass: bool,
}

impl Report {
    fn new(recipe: &str, claim: impl Into<String>) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            recipe: recipe.to_string(),
            claim: claim.into(),
            reduction: None,
            parameters: Vec::new(),
            observed: Vec::new(),
            pass: true,
        }
    }

    fn param(&mut self, k: &str, v: impl ToString) {
        self.parameters.push((k.to_string(), v.to_string()));
    }

    fn observe(&mut self, line: impl Into<String>) {
        self.observed.push(line.into());
    }

    fn require(&mut self, ok: bool, line: impl Into<String>) {
        let line = line.into();
        self.observed.push(if ok { line } else { format!("FAILED: {}", line) });
        self.pass &= ok;
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("recipe: {}\nclaim: {}\n", self.recipe, self.claim);
        if let Some(r) = &self.reduction {
            s += &format!("reduction: {}\n", r);
        }
        let params: Vec<String> = self.parameters.iter().map(|(k, v)| format!("{}={}", k, v)).collect();
        s += &format!("parameters: {}\n", params.join(" "));
        for o in &self.observed {
            s += &format!("  {}\n", o);
        }
        s += &format!("verdict: {}\n", if self.pass { "PASS" } else { "FAIL" });
        s
    }
}

pub fn run_recipe(name: &str, params: &RecipeParams) -> Result<Report> {
    let field = PrimeField::new(params.p)?;
    match name {
        "sl-even" => sl_even(field, params),
        "sl-odd" => sl_odd(field, params),
        "sp" => symplectic(field, params),
        "heisenberg" => heisenberg_recipe(field, params),
        "product" => product(field, params),
        "open-orbit" => open_orbit(field, params),
        "maximality" => maximality(field, params),
        "radsoc" => radsoc(field, params),
        "powerdecomp" => powerdecomp(field, params),
        _ => Err(Error::InvalidInput(format!(
            "unknown recipe '{}' (known: {})",
            name,
            RECIPES.join(", ")
        ))),
    }
}

fn search(g: &RestrictedLieAlgebra, r: usize, params: &RecipeParams) -> Result<Vec<ElementaryPoint>> {
    let opts = SearchOptions::default().budget(params.budget).workers(params.workers);
    Ok(enumerate_elementary(g, r, &opts)?.points)
}

/// Span of E_ij, i < rows ≤ j, inside u_n.
fn block(g: &RestrictedLieAlgebra, n: usize, rows: usize) -> Subspace {
    let f = g.field();
    let vecs: Vec<Vec<u32>> = (0..rows)
        .flat_map(|i| (rows..n).map(move |j| (i, j)))
        .map(|(i, j)| g.coordinates_of(&Matrix::unit(f, n, i, j)).unwrap().into_coords())
        .collect();
    Subspace::from_vectors(f, g.dim(), &vecs)
}

/// dim of the common kernel of ε in the defining representation.
fn nullity(g: &RestrictedLieAlgebra, pt: &ElementaryPoint) -> usize {
    let mats: Vec<Matrix> = pt.basis_elements().iter().map(|u| g.realize(u).unwrap()).collect();
    let n = mats[0].rows();
    n - Matrix::vstack_all(g.field(), n, &mats).rank()
}

const ENGEL: &str = "every elementary subalgebra of gl_n is conjugate into the strictly upper triangular u_n, so only u_n is scanned";

fn sl_even(field: PrimeField, params: &RecipeParams) -> Result<Report> {
    let m = params.m.unwrap_or(2);
    let mut rep = Report::new(
        "sl-even",
        format!("the only elementary subalgebra of u_{} of dimension m^2 = {} is u_{{{m},{m}}}", 2 * m, m * m),
    );
    rep.reduction = Some(ENGEL.into());
    rep.param("m", m);
    rep.param("p", field.p());
    let g = nilradical_upper(field, 2 * m)?;
    let pts = search(&g, m * m, params)?;
    rep.require(pts.len() == 1, format!("{} elementary {}-planes found", pts.len(), m * m));
    if let Some(pt) = pts.first() {
        rep.require(
            *pt.plane().subspace() == block(&g, 2 * m, m),
            format!("the point has pivots {:?}", pt.plane().sigma_one_based()),
        );
    }
    Ok(rep)
}

fn sl_odd(field: PrimeField, params: &RecipeParams) -> Result<Report> {
    let m = params.m.unwrap_or(2);
    let n = 2 * m + 1;
    let r = m * (m + 1);
    let mut rep = Report::new(
        "sl-odd",
        format!(
            "u_{} has exactly two elementary subalgebras of dimension m(m+1) = {}: u_{{{m},{}}} and u_{{{},{m}}}, told apart by the kernel dimension in the defining representation",
            n,
            r,
            m + 1,
            m + 1
        ),
    );
    rep.reduction = Some(ENGEL.into());
    rep.param("m", m);
    rep.param("p", field.p());
    let g = nilradical_upper(field, n)?;
    let pts = search(&g, r, params)?;
    rep.require(pts.len() == 2, format!("{} elementary {}-planes found", pts.len(), r));
    let wide = block(&g, n, m);
    let tall = block(&g, n, m + 1);
    let mut seen = BTreeSet::new();
    for pt in &pts {
        let s = pt.plane().subspace();
        let name = if *s == wide {
            format!("u_{{{},{}}}", m, m + 1)
        } else if *s == tall {
            format!("u_{{{},{}}}", m + 1, m)
        } else {
            "an unexpected plane".to_string()
        };
        let k = nullity(&g, pt);
        rep.observe(format!("{} with kernel dimension {}", name, k));
        seen.insert((*s == wide, *s == tall, k));
    }
    let want: BTreeSet<_> = [(true, false, m), (false, true, m + 1)].into_iter().collect();
    rep.require(seen == want, "the two points are the two blocks with distinct kernel dimensions");
    Ok(rep)
}

fn symplectic(field: PrimeField, params: &RecipeParams) -> Result<Report> {
    let n = params.n.unwrap_or(2);
    let mut rep = Report::new(
        "sp",
        format!(
            "the largest elementary subalgebras of sp_{} have dimension n(n+1)/2 = {}, and each is conjugate by Sp_{} into the standard nilradical",
            2 * n,
            n * (n + 1) / 2,
            2 * n
        ),
    );
    rep.reduction = Some(
        "an elementary subalgebra of sp_2n preserves an isotropic flag, so dimensions are scanned inside the standard nilradical; conjugation is checked on random Sp conjugates of the maximal points".into(),
    );
    rep.param("n", n);
    rep.param("p", field.p());
    rep.param("seed", params.seed);
    let g = sp(field, n)?;
    let nil = g.nilradical().expect("sp carries its nilradical").clone();
    let opts = SearchOptions::default()
        .budget(params.budget)
        .workers(params.workers)
        .within(nil.clone());
    let mut top = Vec::new();
    let mut max_dim = 0;
    for r in 1..=nil.cols() {
        let pts = enumerate_elementary(&g, r, &opts)?.points;
        if pts.is_empty() {
            break;
        }
        rep.observe(format!("dimension {}: {} points in the nilradical", r, pts.len()));
        max_dim = r;
        top = pts;
    }
    rep.require(max_dim == n * (n + 1) / 2, format!("largest elementary dimension {}", max_dim));
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let s = symplectic_form(field, n);
    let mut conjugated = 0;
    for pt in &top {
        let h = random_symplectic(field, n, &mut rng);
        let hinv = h.inverse().expect("symplectic matrices are invertible");
        let cols: Vec<Vec<u32>> = pt
            .basis_elements()
            .iter()
            .map(|u| {
                let moved = h.mul(&g.realize(u).unwrap()).mul(&hinv);
                g.coordinates_of(&moved).expect("Sp conjugation preserves sp").into_coords()
            })
            .collect();
        let moved = ElementaryPoint::from_span(&g, &Matrix::from_columns(field, g.dim(), &cols))?;
        let c = symplectic_flag_triangularize(&g, &moved)?;
        let cinv = c.inverse().expect("conjugator is invertible");
        let ok = c.transpose().mul(&s).mul(&c) == s
            && moved
                .basis_elements()
                .iter()
                .all(|u| in_symplectic_nilradical(&c.mul(&g.realize(u).unwrap()).mul(&cinv)));
        conjugated += usize::from(ok);
    }
    rep.require(
        conjugated == top.len(),
        format!("{} of {} conjugated maximal points brought back into the nilradical", conjugated, top.len()),
    );
    Ok(rep)
}

fn heisenberg_recipe(field: PrimeField, params: &RecipeParams) -> Result<Report> {
    let n = params.n.unwrap_or(3);
    let g = heisenberg(field, n)?;
    let mut rep = Report::new(
        "heisenberg",
        format!(
            "the {}-dimensional elementary subalgebras of heis_{} are the preimages of the Lagrangian subspaces of its {}-dimensional symplectic quotient",
            n,
            n,
            2 * (n - 1)
        ),
    );
    rep.param("n", n);
    rep.param("p", field.p());
    let q = SymplecticQuotient::new(&g)?;
    let pts = search(&g, n, params)?;
    let formula = lagrangian_count(n - 1, field.p() as u64);
    let listed = q.lagrangians().len();
    rep.observe(format!("{} points, product formula {}, isotropic scan {}", pts.len(), formula, listed));
    rep.require(pts.len() as u128 == formula && listed as u128 == formula, "counts agree");
    rep.require(
        pts.iter().all(|pt| is_lagrangian_preimage(&q, pt)),
        "every point contains the center and projects to a Lagrangian",
    );
    Ok(rep)
}

fn product(field: PrimeField, params: &RecipeParams) -> Result<Report> {
    let r = params.r.unwrap_or(2);
    let mut rep = Report::new(
        "product",
        format!("E({r}, sl_2^{r}) is the product of {r} copies of E(1, sl_2) = P^1"),
    );
    rep.param("r", r);
    rep.param("p", field.p());
    let s = sl(field, 2)?;
    let parts: Vec<&RestrictedLieAlgebra> = vec![&s; r];
    let g = direct_sum(&parts)?;
    let pts = search(&g, r, params)?;
    let lines = search(&s, 1, params)?;
    let expect = (field.p() as u128 + 1).pow(r as u32);
    rep.require(
        pts.len() as u128 == expect,
        format!("{} points, (p+1)^r = {}", pts.len(), expect),
    );
    let mut products: BTreeSet<Vec<Vec<i64>>> = BTreeSet::new();
    let mut idx = vec![0usize; r];
    'outer: loop {
        let chosen: Vec<&ElementaryPoint> = idx.iter().map(|&i| &lines[i]).collect();
        products.insert(direct_sum_planes(&chosen)?.basis().to_rows());
        for k in (0..r).rev() {
            idx[k] += 1;
            if idx[k] < lines.len() {
                continue 'outer;
            }
            idx[k] = 0;
        }
        break;
    }
    let found: BTreeSet<Vec<Vec<i64>>> = pts.iter().map(|pt| pt.plane().basis().to_rows()).collect();
    rep.require(found == products, "the points are exactly the sums of lines, one per summand");
    Ok(rep)
}

fn open_orbit(field: PrimeField, params: &RecipeParams) -> Result<Report> {
    let n = params.n.unwrap_or(3);
    let r = params.r.unwrap_or(2);
    let mut rep = Report::new(
        "open-orbit",
        format!(
            "for the defining module of gl_{n}, dim Rad^{} of ε is 1 when ε contains a regular nilpotent and 0 otherwise",
            n - 1
        ),
    );
    rep.param("n", n);
    rep.param("r", r);
    rep.param("p", field.p());
    if (field.p() as usize) < n {
        return Err(Error::InvalidInput(format!("open-orbit needs p >= n, got p = {}, n = {}", field.p(), n)));
    }
    let g = Arc::new(gl(field, n)?);
    let module = RestrictedModule::defining(g.clone())?;
    let pts = search(&g, r, params)?;
    let mut regular = 0;
    let mut bad = 0;
    for pt in &pts {
        let d = rad_dim(&module.restrict(pt)?, n - 1)?;
        let basis = pt.plane().basis();
        let has_regular = crate::liealg::all_vectors(field, r).any(|c| {
            let x = g.realize(&AlgebraElement::new(basis.mul_vec(&c))).unwrap();
            !x.pow(n as u64 - 1).is_zero()
        });
        regular += usize::from(has_regular);
        bad += usize::from(d != usize::from(has_regular));
    }
    rep.observe(format!("{} points, {} containing a regular nilpotent", pts.len(), regular));
    rep.require(bad == 0, format!("{} points where the radical rank disagrees", bad));
    Ok(rep)
}

fn maximality(field: PrimeField, params: &RecipeParams) -> Result<Report> {
    let spec = params.algebra.clone().unwrap_or_else(|| "un:4".into());
    let r = params.r.unwrap_or(2);
    let mut rep = Report::new(
        "maximality",
        "ε is maximal elementary exactly when the socle of g restricted to ε has dimension r",
    );
    rep.param("algebra", &spec);
    rep.param("r", r);
    rep.param("p", field.p());
    let g = parse_algebra(field, &spec)?;
    let trivial = g.has_trivial_p_map(1 << 24)?;
    rep.observe(format!("p-map of {} identically zero: {}", g.name(), trivial));
    let pts = search(&g, r, params)?;
    let mut maximal = 0;
    let mut disagree = 0;
    for pt in &pts {
        let brute = is_maximal_elementary(&g, pt, params.budget as u128)?;
        maximal += usize::from(brute);
        disagree += usize::from(brute != (socle_dimension(&g, pt) == r));
    }
    rep.observe(format!("{} points, {} maximal by direct search", pts.len(), maximal));
    rep.require(disagree == 0, format!("{} points where the socle criterion disagrees", disagree));
    Ok(rep)
}

fn radsoc(field: PrimeField, params: &RecipeParams) -> Result<Report> {
    let spec = params.algebra.clone().unwrap_or_else(|| "abelian:2".into());
    let mspec = params.module.clone().unwrap_or_else(|| "sum:(free:2,1),triv".into());
    let r = params.r.unwrap_or(1);
    let mut rep = Report::new(
        "radsoc",
        "the points where dim Rad^1 drops below its maximum, the support locus, and the points where dim Soc^1 rises above its minimum coincide",
    );
    rep.param("algebra", &spec);
    rep.param("module", &mspec);
    rep.param("r", r);
    rep.param("p", field.p());
    let g = Arc::new(parse_algebra(field, &spec)?);
    let module = parse_module(&g, &mspec)?;
    let pts = search(&g, r, params)?;
    let survey = rank_survey(&module, &pts, r, &SurveyOptions { maximality_budget: None, workers: params.workers })?;
    let free = survey.profiles.iter().filter(|p| p.free).count();
    rep.observe(format!(
        "{} points, {} with free restriction (the coincidence is only expected when some restriction is free)",
        pts.len(),
        free
    ));
    let (rad, supp, soc) = (survey.rad_locus(1), survey.support_locus(), survey.soc_locus(1));
    rep.observe(format!("rad locus {:?}", rad));
    rep.observe(format!("support locus {:?}", supp));
    rep.observe(format!("soc locus {:?}", soc));
    rep.require(rad == supp && supp == soc, "the three loci coincide");
    Ok(rep)
}

fn powerdecomp(field: PrimeField, params: &RecipeParams) -> Result<Report> {
    let n = params.n.unwrap_or(3);
    let mut rep = Report::new(
        "powerdecomp",
        "every monomial of degree i < p is a linear combination of i-th powers of linear forms",
    );
    rep.param("n", n);
    rep.param("p", field.p());
    let mut total = 0;
    let mut bad = Vec::new();
    for vars in 1..=n {
        for deg in 0..field.p() as usize {
            for exps in compositions(deg, vars, deg) {
                total += 1;
                if !verify_power_decomposition(field, &exps)? {
                    bad.push(exps);
                }
            }
        }
    }
    rep.require(bad.is_empty(), format!("{} monomials expanded, {} mismatches", total, bad.len()));
    Ok(rep)
}
