//! Spec strings for algebras, modules and `--within`.
//!
//! Algebras: `gl:n`, `sl:n`, `sp:2n`, `un:n`, `heis:n`, `unr:r,s`,
//! `parab-nilrad:n:J=a,b,..`, `abelian:n`, `g1:n`, `cext:n[:trace]`, joined by
//! `+` for direct sums, with `^k` for k-fold sums of one summand.
//!
//! Modules: `triv`, `defining`, `adjoint`, `dual:<m>`, `tensor:<m>,<m>`,
//! `sum:<m>,<m>`, `free:r,a`, `coord-free:i`, `file:<path>`. Nested module
//! arguments may be parenthesized, e.g. `tensor:(dual:defining),defining`.

use std::path::Path;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::liealg::{
    abelian, central_extension_gl2n, direct_sum, g1, gl, heisenberg, nilradical_upper, parabolic_nilradical, sl, sp,
    trace_functional, u_rs, RestrictedLieAlgebra,
};
use crate::matrix::Matrix;
use crate::repmod::RestrictedModule;

pub const ALGEBRA_CATALOG: &str =
    "gl:n, sl:n, sp:2n, un:n, heis:n, unr:r,s, parab-nilrad:n:J=a,b,.., abelian:n, g1:n, cext:n[:trace]; join with '+', repeat with '^k'";

pub const MODULE_CATALOG: &str =
    "triv, defining, adjoint, dual:<m>, tensor:<m>,<m>, sum:<m>,<m>, free:r,a, coord-free:i, file:<path>";

fn bad_algebra(s: &str, why: &str) -> Error {
    Error::InvalidInput(format!("algebra spec '{}': {} (known: {})", s, why, ALGEBRA_CATALOG))
}

fn bad_module(s: &str, why: &str) -> Error {
    Error::InvalidInput(format!("module spec '{}': {} (known: {})", s, why, MODULE_CATALOG))
}

fn numbers(s: &str, spec: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| bad_algebra(spec, "expected integers")))
        .collect()
}

fn one_number(s: &str, spec: &str) -> Result<usize> {
    match numbers(s, spec)?.as_slice() {
        [n] => Ok(*n),
        _ => Err(bad_algebra(spec, "expected one integer")),
    }
}

fn algebra_term(field: PrimeField, term: &str) -> Result<RestrictedLieAlgebra> {
    let (name, args) = term.split_once(':').unwrap_or((term, ""));
    match name {
        "gl" => gl(field, one_number(args, term)?),
        "sl" => sl(field, one_number(args, term)?),
        "sp" => {
            let m = one_number(args, term)?;
            if m % 2 != 0 {
                return Err(bad_algebra(term, "sp takes an even matrix size"));
            }
            sp(field, m / 2)
        }
        "un" => nilradical_upper(field, one_number(args, term)?),
        "heis" => heisenberg(field, one_number(args, term)?),
        "unr" => match numbers(args, term)?.as_slice() {
            [r, s] => u_rs(field, *r, *s),
            _ => Err(bad_algebra(term, "unr takes r,s")),
        },
        "parab-nilrad" => {
            let (n, j) = args
                .split_once(":J=")
                .ok_or_else(|| bad_algebra(term, "expected parab-nilrad:n:J=a,b"))?;
            let roots = if j.is_empty() { Vec::new() } else { numbers(j, term)? };
            parabolic_nilradical(field, one_number(n, term)?, &roots)
        }
        "abelian" | "ga" => abelian(field, one_number(args, term)?),
        "g1" => g1(field, one_number(args, term)?),
        "cext" => {
            let (n, phi) = args.split_once(':').unwrap_or((args, ""));
            let n = one_number(n, term)?;
            let functional = match phi {
                "" | "split" => vec![0; 4 * n * n],
                "trace" => trace_functional(n),
                _ => return Err(bad_algebra(term, "cext takes n or n:trace")),
            };
            central_extension_gl2n(field, n, &functional)
        }
        _ => Err(bad_algebra(term, "unknown algebra")),
    }
}

/// Parses an algebra spec over F_p.
pub fn parse_algebra(field: PrimeField, spec: &str) -> Result<RestrictedLieAlgebra> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Err(bad_algebra(spec, "empty"));
    }
    let mut parts = Vec::new();
    for term in spec.split('+') {
        let term = term.trim();
        let (base, k) = match term.rsplit_once('^') {
            Some((b, k)) => (b, k.parse::<usize>().map_err(|_| bad_algebra(term, "bad exponent"))?),
            None => (term, 1),
        };
        if k == 0 {
            return Err(bad_algebra(term, "exponent must be positive"));
        }
        let g = algebra_term(field, base)?;
        parts.extend(std::iter::repeat_n(g, k));
    }
    if parts.len() == 1 {
        return Ok(parts.pop().unwrap());
    }
    let refs: Vec<&RestrictedLieAlgebra> = parts.iter().collect();
    Ok(direct_sum(&refs)?.with_name(spec.to_string()))
}

fn strip_parens(s: &str) -> &str {
    let s = s.trim();
    if s.starts_with('(') && s.ends_with(')') && matching_close(s) == Some(s.len() - 1) {
        strip_parens(&s[1..s.len() - 1])
    } else {
        s
    }
}

fn matching_close(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

/// Positions of the commas outside parentheses.
fn top_level_commas(s: &str) -> Vec<usize> {
    let mut depth = 0i32;
    let mut out = Vec::new();
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => out.push(i),
            _ => {}
        }
    }
    out
}

/// Parses a module spec over `g`.
pub fn parse_module(g: &Arc<RestrictedLieAlgebra>, spec: &str) -> Result<RestrictedModule> {
    let spec = strip_parens(spec);
    let (name, args) = spec.split_once(':').unwrap_or((spec, ""));
    // the first top-level comma at which both halves parse
    let pair = |args: &str| -> Result<(RestrictedModule, RestrictedModule)> {
        let mut last = bad_module(spec, "expected two modules");
        for i in top_level_commas(args) {
            match parse_module(g, &args[..i]).and_then(|a| Ok((a, parse_module(g, &args[i + 1..])?))) {
                Ok(ab) => return Ok(ab),
                Err(e) => last = e,
            }
        }
        Err(last)
    };
    match name {
        "triv" | "trivial" => Ok(RestrictedModule::trivial(g.clone())),
        "defining" => RestrictedModule::defining(g.clone()),
        "adjoint" => RestrictedModule::adjoint(g.clone()),
        "dual" => Ok(parse_module(g, args)?.dual()),
        "tensor" => {
            let (a, b) = pair(args)?;
            a.tensor(&b)
        }
        "sum" => {
            let (a, b) = pair(args)?;
            a.direct_sum(&b)
        }
        "free" => {
            let nums: Vec<usize> = args
                .split(',')
                .map(|t| t.trim().parse().map_err(|_| bad_module(spec, "expected free:r,a")))
                .collect::<Result<_>>()?;
            match nums.as_slice() {
                [r, a] if *r == g.dim() => RestrictedModule::free_over_abelian(g.clone(), *a),
                [_, _] => Err(bad_module(spec, &format!("free:r,a needs an abelian algebra of dimension r, got {}", g.name()))),
                _ => Err(bad_module(spec, "expected free:r,a")),
            }
        }
        "coord-free" => {
            let i: usize = args.trim().parse().map_err(|_| bad_module(spec, "expected coord-free:i"))?;
            if i == 0 {
                return Err(bad_module(spec, "coordinates are numbered from 1"));
            }
            RestrictedModule::coordinate_free(g.clone(), i - 1)
        }
        "file" => RestrictedModule::from_json_file(g.clone(), Path::new(args)),
        _ => Err(bad_module(spec, "unknown module")),
    }
}

/// `all`, `nilradical` or `subalgebra:i,j,..` (1-based coordinates of g).
/// Returns the spanning columns, or None for the whole algebra.
pub fn parse_within(g: &RestrictedLieAlgebra, spec: &str) -> Result<Option<Matrix>> {
    let spec = spec.trim();
    match spec.split_once(':').unwrap_or((spec, "")) {
        ("all", "") => Ok(None),
        ("nilradical", "") => g
            .nilradical()
            .cloned()
            .map(Some)
            .ok_or_else(|| Error::InvalidInput(format!("{} has no designated nilradical", g.name()))),
        ("subalgebra", idx) => {
            let mut cols = Vec::new();
            for t in idx.split(',') {
                let i: usize = t
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidInput(format!("--within '{}': expected 1-based indices", spec)))?;
                if i == 0 || i > g.dim() {
                    return Err(Error::OutOfRange(format!("coordinate {} of {}", i, g.name())));
                }
                cols.push(g.basis_element(i - 1).into_coords());
            }
            Ok(Some(Matrix::from_columns(g.field(), g.dim(), &cols)))
        }
        _ => Err(Error::InvalidInput(format!(
            "--within '{}': expected all, nilradical or subalgebra:i,j,..",
            spec
        ))),
    }
}
