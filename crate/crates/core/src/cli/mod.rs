//! Command-line front end: `enumerate`, `survey`, `verify` and `catalog`.
//!
//! Exit codes: 0 success or PASS, 1 verification failure, 2 budget refusal,
//! 3 invalid input.

pub mod catalog;
pub mod output;
pub mod recipes;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::evariety::search::DEFAULT_NODE_BUDGET;
use crate::evariety::{enumerate_elementary, is_maximal_elementary, SearchOptions};
use crate::field::PrimeField;
use crate::rankfn::{rank_survey, SurveyOptions};

use catalog::{parse_algebra, parse_module, parse_within, ALGEBRA_CATALOG, MODULE_CATALOG};
use output::{
    write_json, write_jsonl, write_points_csv, write_survey_csv, EnumerationSummary, PointRecord, ProfileRecord,
    SurveySummary, SCHEMA_VERSION,
};
use recipes::{run_recipe, RecipeParams, RECIPES};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_BUDGET: u8 = 2;
pub const EXIT_INVALID: u8 = 3;

/// Default number of lines scanned when deciding maximality of one point.
pub const DEFAULT_MAXIMALITY_BUDGET: u128 = 1 << 20;

#[derive(Parser, Debug)]
#[command(name = "elementary", version, about = "Elementary subalgebras of restricted Lie algebras over F_p")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the points of E(r, g)(F_p).
    Enumerate(EnumerateArgs),
    /// Radical and socle ranks of a module at every point of E(r, g)(F_p).
    Survey(SurveyArgs),
    /// Run a verification recipe and print a PASS/FAIL report.
    Verify(VerifyArgs),
    /// Print the algebra, module and recipe catalogs.
    Catalog,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Jsonl,
    JsonSummary,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Odd prime p.
    #[arg(long, default_value_t = 3)]
    pub p: u32,
    /// Node budget for enumeration (candidate columns examined).
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    pub budget: u64,
    /// Worker threads; 0 uses all cores. Output does not depend on it.
    #[arg(long, default_value_t = 0)]
    pub workers: usize,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Seed for randomized steps.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub algebra: String,
    #[arg(long)]
    pub r: usize,
    /// all, nilradical or subalgebra:i,j,.. (1-based coordinates).
    #[arg(long, default_value = "all")]
    pub within: String,
    /// Skip the per-point maximality check.
    #[arg(long)]
    pub no_maximality: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct SurveyArgs {
    #[arg(long)]
    pub algebra: String,
    #[arg(long)]
    pub module: String,
    #[arg(long)]
    pub r: usize,
    /// Degrees to report: "j", "a..b" or "a..=b"; default 1..=(p-1)r.
    #[arg(long)]
    pub j: Option<String>,
    #[arg(long, default_value = "all")]
    pub within: String,
    /// Also decide maximality of every point.
    #[arg(long)]
    pub maximality: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// One of the recipes listed by `catalog`.
    pub recipe: String,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub algebra: Option<String>,
    #[arg(long)]
    pub module: Option<String>,
    #[command(flatten)]
    pub common: Common,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_INVALID,
    }
}

fn open_out(out: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

/// Parses "j", "a..b" or "a..=b" against the top degree d.
pub fn parse_j_range(s: &str, d: usize) -> Result<Vec<usize>> {
    let bad = || Error::InvalidInput(format!("--j '{}': expected j, a..b or a..=b", s));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let (lo, hi) = if let Some((a, b)) = s.split_once("..=") {
        (num(a)?, num(b)?)
    } else if let Some((a, b)) = s.split_once("..") {
        let b = num(b)?;
        if b == 0 {
            return Err(bad());
        }
        (num(a)?, b - 1)
    } else {
        let j = num(s)?;
        (j, j)
    };
    if lo > hi || hi > d {
        return Err(Error::OutOfRange(format!("--j {} (0..={})", s, d)));
    }
    Ok((lo..=hi).collect())
}

fn with_pool<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    if workers == 0 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidInput(format!("--workers {}: {}", workers, e)))?;
    Ok(pool.install(f))
}

fn cmd_enumerate(args: &EnumerateArgs) -> Result<u8> {
    let c = &args.common;
    let field = PrimeField::new(c.p)?;
    let g = parse_algebra(field, &args.algebra)?;
    let mut opts = SearchOptions::default().budget(c.budget).workers(c.workers);
    if let Some(w) = parse_within(&g, &args.within)? {
        opts = opts.within(w);
    }
    let found = enumerate_elementary(&g, args.r, &opts)?;
    let records: Vec<PointRecord> = with_pool(c.workers, || {
        use rayon::prelude::*;
        found
            .points
            .par_iter()
            .map(|pt| {
                let maximal = if args.no_maximality {
                    None
                } else {
                    is_maximal_elementary(&g, pt, DEFAULT_MAXIMALITY_BUDGET).ok()
                };
                PointRecord::new(pt, maximal)
            })
            .collect()
    })?;
    eprintln!("count {}", records.len());
    let mut out = open_out(&c.out)?;
    match c.format.unwrap_or(Format::Jsonl) {
        Format::Jsonl => write_jsonl(&mut out, &records)?,
        Format::Csv => write_points_csv(&mut out, &records)?,
        Format::JsonSummary => write_json(
            &mut out,
            &EnumerationSummary {
                schema_version: SCHEMA_VERSION,
                algebra: g.name().to_string(),
                p: c.p,
                r: args.r,
                within: args.within.clone(),
                count: records.len(),
                maximal_count: records.iter().filter(|r| r.flags.maximal == Some(true)).count(),
                nodes: found.nodes,
                patterns: found.patterns,
            },
        )?,
    }
    out.flush()?;
    Ok(EXIT_PASS)
}

fn cmd_survey(args: &SurveyArgs) -> Result<u8> {
    let c = &args.common;
    let field = PrimeField::new(c.p)?;
    let g = Arc::new(parse_algebra(field, &args.algebra)?);
    let module = parse_module(&g, &args.module)?;
    let d = (c.p as usize - 1) * args.r;
    let js = match &args.j {
        Some(s) => parse_j_range(s, d)?,
        None => (1..=d).collect(),
    };
    let mut opts = SearchOptions::default().budget(c.budget).workers(c.workers);
    if let Some(w) = parse_within(&g, &args.within)? {
        opts = opts.within(w);
    }
    let points = enumerate_elementary(&g, args.r, &opts)?.points;
    let sopts = SurveyOptions {
        maximality_budget: args.maximality.then_some(DEFAULT_MAXIMALITY_BUDGET),
        workers: c.workers,
    };
    let survey = rank_survey(&module, &points, args.r, &sopts)?;
    eprintln!("count {}", survey.profiles.len());
    let mut out = open_out(&c.out)?;
    match c.format.unwrap_or(Format::Csv) {
        Format::Csv => write_survey_csv(&mut out, &survey, &js)?,
        Format::Jsonl => {
            let recs: Vec<ProfileRecord> = survey.profiles.iter().map(|p| ProfileRecord::new(p, &js)).collect();
            write_jsonl(&mut out, &recs)?
        }
        Format::JsonSummary => write_json(&mut out, &SurveySummary::new(g.name(), c.p, &survey, &js))?,
    }
    out.flush()?;
    Ok(EXIT_PASS)
}

fn cmd_verify(args: &VerifyArgs) -> Result<u8> {
    let c = &args.common;
    let params = RecipeParams {
        p: c.p,
        m: args.m,
        n: args.n,
        r: args.r,
        algebra: args.algebra.clone(),
        module: args.module.clone(),
        seed: c.seed,
        budget: c.budget,
        workers: c.workers,
    };
    let report = with_pool(c.workers, || run_recipe(&args.recipe, &params))??;
    let mut out = open_out(&c.out)?;
    match c.format {
        None => out.write_all(report.to_text().as_bytes())?,
        Some(Format::JsonSummary) => write_json(&mut out, &report)?,
        Some(Format::Jsonl) => write_jsonl(&mut out, std::slice::from_ref(&report))?,
        Some(Format::Csv) => {
            return Err(Error::InvalidInput("verify writes text, jsonl or json-summary".into()));
        }
    }
    out.flush()?;
    Ok(if report.pass { EXIT_PASS } else { EXIT_FAIL })
}

fn cmd_catalog() -> Result<u8> {
    println!("algebras: {}", ALGEBRA_CATALOG);
    println!("modules:  {}", MODULE_CATALOG);
    println!("recipes:  {}", RECIPES.join(", "));
    Ok(EXIT_PASS)
}

pub fn execute(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Enumerate(a) => cmd_enumerate(a),
        Command::Survey(a) => cmd_survey(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Catalog => cmd_catalog(),
    }
}

/// Parses arguments, runs the command and maps the outcome to an exit code.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INVALID } else { EXIT_PASS });
        }
    };
    match execute(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(exit_code(&e))
        }
    }
}
