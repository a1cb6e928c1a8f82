//! Versioned output records: JSONL points, CSV survey rows and JSON summaries.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::evariety::ElementaryPoint;
use crate::matrix::Matrix;
use crate::rankfn::{RankProfile, RankSurvey};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointFlags {
    /// None when maximality was not decided within the budget.
    pub maximal: Option<bool>,
    pub certificate: String,
}

/// One line of `enumerate --format jsonl`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointRecord {
    pub schema_version: u32,
    /// 1-based pivot rows.
    pub sigma: Vec<usize>,
    pub basis_matrix: Vec<Vec<i64>>,
    pub flags: PointFlags,
}

impl PointRecord {
    pub fn new(pt: &ElementaryPoint, maximal: Option<bool>) -> Self {
        PointRecord {
            schema_version: SCHEMA_VERSION,
            sigma: pt.plane().sigma_one_based(),
            basis_matrix: pt.plane().basis().to_rows(),
            flags: PointFlags {
                maximal,
                certificate: pt.certificate().as_str().to_string(),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationSummary {
    pub schema_version: u32,
    pub algebra: String,
    pub p: u32,
    pub r: usize,
    pub within: String,
    pub count: usize,
    pub maximal_count: usize,
    pub nodes: u64,
    pub patterns: usize,
}

/// One line of `survey --format jsonl`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileRecord {
    pub schema_version: u32,
    pub sigma: Vec<usize>,
    pub basis_matrix: Vec<Vec<i64>>,
    /// dim Rad^j for the requested j, in order.
    pub rad: Vec<usize>,
    pub soc: Vec<usize>,
    pub free: bool,
    pub free_rank: usize,
    pub in_support: bool,
    pub in_support_direct: bool,
    pub maximal: Option<bool>,
}

impl ProfileRecord {
    pub fn new(prof: &RankProfile, js: &[usize]) -> Self {
        ProfileRecord {
            schema_version: SCHEMA_VERSION,
            sigma: prof.sigma.iter().map(|s| s + 1).collect(),
            basis_matrix: prof.basis.to_rows(),
            rad: js.iter().map(|&j| prof.rad[j]).collect(),
            soc: js.iter().map(|&j| prof.soc[j]).collect(),
            free: prof.free,
            free_rank: prof.free_rank,
            in_support: prof.in_support,
            in_support_direct: prof.in_support_direct,
            maximal: prof.maximal,
        }
    }
}

/// Observed extremes and loci of a survey. `max` is the observed maximum of
/// dim Rad^j and `min` the observed minimum of dim Soc^j, the two extremes
/// whose loci are compared; all four extremes are also given explicitly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveySummary {
    pub schema_version: u32,
    pub algebra: String,
    pub module: String,
    pub p: u32,
    pub r: usize,
    pub points: usize,
    pub j: Vec<usize>,
    pub max: Vec<usize>,
    pub min: Vec<usize>,
    pub rad_max: Vec<usize>,
    pub rad_min: Vec<usize>,
    pub soc_max: Vec<usize>,
    pub soc_min: Vec<usize>,
    pub constant_rad: Vec<bool>,
    pub constant_soc: Vec<bool>,
    pub below_max_counts: Vec<usize>,
    pub above_min_counts: Vec<usize>,
    pub support_count: usize,
    pub support_direct_count: usize,
    pub free_count: usize,
    pub maximal_count: Option<usize>,
}

impl SurveySummary {
    pub fn new(algebra: &str, p: u32, survey: &RankSurvey, js: &[usize]) -> Self {
        let pick = |v: &[usize]| js.iter().map(|&j| v[j]).collect::<Vec<_>>();
        let profiles = &survey.profiles;
        SurveySummary {
            schema_version: SCHEMA_VERSION,
            algebra: algebra.to_string(),
            module: survey.module.clone(),
            p,
            r: survey.r,
            points: profiles.len(),
            j: js.to_vec(),
            max: pick(&survey.rad_max),
            min: pick(&survey.soc_min),
            rad_max: pick(&survey.rad_max),
            rad_min: pick(&survey.rad_min),
            soc_max: pick(&survey.soc_max),
            soc_min: pick(&survey.soc_min),
            constant_rad: js.iter().map(|&j| survey.constant_rad(j)).collect(),
            constant_soc: js.iter().map(|&j| survey.constant_soc(j)).collect(),
            below_max_counts: js.iter().map(|&j| survey.rad_locus(j).len()).collect(),
            above_min_counts: js.iter().map(|&j| survey.soc_locus(j).len()).collect(),
            support_count: survey.support_locus().len(),
            support_direct_count: survey.support_locus_direct().len(),
            free_count: profiles.iter().filter(|p| p.free).count(),
            maximal_count: profiles
                .iter()
                .map(|p| p.maximal.map(usize::from))
                .sum::<Option<usize>>(),
        }
    }
}

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

/// Rows separated by ';', entries by ' '.
pub fn serialize_matrix(m: &Matrix) -> String {
    m.to_rows().iter().map(|r| join(r, " ")).collect::<Vec<_>>().join(";")
}

fn bool_cell(b: Option<bool>) -> String {
    b.map_or(String::new(), |b| b.to_string())
}

/// CSV with columns sigma, basis, rad_j.., soc_j.., free, free_rank,
/// in_support, maximal, schema_version.
pub fn write_survey_csv<W: Write>(out: W, survey: &RankSurvey, js: &[usize]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["sigma".to_string(), "basis".to_string()];
    header.extend(js.iter().map(|j| format!("rad_{}", j)));
    header.extend(js.iter().map(|j| format!("soc_{}", j)));
    header.extend(["free", "free_rank", "in_support", "maximal", "schema_version"].map(String::from));
    w.write_record(&header)?;
    for prof in &survey.profiles {
        let sigma: Vec<usize> = prof.sigma.iter().map(|s| s + 1).collect();
        let mut row = vec![join(&sigma, " "), serialize_matrix(&prof.basis)];
        row.extend(js.iter().map(|&j| prof.rad[j].to_string()));
        row.extend(js.iter().map(|&j| prof.soc[j].to_string()));
        row.push(prof.free.to_string());
        row.push(prof.free_rank.to_string());
        row.push(prof.in_support.to_string());
        row.push(bool_cell(prof.maximal));
        row.push(SCHEMA_VERSION.to_string());
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

/// CSV with columns sigma, basis, certificate, maximal, schema_version.
pub fn write_points_csv<W: Write>(out: W, records: &[PointRecord]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["sigma", "basis", "certificate", "maximal", "schema_version"])?;
    for rec in records {
        let basis = rec.basis_matrix.iter().map(|r| join(r, " ")).collect::<Vec<_>>().join(";");
        w.write_record([
            join(&rec.sigma, " "),
            basis,
            rec.flags.certificate.clone(),
            bool_cell(rec.flags.maximal),
            rec.schema_version.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_jsonl<W: Write, T: Serialize>(mut out: W, records: &[T]) -> Result<()> {
    for rec in records {
        serde_json::to_writer(&mut out, rec)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

pub fn write_json<W: Write, T: Serialize>(mut out: W, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, value)?;
    out.write_all(b"\n")?;
    Ok(())
}
