//! The command-line binary: outputs, determinism and exit codes.

use std::process::{Command, Output};

use elementary::cli::output::{EnumerationSummary, PointRecord, ProfileRecord, SurveySummary};
use elementary::cli::recipes::Report;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_elementary")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn summary(args: &[&str]) -> EnumerationSummary {
    let mut a = args.to_vec();
    a.extend(["--format", "json-summary"]);
    serde_json::from_str(&stdout(&a)).unwrap()
}

#[test]
fn enumeration_counts() {
    assert_eq!(summary(&["enumerate", "--algebra", "heis:2", "--r", "2", "--p", "3"]).count, 4);
    assert_eq!(summary(&["enumerate", "--algebra", "sl:2", "--r", "1", "--p", "5"]).count, 6);
}

#[test]
fn gl3_nilradical_contains_both_blocks() {
    let text = stdout(&["enumerate", "--algebra", "gl:3", "--r", "2", "--p", "3", "--within", "nilradical"]);
    let recs: Vec<PointRecord> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    // gl_3 coordinates are E_ij row-major: E12 = 2, E13 = 3, E23 = 6 (1-based)
    let sigmas: Vec<Vec<usize>> = recs.iter().map(|r| r.sigma.clone()).collect();
    assert!(sigmas.contains(&vec![2, 3]));
    assert!(sigmas.contains(&vec![3, 6]));
    assert!(recs.iter().all(|r| r.schema_version == 1 && r.flags.maximal == Some(true)));
}

#[test]
fn outputs_are_byte_identical_across_runs_and_workers() {
    let dir = tempfile::tempdir().unwrap();
    let mut files = Vec::new();
    for (k, workers) in ["1", "4", "4"].iter().enumerate() {
        let path = dir.path().join(format!("out{}.csv", k));
        let p = path.to_str().unwrap();
        stdout(&[
            "survey", "--algebra", "un:4", "--module", "adjoint", "--r", "2", "--p", "3", "--workers", workers, "--out", p,
            "--maximality",
        ]);
        files.push(std::fs::read(&path).unwrap());
    }
    assert!(!files[0].is_empty());
    assert_eq!(files[0], files[1]);
    assert_eq!(files[1], files[2]);
}

#[test]
fn json_outputs_round_trip() {
    let text = stdout(&["enumerate", "--algebra", "un:4", "--r", "2", "--p", "3"]);
    for line in text.lines() {
        let rec: PointRecord = serde_json::from_str(line).unwrap();
        assert_eq!(serde_json::to_string(&rec).unwrap(), line);
    }
    let text = stdout(&["survey", "--algebra", "gl:2", "--module", "defining", "--r", "1", "--format", "jsonl"]);
    for line in text.lines() {
        let rec: ProfileRecord = serde_json::from_str(line).unwrap();
        assert_eq!(serde_json::to_string(&rec).unwrap(), line);
    }
    let text = stdout(&[
        "survey", "--algebra", "gl:3", "--module", "defining", "--r", "2", "--p", "5", "--j", "2", "--format", "json-summary",
    ]);
    let s: SurveySummary = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::from_str::<SurveySummary>(&serde_json::to_string(&s).unwrap()).unwrap(), s);
    assert_eq!((s.j.clone(), s.rad_max.clone(), s.rad_min.clone()), (vec![2], vec![1], vec![0]));
}

#[test]
fn survey_csv_columns() {
    let text = stdout(&["survey", "--algebra", "abelian:2", "--module", "free:2,1", "--r", "1", "--p", "3"]);
    let mut rows = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<String> = rows.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(
        header,
        ["sigma", "basis", "rad_1", "rad_2", "soc_1", "soc_2", "free", "free_rank", "in_support", "maximal", "schema_version"]
    );
    for row in rows.records() {
        let row = row.unwrap();
        assert_eq!(&row[6], "true");
        assert_eq!(&row[7], "3");
    }
}

#[test]
fn recipes_pass() {
    for args in [
        vec!["verify", "sl-even", "--m", "2", "--p", "3"],
        vec!["verify", "sl-odd", "--m", "2", "--p", "3"],
        vec!["verify", "heisenberg", "--n", "3", "--p", "3"],
        vec!["verify", "sp", "--n", "2", "--p", "3", "--seed", "7"],
        vec!["verify", "product", "--r", "2", "--p", "3"],
        vec!["verify", "open-orbit", "--n", "3", "--p", "5"],
        vec!["verify", "maximality", "--p", "3"],
        vec!["verify", "powerdecomp", "--p", "5"],
    ] {
        let text = stdout(&args);
        assert!(text.contains("verdict: PASS"), "{:?}\n{}", args, text);
    }
}

#[test]
fn recipe_reports_are_json() {
    let text = stdout(&["verify", "heisenberg", "--n", "2", "--p", "5", "--format", "json-summary"]);
    let rep: Report = serde_json::from_str(&text).unwrap();
    assert!(rep.pass);
    assert_eq!(rep.schema_version, 1);
}

#[test]
fn exit_codes() {
    // loci differ for this module: no restriction is free
    assert_eq!(run(&["verify", "radsoc"]).status.code(), Some(1));
    assert_eq!(
        run(&["enumerate", "--algebra", "gl:4", "--r", "3", "--p", "5", "--budget", "100"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["enumerate", "--algebra", "so:5", "--r", "1"]).status.code(), Some(3));
    assert_eq!(run(&["enumerate", "--algebra", "gl:2", "--r", "1", "--p", "4"]).status.code(), Some(3));
    assert_eq!(run(&["verify", "no-such-recipe"]).status.code(), Some(3));
    assert_eq!(run(&["survey", "--algebra", "gl:2"]).status.code(), Some(3));
    let out = run(&["enumerate", "--algebra", "so:5", "--r", "1"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("heis:n"));
}
