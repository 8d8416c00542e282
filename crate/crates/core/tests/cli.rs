use std::path::PathBuf;

use quartics::cli::{self, load_dataset, load_report, Dataset};
use quartics::exact::ProjPoint;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn run(args: &[&str]) -> (i32, Option<cli::Report>) {
    cli::run(std::iter::once("quartics").chain(args.iter().copied()))
}

#[test]
fn cube_octad_fixture_parses() {
    let path = data("cube_octad.json");
    let octad = load_dataset(&path).unwrap().to_octad("cube_octad.json").unwrap();
    assert_eq!(octad.points().len(), 8);
}

#[test]
fn net_fixture_round_trips() {
    let d = load_dataset(&data("cube_net.json")).unwrap();
    let net = d.to_net("cube_net.json").unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("net.json");
    cli::store_dataset(&path, &Dataset::from_net(&net)).unwrap();
    let again = load_dataset(&path).unwrap().to_net("net.json").unwrap();
    assert_eq!(again.matrices(), net.matrices());
}

#[test]
fn base_locus_of_the_cube_net_is_the_cube() {
    let (code, report) = run(&["octad", "build", "--input", data("cube_net.json").to_str().unwrap()]);
    assert_eq!(code, 0);
    let report = report.unwrap();
    let built: Dataset = serde_json::from_value(report.results["octad"].clone()).unwrap();
    let (f, mut pts) = built.to_points("built", 3).unwrap();
    let (_, mut cube) = load_dataset(&data("cube_octad.json")).unwrap().to_points("cube", 3).unwrap();
    pts.sort();
    cube.sort();
    assert_eq!(pts, cube);
    assert!(pts.iter().all(|p: &ProjPoint<_>| p.coords().len() == 4));
    assert_eq!(f.modulus(), 101);
}

#[test]
fn reports_written_with_out_read_back_equal() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let (code, report) = run(&["theta", "aronhold", "--out", path.to_str().unwrap(), "--timings"]);
    assert_eq!(code, 0);
    let report = report.unwrap();
    assert_eq!(report.results["count"], 288);
    assert!(report.timings.is_some());
    assert_eq!(load_report(&path).unwrap(), report);
}

#[test]
fn weyl_counts_report() {
    let (code, report) = run(&["weyl", "counts"]);
    assert_eq!(code, 0);
    let r = report.unwrap().results;
    for (key, value) in [("positive_roots", 63), ("lines", 56), ("weyl_order", 2_903_040), ("center_size", 2), ("index", 72)] {
        assert_eq!(r[key], value, "{key}");
    }
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["bogus"]).0, 2);
    assert_eq!(run(&["weyl", "counts", "--prime", "15"]).0, 2);
    assert_eq!(run(&["weyl", "counts", "--prime", "3"]).0, 2);
    assert_eq!(run(&["dual", "fit", "--samples", "0"]).0, 2);
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\n  \"type\": \"net\",\n  \"field\": oops\n}\n").unwrap();
    let (code, report) = run(&["hessian", "--input", bad.to_str().unwrap()]);
    assert_eq!((code, report.is_none()), (2, true));
    assert_eq!(load_dataset(&bad).unwrap_err().line, Some(3));
    // a points file where a net is expected
    assert_eq!(run(&["hessian", "--input", data("cube_octad.json").to_str().unwrap()]).0, 2);
}

#[test]
fn tangency_fixture_and_a_failing_pair() {
    let (code, report) = run(&["tangency", "--input", data("pencil_pair.json").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(report.unwrap().results["delta_degree"], 8);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pair.json");
    let mut pair: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(data("pencil_pair.json")).unwrap()).unwrap();
    pair["second"]["terms"][1]["coeff"] = "7".into();
    std::fs::write(&path, pair.to_string()).unwrap();
    let (code, report) = run(&["tangency", "--input", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(!report.unwrap().passed());
}

#[test]
fn cube_octad_projects_to_a_special_heptad() {
    let (code, report) = run(&["octad", "project", "--input", data("cube_octad.json").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(report.unwrap().results["heptad_general_position"], false);
}

#[test]
fn random_instances_pass_their_invariants() {
    for args in [
        vec!["octad", "build"],
        vec!["octad", "project", "--center", "3"],
        vec!["octad", "from-plane"],
        vec!["hessian"],
        vec!["bitangents"],
        vec!["steinerian", "--samples", "5"],
        vec!["dual", "bidual", "--seed", "7"],
        vec!["dual", "nodal-search"],
        vec!["tangency", "--seed", "3"],
        vec!["weyl", "fiber", "--samples", "2"],
        vec!["theta", "counts"],
    ] {
        let (code, report) = run(&args);
        assert_eq!(code, 0, "{args:?}");
        let report = report.unwrap();
        assert!(report.passed(), "{args:?}: {:?}", report.failures());
        assert_eq!(report.command, args.iter().take_while(|a| !a.starts_with("--")).copied().collect::<Vec<_>>().join(" "));
    }
}
