use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_conjlab"));
    c.env_remove("CONJLAB_DEFAULT_BUDGET");
    c
}

fn potential(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "potentials", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = run(args);
    assert!(
        o.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn graph_matches_golden_and_is_deterministic() {
    let args = ["graph", "--base", "H3(1,0,0)", "--radius", "5"];
    let first = stdout(&run(&args));
    assert_eq!(first, include_str!("golden/h3_ap_radius5.dot"));
    assert_eq!(first, stdout(&run(&args)));
}

#[test]
fn graph_without_loops() {
    let out = stdout(&run(&[
        "graph",
        "--base",
        "H3(1,0,0)",
        "--radius",
        "1",
        "--suppress-loops",
    ]));
    assert_eq!(out.matches("->").count(), 4);
    assert!(!out.contains("label=\"Ap\""));
}

#[test]
fn graph_json_lists_distances() {
    let v = json(&[
        "--model", "dinf", "graph", "--base", "a", "--radius", "2", "--format", "json",
    ]);
    assert_eq!(v["closed"], false);
    assert_eq!(v["complete"], true);
    let vertices = v["vertices"].as_array().unwrap();
    assert_eq!(vertices.len(), 3);
    assert!(vertices.contains(&serde_json::json!(["bab", 1])));
}

#[test]
fn bc_json_schema() {
    let o = run(&["bc", "H3(1,0,0)", "H3(1,0,1)", "--cayley-radius", "3"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["K", "shells", "verdict"]);
    assert_eq!(v["verdict"], "Plateau(1)");
    assert_eq!(v["shells"][3], serde_json::json!([3, 1]));
    assert_eq!(
        stdout(&o),
        stdout(&run(&[
            "bc",
            "H3(1,0,1)",
            "H3(1,0,0)",
            "--cayley-radius",
            "3"
        ]))
    );
}

#[test]
fn bc_reports_lower_bounds() {
    let v = json(&[
        "--model",
        "h3semi",
        "--budget-diam",
        "3",
        "bc",
        "H3(0,1,0)",
        "H3(1,0,0)",
        "--cayley-radius",
        "4",
    ]);
    assert_eq!(v["shells"][4][1], "≥3");
    assert_eq!(v["verdict"], "Inconclusive");
}

#[test]
fn bc_table_format() {
    let out = stdout(&run(&[
        "--model",
        "h3semi",
        "--format",
        "table",
        "bc",
        "H3(0,1,0)",
        "H3(1,0,0)",
        "--cayley-radius",
        "3",
    ]));
    assert!(out.ends_with("verdict Growing\n"), "{out}");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        run(&["graph", "--base", "H3(1,0)", "--radius", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["graph", "--radius", "1"]).status.code(), Some(2));
    assert_eq!(
        run(&["--model", "nope", "graph", "--base", "e", "--radius", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["--format", "dot", "bc", "H3(1,0,0)"]).status.code(),
        Some(2)
    );
    // the potential file is for h3
    let p = potential("delta_ap_h3.json");
    assert_eq!(
        run(&[
            "--model",
            "free2",
            "derive",
            "--potential",
            &p,
            "--element",
            "e"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        run(&[
            "derive",
            "--potential",
            "/nonexistent.json",
            "--element",
            "e"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn resource_exhaustion_exits_3() {
    let o = run(&[
        "--budget-nodes",
        "5",
        "graph",
        "--base",
        "H3(1,0,0)",
        "--radius",
        "10",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).starts_with("digraph sk {"));
    let o = run(&[
        "--budget-nodes",
        "10",
        "bc",
        "H3(1,0,0)",
        "--cayley-radius",
        "4",
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn environment_budget() {
    let o = bin()
        .env("CONJLAB_DEFAULT_BUDGET", "5")
        .args(["graph", "--base", "H3(1,0,0)", "--radius", "10"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = bin()
        .env("CONJLAB_DEFAULT_BUDGET", "5")
        .args([
            "--budget-nodes",
            "1000",
            "graph",
            "--base",
            "H3(1,0,0)",
            "--radius",
            "10",
        ])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let o = bin()
        .env("CONJLAB_DEFAULT_BUDGET", "many")
        .args(["graph", "--base", "H3(1,0,0)", "--radius", "1"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn derive_vector() {
    let v = json(&[
        "derive",
        "--potential",
        &potential("two_point_h3.json"),
        "--element",
        "H3(0,1,0)",
    ]);
    assert_eq!(
        v["vector"],
        serde_json::json!([
            ["H3(1,1,-1)", "-1/2", "0"],
            ["H3(1,1,0)", "-1/2", "0"],
            ["H3(1,1,1)", "1", "0"]
        ])
    );
    assert_eq!(v["exactness"], "exact");
    assert_eq!(v["norm"], 1.22474487139);
}

#[test]
fn derive_truncated_harmonic() {
    let v = json(&[
        "--trunc-k",
        "50",
        "derive",
        "--potential",
        &potential("harmonic_h3.json"),
        "--element",
        "H3(0,1,0)",
    ]);
    assert_eq!(v["exactness"], "truncated");
    assert_eq!(v["truncation"], 50);
    assert_eq!(v["vector"].as_array().unwrap().len(), 100);
    assert!(v["tail_bound"].as_f64().unwrap() > 0.0);
}

#[test]
fn leibniz_and_quasi_inner() {
    for pot in [
        "dihedral_dinf.json",
        "delta_x1_free2.json",
        "two_point_h3.json",
    ] {
        let v = json(&[
            "--seed",
            "3",
            "leibniz",
            "--potential",
            &potential(pot),
            "--samples",
            "40",
        ]);
        assert_eq!(v["violations"], 0);
        let v = json(&[
            "quasi-inner",
            "--potential",
            &potential(pot),
            "--samples",
            "40",
        ]);
        assert_eq!(v["holds"], true);
        assert_eq!(v["checked"], 40);
    }
}

#[test]
fn seed_changes_samples_deterministically() {
    let p = potential("dihedral_dinf.json");
    let a = stdout(&run(&[
        "--seed",
        "1",
        "leibniz",
        "--potential",
        &p,
        "--samples",
        "5",
    ]));
    let b = stdout(&run(&[
        "--seed",
        "1",
        "leibniz",
        "--potential",
        &p,
        "--samples",
        "5",
    ]));
    assert_eq!(a, b);
}

#[test]
fn character_of_harmonic_potential() {
    let v = json(&[
        "character",
        "--potential",
        &potential("harmonic_h3.json"),
        "--u",
        "H3(1,0,0)",
        "--v",
        "H3(0,1,0)",
    ]);
    assert_eq!(v["target"], "H3(1,-1,-1)");
    assert_eq!(v["source"], "H3(1,-1,0)");
    assert_eq!(v["value"], "1");
    assert_eq!(v["derivation_value"], "1");
    assert_eq!(v["truncated"], false);
}

#[test]
fn stabilise_with_edge_jumps() {
    let v = json(&[
        "stabilise",
        "--potential",
        &potential("harmonic_h3.json"),
        "--base",
        "H3(1,-1,-1)",
        "--radius",
        "3",
        "--radii",
        "0,1",
        "--epsilon",
        "1/2",
    ]);
    assert_eq!(v["sup_beyond"], serde_json::json!([[0, "0"], [1, "0"]]));
    assert_eq!(v["edge_jumps"]["count"], 2);
}

#[test]
fn bound_probe_finite_potential() {
    let v = json(&[
        "bound-probe",
        "--potential",
        &potential("delta_ap_h3.json"),
        "--radius",
        "2",
    ]);
    assert!((v["max_norm"].as_f64().unwrap() - std::f64::consts::SQRT_2).abs() < 1e-11);
    assert_eq!(v["element_bound"], 2.0);
    assert_eq!(v["g_bounded"], true);
    assert_eq!(v["tail_bound"], 0.0);
}

#[test]
fn appendix_small() {
    let v = json(&["appendix", "--m-max", "2", "--n-max", "2"]);
    assert_eq!(
        v["rows"][1]["coefficients"],
        serde_json::json!([[1, "5/6"], [2, "19/12"]])
    );
    assert_eq!(
        run(&["--model", "free2", "appendix", "--m-max", "2"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn limit_settles() {
    let v = json(&[
        "limit",
        "--potential",
        &potential("two_point_h3.json"),
        "--conjugator",
        "Ax",
        "--q",
        "2",
        "--k-max",
        "5",
    ]);
    assert_eq!(v["limit_pow_sum"], "5/2");
    assert_eq!(v["separation_index"], 2);
    assert_eq!(v["settled"], true);
}

#[test]
fn inverse_sequence_in_free_group() {
    let v = json(&[
        "--model",
        "free2",
        "inverse-seq",
        "--u",
        "x1",
        "--conjugator",
        "x1",
        "--tail",
        "x2",
        "--k-max",
        "4",
    ]);
    for (i, row) in v["rows"].as_array().unwrap().iter().enumerate() {
        assert_eq!(row["forward"], i as u64 + 2);
        assert_eq!(row["backward"], 1);
    }
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("conjlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g.dot");
    let o = run(&[
        "--output",
        path.to_str().unwrap(),
        "graph",
        "--base",
        "H3(1,0,0)",
        "--radius",
        "5",
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        include_str!("golden/h3_ap_radius5.dot")
    );
    std::fs::remove_dir_all(&dir).unwrap();
}
