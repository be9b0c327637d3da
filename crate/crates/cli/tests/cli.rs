//! End-to-end checks of the command-line interface: pinned outputs for the
//! documented invocations, JSON shapes, and exit codes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symsquare"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(args: &[&str]) -> serde_json::Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn pairing_of_the_two_diagonal_classes_is_four() {
    let out = run(&["pair", "sym2", "--genus", "1", "delta+", "delta-"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "4");
}

#[test]
fn class_names_are_case_insensitive() {
    let exact = run(&["pair", "sym2", "--genus", "2", "Delta+", "Delta-"]);
    let lower = run(&["pair", "sym2", "--genus", "2", "delta+", "delta-"]);
    assert!(exact.status.success() && lower.status.success());
    assert_eq!(exact.stdout, lower.stdout);
}

#[test]
fn lattice_payload_carries_the_frozen_gram() {
    let v = stdout_json(&["lattice", "xtilde-g1"]);
    assert_eq!(
        v["lattice"]["gram"],
        serde_json::json!([["1/2", "1/2", "0"], ["1/2", "0", "0"], ["0", "0", "-1/2"]])
    );
    assert_eq!(
        v["lattice"]["basis"],
        serde_json::json!(["E1", "E(12)(34)", "E"])
    );
    assert_eq!(v["lattice"]["torsion_basis"].as_array().unwrap().len(), 2);
    assert_eq!(v["name"], "XtildeG1");
}

#[test]
fn negative_family_member_three() {
    let v = stdout_json(&["dn", "--n", "3"]);
    assert_eq!(v["self_int"], "-1/2");
    assert_eq!(v["with_canonical"], "-1");
    assert_eq!(v["class"]["free"], serde_json::json!(["24", "-6", "-17"]));
    assert_eq!(v["rounding_self_int"], "-1");
    assert_eq!(v["rounding_with_antidiagonal"], "7");
    // The rank-10 rounding has integer coordinates.
    for c in v["rounding"]["free"].as_array().unwrap() {
        assert!(!c.as_str().unwrap().contains('/'));
    }
}

#[test]
fn finite_cone_certificate_shape() {
    let v = stdout_json(&["cone", "--m", "6"]);
    assert_eq!(v["m"], "6");
    let gens = v["spec"]["generators"].as_array().unwrap();
    assert_eq!(gens.len(), 6);
    let labels: Vec<&str> = gens.iter().map(|g| g["label"].as_str().unwrap()).collect();
    assert!(labels.contains(&"-K"));
    assert!(labels.contains(&"Gamma6"));
    let cert = &v["certificate"];
    assert_eq!(cert["verdict"], "contains_light_cone");
    assert_eq!(cert["polyhedral"], true);
    let facets = cert["facets"].as_array().unwrap();
    assert_eq!(facets.len(), 6);
    for f in facets {
        assert_eq!(f["nsd"], true);
    }
}

#[test]
fn infinite_cone_reports_the_ladder() {
    let v = stdout_json(&["cone", "--m", "inf", "--ladder", "20"]);
    assert_eq!(v["m"], "infinity");
    let cert = &v["certificate"];
    assert_eq!(cert["verdict"], "not_certified");
    assert_eq!(
        cert["polyhedral"],
        "non-polyhedral (certified ladder to 20)"
    );
    assert_eq!(v["spec"]["generators"].as_array().unwrap().len(), 23);
}

#[test]
fn curve_graph_is_complete() {
    let v = stdout_json(&["zgraph", "--json"]);
    assert_eq!(v["nodes"].as_array().unwrap().len(), 16);
    assert_eq!(v["edges"].as_array().unwrap().len(), 24);
    let dot = run(&["zgraph"]);
    assert!(dot.status.success());
    let text = String::from_utf8_lossy(&dot.stdout);
    assert!(text.starts_with("graph"));
    assert!(text.contains("\"E(12)(34)\""));
}

#[test]
fn weighted_projective_curves_verify() {
    let v = stdout_json(&["wps", "--verify-curves"]);
    let curves = v["curves"].as_array().unwrap();
    assert_eq!(curves.len(), 8);
    for c in curves {
        assert_eq!(c["verified"], true);
    }
    assert_eq!(v["nodes"].as_array().unwrap().len(), 6);
    // Custom parameters are accepted through the flag.
    let custom = stdout_json(&["wps", "--genus", "2", "--params", "inf,0,1,-1,2,3"]);
    assert_eq!(custom["lines"].as_array().unwrap().len(), 6);
    assert_eq!(custom["nodes"].as_array().unwrap().len(), 15);
}

#[test]
fn plane_oracle_reports_corank_one() {
    let v = stdout_json(&["plane", "--n", "1"]);
    assert_eq!(v["rows"], 14);
    assert_eq!(v["cols"], 15);
    assert_eq!(v["rank"], 14);
    assert_eq!(v["corank"], 1);
    assert_eq!(v["exists"], true);
    assert_eq!(v["unique"], true);
    assert_eq!(v["arithmetic_genus"], "0");
    let with_kernel = stdout_json(&["plane", "--n", "1", "--kernel"]);
    assert_eq!(with_kernel["kernel_curve"].as_array().unwrap().len(), 15);
}

#[test]
fn verify_suite_passes_and_reports_the_ladder() {
    let out = run(&["verify", "--ladder", "20"]);
    assert!(out.status.success(), "verification suite must exit zero");
    let stdout = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 9, "one summary line per criterion");
    for line in &lines {
        assert!(line.contains("PASS"), "unexpected line: {line}");
    }
    assert!(stdout.contains("non-polyhedral (certified ladder to 20)"));
}

#[test]
fn verify_json_mode_is_machine_readable() {
    let out = run(&["verify", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 9);
    for o in arr {
        assert_eq!(o["passed"], true);
        assert!(o["failures"].as_array().unwrap().is_empty());
    }
}

#[test]
fn usage_errors_exit_with_code_two() {
    let unknown_class = run(&["pair", "sym2", "--genus", "1", "delta+", "bogus"]);
    assert_eq!(unknown_class.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&unknown_class.stderr).contains("available"));

    let bad_order = run(&["cone", "--m", "0"]);
    assert_eq!(bad_order.status.code(), Some(2));

    let bad_subcommand = run(&["no-such-subcommand"]);
    assert_eq!(bad_subcommand.status.code(), Some(2));

    let bad_genus = run(&["lattice", "sym2", "--genus", "0"]);
    assert_eq!(bad_genus.status.code(), Some(2));

    let bad_params = run(&["wps", "--params", "0,0,1,2"]);
    assert_eq!(bad_params.status.code(), Some(2));
}

#[test]
fn span_lattice_needs_genus_at_least_two() {
    let bad = run(&["lattice", "xtilde-span", "--genus", "1"]);
    assert_eq!(bad.status.code(), Some(2));
    let good = stdout_json(&["lattice", "xtilde-span", "--genus", "2"]);
    assert_eq!(good["lattice"]["basis"].as_array().unwrap().len(), 5);
}
