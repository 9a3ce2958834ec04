use clap::Parser;
use kappa_cli::app::{parse_matrix, EXIT_DISCREPANCY, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE};
use kappa_cli::{run, Cli, Config, Outcome};

fn kappa(args: &[&str]) -> Result<Outcome, kappa_cli::CliError> {
    kappa_with(args, Config::default())
}

fn kappa_with(args: &[&str], config: Config) -> Result<Outcome, kappa_cli::CliError> {
    let argv = std::iter::once("kappa").chain(args.iter().copied());
    run(Cli::try_parse_from(argv).unwrap(), config)
}

#[test]
fn kappa_examples() {
    let out = kappa(&["kappa", "cyclic:6", "--method", "all"]).unwrap();
    assert_eq!(out.stdout, "matrix-tree: 540\nclosed-form: 540\ndecomposition: 540\n");
    assert_eq!(kappa(&["kappa", "quaternion:2", "--format", "factored"]).unwrap().stdout, "2^11\n");
    assert_eq!(kappa(&["kappa", "cyclic:1"]).unwrap().stdout, "1\n");
    assert_eq!(kappa(&["kappa", "cyclic:6", "--reduced"]).unwrap().stdout, "40\n");
    let out = kappa(&["kappa", "dihedral:6", "--reduced", "--method", "all"]).unwrap();
    assert_eq!(out.stdout, "matrix-tree: 0\ndecomposition: 0\n");
}

#[test]
fn closed_form_falls_through_with_notice() {
    let out = kappa(&["kappa", "product:(cyclic:3)x(sym:3)", "--method", "closed-form"]).unwrap();
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stderr.contains("no closed form"));
    assert_eq!(out.stdout, "178459200\n");
}

#[test]
fn json_is_deterministic_without_timing() {
    let a = kappa(&["kappa", "alt:5", "--method", "all", "--format", "json"]).unwrap();
    let b = kappa(&["kappa", "alt:5", "--method", "all", "--format", "json"]).unwrap();
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
    assert_eq!(v[0]["factorization"], "3^10*5^18");
    assert!(v[0].get("elapsed_ms").is_none());
    let keys: Vec<&String> = v[0].as_object().unwrap().keys().collect();
    assert_eq!(keys.len(), 6);
    let t = kappa(&["kappa", "cyclic:5", "--format", "json", "--timing"]).unwrap();
    let v: serde_json::Value = serde_json::from_str(&t.stdout).unwrap();
    assert!(v[0]["elapsed_ms"].is_u64());
}

#[test]
fn exit_codes() {
    let e = kappa(&["kappa", "cyclic:"]).unwrap_err();
    assert_eq!(e.exit_code(), EXIT_USAGE);
    let e = kappa(&["kappa", "alt:9"]).unwrap_err();
    assert_eq!(e.exit_code(), EXIT_USAGE);
    let e = kappa_with(&["kappa", "cyclic:50"], Config { max_order: 20 }).unwrap_err();
    assert_eq!(e.exit_code(), EXIT_RESOURCE);
    let e = kappa(&["classify", "125"]).unwrap_err();
    assert_eq!(e.exit_code(), EXIT_USAGE);
    assert_ne!(EXIT_DISCREPANCY, EXIT_OK);
}

#[test]
fn table1_passes() {
    let out = kappa(&["table1"]).unwrap();
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    assert!(out.stdout.ends_with("28 rows, 0 mismatched cells\n"));
    assert!(!out.stdout.contains("FAIL"));
}

#[test]
fn verify_sweeps() {
    assert_eq!(kappa(&["verify", "--max-n", "1"]).unwrap().stdout, "all n verified (1..=1)\n");
    let out = kappa(&["verify", "--max-n", "30", "--jobs", "3"]).unwrap();
    assert_eq!((out.code, out.stdout.as_str()), (EXIT_OK, "all n verified (1..=30)\n"));
}

#[test]
fn divisor_graphs() {
    let out = kappa(&["divisor-graph", "30", "--complement", "--format", "json"]).unwrap();
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["vertices"], 6);
    assert_eq!(v["edges"].as_array().unwrap().len(), 9);
    let out = kappa(&["divisor-graph", "12", "--complement", "--format", "json"]).unwrap();
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let label = |i: &serde_json::Value| v["labels"][i.to_string()].as_str().unwrap().to_string();
    let pairs: Vec<(String, String)> =
        v["edges"].as_array().unwrap().iter().map(|e| (label(&e[0]), label(&e[1]))).collect();
    let expect = [("6", "4"), ("4", "3"), ("3", "2")].map(|(a, b)| (a.to_string(), b.to_string()));
    assert_eq!(pairs, expect);
    let out = kappa(&["divisor-graph", "13", "--format", "json"]).unwrap();
    assert_eq!(out.stdout, "{\"vertices\":0,\"edges\":[],\"labels\":{}}\n");
    let dot = kappa(&["divisor-graph", "12"]).unwrap().stdout;
    assert!(dot.starts_with("graph \"D(12)\"") && dot.contains("[label=\"6\"]"));
}

#[test]
fn classify_reports() {
    assert_eq!(kappa(&["classify", "2"]).unwrap().stdout, "no group has tree-number 2\n");
    let out = kappa(&["classify", "3"]).unwrap().stdout;
    assert!(out.contains("Z3") && out.contains("S3"));
    let out = kappa(&["classify", "--a5"]).unwrap();
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout.matches("PASS").count(), 5);
    let json = kappa(&["classify", "16", "--format", "json"]).unwrap().stdout;
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["kind"], "groups");
    assert_eq!(v["groups"][1]["name"], "D8");
}

#[test]
fn graph_export() {
    let out = kappa(&["graph", "cyclic:6", "--format", "json"]).unwrap();
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["vertices"], 6);
    assert_eq!(v["edges"].as_array().unwrap().len(), 13);
    let dot = kappa(&["graph", "quaternion:2", "--reduced"]).unwrap().stdout;
    assert!(dot.starts_with("graph \"P(Q8#)\""));
}

#[test]
fn det_command() {
    let m = parse_matrix("[[2, 1], [\"1\", 3]]").unwrap();
    assert_eq!(m.len(), 2);
    assert!(parse_matrix("[[1, 2]]").is_err());
    assert!(parse_matrix("[[1.5]]").is_err());
    let path = std::env::temp_dir().join(format!("kappa-det-{}.json", std::process::id()));
    std::fs::write(&path, "[[4,1,0],[1,4,1],[0,1,4]]").unwrap();
    let out = kappa(&["det", path.to_str().unwrap()]).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(out.stdout, "56\n");
}
