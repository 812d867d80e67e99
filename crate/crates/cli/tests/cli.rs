use std::process::Command;

use pfam_cli::{execute, Outcome, EXIT_CAPACITY, EXIT_OK, EXIT_TIMEOUT, EXIT_VALIDATION};

fn run(args: &[&str]) -> Outcome {
    let mut full = vec!["pfam"];
    full.extend_from_slice(args);
    execute(full)
}

#[test]
fn props_examples() {
    let out = run(&["props", "--graph", "111", "--n", "3"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("connected: true"));
    assert!(out.stdout.contains("hamiltonian-cycle: true"));
    let out = run(&["props", "--graph", "000000", "--n", "4"]);
    assert!(out.stdout.contains("components: 4"));
    let out = run(&["props", "--graph", "111", "--n", "3", "--kind", "oriented"]);
    assert!(out.stdout.contains("strongly-connected: false"));
}

#[test]
fn malformed_digits_name_the_position() {
    let out = run(&["props", "--graph", "1021", "--n", "3"]);
    assert_eq!(out.code, EXIT_VALIDATION);
    assert!(out.stderr.contains("position 2"), "{}", out.stderr);
    let out = run(&["props", "--graph", "11", "--n", "3"]);
    assert_eq!(out.code, EXIT_VALIDATION);
}

#[test]
fn construct_examples() {
    let out = run(&["construct", "hamilton-cycle", "--n", "4"]);
    assert!(out.stdout.starts_with("family n=4 kind=simple count=4\n"));
    assert!(out.stdout.contains("\n# size: 4, "), "{}", out.stdout);
    let out = run(&["construct", "cycle-minus-one", "--n", "4", "--count-only"]);
    assert_eq!(out.stdout, "size: 20, 5/16 of all graphs\n");
    let out = run(&["construct", "noneq-hampath", "--n", "5", "--count-only"]);
    assert!(out
        .stdout
        .contains("size: 64, 1/2^4 = 1/2^(n-1) of all graphs"));
    let out = run(&[
        "construct",
        "flower",
        "--n",
        "7",
        "--lengths",
        "3,3,3",
        "--count-only",
    ]);
    assert!(out.stdout.contains("size: 262144"), "{}", out.stdout);
    let out = run(&[
        "construct",
        "upset",
        "--kind",
        "directed",
        "--graph",
        "101010",
    ]);
    assert!(out.stdout.contains("count=8"), "{}", out.stdout);
}

#[test]
fn certify_examples() {
    let out = run(&["certify", "--n", "5"]);
    assert!(out.stdout.contains("rank: 4"));
    assert!(out.stdout.contains("coset bound: 2^6 = 64"));
    assert!(out.stdout.contains("certificate: valid"));
    let out = run(&["certify", "--kind", "directed", "--n", "3", "--witnesses"]);
    assert!(out.stdout.contains("coset bound: 2^3 = 8"));
    assert_eq!(out.stdout.matches(" side {").count(), 7);
    let out = run(&["certify", "--kind", "oriented", "--n", "3"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("exploration only"));
}

#[test]
fn bound_examples() {
    let out = run(&["bound", "--kind", "oriented", "--n", "5"]);
    assert!(out.stdout.contains("bound: 3^5 = 243"));
    let out = run(&["bound", "--n", "5", "--property", "hamiltonian"]);
    assert!(out.stdout.contains("bound: 2^5 = 32"));
    let out = run(&["bound", "--n", "6"]);
    assert!(out.stdout.contains("bound: 2^9 = 512"));
    let out = run(&["bound", "--kind", "directed", "--n", "4"]);
    assert_eq!(out.code, EXIT_VALIDATION);
}

#[test]
fn bound_checks_family_files() {
    let family = run(&["construct", "hamilton-cycle", "--n", "5", "--verify"]).stdout;
    let path = std::env::temp_dir().join(format!("pfam-test-{}.txt", std::process::id()));
    std::fs::write(&path, family).unwrap();
    let out = run(&["bound", "--family", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert!(out.stdout.contains("stars: |F|^2 = 1024"), "{}", out.stdout);
    assert!(!out.stdout.contains("false"));
}

#[test]
fn invalid_combinations_name_both_flags() {
    let out = run(&[
        "search",
        "--n",
        "4",
        "--kind",
        "oriented",
        "--property",
        "connected",
    ]);
    assert_eq!(out.code, EXIT_VALIDATION);
    assert!(out.stderr.contains("--kind oriented") && out.stderr.contains("--property connected"));
    let out = run(&["certify", "--n", "4", "--all"]);
    assert_eq!(out.code, EXIT_VALIDATION);
    assert!(out.stderr.contains("--all") && out.stderr.contains("certify"));
    let out = run(&["search", "--n", "4", "--property", "connected", "--k", "2"]);
    assert_eq!(out.code, EXIT_VALIDATION);
    let out = run(&["construct", "hamilton-cycle", "--n", "4", "--lengths", "3"]);
    assert_eq!(out.code, EXIT_VALIDATION);
    let out = run(&["search", "--n", "4", "--property", "bogus"]);
    assert_eq!(out.code, EXIT_VALIDATION);
    let out = run(&["frobnicate"]);
    assert_eq!(out.code, EXIT_VALIDATION);
}

#[test]
fn capacity_and_timeout_exit_codes() {
    let out = run(&["search", "--n", "7", "--property", "connected"]);
    assert_eq!(out.code, EXIT_CAPACITY);
    let out = run(&[
        "search",
        "--n",
        "5",
        "--property",
        "at-most-k-components",
        "--k",
        "2",
        "--time-limit",
        "0",
        "--seed-construction",
    ]);
    assert_eq!(out.code, EXIT_TIMEOUT);
    assert!(out.stdout.contains("at least 192"), "{}", out.stdout);
}

#[test]
fn search_formats() {
    let args = ["search", "--n", "4", "--property", "hamiltonian", "--all"];
    let text = run(&args).stdout;
    assert!(text.contains("maximum: 4 (exact)"));
    assert!(text.contains("maximum families: 3"));
    let mut json_args = args.to_vec();
    json_args.extend(["--output", "json"]);
    let v: serde_json::Value = serde_json::from_str(&run(&json_args).stdout).unwrap();
    for key in [
        "kind",
        "n",
        "property",
        "max_size",
        "status",
        "witness",
        "bound_refs",
        "stats",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["bound_refs"][0]["value"], "4");
    let mut csv_args = args.to_vec();
    csv_args.extend(["--output", "csv"]);
    let csv = run(&csv_args).stdout;
    let mut lines = csv.lines();
    assert!(lines
        .next()
        .unwrap()
        .starts_with("kind,n,property,max_size,status"));
    assert!(lines
        .next()
        .unwrap()
        .starts_with("simple,4,hamiltonian-cycle,4,complete,3,"));
}

#[test]
fn text_output_is_reproducible() {
    let args = ["conjectures", "--n", "4", "--symmetry"];
    assert_eq!(run(&args), run(&args));
    let a = run(&[
        "search",
        "--n",
        "5",
        "--property",
        "no-cutvertex",
        "--threads",
        "1",
    ]);
    let b = run(&[
        "search",
        "--n",
        "5",
        "--property",
        "no-cutvertex",
        "--threads",
        "4",
    ]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_pfam");
    let ok = Command::new(bin)
        .args(["oracle", "--m", "3"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8_lossy(&ok.stdout).contains(": 3"));
    let bad = Command::new(bin)
        .args([
            "search",
            "--kind",
            "simple",
            "--property",
            "strong",
            "--n",
            "3",
        ])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_VALIDATION));
    let help = Command::new(bin).arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(EXIT_OK));
}
