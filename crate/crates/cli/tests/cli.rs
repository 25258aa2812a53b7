use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_altorder")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn tables_match_golden_files() {
    assert_eq!(stdout(&["tables", "--table", "1", "--max-n", "7"]), include_str!("golden/table1.csv"));
    assert_eq!(stdout(&["tables", "--table", "2", "--max-n", "5"]), include_str!("golden/table2.csv"));
    assert_eq!(stdout(&["tables", "--table", "3", "--max-pq", "5"]), include_str!("golden/table3.csv"));
}

#[test]
fn output_does_not_depend_on_threads() {
    let one = stdout(&["tables", "--table", "3", "--max-pq", "4", "--threads", "1"]);
    let three = stdout(&["tables", "--table", "3", "--max-pq", "4", "--threads", "3"]);
    assert_eq!(one, three);
}

#[test]
fn large_rows_need_flag() {
    assert_eq!(run(&["tables", "--table", "3", "--max-pq", "6"]).status.code(), Some(1));
}

#[test]
fn zeta_and_moebius() {
    assert_eq!(stdout(&["zeta", "--onc", "7", "--q", "2"]), "30\n");
    assert_eq!(stdout(&["zeta", "--perm", "(1 2 3 4 5)", "--n", "5", "--q", "3"]), "18\n");
    assert_eq!(stdout(&["moebius", "--onc", "7"]), "-22\n");
    assert_eq!(stdout(&["moebius", "--perm", "(1 2 3 4 5)", "--n", "5"]), "4\n");
}

#[test]
fn hurwitz_orbits() {
    let out = stdout(&["hurwitz", "--perm", "(1 2)(3 4)", "--n", "4"]);
    assert!(out.contains("orbits: 2"), "{out}");
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["hurwitz", "--perm", "(1 2)(3 4)", "--n", "4", "--report", "json"])).unwrap();
    assert_eq!(json["orbit_count"], 2);
    let dot = stdout(&["hurwitz", "--perm", "(1 2)(3 4)", "--n", "4", "--orbit-graph", "dot"]);
    assert!(dot.starts_with("digraph"));
}

#[test]
fn onc_hasse_diagram() {
    let dot = stdout(&["onc", "--n", "7", "--format", "dot"]);
    assert_eq!(dot.matches("[label=").count(), 30);
    assert_eq!(dot.matches(" -> ").count(), 77);
    let text = stdout(&["onc", "--n", "9"]);
    assert!(text.contains("elements: 143") && text.contains("rank numbers: 1;30;81;30;1"), "{text}");
}

#[test]
fn interval_formats() {
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["interval", "--top", "(1 2 3 4 5)", "--n", "5", "--format", "json"])).unwrap();
    assert_eq!(json["elements"].as_array().unwrap().len(), 7);
    let t = stdout(&["interval", "--top", "(1 2 3 4 5)", "--n", "5", "--k", "2"]);
    assert_eq!(t, "elements: 42\nrank numbers: 1;10;20;10;1\nmaximal chains: 125\nmoebius: 14\n");
}

#[test]
fn phi_exports() {
    let perm = "(1 14 15)(3 4 7)(8 9 10 11 12)";
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["bijection", "phi", "--perm", perm, "--n", "17", "--format", "json"])).unwrap();
    assert_eq!(json["color"], "White");
    let dot = stdout(&["bijection", "phi", "--perm", perm, "--n", "17", "--format", "dot"]);
    assert_eq!(dot.matches(" -- ").count(), 17);
    assert_eq!(run(&["bijection", "phi", "--perm", "(1 3)(2 4)", "--n", "4"]).status.code(), Some(1));
}

#[test]
fn mdiv_reports() {
    let json: serde_json::Value = serde_json::from_str(&stdout(&["mdiv", "--n", "2", "--m", "2", "--report", "json"])).unwrap();
    assert_eq!(json["elements"], 18);
    assert_eq!(json["max_chains"], "20");
    let csv = stdout(&["mdiv", "--conjectures", "--max-n", "2", "--max-m", "3", "--format", "csv"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 7);
    assert!(lines[1].starts_with("1,1,2,"));
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["mdiv", "--conjectures", "--max-n", "1", "--max-m", "2", "--format", "json"]))
            .unwrap();
    assert_eq!(json[1]["mu_hat_agree"], true);
}

#[test]
fn verify_suites() {
    for suite in ["covers", "hurwitz", "zeta"] {
        let out = stdout(&["verify", "--suite", suite]);
        assert!(out.ends_with("0 failed\n"), "{out}");
    }
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["bogus"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(1));
    assert_eq!(run(&["zeta", "--perm", "(1 2 x)", "--n", "4"]).status.code(), Some(1));
    assert_eq!(run(&["onc", "--n", "8"]).status.code(), Some(1));
    assert_eq!(run(&["tables", "--table", "4"]).status.code(), Some(1));
    assert_eq!(run(&["onc", "--n", "7", "--max-elements", "10"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
