use clustercomb::counting::{enumerate_angulations, enumerate_diagrams, enumerate_trees, CountFamily};
use clustercomb::dot::{angulation_to_dot, diagram_to_dot, forest_to_dot, json_to_dot};
use clustercomb::{ColouredAngulation, Symbol, WorkLimit};
use dot_parser::{ast, canonical};
use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_clustercomb"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn count_rows() {
    let o = run(&["count", "T", "--kmax", "6", "--m", "3"], "");
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().nth(1), Some("3\t1\t1\t3\t9\t28\t90\t297"));

    let o = run(&["count", "U", "--kmax", "6", "--m", "6"], "");
    assert!(stdout(&o).lines().nth(1).unwrap().ends_with("\t3946320"));

    let o = run(&["count", "fuss", "--kmax", "0", "--m", "5"], "");
    assert_eq!(stdout(&o), "m\tk=0\n5\t1\n");
}

#[test]
fn check_tables_reproduces_the_bundled_tables() {
    for (flag, f) in [("T", CountFamily::T), ("S", CountFamily::S), ("U", CountFamily::U)] {
        let o = run(&["count", flag, "--check-tables"], "");
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
        let bundled: String = f
            .raw_table()
            .lines()
            .filter(|l| !l.starts_with('#'))
            .map(|l| format!("{l}\n"))
            .collect();
        assert_eq!(stdout(&o), bundled);
    }
}

#[test]
fn enumerate_counts() {
    let o = run(&["enumerate", "trees", "--k", "3", "--m", "3", "--order", "(3 2 1)", "--count-only"], "");
    assert_eq!(stdout(&o).trim(), "9");
    let o = run(&["enumerate", "angulations", "--k", "4", "--m", "3"], "");
    assert_eq!(stdout(&o).lines().count(), 14);
    let o = run(&["enumerate", "diagrams", "--k", "3", "--m", "3", "--connected", "--noncrossing", "--count-only"], "");
    assert_eq!(stdout(&o).trim(), "9");
    let o = run(&["enumerate", "plane-trees", "--k", "3", "--m", "4", "--count-only"], "");
    assert_eq!(stdout(&o).trim(), "12");
}

#[test]
fn map_and_inverse() {
    let o = run(&["map", "diagram->forest"], r#"{"k":3,"m":3,"arcs":[]}"#);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["edges"].as_array().unwrap().len(), 0);

    let tree = stdout(&run(&["map", "family:4->2"], r#"{"k":3,"m":3,"diagonals":[[1,3],[1,4]]}"#));
    let plane = stdout(&run(&["map", "family:2->6"], &tree));
    let back = stdout(&run(&["map", "family:6->2"], &plane));
    assert_eq!(back, tree);

    let o = run(&["map", "--list"], "");
    assert!(stdout(&o).contains("tree->angulation"));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&run(&["count"], "")), 1);
    assert_eq!(code(&run(&["map", "no-such-map"], "{}")), 1);
    assert_eq!(code(&run(&["map", "diagram->forest"], "not json")), 3);
    let invalid = r#"{"k":3,"m":3,"edges":[[1,2,1],[1,3,1]]}"#;
    assert_eq!(code(&run(&["orbit"], invalid)), 3);
    let o = Command::new(env!("CARGO_BIN_EXE_clustercomb"))
        .args(["enumerate", "trees", "--k", "9", "--m", "6", "--count-only"])
        .env("CLUSTERCOMB_MAX_WORK", "1000")
        .output()
        .unwrap();
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("CLUSTERCOMB_MAX_WORK"));
}

#[test]
fn induct_and_orbit() {
    let path = r#"{"k":3,"m":3,"edges":[[1,2,1],[2,3,2]]}"#;
    let o = run(&["induct", "--steps", r#"[{"kind":"R","i":1,"j":2,"chain":[1,2,3]}]"#], path);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["edges"], serde_json::json!([[1, 3, 2], [2, 3, 1]]));

    let o = run(&["induct", "--normal-form"], path);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["tree"]["edges"].as_array().unwrap().iter().all(|e| e[2] == 1 || e[2] == 3));

    let o = run(&["orbit"], path);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["size"], 9);

    let bad = run(&["induct", "--steps", r#"[{"kind":"R","i":1,"j":2,"chain":[1,2]}]"#], path);
    assert_eq!(code(&bad), 3);
}

#[test]
fn verify_suites() {
    let o = run(&["verify", "formulas"], "");
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let o = run(&["verify", "bijections", "--k", "3", "--m", "3", "--json"], "");
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let labelled = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "labelled tree <-> labelled angulation")
        .unwrap();
    assert_eq!(labelled["detail"], "18 round trips");
    let o = run(&["verify", "induction", "--k", "4", "--m", "3"], "");
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("sizes {28}"));
    assert_eq!(code(&run(&["verify", "nonsense"], "")), 1);
}

#[test]
fn export_dot() {
    let o = run(&["export", "dot"], r#"{"k":1,"m":3,"edges":[]}"#);
    assert_eq!(code(&o), 0);
    assert_eq!(parse_counts(&stdout(&o)), (1, 0));

    let o = run(&["export", "dot"], r#"{"k":2,"m":3,"edges":[[1,2,1]]}"#);
    assert!(stdout(&o).contains("label=\"S1\""));
}

fn parse_counts(dot: &str) -> (usize, usize) {
    let ast = ast::Graph::try_from(dot).unwrap_or_else(|e| panic!("unparsable DOT: {e}\n{dot}"));
    let g = canonical::Graph::from(ast);
    (g.nodes.set.len(), g.edges.set.len())
}

#[test]
fn all_dot_output_parses() {
    for t in enumerate_trees(4, 3, None, WorkLimit::unbounded()).unwrap() {
        assert_eq!(parse_counts(&forest_to_dot(t.as_forest())), (4, 3));
    }
    for a in enumerate_angulations(4, 4, WorkLimit::unbounded()).unwrap() {
        let c = ColouredAngulation::colour_from_seed(&a, (1, 2), Symbol::new(1)).unwrap();
        assert_eq!(parse_counts(&angulation_to_dot(&c)), (4, 3));
        assert_eq!(parse_counts(&json_to_dot(&a.to_json()).unwrap()), (4, 3));
    }
    for d in enumerate_diagrams(3, 2, false, false, WorkLimit::unbounded()).unwrap() {
        assert_eq!(parse_counts(&diagram_to_dot(&d)).1, d.arcs().len());
    }
}
