use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rainbow-order"))
}

fn run(dir: &Path, args: &[&str]) -> Output {
    bin()
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout)
        .unwrap_or_else(|e| panic!("bad JSON ({e}): {}", String::from_utf8_lossy(&o.stdout)))
}

fn family(dir: &Path, spec: &str, name: &str) -> PathBuf {
    let o = run(dir, &["trees", "family", "--spec", spec, "--out", name]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    dir.join(name)
}

#[test]
fn thm1_verify_order_7() {
    let dir = TempDir::new().unwrap();
    let o = run(dir.path(), &["thm1", "verify", "--order", "7", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["match"], true);
    assert_eq!(v["order"], 7);
    assert_eq!(v["found"].as_array().unwrap().len(), 4);
    assert!(v["extra"].as_array().unwrap().is_empty());
    assert!(v["missing"].as_array().unwrap().is_empty());
    let first = &v["found"][0];
    assert!(first["t1"].is_string() && first["t2"].is_string());
}

#[test]
fn thm1_output_does_not_depend_on_jobs() {
    let dir = TempDir::new().unwrap();
    let a = run(
        dir.path(),
        &["thm1", "verify", "--order", "9", "--json", "--jobs", "1"],
    );
    let b = run(
        dir.path(),
        &["--jobs", "3", "thm1", "verify", "--order", "9", "--json"],
    );
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn isomorphic_families_share_codes() {
    let dir = TempDir::new().unwrap();
    let f2 = run(
        dir.path(),
        &["trees", "family", "--spec", "F:2", "--out", "f2.tree"],
    );
    let b22 = run(
        dir.path(),
        &["trees", "family", "--spec", "B_star:2,2", "--json"],
    );
    assert_eq!(code(&f2), 0);
    let f2_code = String::from_utf8(f2.stdout).unwrap();
    assert_eq!(f2_code.trim(), json(&b22)["code"].as_str().unwrap());
    let text = std::fs::read_to_string(dir.path().join("f2.tree")).unwrap();
    assert_eq!(text.lines().next(), Some("7"));
}

#[test]
fn trees_enum_writes_blocks() {
    let dir = TempDir::new().unwrap();
    let o = run(
        dir.path(),
        &["trees", "enum", "--order", "6", "--out", "t6.txt", "--json"],
    );
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["count"], 6);
    let text = std::fs::read_to_string(dir.path().join("t6.txt")).unwrap();
    assert_eq!(
        text.split("\n\n").filter(|b| !b.trim().is_empty()).count(),
        6
    );
}

#[test]
fn fk_witness_verifies() {
    let dir = TempDir::new().unwrap();
    let p = dir.path();
    family(p, "F_prime:3", "fp3.tree");
    family(p, "F:3", "f3.tree");
    let o = run(
        p,
        &[
            "witness", "build", "--kind", "fk", "--k", "3", "--colors", "10", "--out", "fk.col",
        ],
    );
    assert_eq!(code(&o), 0);
    let args = [
        "witness",
        "verify",
        "--coloring",
        "fk.col",
        "--t1",
        "fp3.tree",
        "--t2",
        "f3.tree",
        "--colors",
        "10",
        "--json",
    ];
    let o = run(p, &args);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    let v = json(&o);
    for key in ["color_count_ok", "contains_target", "free_of_pattern"] {
        assert_eq!(v[key], true, "{key}");
    }
    assert_eq!(v["t"], 10);
    assert_eq!(v["embedding"].as_array().unwrap().len(), 10);
    assert!(v["elapsed_ms"].is_number() && v["nodes_searched"].is_number());

    // Wrong color count fails verification.
    let mut wrong = args;
    wrong[9] = "11";
    assert_eq!(code(&run(p, &wrong)), 1);
}

#[test]
fn lemma1_witness_with_both_f1_choices() {
    let dir = TempDir::new().unwrap();
    let p = dir.path();
    family(p, "path:5", "p5.tree");
    family(p, "star:4", "k14.tree");
    for extra in [&["--f1", "0 1"][..], &["--f1-heuristic", "components"][..]] {
        let mut args = vec![
            "witness", "build", "--kind", "lemma1", "--t2", "p5.tree", "--colors", "8", "--out",
            "w.col",
        ];
        args.extend_from_slice(extra);
        assert_eq!(code(&run(p, &args)), 0);
        let o = run(
            p,
            &[
                "witness",
                "verify",
                "--coloring",
                "w.col",
                "--t1",
                "k14.tree",
                "--t2",
                "p5.tree",
                "--colors",
                "8",
            ],
        );
        assert_eq!(code(&o), 0);
    }
    // The coloring contains a rainbow P5 but no rainbow K_{1,4}.
    assert_eq!(
        code(&run(
            p,
            &[
                "rainbow",
                "find",
                "--coloring",
                "w.col",
                "--pattern",
                "p5.tree"
            ]
        )),
        0
    );
    let o = run(
        p,
        &[
            "rainbow",
            "find",
            "--coloring",
            "w.col",
            "--pattern",
            "k14.tree",
            "--json",
        ],
    );
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["found"], false);
}

#[test]
fn tw_check_modes() {
    let dir = TempDir::new().unwrap();
    let o = run(dir.path(), &["tw", "check", "--exhaustive", "--json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["partitions_checked"], 81);
    let args = [
        "tw", "check", "--order", "6", "--trials", "200", "--seed", "1", "--json",
    ];
    let a = run(dir.path(), &args);
    assert_eq!(code(&a), 0);
    assert_eq!(json(&a)["passed"], true);
    assert_eq!(a.stdout, run(dir.path(), &args).stdout);
}

#[test]
fn counterexample_search_exit_codes() {
    let dir = TempDir::new().unwrap();
    let p = dir.path();
    family(p, "star:4", "k14.tree");
    family(p, "path:5", "p5.tree");
    family(p, "path:3", "p3.tree");
    let o = run(
        p,
        &[
            "search",
            "counterexample",
            "--t1",
            "k14.tree",
            "--t2",
            "p5.tree",
            "--order",
            "9",
            "--colors",
            "6",
            "--trials",
            "4",
            "--seed",
            "11",
            "--out",
            "ce.col",
            "--json",
        ],
    );
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["found"], true);
    let o = run(
        p,
        &[
            "witness",
            "verify",
            "--coloring",
            "ce.col",
            "--t1",
            "k14.tree",
            "--t2",
            "p5.tree",
            "--colors",
            &json(&o)["report"]["t"].to_string(),
        ],
    );
    assert_eq!(code(&o), 0);
    // Nothing can have a rainbow P3 without having one.
    let o = run(
        p,
        &[
            "search",
            "counterexample",
            "--t1",
            "p3.tree",
            "--t2",
            "p3.tree",
            "--order",
            "6",
            "--colors",
            "5",
            "--trials",
            "4",
        ],
    );
    assert_eq!(code(&o), 0);
}

#[test]
fn flip_check_exit_codes() {
    let dir = TempDir::new().unwrap();
    let p = dir.path();
    family(p, "star_plus:3", "kp.tree");
    family(p, "star:4", "k14.tree");
    family(p, "path:5", "p5.tree");
    let o = run(
        p,
        &[
            "flip", "check", "--t1", "kp.tree", "--t2", "k14.tree", "--json",
        ],
    );
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["satisfied"], true);
    assert_eq!(
        code(&run(
            p,
            &["flip", "check", "--t1", "k14.tree", "--t2", "p5.tree"]
        )),
        1
    );
}

#[test]
fn usage_and_input_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let p = dir.path();
    std::fs::write(p.join("bad.tree"), "3\n0 1\n0 1\n").unwrap();
    family(p, "path:4", "p4.tree");
    for args in [
        &["thm1", "verify"][..],
        &["thm1", "verify", "--order", "3"],
        &["trees", "family", "--spec", "nope:3"],
        &["tw", "check"],
        &["flip", "check", "--t1", "bad.tree", "--t2", "p4.tree"],
        &["flip", "check", "--t1", "missing.tree", "--t2", "p4.tree"],
        &[
            "witness", "build", "--kind", "fk", "--colors", "10", "--out", "x.col",
        ],
        &["--jobs", "0", "tw", "check", "--exhaustive"],
        &["frobnicate"],
    ] {
        assert_eq!(code(&run(p, args)), 2, "{args:?}");
    }
}

#[test]
fn version_and_help() {
    let o = bin().arg("--version").output().unwrap();
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8(o.stdout)
        .unwrap()
        .contains(env!("CARGO_PKG_VERSION")));
    let o = bin()
        .args(["search", "counterexample", "--help"])
        .output()
        .unwrap();
    assert!(String::from_utf8(o.stdout)
        .unwrap()
        .contains("Exit code 0 means nothing was found"));
}
