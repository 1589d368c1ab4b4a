use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use sak_core::io::write_signed_text;
use sak_core::samples::seven_signed;
use serde_json::Value;
use tempfile::TempDir;

fn sak(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sak"))
        .args(args)
        .env("SAK_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn seven(dir: &TempDir) -> PathBuf {
    file(dir, "seven.txt", &write_signed_text(&seven_signed()))
}

fn labels(v: &Value) -> Vec<&str> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect()
}

#[test]
fn solve_strategies_agree_on_seven_vertex_example() {
    let dir = TempDir::new().unwrap();
    let g = seven(&dir);
    for strategy in ["brute", "branch", "ilp", "auto"] {
        let o = sak(&["solve", s(&g), "--strategy", strategy]);
        assert_eq!(code(&o), 0, "{strategy}");
        let r = json(&o);
        assert_eq!(r["optimum"], 4, "{strategy}");
        assert_eq!(r["status"], "yes");
        assert_eq!(r["schema"], 1);
        assert_eq!(labels(&r["witness"]).len(), 4);
    }
}

#[test]
fn budget_below_optimum_exits_one() {
    let dir = TempDir::new().unwrap();
    let g = seven(&dir);
    let o = sak(&["solve", s(&g), "--strategy", "brute", "--budget", "3"]);
    assert_eq!(code(&o), 1);
    let r = json(&o);
    assert_eq!(r["status"], "no");
    assert_eq!(r["optimum"], Value::Null);
    assert_eq!(code(&sak(&["solve", s(&g), "--budget", "4"])), 0);
}

#[test]
fn auto_routes_by_structure() {
    let dir = TempDir::new().unwrap();
    // All-negative K5: any single vertex attacks all its neighbours.
    let mut k5 = String::from("p sg 5 0 10\n");
    for u in 1..=5 {
        for v in u + 1..=5 {
            k5 += &format!("{u} {v} -\n");
        }
    }
    let r = json(&sak(&["solve", s(&file(&dir, "k5.txt", &k5)), "--strategy", "auto"]));
    assert_eq!((r["optimum"].as_u64(), r["strategy"].as_str()), (Some(1), Some("small")));

    let o = sak(&["gen", "complete", "--parts", "3,2,1", "--mode", "balanced"]);
    assert_eq!(code(&o), 0);
    let g = file(&dir, "bal.txt", std::str::from_utf8(&o.stdout).unwrap());
    let r = json(&sak(&["solve", s(&g)]));
    assert_eq!((r["optimum"].as_u64(), r["strategy"].as_str()), (Some(3), Some("closed")));
    let brute = json(&sak(&["solve", s(&g), "--strategy", "brute"]));
    assert_eq!(brute["optimum"], 3);
}

#[test]
fn generated_anti_balanced_complete() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("k33.json");
    let o = sak(&["gen", "complete", "--parts", "3,3", "--mode", "anti", "--json", "--out", s(&out)]);
    assert_eq!(code(&o), 0);
    for strategy in ["auto", "closed", "brute"] {
        assert_eq!(json(&sak(&["solve", s(&out), "--strategy", strategy]))["optimum"], 4);
    }
}

#[test]
fn verify_verdicts_and_violations() {
    let dir = TempDir::new().unwrap();
    let g = seven(&dir);
    let ok = sak(&["verify", s(&g), s(&file(&dir, "a.set", "v1 v3 v4 v5\n"))]);
    assert_eq!(code(&ok), 0);
    assert_eq!(json(&ok)["verdict"], "accepted");

    let bad = sak(&["verify", s(&g), s(&file(&dir, "b.set", "v1 v2 v3\n"))]);
    assert_eq!(code(&bad), 1);
    let r = json(&bad);
    assert_eq!(r["verdict"], "rejected");
    let violated: Vec<&str> = r["violations"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v["vertex"].as_str().unwrap())
        .collect();
    assert!(violated.contains(&"v4"), "{violated:?}");

    // A whole component has no boundary and is trivially an alliance.
    let all = sak(&["verify", s(&g), s(&file(&dir, "c.set", "v1 v2 v3 v4 v5 v6 v7"))]);
    assert_eq!(code(&all), 0);
    assert_eq!(json(&all)["boundary_empty"], true);

    let unknown = sak(&["verify", s(&g), s(&file(&dir, "d.set", "v9"))]);
    assert_eq!(code(&unknown), 3);
}

#[test]
fn hitting_set_reduction_plants_a_witness() {
    let dir = TempDir::new().unwrap();
    let h = file(&dir, "h.hs", "p hs 4 3\ne 1 2\ne 2 3\ne 3 4\n");
    let out = dir.path().join("target.txt");
    let o = sak(&["reduce", "hs", s(&h), "--k", "2", "--out", s(&out)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(json(&o)["witness_verified"], true);
    let side: Value =
        serde_json::from_str(&std::fs::read_to_string(format!("{}.witness.json", out.display())).unwrap()).unwrap();
    assert_eq!(side["budget"], 5);
    assert_eq!(side["schema"], 1);

    // The planted witness is accepted by `verify`, and the target's optimum
    // is within budget.
    let set = file(&dir, "w.set", &labels(&side["witness"]).join(" "));
    assert_eq!(code(&sak(&["verify", s(&out), s(&set)])), 0);
    let r = json(&sak(&["solve", s(&out), "--strategy", "branch", "--budget", "5"]));
    assert_eq!(r["status"], "yes");
}

#[test]
fn unsatisfiable_source_has_no_witness() {
    let dir = TempDir::new().unwrap();
    // Three disjoint edges need three hitting vertices.
    let h = file(&dir, "h.hs", "p hs 6 3\ne 1 2\ne 3 4\ne 5 6\n");
    let o = sak(&["reduce", "hs", s(&h), "--k", "2"]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    assert_eq!(r["sidecar"]["witness"], Value::Null);
    assert_eq!(r["witness_verified"], Value::Null);
}

#[test]
fn vertex_cover_witness_modes() {
    let dir = TempDir::new().unwrap();
    // K4 is cubic with minimum cover size 3.
    let k4 = file(&dir, "k4.col", "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n");
    let cover = json(&sak(&["reduce", "vc", s(&k4), "--k", "3", "--variant", "shared"]));
    assert_eq!(cover["witness_verified"], true);
    assert_eq!(cover["sidecar"]["budget"], 9);
    assert_eq!(cover["graph"]["n"], 5 * 4 + 3 * 3 + 1);
    let all = json(&sak(&["reduce", "vc", s(&k4), "--k", "3", "--witness", "all-vertices"]));
    assert_eq!(all["witness_verified"], false);

    let star = file(&dir, "star.col", "p edge 5 4\ne 1 2\ne 1 3\ne 1 4\ne 1 5\n");
    assert_eq!(code(&sak(&["reduce", "vc", s(&star), "--k", "1"])), 3);
}

#[test]
fn bounds_report() {
    let dir = TempDir::new().unwrap();
    let k4 = file(&dir, "k4.txt", "p sg 4 6 0\n1 2 +\n1 3 +\n1 4 +\n2 3 +\n2 4 +\n3 4 +\n");
    let r = json(&sak(&["check-bounds", s(&k4)]));
    let c = &r["components"][0];
    assert_eq!(c["existence_precondition"], false);
    assert_eq!(c["size_lower_bound"], 4);
    assert_eq!(json(&sak(&["solve", s(&k4)]))["optimum"], 4);
}

#[test]
fn snd_classes() {
    let dir = TempDir::new().unwrap();
    let o = sak(&["gen", "complete", "--parts", "2,3", "--mode", "anti"]);
    let g = file(&dir, "g.txt", std::str::from_utf8(&o.stdout).unwrap());
    let r = json(&sak(&["snd", s(&g)]));
    assert_eq!(r["classes"], 2);
    assert_eq!(r["partition"][0]["kind"], "N");
    assert_eq!(r["inter_sign"][0][1], "+");
    let lp = sak(&["snd", s(&g), "--lp"]);
    assert!(String::from_utf8(lp.stdout).unwrap().starts_with("Minimize"));
}

#[test]
fn dp_with_generated_decomposition() {
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("cat.txt");
    let d = dir.path().join("cat.td");
    let o = sak(&[
        "gen", "caterpillar", "--legs", "2,0,1,3", "--p-neg", "0.7", "--seed", "5", "--out", s(&g),
        "--decomposition", s(&d),
    ]);
    assert_eq!(code(&o), 0);
    let dp = json(&sak(&["solve", s(&g), "--strategy", "dp", "--decomposition", s(&d)]));
    let brute = json(&sak(&["solve", s(&g), "--strategy", "brute"]));
    assert_eq!(dp["optimum"], brute["optimum"]);
    assert!(dp["decomposition_sha256"].is_string());

    let dg = dir.path().join("dom.txt");
    let dd = dir.path().join("dom.td");
    sak(&["gen", "domino", "--nodes", "5", "--seed", "3", "--out", s(&dg), "--decomposition", s(&dd)]);
    let dp = json(&sak(&["solve", s(&dg), "--strategy", "dp", "--decomposition", s(&dd)]));
    let brute = json(&sak(&["solve", s(&dg), "--strategy", "brute"]));
    assert_eq!(dp["optimum"], brute["optimum"]);
}

#[test]
fn reports_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let a = sak(&["gen", "random", "--n", "10", "--seed", "9"]);
    let b = sak(&["gen", "random", "--n", "10", "--seed", "9"]);
    assert_eq!(a.stdout, b.stdout);
    let g = file(&dir, "r.txt", std::str::from_utf8(&a.stdout).unwrap());
    let strip = |o: Output| {
        let mut v = json(&o);
        for p in v["phases"].as_array_mut().unwrap() {
            p["millis"] = Value::Null;
        }
        v
    };
    let x = strip(sak(&["solve", s(&g), "--strategy", "brute"]));
    let y = strip(sak(&["solve", s(&g), "--strategy", "brute"]));
    assert_eq!(x, y);
    assert_eq!(x["input_sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn text_and_json_inputs_agree() {
    let dir = TempDir::new().unwrap();
    let t = sak(&["gen", "random", "--n", "8", "--seed", "4"]);
    let j = sak(&["gen", "random", "--n", "8", "--seed", "4", "--json"]);
    let tp = file(&dir, "g.txt", std::str::from_utf8(&t.stdout).unwrap());
    let jp = file(&dir, "g.json", std::str::from_utf8(&j.stdout).unwrap());
    let a = json(&sak(&["solve", s(&tp), "--strategy", "brute"]));
    let b = json(&sak(&["solve", s(&jp), "--strategy", "brute"]));
    assert_eq!(a["optimum"], b["optimum"]);
    assert_eq!(a["witness"], b["witness"]);
}

#[test]
fn stdin_input() {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_sak"))
        .args(["solve", "-", "--strategy", "brute"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(write_signed_text(&seven_signed()).as_bytes())
        .unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(json(&o)["optimum"], 4);
}

#[test]
fn exit_codes_for_bad_input() {
    let dir = TempDir::new().unwrap();
    let bad = file(&dir, "bad.txt", "p sg 2 1 0\n1 3 +\n");
    let o = sak(&["solve", s(&bad)]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(code(&sak(&["solve", s(&seven(&dir)), "--strategy", "closed"])), 2);
    assert_eq!(code(&sak(&["solve", s(&seven(&dir)), "--strategy", "fast"])), 2);
    assert_eq!(code(&sak(&["gen", "path", "--n", "4", "--signs", "x"])), 2);
    assert_eq!(code(&sak(&["gen", "random", "--n", "4", "--p-pos", "0.8", "--p-neg", "0.8"])), 2);
}
