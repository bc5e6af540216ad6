use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use tempfile::TempDir;

struct Run {
    code: i32,
    report: Value,
    stderr: String,
}

fn rainbow(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_rainbow")).args(args).output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    Run {
        code: out.status.code().unwrap(),
        report: serde_json::from_str(&stdout).unwrap_or(Value::Null),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn graph_doc(edges: &[(&str, &str, &str)]) -> String {
    let mut vs: Vec<&str> = edges.iter().flat_map(|&(u, v, _)| [u, v]).collect();
    vs.sort();
    vs.dedup();
    let es: Vec<Value> = edges.iter().map(|&(u, v, c)| serde_json::json!({"u": u, "v": v, "color": c})).collect();
    serde_json::json!({"vertices": vs, "edges": es}).to_string()
}

const SAT: &str = "p cnf 3 1\n1 2 -3 0\n";
const UNSAT: &str = "p cnf 1 2\n1 0\n-1 0\n";

#[test]
fn reduce_writes_document_and_dot() {
    let dir = TempDir::new().unwrap();
    let cnf = file(&dir, "f.cnf", SAT);
    let (out, dot) = (dir.path().join("g.json"), dir.path().join("g.dot"));
    let r = rainbow(&["reduce", "--cnf", s(&cnf), "--construction", "base", "--out", s(&out), "--dot", s(&dot)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let doc: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc["vertices"].as_array().unwrap().len(), 30);
    let edges = doc["edges"].as_array().unwrap().len();
    assert_eq!(edges, 36);
    let dot_text = fs::read_to_string(&dot).unwrap();
    assert!(dot_text.starts_with("graph"));
    let edge_lines: Vec<&str> = dot_text.lines().filter(|l| l.contains(" -- ")).collect();
    assert_eq!(edge_lines.len(), edges);
    assert!(edge_lines.iter().all(|l| l.contains("[label=\"")));
    assert_eq!(r.report["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn reduce_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let cnf = file(&dir, "f.cnf", "p cnf 3 3\n1 2 3 0\n-1 2 3 0\n1 -2 -3 0\n");
    for c in ["base", "io", "ib", "cubic"] {
        let mut texts = Vec::new();
        for i in 0..2 {
            let (out, dot) = (dir.path().join(format!("{c}{i}.json")), dir.path().join(format!("{c}{i}.dot")));
            assert_eq!(rainbow(&["reduce", "--cnf", s(&cnf), "--construction", c, "--out", s(&out), "--dot", s(&dot)]).code, 0);
            texts.push((fs::read(&out).unwrap(), fs::read(&dot).unwrap()));
        }
        assert_eq!(texts[0], texts[1], "{c}");
    }
}

#[test]
fn reduce_usage_errors() {
    let dir = TempDir::new().unwrap();
    let cnf = file(&dir, "f.cnf", SAT);
    let out = dir.path().join("g.json");
    assert_eq!(rainbow(&["reduce", "--cnf", s(&cnf), "--construction", "kreg", "--out", s(&out)]).code, 2);
    assert_eq!(rainbow(&["reduce", "--cnf", s(&cnf), "--construction", "kreg", "--k", "3", "--out", s(&out)]).code, 2);
    assert_eq!(rainbow(&["reduce", "--cnf", s(&cnf), "--construction", "base", "--k", "4", "--out", s(&out)]).code, 2);
    assert_eq!(rainbow(&["reduce", "--cnf", s(&cnf), "--construction", "kreg", "--k", "4", "--out", s(&out)]).code, 0);
    let bad = file(&dir, "bad.cnf", "p cnf 1 4\n1 0\n1 0\n1 0\n1 0\n");
    let r = rainbow(&["reduce", "--cnf", s(&bad), "--construction", "base", "--out", s(&out)]);
    assert_eq!(r.code, 2);
    assert!(r.report["error"].as_str().unwrap().contains("fourth"));
    assert_eq!(rainbow(&["reduce", "--cnf", "/nonexistent.cnf", "--construction", "base", "--out", s(&out)]).code, 2);
    assert_eq!(rainbow(&["frobnicate"]).code, 2);
    assert_eq!(rainbow(&["--help"]).code, 0);
}

#[test]
fn verify_exit_codes() {
    let dir = TempDir::new().unwrap();
    let mut k5 = Vec::new();
    let names = ["a", "b", "c", "d", "e"];
    for i in 0..5 {
        for j in i + 1..5 {
            k5.push((names[i], names[j], "red"));
        }
    }
    let k5 = file(&dir, "k5.json", &graph_doc(&k5));
    let c4 = file(&dir, "c4.json", &graph_doc(&[("a", "b", "1"), ("b", "c", "1"), ("c", "d", "2"), ("d", "a", "2")]));

    for algo in ["fpt", "brute"] {
        assert_eq!(rainbow(&["verify", "--graph", s(&k5), "--mode", "rc", "--algo", algo]).code, 0);
        let r = rainbow(&["verify", "--graph", s(&c4), "--mode", "rc", "--algo", algo]);
        assert_eq!(r.code, 1);
        assert_eq!(r.report["verdicts"][0]["failing_pair"], serde_json::json!(["a", "c"]));
        assert!(r.stderr.contains("a, c"));
    }
    for algo in ["fpt", "enum", "kgeo"] {
        assert_eq!(rainbow(&["verify", "--graph", s(&c4), "--mode", "src", "--algo", algo]).code, 1, "{algo}");
    }
    assert_eq!(rainbow(&["verify", "--graph", s(&c4), "--mode", "src", "--algo", "geodetic"]).code, 2);
    assert_eq!(rainbow(&["verify", "--graph", s(&c4), "--mode", "src", "--algo", "enum", "--cap", "1"]).code, 2);
    assert_eq!(rainbow(&["verify", "--graph", s(&c4), "--mode", "src", "--algo", "kgeo", "--k-max", "1"]).code, 2);
    assert_eq!(rainbow(&["verify", "--graph", s(&c4), "--mode", "rc", "--algo", "enum"]).code, 2);

    let r = rainbow(&["verify", "--graph", s(&c4), "--mode", "rc", "--algo", "brute", "--pair", "a", "b"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.report["verdicts"][0]["witness"]["vertices"], serde_json::json!(["a", "b"]));
    assert_eq!(rainbow(&["verify", "--graph", s(&c4), "--mode", "src", "--algo", "enum", "--pair", "a", "c"]).code, 1);
    assert_eq!(rainbow(&["verify", "--graph", s(&c4), "--mode", "rc", "--algo", "fpt", "--pair", "a", "zz"]).code, 2);

    let broken = file(&dir, "broken.json", "{\"vertices\": [\"a\"], \"edges\": [{\"u\": \"a\", \"v\": \"a\", \"color\": \"x\"}]}");
    assert_eq!(rainbow(&["verify", "--graph", s(&broken), "--mode", "rc", "--algo", "fpt"]).code, 2);
}

#[test]
fn recognize_exit_codes() {
    let dir = TempDir::new().unwrap();
    let cnf = file(&dir, "f.cnf", SAT);
    let out = dir.path().join("g.json");
    assert_eq!(rainbow(&["reduce", "--cnf", s(&cnf), "--construction", "base", "--out", s(&out)]).code, 0);
    let r = rainbow(&["recognize", "--graph", s(&out), "--classes", "bipartite,outerplanar"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.report["classes"].as_array().unwrap().len(), 2);
    assert!(r.report["classes"][0]["certificate"]["sides"].is_array());

    let c4 = file(&dir, "c4.json", &graph_doc(&[("a", "b", "1"), ("b", "c", "1"), ("c", "d", "2"), ("d", "a", "2")]));
    let r = rainbow(&["recognize", "--graph", s(&c4), "--classes", "chordal"]);
    assert_eq!(r.code, 1);
    assert_eq!(r.report["classes"][0]["verdict"], "no");
    assert_eq!(rainbow(&["recognize", "--graph", s(&c4), "--classes", "foo"]).code, 2);
    assert_eq!(rainbow(&["recognize", "--graph", s(&c4), "--classes", "regular=2,geodetic=2,bipartite"]).code, 0);
}

#[test]
fn roundtrip_exit_codes() {
    let dir = TempDir::new().unwrap();
    let sat = file(&dir, "sat.cnf", SAT);
    let unsat = file(&dir, "unsat.cnf", UNSAT);

    let r = rainbow(&["roundtrip", "--cnf", s(&sat), "--construction", "base"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.report["verdicts"].as_array().unwrap().iter().all(|v| v["holds"] == true));

    let r = rainbow(&["roundtrip", "--cnf", s(&unsat), "--construction", "cubic"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.report["verdicts"].as_array().unwrap().iter().all(|v| v["holds"] == false));

    let r = rainbow(&["roundtrip", "--cnf", s(&sat), "--construction", "ib", "--strong"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let verdicts = r.report["verdicts"].as_array().unwrap();
    let strong = verdicts.last().unwrap();
    assert_eq!((strong["holds"].as_bool(), strong["expected"].as_bool()), (Some(false), Some(false)));

    for c in ["base", "io"] {
        assert_eq!(rainbow(&["roundtrip", "--cnf", s(&sat), "--construction", c, "--strong"]).code, 0, "{c}");
        assert_eq!(rainbow(&["roundtrip", "--cnf", s(&unsat), "--construction", c, "--strong"]).code, 0, "{c}");
    }
    assert_eq!(rainbow(&["roundtrip", "--cnf", s(&sat), "--construction", "kreg", "--k", "5"]).code, 0);
}
