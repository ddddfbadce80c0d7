use std::path::Path;
use std::process::{Command, Output};

fn clustercol(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clustercol")).args(args).env_remove("CLUSTERCOL_SEED").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn gen_complete_graph() {
    let o = clustercol(&["gen", "complete", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "3 3\n0 1\n0 2\n1 2\n");
}

#[test]
fn gen_dot_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("p.dot");
    let o = clustercol(&["gen", "path", "2", "--format", "dot", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(out).unwrap();
    assert_eq!(text.matches("--").count(), 1);
}

#[test]
fn oracle_on_a_fan() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "f.txt", &stdout(&clustercol(&["gen", "fan", "6"])));
    let o = clustercol(&["oracle", &g, "--clustering", "2"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!((v["lower"].as_u64(), v["upper"].as_u64()), (Some(3), Some(3)));
}

#[test]
fn colour_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "c.txt", &stdout(&clustercol(&["gen", "cycle", "9"])));
    let o = clustercol(&["colour", &g, "--algo", "two", "--k", "3"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["report"]["num_colours"].as_u64().unwrap() <= 2);
    let colours: Vec<String> = v["colouring"].as_array().unwrap().iter().map(|c| c.to_string()).collect();
    let col = write(dir.path(), "col.txt", &(colours.join("\n") + "\n"));
    let o = clustercol(&["verify", &g, &col]);
    assert!(o.status.success());
    let w: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(w["report"], v["report"]);
}

#[test]
fn minor_query() {
    let dir = tempfile::tempdir().unwrap();
    let host = write(dir.path(), "h.txt", &stdout(&clustercol(&["gen", "weak-closure", "3", "3"])));
    let pat = write(dir.path(), "p.txt", &stdout(&clustercol(&["gen", "closure", "3", "2"])));
    let v: serde_json::Value = serde_json::from_slice(&clustercol(&["minor", &host, &pat]).stdout).unwrap();
    assert_eq!(v["result"], "yes");
    let v: serde_json::Value = serde_json::from_slice(&clustercol(&["minor", &pat, &host]).stdout).unwrap();
    assert_eq!(v["result"], "no");
}

#[test]
fn suite_exit_codes() {
    let o = clustercol(&["suite", "weakstrong"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["suite"], "weakstrong");
    assert_eq!(clustercol(&["suite", "thresholds"]).status.code(), Some(1));
    let o = clustercol(&["suite", "nonexistent"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown suite"));
}

#[test]
fn seed_flag_and_env_agree() {
    let a = clustercol(&["gen", "random", "8", "0.5", "--seed", "11"]);
    let b = Command::new(env!("CARGO_BIN_EXE_clustercol"))
        .args(["gen", "random", "8", "0.5"])
        .env("CLUSTERCOL_SEED", "11")
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn malformed_graph_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "bad.txt", "2 1\n0 5\n");
    let o = clustercol(&["export", &g]);
    assert_eq!(o.status.code(), Some(2));
}
