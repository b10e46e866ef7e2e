//! Golden CLI cases shared by the golden test and the acceptance suite.
#![allow(dead_code)]

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use serde_json::{json, Value};

pub struct Case {
    pub name: String,
    pub args: Vec<String>,
    pub stdin: Option<String>,
    pub exit: i32,
    pub stdout: String,
}

pub fn golden_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/cli.json")
}

pub fn load_cases() -> Vec<Case> {
    let text = std::fs::read_to_string(golden_path()).expect("golden file");
    let v: Value = serde_json::from_str(&text).expect("golden JSON");
    v.as_array()
        .expect("array of cases")
        .iter()
        .map(|c| Case {
            name: c["name"].as_str().expect("name").to_string(),
            args: c["args"]
                .as_array()
                .expect("args")
                .iter()
                .map(|a| a.as_str().expect("string arg").to_string())
                .collect(),
            stdin: c.get("stdin").and_then(Value::as_str).map(str::to_string),
            exit: c["exit"].as_i64().unwrap_or(-1) as i32,
            stdout: c["stdout"].as_str().unwrap_or_default().to_string(),
        })
        .collect()
}

pub fn save_cases(cases: &[Case]) {
    let v: Vec<Value> = cases
        .iter()
        .map(|c| {
            let mut o =
                json!({ "name": c.name, "args": c.args, "exit": c.exit, "stdout": c.stdout });
            if let Some(s) = &c.stdin {
                o["stdin"] = json!(s);
            }
            o
        })
        .collect();
    let text = serde_json::to_string_pretty(&v).expect("serializable") + "\n";
    std::fs::write(golden_path(), text).expect("writable golden file");
}

/// Runs the binary with a clean level-cap environment.
pub fn run_cli(args: &[&str], stdin: Option<&str>) -> (i32, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_idealis"))
        .args(args)
        .env_remove("IDEALIS_MAX_LEVEL")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .expect("binary runs");
    let mut pipe = child.stdin.take().expect("stdin");
    pipe.write_all(stdin.unwrap_or_default().as_bytes())
        .expect("stdin write");
    drop(pipe);
    let out = child.wait_with_output().expect("binary finishes");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    )
}

pub fn run_case(c: &Case) -> (i32, String) {
    let args: Vec<&str> = c.args.iter().map(String::as_str).collect();
    run_cli(&args, c.stdin.as_deref())
}
