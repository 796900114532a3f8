use std::io::Write;
use std::process::{Command, Output, Stdio};

const F22: &str = "UsP@Og_C?O?`?_?O?CO?a?G??O??SG?IO??c??EG";

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_subcubic"))
        .args(args)
        .env_remove("SUBCUBIC_JOBS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn subcubic");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn bad_family_up_to_24() {
    let o = run(&["families", "bad", "--max-n", "24"], "");
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 7);
}

#[test]
fn traces_are_json_lines() {
    let o = run(&["families", "dangerous", "--max-n", "13", "--traces"], "");
    assert!(o.status.success());
    let lines: Vec<_> = stdout(&o).lines().map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()).collect();
    assert_eq!(lines.len(), 6);
    assert!(lines.iter().all(|v| v["trace"].is_object()));
}

#[test]
fn forbidden_fixtures() {
    let o = run(&["families", "forbidden"], "");
    assert_eq!(stdout(&o).lines().count(), 6);
    let o = run(&["families", "forbidden", "--max-n", "14"], "");
    assert_eq!(stdout(&o).lines().count(), 3);
}

#[test]
fn alpha_from_stdin() {
    let o = run(&["alpha", "--witness"], &format!("{F22}\nDhc\n"));
    assert!(o.status.success());
    let out = stdout(&o);
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("8 "));
    assert!(lines[1].starts_with("2 "));
}

#[test]
fn malformed_input_is_a_usage_error() {
    let o = run(&["alpha"], "not graph6 at all ~~\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn unknown_claim() {
    let o = run(&["check", "no_such_claim", "--max-n", "6"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_generated_corpus() {
    let o = run(&["check", "main_38", "--max-n", "8"], "");
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines[0]["header"]["claim_id"], "main_38");
    let corpus = lines[0]["header"]["corpus"].as_u64().unwrap() as usize;
    assert_eq!(lines.len(), corpus + 2);
    assert!(lines[1..=corpus].iter().all(|r| r["verdict"] == "pass"));
    assert!(lines[corpus + 1]["summary"].is_object());
}

#[test]
fn check_reads_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("corpus.g6");
    std::fs::write(&corpus, format!("{F22}\n")).unwrap();
    let config = dir.path().join("check.json");
    let body = serde_json::json!({"input": corpus, "jobs": 2});
    std::fs::write(&config, body.to_string()).unwrap();

    let o = run(&["check", "staton", "--config", config.to_str().unwrap(), "--summary-only"], "");
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).lines().count(), 2);

    std::fs::write(&config, r#"{"max_nn": 3}"#).unwrap();
    let o = run(&["check", "staton", "--config", config.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn gen_matches_known_count() {
    let o = run(&["gen", "--min-n", "10", "--max-n", "10", "--cubic", "--min-girth", "4"], "");
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 6);
    // the output feeds back into alpha
    let o = run(&["alpha"], &out);
    assert_eq!(stdout(&o).lines().count(), 6);
}

#[test]
fn fracchi_of_c5() {
    let o = run(&["fracchi"], "Dhc\n");
    assert_eq!(stdout(&o).trim(), "5/2");
}

#[test]
fn trace_dossier() {
    let o = run(&["trace", F22], "");
    assert!(o.status.success());
    let d: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(d["alpha"], 8);
    assert_eq!(d["forbidden"], "F22");
    assert_eq!(d["case_11_30"], "f22");
}
