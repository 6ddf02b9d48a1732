use std::io::Write;
use std::process::{Command, Output, Stdio};

use recsys::cli::{verify_document, SystemDocument};
use serde_json::Value;

fn recsys(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_recsys"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn tiling_doc(k: usize) -> String {
    stdout(&recsys(&["system", "--tiling", &k.to_string()], None))
}

#[test]
fn decouple_tiling_two() {
    let o = recsys(&["decouple", "--format", "json"], Some(&tiling_doc(2)));
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["coefficients"], serde_json::json!(["2", "1", "-2", "-1"]));
    assert_eq!(v["characteristicPolynomial"]["text"], "x^4 - 2x^3 - x^2 + 2x + 1");
}

#[test]
fn decouple_identity_with_check_and_trim() {
    let doc = r#"{"order":1,"matrices":[[["1","0"],["0","1"]]],"initialA":["1"],"initialB":["0"]}"#;
    let o = recsys(&["decouple", "--check", "--trim", "--format", "json"], Some(doc));
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["coefficients"], serde_json::json!(["2", "-1"]));
    assert_eq!(v["closedFormAgrees"], true);
    assert_eq!(v["trimmed"], serde_json::json!(["2", "-1"]));
}

#[test]
fn decouple_trims_singular_tail() {
    let doc = r#"{"order":2,"matrices":[[["1","1"],["1","0"]],[["0","0"],["0","0"]]],"initialA":["1","1"],"initialB":["1","0"]}"#;
    let o = recsys(&["decouple", "--trim", "--format", "csv"], Some(doc));
    assert_eq!(
        stdout(&o),
        "index,coefficient,trimmed\n1,1,1\n2,1,1\n3,0,\n4,0,\n"
    );
}

#[test]
fn malformed_scalar_is_a_usage_error() {
    let doc = r#"{"order":1,"matrices":[[["1/0","0"],["0","1"]]],"initialA":["1"],"initialB":["0"]}"#;
    let o = recsys(&["decouple"], Some(doc));
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("zero denominator"));
    assert!(o.stdout.is_empty());
}

#[test]
fn inconsistent_lengths_rejected() {
    let doc = r#"{"order":2,"matrices":[[["1","0"],["0","1"]]],"initialA":["1"],"initialB":["0"]}"#;
    assert_eq!(recsys(&["decouple"], Some(doc)).status.code(), Some(2));
    assert_eq!(recsys(&["decouple"], Some("not json")).status.code(), Some(2));
}

#[test]
fn verify_tiling_three() {
    let o = recsys(&["verify", "--tiling", "3", "-n", "50"], None);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.matches("PASS").count(), 5, "{text}");
}

#[test]
fn verify_random_document() {
    let doc = r#"{"order":3,
        "matrices":[[["1/2+1/3i","-4"],["7/5","2-i"]],[["0","3/7"],["-1/9i","5"]],[["8","-2/3"],["1","1/4+i"]]],
        "initialA":["1","-1/2","3i"],"initialB":["0","2/3","-7"]}"#;
    let o = recsys(&["verify", "-n", "100", "--format", "json"], Some(doc));
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn verify_detects_wrong_claimed_coefficient() {
    let mut doc: Value = serde_json::from_str(&tiling_doc(2)).unwrap();
    doc["coefficients"] = serde_json::json!(["2", "1", "-2", "-2"]);
    let o = recsys(&["verify", "-n", "30"], Some(&doc.to_string()));
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("FAIL claimed-coefficients"), "{text}");
    assert!(text.contains("recurrence first fails at n = 4"), "{text}");

    // the library report names the first violating index too
    let parsed = SystemDocument::from_json(&doc.to_string()).unwrap().parse().unwrap();
    let checks = verify_document(&parsed, 30).unwrap();
    let seq_a = checks.iter().find(|c| c.name == "sequence-a").unwrap();
    assert!(!seq_a.passed);
}

#[test]
fn verify_horizon_must_cover_order() {
    let o = recsys(&["verify", "--tiling", "3", "-n", "5"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn gen_tiling_sequences() {
    let o = recsys(&["gen", "--tiling", "3", "-n", "5", "--which", "t", "--format", "csv"], None);
    assert_eq!(stdout(&o), "n,t\n0,1\n1,2\n2,5\n3,12\n4,26\n5,56\n");

    let o = recsys(&["gen", "--tiling", "2", "-n", "9", "--which", "a", "--format", "bfile"], None);
    let text = stdout(&o);
    let values: Vec<&str> = text.lines().map(|l| l.split(' ').nth(1).unwrap()).collect();
    assert_eq!(values, ["1", "1", "2", "3", "5", "8", "13", "21", "34", "55"]);
}

#[test]
fn gen_decoupled_matches_coupled() {
    let doc = tiling_doc(4);
    let a = recsys(&["gen", "-n", "40", "--format", "json"], Some(&doc));
    let b = recsys(&["gen", "-n", "40", "--decoupled", "--format", "json"], Some(&doc));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn gen_zero_initials() {
    let doc = r#"{"order":2,"matrices":[[["3","1"],["2","5"]],[["1","1"],["1","1"]]],"initialA":["0","0"],"initialB":["0","0"]}"#;
    let o = recsys(&["gen", "-n", "6", "--format", "json"], Some(doc));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    for row in v.as_array().unwrap() {
        assert_eq!(row["a"], "0");
        assert_eq!(row["b"], "0");
        assert_eq!(row["t"], "0");
    }
}

#[test]
fn bfile_needs_one_sequence() {
    let o = recsys(&["gen", "--tiling", "2", "-n", "3", "--format", "bfile"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn tiling_with_enumeration() {
    let o = recsys(&["tiling", "-k", "3", "-n", "3", "--enumerate", "--format", "csv"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "n,a,b,t,enum_a,enum_b,enum_t,match\n\
         0,1,0,1,1,0,1,yes\n\
         1,1,1,2,1,1,2,yes\n\
         2,2,3,5,2,3,5,yes\n\
         3,4,8,12,4,8,12,yes\n"
    );
}

#[test]
fn tiling_rejects_zero_pieces() {
    let o = recsys(&["tiling", "-k", "0", "-n", "3"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn triangle_json() {
    let o = recsys(&["triangle", "--max-k", "7", "--format", "json"], None);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 7);
    assert_eq!(rows[2]["coefficients"], serde_json::json!(["2", "1", "0", "-3", "-2", "-1"]));
    assert_eq!(
        rows[6]["coefficients"],
        serde_json::json!(["2", "1", "0", "-1", "-2", "-3", "-4", "-7", "-6", "-5", "-4", "-3", "-2", "-1"])
    );
}

#[test]
fn document_round_trip_is_canonical() {
    let doc = r#"{"order":1,"matrices":[[["2/4","0"],["1+0i",3]]],"initialA":["6/3"],"initialB":["-0"]}"#;
    let parsed = SystemDocument::from_json(doc).unwrap();
    let canonical = parsed.canonical().unwrap();
    let again = SystemDocument::from_json(&canonical.to_json()).unwrap();
    assert_eq!(again.canonical().unwrap(), canonical);
    assert_eq!(
        serde_json::to_string(&canonical).unwrap(),
        r#"{"order":1,"matrices":[[["1/2","0"],["1","3"]]],"initialA":["2"],"initialB":["0"]}"#
    );
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(recsys(&["nonsense"], None).status.code(), Some(2));
    assert_eq!(recsys(&["gen", "--tiling", "2"], None).status.code(), Some(2));
    assert_eq!(recsys(&["--help"], None).status.code(), Some(0));
}

#[test]
fn input_file_path() {
    let dir = std::env::temp_dir().join(format!("recsys-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("tiling3.json");
    std::fs::write(&path, tiling_doc(3)).unwrap();
    let o = recsys(&["decouple", path.to_str().unwrap()], None);
    assert!(stdout(&o).contains("coefficients: (2, 1, 0, -3, -2, -1)"));
    let missing = recsys(&["decouple", dir.join("missing.json").to_str().unwrap()], None);
    assert_eq!(missing.status.code(), Some(2));
    std::fs::remove_dir_all(dir).ok();
}
