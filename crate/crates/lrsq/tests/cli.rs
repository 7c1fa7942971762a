//! Golden-output tests for every CLI verb: byte-exact stdout, pinned exit
//! codes.

use std::process::Command;

fn lrsq(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_lrsq"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap_or(-1),
    )
}

fn expect(args: &[&str], want_stdout: &str, want_code: i32) {
    let (stdout, stderr, code) = lrsq(args);
    assert_eq!(code, want_code, "args {args:?}, stderr: {stderr}");
    assert_eq!(stdout, want_stdout, "args {args:?}");
}

#[test]
fn lr_verbs() {
    expect(&["lr", "--lambda", "2,1", "--mu", "2", "--nu", "1"], "1\n", 0);
    expect(
        &["lr", "--lambda", "3,2,1", "--mu", "2,1", "--nu", "2,1"],
        "2\n",
        0,
    );
    expect(&["lr", "--lambda", "2,1", "--mus", "1;1;1"], "2\n", 0);
    expect(&["kostka", "--lambda", "2,1", "--nu", "1,1,1"], "2\n", 0);
    expect(&["lrsum", "--degree", "3", "--m", "3", "--profile", "1,1,1"], "6\n", 0);
    expect(&["lrsum", "--degree", "2", "--m", "2"], "6\n", 0);
}

#[test]
fn malformed_partition_is_usage_error() {
    let (_, stderr, code) = lrsq(&["lr", "--lambda", "2,1,x", "--mu", "1", "--nu", "1"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("--lambda"), "stderr: {stderr}");
}

#[test]
fn unknown_verb_is_usage_error() {
    let (_, _, code) = lrsq(&["frobnicate"]);
    assert_eq!(code, 2);
}

#[test]
fn series_verbs() {
    expect(
        &["series", "harmonic", "--m", "2", "--degree", "4"],
        "# vars: t  max_degree: 4\n1\t1\nt\t1\nt^2\t3\nt^3\t6\nt^4\t14\n",
        0,
    );
    expect(
        &["series", "stable-block", "--m", "2", "--degree", "4"],
        "# vars: t  max_degree: 4\n1\t1\nt\t2\nt^2\t6\nt^3\t14\nt^4\t34\n",
        0,
    );
    expect(
        &["series", "eta", "--m", "2", "--degree", "3"],
        "# vars: t  max_degree: 3\n1\t1\nt\t2\nt^2\t6\nt^3\t14\n",
        0,
    );
    expect(
        &["series", "glq", "--q", "2", "--degree", "3"],
        "# vars: t  max_degree: 3\n1\t1\nt\t1\nt^2\t3\nt^3\t6\n",
        0,
    );
    expect(
        &["series", "main-formula", "--m", "2", "--degree", "2"],
        "# vars: t1,t2  max_degree: 2\n1\t1\nt2\t1\nt2^2\t2\nt1\t1\nt1*t2\t2\nt1^2\t2\n",
        0,
    );
    expect(
        &["series", "partitions-by-length", "--degree", "4"],
        "# vars: q,t  max_degree: 4\n1\t1\nq*t\t1\nq*t^2\t1\nq*t^3\t1\nq^2*t^2\t1\n",
        0,
    );
}

#[test]
fn verify_verbs() {
    expect(
        &["verify", "main-formula", "--m", "2", "--degree", "5"],
        "verified: both sides agree coefficient-for-coefficient\n",
        0,
    );
    expect(
        &["verify", "bigraded", "--degree", "4"],
        "verified: product, harmonic product, and LR sum agree\n",
        0,
    );
    expect(
        &["verify", "eta-glq", "--q", "2", "--degree", "6"],
        "verified: both sides agree coefficient-for-coefficient\n",
        0,
    );
    expect(
        &["verify", "orbit", "--composition", "2,1"],
        "verified: both counts are 4\n",
        0,
    );
    expect(
        &["verify", "block-stable", "--m", "2", "--degree", "4"],
        "verified: both sides agree coefficient-for-coefficient\n",
        0,
    );
}

#[test]
fn dim_verbs() {
    expect(&["dim", "invariants", "--n", "2", "--profile", "2,2"], "6\n", 0);
    expect(&["dim", "block", "--composition", "2,2", "--degree", "2"], "6\n", 0);
    expect(
        &["dim", "harmonic", "--composition", "2,2", "--degree", "2"],
        "3\n",
        0,
    );
}

#[test]
fn hesselink_verbs() {
    expect(
        &["hesselink", "--n", "3", "--lambda", "1,0,-1", "--dmax", "6"],
        "t + t^2\n",
        0,
    );
    let (_, stderr, code) = lrsq(&["hesselink", "--n", "2", "--lambda", "-1,1", "--dmax", "4"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("not dominant"), "stderr: {stderr}");
}

#[test]
fn spherical_reads_weight_file() {
    let dir = std::env::temp_dir().join("lrsq-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("weights.txt");
    std::fs::write(&path, "0,0\n1,-1\n").unwrap();
    expect(
        &["spherical", "--n", "2", "--weights", path.to_str().unwrap(), "--dmax", "6"],
        "1 + t\n",
        0,
    );
}

#[test]
fn finite_verbs() {
    expect(&["necklace", "--n", "4", "--m", "2"], "6\n", 0);
    expect(
        &["orbits", "--composition", "2,1", "--both"],
        "brute: 4\nlr: 4\nverified: counts agree\n",
        0,
    );
    expect(&["orbits", "--composition", "2,1", "--brute"], "4\n", 0);
    expect(&["orbits", "--composition", "2,1", "--lr"], "4\n", 0);
    expect(&["glq", "--q", "2", "--brute", "--m", "2"], "3\n", 0);
    let (_, stderr, code) = lrsq(&["orbits", "--composition", "5,4"]);
    assert_eq!(code, 2, "brute-force bound surfaces as usage error");
    assert!(stderr.contains("bound"), "stderr: {stderr}");
}

#[test]
fn json_output_is_deterministic() {
    let (a, _, code_a) = lrsq(&["series", "harmonic", "--m", "2", "--degree", "3", "--json"]);
    let (b, _, code_b) = lrsq(&["series", "harmonic", "--m", "2", "--degree", "3", "--json"]);
    assert_eq!(code_a, 0);
    assert_eq!(code_b, 0);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["verb"], "series harmonic");
    assert_eq!(v["payload"]["terms"][0]["coeff"], "1");
}
