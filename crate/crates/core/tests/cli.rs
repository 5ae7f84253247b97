use std::path::PathBuf;
use std::process::{Command, Output};

use jonquieres::report::Report;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn jonq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jonq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn machine(args: &[&str]) -> (Report, i32) {
    let out = jonq(args);
    let text = String::from_utf8(out.stdout).unwrap();
    (Report::parse_machine(&text).unwrap(), out.status.code().unwrap())
}

#[test]
fn verify_cremona_prints_inversion_factors() {
    let plane = fixture("plane.jonq");
    let (r, code) = machine(&["verify-cremona", plane.to_str().unwrap(), "--machine"]);
    assert_eq!(code, 0);
    assert_eq!(r.get("cremona.target_factor"), Some("y0*y1*y2"));

    let id = fixture("identity.jonq");
    let (r, _) = machine(&["verify-cremona", id.to_str().unwrap(), "--machine"]);
    assert_eq!(r.get("cremona.target_factor"), Some("1"));
    assert_eq!(r.get("cremona.source_factor"), Some("1"));

    let p3 = fixture("p3.jonq");
    let (r, _) = machine(&["verify-cremona", p3.to_str().unwrap(), "--machine"]);
    assert_eq!(r.get("cremona.target_factor_degree"), Some("5"));
}

#[test]
fn wrong_inverse_exits_with_failure() {
    let bad = fixture("bad_inverse.jonq");
    let (r, code) = machine(&["verify-cremona", bad.to_str().unwrap(), "--machine"]);
    assert_eq!(code, 1);
    assert_eq!(r.get("cremona.verified"), Some("fails"));
    assert!(r.get("cremona.verified.detail").unwrap().contains("coordinate 2"));
    assert_eq!(jonq(&["implicitize", bad.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn input_errors_exit_with_two() {
    assert_eq!(jonq(&["implicitize", "/nonexistent.jonq"]).status.code(), Some(2));
    let dir = std::env::temp_dir().join(format!("jonq-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.jonq");
    std::fs::write(&path, "[ring]\nx = x0, x1, x2\n[cremona]\nx1*x2\nx0*x2\nx0*x1 +\n").unwrap();
    let out = jonq(&["verify-cremona", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("line 6"), "{stderr}");
}

#[test]
fn implicitize_with_oracle() {
    let plane = fixture("plane.jonq");
    let (r, code) = machine(&["implicitize", plane.to_str().unwrap(), "--oracle", "--machine"]);
    assert_eq!(code, 0);
    assert_eq!(r.get("monoid.delta"), Some("4"));
    assert_eq!(r.get("case.tag"), Some("general"));
    assert_eq!(r.get("oracle.agrees"), Some("holds"));
    assert_eq!(r.get("syzygetic.0.degree"), Some("5"));
    assert_eq!(r.get("syzygetic.1.degree"), Some("5"));

    let id = fixture("identity.jonq");
    let (r, _) = machine(&["implicitize", id.to_str().unwrap(), "--machine"]);
    assert_eq!(r.get("monoid.F"), Some("y0^2 - y1*y2 - y0*y3 - y1*y3 - y2*y3"));

    let p3 = fixture("p3.jonq");
    let (r, _) = machine(&["implicitize", p3.to_str().unwrap(), "--machine"]);
    assert_eq!(r.get("syzygetic.count"), Some("1"));
    assert_eq!(r.get("syzygetic.0.extraneous_factor"), Some("y3"));
}

#[test]
fn analyze_reports_regularity() {
    let plane = fixture("plane.jonq");
    let (r, code) = machine(&["analyze", plane.to_str().unwrap(), "--machine"]);
    assert_eq!(code, 0);
    assert_eq!(r.get("regularity.reg"), Some("1"));
    assert_eq!(r.get("regularity.bounds.cremona_bound"), Some("holds"));
    assert_eq!(r.get("cone.syzygy.generation"), Some("holds"));

    let nzd = fixture("nzd.jonq");
    let (r, _) = machine(&["analyze", nzd.to_str().unwrap(), "--machine"]);
    assert_eq!(r.get("regularity.bounds.jonquieres_equality"), Some("holds"));

    let p3 = fixture("p3.jonq");
    let (r, code) = machine(&["analyze", p3.to_str().unwrap(), "--machine", "--deg-bound", "6"]);
    assert_eq!(code, 0);
    assert_eq!(r.get("cone.syzygy.bound"), Some("6"));
    assert!(r
        .get("regularity.bounds.jonquieres_bound")
        .unwrap()
        .starts_with("skipped"));
}

#[test]
fn rees_on_identity_and_tight_budget() {
    let id = fixture("identity.jonq");
    let (r, code) = machine(&["rees", id.to_str().unwrap(), "--machine", "--budget", "members=5"]);
    assert_eq!(code, 0);
    assert_eq!(r.get("monoid.saturation.forward_exponent"), Some("0"));
    assert_eq!(r.get("members.count"), Some("5"));

    let plane = fixture("plane.jonq");
    let (r, code) = machine(&["rees", plane.to_str().unwrap(), "--machine", "--budget", "pairs=3"]);
    assert_eq!(code, 0, "budget exhaustion is a skip");
    assert!(r.verdicts().any(|(_, v)| v.to_string() == "skipped(budget)"));
}

#[test]
fn selftest_is_deterministic() {
    let a = jonq(&["selftest", "--count", "3", "--seed", "5", "--machine"]);
    let b = jonq(&["selftest", "--count", "3", "--seed", "5", "--machine", "--jobs", "2"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let (r, code) = machine(&["selftest", "--count", "0", "--machine"]);
    assert_eq!(code, 0);
    assert_eq!(r.get("summary.verdicts"), Some("0"));
}

#[test]
fn machine_output_round_trips() {
    let plane = fixture("plane.jonq");
    let out = jonq(&["implicitize", plane.to_str().unwrap(), "--machine"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(Report::parse_machine(&text).unwrap().to_machine(), text);
}
