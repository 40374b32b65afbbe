use std::collections::BTreeMap;
use std::io::Write;
use std::process::Command;

use fanbranch::cli::{main_with_args, BranchDoc};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut full = vec!["fanbranch"];
    full.extend_from_slice(args);
    let o = main_with_args(full);
    (o.code, o.stdout, o.stderr)
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

const B2: &[&str] = &["--algebra", "B2", "--sub", "A1xU1"];
const B4: &[&str] = &["--algebra", "B4", "--sub", "A3xU1"];

fn with(cmd: &str, base: &[&str], extra: &[&str]) -> Vec<String> {
    std::iter::once(cmd)
        .chain(base.iter().copied())
        .chain(extra.iter().copied())
        .map(str::to_string)
        .collect()
}

fn ok_v(args: Vec<String>) -> String {
    let refs: Vec<&str> = args.iter().map(String::as_str).collect();
    ok(&refs)
}

#[test]
fn b2_branch_text() {
    let out = ok_v(with("branch", B2, &["--hw", "2,1"]));
    let expected = "\
1 x ([2], 3)
1 x ([1], 2)
1 x ([3], 2)
1 x ([0], 1)
2 x ([2], 1)
2 x ([1], 0)
1 x ([3], 0)
1 x ([0], -1)
2 x ([2], -1)
1 x ([1], -2)
1 x ([3], -2)
1 x ([2], -3)
";
    assert_eq!(out, expected);
    assert_eq!(ok_v(with("branch", B2, &["--hw", "5/2,1/2", "--basis", "e"])), expected);
}

#[test]
fn b4_branch_has_expected_shape() {
    let out = ok_v(with("branch", B4, &["--hw", "0,1,1,0"]));
    assert_eq!(out.lines().count(), 38);
    assert_eq!(out.lines().next(), Some("1 x ([0,1,1], 5)"));
    assert_eq!(out.lines().last(), Some("1 x ([1,1,0], -5)"));
    assert!(out.contains("3 x ([1,1,0], -1)\n"));
}

#[test]
fn fan_and_xi_text() {
    assert_eq!(
        ok_v(with("fan", B2, &[])),
        "1 x (1,0)  +\n1 x (0,1)  +\n1 x (2,1)  -\n1 x (1,2)  -\n1 x (2,2)  +\n"
    );
    assert_eq!(
        ok_v(with("xi", B2, &[])),
        "([0], 0)  (0,0)\n([1], 1)  (1,0)  +\n([1], 3)  (2,1)  -\n([0], 4)  (2,2)  +\n"
    );
    let fan = ok_v(with("fan", B4, &[]));
    assert!(fan.starts_with("1 x (1,0,0,0)  +\n"));
    assert!(fan.contains("2 x (1,1,1,0)  -\n"));
}

#[test]
fn json_round_trip_is_byte_identical() {
    for hw in ["2,1", "0,0", "3,2"] {
        let json = ok_v(with("branch", B2, &["--hw", hw, "--format", "json"]));
        let doc = BranchDoc::parse(&json).unwrap();
        assert_eq!(doc.render(), json);
    }
    let traced = ok_v(with("branch", B4, &["--hw", "0,1,1,0", "--format", "json", "--trace"]));
    let doc = BranchDoc::parse(&traced).unwrap();
    assert_eq!(doc.render(), traced);
    assert_eq!(doc.trace.as_ref().map(Vec::len), Some(11));
}

#[test]
fn text_and_json_carry_the_same_terms() {
    for (base, hw) in [(B2, "2,1"), (B4, "0,1,1,0"), (B4, "1,0,0,1")] {
        let text = ok_v(with("branch", base, &["--hw", hw]));
        let from_text: BTreeMap<(String, String), u64> = text
            .lines()
            .map(|l| {
                let (m, rest) = l.split_once(" x (").unwrap();
                let (labels, q) = rest.trim_end_matches(')').split_once(", ").unwrap();
                ((labels.to_string(), q.to_string()), m.parse().unwrap())
            })
            .collect();
        let doc = BranchDoc::parse(&ok_v(with("branch", base, &["--hw", hw, "--format", "json"]))).unwrap();
        let from_json: BTreeMap<(String, String), u64> = doc
            .terms
            .iter()
            .map(|t| {
                let labels: Vec<String> = t.labels.iter().map(i64::to_string).collect();
                ((format!("[{}]", labels.join(",")), t.charge.clone()), t.multiplicity)
            })
            .collect();
        assert_eq!(from_text, from_json);
        assert!(doc.checks.values().all(|&c| c));
    }
}

#[test]
fn batch_matches_single_runs() {
    let weights = ["0,1,1,0", "1,0,0,0", "0,0,0,1", "2,0,0,0", "0,0,0,0"];
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "# batch").unwrap();
    for w in weights {
        writeln!(file, "{w}  # entry").unwrap();
        writeln!(file).unwrap();
    }
    let path = file.path().to_str().unwrap();
    let expected: String = weights.iter().map(|w| ok_v(with("branch", B4, &["--hw", w]))).collect();
    assert_eq!(ok_v(with("branch", B4, &["--hw-file", path])), expected);
    assert_eq!(ok_v(with("branch", B4, &["--hw-file", path, "--parallel"])), expected);
}

#[test]
fn verify_reports_agreement() {
    let out = ok_v(with("verify", B2, &["--hw", "2,1"]));
    assert!(out.contains("agreement: pass\n"));
    for m in ["fan", "weyl", "partition", "oracle"] {
        assert!(out.contains(&format!("method {m}: 12 terms\n")), "{out}");
    }
    assert!(out.contains("check dimension: pass\n"));
}

#[test]
fn integerized_charges() {
    let a3 = ["--algebra", "A3", "--sub", "A2xU1", "--hw", "1,0,0"];
    let raw = ok(&[&["branch"][..], &a3].concat());
    assert_eq!(raw, "1 x ([1,0], 1/4)\n1 x ([0,0], -3/4)\n");
    let int = ok(&[&["branch"][..], &a3, &["--charge-norm", "integerized"]].concat());
    assert_eq!(int, "# charge scale: 4\n1 x ([1,0], 1)\n1 x ([0,0], -3)\n");
    let json = ok(&[&["branch"][..], &a3, &["--charge-norm", "integerized", "--format", "json"]].concat());
    let doc = BranchDoc::parse(&json).unwrap();
    assert_eq!(doc.charge_scale, 4);
    assert_eq!(doc.terms[1].charge, "-3");
}

#[test]
fn exit_codes() {
    let code = |args: Vec<String>| {
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        run(&refs).0
    };
    assert_eq!(code(with("branch", B4, &["--hw", "1,x"])), 2);
    assert_eq!(code(with("branch", B4, &["--hw", "1,0,0"])), 2);
    assert_eq!(code(with("branch", B4, &["--hw", "1,0,0,-1"])), 2);
    assert_eq!(code(with("branch", B2, &["--hw", "2,1", "--method", "all"])), 2);
    assert_eq!(code(with("branch", B2, &["--hw", "2,1", "--method", "weyl", "--trace"])), 2);
    assert_eq!(code(with("branch", B2, &[])), 2);
    assert_eq!(code(vec!["branch".into(), "--algebra".into(), "B4".into(), "--sub".into(), "A2xU1".into(), "--hw".into(), "1,0,0,0".into()]), 2);
    assert_eq!(code(vec!["frobnicate".into()]), 2);
    assert_eq!(code(with("branch", B4, &["--hw", "10,10,10,10", "--method", "oracle"])), 3);
    assert_eq!(code(vec!["--help".into()]), 0);
}

#[test]
fn binary_exit_status_and_streams() {
    let bin = env!("CARGO_BIN_EXE_fanbranch");
    let o = Command::new(bin).args(["branch", "--algebra", "B2", "--sub", "A1xU1", "--hw", "1,0"]).output().unwrap();
    assert!(o.status.success());
    assert!(o.stderr.is_empty());
    let bad = Command::new(bin).args(["branch", "--algebra", "B2", "--sub", "A1xU1", "--hw", "q"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(bad.stdout.is_empty());
    assert!(String::from_utf8_lossy(&bad.stderr).starts_with("error:"));
}
