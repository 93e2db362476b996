use std::process::{Command, Output};

use horadam_core::{HoradamParams, HoradamQuatContext, Quaternion, Rational};
use serde_json::Value;

fn horadam(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_horadam"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn term_prints_fibonacci_quaternions() {
    let base = ["term", "--p", "1", "--q", "1", "--a", "0", "--b", "1"];
    let run = |extra: &[&str]| {
        let args: Vec<&str> = base.iter().chain(extra).copied().collect();
        let out = horadam(&args);
        assert_eq!(out.status.code(), Some(0));
        stdout(&out).trim().to_string()
    };
    assert_eq!(run(&["--n", "0"]), "i+j+2k");
    assert_eq!(run(&["--n", "1"]), "1+i+2j+3k");
    assert_eq!(run(&["--n", "-1", "--scalar"]), "1");
}

#[test]
fn term_output_parses_back() {
    for (p, q, a, b) in [
        ("1", "1", "0", "1"),
        ("2", "-3", "1", "-2"),
        ("1/2", "3/4", "1", "1"),
    ] {
        let params = HoradamParams::new(
            p.parse().unwrap(),
            q.parse().unwrap(),
            a.parse().unwrap(),
            b.parse().unwrap(),
        )
        .unwrap();
        let ctx = HoradamQuatContext::new(params);
        for n in [-5i64, -1, 0, 3, 11] {
            let n_text = n.to_string();
            let out = horadam(&[
                "term", "--p", p, "--q", q, "--a", a, "--b", b, "--n", &n_text,
            ]);
            assert_eq!(out.status.code(), Some(0));
            let text = stdout(&out);
            let parsed: Quaternion<Rational> = text.trim().parse().unwrap();
            assert_eq!(parsed, ctx.qw_term(n), "n = {n}: {text}");
        }
    }
}

#[test]
fn term_rejects_invalid_parameters() {
    for args in [
        ["term", "--q", "0", "--n", "1"],
        ["term", "--p", "2", "--q", "-1"],
        ["term", "--n", "x", "--q", "1"],
    ] {
        assert_eq!(horadam(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn table_rows() {
    let out = horadam(&[
        "table", "--p", "1", "--q", "1", "--a", "0", "--b", "1", "--idx", "0..2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(headers, ["n", "W", "Q", "w", "x", "y", "z"]);
    let rows: Vec<(String, String)> = reader
        .records()
        .map(|r| {
            let r = r.unwrap();
            (r[0].to_string(), r[2].to_string())
        })
        .collect();
    assert_eq!(
        rows,
        [("0", "i+j+2k"), ("1", "1+i+2j+3k"), ("2", "1+2i+3j+5k")]
            .map(|(a, b)| (a.to_string(), b.to_string()))
    );

    let pell = horadam(&[
        "table", "--p", "2", "--q", "1", "--a", "0", "--b", "1", "--idx", "0..0",
    ]);
    assert!(stdout(&pell).contains("0,0,i+2j+5k,0,1,2,5"));
}

#[test]
fn table_with_empty_range_prints_header_only() {
    let out = horadam(&["table", "--idx", "3..1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "n,W,Q,w,x,y,z");
}

#[test]
fn table_json_uses_rational_strings() {
    let out = horadam(&["table", "--q", "-2", "--idx", "-2..0", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["rows"][0]["n"], -2);
    assert_eq!(v["rows"][0]["W"], "-1/4");
    assert_eq!(v["rows"][2]["Q"], serde_json::json!(["0", "1", "1", "-1"]));
}

#[test]
fn verify_cassini_fixture() {
    let out = horadam(&[
        "verify", "--id", "cassini", "--p", "1", "--q", "1", "--a", "0", "--b", "1", "--idx",
        "1..1", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let report = &v["reports"][0];
    assert_eq!(report["identity"], "cassini");
    assert_eq!(report["lhs"], serde_json::json!(["2", "0", "2", "5"]));
    assert_eq!(report["equal"], true);
    assert_eq!(v["summary"]["passed"], 1);
}

#[test]
fn verify_human_output_mentions_lhs() {
    let out = horadam(&[
        "verify", "--id", "cassini", "--p", "1", "--q", "1", "--a", "0", "--b", "1", "--idx",
        "1..1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("lhs=2+2j+5k"), "{text}");
    assert!(text.contains("result: PASS"));
}

#[test]
fn verify_csv_output() {
    let out = horadam(&[
        "verify", "--id", "catalan", "--p", "1", "--q", "2", "--a", "1", "--b", "1", "--idx",
        "0..1", "--format", "csv", "--show", "all",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(
        reader.headers().unwrap().iter().collect::<Vec<_>>(),
        ["identity", "p", "q", "a", "b", "indices", "equal", "lhs", "rhs", "notes"]
    );
    let rows: Vec<_> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| &r[0] == "catalan" && &r[6] == "true"));
    assert!(String::from_utf8_lossy(&out.stderr).contains("summary: passed=4"));
}

#[test]
fn verify_rejects_bad_configs() {
    let zero_q = horadam(&["verify", "--all", "--q", "0..0"]);
    assert_eq!(zero_q.status.code(), Some(2));
    let unknown = horadam(&["verify", "--id", "nope"]);
    assert_eq!(unknown.status.code(), Some(2));
    let backwards = horadam(&["verify", "--idx", "oops"]);
    assert_eq!(backwards.status.code(), Some(2));
    let jobs = horadam(&["verify", "--jobs", "0", "--p", "1", "--q", "1"]);
    assert_eq!(jobs.status.code(), Some(2));
}

#[test]
fn verify_output_is_independent_of_jobs() {
    let run = |jobs: &str| {
        let out = horadam(&[
            "verify", "--all", "--p", "-1..1", "--q", "-1..2", "--a", "0..1", "--b", "-1..0",
            "--idx", "-2..2", "--format", "json", "--show", "all", "--jobs", jobs,
        ]);
        assert_eq!(out.status.code(), Some(0));
        stdout(&out)
    };
    assert_eq!(run("1"), run("3"));
}

#[test]
fn verify_reports_reflection_audit() {
    let out = horadam(&[
        "verify", "--id", "cassini", "--p", "1", "--q", "2", "--idx", "0..0",
    ]);
    let text = stdout(&out);
    assert!(text.contains("reflection audit (p=1, q=2, n=2)"), "{text}");
    assert!(text.contains("-(-q)^n F_n = -4 (DISAGREES)"));
    assert!(text.contains("-(-q)^(-n) F_n = -1/4 (agrees)"));
}

#[test]
fn bench_reports_one_row_per_method_and_n() {
    let out = horadam(&["bench", "--n", "0", "--n", "1024", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<Vec<String>> = csv::Reader::from_reader(text.as_bytes())
        .records()
        .map(|r| r.unwrap().iter().map(String::from).collect())
        .collect();
    let keys: Vec<(&str, &str)> = rows
        .iter()
        .map(|r| (r[0].as_str(), r[1].as_str()))
        .collect();
    assert_eq!(
        keys,
        [
            ("naive", "0"),
            ("fast-doubling", "0"),
            ("naive", "1024"),
            ("fast-doubling", "1024")
        ]
    );
}
