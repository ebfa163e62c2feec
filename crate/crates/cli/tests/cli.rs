use std::process::{Command, Output};

use curvezeta_cli::{EXIT_DOMAIN, EXIT_SUCCESS, EXIT_USAGE, EXIT_VERIFICATION, SAFE_INTEGER};
use serde_json::Value;

const KLEIN: &str = "x^3*y+y^3*z+z^3*x";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_curvezeta"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn status(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("UTF-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("UTF-8")
}

fn json(args: &[&str]) -> (i32, String, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(&full);
    let text = stdout(&out);
    let value = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}"));
    (out.status.code().unwrap(), text, value)
}

fn codes(v: &Value) -> Vec<String> {
    v["diagnostics"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d["code"].as_str().unwrap().to_string())
        .collect()
}

const EVERY_COMMAND: &[&[&str]] = &[
    &["bootstrap", "--q", "2", "--counts", "3,5,24", "--k", "60"],
    &[
        "bootstrap",
        "--q",
        "2",
        "--counts",
        "3,5,24,17,33,38",
        "--k",
        "10",
        "--basic",
        "--genus",
        "3",
    ],
    &["bootstrap", "--q", "3", "--counts", "2,5", "--k", "4"],
    &["zeta", "--q", "5", "--counts", "6,26,126"],
    &["count", "--p", "2", "--curve", KLEIN, "--r", "1..3"],
    &[
        "verify",
        "--p",
        "3",
        "--curve",
        KLEIN,
        "--genus",
        "3",
        "--k",
        "8",
        "--check-upto",
        "5",
    ],
    &["ec-survey", "--p", "3", "--k", "40"],
    &["deuring", "--q", "8"],
    &["serre", "--q", "11", "--g", "3"],
    &["hws", "--q", "1099511627776", "--g", "3"],
    &[
        "subseq", "--q", "2", "--counts", "3,5,24", "--s", "2", "--k", "5",
    ],
];

#[test]
fn json_round_trips_byte_for_byte() {
    for args in EVERY_COMMAND {
        let (_, text, value) = json(args);
        let again = serde_json::to_string_pretty(&value).unwrap() + "\n";
        assert_eq!(again, text, "{args:?}");
        let keys: Vec<&str> = value
            .as_object()
            .unwrap()
            .keys()
            .map(|k| k.as_str())
            .collect();
        assert_eq!(keys, ["command", "inputs", "result", "diagnostics"]);
        assert_eq!(value["command"], args[0]);
    }
}

fn assert_no_floats(v: &Value) {
    match v {
        Value::Number(n) => {
            assert!(n.is_i64() || n.is_u64(), "float {n}");
            let mag = n.as_i64().map(|x| x.unsigned_abs()).or(n.as_u64()).unwrap();
            assert!(mag <= SAFE_INTEGER, "{n} should be a string");
        }
        Value::Array(a) => a.iter().for_each(assert_no_floats),
        Value::Object(o) => o.values().for_each(assert_no_floats),
        _ => {}
    }
}

#[test]
fn numbers_are_safe_integers_or_strings() {
    for args in EVERY_COMMAND {
        assert_no_floats(&json(args).2);
    }
    let (_, _, v) = json(EVERY_COMMAND[0]);
    let counts = v["result"]["sequence"]["counts"].as_array().unwrap();
    assert_eq!(counts[11], 4238);
    assert!(counts[59].is_string());
    let n60: u128 = counts[59].as_str().unwrap().parse().unwrap();
    assert!(n60 > SAFE_INTEGER as u128);

    let (_, _, v) = json(&["hws", "--q", "1152921504606846976", "--g", "3"]);
    assert_eq!(v["result"]["bound"], "1152921511049297921");
    assert_eq!(v["result"]["m"], 2147483648u64);
    let (_, _, v) = json(&["hws", "--q", "4398046511104", "--g", "3"]);
    assert_eq!(v["result"]["m"], 4194304);
}

#[test]
fn rationals_render_as_fractions() {
    let (code, _, v) = json(&["bootstrap", "--q", "3", "--counts", "2,5", "--k", "4"]);
    assert_eq!(code, EXIT_SUCCESS);
    assert_eq!(v["result"]["numerator"]["coeffs"][2], "-1/2");
    assert_eq!(v["result"]["integral"], false);
    assert!(codes(&v).contains(&"NONINTEGRAL_C".to_string()));
}

#[test]
fn results_on_stdout_diagnostics_on_stderr() {
    let out = run(&["bootstrap", "--q", "3", "--counts", "2,5", "--k", "4"]);
    assert!(stderr(&out).contains("warning[NONINTEGRAL_C]"));
    assert!(!stdout(&out).contains("NONINTEGRAL_C"));
    assert!(stdout(&out).contains("P(T) = 1 - 2T - (1/2)T^2 - 6T^3 + 9T^4"));

    let quiet = run(&[
        "--quiet",
        "bootstrap",
        "--q",
        "3",
        "--counts",
        "2,5",
        "--k",
        "4",
    ]);
    assert_eq!(stderr(&quiet), "");
    assert_eq!(stdout(&quiet), stdout(&out));
}

#[test]
fn spec_examples() {
    let out = stdout(&run(&[
        "bootstrap",
        "--q",
        "2",
        "--counts",
        "3,5,24",
        "--k",
        "12",
    ]));
    assert!(out.trim_end().ends_with("12  4238"), "{out}");
    let out = stdout(&run(&[
        "count", "--p", "2", "--curve", KLEIN, "--r", "1..3",
    ]));
    assert!(out.contains("1    3\n2    5\n3   24\n"), "{out}");
    let out = stdout(&run(&["deuring", "--q", "7"]));
    assert!(
        out.contains("cardinalities: [3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13]"),
        "{out}"
    );

    let (_, _, v) = json(&["ec-survey", "--p", "2", "--k", "10"]);
    let row4 = v["result"]["rows"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["n1"] == 4)
        .unwrap();
    let values: Vec<u64> = row4["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect();
    assert_eq!(values, [4, 8, 4, 16, 44, 56, 116, 288, 508, 968]);
}

#[test]
fn single_degree_range() {
    let (code, _, v) = json(&["count", "--p", "5", "--curve", KLEIN, "--r", "4"]);
    assert_eq!(code, EXIT_SUCCESS);
    assert_eq!(v["result"]["counts"][0]["count"], 626);
    assert_eq!(v["result"]["counts"].as_array().unwrap().len(), 1);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(status(&[]), EXIT_USAGE);
    assert_eq!(status(&["bootstrap", "--q", "2", "--k", "3"]), EXIT_USAGE);
    assert_eq!(
        status(&["bootstrap", "--q", "2", "--counts", "3,x", "--k", "3"]),
        EXIT_USAGE
    );
    assert_eq!(
        status(&["count", "--p", "2", "--curve", KLEIN, "--r", "3..1"]),
        EXIT_USAGE
    );
    assert_eq!(
        status(&["count", "--p", "2", "--curve", "x^3*y+", "--r", "1"]),
        EXIT_USAGE
    );
    assert_eq!(
        status(&["count", "--p", "2", "--curve", "2x", "--r", "1"]),
        EXIT_USAGE
    );
    assert_eq!(status(&["frobnicate"]), EXIT_USAGE);
}

#[test]
fn help_and_version_exit_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(EXIT_SUCCESS));
    assert!(stdout(&out).contains("expr    :="));
    assert_eq!(status(&["--version"]), EXIT_SUCCESS);
    assert_eq!(status(&["verify", "--help"]), EXIT_SUCCESS);
}

#[test]
fn domain_errors_exit_two() {
    assert_eq!(
        status(&["bootstrap", "--q", "6", "--counts", "3", "--k", "3"]),
        EXIT_DOMAIN
    );
    assert_eq!(
        status(&[
            "bootstrap",
            "--q",
            "2",
            "--counts",
            "3,5",
            "--k",
            "3",
            "--genus",
            "3"
        ]),
        EXIT_DOMAIN
    );
    assert_eq!(
        status(&[
            "bootstrap",
            "--q",
            "2",
            "--counts",
            "3,5,24",
            "--k",
            "3",
            "--basic"
        ]),
        EXIT_DOMAIN
    );
    assert_eq!(
        status(&["bootstrap", "--q", "2", "--counts", "3", "--k", "0"]),
        EXIT_DOMAIN
    );
    assert_eq!(status(&["serre", "--q", "2", "--g", "4"]), EXIT_DOMAIN);
    assert_eq!(
        status(&["count", "--p", "4", "--curve", KLEIN, "--r", "1"]),
        EXIT_DOMAIN
    );
    assert_eq!(
        status(&["count", "--p", "2", "--curve", "x^2+y^3", "--r", "1"]),
        EXIT_DOMAIN
    );
    assert_eq!(
        status(&["count", "--p", "3", "--curve", "3*x^2", "--r", "1"]),
        EXIT_DOMAIN
    );

    let (code, _, v) = json(&[
        "--budget", "1000", "count", "--p", "2", "--curve", KLEIN, "--r", "1..6",
    ]);
    assert_eq!(code, EXIT_DOMAIN);
    assert_eq!(v["result"], Value::Null);
    assert_eq!(codes(&v), ["BUDGET_EXCEEDED"]);
    assert_eq!(v["diagnostics"][0]["level"], "error");
}

#[test]
fn verify_caps_default_horizon_at_budget() {
    let args = [
        "--budget", "1000000", "verify", "--p", "5", "--curve", KLEIN, "--genus", "3", "--k", "9",
    ];
    let (code, _, v) = json(&args);
    assert_eq!(code, EXIT_SUCCESS);
    assert_eq!(v["result"]["checked_upto"], 4);
    assert_eq!(codes(&v), ["BUDGET_LIMITED"]);
    assert_eq!(v["result"]["sequence"]["counts"][8], 1953126);

    let explicit = [
        "--budget",
        "1000000",
        "verify",
        "--p",
        "5",
        "--curve",
        KLEIN,
        "--genus",
        "3",
        "--k",
        "9",
        "--check-upto",
        "6",
    ];
    assert_eq!(status(&explicit), EXIT_DOMAIN);
}

#[test]
fn verification_failures_exit_three() {
    let wrong_genus = [
        "verify",
        "--p",
        "3",
        "--curve",
        KLEIN,
        "--genus",
        "2",
        "--k",
        "6",
        "--check-upto",
        "5",
    ];
    let (code, _, v) = json(&wrong_genus);
    assert_eq!(code, EXIT_VERIFICATION);
    assert_eq!(v["result"]["agree"], false);
    assert_eq!(codes(&v), ["GENUS_MISMATCH", "ORACLE_MISMATCH"]);

    let impossible = ["bootstrap", "--q", "2", "--counts", "3,-5,24", "--k", "4"];
    assert_eq!(status(&impossible), EXIT_SUCCESS);
    let mut strict = impossible.to_vec();
    strict.push("--strict");
    assert_eq!(status(&strict), EXIT_VERIFICATION);
    assert_eq!(
        status(&[
            "bootstrap",
            "--q",
            "3",
            "--counts",
            "2,5",
            "--k",
            "4",
            "--strict"
        ]),
        EXIT_VERIFICATION
    );
}

#[test]
fn verify_flags_singular_curves() {
    // A nodal cubic: the bootstrap premise fails and so does the check.
    let (code, _, v) = json(&[
        "verify",
        "--p",
        "5",
        "--curve",
        "y^2*z - x^3 - x^2*z",
        "--genus",
        "1",
        "--k",
        "4",
    ]);
    assert!(codes(&v).contains(&"SINGULAR_POINT".to_string()));
    assert_eq!(
        code,
        if v["result"]["agree"] == true {
            EXIT_SUCCESS
        } else {
            EXIT_VERIFICATION
        }
    );
}

#[test]
fn negative_counts_parse() {
    let (code, _, v) = json(&["zeta", "--q", "2", "--counts", "-1"]);
    assert_eq!(code, EXIT_SUCCESS);
    assert_eq!(v["inputs"]["counts"][0], -1);
    assert!(codes(&v).contains(&"NEGATIVE_COUNT".to_string()));
}

#[test]
fn survey_marks_maxima_and_gaps() {
    let out = stdout(&run(&["ec-survey", "--p", "2", "--k", "11"]));
    assert!(out.contains("2139!"), "{out}");
    assert!(out
        .lines()
        .any(|l| l.trim_start().starts_with("1 ") && l.contains("5*")));
    let (_, _, v) = json(&["ec-survey", "--p", "2", "--k", "11"]);
    assert_eq!(codes(&v), ["SERRE_TABLE_MISMATCH"]);
    let col7 = &v["result"]["columns"][6];
    assert_eq!(col7["max"], 150);
    assert_eq!(col7["hws"], 151);
    assert_eq!(col7["maximal_rows"], Value::Array(vec![]));
    assert_eq!(col7["best_rows"], serde_json::json!([5]));
}
