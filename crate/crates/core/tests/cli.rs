use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("sadk").chain(args.iter().copied());
    let code = sadk::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

const EXAMPLE_ONE: [&str; 6] = ["--a", "5,4", "--d", "4,9", "--k", "3"];
const EXAMPLE_TWO: [&str; 8] = ["--a", "2,3", "--d", "2,2", "--k", "3", "--b", "9,11"];

fn with(command: &str, family: &[&str], extra: &[&str]) -> Vec<String> {
    std::iter::once(command).chain(family.iter().copied()).chain(extra.iter().copied()).map(String::from).collect()
}

fn json(command: &str, family: &[&str]) -> Value {
    let argv = with(command, family, &["--format", "json"]);
    let argv: Vec<&str> = argv.iter().map(String::as_str).collect();
    let (code, out, err) = run(&argv);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).expect("valid JSON")
}

#[test]
fn analyze_text_lists_passing_checks() {
    let argv = with("analyze", &EXAMPLE_ONE, &[]);
    let argv: Vec<&str> = argv.iter().map(String::as_str).collect();
    let (code, out, _) = run(&argv);
    assert_eq!(code, 0);
    assert!(out.contains("[PASS]"));
    assert!(!out.contains("[FAIL]"));
    assert!(out.contains("x2^2 - x1*x3"));
}

#[test]
fn analyze_json_has_the_numerator() {
    let v = json("analyze", &EXAMPLE_ONE);
    let terms = v["hilbert"]["numerator_terms"].as_array().unwrap();
    let mut got: Vec<(i64, i64, i64)> = terms
        .iter()
        .map(|t| (t["exponent"][0].as_i64().unwrap(), t["exponent"][1].as_i64().unwrap(), t["coefficient"].as_i64().unwrap()))
        .collect();
    got.sort();
    assert_eq!(got, vec![(0, 0, 1), (18, 26, -1), (22, 35, -1), (26, 44, -1), (31, 48, 1), (35, 57, 1)]);
    assert_eq!(v["flags"]["gorenstein"], Value::Bool(false));
    assert_eq!(v["flags"]["koszul"], Value::Bool(true));
    assert_eq!(v["regularity"], 2);
    assert_eq!(v["cm_type"], 2);
}

#[test]
fn json_round_trips_byte_for_byte() {
    for (command, family) in [("analyze", &EXAMPLE_ONE[..]), ("extend", &EXAMPLE_TWO[..]), ("verify", &EXAMPLE_ONE[..])] {
        let argv = with(command, family, &["--format", "json"]);
        let argv: Vec<&str> = argv.iter().map(String::as_str).collect();
        let (_, out, _) = run(&argv);
        let parsed: Value = serde_json::from_str(&out).unwrap();
        let again = serde_json::to_string_pretty(&parsed).unwrap();
        assert_eq!(out.trim_end(), again, "{command}");
    }
}

#[test]
fn output_is_deterministic() {
    for command in ["analyze", "ideal", "groebner", "hilbert", "resolution", "verify"] {
        let argv = with(command, &EXAMPLE_ONE, &["--format", "json"]);
        let argv: Vec<&str> = argv.iter().map(String::as_str).collect();
        assert_eq!(run(&argv), run(&argv), "{command}");
    }
}

#[test]
fn extend_reports_the_gluing() {
    let v = json("extend", &EXAMPLE_TWO);
    let ext = &v["extension"];
    assert_eq!(ext["mu"], 2);
    assert_eq!(ext["lambda"], serde_json::json!([2, 0, 1, 1]));
    assert_eq!(ext["extra_generator"], "y^2 - x1^2*x3*x4");
    assert_eq!(ext["qf"], serde_json::json!([[3, 4], [5, 6]]));
    assert_eq!(ext["betti"], serde_json::json!([1, 4, 5, 2]));
    assert_eq!(v["flags"]["normal"], Value::Bool(false));
}

#[test]
fn every_subcommand_succeeds_on_the_examples() {
    for command in ["analyze", "ideal", "groebner", "hilbert", "resolution", "verify"] {
        for family in [&EXAMPLE_ONE[..], &EXAMPLE_TWO[..]] {
            let argv = with(command, family, &[]);
            let argv: Vec<&str> = argv.iter().map(String::as_str).collect();
            let (code, out, err) = run(&argv);
            assert_eq!(code, 0, "{command} {family:?}: {out}{err}");
            assert_eq!(code == 0, !out.contains("[FAIL]"));
        }
    }
}

#[test]
fn invalid_input_exits_with_two() {
    let cases: [&[&str]; 6] = [
        &["analyze", "--a", "1,0", "--d", "2,0", "--k", "2"],
        &["analyze", "--a", "-1,0", "--d", "0,1", "--k", "2"],
        &["analyze", "--a", "1,0", "--d", "0,1", "--k", "1"],
        &["analyze", "--a", "1,0", "--d", "0,1"],
        &["extend", "--a", "5,4", "--d", "4,9", "--k", "3"],
        &["frobnicate"],
    ];
    for argv in cases {
        let (code, out, err) = run(argv);
        assert_eq!(code, 2, "{argv:?}: {out}");
        assert!(!err.is_empty(), "{argv:?}");
    }
}

#[test]
fn extension_already_in_the_semigroup_is_rejected() {
    let (code, _, err) = run(&["extend", "--a", "5,4", "--d", "4,9", "--k", "3", "--b", "10,8"]);
    assert_eq!(code, 2);
    assert!(err.contains("AlreadyMember") || err.contains("BadExtension"), "{err}");
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_sadk");
    let ok = Command::new(bin).args(["verify", "--a", "5,4", "--d", "4,9", "--k", "3"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = Command::new(bin).args(["verify", "--a", "1,1", "--d", "2,2", "--k", "3"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let help = Command::new(bin).arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(0));
}
