use std::path::PathBuf;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("riordan").chain(args.iter().copied());
    let code = riordan_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn golden(name: &str, args: &[&str]) {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &out).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(out, want, "{name}");
}

const HALF_POWER: &[&str] = &["central", "matrix", "--g", "1", "--f", "(1+x)^(1/2)", "--rows", "7"];

#[test]
fn golden_table() {
    golden("half_power.table", HALF_POWER);
}

#[test]
fn golden_csv() {
    golden("half_power.csv", &[HALF_POWER, &["--format", "csv"]].concat());
}

#[test]
fn golden_json() {
    golden("half_power.json", &[HALF_POWER, &["--format", "json"]].concat());
}

#[test]
fn golden_pair_outputs() {
    golden(
        "from_standard.table",
        &["central", "from-standard", "--u", "1/(1-x-x^2)", "--v", "x/(1-2*x)", "--order", "8"],
    );
    golden("to_standard.csv", &["central", "to-standard", "--g", "1", "--f", "1+x", "--order", "6", "--format", "csv"]);
    golden("moments.json", &["central", "moments", "--s", "0", "--t", "0", "--a", "1", "--b", "1", "--order", "8", "--format", "json"]);
}

#[test]
fn json_schema() {
    let (_, out, _) = run(&[HALF_POWER, &["--format", "json"]].concat());
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["kind"], "triangle");
    assert_eq!(v["rows"][3], serde_json::json!(["-1/16", "3/8", "3/2", "1"]));
    assert_eq!(v["meta"]["command"], "central matrix");
    assert_eq!(v["meta"]["rows"], 7);
    assert_eq!(v["meta"]["inputs"]["f"], "(1+x)^(1/2)");
}

#[test]
fn csv_one_line_per_row() {
    let (_, out, _) = run(&["riordan", "matrix", "--u", "1/(1-x)", "--v", "x/(1-x)", "--rows", "5", "--format", "csv"]);
    assert_eq!(out, "1\n1,1\n1,2,1\n1,3,3,1\n1,4,6,4,1\n");
}

#[test]
fn series_examples() {
    assert_eq!(run(&["series", "1/(1-x)", "--order", "4"]).1, "1  1  1  1  1\n");
    assert_eq!(run(&["series", "C(x)", "--order", "5"]).1, "1  1  2  5  14  42\n");
    assert_eq!(run(&["series", "rev(x/(1-x))", "--order", "3"]).1, "0  1  -1  1\n");
    assert_eq!(run(&["series", "-x", "--order", "2"]).1, "0  -1  0\n");
}

#[test]
fn default_order_and_rows() {
    let (_, out, _) = run(&["series", "1", "--format", "csv"]);
    assert_eq!(out.trim().split(',').count(), 17);
    let (_, out, _) = run(&["central", "matrix", "--g", "1", "--f", "1", "--format", "csv"]);
    assert_eq!(out.lines().count(), 12);
}

#[test]
fn identity_matrix() {
    let (_, out, _) = run(&["central", "matrix", "--g", "1", "--f", "1", "--rows", "3"]);
    assert_eq!(out, "1\n0  1\n0  0  1\n");
}

#[test]
fn identity_round_trip() {
    let (_, out, _) = run(&["central", "to-standard", "--g", "1", "--f", "1", "--order", "3", "--format", "csv"]);
    assert_eq!(out, "u,1,0,0,0\nv,0,1,0,0\n");
    let (_, out, _) = run(&["central", "from-standard", "--u", "1", "--v", "x", "--order", "3", "--format", "csv"]);
    assert_eq!(out, "g,1,0,0,0\nf,1,0,0,0\n");
}

#[test]
fn antecedent_example() {
    let (_, out, _) = run(&["central", "antecedent", "--g", "1", "--f", "1+x", "--order", "4", "--format", "csv"]);
    assert_eq!(out, "u,1,0,0,0,0\nv,0,1,-1,0,0\n");
}

#[test]
fn horizontal_half_of_pascal() {
    let (_, out, _) = run(&["riordan", "halves", "--u", "1/(1-x)", "--v", "x/(1-x)", "--which", "horizontal", "--rows", "7", "--format", "csv"]);
    assert_eq!(out.lines().last().unwrap(), "924,792,495,220,66,12,1");
}

#[test]
fn group_operations() {
    let (_, out, _) = run(&["central", "mul", "--g1", "1", "--f1", "1/(1-x)", "--g2", "1", "--f2", "1+2*x", "--order", "5", "--format", "csv"]);
    // (1 + 2x)^2 / (1 + x) = 1 + 3x + x^2 - x^3 + x^4 - x^5
    assert_eq!(out, "g,1,0,0,0,0,0\nf,1,3,1,-1,1,-1\n");
    let (_, out, _) = run(&["riordan", "inv", "--u", "1/(1-x)", "--v", "x/(1-x)", "--rows", "3", "--format", "csv"]);
    assert_eq!(out, "1\n-1,1\n1,-2,1\n");
    let (_, out, _) = run(&["riordan", "mul", "--u1", "1/(1-x)", "--v1", "x/(1-x)", "--u2", "1/(1+x)", "--v2", "x/(1+x)", "--rows", "4", "--format", "csv"]);
    assert_eq!(out, "1\n0,1\n0,0,1\n0,0,0,1\n");
    let (_, out, _) = run(&["central", "inv", "--g", "1", "--f", "1+x", "--order", "3", "--format", "csv"]);
    // {1, 1 + x} is inverted by {1, 1 - x}
    assert_eq!(out, "g,1,0,0,0\nf,1,-1,0,0\n");
}

#[test]
fn exp_matrix_modes() {
    let (code, out, _) = run(&["exp", "matrix", "--u", "exp(x)", "--v", "x", "--rows", "4", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out, "1\n1,1\n1,2,1\n1,3,3,1\n");
    let (_, out, _) = run(&["exp", "matrix", "--g", "1", "--f", "exp(x)", "--rows", "3", "--format", "csv"]);
    assert_eq!(out, "1\n1,1\n4,4,1\n");
    assert_eq!(run(&["exp", "matrix", "--u", "1", "--g", "1", "--f", "1"]).0, 2);
    assert_eq!(run(&["exp", "matrix", "--rows", "3"]).0, 2);
}

#[test]
fn verify_exit_codes() {
    let ok = run(&["verify", "--lhs", "central:{1,1+x}", "--rhs", "riordan:{1/(1-x),x/(1-x)}"]);
    assert_eq!((ok.0, ok.1.as_str()), (0, "equal\n"));
    let bad = run(&["verify", "--lhs", "central:{1,1+x}", "--rhs", "riordan:{1,x}"]);
    assert_eq!(bad.0, 1);
    assert!(bad.1.contains("(1, 0)"), "{}", bad.1);
    let (code, out, _) = run(&["verify", "--lhs", "central:{1,1+x}", "--rhs", "riordan:{1,x}", "--format", "json"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["rows"][0][0], "false");
    assert_eq!(v["meta"]["mismatch"], serde_json::json!({"n": 1, "k": 0, "lhs": "1", "rhs": "0"}));
    let inv = run(&[
        "verify",
        "--lhs",
        "inv(central:{1+x+x^2,1/(1-x)})",
        "--rhs",
        "central:{1/(2-x-sqrt(1-4*x)),1/C(x)}",
    ]);
    assert_eq!(inv.0, 0, "{}", inv.2);
}

#[test]
fn usage_and_parse_errors_exit_2() {
    let (code, _, err) = run(&["series", "2x"]);
    assert_eq!(code, 2);
    assert!(err.contains("column 2"), "{err}");
    let (code, _, err) = run(&["series", "foo(x)"]);
    assert_eq!(code, 2);
    assert!(err.contains("sqrt, C, exp, log, rev"), "{err}");
    assert_eq!(run(&["verify", "--lhs", "central:1", "--rhs", "central:1,1"]).0, 2);
    assert_eq!(run(&["riordan", "halves", "--u", "1", "--v", "x", "--which", "diagonal"]).0, 2);
    assert_eq!(run(&["central", "moments", "--s", "x", "--t", "0", "--a", "0", "--b", "0"]).0, 2);
    assert_eq!(run(&["nonsense"]).0, 2);
}

#[test]
fn domain_errors_exit_3() {
    assert_eq!(run(&["series", "sqrt(2+x)"]).0, 3);
    assert_eq!(run(&["series", "1/x"]).0, 3);
    assert_eq!(run(&["riordan", "matrix", "--u", "x", "--v", "x"]).0, 3);
    assert_eq!(run(&["central", "matrix", "--g", "1", "--f", "x"]).0, 3);
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify"));
}
