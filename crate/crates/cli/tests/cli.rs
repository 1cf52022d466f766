use assert_cmd::Command;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::cargo_bin("monodromy").unwrap().env_remove("MONODROMY_FORMAT").args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let (code, out, err) = run(&full);
    assert_eq!(code, 0, "{err}");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema_version"], 1);
    v["result"].clone()
}

#[test]
fn e6_fundamental_dimension() {
    let (code, out, _) = run(&["rep", "dim", "--rs", "E6", "--weight", "1,0,0,0,0,0"]);
    assert_eq!((code, out.trim()), (0, "27"));
    assert_eq!(json(&["rep", "dim", "--rs", "E6", "--weight", "1,0,0,0,0,0"]), "27");
}

#[test]
fn e6_table_lists_ten_families() {
    let t = json(&["paper", "e6-table"]);
    assert_eq!(t["families"].as_array().unwrap().len(), 10);
    assert_eq!(t["weights"].as_array().unwrap().len(), 15);
    let (_, text, _) = run(&["paper", "e6-table"]);
    assert!(text.contains("(a,0,0,0,0,0) with a ≤ 5"));
    assert!(text.contains("(0,0,b,0,0,0) with b ≤ 2"));
}

#[test]
fn beispi_analysis_ends_in_sl2() {
    let (code, out, _) = run(&["bundle", "analyze", "--spec", "example-beispi", "--p", "3", "--q", "1", "--trivial-mod-pq"]);
    assert_eq!(code, 0);
    assert!(out.trim_end().ends_with("G = SL(2)"), "{out}");
    let r = json(&["paper", "beispi"]);
    assert_eq!(r["quoted_degree"], "d > 7");
    assert_eq!(r["report"]["restriction"]["a_min"], "7");
    assert_eq!(r["report"]["invariants"]["discriminant"], "12");
}

#[test]
fn usage_errors_exit_two_and_name_the_token() {
    let (code, _, err) = run(&["rep", "dim", "--rs", "E6", "--weight", "1,zz"]);
    assert_eq!(code, 2);
    assert!(err.contains("zz"), "{err}");
    assert_eq!(run(&["rep", "nonsense"]).0, 2);
    let (code, _, err) = run(&["padic", "eigbound", "--p", "3", "--matrix", "[[\"1\",\"q\"]]"]);
    assert_eq!(code, 2);
    assert!(err.contains("\"q\""), "{err}");
    assert_eq!(run(&["rootsys", "cartan", "--rs", "Q7"]).0, 2);
}

#[test]
fn domain_errors_exit_one() {
    assert_eq!(run(&["rep", "dim", "--rs", "A2", "--weight", "1,0,0"]).0, 1);
    assert_eq!(run(&["padic", "vp", "--p", "4", "3"]).0, 1);
    assert_eq!(run(&["rep", "conjecture", "--rs", "A2", "--weight", "1,0", "--mu", "0,0"]).0, 1);
    assert_eq!(run(&["bundle", "bs-stable", "--spec", "example-beispi"]).0, 1);
}

#[test]
fn json_is_deterministic() {
    let args = ["--format", "json", "rep", "tensor", "--rs", "B2", "--left", "1,1", "--right", "0,2"];
    assert_eq!(run(&args).1, run(&args).1);
    let args = ["--format", "json", "paper", "invar-sweep", "--max-rank", "2"];
    assert_eq!(run(&args).1, run(&args).1);
}

#[test]
fn format_defaults_from_environment() {
    let out = Command::cargo_bin("monodromy")
        .unwrap()
        .env("MONODROMY_FORMAT", "json")
        .args(["rootsys", "pi0", "--rs", "D4"])
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["command"], "rootsys pi0");
    assert_eq!(v["result"]["order"], 4);
}

#[test]
fn rootsys_commands() {
    assert_eq!(json(&["rootsys", "cartan", "--rs", "B2"]), serde_json::json!([[2, -2], [-1, 2]]));
    assert_eq!(json(&["rootsys", "posroots", "--rs", "G2"]).as_array().unwrap().len(), 6);
    let d = json(&["rootsys", "dual", "--rs", "A3", "--weight", "1,0,0"]);
    assert_eq!(d["dual"], serde_json::json!([0, 0, 1]));
    assert_eq!(d["self_dual"], false);
}

#[test]
fn rep_commands() {
    let t = json(&["rep", "tensor", "--rs", "A2", "--left", "1,0", "--right", "1,0"]);
    assert_eq!(t["dimension"], "9");
    let o = json(&["rep", "tensor", "--rs", "A2", "--left", "1,0", "--right", "1,0", "--oracle"]);
    assert_eq!(t, o);
    assert_eq!(json(&["rep", "contains", "--rs", "A2", "--weight", "1,0", "--n", "2", "--mu", "0,1"]), 1);
    assert_eq!(json(&["rep", "invariants", "--rs", "A1", "--weight", "1", "--weight", "1"]), 1);
    let m = json(&["rep", "min-inv-power", "--rs", "A2", "--weight", "1,0"]);
    assert_eq!(m["found"], serde_json::json!([3, 1]));
    let s = json(&["rep", "selfdual-search", "--rs", "D5", "--weight", "0,0,0,1,0"]);
    assert_eq!(s["found"], serde_json::json!([2, [0, 0, 1, 0, 0]]));
    let g = json(&["rep", "verify-gewicht", "--rs", "G2", "--weight", "1,1"]);
    assert_eq!(g["all_hold"], true);
    let k = json(&["rep", "verify-kompo", "--rs", "A2", "--weight", "2,0", "--node", "1"]);
    assert_eq!(k["nodes"][0]["holds"], true);
    assert_eq!(run(&["rep", "verify-kompo", "--rs", "A2", "--weight", "2,0", "--node", "0"]).0, 2);
    let e = json(&["rep", "enumerate", "--rs", "A2", "--bound", "3", "--non-self-dual"]);
    assert_eq!(e, serde_json::json!([[0, 1], [1, 0]]));
    let m = json(&["rep", "mults", "--rs", "A1", "--weight", "2", "--all"]);
    assert_eq!(m.as_array().unwrap().len(), 3);
    let c = json(&["rep", "conjecture", "--rs", "A2", "--weight", "2,0", "--mu", "0,1"]);
    assert_eq!(c["n_found"], 4);
    assert_eq!(c["holds"], false);
}

#[test]
fn padic_commands() {
    assert_eq!(json(&["padic", "vp", "--p", "3", "18/5"])["value"], "2");
    assert_eq!(json(&["padic", "vp", "--p", "3", "0"])["value"], "inf");
    // (X − 3)(X − 1/2) = X² − 7/2·X + 3/2
    assert_eq!(json(&["padic", "newton", "--p", "3", "--coeffs", "3/2,-7/2,1"]), serde_json::json!(["0", "1"]));
    assert_eq!(json(&["padic", "cyclotomic", "--p", "5"])["value"], "1/4");
    assert_eq!(json(&["padic", "eigbound", "--p", "3", "--matrix", "[[3,0],[0,9]]"])["value"], "1");
    let fail = json(&["padic", "certify", "--p", "3", "--q", "1/2", "--generator", "[[1,3],[0,1]]"]);
    assert_eq!(fail["passed"], false);
    let pass = json(&["padic", "certify", "--p", "3", "--q", "1", "--generator", "[[1,3],[0,1]]"]);
    assert_eq!(pass["passed"], true);
    let l = json(&["padic", "larsen", "--rank", "3", "--dim-endend", "2"]);
    assert_eq!(l["value"], "sl_or_finite");
    assert_eq!(json(&["padic", "almost-simple", "--r", "4", "--dim-inv", "3"])["value"], "almost_simple");
    assert_eq!(json(&["padic", "growth", "--p", "2", "--sizes", "2,8,32,128,512"])["k"], 2);
}

#[test]
fn bundle_commands() {
    let spec = r#"{"n":2,"form":"cokernel","a":[-3],"b":[-1,-1,-1]}"#;
    assert_eq!(json(&["bundle", "chern", "--spec", spec])["coefficients"], serde_json::json!(["1", "0", "3"]));
    assert_eq!(json(&["bundle", "invariants", "--spec", "example-beispi"])["c2"], "3");
    assert_eq!(json(&["bundle", "bs-stable", "--spec", spec])["outcome"], "stable");
    assert_eq!(json(&["bundle", "bs-stable", "--spec", "example-beispi", "--dualize"])["outcome"], "stable");
    assert_eq!(json(&["bundle", "langer", "--spec", "example-beispi"])["bound"], "13/2");
    let v = json(&["bundle", "vanishing", "--spec", spec, "--power", "1", "--twist", "0"]);
    assert_eq!(v["vanishes"], true);
}

#[test]
fn sweeps_report_partial_progress() {
    let s = json(&["paper", "invar-sweep", "--max-seconds", "0"]);
    assert_eq!(s["complete"], false);
    let (code, out, _) = run(&["paper", "conjecture-sweep", "--rs", "A1", "--max-label", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("complete"), "{out}");
    let d = json(&["paper", "dl-exclusion"]);
    assert_eq!(d["items"].as_array().unwrap().len(), 16);
}
