use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn rplie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rplie"))
        .args(args)
        .env_remove("RPLIE_SEED")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = rplie(&full);
    let v = serde_json::from_slice(&out.stdout).expect("valid JSON on stdout");
    (v, out.status.code().unwrap())
}

#[test]
fn check_verdicts_and_exit_codes() {
    let (v, code) = json(&["check", &data("t1r1.txt")]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], true);
    assert_eq!(v["schema"], "rplie-report/1");
    assert_eq!(v["characterizations"]["main"], true);

    let (v, code) = json(&["check", &data("so3.txt")]);
    assert_eq!(code, 1);
    assert_eq!(v["failed"], "c1");
    assert_eq!(v["characterizations"]["biinvariant"], false);

    let (v, code) = json(&["check", &data("aff_c2.txt")]);
    assert_eq!(code, 1);
    assert_eq!(v["failed"], "c2");
    assert_eq!(v["witness"]["alpha"], "[0/1, 1/1, 0/1]");
}

#[test]
fn float_mode() {
    let (v, code) = json(&["--mode", "float", "--eps", "1e-12", "check", &data("t1r1.txt")]);
    assert_eq!(code, 0);
    assert_eq!(v["mode"], "float");
    let out = rplie(&["--mode", "float", "--json", "decompose", &data("t1r1.txt")]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["omega_r"][0][1], "0.3333333333333333");
}

#[test]
fn input_errors_exit_two() {
    let out = rplie(&["check", &data("duplicate.txt")]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 4, column 1: antisymmetric duplicate"), "{err}");

    let out = rplie(&["check", &data("missing.txt")]);
    assert_eq!(out.status.code(), Some(2));

    let out = rplie(&["catalog", "show", "T10.R1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = rplie(&["check"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn levi_civita_of_so3() {
    // Bi-invariant metric: A(e1, e2) = ½ [e1, e2] = ½ e3.
    let (v, code) = json(&["levi-civita", &data("so3.txt")]);
    assert_eq!(code, 0);
    assert_eq!(v["product"][0][1], serde_json::json!(["0/1", "0/1", "1/2"]));
    assert_eq!(v["flat"], false);
}

#[test]
fn flat_kahler() {
    let (v, code) = json(&["flat-kahler", &data("flat4.txt")]);
    assert_eq!(code, 0);
    assert_eq!(v["kahler"], true);
    assert_eq!(v["milnor_flat"], true);
    let (v, code) = json(&["flat-kahler", &data("heis4.txt")]);
    assert_eq!(code, 1);
    assert_eq!(v["flat"], false);
    assert_eq!(v["milnor_flat"], false);
}

#[test]
fn sl2_classify() {
    let (v, code) = json(&["sl2", "classify", &data("sl2_gx.txt")]);
    assert_eq!(code, 0);
    assert_eq!(v["class"], "Gx");
    assert_eq!(v["x"], "3/1");
    let (v, code) = json(&["sl2", "classify", &data("sl2_none.txt")]);
    assert_eq!(code, 1);
    assert_eq!(v["subalgebra"], false);
}

#[test]
fn construct_assembles_document() {
    let (v, code) = json(&["construct", &data("extension.txt")]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], true);
    let doc = rplie::io::parse(v["document"].as_str().unwrap()).unwrap();
    let (g, r, rho) = doc.triple::<rplie::Rational>().unwrap();
    assert!(rplie::rpcheck::is_riemann_poisson(&g, &r, &rho).unwrap().verdict);

    let (v, code) = json(&["construct", &data("extension_bad.txt")]);
    assert_eq!(code, 1);
    assert_eq!(v["holds"], false);
    assert_eq!(v["equations"][3], false);
}

#[test]
fn catalog_verify_is_deterministic() {
    let args = ["--json", "catalog", "verify", "--table", "2", "--samples", "4"];
    let a = rplie(&args);
    let b = rplie(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["seed"], 0);
    assert_eq!(v["families"].as_array().unwrap().len(), 8);
}

#[test]
fn seed_from_environment() {
    let run = |env: Option<&str>, extra: &[&str]| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_rplie"));
        c.args(["--json", "catalog", "verify", "--table", "1", "--row", "1", "--samples", "3"]).args(extra);
        match env {
            Some(s) => c.env("RPLIE_SEED", s),
            None => c.env_remove("RPLIE_SEED"),
        };
        let out = c.output().unwrap();
        serde_json::from_slice::<Value>(&out.stdout).unwrap()
    };
    let base = run(None, &[]);
    let env = run(Some("11"), &[]);
    let flag = run(Some("5"), &["--seed", "11"]);
    assert_eq!(env["seed"], 11);
    assert_eq!(env, flag);
    assert_ne!(base["families"][0]["samples"], env["families"][0]["samples"]);
}

#[test]
fn catalog_discrepancies_listed() {
    let out = rplie(&["catalog", "verify", "--table", "9", "--samples", "2"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("discrepancies:"));
    assert!(text.contains("T9.R1 (corrected)"));
    assert_eq!(out.status.code(), Some(0), "{text}");
}

#[test]
fn catalog_show() {
    let out = rplie(&["catalog", "show", "T3.R5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("T3.R5 (corrected)"));
    assert!(text.contains("E12 - E21"));
}
