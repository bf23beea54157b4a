//! JSON reports.
//!
//! Objects are emitted with sorted keys, scalars as strings (`p/q` over the
//! rationals, shortest round-trip decimals over floats), and a `schema`
//! field naming the format version.

use serde_json::{json, Map, Value};

use crate::algebra::LieAlgebra;
use crate::catalog::FamilyReport;
use crate::connection::Product;
use crate::construct::EqproReport;
use crate::linalg::Matrix;
use crate::rpcheck::{Decomposition, Failure, RPReport};
use crate::scalar::Scalar;
use crate::sl2::Sl2Class;

pub const SCHEMA: &str = "rplie-report/1";

fn scalar<F: Scalar>(x: &F) -> Value {
    Value::String(x.to_report())
}

fn vector<F: Scalar>(v: &[F]) -> Value {
    Value::Array(v.iter().map(scalar).collect())
}

fn vector_text<F: Scalar>(v: &[F]) -> String {
    let parts: Vec<String> = v.iter().map(Scalar::to_report).collect();
    format!("[{}]", parts.join(", "))
}

fn matrix<F: Scalar>(m: &Matrix<F>) -> Value {
    Value::Array(m.to_rows().iter().map(|r| vector(r)).collect())
}

fn envelope<F: Scalar>(kind: &str) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("kind".into(), json!(kind));
    m.insert("mode".into(), json!(F::MODE.to_string()));
    m
}

/// Pretty-printed JSON followed by a newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn failure_name(condition: &str) -> &str {
    if condition == "yang_baxter" {
        "c1"
    } else {
        condition
    }
}

fn witness<F: Scalar>(f: &Failure<F>) -> Value {
    let mut w = Map::new();
    if let Some(v) = &f.vector {
        w.insert("alpha".into(), json!(vector_text(v)));
    }
    w.insert("indices".into(), json!(f.indices.iter().map(|i| i + 1).collect::<Vec<_>>()));
    w.insert("residual".into(), scalar(&f.residual));
    Value::Object(w)
}

pub fn rp_report<F: Scalar>(r: &RPReport<F>) -> Value {
    let mut m = envelope::<F>("check");
    m.insert("dim".into(), json!(r.dim));
    m.insert("rank".into(), json!(r.rank));
    m.insert("verdict".into(), json!(r.verdict));
    m.insert("conclusive".into(), json!(r.conclusive));
    m.insert(
        "characterizations".into(),
        json!({
            "direct": r.direct.holds(),
            "c": r.c.holds(),
            "main": r.main.as_ref().map(|x| x.holds()),
            "biinvariant": r.biinvariant,
        }),
    );
    m.insert(
        "conditions".into(),
        json!({
            "yang_baxter": r.direct.yang_baxter,
            "ii": r.direct.skew,
            "c1": r.c.c1,
            "c2": r.c.c2,
            "c3": r.c.c3,
            "kahler_sub": r.main.as_ref().map(|x| x.kahler_sub),
            "perp_skew": r.main.as_ref().map(|x| x.perp_skew),
            "s_perp_sp": r.main.as_ref().map(|x| x.s_perp_sp),
            "symplectic_subalgebra": r.symplectic.is_subalgebra,
            "delta_omega_zero": r.symplectic.delta_omega_zero,
        }),
    );
    let failure = r.c.failure.as_ref().or(r.failure());
    m.insert("failed".into(), json!(failure.map(|f| failure_name(f.condition))));
    m.insert("witness".into(), failure.map_or(Value::Null, witness));
    Value::Object(m)
}

pub fn decomposition_report<F: Scalar>(d: &Decomposition<F>) -> Value {
    let mut m = envelope::<F>("decompose");
    let basis = |b: &[Vec<F>]| Value::Array(b.iter().map(|v| vector(v)).collect());
    m.insert("rank".into(), json!(d.rank()));
    m.insert("i_basis".into(), basis(&d.i_basis));
    m.insert("iperp_basis".into(), basis(&d.iperp_basis));
    m.insert("s_basis".into(), basis(&d.s_basis));
    m.insert("sperp_basis".into(), basis(&d.sperp_basis));
    m.insert("omega_r".into(), matrix(&d.omega_r));
    m.insert("j".into(), matrix(&d.j));
    Value::Object(m)
}

pub fn levi_civita_report<F: Scalar>(
    g: &LieAlgebra<F>,
    a: &Product<F>,
    torsion_free: bool,
    metric: bool,
    flat: bool,
) -> Value {
    let n = g.dim();
    let mut m = envelope::<F>("levi-civita");
    let table: Vec<Value> = (0..n)
        .map(|i| Value::Array((0..n).map(|j| vector(&a.basis_product(i, j))).collect()))
        .collect();
    m.insert("product".into(), Value::Array(table));
    m.insert("torsion_free".into(), json!(torsion_free));
    m.insert("metric".into(), json!(metric));
    m.insert("flat".into(), json!(flat));
    Value::Object(m)
}

pub fn flat_kahler_report<F: Scalar>(flat: bool, milnor: bool, omega: Option<&Matrix<F>>, kahler: bool, error: Option<String>) -> Value {
    let mut m = envelope::<F>("flat-kahler");
    m.insert("flat".into(), json!(flat));
    m.insert("milnor_flat".into(), json!(milnor));
    m.insert("omega".into(), omega.map_or(Value::Null, matrix));
    m.insert("kahler".into(), json!(kahler));
    m.insert("error".into(), json!(error));
    Value::Object(m)
}

pub fn sl2_report<F: Scalar>(class: &Sl2Class<F>) -> Value {
    let mut m = envelope::<F>("sl2-classify");
    let (name, x) = match class {
        Sl2Class::G1 => ("G1", None),
        Sl2Class::G2 => ("G2", None),
        Sl2Class::Gx(x) => ("Gx", Some(scalar(x))),
        Sl2Class::NotSubalgebra => ("none", None),
    };
    m.insert("subalgebra".into(), json!(!matches!(class, Sl2Class::NotSubalgebra)));
    m.insert("class".into(), json!(name));
    m.insert("x".into(), x.unwrap_or(Value::Null));
    Value::Object(m)
}

/// `rp` is present when the data satisfied the equations and was assembled.
pub fn construct_report<F: Scalar>(e: &EqproReport<F>, assembled: Option<(&str, &RPReport<F>)>) -> Value {
    let mut m = envelope::<F>("construct");
    m.insert("h_is_lie".into(), json!(e.h_is_lie));
    m.insert("equations".into(), json!(e.equations));
    let failures: Vec<Value> = e
        .failures
        .iter()
        .map(|f| {
            json!({
                "equation": f.equation,
                "indices": f.indices.iter().map(|i| i + 1).collect::<Vec<_>>(),
                "residual": vector(&f.residual),
            })
        })
        .collect();
    m.insert("failures".into(), Value::Array(failures));
    m.insert("holds".into(), json!(e.holds()));
    match assembled {
        Some((doc, rp)) => {
            m.insert("document".into(), json!(doc));
            m.insert("verdict".into(), json!(rp.verdict));
        }
        None => {
            m.insert("document".into(), Value::Null);
            m.insert("verdict".into(), json!(false));
        }
    }
    Value::Object(m)
}

pub fn catalog_report(reports: &[FamilyReport], samples: usize, seed: u64) -> Value {
    let mut m = Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("kind".into(), json!("catalog-verify"));
    m.insert("mode".into(), json!("rational"));
    m.insert("samples".into(), json!(samples));
    m.insert("seed".into(), json!(seed));
    let fams: Vec<Value> = reports
        .iter()
        .map(|r| {
            let samples: Vec<Value> = r
                .samples
                .iter()
                .map(|s| {
                    let a: Map<String, Value> = s
                        .assignment
                        .iter()
                        .map(|(k, v)| (k.clone(), json!(v.to_report())))
                        .collect();
                    json!({"assignment": a, "passed": s.passed, "failure": s.failure})
                })
                .collect();
            json!({
                "id": r.id,
                "label": r.label,
                "corrected": r.corrected,
                "partial": r.partial,
                "passed": r.passed(),
                "total": r.total(),
                "failure": r.main_failure(),
                "samples": samples,
            })
        })
        .collect();
    m.insert("all_passed".into(), json!(reports.iter().all(FamilyReport::all_passed)));
    m.insert("families".into(), Value::Array(fams));
    Value::Object(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Bivector, Metric};
    use crate::rpcheck::is_riemann_poisson;
    use crate::scalar::{Approx, Rational};

    #[test]
    fn passing_report_schema() {
        let g = LieAlgebra::<Rational>::abelian(2);
        let r = Bivector::from_terms(2, &[(0, 1, Rational::from_i64(1))]).unwrap();
        let v = rp_report(&is_riemann_poisson(&g, &r, &Metric::identity(2)).unwrap());
        assert_eq!(v["schema"], "rplie-report/1");
        assert_eq!(v["verdict"], true);
        assert_eq!(v["characterizations"]["direct"], true);
        assert_eq!(v["characterizations"]["c"], true);
        assert_eq!(v["characterizations"]["main"], true);
        assert_eq!(v["failed"], Value::Null);
    }

    #[test]
    fn c2_failure_witness() {
        // aff(ℝ) ⊕ ℝ with r = e1 ∧ e3: [r,r] = 0 but c2 fails.
        let g = LieAlgebra::<Rational>::from_int_brackets(3, &[(1, 2, &[(2, 1)])]);
        let r = Bivector::from_terms(3, &[(0, 2, Rational::from_i64(1))]).unwrap();
        let v = rp_report(&is_riemann_poisson(&g, &r, &Metric::identity(3)).unwrap());
        assert_eq!(v["verdict"], false);
        assert_eq!(v["failed"], "c2");
        assert_eq!(v["witness"]["alpha"], "[0/1, 1/1, 0/1]");
        assert_eq!(v["witness"]["residual"], "-1/1");
    }

    #[test]
    fn so3_fails_at_c1() {
        let g = crate::random::so3();
        let r = Bivector::from_terms(3, &[(0, 1, Rational::from_i64(1))]).unwrap();
        let v = rp_report(&is_riemann_poisson(&g, &r, &Metric::identity(3)).unwrap());
        assert_eq!(v["failed"], "c1");
        assert!(v["witness"]["residual"].is_string());
    }

    #[test]
    fn float_scalars_are_decimals() {
        let g = crate::io::convert_algebra::<Approx>(&crate::random::so3());
        let r = Bivector::from_terms(3, &[(0, 1, Approx(0.5))]).unwrap();
        let v = rp_report(&is_riemann_poisson(&g, &r, &Metric::identity(3)).unwrap());
        assert_eq!(v["mode"], "float");
        let res = v["witness"]["residual"].as_str().unwrap();
        assert!(res.parse::<f64>().is_ok(), "{res}");
    }

    #[test]
    fn deterministic_rendering() {
        let reports: Vec<_> = crate::catalog::families()
            .iter()
            .take(3)
            .map(|f| crate::catalog::verify_family(f, 3, 7))
            .collect();
        let a = render(&catalog_report(&reports, 3, 7));
        let b = render(&catalog_report(&reports, 3, 7));
        assert_eq!(a, b);
        let top: Vec<&str> = a
            .lines()
            .filter_map(|l| l.strip_prefix("  \"").and_then(|l| l.split('"').next()))
            .collect();
        let mut sorted = top.clone();
        sorted.sort();
        assert_eq!(top, sorted);
        assert_eq!(top.len(), 7);
    }
}
