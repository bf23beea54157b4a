//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs as a plain binary (`harness = false`) so that the lines always
//! appear in the test output. The process fails if a criterion fails that
//! is not listed in `KNOWN_FAILURES`, or if a listed one starts passing.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use rplie::algebra::{morphism_residuals, yang_baxter_bracket};
use rplie::catalog::{families, instantiate, sample, select, verify_der_column, verify_families, FamilyReport};
use rplie::connection::{
    curvature, flat_kahler_form, kahler_check, levi_civita, milnor_flat_check, uniqueness_kernel_dim,
};
use rplie::construct::{assemble_unchecked, check_eqpro};
use rplie::io::report::{catalog_report, render};
use rplie::io::{convert_algebra, convert_matrix, parse, serialize, Document};
use rplie::random::{
    catalog_instance, mutate, nonzero_rational, perturb, random_bivector, random_flat, random_lie_algebra, random_metric,
    random_triple, rng, small_rational, so3, so4, valid_construction,
};
use rplie::rpcheck::{check_biinvariant, check_c_conditions, check_direct, check_main_theorem, check_symplectic_subalgebra};
use rplie::scalar::{eps, set_eps};
use rplie::sl2::{classify, Sl2Class, Sl2Subalgebra};
use rplie::{Approx, Bivector, LieAlgebra, Matrix, Metric, Rational, Scalar};

/// Absolute tolerance for float-mode residuals.
const FLOAT_TOL: f64 = 1e-9;
/// Wall-clock budget for the catalog regression.
const CATALOG_BUDGET: Duration = Duration::from_secs(60);
const SEED: u64 = 0;

/// Criteria expected to fail, with the reason printed alongside.
const KNOWN_FAILURES: &[(usize, &str)] = &[(
    9,
    "the printed derivation span of T3.R5 misses E12 - E21, so sp ∩ Der has dimension 4 against 3 printed",
)];

type Triple = (LieAlgebra<Rational>, Bivector<Rational>, Metric<Rational>);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn criterion_1() -> Outcome {
    let fams: Vec<_> = families().iter().collect();
    let start = Instant::now();
    let reports = verify_families(&fams, 25, SEED);
    let elapsed = start.elapsed();
    let mut settled: Vec<(&str, bool)> = Vec::new();
    for r in &reports {
        match settled.iter_mut().find(|(id, _)| *id == r.id) {
            Some(e) => e.1 |= r.all_passed(),
            None => settled.push((r.id, r.all_passed())),
        }
    }
    let exact25 = reports.iter().all(|r| r.total() == 25);
    let unsettled: Vec<&str> = settled.iter().filter(|(_, ok)| !ok).map(|(id, _)| *id).collect();
    println!("    discrepancies:");
    for r in reports.iter().filter(|r| r.corrected.is_some()) {
        let verbatim: &FamilyReport = reports.iter().find(|v| v.id == r.id && v.corrected.is_none()).unwrap();
        println!(
            "      {}: verbatim {}/{} ({}); corrected {}/{}: {}",
            r.id,
            verbatim.passed(),
            verbatim.total(),
            verbatim.main_failure().unwrap_or("passes"),
            r.passed(),
            r.total(),
            r.corrected.unwrap()
        );
    }
    let pass = exact25 && unsettled.is_empty() && elapsed < CATALOG_BUDGET;
    outcome(
        pass,
        format!(
            "{} rows, {} variants, unsettled {:?}, {:.1}s (budget {}s)",
            settled.len(),
            reports.len(),
            unsettled,
            elapsed.as_secs_f64(),
            CATALOG_BUDGET.as_secs()
        ),
    )
}

/// 500 instances: catalog instantiations, perturbations of them, and random
/// bivectors over random metric Lie algebras of dimension 2 to 5.
fn instances() -> Vec<Triple> {
    let mut rng = rng(SEED);
    let mut out = Vec::new();
    for _ in 0..180 {
        let i = catalog_instance(&mut rng);
        out.push((i.g, i.r, i.rho));
    }
    for _ in 0..120 {
        let i = catalog_instance(&mut rng);
        out.push(perturb(&mut rng, &i.g, &i.r, &i.rho));
    }
    for k in 0..200 {
        out.push(random_triple(&mut rng, 2 + k % 4));
    }
    out
}

fn criterion_2(inst: &[Triple]) -> Outcome {
    let mut disagree = 0;
    let (mut rp, mut main_used) = (0, 0);
    for (g, r, rho) in inst {
        let d = check_direct(g, r, rho);
        let c = check_c_conditions(g, r, rho).holds();
        let m = check_main_theorem(g, r, rho).map(|m| m.holds());
        if m.is_some() {
            main_used += 1;
        }
        if d != c || m.is_some_and(|m| m != d) {
            disagree += 1;
        }
        rp += d as usize;
    }
    outcome(
        disagree == 0 && inst.len() >= 500,
        format!(
            "{} instances ({rp} Riemann-Poisson, main theorem applicable on {main_used}), {disagree} disagreements",
            inst.len()
        ),
    )
}

fn criterion_3(inst: &[Triple]) -> Outcome {
    let mut exceptions = 0;
    let mut yb = 0;
    for (g, r, rho) in inst {
        let zero = yang_baxter_bracket(g, r).is_zero();
        let s = check_symplectic_subalgebra(g, r, rho);
        yb += zero as usize;
        if zero != (s.is_subalgebra && s.delta_omega_zero) {
            exceptions += 1;
        }
    }
    outcome(exceptions == 0, format!("{} instances, {yb} with [r,r] = 0, {exceptions} exceptions", inst.len()))
}

fn to_float(g: &LieAlgebra<Rational>, rho: &Metric<Rational>) -> (LieAlgebra<Approx>, Metric<Approx>) {
    (convert_algebra(g), Metric::new(convert_matrix(rho.matrix())).unwrap())
}

fn criterion_4(inst: &[Triple]) -> Outcome {
    let mut exact_fail = 0;
    let mut worst = 0.0f64;
    for (g, _, rho) in inst {
        let a = levi_civita(g, rho);
        if !(a.is_torsion_free(g) && a.is_metric(rho)) {
            exact_fail += 1;
        }
        let (gf, rf) = to_float(g, rho);
        let af = levi_civita(&gf, &rf);
        worst = worst.max(af.torsion_residual(&gf)).max(af.compatibility_residual(&rf));
    }
    let mut rng = rng(SEED + 4);
    let mut kernel_fail = 0;
    for k in 0..50 {
        let n = 2 + k % 4;
        let _ = random_lie_algebra(&mut rng, n);
        if uniqueness_kernel_dim(&random_metric(&mut rng, n)) != 0 {
            kernel_fail += 1;
        }
    }
    outcome(
        exact_fail == 0 && worst <= FLOAT_TOL && kernel_fail == 0,
        format!(
            "{} exact failures, worst float residual {worst:.1e} (tol {FLOAT_TOL:.0e}), {kernel_fail}/50 nonzero kernels",
            exact_fail
        ),
    )
}

fn criterion_5() -> Outcome {
    let mut rng = rng(SEED + 5);
    let (mut checked, mut bad) = (0, 0);
    while checked < 100 {
        let i = catalog_instance(&mut rng);
        if !yang_baxter_bracket(&i.g, &i.r).is_zero() {
            continue;
        }
        checked += 1;
        if morphism_residuals(&i.g, &i.r).iter().any(|(_, _, v)| !v.iter().all(Scalar::is_zero)) {
            bad += 1;
        }
    }
    outcome(bad == 0, format!("{checked} instances with [r,r] = 0, {bad} with a nonzero residual"))
}

fn criterion_6() -> Outcome {
    let mut rng = rng(SEED + 6);
    let mut agree = 0;
    let mut total = 0;
    let mut positives = 0;
    for g in [so3(), so4()] {
        let n = g.dim();
        let rho = Metric::identity(n);
        for k in 0..20 {
            let r = if n == 6 && k % 3 == 0 {
                // Multiples of J1 ∧ J2 on the maximal torus span{E12, E34}.
                Bivector::from_terms(6, &[(0, 5, nonzero_rational(&mut rng))]).unwrap()
            } else {
                random_bivector(&mut rng, n)
            };
            let d = check_direct(&g, &r, &rho);
            total += 1;
            positives += d as usize;
            if check_biinvariant(&g, &r, &rho) == Some(d) {
                agree += 1;
            }
        }
    }
    let torus = Bivector::from_terms(6, &[(0, 5, Rational::from_i64(1))]).unwrap();
    let torus_ok = check_biinvariant(&so4(), &torus, &Metric::identity(6)) == Some(true)
        && check_direct(&so4(), &torus, &Metric::identity(6));
    let e12 = Bivector::from_terms(3, &[(0, 1, Rational::from_i64(1))]).unwrap();
    let so3_fails = check_biinvariant(&so3(), &e12, &Metric::identity(3)) == Some(false)
        && !check_direct(&so3(), &e12, &Metric::identity(3));
    outcome(
        agree == total && torus_ok && so3_fails,
        format!("{agree}/{total} agree ({positives} positive), torus passes: {torus_ok}, so(3) e1∧e2 fails: {so3_fails}"),
    )
}

fn criterion_7() -> Outcome {
    let mut rng = rng(SEED + 7);
    let shapes = [(2, 1), (2, 2), (4, 1), (2, 1), (2, 2), (4, 1), (2, 1), (2, 2), (0, 2), (2, 2)];
    let mut kahler_ok = 0;
    let mut milnor_agree = 0;
    let mut cases = 0;
    for (p, q) in shapes {
        let (g, rho) = random_flat(&mut rng, p, q);
        cases += 1;
        let flat = curvature(&g, &levi_civita(&g, &rho)).is_zero();
        if milnor_flat_check(&g, &rho).flat == flat && flat {
            milnor_agree += 1;
        }
        if let Ok(w) = flat_kahler_form(&g, &rho) {
            let nondeg = !w.matrix().det().is_zero();
            if nondeg && kahler_check(&g, &rho, w.matrix()).unwrap_or(false) {
                kahler_ok += 1;
            }
        }
    }
    let mut controls = 0;
    while controls < 10 {
        let n = 2 + rng.gen_range(0..4);
        let g = random_lie_algebra(&mut rng, n);
        let rho = random_metric(&mut rng, n);
        if curvature(&g, &levi_civita(&g, &rho)).is_zero() {
            continue;
        }
        controls += 1;
        cases += 1;
        if !milnor_flat_check(&g, &rho).flat {
            milnor_agree += 1;
        }
    }
    outcome(
        kahler_ok == 10 && milnor_agree == cases,
        format!("{kahler_ok}/10 Kähler forms verified, Milnor criterion agrees on {milnor_agree}/{cases}"),
    )
}

fn recombined(rng: &mut ChaCha8Rng, s: &Sl2Subalgebra<Rational>) -> Sl2Subalgebra<Rational> {
    loop {
        let c: Vec<Rational> = (0..4).map(|_| small_rational(rng, false)).collect();
        if let Ok(t) = s.recombine(&c[0], &c[1], &c[2], &c[3]) {
            return t;
        }
    }
}

fn criterion_8() -> Outcome {
    let mut rng = rng(SEED + 8);
    let mut xs: Vec<Rational> = Vec::new();
    let mut ok = 0;
    let mut invariant = 0;
    for _ in 0..50 {
        let x = nonzero_rational(&mut rng);
        let s = Sl2Subalgebra::gx(&x);
        if classify(&s) == Sl2Class::Gx(x.clone()) {
            ok += 1;
        }
        if classify(&recombined(&mut rng, &s)) == Sl2Class::Gx(x.clone()) {
            invariant += 1;
        }
        xs.push(x);
    }
    let mut injective = true;
    for (i, x) in xs.iter().enumerate() {
        for y in &xs[i + 1..] {
            let same = classify(&Sl2Subalgebra::gx(x)) == classify(&Sl2Subalgebra::gx(y));
            injective &= same == (x == y);
        }
    }
    let m = |a: i64, b: i64, c: i64, d: i64| {
        Matrix::from_rows(vec![
            vec![Rational::from_i64(a), Rational::from_i64(b)],
            vec![Rational::from_i64(c), Rational::from_i64(-d)],
        ])
    };
    let g1 = Sl2Subalgebra::new(m(1, 0, 0, 1), m(0, 1, 0, 0)).unwrap();
    let g2 = Sl2Subalgebra::new(m(1, 0, 0, 1), m(0, 0, 1, 0)).unwrap();
    let mut borel = 0;
    for _ in 0..10 {
        borel += (classify(&recombined(&mut rng, &g1)) == Sl2Class::G1) as usize;
        borel += (classify(&recombined(&mut rng, &g2)) == Sl2Class::G2) as usize;
    }
    let distinct: BTreeSet<_> = xs.iter().collect();
    outcome(
        ok == 50 && invariant == 50 && injective && borel == 20,
        format!(
            "{ok}/50 Gx(x) ({} distinct x), {invariant}/50 invariant, injective: {injective}, G1/G2 {borel}/20",
            distinct.len()
        ),
    )
}

fn criterion_9() -> Outcome {
    let mut rng = rng(SEED + 9);
    let mut rows = Vec::new();
    let mut corrected = Vec::new();
    for fam in select(Some(3), None) {
        let mut all = true;
        for _ in 0..5 {
            let params = sample(fam, &mut rng).expect("admissible parameters");
            all &= verify_der_column(fam, &params).unwrap_or(false);
        }
        if fam.is_corrected() {
            corrected.push((fam.id, all));
        } else {
            rows.push((fam.id, all));
        }
    }
    let passing = rows.iter().filter(|(_, ok)| *ok).count();
    let failing: Vec<&str> = rows.iter().filter(|(_, ok)| !ok).map(|(id, _)| *id).collect();
    outcome(
        passing == 7 && rows.len() == 7,
        format!("{passing}/{} rows verbatim, failing {failing:?}, corrected variants {corrected:?}", rows.len()),
    )
}

fn criterion_10() -> Outcome {
    let mut rng = rng(SEED + 10);
    let mut agree = 0;
    let (mut valid_hold, mut mutated_fail) = (0, 0);
    for k in 0..200 {
        let base = valid_construction(&mut rng);
        let d = if k % 2 == 0 { base } else { mutate(&mut rng, &base) };
        let eq = check_eqpro(&d).holds();
        let jac = assemble_unchecked(&d).0.jacobi().holds;
        agree += (eq == jac) as usize;
        if k % 2 == 0 {
            valid_hold += eq as usize;
        } else {
            mutated_fail += (!eq) as usize;
        }
    }
    outcome(
        agree == 200,
        format!("{agree}/200 agree; {valid_hold}/100 valid satisfy the equations, {mutated_fail}/100 mutated violate them"),
    )
}

fn catalog_documents(seed: u64) -> Vec<Document> {
    let mut rng = rng(seed);
    let mut docs = Vec::new();
    for fam in families() {
        if let Some(values) = sample(fam, &mut rng) {
            if let Ok(inst) = instantiate(fam, &values) {
                docs.push(Document::from_instance(&inst));
            }
        }
    }
    docs
}

fn criterion_11() -> Outcome {
    let docs = catalog_documents(SEED + 11);
    let mut round_trip = 0;
    for d in &docs {
        if parse(&serialize(d)).as_ref() == Ok(d) {
            round_trip += 1;
        }
    }
    let bytes = |seed| catalog_documents(seed).iter().map(serialize).collect::<String>();
    let same_docs = bytes(SEED + 11) == bytes(SEED + 11);
    let fams: Vec<_> = families().iter().take(12).collect();
    let report = || render(&catalog_report(&verify_families(&fams, 3, SEED), 3, SEED));
    let same_reports = report() == report();
    outcome(
        round_trip == docs.len() && same_docs && same_reports,
        format!(
            "{round_trip}/{} documents round-trip, documents byte-identical: {same_docs}, reports byte-identical: {same_reports}",
            docs.len()
        ),
    )
}

fn main() {
    set_eps(1e-9);
    println!("acceptance (eps = {:e}, float residual tolerance = {FLOAT_TOL:e}, seed = {SEED})", eps());
    let inst = instances();
    let results: Vec<(usize, Outcome)> = vec![
        (1, criterion_1()),
        (2, criterion_2(&inst)),
        (3, criterion_3(&inst)),
        (4, criterion_4(&inst)),
        (5, criterion_5()),
        (6, criterion_6()),
        (7, criterion_7()),
        (8, criterion_8()),
        (9, criterion_9()),
        (10, criterion_10()),
        (11, criterion_11()),
    ];
    let mut unexpected = Vec::new();
    for (n, o) in &results {
        let known = KNOWN_FAILURES.iter().find(|(k, _)| k == n);
        println!("criterion {n:>2}: {}  {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        if let (false, Some((_, why))) = (o.pass, known) {
            println!("              known failure: {why}");
        }
        if o.pass == known.is_some() {
            unexpected.push(*n);
        }
    }
    let passed = results.iter().filter(|(_, o)| o.pass).count();
    println!("{passed}/{} criteria pass", results.len());
    if !unexpected.is_empty() {
        println!("unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
