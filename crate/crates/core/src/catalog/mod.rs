//! Parametrized families of Riemann-Poisson Lie algebras in dimensions 3, 4
//! and 5, with admissibility conditions and a seeded regression harness.
//!
//! Families are addressed as `T<table>.R<row>`. Rows whose printed form does
//! not verify carry an additional corrected variant under the same id.

pub mod expr;
mod tables;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Bivector, LieAlgebra, Metric, TwoForm};
use crate::construct::sp_cap_der;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::random::small_rational;
use crate::rpcheck::{decompose, is_riemann_poisson};
use crate::scalar::{format_rational, Rational, Scalar};

use expr::{basis_index, eval, eval_cond, pair_index, parse_cond, parse_expr, Value};

pub use tables::FAMILIES;

/// One diagonal block of a metric.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Block {
    S(&'static str),
    /// Symmetric 2×2 block `[[a, b], [b, c]]`.
    M2(&'static str, &'static str, &'static str),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MetricSpec {
    Identity,
    Blocks(&'static [Block]),
    /// `Aᵗ B A` where `A` acts on the last three coordinates (row-major
    /// entries) and is the identity elsewhere.
    Congruence { a: [&'static str; 9], b: &'static [Block] },
}

/// A way of meeting the equality conditions: fix some parameters, then
/// solve the (linear) equalities for others.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Branch {
    pub preset: &'static [(&'static str, &'static str)],
    pub solve: &'static [&'static str],
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Family {
    pub id: &'static str,
    pub table: u8,
    pub row: u8,
    /// Note describing the correction, for corrected variants.
    pub corrected: Option<&'static str>,
    pub dim: usize,
    pub rank: usize,
    pub params: &'static [&'static str],
    /// Quantities defined from the parameters, evaluated in order.
    pub derived: &'static [(&'static str, &'static str)],
    pub brackets: &'static [&'static str],
    pub bivector: &'static str,
    pub metric: MetricSpec,
    pub conditions: &'static [&'static str],
    /// Conditions not printed but forced by positive definiteness or by
    /// the entries being defined.
    pub implied: &'static [&'static str],
    pub branches: &'static [Branch],
    /// Parameters sampled as `1 − s²` with `0 < s < 1` rational.
    pub square_complements: &'static [&'static str],
    /// Symplectic derivations of the algebra, as combinations of `Eij`.
    pub der: &'static [&'static str],
    /// The metric column only partially determines the row.
    pub partial: bool,
}

pub(crate) const BASE: Family = Family {
    id: "",
    table: 0,
    row: 0,
    corrected: None,
    dim: 0,
    rank: 2,
    params: &[],
    derived: &[],
    brackets: &[],
    bivector: "alpha e12",
    metric: MetricSpec::Identity,
    conditions: &["alpha != 0"],
    implied: &[],
    branches: &[],
    square_complements: &[],
    der: &[],
    partial: false,
};

impl Family {
    /// `T1.R1`, or `T1.R1 (corrected)`.
    pub fn label(&self) -> String {
        match self.corrected {
            None => self.id.to_string(),
            Some(_) => format!("{} (corrected)", self.id),
        }
    }

    pub fn is_corrected(&self) -> bool {
        self.corrected.is_some()
    }
}

pub fn families() -> &'static [Family] {
    FAMILIES
}

/// All variants registered under `id` (verbatim first).
pub fn lookup(id: &str) -> Result<Vec<&'static Family>> {
    let found: Vec<_> = FAMILIES.iter().filter(|f| f.id.eq_ignore_ascii_case(id)).collect();
    if found.is_empty() {
        Err(Error::UnknownFamily(id.to_string()))
    } else {
        Ok(found)
    }
}

pub fn select(table: Option<u8>, row: Option<u8>) -> Vec<&'static Family> {
    FAMILIES
        .iter()
        .filter(|f| table.is_none_or(|t| f.table == t) && row.is_none_or(|r| f.row == r))
        .collect()
}

pub type Assignment<F> = BTreeMap<String, F>;

#[derive(Clone, Debug, PartialEq)]
pub struct Instance<F> {
    pub g: LieAlgebra<F>,
    pub r: Bivector<F>,
    pub rho: Metric<F>,
    /// Parameters together with derived quantities.
    pub values: Assignment<F>,
}

fn scalar_env<'a, F: Scalar>(values: &'a Assignment<F>) -> impl Fn(&str) -> Option<F> + 'a {
    move |name| values.get(name).cloned()
}

fn eval_in<F: Scalar>(text: &str, values: &Assignment<F>) -> Result<F> {
    let e = parse_expr(text)?;
    let env = scalar_env(values);
    expr::eval_scalar(&e, &env)
}

/// Adds derived quantities to `values`.
fn complete<F: Scalar>(fam: &Family, values: &mut Assignment<F>) -> Result<()> {
    for (name, text) in fam.derived {
        let v = eval_in(text, values)?;
        values.insert(name.to_string(), v);
    }
    Ok(())
}

/// The first printed or implied condition that fails.
pub fn violated_condition<F: Scalar>(fam: &Family, values: &Assignment<F>) -> Result<Option<&'static str>> {
    let env = scalar_env(values);
    for c in fam.conditions.iter().chain(fam.implied) {
        if !eval_cond(&parse_cond(c)?, &env)? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

fn metric_block<F: Scalar>(b: &Block, values: &Assignment<F>) -> Result<Vec<Vec<F>>> {
    Ok(match b {
        Block::S(x) => vec![vec![eval_in(x, values)?]],
        Block::M2(a, b, c) => {
            let b = eval_in(b, values)?;
            vec![vec![eval_in(a, values)?, b.clone()], vec![b, eval_in(c, values)?]]
        }
    })
}

fn block_diag<F: Scalar>(blocks: &[Block], n: usize, values: &Assignment<F>) -> Result<Matrix<F>> {
    let mut m = Matrix::zeros(n, n);
    let mut at = 0;
    for b in blocks {
        let rows = metric_block(b, values)?;
        for (i, row) in rows.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if at + i >= n || at + j >= n {
                    return Err(Error::DimensionMismatch { expected: n, got: at + rows.len() });
                }
                m[(at + i, at + j)] = x.clone();
            }
        }
        at += rows.len();
    }
    if at != n {
        return Err(Error::DimensionMismatch { expected: n, got: at });
    }
    Ok(m)
}

fn metric_matrix<F: Scalar>(spec: &MetricSpec, n: usize, values: &Assignment<F>) -> Result<Matrix<F>> {
    match spec {
        MetricSpec::Identity => Ok(Matrix::identity(n)),
        MetricSpec::Blocks(b) => block_diag(b, n, values),
        MetricSpec::Congruence { a, b } => {
            let bm = block_diag(b, n, values)?;
            let mut am = Matrix::identity(n);
            for (k, text) in a.iter().enumerate() {
                am[(n - 3 + k / 3, n - 3 + k % 3)] = eval_in(text, values)?;
            }
            Ok(am.transpose().mul(&bm).mul(&am))
        }
    }
}

fn vector_env<'a, F: Scalar>(values: &'a Assignment<F>, n: usize) -> impl Fn(&str) -> Option<Value<F>> + 'a {
    move |name| {
        if let Some(k) = basis_index(name, 'e', n) {
            let mut v = vec![F::zero(); n];
            v[k] = F::one();
            return Some(Value::Vector(v));
        }
        values.get(name).cloned().map(Value::Scalar)
    }
}

/// Parses `[ei,ej] = rhs` into 0-based indices and the evaluated right side.
pub fn parse_bracket_line<F: Scalar>(line: &str, n: usize, values: &Assignment<F>) -> Result<(usize, usize, Vec<F>)> {
    let bad = || Error::Expression(format!("malformed bracket `{line}`"));
    let (lhs, rhs) = line.split_once('=').ok_or_else(bad)?;
    let inner = lhs.trim().strip_prefix('[').and_then(|s| s.strip_suffix(']')).ok_or_else(bad)?;
    let (a, b) = inner.split_once(',').ok_or_else(bad)?;
    let i = basis_index(a.trim(), 'e', n).ok_or_else(bad)?;
    let j = basis_index(b.trim(), 'e', n).ok_or_else(bad)?;
    let env = vector_env(values, n);
    let v = eval(&parse_expr(rhs)?, &env)?.vector(n)?;
    Ok((i, j, v))
}

/// Builds the bracket, bivector and metric of a row for the given
/// parameter values, after checking admissibility.
pub fn instantiate<F: Scalar>(fam: &Family, params: &Assignment<F>) -> Result<Instance<F>> {
    let mut values = params.clone();
    for p in fam.params {
        if !values.contains_key(*p) {
            return Err(Error::Expression(format!("missing parameter `{p}`")));
        }
    }
    complete(fam, &mut values)?;
    if let Some(c) = violated_condition(fam, &values)? {
        return Err(Error::Inadmissible(c.to_string()));
    }
    build(fam, values)
}

/// As [`instantiate`] but without the admissibility gate.
pub fn instantiate_unchecked<F: Scalar>(fam: &Family, params: &Assignment<F>) -> Result<Instance<F>> {
    let mut values = params.clone();
    complete(fam, &mut values)?;
    build(fam, values)
}

fn build<F: Scalar>(fam: &Family, values: Assignment<F>) -> Result<Instance<F>> {
    let n = fam.dim;
    let mut brackets: Vec<(usize, usize, Vec<F>)> = Vec::new();
    for line in fam.brackets {
        let (i, j, v) = parse_bracket_line(line, n, &values)?;
        if brackets.iter().any(|(a, b, _)| (*a, *b) == (i, j) || (*a, *b) == (j, i)) {
            return Err(Error::Expression(format!("bracket [e{},e{}] given twice", i + 1, j + 1)));
        }
        brackets.push((i, j, v));
    }
    let g = LieAlgebra::from_brackets(n, &brackets)?;
    let r = parse_bivector(fam.bivector, n, &values)?;
    let rho = Metric::new(metric_matrix(&fam.metric, n, &values)?)?;
    Ok(Instance { g, r, rho, values })
}

/// Parses a combination of `eij` (`i < j` single digits) into a bivector.
pub fn parse_bivector<F: Scalar>(text: &str, n: usize, values: &Assignment<F>) -> Result<Bivector<F>> {
    let env = |name: &str| -> Option<Value<F>> {
        if let Some((i, j)) = pair_index(name, 'e', n) {
            let mut v = vec![F::zero(); n * n];
            v[i * n + j] = F::one();
            v[j * n + i] = -F::one();
            return Some(Value::Vector(v));
        }
        values.get(name).cloned().map(Value::Scalar)
    };
    let v = eval(&parse_expr(text)?, &env)?.vector(n * n)?;
    Bivector::new(Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
}

/// Parses a combination of matrix units `Eij`.
pub fn parse_matrix_units<F: Scalar>(text: &str, n: usize) -> Result<Matrix<F>> {
    let env = |name: &str| -> Option<Value<F>> {
        pair_index(name, 'E', n).map(|(i, j)| {
            let mut v = vec![F::zero(); n * n];
            v[i * n + j] = F::one();
            Value::Vector(v)
        })
    };
    let v = eval(&parse_expr(text)?, &env)?.vector(n * n)?;
    Ok(Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
}

fn family_seed(fam: &Family, seed: u64) -> u64 {
    // FNV-1a of the label, so that each variant gets its own stream.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in fam.label().bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h ^ seed
}

/// Parameters that some printed condition requires to be positive.
fn positive_params(fam: &Family) -> Vec<&'static str> {
    fam.params
        .iter()
        .copied()
        .filter(|p| {
            fam.conditions.iter().chain(fam.implied).any(|c| {
                let (lhs, rhs) = match c.split_once('>') {
                    Some(x) => x,
                    None => return false,
                };
                rhs.trim() == "0" && lhs.trim() == *p
            })
        })
        .collect()
}

/// Solves the equality conditions linearly for `unknowns`, assuming they
/// enter affinely.
fn solve_equalities(fam: &Family, values: &mut Assignment<Rational>, unknowns: &[&str]) -> Option<()> {
    let eqs: Vec<(expr::Expr, expr::Expr)> = fam
        .conditions
        .iter()
        .filter_map(|c| match parse_cond(c).ok()? {
            expr::Cond::Chain(mut e, ops) if ops == [expr::Cmp::Eq] => {
                let b = e.pop()?;
                let a = e.pop()?;
                Some((a, b))
            }
            _ => None,
        })
        .collect();
    let residual = |vals: &Assignment<Rational>| -> Option<Vec<Rational>> {
        let env = scalar_env(vals);
        eqs.iter()
            .map(|(a, b)| Some(expr::eval_scalar(a, &env).ok()? - expr::eval_scalar(b, &env).ok()?))
            .collect()
    };
    for u in unknowns {
        values.insert(u.to_string(), Rational::zero());
    }
    let r0 = residual(values)?;
    let mut cols = Vec::new();
    for u in unknowns {
        values.insert(u.to_string(), Rational::one());
        let r1 = residual(values)?;
        values.insert(u.to_string(), Rational::zero());
        cols.push(r1.iter().zip(&r0).map(|(x, y)| x.clone() - y.clone()).collect::<Vec<_>>());
    }
    let a = Matrix::from_columns(eqs.len(), &cols);
    let rhs: Vec<Rational> = r0.iter().map(|x| -x.clone()).collect();
    let sol = a.solve(&rhs)?;
    for (u, x) in unknowns.iter().zip(sol) {
        values.insert(u.to_string(), x);
    }
    Some(())
}

/// Draws one admissible rational assignment of the free parameters, or
/// `None` after too many rejections.
pub fn sample(fam: &Family, rng: &mut ChaCha8Rng) -> Option<Assignment<Rational>> {
    let positive = positive_params(fam);
    for _ in 0..20_000 {
        let mut values = Assignment::new();
        for p in fam.params {
            values.insert(p.to_string(), small_rational(rng, positive.contains(p)));
        }
        for p in fam.square_complements {
            let d: i64 = rng.gen_range(2..=6);
            let n: i64 = rng.gen_range(1..d);
            let s = Rational::ratio(n, d);
            values.insert(p.to_string(), Rational::one() - s.clone() * s);
        }
        if !fam.branches.is_empty() {
            let b = &fam.branches[rng.gen_range(0..fam.branches.len())];
            let mut ok = true;
            for (name, text) in b.preset {
                match eval_in(text, &values) {
                    Ok(v) => {
                        values.insert(name.to_string(), v);
                    }
                    Err(_) => ok = false,
                }
            }
            if !ok || solve_equalities(fam, &mut values, b.solve).is_none() {
                continue;
            }
        }
        let mut full = values.clone();
        if complete(fam, &mut full).is_err() {
            continue;
        }
        if matches!(violated_condition(fam, &full), Ok(None)) {
            return Some(values);
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq)]
pub struct SampleOutcome {
    pub assignment: Assignment<Rational>,
    pub passed: bool,
    /// Failing condition or error message.
    pub failure: Option<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FamilyReport {
    pub id: &'static str,
    pub label: String,
    pub corrected: Option<&'static str>,
    pub partial: bool,
    pub samples: Vec<SampleOutcome>,
}

impl FamilyReport {
    pub fn passed(&self) -> usize {
        self.samples.iter().filter(|s| s.passed).count()
    }

    pub fn total(&self) -> usize {
        self.samples.len()
    }

    pub fn all_passed(&self) -> bool {
        !self.samples.is_empty() && self.passed() == self.total()
    }

    /// The most frequent failure reason.
    pub fn main_failure(&self) -> Option<&str> {
        let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
        for s in &self.samples {
            if let Some(f) = &s.failure {
                *counts.entry(f.as_str()).or_default() += 1;
            }
        }
        counts.into_iter().max_by_key(|(_, c)| *c).map(|(f, _)| f)
    }
}

/// Outcome of the full check on one rational instance.
pub fn check_instance(fam: &Family, params: &Assignment<Rational>) -> std::result::Result<(), String> {
    let inst = instantiate(fam, params).map_err(|e| e.to_string())?;
    if inst.r.rank() != fam.rank {
        return Err(format!("rank {} instead of {}", inst.r.rank(), fam.rank));
    }
    let report = is_riemann_poisson(&inst.g, &inst.r, &inst.rho).map_err(|e| e.to_string())?;
    if report.verdict {
        Ok(())
    } else {
        Err(report.failure().map_or("not Riemann-Poisson".to_string(), |f| f.condition.to_string()))
    }
}

/// Draws `samples` admissible assignments from a seeded stream and checks
/// each instance.
pub fn verify_family(fam: &Family, samples: usize, seed: u64) -> FamilyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(family_seed(fam, seed));
    let mut out = Vec::with_capacity(samples);
    for _ in 0..samples {
        match sample(fam, &mut rng) {
            Some(assignment) => {
                let res = check_instance(fam, &assignment);
                out.push(SampleOutcome {
                    assignment,
                    passed: res.is_ok(),
                    failure: res.err(),
                });
            }
            None => out.push(SampleOutcome {
                assignment: Assignment::new(),
                passed: false,
                failure: Some("no admissible parameters found".into()),
            }),
        }
    }
    FamilyReport {
        id: fam.id,
        label: fam.label(),
        corrected: fam.corrected,
        partial: fam.partial,
        samples: out,
    }
}

/// [`verify_family`] over several families on worker threads; the reports
/// come back in input order.
pub fn verify_families(fams: &[&Family], samples: usize, seed: u64) -> Vec<FamilyReport> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(fams.len().max(1));
    let next = std::sync::atomic::AtomicUsize::new(0);
    let mut slots: Vec<Option<FamilyReport>> = vec![None; fams.len()];
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                scope.spawn(|| {
                    let mut done = Vec::new();
                    loop {
                        let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                        if i >= fams.len() {
                            return done;
                        }
                        done.push((i, verify_family(fams[i], samples, seed)));
                    }
                })
            })
            .collect();
        for h in handles {
            for (i, r) in h.join().expect("verification worker panicked") {
                slots[i] = Some(r);
            }
        }
    });
    slots.into_iter().map(|r| r.expect("every family verified")).collect()
}

/// Whether `sp(𝔥, ω) ∩ Der(𝔥)` of the row, with `ω = ω_r`, is the printed
/// span. Meaningful for rows of full rank with a printed derivation list.
pub fn verify_der_column(fam: &Family, params: &Assignment<Rational>) -> Result<bool> {
    let inst = instantiate(fam, params)?;
    let n = fam.dim;
    let dec = decompose(&inst.r, &inst.rho);
    if dec.rank() != n {
        return Err(Error::DegenerateForm);
    }
    let omega = TwoForm::new(dec.omega_r.clone())?;
    let flat = |m: &Matrix<Rational>| m.to_rows().concat();
    let computed: Vec<_> = sp_cap_der(&inst.g, &omega).iter().map(flat).collect();
    let printed = fam
        .der
        .iter()
        .map(|t| parse_matrix_units::<Rational>(t, n).map(|m| flat(&m)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Subspace::span(n * n, &computed) == Subspace::span(n * n, &printed))
}

/// Human-readable description of a family.
pub fn show(fam: &Family) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}  (dimension {}, rank {})", fam.label(), fam.dim, fam.rank);
    if let Some(note) = fam.corrected {
        let _ = writeln!(s, "  correction: {note}");
    }
    let _ = writeln!(s, "  parameters: {}", fam.params.join(", "));
    for (name, text) in fam.derived {
        let _ = writeln!(s, "  where {name} = {text}");
    }
    let _ = writeln!(s, "  brackets:");
    for b in fam.brackets {
        let _ = writeln!(s, "    {b}");
    }
    let _ = writeln!(s, "  bivector: {}", fam.bivector);
    let _ = writeln!(s, "  metric: {}", metric_text(&fam.metric));
    let _ = writeln!(s, "  conditions: {}", fam.conditions.join("; "));
    if !fam.implied.is_empty() {
        let _ = writeln!(s, "  implied: {}", fam.implied.join("; "));
    }
    if !fam.der.is_empty() {
        let _ = writeln!(s, "  symplectic derivations: {}", fam.der.join(", "));
    }
    if fam.partial {
        let _ = writeln!(s, "  note: only the identity metric is encoded");
    }
    s
}

fn block_text(blocks: &[Block]) -> String {
    let parts: Vec<String> = blocks
        .iter()
        .map(|b| match b {
            Block::S(x) => x.to_string(),
            Block::M2(a, b, c) => format!("[[{a}, {b}], [{b}, {c}]]"),
        })
        .collect();
    format!("diag({})", parts.join(", "))
}

pub fn metric_text(m: &MetricSpec) -> String {
    match m {
        MetricSpec::Identity => "identity".into(),
        MetricSpec::Blocks(b) => block_text(b),
        MetricSpec::Congruence { a, b } => format!(
            "Aᵗ B A, A = diag(1, 1, [[{}, {}, {}], [{}, {}, {}], [{}, {}, {}]]), B = {}",
            a[0],
            a[1],
            a[2],
            a[3],
            a[4],
            a[5],
            a[6],
            a[7],
            a[8],
            block_text(b)
        ),
    }
}

/// `name = value` pairs in a stable order.
pub fn format_assignment(a: &Assignment<Rational>) -> String {
    a.iter()
        .map(|(k, v)| format!("{k}={}", format_rational(v)))
        .collect::<Vec<_>>()
        .join(", ")
}
