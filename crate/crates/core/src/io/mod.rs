//! Line-oriented text format for algebras, metrics, bivectors, construction
//! data and sl(2) spans, and JSON reports.
//!
//! ```text
//! [algebra]
//! dim = 3
//! bracket e1 e2 = 1 e1          # coefficients: p/q, integer or decimal
//! bracket e3 e2 = 2 e1 + -1/2 e3
//! [metric]
//! identity                       # or: row i = s1 s2 ... sn
//! [bivector]
//! r e1 e2 = 3
//! ```
//!
//! A `row i` line lists either `n` entries or the `n - i + 1` entries from
//! the diagonal on; the rest of the matrix is filled in by symmetry.
//!
//! The optional `[construction]` section describes `(𝔭, ρ_𝔭)` and the
//! coupling maps over the algebra and metric above, which play the role of
//! `(𝔥, ρ_𝔥)`. The basis of 𝔭 is `a1 … am`:
//!
//! ```text
//! [construction]
//! pdim = 1
//! omega e1 e2 = 1
//! pmetric identity
//! pbracket a1 a2 = 1 a1
//! mu a1 a2 = 1 e1
//! phi_p a1 e1 = 1 e2             # φ_𝔭(a1) e1
//! phi_h e1 a1 = 1 a2             # φ_𝔥(e1) a1
//! ```
//!
//! An `[sl2]` section holds two `generator = m11 m12 m21 m22` lines.

pub mod report;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::algebra::{Bivector, LieAlgebra, Metric, TwoForm};
use crate::catalog::Instance;
use crate::construct::ConstructionData;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{format_rational, parse_rational, Rational, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct ConstructionBlock {
    pub omega: Matrix<Rational>,
    pub p_metric: Metric<Rational>,
    pub p_bracket: LieAlgebra<Rational>,
    /// `μ(a_i, a_j)` at index `i * m + j`.
    pub mu: Vec<Vec<Rational>>,
    pub phi_p: Vec<Matrix<Rational>>,
    pub phi_h: Vec<Matrix<Rational>>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Document {
    pub algebra: Option<LieAlgebra<Rational>>,
    pub metric: Option<Metric<Rational>>,
    pub bivector: Option<Bivector<Rational>>,
    pub construction: Option<ConstructionBlock>,
    pub sl2: Option<[Matrix<Rational>; 2]>,
}

#[derive(Clone, Copy, Debug)]
struct Token<'a> {
    text: &'a str,
    col: usize,
}

#[derive(Clone, Debug)]
struct Line<'a> {
    no: usize,
    tokens: Vec<Token<'a>>,
    end_col: usize,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn lex(no: usize, raw: &str) -> Line<'_> {
    let text = raw.split('#').next().unwrap_or("");
    let mut tokens = Vec::new();
    let mut start: Option<usize> = None;
    let col_of = |byte: usize| raw[..byte].chars().count() + 1;
    for (i, c) in text.char_indices() {
        if c.is_whitespace() || c == '=' {
            if let Some(s) = start.take() {
                tokens.push(Token { text: &text[s..i], col: col_of(s) });
            }
            if c == '=' {
                tokens.push(Token { text: "=", col: col_of(i) });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        tokens.push(Token { text: &text[s..], col: col_of(s) });
    }
    Line {
        no,
        tokens,
        end_col: text.chars().count() + 1,
    }
}

impl<'a> Line<'a> {
    fn at(&self, i: usize) -> Result<Token<'a>> {
        self.tokens
            .get(i)
            .copied()
            .ok_or_else(|| err(self.no, self.end_col, "unexpected end of line"))
    }

    fn expect(&self, i: usize, text: &str) -> Result<()> {
        let t = self.at(i)?;
        if t.text == text {
            Ok(())
        } else {
            Err(err(self.no, t.col, format!("expected `{text}`, found `{}`", t.text)))
        }
    }

    fn rational(&self, i: usize) -> Result<Rational> {
        let t = self.at(i)?;
        parse_rational(t.text).ok_or_else(|| err(self.no, t.col, format!("invalid number `{}`", t.text)))
    }

    fn integer(&self, i: usize) -> Result<usize> {
        let t = self.at(i)?;
        t.text
            .parse()
            .map_err(|_| err(self.no, t.col, format!("expected a nonnegative integer, found `{}`", t.text)))
    }

    fn finish(&self, i: usize) -> Result<()> {
        match self.tokens.get(i) {
            None => Ok(()),
            Some(t) => Err(err(self.no, t.col, format!("unexpected `{}`", t.text))),
        }
    }

    fn label(&self, i: usize, prefix: char, n: usize) -> Result<usize> {
        let t = self.at(i)?;
        let k: Option<usize> = t.text.strip_prefix(prefix).and_then(|s| s.parse().ok());
        match k {
            Some(k) if (1..=n).contains(&k) => Ok(k - 1),
            Some(_) => Err(err(self.no, t.col, format!("undeclared label `{}`", t.text))),
            None => Err(err(self.no, t.col, format!("expected a label {prefix}1..{prefix}{n}, found `{}`", t.text))),
        }
    }

    /// `c1 x1 + c2 x2 + …` from token `i` to the end of the line.
    fn combination(&self, i: usize, prefix: char, n: usize) -> Result<Vec<Rational>> {
        let mut v = vec![Rational::zero(); n];
        let mut k = i;
        let mut negate = false;
        let mut expect_term = true;
        self.at(k)?;
        while k < self.tokens.len() {
            let t = self.tokens[k];
            match t.text {
                "+" if expect_term => k += 1,
                "-" if expect_term => {
                    negate = !negate;
                    k += 1;
                }
                "+" | "-" => {
                    expect_term = true;
                    negate = t.text == "-";
                    k += 1;
                }
                _ if !expect_term => return Err(err(self.no, t.col, format!("expected `+` or `-`, found `{}`", t.text))),
                _ => {
                    let (coef, idx) = if t.text.starts_with(prefix) && parse_rational(t.text).is_none() {
                        (Rational::one(), self.label(k, prefix, n)?)
                    } else {
                        let c = self.rational(k)?;
                        match self.tokens.get(k + 1) {
                            Some(next) if next.text != "+" && next.text != "-" => {
                                k += 1;
                                (c, self.label(k, prefix, n)?)
                            }
                            _ if c.is_zero() => {
                                k += 1;
                                expect_term = false;
                                continue;
                            }
                            _ => return Err(err(self.no, t.col, "a nonzero coefficient needs a basis label")),
                        }
                    };
                    v[idx] = v[idx].clone() + if negate { -coef } else { coef };
                    negate = false;
                    expect_term = false;
                    k += 1;
                }
            }
        }
        if expect_term {
            return Err(err(self.no, self.end_col, "unexpected end of line"));
        }
        Ok(v)
    }
}

#[derive(Default)]
struct PairTable {
    seen: BTreeMap<(usize, usize), (usize, usize)>,
}

impl PairTable {
    /// Records `(i, j)`; antisymmetric entries may appear only once.
    fn insert(&mut self, line: &Line, col: usize, i: usize, j: usize) -> Result<()> {
        if i == j {
            return Err(err(line.no, col, "the two labels must differ"));
        }
        let key = (i.min(j), i.max(j));
        if let Some(&(a, _)) = self.seen.get(&key) {
            let msg = if a == i { "duplicate entry" } else { "antisymmetric duplicate" };
            return Err(err(line.no, col, msg));
        }
        self.seen.insert(key, (i, line.no));
        Ok(())
    }
}

#[derive(Default)]
struct RowsBuilder {
    rows: BTreeMap<usize, (usize, Vec<Rational>)>,
    identity: bool,
    header: usize,
}

impl RowsBuilder {
    fn add_row(&mut self, line: &Line, start: usize, n: usize) -> Result<()> {
        let i = line.integer(start)?;
        if !(1..=n).contains(&i) {
            return Err(err(line.no, line.at(start)?.col, format!("row index {i} outside 1..{n}")));
        }
        line.expect(start + 1, "=")?;
        let count = line.tokens.len() - start - 2;
        if count != n && count != n - i + 1 {
            return Err(err(
                line.no,
                line.at(start + 2).map_or(line.end_col, |t| t.col),
                format!("row {i} needs {n} or {} entries, found {count}", n - i + 1),
            ));
        }
        let vals = (start + 2..line.tokens.len()).map(|k| line.rational(k)).collect::<Result<Vec<_>>>()?;
        if self.identity || self.rows.insert(i - 1, (n - count, vals)).is_some() {
            return Err(err(line.no, line.at(start)?.col, "metric row given twice"));
        }
        Ok(())
    }

    fn build(&self, n: usize, line: usize) -> Result<Metric<Rational>> {
        if self.identity {
            return Ok(Metric::identity(n));
        }
        let mut m: Vec<Vec<Option<Rational>>> = vec![vec![None; n]; n];
        for (&i, (offset, vals)) in &self.rows {
            for (k, x) in vals.iter().enumerate() {
                let j = offset + k;
                for (a, b) in [(i, j), (j, i)] {
                    match &m[a][b] {
                        Some(y) if y != x => {
                            return Err(err(line, 1, format!("metric entries ({}, {}) and ({}, {}) differ", a + 1, b + 1, b + 1, a + 1)))
                        }
                        _ => m[a][b] = Some(x.clone()),
                    }
                }
            }
        }
        let mut g = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                g[(i, j)] = m[i][j]
                    .clone()
                    .ok_or_else(|| err(line, 1, format!("metric entry ({}, {}) unspecified", i + 1, j + 1)))?;
            }
        }
        Metric::new(g).map_err(|e| err(line, 1, e.to_string()))
    }
}

const SECTIONS: [&str; 5] = ["algebra", "metric", "bivector", "construction", "sl2"];

/// Parses a document; see the module documentation for the grammar.
pub fn parse(text: &str) -> Result<Document> {
    let mut sections: BTreeMap<&str, (usize, Vec<Line>)> = BTreeMap::new();
    let mut current: Option<&str> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = lex(i + 1, raw);
        let Some(first) = line.tokens.first().copied() else {
            continue;
        };
        if first.text.starts_with('[') {
            let name = first.text.trim_start_matches('[').trim_end_matches(']');
            if !first.text.ends_with(']') || !SECTIONS.contains(&name) {
                return Err(err(line.no, first.col, format!("unknown section `{}`", first.text)));
            }
            line.finish(1)?;
            let name = SECTIONS.iter().copied().find(|s| *s == name).unwrap();
            if sections.contains_key(name) {
                return Err(err(line.no, first.col, format!("section [{name}] given twice")));
            }
            sections.insert(name, (line.no, Vec::new()));
            current = Some(name);
            continue;
        }
        match current {
            Some(name) => sections.get_mut(name).unwrap().1.push(line),
            None => return Err(err(line.no, first.col, "content before the first section header")),
        }
    }

    let mut doc = Document::default();
    let mut n = None;
    if let Some((_, lines)) = sections.get("algebra") {
        let g = parse_algebra(lines)?;
        n = Some(g.dim());
        doc.algebra = Some(g);
    }
    let need_dim = |name: &str| -> Result<usize> {
        n.ok_or_else(|| err(sections[name].0, 1, format!("[{name}] requires an [algebra] section")))
    };
    if let Some((header, lines)) = sections.get("metric") {
        let n = need_dim("metric")?;
        let mut rows = RowsBuilder { header: *header, ..Default::default() };
        for line in lines {
            parse_metric_line(line, 0, n, &mut rows)?;
        }
        doc.metric = Some(rows.build(n, rows.header)?);
    }
    if let Some((_, lines)) = sections.get("bivector") {
        let n = need_dim("bivector")?;
        doc.bivector = Some(Bivector::new(parse_pairs(lines, "r", 'e', n)?).expect("antisymmetric by construction"));
    }
    if let Some((header, lines)) = sections.get("construction") {
        doc.construction = Some(parse_construction(*header, lines, need_dim("construction")?)?);
    }
    if let Some((header, lines)) = sections.get("sl2") {
        doc.sl2 = Some(parse_sl2(*header, lines)?);
    }
    Ok(doc)
}

fn parse_metric_line(line: &Line, start: usize, n: usize, rows: &mut RowsBuilder) -> Result<()> {
    let t = line.at(start)?;
    match t.text {
        "identity" => {
            line.finish(start + 1)?;
            if rows.identity || !rows.rows.is_empty() {
                return Err(err(line.no, t.col, "metric given twice"));
            }
            rows.identity = true;
            rows.header = line.no;
            Ok(())
        }
        "row" => rows.add_row(line, start + 1, n),
        other => Err(err(line.no, t.col, format!("expected `identity` or `row`, found `{other}`"))),
    }
}

fn parse_algebra(lines: &[Line]) -> Result<LieAlgebra<Rational>> {
    let mut n = None;
    for line in lines {
        let t = line.at(0)?;
        if t.text == "dim" {
            line.expect(1, "=")?;
            if n.is_some() {
                return Err(err(line.no, t.col, "dimension given twice"));
            }
            n = Some(line.integer(2)?);
            line.finish(3)?;
        }
    }
    let n = match (n, lines.first()) {
        (Some(n), _) => n,
        (None, Some(l)) => return Err(err(l.no, 1, "missing `dim = n` line")),
        (None, None) => return Err(err(1, 1, "missing `dim = n` line")),
    };
    let mut table = PairTable::default();
    let mut brackets = Vec::new();
    for line in lines {
        let t = line.at(0)?;
        match t.text {
            "dim" => {}
            "bracket" => {
                let i = line.label(1, 'e', n)?;
                let j = line.label(2, 'e', n)?;
                table.insert(line, t.col, i, j)?;
                line.expect(3, "=")?;
                brackets.push((i, j, line.combination(4, 'e', n)?));
            }
            other => return Err(err(line.no, t.col, format!("expected `dim` or `bracket`, found `{other}`"))),
        }
    }
    LieAlgebra::from_brackets(n, &brackets)
}

/// `key x y = c` lines as an antisymmetric matrix.
fn parse_pairs(lines: &[Line], key: &str, prefix: char, n: usize) -> Result<Matrix<Rational>> {
    let mut table = PairTable::default();
    let mut m = Matrix::zeros(n, n);
    for line in lines {
        let t = line.at(0)?;
        if t.text != key {
            return Err(err(line.no, t.col, format!("expected `{key}`, found `{}`", t.text)));
        }
        pair_entry(line, 1, prefix, n, &mut table, &mut m)?;
    }
    Ok(m)
}

fn pair_entry(
    line: &Line,
    start: usize,
    prefix: char,
    n: usize,
    table: &mut PairTable,
    m: &mut Matrix<Rational>,
) -> Result<()> {
    let i = line.label(start, prefix, n)?;
    let j = line.label(start + 1, prefix, n)?;
    table.insert(line, line.at(start)?.col, i, j)?;
    line.expect(start + 2, "=")?;
    let c = line.rational(start + 3)?;
    line.finish(start + 4)?;
    m[(j, i)] = -c.clone();
    m[(i, j)] = c;
    Ok(())
}

fn parse_construction(header: usize, lines: &[Line], k: usize) -> Result<ConstructionBlock> {
    let mut m = None;
    for line in lines {
        let t = line.at(0)?;
        if t.text == "pdim" {
            line.expect(1, "=")?;
            if m.is_some() {
                return Err(err(line.no, t.col, "pdim given twice"));
            }
            m = Some(line.integer(2)?);
            line.finish(3)?;
        }
    }
    let m = m.ok_or_else(|| err(header, 1, "missing `pdim = m` line"))?;
    let mut omega = Matrix::zeros(k, k);
    let mut omega_table = PairTable::default();
    let mut rows = RowsBuilder { header, ..Default::default() };
    let mut pbr_table = PairTable::default();
    let mut pbr = Vec::new();
    let mut mu_table = PairTable::default();
    let mut mu = vec![vec![Rational::zero(); k]; m * m];
    let mut phi_p = vec![Matrix::zeros(k, k); m];
    let mut phi_h = vec![Matrix::zeros(m, m); k];
    let mut phi_seen = BTreeMap::new();
    for line in lines {
        let t = line.at(0)?;
        match t.text {
            "pdim" => {}
            "omega" => pair_entry(line, 1, 'e', k, &mut omega_table, &mut omega)?,
            "pmetric" => parse_metric_line(line, 1, m, &mut rows)?,
            "pbracket" | "mu" => {
                let a = line.label(1, 'a', m)?;
                let b = line.label(2, 'a', m)?;
                line.expect(3, "=")?;
                if t.text == "pbracket" {
                    pbr_table.insert(line, t.col, a, b)?;
                    pbr.push((a, b, line.combination(4, 'a', m)?));
                } else {
                    mu_table.insert(line, t.col, a, b)?;
                    let v = line.combination(4, 'e', k)?;
                    mu[b * m + a] = v.iter().map(|x| -x.clone()).collect();
                    mu[a * m + b] = v;
                }
            }
            "phi_p" | "phi_h" => {
                let (first, second, dim_in) = if t.text == "phi_p" { ('a', 'e', k) } else { ('e', 'a', m) };
                let x = line.label(1, first, if first == 'a' { m } else { k })?;
                let y = line.label(2, second, dim_in)?;
                line.expect(3, "=")?;
                if phi_seen.insert((t.text, x, y), line.no).is_some() {
                    return Err(err(line.no, t.col, "duplicate entry"));
                }
                let v = line.combination(4, second, dim_in)?;
                let target = if t.text == "phi_p" { &mut phi_p[x] } else { &mut phi_h[x] };
                for (row, c) in v.into_iter().enumerate() {
                    target[(row, y)] = c;
                }
            }
            other => return Err(err(line.no, t.col, format!("unknown key `{other}`"))),
        }
    }
    let p_metric = if !rows.identity && rows.rows.is_empty() {
        return Err(err(header, 1, "missing `pmetric` lines"));
    } else {
        rows.build(m, rows.header)?
    };
    Ok(ConstructionBlock {
        omega,
        p_metric,
        p_bracket: LieAlgebra::from_brackets(m, &pbr)?,
        mu,
        phi_p,
        phi_h,
    })
}

fn parse_sl2(header: usize, lines: &[Line]) -> Result<[Matrix<Rational>; 2]> {
    let mut gens = Vec::new();
    for line in lines {
        line.expect(0, "generator")?;
        line.expect(1, "=")?;
        let v = (2..6).map(|k| line.rational(k)).collect::<Result<Vec<_>>>()?;
        line.finish(6)?;
        if gens.len() == 2 {
            return Err(err(line.no, 1, "more than two generators"));
        }
        gens.push(Matrix::from_rows(vec![v[..2].to_vec(), v[2..].to_vec()]));
    }
    match <[Matrix<Rational>; 2]>::try_from(gens) {
        Ok(g) => Ok(g),
        Err(_) => Err(err(header, 1, "[sl2] needs two generator lines")),
    }
}

fn combination_text(v: &[Rational], prefix: char) -> String {
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| format!("{} {prefix}{}", format_rational(c), i + 1))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn write_metric(out: &mut String, key: &str, m: &Metric<Rational>) {
    let n = m.dim();
    if *m.matrix() == Matrix::identity(n) {
        let _ = writeln!(out, "{key}identity");
        return;
    }
    for i in 0..n {
        let row: Vec<String> = m.matrix().row(i).iter().map(format_rational).collect();
        let _ = writeln!(out, "{key}row {} = {}", i + 1, row.join(" "));
    }
}

fn write_pairs(out: &mut String, key: &str, m: &Matrix<Rational>) {
    let n = m.rows();
    for i in 0..n {
        for j in i + 1..n {
            if !m[(i, j)].is_zero() {
                let _ = writeln!(out, "{key} e{} e{} = {}", i + 1, j + 1, format_rational(&m[(i, j)]));
            }
        }
    }
}

/// Canonical text of a document; [`parse`] inverts it.
pub fn serialize(doc: &Document) -> String {
    let mut out = String::new();
    if let Some(g) = &doc.algebra {
        let n = g.dim();
        let _ = writeln!(out, "[algebra]\ndim = {n}");
        for i in 0..n {
            for j in i + 1..n {
                let b = g.basis_bracket(i, j);
                if !b.iter().all(Scalar::is_zero) {
                    let _ = writeln!(out, "bracket e{} e{} = {}", i + 1, j + 1, combination_text(&b, 'e'));
                }
            }
        }
    }
    if let Some(m) = &doc.metric {
        out.push_str("[metric]\n");
        write_metric(&mut out, "", m);
    }
    if let Some(r) = &doc.bivector {
        out.push_str("[bivector]\n");
        write_pairs(&mut out, "r", r.matrix());
    }
    if let Some(c) = &doc.construction {
        let m = c.p_metric.dim();
        let _ = writeln!(out, "[construction]\npdim = {m}");
        write_pairs(&mut out, "omega", &c.omega);
        write_metric(&mut out, "pmetric ", &c.p_metric);
        for a in 0..m {
            for b in a + 1..m {
                let v = c.p_bracket.basis_bracket(a, b);
                if !v.iter().all(Scalar::is_zero) {
                    let _ = writeln!(out, "pbracket a{} a{} = {}", a + 1, b + 1, combination_text(&v, 'a'));
                }
            }
        }
        for a in 0..m {
            for b in a + 1..m {
                let v = &c.mu[a * m + b];
                if !v.iter().all(Scalar::is_zero) {
                    let _ = writeln!(out, "mu a{} a{} = {}", a + 1, b + 1, combination_text(v, 'e'));
                }
            }
        }
        for (key, maps, first, second) in [("phi_p", &c.phi_p, 'a', 'e'), ("phi_h", &c.phi_h, 'e', 'a')] {
            for (x, map) in maps.iter().enumerate() {
                for y in 0..map.cols() {
                    let col = map.column(y);
                    if !col.iter().all(Scalar::is_zero) {
                        let _ = writeln!(out, "{key} {first}{} {second}{} = {}", x + 1, y + 1, combination_text(&col, second));
                    }
                }
            }
        }
    }
    if let Some(gens) = &doc.sl2 {
        out.push_str("[sl2]\n");
        for g in gens {
            let v: Vec<String> = g.to_rows().concat().iter().map(format_rational).collect();
            let _ = writeln!(out, "generator = {}", v.join(" "));
        }
    }
    out
}

pub fn convert_matrix<F: Scalar>(m: &Matrix<Rational>) -> Matrix<F> {
    Matrix::from_fn(m.rows(), m.cols(), |i, j| F::from_rational(&m[(i, j)]))
}

pub fn convert_algebra<F: Scalar>(g: &LieAlgebra<Rational>) -> LieAlgebra<F> {
    LieAlgebra::from_constants(g.dim(), g.constants().iter().map(F::from_rational).collect())
        .expect("antisymmetry is preserved")
        .with_labels(g.labels().to_vec())
}

fn convert_metric<F: Scalar>(m: &Metric<Rational>) -> Result<Metric<F>> {
    Metric::new(convert_matrix(m.matrix()))
}

fn missing(section: &str) -> Error {
    err(0, 0, format!("missing [{section}] section"))
}

impl Document {
    pub fn from_triple(g: &LieAlgebra<Rational>, r: &Bivector<Rational>, rho: &Metric<Rational>) -> Self {
        Document {
            algebra: Some(g.clone()),
            metric: Some(rho.clone()),
            bivector: Some(r.clone()),
            ..Default::default()
        }
    }

    pub fn from_instance(inst: &Instance<Rational>) -> Self {
        Self::from_triple(&inst.g, &inst.r, &inst.rho)
    }

    pub fn from_construction(d: &ConstructionData<Rational>) -> Self {
        Document {
            algebra: Some(d.h.clone()),
            metric: Some(d.rho_h.clone()),
            construction: Some(ConstructionBlock {
                omega: d.omega.matrix().clone(),
                p_metric: d.rho_p.clone(),
                p_bracket: d.p_bracket.clone(),
                mu: d.mu.clone(),
                phi_p: d.phi_p.clone(),
                phi_h: d.phi_h.clone(),
            }),
            ..Default::default()
        }
    }

    pub fn algebra<F: Scalar>(&self) -> Result<LieAlgebra<F>> {
        self.algebra.as_ref().map(convert_algebra).ok_or_else(|| missing("algebra"))
    }

    pub fn metric<F: Scalar>(&self) -> Result<Metric<F>> {
        convert_metric(self.metric.as_ref().ok_or_else(|| missing("metric"))?)
    }

    /// The bivector, or zero when the section is absent.
    pub fn bivector<F: Scalar>(&self, n: usize) -> Result<Bivector<F>> {
        match &self.bivector {
            Some(r) => Bivector::new(convert_matrix(r.matrix())),
            None => Ok(Bivector::zero(n)),
        }
    }

    pub fn triple<F: Scalar>(&self) -> Result<(LieAlgebra<F>, Bivector<F>, Metric<F>)> {
        let g = self.algebra()?;
        let n = g.dim();
        Ok((g, self.bivector(n)?, self.metric()?))
    }

    pub fn construction_data<F: Scalar>(&self) -> Result<ConstructionData<F>> {
        let c = self.construction.as_ref().ok_or_else(|| missing("construction"))?;
        ConstructionData::new(
            self.algebra()?,
            self.metric()?,
            TwoForm::new(convert_matrix(&c.omega))?,
            convert_metric(&c.p_metric)?,
            convert_algebra(&c.p_bracket),
            c.mu.iter().map(|v| v.iter().map(F::from_rational).collect()).collect(),
            c.phi_p.iter().map(convert_matrix).collect(),
            c.phi_h.iter().map(convert_matrix).collect(),
        )
    }

    pub fn sl2_generators<F: Scalar>(&self) -> Result<[Matrix<F>; 2]> {
        let [a, b] = self.sl2.as_ref().ok_or_else(|| missing("sl2"))?;
        Ok([convert_matrix(a), convert_matrix(b)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{families, instantiate, sample};
    use crate::random::{mutate, rng, valid_construction};

    const T1R1: &str = "\
[algebra]
dim = 3
bracket e1 e3 = 1 e1        # [e1,e3] = e1
[metric]
identity
[bivector]
r e1 e2 = 2
";

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    fn parse_error(text: &str) -> (usize, usize, String) {
        match parse(text) {
            Err(Error::Parse { line, column, message }) => (line, column, message),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn parses_small_document() {
        let doc = parse(T1R1).unwrap();
        let g = doc.algebra.as_ref().unwrap();
        assert_eq!(g.dim(), 3);
        assert_eq!(g.basis_bracket(0, 2), vec![q(1, 1), q(0, 1), q(0, 1)]);
        assert_eq!(g.basis_bracket(2, 0), vec![q(-1, 1), q(0, 1), q(0, 1)]);
        assert_eq!(doc.metric.as_ref().unwrap().matrix(), &Matrix::identity(3));
        assert_eq!(doc.bivector.as_ref().unwrap().entry(1, 0), &q(-2, 1));
    }

    #[test]
    fn grammar_example() {
        let doc = parse(
            "[algebra]\ndim = 3\nbracket e1 e2 = 1 e1\nbracket e3 e2 = 2 e1 + -1/2 e3\n[metric]\nidentity\n[bivector]\nr e1 e2 = 3\n",
        )
        .unwrap();
        let g = doc.algebra.unwrap();
        assert_eq!(g.basis_bracket(1, 2), vec![q(-2, 1), q(0, 1), q(1, 2)]);
    }

    #[test]
    fn empty_algebra_is_abelian() {
        let doc = parse("[algebra]\ndim = 2\n").unwrap();
        assert_eq!(doc.algebra.unwrap(), LieAlgebra::abelian(2));
    }

    #[test]
    fn rejects_antisymmetric_duplicate() {
        let (line, col, msg) = parse_error("[algebra]\ndim = 2\nbracket e1 e2 = 1 e1\nbracket e2 e1 = 1 e1\n");
        assert_eq!((line, col), (4, 1));
        assert!(msg.contains("antisymmetric duplicate"));
    }

    #[test]
    fn error_positions() {
        assert_eq!(parse_error("[algebra]\ndim = 3\nbracket e1 e4 = 1 e1\n").0, 3);
        assert_eq!(parse_error("[algebra]\ndim = 3\nbracket e1 e4 = 1 e1\n").1, 12);
        let (line, col, _) = parse_error("[algebra]\ndim = 2\nbracket e1 e2 = 1/0 e1\n");
        assert_eq!((line, col), (3, 17));
        let (line, _, msg) = parse_error("[algebra]\ndim = 2\n[metric]\nrow 1 = 1 2\nrow 2 = 2 1\n");
        assert_eq!(line, 3);
        assert!(msg.contains("positive definite"), "{msg}");
        assert!(parse_error("[algebra]\ndim = 2\n[metric]\nrow 1 = 1 0 0\n").2.contains("entries"));
        assert!(parse_error("[bivector]\nr e1 e2 = 1\n").2.contains("[algebra]"));
        assert!(parse_error("[sl3]\n").2.contains("unknown section"));
    }

    #[test]
    fn metric_rows_by_symmetry() {
        let doc = parse("[algebra]\ndim = 3\n[metric]\nrow 1 = 2 1 0\nrow 2 = 2 0\nrow 3 = 1\n").unwrap();
        let m = doc.metric.unwrap();
        assert_eq!(m.matrix()[(1, 0)], q(1, 1));
        assert_eq!(m.matrix()[(2, 2)], q(1, 1));
        assert!(parse_error("[algebra]\ndim = 2\n[metric]\nrow 1 = 2 1\nrow 2 = 0 2\n").2.contains("differ"));
    }

    #[test]
    fn combinations() {
        let doc = parse("[algebra]\ndim = 3\nbracket e1 e2 = e3 - 2 e1 + 0.5 e2\nbracket e1 e3 = 0\n").unwrap();
        let g = doc.algebra.unwrap();
        assert_eq!(g.basis_bracket(0, 1), vec![q(-2, 1), q(1, 2), q(1, 1)]);
        assert!(g.basis_bracket(0, 2).iter().all(Scalar::is_zero));
    }

    #[test]
    fn round_trip_catalog_documents() {
        let mut rng = rng(5);
        for fam in families() {
            let Some(values) = sample(fam, &mut rng) else { continue };
            let Ok(inst) = instantiate(fam, &values) else { continue };
            let doc = Document::from_instance(&inst);
            let text = serialize(&doc);
            assert_eq!(parse(&text).unwrap(), doc, "{}", fam.label());
        }
    }

    #[test]
    fn round_trip_construction() {
        let mut rng = rng(6);
        for _ in 0..10 {
            let v = valid_construction(&mut rng);
            let d = mutate(&mut rng, &v);
            let doc = Document::from_construction(&d);
            let back = parse(&serialize(&doc)).unwrap();
            assert_eq!(back, doc);
            assert_eq!(back.construction_data::<Rational>().unwrap(), d);
        }
    }

    #[test]
    fn sl2_section() {
        let doc = parse("[sl2]\ngenerator = 1 0 0 -1\ngenerator = 0 1 0 0\n").unwrap();
        assert_eq!(parse(&serialize(&doc)).unwrap(), doc);
        assert!(parse_error("[sl2]\ngenerator = 1 0 0 -1\n").2.contains("two generator"));
    }
}
