use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use rplie::catalog::{lookup, select, show, verify_families, Family, FamilyReport};
use rplie::connection::{is_flat, kahler_check, levi_civita, milnor_flat_check, flat_kahler_form};
use rplie::construct::{assemble, check_eqpro};
use rplie::io::report::{
    catalog_report, construct_report, decomposition_report, flat_kahler_report, levi_civita_report, render,
    rp_report, sl2_report,
};
use rplie::io::{parse, serialize, Document};
use rplie::rpcheck::{decompose, is_riemann_poisson};
use rplie::scalar::set_eps;
use rplie::sl2::{classify, Sl2Class, Sl2Subalgebra};
use rplie::{Approx, Error, Mode, Rational, Scalar};

#[derive(Parser)]
#[command(name = "rplie", version, about = "Exact verification of Riemann-Poisson Lie algebras")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Opts {
    /// Field to compute over.
    #[arg(long, global = true, default_value = "rational")]
    mode: Mode,
    /// Comparison tolerance in float mode.
    #[arg(long, global = true, default_value_t = 1e-9)]
    eps: f64,
    /// Emit a JSON report.
    #[arg(long, global = true, conflicts_with = "human")]
    json: bool,
    /// Emit plain text (the default).
    #[arg(long, global = true)]
    human: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether (g, r, ρ) is Riemann-Poisson.
    Check { file: PathBuf },
    /// Print 𝓘, 𝓘⊥, S = Im r_#, S⊥ and ω_r.
    Decompose { file: PathBuf },
    /// Print the Levi-Civita product of (g, ρ).
    LeviCivita { file: PathBuf },
    /// Produce a Kähler form on a flat metric Lie algebra.
    FlatKahler { file: PathBuf },
    /// Work with 2-dimensional subalgebras of sl(2, ℝ).
    Sl2 {
        #[command(subcommand)]
        command: Sl2Command,
    },
    /// Check construction data and assemble g = h ⊕ p.
    Construct { file: PathBuf },
    /// The built-in tables of low-dimensional families.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
}

#[derive(Subcommand)]
enum Sl2Command {
    /// Classify the span of two traceless 2×2 matrices.
    Classify { file: PathBuf },
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// Check table rows on random admissible parameters.
    Verify {
        #[arg(long)]
        table: Option<u8>,
        #[arg(long)]
        row: Option<u8>,
        #[arg(long, default_value_t = 25)]
        samples: usize,
        /// Defaults to RPLIE_SEED, then 0.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Print a family, e.g. `T3.R5`.
    Show { id: String },
}

/// Outcome of a subcommand: text to print and the exit status.
struct Outcome {
    out: String,
    code: u8,
}

impl Outcome {
    fn new(out: String, ok: bool) -> Self {
        Outcome { out, code: if ok { 0 } else { 1 } }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Inconsistent(_) => 3,
        _ => 2,
    }
}

fn read_document(path: &PathBuf) -> Result<Document, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Expression(format!("cannot read {}: {e}", path.display())))?;
    parse(&text)
}

fn emit(opts: &Opts, json: Value, human: String) -> String {
    if opts.json {
        render(&json)
    } else {
        human
    }
}

fn num<F: Scalar>(x: &F) -> String {
    let s = x.to_report();
    match s.strip_suffix("/1") {
        Some(t) => t.to_string(),
        None => s,
    }
}

fn vec_text<F: Scalar>(v: &[F]) -> String {
    let parts: Vec<String> = v.iter().map(num).collect();
    format!("({})", parts.join(", "))
}

fn check<F: Scalar>(opts: &Opts, doc: &Document) -> Result<Outcome, Error> {
    let (g, r, rho) = doc.triple::<F>()?;
    let rep = is_riemann_poisson(&g, &r, &rho)?;
    let mut h = String::new();
    let _ = writeln!(h, "verdict: {}", rep.verdict);
    let _ = writeln!(h, "dimension {}, rank {}", rep.dim, rep.rank);
    let _ = writeln!(h, "direct: {}", rep.direct.holds());
    let _ = writeln!(h, "c1-c3: {}", rep.c.holds());
    if let Some(m) = &rep.main {
        let _ = writeln!(h, "S and S⊥ conditions: {}", m.holds());
    }
    if let Some(b) = rep.biinvariant {
        let _ = writeln!(h, "bi-invariant shortcut: {b}");
    }
    if let Some(f) = rep.c.failure.as_ref().or(rep.failure()) {
        let idx: Vec<String> = f.indices.iter().map(|i| (i + 1).to_string()).collect();
        let name = if f.condition == "yang_baxter" { "c1" } else { f.condition };
        let _ = writeln!(h, "failed: {name} at ({}), residual {}", idx.join(", "), num(&f.residual));
    }
    if !rep.conclusive {
        let _ = writeln!(h, "characterizations disagree within tolerance");
    }
    let out = emit(opts, rp_report(&rep), h);
    Ok(Outcome {
        out,
        code: if !rep.conclusive {
            3
        } else if rep.verdict {
            0
        } else {
            1
        },
    })
}

fn decompose_cmd<F: Scalar>(opts: &Opts, doc: &Document) -> Result<Outcome, Error> {
    let (_, r, rho) = doc.triple::<F>()?;
    let d = decompose(&r, &rho);
    let mut h = String::new();
    let _ = writeln!(h, "rank: {}", d.rank());
    for (name, b) in [("I", &d.i_basis), ("I⊥", &d.iperp_basis), ("S", &d.s_basis), ("S⊥", &d.sperp_basis)] {
        let vs: Vec<String> = b.iter().map(|v| vec_text(v)).collect();
        let _ = writeln!(h, "{name}: {}", vs.join(" "));
    }
    for row in d.omega_r.to_rows() {
        let _ = writeln!(h, "ω_r: {}", vec_text(&row));
    }
    Ok(Outcome::new(emit(opts, decomposition_report(&d), h), true))
}

fn levi_civita_cmd<F: Scalar>(opts: &Opts, doc: &Document) -> Result<Outcome, Error> {
    let g = doc.algebra::<F>()?;
    let rho = doc.metric::<F>()?;
    let a = levi_civita(&g, &rho);
    let (tf, met, flat) = (a.is_torsion_free(&g), a.is_metric(&rho), is_flat(&g, &a));
    let mut h = String::new();
    let n = g.dim();
    for i in 0..n {
        for j in 0..n {
            let v = a.basis_product(i, j);
            if !v.iter().all(Scalar::is_zero) {
                let _ = writeln!(h, "A(e{}, e{}) = {}", i + 1, j + 1, vec_text(&v));
            }
        }
    }
    let _ = writeln!(h, "torsion free: {tf}\nmetric: {met}\nflat: {flat}");
    let out = emit(opts, levi_civita_report(&g, &a, tf, met, flat), h);
    Ok(Outcome { out, code: if tf && met { 0 } else { 3 } })
}

fn flat_kahler_cmd<F: Scalar>(opts: &Opts, doc: &Document) -> Result<Outcome, Error> {
    let g = doc.algebra::<F>()?;
    let rho = doc.metric::<F>()?;
    let flat = is_flat(&g, &levi_civita(&g, &rho));
    let milnor = milnor_flat_check(&g, &rho).flat;
    let (omega, kahler, error) = match flat_kahler_form(&g, &rho) {
        Ok(w) => {
            let k = kahler_check(&g, &rho, w.matrix())?;
            (Some(w), k, None)
        }
        Err(e) => (None, false, Some(e.to_string())),
    };
    let mut h = String::new();
    let _ = writeln!(h, "flat: {flat} (Milnor criterion: {milnor})");
    if let Some(w) = &omega {
        for row in w.matrix().to_rows() {
            let _ = writeln!(h, "ω: {}", vec_text(&row));
        }
        let _ = writeln!(h, "Kähler: {kahler}");
    }
    if let Some(e) = &error {
        let _ = writeln!(h, "error: {e}");
    }
    let code = match (&omega, kahler) {
        _ if flat != milnor => 3,
        (Some(_), true) => 0,
        (Some(_), false) => 3,
        (None, _) => 1,
    };
    let out = emit(opts, flat_kahler_report(flat, milnor, omega.as_ref().map(|w| w.matrix()), kahler, error), h);
    Ok(Outcome { out, code })
}

fn other_name<F>(c: &Sl2Class<F>) -> &'static str {
    match c {
        Sl2Class::G1 => "g1",
        Sl2Class::G2 => "g2",
        _ => "not a subalgebra",
    }
}

fn sl2_cmd<F: Scalar>(opts: &Opts, doc: &Document) -> Result<Outcome, Error> {
    let [a, b] = doc.sl2_generators::<F>()?;
    let s = Sl2Subalgebra::new(a, b)?;
    let class = classify(&s);
    let ok = !matches!(class, Sl2Class::NotSubalgebra);
    let h = match &class {
        Sl2Class::Gx(x) => format!("g_x(x = {})\n", num(x)),
        other => format!("{}\n", other_name(other)),
    };
    Ok(Outcome::new(emit(opts, sl2_report(&class), h), ok))
}

fn construct_cmd<F: Scalar>(opts: &Opts, doc: &Document) -> Result<Outcome, Error> {
    let d = doc.construction_data::<F>()?;
    let e = check_eqpro(&d);
    let mut h = String::new();
    if !e.h_is_lie {
        let _ = writeln!(h, "𝔥 does not satisfy Jacobi");
    }
    for (i, ok) in e.equations.iter().enumerate() {
        let _ = writeln!(h, "equation {}: {}", i + 1, if *ok { "holds" } else { "fails" });
    }
    if !e.holds() {
        return Ok(Outcome::new(emit(opts, construct_report(&e, None), h), false));
    }
    let (g, r, rho) = assemble(&d)?;
    let rep = is_riemann_poisson(&g, &r, &rho)?;
    // Only exact data is written back as a document.
    let text = match F::MODE {
        Mode::Rational => {
            let (gq, rq, rhoq) = assemble(&doc.construction_data::<Rational>()?)?;
            serialize(&Document::from_triple(&gq, &rq, &rhoq))
        }
        Mode::Float => String::new(),
    };
    let _ = writeln!(h, "Riemann-Poisson: {}", rep.verdict);
    h.push_str(&text);
    let out = emit(opts, construct_report(&e, Some((&text, &rep))), h);
    Ok(Outcome { out, code: if rep.verdict { 0 } else { 3 } })
}

fn default_seed() -> Result<u64, Error> {
    match std::env::var("RPLIE_SEED") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::Expression(format!("RPLIE_SEED must be an unsigned integer, got `{s}`"))),
        Err(_) => Ok(0),
    }
}

fn verify_cmd(opts: &Opts, table: Option<u8>, row: Option<u8>, samples: usize, seed: u64) -> Result<Outcome, Error> {
    let fams: Vec<&Family> = select(table, row);
    if fams.is_empty() {
        return Err(Error::UnknownFamily(format!(
            "T{}.R{}",
            table.map_or("*".into(), |t| t.to_string()),
            row.map_or("*".into(), |r| r.to_string())
        )));
    }
    let reports = verify_families(&fams, samples, seed);
    let mut h = String::new();
    for r in &reports {
        let status = if r.all_passed() { "pass" } else { "FAIL" };
        let _ = write!(h, "{:<22} {:>3}/{:<3} {status}", r.label, r.passed(), r.total());
        if let Some(f) = r.main_failure() {
            let _ = write!(h, "  ({f})");
        }
        h.push('\n');
    }
    // A row is settled when some variant of it passes.
    let mut rows: Vec<(&str, bool)> = Vec::new();
    for r in &reports {
        match rows.iter_mut().find(|(id, _)| *id == r.id) {
            Some(entry) => entry.1 |= r.all_passed(),
            None => rows.push((r.id, r.all_passed())),
        }
    }
    let discrepancies: Vec<&FamilyReport> =
        reports.iter().filter(|r| r.corrected.is_some() || !r.all_passed()).collect();
    if !discrepancies.is_empty() {
        let _ = writeln!(h, "discrepancies:");
        for r in discrepancies {
            let verbatim = reports.iter().find(|v| v.id == r.id && v.corrected.is_none());
            if let Some(note) = r.corrected {
                let fixed = if r.all_passed() { "passes" } else { "fails" };
                let base = verbatim.map_or("not run".to_string(), |v| format!("{}/{}", v.passed(), v.total()));
                let _ = writeln!(h, "  {}: verbatim {base}; {note}; corrected {fixed}", r.id);
            } else if !reports.iter().any(|c| c.id == r.id && c.corrected.is_some()) {
                let _ = writeln!(h, "  {}: fails verbatim, no correction", r.id);
            }
        }
    }
    let ok = rows.iter().all(|(_, ok)| *ok);
    let _ = writeln!(h, "{}", if ok { "all rows pass" } else { "some rows fail" });
    Ok(Outcome::new(emit(opts, catalog_report(&reports, samples, seed), h), ok))
}

fn show_cmd(opts: &Opts, id: &str) -> Result<Outcome, Error> {
    let fams = lookup(id)?;
    let text: String = fams.iter().map(|f| show(f)).collect::<Vec<_>>().join("\n");
    let json = serde_json::json!({
        "schema": rplie::io::report::SCHEMA,
        "kind": "catalog-show",
        "families": fams.iter().map(|f| serde_json::json!({
            "id": f.id,
            "label": f.label(),
            "text": show(f),
        })).collect::<Vec<_>>(),
    });
    Ok(Outcome::new(emit(opts, json, text), true))
}

fn run_field<F: Scalar>(opts: &Opts, command: &Command) -> Result<Outcome, Error> {
    match command {
        Command::Check { file } => check::<F>(opts, &read_document(file)?),
        Command::Decompose { file } => decompose_cmd::<F>(opts, &read_document(file)?),
        Command::LeviCivita { file } => levi_civita_cmd::<F>(opts, &read_document(file)?),
        Command::FlatKahler { file } => flat_kahler_cmd::<F>(opts, &read_document(file)?),
        Command::Sl2 { command: Sl2Command::Classify { file } } => sl2_cmd::<F>(opts, &read_document(file)?),
        Command::Construct { file } => construct_cmd::<F>(opts, &read_document(file)?),
        Command::Catalog { command } => match command {
            CatalogCommand::Verify { table, row, samples, seed } => {
                let seed = match seed {
                    Some(s) => *s,
                    None => default_seed()?,
                };
                verify_cmd(opts, *table, *row, *samples, seed)
            }
            CatalogCommand::Show { id } => show_cmd(opts, id),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    set_eps(cli.opts.eps);
    let result = match cli.opts.mode {
        Mode::Rational => run_field::<Rational>(&cli.opts, &cli.command),
        Mode::Float => run_field::<Approx>(&cli.opts, &cli.command),
    };
    match result {
        Ok(o) => {
            print!("{}", o.out);
            ExitCode::from(o.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
