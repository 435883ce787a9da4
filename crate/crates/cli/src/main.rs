//! `onepoint`: exact 1-point invariants, recursion search and verification
//! from the command line.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use onepoint::arith::rational::format_rational;
use onepoint::error::{FormatError, GeneratorError, HolonomicError, OracleError, RecursionError};
use onepoint::generator::{catalog, invariants, InvariantTable, ProblemSpec, CATALOG_NAMES};
use onepoint::holonomic::{one_point_pipeline, PRecurrence};
use onepoint::io::{self, RecurrenceJson, Recursion, RecursionJson};
use onepoint::oracle::{
    bms_counts, dessin_counts, hurwitz_factorizations, monotone_factorizations, ribbon_gluings, GluingCount,
};
use onepoint::recursion::{
    catalog_recursion, catalog_recursions, guess, no_recursion_diagnostic, relabelled_sequence, search_minimal,
    GDRecursion, HLevelRelation, SearchStatus, DEFAULT_BUFFER,
};
use onepoint::{Kh, Rational};

#[derive(Parser)]
#[command(
    name = "onepoint",
    version,
    about = "Exact 1-point invariants of weighted Hurwitz problems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Table of n_g(d) for 1 <= d <= d-max, 0 <= g <= g-max.
    Invariants {
        /// Catalog name or path to a problem file.
        #[arg(long)]
        problem: String,
        #[arg(long)]
        d_max: i64,
        #[arg(long)]
        g_max: i64,
        /// Index by the problem's own d (series index divided by its stride);
        /// --d-max then counts in the same units.
        #[arg(long)]
        relabel: bool,
    },
    /// Fit an ħ-level relation of fixed order and degree.
    Guess {
        #[arg(long)]
        problem: String,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        degree: usize,
        /// Number of terms of the relabelled series.
        #[arg(long, default_value_t = 30)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_BUFFER)]
        buffer: usize,
    },
    /// Smallest relation with order <= --order and degree <= --degree.
    Search {
        #[arg(long)]
        problem: String,
        #[arg(long, default_value_t = 3)]
        order: usize,
        #[arg(long, default_value_t = 4)]
        degree: usize,
        #[arg(long, default_value_t = 30)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_BUFFER)]
        buffer: usize,
    },
    /// Check a recursion (catalog name or file) against generated data.
    Verify {
        #[arg(long)]
        problem: String,
        #[arg(long)]
        recursion: String,
        /// Largest relabelled index checked.
        #[arg(long, default_value_t = 12)]
        d_max: i64,
        #[arg(long, default_value_t = 4)]
        g_max: i64,
    },
    /// Bounded (g,d) ansatz search on an invariant table.
    Diagnose {
        #[arg(long)]
        problem: String,
        #[arg(long, default_value_t = 4)]
        order: usize,
        #[arg(long, default_value_t = 6)]
        degree: usize,
        #[arg(long, default_value_t = 3)]
        genus_shift: usize,
        #[arg(long, default_value_t = 14)]
        d_max: i64,
        #[arg(long, default_value_t = 5)]
        g_max: i64,
        #[arg(long, default_value_t = DEFAULT_BUFFER)]
        buffer: usize,
    },
    /// Print each recurrence of the closure pipeline and the final recursion.
    ClosureDemo {
        /// Demo name: monotone, or any catalog problem with q = (1).
        name: String,
    },
    /// Brute-force enumeration for small sizes.
    Oracle {
        #[arg(long, value_enum)]
        kind: OracleKind,
        #[arg(long)]
        d: i64,
        /// Number of permutations per tuple (bms only).
        #[arg(long, default_value_t = 3)]
        m: i64,
        /// Genus bound (monotone and hurwitz only).
        #[arg(long, default_value_t = 2)]
        g_max: i64,
    },
    /// List catalog problems and known recursions.
    Catalog,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OracleKind {
    Ribbon,
    Dessin,
    Bms,
    Monotone,
    Hurwitz,
}

struct CliError {
    module: &'static str,
    code: &'static str,
    message: String,
}

impl CliError {
    fn to_json(&self) -> Value {
        json!({ "error": { "module": self.module, "code": self.code, "message": self.message } })
    }
}

macro_rules! tag {
    ($ty:ty, $module:literal) => {
        impl From<$ty> for CliError {
            fn from(e: $ty) -> Self {
                CliError {
                    module: $module,
                    code: e.code(),
                    message: e.to_string(),
                }
            }
        }
    };
}

tag!(GeneratorError, "generator");
tag!(HolonomicError, "holonomic");
tag!(OracleError, "oracle");
tag!(FormatError, "format");

impl From<RecursionError> for CliError {
    fn from(e: RecursionError) -> Self {
        match e {
            RecursionError::Generator(g) => g.into(),
            RecursionError::Holonomic(h) => h.into(),
            e => CliError {
                module: "recursion-engine",
                code: e.code(),
                message: e.to_string(),
            },
        }
    }
}

fn cli_error(code: &'static str, message: impl Into<String>) -> CliError {
    CliError {
        module: "cli",
        code,
        message: message.into(),
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| cli_error("CLI_IO", format!("{}: {e}", path.display())))
}

fn looks_like_file(arg: &str) -> bool {
    arg.ends_with(".json") || Path::new(arg).is_file()
}

fn load_problem(arg: &str) -> Result<ProblemSpec, CliError> {
    if looks_like_file(arg) {
        Ok(io::problem_from_json(&read_file(Path::new(arg))?)?)
    } else {
        Ok(catalog(arg)?.named(arg))
    }
}

/// Symbol used when printing recursions for a problem.
fn symbol_for(p: &ProblemSpec) -> &'static str {
    let name = p.name.as_deref().unwrap_or("");
    catalog_recursions()
        .into_iter()
        .find(|r| r.problem == name || catalog(r.problem).is_ok_and(|c| c.weight == p.weight && c.q == p.q))
        .map(|r| r.symbol)
        .unwrap_or("n")
}

fn positive(name: &'static str, v: i64, min: i64) -> Result<(), CliError> {
    if v < min {
        return Err(cli_error(
            "CLI_BAD_BOUND",
            format!("--{name} must be at least {min}, got {v}"),
        ));
    }
    Ok(())
}

fn recursion_json(r: RecursionJson) -> Value {
    serde_json::to_value(r).expect("serializable")
}

fn h_json(rel: &HLevelRelation) -> Value {
    recursion_json(rel.into())
}

fn gd_json(rec: &GDRecursion) -> Value {
    recursion_json(rec.into())
}

fn recurrence_json(r: &PRecurrence<Kh>) -> Value {
    serde_json::to_value(RecurrenceJson::from(r)).expect("serializable")
}

fn render_table(t: &InvariantTable) -> String {
    let mut rows = vec![std::iter::once("d".to_string())
        .chain((0..=t.g_max).map(|g| format!("g={g}")))
        .collect::<Vec<_>>()];
    for d in 1..=t.d_max {
        let mut row = vec![d.to_string()];
        row.extend((0..=t.g_max).map(|g| t.get(g, d).map(format_rational).unwrap_or_else(|| "-".into())));
        rows.push(row);
    }
    let widths: Vec<usize> = (0..rows[0].len())
        .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    let mut s = format!("# {}\n", t.problem.label());
    for r in rows {
        let cells: Vec<String> = r.iter().zip(&widths).map(|(x, w)| format!("{x:>w$}")).collect();
        s.push_str(cells.join("  ").trim_end());
        s.push('\n');
    }
    s
}

fn cmd_invariants(problem: &str, d_max: i64, g_max: i64, relabel: bool, format: Format) -> Result<String, CliError> {
    positive("d-max", d_max, 1)?;
    positive("g-max", g_max, 0)?;
    let p = load_problem(problem)?;
    let s = if relabel { p.stride() as i64 } else { 1 };
    let mut t = invariants(&p, s * d_max, g_max)?;
    if relabel {
        t = t.relabel(s);
    }
    Ok(match format {
        Format::Json => io::table_to_json(&t),
        Format::Table | Format::Pretty => render_table(&t),
    })
}

fn relation_report(rel: &HLevelRelation, symbol: &str, format: Format) -> Result<String, CliError> {
    let gd = rel.to_gd_form()?;
    Ok(match format {
        Format::Json => {
            let v = json!({
                "relation": h_json(rel),
                "gd_forms": gd.iter().map(gd_json).collect::<Vec<_>>(),
            });
            serde_json::to_string_pretty(&v).expect("serializable")
        }
        Format::Table => {
            let mut s = format!("{rel}\n");
            for g in &gd {
                writeln!(s, "{g}").expect("string write");
            }
            s
        }
        Format::Pretty => gd.iter().map(|g| format!("{}\n", g.pretty(symbol))).collect(),
    })
}

fn cmd_guess(
    problem: &str,
    order: usize,
    degree: usize,
    n: usize,
    buffer: usize,
    format: Format,
) -> Result<String, CliError> {
    let p = load_problem(problem)?;
    let seq = relabelled_sequence(&p, n as i64)?;
    let found = guess(&seq, order, degree, buffer)?;
    let Some(rel) = found.iter().min_by_key(|r| (r.span(), r.degree_d(), r.degree_h())) else {
        let msg = format!("no relation of order {order} and degree {degree} fits {n} terms");
        return Ok(match format {
            Format::Json => {
                serde_json::to_string_pretty(&json!({ "relation": null, "message": msg })).expect("serializable")
            }
            _ => format!("{msg}\n"),
        });
    };
    relation_report(rel, symbol_for(&p), format)
}

fn cmd_search(
    problem: &str,
    order: usize,
    degree: usize,
    n: usize,
    buffer: usize,
    format: Format,
) -> Result<String, CliError> {
    let p = load_problem(problem)?;
    let out = search_minimal(&p, order, degree, n, buffer)?;
    let status = |s: &SearchStatus| match s {
        SearchStatus::InsufficientData => "insufficient-data".to_string(),
        SearchStatus::NoRelation => "none".to_string(),
        SearchStatus::Found(k) => format!("found {k}"),
    };
    match format {
        Format::Json => {
            let v = json!({
                "trace": out.trace.iter().map(|s| json!({"order": s.order, "degree": s.degree, "status": status(&s.status)})).collect::<Vec<_>>(),
                "relation": out.relation.as_ref().map(h_json),
                "gd_forms": out.gd_forms.iter().map(gd_json).collect::<Vec<_>>(),
            });
            Ok(serde_json::to_string_pretty(&v).expect("serializable"))
        }
        _ => {
            let mut s = String::new();
            for st in &out.trace {
                writeln!(s, "R={} D={}: {}", st.order, st.degree, status(&st.status)).expect("string write");
            }
            match &out.relation {
                Some(rel) => s.push_str(&relation_report(rel, symbol_for(&p), format)?),
                None => s.push_str("no relation within bounds\n"),
            }
            Ok(s)
        }
    }
}

fn load_recursion(arg: &str) -> Result<(Recursion, String), CliError> {
    if looks_like_file(arg) {
        Ok((io::recursion_from_json(&read_file(Path::new(arg))?)?, "n".into()))
    } else {
        let named = catalog_recursion(arg)?;
        Ok((Recursion::Gd(named.recursion), named.symbol.into()))
    }
}

fn cmd_verify(problem: &str, recursion: &str, d_max: i64, g_max: i64, format: Format) -> Result<String, CliError> {
    positive("d-max", d_max, 1)?;
    positive("g-max", g_max, 0)?;
    let p = load_problem(problem)?;
    let (rec, symbol) = load_recursion(recursion)?;
    let stride = p.stride() as i64;
    let (checked, failures, text): (usize, Vec<Value>, String) = match &rec {
        Recursion::Gd(gd) => {
            let t = invariants(&p, stride * d_max, g_max)?.relabel(stride);
            let (checked, fails) = gd.check_table(&t);
            (
                checked,
                fails.iter().map(|&(g, d)| json!({"g": g, "d": d})).collect(),
                gd.pretty(&symbol).to_string(),
            )
        }
        Recursion::H(h) => {
            let seq = relabelled_sequence(&p, d_max)?;
            let from = h.span() as i64;
            let fail = h.first_failure(&seq, from, d_max);
            (
                (d_max - from + 1).max(0) as usize,
                fail.into_iter().map(|d| json!({"d": d})).collect(),
                h.to_string(),
            )
        }
    };
    let ok = failures.is_empty();
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&json!({
            "recursion": recursion_json((&rec).into()),
            "checked": checked,
            "failures": failures,
            "verified": ok,
        }))
        .expect("serializable"),
        _ => format!(
            "{text}\n{} on {checked} points of {} (relabelled d <= {d_max}, g <= {g_max})\n{}",
            if ok { "holds" } else { "FAILS" },
            p.label(),
            failures
                .iter()
                .map(|f| format!("  failure at {f}\n"))
                .collect::<String>()
        ),
    })
}

fn cmd_diagnose(
    problem: &str,
    (order, degree, shift): (usize, usize, usize),
    d_max: i64,
    g_max: i64,
    buffer: usize,
    format: Format,
) -> Result<String, CliError> {
    positive("d-max", d_max, 1)?;
    positive("g-max", g_max, 0)?;
    let p = load_problem(problem)?;
    let stride = p.stride() as i64;
    let t = invariants(&p, stride * d_max, g_max)?.relabel(stride);
    let report = no_recursion_diagnostic(&t, order, degree, shift, buffer)?;
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&json!({
            "bounds": {"order": order, "degree": degree, "genus_shift": shift},
            "solved": report.searched.len(),
            "skipped": report.skipped.len(),
            "found": report.found.as_ref().map(|(a, rec)| json!({
                "order": a.r, "degree": a.deg, "genus_shift": a.h, "recursion": gd_json(rec),
            })),
        }))
        .expect("serializable"),
        _ => format!("{report}\n"),
    })
}

fn cmd_closure_demo(name: &str, format: Format) -> Result<String, CliError> {
    let unknown = || cli_error("CLI_UNKNOWN_DEMO", format!("unknown closure demo {name:?}"));
    let p = catalog(name).map_err(|_| unknown())?;
    if p.q.entries().len() != 1 || !p.is_rational() {
        return Err(unknown());
    }
    let chain = one_point_pipeline(&p.weight)?;
    let result = chain.result();
    let rel = HLevelRelation::from_operator(result.operator())?;
    let gd = rel.to_gd_form()?;
    let symbol = symbol_for(&p.named(name));
    let mut steps: Vec<(&str, &PRecurrence<Kh>)> = vec![
        ("rec1", &chain.u),
        ("rec2", &chain.v),
        ("recprod", &chain.convolution),
        ("rec3", &chain.reciprocal),
        ("rec", &chain.hadamard),
    ];
    if let Some(r) = &chain.reduced {
        steps.push(("reduced", r));
    }
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&json!({
            "steps": steps.iter().map(|(k, r)| json!({"name": k, "recurrence": recurrence_json(r)})).collect::<Vec<_>>(),
            "gd_forms": gd.iter().map(gd_json).collect::<Vec<_>>(),
        }))
        .expect("serializable"),
        _ => {
            let mut s = String::new();
            for (k, r) in &steps {
                writeln!(s, "{k} := {r}").expect("string write");
            }
            for g in &gd {
                writeln!(s, "{}", g.pretty(symbol)).expect("string write");
            }
            s
        }
    })
}

fn histogram_json(c: &GluingCount) -> Value {
    Value::Object(
        c.genus_histogram
            .iter()
            .map(|(g, v)| (g.to_string(), Value::String(format_rational(v))))
            .collect(),
    )
}

fn cmd_oracle(kind: OracleKind, d: i64, m: i64, g_max: i64, format: Format) -> Result<String, CliError> {
    let (label, hist): (&str, Vec<(i64, Rational)>) = match kind {
        OracleKind::Ribbon => ("ribbon", ribbon_gluings(d)?.genus_histogram.into_iter().collect()),
        OracleKind::Dessin => ("dessin", dessin_counts(d)?.genus_histogram.into_iter().collect()),
        OracleKind::Bms => ("bms", bms_counts(m, d)?.genus_histogram.into_iter().collect()),
        OracleKind::Monotone => (
            "monotone",
            (0..=g_max)
                .map(|g| monotone_factorizations(d, g).map(|v| (g, v)))
                .collect::<Result<_, _>>()?,
        ),
        OracleKind::Hurwitz => (
            "hurwitz",
            (0..=g_max)
                .map(|g| hurwitz_factorizations(d, g).map(|v| (g, v)))
                .collect::<Result<_, _>>()?,
        ),
    };
    let count = GluingCount {
        d,
        genus_histogram: hist.into_iter().collect(),
    };
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&json!({"kind": label, "d": d, "counts": histogram_json(&count)}))
            .expect("serializable"),
        _ => {
            let parts: Vec<String> = count
                .genus_histogram
                .iter()
                .map(|(g, v)| format!("g={g}: {}", format_rational(v)))
                .collect();
            format!("{{{}}}\n", parts.join(", "))
        }
    })
}

fn cmd_catalog(format: Format) -> Result<String, CliError> {
    let recs = catalog_recursions();
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&json!({
            "problems": CATALOG_NAMES,
            "recursions": recs.iter().map(|r| json!({
                "name": r.name,
                "problem": r.problem,
                "symbol": r.symbol,
                "pretty": r.recursion.pretty(r.symbol).to_string(),
                "recursion": gd_json(&r.recursion),
            })).collect::<Vec<_>>(),
        }))
        .expect("serializable"),
        _ => {
            let mut s = String::from("problems:\n");
            for p in CATALOG_NAMES {
                writeln!(s, "  {p}").expect("string write");
            }
            s.push_str("recursions:\n");
            for r in &recs {
                writeln!(s, "  {} ({}): {}", r.name, r.problem, r.recursion.pretty(r.symbol)).expect("string write");
            }
            s
        }
    })
}

fn run(cli: &Cli) -> Result<String, CliError> {
    let f = cli.format;
    match &cli.command {
        Command::Invariants {
            problem,
            d_max,
            g_max,
            relabel,
        } => cmd_invariants(problem, *d_max, *g_max, *relabel, f),
        Command::Guess {
            problem,
            order,
            degree,
            n,
            buffer,
        } => cmd_guess(problem, *order, *degree, *n, *buffer, f),
        Command::Search {
            problem,
            order,
            degree,
            n,
            buffer,
        } => cmd_search(problem, *order, *degree, *n, *buffer, f),
        Command::Verify {
            problem,
            recursion,
            d_max,
            g_max,
        } => cmd_verify(problem, recursion, *d_max, *g_max, f),
        Command::Diagnose {
            problem,
            order,
            degree,
            genus_shift,
            d_max,
            g_max,
            buffer,
        } => cmd_diagnose(problem, (*order, *degree, *genus_shift), *d_max, *g_max, *buffer, f),
        Command::ClosureDemo { name } => cmd_closure_demo(name, f),
        Command::Oracle { kind, d, m, g_max } => cmd_oracle(*kind, *d, *m, *g_max, f),
        Command::Catalog => cmd_catalog(f),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|mut text| {
        if !text.ends_with('\n') {
            text.push('\n');
        }
        match &cli.out {
            Some(path) => {
                std::fs::write(path, text).map_err(|e| cli_error("CLI_IO", format!("{}: {e}", path.display())))
            }
            None => {
                print!("{text}");
                Ok(())
            }
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", serde_json::to_string_pretty(&e.to_json()).expect("serializable"));
            ExitCode::FAILURE
        }
    }
}
