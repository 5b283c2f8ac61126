//! Command-line front end.

use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use serde_json::json;

use ffl::exponent::MultiExponent;
use ffl::hasse::{build_diagram, k_chains, to_dot, to_json};
use ffl::paths::{cochain_formula, cochains, maximal_paths};
use ffl::polytope::{
    build_polytope, certify_normality, lattice_points, points_csv, reduce_nonredundant, to_latex,
    to_text,
};
use ffl::repmodels::{known_dim, Model, ModelKind};
use ffl::rootsys::{positive_roots, standard_support, weyl_dim, weyl_dim_rect, CaseId, Variant};
use ffl::straighten::Rewriter;
use ffl::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Command {
    Roots,
    Hasse,
    Paths,
    Cochains,
    Polytope,
    Points,
    Normality,
    Straighten,
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
    Table,
}

/// PBW polytopes, Hasse diagrams and straightening for rectangular weights.
///
/// Cases are written `<type><rank>:w<i>[:variant]`, e.g. `E6:w6` or
/// `G2:w1:standard`. Set FFL_THREADS to bound the worker pool.
#[derive(Debug, Parser)]
#[command(name = "ffl", version)]
struct Cli {
    command: Command,
    /// Case string, e.g. A4:w3.
    case: Option<String>,
    #[arg(long = "case", conflicts_with = "case")]
    case_flag: Option<String>,
    #[arg(short = 'm', default_value_t = 1)]
    m: u32,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    variant: Option<String>,
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    /// Print only the number of items.
    #[arg(long)]
    count: bool,
    /// Polytope in LaTeX layout.
    #[arg(long)]
    latex: bool,
    /// Exponent vector for `straighten`, comma separated.
    #[arg(long)]
    exponent: Option<String>,
    /// Largest degree rewritten by `straighten` without --exponent.
    #[arg(long)]
    degree: Option<u32>,
    /// Largest m for `normality` and `verify`.
    #[arg(long, default_value_t = 4)]
    max_m: u32,
}

enum Outcome {
    Pass(String),
    Fail(String),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Ok(n) = std::env::var("FFL_THREADS") {
        if let Ok(n) = n.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
    let case = match parse_case(&cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            eprintln!("usage: ffl <command> <case> [-m M] [--format json|csv|dot|table] [--variant V] [--out PATH]");
            return ExitCode::from(2);
        }
    };
    let result = run(&cli, &case);
    match result {
        Ok(Outcome::Pass(text)) => emit(&cli, &text, 0),
        Ok(Outcome::Fail(text)) => emit(&cli, &text, 1),
        Err(e @ (Error::Parse(_) | Error::InvalidType(_) | Error::NoVariant(_) | Error::NotInTable(_))) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn emit(cli: &Cli, text: &str, code: u8) -> ExitCode {
    let res = match &cli.out {
        Some(p) => std::fs::write(p, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = res {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(code)
}

fn parse_case(cli: &Cli) -> Result<CaseId> {
    let s = cli
        .case
        .as_deref()
        .or(cli.case_flag.as_deref())
        .ok_or_else(|| Error::Parse("missing case".into()))?;
    let c: CaseId = s.parse()?;
    match &cli.variant {
        None => Ok(c),
        Some(v) => c.with_variant(Variant::parse(v).ok_or_else(|| Error::Parse(v.clone()))?),
    }
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i + 1).collect()
}

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json");
    s.push('\n');
    s
}

fn run(cli: &Cli, c: &CaseId) -> Result<Outcome> {
    let fmt = cli.format;
    let out = match cli.command {
        Command::Roots => roots(c, fmt.unwrap_or(Format::Table)),
        Command::Hasse => {
            let d = build_diagram(c)?;
            match fmt.unwrap_or(Format::Dot) {
                Format::Dot => to_dot(&d),
                Format::Json => pretty(&to_json(&d)),
                Format::Csv | Format::Table => {
                    let mut s = String::from("from,to,label\n");
                    let mut edges = d.edges.clone();
                    edges.sort_by_key(|e| (e.from, e.to));
                    for e in edges {
                        let _ = writeln!(s, "{},{},{}", e.from + 1, e.to + 1, e.label);
                    }
                    s
                }
            }
        }
        Command::Paths => {
            let paths: Vec<Vec<usize>> = maximal_paths(&build_diagram(c)?)
                .iter()
                .map(|p| one_based(&p.indices))
                .collect();
            list_output(&paths, fmt, cli.count)
        }
        Command::Cochains => {
            let cs: Vec<Vec<usize>> = cochains(&build_diagram(c)?)?.iter().map(|p| one_based(&p.indices)).collect();
            list_output(&cs, fmt, cli.count)
        }
        Command::Polytope => {
            let red = reduce_nonredundant(&build_polytope(c, cli.m)?);
            if cli.latex {
                to_latex(&red.polytope)
            } else {
                match fmt.unwrap_or(Format::Table) {
                    Format::Json => pretty(&json!({
                        "case": c.to_string(),
                        "bound": cli.m,
                        "inequalities": red.polytope.support_set().iter().map(|s| one_based(s)).collect::<Vec<_>>(),
                        "witnesses": red.witnesses,
                    })),
                    Format::Csv => {
                        let mut s = String::from("support,bound\n");
                        for sup in red.polytope.support_set() {
                            let _ = writeln!(s, "{},{}", join(&one_based(&sup), " "), cli.m);
                        }
                        s
                    }
                    _ => to_text(&red.polytope),
                }
            }
        }
        Command::Points => {
            let pts = lattice_points(&build_polytope(c, cli.m)?);
            if cli.count {
                format!("{}\n", pts.len())
            } else {
                match fmt.unwrap_or(Format::Csv) {
                    Format::Json => pretty(&json!({ "case": c.to_string(), "m": cli.m, "points": pts.points })),
                    _ => points_csv(&pts),
                }
            }
        }
        Command::Normality => {
            let cert = certify_normality(c, cli.max_m)?;
            let text = match fmt.unwrap_or(Format::Table) {
                Format::Json => pretty(&serde_json::to_value(&cert).expect("json")),
                _ => {
                    let mut s = String::from("m points minkowski brute peel\n");
                    for l in &cert.levels {
                        let _ = writeln!(
                            s,
                            "{} {} {} {} {}",
                            l.m, l.points, l.minkowski_points, l.brute_force_equal, l.peeling_ok
                        );
                    }
                    s
                }
            };
            return Ok(if cert.ok() { Outcome::Pass(text) } else { Outcome::Fail(text) });
        }
        Command::Straighten => return straighten(cli, c),
        Command::Verify => return verify(c, cli.max_m),
    };
    Ok(Outcome::Pass(out))
}

fn roots(c: &CaseId, fmt: Format) -> String {
    let support = standard_support(c.lie, c.fund_index);
    match fmt {
        Format::Json => pretty(&json!({
            "type": c.lie.to_string(),
            "positive_roots": positive_roots(c.lie).iter().map(|r| &r.simple_coeffs).collect::<Vec<_>>(),
            "support": support.iter().map(|r| &r.simple_coeffs).collect::<Vec<_>>(),
        })),
        _ => {
            let mut s = String::from("index,root,height\n");
            for (k, r) in support.iter().enumerate() {
                let _ = writeln!(s, "{},{},{}", k + 1, r.digits(), r.height());
            }
            s
        }
    }
}

fn list_output(items: &[Vec<usize>], fmt: Option<Format>, count: bool) -> String {
    if count {
        return format!("{}\n", items.len());
    }
    match fmt.unwrap_or(Format::Table) {
        Format::Json => pretty(&json!(items)),
        _ => items.iter().map(|v| format!("{}\n", join(v, " "))).collect(),
    }
}

fn straighten(cli: &Cli, c: &CaseId) -> Result<Outcome> {
    let rw = Rewriter::new(c, cli.m)?;
    let n = rw.st.n();
    if let Some(e) = &cli.exponent {
        let t: MultiExponent = e
            .split(',')
            .map(|x| x.trim().parse::<u32>().map_err(|_| Error::Parse(e.clone())))
            .collect::<Result<_>>()?;
        if t.len() != n {
            return Err(Error::Dimension(t.len(), n));
        }
        let r = rw.rewrite_traced(&t)?;
        let mut s = String::new();
        for step in &r.trace {
            let _ = writeln!(s, "{}", serde_json::to_string(step).expect("json"));
        }
        let _ = writeln!(s, "{}", serde_json::to_string(&json!({ "basis": r.basis })).expect("json"));
        return Ok(Outcome::Pass(s));
    }
    let deg = cli.degree.unwrap_or(cli.m + 1);
    let mut rw = rw;
    let mut total = 0usize;
    for t in monomials(n, deg) {
        let b = rw.rewrite_to_basis(&t)?;
        if !b.iter().all(|u| rw.in_basis(u)) {
            return Ok(Outcome::Fail(format!("{t:?} rewrote outside S(m)\n")));
        }
        total += 1;
    }
    Ok(Outcome::Pass(format!("{}\n", serde_json::to_string(&json!({
        "case": c.to_string(), "m": cli.m, "max_degree": deg, "monomials": total, "relations": rw.steps, "searched": rw.searched
    })).expect("json"))))
}

/// All exponent vectors of length n and degree ≤ d.
fn monomials(n: usize, d: u32) -> Vec<MultiExponent> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<MultiExponent>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..=left {
            cur[i] = v;
            rec(i + 1, left - v, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, d, &mut cur, &mut out);
    out
}

fn verify(c: &CaseId, max_m: u32) -> Result<Outcome> {
    c.require_ffl()?;
    let mut checks: Vec<serde_json::Value> = Vec::new();
    let mut push = |name: &str, ok: bool, detail: serde_json::Value| {
        checks.push(json!({ "check": name, "ok": ok, "detail": detail }));
    };
    let d = build_diagram(c)?;
    let cs = cochains(&d)?;
    let w = weyl_dim(&c.weight(1), c.lie)?;
    let known = known_dim(c)?;
    push(
        "cochains_vs_weyl_dim",
        w == cs.len().into() && known == cs.len() as u64,
        json!({ "cochains": cs.len(), "weyl_dim": w.to_string(), "known_dim": known }),
    );
    for m in 1..=3u32 {
        let pts = lattice_points(&build_polytope(c, m)?).len() as u64;
        let wd = weyl_dim_rect(c.lie, c.fund_index, i64::from(m));
        push("points_vs_weyl_dim", pts == wd, json!({ "m": m, "points": pts, "weyl_dim": wd }));
    }
    let cert = certify_normality(c, max_m)?;
    push("normality", cert.ok(), serde_json::to_value(&cert.levels).expect("json"));
    let chains = k_chains(&d);
    push("k_chain_free", chains.is_empty(), json!({ "k_chains": chains.len() }));
    if c.has_modified() {
        let std = build_diagram(&c.with_variant(Variant::Standard)?)?;
        let n = k_chains(&std).len();
        push("standard_has_k_chain", n > 0, json!({ "k_chains": n }));
    }
    if let Ok(formula) = cochain_formula(c) {
        let mut a = formula;
        let mut b = cs.clone();
        a.sort();
        b.sort();
        push("cochain_formula", a == b, json!({ "formula": a.len(), "diagram": b.len() }));
    }
    if let Ok(model) = Model::new(c) {
        let labels: Vec<String> = cs
            .iter()
            .map(|p| match model.kind {
                ModelKind::Wedge => model.wedge_image(p).map(|l| format!("{l:?}")),
                ModelKind::Spin => model.spin_image(p).map(|l| format!("{l:?}")),
            })
            .collect::<Result<_>>()?;
        let distinct: std::collections::BTreeSet<&String> = labels.iter().collect();
        push("model_injective", distinct.len() == labels.len(), json!({ "labels": distinct.len() }));
    }
    for m in 1..=2u32 {
        let mut rw = Rewriter::new(c, m)?;
        let deg = m + 2;
        let mut bad = None;
        for t in monomials(rw.st.n(), deg) {
            match rw.rewrite_to_basis(&t) {
                Ok(b) if b.iter().all(|u| rw.in_basis(u)) => {}
                Ok(_) => bad = Some(format!("{t:?} left S(m)")),
                Err(e) => bad = Some(e.to_string()),
            }
            if bad.is_some() {
                break;
            }
        }
        push(
            "rewrite_to_basis",
            bad.is_none(),
            json!({ "m": m, "max_degree": deg, "relations": rw.steps, "searched": rw.searched, "error": bad }),
        );
    }
    let ok = checks.iter().all(|c| c["ok"] == json!(true));
    let report = pretty(&json!({ "case": c.to_string(), "ok": ok, "checks": checks }));
    Ok(if ok { Outcome::Pass(report) } else { Outcome::Fail(report) })
}
