//! `vogan`: batch front end for diagram construction, orbit enumeration,
//! classification and verification of the loop-algebra realization.
//!
//! Exit status is 0 on success, 1 on domain errors (the error name goes to
//! stderr) and 2 on usage errors. `VOGAN_JOBS` bounds the worker threads used
//! by `verify-tables`; it never changes the output.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use vogan::diagram::{classify, involution_label, orbit, verify_tables, OrbitClass, TableCheck};
use vogan::realize::{run_checks, Check, Report};
use vogan::render::{render, Format as Render};
use vogan::roots::{real_roots, real_roots_closed_form};
use vogan::{make_type, parse_diagram, parse_type, AffineType, Error, Family, MoveSet, Perm, VoganDiagram};

#[derive(Parser)]
#[command(name = "vogan", version, about = "Vogan diagrams of twisted affine Kac-Moody algebras")]
struct Cli {
    /// Write the output to FILE instead of stdout (same bytes).
    #[arg(long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Draw a diagram given as `FAMILY[:l=N][;rho=(i j)...][;painted=a,b]`.
    Show {
        diagram: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the equivalence class of a diagram.
    Orbit {
        diagram: String,
        #[arg(long, value_enum, default_value_t = Moves::Strict)]
        moveset: Moves,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Partition every diagram of a type into equivalence classes.
    Classify {
        #[arg(value_name = "TYPE")]
        ty: String,
        #[arg(long, value_enum, default_value_t = Moves::Strict)]
        moveset: Moves,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compare the classes with the reference table; all desk types when
    /// TYPE is omitted.
    VerifyTables {
        #[arg(value_name = "TYPE")]
        ty: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Verify the loop-algebra realization of a type.
    Realize {
        #[arg(value_name = "TYPE")]
        ty: String,
        #[arg(long, default_value_t = 3)]
        window: i64,
        #[arg(long, value_enum, default_value_t = CheckArg::All)]
        check: CheckArg,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Real roots up to a degree bound.
    Roots {
        #[arg(value_name = "TYPE")]
        ty: String,
        #[arg(long, default_value_t = 2)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = Method::Weyl)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Moves {
    Strict,
    Extended,
}

impl Moves {
    fn get(self) -> MoveSet {
        match self {
            Moves::Strict => MoveSet::STRICT,
            Moves::Extended => MoveSet::EXTENDED,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    All,
    Jacobi,
    Gcm,
    Sl2,
    Psi,
    Involutions,
    Torus,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Weyl,
    ClosedForm,
}

enum Failure {
    Usage(String),
    Domain(Error),
    /// Report text plus the number of failing samples.
    Checks(String, usize),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    // a failed verification still prints its report
    let (out, status) = match run(&cli.cmd) {
        Ok(s) => (s, None),
        Err(Failure::Checks(out, n)) => (out, Some(Failure::Checks(String::new(), n))),
        Err(f) => (String::new(), Some(f)),
    };
    if !out.is_empty() {
        let written = match &cli.output {
            Some(path) => std::fs::write(path, out.as_bytes()),
            None => std::io::stdout().lock().write_all(out.as_bytes()),
        };
        if let Err(e) = written {
            eprintln!("error: cannot write output: {}", e);
            return ExitCode::from(1);
        }
    }
    match status {
        None => ExitCode::SUCCESS,
        Some(Failure::Usage(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
        Some(Failure::Domain(e)) => {
            eprintln!("error: {}", e);
            ExitCode::from(1)
        }
        Some(Failure::Checks(_, n)) => {
            eprintln!("error: CheckFailed: {} failing sample(s)", n);
            ExitCode::from(1)
        }
    }
}

fn run(cmd: &Cmd) -> Result<String, Failure> {
    match cmd {
        Cmd::Show { diagram, format } => {
            let d = parse_diagram(diagram)?;
            Ok(match format {
                Format::Text => format!("{}\n{}", d.to_text(), render(&d, Render::Ascii)),
                Format::Json => to_json(&diagram_json(&d)),
                Format::Dot => render(&d, Render::Dot),
            })
        }
        Cmd::Orbit { diagram, moveset, format } => {
            let d = parse_diagram(diagram)?;
            let m = moveset.get();
            let members = orbit(&d, m);
            let canonical = members.iter().next().unwrap();
            let label = involution_label(&d, m);
            Ok(match format {
                Format::Text => {
                    let mut s = String::new();
                    let _ = writeln!(s, "diagram: {}", d.to_text());
                    let _ = writeln!(s, "moveset: {}", m.name());
                    let _ = writeln!(s, "canonical: {}", canonical.to_text());
                    let _ = writeln!(s, "label: {}", label);
                    let _ = writeln!(s, "size: {}", members.len());
                    s.push_str("members:\n");
                    for x in &members {
                        let _ = writeln!(s, "  {}", x.to_text());
                    }
                    s
                }
                Format::Json => to_json(&json!({
                    "diagram": d.to_text(),
                    "moveset": m.name(),
                    "canonical": canonical.to_text(),
                    "label": label.to_string(),
                    "size": members.len(),
                    "members": members.iter().map(|x| x.to_text()).collect::<Vec<_>>(),
                })),
                Format::Dot => render(canonical, Render::Dot),
            })
        }
        Cmd::Classify { ty, moveset, format } => {
            let t = parse_type(ty)?;
            let m = moveset.get();
            let classes = classify(&t, m)?;
            Ok(match format {
                Format::Text => classify_text(&t, m, &classes),
                Format::Json => to_json(&classify_json(&t, m, &classes)),
                Format::Dot => classes.iter().map(|c| render(&c.canonical, Render::Dot)).collect(),
            })
        }
        Cmd::VerifyTables { ty, format } => {
            let types = match ty {
                Some(s) => vec![parse_type(s)?],
                None => desk_types(),
            };
            let checks = parallel_map(&types, |t| verify_tables(t));
            let mut done = Vec::new();
            for (t, c) in types.iter().zip(checks) {
                done.push((*t, c?));
            }
            match format {
                Format::Text => Ok(done.iter().map(|(t, c)| tables_text(t, c)).collect()),
                Format::Json => {
                    let v: Vec<Value> = done.iter().map(|(t, c)| tables_json(t, c)).collect();
                    Ok(to_json(&json!({ "types": v })))
                }
                Format::Dot => Err(Failure::Usage(String::from("verify-tables supports text and json"))),
            }
        }
        Cmd::Realize { ty, window, check, seed, format } => {
            let t = parse_type(ty)?;
            if *window < 1 {
                return Err(Failure::Usage(String::from("--window must be at least 1")));
            }
            let check = match check {
                CheckArg::All => Check::All,
                CheckArg::Jacobi => Check::Jacobi,
                CheckArg::Gcm => Check::Gcm,
                CheckArg::Sl2 => Check::Sl2,
                CheckArg::Psi => Check::Psi,
                CheckArg::Involutions => Check::Involutions,
                CheckArg::Torus => Check::Torus,
            };
            if *format == Format::Dot {
                return Err(Failure::Usage(String::from("realize supports text and json")));
            }
            let reports = run_checks(&t, *window, check, *seed)?;
            let out = match format {
                Format::Json => to_json(&json!({
                    "type": t.to_string(),
                    "window": window,
                    "seed": seed,
                    "reports": reports.iter().map(report_json).collect::<Vec<_>>(),
                })),
                _ => realize_text(&t, *window, *seed, &reports),
            };
            let failures: usize = reports.iter().map(|r| r.failures.len()).sum();
            if failures > 0 {
                return Err(Failure::Checks(out, failures));
            }
            Ok(out)
        }
        Cmd::Roots { ty, degree, method, format } => {
            let t = parse_type(ty)?;
            let roots = match method {
                Method::Weyl => real_roots(&t, *degree),
                Method::ClosedForm => real_roots_closed_form(&t, *degree)?,
            };
            Ok(match format {
                Format::Text => roots.iter().map(|r| format!("{}\n", tuple(&r.0))).collect(),
                Format::Json => to_json(&json!({
                    "type": t.to_string(),
                    "N": degree,
                    "roots": roots.iter().map(|r| r.0.clone()).collect::<Vec<_>>(),
                })),
                Format::Dot => return Err(Failure::Usage(String::from("roots supports text and json"))),
            })
        }
    }
}

fn desk_types() -> Vec<AffineType> {
    [
        (Family::A2_2, 1),
        (Family::A2l_2, 2),
        (Family::A2l_2, 3),
        (Family::A2lm1_2, 3),
        (Family::A2lm1_2, 4),
        (Family::Dlp1_2, 2),
        (Family::Dlp1_2, 3),
        (Family::Dlp1_2, 4),
        (Family::E6_2, 4),
        (Family::D4_3, 2),
    ]
    .into_iter()
    .map(|(f, l)| make_type(f, l).expect("desk ranks are valid"))
    .collect()
}

fn jobs() -> usize {
    std::env::var("VOGAN_JOBS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

/// Maps over `items` on up to `VOGAN_JOBS` threads, keeping input order.
fn parallel_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let chunk = items.len().div_ceil(jobs().min(items.len()).max(1)).max(1);
    std::thread::scope(|s| {
        let handles: Vec<_> = items.chunks(chunk).map(|c| s.spawn(|| c.iter().map(&f).collect::<Vec<R>>())).collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    })
}

fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn tuple(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn cycles_json(rho: &Perm) -> Value {
    json!(rho.cycles())
}

fn diagram_json(d: &VoganDiagram) -> Value {
    let t = d.affine_type();
    json!({
        "diagram": d.to_text(),
        "type": t.to_string(),
        "family": t.family().name(),
        "l": t.l(),
        "rho": cycles_json(d.rho()),
        "painted": d.painted(),
    })
}

fn classify_text(t: &AffineType, m: MoveSet, classes: &[OrbitClass]) -> String {
    let mut s = format!("# {} moveset={} classes={}\n", t, m.name(), classes.len());
    for c in classes {
        let table = c.table_match.as_ref().map_or("-", |r| r.label.as_str());
        let _ = writeln!(s, "{}\tsize={}\tlabel={}\ttable={}", c.canonical.to_text(), c.members.len(), c.label, table);
    }
    s
}

fn classify_json(t: &AffineType, m: MoveSet, classes: &[OrbitClass]) -> Value {
    let cs: Vec<Value> = classes
        .iter()
        .map(|c| {
            json!({
                "canonical": c.canonical.to_text(),
                "size": c.members.len(),
                "label": c.label.to_string(),
                "table_match": c.table_match.as_ref().map(|r| r.label.clone()),
            })
        })
        .collect();
    json!({ "type": t.to_string(), "moveset": m.name(), "classes": cs })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn tables_text(t: &AffineType, checks: &[TableCheck; 2]) -> String {
    let mut s = String::new();
    for c in checks {
        let _ = writeln!(
            s,
            "{} {}: rows={} orbits={} expected={} rows_distinct={} covered={} count_matches={}",
            t,
            c.moveset.name(),
            c.rows,
            c.orbit_count,
            c.expected_count,
            yes(c.rows_distinct()),
            yes(c.all_covered()),
            yes(c.count_matches()),
        );
        for (i, j) in &c.equivalent_rows {
            let _ = writeln!(s, "  equivalent rows: {} {}", i, j);
        }
        for d in &c.uncovered {
            let _ = writeln!(s, "  uncovered: {}", d.to_text());
        }
    }
    s
}

fn tables_json(t: &AffineType, checks: &[TableCheck; 2]) -> Value {
    let cs: Vec<Value> = checks
        .iter()
        .map(|c| {
            json!({
                "moveset": c.moveset.name(),
                "rows": c.rows,
                "orbit_count": c.orbit_count,
                "expected_count": c.expected_count,
                "rows_distinct": c.rows_distinct(),
                "all_covered": c.all_covered(),
                "count_matches": c.count_matches(),
                "equivalent_rows": c.equivalent_rows.iter().map(|(i, j)| [*i, *j]).collect::<Vec<_>>(),
                "uncovered": c.uncovered.iter().map(|d| d.to_text()).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({ "type": t.to_string(), "checks": cs })
}

fn report_json(r: &Report) -> Value {
    json!({
        "check": r.check,
        "type": r.type_name,
        "window": r.window,
        "samples": r.samples,
        "seed": r.seed,
        "failures": r.failures,
    })
}

fn realize_text(t: &AffineType, window: i64, seed: u64, reports: &[Report]) -> String {
    let mut s = format!("type: {}\nwindow: {}\nseed: {}\n", t, window, seed);
    for r in reports {
        let verdict = if r.passed() { "ok" } else { "FAILED" };
        let _ = writeln!(s, "{}: samples={} failures={} {}", r.check, r.samples, r.failures.len(), verdict);
        for w in r.failures.iter().take(5) {
            let _ = writeln!(s, "  {}", w);
        }
    }
    s
}
