//! Command-line front end: enumerate components, compute coefficient
//! vectors, apply the ⋄ action, print the cycle bijection, export posets,
//! and run the self-verification battery.
//!
//! Exit codes: 0 success, 1 invalid input, 2 internal invariant violation.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use shivar::*;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "shivar",
    version,
    about = "Exact combinatorics of the components of the Shi variety in affine type A"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Rank of the root system (type A with n+1 points, n >= 1).
    #[arg(long)]
    n: usize,

    /// Output format; `dot` is only valid for `poset`.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the output to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Transport the canonical point through the affine integer map.
    Matrix,
    /// Iterate the transposition closed form.
    Closed,
    /// Run both paths and fail loudly on any mismatch.
    Both,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Side {
    Component,
    Cycle,
}

#[derive(Subcommand)]
enum Command {
    /// List the admitted vectors indexing the irreducible components.
    Enumerate {
        #[command(flatten)]
        common: Common,
    },

    /// Coefficient vector of an affine Weyl group element, and its component.
    Kvec {
        #[command(flatten)]
        common: Common,

        /// Word in the generators, letters 0..=n separated by spaces or
        /// commas; 0 is the affine reflection, i >= 1 swaps i and i+1.
        /// The empty word is the identity.
        #[arg(long, default_value = "")]
        word: String,

        /// Extra translation applied on the left: n+1 integers summing to
        /// zero, e.g. "1 -1 0 0".
        #[arg(long)]
        translate: Option<String>,
    },

    /// Apply a permutation to a component label via the ⋄ action.
    Act {
        #[command(flatten)]
        common: Common,

        /// Permutation in one-line form, e.g. "2 1 3 4".
        #[arg(long)]
        perm: Option<String>,

        /// Component label: comma-separated non-simple coordinates in
        /// diagonal order, e.g. "0,1,0" for rank 3.
        #[arg(long)]
        lambda: Option<String>,

        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,

        /// Print the full grid: simple reflections against every component.
        #[arg(long)]
        table: bool,
    },

    /// Print the bijection between components and circular permutations.
    Bijection {
        #[command(flatten)]
        common: Common,
    },

    /// Build a cover poset and print or export it.
    Poset {
        #[command(flatten)]
        common: Common,

        #[arg(long, value_enum, default_value_t = Side::Component)]
        side: Side,

        /// Also write the DOT rendering to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
    },

    /// Run the full invariant suite at the given rank.
    Verify {
        #[command(flatten)]
        common: Common,

        /// Seed for the randomized checks.
        #[arg(long, default_value_t = 7)]
        seed: u64,

        /// Sample count for the randomized checks.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
}

/// A failure with its exit code: user errors exit 1, violated internal
/// invariants exit 2.
enum Failure {
    Input(String),
    Invariant(String),
}

type CliResult<T> = std::result::Result<T, Failure>;

impl Failure {
    fn input(e: impl std::fmt::Display) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version are successes; everything else is bad input
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(Failure::Invariant(message)) => {
            eprintln!("invariant violation: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> CliResult<()> {
    match command {
        Command::Enumerate { common } => enumerate(&common),
        Command::Kvec {
            common,
            word,
            translate,
        } => kvec(&common, &word, translate.as_deref()),
        Command::Act {
            common,
            perm,
            lambda,
            method,
            table,
        } => {
            if table {
                act_table(&common, method)
            } else {
                act_single(&common, perm.as_deref(), lambda.as_deref(), method)
            }
        }
        Command::Bijection { common } => bijection(&common),
        Command::Poset { common, side, dot } => poset(&common, side, dot.as_deref()),
        Command::Verify {
            common,
            seed,
            samples,
        } => verify(&common, seed, samples),
    }
}

/// Validate the shared flags; `dot` output only makes sense for posets.
fn validate(common: &Common, dot_allowed: bool) -> CliResult<()> {
    if common.n == 0 {
        return Err(Failure::Input("rank must be at least 1".into()));
    }
    if common.format == Format::Dot && !dot_allowed {
        return Err(Failure::Input(
            "format `dot` is only available for the poset subcommand".into(),
        ));
    }
    Ok(())
}

/// Send finished output to the chosen sink.
fn emit(common: &Common, content: &str) -> CliResult<()> {
    let content = if content.ends_with('\n') {
        content.to_string()
    } else {
        format!("{content}\n")
    };
    match &common.output {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn emit_json(common: &Common, value: &Value) -> CliResult<()> {
    let text = serde_json::to_string_pretty(value)
        .map_err(|e| Failure::Invariant(format!("JSON serialization failed: {e}")))?;
    emit(common, &text)
}

fn parse_integers(text: &str, what: &str) -> CliResult<Vec<i64>> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<i64>()
                .map_err(|_| Failure::Input(format!("{what}: '{s}' is not an integer")))
        })
        .collect()
}

fn parse_lambda(n: usize, text: &str) -> CliResult<AdmittedVector> {
    let values = parse_integers(text, "lambda")?;
    AdmittedVector::from_bracket(n, &values).map_err(Failure::input)
}

fn parse_perm(n: usize, text: &str) -> CliResult<Permutation> {
    let p = Permutation::parse(text).map_err(Failure::input)?;
    if p.rank() != n {
        return Err(Failure::Input(format!(
            "permutation acts on {} points but rank {n} needs {}",
            p.rank() + 1,
            n + 1
        )));
    }
    Ok(p)
}

fn enumerate(common: &Common) -> CliResult<()> {
    validate(common, false)?;
    let admitted = enumerate_admitted(common.n);
    match common.format {
        Format::Json => emit_json(common, &admitted_to_json(common.n, &admitted)),
        _ => {
            let mut out = format!(
                "{} components of the Shi variety for n = {}\n",
                admitted.len(),
                common.n
            );
            for lambda in &admitted {
                let _ = writeln!(out, "{lambda}");
            }
            emit(common, &out)
        }
    }
}

fn kvec(common: &Common, word: &str, translate: Option<&str>) -> CliResult<()> {
    validate(common, false)?;
    let n = common.n;
    let generators = affine_generators(n);
    let mut element = AffineElement::identity(n);
    for letter in parse_integers(word, "word")? {
        let index = usize::try_from(letter)
            .ok()
            .filter(|&i| i <= n)
            .ok_or_else(|| Failure::Input(format!("word letter {letter} is not in 0..={n}")))?;
        // letter 0 is the affine reflection, stored last in the generator list
        let generator = if index == 0 {
            &generators[n]
        } else {
            &generators[index - 1]
        };
        element = element.compose(generator).map_err(Failure::input)?;
    }
    if let Some(text) = translate {
        let coords = parse_integers(text, "translate")?;
        if coords.len() != n + 1 {
            return Err(Failure::Input(format!(
                "translate needs {} integers, got {}",
                n + 1,
                coords.len()
            )));
        }
        let x = RootLatticeVector::new(coords).map_err(Failure::input)?;
        let translation =
            AffineElement::new(x, Permutation::identity(n)).map_err(Failure::input)?;
        element = translation.compose(&element).map_err(Failure::input)?;
    }
    let k = k_vector(&element);
    let lambda = component_of(&k).map_err(Failure::input)?;
    match common.format {
        Format::Json => emit_json(
            common,
            &json!({
                "n": n,
                "element": {
                    "translation": element.translation().coords(),
                    "permutation": element.finite().one_line(),
                },
                "k": k.to_json(),
                "component": lambda.to_json(),
            }),
        ),
        _ => {
            let mut out = String::new();
            let _ = writeln!(out, "element: {element}");
            let _ = writeln!(out, "k-vector:");
            for root in positive_roots(n) {
                let _ = writeln!(out, "  k({},{}) = {}", root.i(), root.j(), k.get(&root));
            }
            let _ = writeln!(out, "component: {lambda}");
            emit(common, &out)
        }
    }
}

/// Apply by the requested path(s); a mismatch between paths is an internal
/// error, never a user error.
fn apply_action(
    w: &Permutation,
    lambda: &AdmittedVector,
    method: Method,
) -> CliResult<AdmittedVector> {
    let matrix = || diamond_matrix(w, lambda).map_err(Failure::input);
    let closed = || diamond_general(w, lambda).map_err(Failure::input);
    match method {
        Method::Matrix => matrix(),
        Method::Closed => closed(),
        Method::Both => {
            let a = matrix()?;
            let b = closed()?;
            if a != b {
                return Err(Failure::Invariant(format!(
                    "matrix path gives {a} but closed form gives {b} for {w} on {lambda}"
                )));
            }
            Ok(a)
        }
    }
}

fn act_single(
    common: &Common,
    perm: Option<&str>,
    lambda: Option<&str>,
    method: Method,
) -> CliResult<()> {
    validate(common, false)?;
    let perm = perm.ok_or_else(|| Failure::Input("--perm is required without --table".into()))?;
    let lambda =
        lambda.ok_or_else(|| Failure::Input("--lambda is required without --table".into()))?;
    let w = parse_perm(common.n, perm)?;
    let lambda = parse_lambda(common.n, lambda)?;
    let result = apply_action(&w, &lambda, method)?;
    match common.format {
        Format::Json => emit_json(
            common,
            &json!({
                "n": common.n,
                "perm": w.one_line(),
                "lambda": lambda.to_json(),
                "result": result.to_json(),
            }),
        ),
        _ => emit(common, &format!("{} ⋄ {lambda} = {result}\n", w.one_line())),
    }
}

fn act_table(common: &Common, method: Method) -> CliResult<()> {
    validate(common, false)?;
    let n = common.n;
    let columns = enumerate_admitted(n);
    let mut rows = Vec::new();
    for i in 1..=n {
        let s = Permutation::simple_reflection(n, i).map_err(Failure::input)?;
        let images = columns
            .iter()
            .map(|lambda| apply_action(&s, lambda, method))
            .collect::<CliResult<Vec<_>>>()?;
        rows.push((i, images));
    }
    match common.format {
        Format::Json => emit_json(
            common,
            &json!({
                "n": n,
                "columns": columns.iter().map(AdmittedVector::to_json).collect::<Vec<_>>(),
                "rows": rows.iter().map(|(i, images)| json!({
                    "reflection": i,
                    "images": images.iter().map(AdmittedVector::to_json).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
            }),
        ),
        _ => {
            // aligned grid: header row of components, one row per reflection
            let headers: Vec<String> = columns.iter().map(|c| c.to_string()).collect();
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|(_, images)| images.iter().map(|v| v.to_string()).collect())
                .collect();
            let corner = "⋄".to_string();
            let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
            for row in &cells {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.len());
                }
            }
            let label_width = rows
                .iter()
                .map(|(i, _)| format!("s_{i}").len())
                .max()
                .unwrap_or(1)
                .max(corner.chars().count());
            let mut out = String::new();
            let _ = write!(out, "{corner:label_width$}");
            for (h, w) in headers.iter().zip(&widths) {
                let _ = write!(out, "  {h:>w$}");
            }
            out.push('\n');
            for ((i, _), row) in rows.iter().zip(&cells) {
                let label = format!("s_{i}");
                let _ = write!(out, "{label:label_width$}");
                for (cell, w) in row.iter().zip(&widths) {
                    let _ = write!(out, "  {cell:>w$}");
                }
                out.push('\n');
            }
            emit(common, &out)
        }
    }
}

fn bijection(common: &Common) -> CliResult<()> {
    validate(common, false)?;
    let table = BijectionTable::build(common.n).map_err(Failure::input)?;
    match common.format {
        Format::Json => emit_json(common, &table.to_json()),
        _ => {
            let width = table
                .entries()
                .iter()
                .map(|(c, _)| c.one_line().len())
                .max()
                .unwrap_or(1);
            let mut out = String::new();
            for (cycle, lambda) in table.entries() {
                let one_line = cycle.one_line();
                let _ = writeln!(
                    out,
                    "{one_line:width$}  {}  ->  {lambda}",
                    cycle.cycle_notation()
                );
            }
            emit(common, &out)
        }
    }
}

fn poset(common: &Common, side: Side, dot_path: Option<&std::path::Path>) -> CliResult<()> {
    validate(common, true)?;
    let (dot, json_value, text) = match side {
        Side::Component => {
            let p = build_component_poset(common.n);
            let mut text = format!(
                "component poset for n = {}: {} elements, {} covers\n",
                common.n,
                p.elements().len(),
                p.covers().len()
            );
            for (lo, hi, root) in p.covers() {
                let _ = writeln!(
                    text,
                    "{} -> {}  label ({},{})",
                    p.elements()[*lo],
                    p.elements()[*hi],
                    root.i(),
                    root.j()
                );
            }
            (p.to_dot(), p.to_json(), text)
        }
        Side::Cycle => {
            let p = build_cycle_poset(common.n).map_err(Failure::input)?;
            let mut text = format!(
                "circular-permutation poset for n = {}: {} elements, {} covers\n",
                common.n,
                p.elements().len(),
                p.covers().len()
            );
            for (lo, hi, label) in p.covers() {
                let label = match label {
                    Some((k, l)) => format!("({k} {l})"),
                    None => "none".into(),
                };
                let _ = writeln!(
                    text,
                    "{} -> {}  label {label}",
                    p.elements()[*lo].cycle_notation(),
                    p.elements()[*hi].cycle_notation()
                );
            }
            (p.to_dot(), p.to_json(), text)
        }
    };
    if let Some(path) = dot_path {
        export_dot(&dot, path).map_err(Failure::input)?;
    }
    match common.format {
        Format::Dot => emit(common, &dot),
        Format::Json => emit_json(common, &json_value),
        Format::Text => emit(common, &text),
    }
}

fn verify(common: &Common, seed: u64, samples: usize) -> CliResult<()> {
    validate(common, false)?;
    let threads = std::env::var("SHIVAR_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .unwrap_or(1)
        .clamp(1, CHECK_NAMES.len());
    let reports = run_battery(common.n, seed, samples, threads);
    let failures = reports.iter().filter(|r| !r.passed).count();
    match common.format {
        Format::Json => {
            let value = Value::Array(
                reports
                    .iter()
                    .map(|r| json!({"name": r.name, "passed": r.passed, "details": r.details}))
                    .collect(),
            );
            emit_json(common, &value)?;
        }
        _ => {
            let mut out = String::new();
            for r in &reports {
                let verdict = if r.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(out, "{verdict} {}: {}", r.name, r.details);
            }
            let _ = writeln!(
                out,
                "{} of {} checks passed",
                reports.len() - failures,
                reports.len()
            );
            emit(common, &out)?;
        }
    }
    if failures > 0 {
        return Err(Failure::Invariant(format!(
            "{failures} of {} checks failed",
            reports.len()
        )));
    }
    Ok(())
}

/// Run the battery, optionally across threads; the report order and content
/// are independent of the worker count because every check derives its own
/// random stream.
fn run_battery(n: usize, seed: u64, samples: usize, threads: usize) -> Vec<CheckReport> {
    if threads <= 1 {
        return run_all(n, seed, samples);
    }
    let total = CHECK_NAMES.len();
    let mut slots: Vec<Option<CheckReport>> = vec![None; total];
    let next = std::sync::atomic::AtomicUsize::new(0);
    let results = std::sync::Mutex::new(Vec::new());
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let index = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                if index >= total {
                    break;
                }
                let report = run_single(index, n, seed, samples);
                results.lock().unwrap().push((index, report));
            });
        }
    });
    for (index, report) in results.into_inner().unwrap() {
        slots[index] = Some(report);
    }
    slots.into_iter().map(Option::unwrap).collect()
}
