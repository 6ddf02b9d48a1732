//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a requested check fails, 2 on usage
//! or input errors.

mod document;
mod output;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::Scalar;
use crate::companion::{build_companion, char_poly_oracle};
use crate::decouple::{
    char_poly, coefficients_closed, coefficients_recursive, trim_trailing_zeros, CoefficientVector,
};
use crate::error::Error;
use crate::sequence::{
    bootstrap_initials, generate_coupled, generate_decoupled, verify_recurrence, ScalarSequence,
};
use crate::tiling::{coefficient_triangle, enumerate_tilings, tiling_counts, tiling_system};

pub use document::{ParsedDocument, ScalarText, SystemDocument};
pub use output::{Format, Table};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest board length accepted by `tiling --enumerate`.
pub const MAX_ENUMERATE_N: usize = 20;

#[derive(Debug, Parser)]
#[command(
    name = "recsys",
    version,
    about = "Decouple two coupled linear recurrences into one scalar recurrence, exactly"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct SystemSource {
    /// System document (JSON); `-` or omitted reads stdin
    #[arg(conflicts_with = "tiling")]
    input: Option<PathBuf>,

    /// Use the built-in tiling system with maximal piece size K instead
    #[arg(long, value_name = "K")]
    tiling: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    A,
    B,
    T,
    All,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the scalar recurrence coefficients and characteristic polynomial
    Decouple {
        #[command(flatten)]
        source: SystemSource,
        /// Also compute the closed form and fail on any disagreement
        #[arg(long)]
        check: bool,
        /// Also print the vector with trailing zero coefficients removed
        #[arg(long)]
        trim: bool,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Cross-check the decoupled recurrence against independent routes
    Verify {
        #[command(flatten)]
        source: SystemSource,
        /// Last sequence index to check
        #[arg(long, short = 'n', default_value_t = 100)]
        horizon: usize,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Print terms 0..=N of the component sequences
    Gen {
        #[command(flatten)]
        source: SystemSource,
        /// Last index to print
        #[arg(short = 'n', long)]
        n: usize,
        /// Which sequence to print
        #[arg(long, value_enum, default_value = "all")]
        which: Which,
        /// Generate with the decoupled recurrence seeded from the first 2s terms
        #[arg(long)]
        decoupled: bool,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Tiling counts a, b, t for board lengths 0..=N
    Tiling {
        /// Maximal piece size
        #[arg(short = 'k', long)]
        k: usize,
        /// Longest board length
        #[arg(short = 'n', long)]
        n: usize,
        /// Add brute-force enumeration counts and fail on any mismatch
        #[arg(long)]
        enumerate: bool,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Coefficient triangle rows 1..=MAX_K of the tiling systems
    Triangle {
        #[arg(long, default_value_t = 7)]
        max_k: usize,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Print a system document
    System {
        /// Maximal piece size of the tiling system to emit
        #[arg(long, value_name = "K")]
        tiling: usize,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

struct Outcome {
    text: String,
    ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, ok: true }
    }
}

/// Runs the CLI with explicit streams and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, stdin) {
        Ok(outcome) => {
            let _ = out.write_all(outcome.text.as_bytes());
            if outcome.ok {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn execute(command: Command, stdin: &mut dyn Read) -> Result<Outcome, Failure> {
    match command {
        Command::Decouple {
            source,
            check,
            trim,
            format,
        } => cmd_decouple(&load(&source, stdin)?, check, trim, format),
        Command::Verify {
            source,
            horizon,
            format,
        } => cmd_verify(&load(&source, stdin)?, horizon, format),
        Command::Gen {
            source,
            n,
            which,
            decoupled,
            format,
        } => cmd_gen(&load(&source, stdin)?, n, which, decoupled, format),
        Command::Tiling {
            k,
            n,
            enumerate,
            format,
        } => cmd_tiling(k, n, enumerate, format),
        Command::Triangle { max_k, format } => cmd_triangle(max_k, format),
        Command::System { tiling } => {
            let sys = tiling_system(tiling)?;
            let mut text = SystemDocument::from_system(&sys).to_json();
            text.push('\n');
            Ok(Outcome::ok(text))
        }
    }
}

fn load(source: &SystemSource, stdin: &mut dyn Read) -> Result<ParsedDocument, Failure> {
    if let Some(k) = source.tiling {
        return Ok(ParsedDocument {
            system: tiling_system(k)?,
            claimed: None,
        });
    }
    let text = match &source.input {
        Some(path) if path.as_os_str() != "-" => std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?,
        _ => {
            let mut buf = String::new();
            stdin
                .read_to_string(&mut buf)
                .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    Ok(SystemDocument::from_json(&text)?.parse()?)
}

fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn tuple(v: &[Scalar]) -> String {
    format!("({})", strings(v).join(", "))
}

fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}

fn render_table(table: &Table, format: Format, numeric: &[&str]) -> Result<String, Failure> {
    Ok(match format {
        Format::Plain => table.plain(),
        Format::Csv => table.csv(),
        Format::Json => render_json(&table.json(numeric)),
        Format::Bfile => table.bfile().ok_or_else(|| {
            Failure::Usage("bfile output needs exactly one sequence".into())
        })?,
    })
}

fn cmd_decouple(
    doc: &ParsedDocument,
    check: bool,
    trim: bool,
    format: Format,
) -> Result<Outcome, Failure> {
    let sys = &doc.system;
    let c = coefficients_recursive(sys.matrices())?;
    let closed = if check {
        Some(coefficients_closed(sys.matrices())?)
    } else {
        None
    };
    let agree = closed.as_ref().is_none_or(|cl| cl == &c);
    let trimmed = trim.then(|| trim_trailing_zeros(&c));
    let poly = char_poly(&c);

    let text = match format {
        Format::Json => {
            let mut v = json!({
                "order": sys.order(),
                "recurrenceOrder": c.len(),
                "coefficients": strings(c.coeffs()),
                "recurrence": c.recurrence_string(),
                "characteristicPolynomial": {
                    "coefficients": strings(poly.coeffs()),
                    "text": poly.to_string(),
                },
            });
            if let Some(cl) = &closed {
                v["closedForm"] = json!(strings(cl.coeffs()));
                v["closedFormAgrees"] = json!(agree);
            }
            if let Some(t) = &trimmed {
                v["trimmed"] = json!(strings(t.coeffs()));
            }
            render_json(&v)
        }
        Format::Csv | Format::Bfile => {
            let mut headers = vec!["index", "coefficient"];
            if closed.is_some() {
                headers.push("closed_form");
            }
            if trimmed.is_some() {
                headers.push("trimmed");
            }
            let mut table = Table::new(headers);
            for (i, ci) in c.coeffs().iter().enumerate() {
                let mut row = vec![(i + 1).to_string(), ci.to_string()];
                if let Some(cl) = &closed {
                    row.push(cl.coeffs()[i].to_string());
                }
                if let Some(t) = &trimmed {
                    row.push(t.coeffs().get(i).map(ToString::to_string).unwrap_or_default());
                }
                table.push(row);
            }
            if format == Format::Bfile {
                let mut t2 = Table::new(["index", "coefficient"]);
                t2.rows = table.rows.iter().map(|r| r[..2].to_vec()).collect();
                t2.bfile().expect("two columns")
            } else {
                table.csv()
            }
        }
        Format::Plain => {
            let mut s = format!(
                "order: {} (scalar recurrence order {})\n",
                sys.order(),
                c.len()
            );
            s += &format!("coefficients: {}\n", tuple(c.coeffs()));
            s += &format!("recurrence: {}\n", c.recurrence_string());
            s += &format!("characteristic polynomial: {poly}\n");
            if let Some(cl) = &closed {
                s += &format!(
                    "closed form: {} ({})\n",
                    tuple(cl.coeffs()),
                    if agree { "agrees" } else { "MISMATCH" }
                );
            }
            if let Some(t) = &trimmed {
                s += &format!("trimmed: {}\n", tuple(t.coeffs()));
            }
            s
        }
    };
    Ok(Outcome { text, ok: agree })
}

/// Result of one cross-check run by `verify`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Runs every cross-check on a parsed document up to sequence index
/// `horizon`.
pub fn verify_document(doc: &ParsedDocument, horizon: usize) -> Result<Vec<CheckResult>, Error> {
    let sys = &doc.system;
    let s = sys.order();
    if horizon < 2 * s {
        return Err(Error::HorizonTooShort {
            min: 2 * s,
            requested: horizon,
        });
    }
    let mut checks = Vec::new();

    let rec = coefficients_recursive(sys.matrices())?;
    let closed = coefficients_closed(sys.matrices())?;
    checks.push(CheckResult {
        name: "recursion-vs-closed-form",
        passed: rec == closed,
        detail: if rec == closed {
            format!("{} coefficients agree", rec.len())
        } else {
            format!("recursive {} vs closed {}", tuple(rec.coeffs()), tuple(closed.coeffs()))
        },
    });

    let ours = char_poly(&rec);
    let oracle = char_poly_oracle(&build_companion(sys));
    checks.push(CheckResult {
        name: "coefficients-vs-companion",
        passed: ours == oracle,
        detail: if ours == oracle {
            format!("both give {ours}")
        } else {
            format!("coefficients give {ours}, companion matrix gives {oracle}")
        },
    });

    let c: CoefficientVector = match &doc.claimed {
        Some(claimed) => {
            checks.push(CheckResult {
                name: "claimed-coefficients",
                passed: claimed == &rec,
                detail: format!("claimed {} computed {}", tuple(claimed.coeffs()), tuple(rec.coeffs())),
            });
            claimed.clone()
        }
        None => rec,
    };

    let pair = generate_coupled(sys, horizon)?;
    let boot = bootstrap_initials(sys);
    let components = [("a", &pair.a, &boot.a), ("b", &pair.b, &boot.b)];
    let t = pair.sum();
    for (label, terms, seed) in components
        .into_iter()
        .chain([("t", &t, &boot.t)])
    {
        let report = verify_recurrence(&ScalarSequence::new(terms.clone()), &c)?;
        let regenerated = generate_decoupled(&c, seed, horizon)?;
        let mismatch = regenerated
            .terms
            .iter()
            .zip(terms.iter())
            .position(|(x, y)| x != y);
        let passed = report.passed() && mismatch.is_none();
        let detail = match (report.first_violation, mismatch) {
            (None, None) => format!(
                "recurrence holds for n in [{}, {}]",
                report.checked_from, report.checked_to
            ),
            (Some(n), _) => format!("recurrence first fails at n = {n}"),
            (None, Some(n)) => format!("decoupled regeneration first differs at n = {n}"),
        };
        checks.push(CheckResult {
            name: match label {
                "a" => "sequence-a",
                "b" => "sequence-b",
                _ => "sequence-t",
            },
            passed,
            detail,
        });
    }
    Ok(checks)
}

fn cmd_verify(doc: &ParsedDocument, horizon: usize, format: Format) -> Result<Outcome, Failure> {
    let checks = verify_document(doc, horizon)?;
    let ok = checks.iter().all(|c| c.passed);
    let mut table = Table::new(["check", "status", "detail"]);
    for c in &checks {
        table.push(vec![
            c.name.to_string(),
            if c.passed { "PASS" } else { "FAIL" }.to_string(),
            c.detail.clone(),
        ]);
    }
    let text = match format {
        Format::Json => render_json(&json!({
            "passed": ok,
            "horizon": horizon,
            "checks": checks.iter().map(|c| json!({
                "check": c.name, "passed": c.passed, "detail": c.detail,
            })).collect::<Vec<_>>(),
        })),
        Format::Csv => table.csv(),
        Format::Plain | Format::Bfile => {
            let mut s = String::new();
            for c in &checks {
                s += &format!(
                    "{} {:<26} {}\n",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                );
            }
            s += if ok { "all checks passed\n" } else { "some checks FAILED\n" };
            s
        }
    };
    Ok(Outcome { text, ok })
}

fn cmd_gen(
    doc: &ParsedDocument,
    n: usize,
    which: Which,
    decoupled: bool,
    format: Format,
) -> Result<Outcome, Failure> {
    let sys = &doc.system;
    let (a, b, t) = if decoupled {
        let c = coefficients_recursive(sys.matrices())?;
        let boot = bootstrap_initials(sys);
        let horizon = n.max(c.len() - 1);
        let run = |seed: &[Scalar]| generate_decoupled(&c, seed, horizon).map(|z| z.terms);
        (run(&boot.a)?, run(&boot.b)?, run(&boot.t)?)
    } else {
        let horizon = n.max(sys.order() - 1);
        let pair = generate_coupled(sys, horizon)?;
        let t = pair.sum();
        (pair.a, pair.b, t)
    };
    let columns: Vec<(&str, &[Scalar])> = match which {
        Which::A => vec![("a", &a)],
        Which::B => vec![("b", &b)],
        Which::T => vec![("t", &t)],
        Which::All => vec![("a", &a), ("b", &b), ("t", &t)],
    };
    let mut table = Table::new(std::iter::once("n").chain(columns.iter().map(|c| c.0)));
    for m in 0..=n {
        let mut row = vec![m.to_string()];
        row.extend(columns.iter().map(|(_, v)| v[m].to_string()));
        table.push(row);
    }
    Ok(Outcome::ok(render_table(&table, format, &["n"])?))
}

fn cmd_tiling(k: usize, n: usize, enumerate: bool, format: Format) -> Result<Outcome, Failure> {
    let counts = tiling_counts(k, n)?;
    if enumerate && n > MAX_ENUMERATE_N {
        return Err(Failure::Usage(format!(
            "--enumerate supports n up to {MAX_ENUMERATE_N}"
        )));
    }
    let mut headers = vec!["n", "a", "b", "t"];
    if enumerate {
        headers.extend(["enum_a", "enum_b", "enum_t", "match"]);
    }
    let mut table = Table::new(headers);
    let mut ok = true;
    for m in 0..=n {
        let mut row = vec![
            m.to_string(),
            counts.a[m].to_string(),
            counts.b[m].to_string(),
            counts.t[m].to_string(),
        ];
        if enumerate {
            let all = enumerate_tilings(k, m)?;
            let black = all.iter().filter(|t| t.is_all_black()).count();
            let white = all.len() - black;
            let agree = counts.a[m] == black.into()
                && counts.b[m] == white.into()
                && counts.t[m] == all.len().into();
            ok &= agree;
            row.extend([
                black.to_string(),
                white.to_string(),
                all.len().to_string(),
                if agree { "yes" } else { "NO" }.to_string(),
            ]);
        }
        table.push(row);
    }
    let numeric = ["n", "enum_a", "enum_b", "enum_t"];
    Ok(Outcome {
        text: render_table(&table, format, &numeric)?,
        ok,
    })
}

fn cmd_triangle(max_k: usize, format: Format) -> Result<Outcome, Failure> {
    if max_k == 0 {
        return Err(Error::PieceSize(0).into());
    }
    let rows = coefficient_triangle(max_k);
    let text = match format {
        Format::Json => render_json(&Value::Array(
            rows.iter()
                .enumerate()
                .map(|(i, r)| json!({ "k": i + 1, "coefficients": strings(r.coeffs()) }))
                .collect(),
        )),
        Format::Csv => {
            let mut table = Table::new(["k", "index", "coefficient"]);
            for (i, r) in rows.iter().enumerate() {
                for (j, c) in r.coeffs().iter().enumerate() {
                    table.push(vec![(i + 1).to_string(), (j + 1).to_string(), c.to_string()]);
                }
            }
            table.csv()
        }
        Format::Plain | Format::Bfile => {
            let cells: Vec<Vec<String>> = rows.iter().map(|r| strings(r.coeffs())).collect();
            let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
            let longest = 2 * max_k;
            let mut s = String::new();
            for (i, row) in cells.iter().enumerate() {
                let indent = (longest - row.len()) / 2 * (width + 1);
                s += &format!("{:>2} | {}", i + 1, " ".repeat(indent));
                s += &row
                    .iter()
                    .map(|c| format!("{c:>width$}"))
                    .collect::<Vec<_>>()
                    .join(" ");
                s.push('\n');
            }
            s
        }
    };
    Ok(Outcome::ok(text))
}
