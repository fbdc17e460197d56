use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::json;

use tonality::catalog::{self, IntervalEntry};
use tonality::export::{self, exact_json, ExportOptions, Format, TuningTable};
use tonality::expr::{self, ExprErrorKind};
use tonality::par::Execution;
use tonality::report::{self, FamilyReport, Status, VerifyOptions};
use tonality::systems::{Family, DEFAULT_K_BOUND, DEFAULT_ORACLE_BOUND, MAX_ORACLE_BOUND};
use tonality::{FactoredTone, Value};

#[derive(Parser)]
#[command(name = "tonality", version, about = "Exact complex-tonality arithmetic, scales and tuning export")]
struct Cli {
    /// Output format; each command picks its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,
    /// Decimal places for cents and other floats.
    #[arg(long, global = true, default_value_t = export::DEFAULT_PRECISION as u16,
          value_parser = clap::value_parser!(u16).range(0..=15))]
    precision: u16,
    /// Largest |k| for the phased Gauss-3 family.
    #[arg(long, global = true, default_value_t = DEFAULT_K_BOUND,
          value_parser = clap::value_parser!(u32).range(0..=64))]
    k_bound: u32,
    /// Exponent bound for the exhaustive search in `verify`; 0 skips it.
    #[arg(long, global = true, default_value_t = DEFAULT_ORACLE_BOUND,
          value_parser = clap::value_parser!(u32).range(0..=MAX_ORACLE_BOUND as i64))]
    oracle_bound: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Scl,
    Text,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Scl => Format::Scl,
            FormatArg::Text => Format::Text,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Factor a tone into a unity and Gaussian prime powers.
    Factor {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Also report whether the tone is N-limit.
        #[arg(long, value_name = "N")]
        n_limit: Option<u64>,
    },
    /// Evaluate an interval expression exactly.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Print a scale's note table.
    Scale {
        family: String,
        selector: String,
        /// Accepted for readability, as in `scale gauss3 I chromatic`.
        #[arg(value_parser = ["chromatic"], hide = true)]
        chromatic: Option<String>,
        #[arg(long, default_value_t = 0)]
        variant: usize,
        /// Annotate each note with its argument in degrees.
        #[arg(long)]
        phase_note: bool,
    },
    /// Re-derive the system counts and published rows.
    Verify {
        /// just3, gauss3, gauss2, shadow3, shadow2 or all.
        #[arg(default_value = "all")]
        family: String,
        /// Run the search on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Look up named intervals.
    #[command(group(ArgGroup::new("query").required(true).args(["by_tone", "all"])))]
    Catalog {
        #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
        by_tone: Option<String>,
        #[arg(long)]
        all: bool,
    },
    /// Write tuning tables to files, or check an exported file.
    #[command(group(ArgGroup::new("what").required(true).args(["family", "all", "check"])))]
    Export {
        #[arg(requires = "selector")]
        family: Option<String>,
        selector: Option<String>,
        #[arg(long, default_value_t = 0)]
        variant: usize,
        /// Output file; stdout when absent.
        #[arg(short, long, conflicts_with_all = ["all", "check"])]
        output: Option<PathBuf>,
        /// Export every table into --dir.
        #[arg(long, requires = "dir", conflicts_with = "check")]
        all: bool,
        #[arg(long)]
        dir: Option<PathBuf>,
        /// Re-import a JSON or CSV export and compare it with a fresh build.
        #[arg(long, value_name = "FILE")]
        check: Option<PathBuf>,
        #[arg(long)]
        phase_note: bool,
    },
}

/// Failure exit paths. Verification failures still print their report.
enum Failure {
    Usage(String),
    Verify(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verify(_) => 1,
            Failure::Usage(_) => 2,
        }
    }
}

type Outcome = Result<String, Failure>;

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(format!("error: {e}"))
}

fn formats(given: Option<FormatArg>, default: FormatArg, allowed: &[FormatArg], cmd: &str) -> Result<FormatArg, Failure> {
    let f = given.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        let names: Vec<_> = allowed
            .iter()
            .map(|a| a.to_possible_value().expect("named").get_name().to_string())
            .collect();
        Err(usage(format!("{cmd} supports --format {}", names.join(", "))))
    }
}

fn fixed(x: f64, p: usize) -> String {
    format!("{x:.p$}")
}

fn eval_value(text: &str) -> Result<Value, Failure> {
    expr::eval_str(text).map_err(|e| usage(format!("{text:?}: {e}")))
}

fn argument(v: &Value) -> f64 {
    match v {
        Value::Tone(t) => t.argument_degrees(),
        Value::Radical(_) => 0.0,
    }
}

/// Product form that the expression parser reads back.
fn product_text(f: &FactoredTone) -> String {
    let unity = f.unity.to_string();
    let mut s = match unity.as_str() {
        "1" if !f.exponents.is_empty() => String::new(),
        "-1" if !f.exponents.is_empty() => "-".to_string(),
        u => u.to_string(),
    };
    for (p, e) in &f.exponents {
        s.push_str(&format!("({p})"));
        if *e != 1 {
            s.push_str(&format!("^{e}"));
        }
    }
    s
}

fn cmd_factor(cli: &Cli, text: &str, n_limit: Option<u64>) -> Outcome {
    let format = formats(cli.format, FormatArg::Text, &[FormatArg::Text, FormatArg::Json], "factor")?;
    let value = match expr::eval_str(text) {
        Err(e) if e.kind == ExprErrorKind::ZeroValue => {
            return Err(Failure::Usage("error: zero has no factorization".into()))
        }
        r => r.map_err(|e| usage(format!("{text:?}: {e}")))?,
    };
    let t = match &value {
        Value::Tone(t) => t.clone(),
        Value::Radical(r) => {
            return Err(usage(format!(
                "{r} is irrational; only Gaussian rationals have a prime factorization"
            )))
        }
    };
    let f = t.to_factored();
    let limit = n_limit.map(|n| (n, t.is_n_limit(n)));
    Ok(match format {
        FormatArg::Json => {
            let powers: Vec<_> = f
                .exponents
                .iter()
                .map(|(p, e)| json!({"prime": p.to_string(), "exponent": e}))
                .collect();
            let mut doc = json!({
                "value": t.to_string(),
                "exact": exact_json(&value),
                "unity": f.unity.to_string(),
                "powers": powers,
            });
            if let Some((n, ok)) = limit {
                doc["n_limit"] = json!({"n": n, "holds": ok});
            }
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("plain data"))
        }
        _ => {
            let mut out = format!("{} = {}\n", t, product_text(&f));
            out.push_str(&format!("unity: {}\n", f.unity));
            for (p, e) in &f.exponents {
                out.push_str(&format!("  ({p})^{e}  norm {}\n", p.value().norm()));
            }
            if let Some((n, ok)) = limit {
                out.push_str(&format!("{n}-limit: {}\n", if ok { "yes" } else { "no" }));
            }
            out
        }
    })
}

fn cmd_eval(cli: &Cli, text: &str) -> Outcome {
    let format = formats(
        cli.format,
        FormatArg::Text,
        &[FormatArg::Text, FormatArg::Json, FormatArg::Csv],
        "eval",
    )?;
    let v = eval_value(text)?;
    let p = usize::from(cli.precision);
    let complex = matches!(&v, Value::Tone(t) if t.conj() != *t);
    Ok(match format {
        FormatArg::Json => {
            let doc = json!({
                "value": v.to_string(),
                "exact": exact_json(&v),
                "magnitude": v.magnitude(),
                "cents": v.cents(),
                "argument_degrees": argument(&v),
            });
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("plain data"))
        }
        FormatArg::Csv => format!(
            "value,magnitude,cents,argument_degrees\n\"{}\",{},{},{}\n",
            v,
            fixed(v.magnitude(), p),
            fixed(v.cents(), p),
            fixed(argument(&v), p)
        ),
        _ => {
            let mut out = format!(
                "value: {}\nmagnitude: {}\ncents: {}\n",
                v,
                fixed(v.magnitude(), p),
                fixed(v.cents(), p)
            );
            if complex {
                out.push_str(&format!("argument: {}°\n", fixed(argument(&v), p)));
            }
            out
        }
    })
}

fn cmd_scale(cli: &Cli, family: &str, selector: &str, variant: usize, phase_note: bool) -> Outcome {
    let table = export::resolve_scale(family, selector, variant, cli.k_bound).map_err(usage)?;
    let format: Format = cli.format.unwrap_or(FormatArg::Text).into();
    Ok(table.render(
        format,
        ExportOptions {
            precision: usize::from(cli.precision),
            phase_note,
        },
    ))
}

fn report_json(reports: &[FamilyReport]) -> String {
    let fams: Vec<_> = reports
        .iter()
        .map(|r| {
            let lines: Vec<_> = r
                .lines
                .iter()
                .map(|l| {
                    let status = match l.status {
                        Status::Pass => "pass",
                        Status::Fail => "fail",
                        Status::Note => "note",
                    };
                    json!({"status": status, "text": l.text.trim_start()})
                })
                .collect();
            json!({"family": r.family.key(), "passed": r.passed(), "lines": lines})
        })
        .collect();
    let doc = json!({
        "passed": reports.iter().all(FamilyReport::passed),
        "families": fams,
    });
    format!("{}\n", serde_json::to_string_pretty(&doc).expect("plain data"))
}

fn cmd_verify(cli: &Cli, family: &str, sequential: bool) -> Outcome {
    let format = formats(cli.format, FormatArg::Text, &[FormatArg::Text, FormatArg::Json], "verify")?;
    let families = if family.eq_ignore_ascii_case("all") {
        Family::ALL.to_vec()
    } else {
        vec![Family::from_key(family).map_err(|_| {
            let keys: Vec<_> = Family::ALL.iter().map(|f| f.key()).collect();
            usage(format!("unknown family {family:?}; valid families: {}, all", keys.join(", ")))
        })?]
    };
    let opts = VerifyOptions {
        k_bound: cli.k_bound,
        oracle_bound: (cli.oracle_bound > 0).then_some(cli.oracle_bound),
        exec: if sequential {
            Execution::Sequential
        } else {
            Execution::default()
        },
    };
    let mut reports = Vec::new();
    for f in families {
        reports.push(report::verify_family(f, opts).map_err(usage)?);
    }
    let passed = reports.iter().all(FamilyReport::passed);
    let out = match format {
        FormatArg::Json => report_json(&reports),
        _ => {
            let mut s: String = reports.iter().map(|r| r.to_string()).collect();
            s.push_str(if passed { "verification: OK\n" } else { "verification: FAILED\n" });
            s
        }
    };
    if passed {
        Ok(out)
    } else {
        Err(Failure::Verify(out))
    }
}

fn catalog_text(entries: &[IntervalEntry], p: usize) -> String {
    let mut out = String::new();
    for e in entries {
        out.push_str(&format!(
            "{:<30} {:<3} {:<18} {:>w$}\n",
            e.name,
            e.glyph.unwrap_or(""),
            e.value.to_string(),
            fixed(e.value.cents(), p),
            w = p + 6
        ));
        if let Some(a) = e.annotation {
            out.push_str(&format!("    note: {a}\n"));
        }
    }
    out
}

fn catalog_csv(entries: &[IntervalEntry], p: usize) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut write = |row: &[String]| w.write_record(row).map_err(usage);
    write(&["name", "glyph", "value", "magnitude", "cents", "annotation"].map(String::from))?;
    for e in entries {
        write(&[
            e.name.to_string(),
            e.glyph.unwrap_or("").to_string(),
            e.value.to_string(),
            fixed(e.value.magnitude(), p + 3),
            fixed(e.value.cents(), p),
            e.annotation.unwrap_or("").to_string(),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| usage(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("utf-8 input"))
}

fn cmd_catalog(cli: &Cli, by_tone: Option<&str>, all: bool) -> Outcome {
    let format = formats(
        cli.format,
        FormatArg::Text,
        &[FormatArg::Text, FormatArg::Json, FormatArg::Csv],
        "catalog",
    )?;
    let entries = match (by_tone, all) {
        (Some(text), _) => catalog::lookup_by_tone(&eval_value(text)?),
        _ => catalog::all_entries(),
    };
    let p = usize::from(cli.precision);
    Ok(match format {
        FormatArg::Json => {
            let rows: Vec<_> = entries
                .iter()
                .map(|e| {
                    json!({
                        "name": e.name,
                        "glyph": e.glyph,
                        "value": e.value.to_string(),
                        "exact": exact_json(&e.value),
                        "magnitude": e.value.magnitude(),
                        "cents": e.value.cents(),
                        "annotation": e.annotation,
                    })
                })
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&json!({"entries": rows})).expect("plain data"))
        }
        FormatArg::Csv => catalog_csv(&entries, p)?,
        _ if entries.is_empty() => "no entries\n".to_string(),
        _ => catalog_text(&entries, p),
    })
}

fn write_file(path: &Path, body: &str) -> Result<(), Failure> {
    fs::write(path, body).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn check_export(cli: &Cli, path: &Path) -> Outcome {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let parsed = match path.extension().and_then(|e| e.to_str()) {
        Some("json") => TuningTable::from_json(&text),
        Some("csv") => TuningTable::from_csv(&text),
        _ => return Err(usage("--check reads .json or .csv exports")),
    }
    .map_err(usage)?;
    let fresh = export::resolve_scale(&parsed.family, &parsed.selector, parsed.variant, cli.k_bound)
        .map_err(usage)?;
    let label = format!("{} {} variant {}", parsed.family, parsed.selector, parsed.variant);
    if parsed == fresh {
        return Ok(format!(
            "{}: {} notes match {label} exactly\n",
            path.display(),
            parsed.notes.len()
        ));
    }
    let mut out = format!("{}: differs from {label}\n", path.display());
    let n = parsed.notes.len().max(fresh.notes.len());
    for i in 0..n {
        let show = |t: &TuningTable| {
            t.notes
                .get(i)
                .map_or("(missing)".to_string(), |e| format!("{} {}", e.name, e.value))
        };
        let (a, b) = (show(&parsed), show(&fresh));
        if a != b {
            out.push_str(&format!("- {a}\n+ {b}\n"));
        }
    }
    Err(Failure::Verify(out))
}

#[allow(clippy::too_many_arguments)]
fn cmd_export(
    cli: &Cli,
    family: Option<&str>,
    selector: Option<&str>,
    variant: usize,
    output: Option<&Path>,
    all: bool,
    dir: Option<&Path>,
    check: Option<&Path>,
    phase_note: bool,
) -> Outcome {
    if let Some(path) = check {
        return check_export(cli, path);
    }
    let format: Format = cli.format.unwrap_or(FormatArg::Json).into();
    let opts = ExportOptions {
        precision: usize::from(cli.precision),
        phase_note,
    };
    if all {
        let dir = dir.expect("clap requires --dir");
        fs::create_dir_all(dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
        let tables = export::all_tables(cli.k_bound);
        for t in &tables {
            write_file(&dir.join(export::file_name(t, format)), &t.render(format, opts))?;
        }
        return Ok(format!("wrote {} tables to {}\n", tables.len(), dir.display()));
    }
    let (family, selector) = (family.expect("clap group"), selector.expect("clap requires"));
    let table = export::resolve_scale(family, selector, variant, cli.k_bound).map_err(usage)?;
    let body = table.render(format, opts);
    match output {
        Some(path) => {
            write_file(path, &body)?;
            Ok(format!("wrote {}\n", path.display()))
        }
        None => Ok(body),
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Factor { expr, n_limit } => cmd_factor(cli, expr, *n_limit),
        Command::Eval { expr } => cmd_eval(cli, expr),
        Command::Scale {
            family,
            selector,
            variant,
            phase_note,
            ..
        } => cmd_scale(cli, family, selector, *variant, *phase_note),
        Command::Verify { family, sequential } => cmd_verify(cli, family, *sequential),
        Command::Catalog { by_tone, all } => cmd_catalog(cli, by_tone.as_deref(), *all),
        Command::Export {
            family,
            selector,
            variant,
            output,
            all,
            dir,
            check,
            phase_note,
        } => cmd_export(
            cli,
            family.as_deref(),
            selector.as_deref(),
            *variant,
            output.as_deref(),
            *all,
            dir.as_deref(),
            check.as_deref(),
            *phase_note,
        ),
    }
}

fn main() -> ExitCode {
    // clap exits with 2 on usage errors and 0 for --help.
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            match &f {
                Failure::Verify(report) => print!("{report}"),
                Failure::Usage(msg) => eprintln!("{msg}"),
            }
            ExitCode::from(f.code())
        }
    }
}
