mod complex;
mod eval;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use mu_lab::identities::{self, registry, suite_members, Identity, VerificationReport};
use mu_lab::{Error, QContext, C64};
use serde::Serialize;

use complex::{format_complex, parse_complex};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_EVAL: u8 = 3;

#[derive(Parser)]
#[command(name = "mu-lab", version, about = "Evaluate Appell-Lerch type sums and verify identities between them")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a function at one point
    Eval(EvalArgs),
    /// Check identities at random points
    Verify(VerifyArgs),
    /// List registered identities
    List(ListArgs),
}

#[derive(clap::Args)]
#[command(after_help = function_table())]
struct EvalArgs {
    /// function name, see the table below
    function: String,
    /// modular parameter as a+bi
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, conflicts_with_all = ["tau_re", "tau_im"])]
    tau: Option<C64>,
    #[arg(long, allow_hyphen_values = true, requires = "tau_im")]
    tau_re: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    tau_im: Option<f64>,
    /// repeat for multivariable functions
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    u: Vec<C64>,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    v: Option<C64>,
    /// repeat for f-n
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    x: Vec<C64>,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    z: Option<C64>,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    a: Option<C64>,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    alpha: Option<C64>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// suite name, or `all`
    #[arg(long, required_unless_present = "id", conflicts_with = "id")]
    suite: Option<String>,
    /// identity id or family id
    #[arg(long)]
    id: Option<String>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 20)]
    samples: usize,
    /// override every per-identity tolerance
    #[arg(long)]
    tol: Option<f64>,
    /// print the JSON report on stdout
    #[arg(long)]
    json: bool,
    /// also write the JSON report here
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(clap::Args)]
struct ListArgs {
    #[arg(long)]
    suite: Option<String>,
    #[arg(long)]
    json: bool,
}

fn function_table() -> String {
    let mut s = String::from("Functions:\n");
    for f in eval::FUNCTIONS {
        s.push_str(&format!("  {:<11} {:<28} {}\n", f.name, f.params, f.about));
    }
    s
}

#[derive(Serialize)]
struct ResultRow<'a> {
    id: &'a str,
    paper_tag: &'a str,
    max_rel_residual: f64,
    tol: f64,
    pass: bool,
    suite: &'a str,
    mean_rel_residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'a str>,
}

#[derive(Serialize)]
struct Report<'a> {
    suite: &'a str,
    seed: u64,
    samples: usize,
    results: Vec<ResultRow<'a>>,
    all_pass: bool,
    /// `null` when the per-identity tolerances were used
    tol_override: Option<f64>,
}

/// JSON has no infinity; a failed evaluation is reported as the largest double.
fn finite(x: f64) -> f64 {
    if x.is_finite() {
        x
    } else {
        f64::MAX
    }
}

fn rows(reports: &[VerificationReport]) -> Vec<ResultRow<'_>> {
    reports
        .iter()
        .map(|r| ResultRow {
            id: &r.id,
            paper_tag: &r.tag,
            max_rel_residual: finite(r.max_rel_residual),
            tol: r.tol,
            pass: r.pass,
            suite: &r.suite,
            mean_rel_residual: finite(r.mean_rel_residual),
            error: r.error.as_deref(),
            note: r.note.as_deref(),
        })
        .collect()
}

fn context(a: &EvalArgs) -> Result<QContext, ExitCode> {
    let tau = match (a.tau, a.tau_re, a.tau_im) {
        (Some(t), _, _) => t,
        (None, re, Some(im)) => C64::new(re.unwrap_or(0.0), im),
        _ => {
            eprintln!("error: give --tau a+bi or --tau-im (and optionally --tau-re)");
            return Err(ExitCode::from(EXIT_USAGE));
        }
    };
    QContext::new(tau).map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(EXIT_USAGE)
    })
}

fn cmd_eval(a: EvalArgs) -> ExitCode {
    let ctx = match context(&a) {
        Ok(c) => c,
        Err(code) => return code,
    };
    let args = eval::Args { u: a.u, v: a.v, x: a.x, z: a.z, a: a.a, alpha: a.alpha, k: a.k };
    match eval::evaluate(&a.function, &args, &ctx) {
        Ok(vals) => {
            if a.json {
                let out: Vec<[f64; 2]> = vals.iter().map(|z| [z.re, z.im]).collect();
                println!("{}", serde_json::json!({ "function": a.function, "value": out }));
            } else {
                for z in vals {
                    println!("{}", format_complex(z));
                }
            }
            ExitCode::SUCCESS
        }
        Err(eval::EvalError::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(eval::EvalError::Eval(e)) => {
            eprintln!("error: {} ({e})", kind(&e));
            ExitCode::from(EXIT_EVAL)
        }
    }
}

fn kind(e: &Error) -> &'static str {
    match e {
        Error::PoleProximity(_) => "PoleProximity",
        Error::NonConvergent(_) => "NonConvergent",
        Error::DivergentSeries(_) => "DivergentSeries",
        Error::PoleInDenominator(_) => "PoleInDenominator",
        Error::ZeroArgument(_) => "ZeroArgument",
        Error::KernelPole(_) => "KernelPole",
        Error::QuadratureFailure(_) => "QuadratureFailure",
        Error::SamplingExhausted(_) => "SamplingExhausted",
        Error::ParameterDegeneracy(_) => "ParameterDegeneracy",
        Error::Unknown(_) => "Unknown",
        Error::InvalidInput(_) => "InvalidInput",
    }
}

fn cmd_verify(a: VerifyArgs) -> ExitCode {
    let (label, members) = match (&a.suite, &a.id) {
        (Some(s), _) => match suite_members(s) {
            Ok(m) => (s.clone(), m),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_USAGE);
            }
        },
        (None, Some(id)) => {
            let m = identities::family(id);
            if m.is_empty() {
                eprintln!("error: unknown identity {id:?}");
                return ExitCode::from(EXIT_USAGE);
            }
            (m[0].suite.name().to_string(), m)
        }
        (None, None) => unreachable!("clap requires --suite or --id"),
    };
    let reports: Vec<VerificationReport> = {
        use rayon::prelude::*;
        members.par_iter().map(|i| identities::verify_identity(i, a.seed, a.samples, a.tol)).collect()
    };
    let all_pass = reports.iter().all(|r| r.pass);
    let report = Report {
        suite: &label,
        seed: a.seed,
        samples: a.samples,
        results: rows(&reports),
        all_pass,
        tol_override: a.tol,
    };
    let json = serde_json::to_string_pretty(&report).expect("report serializes");
    if let Some(path) = &a.report {
        if let Err(e) = std::fs::write(path, &json) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(EXIT_USAGE);
        }
    }
    if a.json {
        println!("{json}");
    } else {
        println!("suite {label}, seed {}, {} samples per identity", a.seed, a.samples);
        for r in &reports {
            let status = if r.pass { "PASS" } else { "FAIL" };
            let extra = r.error.as_deref().or(r.note.as_deref()).map(|s| format!("  ({s})")).unwrap_or_default();
            println!(
                "{status}  {:<18} max {:>9.2e}  tol {:.0e}  {:<34}{extra}",
                r.id, r.max_rel_residual, r.tol, r.tag
            );
        }
        let failed = reports.iter().filter(|r| !r.pass).count();
        println!("{} of {} passed", reports.len() - failed, reports.len());
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn tol_class(tol: f64) -> &'static str {
    if tol >= identities::TOL_QUADRATURE {
        "QUADRATURE"
    } else if tol >= identities::TOL_MODULAR {
        "MODULAR"
    } else {
        "SERIES"
    }
}

#[derive(Serialize)]
struct ListRow<'a> {
    id: &'a str,
    paper_tag: &'a str,
    suite: &'a str,
    tol: f64,
    tol_class: &'a str,
}

fn cmd_list(a: ListArgs) -> ExitCode {
    let items: Vec<&Identity> = match &a.suite {
        Some(s) => match suite_members(s) {
            Ok(m) => m,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_USAGE);
            }
        },
        None => registry().iter().collect(),
    };
    let rows: Vec<ListRow> = items
        .iter()
        .map(|i| ListRow { id: &i.id, paper_tag: &i.tag, suite: i.suite.name(), tol: i.tol, tol_class: tol_class(i.tol) })
        .collect();
    if a.json {
        println!("{}", serde_json::to_string_pretty(&rows).expect("list serializes"));
    } else {
        for r in &rows {
            println!("{:<20} {:<12} {:<10} {}", r.id, r.suite, r.tol_class, r.paper_tag);
        }
        println!("{} identities", rows.len());
    }
    ExitCode::SUCCESS
}

fn init_threads() {
    let Ok(v) = std::env::var("MU_LAB_MAX_THREADS") else { return };
    match v.trim().parse::<usize>() {
        Ok(n) if n > 0 => {
            // fails only if a pool already exists, which cannot happen this early
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
        _ => eprintln!("warning: ignoring MU_LAB_MAX_THREADS={v:?}"),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    init_threads();
    match cli.command {
        Command::Eval(a) => cmd_eval(a),
        Command::Verify(a) => cmd_verify(a),
        Command::List(a) => cmd_list(a),
    }
}
