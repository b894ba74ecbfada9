//! Batch verification CLI.
//!
//! Every subcommand runs a set of exact checks and exits 0 iff all of them
//! pass. Reports are deterministic: fixed term ordering (lexicographic on PBW
//! exponent tuples, then leg order) and fixed key order, so identical
//! invocations produce byte-identical output. Failures emit a JSON error
//! object on stderr.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use osp12::bi;
use osp12::casimir::{self, SubsetIndex};
use osp12::error::Error;
use osp12::expr;
use osp12::parse::parse_expression;
use osp12::pbw;
use osp12::repnum;
use osp12::rmatrix;

#[derive(Parser)]
#[command(
    name = "osp12",
    version,
    about = "exact osp(1|2) / Bannai-Ito verification tool"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for parallel checks (default: available parallelism)
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Include wall-clock timings in JSON reports (breaks byte-stability)
    #[arg(long, global = true)]
    timings: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check the defining relations of the algebra
    Relations,
    /// Verify the R-matrix property suite at arity n
    RProperties {
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// Print the intermediate Casimir element C_A in normal form
    Casimir {
        #[arg(long)]
        n: usize,
        /// Comma-separated subset, e.g. 1,3
        #[arg(long)]
        subset: String,
        /// Also build the closed-form embedding and require equality
        #[arg(long)]
        explicit: bool,
    },
    /// Verify the Bannai-Ito relations for all subset pairs of [n]
    VerifyBi {
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// Check that distinct construction paths for C_A agree
    Paths {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        subset: String,
    },
    /// Evaluate an expression in the matrix representation
    Eval {
        /// Representation fixture file (default: built-in dimension 3)
        #[arg(long)]
        rep: Option<PathBuf>,
        /// Expression to evaluate (may start with a minus sign)
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
    },
}

fn parse_subset(n: usize, text: &str) -> Result<SubsetIndex, Error> {
    let elems: Result<Vec<usize>, _> = text
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse::<usize>())
        .collect();
    let elems = elems.map_err(|e| Error::InvalidSubset(format!("{text:?}: {e}")))?;
    SubsetIndex::new(n, elems)
}

fn emit<T: serde::Serialize>(format: Format, value: &T, text: String) {
    match format {
        Format::Text => println!("{text}"),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(value).expect("reports serialize")
        ),
    }
}

fn run(cli: &Cli) -> Result<bool, Error> {
    match &cli.command {
        Command::Relations => {
            let report = pbw::check_defining_relations();
            let mut text = String::new();
            for c in &report.checks {
                text.push_str(&format!(
                    "{} {} (residual terms: {})\n",
                    if c.is_zero { "ok  " } else { "FAIL" },
                    c.name,
                    c.residual_terms
                ));
            }
            text.push_str(&format!(
                "relations: {}/{} zero residuals",
                report.checks.iter().filter(|c| c.is_zero).count(),
                report.checks.len()
            ));
            emit(cli.format, &report, text);
            Ok(report.all_passed())
        }
        Command::RProperties { n } => {
            let report = rmatrix::verify_r_properties(*n)?;
            let mut text = String::new();
            for c in &report.checks {
                text.push_str(&format!(
                    "{} {}\n",
                    if c.passed { "ok  " } else { "FAIL" },
                    c.name
                ));
            }
            text.push_str(&format!(
                "r-properties at n={}: {}/{} passed",
                report.n,
                report.checks.iter().filter(|c| c.passed).count(),
                report.checks.len()
            ));
            emit(cli.format, &report, text);
            Ok(report.all_passed())
        }
        Command::Casimir {
            n,
            subset,
            explicit,
        } => {
            let a = parse_subset(*n, subset)?;
            let braided = casimir::intermediate_casimir(&a)?;
            if *explicit {
                if a.is_empty() {
                    return Err(Error::InvalidSubset(
                        "--explicit needs a nonempty subset".into(),
                    ));
                }
                let closed = casimir::explicit_casimir(&a)?;
                let equal = braided == closed;
                let text = format!(
                    "C_{a} (braided) = {braided}\nC_{a} (explicit) = {closed}\nconstructions equal: {equal}"
                );
                #[derive(serde::Serialize)]
                struct Out {
                    subset: Vec<usize>,
                    braided: String,
                    explicit: String,
                    equal: bool,
                }
                let out = Out {
                    subset: a.elems().to_vec(),
                    braided: braided.to_string(),
                    explicit: closed.to_string(),
                    equal,
                };
                emit(cli.format, &out, text);
                Ok(equal)
            } else {
                let text = format!("C_{a} = {braided}");
                #[derive(serde::Serialize)]
                struct Out {
                    subset: Vec<usize>,
                    element: String,
                    terms: usize,
                }
                let out = Out {
                    subset: a.elems().to_vec(),
                    element: braided.to_string(),
                    terms: braided.num_terms(),
                };
                emit(cli.format, &out, text);
                Ok(true)
            }
        }
        Command::VerifyBi { n } => {
            let report = bi::verify_bi_timed(*n, cli.timings)?;
            let mut text = String::new();
            for r in &report.relations {
                text.push_str(&format!(
                    "{} {{C_{:?}, C_{:?}}} (residual terms: {})\n",
                    if r.status == "ok" { "ok  " } else { "FAIL" },
                    r.a,
                    r.b,
                    r.residual_terms
                ));
            }
            text.push_str(&format!(
                "bi relations at n={}: {}/{} pairs zero",
                report.n,
                report.relations.iter().filter(|r| r.status == "ok").count(),
                report.relations.len()
            ));
            emit(cli.format, &report, text);
            Ok(report.all_passed())
        }
        Command::Paths { n, subset } => {
            let a = parse_subset(*n, subset)?;
            let paths = casimir::canonical_paths(&a)?;
            let described: Vec<String> = paths
                .iter()
                .map(|p| format!("K={} word={:?}", p.start, p.word))
                .collect();
            let report = casimir::path_consistency(&a, &paths)?;
            let mut text = String::new();
            for d in &described {
                text.push_str(&format!("path {d}\n"));
            }
            text.push_str(&format!(
                "paths to C_{}: {} routes, all equal: {}",
                a, report.paths, report.all_equal
            ));
            emit(cli.format, &report, text);
            Ok(report.all_equal)
        }
        Command::Eval { rep, expr: text } => {
            let rep = match rep {
                Some(path) => repnum::load_rep(path)?,
                None => repnum::fundamental_rep(),
            };
            let parsed = parse_expression(text)?;
            let element = expr::eval_tensor(&parsed)?;
            let matrix = repnum::evaluate(&element, &rep)?;
            let norm = matrix.max_norm();
            let text_out = format!(
                "arity {} -> {}x{} matrix, max |entry| = {}\n{}",
                element.arity(),
                matrix.rows(),
                matrix.cols(),
                osp12::scalar::format_scalar(&norm),
                matrix
            );
            #[derive(serde::Serialize)]
            struct Out {
                arity: usize,
                rows: usize,
                max_norm: String,
                matrix: Vec<Vec<String>>,
            }
            let out = Out {
                arity: element.arity(),
                rows: matrix.rows(),
                max_norm: osp12::scalar::format_scalar(&norm),
                matrix: (0..matrix.rows())
                    .map(|i| {
                        (0..matrix.cols())
                            .map(|j| osp12::scalar::format_scalar(matrix.at(i, j)))
                            .collect()
                    })
                    .collect(),
            };
            emit(cli.format, &out, text_out);
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("{}", serde_json::json!({ "error": "verification failed" }));
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!(
                "{}",
                serde_json::json!({ "error": e.to_string(), "kind": error_kind(&e) })
            );
            ExitCode::from(2)
        }
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::ArityMismatch { .. } => "arity",
        Error::LegOutOfRange { .. } | Error::LegCollision { .. } => "leg",
        Error::InvalidArity { .. } => "arity",
        Error::InvalidSubset(_) => "subset",
        Error::InvalidWordLetter { .. } | Error::PathMismatch { .. } => "path",
        Error::Parse { .. } => "parse",
        Error::DimensionMismatch(_) | Error::BadRepresentation(_) => "representation",
        Error::BudgetExceeded { .. } => "budget",
        Error::Io(_) => "io",
        Error::Json(_) => "json",
    }
}
