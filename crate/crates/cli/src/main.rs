use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use qeuler::euler::{
    cached_q_euler, frobenius_numbers, minus_q_inverse, preload_q_euler, q_euler_numbers,
    q_euler_numbers_weighted, q_euler_polynomial,
};
use qeuler::exactq::QRatFn;
use qeuler::padic::{convergence_report, QChoice, DEFAULT_PRECISION};
use qeuler::verify::{verify_identity, IdentityId, IdentityReport, Verdict, VerifyRange};
use qeuler_cli::render::{ratfn_latex, ratfn_text, xpoly_latex, xpoly_text};
use qeuler_cli::{NumberRow, OutputRecord, PolynomialRow, RecordKind};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const CACHE_ENV: &str = "QEULER_CACHE_DIR";
const CACHE_FILE: &str = "q-euler-numbers.json";

/// Exact q-Euler numbers, identity checks and p-adic integral experiments.
#[derive(Parser)]
#[command(name = "qeuler", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a table of numbers or polynomials.
    Table {
        kind: TableKind,
        #[arg(long = "n-max", default_value_t = 10)]
        n_max: usize,
        /// Weight; required for, and only accepted with, `weighted`.
        #[arg(long)]
        alpha: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check identities in exact arithmetic.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long = "n-max", default_value_t = 12)]
        n_max: usize,
        #[arg(long)]
        json: bool,
    },
    /// Valuations of partial fermionic integrals of x^n against the exact moment.
    Padic {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
        /// q = 1 + offset·p.
        #[arg(long = "q-offset", default_value_t = 1, allow_hyphen_values = true)]
        q_offset: i64,
        /// Absolute precision in digits.
        #[arg(long = "K", default_value_t = DEFAULT_PRECISION)]
        precision: i64,
        /// Largest level N; levels run from 1.
        #[arg(long = "N-max", default_value_t = 6)]
        level_max: u32,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Qeuler,
    Frobenius,
    Weighted,
    QeulerPoly,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    All,
    Thm1,
    Thm2,
    Cor3,
    Thm4,
    Thm5,
    Thm6,
    Thm7,
    Thm8,
    Classical,
    Erratum,
}

impl Suite {
    fn identities(self) -> Vec<IdentityId> {
        use IdentityId::*;
        match self {
            Suite::All => IdentityId::ALL.to_vec(),
            Suite::Thm1 => vec![Thm1],
            Suite::Thm2 => vec![Thm2],
            Suite::Cor3 => vec![Cor3],
            Suite::Thm4 => vec![Thm4],
            Suite::Thm5 => vec![Thm5, Thm5AtZero],
            Suite::Thm6 => vec![Thm6],
            Suite::Thm7 => vec![Thm7],
            Suite::Thm8 => vec![Thm8, Thm8K0Remark, Thm8K0Full],
            Suite::Classical => vec![Classical],
            Suite::Erratum => vec![Thm8K0Remark, Thm7],
        }
    }
}

fn metadata(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| ((*k).to_owned(), v.clone()))
        .collect()
}

fn usage_error(kind: ErrorKind, message: &str) -> ExitCode {
    let _ = Cli::command().error(kind, message).print();
    ExitCode::from(EXIT_USAGE)
}

/// Cache file location and how many entries it validly supplied.
fn load_cache() -> Option<(PathBuf, usize)> {
    let path = PathBuf::from(std::env::var_os(CACHE_ENV)?).join(CACHE_FILE);
    let Ok(text) = fs::read_to_string(&path) else {
        return Some((path, 0));
    };
    let loaded = serde_json::from_str::<Vec<QRatFn>>(&text)
        .map_err(|e| e.to_string())
        .and_then(|entries| {
            let len = entries.len();
            preload_q_euler(entries)
                .map(|_| len)
                .map_err(|e| e.to_string())
        });
    match loaded {
        Ok(len) => Some((path, len)),
        Err(e) => {
            eprintln!("ignoring cache {}: {e}", path.display());
            Some((path, 0))
        }
    }
}

fn store_cache(path: &Path, valid_len: usize) {
    let Some(entries) = cached_q_euler() else {
        return;
    };
    if entries.len() <= valid_len {
        return;
    }
    let result = path
        .parent()
        .map_or(Ok(()), fs::create_dir_all)
        .and_then(|_| fs::write(path, serde_json::to_string(&entries).expect("serializable")));
    if let Err(e) = result {
        eprintln!("could not write cache {}: {e}", path.display());
    }
}

fn table(kind: TableKind, n_max: usize, alpha: Option<i64>, format: Format) -> ExitCode {
    let (label, values): (&str, Vec<QRatFn>) = match (kind, alpha) {
        (TableKind::Weighted, None) => {
            return usage_error(
                ErrorKind::MissingRequiredArgument,
                "--alpha is required for `weighted`",
            )
        }
        (TableKind::Weighted, Some(a)) => match q_euler_numbers_weighted(a, n_max) {
            Ok(v) => ("weighted", v),
            Err(e @ qeuler::EulerError::InvalidWeight(_)) => {
                return usage_error(ErrorKind::InvalidValue, &e.to_string())
            }
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_MISMATCH);
            }
        },
        (_, Some(_)) => {
            return usage_error(
                ErrorKind::ArgumentConflict,
                "--alpha is only accepted with `weighted`",
            )
        }
        (TableKind::Qeuler, None) => ("qeuler", q_euler_numbers(n_max).entries().to_vec()),
        (TableKind::Frobenius, None) => {
            let h = frobenius_numbers(&minus_q_inverse(), n_max).expect("-1/q is not 1");
            ("frobenius", h.entries().to_vec())
        }
        (TableKind::QeulerPoly, None) => return polynomial_table(n_max, format),
    };
    let mut meta = vec![("sequence", label.to_owned())];
    if let Some(a) = alpha {
        meta.push(("alpha", a.to_string()));
    }
    let meta = metadata(&meta);
    for (n, v) in values.iter().enumerate() {
        match format {
            Format::Text => println!("{n}\t{}", ratfn_text(v)),
            Format::Latex => println!("{} = {} \\\\", latex_name(label, n, alpha), ratfn_latex(v)),
            Format::Json => {
                let record =
                    OutputRecord::new(RecordKind::Number, &NumberRow::new(n, v), meta.clone());
                println!("{}", record.to_line());
            }
        }
    }
    ExitCode::SUCCESS
}

fn latex_name(label: &str, n: usize, alpha: Option<i64>) -> String {
    match (label, alpha) {
        ("frobenius", _) => format!("H_{{{n}}}(-q^{{-1}})"),
        ("weighted", Some(a)) => format!("\\tilde{{E}}^{{({a})}}_{{{n},q}}"),
        _ => format!("\\tilde{{E}}_{{{n},q}}"),
    }
}

fn polynomial_table(n_max: usize, format: Format) -> ExitCode {
    let meta = metadata(&[("sequence", "qeuler-poly".to_owned())]);
    for n in 0..=n_max {
        let p = q_euler_polynomial(n);
        match format {
            Format::Text => println!("{n}\t{}", xpoly_text(&p)),
            Format::Latex => println!("\\tilde{{E}}_{{{n},q}}(x) = {} \\\\", xpoly_latex(&p)),
            Format::Json => {
                let row = PolynomialRow { n, coefficients: p };
                println!(
                    "{}",
                    OutputRecord::new(RecordKind::Polynomial, &row, meta.clone()).to_line()
                );
            }
        }
    }
    ExitCode::SUCCESS
}

fn summary(report: &IdentityReport) -> String {
    let verdict = match report.uniform_verdict() {
        Some(Verdict::Fail) if report.all_as_expected() => "FAIL (expected)".to_owned(),
        Some(v) => v.to_string(),
        None if report.instances.is_empty() => "no instances".to_owned(),
        None => "MIXED".to_owned(),
    };
    format!("{}: {verdict}", report.identity)
}

fn print_report(report: &IdentityReport) {
    let pass = report.count(Verdict::Pass);
    let fail = report.count(Verdict::Fail);
    println!("{} ({pass} pass, {fail} fail)", summary(report));
    for ex in &report.excluded {
        let params: Vec<String> = ex.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        println!("  excluded {}: {}", params.join(", "), ex.reason);
    }
    for inst in report.unexpected() {
        println!("  unexpected {} at {}", inst.verdict, inst.param_string());
    }
    if let Some(inst) = report.instances.iter().find(|i| i.verdict == Verdict::Fail) {
        if let Some(w) = &inst.witness {
            println!(
                "  witness at {}: {} vs {}",
                inst.param_string(),
                w.left,
                w.right
            );
        }
    }
}

fn verify(suite: Suite, n_max: usize, json: bool) -> ExitCode {
    let range = VerifyRange::new(n_max);
    let reports: Vec<IdentityReport> = suite
        .identities()
        .into_iter()
        .map(|id| verify_identity(id, &range))
        .collect();
    let meta = metadata(&[
        ("n_max", n_max.to_string()),
        ("m_max", range.m_max.to_string()),
        ("alpha_max", range.alpha_max.to_string()),
    ]);
    for report in &reports {
        if json {
            println!(
                "{}",
                OutputRecord::new(RecordKind::Report, report, meta.clone()).to_line()
            );
        } else {
            print_report(report);
        }
    }
    if !json {
        let line: Vec<String> = reports.iter().map(summary).collect();
        println!("{}", line.join(", "));
    }
    if reports.iter().all(IdentityReport::all_as_expected) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_MISMATCH)
    }
}

fn padic(n: usize, p: u64, q_offset: i64, precision: i64, level_max: u32, json: bool) -> ExitCode {
    let qc = match QChoice::with_offset(p, q_offset, precision) {
        Ok(qc) => qc,
        Err(e) => return usage_error(ErrorKind::InvalidValue, &e.to_string()),
    };
    let levels: Vec<u32> = (1..=level_max).collect();
    let report = match convergence_report(n, &qc, &levels) {
        Ok(r) => r,
        Err(e) => return usage_error(ErrorKind::InvalidValue, &e.to_string()),
    };
    let holds = report.growth_holds();
    if json {
        let meta = metadata(&[
            ("n", n.to_string()),
            ("p", p.to_string()),
            ("q_offset", q_offset.to_string()),
            ("K", precision.to_string()),
            ("N_max", level_max.to_string()),
        ]);
        println!(
            "{}",
            OutputRecord::new(RecordKind::Convergence, &report, meta).to_line()
        );
    } else {
        println!("# n={n} p={p} q={} K={precision}", report.q);
        println!("N\tv_p(defect)");
        for row in &report.rows {
            println!("{}\t{}", row.level, row.defect);
        }
        let verdict = if report.is_exact() {
            "exact at every level".to_owned()
        } else if holds {
            format!("nondecreasing, gain {}", report.gain())
        } else {
            format!("growth invariant violated, gain {}", report.gain())
        };
        println!("{verdict}");
    }
    if holds {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_MISMATCH)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cache = load_cache();
    let code = match cli.command {
        Command::Table {
            kind,
            n_max,
            alpha,
            format,
        } => table(kind, n_max, alpha, format),
        Command::Verify { suite, n_max, json } => verify(suite, n_max, json),
        Command::Padic {
            n,
            p,
            q_offset,
            precision,
            level_max,
            json,
        } => padic(n, p, q_offset, precision, level_max, json),
    };
    if let Some((path, valid_len)) = cache {
        store_cache(&path, valid_len);
    }
    code
}
