//! Command-line front end: `expand`, `decompose`, `trace`, `verify`.

mod expr;
mod word;

pub use expr::{parse, EvalError, Expr, ParseError};
pub use word::{build_word, parse_word, Factor, CLASS_NAMES};

use crate::fock::{trace_product, SurfaceModel};
use crate::pipeline::run_checks;
use crate::qmforms::decompose;
use crate::ring::{fmt_rational, mpoly_series_to_json, series_to_json, Rational};
use clap::{Args, Parser, Subcommand};
use serde_json::json;
use std::io::Write;
use std::path::Path;

pub const DEFAULT_ORDER: usize = 30;
pub const ORDER_ENV: &str = "QZETA_DEFAULT_ORDER";

#[derive(Parser, Debug)]
#[command(name = "qzeta", version, about = "Exact q-series, quasi-modular decompositions and Fock-space traces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct OrderArg {
    /// Truncation order N (coefficients of q^0..q^N).
    #[arg(long, env = ORDER_ENV, default_value_t = DEFAULT_ORDER)]
    order: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand an expression as a q-series.
    Expand {
        expr: String,
        #[command(flatten)]
        order: OrderArg,
        #[arg(long)]
        json: bool,
    },
    /// Write an expression in the quasi-modular basis.
    Decompose {
        /// An expression, or a path to a file holding one.
        expr: String,
        #[arg(long, default_value_t = 6, value_parser = even_weight)]
        weight: u32,
        #[command(flatten)]
        order: OrderArg,
        #[arg(long)]
        json: bool,
    },
    /// Reduced trace of an operator word on the symbolic surface.
    Trace {
        word: String,
        #[command(flatten)]
        order: OrderArg,
        /// `symbolic`, or an integer substituted for chi.
        #[arg(long, default_value = "symbolic", value_parser = chi_value)]
        chi: ChiMode,
        /// Treat K as numerically trivial.
        #[arg(long = "K-trivial")]
        k_trivial: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run named verifications (`all` runs the full registry).
    Verify {
        #[arg(long = "check", required = true)]
        checks: Vec<String>,
        /// Overrides each check's default order.
        #[arg(long)]
        order: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Debug)]
enum ChiMode {
    Symbolic,
    Value(i64),
}

fn chi_value(s: &str) -> Result<ChiMode, String> {
    match s {
        "symbolic" | "sym" => Ok(ChiMode::Symbolic),
        _ => s.parse().map(ChiMode::Value).map_err(|_| format!("expected `symbolic` or an integer, got {s:?}")),
    }
}

fn even_weight(s: &str) -> Result<u32, String> {
    match s.parse::<u32>() {
        Ok(w) if w % 2 == 0 => Ok(w),
        _ => Err(format!("weight must be an even non-negative integer, got {s:?}")),
    }
}

enum Failure {
    Usage(String),
    Check(String),
}

fn read_expr(arg: &str) -> Result<String, Failure> {
    let p = Path::new(arg);
    if p.is_file() {
        std::fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{arg}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

fn parse_expr(text: &str) -> Result<Expr, Failure> {
    parse(text).map_err(|e| Failure::Usage(format!("parse error at {e}")))
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<bool, Failure> {
    let io = |e: std::io::Error| Failure::Check(e.to_string());
    match cmd {
        Command::Expand { expr, order, json } => {
            let e = parse_expr(&expr)?;
            let s = e.eval(order.order).map_err(|e| Failure::Usage(e.to_string()))?;
            if json {
                writeln!(out, "{}", series_to_json(&s)).map_err(io)?;
            } else {
                for (k, c) in s.coeffs().iter().enumerate() {
                    writeln!(out, "{k:>4}  {}", fmt_rational(c)).map_err(io)?;
                }
            }
            Ok(true)
        }
        Command::Decompose { expr, weight, order, json } => {
            let e = parse_expr(read_expr(&expr)?.trim())?;
            let s = e.eval(order.order).map_err(|e| Failure::Usage(e.to_string()))?;
            let d = decompose(&s, weight, order.order).map_err(|e| Failure::Check(e.to_string()))?;
            if json {
                writeln!(out, "{}", d.to_json()).map_err(io)?;
            } else {
                for (m, c) in d.basis.iter().zip(&d.coeffs) {
                    writeln!(out, "{:<16} {}", m.to_string(), fmt_rational(c)).map_err(io)?;
                }
                writeln!(out, "verified to q^{}", d.verified_to).map_err(io)?;
            }
            Ok(true)
        }
        Command::Trace { word, order, chi, k_trivial, json } => {
            let factors = parse_word(&word).map_err(|e| Failure::Usage(format!("parse error at {e}")))?;
            let surface = SurfaceModel::standard(k_trivial);
            let ops = build_word(&surface, &factors);
            let mut s = trace_product(&surface, &ops, order.order);
            if let ChiMode::Value(v) = chi {
                s = s.map(|c| c.substitute(0, &Rational::from_integer(v.into())));
            }
            let table = surface.symbols();
            if json {
                writeln!(out, "{}", mpoly_series_to_json(&s, table)).map_err(io)?;
            } else {
                for (k, c) in s.coeffs().iter().enumerate() {
                    writeln!(out, "{k:>4}  {}", c.display(table)).map_err(io)?;
                }
            }
            Ok(true)
        }
        Command::Verify { checks, order, json } => {
            let names: Vec<&str> = checks.iter().map(String::as_str).collect();
            let results = run_checks(&names, order).map_err(|e| Failure::Usage(e.to_string()))?;
            let ok = results.iter().all(|r| r.passed);
            if json {
                let report = json!({
                    "passed": ok,
                    "checks": results.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
                });
                writeln!(out, "{report}").map_err(io)?;
            } else {
                for r in &results {
                    writeln!(out, "{r}").map_err(io)?;
                }
                let failed = results.iter().filter(|r| !r.passed).count();
                writeln!(out, "{} checks, {} failed", results.len(), failed).map_err(io)?;
            }
            Ok(ok)
        }
    }
}

/// Runs the CLI on `args` (including the program name), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{}", e.render()) } else { write!(err, "{}", e.render()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(Failure::Check(m)) => {
            let _ = writeln!(err, "error: {m}");
            1
        }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut argv = vec!["qzeta"];
        argv.extend_from_slice(args);
        let code = run_with(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn expand_z2() {
        let (code, out, _) = cli(&["expand", "Z(2)", "--order", "7"]);
        assert_eq!(code, 0);
        let coeffs: Vec<&str> = out.lines().map(|l| l.split_whitespace().nth(1).unwrap()).collect();
        assert_eq!(coeffs, ["0", "1", "3", "4", "7", "6", "12", "8"]);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(cli(&["expand", "Z(1)"]).0, 2);
        assert!(cli(&["expand", "Z(1)"]).2.contains("Okounkov index must be ≥ 2"));
        assert_eq!(cli(&["expand", "1/Z(2)", "--order", "3"]).0, 2);
        assert_eq!(cli(&["bogus"]).0, 2);
        assert_eq!(cli(&["decompose", "Z(2)", "--weight", "3"]).0, 2);
        assert_eq!(cli(&["decompose", "Z(3)", "--order", "30"]).0, 1);
        assert_eq!(cli(&["verify", "--check", "nope"]).0, 2);
        assert_eq!(cli(&["--help"]).0, 0);
    }

    #[test]
    fn decompose_json() {
        let (code, out, _) = cli(&["decompose", "Z(2)^2 - Z(4)", "--order", "20", "--json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["verified_to"], 20);
        assert_eq!(v["basis"].as_array().unwrap().len(), v["coeffs"].as_array().unwrap().len());
    }

    #[test]
    fn trace_with_integer_chi() {
        let (code, out, _) = cli(&["trace", "a[-1,-1](1X) * a[1,1](1X)", "--order", "4", "--chi", "24"]);
        assert_eq!(code, 0);
        assert!(!out.contains("chi"), "{out}");
        let (_, sym, _) = cli(&["trace", "a[-1](K) * a[1](L1)", "--order", "3", "--K-trivial"]);
        assert!(sym.lines().all(|l| l.trim_end().ends_with(" 0")), "{sym}");
    }

    #[test]
    fn verify_exit_code_tracks_status() {
        let (code, out, _) = cli(&["verify", "--check", "dz3", "--order", "10", "--json"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"status\":\"pass\""));
        assert_eq!(cli(&["verify", "--check", "eisenstein_conversion", "--order", "6"]).0, 1);
    }
}
