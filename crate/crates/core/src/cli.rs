//! Command-line front end. Exit codes: 0 success, 1 verification failure,
//! 2 usage or validation error.

use std::io::Write;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::arith::Rational;
use crate::error::Error;
use crate::generators::{differential_description, generator_equation, numeric_check, DifferentialDescription, GeneratorEquation};
use crate::invariants::{
    covers, curve_report, genus, hecke_scalars, lyapunov_spectrum, spectrum_unit, trace_degrees,
    trace_degrees_oracle, admissible_triangle_group, verify_cover, CoverCertificate, TraceDegrees,
};
use crate::params::CurveParams;
use crate::render::{
    key_values_csv, key_values_md, lyapunov_table, report_md, tables_csv, tables_md, to_json,
    OutputFormat, Table,
};
use crate::square_tiled::surface_report;
use crate::verify::{thread_pool, verify, Fault, Level};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "vwbm", version, about = "Exact invariants of the Teichmüller curves T(n,m)")]
pub struct Cli {
    /// Output format: json, csv, or md.
    #[arg(long, global = true, default_value = "json")]
    pub format: OutputFormat,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full report for T(n,m).
    Info { n: i64, m: i64 },
    /// Lyapunov tables for 2 ≤ n ≤ NMAX, 2 ≤ m ≤ MMAX.
    Table { nmax: i64, mmax: i64 },
    /// Cross-module verification sweep over n, m ≤ NMAX.
    Verify {
        nmax: i64,
        /// `full` or `<suite>-only` (rowspan, genus, spectrum, trace, covers, lifts, generators).
        #[arg(long, default_value = "full")]
        level: Level,
        #[arg(long, hide = true)]
        inject_fault: Option<Fault>,
    },
    /// Lyapunov spectrum.
    Spectrum { n: i64, m: i64 },
    /// Curves T(n',m') covered by T(n,m).
    Covers {
        n: i64,
        m: i64,
        /// Include row-span containment certificates.
        #[arg(long)]
        certify: bool,
    },
    /// Generator curve and one-form.
    Generator {
        n: i64,
        m: i64,
        /// Relative tolerance for the product-form cross-check.
        #[arg(long, default_value = "1/1000000000")]
        tolerance: Rational,
    },
    /// Trace-field degrees and Hecke scalars.
    Tracefield { n: i64, m: i64 },
    /// Square-tiled model and its lemma checks.
    Surface { n: i64, m: i64 },
}

#[derive(Serialize)]
struct SpectrumOut {
    params: CurveParams,
    genus: u64,
    unit: Rational,
    spectrum: Vec<Rational>,
}

#[derive(Serialize)]
struct CoversOut {
    params: CurveParams,
    covers: Vec<CurveParams>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificates: Option<Vec<CoverCertificate>>,
}

#[derive(Serialize)]
struct NumericOut {
    points: usize,
    max_deviation: String,
    tolerance: Rational,
    holds: bool,
}

#[derive(Serialize)]
struct GeneratorOut {
    equation: String,
    factored: String,
    #[serde(flatten)]
    data: GeneratorEquation,
    differential: DifferentialDescription,
    numeric: NumericOut,
}

#[derive(Serialize)]
struct HeckeOut {
    pairs: Vec<(i64, i64)>,
    root_sums: Vec<Vec<(i64, u64)>>,
    coordinates: Vec<Vec<Rational>>,
    field_degree: u64,
}

#[derive(Serialize)]
struct TraceOut {
    params: CurveParams,
    closed_form: TraceDegrees,
    oracle: TraceDegrees,
    admissible_triangle_group: bool,
    hecke: HeckeOut,
}

struct Outcome {
    stdout: String,
    code: i32,
}

fn ok(stdout: String) -> Result<Outcome, Error> {
    Ok(Outcome {
        stdout,
        code: EXIT_OK,
    })
}

fn render<T: Serialize>(format: OutputFormat, value: &T) -> String {
    match format {
        OutputFormat::Json => to_json(value),
        OutputFormat::Csv => key_values_csv(value),
        OutputFormat::Md => key_values_md(value),
    }
}

fn execute(cli: Cli, err: &mut dyn Write) -> Result<Outcome, Error> {
    let f = cli.format;
    match cli.command {
        Command::Info { n, m } => {
            let p = CurveParams::from_signed(n, m)?;
            let report = curve_report(&p);
            ok(match f {
                OutputFormat::Md => report_md(&report),
                _ => render(f, &report),
            })
        }
        Command::Table { nmax, mmax } => {
            let grid = CurveParams::grid(nmax.max(0) as u64, mmax.max(0) as u64);
            if grid.is_empty() {
                return Err(Error::Usage(format!(
                    "no valid (n, m) with n ≤ {nmax}, m ≤ {mmax}"
                )));
            }
            let tables: Vec<Table> = thread_pool().install(|| {
                use rayon::prelude::*;
                grid.par_iter().map(lyapunov_table).collect()
            });
            ok(match f {
                OutputFormat::Json => to_json(&tables),
                OutputFormat::Csv => tables_csv(&tables),
                OutputFormat::Md => tables_md(&tables),
            })
        }
        Command::Verify {
            nmax,
            level,
            inject_fault,
        } => {
            if nmax < 3 {
                return Err(Error::Usage(format!("verify needs NMAX ≥ 3 (got {nmax})")));
            }
            let report = verify(nmax as u64, level, inject_fault);
            for s in &report.suites {
                for failure in &s.failures {
                    let _ = writeln!(err, "FAIL [{}] {failure}", s.suite);
                }
            }
            let stdout = match f {
                OutputFormat::Json => to_json(&report),
                OutputFormat::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    w.write_record(["suite", "checked", "passed", "first_failure"]).expect("csv");
                    for s in &report.suites {
                        w.write_record([
                            s.suite.to_string(),
                            s.checked.to_string(),
                            s.passed.to_string(),
                            s.failures.first().cloned().unwrap_or_default(),
                        ])
                        .expect("csv");
                    }
                    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
                }
                OutputFormat::Md => {
                    let mut out = String::from("| suite | pairs | result |\n|---|---|---|\n");
                    for s in &report.suites {
                        let verdict = if s.passed { "PASS" } else { "FAIL" };
                        out.push_str(&format!("| {} | {} | {verdict} |\n", s.suite, s.checked));
                    }
                    out
                }
            };
            Ok(Outcome {
                stdout,
                code: if report.passed { EXIT_OK } else { EXIT_VERIFY_FAILED },
            })
        }
        Command::Spectrum { n, m } => {
            let p = CurveParams::from_signed(n, m)?;
            ok(render(
                f,
                &SpectrumOut {
                    params: p,
                    genus: genus(&p),
                    unit: spectrum_unit(&p),
                    spectrum: lyapunov_spectrum(&p),
                },
            ))
        }
        Command::Covers { n, m, certify } => {
            let p = CurveParams::from_signed(n, m)?;
            let mut list = covers(&p);
            list.sort();
            let certificates = if certify {
                Some(
                    list.iter()
                        .map(|s| verify_cover(&p, s))
                        .collect::<Result<Vec<_>, _>>()?,
                )
            } else {
                None
            };
            let failed = certificates
                .as_ref()
                .is_some_and(|c| c.iter().any(|c| !c.holds));
            Ok(Outcome {
                stdout: render(
                    f,
                    &CoversOut {
                        params: p,
                        covers: list,
                        certificates,
                    },
                ),
                code: if failed { EXIT_VERIFY_FAILED } else { EXIT_OK },
            })
        }
        Command::Generator { n, m, tolerance } => {
            let p = CurveParams::from_signed(n, m)?;
            let eq = generator_equation(&p);
            let check = numeric_check(&eq, &tolerance)?;
            let out = GeneratorOut {
                equation: eq.to_string(),
                factored: eq.factored_text(),
                differential: differential_description(&eq),
                numeric: NumericOut {
                    points: check.points,
                    max_deviation: format!("{:.3e}", check.max_deviation),
                    tolerance,
                    holds: check.holds,
                },
                data: eq,
            };
            Ok(Outcome {
                stdout: render(f, &out),
                code: if check.holds { EXIT_OK } else { EXIT_VERIFY_FAILED },
            })
        }
        Command::Tracefield { n, m } => {
            let p = CurveParams::from_signed(n, m)?;
            let h = hecke_scalars(&p);
            let out = TraceOut {
                params: p,
                closed_form: trace_degrees(&p),
                oracle: trace_degrees_oracle(&p),
                admissible_triangle_group: admissible_triangle_group(&p),
                hecke: HeckeOut {
                    pairs: crate::invariants::trace::HECKE_PAIRS.to_vec(),
                    root_sums: h.sums.iter().map(|s| s.terms().to_vec()).collect(),
                    coordinates: h.scalars.iter().map(|s| s.coords().to_vec()).collect(),
                    field_degree: h.field_degree,
                },
            };
            let agree = out.closed_form == out.oracle && h.field_degree == out.closed_form.deg_e;
            Ok(Outcome {
                stdout: render(f, &out),
                code: if agree { EXIT_OK } else { EXIT_VERIFY_FAILED },
            })
        }
        Command::Surface { n, m } => {
            let p = CurveParams::from_signed(n, m)?;
            let report = surface_report(&p);
            Ok(Outcome {
                stdout: render(f, &report),
                code: if report.all_hold() { EXIT_OK } else { EXIT_VERIFY_FAILED },
            })
        }
    }
}

/// Parses `args` (including the program name), writes data to `out` and
/// diagnostics to `err`, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli, err) {
        Ok(o) => {
            let _ = out.write_all(o.stdout.as_bytes());
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("vwbm").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn info_2_7_json() {
        let (code, out, _) = call(&["info", "2", "7", "--format", "json"]);
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["schema"], "vwbm-report/1");
        assert_eq!(v["genus"], 3);
        assert_eq!(v["spectrum"], serde_json::json!(["1/5", "3/5", "1"]));
    }

    #[test]
    fn invalid_params_exit_2() {
        let (code, out, err) = call(&["info", "1", "9"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(out.is_empty());
        assert!(err.contains("n, m must exceed 1 and nm ≥ 6"), "{err}");
        assert_eq!(call(&["spectrum", "2", "2"]).0, EXIT_USAGE);
        assert_eq!(call(&["info", "two", "7"]).0, EXIT_USAGE);
    }

    #[test]
    fn info_3_3_is_arithmetic() {
        let (code, out, _) = call(&["info", "3", "3"]);
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["arithmetic"], true);
    }

    #[test]
    fn table_2_2_is_one_table() {
        let (code, out, _) = call(&["table", "2", "2"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(out.is_empty());
        let (code, out, _) = call(&["table", "2", "3"]);
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 1);
    }

    #[test]
    fn table_csv_round_trip() {
        let (code, out, _) = call(&["table", "4", "8", "--format", "csv"]);
        assert_eq!(code, EXIT_OK);
        let rows = crate::render::parse_tables_csv(&out).unwrap();
        let expected: Vec<_> = CurveParams::grid(4, 8)
            .iter()
            .flat_map(|p| lyapunov_table(p).rows)
            .collect();
        assert_eq!(rows, expected);
    }

    #[test]
    fn output_is_deterministic() {
        for args in [&["table", "5", "6", "--format", "md"][..], &["info", "6", "10"]] {
            assert_eq!(call(args), call(args));
        }
    }

    #[test]
    fn verify_green_and_fault() {
        let (code, _, err) = call(&["verify", "8"]);
        assert_eq!(code, EXIT_OK, "{err}");
        let (code, _, err) = call(&["verify", "6", "--level", "lifts-only", "--inject-fault", "sigma4-shift"]);
        assert_eq!(code, EXIT_VERIFY_FAILED);
        assert!(err.contains("commutation") && err.contains("at square"), "{err}");
        assert_eq!(call(&["verify", "2"]).0, EXIT_USAGE);
    }

    #[test]
    fn verify_trace_only() {
        let (code, out, _) = call(&["verify", "20", "--level", "trace-only"]);
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let suites = v["suites"].as_array().unwrap();
        assert_eq!(suites.len(), 1);
        assert_eq!(suites[0]["suite"], "trace");
    }

    #[test]
    fn subcommands_succeed() {
        for args in [
            &["spectrum", "4", "5"][..],
            &["covers", "2", "24", "--certify"],
            &["generator", "5", "7"],
            &["tracefield", "6", "10"],
            &["surface", "4", "6"],
        ] {
            for f in ["json", "csv", "md"] {
                let mut a = args.to_vec();
                a.extend(["--format", f]);
                let (code, out, err) = call(&a);
                assert_eq!(code, EXIT_OK, "{a:?}: {err}");
                assert!(!out.is_empty());
            }
        }
    }

    #[test]
    fn generator_tolerance_must_be_positive() {
        assert_eq!(call(&["generator", "2", "7", "--tolerance", "0"]).0, EXIT_USAGE);
        let (code, out, _) = call(&["generator", "2", "7"]);
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert!(v["numeric"]["max_deviation"].as_str().unwrap().contains('e'));
    }
}
