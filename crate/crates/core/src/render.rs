//! JSON, CSV, and markdown renderings.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::invariants::{CurveReport, SummandRow};
use crate::params::CurveParams;
use crate::rowspan::summands;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Md,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "md" => Ok(OutputFormat::Md),
            _ => Err(format!("unknown format {s:?}; expected json, csv, or md")),
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// One row of a Lyapunov table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub n: u64,
    pub m: u64,
    pub kappa: Rational,
    pub mu: Rational,
    pub nu: Rational,
    pub lyapunov: Rational,
    pub tiling: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table {
    pub params: CurveParams,
    pub rows: Vec<TableRow>,
}

/// The table for `T(n,m)`: ascending exponents, so the exponent 1 comes last.
pub fn lyapunov_table(params: &CurveParams) -> Table {
    let rows = summands(params)
        .iter()
        .rev()
        .map(|s| {
            let r = SummandRow::from(s);
            TableRow {
                n: params.n(),
                m: params.m(),
                kappa: r.kappa,
                mu: r.mu,
                nu: r.nu,
                lyapunov: r.lyapunov,
                tiling: r.tiling,
            }
        })
        .collect();
    Table {
        params: *params,
        rows,
    }
}

pub fn tables_csv(tables: &[Table]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in tables.iter().flat_map(|t| &t.rows) {
        w.serialize(row).expect("csv row");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

pub fn parse_tables_csv(text: &str) -> Result<Vec<TableRow>, csv::Error> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .collect()
}

fn bold_if(flag: bool, s: String) -> String {
    if flag {
        format!("**{s}**")
    } else {
        s
    }
}

pub fn tables_md(tables: &[Table]) -> String {
    let mut out = String::new();
    for (i, t) in tables.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let _ = writeln!(out, "### T({},{})\n", t.params.n(), t.params.m());
        out.push_str("| (κ, μ, ν) | λ |\n|---|---|\n");
        for r in &t.rows {
            let triple = format!("({}, {}, {})", r.kappa, r.mu, r.nu);
            let _ = writeln!(
                out,
                "| {} | {} |",
                bold_if(r.tiling, triple),
                bold_if(r.tiling, r.lyapunov.to_string())
            );
        }
    }
    out
}

/// Flat `key,value` pairs for CSV and markdown renderings of scalar data.
pub fn key_values(value: &serde_json::Value) -> Vec<(String, String)> {
    fn walk(prefix: &str, v: &serde_json::Value, out: &mut Vec<(String, String)>) {
        use serde_json::Value;
        match v {
            Value::Object(map) => {
                for (k, x) in map {
                    let key = if prefix.is_empty() {
                        k.clone()
                    } else {
                        format!("{prefix}.{k}")
                    };
                    walk(&key, x, out);
                }
            }
            Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
                let joined: Vec<String> = items.iter().map(scalar).collect();
                out.push((prefix.to_string(), joined.join(" ")));
            }
            Value::Array(items) => {
                for (i, x) in items.iter().enumerate() {
                    walk(&format!("{prefix}.{i}"), x, out);
                }
            }
            other => out.push((prefix.to_string(), scalar(other))),
        }
    }
    fn scalar(v: &serde_json::Value) -> String {
        match v {
            serde_json::Value::String(s) => s.clone(),
            serde_json::Value::Null => String::new(),
            other => other.to_string(),
        }
    }
    let mut out = Vec::new();
    walk("", value, &mut out);
    out
}

pub fn key_values_csv<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serializable");
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["key", "value"]).expect("csv header");
    for (k, x) in key_values(&v) {
        w.write_record([k, x]).expect("csv row");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

pub fn key_values_md<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serializable");
    let mut out = String::from("| key | value |\n|---|---|\n");
    for (k, x) in key_values(&v) {
        let _ = writeln!(out, "| {k} | {} |", x.replace('|', "\\|"));
    }
    out
}

/// A curve report: markdown shows the header fields and the summand table.
pub fn report_md(report: &CurveReport) -> String {
    let p = &report.params;
    let mut out = format!("## T({},{})\n\n", p.n(), p.m());
    let _ = writeln!(out, "- genus: {}", report.genus);
    let _ = writeln!(out, "- arithmetic: {}", report.arithmetic);
    let _ = writeln!(out, "- uniformizer: {}", report.uniformizer);
    let _ = writeln!(out, "- zeros: {}", report.zeros.count);
    let covers: Vec<String> = report.covers.iter().map(|c| c.to_string()).collect();
    let _ = writeln!(out, "- covers: {}", covers.join(", "));
    let _ = writeln!(
        out,
        "- trace degrees: deg F = {}, deg E = {}, Hecke = {}",
        report.trace.deg_f, report.trace.deg_e, report.trace.hecke_field_degree
    );
    let _ = writeln!(
        out,
        "- admissible triangle group: {}",
        report.trace.admissible_triangle_group
    );
    let _ = writeln!(out, "- algebraically primitive: {:?}", report.primitivity.verdict);
    let _ = writeln!(out, "- generator: {}", report.generator.equation);
    let _ = writeln!(out, "- one-form: {}", report.generator.differential.form);
    for n in &report.notes {
        let _ = writeln!(out, "- note: {n}");
    }
    out.push('\n');
    let table = tables_md(&[lyapunov_table(p)]);
    out.push_str(table.split_once('\n').map(|(_, rest)| rest.trim_start()).unwrap_or(""));
    out
}
